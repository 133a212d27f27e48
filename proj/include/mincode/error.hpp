#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace mincode {

enum class Errc {
    not_prime,
    reducible,
    degree_mismatch,
    division_by_zero,
    length_mismatch,
    zero_vector,
    empty_defining_set,
    dimension_mismatch,
    too_large,
    too_many_subspaces,
    not_projective,
    bad_range,
    bad_index,
    empty_s,
    covers_whole_space,
    ambient_mismatch,
    unsupported_family,
    parse_error,
    io_error,
};

std::string_view errc_name(Errc code) noexcept;

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

}  // namespace mincode
