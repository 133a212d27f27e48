#include "mincode/error.hpp"
#include "mincode/kernels.hpp"

namespace mincode::kernels {

VectorBlock::VectorBlock(std::span<const GFVector> rows, std::size_t width) : width_(width) {
    data_.reserve(rows.size() * width);
    for (const auto& r : rows) push(r.coords());
}

void VectorBlock::push(std::span<const Element> r) {
    if (r.size() != width_) throw Error(Errc::length_mismatch, "row width differs from block width");
    data_.insert(data_.end(), r.begin(), r.end());
    ++rows_;
}

}  // namespace mincode::kernels
