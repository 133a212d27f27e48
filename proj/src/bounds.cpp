#include "mincode/bounds.hpp"

#include <numeric>

#include "mincode/error.hpp"

namespace mincode {

std::uint64_t griesmer_lb(std::uint64_t q, std::size_t k, std::uint64_t d) {
    std::uint64_t sum = 0;
    std::uint64_t power = 1;
    for (std::size_t i = 0; i < k; ++i) {
        sum += (d + power - 1) / power;
        // Once q^i exceeds d every remaining term is 1.
        if (power > d) {
            sum += k - i - 1;
            break;
        }
        power *= q;
    }
    return sum;
}

MinimalCodeBounds minimal_code_bounds(std::uint64_t q, std::size_t k) {
    if (k < 2) throw Error(Errc::bad_range, "minimal code bounds need k >= 2");
    MinimalCodeBounds b;
    b.distance_lb = (q - 1) * (k - 1) + 1;
    b.length_lb = griesmer_lb(q, k, b.distance_lb);
    return b;
}

std::uint64_t jamison_lb(std::uint64_t q, std::size_t m) { return m * (q - 1) + 1; }

Rational Rational::make(std::uint64_t num, std::uint64_t den) {
    if (den == 0) throw Error(Errc::division_by_zero, "rational with zero denominator");
    const auto g = std::gcd(num, den);
    return g == 0 ? Rational{0, 1} : Rational{num / g, den / g};
}

std::strong_ordering Rational::operator<=>(const Rational& other) const {
    const auto lhs = static_cast<unsigned __int128>(num) * other.den;
    const auto rhs = static_cast<unsigned __int128>(other.num) * den;
    return lhs <=> rhs;
}

bool BoundAudit::all_ok() const {
    return griesmer.ok && distance_lb.ok && length_lb.ok && wmax_ub.ok && fold_lb.ok && dim_cap.ok;
}

namespace {

BoundCheck at_least(std::uint64_t measured, std::uint64_t bound, bool applicable) {
    return BoundCheck{bound, measured, applicable, !applicable || measured >= bound};
}

BoundCheck at_most(std::uint64_t measured, std::uint64_t bound, bool applicable) {
    return BoundCheck{bound, measured, applicable, !applicable || measured <= bound};
}

}  // namespace

BoundAudit audit(const LinearCode& C, const WeightDistribution& wd, bool minimal, std::optional<std::uint64_t> fold) {
    const std::uint64_t q = C.field().q();
    const std::uint64_t n = C.n();
    const std::size_t k = C.dim();
    const std::uint64_t d = wd.w_min();
    const std::uint64_t w_max = wd.w_max();
    const bool has_bounds = minimal && k >= 2;

    BoundAudit a;
    a.griesmer = at_least(n, k >= 1 && d >= 1 ? griesmer_lb(q, k, d) : 0, k >= 1 && d >= 1);
    const auto mb = k >= 2 ? minimal_code_bounds(q, k) : MinimalCodeBounds{};
    a.distance_lb = at_least(d, mb.distance_lb, has_bounds);
    a.length_lb = at_least(n, mb.length_lb, has_bounds);
    a.wmax_ub = at_most(w_max, n + 1 - k, has_bounds);
    a.fold_lb = at_least(fold.value_or(0), k - 1, has_bounds && fold.has_value());
    // dim <= n/q + 1 holds for an integer dim exactly when dim <= floor(n/q) + 1.
    a.dim_cap = at_most(k, n / q + 1, minimal);
    if (w_max > 0) a.ab_ratio = Rational::make(d, w_max);
    a.ab_threshold = Rational::make(q - 1, q);
    a.ab_condition = ab_condition(static_cast<std::uint32_t>(q), wd);
    a.distance_tight = k >= 2 && d == mb.distance_lb;
    return a;
}

}  // namespace mincode
