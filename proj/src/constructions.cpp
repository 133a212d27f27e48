#include "mincode/constructions.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "mincode/blocking.hpp"
#include "mincode/error.hpp"

namespace mincode {

namespace {

std::int64_t ipow(std::int64_t base, std::size_t e) {
    std::int64_t r = 1;
    for (std::size_t i = 0; i < e; ++i) r *= base;
    return r;
}

std::int64_t sign(std::size_t e) { return e % 2 == 0 ? 1 : -1; }

std::int64_t binomial(std::size_t n, std::size_t r) {
    if (r > n) return 0;
    std::int64_t out = 1;
    for (std::size_t i = 1; i <= r; ++i) out = out * static_cast<std::int64_t>(n - r + i) / static_cast<std::int64_t>(i);
    return out;
}

std::int64_t exact_div(std::int64_t num, std::int64_t den) {
    if (den == 0 || num % den != 0) {
        throw Error(Errc::bad_range, "closed form is not integral: " + std::to_string(num) + "/" + std::to_string(den));
    }
    return num / den;
}

void add_row(std::map<std::size_t, std::uint64_t>& rows, std::int64_t weight, std::int64_t count) {
    if (count == 0) return;
    if (weight <= 0 || count < 0) {
        throw Error(Errc::bad_range, "closed form produced weight " + std::to_string(weight) + " with count " +
                                         std::to_string(count));
    }
    rows[static_cast<std::size_t>(weight)] += static_cast<std::uint64_t>(count);
}

void check_monomial_range(std::size_t k, std::size_t h, std::size_t min_h) {
    if (h < min_h || h > k) {
        throw Error(Errc::bad_range, "h = " + std::to_string(h) + " outside " + std::to_string(min_h) +
                                         " <= h <= k = " + std::to_string(k));
    }
}

}  // namespace

VectorMultiset defining_set_where(const Field& F, std::size_t k, const std::function<bool(const GFVector&)>& keep) {
    std::vector<GFVector> kept;
    for (auto& x : all_vectors(F, k)) {
        if (!x.is_zero() && keep(x)) kept.push_back(std::move(x));
    }
    return VectorMultiset::from_vectors(F, k, std::move(kept));
}

HyperplaneUnion hyperplane_union(const Field& F, std::size_t k, std::span<const GFVector> S) {
    if (S.empty()) throw Error(Errc::empty_s, "S must be nonempty");
    for (const auto& a : S) {
        if (a.size() != k) throw Error(Errc::length_mismatch, "dual vector length differs from k");
        if (a.is_zero()) throw Error(Errc::zero_vector, "S must avoid the zero vector");
    }
    auto set = defining_set_where(F, k, [&](const GFVector& x) {
        return std::any_of(S.begin(), S.end(), [&](const GFVector& a) { return dot(F, a, x).value == 0; });
    });
    if (set.size() + 1 == space_size(F.q(), k, std::uint64_t{1} << 32)) {
        throw Error(Errc::covers_whole_space, "the hyperplanes cover GF(q)^k");
    }
    HyperplaneUnion out{std::move(set), span_dim(F, S), false};
    out.predicted_cutting = out.span_dim >= 3;
    return out;
}

HyperplaneUnion forms_product_set(const Field& F, std::size_t k, std::span<const LinearForm> forms) {
    std::vector<GFVector> S;
    for (const auto& f : forms) {
        if (f.b.value != 0) throw Error(Errc::bad_range, "product sets take linear forms only (b = 0)");
        S.push_back(f.a);
    }
    return hyperplane_union(F, k, S);
}

VectorMultiset monomial_zero_set(const Field& F, std::size_t k, std::size_t h) {
    check_monomial_range(k, h, 3);
    return defining_set_where(F, k, [h](const GFVector& x) {
        for (std::size_t i = 0; i < h; ++i) {
            if (x[i].value == 0) return true;
        }
        return false;
    });
}

VectorMultiset monomial_plus_sum_set(const Field& F, std::size_t k, std::size_t h) {
    check_monomial_range(k, h, 2);
    return defining_set_where(F, k, [&F, h](const GFVector& x) {
        Element sum{0};
        for (std::size_t i = 0; i < h; ++i) {
            if (x[i].value == 0) return true;
            sum = F.add(sum, x[i]);
        }
        return sum.value == 0;
    });
}

VectorMultiset weight_range_set(const Field& F, std::size_t k, WeightBound mode, std::size_t h) {
    if (mode == WeightBound::at_most && (h < 2 || h > k)) {
        throw Error(Errc::bad_range, "at_most needs 2 <= h <= k");
    }
    if (mode == WeightBound::at_least && (h < 1 || h + 1 > k)) {
        throw Error(Errc::bad_range, "at_least needs 1 <= h <= k - 1");
    }
    return defining_set_where(F, k, [mode, h](const GFVector& x) {
        const auto w = weight_support(x).weight;
        return mode == WeightBound::at_most ? w <= h : w >= h;
    });
}

VectorMultiset scaled_basis_set(const Field& F, std::size_t k) {
    if (k < 3) throw Error(Errc::bad_range, "scaled basis set needs k >= 3");
    const std::size_t m = k - 1;
    std::vector<GFVector> vs{GFVector(m)};
    for (std::size_t i = 0; i < m; ++i) {
        for (std::uint32_t a = 1; a < F.q(); ++a) {
            GFVector v(m);
            v[i] = Element{a};
            vs.push_back(std::move(v));
        }
    }
    return VectorMultiset::from_vectors(F, m, std::move(vs), ZeroPolicy::allow);
}

bool is_scale_closed(const VectorMultiset& D) {
    const auto& F = D.field();
    for (const auto& e : D.entries()) {
        for (std::uint32_t a = 2; a < F.q(); ++a) {
            if (D.multiplicity(scale(F, Element{a}, e.vector)) != e.multiplicity) return false;
        }
    }
    return true;
}

VectorMultiset scale_closure(const VectorMultiset& D) {
    const auto& F = D.field();
    std::vector<GFVector> out;
    for (const auto& e : D.entries()) {
        for (std::uint32_t a = 1; a < F.q(); ++a) out.push_back(scale(F, Element{a}, e.vector));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return VectorMultiset::from_vectors(F, D.k(), std::move(out), D.contains_zero() ? ZeroPolicy::allow : ZeroPolicy::reject);
}

Lift lift(const VectorMultiset& upper, const VectorMultiset& lower) {
    if (!(upper.field() == lower.field()) || upper.k() != lower.k()) {
        throw Error(Errc::ambient_mismatch, "lift parts must share GF(q)^k");
    }
    const auto& F = upper.field();
    const std::size_t k = upper.k();
    std::vector<GFVector> vs;
    vs.reserve(upper.size() + lower.size());
    auto append = [&](const VectorMultiset& part, std::uint32_t last) {
        for (const auto& x : part.expanded()) {
            GFVector y(k + 1);
            for (std::size_t i = 0; i < k; ++i) y[i] = x[i];
            y[k] = Element{last};
            vs.push_back(std::move(y));
        }
    };
    append(upper, 1);
    append(lower, 0);

    Lift out{.set = VectorMultiset::from_vectors(F, k + 1, std::move(vs))};
    out.upper_cutting = !upper.empty() && !upper.contains_zero() && is_cutting(upper);
    out.upper_scale_closed = is_scale_closed(upper);
    out.upper_affine_blocking = !upper.empty() && is_affine_blocking(upper);
    out.lower_cutting = !lower.empty() && !lower.contains_zero() && is_cutting(lower);
    if (out.lower_cutting && out.upper_cutting && out.upper_scale_closed) {
        out.guarantee = LiftGuarantee::cutting_pair;
    } else if (out.lower_cutting && out.upper_affine_blocking) {
        out.guarantee = LiftGuarantee::affine_blocking;
    }
    if (out.lower_cutting && !upper.empty()) out.predicted_minimal = out.upper_affine_blocking;
    return out;
}

std::uint64_t monomial_zero_size(std::uint64_t q, std::size_t k, std::size_t h) {
    const auto Q = static_cast<std::int64_t>(q);
    return static_cast<std::uint64_t>((ipow(Q, h) - ipow(Q - 1, h)) * ipow(Q, k - h) - 1);
}

std::uint64_t monomial_plus_sum_size(std::uint64_t q, std::size_t k, std::size_t h) {
    const auto Q = static_cast<std::int64_t>(q);
    // q^{k-h-1} may be 1/q when h = k; the bracket is then divisible by q.
    const std::int64_t bracket = ipow(Q, h + 1) - ipow(Q - 1, h + 1) + sign(h) * (Q - 1);
    return static_cast<std::uint64_t>(exact_div(bracket * ipow(Q, k - h), Q) - 1);
}

std::uint64_t weight_range_size(std::uint64_t q, std::size_t k, WeightBound mode, std::size_t h) {
    const auto Q = static_cast<std::int64_t>(q);
    std::int64_t total = 0;
    for (std::size_t i = 1; i <= k; ++i) {
        const bool in = mode == WeightBound::at_most ? i <= h : i >= h;
        if (in) total += binomial(k, i) * ipow(Q - 1, i);
    }
    return static_cast<std::uint64_t>(total);
}

WeightDistribution predicted_weight_distribution(TableFamily family, std::uint64_t q, std::size_t k, std::size_t h) {
    const auto Q = static_cast<std::int64_t>(q);
    std::map<std::size_t, std::uint64_t> rows;
    switch (family) {
        case TableFamily::monomial:
        case TableFamily::monomial_projective: {
            check_monomial_range(k, h, 3);
            // Weights carry a factor q^{k-h-1}; scale by q^{k-h} and divide once at the end.
            const bool projective = family == TableFamily::monomial_projective;
            const std::int64_t lead = projective ? 1 : Q - 1;
            const std::int64_t base = lead * (ipow(Q, h) - ipow(Q - 1, h)) * ipow(Q, k - h);
            if (k > h) add_row(rows, exact_div(base, Q), ipow(Q, k) - ipow(Q, h));
            for (std::size_t s = 1; s <= h; ++s) {
                const std::int64_t offset = sign(s) * ipow(Q, k - h) * ipow(Q - 1, h - s + (projective ? 0 : 1));
                add_row(rows, exact_div(base + offset, Q), ipow(Q - 1, s) * binomial(h, s));
            }
            break;
        }
        case TableFamily::monomial_plus_sum_h3: {
            if (h != 3) throw Error(Errc::unsupported_family, "the sum-augmented table is for h = 3");
            if (k < 3) throw Error(Errc::bad_range, "the sum-augmented table needs k >= 3");
            // Each weight is c1 q^{k-1} + c2 q^{k-2} + c3 q^{k-3} + c4 q^{k-4}; evaluate times q^4.
            auto weight = [&](std::int64_t c1, std::int64_t c2, std::int64_t c3, std::int64_t c4) {
                const std::int64_t scaled =
                    c1 * ipow(Q, k + 3) + c2 * ipow(Q, k + 2) + c3 * ipow(Q, k + 1) + c4 * ipow(Q, k);
                return exact_div(scaled, ipow(Q, 4));
            };
            add_row(rows, weight(3, -6, 3, 0), 4 * (Q - 1));
            if ((Q - 1) * (Q - 2) * (Q - 3) != 0) add_row(rows, weight(4, -10, 6, 0), (Q - 1) * (Q - 2) * (Q - 3));
            if (k > 3) add_row(rows, weight(4, -10, 9, -3), ipow(Q, k) - ipow(Q, 3));
            if ((Q - 1) * (Q - 2) != 0) add_row(rows, weight(4, -9, 5, 0), 6 * (Q - 1) * (Q - 2));
            add_row(rows, weight(4, -8, 4, 0), 3 * (Q - 1));
            break;
        }
    }
    return WeightDistribution(std::move(rows));
}

std::uint64_t count_N_aT(const GFVector& a, std::span<const std::size_t> T, std::uint64_t q, std::size_t k) {
    if (a.size() != k) throw Error(Errc::length_mismatch, "a must have length k");
    std::vector<bool> in_T(k, false);
    for (auto j : T) {
        if (j >= k) throw Error(Errc::bad_index, "index " + std::to_string(j) + " outside 0..k-1");
        if (in_T[j]) throw Error(Errc::bad_index, "repeated index " + std::to_string(j));
        in_T[j] = true;
    }
    bool support_inside = true;
    for (std::size_t i = 0; i < k; ++i) {
        if (a[i].value != 0 && !in_T[i]) support_inside = false;
    }
    const std::size_t t = T.size();
    const auto Q = static_cast<std::int64_t>(q);
    return static_cast<std::uint64_t>(support_inside ? ipow(Q, k - t) : ipow(Q, k - t - 1));
}

std::uint64_t count_toric(std::size_t h, Element b, std::uint64_t q) {
    if (h < 2) throw Error(Errc::bad_range, "count_toric needs h >= 2");
    if (b.value >= q) throw Error(Errc::bad_range, "b outside GF(q)");
    const auto Q = static_cast<std::int64_t>(q);
    const std::int64_t num = b.value == 0 ? ipow(Q - 1, h) + sign(h) * (Q - 1) : ipow(Q - 1, h) - sign(h);
    return static_cast<std::uint64_t>(exact_div(num, Q));
}

}  // namespace mincode
