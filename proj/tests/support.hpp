#pragma once

// Brute-force reference computations and random generators shared by the tests.
// The oracles only use field arithmetic from the library; everything else is
// recomputed by plain enumeration.

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "mincode/code.hpp"
#include "mincode/gf.hpp"
#include "mincode/linalg.hpp"

namespace oracle {

using mincode::Element;
using mincode::Field;
using mincode::GFVector;
using mincode::VectorMultiset;
using Word = std::vector<std::uint32_t>;

inline std::vector<Word> every_tuple(std::uint32_t q, std::size_t k) {
    std::vector<Word> out{Word(k, 0)};
    for (std::size_t i = 0; i < k; ++i) {
        std::vector<Word> next;
        for (const auto& w : out) {
            for (std::uint32_t a = 0; a < q; ++a) {
                auto v = w;
                v[i] = a;
                next.push_back(v);
            }
        }
        out = std::move(next);
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline std::uint32_t inner(const Field& F, const Word& a, const Word& x) {
    Element s{0};
    for (std::size_t i = 0; i < a.size(); ++i) s = F.add(s, F.mul(Element{a[i]}, Element{x[i]}));
    return s.value;
}

inline Word words(const GFVector& v) { return v.values(); }

inline GFVector vec(const Word& w) {
    std::vector<Element> c;
    for (auto x : w) c.push_back(Element{x});
    return GFVector(std::move(c));
}

inline std::vector<Word> columns(const VectorMultiset& D) {
    std::vector<Word> out;
    for (const auto& e : D.entries()) {
        for (std::size_t i = 0; i < e.multiplicity; ++i) out.push_back(e.vector.values());
    }
    return out;
}

/// Distinct codewords <m, g_1>, ..., <m, g_n> over every message m.
inline std::set<Word> codewords(const VectorMultiset& D) {
    const auto& F = D.field();
    const auto cols = columns(D);
    std::set<Word> out;
    for (const auto& m : every_tuple(F.q(), D.k())) {
        Word c;
        for (const auto& g : cols) c.push_back(inner(F, m, g));
        out.insert(c);
    }
    return out;
}

inline std::size_t weight(const Word& c) {
    return static_cast<std::size_t>(std::count_if(c.begin(), c.end(), [](auto x) { return x != 0; }));
}

inline std::map<std::size_t, std::uint64_t> weight_distribution(const VectorMultiset& D) {
    std::map<std::size_t, std::uint64_t> out;
    for (const auto& c : codewords(D)) {
        if (weight(c) > 0) ++out[weight(c)];
    }
    return out;
}

inline std::size_t dimension(const VectorMultiset& D) {
    const auto n = codewords(D).size();
    std::size_t d = 0;
    for (std::size_t s = 1; s < n; s *= D.field().q()) ++d;
    return d;
}

inline bool proportional(const Field& F, const Word& a, const Word& b) {
    for (std::uint32_t t = 1; t < F.q(); ++t) {
        bool same = true;
        for (std::size_t i = 0; i < a.size() && same; ++i) same = F.mul(Element{t}, Element{a[i]}).value == b[i];
        if (same) return true;
    }
    return false;
}

/// Every nonzero codeword is minimal: no other independent codeword has a support inside it.
inline bool minimal(const VectorMultiset& D) {
    const auto& F = D.field();
    std::vector<Word> cs;
    for (const auto& c : codewords(D)) {
        if (weight(c) > 0) cs.push_back(c);
    }
    for (const auto& outer : cs) {
        for (const auto& inner_c : cs) {
            if (proportional(F, outer, inner_c)) continue;
            bool inside = true;
            for (std::size_t i = 0; i < outer.size() && inside; ++i) inside = inner_c[i] == 0 || outer[i] != 0;
            if (inside) return false;
        }
    }
    return true;
}

/// Size of the span of `vs` in GF(q)^k, by closure.
inline std::size_t span_size(const Field& F, const std::vector<Word>& vs, std::size_t k) {
    std::set<Word> span{Word(k, 0)};
    for (const auto& v : vs) {
        std::set<Word> next;
        for (const auto& s : span) {
            for (std::uint32_t a = 0; a < F.q(); ++a) {
                Word w = s;
                for (std::size_t i = 0; i < k; ++i) w[i] = F.add(Element{w[i]}, F.mul(Element{a}, Element{v[i]})).value;
                next.insert(w);
            }
        }
        span = std::move(next);
    }
    return span.size();
}

inline std::size_t rank(const Field& F, const std::vector<Word>& vs, std::size_t k) {
    std::size_t r = 0;
    for (std::size_t s = span_size(F, vs, k); s > 1; s /= F.q()) ++r;
    return r;
}

/// Nonzero duals with first nonzero coordinate 1.
inline std::vector<Word> hyperplane_duals(const Field& F, std::size_t k) {
    std::vector<Word> out;
    for (const auto& a : every_tuple(F.q(), k)) {
        auto it = std::find_if(a.begin(), a.end(), [](auto x) { return x != 0; });
        if (it != a.end() && *it == 1) out.push_back(a);
    }
    return out;
}

/// Cutting straight from the definition over every ordered pair of distinct hyperplanes.
inline bool cutting(const VectorMultiset& D) {
    const auto& F = D.field();
    std::vector<Word> pts;
    for (const auto& x : columns(D)) {
        if (weight(x) > 0) pts.push_back(x);
    }
    const auto duals = hyperplane_duals(F, D.k());
    for (const auto& a : duals) {
        bool meets = false;
        for (const auto& x : pts) meets = meets || inner(F, a, x) == 0;
        if (!meets) return false;
        for (const auto& b : duals) {
            if (a == b) continue;
            bool inside = true;
            for (const auto& x : pts) {
                if (inner(F, a, x) == 0 && inner(F, b, x) != 0) inside = false;
            }
            if (inside) return false;
        }
    }
    return true;
}

/// Minimum over codimension-s subspaces W of |D* ∩ W| with multiplicity, by enumerating
/// s-tuples of dual vectors of full rank.
inline std::size_t fold(const VectorMultiset& D, std::size_t s) {
    const auto& F = D.field();
    const auto k = D.k();
    const auto duals = hyperplane_duals(F, k);
    const auto pts = columns(D);
    std::size_t best = SIZE_MAX;
    std::vector<std::size_t> idx(s, 0);
    for (std::size_t i = 0; i < s; ++i) idx[i] = i;
    while (true) {
        std::vector<Word> basis;
        for (auto i : idx) basis.push_back(duals[i]);
        if (rank(F, basis, k) == s) {
            std::size_t count = 0;
            for (const auto& x : pts) {
                if (weight(x) == 0) continue;
                bool in = true;
                for (const auto& a : basis) in = in && inner(F, a, x) == 0;
                count += in ? 1 : 0;
            }
            best = std::min(best, count);
        }
        std::size_t r = s;
        while (r > 0 && idx[r - 1] == duals.size() - s + (r - 1)) --r;
        if (r == 0) break;
        ++idx[r - 1];
        for (std::size_t j = r; j < s; ++j) idx[j] = idx[j - 1] + 1;
    }
    return best;
}

inline GFVector random_nonzero(const Field& F, std::size_t k, std::mt19937_64& rng) {
    std::uniform_int_distribution<std::uint32_t> coord(0, F.q() - 1);
    while (true) {
        GFVector v(k);
        for (std::size_t i = 0; i < k; ++i) v[i] = Element{coord(rng)};
        if (!v.is_zero()) return v;
    }
}

/// Random multiset of `size` nonzero vectors, repeats allowed.
inline VectorMultiset random_multiset(const Field& F, std::size_t k, std::size_t size, std::mt19937_64& rng) {
    std::vector<GFVector> vs;
    for (std::size_t i = 0; i < size; ++i) vs.push_back(random_nonzero(F, k, rng));
    return VectorMultiset::from_vectors(F, k, std::move(vs));
}

/// Random set of `size` pairwise independent points; resampled until it spans GF(q)^k.
inline VectorMultiset random_projective(const Field& F, std::size_t k, std::size_t size, std::mt19937_64& rng) {
    auto points = mincode::projective_points(F, k);
    size = std::clamp<std::size_t>(size, k, points.size());
    while (true) {
        std::shuffle(points.begin(), points.end(), rng);
        std::vector<GFVector> chosen(points.begin(), points.begin() + static_cast<std::ptrdiff_t>(size));
        if (mincode::span_dim(F, chosen) == k) return VectorMultiset::from_vectors(F, k, std::move(chosen));
    }
}

}  // namespace oracle
