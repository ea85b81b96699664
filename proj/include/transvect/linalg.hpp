#pragma once

#include "transvect/scalar.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

namespace transvect {

/// Sparse linear form: column index -> nonzero coefficient.
template <ScalarField S>
using SparseRow = std::map<int, S>;

/// Reduced row echelon form in place. Rows are dense. Returns the pivot
/// column of each surviving row, in increasing order.
template <ScalarField S>
std::vector<int> rref(std::vector<std::vector<S>>& m) {
    std::vector<int> pivots;
    if (m.empty())
        return pivots;
    const int ncols = static_cast<int>(m[0].size());
    size_t row = 0;
    for (int col = 0; col < ncols && row < m.size(); ++col) {
        size_t sel = row;
        while (sel < m.size() && m[sel][col].is_zero())
            ++sel;
        if (sel == m.size())
            continue;
        std::swap(m[row], m[sel]);
        const S piv_inv = m[row][col].inv();
        for (int c = col; c < ncols; ++c)
            m[row][c] = m[row][c] * piv_inv;
        for (size_t r = 0; r < m.size(); ++r) {
            if (r == row || m[r][col].is_zero())
                continue;
            const S f = m[r][col];
            for (int c = col; c < ncols; ++c)
                m[r][c] = m[r][c] - f * m[row][c];
        }
        pivots.push_back(col);
        ++row;
    }
    m.resize(pivots.size());
    return pivots;
}

template <ScalarField S>
int rank(std::vector<std::vector<S>> m) {
    return static_cast<int>(rref(m).size());
}

template <ScalarField S>
std::vector<std::vector<S>> densify(int ncols, const std::vector<SparseRow<S>>& rows) {
    std::vector<std::vector<S>> m;
    m.reserve(rows.size());
    for (const auto& r : rows) {
        std::vector<S> dense(ncols, S(0));
        for (const auto& [c, v] : r)
            dense[c] = v;
        m.push_back(std::move(dense));
    }
    return m;
}

/// Canonical nullspace basis: each vector's first nonzero coordinate is 1,
/// leading coordinates strictly increase, and leading coordinates are zero
/// in every other basis vector (reduced echelon over the coordinate order).
template <ScalarField S>
struct Nullspace {
    std::vector<std::vector<S>> basis;
    std::vector<int> lead; // leading coordinate of each basis vector
    int dimension() const { return static_cast<int>(basis.size()); }
};

template <ScalarField S>
Nullspace<S> nullspace(int ncols, const std::vector<SparseRow<S>>& rows) {
    auto m = densify(ncols, rows);
    std::vector<int> pivots = rref(m);

    std::vector<bool> is_pivot(ncols, false);
    for (int p : pivots)
        is_pivot[p] = true;

    // Standard free-column parameterization of the nullspace.
    std::vector<std::vector<S>> basis;
    for (int free = 0; free < ncols; ++free) {
        if (is_pivot[free])
            continue;
        std::vector<S> v(ncols, S(0));
        v[free] = S(1);
        for (size_t r = 0; r < pivots.size(); ++r)
            v[pivots[r]] = -m[r][free];
        basis.push_back(std::move(v));
    }

    // Re-echelonize the basis itself so output is deterministic and each
    // vector leads with coefficient 1 at its lexicographically first slot.
    Nullspace<S> out;
    out.lead = rref(basis);
    out.basis = std::move(basis);
    return out;
}

/// Reduce v against an echelonized basis; returns the residue.
template <ScalarField S>
std::vector<S> reduce_against(const Nullspace<S>& ns, std::vector<S> v) {
    for (size_t r = 0; r < ns.basis.size(); ++r) {
        const S f = v[ns.lead[r]];
        if (f.is_zero())
            continue;
        for (size_t c = 0; c < v.size(); ++c)
            v[c] = v[c] - f * ns.basis[r][c];
    }
    return v;
}

template <ScalarField S>
bool in_span(const Nullspace<S>& ns, const std::vector<S>& v) {
    for (const S& c : reduce_against(ns, v))
        if (!c.is_zero())
            return false;
    return true;
}

template <ScalarField S>
bool same_space(const Nullspace<S>& a, const Nullspace<S>& b) {
    if (a.dimension() != b.dimension())
        return false;
    for (const auto& v : a.basis)
        if (!in_span(b, v))
            return false;
    return true;
}

// ---------------------------------------------------------------------------
// Exact rank certificates modulo a large prime. Specializing Q -> F_p can
// only lower the rank, so "full column rank mod p" is an unconditional proof
// of full column rank over Q. Cells the certificate cannot settle fall back
// to exact rational elimination; no result ever depends on the prime choice.
// ---------------------------------------------------------------------------

namespace modp {

constexpr uint64_t kPrime = 2305843009213693951ull; // 2^61 - 1

inline uint64_t mul(uint64_t a, uint64_t b) {
    return static_cast<uint64_t>((static_cast<__uint128_t>(a) * b) % kPrime);
}

inline uint64_t add(uint64_t a, uint64_t b) {
    uint64_t s = a + b;
    return s >= kPrime ? s - kPrime : s;
}

inline uint64_t sub(uint64_t a, uint64_t b) { return add(a, kPrime - b); }

inline uint64_t pow(uint64_t base, uint64_t e) {
    uint64_t r = 1;
    while (e) {
        if (e & 1)
            r = mul(r, base);
        base = mul(base, base);
        e >>= 1;
    }
    return r;
}

inline uint64_t inv(uint64_t a) { return pow(a, kPrime - 2); }

inline std::optional<uint64_t> project(const Rational& q) {
    uint64_t num = static_cast<uint64_t>(boost::multiprecision::abs(q.num()) % kPrime);
    uint64_t den = static_cast<uint64_t>(q.den() % kPrime);
    if (den == 0)
        return std::nullopt;
    uint64_t v = mul(num, inv(den));
    return q.sign() < 0 ? (kPrime - v) % kPrime : v;
}

/// Rank of the projected matrix; nullopt if some denominator divides p.
inline std::optional<int> rank(int ncols, const std::vector<SparseRow<Rational>>& rows) {
    std::vector<std::vector<uint64_t>> m;
    m.reserve(rows.size());
    for (const auto& r : rows) {
        std::vector<uint64_t> dense(ncols, 0);
        for (const auto& [c, v] : r) {
            auto p = project(v);
            if (!p)
                return std::nullopt;
            dense[c] = *p;
        }
        m.push_back(std::move(dense));
    }
    int rank = 0;
    for (int col = 0; col < ncols && rank < static_cast<int>(m.size()); ++col) {
        int sel = -1;
        for (int r = rank; r < static_cast<int>(m.size()); ++r)
            if (m[r][col] != 0) {
                sel = r;
                break;
            }
        if (sel < 0)
            continue;
        std::swap(m[rank], m[sel]);
        uint64_t piv_inv = inv(m[rank][col]);
        for (int r = rank + 1; r < static_cast<int>(m.size()); ++r) {
            if (m[r][col] == 0)
                continue;
            uint64_t f = mul(m[r][col], piv_inv);
            for (int c = col; c < ncols; ++c)
                m[r][c] = sub(m[r][c], mul(f, m[rank][c]));
        }
        ++rank;
    }
    return rank;
}

} // namespace modp

} // namespace transvect
