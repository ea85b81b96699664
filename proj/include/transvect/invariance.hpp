#pragma once

#include "transvect/linalg.hpp"
#include "transvect/op.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace transvect {

/// All multi-indices of the given arity summing to k, in lexicographic order.
inline std::vector<MultiIndex> index_set(int arity, int k) {
    std::vector<MultiIndex> out;
    if (arity == 1) {
        out.push_back({k});
    } else if (arity == 2) {
        for (int i = 0; i <= k; ++i)
            out.push_back({i, k - i});
    } else {
        for (int i = 0; i <= k; ++i)
            for (int j = 0; j + i <= k; ++j)
                out.push_back({i, j, k - i - j});
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// Closed-form linear system expressing invariance of a generic order-k
/// operator under the fields x^r d/dx. One row per (multi-index J, r) with
/// |J| = k - r + 1: sum over slots s of
///   (w_s * C(J_s + r - 1, r - 1) + C(J_s + r - 1, r)) * alpha_{J + (r-1) e_s},
/// which is the standard three-term row in its slot-symmetric form (row (i,j,l)
/// corresponds to J = (i - r + 1, j, l); rows with i < r - 1 are trivial).
template <ScalarField S>
struct InvarianceSystem {
    int order = 0;
    std::vector<S> weights;
    std::vector<int> r_set;
    std::vector<MultiIndex> unknowns; // lex sorted
    std::vector<SparseRow<S>> rows;

    int unknown_index(const MultiIndex& idx) const {
        auto it = std::lower_bound(unknowns.begin(), unknowns.end(), idx);
        if (it == unknowns.end() || *it != idx)
            throw std::invalid_argument("InvarianceSystem: unknown multi-index");
        return static_cast<int>(it - unknowns.begin());
    }

    /// Does the coefficient vector satisfy every row exactly?
    bool annihilates(const std::vector<S>& alpha) const {
        for (const auto& row : rows) {
            S acc = S(0);
            for (const auto& [c, v] : row)
                acc = acc + v * alpha[c];
            if (!acc.is_zero())
                return false;
        }
        return true;
    }
};

template <ScalarField S>
InvarianceSystem<S> build_system(int k, const std::vector<S>& weights,
                                 const std::vector<int>& r_set) {
    if (k < 0)
        throw std::invalid_argument("build_system: negative order");
    InvarianceSystem<S> sys;
    sys.order = k;
    sys.weights = weights;
    sys.r_set = r_set;
    sys.unknowns = index_set(static_cast<int>(weights.size()), k);

    const int arity = static_cast<int>(weights.size());
    for (int r : r_set) {
        if (r < 2 || r > k + 1)
            continue; // r outside 2..k+1 contributes no equations
        for (const MultiIndex& J : index_set(arity, k - r + 1)) {
            SparseRow<S> row;
            for (int s = 0; s < arity; ++s) {
                S coefficient = weights[s] * scalar_from_bigint<S>(binomial(J[s] + r - 1, r - 1)) +
                                scalar_from_bigint<S>(binomial(J[s] + r - 1, r));
                if (coefficient.is_zero())
                    continue;
                MultiIndex idx = J;
                idx[s] += r - 1;
                row[sys.unknown_index(idx)] = coefficient;
            }
            if (!row.empty())
                sys.rows.push_back(std::move(row));
        }
    }
    return sys;
}

inline std::vector<int> full_r_set(int k) {
    std::vector<int> out;
    for (int r = 2; r <= k + 1; ++r)
        out.push_back(r);
    return out;
}

/// Reduced basis of an invariance-system nullspace. Basis vectors are in
/// echelon form over the lexicographic multi-index order: each leads with
/// coefficient 1 at its pivot index and pivots strictly increase.
template <ScalarField S>
struct KernelBasis {
    int order = 0;
    std::vector<S> weights;
    std::vector<MultiIndex> unknowns;
    std::vector<std::vector<S>> vectors;
    std::vector<MultiIndex> pivots;

    int dimension() const { return static_cast<int>(vectors.size()); }

    DensityOp<S> op(int i) const {
        std::map<MultiIndex, S> coeffs;
        for (size_t c = 0; c < unknowns.size(); ++c)
            if (!vectors[i][c].is_zero())
                coeffs.emplace(unknowns[c], vectors[i][c]);
        return DensityOp<S>(weights, order, std::move(coeffs));
    }

    std::vector<DensityOp<S>> ops() const {
        std::vector<DensityOp<S>> out;
        for (int i = 0; i < dimension(); ++i)
            out.push_back(op(i));
        return out;
    }

    std::vector<S> coordinates(const DensityOp<S>& candidate) const {
        std::vector<S> v(unknowns.size(), S(0));
        for (const auto& [idx, val] : candidate.coeffs()) {
            auto it = std::lower_bound(unknowns.begin(), unknowns.end(), idx);
            if (it == unknowns.end() || *it != idx)
                throw std::invalid_argument("KernelBasis: candidate index outside unknown set");
            v[it - unknowns.begin()] = val;
        }
        return v;
    }

    bool contains(const DensityOp<S>& candidate) const {
        Nullspace<S> ns{vectors, {}};
        ns.lead = lead_positions();
        return in_span(ns, coordinates(candidate));
    }

    std::vector<int> lead_positions() const {
        std::vector<int> lead;
        for (const auto& v : vectors) {
            int p = 0;
            while (p < static_cast<int>(v.size()) && v[p].is_zero())
                ++p;
            lead.push_back(p);
        }
        return lead;
    }
};

template <ScalarField S>
KernelBasis<S> kernel(const InvarianceSystem<S>& sys) {
    Nullspace<S> ns = nullspace(static_cast<int>(sys.unknowns.size()), sys.rows);
    KernelBasis<S> out;
    out.order = sys.order;
    out.weights = sys.weights;
    out.unknowns = sys.unknowns;
    out.vectors = std::move(ns.basis);
    for (int lead : ns.lead)
        out.pivots.push_back(sys.unknowns[lead]);
    return out;
}

/// Kernel for the full generator set r = 2..k+1, cross-checked against the
/// r = {2,3} kernel: d/dx and x^3 d/dx generate the whole algebra, so the
/// two solution spaces must coincide.
template <ScalarField S>
KernelBasis<S> classify(int k, const std::vector<S>& weights) {
    KernelBasis<S> full = kernel(build_system(k, weights, full_r_set(k)));
    KernelBasis<S> gen = kernel(build_system(k, weights, {2, 3}));
    Nullspace<S> a{full.vectors, full.lead_positions()};
    Nullspace<S> b{gen.vectors, gen.lead_positions()};
    if (!same_space(a, b))
        throw std::logic_error("classify: generator kernel differs from full kernel");
    return full;
}

template <ScalarField S>
KernelBasis<S> classify(int k, const S& l, const S& g, const S& t) {
    return classify(k, std::vector<S>{l, g, t});
}

/// Kernel dimension only, for sweeps: a full-column-rank certificate modulo
/// a large prime settles dimension 0 outright; everything else (and any cell
/// the certificate cannot settle) is decided by exact rational elimination.
inline int kernel_dimension(int k, const std::vector<Rational>& weights) {
    auto sys = build_system(k, weights, full_r_set(k));
    const int ncols = static_cast<int>(sys.unknowns.size());
    if (auto r = modp::rank(ncols, sys.rows); r && *r == ncols)
        return 0;
    return nullspace(ncols, sys.rows).dimension();
}

// --- order > 6 boundary sub-system -----------------------------------------

/// The 18 boundary unknowns: multi-indices with some component >= k - 2.
inline std::vector<MultiIndex> boundary_unknowns(int k) {
    std::vector<MultiIndex> out;
    for (const MultiIndex& idx : index_set(3, k))
        if (*std::max_element(idx.begin(), idx.end()) >= k - 2)
            out.push_back(idx);
    return out;
}

struct Rank18Report {
    int rows = 0;
    int cols = 0;
    int rank = 0;
};

/// Sub-system of the invariance system supported entirely on the 18 boundary
/// unknowns. For k > 7 this selects 23 rows: the instances at r in
/// {k+1, k, k-1, 3, 2} plus the single fully-boundary row at r = k-2, row
/// index (k-2,1,1). Rank 18 forces every boundary coefficient of an order-k
/// invariant operator to vanish.
inline Rank18Report rank18_check(const std::vector<Rational>& weights, int k) {
    if (k <= 7)
        throw std::domain_error("rank18_check: requires order k > 7");
    Rational product = weights.at(0) * weights.at(1) * weights.at(2);
    if (product.is_zero())
        throw std::domain_error("rank18_check: requires nonzero weight product");

    const std::vector<MultiIndex> cols = boundary_unknowns(k);
    auto col_of = [&](const MultiIndex& idx) -> int {
        auto it = std::lower_bound(cols.begin(), cols.end(), idx);
        if (it == cols.end() || *it != idx)
            return -1;
        return static_cast<int>(it - cols.begin());
    };

    auto sys = build_system(k, weights, full_r_set(k));
    std::vector<SparseRow<Rational>> rows;
    for (const auto& row : sys.rows) {
        SparseRow<Rational> projected;
        bool inside = true;
        for (const auto& [c, v] : row) {
            int pc = col_of(sys.unknowns[c]);
            if (pc < 0) {
                inside = false;
                break;
            }
            projected[pc] = v;
        }
        if (inside)
            rows.push_back(std::move(projected));
    }

    Rank18Report report;
    report.rows = static_cast<int>(rows.size());
    report.cols = static_cast<int>(cols.size());
    report.rank = rank(densify(report.cols, rows));
    return report;
}

// --- catalog matching -------------------------------------------------------

template <ScalarField S>
struct MatchReport {
    struct Item {
        std::string name;
        bool member = false;
        bool degenerate = false;
    };
    std::vector<Item> items;
    bool spans = false;

    bool all_members() const {
        for (const auto& i : items)
            if (!i.member)
                return false;
        return true;
    }
};

/// Membership of each candidate in the kernel (exact solve) and whether the
/// candidates jointly span it. Zero candidates are members by convention and
/// flagged degenerate.
template <ScalarField S>
MatchReport<S> match_catalog(const KernelBasis<S>& K,
                             const std::vector<std::pair<std::string, DensityOp<S>>>& candidates) {
    MatchReport<S> report;
    Nullspace<S> ns{K.vectors, K.lead_positions()};
    std::vector<std::vector<S>> vectors;
    for (const auto& [name, op] : candidates) {
        if (op.order() != K.order || op.source_weights() != K.weights)
            throw std::invalid_argument("match_catalog: candidate shape mismatch");
        typename MatchReport<S>::Item item;
        item.name = name;
        item.degenerate = op.is_zero();
        std::vector<S> v = K.coordinates(op);
        item.member = in_span(ns, v);
        if (item.member && !item.degenerate)
            vectors.push_back(std::move(v));
        report.items.push_back(std::move(item));
    }
    report.spans = report.all_members() && rank(vectors) == K.dimension();
    return report;
}

/// Default rational weight grid for sweeps; includes every special weight
/// appearing in the order 1..6 classification.
inline std::vector<Rational> default_weight_grid() {
    return {
        rat(0, 1),  rat(1, 2),  rat(-1, 2), rat(-2, 3), rat(-3, 4), rat(-1, 1),
        rat(-5, 4), rat(-4, 3), rat(-3, 2), rat(-2, 1), rat(-5, 2), rat(1, 1),
        rat(2, 1),  rat(3, 1),  rat(1, 3),  rat(2, 5),
    };
}

} // namespace transvect
