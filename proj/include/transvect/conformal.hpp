#pragma once

#include "transvect/linalg.hpp"
#include "transvect/rational.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <stdexcept>
#include <vector>

namespace transvect {

/// Exponent tuple (a,b,c,d,e,f) of the x-free invariant contractions
/// R_xixi, R_xieta, R_xizeta, R_etaeta, R_etazeta, R_zetazeta.
using Exp6 = std::array<int, 6>;

inline int exp6_sum(const Exp6& e) {
    int s = 0;
    for (int v : e)
        s += v;
    return s;
}

/// Symbol of a ternary conformally covariant operator on R^n: a homogeneous
/// degree-k polynomial in the six contractions, with rational coefficients.
/// The target weight is derived: mu = l + g + t + 2k/n.
struct ConformalSymbol {
    int n = 1;
    int degree = 0;
    std::array<Rational, 3> weights;
    std::map<Exp6, Rational> terms;

    ConformalSymbol(int n_, int degree_, std::array<Rational, 3> weights_,
                    std::map<Exp6, Rational> terms_)
        : n(n_), degree(degree_), weights(std::move(weights_)), terms(std::move(terms_)) {
        if (n < 1)
            throw std::invalid_argument("ConformalSymbol: dimension must be positive");
        if (degree < 0)
            throw std::invalid_argument("ConformalSymbol: negative degree");
        for (auto it = terms.begin(); it != terms.end();) {
            for (int v : it->first)
                if (v < 0)
                    throw std::invalid_argument("ConformalSymbol: negative exponent");
            if (exp6_sum(it->first) != degree)
                throw std::invalid_argument("ConformalSymbol: exponent sum must equal degree");
            it = it->second.is_zero() ? terms.erase(it) : std::next(it);
        }
    }

    Rational target_weight() const {
        return weights[0] + weights[1] + weights[2] + Rational(2 * degree, n);
    }

    bool is_zero() const { return terms.empty(); }

    Rational coeff(const Exp6& e) const {
        auto it = terms.find(e);
        return it == terms.end() ? Rational(0) : it->second;
    }
};

/// Coefficients of the special conformal defect, grouped by which covector
/// multiplies them: the x family (degree k) and the xi/eta/zeta families
/// (degree k-1). All four vanish exactly when the symbol is invariant under
/// every special conformal generator.
struct DefectExpansion {
    std::map<Exp6, Rational> x, xi, eta, zeta;

    bool all_zero() const { return x.empty() && xi.empty() && eta.empty() && zeta.empty(); }
};

namespace conf_detail {

inline void add_term(std::map<Exp6, Rational>& m, const Exp6& e, const Rational& v) {
    if (v.is_zero())
        return;
    for (int c : e)
        if (c < 0)
            return; // shifted exponent fell outside the monomial cone
    auto [it, fresh] = m.emplace(e, v);
    if (!fresh) {
        it->second = it->second + v;
        if (it->second.is_zero())
            m.erase(it);
    }
}

inline Exp6 shift(const Exp6& e, int da, int db, int dc, int dd, int de, int df) {
    return Exp6{e[0] + da, e[1] + db, e[2] + dc, e[3] + dd, e[4] + de, e[5] + df};
}

} // namespace conf_detail

/// Term-by-term action of the special conformal fields on the symbol. The x
/// family carries 2(2k - n(mu-l-g-t)) per term, identically zero because mu
/// is derived; it is still computed literally as a structural check.
inline DefectExpansion conformal_defect(const ConformalSymbol& B) {
    using conf_detail::add_term;
    using conf_detail::shift;
    DefectExpansion out;
    const long long n = B.n;
    const Rational l = B.weights[0], g = B.weights[1], t = B.weights[2];
    const Rational nl = Rational(n) * l, ng = Rational(n) * g, nt = Rational(n) * t;
    const Rational homog =
        Rational(2) * (Rational(2 * B.degree) -
                       Rational(n) * (B.target_weight() - l - g - t));

    for (const auto& [E, alpha] : B.terms) {
        const long long a = E[0], b = E[1], c = E[2], d = E[3], e = E[4], f = E[5];
        add_term(out.x, E, homog * alpha);

        // xi-family shifts
        add_term(out.xi, shift(E, -1, 0, 0, 0, 0, 0),
                 (Rational(2 * a) * (Rational(2 * a) + Rational(n) * (Rational(2) * l - Rational(1)))) * alpha);
        add_term(out.xi, shift(E, 0, -2, 0, 1, 0, 0), Rational(-b * (b - 1)) * alpha);
        add_term(out.xi, shift(E, 0, -1, -1, 0, 1, 0), Rational(-2 * b * c) * alpha);
        add_term(out.xi, shift(E, 0, -1, 0, 0, 0, 0),
                 Rational(2 * b) * (Rational(b - 1 + e + 2 * d) + ng) * alpha);
        add_term(out.xi, shift(E, 0, 0, -2, 0, 0, 1), Rational(-c * (c - 1)) * alpha);
        add_term(out.xi, shift(E, 0, 0, -1, 0, 0, 0),
                 Rational(2 * c) * (Rational(c - 1 + e + 2 * f) + nt) * alpha);

        // eta-family shifts
        add_term(out.eta, shift(E, 0, 0, 0, -1, 0, 0),
                 (Rational(2 * d) * (Rational(2 * d) + Rational(n) * (Rational(2) * g - Rational(1)))) * alpha);
        add_term(out.eta, shift(E, 1, -2, 0, 0, 0, 0), Rational(-b * (b - 1)) * alpha);
        add_term(out.eta, shift(E, 0, -1, 1, 0, -1, 0), Rational(-2 * b * e) * alpha);
        add_term(out.eta, shift(E, 0, -1, 0, 0, 0, 0),
                 Rational(2 * b) * (Rational(b - 1 + c + 2 * a) + nl) * alpha);
        add_term(out.eta, shift(E, 0, 0, 0, 0, -2, 1), Rational(-e * (e - 1)) * alpha);
        add_term(out.eta, shift(E, 0, 0, 0, 0, -1, 0),
                 Rational(2 * e) * (Rational(e - 1 + c + 2 * f) + nt) * alpha);

        // zeta-family shifts
        add_term(out.zeta, shift(E, 0, 0, 0, 0, 0, -1),
                 (Rational(2 * f) * (Rational(2 * f) + Rational(n) * (Rational(2) * t - Rational(1)))) * alpha);
        add_term(out.zeta, shift(E, 0, 0, 0, 1, -2, 0), Rational(-e * (e - 1)) * alpha);
        add_term(out.zeta, shift(E, 0, 1, -1, 0, -1, 0), Rational(-2 * e * c) * alpha);
        add_term(out.zeta, shift(E, 0, 0, 0, 0, -1, 0),
                 Rational(2 * e) * (Rational(e - 1 + b + 2 * d) + ng) * alpha);
        add_term(out.zeta, shift(E, 1, 0, -2, 0, 0, 0), Rational(-c * (c - 1)) * alpha);
        add_term(out.zeta, shift(E, 0, 0, -1, 0, 0, 0),
                 Rational(2 * c) * (Rational(c - 1 + b + 2 * a) + nl) * alpha);
    }
    return out;
}

/// All degree-k exponent tuples in lexicographic order.
inline std::vector<Exp6> exp6_set(int k) {
    std::vector<Exp6> out;
    for (int a = 0; a <= k; ++a)
        for (int b = 0; a + b <= k; ++b)
            for (int c = 0; a + b + c <= k; ++c)
                for (int d = 0; a + b + c + d <= k; ++d)
                    for (int e = 0; a + b + c + d + e <= k; ++e)
                        out.push_back({a, b, c, d, e, k - a - b - c - d - e});
    std::sort(out.begin(), out.end());
    return out;
}

struct ConformalSystem {
    int degree = 0;
    int n = 1;
    std::array<Rational, 3> weights;
    std::vector<Exp6> unknowns; // lex sorted
    std::vector<SparseRow<Rational>> rows;

    int unknown_index(const Exp6& e) const {
        auto it = std::lower_bound(unknowns.begin(), unknowns.end(), e);
        if (it == unknowns.end() || *it != e)
            throw std::invalid_argument("ConformalSystem: unknown exponent tuple");
        return static_cast<int>(it - unknowns.begin());
    }
};

/// The three recurrence families over the degree-k coefficients, one row
/// triple per degree-(k-1) tuple. This transcription is independent of
/// conformal_defect and the two are required to agree exactly.
inline ConformalSystem build_neqs(int k, int n, const std::array<Rational, 3>& weights) {
    if (k < 1)
        throw std::invalid_argument("build_neqs: degree must be at least 1");
    if (n < 1)
        throw std::invalid_argument("build_neqs: dimension must be positive");
    ConformalSystem sys;
    sys.degree = k;
    sys.n = n;
    sys.weights = weights;
    sys.unknowns = exp6_set(k);

    const Rational l = weights[0], g = weights[1], t = weights[2];
    const Rational nl = Rational(n) * l, ng = Rational(n) * g, nt = Rational(n) * t;
    auto lead = [&](long long u, const Rational& w) {
        // 2(u+1)(2(u+1) + n(2w - 1))
        return Rational(2 * (u + 1)) *
               (Rational(2 * (u + 1)) + Rational(n) * (Rational(2) * w - Rational(1)));
    };

    for (const Exp6& J : exp6_set(k - 1)) {
        const long long a = J[0], b = J[1], c = J[2], d = J[3], e = J[4], f = J[5];
        auto put = [&](SparseRow<Rational>& row, Exp6 idx, const Rational& v) {
            if (v.is_zero())
                return;
            for (int comp : idx)
                if (comp < 0)
                    return;
            int col = sys.unknown_index(idx);
            auto [it, fresh] = row.emplace(col, v);
            if (!fresh)
                it->second = it->second + v;
        };
        using conf_detail::shift;

        SparseRow<Rational> r1;
        put(r1, shift(J, 1, 0, 0, 0, 0, 0), lead(a, l));
        put(r1, shift(J, 0, 2, 0, -1, 0, 0), Rational(-(b + 2) * (b + 1)));
        put(r1, shift(J, 0, 1, 1, 0, -1, 0), Rational(-2 * (b + 1) * (c + 1)));
        put(r1, shift(J, 0, 1, 0, 0, 0, 0), Rational(2 * (b + 1)) * (Rational(b + e + 2 * d) + ng));
        put(r1, shift(J, 0, 0, 2, 0, 0, -1), Rational(-(c + 2) * (c + 1)));
        put(r1, shift(J, 0, 0, 1, 0, 0, 0), Rational(2 * (c + 1)) * (Rational(c + e + 2 * f) + nt));
        if (!r1.empty())
            sys.rows.push_back(std::move(r1));

        SparseRow<Rational> r2;
        put(r2, shift(J, 0, 0, 0, 1, 0, 0), lead(d, g));
        put(r2, shift(J, -1, 2, 0, 0, 0, 0), Rational(-(b + 2) * (b + 1)));
        put(r2, shift(J, 0, 1, -1, 0, 1, 0), Rational(-2 * (b + 1) * (e + 1)));
        put(r2, shift(J, 0, 1, 0, 0, 0, 0), Rational(2 * (b + 1)) * (Rational(b + c + 2 * a) + nl));
        put(r2, shift(J, 0, 0, 0, 0, 2, -1), Rational(-(e + 2) * (e + 1)));
        put(r2, shift(J, 0, 0, 0, 0, 1, 0), Rational(2 * (e + 1)) * (Rational(c + e + 2 * f) + nt));
        if (!r2.empty())
            sys.rows.push_back(std::move(r2));

        SparseRow<Rational> r3;
        put(r3, shift(J, 0, 0, 0, 0, 0, 1), lead(f, t));
        put(r3, shift(J, 0, 0, 0, -1, 2, 0), Rational(-(e + 2) * (e + 1)));
        put(r3, shift(J, 0, -1, 1, 0, 1, 0), Rational(-2 * (e + 1) * (c + 1)));
        put(r3, shift(J, 0, 0, 0, 0, 1, 0), Rational(2 * (e + 1)) * (Rational(b + e + 2 * d) + ng));
        put(r3, shift(J, -1, 0, 2, 0, 0, 0), Rational(-(c + 2) * (c + 1)));
        put(r3, shift(J, 0, 0, 1, 0, 0, 0), Rational(2 * (c + 1)) * (Rational(c + b + 2 * a) + nl));
        if (!r3.empty())
            sys.rows.push_back(std::move(r3));
    }
    return sys;
}

struct ConformalKernel {
    int degree = 0;
    int n = 1;
    std::array<Rational, 3> weights;
    std::vector<Exp6> unknowns;
    std::vector<std::vector<Rational>> vectors;
    std::vector<Exp6> pivots;

    int dimension() const { return static_cast<int>(vectors.size()); }

    ConformalSymbol symbol(int i) const {
        std::map<Exp6, Rational> terms;
        for (size_t c = 0; c < unknowns.size(); ++c)
            if (!vectors[i][c].is_zero())
                terms.emplace(unknowns[c], vectors[i][c]);
        return ConformalSymbol(n, degree, weights, std::move(terms));
    }

    std::vector<Rational> coordinates(const ConformalSymbol& s) const {
        std::vector<Rational> v(unknowns.size(), Rational(0));
        for (const auto& [e, val] : s.terms) {
            auto it = std::lower_bound(unknowns.begin(), unknowns.end(), e);
            if (it == unknowns.end() || *it != e)
                throw std::invalid_argument("ConformalKernel: exponent outside unknown set");
            v[it - unknowns.begin()] = val;
        }
        return v;
    }

    bool contains(const ConformalSymbol& s) const {
        Nullspace<Rational> ns{vectors, {}};
        for (const auto& v : vectors) {
            int p = 0;
            while (p < static_cast<int>(v.size()) && v[p].is_zero())
                ++p;
            ns.lead.push_back(p);
        }
        return in_span(ns, coordinates(s));
    }
};

/// Exact kernel of the recurrence system; k = 0 is the scalar symbol.
inline ConformalKernel solve_b2k(int k, int n, const std::array<Rational, 3>& weights) {
    ConformalKernel out;
    out.degree = k;
    out.n = n;
    out.weights = weights;
    out.unknowns = exp6_set(k);
    if (k == 0) {
        out.vectors = {{Rational(1)}};
        out.pivots = {Exp6{0, 0, 0, 0, 0, 0}};
        return out;
    }
    ConformalSystem sys = build_neqs(k, n, weights);
    Nullspace<Rational> ns = nullspace(static_cast<int>(sys.unknowns.size()), sys.rows);
    out.vectors = std::move(ns.basis);
    for (int lead : ns.lead)
        out.pivots.push_back(out.unknowns[lead]);
    return out;
}

/// The degree-1 closed-form symbol with parameters (s,t,u).
inline ConformalSymbol b2_closed_form(int n, const std::array<Rational, 3>& weights,
                                      const Rational& s, const Rational& t, const Rational& u) {
    const Rational l = weights[0], g = weights[1], tau = weights[2];
    const Rational N(n);
    auto fac = [&](const Rational& w) { return Rational(2) + N * (Rational(2) * w - Rational(1)); };
    const Rational fl = fac(l), fg = fac(g), ft = fac(tau);

    std::map<Exp6, Rational> terms;
    terms.emplace(Exp6{1, 0, 0, 0, 0, 0}, N * (g * s + tau * t) * fg * ft);
    terms.emplace(Exp6{0, 0, 0, 1, 0, 0}, N * (l * s + tau * u) * fl * ft);
    terms.emplace(Exp6{0, 0, 0, 0, 0, 1}, N * (g * u + l * t) * fl * fg);
    const Rational common = -(fl * fg * ft);
    terms.emplace(Exp6{0, 1, 0, 0, 0, 0}, common * s);
    terms.emplace(Exp6{0, 0, 1, 0, 0, 0}, common * t);
    terms.emplace(Exp6{0, 0, 0, 0, 1, 0}, common * u);
    return ConformalSymbol(n, 1, weights, std::move(terms));
}

/// Verdict of the full vector-field check: the divergence term contributes
/// (mu - l - g - t) * alpha = (2k/n) * alpha per coefficient, so only k = 0
/// (or the zero symbol, flagged degenerate) survives.
struct ObstructionVerdict {
    bool invariant_candidate = false;
    bool degenerate = false;
    Rational obstruction; // common factor 2k/n
};

inline ObstructionVerdict vectn_obstruction(const ConformalSymbol& B) {
    ObstructionVerdict v;
    v.obstruction = B.target_weight() - B.weights[0] - B.weights[1] - B.weights[2];
    v.degenerate = B.is_zero();
    bool all_vanish = true;
    for (const auto& [e, alpha] : B.terms)
        if (!(v.obstruction * alpha).is_zero())
            all_vanish = false;
    v.invariant_candidate = all_vanish;
    return v;
}

} // namespace transvect
