#pragma once

#include "transvect/op.hpp"

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

namespace transvect {

// ---------------------------------------------------------------------------
// Primitive constructors
// ---------------------------------------------------------------------------

/// Multiplication (phi_1, ..., phi_k) -> prod phi_i, invariant for any arity.
template <ScalarField S>
DensityOp<S> multiplication(std::vector<S> weights) {
    MultiIndex zero(weights.size(), 0);
    std::map<MultiIndex, S> c;
    c.emplace(std::move(zero), S(1));
    return DensityOp<S>(std::move(weights), 0, std::move(c));
}

/// Exterior differential d : F_0 -> F_1, phi -> phi' dx.
template <ScalarField S>
DensityOp<S> de_rham() {
    std::map<MultiIndex, S> c;
    c.emplace(MultiIndex{1}, S(1));
    return DensityOp<S>({S(0)}, 1, std::move(c));
}

/// Poisson bracket {phi (dx)^l, psi (dx)^m} = (-l phi psi' + m phi' psi)
/// (dx)^{l+m+1}. Identically zero at l = m = 0 (degenerate, not an error).
template <ScalarField S>
DensityOp<S> poisson(const S& l, const S& m) {
    std::map<MultiIndex, S> c;
    c.emplace(MultiIndex{1, 0}, m);
    c.emplace(MultiIndex{0, 1}, -l);
    return DensityOp<S>({l, m}, 1, std::move(c));
}

/// The classical binary operators of orders 2 and 3, by name, each on its
/// own weight domain. Weight pairs outside the entry's domain are rejected.
template <ScalarField S>
DensityOp<S> binary_catalog(const std::string& name, const S& w1, const S& w2) {
    auto require = [&](bool ok) {
        if (!ok)
            throw std::domain_error("binary_catalog: weights outside domain of '" + name + "'");
    };
    std::map<MultiIndex, S> c;
    if (name == "ord2_a") { // F_0 x F_m -> F_{m+2}: -phi' psi' + m phi'' psi
        require(w1 == S(0));
        c.emplace(MultiIndex{1, 1}, S(-1));
        c.emplace(MultiIndex{2, 0}, w2);
    } else if (name == "ord2_b") { // F_l x F_0 -> F_{l+2}: -l phi psi'' + phi' psi'
        require(w2 == S(0));
        c.emplace(MultiIndex{0, 2}, -w1);
        c.emplace(MultiIndex{1, 1}, S(1));
    } else if (name == "ord2_c") { // F_l x F_{-l-1} -> F_1
        require(w2 == S(-1) - w1);
        c.emplace(MultiIndex{0, 2}, -w1);
        c.emplace(MultiIndex{1, 1}, -(S(2) * w1 + S(1)));
        c.emplace(MultiIndex{2, 0}, -(w1 + S(1)));
    } else if (name == "ord3_a") { // F_0 x F_0 -> F_3: phi' psi'' - phi'' psi'
        require(w1 == S(0) && w2 == S(0));
        c.emplace(MultiIndex{1, 2}, S(1));
        c.emplace(MultiIndex{2, 1}, S(-1));
    } else if (name == "ord3_b") { // F_0 x F_{-2} -> F_1
        require(w1 == S(0) && w2 == S(-2));
        c.emplace(MultiIndex{1, 2}, S(1));
        c.emplace(MultiIndex{2, 1}, S(3));
        c.emplace(MultiIndex{3, 0}, S(2));
    } else if (name == "ord3_c") { // F_{-2} x F_0 -> F_1
        require(w1 == S(-2) && w2 == S(0));
        c.emplace(MultiIndex{2, 1}, S(1));
        c.emplace(MultiIndex{1, 2}, S(3));
        c.emplace(MultiIndex{0, 3}, S(2));
    } else if (name == "grozman") { // Gz : F_{-2/3} x F_{-2/3} -> F_{5/3}
        const S third = S(1) / S(3);
        require(w1 == S(-2) * third && w2 == S(-2) * third);
        c.emplace(MultiIndex{3, 0}, S(2));
        c.emplace(MultiIndex{2, 1}, S(3));
        c.emplace(MultiIndex{1, 2}, S(-3));
        c.emplace(MultiIndex{0, 3}, S(-2));
    } else {
        throw std::domain_error("binary_catalog: unknown entry '" + name + "'");
    }
    int order = 0;
    for (int d : c.begin()->first)
        order += d;
    return DensityOp<S>({w1, w2}, order, std::move(c));
}

template <ScalarField S>
DensityOp<S> grozman() {
    const S w = S(-2) / S(3);
    return binary_catalog<S>("grozman", w, w);
}

// ---------------------------------------------------------------------------
// Antisymmetric determinant family
// ---------------------------------------------------------------------------

/// Alternating table det | phi^(r_p) psi^(r_p) chi^(r_p) |, rows r_0<r_1<r_2:
/// coefficient at (r_{s(0)}, r_{s(1)}, r_{s(2)}) is sign(s).
template <ScalarField S>
DensityOp<S> determinant_block(std::array<int, 3> rows, std::vector<S> weights) {
    std::map<MultiIndex, S> c;
    for (const auto& sigma : Permutation3::all())
        c.emplace(MultiIndex{rows[sigma.image(0)], rows[sigma.image(1)], rows[sigma.image(2)]},
                  S(sigma.sign()));
    return DensityOp<S>(std::move(weights), rows[0] + rows[1] + rows[2], std::move(c));
}

/// Wedge^3 F_l -> F_{3l+3}, the order-3 Wronskian determinant.
template <ScalarField S>
DensityOp<S> ff_delta3(const S& l) {
    return determinant_block<S>({0, 1, 2}, {l, l, l});
}

/// d composed with the order-3 determinant at weight -1 (target weight 0).
template <ScalarField S>
DensityOp<S> ff_d_delta3_minus1() {
    return insert(de_rham<S>(), 1, ff_delta3<S>(S(-1)));
}

/// Order-3 determinant at weight 1 precomposed with d in every slot.
template <ScalarField S>
DensityOp<S> ff_delta3_ddd() {
    DensityOp<S> op = ff_delta3<S>(S(1));
    for (int slot = 1; slot <= 3; ++slot)
        op = insert(op, slot, de_rham<S>());
    return op;
}

/// Wedge^3 F_{-5/4} -> F_{9/4}, order 6: determinant rows (0,1,5) plus
/// 5/2 * rows (0,2,4) plus 2 * rows (1,2,3).
template <ScalarField S>
DensityOp<S> ff_upsilon() {
    const std::vector<S> w(3, S(-5) / S(4));
    return determinant_block<S>({0, 1, 5}, w) +
           (S(5) / S(2)) * determinant_block<S>({0, 2, 4}, w) +
           S(2) * determinant_block<S>({1, 2, 3}, w);
}

/// Weights kappa = -(9 +- sqrt 21)/12 of the order-5 antisymmetric pair.
inline QuadExt theta_weight(int sign) {
    if (sign != 1 && sign != -1)
        throw std::invalid_argument("theta_weight: sign must be +1 or -1");
    return QuadExt(rat(-3, 4), sign == 1 ? rat(-1, 12) : rat(1, 12));
}

/// Wedge^3 F_kappa -> F_{3 kappa + 5}: determinant rows (0,1,4) plus
/// 2(+- sqrt21 - 4) * rows (0,2,3), over Q(sqrt 21). The two operators are
/// Galois conjugates of each other; the factor sign is the one that pairs
/// with kappa(sign) to land in the (1-dimensional) invariance kernel.
inline DensityOp<QuadExt> ff_theta(int sign) {
    const QuadExt kappa = theta_weight(sign);
    const std::vector<QuadExt> w(3, kappa);
    const QuadExt factor(Rational(-8), sign == 1 ? Rational(2) : Rational(-2));
    return determinant_block<QuadExt>({0, 1, 4}, w) +
           factor * determinant_block<QuadExt>({0, 2, 3}, w);
}

// ---------------------------------------------------------------------------
// The new ternary families
// ---------------------------------------------------------------------------

/// Order-3 ternary invariant operator F_l x F_g x F_t -> F_{l+g+t+3},
/// defined for all weights by an explicit ten-entry coefficient table.
template <ScalarField S>
DensityOp<S> delta3(const S& l, const S& g, const S& t) {
    const S one = S(1), two = S(2), three = S(3), four = S(4);
    std::map<MultiIndex, S> c;
    c.emplace(MultiIndex{0, 3, 0}, l * t * (l - t) * (one + l + t));
    c.emplace(MultiIndex{2, 1, 0},
              t * (one + g + t) * (two * l + t + g * (three * l + three * t + four) + two));
    c.emplace(MultiIndex{1, 1, 1}, (l - g) * (g - t) * (l - t));
    c.emplace(MultiIndex{1, 2, 0},
              -t * (one + l + t) * (two * g + t + l * (three * g + three * t + four) + two));
    c.emplace(MultiIndex{3, 0, 0}, g * t * (t - g) * (one + g + t));
    c.emplace(MultiIndex{2, 0, 1},
              -g * (one + g + t) * (g + two * l + (three * g + three * l + four) * t + two));
    c.emplace(MultiIndex{0, 0, 3}, g * l * (g - l) * (one + g + l));
    c.emplace(MultiIndex{1, 0, 2},
              g * (one + g + l) * (g + two * t + l * (three * g + three * t + four) + two));
    c.emplace(MultiIndex{0, 2, 1},
              l * (one + l + t) * (two * g + l + (three * g + three * l + four) * t + two));
    c.emplace(MultiIndex{0, 1, 2},
              -l * (one + g + l) * (l + two * t + g * (three * l + three * t + four) + two));
    return DensityOp<S>({l, g, t}, 3, std::move(c));
}

/// Order-4 family F_{-t-3/2} x F_t x F_t -> F_{t+5/2}, antisymmetric in the
/// last two slots; t = -3/4 belongs to the two-parameter family xi_st.
template <ScalarField S>
DensityOp<S> xi(const S& t) {
    const S quarter3 = S(-3) / S(4);
    if (t == quarter3)
        throw std::domain_error("xi: at weight -3/4 the family is 2-parametric; use xi_st");
    const S f2 = S(3) + S(2) * t;    // 3 + 2t
    const S f3 = S(2) + S(3) * t;    // 2 + 3t
    const S f12 = S(13) + S(12) * t; // 13 + 12t
    const S f1 = S(1) + t;           // 1 + t
    std::map<MultiIndex, S> c;
    c.emplace(MultiIndex{0, 4, 0}, -t * f2);
    c.emplace(MultiIndex{0, 0, 4}, t * f2);
    c.emplace(MultiIndex{3, 1, 0}, -(S(8) / S(3)) * t * f3);
    c.emplace(MultiIndex{3, 0, 1}, (S(8) / S(3)) * t * f3);
    c.emplace(MultiIndex{1, 3, 0}, -(S(2) / S(3)) * t * f12);
    c.emplace(MultiIndex{1, 0, 3}, (S(2) / S(3)) * t * f12);
    c.emplace(MultiIndex{0, 3, 1}, (S(5) / S(3)) * f2);
    c.emplace(MultiIndex{0, 1, 3}, -(S(5) / S(3)) * f2);
    c.emplace(MultiIndex{2, 2, 0}, S(-4) * t * f3);
    c.emplace(MultiIndex{2, 0, 2}, S(4) * t * f3);
    c.emplace(MultiIndex{1, 2, 1}, S(10) * f1);
    c.emplace(MultiIndex{1, 1, 2}, S(-10) * f1);
    return DensityOp<S>({-t - S(3) / S(2), t, t}, 4, std::move(c));
}

/// Two-parameter order-4 family at weights (-3/4, -3/4, -3/4).
template <ScalarField S>
DensityOp<S> xi_st(const S& s, const S& t) {
    const S n49 = S(4) / S(9), n23 = S(2) / S(3);
    std::map<MultiIndex, S> c;
    c.emplace(MultiIndex{0, 0, 4}, -s - t);
    c.emplace(MultiIndex{3, 1, 0}, n49 * (S(4) * t - s));
    c.emplace(MultiIndex{3, 0, 1}, n49 * (s + S(5) * t));
    c.emplace(MultiIndex{1, 3, 0}, n49 * (S(4) * s - t));
    c.emplace(MultiIndex{1, 0, 3}, -n49 * (S(4) * s + S(5) * t));
    c.emplace(MultiIndex{0, 3, 1}, n49 * (S(5) * s + t));
    c.emplace(MultiIndex{0, 1, 3}, -n49 * (S(5) * s + S(4) * t));
    c.emplace(MultiIndex{2, 2, 0}, -n23 * (s + t));
    c.emplace(MultiIndex{2, 0, 2}, n23 * s);
    c.emplace(MultiIndex{0, 2, 2}, n23 * t);
    c.emplace(MultiIndex{2, 1, 1}, (S(20) / S(9)) * t);
    c.emplace(MultiIndex{1, 2, 1}, (S(20) / S(9)) * s);
    c.emplace(MultiIndex{1, 1, 2}, -(S(20) / S(9)) * (s + t));
    c.emplace(MultiIndex{0, 4, 0}, s);
    c.emplace(MultiIndex{4, 0, 0}, t);
    const S w = S(-3) / S(4);
    return DensityOp<S>({w, w, w}, 4, std::move(c));
}

/// Order-5 operator F_{-2/3} x F_{-2/3} x F_{-4/3} -> F_{7/3}, symmetric in
/// the first two slots, with fixed rational coefficients.
template <ScalarField S>
DensityOp<S> gamma_op() {
    auto q = [](long long n, long long d) { return S(Rational(BigInt(n), BigInt(d))); };
    std::map<MultiIndex, S> c;
    c.emplace(MultiIndex{0, 0, 5}, q(2, 5));
    c.emplace(MultiIndex{0, 1, 4}, q(1, 1));
    c.emplace(MultiIndex{0, 2, 3}, q(-1, 1));
    c.emplace(MultiIndex{0, 3, 2}, q(-5, 2));
    c.emplace(MultiIndex{0, 4, 1}, q(-17, 10));
    c.emplace(MultiIndex{0, 5, 0}, q(-2, 5));
    c.emplace(MultiIndex{1, 0, 4}, q(1, 1));
    c.emplace(MultiIndex{1, 1, 3}, q(3, 2));
    c.emplace(MultiIndex{1, 2, 2}, q(-9, 4));
    c.emplace(MultiIndex{1, 3, 1}, q(-9, 4));
    c.emplace(MultiIndex{1, 4, 0}, q(-3, 5));
    c.emplace(MultiIndex{2, 0, 3}, q(-1, 1));
    c.emplace(MultiIndex{2, 1, 2}, q(-9, 4));
    c.emplace(MultiIndex{2, 2, 1}, q(9, 2));
    c.emplace(MultiIndex{2, 3, 0}, q(3, 1));
    c.emplace(MultiIndex{3, 0, 2}, q(-5, 2));
    c.emplace(MultiIndex{3, 1, 1}, q(-9, 4));
    c.emplace(MultiIndex{3, 2, 0}, q(3, 1));
    c.emplace(MultiIndex{4, 0, 1}, q(-17, 10));
    c.emplace(MultiIndex{4, 1, 0}, q(-3, 5));
    c.emplace(MultiIndex{5, 0, 0}, q(-2, 5));
    return DensityOp<S>({q(-2, 3), q(-2, 3), q(-4, 3)}, 5, std::move(c));
}

// ---------------------------------------------------------------------------
// Representative spanning sets for the order 1..6 classification
// ---------------------------------------------------------------------------

template <ScalarField S>
using NamedOps = std::vector<std::pair<std::string, DensityOp<S>>>;

namespace detail {

/// Does the weight match kappa(+1) or kappa(-1)? Only possible over QuadExt.
template <ScalarField S>
inline std::optional<int> theta_sign(const S&) {
    return std::nullopt;
}

template <>
inline std::optional<int> theta_sign<QuadExt>(const QuadExt& w) {
    if (w == theta_weight(1))
        return 1;
    if (w == theta_weight(-1))
        return -1;
    return std::nullopt;
}

/// Try every slot permutation (identity first); when the permuted weights
/// match, build the representatives there and carry them back.
template <ScalarField S, class Pred, class Build>
bool try_case(const std::vector<S>& w, Pred matches, Build build, NamedOps<S>& out) {
    for (const auto& sigma : Permutation3::all()) {
        std::vector<S> wp = sigma.apply(w);
        if (!matches(wp))
            continue;
        const Permutation3 inv = sigma.inverse();
        for (auto& [name, op] : build(wp))
            out.emplace_back(std::move(name), permute(op, inv));
        return true;
    }
    return false;
}

} // namespace detail

/// The explicit spanning set for each order/weight case of the
/// ternary classification, assembled compositionally from the primitive
/// constructors. Empty when no case covers the given weights.
template <ScalarField S>
NamedOps<S> theorem_representatives(int k, const std::vector<S>& w) {
    using detail::try_case;
    if (w.size() != 3)
        throw std::invalid_argument("theorem_representatives: ternary weights expected");
    NamedOps<S> out;
    const S zero(0), one(1);
    const S minus_two_thirds = S(-2) / S(3);
    const S minus_half = S(-1) / S(2);
    const auto d = [] { return de_rham<S>(); };
    const Permutation3 swap23 = Permutation3::transposition(2, 3);
    const Permutation3 cycle_to_first(Permutation3({2, 0, 1})); // args (chi, phi, psi)
    const Permutation3 cycle_to_last(Permutation3({1, 2, 0}));  // args (psi, chi, phi)

    auto all_equal = [&](const std::vector<S>& v, const S& x) {
        return v[0] == x && v[1] == x && v[2] == x;
    };

    switch (k) {
    case 1: {
        if (all_equal(w, zero)) {
            for (int slot = 1; slot <= 3; ++slot) {
                std::vector<S> mw = {zero, zero, zero};
                mw[slot - 1] = one;
                std::string name = slot == 1   ? "d(phi).psi.chi"
                                   : slot == 2 ? "phi.d(psi).chi"
                                               : "phi.psi.d(chi)";
                out.emplace_back(name, insert(multiplication<S>(mw), slot, d()));
            }
            return out;
        }
        try_case(
            w, [&](const std::vector<S>& v) { return !(v[0] == zero); },
            [&](const std::vector<S>& v) {
                NamedOps<S> reps;
                const S mu12 = v[0] + v[1] + one, mu13 = v[0] + v[2] + one;
                reps.emplace_back("{phi,psi}.chi",
                                  insert(multiplication<S>({mu12, v[2]}), 1, poisson(v[0], v[1])));
                reps.emplace_back(
                    "{phi,chi}.psi",
                    permute(insert(multiplication<S>({mu13, v[1]}), 1, poisson(v[0], v[2])),
                            swap23));
                return reps;
            },
            out);
        return out;
    }
    case 2: {
        bool matched = try_case(
            w, [&](const std::vector<S>& v) { return v[0] == zero && v[1] == zero; },
            [&](const std::vector<S>& v) {
                const S t = v[2];
                NamedOps<S> reps;
                // {phi, d psi}.chi
                auto g1 = insert(poisson<S>(zero, one), 2, d());
                reps.emplace_back("{phi,d(psi)}.chi",
                                  insert(multiplication<S>({S(2), t}), 1, g1));
                // {chi, d phi}.psi
                auto g2 = insert(poisson<S>(t, one), 2, d());
                auto h2 = insert(multiplication<S>({t + S(2), zero}), 1, g2);
                reps.emplace_back("{chi,d(phi)}.psi", permute(h2, cycle_to_first));
                // {d psi, chi}.phi
                auto g3 = insert(poisson<S>(one, t), 1, d());
                auto h3 = insert(multiplication<S>({t + S(2), zero}), 1, g3);
                reps.emplace_back("{d(psi),chi}.phi", permute(h3, cycle_to_last));
                return reps;
            },
            out);
        if (!matched) {
            const S l = w[0], g = w[1], t = w[2];
            out.emplace_back("{{phi,psi},chi}",
                             insert(poisson(l + g + one, t), 1, poisson(l, g)));
            out.emplace_back(
                "{{phi,chi},psi}",
                permute(insert(poisson(l + t + one, g), 1, poisson(l, t)), swap23));
        }
        return out;
    }
    case 3: {
        if (all_equal(w, zero)) {
            auto dd = insert(insert(poisson<S>(one, one), 1, d()), 2, d()); // {d.,d.}
            auto h = insert(multiplication<S>({S(3), zero}), 1, dd);
            out.emplace_back("{d(phi),d(psi)}.chi", h);
            out.emplace_back("{d(chi),d(phi)}.psi", permute(h, cycle_to_first));
            out.emplace_back("{d(psi),d(chi)}.phi", permute(h, cycle_to_last));
            DensityOp<S> ddd = multiplication<S>({one, one, one});
            for (int slot = 1; slot <= 3; ++slot)
                ddd = insert(ddd, slot, d());
            out.emplace_back("d(phi).d(psi).d(chi)", ddd);
            return out;
        }
        if (all_equal(w, minus_two_thirds)) {
            auto h = insert(multiplication<S>({S(5) / S(3), minus_two_thirds}), 1, grozman<S>());
            out.emplace_back("Gz(phi,psi).chi", h);
            out.emplace_back("Gz(chi,phi).psi", permute(h, cycle_to_first));
            out.emplace_back("Gz(psi,chi).phi", permute(h, cycle_to_last));
            return out;
        }
        if (all_equal(w, minus_half)) {
            auto dp = insert(d(), 1, poisson(minus_half, minus_half)); // d{.,.} into F_1
            auto h = insert(poisson(one, minus_half), 1, dp);
            out.emplace_back("{d{phi,psi},chi}", h);
            out.emplace_back("{d{chi,phi},psi}", permute(h, cycle_to_first));
            out.emplace_back("{d{psi,chi},phi}", permute(h, cycle_to_last));
            return out;
        }
        bool matched = try_case(
            w,
            [&](const std::vector<S>& v) {
                return v[0] == zero && !(v[1] == zero && v[2] == zero);
            },
            [&](const std::vector<S>& v) {
                const S g = v[1], t = v[2];
                NamedOps<S> reps;
                auto u1 = insert(poisson(one, g), 1, d()); // {d phi, psi}
                reps.emplace_back("{{d(phi),psi},chi}",
                                  insert(poisson(g + S(2), t), 1, u1));
                auto u2 = insert(poisson(one, t), 1, d()); // {d phi, chi}
                reps.emplace_back(
                    "{{d(phi),chi},psi}",
                    permute(insert(poisson(t + S(2), g), 1, u2), swap23));
                return reps;
            },
            out);
        if (matched)
            return out;
        matched = try_case(
            w,
            [&](const std::vector<S>& v) {
                return (one + v[0] + v[2]).is_zero() && v[1] == v[0] && !(v[0] == v[2]);
            },
            [&](const std::vector<S>& v) {
                const S l = v[0], g = v[1], t = v[2];
                NamedOps<S> reps;
                auto e1 = insert(d(), 1, poisson(l, t)); // d{phi,chi}
                reps.emplace_back("{d{phi,chi},psi}",
                                  permute(insert(poisson(one, g), 1, e1), swap23));
                auto e2 = insert(d(), 1, poisson(g, t)); // d{psi,chi}
                reps.emplace_back(
                    "{d{psi,chi},phi}",
                    permute(insert(poisson(one, l), 1, e2), cycle_to_last));
                return reps;
            },
            out);
        if (matched)
            return out;
        out.emplace_back("delta3", delta3(w[0], w[1], w[2]));
        return out;
    }
    case 4: {
        if (try_case(
                w, [&](const std::vector<S>& v) { return v[0] == zero && v[1] == zero; },
                [&](const std::vector<S>& v) {
                    const S t = v[2];
                    NamedOps<S> reps;
                    auto dd = insert(insert(poisson<S>(one, one), 1, d()), 2, d());
                    reps.emplace_back("{{d(phi),d(psi)},chi}",
                                      insert(poisson(S(3), t), 1, dd));
                    // {{chi, d phi}, d psi}
                    auto h1 = insert(poisson<S>(t, one), 2, d());       // {chi, d.}
                    auto h2 = insert(poisson<S>(t + S(2), one), 1, h1); // {{chi,d.}, .}
                    auto h3 = insert(h2, 3, d());
                    reps.emplace_back("{{chi,d(phi)},d(psi)}", permute(h3, cycle_to_first));
                    return reps;
                },
                out))
            return out;
        if (try_case(
                w,
                [&](const std::vector<S>& v) {
                    return v[0] == S(-2) && v[1] == zero && v[2] == S(-2);
                },
                [&](const std::vector<S>&) {
                    NamedOps<S> reps;
                    auto j = insert(poisson<S>(one, S(-2)), 1, d()); // {d., .}: (0,-2) -> 0
                    auto dj = insert(d(), 1, j);
                    auto l1 = insert(poisson<S>(one, S(-2)), 1, dj); // {d{d a, b}, c}
                    reps.emplace_back("{d{d(psi),phi},chi}",
                                      permute(l1, Permutation3::transposition(1, 2)));
                    reps.emplace_back("{d{d(psi),chi},phi}", permute(l1, cycle_to_last));
                    return reps;
                },
                out))
            return out;
        if (try_case(
                w,
                [&](const std::vector<S>& v) {
                    return v[1] == zero && !v[0].is_zero() && !v[2].is_zero();
                },
                [&](const std::vector<S>& v) {
                    NamedOps<S> reps;
                    reps.emplace_back("delta3(phi,d(psi),chi)",
                                      insert(delta3(v[0], one, v[2]), 2, d()));
                    return reps;
                },
                out))
            return out;
        if (try_case(
                w,
                [&](const std::vector<S>& v) {
                    return v[0] == minus_two_thirds && v[1] == minus_two_thirds && !(v[2] == S(-1));
                },
                [&](const std::vector<S>& v) {
                    NamedOps<S> reps;
                    reps.emplace_back("{Gz(phi,psi),chi}",
                                      insert(poisson(S(5) / S(3), v[2]), 1, grozman<S>()));
                    return reps;
                },
                out))
            return out;
        if (try_case(
                w,
                [&](const std::vector<S>& v) {
                    return v[0] == S(-1) && v[1] == minus_two_thirds && v[2] == minus_two_thirds;
                },
                [&](const std::vector<S>&) {
                    NamedOps<S> reps;
                    auto h = insert(grozman<S>(), 1, poisson(S(-1), minus_two_thirds));
                    reps.emplace_back("Gz({phi,psi},chi)", h);
                    reps.emplace_back("Gz({phi,chi},psi)", permute(h, swap23));
                    return reps;
                },
                out))
            return out;
        if (try_case(
                w,
                [&](const std::vector<S>& v) {
                    const S t = v[2];
                    if (!(v[1] == t) || !(v[0] == -t - S(3) / S(2)))
                        return false;
                    return !(t == S(-3) / S(2)) && !(t == minus_two_thirds) && !t.is_zero() &&
                           !(t == S(-3) / S(4));
                },
                [&](const std::vector<S>& v) {
                    NamedOps<S> reps;
                    reps.emplace_back("xi", xi(v[2]));
                    return reps;
                },
                out))
            return out;
        if (all_equal(w, S(-3) / S(4))) {
            out.emplace_back("xi_st(1,0)", xi_st(one, zero));
            out.emplace_back("xi_st(0,1)", xi_st(zero, one));
        }
        return out;
    }
    case 5: {
        if (all_equal(w, zero)) {
            auto dd = insert(insert(poisson<S>(one, one), 1, d()), 2, d());
            auto y = insert(insert(poisson<S>(S(3), one), 1, dd), 3, d());
            out.emplace_back("{{d(phi),d(psi)},d(chi)}", y);
            out.emplace_back("{{d(chi),d(phi)},d(psi)}", permute(y, cycle_to_first));
            return out;
        }
        if (try_case(
                w,
                [&](const std::vector<S>& v) {
                    return v[0] == zero && v[1] == zero && v[2] == S(-2);
                },
                [&](const std::vector<S>&) {
                    NamedOps<S> reps;
                    auto a = insert(poisson<S>(one, S(-2)), 1, d()); // {d a, b}: (0,-2) -> 0
                    auto b = insert(d(), 1, a);
                    auto cfull = insert(insert(poisson<S>(one, one), 1, b), 3, d());
                    // cfull(a,b,c) = {d{d a, b}, d c} at weights (0,-2,0)
                    reps.emplace_back("{d{d(phi),chi},d(psi)}", permute(cfull, swap23));
                    reps.emplace_back("{d{d(psi),chi},d(phi)}", permute(cfull, cycle_to_last));
                    return reps;
                },
                out))
            return out;
        if (try_case(
                w,
                [&](const std::vector<S>& v) {
                    return v[0] == zero && v[1] == zero && !v[2].is_zero() && !(v[2] == S(-2)) &&
                           !(v[2] == S(-4));
                },
                [&](const std::vector<S>& v) {
                    NamedOps<S> reps;
                    reps.emplace_back(
                        "delta3(d(phi),d(psi),chi)",
                        insert(insert(delta3(one, one, v[2]), 1, d()), 2, d()));
                    return reps;
                },
                out))
            return out;
        if (try_case(
                w,
                [&](const std::vector<S>& v) {
                    return v[0] == minus_two_thirds && v[1] == minus_two_thirds && v[2] == zero;
                },
                [&](const std::vector<S>&) {
                    NamedOps<S> reps;
                    reps.emplace_back(
                        "{Gz(phi,psi),d(chi)}",
                        insert(insert(poisson<S>(S(5) / S(3), one), 1, grozman<S>()), 3, d()));
                    return reps;
                },
                out))
            return out;
        if (try_case(
                w,
                [&](const std::vector<S>& v) {
                    return v[0] == S(-5) / S(2) && v[1] == zero && v[2] == one;
                },
                [&](const std::vector<S>&) {
                    NamedOps<S> reps;
                    reps.emplace_back("xi(phi,d(psi),chi)", insert(xi<S>(one), 2, d()));
                    return reps;
                },
                out))
            return out;
        if (try_case(
                w,
                [&](const std::vector<S>& v) {
                    return v[0] == minus_two_thirds && v[1] == minus_two_thirds && v[2] == S(-4) / S(3);
                },
                [&](const std::vector<S>&) {
                    NamedOps<S> reps;
                    reps.emplace_back("gamma", gamma_op<S>());
                    return reps;
                },
                out))
            return out;
        if (auto sign = detail::theta_sign<S>(w[0]); sign && w[1] == w[0] && w[2] == w[0]) {
            if constexpr (std::is_same_v<S, QuadExt>)
                out.emplace_back(*sign == 1 ? "theta_plus" : "theta_minus", ff_theta(*sign));
        }
        return out;
    }
    case 6: {
        if (all_equal(w, zero)) {
            out.emplace_back("ff_delta3(d(phi),d(psi),d(chi))", ff_delta3_ddd<S>());
            return out;
        }
        if (try_case(
                w,
                [&](const std::vector<S>& v) {
                    return v[0] == zero && v[1] == zero && v[2] == S(-5) / S(2);
                },
                [&](const std::vector<S>&) {
                    NamedOps<S> reps;
                    auto moved = permute(xi<S>(one), Permutation3({2, 0, 1}));
                    reps.emplace_back("xi(d(phi),d(psi),chi)",
                                      insert(insert(moved, 1, d()), 2, d()));
                    return reps;
                },
                out))
            return out;
        if (all_equal(w, S(-5) / S(4)))
            out.emplace_back("upsilon", ff_upsilon<S>());
        return out;
    }
    default:
        return out;
    }
}

// ---------------------------------------------------------------------------
// Catalog listing (for the CLI)
// ---------------------------------------------------------------------------

struct CatalogEntryInfo {
    std::string name;
    int arity;
    int order;
    std::string weight_domain;
    std::string family;
};

inline std::vector<CatalogEntryInfo> catalog_listing() {
    return {
        {"multiplication", 3, 0, "any (l,g,t)", "scalar"},
        {"de_rham", 1, 1, "(0)", "exterior differential"},
        {"poisson", 2, 1, "any (l,m)", "Poisson bracket"},
        {"ord2_a", 2, 2, "(0,m)", "classical binary list"},
        {"ord2_b", 2, 2, "(l,0)", "classical binary list"},
        {"ord2_c", 2, 2, "(l,-l-1)", "classical binary list"},
        {"ord3_a", 2, 3, "(0,0)", "classical binary list"},
        {"ord3_b", 2, 3, "(0,-2)", "classical binary list"},
        {"ord3_c", 2, 3, "(-2,0)", "classical binary list"},
        {"grozman", 2, 3, "(-2/3,-2/3)", "Grozman operator"},
        {"ff_delta3", 3, 3, "(l,l,l)", "antisymmetric determinant family"},
        {"ff_d_delta3", 3, 4, "(-1,-1,-1)", "antisymmetric determinant family"},
        {"ff_delta3_ddd", 3, 6, "(0,0,0)", "antisymmetric determinant family"},
        {"ff_upsilon", 3, 6, "(-5/4,-5/4,-5/4)", "antisymmetric determinant family"},
        {"theta_plus", 3, 5, "kappa=-3/4-1/12*sqrt21 triple", "antisymmetric determinant family"},
        {"theta_minus", 3, 5, "kappa=-3/4+1/12*sqrt21 triple", "antisymmetric determinant family"},
        {"delta3", 3, 3, "any (l,g,t)", "new ternary family"},
        {"xi", 3, 4, "(-t-3/2,t,t), t != -3/4", "new ternary family"},
        {"xi_st", 3, 4, "(-3/4,-3/4,-3/4), params (s,t)", "new ternary family"},
        {"gamma", 3, 5, "(-2/3,-2/3,-4/3)", "new ternary family"},
    };
}

} // namespace transvect
