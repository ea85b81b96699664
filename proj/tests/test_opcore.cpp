#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "transvect/catalog.hpp"
#include "transvect/densities.hpp"
#include "transvect/io.hpp"
#include "transvect/op.hpp"

#include "oracle.hpp"

#include <random>

using namespace transvect;

namespace {

using Density = WeightedDensity<Rational>;

std::mt19937_64 rng(4242);

Rational small_rat() {
    return rat(static_cast<long long>(rng() % 9) - 4, 1 + static_cast<long long>(rng() % 3));
}

DensityOp<Rational> random_ternary(int order) {
    std::vector<Rational> w = {small_rat(), small_rat(), small_rat()};
    std::map<MultiIndex, Rational> c;
    for (const auto& idx : index_set(3, order))
        if (rng() % 2)
            c[idx] = small_rat();
    return DensityOp<Rational>(w, order, std::move(c));
}

Permutation3 random_perm() { return Permutation3::all()[rng() % 6]; }

} // namespace

TEST_CASE("target weight is derived") {
    CHECK(target_weight(delta3(Rational(1), Rational(2), Rational(3))) == Rational(9));
    CHECK(target_weight(xi(Rational(1))) == rat(7, 2));
    auto mul = multiplication<Rational>({rat(1, 2), rat(-1, 3), rat(2, 7)});
    CHECK(target_weight(mul) == rat(1, 2) + rat(-1, 3) + rat(2, 7));
}

TEST_CASE("operator construction validates its table") {
    CHECK_THROWS_AS(DensityOp<Rational>({Rational(0)}, 1, {{{2}, Rational(1)}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(DensityOp<Rational>({Rational(0), Rational(0)}, 1, {{{1}, Rational(1)}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(DensityOp<Rational>({}, 0, {}), std::invalid_argument);
    // zero coefficients are pruned, zero table is flagged degenerate
    auto zero = poisson(Rational(0), Rational(0));
    CHECK(zero.is_zero());
}

TEST_CASE("permute matches argument permutation pointwise") {
    for (int trial = 0; trial < 40; ++trial) {
        auto op = random_ternary(1 + static_cast<int>(rng() % 3));
        auto sigma = random_perm();
        auto permuted = permute(op, sigma);
        std::vector<int> degs = {static_cast<int>(rng() % 5), static_cast<int>(rng() % 5),
                                 static_cast<int>(rng() % 5)};
        std::vector<Density> args, back;
        for (int p = 0; p < 3; ++p)
            args.push_back(Density::monomial(degs[p], permuted.source_weights()[p]));
        // sigma^{-1} args feeds the original operator
        auto inv = sigma.inverse();
        back = inv.apply(args);
        CHECK(apply_op(permuted, args) == apply_op(op, back));
    }
}

TEST_CASE("permute composition and identity laws") {
    auto op = random_ternary(3);
    CHECK(permute(op, Permutation3::identity()) == op);
    for (int trial = 0; trial < 30; ++trial) {
        auto s = random_perm(), t = random_perm();
        CHECK(permute(permute(op, t), s) == permute(op, s * t));
    }
    // transposition on the Poisson-type ternary table swaps the indices
    auto bracket_mul =
        insert(multiplication<Rational>({Rational(3), Rational(2)}), 1, poisson(Rational(1), Rational(1)));
    auto swapped = permute(bracket_mul, Permutation3::transposition(1, 2));
    CHECK(swapped.coeff({0, 1, 0}) == bracket_mul.coeff({1, 0, 0}));
    CHECK(swapped.coeff({1, 0, 0}) == bracket_mul.coeff({0, 1, 0}));
}

TEST_CASE("dualize weights and involution") {
    // order 0: no derivatives move, only the weights change
    auto mul = multiplication<Rational>({Rational(1), Rational(2), Rational(3)});
    auto dual = dualize(mul, 1);
    CHECK(dual.source_weights() ==
          std::vector<Rational>{Rational(1) - Rational(6), Rational(2), Rational(3)});
    CHECK(dual.coeffs() == mul.coeffs());

    for (int trial = 0; trial < 30; ++trial) {
        auto op = random_ternary(static_cast<int>(rng() % 4));
        for (int slot = 1; slot <= 3; ++slot)
            CHECK(dualize(dualize(op, slot), slot) == op);
    }
    CHECK_THROWS_AS(dualize(mul, 0), std::invalid_argument);
    CHECK_THROWS_AS(dualize(mul, 4), std::invalid_argument);
}

TEST_CASE("dualize expands by parts with alternating sign and Leibniz weights") {
    // phi' psi chi dualized in slot 1: the pairing moves one derivative,
    // giving -(omega psi chi)' = -w' p c - w p' c - w p c'
    auto a = DensityOp<Rational>::elementary({Rational(1), Rational(2), Rational(3)}, {1, 0, 0});
    auto dual = dualize(a, 1);
    CHECK(dual.coeffs() ==
          std::map<MultiIndex, Rational>{{{1, 0, 0}, Rational(-1)},
                                         {{0, 1, 0}, Rational(-1)},
                                         {{0, 0, 1}, Rational(-1)}});
    CHECK(dual.source_weights() ==
          std::vector<Rational>{Rational(1) - Rational(7), Rational(2), Rational(3)});

    // two derivatives: phi'' psi chi -> +(omega psi chi)'' with binomials
    auto b = DensityOp<Rational>::elementary({Rational(0), Rational(0), Rational(0)}, {2, 0, 0});
    auto dual2 = dualize(b, 1);
    CHECK(dual2.coeff({2, 0, 0}) == Rational(1));
    CHECK(dual2.coeff({1, 1, 0}) == Rational(2));
    CHECK(dual2.coeff({0, 1, 1}) == Rational(2));
    CHECK(dual2.coeff({0, 2, 0}) == Rational(1));
}

TEST_CASE("dualize of an invariant operator is invariant at the dual weights") {
    auto op = delta3(Rational(1), Rational(2), Rational(3));
    for (int slot = 1; slot <= 3; ++slot) {
        auto dual = dualize(op, slot);
        CHECK(oracle::invariant(dual));
    }
    // the bracket-times-density operator stays in the kernel after dualizing
    auto bracket_mul = insert(multiplication<Rational>({Rational(4), rat(1, 2)}), 1,
                              poisson(Rational(1), Rational(2)));
    auto dual = dualize(bracket_mul, 1);
    auto K = kernel(build_system(dual.order(), dual.source_weights(), full_r_set(dual.order())));
    CHECK(K.contains(dual));
}

TEST_CASE("insert composes coefficient tables") {
    // second derivative from a raw first-derivative table at matching weight;
    // the composition is purely coefficient-level and not invariant.
    auto d_at_one = DensityOp<Rational>::elementary({Rational(1)}, {1});
    auto dd = insert(d_at_one, 1, de_rham<Rational>());
    CHECK(dd.arity() == 1);
    CHECK(dd.order() == 2);
    CHECK(dd.coeffs() == std::map<MultiIndex, Rational>{{{2}, Rational(1)}});

    // weight precondition: d expects source weight 0, d produces 1
    CHECK_THROWS_AS(insert(de_rham<Rational>(), 1, de_rham<Rational>()), std::domain_error);
    CHECK_THROWS_AS(insert(de_rham<Rational>(), 2, de_rham<Rational>()), std::invalid_argument);

    // arity overflow: ternary into binary slot
    auto mul2 = multiplication<Rational>({Rational(9), Rational(0)});
    CHECK_THROWS_AS(insert(mul2, 1, delta3(Rational(1), Rational(2), Rational(3))),
                    std::invalid_argument);

    // multiply-by-density insertion reproduces the Gz (x) id pattern
    auto gz = grozman<Rational>();
    auto gz_times = insert(multiplication<Rational>({rat(5, 3), rat(-2, 3)}), 1, gz);
    CHECK(gz_times.arity() == 3);
    CHECK(gz_times.order() == 3);
    for (const auto& [idx, val] : gz.coeffs())
        CHECK(gz_times.coeff({idx[0], idx[1], 0}) == val);
    CHECK(gz_times.coeff({1, 1, 1}) == Rational(0));
}

TEST_CASE("insert agrees with pointwise composition") {
    // {d{phi,chi},psi} at the weights where the inner bracket lands at 0
    const Rational l(1), g(1), t(-2);
    auto inner = insert(de_rham<Rational>(), 1, poisson(l, t));
    auto outer = insert(poisson(Rational(1), g), 1, inner);
    auto op = permute(outer, Permutation3::transposition(2, 3));
    CHECK(op.source_weights() == std::vector<Rational>{l, g, t});
    CHECK(op.order() == 3);
    CHECK(oracle::invariant(op));

    for (int trial = 0; trial < 25; ++trial) {
        std::vector<int> degs = {static_cast<int>(rng() % 5), static_cast<int>(rng() % 5),
                                 static_cast<int>(rng() % 5)};
        Density phi = Density::monomial(degs[0], l), psi = Density::monomial(degs[1], g),
                chi = Density::monomial(degs[2], t);
        auto direct = apply_op(op, {phi, psi, chi});
        auto bracket_pc = apply_op(poisson(l, t), {phi, chi});
        auto d_bracket = apply_op(de_rham<Rational>(), {bracket_pc});
        auto expected = apply_op(poisson(Rational(1), g), {d_bracket, psi});
        CHECK(direct.coeffs == expected.coeffs);
    }
}

TEST_CASE("nested insertions into disjoint slots commute") {
    auto base = ff_delta3<Rational>(Rational(1));
    auto d = de_rham<Rational>();
    auto left = insert(insert(base, 1, d), 2, d);
    auto right = insert(insert(base, 2, d), 1, d);
    CHECK(left == right);
    auto all_first = insert(insert(insert(base, 1, d), 2, d), 3, d);
    auto all_last = insert(insert(insert(base, 3, d), 2, d), 1, d);
    CHECK(all_first == all_last);
    CHECK(all_first == ff_delta3_ddd<Rational>());
}

TEST_CASE("json round-trip is exact and sorted") {
    auto op = delta3(rat(-2, 3), rat(1, 2), rat(-5, 4));
    json j = op_to_json(op);
    CHECK(op_from_json<Rational>(j) == op);
    // indices appear in lexicographic order
    MultiIndex prev{-1, -1, -1};
    for (const auto& entry : j["coeffs"]) {
        MultiIndex idx = entry["idx"].get<MultiIndex>();
        CHECK(prev < idx);
        prev = idx;
    }
    auto qop = ff_theta(-1);
    json qj = op_to_json(qop);
    CHECK(op_from_json<QuadExt>(qj) == qop);
}
