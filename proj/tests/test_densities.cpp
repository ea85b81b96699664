#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "transvect/catalog.hpp"
#include "transvect/densities.hpp"

#include <random>

using namespace transvect;

namespace {

using Density = WeightedDensity<Rational>;
using Field = VectorField1D<Rational>;

std::mt19937_64 rng(911);

std::vector<Rational> random_poly(int maxdeg) {
    int deg = static_cast<int>(rng() % (maxdeg + 1));
    std::vector<Rational> c(deg + 1);
    for (auto& v : c)
        v = rat(static_cast<long long>(rng() % 11) - 5, 1 + static_cast<long long>(rng() % 3));
    return c;
}

} // namespace

TEST_CASE("lie derivative on monomials") {
    // d/dx on x^2 (dx)^l is 2x (dx)^l for any l
    Density phi({Rational(0), Rational(0), Rational(1)}, rat(5, 7));
    auto out = lie_derivative(Field::monomial(0), phi);
    CHECK(out.coeffs == std::vector<Rational>{Rational(0), Rational(2)});
    CHECK(out.weight == rat(5, 7));

    // Euler field: x d/dx scales x^m (dx)^l by (m + l)
    for (int m = 0; m <= 4; ++m) {
        Density mono = Density::monomial(m, rat(-2, 3));
        auto eig = lie_derivative(Field::monomial(1), mono);
        CHECK(eig == WeightedDensity<Rational>(
                         poly::scale(Rational(m) + rat(-2, 3), mono.coeffs), rat(-2, 3)));
    }

    // x^3 d/dx on x (dx)^2: f phi' + 2 f' phi = x^3 + 6x^3 = 7x^3
    Density lin = Density::monomial(1, Rational(2));
    auto cubic = lie_derivative(Field::monomial(3), lin);
    CHECK(cubic.coeffs == std::vector<Rational>{Rational(0), Rational(0), Rational(0), Rational(7)});
}

TEST_CASE("apply_op basics") {
    auto mul = multiplication<Rational>({rat(1, 2), rat(1, 3), rat(1, 5)});
    std::vector<Density> args = {Density::monomial(1, rat(1, 2)), Density::monomial(2, rat(1, 3)),
                                 Density::monomial(3, rat(1, 5))};
    auto prod = apply_op(mul, args);
    CHECK(prod.degree() == 6);
    CHECK(prod.coeffs[6] == Rational(1));
    CHECK(prod.weight == rat(1, 2) + rat(1, 3) + rat(1, 5));

    // Gz(x^3, 1) = 2 (x^3)''' * 1 = 12 at weight 5/3
    auto gz = grozman<Rational>();
    std::vector<Density> gz_args = {Density::monomial(3, rat(-2, 3)),
                                    Density::monomial(0, rat(-2, 3))};
    auto out = apply_op(gz, gz_args);
    CHECK(out.coeffs == std::vector<Rational>{Rational(12)});
    CHECK(out.weight == rat(5, 3));

    // zero in, zero out
    std::vector<Density> zeros = {Density({}, rat(-2, 3)), Density({}, rat(-2, 3))};
    CHECK(apply_op(gz, zeros).is_zero());

    CHECK_THROWS_AS(apply_op(gz, args), std::invalid_argument); // arity mismatch
    std::vector<Density> wrong = {Density::monomial(1, Rational(0)),
                                  Density::monomial(1, rat(-2, 3))};
    CHECK_THROWS_AS(apply_op(gz, wrong), std::invalid_argument); // weight mismatch
}

TEST_CASE("defect detects invariance and its failure") {
    // multiplication is invariant under x^3 d/dx for any weights
    auto mul = multiplication<Rational>({Rational(1), Rational(2), Rational(3)});
    std::vector<Density> args = {Density::monomial(2, Rational(1)), Density::monomial(1, Rational(2)),
                                 Density::monomial(3, Rational(3))};
    CHECK(defect(mul, Field::monomial(3), args).is_zero());

    // {phi,psi}.chi at weights (1,1,0) under x^2 d/dx on x (x) x (x) 1
    auto bracket_mul =
        insert(multiplication<Rational>({Rational(3), Rational(0)}), 1, poisson(Rational(1), Rational(1)));
    std::vector<Density> margs = {Density::monomial(1, Rational(1)),
                                  Density::monomial(1, Rational(1)),
                                  Density::monomial(0, Rational(0))};
    CHECK(defect(bracket_mul, Field::monomial(2), margs).is_zero());

    // a lone phi''' psi chi coefficient at (0,0,0) is not invariant
    auto lone = DensityOp<Rational>::elementary({Rational(0), Rational(0), Rational(0)}, {3, 0, 0});
    std::vector<Density> largs = {Density::monomial(3, Rational(0)),
                                  Density::monomial(0, Rational(0)),
                                  Density::monomial(0, Rational(0))};
    CHECK(!defect(lone, Field::monomial(2), largs).is_zero());
}

TEST_CASE("lie derivative is a Lie algebra action") {
    for (int trial = 0; trial < 60; ++trial) {
        Field X(random_poly(4)), Y(random_poly(4));
        Density phi(random_poly(6), rat(static_cast<long long>(rng() % 9) - 4, 1 + static_cast<long long>(rng() % 4)));
        auto lhs = lie_derivative(bracket(X, Y), phi);
        auto xy = lie_derivative(X, lie_derivative(Y, phi));
        auto yx = lie_derivative(Y, lie_derivative(X, phi));
        CHECK(lhs == WeightedDensity<Rational>(poly::add(xy.coeffs, poly::scale(Rational(-1), yx.coeffs)),
                                               phi.weight));
    }
}

TEST_CASE("defect is multilinear in each argument") {
    auto op = delta3(Rational(1), Rational(2), Rational(3));
    Field X = Field::monomial(3);
    for (int trial = 0; trial < 20; ++trial) {
        Density a(random_poly(4), Rational(1)), a2(random_poly(4), Rational(1));
        Density b(random_poly(4), Rational(2)), c(random_poly(4), Rational(3));
        Rational s = rat(static_cast<long long>(rng() % 7) - 3, 1 + static_cast<long long>(rng() % 3));
        Density combo(poly::add(a.coeffs, poly::scale(s, a2.coeffs)), Rational(1));
        auto d_combo = defect(op, X, {combo, b, c});
        auto d_a = defect(op, X, {a, b, c});
        auto d_a2 = defect(op, X, {a2, b, c});
        CHECK(d_combo.coeffs == poly::add(d_a.coeffs, poly::scale(s, d_a2.coeffs)));
    }
}

TEST_CASE("quadext densities work through the same machinery") {
    auto theta = ff_theta(1);
    QuadExt kappa = theta_weight(1);
    std::vector<WeightedDensity<QuadExt>> args = {
        WeightedDensity<QuadExt>::monomial(2, kappa), WeightedDensity<QuadExt>::monomial(4, kappa),
        WeightedDensity<QuadExt>::monomial(1, kappa)};
    CHECK(defect(theta, VectorField1D<QuadExt>::monomial(3), args).is_zero());
    CHECK(!apply_op(theta, args).is_zero());
}
