#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "transvect/catalog.hpp"
#include "transvect/invariance.hpp"

#include "oracle.hpp"

#include <random>

using namespace transvect;

namespace {

std::mt19937_64 rng(60621);

Rational grid_pick() {
    static const auto grid = default_weight_grid();
    return grid[rng() % grid.size()];
}

} // namespace

TEST_CASE("system rows instantiate the three-term recurrence") {
    // k=3, weights (0,0,0), r=3: the row reached from (i,j,l)=(3,0,0) reduces
    // to alpha_{3,0,0} alone since the companion coefficients vanish at 0.
    auto sys = build_system(3, std::vector<Rational>{Rational(0), Rational(0), Rational(0)}, {3});
    bool found = false;
    int col300 = sys.unknown_index({3, 0, 0});
    for (const auto& row : sys.rows)
        if (row.size() == 1 && row.count(col300) && row.at(col300) == Rational(1))
            found = true;
    CHECK(found);

    // generic weights, full row: coefficients are w*C(n,r-1) + C(n,r)
    auto gen = build_system(3, std::vector<Rational>{rat(1, 2), rat(1, 3), rat(1, 5)}, {2});
    int target = gen.unknown_index({2, 1, 0});
    bool checked = false;
    for (const auto& row : gen.rows) {
        // row produced from J=(1,1,0): terms at (2,1,0), (1,2,0), (1,1,1)
        if (row.size() == 3 && row.count(target) && row.count(gen.unknown_index({1, 2, 0})) &&
            row.count(gen.unknown_index({1, 1, 1}))) {
            CHECK(row.at(target) == rat(1, 2) * Rational(2) + Rational(1));
            CHECK(row.at(gen.unknown_index({1, 2, 0})) == rat(1, 3) * Rational(2) + Rational(1));
            CHECK(row.at(gen.unknown_index({1, 1, 1})) == rat(1, 5)); // t*C(1,1) + C(1,2)
            checked = true;
        }
    }
    CHECK(checked);

    // k=0 has no equations
    CHECK(build_system(0, std::vector<Rational>{Rational(1), Rational(2), Rational(3)}, {2, 3})
              .rows.empty());
}

TEST_CASE("kernel dimensions at the classification weight cases") {
    auto dim = [](int k, long long a, long long b, long long c, long long d = 1, long long e = 1,
                  long long f = 1) {
        return classify(k, std::vector<Rational>{rat(a, d), rat(b, e), rat(c, f)}).dimension();
    };
    CHECK(dim(3, 0, 0, 0) == 4);
    CHECK(dim(3, -2, -2, -2, 3, 3, 3) == 3);
    CHECK(dim(3, 1, 2, 3) == 1);
    CHECK(dim(7, 1, 2, -7, 3, 5, 2) == 0);
    CHECK(dim(1, 0, 0, 0) == 3);
    CHECK(dim(4, -3, -3, -3, 4, 4, 4) == 2);
    CHECK(dim(4, 1, 2, 3) == 0);
    // k=0 is the scalar operator's line
    CHECK(classify(0, std::vector<Rational>{rat(1, 2), rat(1, 3), rat(1, 5)}).dimension() == 1);
}

TEST_CASE("kernel vectors satisfy the order-3 solution shape at weight zero") {
    auto K = classify(3, std::vector<Rational>{Rational(0), Rational(0), Rational(0)});
    REQUIRE(K.dimension() == 4);
    for (int i = 0; i < 4; ++i) {
        auto op = K.op(i);
        CHECK(op.coeff({0, 0, 3}).is_zero());
        CHECK(op.coeff({3, 0, 0}).is_zero());
        CHECK(op.coeff({0, 3, 0}).is_zero());
        CHECK(op.coeff({0, 2, 1}) == -op.coeff({0, 1, 2}));
        CHECK(op.coeff({2, 0, 1}) == -op.coeff({1, 0, 2}));
        CHECK(op.coeff({2, 1, 0}) == -op.coeff({1, 2, 0}));
    }
}

TEST_CASE("kernel basis is deterministic reduced echelon") {
    auto K = classify(3, std::vector<Rational>{Rational(0), Rational(0), Rational(0)});
    // pivots strictly increase and lead with coefficient 1
    for (int i = 0; i < K.dimension(); ++i) {
        auto lead = K.lead_positions()[i];
        CHECK(K.vectors[i][lead] == Rational(1));
        if (i)
            CHECK(K.lead_positions()[i - 1] < lead);
        for (int j = 0; j < K.dimension(); ++j)
            if (j != i)
                CHECK(K.vectors[j][lead].is_zero());
    }
    auto again = classify(3, std::vector<Rational>{Rational(0), Rational(0), Rational(0)});
    CHECK(K.vectors == again.vectors);
}

TEST_CASE("generator pair spans the same kernel as the full field list") {
    for (int trial = 0; trial < 25; ++trial) {
        int k = 1 + static_cast<int>(rng() % 6);
        std::vector<Rational> w = {grid_pick(), grid_pick(), grid_pick()};
        auto full = kernel(build_system(k, w, full_r_set(k)));
        auto gen = kernel(build_system(k, w, {2, 3}));
        CHECK(full.dimension() == gen.dimension());
        Nullspace<Rational> a{full.vectors, full.lead_positions()};
        Nullspace<Rational> b{gen.vectors, gen.lead_positions()};
        CHECK(same_space(a, b));
    }
}

TEST_CASE("kernel membership equals brute-force invariance on random cells") {
    for (int trial = 0; trial < 10; ++trial) {
        int k = 1 + static_cast<int>(rng() % 4);
        std::vector<Rational> w = {grid_pick(), grid_pick(), grid_pick()};
        auto K = classify(k, w);
        for (int i = 0; i < K.dimension(); ++i)
            CHECK(oracle::invariant(K.op(i)));
    }
}

TEST_CASE("fast oracle path agrees with the generic oracle") {
    for (int trial = 0; trial < 12; ++trial) {
        int k = 1 + static_cast<int>(rng() % 3);
        std::vector<Rational> w = {grid_pick(), grid_pick(), grid_pick()};
        // random table, random kernel element: both kinds must agree
        std::map<MultiIndex, Rational> c;
        for (const auto& idx : index_set(3, k))
            if (rng() % 2)
                c[idx] = rat(static_cast<long long>(rng() % 7) - 3, 1 + static_cast<long long>(rng() % 2));
        DensityOp<Rational> noise(w, k, std::move(c));
        auto fast = oracle::fast_invariant(noise);
        REQUIRE(fast.has_value());
        CHECK(*fast == oracle::invariant(noise));
        auto K = classify(k, w);
        if (K.dimension() > 0) {
            auto member = K.op(static_cast<int>(rng() % static_cast<uint64_t>(K.dimension())));
            auto fast2 = oracle::fast_invariant(member);
            REQUIRE(fast2.has_value());
            CHECK(*fast2);
        }
    }
}

TEST_CASE("kernel covariance under dualization and permutation") {
    for (int trial = 0; trial < 8; ++trial) {
        int k = 1 + static_cast<int>(rng() % 4);
        std::vector<Rational> w = {grid_pick(), grid_pick(), grid_pick()};
        auto K = classify(k, w);
        if (K.dimension() == 0)
            continue;
        auto op = K.op(static_cast<int>(rng() % static_cast<uint64_t>(K.dimension())));
        int slot = 1 + static_cast<int>(rng() % 3);
        auto dual = dualize(op, slot);
        auto Kdual = classify(k, dual.source_weights());
        CHECK(Kdual.contains(dual));
        auto sigma = Permutation3::all()[rng() % 6];
        auto moved = permute(op, sigma);
        auto Kperm = classify(k, moved.source_weights());
        CHECK(Kperm.contains(moved));
        CHECK(Kperm.dimension() == K.dimension());
    }
}

TEST_CASE("boundary sub-system rank") {
    auto r = rank18_check({rat(1, 2), rat(-3, 1), rat(5, 1)}, 9);
    CHECK(r.rows == 23);
    CHECK(r.cols == 18);
    CHECK(r.rank == 18);

    auto r2 = rank18_check({rat(2, 1), rat(7, 3), rat(-1, 5)}, 8);
    CHECK(r2.rank == 18);

    // With a repeated weight the sub-system rank drops to 17: the surviving
    // null vector is the boundary shadow of an antisymmetric pattern. The
    // full system still has zero kernel there.
    auto sym = rank18_check({Rational(1), Rational(1), Rational(1)}, 8);
    CHECK(sym.rows == 23);
    CHECK(sym.rank == 17);
    CHECK(kernel_dimension(8, {Rational(1), Rational(1), Rational(1)}) == 0);

    CHECK_THROWS_AS(rank18_check({Rational(0), Rational(1), Rational(1)}, 8), std::domain_error);
    CHECK_THROWS_AS(rank18_check({Rational(1), Rational(1), Rational(1)}, 7), std::domain_error);
}

TEST_CASE("match_catalog reports membership and spanning") {
    std::vector<Rational> w(3, rat(-2, 3));
    auto K = classify(3, w);
    auto reps = theorem_representatives<Rational>(3, w);
    REQUIRE(reps.size() == 3);
    auto report = match_catalog(K, reps);
    CHECK(report.all_members());
    CHECK(report.spans);

    // a zero candidate is a member by convention and flagged degenerate
    NamedOps<Rational> degenerate = {{"zero", DensityOp<Rational>::zero(w, 3)}};
    auto dreport = match_catalog(K, degenerate);
    CHECK(dreport.items[0].member);
    CHECK(dreport.items[0].degenerate);
    CHECK(!dreport.spans);

    // shape mismatch is rejected
    NamedOps<Rational> wrong = {{"wrong", delta3(Rational(1), Rational(2), Rational(3))}};
    CHECK_THROWS_AS(match_catalog(K, wrong), std::invalid_argument);

    // a non-member is reported as such
    std::map<MultiIndex, Rational> c{{{3, 0, 0}, Rational(1)}};
    NamedOps<Rational> lone = {{"lone", DensityOp<Rational>(w, 3, std::move(c))}};
    CHECK(!match_catalog(K, lone).items[0].member);
}

TEST_CASE("kernel dimension is invariant under weight permutation") {
    for (int trial = 0; trial < 15; ++trial) {
        int k = 1 + static_cast<int>(rng() % 5);
        std::vector<Rational> w = {grid_pick(), grid_pick(), grid_pick()};
        int d0 = kernel_dimension(k, w);
        for (const auto& sigma : Permutation3::all())
            CHECK(kernel_dimension(k, sigma.apply(w)) == d0);
    }
}

TEST_CASE("quadext kernels through the same engine") {
    QuadExt kappa = theta_weight(-1);
    auto K = classify(5, std::vector<QuadExt>{kappa, kappa, kappa});
    CHECK(K.dimension() == 1);
    CHECK(K.contains(ff_theta(-1)));
    CHECK(!K.contains(permute(ff_theta(-1), Permutation3::identity()) +
                      DensityOp<QuadExt>::elementary({kappa, kappa, kappa}, {5, 0, 0})));
}
