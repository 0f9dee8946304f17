#include <doctest.h>

#include "intamp/cone.hpp"
#include "intamp/rootloc.hpp"

using namespace intamp;

namespace {
std::vector<Rat> vec(std::initializer_list<long> xs) {
    std::vector<Rat> v;
    for (long x : xs) v.emplace_back(x);
    return v;
}
PolyCone orthant(long n) {
    std::vector<std::vector<Rat>> g;
    for (long i = 0; i < n; ++i) {
        std::vector<Rat> e(n, Rat(0));
        e[i] = 1;
        g.push_back(std::move(e));
    }
    return {n, std::move(g)};
}
}  // namespace

TEST_SUITE("lp") {

TEST_CASE("simplex solves a small problem") {
    // max x + y s.t. x + y + s = 4, x, y, s >= 0
    std::vector<std::vector<Rat>> A = {vec({1, 1, 1})};
    auto res = lp_solve(A, {Rat(4)}, {Rat(1), Rat(1), Rat(0)});
    REQUIRE(res.status == LpStatus::Optimal);
    CHECK(res.objective == 4);
}

TEST_CASE("farkas certificate on infeasible system") {
    // x1 - x2 = 1 and -x1 + x2 = 1 cannot both hold with x >= 0
    std::vector<std::vector<Rat>> A = {vec({1, -1}), vec({-1, 1})};
    auto res = lp_solve(A, {Rat(1), Rat(1)}, {Rat(0), Rat(0)});
    REQUIRE(res.status == LpStatus::Infeasible);
    REQUIRE(res.farkas_y.size() == 2);
    // y^T A <= 0 and y^T b > 0
    Rat yb = res.farkas_y[0] + res.farkas_y[1];
    CHECK(yb > 0);
    for (long j = 0; j < 2; ++j) {
        Rat col = res.farkas_y[0] * A[0][j] + res.farkas_y[1] * A[1][j];
        CHECK(col <= 0);
    }
}

TEST_CASE("unbounded detection") {
    std::vector<std::vector<Rat>> A = {vec({1, -1})};
    auto res = lp_solve(A, {Rat(0)}, {Rat(1), Rat(0)});
    CHECK(res.status == LpStatus::Unbounded);
}

}  // TEST_SUITE

TEST_SUITE("cone") {

TEST_CASE("membership with certificates") {
    PolyCone C = orthant(2);
    auto in = cone_contains(C, vec({2, 3}), false);
    REQUIRE(in.member);
    // certificate recombines exactly
    std::vector<Rat> rebuilt(2, Rat(0));
    for (size_t j = 0; j < C.generators.size(); ++j)
        for (long i = 0; i < 2; ++i) rebuilt[i] += in.combination[j] * C.generators[j][i];
    CHECK(rebuilt == vec({2, 3}));

    auto out = cone_contains(C, vec({-1, 0}), false);
    REQUIRE_FALSE(out.member);
    REQUIRE(out.separator.size() == 2);
    // separator nonnegative on generators, negative on the point
    for (const auto& g : C.generators) {
        Rat s = out.separator[0] * g[0] + out.separator[1] * g[1];
        CHECK(s >= 0);
    }
    CHECK(out.separator[0] * Rat(-1) < 0);

    CHECK_FALSE(cone_contains(C, vec({1, 0}), true).member);  // boundary
    CHECK(cone_contains(C, vec({1, 1}), true).member);
    CHECK_THROWS_AS(cone_contains(C, vec({1, 2, 3}), false), DimensionMismatchError);
}

TEST_CASE("relative interior of a low-dimensional cone") {
    PolyCone ray(2, {vec({1, 1})});
    CHECK(cone_contains(ray, vec({3, 3}), true).member);
    CHECK_FALSE(cone_contains(ray, vec({1, 2}), false).member);
    CHECK_FALSE(cone_contains(ray, vec({0, 0}), true).member);
}

TEST_CASE("cone flags") {
    CHECK(orthant(3).full_dimensional());
    CHECK(orthant(3).pointed());
    PolyCone half(2, {vec({1, 0}), vec({-1, 0}), vec({0, 1})});
    CHECK_FALSE(half.pointed());
    PolyCone flat(3, {vec({1, 0, 0}), vec({0, 1, 0})});
    CHECK_FALSE(flat.full_dimensional());
}

TEST_CASE("invariance") {
    RatMatrix two = Rat(2) * RatMatrix::identity(2);
    CHECK(is_invariant(two, orthant(2)));
    RatMatrix rot(2, 2, {Rat(0), Rat(-1), Rat(1), Rat(0)});
    CHECK_FALSE(is_invariant(rot, orthant(2)));
    RatMatrix swap(2, 2, {Rat(0), Rat(1), Rat(1), Rat(0)});
    CHECK(is_invariant(swap, orthant(2)));
}

TEST_CASE("pf lemma verifier") {
    RatMatrix d23(2, 2, {Rat(2), Rat(0), Rat(0), Rat(3)});
    auto rep = verify_pf_lemma(d23, orthant(2));
    CHECK(rep.premise_ok);
    CHECK(rep.spectral_ok);
    REQUIRE(rep.ell.size() == 2);
    // h = phi(ell) - ell must match the report
    for (long i = 0; i < 2; ++i) {
        Rat h = d23.at(i, i) * rep.ell[i] - rep.ell[i];
        CHECK(h == rep.h[i]);
        CHECK(h > 0);
    }

    RatMatrix half(2, 2, {Rat(2), Rat(0), Rat(0), Rat(1, 2)});
    CHECK(is_invariant(half, orthant(2)));  // positive rescaling of rays keeps C = phi(C)
    RatMatrix squeeze(2, 2, {Rat(3), Rat(2), Rat(2), Rat(4)});
    CHECK_FALSE(is_invariant(squeeze, orthant(2)));  // image cone is strictly inside
    RatMatrix one(2, 2, {Rat(1), Rat(0), Rat(0), Rat(2)});
    auto rep2 = verify_pf_lemma(one, orthant(2));
    CHECK_FALSE(rep2.premise_ok);  // phi(ell)-ell never interior on the first axis

    RatMatrix rot(2, 2, {Rat(0), Rat(-1), Rat(1), Rat(0)});
    CHECK_THROWS_AS(verify_pf_lemma(rot, orthant(2)), NotInvariantError);
}

TEST_CASE("orbit cone witness") {
    RatMatrix two = Rat(2) * RatMatrix::identity(2);
    auto rep = orbit_cone_witness(two, vec({1, 1}), 8);
    REQUIRE(rep.least_m.has_value());
    CHECK(*rep.least_m == 1);

    RatMatrix d23(2, 2, {Rat(2), Rat(0), Rat(0), Rat(3)});
    auto rep2 = orbit_cone_witness(d23, vec({1, 1}), 8);
    REQUIRE(rep2.least_m.has_value());
    CHECK(*rep2.least_m == 2);
    // trace records the failed first step
    REQUIRE(rep2.partial_sum_trace.size() >= 2);
    CHECK_FALSE(rep2.partial_sum_trace[0].second);
    CHECK(rep2.partial_sum_trace[1].second);

    // v = 0 degenerate case: e = 0
    auto rep3 = orbit_cone_witness(two, vec({0, 0}), 8);
    CHECK(rep3.least_m.has_value());
    CHECK(*rep3.least_m == 0);

    RatMatrix shrink(2, 2, {Rat(2), Rat(0), Rat(0), Rat(1, 2)});
    CHECK_THROWS_AS(orbit_cone_witness(shrink, vec({1, 1}), 8), SpectrumNotExpandingError);
}

}  // TEST_SUITE
