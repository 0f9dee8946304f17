#include <doctest.h>

#include "intamp/rootloc.hpp"

using namespace intamp;

namespace {
RatPoly P(std::initializer_list<long> coeffs) {
    std::vector<Rat> c;
    for (long x : coeffs) c.emplace_back(x);
    return RatPoly(std::move(c));
}
CircleProfile prof(long in, long on, long out, Rat rsq = Rat(1)) {
    return {in, on, out, std::move(rsq)};
}
}  // namespace

TEST_SUITE("rootloc") {

TEST_CASE("unit circle profiles") {
    CHECK(circle_profile(P({1, 0, 1}), Rat(1)) == prof(0, 2, 0));      // x^2+1
    CHECK(circle_profile(P({-2, 1}), Rat(1)) == prof(0, 0, 1));        // x-2
    CHECK(circle_profile(P({36, 108, 1}), Rat(1)) == prof(1, 0, 1));   // x^2+108x+36
    CHECK(circle_profile(P({0, 0, 1}), Rat(1)) == prof(2, 0, 0));      // x^2
    CHECK(circle_profile(P({-1, 0, 0, 1}), Rat(1)) == prof(0, 3, 0));  // x^3-1
    // degenerate Schur-Cohn step: x^2 + 1/2
    CHECK(circle_profile(RatPoly({Rat(1, 2), Rat(0), Rat(1)}), Rat(1)) == prof(2, 0, 0));
    // roots at +-1 with multiplicity
    CHECK(circle_profile(P({-1, 1}) * P({-1, 1}) * P({1, 1}), Rat(1)) == prof(0, 3, 0));
}

TEST_CASE("scaled radius") {
    RatPoly q = P({-6, 1}) * P({-6, 1}) * P({36, 8, 1});
    CHECK(circle_profile(q, Rat(36)) == prof(0, 4, 0, Rat(36)));
    CHECK(circle_profile(q, Rat(25)) == prof(0, 0, 4, Rat(25)));
    CHECK(circle_profile(q, Rat(49)) == prof(4, 0, 0, Rat(49)));
    CHECK(circle_profile(P({-1, 2}), Rat(1, 4)) == prof(0, 1, 0, Rat(1, 4)));
    CHECK_THROWS_AS(circle_profile(q, Rat(2)), MathError);   // non-square radius
    CHECK_THROWS_AS(circle_profile(q, Rat(0)), MathError);
    CHECK_THROWS_AS(circle_profile(RatPoly(), Rat(1)), ZeroPolynomialError);
}

TEST_CASE("profile counts multiplicity") {
    RatPoly p = P({1, 0, 1}) * P({1, 0, 1}) * P({-3, 1});
    CHECK(circle_profile(p, Rat(1)) == prof(0, 4, 1));
}

TEST_CASE("same modulus verdicts") {
    RatPoly q = (P({-6, 1}) * P({-6, 1}) * P({36, 8, 1})).monic();
    auto v = same_modulus(q);
    CHECK(v.kind == ModulusVerdict::Kind::AllEqual);
    CHECK(v.q_sq == 36);

    CHECK(same_modulus(P({6, -5, 1})).kind == ModulusVerdict::Kind::NotAllEqual);

    // the self-reciprocity trap: (x-2)(x-1/2) = x^2 - 5/2 x + 1 satisfies
    // x^n p(1/x) = p(x) yet the moduli differ; the ratio certificate sees it
    auto trap = same_modulus(RatPoly({Rat(1), Rat(-5, 2), Rat(1)}));
    CHECK(trap.kind == ModulusVerdict::Kind::NotAllEqual);

    auto irr = same_modulus(P({-3, 0, 1}));  // roots +-sqrt(3)
    CHECK(irr.kind == ModulusVerdict::Kind::AllEqual);
    CHECK(irr.q_sq == 3);

    // golden ratio pair: same char poly trace as modulus arguments often trip on
    CHECK(same_modulus(P({-1, -1, 1})).kind == ModulusVerdict::Kind::NotAllEqual);

    // zero roots mixed with nonzero ones
    CHECK(same_modulus(P({0, -2, 1})).kind == ModulusVerdict::Kind::NotAllEqual);
    auto zeros = same_modulus(P({0, 0, 1}));
    CHECK(zeros.kind == ModulusVerdict::Kind::AllEqual);
    CHECK(zeros.q_sq == 0);

    // modulus^2 irrational: roots of x^4 - x^2 - 1 paired as q^2 = golden ratio
    CHECK(same_modulus(P({-1, 0, -1, 0, 1})).kind != ModulusVerdict::Kind::AllEqual);
}

TEST_CASE("same modulus requires monic input") {
    CHECK_THROWS_AS(same_modulus(P({1, 2})), MathError);
}

TEST_CASE("diagonalizability") {
    RatMatrix J(2, 2, {Rat(4), Rat(1), Rat(0), Rat(4)});
    CHECK_FALSE(is_diagonalizable(J));
    RatMatrix D(2, 2, {Rat(4), Rat(0), Rat(1), Rat(5)});
    CHECK(is_diagonalizable(D));
}

TEST_CASE("root balls isolate and certify") {
    RatPoly p = P({-1, 1}) * P({-1, 1}) * P({1, 0, 1});
    auto balls = root_balls(p, 64);
    REQUIRE(balls.size() == 3);
    long total = 0;
    for (const auto& rb : balls) total += rb.multiplicity;
    CHECK(total == 4);
    for (size_t i = 0; i < balls.size(); ++i)
        for (size_t j = i + 1; j < balls.size(); ++j)
            CHECK(cb_disjoint(balls[i].ball, balls[j].ball));
    // one ball contains 1 (multiplicity 2), two contain +-i
    int hit1 = 0, hiti = 0;
    for (const auto& rb : balls) {
        if (rb.ball.contains(Rat(1), Rat(0))) {
            CHECK(rb.multiplicity == 2);
            ++hit1;
        }
        if (rb.ball.contains(Rat(0), Rat(1)) || rb.ball.contains(Rat(0), Rat(-1))) {
            CHECK(rb.multiplicity == 1);
            ++hiti;
        }
    }
    CHECK(hit1 == 1);
    CHECK(hiti == 2);
}

TEST_CASE("root ball radii respect the precision contract") {
    RatPoly p = P({36, 108, 1});
    for (const auto& rb : root_balls(p, 100)) {
        Rat scale = rb.ball.center_norm();
        if (scale < 1) scale = 1;
        Rat r = rb.ball.rad.to_rat();
        CHECK(r * r <= scale / Rat(Int(1) << 198));  // (2^(1-100))^2 * max(1,|c|)^2
    }
}

TEST_CASE("schur-cohn counts match on easy cases") {
    auto sc = detail::schur_cohn_counts(P({36, 108, 1}));
    REQUIRE(sc.has_value());
    CHECK(sc->first == 1);
    CHECK(sc->second == 1);
    // x^2 + 1/2: both roots inside the unit circle
    auto sc2 = detail::schur_cohn_counts(RatPoly({Rat(1, 2), Rat(0), Rat(1)}));
    REQUIRE(sc2.has_value());
    CHECK(sc2->first == 2);
    CHECK(sc2->second == 0);
    // |a_0| = |a_n| makes the first gamma vanish: nullopt, caller falls back to balls
    CHECK_FALSE(detail::schur_cohn_counts(P({1, 4, 1})).has_value());
}

TEST_CASE("resultant agrees with root products") {
    // Res(x-2, x-3) = -1 * ... = 3-2? convention: lc(A)^degB * prod B over roots of A
    Rat r = detail::resultant(P({-2, 1}), P({-3, 1}));
    CHECK(rat_abs(r) == 1);
    CHECK(detail::resultant(P({-2, 1}), P({-2, 1})) == 0);
    // Res(x^2-1, x^2-4) = (1-4)(1-4)... = product of q(roots of p) = (-3)(-3) = 9
    CHECK(detail::resultant(P({-1, 0, 1}), P({-4, 0, 1})) == 9);
}

}  // TEST_SUITE
