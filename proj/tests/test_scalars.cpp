#include <doctest.h>

#include "intamp/ball.hpp"
#include "intamp/quad.hpp"

using namespace intamp;

TEST_SUITE("scalars") {

TEST_CASE("rational parsing and printing") {
    CHECK(parse_rat("3/6") == Rat(1, 2));
    CHECK(parse_rat("-4") == Rat(-4));
    CHECK(rat_str(Rat(-3, 9)) == "-1/3");
    CHECK(rat_str(Rat(7)) == "7");
    CHECK_THROWS_AS(parse_rat("1/0"), InputError);
    CHECK_THROWS_AS(parse_rat("x"), InputError);
}

TEST_CASE("rational kth roots") {
    Rat r;
    CHECK(rational_kth_root(Rat(1296, 1), 4, r));
    CHECK(r == 6);
    CHECK(rational_square_root(Rat(9, 4), r));
    CHECK(r == Rat(3, 2));
    CHECK_FALSE(rational_square_root(Rat(2), r));
    CHECK(rational_kth_root(Rat(0), 3, r));
    CHECK(r == 0);
}

TEST_CASE("floor_log2") {
    CHECK(floor_log2(Rat(1)) == 0);
    CHECK(floor_log2(Rat(9, 2)) == 2);
    CHECK(floor_log2(Rat(1, 3)) == -2);
    CHECK(floor_log2(Rat(-8)) == 3);
}

TEST_CASE("dyadic arithmetic is exact") {
    Dyadic a(Int(3), -2), b(Int(5), -4);  // 3/4 and 5/16
    CHECK((a + b).to_rat() == Rat(17, 16));
    CHECK((a * b).to_rat() == Rat(15, 64));
    CHECK((a - a).is_zero());
    Dyadic neg(Int(-12), 0);
    CHECK(neg.man == -3);  // normalized
    CHECK(neg.exp == 2);
}

TEST_CASE("dyadic rounding bounds the error") {
    Dyadic x(Int((1 << 20) + 1), -30);
    Dyadic err;
    Dyadic r = dyadic_round(x, 8, &err);
    Rat diff = x.to_rat() - r.to_rat();
    CHECK(rat_abs(diff) <= err.to_rat());
    CHECK(r.bits() <= 8);
}

TEST_CASE("dyadic sqrt bounds bracket the true value") {
    Rat x(2);
    Rat lo = dyadic_sqrt_lower(x, 40).to_rat();
    Rat hi = dyadic_sqrt_upper(x, 40).to_rat();
    CHECK(lo * lo <= x);
    CHECK(hi * hi >= x);
    CHECK(hi - lo < Rat(1, Int(1) << 30));
}

TEST_CASE("complex ball product encloses the exact product") {
    ComplexBall a = cb_from_rat(Rat(1, 3), Rat(2, 7), 64);
    ComplexBall b = cb_from_rat(Rat(-5, 11), Rat(1, 2), 64);
    ComplexBall p = cb_mul(a, b, 64);
    // exact product of the centers must be inside
    GaussRat za{Rat(1, 3), Rat(2, 7)}, zb{Rat(-5, 11), Rat(1, 2)};
    GaussRat zp = za * zb;
    CHECK(p.contains(zp.re, zp.im));
}

TEST_CASE("ball disjointness is exact") {
    ComplexBall a(Dyadic(Int(0), 0), Dyadic(), Dyadic(Int(1), -1));
    ComplexBall b(Dyadic(Int(1), 0), Dyadic(), Dyadic(Int(1), -1));
    CHECK_FALSE(cb_disjoint(a, b));  // tangent disks intersect
    ComplexBall c(Dyadic(Int(2), 0), Dyadic(), Dyadic(Int(1), -2));
    CHECK(cb_disjoint(a, c));
}

TEST_CASE("quadratic order arithmetic, d = -1") {
    QuadElem i(Rat(0), Rat(1), -1);
    CHECK(i * i == QuadElem::from_rat(Rat(-1), -1));
    QuadElem z(Rat(2), Rat(3), -1);
    CHECK(z.norm() == 13);
    CHECK(z.trace() == 4);
    CHECK(z * z.inverse() == QuadElem::from_rat(Rat(1), -1));
}

TEST_CASE("quadratic order arithmetic, d = -3 (omega = (1+sqrt(-3))/2)") {
    QuadElem w(Rat(0), Rat(1), -3);
    // omega^2 = omega - 1
    CHECK(w * w == QuadElem(Rat(-1), Rat(1), -3));
    CHECK(w.norm() == 1);
    CHECK(w.trace() == 1);
    // sixth root of unity
    QuadElem p = w;
    for (int k = 1; k < 6; ++k) p = p * w;
    CHECK(p == QuadElem::from_rat(Rat(1), -3));
}

TEST_CASE("ring tags are enforced") {
    QuadElem a(Rat(1), Rat(1), -1), b(Rat(1), Rat(1), -2);
    CHECK_THROWS_AS(a + b, RingMismatchError);
    CHECK_FALSE(valid_discriminant(-4));  // not squarefree
    CHECK_FALSE(valid_discriminant(5));   // not negative
    CHECK(valid_discriminant(-7));
}

TEST_CASE("embedding is certified") {
    for (long d : {-1L, -2L, -3L, -5L, -7L}) {
        QuadElem w(Rat(0), Rat(1), d);
        ComplexBall e = embed(w, 128);
        // omega satisfies omega^2 - v*omega - u = 0
        Rat u, v;
        QuadElem::omega_sq(d, u, v);
        ComplexBall sq = cb_mul(e, e, 128);
        // the ball of omega^2 and of u + v*omega must intersect
        ComplexBall lin = cb_add(cb_from_rat(u, Rat(0), 128),
                                 cb_mul(cb_from_rat(v, Rat(0), 128), e, 128), 128);
        CHECK_FALSE(cb_disjoint(sq, lin));
        CHECK(e.rad.to_rat() <= Rat(2, Int(1) << 127));
    }
}

TEST_CASE("gaussian embedding matches for d = -1") {
    QuadElem z(Rat(3, 2), Rat(-7), -1);
    GaussRat g = embed_gauss(z);
    CHECK(g.re == Rat(3, 2));
    CHECK(g.im == Rat(-7));
    CHECK(g.norm() == z.norm());
}

}  // TEST_SUITE
