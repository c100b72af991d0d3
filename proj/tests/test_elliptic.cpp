#include "aglcp/elliptic.hpp"

#include <random>

#include "doctest.h"

using namespace aglcp;

namespace {

EllipticCurveRef curve_f8() {  // y^2 + y = x^3 + x + 1 over F_8
    auto F = Field::make(2, 3);
    return EllipticCurve::build(WeierstrassCurve{F, 0, 0, 1, 1, 1});
}

EllipticCurveRef curve_f7() {  // y^2 = x^3 + x over F_7
    auto F = Field::make(7, 1);
    return EllipticCurve::build(WeierstrassCurve{F, 0, 0, 0, 1, 0});
}

}  // namespace

TEST_CASE("group law basics") {
    for (auto E : {curve_f8(), curve_f7()}) {
        std::mt19937_64 rng(3);
        std::uniform_int_distribution<size_t> pick(0, E->points().size() - 1);
        for (auto& P : E->points()) {
            CHECK(E->on_curve(P));
            CHECK(E->add(P, ECPoint::at_infinity()) == P);
            CHECK(E->add(P, E->neg(P)).infinity);
        }
        // associativity on random triples, commutativity exhaustively
        for (int it = 0; it < 10000; ++it) {
            auto P = E->points()[pick(rng)], Q = E->points()[pick(rng)], R = E->points()[pick(rng)];
            CHECK(E->add(E->add(P, Q), R) == E->add(P, E->add(Q, R)));
        }
        for (auto& P : E->points())
            for (auto& Q : E->points()) CHECK(E->add(P, Q) == E->add(Q, P));
    }
}

TEST_CASE("jacobian structure of the two reference curves") {
    auto E8 = curve_f8();
    CHECK(E8->jacobian().order == 13);
    CHECK(E8->jacobian().inv_m == 1);  // cyclic
    CHECK(E8->jacobian().inv_mk == 13);
    for (auto& P : E8->points())
        if (!P.infinity) {
            CHECK(E8->order_of(P) == 13);
            CHECK(E8->mul(13, P).infinity);
        }
    CHECK(E8->jacobian().full_sum.infinity);  // odd order: sum = O

    auto E7 = curve_f7();
    CHECK(E7->jacobian().order == 8);  // p + 1
    CHECK(E7->jacobian().two_torsion == 1);
    // the full sum is the unique two-torsion point
    CHECK(E7->jacobian().full_sum == ECPoint::affine(0, 0));

    // a curve with three rational two-torsion points: y^2 = x(x-1)(x-2) over F_7
    auto F7 = Field::make(7, 1);
    // x(x-1)(x-2) = x^3 - 3x^2 + 2x
    auto E3 = EllipticCurve::build(WeierstrassCurve{F7, 0, F7->neg(3), 0, 2, 0});
    CHECK(E3->jacobian().two_torsion == 3);
    CHECK(E3->jacobian().full_sum.infinity);
    // full two-torsion forces the non-cyclic shape Z/2 x Z/4 here
    CHECK(E3->jacobian().order == 8);
    CHECK(E3->jacobian().inv_m == 2);
    CHECK(E3->jacobian().inv_mk == 4);

    CHECK_THROWS_WITH_AS(EllipticCurve::build(WeierstrassCurve{F7, 0, 0, 0, 0, 0}),
                         doctest::Contains("InvalidSpec"), Error);
}

TEST_CASE("riemann-roch on elliptic curves") {
    auto E8 = curve_f8();
    ECPoint P0 = E8->points()[1];
    // l(O-coefficient only): dim L(c*O) = c for c >= 1
    for (long c = 1; c <= 6; ++c) CHECK(E8->ell(0, c, P0) == c);
    // dim L(G) = deg G for deg >= 1, mixed support
    for (long a = 1; a <= 4; ++a)
        for (long c = -2; c <= 3; ++c)
            if (a + c >= 1) CHECK(E8->ell(a, c, P0) == a + c);
    CHECK_THROWS_WITH_AS(E8->rr_basis(1, 1, ECPoint::at_infinity()), doctest::Contains("P0IsInfinity"), Error);
}

TEST_CASE("bridge identity: l(a(P0-O)) = 1 iff ord(P0) | a") {
    for (auto E : {curve_f7(), curve_f8()}) {
        long N = long(E->jacobian().order);
        for (auto& P0 : E->points()) {
            if (P0.infinity) continue;
            long alpha = long(E->order_of(P0));
            for (long a = 0; a <= 2 * N; ++a) {
                long l = E->ell(a, -a, P0);
                CHECK(l == (a % alpha == 0 ? 1 : 0));
            }
        }
    }
}

TEST_CASE("exact distances via the dichotomy, cross-checked") {
    auto E8 = curve_f8();
    ECPoint P0 = E8->points()[1];
    // b = 11: [11,1,11] and [11,10,2], both MDS
    auto r11 = elliptic_lcp(E8, P0, 1, 11);
    CHECK(r11.lcp);
    CHECK(r11.code_g.k == 1);
    CHECK(r11.code_h.k == 10);
    CHECK(r11.dist_g.mds);
    CHECK(r11.dist_g.d == 11);
    CHECK(r11.dist_h.mds);
    CHECK(r11.dist_h.d == 2);
    auto dg = min_distance(r11.code_g, 1'000'000, 1);
    REQUIRE(dg.exact);
    CHECK(dg.d == 11);

    // b in 2..10: parameters [11, 12-b, b-1] and [11, b-1, 12-b], non-MDS
    for (long b = 2; b <= 10; ++b) {
        auto r = elliptic_lcp(E8, P0, 1, b);
        CHECK(r.lcp);
        CHECK(long(r.code_g.k) == 12 - b);
        CHECK(long(r.code_h.k) == b - 1);
        CHECK_FALSE(r.dist_g.mds);
        CHECK(r.dist_g.d == b - 1);
        CHECK_FALSE(r.dist_h.mds);
        CHECK(r.dist_h.d == 12 - b);
    }

    // a > 1 also works when the congruences allow it
    auto r25 = elliptic_lcp(E8, P0, 2, 5);
    CHECK(r25.lcp);
    CHECK(long(r25.code_g.k) == 2 + 11 - 5);
    CHECK(long(r25.code_h.k) == 3);

    // rejected parameters
    CHECK_THROWS_WITH_AS(elliptic_lcp(E8, P0, 1, 12), doctest::Contains("PreconditionViolated"), Error);
    CHECK_THROWS_WITH_AS(elliptic_lcp(E8, P0, 13, 14), doctest::Contains("PreconditionViolated"), Error);
}

TEST_CASE("three two-torsion points: y^2 = x(x-1)(x-2) over F_7") {
    auto F7 = Field::make(7, 1);
    auto E = EllipticCurve::build(WeierstrassCurve{F7, 0, F7->neg(3), 0, 2, 0});
    REQUIRE(E->jacobian().two_torsion == 3);
    // a odd, b even with P0 a two-torsion point gives an LCP
    ECPoint P0 = ECPoint::affine(0, 0);
    REQUIRE(E->on_curve(P0));
    long n = long(E->jacobian().order) - 2;
    for (long b = 2; b - 1 < n; b += 2) {
        auto r = elliptic_lcp(E, P0, 1, b);
        CHECK(r.lcp);
        CHECK(long(r.code_g.k) == 1 + n - b);
    }
}

TEST_CASE("security parameter at b = 3 by full exhaustion over F_8") {
    auto E8 = curve_f8();
    auto r = elliptic_lcp(E8, E8->points()[1], 1, 3);
    // min(d(C_G), d(C_H^perp)) with both distances scanned exhaustively
    auto sp = security_parameter(r.code_g, r.code_h, 200'000'000, 1, 1);
    REQUIRE(sp.exact);
    CHECK(sp.d == 2);
    CHECK(sp.d == std::min(r.dist_g.d, r.dist_h_dual.d));
}

TEST_CASE("single two-torsion theorem on y^2 = x^3 + x / F_7") {
    auto E7 = curve_f7();
    ECPoint P0 = ECPoint::affine(0, 0);
    CHECK(E7->order_of(P0) == 2);
    auto r = elliptic_lcp_single2torsion(E7, P0, 1, 3);
    CHECK(r.lcp);
    CHECK(r.code_g.k == 4);
    CHECK(r.code_h.k == 2);

    CHECK_THROWS_WITH_AS(elliptic_lcp_single2torsion(E7, P0, 2, 3), doctest::Contains("PreconditionViolated"),
                         Error);
    // the first theorem refuses this curve
    CHECK_THROWS_WITH_AS(elliptic_lcp(E7, P0, 1, 3), doctest::Contains("PreconditionViolated"), Error);

    // sweep over odd-order P0 covering all dimensions (a = 1)
    for (auto& P : E7->points()) {
        if (P.infinity || E7->order_of(P) % 2 == 0) continue;
        for (long b = 2; b < 7; ++b) {
            auto rr = elliptic_lcp_single2torsion(E7, P, 1, b);
            CHECK(rr.lcp);
            CHECK(long(rr.code_g.k) == 6 + 1 - b);
        }
    }
}

TEST_CASE("y^2 = x^3 + x over F_11: order p+1 with one two-torsion point") {
    auto F11 = Field::make(11, 1);
    auto E = EllipticCurve::build(WeierstrassCurve{F11, 0, 0, 0, 1, 0});
    CHECK(E->jacobian().order == 12);
    CHECK(E->jacobian().two_torsion == 1);
    auto r = elliptic_lcp_single2torsion(E, ECPoint::affine(0, 0), 1, 3);
    CHECK(r.lcp);
    CHECK(r.code_g.k == 8);
    CHECK(r.code_h.k == 2);
}
