#include <random>

#include "aglcp/linalg.hpp"
#include "aglcp/poly.hpp"
#include "aglcp/series.hpp"
#include "doctest.h"

using namespace aglcp;

namespace {

Poly random_poly(const Field& F, std::mt19937_64& rng, int maxdeg) {
    std::uniform_int_distribution<int> dd(0, maxdeg);
    std::uniform_int_distribution<std::uint64_t> dc(0, F.order() - 1);
    std::vector<felem> c(size_t(dd(rng)) + 1);
    for (auto& x : c) x = felem(dc(rng));
    return Poly(std::move(c));
}

}  // namespace

TEST_CASE("polynomial division and gcd") {
    auto F = Field::make(3, 2);
    std::mt19937_64 rng(7);
    for (int it = 0; it < 200; ++it) {
        Poly a = random_poly(*F, rng, 8), b = random_poly(*F, rng, 5);
        if (b.is_zero()) continue;
        auto [q, r] = Poly::divmod(*F, a, b);
        CHECK(Poly::add(*F, Poly::mul(*F, q, b), r) == a);
        CHECK(r.degree() < b.degree());
        Poly g = Poly::gcd(*F, a, b);
        if (!a.is_zero()) CHECK(Poly::divmod(*F, a, g).second.is_zero());
        CHECK(Poly::divmod(*F, b, g).second.is_zero());
    }
}

TEST_CASE("rational functions stay reduced") {
    auto F = Field::make(2, 2);
    Poly x = Poly::x();
    RatFun r = RatFun::of(*F, Poly::mul(*F, x, x), x);  // x^2/x = x
    CHECK(r.num == x);
    CHECK(r.den == Poly::constant(1));
    CHECK(r.valuation_at(*F, 0) == 1);
    CHECK(r.valuation_at_inf() == -1);

    RatFun s = RatFun::of(*F, Poly::constant(1), x);
    CHECK(RatFun::mul(*F, r, s) == RatFun::constant(1));
}

TEST_CASE("matrix rref rank nullspace") {
    auto F = Field::make(3, 1);
    Matrix M(2, 3);
    M.at(0, 0) = 1;
    M.at(0, 1) = 2;
    M.at(0, 2) = 0;
    M.at(1, 0) = 0;
    M.at(1, 1) = 1;
    M.at(1, 2) = 1;
    CHECK(M.rank(*F) == 2);
    Matrix N = M.nullspace(*F);
    REQUIRE(N.rows() == 1);
    for (size_t i = 0; i < M.rows(); ++i) {
        felem acc = 0;
        for (size_t j = 0; j < 3; ++j) acc = F->add(acc, F->mul(M.at(i, j), N.at(0, j)));
        CHECK(acc == 0);
    }

    std::mt19937_64 rng(11);
    auto F9 = Field::make(3, 2);
    for (int it = 0; it < 50; ++it) {
        std::uniform_int_distribution<size_t> dim(1, 8);
        std::uniform_int_distribution<std::uint64_t> dc(0, 8);
        size_t rows = dim(rng), cols = dim(rng);
        Matrix A(rows, cols);
        for (size_t i = 0; i < rows; ++i)
            for (size_t j = 0; j < cols; ++j) A.at(i, j) = felem(dc(rng));
        size_t rk = A.rank(*F9);
        Matrix K = A.nullspace(*F9);
        CHECK(rk + K.rows() == cols);
        for (size_t v = 0; v < K.rows(); ++v)
            for (size_t i = 0; i < rows; ++i) {
                felem acc = 0;
                for (size_t j = 0; j < cols; ++j) acc = F9->add(acc, F9->mul(A.at(i, j), K.at(v, j)));
                CHECK(acc == 0);
            }
    }
}

TEST_CASE("series arithmetic and hensel lifting") {
    auto F = Field::make(3, 2);
    // y^m = f with y(0) = b
    Poly f({4, 1, 1});  // f = x^2 + x + (1+t)... coefficients in F9 encoding
    felem f0 = f.coeff(0);
    // choose b with b^4 = f(0): search
    felem b = 0;
    for (auto e : F->elements())
        if (e != 0 && F->pow(e, 4) == f0) b = e;
    if (b != 0) {
        PSeries fs = ps_shifted_poly(*F, f, 0, 24);
        PSeries y = hensel_root_m(*F, 4, fs, b, 24);
        PSeries y4 = ps_pow(*F, y, 4, 24);
        for (size_t i = 0; i < 24; ++i) CHECK(y4[i] == fs[i]);
    }

    // hyperelliptic infinity branch: u^2 + t^e u - 1 = 0
    PSeries u = hensel_hyper_inf(*F, 2, 1, 30);
    PSeries u2 = ps_mul(*F, u, u, 30);
    PSeries teu(30, 0);
    for (size_t i = 0; i + 2 < 30; ++i) teu[i + 2] = u[i];
    PSeries lhs = ps_add(*F, u2, teu);
    CHECK(lhs[0] == 1);
    for (size_t i = 1; i < 30; ++i) CHECK(lhs[i] == 0);

    // Laurent reciprocal round-trip
    Laurent a = l_of_pseries(PSeries{2, 1, 5, 0, 7}, -2, 10);
    Laurent ia = l_inv(*F, a);
    Laurent prod = l_mul(*F, a, ia);
    CHECK(prod.coeff(0) == 1);
    for (int e = prod.lo; e < prod.cut; ++e)
        if (e != 0) CHECK(prod.coeff(e) == 0);
}
