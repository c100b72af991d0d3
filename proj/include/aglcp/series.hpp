#pragma once

#include <vector>

#include "aglcp/poly.hpp"

namespace aglcp {

// --- truncated power series: coefficients of T^0..T^{prec-1} ---

using PSeries = std::vector<felem>;

PSeries ps_add(const Field& F, const PSeries& a, const PSeries& b);
PSeries ps_sub(const Field& F, const PSeries& a, const PSeries& b);
PSeries ps_mul(const Field& F, const PSeries& a, const PSeries& b, size_t prec);
// reciprocal; requires a[0] != 0
PSeries ps_inv(const Field& F, const PSeries& a, size_t prec);
PSeries ps_pow(const Field& F, const PSeries& a, std::uint64_t e, size_t prec);
// coefficients of p(a + T) mod T^prec
PSeries ps_shifted_poly(const Field& F, const Poly& p, felem a, size_t prec);

// Laurent series truncated at an absolute exponent. Coefficients cover
// exponents [lo, cut); everything below lo is exactly zero, everything at or
// above cut is unknown. Arithmetic keeps `cut` sound, so a final check of
// `cut` certifies which coefficients are exact.
struct Laurent {
    int lo = 0;
    int cut = 0;
    std::vector<felem> c;  // size cut - lo

    felem coeff(int e) const {
        if (e < lo) return 0;
        if (e >= cut) fail("SeriesPrecision", "coefficient beyond truncation");
        return c[size_t(e - lo)];
    }
    // exponent of the first known nonzero coefficient, or cut if all known
    // coefficients vanish
    int val() const {
        for (size_t i = 0; i < c.size(); ++i)
            if (c[i]) return lo + int(i);
        return cut;
    }
    bool all_zero() const { return val() == cut; }
    void normalize() {
        size_t k = 0;
        while (k < c.size() && c[k] == 0) ++k;
        lo += int(k);
        c.erase(c.begin(), c.begin() + long(k));
    }
};

Laurent l_zero(int cut);
Laurent l_term(const Field& F, int e, felem v, int cut);
// power series placed at exponent shift: coefficients of ps become T^{shift}..
Laurent l_of_pseries(const PSeries& ps, int shift, int cut);
Laurent l_add(const Field& F, const Laurent& a, const Laurent& b);
Laurent l_sub(const Field& F, const Laurent& a, const Laurent& b);
Laurent l_mul(const Field& F, const Laurent& a, const Laurent& b);
Laurent l_scale(const Field& F, const Laurent& a, felem s);
// reciprocal; the true valuation of a must be visible (some known nonzero
// coefficient), otherwise SeriesPrecision is raised
Laurent l_inv(const Field& F, const Laurent& a);

// num(x)/den(x) with x given as a Laurent series
Laurent l_ratfun_at(const Field& F, const RatFun& r, const Laurent& x);

// --- Newton/Hensel lifting of algebraic branches ---

// y(T) with y(T)^m = f(T), y(0) = b, b != 0, gcd(m, char) = 1
PSeries hensel_root_m(const Field& F, unsigned m, const PSeries& f, felem b, size_t prec);

// u(T) with u^2 + T^e u - 1 = 0, u(0) = sign (+1 or -1); odd characteristic
PSeries hensel_hyper_inf(const Field& F, unsigned e, felem sign, size_t prec);

}  // namespace aglcp
