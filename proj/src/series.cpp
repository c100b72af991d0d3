#include "aglcp/series.hpp"

#include <algorithm>

namespace aglcp {

PSeries ps_add(const Field& F, const PSeries& a, const PSeries& b) {
    PSeries r(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < r.size(); ++i)
        r[i] = F.add(i < a.size() ? a[i] : 0, i < b.size() ? b[i] : 0);
    return r;
}

PSeries ps_sub(const Field& F, const PSeries& a, const PSeries& b) {
    PSeries r(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < r.size(); ++i)
        r[i] = F.sub(i < a.size() ? a[i] : 0, i < b.size() ? b[i] : 0);
    return r;
}

PSeries ps_mul(const Field& F, const PSeries& a, const PSeries& b, size_t prec) {
    PSeries r(prec, 0);
    for (size_t i = 0; i < a.size() && i < prec; ++i) {
        if (!a[i]) continue;
        for (size_t j = 0; j < b.size() && i + j < prec; ++j)
            r[i + j] = F.add(r[i + j], F.mul(a[i], b[j]));
    }
    return r;
}

PSeries ps_inv(const Field& F, const PSeries& a, size_t prec) {
    if (a.empty() || a[0] == 0) fail("SeriesPrecision", "reciprocal of a series with zero constant term");
    PSeries r(prec, 0);
    felem i0 = F.inv(a[0]);
    r[0] = i0;
    for (size_t k = 1; k < prec; ++k) {
        felem acc = 0;
        for (size_t j = 1; j <= k; ++j) acc = F.add(acc, F.mul(j < a.size() ? a[j] : 0, r[k - j]));
        r[k] = F.neg(F.mul(i0, acc));
    }
    return r;
}

PSeries ps_pow(const Field& F, const PSeries& a, std::uint64_t e, size_t prec) {
    PSeries r{1};
    PSeries base = a;
    while (e) {
        if (e & 1) r = ps_mul(F, r, base, prec);
        base = ps_mul(F, base, base, prec);
        e >>= 1;
    }
    r.resize(prec, 0);
    return r;
}

PSeries ps_shifted_poly(const Field& F, const Poly& p, felem a, size_t prec) {
    // Horner: fold with (a + T)
    PSeries r(1, 0);
    PSeries shift{a, 1};
    for (int i = p.degree(); i >= 0; --i) {
        r = ps_mul(F, r, shift, prec);
        if (r.empty()) r.resize(1, 0);
        r[0] = F.add(r[0], p.coeff(size_t(i)));
    }
    r.resize(prec, 0);
    return r;
}

Laurent l_zero(int cut) { return Laurent{cut, cut, {}}; }

Laurent l_term(const Field& F, int e, felem v, int cut) {
    (void)F;
    if (e >= cut) return l_zero(cut);
    Laurent r{e, cut, std::vector<felem>(size_t(cut - e), 0)};
    r.c[0] = v;
    return r;
}

Laurent l_of_pseries(const PSeries& ps, int shift, int cut) {
    Laurent r{shift, cut, {}};
    if (shift >= cut) return l_zero(cut);
    int avail = std::min<int>(cut - shift, int(ps.size()));
    // coefficients of ps beyond its length are exactly zero only if the caller
    // produced them; the sound truncation is min(cut, shift + |ps|)
    r.cut = shift + avail;
    r.c.assign(ps.begin(), ps.begin() + avail);
    r.normalize();
    return r;
}

Laurent l_add(const Field& F, const Laurent& a, const Laurent& b) {
    int cut = std::min(a.cut, b.cut);
    int lo = std::min(a.lo, b.lo);
    if (lo > cut) lo = cut;
    Laurent r{lo, cut, std::vector<felem>(size_t(cut - lo), 0)};
    for (int e = lo; e < cut; ++e) {
        felem av = (e >= a.lo && e < a.cut) ? a.c[size_t(e - a.lo)] : 0;
        felem bv = (e >= b.lo && e < b.cut) ? b.c[size_t(e - b.lo)] : 0;
        r.c[size_t(e - lo)] = F.add(av, bv);
    }
    r.normalize();
    return r;
}

Laurent l_sub(const Field& F, const Laurent& a, const Laurent& b) {
    return l_add(F, a, l_scale(F, b, F.neg(1)));
}

Laurent l_scale(const Field& F, const Laurent& a, felem s) {
    if (s == 0) return l_zero(a.cut);
    Laurent r = a;
    for (auto& x : r.c) x = F.mul(x, s);
    return r;
}

Laurent l_mul(const Field& F, const Laurent& a, const Laurent& b) {
    // unknown tails poison products starting at lo_a + cut_b and lo_b + cut_a
    int cut = std::min(a.lo + b.cut, b.lo + a.cut);
    int lo = a.lo + b.lo;
    if (lo > cut) lo = cut;
    Laurent r{lo, cut, std::vector<felem>(size_t(cut - lo), 0)};
    for (size_t i = 0; i < a.c.size(); ++i) {
        if (!a.c[i]) continue;
        int ea = a.lo + int(i);
        for (size_t j = 0; j < b.c.size(); ++j) {
            int e = ea + b.lo + int(j);
            if (e >= cut) break;
            if (!b.c[j]) continue;
            r.c[size_t(e - lo)] = F.add(r.c[size_t(e - lo)], F.mul(a.c[i], b.c[j]));
        }
    }
    r.normalize();
    return r;
}

Laurent l_inv(const Field& F, const Laurent& a) {
    Laurent t = a;
    t.normalize();
    if (t.all_zero()) fail("SeriesPrecision", "reciprocal needs a visible leading coefficient");
    int v = t.lo;
    size_t prec = size_t(t.cut - v);
    PSeries unit(t.c.begin(), t.c.end());
    PSeries iu = ps_inv(F, unit, prec);
    // 1/a = T^{-v} * iu, valid to exponent -v + prec = cut - 2v
    return l_of_pseries(iu, -v, t.cut - 2 * v);
}

Laurent l_ratfun_at(const Field& F, const RatFun& r, const Laurent& x) {
    auto horner = [&](const Poly& p) {
        Laurent acc = l_zero(x.cut - x.lo * std::max(0, p.degree() + 1));
        // sound cut is maintained by the ops themselves; start from exact zero
        // with a generous cut and let multiplication shrink it
        acc = l_term(F, 0, 0, x.cut + std::abs(x.lo) * (p.degree() + 2) + 4);
        for (int i = p.degree(); i >= 0; --i) {
            acc = l_mul(F, acc, x);
            acc = l_add(F, acc, l_term(F, 0, p.coeff(size_t(i)), acc.cut));
        }
        return acc;
    };
    if (r.is_zero()) return l_term(F, 0, 0, x.cut + std::abs(x.lo) * 2 + 4);
    Laurent n = horner(r.num);
    Laurent d = horner(r.den);
    return l_mul(F, n, l_inv(F, d));
}

PSeries hensel_root_m(const Field& F, unsigned m, const PSeries& f, felem b, size_t prec) {
    if (b == 0 || F.pow(b, m) != (f.empty() ? 0 : f[0]))
        fail("Internal", "hensel_root_m: bad initial approximation");
    felem minv = F.inv(F.from_int(std::int64_t(m)));
    PSeries y{b};
    size_t cur = 1;
    while (cur < prec) {
        cur = std::min(prec, cur * 2);
        PSeries ym = ps_pow(F, y, m, cur);
        PSeries fm(f.begin(), f.begin() + long(std::min(f.size(), cur)));
        PSeries err = ps_sub(F, ym, fm);
        PSeries der = ps_pow(F, y, m - 1, cur);
        for (auto& v : der) v = F.mul(v, F.from_int(std::int64_t(m)));
        (void)minv;
        PSeries corr = ps_mul(F, err, ps_inv(F, der, cur), cur);
        y = ps_sub(F, y, corr);
        y.resize(cur, 0);
    }
    y.resize(prec, 0);
    return y;
}

PSeries hensel_hyper_inf(const Field& F, unsigned e, felem sign, size_t prec) {
    PSeries u{sign};
    size_t cur = 1;
    PSeries te(prec, 0);
    if (e < prec) te[e] = 1;
    while (cur < prec) {
        cur = std::min(prec, cur * 2);
        PSeries u2 = ps_mul(F, u, u, cur);
        PSeries teu = ps_mul(F, te, u, cur);
        PSeries err = ps_add(F, u2, teu);
        if (err.empty()) err.resize(1, 0);
        err[0] = F.sub(err[0], 1);
        PSeries der = u;
        for (auto& v : der) v = F.mul(v, F.from_int(2));
        der = ps_add(F, der, te);
        PSeries corr = ps_mul(F, err, ps_inv(F, der, cur), cur);
        u = ps_sub(F, u, corr);
        u.resize(cur, 0);
    }
    u.resize(prec, 0);
    return u;
}

}  // namespace aglcp
