#include "aglcp/elliptic.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "aglcp/series.hpp"

namespace aglcp {

namespace {

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> ps;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        while (n % d == 0) {
            if (ps.empty() || ps.back() != d) ps.push_back(d);
            n /= d;
        }
    if (n > 1) ps.push_back(n);
    return ps;
}

}  // namespace

felem EllipticCurve::rhs(felem x) const {
    const Field& F = *w_.field;
    felem x2 = F.mul(x, x);
    felem x3 = F.mul(x2, x);
    return F.add(F.add(x3, F.mul(w_.a2, x2)), F.add(F.mul(w_.a4, x), w_.a6));
}

felem EllipticCurve::ylin(felem x) const {
    const Field& F = *w_.field;
    return F.add(F.mul(w_.a1, x), w_.a3);
}

EllipticCurveRef EllipticCurve::build(const WeierstrassCurve& w) {
    if (!w.field) fail("InvalidSpec", "missing base field");
    const Field& F = *w.field;
    if (F.order() > (1u << 16)) fail("ScaleExceeded", "point enumeration is limited to q <= 2^16");

    auto E = std::shared_ptr<EllipticCurve>(new EllipticCurve(w));

    // nonsingularity via the discriminant of the long Weierstrass form
    felem a1 = w.a1, a2 = w.a2, a3 = w.a3, a4 = w.a4, a6 = w.a6;
    felem c4v = F.from_int(4), c8 = F.from_int(8), c27 = F.from_int(27), c9 = F.from_int(9), c2 = F.from_int(2);
    felem b2 = F.add(F.mul(a1, a1), F.mul(c4v, a2));
    felem b4 = F.add(F.mul(c2, a4), F.mul(a1, a3));
    felem b6 = F.add(F.mul(a3, a3), F.mul(c4v, a6));
    felem b8 = F.add(F.sub(F.add(F.mul(F.mul(a1, a1), a6), F.mul(F.mul(c4v, a2), a6)), F.mul(F.mul(a1, a3), a4)),
                     F.sub(F.mul(a2, F.mul(a3, a3)), F.mul(a4, a4)));
    felem disc = F.sub(F.sub(F.sub(F.mul(c9, F.mul(b2, F.mul(b4, b6))), F.mul(F.mul(b2, b2), b8)),
                             F.mul(c8, F.mul(F.mul(b4, b4), b4))),
                       F.mul(c27, F.mul(b6, b6)));
    if (disc == 0) fail("InvalidSpec", "singular Weierstrass equation");

    // enumerate rational points
    E->points_.push_back(ECPoint::at_infinity());
    std::map<felem, std::vector<felem>> as_sol;  // z^2 + z = w solutions, char 2
    if (F.p() == 2)
        for (std::uint64_t zv = 0; zv < F.order(); ++zv) {
            felem z = felem(zv);
            as_sol[F.add(F.mul(z, z), z)].push_back(z);
        }
    for (std::uint64_t xv = 0; xv < F.order(); ++xv) {
        felem x = felem(xv);
        felem c = E->ylin(x), d = E->rhs(x);
        std::vector<felem> ys;
        if (F.p() == 2) {
            if (c == 0) {
                ys.push_back(*F.sqrt(d));
            } else {
                felem wv = F.div(d, F.mul(c, c));
                auto it = as_sol.find(wv);
                if (it != as_sol.end())
                    for (auto z : it->second) ys.push_back(F.mul(c, z));
            }
        } else {
            felem discq = F.add(F.mul(c, c), F.mul(F.from_int(4), d));
            auto sq = F.sqrt(discq);
            if (sq) {
                felem half = F.inv(F.from_int(2));
                if (*sq == 0) {
                    ys.push_back(F.mul(F.neg(c), half));
                } else {
                    ys.push_back(F.mul(F.sub(*sq, c), half));
                    ys.push_back(F.mul(F.sub(F.neg(*sq), c), half));
                }
            }
        }
        std::sort(ys.begin(), ys.end());
        for (auto y : ys) E->points_.push_back(ECPoint::affine(x, y));
    }

    // group structure by exhaustive order computation
    auto& jac = E->jac_;
    jac.order = E->points_.size();
    jac.point_order.resize(jac.order);
    unsigned expo = 1;
    ECPoint sum = ECPoint::at_infinity();
    for (size_t i = 0; i < E->points_.size(); ++i) {
        jac.point_order[i] = E->order_of(E->points_[i]);
        expo = std::max(expo, jac.point_order[i]);
        if (jac.point_order[i] == 2) ++jac.two_torsion;
        sum = E->add(sum, E->points_[i]);
    }
    jac.full_sum = sum;
    jac.inv_mk = expo;
    jac.inv_m = unsigned(jac.order / expo);
    if (std::size_t(jac.inv_m) * expo != jac.order || expo % jac.inv_m != 0)
        fail("Internal", "group invariants inconsistent with the point count");
    return E;
}

bool EllipticCurve::on_curve(const ECPoint& P) const {
    if (P.infinity) return true;
    const Field& F = *w_.field;
    felem lhs = F.add(F.mul(P.y, P.y), F.mul(ylin(P.x), P.y));
    return lhs == rhs(P.x);
}

ECPoint EllipticCurve::neg(const ECPoint& P) const {
    if (P.infinity) return P;
    const Field& F = *w_.field;
    return ECPoint::affine(P.x, F.sub(F.neg(P.y), ylin(P.x)));
}

bool EllipticCurve::is_two_torsion(const ECPoint& P) const {
    return !P.infinity && P == neg(P);
}

ECPoint EllipticCurve::add(const ECPoint& P, const ECPoint& Q) const {
    if (P.infinity) return Q;
    if (Q.infinity) return P;
    const Field& F = *w_.field;
    if (Q == neg(P)) return ECPoint::at_infinity();

    felem lam;
    if (P.x != Q.x) {
        lam = F.div(F.sub(Q.y, P.y), F.sub(Q.x, P.x));
    } else {
        // tangent; P == Q and P not 2-torsion here
        felem num = F.add(F.sub(F.add(F.mul(F.from_int(3), F.mul(P.x, P.x)), F.mul(F.from_int(2), F.mul(w_.a2, P.x))),
                                F.mul(w_.a1, P.y)),
                          w_.a4);
        felem den = F.add(F.add(F.mul(F.from_int(2), P.y), F.mul(w_.a1, P.x)), w_.a3);
        lam = F.div(num, den);
    }
    felem x3 = F.sub(F.sub(F.sub(F.add(F.mul(lam, lam), F.mul(w_.a1, lam)), w_.a2), P.x), Q.x);
    felem y3 = F.sub(F.sub(F.mul(lam, F.sub(P.x, x3)), P.y), F.add(F.mul(w_.a1, x3), w_.a3));
    return ECPoint::affine(x3, y3);
}

ECPoint EllipticCurve::mul(std::int64_t n, const ECPoint& P) const {
    ECPoint base = P;
    if (n < 0) {
        base = neg(P);
        n = -n;
    }
    ECPoint r = ECPoint::at_infinity();
    while (n) {
        if (n & 1) r = add(r, base);
        base = add(base, base);
        n >>= 1;
    }
    return r;
}

unsigned EllipticCurve::order_of(const ECPoint& P) const {
    if (P.infinity) return 1;
    std::uint64_t ord = points_.size();
    for (auto pr : prime_factors(ord))
        while (ord % pr == 0 && mul(std::int64_t(ord / pr), P).infinity) ord /= pr;
    return unsigned(ord);
}

ECPoint EllipticCurve::class_sum(long a, long c, const ECPoint& P0) const {
    (void)c;
    return mul(a, P0);
}

void EllipticCurve::local_expansions(const ECPoint& P, size_t prec, PSeries& xs, PSeries& ys) const {
    const Field& F = *w_.field;
    if (P.infinity) fail("NonAffinePlace", "local expansion at infinity is not needed");
    if (!is_two_torsion(P)) {
        // local parameter t = x - x0; lift y by Newton, derivative 2y + a1x + a3
        xs.assign(prec, 0);
        xs[0] = P.x;
        if (prec > 1) xs[1] = 1;
        PSeries y{P.y};
        size_t cur = 1;
        PSeries lin(prec, 0);  // a1 x + a3 as a series in t
        lin[0] = ylin(P.x);
        if (prec > 1) lin[1] = w_.a1;
        PSeries rhs_ser(prec, 0);  // x^3 + a2 x^2 + a4 x + a6
        {
            Poly rp({w_.a6, w_.a4, w_.a2, 1});
            rhs_ser = ps_shifted_poly(F, rp, P.x, prec);
        }
        while (cur < prec) {
            cur = std::min(prec, cur * 2);
            PSeries err = ps_add(F, ps_mul(F, y, y, cur), ps_mul(F, lin, y, cur));
            err = ps_sub(F, err, rhs_ser);
            err.resize(cur, 0);
            PSeries der = y;
            for (auto& v : der) v = F.mul(v, F.from_int(2));
            der = ps_add(F, der, lin);
            PSeries corr = ps_mul(F, err, ps_inv(F, der, cur), cur);
            y = ps_sub(F, y, corr);
            y.resize(cur, 0);
        }
        ys = y;
        ys.resize(prec, 0);
    } else {
        // 2-torsion: local parameter t = y - y0; lift x by Newton,
        // derivative 3x^2 + 2a2 x + a4 - a1 y
        ys.assign(prec, 0);
        ys[0] = P.y;
        if (prec > 1) ys[1] = 1;
        PSeries x{P.x};
        size_t cur = 1;
        while (cur < prec) {
            cur = std::min(prec, cur * 2);
            PSeries x2 = ps_mul(F, x, x, cur);
            PSeries x3 = ps_mul(F, x2, x, cur);
            PSeries yv = ys;
            yv.resize(cur, 0);
            PSeries y2 = ps_mul(F, yv, yv, cur);
            // err = x^3 + a2 x^2 + a4 x + a6 - y^2 - a1 x y - a3 y
            PSeries err = x3;
            for (size_t i = 0; i < cur; ++i) {
                felem v = err.size() > i ? err[i] : 0;
                v = F.add(v, F.mul(w_.a2, i < x2.size() ? x2[i] : 0));
                v = F.add(v, F.mul(w_.a4, i < x.size() ? x[i] : 0));
                if (i == 0) v = F.add(v, w_.a6);
                v = F.sub(v, i < y2.size() ? y2[i] : 0);
                v = F.sub(v, F.mul(w_.a3, i < yv.size() ? yv[i] : 0));
                if (err.size() <= i) err.resize(i + 1, 0);
                err[i] = v;
            }
            err = ps_sub(F, err, ps_mul(F, PSeries{w_.a1}, ps_mul(F, x, yv, cur), cur));
            err.resize(cur, 0);
            // derivative
            PSeries der = ps_mul(F, PSeries{F.from_int(3)}, x2, cur);
            der = ps_add(F, der, ps_mul(F, PSeries{F.mul(F.from_int(2), w_.a2)}, x, cur));
            if (der.empty()) der.resize(1, 0);
            der[0] = F.add(der[0], w_.a4);
            der = ps_sub(F, der, ps_mul(F, PSeries{w_.a1}, yv, cur));
            PSeries corr = ps_mul(F, err, ps_inv(F, der, cur), cur);
            x = ps_sub(F, x, corr);
            x.resize(cur, 0);
        }
        xs = x;
        xs.resize(prec, 0);
    }
}

std::vector<ECFunction> EllipticCurve::rr_basis(long a, long c, const ECPoint& P0) const {
    const Field& F = *w_.field;
    if (P0.infinity) fail("P0IsInfinity", "the moving place must be affine");
    if (!on_curve(P0)) fail("InvalidSpec", "P0 is not on the curve");

    unsigned e0 = is_two_torsion(P0) ? 2 : 1;
    long s = a <= 0 ? 0 : (a + e0 - 1) / e0;
    long M = c + 2 * s;

    // monomial basis of L(M * O): x^i (2i <= M) and x^i y (2i + 3 <= M)
    struct Mono {
        unsigned i;
        bool with_y;
    };
    std::vector<Mono> monos;
    for (long i = 0; 2 * i <= M; ++i) monos.push_back({unsigned(i), false});
    for (long i = 0; 2 * i + 3 <= M; ++i) monos.push_back({unsigned(i), true});
    if (monos.empty()) return {};

    long k0 = s * e0 - a;  // vanishing order needed at P0
    long kneg = e0 == 1 ? s : 0;
    std::vector<ECFunction> out;

    auto push_fun = [&](const std::vector<felem>& coeffs) {
        ECFunction f;
        f.s = unsigned(s);
        f.x0 = P0.x;
        std::vector<felem> pc, rc;
        for (size_t j = 0; j < monos.size(); ++j) {
            if (!coeffs[j]) continue;
            auto& vec = monos[j].with_y ? rc : pc;
            if (vec.size() <= monos[j].i) vec.resize(monos[j].i + 1, 0);
            vec[monos[j].i] = F.add(vec.size() > monos[j].i ? vec[monos[j].i] : 0, coeffs[j]);
        }
        f.p = Poly(pc);
        f.r = Poly(rc);
        out.push_back(std::move(f));
    };

    if (k0 <= 0 && kneg <= 0) {
        for (size_t j = 0; j < monos.size(); ++j) {
            std::vector<felem> unit(monos.size(), 0);
            unit[j] = 1;
            push_fun(unit);
        }
        return out;
    }

    size_t prec = size_t(std::max(k0, kneg)) + 2;
    Matrix Mx(size_t(k0 + kneg), monos.size());
    auto fill_rows = [&](const ECPoint& P, long orders, size_t row0) {
        PSeries xs, ys;
        local_expansions(P, prec, xs, ys);
        for (size_t j = 0; j < monos.size(); ++j) {
            PSeries v = ps_pow(F, xs, monos[j].i, prec);
            if (monos[j].with_y) v = ps_mul(F, v, ys, prec);
            for (long t = 0; t < orders; ++t) Mx.at(row0 + size_t(t), j) = t < long(v.size()) ? v[size_t(t)] : 0;
        }
    };
    size_t row = 0;
    if (k0 > 0) {
        fill_rows(P0, k0, row);
        row += size_t(k0);
    }
    if (kneg > 0) fill_rows(neg(P0), kneg, row);

    Matrix K = Mx.nullspace(F);
    for (size_t i = 0; i < K.rows(); ++i) push_fun(K.row_vec(i));
    return out;
}

felem EllipticCurve::eval(const ECFunction& f, const ECPoint& P) const {
    const Field& F = *w_.field;
    if (P.infinity) fail("NonAffinePlace", "evaluation at infinity");
    felem num = F.add(f.p.eval(F, P.x), F.mul(f.r.eval(F, P.x), P.y));
    if (P.x != f.x0) {
        felem den = F.pow(F.sub(P.x, f.x0), std::int64_t(f.s));
        return F.div(num, den);
    }
    if (f.s == 0) return num;
    // P shares the x-coordinate with P0: expand the numerator and divide by
    // the local parameter power; x - x0 must be a local parameter at P
    if (is_two_torsion(P)) fail("PoleAtPlace", "evaluation at the moving place itself");
    size_t prec = f.s + 2;
    PSeries xs, ys;
    local_expansions(P, prec, xs, ys);
    PSeries acc(prec, 0);
    for (int i = 0; i <= f.p.degree(); ++i) {
        PSeries t = ps_pow(F, xs, unsigned(i), prec);
        for (size_t k = 0; k < prec; ++k) acc[k] = F.add(acc[k], F.mul(f.p.coeff(size_t(i)), t[k]));
    }
    for (int i = 0; i <= f.r.degree(); ++i) {
        PSeries t = ps_mul(F, ps_pow(F, xs, unsigned(i), prec), ys, prec);
        for (size_t k = 0; k < prec; ++k) acc[k] = F.add(acc[k], F.mul(f.r.coeff(size_t(i)), t[k]));
    }
    // t = x - x0 has valuation 1 here (P != P0 and P not 2-torsion at x0)
    for (unsigned k = 0; k < f.s; ++k)
        if (acc[k] != 0) fail("PoleAtPlace", "function has a pole at the evaluation place");
    return acc[f.s];
}

MdsResult elliptic_exact_distance(const EllipticCurve& E, const std::vector<ECPoint>& supp_d,
                                  const ECPoint& class_of_g, size_t k, std::uint64_t comb_budget) {
    size_t n = supp_d.size();
    if (k == 0 || k > n) fail("InvalidSpec", "dimension outside (0, n]");

    // search the smaller of the k-subsets and their complements
    size_t kk = std::min(k, n - k);
    ECPoint target = class_of_g;
    if (kk != k) {
        ECPoint total = ECPoint::at_infinity();
        for (auto& P : supp_d) total = E.add(total, P);
        target = E.add(total, E.neg(class_of_g));
    }

    // C(n, kk) within budget?
    std::uint64_t comb = 1;
    for (size_t i = 0; i < kk; ++i) {
        comb = comb * (n - i) / (i + 1);
        if (comb > comb_budget) fail("ScaleExceeded", "subset search too large");
    }

    bool found = false;
    std::vector<size_t> idx;
    std::vector<ECPoint> partial{ECPoint::at_infinity()};
    auto dfs = [&](auto&& self, size_t start, size_t left) -> void {
        if (found) return;
        if (left == 0) {
            if (partial.back() == target) found = true;
            return;
        }
        for (size_t i = start; i + left <= n; ++i) {
            partial.push_back(E.add(partial.back(), supp_d[i]));
            self(self, i + 1, left - 1);
            partial.pop_back();
            if (found) return;
        }
    };
    if (kk == 0)
        found = target.infinity;
    else
        dfs(dfs, 0, kk);

    if (found) return MdsResult{false, long(n - k)};
    return MdsResult{true, long(n - k + 1)};
}

namespace {

EllipticLcpResult run_elliptic_lcp(const EllipticCurveRef& E, const ECPoint& P0, long a, long b) {
    const auto& jac = E->jacobian();
    if (P0.infinity || !E->on_curve(P0)) fail("PreconditionViolated", "P0 must be an affine rational point");
    long n = long(jac.order) - 2;
    if (!(0 < b - a && b - a < n)) fail("PreconditionViolated", "need 0 < b - a < n");
    if (a <= 0 || b <= 0) fail("PreconditionViolated", "a and b must be positive");

    EllipticLcpResult res;
    res.curve = E;
    res.P0 = P0;
    res.a = a;
    res.b = b;
    for (auto& P : E->points())
        if (!P.infinity && !(P == P0)) res.supp_d.push_back(P);

    auto build_code = [&](long ca, long cc) {
        auto basis = E->rr_basis(ca, cc, P0);
        Matrix rows(basis.size(), res.supp_d.size());
        for (size_t i = 0; i < basis.size(); ++i)
            for (size_t j = 0; j < res.supp_d.size(); ++j) rows.at(i, j) = E->eval(basis[i], res.supp_d[j]);
        return make_code(E->field_ref(), std::move(rows), res.supp_d.size());
    };
    res.code_g = build_code(a, n - b);
    res.code_h = build_code(b, -a);
    res.lcp = is_lcp(res.code_g, res.code_h);

    ECPoint total = ECPoint::at_infinity();
    for (auto& P : res.supp_d) total = E->add(total, P);
    ECPoint cg = E->mul(a, P0), ch = E->mul(b, P0);
    res.dist_g = elliptic_exact_distance(*E, res.supp_d, cg, res.code_g.k);
    res.dist_h = elliptic_exact_distance(*E, res.supp_d, ch, res.code_h.k);
    res.dist_g_dual = elliptic_exact_distance(*E, res.supp_d, E->add(total, E->neg(cg)), size_t(n) - res.code_g.k);
    res.dist_h_dual = elliptic_exact_distance(*E, res.supp_d, E->add(total, E->neg(ch)), size_t(n) - res.code_h.k);
    return res;
}

}  // namespace

EllipticLcpResult elliptic_lcp(const EllipticCurveRef& E, const ECPoint& P0, long a, long b) {
    const auto& jac = E->jacobian();
    if (jac.order % 2 == 0 && jac.two_torsion <= 1)
        fail("PreconditionViolated", "need #Jac odd, or more than one element of order 2");
    long alpha = long(E->order_of(P0));
    if (alpha <= 1) fail("PreconditionViolated", "P0 must have order > 1");
    if (a % alpha == 0) fail("PreconditionViolated", "a = 0 (mod ord P0)");
    if ((b + 1) % alpha == 0) fail("PreconditionViolated", "b = -1 (mod ord P0)");
    return run_elliptic_lcp(E, P0, a, b);
}

EllipticLcpResult elliptic_lcp_single2torsion(const EllipticCurveRef& E, const ECPoint& P0, long a, long b) {
    const auto& jac = E->jacobian();
    if (jac.two_torsion != 1) fail("PreconditionViolated", "need exactly one element of order 2");
    long alpha = long(E->order_of(P0));
    if (alpha <= 1) fail("PreconditionViolated", "P0 must have order > 1");
    if (a % alpha == 0) fail("PreconditionViolated", "a = 0 (mod ord P0)");
    if (alpha % 2 == 0 && std::gcd(alpha, b + 1) == alpha / 2)
        fail("PreconditionViolated", "gcd(ord P0, b+1) = ord(P0)/2");
    return run_elliptic_lcp(E, P0, a, b);
}

}  // namespace aglcp
