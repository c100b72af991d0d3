#include "aglcp/funcfield.hpp"

#include <algorithm>
#include <climits>
#include <cstdint>
#include <numeric>

#include "aglcp/linalg.hpp"

namespace aglcp {

namespace {

int floor_div(int n, int e) {
    return n >= 0 ? n / e : -((-n + e - 1) / e);
}

}  // namespace

Divisor gcd_div(const Divisor& A, const Divisor& B) {
    Divisor r;
    for (auto& [p, n] : A.support()) r.add(p, std::min(n, B.coeff(p)));
    for (auto& [p, n] : B.support())
        if (A.coeff(p) == 0) r.add(p, std::min(0, n));
    return r;
}

Divisor lmd_div(const Divisor& A, const Divisor& B) {
    Divisor r;
    for (auto& [p, n] : A.support()) r.add(p, std::max(n, B.coeff(p)));
    for (auto& [p, n] : B.support())
        if (A.coeff(p) == 0) r.add(p, std::max(0, n));
    return r;
}

FunctionFieldRef FunctionField::build(const CurveSpec& spec) {
    if (!spec.field) fail("InvalidSpec", "missing base field");
    const Field& F = *spec.field;
    auto ff = std::shared_ptr<FunctionField>(new FunctionField(spec));

    unsigned m = spec.m;
    unsigned r = unsigned(spec.roots.size());
    if (m < 2) fail("InvalidSpec", "covering degree m must be >= 2");
    for (size_t i = 0; i < spec.roots.size(); ++i) {
        if (spec.roots[i] >= F.order()) fail("InvalidSpec", "root outside the base field");
        for (size_t j = i + 1; j < spec.roots.size(); ++j)
            if (spec.roots[i] == spec.roots[j]) fail("InvalidSpec", "roots must be pairwise distinct");
    }

    if (spec.kind == CurveKind::Kummer) {
        if (r < 2 || r >= m) fail("InvalidSpec", "need 2 <= r < m");
        if ((F.order() - 1) % m != 0) fail("InvalidSpec", "m must divide q-1");
        if (std::gcd(m, r) != 1) fail("InvalidSpec", "gcd(m, r) = 1 required for the Kummer families");
        ff->genus_ = (r - 1) * (m - 1) / 2;
    } else {
        unsigned q = m - 1;
        if (q < 3 || q % 2 == 0) fail("InvalidSpec", "y^{q+1} = x^2+x needs odd q >= 3");
        if (F.order() != std::uint64_t(q) * q) fail("InvalidSpec", "hyperelliptic curve lives over F_{q^2}");
        if (r != 2 || spec.roots[0] != 0 || spec.roots[1] != F.neg(1))
            fail("InvalidSpec", "hyperelliptic roots must be {0, -1}");
        ff->genus_ = (q - 1) / 2;
    }

    Poly f = Poly::constant(1);
    for (auto a : spec.roots) f = Poly::mul(F, f, Poly::x_minus(F, a));
    ff->f_ = f;

    ff->enumerate_places();
    return ff;
}

void FunctionField::enumerate_places() {
    const Field& F = *spec_.field;
    unsigned m = spec_.m;
    places_.clear();
    split_places_.clear();
    by_x_.clear();

    for (unsigned i = 1; i <= r(); ++i) places_.push_back(ramified(i));
    places_.push_back(Place::inf());
    if (hyperelliptic()) places_.push_back(Place::inf_prime());

    std::uint64_t q = F.order();
    for (std::uint64_t av = 0; av < q; ++av) {
        felem a = felem(av);
        felem fa = f_.eval(F, a);
        if (fa == 0) continue;
        // completely split iff f(a) is an m-th power in F_q^*
        if (F.pow(fa, std::int64_t((q - 1) / m)) != 1) continue;
        std::vector<Place> fiber;
        for (std::uint64_t bv = 0; bv < q; ++bv) {
            felem b = felem(bv);
            if (b != 0 && F.pow(b, std::int64_t(m)) == fa) fiber.push_back(Place::affine(a, b));
        }
        if (fiber.size() != m) fail("Internal", "split fiber has unexpected size");
        for (auto& P : fiber) {
            places_.push_back(P);
            split_places_.push_back(P);
        }
        by_x_[a] = fiber;
    }
}

Place FunctionField::ramified(unsigned i) const {
    if (i < 1 || i > r()) fail("InvalidSpec", "ramified index out of range");
    return Place::ramified(i, spec_.roots[i - 1]);
}

Place FunctionField::inf_prime() const {
    if (!hyperelliptic()) fail("WrongCurveKind", "second infinite place exists only on the hyperelliptic curve");
    return Place::inf_prime();
}

unsigned FunctionField::ram_index(const Place& P) const {
    switch (P.kind) {
        case PlaceKind::Affine: return 1;
        case PlaceKind::Ramified: return spec_.m;
        case PlaceKind::Inf:
        case PlaceKind::InfPrime: return hyperelliptic() ? (spec_.m) / 2 : spec_.m;
    }
    return 1;
}

Divisor FunctionField::x_minus_root_divisor(unsigned i) const {
    Divisor d = Divisor::single(ramified(i), int(spec_.m));
    if (hyperelliptic()) {
        int e = int(spec_.m / 2);
        d.add(Place::inf(), -e);
        d.add(Place::inf_prime(), -e);
    } else {
        d.add(Place::inf(), -int(spec_.m));
    }
    return d;
}

Divisor FunctionField::x_minus_split_divisor(felem a) const {
    auto it = by_x_.find(a);
    if (it == by_x_.end()) fail("NotSplit", "x-value is not completely split");
    Divisor d;
    for (auto& P : it->second) d.add(P, 1);
    if (hyperelliptic()) {
        int e = int(spec_.m / 2);
        d.add(Place::inf(), -e);
        d.add(Place::inf_prime(), -e);
    } else {
        d.add(Place::inf(), -int(spec_.m));
    }
    return d;
}

Divisor FunctionField::y_divisor() const {
    Divisor d;
    for (unsigned i = 1; i <= r(); ++i) d.add(ramified(i), 1);
    if (hyperelliptic()) {
        d.add(Place::inf(), -1);
        d.add(Place::inf_prime(), -1);
    } else {
        d.add(Place::inf(), -int(r()));
    }
    return d;
}

Divisor FunctionField::canonical_divisor() const {
    Divisor d;
    if (hyperelliptic()) {
        unsigned q = hyper_q();
        d.add(ramified(1), int(q));
        d.add(ramified(2), int(q));
        d.add(Place::inf(), -int((q + 3) / 2));
        d.add(Place::inf_prime(), -int((q + 3) / 2));
    } else {
        for (unsigned i = 1; i <= r(); ++i) d.add(ramified(i), int(spec_.m) - 1);
        d.add(Place::inf(), -int(spec_.m) - 1);
    }
    return d;
}

std::vector<Place> FunctionField::places_above_x(felem a) const {
    for (unsigned i = 0; i < r(); ++i)
        if (spec_.roots[i] == a) return {ramified(i + 1)};
    auto it = by_x_.find(a);
    if (it != by_x_.end()) return it->second;
    return {};  // non-split x-value, no modeled places
}

XDivisor FunctionField::floor_restrict(const Divisor& D) const {
    XDivisor out;
    bool saw_inf = false;
    std::vector<felem> xs;
    for (auto& [P, n] : D.support()) {
        if (P.kind == PlaceKind::Inf || P.kind == PlaceKind::InfPrime)
            saw_inf = true;
        else
            xs.push_back(P.a);
    }
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());

    for (auto a : xs) {
        auto above = places_above_x(a);
        if (above.empty()) fail("UnsupportedPlace", "divisor supported over a non-split x-value");
        int c = INT32_MAX;
        for (auto& P : above) c = std::min(c, floor_div(D.coeff(P), int(ram_index(P))));
        if (c) out.finite[a] = c;
    }
    if (saw_inf) {
        int c;
        if (hyperelliptic()) {
            int e = int(spec_.m / 2);
            c = std::min(floor_div(D.coeff(Place::inf()), e), floor_div(D.coeff(Place::inf_prime()), e));
        } else {
            c = floor_div(D.coeff(Place::inf()), int(spec_.m));
        }
        out.inf = c;
    }
    return out;
}

// ---- function arithmetic ----

FieldFunction FunctionField::ff_from_ratfun(RatFun r) const {
    FieldFunction z{std::vector<RatFun>(spec_.m)};
    z.c[0] = std::move(r);
    return z;
}

FieldFunction FunctionField::ff_y_power(std::uint64_t s) const {
    const Field& F = *spec_.field;
    FieldFunction z{std::vector<RatFun>(spec_.m)};
    z.c[s % spec_.m] = RatFun::of_poly(Poly::pow(F, f_, s / spec_.m));
    return z;
}

FieldFunction FunctionField::ff_add(const FieldFunction& a, const FieldFunction& b) const {
    const Field& F = *spec_.field;
    FieldFunction z{std::vector<RatFun>(spec_.m)};
    for (unsigned t = 0; t < spec_.m; ++t) z.c[t] = RatFun::add(F, a.c[t], b.c[t]);
    return z;
}

FieldFunction FunctionField::ff_sub(const FieldFunction& a, const FieldFunction& b) const {
    const Field& F = *spec_.field;
    FieldFunction z{std::vector<RatFun>(spec_.m)};
    for (unsigned t = 0; t < spec_.m; ++t) z.c[t] = RatFun::sub(F, a.c[t], b.c[t]);
    return z;
}

FieldFunction FunctionField::ff_mul(const FieldFunction& a, const FieldFunction& b) const {
    const Field& F = *spec_.field;
    RatFun fr = RatFun::of_poly(f_);
    FieldFunction z{std::vector<RatFun>(spec_.m)};
    for (unsigned i = 0; i < spec_.m; ++i) {
        if (a.c[i].is_zero()) continue;
        for (unsigned j = 0; j < spec_.m; ++j) {
            if (b.c[j].is_zero()) continue;
            RatFun term = RatFun::mul(F, a.c[i], b.c[j]);
            unsigned k = i + j;
            if (k >= spec_.m) {
                k -= spec_.m;
                term = RatFun::mul(F, term, fr);
            }
            z.c[k] = RatFun::add(F, z.c[k], term);
        }
    }
    return z;
}

FieldFunction FunctionField::ff_scale(const FieldFunction& a, felem s) const {
    const Field& F = *spec_.field;
    FieldFunction z{std::vector<RatFun>(spec_.m)};
    for (unsigned t = 0; t < spec_.m; ++t) z.c[t] = RatFun::scale(F, a.c[t], s);
    return z;
}

FieldFunction FunctionField::ff_mul_ratfun(const FieldFunction& a, const RatFun& r) const {
    const Field& F = *spec_.field;
    FieldFunction z{std::vector<RatFun>(spec_.m)};
    for (unsigned t = 0; t < spec_.m; ++t) z.c[t] = RatFun::mul(F, a.c[t], r);
    return z;
}

// ---- valuations and expansion ----

long FunctionField::valuation(const FieldFunction& z, const Place& P) const {
    const Field& F = *spec_.field;
    if (z.is_zero()) fail("ZeroFunction", "valuation of the zero function");
    unsigned m = spec_.m;

    if (P.kind == PlaceKind::Ramified) {
        // v(y) = 1, candidate values distinct mod m
        long best = LONG_MAX;
        for (unsigned t = 0; t < m; ++t) {
            if (z.c[t].is_zero()) continue;
            best = std::min(best, long(m) * z.c[t].valuation_at(F, P.a) + long(t));
        }
        return best;
    }
    if (P.kind == PlaceKind::Inf && !hyperelliptic()) {
        // v(x) = -m, v(y) = -r, candidates distinct mod m since gcd(m, r) = 1
        long best = LONG_MAX;
        for (unsigned t = 0; t < m; ++t) {
            if (z.c[t].is_zero()) continue;
            best = std::min(best, long(m) * z.c[t].valuation_at_inf() - long(t) * long(r()));
        }
        return best;
    }

    // split affine places and the hyperelliptic infinite branches: expand
    long lb = LONG_MAX;
    long span = 0;
    for (unsigned t = 0; t < m; ++t) {
        if (z.c[t].is_zero()) continue;
        long vt;
        if (P.kind == PlaceKind::Affine)
            vt = z.c[t].valuation_at(F, P.a);
        else
            vt = long(ram_index(P)) * z.c[t].valuation_at_inf() - long(t);
        lb = std::min(lb, vt);
        span += long(m) * (z.c[t].num.degree() + z.c[t].den.degree() + 2);
    }
    long cap = lb + span + 64;
    int want = int(lb) + 8;
    while (true) {
        Laurent L = expand_at(z, P, want);
        if (!L.all_zero()) return L.val();
        if (want > cap) fail("Internal", "valuation search exceeded the degree bound");
        want = want * 2 + 16;
    }
}

long FunctionField::valuation(const FFProduct& z, const Place& P) const {
    long v = 0;
    for (auto& [f, e] : z.factors) v += long(e) * valuation(f, P);
    return v;
}

Laurent FunctionField::expand_at(const FieldFunction& z, const Place& P, int want_cut) const {
    const Field& F = *spec_.field;
    unsigned m = spec_.m;

    int max_deg = 1;
    for (auto& c : z.c)
        if (!c.is_zero()) max_deg = std::max({max_deg, c.num.degree(), c.den.degree()});

    if (P.kind == PlaceKind::Affine) {
        size_t prec = size_t(std::max(8, want_cut + 2 * max_deg + 4));
        for (int tries = 0; tries < 14; ++tries) {
            PSeries fser = ps_shifted_poly(F, f_, P.a, prec);
            PSeries yb = hensel_root_m(F, m, fser, P.b, prec);
            Laurent x{0, int(prec), PSeries(prec, 0)};
            x.c[0] = P.a;
            if (prec > 1) x.c[1] = 1;
            x.normalize();
            Laurent ylau = l_of_pseries(yb, 0, int(prec));
            Laurent acc = l_zero(int(prec));
            Laurent ypow = l_term(F, 0, 1, int(prec));
            for (unsigned t = 0; t < m; ++t) {
                if (!z.c[t].is_zero()) acc = l_add(F, acc, l_mul(F, l_ratfun_at(F, z.c[t], x), ypow));
                if (t + 1 < m) ypow = l_mul(F, ypow, ylau);
            }
            if (acc.cut >= want_cut) return acc;
            prec *= 2;
        }
        fail("Internal", "series precision escalation failed at an affine place");
    }

    if ((P.kind == PlaceKind::Inf || P.kind == PlaceKind::InfPrime) && hyperelliptic()) {
        int e = int(m / 2);
        felem sign = P.kind == PlaceKind::Inf ? F.one() : F.neg(1);
        size_t prec = size_t(std::max(8, want_cut + (max_deg + 2) * e + int(m) + 8));
        for (int tries = 0; tries < 14; ++tries) {
            PSeries u = hensel_hyper_inf(F, unsigned(e), sign, prec);
            Laurent x = l_of_pseries(u, -e, int(prec) - e);  // x = t^{-e} u(t)
            Laurent acc = l_zero(int(prec));
            for (unsigned t = 0; t < m; ++t) {
                if (z.c[t].is_zero()) continue;
                Laurent ct = l_ratfun_at(F, z.c[t], x);
                ct.lo -= int(t);  // multiply by y^t = tau^{-t}
                ct.cut -= int(t);
                acc = l_add(F, acc, ct);
            }
            if (acc.cut >= want_cut) return acc;
            prec *= 2;
        }
        fail("Internal", "series precision escalation failed at an infinite branch");
    }

    fail("UnsupportedPlace", "expansion is available at split and hyperelliptic infinite places only");
}

felem FunctionField::evaluate(const FieldFunction& z, const Place& P) const {
    const Field& F = *spec_.field;
    if (P.kind != PlaceKind::Affine) fail("NonAffinePlace", "evaluation needs a split affine place");
    if (z.is_zero()) return 0;
    // fast path: all coefficient denominators nonzero at a
    bool fast = true;
    for (auto& c : z.c)
        if (!c.is_zero() && c.den.eval(F, P.a) == 0) fast = false;
    if (fast) {
        felem acc = 0, bp = 1;
        for (unsigned t = 0; t < spec_.m; ++t) {
            if (!z.c[t].is_zero()) acc = F.add(acc, F.mul(z.c[t].eval(F, P.a), bp));
            bp = F.mul(bp, P.b);
        }
        return acc;
    }
    long v = valuation(z, P);
    if (v < 0) fail("PoleAtPlace", "function has a pole at the evaluation place");
    if (v > 0) return 0;
    return expand_at(z, P, 1).coeff(0);
}

felem FunctionField::evaluate(const FFProduct& z, const Place& P) const {
    const Field& F = *spec_.field;
    felem acc = 1;
    for (auto& [f, e] : z.factors) {
        felem v = evaluate(f, P);
        if (v == 0 && e < 0) fail("PoleAtPlace", "negative power of a vanishing factor");
        acc = F.mul(acc, F.pow(v, e));
    }
    return acc;
}

Divisor FunctionField::principal_divisor(const FieldFunction& z) const {
    if (z.is_zero()) fail("ZeroFunction", "divisor of the zero function");
    Divisor d;
    for (auto& P : places_) {
        long v = valuation(z, P);
        if (v) d.add(P, int(v));
    }
    if (d.degree() != 0)
        fail("UnmodeledSupport", "function has zeros or poles outside the modeled places");
    return d;
}

Divisor FunctionField::principal_divisor(const FFProduct& z) const {
    Divisor d;
    for (auto& [f, e] : z.factors) d = d + principal_divisor(f) * e;
    return d;
}

// ---- Riemann-Roch ----

std::vector<RatFun> FunctionField::lx_basis(const XDivisor& E) const {
    const Field& F = *spec_.field;
    int d = E.degree();
    std::vector<RatFun> basis;
    if (d < 0) return basis;
    Poly num1 = Poly::constant(1), den1 = Poly::constant(1);
    for (auto& [a, n] : E.finite) {
        if (n > 0)
            den1 = Poly::mul(F, den1, Poly::pow(F, Poly::x_minus(F, a), std::uint64_t(n)));
        else if (n < 0)
            num1 = Poly::mul(F, num1, Poly::pow(F, Poly::x_minus(F, a), std::uint64_t(-n)));
    }
    Poly xp = Poly::constant(1);
    for (int j = 0; j <= d; ++j) {
        basis.push_back(RatFun::of(F, Poly::mul(F, xp, num1), den1));
        xp = Poly::mul(F, xp, Poly::x());
    }
    return basis;
}

std::vector<FieldFunction> FunctionField::rr_basis(const Divisor& G) const {
    const Field& F = *spec_.field;
    unsigned m = spec_.m;

    for (auto& [P, n] : G.support()) {
        if (P.kind == PlaceKind::InfPrime && !hyperelliptic())
            fail("UnsupportedPlace", "this curve has a single infinite place");
        if (P.kind == PlaceKind::Affine) {
            felem fa = f_.eval(F, P.a);
            if (P.b == 0 || F.pow(P.b, std::int64_t(m)) != fa)
                fail("UnsupportedPlace", "affine support must lie on a split fiber");
        }
    }

    // clear positive coefficients at split places: multiply candidates by
    // phi = prod (x-a)^{M_a}, i.e. compute L(G - (phi)) and divide back
    std::map<felem, int> clear;
    for (auto& [P, n] : G.support())
        if (P.kind == PlaceKind::Affine && n > 0) {
            auto [it, ins] = clear.try_emplace(P.a, n);
            if (!ins) it->second = std::max(it->second, n);
        }
    Divisor A = G;
    RatFun phi = RatFun::constant(1);
    for (auto& [a, M] : clear) {
        phi = RatFun::mul(F, phi, RatFun::of_poly(Poly::pow(F, Poly::x_minus(F, a), std::uint64_t(M))));
        A = A - x_minus_split_divisor(a) * M;
    }

    // ambient invariant divisor B >= A supported on ramified/infinite places
    Divisor B;
    for (unsigned i = 1; i <= r(); ++i) B.add(ramified(i), A.coeff(ramified(i)));
    int def_inf = 0, def_infp = 0;
    if (hyperelliptic()) {
        int ci = A.coeff(Place::inf()), cip = A.coeff(Place::inf_prime());
        int c = std::max(ci, cip);
        B.add(Place::inf(), c);
        B.add(Place::inf_prime(), c);
        def_inf = c - ci;
        def_infp = c - cip;
    } else {
        B.add(Place::inf(), A.coeff(Place::inf()));
    }

    // Maharaj decomposition of L(B) along powers of y
    Divisor ydiv = y_divisor();
    std::vector<FieldFunction> amb;
    for (unsigned t = 0; t < m; ++t) {
        XDivisor Et = floor_restrict(B + ydiv * int(t));
        for (auto& c : lx_basis(Et)) {
            FieldFunction z{std::vector<RatFun>(m)};
            z.c[t] = c;
            amb.push_back(std::move(z));
        }
    }
    if (amb.empty()) return {};

    // linear conditions cutting L(A) out of L(B)
    struct Cond {
        Place P;
        int from, to;  // half-open exponent range that must vanish
    };
    std::vector<Cond> conds;
    for (auto& [P, n] : A.support())
        if (P.kind == PlaceKind::Affine && n < 0) conds.push_back({P, 0, -n});
    if (def_inf > 0) {
        int c = B.coeff(Place::inf());
        conds.push_back({Place::inf(), -c, -c + def_inf});
    }
    if (def_infp > 0) {
        int c = B.coeff(Place::inf_prime());
        conds.push_back({Place::inf_prime(), -c, -c + def_infp});
    }

    std::vector<FieldFunction> result;
    if (conds.empty()) {
        result = std::move(amb);
    } else {
        size_t nrows = 0;
        for (auto& c : conds) nrows += size_t(c.to - c.from);
        Matrix M(nrows, amb.size());
        for (size_t j = 0; j < amb.size(); ++j) {
            size_t row = 0;
            for (auto& c : conds) {
                Laurent L = expand_at(amb[j], c.P, c.to);
                for (int e = c.from; e < c.to; ++e) M.at(row++, j) = L.coeff(e);
            }
        }
        Matrix K = M.nullspace(F);
        for (size_t i = 0; i < K.rows(); ++i) {
            FieldFunction z = ff_zero();
            for (size_t j = 0; j < amb.size(); ++j)
                if (K.at(i, j)) z = ff_add(z, ff_scale(amb[j], K.at(i, j)));
            result.push_back(std::move(z));
        }
    }

    if (!clear.empty()) {
        RatFun inv_phi = RatFun::div(F, RatFun::constant(1), phi);
        for (auto& z : result) z = ff_mul_ratfun(z, inv_phi);
    }
    return result;
}

long FunctionField::ell(const Divisor& G) const {
    if (G.degree() < 0) return 0;
    return long(rr_basis(G).size());
}

bool FunctionField::is_nonspecial(const Divisor& A) const {
    // i(A) = ell(A) - deg A - 1 + g
    return ell(A) == long(A.degree()) + 1 - long(genus_);
}

Divisor FunctionField::nonspecial_divisor(const Place& P) const {
    if (hyperelliptic()) fail("WrongCurveKind", "the explicit non-special divisor needs a coprime Kummer field");
    if (P.kind == PlaceKind::Ramified) fail("InadmissiblePlace", "P must have b != 0 or lie at infinity");
    if (P.kind == PlaceKind::Affine) {
        bool known = false;
        for (auto& S : split_places_)
            if (S == P) known = true;
        if (!known) fail("InadmissiblePlace", "P is not a modeled rational place");
    }
    Divisor A;
    unsigned m = spec_.m, rr_ = r();
    for (unsigned i = 1; i < rr_; ++i) A.add(ramified(i), int((std::uint64_t(i) * m) / rr_));
    A.add(P, -1);
    return A;
}

std::pair<FieldFunction, Divisor> FunctionField::support_divisor_h() const {
    if (!hyperelliptic()) fail("WrongCurveKind", "the support divisor h is defined on y^{q+1} = x^2 + x");
    const Field& F = *spec_.field;
    unsigned q = hyper_q();
    // h = (y^{q^2-1} - 1)/(2x+1) = ((x^2+x)^{q-1} - 1)/(2x+1), rational in x
    Poly num = Poly::pow(F, f_, q - 1);
    num = Poly::add(F, num, Poly::constant(F.neg(1)));
    Poly den{std::vector<felem>{1, F.from_int(2)}};  // 2x + 1
    FieldFunction h = ff_from_ratfun(RatFun::of(F, num, den));

    Divisor D;
    for (auto& P : split_places_) D.add(P, 1);
    int expect = 2 * int(q) * int(q) - int(q) - 3;
    if (D.degree() != expect) fail("Internal", "support divisor has unexpected degree");
    return {h, D};
}

}  // namespace aglcp
