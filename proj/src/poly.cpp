#include "aglcp/poly.hpp"

namespace aglcp {

Poly Poly::add(const Field& F, const Poly& a, const Poly& b) {
    std::vector<felem> r(std::max(a.c_.size(), b.c_.size()), 0);
    for (size_t i = 0; i < r.size(); ++i) r[i] = F.add(a.coeff(i), b.coeff(i));
    return Poly(std::move(r));
}

Poly Poly::sub(const Field& F, const Poly& a, const Poly& b) {
    std::vector<felem> r(std::max(a.c_.size(), b.c_.size()), 0);
    for (size_t i = 0; i < r.size(); ++i) r[i] = F.sub(a.coeff(i), b.coeff(i));
    return Poly(std::move(r));
}

Poly Poly::neg(const Field& F, const Poly& a) {
    std::vector<felem> r(a.c_.size());
    for (size_t i = 0; i < r.size(); ++i) r[i] = F.neg(a.c_[i]);
    return Poly(std::move(r));
}

Poly Poly::mul(const Field& F, const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<felem> r(a.c_.size() + b.c_.size() - 1, 0);
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (!a.c_[i]) continue;
        for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] = F.add(r[i + j], F.mul(a.c_[i], b.c_[j]));
    }
    return Poly(std::move(r));
}

Poly Poly::scale(const Field& F, const Poly& a, felem s) {
    if (!s) return Poly();
    std::vector<felem> r(a.c_.size());
    for (size_t i = 0; i < r.size(); ++i) r[i] = F.mul(a.c_[i], s);
    return Poly(std::move(r));
}

std::pair<Poly, Poly> Poly::divmod(const Field& F, const Poly& a, const Poly& b) {
    if (b.is_zero()) fail("DivisionByZero", "polynomial division by zero");
    if (a.degree() < b.degree()) return {Poly(), a};
    std::vector<felem> rem = a.c_;
    std::vector<felem> quot(a.degree() - b.degree() + 1, 0);
    felem il = F.inv(b.lead());
    for (int i = a.degree(); i >= b.degree(); --i) {
        felem c = F.mul(rem[size_t(i)], il);
        if (c) {
            quot[size_t(i - b.degree())] = c;
            for (int j = 0; j <= b.degree(); ++j)
                rem[size_t(i - b.degree() + j)] = F.sub(rem[size_t(i - b.degree() + j)], F.mul(c, b.coeff(size_t(j))));
        }
    }
    return {Poly(std::move(quot)), Poly(std::move(rem))};
}

Poly Poly::gcd(const Field& F, Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = divmod(F, a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic(F);
}

Poly Poly::derivative(const Field& F, const Poly& a) {
    if (a.degree() < 1) return Poly();
    std::vector<felem> r(a.c_.size() - 1);
    for (size_t i = 1; i < a.c_.size(); ++i) r[i - 1] = F.mul(F.from_int(std::int64_t(i)), a.c_[i]);
    return Poly(std::move(r));
}

Poly Poly::pow(const Field& F, Poly a, std::uint64_t e) {
    Poly r = Poly::constant(1);
    while (e) {
        if (e & 1) r = mul(F, r, a);
        a = mul(F, a, a);
        e >>= 1;
    }
    return r;
}

Poly Poly::monic(const Field& F) const {
    if (is_zero() || lead() == 1) return *this;
    return scale(F, *this, F.inv(lead()));
}

felem Poly::eval(const Field& F, felem x) const {
    felem r = 0;
    for (size_t i = c_.size(); i-- > 0;) r = F.add(F.mul(r, x), c_[i]);
    return r;
}

unsigned Poly::root_multiplicity(const Field& F, felem a) const {
    if (is_zero()) fail("ZeroFunction", "root multiplicity of the zero polynomial");
    Poly lin = Poly::x_minus(F, a);
    Poly f = *this;
    unsigned mult = 0;
    while (true) {
        auto [q, r] = divmod(F, f, lin);
        if (!r.is_zero()) return mult;
        ++mult;
        f = std::move(q);
    }
}

RatFun RatFun::of(const Field& F, Poly n, Poly d) {
    if (d.is_zero()) fail("DivisionByZero", "rational function with zero denominator");
    if (n.is_zero()) return RatFun{Poly(), Poly::constant(1)};
    Poly g = Poly::gcd(F, n, d);
    if (g.degree() > 0) {
        n = Poly::divmod(F, n, g).first;
        d = Poly::divmod(F, d, g).first;
    }
    felem il = F.inv(d.lead());
    return RatFun{Poly::scale(F, n, il), d.monic(F)};
}

RatFun RatFun::add(const Field& F, const RatFun& a, const RatFun& b) {
    return of(F, Poly::add(F, Poly::mul(F, a.num, b.den), Poly::mul(F, b.num, a.den)), Poly::mul(F, a.den, b.den));
}

RatFun RatFun::sub(const Field& F, const RatFun& a, const RatFun& b) {
    return of(F, Poly::sub(F, Poly::mul(F, a.num, b.den), Poly::mul(F, b.num, a.den)), Poly::mul(F, a.den, b.den));
}

RatFun RatFun::mul(const Field& F, const RatFun& a, const RatFun& b) {
    return of(F, Poly::mul(F, a.num, b.num), Poly::mul(F, a.den, b.den));
}

RatFun RatFun::div(const Field& F, const RatFun& a, const RatFun& b) {
    if (b.is_zero()) fail("DivisionByZero", "division by the zero function");
    return of(F, Poly::mul(F, a.num, b.den), Poly::mul(F, a.den, b.num));
}

RatFun RatFun::scale(const Field& F, const RatFun& a, felem s) {
    return RatFun{Poly::scale(F, a.num, s), a.den};
}

RatFun RatFun::pow(const Field& F, const RatFun& a, std::int64_t e) {
    if (e < 0) return pow(F, div(F, constant(1), a), -e);
    return RatFun{Poly::pow(F, a.num, std::uint64_t(e)), Poly::pow(F, a.den, std::uint64_t(e))};
}

int RatFun::valuation_at(const Field& F, felem a) const {
    if (is_zero()) fail("ZeroFunction", "valuation of the zero function");
    return int(num.root_multiplicity(F, a)) - int(den.root_multiplicity(F, a));
}

int RatFun::valuation_at_inf() const {
    if (is_zero()) fail("ZeroFunction", "valuation of the zero function");
    return den.degree() - num.degree();
}

felem RatFun::eval(const Field& F, felem a) const {
    if (is_zero()) return 0;
    felem dv = den.eval(F, a);
    if (dv != 0) return F.div(num.eval(F, a), dv);
    // removable singularity: cancel the common (x-a) factors exactly
    Poly n = num, d = den;
    Poly lin = Poly::x_minus(F, a);
    while (true) {
        felem nv = n.eval(F, a);
        dv = d.eval(F, a);
        if (dv != 0) return F.div(nv, dv);
        if (nv != 0) fail("PoleAtPlace", "evaluating a rational function at a pole");
        n = Poly::divmod(F, n, lin).first;
        d = Poly::divmod(F, d, lin).first;
    }
}

}  // namespace aglcp
