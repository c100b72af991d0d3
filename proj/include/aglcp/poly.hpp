#pragma once

#include <utility>
#include <vector>

#include "aglcp/gf.hpp"

namespace aglcp {

// Dense univariate polynomial over a fixed field. Coefficients are stored
// lowest-degree first with no trailing zeros; the zero polynomial is empty.
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<felem> c) : c_(std::move(c)) { trim(); }
    static Poly constant(felem a) { return a ? Poly(std::vector<felem>{a}) : Poly(); }
    static Poly x() { return Poly({0, 1}); }
    // x - a
    static Poly x_minus(const Field& F, felem a) { return Poly({F.neg(a), 1}); }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return int(c_.size()) - 1; }  // -1 for zero
    felem coeff(size_t i) const { return i < c_.size() ? c_[i] : 0; }
    felem lead() const { return c_.empty() ? 0 : c_.back(); }
    const std::vector<felem>& coeffs() const { return c_; }

    static Poly add(const Field& F, const Poly& a, const Poly& b);
    static Poly sub(const Field& F, const Poly& a, const Poly& b);
    static Poly neg(const Field& F, const Poly& a);
    static Poly mul(const Field& F, const Poly& a, const Poly& b);
    static Poly scale(const Field& F, const Poly& a, felem s);
    // quotient and remainder, b != 0
    static std::pair<Poly, Poly> divmod(const Field& F, const Poly& a, const Poly& b);
    static Poly gcd(const Field& F, Poly a, Poly b);  // monic
    static Poly derivative(const Field& F, const Poly& a);
    static Poly pow(const Field& F, Poly a, std::uint64_t e);
    Poly monic(const Field& F) const;

    felem eval(const Field& F, felem x) const;
    // multiplicity of the root a (0 if not a root)
    unsigned root_multiplicity(const Field& F, felem a) const;

    bool operator==(const Poly& o) const { return c_ == o.c_; }

private:
    std::vector<felem> c_;
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
};

// Reduced fraction of polynomials; denominator monic and nonzero.
struct RatFun {
    Poly num, den = Poly::constant(1);

    bool is_zero() const { return num.is_zero(); }
    static RatFun of(const Field& F, Poly n, Poly d);
    static RatFun of_poly(Poly n) { return RatFun{std::move(n), Poly::constant(1)}; }
    static RatFun constant(felem a) { return of_poly(Poly::constant(a)); }

    static RatFun add(const Field& F, const RatFun& a, const RatFun& b);
    static RatFun sub(const Field& F, const RatFun& a, const RatFun& b);
    static RatFun mul(const Field& F, const RatFun& a, const RatFun& b);
    static RatFun div(const Field& F, const RatFun& a, const RatFun& b);
    static RatFun scale(const Field& F, const RatFun& a, felem s);
    static RatFun pow(const Field& F, const RatFun& a, std::int64_t e);

    // valuation at x = a; zero function not allowed
    int valuation_at(const Field& F, felem a) const;
    // valuation at x = infinity: deg(den) - deg(num)
    int valuation_at_inf() const;
    // value at x = a, requires valuation >= 0 there
    felem eval(const Field& F, felem a) const;

    bool operator==(const RatFun& o) const { return num == o.num && den == o.den; }
};

}  // namespace aglcp
