#pragma once

#include <map>
#include <memory>
#include <vector>

#include "aglcp/gf.hpp"
#include "aglcp/poly.hpp"
#include "aglcp/series.hpp"

namespace aglcp {

enum class CurveKind { Kummer, HyperellipticX2X };

// y^m = f(x) = prod (x - roots[i]) over the given constants field.
//   Kummer:            2 <= r < m, gcd(m, r) = 1, m | q-1
//   HyperellipticX2X:  y^{q+1} = x^2 + x over F_{q^2}, q odd; roots = {0, -1}
struct CurveSpec {
    CurveKind kind = CurveKind::Kummer;
    FieldRef field;
    unsigned m = 0;
    std::vector<felem> roots;
};

enum class PlaceKind : std::uint8_t { Affine = 0, Ramified = 1, Inf = 2, InfPrime = 3 };

struct Place {
    PlaceKind kind = PlaceKind::Inf;
    felem a = 0, b = 0;  // Affine coordinates
    unsigned index = 0;  // Ramified: 1-based index into the root list

    static Place affine(felem a, felem b) { return Place{PlaceKind::Affine, a, b, 0}; }
    static Place ramified(unsigned i, felem root) { return Place{PlaceKind::Ramified, root, 0, i}; }
    static Place inf() { return Place{PlaceKind::Inf, 0, 0, 0}; }
    static Place inf_prime() { return Place{PlaceKind::InfPrime, 0, 0, 0}; }

    auto key() const { return std::tuple(std::uint8_t(kind), index, a, b); }
    bool operator<(const Place& o) const { return key() < o.key(); }
    bool operator==(const Place& o) const { return key() == o.key(); }
};

// Finite formal Z-combination of rational places; no zero coefficients stored.
class Divisor {
public:
    Divisor() = default;
    static Divisor single(const Place& P, int n = 1) {
        Divisor d;
        d.add(P, n);
        return d;
    }

    int coeff(const Place& P) const {
        auto it = m_.find(P);
        return it == m_.end() ? 0 : it->second;
    }
    void add(const Place& P, int n) {
        if (!n) return;
        auto [it, inserted] = m_.try_emplace(P, 0);
        it->second += n;
        if (it->second == 0) m_.erase(it);
    }
    int degree() const {
        int d = 0;
        for (auto& [p, n] : m_) d += n;
        return d;
    }
    bool empty() const { return m_.empty(); }
    const std::map<Place, int>& support() const { return m_; }

    Divisor operator+(const Divisor& o) const {
        Divisor r = *this;
        for (auto& [p, n] : o.m_) r.add(p, n);
        return r;
    }
    Divisor operator-(const Divisor& o) const {
        Divisor r = *this;
        for (auto& [p, n] : o.m_) r.add(p, -n);
        return r;
    }
    Divisor operator*(int k) const {
        Divisor r;
        for (auto& [p, n] : m_) r.add(p, n * k);
        return r;
    }
    bool operator==(const Divisor& o) const { return m_ == o.m_; }

    bool disjoint_from(const Divisor& o) const {
        for (auto& [p, n] : m_)
            if (o.coeff(p) != 0) return false;
        return true;
    }

private:
    std::map<Place, int> m_;
};

// coefficientwise min / max over the union of supports
Divisor gcd_div(const Divisor& A, const Divisor& B);
Divisor lmd_div(const Divisor& A, const Divisor& B);

// Element of the function field, written sum_{j<m} c_j(x) y^j with reduced
// rational-function coefficients.
struct FieldFunction {
    std::vector<RatFun> c;

    bool is_zero() const {
        for (auto& r : c)
            if (!r.is_zero()) return false;
        return true;
    }
};

// Formal product of field functions (factor, exponent); keeps valuations
// additive without needing general inversion.
struct FFProduct {
    std::vector<std::pair<FieldFunction, int>> factors;
};

// Divisor on the rational subfield F_q(x): finite places by x-value plus the
// place at infinity.
struct XDivisor {
    std::map<felem, int> finite;
    int inf = 0;
    int degree() const {
        int d = inf;
        for (auto& [a, n] : finite) d += n;
        return d;
    }
};

class FunctionField;
using FunctionFieldRef = std::shared_ptr<const FunctionField>;

class FunctionField : public std::enable_shared_from_this<FunctionField> {
public:
    static FunctionFieldRef build(const CurveSpec& spec);

    const CurveSpec& spec() const { return spec_; }
    const Field& F() const { return *spec_.field; }
    FieldRef field_ref() const { return spec_.field; }
    unsigned m() const { return spec_.m; }
    unsigned r() const { return unsigned(spec_.roots.size()); }
    bool hyperelliptic() const { return spec_.kind == CurveKind::HyperellipticX2X; }
    // q with m = q+1, for the hyperelliptic curve over F_{q^2}
    unsigned hyper_q() const { return spec_.m - 1; }
    unsigned genus() const { return genus_; }
    const Poly& f() const { return f_; }

    const std::vector<Place>& places() const { return places_; }
    const std::vector<Place>& split_places() const { return split_places_; }
    Place ramified(unsigned i) const;  // 1-based
    Place inf() const { return Place::inf(); }
    Place inf_prime() const;

    unsigned ram_index(const Place& P) const;  // ramification index e(P | x-line)

    Divisor x_minus_root_divisor(unsigned i) const;  // (x - alpha_i)
    Divisor y_divisor() const;                       // (y)
    Divisor canonical_divisor() const;               // (dx)
    // principal divisor of (x - a) for a completely split x-value
    Divisor x_minus_split_divisor(felem a) const;

    XDivisor floor_restrict(const Divisor& D) const;

    // ---- function arithmetic modulo y^m = f(x) ----
    FieldFunction ff_zero() const { return FieldFunction{std::vector<RatFun>(spec_.m)}; }
    FieldFunction ff_one() const { return ff_from_ratfun(RatFun::constant(1)); }
    FieldFunction ff_from_ratfun(RatFun r) const;
    FieldFunction ff_y_power(std::uint64_t s) const;
    FieldFunction ff_add(const FieldFunction& a, const FieldFunction& b) const;
    FieldFunction ff_sub(const FieldFunction& a, const FieldFunction& b) const;
    FieldFunction ff_mul(const FieldFunction& a, const FieldFunction& b) const;
    FieldFunction ff_scale(const FieldFunction& a, felem s) const;
    FieldFunction ff_mul_ratfun(const FieldFunction& a, const RatFun& r) const;

    // ---- valuations / evaluation ----
    long valuation(const FieldFunction& z, const Place& P) const;
    long valuation(const FFProduct& z, const Place& P) const;
    felem evaluate(const FieldFunction& z, const Place& P) const;
    felem evaluate(const FFProduct& z, const Place& P) const;
    // divisor of z over the modeled places; raises UnmodeledSupport if the
    // coefficients do not sum to zero
    Divisor principal_divisor(const FieldFunction& z) const;
    Divisor principal_divisor(const FFProduct& z) const;

    // Laurent expansion in the local parameter (x - a at split places, 1/y at
    // the hyperelliptic infinite branches), exact at least up to want_cut
    Laurent expand_at(const FieldFunction& z, const Place& P, int want_cut) const;

    // ---- Riemann-Roch ----
    std::vector<FieldFunction> rr_basis(const Divisor& G) const;
    long ell(const Divisor& G) const;
    bool is_nonspecial(const Divisor& A) const;

    // the explicit non-special divisor of degree g-1 attached to P
    Divisor nonspecial_divisor(const Place& P) const;

    // hyperelliptic h = (y^{q^2-1}-1)/(2x+1) and D = (h)_0
    std::pair<FieldFunction, Divisor> support_divisor_h() const;

private:
    explicit FunctionField(CurveSpec spec) : spec_(std::move(spec)) {}

    CurveSpec spec_;
    Poly f_;
    unsigned genus_ = 0;
    std::vector<Place> places_;
    std::vector<Place> split_places_;
    std::map<felem, std::vector<Place>> by_x_;  // split places grouped by a

    void enumerate_places();
    std::vector<Place> places_above_x(felem a) const;
    // basis of the genus-zero space L(E) on the x-line
    std::vector<RatFun> lx_basis(const XDivisor& E) const;
};

}  // namespace aglcp
