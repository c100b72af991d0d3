#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "aglcp/codes.hpp"
#include "aglcp/gf.hpp"
#include "aglcp/poly.hpp"

namespace aglcp {

// y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6
struct WeierstrassCurve {
    FieldRef field;
    felem a1 = 0, a2 = 0, a3 = 0, a4 = 0, a6 = 0;
};

struct ECPoint {
    bool infinity = true;
    felem x = 0, y = 0;

    static ECPoint at_infinity() { return ECPoint{true, 0, 0}; }
    static ECPoint affine(felem x, felem y) { return ECPoint{false, x, y}; }
    auto key() const { return std::tuple(!infinity, x, y); }
    bool operator==(const ECPoint& o) const { return key() == o.key(); }
    bool operator<(const ECPoint& o) const { return key() < o.key(); }
};

struct JacobianInfo {
    std::size_t order = 0;
    unsigned inv_m = 1, inv_mk = 1;  // group = Z/m x Z/mk
    std::size_t two_torsion = 0;     // elements of order exactly 2
    ECPoint full_sum;                // group sum over all rational points
    std::vector<unsigned> point_order;  // parallel to points()
};

// Function with pole support in {P0, -P0, O}, written
// (p(x) + r(x) y) / (x - x0)^s.
struct ECFunction {
    Poly p, r;
    unsigned s = 0;
    felem x0 = 0;
};

class EllipticCurve;
using EllipticCurveRef = std::shared_ptr<const EllipticCurve>;

class EllipticCurve : public std::enable_shared_from_this<EllipticCurve> {
public:
    static EllipticCurveRef build(const WeierstrassCurve& w);

    const WeierstrassCurve& coeffs() const { return w_; }
    const Field& F() const { return *w_.field; }
    FieldRef field_ref() const { return w_.field; }

    bool on_curve(const ECPoint& P) const;
    ECPoint neg(const ECPoint& P) const;
    ECPoint add(const ECPoint& P, const ECPoint& Q) const;
    ECPoint mul(std::int64_t n, const ECPoint& P) const;
    bool is_two_torsion(const ECPoint& P) const;

    // all rational points, O first, affine points in coordinate order
    const std::vector<ECPoint>& points() const { return points_; }
    unsigned order_of(const ECPoint& P) const;
    const JacobianInfo& jacobian() const { return jac_; }

    // basis of L(a P0 + c O); exact linear algebra over the ambient space
    // (p(x) + r(x) y)/(x - x0)^s
    std::vector<ECFunction> rr_basis(long a, long c, const ECPoint& P0) const;
    long ell(long a, long c, const ECPoint& P0) const { return long(rr_basis(a, c, P0).size()); }

    felem eval(const ECFunction& f, const ECPoint& P) const;

    // group-sum image of the divisor class a*[P0] + c*[O] (Abel map)
    ECPoint class_sum(long a, long c, const ECPoint& P0) const;

private:
    explicit EllipticCurve(WeierstrassCurve w) : w_(std::move(w)) {}
    WeierstrassCurve w_;
    std::vector<ECPoint> points_;
    JacobianInfo jac_;

    felem rhs(felem x) const;          // x^3 + a2 x^2 + a4 x + a6
    felem ylin(felem x) const;         // a1 x + a3
    // power series data at an affine point: expansions of x and y in the
    // local parameter
    void local_expansions(const ECPoint& P, size_t prec, PSeries& xs, PSeries& ys) const;
};

// exact distance of an elliptic AG code via the d = n-k or n-k+1 dichotomy:
// the code is non-MDS iff some k distinct evaluation points sum to the class
// of G in the Jacobian
struct MdsResult {
    bool mds = false;
    long d = 0;
};
MdsResult elliptic_exact_distance(const EllipticCurve& E, const std::vector<ECPoint>& supp_d,
                                  const ECPoint& class_of_g, size_t k, std::uint64_t comb_budget = 1000000);

// LCP pairs of elliptic codes, split by the two-torsion structure
struct EllipticLcpResult {
    EllipticCurveRef curve;
    ECPoint P0;
    long a = 0, b = 0;
    std::vector<ECPoint> supp_d;  // D = all points except {P0, O}
    LinearCode code_g, code_h;    // C_L(D, aP0+(n-b)O), C_L(D, bP0-aO)
    bool lcp = false;
    MdsResult dist_g, dist_h, dist_g_dual, dist_h_dual;
};

// case: the Jacobian is odd or has several order-2 elements
EllipticLcpResult elliptic_lcp(const EllipticCurveRef& E, const ECPoint& P0, long a, long b);
// case: the Jacobian has exactly one element of order 2
EllipticLcpResult elliptic_lcp_single2torsion(const EllipticCurveRef& E, const ECPoint& P0, long a, long b);

}  // namespace aglcp
