#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "aglcp/codes.hpp"
#include "aglcp/elliptic.hpp"
#include "aglcp/funcfield.hpp"

namespace aglcp {

struct CertifyOptions {
    std::uint64_t budget = 10'000'000;
    bool force_certify = false;
    // rank/hull certification is skipped above this length unless forced
    size_t certify_length_limit = 200;
};

// equivalence data for the non-speciality check of lmd(G,H) - D:
// lmd(G,H) - D - equivalent = (witness)
struct EquivWitness {
    Divisor equivalent;
    FFProduct witness;
};

struct PairConditionsReport {
    bool degree_window = false;      // 2g-2 < deg G, deg H < n
    bool ell_sum = false;            // l(G) + l(H) = n
    bool gcd_degree = false;         // deg gcd(G,H) = g-1
    bool gcd_nonspecial = false;
    bool witness_matches = false;    // principal divisor of the witness equals lmd-D-E
    bool equiv_nonspecial = false;   // the named equivalent divisor is non-special
    std::optional<bool> lmd_direct;  // direct l(lmd-D) = 0 check, when run
    bool lcp = false;                // rank verdict from the codes module

    bool all_pass() const {
        return degree_window && ell_sum && gcd_degree && gcd_nonspecial && witness_matches &&
               equiv_nonspecial && (!lmd_direct || *lmd_direct) && lcp;
    }
};

PairConditionsReport verify_pair_conditions(const FunctionField& ff, const Divisor& D, const Divisor& G, const Divisor& H,
                         const std::optional<EquivWitness>& route, bool also_direct);

struct CurveConstruction {
    std::string family;
    std::map<std::string, long> params;
    FunctionFieldRef field;
    std::vector<Place> d_places;  // evaluation places in order
    Divisor D, G, H;
    std::optional<std::vector<felem>> twist_vec;  // dual-identification / LCD twist
    bool certified = false;                       // rank-level checks were run
    LinearCode code_g, code_h;                    // present iff certified
    CodeCertificate cert_g, cert_h;
    PairConditionsReport conditions;                            // present iff certified
    // parameters predicted by the family formulas
    long pred_n = 0, pred_kg = 0, pred_dg = 0, pred_kh = 0, pred_dh = 0;
    bool is_lcd_family = false;   // certificate must show hull 0 (after twist when present)
    bool supp_disjoint = false;   // supp(G) and supp(H) avoid supp(D)
    bool degree_sum = false;      // deg G + deg H = n + 2g - 2
    bool dual_checked = false;    // a dual identification check was run
    bool dual_match = false;      // dual(C_G) equals C_H (LCD) or twist(C_H, a) (LCP)
    bool hull_zero = false;       // LCD families: hull of the (possibly twisted) code
    std::vector<std::string> notes;

    bool all_pass() const;
};

// ---- Kummer families (Section 3) ----
CurveConstruction kummer_lcp(const FunctionFieldRef& ff, long s, const CertifyOptions& opt = {});
CurveConstruction kummer_lcp_variant(const FunctionFieldRef& ff, long s, const CertifyOptions& opt = {});
CurveConstruction kummer_lcd(const FunctionFieldRef& ff, long t, const CertifyOptions& opt = {});

// generalized Hermitian y^{q^u+1} = x^q + x over F_{q^{2u}}; desk scale u = 1
FunctionFieldRef ghf_build(unsigned q, unsigned u);
CurveConstruction ghf_lcp(unsigned q, unsigned u, long s, const CertifyOptions& opt = {});
CurveConstruction ghf_lcd(unsigned q, unsigned u, const CertifyOptions& opt = {});

// Gatti-Korchmaros subcover, normalized to a monic Kummer model
FunctionFieldRef gk_build(unsigned p, unsigned h);
CurveConstruction gk_lcp(unsigned p, unsigned h, long s, const CertifyOptions& opt = {});
CurveConstruction gk_lcd(unsigned p, unsigned h, long v, const CertifyOptions& opt = {});

// ---- hyperelliptic y^{q+1} = x^2 + x (Section 4) ----
FunctionFieldRef hyper_build(unsigned q, const FieldRef& field_q2 = nullptr);
CurveConstruction hyper_lcp(const FunctionFieldRef& ff, const Divisor& G, const Divisor& H,
                            const CertifyOptions& opt = {});
CurveConstruction hyper_lcd(const FunctionFieldRef& ff, const Divisor& G, const Divisor& H,
                            const CertifyOptions& opt = {});
// the standard LCP pair G = gQ0 + qQ1 + (q^2-q-2)Qinf, H = gQ0 - Qinf + (q^2-q-2)Qinf'
CurveConstruction hyper_lcp_standard(const FunctionFieldRef& ff, const CertifyOptions& opt = {});
// the four LCD families G_1..G_4 (gi is 1-based)
CurveConstruction hyper_corcode(const FunctionFieldRef& ff, unsigned gi, const CertifyOptions& opt = {});

// ---- elliptic wrappers (Section 5) ----
struct EllipticConstruction {
    std::string family;
    std::map<std::string, long> params;
    WeierstrassCurve curve;
    ECPoint P0;
    long a = 0, b = 0;
    EllipticLcpResult run;
    CodeCertificate cert_g, cert_h;
    bool all_pass() const;
};

EllipticConstruction elliptic_construction(const EllipticCurveRef& E, const ECPoint& P0, long a, long b,
                                           bool single_two_torsion, const CertifyOptions& opt = {});

}  // namespace aglcp
