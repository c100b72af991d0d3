#include "aglcp/serialize.hpp"

namespace aglcp {

json field_to_json(const Field& F) {
    json j;
    j["p"] = F.p();
    j["m"] = F.m();
    j["modulus"] = F.modulus();
    return j;
}

FieldRef field_from_json(const json& j) {
    auto F = Field::make(j.at("p").get<std::uint64_t>(), j.at("m").get<unsigned>());
    if (j.contains("modulus") && j.at("modulus").get<std::vector<felem>>() != F->modulus())
        fail("ParseError", "stored modulus differs from the canonical one");
    return F;
}

json elem_to_json(const Field& F, felem e) { return json(F.coords(e)); }

felem elem_from_json(const Field& F, const json& j) {
    return F.from_coords(j.get<std::vector<std::uint32_t>>());
}

json place_to_json(const Field& F, const Place& P) {
    switch (P.kind) {
        case PlaceKind::Affine: {
            json j;
            j["affine"] = json::array({elem_to_json(F, P.a), elem_to_json(F, P.b)});
            return j;
        }
        case PlaceKind::Ramified: {
            json j;
            j["ramified"] = P.index;
            return j;
        }
        case PlaceKind::Inf: return json("inf");
        case PlaceKind::InfPrime: return json("inf_prime");
    }
    return json();
}

Place place_from_json(const FunctionField& ff, const json& j) {
    if (j.is_string()) {
        if (j == "inf") return ff.inf();
        if (j == "inf_prime") return ff.inf_prime();
        fail("ParseError", "unknown place tag");
    }
    if (j.contains("ramified")) return ff.ramified(j.at("ramified").get<unsigned>());
    if (j.contains("affine")) {
        const auto& ab = j.at("affine");
        return Place::affine(elem_from_json(ff.F(), ab.at(0)), elem_from_json(ff.F(), ab.at(1)));
    }
    fail("ParseError", "unknown place descriptor");
}

json divisor_to_json(const Field& F, const Divisor& D) {
    json arr = json::array();
    for (auto& [P, n] : D.support()) arr.push_back(json::array({place_to_json(F, P), n}));
    return arr;
}

Divisor divisor_from_json(const FunctionField& ff, const json& j) {
    Divisor d;
    for (auto& it : j) d.add(place_from_json(ff, it.at(0)), it.at(1).get<int>());
    return d;
}

json matrix_to_json(const Field& F, const Matrix& M) {
    json rows = json::array();
    for (size_t i = 0; i < M.rows(); ++i) {
        json row = json::array();
        for (size_t j = 0; j < M.cols(); ++j) row.push_back(elem_to_json(F, M.at(i, j)));
        rows.push_back(row);
    }
    return rows;
}

json certificate_to_json(const CodeCertificate& c) {
    json j;
    j["n"] = c.n;
    j["k"] = c.k;
    j["d_lower"] = c.d_lower;
    if (c.d_exact)
        j["d_exact"] = *c.d_exact;
    else
        j["d_exact"] = nullptr;
    j["hull_dim"] = c.hull_dim;
    j["is_lcd"] = c.is_lcd;
    j["is_lcp_with"] = c.is_lcp_with;
    if (c.security_parameter)
        j["security_parameter"] = *c.security_parameter;
    else
        j["security_parameter"] = nullptr;
    return j;
}

json construction_to_json(const CurveConstruction& c) {
    const Field& F = c.field->F();
    json j;
    j["format"] = "aglcp-construction-v1";
    j["family"] = c.family;
    j["params"] = c.params;
    j["field"] = field_to_json(F);
    j["curve"] = {{"kind", c.field->hyperelliptic() ? "hyperelliptic_x2x" : "kummer"},
                  {"m", c.field->m()},
                  {"roots", json::array()}};
    for (auto r : c.field->spec().roots) j["curve"]["roots"].push_back(elem_to_json(F, r));
    j["n"] = c.D.degree();
    j["D"] = divisor_to_json(F, c.D);
    j["G"] = divisor_to_json(F, c.G);
    j["H"] = divisor_to_json(F, c.H);
    j["predicted"] = {{"n", c.pred_n}, {"k_g", c.pred_kg}, {"d_g", c.pred_dg}, {"k_h", c.pred_kh}, {"d_h", c.pred_dh}};
    j["certified"] = c.certified;
    if (c.certified) {
        j["codes"] = {{"G", {{"gen", matrix_to_json(F, c.code_g.gen)}, {"cert", certificate_to_json(c.cert_g)}}},
                      {"H", {{"gen", matrix_to_json(F, c.code_h.gen)}, {"cert", certificate_to_json(c.cert_h)}}}};
        json checks;
        checks["supp_disjoint"] = c.supp_disjoint;
        checks["degree_sum"] = c.degree_sum;
        checks["degree_window"] = c.conditions.degree_window;
        checks["ell_sum"] = c.conditions.ell_sum;
        checks["gcd_degree"] = c.conditions.gcd_degree;
        checks["gcd_nonspecial"] = c.conditions.gcd_nonspecial;
        checks["witness_matches"] = c.conditions.witness_matches;
        checks["equiv_nonspecial"] = c.conditions.equiv_nonspecial;
        if (c.conditions.lmd_direct)
            checks["lmd_minus_d_nonspecial_direct"] = *c.conditions.lmd_direct;
        else
            checks["lmd_minus_d_nonspecial_direct"] = nullptr;
        checks["lcp"] = c.conditions.lcp;
        if (c.dual_checked) checks["dual_match"] = c.dual_match;
        if (c.is_lcd_family) checks["hull_zero_after_twist"] = c.hull_zero;
        checks["all_pass"] = c.all_pass();
        j["checks"] = checks;
    }
    if (c.twist_vec) {
        json tv = json::array();
        for (auto v : *c.twist_vec) tv.push_back(elem_to_json(F, v));
        j["twist"] = tv;
    }
    j["notes"] = c.notes;
    return j;
}

json elliptic_to_json(const EllipticConstruction& c) {
    const Field& F = *c.curve.field;
    json j;
    j["format"] = "aglcp-elliptic-v1";
    j["family"] = c.family;
    j["params"] = c.params;
    j["field"] = field_to_json(F);
    j["curve"] = json::array({elem_to_json(F, c.curve.a1), elem_to_json(F, c.curve.a2), elem_to_json(F, c.curve.a3),
                              elem_to_json(F, c.curve.a4), elem_to_json(F, c.curve.a6)});
    j["p0"] = json::array({elem_to_json(F, c.P0.x), elem_to_json(F, c.P0.y)});
    const auto& jac = c.run.curve->jacobian();
    j["jacobian"] = {{"order", jac.order},
                     {"invariants", json::array({jac.inv_m, jac.inv_mk})},
                     {"two_torsion", jac.two_torsion}};
    j["n"] = c.run.supp_d.size();
    j["codes"] = {{"G", {{"gen", matrix_to_json(F, c.run.code_g.gen)}, {"cert", certificate_to_json(c.cert_g)}}},
                  {"H", {{"gen", matrix_to_json(F, c.run.code_h.gen)}, {"cert", certificate_to_json(c.cert_h)}}}};
    j["checks"] = {{"lcp", c.run.lcp},
                   {"mds_g", c.run.dist_g.mds},
                   {"mds_h", c.run.dist_h.mds},
                   {"all_pass", c.all_pass()}};
    return j;
}

json recompute_from_json(const json& stored, const CertifyOptions& opt) {
    std::string family = stored.at("family").get<std::string>();
    const json& params = stored.at("params");
    auto geti = [&](const char* k) { return params.at(k).get<long>(); };

    if (stored.at("format") == "aglcp-elliptic-v1") {
        FieldRef F = field_from_json(stored.at("field"));
        const json& cc = stored.at("curve");
        WeierstrassCurve w{F, elem_from_json(*F, cc.at(0)), elem_from_json(*F, cc.at(1)), elem_from_json(*F, cc.at(2)),
                           elem_from_json(*F, cc.at(3)), elem_from_json(*F, cc.at(4))};
        auto E = EllipticCurve::build(w);
        ECPoint P0 = ECPoint::affine(elem_from_json(*F, stored.at("p0").at(0)), elem_from_json(*F, stored.at("p0").at(1)));
        bool single = family == "elliptic_lcp_single2torsion";
        auto R = elliptic_construction(E, P0, geti("a"), geti("b"), single, opt);
        R.family = family;
        R.params.clear();
        for (auto it = params.begin(); it != params.end(); ++it) R.params[it.key()] = it.value().get<long>();
        return elliptic_to_json(R);
    }

    if (family == "ghf_lcp") return construction_to_json(ghf_lcp(unsigned(geti("q")), unsigned(geti("u")), geti("s"), opt));
    if (family == "ghf_lcd") return construction_to_json(ghf_lcd(unsigned(geti("q")), unsigned(geti("u")), opt));
    if (family == "gk_lcp") return construction_to_json(gk_lcp(unsigned(geti("p")), unsigned(geti("h")), geti("s"), opt));
    if (family == "gk_lcd") return construction_to_json(gk_lcd(unsigned(geti("p")), unsigned(geti("h")), geti("v"), opt));

    if (family == "hyper_lcp" || family == "hyper_lcd" || family == "hyper_corcodes") {
        auto ff = hyper_build(unsigned(geti("q")));
        if (family == "hyper_lcp") return construction_to_json(hyper_lcp_standard(ff, opt));
        unsigned gi = unsigned(params.contains("gi") ? geti("gi") : 1);
        auto c = hyper_corcode(ff, gi, opt);
        c.family = family;
        return construction_to_json(c);
    }

    if (family == "kummer_lcp" || family == "kummer_lcp_variant" || family == "kummer_lcd") {
        FieldRef F = field_from_json(stored.at("field"));
        const json& cj = stored.at("curve");
        std::vector<felem> roots;
        for (auto& rj : cj.at("roots")) roots.push_back(elem_from_json(*F, rj));
        auto ff = FunctionField::build(CurveSpec{CurveKind::Kummer, F, cj.at("m").get<unsigned>(), roots});
        if (family == "kummer_lcp") return construction_to_json(kummer_lcp(ff, geti("s"), opt));
        if (family == "kummer_lcp_variant") return construction_to_json(kummer_lcp_variant(ff, geti("s"), opt));
        return construction_to_json(kummer_lcd(ff, geti("t"), opt));
    }

    fail("ParseError", "unknown family: " + family);
}

}  // namespace aglcp
