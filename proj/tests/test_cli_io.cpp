#include "aglcp/serialize.hpp"

#include "doctest.h"

using namespace aglcp;

TEST_CASE("field and element serialization round-trips") {
    auto F9 = Field::make(3, 2);
    json fj = field_to_json(*F9);
    auto F9b = field_from_json(fj);
    CHECK(F9b->order() == 9);
    CHECK(F9b->modulus() == F9->modulus());

    for (auto e : F9->elements()) CHECK(elem_from_json(*F9, elem_to_json(*F9, e)) == e);
}

TEST_CASE("divisor serialization round-trips") {
    auto F = Field::make(2, 2);
    auto ff = FunctionField::build(CurveSpec{CurveKind::Kummer, F, 3, {0, 1}});
    Divisor d = Divisor::single(ff->ramified(1), 2);
    d.add(ff->inf(), -3);
    d.add(ff->split_places()[2], 5);
    json j = divisor_to_json(*F, d);
    CHECK(divisor_from_json(*ff, j) == d);
}

TEST_CASE("construction json recomputes identically") {
    auto F = Field::make(2, 2);
    auto ff = FunctionField::build(CurveSpec{CurveKind::Kummer, F, 3, {0, 1}});
    auto C = kummer_lcp(ff, 3);
    json j = construction_to_json(C);
    json fresh = recompute_from_json(j, CertifyOptions{});
    CHECK(j == fresh);
    // byte-identical dumps
    CHECK(j.dump(2) == fresh.dump(2));

    // a corrupted generator entry is caught
    json bad = j;
    auto& cell = bad["codes"]["G"]["gen"][0][0];
    cell[0] = (cell[0].get<int>() + 1) % 2;
    CHECK_FALSE(recompute_from_json(bad, CertifyOptions{}) == bad);
}

TEST_CASE("elliptic json recomputes identically") {
    auto F = Field::make(2, 3);
    auto E = EllipticCurve::build(WeierstrassCurve{F, 0, 0, 1, 1, 1});
    auto R = elliptic_construction(E, E->points()[1], 1, 5, false, CertifyOptions{});
    json j = elliptic_to_json(R);
    CHECK(recompute_from_json(j, CertifyOptions{}) == j);
}
