#include "aglcp/codes.hpp"

#include <algorithm>

namespace aglcp {

LinearCode make_code(FieldRef field, Matrix rows, size_t n) {
    if (rows.rows() == 0) return LinearCode{field, n, 0, Matrix(0, n)};
    if (rows.cols() != n) fail("ShapeMismatch", "generator rows of wrong length");
    rows.rref(*field);
    rows.drop_zero_rows();
    return LinearCode{field, n, rows.rows(), std::move(rows)};
}

LinearCode eval_code(const FunctionField& ff, const std::vector<FieldFunction>& basis,
                     const std::vector<Place>& places) {
    Matrix rows(basis.size(), places.size());
    for (size_t i = 0; i < basis.size(); ++i)
        for (size_t j = 0; j < places.size(); ++j) {
            try {
                rows.at(i, j) = ff.evaluate(basis[i], places[j]);
            } catch (const Error& e) {
                if (e.kind == "PoleAtPlace" || e.kind == "NonAffinePlace")
                    fail("PoleAtEvaluationPlace", "a basis function is not evaluable on supp(D)");
                throw;
            }
        }
    return make_code(ff.field_ref(), std::move(rows), places.size());
}

LinearCode dual(const LinearCode& C) {
    if (C.k == 0) {
        Matrix id(C.n, C.n);
        for (size_t i = 0; i < C.n; ++i) id.at(i, i) = 1;
        return make_code(C.field, std::move(id), C.n);
    }
    Matrix ns = C.gen.nullspace(*C.field);
    return make_code(C.field, std::move(ns), C.n);
}

size_t hull_dim(const LinearCode& C) {
    if (C.k == 0 || C.k == C.n) return 0;
    LinearCode D = dual(C);
    size_t rk = Matrix::stack(C.gen, D.gen).rank(*C.field);
    return C.k + D.k - rk;
}

bool is_lcp(const LinearCode& C1, const LinearCode& C2) {
    if (C1.n != C2.n) fail("LengthMismatch", "LCP needs codes of equal length");
    if (!C1.field->same(*C2.field)) fail("FieldMismatch", "LCP needs codes over the same field");
    if (C1.k + C2.k != C1.n) return false;
    return Matrix::stack(C1.gen, C2.gen).rank(*C1.field) == C1.n;
}

bool is_lcd(const LinearCode& C) { return hull_dim(C) == 0; }

bool row_space_equal(const LinearCode& C1, const LinearCode& C2) {
    if (C1.n != C2.n) fail("LengthMismatch", "comparing codes of different lengths");
    if (!C1.field->same(*C2.field)) fail("FieldMismatch", "comparing codes over different fields");
    return C1.k == C2.k && C1.gen == C2.gen;
}

DistanceResult min_distance(const LinearCode& C, std::uint64_t budget, long designed_lower) {
    if (C.k == 0) fail("ZeroDimensional", "minimum distance of the zero code");
    const Field& F = *C.field;
    std::uint64_t q = F.order();

    // q^k <= budget?
    std::uint64_t total = 1;
    bool fits = true;
    for (size_t i = 0; i < C.k; ++i) {
        if (total > budget / q) {
            fits = false;
            break;
        }
        total *= q;
    }
    if (!fits || total > budget) return DistanceResult{designed_lower, false};

    // odometer over message digits; codeword updated incrementally with
    // precomputed per-digit step rows
    auto elems = F.elements();
    std::vector<std::vector<felem>> step(C.k * q);  // (i, j): (e_{j+1 mod q} - e_j) * row_i
    for (size_t i = 0; i < C.k; ++i)
        for (std::uint64_t j = 0; j < q; ++j) {
            felem dv = F.sub(elems[(j + 1) % q], elems[j]);
            std::vector<felem> row(C.n);
            for (size_t c = 0; c < C.n; ++c) row[c] = F.mul(dv, C.gen.at(i, c));
            step[i * q + j] = std::move(row);
        }

    std::vector<std::uint64_t> digits(C.k, 0);
    std::vector<felem> cur(C.n, 0);
    long best = long(C.n) + 1;
    long weight = 0;
    for (std::uint64_t cnt = 1; cnt < total; ++cnt) {
        size_t i = 0;
        while (true) {
            const auto& d = step[i * q + digits[i]];
            for (size_t c = 0; c < C.n; ++c) {
                felem old = cur[c];
                felem nv = F.add(old, d[c]);
                cur[c] = nv;
                weight += (nv != 0) - (old != 0);
            }
            digits[i] = (digits[i] + 1) % q;
            if (digits[i] != 0) break;
            ++i;
        }
        if (weight < best) best = weight;
    }
    return DistanceResult{best, true};
}

LinearCode twist(const LinearCode& C, const std::vector<felem>& a) {
    if (a.size() != C.n) fail("ShapeMismatch", "twist vector length must equal the code length");
    const Field& F = *C.field;
    for (auto v : a)
        if (v == 0) fail("ZeroScalar", "twist entries must be nonzero");
    Matrix rows = C.gen;
    for (size_t i = 0; i < rows.rows(); ++i)
        for (size_t j = 0; j < C.n; ++j) rows.at(i, j) = F.mul(rows.at(i, j), a[j]);
    return make_code(C.field, std::move(rows), C.n);
}

DistanceResult security_parameter(const LinearCode& C1, const LinearCode& C2, std::uint64_t budget,
                                  long designed_lower_c1, long designed_lower_c2perp) {
    if (!is_lcp(C1, C2)) fail("NotLCP", "security parameter needs an LCP pair");
    DistanceResult d1 = min_distance(C1, budget, designed_lower_c1);
    DistanceResult d2 = min_distance(dual(C2), budget, designed_lower_c2perp);
    return DistanceResult{std::min(d1.d, d2.d), d1.exact && d2.exact};
}

}  // namespace aglcp
