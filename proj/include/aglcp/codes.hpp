#pragma once

#include <optional>
#include <string>
#include <vector>

#include "aglcp/funcfield.hpp"
#include "aglcp/linalg.hpp"

namespace aglcp {

// Linear [n, k] code over F_q held as a generator matrix in reduced row
// echelon form, the canonical representative of its row space.
struct LinearCode {
    FieldRef field;
    size_t n = 0;
    size_t k = 0;
    Matrix gen;  // k x n, RREF, no zero rows
};

struct DistanceResult {
    long d = 0;
    bool exact = false;
};

struct CodeCertificate {
    size_t n = 0, k = 0;
    long d_lower = 0;
    std::optional<long> d_exact;
    size_t hull_dim = 0;
    bool is_lcd = false;
    std::string is_lcp_with;  // partner label, empty if none
    std::optional<long> security_parameter;
};

// canonicalize arbitrary spanning rows into a LinearCode
LinearCode make_code(FieldRef field, Matrix rows, size_t n);

// rows evaluate the basis functions at the given places; k = rank
LinearCode eval_code(const FunctionField& ff, const std::vector<FieldFunction>& basis,
                     const std::vector<Place>& places);

LinearCode dual(const LinearCode& C);
size_t hull_dim(const LinearCode& C);
bool is_lcp(const LinearCode& C1, const LinearCode& C2);
bool is_lcd(const LinearCode& C);
bool row_space_equal(const LinearCode& C1, const LinearCode& C2);

// Exhaustive scan of the q^k nonzero codewords when q^k <= budget
// (exact = true); otherwise reports the caller's designed lower bound with
// exact = false. Deterministic.
DistanceResult min_distance(const LinearCode& C, std::uint64_t budget, long designed_lower);

// columnwise scaling by nonzero entries
LinearCode twist(const LinearCode& C, const std::vector<felem>& a);

// min(d(C1), d(C2^perp)) for an LCP pair; exact iff both distances were
// exhaustively computed
DistanceResult security_parameter(const LinearCode& C1, const LinearCode& C2, std::uint64_t budget,
                                  long designed_lower_c1, long designed_lower_c2perp);

}  // namespace aglcp
