#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace aglcp {

// Element of F_{p^m}. The base-p digits of the value are the coordinates in
// the power basis of the field modulus, least significant digit = constant
// coordinate.
using felem = std::uint32_t;

struct Error : std::runtime_error {
    std::string kind;
    Error(std::string k, const std::string& msg) : std::runtime_error(k + ": " + msg), kind(std::move(k)) {}
};

[[noreturn]] inline void fail(const char* kind, const std::string& msg) {
    throw Error(kind, msg);
}

class Field;
using FieldRef = std::shared_ptr<const Field>;

// Exact arithmetic in F_{p^m}, q = p^m <= 2^31. The modulus is the canonical
// (smallest) monic irreducible of degree m over F_p, so serialized elements
// are reproducible across runs. Immutable after construction.
class Field {
public:
    static FieldRef make(std::uint64_t p, unsigned m);

    std::uint64_t p() const { return p_; }
    unsigned m() const { return m_; }
    std::uint64_t order() const { return q_; }
    std::uint32_t id() const { return id_; }
    // m+1 coefficients, constant first, leading coefficient 1
    const std::vector<felem>& modulus() const { return modulus_; }

    felem zero() const { return 0; }
    felem one() const { return 1; }

    felem add(felem a, felem b) const;
    felem neg(felem a) const;
    felem sub(felem a, felem b) const { return add(a, neg(b)); }
    felem mul(felem a, felem b) const;
    felem inv(felem a) const;
    felem div(felem a, felem b) const { return mul(a, inv(b)); }
    felem pow(felem a, std::int64_t e) const;

    // integer n mod p, via the prime subfield
    felem from_int(std::int64_t n) const;

    bool is_square(felem a) const;
    // Deterministic square root: the root whose coordinate vector is
    // lexicographically smaller (constant coordinate compared first).
    // nullopt for non-squares (odd characteristic only).
    std::optional<felem> sqrt(felem a) const;

    // e^{(q-1)/(q0-1)} for the subfield F_{q0}; result is fixed by x -> x^{q0}
    felem norm_to(std::uint64_t sub_order, felem e) const;

    // all q elements in the fixed order 0, 1, 2, ..., q-1
    std::vector<felem> elements() const;

    // smallest generator of F_q^* in element order
    felem generator() const;

    std::vector<std::uint32_t> coords(felem a) const;
    felem from_coords(const std::vector<std::uint32_t>& c) const;

    bool same(const Field& other) const { return id_ == other.id_; }

private:
    Field() = default;

    std::uint64_t p_ = 0, q_ = 0;
    unsigned m_ = 0;
    std::uint32_t id_ = 0;
    std::vector<felem> modulus_;

    // exp/log tables for q <= 2^16, empty otherwise
    std::vector<felem> exp_, log_;

    felem mul_generic(felem a, felem b) const;
    void build_tables();
};

// Image of e under the embedding that sends the power-basis generator of sub
// to the smallest root (in element order) of sub's modulus inside sup.
felem embed(const Field& sub, const Field& sup, felem e);

}  // namespace aglcp
