#include "aglcp/gf.hpp"

#include <algorithm>
#include <atomic>

namespace aglcp {

namespace {

std::atomic<std::uint32_t> next_field_id{1};

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// dense polynomials over F_p with plain integer coefficients, used only while
// searching for the field modulus
using PPoly = std::vector<std::uint64_t>;

void ptrim(PPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

PPoly pmulmod(const PPoly& a, const PPoly& b, const PPoly& mod, std::uint64_t p) {
    PPoly r(a.size() + b.size(), 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    }
    // reduce by monic mod
    size_t dm = mod.size() - 1;
    for (size_t i = r.size(); i-- > dm;) {
        std::uint64_t c = r[i];
        if (!c) continue;
        r[i] = 0;
        for (size_t j = 0; j < dm; ++j) r[i - dm + j] = (r[i - dm + j] + (p - mod[j] % p) % p * c) % p;
    }
    r.resize(dm);
    ptrim(r);
    return r;
}

PPoly ppowmod(PPoly base, std::uint64_t e, const PPoly& mod, std::uint64_t p) {
    PPoly r{1};
    while (e) {
        if (e & 1) r = pmulmod(r, base, mod, p);
        base = pmulmod(base, base, mod, p);
        e >>= 1;
    }
    return r;
}

PPoly pgcd(PPoly a, PPoly b, std::uint64_t p) {
    ptrim(a);
    ptrim(b);
    while (!b.empty()) {
        // a mod b, b monic-ized on the fly
        std::uint64_t lead = b.back();
        std::uint64_t il = 1;
        {  // inverse of lead mod p by Fermat
            std::uint64_t e = p - 2, x = lead, acc = 1;
            while (e) {
                if (e & 1) acc = acc * x % p;
                x = x * x % p;
                e >>= 1;
            }
            il = acc;
        }
        PPoly r = a;
        while (r.size() >= b.size() && !r.empty()) {
            std::uint64_t c = r.back() * il % p;
            size_t shift = r.size() - b.size();
            for (size_t j = 0; j < b.size(); ++j) r[shift + j] = (r[shift + j] + (p - b[j] * c % p)) % p;
            ptrim(r);
        }
        a = b;
        b = r;
    }
    return a;
}

// no factor of degree <= deg/2  <=>  irreducible (f monic, deg >= 1)
bool is_irreducible(const PPoly& f, std::uint64_t p) {
    unsigned deg = unsigned(f.size() - 1);
    if (deg == 1) return true;
    PPoly x{0, 1};
    PPoly xp = x;
    for (unsigned k = 1; k <= deg / 2; ++k) {
        xp = ppowmod(xp, p, f, p);  // x^{p^k} mod f
        PPoly d = xp;
        // d - x
        if (d.size() < 2) d.resize(2, 0);
        d[1] = (d[1] + p - 1) % p;
        ptrim(d);
        PPoly g = pgcd(f, d, p);
        if (g.size() != 1) return false;
    }
    return true;
}

}  // namespace

FieldRef Field::make(std::uint64_t p, unsigned m) {
    if (!is_prime(p)) fail("NonPrime", "p = " + std::to_string(p) + " is not prime");
    if (m == 0) fail("DegreeZero", "extension degree must be >= 1");
    std::uint64_t q = 1;
    for (unsigned i = 0; i < m; ++i) {
        if (q > (std::uint64_t(1) << 31) / p) fail("OrderOverflow", "p^m exceeds 2^31");
        q *= p;
    }
    if (q > (std::uint64_t(1) << 31)) fail("OrderOverflow", "p^m exceeds 2^31");

    auto F = std::shared_ptr<Field>(new Field());
    F->p_ = p;
    F->m_ = m;
    F->q_ = q;
    F->id_ = next_field_id.fetch_add(1);

    // smallest monic irreducible of degree m: scan candidate lower parts in
    // base-p value order
    for (std::uint64_t v = 0;; ++v) {
        if (v >= q) fail("Internal", "no irreducible polynomial found");
        PPoly f(m + 1, 0);
        std::uint64_t t = v;
        for (unsigned i = 0; i < m; ++i) {
            f[i] = t % p;
            t /= p;
        }
        f[m] = 1;
        if (is_irreducible(f, p)) {
            F->modulus_.assign(f.begin(), f.end());
            break;
        }
    }
    if (q <= (1u << 16)) F->build_tables();
    return F;
}

felem Field::add(felem a, felem b) const {
    if (p_ == 2) return a ^ b;
    felem r = 0, mult = 1;
    for (unsigned i = 0; i < m_; ++i) {
        std::uint64_t d = (a % p_ + b % p_) % p_;
        r += felem(d) * mult;
        a /= felem(p_);
        b /= felem(p_);
        mult *= felem(p_);
    }
    return r;
}

felem Field::neg(felem a) const {
    if (p_ == 2) return a;
    felem r = 0, mult = 1;
    for (unsigned i = 0; i < m_; ++i) {
        std::uint64_t d = (p_ - a % p_) % p_;
        r += felem(d) * mult;
        a /= felem(p_);
        mult *= felem(p_);
    }
    return r;
}

felem Field::mul_generic(felem a, felem b) const {
    // digit convolution followed by reduction with the monic modulus
    std::uint64_t da[32] = {0}, db[32] = {0}, dr[64] = {0};
    for (unsigned i = 0; i < m_; ++i) {
        da[i] = a % p_;
        a /= felem(p_);
        db[i] = b % p_;
        b /= felem(p_);
    }
    for (unsigned i = 0; i < m_; ++i) {
        if (!da[i]) continue;
        for (unsigned j = 0; j < m_; ++j) dr[i + j] = (dr[i + j] + da[i] * db[j]) % p_;
    }
    for (unsigned i = 2 * m_ - 1; i >= m_ && i < 64; --i) {
        std::uint64_t c = dr[i];
        if (!c) continue;
        dr[i] = 0;
        for (unsigned j = 0; j < m_; ++j) dr[i - m_ + j] = (dr[i - m_ + j] + (p_ - modulus_[j]) * c) % p_;
        if (i == m_) break;
    }
    felem r = 0, mult = 1;
    for (unsigned i = 0; i < m_; ++i) {
        r += felem(dr[i]) * mult;
        mult *= felem(p_);
    }
    return r;
}

void Field::build_tables() {
    // factor q-1 once, then locate the smallest generator
    std::vector<std::uint64_t> primes;
    std::uint64_t n = q_ - 1;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        while (n % d == 0) {
            if (primes.empty() || primes.back() != d) primes.push_back(d);
            n /= d;
        }
    if (n > 1) primes.push_back(n);

    auto pow_generic = [&](felem a, std::uint64_t e) {
        felem r = 1;
        while (e) {
            if (e & 1) r = mul_generic(r, a);
            a = mul_generic(a, a);
            e >>= 1;
        }
        return r;
    };

    felem g = 0;
    for (felem cand = 1; cand < q_; ++cand) {
        bool ok = cand != 1 || q_ == 2;
        for (auto pr : primes)
            if (pow_generic(cand, (q_ - 1) / pr) == 1) {
                ok = false;
                break;
            }
        if (ok) {
            g = cand;
            break;
        }
    }

    log_.assign(q_, 0);
    exp_.assign(2 * (q_ - 1), 0);
    felem cur = 1;
    for (std::uint64_t i = 0; i < q_ - 1; ++i) {
        exp_[i] = cur;
        exp_[i + q_ - 1] = cur;
        log_[cur] = felem(i);
        cur = mul_generic(cur, g);
    }
}

felem Field::mul(felem a, felem b) const {
    if (a == 0 || b == 0) return 0;
    if (!exp_.empty()) return exp_[log_[a] + log_[b]];
    return mul_generic(a, b);
}

felem Field::inv(felem a) const {
    if (a == 0) fail("DivisionByZero", "inverse of zero");
    if (!exp_.empty()) return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
    return pow(a, std::int64_t(q_) - 2);
}

felem Field::pow(felem a, std::int64_t e) const {
    if (e < 0) {
        a = inv(a);
        e = -e;
    }
    if (a == 0) return e == 0 ? 1 : 0;
    if (!exp_.empty()) {
        std::uint64_t le = std::uint64_t(log_[a]) * std::uint64_t(e % std::int64_t(q_ - 1)) % (q_ - 1);
        return exp_[le];
    }
    felem r = 1;
    std::uint64_t ue = std::uint64_t(e);
    while (ue) {
        if (ue & 1) r = mul_generic(r, a);
        a = mul_generic(a, a);
        ue >>= 1;
    }
    return r;
}

felem Field::from_int(std::int64_t n) const {
    std::int64_t v = n % std::int64_t(p_);
    if (v < 0) v += std::int64_t(p_);
    return felem(v);
}

bool Field::is_square(felem a) const {
    if (a == 0 || p_ == 2) return true;
    return pow(a, std::int64_t((q_ - 1) / 2)) == 1;
}

std::vector<std::uint32_t> Field::coords(felem a) const {
    std::vector<std::uint32_t> c(m_);
    for (unsigned i = 0; i < m_; ++i) {
        c[i] = a % felem(p_);
        a /= felem(p_);
    }
    return c;
}

felem Field::from_coords(const std::vector<std::uint32_t>& c) const {
    if (c.size() != m_) fail("BadCoords", "expected " + std::to_string(m_) + " coordinates");
    felem r = 0, mult = 1;
    for (unsigned i = 0; i < m_; ++i) {
        if (c[i] >= p_) fail("BadCoords", "coordinate out of range");
        r += c[i] * mult;
        mult *= felem(p_);
    }
    return r;
}

std::optional<felem> Field::sqrt(felem a) const {
    if (a == 0) return felem(0);
    if (p_ == 2) return pow(a, std::int64_t(q_ / 2));
    if (!is_square(a)) return std::nullopt;

    // Tonelli-Shanks with the first non-square as auxiliary non-residue
    std::uint64_t s = q_ - 1;
    unsigned e = 0;
    while (s % 2 == 0) {
        s /= 2;
        ++e;
    }
    felem w;
    if (e == 1) {
        w = pow(a, std::int64_t((q_ + 1) / 4));
    } else {
        felem nr = 0;
        for (felem cand = 2; cand < q_; ++cand)
            if (!is_square(cand)) {
                nr = cand;
                break;
            }
        felem z = pow(nr, std::int64_t(s));
        felem x = pow(a, std::int64_t((s + 1) / 2));
        felem b = pow(a, std::int64_t(s));
        unsigned r = e;
        while (b != 1) {
            unsigned k = 0;
            felem t = b;
            while (t != 1) {
                t = mul(t, t);
                ++k;
            }
            felem gk = z;
            for (unsigned i = 0; i + k + 1 < r; ++i) gk = mul(gk, gk);
            x = mul(x, gk);
            z = mul(gk, gk);
            b = mul(b, z);
            r = k;
        }
        w = x;
    }

    // lexicographically smaller coordinate vector of the two roots
    felem w2 = neg(w);
    auto cw = coords(w), cw2 = coords(w2);
    return std::lexicographical_compare(cw.begin(), cw.end(), cw2.begin(), cw2.end()) ? w : w2;
}

felem Field::norm_to(std::uint64_t sub_order, felem e) const {
    if (sub_order < 2) fail("NotASubfield", "subfield order must be >= 2");
    std::uint64_t t = sub_order;
    unsigned j = 0;
    while (t > 1) {
        if (t % p_ != 0) fail("NotASubfield", "subfield order is not a power of p");
        t /= p_;
        ++j;
    }
    if (j == 0 || m_ % j != 0) fail("NotASubfield", "F_" + std::to_string(sub_order) + " is not a subfield");
    return pow(e, std::int64_t((q_ - 1) / (sub_order - 1)));
}

std::vector<felem> Field::elements() const {
    std::vector<felem> r(q_);
    for (std::uint64_t i = 0; i < q_; ++i) r[i] = felem(i);
    return r;
}

felem Field::generator() const {
    if (!exp_.empty()) return exp_[1];
    std::vector<std::uint64_t> primes;
    std::uint64_t n = q_ - 1;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        while (n % d == 0) {
            if (primes.empty() || primes.back() != d) primes.push_back(d);
            n /= d;
        }
    if (n > 1) primes.push_back(n);
    for (felem cand = 2; cand < q_; ++cand) {
        bool ok = true;
        for (auto pr : primes)
            if (pow(cand, std::int64_t((q_ - 1) / pr)) == 1) {
                ok = false;
                break;
            }
        if (ok) return cand;
    }
    return 1;  // q == 2
}

felem embed(const Field& sub, const Field& sup, felem e) {
    if (sub.p() != sup.p() || sup.m() % sub.m() != 0)
        fail("NoEmbedding", "F_" + std::to_string(sub.order()) + " does not embed in F_" + std::to_string(sup.order()));
    if (sub.same(sup)) return e;
    // smallest root of sub's modulus in sup
    const auto& mod = sub.modulus();
    felem root = 0;
    bool found = false;
    for (std::uint64_t cand = 0; cand < sup.order(); ++cand) {
        felem acc = 0, xp = 1;
        for (size_t i = 0; i < mod.size(); ++i) {
            acc = sup.add(acc, sup.mul(sup.from_int(std::int64_t(mod[i])), xp));
            xp = sup.mul(xp, felem(cand));
        }
        if (acc == 0) {
            root = felem(cand);
            found = true;
            break;
        }
    }
    if (!found) fail("NoEmbedding", "modulus has no root in the target field");
    auto c = sub.coords(e);
    felem acc = 0, xp = 1;
    for (unsigned i = 0; i < sub.m(); ++i) {
        acc = sup.add(acc, sup.mul(felem(c[i]), xp));
        xp = sup.mul(xp, root);
    }
    return acc;
}

}  // namespace aglcp
