#include "segre/gf.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>
#include <string>

namespace segre {
namespace {

// Largest order for which full add/mul lookup tables are built. Above this
// the digit-vector path is used (still exact, just slower).
constexpr std::uint32_t kTableMaxOrder = 1024;

// ---- arithmetic on GF(p)[t] with coefficient vectors, ascending degree ----

using PVec = std::vector<std::uint32_t>;

void strip(PVec& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

PVec pmul(const PVec& a, const PVec& b, std::uint32_t p) {
    if (a.empty() || b.empty()) return {};
    PVec r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            r[i + j] = (r[i + j] + static_cast<std::uint64_t>(a[i]) * b[j]) % p;
        }
    }
    strip(r);
    return r;
}

// Remainder of a modulo the monic polynomial m.
PVec pmod(PVec a, const PVec& m, std::uint32_t p) {
    strip(a);
    const std::size_t dm = m.size() - 1;
    while (a.size() > dm) {
        const std::uint32_t lead = a.back();
        const std::size_t shift = a.size() - 1 - dm;
        if (lead != 0) {
            for (std::size_t i = 0; i <= dm; ++i) {
                std::uint64_t t = static_cast<std::uint64_t>(lead) * m[i] % p;
                std::uint32_t& c = a[shift + i];
                c = static_cast<std::uint32_t>((c + p - t) % p);
            }
        }
        a.pop_back();
        strip(a);
        if (a.size() <= dm) break;
    }
    strip(a);
    return a;
}

// Extended Euclid over GF(p)[t]: returns g = gcd(a, b) and s with
// s*a = g (mod b). Used for inverses in the extension field.
struct EgcdResult {
    PVec g;
    PVec s;
};

PVec padd_scaled(const PVec& a, const PVec& b, std::uint32_t c, std::uint32_t p) {
    // a + c*b
    PVec r = a;
    if (r.size() < b.size()) r.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i) {
        r[i] = static_cast<std::uint32_t>((r[i] + static_cast<std::uint64_t>(c) * b[i]) % p);
    }
    strip(r);
    return r;
}

std::uint32_t mod_inv_prime(std::uint32_t a, std::uint32_t p) {
    // Fermat; p is prime and a != 0 mod p.
    std::uint64_t base = a % p, r = 1;
    std::uint32_t e = p - 2;
    while (e) {
        if (e & 1) r = r * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return static_cast<std::uint32_t>(r);
}

// Quotient-remainder division by a monic-normalizable divisor.
void pdivrem(const PVec& num, const PVec& den, std::uint32_t p, PVec& quo, PVec& rem) {
    rem = num;
    strip(rem);
    quo.clear();
    if (den.empty()) throw std::logic_error("pdivrem by zero");
    const std::size_t dd = den.size() - 1;
    const std::uint32_t lead_inv = mod_inv_prime(den.back(), p);
    if (rem.size() > dd) quo.assign(rem.size() - dd, 0);
    while (rem.size() >= den.size() && !rem.empty()) {
        const std::size_t shift = rem.size() - den.size();
        const std::uint32_t c =
            static_cast<std::uint32_t>(static_cast<std::uint64_t>(rem.back()) * lead_inv % p);
        quo[shift] = c;
        for (std::size_t i = 0; i < den.size(); ++i) {
            std::uint64_t t = static_cast<std::uint64_t>(c) * den[i] % p;
            rem[shift + i] = static_cast<std::uint32_t>((rem[shift + i] + p - t) % p);
        }
        strip(rem);
    }
    strip(quo);
}

EgcdResult pegcd(PVec a, PVec b, std::uint32_t p) {
    // Invariants: s0*a0 = r0 (mod b0), s1*a0 = r1 (mod b0).
    PVec r0 = std::move(a), r1 = std::move(b);
    PVec s0 = {1}, s1 = {};
    strip(r0);
    strip(r1);
    while (!r1.empty()) {
        PVec quo, rem;
        pdivrem(r0, r1, p, quo, rem);
        PVec qs = pmul(quo, s1, p);
        // s_next = s0 - quo*s1
        PVec s_next = s0;
        if (s_next.size() < qs.size()) s_next.resize(qs.size(), 0);
        for (std::size_t i = 0; i < qs.size(); ++i) {
            s_next[i] = (s_next[i] + p - qs[i]) % p;
        }
        strip(s_next);
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(s_next);
    }
    return {std::move(r0), std::move(s0)};
}

// Trial division: a monic polynomial of degree n >= 2 is irreducible over
// GF(p) iff no monic polynomial of degree 1..n/2 divides it.
bool is_irreducible(const PVec& f, std::uint32_t p) {
    const std::size_t n = f.size() - 1;
    for (std::size_t d = 1; 2 * d <= n; ++d) {
        // Enumerate monic divisor candidates t^d + sum c_i t^i by the base-p
        // code of (c_0, ..., c_{d-1}).
        std::uint64_t total = 1;
        for (std::size_t i = 0; i < d; ++i) total *= p;
        PVec g(d + 1, 0);
        g[d] = 1;
        for (std::uint64_t code = 0; code < total; ++code) {
            std::uint64_t c = code;
            for (std::size_t i = 0; i < d; ++i) {
                g[i] = static_cast<std::uint32_t>(c % p);
                c /= p;
            }
            if (pmod(f, g, p).empty()) return false;
        }
    }
    return true;
}

std::uint32_t encode(const PVec& digits, std::uint32_t p) {
    std::uint32_t code = 0;
    for (std::size_t i = digits.size(); i-- > 0;) {
        code = code * p + digits[i];
    }
    return code;
}

PVec decode(std::uint32_t code, std::uint32_t p, std::uint32_t n) {
    PVec digits(n, 0);
    for (std::uint32_t i = 0; i < n && code; ++i) {
        digits[i] = code % p;
        code /= p;
    }
    strip(digits);
    return digits;
}

struct Factorization {
    std::uint32_t p;
    std::uint32_t n;
};

Factorization factor_prime_power(std::uint32_t q) {
    if (q < 2) throw NotPrimePower("field order must be at least 2, got " + std::to_string(q));
    std::uint32_t p = 0;
    for (std::uint32_t d = 2; d * d <= q; ++d) {
        if (q % d == 0) {
            p = d;
            break;
        }
    }
    if (p == 0) return {q, 1};  // q itself is prime
    std::uint32_t n = 0, rest = q;
    while (rest % p == 0) {
        rest /= p;
        ++n;
    }
    if (rest != 1) throw NotPrimePower(std::to_string(q) + " is not a prime power");
    return {p, n};
}

}  // namespace

namespace detail {

Fe FieldImpl::slow_add(Fe a, Fe b) const {
    if (n == 1) return Fe{(a.code + b.code) % p};
    PVec da = decode(a.code, p, n), db = decode(b.code, p, n);
    if (da.size() < db.size()) da.swap(db);
    for (std::size_t i = 0; i < db.size(); ++i) da[i] = (da[i] + db[i]) % p;
    strip(da);
    return Fe{encode(da, p)};
}

Fe FieldImpl::slow_sub(Fe a, Fe b) const { return slow_add(a, slow_neg(b)); }

Fe FieldImpl::slow_mul(Fe a, Fe b) const {
    if (n == 1) {
        return Fe{static_cast<std::uint32_t>(static_cast<std::uint64_t>(a.code) * b.code % p)};
    }
    PVec prod = pmul(decode(a.code, p, n), decode(b.code, p, n), p);
    return Fe{encode(pmod(std::move(prod), modulus, p), p)};
}

Fe FieldImpl::slow_neg(Fe a) const {
    if (n == 1) return Fe{a.code == 0 ? 0 : p - a.code};
    PVec da = decode(a.code, p, n);
    for (auto& c : da) c = c == 0 ? 0 : p - c;
    return Fe{encode(da, p)};
}

Fe FieldImpl::slow_inv(Fe a) const {
    if (n == 1) return Fe{mod_inv_prime(a.code, p)};
    EgcdResult e = pegcd(decode(a.code, p, n), modulus, p);
    // gcd is a nonzero constant; normalize s by its inverse.
    assert(e.g.size() == 1);
    const std::uint32_t scale = mod_inv_prime(e.g[0], p);
    PVec s = pmod(std::move(e.s), modulus, p);
    for (auto& c : s) c = static_cast<std::uint32_t>(static_cast<std::uint64_t>(c) * scale % p);
    return Fe{encode(s, p)};
}

}  // namespace detail

Field::Field(std::uint32_t q, std::uint32_t max_order) {
    const auto [p, n] = factor_prime_power(q);
    if (q > max_order) {
        throw UnsupportedOrder("field order " + std::to_string(q) + " exceeds the cap of " +
                               std::to_string(max_order));
    }

    auto impl = std::make_shared<detail::FieldImpl>();
    impl->p = p;
    impl->n = n;
    impl->q = q;

    if (n == 1) {
        impl->modulus = {0, 1};  // the polynomial t
    } else {
        // Lexicographically least monic irreducible of degree n: scan the
        // low-coefficient vectors as base-p integers ascending.
        PVec f(n + 1, 0);
        f[n] = 1;
        bool found = false;
        for (std::uint32_t code = 0; code < q; ++code) {
            std::uint32_t c = code;
            for (std::uint32_t i = 0; i < n; ++i) {
                f[i] = c % p;
                c /= p;
            }
            if (is_irreducible(f, p)) {
                found = true;
                break;
            }
        }
        if (!found) throw std::logic_error("no irreducible modulus found");  // cannot happen
        impl->modulus = f;
    }

    if (q <= kTableMaxOrder) {
        impl->add_tab.resize(static_cast<std::size_t>(q) * q);
        impl->mul_tab.resize(static_cast<std::size_t>(q) * q);
        impl->neg_tab.resize(q);
        impl->inv_tab.assign(q, 0);
        for (std::uint32_t a = 0; a < q; ++a) {
            impl->neg_tab[a] = static_cast<std::uint16_t>(impl->slow_neg(Fe{a}).code);
            for (std::uint32_t b = 0; b < q; ++b) {
                const std::size_t at = static_cast<std::size_t>(a) * q + b;
                impl->add_tab[at] = static_cast<std::uint16_t>(impl->slow_add(Fe{a}, Fe{b}).code);
                const Fe prod = impl->slow_mul(Fe{a}, Fe{b});
                impl->mul_tab[at] = static_cast<std::uint16_t>(prod.code);
                if (prod.code == 1) impl->inv_tab[a] = static_cast<std::uint16_t>(b);
            }
        }
        impl->has_tables = true;
    }

    impl_ = std::move(impl);
}

Fe Field::element(std::uint32_t code) const {
    if (code >= q()) {
        throw std::invalid_argument("element code " + std::to_string(code) +
                                    " out of range for GF(" + std::to_string(q()) + ")");
    }
    return Fe{code};
}

Fe Field::from_int(std::int64_t value) const {
    const std::int64_t m = static_cast<std::int64_t>(p());
    std::int64_t r = value % m;
    if (r < 0) r += m;
    return Fe{static_cast<std::uint32_t>(r)};
}

Fe Field::pow(Fe a, std::uint64_t e) const {
    Fe result = one();
    Fe base = a;
    while (e) {
        if (e & 1) result = mul(result, base);
        base = mul(base, base);
        e >>= 1;
    }
    return result;
}

std::vector<Fe> Field::elements() const {
    std::vector<Fe> out;
    out.reserve(q());
    for (std::uint32_t c = 0; c < q(); ++c) out.push_back(Fe{c});
    return out;
}

Fe Field::power_sum(std::uint64_t i) const {
    Fe acc = zero();
    for (std::uint32_t c = 0; c < q(); ++c) acc = add(acc, pow(Fe{c}, i));
    return acc;
}

Fe Field::nonzero_product() const {
    Fe acc = one();
    for (std::uint32_t c = 1; c < q(); ++c) acc = mul(acc, Fe{c});
    if (acc != minus_one()) throw Error("nonzero_product: product of units is not -1");
    return acc;
}

}  // namespace segre
