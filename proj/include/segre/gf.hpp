#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <vector>

#include "segre/errors.hpp"

namespace segre {

/// Element of a finite field, carried as its integer code in [0, q).
///
/// The code encodes the base-p digit vector (a0, ..., a_{n-1}) of the
/// element a0 + a1*t + ... + a_{n-1}*t^{n-1} as sum a_i * p^i, so code 0 is
/// the additive identity and code 1 the multiplicative identity. Elements
/// serialize as plain integers.
struct Fe {
    std::uint32_t code = 0;

    friend constexpr auto operator<=>(const Fe&, const Fe&) = default;
};

namespace detail {

/// Immutable state shared by all copies of a Field. Arithmetic is backed by
/// lookup tables for small orders and by direct digit-vector computation
/// otherwise; both paths are exact.
struct FieldImpl {
    std::uint32_t p = 0;  // prime characteristic
    std::uint32_t n = 0;  // extension degree
    std::uint32_t q = 0;  // order p^n

    // Monic irreducible modulus of degree n over GF(p), coefficients
    // ascending (length n + 1). For n = 1 this is the polynomial t.
    std::vector<std::uint32_t> modulus;

    bool has_tables = false;
    std::vector<std::uint16_t> add_tab;  // q*q
    std::vector<std::uint16_t> mul_tab;  // q*q
    std::vector<std::uint16_t> neg_tab;  // q
    std::vector<std::uint16_t> inv_tab;  // q, entry 0 unused

    Fe slow_add(Fe a, Fe b) const;
    Fe slow_sub(Fe a, Fe b) const;
    Fe slow_mul(Fe a, Fe b) const;
    Fe slow_neg(Fe a) const;
    Fe slow_inv(Fe a) const;
};

}  // namespace detail

/// A concrete finite field GF(q), q = p^n.
///
/// Construction is deterministic: the modulus is the lexicographically least
/// monic irreducible of degree n over GF(p), ordering coefficient vectors
/// (c0, ..., c_{n-1}) as base-p integers ascending. Hence two Field objects
/// with equal q are interchangeable.
///
/// Immutable after construction; all operations are pure and the object is
/// safe to share across threads. Copies are cheap (shared state).
class Field {
  public:
    /// Default cap on the supported order; desk-scale tool, no big integers.
    static constexpr std::uint32_t kDefaultMaxOrder = 1u << 16;

    /// Builds the canonical GF(q).
    /// Throws NotPrimePower if q is not a prime power (or q < 2), and
    /// UnsupportedOrder if q exceeds max_order.
    explicit Field(std::uint32_t q, std::uint32_t max_order = kDefaultMaxOrder);

    std::uint32_t p() const { return impl_->p; }
    std::uint32_t n() const { return impl_->n; }
    std::uint32_t q() const { return impl_->q; }
    const std::vector<std::uint32_t>& modulus() const { return impl_->modulus; }

    Fe zero() const { return Fe{0}; }
    Fe one() const { return Fe{1}; }
    Fe minus_one() const { return neg(one()); }

    /// Validated element from a code. Throws std::invalid_argument when the
    /// code is out of range.
    Fe element(std::uint32_t code) const;

    /// Image of an integer under the canonical map Z -> GF(q) (reduction
    /// into the prime subfield).
    Fe from_int(std::int64_t value) const;

    Fe add(Fe a, Fe b) const {
        const auto& im = *impl_;
        if (im.has_tables) return Fe{im.add_tab[a.code * im.q + b.code]};
        return im.slow_add(a, b);
    }

    Fe sub(Fe a, Fe b) const {
        const auto& im = *impl_;
        if (im.has_tables) return Fe{im.add_tab[a.code * im.q + im.neg_tab[b.code]]};
        return im.slow_sub(a, b);
    }

    Fe mul(Fe a, Fe b) const {
        const auto& im = *impl_;
        if (im.has_tables) return Fe{im.mul_tab[a.code * im.q + b.code]};
        return im.slow_mul(a, b);
    }

    Fe neg(Fe a) const {
        const auto& im = *impl_;
        if (im.has_tables) return Fe{im.neg_tab[a.code]};
        return im.slow_neg(a);
    }

    /// Multiplicative inverse. Throws DivisionByZero on a = 0.
    Fe inv(Fe a) const {
        if (a.code == 0) throw DivisionByZero("inverse of zero");
        const auto& im = *impl_;
        if (im.has_tables) return Fe{im.inv_tab[a.code]};
        return im.slow_inv(a);
    }

    Fe div(Fe a, Fe b) const { return mul(a, inv(b)); }

    /// a^e by square-and-multiply, with the convention 0^0 = 1.
    Fe pow(Fe a, std::uint64_t e) const;

    /// All q elements, ascending by code.
    std::vector<Fe> elements() const;

    /// Sum of the i-th powers of all field elements (0^0 = 1). Vanishes for
    /// 0 <= i < q-1 and equals -1 at i = q-1.
    Fe power_sum(std::uint64_t i) const;

    /// Product of all nonzero elements; always -1, and the implementation
    /// cross-checks that before returning.
    Fe nonzero_product() const;

    /// Two Field objects describe the same field iff their orders agree
    /// (construction is canonical).
    friend bool operator==(const Field& a, const Field& b) { return a.q() == b.q(); }

  private:
    std::shared_ptr<const detail::FieldImpl> impl_;
};

}  // namespace segre
