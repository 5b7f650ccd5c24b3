#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "segre/gf.hpp"

namespace segre {

/// Univariate polynomial over a fixed GF(q), coefficients ascending by
/// degree with no trailing zeros (empty list = zero polynomial). Immutable
/// value type; all operations are pure.
class Poly {
  public:
    /// Normalizes by trimming trailing zero coefficients.
    Poly(Field field, std::vector<Fe> coeffs);

    static Poly zero(const Field& field) { return Poly(field, {}); }
    static Poly constant(const Field& field, Fe c) { return Poly(field, {c}); }
    /// The monomial c * X^k.
    static Poly monomial(const Field& field, Fe c, std::size_t k);
    /// Convenience: coefficients given as element codes, ascending degree.
    static Poly from_codes(const Field& field, const std::vector<std::uint32_t>& codes);

    const Field& field() const { return field_; }
    const std::vector<Fe>& coeffs() const { return coeffs_; }

    bool is_zero() const { return coeffs_.empty(); }

    /// Degree, or nullopt for the zero polynomial. The empty value plays the
    /// role of -infinity; callers compare degrees without sentinel integers.
    std::optional<std::size_t> degree() const;

    /// Coefficient of X^i, zero beyond the stored range.
    Fe coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Fe{0}; }

    /// Leading coefficient. Throws Error on the zero polynomial.
    Fe leading() const;

    /// Horner evaluation.
    Fe evaluate(Fe x) const;

    /// Formal derivative; the factor i is reduced into the prime subfield.
    Poly derive() const;

    /// The quotient Phi with (X - u) * Phi(X) = f(X) - f(u), by synthetic
    /// division (the remainder is exactly f(u) and is dropped). For nonzero
    /// f its degree drops by one, and Phi(u) = f'(u).
    Poly difference_quotient(Fe u) const;

    Poly operator-() const;
    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly scaled(Fe c) const;

    friend bool operator==(const Poly& a, const Poly& b) {
        return a.field_ == b.field_ && a.coeffs_ == b.coeffs_;
    }

  private:
    Field field_;
    std::vector<Fe> coeffs_;
};

/// The unique polynomial of degree <= q-1 agreeing with a total value table
/// on GF(q). Throws IncompleteTable unless every field element has a value.
///
/// Classic Lagrange form, O(q^2): with M(X) = X^q - X one has M'(x) = -1 at
/// every point, so f = -sum_i y_i * M(X)/(X - x_i), each quotient by one
/// synthetic division.
Poly interpolate(const Field& field, const std::map<Fe, Fe>& table);

/// Bivariate polynomial over GF(q), sparse exponent map (i, j) -> coeff of
/// X^i Y^j with no explicit zero entries. Exists to state the two-variable
/// identities; no general multivariate algebra.
class Poly2 {
  public:
    using Key = std::pair<std::size_t, std::size_t>;

    explicit Poly2(Field field) : field_(std::move(field)) {}

    static Poly2 zero(const Field& field) { return Poly2(field); }
    static Poly2 constant(const Field& field, Fe c);
    static Poly2 monomial(const Field& field, Fe c, std::size_t i, std::size_t j);
    /// Embeddings of a univariate polynomial as a polynomial in X alone or
    /// in Y alone.
    static Poly2 of_x(const Poly& f);
    static Poly2 of_y(const Poly& f);

    const Field& field() const { return field_; }
    const std::map<Key, Fe>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Fe coeff(std::size_t i, std::size_t j) const;
    Fe evaluate(Fe x, Fe y) const;

    Poly2 operator-() const;
    friend Poly2 operator+(const Poly2& a, const Poly2& b);
    friend Poly2 operator-(const Poly2& a, const Poly2& b);
    friend Poly2 operator*(const Poly2& a, const Poly2& b);
    Poly2 scaled(Fe c) const;

    /// Coefficient-wise equality of normalized forms.
    friend bool operator==(const Poly2& a, const Poly2& b) {
        return a.field_ == b.field_ && a.terms_ == b.terms_;
    }

  private:
    void set(std::size_t i, std::size_t j, Fe c);

    Field field_;
    std::map<Key, Fe> terms_;
};

}  // namespace segre
