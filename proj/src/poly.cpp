#include "segre/poly.hpp"

#include <stdexcept>
#include <string>

namespace segre {
namespace {

void require_same_field(const Field& a, const Field& b) {
    if (!(a == b)) throw std::invalid_argument("polynomial operands over different fields");
}

}  // namespace

/* ---- Poly -------------------------------------------------------------- */

Poly::Poly(Field field, std::vector<Fe> coeffs)
    : field_(std::move(field)), coeffs_(std::move(coeffs)) {
    while (!coeffs_.empty() && coeffs_.back() == field_.zero()) coeffs_.pop_back();
}

Poly Poly::monomial(const Field& field, Fe c, std::size_t k) {
    std::vector<Fe> v(k + 1, field.zero());
    v[k] = c;
    return Poly(field, std::move(v));
}

Poly Poly::from_codes(const Field& field, const std::vector<std::uint32_t>& codes) {
    std::vector<Fe> v;
    v.reserve(codes.size());
    for (std::uint32_t c : codes) v.push_back(field.element(c));
    return Poly(field, std::move(v));
}

std::optional<std::size_t> Poly::degree() const {
    if (coeffs_.empty()) return std::nullopt;
    return coeffs_.size() - 1;
}

Fe Poly::leading() const {
    if (coeffs_.empty()) throw Error("leading coefficient of the zero polynomial");
    return coeffs_.back();
}

Fe Poly::evaluate(Fe x) const {
    Fe acc = field_.zero();
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        acc = field_.add(field_.mul(acc, x), coeffs_[i]);
    }
    return acc;
}

Poly Poly::derive() const {
    if (coeffs_.size() < 2) return Poly::zero(field_);
    std::vector<Fe> d(coeffs_.size() - 1, field_.zero());
    for (std::size_t i = 1; i < coeffs_.size(); ++i) {
        d[i - 1] = field_.mul(field_.from_int(static_cast<std::int64_t>(i)), coeffs_[i]);
    }
    return Poly(field_, std::move(d));
}

Poly Poly::difference_quotient(Fe u) const {
    if (coeffs_.size() < 2) return Poly::zero(field_);
    std::vector<Fe> quo(coeffs_.size() - 1, field_.zero());
    Fe carry = coeffs_.back();
    for (std::size_t i = coeffs_.size() - 1; i-- > 0;) {
        quo[i] = carry;
        carry = field_.add(field_.mul(carry, u), coeffs_[i]);
    }
    // carry is now f(u); it is the remainder and is discarded.
    return Poly(field_, std::move(quo));
}

Poly Poly::operator-() const {
    std::vector<Fe> v = coeffs_;
    for (Fe& c : v) c = field_.neg(c);
    return Poly(field_, std::move(v));
}

Poly operator+(const Poly& a, const Poly& b) {
    require_same_field(a.field_, b.field_);
    const Field& F = a.field_;
    std::vector<Fe> v(std::max(a.coeffs_.size(), b.coeffs_.size()), F.zero());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = F.add(a.coeff(i), b.coeff(i));
    return Poly(F, std::move(v));
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Poly& a, const Poly& b) {
    require_same_field(a.field_, b.field_);
    const Field& F = a.field_;
    if (a.is_zero() || b.is_zero()) return Poly::zero(F);
    std::vector<Fe> v(a.coeffs_.size() + b.coeffs_.size() - 1, F.zero());
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == F.zero()) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
            v[i + j] = F.add(v[i + j], F.mul(a.coeffs_[i], b.coeffs_[j]));
        }
    }
    return Poly(F, std::move(v));
}

Poly Poly::scaled(Fe c) const {
    std::vector<Fe> v = coeffs_;
    for (Fe& x : v) x = field_.mul(x, c);
    return Poly(field_, std::move(v));
}

Poly interpolate(const Field& field, const std::map<Fe, Fe>& table) {
    const std::uint32_t q = field.q();
    if (table.size() != q) {
        throw IncompleteTable("interpolation table has " + std::to_string(table.size()) +
                              " entries, expected " + std::to_string(q));
    }
    for (std::uint32_t c = 0; c < q; ++c) {
        if (!table.contains(Fe{c})) {
            throw IncompleteTable("interpolation table lacks a value at code " +
                                  std::to_string(c));
        }
    }

    // M(X) = X^q - X vanishes on all of GF(q) and M' = -1 there.
    std::vector<Fe> master(q + 1, field.zero());
    master[1] = field.minus_one();
    master[q] = field.one();
    const Poly M(field, std::move(master));

    std::vector<Fe> acc(q, field.zero());
    for (const auto& [x, y] : table) {
        if (y == field.zero()) continue;
        const Poly basis = M.difference_quotient(x);  // M(X)/(X - x), exact
        const Fe scale = field.neg(y);
        for (std::size_t i = 0; i < basis.coeffs().size(); ++i) {
            acc[i] = field.add(acc[i], field.mul(scale, basis.coeffs()[i]));
        }
    }
    return Poly(field, std::move(acc));
}

/* ---- Poly2 ------------------------------------------------------------- */

void Poly2::set(std::size_t i, std::size_t j, Fe c) {
    if (c == field_.zero()) {
        terms_.erase(Key{i, j});
    } else {
        terms_[Key{i, j}] = c;
    }
}

Poly2 Poly2::constant(const Field& field, Fe c) {
    Poly2 r(field);
    r.set(0, 0, c);
    return r;
}

Poly2 Poly2::monomial(const Field& field, Fe c, std::size_t i, std::size_t j) {
    Poly2 r(field);
    r.set(i, j, c);
    return r;
}

Poly2 Poly2::of_x(const Poly& f) {
    Poly2 r(f.field());
    for (std::size_t i = 0; i < f.coeffs().size(); ++i) r.set(i, 0, f.coeffs()[i]);
    return r;
}

Poly2 Poly2::of_y(const Poly& f) {
    Poly2 r(f.field());
    for (std::size_t j = 0; j < f.coeffs().size(); ++j) r.set(0, j, f.coeffs()[j]);
    return r;
}

Fe Poly2::coeff(std::size_t i, std::size_t j) const {
    const auto it = terms_.find(Key{i, j});
    return it == terms_.end() ? field_.zero() : it->second;
}

Fe Poly2::evaluate(Fe x, Fe y) const {
    Fe acc = field_.zero();
    for (const auto& [key, c] : terms_) {
        const Fe term = field_.mul(c, field_.mul(field_.pow(x, key.first), field_.pow(y, key.second)));
        acc = field_.add(acc, term);
    }
    return acc;
}

Poly2 Poly2::operator-() const {
    Poly2 r(field_);
    for (const auto& [key, c] : terms_) r.terms_[key] = field_.neg(c);
    return r;
}

Poly2 operator+(const Poly2& a, const Poly2& b) {
    require_same_field(a.field_, b.field_);
    Poly2 r = a;
    for (const auto& [key, c] : b.terms_) {
        r.set(key.first, key.second, a.field_.add(r.coeff(key.first, key.second), c));
    }
    return r;
}

Poly2 operator-(const Poly2& a, const Poly2& b) { return a + (-b); }

Poly2 operator*(const Poly2& a, const Poly2& b) {
    require_same_field(a.field_, b.field_);
    const Field& F = a.field_;
    Poly2 r(F);
    for (const auto& [ka, ca] : a.terms_) {
        for (const auto& [kb, cb] : b.terms_) {
            const Poly2::Key key{ka.first + kb.first, ka.second + kb.second};
            r.set(key.first, key.second, F.add(r.coeff(key.first, key.second), F.mul(ca, cb)));
        }
    }
    return r;
}

Poly2 Poly2::scaled(Fe c) const {
    Poly2 r(field_);
    for (const auto& [key, v] : terms_) r.set(key.first, key.second, field_.mul(v, c));
    return r;
}

}  // namespace segre
