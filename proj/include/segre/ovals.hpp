#pragma once

#include <array>
#include <cstdint>
#include <variant>
#include <vector>

#include "segre/plane.hpp"

namespace segre {

/// True iff no three of the given points are collinear. Throws
/// DuplicatePoint on a repeated member.
bool is_arc(const Plane& pl, const std::vector<ProjPoint>& points);

/// An oval: an arc of exactly q+1 points, held sorted as the canonical
/// representation.
class Oval {
  public:
    /// Validates cardinality, distinctness, and the arc property; sorts the
    /// points. Throws NotAnOval (message carries a witness triple) or
    /// DuplicatePoint.
    Oval(const Plane& pl, std::vector<ProjPoint> points);

    /// Adopts an already sorted, already validated point list. Used by the
    /// enumerator, whose construction guarantees the invariant, and by tests
    /// probing the error paths of downstream code.
    static Oval unchecked(std::vector<ProjPoint> sorted_points);

    const std::vector<ProjPoint>& points() const { return points_; }
    bool contains(const ProjPoint& p) const;

    friend auto operator<=>(const Oval&, const Oval&) = default;

  private:
    Oval() = default;
    std::vector<ProjPoint> points_;
};

/// The unique line through p meeting the oval only at p: of the q+1 lines
/// of the pencil at p, the q secants to the other oval points account for
/// all but one. Throws NotMember if p is not on the oval, NotUniqueTangent
/// if the leftover count is not exactly one (possible only for corrupt
/// input, e.g. an unchecked non-arc).
ProjLine tangent_at(const Plane& pl, const Oval& oval, const ProjPoint& p);

/// Conic as a quadratic form, six coefficients (A,B,C,D,E,F) meaning
/// A X^2 + B Y^2 + C Z^2 + D XY + E XZ + F YZ, scaled so the leftmost
/// nonzero coefficient is 1.
class Conic {
  public:
    /// Normalizes the form. Throws DegenerateInput when all six vanish.
    Conic(Field field, std::array<Fe, 6> form);

    static Conic from_codes(const Field& field, const std::array<std::uint32_t, 6>& codes);

    const Field& field() const { return field_; }
    const std::array<Fe, 6>& form() const { return form_; }

    Fe evaluate(const ProjPoint& p) const;
    bool contains(const ProjPoint& p) const { return evaluate(p) == field_.zero(); }

    /// The symmetric matrix of the form; odd characteristic only (the
    /// off-diagonal entries are halved). Throws EvenOrder otherwise.
    Mat3 matrix() const;

    /// Invertibility of the symmetric matrix. Throws EvenOrder for p = 2.
    bool nondegenerate() const;

    friend bool operator==(const Conic& a, const Conic& b) {
        return a.field_ == b.field_ && a.form_ == b.form_;
    }

  private:
    Field field_;
    std::array<Fe, 6> form_;
};

/// The unique conic through five points in general position: the
/// one-dimensional kernel of the 5x6 evaluation system. Throws
/// DegenerateInput when three of the points are collinear, the points are
/// not distinct, or the kernel is not a line.
Conic conic_from_five(const Plane& pl, const std::array<ProjPoint, 5>& points);

/// The zero set of a nondegenerate conic: exactly q+1 points, ascending
/// lexicographically, forming an arc. Throws DegenerateConic when the form
/// is degenerate (odd q assumed: the matrix test applies).
std::vector<ProjPoint> conic_points(const Plane& pl, const Conic& c);

/// Tangent (polar) line of a nondegenerate conic at a point on it, read off
/// the gradient: coefficient vector Q.p. Throws DegenerateConic or
/// NotMember.
ProjLine conic_tangent_line(const Plane& pl, const Conic& c, const ProjPoint& p);

/// Pushforward of a conic along a projective transform: the conic whose
/// points are exactly the images of the input's points (congruence action
/// on the matrix; odd q).
Conic transform_conic(const Plane& pl, const Conic& c, const ProjTransform& t);

/// Uniformly random nondegenerate conic by rejection over coefficient
/// 6-tuples; deterministic per seed and platform-independent. Odd q.
Conic random_conic(const Field& field, std::uint64_t seed);

/// Enumeration modes. Exhaustive generates every oval exactly once, each
/// emitted as a sorted point list, the whole stream ascending; intended for
/// q <= 7. Sampled runs seeded randomized greedy extension with restarts and
/// may deliver fewer than `count` distinct ovals.
struct ExhaustiveMode {
    std::size_t workers = 1;
};
struct SampledMode {
    std::uint64_t seed = 0;
    std::size_t count = 1;
    std::size_t max_restarts = 10000;
};
using EnumerationMode = std::variant<ExhaustiveMode, SampledMode>;

std::vector<Oval> enumerate_ovals(const Plane& pl, const EnumerationMode& mode);

}  // namespace segre
