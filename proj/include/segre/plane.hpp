#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <vector>

#include "segre/linalg.hpp"

namespace segre {

/// Point of PG(2,q) in the canonical representative: homogeneous triple
/// scaled so the leftmost nonzero coordinate is 1. Plain value; the owning
/// Plane supplies the arithmetic, mirroring how Fe defers to Field.
struct ProjPoint {
    Vec3 coords{};

    friend constexpr auto operator<=>(const ProjPoint&, const ProjPoint&) = default;
};

/// Line of PG(2,q), coefficient triple (a,b,c) of ax + by + cz = 0 in the
/// same canonical scaling as points.
struct ProjLine {
    Vec3 coeffs{};

    friend constexpr auto operator<=>(const ProjLine&, const ProjLine&) = default;
};

/// The Desarguesian plane PG(2,q): incidence machinery over a fixed field.
/// Immutable after construction; all operations pure.
class Plane {
  public:
    explicit Plane(Field field);

    const Field& field() const { return field_; }
    std::uint32_t q() const { return field_.q(); }

    /// Number of points (equals the number of lines): q^2 + q + 1.
    std::size_t size() const { return points_.size(); }

    /// Canonical point from a raw triple. Throws DegenerateInput on (0,0,0).
    ProjPoint point(const Vec3& raw) const;
    /// Convenience: coordinates given as element codes.
    ProjPoint point(std::uint32_t x, std::uint32_t y, std::uint32_t z) const;

    /// Canonical line from a raw coefficient triple. Throws DegenerateInput
    /// on (0,0,0).
    ProjLine line(const Vec3& raw) const;
    ProjLine line(std::uint32_t a, std::uint32_t b, std::uint32_t c) const;

    /// All points, ascending lexicographically by normalized code triples.
    const std::vector<ProjPoint>& all_points() const { return points_; }
    /// All lines, same order on coefficient triples.
    std::vector<ProjLine> all_lines() const;

    /// Position of p in all_points(), computed in O(1) from the canonical
    /// form: (0:0:1) first, then (0:1:z), then (1:y:z).
    std::size_t point_index(const ProjPoint& p) const;
    std::size_t line_index(const ProjLine& l) const;

    bool incident(const ProjPoint& p, const ProjLine& l) const {
        return dot3(field_, p.coords, l.coeffs) == field_.zero();
    }

    /// True iff the coordinate matrix is singular; coincident points count
    /// as collinear.
    bool collinear(const ProjPoint& p1, const ProjPoint& p2, const ProjPoint& p3) const;

    /// The unique line through two distinct points. Throws IdenticalPoints.
    ProjLine line_through(const ProjPoint& p1, const ProjPoint& p2) const;

    /// The q+1 lines of the pencil through p, ascending lexicographically.
    std::vector<ProjLine> lines_through_point(const ProjPoint& p) const;

    /// The q+1 points incident with l, ascending lexicographically.
    std::vector<ProjPoint> points_on_line(const ProjLine& l) const;

  private:
    Vec3 normalized(Vec3 v, const char* what) const;
    std::size_t index_of(const Vec3& v) const;

    Field field_;
    std::vector<ProjPoint> points_;
};

/// Invertible projective transformation, acting on points by matrix-vector
/// product and on lines by the inverse-transpose, which preserves incidence.
class ProjTransform {
  public:
    /// Throws DegenerateInput if the matrix is singular.
    ProjTransform(Field field, Mat3 matrix);

    static ProjTransform identity(const Field& field);

    const Field& field() const { return field_; }
    const Mat3& matrix() const { return matrix_; }

    ProjPoint apply(const Plane& pl, const ProjPoint& p) const;
    ProjLine apply(const Plane& pl, const ProjLine& l) const;

    ProjTransform inverse() const;
    /// Composition acting as this after other: (a.compose(b))(p) = a(b(p)).
    ProjTransform compose(const ProjTransform& other) const;

  private:
    Field field_;
    Mat3 matrix_;
    Mat3 inverse_transpose_;
};

/// The unique projective transform carrying one frame (quadruple in general
/// position) to another, frame point by frame point. The matrix is scaled so
/// its first nonzero entry in row-major order is 1. Throws DegenerateFrame
/// when a quadruple has three collinear members.
ProjTransform transform_from_frame(const Plane& pl, const std::array<ProjPoint, 4>& src,
                                   const std::array<ProjPoint, 4>& dst);

}  // namespace segre
