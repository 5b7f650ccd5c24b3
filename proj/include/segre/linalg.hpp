#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "segre/gf.hpp"

namespace segre {

/// Exact 3-dimensional linear algebra over GF(q), used for homogeneous
/// coordinates. Matrices are row-major.
using Vec3 = std::array<Fe, 3>;
using Mat3 = std::array<Vec3, 3>;

Fe dot3(const Field& F, const Vec3& a, const Vec3& b);
Vec3 cross3(const Field& F, const Vec3& a, const Vec3& b);

Mat3 identity3(const Field& F);
Mat3 transpose3(const Mat3& m);
Fe det3(const Field& F, const Mat3& m);
Mat3 mul3(const Field& F, const Mat3& a, const Mat3& b);
Vec3 apply3(const Field& F, const Mat3& m, const Vec3& v);

/// Inverse by adjugate over det. Throws DegenerateInput on a singular
/// matrix.
Mat3 invert3(const Field& F, const Mat3& m);

/// In-place reduced row echelon form; returns the pivot column indices in
/// order. Rows may be ragged only in count, not width.
std::vector<std::size_t> rref(const Field& F, std::vector<std::vector<Fe>>& rows);

/// Basis of the right nullspace of the given matrix (rows of width ncols),
/// one vector per free column, in ascending free-column order. Each basis
/// vector has a 1 in its free column.
std::vector<std::vector<Fe>> nullspace(const Field& F, std::vector<std::vector<Fe>> rows,
                                       std::size_t ncols);

}  // namespace segre
