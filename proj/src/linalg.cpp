#include "segre/linalg.hpp"

#include <stdexcept>

namespace segre {

Fe dot3(const Field& F, const Vec3& a, const Vec3& b) {
    Fe acc = F.zero();
    for (int i = 0; i < 3; ++i) acc = F.add(acc, F.mul(a[i], b[i]));
    return acc;
}

Vec3 cross3(const Field& F, const Vec3& a, const Vec3& b) {
    return Vec3{F.sub(F.mul(a[1], b[2]), F.mul(a[2], b[1])),
                F.sub(F.mul(a[2], b[0]), F.mul(a[0], b[2])),
                F.sub(F.mul(a[0], b[1]), F.mul(a[1], b[0]))};
}

Mat3 identity3(const Field& F) {
    Mat3 m{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) m[i][j] = i == j ? F.one() : F.zero();
    return m;
}

Mat3 transpose3(const Mat3& m) {
    Mat3 t{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) t[i][j] = m[j][i];
    return t;
}

Fe det3(const Field& F, const Mat3& m) {
    return dot3(F, m[0], cross3(F, m[1], m[2]));
}

Mat3 mul3(const Field& F, const Mat3& a, const Mat3& b) {
    Mat3 r{};
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            Fe acc = F.zero();
            for (int k = 0; k < 3; ++k) acc = F.add(acc, F.mul(a[i][k], b[k][j]));
            r[i][j] = acc;
        }
    }
    return r;
}

Vec3 apply3(const Field& F, const Mat3& m, const Vec3& v) {
    return Vec3{dot3(F, m[0], v), dot3(F, m[1], v), dot3(F, m[2], v)};
}

Mat3 invert3(const Field& F, const Mat3& m) {
    const Fe d = det3(F, m);
    if (d == F.zero()) throw DegenerateInput("matrix is singular");
    const Fe di = F.inv(d);
    // Adjugate: cofactors, transposed.
    const Mat3 t = transpose3(m);
    Mat3 r{};
    for (int i = 0; i < 3; ++i) {
        const Vec3& a = t[(i + 1) % 3];
        const Vec3& b = t[(i + 2) % 3];
        const Vec3 c = cross3(F, a, b);
        for (int j = 0; j < 3; ++j) r[i][j] = F.mul(di, c[j]);
    }
    return r;
}

std::vector<std::size_t> rref(const Field& F, std::vector<std::vector<Fe>>& rows) {
    std::vector<std::size_t> pivots;
    if (rows.empty()) return pivots;
    const std::size_t ncols = rows[0].size();
    std::size_t r = 0;
    for (std::size_t col = 0; col < ncols && r < rows.size(); ++col) {
        std::size_t sel = r;
        while (sel < rows.size() && rows[sel][col] == F.zero()) ++sel;
        if (sel == rows.size()) continue;
        std::swap(rows[r], rows[sel]);
        const Fe scale = F.inv(rows[r][col]);
        for (Fe& x : rows[r]) x = F.mul(x, scale);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][col] == F.zero()) continue;
            const Fe factor = rows[i][col];
            for (std::size_t j = 0; j < ncols; ++j) {
                rows[i][j] = F.sub(rows[i][j], F.mul(factor, rows[r][j]));
            }
        }
        pivots.push_back(col);
        ++r;
    }
    return pivots;
}

std::vector<std::vector<Fe>> nullspace(const Field& F, std::vector<std::vector<Fe>> rows,
                                       std::size_t ncols) {
    for (const auto& row : rows) {
        if (row.size() != ncols) throw std::invalid_argument("nullspace: ragged matrix");
    }
    const std::vector<std::size_t> pivots = rref(F, rows);

    std::vector<bool> is_pivot(ncols, false);
    for (std::size_t c : pivots) is_pivot[c] = true;

    std::vector<std::vector<Fe>> basis;
    for (std::size_t free = 0; free < ncols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Fe> v(ncols, F.zero());
        v[free] = F.one();
        // Back-substitute: pivot row i reads x_{p_i} + sum over free cols.
        for (std::size_t i = 0; i < pivots.size(); ++i) {
            v[pivots[i]] = F.neg(rows[i][free]);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace segre
