#include "segre/plane.hpp"

#include <algorithm>
#include <string>

namespace segre {
namespace {

// Two independent solutions of a.x = 0 for a nonzero form a; every solution
// of the incidence equation is a combination of these.
std::pair<Vec3, Vec3> kernel_basis(const Field& F, const Vec3& a) {
    if (a[0] != F.zero()) {
        const Fe ai = F.inv(a[0]);
        return {Vec3{F.neg(F.mul(a[1], ai)), F.one(), F.zero()},
                Vec3{F.neg(F.mul(a[2], ai)), F.zero(), F.one()}};
    }
    if (a[1] != F.zero()) {
        const Fe bi = F.inv(a[1]);
        return {Vec3{F.one(), F.zero(), F.zero()},
                Vec3{F.zero(), F.neg(F.mul(a[2], bi)), F.one()}};
    }
    return {Vec3{F.one(), F.zero(), F.zero()}, Vec3{F.zero(), F.one(), F.zero()}};
}

// The q+1 projective classes spanned by two independent vectors: [v1] and
// [mu*v1 + v2] for each mu.
template <typename Out>
void span_classes(const Field& F, const Vec3& v1, const Vec3& v2, Out&& emit) {
    emit(v1);
    for (std::uint32_t c = 0; c < F.q(); ++c) {
        const Fe mu = Fe{c};
        Vec3 v{};
        for (int i = 0; i < 3; ++i) v[i] = F.add(F.mul(mu, v1[i]), v2[i]);
        emit(v);
    }
}

}  // namespace

/* ---- Plane -------------------------------------------------------------- */

Plane::Plane(Field field) : field_(std::move(field)) {
    const std::uint32_t q = field_.q();
    points_.reserve(static_cast<std::size_t>(q) * q + q + 1);
    const Fe zero = field_.zero(), one = field_.one();
    points_.push_back(ProjPoint{Vec3{zero, zero, one}});
    for (std::uint32_t z = 0; z < q; ++z) {
        points_.push_back(ProjPoint{Vec3{zero, one, Fe{z}}});
    }
    for (std::uint32_t y = 0; y < q; ++y) {
        for (std::uint32_t z = 0; z < q; ++z) {
            points_.push_back(ProjPoint{Vec3{one, Fe{y}, Fe{z}}});
        }
    }
}

Vec3 Plane::normalized(Vec3 v, const char* what) const {
    int lead = -1;
    for (int i = 0; i < 3; ++i) {
        if (v[i] != field_.zero()) {
            lead = i;
            break;
        }
    }
    if (lead < 0) throw DegenerateInput(std::string(what) + ": zero triple");
    const Fe scale = field_.inv(v[lead]);
    for (int i = lead; i < 3; ++i) v[i] = field_.mul(v[i], scale);
    return v;
}

ProjPoint Plane::point(const Vec3& raw) const { return ProjPoint{normalized(raw, "point")}; }

ProjPoint Plane::point(std::uint32_t x, std::uint32_t y, std::uint32_t z) const {
    return point(Vec3{field_.element(x), field_.element(y), field_.element(z)});
}

ProjLine Plane::line(const Vec3& raw) const { return ProjLine{normalized(raw, "line")}; }

ProjLine Plane::line(std::uint32_t a, std::uint32_t b, std::uint32_t c) const {
    return line(Vec3{field_.element(a), field_.element(b), field_.element(c)});
}

std::vector<ProjLine> Plane::all_lines() const {
    std::vector<ProjLine> lines;
    lines.reserve(points_.size());
    for (const ProjPoint& p : points_) lines.push_back(ProjLine{p.coords});
    return lines;
}

std::size_t Plane::index_of(const Vec3& v) const {
    const std::uint32_t q = field_.q();
    if (v[0].code == 0) {
        if (v[1].code == 0) return 0;
        return 1 + v[2].code;
    }
    return static_cast<std::size_t>(q) + 1 + static_cast<std::size_t>(v[1].code) * q + v[2].code;
}

std::size_t Plane::point_index(const ProjPoint& p) const { return index_of(p.coords); }

std::size_t Plane::line_index(const ProjLine& l) const { return index_of(l.coeffs); }

bool Plane::collinear(const ProjPoint& p1, const ProjPoint& p2, const ProjPoint& p3) const {
    return det3(field_, Mat3{p1.coords, p2.coords, p3.coords}) == field_.zero();
}

ProjLine Plane::line_through(const ProjPoint& p1, const ProjPoint& p2) const {
    if (p1 == p2) throw IdenticalPoints("line_through requires distinct points");
    return line(cross3(field_, p1.coords, p2.coords));
}

std::vector<ProjLine> Plane::lines_through_point(const ProjPoint& p) const {
    // Dual incidence: the pencil through p is the solution set of l . p = 0
    // in line coordinates.
    const auto [v1, v2] = kernel_basis(field_, p.coords);
    std::vector<ProjLine> out;
    out.reserve(field_.q() + 1);
    span_classes(field_, v1, v2, [&](const Vec3& v) { out.push_back(line(v)); });
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<ProjPoint> Plane::points_on_line(const ProjLine& l) const {
    const auto [v1, v2] = kernel_basis(field_, l.coeffs);
    std::vector<ProjPoint> out;
    out.reserve(field_.q() + 1);
    span_classes(field_, v1, v2, [&](const Vec3& v) { out.push_back(point(v)); });
    std::sort(out.begin(), out.end());
    return out;
}

/* ---- ProjTransform ------------------------------------------------------ */

ProjTransform::ProjTransform(Field field, Mat3 matrix)
    : field_(std::move(field)), matrix_(matrix) {
    inverse_transpose_ = transpose3(invert3(field_, matrix_));
}

ProjTransform ProjTransform::identity(const Field& field) {
    return ProjTransform(field, identity3(field));
}

ProjPoint ProjTransform::apply(const Plane& pl, const ProjPoint& p) const {
    return pl.point(apply3(field_, matrix_, p.coords));
}

ProjLine ProjTransform::apply(const Plane& pl, const ProjLine& l) const {
    return pl.line(apply3(field_, inverse_transpose_, l.coeffs));
}

ProjTransform ProjTransform::inverse() const {
    return ProjTransform(field_, invert3(field_, matrix_));
}

ProjTransform ProjTransform::compose(const ProjTransform& other) const {
    return ProjTransform(field_, mul3(field_, matrix_, other.matrix_));
}

/* ---- frames -------------------------------------------------------------- */

namespace {

void require_general_position(const Plane& pl, const std::array<ProjPoint, 4>& f,
                              const char* which) {
    for (int skip = 0; skip < 4; ++skip) {
        std::array<const ProjPoint*, 3> t{};
        int k = 0;
        for (int i = 0; i < 4; ++i) {
            if (i != skip) t[k++] = &f[i];
        }
        if (pl.collinear(*t[0], *t[1], *t[2])) {
            throw DegenerateFrame(std::string(which) + " frame has three collinear points");
        }
    }
}

// The transform taking the standard frame (e1, e2, e3, e1+e2+e3) to f:
// columns are the frame points scaled so the fourth maps correctly.
Mat3 frame_matrix(const Field& F, const std::array<ProjPoint, 4>& f) {
    Mat3 cols{};  // [s1 s2 s3] as columns
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) cols[i][j] = f[j].coords[i];
    const Vec3 lambda = apply3(F, invert3(F, cols), f[3].coords);
    Mat3 m{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) m[i][j] = F.mul(cols[i][j], lambda[j]);
    return m;
}

}  // namespace

ProjTransform transform_from_frame(const Plane& pl, const std::array<ProjPoint, 4>& src,
                                   const std::array<ProjPoint, 4>& dst) {
    require_general_position(pl, src, "source");
    require_general_position(pl, dst, "destination");
    const Field& F = pl.field();
    Mat3 m = mul3(F, frame_matrix(F, dst), invert3(F, frame_matrix(F, src)));
    // Canonical scaling: first nonzero entry in row-major order becomes 1.
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            if (m[i][j] != F.zero()) {
                const Fe scale = F.inv(m[i][j]);
                for (int a = 0; a < 3; ++a)
                    for (int b = 0; b < 3; ++b) m[a][b] = F.mul(m[a][b], scale);
                return ProjTransform(F, m);
            }
        }
    }
    throw DegenerateInput("frame transform collapsed to zero");  // unreachable
}

}  // namespace segre
