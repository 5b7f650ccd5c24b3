#include "segre/plane.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "gtest/gtest.h"

using segre::Fe;
using segre::Field;
using segre::Mat3;
using segre::Plane;
using segre::ProjLine;
using segre::ProjPoint;
using segre::ProjTransform;
using segre::Vec3;

namespace {

Mat3 random_invertible(const Field& F, std::mt19937& rng) {
    std::uniform_int_distribution<std::uint32_t> code(0, F.q() - 1);
    for (;;) {
        Mat3 m{};
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) m[i][j] = F.element(code(rng));
        if (det3(F, m) != F.zero()) return m;
    }
}

/* ---- points and normalization ------------------------------------------- */

TEST(PlanePoints, CountsAndCanonicalForm) {
    for (std::uint32_t q : {3u, 5u, 9u}) {
        Plane pl{Field(q)};
        const auto& pts = pl.all_points();
        EXPECT_EQ(pts.size(), static_cast<std::size_t>(q) * q + q + 1);

        std::set<ProjPoint> seen;
        for (const ProjPoint& p : pts) {
            // Leftmost nonzero coordinate is 1.
            int lead = -1;
            for (int i = 0; i < 3 && lead < 0; ++i) {
                if (p.coords[i] != pl.field().zero()) lead = i;
            }
            ASSERT_GE(lead, 0);
            EXPECT_EQ(p.coords[lead], pl.field().one());
            seen.insert(p);
        }
        EXPECT_EQ(seen.size(), pts.size());  // all distinct
        EXPECT_TRUE(std::is_sorted(pts.begin(), pts.end()));
    }
}

TEST(PlanePoints, NormalizationIdempotent) {
    Plane pl{Field(7)};
    std::mt19937 rng(71);
    std::uniform_int_distribution<std::uint32_t> code(0, 6);
    for (int trial = 0; trial < 200; ++trial) {
        Vec3 raw{Fe{code(rng)}, Fe{code(rng)}, Fe{code(rng)}};
        if (raw == Vec3{Fe{0}, Fe{0}, Fe{0}}) continue;
        const ProjPoint p = pl.point(raw);
        EXPECT_EQ(pl.point(p.coords), p);
        // Scalar multiples normalize to the same representative.
        for (std::uint32_t s = 1; s < 7; ++s) {
            Vec3 scaled{};
            for (int i = 0; i < 3; ++i) scaled[i] = pl.field().mul(raw[i], Fe{s});
            EXPECT_EQ(pl.point(scaled), p);
        }
    }
    EXPECT_THROW(pl.point(Vec3{Fe{0}, Fe{0}, Fe{0}}), segre::DegenerateInput);
    EXPECT_THROW(pl.line(Vec3{Fe{0}, Fe{0}, Fe{0}}), segre::DegenerateInput);
}

TEST(PlanePoints, IndexRoundTrip) {
    for (std::uint32_t q : {3u, 5u, 9u}) {
        Plane pl{Field(q)};
        const auto& pts = pl.all_points();
        for (std::size_t i = 0; i < pts.size(); ++i) {
            EXPECT_EQ(pl.point_index(pts[i]), i);
        }
        const auto lines = pl.all_lines();
        for (std::size_t i = 0; i < lines.size(); ++i) {
            EXPECT_EQ(pl.line_index(lines[i]), i);
        }
    }
}

/* ---- incidence ------------------------------------------------------------ */

TEST(PlaneIncidence, CollinearExamples) {
    Plane pl{Field(3)};
    EXPECT_TRUE(pl.collinear(pl.point(1, 0, 1), pl.point(1, 1, 1), pl.point(1, 2, 1)));
    EXPECT_FALSE(pl.collinear(pl.point(1, 0, 0), pl.point(0, 1, 0), pl.point(0, 0, 1)));
    EXPECT_FALSE(pl.collinear(pl.point(0, 0, 1), pl.point(1, 1, 1), pl.point(1, 2, 1)));
    const ProjPoint p = pl.point(1, 2, 0);
    EXPECT_TRUE(pl.collinear(p, p, pl.point(0, 0, 1)));  // repeated point
}

TEST(PlaneIncidence, LineThroughExamples) {
    Plane pl{Field(3)};
    EXPECT_EQ(pl.line_through(pl.point(0, 1, 0), pl.point(1, 0, 0)), pl.line(0, 0, 1));
    EXPECT_EQ(pl.line_through(pl.point(0, 0, 1), pl.point(0, 1, 0)), pl.line(1, 0, 0));
    EXPECT_THROW(pl.line_through(pl.point(1, 2, 1), pl.point(1, 2, 1)),
                 segre::IdenticalPoints);
}

TEST(PlaneIncidence, DualityCountsExhaustive) {
    for (std::uint32_t q : {3u, 5u}) {
        Plane pl{Field(q)};
        const auto pts = pl.all_points();
        const auto lines = pl.all_lines();

        for (const ProjLine& l : lines) {
            std::size_t on = 0;
            for (const ProjPoint& p : pts) on += pl.incident(p, l);
            EXPECT_EQ(on, q + 1);
            const auto listed = pl.points_on_line(l);
            EXPECT_EQ(listed.size(), q + 1);
            EXPECT_TRUE(std::is_sorted(listed.begin(), listed.end()));
            for (const ProjPoint& p : listed) EXPECT_TRUE(pl.incident(p, l));
        }
        for (const ProjPoint& p : pts) {
            std::size_t through = 0;
            for (const ProjLine& l : lines) through += pl.incident(p, l);
            EXPECT_EQ(through, q + 1);
            const auto pencil = pl.lines_through_point(p);
            EXPECT_EQ(pencil.size(), q + 1);
            EXPECT_TRUE(std::is_sorted(pencil.begin(), pencil.end()));
            for (const ProjLine& l : pencil) EXPECT_TRUE(pl.incident(p, l));
        }
        // Two distinct points determine exactly one common line.
        for (std::size_t i = 0; i < pts.size(); ++i) {
            for (std::size_t j = i + 1; j < pts.size(); ++j) {
                std::size_t common = 0;
                for (const ProjLine& l : lines) {
                    common += pl.incident(pts[i], l) && pl.incident(pts[j], l);
                }
                EXPECT_EQ(common, 1u);
                EXPECT_TRUE(pl.incident(pts[i], pl.line_through(pts[i], pts[j])));
            }
        }
    }
}

TEST(PlaneIncidence, PencilThroughInfinity) {
    // The pencil through (0:1:0) is z = 0 together with the q lines x = cz.
    Plane pl{Field(5)};
    const auto pencil = pl.lines_through_point(pl.point(0, 1, 0));
    ASSERT_EQ(pencil.size(), 6u);
    std::set<ProjLine> expected;
    expected.insert(pl.line(0, 0, 1));
    for (std::uint32_t c = 0; c < 5; ++c) {
        expected.insert(pl.line(Vec3{pl.field().one(), pl.field().zero(),
                                     pl.field().neg(pl.field().element(c))}));
    }
    EXPECT_EQ(std::set<ProjLine>(pencil.begin(), pencil.end()), expected);
}

/* ---- transforms ------------------------------------------------------------ */

TEST(PlaneTransforms, RejectsSingular) {
    Field F(5);
    Mat3 m = identity3(F);
    m[2] = m[1];
    EXPECT_THROW(ProjTransform(F, m), segre::DegenerateInput);
}

TEST(PlaneTransforms, InverseAndCompose) {
    Field F(7);
    Plane pl{F};
    std::mt19937 rng(72);
    for (int trial = 0; trial < 20; ++trial) {
        const ProjTransform t(F, random_invertible(F, rng));
        const ProjTransform u(F, random_invertible(F, rng));
        const ProjTransform ti = t.inverse();
        const ProjTransform tu = t.compose(u);
        for (const ProjPoint& p : pl.all_points()) {
            EXPECT_EQ(ti.apply(pl, t.apply(pl, p)), p);
            EXPECT_EQ(tu.apply(pl, p), t.apply(pl, u.apply(pl, p)));
        }
    }
}

TEST(PlaneTransforms, IncidencePreservedExhaustive) {
    Field F(3);
    Plane pl{F};
    std::mt19937 rng(33);
    std::vector<ProjTransform> transforms;
    transforms.push_back(ProjTransform::identity(F));
    for (int trial = 0; trial < 10; ++trial) {
        transforms.emplace_back(F, random_invertible(F, rng));
    }
    for (const ProjTransform& t : transforms) {
        for (const ProjPoint& p : pl.all_points()) {
            for (const ProjLine& l : pl.all_lines()) {
                EXPECT_EQ(pl.incident(p, l), pl.incident(t.apply(pl, p), t.apply(pl, l)));
            }
        }
    }
}

TEST(PlaneFrames, StandardFrameIdentity) {
    Field F(5);
    Plane pl{F};
    const std::array<ProjPoint, 4> frame = {pl.point(1, 0, 0), pl.point(0, 1, 0),
                                            pl.point(0, 0, 1), pl.point(1, 1, 1)};
    const ProjTransform t = transform_from_frame(pl, frame, frame);
    EXPECT_EQ(t.matrix(), identity3(F));
}

TEST(PlaneFrames, SwapGivesPermutationMatrix) {
    Field F(5);
    Plane pl{F};
    const std::array<ProjPoint, 4> src = {pl.point(1, 0, 0), pl.point(0, 1, 0),
                                          pl.point(0, 0, 1), pl.point(1, 1, 1)};
    const std::array<ProjPoint, 4> dst = {pl.point(0, 1, 0), pl.point(1, 0, 0),
                                          pl.point(0, 0, 1), pl.point(1, 1, 1)};
    const ProjTransform t = transform_from_frame(pl, src, dst);
    Mat3 expected{};
    expected[0] = Vec3{F.zero(), F.one(), F.zero()};
    expected[1] = Vec3{F.one(), F.zero(), F.zero()};
    expected[2] = Vec3{F.zero(), F.zero(), F.one()};
    EXPECT_EQ(t.matrix(), expected);
}

TEST(PlaneFrames, MapsFramePointwise) {
    for (std::uint32_t q : {3u, 5u, 9u}) {
        Field F(q);
        Plane pl{F};
        std::mt19937 rng(400 + q);
        std::uniform_int_distribution<std::size_t> pick(0, pl.size() - 1);
        auto random_frame = [&]() -> std::array<ProjPoint, 4> {
            for (;;) {
                std::array<ProjPoint, 4> f = {pl.all_points()[pick(rng)],
                                              pl.all_points()[pick(rng)],
                                              pl.all_points()[pick(rng)],
                                              pl.all_points()[pick(rng)]};
                bool ok = true;
                for (int skip = 0; skip < 4 && ok; ++skip) {
                    const ProjPoint& a = f[(skip + 1) % 4];
                    const ProjPoint& b = f[(skip + 2) % 4];
                    const ProjPoint& c = f[(skip + 3) % 4];
                    ok = !pl.collinear(a, b, c);
                }
                if (ok) return f;
            }
        };
        for (int trial = 0; trial < 15; ++trial) {
            const auto src = random_frame(), dst = random_frame();
            const ProjTransform t = transform_from_frame(pl, src, dst);
            for (int i = 0; i < 4; ++i) EXPECT_EQ(t.apply(pl, src[i]), dst[i]);
            // Canonical scaling: first nonzero matrix entry is 1.
            bool found = false;
            for (int i = 0; i < 3 && !found; ++i) {
                for (int j = 0; j < 3 && !found; ++j) {
                    if (t.matrix()[i][j] != F.zero()) {
                        EXPECT_EQ(t.matrix()[i][j], F.one());
                        found = true;
                    }
                }
            }
        }
    }
}

TEST(PlaneFrames, DegenerateFrameThrows) {
    Field F(5);
    Plane pl{F};
    const std::array<ProjPoint, 4> good = {pl.point(1, 0, 0), pl.point(0, 1, 0),
                                           pl.point(0, 0, 1), pl.point(1, 1, 1)};
    // (1:0:0), (1:1:0), (0:1:0) lie on z = 0.
    const std::array<ProjPoint, 4> bad = {pl.point(1, 0, 0), pl.point(1, 1, 0),
                                          pl.point(0, 1, 0), pl.point(1, 1, 1)};
    EXPECT_THROW(transform_from_frame(pl, bad, good), segre::DegenerateFrame);
    EXPECT_THROW(transform_from_frame(pl, good, bad), segre::DegenerateFrame);
}

/* ---- nullspace helper ------------------------------------------------------ */

TEST(LinalgNullspace, KnownKernel) {
    Field F(7);
    std::vector<std::vector<Fe>> rows = {{F.one(), F.zero(), F.zero()},
                                         {F.zero(), F.one(), F.zero()}};
    const auto basis = nullspace(F, rows, 3);
    ASSERT_EQ(basis.size(), 1u);
    EXPECT_EQ(basis[0], (std::vector<Fe>{F.zero(), F.zero(), F.one()}));
}

TEST(LinalgNullspace, BasisVectorsAnnihilate) {
    Field F(5);
    std::mt19937 rng(55);
    std::uniform_int_distribution<std::uint32_t> code(0, 4);
    for (int trial = 0; trial < 40; ++trial) {
        std::uniform_int_distribution<std::size_t> dims(1, 6);
        const std::size_t nrows = dims(rng), ncols = dims(rng);
        std::vector<std::vector<Fe>> rows(nrows, std::vector<Fe>(ncols, F.zero()));
        for (auto& row : rows)
            for (Fe& x : row) x = F.element(code(rng));

        auto copy = rows;
        const auto basis = nullspace(F, rows, ncols);
        std::vector<std::vector<Fe>> reduced = copy;
        const std::size_t rank = rref(F, reduced).size();
        EXPECT_EQ(basis.size(), ncols - rank);  // rank-nullity

        for (const auto& v : basis) {
            for (const auto& row : copy) {
                Fe acc = F.zero();
                for (std::size_t j = 0; j < ncols; ++j) acc = F.add(acc, F.mul(row[j], v[j]));
                EXPECT_EQ(acc, F.zero());
            }
        }
    }
}

}  // namespace
