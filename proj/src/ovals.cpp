#include "segre/ovals.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <random>
#include <set>
#include <string>
#include <thread>

namespace segre {
namespace {

std::string fmt_point(const ProjPoint& p) {
    return "(" + std::to_string(p.coords[0].code) + ":" + std::to_string(p.coords[1].code) +
           ":" + std::to_string(p.coords[2].code) + ")";
}

void require_distinct(std::vector<ProjPoint> pts) {
    std::sort(pts.begin(), pts.end());
    const auto dup = std::adjacent_find(pts.begin(), pts.end());
    if (dup != pts.end()) throw DuplicatePoint("repeated point " + fmt_point(*dup));
}

// Uniform draw from [0, n) by rejection; depends only on the engine's
// standardized output sequence, so results are identical across platforms.
std::uint32_t bounded(std::mt19937_64& rng, std::uint32_t n) {
    const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
    const std::uint64_t rem = (max % n + 1) % n;
    const std::uint64_t limit = max - rem;
    for (;;) {
        const std::uint64_t r = rng();
        if (r <= limit) return static_cast<std::uint32_t>(r % n);
    }
}

}  // namespace

/* ---- arcs and ovals ------------------------------------------------------- */

bool is_arc(const Plane& pl, const std::vector<ProjPoint>& points) {
    require_distinct(points);
    for (std::size_t i = 0; i < points.size(); ++i) {
        for (std::size_t j = i + 1; j < points.size(); ++j) {
            for (std::size_t k = j + 1; k < points.size(); ++k) {
                if (pl.collinear(points[i], points[j], points[k])) return false;
            }
        }
    }
    return true;
}

Oval::Oval(const Plane& pl, std::vector<ProjPoint> points) {
    const std::size_t expected = pl.q() + 1;
    if (points.size() != expected) {
        throw NotAnOval("oval over GF(" + std::to_string(pl.q()) + ") needs " +
                        std::to_string(expected) + " points, got " +
                        std::to_string(points.size()));
    }
    require_distinct(points);
    std::sort(points.begin(), points.end());
    for (std::size_t i = 0; i < points.size(); ++i) {
        for (std::size_t j = i + 1; j < points.size(); ++j) {
            for (std::size_t k = j + 1; k < points.size(); ++k) {
                if (pl.collinear(points[i], points[j], points[k])) {
                    throw NotAnOval("collinear triple " + fmt_point(points[i]) + " " +
                                    fmt_point(points[j]) + " " + fmt_point(points[k]));
                }
            }
        }
    }
    points_ = std::move(points);
}

Oval Oval::unchecked(std::vector<ProjPoint> sorted_points) {
    Oval o;
    o.points_ = std::move(sorted_points);
    return o;
}

bool Oval::contains(const ProjPoint& p) const {
    return std::binary_search(points_.begin(), points_.end(), p);
}

ProjLine tangent_at(const Plane& pl, const Oval& oval, const ProjPoint& p) {
    if (!oval.contains(p)) throw NotMember("point " + fmt_point(p) + " is not on the oval");
    std::vector<ProjLine> pencil = pl.lines_through_point(p);
    std::vector<bool> secant(pencil.size(), false);
    for (const ProjPoint& s : oval.points()) {
        if (s == p) continue;
        const ProjLine l = pl.line_through(p, s);
        const auto it = std::lower_bound(pencil.begin(), pencil.end(), l);
        secant[static_cast<std::size_t>(it - pencil.begin())] = true;
    }
    const ProjLine* tangent = nullptr;
    std::size_t free_count = 0;
    for (std::size_t i = 0; i < pencil.size(); ++i) {
        if (!secant[i]) {
            ++free_count;
            tangent = &pencil[i];
        }
    }
    if (free_count != 1) {
        throw NotUniqueTangent("point " + fmt_point(p) + " lies on " +
                               std::to_string(free_count) + " tangents; not a valid oval");
    }
    return *tangent;
}

/* ---- conics --------------------------------------------------------------- */

Conic::Conic(Field field, std::array<Fe, 6> form) : field_(std::move(field)), form_(form) {
    int lead = -1;
    for (int i = 0; i < 6 && lead < 0; ++i) {
        if (form_[i] != field_.zero()) lead = i;
    }
    if (lead < 0) throw DegenerateInput("conic: zero form");
    const Fe scale = field_.inv(form_[lead]);
    for (Fe& c : form_) c = field_.mul(c, scale);
}

Conic Conic::from_codes(const Field& field, const std::array<std::uint32_t, 6>& codes) {
    std::array<Fe, 6> form{};
    for (int i = 0; i < 6; ++i) form[i] = field.element(codes[i]);
    return Conic(field, form);
}

Fe Conic::evaluate(const ProjPoint& p) const {
    const Field& F = field_;
    const Fe x = p.coords[0], y = p.coords[1], z = p.coords[2];
    Fe acc = F.mul(form_[0], F.mul(x, x));
    acc = F.add(acc, F.mul(form_[1], F.mul(y, y)));
    acc = F.add(acc, F.mul(form_[2], F.mul(z, z)));
    acc = F.add(acc, F.mul(form_[3], F.mul(x, y)));
    acc = F.add(acc, F.mul(form_[4], F.mul(x, z)));
    acc = F.add(acc, F.mul(form_[5], F.mul(y, z)));
    return acc;
}

Mat3 Conic::matrix() const {
    if (field_.p() == 2) throw EvenOrder("conic matrix undefined in characteristic 2");
    const Fe half = field_.inv(field_.from_int(2));
    const Fe d2 = field_.mul(form_[3], half);
    const Fe e2 = field_.mul(form_[4], half);
    const Fe f2 = field_.mul(form_[5], half);
    return Mat3{Vec3{form_[0], d2, e2}, Vec3{d2, form_[1], f2}, Vec3{e2, f2, form_[2]}};
}

bool Conic::nondegenerate() const { return det3(field_, matrix()) != field_.zero(); }

Conic conic_from_five(const Plane& pl, const std::array<ProjPoint, 5>& points) {
    std::vector<ProjPoint> pts(points.begin(), points.end());
    try {
        require_distinct(pts);
    } catch (const DuplicatePoint& e) {
        throw DegenerateInput(std::string("conic_from_five: ") + e.what());
    }
    for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j)
            for (int k = j + 1; k < 5; ++k)
                if (pl.collinear(points[i], points[j], points[k])) {
                    throw DegenerateInput("conic_from_five: collinear triple " +
                                          fmt_point(points[i]) + " " + fmt_point(points[j]) +
                                          " " + fmt_point(points[k]));
                }

    const Field& F = pl.field();
    std::vector<std::vector<Fe>> rows;
    rows.reserve(5);
    for (const ProjPoint& p : points) {
        const Fe x = p.coords[0], y = p.coords[1], z = p.coords[2];
        rows.push_back({F.mul(x, x), F.mul(y, y), F.mul(z, z), F.mul(x, y), F.mul(x, z),
                        F.mul(y, z)});
    }
    const auto kernel = nullspace(F, std::move(rows), 6);
    if (kernel.size() != 1) {
        throw DegenerateInput("conic_from_five: kernel dimension " +
                              std::to_string(kernel.size()));
    }
    std::array<Fe, 6> form{};
    std::copy_n(kernel[0].begin(), 6, form.begin());
    return Conic(F, form);
}

std::vector<ProjPoint> conic_points(const Plane& pl, const Conic& c) {
    if (!c.nondegenerate()) throw DegenerateConic("conic_points requires a nondegenerate form");
    std::vector<ProjPoint> out;
    out.reserve(pl.q() + 1);
    for (const ProjPoint& p : pl.all_points()) {
        if (c.contains(p)) out.push_back(p);
    }
    if (out.size() != pl.q() + 1) {
        throw DegenerateConic("nondegenerate conic with " + std::to_string(out.size()) +
                              " points");  // cannot happen over a field
    }
    return out;
}

ProjLine conic_tangent_line(const Plane& pl, const Conic& c, const ProjPoint& p) {
    if (!c.nondegenerate()) {
        throw DegenerateConic("conic_tangent_line requires a nondegenerate form");
    }
    if (!c.contains(p)) throw NotMember("point " + fmt_point(p) + " is not on the conic");
    return pl.line(apply3(pl.field(), c.matrix(), p.coords));
}

Conic transform_conic(const Plane& pl, const Conic& c, const ProjTransform& t) {
    const Field& F = pl.field();
    const Mat3 minv = invert3(F, t.matrix());
    const Mat3 qm = mul3(F, transpose3(minv), mul3(F, c.matrix(), minv));
    const Fe two = F.from_int(2);
    return Conic(F, {qm[0][0], qm[1][1], qm[2][2], F.mul(two, qm[0][1]), F.mul(two, qm[0][2]),
                     F.mul(two, qm[1][2])});
}

Conic random_conic(const Field& field, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    for (;;) {
        std::array<Fe, 6> form{};
        bool all_zero = true;
        for (Fe& c : form) {
            c = Fe{bounded(rng, field.q())};
            all_zero = all_zero && c == field.zero();
        }
        if (all_zero) continue;
        Conic c(field, form);
        if (c.nondegenerate()) return c;
    }
}

/* ---- enumeration ----------------------------------------------------------- */

namespace {

// Incidence tables for the backtracking search: the line joining any two
// point indices, and each line's point indices ascending.
struct PairLineTables {
    std::size_t n = 0;
    std::vector<std::uint32_t> line_of_pair;               // n*n entries
    std::vector<std::vector<std::uint32_t>> line_points;   // per line
};

PairLineTables build_tables(const Plane& pl) {
    PairLineTables t;
    t.n = pl.size();
    t.line_of_pair.assign(t.n * t.n, 0);
    const auto lines = pl.all_lines();
    t.line_points.resize(lines.size());
    for (std::size_t li = 0; li < lines.size(); ++li) {
        const auto pts = pl.points_on_line(lines[li]);
        auto& idx = t.line_points[li];
        idx.reserve(pts.size());
        for (const ProjPoint& p : pts) idx.push_back(static_cast<std::uint32_t>(pl.point_index(p)));
        for (std::uint32_t a : idx) {
            for (std::uint32_t b : idx) {
                if (a != b) t.line_of_pair[a * t.n + b] = static_cast<std::uint32_t>(li);
            }
        }
    }
    return t;
}

// Depth-first arc extension. Candidates are taken in ascending index order
// and only above the current maximum, so each oval is produced exactly once,
// already sorted, and the whole stream is lexicographically increasing.
struct Searcher {
    const Plane& pl;
    const PairLineTables& t;
    std::size_t target;
    std::vector<std::uint16_t> excl;  // how many secants of the arc cover each point
    std::vector<std::uint32_t> arc;
    std::vector<Oval>* out;

    Searcher(const Plane& pl_, const PairLineTables& t_, std::vector<Oval>* out_)
        : pl(pl_), t(t_), target(pl_.q() + 1), excl(t_.n, 0), out(out_) {
        arc.reserve(target);
    }

    void bump(std::uint32_t cand, int delta) {
        for (std::uint32_t s : arc) {
            for (std::uint32_t r : t.line_points[t.line_of_pair[s * t.n + cand]]) {
                if (r != s && r != cand) {
                    excl[r] = static_cast<std::uint16_t>(static_cast<int>(excl[r]) + delta);
                }
            }
        }
    }

    void emit() {
        std::vector<ProjPoint> pts;
        pts.reserve(arc.size());
        for (std::uint32_t i : arc) pts.push_back(pl.all_points()[i]);
        out->push_back(Oval::unchecked(std::move(pts)));
    }

    void dfs(std::uint32_t from) {
        if (arc.size() == target) {
            emit();
            return;
        }
        const std::size_t needed = target - arc.size();
        for (std::uint32_t cand = from; cand < t.n; ++cand) {
            if (t.n - cand < needed) break;
            if (excl[cand] != 0) continue;
            bump(cand, +1);
            arc.push_back(cand);
            dfs(cand + 1);
            arc.pop_back();
            bump(cand, -1);
        }
    }
};

std::vector<Oval> enumerate_exhaustive(const Plane& pl, std::size_t workers) {
    const PairLineTables tables = build_tables(pl);
    const std::size_t n = tables.n;
    std::vector<std::vector<Oval>> slots(n);

    // Partition by the least point of the oval; slot order keeps the merged
    // stream lexicographic no matter how workers are scheduled.
    auto run_partition = [&](std::size_t first) {
        Searcher s(pl, tables, &slots[first]);
        s.arc.push_back(static_cast<std::uint32_t>(first));
        s.dfs(static_cast<std::uint32_t>(first) + 1);
    };

    if (workers <= 1) {
        for (std::size_t first = 0; first < n; ++first) run_partition(first);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (std::size_t w = 0; w < workers; ++w) {
            pool.emplace_back([&] {
                for (;;) {
                    const std::size_t first = next.fetch_add(1);
                    if (first >= n) return;
                    run_partition(first);
                }
            });
        }
        for (auto& th : pool) th.join();
    }

    std::vector<Oval> out;
    for (auto& slot : slots) {
        out.insert(out.end(), std::make_move_iterator(slot.begin()),
                   std::make_move_iterator(slot.end()));
    }
    return out;
}

std::vector<Oval> enumerate_sampled(const Plane& pl, const SampledMode& mode) {
    const std::size_t n = pl.size();
    const std::size_t target = pl.q() + 1;
    const auto& pts = pl.all_points();
    std::mt19937_64 rng(mode.seed);

    std::set<Oval> seen;
    std::vector<Oval> out;
    std::vector<std::uint16_t> excl(n, 0);
    std::vector<bool> in_arc(n, false);
    std::vector<std::uint32_t> arc, candidates;
    arc.reserve(target);

    for (std::size_t attempt = 0; attempt < mode.max_restarts && out.size() < mode.count;
         ++attempt) {
        std::fill(excl.begin(), excl.end(), 0);
        std::fill(in_arc.begin(), in_arc.end(), false);
        arc.clear();

        while (arc.size() < target) {
            candidates.clear();
            for (std::uint32_t i = 0; i < n; ++i) {
                if (excl[i] == 0 && !in_arc[i]) candidates.push_back(i);
            }
            if (candidates.empty()) break;  // stuck: restart
            const std::uint32_t cand =
                candidates[bounded(rng, static_cast<std::uint32_t>(candidates.size()))];
            for (std::uint32_t s : arc) {
                const ProjLine l = pl.line_through(pts[s], pts[cand]);
                for (const ProjPoint& r : pl.points_on_line(l)) {
                    const std::size_t ri = pl.point_index(r);
                    if (ri != s && ri != cand) ++excl[ri];
                }
            }
            in_arc[cand] = true;
            arc.push_back(cand);
        }

        if (arc.size() == target) {
            std::sort(arc.begin(), arc.end());
            std::vector<ProjPoint> oval_pts;
            oval_pts.reserve(target);
            for (std::uint32_t i : arc) oval_pts.push_back(pts[i]);
            Oval o = Oval::unchecked(std::move(oval_pts));
            if (seen.insert(o).second) out.push_back(std::move(o));
        }
    }
    return out;
}

}  // namespace

std::vector<Oval> enumerate_ovals(const Plane& pl, const EnumerationMode& mode) {
    if (const auto* ex = std::get_if<ExhaustiveMode>(&mode)) {
        return enumerate_exhaustive(pl, ex->workers == 0 ? 1 : ex->workers);
    }
    return enumerate_sampled(pl, std::get<SampledMode>(mode));
}

}  // namespace segre
