#include "segre/reconstruct.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace segre {
namespace {

// Least collinear triple of graph points, by x codes, or nullopt when the
// graph is an arc. Affine points (x, y) embed as (x : y : 1), so three are
// collinear iff the 2x2 secant test degenerates.
std::optional<std::array<std::uint32_t, 3>> graph_collinear_triple(const Field& F,
                                                                   const std::vector<Fe>& values) {
    const std::uint32_t q = F.q();
    for (std::uint32_t i = 0; i < q; ++i) {
        const Fe xi = F.element(i), yi = values[i];
        for (std::uint32_t j = i + 1; j < q; ++j) {
            const Fe dx1 = F.sub(F.element(j), xi);
            const Fe dy1 = F.sub(values[j], yi);
            for (std::uint32_t k = j + 1; k < q; ++k) {
                const Fe dx2 = F.sub(F.element(k), xi);
                const Fe dy2 = F.sub(values[k], yi);
                if (F.mul(dx1, dy2) == F.mul(dx2, dy1)) return {{i, j, k}};
            }
        }
    }
    return std::nullopt;
}

std::string describe_witness(const IdentityReport& rep) {
    std::ostringstream os;
    if (rep.witness) {
        os << " (witness u=" << rep.witness->u.code << " v=" << rep.witness->v.code;
        if (rep.witness->x) os << " x=" << rep.witness->x->code;
        os << ")";
    }
    return os.str();
}

}  // namespace

AffineFunction::AffineFunction(Poly f, std::map<Fe, Fe> table, bool enforce_arc)
    : table_(std::move(table)), f_(std::move(f)), fprime_(f_.derive()) {
    const Field& F = f_.field();
    values_.reserve(F.q());
    dvalues_.reserve(F.q());
    for (const Fe x : F.elements()) {
        values_.push_back(f_.evaluate(x));
        dvalues_.push_back(fprime_.evaluate(x));
    }
    const auto triple = graph_collinear_triple(F, values_);
    graph_arc_ = !triple.has_value();
    if (enforce_arc && triple) {
        std::ostringstream os;
        os << "graph has collinear points above x = " << (*triple)[0] << ", " << (*triple)[1]
           << ", " << (*triple)[2];
        throw NotAnOval(os.str());
    }
}

AffineFunction AffineFunction::from_table(const Field& field, const std::map<Fe, Fe>& table) {
    return AffineFunction(interpolate(field, table), table, true);
}

AffineFunction AffineFunction::from_poly(const Poly& f) {
    const Field& F = f.field();
    if (f.degree().value_or(0) > F.q() - 1)
        throw DegenerateInput("polynomial degree exceeds q - 1");
    std::map<Fe, Fe> table;
    for (const Fe x : F.elements()) table.emplace(x, f.evaluate(x));
    return AffineFunction(f, std::move(table), false);
}

std::string oval_id(const Oval& o) {
    std::uint64_t h = 14695981039346656037ull;
    const auto mix = [&h](std::uint32_t v) {
        for (int i = 0; i < 4; ++i) {
            h ^= (v >> (8 * i)) & 0xffu;
            h *= 1099511628211ull;
        }
    };
    for (const ProjPoint& p : o.points())
        for (const Fe c : p.coords) mix(c.code);
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

std::pair<ProjTransform, Oval> normalize_oval(const Plane& pl, const Oval& oval) {
    const Field& F = pl.field();
    if (F.p() == 2) throw EvenOrder("normalization requires odd order");
    const Oval checked(pl, oval.points());  // cheap revalidation; unchecked inputs exist
    const auto& pts = checked.points();

    const ProjPoint p0 = pts[0];
    const ProjLine t = tangent_at(pl, checked, p0);
    ProjPoint r{};
    for (const ProjPoint& cand : pl.points_on_line(t)) {
        if (cand != p0) {
            r = cand;
            break;
        }
    }
    const ProjPoint s = pts[1];
    const ProjLine l_p0s = pl.line_through(p0, s);
    const ProjLine l_rs = pl.line_through(r, s);
    ProjPoint w{};
    bool found_w = false;
    for (const ProjPoint& cand : pl.all_points()) {
        if (!pl.incident(cand, t) && !pl.incident(cand, l_p0s) && !pl.incident(cand, l_rs)) {
            w = cand;
            found_w = true;
            break;
        }
    }
    if (!found_w) throw DegenerateFrame("no point completes the normalization frame");

    const std::array<ProjPoint, 4> src{p0, r, s, w};
    const std::array<ProjPoint, 4> dst{pl.point(0, 1, 0), pl.point(1, 0, 0), pl.point(0, 0, 1),
                                       pl.point(1, 1, 1)};
    const ProjTransform m = transform_from_frame(pl, src, dst);

    std::vector<ProjPoint> moved;
    moved.reserve(pts.size());
    for (const ProjPoint& p : pts) moved.push_back(m.apply(pl, p));
    std::sort(moved.begin(), moved.end());
    return {m, Oval::unchecked(std::move(moved))};
}

AffineFunction oval_to_function(const Plane& pl, const Oval& normalized) {
    const Field& F = pl.field();
    const ProjPoint inf = pl.point(0, 1, 0);
    if (!normalized.contains(inf)) throw NotNormalized("(0:1:0) is not on the oval");
    std::map<Fe, Fe> table;
    for (const ProjPoint& p : normalized.points()) {
        if (p == inf) continue;
        const Fe z = p.coords[2];
        if (z == F.zero()) throw NotNormalized("a second point lies on z = 0");
        const Fe x = F.div(p.coords[0], z);
        const Fe y = F.div(p.coords[1], z);
        if (!table.emplace(x, y).second) throw NotNormalized("two points share an x coordinate");
    }
    return AffineFunction::from_table(F, table);
}

std::set<Fe> slope_set(const AffineFunction& af, Fe u) {
    const Field& F = af.field();
    std::set<Fe> out;
    const Fe fu = af.value(u);
    for (const Fe x : F.elements()) {
        if (x == u) continue;
        out.insert(F.div(F.sub(af.value(x), fu), F.sub(x, u)));
    }
    return out;
}

Fe f_form(const AffineFunction& af, Fe x, Fe u, Fe v) {
    const Field& F = af.field();
    const Fe fx = af.value(x), fu = af.value(u), fv = af.value(v);
    Fe acc = F.mul(fx, F.sub(u, v));
    acc = F.add(acc, F.mul(v, fu));
    acc = F.sub(acc, F.mul(u, fv));
    acc = F.sub(acc, F.mul(x, F.sub(fu, fv)));
    return acc;
}

SetsCheck check_sets_identity(const AffineFunction& af, Fe u, Fe v) {
    const Field& F = af.field();
    if (u == v) throw std::invalid_argument("check_sets_identity: u == v");
    const std::uint32_t q = F.q();
    std::vector<char> lhs(q, 0), rhs(q, 1);
    for (const Fe x : F.elements()) {
        if (x == u || x == v) continue;
        lhs[F.div(f_form(af, x, u, v), F.sub(x, u)).code] = 1;
    }
    const Fe c =
        F.add(F.mul(af.derivative(u), F.sub(u, v)), F.sub(af.value(v), af.value(u)));
    rhs[c.code] = 0;
    rhs[0] = 0;
    for (std::uint32_t e = 0; e < q; ++e)
        if (lhs[e] != rhs[e]) return {false, F.element(e)};
    return {true, std::nullopt};
}

ProdCheck check_prod_identity(const AffineFunction& af, Fe u, Fe v) {
    const Field& F = af.field();
    if (u == v) throw std::invalid_argument("check_prod_identity: u == v");
    const Fe c =
        F.add(F.mul(af.derivative(u), F.sub(u, v)), F.sub(af.value(v), af.value(u)));
    if (c == F.zero())
        throw ZeroDenominator("tangent slope meets a secant slope at u = " +
                              std::to_string(u.code) + ", v = " + std::to_string(v.code));
    const Fe big_p = F.nonzero_product();
    Fe prod = F.one();
    for (const Fe x : F.elements()) {
        if (x == u || x == v) continue;
        prod = F.mul(prod, f_form(af, x, u, v));
    }
    const Fe lhs = F.div(prod, F.div(big_p, F.sub(v, u)));
    const Fe rhs = F.div(big_p, c);
    return {lhs == rhs, lhs, rhs};
}

SymCheck check_symmetric_identity(const AffineFunction& af, SymmetricMode mode) {
    const Field& F = af.field();
    if (mode == SymmetricMode::pointwise) {
        const Fe two = F.from_int(2);
        for (const Fe u : F.elements()) {
            for (const Fe v : F.elements()) {
                if (u == v) continue;
                const Fe lhs =
                    F.mul(F.add(af.derivative(u), af.derivative(v)), F.sub(u, v));
                const Fe rhs = F.mul(two, F.sub(af.value(u), af.value(v)));
                if (lhs != rhs) return {false, Witness{u, v, std::nullopt}};
            }
        }
        return {true, std::nullopt};
    }
    const Poly2 x = Poly2::monomial(F, F.one(), 1, 0);
    const Poly2 y = Poly2::monomial(F, F.one(), 0, 1);
    const Poly2 lhs = (Poly2::of_x(af.fprime()) + Poly2::of_y(af.fprime())) * (x - y);
    const Poly2 rhs = (Poly2::of_x(af.f()) - Poly2::of_y(af.f())).scaled(F.from_int(2));
    return {lhs == rhs, std::nullopt};
}

bool degree_bound_check(const Field& field, std::size_t k) {
    const Fe kbar = field.from_int(static_cast<std::int64_t>(k % field.p()));
    Poly2 lhs = Poly2::zero(field);
    if (k >= 1) {
        const Poly2 x = Poly2::monomial(field, field.one(), 1, 0);
        const Poly2 y = Poly2::monomial(field, field.one(), 0, 1);
        const Poly2 powers = Poly2::monomial(field, field.one(), k - 1, 0) +
                             Poly2::monomial(field, field.one(), 0, k - 1);
        lhs = (powers * (x - y)).scaled(kbar);
    }
    const Poly2 rhs = (Poly2::monomial(field, field.one(), k, 0) -
                       Poly2::monomial(field, field.one(), 0, k))
                          .scaled(field.from_int(2));
    return lhs == rhs;
}

IdentityReport run_identity_checks(const AffineFunction& af, std::string id) {
    const Field& F = af.field();
    const std::uint32_t q = F.q();
    IdentityReport rep;
    rep.q = q;
    rep.oval_id = std::move(id);
    rep.graph_arc_ok = af.graph_arc();
    const auto note = [&rep](Fe u, Fe v, std::optional<Fe> x) {
        if (!rep.witness) rep.witness = Witness{u, v, x};
    };

    // Slope law at each u: the q-1 secant slopes are exactly the elements
    // other than f'(u). The witness repeats u and carries the offending
    // slope value in x.
    rep.slope_set_ok = true;
    for (const Fe u : F.elements()) {
        std::vector<char> seen(q, 0);
        const Fe fu = af.value(u);
        for (const Fe x : F.elements()) {
            if (x == u) continue;
            seen[F.div(F.sub(af.value(x), fu), F.sub(x, u)).code] = 1;
        }
        const std::uint32_t missing = af.derivative(u).code;
        for (std::uint32_t e = 0; e < q && rep.slope_set_ok; ++e) {
            if (seen[e] != (e != missing ? 1 : 0)) {
                rep.slope_set_ok = false;
                note(u, u, F.element(e));
            }
        }
        if (!rep.slope_set_ok) break;
    }

    rep.sets_eq_ok = true;
    for (const Fe u : F.elements()) {
        for (const Fe v : F.elements()) {
            if (u == v) continue;
            const SetsCheck sc = check_sets_identity(af, u, v);
            if (!sc.ok) {
                rep.sets_eq_ok = false;
                note(u, v, sc.witness);
                break;
            }
        }
        if (!rep.sets_eq_ok) break;
    }

    rep.prod_eq_ok = true;
    for (const Fe u : F.elements()) {
        for (const Fe v : F.elements()) {
            if (u == v) continue;
            try {
                const ProdCheck pc = check_prod_identity(af, u, v);
                if (!pc.ok) {
                    rep.prod_eq_ok = false;
                    note(u, v, std::nullopt);
                    break;
                }
            } catch (const ZeroDenominator&) {
                rep.prod_eq_ok = false;
                note(u, v, std::nullopt);
                break;
            }
        }
        if (!rep.prod_eq_ok) break;
    }

    rep.antisymmetry_ok = true;
    for (std::uint32_t uc = 0; uc < q && rep.antisymmetry_ok; ++uc) {
        for (std::uint32_t vc = uc + 1; vc < q && rep.antisymmetry_ok; ++vc) {
            const Fe u = F.element(uc), v = F.element(vc);
            for (const Fe x : F.elements()) {
                if (f_form(af, x, u, v) != F.neg(f_form(af, x, v, u))) {
                    rep.antisymmetry_ok = false;
                    note(u, v, x);
                    break;
                }
            }
        }
    }

    const SymCheck pw = check_symmetric_identity(af, SymmetricMode::pointwise);
    rep.symmetric_pointwise_ok = pw.ok;
    if (!pw.ok && pw.witness) note(pw.witness->u, pw.witness->v, pw.witness->x);
    rep.symmetric_polynomial_ok = check_symmetric_identity(af, SymmetricMode::polynomial).ok;

    rep.degree = af.degree();
    // The zero polynomial carries no degree; it cannot arise from an oval
    // and is reported as failing the bound.
    rep.degree_bound_ok = rep.degree.has_value() && degree_bound_check(F, *rep.degree);
    return rep;
}

std::pair<Conic, IdentityReport> segre_reconstruct(const Plane& pl, const Oval& oval) {
    const Field& F = pl.field();
    if (F.p() == 2) throw EvenOrder("reconstruction requires odd order");
    auto [m, nov] = normalize_oval(pl, oval);
    const AffineFunction af = oval_to_function(pl, nov);
    IdentityReport rep = run_identity_checks(af, oval_id(oval));
    if (!rep.all_ok())
        throw TheoremViolation("identity checks failed for oval " + rep.oval_id +
                                   describe_witness(rep),
                               rep);
    if (!rep.degree || *rep.degree != 2)
        throw TheoremViolation("oval function does not have degree 2", rep);

    // y = a x^2 + b x + c homogenizes to a X^2 + c Z^2 + b XZ - YZ = 0.
    const Fe a = af.f().coeff(2), b = af.f().coeff(1), c = af.f().coeff(0);
    const Conic normal(F, {a, F.zero(), c, F.zero(), b, F.minus_one()});
    const Conic back = transform_conic(pl, normal, m.inverse());

    for (const ProjPoint& p : oval.points())
        if (!back.contains(p))
            throw TheoremViolation("reconstructed conic misses an oval point", rep);
    if (!back.nondegenerate())
        throw TheoremViolation("reconstructed conic is degenerate", rep);
    return {back, rep};
}

}  // namespace segre
