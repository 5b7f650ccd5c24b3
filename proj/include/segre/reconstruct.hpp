#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>

#include "segre/ovals.hpp"
#include "segre/poly.hpp"

namespace segre {

/// A function GF(q) -> GF(q) carried in three equivalent forms: the value
/// table, the interpolant f of degree <= q-1, and the formal derivative f'.
/// Whether the graph {(x, f(x))} satisfies the arc condition (no three
/// points collinear) is evaluated once and cached.
class AffineFunction {
  public:
    /// Oval path: builds from a total table and requires the graph arc
    /// condition. Throws IncompleteTable or NotAnOval (witness in message).
    static AffineFunction from_table(const Field& field, const std::map<Fe, Fe>& table);

    /// Audit path: builds from an arbitrary polynomial of degree <= q-1;
    /// the arc condition is recorded, not enforced, so identity checks can
    /// exhibit how they fail on non-oval input. Throws DegenerateInput when
    /// the degree exceeds q-1.
    static AffineFunction from_poly(const Poly& f);

    const Field& field() const { return f_.field(); }
    const std::map<Fe, Fe>& table() const { return table_; }
    const Poly& f() const { return f_; }
    const Poly& fprime() const { return fprime_; }

    /// f(x), table lookup in O(1).
    Fe value(Fe x) const { return values_[x.code]; }
    /// f'(x), same.
    Fe derivative(Fe x) const { return dvalues_[x.code]; }

    std::optional<std::size_t> degree() const { return f_.degree(); }
    bool graph_arc() const { return graph_arc_; }

  private:
    AffineFunction(Poly f, std::map<Fe, Fe> table, bool enforce_arc);

    std::map<Fe, Fe> table_;
    Poly f_;
    Poly fprime_;
    std::vector<Fe> values_;   // f by element code
    std::vector<Fe> dvalues_;  // f' by element code
    bool graph_arc_ = false;
};

/// Counterexample location. u and v are always meaningful; x only for the
/// checks quantified over a third variable.
struct Witness {
    Fe u{};
    Fe v{};
    std::optional<Fe> x;
};

/// One verdict per identity in the proof, plus the degree data the theorem
/// turns on. If every flag is true then the degree is exactly 2.
struct IdentityReport {
    std::uint32_t q = 0;
    std::string oval_id;  // empty for raw-polynomial audits
    bool graph_arc_ok = false;
    bool slope_set_ok = false;
    bool sets_eq_ok = false;
    bool prod_eq_ok = false;
    bool antisymmetry_ok = false;
    bool symmetric_pointwise_ok = false;
    bool symmetric_polynomial_ok = false;
    std::optional<std::size_t> degree;  // absent for the zero polynomial
    bool degree_bound_ok = false;
    std::optional<Witness> witness;  // first failure encountered, scan order

    bool all_ok() const {
        return graph_arc_ok && slope_set_ok && sets_eq_ok && prod_eq_ok && antisymmetry_ok &&
               symmetric_pointwise_ok && symmetric_polynomial_ok && degree_bound_ok;
    }
};

/// Raised when the verified mathematics would be contradicted: the full
/// report rides along for diagnosis.
struct TheoremViolation : Error {
    TheoremViolation(const std::string& msg, IdentityReport r)
        : Error(msg), report(std::move(r)) {}
    IdentityReport report;
};

/// Deterministic identifier of an oval: FNV-1a over the canonical sorted
/// coordinate codes, 16 hex digits.
std::string oval_id(const Oval& o);

/// Moves the oval into the reference position: the returned transform M
/// satisfies (0:1:0) ∈ M(oval) with tangent z = 0 there. The frame choice
/// is deterministic: the least oval point goes to (0:1:0), the least other
/// point of its tangent to (1:0:0), the least other oval point to (0:0:1),
/// and the least point completing a frame to (1:1:1).
/// Throws EvenOrder or NotAnOval.
std::pair<ProjTransform, Oval> normalize_oval(const Plane& pl, const Oval& oval);

/// Reads the affine function off a normalized oval: the q points besides
/// (0:1:0) are (x : f(x) : 1). Throws NotNormalized when (0:1:0) is absent,
/// another point lies on z = 0, or two points share an x.
AffineFunction oval_to_function(const Plane& pl, const Oval& normalized);

/// {(f(x) - f(u)) / (x - u) : x != u}. Equals GF(q) \ {f'(u)} exactly when
/// the graph arc condition holds at u.
std::set<Fe> slope_set(const AffineFunction& af, Fe u);

/// F(x,u,v) = f(x)(u-v) + v f(u) - u f(v) - x (f(u) - f(v)).
Fe f_form(const AffineFunction& af, Fe x, Fe u, Fe v);

/// Set identity at one pair u != v: {F(x,u,v)/(x-u) : x ∉ {u,v}} versus
/// GF(q) \ {f'(u)(u-v) + f(v) - f(u), 0}. The witness is an element of the
/// symmetric difference (least code) when the sets differ.
struct SetsCheck {
    bool ok = false;
    std::optional<Fe> witness;
};
SetsCheck check_sets_identity(const AffineFunction& af, Fe u, Fe v);

/// Product identity at one pair u != v, with P the product of all nonzero
/// elements: prod_x F(x,u,v) / (P/(v-u)) versus P / (f'(u)(u-v)+f(v)-f(u)).
/// Throws ZeroDenominator when the right-hand denominator vanishes (an arc
/// violation); both side values are returned for reporting.
struct ProdCheck {
    bool ok = false;
    Fe lhs{};
    Fe rhs{};
};
ProdCheck check_prod_identity(const AffineFunction& af, Fe u, Fe v);

/// The symmetric slope relation (f'(u)+f'(v))(u-v) = 2(f(u)-f(v)): either
/// verified pointwise over all pairs (witness = first failing pair), or as
/// an identity between bivariate polynomials. For deg f <= q-1 the two modes
/// agree.
enum class SymmetricMode { pointwise, polynomial };
struct SymCheck {
    bool ok = false;
    std::optional<Witness> witness;  // pointwise mode only
};
SymCheck check_symmetric_identity(const AffineFunction& af, SymmetricMode mode);

/// Whether k(X^{k-1} + Y^{k-1})(X - Y) = 2(X^k - Y^k) holds in GF(q)[X,Y].
/// True exactly for k in {0, 1, 2}; for k >= 3 some coefficient survives,
/// including when p divides k and the left side vanishes wholesale.
bool degree_bound_check(const Field& field, std::size_t k);

/// Runs every check above and assembles the report.
IdentityReport run_identity_checks(const AffineFunction& af, std::string id = "");

/// The full pipeline: normalize, read off f, verify all identities, demand
/// deg f = 2, homogenize y = ax^2+bx+c to aX^2 + cZ^2 + bXZ - YZ = 0, and
/// pull the conic back through the normalization. The result provably
/// contains every input point and is nondegenerate; both facts are
/// re-verified. Throws EvenOrder, NotAnOval, or TheoremViolation.
std::pair<Conic, IdentityReport> segre_reconstruct(const Plane& pl, const Oval& oval);

}  // namespace segre
