#ifndef GLACALC_ALGEBRA_HPP
#define GLACALC_ALGEBRA_HPP

#include <memory>
#include <string>
#include <vector>

#include "glacalc/linalg.hpp"
#include "glacalc/rational.hpp"
#include "glacalc/report.hpp"
#include "glacalc/rng.hpp"

namespace glacalc {

class Algebra;
using AlgebraPtr = std::shared_ptr<const Algebra>;

/// Finite-dimensional algebra over the fraction field with an anchor map
/// into the derivations of the coefficient ring.
///
/// The data is a basis t_1..t_p, an anchor table rho (p x m, where
/// rho(t_a) = sum_i rho[a][i] d_i as a derivation), and a structure table
/// L with [t_a, t_b] = sum_g L(g, a, b) t_g.  The bracket of general
/// elements extends this through the Leibniz rule
///   [u, f v] = f [u, v] + rho(u)(f) v,
/// so it is additive but deliberately not F-bilinear.
///
/// Construction enforces shapes and the antisymmetry of L; the Jacobi and
/// anchor-compatibility axioms are checked separately by validate_axioms,
/// so structurally well-formed but non-Lie data can still be built and
/// inspected.
class Algebra {
 public:
  /// Validates shapes and antisymmetry and freezes the data.
  /// `anchor` has p rows of m entries; `structure` is flattened with
  /// L(g, a, b) at index (g*p + a)*p + b (all indices 0-based here).
  static AlgebraPtr make(std::vector<std::string> vars, int p, Matrix anchor,
                         std::vector<RatFunc> structure);

  [[nodiscard]] int var_count() const { return static_cast<int>(m_vars.size()); }
  [[nodiscard]] int dim() const { return m_dim; }
  [[nodiscard]] const std::vector<std::string>& vars() const { return m_vars; }

  /// rho^i_a with 0-based element index a and variable index i.
  [[nodiscard]] const RatFunc& anchor(int a, int i) const {
    return m_anchor[a][i];
  }
  [[nodiscard]] const Matrix& anchor_table() const { return m_anchor; }

  /// L^g_ab with 0-based indices.
  [[nodiscard]] const RatFunc& structure(int g, int a, int b) const {
    return m_structure[(g * m_dim + a) * m_dim + b];
  }

 private:
  std::vector<std::string> m_vars;
  int m_dim;
  Matrix m_anchor;
  std::vector<RatFunc> m_structure;

  Algebra(std::vector<std::string> vars, int p, Matrix anchor,
          std::vector<RatFunc> structure);
};

/// True when the two algebras carry identical tables (componentwise
/// canonical equality) over identically named variables.
bool same_structure(const Algebra& a, const Algebra& b);

/// Element sum u^a t_a of a specific algebra instance.
struct Element {
  AlgebraPtr algebra;
  std::vector<RatFunc> coeff;  // size p, over the algebra's ring
};

Element make_element(AlgebraPtr algebra, std::vector<RatFunc> coeff);
Element basis_element(const AlgebraPtr& algebra, int a);  // 0-based
Element zero_element(const AlgebraPtr& algebra);

Element operator+(const Element& u, const Element& v);
Element operator-(const Element& u, const Element& v);
/// Module action f * u.
Element scaled(const Element& u, const RatFunc& f);
bool operator==(const Element& u, const Element& v);

/// Renders an element as a combination of t_1..t_p.
std::string element_to_string(const Element& u);

/// Requires both elements to belong to the same algebra instance.
void check_same_algebra(const Element& u, const Element& v);

/// Bracket of general elements via the closed form
///   [u, v]^g = sum_{a,b} u^a v^b L^g_ab + rho(u)(v^g) - rho(v)(u^g).
Element bracket(const Element& u, const Element& v);

/// Action of rho(u) on a coefficient function.
RatFunc anchor_apply(const Element& u, const RatFunc& f);

/// Full axiom suite: exhaustive antisymmetry, basis Jacobi and
/// anchor-compatibility identities, plus seeded randomized checks of the
/// Jacobi identity and the anchor-is-a-morphism property on general
/// elements.  Deterministic for a fixed (samples, seed).
Report validate_axioms(const AlgebraPtr& algebra, int samples = 16,
                       std::uint64_t seed = 0);

/// Mutually inverse substitution maps x -> h(x); both directions are
/// verified to compose to the identity.
struct DiffeoPair {
  std::vector<std::string> vars;
  std::vector<RatFunc> forward;   // size m, over the same ring
  std::vector<RatFunc> inverse;
};

DiffeoPair make_diffeo(std::vector<std::string> vars, std::vector<RatFunc> forward,
                       std::vector<RatFunc> inverse);

// Built-in algebras.

/// 3-dimensional nilpotent example over constants: [t_1, t_2] = t_3.
AlgebraPtr heisenberg();
/// Classical simple 3-dimensional example over constants:
/// [t_1, t_2] = 2 t_2, [t_1, t_3] = -2 t_3, [t_2, t_3] = t_1.
AlgebraPtr sl2();
/// One variable, one basis element acting as d/dx: the line's chart.
AlgebraPtr tangent_line();
/// Derivations plus a trailing central-module element e with rho(e) = 0;
/// p = m + 1, L = 0.  Variable names: x for m = 1, x1..xm otherwise.
AlgebraPtr der_plus_f(int m);
/// Derivations with anchor twisted by a square matrix over F: p = m,
/// rho = rho_self, L = 0.
AlgebraPtr bullet(std::vector<std::string> vars, Matrix rho_self);

/// Anchor deformation along a diffeomorphism pair: the anchor action is
/// conjugated by substitution, rho~(t_a)(f) = (rho(t_a)(f o h)) o h^{-1},
/// which on coordinates gives rho~[a][k] = (sum_i rho[a][i] dh^k/dx_i) o h^{-1}.
/// Structure constants are unchanged.  Deforming by h and then by the
/// inverse pair restores the original algebra exactly.
AlgebraPtr deform(const AlgebraPtr& base, const DiffeoPair& h);

/// Chart pull-back: every table entry is composed with the forward map
/// (L o h, rho o h).  Only the forward substitution is needed, so h is not
/// required to be invertible.
AlgebraPtr pullback_chart(const AlgebraPtr& base, const std::vector<RatFunc>& forward);

/// Random element with polynomial coefficients (total degree <= 2,
/// integer coefficients in [-3, 3]).
Element random_element(SplitMix64& rng, const AlgebraPtr& algebra);

}  // namespace glacalc

#endif
