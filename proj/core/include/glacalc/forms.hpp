#ifndef GLACALC_FORMS_HPP
#define GLACALC_FORMS_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "glacalc/algebra.hpp"

namespace glacalc {

/// Alternating F-multilinear q-form on an algebra, stored as coefficients
/// on strictly increasing basis multi-indices (0-based).  Zero coefficients
/// are never stored, so equal forms have identical tables.  A 0-form is a
/// single coefficient keyed by the empty index.
struct Form {
  AlgebraPtr algebra;
  int degree = 0;
  std::map<std::vector<int>, RatFunc> coeff;
};

Form zero_form(AlgebraPtr algebra, int degree);
/// Coframe 1-form t^a dual to basis element t_a (0-based).
Form coframe(const AlgebraPtr& algebra, int a);
/// Degree-0 form holding a coefficient function.
Form function_form(AlgebraPtr algebra, RatFunc f);
/// Validates indices (strictly increasing, in range) and coefficient rings.
Form make_form(AlgebraPtr algebra, int degree,
               std::map<std::vector<int>, RatFunc> coeff);

/// Adds c at a not-necessarily-sorted index tuple, normalizing the sign by
/// sorting and dropping tuples with repeats.
void form_accumulate(Form& form, std::vector<int> idx, const RatFunc& c);

/// Coefficient at a strictly increasing tuple (zero when absent).
RatFunc form_coeff(const Form& form, const std::vector<int>& idx);

/// Evaluation on exactly `degree` elements: sum over stored indices of the
/// coefficient times the alternating determinant of argument coefficients.
RatFunc form_eval(const Form& form, const std::vector<Element>& args);

Form operator+(const Form& a, const Form& b);
Form operator-(const Form& a, const Form& b);
Form operator-(const Form& a);
Form scaled(const Form& a, const RatFunc& f);
bool operator==(const Form& a, const Form& b);
inline bool operator!=(const Form& a, const Form& b) { return !(a == b); }

/// Coefficient-level wedge product over index-set splittings.
Form wedge(const Form& a, const Form& b);

/// Interior product i_z; zero on 0-forms.
Form interior(const Element& z, const Form& form);

/// Lie derivative along z, assembled by evaluating
///   rho(z)(w(t_B)) - sum_k w(t_B1, .., [z, t_Bk], .., t_Bq)
/// on every increasing basis tuple B.
Form lie_derivative(const Element& z, const Form& form);

/// Exterior differential via the coordinate formula
///   (dw)_{a_0<..<a_q} = sum_i (-1)^i rho^k_{a_i} d_k w_{..a_i dropped..}
///                     + sum_{i<j} (-1)^{i+j} L^g_{a_i a_j} w_{g, ..both dropped..}.
Form ext_diff(const Form& form);

bool is_closed(const Form& form);

std::string form_to_string(const Form& form);

/// One structure relation d t^a = -(1/2) L^a_bc t^b ^ t^c, or a coordinate
/// relation d x_i = rho^i_a t^a, with both sides computed independently.
struct MaurerCartanRelation {
  std::string label;
  Form lhs;
  Form rhs;
  bool equal = false;
};

struct MaurerCartanResult {
  std::vector<MaurerCartanRelation> relations;
  bool all_equal = true;
};

MaurerCartanResult maurer_cartan(const AlgebraPtr& algebra);
std::string mc_relation_to_string(const MaurerCartanRelation& rel);

/// F-linear map between algebras over the same ring: phi(t_a) = sum_b
/// matrix[b][a] s_b (rows indexed by the target basis).
struct Morphism {
  AlgebraPtr source;
  AlgebraPtr target;
  Matrix matrix;
};

Morphism make_morphism(AlgebraPtr source, AlgebraPtr target, Matrix matrix);
Element apply(const Morphism& phi, const Element& u);

/// Exact bracket/anchor-compatibility checks on all basis pairs plus
/// seeded randomized bracket checks on general elements.
Report validate_morphism(const Morphism& phi, int samples = 16,
                         std::uint64_t seed = 0);

/// Pull-back of a form over the target along phi:
/// (phi* w)(u_1..u_q) = w(phi(u_1)..phi(u_q)).
Form pullback(const Morphism& phi, const Form& form);

/// Searches for eta with d eta = w by exact linear solve over the
/// constants; restricted to algebras with m = 0.  Free coefficients are
/// pinned to zero, so the antiderivative is canonical.
std::optional<Form> exact_antiderivative(const Form& form);

/// dim ker(d_q) - dim im(d_{q-1}) for q = 0..p; restricted to m = 0.
std::vector<int> cohomology_dimensions(const AlgebraPtr& algebra);

/// Random form with polynomial coefficients of total degree <= 2.
Form random_form(SplitMix64& rng, const AlgebraPtr& algebra, int degree);

/// All strictly increasing `q`-tuples from {0..p-1} in lexicographic order.
std::vector<std::vector<int>> increasing_tuples(int p, int q);

}  // namespace glacalc

#endif
