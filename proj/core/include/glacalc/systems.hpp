#ifndef GLACALC_SYSTEMS_HPP
#define GLACALC_SYSTEMS_HPP

#include <string>
#include <vector>

#include "glacalc/forms.hpp"

namespace glacalc {

/// Subspace spanned by independent generators; construction verifies that
/// the generator matrix has full row rank over the fraction field.
struct Subspace {
  AlgebraPtr algebra;
  std::vector<Element> generators;
};

Subspace make_subspace(std::vector<Element> generators);

/// Basis of the 1-forms vanishing on the subspace (p - r of them), from an
/// exact nullspace computation.
std::vector<Form> annihilator(const Subspace& sub);

/// Direct involutivity test: every bracket of generator pairs must solve
/// back into the span of the generators.
struct DirectResult {
  bool involutive = true;
  struct Witness {
    int a, b;         // 0-based generator positions
    Element value;    // the offending bracket
  };
  std::vector<Witness> witnesses;
};

DirectResult involutive_direct(const Subspace& sub);

/// Dual-coframe involutivity certificate.
///
/// The generators are completed to a basis with greedily chosen standard
/// basis vectors, the dual coframe theta^1..theta^p is computed by exact
/// inversion, and each d theta^alpha (alpha beyond the generators) is
/// decomposed over the coframe 2-form basis by evaluation on basis pairs:
/// the generator-pair block A must vanish exactly for involutivity.  When
/// it does, connection forms omega^alpha_gamma are assembled from the
/// mixed and complementary blocks and d theta^alpha = omega^alpha_gamma ^
/// theta^gamma is re-verified term by term; failure of that verification
/// throws, since it can only mean an engine bug.
struct FrobeniusResult {
  bool involutive = true;
  std::vector<Element> completed;  // full basis, generators first
  std::vector<Form> coframe;       // dual 1-forms theta^1..theta^p
  /// dtheta^alpha evaluated on generator pairs (s_b, s_c), b < c; all must
  /// vanish.  Keys are (alpha, b, c), 0-based positions in `completed`.
  std::vector<std::tuple<int, int, int, RatFunc>> obstruction;
  /// Connection forms omega[alpha][gamma] for the complementary indices
  /// (alpha, gamma >= r), empty unless involutive.
  std::vector<std::vector<Form>> connection;
};

FrobeniusResult frobenius_certificate(const Subspace& sub);

/// Exterior ideal given by generator forms and the degree ceiling used for
/// membership solves.
struct IdealSpec {
  AlgebraPtr algebra;
  std::vector<Form> generators;
  int degree_cap = 0;
};

IdealSpec make_ideal(AlgebraPtr algebra, std::vector<Form> generators, int degree_cap);

/// Default ceiling: one above the largest generator degree.
int default_degree_cap(const std::vector<Form>& generators);

/// Exterior-differential-system involutivity test: every generator and
/// every d(generator) vanishes on matching tuples of subspace generators,
/// and each d(generator) solves into the algebraic ideal exactly.
struct EasResult {
  bool involutive = true;
  Report details;
};

EasResult eas_check(const IdealSpec& ideal, const Subspace& sub);

/// Runs all three involutivity procedures on E (with the ideal generated
/// by its annihilator) and checks they agree; disagreement throws
/// TheoremEquivalenceError.
struct CartanResult {
  bool involutive = true;
  DirectResult direct;
  FrobeniusResult frobenius;
  EasResult eas;
};

CartanResult cartan_equivalence(const Subspace& sub);

/// Closedness and exact nondegeneracy of a 2-form.
struct SymplecticResult {
  bool closed = false;
  bool nondegenerate = false;
  int dim = 0;
  RatFunc det;  // determinant of the p x p pairing matrix
  std::string note;
};

SymplecticResult symplectic_check(const Form& omega);

}  // namespace glacalc

#endif
