#ifndef GLACALC_RATIONAL_HPP
#define GLACALC_RATIONAL_HPP

#include <gmpxx.h>

#include <map>
#include <vector>

#include "glacalc/errors.hpp"

namespace glacalc {

/// Exact arbitrary-precision rational scalar.
using Rational = mpq_class;

/// Exponent vector of a monomial; entry k is the power of variable k+1.
using Exponents = std::vector<int>;

/// Graded lexicographic order: compare total degree first, then exponent
/// vectors lexicographically with earlier variables weighing more.
struct GrlexLess {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

/// Multivariate polynomial over the rationals in a fixed number of variables.
///
/// Terms are kept in a map keyed by exponent vector under graded lex order,
/// with no explicit zero coefficients, so equal polynomials have identical
/// representations.
class Poly {
 public:
  using TermMap = std::map<Exponents, Rational, GrlexLess>;

  /// The zero polynomial in `vars` variables.
  explicit Poly(int vars = 0) : m_vars(vars) {}
  /// A constant polynomial.
  Poly(int vars, const Rational& c);
  /// The polynomial x_i (index 1-based).
  static Poly variable(int vars, int i);
  /// A single term c * x^exps.
  static Poly term(Exponents exps, const Rational& c);

  [[nodiscard]] int vars() const { return m_vars; }
  [[nodiscard]] bool is_zero() const { return m_terms.empty(); }
  [[nodiscard]] bool is_constant() const;
  /// Value of a constant polynomial (0 for the zero polynomial).
  [[nodiscard]] Rational constant_value() const;
  [[nodiscard]] const TermMap& terms() const { return m_terms; }

  /// Adds c * x^exps into this polynomial, erasing the term if it cancels.
  void add_term(const Exponents& exps, const Rational& c);

  Poly operator-() const;
  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  [[nodiscard]] Poly scaled(const Rational& c) const;

  bool operator==(const Poly& o) const;
  bool operator!=(const Poly& o) const { return !(*this == o); }

  /// Total degree; -1 for the zero polynomial.
  [[nodiscard]] int total_degree() const;
  /// Degree in variable i (1-based); -1 for the zero polynomial.
  [[nodiscard]] int degree_in(int i) const;
  /// Leading coefficient under graded lex order; 0 for the zero polynomial.
  [[nodiscard]] Rational leading_coefficient() const;

  /// Partial derivative with respect to variable i (1-based).
  [[nodiscard]] Poly partial(int i) const;

  /// Positive rational c such that (*this)/c has coprime integer
  /// coefficients; 0 for the zero polynomial.
  [[nodiscard]] Rational content() const;

  /// The coefficient of x_i^k, as a polynomial with no x_i left in it.
  [[nodiscard]] Poly coefficient_of(int i, int k) const;
  /// Multiplies by x_i^k.
  [[nodiscard]] Poly shifted(int i, int k) const;

  /// Exact quotient; the divisor must divide without remainder
  /// (violations indicate an engine bug and throw std::logic_error).
  [[nodiscard]] Poly divided_exact(const Poly& d) const;

  /// Polynomial GCD, normalized to coprime integer coefficients with a
  /// positive leading coefficient.  gcd(0, g) = normalized g; any nonzero
  /// constant input makes the GCD 1.
  static Poly gcd(const Poly& f, const Poly& g);

 private:
  int m_vars;
  TermMap m_terms;

  void check_same_ring(const Poly& o) const;
  /// Scales to coprime integer coefficients with positive leading coefficient.
  [[nodiscard]] Poly normalized_primitive() const;
  /// GCD of the x_i-coefficients of f, taken recursively.
  static Poly content_in(const Poly& f, int i);
  /// Pseudo-remainder of a by b with respect to variable i.
  static Poly prem(Poly a, const Poly& b, int i);
};

/// Rational function num/den held in canonical form: gcd(num, den) = 1 and
/// den has coprime integer coefficients with positive leading coefficient
/// under graded lex order (so equal values have identical representations
/// and equality is componentwise).  Zero is 0/1.
class RatFunc {
 public:
  /// The zero function in `vars` variables.
  explicit RatFunc(int vars = 0) : m_num(vars), m_den(vars, 1) {}
  /// A constant.
  RatFunc(int vars, const Rational& c) : m_num(vars, c), m_den(vars, 1) {}
  /// The coordinate function x_i (1-based).
  static RatFunc variable(int vars, int i);
  /// num/den; throws DivisionByZeroError if den is the zero polynomial.
  RatFunc(Poly num, Poly den);
  static RatFunc from_poly(Poly p);

  [[nodiscard]] int vars() const { return m_num.vars(); }
  [[nodiscard]] const Poly& num() const { return m_num; }
  [[nodiscard]] const Poly& den() const { return m_den; }
  [[nodiscard]] bool is_zero() const { return m_num.is_zero(); }
  [[nodiscard]] bool is_constant() const;
  /// Value of a constant (requires is_constant()).
  [[nodiscard]] Rational constant_value() const;

  RatFunc operator-() const;
  RatFunc operator+(const RatFunc& o) const;
  RatFunc operator-(const RatFunc& o) const;
  RatFunc operator*(const RatFunc& o) const;
  /// Throws DivisionByZeroError when o is zero.
  RatFunc operator/(const RatFunc& o) const;
  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }

  /// Componentwise comparison of canonical forms; throws RingMismatchError
  /// when the operands have different variable counts.
  bool operator==(const RatFunc& o) const;
  bool operator!=(const RatFunc& o) const { return !(*this == o); }

  /// Partial derivative with respect to variable i (1-based, 1 <= i <= m),
  /// via the quotient rule.
  [[nodiscard]] RatFunc partial(int i) const;

  /// Substitutes images[k] for variable k+1.  `images` must supply one
  /// function per variable, all over a common ring, which becomes the ring
  /// of the result.  A constant (m = 0) input is lifted to that ring.
  [[nodiscard]] RatFunc substituted(const std::vector<RatFunc>& images) const;

 private:
  Poly m_num, m_den;

  void normalize();
};

/// Lifts a rational function into a ring with the same variables (identity)
/// or lifts a constant into an m-variable ring.
RatFunc lift_constant(const RatFunc& f, int vars);

}  // namespace glacalc

#endif
