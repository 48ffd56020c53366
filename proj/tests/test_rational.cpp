#include <string>
#include <vector>

#include "doctest.h"
#include "glacalc/errors.hpp"
#include "glacalc/expr.hpp"
#include "glacalc/rational.hpp"
#include "glacalc/rng.hpp"

using namespace glacalc;

namespace {

const std::vector<std::string> kX = {"x"};
const std::vector<std::string> kXY = {"x", "y"};

RatFunc rf(const std::string& text, const std::vector<std::string>& vars) {
  return parse_ratfunc(text, vars);
}

}  // namespace

TEST_CASE("polynomial arithmetic and printing") {
  Poly x = Poly::variable(1, 1);
  Poly one(1, Rational(1));
  Poly q = x * x + x.scaled(Rational(2)) + one;  // (x+1)^2
  CHECK(poly_to_string(q, kX) == "x^2+2*x+1");
  CHECK(q == (x + one) * (x + one));
  CHECK(poly_to_string(x - x, kX) == "0");
  CHECK(poly_to_string(-x, kX) == "-x");
  CHECK(poly_to_string(x.scaled(Rational(1, 2)), kX) == "1/2*x");
}

TEST_CASE("graded lex term order puts higher total degree first") {
  Poly x = Poly::variable(2, 1);
  Poly y = Poly::variable(2, 2);
  Poly p = x * y * y + x * x + y + Poly(2, Rational(5));
  CHECK(poly_to_string(p, kXY) == "x*y^2+x^2+y+5");
}

TEST_CASE("polynomial gcd") {
  Poly x = Poly::variable(1, 1);
  Poly one(1, Rational(1));
  Poly a = (x + one) * (x + one) * (x - one);
  Poly b = (x + one) * (x + Poly(1, Rational(2)));
  CHECK(Poly::gcd(a, b) == x + one);

  // Multivariate: gcd(x*y + x, y^2 + 2y + 1) = y + 1.
  Poly x2 = Poly::variable(2, 1);
  Poly y2 = Poly::variable(2, 2);
  Poly one2(2, Rational(1));
  CHECK(Poly::gcd(x2 * y2 + x2, y2 * y2 + y2.scaled(Rational(2)) + one2) ==
        y2 + one2);
  // gcd of coprime inputs is a constant.
  CHECK(Poly::gcd(x2 + one2, y2 + one2) == one2);
}

TEST_CASE("rational functions canonicalize on construction") {
  // 2x^2 / 4x reduces to x/2, carried as numerator content.
  RatFunc a = rf("2*x^2", kX) / rf("4*x", kX);
  CHECK(a == rf("x/2", kX));
  CHECK(ratfunc_to_string(a, kX) == "1/2*x");
  CHECK(a.den() == Poly(1, Rational(1)));

  // (x^2-1)/(x-1) = x+1.
  RatFunc b = rf("(x^2-1)/(x-1)", kX);
  CHECK(ratfunc_to_string(b, kX) == "x+1");

  // Denominator sign is normalized: leading coefficient positive.
  RatFunc c = rf("1/(-x)", kX);
  CHECK(ratfunc_to_string(c, kX) == "(-1)/(x)");
  CHECK(c * rf("-x", kX) == RatFunc(1, Rational(1)));
}

TEST_CASE("field laws on seeded random functions") {
  SplitMix64 rng(7);
  for (int i = 0; i < 12; ++i) {
    RatFunc a = RatFunc(random_poly(rng, 2), random_poly_nonzero(rng, 2));
    RatFunc b = RatFunc(random_poly(rng, 2), random_poly_nonzero(rng, 2));
    RatFunc c = RatFunc(random_poly(rng, 2), random_poly_nonzero(rng, 2));
    CHECK((a + b) * c == a * c + b * c);
    CHECK(a + b == b + a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a - a == RatFunc(2));
    if (!b.is_zero()) CHECK((a / b) * b == a);
    // Canonical form is idempotent under arithmetic detours.
    CHECK((a + b) - b == a);
  }
}

TEST_CASE("division by zero throws") {
  CHECK_THROWS_AS(rf("1/(x-x)", kX), DivisionByZeroError);
  CHECK_THROWS_AS(rf("x", kX) / RatFunc(1), DivisionByZeroError);
}

TEST_CASE("partial derivatives") {
  // d/dx (1/x) = -1/x^2.  Indices into the variable list are 1-based.
  RatFunc inv = rf("1/x", kX);
  CHECK(inv.partial(1) == rf("-1/x^2", kX));
  CHECK(ratfunc_to_string(inv.partial(1), kX) == "(-1)/(x^2)");
  CHECK_THROWS_AS(static_cast<void>(inv.partial(2)), UnknownVariableError);

  // Leibniz rule on random functions.
  SplitMix64 rng(11);
  for (int i = 0; i < 8; ++i) {
    RatFunc f = RatFunc(random_poly(rng, 2), random_poly_nonzero(rng, 2));
    RatFunc g = RatFunc(random_poly(rng, 2), random_poly_nonzero(rng, 2));
    CHECK((f * g).partial(1) == f.partial(1) * g + f * g.partial(1));
    CHECK((f + g).partial(2) == f.partial(2) + g.partial(2));
    // Partials commute.
    CHECK(f.partial(1).partial(2) == f.partial(2).partial(1));
  }
}

TEST_CASE("substitution composes and lifts constants") {
  RatFunc f = rf("x^2", kX);
  CHECK(f.substituted({rf("x+1", kX)}) == rf("x^2+2*x+1", kX));

  // Composition law (f o g) o h = f o (g o h) for one variable.
  RatFunc g = rf("1/(x+2)", kX);
  RatFunc h = rf("x^2-1", kX);
  RatFunc fg = f.substituted({g});
  CHECK(fg.substituted({h}) == f.substituted({g.substituted({h})}));

  // Constants lift into the target ring.
  RatFunc c(0, Rational(3, 4));
  CHECK(lift_constant(c, 2) == RatFunc(2, Rational(3, 4)));
}

TEST_CASE("expression parsing matches construction") {
  CHECK(rf("x^2 - 2*x*y + y^2", kXY) == rf("(x-y)^2", kXY));
  CHECK(rf("-x^2", kX) == -rf("x", kX) * rf("x", kX));
  // Division is left associative; unary minus binds the factor.
  CHECK(rf("4/2/2", kX) == RatFunc(1, Rational(1)));
  CHECK(rf("2^3", kX) == RatFunc(1, Rational(8)));
}

TEST_CASE("parse errors carry position and message") {
  CHECK_THROWS_AS(rf("z + 1", kX), CalcError);
  try {
    parse_ratfunc("x + ", kX, 3);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line == 3);
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }
  CHECK_THROWS_AS(rf("x^(2)", kX), ParseError);  // exponent must be a literal
  CHECK_THROWS_AS(rf("(x", kX), ParseError);
  CHECK_THROWS_AS(rf("", kX), ParseError);
}

TEST_CASE("print/parse round trip") {
  SplitMix64 rng(23);
  for (int i = 0; i < 10; ++i) {
    RatFunc f = RatFunc(random_poly(rng, 2), random_poly_nonzero(rng, 2));
    CHECK(parse_ratfunc(ratfunc_to_string(f, kXY), kXY) == f);
  }
  for (const char* text : {"0", "1", "-1", "x", "1/2*x", "(x+1)/(x^2+1)",
                           "x^2+2*x+1", "(-1)/(x)"}) {
    RatFunc f = rf(text, kX);
    CHECK(ratfunc_to_string(f, kX) == text);
  }
}
