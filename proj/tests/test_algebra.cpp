#include <string>
#include <vector>

#include "doctest.h"
#include "glacalc/algebra.hpp"
#include "glacalc/errors.hpp"
#include "glacalc/expr.hpp"
#include "oracle.hpp"

using namespace glacalc;

namespace {

RatFunc rf(const std::string& text, const AlgebraPtr& a) {
  return parse_ratfunc(text, a->vars());
}

Element elem(const AlgebraPtr& a, const std::vector<std::string>& coeff) {
  std::vector<RatFunc> c;
  for (const std::string& s : coeff) c.push_back(rf(s, a));
  return make_element(a, std::move(c));
}

bool all_pass(const Report& rep) { return rep.overall(); }

const CheckRecord* find_check(const Report& rep, const std::string& name) {
  for (const CheckRecord& c : rep.checks)
    if (c.name == name) return &c;
  return nullptr;
}

}  // namespace

TEST_CASE("heisenberg structure and axioms") {
  AlgebraPtr H = heisenberg();
  CHECK(H->dim() == 3);
  CHECK(H->var_count() == 0);
  CHECK(bracket(basis_element(H, 0), basis_element(H, 1)) == basis_element(H, 2));
  CHECK(bracket(basis_element(H, 1), basis_element(H, 0)) ==
        zero_element(H) - basis_element(H, 2));
  CHECK(bracket(basis_element(H, 0), basis_element(H, 2)) == zero_element(H));

  Report rep = validate_axioms(H);
  CHECK(rep.checks.size() == 5);
  CHECK(rep.checks[0].name == "antisymmetry");
  CHECK(rep.checks[1].name == "jacobi-basis");
  CHECK(rep.checks[2].name == "anchor-compatibility");
  CHECK(rep.checks[3].name == "jacobi-random");
  CHECK(rep.checks[4].name == "anchor-morphism-random");
  CHECK(all_pass(rep));
}

TEST_CASE("sl2 and tangent line pass the axiom suite") {
  AlgebraPtr S = sl2();
  CHECK(all_pass(validate_axioms(S)));
  CHECK(bracket(basis_element(S, 1), basis_element(S, 2)) == basis_element(S, 0));

  AlgebraPtr T = tangent_line();
  CHECK(T->dim() == 1);
  CHECK(T->var_count() == 1);
  CHECK(all_pass(validate_axioms(T)));
  // rho(t1) acts as d/dx.
  CHECK(anchor_apply(basis_element(T, 0), rf("x^2", T)) == rf("2*x", T));
}

TEST_CASE("bracket is additive but not F-bilinear") {
  AlgebraPtr A = der_plus_f(1);  // t1 = d/dx, t2 central with rho = 0
  CHECK(all_pass(validate_axioms(A)));

  Element u = elem(A, {"x", "0"});
  Element v = elem(A, {"0", "2*x"});
  // [x d/dx, 2x e] = x * d(2x)/dx * e = 2x e.
  CHECK(bracket(u, v) == elem(A, {"0", "2*x"}));
  CHECK(element_to_string(bracket(u, v)) == "(2*x)*t2");

  // Leibniz residual vanishes, while naive bilinearity fails.
  RatFunc f = rf("x^2", A);
  CHECK(oracle::leibniz_residual(basis_element(A, 0), f, basis_element(A, 1)) ==
        zero_element(A));
  Element t1 = basis_element(A, 0);
  Element t2 = basis_element(A, 1);
  CHECK_FALSE(bracket(t1, scaled(t2, f)) == scaled(bracket(t1, t2), f));
}

TEST_CASE("general-element bracket matches the closed form on derivations") {
  // On the bullet algebra with identity twist the bracket is the commutator
  // of vector fields; check against hand-computed values.
  std::vector<std::string> vars = {"x", "y"};
  Matrix id2 = {{parse_ratfunc("1", vars), parse_ratfunc("0", vars)},
                {parse_ratfunc("0", vars), parse_ratfunc("1", vars)}};
  AlgebraPtr B = bullet(vars, id2);
  CHECK(all_pass(validate_axioms(B)));

  // [x d/dy, y d/dx] = x d/dx - y d/dy.
  Element u = elem(B, {"0", "x"});
  Element v = elem(B, {"y", "0"});
  CHECK(bracket(u, v) == elem(B, {"x", "-y"}));

  // Anchor is a homomorphism into derivations: second-order terms cancel.
  RatFunc f = rf("x^2*y", B);
  RatFunc lhs = anchor_apply(u, anchor_apply(v, f)) -
                anchor_apply(v, anchor_apply(u, f));
  CHECK(lhs == anchor_apply(bracket(u, v), f));
}

TEST_CASE("antisymmetry is enforced at construction") {
  std::vector<RatFunc> L(8, RatFunc(0));
  // p = 2, constants: set L^1_12 = 1 but L^1_21 = 0.
  L[(0 * 2 + 0) * 2 + 1] = RatFunc(0, Rational(1));
  try {
    Algebra::make({}, 2, Matrix{{}, {}}, L);
    FAIL("expected AntisymmetryError");
  } catch (const AntisymmetryError& e) {
    CHECK(std::string(e.what()) == "antisymmetry violated at (1,2,1)");
  }
}

TEST_CASE("malformed tables are rejected") {
  CHECK_THROWS_AS(Algebra::make({}, 2, Matrix{{}}, std::vector<RatFunc>(8, RatFunc(0))),
                  MalformedAlgebraError);
  CHECK_THROWS_AS(Algebra::make({}, 2, Matrix{{}, {}}, std::vector<RatFunc>(7, RatFunc(0))),
                  MalformedAlgebraError);
  CHECK_THROWS_AS(Algebra::make({"x"}, 1, Matrix{{RatFunc(2)}},
                                std::vector<RatFunc>(1, RatFunc(1))),
                  MalformedAlgebraError);
}

TEST_CASE("validate_axioms reports witnesses on corrupted tables") {
  // Heisenberg plus [t1,t3] = -t1 breaks the basis Jacobi identity.
  std::vector<RatFunc> L(27, RatFunc(0));
  auto set = [&](int g, int a, int b, int v) {
    L[(g * 3 + a) * 3 + b] = RatFunc(0, Rational(v));
  };
  set(2, 0, 1, 1);
  set(2, 1, 0, -1);
  set(0, 0, 2, -1);
  set(0, 2, 0, 1);
  AlgebraPtr bad = Algebra::make({}, 3, Matrix{{}, {}, {}}, L);
  Report rep = validate_axioms(bad);
  CHECK_FALSE(all_pass(rep));
  const CheckRecord* jac = find_check(rep, "jacobi-basis");
  REQUIRE(jac != nullptr);
  CHECK_FALSE(jac->pass);
  CHECK(jac->witness.find("(1,2,3)") != std::string::npos);

  // Two commuting basis derivations with [t1,t2] = 0 but rho(t2) = x d/dx
  // break anchor compatibility.
  std::vector<std::string> vx = {"x"};
  Matrix anchor = {{parse_ratfunc("1", vx)}, {parse_ratfunc("x", vx)}};
  AlgebraPtr bad2 = Algebra::make(vx, 2, anchor, std::vector<RatFunc>(8, RatFunc(1)));
  Report rep2 = validate_axioms(bad2);
  const CheckRecord* comp = find_check(rep2, "anchor-compatibility");
  REQUIRE(comp != nullptr);
  CHECK_FALSE(comp->pass);
  CHECK(comp->witness.find("(1,2)") != std::string::npos);
  const CheckRecord* jr = find_check(rep2, "jacobi-random");
  REQUIRE(jr != nullptr);
  CHECK_FALSE(jr->pass);
}

TEST_CASE("diffeomorphism pairs verify composition") {
  std::vector<std::string> vx = {"x"};
  auto p = [&](const std::string& s) { return parse_ratfunc(s, vx); };
  DiffeoPair ok = make_diffeo(vx, {p("2*x")}, {p("x/2")});
  CHECK(ok.forward[0] == p("2*x"));
  CHECK_THROWS_AS(make_diffeo(vx, {p("x^2")}, {p("x")}), NotDiffeomorphismError);
  CHECK_THROWS_AS(make_diffeo(vx, {p("2*x")}, {p("x")}), NotDiffeomorphismError);
}

TEST_CASE("deform conjugates the anchor action") {
  std::vector<std::string> vx = {"x"};
  auto p = [&](const std::string& s) { return parse_ratfunc(s, vx); };

  AlgebraPtr T = tangent_line();
  DiffeoPair h = make_diffeo(vx, {p("2*x")}, {p("x/2")});
  AlgebraPtr D = deform(T, h);
  CHECK(D->anchor(0, 0) == p("2"));

  // The deformed anchor satisfies rho~(t)(f) = (rho(t)(f o h)) o h^{-1}.
  for (const char* s : {"x^2", "x^3+x", "1/(x+1)"}) {
    RatFunc f = p(s);
    RatFunc direct = anchor_apply(basis_element(D, 0), f);
    RatFunc conjugated =
        anchor_apply(basis_element(T, 0), f.substituted(h.forward))
            .substituted(h.inverse);
    CHECK(direct == conjugated);
  }

  // A Mobius chart exercises nontrivial denominators: h = x/(1-x).
  DiffeoPair mob = make_diffeo(vx, {p("x/(1-x)")}, {p("x/(1+x)")});
  AlgebraPtr M = deform(T, mob);
  CHECK(M->anchor(0, 0) == p("(1+x)^2"));

  // Deforming by the inverse pair restores the original tables.
  DiffeoPair back = make_diffeo(vx, mob.inverse, mob.forward);
  CHECK(same_structure(*deform(M, back), *T));
  CHECK(all_pass(validate_axioms(M)));
}

TEST_CASE("deform requires variables and an invertible jacobian") {
  std::vector<std::string> vx = {"x"};
  auto p = [&](const std::string& s) { return parse_ratfunc(s, vx); };
  DiffeoPair h = make_diffeo(vx, {p("2*x")}, {p("x/2")});
  CHECK_THROWS_AS(deform(heisenberg(), h), CalcError);
}

TEST_CASE("pullback_chart composes tables with the forward map") {
  std::vector<std::string> vx = {"x"};
  auto p = [&](const std::string& s) { return parse_ratfunc(s, vx); };
  AlgebraPtr B = bullet(vx, Matrix{{p("x")}});
  AlgebraPtr P = pullback_chart(B, {p("x^2")});
  CHECK(P->anchor(0, 0) == p("x^2"));
  // No inverse is required, so non-invertible maps are fine.
  AlgebraPtr Q = pullback_chart(B, {p("x^2+1")});
  CHECK(Q->anchor(0, 0) == p("x^2+1"));
}

TEST_CASE("element printing") {
  AlgebraPtr A = der_plus_f(1);
  CHECK(element_to_string(elem(A, {"x", "0"})) == "x*t1");
  CHECK(element_to_string(elem(A, {"1", "x+1"})) == "t1+(x+1)*t2");
  CHECK(element_to_string(zero_element(A)) == "0");
  CHECK(element_to_string(elem(A, {"-1", "0"})) == "-t1");
}

TEST_CASE("mixing algebra instances throws") {
  AlgebraPtr H1 = heisenberg();
  AlgebraPtr H2 = heisenberg();
  CHECK_THROWS_AS(bracket(basis_element(H1, 0), basis_element(H2, 1)),
                  MixedAlgebrasError);
}

TEST_CASE("random elements are deterministic for a fixed seed") {
  AlgebraPtr A = der_plus_f(2);
  SplitMix64 r1(42), r2(42);
  for (int i = 0; i < 4; ++i) {
    CHECK(random_element(r1, A) == random_element(r2, A));
  }
}
