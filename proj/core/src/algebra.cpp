#include "glacalc/algebra.hpp"

#include <utility>

#include "glacalc/expr.hpp"

namespace glacalc {

Algebra::Algebra(std::vector<std::string> vars, int p, Matrix anchor,
                 std::vector<RatFunc> structure)
    : m_vars(std::move(vars)),
      m_dim(p),
      m_anchor(std::move(anchor)),
      m_structure(std::move(structure)) {}

AlgebraPtr Algebra::make(std::vector<std::string> vars, int p, Matrix anchor,
                         std::vector<RatFunc> structure) {
  const int m = static_cast<int>(vars.size());
  if (p < 1) {
    throw MalformedAlgebraError("dimension must be at least 1");
  }
  if (static_cast<int>(anchor.size()) != p) {
    throw MalformedAlgebraError("anchor table must have one row per basis element");
  }
  for (const auto& row : anchor) {
    if (static_cast<int>(row.size()) != m) {
      throw MalformedAlgebraError("anchor row width must match the variable count");
    }
    for (const RatFunc& entry : row) {
      if (entry.vars() != m) {
        throw MalformedAlgebraError("anchor entry over the wrong ring");
      }
    }
  }
  if (static_cast<int>(structure.size()) != p * p * p) {
    throw MalformedAlgebraError("structure table must hold p^3 entries");
  }
  for (const RatFunc& entry : structure) {
    if (entry.vars() != m) {
      throw MalformedAlgebraError("structure entry over the wrong ring");
    }
  }
  const auto L = [&](int g, int a, int b) -> const RatFunc& {
    return structure[(g * p + a) * p + b];
  };
  for (int a = 0; a < p; ++a) {
    for (int b = a; b < p; ++b) {
      for (int g = 0; g < p; ++g) {
        if (!(L(g, a, b) + L(g, b, a)).is_zero()) {
          throw AntisymmetryError(a + 1, b + 1, g + 1);
        }
      }
    }
  }
  return AlgebraPtr(
      new Algebra(std::move(vars), p, std::move(anchor), std::move(structure)));
}

bool same_structure(const Algebra& a, const Algebra& b) {
  if (a.vars() != b.vars() || a.dim() != b.dim()) return false;
  for (int e = 0; e < a.dim(); ++e) {
    for (int i = 0; i < a.var_count(); ++i) {
      if (a.anchor(e, i) != b.anchor(e, i)) return false;
    }
  }
  for (int g = 0; g < a.dim(); ++g) {
    for (int x = 0; x < a.dim(); ++x) {
      for (int y = 0; y < a.dim(); ++y) {
        if (a.structure(g, x, y) != b.structure(g, x, y)) return false;
      }
    }
  }
  return true;
}

Element make_element(AlgebraPtr algebra, std::vector<RatFunc> coeff) {
  if (!algebra) throw MalformedAlgebraError("element without an algebra");
  if (static_cast<int>(coeff.size()) != algebra->dim()) {
    throw MalformedAlgebraError("element coefficient count must match the dimension");
  }
  for (const RatFunc& c : coeff) {
    if (c.vars() != algebra->var_count()) throw RingMismatchError();
  }
  return Element{std::move(algebra), std::move(coeff)};
}

Element basis_element(const AlgebraPtr& algebra, int a) {
  std::vector<RatFunc> coeff(algebra->dim(), RatFunc(algebra->var_count()));
  coeff[a] = RatFunc(algebra->var_count(), 1);
  return Element{algebra, std::move(coeff)};
}

Element zero_element(const AlgebraPtr& algebra) {
  return Element{algebra,
                 std::vector<RatFunc>(algebra->dim(), RatFunc(algebra->var_count()))};
}

void check_same_algebra(const Element& u, const Element& v) {
  if (u.algebra.get() != v.algebra.get()) throw MixedAlgebrasError();
}

Element operator+(const Element& u, const Element& v) {
  check_same_algebra(u, v);
  Element out = u;
  for (size_t k = 0; k < out.coeff.size(); ++k) out.coeff[k] += v.coeff[k];
  return out;
}

Element operator-(const Element& u, const Element& v) {
  check_same_algebra(u, v);
  Element out = u;
  for (size_t k = 0; k < out.coeff.size(); ++k) out.coeff[k] -= v.coeff[k];
  return out;
}

Element scaled(const Element& u, const RatFunc& f) {
  if (f.vars() != u.algebra->var_count()) throw RingMismatchError();
  Element out = u;
  for (RatFunc& c : out.coeff) c *= f;
  return out;
}

bool operator==(const Element& u, const Element& v) {
  check_same_algebra(u, v);
  for (size_t k = 0; k < u.coeff.size(); ++k) {
    if (u.coeff[k] != v.coeff[k]) return false;
  }
  return true;
}

std::string element_to_string(const Element& u) {
  std::string out;
  for (size_t k = 0; k < u.coeff.size(); ++k) {
    if (u.coeff[k].is_zero()) continue;
    std::string cs = ratfunc_to_string(u.coeff[k], u.algebra->vars());
    const std::string label = "t" + std::to_string(k + 1);
    std::string piece;
    if (cs == "1") {
      piece = label;
    } else if (cs == "-1") {
      piece = "-" + label;
    } else {
      if (needs_parentheses(cs)) cs = "(" + cs + ")";
      piece = cs + "*" + label;
    }
    if (out.empty()) {
      out = piece;
    } else if (piece[0] == '-') {
      out += "-" + piece.substr(1);
    } else {
      out += "+" + piece;
    }
  }
  return out.empty() ? "0" : out;
}

RatFunc anchor_apply(const Element& u, const RatFunc& f) {
  const Algebra& A = *u.algebra;
  if (f.vars() != A.var_count()) throw RingMismatchError();
  RatFunc acc(A.var_count());
  for (int a = 0; a < A.dim(); ++a) {
    if (u.coeff[a].is_zero()) continue;
    for (int i = 0; i < A.var_count(); ++i) {
      if (A.anchor(a, i).is_zero()) continue;
      acc += u.coeff[a] * A.anchor(a, i) * f.partial(i + 1);
    }
  }
  return acc;
}

Element bracket(const Element& u, const Element& v) {
  check_same_algebra(u, v);
  const Algebra& A = *u.algebra;
  const int p = A.dim();
  std::vector<RatFunc> w(p, RatFunc(A.var_count()));
  for (int g = 0; g < p; ++g) {
    for (int a = 0; a < p; ++a) {
      if (u.coeff[a].is_zero()) continue;
      for (int b = 0; b < p; ++b) {
        if (v.coeff[b].is_zero() || A.structure(g, a, b).is_zero()) continue;
        w[g] += u.coeff[a] * v.coeff[b] * A.structure(g, a, b);
      }
    }
    w[g] += anchor_apply(u, v.coeff[g]) - anchor_apply(v, u.coeff[g]);
  }
  return Element{u.algebra, std::move(w)};
}

Element random_element(SplitMix64& rng, const AlgebraPtr& algebra) {
  std::vector<RatFunc> coeff;
  coeff.reserve(algebra->dim());
  for (int k = 0; k < algebra->dim(); ++k) {
    coeff.push_back(RatFunc::from_poly(random_poly(rng, algebra->var_count())));
  }
  return Element{algebra, std::move(coeff)};
}

Report validate_axioms(const AlgebraPtr& algebra, int samples, std::uint64_t seed) {
  const Algebra& A = *algebra;
  const int p = A.dim();
  const int m = A.var_count();
  Report rep;

  {
    bool pass = true;
    std::string witness;
    for (int a = 0; a < p && pass; ++a) {
      for (int b = a; b < p && pass; ++b) {
        for (int g = 0; g < p && pass; ++g) {
          if (!(A.structure(g, a, b) + A.structure(g, b, a)).is_zero()) {
            pass = false;
            witness = "(" + std::to_string(a + 1) + "," + std::to_string(b + 1) + "," +
                      std::to_string(g + 1) + ")";
          }
        }
      }
    }
    rep.add("antisymmetry", pass, witness);
  }

  {
    // Basis Jacobi identity: distinct triples suffice because repeated
    // arguments vanish by antisymmetry and additivity.
    bool pass = true;
    std::string witness;
    const auto cyc_term = [&](int x, int y, int z, int mu) {
      RatFunc acc(m);
      for (int th = 0; th < p; ++th) {
        if (A.structure(th, y, z).is_zero() || A.structure(mu, x, th).is_zero()) continue;
        acc += A.structure(th, y, z) * A.structure(mu, x, th);
      }
      for (int i = 0; i < m; ++i) {
        if (A.anchor(x, i).is_zero()) continue;
        acc += A.anchor(x, i) * A.structure(mu, y, z).partial(i + 1);
      }
      return acc;
    };
    for (int a = 0; a < p && pass; ++a) {
      for (int b = a + 1; b < p && pass; ++b) {
        for (int c = b + 1; c < p && pass; ++c) {
          for (int mu = 0; mu < p && pass; ++mu) {
            const RatFunc J =
                cyc_term(a, b, c, mu) + cyc_term(c, a, b, mu) + cyc_term(b, c, a, mu);
            if (!J.is_zero()) {
              pass = false;
              witness = "(" + std::to_string(a + 1) + "," + std::to_string(b + 1) + "," +
                        std::to_string(c + 1) + ") component " + std::to_string(mu + 1) +
                        " residue " + ratfunc_to_string(J, A.vars());
            }
          }
        }
      }
    }
    rep.add("jacobi-basis", pass, witness);
  }

  {
    // Anchor compatibility: L^g_ab rho^k_g = rho^i_a d_i rho^k_b - rho^j_b d_j rho^k_a.
    bool pass = true;
    std::string witness;
    for (int a = 0; a < p && pass; ++a) {
      for (int b = a + 1; b < p && pass; ++b) {
        for (int k = 0; k < m && pass; ++k) {
          RatFunc lhs(m);
          for (int g = 0; g < p; ++g) {
            if (A.structure(g, a, b).is_zero() || A.anchor(g, k).is_zero()) continue;
            lhs += A.structure(g, a, b) * A.anchor(g, k);
          }
          RatFunc rhs(m);
          for (int i = 0; i < m; ++i) {
            if (!A.anchor(a, i).is_zero()) {
              rhs += A.anchor(a, i) * A.anchor(b, k).partial(i + 1);
            }
            if (!A.anchor(b, i).is_zero()) {
              rhs -= A.anchor(b, i) * A.anchor(a, k).partial(i + 1);
            }
          }
          if (lhs != rhs) {
            pass = false;
            witness = "(" + std::to_string(a + 1) + "," + std::to_string(b + 1) +
                      ") coordinate " + std::to_string(k + 1) + " residue " +
                      ratfunc_to_string(lhs - rhs, A.vars());
          }
        }
      }
    }
    rep.add("anchor-compatibility", pass, witness);
  }

  SplitMix64 rng(seed);
  {
    bool pass = true;
    std::string witness;
    for (int s = 0; s < samples && pass; ++s) {
      const Element u = random_element(rng, algebra);
      const Element v = random_element(rng, algebra);
      const Element w = random_element(rng, algebra);
      const Element J = bracket(u, bracket(v, w)) + bracket(v, bracket(w, u)) +
                        bracket(w, bracket(u, v));
      if (!(J == zero_element(algebra))) {
        pass = false;
        witness = "sample " + std::to_string(s) + " residue " + element_to_string(J);
      }
    }
    rep.add("jacobi-random", pass, witness);
  }

  {
    bool pass = true;
    std::string witness;
    for (int s = 0; s < samples && pass; ++s) {
      const Element u = random_element(rng, algebra);
      const Element v = random_element(rng, algebra);
      const RatFunc f = RatFunc::from_poly(random_poly(rng, m));
      const RatFunc lhs = anchor_apply(bracket(u, v), f);
      const RatFunc rhs =
          anchor_apply(u, anchor_apply(v, f)) - anchor_apply(v, anchor_apply(u, f));
      if (lhs != rhs) {
        pass = false;
        witness = "sample " + std::to_string(s) + " residue " +
                  ratfunc_to_string(lhs - rhs, A.vars());
      }
    }
    rep.add("anchor-morphism-random", pass, witness);
  }

  return rep;
}

DiffeoPair make_diffeo(std::vector<std::string> vars, std::vector<RatFunc> forward,
                       std::vector<RatFunc> inverse) {
  const int m = static_cast<int>(vars.size());
  if (m == 0) throw NoVariablesError();
  if (static_cast<int>(forward.size()) != m || static_cast<int>(inverse.size()) != m) {
    throw NotDiffeomorphismError();
  }
  for (const RatFunc& f : forward) {
    if (f.vars() != m) throw RingMismatchError();
  }
  for (const RatFunc& f : inverse) {
    if (f.vars() != m) throw RingMismatchError();
  }
  for (int k = 0; k < m; ++k) {
    const RatFunc xk = RatFunc::variable(m, k + 1);
    if (forward[k].substituted(inverse) != xk || inverse[k].substituted(forward) != xk) {
      throw NotDiffeomorphismError();
    }
  }
  return DiffeoPair{std::move(vars), std::move(forward), std::move(inverse)};
}

namespace {

std::vector<RatFunc> zero_structure(int m, int p) {
  return std::vector<RatFunc>(p * p * p, RatFunc(m));
}

std::vector<RatFunc> copy_structure(const Algebra& A) {
  const int p = A.dim();
  std::vector<RatFunc> out;
  out.reserve(p * p * p);
  for (int g = 0; g < p; ++g) {
    for (int a = 0; a < p; ++a) {
      for (int b = 0; b < p; ++b) out.push_back(A.structure(g, a, b));
    }
  }
  return out;
}

std::vector<std::string> numbered_vars(int m) {
  if (m == 1) return {"x"};
  std::vector<std::string> vars;
  vars.reserve(m);
  for (int i = 1; i <= m; ++i) vars.push_back("x" + std::to_string(i));
  return vars;
}

}  // namespace

AlgebraPtr heisenberg() {
  auto structure = zero_structure(0, 3);
  structure[(2 * 3 + 0) * 3 + 1] = RatFunc(0, 1);   // L^3_12 = 1
  structure[(2 * 3 + 1) * 3 + 0] = RatFunc(0, -1);  // L^3_21 = -1
  return Algebra::make({}, 3, Matrix(3), std::move(structure));
}

AlgebraPtr sl2() {
  auto structure = zero_structure(0, 3);
  const auto set = [&](int g, int a, int b, int value) {
    structure[(g * 3 + a) * 3 + b] = RatFunc(0, value);
    structure[(g * 3 + b) * 3 + a] = RatFunc(0, -value);
  };
  set(1, 0, 1, 2);   // [t_1, t_2] = 2 t_2
  set(2, 0, 2, -2);  // [t_1, t_3] = -2 t_3
  set(0, 1, 2, 1);   // [t_2, t_3] = t_1
  return Algebra::make({}, 3, Matrix(3), std::move(structure));
}

AlgebraPtr tangent_line() {
  Matrix anchor{{RatFunc(1, 1)}};
  return Algebra::make({"x"}, 1, std::move(anchor), zero_structure(1, 1));
}

AlgebraPtr der_plus_f(int m) {
  if (m < 0) throw MalformedAlgebraError("negative variable count");
  const int p = m + 1;
  Matrix anchor(p, std::vector<RatFunc>(m, RatFunc(m)));
  for (int i = 0; i < m; ++i) anchor[i][i] = RatFunc(m, 1);
  return Algebra::make(numbered_vars(m), p, std::move(anchor), zero_structure(m, p));
}

AlgebraPtr bullet(std::vector<std::string> vars, Matrix rho_self) {
  const int m = static_cast<int>(vars.size());
  if (m == 0) throw NoVariablesError();
  return Algebra::make(std::move(vars), m, std::move(rho_self), zero_structure(m, m));
}

AlgebraPtr deform(const AlgebraPtr& base, const DiffeoPair& h) {
  const Algebra& A = *base;
  const int m = A.var_count();
  const int p = A.dim();
  if (m == 0) throw NoVariablesError();
  if (h.vars != A.vars()) throw RingMismatchError();

  Matrix jac(m, std::vector<RatFunc>(m, RatFunc(m)));
  for (int k = 0; k < m; ++k) {
    for (int i = 0; i < m; ++i) jac[k][i] = h.forward[k].partial(i + 1);
  }
  if (rank(jac, m) != m) throw SingularDeformationError();

  Matrix anchor(p, std::vector<RatFunc>(m, RatFunc(m)));
  for (int a = 0; a < p; ++a) {
    for (int k = 0; k < m; ++k) {
      RatFunc acc(m);
      for (int i = 0; i < m; ++i) {
        if (A.anchor(a, i).is_zero() || jac[k][i].is_zero()) continue;
        acc += A.anchor(a, i) * jac[k][i];
      }
      anchor[a][k] = acc.substituted(h.inverse);
    }
  }
  return Algebra::make(A.vars(), p, std::move(anchor), copy_structure(A));
}

AlgebraPtr pullback_chart(const AlgebraPtr& base,
                          const std::vector<RatFunc>& forward) {
  const Algebra& A = *base;
  const int m = A.var_count();
  const int p = A.dim();
  if (static_cast<int>(forward.size()) != m) throw RingMismatchError();
  for (const RatFunc& f : forward) {
    if (f.vars() != m) throw RingMismatchError();
  }
  Matrix anchor(p, std::vector<RatFunc>(m, RatFunc(m)));
  for (int a = 0; a < p; ++a) {
    for (int i = 0; i < m; ++i) anchor[a][i] = A.anchor(a, i).substituted(forward);
  }
  std::vector<RatFunc> structure = copy_structure(A);
  for (RatFunc& entry : structure) entry = entry.substituted(forward);
  return Algebra::make(A.vars(), p, std::move(anchor), std::move(structure));
}

}  // namespace glacalc
