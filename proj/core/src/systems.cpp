#include "glacalc/systems.hpp"

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>

#include "glacalc/errors.hpp"
#include "glacalc/expr.hpp"
#include "glacalc/linalg.hpp"

namespace glacalc {
namespace {

Matrix generator_matrix(const std::vector<Element>& gens) {
  Matrix mat;
  mat.reserve(gens.size());
  for (const Element& g : gens) mat.push_back(g.coeff);
  return mat;
}

/// The coframe monomial t^{I} with unit coefficient.
Form basis_form(const AlgebraPtr& alg, const std::vector<int>& idx) {
  Form w = zero_form(alg, static_cast<int>(idx.size()));
  form_accumulate(w, idx, RatFunc(alg->var_count(), 1));
  return w;
}

std::string tuple_string(const std::vector<int>& tuple) {
  std::string s = "(";
  for (std::size_t k = 0; k < tuple.size(); ++k) {
    if (k) s += ",";
    s += std::to_string(tuple[k] + 1);
  }
  return s + ")";
}

/// Exact determinant over the fraction field by elimination with pivot
/// tracking.
RatFunc determinant(Matrix a, int var_count) {
  const int n = static_cast<int>(a.size());
  RatFunc det(var_count, 1);
  for (int c = 0; c < n; ++c) {
    int pivot = -1;
    for (int r = c; r < n; ++r) {
      if (!a[r][c].is_zero()) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) return RatFunc(var_count);
    if (pivot != c) {
      std::swap(a[pivot], a[c]);
      det = -det;
    }
    det *= a[c][c];
    for (int r = c + 1; r < n; ++r) {
      if (a[r][c].is_zero()) continue;
      RatFunc factor = a[r][c] / a[c][c];
      for (int cc = c; cc < n; ++cc) a[r][cc] -= factor * a[c][cc];
    }
  }
  return det;
}

}  // namespace

Subspace make_subspace(std::vector<Element> generators) {
  if (generators.empty()) throw DegenerateGeneratorsError();
  AlgebraPtr alg = generators.front().algebra;
  for (const Element& g : generators) {
    if (g.algebra.get() != alg.get()) throw MixedAlgebrasError();
  }
  if (rank(generator_matrix(generators), alg->var_count()) !=
      static_cast<int>(generators.size())) {
    throw DegenerateGeneratorsError();
  }
  return Subspace{std::move(alg), std::move(generators)};
}

std::vector<Form> annihilator(const Subspace& sub) {
  const AlgebraPtr& alg = sub.algebra;
  const int p = alg->dim();
  const auto null_basis =
      nullspace(generator_matrix(sub.generators), alg->var_count());
  std::vector<Form> out;
  out.reserve(null_basis.size());
  for (const auto& vec : null_basis) {
    Form w = zero_form(alg, 1);
    for (int a = 0; a < p; ++a) {
      if (!vec[a].is_zero()) form_accumulate(w, {a}, vec[a]);
    }
    out.push_back(std::move(w));
  }
  return out;
}

DirectResult involutive_direct(const Subspace& sub) {
  DirectResult result;
  const AlgebraPtr& alg = sub.algebra;
  const int p = alg->dim();
  const int m = alg->var_count();
  const int r = static_cast<int>(sub.generators.size());

  // Columns are the generators; a bracket lies in the span exactly when
  // the column system is consistent.
  Matrix cols(p, std::vector<RatFunc>(r, RatFunc(m)));
  for (int j = 0; j < r; ++j) {
    for (int a = 0; a < p; ++a) cols[a][j] = sub.generators[j].coeff[a];
  }
  for (int a = 0; a < r; ++a) {
    for (int b = a + 1; b < r; ++b) {
      Element br = bracket(sub.generators[a], sub.generators[b]);
      if (!solve(cols, br.coeff, m).consistent) {
        result.involutive = false;
        result.witnesses.push_back({a, b, std::move(br)});
      }
    }
  }
  return result;
}

FrobeniusResult frobenius_certificate(const Subspace& sub) {
  FrobeniusResult result;
  const AlgebraPtr& alg = sub.algebra;
  const int p = alg->dim();
  const int m = alg->var_count();
  const int r = static_cast<int>(sub.generators.size());

  // Complete the generators to a basis, greedily appending the standard
  // basis vectors that raise the fraction-field rank.
  result.completed = sub.generators;
  Matrix rows = generator_matrix(sub.generators);
  int current_rank = r;
  for (int e = 0; e < p && current_rank < p; ++e) {
    rows.push_back(basis_element(alg, e).coeff);
    const int new_rank = rank(rows, m);
    if (new_rank > current_rank) {
      current_rank = new_rank;
      result.completed.push_back(basis_element(alg, e));
    } else {
      rows.pop_back();
    }
  }
  if (current_rank != p) throw CertificateError();

  // Dual coframe: with S[j][a] = s_j^a and C = S^{-1}, the 1-form
  // theta^alpha = sum_a C[a][alpha] t^a satisfies theta^alpha(s_j) = delta.
  const std::optional<Matrix> inv = inverted(rows, m);
  if (!inv) throw CertificateError();
  result.coframe.reserve(p);
  for (int alpha = 0; alpha < p; ++alpha) {
    Form theta = zero_form(alg, 1);
    for (int a = 0; a < p; ++a) {
      if (!(*inv)[a][alpha].is_zero()) form_accumulate(theta, {a}, (*inv)[a][alpha]);
    }
    result.coframe.push_back(std::move(theta));
  }

  // Decompose each d theta^alpha (alpha beyond the generators) over the
  // coframe 2-form basis by evaluating on completed-basis pairs; the table
  // is antisymmetric in the pair.
  std::vector<Form> dtheta;
  std::vector<Matrix> table;
  dtheta.reserve(p - r);
  table.reserve(p - r);
  for (int alpha = r; alpha < p; ++alpha) {
    dtheta.push_back(ext_diff(result.coframe[alpha]));
    Matrix t(p, std::vector<RatFunc>(p, RatFunc(m)));
    for (int b = 0; b < p; ++b) {
      for (int c = b + 1; c < p; ++c) {
        RatFunc value =
            form_eval(dtheta.back(), {result.completed[b], result.completed[c]});
        t[c][b] = -value;
        t[b][c] = std::move(value);
      }
    }
    for (int b = 0; b < r; ++b) {
      for (int c = b + 1; c < r; ++c) {
        if (!t[b][c].is_zero()) result.involutive = false;
        result.obstruction.emplace_back(alpha, b, c, t[b][c]);
      }
    }
    table.push_back(std::move(t));
  }
  if (!result.involutive) return result;

  // Assemble the connection forms and re-verify the reconstruction
  // d theta^alpha = sum_gamma omega^alpha_gamma ^ theta^gamma exactly.
  const RatFunc half(m, Rational(1, 2));
  result.connection.assign(p - r, std::vector<Form>());
  for (int alpha = r; alpha < p; ++alpha) {
    const Matrix& t = table[alpha - r];
    for (int gamma = r; gamma < p; ++gamma) {
      Form omega = zero_form(alg, 1);
      for (int b = 0; b < r; ++b) {
        if (!t[b][gamma].is_zero())
          omega = omega + scaled(result.coframe[b], t[b][gamma]);
      }
      for (int beta = r; beta < p; ++beta) {
        if (!t[beta][gamma].is_zero())
          omega = omega + scaled(result.coframe[beta], half * t[beta][gamma]);
      }
      result.connection[alpha - r].push_back(std::move(omega));
    }
    Form rhs = zero_form(alg, 2);
    for (int gamma = r; gamma < p; ++gamma) {
      rhs = rhs + wedge(result.connection[alpha - r][gamma - r], result.coframe[gamma]);
    }
    if (!(rhs == dtheta[alpha - r])) throw CertificateError();
  }
  return result;
}

IdealSpec make_ideal(AlgebraPtr algebra, std::vector<Form> generators,
                     int degree_cap) {
  for (const Form& g : generators) {
    if (g.algebra.get() != algebra.get()) throw MixedAlgebrasError();
  }
  return IdealSpec{std::move(algebra), std::move(generators), degree_cap};
}

int default_degree_cap(const std::vector<Form>& generators) {
  int cap = 1;
  for (const Form& g : generators) cap = std::max(cap, g.degree + 1);
  return cap;
}

EasResult eas_check(const IdealSpec& ideal, const Subspace& sub) {
  if (ideal.algebra.get() != sub.algebra.get()) throw MixedAlgebrasError();
  if (ideal.degree_cap < default_degree_cap(ideal.generators))
    throw DegreeCapError();

  EasResult result;
  const AlgebraPtr& alg = sub.algebra;
  const int p = alg->dim();
  const int m = alg->var_count();
  const int r = static_cast<int>(sub.generators.size());
  const int count = static_cast<int>(ideal.generators.size());

  for (int j = 0; j < count; ++j) {
    const Form& g = ideal.generators[j];
    const Form dg = ext_diff(g);
    const std::string prefix = "generator-" + std::to_string(j + 1);

    // Vanishing on all matching tuples of subspace generators, for the
    // generator itself and for its differential.
    const auto vanishes = [&](const Form& w, const std::string& name) {
      bool pass = true;
      std::string witness;
      for (const auto& tuple : increasing_tuples(r, w.degree)) {
        std::vector<Element> args;
        args.reserve(tuple.size());
        for (int idx : tuple) args.push_back(sub.generators[idx]);
        const RatFunc value = form_eval(w, args);
        if (!value.is_zero()) {
          pass = false;
          witness = "tuple " + tuple_string(tuple) + " value " +
                    ratfunc_to_string(value, alg->vars());
          break;
        }
      }
      result.details.add(name, pass, witness);
      if (!pass) result.involutive = false;
    };
    vanishes(g, prefix + "-vanishing");
    vanishes(dg, prefix + "-differential");

    // Closure: d(generator) must decompose as sum eta_j' ^ g_j' with
    // coefficient forms eta_j' found by one exact linear solve.  The
    // wedge is F-bilinear, so each unknown coefficient contributes the
    // fixed form t^{I} ^ g_j'.
    const int target_degree = g.degree + 1;
    std::vector<Form> column_forms;
    for (int jp = 0; jp < count; ++jp) {
      const int eta_degree = target_degree - ideal.generators[jp].degree;
      if (eta_degree < 0) continue;
      for (const auto& idx : increasing_tuples(p, eta_degree)) {
        column_forms.push_back(wedge(basis_form(alg, idx), ideal.generators[jp]));
      }
    }
    const auto rows = increasing_tuples(p, target_degree);
    Matrix mat(rows.size(), std::vector<RatFunc>(column_forms.size(), RatFunc(m)));
    std::vector<RatFunc> rhs(rows.size(), RatFunc(m));
    for (std::size_t ri = 0; ri < rows.size(); ++ri) {
      for (std::size_t ci = 0; ci < column_forms.size(); ++ci) {
        mat[ri][ci] = form_coeff(column_forms[ci], rows[ri]);
      }
      rhs[ri] = form_coeff(dg, rows[ri]);
    }
    const bool closed_into_ideal = solve(mat, rhs, m).consistent;
    result.details.add(prefix + "-closure", closed_into_ideal,
                       closed_into_ideal ? "" : "no decomposition over the ideal");
    if (!closed_into_ideal) result.involutive = false;
  }
  return result;
}

CartanResult cartan_equivalence(const Subspace& sub) {
  CartanResult result;
  result.direct = involutive_direct(sub);
  result.frobenius = frobenius_certificate(sub);
  std::vector<Form> ann = annihilator(sub);
  const int cap = default_degree_cap(ann);
  result.eas = eas_check(make_ideal(sub.algebra, std::move(ann), cap), sub);
  if (result.direct.involutive != result.frobenius.involutive ||
      result.direct.involutive != result.eas.involutive) {
    throw TheoremEquivalenceError();
  }
  result.involutive = result.direct.involutive;
  return result;
}

SymplecticResult symplectic_check(const Form& omega) {
  if (omega.degree != 2) throw CalcError("symplectic check requires a 2-form");
  const AlgebraPtr& alg = omega.algebra;
  const int p = alg->dim();
  const int m = alg->var_count();

  SymplecticResult result;
  result.dim = p;
  result.closed = is_closed(omega);

  Matrix pairing(p, std::vector<RatFunc>(p, RatFunc(m)));
  for (int a = 0; a < p; ++a) {
    for (int b = a + 1; b < p; ++b) {
      RatFunc value = form_coeff(omega, {a, b});
      pairing[b][a] = -value;
      pairing[a][b] = std::move(value);
    }
  }
  result.det = determinant(std::move(pairing), m);
  result.nondegenerate = !result.det.is_zero();
  if (p % 2 == 1) result.note = "odd dimension: the pairing matrix is always singular";
  return result;
}

}  // namespace glacalc
