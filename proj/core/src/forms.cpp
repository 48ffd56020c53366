#include "glacalc/forms.hpp"

#include <algorithm>
#include <utility>

#include "glacalc/expr.hpp"

namespace glacalc {

namespace {

/// Sorts an index tuple in place, returning the permutation sign
/// (0 when an index repeats).
int sort_sign(std::vector<int>& idx) {
  int sign = 1;
  for (size_t i = 1; i < idx.size(); ++i) {
    for (size_t j = i; j > 0 && idx[j - 1] > idx[j]; --j) {
      std::swap(idx[j - 1], idx[j]);
      sign = -sign;
    }
  }
  for (size_t i = 1; i < idx.size(); ++i) {
    if (idx[i - 1] == idx[i]) return 0;
  }
  return sign;
}

void check_same_algebra(const Form& a, const Form& b) {
  if (a.algebra.get() != b.algebra.get()) throw MixedAlgebrasError();
}

void check_same_algebra(const Element& z, const Form& a) {
  if (z.algebra.get() != a.algebra.get()) throw MixedAlgebrasError();
}

/// Determinant by Laplace expansion along the first row; the matrices here
/// are at most p x p.
RatFunc det(const Matrix& mat, int var_count) {
  const size_t n = mat.size();
  if (n == 0) return RatFunc(var_count, 1);
  if (n == 1) return mat[0][0];
  RatFunc acc(var_count);
  for (size_t c = 0; c < n; ++c) {
    if (mat[0][c].is_zero()) continue;
    Matrix minor;
    minor.reserve(n - 1);
    for (size_t r = 1; r < n; ++r) {
      std::vector<RatFunc> row;
      row.reserve(n - 1);
      for (size_t cc = 0; cc < n; ++cc) {
        if (cc != c) row.push_back(mat[r][cc]);
      }
      minor.push_back(std::move(row));
    }
    const RatFunc cofactor = det(minor, var_count);
    if (c % 2 == 0) {
      acc += mat[0][c] * cofactor;
    } else {
      acc -= mat[0][c] * cofactor;
    }
  }
  return acc;
}

}  // namespace

std::vector<std::vector<int>> increasing_tuples(int p, int q) {
  std::vector<std::vector<int>> out;
  if (q < 0 || q > p) return out;
  std::vector<int> cur(q);
  for (int k = 0; k < q; ++k) cur[k] = k;
  while (true) {
    out.push_back(cur);
    if (q == 0) break;
    int k = q - 1;
    while (k >= 0 && cur[k] == p - q + k) --k;
    if (k < 0) break;
    ++cur[k];
    for (int j = k + 1; j < q; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

Form zero_form(AlgebraPtr algebra, int degree) {
  if (!algebra) throw MalformedAlgebraError("form without an algebra");
  if (degree < 0) throw MalformedAlgebraError("negative form degree");
  return Form{std::move(algebra), degree, {}};
}

Form coframe(const AlgebraPtr& algebra, int a) {
  Form out = zero_form(algebra, 1);
  out.coeff[{a}] = RatFunc(algebra->var_count(), 1);
  return out;
}

Form function_form(AlgebraPtr algebra, RatFunc f) {
  Form out = zero_form(std::move(algebra), 0);
  if (f.vars() != out.algebra->var_count()) throw RingMismatchError();
  if (!f.is_zero()) out.coeff[{}] = std::move(f);
  return out;
}

Form make_form(AlgebraPtr algebra, int degree,
               std::map<std::vector<int>, RatFunc> coeff) {
  Form out = zero_form(std::move(algebra), degree);
  const int p = out.algebra->dim();
  for (auto& [idx, c] : coeff) {
    if (static_cast<int>(idx.size()) != degree) {
      throw MalformedAlgebraError("form index arity must match the degree");
    }
    for (size_t k = 0; k < idx.size(); ++k) {
      if (idx[k] < 0 || idx[k] >= p) {
        throw MalformedAlgebraError("form index out of range");
      }
      if (k > 0 && idx[k - 1] >= idx[k]) {
        throw MalformedAlgebraError("form indices must be strictly increasing");
      }
    }
    if (c.vars() != out.algebra->var_count()) throw RingMismatchError();
    if (!c.is_zero()) out.coeff.emplace(idx, std::move(c));
  }
  return out;
}

void form_accumulate(Form& form, std::vector<int> idx, const RatFunc& c) {
  if (c.is_zero()) return;
  const int sign = sort_sign(idx);
  if (sign == 0) return;
  RatFunc value = sign < 0 ? -c : c;
  auto [it, inserted] = form.coeff.emplace(std::move(idx), value);
  if (!inserted) {
    it->second += value;
    if (it->second.is_zero()) form.coeff.erase(it);
  }
}

RatFunc form_coeff(const Form& form, const std::vector<int>& idx) {
  auto it = form.coeff.find(idx);
  if (it != form.coeff.end()) return it->second;
  return RatFunc(form.algebra->var_count());
}

RatFunc form_eval(const Form& form, const std::vector<Element>& args) {
  const int m = form.algebra->var_count();
  if (static_cast<int>(args.size()) != form.degree) {
    throw CalcError("form arity mismatch: degree " + std::to_string(form.degree) +
                    " evaluated on " + std::to_string(args.size()) + " arguments");
  }
  for (const Element& z : args) {
    if (z.algebra.get() != form.algebra.get()) throw MixedAlgebrasError();
  }
  RatFunc acc(m);
  for (const auto& [idx, c] : form.coeff) {
    Matrix mat(idx.size(), std::vector<RatFunc>(idx.size(), RatFunc(m)));
    for (size_t r = 0; r < idx.size(); ++r) {
      for (size_t col = 0; col < idx.size(); ++col) {
        mat[r][col] = args[col].coeff[idx[r]];
      }
    }
    acc += c * det(mat, m);
  }
  return acc;
}

Form operator+(const Form& a, const Form& b) {
  check_same_algebra(a, b);
  if (a.degree != b.degree) {
    throw MalformedAlgebraError("cannot add forms of different degrees");
  }
  Form out = a;
  for (const auto& [idx, c] : b.coeff) form_accumulate(out, idx, c);
  return out;
}

Form operator-(const Form& a) {
  Form out = a;
  for (auto& [idx, c] : out.coeff) c = -c;
  return out;
}

Form operator-(const Form& a, const Form& b) { return a + (-b); }

Form scaled(const Form& a, const RatFunc& f) {
  if (f.vars() != a.algebra->var_count()) throw RingMismatchError();
  Form out = zero_form(a.algebra, a.degree);
  if (f.is_zero()) return out;
  for (const auto& [idx, c] : a.coeff) {
    RatFunc v = c * f;
    if (!v.is_zero()) out.coeff.emplace(idx, std::move(v));
  }
  return out;
}

bool operator==(const Form& a, const Form& b) {
  check_same_algebra(a, b);
  return a.degree == b.degree && a.coeff == b.coeff;
}

Form wedge(const Form& a, const Form& b) {
  check_same_algebra(a, b);
  Form out = zero_form(a.algebra, a.degree + b.degree);
  for (const auto& [ia, ca] : a.coeff) {
    for (const auto& [ib, cb] : b.coeff) {
      std::vector<int> merged = ia;
      merged.insert(merged.end(), ib.begin(), ib.end());
      form_accumulate(out, std::move(merged), ca * cb);
    }
  }
  return out;
}

Form interior(const Element& z, const Form& form) {
  check_same_algebra(z, form);
  if (form.degree == 0) return zero_form(form.algebra, 0);
  Form out = zero_form(form.algebra, form.degree - 1);
  for (const auto& [idx, c] : form.coeff) {
    for (size_t k = 0; k < idx.size(); ++k) {
      if (z.coeff[idx[k]].is_zero()) continue;
      std::vector<int> rest;
      rest.reserve(idx.size() - 1);
      for (size_t j = 0; j < idx.size(); ++j) {
        if (j != k) rest.push_back(idx[j]);
      }
      RatFunc v = z.coeff[idx[k]] * c;
      if (k % 2 == 1) v = -v;
      form_accumulate(out, std::move(rest), v);
    }
  }
  return out;
}

Form lie_derivative(const Element& z, const Form& form) {
  check_same_algebra(z, form);
  const AlgebraPtr& alg = form.algebra;
  const int p = alg->dim();
  const int q = form.degree;
  Form out = zero_form(alg, q);
  for (const auto& tuple : increasing_tuples(p, q)) {
    RatFunc value = anchor_apply(z, form_coeff(form, tuple));
    std::vector<Element> args;
    args.reserve(q);
    for (int idx : tuple) args.push_back(basis_element(alg, idx));
    for (int k = 0; k < q; ++k) {
      Element saved = args[k];
      args[k] = bracket(z, saved);
      value -= form_eval(form, args);
      args[k] = std::move(saved);
    }
    if (!value.is_zero()) out.coeff.emplace(tuple, std::move(value));
  }
  return out;
}

Form ext_diff(const Form& form) {
  const AlgebraPtr& alg = form.algebra;
  const Algebra& A = *alg;
  const int p = A.dim();
  const int m = A.var_count();
  const int q = form.degree;
  Form out = zero_form(alg, q + 1);
  for (const auto& tuple : increasing_tuples(p, q + 1)) {
    RatFunc acc(m);
    for (int i = 0; i <= q; ++i) {
      std::vector<int> rest;
      rest.reserve(q);
      for (int j = 0; j <= q; ++j) {
        if (j != i) rest.push_back(tuple[j]);
      }
      const RatFunc& c = form_coeff(form, rest);
      if (!c.is_zero()) {
        RatFunc part(m);
        for (int k = 0; k < m; ++k) {
          if (A.anchor(tuple[i], k).is_zero()) continue;
          part += A.anchor(tuple[i], k) * c.partial(k + 1);
        }
        if (i % 2 == 1) part = -part;
        acc += part;
      }
    }
    for (int i = 0; i <= q; ++i) {
      for (int j = i + 1; j <= q; ++j) {
        std::vector<int> rest;
        rest.reserve(q - 1);
        for (int k = 0; k <= q; ++k) {
          if (k != i && k != j) rest.push_back(tuple[k]);
        }
        for (int g = 0; g < p; ++g) {
          const RatFunc& Lv = A.structure(g, tuple[i], tuple[j]);
          if (Lv.is_zero()) continue;
          std::vector<int> idx;
          idx.reserve(q);
          idx.push_back(g);
          idx.insert(idx.end(), rest.begin(), rest.end());
          const int sign = sort_sign(idx);
          if (sign == 0) continue;
          const RatFunc& c = form_coeff(form, idx);
          if (c.is_zero()) continue;
          RatFunc part = Lv * c;
          if (sign < 0) part = -part;
          if ((i + j) % 2 == 1) part = -part;
          acc += part;
        }
      }
    }
    if (!acc.is_zero()) out.coeff.emplace(tuple, std::move(acc));
  }
  return out;
}

bool is_closed(const Form& form) { return ext_diff(form).coeff.empty(); }

std::string form_to_string(const Form& form) {
  const auto& vars = form.algebra->vars();
  if (form.coeff.empty()) return "0";
  if (form.degree == 0) return ratfunc_to_string(form.coeff.begin()->second, vars);
  std::string out;
  for (const auto& [idx, c] : form.coeff) {
    std::string basis;
    for (size_t k = 0; k < idx.size(); ++k) {
      if (k > 0) basis += "∧";
      basis += "t^" + std::to_string(idx[k] + 1);
    }
    std::string cs = ratfunc_to_string(c, vars);
    std::string piece;
    if (cs == "1") {
      piece = basis;
    } else if (cs == "-1") {
      piece = "-" + basis;
    } else {
      if (needs_parentheses(cs)) cs = "(" + cs + ")";
      piece = cs + "*" + basis;
    }
    if (out.empty()) {
      out = piece;
    } else if (piece[0] == '-') {
      out += "-" + piece.substr(1);
    } else {
      out += "+" + piece;
    }
  }
  return out;
}

MaurerCartanResult maurer_cartan(const AlgebraPtr& algebra) {
  const Algebra& A = *algebra;
  const int p = A.dim();
  const int m = A.var_count();
  MaurerCartanResult out;
  for (int a = 0; a < p; ++a) {
    MaurerCartanRelation rel;
    rel.label = "d t^" + std::to_string(a + 1);
    rel.lhs = ext_diff(coframe(algebra, a));
    rel.rhs = zero_form(algebra, 2);
    for (int b = 0; b < p; ++b) {
      for (int c = b + 1; c < p; ++c) {
        form_accumulate(rel.rhs, {b, c}, -A.structure(a, b, c));
      }
    }
    rel.equal = rel.lhs == rel.rhs;
    out.all_equal = out.all_equal && rel.equal;
    out.relations.push_back(std::move(rel));
  }
  for (int i = 0; i < m; ++i) {
    MaurerCartanRelation rel;
    rel.label = "d " + A.vars()[i];
    rel.lhs = ext_diff(function_form(algebra, RatFunc::variable(m, i + 1)));
    rel.rhs = zero_form(algebra, 1);
    for (int a = 0; a < p; ++a) {
      form_accumulate(rel.rhs, {a}, A.anchor(a, i));
    }
    rel.equal = rel.lhs == rel.rhs;
    out.all_equal = out.all_equal && rel.equal;
    out.relations.push_back(std::move(rel));
  }
  return out;
}

std::string mc_relation_to_string(const MaurerCartanRelation& rel) {
  if (rel.equal) return rel.label + " = " + form_to_string(rel.lhs);
  return rel.label + ": computed " + form_to_string(rel.lhs) + " expected " +
         form_to_string(rel.rhs);
}

Morphism make_morphism(AlgebraPtr source, AlgebraPtr target, Matrix matrix) {
  if (!source || !target) throw MalformedAlgebraError("morphism without algebras");
  if (source->vars() != target->vars()) throw RingMismatchError();
  if (static_cast<int>(matrix.size()) != target->dim()) {
    throw MalformedAlgebraError("morphism matrix must have one row per target basis element");
  }
  for (const auto& row : matrix) {
    if (static_cast<int>(row.size()) != source->dim()) {
      throw MalformedAlgebraError("morphism matrix row width must match the source dimension");
    }
    for (const RatFunc& entry : row) {
      if (entry.vars() != source->var_count()) throw RingMismatchError();
    }
  }
  return Morphism{std::move(source), std::move(target), std::move(matrix)};
}

Element apply(const Morphism& phi, const Element& u) {
  if (u.algebra.get() != phi.source.get()) throw MixedAlgebrasError();
  const int pt = phi.target->dim();
  const int ps = phi.source->dim();
  std::vector<RatFunc> out(pt, RatFunc(phi.target->var_count()));
  for (int b = 0; b < pt; ++b) {
    for (int a = 0; a < ps; ++a) {
      if (phi.matrix[b][a].is_zero() || u.coeff[a].is_zero()) continue;
      out[b] += phi.matrix[b][a] * u.coeff[a];
    }
  }
  return Element{phi.target, std::move(out)};
}

Report validate_morphism(const Morphism& phi, int samples, std::uint64_t seed) {
  Report rep;
  const int ps = phi.source->dim();
  const int m = phi.source->var_count();

  {
    bool pass = true;
    std::string witness;
    for (int a = 0; a < ps && pass; ++a) {
      for (int b = a + 1; b < ps && pass; ++b) {
        const Element lhs =
            apply(phi, bracket(basis_element(phi.source, a), basis_element(phi.source, b)));
        const Element rhs = bracket(apply(phi, basis_element(phi.source, a)),
                                    apply(phi, basis_element(phi.source, b)));
        if (!(lhs == rhs)) {
          pass = false;
          witness = "basis pair (" + std::to_string(a + 1) + "," + std::to_string(b + 1) +
                    "): " + element_to_string(lhs) + " vs " + element_to_string(rhs);
        }
      }
    }
    rep.add("bracket-basis", pass, witness);
  }

  {
    // The anchors must intertwine: rho_target(phi(t_a)) = rho_source(t_a).
    bool pass = true;
    std::string witness;
    for (int a = 0; a < ps && pass; ++a) {
      for (int i = 0; i < m && pass; ++i) {
        RatFunc lhs(m);
        for (int b = 0; b < phi.target->dim(); ++b) {
          if (phi.matrix[b][a].is_zero() || phi.target->anchor(b, i).is_zero()) continue;
          lhs += phi.matrix[b][a] * phi.target->anchor(b, i);
        }
        if (lhs != phi.source->anchor(a, i)) {
          pass = false;
          witness = "basis element " + std::to_string(a + 1) + " coordinate " +
                    std::to_string(i + 1);
        }
      }
    }
    rep.add("anchor-intertwine", pass, witness);
  }

  {
    bool pass = true;
    std::string witness;
    SplitMix64 rng(seed);
    for (int s = 0; s < samples && pass; ++s) {
      const Element u = random_element(rng, phi.source);
      const Element v = random_element(rng, phi.source);
      const Element lhs = apply(phi, bracket(u, v));
      const Element rhs = bracket(apply(phi, u), apply(phi, v));
      if (!(lhs == rhs)) {
        pass = false;
        witness = "sample " + std::to_string(s);
      }
    }
    rep.add("bracket-random", pass, witness);
  }

  return rep;
}

Form pullback(const Morphism& phi, const Form& form) {
  if (form.algebra.get() != phi.target.get()) throw MixedAlgebrasError();
  const int ps = phi.source->dim();
  Form out = zero_form(phi.source, form.degree);
  for (const auto& tuple : increasing_tuples(ps, form.degree)) {
    std::vector<Element> args;
    args.reserve(tuple.size());
    for (int idx : tuple) args.push_back(apply(phi, basis_element(phi.source, idx)));
    RatFunc value = form_eval(form, args);
    if (!value.is_zero()) out.coeff.emplace(tuple, std::move(value));
  }
  return out;
}

std::optional<Form> exact_antiderivative(const Form& form) {
  const AlgebraPtr& alg = form.algebra;
  if (alg->var_count() != 0) throw ExactnessRestrictedError();
  const int p = alg->dim();
  const int q = form.degree;
  if (q == 0) {
    if (form.coeff.empty()) return zero_form(alg, 0);
    return std::nullopt;
  }
  const auto rows = increasing_tuples(p, q);
  const auto cols = increasing_tuples(p, q - 1);
  std::map<std::vector<int>, int> row_of;
  for (size_t r = 0; r < rows.size(); ++r) row_of.emplace(rows[r], static_cast<int>(r));

  Matrix d_mat(rows.size(), std::vector<RatFunc>(cols.size(), RatFunc(0)));
  for (size_t c = 0; c < cols.size(); ++c) {
    Form basis = zero_form(alg, q - 1);
    basis.coeff[cols[c]] = RatFunc(0, 1);
    const Form image = ext_diff(basis);
    for (const auto& [idx, value] : image.coeff) {
      d_mat[row_of.at(idx)][c] = value;
    }
  }
  std::vector<RatFunc> rhs;
  rhs.reserve(rows.size());
  for (const auto& r : rows) rhs.push_back(form_coeff(form, r));

  const SolveResult sol = solve(d_mat, rhs, 0);
  if (!sol.consistent) return std::nullopt;
  Form eta = zero_form(alg, q - 1);
  for (size_t c = 0; c < cols.size(); ++c) {
    if (!sol.solution[c].is_zero()) eta.coeff.emplace(cols[c], sol.solution[c]);
  }
  return eta;
}

std::vector<int> cohomology_dimensions(const AlgebraPtr& algebra) {
  if (algebra->var_count() != 0) throw ExactnessRestrictedError();
  const int p = algebra->dim();

  // rank of d_q as a map on degree-q coefficient vectors
  std::vector<int> d_rank(p + 1, 0);
  for (int q = 0; q < p; ++q) {
    const auto rows = increasing_tuples(p, q + 1);
    const auto cols = increasing_tuples(p, q);
    std::map<std::vector<int>, int> row_of;
    for (size_t r = 0; r < rows.size(); ++r) row_of.emplace(rows[r], static_cast<int>(r));
    Matrix d_mat(rows.size(), std::vector<RatFunc>(cols.size(), RatFunc(0)));
    for (size_t c = 0; c < cols.size(); ++c) {
      Form basis = zero_form(algebra, q);
      basis.coeff[cols[c]] = RatFunc(0, 1);
      const Form image = ext_diff(basis);
      for (const auto& [idx, value] : image.coeff) {
        d_mat[row_of.at(idx)][c] = value;
      }
    }
    d_rank[q] = rank(d_mat, 0);
  }

  std::vector<int> dims(p + 1, 0);
  for (int q = 0; q <= p; ++q) {
    const int dim_q = static_cast<int>(increasing_tuples(p, q).size());
    const int z = dim_q - d_rank[q];
    const int b = q == 0 ? 0 : d_rank[q - 1];
    dims[q] = z - b;
  }
  return dims;
}

Form random_form(SplitMix64& rng, const AlgebraPtr& algebra, int degree) {
  Form out = zero_form(algebra, degree);
  for (const auto& tuple : increasing_tuples(algebra->dim(), degree)) {
    const Poly c = random_poly(rng, algebra->var_count());
    if (!c.is_zero()) out.coeff.emplace(tuple, RatFunc::from_poly(c));
  }
  return out;
}

}  // namespace glacalc
