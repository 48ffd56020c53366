#include "glacalc/rational.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

namespace glacalc {

bool GrlexLess::operator()(const Exponents& a, const Exponents& b) const {
  int da = 0, db = 0;
  for (int e : a) da += e;
  for (int e : b) db += e;
  if (da != db) return da < db;
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

Poly::Poly(int vars, const Rational& c) : m_vars(vars) {
  if (c != 0) m_terms.emplace(Exponents(vars, 0), c);
}

Poly Poly::variable(int vars, int i) {
  if (i < 1 || i > vars) {
    throw UnknownVariableError("index " + std::to_string(i));
  }
  Exponents e(vars, 0);
  e[i - 1] = 1;
  return term(e, 1);
}

Poly Poly::term(Exponents exps, const Rational& c) {
  Poly p(static_cast<int>(exps.size()));
  p.add_term(exps, c);
  return p;
}

bool Poly::is_constant() const {
  if (m_terms.empty()) return true;
  return m_terms.size() == 1 && m_terms.begin()->first == Exponents(m_vars, 0);
}

Rational Poly::constant_value() const {
  if (m_terms.empty()) return 0;
  auto it = m_terms.find(Exponents(m_vars, 0));
  if (it == m_terms.end() || m_terms.size() != 1) {
    throw std::logic_error("constant_value on a non-constant polynomial");
  }
  return it->second;
}

void Poly::add_term(const Exponents& exps, const Rational& c) {
  if (static_cast<int>(exps.size()) != m_vars) {
    throw RingMismatchError();
  }
  if (c == 0) return;
  auto [it, inserted] = m_terms.emplace(exps, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) m_terms.erase(it);
  }
}

Poly Poly::operator-() const {
  Poly out(m_vars);
  for (const auto& [e, c] : m_terms) out.m_terms.emplace(e, -c);
  return out;
}

Poly Poly::operator+(const Poly& o) const {
  check_same_ring(o);
  Poly out = *this;
  for (const auto& [e, c] : o.m_terms) out.add_term(e, c);
  return out;
}

Poly Poly::operator-(const Poly& o) const {
  check_same_ring(o);
  Poly out = *this;
  for (const auto& [e, c] : o.m_terms) out.add_term(e, -c);
  return out;
}

Poly Poly::operator*(const Poly& o) const {
  check_same_ring(o);
  Poly out(m_vars);
  for (const auto& [ea, ca] : m_terms) {
    for (const auto& [eb, cb] : o.m_terms) {
      Exponents e(m_vars);
      for (int k = 0; k < m_vars; ++k) e[k] = ea[k] + eb[k];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

Poly Poly::scaled(const Rational& c) const {
  if (c == 0) return Poly(m_vars);
  Poly out(m_vars);
  for (const auto& [e, v] : m_terms) out.m_terms.emplace(e, v * c);
  return out;
}

bool Poly::operator==(const Poly& o) const {
  return m_vars == o.m_vars && m_terms == o.m_terms;
}

int Poly::total_degree() const {
  if (m_terms.empty()) return -1;
  const Exponents& e = m_terms.rbegin()->first;
  int d = 0;
  for (int k : e) d += k;
  return d;
}

int Poly::degree_in(int i) const {
  if (m_terms.empty()) return -1;
  int d = 0;
  for (const auto& [e, c] : m_terms) d = std::max(d, e[i - 1]);
  return d;
}

Rational Poly::leading_coefficient() const {
  if (m_terms.empty()) return 0;
  return m_terms.rbegin()->second;
}

Poly Poly::partial(int i) const {
  if (i < 1 || i > m_vars) {
    throw UnknownVariableError("derivation index " + std::to_string(i));
  }
  Poly out(m_vars);
  for (const auto& [e, c] : m_terms) {
    if (e[i - 1] == 0) continue;
    Exponents d = e;
    d[i - 1] -= 1;
    out.add_term(d, c * e[i - 1]);
  }
  return out;
}

Rational Poly::content() const {
  if (m_terms.empty()) return 0;
  mpz_class g = 0, l = 1;
  for (const auto& [e, c] : m_terms) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_num().get_mpz_t());
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den().get_mpz_t());
  }
  Rational out(g, l);
  out.canonicalize();
  return out;
}

Poly Poly::coefficient_of(int i, int k) const {
  Poly out(m_vars);
  for (const auto& [e, c] : m_terms) {
    if (e[i - 1] != k) continue;
    Exponents d = e;
    d[i - 1] = 0;
    out.add_term(d, c);
  }
  return out;
}

Poly Poly::shifted(int i, int k) const {
  Poly out(m_vars);
  for (const auto& [e, c] : m_terms) {
    Exponents d = e;
    d[i - 1] += k;
    out.m_terms.emplace(d, c);
  }
  return out;
}

Poly Poly::divided_exact(const Poly& d) const {
  check_same_ring(d);
  if (d.is_zero()) throw std::logic_error("exact division by zero polynomial");
  Poly q(m_vars);
  Poly r = *this;
  const auto& dlead = *d.m_terms.rbegin();
  while (!r.is_zero()) {
    const auto& rlead = *r.m_terms.rbegin();
    Exponents e(m_vars);
    for (int k = 0; k < m_vars; ++k) {
      e[k] = rlead.first[k] - dlead.first[k];
      if (e[k] < 0) throw std::logic_error("inexact polynomial division");
    }
    Rational c = rlead.second / dlead.second;
    q.add_term(e, c);
    r = r - d * term(e, c);
  }
  return q;
}

void Poly::check_same_ring(const Poly& o) const {
  if (m_vars != o.m_vars) throw RingMismatchError();
}

Poly Poly::normalized_primitive() const {
  if (is_zero()) return *this;
  Rational c = content();
  if (leading_coefficient() < 0) c = -c;
  return scaled(1 / c);
}

Poly Poly::content_in(const Poly& f, int i) {
  Poly acc(f.m_vars);
  int top = f.degree_in(i);
  for (int k = 0; k <= top; ++k) {
    Poly ck = f.coefficient_of(i, k);
    if (ck.is_zero()) continue;
    acc = gcd(acc, ck);
    if (acc.is_constant() && !acc.is_zero()) break;
  }
  return acc;
}

Poly Poly::prem(Poly a, const Poly& b, int i) {
  const int db = b.degree_in(i);
  const Poly lb = b.coefficient_of(i, db);
  while (!a.is_zero() && a.degree_in(i) >= db) {
    const int da = a.degree_in(i);
    const Poly la = a.coefficient_of(i, da);
    a = lb * a - (la * b).shifted(i, da - db);
  }
  return a;
}

Poly Poly::gcd(const Poly& f, const Poly& g) {
  if (f.is_zero()) return g.normalized_primitive();
  if (g.is_zero()) return f.normalized_primitive();
  if (f.is_constant() || g.is_constant()) return Poly(f.m_vars, 1);
  f.check_same_ring(g);

  // Recurse on the highest variable present; its coefficients only involve
  // lower variables, so the content recursion terminates.
  int v = 0;
  for (int i = f.m_vars; i >= 1; --i) {
    if (f.degree_in(i) > 0 || g.degree_in(i) > 0) {
      v = i;
      break;
    }
  }

  const Poly cf = content_in(f, v);
  const Poly cg = content_in(g, v);
  const Poly c = gcd(cf, cg);
  // Keep the working pair primitive in both senses: divide out the
  // polynomial content in v and the scalar content.  Without the scalar
  // normalization the remainder sequence degenerates into the pure
  // pseudo-remainder sequence, whose coefficients grow exponentially.
  Poly a = f.divided_exact(cf).normalized_primitive();
  Poly b = g.divided_exact(cg).normalized_primitive();
  if (a.degree_in(v) < b.degree_in(v)) std::swap(a, b);

  // Primitive pseudo-remainder sequence on the primitive parts.
  while (true) {
    if (b.degree_in(v) == 0) {
      // A primitive pair with one member free of v is coprime in v.
      return c.normalized_primitive();
    }
    Poly r = prem(a, b, v);
    if (r.is_zero()) {
      return (c * b).normalized_primitive();
    }
    a = std::move(b);
    b = r.divided_exact(content_in(r, v)).normalized_primitive();
  }
}

RatFunc RatFunc::variable(int vars, int i) {
  return from_poly(Poly::variable(vars, i));
}

RatFunc::RatFunc(Poly num, Poly den)
    : m_num(std::move(num)), m_den(std::move(den)) {
  if (m_num.vars() != m_den.vars()) throw RingMismatchError();
  if (m_den.is_zero()) throw DivisionByZeroError();
  normalize();
}

RatFunc RatFunc::from_poly(Poly p) {
  RatFunc out(p.vars());
  out.m_num = std::move(p);
  out.normalize();
  return out;
}

bool RatFunc::is_constant() const {
  return m_num.is_constant() && m_den.is_constant();
}

Rational RatFunc::constant_value() const {
  return m_num.constant_value() / m_den.constant_value();
}

void RatFunc::normalize() {
  if (m_num.is_zero()) {
    m_den = Poly(vars(), 1);
    return;
  }
  const Poly g = Poly::gcd(m_num, m_den);
  if (!g.is_constant()) {
    m_num = m_num.divided_exact(g);
    m_den = m_den.divided_exact(g);
  }
  Rational u = m_den.content();
  if (m_den.leading_coefficient() < 0) u = -u;
  if (u != 1) {
    m_num = m_num.scaled(1 / u);
    m_den = m_den.scaled(1 / u);
  }
}

RatFunc RatFunc::operator-() const {
  RatFunc out = *this;
  out.m_num = -out.m_num;
  return out;
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
  if (vars() != o.vars()) throw RingMismatchError();
  return RatFunc(m_num * o.m_den + o.m_num * m_den, m_den * o.m_den);
}

RatFunc RatFunc::operator-(const RatFunc& o) const {
  if (vars() != o.vars()) throw RingMismatchError();
  return RatFunc(m_num * o.m_den - o.m_num * m_den, m_den * o.m_den);
}

RatFunc RatFunc::operator*(const RatFunc& o) const {
  if (vars() != o.vars()) throw RingMismatchError();
  return RatFunc(m_num * o.m_num, m_den * o.m_den);
}

RatFunc RatFunc::operator/(const RatFunc& o) const {
  if (vars() != o.vars()) throw RingMismatchError();
  if (o.is_zero()) throw DivisionByZeroError();
  return RatFunc(m_num * o.m_den, m_den * o.m_num);
}

bool RatFunc::operator==(const RatFunc& o) const {
  if (vars() != o.vars()) throw RingMismatchError();
  return m_num == o.m_num && m_den == o.m_den;
}

RatFunc RatFunc::partial(int i) const {
  if (i < 1 || i > vars()) {
    throw UnknownVariableError("derivation index " + std::to_string(i));
  }
  return RatFunc(m_num.partial(i) * m_den - m_num * m_den.partial(i),
                 m_den * m_den);
}

namespace {

/// Evaluates a polynomial at rational-function images of its variables.
RatFunc substitute_poly(const Poly& p, const std::vector<RatFunc>& images,
                        int out_vars) {
  // Powers of each image are cached up to the degree actually used.
  std::vector<std::vector<RatFunc>> powers(images.size());
  for (size_t k = 0; k < images.size(); ++k) {
    powers[k].push_back(RatFunc(out_vars, 1));
  }
  RatFunc acc(out_vars);
  for (const auto& [e, c] : p.terms()) {
    RatFunc t(out_vars, c);
    for (size_t k = 0; k < images.size(); ++k) {
      auto& pk = powers[k];
      while (static_cast<int>(pk.size()) <= e[k]) {
        pk.push_back(pk.back() * images[k]);
      }
      if (e[k] > 0) t *= pk[e[k]];
    }
    acc += t;
  }
  return acc;
}

}  // namespace

RatFunc RatFunc::substituted(const std::vector<RatFunc>& images) const {
  if (static_cast<int>(images.size()) != vars()) throw RingMismatchError();
  if (vars() == 0) return *this;
  const int out_vars = images.front().vars();
  for (const RatFunc& im : images) {
    if (im.vars() != out_vars) throw RingMismatchError();
  }
  const RatFunc n = substitute_poly(m_num, images, out_vars);
  const RatFunc d = substitute_poly(m_den, images, out_vars);
  return n / d;  // throws DivisionByZeroError when the denominator collapses
}

RatFunc lift_constant(const RatFunc& f, int vars) {
  if (f.vars() == vars) return f;
  if (f.vars() != 0) throw RingMismatchError();
  Poly n(vars), d(vars);
  for (const auto& [e, c] : f.num().terms()) n.add_term(Exponents(vars, 0), c);
  for (const auto& [e, c] : f.den().terms()) d.add_term(Exponents(vars, 0), c);
  return RatFunc(std::move(n), std::move(d));
}

}  // namespace glacalc
