#include "glacalc/rng.hpp"

namespace glacalc {

namespace {

/// Enumerates exponent vectors of total degree <= 2 in a fixed order.
void degree_two_exponents(int vars, std::vector<Exponents>& out) {
  out.emplace_back(vars, 0);
  for (int i = 0; i < vars; ++i) {
    Exponents e(vars, 0);
    e[i] = 1;
    out.push_back(e);
  }
  for (int i = 0; i < vars; ++i) {
    for (int j = i; j < vars; ++j) {
      Exponents e(vars, 0);
      e[i] += 1;
      e[j] += 1;
      out.push_back(e);
    }
  }
}

}  // namespace

Poly random_poly(SplitMix64& rng, int vars) {
  std::vector<Exponents> exps;
  degree_two_exponents(vars, exps);
  Poly p(vars);
  for (const Exponents& e : exps) {
    const int c = rng.in_range(-3, 3);
    if (c != 0) p.add_term(e, c);
  }
  return p;
}

Poly random_poly_nonzero(SplitMix64& rng, int vars) {
  for (int tries = 0; tries < 64; ++tries) {
    Poly p = random_poly(rng, vars);
    if (!p.is_zero()) return p;
  }
  return Poly(vars, 1);
}

}  // namespace glacalc
