#include "deffile.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>
#include <set>
#include <sstream>

#include "glacalc/errors.hpp"
#include "glacalc/expr.hpp"

namespace glacalc::cli {
namespace {

std::string strip(std::string s) {
  const std::size_t hash = s.find('#');
  if (hash != std::string::npos) s.erase(hash);
  const auto is_space = [](unsigned char c) { return std::isspace(c) != 0; };
  while (!s.empty() && is_space(static_cast<unsigned char>(s.back()))) s.pop_back();
  std::size_t begin = 0;
  while (begin < s.size() && is_space(static_cast<unsigned char>(s[begin]))) ++begin;
  return s.substr(begin);
}

std::vector<std::string> tokenize(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

bool is_identifier(const std::string& s) {
  if (s.empty()) return false;
  if (std::isalpha(static_cast<unsigned char>(s[0])) == 0 && s[0] != '_') return false;
  return std::all_of(s.begin(), s.end(), [](unsigned char c) {
    return std::isalnum(c) != 0 || c == '_';
  });
}

template <typename T>
const T* find_in(const std::vector<std::pair<std::string, T>>& items,
                 const std::string& name) {
  for (const auto& [key, value] : items) {
    if (key == name) return &value;
  }
  return nullptr;
}

class Parser {
 public:
  explicit Parser(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) m_lines.push_back(strip(line));
  }

  Definitions parse() {
    std::string line;
    int line_no = 0;
    while (next(line, line_no)) {
      try {
        statement(line, line_no);
      } catch (const ParseError&) {
        throw;
      } catch (const CalcError& e) {
        // Engine errors raised while building objects (unknown variables,
        // degenerate generators, ...) become parse errors at the statement.
        fail(e.what(), line_no);
      }
    }
    return std::move(m_defs);
  }

 private:
  std::vector<std::string> m_lines;
  std::size_t m_pos = 0;
  Definitions m_defs;

  bool next(std::string& line, int& line_no) {
    while (m_pos < m_lines.size()) {
      const std::string& cur = m_lines[m_pos];
      ++m_pos;
      if (!cur.empty()) {
        line = cur;
        line_no = static_cast<int>(m_pos);
        return true;
      }
    }
    return false;
  }

  [[noreturn]] static void fail(const std::string& msg, int line_no) {
    throw ParseError(msg, line_no, 1);
  }

  void claim(const std::string& name, int line_no) const {
    if (!is_identifier(name)) fail("invalid name: " + name, line_no);
    if (m_defs.name_taken(name)) fail("duplicate name: " + name, line_no);
  }

  static int parse_count(const std::string& tok, int line_no, const std::string& what) {
    const bool digits = !tok.empty() && tok.size() <= 6 &&
                        std::all_of(tok.begin(), tok.end(), [](unsigned char c) {
                          return std::isdigit(c) != 0;
                        });
    if (!digits) fail("expected " + what + ", got: " + tok, line_no);
    return std::stoi(tok);
  }

  /// Splits "head = tail" at the first '='; both sides must be nonempty.
  static std::pair<std::string, std::string> split_assign(const std::string& line,
                                                          int line_no) {
    const std::size_t eq = line.find('=');
    if (eq == std::string::npos) fail("expected '='", line_no);
    std::string head = strip(line.substr(0, eq));
    std::string tail = strip(line.substr(eq + 1));
    if (head.empty()) fail("missing statement head before '='", line_no);
    if (tail.empty()) fail("missing expression after '='", line_no);
    return {std::move(head), std::move(tail)};
  }

  static std::vector<std::string> split_commas(const std::string& s, int line_no) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
      if (c == ',') {
        out.push_back(strip(cur));
        cur.clear();
      } else {
        cur += c;
      }
    }
    out.push_back(strip(cur));
    for (const std::string& entry : out) {
      if (entry.empty()) fail("empty list entry", line_no);
    }
    return out;
  }

  /// Splits a "<keyword> <comma list>" block line and parses the entries.
  std::vector<RatFunc> entry_list(const std::string& line, int line_no,
                                  const std::vector<std::string>& vars) const {
    const std::size_t space = line.find_first_of(" \t");
    if (space == std::string::npos) fail("expected a list of expressions", line_no);
    std::vector<RatFunc> out;
    for (const std::string& e : split_commas(strip(line.substr(space)), line_no)) {
      out.push_back(parse_ratfunc(e, vars, line_no));
    }
    return out;
  }

  const AlgebraPtr& need_algebra(const std::string& name, int line_no) const {
    const AlgebraPtr* found = m_defs.find_algebra(name);
    if (!found) fail("unknown algebra: " + name, line_no);
    return *found;
  }

  const DiffeoPair& need_diffeo(const std::string& name, int line_no) const {
    const DiffeoPair* found = m_defs.find_diffeo(name);
    if (!found) fail("unknown diffeo: " + name, line_no);
    return *found;
  }

  void statement(const std::string& line, int line_no) {
    const std::vector<std::string> tokens = tokenize(line);
    const std::string& kw = tokens[0];
    if (kw == "ring") return ring_stmt(tokens, line_no);
    if (kw == "algebra") return algebra_stmt(tokens, line_no);
    if (kw == "diffeo") return diffeo_stmt(tokens, line_no);
    if (kw == "element") return element_stmt(line, line_no);
    if (kw == "form") return form_stmt(tokens, line_no);
    if (kw == "subspace") return subspace_stmt(line, line_no);
    if (kw == "ideal") return ideal_stmt(line, line_no);
    if (kw == "morphism") return morphism_stmt(tokens, line_no);
    fail("unknown statement: " + kw, line_no);
  }

  void ring_stmt(const std::vector<std::string>& tokens, int line_no) {
    if (m_defs.has_ring) fail("duplicate ring declaration", line_no);
    if (tokens.size() < 2) fail("ring needs at least one variable", line_no);
    for (std::size_t k = 1; k < tokens.size(); ++k) {
      if (!is_identifier(tokens[k])) fail("invalid variable name: " + tokens[k], line_no);
      if (std::find(m_defs.ring.begin(), m_defs.ring.end(), tokens[k]) !=
          m_defs.ring.end()) {
        fail("duplicate variable: " + tokens[k], line_no);
      }
      m_defs.ring.push_back(tokens[k]);
    }
    m_defs.has_ring = true;
  }

  void algebra_stmt(const std::vector<std::string>& tokens, int line_no) {
    if (tokens.size() < 3) fail("algebra needs a name and a constructor", line_no);
    const std::string& name = tokens[1];
    claim(name, line_no);
    const std::string& kind = tokens[2];
    AlgebraPtr alg;
    try {
      if (kind == "heisenberg" || kind == "sl2" || kind == "tangent_line") {
        if (tokens.size() != 3) fail("unexpected tokens after " + kind, line_no);
        alg = kind == "heisenberg" ? heisenberg()
              : kind == "sl2"      ? sl2()
                                   : tangent_line();
      } else if (kind == "der_plus_f") {
        if (tokens.size() != 4) fail("der_plus_f needs a variable count", line_no);
        alg = der_plus_f(parse_count(tokens[3], line_no, "variable count"));
      } else if (kind == "explicit") {
        if (tokens.size() != 4) fail("explicit needs a dimension", line_no);
        alg = explicit_block(parse_count(tokens[3], line_no, "dimension"), line_no);
      } else if (kind == "bullet") {
        if (tokens.size() != 3) fail("unexpected tokens after bullet", line_no);
        alg = bullet_block(line_no);
      } else if (kind == "deform") {
        if (tokens.size() != 5) fail("deform needs a base algebra and a diffeo", line_no);
        alg = deform(need_algebra(tokens[3], line_no), need_diffeo(tokens[4], line_no));
      } else if (kind == "pullback") {
        if (tokens.size() != 4) fail("pullback needs a base algebra", line_no);
        alg = pullback_block(need_algebra(tokens[3], line_no), line_no);
      } else {
        fail("unknown algebra constructor: " + kind, line_no);
      }
    } catch (const ParseError&) {
      throw;
    } catch (const CalcError& e) {
      fail(e.what(), line_no);
    }
    m_defs.algebras.emplace_back(name, std::move(alg));
  }

  AlgebraPtr explicit_block(int p, int header_line) {
    if (p < 1) fail("dimension must be positive", header_line);
    const int m = static_cast<int>(m_defs.ring.size());
    Matrix anchor(p, std::vector<RatFunc>(m, RatFunc(m)));
    std::vector<RatFunc> structure(static_cast<std::size_t>(p) * p * p, RatFunc(m));
    std::set<std::vector<int>> seen;
    std::string line;
    int line_no = 0;
    while (next(line, line_no)) {
      if (line == "end") {
        return Algebra::make(m_defs.ring, p, std::move(anchor), std::move(structure));
      }
      const auto [head, tail] = split_assign(line, line_no);
      const std::vector<std::string> head_tokens = tokenize(head);
      const RatFunc value = parse_ratfunc(tail, m_defs.ring, line_no);
      if (head_tokens[0] == "anchor") {
        if (head_tokens.size() != 3) fail("anchor entry needs two indices", line_no);
        const int a = parse_count(head_tokens[1], line_no, "element index");
        const int i = parse_count(head_tokens[2], line_no, "variable index");
        if (a < 1 || a > p) fail("element index out of range: " + head_tokens[1], line_no);
        if (i < 1 || i > m) fail("variable index out of range: " + head_tokens[2], line_no);
        if (!seen.insert({0, a, i}).second) fail("duplicate anchor entry", line_no);
        anchor[a - 1][i - 1] = value;
      } else if (head_tokens[0] == "structure") {
        if (head_tokens.size() != 4) fail("structure entry needs three indices", line_no);
        const int g = parse_count(head_tokens[1], line_no, "component index");
        const int a = parse_count(head_tokens[2], line_no, "element index");
        const int b = parse_count(head_tokens[3], line_no, "element index");
        for (int idx : {g, a, b}) {
          if (idx < 1 || idx > p) fail("structure index out of range", line_no);
        }
        if (!seen.insert({1, g, a, b}).second) fail("duplicate structure entry", line_no);
        structure[(static_cast<std::size_t>(g - 1) * p + (a - 1)) * p + (b - 1)] = value;
      } else {
        fail("expected anchor, structure, or end", line_no);
      }
    }
    fail("unterminated algebra block", header_line);
  }

  AlgebraPtr bullet_block(int header_line) {
    const int m = static_cast<int>(m_defs.ring.size());
    if (m == 0) fail("bullet needs a ring declaration", header_line);
    Matrix rho;
    std::string line;
    int line_no = 0;
    while (next(line, line_no)) {
      if (line == "end") {
        if (static_cast<int>(rho.size()) != m) {
          fail("bullet needs " + std::to_string(m) + " rows", line_no);
        }
        return bullet(m_defs.ring, std::move(rho));
      }
      if (tokenize(line)[0] != "row") fail("expected row or end", line_no);
      std::vector<RatFunc> row = entry_list(line, line_no, m_defs.ring);
      if (static_cast<int>(row.size()) != m) {
        fail("expected " + std::to_string(m) + " entries", line_no);
      }
      rho.push_back(std::move(row));
    }
    fail("unterminated algebra block", header_line);
  }

  AlgebraPtr pullback_block(const AlgebraPtr& base, int header_line) {
    std::optional<std::vector<RatFunc>> forward;
    std::string line;
    int line_no = 0;
    while (next(line, line_no)) {
      if (line == "end") {
        if (!forward) fail("pullback needs a map line", line_no);
        return pullback_chart(base, *forward);
      }
      if (tokenize(line)[0] != "map") fail("expected map or end", line_no);
      if (forward) fail("duplicate map line", line_no);
      forward = entry_list(line, line_no, base->vars());
    }
    fail("unterminated algebra block", header_line);
  }

  void diffeo_stmt(const std::vector<std::string>& tokens, int line_no) {
    if (tokens.size() != 2) fail("expected: diffeo <name>", line_no);
    claim(tokens[1], line_no);
    if (!m_defs.has_ring) fail("diffeo needs a ring declaration", line_no);
    std::optional<std::vector<RatFunc>> forward, inverse;
    std::string line;
    int inner = 0;
    while (next(line, inner)) {
      if (line == "end") {
        if (!forward || !inverse) fail("diffeo needs forward and inverse lines", inner);
        try {
          m_defs.diffeos.emplace_back(
              tokens[1], make_diffeo(m_defs.ring, std::move(*forward), std::move(*inverse)));
        } catch (const CalcError& e) {
          fail(e.what(), line_no);
        }
        return;
      }
      const std::string kw = tokenize(line)[0];
      if (kw == "forward") {
        if (forward) fail("duplicate forward line", inner);
        forward = entry_list(line, inner, m_defs.ring);
      } else if (kw == "inverse") {
        if (inverse) fail("duplicate inverse line", inner);
        inverse = entry_list(line, inner, m_defs.ring);
      } else {
        fail("expected forward, inverse, or end", inner);
      }
    }
    fail("unterminated diffeo block", line_no);
  }

  void element_stmt(const std::string& line, int line_no) {
    const auto [head, tail] = split_assign(line, line_no);
    const std::vector<std::string> tokens = tokenize(head);
    if (tokens.size() != 4 || tokens[2] != "of") {
      fail("expected: element <name> of <algebra> = <coefficients>", line_no);
    }
    claim(tokens[1], line_no);
    const AlgebraPtr& alg = need_algebra(tokens[3], line_no);
    const std::vector<std::string> entries = split_commas(tail, line_no);
    if (static_cast<int>(entries.size()) != alg->dim()) {
      fail("expected " + std::to_string(alg->dim()) + " coefficients", line_no);
    }
    std::vector<RatFunc> coeff;
    coeff.reserve(entries.size());
    for (const std::string& e : entries) {
      coeff.push_back(parse_ratfunc(e, alg->vars(), line_no));
    }
    m_defs.elements.emplace_back(tokens[1], make_element(alg, std::move(coeff)));
  }

  void form_stmt(const std::vector<std::string>& tokens, int line_no) {
    if (tokens.size() != 6 || tokens[2] != "of" || tokens[4] != "degree") {
      fail("expected: form <name> of <algebra> degree <q>", line_no);
    }
    claim(tokens[1], line_no);
    const AlgebraPtr& alg = need_algebra(tokens[3], line_no);
    const int degree = parse_count(tokens[5], line_no, "degree");
    std::map<std::vector<int>, RatFunc> coeff;
    std::string line;
    int inner = 0;
    while (next(line, inner)) {
      if (line == "end") {
        try {
          m_defs.forms.emplace_back(tokens[1], make_form(alg, degree, std::move(coeff)));
        } catch (const ParseError&) {
          throw;
        } catch (const CalcError& e) {
          fail(e.what(), line_no);
        }
        return;
      }
      const auto [head, tail] = split_assign(line, inner);
      const std::vector<std::string> head_tokens = tokenize(head);
      if (head_tokens[0] != "at") fail("expected at or end", inner);
      if (static_cast<int>(head_tokens.size()) != degree + 1) {
        fail("expected " + std::to_string(degree) + " indices", inner);
      }
      std::vector<int> idx;
      idx.reserve(degree);
      for (std::size_t k = 1; k < head_tokens.size(); ++k) {
        const int i = parse_count(head_tokens[k], inner, "basis index");
        if (i < 1 || i > alg->dim()) {
          fail("basis index out of range: " + head_tokens[k], inner);
        }
        idx.push_back(i - 1);
      }
      const RatFunc value = parse_ratfunc(tail, alg->vars(), inner);
      if (!coeff.emplace(std::move(idx), value).second) {
        fail("duplicate index tuple", inner);
      }
    }
    fail("unterminated form block", line_no);
  }

  Element resolve_element(const std::string& ref, const AlgebraPtr& alg,
                          int line_no) const {
    if (const Element* found = m_defs.find_element(ref)) {
      if (found->algebra.get() != alg.get()) {
        fail("element " + ref + " belongs to a different algebra", line_no);
      }
      return *found;
    }
    if (ref.size() >= 2 && ref[0] == 't' &&
        std::all_of(ref.begin() + 1, ref.end(),
                    [](unsigned char c) { return std::isdigit(c) != 0; })) {
      const int k = parse_count(ref.substr(1), line_no, "basis index");
      if (k < 1 || k > alg->dim()) fail("basis index out of range: " + ref, line_no);
      return basis_element(alg, k - 1);
    }
    fail("unknown element: " + ref, line_no);
  }

  void subspace_stmt(const std::string& line, int line_no) {
    const auto [head, tail] = split_assign(line, line_no);
    const std::vector<std::string> tokens = tokenize(head);
    if (tokens.size() != 4 || tokens[2] != "of") {
      fail("expected: subspace <name> of <algebra> = <generators>", line_no);
    }
    claim(tokens[1], line_no);
    const AlgebraPtr& alg = need_algebra(tokens[3], line_no);
    std::vector<Element> gens;
    for (const std::string& ref : split_commas(tail, line_no)) {
      gens.push_back(resolve_element(ref, alg, line_no));
    }
    try {
      m_defs.subspaces.emplace_back(tokens[1], make_subspace(std::move(gens)));
    } catch (const CalcError& e) {
      fail(e.what(), line_no);
    }
  }

  void ideal_stmt(const std::string& line, int line_no) {
    const auto [head, tail] = split_assign(line, line_no);
    const std::vector<std::string> tokens = tokenize(head);
    const bool with_cap = tokens.size() == 6 && tokens[4] == "cap";
    if (!(tokens.size() == 4 || with_cap) || tokens[2] != "of") {
      fail("expected: ideal <name> of <algebra> [cap <n>] = <forms>", line_no);
    }
    claim(tokens[1], line_no);
    const AlgebraPtr& alg = need_algebra(tokens[3], line_no);
    std::vector<Form> gens;
    for (const std::string& ref : split_commas(tail, line_no)) {
      const Form* found = m_defs.find_form(ref);
      if (!found) fail("unknown form: " + ref, line_no);
      if (found->algebra.get() != alg.get()) {
        fail("form " + ref + " belongs to a different algebra", line_no);
      }
      gens.push_back(*found);
    }
    const int cap = with_cap ? parse_count(tokens[5], line_no, "degree cap")
                             : default_degree_cap(gens);
    try {
      m_defs.ideals.emplace_back(tokens[1], make_ideal(alg, std::move(gens), cap));
    } catch (const CalcError& e) {
      fail(e.what(), line_no);
    }
  }

  void morphism_stmt(const std::vector<std::string>& tokens, int line_no) {
    if (tokens.size() != 5 || tokens[3] != "->") {
      fail("expected: morphism <name> <source> -> <target>", line_no);
    }
    claim(tokens[1], line_no);
    const AlgebraPtr& src = need_algebra(tokens[2], line_no);
    const AlgebraPtr& tgt = need_algebra(tokens[4], line_no);
    Matrix rows;
    std::string line;
    int inner = 0;
    while (next(line, inner)) {
      if (line == "end") {
        try {
          m_defs.morphisms.emplace_back(tokens[1],
                                        make_morphism(src, tgt, std::move(rows)));
        } catch (const CalcError& e) {
          fail(e.what(), line_no);
        }
        return;
      }
      if (tokenize(line)[0] != "row") fail("expected row or end", inner);
      rows.push_back(entry_list(line, inner, src->vars()));
    }
    fail("unterminated morphism block", line_no);
  }
};

}  // namespace

const AlgebraPtr* Definitions::find_algebra(const std::string& name) const {
  return find_in(algebras, name);
}
const DiffeoPair* Definitions::find_diffeo(const std::string& name) const {
  return find_in(diffeos, name);
}
const Element* Definitions::find_element(const std::string& name) const {
  return find_in(elements, name);
}
const Form* Definitions::find_form(const std::string& name) const {
  return find_in(forms, name);
}
const Subspace* Definitions::find_subspace(const std::string& name) const {
  return find_in(subspaces, name);
}
const IdealSpec* Definitions::find_ideal(const std::string& name) const {
  return find_in(ideals, name);
}
const Morphism* Definitions::find_morphism(const std::string& name) const {
  return find_in(morphisms, name);
}

bool Definitions::name_taken(const std::string& name) const {
  return find_algebra(name) != nullptr || find_diffeo(name) != nullptr ||
         find_element(name) != nullptr || find_form(name) != nullptr ||
         find_subspace(name) != nullptr || find_ideal(name) != nullptr ||
         find_morphism(name) != nullptr;
}

Definitions parse_definition(const std::string& text) {
  return Parser(text).parse();
}

}  // namespace glacalc::cli
