#include "glacalc/expr.hpp"

#include <cctype>
#include <stdexcept>

namespace glacalc {

namespace {

enum class TokKind { Int, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };

struct Token {
  TokKind kind;
  std::string text;
  int column;  // 1-based
};

std::vector<Token> tokenize(std::string_view text, int line) {
  std::vector<Token> out;
  size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    const int col = static_cast<int>(i) + 1;
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t j = i;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      out.push_back({TokKind::Int, std::string(text.substr(i, j - i)), col});
      i = j;
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t j = i;
      while (j < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_')) {
        ++j;
      }
      out.push_back({TokKind::Ident, std::string(text.substr(i, j - i)), col});
      i = j;
      continue;
    }
    TokKind k;
    switch (c) {
      case '+': k = TokKind::Plus; break;
      case '-': k = TokKind::Minus; break;
      case '*': k = TokKind::Star; break;
      case '/': k = TokKind::Slash; break;
      case '^': k = TokKind::Caret; break;
      case '(': k = TokKind::LParen; break;
      case ')': k = TokKind::RParen; break;
      default:
        throw ParseError(std::string("unexpected character '") + c + "'", line, col);
    }
    out.push_back({k, std::string(1, c), col});
    ++i;
  }
  out.push_back({TokKind::End, "", static_cast<int>(text.size()) + 1});
  return out;
}

class ExprParser {
 public:
  ExprParser(std::vector<Token> toks, const std::vector<std::string>& vars, int line)
      : m_toks(std::move(toks)), m_vars(vars), m_line(line) {}

  RatFunc parse() {
    RatFunc value = parse_sum();
    if (peek().kind != TokKind::End) {
      throw ParseError("unexpected token '" + peek().text + "'", m_line, peek().column);
    }
    return value;
  }

 private:
  std::vector<Token> m_toks;
  const std::vector<std::string>& m_vars;
  int m_line;
  size_t m_pos = 0;

  const Token& peek() const { return m_toks[m_pos]; }
  Token take() { return m_toks[m_pos++]; }

  int var_count() const { return static_cast<int>(m_vars.size()); }

  RatFunc parse_sum() {
    RatFunc value = parse_product();
    while (peek().kind == TokKind::Plus || peek().kind == TokKind::Minus) {
      const bool minus = take().kind == TokKind::Minus;
      RatFunc rhs = parse_product();
      value = minus ? value - rhs : value + rhs;
    }
    return value;
  }

  RatFunc parse_product() {
    RatFunc value = parse_unary();
    while (peek().kind == TokKind::Star || peek().kind == TokKind::Slash) {
      const bool divide = take().kind == TokKind::Slash;
      RatFunc rhs = parse_unary();
      value = divide ? value / rhs : value * rhs;
    }
    return value;
  }

  RatFunc parse_unary() {
    if (peek().kind == TokKind::Minus) {
      take();
      return -parse_unary();
    }
    if (peek().kind == TokKind::Plus) {
      take();
      return parse_unary();
    }
    return parse_power();
  }

  RatFunc parse_power() {
    RatFunc base = parse_atom();
    if (peek().kind != TokKind::Caret) return base;
    const Token caret = take();
    if (peek().kind != TokKind::Int) {
      throw ParseError("exponent must be a non-negative integer literal", m_line,
                       peek().column);
    }
    const Token exp = take();
    if (exp.text.size() > 4) {
      throw ParseError("exponent too large", m_line, exp.column);
    }
    const int e = std::stoi(exp.text);
    RatFunc value(var_count(), 1);
    for (int k = 0; k < e; ++k) value *= base;
    (void)caret;
    return value;
  }

  RatFunc parse_atom() {
    const Token t = take();
    switch (t.kind) {
      case TokKind::Int:
        return RatFunc(var_count(), Rational(t.text));
      case TokKind::Ident: {
        for (int k = 0; k < var_count(); ++k) {
          if (m_vars[k] == t.text) return RatFunc::variable(var_count(), k + 1);
        }
        throw UnknownVariableError(t.text + " (line " + std::to_string(m_line) +
                                   ", column " + std::to_string(t.column) + ")");
      }
      case TokKind::LParen: {
        RatFunc inner = parse_sum();
        if (peek().kind != TokKind::RParen) {
          throw ParseError("expected ')'", m_line, peek().column);
        }
        take();
        return inner;
      }
      default:
        throw ParseError("unexpected token '" + t.text + "'", m_line, t.column);
    }
  }
};

}  // namespace

RatFunc parse_ratfunc(std::string_view text, const std::vector<std::string>& vars,
                      int line) {
  return ExprParser(tokenize(text, line), vars, line).parse();
}

std::string rational_to_string(const Rational& c) {
  return c.get_str();
}

std::string poly_to_string(const Poly& p, const std::vector<std::string>& vars) {
  if (p.is_zero()) return "0";
  std::string out;
  // Descending graded lex order, matching the canonical leading term.
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const Exponents& e = it->first;
    const Rational& c = it->second;
    std::string mono;
    for (size_t k = 0; k < e.size(); ++k) {
      if (e[k] == 0) continue;
      if (!mono.empty()) mono += '*';
      mono += vars[k];
      if (e[k] > 1) mono += '^' + std::to_string(e[k]);
    }
    const bool negative = c < 0;
    const Rational mag = negative ? Rational(-c) : c;
    std::string piece;
    if (mono.empty()) {
      piece = rational_to_string(mag);
    } else if (mag == 1) {
      piece = mono;
    } else {
      piece = rational_to_string(mag) + '*' + mono;
    }
    if (out.empty()) {
      out = negative ? '-' + piece : piece;
    } else {
      out += negative ? '-' : '+';
      out += piece;
    }
  }
  return out;
}

std::string ratfunc_to_string(const RatFunc& f, const std::vector<std::string>& vars) {
  if (f.den() == Poly(f.vars(), 1)) return poly_to_string(f.num(), vars);
  return '(' + poly_to_string(f.num(), vars) + ")/(" + poly_to_string(f.den(), vars) +
         ')';
}

bool needs_parentheses(const std::string& printed) {
  for (size_t k = 0; k < printed.size(); ++k) {
    const char c = printed[k];
    if (c == '+' || c == '*' || c == '/') return true;
    if (c == '-' && k > 0) return true;
  }
  return false;
}

}  // namespace glacalc
