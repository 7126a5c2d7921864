#include "polyflow/parse.hpp"

#include <cctype>
#include <map>
#include <vector>

namespace polyflow {

namespace {

enum class Tok { Int, Pi, Var, Plus, Minus, Star, Slash, Caret, LParen, RParen, Comma, End };

struct Token {
  Tok kind;
  std::string text;  // digits for Int, variable name for Var
  size_t pos;
};

std::vector<Token> lex(const std::string& text) {
  std::vector<Token> out;
  size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) { ++i; continue; }
    size_t start = i;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string digits;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
        digits.push_back(text[i++]);
      if (i < text.size() && text[i] == '.')
        throw ParseError("decimal coefficients are not accepted; use a/b rationals", i);
      out.push_back({Tok::Int, digits, start});
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::string name;
      while (i < text.size() && std::isalpha(static_cast<unsigned char>(text[i])))
        name.push_back(text[i++]);
      if (name == "pi") {
        out.push_back({Tok::Pi, name, start});
      } else if (name == "u") {
        std::string digits;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
          digits.push_back(text[i++]);
        if (digits.empty()) throw ParseError("'u' must be followed by an index", start);
        out.push_back({Tok::Var, "u" + digits, start});
      } else if (name == "t" || name == "s" || name == "w") {
        out.push_back({Tok::Var, name, start});
      } else {
        throw ParseError("unknown identifier '" + name + "'", start);
      }
      continue;
    }
    switch (c) {
      case '+': out.push_back({Tok::Plus, "+", start}); break;
      case '-': out.push_back({Tok::Minus, "-", start}); break;
      case '*': out.push_back({Tok::Star, "*", start}); break;
      case '/': out.push_back({Tok::Slash, "/", start}); break;
      case '^': out.push_back({Tok::Caret, "^", start}); break;
      case '(': out.push_back({Tok::LParen, "(", start}); break;
      case ')': out.push_back({Tok::RParen, ")", start}); break;
      case ',': out.push_back({Tok::Comma, ",", start}); break;
      default: throw ParseError(std::string("unexpected character '") + c + "'", start);
    }
    ++i;
  }
  out.push_back({Tok::End, "", text.size()});
  return out;
}

// First-appearance assignment of named variables onto free indices.
std::map<std::string, int> assign_variables(const std::vector<Token>& toks, int* max_index) {
  std::map<std::string, int> mapping;
  std::vector<bool> taken;
  auto reserve = [&](int idx) {
    if (idx >= static_cast<int>(taken.size())) taken.resize(idx + 1, false);
    taken[idx] = true;
  };
  std::vector<std::string> letters_in_order;
  for (const auto& t : toks) {
    if (t.kind != Tok::Var) continue;
    if (t.text[0] == 'u') {
      int idx = std::stoi(t.text.substr(1)) - 1;
      if (idx < 0) throw ParseError("variable indices are 1-based", t.pos);
      mapping[t.text] = idx;
      reserve(idx);
    } else {
      bool seen = false;
      for (const auto& l : letters_in_order) seen = seen || l == t.text;
      if (!seen) letters_in_order.push_back(t.text);
    }
  }
  for (const auto& l : letters_in_order) {
    int idx = 0;
    while (idx < static_cast<int>(taken.size()) && taken[idx]) ++idx;
    reserve(idx);
    mapping[l] = idx;
  }
  *max_index = -1;
  for (const auto& [name, idx] : mapping) *max_index = std::max(*max_index, idx);
  return mapping;
}

class Parser {
 public:
  Parser(const std::vector<Token>& toks, const std::map<std::string, int>& vars, int d)
      : toks_(toks), vars_(vars), d_(d) {}

  MultiPoly parse_expr() {
    bool neg = false;
    if (peek().kind == Tok::Plus) next();
    else if (peek().kind == Tok::Minus) { next(); neg = true; }
    MultiPoly acc = parse_term();
    if (neg) acc = -acc;
    while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
      bool minus = next().kind == Tok::Minus;
      MultiPoly t = parse_term();
      acc = minus ? acc - t : acc + t;
    }
    return acc;
  }

  size_t cursor_ = 0;

 private:
  const Token& peek() const { return toks_[cursor_]; }
  const Token& next() { return toks_[cursor_++]; }

  bool starts_factor(Tok k) const {
    return k == Tok::Int || k == Tok::Pi || k == Tok::Var || k == Tok::LParen;
  }

  MultiPoly parse_term() {
    MultiPoly acc = parse_factor();
    while (true) {
      if (peek().kind == Tok::Star) {
        next();
        acc = acc * parse_factor();
      } else if (starts_factor(peek().kind)) {
        acc = acc * parse_factor();  // juxtaposition, e.g. "2t"
      } else {
        break;
      }
    }
    return acc;
  }

  int parse_int_signed() {
    bool neg = false;
    if (peek().kind == Tok::Minus) { next(); neg = true; }
    if (peek().kind != Tok::Int) throw ParseError("expected integer", peek().pos);
    int v = std::stoi(next().text);
    return neg ? -v : v;
  }

  MultiPoly parse_factor() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::Int: {
        next();
        Rational num = Rational::from_string(t.text);
        if (peek().kind == Tok::Slash) {
          next();
          if (peek().kind != Tok::Int) throw ParseError("expected denominator", peek().pos);
          Rational den = Rational::from_string(next().text);
          if (den.is_zero()) throw ParseError("division by zero", t.pos);
          num = num / den;
        }
        return MultiPoly::constant(d_, Coeff(num));
      }
      case Tok::Pi: {
        next();
        int e = 1;
        if (peek().kind == Tok::Caret) { next(); e = parse_int_signed(); }
        return MultiPoly::constant(d_, Coeff::tau(e));
      }
      case Tok::Var: {
        next();
        auto it = vars_.find(t.text);
        int idx = it->second;
        if (idx >= d_)
          throw ParseError("variable '" + t.text + "' exceeds arity " + std::to_string(d_), t.pos);
        MultiPoly v = MultiPoly::variable(d_, idx);
        if (peek().kind == Tok::Caret) {
          next();
          if (peek().kind != Tok::Int) throw ParseError("expected nonnegative exponent", peek().pos);
          int e = std::stoi(next().text);
          return v.pow(static_cast<unsigned>(e));
        }
        return v;
      }
      case Tok::LParen: {
        next();
        MultiPoly inner = parse_expr();
        if (peek().kind != Tok::RParen) throw ParseError("expected ')'", peek().pos);
        next();
        return inner;
      }
      default:
        throw ParseError("expected coefficient, variable, or '('", t.pos);
    }
  }

  const std::vector<Token>& toks_;
  const std::map<std::string, int>& vars_;
  int d_;
};

}  // namespace

MultiPoly parse_poly(const std::string& text, int d) {
  auto toks = lex(text);
  int max_index = -1;
  auto vars = assign_variables(toks, &max_index);
  if (max_index >= d)
    throw ParseError("variable index exceeds arity " + std::to_string(d), 0);
  Parser p(toks, vars, d);
  MultiPoly out = p.parse_expr();
  const Token& rest = toks[p.cursor_];
  if (rest.kind != Tok::End) throw ParseError("trailing input", rest.pos);
  return out;
}

PolyFamily parse_family(const std::string& text, std::optional<int> d) {
  auto toks = lex(text);
  int max_index = -1;
  auto vars = assign_variables(toks, &max_index);
  int dim = d.value_or(std::max(max_index + 1, 1));
  if (max_index >= dim)
    throw ParseError("variable index exceeds arity " + std::to_string(dim), 0);

  PolyFamily fam;
  fam.d = dim;
  Parser p(toks, vars, dim);
  while (true) {
    fam.polys.push_back(p.parse_expr());
    const Token& t = toks[p.cursor_];
    if (t.kind == Tok::Comma) { ++p.cursor_; continue; }
    if (t.kind == Tok::End) break;
    throw ParseError("expected ',' or end of family", t.pos);
  }
  if (fam.polys.empty()) throw ParseError("empty family", 0);
  return fam;
}

}  // namespace polyflow
