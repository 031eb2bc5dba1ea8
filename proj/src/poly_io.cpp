#include "arith/poly_io.hpp"

#include "arith/errors.hpp"

#include <cctype>
#include <unordered_map>

namespace arith {

std::vector<std::string> default_var_names(std::size_t n) {
  std::vector<std::string> names;
  names.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
  return names;
}

namespace {

enum class Tok { Int, Ident, Plus, Minus, Star, Caret, End };

struct Token {
  Tok kind;
  std::string_view text;
  std::size_t pos;
};

std::vector<Token> tokenize(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    unsigned char ch = static_cast<unsigned char>(s[i]);
    if (std::isspace(ch)) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    if (std::isdigit(ch)) {
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
      out.push_back({Tok::Int, s.substr(start, i - start), start});
    } else if (std::isalpha(ch) || ch == '_') {
      while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_')) ++i;
      out.push_back({Tok::Ident, s.substr(start, i - start), start});
    } else {
      Tok k;
      switch (ch) {
        case '+': k = Tok::Plus; break;
        case '-': k = Tok::Minus; break;
        case '*': k = Tok::Star; break;
        case '^': k = Tok::Caret; break;
        default: throw ParseError(std::string("unexpected character '") + char(ch) + "'", start);
      }
      out.push_back({k, s.substr(i, 1), start});
      ++i;
    }
  }
  out.push_back({Tok::End, {}, s.size()});
  return out;
}

class Parser {
 public:
  Parser(std::vector<Token> toks, const std::unordered_map<std::string_view, std::size_t>& names, std::size_t n)
      : toks_(std::move(toks)), names_(names), n_(n) {}

  Polynomial parse_expr() {
    Polynomial out(n_);
    if (peek().kind == Tok::End) throw ParseError("empty expression", peek().pos);
    bool first = true;
    while (true) {
      int sign = 1;
      if (!first) {
        if (peek().kind == Tok::Plus)
          sign = 1;
        else if (peek().kind == Tok::Minus)
          sign = -1;
        else if (peek().kind == Tok::End)
          break;
        else
          throw ParseError("expected '+' or '-'", peek().pos);
        ++cur_;
      }
      // optional unary sign on the term itself ("-x1", "x1 + -3")
      if (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
        if (peek().kind == Tok::Minus) sign = -sign;
        ++cur_;
      }
      auto [mono, coeff] = parse_term();
      out.add_term(mono, sign * coeff);
      first = false;
    }
    return out;
  }

 private:
  const Token& peek() const { return toks_[cur_]; }

  std::pair<Monomial, BigInt> parse_term() {
    Monomial mono(n_);
    BigInt coeff = 1;
    while (true) {
      const Token& t = peek();
      if (t.kind == Tok::Int) {
        coeff *= BigInt(std::string(t.text));
        ++cur_;
      } else if (t.kind == Tok::Ident) {
        auto it = names_.find(t.text);
        if (it == names_.end()) throw ParseError("unknown variable '" + std::string(t.text) + "'", t.pos);
        ++cur_;
        Exponent e = 1;
        if (peek().kind == Tok::Caret) {
          ++cur_;
          if (peek().kind != Tok::Int) throw ParseError("expected exponent after '^'", peek().pos);
          unsigned long v = std::stoul(std::string(peek().text));
          e = static_cast<Exponent>(v);
          ++cur_;
        }
        mono[it->second] += e;
      } else {
        throw ParseError("expected integer or variable", t.pos);
      }
      if (peek().kind != Tok::Star) break;
      ++cur_;
    }
    return {mono, coeff};
  }

  std::vector<Token> toks_;
  const std::unordered_map<std::string_view, std::size_t>& names_;
  std::size_t n_;
  std::size_t cur_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, std::span<const std::string> var_names) {
  std::unordered_map<std::string_view, std::size_t> names;
  for (std::size_t i = 0; i < var_names.size(); ++i) names.emplace(var_names[i], i);
  return Parser(tokenize(text), names, var_names.size()).parse_expr();
}

Polynomial parse_polynomial(std::string_view text) {
  std::size_t n = 0;
  for (const Token& t : tokenize(text)) {
    if (t.kind != Tok::Ident) continue;
    auto bad = [&] { return ParseError("unknown variable '" + std::string(t.text) + "' (expected x<k>)", t.pos); };
    if (t.text.size() < 2 || t.text[0] != 'x' || t.text[1] == '0') throw bad();
    for (char c : t.text.substr(1))
      if (!std::isdigit(static_cast<unsigned char>(c))) throw bad();
    n = std::max<std::size_t>(n, std::stoul(std::string(t.text.substr(1))));
  }
  return parse_polynomial(text, default_var_names(n));
}

std::string monomial_to_string(const Monomial& m, std::span<const std::string> var_names) {
  std::vector<std::string> defaults;
  if (var_names.size() < m.size()) {
    defaults = default_var_names(m.size());
    var_names = defaults;
  }
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += var_names[i];
    if (m[i] > 1) out += "^" + std::to_string(m[i]);
  }
  return out.empty() ? "1" : out;
}

std::string to_string(const Polynomial& f, std::span<const std::string> var_names) {
  if (f.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : f.terms()) {
    const bool negative = c < 0;
    BigInt mag = abs(c);
    if (first)
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    first = false;
    if (m.is_constant()) {
      out += mag.get_str();
    } else {
      if (mag != 1) out += mag.get_str() + "*";
      out += monomial_to_string(m, var_names);
    }
  }
  return out;
}

}  // namespace arith
