#include "mckay/parse.hpp"

#include <cctype>
#include <numeric>

namespace mckay {

namespace {

class Lexer {
 public:
  explicit Lexer(std::string_view s) : s_(s) {}

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool done() {
    skip();
    return pos_ >= s_.size();
  }
  char peek() {
    skip();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  bool at_name() {
    char c = peek();
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
  }
  bool at_digit() { return std::isdigit(static_cast<unsigned char>(peek())) != 0; }
  std::string name() {
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
    return std::string(s_.substr(start, pos_ - start));
  }
  std::string digits() {
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    return std::string(s_.substr(start, pos_ - start));
  }
  [[noreturn]] void fail(const std::string& what) {
    throw ParseError(what + " at offset " + std::to_string(pos_) + " in '" + std::string(s_) + "'");
  }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;
};

class IntParser {
 public:
  IntParser(Lexer& lx, const std::map<std::string, long>& vars) : lx_(lx), vars_(vars) {}

  long expr() {
    long v = term();
    for (;;) {
      if (lx_.accept('+')) {
        v += term();
      } else if (lx_.accept('-')) {
        v -= term();
      } else {
        return v;
      }
    }
  }

  long atom() {
    if (lx_.accept('-')) return -atom();
    if (lx_.accept('(')) {
      long v = expr();
      lx_.expect(')');
      return v;
    }
    if (lx_.at_digit()) return std::stol(lx_.digits());
    if (lx_.at_name()) {
      std::string n = lx_.name();
      if (n == "lcm" || n == "gcd" || n == "min" || n == "max") {
        lx_.expect('(');
        long a = expr();
        lx_.expect(',');
        long b = expr();
        lx_.expect(')');
        if (n == "lcm") return std::lcm(a, b);
        if (n == "gcd") return std::gcd(a, b);
        if (n == "min") return std::min(a, b);
        return std::max(a, b);
      }
      auto it = vars_.find(n);
      if (it == vars_.end()) lx_.fail("unknown integer name '" + n + "'");
      return it->second;
    }
    lx_.fail("expected an integer");
  }

 private:
  long term() {
    long v = atom();
    for (;;) {
      if (lx_.accept('*')) {
        v *= atom();
      } else if (lx_.accept('/')) {
        long d = atom();
        if (d == 0 || v % d != 0) lx_.fail("inexact integer division");
        v /= d;
      } else if (lx_.accept('%')) {
        long d = atom();
        if (d == 0) lx_.fail("modulo by zero");
        v = ((v % d) + d) % d;
      } else {
        return v;
      }
    }
  }

  Lexer& lx_;
  const std::map<std::string, long>& vars_;
};

class PolyParser {
 public:
  PolyParser(Lexer& lx, const ParseEnv& env) : lx_(lx), env_(env) {}

  Poly expr() {
    Poly v = term();
    for (;;) {
      if (lx_.accept('+')) {
        v += term();
      } else if (lx_.accept('-')) {
        v -= term();
      } else {
        return v;
      }
    }
  }

 private:
  Poly term() {
    Poly v = factor();
    for (;;) {
      if (lx_.accept('*')) {
        v = v * factor();
      } else if (lx_.accept('/')) {
        Poly d = factor();
        if (!d.is_constant() || d.is_zero()) lx_.fail("division by a non-constant or zero");
        v *= d.coeff({}).inv();
      } else {
        return v;
      }
    }
  }

  Poly factor() {
    if (lx_.accept('-')) return -factor();
    if (lx_.accept('+')) return factor();
    Poly base = atom();
    if (lx_.accept('^')) {
      IntParser ip(lx_, env_.ints);
      long e = ip.atom();
      if (e < 0) {
        if (!base.is_constant() || base.is_zero()) lx_.fail("negative power of a non-constant");
        return Poly(base.coeff({}).pow(e));
      }
      return base.pow(static_cast<int>(e));
    }
    return base;
  }

  Poly atom() {
    if (lx_.accept('(')) {
      Poly v = expr();
      lx_.expect(')');
      return v;
    }
    if (lx_.at_digit()) return Poly(CycNum(mpq_class(mpz_class(lx_.digits()))));
    if (lx_.at_name()) {
      std::string n = lx_.name();
      if (auto it = env_.symbols.find(n); it != env_.symbols.end()) return it->second;
      if (n == "x") return Poly::x();
      if (n == "y") return Poly::y();
      if (n == "t") return Poly::t();
      if (n == "z") {
        if (!env_.field) lx_.fail("'z' needs a cyclotomic field");
        return Poly(root_of_unity(*env_.field, 1));
      }
      if (auto it = env_.ints.find(n); it != env_.ints.end()) return Poly(CycNum(it->second));
      lx_.fail("unknown name '" + n + "'");
    }
    lx_.fail("unexpected character");
  }

  Lexer& lx_;
  const ParseEnv& env_;
};

}  // namespace

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

Poly parse_poly(std::string_view text, const ParseEnv& env) {
  Lexer lx(text);
  PolyParser p(lx, env);
  Poly v = p.expr();
  if (!lx.done()) lx.fail("trailing input");
  return v;
}

long parse_int(std::string_view text, const std::map<std::string, long>& vars) {
  Lexer lx(text);
  IntParser p(lx, vars);
  long v = p.expr();
  if (!lx.done()) lx.fail("trailing input");
  return v;
}

std::vector<std::string> split_top_level(std::string_view text, char sep) {
  std::vector<std::string> out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (c == '(' || c == '[' || c == '{') ++depth;
    if (c == ')' || c == ']' || c == '}') --depth;
    if (c == sep && depth == 0) {
      out.push_back(trim(text.substr(start, i - start)));
      start = i + 1;
    }
  }
  std::string last = trim(text.substr(start));
  if (!last.empty() || !out.empty()) out.push_back(last);
  return out;
}

namespace {

std::string strip_brackets(const std::string& s) {
  if (s.size() < 2 || s.front() != '[' || s.back() != ']') throw ParseError("expected [...] in '" + s + "'");
  return s.substr(1, s.size() - 2);
}

CycNum constant_of(const Poly& p, const std::string& src) {
  if (!p.is_constant()) throw ParseError("matrix entry is not a constant: '" + src + "'");
  return p.coeff({});
}

}  // namespace

Mat2 parse_mat2(std::string_view text, const ParseEnv& env) {
  auto rows = split_top_level(strip_brackets(trim(text)), ',');
  if (rows.size() != 2) throw ParseError("a 2x2 matrix needs two rows: '" + std::string(text) + "'");
  auto r0 = split_top_level(strip_brackets(rows[0]), ',');
  auto r1 = split_top_level(strip_brackets(rows[1]), ',');
  if (r0.size() != 2 || r1.size() != 2) throw ParseError("matrix rows need two entries: '" + std::string(text) + "'");
  return {constant_of(parse_poly(r0[0], env), r0[0]), constant_of(parse_poly(r0[1], env), r0[1]),
          constant_of(parse_poly(r1[0], env), r1[0]), constant_of(parse_poly(r1[1], env), r1[1])};
}

std::string expand_braces(std::string_view text, const std::map<std::string, long>& vars) {
  std::string out;
  std::size_t i = 0;
  while (i < text.size()) {
    if (text[i] == '{') {
      std::size_t j = text.find('}', i);
      if (j == std::string_view::npos) throw ParseError("unclosed '{' in '" + std::string(text) + "'");
      out += std::to_string(parse_int(text.substr(i + 1, j - i - 1), vars));
      i = j + 1;
    } else {
      out += text[i++];
    }
  }
  return out;
}

}  // namespace mckay
