#ifndef MCKAY_PARSE_HPP
#define MCKAY_PARSE_HPP

#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "mckay/poly.hpp"

namespace mckay {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Names visible to the expression grammar. `z` is the primitive root of `field`.
struct ParseEnv {
  const CycField* field = nullptr;
  std::map<std::string, Poly> symbols;
  std::map<std::string, long> ints;
};

// expr := term (('+'|'-') term)*, term := factor (('*'|'/') factor)*,
// factor := ('-'|'+') factor | atom ('^' int-atom)?, atom := integer | name | '(' expr ')'.
// Division is only by nonzero constants; exponents are integer expressions.
Poly parse_poly(std::string_view text, const ParseEnv& env = {});
// Integer arithmetic with + - * / %, parentheses, names from `vars`, and lcm/gcd/min/max.
long parse_int(std::string_view text, const std::map<std::string, long>& vars = {});
// Splits on `sep` outside (), [] and {}; trims whitespace.
std::vector<std::string> split_top_level(std::string_view text, char sep);
// `[[a, b], [c, d]]` with constant entries.
Mat2 parse_mat2(std::string_view text, const ParseEnv& env);
// Replaces each `{expr}` with its integer value.
std::string expand_braces(std::string_view text, const std::map<std::string, long>& vars);
std::string trim(std::string_view s);

}  // namespace mckay

#endif
