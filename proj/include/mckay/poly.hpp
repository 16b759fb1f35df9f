#ifndef MCKAY_POLY_HPP
#define MCKAY_POLY_HPP

#include <map>
#include <string>
#include <vector>

#include "mckay/cyclo.hpp"

namespace mckay {

struct Monomial {
  int ex = 0;
  int ey = 0;
  int et = 0;
  int degree() const { return ex + ey + et; }
  int xy_degree() const { return ex + ey; }
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

// Graded lexicographic with x > y > t; larger monomials sort first.
struct MonomialOrder {
  bool operator()(const Monomial& a, const Monomial& b) const {
    if (a.degree() != b.degree()) return a.degree() > b.degree();
    if (a.ex != b.ex) return a.ex > b.ex;
    if (a.ey != b.ey) return a.ey > b.ey;
    return a.et > b.et;
  }
};

struct Mat2 {
  CycNum a, b, c, d;

  static Mat2 identity();
  CycNum det() const { return a * d - b * c; }
  CycNum trace() const { return a + d; }
  Mat2 inverse() const;
  bool is_identity() const;
  std::size_t hash() const;
  std::string to_string() const;
  friend Mat2 operator*(const Mat2& x, const Mat2& y);
  friend bool operator==(const Mat2& x, const Mat2& y) {
    return x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d;
  }
  friend bool operator!=(const Mat2& x, const Mat2& y) { return !(x == y); }
  Mat2 scaled(const CycNum& s) const { return {a * s, b * s, c * s, d * s}; }
};

struct Mat2Hash {
  std::size_t operator()(const Mat2& m) const { return m.hash(); }
};

class Poly {
 public:
  using Terms = std::map<Monomial, CycNum, MonomialOrder>;

  Poly() = default;
  Poly(const CycNum& c);  // NOLINT(google-explicit-constructor)
  Poly(long c) : Poly(CycNum(c)) {}  // NOLINT(google-explicit-constructor)
  static Poly x();
  static Poly y();
  static Poly t();
  static Poly monomial(const Monomial& m, const CycNum& c = CycNum(1));

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  std::size_t size() const { return terms_.size(); }
  CycNum coeff(const Monomial& m) const;
  const Monomial& leading_monomial() const { return terms_.begin()->first; }
  const CycNum& leading_coeff() const { return terms_.begin()->second; }
  // Largest total degree; -1 for the zero polynomial.
  int degree() const;
  // Largest x,y-degree of a term; -1 for zero.
  int xy_degree() const;
  bool is_homogeneous() const;
  bool has_t() const;
  const CycField* field() const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  Poly& operator*=(const CycNum& s);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const CycNum& s) { return a *= s; }
  friend Poly operator*(const CycNum& s, Poly a) { return a *= s; }
  friend bool operator==(const Poly& a, const Poly& b);
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }
  Poly pow(int e) const;

  void add_term(const Monomial& m, const CycNum& c);
  std::string to_string() const;

 private:
  Terms terms_;
};

// x -> a x + b y, y -> c x + d y for g = [[a, b], [c, d]]; t is fixed.
Poly act(const Mat2& g, const Poly& f);
CycNum evaluate(const Poly& f, const CycNum& x0, const CycNum& y0, const CycNum& t0 = CycNum(0));
// Terms whose x,y-degree equals d.
Poly homogeneous_part(const Poly& f, int d);
// f(X, Y) for a polynomial f in x, y.
Poly compose(const Poly& f, const Poly& X, const Poly& Y);
// Multiplies every coefficient by the image under z -> z^k.
Poly galois(const Poly& f, int k);
std::vector<Monomial> monomials_of_degree(int d);
// Coefficient vector of f against the listed monomials; throws if f has other terms.
std::vector<CycNum> to_dense(const Poly& f, const std::vector<Monomial>& basis);

}  // namespace mckay

#endif
