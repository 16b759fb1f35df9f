#ifndef MCKAY_CYCLO_HPP
#define MCKAY_CYCLO_HPP

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace mckay {

class FieldMismatch : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class DivisionByZero : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Q(zeta_N) in the power basis 1, z, ..., z^(phi-1).
class CycField {
 public:
  // Fields are interned; the returned reference lives for the whole program.
  static const CycField& get(int conductor);

  int conductor() const { return n_; }
  int degree() const { return phi_; }
  // Expansion of z^k for k in [phi, N).
  const std::vector<long>& reduction_row(int k) const { return table_[k - phi_]; }
  // Coefficients of the N-th cyclotomic polynomial, constant term first.
  const std::vector<long>& cyclotomic_poly() const { return phi_poly_; }

  CycField(const CycField&) = delete;
  CycField& operator=(const CycField&) = delete;

 private:
  explicit CycField(int conductor);
  int n_;
  int phi_;
  std::vector<long> phi_poly_;
  std::vector<std::vector<long>> table_;
};

// Element of Q(zeta_N) stored as integer numerators over a common positive denominator.
// A number without a field is a plain rational and promotes on contact with a field element.
class CycNum {
 public:
  CycNum() : c_(1, mpz_class(0)), den_(1) {}
  CycNum(long v) : c_(1, mpz_class(v)), den_(1) {}  // NOLINT(google-explicit-constructor)
  explicit CycNum(const mpq_class& q);
  CycNum(const CycField& f, std::vector<mpq_class> coeffs);

  static CycNum zero(const CycField* f = nullptr);
  static CycNum one(const CycField* f = nullptr);
  static CycNum rational(const mpz_class& num, const mpz_class& den);

  const CycField* field() const { return f_; }
  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const;
  // Valid only when is_rational().
  mpq_class rational_value() const;
  // Coefficient of z^k in the power basis (k < degree).
  mpq_class coeff(int k) const;
  const std::vector<mpz_class>& numerators() const { return c_; }
  const mpz_class& denominator() const { return den_; }

  CycNum operator-() const;
  CycNum& operator+=(const CycNum& o);
  CycNum& operator-=(const CycNum& o);
  CycNum& operator*=(const CycNum& o);
  CycNum& operator/=(const CycNum& o);
  friend CycNum operator+(CycNum a, const CycNum& b) { return a += b; }
  friend CycNum operator-(CycNum a, const CycNum& b) { return a -= b; }
  friend CycNum operator*(CycNum a, const CycNum& b) { return a *= b; }
  friend CycNum operator/(CycNum a, const CycNum& b) { return a /= b; }
  friend bool operator==(const CycNum& a, const CycNum& b);
  friend bool operator!=(const CycNum& a, const CycNum& b) { return !(a == b); }

  CycNum inv() const;
  CycNum pow(long e) const;
  // Automorphism z -> z^k, gcd(k, N) = 1.
  CycNum galois(int k) const;
  CycNum conj() const;

  std::size_t hash() const;
  std::string to_string() const;

  // Lifts a rational into field f; a field element must already live in f.
  CycNum in_field(const CycField& f) const;

 private:
  void normalize();
  static const CycField* common(const CycNum& a, const CycNum& b);

  const CycField* f_ = nullptr;
  std::vector<mpz_class> c_;
  mpz_class den_;
};

CycNum root_of_unity(const CycField& f, long k);
// Square root of q for a squarefree-reducible rational q, when it lies in f.
std::optional<CycNum> sqrt_rational(const CycField& f, const mpq_class& q);
// Square root of a in f for a = q * z^j with q rational; nullopt otherwise.
std::optional<CycNum> cyc_sqrt(const CycNum& a);
CycNum sqrt2(const CycField& f);
CycNum sqrt5(const CycField& f);

struct CycNumHash {
  std::size_t operator()(const CycNum& a) const { return a.hash(); }
};

long euler_phi(long n);

}  // namespace mckay

#endif
