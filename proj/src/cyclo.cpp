#include "mckay/cyclo.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>

namespace mckay {

namespace {

using IntPoly = std::vector<mpz_class>;

void trim(IntPoly& p) {
  while (p.size() > 1 && p.back() == 0) p.pop_back();
}

// Exact division of integer polynomials by a monic divisor.
IntPoly divide_monic(IntPoly num, const IntPoly& den) {
  const std::size_t dn = den.size() - 1;
  IntPoly q(num.size() - dn, 0);
  for (std::size_t i = num.size(); i-- > dn;) {
    mpz_class c = num[i];
    if (c == 0) continue;
    q[i - dn] = c;
    for (std::size_t j = 0; j <= dn; ++j) num[i - dn + j] -= c * den[j];
  }
  return q;
}

IntPoly cyclotomic(int n, std::map<int, IntPoly>& memo) {
  if (auto it = memo.find(n); it != memo.end()) return it->second;
  IntPoly p(n + 1, 0);
  p[0] = -1;
  p[n] = 1;
  for (int d = 1; d < n; ++d) {
    if (n % d == 0) p = divide_monic(p, cyclotomic(d, memo));
  }
  trim(p);
  memo[n] = p;
  return p;
}

int mod(long a, long n) {
  long r = a % n;
  return static_cast<int>(r < 0 ? r + n : r);
}

std::vector<long> prime_factors(long n) {
  std::vector<long> out;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

long legendre(long a, long p) {
  long r = 1, b = mod(a, p), e = (p - 1) / 2;
  long base = b;
  while (e > 0) {
    if (e & 1) r = (r * base) % p;
    base = (base * base) % p;
    e >>= 1;
  }
  return r == 1 ? 1 : (r == 0 ? 0 : -1);
}

}  // namespace

long euler_phi(long n) {
  long r = n;
  for (long p : prime_factors(n)) r = r / p * (p - 1);
  return r;
}

CycField::CycField(int conductor) : n_(conductor) {
  if (conductor < 1) throw std::invalid_argument("conductor must be positive");
  std::map<int, IntPoly> memo;
  IntPoly phi = cyclotomic(conductor, memo);
  phi_ = static_cast<int>(phi.size()) - 1;
  for (const auto& c : phi) phi_poly_.push_back(c.get_si());
  // z^phi = -(phi_0 + ... + phi_{d-1} z^{d-1})
  std::vector<long> row(phi_);
  for (int i = 0; i < phi_; ++i) row[i] = -phi_poly_[i];
  for (int k = phi_; k < n_; ++k) {
    table_.push_back(row);
    long top = row[phi_ - 1];
    std::vector<long> next(phi_, 0);
    for (int i = phi_ - 1; i > 0; --i) next[i] = row[i - 1];
    for (int i = 0; i < phi_; ++i) next[i] += top * table_.front()[i];
    row = next;
  }
}

const CycField& CycField::get(int conductor) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<CycField>> fields;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = fields[conductor];
  if (!slot) slot.reset(new CycField(conductor));
  return *slot;
}

CycNum::CycNum(const mpq_class& q) {
  mpq_class r(q);
  r.canonicalize();
  c_.assign(1, r.get_num());
  den_ = r.get_den();
}

CycNum::CycNum(const CycField& f, std::vector<mpq_class> coeffs) : f_(&f) {
  if (static_cast<int>(coeffs.size()) != f.degree()) {
    throw std::invalid_argument("coefficient vector length must equal the field degree");
  }
  den_ = 1;
  for (const auto& q : coeffs) den_ = lcm(den_, q.get_den());
  c_.resize(coeffs.size());
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    c_[i] = coeffs[i].get_num() * (den_ / coeffs[i].get_den());
  }
  normalize();
}

CycNum CycNum::zero(const CycField* f) {
  CycNum r;
  if (f) {
    r.f_ = f;
    r.c_.assign(f->degree(), 0);
  }
  return r;
}

CycNum CycNum::one(const CycField* f) {
  CycNum r = zero(f);
  r.c_[0] = 1;
  return r;
}

CycNum CycNum::rational(const mpz_class& num, const mpz_class& den) {
  mpq_class q(num, den);
  q.canonicalize();
  return CycNum(q);
}

bool CycNum::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const mpz_class& v) { return v == 0; });
}

bool CycNum::is_one() const { return is_rational() && c_[0] == 1 && den_ == 1; }

bool CycNum::is_rational() const {
  return std::all_of(c_.begin() + 1, c_.end(), [](const mpz_class& v) { return v == 0; });
}

mpq_class CycNum::rational_value() const {
  mpq_class q(c_[0], den_);
  q.canonicalize();
  return q;
}

mpq_class CycNum::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(c_.size())) return 0;
  mpq_class q(c_[k], den_);
  q.canonicalize();
  return q;
}

void CycNum::normalize() {
  if (den_ < 0) {
    den_ = -den_;
    for (auto& v : c_) v = -v;
  }
  mpz_class g = den_;
  for (const auto& v : c_) {
    if (g == 1) break;
    if (v != 0) g = gcd(g, v);
  }
  if (is_zero()) {
    den_ = 1;
    return;
  }
  if (g != 1) {
    den_ /= g;
    for (auto& v : c_) v /= g;
  }
}

const CycField* CycNum::common(const CycNum& a, const CycNum& b) {
  if (a.f_ && b.f_ && a.f_ != b.f_) {
    throw FieldMismatch("mixing Q(zeta_" + std::to_string(a.f_->conductor()) + ") and Q(zeta_" +
                        std::to_string(b.f_->conductor()) + ")");
  }
  return a.f_ ? a.f_ : b.f_;
}

CycNum CycNum::in_field(const CycField& f) const {
  if (f_ == &f) return *this;
  if (f_) throw FieldMismatch("element already lives in another cyclotomic field");
  CycNum r = *this;
  r.f_ = &f;
  r.c_.resize(f.degree(), 0);
  return r;
}

CycNum CycNum::operator-() const {
  CycNum r = *this;
  for (auto& v : r.c_) v = -v;
  return r;
}

CycNum& CycNum::operator+=(const CycNum& o) {
  const CycField* f = common(*this, o);
  if (f && !f_) *this = in_field(*f);
  const std::size_t n = c_.size();
  if (den_ == o.den_) {
    for (std::size_t i = 0; i < o.c_.size() && i < n; ++i) c_[i] += o.c_[i];
  } else {
    for (auto& v : c_) v *= o.den_;
    for (std::size_t i = 0; i < o.c_.size() && i < n; ++i) c_[i] += o.c_[i] * den_;
    den_ *= o.den_;
  }
  normalize();
  return *this;
}

CycNum& CycNum::operator-=(const CycNum& o) { return *this += -o; }

CycNum& CycNum::operator*=(const CycNum& o) {
  const CycField* f = common(*this, o);
  if (!f) {
    c_[0] *= o.c_[0];
    den_ *= o.den_;
    normalize();
    return *this;
  }
  if (o.is_rational()) {
    for (auto& v : c_) v *= o.c_[0];
    den_ *= o.den_;
    if (!f_) *this = in_field(*f);
    normalize();
    return *this;
  }
  if (is_rational()) {
    CycNum r = o;
    for (auto& v : r.c_) v *= c_[0];
    r.den_ *= den_;
    r.normalize();
    *this = std::move(r);
    return *this;
  }
  const int n = f->conductor();
  const int d = f->degree();
  std::vector<mpz_class> acc(n, 0);
  for (int i = 0; i < d; ++i) {
    if (c_[i] == 0) continue;
    for (int j = 0; j < d; ++j) {
      if (o.c_[j] == 0) continue;
      acc[(i + j) % n] += c_[i] * o.c_[j];
    }
  }
  for (int k = d; k < n; ++k) {
    if (acc[k] == 0) continue;
    const auto& row = f->reduction_row(k);
    for (int i = 0; i < d; ++i) {
      if (row[i] != 0) acc[i] += acc[k] * row[i];
    }
  }
  acc.resize(d);
  c_ = std::move(acc);
  den_ *= o.den_;
  normalize();
  return *this;
}

CycNum& CycNum::operator/=(const CycNum& o) { return *this *= o.inv(); }

bool operator==(const CycNum& a, const CycNum& b) {
  CycNum::common(a, b);
  if (a.den_ != b.den_) return false;
  const std::size_t n = std::max(a.c_.size(), b.c_.size());
  static const mpz_class kZero = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const mpz_class& x = i < a.c_.size() ? a.c_[i] : kZero;
    const mpz_class& y = i < b.c_.size() ? b.c_[i] : kZero;
    if (x != y) return false;
  }
  return true;
}

CycNum CycNum::galois(int k) const {
  if (!f_ || is_rational()) return *this;
  const int n = f_->conductor();
  if (std::gcd(k, n) != 1) throw std::invalid_argument("Galois exponent must be coprime to N");
  std::vector<mpz_class> acc(n, 0);
  for (int i = 0; i < f_->degree(); ++i) {
    if (c_[i] != 0) acc[mod(static_cast<long>(i) * k, n)] += c_[i];
  }
  const int d = f_->degree();
  for (int j = d; j < n; ++j) {
    if (acc[j] == 0) continue;
    const auto& row = f_->reduction_row(j);
    for (int i = 0; i < d; ++i) {
      if (row[i] != 0) acc[i] += acc[j] * row[i];
    }
  }
  acc.resize(d);
  CycNum r = *this;
  r.c_ = std::move(acc);
  r.normalize();
  return r;
}

CycNum CycNum::conj() const {
  if (!f_) return *this;
  return galois(f_->conductor() - 1);
}

// a^{-1} = (product of the nontrivial conjugates) / norm(a).
CycNum CycNum::inv() const {
  if (is_zero()) throw DivisionByZero("inverse of zero in a cyclotomic field");
  if (is_rational()) {
    CycNum r = *this;
    std::swap(r.c_[0], r.den_);
    r.normalize();
    return r;
  }
  const int n = f_->conductor();
  CycNum p = one(f_);
  for (int k = 2; k < n; ++k) {
    if (std::gcd(k, n) == 1) p *= galois(k);
  }
  CycNum norm = *this * p;
  if (!norm.is_rational()) throw std::logic_error("norm of a cyclotomic number is not rational");
  CycNum scale(1 / norm.rational_value());
  return p * scale;
}

CycNum CycNum::pow(long e) const {
  if (e < 0) return inv().pow(-e);
  CycNum r = one(f_), b = *this;
  while (e > 0) {
    if (e & 1) r *= b;
    e >>= 1;
    if (e > 0) b *= b;
  }
  return r;
}

std::size_t CycNum::hash() const {
  std::size_t h = std::hash<std::string>{}(den_.get_str(16));
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    std::size_t v = std::hash<std::string>{}(c_[i].get_str(16)) + 0x9e3779b97f4a7c15ULL * (i + 1);
    h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

std::string CycNum::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (int k = static_cast<int>(c_.size()) - 1; k >= 0; --k) {
    if (c_[k] == 0) continue;
    mpq_class q(c_[k], den_);
    q.canonicalize();
    const bool neg = q < 0;
    if (neg) q = -q;
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    if (k == 0) {
      os << q.get_str();
      continue;
    }
    if (q != 1) os << q.get_str() << "*";
    os << "z";
    if (k > 1) os << "^" << k;
  }
  if (first) return "0";
  return os.str();
}

CycNum root_of_unity(const CycField& f, long k) {
  const int n = f.conductor();
  const int e = mod(k, n);
  if (e < f.degree()) {
    std::vector<mpq_class> c(f.degree(), 0);
    c[e] = 1;
    return CycNum(f, c);
  }
  const auto& row = f.reduction_row(e);
  std::vector<mpq_class> c(row.begin(), row.end());
  return CycNum(f, c);
}

namespace {

// sqrt(p*) for an odd prime p dividing N, where p* = (-1)^((p-1)/2) p.
CycNum gauss_sum(const CycField& f, long p) {
  const int step = f.conductor() / static_cast<int>(p);
  CycNum g = CycNum::zero(&f);
  for (long a = 1; a < p; ++a) g += CycNum(legendre(a, p)) * root_of_unity(f, a * step);
  return g;
}

}  // namespace

std::optional<CycNum> sqrt_rational(const CycField& f, const mpq_class& q) {
  if (q == 0) return CycNum::zero(&f);
  const int n = f.conductor();
  mpz_class m = abs(q.get_num()) * q.get_den();
  if (!m.fits_slong_p()) return std::nullopt;
  long rest = m.get_si();
  long square = 1, free = 1;
  for (long p = 2; p * p <= rest; ++p) {
    while (rest % (p * p) == 0) {
      rest /= p * p;
      square *= p;
    }
    if (rest % p == 0) {
      rest /= p;
      free *= p;
    }
  }
  free *= rest;
  CycNum root = CycNum::one(&f);
  long sign = 1;
  for (long p : prime_factors(free)) {
    if (p == 2) {
      if (n % 8 != 0) return std::nullopt;
      root *= sqrt2(f);
    } else {
      if (n % p != 0) return std::nullopt;
      root *= gauss_sum(f, p);
      if (p % 4 == 3) sign = -sign;
    }
  }
  const long want = q > 0 ? 1 : -1;
  if (sign != want) {
    if (n % 4 != 0) return std::nullopt;
    root *= root_of_unity(f, n / 4);
  }
  root *= CycNum(mpq_class(square, q.get_den()));
  if (root * root != CycNum(q).in_field(f)) throw std::logic_error("square root self-check failed");
  return root;
}

std::optional<CycNum> cyc_sqrt(const CycNum& a) {
  if (!a.field()) {
    const CycField& f = CycField::get(4);
    return sqrt_rational(f, a.rational_value());
  }
  const CycField& f = *a.field();
  const int n = f.conductor();
  for (int j = 0; j < n; j += 2) {
    CycNum c = a * root_of_unity(f, -j);
    if (!c.is_rational()) continue;
    auto s = sqrt_rational(f, c.rational_value());
    if (s) return *s * root_of_unity(f, j / 2);
  }
  return std::nullopt;
}

CycNum sqrt2(const CycField& f) {
  if (f.conductor() % 8 != 0) throw FieldMismatch("sqrt(2) needs 8 | N");
  const int s = f.conductor() / 8;
  CycNum r = root_of_unity(f, s) + root_of_unity(f, -s);
  if (r * r != CycNum(2)) throw std::logic_error("sqrt(2) self-check failed");
  return r;
}

CycNum sqrt5(const CycField& f) {
  if (f.conductor() % 5 != 0) throw FieldMismatch("sqrt(5) needs 5 | N");
  const int s = f.conductor() / 5;
  CycNum r = CycNum(1) + CycNum(2) * root_of_unity(f, s) + CycNum(2) * root_of_unity(f, 4 * s);
  if (r * r != CycNum(5)) throw std::logic_error("sqrt(5) self-check failed");
  return r;
}

}  // namespace mckay
