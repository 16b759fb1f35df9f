#include "mckay/poly.hpp"

#include <sstream>
#include <stdexcept>

namespace mckay {

Mat2 Mat2::identity() { return {CycNum(1), CycNum(0), CycNum(0), CycNum(1)}; }

Mat2 Mat2::inverse() const {
  CycNum di = det().inv();
  return {d * di, -b * di, -c * di, a * di};
}

bool Mat2::is_identity() const { return a.is_one() && b.is_zero() && c.is_zero() && d.is_one(); }

std::size_t Mat2::hash() const {
  std::size_t h = a.hash();
  for (const CycNum* v : {&b, &c, &d}) h = h * 1000003u ^ v->hash();
  return h;
}

std::string Mat2::to_string() const {
  return "[[" + a.to_string() + ", " + b.to_string() + "], [" + c.to_string() + ", " + d.to_string() + "]]";
}

Mat2 operator*(const Mat2& x, const Mat2& y) {
  return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
}

Poly::Poly(const CycNum& c) {
  if (!c.is_zero()) terms_.emplace(Monomial{}, c);
}

Poly Poly::x() { return monomial({1, 0, 0}); }
Poly Poly::y() { return monomial({0, 1, 0}); }
Poly Poly::t() { return monomial({0, 0, 1}); }

Poly Poly::monomial(const Monomial& m, const CycNum& c) {
  Poly p;
  p.add_term(m, c);
  return p;
}

bool Poly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.degree() == 0);
}

CycNum Poly::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? CycNum(0) : it->second;
}

int Poly::degree() const { return terms_.empty() ? -1 : terms_.begin()->first.degree(); }

int Poly::xy_degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, m.xy_degree());
  return d;
}

bool Poly::is_homogeneous() const {
  if (terms_.empty()) return true;
  const int d = terms_.begin()->first.degree();
  for (const auto& [m, c] : terms_) {
    if (m.degree() != d) return false;
  }
  return true;
}

bool Poly::has_t() const {
  for (const auto& [m, c] : terms_) {
    if (m.et > 0) return true;
  }
  return false;
}

const CycField* Poly::field() const {
  for (const auto& [m, c] : terms_) {
    if (c.field()) return c.field();
  }
  return nullptr;
}

void Poly::add_term(const Monomial& m, const CycNum& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  Poly r;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      r.add_term({ma.ex + mb.ex, ma.ey + mb.ey, ma.et + mb.et}, ca * cb);
    }
  }
  return r;
}

Poly& Poly::operator*=(const Poly& o) { return *this = *this * o; }

Poly& Poly::operator*=(const CycNum& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= s;
  return *this;
}

bool operator==(const Poly& a, const Poly& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  auto it = b.terms_.begin();
  for (const auto& [m, c] : a.terms_) {
    if (!(it->first == m) || it->second != c) return false;
    ++it;
  }
  return true;
}

Poly Poly::pow(int e) const {
  if (e < 0) throw std::invalid_argument("negative polynomial power");
  Poly r(CycNum(1)), b = *this;
  while (e > 0) {
    if (e & 1) r *= b;
    e >>= 1;
    if (e > 0) b = b * b;
  }
  return r;
}

namespace {

std::string monomial_text(const Monomial& m) {
  std::string s;
  auto put = [&s](const char* v, int e) {
    if (e == 0) return;
    if (!s.empty()) s += "*";
    s += v;
    if (e > 1) s += "^" + std::to_string(e);
  };
  put("x", m.ex);
  put("y", m.ey);
  put("t", m.et);
  return s;
}

}  // namespace

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    const std::string mono = monomial_text(m);
    CycNum coef = c;
    bool neg = false;
    if (coef.is_rational() && coef.rational_value() < 0) {
      neg = true;
      coef = -coef;
    }
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    if (mono.empty()) {
      os << (coef.is_rational() ? coef.to_string() : "(" + coef.to_string() + ")");
    } else if (coef.is_one()) {
      os << mono;
    } else if (coef.is_rational()) {
      os << coef.to_string() << "*" << mono;
    } else {
      os << "(" << coef.to_string() << ")*" << mono;
    }
  }
  return os.str();
}

Poly act(const Mat2& g, const Poly& f) {
  if (f.is_zero()) return f;
  int mx = 0, my = 0;
  for (const auto& [m, c] : f.terms()) {
    mx = std::max(mx, m.ex);
    my = std::max(my, m.ey);
  }
  const Poly lx = Poly::monomial({1, 0, 0}, g.a) + Poly::monomial({0, 1, 0}, g.b);
  const Poly ly = Poly::monomial({1, 0, 0}, g.c) + Poly::monomial({0, 1, 0}, g.d);
  std::vector<Poly> px{Poly(CycNum(1))}, py{Poly(CycNum(1))};
  for (int i = 1; i <= mx; ++i) px.push_back(px.back() * lx);
  for (int i = 1; i <= my; ++i) py.push_back(py.back() * ly);
  Poly r;
  for (const auto& [m, c] : f.terms()) {
    Poly term = px[m.ex] * py[m.ey];
    for (const auto& [mm, cc] : term.terms()) r.add_term({mm.ex, mm.ey, m.et}, cc * c);
  }
  return r;
}

CycNum evaluate(const Poly& f, const CycNum& x0, const CycNum& y0, const CycNum& t0) {
  CycNum r(0);
  for (const auto& [m, c] : f.terms()) r += c * x0.pow(m.ex) * y0.pow(m.ey) * t0.pow(m.et);
  return r;
}

Poly homogeneous_part(const Poly& f, int d) {
  Poly r;
  for (const auto& [m, c] : f.terms()) {
    if (m.xy_degree() == d) r.add_term(m, c);
  }
  return r;
}

Poly compose(const Poly& f, const Poly& X, const Poly& Y) {
  int mx = 0, my = 0;
  for (const auto& [m, c] : f.terms()) {
    if (m.et > 0) throw std::invalid_argument("compose expects a polynomial in x and y");
    mx = std::max(mx, m.ex);
    my = std::max(my, m.ey);
  }
  std::vector<Poly> px{Poly(CycNum(1))}, py{Poly(CycNum(1))};
  for (int i = 1; i <= mx; ++i) px.push_back(px.back() * X);
  for (int i = 1; i <= my; ++i) py.push_back(py.back() * Y);
  Poly r;
  for (const auto& [m, c] : f.terms()) r += (px[m.ex] * py[m.ey]) * c;
  return r;
}

Poly galois(const Poly& f, int k) {
  Poly r;
  for (const auto& [m, c] : f.terms()) r.add_term(m, c.galois(k));
  return r;
}

std::vector<Monomial> monomials_of_degree(int d) {
  std::vector<Monomial> out;
  for (int i = d; i >= 0; --i) out.push_back({i, d - i, 0});
  return out;
}

std::vector<CycNum> to_dense(const Poly& f, const std::vector<Monomial>& basis) {
  std::vector<CycNum> v(basis.size(), CycNum(0));
  std::size_t found = 0;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    auto it = f.terms().find(basis[i]);
    if (it != f.terms().end()) {
      v[i] = it->second;
      ++found;
    }
  }
  if (found != f.size()) throw std::invalid_argument("polynomial has terms outside the monomial basis");
  return v;
}

}  // namespace mckay
