#ifndef MCKAY_HILB_HPP
#define MCKAY_HILB_HPP

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "mckay/catalog.hpp"
#include "mckay/linalg.hpp"
#include "mckay/reps.hpp"

namespace mckay {

class HilbError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class Quotient;

// Linear span of polynomials, kept as a fully reduced echelon keyed by leading monomial.
// With a quotient attached, every element is first replaced by its normal form.
class Span {
 public:
  Span() = default;
  explicit Span(const Quotient* q) : q_(q) {}
  Span(const Quotient* q, const std::vector<Poly>& gens);

  bool add(const Poly& p);
  Poly reduce(const Poly& p) const;  // remainder modulo the span
  bool contains(const Poly& p) const { return reduce(p).is_zero(); }
  bool contains(const Span& s) const;
  std::size_t dim() const { return rows_.size(); }
  std::vector<Poly> basis() const;
  // Coordinates against basis(); p must lie in the span.
  Vec coords(const Poly& p) const;
  Poly from_coords(const Vec& v) const;
  const Quotient* quotient() const { return q_; }
  Span operator+(const Span& o) const;
  friend bool operator==(const Span& a, const Span& b) { return a.dim() == b.dim() && a.contains(b); }
  friend bool operator!=(const Span& a, const Span& b) { return !(a == b); }
  std::string to_string() const;

 private:
  Poly normal(const Poly& p) const;
  const Quotient* q_ = nullptr;
  std::map<Monomial, Poly, MonomialOrder> rows_;
};

// Normal forms in C[x,y] / (f1, f2, f3), computed degree by degree.
class Quotient {
 public:
  Quotient() = default;
  explicit Quotient(std::vector<Poly> relations) : rel_(std::move(relations)) {}
  Poly reduce(const Poly& p) const;

 private:
  std::vector<Poly> rel_;
  mutable Span ideal_;
  mutable std::set<int> built_;
};

struct CurvePoint {
  std::string tag;
  std::vector<Poly> gens;
  Span span;
  std::vector<std::string> meets;  // curves this point also lies on
};

struct MobiusResult {
  Mat2 m;  // normalised so the first nonzero entry of the second row is 1
  bool scalar = false;
  std::vector<std::pair<CycNum, CycNum>> fixed_points;
  std::string text() const;
};

struct CurveActionResult {
  enum class Kind { ExchangedWith, PointwiseFixed, Involution };
  Kind kind = Kind::Involution;
  std::string partner;
  std::vector<CurvePoint> fixed;  // witnesses
  std::vector<CurvePoint> isolated;
  std::optional<MobiusResult> mobius;
  std::string text() const;  // pointwise-fixed, involution, exchanged-with E(...)
};

bool matches_expectation(const CurveActionResult& r, const ExpectedAction& e);

struct CurveData {
  const CurveSpec* spec = nullptr;
  int irrep = -1;     // H-irrep index
  int distance = -1;  // quiver distance to the center curve
  Span ambient;
  std::optional<Span> low, high;
  std::vector<CurvePoint> points;
  std::vector<std::string> problems;  // failed catalog conditions
};

struct FamilyCheck {
  std::string direction;
  std::size_t orbit_size = 0;
  std::vector<bool> contains;  // per generator
  bool ok() const;
};

struct IsolatedMatch {
  std::string curve;
  std::string point;
  int family = -1;  // index into GroupCase::families, -1 when unmatched
};

struct IsolatedResolution {
  std::vector<IsolatedMatch> matches;
  std::vector<std::string> problems;
  bool ok() const;
};

// Orbit {g (c, d)^T : g in h} of a direction; throws HilbError when two points coincide.
std::vector<std::pair<CycNum, CycNum>> orbit_scalars(const FiniteMatrixGroup& h, const CycNum& c, const CycNum& d);
// Whether gen + t h(x, y, t) vanishes on the orbit for some h of total degree deg(gen) - 1 in x, y, t.
bool family_limit_contains(const std::vector<std::pair<CycNum, CycNum>>& orbit, const Poly& gen);
// One answer per generator; generators of equal degree share a single elimination.
std::vector<bool> family_limit_contains(const std::vector<std::pair<CycNum, CycNum>>& orbit,
                                        const std::vector<Poly>& gens);

class HilbEngine {
 public:
  explicit HilbEngine(GroupCase c, std::uint64_t seed = 0);
  HilbEngine(const HilbEngine&) = delete;
  HilbEngine& operator=(const HilbEngine&) = delete;

  const GroupCase& group_case() const { return case_; }
  const FiniteMatrixGroup& G() const { return *g_; }
  const FiniteMatrixGroup& H() const { return *h_; }
  const CharacterTable& g_table() const;
  const CharacterTable& h_table() const;
  const Quiver& h_quiver() const;
  const Quotient& quotient() const { return quot_; }

  Span span(const std::vector<Poly>& gens) const { return Span(&quot_, gens); }
  bool is_H_submodule(const Span& s) const;
  // Character of h acting by f -> f(h^-1 v); throws HilbError on a non-submodule.
  ClassFunction character(const Span& s) const;
  std::vector<long> rep_type(const Span& s) const;
  // Index of the irrep when s is irreducible, else -1.
  int irreducible_type(const Span& s) const;
  Span alpha_image(const Span& s) const;
  Span isotypic_part(const Span& s, int irrep) const;

  const std::vector<CurveData>& curves() const;
  const CurveData& curve(const std::string& label) const;
  CurveActionResult classify(const std::string& label) const;
  std::optional<MobiusResult> mobius(const std::string& label) const;
  std::vector<std::string> failed_identities() const;
  bool alpha_squared_identity_on_ambients() const;

  std::vector<std::pair<CycNum, CycNum>> orbit(const FamilySpec& f) const;
  FamilyCheck check_family(const FamilySpec& f) const;
  IsolatedResolution isolated_point_resolution() const;

 private:
  Span point_span(const CurveParam& p, const CycNum& a, const CycNum& b) const;
  std::vector<Mat> generator_matrices(const Span& s) const;
  void build_curves() const;
  CurveData build_curve(const CurveSpec& cs) const;
  void add_point(CurveData& cd, CurvePoint p) const;
  std::vector<bool> cached_contains(const FamilySpec& f, const std::vector<Poly>& gens) const;

  GroupCase case_;
  std::uint64_t seed_;
  std::unique_ptr<FiniteMatrixGroup> g_, h_;
  std::vector<Mat2> h_gen_inverses_;
  Quotient quot_;
  mutable std::unique_ptr<CharacterTable> gt_, ht_;
  mutable std::unique_ptr<Quiver> hq_;
  mutable std::vector<CurveData> curves_;
  mutable bool curves_built_ = false;
  mutable std::map<std::string, CurveActionResult> classified_;
  mutable std::map<std::string, std::vector<std::pair<CycNum, CycNum>>> orbits_;
  mutable std::map<std::string, bool> limit_cache_;
};

}  // namespace mckay

#endif
