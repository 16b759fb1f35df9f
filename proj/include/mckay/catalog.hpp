#ifndef MCKAY_CATALOG_HPP
#define MCKAY_CATALOG_HPP

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "mckay/parse.hpp"
#include "mckay/poly.hpp"

namespace mckay {

class CatalogError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct VModule {
  std::string label;
  std::vector<Poly> gens;
};

enum class CurveRole { Endpoint, Inner, Center };

struct ExpectedAction {
  enum class Kind { Exchanged, PointwiseFixed, Involution };
  Kind kind = Kind::Involution;
  std::string partner;
};

// `lhs` under `matrix` equals `rhs`, sampled at several rational values of the formal scalars a, b.
// `transpose` selects the substitution x -> a x + c y, y -> b x + d y (written `MAT^T` in the catalog).
struct Identity {
  std::string matrix;
  bool transpose = false;
  std::string text;
  std::vector<std::pair<Poly, Poly>> samples;
};

// True when every sample of `id` holds under the named matrix of `c`.
struct GroupCase;
bool identity_holds(const GroupCase& c, const Identity& id);

// Points [a:b] of a curve given by generators a*U_j + b*V_j.
struct CurveParam {
  std::vector<Poly> u;
  std::vector<Poly> v;
  struct Meet {
    CycNum a, b;
    std::string curve;
  };
  std::vector<Meet> meets;
};

struct CurveSpec {
  std::string label;
  CurveRole role = CurveRole::Endpoint;
  int rep_dim = 0;
  std::optional<VModule> low;
  std::optional<VModule> high;
  std::vector<Poly> ambient;  // explicit ambient module, when it is not low + high
  std::string meet_low;
  std::string meet_high;
  std::optional<VModule> probe;
  std::vector<VModule> points;
  std::optional<CurveParam> param;
  std::vector<Identity> identities;
  ExpectedAction expect;
};

struct FamilySpec {
  std::string direction;  // source text, e.g. "(1, e)"
  CycNum c, d;
  std::vector<Poly> gens;
};

struct IsolatedSpec {
  std::string curve;
  std::vector<Poly> gens;
};

struct GroupCase {
  std::string key;   // gmm2, g2mm2, g12, g13, g22
  std::string name;  // G12, G(6,3,2), ...
  int m = 0;
  int conductor = 0;
  int coxeter = 0;
  bool count_only = false;
  const CycField* field = nullptr;
  std::map<std::string, Mat2> matrices;
  std::vector<std::string> g_gens;
  std::vector<std::string> h_gens;
  std::string alpha;
  Poly f1, f2, f3;
  Poly relation;  // q(u, v) with u -> x, v -> y
  CycNum unit;
  std::vector<Poly> factors;  // p(u, v) = -q = unit * prod(factors)
  std::vector<Identity> identities;
  std::vector<FamilySpec> families;
  std::vector<IsolatedSpec> isolated;
  std::vector<CurveSpec> curves;
  std::string quiver_h;
  long order_g = 0;
  long order_h = 0;
  long irreps = 0;
  long r = 0;
  long n = 0;
  std::optional<long> center_order;
  // Verbatim source of every parsed line, for case dumps.
  std::vector<std::pair<std::string, std::string>> source;

  std::vector<Mat2> g_matrices() const;
  std::vector<Mat2> h_matrices() const;
  const Mat2& alpha_matrix() const { return matrices.at(alpha); }
  const CurveSpec* curve(const std::string& label) const;
  std::string id() const;  // g12, g2mm2_m4, ...
};

// Case keys accepted by get_case.
const std::vector<std::string>& case_keys();
bool needs_m(const std::string& key);
// Loads from MCKAY_DATA_DIR/cases.dat unless `path` is given. m is required for gmm2 and g2mm2 (3 <= m <= 12).
GroupCase get_case(const std::string& key, int m = 0, const std::string& path = "");
std::string default_catalog_path();

// f3^2 - q(f1, f2); zero when the relation holds.
Poly relation_defect(const GroupCase& c);
bool verify_relation(const GroupCase& c);
// Checks unit * prod(factors) == -q and returns the factor count r; throws CatalogError on mismatch.
int verify_branch_factorization(const GroupCase& c);

std::string curve_role_name(CurveRole r);
std::string expected_action_text(const ExpectedAction& e);

}  // namespace mckay

#endif
