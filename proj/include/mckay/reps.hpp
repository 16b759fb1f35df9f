#ifndef MCKAY_REPS_HPP
#define MCKAY_REPS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mckay/groups.hpp"

namespace mckay {

struct ClassFunction {
  std::vector<CycNum> values;  // indexed by conjugacy class
};

struct CharacterTable {
  const FiniteMatrixGroup* group = nullptr;
  const CycField* field = nullptr;
  ConjClasses classes;
  std::vector<int> class_sizes;
  std::vector<int> inverse_class;
  std::vector<ClassFunction> chars;  // degree-sorted, trivial first
  std::vector<int> degrees;
  std::vector<std::string> names;
  std::size_t size() const { return chars.size(); }
  std::size_t order() const { return group->order(); }
};

// Dixon-Schneider: class-sum eigenvectors modulo a prime p = 1 (mod N), lifted to Q(zeta_N)
// through eigenvalue multiplicities on cyclic subgroups. Requires exponent(G) | N.
CharacterTable character_table(const FiniteMatrixGroup& g, const CycField& field, std::uint64_t seed = 0);

// (1/|G|) sum over classes of |C| a(C) conj(b(C)).
CycNum inner_product(const CharacterTable& t, const ClassFunction& a, const ClassFunction& b);
// Integer multiplicities of the irreducibles; throws when some inner product is not an integer.
std::vector<long> decompose(const CharacterTable& t, const ClassFunction& f);
ClassFunction natural_character(const CharacterTable& t);
ClassFunction product(const ClassFunction& a, const ClassFunction& b);
bool is_real_valued(const ClassFunction& f);
bool rows_orthonormal(const CharacterTable& t);
bool columns_orthogonal(const CharacterTable& t);

// Index of the linear character that is 1 on h and -1 off it.
int epsilon_character(const CharacterTable& gt, const FiniteMatrixGroup& h);
// G-class of each H-class.
std::vector<int> class_fusion(const CharacterTable& gt, const CharacterTable& ht);
ClassFunction induce(const CharacterTable& gt, const CharacterTable& ht, const ClassFunction& chi);
ClassFunction restrict_to(const CharacterTable& gt, const CharacterTable& ht, const ClassFunction& psi);

struct InductionReport {
  bool ok = true;
  std::vector<std::string> lines;
};
// Self-contragredient H-irreps induce to chi' + eps chi' with chi' != eps chi';
// the others induce irreducibly to an eps-fixed character that restricts to chi + conj(chi).
InductionReport verify_induction_pattern(const CharacterTable& gt, const CharacterTable& ht);

struct Quiver {
  std::vector<std::string> names;
  std::vector<int> dims;
  std::vector<std::vector<long>> adjacency;
  std::size_t size() const { return names.size(); }
};

// A[i][j] = <chi_nat chi_i, chi_j>.
Quiver mckay_quiver(const CharacterTable& t);
bool is_symmetric(const Quiver& q);
// Sum_j A[i][j] dim_j = 2 dim_i for every vertex.
bool null_vector_identity(const Quiver& q);
// "A<n>", "D<n>", "E6", "E7" or "E8" when the underlying graph is that affine diagram.
std::optional<std::string> affine_ade_type(const Quiver& q);
// Adjacency lists of the affine diagram of the given type.
std::vector<std::vector<int>> affine_template(const std::string& type);
bool same_tree(const std::vector<std::vector<int>>& a, const std::vector<std::vector<int>>& b);
std::string quiver_dot(const Quiver& q, const std::string& title);
std::string quiver_json(const Quiver& q, const std::string& title);

}  // namespace mckay

#endif
