#ifndef MCKAY_GROUPS_HPP
#define MCKAY_GROUPS_HPP

#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "mckay/poly.hpp"

namespace mckay {

class ClosureOverflow : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ConjClasses {
  std::vector<std::vector<int>> classes;  // element indices, sorted
  std::vector<int> reps;                  // smallest index of each class
  std::vector<int> class_of;              // element index -> class index
  std::size_t size() const { return classes.size(); }
};

class FiniteMatrixGroup {
 public:
  // Breadth-first closure; element 0 is the identity and element i > 0 equals
  // generator(word_gen(i)) * element(word_parent(i)).
  static FiniteMatrixGroup closure(const std::vector<Mat2>& gens, std::string name, std::size_t cap = 10000);

  const std::string& name() const { return name_; }
  std::size_t order() const { return elems_.size(); }
  const Mat2& element(int i) const { return elems_[i]; }
  const std::vector<Mat2>& elements() const { return elems_; }
  const std::vector<Mat2>& generator_matrices() const { return gens_; }
  int word_parent(int i) const { return parent_[i]; }
  int word_gen(int i) const { return via_[i]; }
  // -1 when absent.
  int index_of(const Mat2& m) const;
  bool contains(const Mat2& m) const { return index_of(m) >= 0; }
  int mul(int i, int j) const;
  int inverse(int i) const { return inv_[i]; }
  int element_order(int i) const;
  int exponent() const;
  const CycField* field() const;

 private:
  std::string name_;
  std::vector<Mat2> gens_;
  std::vector<Mat2> elems_;
  std::vector<int> parent_;
  std::vector<int> via_;
  std::vector<int> inv_;
  std::unordered_map<Mat2, int, Mat2Hash> index_;
};

// Elements of determinant one, regenerated from a greedily chosen generating set.
FiniteMatrixGroup det_one_subgroup(const FiniteMatrixGroup& g);
// Classes ordered by (element order, class size, smallest element index).
ConjClasses conjugacy_classes(const FiniteMatrixGroup& g);
bool is_reflection(const Mat2& m);
int reflection_classes(const FiniteMatrixGroup& g, const ConjClasses& cc);
std::vector<int> center(const FiniteMatrixGroup& g);

}  // namespace mckay

#endif
