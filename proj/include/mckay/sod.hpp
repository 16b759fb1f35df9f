#ifndef MCKAY_SOD_HPP
#define MCKAY_SOD_HPP

#include <string>
#include <utility>
#include <vector>

#include "mckay/hilb.hpp"

namespace mckay {

class SodError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SODCounts {
  long r = 0;  // branch components
  long P = 0;  // pointwise-fixed exceptional curves
  long C = 0;  // exceptional curves
  long X = 0;  // exchanged pairs
  long n = 0;  // exceptional objects, 2P + C - X
  long total() const { return n + r + 1; }
};

// Counts from per-curve classifications; throws SodError when the exchange pairs are inconsistent.
SODCounts sod_counts(long r, const std::vector<std::pair<std::string, CurveActionResult>>& results);
// Cyclic-quotient counts for G(m,m,2): C nontrivial H-irreps, X pairs of non-real ones, P = 0.
SODCounts gmm2_counts(const CharacterTable& h_table, long r);
bool theorem_a_check(const SODCounts& c, long class_count);
bool corollary_b_check(long reflection_class_count, long r);
// "theorem_a: 6+1+1=8"
std::string theorem_a_text(const SODCounts& c, long class_count);

}  // namespace mckay

#endif
