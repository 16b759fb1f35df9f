#ifndef MCKAY_VERIFY_HPP
#define MCKAY_VERIFY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mckay/hilb.hpp"
#include "mckay/sod.hpp"

namespace mckay {

struct CheckRecord {
  std::string id;
  std::string anchor;
  bool pass = false;
  std::string detail;
};

struct Report {
  std::string group;
  std::vector<CheckRecord> checks;
  long elapsed_ms = 0;
  std::size_t passed() const;
  std::size_t failed() const;
  // One "PASS  id  detail" line per check and a closing count line; no timing, so reruns are byte-identical.
  std::string text() const;
  std::string json() const;
};

// (key, m) pairs for a --group selector; m = 0 for unparametrised cases. An absent m sweeps 3..6.
std::vector<std::pair<std::string, int>> selected_cases(const std::string& group, std::optional<int> m);

// Appends the checks of one case to `out`.
void verify_case(const std::string& key, int m, std::uint64_t seed, Report& out);
Report run_verify(const std::string& group, std::optional<int> m, std::uint64_t seed);

// Per-curve classification lines, "E(rho_4): pointwise-fixed", with witnesses; `ok` turns false on a mismatch.
std::string fixed_locus_text(const HilbEngine& e, bool& ok);
std::string case_json(const GroupCase& c);
// Check id fragment for a curve label: rho_1' -> rho1p.
std::string label_id(const std::string& label);

}  // namespace mckay

#endif
