#include "mckay/sod.hpp"

#include <map>

namespace mckay {

SODCounts sod_counts(long r, const std::vector<std::pair<std::string, CurveActionResult>>& results) {
  SODCounts c;
  c.r = r;
  c.C = static_cast<long>(results.size());
  std::map<std::string, std::string> partner;
  for (const auto& [label, res] : results) {
    switch (res.kind) {
      case CurveActionResult::Kind::PointwiseFixed:
        ++c.P;
        break;
      case CurveActionResult::Kind::ExchangedWith:
        if (res.partner == label) throw SodError(label + " is exchanged with itself");
        partner[label] = res.partner;
        break;
      case CurveActionResult::Kind::Involution:
        break;
    }
  }
  for (const auto& [a, b] : partner) {
    auto it = partner.find(b);
    if (it == partner.end() || it->second != a) throw SodError("exchange of " + a + " and " + b + " is not mutual");
  }
  c.X = static_cast<long>(partner.size() / 2);
  c.n = 2 * c.P + c.C - c.X;
  return c;
}

SODCounts gmm2_counts(const CharacterTable& h_table, long r) {
  SODCounts c;
  c.r = r;
  c.C = static_cast<long>(h_table.size()) - 1;
  long nonreal = 0;
  for (std::size_t i = 1; i < h_table.size(); ++i) {
    if (!is_real_valued(h_table.chars[i])) ++nonreal;
  }
  c.X = nonreal / 2;
  c.n = 2 * c.P + c.C - c.X;
  return c;
}

bool theorem_a_check(const SODCounts& c, long class_count) { return c.total() == class_count; }

bool corollary_b_check(long reflection_class_count, long r) { return reflection_class_count == r; }

std::string theorem_a_text(const SODCounts& c, long class_count) {
  return "theorem_a: " + std::to_string(c.n) + "+" + std::to_string(c.r) + "+1=" + std::to_string(c.total()) +
         (c.total() == class_count ? "" : " (classes: " + std::to_string(class_count) + ")");
}

}  // namespace mckay
