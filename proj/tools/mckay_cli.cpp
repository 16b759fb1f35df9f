#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "mckay/verify.hpp"

namespace {

struct Options {
  std::string group;
  std::optional<int> m;
  std::string json_path;
  std::string format = "dot";
  bool sl2 = false;
  std::uint64_t seed = 0;
};

int usage(const std::string& msg) {
  std::cerr << "mckay: " << msg << "\n";
  return 2;
}

// Rejects selectors that cannot name a single case.
std::optional<std::string> single_case_error(const Options& o) {
  if (o.group == "all") return "--group all is only accepted by verify";
  if (mckay::needs_m(o.group) && !o.m) return "--m is required for --group " + o.group;
  return std::nullopt;
}

int cmd_verify(const Options& o) {
  const auto report = mckay::run_verify(o.group, o.m, o.seed);
  std::cout << report.text();
  if (!o.json_path.empty()) {
    std::ofstream out(o.json_path);
    if (!out) return usage("cannot write " + o.json_path);
    out << report.json();
  }
  return report.failed() == 0 ? 0 : 1;
}

int cmd_quiver(const Options& o) {
  mckay::HilbEngine e(mckay::get_case(o.group, o.m.value_or(0)), o.seed);
  const auto& c = e.group_case();
  const mckay::Quiver q = o.sl2 ? e.h_quiver() : mckay::mckay_quiver(e.g_table());
  const std::string title = o.sl2 ? c.name + "_SL2" : c.name;
  std::cout << (o.format == "dot" ? mckay::quiver_dot(q, title) : mckay::quiver_json(q, title));
  return 0;
}

int cmd_fixed_locus(const Options& o) {
  mckay::HilbEngine e(mckay::get_case(o.group, o.m.value_or(0)), o.seed);
  bool ok = true;
  std::cout << mckay::fixed_locus_text(e, ok);
  return ok ? 0 : 1;
}

int cmd_case_data(const Options& o) {
  std::cout << mckay::case_json(mckay::get_case(o.group, o.m.value_or(0)));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of reflection-group fixed loci and McKay data"};
  app.require_subcommand(1);
  Options o;
  const std::vector<std::string> groups{"gmm2", "g2mm2", "g12", "g13", "g22", "all"};

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--group", o.group, "case selector")->required()->check(CLI::IsMember(groups));
    sub->add_option("--m", o.m, "parameter m of G(m,m,2) and G(2m,m,2)")->check(CLI::Range(3, 12));
    sub->add_option("--seed", o.seed, "seed for character-table eigenspace splitting");
  };
  auto* verify = app.add_subcommand("verify", "run every check and print a report");
  add_common(verify);
  verify->add_option("--json", o.json_path, "also write the report as JSON");
  auto* quiver = app.add_subcommand("quiver", "print the McKay quiver");
  add_common(quiver);
  quiver->add_option("--format", o.format, "dot or json")->check(CLI::IsMember({"dot", "json"}));
  quiver->add_flag("--sl2", o.sl2, "use H = G ∩ SL2 instead of G");
  auto* fixed = app.add_subcommand("fixed-locus", "classify the action on each exceptional curve");
  add_common(fixed);
  auto* data = app.add_subcommand("case-data", "dump the parsed catalog entry as JSON");
  add_common(data);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (verify->parsed()) return cmd_verify(o);
    if (auto err = single_case_error(o)) return usage(*err);
    if (quiver->parsed()) return cmd_quiver(o);
    if (fixed->parsed()) return cmd_fixed_locus(o);
    return cmd_case_data(o);
  } catch (const mckay::CatalogError& e) {
    return usage(e.what());
  } catch (const std::exception& e) {
    std::cerr << "mckay: " << e.what() << "\n";
    return 1;
  }
}
