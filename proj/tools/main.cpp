// braidorder: expansions, order comparisons, conjugation actions,
// generalized-torsion certificates, and property suites.
//
// Exit codes: 0 success, 1 verification/property failure, 2 usage or parse
// error, 3 comparison undecided at the degree cap.

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <nlohmann/json.hpp>
#include <string>

#include "braidorder/braid.hpp"
#include "braidorder/knorder.hpp"
#include "braidorder/magnus.hpp"
#include "braidorder/order.hpp"
#include "braidorder/series.hpp"
#include "braidorder/suites.hpp"
#include "braidorder/surface.hpp"
#include "braidorder/words.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitUndecided = 3;

struct GlobalOptions {
  std::string format = "text";  // text | json
  bool json() const { return format == "json"; }
};

// Defaults may come from a JSON config file named by BRAIDORDER_CONFIG.
struct Defaults {
  int d0 = 4;
  int cap = 32;
  std::uint64_t seed = 7;
  long samples = 1000;
  int genus = 1;
  int strands = 4;
  std::string format = "text";
};

Defaults load_defaults() {
  Defaults d;
  const char* path = std::getenv("BRAIDORDER_CONFIG");
  if (!path) return d;
  std::ifstream in(path);
  if (!in) return d;
  nlohmann::json j;
  try {
    in >> j;
  } catch (...) {
    return d;
  }
  d.d0 = j.value("d0", d.d0);
  d.cap = j.value("cap", d.cap);
  d.seed = j.value("seed", d.seed);
  d.samples = j.value("samples", d.samples);
  d.genus = j.value("genus", d.genus);
  d.strands = j.value("strands", d.strands);
  d.format = j.value("format", d.format);
  return d;
}

int emit_verdict(const GlobalOptions& g, const std::string& kind,
                 braidorder::Ordering o) {
  if (g.json()) {
    nlohmann::json j{{"schema", "compare/1"},
                     {"kind", kind},
                     {"verdict", braidorder::to_string(o)}};
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << braidorder::to_string(o) << "\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  using namespace braidorder;

  const Defaults defaults = load_defaults();
  CLI::App app{"orders on free groups, surface groups, and surface pure "
               "braid kernels; generalized-torsion certificates for braids"};
  app.require_subcommand(1);

  GlobalOptions global;
  global.format = defaults.format;
  app.add_option("--format", global.format, "output format: text or json")
      ->check(CLI::IsMember({"text", "json"}));

  // expand
  auto* cmd_expand = app.add_subcommand("expand", "Magnus or surface-quotient "
                                                  "expansion of a word");
  std::string expand_word;
  bool expand_free = false, expand_surface = false;
  int expand_degree = 3;
  int expand_genus = defaults.genus;
  cmd_expand->add_option("word", expand_word, "word, e.g. \"x_1 x_2^-1\"")
      ->required();
  cmd_expand->add_flag("--free", expand_free, "free-group expansion");
  cmd_expand->add_flag("--surface", expand_surface,
                       "surface-quotient expansion");
  cmd_expand->add_option("-d,--degree", expand_degree, "truncation degree");
  cmd_expand->add_option("-g,--genus", expand_genus, "surface genus");

  // rules
  auto* cmd_rules = app.add_subcommand(
      "rules", "dump the surface reduction system as JSON");
  int rules_genus = 1, rules_degree = 2;
  cmd_rules->add_option("-g,--genus", rules_genus, "surface genus")->required();
  cmd_rules->add_option("-d,--degree", rules_degree, "truncation degree")
      ->required();

  // compare
  auto* cmd_compare =
      app.add_subcommand("compare", "compare two elements in a bi-order");
  std::string compare_kind, compare_a, compare_b;
  int compare_genus = defaults.genus;
  int compare_strands = 0;  // 0: infer from the elements
  int compare_d0 = defaults.d0, compare_cap = defaults.cap;
  cmd_compare->add_option("kind", compare_kind, "free | surface | kn")
      ->required()
      ->check(CLI::IsMember({"free", "surface", "kn"}));
  cmd_compare->add_option("a", compare_a, "first element")->required();
  cmd_compare->add_option("b", compare_b, "second element")->required();
  cmd_compare->add_option("-g,--genus", compare_genus, "surface genus");
  cmd_compare->add_option("-n,--strands", compare_strands,
                          "strand count for kn (default: inferred)");
  cmd_compare->add_option("--d0", compare_d0, "initial expansion degree");
  cmd_compare->add_option("--cap", compare_cap, "degree cap");

  // certify
  auto* cmd_certify = app.add_subcommand(
      "certify", "generalized-torsion certificate for s_i^2");
  int certify_n = 0, certify_i = 0;
  cmd_certify->add_option("-n,--strands", certify_n, "strand count (>= 2)")
      ->required();
  cmd_certify->add_option("-i,--index", certify_i, "generator index")
      ->required();

  // proptest
  auto* cmd_proptest =
      app.add_subcommand("proptest", "run a property suite");
  std::string suite;
  SuiteConfig suite_cfg;
  suite_cfg.seed = defaults.seed;
  suite_cfg.samples = defaults.samples;
  suite_cfg.genus = 2;
  suite_cfg.strands = defaults.strands;
  suite_cfg.params = CompareParams{defaults.d0, defaults.cap};
  cmd_proptest->add_option("suite", suite, "suite name (see --list)");
  bool list_suites = false;
  cmd_proptest->add_flag("--list", list_suites, "list suite names");
  cmd_proptest->add_option("--samples", suite_cfg.samples, "sample count");
  cmd_proptest->add_option("--seed", suite_cfg.seed, "random seed");
  cmd_proptest->add_option("-n,--strands", suite_cfg.strands, "strand count");
  cmd_proptest->add_option("-g,--genus", suite_cfg.genus, "surface genus");
  cmd_proptest->add_option("--d0", suite_cfg.params.initial_degree,
                           "initial expansion degree");
  cmd_proptest->add_option("--cap", suite_cfg.params.degree_cap, "degree cap");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*cmd_expand) {
      if (expand_free == expand_surface) {
        std::cerr << "expand: pass exactly one of --free / --surface\n";
        return kExitUsage;
      }
      Series s = Series::one(0);
      if (expand_free) {
        Word w = parse_word(expand_word, alphabets::free_x);
        s = magnus_expand(w, expand_degree);
      } else {
        SurfaceGroup S(expand_genus);
        SurfaceElem e = S.element(expand_word);
        s = S.expand(e, std::max(2, expand_degree));
      }
      std::cout << (global.json() ? to_json_text(s, 2) : to_text(s)) << "\n";
      return kExitOk;
    }

    if (*cmd_rules) {
      SurfaceGroup S(rules_genus);
      std::cout << S.reduction_system(std::max(2, rules_degree))
                       .to_json_text(2)
                << "\n";
      return kExitOk;
    }

    if (*cmd_compare) {
      CompareParams params{compare_d0, compare_cap};
      params.validate();
      if (compare_kind == "free") {
        Word a = parse_word(compare_a, alphabets::free_x);
        Word b = parse_word(compare_b, alphabets::free_x);
        return emit_verdict(global, "free", magnus_compare(a, b, {}, params));
      }
      if (compare_kind == "surface") {
        SurfaceGroup S(compare_genus);
        return emit_verdict(
            global, "surface",
            S.compare(S.element(compare_a), S.element(compare_b), params));
      }
      auto S = std::make_shared<const SurfaceGroup>(compare_genus);
      int n = compare_strands;
      if (n == 0) {
        // Infer the strand count from the largest second index in play.
        for (const std::string& text : {compare_a, compare_b}) {
          std::size_t pos = 0;
          while ((pos = text.find("f[", pos)) != std::string::npos) {
            std::size_t comma1 = text.find(',', pos);
            std::size_t comma2 = text.find(',', comma1 + 1);
            if (comma1 == std::string::npos || comma2 == std::string::npos)
              break;
            n = std::max(n, std::atoi(text.c_str() + comma1 + 1));
            pos = comma2;
          }
        }
        n = std::max(n, 2);
      }
      KnOrder K(n, S, params);
      KnElement a = K.parse_element(compare_a);
      KnElement b = K.parse_element(compare_b);
      return emit_verdict(global, "kn", K.kn_compare(a, b));
    }

    if (*cmd_certify) {
      GtCertificate cert = make_gt_certificate(certify_n, certify_i);
      std::cout << cert.to_json_text(2) << "\n";
      return cert.valid ? kExitOk : kExitFailure;
    }

    if (*cmd_proptest) {
      if (list_suites) {
        for (const auto& name : suite_names()) std::cout << name << "\n";
        return kExitOk;
      }
      if (suite.empty()) {
        std::cerr << "proptest: missing suite name (try --list)\n";
        return kExitUsage;
      }
      if (!is_suite_name(suite)) {
        std::cerr << "proptest: unknown suite '" << suite << "'\n";
        return kExitUsage;
      }
      SuiteResult result = run_suite(suite, suite_cfg);
      std::cout << result.to_json_text(2) << "\n";
      return result.passed ? kExitOk : kExitFailure;
    }
  } catch (const UndecidedAtCap& e) {
    std::cerr << e.what() << "\n";
    return kExitUndecided;
  } catch (const ParseError& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return kExitFailure;
  }
  return kExitUsage;
}
