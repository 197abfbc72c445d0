// Command-line front end. Talks to the library only through envord.h.

#include <cstdio>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "envord/envord.h"

namespace {

// Exit codes: 0 ok, 1 validation failure, 2 parse/usage error, 3 counterexample.
int exit_code(envord_status status) {
  switch (status) {
    case ENVORD_OK:
    case ENVORD_VALIDATION_FAILED:
    case ENVORD_PARSE_ERROR:
    case ENVORD_COUNTEREXAMPLE:
      return static_cast<int>(status);
    default:
      return 2;
  }
}

struct AlgebraDeleter {
  void operator()(envord_algebra* a) const { envord_algebra_free(a); }
};
using AlgebraHandle = std::unique_ptr<envord_algebra, AlgebraDeleter>;

struct StringDeleter {
  void operator()(char* s) const { envord_string_free(s); }
};
using OwnedString = std::unique_ptr<char, StringDeleter>;

int report_error(envord_status status) {
  std::cerr << "envord: " << envord_last_error() << "\n";
  return exit_code(status);
}

std::optional<AlgebraHandle> load(const std::string& path, int& code) {
  envord_algebra* raw = nullptr;
  const envord_status status = envord_algebra_load(path.c_str(), &raw);
  if (status != ENVORD_OK) {
    code = report_error(status);
    return std::nullopt;
  }
  return AlgebraHandle(raw);
}

// Prints `out` (if any) to stdout and maps the status.
int finish(envord_status status, char* out) {
  OwnedString owned(out);
  if (owned) std::cout << owned.get();
  if (status == ENVORD_OK) return 0;
  if (status == ENVORD_VALIDATION_FAILED && owned) return 1;
  if (status == ENVORD_COUNTEREXAMPLE && owned) return 3;
  return report_error(status);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Normal ordering in universal enveloping algebras of split Lie algebras"};
  app.require_subcommand(1);

  std::string file;
  std::string expr;
  bool no_oracle = false;
  std::vector<std::string> order;

  auto* validate = app.add_subcommand("validate", "Check the Lie axioms and the split");
  validate->add_option("file", file, "Algebra description")->required();

  auto* normal = app.add_subcommand("normal-order", "Normal-ordered form in U(g1) (x) U(g2)");
  normal->add_option("file", file, "Algebra description")->required();
  normal->add_option("--expr", expr, "Element of U(g)")->required();
  normal->add_flag("--no-oracle", no_oracle, "Skip the straightening cross-check");

  auto* straight = app.add_subcommand("straighten", "PBW canonical form under a basis order");
  straight->add_option("file", file, "Algebra description")->required();
  straight->add_option("--expr", expr, "Element of U(g)")->required();
  straight->add_option("--order", order, "Every basis name, smallest first");

  bool builtin = false;
  std::uint64_t seed = 42;
  int cases = 100;
  int max_degree = 4;
  std::string props;
  std::string rings;
  auto* check = app.add_subcommand("check", "Run the property suite");
  check->add_option("file", file, "Algebra description");
  check->add_flag("--builtin", builtin, "Use the builtin example registry");
  check->add_option("--seed", seed, "Random seed");
  check->add_option("--cases", cases, "Cases per property");
  check->add_option("--max-deg", max_degree, "Word degree bound");
  check->add_option("--props", props, "Comma-separated property names");
  check->add_option("--rings", rings, "Comma-separated ring descriptors to keep");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  int code = 0;
  if (*validate) {
    auto alg = load(file, code);
    if (!alg) return code;
    char* out = nullptr;
    const envord_status status = envord_validate(alg->get(), &out);
    return finish(status, out);
  }

  if (*normal) {
    auto alg = load(file, code);
    if (!alg) return code;
    char* out = nullptr;
    const envord_status status = envord_normal_order(alg->get(), expr.c_str(), no_oracle ? 0 : 1, &out);
    return finish(status, out);
  }

  if (*straight) {
    auto alg = load(file, code);
    if (!alg) return code;
    std::string joined;
    for (const auto& name : order) joined += name + " ";
    char* out = nullptr;
    const envord_status status =
        envord_straighten(alg->get(), expr.c_str(), order.empty() ? nullptr : joined.c_str(), &out);
    return finish(status, out);
  }

  if (*check) {
    if (builtin == !file.empty()) {
      std::cerr << "envord: check needs exactly one of <file> or --builtin\n";
      return 2;
    }
    envord_suite_config cfg;
    envord_suite_config_init(&cfg);
    cfg.seed = seed;
    cfg.cases = cases;
    cfg.max_degree = max_degree;
    cfg.properties = props.c_str();
    cfg.rings = rings.c_str();
    std::optional<AlgebraHandle> alg;
    if (!builtin) {
      alg = load(file, code);
      if (!alg) return code;
    }
    char* out = nullptr;
    const envord_status status = envord_check(alg ? alg->get() : nullptr, &cfg, &out);
    return finish(status, out);
  }
  return 2;
}
