#include "envord/envord.h"

#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "envord/checks.hpp"
#include "envord/error.hpp"
#include "envord/format.hpp"
#include "envord/spec.hpp"

struct envord_algebra {
  std::string name;
  envord::AlgebraSpec spec;
  std::shared_ptr<const envord::LieAlgebra> algebra;
};

namespace {

using namespace envord;

thread_local std::string last_error;

envord_status fail(envord_status status, const std::string& message) {
  last_error = message;
  return status;
}

template <typename F>
envord_status guarded(F&& body) {
  last_error.clear();
  try {
    return body();
  } catch (const ParseError& e) {
    return fail(ENVORD_PARSE_ERROR, std::string("parse error at ") + e.what());
  } catch (const ValidationError& e) {
    return fail(ENVORD_VALIDATION_FAILED, e.what());
  } catch (const OracleMismatch& e) {
    return fail(ENVORD_COUNTEREXAMPLE, std::string("oracle mismatch: ") + e.what());
  } catch (const ConfigError& e) {
    return fail(ENVORD_INVALID_ARGUMENT, e.what());
  } catch (const Error& e) {
    return fail(ENVORD_INVALID_ARGUMENT, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(ENVORD_INVALID_ARGUMENT, e.what());
  } catch (const std::exception& e) {
    return fail(ENVORD_INTERNAL_ERROR, e.what());
  } catch (...) {
    return fail(ENVORD_INTERNAL_ERROR, "unknown error");
  }
}

char* to_c_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

envord_status null_argument() { return fail(ENVORD_INVALID_ARGUMENT, "null argument"); }

std::shared_ptr<const SplitDecomposition> require_split(const envord_algebra& alg) {
  if (!alg.spec.split) throw ConfigError("the algebra description declares no split");
  return SplitDecomposition::create(alg.algebra, alg.spec.split->first, alg.spec.split->second);
}

void require_valid(const envord_algebra& alg) {
  ValidationReport report = validate_algebra(*alg.algebra);
  if (!report.ok()) throw ValidationError("invalid Lie algebra:\n" + report.to_string());
}

std::vector<std::string> split_list(const char* text, char sep) {
  std::vector<std::string> out;
  if (!text) return out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, sep)) {
    const auto b = item.find_first_not_of(" \t");
    if (b == std::string::npos) continue;
    const auto e = item.find_last_not_of(" \t");
    out.push_back(item.substr(b, e - b + 1));
  }
  return out;
}

}  // namespace

extern "C" {

const char* envord_version(void) { return "1.0.0"; }

const char* envord_last_error(void) { return last_error.c_str(); }

void envord_string_free(char* s) { std::free(s); }

void envord_suite_config_init(envord_suite_config* cfg) {
  if (!cfg) return;
  const SuiteConfig defaults;
  cfg->seed = defaults.seed;
  cfg->cases = defaults.cases;
  cfg->max_degree = defaults.max_degree;
  cfg->properties = nullptr;
  cfg->rings = nullptr;
}

envord_status envord_algebra_parse(const char* text, const char* name, envord_algebra** out) {
  if (!text || !out) return null_argument();
  *out = nullptr;
  return guarded([&] {
    auto alg = std::make_unique<envord_algebra>();
    alg->name = name ? name : "algebra";
    alg->spec = parse_spec(text);
    alg->algebra = alg->spec.build_algebra();
    *out = alg.release();
    return ENVORD_OK;
  });
}

envord_status envord_algebra_load(const char* path, envord_algebra** out) {
  if (!path || !out) return null_argument();
  *out = nullptr;
  std::ifstream in(path, std::ios::binary);
  if (!in) return fail(ENVORD_IO_ERROR, std::string("cannot open ") + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  const std::string stem = std::filesystem::path(path).stem().string();
  const envord_status status = envord_algebra_parse(buffer.str().c_str(), stem.c_str(), out);
  if (status == ENVORD_PARSE_ERROR) last_error = std::string(path) + ": " + last_error;
  return status;
}

void envord_algebra_free(envord_algebra* alg) { delete alg; }

size_t envord_algebra_dimension(const envord_algebra* alg) { return alg ? alg->algebra->dimension() : 0; }

envord_status envord_algebra_print(const envord_algebra* alg, char** out) {
  if (!alg || !out) return null_argument();
  return guarded([&] {
    *out = to_c_string(print_spec(alg->spec));
    return ENVORD_OK;
  });
}

envord_status envord_validate(const envord_algebra* alg, char** report) {
  if (!alg || !report) return null_argument();
  *report = nullptr;
  return guarded([&] {
    const ValidationReport va = validate_algebra(*alg->algebra);
    std::string text;
    auto section = [&](const char* title, const ValidationReport& r) {
      if (r.ok()) {
        text += std::string(title) + ": ok\n";
        return;
      }
      text += std::string(title) + ": " + std::to_string(r.violations.size()) + " violation(s)\n";
      for (const auto& v : r.violations) text += "  " + v.message + "\n";
    };
    section("algebra", va);
    bool ok = va.ok();
    if (alg->spec.split) {
      const ValidationReport vs = validate_split(*alg->algebra, alg->spec.split->first, alg->spec.split->second);
      section("split", vs);
      ok = ok && vs.ok();
    } else {
      text += "split: none declared\n";
    }
    *report = to_c_string(text);
    return ok ? ENVORD_OK : ENVORD_VALIDATION_FAILED;
  });
}

envord_status envord_normal_order(const envord_algebra* alg, const char* expr, int cross_check, char** out) {
  if (!alg || !expr || !out) return null_argument();
  *out = nullptr;
  return guarded([&] {
    require_valid(*alg);
    const ActionContext ctx(require_split(*alg));
    const EnvElement u = parse_expr(expr, *alg->algebra);
    *out = to_c_string(format_state_lines(ctx.normal_order(u, cross_check != 0)));
    return ENVORD_OK;
  });
}

envord_status envord_straighten(const envord_algebra* alg, const char* expr, const char* order, char** out) {
  if (!alg || !expr || !out) return null_argument();
  *out = nullptr;
  return guarded([&] {
    require_valid(*alg);
    const LieAlgebra& lie = *alg->algebra;
    BasisOrder basis_order = BasisOrder::declaration(lie.dimension());
    if (order) {
      std::vector<BasisIndex> seq;
      std::istringstream in(order);
      std::string name;
      while (in >> name) {
        auto idx = lie.index_of(name);
        if (!idx) throw ConfigError("unknown basis name in order: " + name);
        seq.push_back(*idx);
      }
      basis_order = BasisOrder::from_sequence(seq, lie.dimension());
    }
    const EnvElement u = parse_expr(expr, lie);
    *out = to_c_string(format_env_lines(straighten(u, basis_order)));
    return ENVORD_OK;
  });
}

envord_status envord_check(const envord_algebra* alg, const envord_suite_config* cfg, char** report) {
  if (!cfg || !report) return null_argument();
  *report = nullptr;
  return guarded([&] {
    SuiteConfig config;
    config.seed = cfg->seed;
    config.cases = cfg->cases;
    config.max_degree = cfg->max_degree;
    config.rings = split_list(cfg->rings, ',');
    for (const auto& name : split_list(cfg->properties, ',')) config.properties.insert(parse_property(name));

    ExampleRegistry registry;
    if (alg) {
      if (!alg->spec.split) throw ConfigError("the algebra description declares no split");
      registry.add({alg->name, alg->algebra, alg->spec.split->first, alg->spec.split->second, nullptr});
    } else {
      registry = builtin_examples();
    }
    const SuiteReport result = run_suite(config, registry);
    *report = to_c_string(result.render());
    if (!result.all_valid()) return ENVORD_VALIDATION_FAILED;
    return result.all_passed() ? ENVORD_OK : ENVORD_COUNTEREXAMPLE;
  });
}

}  // extern "C"
