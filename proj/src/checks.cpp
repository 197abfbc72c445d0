#include "envord/checks.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <numeric>

#include "envord/error.hpp"
#include "envord/format.hpp"

namespace envord {

// ---------------------------------------------------------------------------
// Generator

namespace {

std::uint64_t fnv1a(std::string_view text) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : text) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::mt19937_64 seeded(std::uint64_t seed, std::string_view stream, std::uint64_t index) {
  const std::uint64_t s = fnv1a(stream);
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(s),    static_cast<std::uint32_t>(s >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  return std::mt19937_64(seq);
}

std::vector<BasisIndex> all_indices(const LieAlgebra& alg) {
  std::vector<BasisIndex> out(alg.dimension());
  std::iota(out.begin(), out.end(), BasisIndex{0});
  return out;
}

}  // namespace

Generator::Generator(std::uint64_t seed, std::string_view stream, std::uint64_t index)
    : rng_(seeded(seed, stream, index)) {}

std::uint64_t Generator::below(std::uint64_t n) {
  // Rejection sampling keeps the stream identical across standard libraries.
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
  std::uint64_t x;
  do x = rng_();
  while (x >= limit);
  return x % n;
}

Scalar Generator::scalar(const Ring& ring) {
  long num = static_cast<long>(below(9)) + 1;
  if (below(2)) num = -num;
  if (ring.kind() != Ring::Kind::Rationals) return Scalar(ring, num);
  const long den = static_cast<long>(below(9)) + 1;
  return Scalar(ring, mpq_class(num, den));
}

int Generator::degree(int max_degree) {
  if (max_degree <= 0) return 0;
  // weight of degree d is max_degree + 2 - d
  const int total = (max_degree + 1) * (max_degree + 4) / 2;
  int pick = static_cast<int>(below(static_cast<std::uint64_t>(total)));
  for (int d = 0; d <= max_degree; ++d) {
    pick -= max_degree + 2 - d;
    if (pick < 0) return d;
  }
  return max_degree;
}

Word Generator::word(std::span<const BasisIndex> letters, int max_degree) {
  if (letters.empty()) return Word{};
  const int d = degree(max_degree);
  std::vector<Letter> out(d);
  for (auto& x : out) x = letters[below(letters.size())];
  return Word(std::move(out));
}

GVector Generator::vector(const LieAlgebra& alg) {
  GVector v = alg.zero_vector();
  for (BasisIndex i = 0; i < alg.dimension(); ++i)
    if (below(2)) v.set(i, scalar(alg.ring()));
  return v;
}

EnvElement Generator::env(const LieAlgebra& alg, int max_degree) {
  const auto letters = all_indices(alg);
  EnvElement u(alg);
  const auto terms = below(3) + 1;
  for (std::uint64_t t = 0; t < terms; ++t) u.add_term(word(letters, max_degree), scalar(alg.ring()));
  return u;
}

StateElement Generator::state(const SplitDecomposition& split, int max_degree) {
  const auto& p1 = split.part(Part::First);
  const auto& p2 = split.part(Part::Second);
  StateElement s(split);
  const auto terms = below(3) + 1;
  for (std::uint64_t t = 0; t < terms; ++t) {
    const int total = degree(max_degree);
    int left = p1.empty() ? 0 : p2.empty() ? total : static_cast<int>(below(total + 1));
    std::vector<Letter> l(left), r(total - left);
    for (auto& x : l) x = p1[below(p1.size())];
    for (auto& x : r) x = p2[below(p2.size())];
    s.add_term(Word(std::move(l)), Word(std::move(r)), scalar(split.algebra().ring()));
  }
  return s;
}

// ---------------------------------------------------------------------------
// Properties

namespace {

constexpr std::array<std::pair<Property, std::string_view>, 8> kPropertyNames{{
    {Property::Inverse, "inverse"},
    {Property::Oracle, "oracle"},
    {Property::LieAction, "lie-action"},
    {Property::Filtration, "filtration"},
    {Property::RightLinearity, "right-linearity"},
    {Property::MuCompat, "mu-compat"},
    {Property::WellDefined, "well-defined"},
    {Property::Linearity, "linearity"},
}};

// xy - yx - [x,y] as an element of T(g)
EnvElement relator(const LieAlgebra& alg, Letter x, Letter y) {
  const Scalar one = Scalar::one(alg.ring());
  EnvElement r(alg);
  r.add_term(Word{x, y}, one);
  r.add_term(Word{y, x}, -one);
  for (const auto& [k, c] : alg.bracket_basis(x, y)) r.add_term(Word{k}, -c);
  return r;
}

bool well_defined(const ActionContext& ctx, const Case& c) {
  const LieAlgebra& alg = ctx.algebra();
  const Word& xy = c.words[1];
  if (xy.degree() != 2) return true;
  const Letter x = xy[0];
  const Letter y = xy[1];

  // u' = u + c a (xy - yx - [x,y]) b, equal to u in U(g)
  const EnvElement& u = c.envs[0];
  const EnvElement u2 =
      u + c.scalars[0] * (EnvElement::word(alg, c.words[0]) * relator(alg, x, y) * EnvElement::word(alg, c.words[2]));
  if (!(ctx.section(u) == ctx.section(u2))) return false;

  // The action respects the same relation inside the left factor.
  const SplitDecomposition& split = ctx.split();
  const Word& a = c.words[4];
  const Word& b = c.words[5];
  const Word& m = c.words[3];
  const StateElement tensor = StateElement::pure(split, a + xy + b, m);
  StateElement quotient = StateElement::pure(split, a + Word{y, x} + b, m);
  for (const auto& [k, coeff] : alg.bracket_basis(x, y))
    quotient += StateElement::pure(split, a + Word{k} + b, m, coeff);
  const GVector& g = c.vectors[0];
  return state_eq(ctx.act(g, tensor), ctx.act(g, quotient));
}

bool linearity(const ActionContext& ctx, const Case& c) {
  const GVector& g = c.vectors[0];
  const GVector& h = c.vectors[1];
  const StateElement& s = c.states[0];
  const StateElement& t = c.states[1];
  const Scalar& a = c.scalars[0];
  const Scalar& b = c.scalars[1];
  const bool first = state_eq(ctx.act(a * g + b * h, s), a * ctx.act(g, s) + b * ctx.act(h, s));
  const bool second = state_eq(ctx.act(g, a * s + b * t), a * ctx.act(g, s) + b * ctx.act(g, t));
  return first && second;
}

bool evaluate(Property p, const ActionContext& ctx, const Case& c) {
  switch (p) {
    case Property::Inverse: {
      auto [left, right] = ctx.check_inverse(c.envs[0], c.states[0]);
      return left && right;
    }
    case Property::Oracle:
      return state_eq(ctx.section(c.envs[0]), oracle_normal_order(c.envs[0], ctx.split()));
    case Property::LieAction:
      return ctx.check_lie_action(c.vectors[0], c.vectors[1], c.states[0]);
    case Property::Filtration:
      return ctx.check_filtration(c.vectors[0], c.states[0]);
    case Property::RightLinearity:
      return ctx.check_right_linearity(c.vectors[0], c.words[0], c.words[1]);
    case Property::MuCompat:
      return ctx.check_mu_compat(c.vectors[0], c.states[0]);
    case Property::WellDefined:
      return well_defined(ctx, c);
    case Property::Linearity:
      return linearity(ctx, c);
  }
  return false;
}

EnvElement without_term(const EnvElement& u, std::size_t skip) {
  EnvElement out(u.algebra());
  std::size_t i = 0;
  for (const auto& [w, c] : u.terms())
    if (i++ != skip) out.add_term(w, c);
  return out;
}

EnvElement with_letter_dropped(const EnvElement& u, std::size_t term, std::size_t pos) {
  EnvElement out(u.algebra());
  std::size_t i = 0;
  for (const auto& [w, c] : u.terms()) {
    if (i++ == term)
      out.add_term(w.subword(0, pos) + w.subword(pos + 1, w.degree()), c);
    else
      out.add_term(w, c);
  }
  return out;
}

StateElement without_term(const StateElement& s, std::size_t skip) {
  StateElement out(s.split());
  std::size_t i = 0;
  for (const auto& [key, c] : s.terms())
    if (i++ != skip) out.add_term(key.first, key.second, c);
  return out;
}

StateElement with_letter_dropped(const StateElement& s, std::size_t term, bool left, std::size_t pos) {
  StateElement out(s.split());
  std::size_t i = 0;
  for (const auto& [key, c] : s.terms()) {
    Word l = key.first;
    Word r = key.second;
    if (i++ == term) {
      Word& w = left ? l : r;
      w = w.subword(0, pos) + w.subword(pos + 1, w.degree());
    }
    out.add_term(l, r, c);
  }
  return out;
}

// Calls visit(candidate) for every one-step simplification until it returns
// true.
void for_each_candidate(const Case& c, const std::function<bool(Case&)>& visit) {
  for (std::size_t e = 0; e < c.envs.size(); ++e) {
    const EnvElement& u = c.envs[e];
    for (std::size_t t = 0; t < u.size(); ++t) {
      Case next = c;
      next.envs[e] = without_term(u, t);
      if (visit(next)) return;
    }
    std::size_t t = 0;
    for (const auto& [w, coeff] : u.terms()) {
      for (std::size_t pos = 0; pos < w.degree(); ++pos) {
        Case next = c;
        next.envs[e] = with_letter_dropped(u, t, pos);
        if (visit(next)) return;
      }
      ++t;
    }
  }
  for (std::size_t k = 0; k < c.states.size(); ++k) {
    const StateElement& s = c.states[k];
    for (std::size_t t = 0; t < s.size(); ++t) {
      Case next = c;
      next.states[k] = without_term(s, t);
      if (visit(next)) return;
    }
    std::size_t t = 0;
    for (const auto& [key, coeff] : s.terms()) {
      for (int side = 0; side < 2; ++side) {
        const Word& w = side == 0 ? key.first : key.second;
        for (std::size_t pos = 0; pos < w.degree(); ++pos) {
          Case next = c;
          next.states[k] = with_letter_dropped(s, t, side == 0, pos);
          if (visit(next)) return;
        }
      }
      ++t;
    }
  }
  for (std::size_t k = 0; k < c.words.size(); ++k)
    for (std::size_t pos = 0; pos < c.words[k].degree(); ++pos) {
      Case next = c;
      next.words[k] = c.words[k].subword(0, pos) + c.words[k].subword(pos + 1, c.words[k].degree());
      if (visit(next)) return;
    }
  for (std::size_t k = 0; k < c.vectors.size(); ++k)
    for (const auto& [i, coeff] : c.vectors[k].sparse()) {
      Case next = c;
      next.vectors[k].set(i, Scalar::zero(coeff.ring()));
      if (visit(next)) return;
    }
}

}  // namespace

std::string_view property_name(Property p) {
  for (const auto& [prop, name] : kPropertyNames)
    if (prop == p) return name;
  return "?";
}

Property parse_property(std::string_view name) {
  for (const auto& [prop, pname] : kPropertyNames)
    if (pname == name) return prop;
  throw ConfigError("unknown property '" + std::string(name) + "'");
}

const std::vector<Property>& all_properties() {
  static const std::vector<Property> all = [] {
    std::vector<Property> out;
    for (const auto& [prop, name] : kPropertyNames) out.push_back(prop);
    return out;
  }();
  return all;
}

void SuiteConfig::validate() const {
  if (cases < 1) throw ConfigError("cases must be at least 1");
  if (max_degree < 0) throw ConfigError("max degree must be nonnegative");
  for (const auto& r : rings) make_ring(r);
}

std::variant<Word, StateElement, GVector> generate(GenerateKind kind, const SuiteConfig& cfg,
                                                    const ExampleEntry& entry, std::uint64_t index) {
  const char* stream = kind == GenerateKind::Word ? "word" : kind == GenerateKind::State ? "state" : "vector";
  Generator gen(cfg.seed, entry.name + "/" + stream, index);
  switch (kind) {
    case GenerateKind::Word:
      return gen.word(all_indices(*entry.algebra), cfg.max_degree);
    case GenerateKind::Vector:
      return gen.vector(*entry.algebra);
    case GenerateKind::State:
      if (!entry.split) throw ValidationError("entry " + entry.name + " has no valid split");
      return gen.state(*entry.split, cfg.max_degree);
  }
  return Word{};
}

Case make_case(Property p, const ActionContext& ctx, std::uint64_t seed, std::string_view entry_name,
               std::uint64_t index, int max_degree) {
  const LieAlgebra& alg = ctx.algebra();
  const SplitDecomposition& split = ctx.split();
  Generator gen(seed, std::string(entry_name) + "/" + std::string(property_name(p)), index);
  const auto everything = all_indices(alg);
  const auto& p1 = split.part(Part::First);
  const auto& p2 = split.part(Part::Second);

  Case c;
  switch (p) {
    case Property::Inverse:
      c.states.push_back(gen.state(split, max_degree));
      c.envs.push_back(gen.env(alg, max_degree));
      break;
    case Property::Oracle:
      c.envs.push_back(gen.env(alg, max_degree));
      break;
    case Property::LieAction: {
      const std::uint64_t n = alg.dimension();
      const std::uint64_t pair = index % (n * n);
      c.vectors.push_back(alg.basis_vector(static_cast<BasisIndex>(pair / n)));
      c.vectors.push_back(alg.basis_vector(static_cast<BasisIndex>(pair % n)));
      c.states.push_back(gen.state(split, max_degree));
      break;
    }
    case Property::Filtration:
    case Property::MuCompat:
      c.vectors.push_back(gen.vector(alg));
      c.states.push_back(gen.state(split, max_degree));
      break;
    case Property::RightLinearity:
      c.vectors.push_back(gen.vector(alg));
      c.words.push_back(gen.word(p1, max_degree));
      c.words.push_back(gen.word(p2, max_degree));
      break;
    case Property::WellDefined: {
      const int budget = std::max(0, max_degree - 2);
      c.envs.push_back(gen.env(alg, max_degree));
      Word a = gen.word(everything, budget);
      Word b = gen.word(everything, budget - static_cast<int>(a.degree()));
      Word xy;
      if (!p1.empty()) xy = Word{p1[gen.below(p1.size())], p1[gen.below(p1.size())]};
      Word a1 = gen.word(p1, budget);
      Word b1 = gen.word(p1, budget - static_cast<int>(a1.degree()));
      c.words = {std::move(a), std::move(xy), std::move(b), gen.word(p2, max_degree), std::move(a1), std::move(b1)};
      c.scalars.push_back(gen.scalar(alg.ring()));
      c.vectors.push_back(gen.vector(alg));
      break;
    }
    case Property::Linearity:
      c.vectors.push_back(gen.vector(alg));
      c.vectors.push_back(gen.vector(alg));
      c.states.push_back(gen.state(split, max_degree));
      c.states.push_back(gen.state(split, max_degree));
      c.scalars.push_back(gen.scalar(alg.ring()));
      c.scalars.push_back(gen.scalar(alg.ring()));
      break;
  }
  return c;
}

bool holds(Property p, const ActionContext& ctx, const Case& c, std::string* why) {
  try {
    const bool ok = evaluate(p, ctx, c);
    if (!ok && why) *why = "identity does not hold";
    return ok;
  } catch (const std::exception& e) {
    if (why) *why = std::string("exception: ") + e.what();
    return false;
  }
}

std::size_t shrink(Property p, const ActionContext& ctx, Case& c) {
  return shrink([&](const Case& candidate) { return !holds(p, ctx, candidate); }, c);
}

std::size_t shrink(const std::function<bool(const Case&)>& fails, Case& c) {
  std::size_t steps = 0;
  bool progress = true;
  while (progress) {
    progress = false;
    for_each_candidate(c, [&](Case& next) {
      if (!fails(next)) return false;
      c = std::move(next);
      progress = true;
      return true;
    });
    if (progress) ++steps;
  }
  return steps;
}

std::string describe_case(const Case& c, const LieAlgebra& alg) {
  std::string out;
  for (std::size_t i = 0; i < c.vectors.size(); ++i)
    out += "g" + std::to_string(i + 1) + " = " + format_vector(c.vectors[i]) + "\n";
  for (std::size_t i = 0; i < c.envs.size(); ++i)
    out += "u" + std::to_string(i + 1) + " = " + format_env_inline(c.envs[i]) + "\n";
  for (std::size_t i = 0; i < c.states.size(); ++i)
    out += "s" + std::to_string(i + 1) + " = " + format_state_inline(c.states[i]) + "\n";
  for (std::size_t i = 0; i < c.words.size(); ++i)
    out += "w" + std::to_string(i + 1) + " = " + format_word(alg, c.words[i]) + "\n";
  for (std::size_t i = 0; i < c.scalars.size(); ++i)
    out += "c" + std::to_string(i + 1) + " = " + c.scalars[i].to_string() + "\n";
  return out;
}

PropertyResult run_property(Property p, const ActionContext& ctx, std::uint64_t seed, std::string_view entry_name,
                            int cases, int max_degree) {
  PropertyResult result;
  result.name = std::string(property_name(p));
  std::uint64_t total = static_cast<std::uint64_t>(cases);
  if (p == Property::LieAction) total *= ctx.algebra().dimension() * ctx.algebra().dimension();

  std::optional<std::uint64_t> first_failure;
  std::string why;
  for (std::uint64_t i = 0; i < total; ++i) {
    const Case c = make_case(p, ctx, seed, entry_name, i, max_degree);
    std::string reason;
    if (holds(p, ctx, c, &reason)) {
      ++result.passed;
    } else {
      ++result.failed;
      if (!first_failure) {
        first_failure = i;
        why = reason;
      }
    }
  }
  if (first_failure) {
    Case c = make_case(p, ctx, seed, entry_name, *first_failure, max_degree);
    const std::size_t steps = shrink(p, ctx, c);
    std::string reason;
    holds(p, ctx, c, &reason);
    result.counterexample = "case " + std::to_string(*first_failure) + " (" + why + "), shrunk in " +
                            std::to_string(steps) + " steps (" + reason + "):\n" + describe_case(c, ctx.algebra());
  }
  return result;
}

// ---------------------------------------------------------------------------
// Suite

std::size_t EntryReport::passed() const {
  std::size_t n = valid ? 1 : 0;
  for (const auto& p : properties) n += p.passed;
  return n;
}

std::size_t EntryReport::failed() const {
  std::size_t n = valid ? 0 : 1;
  for (const auto& p : properties) n += p.failed;
  return n;
}

bool SuiteReport::all_valid() const {
  return std::all_of(entries.begin(), entries.end(), [](const EntryReport& e) { return e.valid; });
}

bool SuiteReport::all_passed() const {
  return std::all_of(entries.begin(), entries.end(), [](const EntryReport& e) { return e.failed() == 0; });
}

std::string SuiteReport::render() const {
  std::string out;
  for (const auto& e : entries) {
    out += "== " + e.name + " (" + e.ring + ")\n";
    if (e.valid) {
      out += "validate: ok\n";
    } else {
      out += "validate: FAILED\n";
      for (std::string_view rest = e.validation; !rest.empty();) {
        auto nl = rest.find('\n');
        out += "  " + std::string(rest.substr(0, nl)) + "\n";
        rest = nl == std::string_view::npos ? std::string_view{} : rest.substr(nl + 1);
      }
    }
    for (const auto& p : e.properties) {
      if (p.skipped) {
        out += p.name + ": skipped\n";
        continue;
      }
      out += p.name + ": pass=" + std::to_string(p.passed) + " fail=" + std::to_string(p.failed) + "\n";
      if (!p.counterexample.empty()) {
        out += "  counterexample " + p.counterexample.substr(0, p.counterexample.find('\n')) + "\n";
        std::string_view rest = p.counterexample;
        rest.remove_prefix(rest.find('\n') + 1);
        while (!rest.empty()) {
          auto nl = rest.find('\n');
          out += "    " + std::string(rest.substr(0, nl)) + "\n";
          rest = nl == std::string_view::npos ? std::string_view{} : rest.substr(nl + 1);
        }
      }
    }
    out += "SUITE " + e.name + " pass=" + std::to_string(e.passed()) + " fail=" + std::to_string(e.failed()) +
           " seed=" + std::to_string(seed) + "\n";
  }
  return out;
}

SuiteReport run_suite(const SuiteConfig& cfg, const ExampleRegistry& registry) {
  cfg.validate();
  std::vector<Ring> keep;
  for (const auto& r : cfg.rings) keep.push_back(make_ring(r));

  std::vector<Property> props;
  for (Property p : all_properties())
    if (cfg.properties.empty() || cfg.properties.contains(p)) props.push_back(p);

  SuiteReport report;
  report.seed = cfg.seed;
  for (const auto& entry : registry.entries()) {
    const Ring& ring = entry.algebra->ring();
    if (!keep.empty() && std::none_of(keep.begin(), keep.end(), [&](const Ring& r) { return r == ring; }))
      continue;

    EntryReport er;
    er.name = entry.name;
    er.ring = ring.descriptor();
    const ValidationReport va = validate_algebra(*entry.algebra);
    const ValidationReport vs = validate_split(*entry.algebra, entry.part1, entry.part2);
    er.valid = va.ok() && vs.ok() && entry.split;
    if (!va.ok()) er.validation += va.to_string();
    if (!vs.ok()) er.validation += vs.to_string();

    if (er.valid) {
      const ActionContext ctx(entry.split);
      for (Property p : props) er.properties.push_back(run_property(p, ctx, cfg.seed, entry.name, cfg.cases, cfg.max_degree));
    } else {
      for (Property p : props) {
        PropertyResult skipped;
        skipped.name = std::string(property_name(p));
        skipped.skipped = true;
        er.properties.push_back(std::move(skipped));
      }
    }
    report.entries.push_back(std::move(er));
  }
  return report;
}

}  // namespace envord
