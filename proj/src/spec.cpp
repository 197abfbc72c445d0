#include "envord/spec.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "envord/error.hpp"

namespace envord {

namespace {

enum class Tok { Ident, Int, Slash, Star, Plus, Minus, LParen, RParen, Bar, Equals, End };

struct Token {
  Tok kind;
  std::string text;
  int line;
  int column;
};

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_'; }
bool digit(char c) { return c >= '0' && c <= '9'; }

// Tokenizes `text`; `line` and `first_column` locate it in the source.
std::vector<Token> tokenize(std::string_view text, int line, int first_column = 1) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    const int col = first_column + static_cast<int>(i);
    if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
      ++i;
      continue;
    }
    if (ident_start(c)) {
      std::size_t j = i + 1;
      while (j < text.size() && ident_char(text[j])) ++j;
      out.push_back({Tok::Ident, std::string(text.substr(i, j - i)), line, col});
      i = j;
      continue;
    }
    if (digit(c)) {
      std::size_t j = i + 1;
      while (j < text.size() && digit(text[j])) ++j;
      if (j < text.size() && (ident_char(text[j])))
        throw ParseError(line, first_column + static_cast<int>(j), "malformed number");
      out.push_back({Tok::Int, std::string(text.substr(i, j - i)), line, col});
      i = j;
      continue;
    }
    Tok kind;
    switch (c) {
      case '/': kind = Tok::Slash; break;
      case '*': kind = Tok::Star; break;
      case '+': kind = Tok::Plus; break;
      case '-': kind = Tok::Minus; break;
      case '(': kind = Tok::LParen; break;
      case ')': kind = Tok::RParen; break;
      case '|': kind = Tok::Bar; break;
      case '=': kind = Tok::Equals; break;
      default: {
        std::string shown = std::isprint(static_cast<unsigned char>(c)) ? std::string(1, c) : "non-ASCII byte";
        throw ParseError(line, col, "unexpected character '" + shown + "'");
      }
    }
    out.push_back({kind, std::string(1, c), line, col});
    ++i;
  }
  const int end_col = first_column + static_cast<int>(text.size());
  out.push_back({Tok::End, "", line, end_col});
  return out;
}

const char* describe(Tok t) {
  switch (t) {
    case Tok::Ident: return "name";
    case Tok::Int: return "integer";
    case Tok::Slash: return "'/'";
    case Tok::Star: return "'*'";
    case Tok::Plus: return "'+'";
    case Tok::Minus: return "'-'";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::Bar: return "'|'";
    case Tok::Equals: return "'='";
    case Tok::End: return "end of input";
  }
  return "?";
}

class Cursor {
 public:
  explicit Cursor(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  const Token& peek() const { return tokens_[pos_]; }
  bool at(Tok t) const { return peek().kind == t; }
  const Token& next() {
    const Token& t = tokens_[pos_];
    if (t.kind != Tok::End) ++pos_;
    return t;
  }
  const Token& expect(Tok t, const char* what) {
    if (!at(t)) fail(std::string("expected ") + what + ", found " + describe(peek().kind));
    return next();
  }
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(peek().line, peek().column, what); }
  [[noreturn]] static void fail_at(const Token& t, const std::string& what) {
    throw ParseError(t.line, t.column, what);
  }

 private:
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

// integer ['/' integer], with the leading integer already consumed.
Scalar finish_coeff(Cursor& cur, const Token& first, const Ring& ring) {
  mpz_class num(first.text, 10);
  if (!cur.at(Tok::Slash)) return Scalar(ring, num);
  const Token& slash = cur.next();
  const Token& den_tok = cur.expect(Tok::Int, "denominator");
  if (ring.kind() != Ring::Kind::Rationals)
    Cursor::fail_at(slash, "fractional coefficient outside Q (ring is " + ring.descriptor() + ")");
  mpz_class den(den_tok.text, 10);
  if (den == 0) Cursor::fail_at(den_tok, "zero denominator");
  return Scalar(ring, mpq_class(num, den));
}

BasisIndex resolve(const Token& t, const std::vector<std::string>& names) {
  auto it = std::find(names.begin(), names.end(), t.text);
  if (it == names.end()) Cursor::fail_at(t, "unknown name '" + t.text + "'");
  return static_cast<BasisIndex>(it - names.begin());
}

// lincomb for bracket right-hand sides
SparseVector parse_lincomb(Cursor& cur, const Ring& ring, const std::vector<std::string>& names) {
  std::vector<Scalar> dense(names.size(), Scalar::zero(ring));
  bool first = true;
  while (true) {
    bool negate = false;
    if (!first) {
      if (cur.at(Tok::End)) break;
      if (cur.at(Tok::Plus))
        cur.next();
      else if (cur.at(Tok::Minus)) {
        cur.next();
        negate = true;
      } else {
        cur.fail(std::string("expected '+' or '-', found ") + describe(cur.peek().kind));
      }
    }
    while (cur.at(Tok::Plus) || cur.at(Tok::Minus))
      if (cur.next().kind == Tok::Minus) negate = !negate;
    first = false;

    Scalar coeff = Scalar::one(ring);
    if (cur.at(Tok::Int)) {
      const Token& start = cur.next();
      coeff = finish_coeff(cur, start, ring);
      if (!cur.at(Tok::Star)) {
        if (mpz_class(start.text, 10) != 0)
          Cursor::fail_at(start, "constant term in a bracket value (only the literal 0 is allowed)");
        continue;
      }
      cur.next();
    }
    const Token& name = cur.expect(Tok::Ident, "basis name");
    const BasisIndex k = resolve(name, names);
    dense[k] += negate ? -coeff : coeff;
  }
  SparseVector out;
  for (std::size_t k = 0; k < dense.size(); ++k)
    if (!dense[k].is_zero()) out.push_back({static_cast<BasisIndex>(k), dense[k]});
  return out;
}

bool same_vector(const SparseVector& a, const SparseVector& b) {
  return a.size() == b.size() && std::equal(a.begin(), a.end(), b.begin(), [](const Component& x, const Component& y) {
           return x.index == y.index && x.coeff == y.coeff;
         });
}

SparseVector negated(const SparseVector& v) {
  SparseVector out = v;
  for (auto& c : out) c.coeff = -c.coeff;
  return out;
}

struct Line {
  int number;
  std::string_view text;  // comment stripped
};

std::vector<Line> split_lines(std::string_view text) {
  std::vector<Line> out;
  int number = 0;
  while (!text.empty() || number == 0) {
    ++number;
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    out.push_back({number, line});
    if (text.empty()) break;
  }
  return out;
}

std::pair<std::string_view, int> keyword(std::string_view line) {
  std::size_t i = 0;
  while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
  std::size_t j = i;
  while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
  return {line.substr(i, j - i), static_cast<int>(i) + 1};
}

}  // namespace

std::shared_ptr<const LieAlgebra> AlgebraSpec::build_algebra() const {
  LieAlgebra::Table table(basis.size(), std::vector<SparseVector>(basis.size()));
  for (const auto& [key, value] : brackets) table[key.first][key.second] = value;
  return LieAlgebra::create(ring, basis, std::move(table));
}

bool operator==(const AlgebraSpec& a, const AlgebraSpec& b) {
  if (!(a.ring == b.ring) || a.basis != b.basis || a.split != b.split) return false;
  if (a.brackets.size() != b.brackets.size()) return false;
  return std::equal(a.brackets.begin(), a.brackets.end(), b.brackets.begin(), [](const auto& x, const auto& y) {
    return x.first == y.first && same_vector(x.second, y.second);
  });
}

AlgebraSpec parse_spec(std::string_view text) {
  AlgebraSpec spec;
  if (text.starts_with("\xEF\xBB\xBF")) text.remove_prefix(3);
  const auto lines = split_lines(text);

  // Pass 1: ring and basis, so the remaining lines may come in any order.
  std::optional<int> ring_line, basis_line;
  for (const auto& [number, line] : lines) {
    auto [word, col] = keyword(line);
    if (word == "ring") {
      if (ring_line) throw ParseError(number, col, "duplicate ring declaration (first on line " + std::to_string(*ring_line) + ")");
      ring_line = number;
      const std::size_t start = static_cast<std::size_t>(col - 1) + word.size();
      std::string_view rest = line.substr(start);
      const auto first = rest.find_first_not_of(" \t");
      const int rest_col = static_cast<int>(start + (first == std::string_view::npos ? 0 : first)) + 1;
      try {
        spec.ring = make_ring(rest);
      } catch (const DomainError& e) {
        throw ParseError(number, rest_col, e.what());
      }
    } else if (word == "basis") {
      if (basis_line)
        throw ParseError(number, col, "duplicate basis declaration (first on line " + std::to_string(*basis_line) + ")");
      basis_line = number;
      Cursor cur(tokenize(line.substr(col - 1 + word.size()), number, col + static_cast<int>(word.size())));
      while (!cur.at(Tok::End)) {
        const Token& t = cur.expect(Tok::Ident, "basis name");
        if (std::find(spec.basis.begin(), spec.basis.end(), t.text) != spec.basis.end())
          Cursor::fail_at(t, "duplicate basis name '" + t.text + "'");
        spec.basis.push_back(t.text);
      }
      if (spec.basis.empty()) throw ParseError(number, col, "basis needs at least one name");
      if (spec.basis.size() > 0xFFFF) throw ParseError(number, col, "basis too large");
    }
  }
  if (!ring_line) throw ParseError(1, 1, "missing ring declaration");
  if (!basis_line) throw ParseError(1, 1, "missing basis declaration");

  // Pass 2: brackets and split.
  std::map<std::pair<BasisIndex, BasisIndex>, SparseVector> declared;
  std::optional<int> split_line;
  for (const auto& [number, line] : lines) {
    auto [word, col] = keyword(line);
    if (word.empty() || word == "ring" || word == "basis") continue;
    const int rest_col = col + static_cast<int>(word.size());
    Cursor cur(tokenize(line.substr(col - 1 + word.size()), number, rest_col));
    if (word == "bracket") {
      const BasisIndex a = resolve(cur.expect(Tok::Ident, "basis name"), spec.basis);
      const BasisIndex b = resolve(cur.expect(Tok::Ident, "basis name"), spec.basis);
      const Token& eq = cur.expect(Tok::Equals, "'='");
      SparseVector value = parse_lincomb(cur, spec.ring, spec.basis);
      if (auto it = declared.find({a, b}); it != declared.end() && !same_vector(it->second, value))
        Cursor::fail_at(eq, "bracket [" + spec.basis[a] + ", " + spec.basis[b] + "] declared twice inconsistently");
      if (auto it = declared.find({b, a}); a != b && it != declared.end() && !same_vector(it->second, negated(value)))
        Cursor::fail_at(eq, "bracket [" + spec.basis[a] + ", " + spec.basis[b] + "] is not the negation of [" +
                                spec.basis[b] + ", " + spec.basis[a] + "]");
      declared[{a, b}] = std::move(value);
    } else if (word == "split") {
      if (split_line)
        throw ParseError(number, col, "duplicate split declaration (first on line " + std::to_string(*split_line) + ")");
      split_line = number;
      std::vector<BasisIndex> parts[2];
      std::set<BasisIndex> seen;
      int side = 0;
      while (!cur.at(Tok::End)) {
        if (cur.at(Tok::Bar)) {
          if (side == 1) cur.fail("split has more than one '|'");
          cur.next();
          side = 1;
          continue;
        }
        const Token& t = cur.expect(Tok::Ident, "basis name or '|'");
        const BasisIndex i = resolve(t, spec.basis);
        if (!seen.insert(i).second) Cursor::fail_at(t, "'" + t.text + "' appears twice in split");
        parts[side].push_back(i);
      }
      if (side == 0) throw ParseError(number, col, "split needs '|' between the two parts");
      for (BasisIndex i = 0; i < spec.basis.size(); ++i)
        if (!seen.contains(i)) throw ParseError(number, col, "split leaves " + spec.basis[i] + " unassigned");
      spec.split = std::make_pair(std::move(parts[0]), std::move(parts[1]));
    } else {
      throw ParseError(number, col, "unknown declaration '" + std::string(word) + "'");
    }
  }

  for (const auto& [key, value] : declared) {
    if (!value.empty()) spec.brackets[key] = value;
    const std::pair<BasisIndex, BasisIndex> flipped{key.second, key.first};
    if (key.first != key.second && !declared.contains(flipped) && !value.empty())
      spec.brackets[flipped] = negated(value);
  }
  return spec;
}

std::string print_spec(const AlgebraSpec& spec) {
  std::string out = "ring " + spec.ring.descriptor() + "\nbasis";
  for (const auto& name : spec.basis) out += " " + name;
  out += "\n";

  auto lincomb = [&](const SparseVector& v) {
    std::string s;
    for (const auto& [k, c] : v) {
      std::string coeff = c.to_string();
      const bool negative = coeff[0] == '-';
      if (negative) coeff.erase(0, 1);
      if (s.empty())
        s += negative ? "-" : "";
      else
        s += negative ? " - " : " + ";
      if (coeff != "1") s += coeff + "*";
      s += spec.basis[k];
    }
    return s;
  };

  for (const auto& [key, value] : spec.brackets) {
    const auto [a, b] = key;
    if (a > b) {
      // skip when it is the automatic negation of a printed pair
      auto it = spec.brackets.find({b, a});
      if (it != spec.brackets.end() && same_vector(it->second, negated(value))) continue;
    }
    out += "bracket " + spec.basis[a] + " " + spec.basis[b] + " = " + lincomb(value) + "\n";
  }

  if (spec.split) {
    out += "split";
    for (BasisIndex i : spec.split->first) out += " " + spec.basis[i];
    out += " |";
    for (BasisIndex i : spec.split->second) out += " " + spec.basis[i];
    out += "\n";
  }
  return out;
}

namespace {

class ExprParser {
 public:
  ExprParser(std::string_view text, const LieAlgebra& alg) : cur_(tokenize(text, 1)), alg_(alg) {}

  EnvElement parse() {
    EnvElement u = expr(0);
    if (!cur_.at(Tok::End)) cur_.fail(std::string("unexpected ") + describe(cur_.peek().kind));
    return u;
  }

 private:
  static constexpr int kMaxDepth = 200;

  EnvElement expr(int depth) {
    if (depth > kMaxDepth) cur_.fail("expression nested too deeply");
    EnvElement sum = term(depth);
    while (cur_.at(Tok::Plus) || cur_.at(Tok::Minus)) {
      const bool minus = cur_.next().kind == Tok::Minus;
      EnvElement t = term(depth);
      if (minus)
        sum -= t;
      else
        sum += t;
    }
    return sum;
  }

  EnvElement term(int depth) {
    const Ring& ring = alg_.ring();
    bool negate = false;
    while (cur_.at(Tok::Plus) || cur_.at(Tok::Minus))
      if (cur_.next().kind == Tok::Minus) negate = !negate;

    EnvElement product = EnvElement::one(alg_);
    if (cur_.at(Tok::Int)) {
      const Token& start = cur_.next();
      Scalar coeff = finish_coeff(cur_, start, ring);
      product = coeff * product;
      if (cur_.at(Tok::Star)) {
        cur_.next();
        product = product * factor(depth);
      }
    } else {
      product = factor(depth);
    }
    while (cur_.at(Tok::Star)) {
      cur_.next();
      product = product * factor(depth);
    }
    return negate ? -Scalar::one(ring) * product : product;
  }

  EnvElement factor(int depth) {
    const Token& t = cur_.peek();
    switch (t.kind) {
      case Tok::Ident:
        cur_.next();
        return EnvElement::word(alg_, Word{resolve(t, alg_.names())});
      case Tok::Int:
        if (t.text != "1") cur_.fail("only the literal 1 may appear as a factor; put coefficients first");
        cur_.next();
        return EnvElement::one(alg_);
      case Tok::LParen: {
        cur_.next();
        EnvElement inner = expr(depth + 1);
        cur_.expect(Tok::RParen, "')'");
        return inner;
      }
      default:
        cur_.fail(std::string("expected name, 1 or '(', found ") + describe(t.kind));
    }
  }

  Cursor cur_;
  const LieAlgebra& alg_;
};

}  // namespace

EnvElement parse_expr(std::string_view text, const LieAlgebra& alg) { return ExprParser(text, alg).parse(); }

}  // namespace envord
