#include "wogsym/text.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <limits>
#include <sstream>
#include <vector>

#include "wogsym/errors.hpp"

namespace wogsym {

namespace {

struct Item {
  std::string text;
  std::size_t line;
};

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

unsigned long long parse_natural(std::string_view s, std::size_t line, const char* what) {
  s = trim(s);
  unsigned long long value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
    throw ParseError(std::string("bad ") + what + " '" + std::string(s) + "'", line);
  }
  return value;
}

// `(t1*t2, t3)` as printed by format_ideal: drop the outer parentheses when
// they enclose the whole text and it is not a bare exponent vector.
std::string_view unwrap(std::string_view text) {
  auto t = trim(text);
  if (t.size() < 2 || t.front() != '(' || t.back() != ')') return text;
  if (t.find('t') == std::string_view::npos) return text;
  int depth = 0;
  for (std::size_t i = 0; i + 1 < t.size(); ++i) {
    if (t[i] == '(') ++depth;
    if (t[i] == ')' && --depth == 0) return text;
  }
  return t.substr(1, t.size() - 2);
}

Exponent to_exponent(unsigned long long v, std::size_t line) {
  if (v > std::numeric_limits<Exponent>::max()) throw ParseError("exponent too large", line);
  return static_cast<Exponent>(v);
}

// Raw monomial: either a vector of exponents or sparse (var1, exp) pairs.
struct RawMonomial {
  bool isVector = false;
  std::vector<Exponent> dense;
  std::vector<std::pair<std::size_t, Exponent>> sparse;
  std::size_t line = 0;
};

RawMonomial parse_raw(std::string_view s, std::size_t line) {
  RawMonomial raw;
  raw.line = line;
  s = trim(s);
  if (s.empty()) throw ParseError("empty monomial", line);
  if (s.front() == '(') {
    if (s.back() != ')') throw ParseError("unterminated exponent vector", line);
    raw.isVector = true;
    auto body = s.substr(1, s.size() - 2);
    std::size_t start = 0;
    while (true) {
      auto comma = body.find(',', start);
      auto field = body.substr(start, comma == std::string_view::npos ? body.npos : comma - start);
      raw.dense.push_back(to_exponent(parse_natural(field, line, "exponent"), line));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    return raw;
  }
  if (s == "1") return raw;
  std::size_t start = 0;
  while (true) {
    auto star = s.find('*', start);
    auto factor = trim(s.substr(start, star == std::string_view::npos ? s.npos : star - start));
    if (factor.size() < 2 || factor.front() != 't') {
      throw ParseError("expected a factor like t3 or t3^2, got '" + std::string(factor) + "'",
                       line);
    }
    auto caret = factor.find('^');
    auto var = parse_natural(factor.substr(1, caret == factor.npos ? factor.npos : caret - 1),
                             line, "variable index");
    if (var == 0) throw ParseError("variables are numbered from t1", line);
    Exponent e = 1;
    if (caret != factor.npos) e = to_exponent(parse_natural(factor.substr(caret + 1), line, "exponent"), line);
    raw.sparse.emplace_back(static_cast<std::size_t>(var), e);
    if (star == std::string_view::npos) break;
    start = star + 1;
  }
  return raw;
}

ExponentVector realize(const RawMonomial& raw, std::size_t numVars) {
  if (raw.isVector) {
    if (raw.dense.size() != numVars) {
      throw ParseError("exponent vector of length " + std::to_string(raw.dense.size()) +
                           " in " + std::to_string(numVars) + " variables",
                       raw.line);
    }
    return ExponentVector(raw.dense);
  }
  ExponentVector a(numVars);
  for (auto [var, e] : raw.sparse) {
    if (var > numVars) {
      throw ParseError("t" + std::to_string(var) + " outside t1..t" + std::to_string(numVars),
                       raw.line);
    }
    if (e > std::numeric_limits<Exponent>::max() - a[var - 1]) throw ParseError("exponent too large", raw.line);
    a[var - 1] += e;
  }
  return a;
}

std::size_t needed_vars(const RawMonomial& raw) {
  if (raw.isVector) return raw.dense.size();
  std::size_t m = 0;
  for (auto [var, e] : raw.sparse) m = std::max(m, var);
  return m;
}

}  // namespace

std::string format_monomial(const ExponentVector& a) {
  std::string out;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += 't' + std::to_string(i + 1);
    if (a[i] > 1) out += '^' + std::to_string(a[i]);
  }
  return out.empty() ? "1" : out;
}

std::string format_exponents(const ExponentVector& a) {
  std::string out = "(";
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(a[i]);
  }
  return out + ')';
}

std::string format_ideal(const MonomialIdeal& ideal) {
  if (ideal.is_zero()) return "(0)";
  std::string out = "(";
  for (std::size_t i = 0; i < ideal.size(); ++i) {
    if (i) out += ", ";
    out += format_monomial(ideal.gens()[i]);
  }
  return out + ')';
}

std::string format_prime(const MonomialPrime& prime) {
  if (prime.support().empty()) return "(0)";
  std::string out = "(";
  for (std::size_t i = 0; i < prime.support().size(); ++i) {
    if (i) out += ", ";
    out += 't' + std::to_string(prime.support()[i]);
  }
  return out + ')';
}

std::string format_irreducible(const IrreducibleIdeal& q) {
  std::string out = "(";
  for (std::size_t i = 0; i < q.num_vars(); ++i) {
    if (q.alpha()[i] == 0) continue;
    if (out.size() > 1) out += ", ";
    out += format_monomial(ExponentVector::unit(q.num_vars(), i, q.alpha()[i]));
  }
  return out + ")";
}

ExponentVector parse_monomial(std::string_view text, std::size_t numVars) {
  return realize(parse_raw(text, 0), numVars);
}

MonomialIdeal parse_ideal(std::string_view text, std::optional<std::size_t> numVars) {
  text = unwrap(text);
  // Split at top-level commas and newlines, dropping comments.
  std::vector<Item> items;
  std::string current;
  std::size_t line = 1;
  std::size_t itemLine = 1;
  int depth = 0;
  bool inComment = false;
  auto flush = [&] {
    auto t = trim(current);
    if (!t.empty()) items.push_back({std::string(t), itemLine});
    current.clear();
  };
  for (char c : text) {
    if (c == '\n') {
      inComment = false;
      if (depth == 0) flush();
      ++line;
      if (current.empty()) itemLine = line;
      continue;
    }
    if (inComment) continue;
    if (c == '#') {
      inComment = true;
      continue;
    }
    if (c == '(') ++depth;
    if (c == ')') {
      if (--depth < 0) throw ParseError("unbalanced ')'", line);
    }
    if (c == ',' && depth == 0) {
      flush();
      itemLine = line;
      continue;
    }
    if (current.empty() && std::isspace(static_cast<unsigned char>(c))) continue;
    if (current.empty()) itemLine = line;
    current += c;
  }
  if (depth != 0) throw ParseError("unbalanced '('", line);
  flush();

  if (!items.empty() && items.front().text.rfind("vars", 0) == 0) {
    auto declared = parse_natural(std::string_view(items.front().text).substr(4),
                                  items.front().line, "variable count");
    if (numVars && *numVars != declared) {
      throw ParseError("declared " + std::to_string(declared) + " variables, expected " +
                           std::to_string(*numVars),
                       items.front().line);
    }
    numVars = declared;
    items.erase(items.begin());
  }

  if (items.size() == 1 && items.front().text == "0") return MonomialIdeal::zero(numVars.value_or(0));

  std::vector<RawMonomial> raws;
  raws.reserve(items.size());
  std::size_t inferred = 0;
  for (const auto& item : items) {
    raws.push_back(parse_raw(item.text, item.line));
    inferred = std::max(inferred, needed_vars(raws.back()));
  }
  const std::size_t s = numVars.value_or(inferred);
  std::vector<ExponentVector> gens;
  gens.reserve(raws.size());
  for (const auto& raw : raws) gens.push_back(realize(raw, s));
  return minimalize(std::move(gens), s);
}

}  // namespace wogsym
