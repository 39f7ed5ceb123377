#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <set>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "whittaker/rational.hpp"

namespace whittaker {

struct Generator {
  std::string name;
  std::size_t index = 0;
  int grading = 0;

  friend bool operator==(const Generator&, const Generator&) = default;
};

/// Sparse linear combination of generators, keyed by generator index.
using LinearCombination = std::map<std::size_t, Rational>;

inline void add_term(LinearCombination& lc, std::size_t index, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = lc.try_emplace(index, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) lc.erase(it);
  }
}

inline LinearCombination scaled(const LinearCombination& lc, const Rational& c) {
  LinearCombination out;
  if (c == 0) return out;
  for (const auto& [i, v] : lc) out.emplace(i, v * c);
  return out;
}

class LieAlgebraBuilder;

/// Finite-dimensional Lie algebra over the rationals given by structure
/// constants on an ordered basis. Only brackets [x_i, x_j] with i < j are
/// stored; the rest follow from antisymmetry.
class LieAlgebra {
 public:
  const std::string& name() const { return name_; }
  std::size_t dimension() const { return generators_.size(); }
  const std::vector<Generator>& generators() const { return generators_; }
  const Generator& generator(std::size_t i) const { return generators_.at(i); }

  std::optional<std::size_t> find(std::string_view gen) const {
    for (const auto& g : generators_) {
      if (g.name == gen) return g.index;
    }
    return std::nullopt;
  }

  std::size_t index_of(std::string_view gen) const {
    if (auto i = find(gen)) return *i;
    throw DomainError("unknown generator '" + std::string(gen) + "' in algebra " + name_);
  }

  LinearCombination bracket(std::size_t i, std::size_t j) const {
    check_index(i);
    check_index(j);
    if (i == j) return {};
    if (i < j) {
      auto it = table_.find({i, j});
      return it == table_.end() ? LinearCombination{} : it->second;
    }
    auto it = table_.find({j, i});
    return it == table_.end() ? LinearCombination{} : scaled(it->second, Rational(-1));
  }

  LinearCombination bracket(std::string_view x, std::string_view y) const {
    return bracket(index_of(x), index_of(y));
  }

  LinearCombination bracket(const LinearCombination& a, const LinearCombination& b) const {
    LinearCombination out;
    for (const auto& [i, ci] : a) {
      for (const auto& [j, cj] : b) {
        for (const auto& [k, ck] : bracket(i, j)) add_term(out, k, ci * cj * ck);
      }
    }
    return out;
  }

  /// True when every bracket involving generator i vanishes.
  bool is_central(std::size_t i) const {
    for (std::size_t j = 0; j < dimension(); ++j) {
      if (!bracket(i, j).empty()) return false;
    }
    return true;
  }

  std::vector<std::size_t> central_generators() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < dimension(); ++i) {
      if (is_central(i)) out.push_back(i);
    }
    return out;
  }

  /// Named subsets: "nplus" (positive grading), "nminus" (negative),
  /// "cartan" (grading zero) and "central".
  std::vector<std::size_t> distinguished(std::string_view set) const {
    std::vector<std::size_t> out;
    for (const auto& g : generators_) {
      bool member = false;
      if (set == "nplus") member = g.grading > 0;
      else if (set == "nminus") member = g.grading < 0;
      else if (set == "cartan") member = g.grading == 0;
      else if (set == "central") member = is_central(g.index);
      else throw DomainError("unknown distinguished set '" + std::string(set) + "'");
      if (member) out.push_back(g.index);
    }
    return out;
  }

  /// Index of the central generator that may carry negative exponents in
  /// enveloping-algebra elements, if this is a localized algebra.
  std::optional<std::size_t> laurent_central() const { return laurent_central_; }

  /// Copy of this algebra in which `central` is inverted.
  LieAlgebra localized(std::string_view central) const {
    std::size_t i = index_of(central);
    if (!is_central(i)) {
      throw DomainError("cannot invert non-central generator '" + std::string(central) + "'");
    }
    LieAlgebra out = *this;
    out.name_ = name_ + "_localized";
    out.laurent_central_ = i;
    return out;
  }

  /// Generators, gradings and structure constants agree. The Laurent flag
  /// is not part of the structure.
  bool same_structure(const LieAlgebra& other) const {
    return generators_ == other.generators_ && table_ == other.table_;
  }

  const std::map<std::pair<std::size_t, std::size_t>, LinearCombination>& table() const {
    return table_;
  }

  std::string render(const LinearCombination& lc) const {
    if (lc.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [i, c] : lc) {
      if (!first) os << " + ";
      first = false;
      os << to_string(c) << "*" << generators_[i].name;
    }
    return os.str();
  }

 private:
  friend class LieAlgebraBuilder;

  void check_index(std::size_t i) const {
    if (i >= generators_.size()) {
      throw DomainError("generator index " + std::to_string(i) + " out of range for " + name_);
    }
  }

  std::string name_;
  std::vector<Generator> generators_;
  std::map<std::pair<std::size_t, std::size_t>, LinearCombination> table_;
  std::optional<std::size_t> laurent_central_;
};

using AlgebraPtr = std::shared_ptr<const LieAlgebra>;

class LieAlgebraBuilder {
 public:
  explicit LieAlgebraBuilder(std::string name) { algebra_.name_ = std::move(name); }

  LieAlgebraBuilder& generator(std::string name, int grading) {
    if (algebra_.find(name)) throw DomainError("duplicate generator '" + name + "'");
    if (name.empty()) throw DomainError("empty generator name");
    std::size_t index = algebra_.generators_.size();
    algebra_.generators_.push_back(Generator{std::move(name), index, grading});
    return *this;
  }

  /// Sets [x, y]; the pair may be given in either order.
  LieAlgebraBuilder& bracket(std::string_view x, std::string_view y,
                             const std::vector<std::pair<Rational, std::string>>& terms) {
    std::size_t i = algebra_.index_of(x);
    std::size_t j = algebra_.index_of(y);
    if (i == j) {
      if (!terms.empty()) throw DomainError("[" + std::string(x) + "," + std::string(x) + "] must vanish");
      return *this;
    }
    LinearCombination lc;
    for (const auto& [c, g] : terms) add_term(lc, algebra_.index_of(g), c);
    if (i > j) {
      std::swap(i, j);
      lc = scaled(lc, Rational(-1));
    }
    if (algebra_.table_.count({i, j}) != 0 || seen_.count({i, j}) != 0) {
      throw DomainError("bracket [" + std::string(x) + "," + std::string(y) + "] given twice");
    }
    seen_.emplace(i, j);
    if (!lc.empty()) algebra_.table_.emplace(std::make_pair(i, j), std::move(lc));
    return *this;
  }

  LieAlgebra build() const {
    if (algebra_.generators_.empty()) throw DomainError("algebra has no generators");
    return algebra_;
  }

 private:
  LieAlgebra algebra_;
  std::set<std::pair<std::size_t, std::size_t>> seen_;
};

// ---------------------------------------------------------------------------
// Validation

struct JacobiFailure {
  std::size_t x, y, z;
  LinearCombination jacobiator;
};

struct JacobiReport {
  std::size_t triples_checked = 0;
  std::vector<JacobiFailure> failures;
  bool passed() const { return failures.empty(); }
};

/// Evaluates [[x,y],z] + [[y,z],x] + [[z,x],y] on every triple of distinct
/// generators. Triples with a repeated generator vanish by antisymmetry.
inline JacobiReport check_jacobi(const LieAlgebra& g) {
  JacobiReport report;
  const std::size_t n = g.dimension();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        ++report.triples_checked;
        LinearCombination xi{{i, Rational(1)}}, xj{{j, Rational(1)}}, xk{{k, Rational(1)}};
        LinearCombination sum = g.bracket(g.bracket(i, j), xk);
        for (const auto& [m, c] : g.bracket(g.bracket(j, k), xi)) add_term(sum, m, c);
        for (const auto& [m, c] : g.bracket(g.bracket(k, i), xj)) add_term(sum, m, c);
        if (!sum.empty()) report.failures.push_back({i, j, k, std::move(sum)});
      }
    }
  }
  return report;
}

struct GradingFailure {
  std::size_t x, y, offending;
};

/// Every term of [x_i, x_j] must have grading grad(x_i) + grad(x_j).
inline std::vector<GradingFailure> check_grading(const LieAlgebra& g) {
  std::vector<GradingFailure> out;
  for (const auto& [pair, lc] : g.table()) {
    int expected = g.generator(pair.first).grading + g.generator(pair.second).grading;
    for (const auto& [k, c] : lc) {
      if (g.generator(k).grading != expected) out.push_back({pair.first, pair.second, k});
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Subalgebras

class SubalgebraView {
 public:
  SubalgebraView(AlgebraPtr parent, std::vector<std::size_t> members)
      : parent_(std::move(parent)), members_(std::move(members)) {}

  const LieAlgebra& parent() const { return *parent_; }
  const std::vector<std::size_t>& members() const { return members_; }

  bool contains(std::size_t i) const {
    return std::binary_search(members_.begin(), members_.end(), i);
  }

  /// Standalone algebra on the members, keeping the parent's relative order.
  LieAlgebra to_algebra(std::string name) const {
    LieAlgebraBuilder b(std::move(name));
    for (std::size_t i : members_) {
      b.generator(parent_->generator(i).name, parent_->generator(i).grading);
    }
    for (std::size_t a = 0; a < members_.size(); ++a) {
      for (std::size_t c = a + 1; c < members_.size(); ++c) {
        std::vector<std::pair<Rational, std::string>> terms;
        for (const auto& [k, v] : parent_->bracket(members_[a], members_[c])) {
          terms.emplace_back(v, parent_->generator(k).name);
        }
        if (!terms.empty()) {
          b.bracket(parent_->generator(members_[a]).name, parent_->generator(members_[c]).name, terms);
        }
      }
    }
    return b.build();
  }

 private:
  AlgebraPtr parent_;
  std::vector<std::size_t> members_;
};

/// Throws if the span of `members` is not closed under the bracket, naming
/// the first bracket that leaves it.
inline SubalgebraView subalgebra_restrict(const AlgebraPtr& g, const std::vector<std::string>& members) {
  if (members.empty()) throw DomainError("subalgebra needs at least one generator");
  std::vector<std::size_t> idx;
  for (const auto& m : members) idx.push_back(g->index_of(m));
  std::sort(idx.begin(), idx.end());
  idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
  SubalgebraView view(g, idx);
  for (std::size_t a : idx) {
    for (std::size_t b : idx) {
      if (a >= b) continue;
      auto lc = g->bracket(a, b);
      for (const auto& [k, c] : lc) {
        if (!view.contains(k)) {
          throw DomainError("not closed under bracket: [" + g->generator(a).name + "," +
                            g->generator(b).name + "] = " + g->render(lc));
        }
      }
    }
  }
  return view;
}

// ---------------------------------------------------------------------------
// Built-in algebras

/// Schrodinger algebra with ordered basis f < q < h < z < p < e.
inline LieAlgebra schrodinger_algebra() {
  using T = std::vector<std::pair<Rational, std::string>>;
  LieAlgebraBuilder b("schrodinger");
  b.generator("f", -2).generator("q", -1).generator("h", 0).generator("z", 0).generator("p", 1).generator("e", 2);
  b.bracket("h", "e", T{{Rational(2), "e"}});
  b.bracket("h", "f", T{{Rational(-2), "f"}});
  b.bracket("e", "f", T{{Rational(1), "h"}});
  b.bracket("h", "p", T{{Rational(1), "p"}});
  b.bracket("h", "q", T{{Rational(-1), "q"}});
  b.bracket("p", "q", T{{Rational(1), "z"}});
  b.bracket("e", "q", T{{Rational(1), "p"}});
  b.bracket("p", "f", T{{Rational(-1), "q"}});
  return b.build();
}

inline LieAlgebra builtin_algebra(std::string_view name) {
  auto s = std::make_shared<const LieAlgebra>(schrodinger_algebra());
  if (name == "schrodinger") return *s;
  if (name == "sl2") return subalgebra_restrict(s, {"e", "h", "f"}).to_algebra("sl2");
  if (name == "heisenberg") return subalgebra_restrict(s, {"p", "q", "z"}).to_algebra("heisenberg");
  // [p,q] = z forces z into the subalgebra generated by e, p, h, q.
  if (name == "s1") return subalgebra_restrict(s, {"e", "p", "h", "q", "z"}).to_algebra("s1");
  throw DomainError("unknown built-in algebra '" + std::string(name) + "'");
}

inline bool is_builtin_algebra_name(std::string_view name) {
  return name == "schrodinger" || name == "sl2" || name == "heisenberg" || name == "s1";
}

inline AlgebraPtr shared_builtin(std::string_view name) {
  return std::make_shared<const LieAlgebra>(builtin_algebra(name));
}

// ---------------------------------------------------------------------------
// Text format
//
//   # comment
//   gen f -2
//   bracket p f = -1/1*q
//   bracket h e = 2/1*e

class SyntaxError : public DomainError {
 public:
  SyntaxError(std::size_t line, const std::string& what)
      : DomainError("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

namespace detail {

inline std::vector<std::string> split_ws(std::string_view s) {
  std::vector<std::string> out;
  std::istringstream is{std::string(s)};
  std::string tok;
  while (is >> tok) out.push_back(tok);
  return out;
}

inline std::string trim(std::string_view s) {
  auto a = s.find_first_not_of(" \t\r");
  if (a == std::string_view::npos) return {};
  auto b = s.find_last_not_of(" \t\r");
  return std::string(s.substr(a, b - a + 1));
}

}  // namespace detail

/// Parses the line-oriented algebra format. Structural errors carry line
/// numbers; Jacobi and grading are checked by the caller.
inline LieAlgebra parse_algebra_text(std::string_view text, std::string name = "custom") {
  LieAlgebraBuilder b(std::move(name));
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t line_no = 0;
  bool saw_bracket = false;
  bool saw_gen = false;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string line = raw.substr(0, raw.find('#'));
    line = detail::trim(line);
    if (line.empty()) continue;
    auto toks = detail::split_ws(line);
    try {
      if (toks[0] == "gen") {
        if (saw_bracket) throw SyntaxError(line_no, "gen declarations must precede brackets");
        if (toks.size() != 3) throw SyntaxError(line_no, "expected 'gen <name> <grading>'");
        std::size_t used = 0;
        int grading = std::stoi(toks[2], &used);
        if (used != toks[2].size()) throw SyntaxError(line_no, "bad grading '" + toks[2] + "'");
        b.generator(toks[1], grading);
        saw_gen = true;
      } else if (toks[0] == "bracket") {
        saw_bracket = true;
        auto eq = line.find('=');
        if (eq == std::string::npos) throw SyntaxError(line_no, "missing '='");
        auto lhs = detail::split_ws(line.substr(0, eq));
        if (lhs.size() != 3) throw SyntaxError(line_no, "expected 'bracket <x> <y> = ...'");
        std::string rhs = detail::trim(line.substr(eq + 1));
        std::vector<std::pair<Rational, std::string>> terms;
        if (rhs != "0") {
          std::istringstream rs(rhs);
          std::string tok;
          bool expect_term = true;
          bool negate = false;
          while (rs >> tok) {
            if (!expect_term) {
              if (tok == "+") negate = false;
              else if (tok == "-") negate = true;
              else throw SyntaxError(line_no, "expected '+' or '-' before '" + tok + "'");
              expect_term = true;
              continue;
            }
            auto star = tok.find('*');
            if (star == std::string::npos) throw SyntaxError(line_no, "term '" + tok + "' is not <coeff>*<gen>");
            Rational c = parse_rational(tok.substr(0, star));
            if (negate) c = -c;
            terms.emplace_back(c, tok.substr(star + 1));
            expect_term = false;
          }
          if (expect_term) throw SyntaxError(line_no, "dangling operator");
        }
        b.bracket(lhs[1], lhs[2], terms);
      } else {
        throw SyntaxError(line_no, "unknown directive '" + toks[0] + "'");
      }
    } catch (const SyntaxError&) {
      throw;
    } catch (const std::exception& ex) {
      throw SyntaxError(line_no, ex.what());
    }
  }
  if (!saw_gen) throw SyntaxError(line_no, "no generators declared");
  return b.build();
}

/// Inverse of parse_algebra_text for a structure table.
inline std::string render_algebra_text(const LieAlgebra& g) {
  std::ostringstream os;
  for (const auto& gen : g.generators()) os << "gen " << gen.name << " " << gen.grading << "\n";
  for (const auto& [pair, lc] : g.table()) {
    os << "bracket " << g.generator(pair.first).name << " " << g.generator(pair.second).name << " = "
       << g.render(lc) << "\n";
  }
  return os.str();
}

}  // namespace whittaker
