#pragma once

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "whittaker/lie_algebra.hpp"
#include "whittaker/sparse.hpp"

namespace whittaker {

using Terms = SparseCombination<Exponents, MonomialOrder>;

/// Renders `f^2*q*p^3`; the empty monomial renders as `1`.
inline std::string render_monomial(const std::vector<std::string>& names, const Exponents& m) {
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += names[i];
    if (m[i] != 1) out += "^" + std::to_string(m[i]);
  }
  return out.empty() ? "1" : out;
}

/// `c1*m1 + c2*m2 + ...` with coefficients as num/den; zero renders as `0`.
inline std::string render_terms(const std::vector<std::string>& names, const Terms& t) {
  if (t.is_zero()) return "0";
  std::string out;
  for (const auto& [m, c] : t) {
    if (!out.empty()) out += " + ";
    out += to_string(c);
    bool constant = std::all_of(m.begin(), m.end(), [](int e) { return e == 0; });
    if (!constant) out += "*" + render_monomial(names, m);
  }
  return out;
}

inline std::vector<std::string> generator_names(const LieAlgebra& g) {
  std::vector<std::string> out;
  for (const auto& gen : g.generators()) out.push_back(gen.name);
  return out;
}

/// Memoized right multiplication of normal-ordered monomials by single
/// generators. Not thread-safe; create one per computation or guard it.
class Straightener {
 public:
  explicit Straightener(const LieAlgebra& g) : g_(g), central_(g.dimension(), false) {
    for (std::size_t i = 0; i < g.dimension(); ++i) central_[i] = g.is_central(i);
  }

  const LieAlgebra& algebra() const { return g_; }

  /// Normal form of (monomial a) * x.
  const Terms& times_generator(const Exponents& a, std::size_t x) {
    auto key = std::make_pair(a, x);
    if (auto it = cache_.find(key); it != cache_.end()) return it->second;
    Terms out;
    // The rightmost non-central factor decides whether x is already in place.
    std::optional<std::size_t> last;
    if (!central_[x]) {
      for (std::size_t i = a.size(); i-- > 0;) {
        if (a[i] != 0 && !central_[i]) {
          last = i;
          break;
        }
      }
    }
    if (!last || *last <= x) {
      Exponents m = a;
      ++m[x];
      out.add(std::move(m), Rational(1));
    } else {
      // a = a' y with y > x:  a' y x = (a' x) y + a' [y, x]
      std::size_t y = *last;
      Exponents shorter = a;
      --shorter[y];
      Terms moved = times_generator(shorter, x);
      for (const auto& [m, c] : moved) out.add_scaled(times_generator(m, y), c);
      for (const auto& [k, c] : g_.bracket(y, x)) out.add_scaled(times_generator(shorter, k), c);
    }
    return cache_.emplace(std::move(key), std::move(out)).first->second;
  }

  /// Normal form of (monomial a) * (monomial b).
  Terms times_monomial(const Exponents& a, const Exponents& b) {
    Terms current;
    current.add(a, Rational(1));
    for (std::size_t x = 0; x < b.size(); ++x) {
      if (central_[x]) continue;
      for (int k = 0; k < b[x]; ++k) {
        Terms next;
        for (const auto& [m, c] : current) next.add_scaled(times_generator(m, x), c);
        current = std::move(next);
      }
    }
    bool has_central = false;
    for (std::size_t x = 0; x < b.size(); ++x) has_central = has_central || (central_[x] && b[x] != 0);
    if (!has_central) return current;
    Terms shifted;
    for (const auto& [m, c] : current) {
      Exponents s = m;
      for (std::size_t x = 0; x < b.size(); ++x) {
        if (central_[x]) s[x] += b[x];
      }
      shifted.add(std::move(s), c);
    }
    return shifted;
  }

  Terms multiply(const Terms& a, const Terms& b) {
    Terms out;
    for (const auto& [ma, ca] : a) {
      for (const auto& [mb, cb] : b) out.add_scaled(times_monomial(ma, mb), ca * cb);
    }
    return out;
  }

 private:
  const LieAlgebra& g_;
  std::vector<bool> central_;
  std::map<std::pair<Exponents, std::size_t>, Terms> cache_;
};

/// Element of the universal enveloping algebra U(g), stored as a sparse sum
/// of PBW monomials in normal order. When the algebra is localized, the
/// designated central generator may carry negative exponents.
class Element {
 public:
  explicit Element(AlgebraPtr g) : g_(std::move(g)) {}

  Element(AlgebraPtr g, Terms terms) : g_(std::move(g)), terms_(std::move(terms)) {
    for (const auto& [m, c] : terms_) validate(m);
  }

  static Element constant(AlgebraPtr g, const Rational& c) {
    Element out(g);
    out.terms_.add(Exponents(g->dimension(), 0), c);
    return out;
  }

  static Element monomial(AlgebraPtr g, Exponents m, const Rational& c = Rational(1)) {
    Element out(g);
    out.validate(m);
    out.terms_.add(std::move(m), c);
    return out;
  }

  static Element generator(AlgebraPtr g, std::string_view name) {
    Exponents m(g->dimension(), 0);
    m[g->index_of(name)] = 1;
    return monomial(std::move(g), std::move(m));
  }

  const LieAlgebra& algebra() const { return *g_; }
  const AlgebraPtr& algebra_ptr() const { return g_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.is_zero(); }

  /// Largest total degree of a term, central generators excluded; -1 for zero.
  long degree() const {
    long best = -1;
    for (const auto& [m, c] : terms_) best = std::max(best, filtration_degree(m));
    return best;
  }

  long filtration_degree(const Exponents& m) const {
    long d = 0;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (!g_->is_central(i)) d += m[i];
    }
    return d;
  }

  std::string to_string() const { return render_terms(generator_names(*g_), terms_); }

  Element& operator+=(const Element& o) {
    check_compatible(o);
    terms_ += o.terms_;
    return *this;
  }
  Element& operator-=(const Element& o) {
    check_compatible(o);
    terms_ -= o.terms_;
    return *this;
  }
  Element& operator*=(const Rational& s) {
    terms_ *= s;
    return *this;
  }

  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  friend Element operator*(Element a, const Rational& s) { return a *= s; }
  friend Element operator*(const Rational& s, Element a) { return a *= s; }
  friend Element operator-(Element a) { return a *= Rational(-1); }

  friend bool operator==(const Element& a, const Element& b) {
    return a.g_->same_structure(*b.g_) && a.terms_ == b.terms_;
  }

  void check_compatible(const Element& o) const {
    if (g_ != o.g_ && !(g_->same_structure(*o.g_) && g_->laurent_central() == o.g_->laurent_central())) {
      throw DomainError("elements belong to different algebras (" + g_->name() + " vs " + o.g_->name() + ")");
    }
  }

 private:
  void validate(const Exponents& m) const {
    if (m.size() != g_->dimension()) throw DomainError("exponent tuple has wrong length");
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] < 0 && g_->laurent_central() != i) {
        throw DomainError("negative exponent on '" + g_->generator(i).name + "' outside Laurent mode");
      }
    }
  }

  AlgebraPtr g_;
  Terms terms_;
};

inline Element multiply(const Element& a, const Element& b) {
  a.check_compatible(b);
  Straightener s(a.algebra());
  return Element(a.algebra_ptr(), s.multiply(a.terms(), b.terms()));
}

inline Element operator*(const Element& a, const Element& b) { return multiply(a, b); }

inline Element commutator(const Element& a, const Element& b) {
  a.check_compatible(b);
  Straightener s(a.algebra());
  Terms ab = s.multiply(a.terms(), b.terms());
  ab -= s.multiply(b.terms(), a.terms());
  return Element(a.algebra_ptr(), std::move(ab));
}

inline Element power(const Element& a, unsigned n) {
  Straightener s(a.algebra());
  Terms out = Element::constant(a.algebra_ptr(), Rational(1)).terms();
  for (unsigned i = 0; i < n; ++i) out = s.multiply(out, a.terms());
  return Element(a.algebra_ptr(), std::move(out));
}

// ---------------------------------------------------------------------------
// Word rewriting

enum class RewriteStrategy { leftmost, rightmost, random };

/// Normal form of a product of generators by adjacent-pair rewriting
/// x_j x_i -> x_i x_j + [x_j, x_i] (j > i). Independent of Straightener.
inline Element normal_order(const AlgebraPtr& g, const std::vector<std::size_t>& word,
                            RewriteStrategy strategy = RewriteStrategy::leftmost, std::uint64_t seed = 0) {
  for (std::size_t x : word) {
    if (x >= g->dimension()) throw DomainError("generator index out of range in word");
  }
  std::mt19937_64 rng(seed);
  std::map<std::vector<std::size_t>, Rational> pending;
  pending.emplace(word, Rational(1));
  Terms out;
  auto push = [&pending](std::vector<std::size_t> w, const Rational& c) {
    auto [it, inserted] = pending.try_emplace(std::move(w), c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) pending.erase(it);
    }
  };
  while (!pending.empty()) {
    auto node = pending.extract(pending.begin());
    const auto& w = node.key();
    const Rational& c = node.mapped();
    std::vector<std::size_t> unsorted;
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
      if (w[i] > w[i + 1]) unsorted.push_back(i);
    }
    if (unsorted.empty()) {
      Exponents m(g->dimension(), 0);
      for (std::size_t x : w) ++m[x];
      out.add(std::move(m), c);
      continue;
    }
    std::size_t pos = unsorted.front();
    if (strategy == RewriteStrategy::rightmost) pos = unsorted.back();
    if (strategy == RewriteStrategy::random) {
      pos = unsorted[std::uniform_int_distribution<std::size_t>(0, unsorted.size() - 1)(rng)];
    }
    std::vector<std::size_t> swapped = w;
    std::swap(swapped[pos], swapped[pos + 1]);
    push(std::move(swapped), c);
    for (const auto& [k, ck] : g->bracket(w[pos], w[pos + 1])) {
      std::vector<std::size_t> contracted(w.begin(), w.begin() + static_cast<long>(pos));
      contracted.push_back(k);
      contracted.insert(contracted.end(), w.begin() + static_cast<long>(pos) + 2, w.end());
      push(std::move(contracted), c * ck);
    }
  }
  return Element(g, std::move(out));
}

inline Element normal_order(const AlgebraPtr& g, const std::vector<std::string>& word,
                            RewriteStrategy strategy = RewriteStrategy::leftmost, std::uint64_t seed = 0) {
  std::vector<std::size_t> idx;
  for (const auto& name : word) idx.push_back(g->index_of(name));
  return normal_order(g, idx, strategy, seed);
}

// ---------------------------------------------------------------------------
// Parsing

/// Parses sums of products such as `2/1*f*p + -1/1*q`, `q - 1`, `h^2*e`,
/// `z^-1` (localized algebras only). Products are normal-ordered.
inline Element parse_element(const AlgebraPtr& g, std::string_view text) {
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto fail = [&](const std::string& why) -> DomainError {
    return DomainError("cannot parse element '" + std::string(text) + "' at offset " + std::to_string(pos) + ": " + why);
  };
  auto read_integer = [&]() -> std::string {
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (start == pos) throw fail("expected digits");
    return std::string(text.substr(start, pos - start));
  };
  Element total(g);
  bool first_term = true;
  skip();
  if (pos == text.size()) throw fail("empty expression");
  while (pos < text.size()) {
    Rational sign(1);
    skip();
    if (!first_term) {
      if (text[pos] == '+') ++pos;
      else if (text[pos] == '-') { sign = -1; ++pos; }
      else throw fail("expected '+' or '-'");
      skip();
    }
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
      if (text[pos] == '-') sign = -sign;
      ++pos;
      skip();
    }
    Element term = Element::constant(g, sign);
    bool first_factor = true;
    while (true) {
      skip();
      if (!first_factor) {
        if (pos < text.size() && text[pos] == '*') {
          ++pos;
          skip();
        } else {
          break;
        }
      }
      first_factor = false;
      if (pos >= text.size()) throw fail("expected factor");
      if (std::isdigit(static_cast<unsigned char>(text[pos]))) {
        std::string lit = read_integer();
        if (pos < text.size() && text[pos] == '/') {
          ++pos;
          lit += "/" + read_integer();
        }
        term *= parse_rational(lit);
      } else if (std::isalpha(static_cast<unsigned char>(text[pos])) || text[pos] == '_') {
        std::size_t start = pos;
        while (pos < text.size() && (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_')) ++pos;
        std::string name(text.substr(start, pos - start));
        long exponent = 1;
        if (pos < text.size() && text[pos] == '^') {
          ++pos;
          bool negative = false;
          if (pos < text.size() && text[pos] == '-') {
            negative = true;
            ++pos;
          }
          exponent = std::stol(read_integer());
          if (negative) exponent = -exponent;
        }
        std::size_t idx = g->index_of(name);
        Exponents m(g->dimension(), 0);
        m[idx] = static_cast<int>(exponent);
        term = multiply(term, Element::monomial(g, std::move(m)));
      } else {
        throw fail("unexpected character");
      }
    }
    total += term;
    first_term = false;
    skip();
  }
  return total;
}

// ---------------------------------------------------------------------------
// Special elements

/// Casimir element 4fe + 2h + h^2 of sl2 (requires e, h, f).
inline Element casimir_sl2(const AlgebraPtr& g) {
  for (const char* n : {"e", "h", "f"}) {
    if (!g->find(n)) throw DomainError(std::string("Casimir element needs generator '") + n + "'");
  }
  auto e = Element::generator(g, "e");
  auto h = Element::generator(g, "h");
  auto f = Element::generator(g, "f");
  return Rational(4) * (f * e) + Rational(2) * h + h * h;
}

/// Quasi-central element f p^2 - q(1+h)p - q^2 e (requires all six generators).
inline Element quasi_central(const AlgebraPtr& g) {
  for (const char* n : {"e", "h", "f", "p", "q", "z"}) {
    if (!g->find(n)) throw DomainError(std::string("quasi-central element needs generator '") + n + "'");
  }
  auto e = Element::generator(g, "e");
  auto h = Element::generator(g, "h");
  auto f = Element::generator(g, "f");
  auto p = Element::generator(g, "p");
  auto q = Element::generator(g, "q");
  auto one = Element::constant(g, Rational(1));
  return f * p * p - q * (one + h) * p - q * q * e;
}

inline Element special_element(const AlgebraPtr& g, std::string_view name) {
  if (name == "casimir_sl2") return casimir_sl2(g);
  if (name == "quasi_central") return quasi_central(g);
  throw DomainError("unknown special element '" + std::string(name) + "'");
}

/// Common grading of all terms, or nullopt when inhomogeneous.
inline std::optional<long> grading_of(const Element& x) {
  if (x.is_zero()) throw DomainError("grading of the zero element is undefined");
  std::optional<long> common;
  for (const auto& [m, c] : x.terms()) {
    long d = 0;
    for (std::size_t i = 0; i < m.size(); ++i) d += static_cast<long>(m[i]) * x.algebra().generator(i).grading;
    if (common && *common != d) return std::nullopt;
    common = d;
  }
  return common;
}

// ---------------------------------------------------------------------------
// Centrality

struct CentralityEntry {
  std::string generator;
  Element commutator;
  bool passed;
};

struct CentralityReport {
  bool modulo_central = false;
  std::vector<CentralityEntry> entries;
  bool passed() const {
    return std::all_of(entries.begin(), entries.end(), [](const auto& e) { return e.passed; });
  }
};

/// Checks [u, g] = 0 for each listed generator g. With `modulo_central`,
/// a commutator also passes when every term carries a positive power of a
/// central generator.
inline CentralityReport centrality_check(const Element& u, const std::vector<std::string>& generators,
                                         bool modulo_central) {
  CentralityReport report;
  report.modulo_central = modulo_central;
  const auto central = u.algebra().central_generators();
  for (const auto& name : generators) {
    Element c = commutator(u, Element::generator(u.algebra_ptr(), name));
    bool ok = c.is_zero();
    if (!ok && modulo_central) {
      ok = std::all_of(c.terms().begin(), c.terms().end(), [&](const auto& term) {
        return std::any_of(central.begin(), central.end(), [&](std::size_t z) { return term.first[z] > 0; });
      });
    }
    report.entries.push_back({name, std::move(c), ok});
  }
  return report;
}

// ---------------------------------------------------------------------------
// Commutator identities for powers

struct IdentityCheck {
  std::string identity;
  unsigned n;
  Element lhs;
  Element rhs;
  bool passed;
};

struct IdentityReport {
  std::vector<IdentityCheck> checks;
  bool passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.passed; });
  }
};

/// Both sides of the six power-commutator identities in U(schrodinger) for
/// n = 1..n_max, each side evaluated independently by the engine.
inline IdentityReport verify_straightening_identities(const AlgebraPtr& g, unsigned n_max) {
  if (n_max < 1) throw DomainError("n_max must be at least 1");
  if (!g->same_structure(schrodinger_algebra())) {
    throw DomainError("power-commutator identities are stated for the Schrodinger algebra");
  }
  auto e = Element::generator(g, "e");
  auto f = Element::generator(g, "f");
  auto h = Element::generator(g, "h");
  auto p = Element::generator(g, "p");
  auto q = Element::generator(g, "q");
  auto z = Element::generator(g, "z");
  auto zero = Element(g);
  IdentityReport report;
  auto record = [&](std::string label, unsigned n, Element lhs, Element rhs) {
    bool ok = lhs == rhs;
    report.checks.push_back({std::move(label), n, std::move(lhs), std::move(rhs), ok});
  };
  for (unsigned n = 1; n <= n_max; ++n) {
    const Rational rn(static_cast<long>(n));
    record("[p,f^n] = -n q f^(n-1)", n, commutator(p, power(f, n)), -rn * (q * power(f, n - 1)));

    Element rhs2 = zero, rhs3 = zero, rhs6 = zero;
    for (unsigned i = 1; i <= n; ++i) {
      Rational c = binomial(n, i);
      rhs2 += c * power(Rational(-1), i) * (power(h, n - i) * p);
      rhs3 += c * (power(h, n - i) * q);
      rhs6 += c * power(Rational(-2), i) * (power(h, n - i) * e);
    }
    record("[p,h^n] = sum (-1)^i C(n,i) h^(n-i) p", n, commutator(p, power(h, n)), rhs2);
    record("[q,h^n] = sum C(n,i) h^(n-i) q", n, commutator(q, power(h, n)), rhs3);

    Element rhs4 = rn * (power(q, n - 1) * p);
    if (n >= 2) rhs4 += ratio(static_cast<long>(n * (n - 1)), 2) * (power(q, n - 2) * z);
    record("[e,q^n] = n q^(n-1) p + n(n-1)/2 q^(n-2) z", n, commutator(e, power(q, n)), rhs4);

    record("[e,f^n] = n f^(n-1) h - n(n-1) f^(n-1)", n, commutator(e, power(f, n)),
           rn * (power(f, n - 1) * h) - Rational(static_cast<long>(n * (n - 1))) * power(f, n - 1));
    record("[e,h^n] = sum (-2)^i C(n,i) h^(n-i) e", n, commutator(e, power(h, n)), rhs6);
  }
  return report;
}

}  // namespace whittaker
