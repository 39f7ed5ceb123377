#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "whittaker/module.hpp"
#include "whittaker/pbw.hpp"

namespace whittaker {

/// Seeded generators of random test data. std::mt19937_64 is fully
/// specified by the standard, and only integer draws through explicit
/// modular reduction are used, so sequences are identical across platforms.
class RandomSource {
 public:
  explicit RandomSource(std::uint64_t seed) : engine_(seed) {}

  /// Uniform-ish integer in [lo, hi].
  long integer(long lo, long hi) {
    return lo + static_cast<long>(engine_() % static_cast<std::uint64_t>(hi - lo + 1));
  }

  Rational rational(long bound = 5) {
    long num = integer(-bound, bound);
    long den = integer(1, 3);
    return ratio(num, den);
  }

  std::size_t generator(const LieAlgebra& g) { return static_cast<std::size_t>(integer(0, static_cast<long>(g.dimension()) - 1)); }

  std::vector<std::size_t> word(const LieAlgebra& g, long max_length) {
    std::vector<std::size_t> w(static_cast<std::size_t>(integer(0, max_length)));
    for (auto& x : w) x = generator(g);
    return w;
  }

  /// Normal-ordered monomial with exponents bounded so that the total
  /// degree is at most max_degree.
  Exponents monomial(const LieAlgebra& g, long max_degree) {
    Exponents m(g.dimension(), 0);
    long budget = integer(0, max_degree);
    while (budget-- > 0) ++m[generator(g)];
    return m;
  }

  Element element(const AlgebraPtr& g, long max_terms, long max_degree) {
    Element out(g);
    long terms = integer(1, max_terms);
    for (long t = 0; t < terms; ++t) out += Element::monomial(g, monomial(*g, max_degree), nonzero_rational());
    return out;
  }

  Rational nonzero_rational(long bound = 5) {
    Rational r;
    do r = rational(bound);
    while (r == 0);
    return r;
  }

  Exponents basis_monomial(const Module& m, long max_degree) {
    Exponents b(m.slots(), 0);
    if (b.empty()) return b;
    long budget = integer(0, max_degree);
    while (budget-- > 0) ++b[static_cast<std::size_t>(integer(0, static_cast<long>(b.size()) - 1))];
    return b;
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace whittaker
