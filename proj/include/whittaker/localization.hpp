#pragma once

#include <string>
#include <vector>

#include "whittaker/pbw.hpp"

namespace whittaker {

/// U(heisenberg) with the central generator z inverted.
inline const AlgebraPtr& localized_heisenberg() {
  static const AlgebraPtr algebra =
      std::make_shared<const LieAlgebra>(builtin_algebra("heisenberg").localized("z"));
  return algebra;
}

/// Image of a Schrodinger generator under the homomorphism into the
/// localized Heisenberg enveloping algebra:
///   e -> p^2 / 2z,  f -> -q^2 / 2z,  h -> -qp/z - 1/2,  identity on p, q, z.
inline Element phi_generator(std::string_view name) {
  const AlgebraPtr& H = localized_heisenberg();
  const std::size_t q = H->index_of("q"), z = H->index_of("z"), p = H->index_of("p");
  auto mono = [&](int qe, int ze, int pe, const Rational& c) {
    Exponents m(H->dimension(), 0);
    m[q] = qe;
    m[z] = ze;
    m[p] = pe;
    return Element::monomial(H, m, c);
  };
  if (name == "e") return mono(0, -1, 2, ratio(1, 2));
  if (name == "f") return mono(2, -1, 0, ratio(-1, 2));
  if (name == "h") return mono(1, -1, 1, Rational(-1)) + Element::constant(H, ratio(-1, 2));
  if (name == "p" || name == "q" || name == "z") return Element::generator(H, name);
  throw DomainError("no image for generator '" + std::string(name) + "'");
}

/// Extends the generator images multiplicatively over each PBW monomial.
inline Element phi_image(const Element& x) {
  const LieAlgebra& S = x.algebra();
  if (!S.same_structure(schrodinger_algebra())) {
    throw DomainError("phi is defined on U(schrodinger) only");
  }
  const AlgebraPtr& H = localized_heisenberg();
  std::vector<Element> images;
  for (const auto& g : S.generators()) images.push_back(phi_generator(g.name));
  Straightener s(*H);
  Terms out;
  for (const auto& [m, c] : x.terms()) {
    Terms product = Element::constant(H, c).terms();
    for (std::size_t i = 0; i < m.size(); ++i) {
      for (int k = 0; k < m[i]; ++k) product = s.multiply(product, images[i].terms());
    }
    out += product;
  }
  return Element(H, std::move(out));
}

struct PhiPairCheck {
  std::string x, y;
  Element image_of_bracket;   // phi([x, y])
  Element bracket_of_images;  // [phi(x), phi(y)]
  bool passed;
};

struct PhiReport {
  std::vector<PhiPairCheck> pairs;
  /// phi(g) == g for g in {p, q, z}
  std::vector<std::pair<std::string, bool>> identity_on_heisenberg;
  bool passed() const {
    for (const auto& c : pairs) {
      if (!c.passed) return false;
    }
    for (const auto& [g, ok] : identity_on_heisenberg) {
      if (!ok) return false;
    }
    return true;
  }
};

inline PhiReport verify_phi_homomorphism() {
  const AlgebraPtr S = shared_builtin("schrodinger");
  const AlgebraPtr& H = localized_heisenberg();
  PhiReport report;
  for (std::size_t i = 0; i < S->dimension(); ++i) {
    for (std::size_t j = i + 1; j < S->dimension(); ++j) {
      const auto& x = S->generator(i).name;
      const auto& y = S->generator(j).name;
      Element bracket(S);
      for (const auto& [k, c] : S->bracket(i, j)) bracket += c * Element::generator(S, S->generator(k).name);
      Element lhs = phi_image(bracket);
      Element rhs = commutator(phi_generator(x), phi_generator(y));
      bool ok = lhs == rhs;
      report.pairs.push_back({x, y, std::move(lhs), std::move(rhs), ok});
    }
  }
  for (const char* g : {"p", "q", "z"}) {
    report.identity_on_heisenberg.emplace_back(g, phi_image(Element::generator(S, g)) == Element::generator(H, g));
  }
  return report;
}

}  // namespace whittaker
