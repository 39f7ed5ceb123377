#include <gtest/gtest.h>

#include "whittaker/tasks.hpp"

using namespace whittaker;

TEST(Phi, GeneratorImages) {
  const AlgebraPtr& H = localized_heisenberg();
  EXPECT_EQ(phi_generator("e"), parse_element(H, "1/2*z^-1*p^2"));
  EXPECT_EQ(phi_generator("f"), parse_element(H, "-1/2*q^2*z^-1"));
  EXPECT_EQ(phi_generator("h"), parse_element(H, "-1*q*z^-1*p - 1/2"));
  EXPECT_EQ(phi_generator("p"), parse_element(H, "p"));
  EXPECT_THROW(phi_generator("x"), DomainError);
}

TEST(Phi, BracketsPreservedOnAllPairs) {
  auto report = verify_phi_homomorphism();
  EXPECT_EQ(report.pairs.size(), 15u);
  for (const auto& c : report.pairs) EXPECT_TRUE(c.passed) << c.x << "," << c.y;
  for (const auto& [g, ok] : report.identity_on_heisenberg) EXPECT_TRUE(ok) << g;
  EXPECT_TRUE(report.passed());
}

TEST(Phi, HAndEBracket) {
  // [phi(h), phi(e)] = 2 phi(e)
  EXPECT_EQ(commutator(phi_generator("h"), phi_generator("e")), Rational(2) * phi_generator("e"));
  EXPECT_EQ(commutator(phi_generator("e"), phi_generator("f")), phi_generator("h"));
}

TEST(Phi, MultiplicativeOnProducts) {
  const AlgebraPtr S = shared_builtin("schrodinger");
  Element a = parse_element(S, "e*f + 2*h");
  Element b = parse_element(S, "q*p - 1/3*f");
  EXPECT_EQ(phi_image(a * b), phi_image(a) * phi_image(b));
  EXPECT_EQ(phi_image(casimir_sl2(S)), parse_element(localized_heisenberg(), "-3/4"));
}

TEST(Phi, RejectsOtherAlgebras) {
  EXPECT_THROW(phi_image(Element::generator(shared_builtin("sl2"), "e")), DomainError);
}
