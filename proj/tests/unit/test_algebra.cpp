#include <gtest/gtest.h>

#include "oracle.hpp"
#include "whittaker/tasks.hpp"

using namespace whittaker;

namespace {

LinearCombination lc(const LieAlgebra& g, std::vector<std::pair<long, std::string>> terms) {
  LinearCombination out;
  for (const auto& [c, name] : terms) add_term(out, g.index_of(name), Rational(c));
  return out;
}

}  // namespace

TEST(Bracket, TableEntries) {
  const LieAlgebra s = schrodinger_algebra();
  EXPECT_EQ(s.bracket("h", "e"), lc(s, {{2, "e"}}));
  EXPECT_TRUE(s.bracket("e", "e").empty());
  EXPECT_EQ(s.bracket("f", "p"), lc(s, {{1, "q"}}));
  EXPECT_EQ(s.bracket("q", "e"), lc(s, {{-1, "p"}}));
  EXPECT_TRUE(s.bracket("f", "q").empty());
  EXPECT_TRUE(s.bracket("e", "p").empty());
  EXPECT_THROW(s.bracket("e", "x"), DomainError);
}

TEST(Bracket, AntisymmetryOnAllPairs) {
  for (const char* name : {"schrodinger", "sl2", "heisenberg", "s1"}) {
    const LieAlgebra g = builtin_algebra(name);
    for (std::size_t i = 0; i < g.dimension(); ++i) {
      for (std::size_t j = 0; j < g.dimension(); ++j) {
        EXPECT_EQ(g.bracket(i, j), scaled(g.bracket(j, i), Rational(-1))) << name;
      }
    }
  }
}

TEST(Bracket, MatchesDenseReferenceTable) {
  const LieAlgebra s = schrodinger_algebra();
  const auto dense = oracle::schrodinger_table();
  for (int i = 0; i < 6; ++i) {
    for (int j = 0; j < 6; ++j) {
      auto got = s.bracket(s.index_of(std::string(1, oracle::kNames[i])), s.index_of(std::string(1, oracle::kNames[j])));
      for (int k = 0; k < 6; ++k) {
        std::size_t kk = s.index_of(std::string(1, oracle::kNames[k]));
        Rational expected = dense.c[i][j][k];
        Rational actual = got.count(kk) ? got.at(kk) : Rational(0);
        EXPECT_EQ(actual, expected);
      }
    }
  }
}

TEST(Generators, OrderAndGrading) {
  const LieAlgebra s = schrodinger_algebra();
  std::vector<std::pair<std::string, int>> expected = {{"f", -2}, {"q", -1}, {"h", 0}, {"z", 0}, {"p", 1}, {"e", 2}};
  ASSERT_EQ(s.dimension(), 6u);
  for (std::size_t i = 0; i < 6; ++i) {
    EXPECT_EQ(s.generator(i).name, expected[i].first);
    EXPECT_EQ(s.generator(i).grading, expected[i].second);
    EXPECT_EQ(s.generator(i).index, i);
  }
  EXPECT_EQ(s.distinguished("nplus"), (std::vector<std::size_t>{4, 5}));
  EXPECT_EQ(s.distinguished("nminus"), (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(s.distinguished("cartan"), (std::vector<std::size_t>{2, 3}));
  EXPECT_EQ(s.distinguished("central"), (std::vector<std::size_t>{3}));
}

TEST(Jacobi, SchrodingerPassesAllTwentyTriples) {
  auto report = check_jacobi(schrodinger_algebra());
  EXPECT_EQ(report.triples_checked, 20u);
  EXPECT_TRUE(report.passed());
}

TEST(Jacobi, DenseReferenceAgrees) {
  const auto dense = oracle::schrodinger_table();
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j)
      for (int k = 0; k < 6; ++k)
        for (const auto& c : oracle::jacobiator(dense, i, j, k)) EXPECT_EQ(c, 0);
}

TEST(Jacobi, BuiltinsPass) {
  for (const char* name : {"sl2", "heisenberg", "s1"}) {
    EXPECT_TRUE(check_jacobi(builtin_algebra(name)).passed()) << name;
    EXPECT_TRUE(check_grading(builtin_algebra(name)).empty()) << name;
  }
  EXPECT_TRUE(check_grading(schrodinger_algebra()).empty());
}

TEST(Jacobi, WrongHeisenbergBracketFailsAtHPQ) {
  LieAlgebra broken = read_algebra_file(SAMPLES_DIR "/broken_jacobi.alg");
  auto report = check_jacobi(broken);
  ASSERT_FALSE(report.passed());
  bool found = false;
  for (const auto& f : report.failures) {
    std::set<std::string> names{broken.generator(f.x).name, broken.generator(f.y).name, broken.generator(f.z).name};
    if (names == std::set<std::string>{"h", "p", "q"}) found = true;
  }
  EXPECT_TRUE(found);
  EXPECT_THROW(parse_algebra_file(SAMPLES_DIR "/broken_jacobi.alg"), DomainError);
}

TEST(Jacobi, AbelianPasses) {
  auto g = LieAlgebraBuilder("abelian").generator("a", 0).generator("b", 0).build();
  EXPECT_TRUE(check_jacobi(g).passed());
  EXPECT_EQ(check_jacobi(g).triples_checked, 0u);
}

TEST(Builtins, Shapes) {
  const LieAlgebra sl2 = builtin_algebra("sl2");
  EXPECT_EQ(sl2.dimension(), 3u);
  EXPECT_EQ(sl2.bracket("h", "e"), lc(sl2, {{2, "e"}}));
  EXPECT_EQ(sl2.bracket("h", "f"), lc(sl2, {{-2, "f"}}));
  EXPECT_EQ(sl2.bracket("e", "f"), lc(sl2, {{1, "h"}}));

  const LieAlgebra heis = builtin_algebra("heisenberg");
  EXPECT_EQ(heis.dimension(), 3u);
  EXPECT_EQ(heis.table().size(), 1u);
  EXPECT_EQ(heis.bracket("p", "q"), lc(heis, {{1, "z"}}));

  const LieAlgebra s1 = builtin_algebra("s1");
  EXPECT_EQ(s1.dimension(), 5u);
  EXPECT_FALSE(s1.find("f").has_value());
  EXPECT_THROW(builtin_algebra("so3"), DomainError);
}

TEST(Subalgebra, ClosedAndOpenSets) {
  auto s = shared_builtin("schrodinger");
  EXPECT_NO_THROW(subalgebra_restrict(s, {"p", "e"}));
  EXPECT_TRUE(subalgebra_restrict(s, {"p", "e"}).to_algebra("n").table().empty());
  EXPECT_NO_THROW(subalgebra_restrict(s, {"f", "q"}));
  EXPECT_NO_THROW(subalgebra_restrict(s, {"h", "z"}));
  try {
    subalgebra_restrict(s, {"p", "f"});
    FAIL() << "expected an error";
  } catch (const DomainError& e) {
    EXPECT_NE(std::string(e.what()).find("[f,p]"), std::string::npos) << e.what();
  }
}

TEST(AlgebraFile, RoundTripsToBuiltin) {
  auto g = parse_algebra_file(SAMPLES_DIR "/schrodinger.alg");
  EXPECT_TRUE(g->same_structure(schrodinger_algebra()));
  auto again = parse_algebra_text(render_algebra_text(*g));
  EXPECT_TRUE(again.same_structure(*g));
  EXPECT_TRUE(parse_algebra_file("schrodinger")->same_structure(schrodinger_algebra()));
}

TEST(AlgebraFile, Errors) {
  try {
    parse_algebra_text("gen a 0\nbracket a b = 1/1*a\n");
    FAIL() << "expected a syntax error";
  } catch (const SyntaxError& e) {
    EXPECT_EQ(e.line(), 2u);
  }
  EXPECT_THROW(parse_algebra_text("gen a 0\ngen a 1\n"), SyntaxError);
  EXPECT_THROW(parse_algebra_text("gen a 0\ngen b 0\nbracket a b = 1/0*a\n"), SyntaxError);
  EXPECT_THROW(parse_algebra_text("gen a 0\ngen b 0\nbracket a b = 1/1*a\nbracket b a = 1/1*b\n"), SyntaxError);
  EXPECT_THROW(parse_algebra_text("# nothing\n"), SyntaxError);
  EXPECT_THROW(parse_algebra_text("gen a 0\nbracket a a = 1/1*a\n"), SyntaxError);
  EXPECT_THROW(read_algebra_file("/nonexistent/file.alg"), DomainError);
}

TEST(AlgebraFile, SignsAndZero) {
  auto g = parse_algebra_text("gen a 0\ngen b 0\ngen c 0\nbracket a b = 1/2*a - 3/1*c\nbracket a c = 0\n");
  LinearCombination expected;
  add_term(expected, 0, ratio(1, 2));
  add_term(expected, 2, Rational(-3));
  EXPECT_EQ(g.bracket("a", "b"), expected);
  EXPECT_TRUE(g.bracket("a", "c").empty());
}

TEST(Rationals, ParseAndRender) {
  EXPECT_EQ(parse_rational("3/6"), ratio(1, 2));
  EXPECT_EQ(parse_rational("-2"), Rational(-2));
  EXPECT_EQ(to_string(ratio(-4, 2)), "-2/1");
  EXPECT_EQ(to_string(Rational(0)), "0/1");
  EXPECT_THROW(parse_rational("1/0"), DomainError);
  EXPECT_THROW(parse_rational("1.5"), DomainError);
  EXPECT_THROW(parse_rational(""), DomainError);
  EXPECT_EQ(power(ratio(2, 3), -2), ratio(9, 4));
}
