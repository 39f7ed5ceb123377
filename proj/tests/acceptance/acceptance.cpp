// Acceptance runner: one PASS/FAIL line per criterion, nonzero exit on any
// failure.
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "whittaker/tasks.hpp"

using namespace whittaker;

namespace {

bool same_span(const std::vector<ModuleVector>& a, const std::vector<ModuleVector>& b) {
  VectorBasis x, y, both;
  for (const auto& v : a) x.insert(v), both.insert(v);
  for (const auto& v : b) y.insert(v), both.insert(v);
  return x.rank() == y.rank() && both.rank() == x.rank();
}

std::vector<ModuleVector> powers_on_cyclic(const Module& m, const Element& u, int k_max) {
  std::vector<ModuleVector> out;
  ModuleVector v = m.cyclic_vector();
  for (int k = 0; k <= k_max; ++k) {
    out.push_back(v);
    v = act(u, v, m);
  }
  return out;
}

bool jacobi() {
  auto r = check_jacobi(schrodinger_algebra());
  return r.triples_checked == 20 && r.passed();
}

bool identities() {
  auto r = verify_straightening_identities(shared_builtin("schrodinger"), 6);
  return r.checks.size() == 36 && r.passed();
}

bool centrality() {
  auto S = shared_builtin("schrodinger");
  Element omega = casimir_sl2(S);
  Element c = quasi_central(S);
  return centrality_check(omega, {"e", "h", "f"}, false).passed() &&
         centrality_check(c, {"f", "q", "h", "z", "p", "e"}, true).passed() && grading_of(omega) == 0 &&
         grading_of(c) == 0;
}

bool phi() {
  auto r = verify_phi_homomorphism();
  return r.pairs.size() == 15 && r.passed();
}

bool whittaker_dimensions() {
  bool ok = true;
  {
    auto m = build_module(descriptors::universal_sl2(0));
    ok = ok && whittaker_vectors(*m, {0, 0}, 6).dimension() == 7;
  }
  {
    auto m = build_module(descriptors::universal_sl2(1));
    auto r = whittaker_vectors(*m, {1, 0}, 6);
    ok = ok && r.dimension() == 4 && same_span(r.basis, powers_on_cyclic(*m, casimir_sl2(m->algebra()), 3));
  }
  {
    auto m = build_module(descriptors::universal_S1(1, 0));
    auto r = whittaker_vectors(*m, {1, 0}, 6);
    std::vector<ModuleVector> q_powers;
    for (int j = 0; j <= 6; ++j) q_powers.push_back(m->basis_vector({j, 0}));
    ok = ok && r.dimension() == 7 && same_span(r.basis, q_powers);
  }
  {
    auto m = build_module(descriptors::universal_S1(0, 1));
    ok = ok && whittaker_vectors(*m, {0, 1}, 6).dimension() == 1;
  }
  {
    auto m = build_module(descriptors::universal_S(0, 1));
    auto r = whittaker_vectors(*m, {0, 1}, 6);
    ok = ok && r.dimension() == 4 && same_span(r.basis, powers_on_cyclic(*m, quasi_central(m->algebra()), 3));
  }
  return ok;
}

bool wrong_type() {
  bool ok = true;
  const std::vector<WhittakerType> types = {{0, 1}, {1, 0}, {1, 1}, {2, ratio(1, 2)}, {-1, 3}};
  for (const auto& phi : types) {
    auto m = build_module(descriptors::universal_S(phi.e_value, phi.p_value));
    for (const auto& other : types) {
      if (other == phi) continue;
      ok = ok && whittaker_vectors(*m, other, 4).dimension() == 0;
    }
  }
  return ok;
}

bool quotient_scalars() {
  bool ok = true;
  auto ma = build_module(descriptors::M_a(0, 1, 3));
  Element c = quasi_central(ma->algebra());
  for (const auto& b : ma->basis_up_to(6)) ok = ok && act(c, ma->basis_vector(b), *ma) == ma->basis_vector(b) * Rational(3);
  auto ms = build_module(descriptors::M_sl2_casimir(1, 5));
  Element omega = casimir_sl2(ms->algebra());
  for (const auto& b : ms->basis_up_to(6)) ok = ok && act(omega, ms->basis_vector(b), *ms) == ms->basis_vector(b) * Rational(5);
  return ok;
}

bool simplicity() {
  bool ok = true;
  auto one = [&](ModulePtr m) {
    auto r = simplicity_probe(*m, m->type(), 6);
    ok = ok && r.passed && r.solver.dimension() == 1;
  };
  one(build_module(descriptors::M_a(0, 1, 0)));
  one(build_module(descriptors::L_xi(1, 1)));
  one(build_module(descriptors::M_sl2_casimir(1, 5)));
  one(build_module(descriptors::universal_H(2, 5)));
  one(tensor_module(descriptors::universal_H(1, 1), descriptors::M_sl2_casimir(1, 0)));
  auto verma = build_module(descriptors::verma_alpha(2));
  for (long n = 3; n <= 6; ++n) {
    auto r = simplicity_probe(*verma, {0, 0}, n);
    bool found = false;
    for (const auto& v : r.extra_vectors) found = found || v == verma->basis_vector({3});
    ok = ok && !r.passed && found;
  }
  return ok;
}

bool filtration() {
  auto r = filtration_check({0, 1}, 0, 2, 6);
  bool certified = true;
  for (bool c : r.generator_certified) certified = certified && c;
  return r.passed && certified && r.generators.size() == 3;
}

bool tensor_types() {
  bool ok = true;
  struct Case {
    Rational z, p, e_prime;
  };
  for (const auto& c : {Case{1, 0, 1}, Case{2, 2, 0}}) {
    auto first = descriptors::universal_H(c.p, c.z);
    auto second = c.e_prime != 0 ? descriptors::M_sl2_casimir(c.e_prime, 0) : descriptors::verma_alpha(ratio(1, 2));
    auto m = tensor_module(first, second);
    ModuleVector w = m->cyclic_vector();
    Rational expected_e = c.e_prime + c.p * c.p / (2 * c.z);
    ok = ok && m->type().e_value == expected_e && m->type().p_value == c.p;
    ok = ok && act("e", w, *m) == w * expected_e && act("p", w, *m) == w * c.p && act("z", w, *m) == w * c.z;
    auto r = whittaker_vectors(*m, {expected_e, c.p}, 0);
    ok = ok && r.certified && r.dimension() == 1 && r.basis[0] == w;
  }
  return ok;
}

bool properties() {
  constexpr int cases = 200;
  auto S = shared_builtin("schrodinger");
  RandomSource rng(20261015);
  int failures = 0;

  std::vector<ModulePtr> modules = {
      build_module(descriptors::universal_S(ratio(1, 2), 2, 3)),
      build_module(descriptors::universal_S1(2, -1)),
      build_module(descriptors::universal_sl2(3)),
      build_module(descriptors::universal_H(2, ratio(-1, 3))),
      build_module(descriptors::L_xi(2, ratio(3, 2))),
      build_module(descriptors::M_a(1, 2, ratio(-1, 2))),
      build_module(descriptors::M_sl2_casimir(ratio(1, 3), 4)),
      build_module(descriptors::verma_alpha(ratio(5, 2))),
      tensor_module(descriptors::universal_H(1, 2), descriptors::M_sl2_casimir(1, 3)),
  };
  auto apply = [](const Module& m, std::size_t x, const ModuleVector& v) {
    ModuleVector out;
    for (const auto& [b, c] : v) out.add_scaled(m.act_generator(x, b), c);
    return out;
  };
  // representation axioms
  for (int i = 0; i < cases; ++i) {
    const Module& m = *modules[static_cast<std::size_t>(i) % modules.size()];
    std::size_t x = rng.generator(*m.algebra()), y = rng.generator(*m.algebra());
    ModuleVector v = m.basis_vector(rng.basis_monomial(m, 4));
    ModuleVector lhs;
    for (const auto& [k, c] : m.algebra()->bracket(x, y)) lhs.add_scaled(apply(m, k, v), c);
    if (lhs != apply(m, x, apply(m, y, v)) - apply(m, y, apply(m, x, v))) ++failures;
  }
  // associativity
  for (int i = 0; i < cases; ++i) {
    Element a = rng.element(S, 3, 3), b = rng.element(S, 3, 3), c = rng.element(S, 3, 3);
    if ((a * b) * c != a * (b * c)) ++failures;
  }
  // normal-order idempotence and strategy independence
  for (int i = 0; i < cases; ++i) {
    auto word = rng.word(*S, 6);
    Element x = normal_order(S, word, RewriteStrategy::leftmost);
    if (x != normal_order(S, word, RewriteStrategy::random, static_cast<std::uint64_t>(i))) ++failures;
    Element again(S);
    for (const auto& [m, c] : x.terms()) {
      std::vector<std::size_t> w;
      for (std::size_t g = 0; g < m.size(); ++g) w.insert(w.end(), static_cast<std::size_t>(m[g]), g);
      again += c * normal_order(S, w, RewriteStrategy::rightmost);
    }
    if (again != x) ++failures;
  }
  // grading preservation
  for (int i = 0; i < cases; ++i) {
    Element a = Element::monomial(S, rng.monomial(*S, 3)), b = Element::monomial(S, rng.monomial(*S, 3));
    Element ab = a * b;
    if (!ab.is_zero() && grading_of(ab) != *grading_of(a) + *grading_of(b)) ++failures;
  }
  // degree monotonicity of the positive part
  std::vector<ModulePtr> universal = {modules[0], modules[1], modules[2], modules[3]};
  for (int i = 0; i < cases; ++i) {
    const Module& m = *universal[static_cast<std::size_t>(i) % universal.size()];
    Exponents b = rng.basis_monomial(m, 6);
    for (const char* x : {"e", "p", "z"}) {
      if (!m.algebra()->find(x)) continue;
      for (const auto& [key, c] : act(x, m.basis_vector(b), m)) {
        if (m.degree(key) > m.degree(b)) ++failures;
      }
    }
  }
  return failures == 0;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<bool()>>> criteria = {
      {"1. Jacobi identity on all 20 generator triples", jacobi},
      {"2. power-commutator identities for n = 1..6", identities},
      {"3. Casimir and quasi-central centrality, grading 0", centrality},
      {"4. phi preserves all 15 brackets, identity on p, q, z", phi},
      {"5. Whittaker dimensions at degree bound 6", whittaker_dimensions},
      {"6. wrong-type probes have no solutions at bound 4", wrong_type},
      {"7. quotient scalars for c and the Casimir", quotient_scalars},
      {"8. simplicity probes and the Verma singular vector", simplicity},
      {"9. filtration by powers of c - a", filtration},
      {"10. tensor module type arithmetic", tensor_types},
      {"11. randomized property suites, 200 cases each", properties},
  };
  int failed = 0;
  for (const auto& [label, check] : criteria) {
    bool ok = false;
    std::string error;
    try {
      ok = check();
    } catch (const std::exception& e) {
      error = e.what();
    }
    std::printf("[%s] %s%s\n", ok ? "PASS" : "FAIL", label.c_str(), error.empty() ? "" : (" (" + error + ")").c_str());
    if (!ok) ++failed;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
