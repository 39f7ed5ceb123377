#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "whittaker/linear_algebra.hpp"
#include "whittaker/module.hpp"

namespace whittaker {

/// Raised when an element expected to act by a scalar does not.
class InconsistencyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using VectorBasis = EchelonBasis<Exponents, MonomialOrder>;

/// Named parameters of a descriptor, in a fixed order.
inline std::vector<std::pair<std::string, Rational>> descriptor_parameters(const ModuleDescriptor& d) {
  std::vector<std::pair<std::string, Rational>> out;
  switch (d.kind) {
    case ModuleKind::universal_S:
      out = {{"e", d.type.e_value}, {"p", d.type.p_value}, {"z", d.level}};
      break;
    case ModuleKind::universal_S1:
      out = {{"e", d.type.e_value}, {"p", d.type.p_value}};
      break;
    case ModuleKind::universal_sl2:
      out = {{"e", d.type.e_value}};
      break;
    case ModuleKind::universal_H:
      out = {{"p", d.type.p_value}, {"z", d.level}};
      break;
    case ModuleKind::L_xi:
      out = {{"e", d.type.e_value}, {"xi", d.xi}};
      break;
    case ModuleKind::M_a:
      out = {{"e", d.type.e_value}, {"p", d.type.p_value}, {"a", d.a}};
      break;
    case ModuleKind::M_sl2_casimir:
      out = {{"e", d.type.e_value}, {"omega", d.omega}};
      break;
    case ModuleKind::verma_alpha:
      out = {{"alpha", d.alpha}};
      break;
    case ModuleKind::tensor:
      out = {{"e", d.type.e_value}, {"p", d.type.p_value}, {"z", d.level}};
      if (d.second) {
        out.emplace_back("sl2_e", d.second->type.e_value);
        if (d.second->kind == ModuleKind::M_sl2_casimir) out.emplace_back("omega", d.second->omega);
        if (d.second->kind == ModuleKind::verma_alpha) out.emplace_back("alpha", d.second->alpha);
      }
      break;
  }
  return out;
}

/// The character values a module's n+ generators are tested against.
inline std::vector<std::pair<std::string, Rational>> character_values(const Module& m, const WhittakerType& t) {
  std::vector<std::pair<std::string, Rational>> out;
  for (const auto& x : m.nplus()) out.emplace_back(x, x == "e" ? t.e_value : t.p_value);
  return out;
}

/// True when x v = t(x) v for every n+ generator x of m's algebra.
inline bool is_whittaker_vector(const Module& m, const WhittakerType& t, const ModuleVector& v) {
  for (const auto& [x, value] : character_values(m, t)) {
    if (act(x, v, m) != v * value) return false;
  }
  return true;
}

struct SolverReport {
  ModuleKind module_kind;
  std::vector<std::pair<std::string, Rational>> parameters;
  WhittakerType probe_type;
  long degree_bound = 0;
  /// Reduced row-echelon basis, pivots (leading terms) normalized to 1.
  std::vector<ModuleVector> basis;
  bool certified = false;
  std::vector<std::string> warnings;

  std::size_t dimension() const { return basis.size(); }
};

/// Exact space of Whittaker vectors of the probe type among vectors of
/// total degree <= n. The n+ action never raises total degree, so the
/// truncated kernel is exact.
inline SolverReport whittaker_vectors(const Module& m, const WhittakerType& probe, long n) {
  if (n < 0) throw DomainError("degree bound must be non-negative");
  SolverReport report;
  report.module_kind = m.descriptor().kind;
  report.parameters = descriptor_parameters(m.descriptor());
  report.probe_type = probe;
  report.degree_bound = n;
  report.warnings = m.warnings();

  const auto equations = character_values(m, probe);
  std::vector<std::pair<ModuleVector, ModuleVector>> columns;
  for (const auto& b : m.basis_up_to(n)) {
    ModuleVector image;
    for (std::size_t tag = 0; tag < equations.size(); ++tag) {
      const auto& [x, value] = equations[tag];
      ModuleVector r = act(x, m.basis_vector(b), m);
      r.add(b, -value);
      for (const auto& [key, c] : r) {
        Exponents tagged = key;
        tagged.push_back(static_cast<int>(tag));
        image.add(std::move(tagged), c);
      }
    }
    columns.emplace_back(m.basis_vector(b), std::move(image));
  }
  VectorBasis kernel;
  for (const auto& v : kernel_spanning_set(columns)) kernel.insert(v);
  report.basis = kernel.rows();
  report.certified = true;
  for (const auto& v : report.basis) {
    if (!is_whittaker_vector(m, probe, v)) report.certified = false;
  }
  return report;
}

struct SimplicityReport {
  SolverReport solver;
  bool passed = false;
  /// Solutions other than the cyclic vector.
  std::vector<ModuleVector> extra_vectors;
  static constexpr const char* label = "necessary-condition probe: one-dimensional Whittaker space at bounded degree";
};

inline SimplicityReport simplicity_probe(const Module& m, const WhittakerType& t, long n) {
  SimplicityReport report;
  report.solver = whittaker_vectors(m, t, n);
  const ModuleVector w = m.cyclic_vector();
  for (const auto& v : report.solver.basis) {
    if (v != w) report.extra_vectors.push_back(v);
  }
  report.passed = report.solver.certified && report.solver.dimension() == 1 && report.extra_vectors.empty();
  return report;
}

// ---------------------------------------------------------------------------
// Submodules

struct SaturationReport {
  long degree_bound = 0;
  /// Echelon basis of the submodule's intersection with degree <= bound.
  std::vector<ModuleVector> basis;
  std::size_t truncation_dimension = 0;
  std::size_t quotient_dimension = 0;
  /// (L, intersection dimension) for each spanning-degree L examined.
  std::vector<std::pair<long, std::size_t>> history;
  bool stabilized = false;
  std::string heuristic = "intersection dimension stable for two consecutive increments of the spanning degree";
  std::vector<std::string> warnings;

  std::size_t dimension() const { return basis.size(); }
};

/// Intersection of the submodule generated by `generators` with the
/// degree <= n part, approximated by span{u g : deg u <= L} for growing L.
inline SaturationReport submodule_saturation(const Module& m, const std::vector<ModuleVector>& generators, long n,
                                             long max_extra_degree = 12) {
  if (n < 0) throw DomainError("degree bound must be non-negative");
  SaturationReport report;
  report.degree_bound = n;
  report.truncation_dimension = m.basis_up_to(n).size();

  std::vector<std::size_t> acting;
  for (std::size_t i = 0; i < m.algebra()->dimension(); ++i) {
    if (!m.algebra()->is_central(i)) acting.push_back(i);
  }

  VectorBasis span;
  std::vector<ModuleVector> frontier;
  for (const auto& g : generators) {
    if (g.is_zero()) throw DomainError("submodule generators must be nonzero");
    ModuleVector r = span.reduce(g);
    if (span.insert(r)) frontier.push_back(std::move(r));
  }
  auto truncated_rank = [&] {
    std::size_t d = 0;
    for (const auto& [pivot, row] : span.pivots()) {
      if (total_degree(pivot) <= n) ++d;
    }
    return d;
  };
  auto grow = [&] {
    std::vector<ModuleVector> next;
    for (const auto& v : frontier) {
      for (std::size_t x : acting) {
        ModuleVector image;
        for (const auto& [b, c] : v) image.add_scaled(m.act_generator(x, b), c);
        ModuleVector r = span.reduce(image);
        if (span.insert(r)) next.push_back(std::move(r));
      }
    }
    frontier = std::move(next);
  };

  for (long level = 0; level < n; ++level) grow();
  long level = n;
  report.history.emplace_back(level, truncated_rank());
  std::size_t stable_steps = 0;
  while (level < n + max_extra_degree) {
    if (frontier.empty()) {
      report.stabilized = true;
      report.heuristic = "span closed under the action: exact";
      break;
    }
    grow();
    ++level;
    std::size_t d = truncated_rank();
    stable_steps = d == report.history.back().second ? stable_steps + 1 : 0;
    report.history.emplace_back(level, d);
    if (stable_steps >= 2) {
      report.stabilized = true;
      break;
    }
  }
  if (!report.stabilized) report.warnings.push_back("saturation did not stabilize within the spanning-degree cap");
  for (const auto& [pivot, row] : span.pivots()) {
    if (total_degree(pivot) <= n) report.basis.push_back(row);
  }
  report.quotient_dimension = report.truncation_dimension - report.basis.size();
  return report;
}

// ---------------------------------------------------------------------------
// Filtration by powers of the quasi-central element

struct FiltrationLayer {
  long index = 0;
  /// dim(W^i) - dim(W^(i+1)) at the degree bound
  std::size_t observed = 0;
  /// dim(W^0) - dim(W^1) at bound - 2i
  std::size_t predicted = 0;
  bool passed = false;
};

struct FiltrationReport {
  WhittakerType type;
  Rational a;
  long i_max = 0;
  long degree_bound = 0;
  /// (c - a)^i w for i = 0..i_max
  std::vector<ModuleVector> generators;
  std::vector<bool> generator_certified;
  /// dim(W^i) within degree <= bound, i = 0..i_max
  std::vector<std::size_t> submodule_dimensions;
  std::vector<FiltrationLayer> layers;
  /// (M, dim W^0/W^1 in degree <= M, rank of the projection to the principal quotient)
  std::vector<std::tuple<long, std::size_t, std::size_t>> quotient_comparison;
  bool passed = false;
  std::vector<std::string> warnings;
};

inline FiltrationReport filtration_check(const WhittakerType& type, const Rational& a, long i_max, long n) {
  if (type.p_value == 0) throw DomainError("filtration check requires a nonzero p-value");
  if (i_max < 0) throw DomainError("i_max must be non-negative");
  if (2 * i_max > n) {
    throw DomainError("degree budget exceeded: (c - a)^" + std::to_string(i_max) + " w needs degree " +
                      std::to_string(2 * i_max) + " > " + std::to_string(n));
  }
  FiltrationReport report;
  report.type = type;
  report.a = a;
  report.i_max = i_max;
  report.degree_bound = n;

  ModulePtr universal = build_module(descriptors::universal_S(type.e_value, type.p_value));
  ModulePtr quotient = build_module(descriptors::M_a(type.e_value, type.p_value, a));
  const Element shifted = quasi_central(universal->algebra()) - Element::constant(universal->algebra(), a);

  ModuleVector v = universal->cyclic_vector();
  for (long i = 0; i <= i_max; ++i) {
    if (i > 0) v = act(shifted, v, *universal);
    report.generators.push_back(v);
    report.generator_certified.push_back(is_whittaker_vector(*universal, type, v));
  }

  std::map<std::pair<long, long>, std::size_t> dims;
  auto submodule_dim = [&](long i, long bound) {
    auto key = std::make_pair(i, bound);
    if (auto it = dims.find(key); it != dims.end()) return it->second;
    std::size_t d;
    if (i == 0) {
      d = universal->basis_up_to(bound).size();
    } else {
      auto sat = submodule_saturation(*universal, {report.generators[static_cast<std::size_t>(i)]}, bound);
      for (const auto& w : sat.warnings) report.warnings.push_back("W^" + std::to_string(i) + ": " + w);
      d = sat.dimension();
    }
    dims.emplace(key, d);
    return d;
  };

  for (long i = 0; i <= i_max; ++i) report.submodule_dimensions.push_back(submodule_dim(i, n));

  bool ok = true;
  for (bool c : report.generator_certified) ok = ok && c;
  for (long i = 0; i < i_max; ++i) {
    FiltrationLayer layer;
    layer.index = i;
    layer.observed = submodule_dim(i, n) - submodule_dim(i + 1, n);
    layer.predicted = submodule_dim(0, n - 2 * i) - submodule_dim(1, n - 2 * i);
    layer.passed = layer.observed == layer.predicted;
    ok = ok && layer.passed;
    report.layers.push_back(layer);
  }

  // W^0/W^1 is the principal quotient: its truncation is the image of
  // degree <= M under the projection w -> w-bar.
  if (i_max >= 1) {
    for (long bound = 0; bound <= n; bound += 2) {
      VectorBasis image;
      for (const auto& b : universal->basis_up_to(bound)) {
        Exponents full(universal->algebra()->dimension(), 0);
        const auto free = universal->descriptor().free_generators();
        for (std::size_t s = 0; s < free.size(); ++s) full[universal->algebra()->index_of(free[s])] = b[s];
        image.insert(act(Element::monomial(quotient->algebra(), full), quotient->cyclic_vector(), *quotient));
      }
      std::size_t layer = submodule_dim(0, bound) - submodule_dim(1, bound);
      report.quotient_comparison.emplace_back(bound, layer, image.rank());
      ok = ok && layer == image.rank();
    }
  }
  report.passed = ok;
  return report;
}

// ---------------------------------------------------------------------------
// Isomorphism invariants

struct IsoInvariants {
  ModuleKind kind;
  std::vector<std::pair<std::string, Rational>> values;
  friend bool operator==(const IsoInvariants&, const IsoInvariants&) = default;
};

namespace detail {

/// Scalar s with u v = s v, or nullopt.
inline std::optional<Rational> scalar_on(const Module& m, const Element& u, const ModuleVector& v) {
  ModuleVector image = act(u, v, m);
  if (image.is_zero()) return Rational(0);
  const auto& [key, c] = image.leading();
  Rational s = c / v.coefficient(key);
  if (image != v * s) return std::nullopt;
  return s;
}

inline Rational scalar_on_cyclic(const Module& m, std::string_view generator) {
  auto s = scalar_on(m, Element::generator(m.algebra(), generator), m.cyclic_vector());
  if (!s) throw InconsistencyError(std::string(generator) + " does not act by a scalar on the cyclic vector");
  return *s;
}

inline Rational scalar_on_truncation(const Module& m, const Element& u, const std::string& name, long n) {
  auto s = scalar_on(m, u, m.cyclic_vector());
  if (!s) throw InconsistencyError(name + " does not act by a scalar on the cyclic vector");
  for (const auto& b : m.basis_up_to(n)) {
    if (act(u, m.basis_vector(b), m) != m.basis_vector(b) * *s) {
      throw InconsistencyError(name + " does not act by a scalar on " + m.render_monomial(b));
    }
  }
  return *s;
}

}  // namespace detail

/// Invariants read off by direct action; modules with different tuples are
/// not isomorphic.
inline IsoInvariants iso_invariants(const Module& m, long n) {
  IsoInvariants out{m.descriptor().kind, {}};
  auto& v = out.values;
  const AlgebraPtr& g = m.algebra();
  switch (m.descriptor().kind) {
    case ModuleKind::M_a:
      v = {{"e", detail::scalar_on_cyclic(m, "e")},
           {"p", detail::scalar_on_cyclic(m, "p")},
           {"z", detail::scalar_on_cyclic(m, "z")},
           {"c", detail::scalar_on_truncation(m, quasi_central(g), "quasi-central element", n)}};
      break;
    case ModuleKind::L_xi:
      v = {{"e", detail::scalar_on_cyclic(m, "e")},
           {"p", detail::scalar_on_cyclic(m, "p")},
           {"z", detail::scalar_on_cyclic(m, "z")},
           {"xi", detail::scalar_on_cyclic(m, "q")}};
      break;
    case ModuleKind::M_sl2_casimir:
      v = {{"e", detail::scalar_on_cyclic(m, "e")},
           {"omega", detail::scalar_on_truncation(m, casimir_sl2(g), "Casimir element", n)}};
      break;
    case ModuleKind::verma_alpha:
      v = {{"e", detail::scalar_on_cyclic(m, "e")}, {"alpha", detail::scalar_on_cyclic(m, "h")}};
      break;
    case ModuleKind::universal_H:
      v = {{"p", detail::scalar_on_cyclic(m, "p")}, {"z", detail::scalar_on_truncation(m, Element::generator(g, "z"), "z", n)}};
      break;
    case ModuleKind::tensor:
      v = {{"e", detail::scalar_on_cyclic(m, "e")},
           {"p", detail::scalar_on_cyclic(m, "p")},
           {"z", detail::scalar_on_truncation(m, Element::generator(g, "z"), "z", n)}};
      break;
    default:
      throw DomainError("no invariant tuple for " + std::string(kind_name(m.descriptor().kind)) +
                        " (not a simple-family module)");
  }
  return out;
}

}  // namespace whittaker
