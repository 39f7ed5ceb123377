#pragma once

#include <chrono>
#include <cstdint>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "whittaker/localization.hpp"
#include "whittaker/random.hpp"
#include "whittaker/solver.hpp"

namespace whittaker {

inline constexpr const char* tool_version = "0.1.0";

using json = nlohmann::json;

struct TaskRequest {
  std::string command;
  /// Flag name (without dashes) to raw value; rationals as "num/den".
  std::map<std::string, std::string> parameters;
  /// Repeatable submodule generators for `saturate`.
  std::vector<std::string> generators;
};

struct ReportEnvelope {
  std::string tool_version = whittaker::tool_version;
  std::string command;
  std::string timestamp;
  std::string status;  // pass | fail | error
  json payload = json::object();
  std::vector<std::string> warnings;

  int exit_code() const { return status == "pass" ? 0 : status == "fail" ? 1 : 2; }
};

inline json to_json(const ReportEnvelope& r) {
  return json{{"tool_version", r.tool_version}, {"command", r.command},     {"timestamp", r.timestamp},
              {"status", r.status},             {"payload", r.payload},     {"warnings", r.warnings}};
}

// ---------------------------------------------------------------------------
// Algebra files

/// Reads an algebra definition without validating it.
inline LieAlgebra read_algebra_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot read algebra file '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  std::string name = path;
  if (auto slash = name.find_last_of('/'); slash != std::string::npos) name = name.substr(slash + 1);
  if (auto dot = name.find_last_of('.'); dot != std::string::npos) name = name.substr(0, dot);
  return parse_algebra_text(buffer.str(), name);
}

inline std::string describe_jacobi_failure(const LieAlgebra& g, const JacobiFailure& f) {
  return "(" + g.generator(f.x).name + "," + g.generator(f.y).name + "," + g.generator(f.z).name + ")";
}

/// A built-in name or a path to an algebra file; files are checked for
/// the Jacobi identity on load.
inline AlgebraPtr parse_algebra_file(const std::string& name_or_path) {
  if (is_builtin_algebra_name(name_or_path)) return shared_builtin(name_or_path);
  LieAlgebra g = read_algebra_file(name_or_path);
  auto report = check_jacobi(g);
  if (!report.passed()) {
    throw DomainError("Jacobi identity fails on triple " + describe_jacobi_failure(g, report.failures.front()));
  }
  return std::make_shared<const LieAlgebra>(std::move(g));
}

// ---------------------------------------------------------------------------
// Parameter handling

namespace detail {

class Parameters {
 public:
  Parameters(const TaskRequest& r, std::set<std::string> allowed) : raw_(r.parameters) {
    for (const auto& [key, value] : raw_) {
      if (!allowed.count(key)) throw DomainError("parameter --" + key + " is not accepted by '" + r.command + "'");
    }
  }

  bool has(const std::string& key) const { return raw_.count(key) != 0; }

  std::string text(const std::string& key, const std::string& fallback) const {
    auto it = raw_.find(key);
    return it == raw_.end() ? fallback : it->second;
  }

  Rational rational(const std::string& key, const Rational& fallback = Rational(0)) const {
    auto it = raw_.find(key);
    if (it == raw_.end()) return fallback;
    try {
      return parse_rational(it->second);
    } catch (const DomainError& e) {
      throw DomainError("--" + key + ": " + e.what());
    }
  }

  long integer(const std::string& key, long fallback) const {
    auto it = raw_.find(key);
    if (it == raw_.end()) return fallback;
    std::size_t used = 0;
    long v = 0;
    try {
      v = std::stol(it->second, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != it->second.size() || it->second.empty()) throw DomainError("--" + key + " expects an integer");
    return v;
  }

  long non_negative(const std::string& key, long fallback) const {
    long v = integer(key, fallback);
    if (v < 0) throw DomainError("--" + key + " must be non-negative");
    return v;
  }

  bool flag(const std::string& key) const {
    auto it = raw_.find(key);
    if (it == raw_.end()) return false;
    if (it->second == "true" || it->second == "1" || it->second.empty()) return true;
    if (it->second == "false" || it->second == "0") return false;
    throw DomainError("--" + key + " is a flag");
  }

 private:
  std::map<std::string, std::string> raw_;
};

/// Rational parameters meaningful for each module kind.
inline std::set<std::string> module_parameter_keys(ModuleKind k) {
  switch (k) {
    case ModuleKind::universal_S: return {"e", "p", "z"};
    case ModuleKind::universal_S1: return {"e", "p"};
    case ModuleKind::universal_sl2: return {"e"};
    case ModuleKind::universal_H: return {"p", "z"};
    case ModuleKind::L_xi: return {"e", "xi"};
    case ModuleKind::M_a: return {"e", "p", "a"};
    case ModuleKind::M_sl2_casimir: return {"e", "omega"};
    case ModuleKind::verma_alpha: return {"alpha"};
    case ModuleKind::tensor: return {"e", "p", "z", "omega", "alpha"};
  }
  return {};
}

/// Heisenberg factor (p, z) and sl2 factor: M_sl2_casimir(e, omega) when
/// e != 0, otherwise the highest weight module verma_alpha(alpha).
inline ModuleDescriptor tensor_descriptor(const Parameters& p) {
  Rational e = p.rational("e");
  auto first = descriptors::universal_H(p.rational("p"), p.rational("z"));
  if (e != 0) {
    if (p.has("alpha")) throw DomainError("--alpha applies only when the sl2 factor has e-value 0");
    return descriptors::tensor(first, descriptors::M_sl2_casimir(e, p.rational("omega")));
  }
  if (p.has("omega")) throw DomainError("--omega applies only when the sl2 factor has nonzero e-value");
  return descriptors::tensor(first, descriptors::verma_alpha(p.rational("alpha")));
}

inline ModuleDescriptor module_descriptor(ModuleKind kind, const Parameters& p) {
  switch (kind) {
    case ModuleKind::universal_S: return descriptors::universal_S(p.rational("e"), p.rational("p"), p.rational("z"));
    case ModuleKind::universal_S1: return descriptors::universal_S1(p.rational("e"), p.rational("p"));
    case ModuleKind::universal_sl2: return descriptors::universal_sl2(p.rational("e"));
    case ModuleKind::universal_H: return descriptors::universal_H(p.rational("p"), p.rational("z"));
    case ModuleKind::L_xi: return descriptors::L_xi(p.rational("e"), p.rational("xi"));
    case ModuleKind::M_a: return descriptors::M_a(p.rational("e"), p.rational("p"), p.rational("a"));
    case ModuleKind::M_sl2_casimir: return descriptors::M_sl2_casimir(p.rational("e"), p.rational("omega"));
    case ModuleKind::verma_alpha: return descriptors::verma_alpha(p.rational("alpha"));
    case ModuleKind::tensor: return tensor_descriptor(p);
  }
  throw DomainError("unhandled module kind");
}

inline ModuleKind requested_kind(const TaskRequest& r) {
  auto it = r.parameters.find("module");
  if (it == r.parameters.end()) throw DomainError("'" + r.command + "' requires --module");
  return parse_kind(it->second);
}

inline std::set<std::string> with(std::set<std::string> a, const std::set<std::string>& b) {
  a.insert(b.begin(), b.end());
  return a;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Serialization

inline json to_json(const Module& m, const ModuleVector& v) {
  json out = json::array();
  for (const auto& [b, c] : v) out.push_back(json::array({m.render_monomial(b), to_string(c)}));
  return out;
}

inline json parameters_json(const std::vector<std::pair<std::string, Rational>>& values) {
  json out = json::object();
  for (const auto& [k, v] : values) out[k] = to_string(v);
  return out;
}

inline json to_json(const Module& m, const SolverReport& r) {
  json basis = json::array();
  for (const auto& v : r.basis) basis.push_back(to_json(m, v));
  json probe = json::object();
  for (const auto& [x, value] : character_values(m, r.probe_type)) probe[x] = to_string(value);
  return json{{"task", "whittaker_vectors"},
              {"module_kind", std::string(kind_name(r.module_kind))},
              {"parameters", parameters_json(r.parameters)},
              {"probe_type", probe},
              {"degree_bound", r.degree_bound},
              {"dimension", r.dimension()},
              {"basis", basis},
              {"certified", r.certified},
              {"warnings", r.warnings}};
}

inline json to_json(const Module& m, const SimplicityReport& r) {
  json out = to_json(m, r.solver);
  out["task"] = "simplicity_probe";
  out["label"] = SimplicityReport::label;
  out["passed"] = r.passed;
  json extras = json::array();
  for (const auto& v : r.extra_vectors) extras.push_back(to_json(m, v));
  out["extra_vectors"] = extras;
  return out;
}

// ---------------------------------------------------------------------------
// Tasks

namespace detail {

struct Outcome {
  bool passed;
  json payload;
  std::vector<std::string> warnings;
};

inline json element_json(const Element& x) { return x.to_string(); }

inline Outcome check_algebra_task(const TaskRequest& r) {
  Parameters p(r, {"algebra", "seed"});
  const std::string source = p.text("algebra", "schrodinger");
  const AlgebraPtr g = is_builtin_algebra_name(source) ? shared_builtin(source)
                                                       : std::make_shared<const LieAlgebra>(read_algebra_file(source));
  const auto seed = static_cast<std::uint64_t>(p.non_negative("seed", 0));
  json generators = json::array();
  for (const auto& x : g->generators()) generators.push_back(json{{"name", x.name}, {"grading", x.grading}});

  auto jacobi = check_jacobi(*g);
  json jacobi_failures = json::array();
  for (const auto& f : jacobi.failures) {
    jacobi_failures.push_back(json{{"triple", json::array({g->generator(f.x).name, g->generator(f.y).name, g->generator(f.z).name})},
                                   {"jacobiator", g->render(f.jacobiator)}});
  }
  auto grading = check_grading(*g);
  json grading_failures = json::array();
  for (const auto& f : grading) {
    grading_failures.push_back(json{{"pair", json::array({g->generator(f.x).name, g->generator(f.y).name})},
                                    {"offending_generator", g->generator(f.offending).name}});
  }
  json payload{{"algebra", g->name()},
               {"generators", generators},
               {"jacobi", json{{"triples_checked", jacobi.triples_checked}, {"failures", jacobi_failures}}},
               {"grading", json{{"failures", grading_failures}}}};
  bool ok = jacobi.passed() && grading.empty();

  // Randomized associativity and rewriting-confluence checks only make
  // sense on a Lie algebra.
  if (jacobi.passed()) {
    RandomSource rng(seed);
    constexpr int cases = 50;
    json assoc_failures = json::array();
    for (int i = 0; i < cases; ++i) {
      Element a = rng.element(g, 3, 3), b = rng.element(g, 3, 3), c = rng.element(g, 3, 3);
      if ((a * b) * c != a * (b * c)) {
        assoc_failures.push_back(json{{"a", a.to_string()}, {"b", b.to_string()}, {"c", c.to_string()}});
      }
    }
    json confluence_failures = json::array();
    for (int i = 0; i < cases; ++i) {
      auto word = rng.word(*g, 6);
      Element left = normal_order(g, word, RewriteStrategy::leftmost);
      Element right = normal_order(g, word, RewriteStrategy::rightmost);
      Element random = normal_order(g, word, RewriteStrategy::random, seed + static_cast<std::uint64_t>(i));
      Element product = Element::constant(g, Rational(1));
      for (std::size_t x : word) product = product * Element::generator(g, g->generator(x).name);
      if (left != right || left != random || left != product) {
        json w = json::array();
        for (std::size_t x : word) w.push_back(g->generator(x).name);
        confluence_failures.push_back(w);
      }
    }
    payload["properties"] = json{{"seed", seed},
                                 {"associativity", json{{"cases", cases}, {"failures", assoc_failures}}},
                                 {"confluence", json{{"cases", cases}, {"failures", confluence_failures}}}};
    ok = ok && assoc_failures.empty() && confluence_failures.empty();
  }
  return {ok, payload, {}};
}

inline Outcome verify_identities_task(const TaskRequest& r) {
  Parameters p(r, {"algebra", "max-n"});
  const AlgebraPtr g = parse_algebra_file(p.text("algebra", "schrodinger"));
  const long n = p.integer("max-n", 6);
  if (n < 1) throw DomainError("--max-n must be at least 1");
  auto report = verify_straightening_identities(g, static_cast<unsigned>(n));
  json checks = json::array();
  for (const auto& c : report.checks) {
    checks.push_back(json{{"identity", c.identity}, {"n", c.n}, {"lhs", c.lhs.to_string()}, {"rhs", c.rhs.to_string()}, {"passed", c.passed}});
  }
  return {report.passed(), json{{"max_n", n}, {"checks", checks}}, {}};
}

inline Outcome center_check_task(const TaskRequest& r) {
  Parameters p(r, {"algebra", "element", "modulo-z"});
  const AlgebraPtr g = parse_algebra_file(p.text("algebra", "schrodinger"));
  const std::string name = p.text("element", "");
  if (name.empty()) throw DomainError("center-check requires --element casimir_sl2|quasi_central");
  Element u = special_element(g, name);
  std::vector<std::string> against;
  if (name == "casimir_sl2") {
    against = {"e", "h", "f"};
  } else {
    for (const auto& x : g->generators()) against.push_back(x.name);
  }
  const bool modulo = p.flag("modulo-z");
  auto report = centrality_check(u, against, modulo);
  json entries = json::array();
  for (const auto& e : report.entries) {
    entries.push_back(json{{"generator", e.generator}, {"commutator", e.commutator.to_string()}, {"passed", e.passed}});
  }
  auto grading = grading_of(u);
  json payload{{"element", name},
               {"expression", u.to_string()},
               {"modulo_central", modulo},
               {"commutators", entries},
               {"grading", grading ? json(*grading) : json(nullptr)},
               {"homogeneous_degree_zero", grading && *grading == 0}};
  return {report.passed() && grading && *grading == 0, payload, {}};
}

inline Outcome phi_check_task(const TaskRequest& r) {
  Parameters p(r, {"seed"});
  const auto seed = static_cast<std::uint64_t>(p.non_negative("seed", 0));
  auto report = verify_phi_homomorphism();
  json pairs = json::array();
  for (const auto& c : report.pairs) {
    pairs.push_back(json{{"pair", json::array({c.x, c.y})},
                         {"image_of_bracket", c.image_of_bracket.to_string()},
                         {"bracket_of_images", c.bracket_of_images.to_string()},
                         {"passed", c.passed}});
  }
  json identity = json::object();
  for (const auto& [x, ok] : report.identity_on_heisenberg) identity[x] = ok;

  const AlgebraPtr S = shared_builtin("schrodinger");
  RandomSource rng(seed);
  constexpr int cases = 20;
  json failures = json::array();
  for (int i = 0; i < cases; ++i) {
    Element a = rng.element(S, 2, 2), b = rng.element(S, 2, 2);
    if (phi_image(a * b) != phi_image(a) * phi_image(b)) {
      failures.push_back(json{{"a", a.to_string()}, {"b", b.to_string()}});
    }
  }
  json images = json::object();
  for (const auto& x : S->generators()) images[x.name] = phi_generator(x.name).to_string();
  json payload{{"images", images},
               {"pairs", pairs},
               {"identity_on_heisenberg", identity},
               {"multiplicativity", json{{"seed", seed}, {"cases", cases}, {"failures", failures}}}};
  return {report.passed() && failures.empty(), payload, {}};
}

struct ModuleRequest {
  Parameters params;
  ModulePtr module;
};

inline ModuleRequest requested_module(const TaskRequest& r, const std::set<std::string>& extra) {
  ModuleKind kind = requested_kind(r);
  Parameters p(r, with(with({"module", "max-degree"}, extra), module_parameter_keys(kind)));
  ModulePtr m = build_module(module_descriptor(kind, p));
  return {std::move(p), std::move(m)};
}

inline Outcome whittaker_task(const TaskRequest& r) {
  auto [p, m] = requested_module(r, {"probe-e", "probe-p"});
  WhittakerType probe{p.rational("probe-e", m->type().e_value), p.rational("probe-p", m->type().p_value)};
  auto report = whittaker_vectors(*m, probe, p.non_negative("max-degree", 6));
  return {report.certified, to_json(*m, report), m->warnings()};
}

inline Outcome probe_task(const TaskRequest& r) {
  auto [p, m] = requested_module(r, {});
  auto report = simplicity_probe(*m, m->type(), p.non_negative("max-degree", 6));
  return {report.passed, to_json(*m, report), m->warnings()};
}

inline Outcome saturate_task(const TaskRequest& r) {
  auto [p, m] = requested_module(r, {"generator"});
  const long n = p.non_negative("max-degree", 6);
  std::vector<ModuleVector> generators;
  json generator_json = json::array();
  for (const auto& text : r.generators) {
    Element u = parse_element(m->algebra(), text);
    ModuleVector v = act(u, m->cyclic_vector(), *m);
    if (v.is_zero()) throw DomainError("generator '" + text + "' acts as zero on the cyclic vector");
    generators.push_back(v);
    generator_json.push_back(json{{"expression", text}, {"vector", to_json(*m, v)}});
  }
  auto report = submodule_saturation(*m, generators, n);
  json basis = json::array();
  for (const auto& v : report.basis) basis.push_back(to_json(*m, v));
  json history = json::array();
  for (const auto& [level, d] : report.history) history.push_back(json{{"spanning_degree", level}, {"dimension", d}});
  std::vector<std::string> warnings = m->warnings();
  warnings.insert(warnings.end(), report.warnings.begin(), report.warnings.end());
  json payload{{"task", "submodule_saturation"},
               {"module_kind", std::string(kind_name(m->descriptor().kind))},
               {"parameters", parameters_json(descriptor_parameters(m->descriptor()))},
               {"degree_bound", n},
               {"generators", generator_json},
               {"dimension", report.dimension()},
               {"basis", basis},
               {"truncation_dimension", report.truncation_dimension},
               {"quotient_dimension", report.quotient_dimension},
               {"history", history},
               {"stabilized", report.stabilized},
               {"heuristic", report.heuristic},
               {"warnings", report.warnings}};
  return {report.stabilized, payload, warnings};
}

inline Outcome filtration_task(const TaskRequest& r) {
  Parameters p(r, {"e", "p", "a", "i-max", "max-degree"});
  WhittakerType type{p.rational("e"), p.rational("p")};
  const long i_max = p.non_negative("i-max", 2);
  const long n = p.non_negative("max-degree", 6);
  auto report = filtration_check(type, p.rational("a"), i_max, n);
  ModulePtr universal = build_module(descriptors::universal_S(type.e_value, type.p_value));
  json generators = json::array();
  for (std::size_t i = 0; i < report.generators.size(); ++i) {
    generators.push_back(json{{"i", i}, {"vector", to_json(*universal, report.generators[i])}, {"certified", static_cast<bool>(report.generator_certified[i])}});
  }
  json layers = json::array();
  for (const auto& l : report.layers) {
    layers.push_back(json{{"i", l.index}, {"observed", l.observed}, {"predicted", l.predicted}, {"passed", l.passed}});
  }
  json quotient = json::array();
  for (const auto& [bound, layer, rank] : report.quotient_comparison) {
    quotient.push_back(json{{"degree_bound", bound}, {"layer_dimension", layer}, {"principal_quotient_dimension", rank}, {"passed", layer == rank}});
  }
  json payload{{"task", "filtration_check"},
               {"parameters", json{{"e", to_string(type.e_value)}, {"p", to_string(type.p_value)}, {"a", to_string(report.a)}}},
               {"i_max", i_max},
               {"degree_bound", n},
               {"generators", generators},
               {"submodule_dimensions", report.submodule_dimensions},
               {"layers", layers},
               {"principal_quotient", quotient},
               {"passed", report.passed},
               {"warnings", report.warnings}};
  return {report.passed, payload, report.warnings};
}

inline Outcome tensor_task(const TaskRequest& r) {
  Parameters p(r, {"e", "p", "z", "omega", "alpha", "max-degree"});
  ModulePtr m = build_module(tensor_descriptor(p));
  const long n = p.non_negative("max-degree", 6);
  const ModuleVector w = m->cyclic_vector();
  const bool whittaker = is_whittaker_vector(*m, m->type(), w);
  const bool level = act("z", w, *m) == w * m->level();
  auto probe = simplicity_probe(*m, m->type(), n);
  json payload{{"task", "tensor_module"},
               {"parameters", parameters_json(descriptor_parameters(m->descriptor()))},
               {"type", json{{"e", to_string(m->type().e_value)}, {"p", to_string(m->type().p_value)}}},
               {"level", to_string(m->level())},
               {"cyclic_vector_whittaker", whittaker},
               {"z_acts_by_level", level},
               {"e_on_cyclic", to_json(*m, act("e", w, *m))},
               {"p_on_cyclic", to_json(*m, act("p", w, *m))},
               {"simplicity_probe", to_json(*m, probe)}};
  return {whittaker && level, payload, m->warnings()};
}

inline Outcome invariants_task(const TaskRequest& r) {
  auto [p, m] = requested_module(r, {});
  const long n = p.non_negative("max-degree", 6);
  auto inv = iso_invariants(*m, n);
  json payload{{"task", "iso_invariants"},
               {"module_kind", std::string(kind_name(inv.kind))},
               {"parameters", parameters_json(descriptor_parameters(m->descriptor()))},
               {"degree_bound", n},
               {"invariants", parameters_json(inv.values)}};
  return {true, payload, m->warnings()};
}

inline std::string utc_timestamp() {
  std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  std::ostringstream out;
  out << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return out.str();
}

}  // namespace detail

inline const std::vector<std::string>& task_commands() {
  static const std::vector<std::string> names = {"check-algebra", "verify-identities", "center-check", "phi-check",
                                                 "whittaker",     "probe-simplicity",  "saturate",     "filtration",
                                                 "tensor",        "invariants"};
  return names;
}

/// Runs one task. Validation and mathematical errors become an `error`
/// envelope rather than exceptions.
inline ReportEnvelope execute_task(const TaskRequest& r) {
  ReportEnvelope env;
  env.command = r.command;
  env.timestamp = detail::utc_timestamp();
  try {
    if (!r.generators.empty() && r.command != "saturate") throw DomainError("--generator is accepted only by 'saturate'");
    detail::Outcome out;
    if (r.command == "check-algebra") out = detail::check_algebra_task(r);
    else if (r.command == "verify-identities") out = detail::verify_identities_task(r);
    else if (r.command == "center-check") out = detail::center_check_task(r);
    else if (r.command == "phi-check") out = detail::phi_check_task(r);
    else if (r.command == "whittaker") out = detail::whittaker_task(r);
    else if (r.command == "probe-simplicity") out = detail::probe_task(r);
    else if (r.command == "saturate") out = detail::saturate_task(r);
    else if (r.command == "filtration") out = detail::filtration_task(r);
    else if (r.command == "tensor") out = detail::tensor_task(r);
    else if (r.command == "invariants") out = detail::invariants_task(r);
    else throw DomainError("unknown command '" + r.command + "'");
    env.status = out.passed ? "pass" : "fail";
    env.payload = std::move(out.payload);
    env.warnings = std::move(out.warnings);
  } catch (const std::exception& e) {
    env.status = "error";
    env.payload = json{{"error", e.what()}};
  }
  return env;
}

// ---------------------------------------------------------------------------
// Output

namespace detail {

inline void write_text(std::ostream& out, const json& value, const std::string& indent) {
  if (value.is_object()) {
    for (const auto& [key, child] : value.items()) {
      if (child.is_structured()) {
        std::string mark;
        if (child.is_object() && child.contains("passed") && child["passed"].is_boolean()) {
          mark = child["passed"].get<bool>() ? " [PASS]" : " [FAIL]";
        }
        out << indent << key << ":" << mark << "\n";
        write_text(out, child, indent + "  ");
      } else {
        out << indent << key << ": " << (child.is_string() ? child.get<std::string>() : child.dump()) << "\n";
      }
    }
  } else if (value.is_array()) {
    std::size_t i = 0;
    for (const auto& child : value) {
      if (child.is_object()) {
        std::string mark;
        if (child.contains("passed") && child["passed"].is_boolean()) mark = child["passed"].get<bool>() ? " [PASS]" : " [FAIL]";
        out << indent << "- #" << i << mark << "\n";
        write_text(out, child, indent + "  ");
      } else {
        out << indent << "- " << (child.is_string() ? child.get<std::string>() : child.dump()) << "\n";
      }
      ++i;
    }
  } else {
    out << indent << value.dump() << "\n";
  }
}

}  // namespace detail

/// JSON: one canonical line, keys sorted. Text: an indented summary with
/// pass/fail marks.
inline std::string render_report(const ReportEnvelope& env, const std::string& format) {
  if (format == "json") return to_json(env).dump() + "\n";
  if (format != "text") throw DomainError("unknown format '" + format + "'");
  std::ostringstream out;
  out << env.command << ": " << env.status << "\n";
  for (const auto& w : env.warnings) out << "warning: " << w << "\n";
  detail::write_text(out, env.payload, "  ");
  return out.str();
}

/// Writes to `destination`, or standard output when empty. Returns false
/// when the destination cannot be written.
inline bool emit_report(const ReportEnvelope& env, const std::string& format, const std::string& destination,
                        std::ostream& stdout_stream) {
  const std::string text = render_report(env, format);
  if (destination.empty()) {
    stdout_stream << text;
    return static_cast<bool>(stdout_stream);
  }
  std::ofstream out(destination);
  if (!out) return false;
  out << text;
  return static_cast<bool>(out);
}

}  // namespace whittaker
