#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "whittaker/localization.hpp"
#include "whittaker/pbw.hpp"

namespace whittaker {

/// Vector of a Whittaker module: sparse sum of free-generator monomials
/// applied to the cyclic vector. The all-zero exponent tuple is the cyclic
/// vector itself.
using ModuleVector = SparseCombination<Exponents, MonomialOrder>;

enum class ModuleKind {
  universal_S,
  universal_S1,
  universal_sl2,
  universal_H,
  L_xi,
  M_a,
  M_sl2_casimir,
  verma_alpha,
  tensor,
};

inline std::string_view kind_name(ModuleKind k) {
  switch (k) {
    case ModuleKind::universal_S: return "universal_S";
    case ModuleKind::universal_S1: return "universal_S1";
    case ModuleKind::universal_sl2: return "universal_sl2";
    case ModuleKind::universal_H: return "universal_H";
    case ModuleKind::L_xi: return "L_xi";
    case ModuleKind::M_a: return "M_a";
    case ModuleKind::M_sl2_casimir: return "M_sl2_casimir";
    case ModuleKind::verma_alpha: return "verma_alpha";
    case ModuleKind::tensor: return "tensor";
  }
  return "?";
}

inline ModuleKind parse_kind(std::string_view name) {
  for (auto k : {ModuleKind::universal_S, ModuleKind::universal_S1, ModuleKind::universal_sl2,
                 ModuleKind::universal_H, ModuleKind::L_xi, ModuleKind::M_a, ModuleKind::M_sl2_casimir,
                 ModuleKind::verma_alpha, ModuleKind::tensor}) {
    if (kind_name(k) == name) return k;
  }
  throw DomainError("unknown module kind '" + std::string(name) + "'");
}

/// The pair (phi(e), phi(p)) of a character of n+ = span{p, e}. Since n+
/// is abelian every pair is a valid character.
struct WhittakerType {
  Rational e_value;
  Rational p_value;

  bool is_zero() const { return e_value == 0 && p_value == 0; }
  friend bool operator==(const WhittakerType&, const WhittakerType&) = default;
};

struct ModuleDescriptor {
  ModuleKind kind = ModuleKind::universal_S;
  WhittakerType type;
  Rational level;
  Rational xi;
  Rational a;
  Rational omega;
  Rational alpha;
  /// Tensor factors: a universal_H descriptor and an sl2 descriptor.
  std::shared_ptr<const ModuleDescriptor> first;
  std::shared_ptr<const ModuleDescriptor> second;

  std::vector<std::string> free_generators() const {
    switch (kind) {
      case ModuleKind::universal_S: return {"f", "q", "h"};
      case ModuleKind::universal_S1: return {"q", "h"};
      case ModuleKind::universal_sl2: return {"f", "h"};
      case ModuleKind::universal_H: return {"q"};
      case ModuleKind::L_xi: return {"f", "h"};
      case ModuleKind::M_a: return {"q", "h"};
      case ModuleKind::M_sl2_casimir: return {"h"};
      case ModuleKind::verma_alpha: return {"f"};
      case ModuleKind::tensor: {
        std::vector<std::string> out = {"q"};
        if (second) {
          for (auto& g : second->free_generators()) out.push_back(g);
        }
        return out;
      }
    }
    return {};
  }
};

namespace descriptors {

inline ModuleDescriptor universal_S(Rational e, Rational p, Rational level = 0) {
  ModuleDescriptor d;
  d.kind = ModuleKind::universal_S;
  d.type = {std::move(e), std::move(p)};
  d.level = std::move(level);
  return d;
}

inline ModuleDescriptor universal_S1(Rational e, Rational p) {
  ModuleDescriptor d;
  d.kind = ModuleKind::universal_S1;
  d.type = {std::move(e), std::move(p)};
  return d;
}

inline ModuleDescriptor universal_sl2(Rational e) {
  ModuleDescriptor d;
  d.kind = ModuleKind::universal_sl2;
  d.type = {std::move(e), Rational(0)};
  return d;
}

inline ModuleDescriptor universal_H(Rational p, Rational level) {
  ModuleDescriptor d;
  d.kind = ModuleKind::universal_H;
  d.type = {Rational(0), std::move(p)};
  d.level = std::move(level);
  return d;
}

inline ModuleDescriptor L_xi(Rational e, Rational xi) {
  ModuleDescriptor d;
  d.kind = ModuleKind::L_xi;
  d.type = {std::move(e), Rational(0)};
  d.xi = std::move(xi);
  return d;
}

inline ModuleDescriptor M_a(Rational e, Rational p, Rational a) {
  ModuleDescriptor d;
  d.kind = ModuleKind::M_a;
  d.type = {std::move(e), std::move(p)};
  d.a = std::move(a);
  return d;
}

inline ModuleDescriptor M_sl2_casimir(Rational e, Rational omega) {
  ModuleDescriptor d;
  d.kind = ModuleKind::M_sl2_casimir;
  d.type = {std::move(e), Rational(0)};
  d.omega = std::move(omega);
  return d;
}

inline ModuleDescriptor verma_alpha(Rational alpha) {
  ModuleDescriptor d;
  d.kind = ModuleKind::verma_alpha;
  d.alpha = std::move(alpha);
  return d;
}

/// Heisenberg Whittaker module twisted through phi, tensored with an sl2
/// module on which the Heisenberg part acts by zero. The resulting type is
/// (e' + p^2 / 2z, p) where e' is the sl2 factor's e-value.
inline ModuleDescriptor tensor(const ModuleDescriptor& heisenberg, const ModuleDescriptor& sl2) {
  ModuleDescriptor d;
  d.kind = ModuleKind::tensor;
  d.first = std::make_shared<const ModuleDescriptor>(heisenberg);
  d.second = std::make_shared<const ModuleDescriptor>(sl2);
  d.level = heisenberg.level;
  if (heisenberg.level != 0) {
    d.type = {sl2.type.e_value + heisenberg.type.p_value * heisenberg.type.p_value / (2 * heisenberg.level),
              heisenberg.type.p_value};
  }
  return d;
}

}  // namespace descriptors

/// A module over one of the built-in algebras, realized on a monomial
/// basis in its free generators. Handles are immutable; the action cache
/// is internal and guarded.
class Module {
 public:
  virtual ~Module() = default;

  const ModuleDescriptor& descriptor() const { return descriptor_; }
  const AlgebraPtr& algebra() const { return algebra_; }
  const WhittakerType& type() const { return descriptor_.type; }
  const Rational& level() const { return descriptor_.level; }
  const std::vector<std::string>& warnings() const { return warnings_; }
  std::size_t slots() const { return symbols_.size(); }
  const std::vector<std::string>& symbols() const { return symbols_; }

  /// Names of the n+ generators present in the acting algebra.
  std::vector<std::string> nplus() const {
    std::vector<std::string> out;
    for (const char* x : {"e", "p"}) {
      if (algebra_->find(x)) out.emplace_back(x);
    }
    return out;
  }

  ModuleVector cyclic_vector() const {
    ModuleVector v;
    v.add(Exponents(slots(), 0), Rational(1));
    return v;
  }

  ModuleVector basis_vector(const Exponents& b) const {
    ModuleVector v;
    v.add(b, Rational(1));
    return v;
  }

  /// Action of generator g (index into algebra()) on a basis monomial.
  ModuleVector act_generator(std::size_t g, const Exponents& b) const {
    std::lock_guard<std::mutex> lock(mutex_);
    auto key = std::make_pair(g, b);
    if (auto it = action_cache_.find(key); it != action_cache_.end()) return it->second;
    ModuleVector out = compute_action(g, b);
    action_cache_.emplace(std::move(key), out);
    return out;
  }

  /// Scalar by which a central generator acts; used for negative powers in
  /// localized algebras.
  virtual std::optional<Rational> central_scalar(std::size_t g) const {
    if (algebra_->is_central(g) && algebra_->generator(g).name == "z") return descriptor_.level;
    return std::nullopt;
  }

  virtual long degree(const Exponents& b) const { return total_degree(b); }

  virtual std::string render_monomial(const Exponents& b) const { return whittaker::render_monomial(symbols_, b); }

  std::string render(const ModuleVector& v) const {
    if (v.is_zero()) return "0";
    std::string out;
    for (const auto& [m, c] : v) {
      if (!out.empty()) out += " + ";
      out += to_string(c);
      if (total_degree(m) != 0) out += "*" + render_monomial(m);
    }
    return out;
  }

  /// Every basis monomial of total degree <= n, in monomial order.
  std::vector<Exponents> basis_up_to(long n) const {
    std::vector<Exponents> out;
    Exponents current(slots(), 0);
    enumerate(0, n, current, out);
    std::sort(out.begin(), out.end(), MonomialOrder{});
    return out;
  }

 protected:
  Module(ModuleDescriptor d, AlgebraPtr g, std::vector<std::string> symbols)
      : descriptor_(std::move(d)), algebra_(std::move(g)), symbols_(std::move(symbols)) {
    if (descriptor_.type.is_zero()) warnings_.push_back("zero Whittaker type: the character of n+ vanishes");
  }

  virtual ModuleVector compute_action(std::size_t g, const Exponents& b) const = 0;

  std::vector<std::string> warnings_;

 private:
  void enumerate(std::size_t slot, long budget, Exponents& current, std::vector<Exponents>& out) const {
    if (slot == current.size()) {
      out.push_back(current);
      return;
    }
    for (long k = 0; k <= budget; ++k) {
      current[slot] = static_cast<int>(k);
      enumerate(slot + 1, budget - k, current, out);
    }
    current[slot] = 0;
  }

  ModuleDescriptor descriptor_;
  AlgebraPtr algebra_;
  std::vector<std::string> symbols_;
  mutable std::mutex mutex_;
  mutable std::map<std::pair<std::size_t, Exponents>, ModuleVector> action_cache_;
};

using ModulePtr = std::shared_ptr<const Module>;

/// u . v, applying the generators of each PBW monomial of u right to left.
inline ModuleVector act(const Element& u, const ModuleVector& v, const Module& m) {
  if (!u.algebra().same_structure(*m.algebra())) {
    throw DomainError("element of " + u.algebra().name() + " cannot act on a module over " + m.algebra()->name());
  }
  ModuleVector out;
  for (const auto& [mono, c] : u.terms()) {
    ModuleVector current = v;
    for (std::size_t i = mono.size(); i-- > 0 && !current.is_zero();) {
      if (mono[i] < 0) {
        auto s = m.central_scalar(i);
        if (!s) throw DomainError("negative power of a generator without a scalar action");
        current *= power(*s, mono[i]);
        continue;
      }
      for (int k = 0; k < mono[i]; ++k) {
        ModuleVector next;
        for (const auto& [b, cb] : current) next.add_scaled(m.act_generator(i, b), cb);
        current = std::move(next);
      }
    }
    out.add_scaled(current, c);
  }
  return out;
}

inline ModuleVector act(std::string_view generator, const ModuleVector& v, const Module& m) {
  return act(Element::generator(m.algebra(), generator), v, m);
}

// ---------------------------------------------------------------------------
// Induced modules and their quotients

namespace detail {

/// Modules of the form U(g) . w realized by normal-ordering x * (free
/// monomial) in U(g) and reducing each PBW monomial against the cyclic
/// vector.
class InducedModule : public Module {
 protected:
  InducedModule(ModuleDescriptor d, AlgebraPtr g, std::vector<std::string> free)
      : Module(std::move(d), g, free), straightener_(*algebra()) {
    for (const auto& name : free) free_.push_back(algebra()->index_of(name));
  }

  /// Reduction of the PBW monomial `full` (exponents over the algebra)
  /// applied to the cyclic vector.
  virtual ModuleVector reduce(const Exponents& full) const = 0;

  ModuleVector compute_action(std::size_t g, const Exponents& b) const override {
    Exponents gen(algebra()->dimension(), 0);
    gen[g] = 1;
    Terms product = straightener_.times_monomial(gen, embed(b));
    ModuleVector out;
    for (const auto& [m, c] : product) out.add_scaled(reduce(m), c);
    return out;
  }

  Exponents embed(const Exponents& b) const {
    Exponents full(algebra()->dimension(), 0);
    for (std::size_t s = 0; s < free_.size(); ++s) full[free_[s]] = b[s];
    return full;
  }

  Exponents project(const Exponents& full) const {
    Exponents b(free_.size(), 0);
    for (std::size_t s = 0; s < free_.size(); ++s) b[s] = full[free_[s]];
    return b;
  }

  bool is_free(std::size_t i) const { return std::find(free_.begin(), free_.end(), i) != free_.end(); }

  std::vector<std::size_t> free_;
  // Only touched from compute_action, which runs under the base-class lock.
  mutable Straightener straightener_;
};

/// U(g) tensored over U(b) with a one-dimensional module: the free
/// generators precede every other generator in the PBW order, and each
/// remaining generator acts on the cyclic vector by a scalar.
class UniversalModule final : public InducedModule {
 public:
  UniversalModule(ModuleDescriptor d, AlgebraPtr g, std::vector<std::string> free,
                  std::map<std::string, Rational> scalars)
      : InducedModule(std::move(d), std::move(g), std::move(free)) {
    for (std::size_t i = 0; i < algebra()->dimension(); ++i) {
      if (is_free(i)) continue;
      for (std::size_t s : free_) {
        if (s > i) throw DomainError("free generators must precede the induced-from generators");
      }
      const auto& name = algebra()->generator(i).name;
      auto it = scalars.find(name);
      if (it == scalars.end()) throw DomainError("no scalar given for generator '" + name + "'");
      tail_.emplace_back(i, it->second);
    }
  }

 protected:
  ModuleVector reduce(const Exponents& full) const override {
    Rational c(1);
    for (const auto& [i, value] : tail_) {
      if (full[i] != 0) c *= power(value, full[i]);
    }
    ModuleVector out;
    out.add(project(full), c);
    return out;
  }

 private:
  std::vector<std::pair<std::size_t, Rational>> tail_;
};

/// Quotient of an induced module by (X - c) w where X = f * (nonzero
/// scalar) + (element of U(free)), so that f . w = rule . w. Used for the
/// principal quotients by the quasi-central element and by the Casimir.
/// f h^k w = (h+2)^k f w and f commutes with q.
class FEliminatedQuotient final : public InducedModule {
 public:
  FEliminatedQuotient(ModuleDescriptor d, AlgebraPtr g, std::vector<std::string> free, Element rule,
                      std::map<std::string, Rational> scalars)
      : InducedModule(std::move(d), std::move(g), std::move(free)), rule_(std::move(rule)) {
    f_ = algebra()->index_of("f");
    h_ = algebra()->index_of("h");
    for (std::size_t i = 0; i < algebra()->dimension(); ++i) {
      if (is_free(i) || i == f_) continue;
      const auto& name = algebra()->generator(i).name;
      auto it = scalars.find(name);
      if (it == scalars.end()) throw DomainError("no scalar given for generator '" + name + "'");
      tail_.emplace_back(i, it->second);
    }
  }

 protected:
  ModuleVector reduce(const Exponents& full) const override {
    if (auto it = reduce_cache_.find(full); it != reduce_cache_.end()) return it->second;
    Rational c(1);
    for (const auto& [i, value] : tail_) {
      if (full[i] != 0) c *= power(value, full[i]);
    }
    ModuleVector out;
    if (c != 0) {
      if (full[f_] == 0) {
        out.add(project(full), c);
      } else {
        // f^i X w = f^(i-1) X' f w = f^(i-1) X' rule w, X' = X with h -> h+2
        const AlgebraPtr& g = algebra();
        Exponents lead(g->dimension(), 0);
        lead[f_] = full[f_] - 1;
        Terms product = Element::monomial(g, lead).terms();
        for (std::size_t s : free_) {
          Element factor = Element::generator(g, g->generator(s).name);
          if (s == h_) factor += Element::constant(g, Rational(2));
          for (int k = 0; k < full[s]; ++k) product = straightener_.multiply(product, factor.terms());
        }
        product = straightener_.multiply(product, rule_.terms());
        for (const auto& [m, cm] : product) out.add_scaled(reduce(m), cm * c);
      }
    }
    reduce_cache_.emplace(full, out);
    return out;
  }

 private:
  Element rule_;
  std::size_t f_ = 0;
  std::size_t h_ = 0;
  std::vector<std::pair<std::size_t, Rational>> tail_;
  mutable std::map<Exponents, ModuleVector, MonomialOrder> reduce_cache_;
};

/// U(schrodinger) tensored over U(s1) with the simple s1-module C[h] w on
/// which q w = xi w, p w = z w = 0 and e w = e_value w.
class LxiModule final : public InducedModule {
 public:
  explicit LxiModule(ModuleDescriptor d)
      : InducedModule(d, shared_builtin("schrodinger"), {"f", "h"}) {
    const auto& g = *algebra();
    f_ = g.index_of("f");
    q_ = g.index_of("q");
    h_ = g.index_of("h");
    z_ = g.index_of("z");
    p_ = g.index_of("p");
    e_ = g.index_of("e");
  }

 protected:
  // f^i q^j h^k z^l p^m e^n w = e^n xi^j f^i (h + j)^k w   (l = m = 0)
  ModuleVector reduce(const Exponents& full) const override {
    ModuleVector out;
    if (full[z_] > 0 || full[p_] > 0) return out;
    const auto& d = descriptor();
    Rational c = power(d.type.e_value, full[e_]) * power(d.xi, full[q_]);
    if (c == 0) return out;
    const int j = full[q_];
    const int k = full[h_];
    for (int t = 0; t <= k; ++t) {
      Exponents b = {full[f_], t};
      out.add(std::move(b), c * binomial(k, t) * power(Rational(j), k - t));
    }
    return out;
  }

 private:
  std::size_t f_, q_, h_, z_, p_, e_;
};

/// Verma module over sl2: free on f, h w = alpha w, e w = 0.
class VermaModule final : public InducedModule {
 public:
  explicit VermaModule(ModuleDescriptor d) : InducedModule(d, shared_builtin("sl2"), {"f"}) {
    h_ = algebra()->index_of("h");
    e_ = algebra()->index_of("e");
  }

 protected:
  ModuleVector reduce(const Exponents& full) const override {
    ModuleVector out;
    if (full[e_] > 0) return out;
    out.add(project(full), power(descriptor().alpha, full[h_]));
    return out;
  }

 private:
  std::size_t h_, e_;
};

/// Heisenberg factor (via phi) tensored with an sl2 factor on which the
/// Heisenberg subalgebra acts by zero. Basis keys are the factor keys
/// concatenated.
class TensorModule final : public Module {
 public:
  TensorModule(ModuleDescriptor d, ModulePtr first, ModulePtr second)
      : Module(std::move(d), shared_builtin("schrodinger"), make_symbols(*first, *second)),
        first_(std::move(first)),
        second_(std::move(second)) {
    for (const auto& w : second_->warnings()) warnings_.push_back("sl2 factor: " + w);
    const auto& sd = second_->descriptor();
    if (sd.kind == ModuleKind::verma_alpha && sd.alpha >= 0 && sd.alpha.get_den() == 1) {
      warnings_.push_back("sl2 factor is a Verma module of dominant integral weight and is not simple");
    }
  }

  const Module& first() const { return *first_; }
  const Module& second() const { return *second_; }

  std::string render_monomial(const Exponents& b) const override {
    auto [x, y] = split(b);
    return first_->render_monomial(x) + " (x) " + second_->render_monomial(y);
  }

 protected:
  ModuleVector compute_action(std::size_t g, const Exponents& b) const override {
    const std::string& name = algebra()->generator(g).name;
    auto [x, y] = split(b);
    ModuleVector out;
    // first factor
    ModuleVector left;
    if (name == "p" || name == "q" || name == "z") {
      left = first_->act_generator(first_->algebra()->index_of(name), x);
    } else {
      left = act(phi_generator(name), first_->basis_vector(x), *first_);
    }
    for (const auto& [m, c] : left) out.add(join(m, y), c);
    // second factor: the Heisenberg part acts by zero
    if (name == "e" || name == "f" || name == "h") {
      ModuleVector right = second_->act_generator(second_->algebra()->index_of(name), y);
      for (const auto& [m, c] : right) out.add(join(x, m), c);
    }
    return out;
  }

 private:
  static std::vector<std::string> make_symbols(const Module& a, const Module& b) {
    std::vector<std::string> out = a.symbols();
    out.insert(out.end(), b.symbols().begin(), b.symbols().end());
    return out;
  }

  std::pair<Exponents, Exponents> split(const Exponents& b) const {
    auto mid = b.begin() + static_cast<long>(first_->slots());
    return {Exponents(b.begin(), mid), Exponents(mid, b.end())};
  }

  static Exponents join(const Exponents& x, const Exponents& y) {
    Exponents out = x;
    out.insert(out.end(), y.begin(), y.end());
    return out;
  }

  ModulePtr first_;
  ModulePtr second_;
};

inline void require(bool condition, const std::string& message) {
  if (!condition) throw DomainError(message);
}

inline ModulePtr build_module_impl(const ModuleDescriptor& d) {
  const auto& t = d.type;
  switch (d.kind) {
    case ModuleKind::universal_S:
      return std::make_shared<UniversalModule>(d, shared_builtin("schrodinger"), std::vector<std::string>{"f", "q", "h"},
                                               std::map<std::string, Rational>{{"z", d.level}, {"p", t.p_value}, {"e", t.e_value}});
    case ModuleKind::universal_S1:
      require(d.level == 0, "universal_S1 modules have level 0");
      return std::make_shared<UniversalModule>(d, shared_builtin("s1"), std::vector<std::string>{"q", "h"},
                                               std::map<std::string, Rational>{{"z", d.level}, {"p", t.p_value}, {"e", t.e_value}});
    case ModuleKind::universal_sl2:
      require(t.p_value == 0 && d.level == 0, "sl2 modules carry no p-value or level");
      return std::make_shared<UniversalModule>(d, shared_builtin("sl2"), std::vector<std::string>{"f", "h"},
                                               std::map<std::string, Rational>{{"e", t.e_value}});
    case ModuleKind::universal_H:
      require(t.e_value == 0, "Heisenberg modules carry no e-value");
      return std::make_shared<UniversalModule>(d, localized_heisenberg(), std::vector<std::string>{"q"},
                                               std::map<std::string, Rational>{{"z", d.level}, {"p", t.p_value}});
    case ModuleKind::L_xi:
      require(t.e_value != 0, "L_xi requires a nonzero e-value");
      require(t.p_value == 0, "L_xi requires p-value 0");
      require(d.level == 0, "L_xi requires level 0");
      return std::make_shared<LxiModule>(d);
    case ModuleKind::M_a: {
      require(t.p_value != 0, "M_a requires a nonzero p-value");
      require(d.level == 0, "M_a requires level 0");
      // c w = a w with c = f p^2 - q(1+h)p - q^2 e gives
      // f w = (a + p q + p q h + e q^2) w / p^2
      auto g = shared_builtin("schrodinger");
      auto q = Element::generator(g, "q");
      auto h = Element::generator(g, "h");
      Element rule = Element::constant(g, d.a) + t.p_value * q + t.p_value * (q * h) + t.e_value * (q * q);
      rule *= 1 / (t.p_value * t.p_value);
      return std::make_shared<FEliminatedQuotient>(d, g, std::vector<std::string>{"q", "h"}, rule,
                                                   std::map<std::string, Rational>{{"z", d.level}, {"p", t.p_value}, {"e", t.e_value}});
    }
    case ModuleKind::M_sl2_casimir: {
      require(t.e_value != 0, "M_sl2_casimir requires a nonzero e-value");
      require(t.p_value == 0 && d.level == 0, "sl2 modules carry no p-value or level");
      // (4fe + 2h + h^2) w = omega w gives f w = (omega - 2h - h^2) w / 4e
      auto g = shared_builtin("sl2");
      auto h = Element::generator(g, "h");
      Element rule = Element::constant(g, d.omega) - Rational(2) * h - h * h;
      rule *= 1 / (4 * t.e_value);
      return std::make_shared<FEliminatedQuotient>(d, g, std::vector<std::string>{"h"}, rule,
                                                   std::map<std::string, Rational>{{"e", t.e_value}});
    }
    case ModuleKind::verma_alpha:
      require(t.is_zero() && d.level == 0, "verma_alpha has zero type and no level");
      return std::make_shared<VermaModule>(d);
    case ModuleKind::tensor: {
      require(d.first && d.second, "tensor needs two factors");
      require(d.first->kind == ModuleKind::universal_H, "first tensor factor must be universal_H");
      require(d.second->kind == ModuleKind::M_sl2_casimir || d.second->kind == ModuleKind::verma_alpha ||
                  d.second->kind == ModuleKind::universal_sl2,
              "second tensor factor must be an sl2 module");
      require(d.first->level != 0, "tensor module needs a nonzero level (z is inverted)");
      ModuleDescriptor full = descriptors::tensor(*d.first, *d.second);
      return std::make_shared<TensorModule>(full, build_module_impl(*d.first), build_module_impl(*d.second));
    }
  }
  throw DomainError("unhandled module kind");
}

}  // namespace detail

/// Validates the descriptor's parameter constraints and returns a handle
/// carrying the module's reduction rules.
inline ModulePtr build_module(const ModuleDescriptor& d) { return detail::build_module_impl(d); }

inline ModulePtr tensor_module(const ModuleDescriptor& heisenberg, const ModuleDescriptor& sl2) {
  return build_module(descriptors::tensor(heisenberg, sl2));
}

}  // namespace whittaker
