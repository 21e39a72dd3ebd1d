#pragma once

// Finite subgroups of Sp(V) given by generator matrices over an exact field:
// enumeration, symplectic reflections, minimal parabolic subgroups and the
// correspondence between reflection classes and normalizer orbits.

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "symres/error.hpp"
#include "symres/exact_arith.hpp"
#include "symres/matrix.hpp"
#include "symres/root_systems.hpp"

namespace symres {

struct GroupOptions {
  std::size_t order_cap = 200'000;
};

class MatrixGroup {
 public:
  /// Validates the form (antisymmetric, nondegenerate) and that every
  /// generator is an invertible dim x dim matrix preserving it.
  MatrixGroup(const FieldDescriptor& field, std::size_t dim, ExactMatrix form, std::vector<ExactMatrix> generators)
      : field_(field), dim_(dim), form_(std::move(form)), generators_(std::move(generators)) {
    if (dim_ == 0 || dim_ % 2 != 0) throw InvalidInput("symplectic dimension must be positive and even");
    check_shape(form_, "symplectic_form");
    if (!(form_.transpose() == ExactMatrix(field_, dim_, dim_) - form_)) {
      throw InvalidInput("symplectic_form is not antisymmetric");
    }
    if (symres::rank(form_) != dim_) throw InvalidInput("symplectic_form is degenerate");
    if (generators_.empty()) throw InvalidInput("group needs at least one generator");
    for (std::size_t i = 0; i < generators_.size(); ++i) {
      const std::string name = "generator " + std::to_string(i);
      check_shape(generators_[i], name);
      if (symres::rank(generators_[i]) != dim_) throw InvalidInput(name + " is not invertible");
      if (!preserves_form(generators_[i])) throw InvalidInput(name + " does not preserve the symplectic form");
    }
  }

  const FieldDescriptor& field() const noexcept { return field_; }
  std::size_t dim() const noexcept { return dim_; }
  const ExactMatrix& form() const noexcept { return form_; }
  const std::vector<ExactMatrix>& generators() const noexcept { return generators_; }

  bool preserves_form(const ExactMatrix& g) const { return g.transpose() * form_ * g == form_; }

  /// Breadth-first closure under right multiplication by generators. Elements
  /// are ordered by BFS layer, then by serialized key.
  void enumerate(const GroupOptions& options = {}) {
    elements_.clear();
    index_.clear();
    std::vector<ExactMatrix> layer{ExactMatrix::identity(field_, dim_)};
    index_.emplace(layer.front().key(), 0);
    elements_.push_back(layer.front());
    while (!layer.empty()) {
      std::map<std::string, ExactMatrix> next;
      for (const auto& x : layer) {
        for (const auto& g : generators_) {
          ExactMatrix y = x * g;
          std::string k = y.key();
          if (index_.contains(k) || next.contains(k)) continue;
          next.emplace(std::move(k), std::move(y));
          if (elements_.size() + next.size() > options.order_cap) {
            throw ComputationCap("group enumeration exceeded the order cap of " + std::to_string(options.order_cap));
          }
        }
      }
      layer.clear();
      for (auto& [k, m] : next) {
        index_.emplace(k, elements_.size());
        elements_.push_back(m);
        layer.push_back(std::move(m));
      }
    }
    inverses_.assign(elements_.size(), 0);
    for (std::size_t i = 0; i < elements_.size(); ++i) {
      auto inv = symres::inverse(elements_[i]);
      auto j = inv ? index_of(*inv) : std::nullopt;
      if (!j) throw Inconsistency("enumerated set is not closed under inverses");
      inverses_[i] = *j;
    }
    generator_indices_.clear();
    for (const auto& g : generators_) generator_indices_.push_back(*index_of(g));
  }

  bool enumerated() const noexcept { return !elements_.empty(); }
  std::size_t order() const { return require_enumerated().size(); }
  const std::vector<ExactMatrix>& elements() const { return require_enumerated(); }
  const ExactMatrix& element(std::size_t i) const { return require_enumerated()[i]; }
  const std::vector<std::size_t>& generator_indices() const { return generator_indices_; }

  std::optional<std::size_t> index_of(const ExactMatrix& m) const {
    auto it = index_.find(m.key());
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  std::size_t identity_index() const noexcept { return 0; }
  std::size_t inverse(std::size_t a) const { return inverses_.at(a); }

  std::size_t multiply(std::size_t a, std::size_t b) const {
    auto idx = index_of(element(a) * element(b));
    if (!idx) throw Inconsistency("product left the enumerated group");
    return *idx;
  }

  /// g x g^-1
  std::size_t conjugate(std::size_t g, std::size_t x) const { return multiply(multiply(g, x), inverse(g)); }

  std::size_t element_order(std::size_t a) const {
    std::size_t k = 1;
    for (std::size_t p = a; p != identity_index(); p = multiply(p, a)) ++k;
    return k;
  }

  /// Orbit of x under conjugation, computed by closing under the generators.
  std::vector<std::size_t> conjugacy_class(std::size_t x) const {
    std::set<std::size_t> seen{x};
    std::vector<std::size_t> queue{x};
    while (!queue.empty()) {
      auto y = queue.back();
      queue.pop_back();
      for (auto g : generator_indices_) {
        auto z = conjugate(g, y);
        if (seen.insert(z).second) queue.push_back(z);
      }
    }
    return {seen.begin(), seen.end()};
  }

  std::vector<std::vector<std::size_t>> conjugacy_classes() const {
    std::vector<bool> done(order(), false);
    std::vector<std::vector<std::size_t>> out;
    for (std::size_t i = 0; i < order(); ++i) {
      if (done[i]) continue;
      auto c = conjugacy_class(i);
      for (auto j : c) done[j] = true;
      out.push_back(std::move(c));
    }
    return out;
  }

 private:
  void check_shape(const ExactMatrix& m, const std::string& name) const {
    if (m.rows() != dim_ || m.cols() != dim_) throw InvalidInput(name + " is not " + std::to_string(dim_) + "x" + std::to_string(dim_));
    if (!(m.field() == field_)) throw InvalidInput(name + " is over " + m.field().to_string());
  }

  const std::vector<ExactMatrix>& require_enumerated() const {
    if (elements_.empty()) throw InvalidInput("group has not been enumerated");
    return elements_;
  }

  FieldDescriptor field_;
  std::size_t dim_;
  ExactMatrix form_;
  std::vector<ExactMatrix> generators_;
  std::vector<ExactMatrix> elements_;
  std::map<std::string, std::size_t> index_;
  std::vector<std::size_t> inverses_;
  std::vector<std::size_t> generator_indices_;
};

// ---------------------------------------------------------------------------
// Symplectic reflections

struct ReflectionClass {
  std::size_t representative = 0;   // member with the smallest serialized key
  std::vector<std::size_t> members;  // sorted element indices
  ExactMatrix fixed_space;           // rref equations of V^s, i.e. the nonzero rows of rref(1 - s)

  std::size_t size() const noexcept { return members.size(); }
};

inline bool is_symplectic_reflection(const MatrixGroup& group, std::size_t s) {
  return rank(ExactMatrix::identity(group.field(), group.dim()) - group.element(s)) == 2;
}

inline ExactMatrix fixed_space_equations(const MatrixGroup& group, std::size_t s) {
  auto e = rref(ExactMatrix::identity(group.field(), group.dim()) - group.element(s));
  return e.reduced.top_rows(e.rank);
}

/// All s with rank(1 - s) = 2, split into conjugacy classes, ordered by the
/// serialized representative.
inline std::vector<ReflectionClass> symplectic_reflections(const MatrixGroup& group) {
  std::vector<bool> done(group.order(), false);
  std::vector<ReflectionClass> out;
  for (std::size_t i = 0; i < group.order(); ++i) {
    if (done[i] || !is_symplectic_reflection(group, i)) continue;
    ReflectionClass c;
    c.members = group.conjugacy_class(i);
    for (auto j : c.members) done[j] = true;
    c.representative = *std::min_element(c.members.begin(), c.members.end(), [&](auto a, auto b) {
      return group.element(a).key() < group.element(b).key();
    });
    c.fixed_space = fixed_space_equations(group, c.representative);
    out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end(), [&](const ReflectionClass& a, const ReflectionClass& b) {
    return group.element(a.representative).key() < group.element(b.representative).key();
  });
  return out;
}

/// Index of the reflection class containing s.
inline std::optional<std::size_t> reflection_class_of(const std::vector<ReflectionClass>& classes, std::size_t s) {
  for (std::size_t i = 0; i < classes.size(); ++i)
    if (std::binary_search(classes[i].members.begin(), classes[i].members.end(), s)) return i;
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Kleinian classification

struct KleinianLabel {
  RootFamily family = RootFamily::A;
  std::size_t rank = 1;

  std::string to_string() const {
    const char f = family == RootFamily::A ? 'A' : family == RootFamily::D ? 'D' : 'E';
    return std::string(1, f) + std::to_string(rank);
  }
  friend bool operator==(const KleinianLabel&, const KleinianLabel&) = default;
};

/// ADE label from the element-order census of a finite SL(2) subgroup.
inline KleinianLabel classify_kleinian(std::size_t order, bool abelian, std::size_t max_element_order) {
  if (order >= 2 && max_element_order == order) return {RootFamily::A, order - 1};
  if (!abelian && order % 4 == 0 && max_element_order == order / 2) return {RootFamily::D, order / 4 + 2};
  if (!abelian && order == 24) return {RootFamily::E, 6};
  if (!abelian && order == 48) return {RootFamily::E, 7};
  if (!abelian && order == 120) return {RootFamily::E, 8};
  throw InvalidInput("subgroup of order " + std::to_string(order) + " (max element order " +
                     std::to_string(max_element_order) + ") is not a finite subgroup of SL(2)");
}

inline KleinianLabel kleinian_label(const MatrixGroup& group, std::span<const std::size_t> subgroup) {
  std::size_t max_order = 0;
  bool abelian = true;
  for (auto a : subgroup) {
    max_order = std::max(max_order, group.element_order(a));
    for (auto b : subgroup) {
      if (b <= a) continue;
      if (group.multiply(a, b) != group.multiply(b, a)) abelian = false;
    }
  }
  return classify_kleinian(subgroup.size(), abelian, max_order);
}

// ---------------------------------------------------------------------------
// Minimal parabolic subgroups

struct ParabolicClass {
  std::vector<std::size_t> subgroup;  // sorted element indices of the representative H
  std::size_t class_size = 0;         // number of Gamma-conjugates of H
  KleinianLabel kleinian_label;
  std::size_t normalizer_order = 0;
  std::size_t xi_order = 0;  // |N(H)| / |H|
  std::vector<std::vector<std::size_t>> h_classes;         // nontrivial H-conjugacy classes
  std::vector<std::vector<std::size_t>> xi_class_action;   // distinct permutations of h_classes induced by N(H)
  std::vector<std::vector<std::size_t>> orbits;            // N(H)-orbits on H \ {1}

  std::size_t orbit_count() const noexcept { return orbits.size(); }

  bool xi_acts_trivially() const {
    for (const auto& p : xi_class_action)
      for (std::size_t i = 0; i < p.size(); ++i)
        if (p[i] != i) return false;
    return true;
  }
};

namespace detail {

inline std::vector<std::size_t> conjugate_subgroup(const MatrixGroup& group, std::size_t g,
                                                   const std::vector<std::size_t>& h) {
  std::vector<std::size_t> out;
  out.reserve(h.size());
  for (auto x : h) out.push_back(group.conjugate(g, x));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace detail

/// Pointwise stabilizer {g : V^s is fixed by g} of a reflection's fixed space.
inline std::vector<std::size_t> pointwise_stabilizer(const MatrixGroup& group, std::size_t s) {
  const auto basis = kernel(ExactMatrix::identity(group.field(), group.dim()) - group.element(s));
  std::vector<std::size_t> out;
  for (std::size_t g = 0; g < group.order(); ++g)
    if ((group.element(g) * basis) == basis) out.push_back(g);
  return out;
}

inline std::vector<ParabolicClass> minimal_parabolics(const MatrixGroup& group,
                                                      const std::vector<ReflectionClass>& reflections) {
  // H_s depends only on V^s, so compute once per distinct fixed space.
  std::map<std::string, std::vector<std::size_t>> by_fixed_space;
  for (const auto& c : reflections) {
    for (auto s : c.members) {
      auto key = fixed_space_equations(group, s).key();
      if (!by_fixed_space.contains(key)) by_fixed_space.emplace(std::move(key), pointwise_stabilizer(group, s));
    }
  }
  std::set<std::vector<std::size_t>> pending;
  for (auto& [k, h] : by_fixed_space) pending.insert(h);

  std::vector<ParabolicClass> out;
  while (!pending.empty()) {
    const auto h0 = *pending.begin();
    std::set<std::vector<std::size_t>> conjugates;
    for (std::size_t g = 0; g < group.order(); ++g) conjugates.insert(detail::conjugate_subgroup(group, g, h0));
    for (const auto& c : conjugates) pending.erase(c);

    ParabolicClass pc;
    pc.subgroup = *conjugates.begin();
    pc.class_size = conjugates.size();
    pc.kleinian_label = kleinian_label(group, pc.subgroup);

    const auto& h = pc.subgroup;
    std::vector<std::size_t> normalizer;
    for (std::size_t g = 0; g < group.order(); ++g)
      if (detail::conjugate_subgroup(group, g, h) == h) normalizer.push_back(g);
    pc.normalizer_order = normalizer.size();
    pc.xi_order = normalizer.size() / h.size();

    // H-conjugacy classes of nontrivial elements
    std::set<std::size_t> assigned;
    for (auto x : h) {
      if (x == group.identity_index() || assigned.contains(x)) continue;
      std::set<std::size_t> cls;
      for (auto y : h) cls.insert(group.conjugate(y, x));
      assigned.insert(cls.begin(), cls.end());
      pc.h_classes.emplace_back(cls.begin(), cls.end());
    }
    auto class_of = [&](std::size_t x) {
      for (std::size_t i = 0; i < pc.h_classes.size(); ++i)
        if (std::binary_search(pc.h_classes[i].begin(), pc.h_classes[i].end(), x)) return i;
      throw Inconsistency("conjugation by the normalizer left H");
    };
    std::set<std::vector<std::size_t>> perms;
    for (auto g : normalizer) {
      std::vector<std::size_t> p;
      for (const auto& cls : pc.h_classes) p.push_back(class_of(group.conjugate(g, cls.front())));
      perms.insert(std::move(p));
    }
    pc.xi_class_action.assign(perms.begin(), perms.end());

    std::set<std::size_t> seen;
    for (auto x : h) {
      if (x == group.identity_index() || seen.contains(x)) continue;
      std::set<std::size_t> orbit;
      for (auto g : normalizer) orbit.insert(group.conjugate(g, x));
      seen.insert(orbit.begin(), orbit.end());
      pc.orbits.emplace_back(orbit.begin(), orbit.end());
    }
    out.push_back(std::move(pc));
  }
  std::sort(out.begin(), out.end(),
            [](const ParabolicClass& a, const ParabolicClass& b) { return a.subgroup < b.subgroup; });
  return out;
}

// ---------------------------------------------------------------------------
// Reflection classes versus normalizer orbits

struct ZetaMatch {
  std::size_t parabolic = 0;
  std::size_t orbit = 0;
  std::size_t reflection_class = 0;
};

struct ZetaReport {
  bool bijective = false;
  std::vector<ZetaMatch> matching;
  std::vector<std::string> problems;
  std::size_t orbit_total = 0;
  std::size_t class_total = 0;
};

/// Checks that the map from N(H)-orbits on H \ {1}, over all parabolic
/// classes, to conjugacy classes of symplectic reflections is a bijection.
inline ZetaReport verify_zeta_bijection(const MatrixGroup& group, const std::vector<ReflectionClass>& reflections,
                                        const std::vector<ParabolicClass>& parabolics) {
  ZetaReport r;
  r.class_total = reflections.size();
  std::vector<int> hit(reflections.size(), 0);
  for (std::size_t b = 0; b < parabolics.size(); ++b) {
    const auto& pc = parabolics[b];
    for (auto x : pc.subgroup) {
      if (x == group.identity_index()) continue;
      if (!reflection_class_of(reflections, x)) {
        r.problems.push_back("parabolic " + std::to_string(b) + " contains element " + std::to_string(x) +
                             " that is not a symplectic reflection");
      }
    }
    for (std::size_t o = 0; o < pc.orbits.size(); ++o) {
      ++r.orbit_total;
      std::set<std::size_t> targets;
      for (auto x : pc.orbits[o])
        if (auto c = reflection_class_of(reflections, x)) targets.insert(*c);
      if (targets.size() != 1) {
        r.problems.push_back("orbit " + std::to_string(o) + " of parabolic " + std::to_string(b) +
                             " does not map to a single reflection class");
        continue;
      }
      const auto c = *targets.begin();
      if (hit[c]++ > 0) r.problems.push_back("reflection class " + std::to_string(c) + " is hit more than once");
      r.matching.push_back({b, o, c});
    }
  }
  for (std::size_t c = 0; c < hit.size(); ++c)
    if (hit[c] == 0) r.problems.push_back("reflection class " + std::to_string(c) + " is not hit");
  r.bijective = r.problems.empty();
  return r;
}

}  // namespace symres
