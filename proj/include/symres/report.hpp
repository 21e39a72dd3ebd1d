#pragma once

// JSON rendering of computed results and resource caps. Keys keep insertion
// order so reports are byte-stable apart from "timing_ms".

#include <cstdint>
#include <cstdlib>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "symres/counting.hpp"
#include "symres/error.hpp"
#include "symres/exact_arith.hpp"
#include "symres/group.hpp"
#include "symres/lattice.hpp"
#include "symres/matroid.hpp"
#include "symres/polynomial.hpp"

namespace symres {

using Json = nlohmann::ordered_json;

struct Caps {
  LatticeOptions lattice;
  MatroidOptions matroid;
  GroupOptions group;

  /// Defaults, overridden by SYMRES_FLAT_CAP, SYMRES_SUBSET_CAP,
  /// SYMRES_POINT_CAP and SYMRES_GROUP_CAP when set.
  static Caps from_environment() {
    Caps c;
    read_env("SYMRES_FLAT_CAP", c.lattice.flat_cap);
    read_env("SYMRES_SUBSET_CAP", c.matroid.subset_cap);
    read_env("SYMRES_POINT_CAP", c.matroid.point_cap);
    read_env("SYMRES_GROUP_CAP", c.group.order_cap);
    return c;
  }

 private:
  template <class T>
  static void read_env(const char* name, T& target) {
    const char* v = std::getenv(name);
    if (!v) return;
    const std::string s(v);
    if (s.empty() || s.size() > 18 || s.find_first_not_of("0123456789") != std::string::npos) {
      throw InvalidInput(std::string(name) + " must be a positive integer, got '" + s + "'");
    }
    const auto value = std::stoull(s);
    if (value == 0) throw InvalidInput(std::string(name) + " must be positive");
    target = static_cast<T>(value);
  }
};

/// Machine integers stay JSON numbers; anything wider becomes a decimal string.
inline Json to_json(const BigInt& v) {
  if (v.fits_slong_p()) return Json(static_cast<std::int64_t>(v.get_si()));
  return Json(v.get_str());
}

inline Json to_json(const IntegerPolynomial& p) {
  Json coeffs = Json::array();
  for (const auto& c : p.coefficients()) coeffs.push_back(to_json(c));
  return Json{{"coefficients", coeffs}, {"text", p.to_string()}};
}

inline Json to_json(const Caps& c) {
  return Json{{"flat_cap", c.lattice.flat_cap},
              {"subset_cap", c.matroid.subset_cap},
              {"point_cap", c.matroid.point_cap},
              {"group_order_cap", c.group.order_cap}};
}

inline Json to_json(const OracleRecord& r) {
  Json j{{"kind", r.kind}, {"agrees", r.agrees}, {"skipped", r.skipped}};
  if (!r.nbc_counts.empty()) {
    Json counts = Json::array();
    for (const auto& c : r.nbc_counts) counts.push_back(to_json(c));
    j["nbc_counts"] = counts;
  }
  if (r.kind == "ff") {
    Json checks = Json::array();
    for (const auto& c : r.ff_checks) {
      checks.push_back(Json{{"prime", c.prime}, {"points", c.points}, {"chi_at_prime", to_json(c.chi_value)}});
    }
    j["checks"] = checks;
  }
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

inline Json to_json(const ArrangementSummary& s) {
  Json j{{"num_hyperplanes", s.num_hyperplanes},
         {"ambient_dim", s.ambient_dim},
         {"rank", s.rank},
         {"char_poly", to_json(s.characteristic)},
         {"poincare_poly", to_json(s.poincare)},
         {"os_dimension", to_json(s.os_dimension)}};
  if (s.regions) {
    j["regions"] = to_json(s.regions->regions);
    j["bounded_regions"] = to_json(s.regions->bounded);
  } else {
    j["regions"] = nullptr;
  }
  j["flats_per_level"] = s.flats_per_level;
  j["moebius_checksum"] = to_json(s.moebius_checksum);
  return j;
}

inline Json to_json(const NamikawaWeylData& w) {
  Json factors = Json::array();
  for (const auto& f : w.factors) {
    factors.push_back(Json{{"label", f.label.to_string()}, {"order", to_json(f.order)}, {"override", f.overridden}});
  }
  return Json{{"factors", factors}, {"total_order", to_json(w.total_order)}};
}

inline Json to_json(const CountReport& r) {
  Json j{{"num_hyperplanes", r.num_hyperplanes},
         {"ambient_dim", r.ambient_dim},
         {"rank", r.rank},
         {"char_poly", to_json(r.characteristic)},
         {"poincare_poly", to_json(r.poincare)},
         {"os_dimension", to_json(r.os_dimension)},
         {"weyl_order", to_json(r.weyl_order)},
         {"resolution_count", to_json(r.resolution_count)}};
  j["regions"] = r.regions ? to_json(*r.regions) : Json(nullptr);
  j["flats_per_level"] = r.flats_per_level;
  j["moebius_checksum"] = to_json(r.moebius_checksum);
  Json oracles = Json::array();
  for (const auto& o : r.oracles) oracles.push_back(to_json(o));
  j["oracles"] = oracles;
  return j;
}

/// Complete analysis of a finite symplectic group: reflections, minimal
/// parabolic classes with their normalizer data, and the zeta matching.
struct GroupAnalysis {
  std::size_t order = 0;
  std::size_t dim = 0;
  std::vector<ReflectionClass> reflections;
  std::vector<ParabolicClass> parabolics;
  ZetaReport zeta;
};

inline GroupAnalysis analyze_group(MatrixGroup& group, const GroupOptions& options = {}) {
  group.enumerate(options);
  GroupAnalysis g;
  g.order = group.order();
  g.dim = group.dim();
  g.reflections = symplectic_reflections(group);
  g.parabolics = minimal_parabolics(group, g.reflections);
  g.zeta = verify_zeta_bijection(group, g.reflections, g.parabolics);
  return g;
}

inline Json to_json(const GroupAnalysis& g) {
  Json refl = Json::array();
  for (const auto& r : g.reflections) {
    refl.push_back(Json{{"representative", r.representative}, {"size", r.size()}});
  }
  Json parab = Json::array();
  for (const auto& p : g.parabolics) {
    parab.push_back(Json{{"label", p.kleinian_label.to_string()},
                         {"subgroup_order", p.subgroup.size()},
                         {"class_size", p.class_size},
                         {"normalizer_order", p.normalizer_order},
                         {"xi_order", p.xi_order},
                         {"xi_acts_trivially", p.xi_acts_trivially()},
                         {"orbits", p.orbit_count()}});
  }
  Json matches = Json::array();
  for (const auto& m : g.zeta.matching) {
    matches.push_back(Json{{"reflection_class", m.reflection_class}, {"parabolic", m.parabolic}, {"orbit", m.orbit}});
  }
  Json zeta{{"bijective", g.zeta.bijective},
            {"reflection_classes", g.zeta.class_total},
            {"orbit_total", g.zeta.orbit_total},
            {"matching", matches}};
  if (!g.zeta.problems.empty()) zeta["problems"] = g.zeta.problems;
  return Json{{"order", g.order},
              {"dim", g.dim},
              {"r", g.reflections.size()},
              {"reflection_classes", refl},
              {"parabolic_classes", parab},
              {"zeta", zeta}};
}

}  // namespace symres
