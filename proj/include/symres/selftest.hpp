#pragma once

// Self-test: every catalog entry against its expected values, the oracle
// cross-checks, closed-form degeneracies and the randomized property suite.

#include <algorithm>
#include <chrono>
#include <cstddef>
#include <iomanip>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "symres/catalog.hpp"
#include "symres/counting.hpp"
#include "symres/error.hpp"
#include "symres/properties.hpp"
#include "symres/report.hpp"
#include "symres/root_systems.hpp"

namespace symres {

enum class CheckStatus { pass, fail, skip };

inline const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "PASS";
    case CheckStatus::fail: return "FAIL";
    case CheckStatus::skip: return "SKIP";
  }
  return "?";
}

struct CheckRow {
  std::string section;
  std::string check;
  CheckStatus status = CheckStatus::pass;
  std::string expected;
  std::string computed;
};

struct WreathRow {
  std::string type;
  unsigned n = 0;
  BigInt closed_form;
  BigInt os_dimension;
  BigInt weyl_order;
  BigInt direct;
};

struct SelftestOptions {
  std::set<std::string> skip;  // any of: ff, nbc, group, properties
  std::optional<std::vector<CatalogEntry>> entries;  // defaults to selftest_catalog_names()
  Caps caps;
  PropertyOptions properties;
  std::size_t ff_primes = 2;
};

struct SelftestResult {
  std::vector<CheckRow> rows;
  std::vector<WreathRow> wreath;
  double seconds = 0;

  std::size_t count(CheckStatus s) const {
    std::size_t n = 0;
    for (const auto& r : rows) n += r.status == s;
    return n;
  }
  bool passed() const { return count(CheckStatus::fail) == 0; }
  int exit_code() const { return passed() ? symres::exit_code::ok : symres::exit_code::inconsistency; }
};

namespace detail {

class RowSink {
 public:
  explicit RowSink(std::vector<CheckRow>& rows) : rows_(rows) {}

  template <class T>
  void equal(const std::string& section, const std::string& check, const T& expected, const T& computed) {
    rows_.push_back({section, check, expected == computed ? CheckStatus::pass : CheckStatus::fail, str(expected),
                     str(computed)});
  }
  void truth(const std::string& section, const std::string& check, bool ok, std::string detail = {}) {
    rows_.push_back({section, check, ok ? CheckStatus::pass : CheckStatus::fail, "true", ok ? "true" : detail});
  }
  void row(const std::string& section, const std::string& check, bool ok, std::string expected, std::string computed) {
    rows_.push_back({section, check, ok ? CheckStatus::pass : CheckStatus::fail, std::move(expected), std::move(computed)});
  }
  void skip(const std::string& section, const std::string& check, std::string why) {
    rows_.push_back({section, check, CheckStatus::skip, "", std::move(why)});
  }
  void error(const std::string& section, const std::string& check, const std::exception& e) {
    rows_.push_back({section, check, CheckStatus::fail, "no error", std::string("error: ") + e.what()});
  }

 private:
  template <class T>
  static std::string str(const T& v) {
    if constexpr (std::is_same_v<T, IntegerPolynomial>) {
      return v.to_string();
    } else if constexpr (std::is_same_v<T, BigInt>) {
      return v.get_str();
    } else if constexpr (std::is_same_v<T, std::string>) {
      return v;
    } else {
      std::ostringstream os;
      os << v;
      return os.str();
    }
  }

  std::vector<CheckRow>& rows_;
};

inline void check_group(RowSink& out, const CatalogEntry& entry, const SelftestOptions& opts) {
  const std::string sec = entry.name + "/group";
  auto group = entry.group->make();
  const auto g = analyze_group(group, opts.caps.group);
  const auto& ex = entry.expected;
  if (ex.group_order) out.equal(sec, "order", *ex.group_order, g.order);
  if (ex.reflection_classes) out.equal(sec, "reflection classes (r)", *ex.reflection_classes, g.reflections.size());
  if (ex.parabolic_classes) out.equal(sec, "minimal parabolic classes", *ex.parabolic_classes, g.parabolics.size());
  if (ex.parabolic_label) {
    std::string labels;
    bool ok = true;
    for (const auto& p : g.parabolics) {
      labels += (labels.empty() ? "" : ",") + p.kleinian_label.to_string();
      ok = ok && p.kleinian_label.to_string() == *ex.parabolic_label;
    }
    out.truth(sec, "every parabolic labeled " + *ex.parabolic_label, ok, labels);
  }
  if (entry.weyl_overrides.empty()) {
    bool trivial = true;
    for (const auto& p : g.parabolics) trivial = trivial && p.xi_acts_trivially();
    out.truth(sec, "normalizer quotient acts trivially", trivial, "nontrivial class action");
  }
  out.truth(sec, "zeta matching is a bijection", g.zeta.bijective,
            g.zeta.problems.empty() ? "not bijective" : g.zeta.problems.front());
  const auto w = namikawa_weyl_from_group(g.parabolics, entry.weyl_overrides);
  out.equal(sec, "|W| from parabolic data", entry.weyl.total_order, w.total_order);
}

inline void check_entry(RowSink& out, SelftestResult& result, const CatalogEntry& entry,
                        const SelftestOptions& opts) {
  const std::string& sec = entry.name;
  const auto& ex = entry.expected;
  std::optional<CountReport> r;
  try {
    r = count_resolutions(entry.arrangement, entry.weyl.total_order, opts.caps.lattice);
  } catch (const Inconsistency& e) {
    out.error(sec, "count_resolutions", e);
    // Still say which invariant moved.
    try {
      const auto s = summarize(entry.arrangement, opts.caps.lattice);
      if (ex.poincare) out.equal(sec, "poincare", *ex.poincare, s.poincare);
      out.equal(sec, "os dimension pi(1)", ex.os_dimension, s.os_dimension);
    } catch (const Error&) {
    }
  } catch (const Error& e) {
    out.error(sec, "count_resolutions", e);
  }
  if (r) {
    if (ex.poincare) out.equal(sec, "poincare", *ex.poincare, r->poincare);
    out.equal(sec, "os dimension pi(1)", ex.os_dimension, r->os_dimension);
    const bool degenerate_wreath = entry.wreath && entry.wreath->n < 2;
    if (degenerate_wreath) {
      out.skip(sec, "count", "arrangement route not compared with the closed form for n = 1");
    } else {
      out.equal(sec, "count", ex.count, r->resolution_count);
    }
    if (r->regions) out.equal(sec, "regions = |W| * count", *r->regions, BigInt(r->weyl_order * r->resolution_count));
    if (entry.wreath) {
      const auto& spec = *entry.wreath;
      result.wreath.push_back({spec.type.label(), spec.n, wreath_count_closed_form(spec.type, spec.n),
                               r->os_dimension, r->weyl_order, r->resolution_count});
    }

    if (opts.skip.contains("nbc")) {
      out.skip(sec, "nbc oracle", "skipped by request");
    } else {
      try {
        const auto o = nbc_cross_check(entry.arrangement, r->poincare, opts.caps.matroid);
        out.equal(sec, "nbc oracle", r->poincare, IntegerPolynomial(o.nbc_counts));
      } catch (const Error& e) {
        out.error(sec, "nbc oracle", e);
      }
    }

    if (opts.skip.contains("ff")) {
      out.skip(sec, "ff oracle", "skipped by request");
    } else if (!entry.arrangement.field().is_rational()) {
      out.skip(sec, "ff oracle", "arrangement is not rational");
    } else {
      try {
        const auto o = ff_cross_check(entry.arrangement, r->characteristic, opts.ff_primes, opts.caps.matroid);
        std::string expected, computed;
        for (const auto& c : o.ff_checks) {
          expected += (expected.empty() ? "" : " ") + ("chi(" + std::to_string(c.prime) + ")=" + c.chi_value.get_str());
          computed += (computed.empty() ? "" : " ") + ("#" + std::to_string(c.prime) + "=" + std::to_string(c.points));
        }
        const bool ok = o.agrees && o.ff_checks.size() == opts.ff_primes;
        if (!o.note.empty()) computed += " (" + o.note + ")";
        out.row(sec, "ff oracle at " + std::to_string(opts.ff_primes) + " good primes", ok, expected, computed);
      } catch (const Error& e) {
        out.error(sec, "ff oracle", e);
      }
    }
  }

  if (entry.group) {
    if (opts.skip.contains("group")) {
      out.skip(sec + "/group", "group pipeline", "skipped by request");
    } else {
      try {
        check_group(out, entry, opts);
      } catch (const Error& e) {
        out.error(sec + "/group", "group pipeline", e);
      }
    }
  }
}

inline std::vector<WeylTypeData> all_small_ade_types() {
  std::vector<WeylTypeData> out;
  for (std::size_t l = 1; l <= 8; ++l) out.push_back(weyl_data(RootFamily::A, l));
  for (std::size_t l = 4; l <= 8; ++l) out.push_back(weyl_data(RootFamily::D, l));
  for (std::size_t l = 6; l <= 8; ++l) out.push_back(weyl_data(RootFamily::E, l));
  return out;
}

}  // namespace detail

inline SelftestResult run_selftest(const SelftestOptions& opts = {}) {
  const auto start = std::chrono::steady_clock::now();
  SelftestResult result;
  detail::RowSink out(result.rows);

  std::vector<CatalogEntry> entries;
  if (opts.entries) {
    entries = *opts.entries;
  } else {
    for (const auto& name : selftest_catalog_names()) entries.push_back(catalog(name));
  }
  for (const auto& e : entries) detail::check_entry(out, result, e, opts);

  for (const auto& type : detail::all_small_ade_types()) {
    out.equal("closed form n=1", type.label(), BigInt(1), wreath_count_closed_form(type, 1));
  }

  if (opts.skip.contains("properties")) {
    out.skip("properties", "randomized invariants", "skipped by request");
  } else {
    try {
      const auto p = run_property_suite(opts.properties);
      for (const auto& [name, applied] : p.checked) {
        const auto failures = p.failures_of(name);
        std::string detail = std::to_string(applied - failures) + "/" + std::to_string(applied);
        for (const auto& f : p.failures) {
          if (f.property == name) {
            detail += "; case " + std::to_string(f.case_index) + ": " + f.detail;
            break;
          }
        }
        result.rows.push_back({"properties seed " + std::to_string(p.seed), name,
                               failures == 0 ? CheckStatus::pass : CheckStatus::fail,
                               std::to_string(applied) + "/" + std::to_string(applied), detail});
      }
    } catch (const Error& e) {
      out.error("properties", "randomized invariants", e);
    }
  }

  result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

inline void print_selftest(std::ostream& os, const SelftestResult& r) {
  std::size_t wsec = 7, wcheck = 5;
  for (const auto& row : r.rows) {
    wsec = std::max(wsec, row.section.size());
    wcheck = std::max(wcheck, row.check.size());
  }
  os << std::left << std::setw(6) << "STATUS" << "  " << std::setw(static_cast<int>(wsec)) << "SECTION" << "  "
     << std::setw(static_cast<int>(wcheck)) << "CHECK" << "  RESULT\n";
  for (const auto& row : r.rows) {
    os << std::left << std::setw(6) << to_string(row.status) << "  " << std::setw(static_cast<int>(wsec))
       << row.section << "  " << std::setw(static_cast<int>(wcheck)) << row.check << "  ";
    if (row.status == CheckStatus::fail) {
      os << "expected " << row.expected << " | computed " << row.computed;
    } else {
      os << row.computed;
    }
    os << '\n';
  }
  if (!r.wreath.empty()) {
    os << "\nwreath products S_n wr G\n";
    os << std::left << std::setw(6) << "type" << std::setw(4) << "n" << std::setw(14) << "closed form"
       << std::setw(10) << "pi(1)" << std::setw(8) << "|W|" << "pi(1)/|W|\n";
    for (const auto& w : r.wreath) {
      os << std::left << std::setw(6) << w.type << std::setw(4) << w.n << std::setw(14) << w.closed_form.get_str()
         << std::setw(10) << w.os_dimension.get_str() << std::setw(8) << w.weyl_order.get_str() << w.direct.get_str()
         << '\n';
    }
  }
  os << '\n'
     << r.count(CheckStatus::pass) << " passed, " << r.count(CheckStatus::fail) << " failed, "
     << r.count(CheckStatus::skip) << " skipped in " << std::fixed << std::setprecision(1) << r.seconds << " s\n";
  os << (r.passed() ? "selftest OK\n" : "selftest FAILED\n");
}

inline Json to_json(const SelftestResult& r) {
  Json rows = Json::array();
  for (const auto& row : r.rows) {
    rows.push_back(Json{{"status", to_string(row.status)},
                        {"section", row.section},
                        {"check", row.check},
                        {"expected", row.expected},
                        {"computed", row.computed}});
  }
  Json wreath = Json::array();
  for (const auto& w : r.wreath) {
    wreath.push_back(Json{{"type", w.type},
                          {"n", w.n},
                          {"closed_form", to_json(w.closed_form)},
                          {"os_dimension", to_json(w.os_dimension)},
                          {"weyl_order", to_json(w.weyl_order)},
                          {"direct", to_json(w.direct)}});
  }
  return Json{{"passed", r.passed()},
              {"counts",
               {{"pass", r.count(CheckStatus::pass)},
                {"fail", r.count(CheckStatus::fail)},
                {"skip", r.count(CheckStatus::skip)}}},
              {"checks", rows},
              {"wreath", wreath}};
}

}  // namespace symres
