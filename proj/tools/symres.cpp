// symres: hyperplane-arrangement invariants and counts of symplectic resolutions.
//
// Exit codes: 0 success, 1 invalid input, 2 computation cap, 3 inconsistency.

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "symres/symres.hpp"

namespace {

using symres::Json;

struct Timer {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  }
};

struct Output {
  bool json = false;
  Json doc;
  std::ostringstream text;
  int code = symres::exit_code::ok;

  void emit(const symres::Caps& caps, const Timer& t) {
    if (json) {
      doc["caps"] = symres::to_json(caps);
      doc["exit_code"] = code;
      doc["timing_ms"] = static_cast<std::int64_t>(t.ms());
      std::cout << doc.dump(2) << '\n';
    } else {
      std::cout << text.str();
    }
  }
};

void merge(Json& into, const Json& from) {
  for (const auto& [k, v] : from.items()) into[k] = v;
}

std::string join(const std::vector<std::size_t>& v) {
  std::string s;
  for (auto x : v) s += (s.empty() ? "" : " ") + std::to_string(x);
  return s;
}

std::string bigint_list(const std::vector<symres::BigInt>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].get_str();
  return s + ")";
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw symres::InvalidInput("cannot write '" + path + "'");
  out << content;
  if (!out) throw symres::InvalidInput("error writing '" + path + "'");
}

/// Runs the requested oracle; marks the output inconsistent on disagreement.
void run_oracle(const std::string& kind, const symres::Arrangement& a, const symres::IntegerPolynomial& chi,
                const symres::IntegerPolynomial& pi, const symres::Caps& caps, Output& out) {
  if (kind == "none") return;
  symres::OracleRecord rec = kind == "nbc" ? symres::nbc_cross_check(a, pi, caps.matroid)
                                           : symres::ff_cross_check(a, chi, 2, caps.matroid);
  if (!rec.agrees) out.code = symres::exit_code::inconsistency;
  out.doc["oracles"] = Json::array({symres::to_json(rec)});
  auto& t = out.text;
  t << "oracle " << rec.kind << ": " << (rec.skipped ? "skipped" : rec.agrees ? "agrees" : "DISAGREES");
  if (!rec.nbc_counts.empty()) t << ", nbc counts " << bigint_list(rec.nbc_counts);
  for (const auto& c : rec.ff_checks) t << ", #F_" << c.prime << " = " << c.points << " (chi = " << c.chi_value << ")";
  if (!rec.note.empty()) t << " [" << rec.note << "]";
  t << '\n';
}

void describe_summary(const symres::Arrangement& a, const symres::ArrangementSummary& s, std::ostream& t) {
  t << "field: " << a.field().to_string() << '\n'
    << "ambient dim: " << s.ambient_dim << '\n'
    << "hyperplanes: " << s.num_hyperplanes << '\n'
    << "central: " << (a.central() ? "yes" : "no") << '\n'
    << "rank: " << s.rank << '\n'
    << "chi(t) = " << s.characteristic.to_string() << '\n'
    << "pi(t) = " << s.poincare.to_string() << '\n'
    << "OS dimension pi(1) = " << s.os_dimension << '\n';
  if (s.regions) {
    t << "regions: " << s.regions->regions << " (bounded " << s.regions->bounded << ")\n";
  } else {
    t << "regions: n/a (non-real coefficients)\n";
  }
  t << "flats per codimension: " << join(s.flats_per_level) << '\n'
    << "moebius checksum: " << s.moebius_checksum << '\n';
}

Json arrangement_json(const symres::Arrangement& a) {
  Json hs = Json::array();
  for (const auto& h : a.hyperplanes()) {
    Json normal = Json::array();
    for (const auto& c : h.normal()) normal.push_back(c.to_string());
    hs.push_back(Json{{"normal", normal}, {"offset", h.offset().to_string()}});
  }
  return Json{{"field", a.field().to_string()},
              {"ambient_dim", a.ambient_dim()},
              {"num_hyperplanes", a.size()},
              {"hyperplanes", hs},
              {"text", symres::serialize_arrangement(a)}};
}

void emit_arrangement(const symres::Arrangement& a, const std::string& out_path, Output& out) {
  const auto text = symres::serialize_arrangement(a);
  if (!out_path.empty()) write_file(out_path, text);
  out.doc["arrangement"] = arrangement_json(a);
  if (!out_path.empty()) {
    out.doc["written_to"] = out_path;
    out.text << "wrote " << a.size() << " hyperplanes in dim " << a.ambient_dim() << " to " << out_path << '\n';
  } else {
    out.text << text;
  }
}

void describe_count(const symres::CountReport& r, std::ostream& t) {
  t << "hyperplanes: " << r.num_hyperplanes << ", ambient dim " << r.ambient_dim << ", rank " << r.rank << '\n'
    << "pi(t) = " << r.poincare.to_string() << '\n'
    << "OS dimension pi(1) = " << r.os_dimension << '\n';
  if (r.regions) t << "regions: " << *r.regions << '\n';
  t << "|W| = " << r.weyl_order << '\n'
    << "resolutions: " << r.resolution_count << " = " << r.os_dimension << " / " << r.weyl_order << '\n';
}

std::string weyl_factors(const symres::NamikawaWeylData& w) {
  std::string s;
  for (const auto& f : w.factors) {
    s += (s.empty() ? "" : " x ") + f.label.to_string() + ":" + f.order.get_str() + (f.overridden ? "*" : "");
  }
  return s.empty() ? "1" : s;
}

void describe_group(const symres::GroupAnalysis& g, const std::optional<symres::NamikawaWeylData>& w,
                    const std::string& weyl_error, std::ostream& t) {
  t << "order: " << g.order << '\n'
    << "dim V: " << g.dim << '\n'
    << "r = conjugacy classes of symplectic reflections: " << g.reflections.size() << '\n';
  for (std::size_t i = 0; i < g.reflections.size(); ++i) {
    t << "  reflection class " << i << ": size " << g.reflections[i].size() << '\n';
  }
  t << "minimal parabolic classes: " << g.parabolics.size() << '\n';
  for (std::size_t b = 0; b < g.parabolics.size(); ++b) {
    const auto& p = g.parabolics[b];
    t << "  B" << b << ": " << p.kleinian_label.to_string() << ", |H| = " << p.subgroup.size()
      << ", conjugates " << p.class_size << ", |N(H)| = " << p.normalizer_order << ", |Xi| = " << p.xi_order
      << ", Xi action on classes " << (p.xi_acts_trivially() ? "trivial" : "nontrivial") << ", orbits "
      << p.orbit_count() << '\n';
  }
  t << "zeta matching (parabolic, orbit -> reflection class):\n";
  for (const auto& m : g.zeta.matching) {
    t << "  (B" << m.parabolic << ", " << m.orbit << ") -> " << m.reflection_class << '\n';
  }
  t << "zeta bijective: " << (g.zeta.bijective ? "yes" : "no") << '\n';
  for (const auto& p : g.zeta.problems) t << "  problem: " << p << '\n';
  if (w) {
    t << "|W| = " << w->total_order << " = " << weyl_factors(*w) << '\n';
  } else {
    t << "|W|: " << weyl_error << '\n';
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"symres: intersection lattices of hyperplane arrangements and counts of symplectic resolutions"};
  app.require_subcommand(1);
  bool json = false;

  // analyze
  auto* analyze = app.add_subcommand("analyze", "lattice invariants of an arrangement file");
  std::string analyze_file, analyze_oracle = "none";
  analyze->add_option("FILE", analyze_file, "arrangement file")->required();
  analyze->add_option("--oracle", analyze_oracle, "cross-check")->check(CLI::IsMember({"nbc", "ff", "none"}));
  analyze->add_flag("--json", json, "single JSON document");

  // cone
  auto* cone = app.add_subcommand("cone", "cone an arrangement (new first coordinate x0)");
  std::string cone_file, cone_out;
  cone->add_option("FILE", cone_file, "arrangement file")->required();
  cone->add_option("--out", cone_out, "write the coned arrangement here");
  cone->add_flag("--json", json, "single JSON document");

  // catalan
  auto* catalan = app.add_subcommand("catalan", "coned (or affine) Catalan arrangement of a root system");
  std::string catalan_type;
  unsigned catalan_n = 0;
  bool catalan_affine = false;
  std::string catalan_out;
  catalan->add_option("--type", catalan_type, "A<l>, D<l> or E<l>")->required();
  catalan->add_option("--n", catalan_n, "wreath parameter n >= 1")->required()->check(CLI::Range(1u, 1000u));
  catalan->add_flag("--affine", catalan_affine, "emit the affine arrangement instead of its cone");
  catalan->add_option("--out", catalan_out, "write the arrangement here");
  catalan->add_flag("--json", json, "single JSON document");

  // count
  auto* count = app.add_subcommand("count", "number of symplectic resolutions, pi(1) / |W|");
  std::string count_catalog, count_file, count_oracle = "none";
  std::string count_weyl;
  auto* opt_catalog = count->add_option("--catalog", count_catalog, "q8d8, g4 or wreath:TYPE:N");
  auto* opt_arr = count->add_option("--arrangement", count_file, "arrangement file");
  auto* opt_weyl = count->add_option("--weyl-order", count_weyl, "|W| for --arrangement");
  opt_catalog->excludes(opt_arr)->excludes(opt_weyl);
  opt_arr->needs(opt_weyl);
  opt_weyl->needs(opt_arr);
  count->add_option("--oracle", count_oracle, "cross-check")->check(CLI::IsMember({"nbc", "ff", "none"}));
  count->add_flag("--json", json, "single JSON document");

  // wreath-formula
  auto* wreath = app.add_subcommand("wreath-formula", "closed-form count for S_n wr G");
  std::string wreath_type;
  unsigned wreath_n = 0;
  wreath->add_option("--type", wreath_type, "A<l>, D<l> or E<l>")->required();
  wreath->add_option("--n", wreath_n, "n >= 1")->required()->check(CLI::Range(1u, 1000000u));
  wreath->add_flag("--json", json, "single JSON document");

  // group analyze
  auto* group = app.add_subcommand("group", "finite symplectic groups");
  group->require_subcommand(1);
  auto* group_analyze = group->add_subcommand("analyze", "reflections, minimal parabolics, zeta matching");
  std::string group_file, group_catalog;
  auto* opt_gfile = group_analyze->add_option("FILE", group_file, "group file");
  auto* opt_gcat = group_analyze->add_option("--catalog", group_catalog, "q8d8 or g4");
  opt_gfile->excludes(opt_gcat);
  group_analyze->add_flag("--json", json, "single JSON document");

  // selftest
  auto* selftest = app.add_subcommand("selftest", "catalog, oracle and property checks");
  std::vector<std::string> selftest_skip;
  selftest->add_option("--skip", selftest_skip, "skip a check family")
      ->check(CLI::IsMember({"ff", "nbc", "group", "properties"}))
      ->delimiter(',');
  selftest->add_flag("--json", json, "single JSON document");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return symres::exit_code::invalid_input;
  }

  const Timer timer;
  Output out;
  out.json = json;
  symres::Caps caps;
  try {
    caps = symres::Caps::from_environment();

    if (*analyze) {
      const auto a = symres::parse_arrangement_file(analyze_file);
      const auto s = symres::summarize(a, caps.lattice);
      out.doc["command"] = "analyze";
      out.doc["input"] = analyze_file;
      out.doc["field"] = a.field().to_string();
      out.doc["central"] = a.central();
      merge(out.doc, symres::to_json(s));
      describe_summary(a, s, out.text);
      run_oracle(analyze_oracle, a, s.characteristic, s.poincare, caps, out);
    } else if (*cone) {
      const auto a = symres::parse_arrangement_file(cone_file);
      out.doc["command"] = "cone";
      out.doc["input"] = cone_file;
      emit_arrangement(symres::cone(a), cone_out, out);
    } else if (*catalan) {
      const symres::CatalanSpec spec{symres::weyl_data(catalan_type), catalan_n};
      out.doc["command"] = "catalan";
      out.doc["type"] = spec.type.label();
      out.doc["n"] = catalan_n;
      out.doc["affine"] = catalan_affine;
      emit_arrangement(catalan_affine ? symres::affine_catalan(spec) : symres::catalan_arrangement(spec),
                       catalan_out, out);
    } else if (*count) {
      out.doc["command"] = "count";
      if (!*opt_catalog && !*opt_arr) throw symres::InvalidInput("count needs --catalog or --arrangement");
      std::optional<symres::CatalogEntry> entry;
      symres::Arrangement arr(symres::FieldDescriptor::rational(), 0);
      symres::BigInt weyl;
      if (*opt_catalog) {
        entry = symres::catalog(count_catalog);
        arr = entry->arrangement;
        weyl = entry->weyl.total_order;
        out.doc["catalog"] = entry->name;
        out.doc["description"] = entry->description;
        out.doc["weyl"] = symres::to_json(entry->weyl);
        out.text << entry->name << ": " << entry->description << '\n'
                 << "W = " << weyl_factors(entry->weyl) << (entry->weyl_overrides.empty() ? "" : "  (* override)")
                 << '\n';
      } else {
        arr = symres::parse_arrangement_file(count_file);
        if (count_weyl.empty() || count_weyl.find_first_not_of("0123456789") != std::string::npos ||
            count_weyl.size() > 200) {
          throw symres::InvalidInput("--weyl-order must be a positive integer, got '" + count_weyl + "'");
        }
        weyl = symres::BigInt(count_weyl);
        out.doc["input"] = count_file;
      }
      out.doc["field"] = arr.field().to_string();
      const auto r = symres::count_resolutions(arr, weyl, caps.lattice);
      merge(out.doc, symres::to_json(r));
      describe_count(r, out.text);
      if (entry) {
        if (entry->wreath) {
          const auto& spec = *entry->wreath;
          const auto closed = symres::wreath_count_closed_form(spec.type, spec.n);
          out.doc["closed_form_count"] = symres::to_json(closed);
          out.text << "closed form: " << closed << '\n';
          if (spec.n >= 2 && closed != r.resolution_count) {
            throw symres::Inconsistency("closed form " + closed.get_str() + " differs from the arrangement route " +
                                        r.resolution_count.get_str());
          }
          if (spec.n < 2) {
            out.text << "note: for n = 1 the arrangement route and the closed form count different objects\n";
          }
        } else if (r.resolution_count != entry->expected.count ||
                   (entry->expected.poincare && r.poincare != *entry->expected.poincare)) {
          throw symres::Inconsistency("computed count " + r.resolution_count.get_str() + " or pi(t) differs from the " +
                                      "catalog's expected count " + entry->expected.count.get_str());
        }
      }
      out.doc["oracles"] = Json::array();
      run_oracle(count_oracle, arr, r.characteristic, r.poincare, caps, out);
    } else if (*wreath) {
      const auto type = symres::weyl_data(wreath_type);
      const auto closed = symres::wreath_count_closed_form(type, wreath_n);
      Json exps = Json::array();
      for (auto e : type.exponents) exps.push_back(e);
      out.doc["command"] = "wreath-formula";
      out.doc["type"] = type.label();
      out.doc["n"] = wreath_n;
      out.doc["exponents"] = exps;
      out.doc["coxeter_number"] = type.coxeter_number;
      out.doc["weyl_order"] = symres::to_json(symres::wreath_weyl_order(type, wreath_n));
      out.doc["count"] = symres::to_json(closed);
      out.text << "S_" << wreath_n << " wr G, W_G of type " << type.label() << " (h = " << type.coxeter_number
               << ")\n"
               << "count = " << closed << '\n';
    } else if (*group) {
      std::optional<symres::CatalogEntry> entry;
      symres::MatrixGroup g = [&] {
        if (*opt_gcat) {
          entry = symres::catalog(group_catalog);
          if (!entry->group) throw symres::InvalidInput("catalog entry '" + group_catalog + "' stores no group");
          return entry->group->make();
        }
        if (group_file.empty()) throw symres::InvalidInput("group analyze needs FILE or --catalog");
        return symres::parse_group_file(group_file);
      }();
      const auto analysis = symres::analyze_group(g, caps.group);
      std::optional<symres::NamikawaWeylData> w;
      std::string weyl_error;
      try {
        w = symres::namikawa_weyl_from_group(analysis.parabolics,
                                             entry ? entry->weyl_overrides : symres::WeylOverrides{});
      } catch (const symres::InvalidInput& e) {
        weyl_error = e.what();
      }
      out.doc["command"] = "group analyze";
      out.doc["input"] = entry ? "catalog:" + entry->name : group_file;
      out.doc["field"] = g.field().to_string();
      merge(out.doc, symres::to_json(analysis));
      out.doc["weyl"] = w ? symres::to_json(*w) : Json{{"error", weyl_error}};
      describe_group(analysis, w, weyl_error, out.text);
      if (!analysis.zeta.bijective) out.code = symres::exit_code::inconsistency;
    } else if (*selftest) {
      symres::SelftestOptions opts;
      opts.skip = std::set<std::string>(selftest_skip.begin(), selftest_skip.end());
      opts.caps = caps;
      const auto r = symres::run_selftest(opts);
      out.doc["command"] = "selftest";
      merge(out.doc, symres::to_json(r));
      symres::print_selftest(out.text, r);
      out.code = r.exit_code();
    }
  } catch (const symres::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    if (json) {
      std::cout << Json{{"error", e.what()}, {"exit_code", e.exit_code()}}.dump(2) << '\n';
    }
    return e.exit_code();
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return symres::exit_code::inconsistency;
  }
  out.emit(caps, timer);
  if (out.code == symres::exit_code::inconsistency) std::cerr << "error: internal consistency check failed\n";
  return out.code;
}
