// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "symres/symres.hpp"

using namespace symres;

namespace {

struct Criterion {
  std::string id;
  std::string title;
  std::function<std::string()> run;  // empty string on success, else the reason
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

template <class A, class B>
void expect(std::ostringstream& why, const std::string& what, const A& expected, const B& got) {
  if (!(expected == got)) why << what << ": expected " << expected << ", got " << got << "; ";
}

void expect_true(std::ostringstream& why, const std::string& what, bool ok) {
  if (!ok) why << what << " failed; ";
}

std::string ac1() {
  std::ostringstream why;
  const auto t0 = std::chrono::steady_clock::now();
  const auto a = q8d8_arrangement();
  expect(why, "hyperplanes", 21u, a.size());
  const auto pi = poincare_polynomial(intersection_lattice(a));
  const double secs = seconds_since(t0);
  expect(why, "pi", std::string("1 + 21t + 170t^2 + 650t^3 + 1125t^4 + 625t^5"), pi.to_string());
  expect(why, "pi(1)", BigInt(2592), pi.evaluate(1));
  expect_true(why, "lattice route under 300 s", secs < 300.0);
  const auto nbc = nbc_cross_check(a, pi);
  expect_true(why, "nbc oracle agreement", nbc.agrees);
  expect(why, "nbc counts", pi.to_string(), IntegerPolynomial(nbc.nbc_counts).to_string());
  std::cout << "       lattice route " << secs << " s\n";
  return why.str();
}

std::string ac2() {
  std::ostringstream why;
  const auto r = count_resolutions(q8d8_arrangement(), 32);
  expect(why, "pi(1)", BigInt(2592), r.os_dimension);
  expect(why, "count", BigInt(81), r.resolution_count);
  expect(why, "exact division", BigInt(2592), BigInt(r.resolution_count * 32));
  bool threw = false;
  try {
    count_resolutions(q8d8_arrangement(), 31);
  } catch (const Inconsistency&) {
    threw = true;
  }
  expect_true(why, "non-dividing order rejected", threw);
  return why.str();
}

std::string ac3() {
  std::ostringstream why;
  const auto a = g4_arrangement();
  expect(why, "field conductor", 3u, a.field().conductor());
  const auto r = count_resolutions(a, 3);
  expect(why, "pi", std::string("1 + 3t + 2t^2"), r.poincare.to_string());
  expect(why, "OS dimension", BigInt(6), r.os_dimension);
  MatroidOptions opts;
  opts.record_sets = true;
  const auto nbc = nbc_basis(a, opts);
  expect(why, "nbc sizes", std::string("1 3 2"),
         nbc.counts.size() == 3 ? nbc.counts[0].get_str() + " " + nbc.counts[1].get_str() + " " + nbc.counts[2].get_str()
                                : std::string("?"));
  std::size_t monomials = 0;
  for (const auto& level : nbc.sets) monomials += level.size();
  expect(why, "nbc monomials", 6u, monomials);
  expect(why, "count", BigInt(2), r.resolution_count);
  return why.str();
}

std::string ac4() {
  std::ostringstream why;
  struct Case {
    const char* type;
    unsigned n;
    long pi1, count;
  };
  for (const auto& c : {Case{"A1", 2, 8, 2}, Case{"A1", 3, 12, 3}, Case{"A2", 2, 60, 5}, Case{"A3", 2, 672, 14}}) {
    const auto w = weyl_data(c.type);
    const auto t0 = std::chrono::steady_clock::now();
    const auto direct = wreath_count_direct(w, c.n);
    const double secs = seconds_since(t0);
    const auto closed = wreath_count_closed_form(w, c.n);
    const std::string tag = std::string(c.type) + ",n=" + std::to_string(c.n);
    expect(why, tag + " pi(1)", BigInt(c.pi1), direct.os_dimension);
    expect(why, tag + " |W|", BigInt(2) * w.weyl_order, direct.weyl_order);
    expect(why, tag + " direct", BigInt(c.count), direct.resolution_count);
    expect(why, tag + " closed form", BigInt(c.count), closed);
    if (std::string(c.type) == "A3") expect_true(why, "A3 under 120 s", secs < 120.0);
    std::cout << "       " << tag << ": " << closed << " = " << direct.os_dimension << "/" << direct.weyl_order << " ("
              << secs << " s)\n";
  }
  return why.str();
}

std::string ac5() {
  std::ostringstream why;
  for (const auto& t : detail::all_small_ade_types())
    expect(why, t.label() + " closed form at n=1", BigInt(1), wreath_count_closed_form(t, 1));
  const auto r = wreath_count_direct(weyl_data("A1"), 1);
  expect(why, "A1 n=1 pi(1)", BigInt(4), r.os_dimension);
  expect(why, "A1 n=1 |W|", BigInt(2), r.weyl_order);
  expect(why, "A1 n=1 direct count", BigInt(2), r.resolution_count);
  return why.str();
}

std::string ac6() {
  std::ostringstream why;
  std::vector<std::pair<std::string, Arrangement>> rational;
  for (const auto& name : selftest_catalog_names()) {
    auto e = catalog(name);
    if (e.arrangement.field().is_rational()) rational.emplace_back(name, e.arrangement);
  }
  // braid arrangement in three coordinates: t(t-1)(t-2)
  std::vector<RawHyperplane> braid;
  for (auto [i, j] : {std::pair{0, 1}, std::pair{0, 2}, std::pair{1, 2}}) {
    RawHyperplane h;
    h.normal.assign(3, Scalar(0));
    h.normal[i] = Scalar(1);
    h.normal[j] = Scalar(-1);
    braid.push_back(h);
  }
  const auto b = build_arrangement(FieldDescriptor::rational(), 3, braid);
  rational.emplace_back("braid3", b);
  for (const auto& [name, a] : rational) {
    const auto chi = characteristic_polynomial(intersection_lattice(a));
    const auto rec = ff_cross_check(a, chi, 2);
    expect_true(why, name + " ff agreement", rec.agrees && !rec.skipped);
    expect(why, name + " primes checked", 2u, rec.ff_checks.size());
    std::cout << "       " << name << ":";
    for (const auto& c : rec.ff_checks) std::cout << " q=" << c.prime << " " << c.points << "/" << c.chi_value;
    std::cout << '\n';
  }
  expect(why, "braid q=7", std::uint64_t{210}, finite_field_count(b, 7));
  expect(why, "braid q=11", std::uint64_t{990}, finite_field_count(b, 11));
  return why.str();
}

std::string ac7() {
  std::ostringstream why;
  {
    auto g = q8d8_group_data().make();
    const auto a = analyze_group(g);
    expect(why, "q8d8 order", 32u, a.order);
    expect(why, "q8d8 reflection classes", 5u, a.reflections.size());
    expect(why, "q8d8 minimal parabolic classes", 5u, a.parabolics.size());
    for (const auto& p : a.parabolics) {
      expect(why, "q8d8 parabolic label", std::string("A1"), p.kleinian_label.to_string());
      expect_true(why, "q8d8 trivial normalizer action", p.xi_acts_trivially());
    }
    expect_true(why, "q8d8 zeta bijection", a.zeta.bijective);
    expect(why, "q8d8 |W|", BigInt(32), namikawa_weyl_from_group(a.parabolics).total_order);
  }
  {
    auto g = g4_group_data().make();
    const auto a = analyze_group(g);
    expect(why, "g4 order", 24u, a.order);
    expect(why, "g4 reflection classes", 2u, a.reflections.size());
    expect_true(why, "g4 zeta bijection", a.zeta.bijective);
    expect(why, "g4 |W| via override", BigInt(3),
           namikawa_weyl_from_group(a.parabolics, catalog("g4").weyl_overrides).total_order);
  }
  return why.str();
}

std::string ac8() {
  std::ostringstream why;
  PropertyOptions opts;
  const auto r = run_property_suite(opts);
  std::cout << "       seed " << r.seed << ", " << r.cases << " cases\n";
  for (const char* p : {"whitney", "deletion_restriction", "cone", "moebius_row_sum", "zaslavsky"}) {
    expect_true(why, std::string(p) + " >= 100 cases", r.checked.count(p) && r.checked.at(p) >= 100);
    expect(why, std::string(p) + " failures", 0u, r.failures_of(p));
  }
  // Independent subset-sum oracle, outside the library.
  std::mt19937_64 rng(r.seed);
  std::uniform_int_distribution<std::size_t> dim_d(1, 4), size_d(0, 12);
  std::size_t agree = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const auto dim = dim_d(rng);
    const auto planes = oracle::dedup(oracle::random_planes(rng, size_d(rng), dim, 2, 0.3));
    std::vector<RawHyperplane> raw;
    for (const auto& p : planes) {
      RawHyperplane h;
      for (long v : p.normal) h.normal.emplace_back(v);
      if (p.offset != 0) h.offset = Scalar(p.offset);
      raw.push_back(h);
    }
    const auto a = build_arrangement(FieldDescriptor::rational(), dim, raw);
    if (characteristic_polynomial(intersection_lattice(a)) == IntegerPolynomial(oracle::whitney(planes, dim))) ++agree;
  }
  expect(why, "test-side Whitney oracle agreement", 100u, agree);
  return why.str();
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {"AC1", "q8d8 Poincare polynomial via lattice and nbc", ac1},
      {"AC2", "q8d8 count 2592 / 32 = 81", ac2},
      {"AC3", "G4 over Q(zeta_3): pi, nbc basis, count 2", ac3},
      {"AC4", "wreath closed form equals arrangement route", ac4},
      {"AC5", "n = 1 conventions", ac5},
      {"AC6", "finite-field counts match chi at good primes", ac6},
      {"AC7", "group pipeline for q8d8 and g4", ac7},
      {"AC8", "randomized property suites", ac8},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    std::string why;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      why = c.run();
    } catch (const std::exception& e) {
      why = std::string("exception: ") + e.what();
    }
    const bool ok = why.empty();
    failed += !ok;
    std::cout << (ok ? "[PASS] " : "[FAIL] ") << c.id << " " << c.title << " (" << seconds_since(t0) << " s)";
    if (!ok) std::cout << ": " << why;
    std::cout << std::endl;
  }
  std::cout << (failed ? std::to_string(failed) + " criteria failed" : std::string("all criteria passed")) << '\n';
  return failed ? 1 : 0;
}
