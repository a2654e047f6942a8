// Acceptance suite: one PASS/FAIL line per criterion, with pinned wall-clock
// limits. Exit status is nonzero if any criterion fails. `--long` adds the A4
// and D4 conjecture scans to criterion 7.

#include "eqs/correspondence.hpp"
#include "eqs/poly_io.hpp"
#include "eqs/restriction_checks.hpp"
#include "eqs/verify.hpp"
#include "oracles.hpp"

#include <chrono>
#include <cstring>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>
#include <thread>

using namespace eqs;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      detail += (detail.empty() ? "" : "; ") + what;
    }
  }
};

unsigned worker_count() { return std::max(1u, std::thread::hardware_concurrency()); }

const Engine& engine(const char* label) { return shared_engine(TypeLabel::parse(label)); }

Poly p(const char* text, int rank) { return parse_poly(text, rank); }

ScanReport scan(const std::string& property, const std::string& type, std::size_t samples = 0) {
  ScanConfig cfg;
  cfg.property = property;
  cfg.type = type;
  cfg.samples = samples;
  cfg.jobs = worker_count();
  return run_scan(cfg);
}

void require_clean(Outcome& o, const ScanReport& r, std::size_t* total) {
  if (total) *total += r.cases;
  std::ostringstream s;
  s << r.property << " " << r.config.type << ": " << r.counterexamples.size() << " counterexamples in " << r.cases
    << " cases";
  o.require(r.pass() && r.cases > 0, s.str());
}

Outcome theorem_example() {
  Outcome o;
  const Engine& b3 = engine("B3");
  const Engine& c3 = engine("C3");
  const auto u = parse_one_line("3 -2 1");
  const auto v = parse_one_line("-3 -2 1");
  const auto w = parse_one_line("-2 -3 1");
  const BcReport r = bc_correspondence(b3, c3, u, v, w);
  o.require(r.type_b == p("2*b1*b2^2 + 2*b1*b2*b3 + 2*b2^3 + 3*b2^2*b3 + b2*b3^2", 3), "type B value");
  o.require(r.type_c == p("2*c1*c2^2 + 2*c1*c2*c3 + 4*c2^3 + 6*c2^2*c3 + 2*c2*c3^2", 3), "type C value");
  o.require(r.identity.exponent == -1, "exponent");
  o.require(r.ok(), "identity");
  return o;
}

Outcome grassmann_example() {
  Outcome o;
  const Engine& b3 = engine("B3");
  const Engine& c3 = engine("C3");
  const auto lam = StrictPartition::parse("3,2");
  const auto mu = StrictPartition::parse("2,1");
  const auto nu = StrictPartition::parse("3,2,1");
  const BcReport r = oglg_correspondence(b3, c3, lam, mu, nu);
  o.require(r.type_b == p("6*b1^2 + 10*b1*b2 + 4*b2^2 + 5*b1*b3 + 4*b2*b3 + b3^2", 3), "OG value");
  o.require(r.type_c == p("3*c1^2 + 10*c1*c2 + 8*c2^2 + 5*c1*c3 + 8*c2*c3 + 2*c3^2", 3), "LG value");
  o.require(r.identity.exponent == -1, "exponent");
  o.require(r.ok(), "identity");
  return o;
}

Outcome inclusion_example() {
  Outcome o;
  const Engine& b3 = engine("B3");
  const Engine& f4 = engine("F4");
  const DynkinInclusion inc(b3.label(), f4.label(), {2, 3, 4});
  const WeylGroup& g = *b3.group;
  const WeylGroup& gf = *f4.group;
  const Poly src = b3.solver->value(g.from_word({1, 2, 1}), g.from_word({2, 3, 1}), g.from_word({1, 2, 3, 1}));
  const Poly dst = f4.solver->value(gf.from_word({2, 3, 2}), gf.from_word({3, 4, 2}), gf.from_word({2, 3, 4, 2}));
  o.require(src == p("2*b1^2 + 3*b1*b2 + b2^2", 3), "B3 value");
  o.require(dst == p("2*z2^2 + 3*z2*z3 + z3^2", 4), "F4 value");
  o.require(substitute(src, inc.substitution()) == dst, "psi");
  return o;
}

Outcome restriction_example() {
  Outcome o;
  const Engine& b3 = engine("B3");
  const ElementId x = b3.group->from_word({2, 1, 2, 3});
  o.require(b3.table->restrict(x, x) ==
                p("4*b1^3*b2 + 10*b1^2*b2^2 + 2*b1^2*b2*b3 + 8*b1*b2^3 + 3*b1*b2^2*b3 + 2*b2^4 + b2^3*b3", 3),
            "restriction value");
  return o;
}

Outcome monotonicity_counterexample() {
  Outcome o;
  const Engine& a5 = engine("A5");
  const WeylGroup& g = *a5.group;
  auto id = [&](const char* s) { return id_from_one_line(g, parse_one_line(s)); };
  const Poly first = a5.solver->value(id("351624"), id("214356"), id("631524"));
  const Poly second = a5.solver->value(id("356124"), id("214356"), id("635124"));
  o.require(first == Poly::one(5), "first coefficient is 1");
  o.require(second.is_zero(), "second coefficient is 0");
  o.require(fixture_monotonicity_a5().reproduced, "fixture");
  return o;
}

Outcome divisibility_counterexample() {
  Outcome o;
  const Engine& a3 = engine("A3");
  const WeylGroup& g = *a3.group;
  const ElementId u = g.from_word({3});
  const ElementId v = g.from_word({2, 3, 1});
  const Poly c = a3.solver->value(u, v, v);
  const Poly c1 = a3.solver->value(g.left(1, u), v, g.left(1, v));
  o.require(c == p("a2 + a3", 3), "C_{u,v}^w");
  o.require(c1 == p("a1 + a2", 3), "C_{s1 u,v}^{s1 w}");
  const Poly diff = c1 - c;
  o.require(diff == p("a1 - a3", 3), "difference");
  o.require(!poly_props(diff).nonneg && !divisibility_test(diff, LinearForm(std::vector<int>{1, 0, 0})).divisible,
            "neither nonnegative nor divisible");
  o.require(fixture_divisibility_a3().reproduced, "fixture");
  return o;
}

Outcome folding_search() {
  Outcome o;
  const FixtureResult f = fixture_folding_d4_search();
  o.require(f.reproduced, "search");
  o.require(f.detail["elements"] == 192 && f.detail["matches"] == 0, "192 elements, zero matches");
  o.require(fixture_folding_b2_d3().reproduced, "B2/D3 coincidence");
  return o;
}

Outcome interval_example() {
  Outcome o;
  const Engine& b3 = engine("B3");
  const WeylGroup& g = *b3.group;
  const ElementId u = g.from_word({2, 3});
  const ElementId w = g.from_word({2, 1, 3});
  o.require(b3.solver->value(u, g.from_word({1, 3}), w) == p("b2 + b3", 3), "C_{u,v}^w");
  o.require(b3.solver->value(u, g.from_word({3}), w).is_zero(), "s1 branch vanishes");
  o.require(b3.solver->value(u, g.from_word({1}), w) == Poly::one(3), "s3 branch is 1");
  o.require(fixture_interval_existential().reproduced, "fixture");
  return o;
}

Outcome bc_exhaustive() {
  Outcome o;
  ScanConfig two;
  two.property = "bc";
  two.type = "B2";
  two.jobs = worker_count();
  const ScanReport r2 = run_scan(two);
  o.require(r2.cases == 512, "rank 2 has 512 triples");
  require_clean(o, r2, nullptr);

  ScanConfig three = two;
  three.type = "B3";
  three.samples = 2000;
  three.stratum_length = 4;
  const ScanReport r3 = run_scan(three);
  o.require(r3.cases == 2000 + 24 * 24 * 24, "rank 3 sample plus stratum");
  require_clean(o, r3, nullptr);
  o.detail = o.ok ? "512 + " + std::to_string(r3.cases) + " triples" : o.detail;
  return o;
}

Outcome conjecture_scans(bool long_run) {
  Outcome o;
  std::size_t total = 0;
  std::vector<std::string> types = {"B3", "G2"};
  if (long_run) types.push_back("A4");
  for (const auto& t : types) {
    require_clean(o, scan("interval", t), &total);
    require_clean(o, scan("snp-restrictions", t), &total);
    require_clean(o, scan("snp-coeffs", t), &total);
  }
  if (long_run) {
    require_clean(o, scan("snp-restrictions", "D4"), &total);
    require_clean(o, scan("snp-coeffs", "D4"), &total);
  }
  if (o.ok) o.detail = std::to_string(total) + " cases" + (long_run ? " (long)" : "");
  return o;
}

Outcome property_suites() {
  Outcome o;
  std::size_t total = 0;
  for (const char* property : {"reduced-word-independence", "upper-triangularity", "coeff-identity", "graham",
                               "defining-identity", "commutativity", "squarefree"}) {
    for (const char* type : {"A2", "B2", "G2", "A3", "B3"}) require_clean(o, scan(property, type), &total);
  }
  require_clean(o, scan("bc-restriction", "B3"), &total);
  require_clean(o, scan("monotonicity", "B2"), &total);
  require_clean(o, scan("arabia", "A2"), &total);
  require_clean(o, scan("arabia", "B3", 200), &total);
  require_clean(o, scan("newton-monotone", "B2"), &total);
  require_clean(o, scan("newton-monotone", "A3", 500), &total);
  if (o.ok) o.detail = std::to_string(total) + " cases";
  return o;
}

std::size_t compare_columns(const Engine& e, ElementId v, Outcome& o) {
  const WeylGroup& g = *e.group;
  const auto naive = oracle::naive_column(g.root_system().cartan(), g.reduced_word(v));
  const auto column = e.table->column(v);
  bool same = column->size() == naive.size();
  for (const auto& [w, value] : *column) {
    const auto it = naive.find(oracle::key(g.element(w).matrix));
    same = same && it != naive.end() && it->second == value;
  }
  if (!same) o.require(false, e.label().to_string() + " column at " + format_element(g, v));
  return column->size();
}

Outcome oracle_equivalence() {
  Outcome o;
  std::size_t entries = 0, pairs = 0;
  const Engine& b3 = engine("B3");
  for (ElementId v = 0; v < b3.group->size(); ++v) entries += compare_columns(b3, v, o);

  const Engine& f4 = engine("F4");
  std::vector<ElementId> short_elements;
  for (ElementId v = 0; v < f4.group->size(); ++v)
    if (f4.group->length(v) <= 10) short_elements.push_back(v);
  std::mt19937_64 rng(kDefaultSeed);
  std::uniform_int_distribution<std::size_t> pick(0, short_elements.size() - 1);
  for (int k = 0; k < 300; ++k) entries += compare_columns(f4, short_elements[pick(rng)], o);

  for (const char* label : {"B2", "A3"}) {
    const Engine& e = engine(label);
    const WeylGroup& g = *e.group;
    for (ElementId w = 0; w < g.size(); ++w)
      for (ElementId v = 0; v < g.size(); ++v) {
        ++pairs;
        const bool fast = g.leq(w, v);
        const bool slow = oracle::subword_leq(g.root_system().cartan(), g.element(w).matrix, g.element(v).matrix);
        const bool direct = bruhat_leq(g.root_system(), g.element(w), g.element(v));
        if (fast != slow || direct != slow) o.require(false, std::string("Bruhat disagreement in ") + label);
      }
  }
  if (o.ok) o.detail = std::to_string(entries) + " column entries, " + std::to_string(pairs) + " Bruhat pairs";
  return o;
}

struct Criterion {
  int id;
  std::string name;
  double limit_s;
  std::function<Outcome()> run;
};

}  // namespace

int main(int argc, char** argv) {
  bool long_run = false;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--long") == 0) {
      long_run = true;
    } else {
      std::cerr << "usage: " << argv[0] << " [--long]\n";
      return 2;
    }
  }

  const std::vector<Criterion> criteria = {
      {1, "B/C example coefficients and power-of-two identity", 5, theorem_example},
      {2, "OG/LG example coefficients and identity", 5, grassmann_example},
      {3, "B3 -> F4 transport example", 60, inclusion_example},
      {4, "B3 diagonal restriction example", 1, restriction_example},
      {5, "pinned counterexamples", 4 * 60,
       [] {
         Outcome o;
         using clock = std::chrono::steady_clock;
         const std::vector<std::pair<const char*, Outcome (*)()>> parts = {
             {"a", monotonicity_counterexample},
             {"b", divisibility_counterexample},
             {"c", folding_search},
             {"d", interval_example}};
         for (const auto& [tag, fn] : parts) {
           const auto t0 = clock::now();
           const Outcome r = fn();
           const double s = std::chrono::duration<double>(clock::now() - t0).count();
           if (!r.ok) o.require(false, std::string(tag) + ": " + r.detail);
           if (s >= 60) o.require(false, std::string(tag) + ": over 60 s");
           std::ostringstream d;
           d << std::fixed << std::setprecision(2) << tag << " " << s << "s";
           if (o.ok) o.detail += (o.detail.empty() ? "" : ", ") + d.str();
         }
         return o;
       }},
      {6, "B/C correspondence scans, rank 2 exhaustive and rank 3 sampled", 600, bc_exhaustive},
      {7, "interval and SNP conjecture scans", 1800, [long_run] { return conjecture_scans(long_run); }},
      {8, "property suites", 1800, property_suites},
      {9, "oracle equivalence", 600, oracle_equivalence},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome r;
    try {
      r = c.run();
    } catch (const std::exception& e) {
      r.ok = false;
      r.detail = std::string("exception: ") + e.what();
    }
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool in_time = s < c.limit_s;
    const bool pass = r.ok && in_time;
    failures += !pass;
    std::cout << "criterion " << c.id << ": " << (pass ? "PASS" : "FAIL") << "  " << c.name << "  [" << std::fixed
              << std::setprecision(2) << s << " s, limit " << std::setprecision(0) << c.limit_s << " s]";
    if (!in_time) std::cout << "  over time limit";
    if (!r.detail.empty()) std::cout << "  " << r.detail;
    std::cout << std::endl;
  }
  std::cout << (failures ? "acceptance: FAIL (" + std::to_string(failures) + " criteria)" : "acceptance: PASS")
            << std::endl;
  return failures ? 1 : 0;
}
