#include "eqs/verify.hpp"

#include "eqs/newton.hpp"
#include "eqs/poly_io.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <exception>
#include <functional>
#include <map>
#include <mutex>
#include <random>
#include <set>
#include <stdexcept>
#include <thread>

namespace eqs {

using nlohmann::json;

nlohmann::json ScanConfig::to_json() const {
  json j{{"property", property},
         {"type", type},
         {"max_length", max_length},
         {"samples", samples},
         {"seed", seed},
         {"jobs", jobs},
         {"fixtures", fixtures}};
  if (!target.empty()) j["target"] = target;
  if (!node_map.empty()) j["node_map"] = node_map;
  if (stratum_length >= 0) j["stratum_length"] = stratum_length;
  if (simple_roots_only) j["simple_roots_only"] = true;
  return j;
}

bool ScanReport::pass() const {
  return counterexamples.empty() &&
         std::all_of(fixtures.begin(), fixtures.end(), [](const FixtureResult& f) { return f.reproduced; });
}

nlohmann::json ScanReport::to_json(bool with_timing) const {
  json fx = json::array();
  for (const auto& f : fixtures) fx.push_back({{"name", f.name}, {"reproduced", f.reproduced}, {"detail", f.detail}});
  json j{{"property", property},
         {"config", config.to_json()},
         {"cases", cases},
         {"counterexamples", counterexamples},
         {"fixtures", fx},
         {"verdict", pass() ? "pass" : "fail"}};
  if (with_timing) j["elapsed_ms"] = elapsed_ms;
  return j;
}

const Engine& shared_engine(const TypeLabel& label) {
  static std::mutex mutex;
  static std::map<TypeLabel, std::unique_ptr<Engine>> engines;
  std::lock_guard lock(mutex);
  auto& slot = engines[label];
  if (!slot) slot = std::make_unique<Engine>(Engine::create(label));
  return *slot;
}

std::vector<Word> reduced_words(const WeylGroup& g, ElementId w, std::size_t cap) {
  std::vector<Word> out;
  Word suffix;
  // Peel right descents; the letters come off in reverse.
  std::function<void(ElementId)> walk = [&](ElementId x) {
    if (out.size() >= cap) return;
    if (x == g.identity()) {
      out.emplace_back(suffix.rbegin(), suffix.rend());
      return;
    }
    for (int i = 1; i <= g.rank(); ++i) {
      if (!g.is_right_descent(x, i)) continue;
      suffix.push_back(i);
      walk(g.right(x, i));
      suffix.pop_back();
    }
  };
  walk(w);
  return out;
}

namespace {

using Clock = std::chrono::steady_clock;

struct Partial {
  std::size_t cases = 0;
  std::vector<json> found;
};

// Runs body(i, partial_i) for i in [0, items) on `jobs` threads and merges the
// partials in index order, so the result does not depend on scheduling.
template <class Body>
Partial collect(std::size_t items, unsigned jobs, Body&& body) {
  std::vector<Partial> parts(items);
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= items) return;
      try {
        body(i, parts[i]);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
        next.store(items);
      }
    }
  };
  const unsigned threads = static_cast<unsigned>(std::min<std::size_t>(std::max(1u, jobs), std::max<std::size_t>(items, 1)));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (error) std::rethrow_exception(error);
  Partial merged;
  for (auto& p : parts) {
    merged.cases += p.cases;
    for (auto& f : p.found) merged.found.push_back(std::move(f));
  }
  return merged;
}

class ScanTimer {
 public:
  ScanTimer(ScanReport& report, const ScanConfig& cfg, std::string property)
      : report_(report), start_(Clock::now()) {
    report_.property = std::move(property);
    report_.config = cfg;
    report_.config.property = report_.property;
  }
  ~ScanTimer() {
    report_.elapsed_ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start_).count();
  }
  void absorb(Partial p) {
    report_.cases += p.cases;
    for (auto& f : p.found) report_.counterexamples.push_back(std::move(f));
  }

 private:
  ScanReport& report_;
  Clock::time_point start_;
};

const Engine& engine_of(const ScanConfig& cfg) {
  if (cfg.type.empty()) throw std::invalid_argument("scan needs a type");
  return shared_engine(TypeLabel::parse(cfg.type));
}

std::vector<ElementId> range_of(const WeylGroup& g, int max_length) {
  std::vector<ElementId> out;
  for (std::size_t k = 0; k < g.size(); ++k) {
    const auto id = static_cast<ElementId>(k);
    if (max_length < 0 || g.length(id) <= max_length) out.push_back(id);
  }
  return out;
}

template <std::size_t N>
std::vector<std::array<ElementId, N>> sample_tuples(const std::vector<ElementId>& range, std::size_t count,
                                                    std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, range.size() - 1);
  std::vector<std::array<ElementId, N>> out(count);
  for (auto& t : out) {
    for (auto& x : t) x = range[pick(rng)];
  }
  return out;
}

// Exhaustive: every tuple over the range; sampled: `samples` random tuples.
template <std::size_t N>
std::vector<std::array<ElementId, N>> tuples_for(const ScanConfig& cfg, const std::vector<ElementId>& range) {
  if (cfg.samples > 0) return sample_tuples<N>(range, cfg.samples, cfg.seed);
  std::vector<std::array<ElementId, N>> out;
  std::array<std::size_t, N> idx{};
  if (range.empty()) return out;
  for (;;) {
    std::array<ElementId, N> t;
    for (std::size_t k = 0; k < N; ++k) t[k] = range[idx[k]];
    out.push_back(t);
    std::size_t k = N;
    while (k > 0 && ++idx[k - 1] == range.size()) idx[--k] = 0;
    if (k == 0) break;
  }
  return out;
}

std::string show(const Engine& e, const Poly& f) { return format_poly(f, e.glyph()); }

json inputs_of(const WeylGroup& g, std::initializer_list<std::pair<const char*, ElementId>> named) {
  json j = json::object();
  for (const auto& [name, id] : named) j[name] = format_element(g, id);
  return j;
}

json finding(json inputs, std::string lhs, std::string rhs) {
  return json{{"inputs", std::move(inputs)}, {"lhs", std::move(lhs)}, {"rhs", std::move(rhs)}};
}

std::string format_point(const LatticePoint& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(p[i]);
  }
  return s + ")";
}

std::vector<LatticePoint> support_points(const Poly& f) {
  std::vector<LatticePoint> out;
  for (const auto& [m, c] : f.terms()) out.push_back(m.exponents(f.rank()));
  return out;
}

void add_fixture(ScanReport& r, const ScanConfig& cfg, FixtureResult (*fixture)()) {
  if (cfg.fixtures) r.fixtures.push_back(fixture());
}

int rank_for_bc(const ScanConfig& cfg) {
  const TypeLabel label = TypeLabel::parse(cfg.type);
  if (label.family() != Family::B && label.family() != Family::C) {
    throw std::invalid_argument("this scan takes a type B or C label (its rank is used)");
  }
  return label.rank();
}

}  // namespace

ScanReport scan_conjecture_interval(const ScanConfig& cfg) {
  ScanReport r;
  {
    ScanTimer timer(r, cfg, "interval");
    const Engine& e = engine_of(cfg);
    const WeylGroup& g = *e.group;
    const CoeffSolver& solver = *e.solver;
    const auto range = range_of(g, cfg.max_length);
    const auto pairs = tuples_for<2>(cfg, range);
    timer.absorb(collect(pairs.size(), cfg.jobs, [&](std::size_t k, Partial& out) {
      const auto [u, v] = pairs[k];
      const auto ex = solver.expansion(u, v);
      for (std::size_t j = 0; j < ex->support.size(); ++j) {
        const ElementId w = ex->support[j];
        if (ex->values[j].is_zero() || (cfg.max_length >= 0 && g.length(w) > cfg.max_length)) continue;
        ++out.cases;
        for (int i = 1; i <= g.rank(); ++i) {
          const ElementId sv = g.left(i, v);
          if (g.length(sv) > g.length(v) && g.leq(sv, w) && solver.value(u, sv, w).is_zero()) {
            json in = inputs_of(g, {{"u", u}, {"v", v}, {"w", w}});
            in["part"] = "I";
            in["alpha"] = i;
            out.found.push_back(finding(std::move(in), "0", "nonzero"));
          }
        }
        if (g.length(w) < g.length(u) + g.length(v)) {
          bool witnessed = false;
          for (int i = 1; i <= g.rank() && !witnessed; ++i) {
            if (g.is_left_descent(i, v) && !solver.value(u, g.left(i, v), w).is_zero()) witnessed = true;
          }
          if (!witnessed) {
            json in = inputs_of(g, {{"u", u}, {"v", v}, {"w", w}});
            in["part"] = "II";
            out.found.push_back(finding(std::move(in), "no descent witness", "some descent witness"));
          }
        }
      }
    }));
    add_fixture(r, cfg, fixture_interval_existential);
    add_fixture(r, cfg, fixture_interval_righthand);
  }
  return r;
}

ScanReport scan_snp_restrictions(const ScanConfig& cfg) {
  ScanReport r;
  {
    ScanTimer timer(r, cfg, "snp-restrictions");
    const Engine& e = engine_of(cfg);
    const WeylGroup& g = *e.group;
    const auto range = range_of(g, cfg.max_length);
    const auto pairs = tuples_for<2>(cfg, range);
    timer.absorb(collect(pairs.size(), cfg.jobs, [&](std::size_t k, Partial& out) {
      const auto [w, v] = pairs[k];
      if (!g.leq(w, v)) return;
      ++out.cases;
      const Poly f = e.table->restrict(w, v);
      const SnpResult s = snp_test(f);
      if (!s.saturated) {
        json in = inputs_of(g, {{"w", w}, {"v", v}});
        in["witness"] = format_point(*s.witness);
        out.found.push_back(finding(std::move(in), show(e, f), "saturated"));
      }
    }));
  }
  return r;
}

ScanReport scan_snp_coefficients(const ScanConfig& cfg) {
  ScanReport r;
  {
    ScanTimer timer(r, cfg, "snp-coeffs");
    const Engine& e = engine_of(cfg);
    const WeylGroup& g = *e.group;
    const auto range = range_of(g, cfg.max_length);
    auto pairs = tuples_for<2>(cfg, range);
    // The product is commutative, so an exhaustive scan needs each unordered pair once.
    if (cfg.samples == 0) {
      std::erase_if(pairs, [](const auto& p) { return p[0] > p[1]; });
    }
    timer.absorb(collect(pairs.size(), cfg.jobs, [&](std::size_t k, Partial& out) {
      const auto [u, v] = pairs[k];
      const auto ex = e.solver->expansion(u, v);
      for (std::size_t j = 0; j < ex->support.size(); ++j) {
        const ElementId w = ex->support[j];
        if (ex->values[j].is_zero() || (cfg.max_length >= 0 && g.length(w) > cfg.max_length)) continue;
        ++out.cases;
        const SnpResult s = snp_test(ex->values[j]);
        if (!s.saturated) {
          json in = inputs_of(g, {{"u", u}, {"v", v}, {"w", w}});
          in["witness"] = format_point(*s.witness);
          out.found.push_back(finding(std::move(in), show(e, ex->values[j]), "saturated"));
        }
      }
    }));
  }
  return r;
}

ScanReport scan_monotonicity(const ScanConfig& cfg) {
  ScanReport r;
  {
    ScanTimer timer(r, cfg, "monotonicity");
    const Engine& e = engine_of(cfg);
    const WeylGroup& g = *e.group;
    const auto range = range_of(g, cfg.max_length);
    timer.absorb(collect(range.size(), cfg.jobs, [&](std::size_t k, Partial& out) {
      const ElementId v = range[k];
      for (ElementId v2 : range) {
        if (g.length(v2) != g.length(v) + 1 || !g.leq(v, v2)) continue;
        for (ElementId w : g.interval_below(v)) {
          ++out.cases;
          const MonotonicityReport m = check_monotonicity(*e.solver, w, v, v2);
          if (!m.ok()) {
            json in = inputs_of(g, {{"w", w}, {"v", v}, {"v'", v2}});
            in["exchange_index"] = m.exchange_index;
            out.found.push_back(finding(std::move(in), show(e, m.difference),
                                        m.nonneg ? "r_k * " + show(e, m.coefficient) : "nonnegative"));
          }
        }
      }
    }));
    add_fixture(r, cfg, fixture_monotonicity_a5);
  }
  return r;
}

ScanReport scan_arabia(const ScanConfig& cfg) {
  ScanReport r;
  {
    ScanTimer timer(r, cfg, "arabia");
    const Engine& e = engine_of(cfg);
    const WeylGroup& g = *e.group;
    const RootSystem& rs = g.root_system();
    std::vector<Root> roots;
    for (const Root& a : rs.positive_roots()) {
      if (!cfg.simple_roots_only || a.sum() == 1) roots.push_back(a);
    }
    const auto range = range_of(g, cfg.max_length);
    std::vector<std::array<std::size_t, 3>> triples;  // (w, v, root index)
    if (cfg.samples > 0) {
      std::mt19937_64 rng(cfg.seed);
      std::uniform_int_distribution<std::size_t> pick(0, range.size() - 1);
      std::uniform_int_distribution<std::size_t> pick_root(0, roots.size() - 1);
      for (std::size_t s = 0; s < cfg.samples; ++s) {
        const std::size_t w = pick(rng);
        const std::size_t v = pick(rng);
        triples.push_back({w, v, pick_root(rng)});
      }
    } else {
      for (std::size_t w = 0; w < range.size(); ++w)
        for (std::size_t v = 0; v < range.size(); ++v)
          for (std::size_t a = 0; a < roots.size(); ++a) triples.push_back({w, v, a});
    }
    timer.absorb(collect(triples.size(), cfg.jobs, [&](std::size_t k, Partial& out) {
      const ElementId w = range[triples[k][0]];
      const ElementId v = range[triples[k][1]];
      const Root& alpha = roots[triples[k][2]];
      ++out.cases;
      const ArabiaReport a = check_arabia(*e.table, w, v, alpha);
      if (!a.divisible) {
        json in = inputs_of(g, {{"w", w}, {"v", v}});
        in["alpha"] = std::vector<int>(alpha.data(), alpha.data() + alpha.size());
        out.found.push_back(finding(std::move(in), show(e, a.difference), "divisible by alpha"));
      }
    }));
    add_fixture(r, cfg, fixture_divisibility_a3);
  }
  return r;
}

ScanReport scan_folding(const ScanConfig& cfg) {
  ScanReport r;
  {
    ScanTimer timer(r, cfg, "folding");
    const Engine& d4 = shared_engine(TypeLabel(Family::D, 4));
    const Engine& b3 = shared_engine(TypeLabel(Family::B, 3));
    const VariableMap fold = folding_substitution(d4.label(), b3.label());
    const WeylGroup& gb = *b3.group;
    const ElementId target = gb.from_word({2, 1, 2, 3});
    const auto target_support = support_points(b3.table->diagonal(target));
    const WeylGroup& gd = *d4.group;
    timer.absorb(collect(gd.size(), cfg.jobs, [&](std::size_t k, Partial& out) {
      const auto v = static_cast<ElementId>(k);
      ++out.cases;
      const Poly folded = substitute(d4.table->diagonal(v), fold);
      if (support_points(folded) == target_support) {
        out.found.push_back(finding(inputs_of(gd, {{"v", v}}), show(b3, folded), "different support"));
      }
    }));
    add_fixture(r, cfg, fixture_folding_b2_d3);
  }
  return r;
}

ScanReport scan_newton_monotone(const ScanConfig& cfg) {
  ScanReport r;
  {
    ScanTimer timer(r, cfg, "newton-monotone");
    const Engine& e = engine_of(cfg);
    const WeylGroup& g = *e.group;
    const auto range = range_of(g, cfg.max_length);
    std::vector<std::array<ElementId, 3>> chains;  // (w, v, v')
    if (cfg.samples > 0) {
      std::mt19937_64 rng(cfg.seed);
      auto pick_from = [&rng](const std::vector<ElementId>& xs) {
        return xs[std::uniform_int_distribution<std::size_t>(0, xs.size() - 1)(rng)];
      };
      for (std::size_t s = 0; s < cfg.samples; ++s) {
        const ElementId v2 = pick_from(range);
        const ElementId v = pick_from(g.interval_below(v2));
        chains.push_back({pick_from(g.interval_below(v)), v, v2});
      }
    } else {
      for (ElementId v2 : range)
        for (ElementId v : g.interval_below(v2))
          for (ElementId w : g.interval_below(v)) chains.push_back({w, v, v2});
    }
    timer.absorb(collect(chains.size(), cfg.jobs, [&](std::size_t k, Partial& out) {
      const auto [w, v, v2] = chains[k];
      ++out.cases;
      const auto small = support_points(e.table->restrict(w, v));
      const auto large = support_points(e.table->restrict(w, v2));
      for (const auto& p : small) {
        if (!in_convex_hull(large, p)) {
          json in = inputs_of(g, {{"w", w}, {"v", v}, {"v'", v2}});
          in["point"] = format_point(p);
          out.found.push_back(finding(std::move(in), "outside", "inside"));
          break;
        }
      }
    }));
  }
  return r;
}

ScanReport scan_bc(const ScanConfig& cfg) {
  ScanReport r;
  {
    ScanTimer timer(r, cfg, "bc");
    const int n = rank_for_bc(cfg);
    const Engine& b = shared_engine(TypeLabel(Family::B, n));
    const Engine& c = shared_engine(TypeLabel(Family::C, n));
    const WeylGroup& gb = *b.group;
    std::vector<std::array<ElementId, 3>> triples = tuples_for<3>(cfg, range_of(gb, cfg.max_length));
    if (cfg.stratum_length >= 0) {
      const auto stratum = range_of(gb, cfg.stratum_length);
      ScanConfig all = cfg;
      all.samples = 0;
      const auto extra = tuples_for<3>(all, stratum);
      triples.insert(triples.end(), extra.begin(), extra.end());
    }
    std::vector<SignedPermutation> one_line(gb.size());
    for (std::size_t k = 0; k < gb.size(); ++k) one_line[k] = one_line_of(gb, static_cast<ElementId>(k));
    timer.absorb(collect(triples.size(), cfg.jobs, [&](std::size_t k, Partial& out) {
      const auto [u, v, w] = triples[k];
      ++out.cases;
      const BcReport rep = bc_correspondence(b, c, one_line[u], one_line[v], one_line[w]);
      if (!rep.ok()) {
        json in = inputs_of(gb, {{"u", u}, {"v", v}, {"w", w}});
        in["exponent"] = rep.identity.exponent;
        in["integral"] = rep.integral;
        in["support_equal"] = rep.support_equal;
        in["degree_matching"] = rep.degree_matching;
        out.found.push_back(finding(std::move(in), show(b, rep.identity.lhs), show(b, rep.identity.rhs)));
      }
    }));
  }
  return r;
}

ScanReport scan_oglg(const ScanConfig& cfg) {
  ScanReport r;
  {
    ScanTimer timer(r, cfg, "oglg");
    const int n = rank_for_bc(cfg);
    const Engine& b = shared_engine(TypeLabel(Family::B, n));
    const Engine& c = shared_engine(TypeLabel(Family::C, n));
    const auto parts = strict_partitions(n);
    const std::size_t m = parts.size();
    timer.absorb(collect(m * m * m, cfg.jobs, [&](std::size_t k, Partial& out) {
      const auto& lam = parts[k / (m * m)];
      const auto& mu = parts[(k / m) % m];
      const auto& nu = parts[k % m];
      ++out.cases;
      const BcReport rep = oglg_correspondence(b, c, lam, mu, nu);
      if (!rep.ok()) {
        json in{{"lambda", lam.to_string()}, {"mu", mu.to_string()}, {"nu", nu.to_string()},
                {"exponent", rep.identity.exponent}};
        out.found.push_back(finding(std::move(in), show(b, rep.identity.lhs), show(b, rep.identity.rhs)));
      }
    }));
  }
  return r;
}

ScanReport scan_transport(const ScanConfig& cfg) {
  ScanReport r;
  {
    ScanTimer timer(r, cfg, "transport");
    if (cfg.target.empty() || cfg.node_map.empty()) throw std::invalid_argument("transport needs a target and a node map");
    const DynkinInclusion inc(TypeLabel::parse(cfg.type), TypeLabel::parse(cfg.target),
                              DynkinInclusion::parse_node_map(cfg.node_map));
    const Engine& src = shared_engine(inc.source());
    const Engine& dst = shared_engine(inc.target());
    const WeylGroup& g = *src.group;
    const auto range = range_of(g, cfg.max_length);
    const auto triples = tuples_for<3>(cfg, range);
    timer.absorb(collect(triples.size(), cfg.jobs, [&](std::size_t k, Partial& out) {
      const auto [u, v, w] = triples[k];
      ++out.cases;
      const IdentityReport rep = transport_coeff_check(inc, src, dst, u, v, w);
      if (!rep.equal) {
        out.found.push_back(finding(inputs_of(g, {{"u", u}, {"v", v}, {"w", w}}), show(dst, rep.lhs), show(dst, rep.rhs)));
      }
    }));
    const auto pairs = tuples_for<2>(cfg, range);
    timer.absorb(collect(pairs.size(), cfg.jobs, [&](std::size_t k, Partial& out) {
      const auto [w, v] = pairs[k];
      ++out.cases;
      const TransportReport rep = transport_restriction_check(inc, *src.table, *dst.table, w, v);
      if (!rep.ok()) {
        json in = inputs_of(g, {{"w", w}, {"v", v}});
        in["vanishing_failures"] = rep.vanishing_failures;
        out.found.push_back(finding(std::move(in), show(dst, rep.identity.lhs), show(dst, rep.identity.rhs)));
      }
    }));
  }
  return r;
}

ScanReport scan_reduced_word_independence(const ScanConfig& cfg) {
  ScanReport r;
  {
    ScanTimer timer(r, cfg, "reduced-word-independence");
    const Engine& e = engine_of(cfg);
    const WeylGroup& g = *e.group;
    const auto range = range_of(g, cfg.max_length);
    timer.absorb(collect(range.size(), cfg.jobs, [&](std::size_t k, Partial& out) {
      const ElementId v = range[k];
      std::vector<Word> words;
      if (cfg.samples > 0) {
        // Random descent choices, seeded per element.
        std::mt19937_64 rng(cfg.seed + v);
        for (std::size_t s = 0; s < cfg.samples; ++s) {
          Word suffix;
          ElementId x = v;
          while (x != g.identity()) {
            std::vector<int> descents;
            for (int i = 1; i <= g.rank(); ++i)
              if (g.is_right_descent(x, i)) descents.push_back(i);
            const int i = descents[std::uniform_int_distribution<std::size_t>(0, descents.size() - 1)(rng)];
            suffix.push_back(i);
            x = g.right(x, i);
          }
          words.emplace_back(suffix.rbegin(), suffix.rend());
        }
      } else {
        words = reduced_words(g, v);
      }
      const auto canonical = e.table->column(v);
      for (const Word& word : words) {
        ++out.cases;
        if (restriction_column(g, word) != *canonical) {
          json in = inputs_of(g, {{"v", v}});
          in["word"] = format_word(word);
          out.found.push_back(finding(std::move(in), "column differs", "canonical column"));
        }
      }
    }));
  }
  return r;
}

ScanReport scan_upper_triangularity(const ScanConfig& cfg) {
  ScanReport r;
  {
    ScanTimer timer(r, cfg, "upper-triangularity");
    const Engine& e = engine_of(cfg);
    const WeylGroup& g = *e.group;
    const auto pairs = tuples_for<2>(cfg, range_of(g, cfg.max_length));
    timer.absorb(collect(pairs.size(), cfg.jobs, [&](std::size_t k, Partial& out) {
      const auto [w, v] = pairs[k];
      ++out.cases;
      const Poly f = e.table->restrict(w, v);
      const PolyProps props = poly_props(f);
      const bool leq = nonvanishing_restriction(g, w, v);
      const bool ok = (f.is_zero() != leq) && props.nonneg && (f.is_zero() || (props.homogeneous && props.total_degree == g.length(w)));
      if (!ok) {
        json in = inputs_of(g, {{"w", w}, {"v", v}});
        in["bruhat_leq"] = leq;
        out.found.push_back(finding(std::move(in), show(e, f), leq ? "nonzero, nonnegative, degree l(w)" : "0"));
      }
    }));
  }
  return r;
}

ScanReport scan_coeff_identity(const ScanConfig& cfg) {
  ScanReport r;
  {
    ScanTimer timer(r, cfg, "coeff-identity");
    const Engine& e = engine_of(cfg);
    const WeylGroup& g = *e.group;
    const auto pairs = tuples_for<2>(cfg, range_of(g, cfg.max_length));
    timer.absorb(collect(pairs.size(), cfg.jobs, [&](std::size_t k, Partial& out) {
      const auto [v, w] = pairs[k];
      ++out.cases;
      const IdentityReport rep = coeff_identity_check(*e.solver, v, w);
      if (!rep.equal) out.found.push_back(finding(inputs_of(g, {{"v", v}, {"w", w}}), show(e, rep.lhs), show(e, rep.rhs)));
    }));
  }
  return r;
}

ScanReport scan_graham(const ScanConfig& cfg) {
  ScanReport r;
  {
    ScanTimer timer(r, cfg, "graham");
    const Engine& e = engine_of(cfg);
    const WeylGroup& g = *e.group;
    const auto pairs = tuples_for<2>(cfg, range_of(g, cfg.max_length));
    timer.absorb(collect(pairs.size(), cfg.jobs, [&](std::size_t k, Partial& out) {
      const auto [u, v] = pairs[k];
      std::shared_ptr<const Expansion> ex;
      try {
        ex = e.solver->expansion(u, v);
      } catch (const std::domain_error& err) {
        ++out.cases;
        out.found.push_back(finding(inputs_of(g, {{"u", u}, {"v", v}}), err.what(), "exact division"));
        return;
      }
      for (std::size_t j = 0; j < ex->support.size(); ++j) {
        const ElementId w = ex->support[j];
        const Poly& c = ex->values[j];
        ++out.cases;
        const bool top = g.length(w) == g.length(u) + g.length(v);
        const bool ok = ex->meta[j].positive && ex->meta[j].degree_ok && (!top || c.is_constant()) &&
                        g.leq(u, w) && g.leq(v, w);
        if (!ok) {
          out.found.push_back(finding(inputs_of(g, {{"u", u}, {"v", v}, {"w", w}}), show(e, c),
                                      "nonnegative, homogeneous of degree l(u)+l(v)-l(w)"));
        }
      }
    }));
  }
  return r;
}

ScanReport scan_defining_identity(const ScanConfig& cfg) {
  ScanReport r;
  {
    ScanTimer timer(r, cfg, "defining-identity");
    const Engine& e = engine_of(cfg);
    const WeylGroup& g = *e.group;
    const auto pairs = tuples_for<2>(cfg, range_of(g, cfg.max_length));
    timer.absorb(collect(pairs.size(), cfg.jobs, [&](std::size_t k, Partial& out) {
      const auto [u, v] = pairs[k];
      for (std::size_t x = 0; x < g.size(); ++x) {
        ++out.cases;
        const IdentityReport rep = defining_identity_check(*e.solver, u, v, static_cast<ElementId>(x));
        if (!rep.equal) {
          out.found.push_back(finding(inputs_of(g, {{"u", u}, {"v", v}, {"x", static_cast<ElementId>(x)}}),
                                      show(e, rep.lhs), show(e, rep.rhs)));
        }
      }
    }));
  }
  return r;
}

ScanReport scan_commutativity(const ScanConfig& cfg) {
  ScanReport r;
  {
    ScanTimer timer(r, cfg, "commutativity");
    const Engine& e = engine_of(cfg);
    const WeylGroup& g = *e.group;
    auto pairs = tuples_for<2>(cfg, range_of(g, cfg.max_length));
    std::erase_if(pairs, [](const auto& p) { return p[0] >= p[1]; });
    timer.absorb(collect(pairs.size(), cfg.jobs, [&](std::size_t k, Partial& out) {
      const auto [u, v] = pairs[k];
      ++out.cases;
      const Expansion a = e.solver->solve(u, v);
      const Expansion b = e.solver->solve(v, u);
      if (a.support != b.support || a.values != b.values) {
        out.found.push_back(finding(inputs_of(g, {{"u", u}, {"v", v}}), "xi_u xi_v", "xi_v xi_u"));
      }
    }));
  }
  return r;
}

ScanReport scan_squarefree(const ScanConfig& cfg) {
  ScanReport r;
  {
    ScanTimer timer(r, cfg, "squarefree");
    const Engine& e = engine_of(cfg);
    const WeylGroup& g = *e.group;
    const auto pairs = tuples_for<2>(cfg, range_of(g, cfg.max_length));
    timer.absorb(collect(pairs.size(), cfg.jobs, [&](std::size_t k, Partial& out) {
      const auto [w, v] = pairs[k];
      ++out.cases;
      const SquarefreeReport rep = squarefree_summand_audit(*e.table, w, v);
      if (!rep.all_squarefree || !rep.sum_matches) {
        json in = inputs_of(g, {{"w", w}, {"v", v}});
        in["summands"] = rep.summands;
        out.found.push_back(finding(std::move(in), rep.all_squarefree ? "sum differs" : "repeated root",
                                    "square-free summands"));
      }
    }));
  }
  return r;
}

ScanReport scan_bc_restriction(const ScanConfig& cfg) {
  ScanReport r;
  {
    ScanTimer timer(r, cfg, "bc-restriction");
    const int n = rank_for_bc(cfg);
    const Engine& b = shared_engine(TypeLabel(Family::B, n));
    const Engine& c = shared_engine(TypeLabel(Family::C, n));
    const WeylGroup& gb = *b.group;
    const WeylGroup& gc = *c.group;
    std::vector<ElementId> to_c(gb.size());
    std::vector<int> signs(gb.size());
    for (std::size_t k = 0; k < gb.size(); ++k) {
      const SignedPermutation w = one_line_of(gb, static_cast<ElementId>(k));
      to_c[k] = id_from_one_line(gc, w);
      signs[k] = sign_count(w);
    }
    const VariableMap bar = VariableMap::bar(n);
    const auto pairs = tuples_for<2>(cfg, range_of(gb, cfg.max_length));
    timer.absorb(collect(pairs.size(), cfg.jobs, [&](std::size_t k, Partial& out) {
      const auto [w, x] = pairs[k];
      ++out.cases;
      const Poly lhs = substitute(c.table->restrict(to_c[w], to_c[x]), bar);
      const Poly rhs = scale_pow2(b.table->restrict(w, x), signs[w]);
      if (lhs != rhs) out.found.push_back(finding(inputs_of(gb, {{"w", w}, {"x", x}}), show(b, lhs), show(b, rhs)));
    }));
  }
  return r;
}

namespace {

json values_json(const std::vector<std::pair<std::string, std::string>>& kv) {
  json j = json::object();
  for (const auto& [k, v] : kv) j[k] = v;
  return j;
}

}  // namespace

FixtureResult fixture_interval_existential() {
  const Engine& e = shared_engine(TypeLabel(Family::B, 3));
  const WeylGroup& g = *e.group;
  const ElementId u = g.from_word({2, 3});
  const ElementId v = g.from_word({1, 3});
  const ElementId w = g.from_word({2, 1, 3});
  const Poly c0 = e.solver->value(u, v, w);
  const Poly c1 = e.solver->value(u, g.left(1, v), w);  // s1(s1 s3) = s3
  const Poly c3 = e.solver->value(u, g.left(3, v), w);  // s3(s1 s3) = s1
  FixtureResult f{"b3-interval-existential", false, {}};
  f.reproduced = c0 == parse_poly("b2 + b3", 3) && c1.is_zero() && c3 == Poly::one(3);
  f.detail = values_json({{"C(s2s3, s1s3; s2s1s3)", show(e, c0)},
                          {"C(s2s3, s3; s2s1s3)", show(e, c1)},
                          {"C(s2s3, s1; s2s1s3)", show(e, c3)}});
  return f;
}

FixtureResult fixture_interval_righthand() {
  const Engine& e = shared_engine(TypeLabel(Family::A, 2));
  const WeylGroup& g = *e.group;
  const ElementId u = g.from_word({1, 2});
  const ElementId w = g.from_word({1, 2, 1});
  const ElementId s1 = g.from_word({1});
  const ElementId s2s1 = g.from_word({2, 1});
  const Poly i_before = e.solver->value(u, s1, w);
  const Poly i_after = e.solver->value(u, g.right(s1, 2), w);
  const Poly ii_before = e.solver->value(u, s2s1, w);
  const Poly ii_after = e.solver->value(u, g.right(s2s1, 1), w);
  FixtureResult f{"a2-no-righthand-version", false, {}};
  f.reproduced = i_before == Poly::one(2) && i_after.is_zero() && ii_before == parse_poly("a1 + a2", 2) &&
                 ii_after.is_zero();
  f.detail = values_json({{"C(s1s2, s1; s1s2s1)", show(e, i_before)},
                          {"C(s1s2, s1s2; s1s2s1)", show(e, i_after)},
                          {"C(s1s2, s2s1; s1s2s1)", show(e, ii_before)},
                          {"C(s1s2, s2; s1s2s1)", show(e, ii_after)}});
  return f;
}

FixtureResult fixture_monotonicity_a5() {
  const Engine& e = shared_engine(TypeLabel(Family::A, 5));
  const WeylGroup& g = *e.group;
  const ElementId u = parse_element(g, "351624");
  const ElementId v = parse_element(g, "214356");
  const ElementId w = parse_element(g, "631524");
  const ElementId u2 = g.right(u, 3);
  const ElementId w2 = g.right(w, 3);
  const Poly before = e.solver->value(u, v, w);
  const Poly after = e.solver->value(u2, v, w2);
  FixtureResult f{"a5-coefficient-monotonicity", false, {}};
  f.reproduced = format_element(g, u2) == format_one_line(parse_one_line("356124")) &&
                 format_element(g, w2) == format_one_line(parse_one_line("635124")) && before == Poly::one(5) &&
                 after.is_zero();
  f.detail = values_json({{"u'", format_element(g, u2)},
                          {"w'", format_element(g, w2)},
                          {"c(u, v; w)", show(e, before)},
                          {"c(u', v; w')", show(e, after)}});
  return f;
}

FixtureResult fixture_divisibility_a3() {
  const Engine& e = shared_engine(TypeLabel(Family::A, 3));
  const WeylGroup& g = *e.group;
  const ElementId u = g.from_word({3});
  const ElementId v = g.from_word({2, 3, 1});
  const ElementId w = v;
  const Poly before = e.solver->value(u, v, w);
  const Poly after = e.solver->value(g.left(1, u), v, g.left(1, w));
  const Poly diff = after - before;
  const Divisibility d = divisibility_test(diff, LinearForm(std::vector<int>{1, 0, 0}));
  FixtureResult f{"a3-coefficient-divisibility", false, {}};
  f.reproduced = before == parse_poly("a2 + a3", 3) && after == parse_poly("a1 + a2", 3) &&
                 diff == parse_poly("a1 - a3", 3) && !poly_props(diff).nonneg && !d.divisible;
  f.detail = values_json({{"C(u, v; w)", show(e, before)},
                          {"C(s1 u, v; s1 w)", show(e, after)},
                          {"difference", show(e, diff)},
                          {"divisible by a1", d.divisible ? "yes" : "no"}});
  return f;
}

FixtureResult fixture_folding_b2_d3() {
  const Engine& b2 = shared_engine(TypeLabel(Family::B, 2));
  const Engine& d3 = shared_engine(TypeLabel(Family::D, 3));
  const Poly xb = b2.table->diagonal(b2.group->from_word({1, 2, 1}));
  const Poly xd = d3.table->diagonal(d3.group->from_word({1, 3, 2}));
  const Poly folded = substitute(xd, folding_substitution(d3.label(), b2.label()));
  FixtureResult f{"b2-d3-folding", false, {}};
  f.reproduced = xb == parse_poly("b1", 2) * parse_poly("2*b1 + b2", 2) * parse_poly("b1 + b2", 2) &&
                 xd == parse_poly("d1", 3) * parse_poly("d1 + d2 + d3", 3) * parse_poly("d1 + d3", 3) &&
                 folded == xb;
  f.detail = values_json({{"B2 at s1s2s1", show(b2, xb)}, {"D3 at s1s3s2", show(d3, xd)}, {"folded", show(b2, folded)}});
  return f;
}

FixtureResult fixture_folding_d4_search() {
  ScanConfig cfg;
  cfg.fixtures = false;
  const ScanReport r = scan_folding(cfg);
  FixtureResult f{"d4-folding-search", r.cases == 192 && r.counterexamples.empty(), {}};
  f.detail = json{{"elements", r.cases}, {"matches", r.counterexamples.size()}};
  return f;
}

const std::vector<std::string>& scan_properties() {
  static const std::vector<std::string> ids = {
      "interval",       "snp-restrictions",  "snp-coeffs",          "monotonicity",   "arabia",
      "folding",        "newton-monotone",   "bc",                  "oglg",           "transport",
      "reduced-word-independence", "upper-triangularity", "coeff-identity", "graham", "defining-identity",
      "commutativity",  "squarefree",        "bc-restriction"};
  return ids;
}

ScanReport run_scan(const ScanConfig& cfg) {
  static const std::map<std::string, ScanReport (*)(const ScanConfig&)> table = {
      {"interval", scan_conjecture_interval},
      {"snp-restrictions", scan_snp_restrictions},
      {"snp-coeffs", scan_snp_coefficients},
      {"monotonicity", scan_monotonicity},
      {"arabia", scan_arabia},
      {"folding", scan_folding},
      {"newton-monotone", scan_newton_monotone},
      {"bc", scan_bc},
      {"oglg", scan_oglg},
      {"transport", scan_transport},
      {"reduced-word-independence", scan_reduced_word_independence},
      {"upper-triangularity", scan_upper_triangularity},
      {"coeff-identity", scan_coeff_identity},
      {"graham", scan_graham},
      {"defining-identity", scan_defining_identity},
      {"commutativity", scan_commutativity},
      {"squarefree", scan_squarefree},
      {"bc-restriction", scan_bc_restriction},
  };
  auto it = table.find(cfg.property);
  if (it == table.end()) throw std::invalid_argument("unknown property '" + cfg.property + "'");
  return it->second(cfg);
}

}  // namespace eqs
