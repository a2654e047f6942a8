#pragma once

#include "eqs/correspondence.hpp"
#include "eqs/restriction_checks.hpp"

#include <json.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace eqs {

inline constexpr std::uint64_t kDefaultSeed = 20180501;

struct ScanConfig {
  std::string property;
  std::string type;             // e.g. "B3"; for bc/oglg only the rank matters
  std::string target;           // transport: target type
  std::string node_map;         // transport: "1:2,2:3"
  int max_length = -1;          // restrict to elements of length <= max_length; -1 = full group
  std::size_t samples = 0;      // 0 = exhaustive, else this many seed-pinned random cases
  int stratum_length = -1;      // bc: additionally every triple with all lengths <= this
  std::uint64_t seed = kDefaultSeed;
  unsigned jobs = 1;
  bool simple_roots_only = false;  // arabia
  bool fixtures = true;            // run the pinned counterexample reproductions

  nlohmann::json to_json() const;
};

// A pinned reproduction of a known value or counterexample.
struct FixtureResult {
  std::string name;
  bool reproduced = false;
  nlohmann::json detail;
};

struct ScanReport {
  std::string property;
  ScanConfig config;
  std::size_t cases = 0;
  std::vector<nlohmann::json> counterexamples;  // each {"inputs", "lhs", "rhs", ...}
  std::vector<FixtureResult> fixtures;
  std::int64_t elapsed_ms = 0;

  bool pass() const;
  // Timing is the only nondeterministic field; leave it out to compare runs.
  nlohmann::json to_json(bool with_timing = true) const;
};

// Property ids accepted by run_scan.
const std::vector<std::string>& scan_properties();

// Throws std::invalid_argument for an unknown property or bad config.
ScanReport run_scan(const ScanConfig& cfg);

// Engines are built once per type and shared for the life of the process.
const Engine& shared_engine(const TypeLabel& label);

ScanReport scan_conjecture_interval(const ScanConfig& cfg);
ScanReport scan_snp_restrictions(const ScanConfig& cfg);
ScanReport scan_snp_coefficients(const ScanConfig& cfg);
ScanReport scan_monotonicity(const ScanConfig& cfg);
ScanReport scan_arabia(const ScanConfig& cfg);
ScanReport scan_folding(const ScanConfig& cfg);
ScanReport scan_newton_monotone(const ScanConfig& cfg);
ScanReport scan_bc(const ScanConfig& cfg);
ScanReport scan_oglg(const ScanConfig& cfg);
ScanReport scan_transport(const ScanConfig& cfg);

// Property suites over one type.
ScanReport scan_reduced_word_independence(const ScanConfig& cfg);
ScanReport scan_upper_triangularity(const ScanConfig& cfg);
ScanReport scan_coeff_identity(const ScanConfig& cfg);
ScanReport scan_graham(const ScanConfig& cfg);
ScanReport scan_defining_identity(const ScanConfig& cfg);
ScanReport scan_commutativity(const ScanConfig& cfg);
ScanReport scan_squarefree(const ScanConfig& cfg);
ScanReport scan_bc_restriction(const ScanConfig& cfg);

// Pinned reproductions.
FixtureResult fixture_interval_existential();  // B3: (b2+b3, 0, 1)
FixtureResult fixture_interval_righthand();    // A2: no right-hand version of (I), (II)
FixtureResult fixture_monotonicity_a5();       // c = 1 then c = 0
FixtureResult fixture_divisibility_a3();       // difference a1 - a3
FixtureResult fixture_folding_b2_d3();         // diagonal restrictions agree after folding
FixtureResult fixture_folding_d4_search();     // no diagonal restriction in D4 folds onto the B3 support

// All reduced words of w, stopping after `cap` words.
std::vector<Word> reduced_words(const WeylGroup& g, ElementId w, std::size_t cap = 1000);

}  // namespace eqs
