#pragma once

#include "ucpoly/bnc.hpp"

#include <array>
#include <string>
#include <vector>

namespace ucpoly {

// ---------------------------------------------------------------------------
// Instance builders for the two applications: single-unit self-scheduling
// against exogenous prices (profit maximization) and fleet commitment under
// load balance, spinning reserve and optional line limits (cost
// minimization).
// ---------------------------------------------------------------------------

/// splitmix64; the documented constants make seeded data portable.
struct SplitMix64 {
  std::uint64_t state;
  explicit SplitMix64(std::uint64_t seed) : state(seed) {}
  std::uint64_t next() {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }
  /// uniform in [lo, hi) with 53-bit resolution
  double uniform(double lo, double hi) {
    return lo + (hi - lo) * (static_cast<double>(next() >> 11) * 0x1.0p-53);
  }
};

/// The eight benchmark generator archetypes (1-based ids in the interface).
std::vector<GeneratorParams> builtin_generators();

/// Price interval per archetype for the self-scheduling experiments.
std::pair<double, double> price_range(int archetype);

/// 24-hour system load as a fraction of total fleet capacity.
std::array<double, 24> builtin_load_fractions();

/// Benchmark fleet mixes (archetype counts); id is 1-based.
std::array<int, 8> builtin_fleet(int instance_id);

struct SelfSchedInstance {
  GeneratorParams params;
  int T = 24;
  std::vector<double> prices;  // one per period
  int n_segments = 4;
  std::string name;
};

/// Seeded uniform prices in the archetype's range; min-up/-down are clamped
/// to T-1 so the polytope semantics stay exact at tiny horizons.
SelfSchedInstance build_selfsched(const GeneratorParams& params, int T,
                                  std::pair<double, double> range, std::uint64_t seed,
                                  int n_segments = 4);

struct TransmissionLine {
  int from_bus = 0, to_bus = 0;
  double capacity = 0.0;
  std::vector<double> ptdf;  // sensitivity per bus
};

struct NetworkInstance {
  std::vector<GeneratorParams> fleet;
  std::vector<int> gen_bus;             // bus per unit (0-based)
  int n_buses = 1;
  int T = 24;
  std::vector<std::vector<double>> loads;  // loads[t][b], MW
  std::vector<double> reserve;             // r_t
  std::vector<TransmissionLine> lines;     // empty = single-bus mode
  int n_segments = 4;
  std::string name;
};

/// Single-bus fleet instance: hourly system load = fraction x total capacity.
NetworkInstance build_network(const std::array<int, 8>& fleet_counts,
                              const std::vector<GeneratorParams>& gen_table,
                              const std::array<double, 24>& load_fractions, double reserve_factor,
                              int max_units = 0);

/// Exact quadratic production cost a x^2 + b x + c (the c term applies when
/// the unit is on).
double quadratic_cost(const GeneratorParams& p, double x);

MilpModel to_milp(const SelfSchedInstance& inst);
MilpModel to_milp(const NetworkInstance& inst);

/// Closed-form row count of the generated relaxations (asserted in tests).
long expected_row_count(const SelfSchedInstance& inst);
long expected_row_count(const NetworkInstance& inst);

// --- file formats ---

std::vector<GeneratorParams> load_generator_table(const std::string& csv_path);
std::array<int, 8> load_fleet_row(const std::string& csv_path, int instance_id);
std::array<double, 24> load_load_profile(const std::string& csv_path);
NetworkInstance load_network_json(const std::string& json_path);
void write_generator_table(const std::string& csv_path, const std::vector<GeneratorParams>& gens);

Point load_point_json(const std::string& json_path, const Horizon& h);
void write_point_json(const std::string& json_path, const PointD& pt);

}  // namespace ucpoly
