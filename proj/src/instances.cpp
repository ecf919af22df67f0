#include "ucpoly/instances.hpp"

#include "json.hpp"

#include <fstream>
#include <sstream>

namespace ucpoly {

namespace {

GeneratorParams archetype(long cmin, long cmax, int updown, const Rational& ramp, long startstop,
                          double su, double a, double b, double c) {
  auto p = make_params(cmin, cmax, ramp, startstop, updown, updown);
  p.startup_cost = su;
  p.shutdown_cost = 0.0;  // the benchmark table carries no shut-down cost
  p.cost_a = a;
  p.cost_b = b;
  p.cost_c = c;
  return p;
}

}  // namespace

std::vector<GeneratorParams> builtin_generators() {
  return {
      archetype(150, 455, 8, 91, 180, 2000, 0.00048, 16.19, 1000),
      archetype(150, 455, 8, 91, 180, 2000, 0.00031, 17.26, 970),
      archetype(20, 130, 5, 26, 35, 500, 0.002, 16.6, 700),
      archetype(20, 130, 5, 26, 35, 500, 0.00211, 16.5, 680),
      archetype(25, 162, 6, Rational(162, 5), 40, 700, 0.00398, 19.7, 450),
      archetype(20, 80, 3, 16, 28, 150, 0.00712, 22.26, 370),
      archetype(25, 85, 3, 17, 33, 200, 0.00079, 27.74, 480),
      archetype(10, 55, 1, 11, 15, 60, 0.00413, 25.92, 660),
  };
}

std::pair<double, double> price_range(int archetype_id) {
  switch (archetype_id) {
    case 1:
    case 2: return {0.0, 35.0};
    case 3:
    case 4:
    case 5: return {0.0, 44.0};
    case 6: return {0.0, 48.0};
    case 7: return {0.0, 60.0};
    case 8: return {0.0, 67.0};
  }
  throw std::invalid_argument("archetype id must be 1..8");
}

std::array<double, 24> builtin_load_fractions() {
  return {0.71, 0.65, 0.62, 0.60, 0.58, 0.58, 0.60, 0.64, 0.73, 0.80, 0.82, 0.83,
          0.82, 0.80, 0.79, 0.79, 0.83, 0.91, 0.90, 0.88, 0.85, 0.84, 0.79, 0.74};
}

std::array<int, 8> builtin_fleet(int instance_id) {
  static const std::array<std::array<int, 8>, 20> fleets = {{
      {12, 11, 0, 0, 1, 4, 0, 0},  {13, 15, 2, 0, 4, 0, 0, 1},  {15, 13, 2, 6, 3, 1, 1, 3},
      {15, 11, 0, 1, 4, 5, 6, 3},  {15, 13, 3, 7, 5, 3, 2, 1},  {10, 10, 2, 5, 7, 5, 6, 5},
      {17, 16, 1, 3, 1, 7, 2, 4},  {17, 10, 6, 5, 2, 1, 3, 7},  {12, 17, 4, 7, 5, 2, 0, 5},
      {13, 12, 5, 7, 2, 5, 4, 6},  {46, 45, 8, 0, 5, 0, 12, 16}, {40, 54, 14, 8, 3, 15, 9, 13},
      {50, 41, 19, 11, 4, 4, 12, 15}, {51, 58, 17, 19, 16, 1, 2, 1}, {43, 46, 17, 15, 13, 15, 6, 12},
      {50, 59, 8, 15, 1, 18, 4, 17}, {53, 50, 17, 15, 16, 5, 14, 12}, {45, 57, 19, 7, 19, 19, 5, 11},
      {58, 50, 15, 7, 16, 18, 7, 12}, {55, 48, 18, 5, 18, 17, 15, 11},
  }};
  if (instance_id < 1 || instance_id > 20) throw std::invalid_argument("fleet id must be 1..20");
  return fleets[static_cast<size_t>(instance_id - 1)];
}

SelfSchedInstance build_selfsched(const GeneratorParams& params, int T,
                                  std::pair<double, double> range, std::uint64_t seed,
                                  int n_segments) {
  SelfSchedInstance inst;
  inst.params = params;
  inst.params.min_up = std::min(params.min_up, std::max(1, T - 1));
  inst.params.min_down = std::min(params.min_down, std::max(1, T - 1));
  inst.T = T;
  inst.n_segments = n_segments;
  SplitMix64 rng(seed);
  inst.prices.resize(static_cast<size_t>(T));
  for (auto& p : inst.prices) p = rng.uniform(range.first, range.second);
  return inst;
}

NetworkInstance build_network(const std::array<int, 8>& fleet_counts,
                              const std::vector<GeneratorParams>& gen_table,
                              const std::array<double, 24>& load_fractions, double reserve_factor,
                              int max_units) {
  NetworkInstance inst;
  inst.T = 24;
  for (int a = 0; a < 8; ++a)
    for (int k = 0; k < fleet_counts[static_cast<size_t>(a)]; ++k) {
      if (max_units > 0 && static_cast<int>(inst.fleet.size()) >= max_units) break;
      inst.fleet.push_back(gen_table.at(static_cast<size_t>(a)));
      inst.gen_bus.push_back(0);
    }
  double capacity = 0;
  for (const auto& g : inst.fleet) capacity += to_double(g.c_max);
  inst.loads.assign(24, std::vector<double>(1, 0.0));
  for (int t = 0; t < 24; ++t) inst.loads[static_cast<size_t>(t)][0] =
      load_fractions[static_cast<size_t>(t)] * capacity;
  inst.reserve.assign(24, reserve_factor);
  return inst;
}

double quadratic_cost(const GeneratorParams& p, double x) {
  return p.cost_a * x * x + p.cost_b * x + p.cost_c;
}

namespace {

// Shared construction of one generator block: physical rows plus the
// piecewise production cost. Segments carry the chord slopes of the
// quadratic part; delta_s <= width * y keeps the cost exact on fractional
// commitments. Cost pieces enter the objective multiplied by `sign`
// (+1 when minimizing cost, -1 inside a profit objective).
void add_generator_block(MilpModel& model, const GeneratorParams& p, int g, int T, int n_segments,
                         double sign) {
  Horizon h(T);
  auto& lp = model.lp;
  // x, y, u bounds: x free in [0, inf) (rows bound it), y/u binary boxes
  for (int t = 1; t <= T; ++t)
    lp.add_var(BoundT<double>::at(0.0), BoundT<double>::none());
  for (int t = 1; t <= T; ++t) lp.add_var(BoundT<double>::at(0.0), BoundT<double>::at(1.0));
  for (int t = 2; t <= T; ++t) lp.add_var(BoundT<double>::at(0.0), BoundT<double>::at(1.0));
  for (int t = 1; t <= T; ++t) model.integer_vars.push_back(model.map.y(g, t));
  for (int t = 2; t <= T; ++t) model.integer_vars.push_back(model.map.u(g, t));

  for (const auto& r : polytope_rows(p, h)) {
    LpRowT<double> row;
    row.sense = RowSense::LE;
    row.rhs = to_double(r.rhs);
    for (const auto& [k, c] : r.coeffs) row.coeffs.emplace_back(model.map.col(g, k), to_double(c));
    lp.add_row(std::move(row));
  }

  // objective: commitment cost pieces
  const double cmin = to_double(p.c_min), cmax = to_double(p.c_max);
  auto gquad = [&](double x) { return p.cost_a * x * x + p.cost_b * x; };
  for (int t = 1; t <= T; ++t)
    lp.cost[static_cast<size_t>(model.map.y(g, t))] += sign * (gquad(cmin) + p.cost_c);
  for (int t = 2; t <= T; ++t) {
    lp.cost[static_cast<size_t>(model.map.u(g, t))] += sign * (p.startup_cost + p.shutdown_cost);
    lp.cost[static_cast<size_t>(model.map.y(g, t - 1))] += sign * p.shutdown_cost;
    lp.cost[static_cast<size_t>(model.map.y(g, t))] += -sign * p.shutdown_cost;
  }
  // segment columns with increasing chord slopes over [cmin, cmax]
  const double width = (cmax - cmin) / n_segments;
  for (int t = 1; t <= T; ++t) {
    LpRowT<double> couple;  // x_t - cmin y_t - sum_s delta = 0
    couple.sense = RowSense::EQ;
    couple.rhs = 0.0;
    couple.coeffs.emplace_back(model.map.x(g, t), 1.0);
    couple.coeffs.emplace_back(model.map.y(g, t), -cmin);
    for (int s = 0; s < n_segments; ++s) {
      double b0 = cmin + s * width, b1 = cmin + (s + 1) * width;
      double slope = width > 0 ? (gquad(b1) - gquad(b0)) / width : 0.0;
      int col = lp.add_var(BoundT<double>::at(0.0), BoundT<double>::none(), sign * slope);
      couple.coeffs.emplace_back(col, -1.0);
      LpRowT<double> cap;  // delta <= width * y
      cap.sense = RowSense::LE;
      cap.rhs = 0.0;
      cap.coeffs.emplace_back(col, 1.0);
      cap.coeffs.emplace_back(model.map.y(g, t), -width);
      lp.add_row(std::move(cap));
    }
    lp.add_row(std::move(couple));
  }
}

}  // namespace

MilpModel to_milp(const SelfSchedInstance& inst) {
  MilpModel model;
  model.name = inst.name;
  model.map.n_gens = 1;
  model.map.T = inst.T;
  model.gens = {inst.params};
  model.lp.sense = ObjSense::MAX;
  add_generator_block(model, inst.params, 0, inst.T, inst.n_segments, -1.0);
  for (int t = 1; t <= inst.T; ++t)
    model.lp.cost[static_cast<size_t>(model.map.x(0, t))] +=
        inst.prices[static_cast<size_t>(t - 1)];
  return model;
}

MilpModel to_milp(const NetworkInstance& inst) {
  MilpModel model;
  model.name = inst.name;
  const int T = inst.T;
  const int n = static_cast<int>(inst.fleet.size());
  model.map.n_gens = n;
  model.map.T = T;
  model.gens = inst.fleet;
  model.lp.sense = ObjSense::MIN;
  // block columns first (the map keeps generator blocks contiguous at the
  // front); segment columns for all generators follow after the blocks
  for (int g = 0; g < n; ++g) {
    for (int t = 1; t <= T; ++t) model.lp.add_var(BoundT<double>::at(0.0), BoundT<double>::none());
    for (int t = 1; t <= T; ++t)
      model.lp.add_var(BoundT<double>::at(0.0), BoundT<double>::at(1.0));
    for (int t = 2; t <= T; ++t)
      model.lp.add_var(BoundT<double>::at(0.0), BoundT<double>::at(1.0));
    for (int t = 1; t <= T; ++t) model.integer_vars.push_back(model.map.y(g, t));
    for (int t = 2; t <= T; ++t) model.integer_vars.push_back(model.map.u(g, t));
  }
  Horizon h(T);
  for (int g = 0; g < n; ++g) {
    const auto& p = inst.fleet[static_cast<size_t>(g)];
    for (const auto& r : polytope_rows(p, h)) {
      LpRowT<double> row;
      row.sense = RowSense::LE;
      row.rhs = to_double(r.rhs);
      for (const auto& [k, c] : r.coeffs)
        row.coeffs.emplace_back(model.map.col(g, k), to_double(c));
      model.lp.add_row(std::move(row));
    }
    const double cmin = to_double(p.c_min), cmax = to_double(p.c_max);
    auto gquad = [&](double x) { return p.cost_a * x * x + p.cost_b * x; };
    for (int t = 1; t <= T; ++t)
      model.lp.cost[static_cast<size_t>(model.map.y(g, t))] += gquad(cmin) + p.cost_c;
    for (int t = 2; t <= T; ++t) {
      model.lp.cost[static_cast<size_t>(model.map.u(g, t))] += p.startup_cost + p.shutdown_cost;
      model.lp.cost[static_cast<size_t>(model.map.y(g, t - 1))] += p.shutdown_cost;
      model.lp.cost[static_cast<size_t>(model.map.y(g, t))] += -p.shutdown_cost;
    }
    const double width = (cmax - cmin) / inst.n_segments;
    for (int t = 1; t <= T; ++t) {
      LpRowT<double> couple;
      couple.sense = RowSense::EQ;
      couple.rhs = 0.0;
      couple.coeffs.emplace_back(model.map.x(g, t), 1.0);
      couple.coeffs.emplace_back(model.map.y(g, t), -cmin);
      for (int s = 0; s < inst.n_segments; ++s) {
        double b0 = cmin + s * width, b1 = cmin + (s + 1) * width;
        double slope = width > 0 ? (gquad(b1) - gquad(b0)) / width : 0.0;
        int col = model.lp.add_var(BoundT<double>::at(0.0), BoundT<double>::none(), slope);
        couple.coeffs.emplace_back(col, -1.0);
        LpRowT<double> cap;
        cap.sense = RowSense::LE;
        cap.rhs = 0.0;
        cap.coeffs.emplace_back(col, 1.0);
        cap.coeffs.emplace_back(model.map.y(g, t), -width);
        model.lp.add_row(std::move(cap));
      }
      model.lp.add_row(std::move(couple));
    }
  }
  // load balance, reserve, line limits
  for (int t = 1; t <= T; ++t) {
    double total_load = 0;
    for (double d : inst.loads[static_cast<size_t>(t - 1)]) total_load += d;
    LpRowT<double> balance;
    balance.sense = RowSense::EQ;
    balance.rhs = total_load;
    for (int g = 0; g < n; ++g) balance.coeffs.emplace_back(model.map.x(g, t), 1.0);
    model.lp.add_row(std::move(balance));

    LpRowT<double> reserve;
    reserve.sense = RowSense::GE;
    reserve.rhs = (1.0 + inst.reserve[static_cast<size_t>(t - 1)]) * total_load;
    for (int g = 0; g < n; ++g)
      reserve.coeffs.emplace_back(model.map.y(g, t),
                                  to_double(inst.fleet[static_cast<size_t>(g)].c_max));
    model.lp.add_row(std::move(reserve));

    for (const auto& line : inst.lines) {
      // sum_b K_b (injection_b - load_b) within +-capacity
      double shift = 0.0;
      LpRowT<double> upper;
      upper.sense = RowSense::LE;
      for (int g = 0; g < n; ++g) {
        double k = line.ptdf.at(static_cast<size_t>(inst.gen_bus[static_cast<size_t>(g)]));
        if (k != 0.0) upper.coeffs.emplace_back(model.map.x(g, t), k);
      }
      for (int bus = 0; bus < inst.n_buses; ++bus)
        shift += line.ptdf.at(static_cast<size_t>(bus)) *
                 inst.loads[static_cast<size_t>(t - 1)].at(static_cast<size_t>(bus));
      upper.rhs = line.capacity + shift;
      LpRowT<double> lower = upper;
      lower.sense = RowSense::GE;
      lower.rhs = -line.capacity + shift;
      model.lp.add_row(std::move(upper));
      model.lp.add_row(std::move(lower));
    }
  }
  return model;
}

long expected_row_count(const SelfSchedInstance& inst) {
  const auto& p = inst.params;
  const int T = inst.T;
  long phys = std::max(0, T - p.min_up) + std::max(0, T - p.min_down) + (T - 1) + 2 * T +
              2 * (T - 1);
  return phys + T * (inst.n_segments + 1);
}

long expected_row_count(const NetworkInstance& inst) {
  long rows = 0;
  for (const auto& p : inst.fleet) {
    const int T = inst.T;
    rows += std::max(0, T - p.min_up) + std::max(0, T - p.min_down) + (T - 1) + 2 * T +
            2 * (T - 1) + T * (inst.n_segments + 1);
  }
  rows += inst.T * 2;  // balance + reserve
  rows += inst.T * 2 * static_cast<long>(inst.lines.size());
  return rows;
}

// ---------------------------------------------------------------------------
// File formats
// ---------------------------------------------------------------------------

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : line) {
    if (ch == ',') {
      out.push_back(cur);
      cur.clear();
    } else if (ch != '\r') {
      cur += ch;
    }
  }
  out.push_back(cur);
  return out;
}

}  // namespace

std::vector<GeneratorParams> load_generator_table(const std::string& csv_path) {
  std::ifstream in(csv_path);
  if (!in) throw std::runtime_error("cannot open " + csv_path);
  std::string line;
  std::vector<GeneratorParams> out;
  bool header = true;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (header) {
      header = false;
      continue;
    }
    auto f = split_csv_line(line);
    if (f.size() < 10) throw std::runtime_error("generator row needs 10 columns: " + line);
    auto p = make_params(parse_rational(f[1]), parse_rational(f[2]), parse_rational(f[4]),
                         parse_rational(f[5]), std::stoi(f[3]), std::stoi(f[3]));
    p.startup_cost = std::stod(f[6]);
    p.cost_a = std::stod(f[7]);
    p.cost_b = std::stod(f[8]);
    p.cost_c = std::stod(f[9]);
    out.push_back(std::move(p));
  }
  if (out.empty()) throw std::runtime_error("empty generator table: " + csv_path);
  return out;
}

void write_generator_table(const std::string& csv_path, const std::vector<GeneratorParams>& gens) {
  std::ofstream out(csv_path);
  out << "id,cmin,cmax,min_updown,ramp,startstop,startup_cost,cost_a,cost_b,cost_c\n";
  for (size_t i = 0; i < gens.size(); ++i) {
    const auto& p = gens[i];
    out << (i + 1) << "," << to_string(p.c_min) << "," << to_string(p.c_max) << "," << p.min_up
        << "," << to_string(p.ramp) << "," << to_string(p.startstop_ramp) << ","
        << p.startup_cost << "," << p.cost_a << "," << p.cost_b << "," << p.cost_c << "\n";
  }
}

std::array<int, 8> load_fleet_row(const std::string& csv_path, int instance_id) {
  std::ifstream in(csv_path);
  if (!in) throw std::runtime_error("cannot open " + csv_path);
  std::string line;
  bool header = true;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (header) {
      header = false;
      continue;
    }
    auto f = split_csv_line(line);
    if (f.size() < 9) continue;
    if (std::stoi(f[0]) == instance_id) {
      std::array<int, 8> counts;
      for (int a = 0; a < 8; ++a) counts[static_cast<size_t>(a)] = std::stoi(f[static_cast<size_t>(a + 1)]);
      return counts;
    }
  }
  throw std::runtime_error("fleet instance not found");
}

std::array<double, 24> load_load_profile(const std::string& csv_path) {
  std::ifstream in(csv_path);
  if (!in) throw std::runtime_error("cannot open " + csv_path);
  std::array<double, 24> out{};
  std::string line;
  bool header = true;
  int filled = 0;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (header) {
      header = false;
      continue;
    }
    auto f = split_csv_line(line);
    if (f.size() < 2) continue;
    int hour = std::stoi(f[0]);
    if (hour < 1 || hour > 24) throw std::runtime_error("hour outside 1..24");
    out[static_cast<size_t>(hour - 1)] = std::stod(f[1]);
    ++filled;
  }
  if (filled != 24) throw std::runtime_error("load profile needs 24 hours");
  return out;
}

NetworkInstance load_network_json(const std::string& json_path) {
  std::ifstream in(json_path);
  if (!in) throw std::runtime_error("cannot open " + json_path);
  nlohmann::json j;
  in >> j;
  NetworkInstance inst;
  inst.name = j.value("name", json_path);
  inst.n_buses = j.at("buses").get<int>();
  auto table = builtin_generators();
  if (j.contains("generator_table")) {
    table.clear();
    for (const auto& row : j.at("generator_table")) {
      auto p = make_params(parse_rational(row.at("cmin").get<std::string>()),
                           parse_rational(row.at("cmax").get<std::string>()),
                           parse_rational(row.at("ramp").get<std::string>()),
                           parse_rational(row.at("startstop").get<std::string>()),
                           row.at("min_up").get<int>(), row.at("min_down").get<int>());
      p.startup_cost = row.value("startup_cost", 0.0);
      p.shutdown_cost = row.value("shutdown_cost", 0.0);
      p.cost_a = row.value("cost_a", 0.0);
      p.cost_b = row.value("cost_b", 0.0);
      p.cost_c = row.value("cost_c", 0.0);
      table.push_back(std::move(p));
    }
  }
  for (const auto& g : j.at("generators")) {
    int arch = g.at("archetype").get<int>();
    inst.fleet.push_back(table.at(static_cast<size_t>(arch - 1)));
    inst.gen_bus.push_back(g.at("bus").get<int>());
  }
  inst.loads.clear();
  for (const auto& row : j.at("loads")) {
    std::vector<double> l = row.get<std::vector<double>>();
    if (static_cast<int>(l.size()) != inst.n_buses)
      throw std::runtime_error("load row width mismatch");
    inst.loads.push_back(std::move(l));
  }
  inst.T = static_cast<int>(inst.loads.size());
  inst.reserve = j.at("reserve").get<std::vector<double>>();
  if (static_cast<int>(inst.reserve.size()) != inst.T)
    throw std::runtime_error("reserve length mismatch");
  if (j.contains("lines"))
    for (const auto& l : j.at("lines")) {
      TransmissionLine line;
      line.from_bus = l.at("m").get<int>();
      line.to_bus = l.at("n").get<int>();
      line.capacity = l.at("cap").get<double>();
      line.ptdf = l.at("ptdf").get<std::vector<double>>();
      if (static_cast<int>(line.ptdf.size()) != inst.n_buses)
        throw std::runtime_error("ptdf width mismatch");
      inst.lines.push_back(std::move(line));
    }
  inst.n_segments = j.value("segments", 4);
  return inst;
}

Point load_point_json(const std::string& json_path, const Horizon& h) {
  std::ifstream in(json_path);
  if (!in) throw std::runtime_error("cannot open " + json_path);
  nlohmann::json j;
  in >> j;
  Point pt(h);
  auto xs = j.at("x");
  auto ys = j.at("y");
  auto us = j.at("u");
  if (static_cast<int>(xs.size()) != h.T || static_cast<int>(ys.size()) != h.T ||
      static_cast<int>(us.size()) != h.T - 1)
    throw std::runtime_error("point arrays do not match the horizon");
  auto as_rational = [](const nlohmann::json& v) {
    if (v.is_string()) return parse_rational(v.get<std::string>());
    if (v.is_number_integer()) return Rational(v.get<long long>());
    std::ostringstream os;
    os.precision(17);
    os << v.get<double>();
    return parse_rational(os.str());
  };
  for (int t = 1; t <= h.T; ++t) {
    pt.x(t) = as_rational(xs[static_cast<size_t>(t - 1)]);
    pt.y(t) = as_rational(ys[static_cast<size_t>(t - 1)]);
  }
  for (int t = 2; t <= h.T; ++t) pt.u(t) = as_rational(us[static_cast<size_t>(t - 2)]);
  return pt;
}

void write_point_json(const std::string& json_path, const PointD& pt) {
  nlohmann::json j;
  for (int t = 1; t <= pt.horizon.T; ++t) {
    j["x"].push_back(pt.x(t));
    j["y"].push_back(pt.y(t));
  }
  for (int t = 2; t <= pt.horizon.T; ++t) j["u"].push_back(pt.u(t));
  std::ofstream out(json_path);
  out << j.dump(2) << "\n";
}

}  // namespace ucpoly
