// Command-line front end: hull certification, family checks, separation,
// and the two unit-commitment applications.
#include "CLI11.hpp"
#include "json.hpp"

#include "ucpoly/bnc.hpp"
#include "ucpoly/cut_families.hpp"
#include "ucpoly/hull_oracle.hpp"
#include "ucpoly/instances.hpp"
#include "ucpoly/report.hpp"
#include "ucpoly/separation.hpp"

#include <fstream>
#include <iostream>

using namespace ucpoly;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCertification = 1;
constexpr int kExitUsage = 2;

struct ParamFlags {
  std::string cmin, cmax, v, vbar;
  int L = 1, ell = 1;
  int gen_id = 0;
  std::string gen_csv;

  void attach(CLI::App* cmd) {
    cmd->add_option("--cmin", cmin, "minimum output when online");
    cmd->add_option("--cmax", cmax, "maximum output when online");
    cmd->add_option("--v", v, "ramp limit between online periods");
    cmd->add_option("--vbar", vbar, "start-up/shut-down output cap");
    cmd->add_option("--L", L, "minimum up time");
    cmd->add_option("--ell", ell, "minimum down time");
    cmd->add_option("--gen", gen_id, "built-in generator archetype 1..8");
    cmd->add_option("--gen-csv", gen_csv, "generator table csv (with --gen row index)");
  }

  GeneratorParams resolve() const {
    if (!cmin.empty()) {
      if (cmax.empty() || v.empty() || vbar.empty())
        throw CLI::ValidationError("--cmin/--cmax/--v/--vbar must be given together");
      return make_params(parse_rational(cmin), parse_rational(cmax), parse_rational(v),
                         parse_rational(vbar), L, ell);
    }
    if (gen_id >= 1) {
      auto table = gen_csv.empty() ? builtin_generators() : load_generator_table(gen_csv);
      if (gen_id > static_cast<int>(table.size()))
        throw CLI::ValidationError("generator id outside the table");
      auto p = table[static_cast<size_t>(gen_id - 1)];
      return p;
    }
    throw CLI::ValidationError("give either --gen or explicit --cmin/--cmax/--v/--vbar");
  }
};

nlohmann::json stats_json(const std::string& name, const std::string& policy,
                          const SolveStats& st, std::uint64_t seed) {
  nlohmann::json j;
  j["instance"] = name;
  j["policy"] = policy;
  j["status"] = st.status == MilpStatus::OPTIMAL ? "OPTIMAL"
                : st.status == MilpStatus::LIMIT ? "LIMIT"
                                                 : "INFEASIBLE";
  j["objective"] = st.best_objective;
  j["root_lp_initial"] = st.root_lp_initial;
  j["root_lp_bound"] = st.root_lp_bound;
  j["integrality_gap_percent"] = st.integrality_gap_percent;
  j["terminating_gap_percent"] = st.terminating_gap_percent;
  j["nodes"] = st.nodes_explored;
  j["lp_iterations"] = st.lp_iterations;
  j["root_cut_rounds"] = st.root_cut_rounds;
  j["wallclock_sec"] = st.wallclock_sec;
  j["seed"] = seed;
  long total = 0;
  for (const auto& [fam, count] : st.cuts_added) {
    j["cuts"][fam] = count;
    total += count;
  }
  j["cuts_total"] = total;
  return j;
}

void write_json(const std::string& path, const nlohmann::json& j) {
  if (path.empty()) return;
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << j.dump(2) << "\n";
}

nlohmann::json cert_json(const HullCertificate& cert) {
  nlohmann::json j;
  j["verdict"] = to_string(cert.verdict);
  j["dim"] = cert.dim;
  j["q_vertices"] = cert.q_vertex_count;
  if (!cert.detail.empty()) j["detail"] = cert.detail;
  if (cert.witness_point) {
    for (int i = 0; i < cert.witness_point->z.size(); ++i)
      j["witness_point"].push_back(to_double(cert.witness_point->z[i]));
  }
  if (cert.witness_ineq) j["witness_inequality"] = cert.witness_ineq->describe();
  if (cert.ray) {
    for (int i = 0; i < cert.ray->size(); ++i) j["ray"].push_back(to_double((*cert.ray)[i]));
  }
  return j;
}

nlohmann::json cut_json(const LinearInequality& r, double violation) {
  nlohmann::json j;
  j["family"] = r.family;
  for (const auto& [k, v] : r.params) j["params"][k] = v;
  j["S"] = r.set_s;
  for (const auto& [k, c] : r.coeffs) j["coeffs"][to_string(k)] = to_double(c);
  j["rhs"] = to_double(r.rhs);
  j["violation"] = violation;
  j["facet_claimed"] = r.facet_claimed;
  return j;
}

int run_verify_hull(const ParamFlags& pf, int T, const std::string& out_path) {
  auto p = pf.resolve();
  p.min_up = std::min(pf.L, std::max(1, T - 1));
  p.min_down = std::min(pf.ell, std::max(1, T - 1));
  Horizon h(T);
  std::vector<LinearInequality> system;
  if (T == 2) system = q2_system(p, h);
  else if (T == 3) system = q3_system(p, p.min_up, p.min_down, h);
  else
    throw CLI::ValidationError("hull certification covers T = 2 and T = 3");
  auto cert = certify_hull(system, p, h);
  auto j = cert_json(cert);
  j["T"] = T;
  j["case"] = to_string(classify(p).case_id);
  write_json(out_path, j);
  std::cout << "verdict " << to_string(cert.verdict) << " (dim " << cert.dim << ", "
            << cert.q_vertex_count << " vertices)\n";
  return cert.equal() ? kExitOk : kExitCertification;
}

int run_check_family(const ParamFlags& pf, const std::string& family, int T, int band_cap,
                     const std::string& out_path, bool catalog) {
  if (catalog) {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& spec : family_catalog())
      j.push_back({{"tag", spec.tag},
                   {"description", spec.description},
                   {"index_domain", spec.index_domain},
                   {"case_gate", spec.case_gate},
                   {"facet_condition", spec.facet_condition}});
    if (out_path.empty()) std::cout << j.dump(2) << "\n";
    else write_json(out_path, j);
    return kExitOk;
  }
  auto p = pf.resolve();
  Horizon h(T);
  auto verts = feasible_vertex_superset(p, h);
  long checked = 0, facet_claims = 0;
  Rational worst(0);
  std::string worst_row;
  for_each_family_row(p, h, band_cap, [&](const LinearInequality& r) {
    if (!family.empty() && r.family.rfind(family, 0) != 0) return;
    ++checked;
    if (r.facet_claimed) ++facet_claims;
    auto mv = verts.max_violation(r);
    if (mv.value > worst) {
      worst = mv.value;
      worst_row = r.describe();
    }
  });
  nlohmann::json j;
  j["family"] = family.empty() ? "all" : family;
  j["rows_checked"] = checked;
  j["facet_claims"] = facet_claims;
  j["max_violation"] = to_double(worst);
  if (!worst_row.empty()) j["worst_row"] = worst_row;
  write_json(out_path, j);
  std::cout << "checked " << checked << " rows, max violation " << to_double(worst) << "\n";
  if (checked == 0) {
    std::cerr << "no rows matched (family gated off for these parameters?)\n";
    return kExitUsage;
  }
  return worst <= 0 ? kExitOk : kExitCertification;
}

int run_separate(const ParamFlags& pf, int family_id, int T, const std::string& point_path,
                 const std::string& out_path, bool exact) {
  auto p = pf.resolve();
  Horizon h(T);
  Point pt = load_point_json(point_path, h);
  SepFamily fam;
  switch (family_id) {
    case 21: fam = SepFamily::F21; break;
    case 24: fam = SepFamily::F24; break;
    case 26: fam = SepFamily::F26; break;
    case 27: fam = SepFamily::F27; break;
    case 29: fam = SepFamily::F29; break;
    case 30: fam = SepFamily::F30; break;
    default: throw CLI::ValidationError("separable families: 21, 24, 26, 27, 29, 30");
  }
  nlohmann::json j;
  j["family"] = family_id;
  if (exact) {
    auto res = separate_family<Rational>(pt, p, h, fam, Rational(0));
    j["violation"] = res.cut ? to_double(res.best_violation) : 0.0;
    if (res.cut) j["cut"] = cut_json(*res.cut, to_double(res.best_violation));
    write_json(out_path, j);
    if (res.cut) std::cout << res.cut->describe() << "  violation " << to_double(res.best_violation) << "\n";
    else std::cout << "none\n";
  } else {
    PointD ptd = to_double_point(pt);
    auto res = separate_family<double>(ptd, p, h, fam, 1e-6);
    j["violation"] = res.cut ? res.best_violation : 0.0;
    if (res.cut) j["cut"] = cut_json(*res.cut, res.best_violation);
    write_json(out_path, j);
    if (res.cut) std::cout << res.cut->describe() << "  violation " << res.best_violation << "\n";
    else std::cout << "none\n";
  }
  return kExitOk;
}

BncConfig config_from(double tol, long node_limit, double time_limit, std::uint64_t seed) {
  BncConfig cfg;
  cfg.rel_tolerance = tol;
  cfg.node_limit = node_limit;
  cfg.time_limit_sec = time_limit;
  cfg.seed = seed;
  return cfg;
}

int run_solve_ssuc(const ParamFlags& pf, int T, std::uint64_t seed, const std::string& cuts,
                   int segments, double tol, long node_limit, double time_limit,
                   const std::string& out_path) {
  auto table = pf.gen_csv.empty() ? builtin_generators() : load_generator_table(pf.gen_csv);
  if (pf.gen_id < 1 || pf.gen_id > static_cast<int>(table.size()))
    throw CLI::ValidationError("--gen must point into the generator table");
  auto inst = build_selfsched(table[static_cast<size_t>(pf.gen_id - 1)], T, price_range(pf.gen_id),
                              seed, segments);
  inst.name = "ssuc-g" + std::to_string(pf.gen_id) + "-T" + std::to_string(T) + "-s" +
              std::to_string(seed);
  auto model = to_milp(inst);
  apply_cut_policy(model, cuts == "strong" ? CutPolicy::STRONG : CutPolicy::NONE);
  auto res = solve_milp(model, config_from(tol, node_limit, time_limit, seed));
  auto j = stats_json(inst.name, cuts, res.stats, seed);
  write_json(out_path, j);
  std::cout << j["status"].get<std::string>() << " objective " << res.stats.best_objective
            << " nodes " << res.stats.nodes_explored << " igap% "
            << res.stats.integrality_gap_percent << "\n";
  return res.stats.status == MilpStatus::INFEASIBLE ? kExitCertification : kExitOk;
}

int run_solve_nuc(const std::string& network_json, int fleet_id, int max_units,
                  const std::string& fleet_csv, const std::string& loads_csv,
                  const std::string& gens_csv, double reserve, const std::string& cuts,
                  double tol, long node_limit, double time_limit, std::uint64_t seed,
                  const std::string& out_path) {
  NetworkInstance inst;
  if (!network_json.empty()) {
    inst = load_network_json(network_json);
  } else {
    auto counts = fleet_csv.empty() ? builtin_fleet(fleet_id) : load_fleet_row(fleet_csv, fleet_id);
    auto loads = loads_csv.empty() ? builtin_load_fractions() : load_load_profile(loads_csv);
    auto table = gens_csv.empty() ? builtin_generators() : load_generator_table(gens_csv);
    inst = build_network(counts, table, loads, reserve, max_units);
    inst.name = "nuc-f" + std::to_string(fleet_id) + "-u" + std::to_string(inst.fleet.size());
  }
  auto model = to_milp(inst);
  apply_cut_policy(model, cuts == "strong" ? CutPolicy::STRONG : CutPolicy::NONE);
  auto res = solve_milp(model, config_from(tol, node_limit, time_limit, seed));
  auto j = stats_json(inst.name, cuts, res.stats, seed);
  write_json(out_path, j);
  std::cout << j["status"].get<std::string>() << " objective " << res.stats.best_objective
            << " nodes " << res.stats.nodes_explored << " igap% "
            << res.stats.integrality_gap_percent << "\n";
  return res.stats.status == MilpStatus::INFEASIBLE ? kExitCertification : kExitOk;
}

int run_report(const std::vector<std::string>& inputs, const std::string& format,
               const std::string& out_path) {
  // group solver runs by instance, pairing the "none" baseline with "strong"
  std::map<std::string, ExperimentRow> rows;
  for (const auto& path : inputs) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    nlohmann::json j;
    in >> j;
    auto& row = rows[j.at("instance").get<std::string>()];
    row.instance = j.at("instance").get<std::string>();
    bool strong = j.at("policy").get<std::string>() == "strong";
    double igap = j.value("integrality_gap_percent", 0.0);
    double tgap = j.value("terminating_gap_percent", 0.0);
    double time = j.value("wallclock_sec", 0.0);
    long nodes = j.value("nodes", 0L);
    row.best_objective = j.value("objective", 0.0);
    if (strong) {
      row.igap_strong = igap;
      row.tgap_strong = tgap;
      row.time_strong = time;
      row.nodes_strong = nodes;
      row.cuts_strong = j.value("cuts_total", 0L);
    } else {
      row.igap_baseline = igap;
      row.tgap_baseline = tgap;
      row.time_baseline = time;
      row.nodes_baseline = nodes;
    }
  }
  std::vector<ExperimentRow> list;
  for (auto& [name, row] : rows) {
    if (row.igap_baseline > 0)
      row.reduction = gap_reduction_percent(row.igap_baseline, row.igap_strong);
    list.push_back(row);
  }
  TableFormat fmt = format == "md" ? TableFormat::MD
                    : format == "json" ? TableFormat::JSON
                                       : TableFormat::CSV;
  if (out_path.empty()) std::cout << emit_table(list, fmt);
  else write_table(out_path, list, fmt);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"polyhedral toolkit for min-up/-down and ramping commitment models"};
  app.require_subcommand(1);

  // verify-hull
  auto* vh = app.add_subcommand("verify-hull", "certify a two- or three-period hull description");
  ParamFlags vh_params;
  vh_params.attach(vh);
  int vh_T = 3;
  std::string vh_out;
  vh->add_option("--T", vh_T, "horizon (2 or 3)");
  vh->add_option("--out", vh_out, "write the certificate as json");

  // check-family
  auto* cf = app.add_subcommand("check-family", "construct a family and validate it exactly");
  ParamFlags cf_params;
  cf_params.attach(cf);
  std::string cf_family, cf_out;
  int cf_T = 5, cf_band = 6;
  bool cf_catalog = false;
  cf->add_option("--family", cf_family, "family tag prefix (e.g. ineq21, q3); empty = all");
  cf->add_option("--T", cf_T, "horizon for the validity check");
  cf->add_option("--band-cap", cf_band, "max index-set band for exponential families");
  cf->add_option("--out", cf_out, "write results as json");
  cf->add_flag("--catalog", cf_catalog, "dump the family catalog instead");

  // separate
  auto* sp = app.add_subcommand("separate", "most violated cut of one family at a point");
  ParamFlags sp_params;
  sp_params.attach(sp);
  int sp_family = 21, sp_T = 24;
  std::string sp_point, sp_out;
  bool sp_exact = false;
  sp->add_option("--family", sp_family, "family id: 21, 24, 26, 27, 29, 30");
  sp->add_option("--T", sp_T, "horizon");
  sp->add_option("--point", sp_point, "point json {x:[],y:[],u:[]}")->required();
  sp->add_option("--out", sp_out, "write the cut as json");
  sp->add_flag("--exact", sp_exact, "separate in exact arithmetic");

  // solve-ssuc
  auto* ss = app.add_subcommand("solve-ssuc", "single-unit self-scheduling against prices");
  ParamFlags ss_params;
  ss_params.attach(ss);
  int ss_T = 24, ss_segments = 4;
  std::uint64_t ss_seed = 1;
  std::string ss_cuts = "strong", ss_out;
  double ss_tol = 1e-4, ss_time = 60.0;
  long ss_nodes = 200000;
  ss->add_option("--T", ss_T, "horizon");
  ss->add_option("--seed", ss_seed, "price seed");
  ss->add_option("--cuts", ss_cuts, "strong | none")->check(CLI::IsMember({"strong", "none"}));
  ss->add_option("--segments", ss_segments, "piecewise cost segments");
  ss->add_option("--tol", ss_tol, "relative optimality tolerance");
  ss->add_option("--node-limit", ss_nodes, "node limit");
  ss->add_option("--time-limit", ss_time, "seconds");
  ss->add_option("--out", ss_out, "write solve stats as json");

  // solve-nuc
  auto* nu = app.add_subcommand("solve-nuc", "fleet commitment under load balance and reserve");
  std::string nu_network, nu_fleet_csv, nu_loads_csv, nu_gens_csv, nu_cuts = "strong", nu_out;
  int nu_fleet_id = 1, nu_max_units = 0;
  double nu_reserve = 0.03, nu_tol = 5e-4, nu_time = 60.0;
  std::uint64_t nu_seed = 1;
  long nu_nodes = 200000;
  nu->add_option("--network", nu_network, "network json (buses, generators, loads, lines)");
  nu->add_option("--fleet-id", nu_fleet_id, "built-in fleet mix 1..20");
  nu->add_option("--max-units", nu_max_units, "truncate the fleet to this many units");
  nu->add_option("--fleet-csv", nu_fleet_csv, "fleet mix table");
  nu->add_option("--loads-csv", nu_loads_csv, "24-hour load fractions");
  nu->add_option("--gens-csv", nu_gens_csv, "generator table");
  nu->add_option("--reserve", nu_reserve, "spinning reserve factor");
  nu->add_option("--cuts", nu_cuts, "strong | none")->check(CLI::IsMember({"strong", "none"}));
  nu->add_option("--tol", nu_tol, "relative optimality tolerance");
  nu->add_option("--node-limit", nu_nodes, "node limit");
  nu->add_option("--time-limit", nu_time, "seconds");
  nu->add_option("--seed", nu_seed, "seed recorded in the report");
  nu->add_option("--out", nu_out, "write solve stats as json");

  // report
  auto* rp = app.add_subcommand("report", "aggregate solver runs into a table");
  std::vector<std::string> rp_inputs;
  std::string rp_format = "csv", rp_out;
  rp->add_option("--inputs", rp_inputs, "run json files")->required();
  rp->add_option("--format", rp_format, "csv | md | json")
      ->check(CLI::IsMember({"csv", "md", "json"}));
  rp->add_option("--out", rp_out, "output file (stdout when omitted)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (vh->parsed()) return run_verify_hull(vh_params, vh_T, vh_out);
    if (cf->parsed())
      return run_check_family(cf_params, cf_family, cf_T, cf_band, cf_out, cf_catalog);
    if (sp->parsed())
      return run_separate(sp_params, sp_family, sp_T, sp_point, sp_out, sp_exact);
    if (ss->parsed())
      return run_solve_ssuc(ss_params, ss_T, ss_seed, ss_cuts, ss_segments, ss_tol, ss_nodes,
                            ss_time, ss_out);
    if (nu->parsed())
      return run_solve_nuc(nu_network, nu_fleet_id, nu_max_units, nu_fleet_csv, nu_loads_csv,
                           nu_gens_csv, nu_reserve, nu_cuts, nu_tol, nu_nodes, nu_time, nu_seed,
                           nu_out);
    if (rp->parsed()) return run_report(rp_inputs, rp_format, rp_out);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCertification;
  }
  return kExitUsage;
}
