#include "ucpoly/simplex.hpp"

#include <iomanip>
#include <sstream>

namespace ucpoly {

LpSolutionT<Rational> solve_lp_exact(const LpModelT<Rational>& model) {
  SimplexSolver<Rational> solver(model);
  return solver.solve();
}

LpSolutionT<double> solve_lp_float(const LpModelT<double>& model) {
  SimplexSolver<double> solver(model);
  return solver.solve();
}

LpModelT<double> to_float_model(const LpModelT<Rational>& model) {
  LpModelT<double> out;
  out.sense = model.sense;
  for (int j = 0; j < model.n_vars; ++j) {
    BoundT<double> lo{model.lower[static_cast<size_t>(j)].finite,
                      to_double(model.lower[static_cast<size_t>(j)].value)};
    BoundT<double> up{model.upper[static_cast<size_t>(j)].finite,
                      to_double(model.upper[static_cast<size_t>(j)].value)};
    out.add_var(lo, up, to_double(model.cost[static_cast<size_t>(j)]));
  }
  for (const auto& row : model.rows) {
    LpRowT<double> r;
    r.sense = row.sense;
    r.rhs = to_double(row.rhs);
    for (const auto& [j, c] : row.coeffs) r.coeffs.emplace_back(j, to_double(c));
    out.add_row(std::move(r));
  }
  return out;
}

std::string lp_format(const LpModelT<double>& model, const std::vector<std::string>& names) {
  auto name = [&](int j) {
    return j < static_cast<int>(names.size()) ? names[static_cast<size_t>(j)]
                                              : "v" + std::to_string(j);
  };
  std::ostringstream os;
  os << std::setprecision(17);
  os << (model.sense == ObjSense::MIN ? "Minimize\n obj:" : "Maximize\n obj:");
  for (int j = 0; j < model.n_vars; ++j)
    if (model.cost[static_cast<size_t>(j)] != 0.0)
      os << " + " << model.cost[static_cast<size_t>(j)] << " " << name(j);
  os << "\nSubject To\n";
  for (size_t i = 0; i < model.rows.size(); ++i) {
    os << " r" << i << ":";
    for (const auto& [j, c] : model.rows[i].coeffs) os << " + " << c << " " << name(j);
    switch (model.rows[i].sense) {
      case RowSense::LE: os << " <= "; break;
      case RowSense::GE: os << " >= "; break;
      case RowSense::EQ: os << " = "; break;
    }
    os << model.rows[i].rhs << "\n";
  }
  os << "Bounds\n";
  for (int j = 0; j < model.n_vars; ++j) {
    const auto& lo = model.lower[static_cast<size_t>(j)];
    const auto& up = model.upper[static_cast<size_t>(j)];
    os << " " << (lo.finite ? std::to_string(lo.value) : "-inf") << " <= " << name(j) << " <= "
       << (up.finite ? std::to_string(up.value) : "+inf") << "\n";
  }
  os << "End\n";
  return os.str();
}

}  // namespace ucpoly
