#include "ucpoly/report.hpp"

#include "json.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>

namespace ucpoly {

namespace {

const char* kColumns =
    "instance,best_objective,igap_baseline,igap_strong,reduction,time_baseline,time_strong,"
    "tgap_baseline,tgap_strong,nodes_baseline,nodes_strong,cuts_strong";

std::string fmt(double v) {
  std::ostringstream os;
  os << std::setprecision(17) << v;
  return os.str();
}

nlohmann::json to_json(const ExperimentRow& r) {
  nlohmann::json j{{"instance", r.instance},
                   {"best_objective", r.best_objective},
                   {"igap_baseline", r.igap_baseline},
                   {"igap_strong", r.igap_strong},
                   {"time_baseline", r.time_baseline},
                   {"time_strong", r.time_strong},
                   {"tgap_baseline", r.tgap_baseline},
                   {"tgap_strong", r.tgap_strong},
                   {"nodes_baseline", r.nodes_baseline},
                   {"nodes_strong", r.nodes_strong},
                   {"cuts_strong", r.cuts_strong}};
  if (r.reduction) j["reduction"] = *r.reduction;
  return j;
}

ExperimentRow from_json(const nlohmann::json& j) {
  ExperimentRow r;
  r.instance = j.at("instance").get<std::string>();
  r.best_objective = j.at("best_objective").get<double>();
  r.igap_baseline = j.at("igap_baseline").get<double>();
  r.igap_strong = j.at("igap_strong").get<double>();
  if (j.contains("reduction") && !j.at("reduction").is_null())
    r.reduction = j.at("reduction").get<double>();
  r.time_baseline = j.at("time_baseline").get<double>();
  r.time_strong = j.at("time_strong").get<double>();
  r.tgap_baseline = j.at("tgap_baseline").get<double>();
  r.tgap_strong = j.at("tgap_strong").get<double>();
  r.nodes_baseline = j.at("nodes_baseline").get<long>();
  r.nodes_strong = j.at("nodes_strong").get<long>();
  r.cuts_strong = j.at("cuts_strong").get<long>();
  return r;
}

}  // namespace

std::string emit_table(const std::vector<ExperimentRow>& rows, TableFormat format) {
  std::ostringstream os;
  switch (format) {
    case TableFormat::CSV: {
      os << kColumns << "\n";
      for (const auto& r : rows) {
        os << r.instance << "," << fmt(r.best_objective) << "," << fmt(r.igap_baseline) << ","
           << fmt(r.igap_strong) << "," << (r.reduction ? fmt(*r.reduction) : std::string())
           << "," << fmt(r.time_baseline) << "," << fmt(r.time_strong) << ","
           << fmt(r.tgap_baseline) << "," << fmt(r.tgap_strong) << "," << r.nodes_baseline << ","
           << r.nodes_strong << "," << r.cuts_strong << "\n";
      }
      break;
    }
    case TableFormat::MD: {
      os << "| instance | objective | IGap base % | IGap strong % | reduction % | time base s | "
            "time strong s | nodes base | nodes strong | cuts |\n";
      os << "|---|---|---|---|---|---|---|---|---|---|\n";
      os << std::fixed << std::setprecision(2);
      for (const auto& r : rows) {
        os << "| " << r.instance << " | " << r.best_objective << " | " << r.igap_baseline
           << " | " << r.igap_strong << " | ";
        if (r.reduction) os << *r.reduction;
        else os << "-";
        os << " | " << r.time_baseline << " | " << r.time_strong << " | " << r.nodes_baseline
           << " | " << r.nodes_strong << " | " << r.cuts_strong << " |\n";
      }
      break;
    }
    case TableFormat::JSON: {
      nlohmann::json j = nlohmann::json::array();
      for (const auto& r : rows) j.push_back(to_json(r));
      os << j.dump(2) << "\n";
      break;
    }
  }
  return os.str();
}

void write_table(const std::string& path, const std::vector<ExperimentRow>& rows,
                 TableFormat format) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << emit_table(rows, format);
}

std::vector<ExperimentRow> parse_table_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::vector<ExperimentRow> rows;
  bool header = true;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (header) {
      header = false;
      continue;
    }
    std::vector<std::string> f;
    std::string cur;
    for (char ch : line) {
      if (ch == ',') {
        f.push_back(cur);
        cur.clear();
      } else if (ch != '\r') {
        cur += ch;
      }
    }
    f.push_back(cur);
    if (f.size() < 12) throw std::runtime_error("short experiment row: " + line);
    ExperimentRow r;
    r.instance = f[0];
    r.best_objective = std::stod(f[1]);
    r.igap_baseline = std::stod(f[2]);
    r.igap_strong = std::stod(f[3]);
    if (!f[4].empty()) r.reduction = std::stod(f[4]);
    r.time_baseline = std::stod(f[5]);
    r.time_strong = std::stod(f[6]);
    r.tgap_baseline = std::stod(f[7]);
    r.tgap_strong = std::stod(f[8]);
    r.nodes_baseline = std::stol(f[9]);
    r.nodes_strong = std::stol(f[10]);
    r.cuts_strong = std::stol(f[11]);
    rows.push_back(std::move(r));
  }
  return rows;
}

std::vector<ExperimentRow> parse_table_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  std::vector<ExperimentRow> rows;
  for (const auto& item : j) rows.push_back(from_json(item));
  return rows;
}

std::vector<ExperimentRow> read_table(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  std::string text = buf.str();
  if (!text.empty() && (text[0] == '[' || text[0] == '{')) return parse_table_json(text);
  return parse_table_csv(text);
}

}  // namespace ucpoly
