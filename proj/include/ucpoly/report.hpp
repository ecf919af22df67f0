#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace ucpoly {

// ---------------------------------------------------------------------------
// Experiment rows and table emission. Percent values keep full precision in
// files; display rounding happens only in the markdown view.
// ---------------------------------------------------------------------------

struct ExperimentRow {
  std::string instance;
  double best_objective = 0.0;       // Z_MILP
  double igap_baseline = 0.0;        // percent
  double igap_strong = 0.0;          // percent
  std::optional<double> reduction;   // percent; absent when baseline gap is 0
  double time_baseline = 0.0;
  double time_strong = 0.0;
  double tgap_baseline = 0.0;        // percent at termination
  double tgap_strong = 0.0;
  long nodes_baseline = 0;
  long nodes_strong = 0;
  long cuts_strong = 0;
};

enum class TableFormat { CSV, MD, JSON };

std::string emit_table(const std::vector<ExperimentRow>& rows, TableFormat format);
void write_table(const std::string& path, const std::vector<ExperimentRow>& rows,
                 TableFormat format);

std::vector<ExperimentRow> parse_table_csv(const std::string& text);
std::vector<ExperimentRow> parse_table_json(const std::string& text);
std::vector<ExperimentRow> read_table(const std::string& path);

}  // namespace ucpoly
