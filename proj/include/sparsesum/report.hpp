#pragma once

// Tabular output shared by the CLI and the Python module. Machine formats
// carry 10 significant digits; CSV and JSON are generated from the same
// rounded values so they always agree.

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "sparsesum/experiments.hpp"

namespace sparsesum::report {

enum class Format { Text, Csv, Json };

Format parse_format(const std::string& name);

struct Table {
  std::string title;
  std::vector<std::string> columns;
  std::vector<std::vector<std::optional<double>>> rows;
  std::vector<std::pair<std::string, double>> meta;
};

/// Round to 10 significant digits.
double round_sig10(double v);

void write(std::ostream& out, const Table& table, Format format);

Table zeta_table(const std::vector<experiments::ZetaRow>& rows);
Table curve_table(const std::string& title, double a, const experiments::Curve& curve);

/// Fixed-width text version of the zeta table with 4 decimals.
void write_zeta_text(std::ostream& out, const std::vector<experiments::ZetaRow>& rows);

}  // namespace sparsesum::report
