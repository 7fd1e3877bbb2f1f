#include "sparsesum/report.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <iomanip>

#include <json.hpp>

#include "sparsesum/error.hpp"

namespace sparsesum::report {

namespace {

std::string sig10(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

}  // namespace

Format parse_format(const std::string& name) {
  if (name == "json") return Format::Json;
  if (name == "csv") return Format::Csv;
  if (name == "text") return Format::Text;
  throw Error(ErrorKind::OutOfRange, "unknown format '" + name + "'");
}

double round_sig10(double v) {
  if (!std::isfinite(v)) return v;
  return std::strtod(sig10(v).c_str(), nullptr);
}

void write(std::ostream& out, const Table& table, Format format) {
  switch (format) {
    case Format::Csv: {
      for (std::size_t i = 0; i < table.columns.size(); ++i) {
        out << (i ? "," : "") << table.columns[i];
      }
      out << '\n';
      for (const auto& row : table.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
          if (i) out << ',';
          if (row[i]) out << sig10(*row[i]);
        }
        out << '\n';
      }
      return;
    }
    case Format::Json: {
      nlohmann::ordered_json doc;
      doc["title"] = table.title;
      auto meta = nlohmann::ordered_json::object();
      for (const auto& [k, v] : table.meta) meta[k] = round_sig10(v);
      doc["meta"] = meta;
      doc["columns"] = table.columns;
      auto rows = nlohmann::ordered_json::array();
      for (const auto& row : table.rows) {
        auto r = nlohmann::ordered_json::array();
        for (const auto& v : row) {
          if (v) {
            r.push_back(round_sig10(*v));
          } else {
            r.push_back(nullptr);
          }
        }
        rows.push_back(std::move(r));
      }
      doc["rows"] = std::move(rows);
      out << doc.dump(2) << '\n';
      return;
    }
    case Format::Text: {
      out << table.title << '\n';
      for (const auto& [k, v] : table.meta) out << "  " << k << " = " << sig10(v) << '\n';
      for (const auto& c : table.columns) out << std::setw(18) << c;
      out << '\n';
      for (const auto& row : table.rows) {
        for (const auto& v : row) out << std::setw(18) << (v ? sig10(*v) : std::string("-"));
        out << '\n';
      }
      return;
    }
  }
}

Table zeta_table(const std::vector<experiments::ZetaRow>& rows) {
  Table t{"zeta", {"p", "S", "zeta", "delta", "M", "cutoff", "efficiency"}, {}, {}};
  for (const auto& r : rows) {
    t.rows.push_back({r.p, r.sum, r.reference, r.delta, static_cast<double>(r.node_count),
                      static_cast<double>(r.cutoff), r.efficiency});
  }
  return t;
}

Table curve_table(const std::string& title, double a, const experiments::Curve& curve) {
  Table t{title, {"x", "approx", "exact", "error"}, {}, {}};
  t.meta = {{"a", a},
            {"node_count", static_cast<double>(curve.node_count)},
            {"cutoff", static_cast<double>(curve.cutoff)}};
  for (const auto& r : curve.rows) t.rows.push_back({r.x, r.approx, r.exact, r.error});
  return t;
}

void write_zeta_text(std::ostream& out, const std::vector<experiments::ZetaRow>& rows) {
  char line[160];
  std::snprintf(line, sizeof line, "%6s %10s %10s %10s %6s %12s %12s\n", "p", "zeta(p)", "S",
                "Delta", "M", "cutoff", "c");
  out << line;
  for (const auto& r : rows) {
    // -0.0000 prints as 0.0000
    const auto four = [](std::optional<double> v) {
      if (!v) return std::string("-");
      char b[32];
      double x = std::round(*v * 1e4) / 1e4;
      if (x == 0.0) x = 0.0;
      std::snprintf(b, sizeof b, "%.4f", x);
      return std::string(b);
    };
    std::snprintf(line, sizeof line, "%6.2f %10s %10.4f %10s %6zu %12lld %12.4g\n", r.p,
                  four(r.reference).c_str(), r.sum, four(r.delta).c_str(), r.node_count,
                  static_cast<long long>(r.cutoff), r.efficiency);
    out << line;
  }
}

}  // namespace sparsesum::report
