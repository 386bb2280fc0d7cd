#include "fhzeta/report.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <ostream>

namespace fhzeta {

std::string format_double(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

double principal_phase(cplx z) {
  const double p = std::arg(z);
  return p <= -std::numbers::pi ? std::numbers::pi : p;
}

GridRow make_row(ComplexPoint s, cplx value) {
  return {s.sigma, s.t, value.real(), value.imag(), std::abs(value), principal_phase(value)};
}

std::vector<GridRow> grid_rows(const std::vector<GridSample>& samples) {
  std::vector<GridRow> rows;
  rows.reserve(samples.size());
  for (const auto& g : samples) {
    if (g.valid) {
      rows.push_back(make_row(g.s, g.value));
    } else {
      const double nan = std::numeric_limits<double>::quiet_NaN();
      rows.push_back({g.s.sigma, g.s.t, nan, nan, nan, nan});
    }
  }
  return rows;
}

json complex_json(cplx z) { return json{{"re", z.real()}, {"im", z.imag()}}; }

json point_json(ComplexPoint s) { return json{{"sigma", s.sigma}, {"t", s.t}}; }

void write_json(std::ostream& os, const Report& report) {
  json doc = json::object();
  doc["metadata"] = report.metadata;
  doc["data"] = report.data;
  os << doc.dump(2) << '\n';
}

void write_csv(std::ostream& os, const json& metadata, const std::vector<std::string>& header,
               const std::vector<std::vector<std::string>>& rows) {
  for (const auto& [key, value] : metadata.items()) {
    os << "# " << key << '=';
    if (value.is_string()) {
      os << value.get<std::string>();
    } else if (value.is_number_float()) {
      os << format_double(value.get<double>());
    } else {
      os << value.dump();
    }
    os << '\n';
  }
  for (std::size_t i = 0; i < header.size(); ++i) os << (i ? "," : "") << header[i];
  os << '\n';
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << row[i];
    os << '\n';
  }
}

std::vector<std::vector<std::string>> grid_csv_rows(const std::vector<GridRow>& rows) {
  std::vector<std::vector<std::string>> out;
  out.reserve(rows.size());
  for (const auto& r : rows) {
    out.push_back({format_double(r.sigma), format_double(r.t), format_double(r.re),
                   format_double(r.im), format_double(r.modulus), format_double(r.phase)});
  }
  return out;
}

}  // namespace fhzeta
