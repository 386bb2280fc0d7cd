#pragma once

// Machine-readable reports. A report is a metadata object (parameters,
// tolerances, per-point representation) plus a data body; only the body is
// covered by the byte-for-byte determinism guarantee.

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "fhzeta/grid.hpp"

namespace fhzeta {

using json = nlohmann::ordered_json;

struct Report {
  json metadata = json::object();
  json data = json::object();
};

/// %.17g, with "nan", "inf", "-inf" for non-finite values.
std::string format_double(double x);

/// One GridExport row.
struct GridRow {
  double sigma = 0.0;
  double t = 0.0;
  double re = 0.0;
  double im = 0.0;
  double modulus = 0.0;
  double phase = 0.0;  // (-π, π]
};

/// arg z mapped into (-π, π].
double principal_phase(cplx z);

GridRow make_row(ComplexPoint s, cplx value);
/// One row per sample in grid order; invalid samples carry NaN values.
std::vector<GridRow> grid_rows(const std::vector<GridSample>& samples);

json complex_json(cplx z);
json point_json(ComplexPoint s);

/// {"metadata": ..., "data": ...}, two-space indent, trailing newline.
void write_json(std::ostream& os, const Report& report);

/// '#'-prefixed "key=value" metadata lines, then a header and rows.
/// Metadata values that are objects or arrays are written as compact JSON.
void write_csv(std::ostream& os, const json& metadata, const std::vector<std::string>& header,
               const std::vector<std::vector<std::string>>& rows);

inline const std::vector<std::string> kGridHeader = {"sigma", "t", "re", "im", "modulus", "phase"};

std::vector<std::vector<std::string>> grid_csv_rows(const std::vector<GridRow>& rows);

}  // namespace fhzeta
