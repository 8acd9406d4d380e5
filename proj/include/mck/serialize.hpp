#pragma once

#include <string>
#include <vector>

#include "mck/rational_expr.hpp"
#include "mck/report.hpp"
#include "mck/trimatrix.hpp"

namespace mck {

// Dense rectangular table (the displayed triangles are emitted row by row,
// column index j running over half-steps of the row length).
struct DenseTable {
  std::string kind;
  int rows = 0;
  int cols = 0;
  std::vector<std::vector<RationalExpr>> cells;
};

// Structured document forms shared by the CLI. JSON uses the schema
// {"kind", "size", "orientation", "spec", "entries": [{"row", "col",
// "value"}]} with values in the canonical text form; CSV is only defined for
// matrices whose stored entries are integers. All emitters are deterministic
// (entries ordered by row, then column).
std::string matrix_json(const std::string& kind, const TriMatrix& m);
std::string matrix_csv(const TriMatrix& m);
std::string matrix_pretty(const std::string& kind, const TriMatrix& m);

std::string table_json(const DenseTable& tbl);
std::string table_csv(const DenseTable& tbl);
std::string table_pretty(const DenseTable& tbl);

// Reports carry {id, status, detail} per check; timing is deliberately
// omitted so identical configurations emit identical bytes.
std::string report_json(const Report& rep);
std::string report_csv(const Report& rep);
std::string report_pretty(const Report& rep);

}  // namespace mck
