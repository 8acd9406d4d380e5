#include "mck/serialize.hpp"

#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace mck {

namespace {

using nlohmann::json;

std::string int_entry(const RationalExpr& e, const char* what) {
  if (!e.is_rational() || !e.to_rational().is_integer())
    throw std::invalid_argument(std::string(what) +
                                ": CSV requires integer entries");
  return e.to_rational().str();
}

std::string csv_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += "\"\"";
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string matrix_json(const std::string& kind, const TriMatrix& m) {
  json doc;
  doc["kind"] = kind;
  doc["size"] = m.size();
  doc["orientation"] = orientation_name(m.orientation());
  doc["spec"] = m.spec();
  doc["entries"] = json::array();
  for (const auto& [pos, value] : m.entries())
    doc["entries"].push_back(
        {{"row", pos.first}, {"col", pos.second}, {"value", value.str()}});
  return doc.dump(2) + "\n";
}

std::string matrix_csv(const TriMatrix& m) {
  std::ostringstream os;
  for (int r = 0; r < m.size(); ++r) {
    for (int c = 0; c < m.size(); ++c) {
      if (c) os << ",";
      os << int_entry(m.at(r, c), "matrix_csv");
    }
    os << "\n";
  }
  return os.str();
}

std::string matrix_pretty(const std::string& kind, const TriMatrix& m) {
  std::ostringstream os;
  os << kind << " size=" << m.size()
     << " orientation=" << orientation_name(m.orientation())
     << " spec=" << m.spec() << "\n";
  for (const auto& [pos, value] : m.entries())
    os << "  (" << pos.first << ", " << pos.second << ") " << value.str()
       << "\n";
  return os.str();
}

std::string table_json(const DenseTable& tbl) {
  json doc;
  doc["kind"] = tbl.kind;
  doc["size"] = tbl.rows;
  doc["orientation"] = "dense";
  doc["spec"] = "";
  doc["entries"] = json::array();
  for (int r = 0; r < tbl.rows; ++r)
    for (int c = 0; c < tbl.cols; ++c)
      doc["entries"].push_back(
          {{"row", r}, {"col", c}, {"value", tbl.cells[r][c].str()}});
  return doc.dump(2) + "\n";
}

std::string table_csv(const DenseTable& tbl) {
  std::ostringstream os;
  for (int r = 0; r < tbl.rows; ++r) {
    for (int c = 0; c < tbl.cols; ++c) {
      if (c) os << ",";
      os << int_entry(tbl.cells[r][c], "table_csv");
    }
    os << "\n";
  }
  return os.str();
}

std::string table_pretty(const DenseTable& tbl) {
  std::ostringstream os;
  os << tbl.kind << " " << tbl.rows << "x" << tbl.cols << "\n";
  for (int r = 0; r < tbl.rows; ++r) {
    os << " ";
    for (int c = 0; c < tbl.cols; ++c) os << " " << tbl.cells[r][c].str();
    os << "\n";
  }
  return os.str();
}

std::string report_json(const Report& rep) {
  json doc;
  doc["checks"] = json::array();
  for (const auto& r : rep)
    doc["checks"].push_back({{"id", r.id},
                             {"status", status_name(r.status)},
                             {"detail", r.detail}});
  return doc.dump(2) + "\n";
}

std::string report_csv(const Report& rep) {
  std::ostringstream os;
  os << "id,status,detail\n";
  for (const auto& r : rep)
    os << csv_quote(r.id) << "," << status_name(r.status) << ","
       << csv_quote(r.detail) << "\n";
  return os.str();
}

std::string report_pretty(const Report& rep) {
  std::ostringstream os;
  for (const auto& r : rep) {
    os << "[" << status_name(r.status) << "] " << r.id;
    if (!r.detail.empty()) os << ": " << r.detail;
    os << "\n";
  }
  return os.str();
}

}  // namespace mck
