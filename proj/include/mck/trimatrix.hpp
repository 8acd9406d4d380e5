#pragma once

#include <map>
#include <string>
#include <utility>

#include "mck/rational_expr.hpp"

namespace mck {

// Sparsity pattern of a truncated transition matrix. LowerEven keeps entries
// (r, r-2i), UpperEven keeps (r, r+2i), Lower keeps the full lower triangle
// including the diagonal.
enum class Orientation { LowerEven, UpperEven, Lower };

const char* orientation_name(Orientation o);

class TriMatrix {
 public:
  TriMatrix(int size, Orientation o, std::string spec = "generic");

  int size() const { return size_; }
  Orientation orientation() const { return orient_; }
  const std::string& spec() const { return spec_; }
  const std::map<std::pair<int, int>, RationalExpr>& entries() const {
    return entries_;
  }

  bool pattern_ok(int row, int col) const;

  // Reads any in-range position; positions outside the pattern are zero.
  RationalExpr at(int row, int col) const;

  // Writes must respect the pattern; zero values are dropped.
  void set(int row, int col, RationalExpr value);

  TriMatrix mul(const TriMatrix& o) const;
  bool is_identity() const;

 private:
  int size_;
  Orientation orient_;
  std::string spec_;
  std::map<std::pair<int, int>, RationalExpr> entries_;
};

}  // namespace mck
