#include "mck/trimatrix.hpp"

#include <stdexcept>

namespace mck {

const char* orientation_name(Orientation o) {
  switch (o) {
    case Orientation::LowerEven: return "lower-even";
    case Orientation::UpperEven: return "upper-even";
    default: return "lower";
  }
}

TriMatrix::TriMatrix(int size, Orientation o, std::string spec)
    : size_(size), orient_(o), spec_(std::move(spec)) {
  if (size < 1) throw std::invalid_argument("TriMatrix: size must be >= 1");
}

bool TriMatrix::pattern_ok(int row, int col) const {
  if (row < 0 || col < 0 || row >= size_ || col >= size_) return false;
  switch (orient_) {
    case Orientation::LowerEven:
      return col <= row && (row - col) % 2 == 0;
    case Orientation::UpperEven:
      return col >= row && (col - row) % 2 == 0;
    default:
      return col <= row;
  }
}

RationalExpr TriMatrix::at(int row, int col) const {
  if (row < 0 || col < 0 || row >= size_ || col >= size_)
    throw std::out_of_range("TriMatrix::at: index out of range");
  auto it = entries_.find({row, col});
  return it == entries_.end() ? RationalExpr() : it->second;
}

void TriMatrix::set(int row, int col, RationalExpr value) {
  if (!pattern_ok(row, col))
    throw std::invalid_argument("TriMatrix::set: position outside pattern");
  if (value.is_zero())
    entries_.erase({row, col});
  else
    entries_[{row, col}] = std::move(value);
}

TriMatrix TriMatrix::mul(const TriMatrix& o) const {
  if (size_ != o.size_)
    throw std::invalid_argument("TriMatrix::mul: size mismatch");
  if (orient_ != o.orient_)
    throw std::invalid_argument("TriMatrix::mul: orientation mismatch");
  TriMatrix out(size_, orient_, spec_);
  std::map<std::pair<int, int>, RationalExpr> acc;
  for (const auto& [ij, a] : entries_) {
    for (const auto& [jk, b] : o.entries_) {
      if (jk.first != ij.second) continue;
      auto key = std::make_pair(ij.first, jk.second);
      auto it = acc.find(key);
      if (it == acc.end())
        acc.emplace(key, a * b);
      else
        it->second = it->second + a * b;
    }
  }
  for (auto& [key, v] : acc)
    if (!v.is_zero()) out.set(key.first, key.second, std::move(v));
  return out;
}

bool TriMatrix::is_identity() const {
  const RationalExpr one(1);
  for (const auto& [key, v] : entries_) {
    if (key.first != key.second) return false;
    if (!(v == one)) return false;
  }
  for (int i = 0; i < size_; ++i)
    if (entries_.find({i, i}) == entries_.end()) return false;
  return true;
}

}  // namespace mck
