#pragma once

#include <compare>
#include <string>
#include <vector>

namespace mck {

// Integer partition: weakly decreasing positive parts, trailing zeros
// trimmed on construction.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);
  static Partition one_column(int r);

  const std::vector<int>& parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  int weight() const;
  // Part i (0-based); zero beyond the length.
  int part(int i) const {
    return i >= 0 && i < length() ? parts_[static_cast<size_t>(i)] : 0;
  }
  bool empty() const { return parts_.empty(); }

  friend auto operator<=>(const Partition&, const Partition&) = default;

  // "[]", "[2,1]"
  std::string str() const;

 private:
  std::vector<int> parts_;
};

// Inclusive dominance order: every prefix sum of mu is bounded by the
// corresponding prefix sum of lambda (parts padded with zeros). Weights may
// differ; dominance then forces |mu| <= |lambda|.
bool dominance_leq(const Partition& mu, const Partition& lambda);

// All partitions mu with length <= n and mu <= lambda in the inclusive
// dominance order, sorted in the linear extension used by triangular solves:
// weight descending, then lexicographically descending. lambda itself is
// first.
std::vector<Partition> dominated_set(const Partition& lambda, int n);

// Classical same-weight dominance for the type A oracle: |mu| == |lambda|
// and prefix sums bounded.
bool dominance_leq_strict_weight(const Partition& mu, const Partition& lambda);

// Partitions of the same weight as lambda, length <= n, dominated by lambda,
// in the same linear extension (weights tie, so lex descending).
std::vector<Partition> dominated_set_same_weight(const Partition& lambda,
                                                 int n);

}  // namespace mck
