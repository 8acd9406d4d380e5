#include "mck/partition.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace mck {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  std::sort(parts_.begin(), parts_.end(), std::greater<int>());
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  if (!parts_.empty() && parts_.back() < 0)
    throw std::invalid_argument("negative part in partition");
}

Partition Partition::one_column(int r) {
  if (r < 0) throw std::invalid_argument("one_column: r < 0");
  return Partition(std::vector<int>(static_cast<size_t>(r), 1));
}

int Partition::weight() const {
  return std::accumulate(parts_.begin(), parts_.end(), 0);
}

std::string Partition::str() const {
  std::string s = "[";
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(parts_[i]);
  }
  return s + "]";
}

bool dominance_leq(const Partition& mu, const Partition& lambda) {
  int len = std::max(mu.length(), lambda.length());
  int pm = 0, pl = 0;
  for (int i = 0; i < len; ++i) {
    pm += mu.part(i);
    pl += lambda.part(i);
    if (pm > pl) return false;
  }
  return true;
}

bool dominance_leq_strict_weight(const Partition& mu, const Partition& lambda) {
  return mu.weight() == lambda.weight() && dominance_leq(mu, lambda);
}

namespace {

// Partitions with at most n parts, each part <= maxPart, weight <= maxWeight.
void enumerate(int maxPart, int n, int maxWeight, std::vector<int>& cur,
               std::vector<Partition>& out) {
  out.emplace_back(cur);
  if (static_cast<int>(cur.size()) == n) return;
  int hi = cur.empty() ? maxPart : cur.back();
  hi = std::min(hi, maxWeight);
  for (int p = hi; p >= 1; --p) {
    cur.push_back(p);
    enumerate(maxPart, n, maxWeight - p, cur, out);
    cur.pop_back();
  }
}

void sort_linear_extension(std::vector<Partition>& v) {
  std::sort(v.begin(), v.end(), [](const Partition& x, const Partition& y) {
    if (x.weight() != y.weight()) return x.weight() > y.weight();
    return x > y;  // lexicographic on parts, descending
  });
}

}  // namespace

std::vector<Partition> dominated_set(const Partition& lambda, int n) {
  if (lambda.length() > n)
    throw std::invalid_argument("dominated_set: length(lambda) > n");
  std::vector<Partition> all;
  std::vector<int> cur;
  enumerate(lambda.part(0), n, lambda.weight(), cur, all);
  std::vector<Partition> out;
  for (auto& mu : all)
    if (dominance_leq(mu, lambda)) out.push_back(mu);
  sort_linear_extension(out);
  return out;
}

std::vector<Partition> dominated_set_same_weight(const Partition& lambda,
                                                 int n) {
  std::vector<Partition> out;
  for (auto& mu : dominated_set(lambda, n))
    if (mu.weight() == lambda.weight()) out.push_back(mu);
  return out;
}

}  // namespace mck
