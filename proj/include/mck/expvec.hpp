#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <cstdlib>
#include <string>

namespace mck {

// Fixed parameter alphabet for coefficient polynomials. The order below is
// also the lexicographic order used by canonical text forms.
enum Var : int { VA = 0, VB, VC, VD, VQ, VT, VU, VS };
inline constexpr int kNumVars = 8;
inline constexpr const char* kVarNames[kNumVars] = {"a", "b", "c", "d",
                                                    "q", "t", "u", "s"};

int var_from_name(const std::string& name);

// Exponent vector over the fixed alphabet. Entries may be negative while an
// expression is being assembled (Laurent terms); RationalExpr normalization
// clears them.
struct ExpVec {
  std::array<int32_t, kNumVars> e{};

  friend auto operator<=>(const ExpVec&, const ExpVec&) = default;

  ExpVec operator+(const ExpVec& o) const {
    ExpVec r;
    for (int i = 0; i < kNumVars; ++i) r.e[i] = e[i] + o.e[i];
    return r;
  }
  ExpVec operator-(const ExpVec& o) const {
    ExpVec r;
    for (int i = 0; i < kNumVars; ++i) r.e[i] = e[i] - o.e[i];
    return r;
  }
  ExpVec operator-() const {
    ExpVec r;
    for (int i = 0; i < kNumVars; ++i) r.e[i] = -e[i];
    return r;
  }
  ExpVec operator*(int k) const {
    ExpVec r;
    for (int i = 0; i < kNumVars; ++i) r.e[i] = e[i] * k;
    return r;
  }
  bool is_zero() const {
    for (int i = 0; i < kNumVars; ++i)
      if (e[i] != 0) return false;
    return true;
  }
  bool nonneg() const {
    for (int i = 0; i < kNumVars; ++i)
      if (e[i] < 0) return false;
    return true;
  }

  static ExpVec unit(int var, int power = 1) {
    ExpVec r;
    r.e[var] = power;
    return r;
  }
};

}  // namespace mck
