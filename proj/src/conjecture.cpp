#include "mck/conjecture.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <stdexcept>
#include <string>
#include <utility>

#include "mck/koornwinder.hpp"
#include "mck/qseries.hpp"

namespace mck {

namespace {

const RationalExpr kOne(Rational(1));

using Key = std::vector<int>;
using ConeMap = std::map<Key, RationalExpr>;

int key_total(const Key& k) {
  int s = 0;
  for (int v : k) s += v;
  return s;
}

std::string key_str(const Key& k) {
  std::string s = "(";
  for (size_t i = 0; i < k.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(k[i]);
  }
  return s + ")";
}

// Simple-root coordinates of a cone exponent kappa (the monomial x^{-kappa}):
// prefix sums for the first n-1 coordinates, half the total for the last.
// Throws when kappa lies outside the cone; every call site passes lattice
// vectors that belong there, so a violation is an internal error.
Key mvec(int n, const std::vector<int>& kappa) {
  Key m(n, 0);
  int run = 0;
  for (int l = 0; l < n; ++l) {
    run += kappa[l];
    if (l < n - 1) m[l] = run;
  }
  if (run % 2 != 0) throw std::logic_error("mvec: odd lattice vector");
  m[n - 1] = run / 2;
  for (int v : m)
    if (v < 0) throw std::logic_error("mvec: exponent outside the cone");
  return m;
}

std::vector<int> kappa_of_key(const Key& k) {
  const int n = static_cast<int>(k.size());
  std::vector<int> kappa(n, 0);
  for (int i = 0; i + 1 < n; ++i) kappa[i] = k[i] - (i ? k[i - 1] : 0);
  kappa[n - 1] = 2 * k[n - 1] - (n > 1 ? k[n - 2] : 0);
  return kappa;
}

// All nonnegative tuples v with sum_i w[i] v[i] <= budget.
void for_each_weighted(const std::vector<int>& w, int budget,
                       const std::function<void(const std::vector<int>&)>& f) {
  std::vector<int> v(w.size(), 0);
  std::function<void(size_t, int)> rec = [&](size_t pos, int left) {
    if (pos == w.size()) {
      f(v);
      return;
    }
    for (int m = 0; m * w[pos] <= left; ++m) {
      v[pos] = m;
      rec(pos + 1, left - m * w[pos]);
    }
    v[pos] = 0;
  };
  rec(0, budget);
}

void cone_add(ConeMap& m, const Key& k, const RationalExpr& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = m.emplace(k, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) m.erase(it);
  }
}

ConeMap cone_mul(const ConeMap& a, const ConeMap& b, int order) {
  ConeMap r;
  for (const auto& [ka, ca] : a)
    for (const auto& [kb, cb] : b) {
      Key k(ka.size());
      int tot = 0;
      for (size_t i = 0; i < k.size(); ++i) {
        k[i] = ka[i] + kb[i];
        tot += k[i];
      }
      if (tot <= order) cone_add(r, k, ca * cb);
    }
  return r;
}

// Truncated expansion of (1 - beta v)/(1 - gamma v) in the cone monomial v.
ConeMap ratio_series(int n, const Key& v, const RationalExpr& beta,
                     const RationalExpr& gamma, int order) {
  ConeMap f;
  f[Key(n, 0)] = kOne;
  const int step = key_total(v);
  RationalExpr c = gamma - beta;
  for (int m = 1; m * step <= order; ++m) {
    Key k(n);
    for (int i = 0; i < n; ++i) k[i] = m * v[i];
    cone_add(f, k, c);
    c = c * gamma;
  }
  return f;
}

// Ascent and descent coefficient functions of the scaled operator at the
// self-dual point, expanded on the ladder cone. The four Askey-Wilson
// factors pair into (1 - t x_i^2)(1 - qt x_i^2) there, so every factor of
// the coefficient is supported on the root lattice and the expansion closes.
struct LadderOp {
  std::vector<ConeMap> A, B;
  std::vector<RationalExpr> A0, B0;
};

LadderOp build_ladder_op(int n, const RationalExpr& q, const RationalExpr& t,
                         int order) {
  LadderOp op;
  op.A.resize(n);
  op.B.resize(n);
  op.A0.resize(n);
  op.B0.resize(n);
  auto unit = [&](int i, int ci, int j, int cj) {
    std::vector<int> kappa(n, 0);
    kappa[i] += ci;
    if (j >= 0) kappa[j] += cj;
    return mvec(n, kappa);
  };
  const RationalExpr tinv = t.inv();
  for (int i = 0; i < n; ++i) {
    const Key u2 = unit(i, 2, -1, 0);
    ConeMap a;
    a[Key(n, 0)] = t * t;
    a = cone_mul(a, ratio_series(n, u2, tinv, kOne, order), order);
    a = cone_mul(a, ratio_series(n, u2, (q * t).inv(), q.inv(), order), order);
    ConeMap b;
    b[Key(n, 0)] = kOne;
    b = cone_mul(b, ratio_series(n, u2, t, kOne, order), order);
    b = cone_mul(b, ratio_series(n, u2, q * t, q, order), order);
    for (int j = 0; j < n; ++j) {
      if (j == i) continue;
      const Key vij = unit(i, 1, j, 1);
      a = cone_mul(a, ratio_series(n, vij, tinv, kOne, order), order);
      for (auto& [k, c] : a) c = c * t;
      b = cone_mul(b, ratio_series(n, vij, t, kOne, order), order);
      if (j > i) {
        const Key w = unit(i, 1, j, -1);
        a = cone_mul(a, ratio_series(n, w, tinv, kOne, order), order);
        for (auto& [k, c] : a) c = c * t;
        b = cone_mul(b, ratio_series(n, w, t, kOne, order), order);
      } else {
        const Key w = unit(j, 1, i, -1);
        a = cone_mul(a, ratio_series(n, w, t, kOne, order), order);
        b = cone_mul(b, ratio_series(n, w, tinv, kOne, order), order);
        for (auto& [k, c] : b) c = c * t;
      }
    }
    op.A0[i] = a.at(Key(n, 0));
    op.B0[i] = b.at(Key(n, 0));
    op.A[i] = std::move(a);
    op.B[i] = std::move(b);
  }
  return op;
}

std::string expr_brief(const RationalExpr& e) {
  std::string s = e.str();
  if (s.size() > 100) s = s.substr(0, 100) + "...";
  return s;
}

std::string xexp_str(const XExp& e) {
  std::string s = "(";
  for (size_t i = 0; i < e.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(e[i]);
  }
  return s + ")";
}

std::string first_diff(const LaurentX& a, const LaurentX& b) {
  std::map<XExp, RationalExpr> keys;
  for (const auto& [e, c] : a.terms()) keys[e] = c;
  for (const auto& [e, c] : b.terms()) keys.emplace(e, RationalExpr());
  for (const auto& [e, c] : keys) {
    const RationalExpr bc = b.coeff(e);
    if (!(a.coeff(e) == bc))
      return "x^" + xexp_str(e) + ": " + expr_brief(a.coeff(e)) + " vs " +
             expr_brief(bc);
  }
  return "polynomials differ";
}

// "" when the two coefficient maps agree on every key with total <= order.
std::string series_diff(const std::map<Key, RationalExpr>& a,
                        const std::map<Key, RationalExpr>& b, int order) {
  std::map<Key, char> keys;
  for (const auto& [k, c] : a) keys[k] = 0;
  for (const auto& [k, c] : b) keys[k] = 0;
  for (const auto& [k, dummy] : keys) {
    if (key_total(k) > order) continue;
    const auto ia = a.find(k);
    const auto ib = b.find(k);
    const RationalExpr ca = (ia == a.end()) ? RationalExpr() : ia->second;
    const RationalExpr cb = (ib == b.end()) ? RationalExpr() : ib->second;
    if (!(ca == cb))
      return "key " + key_str(k) + ": " + expr_brief(ca) + " vs " +
             expr_brief(cb);
  }
  return "";
}

KoornwinderParams ladder_point(const Rational& u_q, const Rational& u_t) {
  KoornwinderParams prm;
  prm.a = RationalExpr(u_t);
  prm.b = -prm.a;
  prm.c = RationalExpr(u_q * u_t);
  prm.d = -prm.c;
  prm.q = RationalExpr(u_q * u_q);
  prm.t = RationalExpr(u_t * u_t);
  return prm;
}

// Type A operator, cleared over the Vandermonde determinant.
LaurentX apply_A_op(const LaurentX& f, const RationalExpr& q,
                    const RationalExpr& t) {
  const int n = f.n();
  if (n == 1) return f.q_shift(0, q);
  auto lin = [&](int i, const RationalExpr& ci, int j, const RationalExpr& cj) {
    LaurentX r(n);
    XExp e(n, 0);
    e[i] = 1;
    r.add_term(e, ci);
    XExp e2(n, 0);
    e2[j] = 1;
    r.add_term(e2, cj);
    return r;
  };
  const RationalExpr minus(Rational(-1));
  LaurentX cleared(n);
  for (int i = 0; i < n; ++i) {
    LaurentX term = f.q_shift(i, q);
    for (int j = 0; j < n; ++j)
      if (j != i) term = term * lin(i, t, j, minus);
    for (int k = 0; k < n; ++k)
      for (int l = k + 1; l < n; ++l)
        if (k != i && l != i) term = term * lin(k, kOne, l, minus);
    cleared += (i % 2) ? -term : term;
  }
  for (int k = 0; k < n; ++k)
    for (int l = k + 1; l < n; ++l)
      cleared = cleared.divide_exact(lin(k, kOne, l, minus));
  return cleared;
}

// Symmetric-group orbit sum of x^mu.
LaurentX msym_A(const Partition& mu, int n) {
  std::vector<int> e(n, 0);
  for (int i = 0; i < mu.length(); ++i) e[i] = mu.part(i);
  std::sort(e.begin(), e.end());
  LaurentX m(n);
  do {
    m.add_term(XExp(e.begin(), e.end()), kOne);
  } while (std::next_permutation(e.begin(), e.end()));
  return m;
}

RationalExpr eigen_A(const Partition& mu, int n, const RationalExpr& q,
                     const RationalExpr& t) {
  RationalExpr d;
  for (int i = 0; i < n; ++i) d += q.pow(mu.part(i)) * t.pow(n - 1 - i);
  return d;
}

Partition dominant_A(const XExp& e) {
  std::vector<int> p(e.begin(), e.end());
  std::sort(p.begin(), p.end(), std::greater<int>());
  while (!p.empty() && p.back() == 0) p.pop_back();
  return Partition(p);
}

struct Verdict {
  CheckStatus status = CheckStatus::Pass;
  std::string note;
};

// Conjecture entries always carry the parameter point in `detail`; a thrown
// std::domain_error marks a degenerate draw rather than a falsification.
CheckResult conjecture_entry(const std::string& id, const std::string& ctx,
                             const std::function<Verdict()>& body) {
  CheckResult r;
  r.id = id;
  r.detail = ctx;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    const Verdict v = body();
    r.status = v.status;
    if (!v.note.empty()) r.detail += "; " + v.note;
  } catch (const std::domain_error& ex) {
    r.status = CheckStatus::Inconclusive;
    r.detail += std::string("; degenerate parameter point (") + ex.what() +
                "); resample";
  } catch (const std::exception& ex) {
    r.status = CheckStatus::Fail;
    r.detail += std::string("; exception: ") + ex.what();
  }
  r.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                     std::chrono::steady_clock::now() - t0)
                     .count();
  return r;
}

std::string point_str(const Rational& u_q, const Rational& u_t, int window) {
  return "u_q=" + RationalExpr(u_q).str() + " u_t=" + RationalExpr(u_t).str() +
         " window=" + std::to_string(window);
}

}  // namespace

void TruncSeries::add(const std::vector<int>& key, const RationalExpr& c) {
  if (static_cast<int>(key.size()) != rank)
    throw std::logic_error("TruncSeries::add: wrong key rank");
  if (key_total(key) > order)
    throw std::logic_error("TruncSeries::add: key beyond the truncation");
  cone_add(coef, key, c);
}

RationalExpr TruncSeries::coeff(const std::vector<int>& key) const {
  const auto it = coef.find(key);
  return it == coef.end() ? RationalExpr() : it->second;
}

RationalExpr phi_A_coeff(int n, const std::vector<std::vector<int>>& theta,
                         const std::vector<RationalExpr>& s,
                         const RationalExpr& q, const RationalExpr& t) {
  if (n < 1 || static_cast<int>(theta.size()) != n ||
      static_cast<int>(s.size()) != n)
    throw std::invalid_argument("phi_A_coeff: dimension mismatch");
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(theta[i].size()) != n)
      throw std::invalid_argument("phi_A_coeff: dimension mismatch");
    for (int j = 0; j < n; ++j)
      if ((j <= i && theta[i][j] != 0) || theta[i][j] < 0)
        throw std::invalid_argument(
            "phi_A_coeff: theta must be strict upper triangular, nonnegative");
  }
  if (n == 1) return kOne;
  RationalExpr prod = kOne;
  for (int i = 0; i <= n - 2; ++i) {
    const int thi = theta[i][n - 1];
    for (int j = i; j <= n - 2; ++j) {
      const int thj = theta[j][n - 1];
      prod = prod * qpoch(t * s[j + 1] / s[i], q, thi) /
             qpoch(q * s[j + 1] / s[i], q, thi) *
             qpoch(q.pow(1 - thj) * s[j] / (t * s[i]), q, thi) /
             qpoch(q.pow(-thj) * s[j] / s[i], q, thi);
    }
  }
  std::vector<std::vector<int>> sub(n - 1, std::vector<int>(n - 1, 0));
  std::vector<RationalExpr> shifted(n - 1);
  for (int i = 0; i < n - 1; ++i) {
    for (int j = 0; j < n - 1; ++j) sub[i][j] = theta[i][j];
    shifted[i] = q.pow(-theta[i][n - 1]) * s[i];
  }
  return phi_A_coeff(n - 1, sub, shifted, q, t) * prod;
}

LaurentX macdonald_A(const Partition& lambda, int n, const RationalExpr& q,
                     const RationalExpr& t) {
  if (lambda.length() > n)
    throw std::invalid_argument("macdonald_A: lambda longer than n");
  const std::vector<Partition> basis = dominated_set_same_weight(lambda, n);
  const size_t m = basis.size();
  const RationalExpr d_top = eigen_A(lambda, n, q, t);

  std::vector<std::vector<RationalExpr>> col(m);
  std::vector<LaurentX> msym(m);
  for (size_t v = 0; v < m; ++v) msym[v] = msym_A(basis[v], n);
  for (size_t v = 0; v < m; ++v) {
    const LaurentX img = apply_A_op(msym[v], q, t);
    col[v].assign(m, RationalExpr());
    for (const auto& [e, c] : img.terms()) {
      const Partition mu = dominant_A(e);
      if (!dominance_leq_strict_weight(mu, basis[v]))
        throw std::logic_error("macdonald_A: operator is not triangular");
      bool sorted = true;
      for (size_t p = 0; p + 1 < e.size(); ++p)
        if (e[p] < e[p + 1]) sorted = false;
      if (!sorted) continue;
      for (size_t u = 0; u < m; ++u)
        if (basis[u] == mu) {
          col[v][u] = c;
          break;
        }
    }
  }

  std::vector<RationalExpr> coef(m);
  coef[0] = kOne;
  for (size_t v = 1; v < m; ++v) {
    RationalExpr rhs;
    for (size_t u = 0; u < v; ++u) rhs += col[u][v] * coef[u];
    const RationalExpr gap = d_top - col[v][v];
    if (gap.is_zero())
      throw std::domain_error("macdonald_A: eigenvalue collision in solve");
    coef[v] = rhs / gap;
  }

  LaurentX P(n);
  for (size_t v = 0; v < m; ++v)
    if (!coef[v].is_zero()) P += msym[v].scale(coef[v]);
  if (!(apply_A_op(P, q, t) == P.scale(d_top)))
    throw std::logic_error("macdonald_A: residual is nonzero");
  return P;
}

Report phi_A_eigencheck(int n, const Partition& lambda, const Rational& q,
                        const Rational& t, int order) {
  Report rep;
  rep.push_back(conjecture_entry(
      "phi-A-eigencheck n=" + std::to_string(n) + " " + lambda.str(),
      "q=" + RationalExpr(q).str() + " t=" + RationalExpr(t).str() +
          " order=" + std::to_string(order),
      [&]() -> Verdict {
        if (lambda.length() > n)
          throw std::invalid_argument("phi_A_eigencheck: lambda longer than n");
        const RationalExpr qe{q}, te{t};
        const LaurentX oracle = macdonald_A(lambda, n, qe, te);
        for (const auto& [e, c] : oracle.terms()) {
          int run = 0, wt = 0;
          for (int l = 0; l + 1 < n; ++l) {
            run += lambda.part(l) - e[l];
            wt += run;
          }
          if (wt > order)
            throw std::invalid_argument(
                "phi_A_eigencheck: truncation order below the polynomial "
                "support");
        }
        std::vector<RationalExpr> s(n);
        for (int i = 0; i < n; ++i)
          s[i] = te.pow(n - 1 - i) * qe.pow(lambda.part(i));
        std::vector<std::pair<int, int>> pairs;
        std::vector<int> w;
        for (int i = 0; i < n; ++i)
          for (int j = i + 1; j < n; ++j) {
            pairs.emplace_back(i, j);
            w.push_back(j - i);
          }
        LaurentX phi(n);
        for_each_weighted(w, order, [&](const std::vector<int>& v) {
          std::vector<std::vector<int>> theta(n, std::vector<int>(n, 0));
          XExp e(n, 0);
          for (int i = 0; i < n; ++i) e[i] = lambda.part(i);
          for (size_t p = 0; p < pairs.size(); ++p) {
            theta[pairs[p].first][pairs[p].second] = v[p];
            e[pairs[p].first] -= v[p];
            e[pairs[p].second] += v[p];
          }
          phi.add_term(e, phi_A_coeff(n, theta, s, qe, te));
        });
        if (!(phi == oracle))
          return {CheckStatus::Fail, "mismatch: " + first_diff(phi, oracle)};
        return {};
      }));
  return rep;
}

TruncSeries phi_C_series(int n, const std::vector<RationalExpr>& s,
                         const RationalExpr& q, const RationalExpr& t,
                         int order) {
  if (n < 1 || static_cast<int>(s.size()) != n || order < 0)
    throw std::invalid_argument("phi_C_series: bad arguments");
  const LadderOp op = build_ladder_op(n, q, t, order);
  std::vector<RationalExpr> qlam(n);
  for (int i = 0; i < n; ++i) qlam[i] = s[i] * t.pow(i - n);

  std::vector<Key> keys;
  for_each_weighted(std::vector<int>(n, 1), order,
                    [&](const Key& k) { keys.push_back(k); });
  std::sort(keys.begin(), keys.end(), [](const Key& a, const Key& b) {
    const int ta = key_total(a), tb = key_total(b);
    return ta != tb ? ta < tb : a < b;
  });

  // T_i eigenvalue offsets q^{delta_i(k)} and the diagonal of the operator.
  std::map<Key, std::vector<RationalExpr>> tplus, tminus;
  std::map<Key, RationalExpr> diag;
  for (const Key& k : keys) {
    std::vector<RationalExpr> tp(n), tm(n);
    RationalExpr d;
    for (int i = 0; i < n; ++i) {
      const int prev = i ? k[i - 1] : 0;
      const int delta = (i == n - 1) ? prev - 2 * k[i] : prev - k[i];
      const RationalExpr tau = qlam[i] * q.pow(delta);
      tp[i] = tau - kOne;
      tm[i] = tau.inv() - kOne;
      d += op.A0[i] * tp[i] + op.B0[i] * tm[i];
    }
    tplus[k] = std::move(tp);
    tminus[k] = std::move(tm);
    diag[k] = std::move(d);
  }
  const RationalExpr eps = diag.at(Key(n, 0));

  std::map<Key, RationalExpr> c;
  c[Key(n, 0)] = kOne;
  for (const Key& k : keys) {
    if (key_total(k) == 0) continue;
    RationalExpr rhs;
    Key sub(n, 0);
    std::function<void(int)> rec = [&](int pos) {
      if (pos == n) {
        if (sub == k) return;
        const auto ic = c.find(sub);
        if (ic == c.end() || ic->second.is_zero()) return;
        Key d(n);
        for (int i = 0; i < n; ++i) d[i] = k[i] - sub[i];
        const auto& tp = tplus.at(sub);
        const auto& tm = tminus.at(sub);
        RationalExpr conn;
        for (int i = 0; i < n; ++i) {
          const auto ia = op.A[i].find(d);
          if (ia != op.A[i].end()) conn += ia->second * tp[i];
          const auto ib = op.B[i].find(d);
          if (ib != op.B[i].end()) conn += ib->second * tm[i];
        }
        rhs += ic->second * conn;
        return;
      }
      for (int m = 0; m <= k[pos]; ++m) {
        sub[pos] = m;
        rec(pos + 1);
      }
      sub[pos] = 0;
    };
    rec(0);
    const RationalExpr gap = eps - diag.at(k);
    if (gap.is_zero())
      throw std::domain_error("phi_C_series: spectral gap vanishes");
    c[k] = rhs / gap;
  }

  TruncSeries ts;
  ts.rank = n;
  ts.order = order;
  for (const auto& [k, v] : c) ts.add(k, v);
  return ts;
}

RationalExpr psi_C2_coeff(int th, int mu, int r1, int r2,
                          const RationalExpr& s1, const RationalExpr& s2,
                          const RationalExpr& q, const RationalExpr& t) {
  if (th < 0 || mu < 0 || r1 < 0 || r2 < 0)
    throw std::invalid_argument("psi_C2_coeff: negative index");
  const RationalExpr g = q / t;
  RationalExpr f = qpoch(t, q, th) / qpoch(q, q, th) *
                   qpoch(t * s2 / s1, q, th) / qpoch(q * s2 / s1, q, th) *
                   g.pow(th);
  f = f * qpoch(t, q, mu) / qpoch(q, q, mu) * qpoch(t / (s1 * s2), q, mu) /
      qpoch(q / (s1 * s2), q, mu) * g.pow(mu);
  f = f * qpoch(t / s2, q, mu) / qpoch(q / s2, q, mu) *
      qpoch(q.pow(1 - th) / (t * s2), q, mu) / qpoch(q.pow(-th) / s2, q, mu);
  f = f * qpoch(t / s1, q, mu) / qpoch(q / s1, q, mu) *
      qpoch(q.pow(th + 1) / s1, q, mu) / qpoch(q.pow(th) * t / s1, q, mu);
  f = f * qpoch(t, q, r1) / qpoch(q, q, r1) *
      qpoch(q.pow(th + mu) * t * t / s1, q, r1) /
      qpoch(q.pow(th + mu + 1) * t / s1, q, r1) * g.pow(r1);
  f = f * qpoch(t, q, r2) / qpoch(q, q, r2) *
      qpoch(q.pow(mu - th) * t / s2, q, r2) /
      qpoch(q.pow(mu - th + 1) / s2, q, r2) * g.pow(r2);
  return f;
}

namespace {

// The rank-2 sum regrouped on the ladder cone: the index tuple
// (th, mu, r1, r2) lands on the key (th + mu + 2 r1, mu + r1 + r2), and the
// key total equals th + 2 mu + 3 r1 + r2, so truncation by that weight
// enumerates every tuple contributing below the order.
TruncSeries psi_C2_series(const RationalExpr& s1, const RationalExpr& s2,
                          const RationalExpr& q, const RationalExpr& t,
                          int order) {
  TruncSeries ts;
  ts.rank = 2;
  ts.order = order;
  for_each_weighted({1, 2, 3, 1}, order, [&](const std::vector<int>& v) {
    const RationalExpr c = psi_C2_coeff(v[0], v[1], v[2], v[3], s1, s2, q, t);
    ts.add({v[0] + v[1] + 2 * v[2], v[1] + v[2] + v[3]}, c);
  });
  return ts;
}

// Outer coefficient of the rectangular rank-3 sum.
RationalExpr c3_outer_coeff(int mu, int rho, const RationalExpr& s3,
                            const RationalExpr& q, const RationalExpr& t) {
  const RationalExpr g = q / t;
  RationalExpr f = qpoch(t, q, mu) / qpoch(q, q, mu) *
                   qpoch((s3 * s3).inv(), q, mu) /
                   qpoch(q / (t * s3 * s3), q, mu) * g.pow(mu);
  f = f * qpoch(t / s3, q, mu) / qpoch(q / s3, q, mu) *
      qpoch(q / (t * s3), q, mu) / qpoch(s3.inv(), q, mu);
  f = f * qpoch(t, q, rho) / qpoch(q, q, rho) *
      qpoch(q.pow(mu) * t / s3, q, rho) / qpoch(q.pow(mu + 1) / s3, q, rho) *
      g.pow(rho);
  return f;
}

RationalExpr e2_coeff(int mu, const RationalExpr& s1, const RationalExpr& s2,
                      const RationalExpr& q, const RationalExpr& t) {
  return qpoch(t / s1, q, mu) / qpoch(q / s1, q, mu) * qpoch(t / s2, q, mu) /
         qpoch(q / s2, q, mu) * qpoch(t, q, mu) / qpoch(q, q, mu) *
         qpoch(q.pow(mu + 1) / (t * s1 * s2), q, mu) /
         qpoch(q.pow(mu) / (s1 * s2), q, mu) * (q / t).pow(mu);
}

RationalExpr e3_coeff(int m12, int m13, int m23, const RationalExpr& s1,
                      const RationalExpr& s2, const RationalExpr& s3,
                      const RationalExpr& q, const RationalExpr& t) {
  const int S = m12 + m13 + m23;
  const RationalExpr g = q / t;
  RationalExpr f = qpoch(t / s1, q, m12 + m13) / qpoch(q / s1, q, m12 + m13) *
                   qpoch(t / s2, q, m12 + m23) / qpoch(q / s2, q, m12 + m23) *
                   qpoch(t / s3, q, m13 + m23) / qpoch(q / s3, q, m13 + m23);
  f = f * qpoch(t, q, m12) / qpoch(q, q, m12) *
      qpoch(q.pow(S + 1) / (t * s1 * s2), q, m12) /
      qpoch(q.pow(S) / (s1 * s2), q, m12) * g.pow(m12);
  f = f * qpoch(t * s3 / s1, q, m12) / qpoch(q * s3 / s1, q, m12) *
      qpoch(q.pow(1 - m23) * s3 / (t * s1), q, m12) /
      qpoch(q.pow(-m23) * s3 / s1, q, m12);
  f = f * qpoch(t * s3 / s2, q, m12) / qpoch(q * s3 / s2, q, m12) *
      qpoch(q.pow(1 - m13) * s3 / (t * s2), q, m12) /
      qpoch(q.pow(-m13) * s3 / s2, q, m12);
  f = f * qpoch(t, q, m13) / qpoch(q, q, m13) *
      qpoch(q.pow(S + 1) / (t * s1 * s3), q, m13) /
      qpoch(q.pow(S) / (s1 * s3), q, m13) * g.pow(m13);
  f = f * qpoch(t * s2 / s1, q, m13) / qpoch(q * s2 / s1, q, m13) *
      qpoch(q.pow(1 - m23) * s2 / (t * s1), q, m13) /
      qpoch(q.pow(-m23) * s2 / s1, q, m13);
  f = f * qpoch(t, q, m23) / qpoch(q, q, m23) *
      qpoch(q.pow(S + 1) / (t * s2 * s3), q, m23) /
      qpoch(q.pow(S) / (s2 * s3), q, m23) * g.pow(m23);
  return f;
}

// The folded 2n-variable type A series in the n ladder variables:
// y = (x_1..x_n, x_n^{-1}..x_1^{-1}) with the spectral tail
// (t^{n-1} s_1..t^{n-1} s_n, t^{n-1},...,t,1). Every pair monomial
// y_j/y_i lies on the ladder cone, so the regrouped series truncates by
// total key degree.
TruncSeries folded_A_series(int n, const std::vector<RationalExpr>& s,
                            const RationalExpr& q, const RationalExpr& t,
                            int order) {
  const int N = 2 * n;
  std::vector<RationalExpr> u(N);
  for (int i = 0; i < n; ++i) u[i] = t.pow(n - 1) * s[i];
  for (int k = 0; k < n; ++k) u[n + k] = t.pow(n - 1 - k);
  std::vector<std::vector<int>> ye(N, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) ye[i][i] = 1;
  for (int k = 0; k < n; ++k) ye[n + k][n - 1 - k] = -1;
  std::vector<std::pair<int, int>> pairs;
  std::vector<Key> pkey;
  std::vector<int> w;
  for (int i = 0; i < N; ++i)
    for (int j = i + 1; j < N; ++j) {
      std::vector<int> kappa(n, 0);
      for (int p = 0; p < n; ++p) kappa[p] = ye[i][p] - ye[j][p];
      pairs.emplace_back(i, j);
      pkey.push_back(mvec(n, kappa));
      w.push_back(key_total(pkey.back()));
    }
  TruncSeries ts;
  ts.rank = n;
  ts.order = order;
  for_each_weighted(w, order, [&](const std::vector<int>& v) {
    std::vector<std::vector<int>> theta(N, std::vector<int>(N, 0));
    Key key(n, 0);
    for (size_t p = 0; p < pairs.size(); ++p) {
      theta[pairs[p].first][pairs[p].second] = v[p];
      for (int l = 0; l < n; ++l) key[l] += v[p] * pkey[p][l];
    }
    ts.add(key, phi_A_coeff(N, theta, u, q, t));
  });
  return ts;
}

}  // namespace

Report verify_C2_conjecture(const Partition& lambda, const Rational& u_q,
                            const Rational& u_t, int window) {
  Report rep;
  rep.push_back(conjecture_entry(
      "C2-conjecture " + lambda.str(), point_str(u_q, u_t, window),
      [&]() -> Verdict {
        if (lambda.length() > 2)
          throw std::invalid_argument(
              "verify_C2_conjecture: lambda longer than 2");
        const int l1 = lambda.part(0), l2 = lambda.part(1);
        if (window < 2 * l1)
          return {CheckStatus::Inconclusive,
                  "window below the support bound " + std::to_string(2 * l1)};
        const RationalExpr q{u_q * u_q}, t{u_t * u_t};
        const RationalExpr s1 = t * t * q.pow(l1);
        const RationalExpr s2 = t * q.pow(l2);
        LaurentX lhs(2);
        std::string tail;
        for_each_weighted({1, 1, 1, 1}, window, [&](const std::vector<int>& v) {
          const RationalExpr c =
              psi_C2_coeff(v[0], v[1], v[2], v[3], s1, s2, q, t);
          if (c.is_zero()) return;
          if (v[0] + v[1] + v[2] + v[3] > 2 * l1 && tail.empty())
            tail = "nonzero coefficient past the support bound at " +
                   key_str(v);
          lhs.add_term({l1 - v[0] - v[1] - 2 * v[2], l2 + v[0] - v[1] - 2 * v[3]},
                       c);
        });
        if (!tail.empty())
          return {CheckStatus::Inconclusive, tail + "; enlarge the window"};
        const LaurentX oracle =
            oracle_P(lambda, 2, ladder_point(u_q, u_t)).expand_full();
        if (!(lhs == oracle))
          return {CheckStatus::Fail, "mismatch: " + first_diff(lhs, oracle)};
        return {};
      }));
  return rep;
}

Report verify_C3_rect(int lambda3, const Rational& u_q, const Rational& u_t,
                      int window) {
  Report rep;
  rep.push_back(conjecture_entry(
      "C3-rect lambda3=" + std::to_string(lambda3),
      point_str(u_q, u_t, window), [&]() -> Verdict {
        if (lambda3 < 0 || lambda3 > 2)
          throw std::invalid_argument("verify_C3_rect: lambda3 outside 0..2");
        const int l3 = lambda3;
        if (window < 3 * l3)
          return {CheckStatus::Inconclusive,
                  "window below the support bound " + std::to_string(3 * l3)};
        const RationalExpr q{u_q * u_q}, t{u_t * u_t};
        const RationalExpr s3 = t * q.pow(l3);
        LaurentX lhs(3);
        std::string tail;
        for_each_weighted({1, 1}, window, [&](const std::vector<int>& mv) {
          const int mu = mv[0], rho = mv[1];
          const RationalExpr g = c3_outer_coeff(mu, rho, s3, q, t);
          if (g.is_zero()) return;
          const RationalExpr is1 = t * s3;
          const RationalExpr is2 = q.pow(-mu) * s3;
          for_each_weighted(
              {1, 1, 1, 1}, window - mu - rho,
              [&](const std::vector<int>& v) {
                const RationalExpr c =
                    g * psi_C2_coeff(v[0], v[1], v[2], v[3], is1, is2, q, t);
                if (c.is_zero()) return;
                if (mu + rho + v[0] + v[1] + v[2] + v[3] > 3 * l3 &&
                    tail.empty())
                  tail = "nonzero coefficient past the support bound at " +
                         key_str({mu, rho, v[0], v[1], v[2], v[3]});
                lhs.add_term({l3 - mu - 2 * rho, l3 - v[0] - v[1] - 2 * v[2],
                              l3 - mu + v[0] - v[1] - 2 * v[3]},
                             c);
              });
        });
        if (!tail.empty())
          return {CheckStatus::Inconclusive, tail + "; enlarge the window"};
        const LaurentX oracle =
            oracle_P(Partition({l3, l3, l3}), 3, ladder_point(u_q, u_t))
                .expand_full();
        if (!(lhs == oracle))
          return {CheckStatus::Fail, "mismatch: " + first_diff(lhs, oracle)};
        return {};
      }));
  return rep;
}

Report verify_folded_A(int n, const Rational& u_q, const Rational& u_t,
                       int order) {
  Report rep;
  const std::string ctx = "u_q=" + RationalExpr(u_q).str() +
                          " u_t=" + RationalExpr(u_t).str() +
                          " order=" + std::to_string(order);
  if (n == 1) {
    rep.push_back(conjecture_entry(
        "folded-A1-closed-form", "symbolic (s, q, t)", [&]() -> Verdict {
          const RationalExpr s = RationalExpr::var(VS);
          const RationalExpr q = RationalExpr::var(VQ);
          const RationalExpr t = RationalExpr::var(VT);
          const int ord = std::max(order, 4);
          const TruncSeries lad = phi_C_series(1, {s}, q, t, ord);
          for (int th = 0; th <= ord; ++th) {
            const std::vector<std::vector<int>> theta = {{0, th}, {0, 0}};
            const RationalExpr folded =
                phi_A_coeff(2, theta, {s, kOne}, q, t);
            const RationalExpr closed =
                qpoch(t, q, th) * qpoch(t / s, q, th) /
                (qpoch(q, q, th) * qpoch(q / s, q, th)) * (q / t).pow(th);
            if (!(folded == closed))
              return {CheckStatus::Fail,
                      "folded coefficient differs from the closed form at "
                      "theta=" +
                          std::to_string(th)};
            if (!(lad.coeff({th}) == closed))
              return {CheckStatus::Fail,
                      "ladder solve differs from the closed form at theta=" +
                          std::to_string(th)};
          }
          return {};
        }));
    rep.push_back(conjecture_entry(
        "folded-A1-polynomial", ctx, [&]() -> Verdict {
          const RationalExpr q{u_q * u_q}, t{u_t * u_t};
          for (int l1 = 0; l1 <= 3; ++l1) {
            const RationalExpr s1 = t * q.pow(l1);
            LaurentX acc(1);
            for (int k = 0; k <= l1 + 3; ++k) {
              const std::vector<std::vector<int>> theta = {{0, k}, {0, 0}};
              const RationalExpr c = phi_A_coeff(2, theta, {s1, kOne}, q, t);
              if (k > l1) {
                if (!c.is_zero())
                  return {CheckStatus::Fail,
                          "series fails to terminate at lambda=" +
                              std::to_string(l1) + ", k=" + std::to_string(k)};
                continue;
              }
              acc.add_term({l1 - 2 * k}, c);
            }
            const LaurentX oracle =
                oracle_P(Partition({l1}), 1, ladder_point(u_q, u_t))
                    .expand_full();
            if (!(acc == oracle))
              return {CheckStatus::Fail, "mismatch at lambda=" +
                                             std::to_string(l1) + ": " +
                                             first_diff(acc, oracle)};
          }
          return {};
        }));
    return rep;
  }

  if (n == 2) {
    rep.push_back(conjecture_entry("folded-A2", ctx, [&]() -> Verdict {
      if (order < 0 || order > 4)
        throw std::invalid_argument("verify_folded_A: rank 2 order above 4");
      const RationalExpr q{u_q * u_q}, t{u_t * u_t};
      const RationalExpr sA = RationalExpr::var(VA);
      const RationalExpr sB = RationalExpr::var(VB);
      const TruncSeries lhs = folded_A_series(2, {sA, sB}, q, t, order);
      TruncSeries rhs;
      rhs.rank = 2;
      rhs.order = order;
      for (int mu = 0; 2 * mu <= order; ++mu) {
        const RationalExpr wgt = e2_coeff(mu, sA, sB, q, t);
        if (wgt.is_zero()) continue;
        const TruncSeries inner = phi_C_series(
            2, {q.pow(-mu) * sA, q.pow(-mu) * sB}, q, t, order - 2 * mu);
        for (const auto& [k, c] : inner.coef)
          rhs.add({k[0] + mu, k[1] + mu}, wgt * c);
      }
      const std::string d = series_diff(lhs.coef, rhs.coef, order);
      if (!d.empty()) return {CheckStatus::Fail, "mismatch: " + d};
      return {};
    }));
    return rep;
  }

  if (n == 3) {
    rep.push_back(conjecture_entry("folded-A3", ctx, [&]() -> Verdict {
      if (order < 0 || order > 3)
        throw std::invalid_argument("verify_folded_A: rank 3 order above 3");
      const RationalExpr q{u_q * u_q}, t{u_t * u_t};
      const RationalExpr sA = RationalExpr::var(VA);
      const RationalExpr sB = RationalExpr::var(VB);
      const RationalExpr sC = RationalExpr::var(VC);
      const TruncSeries lhs = folded_A_series(3, {sA, sB, sC}, q, t, order);
      TruncSeries rhs;
      rhs.rank = 3;
      rhs.order = order;
      for_each_weighted({4, 3, 2}, order, [&](const std::vector<int>& mv) {
        const int m12 = mv[0], m13 = mv[1], m23 = mv[2];
        const RationalExpr wgt = e3_coeff(m12, m13, m23, sA, sB, sC, q, t);
        if (wgt.is_zero()) return;
        const int shift = 4 * m12 + 3 * m13 + 2 * m23;
        const TruncSeries inner =
            phi_C_series(3,
                         {q.pow(-m12 - m13) * sA, q.pow(-m12 - m23) * sB,
                          q.pow(-m13 - m23) * sC},
                         q, t, order - shift);
        for (const auto& [k, c] : inner.coef)
          rhs.add({k[0] + m12 + m13, k[1] + 2 * m12 + m13 + m23,
                   k[2] + m12 + m13 + m23},
                  wgt * c);
      });
      const std::string d = series_diff(lhs.coef, rhs.coef, order);
      if (!d.empty()) return {CheckStatus::Fail, "mismatch: " + d};
      return {};
    }));
    return rep;
  }

  throw std::invalid_argument("verify_folded_A: rank outside 1..3");
}

namespace {

// Parameter draws for the conjecture suite: |numerator|, |denominator| up to
// 20, rejected while q^i t^j = 1 for any small (i, j) != (0, 0).
std::pair<Rational, Rational> draw_point(Rng& rng, int guard) {
  for (int att = 0; att < 2000; ++att) {
    const Rational uq = rng.rand_param(20);
    const Rational ut = rng.rand_param(20);
    const Rational q = uq * uq, t = ut * ut;
    std::vector<Rational> qp(2 * guard + 1), tp(2 * guard + 1);
    for (int i = -guard; i <= guard; ++i) {
      qp[i + guard] = q.pow(i);
      tp[i + guard] = t.pow(i);
    }
    bool ok = true;
    for (int i = -guard; i <= guard && ok; ++i)
      for (int j = -guard; j <= guard && ok; ++j) {
        if (i == 0 && j == 0) continue;
        if (qp[i + guard] * tp[j + guard] == Rational(1)) ok = false;
      }
    if (ok) return {uq, ut};
  }
  throw std::logic_error("draw_point: no admissible parameter point found");
}

bool degenerate_entry(const CheckResult& r) {
  return r.status == CheckStatus::Inconclusive &&
         r.detail.find("degenerate parameter point") != std::string::npos;
}

}  // namespace

Report verify_conjectures(int trials, Rng& rng, int window) {
  Report rep;
  {
    CheckResult hdr;
    hdr.id = "ladder-parameter-point";
    hdr.detail =
        "(a, b, c, d, q, t) = (u_t, -u_t, u_q u_t, -u_q u_t, u_q^2, u_t^2); "
        "spectral coordinates s_i = t^{n-i+1} q^{lambda_i}";
    rep.push_back(hdr);
  }

  rep.push_back(run_check("phi-A-eigencheck", [&] {
    struct Case {
      int n;
      Partition lam;
      int order;
    };
    const std::vector<Case> cases = {
        {1, Partition({2}), 2},      {2, Partition({1}), 2},
        {2, Partition({3, 1}), 5},   {3, Partition({1, 1}), 3},
        {3, Partition({2, 1, 1}), 4}, {4, Partition({2, 1, 1}), 7}};
    for (const auto& cs : cases) {
      int done = 0, attempts = 0;
      while (done < trials) {
        if (++attempts > 30 * trials)
          return std::string("too many degenerate draws for n=") +
                 std::to_string(cs.n);
        const auto [uq, ut] = draw_point(rng, 8);
        const Report sub = phi_A_eigencheck(cs.n, cs.lam, uq, ut, cs.order);
        if (sub[0].status == CheckStatus::Fail)
          return sub[0].id + ": " + sub[0].detail;
        if (sub[0].status == CheckStatus::Pass) ++done;
      }
    }
    return std::string();
  }));

  rep.push_back(run_check("ladder-partition-point", [&] {
    struct Case {
      int n;
      Partition lam;
    };
    const std::vector<Case> cases = {{1, Partition({2})},
                                     {1, Partition({3})},
                                     {2, Partition({1, 1})},
                                     {2, Partition({2, 1})},
                                     {3, Partition({1, 1, 1})}};
    for (const auto& cs : cases) {
      int done = 0, attempts = 0;
      while (done < trials) {
        if (++attempts > 30 * trials)
          return std::string("too many degenerate draws for n=") +
                 std::to_string(cs.n);
        const auto [uq, ut] = draw_point(rng, 10);
        try {
          const RationalExpr q{uq * uq}, t{ut * ut};
          const LaurentX full =
              oracle_P(cs.lam, cs.n, ladder_point(uq, ut)).expand_full();
          int ord = 0;
          for (const auto& [e, c] : full.terms()) {
            std::vector<int> kappa(cs.n);
            for (int p = 0; p < cs.n; ++p) kappa[p] = cs.lam.part(p) - e[p];
            ord = std::max(ord, key_total(mvec(cs.n, kappa)));
          }
          std::vector<RationalExpr> s(cs.n);
          for (int i = 0; i < cs.n; ++i)
            s[i] = t.pow(cs.n - i) * q.pow(cs.lam.part(i));
          const TruncSeries phi = phi_C_series(cs.n, s, q, t, ord);
          LaurentX assembled(cs.n);
          for (const auto& [k, c] : phi.coef) {
            const std::vector<int> kappa = kappa_of_key(k);
            XExp e(cs.n, 0);
            for (int p = 0; p < cs.n; ++p) e[p] = cs.lam.part(p) - kappa[p];
            assembled.add_term(e, c);
          }
          if (!(assembled == full))
            return "series disagrees with the polynomial oracle at n=" +
                   std::to_string(cs.n) + " " + cs.lam.str() + ": " +
                   first_diff(assembled, full);
          ++done;
        } catch (const std::domain_error&) {
        }
      }
    }
    return std::string();
  }));

  rep.push_back(run_check("ladder-eigenvalue-coordinates", [&] {
    const std::vector<Partition> lams = {Partition({2}), Partition({2, 1}),
                                         Partition({2, 1, 1})};
    for (int trial = 0; trial < trials; ++trial) {
      const auto [uq, ut] = draw_point(rng, 6);
      const KoornwinderParams prm = ladder_point(uq, ut);
      for (int n = 1; n <= 3; ++n) {
        const Partition& lam = lams[n - 1];
        RationalExpr eps;
        for (int i = 1; i <= n; ++i) {
          const RationalExpr si =
              prm.t.pow(n - i + 1) * prm.q.pow(lam.part(i - 1));
          eps += si + si.inv() - prm.t.pow(i) - prm.t.pow(-i);
        }
        if (!(eigenvalue_scaled(lam, prm, n) == prm.t.pow(n) * eps))
          return "scaled eigenvalue differs from the spectral-coordinate "
                 "form at n=" +
                 std::to_string(n);
      }
    }
    return std::string();
  }));

  rep.push_back(run_check("C2-series-symbolic", [&] {
    const RationalExpr sA = RationalExpr::var(VA);
    const RationalExpr sB = RationalExpr::var(VB);
    for (int trial = 0; trial < trials; ++trial) {
      const auto [uq, ut] = draw_point(rng, 8);
      const RationalExpr q{uq * uq}, t{ut * ut};
      const TruncSeries sum = psi_C2_series(sA, sB, q, t, 4);
      const TruncSeries lad = phi_C_series(2, {sA, sB}, q, t, 4);
      const std::string d = series_diff(sum.coef, lad.coef, 4);
      if (!d.empty()) return "mismatch: " + d;
    }
    return std::string();
  }));

  rep.push_back(run_check("C3-rect-series-symbolic", [&] {
    const RationalExpr s = RationalExpr::var(VS);
    const int ord = 5;
    for (int trial = 0; trial < trials; ++trial) {
      const auto [uq, ut] = draw_point(rng, 8);
      const RationalExpr q{uq * uq}, t{ut * ut};
      TruncSeries sum;
      sum.rank = 3;
      sum.order = ord;
      for_each_weighted({3, 5}, ord, [&](const std::vector<int>& mv) {
        const int mu = mv[0], rho = mv[1];
        const RationalExpr g = c3_outer_coeff(mu, rho, s, q, t);
        if (g.is_zero()) return;
        const TruncSeries inner = psi_C2_series(
            t * s, q.pow(-mu) * s, q, t, ord - 3 * mu - 5 * rho);
        for (const auto& [k, c] : inner.coef)
          sum.add({mu + 2 * rho, mu + 2 * rho + k[0], mu + rho + k[1]}, g * c);
      });
      const TruncSeries lad = phi_C_series(3, {t * t * s, t * s, s}, q, t, ord);
      const std::string d = series_diff(sum.coef, lad.coef, ord);
      if (!d.empty()) return "mismatch: " + d;
    }
    return std::string();
  }));

  const auto run_point_checks =
      [&](const std::function<Report(const Rational&, const Rational&)>& call,
          int guard) {
        for (int trial = 0; trial < trials; ++trial) {
          for (int att = 0;; ++att) {
            const auto [uq, ut] = draw_point(rng, guard);
            const Report sub = call(uq, ut);
            bool degenerate = false;
            for (const auto& r : sub) degenerate |= degenerate_entry(r);
            if (!degenerate || att >= 30) {
              rep.insert(rep.end(), sub.begin(), sub.end());
              break;
            }
          }
        }
      };

  const std::vector<Partition> c2_lams = {Partition({1}), Partition({1, 1}),
                                          Partition({2}), Partition({2, 1}),
                                          Partition({2, 2})};
  for (const Partition& lam : c2_lams)
    run_point_checks(
        [&](const Rational& uq, const Rational& ut) {
          return verify_C2_conjecture(lam, uq, ut, window);
        },
        window + 6);

  for (int l3 = 1; l3 <= 2; ++l3)
    run_point_checks(
        [&](const Rational& uq, const Rational& ut) {
          return verify_C3_rect(l3, uq, ut, window);
        },
        window + 8);

  // The rank-1 symbolic entry is draw-independent, so one call suffices.
  for (int att = 0;; ++att) {
    const auto [uq, ut] = draw_point(rng, 10);
    const Report sub = verify_folded_A(1, uq, ut, 4);
    bool degenerate = false;
    for (const auto& r : sub) degenerate |= degenerate_entry(r);
    if (!degenerate || att >= 30) {
      rep.insert(rep.end(), sub.begin(), sub.end());
      break;
    }
  }
  run_point_checks(
      [&](const Rational& uq, const Rational& ut) {
        return verify_folded_A(2, uq, ut, 3);
      },
      10);
  run_point_checks(
      [&](const Rational& uq, const Rational& ut) {
        return verify_folded_A(3, uq, ut, 2);
      },
      10);

  return rep;
}

}  // namespace mck
