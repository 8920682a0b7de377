#include "plumbsw/latcoh.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <limits>
#include <unordered_map>

namespace plumbsw {

namespace {

constexpr long long kInf = std::numeric_limits<long long>::max() / 4;

using Key = std::vector<std::int64_t>;

// ---------------------------------------------------------------------------
// Exact (rational) cube machinery; fine for small explicit cube sets.
// ---------------------------------------------------------------------------

QVec cube_vertex(const LatticeContext& ctx, const QVec& base, const std::vector<int>& dirs,
                 unsigned subset) {
  QVec v = base;
  for (std::size_t i = 0; i < dirs.size(); ++i)
    if (subset & (1u << i)) v(dirs[i]) += 2;
  return v;
}

// ---------------------------------------------------------------------------
// int64 engine. Within one class all weights differ from a base weight by
// integers ("levels"); w(k_base + 2x) - w(k_base) = (a.x + q(x)) / 2 with
// a the dual coordinates of k_base and q(x) = x^T (-I) x.
// ---------------------------------------------------------------------------

struct RelWeight {
  int s;
  LMat q;  // -I
  LVec a;  // dual coordinates of the base characteristic vector

  RelWeight(const LatticeContext& ctx, const IVec& dual_base) {
    s = ctx.size();
    q = LMat(s, s);
    for (int i = 0; i < s; ++i)
      for (int j = 0; j < s; ++j) q(i, j) = -to_i64(Int(ctx.form()(i, j)));
    a = LVec(s);
    for (int i = 0; i < s; ++i) a(i) = to_i64(dual_base(i));
  }

  long long eval(const Key& x) const {
    long long qx = 0, ax = 0;
    for (int i = 0; i < s; ++i) {
      long long row = 0;
      for (int j = 0; j < s; ++j) row += q(i, j) * x[j];
      qx += x[i] * row;
      ax += a(i) * x[i];
    }
    return (ax + qx) / 2;  // exact: ax + qx is even for characteristic bases
  }
};

// All integer x with (x+mu)^T Q (x+mu) <= budget, enumerated with a floating
// point Fincke-Pohst recursion run with generous slack; callers must filter
// with the exact integer predicate.
void enumerate_ellipsoid(const LMat& q, const std::vector<double>& mu, double budget,
                         const std::function<void(const Key&)>& visit) {
  const int s = static_cast<int>(q.rows());
  // LDL^T of Q (positive definite).
  std::vector<std::vector<double>> L(s, std::vector<double>(s, 0.0));
  std::vector<double> D(s, 0.0);
  for (int j = 0; j < s; ++j) {
    double d = static_cast<double>(q(j, j));
    for (int k = 0; k < j; ++k) d -= L[j][k] * L[j][k] * D[k];
    D[j] = d;
    L[j][j] = 1.0;
    for (int i = j + 1; i < s; ++i) {
      double v = static_cast<double>(q(i, j));
      for (int k = 0; k < j; ++k) v -= L[i][k] * L[j][k] * D[k];
      L[i][j] = v / d;
    }
  }

  const double slack = 1.0 + 1e-9 * std::abs(budget);
  Key x(s, 0);
  std::vector<double> t(s, 0.0);  // t[j] = sum_{i>j} L[i][j] * z_i

  std::function<void(int, double)> rec = [&](int j, double rem) {
    if (j < 0) {
      visit(x);
      return;
    }
    if (D[j] <= 0) return;  // numerically degenerate; nothing to do
    double r = std::sqrt(std::max(rem + slack, 0.0) / D[j]);
    double center = -mu[j] - t[j];
    long long lo = static_cast<long long>(std::ceil(center - r)) - 1;
    long long hi = static_cast<long long>(std::floor(center + r)) + 1;
    for (long long v = lo; v <= hi; ++v) {
      x[j] = v;
      double z = static_cast<double>(v) + mu[j] + t[j];
      double rem2 = rem - D[j] * z * z;
      if (rem2 < -slack) continue;
      for (int i = 0; i < j; ++i) t[i] += L[j][i] * (static_cast<double>(v) + mu[j]);
      rec(j - 1, rem2);
      for (int i = 0; i < j; ++i) t[i] -= L[j][i] * (static_cast<double>(v) + mu[j]);
    }
    x[j] = 0;
  };
  rec(s - 1, budget + slack);
}

// Solve Q mu2 = a in doubles (only used to aim the enumeration).
std::vector<double> half_solve(const LMat& q, const LVec& a) {
  const int s = static_cast<int>(q.rows());
  std::vector<std::vector<double>> m(s, std::vector<double>(s + 1, 0.0));
  for (int i = 0; i < s; ++i) {
    for (int j = 0; j < s; ++j) m[i][j] = static_cast<double>(q(i, j));
    m[i][s] = 0.5 * static_cast<double>(a(i));
  }
  for (int c = 0; c < s; ++c) {
    int p = c;
    for (int i = c + 1; i < s; ++i)
      if (std::abs(m[i][c]) > std::abs(m[p][c])) p = i;
    std::swap(m[p], m[c]);
    for (int i = 0; i < s; ++i) {
      if (i == c) continue;
      double f = m[i][c] / m[c][c];
      for (int j = c; j <= s; ++j) m[i][j] -= f * m[c][j];
    }
  }
  std::vector<double> mu(s);
  for (int i = 0; i < s; ++i) mu[i] = m[i][s] / m[i][i];
  return mu;
}

struct PointSet {
  int s = 0;
  std::vector<Key> pts;
  std::vector<long long> lvl;  // relative levels (any integers)
  std::unordered_map<Key, int, VecHash> index;

  void add(const Key& x, long long level) {
    index.emplace(x, static_cast<int>(pts.size()));
    pts.push_back(x);
    lvl.push_back(level);
  }
};

struct CubeScan {
  // signed[l] = sum over cubes of level l of (-1)^{|I|}; offset keeps levels
  // non-negative as bucket indices.
  std::vector<long long> signed_by_level;
  long long level_offset = 0;
  long long e_signed = 0;  // sum over all counted cubes of (-1)^{|I|+1} * level
};

// For every cube with all corners in the point set, bucket its level (max of
// corner levels). max_level < 0 means "no cap" (used for full rectangles).
CubeScan cube_scan(const PointSet& ps, long long max_level) {
  const int s = ps.s;
  if (s > 16) throw ComputationError("cube scan limited to 16 vertices");
  const unsigned full = 1u << s;
  const std::size_t n = ps.pts.size();

  long long lo = kInf, hi = -kInf;
  for (auto l : ps.lvl) {
    lo = std::min(lo, l);
    hi = std::max(hi, l);
  }
  if (n == 0) throw ComputationError("cube scan on empty point set");
  long long top = max_level >= 0 ? max_level : hi;

  CubeScan out;
  out.level_offset = lo;
  out.signed_by_level.assign(static_cast<std::size_t>(top - lo + 1), 0);

  // nb[i*s+v] = index of pts[i] + e_v, or -1.
  std::vector<int> nb(n * s, -1);
  {
    Key tmp;
    for (std::size_t i = 0; i < n; ++i) {
      tmp = ps.pts[i];
      for (int v = 0; v < s; ++v) {
        tmp[v] += 1;
        auto it = ps.index.find(tmp);
        nb[i * s + v] = (it == ps.index.end()) ? -1 : it->second;
        tmp[v] -= 1;
      }
    }
  }

  std::vector<int> idx(full);
  std::vector<long long> lv(full);
  for (std::size_t i = 0; i < n; ++i) {
    idx[0] = static_cast<int>(i);
    lv[0] = ps.lvl[i];
    for (unsigned J = 1; J < full; ++J) {
      int v = std::countr_zero(J);
      int pj = idx[J ^ (1u << v)];
      int cur = pj < 0 ? -1 : nb[static_cast<std::size_t>(pj) * s + v];
      idx[J] = cur;
      lv[J] = cur < 0 ? kInf : ps.lvl[cur];
    }
    // Subset-max sweep: lv[J] becomes the cube level of (pts[i], J).
    for (int v = 0; v < s; ++v) {
      unsigned bit = 1u << v;
      for (unsigned J = 0; J < full; ++J)
        if (J & bit) lv[J] = std::max(lv[J], lv[J ^ bit]);
    }
    // Corners outside the point set make lv infinite: those (x,J) are not
    // cubes of the complex and are skipped.
    for (unsigned J = 0; J < full; ++J) {
      if (lv[J] >= kInf || lv[J] > top) continue;
      long long sign = (std::popcount(J) % 2 == 0) ? 1 : -1;
      out.signed_by_level[static_cast<std::size_t>(lv[J] - lo)] += sign;
      out.e_signed += -sign * lv[J];  // (-1)^{|J|+1} * level
    }
  }
  return out;
}

// Recenter the class representative near the weight minimum so enumeration
// radii stay small regardless of where the canonical representative sits.
QVec recentered_base(const LatticeContext& ctx, const CharClass& c) {
  QVec k0 = char_class_rep(ctx, c);
  RelWeight r0(ctx, ctx.dual(k0));
  std::vector<double> mu = half_solve(r0.q, r0.a);
  QVec shift = QVec::Zero(ctx.size());
  for (int i = 0; i < ctx.size(); ++i)
    shift(i) = Rat(Int(static_cast<long long>(std::llround(-mu[i]))));
  return k0 + Rat(2) * shift;
}

// Sublevel scan state for one class: exact base weight plus integer levels.
struct ClassGeometry {
  QVec base;
  RelWeight rel;
  Rat w_base;    // w at the recentered base vector
  long long m0;  // min of the relative weight over the class
  Rat min_w;     // w_base + m0

  ClassGeometry(const LatticeContext& ctx, const CharClass& c)
      : base(recentered_base(ctx, c)), rel(ctx, ctx.dual(base)) {
    w_base = weight_w(ctx, base);

    // Greedy descent, then an exact sweep of the enclosing ball.
    Key x(ctx.size(), 0);
    long long best = rel.eval(x);
    for (bool moved = true; moved;) {
      moved = false;
      for (int v = 0; v < ctx.size(); ++v) {
        for (int dsn : {+1, -1}) {
          Key y = x;
          y[v] += dsn;
          long long w = rel.eval(y);
          if (w < best) {
            best = w;
            x = y;
            moved = true;
          }
        }
      }
    }
    m0 = best;
    for_ball(best, [&](const Key&, long long w) { m0 = std::min(m0, w); });
    min_w = w_base + Rat(int_of(m0));
  }

  // Visit every lattice point with relative weight <= cap (exactly).
  void for_ball(long long cap, const std::function<void(const Key&, long long)>& fn) const {
    std::vector<double> mu = half_solve(rel.q, rel.a);
    double qmu = 0;
    for (int i = 0; i < rel.s; ++i) {
      double row = 0;
      for (int j = 0; j < rel.s; ++j) row += static_cast<double>(rel.q(i, j)) * mu[j];
      qmu += mu[i] * row;
    }
    double budget = qmu + 2.0 * static_cast<double>(cap);
    enumerate_ellipsoid(rel.q, mu, budget, [&](const Key& x) {
      long long w = rel.eval(x);
      if (w <= cap) fn(x, w);
    });
  }
};

}  // namespace

// ---------------------------------------------------------------------------
// Public exact operations.
// ---------------------------------------------------------------------------

Rectangle make_rectangle(const LatticeContext& ctx, const QVec& k1, const QVec& k2) {
  if (!ctx.is_characteristic(k1) || !ctx.is_characteristic(k2))
    throw PreconditionError("rectangle corners must be characteristic");
  for (int v = 0; v < ctx.size(); ++v) {
    Rat m = (k1(v) - k2(v)) / 2;
    m.canonicalize();
    if (m.get_den() != 1 || m < 0)
      throw PreconditionError("rectangle needs k1 >= k2 with k1 - k2 in 2L");
  }
  return Rectangle{k1, k2};
}

CharClass rectangle_class(const LatticeContext& ctx, const Rectangle& r) {
  QVec half = (r.k1 - ctx.canonical_class()) / Rat(2);
  return CharClass{ctx.class_of(half)};
}

Int rectangle_cube_count(const LatticeContext& ctx, const Rectangle& r) {
  Int n = 1;
  for (int v = 0; v < ctx.size(); ++v) {
    Rat m = (r.k1(v) - r.k2(v)) / 2;
    m.canonicalize();
    n *= 2 * m.get_num() + 1;
  }
  return n;
}

std::vector<Cube> rectangle_cubes(const LatticeContext& ctx, const Rectangle& r, long cap) {
  Int total = rectangle_cube_count(ctx, r);
  if (total > cap)
    throw ComputationError("rectangle too large to enumerate (" + total.get_str() + " cubes)");
  const int s = ctx.size();
  std::vector<long> m(s);
  for (int v = 0; v < s; ++v) {
    Rat mm = (r.k1(v) - r.k2(v)) / 2;
    mm.canonicalize();
    m[v] = static_cast<long>(mm.get_num().get_si());
  }
  std::vector<Cube> out;
  std::vector<long> y(s, 0);
  for (;;) {
    QVec base = r.k2;
    for (int v = 0; v < s; ++v) base(v) += 2 * Rat(y[v]);
    std::vector<int> room;
    for (int v = 0; v < s; ++v)
      if (y[v] < m[v]) room.push_back(v);
    const unsigned lim = 1u << room.size();
    for (unsigned mask = 0; mask < lim; ++mask) {
      Cube c;
      c.base = base;
      for (std::size_t i = 0; i < room.size(); ++i)
        if (mask & (1u << i)) c.dirs.push_back(room[i]);
      out.push_back(std::move(c));
    }
    int i = s - 1;
    while (i >= 0 && y[i] == m[i]) y[i--] = 0;
    if (i < 0) break;
    ++y[i];
  }
  return out;
}

Rat cube_weight(const LatticeContext& ctx, const QVec& k, const std::vector<int>& dirs) {
  if (dirs.size() > 20) throw PreconditionError("cube_weight: too many directions");
  Rat best;
  bool first = true;
  for (unsigned subset = 0; subset < (1u << dirs.size()); ++subset) {
    Rat w = weight_w(ctx, cube_vertex(ctx, k, dirs, subset));
    if (first || w > best) {
      best = w;
      first = false;
    }
  }
  return best;
}

Rat euler_E(const LatticeContext& ctx, const std::vector<Cube>& cubes) {
  Rat acc = 0;
  for (const auto& c : cubes) {
    Rat w = cube_weight(ctx, c.base, c.dirs);
    acc += (c.dirs.size() % 2 == 0) ? -w : w;
  }
  return acc;
}

Rat WeightPolynomial::value_at_one() const {
  Rat acc = 0;
  for (const auto& [e, c] : terms) acc += Rat(c);
  return acc;
}

Rat WeightPolynomial::derivative_at_one() const {
  Rat acc = 0;
  for (const auto& [e, c] : terms) acc += Rat(c) * e;
  return acc;
}

WeightPolynomial weight_polynomial(const LatticeContext& ctx, const std::vector<Cube>& cubes) {
  WeightPolynomial p;
  for (const auto& c : cubes) {
    Rat w = cube_weight(ctx, c.base, c.dirs);
    Int sign = (c.dirs.size() % 2 == 0) ? 1 : -1;
    auto [it, fresh] = p.terms.emplace(w, sign);
    if (!fresh) {
      it->second += sign;
      if (it->second == 0) p.terms.erase(it);
    }
  }
  return p;
}

WeightPolynomial weight_polynomial(const LatticeContext& ctx, const Rectangle& r) {
  return weight_polynomial(ctx, rectangle_cubes(ctx, r));
}

std::vector<long> sublevel_betti(const LatticeContext& ctx, const Rectangle& r, long n) {
  if (n < 0) throw PreconditionError("sublevel_betti: n must be >= 0");
  auto cubes = rectangle_cubes(ctx, r, 20000);

  // min of w over the rectangle's vertices.
  Rat minw;
  bool first = true;
  for (const auto& c : cubes) {
    if (!c.dirs.empty()) continue;
    Rat w = weight_w(ctx, c.base);
    if (first || w < minw) {
      minw = w;
      first = false;
    }
  }
  Rat threshold = minw + Rat(n);

  // Cells of S_n, indexed per dimension.
  const int s = ctx.size();
  auto key_of = [&](const QVec& base, const std::vector<int>& dirs) {
    Key k;
    k.reserve(s + dirs.size());
    for (int v = 0; v < s; ++v) k.push_back(to_i64(scale_to_int(base(v), ctx.det())));
    unsigned mask = 0;
    for (int v : dirs) mask |= 1u << v;
    k.push_back(mask);
    return k;
  };
  std::vector<std::unordered_map<Key, int, VecHash>> cells(s + 2);
  std::vector<std::vector<Cube>> by_dim(s + 2);
  for (const auto& c : cubes) {
    if (cube_weight(ctx, c.base, c.dirs) > threshold) continue;
    int q = static_cast<int>(c.dirs.size());
    cells[q].emplace(key_of(c.base, c.dirs), static_cast<int>(by_dim[q].size()));
    by_dim[q].push_back(c);
  }
  if (by_dim[0].empty()) return std::vector<long>(s + 1, 0);

  // Boundary ranks over Q via sparse elimination.
  auto rank_of_boundary = [&](int q) -> long {
    if (q <= 0 || by_dim[q].empty()) return 0;
    std::vector<std::map<int, Rat>> pivots;  // reduced rows, keyed by pivot col
    std::map<int, int> pivot_col_to_row;
    long rank = 0;
    for (const auto& c : by_dim[q]) {
      std::map<int, Rat> row;
      for (std::size_t l = 0; l < c.dirs.size(); ++l) {
        Rat sgn = (l % 2 == 0) ? 1 : -1;  // (-1)^l with l starting at 1 in math
        std::vector<int> face = c.dirs;
        face.erase(face.begin() + static_cast<long>(l));
        auto lower = cells[q - 1].find(key_of(c.base, face));
        if (lower != cells[q - 1].end()) row[lower->second] -= sgn;
        QVec up = c.base;
        up(c.dirs[l]) += 2;
        auto upper = cells[q - 1].find(key_of(up, face));
        if (upper != cells[q - 1].end()) row[upper->second] += sgn;
      }
      // reduce
      for (;;) {
        while (!row.empty() && row.begin()->second == 0) row.erase(row.begin());
        if (row.empty()) break;
        auto it = pivot_col_to_row.find(row.begin()->first);
        if (it == pivot_col_to_row.end()) {
          Rat lead = row.begin()->second;
          for (auto& [col, val] : row) val /= lead;
          pivot_col_to_row[row.begin()->first] = static_cast<int>(pivots.size());
          pivots.push_back(row);
          ++rank;
          break;
        }
        const auto& prow = pivots[it->second];
        Rat f = row.begin()->second;
        for (const auto& [col, val] : prow) {
          row[col] -= f * val;
          if (row[col] == 0) row.erase(col);
        }
      }
    }
    return rank;
  };

  std::vector<long> rk(s + 3, 0);
  for (int q = 1; q <= s + 1; ++q) rk[q] = rank_of_boundary(q);
  std::vector<long> betti(s + 1, 0);
  for (int q = 0; q <= s; ++q)
    betti[q] = static_cast<long>(by_dim[q].size()) - rk[q] - rk[q + 1];
  betti[0] -= 1;  // reduced
  return betti;
}

// ---------------------------------------------------------------------------
// eu via the sublevel filtration of the full class lattice, with a finite
// zone-rectangle cross-check when that rectangle is small enough.
// ---------------------------------------------------------------------------

namespace {

struct LevelScan {
  std::vector<long long> chi;  // chi(S_n) for n = 0..top
};

LevelScan scan_levels(const LatticeContext& ctx, const ClassGeometry& geo, long long top) {
  PointSet ps;
  ps.s = ctx.size();
  geo.for_ball(geo.m0 + top, [&](const Key& x, long long w) { ps.add(x, w - geo.m0); });
  if (ps.pts.size() > 2'000'000)
    throw ComputationError("sublevel scan exceeded the point budget");
  CubeScan cs = cube_scan(ps, top);

  LevelScan out;
  out.chi.assign(static_cast<std::size_t>(top + 1), 0);
  long long acc = 0;
  for (long long n = 0; n <= top; ++n) {
    std::size_t b = static_cast<std::size_t>(n - cs.level_offset);
    if (n >= cs.level_offset && b < cs.signed_by_level.size()) acc += cs.signed_by_level[b];
    out.chi[static_cast<std::size_t>(n)] = acc;
  }
  return out;
}

// Zone-rectangle value of E(R) and min(w|R) for k2 = k1 - 2m*(1,...,1).
struct RectReading {
  Rat e;
  Rat min_w;
  std::vector<long long> chi_tilde;  // rectangle sublevel route
};

RectReading rectangle_reading(const LatticeContext& ctx, const QVec& k1, long m) {
  const int s = ctx.size();
  RelWeight rel(ctx, ctx.dual(k1));
  PointSet ps;
  ps.s = s;
  Key x(s, 0);
  std::function<void(int)> gen = [&](int v) {
    if (v == s) {
      ps.add(x, rel.eval(x));
      return;
    }
    for (long step = -m; step <= 0; ++step) {
      x[v] = step;
      gen(v + 1);
    }
    x[v] = 0;
  };
  gen(0);

  CubeScan cs = cube_scan(ps, -1);

  Rat w1 = weight_w(ctx, k1);
  long long minlvl = *std::min_element(ps.lvl.begin(), ps.lvl.end());

  RectReading out;
  // E(R) = -w(k1) + sum (-1)^{|I|+1} (level); the constant part collapses to
  // -w(k1) because the signed cube count of a full rectangle is -1.
  out.e = -w1 + Rat(int_of(cs.e_signed));
  out.min_w = w1 + Rat(int_of(minlvl));
  // Cube levels start at the vertex minimum, so bucket b holds level
  // minlvl + b and chi(S_n) is the running signed count.
  long long acc = 0;
  out.chi_tilde.reserve(cs.signed_by_level.size());
  for (std::size_t b = 0; b < cs.signed_by_level.size(); ++b) {
    acc += cs.signed_by_level[b];
    out.chi_tilde.push_back(acc - 1);
  }
  return out;
}

}  // namespace

EuResult eu_lattice(const LatticeContext& ctx, const CharClass& c, const EuOptions& opt) {
  ClassGeometry geo(ctx, c);

  EuResult res;
  res.d_invariant = 2 * geo.min_w;

  long long top = std::max<long long>(opt.stab_window + 2, 8);
  for (;;) {
    LevelScan scan = scan_levels(ctx, geo, top);
    // chi~ = chi - 1; stabilized when a suffix of >= stab_window zeros exists.
    std::vector<long long> chit(scan.chi.size());
    for (std::size_t i = 0; i < scan.chi.size(); ++i) chit[i] = scan.chi[i] - 1;
    long long suffix = 0;
    while (suffix < static_cast<long long>(chit.size()) &&
           chit[static_cast<std::size_t>(chit.size() - 1 - suffix)] == 0)
      ++suffix;
    if (suffix >= opt.stab_window) {
      long long total = 0;
      for (auto v : chit) total += v;
      res.eu = -geo.min_w + Rat(int_of(total));
      res.chi_tilde = chit;
      res.levels = static_cast<long>(chit.size());
      break;
    }
    if (top >= opt.level_cap)
      throw ComputationError("eu stabilization cap exceeded (level " + std::to_string(top) +
                             "); raise --cap");
    top = std::min<long long>(top * 2, opt.level_cap);
  }

  if (opt.rectangle_check) {
    // k1 = K + 2 * zone representative satisfies (k1, E_v) <= e_v + 1.
    QVec k1 = ctx.canonical_class() + Rat(2) * zone_representative(ctx, c.half);
    std::vector<RectReading> window;
    for (long m = 1;; ++m) {
      double cubes = std::pow(2.0 * m + 1.0, ctx.size());
      if (cubes > static_cast<double>(opt.rect_cube_cap)) break;
      window.push_back(rectangle_reading(ctx, k1, m));
      if (window.size() > 3) window.erase(window.begin());
      if (window.size() == 3 && window[0].e == window[1].e && window[1].e == window[2].e &&
          window[0].min_w == window[1].min_w && window[1].min_w == window[2].min_w &&
          window[0].min_w == geo.min_w) {
        const RectReading& r = window[0];
        long long sub_total = 0;
        for (auto v : r.chi_tilde) sub_total += v;
        Rat eu_sub = -r.min_w + Rat(int_of(sub_total));
        if (r.e != res.eu || eu_sub != res.eu)
          throw ComputationError("eu routes disagree: rectangle " + rat_str(r.e) +
                                 ", sublevel " + rat_str(eu_sub) + ", class scan " +
                                 rat_str(res.eu));
        res.rectangle_checked = true;
        break;
      }
    }
  }
  return res;
}

bool verify_symmetry(const LatticeContext& ctx, const EuOptions& opt) {
  const auto& dg = ctx.discriminant_group();
  std::map<ClassId, Rat> eu;
  for (const auto& h : dg.enumerate()) {
    CharClass c{h};
    eu[h] = eu_lattice(ctx, c, opt).eu;
  }
  for (const auto& h : dg.enumerate()) {
    CharClass c{h};
    CharClass ic = char_class_involution(ctx, c);
    if (eu[c.half] != eu[ic.half]) return false;
  }
  return true;
}

}  // namespace plumbsw
