#include "plumbsw/series.hpp"
#include <bit>

#include <algorithm>
#include <limits>

namespace plumbsw {

namespace {

// [x^n] (1-x)^(delta-2), as a function of the valency.
Int vertex_factor(int delta, std::int64_t n) {
  if (n < 0) return 0;
  int m = delta - 2;
  if (m >= 0) {
    if (n > m) return 0;
    Int b = binomial(static_cast<unsigned long>(m), static_cast<unsigned long>(n));
    return (n % 2 == 0) ? b : Int(-b);
  }
  // (1-x)^{-r}: binom(n+r-1, n); only r = 1 (delta 1) and r = 2 (single vertex).
  int r = -m;
  return binomial(static_cast<unsigned long>(n + r - 1), static_cast<unsigned long>(n));
}

std::int64_t coeff_cap(int delta, std::int64_t box) {
  if (delta == 2) return 0;
  if (delta > 2) return std::min<std::int64_t>(box, delta - 2);
  return box;  // end-vertices are only limited by the box
}

struct FastContext {
  int s;
  std::int64_t d;
  LMat A;                       // d * (-I)^{-1}, positive entries
  std::vector<int> delta;
  std::vector<std::vector<Int>> fvals;  // vertex_factor table up to cap

  FastContext(const LatticeContext& ctx, const std::vector<std::int64_t>& caps) {
    s = ctx.size();
    d = to_i64(ctx.det());
    A = LMat(s, s);
    for (int i = 0; i < s; ++i)
      for (int j = 0; j < s; ++j) A(i, j) = to_i64(ctx.adj_neg_form()(i, j));
    delta = ctx.valency();
    fvals.resize(s);
    for (int w = 0; w < s; ++w) {
      fvals[w].reserve(caps[w] + 1);
      for (std::int64_t n = 0; n <= caps[w]; ++n) fvals[w].push_back(vertex_factor(delta[w], n));
    }
    // Partial sums of A*c stay well inside int64 for desk-scale inputs.
    Int worst = 0;
    for (int v = 0; v < s; ++v) {
      Int row = 0;
      for (int w = 0; w < s; ++w) row += ctx.adj_neg_form()(v, w) * Int(caps[w]);
      worst = std::max(worst, row);
    }
    if (!worst.fits_slong_p())
      throw ComputationError("series enumeration bounds exceed the int64 fast path");
  }
};

// Caps c_w so that the whole region { some (A c)_v < t_v } is enumerated:
// from (A c)_v < t_v follows c_w < t_v / A_vw for each w.
std::vector<std::int64_t> region_caps(const LatticeContext& ctx, const LVec& t,
                                      const std::vector<int>& fail_vertices) {
  const int s = ctx.size();
  std::vector<std::int64_t> caps(s, 0);
  for (int w = 0; w < s; ++w) {
    std::int64_t best = -1;
    for (int v : fail_vertices) {
      if (t(v) <= 0) continue;
      std::int64_t avw = to_i64(ctx.adj_neg_form()(v, w));
      std::int64_t q = (t(v) + avw - 1) / avw - 1;  // ceil(t/a) - 1
      best = std::max(best, q);
    }
    caps[w] = std::max<std::int64_t>(best, 0);
  }
  return caps;
}

// Shared recursive walk over the coefficient support box.
template <typename Leaf>
void walk_support(const FastContext& fc, const std::vector<std::int64_t>& caps, Leaf&& leaf) {
  const int s = fc.s;
  std::vector<std::int64_t> c(s, 0);
  LVec P = LVec::Zero(s);

  // Depth-first over vertices; P = A * c maintained incrementally.
  std::function<void(int, Int)> rec = [&](int w, Int acc) {
    if (w == s) {
      leaf(c, P, acc);
      return;
    }
    for (std::int64_t n = 0;; ++n) {
      c[w] = n;
      if (n > 0)
        for (int v = 0; v < s; ++v) P(v) += fc.A(v, w);
      const Int& f = fc.fvals[w][n];
      if (f != 0) rec(w + 1, acc * f);
      if (n >= caps[w]) break;
    }
    for (int v = 0; v < s; ++v) P(v) -= fc.A(v, w) * c[w];
    c[w] = 0;
  };
  rec(0, Int(1));
}

LVec scaled_coords(const LatticeContext& ctx, const QVec& lp) {
  LVec t(ctx.size());
  for (int i = 0; i < ctx.size(); ++i) t(i) = to_i64(scale_to_int(lp(i), ctx.det()));
  return t;
}

Int counting_sum(const LatticeContext& ctx, const QVec& lp, const std::vector<int>& fail_set,
                 bool any_fail) {
  const int s = ctx.size();
  if (!ctx.in_dual_lattice(lp)) throw PreconditionError("counting function needs l' in L'");
  LVec t = scaled_coords(ctx, lp);
  auto caps = region_caps(ctx, t, fail_set);
  for (int w = 0; w < s; ++w) caps[w] = coeff_cap(ctx.valency()[w], caps[w]);
  FastContext fc(ctx, caps);
  const std::int64_t d = fc.d;

  Int total = 0;
  walk_support(fc, caps, [&](const std::vector<std::int64_t>&, const LVec& P, const Int& q) {
    bool fail = false;
    for (int v = 0; v < s; ++v) {
      std::int64_t diff = P(v) - t(v);
      if (diff % d != 0) return;  // b - l' not in L
      if (any_fail) {
        if (diff < 0) fail = true;
      }
    }
    if (!any_fail) {
      std::int64_t diff = P(fail_set[0]) - t(fail_set[0]);
      fail = diff < 0;
    }
    if (fail) total += q;
  });
  return total;
}

}  // namespace

Int coeff_p(const LatticeContext& ctx, const QVec& lp) {
  const int s = ctx.size();
  // c = dual coordinates; non-integral or negative kills the coefficient.
  std::vector<std::int64_t> c(s);
  for (int v = 0; v < s; ++v) {
    Rat acc = 0;
    for (int j = 0; j < s; ++j)
      if (ctx.form()(v, j) != 0) acc -= Rat(ctx.form()(v, j)) * lp(j);
    acc.canonicalize();
    if (acc.get_den() != 1) return 0;
    if (acc.get_num() < 0) return 0;
    c[v] = to_i64(acc.get_num());
  }
  return coeff_p_dual(ctx, c);
}

Int coeff_p_dual(const LatticeContext& ctx, const std::vector<std::int64_t>& c) {
  Int prod = 1;
  for (int v = 0; v < ctx.size(); ++v) {
    prod *= vertex_factor(ctx.valency()[v], c[v]);
    if (prod == 0) return prod;
  }
  return prod;
}

void enumerate_support(const LatticeContext& ctx, const std::vector<std::int64_t>& bound,
                       const std::function<void(const std::vector<std::int64_t>&, const Int&)>& fn) {
  if (static_cast<int>(bound.size()) != ctx.size())
    throw PreconditionError("enumerate_support: bound size mismatch");
  std::vector<std::int64_t> caps(bound);
  for (int w = 0; w < ctx.size(); ++w) caps[w] = coeff_cap(ctx.valency()[w], bound[w]);
  FastContext fc(ctx, caps);
  walk_support(fc, caps,
               [&](const std::vector<std::int64_t>& c, const LVec&, const Int& q) { fn(c, q); });
}

CoeffTable support_table(const LatticeContext& ctx, const std::vector<std::int64_t>& bound) {
  CoeffTable t;
  t.bound = bound;
  enumerate_support(ctx, bound,
                    [&](const std::vector<std::int64_t>& c, const Int& q) { t.coeff[c] = q; });
  return t;
}

void dump_csv(const LatticeContext& ctx, const CoeffTable& table, std::ostream& os) {
  for (int v = 0; v < ctx.size(); ++v) os << "c_" << ctx.graph().ids[v] << ",";
  os << "p\n";
  for (const auto& [c, q] : table.coeff) {
    for (auto x : c) os << x << ",";
    os << q.get_str() << "\n";
  }
}

Int counting_h(const LatticeContext& ctx, const QVec& lp) {
  std::vector<int> all(ctx.size());
  for (int v = 0; v < ctx.size(); ++v) all[v] = v;
  return counting_sum(ctx, lp, all, true);
}

Int counting_h_u(const LatticeContext& ctx, const QVec& lp, int u) {
  if (ctx.size() < 2 || u < 0 || u >= ctx.size() || ctx.valency()[u] != 1)
    throw PreconditionError("counting_h_u: u is not an end-vertex");
  return counting_sum(ctx, lp, {u}, false);
}

std::vector<std::vector<Int>> one_var_series_all(const LatticeContext& ctx, int u, long n_max) {
  if (n_max < 0) throw PreconditionError("one_var_series: N must be >= 0");
  if (u < 0 || u >= ctx.size()) throw PreconditionError("one_var_series: bad vertex");
  const int s = ctx.size();
  const auto& dg = ctx.discriminant_group();
  auto classes = dg.enumerate();
  std::map<ClassId, int> index;
  for (std::size_t i = 0; i < classes.size(); ++i) index[classes[i]] = static_cast<int>(i);

  // Exponent of t at support point c is (A c)_u; every g_w = A_uw is > 0,
  // so the budget caps each multiplicity.
  std::vector<std::int64_t> caps(s);
  for (int w = 0; w < s; ++w) {
    std::int64_t g = to_i64(ctx.adj_neg_form()(u, w));
    caps[w] = coeff_cap(ctx.valency()[w], n_max / g);
  }
  FastContext fc(ctx, caps);

  std::vector<std::vector<Int>> out(classes.size(), std::vector<Int>(n_max + 1, Int(0)));
  // Class of sum c_w E*_w folds incrementally from the columns' classes.
  std::vector<ClassId> colcls(s);
  for (int w = 0; w < s; ++w) colcls[w] = ctx.class_of(ctx.dual_basis(w));

  std::function<void(int, std::int64_t, Int, ClassId)> rec = [&](int w, std::int64_t expo,
                                                                 Int acc, ClassId cls) {
    if (w == s) {
      out[index[cls]][expo] += acc;
      return;
    }
    std::int64_t g = fc.A(u, w);
    ClassId cur = cls;
    for (std::int64_t n = 0; n <= caps[w] && expo + n * g <= n_max; ++n) {
      if (n > 0) cur = dg.add(cur, colcls[w]);
      const Int& f = fc.fvals[w][n];
      if (f != 0) rec(w + 1, expo + n * g, acc * f, cur);
    }
  };
  rec(0, 0, Int(1), dg.zero());
  return out;
}

std::vector<Int> one_var_series(const LatticeContext& ctx, const ClassId& h, int u, long n_max) {
  auto all = one_var_series_all(ctx, u, n_max);
  auto classes = ctx.discriminant_group().enumerate();
  for (std::size_t i = 0; i < classes.size(); ++i)
    if (classes[i] == h) return all[i];
  throw PreconditionError("one_var_series: unknown class id");
}

std::vector<QVec> characteristic_region(const LatticeContext& ctx, long cap) {
  std::vector<QVec> region;
  std::vector<std::int64_t> c(ctx.size(), 0);
  for (;;) {
    IVec a(ctx.size());
    for (int v = 0; v < ctx.size(); ++v) a(v) = ctx.canonical_dual()(v) + 2 * c[v];
    region.push_back(ctx.from_dual(a));
    int i = ctx.size() - 1;
    while (i >= 0 && c[i] == cap) c[i--] = 0;
    if (i < 0) break;
    ++c[i];
  }
  return region;
}

bool verify_cube_expansion(const LatticeContext& ctx, const std::vector<QVec>& region) {
  const int s = ctx.size();
  if (s > 20) throw ComputationError("verify_cube_expansion: too many vertices");
  const unsigned full = 1u << s;

  // Neighbour masks for the quadratic-form recursion over subsets.
  std::vector<unsigned> nbr(s, 0);
  for (auto [a, b] : ctx.graph().edges) {
    nbr[a] |= 1u << b;
    nbr[b] |= 1u << a;
  }

  // q(1_J) = 1_J^T (-I) 1_J, built up one vertex at a time.
  std::vector<std::int64_t> qJ(full, 0);
  for (unsigned J = 1; J < full; ++J) {
    int v = std::countr_zero(J);
    unsigned rest = J & (J - 1);
    qJ[J] = qJ[rest] - ctx.graph().euler[v] -
            2 * std::popcount(rest & nbr[v]);
  }

  std::vector<std::int64_t> f(full), sumA(full);
  for (const QVec& k : region) {
    if (!ctx.is_characteristic(k))
      throw PreconditionError("verify_cube_expansion: region contains non-characteristic k");
    IVec a = ctx.dual(k);
    LVec al(s);
    for (int v = 0; v < s; ++v) al(v) = to_i64(a(v));

    sumA[0] = 0;
    for (unsigned J = 1; J < full; ++J) {
      int v = std::countr_zero(J);
      sumA[J] = sumA[J & (J - 1)] + al(v);
    }
    // Relative vertex weights w(k + 2E_J) - w(k); integers by parity of Char.
    for (unsigned J = 0; J < full; ++J) f[J] = (sumA[J] + qJ[J]) / 2;
    // Cube weight = max over sub-corners (subset-max sweep in place).
    for (int v = 0; v < s; ++v)
      for (unsigned J = 0; J < full; ++J)
        if (J & (1u << v)) f[J] = std::max(f[J], f[J ^ (1u << v)]);

    std::int64_t lhs = 0;
    for (unsigned J = 0; J < full; ++J) lhs += (std::popcount(J) % 2 == 0) ? -f[J] : f[J];

    // p at (k - K)/2, straight from dual coordinates.
    Int rhs = 1;
    for (int v = 0; v < s; ++v) {
      Int n2 = (a(v) - ctx.canonical_dual()(v)) / 2;
      if (n2 < 0) {
        rhs = 0;
        break;
      }
      rhs *= vertex_factor(ctx.valency()[v], to_i64(n2));
      if (rhs == 0) break;
    }
    if (rhs != Int(lhs)) return false;
  }
  return true;
}

}  // namespace plumbsw
