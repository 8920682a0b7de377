// Shared test graphs and independent oracles.
//
// The oracle coefficient tables are built by repeated polynomial
// multiplication (never the closed-form binomial shortcut the library uses),
// so oracle agreement genuinely exercises the implementation.

#pragma once

#include "plumbsw/lattice.hpp"
#include "plumbsw/series.hpp"

#include <string>
#include <vector>

namespace fixtures {

using namespace plumbsw;

inline PlumbingGraph single(std::int64_t e) {
  PlumbingGraph g;
  g.ids = {"a"};
  g.euler = {e};
  return g;
}

inline PlumbingGraph chain(const std::vector<std::int64_t>& es) {
  PlumbingGraph g;
  for (std::size_t i = 0; i < es.size(); ++i) {
    g.ids.push_back("v" + std::to_string(i + 1));
    g.euler.push_back(es[i]);
    if (i > 0) g.edges.emplace_back(static_cast<int>(i - 1), static_cast<int>(i));
  }
  return g;
}

/// Star: first vertex is the centre, the rest are leaves.
inline PlumbingGraph star(std::int64_t center, const std::vector<std::int64_t>& leaves) {
  PlumbingGraph g;
  g.ids = {"c"};
  g.euler = {center};
  for (std::size_t i = 0; i < leaves.size(); ++i) {
    g.ids.push_back("l" + std::to_string(i + 1));
    g.euler.push_back(leaves[i]);
    g.edges.emplace_back(0, static_cast<int>(i + 1));
  }
  return g;
}

inline PlumbingGraph g1() { return single(-2); }
inline PlumbingGraph g2() { return single(-1); }
inline PlumbingGraph g4_d4() { return star(-2, {-2, -2, -2}); }
inline PlumbingGraph g5_a2() { return chain({-2, -2}); }

/// Path v1..v7 with v8 hanging off v3: arms of length 1, 2 and 4, i.e. E8.
inline PlumbingGraph g3_e8() {
  PlumbingGraph g = chain(std::vector<std::int64_t>(7, -2));
  g.ids.push_back("v8");
  g.euler.push_back(-2);
  g.edges.emplace_back(2, 7);
  return g;
}

inline PlumbingGraph e6() {
  PlumbingGraph g = chain(std::vector<std::int64_t>(5, -2));
  g.ids.push_back("v6");
  g.euler.push_back(-2);
  g.edges.emplace_back(2, 5);
  return g;
}

inline PlumbingGraph e7() {
  PlumbingGraph g = chain(std::vector<std::int64_t>(6, -2));
  g.ids.push_back("v7");
  g.euler.push_back(-2);
  g.edges.emplace_back(2, 6);
  return g;
}

// ---------------------------------------------------------------------------
// Oracles
// ---------------------------------------------------------------------------

/// Coefficients of (1-x)^m up to degree n, by repeated multiplication or
/// (for m < 0) repeated convolution with the geometric series.
inline std::vector<Int> series_pow_oracle(int m, long n) {
  std::vector<Int> acc(n + 1, Int(0));
  acc[0] = 1;
  if (m >= 0) {
    for (int rep = 0; rep < m; ++rep) {
      std::vector<Int> next(n + 1, Int(0));
      for (long i = 0; i <= n; ++i) {
        next[i] += acc[i];
        if (i + 1 <= n) next[i + 1] -= acc[i];
      }
      acc = next;
    }
  } else {
    for (int rep = 0; rep < -m; ++rep) {
      std::vector<Int> next(n + 1, Int(0));
      Int run = 0;
      for (long i = 0; i <= n; ++i) {  // convolution with (1,1,1,...)
        run += acc[i];
        next[i] = run;
      }
      acc = next;
    }
  }
  return acc;
}

/// p at integer dual coordinates, straight from the factored series.
inline Int oracle_coeff(const LatticeContext& ctx, const IVec& dual) {
  static_cast<void>(ctx);
  Int prod = 1;
  for (int v = 0; v < ctx.size(); ++v) {
    if (dual(v) < 0) return 0;
    long n = static_cast<long>(dual(v).get_si());
    auto row = series_pow_oracle(ctx.valency()[v] - 2, n);
    prod *= row[n];
    if (prod == 0) break;
  }
  return prod;
}

/// Brute-force counting function: sum p_{l'+l} over l in a [-box, box]^s
/// window with some negative coordinate. The caller picks `box` comfortably
/// large (and should spot-check stability by doubling it).
inline Int oracle_counting_h(const LatticeContext& ctx, const QVec& lp, long box) {
  const int s = ctx.size();
  IVec a = ctx.dual(lp);
  std::vector<long> l(s, -box);
  Int total = 0;
  for (;;) {
    bool neg = false;
    for (int v = 0; v < s; ++v)
      if (l[v] < 0) neg = true;
    if (neg) {
      IVec da(s);
      for (int v = 0; v < s; ++v) {
        Int acc = a(v);
        for (int j = 0; j < s; ++j) acc -= ctx.form()(v, j) * Int(l[j]);
        da(v) = acc;
      }
      total += oracle_coeff(ctx, da);
    }
    int i = s - 1;
    while (i >= 0 && l[i] == box) l[i--] = -box;
    if (i < 0) break;
    ++l[i];
  }
  return total;
}

/// Same restricted to l_u < 0.
inline Int oracle_counting_h_u(const LatticeContext& ctx, const QVec& lp, int u, long box) {
  const int s = ctx.size();
  IVec a = ctx.dual(lp);
  std::vector<long> l(s, -box);
  Int total = 0;
  for (;;) {
    if (l[u] < 0) {
      IVec da(s);
      for (int v = 0; v < s; ++v) {
        Int acc = a(v);
        for (int j = 0; j < s; ++j) acc -= ctx.form()(v, j) * Int(l[j]);
        da(v) = acc;
      }
      total += oracle_coeff(ctx, da);
    }
    int i = s - 1;
    while (i >= 0 && l[i] == box) l[i--] = -box;
    if (i < 0) break;
    ++l[i];
  }
  return total;
}

/// Determinant of -I by Laplace expansion with memoization on column masks;
/// independent of both the SNF and the Bareiss elimination in the library.
inline Int oracle_det_negI(const PlumbingGraph& g) {
  IMat m = -g.intersection_matrix();
  const int s = g.size();
  std::vector<Int> memo(1u << s, Int(0));
  std::vector<bool> seen(1u << s, false);
  std::function<Int(int, unsigned)> det = [&](int row, unsigned cols) -> Int {
    if (row == s) return 1;
    if (seen[cols]) return memo[cols];
    Int acc = 0;
    int pos = 0;
    for (int j = 0; j < s; ++j) {
      if (!(cols & (1u << j))) continue;
      if (m(row, j) != 0) {
        Int sub = det(row + 1, cols & ~(1u << j));
        acc += (pos % 2 == 0 ? 1 : -1) * m(row, j) * sub;
      }
      ++pos;
    }
    seen[cols] = true;
    memo[cols] = acc;
    return acc;
  };
  return det(0, (1u << s) - 1);
}

}  // namespace fixtures
