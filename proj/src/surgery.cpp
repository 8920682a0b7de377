#include "plumbsw/surgery.hpp"

#include <algorithm>

namespace plumbsw {

namespace {

// Representative of h with (l', E*_u) in [0,1) (hi=false) or (-1,0] (hi=true).
// Only the E_u-coefficient is adjusted, which pins it uniquely mod nothing:
// shifting by E_u moves the pairing by exactly -1.
QVec unit_interval_rep(const LatticeContext& ctx, const ClassId& h, int u, bool half_open_low) {
  QVec r = ctx.class_rep(h);
  Rat val = pairing(ctx, r, ctx.dual_basis(u));
  Int c = half_open_low ? ceil_rat(val) : floor_rat(val);
  r(u) += Rat(c);
  return r;
}

int end_vertex_neighbour(const LatticeContext& ctx, int u) {
  if (u < 0 || u >= ctx.size() || ctx.valency()[u] != 1)
    throw PreconditionError("expected an end-vertex");
  for (auto [a, b] : ctx.graph().edges) {
    if (a == u) return b;
    if (b == u) return a;
  }
  throw PreconditionError("end-vertex has no edge");
}

Rat quad_term(const LatticeContext& ctx, const QVec& lp) {
  QVec k2l = ctx.canonical_class() + Rat(2) * lp;
  return (norm2(ctx, k2l) + Rat(ctx.size())) / Rat(8);
}

}  // namespace

PeriodicConstantResult periodic_constant(const std::vector<Int>& coeffs,
                                         const std::vector<long>& periods) {
  const long n_coeff = static_cast<long>(coeffs.size());
  std::vector<long> cand(periods);
  std::sort(cand.begin(), cand.end());
  for (long p : cand) {
    if (p <= 0) continue;
    long blocks = n_coeff / p;  // Q(n) defined for n = 0..blocks
    if (blocks < 6) continue;

    std::vector<Int> q(blocks + 1);
    q[0] = 0;
    {
      Int acc = 0;
      long i = 0;
      for (long n = 1; n <= blocks; ++n) {
        for (; i < p * n; ++i) acc += coeffs[static_cast<std::size_t>(i)];
        q[n] = acc;
      }
    }
    // Largest tail on which third differences vanish.
    long n0 = blocks - 3;
    while (n0 > 0) {
      Int d3 = q[n0 + 2] - q[n0 - 1] + 3 * (q[n0] - q[n0 + 1]);
      if (d3 != 0) break;
      --n0;
    }
    // n0 is now the first index whose difference window is clean.
    if (blocks - n0 < 5) continue;  // need 3 fit nodes + >= 2 verification nodes

    Int d0 = q[n0];
    Int d1 = q[n0 + 1] - q[n0];
    Int d2 = q[n0 + 2] - 2 * q[n0 + 1] + q[n0];
    // Newton form P(n) = d0 + d1 (n-n0) + d2 (n-n0)(n-n0-1)/2, evaluated at 0.
    Rat at0 = Rat(d0) - Rat(d1) * Rat(n0) + Rat(d2) * Rat(Int(n0) * Int(n0 + 1)) / Rat(2);
    auto poly_at = [&](long n) {
      Int m = Int(n) - Int(n0);
      return Rat(d0) + Rat(d1) * Rat(m) + Rat(d2) * Rat(m * (m - 1)) / Rat(2);
    };
    bool ok = true;
    for (long n = n0; n <= blocks; ++n)
      if (poly_at(n) != Rat(q[n])) {
        ok = false;
        break;
      }
    if (!ok) continue;

    PeriodicConstantResult res;
    res.value = at0;
    res.period_used = p;
    res.fit_lo = n0;
    res.fit_hi = blocks;
    res.verified_points = blocks - n0 - 2;
    return res;
  }
  throw ComputationError("periodic_constant: no candidate period fits the window");
}

Rat pc_of_reduced_series(const LatticeContext& ctx, const ClassId& h, int u,
                         const PcOptions& opt, PeriodicConstantResult* details) {
  if (ctx.size() < 2) throw PreconditionError("pc_of_reduced_series: need |V| >= 2");
  (void)end_vertex_neighbour(ctx, u);  // validates u
  const long d = static_cast<long>(to_i64(ctx.det()));
  std::vector<long> periods;
  for (int m = 1; m <= opt.period_multiples; ++m) periods.push_back(m * d);

  for (long blocks = opt.initial_blocks;; blocks *= 2) {
    long n_max = blocks * d - 1;
    auto coeffs = one_var_series(ctx, h, u, n_max);
    try {
      auto res = periodic_constant(coeffs, periods);
      if (details) *details = res;
      return res.value;
    } catch (const ComputationError&) {
      if (blocks >= opt.max_blocks)
        throw ComputationError("pc did not stabilize within " + std::to_string(blocks) +
                               " blocks; raise --cap");
    }
  }
}

bool verify_partial_sum(const LatticeContext& ctx, const QVec& lp, int u, const PcOptions&) {
  (void)end_vertex_neighbour(ctx, u);
  Int lhs = counting_h_u(ctx, lp, u);
  Int bound = scale_to_int(lp(u), ctx.det());  // d * l'_u
  Int rhs = 0;
  if (bound > 0) {
    auto coeffs = one_var_series(ctx, ctx.class_of(lp), u, to_i64(bound) - 1);
    for (const auto& c : coeffs) rhs += c;
  }
  return lhs == rhs;
}

bool surgery_identity_direct(const LatticeContext& ctx, const ClassId& h, int u,
                             const PcOptions& opt) {
  const auto& dg = ctx.discriminant_group();
  // l' of class -h with (l', E*_u) in (-1, 0].
  QVec lbar = unit_interval_rep(ctx, dg.neg(h), u, /*half_open_low=*/true);

  Rat lhs = pc_of_reduced_series(ctx, dg.neg(h), u, opt);

  LatticeContext sub(delete_end_vertex(ctx.graph(), ctx.graph().ids[u]));
  QVec rl = restrict_to_subgraph(ctx, sub, u, lbar);
  Rat rhs = -s_invariant(ctx, h) - quad_term(ctx, lbar) +
            s_invariant(sub, sub.class_of(-rl)) + quad_term(sub, rl);
  return lhs == rhs;
}

bool verify_surgery_identity(const LatticeContext& ctx, const ClassId& h, int u,
                             const PcOptions& opt) {
  if (!surgery_identity_direct(ctx, h, u, opt)) return false;
  int w = end_vertex_neighbour(ctx, u);
  if (ctx.valency()[w] == 2) return true;
  // The identity's proof route: blow up the supporting edge so the new
  // neighbour has valency two, and check there as well.
  PlumbingGraph gb = blow_up_edge(ctx.graph(), ctx.graph().ids[u], ctx.graph().ids[w]);
  LatticeContext ctxb(gb);
  ClassId hb = transport_class_blowup(ctx, ctxb, h, u, w);
  return surgery_identity_direct(ctxb, hb, u, opt);
}

SwTable sw_surgery_all(const LatticeContext& ctx, const PcOptions& opt) {
  SwTable t;
  t.method = "surgery";
  t.graph_fingerprint = graph_hash(ctx.graph());
  const auto& dg = ctx.discriminant_group();

  if (ctx.size() == 1) {
    for (const auto& h : dg.enumerate()) t.rows.emplace_back(h, s_invariant(ctx, h));
    return t;
  }

  // Deleting the end-vertex with the smallest subgraph determinant keeps the
  // subsequent series enumerations cheap; any end-vertex would be valid.
  int best_u = -1;
  Int best_det;
  LatticeContext sub = ctx;  // placeholder; replaced below
  for (int u = 0; u < ctx.size(); ++u) {
    if (ctx.valency()[u] != 1) continue;
    LatticeContext cand(delete_end_vertex(ctx.graph(), ctx.graph().ids[u]));
    if (best_u < 0 || cand.det() < best_det) {
      best_u = u;
      best_det = cand.det();
      sub = cand;
    }
  }
  if (best_u < 0) throw ComputationError("no end-vertex found in a tree");

  SwTable subtable = sw_surgery_all(sub, opt);
  for (const auto& h : dg.enumerate()) {
    // lbar has class -h and (lbar, E*_u) in (-1, 0]; the extension of
    // h * sigma_can used by the surgery step is -lbar.
    QVec lbar = unit_interval_rep(ctx, dg.neg(h), best_u, /*half_open_low=*/true);
    Rat pc = pc_of_reduced_series(ctx, dg.neg(h), best_u, opt);
    QVec rl = restrict_to_subgraph(ctx, sub, best_u, lbar);
    Rat value = -pc + subtable.at(sub.class_of(-rl)) + quad_term(sub, rl) - quad_term(ctx, lbar);
    t.rows.emplace_back(h, value);
  }
  return t;
}

Rat sw_via_surgery(const LatticeContext& ctx, const ClassId& h, const PcOptions& opt) {
  return sw_surgery_all(ctx, opt).at(h);
}

}  // namespace plumbsw
