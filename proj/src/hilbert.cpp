#include "plumbsw/hilbert.hpp"

#include <nlohmann/json.hpp>

namespace plumbsw {

const Rat& SwTable::at(const ClassId& h) const {
  for (const auto& [cls, v] : rows)
    if (cls == h) return v;
  throw PreconditionError("SwTable: unknown class " + h.str());
}

std::string SwTable::to_json() const {
  nlohmann::ordered_json j = nlohmann::ordered_json::array();
  for (const auto& [cls, v] : rows) {
    nlohmann::ordered_json row;
    row["class"] = cls.t;
    row["sw"] = rat_str(v);
    j.push_back(row);
  }
  return j.dump();
}

Rat hilbert_value_at(const LatticeContext& ctx, const QVec& lp) {
  QVec k2l = ctx.canonical_class() + Rat(2) * lp;
  Rat quad = (norm2(ctx, k2l) + Rat(ctx.size())) / Rat(8);
  return -Rat(counting_h(ctx, lp)) - quad;
}

Rat s_invariant(const LatticeContext& ctx, const ClassId& h) {
  QVec lp = zone_representative(ctx, ctx.discriminant_group().neg(h));
  return hilbert_value_at(ctx, lp);
}

SwTable sw_all(const LatticeContext& ctx) {
  SwTable t;
  t.method = "series";
  t.graph_fingerprint = graph_hash(ctx.graph());
  for (const auto& h : ctx.discriminant_group().enumerate())
    t.rows.emplace_back(h, s_invariant(ctx, h));
  return t;
}

std::vector<QVec> zone_representatives(const LatticeContext& ctx, const ClassId& h, int count) {
  const int s = ctx.size();
  QVec base = zone_representative(ctx, h);
  IVec a0 = ctx.dual(base);

  RVec m(s);
  for (int i = 0; i < s; ++i) {
    Rat acc = 0;
    for (int j = 0; j < s; ++j) acc += ctx.inv_neg_form()(i, j);
    m(i) = acc;
  }
  std::vector<QVec> reps{base};
  IVec last_c;
  for (Int k = 1; static_cast<int>(reps.size()) < count; ++k) {
    IVec c(s);
    bool same = last_c.size() == s;
    for (int i = 0; i < s; ++i) {
      c(i) = ceil_rat(Rat(k) * m(i));
      if (same && c(i) != last_c(i)) same = false;
    }
    if (same) continue;  // ceil plateau, same shift as the previous k
    IVec av(s);
    bool zone = true;
    for (int v = 0; v < s; ++v) {
      Int acc = a0(v);
      for (int j = 0; j < s; ++j) acc -= ctx.form()(v, j) * c(j);
      av(v) = acc;
      if (acc < Int(-ctx.graph().euler[v] - 1)) zone = false;
    }
    if (zone) {
      reps.push_back(ctx.from_dual(av));
      last_c = c;
    }
  }
  return reps;
}

bool hilbert_expression_check(const LatticeContext& ctx, const ClassId& h, int count) {
  if (count < 2) throw PreconditionError("hilbert_expression_check needs count >= 2");
  auto reps = zone_representatives(ctx, ctx.discriminant_group().neg(h), count);
  Rat first = hilbert_value_at(ctx, reps[0]);
  for (std::size_t i = 1; i < reps.size(); ++i)
    if (hilbert_value_at(ctx, reps[i]) != first) return false;
  return true;
}

ClassId transport_class_blowup(const LatticeContext& ctx, const LatticeContext& blown,
                               const ClassId& h, int v, int w) {
  QVec rep = ctx.class_rep(h);
  return blown.class_of(blowup_pullback(ctx, blown, rep, v, w));
}

}  // namespace plumbsw
