#include "plumbsw/lattice.hpp"

#include <algorithm>
#include <sstream>

namespace plumbsw {

namespace {

std::int64_t mod_pos(std::int64_t x, std::int64_t m) {
  std::int64_t r = x % m;
  return r < 0 ? r + m : r;
}

// Exact Gauss-Jordan inverse of a nonsingular integer matrix, as rationals.
RMat exact_inverse(const IMat& a) {
  const int n = static_cast<int>(a.rows());
  RMat m(n, 2 * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      m(i, j) = Rat(a(i, j));
      m(i, n + j) = (i == j) ? 1 : 0;
    }
  for (int c = 0; c < n; ++c) {
    int p = c;
    while (p < n && m(p, c) == 0) ++p;
    if (p == n) throw PreconditionError("exact_inverse: singular matrix");
    if (p != c) m.row(p).swap(m.row(c));
    Rat piv = m(c, c);
    for (int j = c; j < 2 * n; ++j) m(c, j) /= piv;
    for (int i = 0; i < n; ++i) {
      if (i == c || m(i, c) == 0) continue;
      Rat f = m(i, c);
      for (int j = c; j < 2 * n; ++j) m(i, j) -= f * m(c, j);
    }
  }
  return m.rightCols(n);
}

}  // namespace

std::string ClassId::str() const {
  std::string s = "[";
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(t[i]);
  }
  return s + "]";
}

ClassId DiscriminantGroup::class_of_dual(const IVec& a) const {
  // y = U a, reduced mod the invariant factors.
  ClassId h;
  h.t.reserve(factor_rows.size());
  for (std::size_t i = 0; i < factor_rows.size(); ++i) {
    int r = factor_rows[i];
    Int y = 0;
    for (int j = 0; j < snf.U.cols(); ++j) y += snf.U(r, j) * a(j);
    Int m = y % factors[i];
    if (m < 0) m += factors[i];
    h.t.push_back(to_i64(m));
  }
  return h;
}

IVec DiscriminantGroup::dual_rep(const ClassId& h) const {
  const int n = static_cast<int>(snf.U.rows());
  IVec y = IVec::Zero(n);
  for (std::size_t i = 0; i < factor_rows.size(); ++i) y(factor_rows[i]) = h.t[i];
  IVec a(n);
  for (int i = 0; i < n; ++i) {
    Int acc = 0;
    for (int j = 0; j < n; ++j) acc += snf.Uinv(i, j) * y(j);
    a(i) = acc;
  }
  return a;
}

ClassId DiscriminantGroup::add(const ClassId& x, const ClassId& y) const {
  ClassId r;
  r.t.resize(factors.size());
  for (std::size_t i = 0; i < factors.size(); ++i)
    r.t[i] = mod_pos(x.t[i] + y.t[i], factors[i]);
  return r;
}

ClassId DiscriminantGroup::neg(const ClassId& x) const {
  ClassId r;
  r.t.resize(factors.size());
  for (std::size_t i = 0; i < factors.size(); ++i) r.t[i] = mod_pos(-x.t[i], factors[i]);
  return r;
}

ClassId DiscriminantGroup::zero() const {
  ClassId r;
  r.t.assign(factors.size(), 0);
  return r;
}

std::vector<ClassId> DiscriminantGroup::enumerate() const {
  std::vector<ClassId> out;
  ClassId cur = zero();
  for (;;) {
    out.push_back(cur);
    int i = static_cast<int>(factors.size()) - 1;
    while (i >= 0 && cur.t[i] + 1 == factors[i]) cur.t[i--] = 0;
    if (i < 0) break;
    ++cur.t[i];
  }
  return out;
}

LatticeContext::LatticeContext(const PlumbingGraph& g) : graph_(g) {
  auto rep = validate(g);
  if (!rep.pass) {
    std::string why = "invalid graph";
    for (const auto& r : rep.reasons) why += "; " + r;
    throw PreconditionError(why);
  }
  s_ = g.size();
  I_ = g.intersection_matrix();
  valency_ = g.valencies();

  IMat negI = -I_;
  invI_ = exact_inverse(negI);

  // det(-I) via the SNF diagonal (all invariant factors are positive here).
  disc_.snf = smith_normal_form(negI);
  disc_.order = 1;
  for (int i = 0; i < s_; ++i) disc_.order *= disc_.snf.diag(i);
  d_ = disc_.order;
  for (int i = 0; i < s_; ++i)
    if (disc_.snf.diag(i) > 1) {
      disc_.factors.push_back(to_i64(disc_.snf.diag(i)));
      disc_.factor_rows.push_back(i);
    }

  adjI_ = IMat(s_, s_);
  for (int i = 0; i < s_; ++i)
    for (int j = 0; j < s_; ++j) {
      Rat v = invI_(i, j) * Rat(d_);
      v.canonicalize();
      if (v.get_den() != 1 || v <= 0)
        throw ComputationError("dual basis entry not positive integral/d");
      adjI_(i, j) = v.get_num();
    }

  aK_ = IVec(s_);
  for (int v = 0; v < s_; ++v) aK_(v) = Int(2 + graph_.euler[v]);
  K_ = from_dual(aK_);
}

IVec LatticeContext::dual(const QVec& x) const {
  IVec a(s_);
  for (int v = 0; v < s_; ++v) {
    Rat acc = 0;
    for (int j = 0; j < s_; ++j)
      if (I_(v, j) != 0) acc -= Rat(I_(v, j)) * x(j);
    acc.canonicalize();
    if (acc.get_den() != 1)
      throw PreconditionError("dual: vector is not in L' (non-integer pairing)");
    a(v) = acc.get_num();
  }
  return a;
}

QVec LatticeContext::from_dual(const IVec& a) const {
  QVec x(s_);
  for (int i = 0; i < s_; ++i) {
    Rat acc = 0;
    for (int j = 0; j < s_; ++j) acc += invI_(i, j) * Rat(a(j));
    acc.canonicalize();
    x(i) = acc;
  }
  return x;
}

bool LatticeContext::in_dual_lattice(const QVec& x) const {
  for (int v = 0; v < s_; ++v) {
    Rat acc = 0;
    for (int j = 0; j < s_; ++j)
      if (I_(v, j) != 0) acc += Rat(I_(v, j)) * x(j);
    acc.canonicalize();
    if (acc.get_den() != 1) return false;
  }
  return true;
}

bool LatticeContext::in_lattice(const QVec& x) const {
  for (int i = 0; i < s_; ++i) {
    Rat c = x(i);
    c.canonicalize();
    if (c.get_den() != 1) return false;
  }
  return true;
}

ClassId LatticeContext::class_of(const QVec& x) const { return disc_.class_of_dual(dual(x)); }

QVec LatticeContext::class_rep(const ClassId& h) const { return from_dual(disc_.dual_rep(h)); }

bool LatticeContext::is_characteristic(const QVec& k) const {
  if (!in_dual_lattice(k)) return false;
  IVec a = dual(k);
  for (int v = 0; v < s_; ++v)
    if ((a(v) - Int(graph_.euler[v])) % 2 != 0) return false;
  return true;
}

std::string LatticeContext::qvec_str(const QVec& x) const {
  std::ostringstream os;
  os << "(";
  for (int i = 0; i < s_; ++i) os << (i ? "," : "") << rat_str(x(i));
  os << ")";
  return os.str();
}

LatticeContext build_context(const PlumbingGraph& g) { return LatticeContext(g); }

bool in_lipman_cone(const LatticeContext& ctx, const QVec& x, bool strict) {
  for (int v = 0; v < ctx.size(); ++v) {
    Rat p = 0;
    for (int j = 0; j < ctx.size(); ++j)
      if (ctx.form()(v, j) != 0) p += Rat(ctx.form()(v, j)) * x(j);
    if (strict ? !(p < 0) : !(p <= 0)) return false;
  }
  return true;
}

Rat weight_w(const LatticeContext& ctx, const QVec& k) {
  if (!ctx.is_characteristic(k))
    throw PreconditionError("weight_w: vector is not characteristic");
  Rat w = -(norm2(ctx, k) + Rat(ctx.size())) / 8;
  w.canonicalize();
  return w;
}

QVec restrict_to_subgraph(const LatticeContext& ctx, const LatticeContext& sub,
                          int u, const QVec& x) {
  if (u < 0 || u >= ctx.size() || ctx.valency()[u] != 1)
    throw PreconditionError("restrict_to_subgraph: u is not an end-vertex");
  if (sub.size() != ctx.size() - 1)
    throw PreconditionError("restrict_to_subgraph: wrong subgraph context");
  IVec a = ctx.dual(x);
  IVec asub(sub.size());
  int j = 0;
  for (int v = 0; v < ctx.size(); ++v)
    if (v != u) asub(j++) = a(v);
  return sub.from_dual(asub);
}

QVec zone_representative(const LatticeContext& ctx, const ClassId& h) {
  const int s = ctx.size();
  IVec a = ctx.discriminant_group().dual_rep(h);
  IVec bound(s);
  for (int v = 0; v < s; ++v) bound(v) = Int(-ctx.graph().euler[v] - 1);

  auto in_zone = [&](const IVec& av) {
    for (int v = 0; v < s; ++v)
      if (av(v) < bound(v)) return false;
    return true;
  };

  // a + (-I)c shifts the dual coordinates; c = ceil(k * m) with
  // m = (-I)^{-1} 1 > 0 pushes them up by k + O(1), so this terminates.
  RVec m(s);
  for (int i = 0; i < s; ++i) {
    Rat acc = 0;
    for (int j = 0; j < s; ++j) acc += ctx.inv_neg_form()(i, j);
    m(i) = acc;
  }
  for (Int k = 0;; ++k) {
    IVec c(s);
    for (int i = 0; i < s; ++i) c(i) = ceil_rat(Rat(k) * m(i));
    IVec av(s);
    for (int v = 0; v < s; ++v) {
      Int acc = a(v);
      for (int j = 0; j < s; ++j) acc -= ctx.form()(v, j) * c(j);
      av(v) = acc;
    }
    if (in_zone(av)) return ctx.from_dual(av);
  }
}

CharClass spinc_char_class(const LatticeContext& ctx, const ClassId& h) {
  return CharClass{ctx.discriminant_group().neg(h)};
}

CharClass char_class_involution(const LatticeContext& ctx, const CharClass& c) {
  // -(K + 2l') = K + 2(-l' - K), so [k] -> [-k] is l' -> -(l' + [K]).
  const auto& dg = ctx.discriminant_group();
  ClassId kcls = ctx.class_of(ctx.canonical_class());
  return CharClass{dg.neg(dg.add(c.half, kcls))};
}

QVec char_class_rep(const LatticeContext& ctx, const CharClass& c) {
  return ctx.canonical_class() + Rat(2) * ctx.class_rep(c.half);
}

QVec blowup_pullback(const LatticeContext& ctx, const LatticeContext& blown,
                     const QVec& x, int v, int w) {
  if (blown.size() != ctx.size() + 1)
    throw PreconditionError("blowup_pullback: blown context has wrong size");
  QVec y(blown.size());
  for (int i = 0; i < ctx.size(); ++i) y(i) = x(i);
  y(ctx.size()) = (w >= 0) ? Rat(x(v) + x(w)) : x(v);
  return y;
}

std::vector<std::string> qvec_strings(const QVec& x) {
  std::vector<std::string> out;
  out.reserve(x.size());
  for (int i = 0; i < x.size(); ++i) out.push_back(rat_str(x(i)));
  return out;
}

}  // namespace plumbsw
