// Coefficient engine for the zeta series Z(t) = prod_v (1 - t^{E*_v})^{delta_v - 2}.
//
// In the variables x_v = t^{E*_v} the series factors per vertex, so the
// coefficient at l' = sum c_v E*_v is a product of one-variable binomial
// coefficients in the integer dual coordinates c_v: end-vertices contribute
// (1-x)^{-1}, valency-two vertices contribute 1, and nodes contribute the
// signed binomials of the polynomial (1-x)^{delta-2}. Everything downstream
// (counting functions, class-filtered one-variable series) is a finite exact
// sum of such products over a cone region, enumerated in int64 scaled
// coordinates.

#pragma once

#include "plumbsw/lattice.hpp"

#include <functional>
#include <map>
#include <ostream>
#include <vector>

namespace plumbsw {

/// Sparse table of Taylor coefficients, keyed by integer dual coordinates.
struct CoeffTable {
  std::map<std::vector<std::int64_t>, Int> coeff;
  std::vector<std::int64_t> bound;  // per-vertex cap used to generate it
};

/// Taylor coefficient p_{l'} of Z. Zero unless l' is a non-negative integer
/// combination of the E*_v.
Int coeff_p(const LatticeContext& ctx, const QVec& lp);

/// Coefficient by integer dual coordinates (must be componentwise >= 0).
Int coeff_p_dual(const LatticeContext& ctx, const std::vector<std::int64_t>& c);

/// Yields every l' = sum c_v E*_v with 0 <= c_v <= bound_v and p != 0.
void enumerate_support(const LatticeContext& ctx, const std::vector<std::int64_t>& bound,
                       const std::function<void(const std::vector<std::int64_t>&, const Int&)>& fn);

CoeffTable support_table(const LatticeContext& ctx, const std::vector<std::int64_t>& bound);

/// CSV rows "c_1,...,c_s,p" in key order (debug aid, not a stable format).
void dump_csv(const LatticeContext& ctx, const CoeffTable& table, std::ostream& os);

/// h(l') = sum of p_{l'+l} over l in L with some negative coordinate.
Int counting_h(const LatticeContext& ctx, const QVec& lp);

/// Same sum restricted to n_u < 0 for an end-vertex u.
Int counting_h_u(const LatticeContext& ctx, const QVec& lp, int u);

/// Coefficients c_0..c_N of the one-variable reduced series of class h at
/// vertex u (exponent i = d * E_u-coordinate).
std::vector<Int> one_var_series(const LatticeContext& ctx, const ClassId& h, int u, long n_max);

/// One enumeration pass serving all classes at once; rows follow
/// discriminant_group().enumerate() order.
std::vector<std::vector<Int>> one_var_series_all(const LatticeContext& ctx, int u, long n_max);

/// Checks the weighted-cube expansion of Z at every k in the region:
/// sum_I (-1)^{|I|+1} w((k,I)) must equal p_{(k-K)/2}.
bool verify_cube_expansion(const LatticeContext& ctx, const std::vector<QVec>& region);

/// All k = K + 2 sum c_v E*_v with 0 <= c_v <= cap (the usual test region).
std::vector<QVec> characteristic_region(const LatticeContext& ctx, long cap);

}  // namespace plumbsw
