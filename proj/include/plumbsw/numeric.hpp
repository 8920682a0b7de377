// Exact scalar types and small numeric helpers shared by every module.
//
// All arithmetic in this library is exact: integers are GMP mpz, rationals
// are GMP mpq, and matrices/vectors are Eigen dense types instantiated on
// those scalars. Nothing here ever touches floating point except the
// enumeration heuristics in latcoh.cpp, which are always re-checked with
// exact integer predicates before a value is used.

#pragma once

#include <gmpxx.h>

#include <Eigen/Core>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace plumbsw {

using Int = mpz_class;
using Rat = mpq_class;

using IMat = Eigen::Matrix<Int, Eigen::Dynamic, Eigen::Dynamic>;
using IVec = Eigen::Matrix<Int, Eigen::Dynamic, 1>;
using RMat = Eigen::Matrix<Rat, Eigen::Dynamic, Eigen::Dynamic>;
using RVec = Eigen::Matrix<Rat, Eigen::Dynamic, 1>;

/// Element of L' in E_v coordinates (exact rationals, denominators divide d).
using QVec = RVec;

// int64 fast-path aliases used by the enumeration engines.
using LMat = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;
using LVec = Eigen::Matrix<std::int64_t, Eigen::Dynamic, 1>;

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct PreconditionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Non-convergence of a stabilization loop, or disagreement between two
/// computation routes that are required to agree.
struct ComputationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline Rat make_rat(Int num, Int den) {
  if (den == 0) throw std::invalid_argument("make_rat: zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

inline Int floor_rat(const Rat& r) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
  return q;
}

inline Int ceil_rat(const Rat& r) {
  Int q;
  mpz_cdiv_q(q.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
  return q;
}

/// Renders an exact rational as "p" or "p/q" (never a float).
inline std::string rat_str(const Rat& r) {
  Rat c = r;
  c.canonicalize();
  if (c.get_den() == 1) return c.get_num().get_str();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

inline std::string int_str(const Int& n) { return n.get_str(); }

/// Parses "p" or "p/q".
inline Rat rat_parse(const std::string& s) {
  Rat r;
  if (mpq_set_str(r.get_mpq_t(), s.c_str(), 10) != 0)
    throw ParseError("not a rational: '" + s + "'");
  if (r.get_den() <= 0) throw ParseError("bad denominator in '" + s + "'");
  r.canonicalize();
  return r;
}

inline Int binomial(unsigned long n, unsigned long k) {
  Int b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return b;
}

/// mpz_class lacks a long long constructor; on this platform long is 64-bit.
inline Int int_of(long long v) { return Int(static_cast<long>(v)); }

inline std::int64_t to_i64(const Int& v) {
  if (!v.fits_slong_p())
    throw ComputationError("integer exceeds the int64 fast path: " + v.get_str());
  return static_cast<std::int64_t>(v.get_si());
}

/// Exact d*r for rationals whose denominator divides d.
inline Int scale_to_int(const Rat& r, const Int& d) {
  Rat s = r * Rat(d);
  s.canonicalize();
  if (s.get_den() != 1)
    throw ComputationError("denominator does not divide " + d.get_str());
  return s.get_num();
}

struct VecHash {
  std::size_t operator()(const std::vector<std::int64_t>& v) const {
    std::uint64_t h = 1469598103934665603ull;
    for (auto x : v) {
      h ^= static_cast<std::uint64_t>(x) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }
};

}  // namespace plumbsw
