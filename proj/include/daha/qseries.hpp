#pragma once

#include <map>
#include <string>
#include <vector>

#include "daha/common.hpp"

namespace daha {

// Truncated series in u = q^{1/4} whose coefficients are integer Laurent
// polynomials in v = t^{1/2} and (optionally) a lattice variable X.
//
// Truncation contract:
//   * u-exponents are kept for  e_u < order  (exponents may be negative,
//     supports bounded below).
//   * X-exponents are kept for |e_x| <= xwin.
//   * v-exponents are kept for  e_v <= vcap; each series tracks v_valid,
//     the largest v-exponent whose coefficients are still exact after the
//     truncated operations performed so far (the v-supports of all inputs
//     are bounded below, so products corrupt only high v-terms).
// Ring operations never consult dropped terms of their inputs below the
// tracked validity bounds, so (a*b) mod the window depends only on
// a, b mod the window, as required.
struct SeriesCtx {
  int order;        // u-truncation: keep e_u < order
  int vcap;         // hard cap on stored v-exponents
  int xwin;         // |e_x| <= xwin (0 for series without X)
};

struct Term {
  int eu, ex, ev;
  Int c;
};

class QSeries {
 public:
  explicit QSeries(const SeriesCtx& ctx) : ctx_(ctx), v_valid_(ctx.vcap) {}
  static QSeries term(const SeriesCtx& ctx, const Int& c, int eu, int ex, int ev);
  static QSeries one(const SeriesCtx& ctx) { return term(ctx, Int(1), 0, 0, 0); }

  const SeriesCtx& ctx() const { return ctx_; }
  bool is_zero() const { return m_.empty(); }
  int v_valid() const { return v_valid_; }
  int v_min_support() const;

  // coefficient of u^eu X^ex v^ev (0 if absent)
  Int coeff(int eu, int ex, int ev) const;
  // coefficient of u^eu as list of (ex, ev, c)
  std::vector<Term> u_slice(int eu) const;

  friend QSeries operator+(const QSeries& a, const QSeries& b);
  friend QSeries operator-(const QSeries& a, const QSeries& b);
  QSeries operator-() const;

  // full product; dispatches to the parallel kernel for large operands
  friend QSeries operator*(const QSeries& a, const QSeries& b);
  QSeries& operator+=(const QSeries& b) { return *this = *this + b; }
  QSeries& operator*=(const QSeries& b) { return *this = *this * b; }

  // multiply by the two-term factor (1 - c u^eu X^ex v^ev)
  QSeries mul_binomial(const Int& c, int eu, int ex, int ev) const;
  // divide by (1 - c u^eu X^ex v^ev); requires the factor's grading to be
  // positive (eu > 0, or eu = 0 and ev > 0): the geometric series then
  // terminates inside the window
  QSeries div_binomial(const Int& c, int eu, int ex, int ev) const;

  // sum of coefficients with e_x = 0 (constant term in X), as a new series
  QSeries const_term_x() const;

  // equality of stored windows on the validity range both sides share;
  // throws WindowError if the common valid range does not cover vneed
  static bool agree(const QSeries& a, const QSeries& b, int vneed);

  std::string str(int max_terms = 40) const;

  // kernels: reference serial product and the OpenMP-parallel product;
  // both produce identical results (asserted in the test suite)
  static QSeries mul_serial(const QSeries& a, const QSeries& b);
  static QSeries mul_parallel(const QSeries& a, const QSeries& b);

 private:
  using Key = std::tuple<int, int, int>;  // (eu, ex, ev)
  SeriesCtx ctx_;
  std::map<Key, Int> m_;
  int v_valid_;

  void insert(int eu, int ex, int ev, const Int& c);
  friend QSeries mul_impl(const QSeries& a, const QSeries& b, bool parallel);
};

}  // namespace daha
