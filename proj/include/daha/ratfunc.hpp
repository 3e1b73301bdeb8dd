#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <string>
#include <utility>

#include "daha/intpoly.hpp"

namespace daha {

// Field of rational functions in two formal symbols u, v with Laurent
// support (in the exact-scalar modules u = q^{1/4}, v = t^{1/2}; the
// degenerate module reuses the same field for formal parameters).
//
// Canonical form: value = u^su * v^sv * num / den with
//   * num, den in Z[u,v], den != 0,
//   * num and den not divisible by u or v (monomial factors pulled into
//     the unit), gcd(num, den) = 1 (including integer content),
//   * den's leading coefficient (lex on (u-exp, v-exp)) positive.
// Two values are equal iff their canonical fields are identical.
class RatFunc {
 public:
  RatFunc() : su_(0), sv_(0), num_(), den_(Int(1)) {}
  explicit RatFunc(long k) : RatFunc(Int(k)) {}
  explicit RatFunc(const Int& k) : su_(0), sv_(0), num_(k), den_(Int(1)) {}
  explicit RatFunc(const Rat& r);

  // monomial c * u^eu * v^ev, exponents may be negative
  static RatFunc monomial(const Rat& c, int eu, int ev);
  static RatFunc u(int e = 1) { return monomial(Rat(1), e, 0); }
  static RatFunc v(int e = 1) { return monomial(Rat(1), 0, e); }
  static RatFunc q(int e = 1) { return u(4 * e); }
  static RatFunc t(int e = 1) { return v(2 * e); }
  // q^{a/4} t^{b/2}
  static RatFunc qt(int a, int b) { return monomial(Rat(1), a, b); }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const;

  RatFunc operator-() const;
  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
  RatFunc& operator+=(const RatFunc& b) { return *this = *this + b; }
  RatFunc& operator-=(const RatFunc& b) { return *this = *this - b; }
  RatFunc& operator*=(const RatFunc& b) { return *this = *this * b; }
  RatFunc& operator/=(const RatFunc& b) { return *this = *this / b; }
  friend bool operator==(const RatFunc& a, const RatFunc& b);
  friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

  RatFunc inv() const;
  RatFunc pow(long e) const;

  // substitution u -> u^{-1}, v -> v^{-1} (both or individually)
  RatFunc sub_u_inv() const;
  RatFunc sub_v_inv() const;

  // exact limit u -> infinity treating v as a constant: ratio of the
  // leading u-coefficients when degrees match, 0 when the numerator's
  // u-degree is smaller; throws MathError when the limit is infinite.
  RatFunc limit_u_inf() const;

  // numeric evaluation; throws MathError on a vanishing denominator
  std::complex<double> eval(const std::complex<double>& uval,
                            const std::complex<double>& vval) const;

  // sparse monomial view { (eu,ev) -> coefficient } of numerator (unit folded
  // in) and denominator; exponents of the numerator may be negative.
  std::map<std::pair<int, int>, Int> num_monomials() const;
  std::map<std::pair<int, int>, Int> den_monomials() const;

  std::uint64_t hash() const;
  std::string str() const;  // debug

  // evaluate with values supplied for u and v in an arbitrary field F
  // (F needs *, +, /, pow via repeated mult, and zero test)
  template <typename F>
  F eval_field(const F& uval, const F& vval) const;

 private:
  void canon();

  int su_, sv_;
  BPoly num_, den_;
};

template <typename F>
F RatFunc::eval_field(const F& uval, const F& vval) const {
  auto evalp = [&](const std::map<std::pair<int, int>, Int>& mono) {
    F acc{};  // zero
    for (const auto& [e, c] : mono) {
      F term = F(Rat(c));
      for (int i = 0; i < e.first; ++i) term = term * uval;
      for (int i = 0; i > e.first; --i) term = term / uval;
      for (int i = 0; i < e.second; ++i) term = term * vval;
      for (int i = 0; i > e.second; --i) term = term / vval;
      acc = acc + term;
    }
    return acc;
  };
  F den = evalp(den_monomials());
  if (den.is_zero()) throw MathError("RatFunc pole at specialization point");
  return evalp(num_monomials()) / den;
}

}  // namespace daha
