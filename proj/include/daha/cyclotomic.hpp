#pragma once

#include <complex>
#include <vector>

#include "daha/common.hpp"

namespace daha {

// Element of the cyclotomic field Q(zeta_M), zeta_M a fixed primitive M-th
// root of unity, stored as a rational-coefficient vector of length phi(M)
// representing a polynomial in zeta_M reduced mod the M-th cyclotomic
// polynomial. The complex embedding sends zeta_M to exp(2*pi*i/M).
class Cyclotomic {
 public:
  Cyclotomic() : order_(1), c_(1, Rat(0)) {}            // zero in Q(zeta_1)=Q
  explicit Cyclotomic(const Rat& r, int order = 1);
  static Cyclotomic zeta(int order, int power = 1);      // zeta_M^power
  static Cyclotomic zero(int order) { return Cyclotomic(Rat(0), order); }
  static Cyclotomic one(int order) { return Cyclotomic(Rat(1), order); }

  int order() const { return order_; }
  const std::vector<Rat>& coords() const { return c_; }
  bool is_zero() const;
  bool is_rational(Rat* out = nullptr) const;

  Cyclotomic operator-() const;
  friend Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator/(const Cyclotomic& a, const Cyclotomic& b);
  Cyclotomic& operator+=(const Cyclotomic& b) { return *this = *this + b; }
  Cyclotomic& operator-=(const Cyclotomic& b) { return *this = *this - b; }
  Cyclotomic& operator*=(const Cyclotomic& b) { return *this = *this * b; }
  Cyclotomic& operator/=(const Cyclotomic& b) { return *this = *this / b; }
  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);
  friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }

  Cyclotomic inv() const;            // throws MathError on zero
  Cyclotomic pow(long e) const;
  Cyclotomic conj() const { return galois(order_ - 1); }  // zeta -> zeta^{-1}
  Cyclotomic galois(long r) const;   // zeta -> zeta^r, gcd(r, M) = 1

  // re-embed into Q(zeta_{M'}) for M | M'
  Cyclotomic to_order(int new_order) const;

  std::complex<double> embed() const;  // zeta_M -> exp(2 pi i / M)

  // cyclotomic polynomial Phi_M as integer coefficient vector (degree phi(M))
  static const std::vector<Int>& cyclotomic_poly(int M);
  static int phi(int M);

 private:
  int order_;
  std::vector<Rat> c_;  // length phi(order_)
  static void reduce(std::vector<Rat>& c, int M);
  friend Cyclotomic mul_raw(const Cyclotomic& a, const Cyclotomic& b);
};

// common order promotion for mixed arithmetic (lcm of orders)
int lcm_int(int a, int b);

}  // namespace daha
