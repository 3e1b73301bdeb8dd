#pragma once

#include <vector>

#include "daha/common.hpp"

namespace daha {

// Dense univariate polynomial over Z, coefficient of u^i at index i.
// Normalized: no trailing zero coefficients (empty = zero polynomial).
struct UPoly {
  std::vector<Int> c;

  UPoly() = default;
  explicit UPoly(const Int& k) { if (k != 0) c = {k}; }
  static UPoly monomial(const Int& k, int deg);

  bool is_zero() const { return c.empty(); }
  int degree() const { return static_cast<int>(c.size()) - 1; }  // -1 for zero
  const Int& lead() const { return c.back(); }
  void trim();

  friend UPoly operator+(const UPoly& a, const UPoly& b);
  friend UPoly operator-(const UPoly& a, const UPoly& b);
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  friend bool operator==(const UPoly& a, const UPoly& b) { return a.c == b.c; }
};

Int upoly_content(const UPoly& a);            // gcd of coefficients, >= 0
UPoly upoly_primitive(const UPoly& a);        // a / content, lead > 0
UPoly upoly_gcd(const UPoly& a, const UPoly& b);
// exact division; throws MathError if not divisible
UPoly upoly_divexact(const UPoly& a, const UPoly& b);

// Bivariate polynomial over Z: dense in v, coefficient of v^i is a UPoly in u.
struct BPoly {
  std::vector<UPoly> c;

  BPoly() = default;
  explicit BPoly(const Int& k) { if (k != 0) c = {UPoly(k)}; }
  static BPoly monomial(const Int& k, int udeg, int vdeg);

  bool is_zero() const { return c.empty(); }
  int vdegree() const { return static_cast<int>(c.size()) - 1; }
  int udegree() const;      // max u-degree over all coefficients (-1 for zero)
  int umin() const;         // min u-exponent present with nonzero coefficient
  int vmin() const;         // min v-exponent present
  void trim();

  friend BPoly operator+(const BPoly& a, const BPoly& b);
  friend BPoly operator-(const BPoly& a, const BPoly& b);
  friend BPoly operator*(const BPoly& a, const BPoly& b);
  friend bool operator==(const BPoly& a, const BPoly& b) { return a.c == b.c; }

  BPoly shifted(int du, int dv) const;  // multiply by u^du v^dv (du,dv >= 0)
};

Int bpoly_icontent(const BPoly& a);           // integer content, >= 0
// leading coefficient under lex order on (u-exp, v-exp); 0 for zero poly
Int bpoly_lex_lead(const BPoly& a);
BPoly bpoly_gcd(const BPoly& a, const BPoly& b);
BPoly bpoly_divexact(const BPoly& a, const BPoly& b);
BPoly bpoly_neg(const BPoly& a);

}  // namespace daha
