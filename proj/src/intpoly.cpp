#include "daha/intpoly.hpp"

#include <algorithm>

namespace daha {

UPoly UPoly::monomial(const Int& k, int deg) {
  UPoly p;
  if (k == 0) return p;
  p.c.assign(deg + 1, Int(0));
  p.c[deg] = k;
  return p;
}

void UPoly::trim() {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

UPoly operator+(const UPoly& a, const UPoly& b) {
  UPoly r;
  r.c.resize(std::max(a.c.size(), b.c.size()), Int(0));
  for (size_t i = 0; i < a.c.size(); ++i) r.c[i] = a.c[i];
  for (size_t i = 0; i < b.c.size(); ++i) r.c[i] += b.c[i];
  r.trim();
  return r;
}

UPoly operator-(const UPoly& a, const UPoly& b) {
  UPoly r;
  r.c.resize(std::max(a.c.size(), b.c.size()), Int(0));
  for (size_t i = 0; i < a.c.size(); ++i) r.c[i] = a.c[i];
  for (size_t i = 0; i < b.c.size(); ++i) r.c[i] -= b.c[i];
  r.trim();
  return r;
}

UPoly operator*(const UPoly& a, const UPoly& b) {
  UPoly r;
  if (a.is_zero() || b.is_zero()) return r;
  r.c.assign(a.c.size() + b.c.size() - 1, Int(0));
  for (size_t i = 0; i < a.c.size(); ++i) {
    if (a.c[i] == 0) continue;
    for (size_t j = 0; j < b.c.size(); ++j) {
      if (b.c[j] == 0) continue;
      r.c[i + j] += a.c[i] * b.c[j];
    }
  }
  r.trim();
  return r;
}

Int upoly_content(const UPoly& a) {
  Int g = 0;
  for (const auto& x : a.c) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

UPoly upoly_primitive(const UPoly& a) {
  if (a.is_zero()) return a;
  Int g = upoly_content(a);
  if (a.lead() < 0) g = -g;
  UPoly r = a;
  for (auto& x : r.c) x /= g;
  return r;
}

// pseudo-remainder of a by b (b nonzero): lead(b)^(da-db+1) * a = q*b + r
static UPoly pseudo_rem(UPoly a, const UPoly& b) {
  int db = b.degree();
  const Int& lb = b.lead();
  while (!a.is_zero() && a.degree() >= db) {
    int k = a.degree() - db;
    Int la = a.lead();
    for (auto& x : a.c) x *= lb;
    for (int i = 0; i <= db; ++i) a.c[i + k] -= la * b.c[i];
    a.trim();
  }
  return a;
}

static UPoly upoly_abs(const UPoly& a) {
  UPoly r = a;
  if (!r.is_zero() && r.lead() < 0)
    for (auto& x : r.c) x = -x;
  return r;
}

UPoly upoly_gcd(const UPoly& a, const UPoly& b) {
  if (a.is_zero()) return upoly_abs(b);
  if (b.is_zero()) return upoly_abs(a);
  Int ca = upoly_content(a), cb = upoly_content(b);
  Int cg;
  mpz_gcd(cg.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
  UPoly A = upoly_primitive(a), B = upoly_primitive(b);
  if (A.degree() < B.degree()) std::swap(A, B);
  while (!B.is_zero()) {
    UPoly R = pseudo_rem(A, B);
    A = B;
    B = upoly_primitive(R);
  }
  A = upoly_primitive(A);
  UPoly r = A * UPoly(cg);
  return r;
}

UPoly upoly_divexact(const UPoly& a, const UPoly& b) {
  if (b.is_zero()) throw MathError("upoly division by zero");
  UPoly rem = a, q;
  if (a.is_zero()) return q;
  int db = b.degree();
  if (rem.degree() < db) throw MathError("upoly not divisible");
  q.c.assign(rem.degree() - db + 1, Int(0));
  while (!rem.is_zero() && rem.degree() >= db) {
    if (!mpz_divisible_p(rem.lead().get_mpz_t(), b.lead().get_mpz_t()))
      throw MathError("upoly not divisible");
    Int f = rem.lead() / b.lead();
    int k = rem.degree() - db;
    q.c[k] = f;
    for (int i = 0; i <= db; ++i) rem.c[i + k] -= f * b.c[i];
    rem.trim();
  }
  if (!rem.is_zero()) throw MathError("upoly not divisible (remainder)");
  q.trim();
  return q;
}

BPoly BPoly::monomial(const Int& k, int udeg, int vdeg) {
  BPoly p;
  if (k == 0) return p;
  p.c.assign(vdeg + 1, UPoly());
  p.c[vdeg] = UPoly::monomial(k, udeg);
  return p;
}

int BPoly::udegree() const {
  int d = -1;
  for (const auto& u : c) d = std::max(d, u.degree());
  return d;
}

int BPoly::umin() const {
  int m = -1;
  for (const auto& u : c)
    for (size_t i = 0; i < u.c.size(); ++i)
      if (u.c[i] != 0 && (m < 0 || static_cast<int>(i) < m)) m = static_cast<int>(i);
  return m;
}

int BPoly::vmin() const {
  for (size_t i = 0; i < c.size(); ++i)
    if (!c[i].is_zero()) return static_cast<int>(i);
  return -1;
}

void BPoly::trim() {
  while (!c.empty() && c.back().is_zero()) c.pop_back();
}

BPoly operator+(const BPoly& a, const BPoly& b) {
  BPoly r;
  r.c.resize(std::max(a.c.size(), b.c.size()));
  for (size_t i = 0; i < a.c.size(); ++i) r.c[i] = a.c[i];
  for (size_t i = 0; i < b.c.size(); ++i) r.c[i] = r.c[i] + b.c[i];
  r.trim();
  return r;
}

BPoly operator-(const BPoly& a, const BPoly& b) {
  BPoly r;
  r.c.resize(std::max(a.c.size(), b.c.size()));
  for (size_t i = 0; i < a.c.size(); ++i) r.c[i] = a.c[i];
  for (size_t i = 0; i < b.c.size(); ++i) r.c[i] = r.c[i] - b.c[i];
  r.trim();
  return r;
}

BPoly operator*(const BPoly& a, const BPoly& b) {
  BPoly r;
  if (a.is_zero() || b.is_zero()) return r;
  r.c.resize(a.c.size() + b.c.size() - 1);
  for (size_t i = 0; i < a.c.size(); ++i) {
    if (a.c[i].is_zero()) continue;
    for (size_t j = 0; j < b.c.size(); ++j) {
      if (b.c[j].is_zero()) continue;
      r.c[i + j] = r.c[i + j] + a.c[i] * b.c[j];
    }
  }
  r.trim();
  return r;
}

BPoly BPoly::shifted(int du, int dv) const {
  BPoly r;
  if (is_zero()) return r;
  r.c.resize(c.size() + dv);
  for (size_t i = 0; i < c.size(); ++i) {
    UPoly u = c[i];
    if (!u.is_zero() && du > 0) {
      u.c.insert(u.c.begin(), du, Int(0));
    }
    r.c[i + dv] = u;
  }
  return r;
}

BPoly bpoly_neg(const BPoly& a) {
  BPoly r = a;
  for (auto& u : r.c)
    for (auto& x : u.c) x = -x;
  return r;
}

Int bpoly_icontent(const BPoly& a) {
  Int g = 0;
  for (const auto& u : a.c) {
    Int cu = upoly_content(u);
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), cu.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

Int bpoly_lex_lead(const BPoly& a) {
  // lex order: compare u-exponent first, then v-exponent
  Int best = 0;
  int bu = -1, bv = -1;
  for (size_t v = 0; v < a.c.size(); ++v) {
    const UPoly& u = a.c[v];
    for (int i = u.degree(); i >= 0; --i) {
      if (u.c[i] == 0) continue;
      if (i > bu || (i == bu && static_cast<int>(v) > bv)) {
        bu = i; bv = static_cast<int>(v); best = u.c[i];
      }
      break;  // highest u-exp in this v-slice found
    }
  }
  return best;
}

// content of a as polynomial in v over Z[u]
static UPoly bpoly_vcontent(const BPoly& a) {
  UPoly g;
  for (const auto& u : a.c) {
    g = upoly_gcd(g, u);
    if (g.degree() == 0 && !g.is_zero() && (g.c[0] == 1 || g.c[0] == -1)) break;
  }
  return g;
}

static BPoly bpoly_divexact_upoly(const BPoly& a, const UPoly& d) {
  BPoly r = a;
  for (auto& u : r.c)
    if (!u.is_zero()) u = upoly_divexact(u, d);
  return r;
}

static BPoly bpoly_vprimitive(const BPoly& a) {
  if (a.is_zero()) return a;
  UPoly g = bpoly_vcontent(a);
  return bpoly_divexact_upoly(a, g);
}

// pseudo-remainder in v: lead_v(b)^(da-db+1) * a = q*b + r
static BPoly bpoly_pseudo_rem(BPoly a, const BPoly& b) {
  int db = b.vdegree();
  const UPoly& lb = b.c.back();
  while (!a.is_zero() && a.vdegree() >= db) {
    int k = a.vdegree() - db;
    UPoly la = a.c.back();
    for (auto& u : a.c) u = u * lb;
    for (int i = 0; i <= db; ++i) a.c[i + k] = a.c[i + k] - la * b.c[i];
    a.trim();
  }
  return a;
}

BPoly bpoly_gcd(const BPoly& a, const BPoly& b) {
  if (a.is_zero()) {
    BPoly r = b;
    if (bpoly_lex_lead(r) < 0) r = bpoly_neg(r);
    return r;
  }
  if (b.is_zero()) {
    BPoly r = a;
    if (bpoly_lex_lead(r) < 0) r = bpoly_neg(r);
    return r;
  }
  UPoly ca = bpoly_vcontent(a), cb = bpoly_vcontent(b);
  UPoly cg = upoly_gcd(ca, cb);
  BPoly A = bpoly_vprimitive(a), B = bpoly_vprimitive(b);
  if (A.vdegree() < B.vdegree()) std::swap(A, B);
  while (!B.is_zero()) {
    BPoly R = bpoly_pseudo_rem(A, B);
    A = B;
    B = bpoly_vprimitive(R);
  }
  A = bpoly_vprimitive(A);
  BPoly r;
  {
    // multiply primitive gcd by the content gcd
    BPoly cgb;
    cgb.c.push_back(cg);
    r = A * cgb;
  }
  if (bpoly_lex_lead(r) < 0) r = bpoly_neg(r);
  return r;
}

BPoly bpoly_divexact(const BPoly& a, const BPoly& b) {
  if (b.is_zero()) throw MathError("bpoly division by zero");
  if (a.is_zero()) return BPoly();
  // division in v with coefficients in Z[u]; every coefficient division exact
  BPoly rem = a, q;
  int db = b.vdegree();
  if (rem.vdegree() < db) throw MathError("bpoly not divisible");
  q.c.resize(rem.vdegree() - db + 1);
  while (!rem.is_zero() && rem.vdegree() >= db) {
    UPoly f = upoly_divexact(rem.c.back(), b.c.back());
    int k = rem.vdegree() - db;
    q.c[k] = f;
    for (int i = 0; i <= db; ++i) rem.c[i + k] = rem.c[i + k] - f * b.c[i];
    rem.trim();
  }
  if (!rem.is_zero()) throw MathError("bpoly not divisible (remainder)");
  q.trim();
  return q;
}

}  // namespace daha
