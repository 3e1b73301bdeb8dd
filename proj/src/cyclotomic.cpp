#include "daha/cyclotomic.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numeric>

namespace daha {

int lcm_int(int a, int b) { return a / static_cast<int>(gcd_long(a, b)) * b; }

int Cyclotomic::phi(int M) {
  int r = M, n = M;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      r -= r / p;
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) r -= r / n;
  return r;
}

namespace {
// x^n - 1 as coefficient vector
std::vector<Int> xn_minus_1(int n) {
  std::vector<Int> p(n + 1, Int(0));
  p[0] = -1;
  p[n] = 1;
  return p;
}

// exact division of integer polynomials (monic-ish divisor assumed exact)
std::vector<Int> zdiv(std::vector<Int> a, const std::vector<Int>& b) {
  while (!a.empty() && a.back() == 0) a.pop_back();
  std::vector<Int> bb = b;
  while (!bb.empty() && bb.back() == 0) bb.pop_back();
  if (bb.empty()) throw MathError("zdiv by zero");
  int db = static_cast<int>(bb.size()) - 1;
  if (static_cast<int>(a.size()) - 1 < db) throw MathError("zdiv degree");
  std::vector<Int> q(a.size() - bb.size() + 1, Int(0));
  while (static_cast<int>(a.size()) - 1 >= db && !a.empty()) {
    if (!mpz_divisible_p(a.back().get_mpz_t(), bb.back().get_mpz_t()))
      throw MathError("zdiv not divisible");
    Int f = a.back() / bb.back();
    int k = static_cast<int>(a.size()) - 1 - db;
    q[k] = f;
    for (int i = 0; i <= db; ++i) a[i + k] -= f * bb[i];
    while (!a.empty() && a.back() == 0) a.pop_back();
  }
  if (!a.empty()) throw MathError("zdiv remainder");
  return q;
}

std::map<int, std::vector<Int>> g_phi_cache;
std::mutex g_phi_mutex;
}  // namespace

const std::vector<Int>& Cyclotomic::cyclotomic_poly(int M) {
  std::lock_guard<std::mutex> lock(g_phi_mutex);
  auto it = g_phi_cache.find(M);
  if (it != g_phi_cache.end()) return it->second;
  // Phi_M = (x^M - 1) / prod_{d | M, d < M} Phi_d
  std::vector<Int> num = xn_minus_1(M);
  for (int d = 1; d < M; ++d) {
    if (M % d) continue;
    std::vector<Int> phid;
    {
      auto jt = g_phi_cache.find(d);
      if (jt != g_phi_cache.end()) {
        phid = jt->second;
      } else {
        // recursive fill without re-locking: compute iteratively
        std::vector<Int> nd = xn_minus_1(d);
        for (int e = 1; e < d; ++e)
          if (d % e == 0) nd = zdiv(nd, g_phi_cache.at(e));
        g_phi_cache[d] = nd;
        phid = nd;
      }
    }
    num = zdiv(num, phid);
  }
  auto [jt, ok] = g_phi_cache.emplace(M, std::move(num));
  return jt->second;
}

void Cyclotomic::reduce(std::vector<Rat>& c, int M) {
  const std::vector<Int>& phi_poly = cyclotomic_poly(M);
  int d = static_cast<int>(phi_poly.size()) - 1;  // = phi(M), monic
  for (int i = static_cast<int>(c.size()) - 1; i >= d; --i) {
    if (c[i] == 0) continue;
    Rat f = c[i];
    c[i] = 0;
    for (int j = 0; j < d; ++j)
      if (phi_poly[j] != 0) c[i - d + j] -= f * Rat(phi_poly[j]);
  }
  c.resize(d, Rat(0));
  for (auto& x : c) x.canonicalize();
}

Cyclotomic::Cyclotomic(const Rat& r, int order) : order_(order) {
  c_.assign(phi(order), Rat(0));
  c_[0] = r;
  c_[0].canonicalize();
}

Cyclotomic Cyclotomic::zeta(int order, int power) {
  Cyclotomic z = zero(order);
  power %= order;
  if (power < 0) power += order;
  std::vector<Rat> c(power + 1, Rat(0));
  c[power] = 1;
  reduce(c, order);
  z.c_ = c;
  return z;
}

bool Cyclotomic::is_zero() const {
  for (const auto& x : c_)
    if (x != 0) return false;
  return true;
}

bool Cyclotomic::is_rational(Rat* out) const {
  for (size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  if (out) *out = c_[0];
  return true;
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

Cyclotomic Cyclotomic::to_order(int new_order) const {
  if (new_order == order_) return *this;
  if (new_order % order_ != 0)
    throw MathError("cyclotomic order not a multiple");
  int k = new_order / order_;
  Cyclotomic r = zero(new_order);
  std::vector<Rat> c(static_cast<size_t>(phi(order_) - 1) * k + 1, Rat(0));
  for (size_t i = 0; i < c_.size(); ++i) c[i * k] = c_[i];
  reduce(c, new_order);
  r.c_ = c;
  return r;
}

static void match_orders(Cyclotomic& a, Cyclotomic& b) {
  if (a.order() == b.order()) return;
  int m = lcm_int(a.order(), b.order());
  a = a.to_order(m);
  b = b.to_order(m);
}

Cyclotomic operator+(const Cyclotomic& a0, const Cyclotomic& b0) {
  Cyclotomic a = a0, b = b0;
  match_orders(a, b);
  for (size_t i = 0; i < a.c_.size(); ++i) {
    a.c_[i] += b.c_[i];
    a.c_[i].canonicalize();
  }
  return a;
}

Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b) { return a + (-b); }

Cyclotomic operator*(const Cyclotomic& a0, const Cyclotomic& b0) {
  Cyclotomic a = a0, b = b0;
  match_orders(a, b);
  int n = static_cast<int>(a.c_.size());
  std::vector<Rat> prod(2 * n - 1, Rat(0));
  for (int i = 0; i < n; ++i) {
    if (a.c_[i] == 0) continue;
    for (int j = 0; j < n; ++j) {
      if (b.c_[j] == 0) continue;
      prod[i + j] += a.c_[i] * b.c_[j];
    }
  }
  Cyclotomic::reduce(prod, a.order_);
  a.c_ = prod;
  return a;
}

bool operator==(const Cyclotomic& a0, const Cyclotomic& b0) {
  Cyclotomic a = a0, b = b0;
  match_orders(a, b);
  return a.c_ == b.c_;
}

Cyclotomic Cyclotomic::inv() const {
  if (is_zero()) throw MathError("cyclotomic inverse of zero");
  // extended Euclid in Q[x] for (this, Phi_M); Phi_M irreducible over Q,
  // so a nonzero remainder of degree 0 is guaranteed; anything else is a bug.
  const std::vector<Int>& phi_poly = cyclotomic_poly(order_);
  std::vector<Rat> r0(phi_poly.size());
  for (size_t i = 0; i < phi_poly.size(); ++i) r0[i] = Rat(phi_poly[i]);
  std::vector<Rat> r1(c_);
  while (!r1.empty() && r1.back() == 0) r1.pop_back();
  std::vector<Rat> s0(1, Rat(0)), s1(1, Rat(1));  // track coeff of `this`
  auto deg = [](const std::vector<Rat>& p) { return static_cast<int>(p.size()) - 1; };
  auto trim = [](std::vector<Rat>& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
  };
  while (deg(r1) > 0) {
    // divide r0 by r1
    std::vector<Rat> rem = r0, quo(std::max<size_t>(1, r0.size() - r1.size() + 1), Rat(0));
    while (deg(rem) >= deg(r1) && !rem.empty()) {
      Rat f = rem.back() / r1.back();
      int k = deg(rem) - deg(r1);
      quo[k] += f;
      for (size_t i = 0; i < r1.size(); ++i) {
        rem[i + k] -= f * r1[i];
        rem[i + k].canonicalize();
      }
      trim(rem);
    }
    // s_{new} = s0 - quo * s1
    std::vector<Rat> snew(std::max(s0.size(), quo.size() + s1.size()), Rat(0));
    for (size_t i = 0; i < s0.size(); ++i) snew[i] = s0[i];
    for (size_t i = 0; i < quo.size(); ++i) {
      if (quo[i] == 0) continue;
      for (size_t j = 0; j < s1.size(); ++j) {
        snew[i + j] -= quo[i] * s1[j];
        snew[i + j].canonicalize();
      }
    }
    trim(snew);
    r0 = r1;
    r1 = rem;
    s0 = s1;
    s1 = snew;
  }
  if (r1.empty())
    throw MathError("cyclotomic inverse: zero remainder (internal bug)");
  // r1 is a nonzero constant: this * s1 = r1 mod Phi
  Cyclotomic out = zero(order_);
  for (size_t i = 0; i < s1.size() && i < out.c_.size(); ++i) {
    out.c_[i] = s1[i] / r1[0];
    out.c_[i].canonicalize();
  }
  if (s1.size() > out.c_.size()) {
    std::vector<Rat> big(s1.size());
    for (size_t i = 0; i < s1.size(); ++i) big[i] = s1[i] / r1[0];
    reduce(big, order_);
    out.c_ = big;
  }
  return out;
}

Cyclotomic operator/(const Cyclotomic& a, const Cyclotomic& b) {
  Cyclotomic binv = b.inv();
  return a * binv;
}

Cyclotomic Cyclotomic::pow(long e) const {
  Cyclotomic base = e >= 0 ? *this : inv();
  unsigned long n = e >= 0 ? e : -e;
  Cyclotomic acc = one(order_);
  while (n) {
    if (n & 1) acc = acc * base;
    if (n >>= 1) base = base * base;
  }
  return acc;
}

Cyclotomic Cyclotomic::galois(long r) const {
  long rr = r % order_;
  if (rr < 0) rr += order_;
  if (gcd_long(rr, order_) != 1) throw MathError("galois exponent not coprime");
  std::vector<Rat> c(static_cast<size_t>(order_) * c_.size() / order_ * 1, Rat(0));
  c.assign(static_cast<size_t>((c_.size() - 1) * rr + 1), Rat(0));
  if (c.empty()) c.assign(1, Rat(0));
  for (size_t i = 0; i < c_.size(); ++i)
    if (c_[i] != 0) c[i * rr] += c_[i];
  reduce(c, order_);
  Cyclotomic out = zero(order_);
  out.c_ = c;
  return out;
}

std::complex<double> Cyclotomic::embed() const {
  std::complex<double> z = 0;
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    double arg = 2.0 * M_PI * static_cast<double>(i) / order_;
    z += c_[i].get_d() * std::complex<double>(std::cos(arg), std::sin(arg));
  }
  return z;
}

}  // namespace daha
