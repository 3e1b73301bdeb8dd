#include "daha/ratfunc.hpp"

#include <sstream>

namespace daha {

RatFunc::RatFunc(const Rat& r) : su_(0), sv_(0) {
  Rat x = r;
  x.canonicalize();
  num_ = BPoly(Int(x.get_num()));
  den_ = BPoly(Int(x.get_den()));
  canon();
}

RatFunc RatFunc::monomial(const Rat& c, int eu, int ev) {
  RatFunc r;
  Rat x = c;
  x.canonicalize();
  r.num_ = BPoly(Int(x.get_num()));
  r.den_ = BPoly(Int(x.get_den()));
  r.su_ = eu;
  r.sv_ = ev;
  r.canon();
  return r;
}

bool RatFunc::is_one() const {
  return su_ == 0 && sv_ == 0 && num_ == BPoly(Int(1)) && den_ == BPoly(Int(1));
}

void RatFunc::canon() {
  if (den_.is_zero()) throw MathError("RatFunc zero denominator");
  if (num_.is_zero()) {
    su_ = sv_ = 0;
    den_ = BPoly(Int(1));
    return;
  }
  // pull monomial factors out of num and den into the unit
  int nu = num_.umin(), nv = num_.vmin();
  int du = den_.umin(), dv = den_.vmin();
  auto strip = [](BPoly& p, int u0, int v0) {
    if (u0 == 0 && v0 == 0) return;
    BPoly r;
    r.c.resize(p.c.size() - v0);
    for (size_t i = v0; i < p.c.size(); ++i) {
      UPoly up = p.c[i];
      if (!up.is_zero() && u0 > 0) up.c.erase(up.c.begin(), up.c.begin() + u0);
      r.c[i - v0] = up;
    }
    p = r;
  };
  strip(num_, nu, nv);
  strip(den_, du, dv);
  su_ += nu - du;
  sv_ += nv - dv;
  // cancel gcd
  BPoly g = bpoly_gcd(num_, den_);
  bool gtriv = (g.vdegree() == 0 && g.c[0].degree() == 0 && g.c[0].c[0] == 1);
  if (!gtriv) {
    num_ = bpoly_divexact(num_, g);
    den_ = bpoly_divexact(den_, g);
  }
  if (bpoly_lex_lead(den_) < 0) {
    num_ = bpoly_neg(num_);
    den_ = bpoly_neg(den_);
  }
}

RatFunc RatFunc::operator-() const {
  RatFunc r = *this;
  r.num_ = bpoly_neg(r.num_);
  return r;
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  RatFunc r;
  // common unit: u^{min(su)} v^{min(sv)}
  int su = std::min(a.su_, b.su_), sv = std::min(a.sv_, b.sv_);
  BPoly na = a.num_.shifted(a.su_ - su, a.sv_ - sv);
  BPoly nb = b.num_.shifted(b.su_ - su, b.sv_ - sv);
  r.num_ = na * b.den_ + nb * a.den_;
  r.den_ = a.den_ * b.den_;
  r.su_ = su;
  r.sv_ = sv;
  r.canon();
  return r;
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
  RatFunc r;
  r.num_ = a.num_ * b.num_;
  r.den_ = a.den_ * b.den_;
  r.su_ = a.su_ + b.su_;
  r.sv_ = a.sv_ + b.sv_;
  r.canon();
  return r;
}

RatFunc RatFunc::inv() const {
  if (is_zero()) throw MathError("RatFunc division by zero");
  RatFunc r;
  r.num_ = den_;
  r.den_ = num_;
  r.su_ = -su_;
  r.sv_ = -sv_;
  r.canon();
  return r;
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) { return a * b.inv(); }

RatFunc RatFunc::pow(long e) const {
  if (e == 0) return RatFunc(1);
  RatFunc base = e > 0 ? *this : inv();
  long n = e > 0 ? e : -e;
  RatFunc acc(1);
  while (n) {
    if (n & 1) acc *= base;
    base = n > 1 ? base * base : base;
    n >>= 1;
  }
  return acc;
}

bool operator==(const RatFunc& a, const RatFunc& b) {
  return a.su_ == b.su_ && a.sv_ == b.sv_ && a.num_ == b.num_ && a.den_ == b.den_;
}

std::map<std::pair<int, int>, Int> RatFunc::num_monomials() const {
  std::map<std::pair<int, int>, Int> m;
  for (size_t v = 0; v < num_.c.size(); ++v)
    for (size_t u = 0; u < num_.c[v].c.size(); ++u)
      if (num_.c[v].c[u] != 0)
        m[{static_cast<int>(u) + su_, static_cast<int>(v) + sv_}] = num_.c[v].c[u];
  return m;
}

std::map<std::pair<int, int>, Int> RatFunc::den_monomials() const {
  std::map<std::pair<int, int>, Int> m;
  for (size_t v = 0; v < den_.c.size(); ++v)
    for (size_t u = 0; u < den_.c[v].c.size(); ++u)
      if (den_.c[v].c[u] != 0)
        m[{static_cast<int>(u), static_cast<int>(v)}] = den_.c[v].c[u];
  return m;
}

RatFunc RatFunc::sub_u_inv() const {
  RatFunc r;
  int dn = num_.udegree(), dd = den_.udegree();
  auto rev = [](const BPoly& p, int d) {
    BPoly q;
    q.c.resize(p.c.size());
    for (size_t v = 0; v < p.c.size(); ++v) {
      UPoly up;
      up.c.assign(d + 1, Int(0));
      for (int u = 0; u <= p.c[v].degree(); ++u) up.c[d - u] = p.c[v].c[u];
      up.trim();
      q.c[v] = up;
    }
    q.trim();
    return q;
  };
  r.num_ = rev(num_, dn);
  r.den_ = rev(den_, dd);
  r.su_ = -su_ - dn + dd;
  r.sv_ = sv_;
  r.canon();
  return r;
}

RatFunc RatFunc::sub_v_inv() const {
  RatFunc r;
  int dn = num_.vdegree(), dd = den_.vdegree();
  auto rev = [](const BPoly& p, int d) {
    BPoly q;
    q.c.resize(d + 1);
    for (int v = 0; v <= p.vdegree(); ++v) q.c[d - v] = p.c[v];
    q.trim();
    return q;
  };
  r.num_ = rev(num_, dn);
  r.den_ = rev(den_, dd);
  r.su_ = su_;
  r.sv_ = -sv_ - dn + dd;
  r.canon();
  return r;
}

RatFunc RatFunc::limit_u_inf() const {
  if (is_zero()) return RatFunc();
  int dn = num_.udegree() + su_, dd = den_.udegree();
  if (dn > dd) throw MathError("limit u->inf is infinite");
  if (dn < dd) return RatFunc();
  auto topcoef = [](const BPoly& p, int d) {
    BPoly q;
    q.c.resize(p.c.size());
    for (size_t v = 0; v < p.c.size(); ++v)
      if (p.c[v].degree() == d) q.c[v] = UPoly(p.c[v].c[d]);
    q.trim();
    return q;
  };
  RatFunc r;
  r.num_ = topcoef(num_, num_.udegree());
  r.den_ = topcoef(den_, den_.udegree());
  r.su_ = 0;
  r.sv_ = sv_;
  r.canon();
  return r;
}

std::complex<double> RatFunc::eval(const std::complex<double>& uval,
                                   const std::complex<double>& vval) const {
  auto evalp = [&](const std::map<std::pair<int, int>, Int>& mono) {
    std::complex<double> acc = 0;
    for (const auto& [e, c] : mono)
      acc += c.get_d() * std::pow(uval, e.first) * std::pow(vval, e.second);
    return acc;
  };
  std::complex<double> d = evalp(den_monomials());
  if (std::abs(d) < 1e-300) throw MathError("RatFunc pole at numeric point");
  return evalp(num_monomials()) / d;
}

std::uint64_t RatFunc::hash() const {
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&h](std::uint64_t x) {
    h ^= x;
    h *= 1099511628211ull;
  };
  mix(static_cast<std::uint64_t>(su_) * 2654435761u);
  mix(static_cast<std::uint64_t>(sv_) * 40503u);
  auto mixp = [&](const BPoly& p) {
    for (size_t v = 0; v < p.c.size(); ++v)
      for (size_t u = 0; u < p.c[v].c.size(); ++u)
        if (p.c[v].c[u] != 0) {
          mix((v << 20) ^ u);
          mix(mpz_fdiv_ui(p.c[v].c[u].get_mpz_t(), 0x7fffffff));
        }
  };
  mixp(num_);
  mixp(den_);
  return h;
}

std::string RatFunc::str() const {
  auto pstr = [](const std::map<std::pair<int, int>, Int>& m) {
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : m) {
      if (!first) os << " + ";
      first = false;
      os << c.get_str();
      if (e.first) os << "*u^" << e.first;
      if (e.second) os << "*v^" << e.second;
    }
    if (first) os << "0";
    return os.str();
  };
  std::ostringstream os;
  os << "(" << pstr(num_monomials()) << ")";
  auto d = den_monomials();
  if (!(d.size() == 1 && d.count({0, 0}) && d[{0, 0}] == 1))
    os << "/(" << pstr(d) << ")";
  return os.str();
}

}  // namespace daha
