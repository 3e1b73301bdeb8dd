#include "daha/qseries.hpp"

#include <algorithm>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace daha {

void QSeries::insert(int eu, int ex, int ev, const Int& c) {
  if (c == 0) return;
  if (eu >= ctx_.order) return;
  if (std::abs(ex) > ctx_.xwin) return;
  if (ev > ctx_.vcap) return;
  auto key = Key{eu, ex, ev};
  auto it = m_.find(key);
  if (it == m_.end()) {
    m_.emplace(key, c);
  } else {
    it->second += c;
    if (it->second == 0) m_.erase(it);
  }
}

QSeries QSeries::term(const SeriesCtx& ctx, const Int& c, int eu, int ex, int ev) {
  QSeries s(ctx);
  s.insert(eu, ex, ev, c);
  return s;
}

int QSeries::v_min_support() const {
  int m = 0;
  for (const auto& [k, c] : m_) m = std::min(m, std::get<2>(k));
  return m;
}

Int QSeries::coeff(int eu, int ex, int ev) const {
  auto it = m_.find(Key{eu, ex, ev});
  return it == m_.end() ? Int(0) : it->second;
}

std::vector<Term> QSeries::u_slice(int eu) const {
  std::vector<Term> out;
  for (const auto& [k, c] : m_)
    if (std::get<0>(k) == eu) out.push_back({eu, std::get<1>(k), std::get<2>(k), c});
  return out;
}

QSeries operator+(const QSeries& a, const QSeries& b) {
  QSeries r = a;
  r.v_valid_ = std::min(a.v_valid_, b.v_valid_);
  for (const auto& [k, c] : b.m_)
    r.insert(std::get<0>(k), std::get<1>(k), std::get<2>(k), c);
  return r;
}

QSeries QSeries::operator-() const {
  QSeries r = *this;
  for (auto& [k, c] : r.m_) c = -c;
  return r;
}

QSeries operator-(const QSeries& a, const QSeries& b) { return a + (-b); }

QSeries mul_impl(const QSeries& a, const QSeries& b, bool parallel) {
  QSeries r(a.ctx_);
  r.v_valid_ = std::min(a.v_valid_ + b.v_min_support(),
                        b.v_valid_ + a.v_min_support());
  r.v_valid_ = std::min(r.v_valid_, std::min(a.v_valid_, b.v_valid_));
  if (a.m_.empty() || b.m_.empty()) return r;

  std::vector<std::pair<QSeries::Key, Int>> av(a.m_.begin(), a.m_.end());
  std::vector<std::pair<QSeries::Key, Int>> bv(b.m_.begin(), b.m_.end());

#ifdef _OPENMP
  if (parallel) {
    // partition the output by u-exponent residue class; each thread owns a
    // disjoint bucket so no synchronization on mpz values is needed
    int nth = omp_get_max_threads();
    std::vector<std::map<QSeries::Key, Int>> buckets(nth);
#pragma omp parallel num_threads(nth)
    {
      int me = omp_get_thread_num();
      auto& mine = buckets[me];
      for (const auto& [ka, ca] : av) {
        for (const auto& [kb, cb] : bv) {
          int eu = std::get<0>(ka) + std::get<0>(kb);
          if (eu >= a.ctx_.order) continue;
          int h = ((eu % nth) + nth) % nth;
          if (h != me) continue;
          int ex = std::get<1>(ka) + std::get<1>(kb);
          if (std::abs(ex) > a.ctx_.xwin) continue;
          int ev = std::get<2>(ka) + std::get<2>(kb);
          if (ev > a.ctx_.vcap) continue;
          auto key = QSeries::Key{eu, ex, ev};
          auto it = mine.find(key);
          if (it == mine.end())
            mine.emplace(key, ca * cb);
          else
            it->second += ca * cb;
        }
      }
    }
    for (auto& bkt : buckets)
      for (auto& [k, c] : bkt)
        if (c != 0) r.m_.emplace(k, std::move(c));
    return r;
  }
#else
  (void)parallel;
#endif
  for (const auto& [ka, ca] : av)
    for (const auto& [kb, cb] : bv)
      r.insert(std::get<0>(ka) + std::get<0>(kb), std::get<1>(ka) + std::get<1>(kb),
               std::get<2>(ka) + std::get<2>(kb), ca * cb);
  return r;
}

QSeries QSeries::mul_serial(const QSeries& a, const QSeries& b) {
  return mul_impl(a, b, false);
}

QSeries QSeries::mul_parallel(const QSeries& a, const QSeries& b) {
  return mul_impl(a, b, true);
}

QSeries operator*(const QSeries& a, const QSeries& b) {
  bool big = a.m_.size() > 512 && b.m_.size() > 8;
  return mul_impl(a, b, big);
}

QSeries QSeries::mul_binomial(const Int& c, int eu, int ex, int ev) const {
  QSeries r = *this;
  r.v_valid_ = std::min(v_valid_, v_valid_ + std::min(0, ev));
  for (const auto& [k, co] : m_)
    r.insert(std::get<0>(k) + eu, std::get<1>(k) + ex, std::get<2>(k) + ev, -c * co);
  return r;
}

QSeries QSeries::div_binomial(const Int& c, int eu, int ex, int ev) const {
  if (eu < 0 || (eu == 0 && ev <= 0))
    throw MathError("div_binomial: factor grading not positive");
  QSeries r(ctx_);
  // validity: the geometric series multiplies by v^{ev*n}; when ev >= 0 no
  // low v-terms are produced, otherwise impossible here by the guard
  r.v_valid_ = v_valid_;
  // process keys in increasing (eu, ev, ex) grading so dependencies resolve
  std::vector<std::pair<Key, Int>> items(m_.begin(), m_.end());
  std::sort(items.begin(), items.end(), [](const auto& A, const auto& B) {
    return A.first < B.first;  // lexicographic on (eu, ex, ev) suffices? no:
  });
  // we need topological order along steps of (+eu, +ex, +ev); use a work
  // queue keyed by the grading g = eu (and ev when eu = 0)
  // simple approach: repeatedly fold the binomial tail:
  //   r = f + (c u^eu X^ex v^ev) * r
  // computed by ascending total grade; implement via map iteration on r
  // seeded from f, processing keys in sorted order (sorted order is
  // compatible because (eu,ex,ev) strictly increases in eu, or in ev at
  // equal eu... ex may decrease; handle via repeated passes instead)
  r.m_ = m_;
  // iterate: each pass adds the shifted copy of newly settled terms; since
  // the shift strictly increases eu (or ev at eu=0), the loop terminates
  std::map<Key, Int> frontier = r.m_;
  while (!frontier.empty()) {
    std::map<Key, Int> next;
    for (const auto& [k, co] : frontier) {
      int nu = std::get<0>(k) + eu, nx = std::get<1>(k) + ex,
          nv = std::get<2>(k) + ev;
      if (nu >= ctx_.order || std::abs(nx) > ctx_.xwin || nv > ctx_.vcap) continue;
      Int add = c * co;
      if (add == 0) continue;
      auto key = Key{nu, nx, nv};
      next[key] += add;
    }
    for (const auto& [k, cadd] : next) {
      auto it = r.m_.find(k);
      if (it == r.m_.end())
        r.m_.emplace(k, cadd);
      else {
        it->second += cadd;
        if (it->second == 0) r.m_.erase(it);
      }
    }
    frontier = std::move(next);
  }
  return r;
}

QSeries QSeries::const_term_x() const {
  QSeries r(ctx_);
  r.v_valid_ = v_valid_;
  for (const auto& [k, c] : m_)
    if (std::get<1>(k) == 0) r.m_.emplace(k, c);
  return r;
}

bool QSeries::agree(const QSeries& a, const QSeries& b, int vneed) {
  int valid = std::min(a.v_valid_, b.v_valid_);
  if (valid < vneed)
    throw WindowError("QSeries window too small: valid v <= " +
                      std::to_string(valid) + ", need " + std::to_string(vneed));
  auto within = [&](const QSeries& s, const Key& k) {
    (void)s;
    return std::get<2>(k) <= vneed;
  };
  for (const auto& [k, c] : a.m_)
    if (within(a, k) && b.coeff(std::get<0>(k), std::get<1>(k), std::get<2>(k)) != c)
      return false;
  for (const auto& [k, c] : b.m_)
    if (within(b, k) && a.coeff(std::get<0>(k), std::get<1>(k), std::get<2>(k)) != c)
      return false;
  return true;
}

std::string QSeries::str(int max_terms) const {
  std::ostringstream os;
  int n = 0;
  for (const auto& [k, c] : m_) {
    if (n++ >= max_terms) { os << " + ..."; break; }
    if (n > 1) os << " + ";
    os << c.get_str() << "*u^" << std::get<0>(k);
    if (std::get<1>(k)) os << "*X^" << std::get<1>(k);
    if (std::get<2>(k)) os << "*v^" << std::get<2>(k);
  }
  if (n == 0) os << "0";
  return os.str();
}

}  // namespace daha
