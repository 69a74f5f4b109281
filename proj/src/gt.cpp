#include "rslab/gt.hpp"

#include <algorithm>
#include <stdexcept>

namespace rslab {

long ell(const Weight& gamma) {
  long s = 0;
  for (long g : gamma) s += g;
  return s;
}

bool is_dominant(const Weight& lam) {
  for (std::size_t i = 0; i + 1 < lam.size(); ++i)
    if (lam[i] < lam[i + 1]) return false;
  return true;
}

bool is_zero_one(const Weight& lam) {
  for (long x : lam)
    if (x != 0 && x != 1) return false;
  return true;
}

Weight hat(const Weight& lam) {
  if (lam.empty()) throw std::invalid_argument("hat of empty weight");
  return Weight(lam.begin(), lam.end() - 1);
}

Weight negate(const Weight& lam) {
  Weight r(lam);
  for (long& x : r) x = -x;
  return r;
}

Weight reversed_negate(const Weight& lam) {
  Weight r(lam.rbegin(), lam.rend());
  for (long& x : r) x = -x;
  return r;
}

Weight shifted(const Weight& lam, long c) {
  Weight r(lam);
  for (long& x : r) x += c;
  return r;
}

Weight add(const Weight& a, const Weight& b) {
  if (a.size() != b.size()) throw std::invalid_argument("weight size mismatch");
  Weight r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

Weight sub(const Weight& a, const Weight& b) {
  if (a.size() != b.size()) throw std::invalid_argument("weight size mismatch");
  Weight r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

std::string weight_key(const Weight& lam) {
  std::string s;
  for (std::size_t i = 0; i < lam.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(lam[i]);
  }
  return s;
}

Rational multinomial(const Weight& gamma) {
  for (long g : gamma)
    if (g < 0) throw std::domain_error("multinomial needs nonnegative entries");
  Rational r(factorial(ell(gamma)));
  for (long g : gamma) r /= Rational(factorial(g));
  return r;
}

GTPattern::GTPattern(std::vector<std::vector<long>> rows) : rows_(std::move(rows)) {
  const std::size_t n = rows_.size();
  for (std::size_t k = 0; k < n; ++k)
    if (rows_[k].size() != n - k) throw std::invalid_argument("ragged GT pattern");
}

bool GTPattern::interlaced() const {
  for (int j = n(); j >= 2; --j) {
    const auto& up = row(j);
    const auto& lo = row(j - 1);
    for (int i = 0; i + 1 < j; ++i)
      if (!(up[i] >= lo[i] && lo[i] >= up[i + 1])) return false;
  }
  return true;
}

Weight GTPattern::weight() const {
  Weight gamma(n());
  long prev = 0;
  for (int j = 1; j <= n(); ++j) {
    long s = 0;
    for (long x : row(j)) s += x;
    gamma[j - 1] = s - prev;
    prev = s;
  }
  return gamma;
}

GTPattern GTPattern::drop_top() const {
  if (n() < 2) throw std::invalid_argument("cannot drop the only row");
  return GTPattern({rows_.begin() + 1, rows_.end()});
}

GTPattern GTPattern::with_top(const Weight& lam) const {
  if (lam.size() != rows_.size() + 1) throw std::invalid_argument("with_top size mismatch");
  std::vector<std::vector<long>> r;
  r.reserve(rows_.size() + 1);
  r.push_back(lam);
  r.insert(r.end(), rows_.begin(), rows_.end());
  GTPattern out(std::move(r));
  if (!out.interlaced()) throw std::invalid_argument("with_top breaks interlacing");
  return out;
}

GTPattern GTPattern::dual() const {
  auto r = rows_;
  for (auto& row : r) {
    std::reverse(row.begin(), row.end());
    for (long& x : row) x = -x;
  }
  return GTPattern(std::move(r));
}

GTPattern GTPattern::shifted(long c) const {
  auto r = rows_;
  for (auto& row : r)
    for (long& x : row) x += c;
  return GTPattern(std::move(r));
}

GTPattern GTPattern::bumped(int i, int j, long delta) const {
  auto r = rows_;
  r[rows_.size() - j][i - 1] += delta;
  return GTPattern(std::move(r));
}

std::strong_ordering GTPattern::operator<=>(const GTPattern& o) const {
  if (auto c = rows_.size() <=> o.rows_.size(); c != 0) return c;
  for (std::size_t k = 0; k < rows_.size(); ++k)
    for (std::size_t i = 0; i < rows_[k].size(); ++i)
      if (auto c = rows_[k][i] <=> o.rows_[k][i]; c != 0) return c;
  return std::strong_ordering::equal;
}

namespace {

void fill_rows(std::vector<std::vector<long>>& acc, std::vector<GTPattern>& out) {
  const auto cur = acc.back();
  if (cur.size() == 1) {
    out.emplace_back(acc);
    return;
  }
  std::vector<long> next(cur.size() - 1);
  // Odometer over the interlacing boxes.
  for (std::size_t i = 0; i < next.size(); ++i) next[i] = cur[i + 1];
  for (;;) {
    acc.push_back(next);
    fill_rows(acc, out);
    acc.pop_back();
    std::size_t i = next.size();
    while (i > 0) {
      --i;
      if (next[i] < cur[i]) {
        ++next[i];
        for (std::size_t k = i + 1; k < next.size(); ++k) next[k] = cur[k + 1];
        break;
      }
      if (i == 0) return;
    }
  }
}

}  // namespace

std::vector<GTPattern> enumerate_patterns(const Weight& lam) {
  if (lam.empty()) throw std::invalid_argument("empty top row");
  if (!is_dominant(lam)) throw std::invalid_argument("top row is not dominant");
  std::vector<GTPattern> out;
  std::vector<std::vector<long>> acc{lam};
  fill_rows(acc, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t pattern_index(const std::vector<GTPattern>& list, const GTPattern& M) {
  auto it = std::lower_bound(list.begin(), list.end(), M);
  if (it == list.end() || !(*it == M)) throw std::out_of_range("pattern not in list");
  return static_cast<std::size_t>(it - list.begin());
}

GTPattern highest_pattern(const Weight& lam) {
  if (!is_dominant(lam)) throw std::invalid_argument("highest_pattern needs dominant weight");
  std::vector<std::vector<long>> rows;
  for (std::size_t len = lam.size(); len >= 1; --len)
    rows.emplace_back(lam.begin(), lam.begin() + len);
  return GTPattern(std::move(rows));
}

GTPattern elementary_pattern(const Weight& gamma) {
  const std::size_t n = gamma.size();
  if (n == 0) throw std::invalid_argument("empty gamma");
  std::vector<std::vector<long>> rows;
  long partial = ell(gamma);
  for (std::size_t j = n; j >= 1; --j) {
    std::vector<long> row(j, 0);
    row[0] = partial;
    rows.push_back(std::move(row));
    partial -= gamma[j - 1];
  }
  GTPattern out{std::move(rows)};
  if (!out.interlaced()) throw std::invalid_argument("gamma has negative entries");
  return out;
}

Integer weyl_dimension(const Weight& lam) {
  if (!is_dominant(lam)) throw std::invalid_argument("weyl_dimension needs dominant weight");
  Rational r = 1;
  const long n = static_cast<long>(lam.size());
  for (long i = 0; i < n; ++i)
    for (long j = i + 1; j < n; ++j) r *= Rational(lam[i] - lam[j] + j - i, j - i);
  r.canonicalize();
  if (r.get_den() != 1) throw std::logic_error("nonintegral Weyl dimension");
  return r.get_num();
}

long weyl_dimension_long(const Weight& lam) {
  Integer d = weyl_dimension(lam);
  if (!d.fits_slong_p()) throw std::overflow_error("Weyl dimension overflow");
  return d.get_si();
}

Rational pattern_norm(const GTPattern& M) {
  const int n = M.n();
  Rational r = 1;
  for (int i = 1; i <= n; ++i)
    for (int j = i; j <= n; ++j)
      for (int k = j + 1; k <= n; ++k) {
        r *= Rational(factorial(M.m(i, k) - M.m(j, k - 1) - i + j));
        r *= Rational(factorial(M.m(i, k - 1) - M.m(j + 1, k) - i + j));
        r /= Rational(factorial(M.m(i, k - 1) - M.m(j, k - 1) - i + j));
        r /= Rational(factorial(M.m(i, k) - M.m(j + 1, k) - i + j));
      }
  return r;
}

std::vector<Weight> branching_plus(const Weight& lam) {
  if (!is_dominant(lam)) throw std::invalid_argument("branching_plus needs dominant weight");
  const std::size_t n = lam.size();
  if (n < 2) throw std::invalid_argument("branching_plus needs n >= 2");
  std::vector<Weight> out;
  Weight mu(n - 1);
  for (std::size_t i = 0; i < n - 1; ++i) mu[i] = lam[i + 1];
  for (;;) {
    out.push_back(mu);
    std::size_t i = mu.size();
    bool done = true;
    while (i > 0) {
      --i;
      if (mu[i] < lam[i]) {
        ++mu[i];
        for (std::size_t k = i + 1; k < mu.size(); ++k) mu[k] = lam[k + 1];
        done = false;
        break;
      }
    }
    if (done) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

void circ_rec(const Weight& lam, std::size_t i, long budget, Weight& cur,
              std::vector<Weight>& out) {
  const std::size_t n = lam.size();
  if (i == n) {
    if (budget == 0) out.push_back(cur);
    return;
  }
  const long lo = lam[i];
  const long hi = (i == 0) ? lam[0] + budget : std::min(lam[i - 1], lam[i] + budget);
  for (long v = lo; v <= hi; ++v) {
    cur[i] = v;
    circ_rec(lam, i + 1, budget - (v - lam[i]), cur, out);
  }
}

}  // namespace

std::vector<Weight> branching_circ(const Weight& lam, long l) {
  if (!is_dominant(lam)) throw std::invalid_argument("branching_circ needs dominant weight");
  if (l < 0) return {};
  std::vector<Weight> out;
  Weight cur(lam.size());
  circ_rec(lam, 0, l, cur, out);
  std::sort(out.begin(), out.end());
  return out;
}

bool in_branching_plus(const Weight& mu, const Weight& lam) {
  if (mu.size() + 1 != lam.size()) return false;
  for (std::size_t i = 0; i < mu.size(); ++i)
    if (!(lam[i] >= mu[i] && mu[i] >= lam[i + 1])) return false;
  return true;
}

bool in_branching_circ(const Weight& lamp, const Weight& lam) {
  if (lamp.size() != lam.size()) return false;
  for (std::size_t i = 0; i < lam.size(); ++i) {
    if (!(lamp[i] >= lam[i])) return false;
    if (i + 1 < lam.size() && !(lam[i] >= lamp[i + 1])) return false;
  }
  return true;
}

}  // namespace rslab
