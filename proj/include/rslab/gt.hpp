#pragma once

#include <compare>
#include <string>
#include <vector>

#include "rslab/rational.hpp"

namespace rslab {

// Integer weight / signature, non-increasing when dominant.
using Weight = std::vector<long>;

long ell(const Weight& gamma);
bool is_dominant(const Weight& lam);
bool is_zero_one(const Weight& lam);
Weight hat(const Weight& lam);            // drop the last entry
Weight negate(const Weight& lam);
Weight reversed_negate(const Weight& lam);  // (-lam_n, ..., -lam_1)
Weight shifted(const Weight& lam, long c);
Weight add(const Weight& a, const Weight& b);
Weight sub(const Weight& a, const Weight& b);
std::string weight_key(const Weight& lam);

// b(gamma) = (sum gamma_i)! / prod gamma_i!  for gamma_i >= 0.
Rational multinomial(const Weight& gamma);

// Triangular array (m_{i,j})_{1<=i<=j<=n} with interlacing rows.  Row j has j
// entries; storage is top row first: rows[0] holds row n, rows[n-1] holds row 1.
class GTPattern {
 public:
  GTPattern() = default;
  explicit GTPattern(std::vector<std::vector<long>> rows);

  int n() const { return static_cast<int>(rows_.size()); }
  // 1 <= i <= j <= n.
  long m(int i, int j) const { return rows_[rows_.size() - j][i - 1]; }
  const std::vector<long>& row(int j) const { return rows_[rows_.size() - j]; }
  const std::vector<std::vector<long>>& rows() const { return rows_; }
  const Weight& top() const { return rows_.front(); }

  bool interlaced() const;

  Weight weight() const;  // gamma^M
  GTPattern drop_top() const;
  GTPattern with_top(const Weight& lam) const;
  GTPattern dual() const;        // m_{i,j} -> -m_{j+1-i,j}
  GTPattern shifted(long c) const;
  // Add delta to entry (i,j); result may violate interlacing (check with
  // interlaced()).
  GTPattern bumped(int i, int j, long delta) const;

  bool operator==(const GTPattern&) const = default;
  std::strong_ordering operator<=>(const GTPattern& o) const;

 private:
  std::vector<std::vector<long>> rows_;
};

// All patterns with the given top row, sorted lexicographically on the
// row-concatenated sequence (top row first).
std::vector<GTPattern> enumerate_patterns(const Weight& lam);
std::size_t pattern_index(const std::vector<GTPattern>& list, const GTPattern& M);

GTPattern highest_pattern(const Weight& lam);       // H(lam): rows repeat lam
GTPattern elementary_pattern(const Weight& gamma);  // Q(gamma), top row (ell,0,...)

Integer weyl_dimension(const Weight& lam);
long weyl_dimension_long(const Weight& lam);

// r(M): square norm of xi_M relative to the orthonormal basis.
Rational pattern_norm(const GTPattern& M);

// Branching multiplicity-one sets.
std::vector<Weight> branching_plus(const Weight& lam);               // Xi^+(lam)
std::vector<Weight> branching_circ(const Weight& lam, long l);       // Xi^o(lam; l)
bool in_branching_plus(const Weight& mu, const Weight& lam);
bool in_branching_circ(const Weight& lamp, const Weight& lam);

}  // namespace rslab
