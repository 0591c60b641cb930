#include "cca/lp.hpp"

#include <cassert>

#include "cca/errors.hpp"

namespace cca {

namespace {

// Dense exact simplex tableau for phase 1:
//
//   minimize the sum of artificials subject to
//     sum_j lambda_j * a_ji + s_i = v_i   (i < d)
//     sum_j lambda_j              = 1
//     lambda, s, artificials >= 0
//
// Feasible iff the optimum is zero. Bland's rule prevents cycling.
class Phase1 {
 public:
  Phase1(const std::vector<Exponent>& pts, const std::vector<Rational>& v) {
    const std::size_t d = v.size();
    const std::size_t m = pts.size();
    rows_ = d + 1;
    cols_ = m + d + rows_;  // lambdas, slacks, artificials
    tab_.assign(rows_, std::vector<Rational>(cols_ + 1, Rational(0)));
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = 0; j < m; ++j) tab_[i][j] = Rational(pts[j][i]);
      tab_[i][m + i] = 1;                  // slack
      tab_[i][m + d + i] = 1;              // artificial
      tab_[i][cols_] = v[i];               // rhs, nonnegative
      assert(v[i] >= 0);
    }
    for (std::size_t j = 0; j < m; ++j) tab_[d][j] = 1;
    tab_[d][m + d + d] = 1;
    tab_[d][cols_] = 1;
    basis_.resize(rows_);
    for (std::size_t i = 0; i < rows_; ++i) basis_[i] = m + d + i;
    // Objective row: sum of artificial rows, negated reduced costs for the
    // basic artificials fold into obj_ = sum of rhs.
    obj_.assign(cols_ + 1, Rational(0));
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t c = 0; c <= cols_; ++c) obj_[c] += tab_[i][c];
    for (std::size_t i = 0; i < rows_; ++i) obj_[m + d + i] = 0;
  }

  bool feasible() {
    const std::size_t artificial_start = cols_ - rows_;
    for (;;) {
      // Bland: smallest improving column. Maximizing the artificial row
      // value means entering columns with positive coefficient.
      std::size_t enter = cols_;
      for (std::size_t j = 0; j < artificial_start; ++j) {
        if (obj_[j] > 0) {
          enter = j;
          break;
        }
      }
      if (enter == cols_) break;
      std::size_t leave = rows_;
      Rational best;
      for (std::size_t i = 0; i < rows_; ++i) {
        if (tab_[i][enter] <= 0) continue;
        Rational ratio = tab_[i][cols_] / tab_[i][enter];
        if (leave == rows_ || ratio < best ||
            (ratio == best && basis_[i] < basis_[leave])) {
          best = ratio;
          leave = i;
        }
      }
      if (leave == rows_) return false;  // unbounded; cannot occur here
      pivot(leave, enter);
    }
    return obj_[cols_] == 0;
  }

 private:
  void pivot(std::size_t r, std::size_t c) {
    const Rational p = tab_[r][c];
    for (std::size_t j = 0; j <= cols_; ++j) tab_[r][j] /= p;
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == r || tab_[i][c] == 0) continue;
      const Rational f = tab_[i][c];
      for (std::size_t j = 0; j <= cols_; ++j) tab_[i][j] -= f * tab_[r][j];
    }
    if (obj_[c] != 0) {
      const Rational f = obj_[c];
      for (std::size_t j = 0; j <= cols_; ++j) obj_[j] -= f * tab_[r][j];
    }
    basis_[r] = c;
  }

  std::size_t rows_ = 0, cols_ = 0;
  std::vector<std::vector<Rational>> tab_;
  std::vector<Rational> obj_;
  std::vector<std::size_t> basis_;
};

}  // namespace

bool lp_in_shifted_hull(const std::vector<Exponent>& points,
                        const std::vector<Rational>& v) {
  if (points.empty()) return false;
  for (const Rational& x : v)
    if (x < 0) return false;
  for (const Exponent& p : points)
    if (p.size() != v.size())
      throw DomainError("point dimension mismatch in hull test");
  return Phase1(points, v).feasible();
}

}  // namespace cca
