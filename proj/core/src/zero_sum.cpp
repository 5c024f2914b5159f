#include "tourney/zero_sum.hpp"

#include <string>

#include "tourney/error.hpp"

namespace tourney {

RationalMatrix::RationalMatrix(const SkewAdjacency& m) : RationalMatrix(m.order()) {
  for (std::size_t r = 0; r < order_; ++r) {
    for (std::size_t c = 0; c < order_; ++c) at(r, c) = m.at(r, c);
  }
}

bool RationalMatrix::is_skew_symmetric() const {
  for (std::size_t r = 0; r < order_; ++r) {
    for (std::size_t c = r; c < order_; ++c) {
      if (at(r, c) + at(c, r) != 0) return false;
    }
  }
  return true;
}

namespace {

// Phase-one simplex on
//   sum_x M(x,y) p_x - s_y + a_y = 0   (one row per column y)
//   sum_x p_x              + a_n = 1
// with p, s, a >= 0, minimizing sum a. Columns: p in [0,n), s in [n,2n),
// artificials in [2n,3n]. Artificials never re-enter once they leave.
class PhaseOneTableau {
 public:
  explicit PhaseOneTableau(const RationalMatrix& m)
      : n_(m.order()),
        cols_(3 * n_ + 1),
        rows_(n_ + 1, std::vector<Rational>(cols_)),
        rhs_(n_ + 1),
        reduced_(cols_),
        basis_(n_ + 1) {
    for (std::size_t y = 0; y < n_; ++y) {
      for (std::size_t x = 0; x < n_; ++x) rows_[y][x] = m.at(x, y);
      rows_[y][n_ + y] = -1;
    }
    for (std::size_t x = 0; x < n_; ++x) rows_[n_][x] = 1;
    rhs_[n_] = 1;
    for (std::size_t r = 0; r <= n_; ++r) {
      rows_[r][2 * n_ + r] = 1;
      basis_[r] = 2 * n_ + r;
    }
    for (std::size_t j = 0; j < 2 * n_; ++j) {
      for (std::size_t r = 0; r <= n_; ++r) reduced_[j] -= rows_[r][j];
    }
  }

  void solve() {
    while (infeasibility() != 0) {
      const std::size_t enter = entering_column();
      if (enter == cols_) {
        throw SolverError("phase-one optimum is positive: matrix has no feasible equilibrium");
      }
      pivot(leaving_row(enter), enter);
    }
  }

  std::vector<Rational> strategy() const {
    std::vector<Rational> p(n_);
    for (std::size_t r = 0; r <= n_; ++r) {
      if (basis_[r] < n_) p[basis_[r]] = rhs_[r];
    }
    return p;
  }

 private:
  bool is_artificial(std::size_t j) const { return j >= 2 * n_; }

  Rational infeasibility() const {
    Rational w = 0;
    for (std::size_t r = 0; r <= n_; ++r) {
      if (is_artificial(basis_[r])) w += rhs_[r];
    }
    return w;
  }

  // Bland: lowest-index structural column with negative reduced cost.
  std::size_t entering_column() const {
    for (std::size_t j = 0; j < 2 * n_; ++j) {
      if (sgn(reduced_[j]) < 0) return j;
    }
    return cols_;
  }

  // Minimum ratio; ties go to the lowest basic variable index.
  std::size_t leaving_row(std::size_t enter) const {
    std::size_t best = rows_.size();
    Rational best_ratio;
    for (std::size_t r = 0; r <= n_; ++r) {
      if (sgn(rows_[r][enter]) <= 0) continue;
      Rational ratio = rhs_[r] / rows_[r][enter];
      if (best == rows_.size() || ratio < best_ratio ||
          (ratio == best_ratio && basis_[r] < basis_[best])) {
        best = r;
        best_ratio = std::move(ratio);
      }
    }
    if (best == rows_.size()) throw SolverError("phase-one objective unbounded");
    return best;
  }

  void pivot(std::size_t row, std::size_t col) {
    const Rational inv = 1 / rows_[row][col];
    for (Rational& v : rows_[row]) v *= inv;
    rhs_[row] *= inv;
    auto eliminate = [&](std::vector<Rational>& target, Rational* target_rhs) {
      if (sgn(target[col]) == 0) return;
      const Rational factor = target[col];
      for (std::size_t j = 0; j < cols_; ++j) {
        if (sgn(rows_[row][j]) != 0) target[j] -= factor * rows_[row][j];
      }
      if (target_rhs != nullptr) *target_rhs -= factor * rhs_[row];
    };
    for (std::size_t r = 0; r <= n_; ++r) {
      if (r != row) eliminate(rows_[r], &rhs_[r]);
    }
    eliminate(reduced_, nullptr);
    basis_[row] = col;
  }

  std::size_t n_;
  std::size_t cols_;
  std::vector<std::vector<Rational>> rows_;
  std::vector<Rational> rhs_;
  std::vector<Rational> reduced_;
  std::vector<std::size_t> basis_;
};

void check_dimensions(const SkewAdjacency& m, std::span<const Rational> p) {
  if (p.size() != m.order()) {
    throw InvalidTournament("dimension mismatch: matrix order " + std::to_string(m.order()) +
                            ", strategy length " + std::to_string(p.size()));
  }
}

}  // namespace

Lottery solve_symmetric_zero_sum(const RationalMatrix& m) {
  if (m.order() == 0) throw InvalidTournament("empty game");
  if (!m.is_skew_symmetric()) throw InvalidTournament("payoff matrix is not skew-symmetric");
  PhaseOneTableau tableau(m);
  tableau.solve();
  return Lottery(tableau.strategy());
}

Lottery solve_symmetric_zero_sum(const SkewAdjacency& m) {
  return solve_symmetric_zero_sum(RationalMatrix(m));
}

std::vector<Rational> equilibrium_slack(const SkewAdjacency& m, std::span<const Rational> p) {
  check_dimensions(m, p);
  std::vector<Rational> slack(m.order());
  for (std::size_t y = 0; y < m.order(); ++y) {
    for (std::size_t x = 0; x < m.order(); ++x) {
      const int e = m.at(x, y);
      if (e > 0) {
        slack[y] += p[x];
      } else if (e < 0) {
        slack[y] -= p[x];
      }
    }
  }
  return slack;
}

bool verify_equilibrium(const SkewAdjacency& m, std::span<const Rational> p) {
  check_dimensions(m, p);
  Rational total = 0;
  for (const Rational& w : p) {
    if (sgn(w) < 0) return false;
    total += w;
  }
  if (total != 1) return false;
  for (const Rational& s : equilibrium_slack(m, p)) {
    if (sgn(s) < 0) return false;
  }
  return true;
}

}  // namespace tourney
