#pragma once

#include <cstddef>
#include <vector>

#include "mgn/errors.hpp"
#include "mgn/rational.hpp"

/// Exact two-phase primal simplex on a dense tableau, Bland's rule.
namespace mgn::lp {

enum class Status { optimal, infeasible, unbounded };

inline const char* to_string(Status s) {
  switch (s) {
    case Status::optimal: return "optimal";
    case Status::infeasible: return "infeasible";
    case Status::unbounded: return "unbounded";
  }
  return "?";
}

struct Result {
  Status status = Status::infeasible;
  std::vector<Rational> x;
  Rational objective;
  std::size_t pivots = 0;
};

using Matrix = std::vector<std::vector<Rational>>;

namespace detail {

class Tableau {
 public:
  Tableau(const Matrix& a, const std::vector<Rational>& b) : m_(a.size()), n_(a.empty() ? 0 : a[0].size()) {
    // Columns: n originals, m artificials, rhs.
    rows_.assign(m_, std::vector<Rational>(n_ + m_ + 1));
    basis_.resize(m_);
    for (std::size_t r = 0; r < m_; ++r) {
      if (a[r].size() != n_) throw input_error("lp: ragged constraint matrix");
      const bool flip = b[r].sign() < 0;
      for (std::size_t j = 0; j < n_; ++j) rows_[r][j] = flip ? -a[r][j] : a[r][j];
      rows_[r][n_ + r] = Rational(1);
      rows_[r][n_ + m_] = flip ? -b[r] : b[r];
      basis_[r] = n_ + r;
    }
  }

  std::size_t pivots() const { return pivots_; }

  /// Optimizes cost over the allowed columns, starting from the current basis.
  Status optimize(const std::vector<Rational>& cost, std::size_t allowed) {
    const std::size_t width = n_ + m_;
    std::vector<Rational> obj(width + 1);
    for (std::size_t j = 0; j < width; ++j) obj[j] = j < cost.size() ? cost[j] : Rational(0);
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const Rational& cb = basis_[r] < cost.size() ? cost[basis_[r]] : zero_;
      if (cb.is_zero()) continue;
      for (std::size_t j = 0; j <= width; ++j)
        if (!rows_[r][j].is_zero()) obj[j] -= cb * rows_[r][j];
    }
    for (;;) {
      std::size_t enter = width;
      for (std::size_t j = 0; j < allowed; ++j)
        if (obj[j].sign() > 0) {
          enter = j;
          break;
        }
      if (enter == width) return Status::optimal;
      std::size_t leave = rows_.size();
      Rational best;
      for (std::size_t r = 0; r < rows_.size(); ++r) {
        if (rows_[r][enter].sign() <= 0) continue;
        Rational ratio = rows_[r][width] / rows_[r][enter];
        if (leave == rows_.size() || ratio < best || (ratio == best && basis_[r] < basis_[leave])) {
          leave = r;
          best = ratio;
        }
      }
      if (leave == rows_.size()) return Status::unbounded;
      pivot(leave, enter, &obj);
    }
  }

  void pivot(std::size_t r, std::size_t col, std::vector<Rational>* obj) {
    const std::size_t width = n_ + m_;
    auto& row = rows_[r];
    const Rational inv = Rational(1) / row[col];
    std::vector<std::size_t> support;
    for (std::size_t j = 0; j <= width; ++j)
      if (!row[j].is_zero()) {
        row[j] *= inv;
        support.push_back(j);
      }
    auto eliminate = [&](std::vector<Rational>& other) {
      if (other[col].is_zero()) return;
      const Rational f = other[col];
      for (auto j : support) other[j] -= f * row[j];
    };
    for (std::size_t i = 0; i < rows_.size(); ++i)
      if (i != r) eliminate(rows_[i]);
    if (obj) eliminate(*obj);
    basis_[r] = col;
    ++pivots_;
  }

  /// After phase one: pivots artificials out of the basis, dropping rows
  /// that turn out to be redundant.
  void expel_artificials() {
    for (std::size_t r = 0; r < rows_.size();) {
      if (basis_[r] < n_) {
        ++r;
        continue;
      }
      std::size_t col = n_;
      for (std::size_t j = 0; j < n_; ++j)
        if (!rows_[r][j].is_zero()) {
          col = j;
          break;
        }
      if (col == n_) {
        rows_.erase(rows_.begin() + static_cast<long>(r));
        basis_.erase(basis_.begin() + static_cast<long>(r));
        continue;
      }
      pivot(r, col, nullptr);
      ++r;
    }
  }

  std::vector<Rational> solution() const {
    std::vector<Rational> x(n_);
    for (std::size_t r = 0; r < rows_.size(); ++r)
      if (basis_[r] < n_) x[basis_[r]] = rows_[r][n_ + m_];
    return x;
  }

  std::size_t originals() const { return n_; }
  std::size_t artificials() const { return m_; }

 private:
  std::size_t m_, n_;
  Matrix rows_;
  std::vector<std::size_t> basis_;
  std::size_t pivots_ = 0;
  Rational zero_;
};

}  // namespace detail

/// maximize c.x subject to A x = b, x >= 0.
inline Result maximize(const Matrix& a, const std::vector<Rational>& b, const std::vector<Rational>& c) {
  if (a.size() != b.size()) throw input_error("lp: row count mismatch");
  detail::Tableau t(a, b);
  const std::size_t n = t.originals(), m = t.artificials();
  if (c.size() != n) throw input_error("lp: objective length mismatch");

  std::vector<Rational> phase1(n + m);
  for (std::size_t j = n; j < n + m; ++j) phase1[j] = Rational(-1);
  t.optimize(phase1, n + m);
  Result res;
  {
    auto x = t.solution();
    // Phase-one optimum is zero iff the artificials could all be driven out.
    Rational infeas(0);
    for (std::size_t r = 0; r < m; ++r) {
      Rational lhs(0);
      for (std::size_t j = 0; j < n; ++j)
        if (!a[r][j].is_zero() && !x[j].is_zero()) lhs += a[r][j] * x[j];
      infeas += abs(lhs - b[r]);
    }
    if (!infeas.is_zero()) {
      res.status = Status::infeasible;
      res.pivots = t.pivots();
      return res;
    }
  }
  t.expel_artificials();
  res.status = t.optimize(c, n);
  res.pivots = t.pivots();
  if (res.status == Status::optimal) {
    res.x = t.solution();
    res.objective = Rational(0);
    for (std::size_t j = 0; j < n; ++j)
      if (!c[j].is_zero()) res.objective += c[j] * res.x[j];
  }
  return res;
}

}  // namespace mgn::lp
