#pragma once

// Dense-tableau two-phase simplex, templated on the exact number type.
// Private to the library; the public entry point is solve_exact().

#include <cstddef>
#include <cstdint>
#include <vector>

#include "hyperwalk/lp_solver.hpp"
#include "hyperwalk/rational.hpp"

namespace hyperwalk::detail {

inline int sign_of(const Rational& v) { return v.sign(); }
inline int sign_of(const BigRational& v) { return sgn(v); }

template <typename Num>
Num convert(const Rational& v);
template <>
inline Rational convert<Rational>(const Rational& v) { return v; }
template <>
inline BigRational convert<BigRational>(const Rational& v) { return to_big(v); }

inline Rational back(const Rational& v) { return v; }
inline Rational back(const BigRational& v) { return from_big(v); }

template <typename Num>
class Simplex {
 public:
  explicit Simplex(const LinearProgram& lp) : lp_(lp) { build(); }

  LPSolution run() {
    LPSolution out;
    if (!phase_one()) {
      out.status = LPStatus::Infeasible;
      out.pivots = pivots_;
      return out;
    }
    set_phase_two_objective();
    if (!optimize(/*phase_two=*/true)) {
      out.status = LPStatus::Unbounded;
      out.pivots = pivots_;
      return out;
    }
    out.status = LPStatus::Optimal;
    out.pivots = pivots_;
    const std::size_t n = lp_.variables.size();
    out.witness.assign(n, Rational());
    for (std::size_t r = 0; r < rows_; ++r) {
      if (basis_[r] < n) out.witness[basis_[r]] = back(at(r, rhs_col()));
    }
    out.optimum = Rational();
    for (std::size_t j = 0; j < n; ++j) {
      if (!lp_.objective[j].is_zero()) out.optimum += lp_.objective[j] * out.witness[j];
    }
    // y_i = c_B^T B^{-1} e_i via the column that started as e_i in row i.
    out.duals.assign(lp_.rows.size(), Rational());
    for (std::size_t i = 0; i < rows_; ++i) {
      Num y = Num(0);
      for (std::size_t r = 0; r < rows_; ++r) {
        if (basis_[r] < n && sign_of(at(r, unit_col_[i])) != 0) {
          y += convert<Num>(lp_.objective[basis_[r]]) * at(r, unit_col_[i]);
        }
      }
      // Certificate multiplier of the original row.
      Rational mult = back(y);
      if (flipped_[i]) mult = -mult;
      out.duals[i] = -mult;
    }
    return out;
  }

 private:
  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);

  Num& at(std::size_t r, std::size_t c) { return cells_[r * width_ + c]; }
  const Num& at(std::size_t r, std::size_t c) const { return cells_[r * width_ + c]; }
  std::size_t rhs_col() const { return width_ - 1; }
  std::size_t obj_row() const { return rows_; }

  // Columns: structural [0, n), one slack per <= row, the shared artificial
  // a0 for negative right-hand sides, one artificial per equality row, rhs.
  void build() {
    const std::size_t n = lp_.variables.size();
    rows_ = lp_.rows.size();
    std::size_t slacks = 0;
    std::size_t eq_rows = 0;
    for (const auto& row : lp_.rows) {
      if (row.relation == Relation::LessEqual) ++slacks; else ++eq_rows;
    }
    slack_begin_ = n;
    a0_col_ = n + slacks;
    art_begin_ = a0_col_ + 1;
    width_ = art_begin_ + eq_rows + 1;
    cells_.assign((rows_ + 1) * width_, Num(0));
    basis_.assign(rows_, kNone);
    unit_col_.assign(rows_, kNone);
    flipped_.assign(rows_, false);

    std::size_t s = slack_begin_;
    std::size_t a = art_begin_;
    std::size_t most_negative = kNone;
    for (std::size_t i = 0; i < rows_; ++i) {
      const auto& row = lp_.rows[i];
      const bool flip = row.relation == Relation::Equal && row.rhs.sign() < 0;
      flipped_[i] = flip;
      for (std::size_t j = 0; j < n; ++j) {
        if (!row.coeffs[j].is_zero()) at(i, j) = convert<Num>(flip ? -row.coeffs[j] : row.coeffs[j]);
      }
      at(i, rhs_col()) = convert<Num>(flip ? -row.rhs : row.rhs);
      if (row.relation == Relation::LessEqual) {
        at(i, s) = Num(1);
        unit_col_[i] = s;
        basis_[i] = s;
        ++s;
        if (row.rhs.sign() < 0) {
          at(i, a0_col_) = Num(-1);
          if (most_negative == kNone || row.rhs < lp_.rows[most_negative].rhs) most_negative = i;
        }
      } else {
        at(i, a) = Num(1);
        unit_col_[i] = a;
        basis_[i] = a;
        ++a;
      }
    }
    a0_row_ = most_negative;
  }

  bool is_artificial(std::size_t col) const { return col >= a0_col_ && col < rhs_col(); }

  void pivot(std::size_t pr, std::size_t pc) {
    ++pivots_;
    const Num inv = Num(1) / at(pr, pc);
    nz_.clear();
    for (std::size_t c = 0; c < width_; ++c) {
      if (sign_of(at(pr, c)) != 0) {
        at(pr, c) *= inv;
        nz_.push_back(c);
      }
    }
    for (std::size_t r = 0; r <= rows_; ++r) {
      if (r == pr) continue;
      const Num factor = at(r, pc);
      if (sign_of(factor) == 0) continue;
      for (std::size_t c : nz_) at(r, c) -= factor * at(pr, c);
    }
    basis_[pr] = pc;
  }

  // Bland's rule. Returns false if unbounded.
  bool optimize(bool phase_two) {
    while (true) {
      std::size_t enter = kNone;
      for (std::size_t c = 0; c < rhs_col(); ++c) {
        if (phase_two && is_artificial(c)) continue;
        if (sign_of(at(obj_row(), c)) < 0) {
          enter = c;
          break;
        }
      }
      if (enter == kNone) return true;
      std::size_t leave = kNone;
      Num best_ratio;
      for (std::size_t r = 0; r < rows_; ++r) {
        if (sign_of(at(r, enter)) <= 0) continue;
        Num ratio = at(r, rhs_col()) / at(r, enter);
        if (leave == kNone || ratio < best_ratio ||
            (ratio == best_ratio && basis_[r] < basis_[leave])) {
          leave = r;
          best_ratio = std::move(ratio);
        }
      }
      if (leave == kNone) return false;
      pivot(leave, enter);
    }
  }

  bool phase_one() {
    const bool need_a0 = a0_row_ != kNone;
    const bool need_eq = art_begin_ < rhs_col();
    if (!need_a0 && !need_eq) return true;
    // Objective: minimize a0 + sum of equality artificials.
    for (std::size_t c = 0; c < width_; ++c) at(obj_row(), c) = Num(0);
    for (std::size_t c = a0_col_; c < rhs_col(); ++c) at(obj_row(), c) = Num(1);
    for (std::size_t r = 0; r < rows_; ++r) {
      if (is_artificial(basis_[r])) {
        for (std::size_t c = 0; c < width_; ++c) at(obj_row(), c) -= at(r, c);
      }
    }
    if (need_a0) {
      // a0 enters at the most negative row; afterwards every rhs is >= 0.
      pivot(a0_row_, a0_col_);
    } else {
      at(obj_row(), a0_col_) = Num(0);
    }
    optimize(/*phase_two=*/false);
    if (sign_of(at(obj_row(), rhs_col())) != 0) return false;
    // Drive zero-level artificials out of the basis where possible.
    for (std::size_t r = 0; r < rows_; ++r) {
      if (!is_artificial(basis_[r])) continue;
      for (std::size_t c = 0; c < a0_col_; ++c) {
        if (sign_of(at(r, c)) != 0) {
          pivot(r, c);
          break;
        }
      }
    }
    return true;
  }

  void set_phase_two_objective() {
    const std::size_t n = lp_.variables.size();
    for (std::size_t c = 0; c < width_; ++c) at(obj_row(), c) = Num(0);
    for (std::size_t j = 0; j < n; ++j) {
      if (!lp_.objective[j].is_zero()) at(obj_row(), j) = convert<Num>(lp_.objective[j]);
    }
    for (std::size_t r = 0; r < rows_; ++r) {
      const std::size_t b = basis_[r];
      if (b >= n || lp_.objective[b].is_zero()) continue;
      const Num cb = convert<Num>(lp_.objective[b]);
      for (std::size_t c = 0; c < width_; ++c) {
        if (sign_of(at(r, c)) != 0) at(obj_row(), c) -= cb * at(r, c);
      }
    }
  }

  const LinearProgram& lp_;
  std::size_t rows_ = 0;
  std::size_t width_ = 0;
  std::size_t slack_begin_ = 0;
  std::size_t a0_col_ = 0;
  std::size_t art_begin_ = 0;
  std::size_t a0_row_ = kNone;
  std::vector<Num> cells_;
  std::vector<std::size_t> basis_;
  std::vector<std::size_t> unit_col_;
  std::vector<bool> flipped_;
  std::vector<std::size_t> nz_;
  std::uint64_t pivots_ = 0;
};

}  // namespace hyperwalk::detail
