#include "mcrpc/rational_simplex.hpp"

#include <string>

#include "mcrpc/errors.hpp"

namespace mcrpc {

RationalSimplex::RationalSimplex(std::vector<Rational> objective)
    : variables_(objective.size()), reduced_(std::move(objective)) {
  for (auto& r : reduced_) r = -r;
}

void RationalSimplex::add_row(std::span<const Rational> coefficients, const Rational& rhs) {
  if (coefficients.size() != variables_) {
    throw Error("simplex row has " + std::to_string(coefficients.size()) + " coefficients for " +
                std::to_string(variables_) + " variables");
  }
  const std::size_t slack = variables_ + rows_.size();
  for (auto& row : rows_) row.emplace_back(0);
  reduced_.emplace_back(0);

  std::vector<Rational> row(slack + 1, Rational(0));
  for (std::size_t j = 0; j < variables_; ++j) row[j] = coefficients[j];
  row[slack] = 1;
  Rational value = rhs;
  // Eliminate the current basic variables from the new row.
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const Rational factor = row[basis_[i]];
    if (sgn(factor) == 0) continue;
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (sgn(rows_[i][j]) != 0) row[j] -= factor * rows_[i][j];
    }
    value -= factor * rhs_[i];
  }
  rows_.push_back(std::move(row));
  rhs_.push_back(std::move(value));
  basis_.push_back(slack);
}

void RationalSimplex::pivot(std::size_t r, std::size_t c) {
  ++pivots_;
  auto& prow = rows_[r];
  const Rational scale = prow[c];
  for (auto& v : prow) {
    if (sgn(v) != 0) v /= scale;
  }
  rhs_[r] /= scale;
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (i == r) continue;
    const Rational factor = rows_[i][c];
    if (sgn(factor) == 0) continue;
    for (std::size_t j = 0; j < prow.size(); ++j) {
      if (sgn(prow[j]) != 0) rows_[i][j] -= factor * prow[j];
    }
    rhs_[i] -= factor * rhs_[r];
  }
  if (const Rational factor = reduced_[c]; sgn(factor) != 0) {
    for (std::size_t j = 0; j < prow.size(); ++j) {
      if (sgn(prow[j]) != 0) reduced_[j] -= factor * prow[j];
    }
    objective_value_ -= factor * rhs_[r];
  }
  basis_[r] = c;
}

void RationalSimplex::run_primal() {
  for (;;) {
    std::size_t entering = reduced_.size();
    for (std::size_t j = 0; j < reduced_.size(); ++j) {
      if (sgn(reduced_[j]) < 0) {
        entering = j;
        break;
      }
    }
    if (entering == reduced_.size()) return;

    std::size_t leaving = rows_.size();
    Rational best_ratio;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (sgn(rows_[i][entering]) <= 0) continue;
      Rational ratio = rhs_[i] / rows_[i][entering];
      if (leaving == rows_.size() || ratio < best_ratio ||
          (ratio == best_ratio && basis_[i] < basis_[leaving])) {
        leaving = i;
        best_ratio = ratio;
      }
    }
    if (leaving == rows_.size()) throw Error("linear program is unbounded");
    pivot(leaving, entering);
  }
}

void RationalSimplex::run_dual() {
  for (;;) {
    std::size_t leaving = rows_.size();
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (sgn(rhs_[i]) < 0 && (leaving == rows_.size() || basis_[i] < basis_[leaving])) {
        leaving = i;
      }
    }
    if (leaving == rows_.size()) return;

    const auto& row = rows_[leaving];
    std::size_t entering = row.size();
    Rational best_ratio;
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (sgn(row[j]) >= 0) continue;
      Rational ratio = reduced_[j] / -row[j];
      if (entering == row.size() || ratio < best_ratio) {
        entering = j;
        best_ratio = ratio;
      }
    }
    if (entering == row.size()) throw Error("linear program is infeasible");
    pivot(leaving, entering);
  }
}

void RationalSimplex::solve() {
  bool primal_feasible = true;
  for (const auto& b : rhs_) primal_feasible = primal_feasible && sgn(b) >= 0;
  if (!solved_once_ && !primal_feasible) {
    throw Error("initial simplex rows need nonnegative right-hand sides");
  }
  if (!primal_feasible) run_dual();
  run_primal();
  solved_once_ = true;
}

std::vector<Rational> RationalSimplex::solution() const {
  std::vector<Rational> values(variables_, Rational(0));
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (basis_[i] < variables_) values[basis_[i]] = rhs_[i];
  }
  return values;
}

}  // namespace mcrpc
