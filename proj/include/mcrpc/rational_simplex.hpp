#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "mcrpc/rational.hpp"

namespace mcrpc {

/// Dense tableau simplex over exact rationals:
///   maximize c.v  subject to  A v <= b,  v >= 0.
/// The first solve runs primal simplex from the slack basis, so the rows
/// present at that point need b >= 0. Rows added afterwards are expressed in
/// the current basis and repaired by dual simplex. Both phases use Bland's
/// rule.
class RationalSimplex {
 public:
  explicit RationalSimplex(std::vector<Rational> objective);

  std::size_t variable_count() const { return variables_; }
  std::size_t row_count() const { return rows_.size(); }

  void add_row(std::span<const Rational> coefficients, const Rational& rhs);

  /// Throws Error if the problem is unbounded or infeasible.
  void solve();

  const Rational& objective_value() const { return objective_value_; }
  std::vector<Rational> solution() const;
  std::size_t pivot_count() const { return pivots_; }

 private:
  void pivot(std::size_t row, std::size_t column);
  void run_primal();
  void run_dual();

  std::size_t variables_;
  std::vector<std::vector<Rational>> rows_;  // over structural then slack columns
  std::vector<Rational> rhs_;
  std::vector<std::size_t> basis_;
  std::vector<Rational> reduced_;  // z + sum reduced_j v_j = objective_value_
  Rational objective_value_ = 0;
  bool solved_once_ = false;
  std::size_t pivots_ = 0;
};

}  // namespace mcrpc
