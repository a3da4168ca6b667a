#include "zariski/lp.hpp"

#include <cstddef>
#include <limits>
#include <utility>

namespace zariski {

namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

// Dictionary-form simplex over bounded variables. Real columns come from the
// caller; one artificial column per row is appended so the initial basis is
// always available. Basic columns are kept as identity columns of tab_ by the
// pivot row operations.
class BoundedSimplex {
 public:
  enum class Status { Basic, AtLower, AtUpper, Free, Fixed };
  enum class RunResult { Optimal, Unbounded };

  BoundedSimplex(const RationalMatrix& rows, const RationalVector& rhs,
                 std::vector<std::optional<Rational>> lower,
                 std::vector<std::optional<Rational>> upper)
      : m_(rows.rows()),
        real_(rows.cols()),
        total_(rows.cols() + rows.rows()),
        tab_(rows.rows(), rows.cols() + rows.rows()),
        beta_(rows.rows()),
        lower_(std::move(lower)),
        upper_(std::move(upper)) {
    value_.assign(total_, Rational(0));
    status_.assign(total_, Status::Free);
    basic_.assign(m_, kNone);

    for (std::size_t j = 0; j < real_; ++j) {
      if (lower_[j] && upper_[j] && *lower_[j] > *upper_[j]) {
        throw MalformedProgram("lower bound exceeds upper bound");
      }
      if (lower_[j] && upper_[j] && *lower_[j] == *upper_[j]) {
        status_[j] = Status::Fixed;
        value_[j] = *lower_[j];
      } else if (lower_[j]) {
        status_[j] = Status::AtLower;
        value_[j] = *lower_[j];
      } else if (upper_[j]) {
        status_[j] = Status::AtUpper;
        value_[j] = *upper_[j];
      }  // else: free, resting at zero
    }

    // Orient each row so its artificial starts basic at a nonnegative value.
    for (std::size_t i = 0; i < m_; ++i) {
      Rational residual = rhs[i];
      for (std::size_t j = 0; j < real_; ++j) residual -= rows(i, j) * value_[j];
      const bool negate = residual < 0;
      for (std::size_t j = 0; j < real_; ++j) {
        tab_(i, j) = negate ? -rows(i, j) : rows(i, j);
      }
      beta_[i] = negate ? -rhs[i] : rhs[i];

      const std::size_t artificial = real_ + i;
      tab_(i, artificial) = 1;
      lower_.push_back(Rational(0));
      upper_.push_back(std::nullopt);
      status_[artificial] = Status::Basic;
      basic_[i] = artificial;
      value_[artificial] = negate ? -residual : residual;
    }
  }

  // Drives the artificial columns to zero. False means the real constraints
  // have no point within bounds. Artificials are pinned afterwards so later
  // phases cannot resurrect them.
  bool find_feasible() {
    bool already_clean = true;
    for (std::size_t a = real_; a < total_; ++a) {
      if (value_[a] != 0) already_clean = false;
    }
    if (!already_clean) {
      RationalVector penalty(total_);
      for (std::size_t a = real_; a < total_; ++a) penalty[a] = -1;
      if (run(penalty) == RunResult::Unbounded) {
        throw InternalError("phase 1 objective is bounded by construction");
      }
      for (std::size_t a = real_; a < total_; ++a) {
        if (value_[a] != 0) return false;
      }
    }
    for (std::size_t a = real_; a < total_; ++a) {
      upper_[a] = Rational(0);
      if (status_[a] != Status::Basic) status_[a] = Status::Fixed;
    }
    return true;
  }

  /** objective must span the real columns only. */
  RunResult maximize_objective(const RationalVector& objective) {
    RationalVector padded(total_);
    for (std::size_t j = 0; j < real_; ++j) padded[j] = objective[j];
    return run(padded);
  }

  const Rational& value(std::size_t column) const { return value_[column]; }

 private:
  Rational reduced_cost(const RationalVector& c, std::size_t j) const {
    Rational d = c[j];
    for (std::size_t i = 0; i < m_; ++i) {
      if (c[basic_[i]] != 0 && tab_(i, j) != 0) d -= c[basic_[i]] * tab_(i, j);
    }
    return d;
  }

  void refresh_basic_values() {
    for (std::size_t i = 0; i < m_; ++i) {
      Rational v = beta_[i];
      for (std::size_t j = 0; j < total_; ++j) {
        if (status_[j] != Status::Basic && value_[j] != 0 && tab_(i, j) != 0) {
          v -= tab_(i, j) * value_[j];
        }
      }
      value_[basic_[i]] = v;
    }
  }

  void pivot(std::size_t row, std::size_t entering) {
    const Rational pivot_value = tab_(row, entering);
    for (std::size_t j = 0; j < total_; ++j) tab_(row, j) /= pivot_value;
    beta_[row] /= pivot_value;
    for (std::size_t i = 0; i < m_; ++i) {
      if (i == row || tab_(i, entering) == 0) continue;
      const Rational factor = tab_(i, entering);
      for (std::size_t j = 0; j < total_; ++j) tab_(i, j) -= factor * tab_(row, j);
      beta_[i] -= factor * beta_[row];
    }
  }

  RunResult run(const RationalVector& c) {
    for (;;) {
      // Bland: the first eligible column enters.
      std::size_t entering = kNone;
      int direction = 0;
      for (std::size_t j = 0; j < total_ && entering == kNone; ++j) {
        switch (status_[j]) {
          case Status::Basic:
          case Status::Fixed:
            break;
          case Status::AtLower: {
            if (reduced_cost(c, j) > 0) {
              entering = j;
              direction = 1;
            }
            break;
          }
          case Status::AtUpper: {
            if (reduced_cost(c, j) < 0) {
              entering = j;
              direction = -1;
            }
            break;
          }
          case Status::Free: {
            const Rational d = reduced_cost(c, j);
            if (d != 0) {
              entering = j;
              direction = d > 0 ? 1 : -1;
            }
            break;
          }
        }
      }
      if (entering == kNone) return RunResult::Optimal;

      // Ratio test. The entering variable's own far bound competes with every
      // basic variable; ties resolve to the smallest variable index, again
      // Bland, so degenerate pivots cannot cycle.
      bool blocked = false;
      Rational step;
      std::size_t leaving_var = kNone;
      std::size_t leaving_row = kNone;
      bool leaves_at_upper = false;

      const auto& far_bound = direction > 0 ? upper_[entering] : lower_[entering];
      if (far_bound) {
        blocked = true;
        step = direction > 0 ? *far_bound - value_[entering]
                             : value_[entering] - *far_bound;
        leaving_var = entering;
      }
      for (std::size_t i = 0; i < m_; ++i) {
        if (tab_(i, entering) == 0) continue;
        const Rational delta =
            direction > 0 ? tab_(i, entering) : Rational(-tab_(i, entering));
        const std::size_t candidate = basic_[i];
        Rational t;
        bool hits_upper;
        if (delta > 0) {  // candidate moves down toward its lower bound
          if (!lower_[candidate]) continue;
          t = (value_[candidate] - *lower_[candidate]) / delta;
          hits_upper = false;
        } else {  // candidate moves up toward its upper bound
          if (!upper_[candidate]) continue;
          t = (*upper_[candidate] - value_[candidate]) / -delta;
          hits_upper = true;
        }
        if (!blocked || t < step || (t == step && candidate < leaving_var)) {
          blocked = true;
          step = t;
          leaving_var = candidate;
          leaving_row = i;
          leaves_at_upper = hits_upper;
        }
      }
      if (!blocked) return RunResult::Unbounded;

      if (leaving_var == entering) {
        // Bound flip: the entering variable crosses to its far bound.
        value_[entering] += direction > 0 ? step : -step;
        status_[entering] = direction > 0 ? Status::AtUpper : Status::AtLower;
        refresh_basic_values();
        continue;
      }

      pivot(leaving_row, entering);
      if (lower_[leaving_var] && upper_[leaving_var] &&
          *lower_[leaving_var] == *upper_[leaving_var]) {
        status_[leaving_var] = Status::Fixed;
      } else {
        status_[leaving_var] = leaves_at_upper ? Status::AtUpper : Status::AtLower;
      }
      value_[leaving_var] =
          leaves_at_upper ? *upper_[leaving_var] : *lower_[leaving_var];
      status_[entering] = Status::Basic;
      basic_[leaving_row] = entering;
      refresh_basic_values();
    }
  }

  std::size_t m_;
  std::size_t real_;
  std::size_t total_;
  RationalMatrix tab_;
  RationalVector beta_;
  std::vector<std::optional<Rational>> lower_;
  std::vector<std::optional<Rational>> upper_;
  std::vector<Rational> value_;
  std::vector<Status> status_;
  std::vector<std::size_t> basic_;
};

}  // namespace

LpResult maximize(const LinearProgram& lp) {
  const std::size_t n = lp.objective.size();
  const std::size_t m = lp.constraints.rows();
  if (lp.constraints.cols() != n && !(m == 0 && lp.constraints.cols() == 0)) {
    throw MalformedProgram("constraint columns do not match the objective length");
  }
  if (lp.rhs.size() != m) throw MalformedProgram("right-hand side length mismatch");
  if (lp.bounds.size() != n) throw MalformedProgram("one bound pair per variable required");

  // Columns: the n structural variables, then one surplus per row turning
  // A x >= b into A x - s = b with s >= 0.
  RationalMatrix rows(m, n + m);
  std::vector<std::optional<Rational>> lower(n + m), upper(n + m);
  for (std::size_t j = 0; j < n; ++j) {
    lower[j] = lp.bounds[j].lower;
    upper[j] = lp.bounds[j].upper;
  }
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) rows(i, j) = lp.constraints(i, j);
    rows(i, n + i) = -1;
    lower[n + i] = Rational(0);
  }

  BoundedSimplex simplex(rows, lp.rhs, std::move(lower), std::move(upper));
  if (!simplex.find_feasible()) return LpResult{LpStatus::Infeasible, {}, {}};

  RationalVector objective(n + m);
  for (std::size_t j = 0; j < n; ++j) objective[j] = lp.objective[j];
  if (simplex.maximize_objective(objective) == BoundedSimplex::RunResult::Unbounded) {
    return LpResult{LpStatus::Unbounded, {}, {}};
  }

  RationalVector point(n);
  for (std::size_t j = 0; j < n; ++j) point[j] = simplex.value(j);
  return LpResult{LpStatus::Optimal, point, dot(lp.objective, point)};
}

std::optional<RationalVector> feasible_point(const RationalMatrix& equalities,
                                             const RationalVector& rhs) {
  if (equalities.rows() != rhs.size()) {
    throw MalformedProgram("right-hand side length mismatch");
  }
  const std::size_t n = equalities.cols();
  std::vector<std::optional<Rational>> lower(n, Rational(0));
  std::vector<std::optional<Rational>> upper(n);

  BoundedSimplex simplex(equalities, rhs, std::move(lower), std::move(upper));
  if (!simplex.find_feasible()) return std::nullopt;

  RationalVector point(n);
  for (std::size_t j = 0; j < n; ++j) point[j] = simplex.value(j);
  return point;
}

}  // namespace zariski
