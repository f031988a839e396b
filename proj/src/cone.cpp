#include "nmfr/cone.hpp"

#include <string>
#include <utility>

#include "nmfr/errors.hpp"

namespace nmfr {
namespace {

// Dense phase-1 tableau for  E y = b, y >= 0, with b >= 0 and one artificial
// variable per row. Column layout: [structural | artificial | rhs].
class PhaseOneTableau {
 public:
  PhaseOneTableau(const RationalMatrix& e, RationalVector b)
      : rows_(e.rows()), structural_(e.cols()), width_(e.cols() + e.rows() + 1), cells_(rows_ * width_),
        cost_(width_), basis_(rows_) {
    for (std::size_t i = 0; i < rows_; ++i) {
      const bool flip = b[i] < 0;
      for (std::size_t j = 0; j < structural_; ++j) at(i, j) = flip ? Rational(-e(i, j)) : e(i, j);
      at(i, structural_ + i) = 1;
      at(i, width_ - 1) = flip ? Rational(-b[i]) : b[i];
      basis_[i] = structural_ + i;
    }
    // Reduced costs of the phase-1 objective (sum of artificials).
    for (std::size_t j = 0; j < width_; ++j) {
      if (j >= structural_ && j + 1 < width_) continue;
      Rational s = 0;
      for (std::size_t i = 0; i < rows_; ++i) s += at(i, j);
      cost_[j] = -s;
    }
  }

  // Runs Bland's-rule pivots to optimality. Returns the optimal phase-1 value.
  Rational solve() {
    for (;;) {
      std::size_t entering = width_;
      for (std::size_t j = 0; j + 1 < width_; ++j) {
        if (cost_[j] < 0) {
          entering = j;
          break;
        }
      }
      if (entering == width_) break;

      std::size_t leaving = rows_;
      Rational best_ratio;
      for (std::size_t i = 0; i < rows_; ++i) {
        if (at(i, entering) <= 0) continue;
        Rational ratio = at(i, width_ - 1) / at(i, entering);
        if (leaving == rows_ || ratio < best_ratio || (ratio == best_ratio && basis_[i] < basis_[leaving])) {
          leaving = i;
          best_ratio = std::move(ratio);
        }
      }
      // Phase 1 is bounded below by zero, so a leaving row always exists.
      pivot(leaving, entering);
    }
    return -cost_[width_ - 1];
  }

  RationalVector structural_solution() const {
    RationalVector y(structural_);
    for (std::size_t i = 0; i < rows_; ++i) {
      if (basis_[i] < structural_) y[basis_[i]] = at(i, width_ - 1);
    }
    return y;
  }

 private:
  Rational& at(std::size_t i, std::size_t j) { return cells_[i * width_ + j]; }
  const Rational& at(std::size_t i, std::size_t j) const { return cells_[i * width_ + j]; }

  void pivot(std::size_t row, std::size_t col) {
    const Rational inv = 1 / at(row, col);
    for (std::size_t j = 0; j < width_; ++j) {
      if (at(row, j) != 0) at(row, j) *= inv;
    }
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == row || at(i, col) == 0) continue;
      const Rational factor = at(i, col);
      for (std::size_t j = 0; j < width_; ++j) {
        if (at(row, j) != 0) at(i, j) -= factor * at(row, j);
      }
    }
    if (cost_[col] != 0) {
      const Rational factor = cost_[col];
      for (std::size_t j = 0; j < width_; ++j) {
        if (at(row, j) != 0) cost_[j] -= factor * at(row, j);
      }
    }
    basis_[row] = col;
  }

  std::size_t rows_;
  std::size_t structural_;
  std::size_t width_;
  std::vector<Rational> cells_;
  RationalVector cost_;
  std::vector<std::size_t> basis_;
};


}  // namespace

RationalMatrix ConeByGenerators::generator_matrix() const {
  return RationalMatrix::from_columns(ambient_dim, generators);
}

std::optional<RationalVector> lp_feasible(const RationalMatrix& equalities, const RationalVector& rhs,
                                          const RationalVector& lower_bounds) {
  if (equalities.rows() != rhs.size() || equalities.cols() != lower_bounds.size()) {
    throw DimensionMismatch("lp_feasible: system is " + std::to_string(equalities.rows()) + "x" +
                            std::to_string(equalities.cols()) + ", rhs " + std::to_string(rhs.size()) +
                            ", bounds " + std::to_string(lower_bounds.size()));
  }
  // Shift x = lower + y so that y >= 0.
  RationalVector shifted = rhs;
  const RationalVector offset = matvec(equalities, lower_bounds);
  for (std::size_t i = 0; i < shifted.size(); ++i) shifted[i] -= offset[i];

  PhaseOneTableau tableau(equalities, std::move(shifted));
  if (tableau.solve() != 0) return std::nullopt;

  RationalVector x = tableau.structural_solution();
  for (std::size_t j = 0; j < x.size(); ++j) x[j] += lower_bounds[j];
  return x;
}

std::optional<PositiveCombinationWitness> zero_in_relative_interior(const ConeByGenerators& cone) {
  if (cone.generators.empty()) return PositiveCombinationWitness{};
  const RationalMatrix g = cone.generator_matrix();
  auto x = lp_feasible(g, RationalVector(cone.ambient_dim), RationalVector(cone.generators.size(), Rational(1)));
  if (!x) return std::nullopt;
  return PositiveCombinationWitness{std::move(*x)};
}

bool member(const ConeByGenerators& cone, const RationalVector& v) {
  if (v.size() != cone.ambient_dim) {
    throw DimensionMismatch("member: vector length " + std::to_string(v.size()) + " != ambient dimension " +
                            std::to_string(cone.ambient_dim));
  }
  if (cone.generators.empty()) return is_zero(v);
  return lp_feasible(cone.generator_matrix(), v, RationalVector(cone.generators.size())).has_value();
}

std::vector<std::size_t> lineality_generators(const ConeByGenerators& cone) {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < cone.generators.size(); ++k) {
    RationalVector neg = cone.generators[k];
    for (auto& x : neg) x = -x;
    if (member(cone, neg)) out.push_back(k);
  }
  return out;
}

std::size_t lineality_dimension(const ConeByGenerators& cone) {
  const auto idx = lineality_generators(cone);
  if (idx.empty()) return 0;
  std::vector<RationalVector> cols;
  cols.reserve(idx.size());
  for (std::size_t k : idx) cols.push_back(cone.generators[k]);
  return rank(RationalMatrix::from_columns(cone.ambient_dim, cols));
}

bool verify_witness(const ConeByGenerators& cone, const PositiveCombinationWitness& witness) {
  if (witness.coefficients.size() != cone.generators.size()) return false;
  RationalVector sum(cone.ambient_dim);
  for (std::size_t k = 0; k < cone.generators.size(); ++k) {
    if (witness.coefficients[k] < 1) return false;
    if (cone.generators[k].size() != cone.ambient_dim) return false;
    for (std::size_t i = 0; i < cone.ambient_dim; ++i) sum[i] += witness.coefficients[k] * cone.generators[k][i];
  }
  return is_zero(sum);
}

}  // namespace nmfr
