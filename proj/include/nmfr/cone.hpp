#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "nmfr/matrix.hpp"

namespace nmfr {

// cone(generators) = { sum_i lambda_i g_i : lambda >= 0 }. An empty generator
// list describes the cone {0}.
struct ConeByGenerators {
  std::size_t ambient_dim = 0;
  std::vector<RationalVector> generators;

  // ambient_dim x generators.size() matrix with the generators as columns.
  RationalMatrix generator_matrix() const;
};

// Coefficients (one per generator, each >= 1) whose weighted generator sum is
// exactly zero.
struct PositiveCombinationWitness {
  RationalVector coefficients;
  friend bool operator==(const PositiveCombinationWitness&, const PositiveCombinationWitness&) = default;
};

// Finds x with equalities * x = rhs and x >= lower_bounds, or nullopt when
// none exists. Exact phase-1 simplex with Bland's rule; the returned point is
// a deterministic function of the input.
std::optional<RationalVector> lp_feasible(const RationalMatrix& equalities, const RationalVector& rhs,
                                          const RationalVector& lower_bounds);

std::optional<PositiveCombinationWitness> zero_in_relative_interior(const ConeByGenerators& cone);

// Dimension of the largest linear subspace in the cone: the rank of the
// generators g with -g also in the cone.
std::size_t lineality_dimension(const ConeByGenerators& cone);

// Indices of generators whose negation lies in the cone.
std::vector<std::size_t> lineality_generators(const ConeByGenerators& cone);

bool member(const ConeByGenerators& cone, const RationalVector& v);

// Re-checks a witness with exact arithmetic: sizes match, every coefficient
// >= 1 and the combination is zero.
bool verify_witness(const ConeByGenerators& cone, const PositiveCombinationWitness& witness);

}  // namespace nmfr
