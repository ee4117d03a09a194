#pragma once

// q-combinatorics over finite fields: Gaussian binomials, the Moebius value of
// the subspace lattice, Cauchy's product polynomial, and partition counts by
// greatest part.

#include <cstdint>
#include <vector>

#include "brzeta/series.hpp"

namespace brzeta::qcomb {

/// Number of d-dimensional subspaces of F_q^m (0 when d is outside [0, m]).
Integer gaussian_binomial(std::int64_t m, std::int64_t d, std::uint64_t q);

/// mu(X, V) on the subspace lattice when dim(V/X) = d: (-1)^d q^(d(d-1)/2).
Integer subspace_moebius(std::uint32_t d, std::uint64_t q);

/// Coefficients of prod_{j<m} (1 - q^j z), lowest degree first.
std::vector<Integer> cauchy_poly(std::uint32_t m, std::uint64_t q);

/// p(i, j): partitions of i whose greatest part is j.
Integer partition_count(std::uint32_t i, std::uint32_t j);

/// Table of prod_{n>=1} (1 - w z^n)^{-1}: entry [i][j] is the coefficient of
/// z^i w^j for i, j <= bound.
std::vector<std::vector<Integer>> euler_coeffs(std::uint32_t bound);

} // namespace brzeta::qcomb
