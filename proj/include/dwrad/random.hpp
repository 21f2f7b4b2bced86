#pragma once

#include <cstdint>

#include "dwrad/core.hpp"

// Seeded generators. The same seed always yields the same matrix.
namespace dwrad::rnd {

/// Entries with independent standard normal real and imaginary parts.
Matrix gaussian_matrix(int rows, int cols, std::uint64_t seed, double magnitude = 1.0);
Vector gaussian_vector(int dim, std::uint64_t seed, double magnitude = 1.0);

/// Random Hermitian matrix projected to PSD by taking |lambda| + 0.1, then
/// the `deficit` smallest eigenvalues are set to zero (rank dim - deficit).
Matrix random_psd(int dim, int deficit, std::uint64_t seed, double magnitude = 1.0);

/// Haar-like unitary from the QR factorization of a Gaussian matrix.
Matrix random_unitary(int dim, std::uint64_t seed);

/// S = U [[X, 0], [Y, Z]] U^* in the (range, kernel) basis U of A, so S maps
/// N(A) into N(A) and admits an A-adjoint.
Operator random_ba_operator(const HermitianPSD& a, std::uint64_t seed, double magnitude = 1.0);

}  // namespace dwrad::rnd
