#pragma once

#include <cstdint>
#include <functional>

#include "dwrad/types.hpp"

// Brute-force reference computations that share no code with the library:
// the unit A-sphere is parametrized from an SVD of A and every quantity is
// evaluated in the full space with A itself.
namespace oracle {

using dwrad::Complex;
using dwrad::Matrix;
using dwrad::Vector;

/// Columns U_r Sigma_r^{-1/2}: maps the unit sphere of C^r onto the unit
/// A-sphere modulo N(A).
Matrix sphere_map(const Matrix& a, double tol = 1e-10);

/// Minimum-norm least-squares solution of A Z = S^* A.
Matrix adjoint_lsq(const Matrix& a, const Matrix& s);

Complex inner_a(const Matrix& a, const Vector& x, const Vector& z);
double norm_a(const Matrix& a, const Vector& z);

/// |<Sz,z>_A|^2 + ||Sz||_A^4
double dw_objective(const Matrix& a, const Matrix& s, const Vector& z);

/// Max (or min) of g over y = (cos t, e^{i phi} sin t) in C^2: a dense
/// (t, phi) grid, then zoom refinement of the best cells.
double two_angle_max(const std::function<double(const Vector&)>& g, int nt = 181, int np = 360);
double two_angle_min(const std::function<double(const Vector&)>& g, int nt = 181, int np = 360);

/// Rank of A must be 1 or 2.
double dw_grid(const Matrix& a, const Matrix& s);
double omega_grid(const Matrix& a, const Matrix& s);
double crawford_grid(const Matrix& a, const Matrix& s);

/// Sampled maximum of sqrt(dw_objective) over random unit A-vectors; a lower
/// bound for any rank.
double dw_sampled(const Matrix& a, const Matrix& s, int samples, std::uint64_t seed);
double omega_sampled(const Matrix& a, const Matrix& s, int samples, std::uint64_t seed);

/// sup ||Sz||_A over the unit A-sphere, from the Hermitian eigenproblem of
/// the pencil in sphere_map coordinates.
double norm_pencil(const Matrix& a, const Matrix& s);

}  // namespace oracle
