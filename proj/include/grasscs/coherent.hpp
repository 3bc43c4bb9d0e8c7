#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <vector>

#include "grasscs/basis.hpp"
#include "grasscs/geometry.hpp"
#include "grasscs/poly.hpp"

namespace grasscs {

std::int64_t binomial(int n, int k);

// Wigner D polynomial matrix element for a general 2x2 complex matrix,
// labels stored as twice-values.  Throws on |q| > j or parity mismatch.
std::complex<double> wigner_d(int two_j, int two_qa, int two_qb, const GrassPoint& z);
PolyC4 wigner_d_poly(int two_j, int two_qa, int two_qb);  // in entry variables

// exact square of the basis-polynomial normalization prefactor
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;
    double value() const { return static_cast<double>(num) / static_cast<double>(den); }
};
Rational basis_prefactor_sq(int lambda, const BasisIndex& idx);

// phi^{j,m}_{qa,qb}(Z) = prefactor * det(Z)^m * D^j_{qa,qb}(Z), homogeneous
// of degree 2j + 2m in the matrix entries.
PolyC4 basis_polynomial(int lambda, const BasisIndex& idx);

// Cached per-lambda basis data (enumeration, polynomials, degrees).
struct IrrepBasis {
    int lambda = 0;
    std::vector<BasisIndex> indices;
    std::vector<PolyC4> polys;      // entry chart
    std::vector<int> degree;        // 2j + 2m
    std::vector<double> prefactor;  // sqrt of basis_prefactor_sq
};
const IrrepBasis& irrep_basis(int lambda);

// values of every basis polynomial at Z, canonical order
Eigen::VectorXcd evaluate_basis(int lambda, const GrassPoint& z);

// Bergmann kernel K_lambda(Z, W^dag) = det(sigma0 + Z W^dag)^lambda
std::complex<double> grass_kernel(int lambda, const GrassPoint& z, const Eigen::Matrix2cd& wdag);

// Coefficient vector over the canonical basis of H_lambda.
struct StateVector {
    int lambda = 1;
    Eigen::VectorXcd c;

    static StateVector basis_state(int lambda, const BasisIndex& idx);
    static StateVector lowest_weight(int lambda);   // (j,m,qa,qb) = (0,0,0,0)
    static StateVector highest_weight(int lambda);  // (0,lambda,0,0)
    // tolerates norm off by <= warn_tol silently; renormalizes otherwise
    static StateVector from_coeffs(int lambda, Eigen::VectorXcd coeffs);

    double norm() const { return c.norm(); }
    void require_normalized(double tol = 1e-12) const;
};

// |Z> expanded over the canonical basis; unit norm.
StateVector coherent_coeffs(int lambda, const GrassPoint& z);

// <Z'|Z> from the kernel closed form (log-domain for very large points)
std::complex<double> grass_overlap(int lambda, const GrassPoint& zp, const GrassPoint& z);

// Q_psi(Z) = |<Z|psi>|^2
double grass_husimi(const StateVector& psi, const GrassPoint& z);

}  // namespace grasscs
