#pragma once

#include <Eigen/Dense>
#include <array>
#include <complex>

namespace grasscs {

// A point Z of the Grassmannian G2 is a plain 2x2 complex matrix.
using GrassPoint = Eigen::Matrix2cd;

// Eight-angle form Z = V_a * diag(xi_+, xi_-) * V_b^dag with
// xi_pm = tan(vartheta_pm/2) e^{i beta_pm} and
// V_l = [[cos(t/2), -sin(t/2) e^{i phi}], [sin(t/2) e^{-i phi}, cos(t/2)]].
struct AngleParam {
    double theta_a = 0.0;
    double phi_a = 0.0;
    double theta_b = 0.0;
    double phi_b = 0.0;
    double vartheta_plus = 0.0;
    double beta_plus = 0.0;
    double vartheta_minus = 0.0;
    double beta_minus = 0.0;
};

Eigen::Matrix2cd layer_rotation(double theta, double phi);

GrassPoint angles_to_matrix(const AngleParam& p);

// Inverse via SVD.  Convention: vartheta_plus >= vartheta_minus, the
// singular-factor phases go to beta_pm, and V_a, V_b carry real nonnegative
// diagonals.  Throws std::invalid_argument on non-finite input.
AngleParam matrix_to_angles(const GrassPoint& z);

// Z = z^mu sigma_mu decomposition: z0 = (z11+z22)/2, z1 = (z12+z21)/2,
// z2 = i(z12-z21)/2, z3 = (z11-z22)/2.
std::array<std::complex<double>, 4> matrix_to_fourvec(const GrassPoint& z);
GrassPoint fourvec_to_matrix(const std::array<std::complex<double>, 4>& v);

// det(sigma0 + Z Z^dag), always real >= 1
double det_one_plus_zzdag(const GrassPoint& z);

// log of the same, safe for very large entries
double log_det_one_plus_zzdag(const GrassPoint& z);

}  // namespace grasscs
