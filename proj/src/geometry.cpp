#include "grasscs/geometry.hpp"

#include <cmath>
#include <stdexcept>

namespace grasscs {

namespace {
constexpr double kTwoPi = 6.283185307179586476925286766559;

double wrap_angle(double a) {
    a = std::fmod(a, kTwoPi);
    if (a < 0) a += kTwoPi;
    return a;
}
}  // namespace

Eigen::Matrix2cd layer_rotation(double theta, double phi) {
    const double c = std::cos(theta / 2.0), s = std::sin(theta / 2.0);
    const std::complex<double> ep = std::polar(1.0, phi);
    Eigen::Matrix2cd v;
    v << c, -s * ep, s * std::conj(ep), c;
    return v;
}

GrassPoint angles_to_matrix(const AngleParam& p) {
    const std::complex<double> xp = std::polar(std::tan(p.vartheta_plus / 2.0), p.beta_plus);
    const std::complex<double> xm = std::polar(std::tan(p.vartheta_minus / 2.0), p.beta_minus);
    Eigen::Matrix2cd xi = Eigen::Matrix2cd::Zero();
    xi(0, 0) = xp;
    xi(1, 1) = xm;
    return layer_rotation(p.theta_a, p.phi_a) * xi * layer_rotation(p.theta_b, p.phi_b).adjoint();
}

AngleParam matrix_to_angles(const GrassPoint& z) {
    if (!z.allFinite()) throw std::invalid_argument("matrix_to_angles: non-finite entry (infinite singular value)");

    Eigen::JacobiSVD<Eigen::Matrix2cd> svd(z, Eigen::ComputeFullU | Eigen::ComputeFullV);
    const Eigen::Vector2d sv = svd.singularValues();  // sv(0) >= sv(1) >= 0
    Eigen::Matrix2cd u = svd.matrixU();
    Eigen::Matrix2cd v = svd.matrixV();  // Z = U * diag(sv) * V^dag

    // Transfer the diagonal phases of V into U so that V ends up with real
    // nonnegative equal diagonal entries (then unitarity forces the layer
    // rotation form).  Guard the fully off-diagonal case |V11| = 0.
    std::complex<double> d0(1.0, 0.0), d1(1.0, 0.0);
    if (std::abs(v(0, 0)) > 1e-300) d0 = v(0, 0) / std::abs(v(0, 0));
    if (std::abs(v(1, 1)) > 1e-300) d1 = v(1, 1) / std::abs(v(1, 1));
    v.col(0) *= std::conj(d0);
    v.col(1) *= std::conj(d1);
    u.col(0) *= std::conj(d0);
    u.col(1) *= std::conj(d1);

    // Now pull the singular-factor phases out of U the same way.
    std::complex<double> bp(1.0, 0.0), bm(1.0, 0.0);
    if (std::abs(u(0, 0)) > 1e-300) bp = u(0, 0) / std::abs(u(0, 0));
    if (std::abs(u(1, 1)) > 1e-300) bm = u(1, 1) / std::abs(u(1, 1));
    u.col(0) *= std::conj(bp);
    u.col(1) *= std::conj(bm);

    AngleParam p;
    p.vartheta_plus = 2.0 * std::atan(sv(0));
    p.vartheta_minus = 2.0 * std::atan(sv(1));
    p.beta_plus = wrap_angle(std::arg(bp));
    p.beta_minus = wrap_angle(std::arg(bm));

    auto to_layer_angles = [](const Eigen::Matrix2cd& w, double& theta, double& phi) {
        const double c = std::min(1.0, std::max(0.0, w(0, 0).real()));
        theta = 2.0 * std::acos(c);
        // V_l(0,1) = -sin(theta/2) e^{i phi}
        phi = (std::abs(w(0, 1)) > 1e-300) ? wrap_angle(std::arg(-w(0, 1))) : 0.0;
    };
    to_layer_angles(u, p.theta_a, p.phi_a);
    to_layer_angles(v, p.theta_b, p.phi_b);
    return p;
}

std::array<std::complex<double>, 4> matrix_to_fourvec(const GrassPoint& z) {
    const std::complex<double> i(0.0, 1.0);
    return {0.5 * (z(0, 0) + z(1, 1)), 0.5 * (z(0, 1) + z(1, 0)), 0.5 * i * (z(0, 1) - z(1, 0)),
            0.5 * (z(0, 0) - z(1, 1))};
}

GrassPoint fourvec_to_matrix(const std::array<std::complex<double>, 4>& v) {
    const std::complex<double> i(0.0, 1.0);
    GrassPoint z;
    z << v[0] + v[3], v[1] - i * v[2], v[1] + i * v[2], v[0] - v[3];
    return z;
}

double det_one_plus_zzdag(const GrassPoint& z) {
    // det(I + Z Z^dag) = 1 + tr(Z Z^dag) + |det Z|^2
    const double tr = z.squaredNorm();
    const double dd = std::norm(z.determinant());
    return 1.0 + tr + dd;
}

double log_det_one_plus_zzdag(const GrassPoint& z) {
    const double tr = z.squaredNorm();
    const double dd = std::norm(z.determinant());
    return std::log1p(tr + dd);
}

}  // namespace grasscs
