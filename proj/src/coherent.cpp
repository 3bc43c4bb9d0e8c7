#include "grasscs/coherent.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

namespace grasscs {

std::int64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    std::int64_t out = 1;
    for (int i = 1; i <= k; ++i) out = out * (n - k + i) / i;
    return out;
}

namespace {

std::int64_t factorial(int n) {
    std::int64_t out = 1;
    for (int i = 2; i <= n; ++i) out *= i;
    return out;
}

void check_wigner_labels(int two_j, int two_qa, int two_qb) {
    if (two_j < 0) throw std::invalid_argument("wigner_d: two_j must be >= 0");
    if (((two_qa ^ two_j) & 1) || ((two_qb ^ two_j) & 1))
        throw std::invalid_argument("wigner_d: parity mismatch between twice-q and twice-j");
    if (std::abs(two_qa) > two_j || std::abs(two_qb) > two_j)
        throw std::out_of_range("wigner_d: |q| exceeds j");
}

}  // namespace

PolyC4 wigner_d_poly(int two_j, int two_qa, int two_qb) {
    check_wigner_labels(two_j, two_qa, two_qb);
    const int j_plus_qa = (two_j + two_qa) / 2;
    const int j_minus_qa = (two_j - two_qa) / 2;
    const int j_plus_qb = (two_j + two_qb) / 2;
    const int j_minus_qb = (two_j - two_qb) / 2;
    const int qa_plus_qb = (two_qa + two_qb) / 2;

    const double pref = std::sqrt(static_cast<double>(factorial(j_plus_qa)) * static_cast<double>(factorial(j_minus_qa)) /
                                  (static_cast<double>(factorial(j_plus_qb)) * static_cast<double>(factorial(j_minus_qb))));

    PolyC4 out;
    const int k_lo = std::max(0, qa_plus_qb);
    const int k_hi = std::min(j_plus_qa, j_plus_qb);
    for (int k = k_lo; k <= k_hi; ++k) {
        const double coeff = pref * static_cast<double>(binomial(j_plus_qb, k)) *
                             static_cast<double>(binomial(j_minus_qb, k - qa_plus_qb));
        if (coeff == 0.0) continue;
        // z11^k z12^{j+qa-k} z21^{j+qb-k} z22^{k-qa-qb}
        out.add_term(PolyC4::key(k, j_plus_qa - k, j_plus_qb - k, k - qa_plus_qb), coeff);
    }
    return out;
}

std::complex<double> wigner_d(int two_j, int two_qa, int two_qb, const GrassPoint& z) {
    return wigner_d_poly(two_j, two_qa, two_qb).evaluate({z(0, 0), z(0, 1), z(1, 0), z(1, 1)});
}

Rational basis_prefactor_sq(int lambda, const BasisIndex& idx) {
    if (!basis_index_valid(lambda, idx)) throw std::invalid_argument("basis_prefactor_sq: invalid index");
    Rational r;
    r.num = static_cast<std::int64_t>(idx.two_j + 1) * binomial(lambda + 1, idx.two_j + idx.m + 1) *
            binomial(lambda + 1, idx.m);
    r.den = lambda + 1;
    return r;
}

PolyC4 basis_polynomial(int lambda, const BasisIndex& idx) {
    if (!basis_index_valid(lambda, idx)) throw std::invalid_argument("basis_polynomial: invalid index");
    // det(Z) = z11 z22 - z12 z21; det^0 is the constant 1 even at Z = 0
    PolyC4 det;
    det.add_term(PolyC4::key(1, 0, 0, 1), 1.0);
    det.add_term(PolyC4::key(0, 1, 1, 0), -1.0);
    PolyC4 p = det.pow(idx.m) * wigner_d_poly(idx.two_j, idx.two_qa, idx.two_qb);
    return p * cplx(std::sqrt(basis_prefactor_sq(lambda, idx).value()), 0.0);
}

const IrrepBasis& irrep_basis(int lambda) {
    static std::mutex mu;
    static std::map<int, IrrepBasis> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(lambda);
    if (it != cache.end()) return it->second;

    IrrepBasis b;
    b.lambda = lambda;
    b.indices = enumerate_basis(lambda);
    b.polys.reserve(b.indices.size());
    for (const auto& idx : b.indices) {
        b.polys.push_back(basis_polynomial(lambda, idx));
        b.degree.push_back(idx.two_j + 2 * idx.m);
        b.prefactor.push_back(std::sqrt(basis_prefactor_sq(lambda, idx).value()));
    }
    return cache.emplace(lambda, std::move(b)).first->second;
}

Eigen::VectorXcd evaluate_basis(int lambda, const GrassPoint& z) {
    const IrrepBasis& b = irrep_basis(lambda);
    const std::array<cplx, 4> x{z(0, 0), z(0, 1), z(1, 0), z(1, 1)};
    Eigen::VectorXcd out(static_cast<Eigen::Index>(b.polys.size()));
    for (std::size_t i = 0; i < b.polys.size(); ++i) out(static_cast<Eigen::Index>(i)) = b.polys[i].evaluate(x);
    return out;
}

std::complex<double> grass_kernel(int lambda, const GrassPoint& z, const Eigen::Matrix2cd& wdag) {
    const std::complex<double> d = (Eigen::Matrix2cd::Identity() + z * wdag).determinant();
    std::complex<double> out(1.0, 0.0);
    for (int i = 0; i < lambda; ++i) out *= d;
    return out;
}

StateVector StateVector::basis_state(int lambda, const BasisIndex& idx) {
    StateVector s;
    s.lambda = lambda;
    s.c = Eigen::VectorXcd::Zero(irrep_dim(lambda));
    s.c(basis_position(lambda, idx)) = 1.0;
    return s;
}

StateVector StateVector::lowest_weight(int lambda) { return basis_state(lambda, BasisIndex{0, 0, 0, 0}); }

StateVector StateVector::highest_weight(int lambda) { return basis_state(lambda, BasisIndex{0, lambda, 0, 0}); }

StateVector StateVector::from_coeffs(int lambda, Eigen::VectorXcd coeffs) {
    if (coeffs.size() != irrep_dim(lambda)) throw std::invalid_argument("StateVector: coefficient length != d_lambda");
    const double n = coeffs.norm();
    if (n == 0.0) throw std::invalid_argument("StateVector: zero vector");
    StateVector s;
    s.lambda = lambda;
    s.c = coeffs / n;
    return s;
}

void StateVector::require_normalized(double tol) const {
    if (std::abs(c.squaredNorm() - 1.0) > tol) throw std::invalid_argument("StateVector: not normalized");
}

StateVector coherent_coeffs(int lambda, const GrassPoint& z) {
    const double logf = log_det_one_plus_zzdag(z);
    Eigen::VectorXcd phi = evaluate_basis(lambda, z.conjugate());
    // c = phi(conj Z) / det(1 + Z Z^dag)^{lambda/2}; two half-exponent steps
    // keep the scale factor representable near the top of the chart
    const double half = std::exp(-0.25 * lambda * logf);
    StateVector s;
    s.lambda = lambda;
    s.c = (phi * half) * half;
    return s;
}

std::complex<double> grass_overlap(int lambda, const GrassPoint& zp, const GrassPoint& z) {
    const double fp = det_one_plus_zzdag(zp);
    const double f = det_one_plus_zzdag(z);
    const std::complex<double> num = (Eigen::Matrix2cd::Identity() + zp * z.adjoint()).determinant();
    if (fp <= 1e12 && f <= 1e12) {
        std::complex<double> kn(1.0, 0.0);
        for (int i = 0; i < lambda; ++i) kn *= num;
        return kn / (std::pow(fp, 0.5 * lambda) * std::pow(f, 0.5 * lambda));
    }
    // log-domain chart for very large points
    if (num == std::complex<double>(0.0, 0.0)) return {0.0, 0.0};
    const std::complex<double> lg =
        static_cast<double>(lambda) * std::log(num) -
        0.5 * lambda * (log_det_one_plus_zzdag(zp) + log_det_one_plus_zzdag(z));
    return std::exp(lg);
}

double grass_husimi(const StateVector& psi, const GrassPoint& z) {
    psi.require_normalized(1e-10);
    const int lambda = psi.lambda;
    const double f = det_one_plus_zzdag(z);
    if (f <= 1e12) {
        const std::complex<double> val = psi.c.conjugate().dot(coherent_coeffs(lambda, z).c);
        // <psi|Z> up to conjugation; only |.|^2 is needed
        return std::norm(val);
    }
    // scaled evaluation: phi(Z) = s^deg phi(Z/s) keeps every factor finite
    const IrrepBasis& b = irrep_basis(lambda);
    const double s = z.cwiseAbs().maxCoeff();
    const Eigen::VectorXcd phi_scaled = evaluate_basis(lambda, z / s);
    const double ls = std::log(s);
    std::complex<double> acc(0.0, 0.0);
    for (std::size_t i = 0; i < b.polys.size(); ++i) {
        const double rel = std::exp(ls * (b.degree[i] - 2 * lambda));  // <= 1
        acc += psi.c(static_cast<Eigen::Index>(i)) * phi_scaled(static_cast<Eigen::Index>(i)) * rel;
    }
    if (acc == std::complex<double>(0.0, 0.0)) return 0.0;
    const double logq = 2.0 * (2.0 * lambda * ls + std::log(std::abs(acc))) - lambda * log_det_one_plus_zzdag(z);
    return std::exp(logq);
}

}  // namespace grasscs
