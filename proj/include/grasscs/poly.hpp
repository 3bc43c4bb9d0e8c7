#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <map>
#include <vector>

namespace grasscs {

using cplx = std::complex<double>;

// Sparse polynomial in four complex variables with complex coefficients.
// The four variables are either the matrix entries (z11, z12, z21, z22) or
// the four-vector coordinates (z0, z1, z2, z3); the algebra is the same and
// callers track which chart a given polynomial lives in.
class PolyC4 {
  public:
    // exponents packed 8 bits per variable: e0 | e1<<8 | e2<<16 | e3<<24
    using Key = std::uint32_t;

    static Key key(int e0, int e1, int e2, int e3) {
        return static_cast<Key>(e0) | static_cast<Key>(e1) << 8 | static_cast<Key>(e2) << 16 |
               static_cast<Key>(e3) << 24;
    }
    static std::array<int, 4> exponents(Key k) {
        return {static_cast<int>(k & 0xff), static_cast<int>((k >> 8) & 0xff),
                static_cast<int>((k >> 16) & 0xff), static_cast<int>((k >> 24) & 0xff)};
    }
    static int degree_of(Key k) {
        auto e = exponents(k);
        return e[0] + e[1] + e[2] + e[3];
    }

    PolyC4() = default;

    static PolyC4 constant(cplx c);
    static PolyC4 variable(int var);  // x_var
    static PolyC4 monomial(Key k, cplx c);

    bool empty() const { return terms_.empty(); }
    const std::map<Key, cplx>& terms() const { return terms_; }

    void add_term(Key k, cplx c);

    PolyC4& operator+=(const PolyC4& o);
    PolyC4& operator-=(const PolyC4& o);
    PolyC4& operator*=(cplx s);
    friend PolyC4 operator+(PolyC4 a, const PolyC4& b) { return a += b; }
    friend PolyC4 operator-(PolyC4 a, const PolyC4& b) { return a -= b; }
    friend PolyC4 operator*(PolyC4 a, cplx s) { return a *= s; }
    friend PolyC4 operator*(cplx s, PolyC4 a) { return a *= s; }
    friend PolyC4 operator*(const PolyC4& a, const PolyC4& b) { return mul(a, b); }

    static PolyC4 mul(const PolyC4& a, const PolyC4& b);
    PolyC4 pow(int n) const;

    // coefficient-wise complex conjugate (the polynomial of conj coefficients)
    PolyC4 conj_coeffs() const;

    // d/dx_var
    PolyC4 derivative(int var) const;

    // multiply by x_var (degree guard at 255 is far beyond any use here)
    PolyC4 mul_variable(int var) const;

    cplx evaluate(const std::array<cplx, 4>& x) const;

    // Substitute x_i -> sum_j map[i][j] * y_j and expand.
    PolyC4 substitute_linear(const std::array<std::array<cplx, 4>, 4>& map) const;

    int total_degree() const;           // -1 for the zero polynomial
    bool is_homogeneous() const;
    double max_abs_coeff() const;

    // drop coefficients below rel_eps * max |coeff|
    void trim(double rel_eps = 1e-14);

    // split into homogeneous components keyed by degree
    std::map<int, PolyC4> homogeneous_parts() const;

  private:
    std::map<Key, cplx> terms_;
};

// Entry chart -> four-vector chart: z11 = z0+z3, z12 = z1-i z2,
// z21 = z1+i z2, z22 = z0-z3.
PolyC4 entries_to_fourvec(const PolyC4& p);
PolyC4 fourvec_to_entries(const PolyC4& p);

}  // namespace grasscs
