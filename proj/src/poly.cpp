#include "grasscs/poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace grasscs {

PolyC4 PolyC4::constant(cplx c) {
    PolyC4 p;
    if (c != cplx(0.0, 0.0)) p.terms_[key(0, 0, 0, 0)] = c;
    return p;
}

PolyC4 PolyC4::variable(int var) {
    PolyC4 p;
    int e[4] = {0, 0, 0, 0};
    e[var] = 1;
    p.terms_[key(e[0], e[1], e[2], e[3])] = cplx(1.0, 0.0);
    return p;
}

PolyC4 PolyC4::monomial(Key k, cplx c) {
    PolyC4 p;
    if (c != cplx(0.0, 0.0)) p.terms_[k] = c;
    return p;
}

void PolyC4::add_term(Key k, cplx c) {
    auto it = terms_.find(k);
    if (it == terms_.end()) {
        if (c != cplx(0.0, 0.0)) terms_[k] = c;
    } else {
        it->second += c;
        if (it->second == cplx(0.0, 0.0)) terms_.erase(it);
    }
}

PolyC4& PolyC4::operator+=(const PolyC4& o) {
    for (const auto& [k, c] : o.terms_) add_term(k, c);
    return *this;
}

PolyC4& PolyC4::operator-=(const PolyC4& o) {
    for (const auto& [k, c] : o.terms_) add_term(k, -c);
    return *this;
}

PolyC4& PolyC4::operator*=(cplx s) {
    if (s == cplx(0.0, 0.0)) {
        terms_.clear();
        return *this;
    }
    for (auto& [k, c] : terms_) c *= s;
    return *this;
}

PolyC4 PolyC4::mul(const PolyC4& a, const PolyC4& b) {
    PolyC4 out;
    for (const auto& [ka, ca] : a.terms_) {
        for (const auto& [kb, cb] : b.terms_) {
            out.add_term(ka + kb, ca * cb);  // exponent fields add without carry for degrees < 256
        }
    }
    return out;
}

PolyC4 PolyC4::pow(int n) const {
    if (n < 0) throw std::invalid_argument("PolyC4::pow: negative exponent");
    PolyC4 out = constant(1.0);
    PolyC4 base = *this;
    while (n > 0) {
        if (n & 1) out = mul(out, base);
        base = (n > 1) ? mul(base, base) : base;
        n >>= 1;
    }
    return out;
}

PolyC4 PolyC4::conj_coeffs() const {
    PolyC4 out;
    for (const auto& [k, c] : terms_) out.terms_[k] = std::conj(c);
    return out;
}

PolyC4 PolyC4::derivative(int var) const {
    PolyC4 out;
    const int shift = 8 * var;
    for (const auto& [k, c] : terms_) {
        const int e = static_cast<int>((k >> shift) & 0xff);
        if (e == 0) continue;
        out.add_term(k - (Key(1) << shift), c * static_cast<double>(e));
    }
    return out;
}

PolyC4 PolyC4::mul_variable(int var) const {
    PolyC4 out;
    const int shift = 8 * var;
    for (const auto& [k, c] : terms_) out.add_term(k + (Key(1) << shift), c);
    return out;
}

cplx PolyC4::evaluate(const std::array<cplx, 4>& x) const {
    // power tables keep repeated exponents cheap
    int maxe[4] = {0, 0, 0, 0};
    for (const auto& [k, c] : terms_) {
        auto e = exponents(k);
        for (int v = 0; v < 4; ++v) maxe[v] = std::max(maxe[v], e[v]);
    }
    std::array<std::vector<cplx>, 4> pw;
    for (int v = 0; v < 4; ++v) {
        pw[v].resize(static_cast<std::size_t>(maxe[v]) + 1);
        pw[v][0] = cplx(1.0, 0.0);
        for (int e = 1; e <= maxe[v]; ++e) pw[v][e] = pw[v][e - 1] * x[v];
    }
    cplx acc(0.0, 0.0);
    for (const auto& [k, c] : terms_) {
        auto e = exponents(k);
        acc += c * pw[0][e[0]] * pw[1][e[1]] * pw[2][e[2]] * pw[3][e[3]];
    }
    return acc;
}

PolyC4 PolyC4::substitute_linear(const std::array<std::array<cplx, 4>, 4>& map) const {
    std::array<PolyC4, 4> forms;
    for (int v = 0; v < 4; ++v) {
        PolyC4 f;
        for (int j = 0; j < 4; ++j)
            if (map[v][j] != cplx(0.0, 0.0)) f += map[v][j] * PolyC4::variable(j);
        forms[v] = f;
    }
    // cache powers of each linear form as needed
    std::array<std::vector<PolyC4>, 4> pw;
    for (int v = 0; v < 4; ++v) pw[v].push_back(PolyC4::constant(1.0));
    auto power = [&](int v, int e) -> const PolyC4& {
        while (static_cast<int>(pw[v].size()) <= e) pw[v].push_back(mul(pw[v].back(), forms[v]));
        return pw[v][static_cast<std::size_t>(e)];
    };
    PolyC4 out;
    for (const auto& [k, c] : terms_) {
        auto e = exponents(k);
        PolyC4 term = PolyC4::constant(c);
        for (int v = 0; v < 4; ++v)
            if (e[v] > 0) term = mul(term, power(v, e[v]));
        out += term;
    }
    out.trim();
    return out;
}

int PolyC4::total_degree() const {
    int d = -1;
    for (const auto& [k, c] : terms_) d = std::max(d, degree_of(k));
    return d;
}

bool PolyC4::is_homogeneous() const {
    int d = -1;
    for (const auto& [k, c] : terms_) {
        if (d < 0)
            d = degree_of(k);
        else if (degree_of(k) != d)
            return false;
    }
    return true;
}

double PolyC4::max_abs_coeff() const {
    double m = 0.0;
    for (const auto& [k, c] : terms_) m = std::max(m, std::abs(c));
    return m;
}

void PolyC4::trim(double rel_eps) {
    const double cutoff = rel_eps * max_abs_coeff();
    for (auto it = terms_.begin(); it != terms_.end();) {
        if (std::abs(it->second) <= cutoff)
            it = terms_.erase(it);
        else
            ++it;
    }
}

std::map<int, PolyC4> PolyC4::homogeneous_parts() const {
    std::map<int, PolyC4> parts;
    for (const auto& [k, c] : terms_) parts[degree_of(k)].add_term(k, c);
    return parts;
}

PolyC4 entries_to_fourvec(const PolyC4& p) {
    // (z11, z12, z21, z22) in terms of (z0, z1, z2, z3)
    const cplx i(0.0, 1.0);
    return p.substitute_linear({{
        {{1.0, 0.0, 0.0, 1.0}},   // z11 = z0 + z3
        {{0.0, 1.0, -i, 0.0}},    // z12 = z1 - i z2
        {{0.0, 1.0, i, 0.0}},     // z21 = z1 + i z2
        {{1.0, 0.0, 0.0, -1.0}},  // z22 = z0 - z3
    }});
}

PolyC4 fourvec_to_entries(const PolyC4& p) {
    const cplx ih(0.0, 0.5);
    return p.substitute_linear({{
        {{0.5, 0.0, 0.0, 0.5}},    // z0 = (z11 + z22)/2
        {{0.0, 0.5, 0.5, 0.0}},    // z1 = (z12 + z21)/2
        {{0.0, ih, -ih, 0.0}},     // z2 = i(z12 - z21)/2
        {{0.5, 0.0, 0.0, -0.5}},   // z3 = (z11 - z22)/2
    }});
}

}  // namespace grasscs
