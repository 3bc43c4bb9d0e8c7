#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace grasscs {

// Label of the two-row [lambda,lambda] irrep of U(4).
struct IrrepLabel {
    int lambda = 1;

    explicit IrrepLabel(int lam) : lambda(lam) {
        if (lam < 1) throw std::invalid_argument("IrrepLabel: lambda must be >= 1 (trivial irrep excluded)");
    }
};

// d_lambda = (lambda+1)(lambda+2)^2(lambda+3)/12
inline std::int64_t irrep_dim(int lambda) {
    if (lambda < 1) throw std::invalid_argument("irrep_dim: lambda must be >= 1");
    const std::int64_t l = lambda;
    return (l + 1) * (l + 2) * (l + 2) * (l + 3) / 12;
}

// Index (j, m, q_a, q_b) of the orthonormal basis of H_lambda.  Half-integer
// labels are stored as twice-values so all index arithmetic stays integral.
struct BasisIndex {
    int two_j = 0;
    int m = 0;
    int two_qa = 0;
    int two_qb = 0;

    friend bool operator==(const BasisIndex&, const BasisIndex&) = default;
};

inline bool basis_index_valid(int lambda, const BasisIndex& idx) {
    if (idx.two_j < 0 || idx.m < 0) return false;
    if (idx.two_j + idx.m > lambda) return false;
    if (std::abs(idx.two_qa) > idx.two_j || std::abs(idx.two_qb) > idx.two_j) return false;
    if (((idx.two_qa ^ idx.two_j) & 1) || ((idx.two_qb ^ idx.two_j) & 1)) return false;
    return true;
}

// Canonical enumeration: lexicographic in (m ascending, 2j ascending,
// 2q_a descending, 2q_b descending).  This ordering is the indexing
// contract for every coefficient vector in the library.
std::vector<BasisIndex> enumerate_basis(int lambda);

// Position of idx in the canonical enumeration; throws on invalid indices.
int basis_position(int lambda, const BasisIndex& idx);

}  // namespace grasscs
