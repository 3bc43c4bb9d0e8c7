#include "grasscs/basis.hpp"

namespace grasscs {

std::vector<BasisIndex> enumerate_basis(int lambda) {
    if (lambda < 1) throw std::invalid_argument("enumerate_basis: lambda must be >= 1");
    std::vector<BasisIndex> out;
    out.reserve(static_cast<std::size_t>(irrep_dim(lambda)));
    for (int m = 0; m <= lambda; ++m) {
        for (int two_j = 0; two_j + m <= lambda; ++two_j) {
            for (int two_qa = two_j; two_qa >= -two_j; two_qa -= 2) {
                for (int two_qb = two_j; two_qb >= -two_j; two_qb -= 2) {
                    out.push_back(BasisIndex{two_j, m, two_qa, two_qb});
                }
            }
        }
    }
    return out;
}

int basis_position(int lambda, const BasisIndex& idx) {
    if (!basis_index_valid(lambda, idx)) throw std::invalid_argument("basis_position: invalid basis index");
    int pos = 0;
    for (int m = 0; m < idx.m; ++m)
        for (int two_j = 0; two_j + m <= lambda; ++two_j) pos += (two_j + 1) * (two_j + 1);
    for (int two_j = 0; two_j < idx.two_j; ++two_j) pos += (two_j + 1) * (two_j + 1);
    const int na = (idx.two_j - idx.two_qa) / 2;  // 0 at two_qa = +two_j
    const int nb = (idx.two_j - idx.two_qb) / 2;
    pos += na * (idx.two_j + 1) + nb;
    return pos;
}

}  // namespace grasscs
