#include "sepr/matrix.hpp"

#include <bit>
#include <stdexcept>
#include <string>

namespace sepr {

std::vector<int> mask_to_indices(std::uint32_t mask) {
    std::vector<int> idx;
    for (int i = 0; mask; ++i, mask >>= 1)
        if (mask & 1u) idx.push_back(i);
    return idx;
}

int mask_order(std::uint32_t mask) { return std::popcount(mask); }

HermitianMatrix HermitianMatrix::validated(std::vector<std::vector<CQExt>> entries, long long radicand) {
    int n = static_cast<int>(entries.size());
    if (n == 0) throw std::invalid_argument("matrix: empty matrix");
    if (!is_square_free(radicand))
        throw std::invalid_argument("matrix: radicand " + std::to_string(radicand) + " is not square-free");
    std::vector<CQExt> flat;
    flat.reserve(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(entries[i].size()) != n)
            throw std::invalid_argument("matrix: row " + std::to_string(i + 1) + " has " +
                                        std::to_string(entries[i].size()) + " entries, expected " +
                                        std::to_string(n));
        for (int j = 0; j < n; ++j) flat.push_back(entries[i][j]);
    }
    for (int i = 0; i < n; ++i) {
        if (!flat[static_cast<std::size_t>(i) * n + i].is_real())
            throw std::invalid_argument("matrix: diagonal entry (" + std::to_string(i + 1) + "," +
                                        std::to_string(i + 1) + ") is not real");
        for (int j = 0; j < i; ++j) {
            if (!(flat[static_cast<std::size_t>(i) * n + j] ==
                  flat[static_cast<std::size_t>(j) * n + i].conj()))
                throw std::invalid_argument("matrix: entry (" + std::to_string(i + 1) + "," +
                                            std::to_string(j + 1) + ") is not the conjugate of (" +
                                            std::to_string(j + 1) + "," + std::to_string(i + 1) + ")");
        }
    }
    std::vector<int> labels(n);
    for (int i = 0; i < n; ++i) labels[i] = i;
    return HermitianMatrix(n, radicand, std::move(flat), std::move(labels));
}

HermitianMatrix HermitianMatrix::zero(int n) {
    std::vector<std::vector<CQExt>> e(n, std::vector<CQExt>(n));
    return validated(std::move(e), 0);
}

HermitianMatrix HermitianMatrix::identity(int n) {
    std::vector<std::vector<CQExt>> e(n, std::vector<CQExt>(n));
    for (int i = 0; i < n; ++i) e[i][i] = CQExt(1);
    return validated(std::move(e), 0);
}

HermitianMatrix HermitianMatrix::all_ones(int n) {
    std::vector<std::vector<CQExt>> e(n, std::vector<CQExt>(n, CQExt(1)));
    return validated(std::move(e), 0);
}

HermitianMatrix HermitianMatrix::diagonal(std::vector<QExt> diag) {
    int n = static_cast<int>(diag.size());
    long long d = 0;
    for (const auto& v : diag)
        if (v.radicand() != 0) d = v.radicand();
    std::vector<std::vector<CQExt>> e(n, std::vector<CQExt>(n));
    for (int i = 0; i < n; ++i) e[i][i] = CQExt(diag[i]);
    return validated(std::move(e), d);
}

HermitianMatrix HermitianMatrix::real_symmetric(std::vector<std::vector<Rational>> entries) {
    int n = static_cast<int>(entries.size());
    std::vector<std::vector<CQExt>> e(n);
    for (int i = 0; i < n; ++i) {
        e[i].reserve(n);
        for (const auto& v : entries[i]) e[i].emplace_back(QExt(v));
    }
    return validated(std::move(e), 0);
}

bool HermitianMatrix::is_real() const {
    for (const auto& z : e_)
        if (!z.is_real()) return false;
    return true;
}

bool HermitianMatrix::has_zero_diagonal_entry() const {
    for (int i = 0; i < n_; ++i)
        if (at(i, i).is_zero()) return true;
    return false;
}

HermitianMatrix HermitianMatrix::principal_submatrix(std::uint32_t alpha) const {
    if (alpha == 0) throw std::invalid_argument("matrix: empty index set");
    if (alpha >> n_) throw std::invalid_argument("matrix: index set out of range");
    std::vector<int> idx = mask_to_indices(alpha);
    int m = static_cast<int>(idx.size());
    std::vector<CQExt> e;
    e.reserve(static_cast<std::size_t>(m) * m);
    std::vector<int> labels;
    labels.reserve(m);
    for (int i : idx) {
        labels.push_back(labels_[i]);
        for (int j : idx) e.push_back(at(i, j));
    }
    return HermitianMatrix(m, d_, std::move(e), std::move(labels));
}

HermitianMatrix HermitianMatrix::negated() const {
    std::vector<CQExt> e;
    e.reserve(e_.size());
    for (const auto& z : e_) e.push_back(-z);
    return HermitianMatrix(n_, d_, std::move(e), labels_);
}

HermitianMatrix direct_sum(const HermitianMatrix& a, const HermitianMatrix& b) {
    long long d = a.d_;
    if (a.d_ != b.d_) {
        if (a.d_ == 0)
            d = b.d_;
        else if (b.d_ == 0)
            d = a.d_;
        else
            throw std::invalid_argument("matrix: direct sum of mismatched radicands " +
                                        std::to_string(a.d_) + " and " + std::to_string(b.d_));
    }
    int n = a.n_ + b.n_;
    std::vector<CQExt> e(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < a.n_; ++i)
        for (int j = 0; j < a.n_; ++j) e[static_cast<std::size_t>(i) * n + j] = a.at(i, j);
    for (int i = 0; i < b.n_; ++i)
        for (int j = 0; j < b.n_; ++j)
            e[static_cast<std::size_t>(a.n_ + i) * n + (a.n_ + j)] = b.at(i, j);
    std::vector<int> labels(n);
    for (int i = 0; i < n; ++i) labels[i] = i;
    return HermitianMatrix(n, d, std::move(e), std::move(labels));
}

/*
 * Fraction-free (Bareiss) elimination. After step k every interior entry is
 * an order-(k+1) minor of the row-permuted input, so the division by the
 * previous pivot is exact and intermediate growth stays polynomial even over
 * the extension field. Row swaps flip the sign.
 */
CQExt det_general(std::vector<CQExt> m, int n) {
    if (n == 0) return CQExt(1);
    auto cell = [&m, n](int i, int j) -> CQExt& { return m[static_cast<std::size_t>(i) * n + j]; };
    if (n == 1) return cell(0, 0);
    if (n == 2) return cell(0, 0) * cell(1, 1) - cell(0, 1) * cell(1, 0);
    if (n == 3) {
        return cell(0, 0) * (cell(1, 1) * cell(2, 2) - cell(1, 2) * cell(2, 1)) -
               cell(0, 1) * (cell(1, 0) * cell(2, 2) - cell(1, 2) * cell(2, 0)) +
               cell(0, 2) * (cell(1, 0) * cell(2, 1) - cell(1, 1) * cell(2, 0));
    }
    bool negate = false;
    CQExt prev(1);
    for (int k = 0; k + 1 < n; ++k) {
        if (cell(k, k).is_zero()) {
            int r = -1;
            for (int i = k + 1; i < n; ++i) {
                if (!cell(i, k).is_zero()) {
                    r = i;
                    break;
                }
            }
            if (r < 0) return CQExt(0);  // zero column below: singular
            for (int j = k; j < n; ++j) std::swap(cell(k, j), cell(r, j));
            negate = !negate;
        }
        const CQExt pivot = cell(k, k);
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j)
                cell(i, j) = (cell(i, j) * pivot - cell(i, k) * cell(k, j)) / prev;
            cell(i, k) = CQExt(0);
        }
        prev = pivot;
    }
    return negate ? -cell(n - 1, n - 1) : cell(n - 1, n - 1);
}

QExt HermitianMatrix::determinant() const {
    CQExt det = det_general(e_, n_);
    if (!det.is_real())
        throw std::logic_error("matrix: Hermitian determinant came out non-real: " + det.str());
    return det.real();
}

CQExt HermitianMatrix::offdiagonal_minor(std::uint32_t rows, std::uint32_t cols) const {
    if (mask_order(rows) != mask_order(cols))
        throw std::invalid_argument("matrix: row and column sets differ in size");
    if ((rows >> n_) || (cols >> n_)) throw std::invalid_argument("matrix: index set out of range");
    std::vector<int> ri = mask_to_indices(rows);
    std::vector<int> ci = mask_to_indices(cols);
    int m = static_cast<int>(ri.size());
    std::vector<CQExt> grid;
    grid.reserve(static_cast<std::size_t>(m) * m);
    for (int i : ri)
        for (int j : ci) grid.push_back(at(i, j));
    return det_general(std::move(grid), m);
}

HermitianMatrix HermitianMatrix::inverse() const {
    // Gauss-Jordan on [A | I] with exact division
    int n = n_;
    std::vector<CQExt> a(e_);
    std::vector<CQExt> inv(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i) inv[static_cast<std::size_t>(i) * n + i] = CQExt(1);
    auto A = [&a, n](int i, int j) -> CQExt& { return a[static_cast<std::size_t>(i) * n + j]; };
    auto V = [&inv, n](int i, int j) -> CQExt& { return inv[static_cast<std::size_t>(i) * n + j]; };
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int i = col; i < n; ++i) {
            if (!A(i, col).is_zero()) {
                piv = i;
                break;
            }
        }
        if (piv < 0) throw std::domain_error("matrix: singular matrix has no inverse");
        if (piv != col) {
            for (int j = 0; j < n; ++j) {
                std::swap(A(col, j), A(piv, j));
                std::swap(V(col, j), V(piv, j));
            }
        }
        CQExt p = A(col, col);
        for (int j = 0; j < n; ++j) {
            A(col, j) = A(col, j) / p;
            V(col, j) = V(col, j) / p;
        }
        for (int i = 0; i < n; ++i) {
            if (i == col || A(i, col).is_zero()) continue;
            CQExt f = A(i, col);
            for (int j = 0; j < n; ++j) {
                A(i, j) = A(i, j) - f * A(col, j);
                V(i, j) = V(i, j) - f * V(col, j);
            }
        }
    }
    return HermitianMatrix(n, d_, std::move(inv), labels_);
}

HermitianMatrix HermitianMatrix::schur_complement(std::uint32_t alpha) const {
    if (alpha == 0 || (alpha >> n_)) throw std::invalid_argument("matrix: bad pivot index set");
    std::uint32_t comp = ((1u << n_) - 1) & ~alpha;
    if (comp == 0) throw std::invalid_argument("matrix: pivot block covers the whole matrix");
    HermitianMatrix block = principal_submatrix(alpha);
    if (block.determinant().is_zero()) throw std::domain_error("matrix: singular pivot block");
    HermitianMatrix block_inv = block.inverse();

    std::vector<int> ai = mask_to_indices(alpha);
    std::vector<int> ci = mask_to_indices(comp);
    int k = static_cast<int>(ai.size());
    int m = static_cast<int>(ci.size());

    // C = B[comp] - B[comp,alpha] * B[alpha]^{-1} * B[alpha,comp]
    std::vector<CQExt> result(static_cast<std::size_t>(m) * m);
    for (int r = 0; r < m; ++r) {
        for (int c = 0; c < m; ++c) {
            CQExt acc = at(ci[r], ci[c]);
            for (int s = 0; s < k; ++s) {
                CQExt tmp(0);
                for (int t = 0; t < k; ++t) tmp += block_inv.at(s, t) * at(ai[t], ci[c]);
                acc -= at(ci[r], ai[s]) * tmp;
            }
            result[static_cast<std::size_t>(r) * m + c] = acc;
        }
    }
    std::vector<int> labels;
    labels.reserve(m);
    for (int i : ci) labels.push_back(labels_[i]);
    return HermitianMatrix(m, d_, std::move(result), std::move(labels));
}

int HermitianMatrix::rank() const {
    std::vector<CQExt> a(e_);
    int n = n_;
    auto A = [&a, n](int i, int j) -> CQExt& { return a[static_cast<std::size_t>(i) * n + j]; };
    int row = 0;
    for (int col = 0; col < n && row < n; ++col) {
        int piv = -1;
        for (int i = row; i < n; ++i) {
            if (!A(i, col).is_zero()) {
                piv = i;
                break;
            }
        }
        if (piv < 0) continue;
        if (piv != row)
            for (int j = 0; j < n; ++j) std::swap(A(row, j), A(piv, j));
        for (int i = row + 1; i < n; ++i) {
            if (A(i, col).is_zero()) continue;
            CQExt f = A(i, col) / A(row, col);
            for (int j = col; j < n; ++j) A(i, j) = A(i, j) - f * A(row, j);
        }
        ++row;
    }
    return row;
}

std::string HermitianMatrix::str() const {
    std::string s;
    for (int i = 0; i < n_; ++i) {
        s += "[ ";
        for (int j = 0; j < n_; ++j) {
            s += at(i, j).str();
            if (j + 1 < n_) s += ", ";
        }
        s += " ]\n";
    }
    return s;
}

MinorTable MinorTable::compute(const HermitianMatrix& m) {
    int n = m.order();
    if (n > kMaxOrder)
        throw std::invalid_argument("minors: order " + std::to_string(n) + " exceeds the cap of " +
                                    std::to_string(kMaxOrder));
    std::uint32_t size = 1u << n;
    std::vector<QExt> v(size);
    v[0] = QExt(1);
    std::vector<CQExt> grid;
    for (std::uint32_t mask = 1; mask < size; ++mask) {
        std::vector<int> idx = mask_to_indices(mask);
        int k = static_cast<int>(idx.size());
        grid.clear();
        grid.reserve(static_cast<std::size_t>(k) * k);
        for (int i : idx)
            for (int j : idx) grid.push_back(m.at(i, j));
        CQExt det = det_general(std::move(grid), k);
        if (!det.is_real())
            throw std::logic_error("minors: non-real principal minor at subset mask " +
                                   std::to_string(mask));
        v[mask] = det.real();
    }
    return MinorTable(n, std::move(v));
}

}  // namespace sepr
