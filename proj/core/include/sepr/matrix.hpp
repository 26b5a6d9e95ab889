#ifndef SEPR_MATRIX_HPP
#define SEPR_MATRIX_HPP

#include "sepr/qext.hpp"

#include <cstdint>
#include <vector>

namespace sepr {

/*
 * Square Hermitian matrix over Q(sqrt(d))(i), validated on construction:
 * entries[j][i] == conj(entries[i][j]) (which forces a real diagonal).
 * Immutable after construction; every operation returns a new matrix.
 *
 * Index sets are passed as bitmasks over rows 0..n-1 (bit i selects row and
 * column i). Error messages report 1-based coordinates.
 *
 * Each matrix carries a label per row: the index the row had in the matrix
 * it was derived from. Fresh matrices get identity labels; principal
 * submatrices and Schur complements inherit the labels of the rows they keep.
 */
class HermitianMatrix {
public:
    // Validates Hermitian symmetry; throws std::invalid_argument naming the
    // violating entry pair otherwise.
    static HermitianMatrix validated(std::vector<std::vector<CQExt>> entries, long long radicand);

    static HermitianMatrix zero(int n);
    static HermitianMatrix identity(int n);
    static HermitianMatrix all_ones(int n);
    static HermitianMatrix diagonal(std::vector<QExt> diag);
    // Real symmetric convenience: grid of rationals, checked for symmetry.
    static HermitianMatrix real_symmetric(std::vector<std::vector<Rational>> entries);

    int order() const { return n_; }
    long long radicand() const { return d_; }
    const CQExt& at(int i, int j) const { return e_[static_cast<std::size_t>(i) * n_ + j]; }
    const std::vector<int>& labels() const { return labels_; }

    bool is_real() const;
    bool has_zero_diagonal_entry() const;

    HermitianMatrix principal_submatrix(std::uint32_t alpha) const;
    HermitianMatrix negated() const;
    HermitianMatrix inverse() const;  // throws std::domain_error when singular

    // B / B[alpha] = B[ac] - B[ac,alpha] B[alpha]^{-1} B[alpha,ac];
    // throws std::domain_error when the pivot block B[alpha] is singular.
    HermitianMatrix schur_complement(std::uint32_t alpha) const;

    // Exact determinant. A Hermitian determinant is real; a nonzero imaginary
    // part would mean broken arithmetic and raises std::logic_error.
    QExt determinant() const;

    // det of B[rows|cols] for equally sized row/column masks (generally
    // complex; used by the extensible-minors identity).
    CQExt offdiagonal_minor(std::uint32_t rows, std::uint32_t cols) const;

    // Rank by exact row reduction, independent of any principal-minor route.
    int rank() const;

    friend HermitianMatrix direct_sum(const HermitianMatrix& a, const HermitianMatrix& b);

    // entrywise equality; labels and radicand context are not compared
    bool operator==(const HermitianMatrix& o) const { return n_ == o.n_ && e_ == o.e_; }

    std::string str() const;  // row-per-line text form

private:
    HermitianMatrix(int n, long long d, std::vector<CQExt> e, std::vector<int> labels)
        : n_(n), d_(d), e_(std::move(e)), labels_(std::move(labels)) {}

    int n_ = 0;
    long long d_ = 0;
    std::vector<CQExt> e_;      // row-major n*n
    std::vector<int> labels_;   // inherited row indices
};

HermitianMatrix direct_sum(const HermitianMatrix& a, const HermitianMatrix& b);

// Determinant of an arbitrary square grid over CQExt (fraction-free
// elimination with row pivoting; closed forms below order 4).
CQExt det_general(std::vector<CQExt> grid, int n);

std::vector<int> mask_to_indices(std::uint32_t mask);
int mask_order(std::uint32_t mask);

/*
 * All 2^n - 1 principal minors of a Hermitian matrix, indexed by subset
 * bitmask; the empty set is assigned the value 1. Every stored minor is
 * checked to be exactly real.
 */
class MinorTable {
public:
    static constexpr int kMaxOrder = 16;

    static MinorTable compute(const HermitianMatrix& m);

    int order() const { return n_; }
    const QExt& value(std::uint32_t mask) const { return v_[mask]; }
    int sign(std::uint32_t mask) const { return v_[mask].sign(); }
    std::uint32_t full_mask() const { return (1u << n_) - 1; }

private:
    MinorTable(int n, std::vector<QExt> v) : n_(n), v_(std::move(v)) {}
    int n_;
    std::vector<QExt> v_;
};

}  // namespace sepr

#endif
