#ifndef SEPR_TESTS_ORACLE_HPP
#define SEPR_TESTS_ORACLE_HPP

#include <sepr/matrix.hpp>

#include <cassert>
#include <vector>

// Test-only reference implementations, kept independent of the production
// elimination path on purpose.
namespace sepr::oracle {

// determinant by recursive expansion along the first row
inline CQExt det_cofactor(const std::vector<CQExt>& grid, int n) {
    if (n == 0) return CQExt(1);
    if (n == 1) return grid[0];
    CQExt acc(0);
    for (int col = 0; col < n; ++col) {
        if (grid[col].is_zero()) continue;
        std::vector<CQExt> minor;
        minor.reserve(static_cast<std::size_t>(n - 1) * (n - 1));
        for (int i = 1; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (j != col) minor.push_back(grid[static_cast<std::size_t>(i) * n + j]);
        CQExt term = grid[col] * det_cofactor(minor, n - 1);
        acc = (col % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
}

inline CQExt det_cofactor(const HermitianMatrix& m) {
    std::vector<CQExt> grid;
    int n = m.order();
    grid.reserve(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) grid.push_back(m.at(i, j));
    return det_cofactor(grid, n);
}

// sign of a + b*sqrt(d) by shrinking rational enclosures of sqrt(d): with
// s = floor(sqrt(d * 4^p)), sqrt(d) lies in [s/2^p, (s+1)/2^p]
inline int sign_by_interval(const QExt& x) {
    const Rational& a = x.rational_part();
    const Rational& b = x.radical_coeff();
    if (b.is_zero()) return a.sign();
    for (int p = 8; p <= 256; p *= 2) {
        BigInt scale = BigInt(1) << p;
        BigInt s = boost::multiprecision::sqrt(BigInt(x.radicand()) * scale * scale);
        Rational lo_rt(s, scale), hi_rt(s + 1, scale);
        Rational lo = a + b * (b.sign() >= 0 ? lo_rt : hi_rt);
        Rational hi = a + b * (b.sign() >= 0 ? hi_rt : lo_rt);
        if (lo.sign() > 0) return 1;
        if (hi.sign() < 0) return -1;
    }
    // for square-free d >= 2 the value cannot be an unresolvable exact zero
    assert(a.is_zero() && b.is_zero());
    return 0;
}

}  // namespace sepr::oracle

#endif
