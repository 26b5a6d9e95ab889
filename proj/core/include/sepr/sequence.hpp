#ifndef SEPR_SEQUENCE_HPP
#define SEPR_SEQUENCE_HPP

#include "sepr/matrix.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace sepr {

/*
 * Per-order sign summary of the principal minors of a Hermitian matrix.
 * Position k (1-based) classifies the multiset of signs of all order-k
 * principal minors:
 *
 *   A+ all positive        A- all negative       A* both signs, no zero
 *   S+ zero and positive   S- zero and negative  S* positive, negative, zero
 *   N  all zero
 *
 * Enum order doubles as the canonical sort order for sequence listings.
 */
enum class SeprSymbol : std::uint8_t { AStar, APlus, AMinus, N, SStar, SPlus, SMinus };

enum class EprSymbol : std::uint8_t { A, S, N };

std::string_view token(SeprSymbol s);  // "A*", "A+", "A-", "N", "S*", "S+", "S-"
char token(EprSymbol s);

bool is_terminal(SeprSymbol s);  // last symbol of any attainable sequence: A+, A- or N
SeprSymbol neg(SeprSymbol s);    // swap + and - superscripts
EprSymbol underlying(SeprSymbol s);

class SeprSequence {
public:
    SeprSequence() = default;
    explicit SeprSequence(std::vector<SeprSymbol> symbols) : t_(std::move(symbols)) {}

    // Accepts concatenated tokens, optionally separated by spaces or commas:
    // "A+NA-" and "A+ N A-" parse identically. Unknown characters raise
    // std::invalid_argument reporting the byte offset.
    static SeprSequence parse(std::string_view text);

    int size() const { return static_cast<int>(t_.size()); }
    SeprSymbol at(int pos) const { return t_[pos - 1]; }  // 1-based, matching the math
    const std::vector<SeprSymbol>& symbols() const { return t_; }

    std::string str() const;

    bool operator==(const SeprSequence& o) const = default;
    auto operator<=>(const SeprSequence& o) const = default;

private:
    std::vector<SeprSymbol> t_;
};

class EprSequence {
public:
    EprSequence() = default;
    explicit EprSequence(std::vector<EprSymbol> symbols) : l_(std::move(symbols)) {}
    static EprSequence parse(std::string_view text);

    int size() const { return static_cast<int>(l_.size()); }
    EprSymbol at(int pos) const { return l_[pos - 1]; }
    const std::vector<EprSymbol>& symbols() const { return l_; }

    std::string str() const;

    bool operator==(const EprSequence& o) const = default;
    auto operator<=>(const EprSequence& o) const = default;

private:
    std::vector<EprSymbol> l_;
};

// r0]r1...rn: r_k records whether some order-k principal minor is nonzero,
// r0 whether the diagonal has a zero entry.
struct PrSequence {
    bool r0 = false;
    std::vector<bool> r;

    std::string str() const;  // e.g. "1]010"
    bool operator==(const PrSequence& o) const = default;
};

SeprSequence sepr_of(const MinorTable& minors);
EprSequence epr_of(const MinorTable& minors);
PrSequence pr_of(const MinorTable& minors, bool has_zero_diagonal);

// sepr of the principal submatrix selected by `alpha`, read off the parent's
// minor table (no further determinant work).
SeprSequence sepr_of_submatrix(const MinorTable& minors, std::uint32_t alpha);

EprSequence underlying_epr(const SeprSequence& s);

// Swap every + and - superscript (the "negative" of a sequence).
SeprSequence neg_all(const SeprSequence& s);

// Predicted sepr of -B from sepr of B: odd positions are negated, even
// positions are untouched (order-k minors scale by (-1)^k).
SeprSequence negation_law(const SeprSequence& s);

// Predicted sepr of B^{-1} from sepr of B: reverse the first n-1 symbols and
// keep the terminal; when the terminal is A- the reversed prefix is negated.
// Throws std::domain_error when the sequence ends in N (singular matrix).
SeprSequence inverse_sepr_predict(const SeprSequence& s);

/*
 * The two sequence shapes realized by -(J_n - k I_n) and J_n - k I_n for
 * 2 <= k <= n-2: every order-q principal minor of the former is
 * k^(q-1) (k-q), of the latter (-k)^(q-1) (q-k).
 */
SeprSequence ana_constant_shape(int n, int k);     // A+ .. A+ N A- .. A-
SeprSequence ana_alternating_shape(int n, int k);  // sign (-1)^(q-1) sgn(q-k) at order q

}  // namespace sepr

#endif
