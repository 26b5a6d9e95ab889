#ifndef SEPR_SEARCH_HPP
#define SEPR_SEARCH_HPP

#include "sepr/catalog.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace sepr::search {

enum class EntryKind { integers, gaussian_integers, rationals };

std::string_view to_string(EntryKind k);
EntryKind entry_kind_from_string(std::string_view s);

/*
 * Deterministic matrix generator: the pair (spec, index) fully determines a
 * matrix, so trials can run in any order (or in parallel) and reproduce.
 *
 *   integers           entries in [-bound, bound]
 *   gaussian_integers  complex integer entries with |z|^2 <= bound
 *   rationals          numerators in [-bound, bound], denominators in
 *                      [1, den_max]
 *
 * With radicand d >= 2 the integer and rational kinds add a sqrt(d) term
 * with coefficient in [-1, 1] to each component, so the extension-field
 * arithmetic actually gets exercised; the Gaussian-integer kind stays true
 * to its name. In real-symmetric class all entries are real.
 */
struct GenSpec {
    int n = 3;
    EntryKind kind = EntryKind::integers;
    int bound = 2;
    int den_max = 2;
    MatrixClass cls = MatrixClass::hermitian;
    long long radicand = 0;
    std::uint64_t seed = 0;
};

HermitianMatrix random_hermitian(const GenSpec& spec, std::uint64_t index);

struct CheckItem {
    std::string name;
    std::uint64_t cases = 0;
    std::optional<std::string> failure;  // description of the first failing tuple
};

struct CheckReport {
    std::vector<CheckItem> items;

    bool all_pass() const;
    std::uint64_t total_cases() const;
    std::string summary() const;  // one line per item
};

// Exact verification on one matrix of: the extensible-minors identity, the
// Schur quotient formula and rank drop, the Schur epr corollary, the Jacobi
// route through the inverse (nonsingular case), and the negation law.
CheckReport check_identities(const HermitianMatrix& m);

// Exhaustive principal-submatrix scan of the thirteen inheritance
// statements (which symbols must reappear in m x m principal submatrices).
CheckReport check_inheritance(const HermitianMatrix& m);

struct EnumerationReport {
    int n = 0;
    MatrixClass mode = MatrixClass::hermitian;
    std::uint64_t universe = 0;  // candidate sequences with a valid terminal
    std::vector<SeprSequence> attainable;  // rule-clean with a catalog witness
    std::vector<std::pair<SeprSequence, std::vector<std::string>>> unattainable;
    std::vector<SeprSequence> rule_clean_unwitnessed;
};

// Screens every length-n symbol string with a valid terminal against the
// rule engine and, for n <= 3, joins survivors with the witness catalog.
// In real-symmetric mode only real witnesses count.
EnumerationReport enumerate_candidates(int n, MatrixClass mode, int cap = 6);

// Looks for a matrix whose sepr-sequence equals `target`. Random mode tries
// `budget` generator indices; exhaustive mode walks the entry lattice in a
// fixed odometer order (at most `budget` points). Absence of a witness is
// reported as "none found" and proves nothing.
std::optional<HermitianMatrix> search_witness(const SeprSequence& target, const GenSpec& spec,
                                              std::uint64_t budget, bool exhaustive = false);

std::uint64_t exhaustive_lattice_size(const GenSpec& spec);

}  // namespace sepr::search

#endif
