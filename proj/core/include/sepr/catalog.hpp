#ifndef SEPR_CATALOG_HPP
#define SEPR_CATALOG_HPP

#include "sepr/rules.hpp"

#include <optional>
#include <string>
#include <vector>

namespace sepr::catalog {

/*
 * Witness matrix for an attainable sepr-sequence of order <= 3. Witnesses
 * defined as a negation, inverse or direct sum of another witness are
 * resolved through exact matrix arithmetic when the catalog is built, so
 * reproducing the classification also exercises those operations.
 */
struct WitnessEntry {
    SeprSequence label;
    HermitianMatrix matrix;
    std::string construction;  // how the witness is built, e.g. "-(J3 - 2*I3)"
};

// All 3 + 13 + 65 entries, grouped by order, in canonical label order.
const std::vector<WitnessEntry>& entries();

// The attainable sepr-sequences of order n in canonical order (A* < A+ < A-
// < N < S* < S+ < S-, positionwise). Throws std::domain_error for n > 3:
// the classification is only known through order 3.
std::vector<SeprSequence> attainable_list(int n);

const WitnessEntry* witness(const SeprSequence& label);

// check_sequence plus a catalog join: a rule-clean sequence of order <= 3 is
// upgraded to attainable-witnessed. In real-symmetric mode only witnesses
// with real entries count.
rules::Verdict classify(const SeprSequence& seq, MatrixClass mode);

enum class JkSign { plus, minus };

struct JkFamilyEntry {
    HermitianMatrix matrix;     // J_n - k I_n, or its negative
    SeprSequence predicted;     // closed-form sepr of that matrix
};

// The +-(J_n - k I_n) family, 2 <= k <= n-2. The minus sign yields
// A+..A+ N A-..A-; the plus sign the alternating shape.
JkFamilyEntry jk_family(int n, int k, JkSign sign);

// 5x5 Hermitian matrix with sepr S*S-S*A+A+ none of whose 4x4 principal
// submatrices carries S* in third position.
const HermitianMatrix& star_noninheritance_example();

struct CatalogReport {
    int entries_checked = 0;
    std::vector<std::string> mismatches;  // empty on success

    bool ok() const { return mismatches.empty(); }
};

// Recomputes every witness's sepr-sequence and compares it to the label;
// also checks that every label is rule-clean (real-symmetric mode too, for
// real witnesses). Mismatches are reported, not thrown.
CatalogReport verify_catalog(int order = 0);  // 0 = all orders

}  // namespace sepr::catalog

#endif
