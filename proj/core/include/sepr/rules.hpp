#ifndef SEPR_RULES_HPP
#define SEPR_RULES_HPP

#include "sepr/sequence.hpp"

#include <optional>
#include <string>
#include <vector>

namespace sepr {

enum class MatrixClass { hermitian, real_symmetric };

std::string_view to_string(MatrixClass c);
MatrixClass matrix_class_from_string(std::string_view s);

namespace rules {

/*
 * Each rule is a named, deterministic predicate on a sepr-sequence. A rule
 * that fires certifies the sequence unattainable in the rule's scope:
 *
 *   hermitian           holds for every Hermitian matrix (and hence also in
 *                       real-symmetric mode)
 *   real_symmetric_only holds for real symmetric matrices only
 *   order3_only         counting argument specific to n = 3
 *
 * Forcing results (a pattern that constrains its neighbours) are encoded as
 * prohibitions of the complementary patterns, so "no rule fires" is a pure
 * predicate on the sequence.
 */
enum class RuleScope { hermitian, real_symmetric_only, order3_only };

struct Rule {
    std::string id;
    RuleScope scope;
    std::string pattern;   // what the rule prohibits, in sequence notation
    std::string citation;  // the result it encodes
    bool (*fires)(const SeprSequence&);
};

// Stable-ordered ledger of every rule.
const std::vector<Rule>& rule_catalog();

const Rule* find_rule(std::string_view id);

enum class VerdictStatus { unattainable, rule_clean, attainable_witnessed };

std::string_view to_string(VerdictStatus s);

struct Verdict {
    VerdictStatus status = VerdictStatus::rule_clean;
    std::vector<std::string> violations;          // ids of every rule that fired
    std::optional<std::string> witness_ref;       // catalog label, when upgraded

    bool unattainable() const { return status == VerdictStatus::unattainable; }
};

// Evaluates every applicable rule (all of them, not first-fail); the
// violation list follows ledger order regardless of evaluation order.
Verdict check_sequence(const SeprSequence& seq, MatrixClass mode);

}  // namespace rules
}  // namespace sepr

#endif
