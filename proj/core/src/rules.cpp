#include "sepr/rules.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace sepr {

std::string_view to_string(MatrixClass c) {
    return c == MatrixClass::hermitian ? "hermitian" : "real-symmetric";
}

MatrixClass matrix_class_from_string(std::string_view s) {
    if (s == "hermitian") return MatrixClass::hermitian;
    if (s == "real-symmetric" || s == "real_symmetric") return MatrixClass::real_symmetric;
    throw std::invalid_argument("unknown matrix class '" + std::string(s) + "'");
}

namespace rules {

std::string_view to_string(VerdictStatus s) {
    switch (s) {
        case VerdictStatus::unattainable: return "unattainable";
        case VerdictStatus::rule_clean: return "rule-clean";
        case VerdictStatus::attainable_witnessed: return "attainable-witnessed";
    }
    return "?";
}

namespace {

using S = SeprSymbol;
using E = EprSymbol;

bool is_a_family(S t) { return t == S::AStar || t == S::APlus || t == S::AMinus; }
bool is_plus_minus(S t) { return t == S::APlus || t == S::AMinus; }
bool is_s_family(S t) { return t == S::SStar || t == S::SPlus || t == S::SMinus; }

// binomial coefficient, saturated at 4 (rules only compare against 2 and 3)
int binom_capped(int n, int k) {
    if (k < 0 || k > n) return 0;
    long long c = 1;
    for (int i = 1; i <= k; ++i) {
        c = c * (n - k + i) / i;
        if (c >= 4) return 4;
    }
    return static_cast<int>(c);
}

bool r1_terminal(const SeprSequence& q) { return !is_terminal(q.at(q.size())); }

bool r2_cardinality(const SeprSequence& q) {
    int n = q.size();
    for (int k = 1; k <= n; ++k) {
        S t = q.at(k);
        if (t == S::SStar && binom_capped(n, k) < 3) return true;
        if ((t == S::AStar || t == S::SPlus || t == S::SMinus) && binom_capped(n, k) < 2) return true;
    }
    return false;
}

bool r3_basic_prefix(const SeprSequence& q) {
    if (q.size() < 2) return false;
    static constexpr std::array<std::pair<S, S>, 12> kPrefixes{{
        {S::AStar, S::APlus}, {S::AStar, S::SPlus}, {S::AStar, S::N},
        {S::SStar, S::APlus}, {S::SStar, S::SPlus}, {S::SStar, S::N},
        {S::SPlus, S::APlus}, {S::SMinus, S::APlus},
        {S::N, S::AStar}, {S::N, S::APlus}, {S::N, S::SStar}, {S::N, S::SPlus},
    }};
    std::pair<S, S> head{q.at(1), q.at(2)};
    return std::find(kPrefixes.begin(), kPrefixes.end(), head) != kPrefixes.end();
}

bool r4_nn_tail(const SeprSequence& q) {
    for (int k = 1; k + 1 <= q.size(); ++k) {
        if (q.at(k) == S::N && q.at(k + 1) == S::N) {
            for (int j = k + 2; j <= q.size(); ++j)
                if (q.at(j) != S::N) return true;
            return false;
        }
    }
    return false;
}

bool r5_star_nn(const SeprSequence& q) {
    for (int k = 1; k + 2 <= q.size(); ++k) {
        if ((q.at(k) == S::AStar || q.at(k) == S::SStar) && q.at(k + 1) == S::N && q.at(k + 2) == S::N)
            return true;
    }
    return false;
}

bool r6_astar_n(const SeprSequence& q) {
    for (int k = 1; k + 1 <= q.size(); ++k) {
        if (q.at(k) == S::AStar && q.at(k + 1) == S::N) return true;
        if (q.at(k) == S::N && q.at(k + 1) == S::AStar) return true;
    }
    return false;
}

bool r6b_star_at_rank(const SeprSequence& q) {
    // trailing block of Ns: the symbol in front of it sits at the rank, where
    // all nonzero principal minors share one sign
    int r = q.size();
    while (r >= 1 && q.at(r) == S::N) --r;
    if (r == 0 || r == q.size()) return false;
    return q.at(r) == S::AStar || q.at(r) == S::SStar;
}

bool r7_axa(const SeprSequence& q) {
    for (int k = 1; k + 2 <= q.size(); ++k) {
        S a = q.at(k), x = q.at(k + 1), b = q.at(k + 2);
        if (a == b && is_plus_minus(a) && !is_plus_minus(x)) return true;
    }
    return false;
}

bool r8_s_start_then_a(const SeprSequence& q) {
    if (q.size() < 3) return false;
    bool head = (q.at(1) == S::SPlus || q.at(1) == S::SMinus) && q.at(2) == S::SPlus;
    if (!head) return false;
    for (int j = 3; j <= q.size(); ++j)
        if (is_a_family(q.at(j))) return true;
    return false;
}

bool r9_ssa(const SeprSequence& q) {
    static constexpr std::array<std::array<S, 3>, 6> kBad{{
        {S::SPlus, S::SStar, S::APlus},  {S::SMinus, S::SStar, S::AMinus},
        {S::SPlus, S::SPlus, S::APlus},  {S::SMinus, S::SMinus, S::AMinus},
        {S::SPlus, S::SMinus, S::APlus}, {S::SMinus, S::SPlus, S::AMinus},
    }};
    for (int k = 1; k + 2 <= q.size(); ++k) {
        std::array<S, 3> w{q.at(k), q.at(k + 1), q.at(k + 2)};
        if (std::find(kBad.begin(), kBad.end(), w) != kBad.end()) return true;
    }
    return false;
}

bool r10_astar_sandwich(const SeprSequence& q) {
    static constexpr std::array<std::array<S, 3>, 6> kBad{{
        {S::APlus, S::AStar, S::SPlus},  {S::AMinus, S::AStar, S::SMinus},
        {S::SPlus, S::AStar, S::APlus},  {S::SMinus, S::AStar, S::AMinus},
        {S::SPlus, S::AStar, S::SPlus},  {S::SMinus, S::AStar, S::SMinus},
    }};
    for (int k = 1; k + 2 <= q.size(); ++k) {
        std::array<S, 3> w{q.at(k), q.at(k + 1), q.at(k + 2)};
        if (std::find(kBad.begin(), kBad.end(), w) != kBad.end()) return true;
    }
    return false;
}

bool r11_sna_forcing(const SeprSequence& q) {
    for (int k = 1; k + 2 <= q.size(); ++k) {
        if (is_s_family(q.at(k)) && q.at(k + 1) == S::N && is_a_family(q.at(k + 2))) {
            bool ok = (q.at(k) == S::SPlus && q.at(k + 2) == S::AMinus) ||
                      (q.at(k) == S::SMinus && q.at(k + 2) == S::APlus);
            if (!ok) return true;
        }
    }
    return false;
}

bool r12_sxa(const SeprSequence& q) {
    for (int k = 1; k + 2 <= q.size(); ++k) {
        S a = q.at(k), x = q.at(k + 1), b = q.at(k + 2);
        bool match = (a == S::SPlus && b == S::APlus) || (a == S::SMinus && b == S::AMinus);
        if (match && !is_plus_minus(x)) return true;
    }
    return false;
}

bool window_then_a(const SeprSequence& q, bool (*window)(S, S, S)) {
    for (int k = 1; k + 2 <= q.size(); ++k) {
        if (!window(q.at(k), q.at(k + 1), q.at(k + 2))) continue;
        for (int j = k + 3; j <= q.size(); ++j)
            if (is_a_family(q.at(j))) return true;
    }
    return false;
}

bool r13_ass_then_a(const SeprSequence& q) {
    return window_then_a(q, [](S a, S y, S b) {
        return (a == S::APlus && is_s_family(y) && b == S::SPlus) ||
               (a == S::AMinus && is_s_family(y) && b == S::SMinus);
    });
}

bool r14_ans_forcing(const SeprSequence& q) {
    for (int k = 1; k + 2 <= q.size(); ++k) {
        if (is_a_family(q.at(k)) && q.at(k + 1) == S::N && is_s_family(q.at(k + 2))) {
            bool ok = (q.at(k) == S::APlus && q.at(k + 2) == S::SMinus) ||
                      (q.at(k) == S::AMinus && q.at(k + 2) == S::SPlus);
            if (!ok) return true;
        }
    }
    return false;
}

bool r15_axs_then_a(const SeprSequence& q) {
    return window_then_a(q, [](S a, S x, S b) {
        return ((a == S::APlus && b == S::SPlus) || (a == S::AMinus && b == S::SMinus)) &&
               !is_plus_minus(x);
    });
}

bool r16_sns_forcing(const SeprSequence& q) {
    for (int k = 1; k + 2 <= q.size(); ++k) {
        if (is_s_family(q.at(k)) && q.at(k + 1) == S::N && is_s_family(q.at(k + 2))) {
            S a = q.at(k), b = q.at(k + 2);
            bool ok = (a == S::SStar && b == S::SStar) || (a == S::SPlus && b == S::SMinus) ||
                      (a == S::SMinus && b == S::SPlus);
            if (!ok) return true;
        }
    }
    return false;
}

bool r17_order3(const SeprSequence& q) {
    // engine applies this only at n = 3
    S t1 = q.at(1), t2 = q.at(2), t3 = q.at(3);
    if (t1 == S::SStar && (t2 == S::SStar || t2 == S::AStar)) return true;
    if (t1 == S::AStar && t2 == S::SStar) return true;
    if (t2 == S::SStar && t3 == S::N) return true;
    return false;
}

bool r18_epr_level(const SeprSequence& q) {
    EprSequence e = underlying_epr(q);
    int n = e.size();
    // epr shape SN...A...
    if (n >= 3 && e.at(1) == E::S && e.at(2) == E::N) {
        for (int j = 3; j <= n; ++j)
            if (e.at(j) == E::A) return true;
    }
    // NSA anywhere
    for (int k = 1; k + 2 <= n; ++k) {
        if (e.at(k) == E::N && e.at(k + 1) == E::S && e.at(k + 2) == E::A) return true;
    }
    // ...ASN...A...
    for (int k = 1; k + 2 <= n; ++k) {
        if (e.at(k) == E::A && e.at(k + 1) == E::S && e.at(k + 2) == E::N) {
            for (int j = k + 3; j <= n; ++j)
                if (e.at(j) == E::A) return true;
        }
    }
    return false;
}

bool r19_nxsn(const SeprSequence& q) {
    for (int k = 1; k + 3 <= q.size(); ++k) {
        if (q.at(k) == S::N && q.at(k + 2) == S::SStar && q.at(k + 3) == S::N) return true;
    }
    return false;
}

bool matches_ana_start_template(const SeprSequence& q) {
    int n = q.size();
    if (q.at(1) == S::APlus && q.at(2) == S::N && q.at(3) == S::AMinus) {
        for (int i = 4; i <= n; ++i)
            if (q.at(i) != S::AMinus) return false;
        return true;
    }
    if (q.at(1) == S::AMinus && q.at(2) == S::N && q.at(3) == S::APlus) {
        for (int i = 4; i <= n; ++i) {
            S want = (i % 2 == 1) ? S::APlus : S::AMinus;
            if (q.at(i) != want) return false;
        }
        return true;
    }
    return false;
}

bool r20_ana_start(const SeprSequence& q) {
    if (q.size() < 3) return false;
    EprSequence e = underlying_epr(q);
    if (!(e.at(1) == E::A && e.at(2) == E::N && e.at(3) == E::A)) return false;
    return !matches_ana_start_template(q);
}

bool r21_anaa(const SeprSequence& q) {
    for (int k = 1; k + 3 <= q.size(); ++k) {
        if (q.at(k) == S::AMinus && q.at(k + 1) == S::N && q.at(k + 2) == S::APlus &&
            q.at(k + 3) == S::APlus)
            return true;
    }
    return false;
}

bool r22_ana_parity(const SeprSequence& q) {
    for (int p = 1; p + 3 <= q.size(); ++p) {
        int k = p + 1;  // window is t_{k-1} t_k t_{k+1} t_{k+2}, N at position k
        if (q.at(p) == S::APlus && q.at(p + 1) == S::N && q.at(p + 2) == S::AMinus &&
            q.at(p + 3) == S::APlus && k % 2 == 0)
            return true;
        if (q.at(p) == S::AMinus && q.at(p + 1) == S::N && q.at(p + 2) == S::APlus &&
            q.at(p + 3) == S::AMinus && k % 2 == 1)
            return true;
    }
    return false;
}

bool r23_ana_interior(const SeprSequence& q) {
    int n = q.size();
    if (n < 4) return false;
    EprSequence e = underlying_epr(q);
    for (int k = 2; k <= n - 2; ++k) {
        if (!(e.at(k - 1) == E::A && e.at(k) == E::N && e.at(k + 1) == E::A)) continue;
        if (q == ana_constant_shape(n, k)) continue;
        if (q == ana_alternating_shape(n, k)) continue;
        return true;
    }
    return false;
}

// epr-sequences of order 3 attainable by a Hermitian matrix; everything but
// NAN is also attainable by a real symmetric matrix
const std::array<const char*, 15> kOrder3EprAttainable{
    "AAA", "AAN", "ANA", "ANN", "ASA", "ASN", "NAA", "NAN",
    "NNN", "NSN", "SAA", "SAN", "SNN", "SSA", "SSN",
};

bool r24_order3_epr(const SeprSequence& q) {
    std::string e = underlying_epr(q).str();
    return std::find_if(kOrder3EprAttainable.begin(), kOrder3EprAttainable.end(),
                        [&e](const char* s) { return e == s; }) == kOrder3EprAttainable.end();
}

bool r25_order3_nan_real(const SeprSequence& q) {
    return q.size() == 3 && underlying_epr(q).str() == "NAN";
}

std::vector<Rule> build_catalog() {
    std::vector<Rule> r;
    auto add = [&r](const char* id, RuleScope scope, const char* pattern, const char* citation,
                    bool (*fires)(const SeprSequence&)) {
        r.push_back(Rule{id, scope, pattern, citation, fires});
    };
    add("R1", RuleScope::hermitian, "last symbol not in {A+, A-, N}",
        "terminal observation: a sequence ends with the sign of the determinant", r1_terminal);
    add("R2", RuleScope::hermitian,
        "S* at order k with C(n,k) < 3, or A*/S+/S- at order k with C(n,k) < 2",
        "pigeonhole: a symbol cannot demand more distinct order-k minors than exist", r2_cardinality);
    add("R3", RuleScope::hermitian,
        "prefix in {A*A+, A*S+, A*N, S*A+, S*S+, S*N, S+A+, S-A+, NA*, NA+, NS*, NS+}",
        "Basic Proposition", r3_basic_prefix);
    add("R4", RuleScope::hermitian, "NN at orders k,k+1 followed by a non-N symbol",
        "NN Theorem: two consecutive Ns force N to the end", r4_nn_tail);
    add("R5", RuleScope::hermitian, "subsequence A*NN or S*NN",
        "corollary of the NN Theorem and the same-sign lemma", r5_star_nn);
    add("R6", RuleScope::hermitian, "subsequence A*N or NA*",
        "A*N / NA* theorem (via the law of extensible minors)", r6_astar_n);
    add("R6b", RuleScope::hermitian, "trailing N-block preceded by A* or S*",
        "same-sign lemma: all nonzero minors at the rank share one sign", r6b_star_at_rank);
    add("R7", RuleScope::hermitian, "A+XA+ or A-XA- with X not in {A+, A-}", "AXA Theorem", r7_axa);
    add("R8", RuleScope::hermitian, "prefix S+S+ or S-S+ with A*, A+ or A- anywhere later",
        "S+S+/S-S+ prefixes force singularity", r8_s_start_then_a);
    add("R9", RuleScope::hermitian,
        "subsequence among S+S*A+, S-S*A-, S+S+A+, S-S-A-, S+S-A+, S-S+A-", "SSA Corollary",
        r9_ssa);
    add("R10", RuleScope::hermitian,
        "subsequence among A+A*S+, A-A*S-, S+A*A+, S-A*A-, S+A*S+, S-A*S-",
        "A*-sandwich proposition (extensible minors)", r10_astar_sandwich);
    add("R11", RuleScope::hermitian, "S N A window other than S+NA- or S-NA+",
        "SNA forcing proposition", r11_sna_forcing);
    add("R12", RuleScope::hermitian, "S+XA+ or S-XA- with X not in {A+, A-}", "SXA Theorem",
        r12_sxa);
    add("R13", RuleScope::hermitian,
        "A+{S*,S+,S-}S+ (resp. A-{S*,S+,S-}S-) with A*, A+ or A- anywhere later",
        "ASS-then-A proposition", r13_ass_then_a);
    add("R14", RuleScope::hermitian, "A N S window other than A+NS- or A-NS+",
        "ANS forcing proposition", r14_ans_forcing);
    add("R15", RuleScope::hermitian,
        "A+XS+ (resp. A-XS-) with X not in {A+, A-} and A*, A+ or A- anywhere later",
        "AXS-then-A theorem", r15_axs_then_a);
    add("R16", RuleScope::hermitian, "S N S window other than S*NS*, S+NS- or S-NS+",
        "SNS forcing proposition", r16_sns_forcing);
    add("R17", RuleScope::order3_only, "S*S*X, S*A*X, A*S*X or XS*N at order 3",
        "Order-3 Proposition", r17_order3);
    add("R18", RuleScope::hermitian,
        "underlying epr of shape SN...A..., or containing NSA, or ASN...A...",
        "SN...A... proposition and NSA Theorem (epr level)", r18_epr_level);
    add("R19", RuleScope::real_symmetric_only, "subsequence NXS*N",
        "NXS*N proposition for real symmetric matrices", r19_nxsn);
    add("R20", RuleScope::real_symmetric_only,
        "epr prefix ANA not matching A+NA-A-... or A-NA+ alternating",
        "ANA prefix proposition for real symmetric matrices", r20_ana_start);
    add("R21", RuleScope::real_symmetric_only, "subsequence A-NA+A+",
        "A-NA+A+ corollary for real symmetric matrices", r21_anaa);
    add("R22", RuleScope::real_symmetric_only,
        "A+NA-A+ with N at even order, or A-NA+A- with N at odd order",
        "ANA parity corollary for real symmetric matrices", r22_ana_parity);
    add("R23", RuleScope::real_symmetric_only,
        "interior epr ANA with the sequence matching neither J/kI family shape",
        "non-terminal ANA characterization for real symmetric matrices", r23_ana_interior);
    add("R24", RuleScope::order3_only, "order-3 underlying epr outside the attainable 15",
        "order-3 epr attainability (Hermitian)", r24_order3_epr);
    add("R25", RuleScope::real_symmetric_only, "order-3 underlying epr NAN",
        "NAN is Hermitian-only at order 3", r25_order3_nan_real);
    return r;
}

}  // namespace

const std::vector<Rule>& rule_catalog() {
    static const std::vector<Rule> kCatalog = build_catalog();
    return kCatalog;
}

const Rule* find_rule(std::string_view id) {
    for (const Rule& r : rule_catalog())
        if (r.id == id) return &r;
    return nullptr;
}

Verdict check_sequence(const SeprSequence& seq, MatrixClass mode) {
    if (seq.size() == 0) throw std::invalid_argument("rules: empty sequence");
    Verdict v;
    for (const Rule& r : rule_catalog()) {
        if (r.scope == RuleScope::order3_only && seq.size() != 3) continue;
        if (r.scope == RuleScope::real_symmetric_only && mode != MatrixClass::real_symmetric) continue;
        if (r.fires(seq)) v.violations.push_back(r.id);
    }
    v.status = v.violations.empty() ? VerdictStatus::rule_clean : VerdictStatus::unattainable;
    return v;
}

}  // namespace rules
}  // namespace sepr
