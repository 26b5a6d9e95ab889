#include <sepr/catalog.hpp>
#include <sepr/search.hpp>

#include <bit>
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

/*
 * Acceptance suite: one criterion per run_criterion call, one PASS/FAIL line
 * each, nonzero exit when anything fails. Every tolerance is exact equality;
 * the wall-clock budgets are part of the criteria and are enforced.
 */

using namespace sepr;

namespace {

int g_failures = 0;

void run_criterion(int number, const std::string& title, double budget_seconds,
                   const std::function<std::string()>& body) {
    auto t0 = std::chrono::steady_clock::now();
    std::string problem;
    try {
        problem = body();
    } catch (const std::exception& e) {
        problem = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (problem.empty() && secs > budget_seconds)
        problem = "exceeded the " + std::to_string(budget_seconds) + " s budget";
    if (problem.empty()) {
        std::printf("PASS criterion %d: %s (%.2f s)\n", number, title.c_str(), secs);
    } else {
        ++g_failures;
        std::printf("FAIL criterion %d: %s (%.2f s) -- %s\n", number, title.c_str(), secs,
                    problem.c_str());
    }
    std::fflush(stdout);
}

std::string criterion_tables() {
    auto rep = catalog::verify_catalog();
    if (rep.entries_checked != 81)
        return "expected 81 entries, saw " + std::to_string(rep.entries_checked);
    if (!rep.ok()) return std::to_string(rep.mismatches.size()) + " mismatches: " + rep.mismatches[0];
    return {};
}

std::string criterion_classification() {
    const std::size_t expected[] = {0, 3, 13, 65};
    for (int n = 1; n <= 3; ++n) {
        auto rep = search::enumerate_candidates(n, MatrixClass::hermitian);
        if (rep.attainable.size() != expected[n])
            return "order " + std::to_string(n) + ": " + std::to_string(rep.attainable.size()) +
                   " attainable, expected " + std::to_string(expected[n]);
        if (n == 2 && rep.universe != 21)
            return "order 2 universe " + std::to_string(rep.universe) + ", expected 21";
        if (!rep.rule_clean_unwitnessed.empty())
            return "order " + std::to_string(n) + ": rule-clean sequence without witness: " +
                   rep.rule_clean_unwitnessed.front().str();
        if (rep.attainable != catalog::attainable_list(n))
            return "order " + std::to_string(n) + ": enumeration disagrees with the witness list";
    }
    return {};
}

std::string criterion_identities() {
    const long long radicands[] = {0, 2, 3};
    int trials = 0;
    for (int i = 0; i < 1000; ++i) {
        search::GenSpec spec;
        spec.n = 2 + i % 4;  // orders 2..5
        spec.kind = search::EntryKind::rationals;
        spec.bound = 2;
        spec.den_max = 2;
        spec.cls = MatrixClass::hermitian;
        spec.radicand = radicands[i % 3];
        spec.seed = 20240601;
        HermitianMatrix m = search::random_hermitian(spec, i);
        auto rep = search::check_identities(m);
        ++trials;
        if (!rep.all_pass()) {
            for (const auto& item : rep.items)
                if (item.failure)
                    return "trial " + std::to_string(i) + ", " + item.name + ": " + *item.failure;
        }
    }
    if (trials < 1000) return "only " + std::to_string(trials) + " trials ran";
    return {};
}

std::string criterion_rule_soundness() {
    for (int i = 0; i < 10000; ++i) {
        search::GenSpec spec;
        spec.n = 2 + i % 5;  // orders 2..6
        spec.cls = (i % 2 == 0) ? MatrixClass::hermitian : MatrixClass::real_symmetric;
        spec.kind = (i % 3 == 0)   ? search::EntryKind::integers
                    : (i % 3 == 1) ? search::EntryKind::gaussian_integers
                                   : search::EntryKind::rationals;
        spec.bound = 2;
        spec.den_max = 2;
        spec.radicand = (i % 4 == 3) ? ((i % 8 == 7) ? 3 : 2) : 0;
        spec.seed = 987654321;
        HermitianMatrix m = search::random_hermitian(spec, i);
        SeprSequence s = sepr_of(MinorTable::compute(m));
        rules::Verdict v = rules::check_sequence(s, spec.cls);
        if (v.unattainable()) {
            std::string ids;
            for (const auto& id : v.violations) ids += " " + id;
            return "trial " + std::to_string(i) + ": computed " + s.str() + " fired" + ids;
        }
    }
    return {};
}

std::string criterion_ana_family() {
    for (int n = 4; n <= 10; ++n) {
        for (int k = 2; k <= n - 2; ++k) {
            for (auto sign : {catalog::JkSign::minus, catalog::JkSign::plus}) {
                auto fam = catalog::jk_family(n, k, sign);
                MinorTable table = MinorTable::compute(fam.matrix);
                SeprSequence got = sepr_of(table);
                if (!(got == fam.predicted))
                    return "n=" + std::to_string(n) + " k=" + std::to_string(k) + " sign " +
                           (sign == catalog::JkSign::minus ? "-" : "+") + ": computed " + got.str() +
                           ", predicted " + fam.predicted.str();
                if (sign == catalog::JkSign::minus) {
                    // every order-q principal minor of -(J - kI) is k^(q-1) (k-q)
                    for (std::uint32_t mask = 1; mask <= table.full_mask(); ++mask) {
                        int q = std::popcount(mask);
                        BigInt expect = 1;
                        for (int e = 1; e < q; ++e) expect *= k;
                        expect *= (k - q);
                        if (!(table.value(mask) == QExt(Rational(expect))))
                            return "n=" + std::to_string(n) + " k=" + std::to_string(k) +
                                   ": minor at mask " + std::to_string(mask) +
                                   " differs from the closed form";
                    }
                }
            }
        }
    }
    return {};
}

std::string criterion_noninheritance() {
    const HermitianMatrix& b = catalog::star_noninheritance_example();
    MinorTable table = MinorTable::compute(b);
    SeprSequence s = sepr_of(table);
    if (s.str() != "S*S-S*A+A+") return "computed " + s.str() + ", expected S*S-S*A+A+";
    for (int drop = 0; drop < 5; ++drop) {
        SeprSequence sub = sepr_of_submatrix(table, 31u & ~(1u << drop));
        if (sub.at(3) == SeprSymbol::SStar)
            return "submatrix dropping index " + std::to_string(drop + 1) +
                   " inherits S* in position 3 (" + sub.str() + ")";
    }
    return {};
}

std::string criterion_catalog_closure() {
    for (const auto& e : catalog::entries()) {
        MinorTable table = MinorTable::compute(e.matrix);
        SeprSequence neg = sepr_of(MinorTable::compute(e.matrix.negated()));
        if (!(neg == negation_law(e.label)))
            return e.label.str() + ": negation computes " + neg.str() + ", transform predicts " +
                   negation_law(e.label).str();
        if (table.sign(table.full_mask()) != 0) {
            SeprSequence inv = sepr_of(MinorTable::compute(e.matrix.inverse()));
            if (!(inv == inverse_sepr_predict(e.label)))
                return e.label.str() + ": inverse computes " + inv.str() + ", prediction " +
                       inverse_sepr_predict(e.label).str();
        }
    }
    return {};
}

}  // namespace

int main() {
    run_criterion(1, "witness tables recompute to their labels (81 entries)", 1.0,
                  criterion_tables);
    run_criterion(2, "candidate screening reproduces the 3/13/65 classification", 5.0,
                  criterion_classification);
    run_criterion(3, "determinantal identities hold on 1000 random matrices", 60.0,
                  criterion_identities);
    run_criterion(4, "no rule fires on 10000 computed sequences", 120.0, criterion_rule_soundness);
    run_criterion(5, "J/kI family matches its closed-form minors and shapes", 30.0,
                  criterion_ana_family);
    run_criterion(6, "5x5 example: sepr and the non-inherited S*", 1.0, criterion_noninheritance);
    run_criterion(7, "negation/inverse closure over the whole catalog", 30.0,
                  criterion_catalog_closure);
    if (g_failures == 0)
        std::printf("acceptance: all 7 criteria hold\n");
    else
        std::printf("acceptance: %d criteria FAILED\n", g_failures);
    return g_failures;
}
