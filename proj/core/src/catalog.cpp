#include "sepr/catalog.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace sepr::catalog {

namespace {

HermitianMatrix real_grid(std::vector<std::vector<long long>> g) {
    std::vector<std::vector<Rational>> rows;
    rows.reserve(g.size());
    for (auto& row : g) {
        std::vector<Rational> r;
        r.reserve(row.size());
        for (long long v : row) r.emplace_back(v);
        rows.push_back(std::move(r));
    }
    return HermitianMatrix::real_symmetric(std::move(rows));
}

HermitianMatrix jn_minus_k_in(int n, long long k) {
    std::vector<std::vector<long long>> g(n, std::vector<long long>(n, 1));
    for (int i = 0; i < n; ++i) g[i][i] = 1 - k;
    return real_grid(std::move(g));
}

struct Builder {
    std::vector<WitnessEntry> out;

    void add(const char* label, HermitianMatrix m, std::string how) {
        out.push_back(WitnessEntry{SeprSequence::parse(label), std::move(m), std::move(how)});
    }
    void add_neg_of(const char* label, const char* of) {
        const WitnessEntry& base = find(of);
        add(label, base.matrix.negated(), "-(" + base.construction + ")");
    }
    void add_inv_of(const char* label, const char* of) {
        const WitnessEntry& base = find(of);
        add(label, base.matrix.inverse(), "(" + base.construction + ")^-1");
    }
    const WitnessEntry& find(const char* label) const {
        SeprSequence want = SeprSequence::parse(label);
        for (const WitnessEntry& e : out)
            if (e.label == want) return e;
        throw std::logic_error(std::string("catalog: missing base entry ") + label);
    }
};

std::vector<WitnessEntry> build_entries() {
    Builder b;

    // order 1
    b.add("A+", real_grid({{1}}), "[1]");
    b.add("A-", real_grid({{-1}}), "[-1]");
    b.add("N", real_grid({{0}}), "[0]");

    // order 2
    b.add("A*A-", real_grid({{1, 1}, {1, -1}}), "M[A*A-]");
    b.add("A+A+", HermitianMatrix::identity(2), "I2");
    b.add("A+A-", real_grid({{1, 2}, {2, 1}}), "2*J2 - I2");
    b.add("A+N", HermitianMatrix::all_ones(2), "J2");
    b.add_neg_of("A-A+", "A+A+");
    b.add_neg_of("A-A-", "A+A-");
    b.add_neg_of("A-N", "A+N");
    b.add("NA-", real_grid({{0, 1}, {1, 0}}), "J2 - I2");
    b.add("NN", HermitianMatrix::zero(2), "O2");
    b.add("S+A-", real_grid({{1, 1}, {1, 0}}), "M[S+A-]");
    b.add("S+N", real_grid({{1, 0}, {0, 0}}), "diag(1,0)");
    b.add_neg_of("S-A-", "S+A-");
    b.add("S-N", real_grid({{-1, 0}, {0, 0}}), "diag(-1,0)");

    // order 3
    b.add("A*A*A+", real_grid({{1, 0, 0}, {0, -1, 0}, {0, 0, -1}}), "diag(1,-1,-1)");
    b.add("A*A*A-", real_grid({{-1, 0, 0}, {0, 1, 0}, {0, 0, 1}}), "diag(-1,1,1)");
    b.add("A*A-A+", real_grid({{1, 2, 2}, {2, 1, 2}, {2, 2, -1}}), "M[A*A-A+]");
    b.add_neg_of("A*A-A-", "A*A-A+");
    b.add_inv_of("A+A*A-", "A*A-A-");
    b.add("A+A+A+", HermitianMatrix::identity(3), "I3");
    b.add("A+A+A-", real_grid({{1, 1, -1}, {1, 2, 1}, {-1, 1, 2}}), "M[A+A+A-]");
    b.add("A+A-A+", real_grid({{1, 2, 2}, {2, 1, 2}, {2, 2, 1}}), "M[A+A-A+]");
    b.add("A+A-A-", real_grid({{1, 2, -2}, {2, 1, 2}, {-2, 2, 1}}), "M[A+A-A-]");
    b.add_neg_of("A-A*A+", "A+A*A-");
    b.add_neg_of("A-A+A+", "A+A+A-");
    b.add_neg_of("A-A+A-", "A+A+A+");
    b.add_neg_of("A-A-A+", "A+A-A-");
    b.add_neg_of("A-A-A-", "A+A-A+");
    {
        // the one witness that needs sqrt(3)
        QExt rt3 = QExt::sqrt_term(Rational(1), 3);
        std::vector<std::vector<CQExt>> g{
            {CQExt(1), CQExt(2), CQExt(0)},
            {CQExt(2), CQExt(1), CQExt(rt3)},
            {CQExt(0), CQExt(rt3), CQExt(-1)},
        };
        b.add("A*A-N", HermitianMatrix::validated(std::move(g), 3), "M[A*A-N] (sqrt(3) entry)");
    }
    b.add("A+A+N", real_grid({{2, 1, 1}, {1, 2, -1}, {1, -1, 2}}), "M[A+A+N]");
    b.add("A+A-N", real_grid({{1, 2, 2}, {2, 1, 7}, {2, 7, 1}}), "M[A+A-N]");
    b.add_neg_of("A-A+N", "A+A+N");
    b.add_neg_of("A-A-N", "A+A-N");
    b.add("A+NA-", jn_minus_k_in(3, 2).negated(), "-(J3 - 2*I3)");
    b.add("A-NA+", jn_minus_k_in(3, 2), "J3 - 2*I3");
    b.add("A+NN", HermitianMatrix::all_ones(3), "J3");
    b.add_neg_of("A-NN", "A+NN");
    b.add("A*S-A+", real_grid({{-1, -1, 0}, {-1, -1, -1}, {0, -1, 1}}), "M[A*S-A+]");
    b.add_neg_of("A*S-A-", "A*S-A+");
    b.add("A+S*A-", real_grid({{1, -2, -4}, {-2, 4, 2}, {-4, 2, 4}}), "M[A+S*A-]");
    b.add("A+S+A-", real_grid({{1, 1, 0}, {1, 1, 1}, {0, 1, 1}}), "M[A+S+A-]");
    b.add("A+S-A-", real_grid({{1, 1, 2}, {1, 1, 3}, {2, 3, 1}}), "M[A+S-A-]");
    b.add_neg_of("A-S*A+", "A+S*A-");
    b.add_neg_of("A-S+A+", "A+S+A-");
    b.add_neg_of("A-S-A+", "A+S-A-");
    b.add("A*S-N", real_grid({{-1, 0, 0}, {0, 1, 1}, {0, 1, 1}}), "M[A*S-N]");
    b.add("A+S+N", direct_sum(HermitianMatrix::all_ones(1), HermitianMatrix::all_ones(2)),
          "J1 (+) J2");
    b.add("A+S-N", real_grid({{1, 2, 2}, {2, 1, 1}, {2, 1, 1}}), "M[A+S-N]");
    b.add_neg_of("A-S+N", "A+S+N");
    b.add_neg_of("A-S-N", "A+S-N");
    b.add("NA-A+", real_grid({{0, 1, 1}, {1, 0, 1}, {1, 1, 0}}), "J3 - I3");
    b.add_neg_of("NA-A-", "NA-A+");
    {
        // Hermitian-only entry: no real witness exists for NA-N
        CQExt i_unit(QExt(0), QExt(1));
        std::vector<std::vector<CQExt>> g{
            {CQExt(0), i_unit, CQExt(1)},
            {-i_unit, CQExt(0), CQExt(1)},
            {CQExt(1), CQExt(1), CQExt(0)},
        };
        b.add("NA-N", HermitianMatrix::validated(std::move(g), 0), "M[NA-N] (complex entries)");
    }
    b.add("NNN", HermitianMatrix::zero(3), "O3");
    b.add("NS-N", real_grid({{0, 1, 0}, {1, 0, 0}, {0, 0, 0}}), "M[NS-N]");
    b.add_inv_of("S*A-A+", "A-S*A+");
    b.add_neg_of("S*A-A-", "S*A-A+");
    b.add("S+A*A-", real_grid({{2, 1, 1}, {1, 2, 2}, {1, 2, 0}}), "M[S+A*A-]");
    b.add("S+A-A+", real_grid({{1, 1, 1}, {1, 0, 1}, {1, 1, 0}}), "M[S+A-A+]");
    b.add("S+A-A-", real_grid({{2, 1, 1}, {1, 0, 2}, {1, 2, 0}}), "M[S+A-A-]");
    b.add_neg_of("S-A*A+", "S+A*A-");
    b.add_neg_of("S-A-A+", "S+A-A-");
    b.add_neg_of("S-A-A-", "S+A-A+");
    b.add("S*A-N", real_grid({{1, 0, 1}, {0, -1, 1}, {1, 1, 0}}), "M[S*A-N]");
    b.add("S+A-N", real_grid({{2, 2, 1}, {2, 0, 2}, {1, 2, 0}}), "M[S+A-N]");
    b.add_neg_of("S-A-N", "S+A-N");
    b.add("S+NN", direct_sum(HermitianMatrix::all_ones(1), HermitianMatrix::zero(2)), "J1 (+) O2");
    b.add_neg_of("S-NN", "S+NN");
    b.add("S*S-A+", real_grid({{1, 0, 1}, {0, -1, 0}, {1, 0, 0}}), "M[S*S-A+]");
    b.add_neg_of("S*S-A-", "S*S-A+");
    b.add_inv_of("S+S*A-", "S*S-A-");
    b.add("S+S-A-", real_grid({{1, 0, 0}, {0, 0, 1}, {0, 1, 0}}), "M[S+S-A-]");
    b.add_neg_of("S-S*A+", "S+S*A-");
    b.add_neg_of("S-S-A+", "S+S-A-");
    b.add("S*S-N", real_grid({{1, 0, 0}, {0, -1, 0}, {0, 0, 0}}), "diag(1,-1,0)");
    b.add("S+S+N", real_grid({{2, 1, 0}, {1, 2, 0}, {0, 0, 0}}), "M[S+S+N]");
    b.add("S+S-N", real_grid({{1, 1, 1}, {1, 0, 0}, {1, 0, 0}}), "M[S+S-N]");
    b.add_neg_of("S-S+N", "S+S+N");
    b.add_neg_of("S-S-N", "S+S-N");

    std::stable_sort(b.out.begin(), b.out.end(), [](const WitnessEntry& x, const WitnessEntry& y) {
        if (x.matrix.order() != y.matrix.order()) return x.matrix.order() < y.matrix.order();
        return x.label < y.label;
    });
    return std::move(b.out);
}

}  // namespace

const std::vector<WitnessEntry>& entries() {
    static const std::vector<WitnessEntry> kEntries = build_entries();
    return kEntries;
}

std::vector<SeprSequence> attainable_list(int n) {
    if (n < 1 || n > 3)
        throw std::domain_error("catalog: classification is only known for orders 1..3, got " +
                                std::to_string(n));
    std::vector<SeprSequence> out;
    for (const WitnessEntry& e : entries())
        if (e.matrix.order() == n) out.push_back(e.label);
    return out;  // entries() is already in canonical order per order
}

const WitnessEntry* witness(const SeprSequence& label) {
    for (const WitnessEntry& e : entries())
        if (e.label == label) return &e;
    return nullptr;
}

rules::Verdict classify(const SeprSequence& seq, MatrixClass mode) {
    rules::Verdict v = rules::check_sequence(seq, mode);
    if (v.status != rules::VerdictStatus::rule_clean) return v;
    if (seq.size() <= 3) {
        const WitnessEntry* w = witness(seq);
        if (w && (mode == MatrixClass::hermitian || w->matrix.is_real())) {
            v.status = rules::VerdictStatus::attainable_witnessed;
            v.witness_ref = w->construction;
        }
    }
    return v;
}

JkFamilyEntry jk_family(int n, int k, JkSign sign) {
    if (n < 4 || k < 2 || k > n - 2)
        throw std::invalid_argument("catalog: J/kI family needs n >= 4 and 2 <= k <= n-2");
    HermitianMatrix base = jn_minus_k_in(n, k);
    if (sign == JkSign::minus) return JkFamilyEntry{base.negated(), ana_constant_shape(n, k)};
    return JkFamilyEntry{std::move(base), ana_alternating_shape(n, k)};
}

const HermitianMatrix& star_noninheritance_example() {
    static const HermitianMatrix kExample = [] {
        auto c = [](long long re, long long im) { return CQExt(QExt(re), QExt(im)); };
        std::vector<std::vector<CQExt>> g{
            {c(1, 0), c(2, 0), c(0, 1), c(4, 0), c(0, 0)},
            {c(2, 0), c(0, 0), c(6, 0), c(1, 0), c(8, 0)},
            {c(0, -1), c(6, 0), c(1, 0), c(0, 1), c(1, 1)},
            {c(4, 0), c(1, 0), c(0, -1), c(-1, 0), c(1, 1)},
            {c(0, 0), c(8, 0), c(1, -1), c(1, -1), c(0, 0)},
        };
        return HermitianMatrix::validated(std::move(g), 0);
    }();
    return kExample;
}

CatalogReport verify_catalog(int order) {
    CatalogReport report;
    for (const WitnessEntry& e : entries()) {
        if (order != 0 && e.matrix.order() != order) continue;
        ++report.entries_checked;
        SeprSequence computed = sepr_of(MinorTable::compute(e.matrix));
        if (!(computed == e.label)) {
            report.mismatches.push_back("witness " + e.construction + " computes to " +
                                        computed.str() + ", labelled " + e.label.str());
            continue;
        }
        rules::Verdict vh = rules::check_sequence(e.label, MatrixClass::hermitian);
        if (vh.unattainable()) {
            std::string ids;
            for (const auto& id : vh.violations) ids += " " + id;
            report.mismatches.push_back("label " + e.label.str() + " fires hermitian rules:" + ids);
        }
        if (e.matrix.is_real()) {
            rules::Verdict vr = rules::check_sequence(e.label, MatrixClass::real_symmetric);
            if (vr.unattainable()) {
                std::string ids;
                for (const auto& id : vr.violations) ids += " " + id;
                report.mismatches.push_back("label " + e.label.str() +
                                            " fires real-symmetric rules:" + ids);
            }
        }
    }
    return report;
}

}  // namespace sepr::catalog
