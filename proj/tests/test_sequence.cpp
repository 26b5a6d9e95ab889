#include <doctest.h>
#include <sepr/catalog.hpp>
#include <sepr/search.hpp>

#include <random>

using namespace sepr;

namespace {
HermitianMatrix grid(std::vector<std::vector<long long>> g) {
    std::vector<std::vector<Rational>> rows;
    for (auto& r : g) rows.emplace_back(r.begin(), r.end());
    return HermitianMatrix::real_symmetric(std::move(rows));
}
}  // namespace

TEST_CASE("sepr of the worked examples") {
    CHECK(sepr_of(MinorTable::compute(HermitianMatrix::identity(3))).str() == "A+A+A+");
    CHECK(sepr_of(MinorTable::compute(grid({{1, 1}, {1, -1}}))).str() == "A*A-");
    CHECK(sepr_of(MinorTable::compute(HermitianMatrix::zero(2))).str() == "NN");
    CHECK(sepr_of(MinorTable::compute(catalog::star_noninheritance_example())).str() ==
          "S*S-S*A+A+");
}

TEST_CASE("epr and pr of the worked examples") {
    MinorTable i3 = MinorTable::compute(HermitianMatrix::identity(3));
    CHECK(epr_of(i3).str() == "AAA");
    CHECK(pr_of(i3, false).str() == "0]111");

    MinorTable o2 = MinorTable::compute(HermitianMatrix::zero(2));
    CHECK(epr_of(o2).str() == "NN");
    CHECK(pr_of(o2, true).str() == "1]00");

    HermitianMatrix j1j2 = direct_sum(HermitianMatrix::all_ones(1), HermitianMatrix::all_ones(2));
    CHECK(epr_of(MinorTable::compute(j1j2)).str() == "ASN");
}

TEST_CASE("underlying epr erases superscripts") {
    CHECK(underlying_epr(SeprSequence::parse("A*A-")).str() == "AA");
    CHECK(underlying_epr(SeprSequence::parse("S*S-S*A+A+")).str() == "SSSAA");
    CHECK(underlying_epr(SeprSequence::parse("NN")).str() == "NN");
}

TEST_CASE("sequence negation transforms") {
    // full negative: every superscript swaps
    CHECK(neg_all(SeprSequence::parse("NS-S*A*A+")).str() == "NS+S*A*A-");
    // matrix negation: odd positions only
    CHECK(negation_law(SeprSequence::parse("A+N")).str() == "A-N");
    CHECK(negation_law(SeprSequence::parse("A+A+A+")).str() == "A-A+A-");
    CHECK(negation_law(SeprSequence::parse("NS-S*A*A+")).str() == "NS-S*A*A-");
}

TEST_CASE("inverse sequence prediction") {
    CHECK(inverse_sepr_predict(SeprSequence::parse("A+NA-")).str() == "NA-A-");
    CHECK(inverse_sepr_predict(SeprSequence::parse("A+A+A+")).str() == "A+A+A+");
    CHECK(inverse_sepr_predict(SeprSequence::parse("S*S-A+")).str() == "S-S*A+");
    CHECK_THROWS_AS(inverse_sepr_predict(SeprSequence::parse("A+N")), std::domain_error);
}

TEST_CASE("sequence parse and print") {
    CHECK(SeprSequence::parse("A+NA-").str() == "A+NA-");
    CHECK(SeprSequence::parse("A+ N A-") == SeprSequence::parse("A+NA-"));
    CHECK(SeprSequence::parse("A+,N,A-") == SeprSequence::parse("A+NA-"));
    CHECK(SeprSequence::parse("S*S-N").symbols() ==
          std::vector<SeprSymbol>{SeprSymbol::SStar, SeprSymbol::SMinus, SeprSymbol::N});
    CHECK_THROWS_WITH_AS(SeprSequence::parse("A%N"), doctest::Contains("offset 1"),
                         std::invalid_argument);
    CHECK_THROWS_AS(SeprSequence::parse(""), std::invalid_argument);
    CHECK_THROWS_AS(SeprSequence::parse("A"), std::invalid_argument);

    // round trip over random sequences
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<int> len(1, 9), sym(0, 6);
    for (int i = 0; i < 500; ++i) {
        std::vector<SeprSymbol> t;
        int n = len(rng);
        for (int k = 0; k < n; ++k) t.push_back(static_cast<SeprSymbol>(sym(rng)));
        SeprSequence s(t);
        CHECK(SeprSequence::parse(s.str()) == s);
    }
}

TEST_CASE("consistency triangle and rank lemma on random matrices") {
    for (int i = 0; i < 400; ++i) {
        search::GenSpec spec;
        spec.n = 1 + i % 5;
        spec.kind = i % 2 ? search::EntryKind::integers : search::EntryKind::rationals;
        spec.radicand = (i % 4 == 2) ? 2 : 0;
        spec.cls = (i % 3 == 0) ? MatrixClass::real_symmetric : MatrixClass::hermitian;
        spec.seed = 31;
        HermitianMatrix m = search::random_hermitian(spec, i);
        MinorTable t = MinorTable::compute(m);
        SeprSequence s = sepr_of(t);
        EprSequence e = epr_of(t);
        PrSequence p = pr_of(t, m.has_zero_diagonal_entry());

        CHECK(underlying_epr(s) == e);
        for (int k = 1; k <= spec.n; ++k) CHECK(p.r[k - 1] == (e.at(k) != EprSymbol::N));
        CHECK(is_terminal(s.at(spec.n)));

        // two consecutive Ns force N to the end
        for (int k = 1; k + 1 <= spec.n; ++k) {
            if (s.at(k) == SeprSymbol::N && s.at(k + 1) == SeprSymbol::N) {
                for (int j = k; j <= spec.n; ++j) CHECK(s.at(j) == SeprSymbol::N);
                break;
            }
        }

        // at the rank, all nonzero minors share a sign
        int r = m.rank();
        if (r >= 1) {
            CHECK(s.at(r) != SeprSymbol::AStar);
            CHECK(s.at(r) != SeprSymbol::SStar);
        }
    }
}

TEST_CASE("negation law holds on ten thousand random matrices") {
    for (int i = 0; i < 10000; ++i) {
        search::GenSpec spec;
        spec.n = 1 + i % 4;
        spec.kind = search::EntryKind::integers;
        spec.bound = 2;
        spec.radicand = (i % 5 == 3) ? 3 : 0;
        spec.cls = i % 2 ? MatrixClass::hermitian : MatrixClass::real_symmetric;
        spec.seed = 77;
        HermitianMatrix m = search::random_hermitian(spec, i);
        SeprSequence s = sepr_of(MinorTable::compute(m));
        CHECK(sepr_of(MinorTable::compute(m.negated())) == negation_law(s));
    }
}

TEST_CASE("inverse law on random nonsingular matrices") {
    int done = 0;
    for (int i = 0; done < 150 && i < 2000; ++i) {
        search::GenSpec spec;
        spec.n = 2 + i % 4;
        spec.kind = search::EntryKind::integers;
        spec.radicand = (i % 3 == 1) ? 2 : 0;
        spec.seed = 13;
        HermitianMatrix m = search::random_hermitian(spec, i);
        if (m.determinant().is_zero()) continue;
        ++done;
        CHECK(sepr_of(MinorTable::compute(m.inverse())) ==
              inverse_sepr_predict(sepr_of(MinorTable::compute(m))));
    }
    CHECK(done == 150);
}

TEST_CASE("family shapes") {
    CHECK(ana_constant_shape(5, 2).str() == "A+NA-A-A-");
    CHECK(ana_constant_shape(6, 4).str() == "A+A+A+NA-A-");
    CHECK(ana_alternating_shape(5, 3).str() == "A-A+NA-A+");
    CHECK(ana_alternating_shape(5, 2).str() == "A-NA+A-A+");
    CHECK_THROWS_AS(ana_constant_shape(4, 3), std::invalid_argument);
}
