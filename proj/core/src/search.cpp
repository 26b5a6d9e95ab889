#include "sepr/search.hpp"

#include <bit>
#include <climits>
#include <random>
#include <stdexcept>

namespace sepr::search {

std::string_view to_string(EntryKind k) {
    switch (k) {
        case EntryKind::integers: return "integer";
        case EntryKind::gaussian_integers: return "gaussian";
        case EntryKind::rationals: return "rational";
    }
    return "?";
}

EntryKind entry_kind_from_string(std::string_view s) {
    if (s == "integer" || s == "integers") return EntryKind::integers;
    if (s == "gaussian" || s == "gaussian-integers") return EntryKind::gaussian_integers;
    if (s == "rational" || s == "rationals") return EntryKind::rationals;
    throw std::invalid_argument("unknown entry kind '" + std::string(s) + "'");
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

long long isqrt_floor(long long v) {
    long long s = 0;
    while ((s + 1) * (s + 1) <= v) ++s;
    return s;
}

// bounded draw straight off the engine stream; mt19937_64 output is fully
// specified, so identical seeds reproduce identical matrices on every
// platform (uniform_int_distribution would not guarantee that)
long long draw(std::mt19937_64& rng, long long lo, long long hi) {
    std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
    std::uint64_t v = rng();
    while (v >= limit) v = rng();
    return lo + static_cast<long long>(v % span);
}

// one real coordinate a + b*sqrt(d) from the generator's entry domain
QExt draw_qext(std::mt19937_64& rng, const GenSpec& spec) {
    switch (spec.kind) {
        case EntryKind::integers: {
            Rational a(draw(rng, -spec.bound, spec.bound));
            if (spec.radicand >= 2)
                return QExt(a, Rational(draw(rng, -1, 1)), spec.radicand);
            return QExt(a);
        }
        case EntryKind::gaussian_integers:
            return QExt(Rational(draw(rng, -spec.bound, spec.bound)));
        case EntryKind::rationals: {
            Rational a(BigInt(draw(rng, -spec.bound, spec.bound)),
                       BigInt(draw(rng, 1, std::max(1, spec.den_max))));
            if (spec.radicand >= 2) {
                Rational b(BigInt(draw(rng, -1, 1)), BigInt(draw(rng, 1, std::max(1, spec.den_max))));
                return QExt(a, b, spec.radicand);
            }
            return QExt(a);
        }
    }
    return QExt();
}

CQExt draw_offdiag(std::mt19937_64& rng, const GenSpec& spec) {
    if (spec.cls == MatrixClass::real_symmetric) return CQExt(draw_qext(rng, spec));
    if (spec.kind == EntryKind::gaussian_integers) {
        long long s = isqrt_floor(spec.bound);
        while (true) {
            long long re = draw(rng, -s, s);
            long long im = draw(rng, -s, s);
            if (re * re + im * im <= spec.bound) return CQExt(QExt(Rational(re)), QExt(Rational(im)));
        }
    }
    return CQExt(draw_qext(rng, spec), draw_qext(rng, spec));
}

QExt draw_diag(std::mt19937_64& rng, const GenSpec& spec) {
    if (spec.kind == EntryKind::gaussian_integers) {
        long long s = isqrt_floor(spec.bound);
        return QExt(Rational(draw(rng, -s, s)));
    }
    return draw_qext(rng, spec);
}

}  // namespace

HermitianMatrix random_hermitian(const GenSpec& spec, std::uint64_t index) {
    if (spec.n < 1) throw std::invalid_argument("search: order must be positive");
    if (spec.bound < 0) throw std::invalid_argument("search: empty entry domain");
    std::mt19937_64 rng(splitmix64(spec.seed ^ splitmix64(index)));
    int n = spec.n;
    std::vector<std::vector<CQExt>> g(n, std::vector<CQExt>(n));
    for (int i = 0; i < n; ++i) {
        g[i][i] = CQExt(draw_diag(rng, spec));
        for (int j = i + 1; j < n; ++j) {
            CQExt z = draw_offdiag(rng, spec);
            g[i][j] = z;
            g[j][i] = z.conj();
        }
    }
    return HermitianMatrix::validated(std::move(g), spec.radicand >= 2 ? spec.radicand : 0);
}

bool CheckReport::all_pass() const {
    for (const CheckItem& c : items)
        if (c.failure) return false;
    return true;
}

std::uint64_t CheckReport::total_cases() const {
    std::uint64_t t = 0;
    for (const CheckItem& c : items) t += c.cases;
    return t;
}

std::string CheckReport::summary() const {
    std::string s;
    for (const CheckItem& c : items) {
        s += c.name + ": " + (c.failure ? "FAIL (" + *c.failure + ")" : "pass") + ", " +
             std::to_string(c.cases) + " cases\n";
    }
    return s;
}

namespace {

// position of bit `b` among the set bits of `mask`
int bit_rank(std::uint32_t mask, int b) {
    return std::popcount(mask & ((1u << b) - 1u));
}

// map a subset of B's indices into the row space of a matrix holding only
// the rows of `kept`
std::uint32_t remap_mask(std::uint32_t subset, std::uint32_t kept) {
    std::uint32_t out = 0;
    for (int b = 0; b < 32; ++b) {
        if (subset & (1u << b)) out |= 1u << bit_rank(kept, b);
    }
    return out;
}

HermitianMatrix matrix_product_check(const HermitianMatrix& a, const HermitianMatrix& b);

}  // namespace

CheckReport check_identities(const HermitianMatrix& m) {
    CheckReport rep;
    const int n = m.order();
    const std::uint32_t full = (1u << n) - 1;
    const MinorTable table = MinorTable::compute(m);

    CheckItem muir{"muir-extensible-minors", 0, std::nullopt};
    for (int i = 0; i < n && !muir.failure; ++i) {
        for (int j = i + 1; j < n && !muir.failure; ++j) {
            std::uint32_t rest = full & ~(1u << i) & ~(1u << j);
            // all subsets I of the remaining indices, empty included
            std::uint32_t I = 0;
            while (true) {
                ++muir.cases;
                QExt lhs = table.value(I) * table.value(I | (1u << i) | (1u << j));
                CQExt off = m.offdiagonal_minor(I | (1u << i), I | (1u << j));
                QExt rhs = table.value(I | (1u << i)) * table.value(I | (1u << j)) - off.norm_sq();
                if (!(lhs == rhs)) {
                    muir.failure = "I mask=" + std::to_string(I) + " i=" + std::to_string(i + 1) +
                                   " j=" + std::to_string(j + 1);
                    break;
                }
                if (I == rest) break;
                I = (I - rest) & rest;  // next subset of rest
            }
        }
    }
    rep.items.push_back(std::move(muir));

    CheckItem quot{"schur-quotient", 0, std::nullopt};
    CheckItem rankdrop{"schur-rank-drop", 0, std::nullopt};
    CheckItem eprcor{"schur-epr-corollary", 0, std::nullopt};
    int rank_b = m.rank();
    const EprSequence be = epr_of(table);
    for (std::uint32_t alpha = 1; alpha < full && !quot.failure && !rankdrop.failure; ++alpha) {
        if (table.sign(alpha) == 0) continue;  // pivot block must be nonsingular
        HermitianMatrix c = m.schur_complement(alpha);
        std::uint32_t comp = full & ~alpha;
        for (std::uint32_t g = comp; g; g = (g - 1) & comp) {
            ++quot.cases;
            QExt lhs = c.principal_submatrix(remap_mask(g, comp)).determinant() * table.value(alpha);
            if (!(lhs == table.value(g | alpha))) {
                quot.failure = "alpha mask=" + std::to_string(alpha) + " gamma mask=" + std::to_string(g);
                break;
            }
        }
        ++rankdrop.cases;
        if (c.rank() != rank_b - std::popcount(alpha)) {
            rankdrop.failure = "alpha mask=" + std::to_string(alpha);
        }
        EprSequence ce = epr_of(MinorTable::compute(c));
        int k = std::popcount(alpha);
        for (int j = 1; j <= ce.size(); ++j) {
            EprSymbol parent = be.at(j + k);
            if (parent == EprSymbol::A || parent == EprSymbol::N) {
                ++eprcor.cases;
                if (ce.at(j) != parent) {
                    eprcor.failure =
                        "alpha mask=" + std::to_string(alpha) + " j=" + std::to_string(j);
                    break;
                }
            }
        }
    }
    rep.items.push_back(std::move(quot));
    rep.items.push_back(std::move(rankdrop));
    rep.items.push_back(std::move(eprcor));

    CheckItem jacobi{"jacobi-inverse", 0, std::nullopt};
    if (table.sign(full) != 0) {
        HermitianMatrix inv = m.inverse();
        MinorTable it = MinorTable::compute(inv);
        if (!(matrix_product_check(m, inv) == HermitianMatrix::identity(n))) {
            jacobi.failure = "B * inverse(B) != I";
        }
        QExt det_b = table.value(full);
        for (std::uint32_t a = 1; a <= full && !jacobi.failure; ++a) {
            ++jacobi.cases;
            // det B^{-1}[a] * det B = det B[complement of a]
            if (!(it.value(a) * det_b == table.value(full & ~a))) {
                jacobi.failure = "alpha mask=" + std::to_string(a);
            }
        }
        if (!jacobi.failure) {
            ++jacobi.cases;
            if (!(sepr_of(it) == inverse_sepr_predict(sepr_of(table))))
                jacobi.failure = "sepr of inverse differs from the reversal prediction";
        }
    }
    rep.items.push_back(std::move(jacobi));

    CheckItem negl{"negation-law", 1, std::nullopt};
    if (!(sepr_of(MinorTable::compute(m.negated())) == negation_law(sepr_of(table))))
        negl.failure = "sepr of -B differs from the odd-position prediction";
    rep.items.push_back(std::move(negl));

    return rep;
}

namespace {

HermitianMatrix matrix_product_check(const HermitianMatrix& a, const HermitianMatrix& b) {
    int n = a.order();
    std::vector<std::vector<CQExt>> g(n, std::vector<CQExt>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            CQExt acc(0);
            for (int k = 0; k < n; ++k) acc += a.at(i, k) * b.at(k, j);
            g[i][j] = acc;
        }
    // the product of a matrix and its exact inverse is Hermitian (it is I)
    return HermitianMatrix::validated(std::move(g), a.radicand());
}

bool symbol_in(SeprSymbol s, std::initializer_list<SeprSymbol> set) {
    for (SeprSymbol x : set)
        if (s == x) return true;
    return false;
}

}  // namespace

CheckReport check_inheritance(const HermitianMatrix& m) {
    using S = SeprSymbol;
    CheckReport rep;
    const int n = m.order();
    const std::uint32_t full = (1u << n) - 1;
    const MinorTable table = MinorTable::compute(m);
    const SeprSequence sb = sepr_of(table);

    // sepr of every principal submatrix, indexed by subset mask
    std::vector<SeprSequence> sub(full + 1);
    for (std::uint32_t a = 1; a <= full; ++a) sub[a] = sepr_of_submatrix(table, a);

    CheckItem fixed{"inheritance-fixed-symbols", 0, std::nullopt};   // statements 1-3
    CheckItem at_m{"inheritance-at-order-m", 0, std::nullopt};       // statements 4-7
    CheckItem interior{"inheritance-interior", 0, std::nullopt};     // statements 8-13

    for (int msize = 1; msize <= n && !fixed.failure && !at_m.failure && !interior.failure; ++msize) {
        std::vector<std::uint32_t> masks;
        for (std::uint32_t a = 1; a <= full; ++a)
            if (std::popcount(a) == msize) masks.push_back(a);

        for (int i = 1; i <= msize; ++i) {
            S t = sb.at(i);
            if (symbol_in(t, {S::N, S::APlus, S::AMinus})) {
                ++fixed.cases;
                for (std::uint32_t a : masks) {
                    if (sub[a].at(i) != t) {
                        fixed.failure = "i=" + std::to_string(i) + " m=" + std::to_string(msize);
                        break;
                    }
                }
            }
        }

        auto exists_at = [&](int pos, std::initializer_list<S> wanted) {
            for (std::uint32_t a : masks)
                if (symbol_in(sub[a].at(pos), wanted)) return true;
            return false;
        };

        S tm = sb.at(msize);
        if (tm == S::AStar || tm == S::SPlus || tm == S::SMinus || tm == S::SStar) {
            ++at_m.cases;
            bool ok = true;
            if (tm == S::AStar)
                ok = exists_at(msize, {S::APlus}) && exists_at(msize, {S::AMinus});
            else if (tm == S::SPlus)
                ok = exists_at(msize, {S::APlus}) && exists_at(msize, {S::N});
            else if (tm == S::SMinus)
                ok = exists_at(msize, {S::AMinus}) && exists_at(msize, {S::N});
            else
                ok = exists_at(msize, {S::APlus}) && exists_at(msize, {S::AMinus}) &&
                     exists_at(msize, {S::N});
            if (!ok) at_m.failure = "m=" + std::to_string(msize) + " symbol " + std::string(token(tm));
        }

        for (int i = 1; i < msize; ++i) {
            S t = sb.at(i);
            if (t == S::AStar || t == S::SPlus || t == S::SMinus) {
                ++interior.cases;
                if (!exists_at(i, {t})) {
                    interior.failure = "i=" + std::to_string(i) + " m=" + std::to_string(msize) +
                                       " symbol " + std::string(token(t));
                    break;
                }
            } else if (t == S::SStar) {
                ++interior.cases;
                bool ok = exists_at(i, {S::SStar, S::SPlus, S::SMinus}) &&
                          exists_at(i, {S::AStar, S::SStar, S::SPlus}) &&
                          exists_at(i, {S::AStar, S::SStar, S::SMinus});
                if (!ok) {
                    interior.failure =
                        "i=" + std::to_string(i) + " m=" + std::to_string(msize) + " symbol S*";
                    break;
                }
            }
        }
    }
    rep.items.push_back(std::move(fixed));
    rep.items.push_back(std::move(at_m));
    rep.items.push_back(std::move(interior));
    return rep;
}

EnumerationReport enumerate_candidates(int n, MatrixClass mode, int cap) {
    if (n < 1) throw std::invalid_argument("search: order must be positive");
    if (n > cap)
        throw std::invalid_argument("search: order " + std::to_string(n) +
                                    " exceeds the enumeration cap of " + std::to_string(cap));
    EnumerationReport rep;
    rep.n = n;
    rep.mode = mode;

    static constexpr SeprSymbol kAll[] = {SeprSymbol::AStar, SeprSymbol::APlus, SeprSymbol::AMinus,
                                          SeprSymbol::N,     SeprSymbol::SStar, SeprSymbol::SPlus,
                                          SeprSymbol::SMinus};
    static constexpr SeprSymbol kTerminal[] = {SeprSymbol::APlus, SeprSymbol::AMinus, SeprSymbol::N};

    std::vector<int> odo(n, 0);
    while (true) {
        std::vector<SeprSymbol> symbols(n);
        for (int i = 0; i + 1 < n; ++i) symbols[i] = kAll[odo[i]];
        symbols[n - 1] = kTerminal[odo[n - 1]];
        // terminal symbols iterate in canonical order already (A+ < A- < N)
        SeprSequence seq(std::move(symbols));
        ++rep.universe;

        rules::Verdict v = rules::check_sequence(seq, mode);
        if (v.unattainable()) {
            rep.unattainable.emplace_back(std::move(seq), std::move(v.violations));
        } else if (n <= 3) {
            const catalog::WitnessEntry* w = catalog::witness(seq);
            if (w && (mode == MatrixClass::hermitian || w->matrix.is_real()))
                rep.attainable.push_back(std::move(seq));
            else
                rep.rule_clean_unwitnessed.push_back(std::move(seq));
        } else {
            rep.rule_clean_unwitnessed.push_back(std::move(seq));
        }

        // odometer: last position over terminals, the rest over all symbols
        int pos = n - 1;
        while (pos >= 0) {
            int limit = (pos == n - 1) ? 3 : 7;
            if (++odo[pos] < limit) break;
            odo[pos] = 0;
            --pos;
        }
        if (pos < 0) break;
    }

    std::sort(rep.attainable.begin(), rep.attainable.end());
    std::sort(rep.rule_clean_unwitnessed.begin(), rep.rule_clean_unwitnessed.end());
    std::sort(rep.unattainable.begin(), rep.unattainable.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    return rep;
}

std::uint64_t exhaustive_lattice_size(const GenSpec& spec) {
    // values per diagonal slot and per off-diagonal slot
    std::uint64_t diag = 0, off = 0;
    long long s = isqrt_floor(std::max(0, spec.bound));
    switch (spec.kind) {
        case EntryKind::integers:
            diag = off = static_cast<std::uint64_t>(2 * spec.bound + 1);
            break;
        case EntryKind::gaussian_integers: {
            diag = static_cast<std::uint64_t>(2 * s + 1);
            std::uint64_t cnt = 0;
            for (long long re = -s; re <= s; ++re)
                for (long long im = -s; im <= s; ++im)
                    if (re * re + im * im <= spec.bound) ++cnt;
            off = (spec.cls == MatrixClass::real_symmetric) ? diag : cnt;
            break;
        }
        case EntryKind::rationals:
            diag = off = static_cast<std::uint64_t>(2 * spec.bound + 1) *
                         static_cast<std::uint64_t>(std::max(1, spec.den_max));
            break;
    }
    if (spec.cls == MatrixClass::hermitian && spec.kind != EntryKind::gaussian_integers)
        off = off * off;  // independent real and imaginary parts
    std::uint64_t total = 1;
    int offs = spec.n * (spec.n - 1) / 2;
    for (int i = 0; i < spec.n; ++i) total *= diag;
    for (int i = 0; i < offs; ++i) total *= off;
    return total;
}

namespace {

// value lists for the exhaustive odometer
std::vector<QExt> diag_values(const GenSpec& spec) {
    std::vector<QExt> v;
    if (spec.kind == EntryKind::gaussian_integers) {
        long long s = isqrt_floor(spec.bound);
        for (long long a = -s; a <= s; ++a) v.emplace_back(Rational(a));
        return v;
    }
    if (spec.kind == EntryKind::integers) {
        for (long long a = -spec.bound; a <= spec.bound; ++a) v.emplace_back(Rational(a));
        return v;
    }
    for (long long den = 1; den <= std::max(1, spec.den_max); ++den)
        for (long long num = -spec.bound; num <= spec.bound; ++num)
            v.emplace_back(Rational(BigInt(num), BigInt(den)));
    return v;
}

std::vector<CQExt> offdiag_values(const GenSpec& spec) {
    std::vector<CQExt> v;
    if (spec.cls == MatrixClass::real_symmetric) {
        for (const QExt& q : diag_values(spec)) v.emplace_back(q);
        return v;
    }
    if (spec.kind == EntryKind::gaussian_integers) {
        long long s = isqrt_floor(spec.bound);
        for (long long re = -s; re <= s; ++re)
            for (long long im = -s; im <= s; ++im)
                if (re * re + im * im <= spec.bound)
                    v.emplace_back(QExt(Rational(re)), QExt(Rational(im)));
        return v;
    }
    std::vector<QExt> reals = diag_values(spec);
    for (const QExt& re : reals)
        for (const QExt& im : reals) v.emplace_back(re, im);
    return v;
}

}  // namespace

std::optional<HermitianMatrix> search_witness(const SeprSequence& target, const GenSpec& spec,
                                              std::uint64_t budget, bool exhaustive) {
    if (target.size() != spec.n)
        throw std::invalid_argument("search: target length differs from the matrix order");
    const int n = spec.n;
    if (!exhaustive) {
        for (std::uint64_t i = 0; i < budget; ++i) {
            HermitianMatrix m = random_hermitian(spec, i);
            if (sepr_of(MinorTable::compute(m)) == target) return m;
        }
        return std::nullopt;
    }

    // exhaustive walk over diagonal slots then upper-triangle slots
    std::vector<QExt> dv = diag_values(spec);
    std::vector<CQExt> ov = offdiag_values(spec);
    if (dv.empty() || (n > 1 && ov.empty()))
        throw std::invalid_argument("search: empty entry domain");
    int offs = n * (n - 1) / 2;
    std::vector<std::size_t> odo(n + offs, 0);
    std::uint64_t visited = 0;
    while (visited < budget) {
        ++visited;
        std::vector<std::vector<CQExt>> g(n, std::vector<CQExt>(n));
        for (int i = 0; i < n; ++i) g[i][i] = CQExt(dv[odo[i]]);
        int slot = n;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                const CQExt& z = ov[odo[slot++]];
                g[i][j] = z;
                g[j][i] = z.conj();
            }
        HermitianMatrix m =
            HermitianMatrix::validated(std::move(g), spec.radicand >= 2 ? spec.radicand : 0);
        if (sepr_of(MinorTable::compute(m)) == target) return m;

        int pos = static_cast<int>(odo.size()) - 1;
        while (pos >= 0) {
            std::size_t limit = pos < n ? dv.size() : ov.size();
            if (++odo[pos] < limit) break;
            odo[pos] = 0;
            --pos;
        }
        if (pos < 0) break;  // lattice exhausted
    }
    return std::nullopt;
}

}  // namespace sepr::search
