#include "sepr/sequence.hpp"

#include <bit>
#include <stdexcept>

namespace sepr {

std::string_view token(SeprSymbol s) {
    switch (s) {
        case SeprSymbol::AStar: return "A*";
        case SeprSymbol::APlus: return "A+";
        case SeprSymbol::AMinus: return "A-";
        case SeprSymbol::N: return "N";
        case SeprSymbol::SStar: return "S*";
        case SeprSymbol::SPlus: return "S+";
        case SeprSymbol::SMinus: return "S-";
    }
    return "?";
}

char token(EprSymbol s) {
    switch (s) {
        case EprSymbol::A: return 'A';
        case EprSymbol::S: return 'S';
        case EprSymbol::N: return 'N';
    }
    return '?';
}

bool is_terminal(SeprSymbol s) {
    return s == SeprSymbol::APlus || s == SeprSymbol::AMinus || s == SeprSymbol::N;
}

SeprSymbol neg(SeprSymbol s) {
    switch (s) {
        case SeprSymbol::APlus: return SeprSymbol::AMinus;
        case SeprSymbol::AMinus: return SeprSymbol::APlus;
        case SeprSymbol::SPlus: return SeprSymbol::SMinus;
        case SeprSymbol::SMinus: return SeprSymbol::SPlus;
        default: return s;  // A*, S*, N are self-negative
    }
}

EprSymbol underlying(SeprSymbol s) {
    switch (s) {
        case SeprSymbol::AStar:
        case SeprSymbol::APlus:
        case SeprSymbol::AMinus: return EprSymbol::A;
        case SeprSymbol::N: return EprSymbol::N;
        default: return EprSymbol::S;
    }
}

SeprSequence SeprSequence::parse(std::string_view text) {
    std::vector<SeprSymbol> out;
    std::size_t i = 0;
    while (i < text.size()) {
        char c = text[i];
        if (c == ' ' || c == '\t' || c == ',') {
            ++i;
            continue;
        }
        if (c == 'N') {
            out.push_back(SeprSymbol::N);
            ++i;
            continue;
        }
        if (c == 'A' || c == 'S') {
            if (i + 1 >= text.size())
                throw std::invalid_argument("sequence: truncated token at offset " +
                                            std::to_string(i) + " in \"" + std::string(text) +
                                            "\" (A and S need *, + or -)");
            char m = text[i + 1];
            if (m == '*' || m == '+' || m == '-') {
                if (c == 'A')
                    out.push_back(m == '*' ? SeprSymbol::AStar
                                           : (m == '+' ? SeprSymbol::APlus : SeprSymbol::AMinus));
                else
                    out.push_back(m == '*' ? SeprSymbol::SStar
                                           : (m == '+' ? SeprSymbol::SPlus : SeprSymbol::SMinus));
                i += 2;
                continue;
            }
            throw std::invalid_argument("sequence: unknown token at offset " + std::to_string(i + 1) +
                                        " in \"" + std::string(text) + "\"");
        }
        throw std::invalid_argument("sequence: unknown token at offset " + std::to_string(i) +
                                    " in \"" + std::string(text) + "\"");
    }
    if (out.empty()) throw std::invalid_argument("sequence: empty input");
    return SeprSequence(std::move(out));
}

std::string SeprSequence::str() const {
    std::string s;
    for (SeprSymbol t : t_) s += token(t);
    return s;
}

EprSequence EprSequence::parse(std::string_view text) {
    std::vector<EprSymbol> out;
    for (std::size_t i = 0; i < text.size(); ++i) {
        char c = text[i];
        if (c == ' ' || c == ',') continue;
        if (c == 'A')
            out.push_back(EprSymbol::A);
        else if (c == 'S')
            out.push_back(EprSymbol::S);
        else if (c == 'N')
            out.push_back(EprSymbol::N);
        else
            throw std::invalid_argument("sequence: unknown epr token at offset " + std::to_string(i));
    }
    if (out.empty()) throw std::invalid_argument("sequence: empty input");
    return EprSequence(std::move(out));
}

std::string EprSequence::str() const {
    std::string s;
    for (EprSymbol l : l_) s += token(l);
    return s;
}

std::string PrSequence::str() const {
    std::string s = r0 ? "1]" : "0]";
    for (bool b : r) s += b ? '1' : '0';
    return s;
}

namespace {

struct SignSummary {
    bool pos = false, negv = false, zero = false;
};

SeprSymbol classify(const SignSummary& s) {
    if (!s.pos && !s.negv) return SeprSymbol::N;
    if (!s.zero) {
        if (s.pos && s.negv) return SeprSymbol::AStar;
        return s.pos ? SeprSymbol::APlus : SeprSymbol::AMinus;
    }
    if (s.pos && s.negv) return SeprSymbol::SStar;
    return s.pos ? SeprSymbol::SPlus : SeprSymbol::SMinus;
}

}  // namespace

SeprSequence sepr_of(const MinorTable& minors) {
    int n = minors.order();
    std::vector<SignSummary> acc(n + 1);
    for (std::uint32_t mask = 1; mask <= minors.full_mask(); ++mask) {
        int k = std::popcount(mask);
        int s = minors.sign(mask);
        if (s > 0)
            acc[k].pos = true;
        else if (s < 0)
            acc[k].negv = true;
        else
            acc[k].zero = true;
    }
    std::vector<SeprSymbol> t;
    t.reserve(n);
    for (int k = 1; k <= n; ++k) t.push_back(classify(acc[k]));
    return SeprSequence(std::move(t));
}

SeprSequence sepr_of_submatrix(const MinorTable& minors, std::uint32_t alpha) {
    int m = std::popcount(alpha);
    if (m == 0) throw std::invalid_argument("sequence: empty submatrix index set");
    std::vector<SignSummary> acc(m + 1);
    // enumerate the nonempty submasks of alpha
    for (std::uint32_t sub = alpha;; sub = (sub - 1) & alpha) {
        if (sub != 0) {
            int k = std::popcount(sub);
            int s = minors.sign(sub);
            if (s > 0)
                acc[k].pos = true;
            else if (s < 0)
                acc[k].negv = true;
            else
                acc[k].zero = true;
        }
        if (sub == 0) break;
    }
    std::vector<SeprSymbol> t;
    t.reserve(m);
    for (int k = 1; k <= m; ++k) t.push_back(classify(acc[k]));
    return SeprSequence(std::move(t));
}

EprSequence epr_of(const MinorTable& minors) {
    SeprSequence s = sepr_of(minors);
    return underlying_epr(s);
}

PrSequence pr_of(const MinorTable& minors, bool has_zero_diagonal) {
    int n = minors.order();
    PrSequence pr;
    pr.r0 = has_zero_diagonal;
    pr.r.assign(n, false);
    for (std::uint32_t mask = 1; mask <= minors.full_mask(); ++mask) {
        if (minors.sign(mask) != 0) pr.r[std::popcount(mask) - 1] = true;
    }
    return pr;
}

EprSequence underlying_epr(const SeprSequence& s) {
    std::vector<EprSymbol> l;
    l.reserve(s.size());
    for (SeprSymbol t : s.symbols()) l.push_back(underlying(t));
    return EprSequence(std::move(l));
}

SeprSequence neg_all(const SeprSequence& s) {
    std::vector<SeprSymbol> t;
    t.reserve(s.size());
    for (SeprSymbol x : s.symbols()) t.push_back(neg(x));
    return SeprSequence(std::move(t));
}

SeprSequence negation_law(const SeprSequence& s) {
    std::vector<SeprSymbol> t = s.symbols();
    for (int pos = 1; pos <= s.size(); pos += 2) t[pos - 1] = neg(t[pos - 1]);
    return SeprSequence(std::move(t));
}

SeprSequence inverse_sepr_predict(const SeprSequence& s) {
    int n = s.size();
    SeprSymbol last = s.at(n);
    if (last == SeprSymbol::N)
        throw std::domain_error("sequence: no inverse prediction for a singular sequence (ends in N)");
    if (last != SeprSymbol::APlus && last != SeprSymbol::AMinus)
        throw std::domain_error("sequence: malformed terminal symbol " + std::string(token(last)));
    std::vector<SeprSymbol> t;
    t.reserve(n);
    for (int pos = n - 1; pos >= 1; --pos) {
        SeprSymbol x = s.at(pos);
        t.push_back(last == SeprSymbol::AMinus ? neg(x) : x);
    }
    t.push_back(last);
    return SeprSequence(std::move(t));
}

SeprSequence ana_constant_shape(int n, int k) {
    if (k < 2 || k > n - 2)
        throw std::invalid_argument("sequence: shape requires 2 <= k <= n-2");
    std::vector<SeprSymbol> t(n);
    for (int q = 1; q <= n; ++q) {
        if (q < k)
            t[q - 1] = SeprSymbol::APlus;
        else if (q == k)
            t[q - 1] = SeprSymbol::N;
        else
            t[q - 1] = SeprSymbol::AMinus;
    }
    return SeprSequence(std::move(t));
}

SeprSequence ana_alternating_shape(int n, int k) {
    if (k < 2 || k > n - 2)
        throw std::invalid_argument("sequence: shape requires 2 <= k <= n-2");
    std::vector<SeprSymbol> t(n);
    for (int q = 1; q <= n; ++q) {
        if (q == k) {
            t[q - 1] = SeprSymbol::N;
            continue;
        }
        // sign of (-k)^(q-1) (q-k) = (-1)^(q-1) sgn(q-k)
        int sign = ((q - 1) % 2 == 0 ? 1 : -1) * (q < k ? -1 : 1);
        t[q - 1] = sign > 0 ? SeprSymbol::APlus : SeprSymbol::AMinus;
    }
    return SeprSequence(std::move(t));
}

}  // namespace sepr
