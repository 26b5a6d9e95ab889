#include "sepr/io_json.hpp"

#include <json.hpp>

#include <stdexcept>

namespace sepr {

namespace {

using nlohmann::json;

Rational rational_from_json(const json& j, const std::string& where) {
    if (j.is_number_integer()) return Rational(j.get<long long>());
    if (j.is_string()) {
        try {
            return Rational::parse(j.get<std::string>());
        } catch (const std::invalid_argument& e) {
            throw std::invalid_argument(where + ": " + e.what());
        }
    }
    throw std::invalid_argument(where + ": expected an integer or a \"p/q\" string");
}

QExt qext_from_json(const json& j, long long radicand, const std::string& where) {
    if (j.is_array()) {
        if (j.empty() || j.size() > 2)
            throw std::invalid_argument(where + ": component array must hold 1 or 2 rationals");
        Rational a = rational_from_json(j[0], where);
        Rational b = j.size() == 2 ? rational_from_json(j[1], where) : Rational(0);
        if (!b.is_zero() && radicand < 2)
            throw std::invalid_argument(where + ": radical coefficient needs a radicand >= 2");
        return QExt(std::move(a), std::move(b), radicand);
    }
    return QExt(rational_from_json(j, where));
}

CQExt entry_from_json(const json& j, long long radicand, const std::string& where) {
    if (j.is_object()) {
        for (auto it = j.begin(); it != j.end(); ++it) {
            if (it.key() != "re" && it.key() != "im")
                throw std::invalid_argument(where + ": unknown member \"" + it.key() + "\"");
        }
        QExt re = j.contains("re") ? qext_from_json(j.at("re"), radicand, where + ".re") : QExt();
        QExt im = j.contains("im") ? qext_from_json(j.at("im"), radicand, where + ".im") : QExt();
        return CQExt(std::move(re), std::move(im));
    }
    return CQExt(qext_from_json(j, radicand, where));
}

json qext_to_json(const QExt& q) {
    return json::array({q.rational_part().str(), q.radical_coeff().str()});
}

}  // namespace

HermitianMatrix matrix_from_json_text(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("matrix file: ") + e.what());
    }
    if (!j.is_object()) throw std::invalid_argument("matrix file: top level must be an object");
    if (!j.contains("entries") || !j.at("entries").is_array())
        throw std::invalid_argument("matrix file: missing \"entries\" array");

    long long radicand = 0;
    if (j.contains("radicand")) {
        if (!j.at("radicand").is_number_integer())
            throw std::invalid_argument("matrix file: \"radicand\" must be an integer");
        radicand = j.at("radicand").get<long long>();
        if (radicand < 0) throw std::invalid_argument("matrix file: \"radicand\" must be nonnegative");
        if (!is_square_free(radicand))
            throw std::invalid_argument("matrix file: radicand " + std::to_string(radicand) +
                                        " is not square-free");
    }

    const json& rows = j.at("entries");
    int n = static_cast<int>(rows.size());
    if (j.contains("n")) {
        if (!j.at("n").is_number_integer() || j.at("n").get<int>() != n)
            throw std::invalid_argument("matrix file: \"n\" disagrees with the entry grid");
    }
    std::vector<std::vector<CQExt>> grid;
    grid.reserve(n);
    for (int i = 0; i < n; ++i) {
        const json& row = rows[i];
        if (!row.is_array())
            throw std::invalid_argument("matrix file: row " + std::to_string(i + 1) +
                                        " is not an array");
        std::vector<CQExt> out;
        out.reserve(row.size());
        for (std::size_t c = 0; c < row.size(); ++c) {
            std::string where =
                "entry (" + std::to_string(i + 1) + "," + std::to_string(c + 1) + ")";
            out.push_back(entry_from_json(row[c], radicand, where));
        }
        grid.push_back(std::move(out));
    }
    return HermitianMatrix::validated(std::move(grid), radicand);
}

std::string matrix_to_json_text(const HermitianMatrix& m, int indent) {
    json rows = json::array();
    for (int i = 0; i < m.order(); ++i) {
        json row = json::array();
        for (int c = 0; c < m.order(); ++c) {
            const CQExt& z = m.at(i, c);
            row.push_back(json{{"re", qext_to_json(z.real())}, {"im", qext_to_json(z.imag())}});
        }
        rows.push_back(std::move(row));
    }
    json j{{"n", m.order()}, {"radicand", m.radicand()}, {"entries", std::move(rows)}};
    return indent < 0 ? j.dump() : j.dump(indent);
}

}  // namespace sepr
