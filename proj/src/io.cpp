#include "schubert/io.hpp"

#include <stdexcept>

namespace schubert {

json to_json(const Labeling& t) {
    json entries = json::array();
    const auto& d = t.w.diagram();
    for (std::size_t k = 0; k < d.size(); ++k)
        entries.push_back({d[k].row, d[k].col, to_string(Letter(t.codes[k]))});
    return {{"w", to_string(t.w)}, {"entries", entries}};
}

Labeling labeling_from_json(const json& j) {
    try {
        const auto w = parse_permutation(j.at("w").get<std::string>());
        std::vector<int> codes(w.diagram().size(), 0);
        for (const auto& e : j.at("entries")) {
            if (!e.is_array() || e.size() != 3) throw std::invalid_argument("entry must be [i, j, letter]");
            const Cell c{e[0].get<int>(), e[1].get<int>()};
            const auto& d = w.diagram();
            auto it = std::lower_bound(d.begin(), d.end(), c);
            if (it == d.end() || *it != c) throw std::invalid_argument("entry outside the diagram");
            auto& slot = codes[static_cast<std::size_t>(it - d.begin())];
            if (slot != 0) throw std::invalid_argument("cell labeled twice");
            slot = parse_letter(e[2].get<std::string>()).code();
        }
        return Labeling(w, std::move(codes));
    } catch (const json::exception& ex) {
        throw std::invalid_argument(std::string("malformed labeling: ") + ex.what());
    }
}

json to_json(const FunctorImage& f) {
    json bsl = json::array(), columns = json::array(), matrix = json::array();
    for (const auto& t : f.bsl()) bsl.push_back(to_string(t));
    for (const auto& c : f.columns()) columns.push_back(column_string(c, f.w()));
    for (std::size_t t = 0; t < f.bsl().size(); ++t)
        for (const auto& [c, coef] : f.images()[t]) {
            const auto r = std::lower_bound(f.columns().begin(), f.columns().end(), c) - f.columns().begin();
            matrix.push_back({r, t, coef});
        }
    return {{"w", to_string(f.w())}, {"bsl", bsl}, {"columns", columns}, {"matrix", matrix}};
}

json to_json(const ChainComplex& c, bool with_differentials) {
    json out{{"w", to_string(c.w)}, {"ranks", c.ranks()}};
    if (!with_differentials) return out;
    const bool generic = c.map.kind == FlaggedMap::Kind::Generic;
    json diffs = json::array();
    for (int i = 1; i <= c.length(); ++i) {
        const auto& d = c.differentials[i];
        json entries = json::array();
        for (std::size_t r = 0; r < d.rows(); ++r)
            for (std::size_t k = 0; k < d.cols(); ++k) {
                if (generic) {
                    if (!d(r, k).is_zero()) entries.push_back({r, k, to_string(d(r, k))});
                    continue;
                }
                mpq_class v = d(r, k).evaluate(c.map.entries);
                std::string s;
                if (c.map.kind == FlaggedMap::Kind::PrimeField) {
                    const auto m = reduce_mod(v, c.map.prime);
                    if (m == 0) continue;
                    s = std::to_string(m);
                } else {
                    if (v == 0) continue;
                    s = v.get_str();
                }
                entries.push_back({r, k, s});
            }
        diffs.push_back({{"degree", i}, {"shape", {d.rows(), d.cols()}}, {"entries", entries}});
    }
    out["differentials"] = diffs;
    return out;
}

json to_json(const std::vector<MinorDescriptor>& gens) {
    json out = json::array();
    for (const auto& g : gens) out.push_back({{"rows", g.rows}, {"cols", g.cols}});
    return out;
}

Matrix<mpq_class> matrix_from_json(const json& j) {
    try {
        const int n = j.at("n").get<int>();
        if (n < 1) throw std::invalid_argument("matrix size must be positive");
        const auto& rows = j.at("entries");
        if (!rows.is_array() || rows.size() != static_cast<std::size_t>(n))
            throw std::invalid_argument("entries must have n rows");
        Matrix<mpq_class> m(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (!rows[i].is_array() || rows[i].size() != static_cast<std::size_t>(n))
                throw std::invalid_argument("each row must have n entries");
            for (std::size_t k = 0; k < rows[i].size(); ++k) {
                const auto& e = rows[i][k];
                m(i, k) = e.is_number_integer() ? mpq_class(std::to_string(e.get<long long>()))
                                                : parse_rational(e.get<std::string>());
            }
        }
        return m;
    } catch (const json::exception& ex) {
        throw std::invalid_argument(std::string("malformed matrix: ") + ex.what());
    }
}

json to_json(const Matrix<mpq_class>& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(m(i, k).get_str());
        rows.push_back(row);
    }
    return {{"n", m.rows()}, {"entries", rows}};
}

}  // namespace schubert
