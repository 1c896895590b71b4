#include "schubert/functor.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace schubert {

namespace {

struct Layout {
    std::vector<Cell> cells;                          // row-major
    std::vector<std::pair<int, int>> row_span;        // per row k (0-based k-1): start, length
    std::vector<int> column_order;                    // row-major index of each column-major slot
    std::vector<std::pair<int, int>> col_span;        // per column, in column-major slots
    std::vector<std::pair<int, int>> crossings;       // (a, b): a above-right of b
};

Layout layout_of(const Permutation& w) {
    Layout l;
    const int n = w.size();
    l.cells = w.diagram();
    const int m = static_cast<int>(l.cells.size());
    l.row_span.assign(static_cast<std::size_t>(n), {0, 0});
    l.col_span.assign(static_cast<std::size_t>(n), {0, 0});
    for (int a = 0; a < m; ++a) {
        auto& span = l.row_span[static_cast<std::size_t>(l.cells[a].row - 1)];
        if (span.second == 0) span.first = a;
        ++span.second;
    }
    l.column_order.resize(static_cast<std::size_t>(m));
    for (int a = 0; a < m; ++a) l.column_order[a] = a;
    std::stable_sort(l.column_order.begin(), l.column_order.end(), [&](int a, int b) {
        return l.cells[a].col < l.cells[b].col;
    });
    for (int s = 0; s < m; ++s) {
        auto& span = l.col_span[static_cast<std::size_t>(l.cells[l.column_order[s]].col - 1)];
        if (span.second == 0) span.first = s;
        ++span.second;
    }
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b)
            if (l.cells[a].row < l.cells[b].row && l.cells[a].col > l.cells[b].col) l.crossings.emplace_back(a, b);
    return l;
}

bool both_unmarked(int a, int b) { return a > 0 && b > 0; }

// Distinct arrangements of a sorted row with their signs.
std::vector<std::pair<std::vector<int>, int>> arrangements(std::vector<int> row) {
    std::vector<std::pair<std::vector<int>, int>> out;
    do {
        int sign = 1;
        for (std::size_t i = 0; i < row.size(); ++i)
            for (std::size_t j = i + 1; j < row.size(); ++j)
                if (row[i] > row[j] && !both_unmarked(row[i], row[j])) sign = -sign;
        out.emplace_back(row, sign);
    } while (std::next_permutation(row.begin(), row.end()));
    return out;
}

}  // namespace

RowElement row_element(const Labeling& t) {
    const auto l = layout_of(t.w);
    RowElement r = t.codes;
    for (const auto& [start, len] : l.row_span)
        std::sort(r.begin() + start, r.begin() + start + len);
    return r;
}

ColumnVector phi(const RowElement& t, const Permutation& w) {
    const auto l = layout_of(w);
    const int n = w.size();
    if (t.size() != l.cells.size()) throw std::invalid_argument("row element size differs from the diagram");

    std::vector<std::vector<std::pair<std::vector<int>, int>>> per_row;
    for (int k = 1; k <= n; ++k) {
        const auto [start, len] = l.row_span[static_cast<std::size_t>(k - 1)];
        std::vector<int> row(t.begin() + start, t.begin() + start + len);
        std::sort(row.begin(), row.end());
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (row[i] == 0 || row[i] > k || row[i] < -n)
                throw std::invalid_argument("letter outside the alphabet of row " + std::to_string(k));
            if (row[i] < 0 && i + 1 < row.size() && row[i + 1] == row[i])
                throw std::invalid_argument("marked letter repeated in row " + std::to_string(k));
        }
        per_row.push_back(arrangements(std::move(row)));
    }

    ColumnVector out;
    std::vector<std::size_t> pick(per_row.size(), 0);
    std::vector<int> lab(l.cells.size());
    ColumnElement key(l.cells.size());
    for (;;) {
        int sign = 1;
        for (std::size_t k = 0; k < per_row.size(); ++k) {
            const auto& [arr, s] = per_row[k][pick[k]];
            sign *= s;
            std::copy(arr.begin(), arr.end(), lab.begin() + l.row_span[k].first);
        }
        for (const auto& [a, b] : l.crossings)
            if (both_unmarked(lab[a], lab[b])) sign = -sign;

        bool zero = false;
        for (int j = 1; j <= n && !zero; ++j) {
            const auto [start, len] = l.col_span[static_cast<std::size_t>(j - 1)];
            for (int s = start; s < start + len; ++s) key[s] = lab[l.column_order[s]];
            for (int s = start; s < start + len && !zero; ++s) {
                if (key[s] < -j) zero = true;
                for (int r = s + 1; r < start + len && !zero; ++r) {
                    if (key[s] == key[r] && key[s] > 0) zero = true;
                    else if (key[s] > key[r] && both_unmarked(key[s], key[r])) sign = -sign;
                }
            }
            std::sort(key.begin() + start, key.begin() + start + len);
        }
        if (!zero) {
            auto& slot = out[key];
            slot += sign;
            if (slot == 0) out.erase(key);
        }

        std::size_t k = 0;
        while (k < pick.size() && ++pick[k] == per_row[k].size()) pick[k++] = 0;
        if (k == pick.size()) break;
    }
    return out;
}

std::string column_string(const ColumnElement& c, const Permutation& w) {
    const auto l = layout_of(w);
    std::string out;
    for (int j = 1; j <= w.size(); ++j) {
        if (j > 1) out += '|';
        const auto [start, len] = l.col_span[static_cast<std::size_t>(j - 1)];
        for (int s = start; s < start + len; ++s) {
            if (s > start) out += ',';
            out += to_string(Letter(c[static_cast<std::size_t>(s)]));
        }
    }
    return out;
}

Weight column_weight(const ColumnElement& c, int n) {
    Weight out(static_cast<std::size_t>(2 * n), 0);
    for (int x : c) ++out[static_cast<std::size_t>(n + (x > 0 ? x - 1 : x))];
    return out;
}

FunctorImage::FunctorImage(const Permutation& w) : w_(w) {
    bsl_ = enumerate_bsl(w);
    std::stable_sort(bsl_.begin(), bsl_.end(), [](const Labeling& a, const Labeling& b) {
        const int da = homological_degree(a), db = homological_degree(b);
        if (da != db) return da < db;
        return to_string(a) < to_string(b);
    });
    const int n = w.size();
    std::set<ColumnElement> all;
    std::map<Weight, std::vector<std::size_t>> groups;
    for (std::size_t t = 0; t < bsl_.size(); ++t) {
        images_.push_back(phi(row_element(bsl_[t]), w));
        if (images_.back().empty()) throw std::logic_error("BSL " + to_string(bsl_[t]) + " has zero image");
        const auto wt = weight(bsl_[t]);
        for (const auto& [c, coef] : images_.back()) {
            if (column_weight(c, n) != wt) throw std::logic_error("image does not preserve weight");
            all.insert(c);
        }
        groups[wt].push_back(t);
    }
    columns_.assign(all.begin(), all.end());
    for (auto& [wt, members] : groups) {
        std::set<ColumnElement> rows;
        for (auto t : members)
            for (const auto& [c, coef] : images_[t]) rows.insert(c);
        WeightBlock block;
        block.bsl = members;
        block.rows.assign(rows.begin(), rows.end());
        Matrix<mpq_class> a(block.rows.size(), members.size());
        for (std::size_t j = 0; j < members.size(); ++j)
            for (const auto& [c, coef] : images_[members[j]]) {
                const auto r = std::lower_bound(block.rows.begin(), block.rows.end(), c) - block.rows.begin();
                a(static_cast<std::size_t>(r), j) = coef;
            }
        try {
            block.solver = FullRankSolver(std::move(a));
        } catch (const std::domain_error&) {
            throw std::logic_error("image matrix of " + to_string(w) + " is rank deficient");
        }
        blocks_.emplace(wt, std::move(block));
    }
}

long FunctorImage::index_of(const Labeling& t) const {
    auto it = std::find(bsl_.begin(), bsl_.end(), t);
    return it == bsl_.end() ? -1 : static_cast<long>(it - bsl_.begin());
}

Matrix<mpq_class> FunctorImage::image_matrix() const {
    Matrix<mpq_class> m(columns_.size(), bsl_.size());
    for (std::size_t t = 0; t < bsl_.size(); ++t)
        for (const auto& [c, coef] : images_[t]) {
            const auto r = std::lower_bound(columns_.begin(), columns_.end(), c) - columns_.begin();
            m(static_cast<std::size_t>(r), t) = coef;
        }
    return m;
}

FunctorImage build_functor_image(const Permutation& w) { return FunctorImage(w); }

std::vector<mpq_class> straighten(const ColumnVector& v, const FunctorImage& f) {
    const int n = f.w().size();
    std::vector<mpq_class> out(f.bsl().size());
    std::map<Weight, std::vector<std::pair<const ColumnElement*, long>>> by_weight;
    for (const auto& [c, coef] : v)
        if (coef != 0) by_weight[column_weight(c, n)].emplace_back(&c, coef);
    auto outside = [&](const ColumnElement& c) {
        return std::domain_error("vector is outside the image; residual at column element " + column_string(c, f.w()));
    };
    for (const auto& [wt, entries] : by_weight) {
        auto it = f.blocks().find(wt);
        if (it == f.blocks().end()) throw outside(*entries.front().first);
        const auto& block = it->second;
        std::vector<mpq_class> b(block.rows.size());
        for (const auto& [c, coef] : entries) {
            auto r = std::lower_bound(block.rows.begin(), block.rows.end(), *c);
            if (r == block.rows.end() || *r != *c) throw outside(*c);
            b[static_cast<std::size_t>(r - block.rows.begin())] = coef;
        }
        std::size_t bad = 0;
        auto c = block.solver.solve(b, mpq_class(0), &bad);
        if (!c) throw outside(block.rows[bad]);
        for (std::size_t j = 0; j < block.bsl.size(); ++j) out[block.bsl[j]] = (*c)[j];
    }
    return out;
}

GradedCharacter graded_character(const FunctorImage& f) {
    SparsePoly total(f.w().size());
    for (const auto& t : f.bsl()) total += monomial(t);
    auto character = total.with_signs(-1, 1);
    return {std::move(total), std::move(character)};
}

}  // namespace schubert
