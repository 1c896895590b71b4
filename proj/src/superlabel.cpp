#include "schubert/superlabel.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace schubert {

std::string to_string(Letter a) {
    return std::to_string(a.index()) + (a.is_marked() ? "'" : "");
}

Letter parse_letter(std::string_view text) {
    bool marked = false;
    if (!text.empty() && text.back() == '\'') {
        marked = true;
        text.remove_suffix(1);
    }
    if (text.empty() || text.size() > 6) throw std::invalid_argument("bad letter");
    int k = 0;
    for (char ch : text) {
        if (ch < '0' || ch > '9') throw std::invalid_argument("bad letter '" + std::string(text) + "'");
        k = k * 10 + (ch - '0');
    }
    if (k == 0) throw std::invalid_argument("letter index must be positive");
    return marked ? Letter::marked(k) : Letter::unmarked(k);
}

Labeling::Labeling(Permutation perm, std::vector<int> letter_codes)
    : w(std::move(perm)), codes(std::move(letter_codes)) {
    if (codes.size() != w.diagram().size())
        throw std::invalid_argument("labeling size differs from the diagram");
    for (int c : codes)
        if (c == 0) throw std::invalid_argument("labeling has an empty cell");
}

Letter Labeling::at(int row, int col) const {
    const auto& d = w.diagram();
    auto it = std::lower_bound(d.begin(), d.end(), Cell{row, col});
    if (it == d.end() || *it != Cell{row, col}) throw std::out_of_range("cell not in the diagram");
    return Letter(codes[static_cast<std::size_t>(it - d.begin())]);
}

namespace {

// Cell indices of the arm (right) and leg (below) of each cell.
struct Hooks {
    std::vector<std::vector<int>> arm, leg;
    std::vector<int> last;  // largest row-major index in each hook
};

Hooks hooks_of(const std::vector<Cell>& d) {
    Hooks h;
    const int m = static_cast<int>(d.size());
    h.arm.resize(d.size());
    h.leg.resize(d.size());
    h.last.resize(d.size());
    for (int a = 0; a < m; ++a) {
        h.last[a] = a;
        for (int b = 0; b < m; ++b) {
            if (d[b].row == d[a].row && d[b].col > d[a].col) h.arm[a].push_back(b);
            if (d[b].col == d[a].col && d[b].row > d[a].row) h.leg[a].push_back(b);
        }
        for (int b : h.arm[a]) h.last[a] = std::max(h.last[a], b);
        for (int b : h.leg[a]) h.last[a] = std::max(h.last[a], b);
    }
    return h;
}

bool hook_balanced(const Hooks& h, int a, const std::vector<int>& v) {
    const int corner = v[a];
    int less = 0, equal = 1;
    auto tally = [&](int b) {
        if (v[b] < corner) ++less;
        else if (v[b] == corner) ++equal;
    };
    for (int b : h.arm[a]) tally(b);
    for (int b : h.leg[a]) tally(b);
    const int k = static_cast<int>(h.arm[a].size());
    return less <= k && k < less + equal;
}

bool flags_and_strictness(const std::vector<Cell>& d, const std::vector<int>& v) {
    for (std::size_t a = 0; a < d.size(); ++a) {
        if (v[a] < -d[a].col || v[a] > d[a].row || v[a] == 0) return false;
        for (std::size_t b = 0; b < a; ++b) {
            if (v[a] != v[b]) continue;
            if (v[a] > 0 && d[a].col == d[b].col) return false;
            if (v[a] < 0 && d[a].row == d[b].row) return false;
        }
    }
    return true;
}

// Depth-first over cells in row-major order; visit(values) for each BSL.
void backtrack_bsl(const Permutation& w, const std::function<void(const std::vector<int>&)>& visit) {
    const auto& d = w.diagram();
    const int m = static_cast<int>(d.size());
    const auto h = hooks_of(d);
    std::vector<std::vector<int>> completes(d.size()), same_col(d.size()), same_row(d.size());
    for (int a = 0; a < m; ++a) {
        completes[h.last[a]].push_back(a);
        for (int b = 0; b < a; ++b) {
            if (d[b].col == d[a].col) same_col[a].push_back(b);
            if (d[b].row == d[a].row) same_row[a].push_back(b);
        }
    }
    std::vector<int> v(d.size(), 0);
    std::function<void(int)> go = [&](int k) {
        if (k == m) {
            visit(v);
            return;
        }
        for (int code = -d[k].col; code <= d[k].row; ++code) {
            if (code == 0) continue;
            bool ok = true;
            if (code > 0) {
                for (int b : same_col[k])
                    if (v[b] == code) ok = false;
            } else {
                for (int b : same_row[k])
                    if (v[b] == code) ok = false;
            }
            if (!ok) continue;
            v[k] = code;
            for (int a : completes[k])
                if (!hook_balanced(h, a, v)) {
                    ok = false;
                    break;
                }
            if (ok) go(k + 1);
        }
        v[k] = 0;
    };
    go(0);
}

}  // namespace

bool is_balanced(const Labeling& t) {
    const auto h = hooks_of(t.w.diagram());
    for (std::size_t a = 0; a < t.codes.size(); ++a)
        if (!hook_balanced(h, static_cast<int>(a), t.codes)) return false;
    return true;
}

bool is_bsl(const Labeling& t) {
    return flags_and_strictness(t.w.diagram(), t.codes) && is_balanced(t);
}

std::vector<Labeling> enumerate_bsl(const Permutation& w) {
    std::vector<Labeling> out;
    backtrack_bsl(w, [&](const std::vector<int>& v) { out.emplace_back(w, v); });
    return out;
}

std::vector<long> count_bsl_by_degree(const Permutation& w) {
    std::vector<long> counts(w.diagram().size() + 1, 0);
    backtrack_bsl(w, [&](const std::vector<int>& v) {
        ++counts[static_cast<std::size_t>(std::count_if(v.begin(), v.end(), [](int c) { return c > 0; }))];
    });
    return counts;
}

SparsePoly monomial(const Labeling& t) {
    const int n = t.w.size();
    SparsePoly::Exponent e(static_cast<std::size_t>(2 * n), 0);
    int marked = 0;
    for (int c : t.codes) {
        const Letter a(c);
        if (a.index() > n) throw std::out_of_range("letter exceeds the variable budget");
        ++e[static_cast<std::size_t>((a.is_marked() ? n : 0) + a.index() - 1)];
        if (a.is_marked()) ++marked;
    }
    SparsePoly p(n);
    p.add_term(e, marked % 2 ? -1 : 1);
    return p;
}

SparsePoly bsl_generating_function(const Permutation& w) {
    SparsePoly total(w.size());
    backtrack_bsl(w, [&](const std::vector<int>& v) { total += monomial(Labeling(w, v)); });
    return total;
}

Labeling star(const Labeling& t) {
    const auto winv = t.w.inverse();
    std::vector<int> codes;
    codes.reserve(t.codes.size());
    for (const auto& c : winv.diagram()) codes.push_back(-t.at(c.col, c.row).code());
    return Labeling(winv, std::move(codes));
}

namespace {

// Dense n x n array view, 0 outside the labeled cells.
using Array = std::vector<std::vector<int>>;

Array to_array(const Labeling& t) {
    const int n = t.w.size();
    Array a(static_cast<std::size_t>(n) + 1, std::vector<int>(static_cast<std::size_t>(n) + 1, 0));
    const auto& d = t.w.diagram();
    for (std::size_t k = 0; k < d.size(); ++k) a[d[k].row][d[k].col] = t.codes[k];
    return a;
}

Labeling from_array(const Permutation& w, const Array& a) {
    std::vector<int> codes;
    for (const auto& c : w.diagram()) codes.push_back(a[c.row][c.col]);
    const int n = w.size();
    std::size_t filled = 0;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            if (a[i][j] != 0) ++filled;
    if (filled != codes.size() || std::count(codes.begin(), codes.end(), 0))
        throw std::invalid_argument("array support is not the diagram of " + to_string(w));
    return Labeling(w, std::move(codes));
}

}  // namespace

Labeling remove_border_cell(const Labeling& t, int row) {
    const int n = t.w.size();
    if (row < 1 || row >= n || !t.w.in_diagram(row, t.w(row + 1)))
        throw std::invalid_argument("no border cell in row " + std::to_string(row));
    auto a = to_array(t);
    a[row][t.w(row + 1)] = 0;
    std::swap(a[row], a[row + 1]);
    return from_array(t.w * Permutation::simple(row, n), a);
}

Factorization factor_bsl(const Labeling& t) {
    if (!is_bsl(t)) throw std::invalid_argument("factor_bsl: input is not a BSL");
    const int n = t.w.size();
    Labeling cur = t;
    while (true) {
        const auto top = std::max_element(cur.codes.begin(), cur.codes.end());
        if (top == cur.codes.end() || *top < 0) break;
        int row = 0;
        for (const auto& b : border_cells(cur.w))
            if (cur.at(b).code() == *top) {
                row = b.row;
                break;
            }
        if (row == 0) throw std::logic_error("largest unmarked label is not in a border cell");
        cur = remove_border_cell(cur, row);
    }
    const auto u = cur.w;
    const auto v = u.inverse() * t.w;
    // Cell (p, c) of D(u) sits at (v^-1(p), c) in D(w); cell (i, c) of D(v) at (i, u(c)).
    auto rest = to_array(t);
    const auto vinv = v.inverse();
    for (const auto& c : u.diagram()) rest[vinv(c.row)][c.col] = 0;
    Array tv(static_cast<std::size_t>(n) + 1, std::vector<int>(static_cast<std::size_t>(n) + 1, 0));
    for (int i = 1; i <= n; ++i)
        for (int k = 1; k <= n; ++k) tv[i][k] = rest[i][u(k)];
    return {cur, from_array(v, tv), u, v};
}

Labeling reconstruct(const Labeling& marked_part, const Labeling& unmarked_part) {
    const auto& u = marked_part.w;
    const auto& v = unmarked_part.w;
    const int n = u.size();
    const auto w = u * v;
    if (w.length() != u.length() + v.length()) throw std::invalid_argument("u v is not length-additive");
    const auto tu = to_array(marked_part), tv = to_array(unmarked_part);
    Array a(static_cast<std::size_t>(n) + 1, std::vector<int>(static_cast<std::size_t>(n) + 1, 0));
    const auto uinv = u.inverse();
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            const int left = tu[v(i)][j], right = tv[i][uinv(j)];
            if (left && right) throw std::invalid_argument("factors overlap");
            a[i][j] = left ? left : right;
        }
    return from_array(w, a);
}

int homological_degree(const Labeling& t) {
    return static_cast<int>(std::count_if(t.codes.begin(), t.codes.end(), [](int c) { return c > 0; }));
}

Weight weight(const Labeling& t) {
    const int n = t.w.size();
    Weight out(static_cast<std::size_t>(2 * n), 0);
    for (int c : t.codes) ++out[static_cast<std::size_t>(n + (c > 0 ? c - 1 : c))];
    return out;
}

bool dominance_leq(const Weight& a, const Weight& b) {
    if (a.size() != b.size()) throw std::invalid_argument("weights of different sizes");
    long sa = 0, sb = 0;
    for (std::size_t k = 0; k < a.size(); ++k) {
        sa += a[k];
        sb += b[k];
        if (sa > sb) return false;
    }
    return true;
}

std::string to_string(const Labeling& t) {
    const auto& d = t.w.diagram();
    const int last = d.empty() ? 0 : d.back().row;
    std::string out;
    std::size_t k = 0;
    for (int r = 1; r <= last; ++r) {
        if (r > 1) out += '|';
        bool first = true;
        for (; k < d.size() && d[k].row == r; ++k) {
            if (!first) out += ',';
            first = false;
            out += to_string(Letter(t.codes[k]));
        }
    }
    return out;
}

}  // namespace schubert
