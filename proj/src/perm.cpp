#include "schubert/perm.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <stdexcept>

namespace schubert {

Permutation::Permutation(std::vector<int> word) : word_(std::move(word)) {
    const int n = size();
    std::vector<int> seen(static_cast<std::size_t>(n) + 1, 0);
    for (int x : word_) {
        if (x < 1 || x > n || seen[static_cast<std::size_t>(x)]++)
            throw std::invalid_argument("not a permutation of 1.." + std::to_string(n));
    }

    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (word_[i] > word_[j]) ++length_;

    std::vector<int> inv_word(word_.size());
    for (int i = 1; i <= n; ++i) inv_word[word_[i - 1] - 1] = i;
    const auto inv = [&](int j) { return inv_word[j - 1]; };
    mask_.assign(static_cast<std::size_t>(n) * n, 0);
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
            if (i < inv(j) && (*this)(i) > j) {
                diagram_.push_back({i, j});
                mask_[static_cast<std::size_t>((i - 1) * n + (j - 1))] = 1;
            }
        }
    }

    rank_table_.assign(static_cast<std::size_t>(n + 1) * (n + 1), 0);
    for (int p = 1; p <= n; ++p) {
        for (int q = 1; q <= n; ++q) {
            const auto at = [&](int a, int b) -> int& {
                return rank_table_[static_cast<std::size_t>(a * (n + 1) + b)];
            };
            at(p, q) = at(p - 1, q) + ((*this)(p) <= q ? 1 : 0);
        }
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> w(static_cast<std::size_t>(n));
    std::iota(w.begin(), w.end(), 1);
    return Permutation(std::move(w));
}

Permutation Permutation::longest(int n) {
    std::vector<int> w(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) w[i] = n - i;
    return Permutation(std::move(w));
}

Permutation Permutation::simple(int i, int n) {
    return transposition(i, i + 1, n);
}

Permutation Permutation::transposition(int i, int j, int n) {
    if (i < 1 || j < 1 || i > n || j > n)
        throw std::out_of_range("transposition index outside 1..n");
    std::vector<int> w(static_cast<std::size_t>(n));
    std::iota(w.begin(), w.end(), 1);
    std::swap(w[i - 1], w[j - 1]);
    return Permutation(std::move(w));
}

Permutation Permutation::inverse() const {
    std::vector<int> inv(word_.size());
    for (int i = 1; i <= size(); ++i) inv[(*this)(i) - 1] = i;
    return Permutation(std::move(inv));
}

Permutation Permutation::operator*(const Permutation& rhs) const {
    if (size() != rhs.size())
        throw std::invalid_argument("permutation sizes differ; pad explicitly");
    std::vector<int> w(word_.size());
    for (int i = 1; i <= size(); ++i) w[i - 1] = (*this)(rhs(i));
    return Permutation(std::move(w));
}

bool Permutation::in_diagram(int row, int col) const {
    const int n = size();
    if (row < 1 || col < 1 || row > n || col > n) return false;
    return mask_[static_cast<std::size_t>((row - 1) * n + (col - 1))] != 0;
}

int Permutation::rank(int p, int q) const {
    const int n = size();
    if (p < 1 || q < 1 || p > n || q > n)
        throw std::out_of_range("rank function index outside 1..n");
    return rank_table_[static_cast<std::size_t>(p * (n + 1) + q)];
}

int Permutation::row_count(int k) const {
    return static_cast<int>(std::count_if(diagram_.begin(), diagram_.end(),
                                          [k](const Cell& c) { return c.row == k; }));
}

int Permutation::column_count(int j) const {
    return static_cast<int>(std::count_if(diagram_.begin(), diagram_.end(),
                                          [j](const Cell& c) { return c.col == j; }));
}

Permutation pad(const Permutation& w, int m) {
    if (m < 0) throw std::invalid_argument("negative padding");
    std::vector<int> word(w.word().begin(), w.word().end());
    for (int k = 1; k <= m; ++k) word.push_back(w.size() + k);
    return Permutation(std::move(word));
}

int length(const Permutation& w) { return w.length(); }

int rank_function(const Permutation& w, int p, int q) { return w.rank(p, q); }

const std::vector<Cell>& diagram(const Permutation& w) { return w.diagram(); }

bool strong_leq(const Permutation& u, const Permutation& w) {
    if (u.size() != w.size()) throw std::invalid_argument("strong_leq: size mismatch");
    for (int p = 1; p <= u.size(); ++p)
        for (int q = 1; q <= u.size(); ++q)
            if (u.rank(p, q) < w.rank(p, q)) return false;
    return true;
}

bool weak_leq(const Permutation& u, const Permutation& w) {
    if (u.size() != w.size()) throw std::invalid_argument("weak_leq: size mismatch");
    return (w * u.inverse()).length() + u.length() == w.length();
}

std::vector<Permutation> weak_order_ideal(const Permutation& w) {
    // Suffixes of w: strip left descents, s_i x with l(s_i x) = l(x) - 1.
    std::vector<Permutation> found{w};
    std::vector<Permutation> frontier{w};
    while (!frontier.empty()) {
        std::vector<Permutation> next;
        for (const auto& x : frontier) {
            const auto xinv = x.inverse();
            for (int i = 1; i < x.size(); ++i) {
                if (xinv(i) > xinv(i + 1)) {
                    auto y = Permutation::simple(i, x.size()) * x;
                    if (std::find(found.begin(), found.end(), y) == found.end()) {
                        found.push_back(y);
                        next.push_back(std::move(y));
                    }
                }
            }
        }
        frontier = std::move(next);
    }
    std::sort(found.begin(), found.end(), [](const Permutation& a, const Permutation& b) {
        if (a.length() != b.length()) return a.length() < b.length();
        return a < b;
    });
    return found;
}

std::vector<Cell> border_cells(const Permutation& w) {
    std::vector<Cell> out;
    for (const auto& c : w.diagram())
        if (c.row < w.size() && w(c.row + 1) == c.col) out.push_back(c);
    return out;
}

std::vector<Cell> southeast_corners(const Permutation& w) {
    std::vector<Cell> out;
    for (const auto& c : w.diagram())
        if (!w.in_diagram(c.row + 1, c.col) && !w.in_diagram(c.row, c.col + 1)) out.push_back(c);
    return out;
}

long index(const Permutation& w) {
    long total = 0;
    for (int k = 1; k <= w.size(); ++k) {
        long below = 0;
        for (int j = k + 1; j <= w.size(); ++j)
            if (w(k) > w(j)) ++below;
        total += (k - 1) * below;
    }
    return total;
}

Transition maximal_transition(const Permutation& w) {
    if (w.is_identity()) throw std::invalid_argument("maximal_transition: identity has none");
    const int n = w.size();
    Transition t;
    for (int a = 1; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b)
            if (w(a) > w(b)) {
                t.alpha = a;
                t.beta = b;
            }
    const int top = w(t.beta);
    for (int g = 1; g < t.alpha; ++g) {
        if (w(g) >= top) continue;
        bool clear = true;
        for (int i = g + 1; i < t.alpha && clear; ++i)
            if (w(i) >= w(g) && w(i) <= top) clear = false;
        if (clear) t.gammas.push_back(g);
    }
    const auto swap_ab = Permutation::transposition(t.alpha, t.beta, n);
    t.v = w * swap_ab;
    for (int g : t.gammas) t.psis.push_back(t.v * Permutation::transposition(g, t.alpha, n));
    return t;
}

std::vector<Permutation> all_permutations(int n) {
    std::vector<int> word(static_cast<std::size_t>(n));
    std::iota(word.begin(), word.end(), 1);
    std::vector<Permutation> out;
    do {
        out.emplace_back(word);
    } while (std::next_permutation(word.begin(), word.end()));
    return out;
}

std::string to_string(const Permutation& w) {
    std::string out;
    const bool compact = w.size() <= 9;
    for (int i = 1; i <= w.size(); ++i) {
        if (!compact && i > 1) out += ',';
        out += std::to_string(w(i));
    }
    return out;
}

Permutation parse_permutation(std::string_view text) {
    std::vector<int> word;
    auto bad = [&] { return std::invalid_argument("cannot parse permutation '" + std::string(text) + "'"); };
    if (text.empty()) throw bad();
    if (text.find(',') == std::string_view::npos) {
        for (char ch : text) {
            if (ch < '1' || ch > '9') throw bad();
            word.push_back(ch - '0');
        }
    } else {
        std::size_t pos = 0;
        while (pos <= text.size()) {
            const auto next = std::min(text.find(',', pos), text.size());
            const auto piece = text.substr(pos, next - pos);
            int value = 0;
            auto [ptr, ec] = std::from_chars(piece.data(), piece.data() + piece.size(), value);
            if (piece.empty() || ec != std::errc{} || ptr != piece.data() + piece.size()) throw bad();
            word.push_back(value);
            pos = next + 1;
        }
    }
    return Permutation(std::move(word));
}

}  // namespace schubert
