#pragma once

// Permutations of {1..n} in one-line notation: length, diagrams, rank
// functions, the weak and strong Bruhat orders, and maximal transitions.
//
// Conventions: all indices are 1-based; permutations multiply as functions,
// (u * v)(i) = u(v(i)); a Cell is (row, col) in matrix convention.

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace schubert {

struct Cell {
    int row = 0;
    int col = 0;
    auto operator<=>(const Cell&) const = default;
};

class Permutation {
public:
    Permutation() : Permutation(std::vector<int>{}) {}
    /// Throws std::invalid_argument unless `word` is a bijection of {1..n}.
    explicit Permutation(std::vector<int> word);

    static Permutation identity(int n);
    static Permutation longest(int n);
    /// The simple transposition s_i in Σ_n.
    static Permutation simple(int i, int n);
    /// The transposition t_{i,j} in Σ_n.
    static Permutation transposition(int i, int j, int n);

    int size() const { return static_cast<int>(word_.size()); }
    int operator()(int i) const { return word_[static_cast<std::size_t>(i - 1)]; }
    std::span<const int> word() const { return word_; }

    int length() const { return length_; }
    bool is_identity() const { return length_ == 0; }
    Permutation inverse() const;
    Permutation operator*(const Permutation& rhs) const;

    const std::vector<Cell>& diagram() const { return diagram_; }
    bool in_diagram(int row, int col) const;
    /// r_w(p,q) = #{i <= p : w(i) <= q}; throws std::out_of_range.
    int rank(int p, int q) const;
    /// Number of diagram cells in row k / column j.
    int row_count(int k) const;
    int column_count(int j) const;

    bool operator==(const Permutation& other) const { return word_ == other.word_; }
    auto operator<=>(const Permutation& other) const {
        if (auto c = word_.size() <=> other.word_.size(); c != 0) return c;
        return word_ <=> other.word_;
    }

private:
    std::vector<int> word_;
    int length_ = 0;
    std::vector<Cell> diagram_;
    std::vector<int> rank_table_;      // (n+1) x (n+1), row p, column q
    std::vector<unsigned char> mask_;  // n x n diagram membership
};

/// Embeds Σ_n into Σ_{n+m}, fixing n+1..n+m.
Permutation pad(const Permutation& w, int m);

int length(const Permutation& w);
int rank_function(const Permutation& w, int p, int q);
const std::vector<Cell>& diagram(const Permutation& w);

/// r_u(p,q) >= r_w(p,q) everywhere. Throws std::invalid_argument on size mismatch.
bool strong_leq(const Permutation& u, const Permutation& w);
/// u is a suffix of w in the left weak order: l(w u^-1) + l(u) = l(w).
bool weak_leq(const Permutation& u, const Permutation& w);
/// All u with weak_leq(u, w), sorted by length and then by word.
std::vector<Permutation> weak_order_ideal(const Permutation& w);

std::vector<Cell> border_cells(const Permutation& w);
std::vector<Cell> southeast_corners(const Permutation& w);

/// sum_k (k-1) * #{j > k : w(k) > w(j)}
long index(const Permutation& w);

struct Transition {
    int alpha = 0;
    int beta = 0;
    Permutation v;
    std::vector<int> gammas;
    std::vector<Permutation> psis;
};

/// Throws std::invalid_argument for the identity.
Transition maximal_transition(const Permutation& w);

/// Every permutation of Σ_n in lexicographic order of words.
std::vector<Permutation> all_permutations(int n);

/// "35142" when n <= 9, "10,3,1,..." otherwise. The identity of Σ_0 renders as "".
std::string to_string(const Permutation& w);
/// Accepts both text forms; throws std::invalid_argument.
Permutation parse_permutation(std::string_view text);

}  // namespace schubert
