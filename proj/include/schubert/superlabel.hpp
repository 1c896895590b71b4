#pragma once

// The super alphabet ... < 2' < 1' < 1 < 2 < ..., labelings of permutation
// diagrams, balanced super labelings (BSLs) and their combinatorics.

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "schubert/perm.hpp"
#include "schubert/poly.hpp"

namespace schubert {

/// Encoded as a signed int: k' is -k, k is +k. Integer order is alphabet order.
class Letter {
public:
    constexpr Letter() = default;
    constexpr explicit Letter(int code) : code_(code) {}
    static constexpr Letter marked(int k) { return Letter(-k); }
    static constexpr Letter unmarked(int k) { return Letter(k); }

    constexpr int code() const { return code_; }
    constexpr bool is_marked() const { return code_ < 0; }
    constexpr int index() const { return code_ < 0 ? -code_ : code_; }
    constexpr auto operator<=>(const Letter&) const = default;

private:
    int code_ = 0;
};

std::string to_string(Letter a);
/// "3" or "3'"; throws std::invalid_argument.
Letter parse_letter(std::string_view text);

/// Letters assigned to the cells of D(w), in the row-major order of w.diagram().
struct Labeling {
    Permutation w;
    std::vector<int> codes;

    Labeling() = default;
    Labeling(Permutation perm, std::vector<int> letter_codes);

    /// Throws std::out_of_range if (row, col) is not in D(w).
    Letter at(int row, int col) const;
    Letter at(const Cell& c) const { return at(c.row, c.col); }
    std::size_t size() const { return codes.size(); }

    auto operator<=>(const Labeling&) const = default;
    bool operator==(const Labeling&) const = default;
};

bool is_balanced(const Labeling& t);
bool is_bsl(const Labeling& t);

/// All BSLs of D(w), lexicographic by row-major cell scan in alphabet order.
std::vector<Labeling> enumerate_bsl(const Permutation& w);
/// Counts without storing, split by number of unmarked letters.
std::vector<long> count_bsl_by_degree(const Permutation& w);

/// prod x_i^{#i} (-y_i)^{#i'} over the budget n = w.size().
SparsePoly monomial(const Labeling& t);
SparsePoly bsl_generating_function(const Permutation& w);

/// Transpose and swap i <-> i'; a labeling of D(w^-1).
Labeling star(const Labeling& t);

struct Factorization {
    Labeling marked_part;    // labeling of D(u), marked letters only
    Labeling unmarked_part;  // labeling of D(v), unmarked letters only
    Permutation u;
    Permutation v;
};

/// Unique T = T_u v + u T_v with w = u v; throws std::invalid_argument unless t is a BSL.
Factorization factor_bsl(const Labeling& t);
/// T_u v + u T_v.
Labeling reconstruct(const Labeling& marked_part, const Labeling& unmarked_part);
/// Removes border cell (i, w(i+1)) and swaps rows i, i+1: a labeling of D(w s_i).
Labeling remove_border_cell(const Labeling& t, int row);

int homological_degree(const Labeling& t);

/// (a_{-n}, ..., a_{-1} | a_1, ..., a_n) flattened to length 2n.
using Weight = std::vector<int>;
Weight weight(const Labeling& t);
/// Partial sums from the left of a never exceed those of b.
bool dominance_leq(const Weight& a, const Weight& b);

/// Rows of the array rendered "1,1|2" with empty rows kept.
std::string to_string(const Labeling& t);

}  // namespace schubert
