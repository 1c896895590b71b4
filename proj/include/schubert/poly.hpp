#pragma once

// Sparse polynomials in x1..xn, y1..yn with GMP integer coefficients,
// divided differences in the x variables, and double Schubert polynomials.

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "schubert/perm.hpp"

namespace schubert {

struct Var {
    enum Kind : std::uint8_t { X, Y };
    Kind kind = X;
    int index = 1;  // 1-based
    auto operator<=>(const Var&) const = default;
};

std::string to_string(const Var& v);

class SparsePoly {
public:
    /// x exponents first (x1..xn), then y exponents.
    using Exponent = std::vector<std::uint8_t>;
    /// Graded lexicographic, largest term first.
    struct TermOrder {
        bool operator()(const Exponent& a, const Exponent& b) const;
    };
    using Terms = std::map<Exponent, mpz_class, TermOrder>;

    explicit SparsePoly(int n = 0) : n_(n) {}
    static SparsePoly constant(int n, const mpz_class& c);
    static SparsePoly variable(int n, Var v);

    int nvars() const { return n_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    /// Coefficient of the monomial, zero if absent.
    mpz_class coefficient(const Exponent& e) const;
    mpz_class constant_term() const;
    int total_degree() const;

    /// Adds c * monomial(e); drops the term if it cancels.
    void add_term(const Exponent& e, const mpz_class& c);

    SparsePoly& operator+=(const SparsePoly& o);
    SparsePoly& operator-=(const SparsePoly& o);
    SparsePoly& operator*=(const mpz_class& c);
    friend SparsePoly operator+(SparsePoly a, const SparsePoly& b) { return a += b; }
    friend SparsePoly operator-(SparsePoly a, const SparsePoly& b) { return a -= b; }
    friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b);
    friend SparsePoly operator*(SparsePoly a, const mpz_class& c) { return a *= c; }
    SparsePoly operator-() const;
    bool operator==(const SparsePoly& o) const { return n_ == o.n_ && terms_ == o.terms_; }

    /// Same polynomial over a larger variable budget m >= n.
    SparsePoly padded(int m) const;
    /// y_j -> 0.
    SparsePoly with_y_zero() const;
    /// x_i -> sx * x_i, y_j -> sy * y_j with sx, sy in {+1, -1}.
    SparsePoly with_signs(int sx, int sy) const;
    /// x_i <-> y_i.
    SparsePoly swapped_xy() const;

private:
    void check_budget(const SparsePoly& o) const;

    int n_ = 0;
    Terms terms_;
};

/// (P - s_i P) / (x_i - x_{i+1}); throws std::out_of_range unless 1 <= i < n.
SparsePoly divided_difference(const SparsePoly& p, int i);

/// Memoized; thread-safe.
SparsePoly double_schubert(const Permutation& w);
SparsePoly single_schubert(const Permutation& w);

/// Sequence of indices i such that w0 s_{i1} s_{i2} ... reaches w, each step
/// dropping length by one. `first` picks the leftmost ascent of the target at
/// each step, otherwise the rightmost.
std::vector<int> descent_path(const Permutation& w, bool first);
/// Applies the divided differences of `path` to the w0 product; no caching.
SparsePoly schubert_from_path(int n, const std::vector<int>& path);

/// Exact evaluation; throws std::invalid_argument if a variable occurring in
/// p is missing from the assignment.
mpq_class substitute(const SparsePoly& p, const std::map<Var, mpq_class>& assignment);
/// Every x_i := x, every y_j := y.
mpq_class evaluate_uniform(const SparsePoly& p, const mpq_class& x, const mpq_class& y);

/// S_w(x,y) = sum over u <=_W w of S_u(x) S_{u w^-1}(-y).
bool check_identity_2(const Permutation& w);
/// S_w = S_v (x_alpha - y_{w(beta)}) + sum_t S_{psi_t} for the maximal transition.
bool check_transition_identity(const Permutation& w);

/// "x1^2*x2 - x1*y1*y2 + 3"; zero renders as "0".
std::string to_string(const SparsePoly& p);
/// Parses the rendered grammar. With n < 0 the budget is the largest index seen.
SparsePoly parse_poly(std::string_view text, int n = -1);

}  // namespace schubert
