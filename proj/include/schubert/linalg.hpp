#pragma once

// Dense exact linear algebra: ranks over Z/Q (fraction-free Bareiss) and
// over F_p, plus a full-column-rank solver reused across many right-hand sides.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace schubert {

template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, const T& fill = T())
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
    bool operator==(const Matrix&) const = default;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<T> data_;
};

inline bool is_zero_value(const mpq_class& q) { return q == 0; }

std::size_t rank(Matrix<mpz_class> m);
std::size_t rank(const Matrix<mpq_class>& m);
std::size_t rank_mod_p(Matrix<std::uint64_t> m, std::uint64_t p);

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p);
std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p);
/// Deterministic Miller-Rabin for 64-bit inputs.
bool is_prime(std::uint64_t n);
/// 2^61 - 1 unless SCHUBERT_PRIME names another prime above 2^30.
std::uint64_t default_prime();
/// Throws std::domain_error when p divides the denominator.
std::uint64_t reduce_mod(const mpq_class& q, std::uint64_t p);

/// Rejects "1/0", accepts "-3", "7/4", " 2 ".
mpq_class parse_rational(const std::string& text);

/// Solves A c = b for A with full column rank. Chooses a nonsingular set of
/// pivot rows once, keeps the inverse of that square block, and checks
/// candidate solutions against every row.
class FullRankSolver {
public:
    FullRankSolver() = default;
    /// Throws std::domain_error if rank(A) < cols(A).
    explicit FullRankSolver(Matrix<mpq_class> a);

    std::size_t rows() const { return a_.rows(); }
    std::size_t cols() const { return a_.cols(); }
    const std::vector<std::size_t>& pivot_rows() const { return pivots_; }

    /// V needs V + V, V * mpq_class and is_zero_value(V). On failure the first
    /// row with a nonzero residual is stored in *failing_row when given.
    template <class V>
    std::optional<std::vector<V>> solve(const std::vector<V>& b, const V& zero,
                                        std::size_t* failing_row = nullptr) const {
        if (b.size() != a_.rows()) throw std::invalid_argument("right-hand side has wrong length");
        const std::size_t k = a_.cols();
        std::vector<V> c(k, zero);
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j)
                if (inv_(i, j) != 0) c[i] = c[i] + b[pivots_[j]] * inv_(i, j);
        for (std::size_t r = 0; r < a_.rows(); ++r) {
            V acc = b[r] * mpq_class(-1);
            for (std::size_t j = 0; j < k; ++j)
                if (a_(r, j) != 0) acc = acc + c[j] * a_(r, j);
            if (!is_zero_value(acc)) {
                if (failing_row) *failing_row = r;
                return std::nullopt;
            }
        }
        return c;
    }

private:
    Matrix<mpq_class> a_;
    Matrix<mpq_class> inv_;
    std::vector<std::size_t> pivots_;
};

}  // namespace schubert
