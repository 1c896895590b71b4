#include "schubert/ideal.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace schubert {

std::string to_string(const MinorDescriptor& m) {
    auto set = [](const std::vector<int>& v) {
        std::string s = "{";
        for (std::size_t k = 0; k < v.size(); ++k) s += (k ? "," : "") + std::to_string(v[k]);
        return s + "}";
    };
    return "det d[" + set(m.rows) + "][" + set(m.cols) + "]";
}

namespace {

std::vector<std::vector<int>> subsets(int n, int k) {
    std::vector<std::vector<int>> out;
    if (k > n || k < 0) return out;
    std::vector<int> pick(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) pick[i] = i + 1;
    for (;;) {
        out.push_back(pick);
        int i = k - 1;
        while (i >= 0 && pick[i] == n - k + i + 1) --i;
        if (i < 0) break;
        ++pick[i];
        for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
    return out;
}

mpz_class binomial(int n, int k) {
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return b;
}

std::size_t block_rank(const Matrix<mpq_class>& point, int rows, int cols) {
    Matrix<mpq_class> b(static_cast<std::size_t>(rows), static_cast<std::size_t>(cols));
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) b(i, j) = point(i, j);
    return rank(b);
}

void check_square(const Permutation& w, const Matrix<mpq_class>& point) {
    if (point.rows() != point.cols() || static_cast<int>(point.rows()) != w.size())
        throw std::invalid_argument("point must be an n x n matrix for n = " + std::to_string(w.size()));
}

}  // namespace

std::vector<MinorDescriptor> ideal_generators(const Permutation& w) {
    std::set<MinorDescriptor> out;
    mpz_class budget = 0;
    for (const auto& c : southeast_corners(w)) {
        const int p = c.row, q = c.col, k = w.rank(p, q) + 1;
        budget += binomial(p, k) * binomial(q, k);
        if (budget > kMaxMinors) throw std::length_error("more than 100000 generator minors");
        for (const auto& rows : subsets(p, k))
            for (const auto& cols : subsets(q, k)) out.insert({rows, cols});
    }
    return {out.begin(), out.end()};
}

mpq_class minor_value(const Matrix<mpq_class>& point, const MinorDescriptor& m) {
    const std::size_t k = m.rows.size();
    if (k != m.cols.size()) throw std::invalid_argument("minor is not square");
    Matrix<mpq_class> a(k, k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
            a(i, j) = point(static_cast<std::size_t>(m.rows[i] - 1), static_cast<std::size_t>(m.cols[j] - 1));
    mpq_class det = 1;
    for (std::size_t c = 0; c < k; ++c) {
        std::size_t p = c;
        while (p < k && a(p, c) == 0) ++p;
        if (p == k) return 0;
        if (p != c) {
            for (std::size_t j = 0; j < k; ++j) std::swap(a(p, j), a(c, j));
            det = -det;
        }
        det *= a(c, c);
        for (std::size_t i = c + 1; i < k; ++i) {
            if (a(i, c) == 0) continue;
            const mpq_class f = a(i, c) / a(c, c);
            for (std::size_t j = c; j < k; ++j) a(i, j) -= f * a(c, j);
        }
    }
    return det;
}

bool locus_membership_by_rank(const Permutation& w, const Matrix<mpq_class>& point) {
    check_square(w, point);
    const int n = w.size();
    for (int p = 1; p <= n; ++p)
        for (int q = 1; q <= n; ++q)
            if (block_rank(point, q, p) > static_cast<std::size_t>(w.rank(p, q))) return false;
    return true;
}

bool locus_membership_by_generators(const Permutation& w, const Matrix<mpq_class>& point) {
    check_square(w, point);
    for (const auto& m : ideal_generators(w.inverse()))
        if (minor_value(point, m) != 0) return false;
    return true;
}

bool locus_membership(const Permutation& w, const Matrix<mpq_class>& point) {
    const bool by_rank = locus_membership_by_rank(w, point);
    if (by_rank != locus_membership_by_generators(w, point))
        throw std::logic_error("rank conditions and generator minors disagree for " + to_string(w));
    return by_rank;
}

int expected_codimension(const Permutation& w) { return w.length(); }

FultonClass fulton_class(const Permutation& w) {
    FultonClass f{double_schubert(w), {}};
    for (int i = 1; i <= w.size(); ++i)
        f.dictionary.push_back("x" + std::to_string(i) + " = -c1(E_" + std::to_string(i) + "/E_" +
                               std::to_string(i - 1) + ")");
    for (int j = 1; j <= w.size(); ++j)
        f.dictionary.push_back("y" + std::to_string(j) + " = -c1(ker(F_" + std::to_string(j) + " -> F_" +
                               std::to_string(j - 1) + "))");
    return f;
}

Matrix<mpq_class> random_matrix(int n, std::mt19937_64& rng, long bound) {
    std::uniform_int_distribution<long> dist(-bound, bound);
    Matrix<mpq_class> m(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = dist(rng);
    return m;
}

Matrix<mpq_class> random_locus_point(const Permutation& w, std::mt19937_64& rng, long bound) {
    const auto n = static_cast<std::size_t>(w.size());
    std::uniform_int_distribution<long> dist(-bound, bound);
    auto nonzero = [&] {
        long v = 0;
        while (v == 0) v = dist(rng);
        return mpq_class(v);
    };
    Matrix<mpq_class> lower(n, n), upper(n, n), perm(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) {
                lower(i, j) = nonzero();
                upper(i, j) = nonzero();
            } else if (i > j) {
                lower(i, j) = dist(rng);
            } else {
                upper(i, j) = dist(rng);
            }
        }
    for (int j = 1; j <= w.size(); ++j) perm(static_cast<std::size_t>(w(j) - 1), static_cast<std::size_t>(j - 1)) = 1;
    auto mul = [n](const Matrix<mpq_class>& a, const Matrix<mpq_class>& b) {
        Matrix<mpq_class> c(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t k = 0; k < n; ++k) {
                if (a(i, k) == 0) continue;
                for (std::size_t j = 0; j < n; ++j) c(i, j) += a(i, k) * b(k, j);
            }
        return c;
    };
    return mul(mul(lower, perm), upper);
}

}  // namespace schubert
