#include "schubert/linalg.hpp"

#include <algorithm>
#include <cstdlib>

namespace schubert {

std::size_t rank(Matrix<mpz_class> m) {
    // Bareiss: every intermediate entry is a minor, so divisions are exact.
    const std::size_t rows = m.rows(), cols = m.cols();
    std::size_t r = 0;
    mpz_class prev = 1;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && m(p, c) == 0) ++p;
        if (p == rows) continue;
        if (p != r)
            for (std::size_t j = 0; j < cols; ++j) std::swap(m(p, j), m(r, j));
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j) {
                m(i, j) = m(r, c) * m(i, j) - m(i, c) * m(r, j);
                mpz_divexact(m(i, j).get_mpz_t(), m(i, j).get_mpz_t(), prev.get_mpz_t());
            }
            m(i, c) = 0;
        }
        prev = m(r, c);
        ++r;
    }
    return r;
}

std::size_t rank(const Matrix<mpq_class>& m) {
    Matrix<mpz_class> z(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        mpz_class l = 1;
        for (std::size_t j = 0; j < m.cols(); ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
        for (std::size_t j = 0; j < m.cols(); ++j) z(i, j) = m(i, j).get_num() * (l / m(i, j).get_den());
    }
    return rank(std::move(z));
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

std::size_t rank_mod_p(Matrix<std::uint64_t> m, std::uint64_t p) {
    const std::size_t rows = m.rows(), cols = m.cols();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t q = r;
        while (q < rows && m(q, c) % p == 0) ++q;
        if (q == rows) continue;
        if (q != r)
            for (std::size_t j = 0; j < cols; ++j) std::swap(m(q, j), m(r, j));
        const std::uint64_t inv = powmod(m(r, c), p - 2, p);
        for (std::size_t i = r + 1; i < rows; ++i) {
            const std::uint64_t f = mulmod(m(i, c) % p, inv, p);
            if (!f) continue;
            for (std::size_t j = c; j < cols; ++j)
                m(i, j) = (m(i, j) % p + p - mulmod(f, m(r, j), p)) % p;
        }
        ++r;
    }
    return r;
}

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL})
        if (n % q == 0) return n == q;
    std::uint64_t d = n - 1;
    int s = 0;
    while (!(d & 1)) {
        d >>= 1;
        ++s;
    }
    for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        std::uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int r = 1; r < s && composite; ++r) {
            x = mulmod(x, x, n);
            if (x == n - 1) composite = false;
        }
        if (composite) return false;
    }
    return true;
}

std::uint64_t default_prime() {
    constexpr std::uint64_t mersenne61 = (1ULL << 61) - 1;
    const char* env = std::getenv("SCHUBERT_PRIME");
    if (!env || !*env) return mersenne61;
    char* end = nullptr;
    const unsigned long long p = std::strtoull(env, &end, 10);
    if (*end != '\0' || p <= (1ULL << 30) || p >= (1ULL << 63) || !is_prime(p))
        throw std::invalid_argument("SCHUBERT_PRIME must be a prime between 2^30 and 2^63");
    return p;
}

std::uint64_t reduce_mod(const mpq_class& q, std::uint64_t p) {
    const mpz_class pz(std::to_string(p));
    mpz_class num = q.get_num() % pz, den = q.get_den() % pz;
    if (num < 0) num += pz;
    if (den == 0) throw std::domain_error("denominator vanishes modulo p");
    const auto n64 = std::stoull(num.get_str()), d64 = std::stoull(den.get_str());
    return mulmod(n64, powmod(d64, p - 2, p), p);
}

mpq_class parse_rational(const std::string& text) {
    std::string t;
    for (char ch : text)
        if (ch != ' ') t += ch;
    const auto slash = t.find('/');
    auto integer = [&](const std::string& s) {
        std::size_t k = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
        if (k == s.size()) throw std::invalid_argument("bad rational '" + text + "'");
        for (std::size_t j = k; j < s.size(); ++j)
            if (s[j] < '0' || s[j] > '9') throw std::invalid_argument("bad rational '" + text + "'");
        return mpz_class(s[0] == '+' ? s.substr(1) : s);
    };
    if (slash == std::string::npos) return mpq_class(integer(t));
    const mpz_class num = integer(t.substr(0, slash)), den = integer(t.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
    mpq_class q(num, den);
    q.canonicalize();
    return q;
}

FullRankSolver::FullRankSolver(Matrix<mpq_class> a) : a_(std::move(a)) {
    const std::size_t m = a_.rows(), k = a_.cols();
    // Greedy independent rows via elimination on a working copy.
    std::vector<std::vector<mpq_class>> basis;  // reduced rows, each with a leading column
    std::vector<std::size_t> lead;
    for (std::size_t r = 0; r < m && pivots_.size() < k; ++r) {
        std::vector<mpq_class> row(k);
        for (std::size_t j = 0; j < k; ++j) row[j] = a_(r, j);
        for (std::size_t b = 0; b < basis.size(); ++b) {
            if (row[lead[b]] == 0) continue;
            const mpq_class f = row[lead[b]] / basis[b][lead[b]];
            for (std::size_t j = 0; j < k; ++j) row[j] -= f * basis[b][j];
        }
        auto it = std::find_if(row.begin(), row.end(), [](const mpq_class& x) { return x != 0; });
        if (it == row.end()) continue;
        lead.push_back(static_cast<std::size_t>(it - row.begin()));
        basis.push_back(std::move(row));
        pivots_.push_back(r);
    }
    if (pivots_.size() < k) throw std::domain_error("matrix is rank deficient");

    // Gauss-Jordan inverse of the k x k pivot block.
    Matrix<mpq_class> s(k, 2 * k);
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) s(i, j) = a_(pivots_[i], j);
        s(i, k + i) = 1;
    }
    for (std::size_t c = 0; c < k; ++c) {
        std::size_t p = c;
        while (s(p, c) == 0) ++p;
        if (p != c)
            for (std::size_t j = 0; j < 2 * k; ++j) std::swap(s(p, j), s(c, j));
        const mpq_class piv = s(c, c);
        for (std::size_t j = 0; j < 2 * k; ++j) s(c, j) /= piv;
        for (std::size_t i = 0; i < k; ++i) {
            if (i == c || s(i, c) == 0) continue;
            const mpq_class f = s(i, c);
            for (std::size_t j = 0; j < 2 * k; ++j) s(i, j) -= f * s(c, j);
        }
    }
    inv_ = Matrix<mpq_class>(k, k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) inv_(i, j) = s(i, k + j);
}

}  // namespace schubert
