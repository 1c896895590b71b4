#include <doctest.h>

#include <functional>
#include <random>

#include "schubert/ideal.hpp"

using namespace schubert;

namespace {

Permutation P(const char* s) { return parse_permutation(s); }

std::vector<std::vector<int>> subsets(int n, int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    std::function<void(int)> go = [&](int start) {
        if (static_cast<int>(cur.size()) == k) {
            out.push_back(cur);
            return;
        }
        for (int i = start; i <= n; ++i) {
            cur.push_back(i);
            go(i + 1);
            cur.pop_back();
        }
    };
    go(1);
    return out;
}

// Every block rows<=q x cols<=p has all (r_w(p,q)+1)-minors zero, by cofactor expansion.
mpq_class cofactor_det(const Matrix<mpq_class>& a, std::vector<int> rows, std::vector<int> cols) {
    if (rows.empty()) return 1;
    const int r = rows.front();
    rows.erase(rows.begin());
    mpq_class acc = 0;
    for (std::size_t k = 0; k < cols.size(); ++k) {
        auto rest = cols;
        rest.erase(rest.begin() + static_cast<long>(k));
        const mpq_class t = a(static_cast<std::size_t>(r - 1), static_cast<std::size_t>(cols[k] - 1)) * cofactor_det(a, rows, rest);
        acc += k % 2 ? -t : t;
    }
    return acc;
}

bool membership_oracle(const Permutation& w, const Matrix<mpq_class>& a) {
    const int n = w.size();
    for (int p = 1; p <= n; ++p)
        for (int q = 1; q <= n; ++q) {
            const int k = w.rank(p, q) + 1;
            if (k > std::min(p, q)) continue;
            for (const auto& rs : subsets(q, k))
                for (const auto& cs : subsets(p, k))
                    if (cofactor_det(a, rs, cs) != 0) return false;
        }
    return true;
}

Matrix<mpq_class> mixed(std::mt19937_64& rng, int k) {
    const auto all = all_permutations(4);
    switch (k % 4) {
        case 0: return random_locus_point(all[rng() % all.size()], rng, 5);
        case 1: return random_matrix(4, rng, 1);
        case 2: {
            // rank <= 2
            const auto a = random_matrix(4, rng, 3), b = random_matrix(4, rng, 3);
            Matrix<mpq_class> m(4, 4);
            for (std::size_t i = 0; i < 4; ++i)
                for (std::size_t j = 0; j < 4; ++j)
                    for (std::size_t t = 0; t < 2; ++t) m(i, j) += a(i, t) * b(t, j);
            return m;
        }
        default: return random_matrix(4, rng);
    }
}

}  // namespace

TEST_CASE("generators") {
    const auto g = ideal_generators(P("2413"));
    CHECK(g.size() == 5);
    CHECK(g.front() == MinorDescriptor{{1}, {1}});
    CHECK(ideal_generators(Permutation::identity(4)).empty());
    const auto h = ideal_generators(P("1423"));
    REQUIRE(h.size() == 3);
    CHECK(to_string(h[0]) == "det d[{1,2}][{1,2}]");
    for (const auto& m : h) {
        CHECK(m.rows == std::vector<int>{1, 2});
        CHECK(m.cols.size() == 2);
    }
}

TEST_CASE("generator cap") {
    std::vector<int> word;
    for (int i = 1; i <= 10; ++i) word.push_back(i);
    for (int i = 21; i <= 30; ++i) word.push_back(i);
    for (int i = 11; i <= 20; ++i) word.push_back(i);
    CHECK_THROWS_AS(ideal_generators(Permutation(word)), std::length_error);
}

TEST_CASE("minor values") {
    Matrix<mpq_class> a(2, 2);
    a(0, 0) = 1, a(0, 1) = 2, a(1, 0) = 3, a(1, 1) = 4;
    CHECK(minor_value(a, {{1, 2}, {1, 2}}) == -2);
    CHECK(minor_value(a, {{2}, {1}}) == 3);
}

TEST_CASE("membership examples") {
    Matrix<mpq_class> eye(4, 4), zero(4, 4);
    for (std::size_t i = 0; i < 4; ++i) eye(i, i) = 1;
    CHECK(locus_membership(Permutation::identity(4), eye));
    CHECK_FALSE(locus_membership(P("2413"), eye));
    CHECK(locus_membership(P("4321"), zero));
    std::mt19937_64 rng(9);
    for (const auto& w : all_permutations(4)) CHECK(locus_membership(w, random_locus_point(w, rng)));
}

TEST_CASE("rank and generator routes agree with minors") {
    std::mt19937_64 rng(42);
    const auto all = all_permutations(4);
    for (int k = 0; k < 200; ++k) {
        const auto m = mixed(rng, k);
        for (const auto& w : all) {
            const bool by_rank = locus_membership_by_rank(w, m);
            CHECK(by_rank == locus_membership_by_generators(w, m));
            CHECK(by_rank == membership_oracle(w, m));
        }
        // Loci shrink as w grows.
        for (const auto& u : all)
            for (const auto& w : all)
                if (strong_leq(u, w) && locus_membership_by_rank(w, m)) CHECK(locus_membership_by_rank(u, m));
    }
}

TEST_CASE("codimension and Fulton class") {
    CHECK(expected_codimension(P("2413")) == 3);
    CHECK(expected_codimension(Permutation::identity(3)) == 0);
    const auto f = fulton_class(P("21"));
    CHECK(f.polynomial == double_schubert(P("21")));
    CHECK_FALSE(f.dictionary.empty());
}
