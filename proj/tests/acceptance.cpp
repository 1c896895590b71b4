// One PASS/FAIL line per acceptance criterion, with wall time against its limit.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>

#include "schubert/complex.hpp"
#include "schubert/functor.hpp"
#include "schubert/ideal.hpp"
#include "schubert/poly.hpp"
#include "schubert/superlabel.hpp"

using namespace schubert;

namespace {

Permutation P(const char* s) { return parse_permutation(s); }

using Sizes = std::vector<std::size_t>;

// Returns "" on success, else a short reason.
using Body = std::function<std::string()>;

int failures = 0;

void criterion(int id, const char* title, double limit_seconds, const Body& body) {
    const auto t0 = std::chrono::steady_clock::now();
    std::string why;
    try {
        why = body();
    } catch (const std::exception& ex) {
        why = std::string("exception: ") + ex.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (why.empty() && secs > limit_seconds) why = "too slow";
    if (!why.empty()) ++failures;
    std::printf("%s %2d  %-58s %9.4fs / %gs%s%s\n", why.empty() ? "PASS" : "FAIL", id, title, secs, limit_seconds,
                why.empty() ? "" : "  ", why.c_str());
    std::fflush(stdout);
}

std::vector<Permutation> non_identity(int n) {
    auto all = all_permutations(n);
    all.erase(std::remove_if(all.begin(), all.end(), [](const Permutation& w) { return w.is_identity(); }), all.end());
    return all;
}

}  // namespace

int main() {
    criterion(1, "S_321 equals the expanded product", 1e-3, [] {
        const auto p = double_schubert(P("321"));
        const auto q = parse_poly("x1^2*x2 - x1^2*y1 - x1*x2*y1 - x1*x2*y2 + x1*y1^2 + x1*y1*y2 + x2*y1*y2 - y1^2*y2", 3);
        return p == q ? "" : "got " + to_string(p);
    });

    criterion(2, "BSL counts 8 / 64 and the 321 list", 1.0, []() -> std::string {
        const std::set<std::string> expect{"1,1|2",  "1,1|1'",  "1,2'|2",  "1',2'|1",
                                           "1,1'|2", "1',1|1'", "1',2'|2", "1',2'|1'"};
        std::set<std::string> got;
        for (const auto& t : enumerate_bsl(P("321"))) got.insert(to_string(t));
        if (got != expect) return "321 list differs";
        const auto c = enumerate_bsl(P("4321")).size();
        return c == 64 ? "" : "4321 count " + std::to_string(c);
    });

    criterion(3, "generating function on all of S4", 5.0, []() -> std::string {
        for (const auto& w : all_permutations(4))
            if (bsl_generating_function(w) != double_schubert(w)) return to_string(w);
        return "";
    });
    criterion(3, "generating function on 20 seeded w in S5 with 54321", 60.0, []() -> std::string {
        auto all = all_permutations(5);
        std::mt19937_64 rng(5);
        std::shuffle(all.begin(), all.end(), rng);
        std::vector<Permutation> sample{Permutation::longest(5)};
        for (const auto& w : all)
            if (sample.size() < 20 && w != sample.front()) sample.push_back(w);
        for (const auto& w : sample)
            if (bsl_generating_function(w) != double_schubert(w)) return to_string(w);
        return "";
    });

    criterion(4, "identity (2) on S4", 10.0, []() -> std::string {
        for (const auto& w : all_permutations(4))
            if (!check_identity_2(w)) return to_string(w);
        return "";
    });

    criterion(5, "maximal transition identity on S5", 60.0, []() -> std::string {
        for (const auto& w : non_identity(5))
            if (!check_transition_identity(w)) return to_string(w);
        return "";
    });

    criterion(6, "image matrix has full column rank on S4", 30.0, []() -> std::string {
        for (const auto& w : all_permutations(4)) {
            const FunctorImage f(w);
            if (rank(f.image_matrix()) != f.bsl().size()) return to_string(w);
        }
        return "";
    });

    criterion(7, "ranks 1423 (3,6,3), 2413 (2,6,6,2), symbolic d o d = 0", 10.0, []() -> std::string {
        const auto a = build_complex(P("1423"), FlaggedMap::generic(4));
        const auto b = build_complex(P("2413"), FlaggedMap::generic(4));
        if (a.ranks() != Sizes{3, 6, 3}) return "1423 ranks";
        if (b.ranks() != Sizes{2, 6, 6, 2}) return "2413 ranks";
        if (!verify_dd_zero(a) || !verify_dd_zero(b)) return "d o d";
        return "";
    });

    criterion(8, "identity map is exact on S4 over Q and F_p", 30.0, []() -> std::string {
        const auto p = default_prime();
        for (const auto& w : non_identity(4)) {
            const auto c = build_complex(w, FlaggedMap::generic(4));
            const Sizes zero(c.bases.size(), 0);
            const auto eye = FlaggedMap::identity(4).entries;
            if (homology_ranks(c, {eye, std::nullopt}) != zero) return to_string(w) + " over Q";
            if (homology_ranks(c, {eye, p}) != zero) return to_string(w) + " over F_p";
        }
        return "";
    });

    criterion(9, "random points acyclic on S4; 2413 on-locus h0 = 1", 30.0, []() -> std::string {
        std::mt19937_64 rng(2024);
        for (const auto& w : all_permutations(4)) {
            const auto c = build_complex(w, FlaggedMap::generic(4));
            for (int k = 0; k < 3; ++k) {
                const auto m = random_matrix(4, rng);
                const auto h = homology_ranks(c, {m, std::nullopt});
                for (std::size_t i = 1; i < h.size(); ++i)
                    if (h[i] != 0) return to_string(w) + " h" + std::to_string(i);
                const bool on = locus_membership(w, m);
                if (h[0] != (on ? 1u : 0u)) return to_string(w) + " h0";
            }
        }
        auto pt = random_matrix(4, rng, 1000);
        pt(0, 0) = 0, pt(0, 1) = 0;
        pt(2, 0) = pt(1, 0) * 5, pt(2, 1) = pt(1, 1) * 5;
        if (!locus_membership(P("2413"), pt)) return "point not on the locus";
        const auto h = homology_ranks(build_complex(P("2413"), FlaggedMap::rational(pt)));
        return h[0] == 1 ? "" : "2413 h0 = " + std::to_string(h[0]);
    });

    criterion(10, "Euler characteristic 0 and S_w(-1,-1) = 0 on S5", 60.0, []() -> std::string {
        for (const auto& w : non_identity(5)) {
            const auto r = term_ranks(w);
            long chi = 0;
            for (std::size_t i = 0; i < r.size(); ++i) chi += (i % 2 ? -1L : 1L) * static_cast<long>(r[i]);
            if (chi != 0) return to_string(w);
            if (evaluate_uniform(double_schubert(w), -1, -1) != 0) return to_string(w) + " S(-1,-1)";
        }
        return "";
    });

    criterion(11, "rank and generator membership agree, 200 matrices x S4", 30.0, []() -> std::string {
        std::mt19937_64 rng(11);
        const auto all = all_permutations(4);
        for (int k = 0; k < 200; ++k) {
            Matrix<mpq_class> m;
            switch (k % 4) {
                case 0: m = random_locus_point(all[rng() % all.size()], rng, 5); break;
                case 1: m = random_matrix(4, rng, 1); break;
                case 2: {
                    const auto a = random_matrix(4, rng, 3), b = random_matrix(4, rng, 3);
                    m = Matrix<mpq_class>(4, 4);
                    for (std::size_t i = 0; i < 4; ++i)
                        for (std::size_t j = 0; j < 4; ++j)
                            for (std::size_t t = 0; t < 2; ++t) m(i, j) += a(i, t) * b(t, j);
                    break;
                }
                default: m = random_matrix(4, rng);
            }
            for (const auto& w : all)
                if (locus_membership_by_rank(w, m) != locus_membership_by_generators(w, m))
                    return to_string(w) + " matrix " + std::to_string(k);
        }
        return "";
    });

    criterion(12, "term ranks from the filtration and z_w recursion on S4", 10.0, []() -> std::string {
        for (const auto& w : all_permutations(4)) {
            Sizes expect(static_cast<std::size_t>(w.length()) + 1, 0);
            for (const auto& v : weak_order_ideal(w)) {
                const auto unmarked = count_bsl_by_degree(v).back();
                const auto marked = count_bsl_by_degree(w * v.inverse()).front();
                expect[static_cast<std::size_t>(v.length())] += static_cast<std::size_t>(unmarked * marked);
            }
            if (expect != term_ranks(w)) return to_string(w) + " term ranks";
            if (w.is_identity()) continue;
            const auto t = maximal_transition(w);
            auto z = [](const Permutation& x) { return enumerate_bsl(x).size(); };
            std::size_t rhs = 2 * z(t.v);
            for (const auto& psi : t.psis) rhs += z(psi);
            if (z(w) != rhs) return to_string(w) + " z recursion";
        }
        return "";
    });

    std::printf("%s\n", failures ? "SOME CRITERIA FAILED" : "ALL CRITERIA PASSED");
    return failures ? 1 : 0;
}
