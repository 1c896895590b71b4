#include "schubert/verify.hpp"

#include <chrono>
#include <functional>
#include <random>
#include <set>
#include <stdexcept>

#include "schubert/complex.hpp"
#include "schubert/functor.hpp"
#include "schubert/ideal.hpp"
#include "schubert/poly.hpp"
#include "schubert/superlabel.hpp"

namespace schubert {

bool SuiteReport::passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

json SuiteReport::to_json() const {
    json list = json::array();
    std::size_t ok = 0;
    for (const auto& c : checks) {
        ok += c.passed;
        list.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}, {"seconds", c.seconds}});
    }
    return {{"suite", suite},
            {"seed", seed},
            {"passed", passed()},
            {"counts", {{"passed", ok}, {"failed", checks.size() - ok}}},
            {"checks", list}};
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::vector<Permutation> sample_permutations(int n, std::size_t count, std::uint64_t seed,
                                             const std::vector<Permutation>& required) {
    auto all = all_permutations(n);
    std::vector<Permutation> out;
    for (const auto& w : required)
        if (std::find(out.begin(), out.end(), w) == out.end()) out.push_back(w);
    std::mt19937_64 rng(seed);
    std::shuffle(all.begin(), all.end(), rng);
    for (const auto& w : all) {
        if (out.size() >= count) break;
        if (std::find(out.begin(), out.end(), w) == out.end()) out.push_back(w);
    }
    return out;
}

namespace {

using Clock = std::chrono::steady_clock;

// A check returns an empty string on success, otherwise what went wrong.
CheckResult run_check(const std::string& name, const std::function<std::string()>& body) {
    const auto start = Clock::now();
    CheckResult r{name, false, "", 0};
    try {
        r.detail = body();
        r.passed = r.detail.empty();
    } catch (const std::exception& ex) {
        r.detail = std::string("exception: ") + ex.what();
    }
    r.seconds = std::chrono::duration<double>(Clock::now() - start).count();
    return r;
}

// Runs fn over perms in parallel; reports the first failure in list order.
std::string over(const std::vector<Permutation>& perms, unsigned threads,
                 const std::function<std::string(const Permutation&, std::size_t)>& fn) {
    std::vector<std::string> failures(perms.size());
    parallel_for(
        perms.size(),
        [&](std::size_t i) {
            try {
                failures[i] = fn(perms[i], i);
            } catch (const std::exception& ex) {
                failures[i] = std::string("exception: ") + ex.what();
            }
        },
        threads);
    for (std::size_t i = 0; i < perms.size(); ++i)
        if (!failures[i].empty()) return "w=" + to_string(perms[i]) + ": " + failures[i];
    return "";
}

// Random check with one retry under a fresh seed.
std::string with_retry(std::uint64_t seed, const std::function<std::string(std::uint64_t)>& fn) {
    auto first = fn(seed);
    if (first.empty()) return "";
    auto second = fn(mix_seed(seed, 0xfeed));
    return second.empty() ? "" : first + " (retry also failed: " + second + ")";
}

std::string join(const std::vector<std::size_t>& v) {
    std::string s = "[";
    for (std::size_t k = 0; k < v.size(); ++k) s += (k ? "," : "") + std::to_string(v[k]);
    return s + "]";
}

std::vector<Permutation> non_identity(int n) {
    auto all = all_permutations(n);
    all.erase(all.begin());
    return all;
}

Matrix<mpq_class> random_fp_matrix(int n, std::mt19937_64& rng, std::uint64_t p) {
    std::uniform_int_distribution<std::uint64_t> dist(0, p - 1);
    Matrix<mpq_class> m(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = mpq_class(std::to_string(dist(rng)));
    return m;
}

SparsePoly product_321() {
    const int n = 3;
    auto f = [&](int i, int j) { return SparsePoly::variable(n, {Var::X, i}) - SparsePoly::variable(n, {Var::Y, j}); };
    return f(1, 1) * f(1, 2) * f(2, 1);
}

// Mixed distribution: on-locus points of random permutations, low-rank and dense
// small-entry matrices, so both outcomes of membership occur.
Matrix<mpq_class> mixed_matrix(int n, std::mt19937_64& rng, std::size_t k) {
    const auto perms = all_permutations(n);
    switch (k % 4) {
        case 0: return random_locus_point(perms[rng() % perms.size()], rng, 3);
        case 1: return random_matrix(n, rng, 2);
        case 2: {
            const int r = static_cast<int>(rng() % static_cast<std::uint64_t>(n));
            std::uniform_int_distribution<long> d(-3, 3);
            Matrix<mpq_class> m(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
            for (int t = 0; t < r; ++t) {
                std::vector<long> a(static_cast<std::size_t>(n)), b(static_cast<std::size_t>(n));
                for (auto& x : a) x = d(rng);
                for (auto& x : b) x = d(rng);
                for (int i = 0; i < n; ++i)
                    for (int j = 0; j < n; ++j) m(i, j) += a[i] * b[j];
            }
            return m;
        }
        default: return random_matrix(n, rng, 1000000);
    }
}

std::vector<CheckResult> worked_examples(std::uint64_t seed, unsigned) {
    std::vector<CheckResult> out;
    out.push_back(run_check("schubert_321_product", [] {
        return double_schubert(parse_permutation("321")) == product_321() ? "" : "mismatch";
    }));
    out.push_back(run_check("simple_transpositions", [] {
        for (int n = 2; n <= 5; ++n)
            for (int i = 1; i < n; ++i) {
                SparsePoly expect(n);
                for (int k = 1; k <= i; ++k)
                    expect += SparsePoly::variable(n, {Var::X, k}) - SparsePoly::variable(n, {Var::Y, k});
                if (double_schubert(Permutation::simple(i, n)) != expect)
                    return "s_" + std::to_string(i) + " in S_" + std::to_string(n);
            }
        return std::string();
    }));
    out.push_back(run_check("bsl_321_list", [] {
        const std::set<std::string> expected{"1,1|2", "1,1|1'", "1,2'|2", "1',2'|1",
                                          "1,1'|2", "1',1|1'", "1',2'|2", "1',2'|1'"};
        std::set<std::string> got;
        for (const auto& t : enumerate_bsl(parse_permutation("321"))) got.insert(to_string(t));
        return got == expected ? "" : "got " + std::to_string(got.size()) + " labelings differing from the list";
    }));
    out.push_back(run_check("bsl_4321_count", [] {
        const auto c = enumerate_bsl(parse_permutation("4321")).size();
        return c == 64 ? "" : "count " + std::to_string(c);
    }));
    for (const auto& [word, expect] : {std::pair{"1423", std::vector<std::size_t>{3, 6, 3}},
                                       std::pair{"2413", std::vector<std::size_t>{2, 6, 6, 2}}}) {
        const auto w = parse_permutation(word);
        out.push_back(run_check(std::string("complex_") + word + "_ranks", [&] {
            const auto c = build_complex(w, FlaggedMap::generic(4));
            if (c.ranks() != expect) return "ranks " + join(c.ranks());
            if (!verify_dd_zero(c)) return std::string("d o d != 0");
            if (euler_characteristic(c) != 0) return std::string("euler characteristic");
            return std::string();
        }));
        out.push_back(run_check(std::string("complex_") + word + "_exact_at_identity", [&] {
            const auto h = homology_ranks(build_complex(w, FlaggedMap::identity(4)));
            return std::all_of(h.begin(), h.end(), [](auto x) { return x == 0; }) ? "" : "h=" + join(h);
        }));
    }
    out.push_back(run_check("complex_1423_random_ranks", [&] {
        return with_retry(mix_seed(seed, 1), [&](std::uint64_t s) {
            std::mt19937_64 rng(s);
            const auto c = build_complex(parse_permutation("1423"), FlaggedMap::rational(random_matrix(4, rng)));
            const auto sp = Specialization{c.map.entries, std::nullopt};
            const auto r1 = rank(specialize(c.differentials[1], sp.values));
            const auto r2 = rank(specialize(c.differentials[2], sp.values));
            return r1 == 3 && r2 == 3 ? std::string() : "ranks " + std::to_string(r1) + "," + std::to_string(r2);
        });
    }));
    out.push_back(run_check("complex_2413_on_locus_h0", [&] {
        return with_retry(mix_seed(seed, 2), [&](std::uint64_t s) {
            std::mt19937_64 rng(s);
            const auto w = parse_permutation("2413");
            const auto pt = random_locus_point(w, rng);
            if (!locus_membership(w, pt)) return std::string("constructed point off the locus");
            const auto h0 = cokernel_fiber_rank(w, pt);
            return h0 == 1 ? std::string() : "h0=" + std::to_string(h0);
        });
    }));
    out.push_back(run_check("codimensions", [] {
        return expected_codimension(parse_permutation("1423")) == 2 &&
                       expected_codimension(parse_permutation("2413")) == 3
                   ? ""
                   : "mismatch";
    }));
    return out;
}

std::vector<CheckResult> s4(std::uint64_t seed, unsigned threads) {
    const auto all = all_permutations(4);
    const auto nonid = non_identity(4);
    std::vector<CheckResult> out;
    out.push_back(run_check("generating_function", [&] {
        return over(all, threads, [](const Permutation& w, std::size_t) {
            return bsl_generating_function(w) == double_schubert(w) ? "" : "differs";
        });
    }));
    out.push_back(run_check("bsl_count_is_schubert_at_1_-1", [&] {
        return over(all, threads, [](const Permutation& w, std::size_t) {
            const auto z = evaluate_uniform(double_schubert(w), 1, -1);
            return mpq_class(static_cast<long>(enumerate_bsl(w).size())) == z ? "" : "count differs";
        });
    }));
    out.push_back(run_check("identity_2", [&] {
        return over(all, threads, [](const Permutation& w, std::size_t) {
            return check_identity_2(w) ? "" : "fails";
        });
    }));
    out.push_back(run_check("transition_identity_and_index", [&] {
        return over(nonid, threads, [](const Permutation& w, std::size_t) -> std::string {
            if (!check_transition_identity(w)) return "identity fails";
            for (const auto& psi : maximal_transition(w).psis)
                if (index(psi) >= index(w)) return "index does not drop";
            return "";
        });
    }));
    out.push_back(run_check("path_independence", [&] {
        return over(all, threads, [](const Permutation& w, std::size_t) {
            return schubert_from_path(4, descent_path(w, true)) == schubert_from_path(4, descent_path(w, false))
                       ? ""
                       : "paths disagree";
        });
    }));
    out.push_back(run_check("order_properties", [&] {
        for (const auto& u : all)
            for (const auto& w : all) {
                if (strong_leq(u, w) != strong_leq(u.inverse(), w.inverse()))
                    return "strong order vs inverse at " + to_string(u) + "," + to_string(w);
                if (weak_leq(u, w) && !strong_leq(u, w)) return "weak not in strong at " + to_string(u) + "," + to_string(w);
            }
        return std::string();
    }));
    out.push_back(run_check("basis_full_rank", [&] {
        return over(all, threads, [](const Permutation& w, std::size_t) {
            const FunctorImage f(w);
            return rank(f.image_matrix()) == f.bsl().size() ? "" : "rank deficient";
        });
    }));
    out.push_back(run_check("dd_zero_generic", [&] {
        return over(all, threads, [](const Permutation& w, std::size_t) {
            return verify_dd_zero(build_complex(w, FlaggedMap::generic(4))) ? "" : "d o d != 0";
        });
    }));
    for (const auto kind : {FlaggedMap::Kind::Rational, FlaggedMap::Kind::PrimeField}) {
        const std::string tag = kind == FlaggedMap::Kind::Rational ? "q" : "fp";
        out.push_back(run_check("exact_at_identity_" + tag, [&] {
            return over(nonid, threads, [&](const Permutation& w, std::size_t) {
                const auto h = homology_ranks(build_complex(w, FlaggedMap::identity(4, kind)));
                return std::all_of(h.begin(), h.end(), [](auto x) { return x == 0; }) ? "" : "h=" + join(h);
            });
        }));
    }
    out.push_back(run_check("acyclic_at_random_points", [&] {
        const auto p = default_prime();
        return over(nonid, threads, [&](const Permutation& w, std::size_t i) {
            return with_retry(mix_seed(seed, 100 + i), [&](std::uint64_t s) -> std::string {
                std::mt19937_64 rng(s);
                const auto c = build_complex(w, FlaggedMap::generic(4));
                for (const auto& spec : {Specialization{random_matrix(4, rng), std::nullopt},
                                         Specialization{random_fp_matrix(4, rng, p), p}}) {
                    const auto h = homology_ranks(c, spec);
                    if (std::any_of(h.begin(), h.end(), [](auto x) { return x != 0; })) return "h=" + join(h);
                }
                return "";
            });
        });
    }));
    out.push_back(run_check("support_in_locus", [&] {
        return over(nonid, threads, [&](const Permutation& w, std::size_t i) -> std::string {
            std::mt19937_64 rng(mix_seed(seed, 200 + i));
            const auto c = build_complex(w, FlaggedMap::generic(4));
            const auto on = random_locus_point(w, rng);
            if (homology_ranks(c, {on, std::nullopt}).front() == 0) return "h0=0 at a point of the locus";
            for (int k = 0; k < 8; ++k) {
                const auto pt = mixed_matrix(4, rng, static_cast<std::size_t>(k));
                if (homology_ranks(c, {pt, std::nullopt}).front() > 0 && !locus_membership(w, pt))
                    return "h0>0 off the locus";
            }
            return "";
        });
    }));
    out.push_back(run_check("ideal_equivalence_200", [&] {
        std::mt19937_64 rng(mix_seed(seed, 3));
        std::vector<Matrix<mpq_class>> pts;
        for (std::size_t k = 0; k < 200; ++k) pts.push_back(mixed_matrix(4, rng, k));
        std::vector<std::vector<char>> member(all.size());
        const auto detail = over(all, threads, [&](const Permutation& w, std::size_t i) -> std::string {
            for (const auto& pt : pts)
                if (locus_membership_by_rank(w, pt) != locus_membership_by_generators(w, pt))
                    return "routes disagree";
            for (const auto& pt : pts) member[i].push_back(locus_membership_by_rank(w, pt));
            return "";
        });
        if (!detail.empty()) return detail;
        std::size_t hits = 0;
        for (std::size_t i = 0; i < all.size(); ++i)
            for (std::size_t j = 0; j < all.size(); ++j) {
                if (!strong_leq(all[j], all[i])) continue;
                for (std::size_t k = 0; k < pts.size(); ++k) {
                    if (member[i][k] && !member[j][k])
                        return "monotonicity fails for " + to_string(all[j]) + " <= " + to_string(all[i]);
                }
            }
        for (const auto& row : member) hits += static_cast<std::size_t>(std::count(row.begin(), row.end(), 1));
        if (hits == 0 || hits == all.size() * pts.size()) return std::string("sample never separates the loci");
        return std::string();
    }));
    out.push_back(run_check("filtration_bookkeeping", [&] {
        return over(all, threads, [](const Permutation& w, std::size_t) -> std::string {
            std::vector<std::size_t> expect(static_cast<std::size_t>(w.length()) + 1, 0);
            for (const auto& v : weak_order_ideal(w)) {
                const auto unmarked = count_bsl_by_degree(v).back();
                const auto marked = count_bsl_by_degree(w * v.inverse()).front();
                expect[static_cast<std::size_t>(v.length())] += static_cast<std::size_t>(unmarked * marked);
            }
            if (expect != term_ranks(w)) return "term ranks " + join(term_ranks(w)) + " vs " + join(expect);
            if (w.is_identity()) return "";
            const auto t = maximal_transition(w);
            auto z = [](const Permutation& x) { return enumerate_bsl(x).size(); };
            std::size_t rhs = 2 * z(t.v);
            for (const auto& psi : t.psis) rhs += z(psi);
            return z(w) == rhs ? "" : "z_w != 2 z_v + sum z_psi";
        });
    }));
    out.push_back(run_check("euler_characteristic", [&] {
        return over(nonid, threads, [](const Permutation& w, std::size_t) {
            return euler_characteristic(build_complex(w, FlaggedMap::generic(4))) == 0 ? "" : "nonzero";
        });
    }));
    return out;
}

std::vector<CheckResult> s5(std::uint64_t seed, unsigned threads) {
    const auto nonid = non_identity(5);
    std::vector<CheckResult> out;
    out.push_back(run_check("transition_identity", [&] {
        return over(nonid, threads, [](const Permutation& w, std::size_t) {
            return check_transition_identity(w) ? "" : "fails";
        });
    }));
    out.push_back(run_check("euler_characteristic", [&] {
        return over(nonid, threads, [](const Permutation& w, std::size_t) -> std::string {
            long chi = 0;
            const auto r = term_ranks(w);
            for (std::size_t i = 0; i < r.size(); ++i) chi += (i % 2 ? -1L : 1L) * static_cast<long>(r[i]);
            if (chi != 0) return "chi=" + std::to_string(chi);
            return evaluate_uniform(double_schubert(w), -1, -1) == 0 ? "" : "S_w(-1,-1) != 0";
        });
    }));
    out.push_back(run_check("generating_function_sample", [&] {
        const auto sample = sample_permutations(5, 20, mix_seed(seed, 5), {Permutation::longest(5)});
        return over(sample, threads, [](const Permutation& w, std::size_t) {
            return bsl_generating_function(w) == double_schubert(w) ? "" : "differs";
        });
    }));
    out.push_back(run_check("stability", [&] {
        return over(all_permutations(3), threads, [](const Permutation& w, std::size_t) -> std::string {
            for (int m = 1; m <= 2; ++m)
                if (double_schubert(pad(w, m)) != double_schubert(w).padded(3 + m)) return "pad " + std::to_string(m);
            return "";
        });
    }));
    return out;
}

}  // namespace

SuiteReport run_suite(std::string_view suite, std::uint64_t seed, unsigned threads) {
    SuiteReport r{std::string(suite), seed, {}};
    if (suite == "paper-examples") r.checks = worked_examples(seed, threads);
    else if (suite == "s4") r.checks = s4(seed, threads);
    else if (suite == "s5") r.checks = s5(seed, threads);
    else throw std::invalid_argument("unknown suite '" + std::string(suite) + "'");
    return r;
}

}  // namespace schubert
