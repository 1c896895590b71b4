#include <doctest.h>

#include <algorithm>
#include <set>

#include "schubert/perm.hpp"
#include "schubert/poly.hpp"

using namespace schubert;

namespace {

Permutation P(const char* s) { return parse_permutation(s); }

int inversions(const Permutation& w) {
    int c = 0;
    for (int i = 1; i <= w.size(); ++i)
        for (int j = i + 1; j <= w.size(); ++j) c += w(i) > w(j);
    return c;
}

// Glossary form of the diagram: {(i, w(j)) : i < j, w(i) > w(j)}.
std::set<Cell> diagram_oracle(const Permutation& w) {
    std::set<Cell> out;
    for (int i = 1; i <= w.size(); ++i)
        for (int j = i + 1; j <= w.size(); ++j)
            if (w(i) > w(j)) out.insert({i, w(j)});
    return out;
}

// Suffix order by search: everything reachable from u by left multiplication
// with simple reflections that raise the length by one.
std::set<Permutation> weak_upset(const Permutation& u) {
    std::set<Permutation> seen{u};
    std::vector<Permutation> stack{u};
    while (!stack.empty()) {
        auto x = stack.back();
        stack.pop_back();
        for (int i = 1; i < x.size(); ++i) {
            auto y = Permutation::simple(i, x.size()) * x;
            if (inversions(y) == inversions(x) + 1 && seen.insert(y).second) stack.push_back(y);
        }
    }
    return seen;
}

}  // namespace

TEST_CASE("construction and text forms") {
    CHECK(to_string(P("35142")) == "35142");
    CHECK_THROWS_AS(Permutation({1, 1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(Permutation({0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(parse_permutation("12a"), std::invalid_argument);
    CHECK_THROWS_AS(parse_permutation(""), std::invalid_argument);
    std::vector<int> big{10, 3, 1, 2, 4, 5, 6, 7, 8, 9};
    const Permutation w(big);
    CHECK(to_string(w) == "10,3,1,2,4,5,6,7,8,9");
    CHECK(parse_permutation(to_string(w)) == w);
    CHECK(parse_permutation("2,1,3") == P("213"));
    CHECK(pad(P("21"), 2) == P("2134"));
    CHECK_THROWS_AS(P("21") * P("213"), std::invalid_argument);
}

TEST_CASE("length") {
    CHECK(length(P("35142")) == 6);
    CHECK(P("35142").length() == inversions(P("35142")));
    CHECK(Permutation::identity(7).length() == 0);
    CHECK(Permutation::longest(4) == P("4321"));
    CHECK(Permutation::longest(4).length() == 6);
}

TEST_CASE("rank function") {
    const auto w = P("2413");
    CHECK(rank_function(w, 2, 3) == 1);
    CHECK(rank_function(w, 2, 1) == 0);
    for (const auto& x : all_permutations(4))
        for (int q = 1; q <= 4; ++q) CHECK(x.rank(4, q) == q);
    CHECK_THROWS_AS(w.rank(0, 1), std::out_of_range);
    CHECK_THROWS_AS(w.rank(1, 5), std::out_of_range);
}

TEST_CASE("diagrams") {
    const std::vector<Cell> d35142{{1, 1}, {1, 2}, {2, 1}, {2, 2}, {2, 4}, {4, 2}};
    CHECK(diagram(P("35142")) == d35142);
    CHECK(diagram(Permutation::identity(5)).empty());
    CHECK(diagram(P("1423")) == std::vector<Cell>{{2, 2}, {2, 3}});
    CHECK(P("35142").row_count(2) == 3);
    CHECK(P("35142").column_count(2) == 3);
    for (const auto& w : all_permutations(5)) {
        const auto& d = w.diagram();
        CHECK(std::set<Cell>(d.begin(), d.end()) == diagram_oracle(w));
        CHECK(static_cast<int>(d.size()) == w.length());
    }
}

TEST_CASE("diagram grows by one cell along an ascent") {
    for (const auto& w : all_permutations(4)) {
        for (int i = 1; i < 4; ++i) {
            if (w(i) > w(i + 1)) continue;
            const auto ws = w * Permutation::simple(i, 4);
            std::set<Cell> expect;
            for (auto c : w.diagram()) {
                if (c.row == i) c.row = i + 1;
                else if (c.row == i + 1) c.row = i;
                expect.insert(c);
            }
            expect.insert({i, w(i)});
            CHECK(std::set<Cell>(ws.diagram().begin(), ws.diagram().end()) == expect);
        }
    }
}

TEST_CASE("strong order") {
    CHECK(strong_leq(Permutation::identity(4), P("3142")));
    CHECK(strong_leq(P("1324"), P("1423")));
    CHECK_FALSE(strong_leq(P("4321"), P("1234")));
    CHECK_THROWS_AS(strong_leq(P("21"), P("213")), std::invalid_argument);
    const auto all = all_permutations(4);
    for (const auto& u : all)
        for (const auto& w : all) {
            CHECK(strong_leq(u, w) == strong_leq(u.inverse(), w.inverse()));
            if (weak_leq(u, w)) CHECK(strong_leq(u, w));
        }
}

TEST_CASE("weak order") {
    const auto w = P("321");
    CHECK(weak_leq(w, w));
    CHECK(weak_leq(P("213"), w));
    CHECK_FALSE(weak_leq(Permutation::simple(2, 3), Permutation::simple(1, 3)));
    CHECK_THROWS_AS(weak_leq(P("21"), P("213")), std::invalid_argument);

    CHECK(weak_order_ideal(Permutation::identity(3)) == std::vector<Permutation>{Permutation::identity(3)});
    CHECK(weak_order_ideal(P("213")) == std::vector<Permutation>{P("123"), P("213")});
    CHECK(weak_order_ideal(w).size() == 6);

    const auto all = all_permutations(4);
    for (const auto& x : all) {
        const auto ideal = weak_order_ideal(x);
        CHECK(std::is_sorted(ideal.begin(), ideal.end(),
                             [](const Permutation& a, const Permutation& b) { return a.length() < b.length(); }));
        for (const auto& u : all) {
            const bool oracle = weak_upset(u).count(x) > 0;
            CHECK(weak_leq(u, x) == oracle);
            CHECK((std::find(ideal.begin(), ideal.end(), u) != ideal.end()) == oracle);
        }
    }
}

TEST_CASE("border cells and southeast corners") {
    // (2,2) is the cell with w(3) = 2.
    CHECK(border_cells(P("1423")) == std::vector<Cell>{{2, 2}});
    CHECK(border_cells(Permutation::identity(3)).empty());
    CHECK(border_cells(P("321")) == std::vector<Cell>{{1, 2}, {2, 1}});
    CHECK(southeast_corners(P("2413")) == std::vector<Cell>{{2, 1}, {2, 3}});
    CHECK(southeast_corners(Permutation::identity(4)).empty());
    CHECK(southeast_corners(P("1423")) == std::vector<Cell>{{2, 3}});
}

TEST_CASE("index") {
    CHECK(index(Permutation::identity(5)) == 0);
    CHECK(index(P("321")) == 1);
}

TEST_CASE("maximal transitions") {
    const auto s2 = Permutation::simple(2, 4);
    const auto t = maximal_transition(s2);
    CHECK(t.alpha == 2);
    CHECK(t.beta == 3);
    CHECK(t.v == Permutation::identity(4));
    CHECK(t.gammas == std::vector<int>{1});
    CHECK(t.psis == std::vector<Permutation>{Permutation::simple(1, 4)});

    const auto t321 = maximal_transition(P("321"));
    CHECK(t321.alpha == 2);
    CHECK(t321.beta == 3);
    CHECK(t321.v == P("312"));
    CHECK(t321.gammas.empty());
    CHECK(t321.psis.empty());

    CHECK(check_transition_identity(P("2413")));
    CHECK_THROWS_AS(maximal_transition(Permutation::identity(3)), std::invalid_argument);

    for (const auto& w : all_permutations(4)) {
        if (w.is_identity()) continue;
        const auto tr = maximal_transition(w);
        CHECK(tr.v == w * Permutation::transposition(tr.alpha, tr.beta, 4));
        CHECK(tr.v.length() == w.length() - 1);
        for (const auto& psi : tr.psis) {
            CHECK(index(psi) < index(w));
            CHECK(psi.length() == w.length());
        }
    }
}
