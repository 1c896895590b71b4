#pragma once

// Schubert determinantal ideals of the generic matrix (d[i][j]) and rank
// tests for degeneracy loci.
//
// Orientation: entry (i, j) is the coefficient of e'_i in d(e_j). The locus of
// w is { rank(rows 1..q x cols 1..p) <= r_w(p, q) for all p, q }, cut out by
// the minors listed by ideal_generators(w^-1).

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "schubert/linalg.hpp"
#include "schubert/perm.hpp"
#include "schubert/poly.hpp"

namespace schubert {

struct MinorDescriptor {
    std::vector<int> rows;
    std::vector<int> cols;
    auto operator<=>(const MinorDescriptor&) const = default;
};

/// "det d[{1,2}][{1,3}]"
std::string to_string(const MinorDescriptor& m);

inline constexpr std::size_t kMaxMinors = 100000;

/// For each southeast corner (p, q) of D(w): all (r_w(p,q)+1)-minors of rows
/// 1..p x cols 1..q, deduplicated and sorted. Throws std::length_error past
/// kMaxMinors.
std::vector<MinorDescriptor> ideal_generators(const Permutation& w);

mpq_class minor_value(const Matrix<mpq_class>& point, const MinorDescriptor& m);

/// Rank route: rank of the upper-left q x p block is at most r_w(p, q) for all p, q.
bool locus_membership_by_rank(const Permutation& w, const Matrix<mpq_class>& point);
/// Generator route: every minor of ideal_generators(w^-1) vanishes.
bool locus_membership_by_generators(const Permutation& w, const Matrix<mpq_class>& point);
/// Both routes; throws std::logic_error if they disagree.
bool locus_membership(const Permutation& w, const Matrix<mpq_class>& point);

int expected_codimension(const Permutation& w);

struct FultonClass {
    SparsePoly polynomial;
    std::vector<std::string> dictionary;  // meaning of each variable
};
FultonClass fulton_class(const Permutation& w);

/// L * P_w * U with P_w(w(j), j) = 1 and random unitriangular-by-diagonal L
/// (lower) and U (upper), entries drawn from [-bound, bound].
Matrix<mpq_class> random_locus_point(const Permutation& w, std::mt19937_64& rng, long bound = 1000000);
/// Dense uniform entries from [-bound, bound].
Matrix<mpq_class> random_matrix(int n, std::mt19937_64& rng, long bound = 1000000);

}  // namespace schubert
