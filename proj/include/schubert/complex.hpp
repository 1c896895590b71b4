#pragma once

// Schubert complexes of a flagged map d: F0 -> F1. Terms are spanned by BSLs
// graded by their number of unmarked letters; differentials are linear forms
// in the entries d[m][u] (coefficient of e'_m in d(e_u)).

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "schubert/functor.hpp"
#include "schubert/linalg.hpp"
#include "schubert/perm.hpp"
#include "schubert/superlabel.hpp"

namespace schubert {

struct MapVar {
    int m = 0;  // F1 coordinate (row)
    int u = 0;  // F0 coordinate (column)
    auto operator<=>(const MapVar&) const = default;
};

class LinearForm {
public:
    LinearForm() = default;
    LinearForm(const mpq_class& c) : constant_(c) {}  // NOLINT: scalars embed implicitly
    static LinearForm variable(MapVar v, const mpq_class& c = 1);

    const std::map<MapVar, mpq_class>& coefficients() const { return coef_; }
    const mpq_class& constant() const { return constant_; }
    bool is_zero() const { return coef_.empty() && constant_ == 0; }

    LinearForm& operator+=(const LinearForm& o);
    friend LinearForm operator+(LinearForm a, const LinearForm& b) { return a += b; }
    friend LinearForm operator*(LinearForm a, const mpq_class& c);
    bool operator==(const LinearForm&) const = default;

    /// values(m-1, u-1) is d[m][u]; throws std::out_of_range if too small.
    mpq_class evaluate(const Matrix<mpq_class>& values) const;

private:
    std::map<MapVar, mpq_class> coef_;
    mpq_class constant_ = 0;
};

inline bool is_zero_value(const LinearForm& f) { return f.is_zero(); }
/// "2*d[3][1] - d[2][2] + 5"; zero renders as "0".
std::string to_string(const LinearForm& f);

struct FlaggedMap {
    enum class Kind { Generic, Rational, PrimeField };
    int n = 0;
    Kind kind = Kind::Generic;
    Matrix<mpq_class> entries;  // row m-1, column u-1
    std::uint64_t prime = 0;

    static FlaggedMap generic(int n);
    static FlaggedMap rational(Matrix<mpq_class> entries);
    static FlaggedMap prime_field(Matrix<mpq_class> entries, std::uint64_t p);
    static FlaggedMap identity(int n, Kind kind = Kind::Rational, std::uint64_t p = 0);
    static FlaggedMap zero(int n, Kind kind = Kind::Rational, std::uint64_t p = 0);
};

struct ChainComplex {
    Permutation w;
    FlaggedMap map;
    /// bases[i]: BSLs with i unmarked letters.
    std::vector<std::vector<Labeling>> bases;
    /// differentials[i]: C_i -> C_{i-1} for i >= 1 (rows index C_{i-1}); [0] is empty.
    std::vector<Matrix<LinearForm>> differentials;

    int length() const { return static_cast<int>(bases.size()) - 1; }
    std::vector<std::size_t> ranks() const;
};

/// Throws std::invalid_argument if map.n < w.size(); smaller w is padded.
ChainComplex build_complex(const Permutation& w, const FlaggedMap& map);

/// Symbolic for generic maps, exact after substitution otherwise.
bool verify_dd_zero(const ChainComplex& c);

struct Specialization {
    Matrix<mpq_class> values;
    std::optional<std::uint64_t> prime;  // empty: work over Q
};

Matrix<mpq_class> specialize(const Matrix<LinearForm>& d, const Matrix<mpq_class>& values);

/// h_i = dim ker d_i - rank d_{i+1}.
std::vector<std::size_t> homology_ranks(const ChainComplex& c, const Specialization& s);
/// Uses the complex's own map; throws std::invalid_argument for a generic map.
std::vector<std::size_t> homology_ranks(const ChainComplex& c);

/// h_0 of the complex of w at the point, over Q.
std::size_t cokernel_fiber_rank(const Permutation& w, const Matrix<mpq_class>& point);

long euler_characteristic(const ChainComplex& c);
/// Term ranks from BSL counts alone (no differentials).
std::vector<std::size_t> term_ranks(const Permutation& w);

}  // namespace schubert
