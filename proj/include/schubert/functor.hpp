#pragma once

// The Z/2-graded Schubert functor for a permutation w: row-wise tensors of
// divided powers, the projection Phi onto column-wise super exterior powers,
// the BSL image basis and straightening by exact linear algebra.
//
// Signs follow the homological Koszul rule (unmarked letters odd):
//   - rearranging letters inside a row: -1 per inverted pair unless both unmarked;
//   - moving from row-major to column-major cell order: -1 per crossing pair
//     of cells when both letters are unmarked;
//   - sorting a column ascending: -1 per inverted pair when both are unmarked.

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "schubert/linalg.hpp"
#include "schubert/perm.hpp"
#include "schubert/poly.hpp"
#include "schubert/superlabel.hpp"

namespace schubert {

/// Letter codes in the row-major cell order of w.diagram(), sorted within each row.
using RowElement = std::vector<int>;
/// Letter codes in column-major cell order, sorted ascending within each column.
using ColumnElement = std::vector<int>;
using ColumnVector = std::map<ColumnElement, long>;

/// Sorted-row form of a labeling.
RowElement row_element(const Labeling& t);

/// Phi(T). Throws std::invalid_argument for a wrong size, a letter outside the
/// alphabet {n',...,1',1,...,k} of row k, or a repeated marked letter in a row.
ColumnVector phi(const RowElement& t, const Permutation& w);

/// Rendering "1,2|1" column by column (empty columns kept).
std::string column_string(const ColumnElement& c, const Permutation& w);

struct WeightBlock {
    std::vector<std::size_t> bsl;     // indices into FunctorImage::bsl
    std::vector<ColumnElement> rows;  // column elements of this weight, sorted
    FullRankSolver solver;
};

class FunctorImage {
public:
    /// Throws std::logic_error if the image matrix is rank deficient.
    explicit FunctorImage(const Permutation& w);

    const Permutation& w() const { return w_; }
    /// BSLs sorted by (homological degree, serialized form).
    const std::vector<Labeling>& bsl() const { return bsl_; }
    const std::vector<ColumnVector>& images() const { return images_; }
    /// Every column element occurring in an image, sorted.
    const std::vector<ColumnElement>& columns() const { return columns_; }
    const std::map<Weight, WeightBlock>& blocks() const { return blocks_; }
    /// Index of a BSL in bsl(), or -1.
    long index_of(const Labeling& t) const;

    /// Dense image matrix, rows = columns(), cols = bsl().
    Matrix<mpq_class> image_matrix() const;

private:
    Permutation w_;
    std::vector<Labeling> bsl_;
    std::vector<ColumnVector> images_;
    std::vector<ColumnElement> columns_;
    std::map<Weight, WeightBlock> blocks_;
};

FunctorImage build_functor_image(const Permutation& w);

/// Weight of a column element (same layout as superlabel weight()).
Weight column_weight(const ColumnElement& c, int n);

/// Unique rational c with image_matrix * c = v. Throws std::domain_error
/// naming a residual column element when v is outside the span.
std::vector<mpq_class> straighten(const ColumnVector& v, const FunctorImage& f);

struct GradedCharacter {
    SparsePoly supercharacter;  // sum of m(T); equals S_w(x,y)
    SparsePoly character;       // x -> -x; equals S_w(-x,y)
};
GradedCharacter graded_character(const FunctorImage& f);

}  // namespace schubert
