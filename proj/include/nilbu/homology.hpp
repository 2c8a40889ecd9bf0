#pragma once

#include "nilbu/presentation.hpp"
#include "nilbu/seifert.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <span>
#include <string>
#include <vector>

namespace nilbu {

/// Unbounded integer used for matrix entries. Unimodular transforms of even
/// small matrices can outgrow 64 bits.
using BigInt = boost::multiprecision::cpp_int;

/// Narrowing conversion; throws OverflowError when x does not fit.
Int to_int(const BigInt& x);

/// Dense row-major matrix of unbounded integers.
class IntegerMatrix {
public:
    IntegerMatrix() = default;
    IntegerMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    IntegerMatrix(std::size_t rows, std::size_t cols, std::vector<Int> row_major);

    static IntegerMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    BigInt& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const BigInt& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    friend IntegerMatrix operator*(const IntegerMatrix& x, const IntegerMatrix& y);
    friend bool operator==(const IntegerMatrix&, const IntegerMatrix&) = default;

    void swap_rows(std::size_t i, std::size_t j);
    void swap_cols(std::size_t i, std::size_t j);
    /// row i += k * row j
    void add_row_multiple(std::size_t i, std::size_t j, const BigInt& k);
    /// col i += k * col j
    void add_col_multiple(std::size_t i, std::size_t j, const BigInt& k);
    void negate_row(std::size_t i);
    void negate_col(std::size_t i);

    /// Exact determinant by fraction-free elimination; square matrices only.
    BigInt determinant() const;

    std::string to_string() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<BigInt> data_;
};

struct SmithDecomposition {
    IntegerMatrix S; ///< diagonal, d_1 | d_2 | ..., non-negative
    IntegerMatrix U; ///< unimodular, rows x rows
    IntegerMatrix V; ///< unimodular, cols x cols
    IntegerMatrix V_inverse;
};

/// S = U m V. Pivot: smallest nonzero |entry| of the active block, ties by
/// row-major position.
SmithDecomposition smith_normal_form(const IntegerMatrix& m);

/// Z^free_rank + Z_{d_1} + ... with d_1 | d_2 | ..., each d_k >= 2.
/// Coordinates of an element list the free part first, then the torsion
/// factors in the order of `torsion`.
struct AbelianGroup {
    Int free_rank = 0;
    std::vector<Int> torsion;
    std::vector<std::string> generator_names;
    /// Image of each original generator, torsion coordinates reduced into [0, d_k).
    std::vector<std::vector<Int>> gen_images;
    /// For each decomposition coordinate, the integer combination of the
    /// original generators that realizes its basis element.
    std::vector<std::vector<Int>> basis_in_generators;

    std::size_t dimension() const { return static_cast<std::size_t>(free_rank) + torsion.size(); }
    const std::vector<Int>& image(std::string_view generator) const;

    /// Coordinates of sum coeffs[j] * generator_j, reduced.
    std::vector<Int> combine(std::span<const Int> coeffs) const;
    bool is_zero(std::span<const Int> coords) const;
    /// Order of an element; 0 when it is infinite.
    Int order(std::span<const Int> coords) const;
    /// Coordinates of sum coeff * image(name) for (name, coeff) pairs.
    std::vector<Int> element(const std::vector<std::pair<std::string, Int>>& terms) const;
};

/// Same free rank and torsion list.
bool isomorphic(const AbelianGroup& x, const AbelianGroup& y);

std::string describe(const AbelianGroup& g); ///< e.g. "Z^2 + Z_6"

/// Relation matrix: one row per relator, exponent sums in columns.
IntegerMatrix relation_matrix(const FinitePresentation& pres);

AbelianGroup abelianization(const FinitePresentation& pres);

AbelianGroup h1(const NilManifold& m);

/// dim of H1 (x) Z_2.
Int mod2_rank(const AbelianGroup& g);

/// True iff the Z2 character (values on the original generators) vanishes on
/// every torsion basis element of the decomposition.
bool torsion_subgroup_killed_by(std::span<const int> phi, const AbelianGroup& g);

} // namespace nilbu
