#ifndef RAAG_INTEGER_MATRIX_HPP
#define RAAG_INTEGER_MATRIX_HPP

#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace raag {

using Int = boost::multiprecision::cpp_int;

/// Dense matrix over arbitrary-precision integers.  Entries blow up during
/// elimination even on small complexes, so fixed-width types are not used.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(size_t(rows) * cols) {}

    static IntMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Int& at(int r, int c) { return data_[size_t(r) * cols_ + c]; }
    const Int& at(int r, int c) const { return data_[size_t(r) * cols_ + c]; }

    IntMatrix transpose() const;
    IntMatrix operator*(const IntMatrix& other) const;
    bool operator==(const IntMatrix& other) const = default;

    bool is_zero() const;

    /// Row-major, space-separated debug rendering; one line per row.
    std::string to_debug_string() const;

private:
    int rows_ = 0, cols_ = 0;
    std::vector<Int> data_;
};

struct SNFResult {
    std::vector<Int> diagonal;  // full divisibility chain, zeros at the tail
    int rank = 0;               // number of nonzero diagonal entries
    std::optional<IntMatrix> left;   // U with U*m*V diagonal, when requested
    std::optional<IntMatrix> right;  // V

    /// Diagonal entries > 1, i.e. the torsion part of the cokernel chain.
    std::vector<Int> nontrivial() const;
};

/// Smith normal form by row/column reduction with minimal-absolute-value
/// pivoting.  When with_transforms is set, the unimodular factors are
/// accumulated so that left * m * right equals the diagonal matrix.
SNFResult smith_normal_form(const IntMatrix& m, bool with_transforms = false);

}  // namespace raag

#endif
