#ifndef RAAG_LAMBDA_MATRIX_HPP
#define RAAG_LAMBDA_MATRIX_HPP

#include <string>
#include <vector>

#include "raag/group_ring.hpp"

namespace raag {

/// Dense matrix over the group ring of a fixed ambient graph.  Vectors are
/// columns with right scalar action; the pairing conventions live in
/// forms.hpp.
class LambdaMatrix {
public:
    using GraphPtr = GroupRingElement::GraphPtr;

    LambdaMatrix() = default;
    LambdaMatrix(GraphPtr g, int rows, int cols);

    static LambdaMatrix identity(GraphPtr g, int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const GraphPtr& graph_ptr() const { return graph_; }

    GroupRingElement& at(int r, int c) { return entries_[size_t(r) * cols_ + c]; }
    const GroupRingElement& at(int r, int c) const { return entries_[size_t(r) * cols_ + c]; }

    LambdaMatrix operator*(const LambdaMatrix& o) const;
    LambdaMatrix operator+(const LambdaMatrix& o) const;
    LambdaMatrix operator-() const;

    /// Entry-wise involution of the transpose.
    LambdaMatrix conjugate_transpose() const;

    bool is_zero() const;
    bool operator==(const LambdaMatrix& o) const;

    /// One line per row, entries separated by " ; ", each entry in the group
    /// ring text format.
    std::string to_text() const;

private:
    GraphPtr graph_;
    int rows_ = 0, cols_ = 0;
    std::vector<GroupRingElement> entries_;
};

/// Column vector over the group ring.
using LambdaVector = std::vector<GroupRingElement>;

LambdaVector matrix_apply(const LambdaMatrix& m, const LambdaVector& x);

/// Parse the to_text() format over the given ambient graph; all rows must
/// have the same number of entries.
LambdaMatrix parse_lambda_matrix(LambdaMatrix::GraphPtr g, const std::string& text);

}  // namespace raag

#endif
