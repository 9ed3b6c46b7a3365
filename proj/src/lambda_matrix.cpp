#include "raag/lambda_matrix.hpp"

#include <sstream>
#include <stdexcept>

namespace raag {

LambdaMatrix::LambdaMatrix(GraphPtr g, int rows, int cols)
    : graph_(std::move(g)), rows_(rows), cols_(cols) {
    entries_.assign(size_t(rows) * cols, GroupRingElement(graph_));
}

LambdaMatrix LambdaMatrix::identity(GraphPtr g, int n) {
    LambdaMatrix m(g, n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = GroupRingElement::constant(g, 1);
    return m;
}

LambdaMatrix LambdaMatrix::operator*(const LambdaMatrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("lambda matrix product shape mismatch");
    LambdaMatrix out(graph_, rows_, o.cols_);
    for (int r = 0; r < rows_; ++r)
        for (int k = 0; k < cols_; ++k) {
            const GroupRingElement& v = at(r, k);
            if (v.is_zero()) continue;
            for (int c = 0; c < o.cols_; ++c) {
                if (o.at(k, c).is_zero()) continue;
                out.at(r, c) += v * o.at(k, c);
            }
        }
    return out;
}

LambdaMatrix LambdaMatrix::operator+(const LambdaMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw std::invalid_argument("lambda matrix sum shape mismatch");
    LambdaMatrix out = *this;
    for (size_t i = 0; i < entries_.size(); ++i) out.entries_[i] += o.entries_[i];
    return out;
}

LambdaMatrix LambdaMatrix::operator-() const {
    LambdaMatrix out = *this;
    for (auto& e : out.entries_) e = -e;
    return out;
}

LambdaMatrix LambdaMatrix::conjugate_transpose() const {
    LambdaMatrix out(graph_, cols_, rows_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) out.at(c, r) = involute(at(r, c));
    return out;
}

bool LambdaMatrix::is_zero() const {
    for (const auto& e : entries_)
        if (!e.is_zero()) return false;
    return true;
}

bool LambdaMatrix::operator==(const LambdaMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) return false;
    for (size_t i = 0; i < entries_.size(); ++i)
        if (!(entries_[i] == o.entries_[i])) return false;
    return true;
}

std::string LambdaMatrix::to_text() const {
    std::ostringstream out;
    for (int r = 0; r < rows_; ++r) {
        for (int c = 0; c < cols_; ++c) {
            if (c) out << " ; ";
            out << to_string(at(r, c));
        }
        out << '\n';
    }
    return out.str();
}

LambdaVector matrix_apply(const LambdaMatrix& m, const LambdaVector& x) {
    if (static_cast<int>(x.size()) != m.cols())
        throw std::invalid_argument("matrix_apply shape mismatch");
    LambdaVector out(m.rows(), GroupRingElement(m.graph_ptr()));
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c)
            if (!m.at(r, c).is_zero() && !x[c].is_zero()) out[r] += m.at(r, c) * x[c];
    return out;
}

LambdaMatrix parse_lambda_matrix(LambdaMatrix::GraphPtr g, const std::string& text) {
    std::vector<std::vector<GroupRingElement>> rows;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        std::vector<GroupRingElement> row;
        size_t pos = 0;
        while (true) {
            size_t nxt = line.find(" ; ", pos);
            std::string cell =
                nxt == std::string::npos ? line.substr(pos) : line.substr(pos, nxt - pos);
            row.push_back(parse_element(g, cell));
            if (nxt == std::string::npos) break;
            pos = nxt + 3;
        }
        if (!rows.empty() && rows.front().size() != row.size())
            throw std::invalid_argument("ragged matrix text");
        rows.push_back(std::move(row));
    }
    LambdaMatrix m(g, static_cast<int>(rows.size()),
                   rows.empty() ? 0 : static_cast<int>(rows.front().size()));
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c) m.at(r, c) = rows[r][c];
    return m;
}

}  // namespace raag
