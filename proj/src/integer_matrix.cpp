#include "raag/integer_matrix.hpp"

#include <sstream>
#include <stdexcept>

namespace raag {

IntMatrix IntMatrix::identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix t(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
    return t;
}

IntMatrix IntMatrix::operator*(const IntMatrix& other) const {
    if (cols_ != other.rows_) throw std::invalid_argument("matrix product shape mismatch");
    IntMatrix out(rows_, other.cols_);
    for (int r = 0; r < rows_; ++r)
        for (int k = 0; k < cols_; ++k) {
            const Int& v = at(r, k);
            if (v == 0) continue;
            for (int c = 0; c < other.cols_; ++c) out.at(r, c) += v * other.at(k, c);
        }
    return out;
}

bool IntMatrix::is_zero() const {
    for (const Int& v : data_)
        if (v != 0) return false;
    return true;
}

std::string IntMatrix::to_debug_string() const {
    std::ostringstream out;
    for (int r = 0; r < rows_; ++r) {
        for (int c = 0; c < cols_; ++c) {
            if (c) out << ' ';
            out << at(r, c);
        }
        out << '\n';
    }
    return out.str();
}

std::vector<Int> SNFResult::nontrivial() const {
    std::vector<Int> out;
    for (const Int& d : diagonal)
        if (d > 1) out.push_back(d);
    return out;
}

namespace {

struct Worker {
    IntMatrix a;
    bool track;
    IntMatrix u, v;

    Worker(const IntMatrix& m, bool with) : a(m), track(with) {
        if (track) {
            u = IntMatrix::identity(m.rows());
            v = IntMatrix::identity(m.cols());
        }
    }

    void swap_rows(int i, int j) {
        if (i == j) return;
        for (int c = 0; c < a.cols(); ++c) std::swap(a.at(i, c), a.at(j, c));
        if (track)
            for (int c = 0; c < u.cols(); ++c) std::swap(u.at(i, c), u.at(j, c));
    }
    void swap_cols(int i, int j) {
        if (i == j) return;
        for (int r = 0; r < a.rows(); ++r) std::swap(a.at(r, i), a.at(r, j));
        if (track)
            for (int r = 0; r < v.rows(); ++r) std::swap(v.at(r, i), v.at(r, j));
    }
    // row i -= q * row j
    void add_row(int i, int j, const Int& q) {
        for (int c = 0; c < a.cols(); ++c) a.at(i, c) -= q * a.at(j, c);
        if (track)
            for (int c = 0; c < u.cols(); ++c) u.at(i, c) -= q * u.at(j, c);
    }
    // col i -= q * col j
    void add_col(int i, int j, const Int& q) {
        for (int r = 0; r < a.rows(); ++r) a.at(r, i) -= q * a.at(r, j);
        if (track)
            for (int r = 0; r < v.rows(); ++r) v.at(r, i) -= q * v.at(r, j);
    }
    void negate_row(int i) {
        for (int c = 0; c < a.cols(); ++c) a.at(i, c) = -a.at(i, c);
        if (track)
            for (int c = 0; c < u.cols(); ++c) u.at(i, c) = -u.at(i, c);
    }
};

// Round-to-nearest quotient, so |x - q*b| <= |b|/2.
Int nearest_div(const Int& x, const Int& b) {
    Int q = x / b, r = x % b;
    if (r != 0 && ((r < 0) != (b < 0))) --q;  // floor
    Int rem = x - q * b;
    if (2 * abs(rem) > abs(b)) ++q;
    return q;
}

}  // namespace

SNFResult smith_normal_form(const IntMatrix& m, bool with_transforms) {
    Worker w(m, with_transforms);
    const int rows = m.rows(), cols = m.cols();
    const int steps = std::min(rows, cols);

    int t = 0;
    while (t < steps) {
        // Minimal-absolute-value pivot in the trailing submatrix.
        int pr = -1, pc = -1;
        Int best = 0;
        for (int r = t; r < rows; ++r)
            for (int c = t; c < cols; ++c) {
                const Int& x = w.a.at(r, c);
                if (x == 0) continue;
                Int ax = abs(x);
                if (pr == -1 || ax < best) {
                    best = ax;
                    pr = r;
                    pc = c;
                }
            }
        if (pr == -1) break;  // trailing submatrix is zero
        w.swap_rows(t, pr);
        w.swap_cols(t, pc);

        // Clear row and column t.  A leftover remainder is strictly smaller
        // than the pivot; it is swapped into the pivot slot at once and the
        // pass restarts, so every entry is always reduced against the
        // smallest pivot seen so far and the pivot magnitude is strictly
        // decreasing across restarts.
        while (true) {
            bool swapped = false;
            for (int r = t + 1; r < rows && !swapped; ++r) {
                if (w.a.at(r, t) == 0) continue;
                Int q = nearest_div(w.a.at(r, t), w.a.at(t, t));
                if (q != 0) w.add_row(r, t, q);
                if (w.a.at(r, t) != 0) {
                    w.swap_rows(t, r);
                    swapped = true;
                }
            }
            if (swapped) continue;
            for (int c = t + 1; c < cols && !swapped; ++c) {
                if (w.a.at(t, c) == 0) continue;
                Int q = nearest_div(w.a.at(t, c), w.a.at(t, t));
                if (q != 0) w.add_col(c, t, q);
                if (w.a.at(t, c) != 0) {
                    w.swap_cols(t, c);
                    swapped = true;
                }
            }
            if (swapped) continue;
            // Enforce divisibility of the trailing block by the pivot; the
            // merged row forces a strictly smaller pivot on the next pass.
            bool bad = false;
            for (int r = t + 1; r < rows && !bad; ++r)
                for (int c = t + 1; c < cols && !bad; ++c)
                    if (w.a.at(r, c) % w.a.at(t, t) != 0) {
                        w.add_row(t, r, Int(-1));  // row t += row r
                        bad = true;
                    }
            if (!bad) break;
        }
        if (w.a.at(t, t) < 0) w.negate_row(t);
        ++t;
    }

    SNFResult out;
    out.diagonal.resize(steps);
    for (int i = 0; i < steps; ++i) out.diagonal[i] = w.a.at(i, i);
    out.rank = t;
    if (with_transforms) {
        out.left = std::move(w.u);
        out.right = std::move(w.v);
    }
    return out;
}

}  // namespace raag
