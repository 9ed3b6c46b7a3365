#include "raag/forms.hpp"

#include <stdexcept>

namespace raag {

GroupRingElement form_value(const LambdaMatrix& h, const LambdaVector& x, const LambdaVector& y) {
    if (static_cast<int>(x.size()) != h.rows() || static_cast<int>(y.size()) != h.cols())
        throw std::invalid_argument("form_value shape mismatch");
    GroupRingElement out(h.graph_ptr());
    for (int i = 0; i < h.rows(); ++i) {
        if (x[i].is_zero()) continue;
        GroupRingElement xi = involute(x[i]);
        for (int j = 0; j < h.cols(); ++j) {
            if (h.at(i, j).is_zero() || y[j].is_zero()) continue;
            out += xi * h.at(i, j) * y[j];
        }
    }
    return out;
}

bool is_hermitian(const LambdaMatrix& h) {
    if (h.rows() != h.cols()) return false;
    for (int i = 0; i < h.rows(); ++i)
        for (int j = 0; j < h.cols(); ++j)
            if (!(h.at(j, i) == involute(h.at(i, j)))) return false;
    return true;
}

std::vector<int> w_invariant(const LambdaMatrix& h) {
    if (!is_hermitian(h)) throw std::invalid_argument("w_invariant: form is not hermitian");
    std::vector<int> w(h.rows());
    for (int i = 0; i < h.rows(); ++i)
        w[i] = static_cast<int>(epsilon1(h.at(i, i)) % 2 != 0);
    return w;
}

bool is_even(const LambdaMatrix& h) {
    for (int x : w_invariant(h))
        if (x) return false;
    return true;
}

std::optional<LambdaMatrix> strongly_even_witness(const LambdaMatrix& h) {
    if (!is_hermitian(h))
        throw std::invalid_argument("strongly_even_witness: form is not hermitian");
    if (!is_even(h)) return std::nullopt;
    auto g = h.graph_ptr();
    const SimplicialGraph& graph = *g;
    const int n = h.rows();
    LambdaMatrix lambda(g, n, n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) lambda.at(i, j) = h.at(i, j);
    for (int i = 0; i < n; ++i) {
        // Diagonal entries satisfy c = involute(c); keep the coefficients on
        // the designated positive word of each inverse pair, plus half the
        // identity coefficient.
        const GroupRingElement& c = h.at(i, i);
        GroupRingElement half(g);
        for (const auto& [word, coeff] : c.terms()) {
            if (word.is_identity())
                half += GroupRingElement::constant(g, coeff / 2);
            else if (word_is_positive(word, graph))
                half += GroupRingElement::from_word(g, word, coeff);
        }
        lambda.at(i, i) = half;
    }
    if (!(lambda + lambda.conjugate_transpose() == h))
        throw std::logic_error("strongly_even_witness: reconstruction failed");
    return lambda;
}

LambdaMatrix hyperbolic_form(LambdaMatrix::GraphPtr g, int r) {
    if (r < 0) throw std::invalid_argument("hyperbolic_form: negative rank");
    LambdaMatrix h(g, 2 * r, 2 * r);
    for (int i = 0; i < r; ++i) {
        h.at(i, r + i) = GroupRingElement::constant(g, 1);
        h.at(r + i, i) = GroupRingElement::constant(g, 1);
    }
    return h;
}

LambdaMatrix metabolic_double(const LambdaMatrix& delta, bool require_even) {
    if (!is_hermitian(delta))
        throw std::invalid_argument("metabolic_double: delta is not hermitian");
    if (require_even && !is_even(delta))
        throw std::invalid_argument("metabolic_double: delta is not even");
    auto g = delta.graph_ptr();
    const int n = delta.rows();
    LambdaMatrix m(g, 2 * n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) m.at(i, j) = delta.at(i, j);
        m.at(i, n + i) = GroupRingElement::constant(g, 1);
        m.at(n + i, i) = GroupRingElement::constant(g, 1);
    }
    return m;
}

bool isometry_check(const LambdaMatrix& h1, const LambdaMatrix& h2, const LambdaMatrix& u) {
    if (u.rows() != h2.rows() || u.cols() != h1.rows() || h1.rows() != h1.cols() ||
        h2.rows() != h2.cols())
        throw std::invalid_argument("isometry_check shape mismatch");
    return u.conjugate_transpose() * h2 * u == h1;
}

namespace {

// sigma_{u,0,v}(x) = x + u s(v, x) - v s(u, x), an isometry whenever
// s(u,u) = s(v,v) = s(u,v) = 0.  As a matrix: I + u (conj(v)^T s) - v (conj(u)^T s).
LambdaMatrix transvection_matrix(const LambdaMatrix& s, const LambdaVector& u,
                                 const LambdaVector& v) {
    auto g = s.graph_ptr();
    const int n = s.rows();
    LambdaMatrix m = LambdaMatrix::identity(g, n);
    for (int j = 0; j < n; ++j) {
        GroupRingElement sv(g), su(g);  // s(v, x_j) and s(u, x_j)
        for (int i = 0; i < n; ++i) {
            if (!v[i].is_zero() && !s.at(i, j).is_zero()) sv += involute(v[i]) * s.at(i, j);
            if (!u[i].is_zero() && !s.at(i, j).is_zero()) su += involute(u[i]) * s.at(i, j);
        }
        for (int i = 0; i < n; ++i) {
            if (!u[i].is_zero() && !sv.is_zero()) m.at(i, j) += u[i] * sv;
            if (!v[i].is_zero() && !su.is_zero()) m.at(i, j) -= v[i] * su;
        }
    }
    return m;
}

}  // namespace

LambdaMatrix transvection_composite(const LambdaMatrix& s, const LambdaVector& w,
                                    const LambdaVector& v) {
    auto g = s.graph_ptr();
    if (!is_hermitian(s))
        throw std::invalid_argument("transvection_composite: form is not hermitian");
    const GroupRingElement one = GroupRingElement::constant(g, 1);
    if (!form_value(s, w, w).is_zero() || !form_value(s, v, v).is_zero() ||
        !(form_value(s, w, v) == one))
        throw std::invalid_argument(
            "transvection_composite: pairing preconditions violated (need s(w,w)=0, "
            "s(v,v)=0, s(w,v)=1)");

    const int n = s.rows();
    // Stabilize with one fresh hyperbolic pair {e, f}.
    LambdaMatrix stab(g, n + 2, n + 2);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) stab.at(i, j) = s.at(i, j);
    stab.at(n, n + 1) = one;
    stab.at(n + 1, n) = one;

    auto lift = [&](const LambdaVector& x) {
        LambdaVector out(n + 2, GroupRingElement(g));
        for (int i = 0; i < n; ++i) out[i] = x[i];
        return out;
    };
    LambdaVector we = lift(w), ve = lift(v);
    LambdaVector e(n + 2, GroupRingElement(g)), f(n + 2, GroupRingElement(g));
    e[n] = one;
    f[n + 1] = one;

    LambdaMatrix first = transvection_matrix(stab, e, ve);
    LambdaMatrix second = transvection_matrix(stab, f, we);
    return second * first;
}

FormsBundle stabilization_isometry(const LambdaMatrix& theta) {
    auto witness = strongly_even_witness(theta);  // throws when not hermitian
    if (!witness) throw std::invalid_argument("stabilization_isometry: theta is not even");
    auto g = theta.graph_ptr();
    const int r = theta.rows();

    FormsBundle bundle;
    bundle.theta = theta;
    bundle.lambda = *witness;
    bundle.psi = metabolic_double(theta, true);

    // k(a_i) = e_i + sum_j f_j lambda_ji, k(b_i) = f_i; columns are images.
    LambdaMatrix k = LambdaMatrix::identity(g, 2 * r);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) k.at(r + j, i) = bundle.lambda.at(j, i);
    bundle.k = std::move(k);
    return bundle;
}

GroupRingElement kernel_pairing(const LambdaMatrix& s, const LambdaMatrix& theta,
                                const LambdaVector& b, const LambdaVector& x,
                                const LambdaVector& b2, const LambdaVector& x2) {
    return form_value(s, b, b2) + form_value(theta, x, x2);
}

}  // namespace raag
