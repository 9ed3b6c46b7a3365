#ifndef RAAG_FORMS_HPP
#define RAAG_FORMS_HPP

#include <optional>
#include <vector>

#include "raag/lambda_matrix.hpp"

namespace raag {

/// Sesquilinear pairing of coordinate vectors against a form matrix:
/// s(x, y) = sum_ij conj(x_i) h_ij y_j.  Modules are right modules, so
/// s(x·l, y) = conj(l) s(x, y) and s(x, y·l) = s(x, y) l.
GroupRingElement form_value(const LambdaMatrix& h, const LambdaVector& x, const LambdaVector& y);

/// Hermitian symmetry: entry (j, i) is the involution of entry (i, j).
bool is_hermitian(const LambdaMatrix& h);

/// Diagonal parity vector: component i is the identity coefficient of
/// h_ii mod 2.  The form is even exactly when the vector vanishes; cross
/// terms contribute evenly on diagonal evaluations, so the diagonal decides
/// evenness on the whole module.  Throws when h is not hermitian.
std::vector<int> w_invariant(const LambdaMatrix& h);

bool is_even(const LambdaMatrix& h);

/// Split an even hermitian form as h = lambda + conj-transpose(lambda):
/// lambda takes the strict upper triangle verbatim and half of each
/// diagonal entry (coefficients on designated positive words plus half the
/// identity coefficient).  Returns nullopt when the diagonal parity is
/// nonzero.  Throws when h is not hermitian.
std::optional<LambdaMatrix> strongly_even_witness(const LambdaMatrix& h);

/// The standard rank-2r hyperbolic form in basis e_1..e_r f_1..f_r:
/// pairings s(e_i, f_j) = delta_ij and no self-pairings.
LambdaMatrix hyperbolic_form(LambdaMatrix::GraphPtr g, int r);

/// The doubled metabolic block form [[delta, I], [I, 0]] on rank 2n.
/// With require_even set, throws unless delta is even.
LambdaMatrix metabolic_double(const LambdaMatrix& delta, bool require_even);

/// conj-transpose(u) * h2 * u == h1, i.e. u is an isometry from the module
/// carrying h1 into the module carrying h2.
bool isometry_check(const LambdaMatrix& h1, const LambdaMatrix& h2, const LambdaMatrix& u);

/// Composite of two unitary transvections on s stabilized by one fresh
/// hyperbolic pair {e, f}: the returned matrix theta is an isometry of
/// s + H(1) that maps w to e and fixes everything orthogonal to the span
/// of {w, v, e, f}.  Preconditions: s hermitian, s(w,w) = 0, s(v,v) = 0,
/// s(w,v) = 1, enforced with std::invalid_argument.
LambdaMatrix transvection_composite(const LambdaMatrix& s, const LambdaVector& w,
                                    const LambdaVector& v);

/// Data of the stabilization isometry for an even hermitian form theta on
/// a free rank-r module F: the witness lambda, the metabolic form psi on
/// F + F*, and the isometry k from psi to the hyperbolic form of rank r,
/// with k(a_i) = e_i + sum_j f_j lambda_ji and k(b_i) = f_i.
struct FormsBundle {
    LambdaMatrix theta;
    LambdaMatrix lambda;  // strongly-even witness
    LambdaMatrix psi;     // [[theta, I], [I, 0]]
    LambdaMatrix k;       // isometry psi -> hyperbolic(r)
};

/// Throws std::invalid_argument unless theta is hermitian and even.
FormsBundle stabilization_isometry(const LambdaMatrix& theta);

/// Pointwise vanishing hook for supplied kernel pairs: evaluates
/// s(b, b2) + theta(x, x2).  Producing kernel elements is not algorithmic
/// here; callers supply them.
GroupRingElement kernel_pairing(const LambdaMatrix& s, const LambdaMatrix& theta,
                                const LambdaVector& b, const LambdaVector& x,
                                const LambdaVector& b2, const LambdaVector& x2);

}  // namespace raag

#endif
