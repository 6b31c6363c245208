#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "tdkit/matrix.hpp"
#include "tdkit/poly.hpp"
#include "tdkit/td.hpp"

namespace tdkit {

/// Linear map on K[x] raising degree by at most `growth`.
struct GradedOp {
    std::function<XPoly(const XPoly&)> apply;
    int growth = 0;
    std::string name;

    XPoly operator()(const XPoly& f) const { return apply(f); }
};

/// outer(inner(f)).
GradedOp compose(const GradedOp& outer, const GradedOp& inner);

/// Multiplication by x.
GradedOp multiply_by_x();

/// H_{n+1} = x H_n - 2n H_{n-1}, H_0 = 1.
XPoly hermite_poly(long n);

/// A = multiplication by x, A* = (x - 2D) D.
std::pair<GradedOp, GradedOp> hermite_ops();

/// (2, 0, 0, 0, 1).
ParamSeq hermite_params();

struct AWParams {
    Rat q, a, b, c, d;

    Rat abcd() const { return a * b * c * d; }
    /// Nondegeneracy up to working degree n: all entries nonzero, q^k != 1 for
    /// 1 <= k <= 2n+2, and none of ab, ac, ad, bc, bd, cd, abcd equal to q^k
    /// for |k| <= 2n+2. Throws std::domain_error naming the first violation.
    void validate(long n) const;
};

/// The Askey-Wilson q-difference operator on K[x], x = y + 1/y.
/// Validates params at working degree n.
GradedOp aw_operator(const AWParams& p, long n = 16);

struct AWCoeffs {
    Rat b, a, c;
};

/// Recurrence coefficients of x p_n = b_n p_{n+1} + a_n p_n + c_n p_{n-1}.
/// Throws std::domain_error when a denominator vanishes.
AWCoeffs aw_recurrence_coeffs(long n, const AWParams& p);

/// Askey-Wilson polynomial p_n via the recurrence.
XPoly aw_poly(long n, const AWParams& p);

/// theta*_n = q^-n + abcd q^(n-1).
Rat aw_dual_eigenvalue(long n, const AWParams& p);

/// 4phi3(q^-n, abcd q^(n-1), a y0, a/y0; ab, ac, ad | q; q).
/// Throws std::domain_error for y0 == 0 or a vanishing denominator.
Rat phi43_value(long n, const AWParams& p, const Rat& y0);

/// (q + 1/q, 0, 0, -(q - 1/q)^2, -abcd q^-1 (q - 1/q)^2).
ParamSeq aw_params(const AWParams& p);

/// Both tridiagonal relation left sides applied to x^0..x^n: entries 0..n hold
/// the first relation, entries n+1..2n+1 the second.
std::vector<XPoly> graded_td_residual(const GradedOp& a, const GradedOp& a_star, const ParamSeq& p, long n);

bool all_zero(const std::vector<XPoly>& polys);

/// Image of 1 under A^2 A* - (q + 1/q) A A* A + A* A^2 + (q - 1/q)^2 A*.
XPoly aw_omega(const AWParams& p);

/// x^2 tau(f) - (q+1/q) x tau(x f) + tau(x^2 f) + scalar tau(f), with tau^-1
/// when inverse.
LaurentPoly tau_conjugation_residual(const LaurentPoly& f, const Rat& q, const Rat& scalar, bool inverse);

/// The residual above vanishes on y^k, |k| <= 10, for tau and tau^-1, with
/// scalar (q - 1/q)^2. Throws std::domain_error for q in {0, 1, -1}.
bool tau_conjugation_identity_check(const Rat& q);
/// Same with an explicit scalar in place of (q - 1/q)^2.
bool tau_conjugation_identity_check(const Rat& q, const Rat& scalar);

/// Coordinates of f in a graded basis (deg basis[i] == i). Throws
/// std::invalid_argument when deg f >= basis.size().
Vec graded_coordinates(const XPoly& f, const std::vector<XPoly>& basis);

/// (n+1)x(n+1) matrix of op in basis[0..n]. Needs basis[0..n+growth] graded.
/// Columns j > n - growth of a product of truncations differ from the
/// truncation of the product. Throws std::invalid_argument on a short or
/// ungraded basis.
Mat truncate_to_matrix(const GradedOp& op, const std::vector<XPoly>& basis, long n);

/// A irreducible tridiagonal and A* diagonal with pairwise distinct entries.
bool is_irreducible_truncation(const Mat& a, const Mat& a_star);

} // namespace tdkit
