#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "tdkit/matrix.hpp"

namespace tdkit {

/// Coefficients of a univariate polynomial, index = degree.
using Coeffs = std::vector<Rat>;

/// Monic characteristic polynomial det(tI - A), ascending coefficients.
/// Exact Faddeev-LeVerrier recursion.
Coeffs char_poly(const Mat& a);

Rat eval_poly(const Coeffs& c, const Rat& x);

/// Distinct rational roots with multiplicities, in increasing order.
/// Candidates come from the rational root theorem on the primitive integer
/// polynomial, with deflation after each root found.
std::vector<std::pair<Rat, int>> rational_roots(const Coeffs& c);

struct Eigenspace {
    Rat value;
    int multiplicity = 0; // algebraic
    std::vector<Vec> basis;
};

struct Spectrum {
    std::vector<Eigenspace> eigenvalues; // increasing by value
    bool splits = false;                 // algebraic multiplicities sum to n

    /// Split and every eigenspace has full geometric multiplicity.
    bool diagonalizable() const;
    const Eigenspace* find(const Rat& value) const;
};

Spectrum rational_spectrum(const Mat& a);

/// Zero outside the three central diagonals and nonzero immediately above and
/// below the diagonal.
bool is_irreducible_tridiagonal(const Mat& a);

std::size_t rank(const Mat& m);
/// Basis of {v : Mv = 0}, one vector per free column of the reduced echelon form.
std::vector<Vec> null_space(const Mat& m);
/// Throws std::domain_error for a singular matrix.
Mat inverse(const Mat& m);
Rat determinant(const Mat& m);

enum class SolutionKind { unique, affine, inconsistent };

struct LinearSolution {
    SolutionKind kind = SolutionKind::inconsistent;
    Vec particular;               // empty when inconsistent
    std::vector<Vec> null_basis;  // non-empty exactly when affine
};

/// Exact Gauss-Jordan solve of Mx = b. Throws std::invalid_argument when
/// M.rows() != b.size().
LinearSolution solve_linear(const Mat& m, const Vec& b);

/// Dimension of the unital algebra generated by a and b, obtained by closing
/// span{I} under left multiplication by a and b. Equals n*n exactly when the
/// pair acts absolutely irreducibly.
std::size_t word_span_dimension(const Mat& a, const Mat& b);

/// Searches the cyclic submodules generated by eigenvectors of a and b for a
/// proper common invariant subspace. Returns its basis if one is found.
std::optional<std::vector<Vec>> find_common_invariant_subspace(const Mat& a, const Mat& b);

/// Incrementally maintained row-echelon basis for a subspace of Q^n.
class SpanBasis {
public:
    explicit SpanBasis(std::size_t ambient) : ambient_(ambient) {}

    /// Adds v if it is not already in the span. Returns true if the span grew.
    bool insert(const Vec& v);
    bool contains(const Vec& v) const;
    std::size_t dimension() const { return rows_.size(); }
    std::size_t ambient() const { return ambient_; }
    const std::vector<Vec>& originals() const { return originals_; }

private:
    Vec reduce(Vec v) const;

    std::size_t ambient_;
    std::vector<Vec> rows_;       // reduced, leading entry 1 at pivots_[k]
    std::vector<std::size_t> pivots_;
    std::vector<Vec> originals_;  // inserted vectors, for readable bases
};

} // namespace tdkit
