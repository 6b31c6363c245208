#pragma once

#include <array>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "tdkit/matrix.hpp"

namespace tdkit {

/// Parameter sequence (beta, gamma, gamma*, rho, rho*) of the tridiagonal
/// relations.
struct ParamSeq {
    Rat beta;
    Rat gamma;
    Rat gamma_star;
    Rat rho;
    Rat rho_star;

    std::array<Rat, 5> as_array() const { return {beta, gamma, gamma_star, rho, rho_star}; }
    static ParamSeq from_array(const std::array<Rat, 5>& v) { return {v[0], v[1], v[2], v[3], v[4]}; }

    friend bool operator==(const ParamSeq&, const ParamSeq&) = default;
};

std::ostream& operator<<(std::ostream& os, const ParamSeq& p);

enum class ParamKind { unique, family, none };

/// Complete solution set: particular + span(null_basis) when kind != none.
struct ParamSolution {
    ParamKind kind = ParamKind::none;
    ParamSeq particular;
    std::vector<std::array<Rat, 5>> null_basis;
    std::string reason; // why kind == none, when known

    /// Membership of p in the affine solution set.
    bool contains(const ParamSeq& p) const;
};

/// Left-hand sides of both tridiagonal relations. The first is
///   [A, A^2 A* - beta A A* A + A* A^2 - gamma (A A* + A* A) - rho A*],
/// the second is the same with the roles of A and A* swapped.
std::pair<Mat, Mat> td_residuals(const Mat& a, const Mat& a_star, const ParamSeq& p);

/// Solves the joint linear system in (beta, gamma, gamma*, rho, rho*) obtained
/// by flattening both residual matrices.
ParamSolution solve_param_sequence(const Mat& a, const Mat& a_star);

/// (rA + sI, r*A* + s*I). Throws std::invalid_argument when r or r* is zero.
std::pair<Mat, Mat> transform_pair(const Mat& a, const Mat& a_star, const Rat& r, const Rat& s,
                                   const Rat& r_star, const Rat& s_star);

/// Parameter sequence of the transformed pair.
ParamSeq transform_params(const ParamSeq& p, const Rat& r, const Rat& s, const Rat& r_star,
                          const Rat& s_star);

struct ReducedPair {
    Mat a;
    Mat a_star;
    ParamSeq params;
};

/// Shifts A by gamma/(beta-2) and A* by gamma*/(beta-2) so that gamma = gamma* = 0.
/// Throws std::domain_error when beta == 2.
ReducedPair reduce_params(const Mat& a, const Mat& a_star, const ParamSeq& p);

struct DolanGrady {
    Rat b_sq;
    Rat bstar_sq;
    bool degenerate = false; // rho = rho* = 0
};
struct QSerre {
    Rat beta;
};
struct Generic {};

using SpecialCase = std::variant<DolanGrady, QSerre, Generic>;

SpecialCase detect_special_case(const ParamSeq& p);
std::string special_case_name(const SpecialCase& c);

/// [A,[A,[A,A*]]] - b^2 [A,A*] and its dual, with [r,s] = rs - sr.
std::pair<Mat, Mat> dolan_grady_residuals(const Mat& a, const Mat& a_star, const Rat& b_sq,
                                          const Rat& bstar_sq);

/// A^3 A* - [3] A^2 A* A + [3] A A* A^2 - A* A^3 and its dual, where
/// [3] = beta + 1 = q + 1/q + 1.
std::pair<Mat, Mat> q_serre_residuals(const Mat& a, const Mat& a_star, const Rat& beta);

} // namespace tdkit
