#pragma once

#include <optional>
#include <string>

#include "tdkit/polymod.hpp"
#include "tdkit/td.hpp"

namespace tdkit {

struct GeneratedPair {
    Mat a;
    Mat a_star;
    std::optional<Mat> witness; // P with AP = PA*, when known
    std::optional<ParamSeq> expected_params;
    std::string label;
};

/// Krawtchouk pair of diameter d with P_ij = C(d,j) 2F1(-i,-j;-d;2).
/// Throws std::invalid_argument for d < 1.
GeneratedPair krawtchouk_pair(long d);

/// The literal 4x4 matrices A, A*, P of the introductory example.
GeneratedPair paper_4x4();

/// Pair acting on the (d+1)-dimensional U_q(sl2) module with q = p^2:
///   A = alpha f + k / (p - 1/p),  A* = alpha* e + k^-1 / (p - 1/p).
/// Throws std::invalid_argument when eps is not +-1, p is 0 or +-1, alpha or
/// alpha* is zero, or eps alpha alpha* = p^(d-1-2k) for some 0 <= k <= d-1.
GeneratedPair uq_sl2_pair(long d, int eps, const Rat& p, const Rat& alpha, const Rat& alpha_star);

struct OperatorFixture {
    GradedOp a;
    GradedOp a_star;
    ParamSeq params;
};

/// Hermite operators with (2, 0, 0, 0, 1). Throws std::invalid_argument for n < 1.
OperatorFixture hermite_fixture(long n = 16);

/// Askey-Wilson operators with their parameter sequence; validates params at
/// degree n.
OperatorFixture aw_fixture(const AWParams& p, long n = 16);

} // namespace tdkit
