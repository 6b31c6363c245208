#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tdkit/linalg.hpp"
#include "tdkit/td.hpp"

namespace tdkit {

/// Ordered list of pairwise distinct scalars.
class EigSeq {
public:
    EigSeq() = default;
    /// Throws std::invalid_argument on repeated values.
    explicit EigSeq(std::vector<Rat> values);

    const std::vector<Rat>& values() const { return values_; }
    std::size_t size() const { return values_.size(); }
    const Rat& operator[](std::size_t i) const { return values_[i]; }
    EigSeq reversed() const;

    friend bool operator==(const EigSeq&, const EigSeq&) = default;

private:
    std::vector<Rat> values_;
};

std::ostream& operator<<(std::ostream& os, const EigSeq& s);

/// x^2 - beta x y + y^2 - gamma (x + y) - rho at (theta, mu).
Rat adjacency_poly(const Rat& theta, const Rat& mu, const Rat& beta, const Rat& gamma, const Rat& rho);

enum class OrderFailure { none, degree_exceeded, cycle, disconnected };
std::string order_failure_name(OrderFailure f);

struct OrderResult {
    std::optional<EigSeq> sequence;
    OrderFailure failure = OrderFailure::none;
};

/// Orders distinct eigenvalues along the path formed by the adjacency relation
/// p(theta, mu) = 0. The returned orientation starts at the larger endpoint.
/// Throws std::invalid_argument on repeated input values.
OrderResult order_eigenvalues(const std::vector<Rat>& thetas, const Rat& beta, const Rat& gamma,
                              const Rat& rho);

enum class BetaStatus { ok, too_short, inconsistent };

struct BetaResult {
    BetaStatus status = BetaStatus::too_short;
    Rat beta; // valid when status == ok
};

/// Common value of (theta[i-2] - theta[i+1]) / (theta[i-1] - theta[i]) minus one.
BetaResult beta_from_sequence(const EigSeq& theta);

/// Parameter sequence from eigenvalue and dual eigenvalue sequences. For
/// diameter < 3 the result is the affine family left free by the constraints.
/// Throws std::invalid_argument on length mismatch or length < 2.
ParamSolution params_from_sequences(const EigSeq& theta, const EigSeq& theta_star);

/// Parameters constrained by one sequence alone: beta, gamma, rho.
struct HalfParams {
    Rat beta;
    Rat gamma;
    Rat rho;
};
std::optional<HalfParams> half_params_from_sequence(const EigSeq& theta);

enum class CaseLabel { I, II, III };
std::string case_name(CaseLabel c);

/// theta_i = a + b q^i + c q^-i            (Case I)
/// theta_i = a + b i + c i(i-1)/2          (Case II)
/// theta_i = a + b (-1)^i + c i (-1)^i     (Case III)
/// When q is irrational only the label and beta are known.
struct ClosedForm {
    CaseLabel kind = CaseLabel::II;
    Rat beta;
    std::optional<Rat> q;
    std::optional<Rat> a, b, c;

    bool has_coefficients() const { return a.has_value(); }
    /// i-th term; requires coefficients.
    Rat term(long i) const;
};

enum class FitStatus { fitted, case_only, underdetermined, inconsistent };
std::string fit_status_name(FitStatus s);

struct FitResult {
    FitStatus status = FitStatus::underdetermined;
    std::optional<ClosedForm> form;
    std::string detail;
};

/// Fits the closed form. For Case I the root of z^2 - beta z + 1 with |z| > 1
/// is taken as q.
FitResult fit_closed_form(const EigSeq& theta);

/// Parameter formulas for each case. Throws std::invalid_argument on a case
/// mismatch, a q mismatch (reciprocal q is normalized), or missing coefficients.
ParamSeq params_from_closed_form(const ClosedForm& cf, const ClosedForm& cf_star);

bool is_arithmetic_progression(const EigSeq& theta, const Rat& b);
/// Throws std::invalid_argument for q == 0.
bool is_geometric_progression(const EigSeq& theta, const Rat& q);

struct Diagnostic {
    std::string code;
    std::string detail;
};

/// Verdict of tridiagonal / Leonard pair verification.
struct PairReport {
    bool is_td_pair = false;
    bool is_leonard_pair = false;
    int diameter = -1;
    EigSeq eig_seq;
    EigSeq dual_eig_seq;
    std::vector<int> shape;
    ParamSolution params;
    std::size_t word_span_dim = 0;
    std::optional<std::size_t> invariant_subspace_dim; // from the secondary search
    std::vector<Diagnostic> diagnostics;               // failed conditions
    std::vector<Diagnostic> notes;                     // non-failing remarks

    bool has_diagnostic(const std::string& code) const;
};

/// Checks diagonalizability, both tridiagonal eigenspace orderings and
/// absolute irreducibility. Throws std::invalid_argument on non-square or
/// mismatched inputs; every other failure lands in diagnostics.
PairReport verify_td_pair(const Mat& a, const Mat& a_star);

} // namespace tdkit
