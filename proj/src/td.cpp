#include "tdkit/td.hpp"

#include <stdexcept>

#include "tdkit/linalg.hpp"

namespace tdkit {

namespace {

void require_pair(const Mat& a, const Mat& a_star, const char* what)
{
    if (!a.is_square() || !a_star.is_square() || a.rows() != a_star.rows()) {
        throw std::invalid_argument(std::string(what) + ": need square matrices of equal size");
    }
}

// Pieces of the first relation: [A, x], for each monomial the unknowns multiply.
struct RelationTerms {
    Mat fixed; // [A, A^2 A* + A* A^2]
    Mat beta;  // [A, A A* A]
    Mat gamma; // [A, A A* + A* A]
    Mat rho;   // [A, A*]
};

RelationTerms relation_terms(const Mat& a, const Mat& b)
{
    const Mat ab = a * b;
    const Mat ba = b * a;
    return {commutator(a, a * ab + ba * a), commutator(a, ab * a), commutator(a, ab + ba),
            commutator(a, b)};
}

} // namespace

std::ostream& operator<<(std::ostream& os, const ParamSeq& p)
{
    return os << '(' << p.beta << ", " << p.gamma << ", " << p.gamma_star << ", " << p.rho << ", "
              << p.rho_star << ')';
}

bool ParamSolution::contains(const ParamSeq& p) const
{
    if (kind == ParamKind::none) return false;
    const auto target = p.as_array();
    const auto base = particular.as_array();
    Mat m(5, std::max<std::size_t>(null_basis.size(), 1));
    Vec rhs(5);
    for (std::size_t i = 0; i < 5; ++i) {
        rhs[i] = target[i] - base[i];
        for (std::size_t k = 0; k < null_basis.size(); ++k) m(i, k) = null_basis[k][i];
    }
    return solve_linear(m, rhs).kind != SolutionKind::inconsistent;
}

std::pair<Mat, Mat> td_residuals(const Mat& a, const Mat& a_star, const ParamSeq& p)
{
    require_pair(a, a_star, "td_residuals");
    const RelationTerms t1 = relation_terms(a, a_star);
    const RelationTerms t2 = relation_terms(a_star, a);
    Mat r1 = t1.fixed - t1.beta * p.beta - t1.gamma * p.gamma - t1.rho * p.rho;
    Mat r2 = t2.fixed - t2.beta * p.beta - t2.gamma * p.gamma_star - t2.rho * p.rho_star;
    return {std::move(r1), std::move(r2)};
}

ParamSolution solve_param_sequence(const Mat& a, const Mat& a_star)
{
    require_pair(a, a_star, "solve_param_sequence");
    const RelationTerms t1 = relation_terms(a, a_star);
    const RelationTerms t2 = relation_terms(a_star, a);
    const std::size_t nn = a.rows() * a.rows();

    // Unknown order: beta, gamma, gamma*, rho, rho*. Residual = fixed - sum(coef * unknown) = 0.
    Mat m(2 * nn, 5);
    Vec rhs(2 * nn);
    for (std::size_t k = 0; k < nn; ++k) {
        m(k, 0) = t1.beta.entries()[k];
        m(k, 1) = t1.gamma.entries()[k];
        m(k, 3) = t1.rho.entries()[k];
        rhs[k] = t1.fixed.entries()[k];
        m(nn + k, 0) = t2.beta.entries()[k];
        m(nn + k, 2) = t2.gamma.entries()[k];
        m(nn + k, 4) = t2.rho.entries()[k];
        rhs[nn + k] = t2.fixed.entries()[k];
    }
    const LinearSolution s = solve_linear(m, rhs);

    ParamSolution out;
    if (s.kind == SolutionKind::inconsistent) {
        out.reason = "tridiagonal relations have no solution for this pair";
        return out;
    }
    out.kind = s.kind == SolutionKind::unique ? ParamKind::unique : ParamKind::family;
    out.particular = ParamSeq{s.particular[0], s.particular[1], s.particular[2], s.particular[3],
                              s.particular[4]};
    for (const Vec& v : s.null_basis) out.null_basis.push_back({v[0], v[1], v[2], v[3], v[4]});
    return out;
}

std::pair<Mat, Mat> transform_pair(const Mat& a, const Mat& a_star, const Rat& r, const Rat& s,
                                   const Rat& r_star, const Rat& s_star)
{
    require_pair(a, a_star, "transform_pair");
    if (r.is_zero() || r_star.is_zero()) throw std::invalid_argument("transform_pair: r and r* must be nonzero");
    const Mat id = Mat::identity(a.rows());
    return {a * r + id * s, a_star * r_star + id * s_star};
}

ParamSeq transform_params(const ParamSeq& p, const Rat& r, const Rat& s, const Rat& r_star,
                          const Rat& s_star)
{
    if (r.is_zero() || r_star.is_zero()) throw std::invalid_argument("transform_params: r and r* must be nonzero");
    const Rat two(2);
    return {p.beta,
            r * p.gamma + s * (two - p.beta),
            r_star * p.gamma_star + s_star * (two - p.beta),
            r * r * p.rho - two * r * s * p.gamma + s * s * (p.beta - two),
            r_star * r_star * p.rho_star - two * r_star * s_star * p.gamma_star +
                s_star * s_star * (p.beta - two)};
}

ReducedPair reduce_params(const Mat& a, const Mat& a_star, const ParamSeq& p)
{
    if (p.beta == Rat(2)) throw std::domain_error("reduce_params: beta = 2 has no reducing shift");
    const Rat shift = p.gamma / (p.beta - Rat(2));
    const Rat shift_star = p.gamma_star / (p.beta - Rat(2));
    auto [ra, rs] = transform_pair(a, a_star, Rat(1), shift, Rat(1), shift_star);
    return {std::move(ra), std::move(rs), transform_params(p, Rat(1), shift, Rat(1), shift_star)};
}

SpecialCase detect_special_case(const ParamSeq& p)
{
    if (!p.gamma.is_zero() || !p.gamma_star.is_zero()) return Generic{};
    if (p.beta == Rat(2)) return DolanGrady{p.rho, p.rho_star, p.rho.is_zero() && p.rho_star.is_zero()};
    if (p.beta != Rat(-2) && p.rho.is_zero() && p.rho_star.is_zero()) return QSerre{p.beta};
    return Generic{};
}

std::string special_case_name(const SpecialCase& c)
{
    if (std::holds_alternative<DolanGrady>(c)) return "dolan_grady";
    if (std::holds_alternative<QSerre>(c)) return "q_serre";
    return "generic";
}

std::pair<Mat, Mat> dolan_grady_residuals(const Mat& a, const Mat& a_star, const Rat& b_sq,
                                          const Rat& bstar_sq)
{
    require_pair(a, a_star, "dolan_grady_residuals");
    const Mat c1 = commutator(a, a_star);
    const Mat c2 = commutator(a_star, a);
    return {commutator(a, commutator(a, c1)) - c1 * b_sq,
            commutator(a_star, commutator(a_star, c2)) - c2 * bstar_sq};
}

std::pair<Mat, Mat> q_serre_residuals(const Mat& a, const Mat& a_star, const Rat& beta)
{
    require_pair(a, a_star, "q_serre_residuals");
    const Rat three = beta + Rat(1);
    auto one_side = [&](const Mat& x, const Mat& y) {
        const Mat x2 = x * x;
        return x2 * x * y - x2 * y * x * three + x * y * x2 * three - y * x2 * x;
    };
    return {one_side(a, a_star), one_side(a_star, a)};
}

} // namespace tdkit
