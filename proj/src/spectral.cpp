#include "tdkit/spectral.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

namespace tdkit {

EigSeq::EigSeq(std::vector<Rat> values) : values_(std::move(values))
{
    std::set<Rat> seen(values_.begin(), values_.end());
    if (seen.size() != values_.size()) throw std::invalid_argument("eigenvalue sequence has repeated values");
}

EigSeq EigSeq::reversed() const
{
    return EigSeq(std::vector<Rat>(values_.rbegin(), values_.rend()));
}

std::ostream& operator<<(std::ostream& os, const EigSeq& s)
{
    os << '(';
    for (std::size_t i = 0; i < s.size(); ++i) os << (i ? ", " : "") << s[i];
    return os << ')';
}

Rat adjacency_poly(const Rat& theta, const Rat& mu, const Rat& beta, const Rat& gamma, const Rat& rho)
{
    return theta * theta - beta * theta * mu + mu * mu - gamma * (theta + mu) - rho;
}

std::string order_failure_name(OrderFailure f)
{
    switch (f) {
    case OrderFailure::none: return "none";
    case OrderFailure::degree_exceeded: return "degree_exceeded";
    case OrderFailure::cycle: return "cycle";
    case OrderFailure::disconnected: return "disconnected";
    }
    return "unknown";
}

OrderResult order_eigenvalues(const std::vector<Rat>& thetas, const Rat& beta, const Rat& gamma,
                              const Rat& rho)
{
    const EigSeq checked(thetas); // rejects repeats
    const std::size_t n = thetas.size();
    OrderResult result;
    if (n == 0) {
        result.sequence = EigSeq{};
        return result;
    }

    std::vector<std::vector<std::size_t>> adj(n);
    std::size_t edges = 0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (adjacency_poly(thetas[i], thetas[j], beta, gamma, rho).is_zero()) {
                adj[i].push_back(j);
                adj[j].push_back(i);
                ++edges;
            }
        }
    }
    for (const auto& nb : adj) {
        if (nb.size() > 2) {
            result.failure = OrderFailure::degree_exceeded;
            return result;
        }
    }

    // Components: a component with as many edges as vertices is a cycle.
    std::vector<int> comp(n, -1);
    int components = 0;
    for (std::size_t s = 0; s < n; ++s) {
        if (comp[s] >= 0) continue;
        std::vector<std::size_t> stack{s};
        comp[s] = components;
        std::size_t verts = 0, degree_sum = 0;
        while (!stack.empty()) {
            const std::size_t v = stack.back();
            stack.pop_back();
            ++verts;
            degree_sum += adj[v].size();
            for (std::size_t w : adj[v]) {
                if (comp[w] < 0) {
                    comp[w] = components;
                    stack.push_back(w);
                }
            }
        }
        if (degree_sum / 2 == verts) {
            result.failure = OrderFailure::cycle;
            return result;
        }
        ++components;
    }
    if (components > 1) {
        result.failure = OrderFailure::disconnected;
        return result;
    }
    (void)edges;

    // Single path; walk from the larger endpoint.
    std::size_t start = n;
    for (std::size_t v = 0; v < n; ++v) {
        if (adj[v].size() <= 1 && (start == n || thetas[v] > thetas[start])) start = v;
    }
    std::vector<Rat> path;
    std::size_t prev = n, cur = start;
    while (cur != n) {
        path.push_back(thetas[cur]);
        std::size_t next = n;
        for (std::size_t w : adj[cur]) {
            if (w != prev) next = w;
        }
        prev = cur;
        cur = next;
    }
    result.sequence = EigSeq(std::move(path));
    return result;
}

BetaResult beta_from_sequence(const EigSeq& theta)
{
    BetaResult r;
    if (theta.size() < 4) return r;
    std::optional<Rat> common;
    for (std::size_t i = 2; i + 1 < theta.size(); ++i) {
        const Rat ratio = (theta[i - 2] - theta[i + 1]) / (theta[i - 1] - theta[i]);
        if (common && *common != ratio) {
            r.status = BetaStatus::inconsistent;
            return r;
        }
        common = ratio;
    }
    r.status = BetaStatus::ok;
    r.beta = *common - Rat(1);
    return r;
}

namespace {

// Appends the linear constraints on (beta, gamma_x, rho_x) imposed by one
// sequence; gamma_col / rho_col select the unknowns it governs.
void append_sequence_constraints(const EigSeq& t, std::size_t gamma_col, std::size_t rho_col,
                                 std::vector<std::array<Rat, 5>>& rows, Vec& rhs)
{
    const std::size_t d = t.size() - 1;
    // beta (t[i-1] - t[i]) = t[i-2] - t[i+1] - (t[i-1] - t[i]),  2 <= i <= d-1
    for (std::size_t i = 2; i + 1 <= d; ++i) {
        std::array<Rat, 5> row{};
        row[0] = t[i - 1] - t[i];
        rows.push_back(row);
        rhs.push_back(t[i - 2] - t[i + 1] - (t[i - 1] - t[i]));
    }
    // gamma + beta t[i] = t[i-1] + t[i+1],  1 <= i <= d-1
    for (std::size_t i = 1; i + 1 <= d; ++i) {
        std::array<Rat, 5> row{};
        row[0] = t[i];
        row[gamma_col] = Rat(1);
        rows.push_back(row);
        rhs.push_back(t[i - 1] + t[i + 1]);
    }
    // rho + beta t[i-1] t[i] + gamma (t[i-1] + t[i]) = t[i-1]^2 + t[i]^2,  1 <= i <= d
    for (std::size_t i = 1; i <= d; ++i) {
        std::array<Rat, 5> row{};
        row[0] = t[i - 1] * t[i];
        row[gamma_col] = t[i - 1] + t[i];
        row[rho_col] = Rat(1);
        rows.push_back(row);
        rhs.push_back(t[i - 1] * t[i - 1] + t[i] * t[i]);
    }
}

} // namespace

ParamSolution params_from_sequences(const EigSeq& theta, const EigSeq& theta_star)
{
    if (theta.size() != theta_star.size()) throw std::invalid_argument("params_from_sequences: length mismatch");
    if (theta.size() < 2) throw std::invalid_argument("params_from_sequences: need at least two terms");

    std::vector<std::array<Rat, 5>> rows;
    Vec rhs;
    append_sequence_constraints(theta, 1, 3, rows, rhs);
    append_sequence_constraints(theta_star, 2, 4, rows, rhs);
    Mat m(rows.size(), 5);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < 5; ++j) m(i, j) = rows[i][j];

    const LinearSolution s = solve_linear(m, rhs);
    ParamSolution out;
    if (s.kind == SolutionKind::inconsistent) {
        const BetaResult b1 = beta_from_sequence(theta);
        const BetaResult b2 = beta_from_sequence(theta_star);
        if (b1.status == BetaStatus::inconsistent) out.reason = "eigenvalue sequence: beta+1 ratios differ";
        else if (b2.status == BetaStatus::inconsistent) out.reason = "dual eigenvalue sequence: beta+1 ratios differ";
        else out.reason = "eigenvalue and dual eigenvalue sequences give different beta";
        return out;
    }
    out.kind = s.kind == SolutionKind::unique ? ParamKind::unique : ParamKind::family;
    out.particular = ParamSeq{s.particular[0], s.particular[1], s.particular[2], s.particular[3],
                              s.particular[4]};
    for (const Vec& v : s.null_basis) out.null_basis.push_back({v[0], v[1], v[2], v[3], v[4]});
    return out;
}

std::optional<HalfParams> half_params_from_sequence(const EigSeq& theta)
{
    const BetaResult b = beta_from_sequence(theta);
    if (b.status != BetaStatus::ok) return std::nullopt;
    HalfParams hp{b.beta, theta[0] - b.beta * theta[1] + theta[2], Rat(0)};
    for (std::size_t i = 1; i + 1 < theta.size(); ++i) {
        if (theta[i - 1] - b.beta * theta[i] + theta[i + 1] != hp.gamma) return std::nullopt;
    }
    auto rho_at = [&](std::size_t i) {
        return theta[i - 1] * theta[i - 1] - b.beta * theta[i - 1] * theta[i] + theta[i] * theta[i] -
               hp.gamma * (theta[i - 1] + theta[i]);
    };
    hp.rho = rho_at(1);
    for (std::size_t i = 2; i < theta.size(); ++i) {
        if (rho_at(i) != hp.rho) return std::nullopt;
    }
    return hp;
}

std::string case_name(CaseLabel c)
{
    switch (c) {
    case CaseLabel::I: return "I";
    case CaseLabel::II: return "II";
    case CaseLabel::III: return "III";
    }
    return "?";
}

std::string fit_status_name(FitStatus s)
{
    switch (s) {
    case FitStatus::fitted: return "fitted";
    case FitStatus::case_only: return "case_only";
    case FitStatus::underdetermined: return "underdetermined";
    case FitStatus::inconsistent: return "inconsistent";
    }
    return "?";
}

namespace {

// Basis functions (1, f(i), g(i)) of each case's closed form.
std::array<Rat, 3> closed_form_basis(CaseLabel kind, const std::optional<Rat>& q, long i)
{
    switch (kind) {
    case CaseLabel::I: return {Rat(1), q->pow(i), q->pow(-i)};
    case CaseLabel::II: return {Rat(1), Rat(i), Rat(i * (i - 1)) / Rat(2)};
    case CaseLabel::III: {
        const Rat sign = i % 2 == 0 ? Rat(1) : Rat(-1);
        return {Rat(1), sign, sign * Rat(i)};
    }
    }
    throw std::logic_error("unreachable");
}

} // namespace

Rat ClosedForm::term(long i) const
{
    if (!has_coefficients()) throw std::logic_error("ClosedForm::term: coefficients unknown");
    const auto f = closed_form_basis(kind, q, i);
    return *a * f[0] + *b * f[1] + *c * f[2];
}

FitResult fit_closed_form(const EigSeq& theta)
{
    FitResult r;
    if (theta.size() < 4) {
        r.detail = "fewer than four terms leave beta unconstrained";
        return r;
    }
    const BetaResult br = beta_from_sequence(theta);
    if (br.status != BetaStatus::ok) {
        r.status = FitStatus::inconsistent;
        r.detail = "beta+1 ratios differ along the sequence";
        return r;
    }
    ClosedForm cf;
    cf.beta = br.beta;
    if (br.beta == Rat(2)) {
        cf.kind = CaseLabel::II;
    } else if (br.beta == Rat(-2)) {
        cf.kind = CaseLabel::III;
    } else {
        cf.kind = CaseLabel::I;
        const auto root = exact_sqrt(br.beta * br.beta - Rat(4));
        if (!root) {
            r.status = FitStatus::case_only;
            r.form = cf;
            r.detail = "q is a root of z^2 - beta z + 1, which has no rational root";
            return r;
        }
        const Rat z1 = (br.beta + *root) / Rat(2);
        const Rat z2 = (br.beta - *root) / Rat(2);
        cf.q = z1.abs() > Rat(1) ? z1 : z2;
    }

    Mat m(3, 3);
    Vec rhs(3);
    for (long i = 0; i < 3; ++i) {
        const auto f = closed_form_basis(cf.kind, cf.q, i);
        for (std::size_t j = 0; j < 3; ++j) m(static_cast<std::size_t>(i), j) = f[j];
        rhs[static_cast<std::size_t>(i)] = theta[static_cast<std::size_t>(i)];
    }
    const LinearSolution s = solve_linear(m, rhs);
    if (s.kind != SolutionKind::unique) {
        r.status = FitStatus::inconsistent;
        r.detail = "closed-form system is singular";
        return r;
    }
    cf.a = s.particular[0];
    cf.b = s.particular[1];
    cf.c = s.particular[2];
    for (std::size_t i = 0; i < theta.size(); ++i) {
        if (cf.term(static_cast<long>(i)) != theta[i]) {
            r.status = FitStatus::inconsistent;
            r.detail = "term " + std::to_string(i) + " departs from the fitted closed form";
            return r;
        }
    }
    r.status = FitStatus::fitted;
    r.form = cf;
    return r;
}

ParamSeq params_from_closed_form(const ClosedForm& cf, const ClosedForm& cf_star)
{
    if (cf.kind != cf_star.kind) throw std::invalid_argument("params_from_closed_form: case mismatch");
    if (!cf.has_coefficients() || !cf_star.has_coefficients()) {
        throw std::invalid_argument("params_from_closed_form: closed form lacks coefficients");
    }
    ClosedForm dual = cf_star;
    if (cf.kind == CaseLabel::I) {
        if (!cf.q || !dual.q) throw std::invalid_argument("params_from_closed_form: Case I needs q");
        if (*dual.q != *cf.q) {
            if (*dual.q != cf.q->inverse()) throw std::invalid_argument("params_from_closed_form: q mismatch");
            dual.q = cf.q;
            std::swap(dual.b, dual.c);
        }
    }
    auto gamma_rho = [](const ClosedForm& f) -> std::pair<Rat, Rat> {
        const Rat& a = *f.a;
        const Rat& b = *f.b;
        const Rat& c = *f.c;
        switch (f.kind) {
        case CaseLabel::I: {
            const Rat& q = *f.q;
            const Rat qm1_sq_over_q = (q - Rat(1)) * (q - Rat(1)) / q;
            const Rat q_diff = q - q.inverse();
            return {-a * qm1_sq_over_q, a * a * qm1_sq_over_q - b * c * q_diff * q_diff};
        }
        case CaseLabel::II: return {c, b * b - b * c - Rat(2) * a * c};
        case CaseLabel::III: return {Rat(4) * a, c * c - Rat(4) * a * a};
        }
        throw std::logic_error("unreachable");
    };
    Rat beta;
    switch (cf.kind) {
    case CaseLabel::I: beta = *cf.q + cf.q->inverse(); break;
    case CaseLabel::II: beta = Rat(2); break;
    case CaseLabel::III: beta = Rat(-2); break;
    }
    const auto [gamma, rho] = gamma_rho(cf);
    const auto [gamma_star, rho_star] = gamma_rho(dual);
    return {beta, gamma, gamma_star, rho, rho_star};
}

bool is_arithmetic_progression(const EigSeq& theta, const Rat& b)
{
    for (std::size_t i = 1; i < theta.size(); ++i) {
        if (theta[i] != theta[i - 1] + b) return false;
    }
    return true;
}

bool is_geometric_progression(const EigSeq& theta, const Rat& q)
{
    if (q.is_zero()) throw std::invalid_argument("is_geometric_progression: q must be nonzero");
    for (std::size_t i = 1; i < theta.size(); ++i) {
        if (theta[i] != theta[i - 1] * q) return false;
    }
    return true;
}

bool PairReport::has_diagnostic(const std::string& code) const
{
    return std::any_of(diagnostics.begin(), diagnostics.end(),
                       [&](const Diagnostic& d) { return d.code == code; });
}

namespace {

struct OrderingSearch {
    std::optional<std::vector<std::size_t>> order; // indices into the spectrum
    bool brute_force = false;
};

// Checks Y V_i within V_{i-1} + V_i + V_{i+1} at one position of a (partial) order.
bool inclusion_holds(const std::vector<std::size_t>& order, std::size_t pos, const Spectrum& spec,
                     const std::vector<std::vector<Vec>>& images, std::size_t n)
{
    SpanBasis nbhd(n);
    const std::size_t lo = pos == 0 ? 0 : pos - 1;
    const std::size_t hi = std::min(pos + 1, order.size() - 1);
    for (std::size_t k = lo; k <= hi; ++k) {
        for (const Vec& v : spec.eigenvalues[order[k]].basis) nbhd.insert(v);
    }
    for (const Vec& w : images[order[pos]]) {
        if (!nbhd.contains(w)) return false;
    }
    return true;
}

bool ordering_valid(const std::vector<std::size_t>& order, const Spectrum& spec,
                    const std::vector<std::vector<Vec>>& images, std::size_t n)
{
    for (std::size_t pos = 0; pos < order.size(); ++pos) {
        if (!inclusion_holds(order, pos, spec, images, n)) return false;
    }
    return true;
}

OrderingSearch find_ordering(const Spectrum& spec, const Mat& other, const std::optional<HalfParams>& hint,
                             std::size_t n)
{
    const std::size_t m = spec.eigenvalues.size();
    std::vector<std::vector<Vec>> images(m);
    for (std::size_t e = 0; e < m; ++e) {
        for (const Vec& v : spec.eigenvalues[e].basis) images[e].push_back(mat_vec(other, v));
    }

    OrderingSearch out;
    if (hint) {
        std::vector<Rat> values;
        for (const auto& e : spec.eigenvalues) values.push_back(e.value);
        const OrderResult r = order_eigenvalues(values, hint->beta, hint->gamma, hint->rho);
        if (r.sequence) {
            std::vector<std::size_t> order;
            for (const Rat& v : r.sequence->values()) {
                for (std::size_t e = 0; e < m; ++e) {
                    if (spec.eigenvalues[e].value == v) order.push_back(e);
                }
            }
            if (ordering_valid(order, spec, images, n)) {
                out.order = std::move(order);
                return out;
            }
        }
    }
    if (m > 7) return out;

    // Backtracking over orderings; position k-1 is checked once k is placed.
    out.brute_force = true;
    std::vector<std::size_t> order;
    std::vector<bool> used(m, false);
    std::function<bool()> extend = [&]() -> bool {
        if (order.size() == m) return inclusion_holds(order, m - 1, spec, images, n);
        for (std::size_t e = 0; e < m; ++e) {
            if (used[e]) continue;
            order.push_back(e);
            used[e] = true;
            const bool ok = order.size() < 2 || inclusion_holds(order, order.size() - 2, spec, images, n);
            if (ok && extend()) return true;
            order.pop_back();
            used[e] = false;
        }
        return false;
    };
    if (extend()) {
        if (m > 1 && spec.eigenvalues[order.front()].value < spec.eigenvalues[order.back()].value) {
            std::reverse(order.begin(), order.end());
        }
        out.order = std::move(order);
    }
    return out;
}

bool beta_outside_theorem(const Rat& beta)
{
    // q + 1/q = beta with q a root of unity forces beta in {-2, -1, 0, 1, 2}.
    return beta.is_integer() && beta >= Rat(-2) && beta <= Rat(2);
}

} // namespace

PairReport verify_td_pair(const Mat& a, const Mat& a_star)
{
    if (!a.is_square() || !a_star.is_square() || a.rows() != a_star.rows()) {
        throw std::invalid_argument("verify_td_pair: need square matrices of equal size");
    }
    const std::size_t n = a.rows();
    PairReport rep;

    const Spectrum sa = rational_spectrum(a);
    const Spectrum ss = rational_spectrum(a_star);
    bool cond_i = true;
    for (const auto& [spec, name] : {std::pair{&sa, "A"}, std::pair{&ss, "A*"}}) {
        if (!spec->splits) {
            rep.diagnostics.push_back({"SPECTRUM_NOT_SPLIT", std::string(name) + " has eigenvalues outside Q"});
            cond_i = false;
        } else if (!spec->diagonalizable()) {
            rep.diagnostics.push_back({"NOT_DIAGONALIZABLE", std::string(name) + " is not diagonalizable"});
            cond_i = false;
        }
    }

    rep.params = solve_param_sequence(a, a_star);
    if (rep.params.kind == ParamKind::none) {
        rep.diagnostics.push_back({"NO_PARAMETER_SEQUENCE", rep.params.reason});
    }

    rep.word_span_dim = word_span_dimension(a, a_star);
    if (rep.word_span_dim != n * n) {
        rep.diagnostics.push_back(
            {"COND_IV_FAIL", "generated algebra has dimension " + std::to_string(rep.word_span_dim) +
                                 " < " + std::to_string(n * n)});
        if (const auto w = find_common_invariant_subspace(a, a_star)) rep.invariant_subspace_dim = w->size();
    }

    if (cond_i) {
        std::optional<HalfParams> hint, hint_star;
        if (rep.params.kind != ParamKind::none) {
            const ParamSeq& p = rep.params.particular;
            hint = HalfParams{p.beta, p.gamma, p.rho};
            hint_star = HalfParams{p.beta, p.gamma_star, p.rho_star};
            if (rep.params.kind == ParamKind::unique && beta_outside_theorem(p.beta)) {
                rep.notes.push_back({"BETA_OUTSIDE_ORDERING_THEOREM",
                                     "q + 1/q = " + p.beta.str() +
                                         " makes q a root of unity; path ordering was checked directly"});
            }
        }
        const OrderingSearch oa = find_ordering(sa, a_star, hint, n);
        const OrderingSearch os = find_ordering(ss, a, hint_star, n);
        if (!oa.order) {
            rep.diagnostics.push_back({"COND_II_FAIL", "no ordering of the eigenspaces of A is tridiagonal for A*"});
        }
        if (!os.order) {
            rep.diagnostics.push_back({"COND_III_FAIL", "no ordering of the eigenspaces of A* is tridiagonal for A"});
        }
        if (oa.brute_force && oa.order) rep.notes.push_back({"ORDERING_BY_SEARCH", "A"});
        if (os.brute_force && os.order) rep.notes.push_back({"ORDERING_BY_SEARCH", "A*"});
        if (oa.order && os.order) {
            std::vector<Rat> ev, dv;
            std::vector<int> shape, dual_shape;
            for (auto e : *oa.order) {
                ev.push_back(sa.eigenvalues[e].value);
                shape.push_back(static_cast<int>(sa.eigenvalues[e].basis.size()));
            }
            for (auto e : *os.order) {
                dv.push_back(ss.eigenvalues[e].value);
                dual_shape.push_back(static_cast<int>(ss.eigenvalues[e].basis.size()));
            }
            rep.eig_seq = EigSeq(std::move(ev));
            rep.dual_eig_seq = EigSeq(std::move(dv));
            rep.diameter = static_cast<int>(rep.eig_seq.size()) - 1;
            rep.shape = shape;
            if (rep.eig_seq.size() != rep.dual_eig_seq.size()) {
                rep.diagnostics.push_back({"DIAMETER_MISMATCH", "A and A* have different numbers of eigenvalues"});
            } else if (shape != dual_shape) {
                rep.diagnostics.push_back({"SHAPE_MISMATCH", "eigenspace dimensions of A and A* differ"});
            }
        }
    }

    rep.is_td_pair = rep.diagnostics.empty();
    rep.is_leonard_pair =
        rep.is_td_pair && std::all_of(rep.shape.begin(), rep.shape.end(), [](int r) { return r == 1; });
    return rep;
}

} // namespace tdkit
