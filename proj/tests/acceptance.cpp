// Acceptance suite: one PASS/FAIL line per criterion, with measured runtime
// against the pinned limit. Exit status is the number of failed criteria.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "tdkit/generators.hpp"
#include "tdkit/linalg.hpp"
#include "tdkit/polymod.hpp"
#include "tdkit/spectral.hpp"

using namespace tdkit;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;

    void require(bool cond, const std::string& what)
    {
        if (!cond && ok) {
            ok = false;
            detail = what;
        }
    }
};

struct Criterion {
    int id;
    std::string title;
    double limit_ms; // 0: no time limit
    std::function<Outcome()> body;
};

bool residuals_vanish(const Mat& a, const Mat& a_star, const ParamSeq& p)
{
    const auto [r1, r2] = td_residuals(a, a_star, p);
    return r1.is_zero() && r2.is_zero();
}

std::string str(const ParamSeq& p)
{
    return "(" + p.beta.str() + ", " + p.gamma.str() + ", " + p.gamma_star.str() + ", " + p.rho.str() + ", " +
           p.rho_star.str() + ")";
}

const ParamSeq kKrawtchouk{Rat(2), Rat(0), Rat(0), Rat(4), Rat(4)};

const std::vector<AWParams> kAWPoints{
    {Rat(4), Rat(1, 2), Rat(1, 3), Rat(1, 5), Rat(1, 7)},
    {Rat(3), Rat(1, 2), Rat(1, 3), Rat(1, 5), Rat(1, 7)},
    {Rat(1, 2), Rat(2), Rat(3), Rat(5), Rat(-7)},
};

struct UqArgs {
    int eps;
    Rat alpha, alpha_star;
};
const std::vector<Rat> kUqP{Rat(2), Rat(3), Rat(1, 2)};
const std::vector<UqArgs> kUqArgs{{1, Rat(1), Rat(5, 7)}, {-1, Rat(2), Rat(3, 11)}, {1, Rat(-1), Rat(7)}};

std::vector<GeneratedPair> generated_pairs()
{
    std::vector<GeneratedPair> out;
    for (long d = 1; d <= 8; ++d) out.push_back(krawtchouk_pair(d));
    out.push_back(paper_4x4());
    for (const Rat& p : kUqP)
        for (const UqArgs& u : kUqArgs)
            for (long d = 0; d <= 6; ++d) out.push_back(uq_sl2_pair(d, u.eps, p, u.alpha, u.alpha_star));
    return out;
}

Outcome criterion1()
{
    Outcome o;
    const GeneratedPair g = paper_4x4();
    const Mat& p = *g.witness;
    o.require(p * p == Mat::identity(4) * Rat(8), "P^2 != 8I");
    o.require(g.a * p == p * g.a_star, "AP != PA*");
    o.require(verify_td_pair(g.a, g.a_star).is_leonard_pair, "not reported as a Leonard pair");
    return o;
}

Outcome criterion2()
{
    Outcome o;
    for (long d = 1; d <= 8; ++d) {
        const GeneratedPair g = krawtchouk_pair(d);
        const Mat& p = *g.witness;
        const auto n = static_cast<std::size_t>(d + 1);
        const std::string at = " at d=" + std::to_string(d);
        o.require(p * p == Mat::identity(n) * Rat(2).pow(d), "P^2 != 2^d I" + at);
        o.require(g.a * p == p * g.a_star, "AP != PA*" + at);
        std::vector<Rat> expected;
        for (long i = 0; i <= d; ++i) expected.emplace_back(d - 2 * i);
        const PairReport r = verify_td_pair(g.a, g.a_star);
        o.require(r.eig_seq == EigSeq(expected), "eigenvalue sequence" + at);
        if (d >= 3) {
            const ParamSolution s = solve_param_sequence(g.a, g.a_star);
            o.require(s.kind == ParamKind::unique && s.particular == kKrawtchouk,
                      "solver params " + str(s.particular) + at);
        }
    }
    return o;
}

Outcome criterion3()
{
    Outcome o;
    int checked = 0;
    for (const GeneratedPair& g : generated_pairs()) {
        if (g.a.rows() < 4) continue;
        const std::string at = " for " + g.label;
        const ParamSolution solved = solve_param_sequence(g.a, g.a_star);
        o.require(solved.kind == ParamKind::unique, "solver not unique" + at);
        if (!o.ok) break;
        const PairReport r = verify_td_pair(g.a, g.a_star);
        const ParamSolution seq = params_from_sequences(r.eig_seq, r.dual_eig_seq);
        o.require(seq.kind == ParamKind::unique && seq.particular == solved.particular,
                  "sequence params " + str(seq.particular) + at);
        const FitResult f = fit_closed_form(r.eig_seq);
        const FitResult fs = fit_closed_form(r.dual_eig_seq);
        o.require(f.status == FitStatus::fitted && fs.status == FitStatus::fitted, "closed form not fitted" + at);
        if (!o.ok) break;
        const ParamSeq cf = params_from_closed_form(*f.form, *fs.form);
        o.require(cf == solved.particular, "closed-form params " + str(cf) + at);
        if (g.expected_params) o.require(*g.expected_params == solved.particular, "expected params" + at);
        ++checked;
    }
    if (o.ok) o.detail = std::to_string(checked) + " pairs";
    return o;
}

Outcome criterion4()
{
    Outcome o;
    int checked = 0;
    for (const Rat& p : kUqP)
        for (const UqArgs& u : kUqArgs)
            for (long d = 0; d <= 6; ++d) {
                const GeneratedPair g = uq_sl2_pair(d, u.eps, p, u.alpha, u.alpha_star);
                o.require(verify_td_pair(g.a, g.a_star).is_leonard_pair, "not a Leonard pair: " + g.label);
                ++checked;
            }
    bool rejected = false;
    try {
        uq_sl2_pair(3, 1, Rat(2), Rat(1), Rat(1));
    } catch (const std::invalid_argument&) {
        rejected = true;
    }
    o.require(rejected, "eps alpha alpha* = p^0 at d=3 was accepted");
    if (o.ok) o.detail = std::to_string(checked) + " pairs, violation rejected";
    return o;
}

Outcome criterion5()
{
    Outcome o;
    const auto [a, as] = hermite_ops();
    for (long n = 0; n <= 12; ++n)
        o.require(as(hermite_poly(n)) == hermite_poly(n) * Rat(n), "A* H_n != n H_n at n=" + std::to_string(n));
    const OperatorFixture h = hermite_fixture(16);
    o.require(h.params == ParamSeq{Rat(2), Rat(0), Rat(0), Rat(0), Rat(1)}, "Hermite params");
    o.require(all_zero(graded_td_residual(h.a, h.a_star, h.params, 16)), "residual nonzero on x^0..x^16");
    ParamSeq perturbed = h.params;
    perturbed.rho += Rat(1);
    o.require(!all_zero(graded_td_residual(h.a, h.a_star, perturbed, 16)), "perturbed rho not detected");
    return o;
}

Outcome criterion6()
{
    Outcome o;
    for (const AWParams& p : kAWPoints) {
        const std::string at = " at q=" + p.q.str();
        p.validate(16);
        const OperatorFixture f = aw_fixture(p, 16);
        for (long n = 0; n <= 10; ++n) {
            const XPoly pn = aw_poly(n, p);
            o.require(f.a_star(pn) == pn * (p.q.pow(-n) + p.abcd() * p.q.pow(n - 1)),
                      "eigen-equation n=" + std::to_string(n) + at);
            const AWCoeffs c = aw_recurrence_coeffs(n, p);
            XPoly rhs = aw_poly(n + 1, p) * c.b + pn * c.a;
            if (n > 0) rhs += aw_poly(n - 1, p) * c.c;
            o.require(XPoly::x() * pn == rhs, "recurrence n=" + std::to_string(n) + at);
        }
        // p_1 and p_2 as displayed, expanded in x and compared coefficientwise.
        const Rat one(1);
        const Rat ab = p.a * p.b, ac = p.a * p.c, ad = p.a * p.d, abcd = p.abcd(), &a = p.a, &q = p.q;
        const XPoly lin({one + a * a, -a});         // 1 - a x + a^2
        const XPoly linq({one + a * a * q * q, -a * q}); // 1 - a q x + a^2 q^2
        const XPoly p1 = XPoly::constant(one) - lin * ((one - abcd) / ((one - ab) * (one - ac) * (one - ad)));
        const XPoly p2 =
            XPoly::constant(one) -
            lin * ((one + q.inverse()) * (one - abcd * q) / ((one - ab) * (one - ac) * (one - ad))) +
            lin * linq *
                ((one - abcd * q) * (one - abcd * q * q) /
                 (q * (one - ab) * (one - ab * q) * (one - ac) * (one - ac * q) * (one - ad) * (one - ad * q)));
        o.require(aw_poly(1, p) == p1, "p_1 formula" + at);
        o.require(aw_poly(2, p) == p2, "p_2 formula" + at);
        o.require(f.params == aw_params(p), "params" + at);
        o.require(all_zero(graded_td_residual(f.a, f.a_star, f.params, 12)), "residual on x^0..x^12" + at);
    }
    return o;
}

Outcome criterion7()
{
    Outcome o;
    for (const Rat& q : {Rat(2), Rat(1, 3), Rat(-5)})
        o.require(tau_conjugation_identity_check(q), "identity fails at q=" + q.str());
    o.require(!tau_conjugation_identity_check(Rat(2), Rat(0)), "wrong scalar accepted");
    return o;
}

Outcome criterion8()
{
    Outcome o;
    const std::vector<Rat> ys{Rat(2), Rat(3), Rat(-1, 2), Rat(5, 3), Rat(-7)};
    for (const AWParams& p : kAWPoints)
        for (long n = 0; n <= 6; ++n)
            for (const Rat& y : ys)
                o.require(phi43_value(n, p, y) == aw_poly(n, p).eval(y + y.inverse()),
                          "n=" + std::to_string(n) + " y=" + y.str() + " q=" + p.q.str());
    return o;
}

// Both sequences arithmetic with step^2 = b^2 iff Dolan-Grady; both geometric
// with ratio q^(+-1), beta = q + 1/q, iff q-Serre.
bool detectors_agree(const PairReport& r, const ParamSeq& p)
{
    const SpecialCase sc = detect_special_case(p);
    const EigSeq& t = r.eig_seq;
    const EigSeq& ts = r.dual_eig_seq;
    const Rat step = t[1] - t[0], step_star = ts[1] - ts[0];
    const bool arithmetic = is_arithmetic_progression(t, step) && is_arithmetic_progression(ts, step_star);
    const Rat ratio = t[1] / t[0], ratio_star = ts[1] / ts[0];
    const bool geometric = !t[0].is_zero() && !ts[0].is_zero() && !ratio.is_zero() && !ratio_star.is_zero() &&
                           is_geometric_progression(t, ratio) && is_geometric_progression(ts, ratio_star) &&
                           (ratio_star == ratio || ratio_star == ratio.inverse());
    if (const auto* dg = std::get_if<DolanGrady>(&sc))
        return arithmetic && step * step == dg->b_sq && step_star * step_star == dg->bstar_sq;
    if (const auto* qs = std::get_if<QSerre>(&sc)) return geometric && ratio + ratio.inverse() == qs->beta;
    return !arithmetic && !geometric;
}

Outcome criterion9()
{
    Outcome o;
    for (long d = 1; d <= 8; ++d) {
        const GeneratedPair g = krawtchouk_pair(d);
        const auto [r1, r2] = dolan_grady_residuals(g.a, g.a_star, Rat(4), Rat(4));
        o.require(r1.is_zero() && r2.is_zero(), "Dolan-Grady residual at d=" + std::to_string(d));
    }
    int checked = 0;
    for (const GeneratedPair& g : generated_pairs()) {
        if (g.a.rows() < 4) continue;
        const ParamSolution s = solve_param_sequence(g.a, g.a_star);
        if (s.kind != ParamKind::unique) continue;
        const PairReport r = verify_td_pair(g.a, g.a_star);
        o.require(detectors_agree(r, s.particular), "detectors disagree for " + g.label);
        o.require(residuals_vanish(g.a, g.a_star, s.particular), "relations fail for " + g.label);
        ++checked;
    }
    if (o.ok) o.detail = std::to_string(checked) + " pairs";
    return o;
}

Outcome criterion10()
{
    Outcome o;
    const PairReport r = verify_td_pair(Mat::from_rows({{1, 0}, {0, 2}}), Mat::from_rows({{3, 0}, {0, 4}}));
    o.require(!r.is_td_pair && r.has_diagnostic("COND_IV_FAIL"), "commuting diagonal pair not rejected");
    const BetaResult b = beta_from_sequence(EigSeq({Rat(0), Rat(1), Rat(2), Rat(4), Rat(8)}));
    o.require(b.status == BetaStatus::inconsistent, "non-constant ratio accepted");
    const OrderResult ord = order_eigenvalues({Rat(0), Rat(2), Rat(10), Rat(12)}, Rat(2), Rat(0), Rat(4));
    o.require(!ord.sequence && ord.failure == OrderFailure::disconnected,
              "disconnected graph gave " + order_failure_name(ord.failure));
    return o;
}

} // namespace

int main()
{
    const std::vector<Criterion> criteria{
        {1, "4x4 example: P^2 = 8I, AP = PA*, Leonard pair", 10, criterion1},
        {2, "Krawtchouk d <= 8: witness, eigenvalues, params (2,0,0,4,4)", 1000, criterion2},
        {3, "consistency triangle on generated pairs", 0, criterion3},
        {4, "U_q(sl2) pairs are Leonard pairs; bad (alpha, alpha*) rejected", 1000, criterion4},
        {5, "Hermite module eigenvalues and relations", 1000, criterion5},
        {6, "Askey-Wilson module at three parameter points", 5000, criterion6},
        {7, "tau conjugation identity at q = 2, 1/3, -5", 0, criterion7},
        {8, "4phi3 evaluation equals the recurrence polynomials", 0, criterion8},
        {9, "Dolan-Grady residuals and special-case detectors", 0, criterion9},
        {10, "negative controls", 0, criterion10},
    };

    int failed = 0;
    for (const Criterion& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.body();
        } catch (const std::exception& e) {
            o.ok = false;
            o.detail = std::string("exception: ") + e.what();
        }
        const double ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        const bool in_time = c.limit_ms == 0 || ms < c.limit_ms;
        const bool pass = o.ok && in_time;
        if (!pass) ++failed;

        std::string timing = std::to_string(ms).substr(0, std::to_string(ms).find('.') + 3) + " ms";
        if (c.limit_ms > 0) timing += " (limit " + std::to_string(static_cast<int>(c.limit_ms)) + " ms)";
        std::string note = o.detail;
        if (o.ok && !in_time) note = "over time limit";
        std::printf("%s criterion %2d: %s [%s]%s%s\n", pass ? "PASS" : "FAIL", c.id, c.title.c_str(), timing.c_str(),
                    note.empty() ? "" : " - ", note.c_str());
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed;
}
