#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "tdkit/generators.hpp"
#include "tdkit/linalg.hpp"
#include "tdkit/special.hpp"
#include "tdkit/td.hpp"

using namespace tdkit;

namespace {

const ParamSeq kKraw{Rat(2), Rat(0), Rat(0), Rat(4), Rat(4)};

// U_q(sl2) matrices built straight from the module action, without the
// constructor's Leonard-pair precondition.
std::pair<Mat, Mat> raw_uq_sl2(long d, const Rat& p, const Rat& alpha, const Rat& alpha_star)
{
    const auto n = static_cast<std::size_t>(d + 1);
    const Rat scale = Rat(1) / (p - Rat(1) / p);
    Mat a(n, n), as(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        const long li = static_cast<long>(i);
        a(i, i) = p.pow(d - 2 * li) * scale;
        as(i, i) = p.pow(2 * li - d) * scale;
        if (i + 1 < n) a(i + 1, i) = alpha * oracle::q_bracket_sum(li + 1, p);
        if (i >= 1) as(i - 1, i) = alpha_star * oracle::q_bracket_sum(d - li + 1, p);
    }
    return {a, as};
}

std::vector<GeneratedPair> families()
{
    std::vector<GeneratedPair> out;
    for (long d = 1; d <= 6; ++d) out.push_back(krawtchouk_pair(d));
    out.push_back(paper_4x4());
    out.push_back(uq_sl2_pair(3, 1, Rat(2), Rat(1), Rat(2)));
    out.push_back(uq_sl2_pair(4, -1, Rat(3), Rat(1, 2), Rat(5)));
    out.push_back(uq_sl2_pair(2, 1, Rat(1, 2), Rat(3), Rat(-1)));
    return out;
}

} // namespace

TEST_CASE("td_residuals vanish on the documented pairs")
{
    const GeneratedPair g = paper_4x4();
    auto [r1, r2] = td_residuals(g.a, g.a_star, kKraw);
    CHECK(r1.is_zero());
    CHECK(r2.is_zero());

    std::mt19937 rng(1);
    const Mat m = oracle::random_mat(rng, 3);
    const ParamSeq any{Rat(3), Rat(-1), Rat(2, 3), Rat(5), Rat(7)};
    auto [s1, s2] = td_residuals(m, m, any);
    CHECK(s1.is_zero());
    CHECK(s2.is_zero());

    const GeneratedPair k4 = krawtchouk_pair(4);
    auto [k1, k2] = td_residuals(k4.a, k4.a_star, kKraw);
    CHECK(k1.is_zero());
    CHECK(k2.is_zero());

    CHECK_THROWS_AS(td_residuals(Mat(2, 2), Mat(3, 3), any), std::invalid_argument);
}

TEST_CASE("the 4x4 relations A^2A* - 2AA*A + A*A^2 = 4A*")
{
    const GeneratedPair g = paper_4x4();
    const Mat& a = g.a;
    const Mat& s = g.a_star;
    CHECK(a * a * s - a * s * a * Rat(2) + s * a * a == s * Rat(4));
    CHECK(s * s * a - s * a * s * Rat(2) + a * s * s == a * Rat(4));
}

TEST_CASE("solve_param_sequence")
{
    const GeneratedPair g = paper_4x4();
    const ParamSolution s = solve_param_sequence(g.a, g.a_star);
    CHECK(s.kind == ParamKind::unique);
    CHECK(s.particular == kKraw);

    const ParamSolution free = solve_param_sequence(Mat::identity(2), Mat::identity(2));
    CHECK(free.kind == ParamKind::family);
    CHECK(free.null_basis.size() == 5);

    // The module matrices at (d=3, p=2, alpha=alpha*=1).
    const auto [ua, us] = raw_uq_sl2(3, Rat(2), Rat(1), Rat(1));
    const ParamSolution u = solve_param_sequence(ua, us);
    REQUIRE(u.kind == ParamKind::unique);
    CHECK(u.particular.beta == Rat(17, 4));
    auto [r1, r2] = td_residuals(ua, us, u.particular);
    CHECK(r1.is_zero());
    CHECK(r2.is_zero());

    // The 3-cycle against distinct eigenvalues satisfies the relations with beta = -1.
    const Mat c3 = Mat::from_rows({{0, 1, 0}, {0, 0, 1}, {1, 0, 0}});
    const Mat d3 = Mat::from_rows({{1, 0, 0}, {0, 2, 0}, {0, 0, 5}});
    const ParamSolution cyc = solve_param_sequence(c3, d3);
    REQUIRE(cyc.kind == ParamKind::unique);
    CHECK(cyc.particular == ParamSeq{Rat(-1), Rat(0), Rat(8), Rat(0), Rat(-17)});

    // The 4-cycle obeys no relation.
    const Mat x = Mat::from_rows({{0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}, {1, 0, 0, 0}});
    const Mat y = Mat::from_rows({{1, 0, 0, 0}, {0, 2, 0, 0}, {0, 0, 5, 0}, {0, 0, 0, 11}});
    CHECK(solve_param_sequence(x, y).kind == ParamKind::none);
}

TEST_CASE("solver soundness: every member of the solution set has zero residuals")
{
    for (const GeneratedPair& g : families()) {
        CAPTURE(g.label);
        const ParamSolution s = solve_param_sequence(g.a, g.a_star);
        REQUIRE(s.kind != ParamKind::none);
        std::vector<ParamSeq> members{s.particular};
        for (const auto& v : s.null_basis) {
            auto arr = s.particular.as_array();
            for (std::size_t i = 0; i < 5; ++i) arr[i] += v[i] * Rat(3, 2);
            members.push_back(ParamSeq::from_array(arr));
        }
        for (const ParamSeq& p : members) {
            auto [r1, r2] = td_residuals(g.a, g.a_star, p);
            CHECK(r1.is_zero());
            CHECK(r2.is_zero());
            CHECK(s.contains(p));
        }
        if (g.a.rows() >= 4) CHECK(s.kind == ParamKind::unique);
        if (g.expected_params) CHECK(s.contains(*g.expected_params));
    }
}

TEST_CASE("transform_pair")
{
    const GeneratedPair g = paper_4x4();
    const auto [a1, s1] = transform_pair(g.a, g.a_star, Rat(1), Rat(0), Rat(1), Rat(0));
    CHECK(a1 == g.a);
    CHECK(s1 == g.a_star);
    const auto [a2, s2] = transform_pair(g.a, g.a_star, Rat(2), Rat(1), Rat(1), Rat(0));
    CHECK(a2 == g.a * Rat(2) + Mat::identity(4));
    CHECK(s2 == g.a_star);
    const auto [a3, s3] = transform_pair(g.a, g.a_star, Rat(1), Rat(-1), Rat(1), Rat(0));
    const Spectrum sp = rational_spectrum(a3);
    REQUIRE(sp.eigenvalues.size() == 4);
    CHECK(sp.eigenvalues[0].value == Rat(-4));
    CHECK(sp.eigenvalues[1].value == Rat(-2));
    CHECK(sp.eigenvalues[2].value == Rat(0));
    CHECK(sp.eigenvalues[3].value == Rat(2));
    CHECK_THROWS_AS(transform_pair(g.a, g.a_star, Rat(0), Rat(1), Rat(1), Rat(0)), std::invalid_argument);
    CHECK_THROWS_AS(transform_pair(g.a, g.a_star, Rat(1), Rat(1), Rat(0), Rat(0)), std::invalid_argument);
}

TEST_CASE("transform_params")
{
    const ParamSeq p{Rat(5, 2), Rat(1), Rat(-2), Rat(3), Rat(7)};
    CHECK(transform_params(p, Rat(1), Rat(0), Rat(1), Rat(0)) == p);
    CHECK(transform_params(kKraw, Rat(3), Rat(5), Rat(1), Rat(0)) ==
          ParamSeq{Rat(2), Rat(0), Rat(0), Rat(36), Rat(4)});
    CHECK_THROWS_AS(transform_params(p, Rat(0), Rat(0), Rat(1), Rat(0)), std::invalid_argument);
}

TEST_CASE("transformed pairs satisfy the transformed relations")
{
    const std::vector<std::array<Rat, 4>> moves{
        {Rat(1), Rat(-1), Rat(1), Rat(0)}, {Rat(2), Rat(1, 3), Rat(-1), Rat(5)}, {Rat(-3, 2), Rat(4), Rat(7), Rat(-2)}};
    for (const GeneratedPair& g : families()) {
        const ParamSolution s = solve_param_sequence(g.a, g.a_star);
        for (const auto& m : moves) {
            const auto [ta, ts] = transform_pair(g.a, g.a_star, m[0], m[1], m[2], m[3]);
            const ParamSeq tp = transform_params(s.particular, m[0], m[1], m[2], m[3]);
            auto [r1, r2] = td_residuals(ta, ts, tp);
            CHECK(r1.is_zero());
            CHECK(r2.is_zero());
            CHECK(solve_param_sequence(ta, ts).contains(tp));
        }
    }
}

TEST_CASE("reduce_params")
{
    const GeneratedPair u = uq_sl2_pair(3, 1, Rat(2), Rat(1), Rat(2));
    const ParamSeq up = solve_param_sequence(u.a, u.a_star).particular;
    const ReducedPair same = reduce_params(u.a, u.a_star, up);
    CHECK(same.a == u.a);
    CHECK(same.a_star == u.a_star);
    CHECK(same.params == up);

    const auto [sa, ss] = transform_pair(u.a, u.a_star, Rat(1), Rat(3), Rat(1), Rat(-2, 5));
    const ParamSeq shifted = solve_param_sequence(sa, ss).particular;
    CHECK_FALSE(shifted.gamma.is_zero());
    const ReducedPair r = reduce_params(sa, ss, shifted);
    CHECK(r.params.gamma.is_zero());
    CHECK(r.params.gamma_star.is_zero());
    CHECK(solve_param_sequence(r.a, r.a_star).particular == r.params);

    const GeneratedPair g = paper_4x4();
    CHECK_THROWS_AS(reduce_params(g.a, g.a_star, kKraw), std::domain_error);
}

TEST_CASE("detect_special_case")
{
    const SpecialCase dg = detect_special_case(kKraw);
    REQUIRE(std::holds_alternative<DolanGrady>(dg));
    CHECK(std::get<DolanGrady>(dg).b_sq == Rat(4));
    CHECK(std::get<DolanGrady>(dg).bstar_sq == Rat(4));
    CHECK_FALSE(std::get<DolanGrady>(dg).degenerate);

    const SpecialCase qs = detect_special_case({Rat(5, 2), Rat(0), Rat(0), Rat(0), Rat(0)});
    REQUIRE(std::holds_alternative<QSerre>(qs));
    CHECK(std::get<QSerre>(qs).beta == Rat(5, 2));

    CHECK(std::holds_alternative<Generic>(detect_special_case({Rat(2), Rat(1), Rat(0), Rat(0), Rat(0)})));
    CHECK(std::holds_alternative<Generic>(detect_special_case({Rat(-2), Rat(0), Rat(0), Rat(0), Rat(0)})));
    const SpecialCase degenerate = detect_special_case({Rat(2), Rat(0), Rat(0), Rat(0), Rat(0)});
    REQUIRE(std::holds_alternative<DolanGrady>(degenerate));
    CHECK(std::get<DolanGrady>(degenerate).degenerate);
    CHECK(special_case_name(dg) == "dolan_grady");
    CHECK(special_case_name(qs) == "q_serre");
}

TEST_CASE("Dolan-Grady and q-Serre forms agree with the general relations")
{
    for (long d = 1; d <= 6; ++d) {
        const GeneratedPair g = krawtchouk_pair(d);
        auto [r1, r2] = dolan_grady_residuals(g.a, g.a_star, Rat(4), Rat(4));
        CHECK(r1.is_zero());
        CHECK(r2.is_zero());
    }
    const GeneratedPair u = uq_sl2_pair(4, 1, Rat(3), Rat(2), Rat(1, 7));
    auto [q1, q2] = q_serre_residuals(u.a, u.a_star, Rat(82, 9));
    CHECK(q1.is_zero());
    CHECK(q2.is_zero());
    // The two formulations agree entrywise for arbitrary matrices.
    std::mt19937 rng(4);
    const Mat a = oracle::random_mat(rng, 3), b = oracle::random_mat(rng, 3);
    const Rat bsq(7, 3), bssq(-2);
    auto [d1, d2] = dolan_grady_residuals(a, b, bsq, bssq);
    auto [t1, t2] = td_residuals(a, b, {Rat(2), Rat(0), Rat(0), bsq, bssq});
    CHECK(d1 == t1);
    CHECK(d2 == t2);
    const Rat beta(10, 3);
    auto [s1, s2] = q_serre_residuals(a, b, beta);
    auto [u1, u2] = td_residuals(a, b, {beta, Rat(0), Rat(0), Rat(0), Rat(0)});
    CHECK(s1 == u1);
    CHECK(s2 == u2);
}

TEST_CASE("residual linearity in (gamma, rho) and (gamma*, rho*)")
{
    std::mt19937 rng(12);
    const Mat a = oracle::random_mat(rng, 3), b = oracle::random_mat(rng, 3);
    const ParamSeq p1{Rat(3), Rat(1), Rat(2), Rat(-1), Rat(4)};
    const ParamSeq p2{Rat(3), Rat(-2, 3), Rat(5), Rat(7), Rat(1, 2)};
    const ParamSeq sum{Rat(3), p1.gamma + p2.gamma, p1.gamma_star + p2.gamma_star, p1.rho + p2.rho,
                       p1.rho_star + p2.rho_star};
    const ParamSeq base{Rat(3), Rat(0), Rat(0), Rat(0), Rat(0)};
    auto [x1, x2] = td_residuals(a, b, p1);
    auto [y1, y2] = td_residuals(a, b, p2);
    auto [z1, z2] = td_residuals(a, b, sum);
    auto [o1, o2] = td_residuals(a, b, base);
    CHECK(z1 == x1 + y1 - o1);
    CHECK(z2 == x2 + y2 - o2);
}
