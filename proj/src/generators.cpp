#include "tdkit/generators.hpp"

#include <stdexcept>

#include "tdkit/special.hpp"

namespace tdkit {

GeneratedPair krawtchouk_pair(long d)
{
    if (d < 1) throw std::invalid_argument("krawtchouk_pair: d must be at least 1");
    const auto n = static_cast<std::size_t>(d + 1);
    Mat a(n, n), a_star(n, n), p(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        const long li = static_cast<long>(i);
        if (i + 1 < n) {
            a(i, i + 1) = Rat(d - li);
            a(i + 1, i) = Rat(li + 1);
        }
        a_star(i, i) = Rat(d - 2 * li);
        for (std::size_t j = 0; j < n; ++j) {
            const long lj = static_cast<long>(j);
            p(i, j) = binomial(d, lj) * hyp2f1_z2(li, lj, d);
        }
    }
    GeneratedPair g{std::move(a), std::move(a_star), std::move(p), std::nullopt,
                    "krawtchouk d=" + std::to_string(d)};
    if (d >= 3) g.expected_params = ParamSeq{Rat(2), Rat(0), Rat(0), Rat(4), Rat(4)};
    return g;
}

GeneratedPair paper_4x4()
{
    Mat a = Mat::from_rows({{0, 3, 0, 0}, {1, 0, 2, 0}, {0, 2, 0, 1}, {0, 0, 3, 0}});
    Mat a_star = Mat::from_rows({{3, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, -1, 0}, {0, 0, 0, -3}});
    Mat p = Mat::from_rows({{1, 3, 3, 1}, {1, 1, -1, -1}, {1, -1, -1, 1}, {1, -3, 3, -1}});
    return {std::move(a), std::move(a_star), std::move(p), ParamSeq{Rat(2), Rat(0), Rat(0), Rat(4), Rat(4)},
            "paper-4x4"};
}

GeneratedPair uq_sl2_pair(long d, int eps, const Rat& p, const Rat& alpha, const Rat& alpha_star)
{
    if (d < 0) throw std::invalid_argument("uq_sl2_pair: d must be nonnegative");
    if (eps != 1 && eps != -1) throw std::invalid_argument("uq_sl2_pair: eps must be 1 or -1");
    if (p.is_zero() || p == Rat(1) || p == Rat(-1)) throw std::invalid_argument("uq_sl2_pair: p must not be 0, 1 or -1");
    if (alpha.is_zero() || alpha_star.is_zero()) throw std::invalid_argument("uq_sl2_pair: alpha and alpha* must be nonzero");
    const Rat prod = Rat(eps) * alpha * alpha_star;
    for (long k = 0; k <= d - 1; ++k) {
        if (prod == p.pow(d - 1 - 2 * k)) {
            throw std::invalid_argument("uq_sl2_pair: eps alpha alpha* = p^" + std::to_string(d - 1 - 2 * k));
        }
    }

    const auto n = static_cast<std::size_t>(d + 1);
    const Rat scale = (p - p.inverse()).inverse();
    Mat a(n, n), a_star(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        const long li = static_cast<long>(i);
        const Rat k = Rat(eps) * p.pow(d - 2 * li);
        a(i, i) = k * scale;
        a_star(i, i) = k.inverse() * scale;
        if (i + 1 < n) a(i + 1, i) = alpha * q_bracket(li + 1, p);
        if (i >= 1) a_star(i - 1, i) = alpha_star * Rat(eps) * q_bracket(d - li + 1, p);
    }
    const Rat q = p * p;
    GeneratedPair g{std::move(a), std::move(a_star), std::nullopt,
                    ParamSeq{q + q.inverse(), Rat(0), Rat(0), Rat(0), Rat(0)},
                    "uq-sl2 d=" + std::to_string(d) + " eps=" + std::to_string(eps) + " p=" + p.str() +
                        " alpha=" + alpha.str() + " alpha*=" + alpha_star.str()};
    return g;
}

OperatorFixture hermite_fixture(long n)
{
    if (n < 1) throw std::invalid_argument("hermite_fixture: n must be positive");
    auto [a, a_star] = hermite_ops();
    return {std::move(a), std::move(a_star), hermite_params()};
}

OperatorFixture aw_fixture(const AWParams& p, long n)
{
    return {multiply_by_x(), aw_operator(p, n), aw_params(p)};
}

} // namespace tdkit
