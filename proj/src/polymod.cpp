#include "tdkit/polymod.hpp"

#include <array>
#include <memory>
#include <mutex>
#include <set>
#include <stdexcept>

#include "tdkit/linalg.hpp"
#include "tdkit/special.hpp"

namespace tdkit {

GradedOp compose(const GradedOp& outer, const GradedOp& inner)
{
    return {[o = outer.apply, i = inner.apply](const XPoly& f) { return o(i(f)); },
            outer.growth + inner.growth, outer.name + "*" + inner.name};
}

GradedOp multiply_by_x()
{
    return {[](const XPoly& f) { return XPoly::x() * f; }, 1, "A"};
}

XPoly hermite_poly(long n)
{
    if (n < 0) throw std::invalid_argument("hermite_poly: negative index");
    XPoly prev, cur = XPoly::constant(Rat(1));
    for (long k = 0; k < n; ++k) {
        XPoly next = XPoly::x() * cur - prev * Rat(2 * k);
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

std::pair<GradedOp, GradedOp> hermite_ops()
{
    GradedOp a_star{[](const XPoly& f) {
                        const XPoly df = derivative(f);
                        return XPoly::x() * df - derivative(df) * Rat(2);
                    },
                    1, "A*"};
    return {multiply_by_x(), std::move(a_star)};
}

ParamSeq hermite_params() { return {Rat(2), Rat(0), Rat(0), Rat(0), Rat(1)}; }

void AWParams::validate(long n) const
{
    const std::array<std::pair<const Rat*, const char*>, 5> named{
        {{&q, "q"}, {&a, "a"}, {&b, "b"}, {&c, "c"}, {&d, "d"}}};
    for (const auto& [v, name] : named) {
        if (v->is_zero()) throw std::domain_error(std::string("AWParams: ") + name + " is zero");
    }
    const long bound = 2 * n + 2;
    for (long k = 1; k <= bound; ++k) {
        if (q.pow(k) == Rat(1)) throw std::domain_error("AWParams: q^" + std::to_string(k) + " = 1");
    }
    const std::array<std::pair<Rat, const char*>, 7> products{{{a * b, "ab"},
                                                               {a * c, "ac"},
                                                               {a * d, "ad"},
                                                               {b * c, "bc"},
                                                               {b * d, "bd"},
                                                               {c * d, "cd"},
                                                               {abcd(), "abcd"}}};
    for (long k = -bound; k <= bound; ++k) {
        const Rat qk = q.pow(k);
        for (const auto& [v, name] : products) {
            if (v == qk) throw std::domain_error(std::string("AWParams: ") + name + " = q^" + std::to_string(k));
        }
    }
}

namespace {

LaurentPoly linear_factors(const AWParams& p)
{
    LaurentPoly n = LaurentPoly::monomial(0);
    for (const Rat* r : {&p.a, &p.b, &p.c, &p.d}) {
        LaurentPoly f = LaurentPoly::monomial(0);
        f.add_term(1, -*r);
        n = n * f;
    }
    return n;
}

// Image of y^n + y^-n (n >= 1), as a Laurent polynomial:
//   (1 + abcd/q)(y^n + y^-n) + [N(y) h(y) - y^2 N(1/y) h(1/y)] / (1 - y^2)
// with h(y) = -(q^n - 1) q^-1 y^-n sum_{k<n} q^-(n-1-k) y^2k.
LaurentPoly aw_image_of_symmetric_monomial(const AWParams& p, const LaurentPoly& nfac, long n)
{
    LaurentPoly h;
    const Rat lead = -(p.q.pow(n) - Rat(1)) / p.q;
    for (long k = 0; k < n; ++k) h.add_term(2 * k - n, lead * p.q.pow(-(n - 1 - k)));
    const LaurentPoly first = nfac * h;
    const LaurentPoly numerator = first - LaurentPoly::monomial(2) * first.reflected();
    LaurentPoly den = LaurentPoly::monomial(0);
    den.add_term(2, Rat(-1));
    const auto quotient = laurent_exact_div(numerator, den);
    if (!quotient) throw std::logic_error("aw_operator: numerator not divisible by 1 - y^2");
    LaurentPoly g = LaurentPoly::monomial(n);
    g.add_term(-n, Rat(1));
    return g * (Rat(1) + p.abcd() / p.q) + *quotient;
}

struct AWCache {
    AWParams params;
    LaurentPoly nfac;
    std::mutex mutex;
    std::vector<LaurentPoly> images; // images[n] for y^n + y^-n, n >= 1

    LaurentPoly image(long n)
    {
        std::lock_guard lock(mutex);
        while (static_cast<long>(images.size()) <= n) {
            const long k = static_cast<long>(images.size());
            images.push_back(k == 0 ? LaurentPoly::monomial(0, Rat(1) + params.abcd() / params.q)
                                    : aw_image_of_symmetric_monomial(params, nfac, k));
        }
        return images[static_cast<std::size_t>(n)];
    }
};

} // namespace

GradedOp aw_operator(const AWParams& p, long n)
{
    p.validate(n);
    auto cache = std::make_shared<AWCache>();
    cache->params = p;
    cache->nfac = linear_factors(p);
    return {[cache](const XPoly& f) {
                const LaurentPoly g = x_to_laurent(f);
                LaurentPoly out;
                for (const auto& [e, c] : g.terms()) {
                    if (e >= 0) out += cache->image(e) * c; // y^-e rides along with y^e
                }
                return symmetric_laurent_to_x(out);
            },
            0, "A*"};
}

AWCoeffs aw_recurrence_coeffs(long n, const AWParams& p)
{
    if (n < 0) throw std::invalid_argument("aw_recurrence_coeffs: negative index");
    const Rat one(1);
    const Rat abcd = p.abcd();
    auto nonzero = [](const Rat& v, const char* what) {
        if (v.is_zero()) throw std::domain_error(std::string("aw_recurrence_coeffs: vanishing ") + what);
        return v;
    };
    AWCoeffs r;
    if (n == 0) {
        const Rat den = nonzero(p.a * (one - abcd), "denominator of b_0");
        r.b = (one - p.a * p.b) * (one - p.a * p.c) * (one - p.a * p.d) / den;
        r.c = Rat(0);
    } else {
        const Rat qn = p.q.pow(n);
        const Rat qn1 = p.q.pow(n - 1);
        const Rat bden = nonzero(p.a * (one - abcd * p.q.pow(2 * n - 1)) * (one - abcd * p.q.pow(2 * n)),
                                 "denominator of b_n");
        r.b = (one - p.a * p.b * qn) * (one - p.a * p.c * qn) * (one - p.a * p.d * qn) * (one - abcd * qn1) / bden;
        const Rat cden = nonzero((one - abcd * p.q.pow(2 * n - 2)) * (one - abcd * p.q.pow(2 * n - 1)),
                                 "denominator of c_n");
        r.c = p.a * (one - qn) * (one - p.b * p.c * qn1) * (one - p.b * p.d * qn1) * (one - p.c * p.d * qn1) / cden;
    }
    r.a = p.a + p.a.inverse() - r.b - r.c;
    return r;
}

XPoly aw_poly(long n, const AWParams& p)
{
    if (n < 0) throw std::invalid_argument("aw_poly: negative index");
    XPoly prev, cur = XPoly::constant(Rat(1));
    for (long k = 0; k < n; ++k) {
        const AWCoeffs co = aw_recurrence_coeffs(k, p);
        if (co.b.is_zero()) throw std::domain_error("aw_poly: b_" + std::to_string(k) + " vanishes");
        XPoly next = (XPoly::x() * cur - cur * co.a - prev * co.c) * co.b.inverse();
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

Rat aw_dual_eigenvalue(long n, const AWParams& p) { return p.q.pow(-n) + p.abcd() * p.q.pow(n - 1); }

Rat phi43_value(long n, const AWParams& p, const Rat& y0)
{
    if (n < 0) throw std::invalid_argument("phi43_value: negative index");
    if (y0.is_zero()) throw std::domain_error("phi43_value: y0 must be nonzero");
    const std::array<Rat, 4> upper{p.q.pow(-n), p.abcd() * p.q.pow(n - 1), p.a * y0, p.a / y0};
    const std::array<Rat, 3> lower{p.a * p.b, p.a * p.c, p.a * p.d};
    return basic_hypergeometric_sum(upper, lower, p.q, p.q, n + 1);
}

ParamSeq aw_params(const AWParams& p)
{
    const Rat diff = p.q - p.q.inverse();
    const Rat sq = diff * diff;
    return {p.q + p.q.inverse(), Rat(0), Rat(0), -sq, -p.abcd() / p.q * sq};
}

namespace {

// X^2 Y - beta X Y X + Y X^2 - gamma (X Y + Y X) - rho Y, applied to f.
XPoly relation_word(const GradedOp& x, const GradedOp& y, const Rat& beta, const Rat& gamma, const Rat& rho,
                    const XPoly& f)
{
    const XPoly yf = y(f);
    const XPoly xf = x(f);
    const XPoly xyf = x(yf);
    const XPoly yxf = y(xf);
    return x(xyf) - x(yxf) * beta + y(x(xf)) - (xyf + yxf) * gamma - yf * rho;
}

} // namespace

std::vector<XPoly> graded_td_residual(const GradedOp& a, const GradedOp& a_star, const ParamSeq& p, long n)
{
    if (n < 0) throw std::invalid_argument("graded_td_residual: negative degree");
    std::vector<XPoly> first, second;
    for (long k = 0; k <= n; ++k) {
        const XPoly f = XPoly::monomial(k);
        first.push_back(a(relation_word(a, a_star, p.beta, p.gamma, p.rho, f)) -
                        relation_word(a, a_star, p.beta, p.gamma, p.rho, a(f)));
        second.push_back(a_star(relation_word(a_star, a, p.beta, p.gamma_star, p.rho_star, f)) -
                         relation_word(a_star, a, p.beta, p.gamma_star, p.rho_star, a_star(f)));
    }
    first.insert(first.end(), second.begin(), second.end());
    return first;
}

bool all_zero(const std::vector<XPoly>& polys)
{
    for (const XPoly& f : polys) {
        if (!f.is_zero()) return false;
    }
    return true;
}

XPoly aw_omega(const AWParams& p)
{
    const GradedOp a = multiply_by_x();
    const GradedOp a_star = aw_operator(p, 2);
    const Rat diff = p.q - p.q.inverse();
    return relation_word(a, a_star, p.q + p.q.inverse(), Rat(0), -diff * diff, XPoly::constant(Rat(1)));
}

LaurentPoly tau_conjugation_residual(const LaurentPoly& f, const Rat& q, const Rat& scalar, bool inverse)
{
    LaurentPoly x = LaurentPoly::monomial(1);
    x.add_term(-1, Rat(1));
    const LaurentPoly x2 = x * x;
    auto tau = [&](const LaurentPoly& g) { return laurent_tau(g, q, inverse); };
    return x2 * tau(f) - x * tau(x * f) * (q + q.inverse()) + tau(x2 * f) + tau(f) * scalar;
}

bool tau_conjugation_identity_check(const Rat& q)
{
    if (q.is_zero() || q == Rat(1) || q == Rat(-1)) {
        throw std::domain_error("tau_conjugation_identity_check: q must not be 0, 1 or -1");
    }
    const Rat diff = q - q.inverse();
    return tau_conjugation_identity_check(q, diff * diff);
}

bool tau_conjugation_identity_check(const Rat& q, const Rat& scalar)
{
    if (q.is_zero()) throw std::domain_error("tau_conjugation_identity_check: q must be nonzero");
    for (long k = -10; k <= 10; ++k) {
        const LaurentPoly f = LaurentPoly::monomial(k);
        if (!tau_conjugation_residual(f, q, scalar, false).is_zero()) return false;
        if (!tau_conjugation_residual(f, q, scalar, true).is_zero()) return false;
    }
    return true;
}

Vec graded_coordinates(const XPoly& f, const std::vector<XPoly>& basis)
{
    if (f.degree() >= static_cast<long>(basis.size())) {
        throw std::invalid_argument("graded_coordinates: degree exceeds basis");
    }
    Vec coords(basis.size());
    XPoly rest = f;
    for (long i = f.degree(); i >= 0; --i) {
        const XPoly& b = basis[static_cast<std::size_t>(i)];
        if (b.degree() != i) throw std::invalid_argument("graded_coordinates: basis is not graded");
        const Rat c = rest.coeff(i) / b.coeff(i);
        coords[static_cast<std::size_t>(i)] = c;
        rest -= b * c;
    }
    return coords;
}

Mat truncate_to_matrix(const GradedOp& op, const std::vector<XPoly>& basis, long n)
{
    if (n < 0) throw std::invalid_argument("truncate_to_matrix: negative size");
    const long needed = n + op.growth + 1;
    if (static_cast<long>(basis.size()) < needed) {
        throw std::invalid_argument("truncate_to_matrix: basis needs " + std::to_string(needed) + " elements");
    }
    for (long i = 0; i < needed; ++i) {
        if (basis[static_cast<std::size_t>(i)].degree() != i) {
            throw std::invalid_argument("truncate_to_matrix: basis is not graded");
        }
    }
    const std::vector<XPoly> used(basis.begin(), basis.begin() + needed);
    const auto size = static_cast<std::size_t>(n + 1);
    Mat m(size, size);
    for (std::size_t j = 0; j < size; ++j) {
        const Vec coords = graded_coordinates(op(used[j]), used);
        for (std::size_t i = 0; i < size; ++i) m(i, j) = coords[i];
    }
    return m;
}

bool is_irreducible_truncation(const Mat& a, const Mat& a_star)
{
    if (!is_irreducible_tridiagonal(a) || !a_star.is_square() || a_star.rows() != a.rows()) return false;
    std::set<Rat> diagonal;
    for (std::size_t i = 0; i < a_star.rows(); ++i) {
        for (std::size_t j = 0; j < a_star.cols(); ++j) {
            if (i != j && !a_star(i, j).is_zero()) return false;
        }
        diagonal.insert(a_star(i, i));
    }
    return diagonal.size() == a_star.rows();
}

} // namespace tdkit
