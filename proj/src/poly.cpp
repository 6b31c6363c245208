#include "tdkit/poly.hpp"

#include <stdexcept>

namespace tdkit {

XPoly::XPoly(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

XPoly XPoly::constant(const Rat& c) { return XPoly({c}); }

XPoly XPoly::x() { return XPoly({Rat(0), Rat(1)}); }

XPoly XPoly::monomial(long degree, const Rat& c)
{
    if (degree < 0) throw std::invalid_argument("XPoly::monomial: negative degree");
    std::vector<Rat> v(static_cast<std::size_t>(degree) + 1);
    v.back() = c;
    return XPoly(std::move(v));
}

void XPoly::trim()
{
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Rat XPoly::coeff(long i) const
{
    if (i < 0 || i > degree()) return Rat(0);
    return coeffs_[static_cast<std::size_t>(i)];
}

Rat XPoly::eval(const Rat& x) const
{
    Rat acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

XPoly& XPoly::operator+=(const XPoly& rhs)
{
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    trim();
    return *this;
}

XPoly& XPoly::operator-=(const XPoly& rhs)
{
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    trim();
    return *this;
}

XPoly& XPoly::operator*=(const Rat& s)
{
    for (Rat& c : coeffs_) c *= s;
    trim();
    return *this;
}

XPoly operator*(const XPoly& a, const XPoly& b)
{
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rat> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return XPoly(std::move(out));
}

XPoly XPoly::operator-() const
{
    XPoly r = *this;
    for (Rat& c : r.coeffs_) c = -c;
    return r;
}

XPoly derivative(const XPoly& f)
{
    if (f.degree() < 1) return {};
    std::vector<Rat> out(static_cast<std::size_t>(f.degree()));
    for (long i = 1; i <= f.degree(); ++i) out[static_cast<std::size_t>(i - 1)] = f.coeff(i) * Rat(i);
    return XPoly(std::move(out));
}

std::ostream& operator<<(std::ostream& os, const XPoly& f)
{
    if (f.is_zero()) return os << '0';
    bool first = true;
    for (long i = f.degree(); i >= 0; --i) {
        const Rat c = f.coeff(i);
        if (c.is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        os << c;
        if (i >= 1) os << "*x";
        if (i > 1) os << '^' << i;
    }
    return os;
}

LaurentPoly LaurentPoly::monomial(long exponent, const Rat& c)
{
    LaurentPoly p;
    p.add_term(exponent, c);
    return p;
}

Rat LaurentPoly::coeff(long exponent) const
{
    const auto it = terms_.find(exponent);
    return it == terms_.end() ? Rat(0) : it->second;
}

long LaurentPoly::min_exponent() const
{
    if (terms_.empty()) throw std::logic_error("LaurentPoly::min_exponent of zero");
    return terms_.begin()->first;
}

long LaurentPoly::max_exponent() const
{
    if (terms_.empty()) throw std::logic_error("LaurentPoly::max_exponent of zero");
    return terms_.rbegin()->first;
}

void LaurentPoly::add_term(long exponent, const Rat& c)
{
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(exponent, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

bool LaurentPoly::is_symmetric() const { return reflected() == *this; }

LaurentPoly LaurentPoly::reflected() const
{
    LaurentPoly r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(-e, c);
    return r;
}

LaurentPoly LaurentPoly::scaled(const Rat& s) const
{
    LaurentPoly r;
    for (const auto& [e, c] : terms_) r.add_term(e, c * s.pow(e));
    return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs)
{
    for (const auto& [e, c] : rhs.terms_) add_term(e, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs)
{
    for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
    return *this;
}

LaurentPoly& LaurentPoly::operator*=(const Rat& s)
{
    if (s.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, c] : terms_) c *= s;
    return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b)
{
    LaurentPoly r;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
    return r;
}

std::ostream& operator<<(std::ostream& os, const LaurentPoly& f)
{
    if (f.is_zero()) return os << '0';
    bool first = true;
    for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
        if (!first) os << " + ";
        first = false;
        os << it->second;
        if (it->first != 0) os << "*y^" << it->first;
    }
    return os;
}

LaurentPoly laurent_tau(const LaurentPoly& f, const Rat& q, bool inverse)
{
    if (q.is_zero()) throw std::domain_error("laurent_tau: q must be nonzero");
    return f.scaled(inverse ? q.inverse() : q);
}

std::optional<LaurentPoly> laurent_exact_div(const LaurentPoly& num, const LaurentPoly& den)
{
    if (den.is_zero()) throw std::domain_error("laurent_exact_div: division by zero");
    if (num.is_zero()) return LaurentPoly{};
    // y is a unit, so shift both to ordinary polynomials with nonzero constant
    // term and divide from the top.
    const long shift = num.min_exponent() - den.min_exponent();
    std::vector<Rat> n(static_cast<std::size_t>(num.max_exponent() - num.min_exponent()) + 1);
    std::vector<Rat> d(static_cast<std::size_t>(den.max_exponent() - den.min_exponent()) + 1);
    for (const auto& [e, c] : num.terms()) n[static_cast<std::size_t>(e - num.min_exponent())] = c;
    for (const auto& [e, c] : den.terms()) d[static_cast<std::size_t>(e - den.min_exponent())] = c;
    if (n.size() < d.size()) return std::nullopt;

    LaurentPoly q;
    const Rat lead = d.back();
    for (std::size_t top = n.size(); top >= d.size(); --top) {
        const Rat c = n[top - 1] / lead;
        if (!c.is_zero()) {
            const std::size_t pos = top - d.size();
            for (std::size_t k = 0; k < d.size(); ++k) n[pos + k] -= c * d[k];
            q.add_term(static_cast<long>(pos) + shift, c);
        }
    }
    for (std::size_t k = 0; k + 1 < d.size(); ++k) {
        if (!n[k].is_zero()) return std::nullopt;
    }
    return q;
}

LaurentPoly x_to_laurent(const XPoly& f)
{
    LaurentPoly x;
    x.add_term(1, Rat(1));
    x.add_term(-1, Rat(1));
    LaurentPoly acc;
    for (long i = f.degree(); i >= 0; --i) acc = acc * x + LaurentPoly::monomial(0, f.coeff(i));
    return acc;
}

XPoly symmetric_laurent_to_x(const LaurentPoly& g)
{
    if (!g.is_symmetric()) throw std::invalid_argument("symmetric_laurent_to_x: input is not symmetric");
    // Peel the top exponent with (y + 1/y)^n, which leads with y^n.
    LaurentPoly rest = g;
    XPoly out;
    while (!rest.is_zero()) {
        const long n = rest.max_exponent();
        const Rat c = rest.coeff(n);
        const XPoly term = XPoly::monomial(n, c);
        out += term;
        rest -= x_to_laurent(term);
    }
    return out;
}

} // namespace tdkit
