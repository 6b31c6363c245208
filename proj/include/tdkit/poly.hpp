#pragma once

#include <map>
#include <optional>
#include <ostream>
#include <vector>

#include "tdkit/rat.hpp"

namespace tdkit {

/// Polynomial in x, ascending coefficients, no trailing zeros.
class XPoly {
public:
    XPoly() = default;
    explicit XPoly(std::vector<Rat> coeffs);

    static XPoly constant(const Rat& c);
    static XPoly x();
    static XPoly monomial(long degree, const Rat& c = Rat(1));

    /// -1 for the zero polynomial.
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    const std::vector<Rat>& coeffs() const { return coeffs_; }
    /// Zero outside the stored range.
    Rat coeff(long i) const;

    Rat eval(const Rat& x) const;

    XPoly& operator+=(const XPoly& rhs);
    XPoly& operator-=(const XPoly& rhs);
    XPoly& operator*=(const Rat& s);

    friend XPoly operator+(XPoly a, const XPoly& b) { return a += b; }
    friend XPoly operator-(XPoly a, const XPoly& b) { return a -= b; }
    friend XPoly operator*(XPoly a, const Rat& s) { return a *= s; }
    friend XPoly operator*(const Rat& s, XPoly a) { return a *= s; }
    friend XPoly operator*(const XPoly& a, const XPoly& b);
    XPoly operator-() const;

    friend bool operator==(const XPoly&, const XPoly&) = default;

private:
    void trim();
    std::vector<Rat> coeffs_;
};

XPoly derivative(const XPoly& f);
std::ostream& operator<<(std::ostream& os, const XPoly& f);

/// Laurent polynomial in y; only nonzero coefficients are stored.
class LaurentPoly {
public:
    LaurentPoly() = default;
    static LaurentPoly monomial(long exponent, const Rat& c = Rat(1));

    const std::map<long, Rat>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Rat coeff(long exponent) const;
    /// Requires a nonzero polynomial.
    long min_exponent() const;
    long max_exponent() const;

    void add_term(long exponent, const Rat& c);
    /// Invariant under y -> 1/y.
    bool is_symmetric() const;
    /// f(1/y).
    LaurentPoly reflected() const;
    /// f(s y).
    LaurentPoly scaled(const Rat& s) const;

    LaurentPoly& operator+=(const LaurentPoly& rhs);
    LaurentPoly& operator-=(const LaurentPoly& rhs);
    LaurentPoly& operator*=(const Rat& s);

    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(LaurentPoly a, const Rat& s) { return a *= s; }
    friend LaurentPoly operator*(const Rat& s, LaurentPoly a) { return a *= s; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);

    friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

private:
    std::map<long, Rat> terms_;
};

std::ostream& operator<<(std::ostream& os, const LaurentPoly& f);

/// y -> q y, or y -> y/q when inverse. Throws std::domain_error for q == 0.
LaurentPoly laurent_tau(const LaurentPoly& f, const Rat& q, bool inverse = false);

/// Exact quotient num / den in the Laurent ring, or nullopt when den does not
/// divide num. Throws std::domain_error for den == 0.
std::optional<LaurentPoly> laurent_exact_div(const LaurentPoly& num, const LaurentPoly& den);

/// Substitutes x = y + 1/y.
LaurentPoly x_to_laurent(const XPoly& f);

/// Inverse of x_to_laurent on symmetric Laurent polynomials. Throws
/// std::invalid_argument when g is not invariant under y -> 1/y.
XPoly symmetric_laurent_to_x(const LaurentPoly& g);

} // namespace tdkit
