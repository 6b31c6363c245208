#include "tdkit/special.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace tdkit {

Rat q_bracket(long i, const Rat& p)
{
    if (p.is_zero() || p == Rat(1) || p == Rat(-1)) {
        throw std::domain_error("q_bracket: p must avoid 0, 1, -1");
    }
    return (p.pow(i) - p.pow(-i)) / (p - p.inverse());
}

Rat hyp2f1_z2(long i, long j, long d)
{
    if (d < 1 || i < 0 || j < 0 || i > d || j > d) {
        throw std::invalid_argument("hyp2f1_z2: need 0 <= i, j <= d, d >= 1");
    }
    // Ratio of consecutive terms: (k - i)(k - j) * 2 / ((k - d)(k + 1)).
    Rat term(1);
    Rat sum(1);
    for (long k = 0; k < std::min(i, j); ++k) {
        term *= Rat((k - i) * (k - j) * 2) / Rat((k - d) * (k + 1));
        sum += term;
    }
    return sum;
}

Rat q_pochhammer(const Rat& a, const Rat& q, long n)
{
    if (n < 0) throw std::invalid_argument("q_pochhammer: negative length");
    Rat result(1);
    Rat aqk = a;
    for (long k = 0; k < n; ++k) {
        result *= Rat(1) - aqk;
        aqk *= q;
    }
    return result;
}

Rat pochhammer(const Rat& a, long n)
{
    if (n < 0) throw std::invalid_argument("pochhammer: negative length");
    Rat result(1);
    for (long k = 0; k < n; ++k) result *= a + Rat(k);
    return result;
}

Rat binomial(long n, long k)
{
    if (k < 0 || k > n) return Rat(0);
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return Rat(r);
}

Rat hypergeometric_sum(std::span<const Rat> upper, std::span<const Rat> lower, const Rat& z,
                       long terms)
{
    Rat sum(0);
    Rat term(1);
    for (long k = 0; k < terms; ++k) {
        if (k > 0) {
            Rat num(1), den(k);
            for (const Rat& a : upper) num *= a + Rat(k - 1);
            for (const Rat& b : lower) den *= b + Rat(k - 1);
            if (den.is_zero()) {
                if (num.is_zero()) break;
                throw std::domain_error("hypergeometric_sum: vanishing lower parameter");
            }
            term *= num * z / den;
        }
        sum += term;
        if (term.is_zero()) break;
    }
    return sum;
}

Rat basic_hypergeometric_sum(std::span<const Rat> upper, std::span<const Rat> lower, const Rat& q,
                             const Rat& z, long terms)
{
    Rat sum(0);
    Rat term(1);
    Rat qk(1); // q^(k-1) while building term k
    for (long k = 0; k < terms; ++k) {
        if (k > 0) {
            Rat num(1);
            Rat den = Rat(1) - q * qk;
            for (const Rat& a : upper) num *= Rat(1) - a * qk;
            for (const Rat& b : lower) den *= Rat(1) - b * qk;
            if (den.is_zero()) {
                if (num.is_zero()) break;
                throw std::domain_error("basic_hypergeometric_sum: vanishing lower q-Pochhammer");
            }
            term *= num * z / den;
            qk *= q;
        }
        sum += term;
        if (term.is_zero()) break;
    }
    return sum;
}

} // namespace tdkit
