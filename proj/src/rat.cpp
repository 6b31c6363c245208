#include "tdkit/rat.hpp"

#include <cctype>
#include <stdexcept>

namespace tdkit {

namespace {

bool all_digits(std::string_view s)
{
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

} // namespace

Rat::Rat(const mpz_class& num, const mpz_class& den)
{
    if (den == 0) throw std::domain_error("rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rat Rat::parse(std::string_view text)
{
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && body.front() == '-') {
        negative = true;
        body.remove_prefix(1);
    }
    const auto slash = body.find('/');
    const std::string_view num_part = body.substr(0, slash);
    const std::string_view den_part =
        slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
    if (!all_digits(num_part) || !all_digits(den_part)) {
        throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
    }
    mpz_class num(std::string(num_part), 10);
    const mpz_class den(std::string(den_part), 10);
    if (negative) num = -num;
    return Rat(num, den);
}

std::string Rat::str() const
{
    if (is_integer()) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rat Rat::abs() const
{
    Rat r;
    r.v_ = ::abs(v_);
    return r;
}

Rat Rat::inverse() const
{
    if (is_zero()) throw std::domain_error("inverse of zero");
    Rat r;
    mpq_inv(r.v_.get_mpq_t(), v_.get_mpq_t());
    return r;
}

Rat Rat::pow(long exponent) const
{
    if (exponent < 0) return inverse().pow(-exponent);
    Rat base = *this;
    Rat result(1);
    unsigned long e = static_cast<unsigned long>(exponent);
    while (e != 0) {
        if (e & 1UL) result *= base;
        e >>= 1;
        if (e != 0) base *= base;
    }
    return result;
}

Rat Rat::operator-() const
{
    Rat r;
    r.v_ = -v_;
    return r;
}

Rat& Rat::operator+=(const Rat& rhs)
{
    v_ += rhs.v_;
    return *this;
}

Rat& Rat::operator-=(const Rat& rhs)
{
    v_ -= rhs.v_;
    return *this;
}

Rat& Rat::operator*=(const Rat& rhs)
{
    v_ *= rhs.v_;
    return *this;
}

Rat& Rat::operator/=(const Rat& rhs)
{
    if (rhs.is_zero()) throw std::domain_error("division by zero");
    v_ /= rhs.v_;
    return *this;
}

std::ostream& operator<<(std::ostream& os, const Rat& r)
{
    return os << r.str();
}

std::optional<Rat> exact_sqrt(const Rat& r)
{
    if (r.sign() < 0) return std::nullopt;
    const mpz_class num = r.numerator();
    const mpz_class den = r.denominator();
    if (mpz_perfect_square_p(num.get_mpz_t()) == 0 || mpz_perfect_square_p(den.get_mpz_t()) == 0) {
        return std::nullopt;
    }
    mpz_class sn, sd;
    mpz_sqrt(sn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(sd.get_mpz_t(), den.get_mpz_t());
    return Rat(sn, sd);
}

} // namespace tdkit
