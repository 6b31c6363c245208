#pragma once

#include <compare>
#include <concepts>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace tdkit {

/// Exact rational number. Always stored in lowest terms with a positive
/// denominator.
class Rat {
public:
    Rat() = default;

    template <std::signed_integral I>
    Rat(I value) : v_(static_cast<long>(value)) {}

    template <std::unsigned_integral I>
    Rat(I value) : v_(static_cast<unsigned long>(value)) {}

    explicit Rat(const mpz_class& integer) : v_(integer) {}

    /// Throws std::domain_error on a zero denominator.
    Rat(const mpz_class& num, const mpz_class& den);

    /// Parses `[-]digits` or `[-]digits/digits`.
    /// Throws std::invalid_argument on malformed text, std::domain_error on a
    /// zero denominator.
    static Rat parse(std::string_view text);

    /// `p/q`, or `p` when the denominator is 1.
    std::string str() const;

    mpz_class numerator() const { return v_.get_num(); }
    mpz_class denominator() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    Rat abs() const;
    /// Throws std::domain_error for zero.
    Rat inverse() const;
    /// Integer power; negative exponents invert. 0^e for e <= 0 throws unless e == 0.
    Rat pow(long exponent) const;

    Rat operator-() const;
    Rat& operator+=(const Rat& rhs);
    Rat& operator-=(const Rat& rhs);
    Rat& operator*=(const Rat& rhs);
    Rat& operator/=(const Rat& rhs);

    friend Rat operator+(Rat lhs, const Rat& rhs) { return lhs += rhs; }
    friend Rat operator-(Rat lhs, const Rat& rhs) { return lhs -= rhs; }
    friend Rat operator*(Rat lhs, const Rat& rhs) { return lhs *= rhs; }
    friend Rat operator/(Rat lhs, const Rat& rhs) { return lhs /= rhs; }

    friend bool operator==(const Rat& a, const Rat& b) { return cmp(a.v_, b.v_) == 0; }
    friend std::strong_ordering operator<=>(const Rat& a, const Rat& b)
    {
        const int c = cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    const mpq_class& raw() const { return v_; }

private:
    mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rat& r);

/// Exact square root when r is the square of a rational.
std::optional<Rat> exact_sqrt(const Rat& r);

} // namespace tdkit
