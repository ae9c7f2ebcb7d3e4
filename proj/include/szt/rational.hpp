// Exact rationals: the element type of every set in the library.

#ifndef SZT_RATIONAL_HPP
#define SZT_RATIONAL_HPP

#include <gmpxx.h>

#include <cmath>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <ostream>
#include <string>
#include <string_view>

#include "szt/error.hpp"

namespace szt
{

/// Arbitrary-precision rational kept in canonical form (den > 0, gcd = 1).
class Rational
{
public:
    Rational() = default;
    Rational(long v) : m_value(v) {}
    Rational(int v) : m_value(static_cast<long>(v)) {}
    explicit Rational(const mpz_class &v) : m_value(v) {}
    explicit Rational(mpq_class v) : m_value(std::move(v))
    {
        m_value.canonicalize();
    }
    Rational(const mpz_class &num, const mpz_class &den)
    {
        if (den == 0) {
            throw ParseError("zero denominator");
        }
        m_value = mpq_class(num, den);
        m_value.canonicalize();
    }

    /// Parses "p" or "p/q" (q > 0), surrounding blanks allowed.
    static Rational parse(std::string_view text)
    {
        auto trim = [](std::string_view s) {
            while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) {
                s.remove_prefix(1);
            }
            while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
                s.remove_suffix(1);
            }
            return s;
        };
        auto parse_int = [](std::string_view s, bool allow_sign) {
            if (s.empty()) {
                throw ParseError("empty integer literal");
            }
            std::size_t i = 0;
            if (allow_sign && (s[0] == '-' || s[0] == '+')) {
                i = 1;
            }
            if (i == s.size()) {
                throw ParseError("bad integer literal '" + std::string(s) + "'");
            }
            for (std::size_t j = i; j < s.size(); ++j) {
                if (s[j] < '0' || s[j] > '9') {
                    throw ParseError("bad integer literal '" + std::string(s) + "'");
                }
            }
            std::string digits(s[0] == '+' ? s.substr(1) : s);
            return mpz_class(digits, 10);
        };
        text = trim(text);
        const auto slash = text.find('/');
        if (slash == std::string_view::npos) {
            return Rational(parse_int(text, true));
        }
        const mpz_class num = parse_int(trim(text.substr(0, slash)), true);
        const auto den_text = trim(text.substr(slash + 1));
        if (!den_text.empty() && (den_text[0] == '-' || den_text[0] == '+')) {
            throw ParseError("denominator must be a positive integer literal");
        }
        const mpz_class den = parse_int(den_text, false);
        if (den == 0) {
            throw ParseError("zero denominator");
        }
        return Rational(num, den);
    }

    [[nodiscard]] std::string to_string() const
    {
        if (is_integer()) {
            return m_value.get_num().get_str();
        }
        return m_value.get_num().get_str() + "/" + m_value.get_den().get_str();
    }

    [[nodiscard]] const mpq_class &value() const noexcept { return m_value; }
    [[nodiscard]] mpz_class numerator() const { return m_value.get_num(); }
    [[nodiscard]] mpz_class denominator() const { return m_value.get_den(); }
    [[nodiscard]] bool is_integer() const { return m_value.get_den() == 1; }
    [[nodiscard]] int sign() const { return sgn(m_value); }
    [[nodiscard]] double to_double() const { return m_value.get_d(); }

    Rational operator-() const { return Rational(mpq_class(-m_value)); }
    friend Rational operator+(const Rational &a, const Rational &b) { return Rational(mpq_class(a.m_value + b.m_value)); }
    friend Rational operator-(const Rational &a, const Rational &b) { return Rational(mpq_class(a.m_value - b.m_value)); }
    friend Rational operator*(const Rational &a, const Rational &b) { return Rational(mpq_class(a.m_value * b.m_value)); }
    friend Rational operator/(const Rational &a, const Rational &b)
    {
        if (b.sign() == 0) {
            throw PreconditionError("division by zero");
        }
        return Rational(mpq_class(a.m_value / b.m_value));
    }
    Rational &operator+=(const Rational &o)
    {
        m_value += o.m_value;
        return *this;
    }
    Rational &operator-=(const Rational &o)
    {
        m_value -= o.m_value;
        return *this;
    }

    friend bool operator==(const Rational &a, const Rational &b) { return cmp(a.m_value, b.m_value) == 0; }
    friend std::strong_ordering operator<=>(const Rational &a, const Rational &b)
    {
        const int c = cmp(a.m_value, b.m_value);
        return c < 0 ? std::strong_ordering::less : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    friend std::ostream &operator<<(std::ostream &os, const Rational &r) { return os << r.to_string(); }

    [[nodiscard]] std::size_t hash() const noexcept
    {
        std::size_t h = hash_mpz(m_value.get_num_mpz_t());
        h ^= hash_mpz(m_value.get_den_mpz_t()) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        return h;
    }

private:
    static std::size_t hash_mpz(mpz_srcptr z) noexcept
    {
        const auto n = mpz_size(z);
        std::uint64_t h = 0xcbf29ce484222325ULL ^ static_cast<std::uint64_t>(mpz_sgn(z) + 1);
        for (std::size_t i = 0; i < n; ++i) {
            h ^= static_cast<std::uint64_t>(mpz_getlimbn(z, static_cast<mp_size_t>(i)));
            h *= 0x100000001b3ULL;
            h ^= h >> 29;
        }
        return static_cast<std::size_t>(h);
    }

    mpq_class m_value;
};

struct RationalHash {
    std::size_t operator()(const Rational &r) const noexcept { return r.hash(); }
};

/// Base-2 logarithm of a positive big integer, accurate for values far beyond double range.
inline long double log2_of(const mpz_class &v)
{
    if (v <= 0) {
        throw PreconditionError("log2 of a nonpositive integer");
    }
    long exp = 0;
    const double mant = mpz_get_d_2exp(&exp, v.get_mpz_t());
    return std::log2(static_cast<long double>(mant)) + static_cast<long double>(exp);
}

} // namespace szt

#endif
