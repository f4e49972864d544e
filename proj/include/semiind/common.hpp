#ifndef SEMIIND_COMMON_HPP
#define SEMIIND_COMMON_HPP

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

namespace semiind {

enum class Colour : std::uint8_t { Blue = 0, Red = 1 };

inline Colour other(Colour c) { return c == Colour::Red ? Colour::Blue : Colour::Red; }
inline char colour_char(Colour c) { return c == Colour::Red ? 'R' : 'B'; }

inline Colour colour_from_char(char ch)
{
    if (ch == 'R' || ch == 'r')
        return Colour::Red;
    if (ch == 'B' || ch == 'b')
        return Colour::Blue;
    throw std::invalid_argument(std::string("bad colour character '") + ch + "'");
}

// Walk counts outgrow 64 bits quickly (n = 400, t = 6 already does).
using Count = unsigned __int128;
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_string(Count v)
{
    if (v == 0)
        return "0";
    std::string s;
    while (v > 0) {
        s.insert(s.begin(), char('0' + int(v % 10)));
        v /= 10;
    }
    return s;
}

inline BigInt to_big(Count v)
{
    BigInt hi = static_cast<std::uint64_t>(v >> 64);
    return (hi << 64) + static_cast<std::uint64_t>(v);
}

inline double to_double(Count v) { return static_cast<double>(v); }

inline double to_double(const Rational & q) { return q.convert_to<double>(); }

inline std::string to_string(const Rational & q)
{
    if (denominator(q) == 1)
        return numerator(q).str();
    return numerator(q).str() + "/" + denominator(q).str();
}

// Accepts "a/b", plain integers and plain decimals ("0.75", "-1.5e-3" is not supported).
// BigInt(string) reads a leading 0 as an octal prefix, so decimal digit strings go through here.
inline BigInt decimal_int(std::string digits)
{
    bool neg = ! digits.empty() && digits[0] == '-';
    if (neg)
        digits.erase(0, 1);
    auto first = digits.find_first_not_of('0');
    digits = first == std::string::npos ? "0" : digits.substr(first);
    BigInt v(digits);
    return neg ? BigInt(-v) : v;
}

inline Rational parse_rational(const std::string & text)
{
    auto bad = [&] { return std::invalid_argument("not a rational number: '" + text + "'"); };
    if (text.empty())
        throw bad();
    if (auto slash = text.find('/'); slash != std::string::npos) {
        auto num = text.substr(0, slash), den = text.substr(slash + 1);
        if (num.empty() || den.empty() || num.find_first_not_of("-0123456789") != std::string::npos
            || den.find_first_not_of("0123456789") != std::string::npos || num.find('-', 1) != std::string::npos
            || num == "-")
            throw bad();
        BigInt d = decimal_int(den);
        if (d == 0)
            throw bad();
        return Rational(decimal_int(num), d);
    }
    std::string digits;
    BigInt scale = 1;
    bool seen_dot = false, neg = false;
    for (std::size_t i = 0; i < text.size(); ++i) {
        char c = text[i];
        if (c == '-' && i == 0)
            neg = true;
        else if (c == '+' && i == 0)
            continue;
        else if (c == '.' && ! seen_dot)
            seen_dot = true;
        else if (c >= '0' && c <= '9') {
            digits += c;
            if (seen_dot)
                scale *= 10;
        }
        else
            throw bad();
    }
    if (digits.empty())
        throw bad();
    Rational q(decimal_int(digits), scale);
    return neg ? Rational(-q) : q;
}

inline int popcount(std::uint64_t w) { return std::popcount(w); }

// Index of the unordered pair {x, y}, x != y, in row-major upper-triangular order.
inline std::size_t pair_index(int n, int x, int y)
{
    if (x > y)
        std::swap(x, y);
    return std::size_t(x) * (2 * std::size_t(n) - std::size_t(x) - 1) / 2 + std::size_t(y - x - 1);
}

inline std::uint64_t choose2(std::uint64_t k) { return k < 2 ? 0 : k * (k - 1) / 2; }

inline BigInt binomial(long long n, long long k)
{
    if (k < 0 || n < 0 || k > n)
        return 0;
    BigInt r = 1;
    for (long long i = 1; i <= k; ++i)
        r = r * (n - k + i) / i;
    return r;
}

inline BigInt falling(long long n, long long k)
{
    if (k > n || n < 0)
        return 0;
    BigInt r = 1;
    for (long long i = 0; i < k; ++i)
        r *= (n - i);
    return r;
}

}

#endif
