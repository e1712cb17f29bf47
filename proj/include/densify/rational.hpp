#ifndef DENSIFY_RATIONAL_HPP
#define DENSIFY_RATIONAL_HPP

#include <compare>
#include <cstdint>
#include <limits>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>

namespace densify {

/// Exact fraction num/den over 64-bit integers.
///
/// Always kept in lowest terms with den > 0. Intermediate products are
/// formed in 128 bits; a result that does not fit back into 64 bits throws
/// std::overflow_error instead of wrapping. Comparisons cross-multiply in
/// 128 bits and are therefore exact for every representable value.
class Rational {
public:
    using int_type = std::int64_t;

    constexpr Rational() noexcept = default;
    constexpr Rational(int_type value) noexcept : num_(value) {}  // NOLINT(implicit)
    Rational(int_type num, int_type den) { assign(num, den); }

    [[nodiscard]] constexpr int_type num() const noexcept { return num_; }
    [[nodiscard]] constexpr int_type den() const noexcept { return den_; }

    [[nodiscard]] double to_double() const noexcept {
        return static_cast<double>(num_) / static_cast<double>(den_);
    }

    /// "p/q", or "p" when the denominator is 1.
    [[nodiscard]] std::string to_string() const {
        if (den_ == 1) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

    /// Decimal rendering with `places` fractional digits, rounded half-up
    /// (half away from zero for negative values). Computed exactly.
    [[nodiscard]] std::string to_decimal(int places) const {
        __int128 scale = 1;
        for (int i = 0; i < places; ++i) scale *= 10;
        const bool negative = num_ < 0;
        const __int128 a = negative ? -static_cast<__int128>(num_) : num_;
        const __int128 scaled = (a * scale * 2 + den_) / (2 * static_cast<__int128>(den_));
        const auto whole = static_cast<unsigned long long>(scaled / scale);
        auto frac = static_cast<unsigned long long>(scaled % scale);
        std::string out = negative && scaled != 0 ? "-" : "";
        out += std::to_string(whole);
        if (places > 0) {
            std::string digits(static_cast<std::size_t>(places), '0');
            for (int i = places - 1; i >= 0; --i) {
                digits[static_cast<std::size_t>(i)] = static_cast<char>('0' + frac % 10);
                frac /= 10;
            }
            out += "." + digits;
        }
        return out;
    }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return from_wide(static_cast<__int128>(a.num_) * b.den_ + static_cast<__int128>(b.num_) * a.den_,
                         static_cast<__int128>(a.den_) * b.den_);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return from_wide(static_cast<__int128>(a.num_) * b.den_ - static_cast<__int128>(b.num_) * a.den_,
                         static_cast<__int128>(a.den_) * b.den_);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return from_wide(static_cast<__int128>(a.num_) * b.num_, static_cast<__int128>(a.den_) * b.den_);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_ == 0) throw std::domain_error("rational division by zero");
        return from_wide(static_cast<__int128>(a.num_) * b.den_, static_cast<__int128>(a.den_) * b.num_);
    }
    Rational operator-() const { return from_wide(-static_cast<__int128>(num_), den_); }

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    friend bool operator==(const Rational& a, const Rational& b) noexcept {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) noexcept {
        const __int128 lhs = static_cast<__int128>(a.num_) * b.den_;
        const __int128 rhs = static_cast<__int128>(b.num_) * a.den_;
        if (lhs < rhs) return std::strong_ordering::less;
        if (lhs > rhs) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

private:
    void assign(int_type num, int_type den) { *this = from_wide(num, den); }

    static Rational from_wide(__int128 num, __int128 den) {
        if (den == 0) throw std::domain_error("rational with zero denominator");
        if (den < 0) {
            num = -num;
            den = -den;
        }
        const __int128 g = gcd_wide(num < 0 ? -num : num, den);
        num /= g;
        den /= g;
        constexpr auto lo = static_cast<__int128>(std::numeric_limits<int_type>::min());
        constexpr auto hi = static_cast<__int128>(std::numeric_limits<int_type>::max());
        if (num < lo || num > hi || den > hi) throw std::overflow_error("rational overflow");
        Rational r;
        r.num_ = static_cast<int_type>(num);
        r.den_ = static_cast<int_type>(den);
        return r;
    }

    static __int128 gcd_wide(__int128 a, __int128 b) noexcept {
        while (b != 0) {
            const __int128 t = a % b;
            a = b;
            b = t;
        }
        return a == 0 ? 1 : a;
    }

    int_type num_ = 0;
    int_type den_ = 1;
};

}  // namespace densify

#endif  // DENSIFY_RATIONAL_HPP
