#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace fibword {

namespace detail {

using int128 = __int128;

constexpr int128 abs128(int128 v) { return v < 0 ? -v : v; }

constexpr int128 gcd128(int128 a, int128 b) {
    a = abs128(a);
    b = abs128(b);
    while (b != 0) {
        int128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

constexpr std::int64_t narrow_checked(int128 v) {
    if (v > int128(std::numeric_limits<std::int64_t>::max()) ||
        v < int128(std::numeric_limits<std::int64_t>::min()))
        throw std::overflow_error("rational arithmetic overflow");
    return static_cast<std::int64_t>(v);
}

}  // namespace detail

// Exact rational on 64-bit components, always normalized (gcd 1, positive
// denominator). Intermediates run in 128 bits; a value that cannot be
// normalized back into 64 bits throws instead of silently wrapping.
class Rational {
  public:
    constexpr Rational() = default;

    constexpr Rational(std::int64_t num, std::int64_t den) {
        assign(detail::int128(num), detail::int128(den));
    }

    constexpr std::int64_t num() const { return num_; }
    constexpr std::int64_t den() const { return den_; }

    constexpr bool is_zero() const { return num_ == 0; }

    constexpr Rational abs() const {
        return num_ < 0 ? from128(-detail::int128(num_), den_) : *this;
    }

    friend constexpr Rational operator+(const Rational& a, const Rational& b) {
        return from128(detail::int128(a.num_) * b.den_ +
                           detail::int128(b.num_) * a.den_,
                       detail::int128(a.den_) * b.den_);
    }
    friend constexpr Rational operator-(const Rational& a, const Rational& b) {
        return from128(detail::int128(a.num_) * b.den_ -
                           detail::int128(b.num_) * a.den_,
                       detail::int128(a.den_) * b.den_);
    }
    friend constexpr Rational operator*(const Rational& a, const Rational& b) {
        return from128(detail::int128(a.num_) * b.num_,
                       detail::int128(a.den_) * b.den_);
    }
    friend constexpr Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_ == 0) throw std::domain_error("rational division by zero");
        return from128(detail::int128(a.num_) * b.den_,
                       detail::int128(a.den_) * b.num_);
    }
    constexpr Rational operator-() const {
        return from128(-detail::int128(num_), den_);
    }

    friend constexpr bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend constexpr bool operator<(const Rational& a, const Rational& b) {
        return detail::int128(a.num_) * b.den_ <
               detail::int128(b.num_) * a.den_;
    }
    friend constexpr bool operator<=(const Rational& a, const Rational& b) {
        return detail::int128(a.num_) * b.den_ <=
               detail::int128(b.num_) * a.den_;
    }
    friend constexpr bool operator>(const Rational& a, const Rational& b) {
        return b < a;
    }
    friend constexpr bool operator>=(const Rational& a, const Rational& b) {
        return b <= a;
    }

    std::string to_string() const {
        if (den_ == 1) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

    long double to_long_double() const {
        return static_cast<long double>(num_) / static_cast<long double>(den_);
    }

  private:
    static constexpr Rational from128(detail::int128 n, detail::int128 d) {
        Rational r;
        r.assign(n, d);
        return r;
    }

    constexpr void assign(detail::int128 n, detail::int128 d) {
        if (d == 0)
            throw std::invalid_argument("rational with zero denominator");
        if (d < 0) {
            n = -n;
            d = -d;
        }
        detail::int128 g = detail::gcd128(n, d);
        if (g > 1) {
            n /= g;
            d /= g;
        }
        num_ = detail::narrow_checked(n);
        den_ = detail::narrow_checked(d);
    }

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

// Fixed 4-decimal rendering, round half to even. This is the only place
// rationals become decimal text; no binary floating point is involved.
inline std::string render_fixed4(const Rational& r) {
    const bool neg = r.num() < 0;
    using detail::int128;
    unsigned __int128 n = static_cast<unsigned __int128>(
        neg ? -int128(r.num()) : int128(r.num()));
    const unsigned __int128 d = static_cast<unsigned __int128>(r.den());
    unsigned __int128 scaled = n * 10000;
    unsigned __int128 q = scaled / d;
    const unsigned __int128 rem = scaled % d;
    if (2 * rem > d || (2 * rem == d && (q & 1)))
        ++q;
    const std::uint64_t whole = static_cast<std::uint64_t>(q / 10000);
    const std::uint64_t frac = static_cast<std::uint64_t>(q % 10000);
    std::string out;
    if (neg && q != 0) out += '-';
    out += std::to_string(whole);
    out += '.';
    std::string f = std::to_string(frac);
    out.append(4 - f.size(), '0');
    out += f;
    return out;
}

}  // namespace fibword
