#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace fracns {

/// Exact rational arithmetic for the index bookkeeping of the admissibility
/// checks. All spec-level parameters (alpha, beta, p0, p1, gamma) are simple
/// fractions, so derived indices stay exact and open-interval boundaries can
/// be rejected without tolerance games.
class Rat {
public:
    Rat() : num_(0), den_(1) {}
    Rat(std::int64_t n) : num_(n), den_(1) {}
    Rat(std::int64_t n, std::int64_t d) : num_(n), den_(d) { normalize(); }

    /// Parses "3", "-7/5", "2.9", "0.333". Finite decimal strings are exact.
    static Rat parse(const std::string& s);

    /// Snaps a double to the nearest simple fraction (continued-fraction
    /// expansion, denominators up to 10^9). Doubles that originate from
    /// simple fractions round-trip; anything else is quantized and the
    /// caller sees the 1e-12 slack in comparisons.
    static Rat from_double(double x);

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }
    double value() const { return static_cast<double>(num_) / static_cast<double>(den_); }
    std::string str() const {
        return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
    }

    friend Rat operator+(const Rat& a, const Rat& b) {
        return Rat::make(i128(a.num_) * b.den_ + i128(b.num_) * a.den_, i128(a.den_) * b.den_);
    }
    friend Rat operator-(const Rat& a, const Rat& b) {
        return Rat::make(i128(a.num_) * b.den_ - i128(b.num_) * a.den_, i128(a.den_) * b.den_);
    }
    friend Rat operator*(const Rat& a, const Rat& b) {
        return Rat::make(i128(a.num_) * b.num_, i128(a.den_) * b.den_);
    }
    friend Rat operator/(const Rat& a, const Rat& b) {
        if (b.num_ == 0) throw std::domain_error("Rat: division by zero");
        return Rat::make(i128(a.num_) * b.den_, i128(a.den_) * b.num_);
    }
    Rat operator-() const { return Rat(-num_, den_); }

    friend bool operator==(const Rat& a, const Rat& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
    friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
    friend bool operator<(const Rat& a, const Rat& b) { return i128(a.num_) * b.den_ < i128(b.num_) * a.den_; }
    friend bool operator>(const Rat& a, const Rat& b) { return b < a; }
    friend bool operator<=(const Rat& a, const Rat& b) { return !(b < a); }
    friend bool operator>=(const Rat& a, const Rat& b) { return !(a < b); }

private:
    using i128 = __int128;

    static Rat make(i128 n, i128 d) {
        if (d == 0) throw std::domain_error("Rat: zero denominator");
        if (d < 0) { n = -n; d = -d; }
        i128 g = gcd128(n < 0 ? -n : n, d);
        if (g > 1) { n /= g; d /= g; }
        constexpr i128 lim = INT64_MAX;
        if (n > lim || n < -lim || d > lim)
            throw std::overflow_error("Rat: overflow after reduction");
        Rat r;
        r.num_ = static_cast<std::int64_t>(n);
        r.den_ = static_cast<std::int64_t>(d);
        return r;
    }

    static i128 gcd128(i128 a, i128 b) {
        while (b != 0) { i128 t = a % b; a = b; b = t; }
        return a < 0 ? -a : a;
    }

    void normalize() {
        Rat r = make(num_, den_);
        num_ = r.num_;
        den_ = r.den_;
    }

    std::int64_t num_;
    std::int64_t den_;
};

inline Rat Rat::parse(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("Rat: empty string");
    auto slash = s.find('/');
    if (slash != std::string::npos) {
        Rat n = parse(s.substr(0, slash));
        Rat d = parse(s.substr(slash + 1));
        return n / d;
    }
    auto dot = s.find('.');
    if (dot != std::string::npos) {
        std::string digits = s.substr(0, dot) + s.substr(dot + 1);
        std::size_t frac_len = s.size() - dot - 1;
        if (frac_len > 18) throw std::invalid_argument("Rat: decimal too long: " + s);
        std::int64_t num = std::stoll(digits);
        std::int64_t den = 1;
        for (std::size_t i = 0; i < frac_len; ++i) den *= 10;
        return Rat(num, den);
    }
    return Rat(std::stoll(s));
}

inline Rat Rat::from_double(double x) {
    if (x != x) throw std::invalid_argument("Rat: NaN");
    // Continued-fraction best rational approximation.
    constexpr std::int64_t max_den = 1000000000;
    bool neg = x < 0;
    double v = neg ? -x : x;
    std::int64_t p0 = 0, q0 = 1, p1 = 1, q1 = 0;
    double frac = v;
    for (int it = 0; it < 64; ++it) {
        double fl = static_cast<double>(static_cast<std::int64_t>(frac));
        std::int64_t a = static_cast<std::int64_t>(fl);
        std::int64_t p2 = a * p1 + p0;
        std::int64_t q2 = a * q1 + q0;
        if (q2 > max_den || q2 < 0) break;
        p0 = p1; q0 = q1; p1 = p2; q1 = q2;
        double rem = frac - fl;
        if (rem < 1e-15 * (1.0 + frac)) break;
        frac = 1.0 / rem;
    }
    if (q1 == 0) throw std::invalid_argument("Rat: cannot approximate");
    return neg ? Rat(-p1, q1) : Rat(p1, q1);
}

}  // namespace fracns
