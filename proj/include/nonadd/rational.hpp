#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "nonadd/errors.hpp"

namespace nonadd {

/// Exact rational number on int64 numerator/denominator.
/// Canonical form: den > 0, gcd(|num|, den) = 1. Intermediate products run
/// in 128-bit; results that do not fit back into int64 throw RationalOverflow.
class Rat {
public:
    constexpr Rat() = default;
    Rat(std::int64_t n) : num_(n), den_(1) {}  // NOLINT: implicit by design
    Rat(std::int64_t n, std::int64_t d);

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_negative() const { return num_ < 0; }
    Rat abs() const { return num_ < 0 ? Rat(-num_, den_) : *this; }

    double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }
    std::string to_string() const;

    friend Rat operator+(const Rat& a, const Rat& b);
    friend Rat operator-(const Rat& a, const Rat& b);
    friend Rat operator*(const Rat& a, const Rat& b);
    friend Rat operator/(const Rat& a, const Rat& b);
    Rat operator-() const { return Rat::raw(-num_, den_); }

    Rat& operator+=(const Rat& o) { return *this = *this + o; }
    Rat& operator-=(const Rat& o) { return *this = *this - o; }
    Rat& operator*=(const Rat& o) { return *this = *this * o; }

    friend bool operator==(const Rat& a, const Rat& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Rat& a, const Rat& b);

    static std::optional<Rat> parse(std::string_view s);

private:
    static Rat raw(std::int64_t n, std::int64_t d) {
        Rat r;
        r.num_ = n;
        r.den_ = d;
        return r;
    }
    static Rat normalize128(__int128 n, __int128 d);

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

/// base^e for e >= 0 (0^0 = 1).
Rat pow(const Rat& base, std::uint32_t e);

/// Exact square root when numerator and denominator are perfect squares.
std::optional<Rat> exact_sqrt(const Rat& x);

inline Rat min(const Rat& a, const Rat& b) { return a < b ? a : b; }
inline Rat max(const Rat& a, const Rat& b) { return a < b ? b : a; }

}  // namespace nonadd
