#include "nonadd/rational.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <limits>

namespace nonadd {

namespace {

__int128 gcd128(__int128 a, __int128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        __int128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

constexpr __int128 kInt64Max = std::numeric_limits<std::int64_t>::max();
constexpr __int128 kInt64Min = std::numeric_limits<std::int64_t>::min();

}  // namespace

Rat Rat::normalize128(__int128 n, __int128 d) {
    if (d == 0) throw Error("rational: zero denominator");
    if (d < 0) {
        n = -n;
        d = -d;
    }
    if (n == 0) return Rat::raw(0, 1);
    __int128 g = gcd128(n, d);
    n /= g;
    d /= g;
    if (n > kInt64Max || n < kInt64Min || d > kInt64Max) {
        throw RationalOverflow("rational: value exceeds 64-bit range");
    }
    return Rat::raw(static_cast<std::int64_t>(n), static_cast<std::int64_t>(d));
}

Rat::Rat(std::int64_t n, std::int64_t d) {
    *this = normalize128(static_cast<__int128>(n), static_cast<__int128>(d));
}

Rat operator+(const Rat& a, const Rat& b) {
    __int128 n = static_cast<__int128>(a.num_) * b.den_ + static_cast<__int128>(b.num_) * a.den_;
    __int128 d = static_cast<__int128>(a.den_) * b.den_;
    return Rat::normalize128(n, d);
}

Rat operator-(const Rat& a, const Rat& b) {
    __int128 n = static_cast<__int128>(a.num_) * b.den_ - static_cast<__int128>(b.num_) * a.den_;
    __int128 d = static_cast<__int128>(a.den_) * b.den_;
    return Rat::normalize128(n, d);
}

Rat operator*(const Rat& a, const Rat& b) {
    __int128 n = static_cast<__int128>(a.num_) * b.num_;
    __int128 d = static_cast<__int128>(a.den_) * b.den_;
    return Rat::normalize128(n, d);
}

Rat operator/(const Rat& a, const Rat& b) {
    if (b.num_ == 0) throw Error("rational: division by zero");
    __int128 n = static_cast<__int128>(a.num_) * b.den_;
    __int128 d = static_cast<__int128>(a.den_) * b.num_;
    return Rat::normalize128(n, d);
}

std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    __int128 lhs = static_cast<__int128>(a.num_) * b.den_;
    __int128 rhs = static_cast<__int128>(b.num_) * a.den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::string Rat::to_string() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

std::optional<Rat> Rat::parse(std::string_view s) {
    if (s.empty()) return std::nullopt;
    std::size_t pos = 0;
    auto read_int = [&](std::int64_t& out) -> bool {
        bool neg = false;
        if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) {
            neg = s[pos] == '-';
            ++pos;
        }
        if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos]))) return false;
        __int128 v = 0;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            v = v * 10 + (s[pos] - '0');
            if (v > kInt64Max) return false;
            ++pos;
        }
        out = neg ? -static_cast<std::int64_t>(v) : static_cast<std::int64_t>(v);
        return true;
    };
    std::int64_t n = 0;
    if (!read_int(n)) return std::nullopt;
    if (pos == s.size()) return Rat(n);
    if (s[pos] != '/') return std::nullopt;
    ++pos;
    std::int64_t d = 0;
    if (!read_int(d) || pos != s.size() || d == 0) return std::nullopt;
    return Rat(n, d);
}

Rat pow(const Rat& base, std::uint32_t e) {
    Rat acc(1);
    Rat b = base;
    while (e != 0) {
        if (e & 1u) acc = acc * b;
        e >>= 1u;
        if (e != 0) b = b * b;
    }
    return acc;
}

std::optional<Rat> exact_sqrt(const Rat& x) {
    if (x.is_negative()) return std::nullopt;
    auto isqrt_check = [](std::int64_t v) -> std::optional<std::int64_t> {
        if (v < 0) return std::nullopt;
        auto r = static_cast<std::int64_t>(std::llround(std::sqrt(static_cast<double>(v))));
        for (std::int64_t c = r > 1 ? r - 1 : 0; c <= r + 1; ++c) {
            if (c >= 0 && c * c == v) return c;
        }
        return std::nullopt;
    };
    auto sn = isqrt_check(x.num());
    auto sd = isqrt_check(x.den());
    if (!sn || !sd) return std::nullopt;
    return Rat(*sn, *sd);
}

}  // namespace nonadd
