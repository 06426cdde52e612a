#pragma once

#include <string>

#include "nonadd/errors.hpp"

namespace nonadd {

/// The ground set T: either {0, ..., n-1} or all of the naturals.
/// The sigma-algebra is the full power set in both models.
struct Ground {
    enum class Kind : unsigned char { Finite, Omega };

    Kind kind = Kind::Omega;
    int size = 0;  // element count when Finite

    static Ground finite(int n) {
        if (n < 1) throw Error("ground: finite ground needs n >= 1");
        if (n > 62) throw LimitExceeded("ground: finite ground limited to n <= 62");
        return Ground{Kind::Finite, n};
    }
    static Ground omega() { return Ground{Kind::Omega, 0}; }

    bool is_finite() const { return kind == Kind::Finite; }
    bool operator==(const Ground&) const = default;

    std::string to_string() const {
        return is_finite() ? "finite(" + std::to_string(size) + ")" : "omega";
    }
};

inline void require_same_ground(const Ground& a, const Ground& b, const char* what) {
    if (!(a == b)) throw GroundMismatch(std::string(what) + ": ground mismatch");
}

}  // namespace nonadd
