#pragma once

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "nonadd/rational.hpp"

namespace nonadd {

/// A scalar that is either an exact rational or a double with a rigorous
/// error radius (true value lies in [value - radius, value + radius]).
/// Arithmetic stays exact as long as both operands are exact; on rational
/// overflow it demotes to the numeric representation instead of failing.
class Scalar {
public:
    Scalar() = default;                              // exact 0
    Scalar(Rat q) : exact_(true), q_(q) {}           // NOLINT: implicit by design
    Scalar(std::int64_t n) : exact_(true), q_(n) {}  // NOLINT

    static Scalar approx(double v, double rad);

    bool exact() const { return exact_; }
    const Rat& rat() const;          // requires exact()
    double value() const { return exact_ ? q_.to_double() : v_; }
    double radius() const { return exact_ ? 0.0 : rad_; }

    bool is_exact_zero() const { return exact_ && q_.is_zero(); }

    Scalar operator-() const;
    Scalar abs() const;
    friend Scalar operator+(const Scalar& a, const Scalar& b);
    friend Scalar operator-(const Scalar& a, const Scalar& b);
    friend Scalar operator*(const Scalar& a, const Scalar& b);
    friend Scalar operator/(const Scalar& a, const Scalar& b);
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }

    /// max by central value; exact only when both exact.
    static Scalar max(const Scalar& a, const Scalar& b);

    /// |a - b| <= radius(a) + radius(b) + tol; exact pair with tol 0 compares exactly.
    bool eq_within(const Scalar& o, double tol) const;
    /// a <= b modulo combined radii plus tol.
    bool le_within(const Scalar& o, double tol) const;

    std::string to_string() const;

private:
    bool exact_ = true;
    Rat q_{};
    double v_ = 0.0;
    double rad_ = 0.0;
};

Scalar pow_scalar(const Scalar& base, std::uint32_t e);

using Vec = std::vector<Scalar>;

Vec vec_zero(int dim);
Vec vec_add(const Vec& a, const Vec& b);
Vec vec_sub(const Vec& a, const Vec& b);
Vec vec_scale(const Scalar& s, const Vec& v);
Scalar norm_inf(const Vec& v);
double vec_radius(const Vec& v);
bool vec_eq_within(const Vec& a, const Vec& b, double tol);
bool vec_exact(const Vec& v);

/// A value in [0, +inf]: the codomain of variation.
struct ExtValue {
    bool infinite = false;
    Scalar finite{};

    static ExtValue inf() { return ExtValue{true, Scalar{}}; }
    static ExtValue of(Scalar s) { return ExtValue{false, s}; }
    std::string to_string() const { return infinite ? "inf" : finite.to_string(); }
};

}  // namespace nonadd
