#include "nonadd/scalar.hpp"

#include <algorithm>
#include <limits>

namespace nonadd {

namespace {

// Float slack covering rounding in the double path.
double slack(double v) { return 8.0 * std::numeric_limits<double>::epsilon() * (std::fabs(v) + 1.0e-300); }

}  // namespace

Scalar Scalar::approx(double v, double rad) {
    Scalar s;
    s.exact_ = false;
    s.v_ = v;
    s.rad_ = rad;
    return s;
}

const Rat& Scalar::rat() const {
    if (!exact_) throw Error("scalar: rational value requested from numeric scalar");
    return q_;
}

Scalar Scalar::operator-() const {
    if (exact_) return Scalar(-q_);
    return approx(-v_, rad_);
}

Scalar Scalar::abs() const {
    if (exact_) return Scalar(q_.abs());
    return approx(std::fabs(v_), rad_);
}

Scalar operator+(const Scalar& a, const Scalar& b) {
    if (a.exact_ && b.exact_) {
        try {
            return Scalar(a.q_ + b.q_);
        } catch (const RationalOverflow&) {
            // fall through to the numeric path
        }
    }
    double v = a.value() + b.value();
    return Scalar::approx(v, a.radius() + b.radius() + slack(v));
}

Scalar operator-(const Scalar& a, const Scalar& b) {
    if (a.exact_ && b.exact_) {
        try {
            return Scalar(a.q_ - b.q_);
        } catch (const RationalOverflow&) {
        }
    }
    double v = a.value() - b.value();
    return Scalar::approx(v, a.radius() + b.radius() + slack(v));
}

Scalar operator*(const Scalar& a, const Scalar& b) {
    if (a.exact_ && b.exact_) {
        try {
            return Scalar(a.q_ * b.q_);
        } catch (const RationalOverflow&) {
        }
    }
    double v = a.value() * b.value();
    double rad = std::fabs(a.value()) * b.radius() + std::fabs(b.value()) * a.radius() +
                 a.radius() * b.radius() + slack(v);
    return Scalar::approx(v, rad);
}

Scalar operator/(const Scalar& a, const Scalar& b) {
    if (a.exact_ && b.exact_) {
        try {
            return Scalar(a.q_ / b.q_);
        } catch (const RationalOverflow&) {
        }
    }
    double bv = b.value();
    double denom_lo = std::fabs(bv) - b.radius();
    if (denom_lo <= 0.0) throw Error("scalar: division by interval containing zero");
    double v = a.value() / bv;
    double rad = (a.radius() + std::fabs(v) * b.radius()) / denom_lo + slack(v);
    return Scalar::approx(v, rad);
}

Scalar Scalar::max(const Scalar& a, const Scalar& b) {
    if (a.exact_ && b.exact_) return a.q_ < b.q_ ? b : a;
    return a.value() < b.value() ? b : a;
}

bool Scalar::eq_within(const Scalar& o, double tol) const {
    if (exact_ && o.exact_ && tol == 0.0) return q_ == o.q_;
    return std::fabs(value() - o.value()) <= radius() + o.radius() + tol;
}

bool Scalar::le_within(const Scalar& o, double tol) const {
    if (exact_ && o.exact_ && tol == 0.0) return q_ <= o.q_;
    return value() <= o.value() + radius() + o.radius() + tol;
}

std::string Scalar::to_string() const {
    if (exact_) return q_.to_string();
    return std::to_string(v_) + "±" + std::to_string(rad_);
}

Scalar pow_scalar(const Scalar& base, std::uint32_t e) {
    if (base.exact()) {
        try {
            return Scalar(pow(base.rat(), e));
        } catch (const RationalOverflow&) {
        }
    }
    double v = std::pow(base.value(), static_cast<double>(e));
    double rad = 0.0;
    if (base.radius() > 0.0 && base.value() != 0.0) {
        // |d(x^e)| <= e * |x|^(e-1) * rad
        rad = static_cast<double>(e) * std::pow(std::fabs(base.value()), static_cast<double>(e) - 1.0) *
              base.radius();
    }
    return Scalar::approx(v, rad + slack(v));
}

Vec vec_zero(int dim) { return Vec(static_cast<std::size_t>(dim), Scalar{}); }

Vec vec_add(const Vec& a, const Vec& b) {
    Vec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return out;
}

Vec vec_sub(const Vec& a, const Vec& b) {
    Vec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
    return out;
}

Vec vec_scale(const Scalar& s, const Vec& v) {
    Vec out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = s * v[i];
    return out;
}

Scalar norm_inf(const Vec& v) {
    if (v.empty()) return Scalar{};
    bool all_exact = true;
    for (const auto& s : v) all_exact = all_exact && s.exact();
    if (all_exact) {
        Rat m = v[0].rat().abs();
        for (std::size_t i = 1; i < v.size(); ++i) m = max(m, v[i].rat().abs());
        return Scalar(m);
    }
    double m = 0.0, rad = 0.0;
    for (const auto& s : v) {
        m = std::max(m, std::fabs(s.value()));
        rad = std::max(rad, s.radius());
    }
    return Scalar::approx(m, rad);
}

double vec_radius(const Vec& v) {
    double r = 0.0;
    for (const auto& s : v) r = std::max(r, s.radius());
    return r;
}

bool vec_eq_within(const Vec& a, const Vec& b, double tol) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!a[i].eq_within(b[i], tol)) return false;
    }
    return true;
}

bool vec_exact(const Vec& v) {
    for (const auto& s : v) {
        if (!s.exact()) return false;
    }
    return true;
}

}  // namespace nonadd
