#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "nonadd/mset.hpp"
#include "nonadd/scalar.hpp"

namespace nonadd {

/// Monotone concave distortion map g with g(0) = 0.
struct GSpec {
    enum class Kind { Sqrt, Pwl };
    Kind kind = Kind::Sqrt;
    /// Pwl: breakpoints (x, y), x strictly increasing > 0; segments start at
    /// (0,0) and the last slope extends to infinity.
    std::vector<std::pair<Rat, Rat>> pts;

    static GSpec sqrt() { return GSpec{Kind::Sqrt, {}}; }
    static GSpec pwl(std::vector<std::pair<Rat, Rat>> points);

    Scalar eval(const Rat& x) const;
    double eval_num(double x) const;
    bool strictly_positive() const;  // g(x) > 0 for every x > 0
    bool linear() const;             // single slope through the origin
    Rat first_slope() const;         // slope on (0, x_1]
    bool operator==(const GSpec&) const = default;
};

class Measure;
using MeasurePtr = std::shared_ptr<const Measure>;

/// Eventually geometric description of t -> m({t}): explicit prefix, then
/// c * r^t from `start` on. Exact scalars whenever the family permits;
/// r == 1 encodes a constant tail.
struct WeightRule {
    std::vector<Scalar> prefix;
    Scalar c;
    Scalar r;
    std::int64_t start = 0;
};

/// Non-negative set function with m(empty) = 0, described by one of the
/// rule families. Immutable; share via MeasurePtr.
class Measure {
public:
    struct Table {
        std::vector<Rat> v;  // indexed by subset mask, size 2^n
    };
    struct PointMass {
        std::vector<Rat> w;  // explicit weights on 0..N-1
        Rat c{0}, r{0};      // tail w_t = c * r^t for t >= N, 0 <= r < 1
    };
    struct CardClass {
        std::vector<Rat> theta;  // theta[0..K], theta[0] = 0; |A| > K uses theta[K]
        Rat theta_inf{0};
    };
    struct Distortion {
        GSpec g;
        PointMass base;
    };
    struct Sum {
        MeasurePtr a, b;
    };
    struct Scale {
        Rat alpha{0};
        MeasurePtr inner;
    };
    using Family = std::variant<Table, PointMass, CardClass, Distortion, Sum, Scale>;

    static MeasurePtr table(Ground g, std::vector<Rat> values);
    static MeasurePtr point_mass(Ground g, std::vector<Rat> w, Rat c = Rat(0), Rat r = Rat(0));
    static MeasurePtr card_class(Ground g, std::vector<Rat> theta, Rat theta_inf);
    static MeasurePtr distortion(Ground g, GSpec gs, PointMass base);
    static MeasurePtr sum(MeasurePtr a, MeasurePtr b);
    static MeasurePtr scale(Rat alpha, MeasurePtr inner);

    const Ground& ground() const { return g_; }
    const Family& family() const { return fam_; }

    /// m(A); exact whenever the family evaluates in closed rational form.
    Scalar eval(const MSet& a) const;
    /// Fast double path (probe chains, traces).
    double eval_num(const MSet& a) const;

    Scalar singleton(std::int64_t t) const { return eval(MSet::single(g_, t)); }

    /// Eventually geometric singleton weights, as a sum of rules
    /// (omega grounds). Throws UnsupportedFamily only if a family cannot be
    /// described this way (none of the shipped families hit this).
    std::vector<WeightRule> singleton_rules() const;

    std::string describe() const;

private:
    Measure(Ground g, Family fam) : g_(g), fam_(std::move(fam)) {}
    void validate() const;

    Ground g_;
    Family fam_;
};

/// Closed-form sum of a point-mass family over an ultimately periodic set.
Scalar point_mass_sum(const Measure::PointMass& pm, const UPSet& a);
double point_mass_sum_num(const Measure::PointMass& pm, const UPSet& a);
/// Total mass (sum over all of the naturals).
Scalar point_mass_total(const Measure::PointMass& pm);

}  // namespace nonadd
