#include "nonadd/measure.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace nonadd {

// ---------------------------------------------------------------- GSpec

GSpec GSpec::pwl(std::vector<std::pair<Rat, Rat>> points) {
    GSpec g;
    g.kind = Kind::Pwl;
    g.pts = std::move(points);
    if (g.pts.empty()) throw Error("gspec: piecewise map needs at least one point");
    Rat prev_x(0), prev_y(0);
    Rat prev_slope;
    bool have_prev = false;
    for (const auto& [x, y] : g.pts) {
        if (!(x > prev_x)) throw Error("gspec: breakpoints must be strictly increasing and positive");
        if (y < prev_y) throw Error("gspec: map must be monotone");
        Rat slope = (y - prev_y) / (x - prev_x);
        if (have_prev && slope > prev_slope) throw Error("gspec: map must be concave");
        prev_slope = slope;
        have_prev = true;
        prev_x = x;
        prev_y = y;
    }
    return g;
}

Rat GSpec::first_slope() const {
    if (kind == Kind::Sqrt) throw Error("gspec: sqrt has no first slope");
    return pts.front().second / pts.front().first;
}

bool GSpec::strictly_positive() const {
    if (kind == Kind::Sqrt) return true;
    return first_slope() > Rat(0);
}

bool GSpec::linear() const {
    if (kind == Kind::Sqrt) return false;
    Rat s0 = first_slope();
    Rat px = pts.front().first, py = pts.front().second;
    for (std::size_t i = 1; i < pts.size(); ++i) {
        Rat s = (pts[i].second - py) / (pts[i].first - px);
        if (!(s == s0)) return false;
        px = pts[i].first;
        py = pts[i].second;
    }
    return true;
}

Scalar GSpec::eval(const Rat& x) const {
    if (x.is_negative()) throw Error("gspec: negative argument");
    if (x.is_zero()) return Scalar(Rat(0));
    if (kind == Kind::Sqrt) {
        if (auto e = exact_sqrt(x)) return Scalar(*e);
        double v = std::sqrt(x.to_double());
        return Scalar::approx(v, 8e-16 * v + 1e-300);
    }
    Rat px(0), py(0);
    for (const auto& [bx, by] : pts) {
        if (x <= bx) {
            return Scalar(py + (by - py) / (bx - px) * (x - px));
        }
        px = bx;
        py = by;
    }
    // Beyond the last breakpoint: extend with the final slope.
    Rat slope;
    if (pts.size() == 1) {
        slope = first_slope();
    } else {
        const auto& a = pts[pts.size() - 2];
        const auto& b = pts.back();
        slope = (b.second - a.second) / (b.first - a.first);
    }
    return Scalar(py + slope * (x - px));
}

double GSpec::eval_num(double x) const {
    if (x <= 0.0) return 0.0;
    if (kind == Kind::Sqrt) return std::sqrt(x);
    double px = 0.0, py = 0.0;
    for (const auto& [bx, by] : pts) {
        double dbx = bx.to_double(), dby = by.to_double();
        if (x <= dbx) return py + (dby - py) / (dbx - px) * (x - px);
        px = dbx;
        py = dby;
    }
    double slope;
    if (pts.size() == 1) {
        slope = pts[0].second.to_double() / pts[0].first.to_double();
    } else {
        const auto& a = pts[pts.size() - 2];
        const auto& b = pts.back();
        slope = (b.second.to_double() - a.second.to_double()) /
                (b.first.to_double() - a.first.to_double());
    }
    return py + slope * (x - px);
}

namespace {

/// g evaluated on a scalar argument; monotone interval propagation when the
/// argument is numeric.
Scalar geval(const GSpec& g, const Scalar& x) {
    if (x.exact()) return g.eval(x.rat());
    double lo = std::max(0.0, x.value() - x.radius());
    double hi = x.value() + x.radius();
    double vlo = g.eval_num(lo), vhi = g.eval_num(hi);
    double mid = 0.5 * (vlo + vhi);
    double rad = 0.5 * (vhi - vlo) + 8e-16 * (std::fabs(mid) + 1e-300);
    return Scalar::approx(mid, rad);
}

Scalar pm_weight(const Measure::PointMass& pm, std::int64_t t) {
    if (t < static_cast<std::int64_t>(pm.w.size())) return Scalar(pm.w[static_cast<std::size_t>(t)]);
    if (pm.c.is_zero()) return Scalar(Rat(0));
    return Scalar(pm.c) * pow_scalar(Scalar(pm.r), static_cast<std::uint32_t>(t));
}

double pm_weight_num(const Measure::PointMass& pm, std::int64_t t) {
    if (t < static_cast<std::int64_t>(pm.w.size())) return pm.w[static_cast<std::size_t>(t)].to_double();
    return pm.c.to_double() * std::pow(pm.r.to_double(), static_cast<double>(t));
}

}  // namespace

// ------------------------------------------------------------ PointMass sums

Scalar point_mass_sum(const Measure::PointMass& pm, const UPSet& a) {
    std::int64_t m = std::max<std::int64_t>(a.prefix_len(), static_cast<std::int64_t>(pm.w.size()));
    Scalar total{Rat(0)};
    for (std::int64_t t : a.elements_below(m)) total += pm_weight(pm, t);
    if (a.is_finite() || pm.c.is_zero()) return total;
    std::int64_t p = a.period();
    Scalar geom_den = Scalar(Rat(1)) - pow_scalar(Scalar(pm.r), static_cast<std::uint32_t>(p));
    for (std::int64_t rho : a.residues()) {
        std::int64_t t0 = m + ((rho - m) % p + p) % p;
        // sum over t = t0, t0+p, ... of c r^t = c r^t0 / (1 - r^p)
        Scalar num = Scalar(pm.c) * pow_scalar(Scalar(pm.r), static_cast<std::uint32_t>(t0));
        total += num / geom_den;
    }
    return total;
}

double point_mass_sum_num(const Measure::PointMass& pm, const UPSet& a) {
    std::int64_t m = std::max<std::int64_t>(a.prefix_len(), static_cast<std::int64_t>(pm.w.size()));
    double total = 0.0;
    for (std::int64_t t : a.elements_below(m)) total += pm_weight_num(pm, t);
    if (a.is_finite() || pm.c.is_zero()) return total;
    double r = pm.r.to_double();
    std::int64_t p = a.period();
    double denom = 1.0 - std::pow(r, static_cast<double>(p));
    for (std::int64_t rho : a.residues()) {
        std::int64_t t0 = m + ((rho - m) % p + p) % p;
        total += pm.c.to_double() * std::pow(r, static_cast<double>(t0)) / denom;
    }
    return total;
}

Scalar point_mass_total(const Measure::PointMass& pm) {
    return point_mass_sum(pm, UPSet::all());
}

// ---------------------------------------------------------------- Measure

void Measure::validate() const {
    std::visit(
        [&](const auto& fam) {
            using F = std::decay_t<decltype(fam)>;
            if constexpr (std::is_same_v<F, Table>) {
                if (!g_.is_finite()) throw Error("measure: table family requires finite ground");
                if (fam.v.size() != (1ULL << g_.size)) throw Error("measure: table size must be 2^n");
                if (!fam.v[0].is_zero()) throw Error("measure: m(empty) must be 0");
                for (const auto& x : fam.v) {
                    if (x.is_negative()) throw Error("measure: negative value");
                }
            } else if constexpr (std::is_same_v<F, PointMass>) {
                for (const auto& x : fam.w) {
                    if (x.is_negative()) throw Error("measure: negative weight");
                }
                if (fam.c.is_negative()) throw Error("measure: negative tail coefficient");
                if (fam.r.is_negative() || fam.r >= Rat(1)) {
                    throw Error("measure: tail ratio must satisfy 0 <= r < 1");
                }
            } else if constexpr (std::is_same_v<F, CardClass>) {
                if (fam.theta.empty()) throw Error("measure: theta needs at least theta(0)");
                if (!fam.theta[0].is_zero()) throw Error("measure: theta(0) must be 0");
                for (const auto& x : fam.theta) {
                    if (x.is_negative()) throw Error("measure: negative theta");
                }
                if (fam.theta_inf.is_negative()) throw Error("measure: negative theta(inf)");
            } else if constexpr (std::is_same_v<F, Distortion>) {
                for (const auto& x : fam.base.w) {
                    if (x.is_negative()) throw Error("measure: negative weight");
                }
                if (fam.base.c.is_negative() || fam.base.r.is_negative() || fam.base.r >= Rat(1)) {
                    throw Error("measure: bad distortion base tail");
                }
            } else if constexpr (std::is_same_v<F, Sum>) {
                require_same_ground(fam.a->ground(), g_, "measure sum");
                require_same_ground(fam.b->ground(), g_, "measure sum");
            } else if constexpr (std::is_same_v<F, Scale>) {
                require_same_ground(fam.inner->ground(), g_, "measure scale");
                if (fam.alpha.is_negative()) throw Error("measure: negative scale");
            }
        },
        fam_);
}

MeasurePtr Measure::table(Ground g, std::vector<Rat> values) {
    auto m = MeasurePtr(new Measure(g, Table{std::move(values)}));
    m->validate();
    return m;
}

MeasurePtr Measure::point_mass(Ground g, std::vector<Rat> w, Rat c, Rat r) {
    auto m = MeasurePtr(new Measure(g, PointMass{std::move(w), c, r}));
    m->validate();
    return m;
}

MeasurePtr Measure::card_class(Ground g, std::vector<Rat> theta, Rat theta_inf) {
    auto m = MeasurePtr(new Measure(g, CardClass{std::move(theta), theta_inf}));
    m->validate();
    return m;
}

MeasurePtr Measure::distortion(Ground g, GSpec gs, PointMass base) {
    auto m = MeasurePtr(new Measure(g, Distortion{std::move(gs), std::move(base)}));
    m->validate();
    return m;
}

MeasurePtr Measure::sum(MeasurePtr a, MeasurePtr b) {
    Ground g = a->ground();
    auto m = MeasurePtr(new Measure(g, Sum{std::move(a), std::move(b)}));
    m->validate();
    return m;
}

MeasurePtr Measure::scale(Rat alpha, MeasurePtr inner) {
    Ground g = inner->ground();
    auto m = MeasurePtr(new Measure(g, Scale{alpha, std::move(inner)}));
    m->validate();
    return m;
}

namespace {

Rat theta_of(const Measure::CardClass& cc, std::int64_t card) {
    std::int64_t k = static_cast<std::int64_t>(cc.theta.size()) - 1;
    return cc.theta[static_cast<std::size_t>(std::min(card, k))];
}

}  // namespace

Scalar Measure::eval(const MSet& a) const {
    require_same_ground(a.ground(), g_, "measure eval");
    return std::visit(
        [&](const auto& fam) -> Scalar {
            using F = std::decay_t<decltype(fam)>;
            if constexpr (std::is_same_v<F, Table>) {
                return Scalar(fam.v[a.mask()]);
            } else if constexpr (std::is_same_v<F, PointMass>) {
                if (g_.is_finite()) {
                    Scalar s{Rat(0)};
                    for (auto t : a.elements_below(g_.size)) s += pm_weight(fam, t);
                    return s;
                }
                return point_mass_sum(fam, a.upset());
            } else if constexpr (std::is_same_v<F, CardClass>) {
                auto card = a.cardinality();
                if (!card) return Scalar(fam.theta_inf);
                return Scalar(theta_of(fam, *card));
            } else if constexpr (std::is_same_v<F, Distortion>) {
                Scalar mu;
                if (g_.is_finite()) {
                    mu = Scalar(Rat(0));
                    for (auto t : a.elements_below(g_.size)) mu += pm_weight(fam.base, t);
                } else {
                    mu = point_mass_sum(fam.base, a.upset());
                }
                return geval(fam.g, mu);
            } else if constexpr (std::is_same_v<F, Sum>) {
                return fam.a->eval(a) + fam.b->eval(a);
            } else {
                return Scalar(fam.alpha) * fam.inner->eval(a);
            }
        },
        fam_);
}

double Measure::eval_num(const MSet& a) const {
    require_same_ground(a.ground(), g_, "measure eval");
    return std::visit(
        [&](const auto& fam) -> double {
            using F = std::decay_t<decltype(fam)>;
            if constexpr (std::is_same_v<F, Table>) {
                return fam.v[a.mask()].to_double();
            } else if constexpr (std::is_same_v<F, PointMass>) {
                if (g_.is_finite()) {
                    double s = 0.0;
                    for (auto t : a.elements_below(g_.size)) s += pm_weight_num(fam, t);
                    return s;
                }
                return point_mass_sum_num(fam, a.upset());
            } else if constexpr (std::is_same_v<F, CardClass>) {
                auto card = a.cardinality();
                if (!card) return fam.theta_inf.to_double();
                return theta_of(fam, *card).to_double();
            } else if constexpr (std::is_same_v<F, Distortion>) {
                double mu;
                if (g_.is_finite()) {
                    mu = 0.0;
                    for (auto t : a.elements_below(g_.size)) mu += pm_weight_num(fam.base, t);
                } else {
                    mu = point_mass_sum_num(fam.base, a.upset());
                }
                return fam.g.eval_num(mu);
            } else if constexpr (std::is_same_v<F, Sum>) {
                return fam.a->eval_num(a) + fam.b->eval_num(a);
            } else {
                return fam.alpha.to_double() * fam.inner->eval_num(a);
            }
        },
        fam_);
}

std::vector<WeightRule> Measure::singleton_rules() const {
    if (g_.is_finite()) throw UnsupportedGround("singleton rules: omega grounds only");
    return std::visit(
        [&](const auto& fam) -> std::vector<WeightRule> {
            using F = std::decay_t<decltype(fam)>;
            if constexpr (std::is_same_v<F, PointMass>) {
                WeightRule rule;
                for (const auto& w : fam.w) rule.prefix.emplace_back(w);
                rule.c = Scalar(fam.c);
                rule.r = Scalar(fam.r);
                rule.start = static_cast<std::int64_t>(fam.w.size());
                return {rule};
            } else if constexpr (std::is_same_v<F, CardClass>) {
                WeightRule rule;
                rule.c = Scalar(theta_of(fam, 1));
                rule.r = Scalar(Rat(1));
                rule.start = 0;
                return {rule};
            } else if constexpr (std::is_same_v<F, Distortion>) {
                WeightRule rule;
                std::int64_t n = static_cast<std::int64_t>(fam.base.w.size());
                if (fam.g.kind == GSpec::Kind::Sqrt) {
                    for (std::int64_t t = 0; t < n; ++t) {
                        rule.prefix.push_back(geval(fam.g, pm_weight(fam.base, t)));
                    }
                    rule.c = geval(fam.g, Scalar(fam.base.c));
                    rule.r = geval(fam.g, Scalar(fam.base.r));
                    rule.start = n;
                    return {rule};
                }
                // Piecewise-linear: once the base weight is below the first
                // breakpoint the map acts as its first slope, so the tail is
                // geometric with the base ratio.
                if (fam.base.c.is_zero()) {
                    for (std::int64_t t = 0; t < n; ++t) {
                        rule.prefix.push_back(geval(fam.g, pm_weight(fam.base, t)));
                    }
                    rule.c = Scalar(Rat(0));
                    rule.r = Scalar(Rat(0));
                    rule.start = n;
                    return {rule};
                }
                Rat x1 = fam.g.pts.front().first;
                std::int64_t start = n;
                Scalar cur = pm_weight(fam.base, start);
                auto above = [&] {
                    return cur.exact() ? cur.rat() > x1 : cur.value() + cur.radius() > x1.to_double();
                };
                int guard = 0;
                while (above() && guard < 4096) {
                    ++start;
                    cur = cur * Scalar(fam.base.r);
                    ++guard;
                }
                if (guard >= 4096) throw UnsupportedFamily("distortion: tail never enters first segment");
                for (std::int64_t t = 0; t < start; ++t) {
                    rule.prefix.push_back(geval(fam.g, pm_weight(fam.base, t)));
                }
                rule.c = Scalar(fam.g.first_slope() * fam.base.c);
                rule.r = Scalar(fam.base.r);
                rule.start = start;
                return {rule};
            } else if constexpr (std::is_same_v<F, Sum>) {
                auto rules = fam.a->singleton_rules();
                auto rb = fam.b->singleton_rules();
                rules.insert(rules.end(), rb.begin(), rb.end());
                return rules;
            } else if constexpr (std::is_same_v<F, Scale>) {
                auto rules = fam.inner->singleton_rules();
                for (auto& rule : rules) {
                    for (auto& s : rule.prefix) s = Scalar(fam.alpha) * s;
                    rule.c = Scalar(fam.alpha) * rule.c;
                }
                return rules;
            } else {
                throw UnsupportedFamily("singleton rules: table family is finite-only");
            }
        },
        fam_);
}

std::string Measure::describe() const {
    return std::visit(
        [&](const auto& fam) -> std::string {
            using F = std::decay_t<decltype(fam)>;
            std::ostringstream os;
            if constexpr (std::is_same_v<F, Table>) {
                os << "table[2^" << g_.size << "]";
            } else if constexpr (std::is_same_v<F, PointMass>) {
                os << "pointmass(N=" << fam.w.size() << ",c=" << fam.c.to_string()
                   << ",r=" << fam.r.to_string() << ")";
            } else if constexpr (std::is_same_v<F, CardClass>) {
                os << "cardclass(K=" << fam.theta.size() - 1 << ",inf=" << fam.theta_inf.to_string()
                   << ")";
            } else if constexpr (std::is_same_v<F, Distortion>) {
                os << "distortion(" << (fam.g.kind == GSpec::Kind::Sqrt ? "sqrt" : "pwl") << ")";
            } else if constexpr (std::is_same_v<F, Sum>) {
                os << "sum(" << fam.a->describe() << "," << fam.b->describe() << ")";
            } else {
                os << "scale(" << fam.alpha.to_string() << "," << fam.inner->describe() << ")";
            }
            return os.str();
        },
        fam_);
}

}  // namespace nonadd
