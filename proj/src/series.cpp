#include "nonadd/series.hpp"

#include <algorithm>
#include <numeric>

namespace nonadd {

namespace {

std::int64_t lcm_small(std::int64_t a, std::int64_t b) {
    return a / std::gcd(a, b) * b;
}

Vec qvec_to_vec(const QVec& q) {
    Vec v;
    v.reserve(q.size());
    for (const auto& x : q) v.emplace_back(x);
    return v;
}

}  // namespace

SeriesOutcome singleton_series(const FuncSpec& f, const UPSet& over, const Measure& m) {
    const int d = f.dim();
    SeriesOutcome out;
    out.value = vec_zero(d);

    auto rules = m.singleton_rules();
    for (const auto& rule : rules) {
        // Head: everything before the aligned tail start.
        std::int64_t head_end =
            std::max({rule.start, over.prefix_len(), f.prefix_len()});
        for (std::int64_t t : over.elements_below(head_end)) {
            Scalar w = t < rule.start ? rule.prefix[static_cast<std::size_t>(t)]
                                      : rule.c * pow_scalar(rule.r, static_cast<std::uint32_t>(t));
            if (w.is_exact_zero()) continue;
            out.value = vec_add(out.value, vec_scale(w, qvec_to_vec(f.eval(t))));
        }
        if (over.is_finite()) continue;
        bool const_tail = rule.r.exact() && rule.r.rat() == Rat(1);
        if (rule.c.is_exact_zero() || (!const_tail && rule.c.value() == 0.0 && rule.c.radius() == 0.0)) {
            continue;
        }
        // Tail: residue classes of `over` joint with f's cycle.
        std::int64_t ell = lcm_small(over.period(), f.period());
        Scalar geom_den;
        if (!const_tail) {
            geom_den = Scalar(Rat(1)) - pow_scalar(rule.r, static_cast<std::uint32_t>(ell));
        }
        for (std::int64_t rho = 0; rho < ell; ++rho) {
            if (!over.residue_bits()[static_cast<std::size_t>(rho % over.period())]) continue;
            std::int64_t t0 = head_end + ((rho - head_end) % ell + ell) % ell;
            Vec fval = qvec_to_vec(f.eval(t0));  // constant on this class beyond head_end
            if (const_tail) {
                bool fzero = std::all_of(fval.begin(), fval.end(),
                                         [](const Scalar& s) { return s.is_exact_zero(); });
                if (fzero) continue;
                // Constant positive weights against nonzero values: the
                // series fails absolute convergence.
                out.divergent = true;
                out.abs_convergent = false;
                continue;
            }
            Scalar coef = rule.c * pow_scalar(rule.r, static_cast<std::uint32_t>(t0)) / geom_den;
            out.value = vec_add(out.value, vec_scale(coef, fval));
        }
    }

    if (out.divergent) {
        // Record growing partial sums as certificate material.
        for (std::int64_t cutoff = 4; cutoff <= 512; cutoff *= 2) {
            Vec partial = vec_zero(d);
            for (std::int64_t t : over.elements_below(cutoff)) {
                Scalar w = m.singleton(t);
                partial = vec_add(partial, vec_scale(w, qvec_to_vec(f.eval(t))));
            }
            out.partials.emplace_back(cutoff, std::move(partial));
        }
    }
    return out;
}

Vec singleton_sum_finite(const FuncSpec& f, std::uint64_t mask, const Measure& m) {
    const Ground& g = f.ground();
    Vec total = vec_zero(f.dim());
    for (std::int64_t t = 0; t < g.size; ++t) {
        if (((mask >> t) & 1ULL) == 0) continue;
        Scalar w = m.singleton(t);
        total = vec_add(total, vec_scale(w, qvec_to_vec(f.eval(t))));
    }
    return total;
}

std::vector<double> series_partial_num(const FuncSpec& f, const UPSet& over, const Measure& m,
                                       std::int64_t cutoff) {
    std::vector<double> acc(static_cast<std::size_t>(f.dim()), 0.0);
    for (std::int64_t t : over.elements_below(cutoff)) {
        double w = m.eval_num(MSet::omega(UPSet::singleton(t)));
        const QVec& v = f.eval(t);
        for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += w * v[i].to_double();
    }
    return acc;
}

}  // namespace nonadd
