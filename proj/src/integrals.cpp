#include "nonadd/integrals.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "nonadd/properties.hpp"
#include "nonadd/variation.hpp"

namespace nonadd {

namespace {

Vec qvec_to_vec(const QVec& q) {
    Vec v;
    v.reserve(q.size());
    for (const auto& x : q) v.emplace_back(x);
    return v;
}

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// ------------------------------------------------------- numeric weight view

struct NumRule {
    std::vector<double> prefix;
    double c = 0.0, r = 0.0;
    std::int64_t start = 0;
};

std::vector<NumRule> num_rules(const Measure& m) {
    std::vector<NumRule> out;
    for (const auto& rule : m.singleton_rules()) {
        NumRule nr;
        nr.prefix.reserve(rule.prefix.size());
        for (const auto& s : rule.prefix) nr.prefix.push_back(s.value());
        nr.c = rule.c.value();
        nr.r = rule.r.value();
        nr.start = rule.start;
        out.push_back(std::move(nr));
    }
    return out;
}

double weight_num(const std::vector<NumRule>& rules, std::int64_t t) {
    double w = 0.0;
    for (const auto& nr : rules) {
        if (t < nr.start) {
            w += nr.prefix[static_cast<std::size_t>(t)];
        } else if (nr.c != 0.0) {
            w += nr.c * std::pow(nr.r, static_cast<double>(t));
        }
    }
    return w;
}

/// Mass of {t >= cut} under the weight rules (tail of the singleton series).
double tail_mass_num(const std::vector<NumRule>& rules, std::int64_t cut) {
    double total = 0.0;
    for (const auto& nr : rules) {
        for (std::int64_t t = cut; t < nr.start; ++t) {
            total += nr.prefix[static_cast<std::size_t>(t)];
        }
        std::int64_t t0 = std::max(cut, nr.start);
        if (nr.c != 0.0 && nr.r < 1.0) {
            total += nr.c * std::pow(nr.r, static_cast<double>(t0)) / (1.0 - nr.r);
        }
    }
    return total;
}

/// m(base intersect [cut, inf)) in doubles, residue-class closed form.
double tail_block_mass(const std::vector<NumRule>& rules, const UPSet& base, std::int64_t cut) {
    double total = 0.0;
    std::int64_t head = std::max(cut, std::int64_t{0});
    for (std::int64_t t : base.elements_below(base.prefix_len())) {
        if (t >= head) total += weight_num(rules, t);
    }
    std::int64_t p = base.period();
    std::int64_t from = std::max(head, base.prefix_len());
    for (const auto& nr : rules) {
        std::int64_t start = std::max(from, nr.start);
        for (std::int64_t rho : base.residues()) {
            std::int64_t t0 = start + ((rho - start) % p + p) % p;
            // rule prefix values between `from` and `start` on this class
            for (std::int64_t t = from + ((rho - from) % p + p) % p; t < start; t += p) {
                total += nr.prefix[static_cast<std::size_t>(t)];
            }
            if (nr.c != 0.0 && nr.r < 1.0) {
                total += nr.c * std::pow(nr.r, static_cast<double>(t0)) /
                         (1.0 - std::pow(nr.r, static_cast<double>(p)));
            }
        }
    }
    return total;
}

std::int64_t first_in_class_at_least(const UPSet& base, std::int64_t cut) {
    for (std::int64_t t : base.elements_below(base.prefix_len())) {
        if (t >= cut) return t;
    }
    std::int64_t from = std::max(cut, base.prefix_len());
    std::int64_t best = -1;
    for (std::int64_t rho : base.residues()) {
        std::int64_t t0 = from + ((rho - from) % base.period() + base.period()) % base.period();
        if (best < 0 || t0 < best) best = t0;
    }
    return best;
}

}  // namespace

// ------------------------------------------------------------------ sigma

SigmaResult sigma_sum(const FuncSpec& f, const TaggedPartition& tp, const Measure& m) {
    const Partition& p = tp.partition();
    require_same_ground(p.ground(), m.ground(), "sigma_sum");
    require_same_ground(p.ground(), f.ground(), "sigma_sum");
    SigmaResult out;
    out.value = vec_zero(f.dim());
    for (std::size_t i = 0; i < p.blocks().size(); ++i) {
        Scalar w = m.eval(p.blocks()[i]);
        out.value = vec_add(out.value, vec_scale(w, qvec_to_vec(f.eval(tp.tags()[i]))));
    }
    if (p.has_tail()) {
        auto series = singleton_series(f, p.tail_set(), m);
        if (series.divergent) {
            out.tail_divergent = true;
            out.abs_convergent = false;
            for (const auto& [cut, partial] : series.partials) {
                std::ostringstream os;
                os << "partial sum over tail elements below " << cut;
                out.growth.push_back(ChainRecord{os.str(), cut, partial, 0.0});
            }
            return out;
        }
        out.value = vec_add(out.value, series.value);
    }
    return out;
}

// --------------------------------------------------------------------- RL

IntegralVerdict rl_integrate(const FuncSpec& f, const Measure& m, const MSet& a) {
    require_same_ground(f.ground(), m.ground(), "rl_integrate");
    require_same_ground(f.ground(), a.ground(), "rl_integrate");
    IntegralVerdict v;
    if (f.ground().is_finite()) {
        v.status = VerdictStatus::Value;
        v.value = singleton_sum_finite(f, a.mask(), m);
        v.abs_convergent = true;
        return v;
    }
    auto series = singleton_series(f, a.upset(), m);
    if (series.divergent) {
        v.status = VerdictStatus::Divergent;
        for (const auto& [cut, partial] : series.partials) {
            std::ostringstream os;
            os << "singletons of A below " << cut << " + remainder";
            v.certificate.push_back(ChainRecord{os.str(), cut + 1, partial, 0.0});
        }
        return v;
    }
    v.status = VerdictStatus::Value;
    v.value = series.value;
    v.abs_convergent = true;
    return v;
}

IntegralVerdict rl_integrate(const FuncSpec& f, const Measure& m) {
    return rl_integrate(f, m, MSet::full(f.ground()));
}

// --------------------------------------------------------------- Birkhoff

IntegralVerdict birkhoff_simple(const FuncSpec& f, const Measure& m) {
    IntegralVerdict v = rl_integrate(f, m);
    if (v.status != VerdictStatus::Value || f.ground().is_finite()) return v;
    // Reordering probe: the limsup criterion must not depend on the block
    // enumeration order. Absolute convergence already implies this in finite
    // dimension; the probe guards the implementation.
    auto rules = num_rules(m);
    constexpr std::int64_t kCut = 4096;
    double tail = tail_mass_num(rules, kCut);
    double band = 2.0 * f.sup_norm().to_double() * tail + vec_radius(v.value) + 1e-9;
    std::vector<std::vector<std::int64_t>> orders;
    std::vector<std::int64_t> natural, window_reversed, parity;
    for (std::int64_t t = 0; t < kCut; ++t) natural.push_back(t);
    for (std::int64_t base = 0; base < kCut; base += 64) {
        for (std::int64_t t = std::min(base + 64, kCut) - 1; t >= base; --t) {
            window_reversed.push_back(t);
        }
    }
    for (std::int64_t t = 0; t < kCut; t += 2) parity.push_back(t);
    for (std::int64_t t = 1; t < kCut; t += 2) parity.push_back(t);
    orders = {natural, window_reversed, parity};
    for (const auto& order : orders) {
        std::vector<double> acc(static_cast<std::size_t>(f.dim()), 0.0);
        for (std::int64_t t : order) {
            double w = weight_num(rules, t);
            if (w == 0.0) continue;
            const QVec& ft = f.eval(t);
            for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += w * ft[i].to_double();
        }
        for (std::size_t i = 0; i < acc.size(); ++i) {
            if (std::fabs(acc[i] - v.value[i].value()) > band) {
                IntegralVerdict unknown;
                unknown.status = VerdictStatus::Unknown;
                unknown.lo.assign(acc.begin(), acc.end());
                unknown.hi.assign(acc.begin(), acc.end());
                unknown.budget_spent = kCut;
                return unknown;
            }
        }
    }
    return v;
}

// ------------------------------------------------------------------- Gould

namespace {

/// Light-weight probe partition: singletons below `cut` plus infinite
/// residue-class blocks truncated to [cut, inf).
struct ProbeChain {
    std::int64_t cut = 0;
    std::vector<UPSet> tail_blocks;
    std::vector<double> singleton_sum;  // accumulated f(t) m({t}) for t < cut
};

struct ProbeOutcome {
    double max_dev = 0.0;
    std::vector<ChainRecord> records;
};

ProbeOutcome run_probe_chain(const FuncSpec& f, const std::vector<NumRule>& rules,
                             const Vec& claim, const GouldBudget& budget, int chain_index,
                             bool want_records) {
    std::mt19937_64 rng(splitmix64(budget.seed ^ static_cast<std::uint64_t>(chain_index)));
    const int d = f.dim();
    ProbeChain st;
    st.tail_blocks = {UPSet::all()};
    st.singleton_sum.assign(static_cast<std::size_t>(d), 0.0);
    bool random_tags = (chain_index % 2) == 1;
    ProbeOutcome out;

    for (int step = 0; step < budget.depth; ++step) {
        // Peel the next window into singletons.
        std::int64_t next_cut =
            std::min<std::int64_t>(8192, st.cut * 2 + 1 + static_cast<std::int64_t>(rng() % 4));
        for (std::int64_t t = st.cut; t < next_cut; ++t) {
            double w = weight_num(rules, t);
            if (w != 0.0) {
                const QVec& ft = f.eval(t);
                for (int i = 0; i < d; ++i) {
                    st.singleton_sum[static_cast<std::size_t>(i)] += w * ft[static_cast<std::size_t>(i)].to_double();
                }
            }
        }
        st.cut = next_cut;
        // Occasionally split a tail block into two residue subclasses.
        if ((rng() & 1ULL) != 0 &&
            static_cast<int>(st.tail_blocks.size()) < budget.split_arity) {
            std::size_t pick = rng() % st.tail_blocks.size();
            const UPSet& b = st.tail_blocks[pick];
            if (b.is_infinite()) {
                auto parts = split_infinite_upset(b, 2);
                st.tail_blocks[pick] = parts[0];
                st.tail_blocks.push_back(parts[1]);
            }
        }
        if (want_records || step == budget.depth - 1) {
            std::vector<double> sigma = st.singleton_sum;
            for (const auto& b : st.tail_blocks) {
                std::int64_t tag = first_in_class_at_least(b, st.cut);
                if (tag < 0) continue;
                if (random_tags) tag += b.period() * static_cast<std::int64_t>(rng() % 4);
                double mass = tail_block_mass(rules, b, st.cut);
                if (mass == 0.0) continue;
                const QVec& ft = f.eval(tag);
                for (int i = 0; i < d; ++i) sigma[static_cast<std::size_t>(i)] += mass * ft[static_cast<std::size_t>(i)].to_double();
            }
            double dev = 0.0;
            for (int i = 0; i < d; ++i) {
                dev = std::max(dev, std::fabs(sigma[static_cast<std::size_t>(i)] -
                                              claim[static_cast<std::size_t>(i)].value()));
            }
            if (step == budget.depth - 1) out.max_dev = std::max(out.max_dev, dev);
            if (want_records) {
                std::ostringstream os;
                os << "singletons below " << st.cut << " + " << st.tail_blocks.size()
                   << " residue blocks";
                Vec sv;
                for (double x : sigma) sv.push_back(Scalar::approx(x, 1e-15 * (std::fabs(x) + 1.0)));
                double tail_bound = 2.0 * f.sup_norm().to_double() * tail_mass_num(rules, st.cut);
                out.records.push_back(ChainRecord{
                    os.str(), st.cut + static_cast<std::int64_t>(st.tail_blocks.size()), sv,
                    tail_bound});
            }
        }
    }
    return out;
}

struct SearchOutcome {
    bool divergent = false;
    std::vector<ChainRecord> chain;
    std::vector<double> lo, hi;
    std::int64_t evals = 0;
};

ChainRecord record_of(const Partition& p, const Vec& sigma) {
    return ChainRecord{p.describe(), static_cast<std::int64_t>(p.blocks().size()), sigma,
                       vec_radius(sigma)};
}

/// Greedy monotone-growth search along IntoKInfinite refinement chains.
SearchOutcome divergence_search(const FuncSpec& f, const Measure& m, const GouldBudget& budget) {
    SearchOutcome out;
    const double delta = std::max(budget.tol * 100.0, 1e-6);
    std::vector<Partition> starts = {Partition::trivial(f.ground())};
    {
        std::vector<MSet> halves = {MSet::omega(UPSet::evens()), MSet::omega(UPSet::odds())};
        starts.push_back(Partition::of_blocks(f.ground(), halves, false));
    }
    auto track = [&](const Vec& sigma) {
        if (out.lo.empty()) {
            out.lo.assign(sigma.size(), 0.0);
            out.hi.assign(sigma.size(), 0.0);
            for (std::size_t i = 0; i < sigma.size(); ++i) out.lo[i] = out.hi[i] = sigma[i].value();
            return;
        }
        for (std::size_t i = 0; i < sigma.size(); ++i) {
            out.lo[i] = std::min(out.lo[i], sigma[i].value());
            out.hi[i] = std::max(out.hi[i], sigma[i].value());
        }
    };
    for (const auto& start : starts) {
        Partition cur = start;
        Vec sigma = sigma_sum(f, TaggedPartition::min_tags(cur), m).value;
        ++out.evals;
        track(sigma);
        std::vector<ChainRecord> chain = {record_of(cur, sigma)};
        double cur_norm = norm_inf(sigma).value();
        bool grew_all = true;
        for (int step = 0; step < budget.depth && grew_all; ++step) {
            std::optional<Partition> best;
            Vec best_sigma;
            double best_norm = cur_norm;
            for (std::size_t i = 0; i < cur.blocks().size(); ++i) {
                const MSet& b = cur.blocks()[i];
                if (!b.upset().is_infinite()) continue;
                auto parts = split_infinite_upset(b.upset(), 2);
                std::vector<MSet> blocks;
                for (std::size_t j = 0; j < cur.blocks().size(); ++j) {
                    if (j != i) blocks.push_back(cur.blocks()[j]);
                }
                for (auto& u : parts) blocks.push_back(MSet::omega(std::move(u)));
                Partition cand = Partition::of_blocks(f.ground(), std::move(blocks), false);
                Vec s = sigma_sum(f, TaggedPartition::min_tags(cand), m).value;
                ++out.evals;
                track(s);
                double n = norm_inf(s).value();
                if (n > best_norm + delta) {
                    best = cand;
                    best_sigma = s;
                    best_norm = n;
                }
            }
            if (!best) {
                grew_all = false;
                break;
            }
            cur = *best;
            cur_norm = best_norm;
            sigma = best_sigma;
            chain.push_back(record_of(cur, sigma));
        }
        if (grew_all && static_cast<int>(chain.size()) == budget.depth + 1 &&
            norm_inf(chain.back().sigma).value() - norm_inf(chain.front().sigma).value() >= 0.5) {
            out.divergent = true;
            out.chain = std::move(chain);
            return out;
        }
    }
    return out;
}

}  // namespace

IntegralVerdict gould_integrate(const FuncSpec& f, const Measure& m, const GouldBudget& budget) {
    require_same_ground(f.ground(), m.ground(), "gould_integrate");
    IntegralVerdict v;

    if (f.ground().is_finite()) {
        // The finite-partition net has the all-singletons partition as its
        // maximum, so the net value is the singleton sum.
        v.status = VerdictStatus::Value;
        v.value = singleton_sum_finite(f, MSet::full(f.ground()).mask(), m);
        v.abs_convergent = true;
        if (budget.want_trace) {
            Partition triv = Partition::trivial(f.ground());
            Vec s0 = sigma_sum(f, TaggedPartition::min_tags(triv), m).value;
            v.trace.push_back(record_of(triv, s0));
            Partition fine = Partition::all_singletons(f.ground());
            v.trace.push_back(record_of(fine, v.value));
        }
        return v;
    }

    if (f.is_zero()) {
        v.status = VerdictStatus::Value;
        v.value = vec_zero(f.dim());
        v.abs_convergent = true;
        return v;
    }

    PropertyReport props = structural_properties(m);
    bool dispatch = false;
    std::string route;
    if (props.proved(Prop::SigmaAdditive)) {
        dispatch = true;
        route = "sigma-additive measure of finite variation";
    } else if (props.proved(Prop::Monotone) && props.proved(Prop::SigmaSubadditive)) {
        dispatch = true;
        route = "monotone sigma-subadditive measure of finite variation";
    }
    if (dispatch) {
        ExtValue var = variation(m, MSet::full(m.ground()));
        if (!var.infinite) {
            IntegralVerdict rl = rl_integrate(f, m);
            if (rl.status == VerdictStatus::Value) {
                // Empirical Cauchy probe over random refinement chains.
                auto rules = num_rules(m);
                double worst = 0.0;
                std::vector<ChainRecord> trace;
#ifdef _OPENMP
#pragma omp parallel for schedule(static) reduction(max : worst)
#endif
                for (int c = 0; c < budget.chains; ++c) {
                    auto probe = run_probe_chain(f, rules, rl.value, budget, c,
                                                 budget.want_trace && c == 0);
                    worst = std::max(worst, probe.max_dev);
                    if (budget.want_trace && c == 0) {
#ifdef _OPENMP
#pragma omp critical
#endif
                        trace = probe.records;
                    }
                }
                double allowed = std::max(budget.tol, 2.0 * vec_radius(rl.value) + budget.tol);
                if (worst <= allowed) {
                    v = rl;
                    v.probe_max_dev = worst;
                    v.budget_spent = budget.chains * budget.depth;
                    v.trace = std::move(trace);
                    return v;
                }
                v.status = VerdictStatus::Unknown;
                v.budget_spent = budget.chains * budget.depth;
                v.lo.assign(static_cast<std::size_t>(f.dim()), 0.0);
                v.hi.assign(static_cast<std::size_t>(f.dim()), 0.0);
                for (int i = 0; i < f.dim(); ++i) {
                    v.lo[static_cast<std::size_t>(i)] = rl.value[static_cast<std::size_t>(i)].value() - worst;
                    v.hi[static_cast<std::size_t>(i)] = rl.value[static_cast<std::size_t>(i)].value() + worst;
                }
                return v;
            }
        }
    }

    SearchOutcome search = divergence_search(f, m, budget);
    if (search.divergent) {
        v.status = VerdictStatus::Divergent;
        v.certificate = search.chain;
        if (budget.want_trace) v.trace = v.certificate;
        v.budget_spent = search.evals;
        return v;
    }
    v.status = VerdictStatus::Unknown;
    v.lo = search.lo;
    v.hi = search.hi;
    v.budget_spent = search.evals;
    return v;
}

// -------------------------------------------------------------- indefinite

IndefiniteIntegral::IndefiniteIntegral(FuncSpec f, MeasurePtr m)
    : f_(std::move(f)), m_(std::move(m)) {
    IntegralVerdict base = rl_integrate(f_, *m_);
    if (base.status != VerdictStatus::Value) {
        throw NotIntegrable("indefinite: f is not RL m-integrable on the ground set");
    }
}

IntegralVerdict IndefiniteIntegral::operator()(const MSet& a) const {
    return rl_integrate(f_, *m_, a);
}

IndefiniteIntegral indefinite(const FuncSpec& f, MeasurePtr m) {
    return IndefiniteIntegral(f, std::move(m));
}

}  // namespace nonadd
