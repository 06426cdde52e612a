#include "nonadd/funcspec.hpp"

#include <algorithm>
#include <numeric>

namespace nonadd {

namespace {

constexpr std::int64_t kMaxWindow = 1 << 20;

std::int64_t lcm_checked(std::int64_t a, std::int64_t b) {
    std::int64_t l = a / std::gcd(a, b) * b;
    if (l > kMaxWindow) throw LimitExceeded("funcspec: combined period exceeds limit");
    return l;
}

}  // namespace

void FuncSpec::validate() const {
    if (dim_ < 1) throw Error("funcspec: dimension must be >= 1");
    auto check_rows = [&](const std::vector<QVec>& rows) {
        for (const auto& r : rows) {
            if (static_cast<int>(r.size()) != dim_) throw Error("funcspec: row dimension mismatch");
        }
    };
    check_rows(prefix_);
    check_rows(cycle_);
    if (g_.is_finite()) {
        if (!cycle_.empty()) throw Error("funcspec: finite ground takes no cycle");
        if (static_cast<int>(prefix_.size()) != g_.size) {
            throw Error("funcspec: table size must equal ground size");
        }
    } else {
        if (cycle_.empty()) throw Error("funcspec: omega rule needs a nonempty cycle");
    }
}

FuncSpec FuncSpec::table(Ground g, std::vector<QVec> rows) {
    if (!g.is_finite()) throw GroundMismatch("funcspec: table form requires finite ground");
    FuncSpec f;
    f.g_ = g;
    f.dim_ = rows.empty() ? 1 : static_cast<int>(rows[0].size());
    f.prefix_ = std::move(rows);
    f.validate();
    return f;
}

FuncSpec FuncSpec::eventually_periodic(std::vector<QVec> prefix, std::vector<QVec> cycle) {
    FuncSpec f;
    f.g_ = Ground::omega();
    f.dim_ = cycle.empty() ? 1 : static_cast<int>(cycle[0].size());
    f.prefix_ = std::move(prefix);
    f.cycle_ = std::move(cycle);
    f.validate();
    return f;
}

FuncSpec FuncSpec::constant(Ground g, QVec v) {
    if (g.is_finite()) {
        return table(g, std::vector<QVec>(static_cast<std::size_t>(g.size), v));
    }
    return eventually_periodic({}, {std::move(v)});
}

FuncSpec FuncSpec::zero(Ground g, int dim) {
    return constant(g, QVec(static_cast<std::size_t>(dim), Rat(0)));
}

const QVec& FuncSpec::eval(std::int64_t t) const {
    if (t < 0) throw Error("funcspec: negative argument");
    if (g_.is_finite()) {
        if (t >= g_.size) throw Error("funcspec: argument outside finite ground");
        return prefix_[static_cast<std::size_t>(t)];
    }
    if (t < prefix_len()) return prefix_[static_cast<std::size_t>(t)];
    return cycle_[static_cast<std::size_t>((t - prefix_len()) % period())];
}

Rat FuncSpec::sup_norm() const {
    Rat m(0);
    auto scan = [&](const std::vector<QVec>& rows) {
        for (const auto& r : rows) {
            for (const auto& x : r) m = max(m, x.abs());
        }
    };
    scan(prefix_);
    scan(cycle_);
    return m;
}

bool FuncSpec::nonneg() const {
    auto scan = [&](const std::vector<QVec>& rows) {
        for (const auto& r : rows) {
            for (const auto& x : r) {
                if (x.is_negative()) return false;
            }
        }
        return true;
    };
    return scan(prefix_) && scan(cycle_);
}

std::int64_t FuncSpec::decision_window() const {
    return g_.is_finite() ? g_.size : prefix_len() + period();
}

MSet FuncSpec::support() const {
    auto nonzero = [&](std::int64_t t) {
        const QVec& v = eval(t);
        return std::any_of(v.begin(), v.end(), [](const Rat& x) { return !x.is_zero(); });
    };
    if (g_.is_finite()) {
        std::uint64_t mask = 0;
        for (std::int64_t t = 0; t < g_.size; ++t) {
            if (nonzero(t)) mask |= 1ULL << t;
        }
        return MSet::finite(g_, mask);
    }
    std::vector<bool> prefix(static_cast<std::size_t>(prefix_len()));
    for (std::int64_t t = 0; t < prefix_len(); ++t) prefix[static_cast<std::size_t>(t)] = nonzero(t);
    std::vector<bool> res(static_cast<std::size_t>(period()));
    for (std::int64_t i = 0; i < period(); ++i) {
        std::int64_t t = prefix_len() + i;
        res[static_cast<std::size_t>(t % period())] = nonzero(t);
    }
    return MSet::omega(UPSet(std::move(prefix), std::move(res)));
}

namespace {

FuncSpec pointwise(const FuncSpec& f, const FuncSpec& g, const char* what,
                   QVec (*op)(const QVec&, const QVec&)) {
    require_same_ground(f.ground(), g.ground(), what);
    if (f.dim() != g.dim()) throw Error(std::string(what) + ": dimension mismatch");
    if (f.ground().is_finite()) {
        std::vector<QVec> rows;
        rows.reserve(static_cast<std::size_t>(f.ground().size));
        for (std::int64_t t = 0; t < f.ground().size; ++t) rows.push_back(op(f.eval(t), g.eval(t)));
        return FuncSpec::table(f.ground(), std::move(rows));
    }
    std::int64_t n = std::max(f.prefix_len(), g.prefix_len());
    std::int64_t q = lcm_checked(f.period(), g.period());
    std::vector<QVec> prefix;
    prefix.reserve(static_cast<std::size_t>(n));
    for (std::int64_t t = 0; t < n; ++t) prefix.push_back(op(f.eval(t), g.eval(t)));
    std::vector<QVec> cycle;
    cycle.reserve(static_cast<std::size_t>(q));
    for (std::int64_t i = 0; i < q; ++i) cycle.push_back(op(f.eval(n + i), g.eval(n + i)));
    return FuncSpec::eventually_periodic(std::move(prefix), std::move(cycle));
}

}  // namespace

FuncSpec FuncSpec::add(const FuncSpec& f, const FuncSpec& g) {
    return pointwise(f, g, "funcspec add", [](const QVec& a, const QVec& b) {
        QVec out(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
        return out;
    });
}

FuncSpec FuncSpec::sub(const FuncSpec& f, const FuncSpec& g) {
    return pointwise(f, g, "funcspec sub", [](const QVec& a, const QVec& b) {
        QVec out(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
        return out;
    });
}

FuncSpec FuncSpec::scale(const Rat& a, const FuncSpec& f) {
    auto scaled = [&](std::int64_t t) {
        QVec v = f.eval(t);
        for (auto& x : v) x = a * x;
        return v;
    };
    if (f.ground().is_finite()) {
        std::vector<QVec> rows;
        for (std::int64_t t = 0; t < f.ground().size; ++t) rows.push_back(scaled(t));
        return table(f.ground(), std::move(rows));
    }
    std::vector<QVec> prefix, cycle;
    for (std::int64_t t = 0; t < f.prefix_len(); ++t) prefix.push_back(scaled(t));
    for (std::int64_t i = 0; i < f.period(); ++i) cycle.push_back(scaled(f.prefix_len() + i));
    return eventually_periodic(std::move(prefix), std::move(cycle));
}

FuncSpec FuncSpec::chi_multiply(const FuncSpec& f, const MSet& A) {
    require_same_ground(f.ground(), A.ground(), "funcspec chi");
    auto masked = [&](std::int64_t t) {
        if (A.contains(t)) return f.eval(t);
        return QVec(static_cast<std::size_t>(f.dim()), Rat(0));
    };
    if (f.ground().is_finite()) {
        std::vector<QVec> rows;
        for (std::int64_t t = 0; t < f.ground().size; ++t) rows.push_back(masked(t));
        return table(f.ground(), std::move(rows));
    }
    std::int64_t n = std::max(f.prefix_len(), A.upset().prefix_len());
    std::int64_t q = lcm_checked(f.period(), A.upset().period());
    std::vector<QVec> prefix, cycle;
    for (std::int64_t t = 0; t < n; ++t) prefix.push_back(masked(t));
    for (std::int64_t i = 0; i < q; ++i) cycle.push_back(masked(n + i));
    return eventually_periodic(std::move(prefix), std::move(cycle));
}

bool FuncSpec::le_pointwise(const FuncSpec& f, const FuncSpec& g) {
    require_same_ground(f.ground(), g.ground(), "funcspec le");
    if (f.dim() != g.dim()) throw Error("funcspec le: dimension mismatch");
    std::int64_t n = std::max(f.prefix_len(), g.prefix_len());
    std::int64_t window = f.ground().is_finite()
                              ? f.ground().size
                              : n + lcm_checked(f.period(), g.period());
    for (std::int64_t t = 0; t < window; ++t) {
        const QVec& a = f.eval(t);
        const QVec& b = g.eval(t);
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (a[i] > b[i]) return false;
        }
    }
    return true;
}

}  // namespace nonadd
