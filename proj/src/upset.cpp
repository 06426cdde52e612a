#include "nonadd/upset.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace nonadd {

namespace {

constexpr std::int64_t kMaxPeriod = 1 << 20;
constexpr std::int64_t kMaxPrefix = 1 << 22;

std::int64_t lcm64(std::int64_t a, std::int64_t b) {
    std::int64_t g = std::gcd(a, b);
    std::int64_t l = a / g * b;
    if (l > kMaxPeriod) throw LimitExceeded("upset: combined period exceeds limit");
    return l;
}

}  // namespace

UPSet::UPSet(std::vector<bool> prefix, std::vector<bool> residues)
    : prefix_(std::move(prefix)), period_(static_cast<std::int64_t>(residues.size())),
      residues_(std::move(residues)) {
    if (period_ < 1) throw Error("upset: period must be >= 1");
    if (period_ > kMaxPeriod) throw LimitExceeded("upset: period exceeds limit");
    if (prefix_len() > kMaxPrefix) throw LimitExceeded("upset: prefix exceeds limit");
    canonicalize();
}

UPSet UPSet::make(const std::vector<bool>& prefix_bits, std::int64_t period,
                  std::span<const std::int64_t> residue_set) {
    if (period < 1) throw Error("upset: period must be >= 1");
    std::vector<bool> res(static_cast<std::size_t>(period), false);
    for (std::int64_t r : residue_set) {
        if (r < 0 || r >= period) throw Error("upset: residue out of range");
        res[static_cast<std::size_t>(r)] = true;
    }
    return UPSet(prefix_bits, std::move(res));
}

void UPSet::canonicalize() {
    // Minimal period: smallest divisor d of p with residues d-periodic.
    for (std::int64_t d = 1; d <= period_; ++d) {
        if (period_ % d != 0) continue;
        bool ok = true;
        for (std::int64_t i = 0; ok && i < period_; ++i) {
            if (residues_[static_cast<std::size_t>(i)] !=
                residues_[static_cast<std::size_t>(i % d)]) {
                ok = false;
            }
        }
        if (ok) {
            residues_.resize(static_cast<std::size_t>(d));
            period_ = d;
            break;
        }
    }
    // Minimal prefix: drop trailing bits that already match the residue rule.
    while (!prefix_.empty()) {
        std::int64_t n = prefix_len() - 1;
        if (prefix_.back() == residues_[static_cast<std::size_t>(n % period_)]) {
            prefix_.pop_back();
        } else {
            break;
        }
    }
}

bool UPSet::prefix_none() const {
    return std::none_of(prefix_.begin(), prefix_.end(), [](bool b) { return b; });
}

bool UPSet::residues_none() const {
    return std::none_of(residues_.begin(), residues_.end(), [](bool b) { return b; });
}

UPSet UPSet::all() { return UPSet({}, {true}); }

UPSet UPSet::evens() { return UPSet({}, {true, false}); }

UPSet UPSet::odds() { return UPSet({}, {false, true}); }

UPSet UPSet::singleton(std::int64_t n) {
    if (n < 0) throw Error("upset: negative element");
    std::vector<bool> prefix(static_cast<std::size_t>(n + 1), false);
    prefix.back() = true;
    return UPSet(std::move(prefix), {false});
}

UPSet UPSet::finite_set(std::span<const std::int64_t> elems) {
    std::int64_t hi = -1;
    for (auto e : elems) {
        if (e < 0) throw Error("upset: negative element");
        hi = std::max(hi, e);
    }
    std::vector<bool> prefix(static_cast<std::size_t>(hi + 1), false);
    for (auto e : elems) prefix[static_cast<std::size_t>(e)] = true;
    return UPSet(std::move(prefix), {false});
}

UPSet UPSet::range(std::int64_t lo, std::int64_t hi) {
    if (lo < 0 || hi < lo) throw Error("upset: bad range");
    std::vector<bool> prefix(static_cast<std::size_t>(hi), false);
    for (std::int64_t n = lo; n < hi; ++n) prefix[static_cast<std::size_t>(n)] = true;
    return UPSet(std::move(prefix), {false});
}

UPSet UPSet::tail(std::int64_t lo) {
    if (lo < 0) throw Error("upset: bad tail start");
    std::vector<bool> prefix(static_cast<std::size_t>(lo), false);
    return UPSet(std::move(prefix), {true});
}

UPSet UPSet::residue_class(std::int64_t r, std::int64_t p) {
    if (p < 1 || r < 0 || r >= p) throw Error("upset: bad residue class");
    std::vector<bool> res(static_cast<std::size_t>(p), false);
    res[static_cast<std::size_t>(r)] = true;
    return UPSet({}, std::move(res));
}

bool UPSet::contains(std::int64_t n) const {
    if (n < 0) return false;
    if (n < prefix_len()) return prefix_[static_cast<std::size_t>(n)];
    return residues_[static_cast<std::size_t>(n % period_)];
}

std::optional<std::int64_t> UPSet::cardinality() const {
    if (!is_finite()) return std::nullopt;
    return static_cast<std::int64_t>(std::count(prefix_.begin(), prefix_.end(), true));
}

std::optional<std::int64_t> UPSet::min_element() const {
    for (std::int64_t n = 0; n < prefix_len(); ++n) {
        if (prefix_[static_cast<std::size_t>(n)]) return n;
    }
    for (std::int64_t i = 0; i < period_; ++i) {
        std::int64_t n = prefix_len() + i;
        if (residues_[static_cast<std::size_t>(n % period_)]) return n;
    }
    return std::nullopt;
}

std::vector<std::int64_t> UPSet::residues() const {
    std::vector<std::int64_t> out;
    for (std::int64_t i = 0; i < period_; ++i) {
        if (residues_[static_cast<std::size_t>(i)]) out.push_back(i);
    }
    return out;
}

UPSet UPSet::complement() const {
    std::vector<bool> prefix = prefix_;
    prefix.flip();
    std::vector<bool> res = residues_;
    res.flip();
    return UPSet(std::move(prefix), std::move(res));
}

namespace {

UPSet combine(const UPSet& a, const UPSet& b, bool (*op)(bool, bool)) {
    std::int64_t n = std::max(a.prefix_len(), b.prefix_len());
    std::int64_t p = lcm64(a.period(), b.period());
    std::vector<bool> prefix(static_cast<std::size_t>(n));
    for (std::int64_t i = 0; i < n; ++i) {
        prefix[static_cast<std::size_t>(i)] = op(a.contains(i), b.contains(i));
    }
    std::vector<bool> res(static_cast<std::size_t>(p));
    for (std::int64_t i = 0; i < p; ++i) {
        std::int64_t t = n + i;
        res[static_cast<std::size_t>(t % p)] = op(a.contains(t), b.contains(t));
    }
    return UPSet(std::move(prefix), std::move(res));
}

}  // namespace

UPSet UPSet::union_of(const UPSet& a, const UPSet& b) {
    return combine(a, b, [](bool x, bool y) { return x || y; });
}

UPSet UPSet::intersect(const UPSet& a, const UPSet& b) {
    return combine(a, b, [](bool x, bool y) { return x && y; });
}

UPSet UPSet::difference(const UPSet& a, const UPSet& b) {
    return combine(a, b, [](bool x, bool y) { return x && !y; });
}

bool UPSet::subset_of(const UPSet& other) const {
    return difference(*this, other).is_empty();
}

bool UPSet::disjoint_with(const UPSet& other) const {
    return intersect(*this, other).is_empty();
}

std::vector<std::int64_t> UPSet::elements_below(std::int64_t bound) const {
    std::vector<std::int64_t> out;
    for (std::int64_t n = 0; n < bound; ++n) {
        if (contains(n)) out.push_back(n);
    }
    return out;
}

std::int64_t UPSet::count_below(std::int64_t bound) const {
    std::int64_t c = 0;
    for (std::int64_t n = 0; n < bound; ++n) c += contains(n) ? 1 : 0;
    return c;
}

std::string UPSet::to_literal() const {
    if (*this == all()) return "all";
    if (*this == evens()) return "evens";
    if (*this == odds()) return "odds";
    if (is_finite()) {
        std::ostringstream os;
        os << "finite:[";
        bool first = true;
        for (auto e : elements_below(prefix_len())) {
            if (!first) os << ",";
            os << e;
            first = false;
        }
        os << "]";
        return os.str();
    }
    std::ostringstream os;
    os << "upset:N=" << prefix_len() << ";prefix=";
    for (bool b : prefix_) os << (b ? '1' : '0');
    os << ";p=" << period_ << ";R={";
    bool first = true;
    for (auto r : residues()) {
        if (!first) os << ",";
        os << r;
        first = false;
    }
    os << "}";
    return os.str();
}

}  // namespace nonadd
