#pragma once

#include <cstdint>
#include <vector>

#include "nonadd/mset.hpp"
#include "nonadd/rational.hpp"

namespace nonadd {

using QVec = std::vector<Rat>;

/// Bounded f: T -> R^d with exact rational values. On finite grounds a value
/// table; on omega an eventually periodic rule: explicit values on 0..N-1,
/// then a cycle of period q. Closed under add/sub/scale and multiplication by
/// the indicator of an ultimately periodic set, so combinators materialize
/// back into the same shape.
class FuncSpec {
public:
    static FuncSpec table(Ground g, std::vector<QVec> rows);
    static FuncSpec eventually_periodic(std::vector<QVec> prefix, std::vector<QVec> cycle);
    static FuncSpec constant(Ground g, QVec v);
    static FuncSpec zero(Ground g, int dim);

    const Ground& ground() const { return g_; }
    int dim() const { return dim_; }
    std::int64_t prefix_len() const { return static_cast<std::int64_t>(prefix_.size()); }
    std::int64_t period() const { return static_cast<std::int64_t>(cycle_.empty() ? 1 : cycle_.size()); }

    const QVec& eval(std::int64_t t) const;
    double eval_num(std::int64_t t, int component) const { return eval(t)[component].to_double(); }

    Rat sup_norm() const;  // max-norm over the whole domain, exact
    bool is_zero() const { return sup_norm().is_zero(); }
    bool nonneg() const;   // d-wise f(t) >= 0 everywhere

    MSet support() const;  // {t : f(t) != 0}

    static FuncSpec add(const FuncSpec& f, const FuncSpec& g);
    static FuncSpec sub(const FuncSpec& f, const FuncSpec& g);
    static FuncSpec scale(const Rat& a, const FuncSpec& f);
    static FuncSpec chi_multiply(const FuncSpec& f, const MSet& A);

    /// f(t) <= g(t) componentwise for every t (decided on one full window).
    static bool le_pointwise(const FuncSpec& f, const FuncSpec& g);

    bool operator==(const FuncSpec&) const = default;

private:
    FuncSpec() = default;
    void validate() const;
    /// Window length that decides any pointwise predicate.
    std::int64_t decision_window() const;

    Ground g_ = Ground::omega();
    int dim_ = 1;
    std::vector<QVec> prefix_;  // finite ground: the whole table
    std::vector<QVec> cycle_;   // omega only, size q >= 1
};

}  // namespace nonadd
