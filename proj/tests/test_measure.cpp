#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nonadd/measure.hpp"
#include "nonadd/properties.hpp"
#include "oracle_helpers.hpp"

using namespace nonadd;

namespace {

// m(A) = 1 iff A is infinite, 0 otherwise (the counterexample measure).
MeasurePtr infinite_indicator() {
    return Measure::card_class(Ground::omega(), {Rat(0)}, Rat(1));
}

// w_t = 2^-(t+1): total mass 1, sigma-additive.
MeasurePtr geometric_half() {
    return Measure::point_mass(Ground::omega(), {}, Rat(1, 2), Rat(1, 2));
}

}  // namespace

TEST_CASE("evaluation: infinite-indicator measure") {
    auto m = infinite_indicator();
    CHECK(m->eval(MSet::omega(UPSet::evens())).rat() == Rat(1));
    CHECK(m->eval(MSet::omega(UPSet::all())).rat() == Rat(1));
    CHECK(m->eval(MSet::omega(UPSet::finite_set(std::vector<std::int64_t>{0, 5, 9}))).rat() == Rat(0));
    CHECK(m->eval(MSet::omega(UPSet::empty_set())).rat() == Rat(0));
}

TEST_CASE("evaluation: geometric point mass sums in closed form") {
    auto m = geometric_half();
    // oracle: partial sums with a rigorous geometric tail bound
    auto full = oracle::geometric_partial(0.5L, 0.5L, 64);
    Scalar total = m->eval(MSet::omega(UPSet::all()));
    REQUIRE(total.exact());
    CHECK(std::fabs(total.rat().to_double() - static_cast<double>(full.sum)) <=
          static_cast<double>(full.tail_bound) + 1e-15);
    CHECK(total.rat() == Rat(1));

    auto even_part = oracle::geometric_partial(0.5L, 0.5L, 64, 0, 2);
    Scalar evens = m->eval(MSet::omega(UPSet::evens()));
    REQUIRE(evens.exact());
    CHECK(std::fabs(evens.rat().to_double() - static_cast<double>(even_part.sum)) <=
          static_cast<double>(even_part.tail_bound) + 1e-15);
    CHECK(evens.rat() == Rat(2, 3));
    CHECK(m->eval(MSet::omega(UPSet::odds())).rat() == Rat(1, 3));

    // prefix + tail mix: w = 5, 0, then 4^-(t+1) for t >= 2: tail sums to 1/48
    auto mixed = Measure::point_mass(Ground::omega(), {Rat(5), Rat(0)}, Rat(1, 4), Rat(1, 4));
    CHECK(mixed->eval(MSet::omega(UPSet::all())).rat() == Rat(5) + Rat(1, 48));
    CHECK(point_mass_total(Measure::PointMass{{Rat(5), Rat(0)}, Rat(1, 4), Rat(1, 4)}).rat() ==
          Rat(5) + Rat(1, 48));
}

TEST_CASE("evaluation: any family on the empty set gives zero") {
    CHECK(infinite_indicator()->eval(MSet::omega(UPSet::empty_set())).rat() == Rat(0));
    CHECK(geometric_half()->eval(MSet::omega(UPSet::empty_set())).rat() == Rat(0));
    Ground g = Ground::finite(3);
    auto t = Measure::table(g, {Rat(0), Rat(1), Rat(1), Rat(3), Rat(1), Rat(2), Rat(2), Rat(4)});
    CHECK(t->eval(MSet::empty(g)).rat() == Rat(0));
}

TEST_CASE("evaluation: distortion by sqrt and by piecewise-linear maps") {
    Measure::PointMass base{{}, Rat(1, 4), Rat(1, 4)};  // w_t = 4^-(t+1)
    auto m = Measure::distortion(Ground::omega(), GSpec::sqrt(), base);
    // mu(all) = 1/3; sqrt(1/3) is irrational: numeric with tight radius
    Scalar s = m->eval(MSet::omega(UPSet::all()));
    CHECK(!s.exact());
    CHECK(s.value() == doctest::Approx(std::sqrt(1.0 / 3.0)).epsilon(1e-12));
    CHECK(s.radius() < 1e-12);
    // mu({0}) = 1/4: exact square
    CHECK(m->singleton(0).rat() == Rat(1, 2));

    auto pwl = GSpec::pwl({{Rat(1, 8), Rat(1, 4)}, {Rat(1), Rat(1, 2)}});
    auto mp = Measure::distortion(Ground::omega(), pwl, base);
    Scalar v = mp->eval(MSet::omega(UPSet::singleton(0)));
    REQUIRE(v.exact());
    Rat x(1, 4);
    Rat expect = Rat(1, 4) + (Rat(1, 2) - Rat(1, 4)) / (Rat(1) - Rat(1, 8)) * (x - Rat(1, 8));
    CHECK(v.rat() == expect);
}

TEST_CASE("gspec validation rejects non-concave or non-monotone maps") {
    CHECK_THROWS_AS(GSpec::pwl({{Rat(1), Rat(1)}, {Rat(2), Rat(3)}}), Error);     // convex
    CHECK_THROWS_AS(GSpec::pwl({{Rat(1), Rat(1)}, {Rat(2), Rat(1, 2)}}), Error);  // decreasing
    CHECK_THROWS_AS(GSpec::pwl({}), Error);
    CHECK_NOTHROW(GSpec::pwl({{Rat(1), Rat(2)}, {Rat(2), Rat(3)}}));
}

TEST_CASE("measure construction validates the zero-at-empty rule") {
    Ground g = Ground::finite(2);
    CHECK_THROWS_AS(Measure::table(g, {Rat(1), Rat(0), Rat(0), Rat(0)}), Error);
    CHECK_THROWS_AS(Measure::card_class(Ground::omega(), {Rat(1)}, Rat(0)), Error);
    CHECK_THROWS_AS(Measure::point_mass(Ground::omega(), {}, Rat(1), Rat(1)), Error);
    CHECK_THROWS_AS(Measure::point_mass(Ground::omega(), {Rat(-1)}, Rat(0), Rat(0)), Error);
}

TEST_CASE("properties: table with a direct monotonicity violation") {
    Ground g = Ground::finite(3);
    // m({0}) = 2 > m({0,1}) = 1
    std::vector<Rat> v(8, Rat(0));
    v[0b001] = Rat(2);
    v[0b011] = Rat(1);
    v[0b111] = Rat(3);
    auto m = Measure::table(g, v);
    auto rep = check_properties(*m);
    REQUIRE(rep.refuted(Prop::Monotone));
    const Witness& w = *rep.of(Prop::Monotone).witness;
    CHECK(w.sets[0].subset_of(w.sets[1]));
    CHECK(recheck_witness(*m, Prop::Monotone, w));
}

TEST_CASE("properties: point mass is sigma-additive and a submeasure") {
    auto rep = check_properties(*geometric_half());
    for (Prop p : kAllProps) CHECK(rep.proved(p));
}

TEST_CASE("properties: the infinite-indicator measure") {
    auto m = infinite_indicator();
    auto rep = check_properties(*m);
    CHECK(rep.proved(Prop::Monotone));
    CHECK(rep.proved(Prop::Subadditive));
    CHECK(rep.proved(Prop::Submeasure));
    CHECK(rep.proved(Prop::NullAdditive));
    // evens + odds = all: 1 != 1 + 1
    REQUIRE(rep.refuted(Prop::FinitelyAdditive));
    const Witness& w = *rep.of(Prop::FinitelyAdditive).witness;
    CHECK(recheck_witness(*m, Prop::FinitelyAdditive, w));
    CHECK(w.sets[0].disjoint_with(w.sets[1]));
    // singleton decomposition of an infinite set refutes sigma-subadditivity
    REQUIRE(rep.refuted(Prop::SigmaSubadditive));
    CHECK(recheck_witness(*m, Prop::SigmaSubadditive, *rep.of(Prop::SigmaSubadditive).witness));
    CHECK(rep.refuted(Prop::SigmaAdditive));
    REQUIRE(rep.refuted(Prop::Exhaustive));
    CHECK(recheck_witness(*m, Prop::Exhaustive, *rep.of(Prop::Exhaustive).witness));
    REQUIRE(rep.refuted(Prop::OContinuous));
    CHECK(recheck_witness(*m, Prop::OContinuous, *rep.of(Prop::OContinuous).witness));
    REQUIRE(rep.refuted(Prop::PropertySigma));
    CHECK(recheck_witness(*m, Prop::PropertySigma, *rep.of(Prop::PropertySigma).witness));
}

TEST_CASE("properties: non-monotone theta is caught with a witness") {
    auto m = Measure::card_class(Ground::omega(), {Rat(0), Rat(3), Rat(1)}, Rat(5));
    auto rep = check_properties(*m);
    REQUIRE(rep.refuted(Prop::Monotone));
    CHECK(recheck_witness(*m, Prop::Monotone, *rep.of(Prop::Monotone).witness));
    CHECK(rep.refuted(Prop::Submeasure));
}

TEST_CASE("properties: sqrt distortion is a submeasure but not additive") {
    Measure::PointMass base{{}, Rat(1, 2), Rat(1, 2)};
    auto m = Measure::distortion(Ground::omega(), GSpec::sqrt(), base);
    auto rep = check_properties(*m);
    CHECK(rep.proved(Prop::Monotone));
    CHECK(rep.proved(Prop::Subadditive));
    CHECK(rep.proved(Prop::SigmaSubadditive));
    CHECK(rep.proved(Prop::Submeasure));
    CHECK(rep.proved(Prop::NullAdditive));
    CHECK(rep.proved(Prop::Exhaustive));
    CHECK(rep.proved(Prop::OContinuous));
    REQUIRE(rep.refuted(Prop::FinitelyAdditive));
    CHECK(recheck_witness(*m, Prop::FinitelyAdditive, *rep.of(Prop::FinitelyAdditive).witness));
}

TEST_CASE("properties: linear distortion stays additive") {
    Measure::PointMass base{{Rat(1), Rat(2)}, Rat(0), Rat(0)};
    auto g = GSpec::pwl({{Rat(1), Rat(1, 2)}, {Rat(2), Rat(1)}});
    auto m = Measure::distortion(Ground::omega(), g, base);
    auto rep = check_properties(*m);
    CHECK(rep.proved(Prop::SigmaAdditive));
    CHECK(rep.proved(Prop::FinitelyAdditive));
}

TEST_CASE("properties: sums and scales combine certificates") {
    auto pm = geometric_half();
    auto sum = Measure::sum(pm, pm);
    auto rep = check_properties(*sum);
    for (Prop p : kAllProps) CHECK(rep.proved(p));

    auto mixed = Measure::sum(pm, infinite_indicator());
    auto rep2 = check_properties(*mixed);
    CHECK(rep2.proved(Prop::Monotone));
    CHECK(rep2.proved(Prop::Subadditive));
    REQUIRE(rep2.refuted(Prop::FinitelyAdditive));
    CHECK(recheck_witness(*mixed, Prop::FinitelyAdditive, *rep2.of(Prop::FinitelyAdditive).witness));
    REQUIRE(rep2.refuted(Prop::SigmaSubadditive));
    CHECK(recheck_witness(*mixed, Prop::SigmaSubadditive, *rep2.of(Prop::SigmaSubadditive).witness));

    auto zero = Measure::scale(Rat(0), infinite_indicator());
    auto rep3 = check_properties(*zero);
    for (Prop p : kAllProps) CHECK(rep3.proved(p));

    auto scaled = Measure::scale(Rat(3), infinite_indicator());
    auto rep4 = check_properties(*scaled);
    CHECK(rep4.refuted(Prop::FinitelyAdditive));
    CHECK(rep4.proved(Prop::Monotone));
}

TEST_CASE("properties: exhaustive table check on random finite measures") {
    oracle::XorShift rng(7);
    for (int trial = 0; trial < 10; ++trial) {
        Ground g = Ground::finite(4);
        std::vector<Rat> v(16);
        v[0] = Rat(0);
        for (int i = 1; i < 16; ++i) v[static_cast<std::size_t>(i)] = Rat(rng.below(6), 1 + rng.below(3));
        auto m = Measure::table(g, v);
        auto rep = check_properties(*m);
        // Finite ground: exhaustive and o-continuous hold trivially.
        CHECK(rep.proved(Prop::Exhaustive));
        CHECK(rep.proved(Prop::OContinuous));
        // Whatever was refuted must carry a recheckable witness.
        for (Prop p : kAllProps) {
            if (rep.refuted(p)) {
                REQUIRE(rep.of(p).witness.has_value());
                CHECK(recheck_witness(*m, p, *rep.of(p).witness));
            }
        }
    }
}
