#include <doctest.h>

#include <cmath>
#include <random>
#include <string>
#include <vector>

#include "srpoly/errors.hpp"
#include "srpoly/verify.hpp"

using namespace srpoly;

namespace {

FamilySpec make(ChebKind k, int n, double lead, double next, Parity p) {
    FamilySpec s;
    s.kind = k;
    s.n = n;
    s.lead = lead;
    s.next = next;
    s.parity = p;
    return s;
}

bool has_check(const VerifyReport& vr, const std::string& name) {
    for (const CheckResult& c : vr.checks)
        if (c.name == name) return true;
    return false;
}

} // namespace

TEST_CASE("classification check passes for one member of each case") {
    const FamilySpec specs[] = {
        make(ChebKind::FirstKind, 2, 1, -0.5, Parity::Even), // all on circle
        make(ChebKind::FirstKind, 2, 1, -2, Parity::Even),   // two real positive
        make(ChebKind::FirstKind, 2, 1, 2, Parity::Even),    // two real negative
        make(ChebKind::FirstKind, 2, 1, -1, Parity::Even),   // boundary +1
        spec_from_c(ChebKind::SecondKind, 3, -4.0 / 3.0, Parity::Odd, 1.0), // boundary -1
    };
    for (const FamilySpec& s : specs) {
        const VerifyReport vr = check_classification(s);
        CHECK(vr.overall);
        for (const char* name : {"case", "boundary_multiplicity", "on_circle_count",
                                 "off_circle_count", "off_circle_signs",
                                 "reciprocal_pairing", "root_match", "residual"}) {
            CHECK(has_check(vr, name));
        }
        for (const CheckResult& c : vr.checks) {
            CHECK(c.pass);
        }
        CHECK_FALSE(vr.subject.empty());
    }
}

TEST_CASE("interlacing check across the three regimes") {
    CHECK(check_interlacing(ChebKind::FirstKind, 5, 0.7).overall);
    CHECK(check_interlacing(ChebKind::FirstKind, 5, -0.7).overall);
    CHECK(check_interlacing(ChebKind::SecondKind, 4, 2.0).overall);
    CHECK(check_interlacing(ChebKind::ThirdKind, 6, -3.0).overall);
    CHECK(check_interlacing(ChebKind::FourthKind, 3, 9.0 / 7.0).overall);
    CHECK_THROWS_AS(check_interlacing(ChebKind::FirstKind, 5, 0.0), ZeroInput);

    std::mt19937_64 rng(555);
    for (int trial = 0; trial < 60; ++trial) {
        const ChebKind kind = kAllKinds[rng() % 4];
        const int n = 2 + static_cast<int>(rng() % 12);
        const double c = -2.5 + 5.0 * (static_cast<double>(rng() >> 11) * 0x1.0p-53);
        if (std::abs(c) < 1e-6) continue;
        const VerifyReport vr = check_interlacing(kind, n, c);
        CHECK(vr.overall);
        CHECK(has_check(vr, "bracket_containment"));
        CHECK(has_check(vr, "escape_iff_outside"));
        CHECK(has_check(vr, "shohat_count"));
    }
}

TEST_CASE("identity audit is exact and bounded") {
    const VerifyReport vr = identity_audit(30);
    CHECK(vr.overall);
    for (const CheckResult& c : vr.checks) {
        CHECK(c.pass);
        if (c.name == "two_t_identities" || c.name == "transform_round_trip") {
            CHECK(c.measured == 0.0);
        }
    }
    CHECK_THROWS_AS(identity_audit(1), OutOfRange);
}

TEST_CASE("sweep grid construction and monotonicity") {
    const SweepTable t = sweep(ChebKind::FirstKind, 3, -0.9, 0.9, 11);
    // The 11-point grid hits c = 0, which is dropped, and no threshold
    // falls inside the range.
    CHECK(t.c_grid.size() == 10);
    CHECK(t.width() == 3);
    CHECK(t.xs_increasing());
    CHECK(t.theta_direction() == SweepTable::Direction::Decreasing);
    for (const std::vector<double>& row : t.xs) REQUIRE(row.size() == 3);
    for (const ZeroCase zc : t.cases) CHECK(zc == ZeroCase::AllOnCircle);

    CHECK_THROWS_AS(sweep(ChebKind::FirstKind, 3, 0.5, 0.5, 5), OutOfRange);
    CHECK_THROWS_AS(sweep(ChebKind::FirstKind, 3, -0.5, 0.5, 1), OutOfRange);
}

TEST_CASE("sweep refines near thresholds and pads escaped columns") {
    const SweepTable t = sweep(ChebKind::SecondKind, 3, -2.0, 2.0, 7);
    // 7 uniform points minus the c = 0 row plus 2 x 5 refinement points.
    CHECK(t.c_grid.size() == 16);
    CHECK(t.xs_increasing());
    bool saw_boundary = false;
    bool saw_nan = false;
    for (std::size_t r = 0; r < t.c_grid.size(); ++r) {
        if (t.cases[r] == ZeroCase::BoundaryPlusOne) {
            saw_boundary = true;
            CHECK(t.xs[r].back() == 1.0);
            CHECK(t.thetas[r].back() == 0.0);
        }
        if (t.cases[r] == ZeroCase::TwoRealPositive) {
            CHECK(t.xs[r].back() > 1.0);
            CHECK(std::isnan(t.thetas[r].back()));
            saw_nan = true;
        }
    }
    CHECK(saw_boundary);
    CHECK(saw_nan);
}

TEST_CASE("sweep CSV round-trips exactly") {
    const SweepTable t = sweep(ChebKind::FourthKind, 4, -0.8, 1.4, 9);
    const std::string csv = t.to_csv();
    const SweepTable back = SweepTable::from_csv(csv);
    CHECK(back.c_grid == t.c_grid);
    CHECK(back.cases == t.cases);
    CHECK(back.to_csv() == csv);
    // NaN cells survive the trip too.
    const SweepTable esc = sweep(ChebKind::FirstKind, 2, 1.2, 2.0, 4);
    CHECK(SweepTable::from_csv(esc.to_csv()).to_csv() == esc.to_csv());
}

TEST_CASE("CSV parser rejects malformed input") {
    CHECK_THROWS_AS(SweepTable::from_csv(""), Error);
    CHECK_THROWS_AS(SweepTable::from_csv("a,b,c\n"), Error);
    CHECK_THROWS_AS(SweepTable::from_csv("c,x_1,theta_1,case\n1,2\n"), Error);
    CHECK_THROWS_AS(SweepTable::from_csv("c,x_1,theta_1,case\noops,0,0,all_on_circle\n"),
                    Error);
}

TEST_CASE("direction classification") {
    SweepTable t;
    t.c_grid = {0.1, 0.2, 0.3};
    t.xs = {{0.0}, {0.0}, {0.0}};
    t.cases = {ZeroCase::AllOnCircle, ZeroCase::AllOnCircle, ZeroCase::AllOnCircle};
    t.thetas = {{1.0}, {2.0}, {3.0}};
    CHECK(t.theta_direction() == SweepTable::Direction::Increasing);
    t.thetas = {{3.0}, {2.0}, {1.0}};
    CHECK(t.theta_direction() == SweepTable::Direction::Decreasing);
    t.thetas = {{1.0}, {2.0}, {1.5}};
    CHECK(t.theta_direction() == SweepTable::Direction::Mixed);
    CHECK(direction_name(SweepTable::Direction::Increasing) == "increasing");
    CHECK(direction_name(SweepTable::Direction::Decreasing) == "decreasing");
    CHECK(direction_name(SweepTable::Direction::Mixed) == "mixed");
}

TEST_CASE("verification suite runs deterministically") {
    SuiteOptions opts;
    opts.cases_per_kind = 3;
    opts.seed = 99;
    const SuiteResult a = run_verify_suite(opts);
    CHECK(a.pass);
    CHECK(a.cases_run == 7 + 4 * 3);
    CHECK(a.cases_passed == a.cases_run);
    CHECK(a.max_root_deviation < kRootMatchTol);
    CHECK(a.max_residual < kResidualRelTol);
    REQUIRE(!a.reports.empty());
    CHECK(a.reports.front().subject == "identity audit up to n=30");

    const SuiteResult b = run_verify_suite(opts);
    REQUIRE(a.reports.size() == b.reports.size());
    for (std::size_t i = 0; i < a.reports.size(); ++i) {
        CHECK(a.reports[i].subject == b.reports[i].subject);
        REQUIRE(a.reports[i].checks.size() == b.reports[i].checks.size());
        for (std::size_t j = 0; j < a.reports[i].checks.size(); ++j) {
            CHECK(a.reports[i].checks[j].measured == b.reports[i].checks[j].measured);
        }
    }
    CHECK_THROWS_AS(run_verify_suite({0, 1}), OutOfRange);
}
