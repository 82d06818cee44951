#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "srpoly/families.hpp"
#include "srpoly/roots.hpp"

namespace srpoly {

// Maximum distance allowed between an analytically placed zero and its
// oracle counterpart when the two root sets are matched as multisets.
inline constexpr double kRootMatchTol = 1e-8;

struct CheckResult {
    std::string name;
    bool pass = false;
    double measured = 0.0;
    double tolerance = 0.0;
};

struct VerifyReport {
    std::string subject;
    std::vector<CheckResult> checks;
    bool overall = true;

    void add(std::string name, bool pass, double measured, double tolerance);
};

// Predicts the zero structure of the member, then recomputes everything
// with the blind oracle and compares: case, counts, boundary multiplicity
// (by repeated synthetic division), off-circle signs, reciprocal pairing,
// per-root agreement and residuals. on_circle_tol is the oracle's
// circle-membership cutoff.
VerifyReport check_classification(const FamilySpec& spec, double on_circle_tol = kOnCircleTol);

// Confirms every interior zero of Q_n - c Q_{n-1} sits in its interlacing
// bracket, the escaped zero exists exactly when c is beyond a threshold
// and lies on the matching side, and at least n - 1 zeros stay interior.
VerifyReport check_interlacing(ChebKind kind, int n, double c);

// Audits the exact 2*T_n identities up to n_max, the even transform
// round-trip on random integer palindromes, and the reciprocal-pair law
// of the z preimages. n_max >= 2.
VerifyReport identity_audit(int n_max);

// Root trajectories x_i(c) and theta_i(c) over a c grid. Escaped roots
// keep their x value but carry NaN in the theta column.
struct SweepTable {
    enum class Direction { Increasing, Decreasing, Mixed };

    std::vector<double> c_grid;
    std::vector<std::vector<double>> xs;
    std::vector<std::vector<double>> thetas;
    std::vector<ZeroCase> cases;

    int width() const { return xs.empty() ? 0 : static_cast<int>(xs.front().size()); }

    std::string to_csv() const;
    static SweepTable from_csv(const std::string& text);

    // Every x_i column strictly increases along the grid (within slack).
    bool xs_increasing(double slack = 1e-12) const;
    // Observed common direction of the theta columns; not asserted.
    Direction theta_direction(double slack = 1e-12) const;
};

std::string direction_name(SweepTable::Direction d);

// Evenly spaced grid on [c_min, c_max] plus a small refinement around any
// threshold falling inside the range; grid points at c = 0 are dropped.
// Rows always hold n roots: at a threshold the extreme root is pinned to
// +-1, beyond it the escaped root fills its column.
SweepTable sweep(ChebKind kind, int n, double c_min, double c_max, int steps);

struct SuiteOptions {
    int cases_per_kind = 200;
    std::uint64_t seed = 12345;
};

struct SuiteResult {
    std::vector<VerifyReport> reports;
    int cases_run = 0;
    int cases_passed = 0;
    double max_root_deviation = 0.0;
    double max_residual = 0.0;
    bool pass = false;
};

// Fixed battery (identity audit plus pinned members) followed by
// randomized members of every kind and parity, drawn to cover all five
// zero cases. Deterministic for a fixed seed.
SuiteResult run_verify_suite(const SuiteOptions& opts = {});

} // namespace srpoly
