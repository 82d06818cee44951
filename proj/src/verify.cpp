#include "srpoly/verify.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <random>
#include <string_view>

#include "srpoly/errors.hpp"
#include "srpoly/io.hpp"
#include "srpoly/transform.hpp"

namespace srpoly {

void VerifyReport::add(std::string name, bool pass, double measured, double tolerance) {
    checks.push_back({std::move(name), pass, measured, tolerance});
    overall = overall && pass;
}

namespace {

constexpr double kEndpointTheta = 1e-12;

double uniform(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

std::string spec_subject(const FamilySpec& spec) {
    std::string s(1, kind_letter(spec.kind));
    s += " n=" + std::to_string(spec.n);
    s += " " + parity_name(spec.parity);
    s += " lead=" + format_number(spec.lead);
    s += " next=" + format_number(spec.next);
    return s;
}

std::vector<std::complex<double>> expand_rootset(const RootSet& rs) {
    std::vector<std::complex<double>> out;
    for (const CircleZero& cz : rs.circle) {
        const bool endpoint =
            cz.theta < kEndpointTheta || std::numbers::pi - cz.theta < kEndpointTheta;
        const std::complex<double> z =
            endpoint ? std::complex<double>(cz.theta < kEndpointTheta ? 1.0 : -1.0, 0.0)
                     : std::polar(1.0, cz.theta);
        for (int k = 0; k < cz.multiplicity; ++k) {
            out.push_back(z);
            if (!endpoint) out.push_back(std::conj(z));
        }
    }
    for (double x : rs.real_off) out.emplace_back(x, 0.0);
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.real() != b.real()) return a.real() < b.real();
        return a.imag() < b.imag();
    });
    return out;
}

// Greedy nearest-neighbour matching of two equal-size multisets.
double match_deviation(const std::vector<std::complex<double>>& a,
                       std::vector<std::complex<double>> b) {
    double worst = 0.0;
    for (const auto& z : a) {
        std::size_t best = 0;
        double dist = std::numeric_limits<double>::infinity();
        for (std::size_t j = 0; j < b.size(); ++j) {
            double d = std::abs(z - b[j]);
            if (d < dist) {
                dist = d;
                best = j;
            }
        }
        worst = std::max(worst, dist);
        b.erase(b.begin() + static_cast<std::ptrdiff_t>(best));
    }
    return worst;
}

// Backward-error style residual: |P(z)| against the coefficient sum scaled
// by powers of |z|, so interior and exterior roots are judged alike.
double relative_residual(const SelfReciprocalPoly& p, const std::complex<double>& z) {
    const auto& c = p.poly().coeffs();
    const double m = std::max(1.0, std::abs(z));
    double scale = 0.0;
    double pw = 1.0;
    for (double v : c) {
        scale += std::abs(v) * pw;
        pw *= m;
    }
    return std::abs(p.eval(z)) / scale;
}

int endpoint_multiplicity(const RootSet& rs, double at) {
    for (const CircleZero& cz : rs.circle) {
        if (at > 0.0 && cz.theta < kEndpointTheta) return cz.multiplicity;
        if (at < 0.0 && std::numbers::pi - cz.theta < kEndpointTheta) return cz.multiplicity;
    }
    return 0;
}

ZeroCase infer_case(const RootSet& oracle, Parity parity) {
    if (!oracle.real_off.empty())
        return oracle.real_off.front() < 0.0 ? ZeroCase::TwoRealNegative
                                             : ZeroCase::TwoRealPositive;
    if (endpoint_multiplicity(oracle, 1.0) >= 2) return ZeroCase::BoundaryPlusOne;
    if (endpoint_multiplicity(oracle, -1.0) >= (parity == Parity::Odd ? 3 : 2))
        return ZeroCase::BoundaryMinusOne;
    return ZeroCase::AllOnCircle;
}

} // namespace

VerifyReport check_classification(const FamilySpec& spec, double on_circle_tol) {
    const Classification cls = classify(spec);
    const SelfReciprocalPoly member = construct(spec);
    const RootSet analytic = full_rootset(member, spec);
    const RootSet oracle = full_rootset(member, std::nullopt, on_circle_tol);

    VerifyReport vr;
    vr.subject = spec_subject(spec);

    const ZeroCase inferred = infer_case(oracle, spec.parity);
    vr.add("case", inferred == cls.zero_case, inferred == cls.zero_case ? 0.0 : 1.0, 0.0);

    int bmult = 0;
    if (inferred == ZeroCase::BoundaryPlusOne) bmult = endpoint_multiplicity(oracle, 1.0);
    if (inferred == ZeroCase::BoundaryMinusOne) bmult = endpoint_multiplicity(oracle, -1.0);
    vr.add("boundary_multiplicity", bmult == cls.boundary_multiplicity,
           static_cast<double>(bmult), static_cast<double>(cls.boundary_multiplicity));

    const int off = static_cast<int>(oracle.real_off.size());
    const int on = oracle.total_count() - off - bmult;
    vr.add("on_circle_count", on == cls.on_circle, static_cast<double>(on),
           static_cast<double>(cls.on_circle));
    vr.add("off_circle_count", off == cls.off_circle, static_cast<double>(off),
           static_cast<double>(cls.off_circle));

    bool signs_ok = true;
    for (double v : oracle.real_off) {
        if (cls.zero_case == ZeroCase::TwoRealNegative)
            signs_ok = signs_ok && v < 0.0;
        else if (cls.zero_case == ZeroCase::TwoRealPositive)
            signs_ok = signs_ok && v > 0.0;
        else
            signs_ok = false;
    }
    vr.add("off_circle_signs", signs_ok, signs_ok ? 0.0 : 1.0, 0.0);

    double pair_dev = 0.0;
    const std::vector<double>& ro = oracle.real_off; // ascending
    for (std::size_t i = 0; 2 * i + 1 < ro.size(); ++i)
        pair_dev = std::max(pair_dev, std::abs(ro[i] * ro[ro.size() - 1 - i] - 1.0));
    vr.add("reciprocal_pairing", pair_dev <= 1e-10, pair_dev, 1e-10);

    const auto za = expand_rootset(analytic);
    const auto zo = expand_rootset(oracle);
    if (za.size() != zo.size()) {
        vr.add("root_match", false, -1.0, kRootMatchTol);
    } else {
        const double dev = match_deviation(za, zo);
        vr.add("root_match", dev <= kRootMatchTol, dev, kRootMatchTol);
    }

    double rmax = 0.0;
    for (const auto& z : za) rmax = std::max(rmax, relative_residual(member, z));
    for (const auto& z : zo) rmax = std::max(rmax, relative_residual(member, z));
    vr.add("residual", rmax <= kResidualRelTol, rmax, kResidualRelTol);
    return vr;
}

VerifyReport check_interlacing(ChebKind kind, int n, double c) {
    if (c == 0.0) throw ZeroInput("check_interlacing: c must be nonzero");
    auto [f_minus, f_plus] = thresholds(kind, n);
    const ZeroCase zc = case_from_c(c, f_minus, f_plus);
    const std::vector<double> xs = interior_roots(kind, n, c);
    const std::optional<double> ext = exterior_root(kind, n, c);
    const std::vector<double> zn = cheb_zeros(kind, n);
    const std::vector<double> zn1 = cheb_zeros(kind, n - 1);

    VerifyReport vr;
    vr.subject =
        std::string(1, kind_letter(kind)) + " n=" + std::to_string(n) + " c=" + format_number(c);

    // Roots align with the brackets from the left for c > 0 and from the
    // right for c < 0 (the escaped root, if any, leaves the far end open).
    double violation = 0.0;
    const int sz = static_cast<int>(xs.size());
    for (int j = 0; j < sz; ++j) {
        double lo = 0.0;
        double hi = 0.0;
        if (c > 0.0) {
            lo = zn[static_cast<std::size_t>(j)];
            hi = j < n - 1 ? zn1[static_cast<std::size_t>(j)] : 1.0;
        } else {
            const int idx = j + (n - sz);
            lo = idx == 0 ? -1.0 : zn1[static_cast<std::size_t>(idx - 1)];
            hi = zn[static_cast<std::size_t>(idx)];
        }
        violation = std::max({violation, lo - xs[static_cast<std::size_t>(j)],
                              xs[static_cast<std::size_t>(j)] - hi});
    }
    vr.add("bracket_containment", violation <= 0.0, std::max(violation, 0.0), 0.0);

    const bool boundary =
        zc == ZeroCase::BoundaryPlusOne || zc == ZeroCase::BoundaryMinusOne;
    const int total = sz + (ext ? 1 : 0);
    const bool count_ok = boundary ? total == n || total == n - 1 : total == n;
    vr.add("count", count_ok, static_cast<double>(total), static_cast<double>(n));

    const bool outside =
        zc == ZeroCase::TwoRealPositive || zc == ZeroCase::TwoRealNegative;
    bool escape_ok = ext.has_value() == outside;
    if (ext) {
        if (zc == ZeroCase::TwoRealPositive) escape_ok = escape_ok && *ext > 1.0;
        if (zc == ZeroCase::TwoRealNegative) escape_ok = escape_ok && *ext < -1.0;
    }
    vr.add("escape_iff_outside", escape_ok, escape_ok ? 0.0 : 1.0, 0.0);

    vr.add("shohat_count", sz >= n - 1, static_cast<double>(sz), static_cast<double>(n - 1));
    return vr;
}

VerifyReport identity_audit(int n_max) {
    if (n_max < 2) throw OutOfRange("identity_audit: n_max must be at least 2");
    VerifyReport vr;
    vr.subject = "identity audit up to n=" + std::to_string(n_max);

    double worst_coeff = 0.0;
    for (ChebKind kind : {ChebKind::SecondKind, ChebKind::ThirdKind, ChebKind::FourthKind}) {
        const int start = kind == ChebKind::SecondKind ? 2 : 1;
        for (int n = start; n <= n_max; ++n) {
            const IdentityPair pair = two_t_identity(kind, n);
            const int deg = std::max(pair.left.degree(), pair.right.degree());
            for (int j = 0; j <= deg; ++j)
                worst_coeff = std::max(worst_coeff, std::abs(pair.left[j] - pair.right[j]));
        }
    }
    vr.add("two_t_identities", worst_coeff == 0.0, worst_coeff, 0.0);

    std::mt19937_64 rng(0x5eedc0deULL);
    double worst_rt = 0.0;
    for (int i = 0; i < 100; ++i) {
        const int m = 1 + static_cast<int>(rng() % 12);
        std::vector<double> p(static_cast<std::size_t>(2 * m) + 1, 0.0);
        for (int j = 0; j <= m; ++j) {
            double v = static_cast<double>(static_cast<long long>(rng() % 19) - 9);
            if (j == 0 && v == 0.0) v = 1.0;
            p[static_cast<std::size_t>(j)] = v;
            p[static_cast<std::size_t>(2 * m - j)] = v;
        }
        const SelfReciprocalPoly sr = SelfReciprocalPoly::exact(DensePolynomial(p));
        const SelfReciprocalPoly back = from_cheb(to_cheb(sr));
        const auto& a = sr.poly().coeffs();
        const auto& b = back.poly().coeffs();
        if (a.size() != b.size()) {
            worst_rt = std::numeric_limits<double>::infinity();
        } else {
            for (std::size_t j = 0; j < a.size(); ++j)
                worst_rt = std::max(worst_rt, std::abs(a[j] - b[j]));
        }
    }
    vr.add("transform_round_trip", worst_rt == 0.0, worst_rt, 0.0);

    double worst_pair = 0.0;
    for (int i = 0; i < 100; ++i) {
        const double inside = 2.0 * uniform(rng) - 1.0;
        const auto [zi1, zi2] = z_pair_from_x(inside);
        worst_pair = std::max(worst_pair, std::abs(zi1 * zi2 - 1.0));
        double outside = 1.0 + 9.0 * uniform(rng);
        if (rng() % 2 == 1) outside = -outside;
        const auto [zo1, zo2] = z_pair_from_x(outside);
        worst_pair = std::max(worst_pair, std::abs(zo1 * zo2 - 1.0));
    }
    vr.add("z_pair_product", worst_pair <= 1e-13, worst_pair, 1e-13);
    return vr;
}

namespace {

std::vector<std::string_view> split(std::string_view text, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = text.find(sep, start);
        if (pos == std::string_view::npos) {
            out.push_back(text.substr(start));
            return out;
        }
        out.push_back(text.substr(start, pos - start));
        start = pos + 1;
    }
}

double parse_csv_double(std::string_view sv) {
    double v = 0.0;
    const auto res = std::from_chars(sv.data(), sv.data() + sv.size(), v);
    if (res.ec != std::errc{} || res.ptr != sv.data() + sv.size())
        throw Error("sweep CSV: bad number '" + std::string(sv) + "'");
    return v;
}

} // namespace

std::string SweepTable::to_csv() const {
    const int n = width();
    std::string s = "c";
    for (int i = 1; i <= n; ++i) s += ",x_" + std::to_string(i);
    for (int i = 1; i <= n; ++i) s += ",theta_" + std::to_string(i);
    s += ",case\n";
    for (std::size_t r = 0; r < c_grid.size(); ++r) {
        s += format_number(c_grid[r]);
        for (double x : xs[r]) {
            s += ",";
            s += format_number(x);
        }
        for (double th : thetas[r]) {
            s += ",";
            s += format_number(th);
        }
        s += ",";
        s += case_name(cases[r]);
        s += "\n";
    }
    return s;
}

SweepTable SweepTable::from_csv(const std::string& text) {
    std::vector<std::string_view> lines = split(text, '\n');
    while (!lines.empty() && lines.back().empty()) lines.pop_back();
    if (lines.empty()) throw Error("sweep CSV: empty input");

    const auto header = split(lines.front(), ',');
    if (header.size() < 4 || header.front() != "c" || header.back() != "case" ||
        (header.size() - 2) % 2 != 0)
        throw Error("sweep CSV: unrecognized header");
    const std::size_t n = (header.size() - 2) / 2;

    SweepTable t;
    for (std::size_t li = 1; li < lines.size(); ++li) {
        const auto cells = split(lines[li], ',');
        if (cells.size() != header.size())
            throw Error("sweep CSV: wrong cell count on row " + std::to_string(li));
        t.c_grid.push_back(parse_csv_double(cells.front()));
        std::vector<double> x(n);
        std::vector<double> th(n);
        for (std::size_t i = 0; i < n; ++i) {
            x[i] = parse_csv_double(cells[1 + i]);
            th[i] = parse_csv_double(cells[1 + n + i]);
        }
        t.xs.push_back(std::move(x));
        t.thetas.push_back(std::move(th));
        t.cases.push_back(case_from_name(cells.back()));
    }
    return t;
}

bool SweepTable::xs_increasing(double slack) const {
    for (int i = 0; i < width(); ++i)
        for (std::size_t r = 1; r < xs.size(); ++r) {
            const double a = xs[r - 1][static_cast<std::size_t>(i)];
            const double b = xs[r][static_cast<std::size_t>(i)];
            if (std::isnan(a) || std::isnan(b)) continue;
            if (!(b > a - slack)) return false;
        }
    return true;
}

SweepTable::Direction SweepTable::theta_direction(double slack) const {
    bool can_inc = true;
    bool can_dec = true;
    for (int i = 0; i < width(); ++i)
        for (std::size_t r = 1; r < thetas.size(); ++r) {
            const double a = thetas[r - 1][static_cast<std::size_t>(i)];
            const double b = thetas[r][static_cast<std::size_t>(i)];
            if (std::isnan(a) || std::isnan(b)) continue;
            const double d = b - a;
            if (d >= slack) can_dec = false;
            if (d <= -slack) can_inc = false;
        }
    if (can_dec && !can_inc) return Direction::Decreasing;
    if (can_inc && !can_dec) return Direction::Increasing;
    return Direction::Mixed;
}

std::string direction_name(SweepTable::Direction d) {
    switch (d) {
        case SweepTable::Direction::Increasing: return "increasing";
        case SweepTable::Direction::Decreasing: return "decreasing";
        case SweepTable::Direction::Mixed: return "mixed";
    }
    throw Error("unknown direction");
}

SweepTable sweep(ChebKind kind, int n, double c_min, double c_max, int steps) {
    if (n < 1) throw OutOfRange("sweep: n must be at least 1");
    if (!(c_min < c_max)) throw OutOfRange("sweep: c_min must be below c_max");
    if (steps < 2) throw OutOfRange("sweep: need at least 2 grid points");

    std::vector<double> grid;
    grid.reserve(static_cast<std::size_t>(steps) + 10);
    for (int k = 0; k < steps; ++k)
        grid.push_back(c_min + (c_max - c_min) * k / (steps - 1));
    auto [f_minus, f_plus] = thresholds(kind, n);
    // Refine around any threshold inside the range; the passage of the
    // extreme root through +-1 happens there.
    for (double f : {f_minus, f_plus})
        for (double off : {-1e-3, -1e-4, 0.0, 1e-4, 1e-3}) {
            const double c = f + off;
            if (c > c_min && c < c_max) grid.push_back(c);
        }
    std::sort(grid.begin(), grid.end());
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
    const double zero_eps = 1e-12 * std::max({1.0, std::abs(c_min), std::abs(c_max)});
    std::erase_if(grid, [&](double c) { return std::abs(c) <= zero_eps; });

    SweepTable table;
    for (double c : grid) {
        const ZeroCase zc = case_from_c(c, f_minus, f_plus);
        std::vector<double> row = interior_roots(kind, n, c);
        const int have = static_cast<int>(row.size());
        switch (zc) {
            case ZeroCase::TwoRealPositive:
                row.push_back(exterior_root(kind, n, c).value());
                break;
            case ZeroCase::TwoRealNegative:
                row.insert(row.begin(), exterior_root(kind, n, c).value());
                break;
            case ZeroCase::BoundaryPlusOne:
                if (have == n - 1) row.push_back(1.0);
                break;
            case ZeroCase::BoundaryMinusOne:
                if (have == n - 1) row.insert(row.begin(), -1.0);
                break;
            case ZeroCase::AllOnCircle:
                break;
        }
        if (static_cast<int>(row.size()) != n) throw Error("sweep: unexpected zero count");
        std::vector<double> th(row.size());
        for (std::size_t i = 0; i < row.size(); ++i) {
            th[i] = std::abs(row[i]) <= 1.0 + 1e-12
                        ? std::acos(std::clamp(row[i], -1.0, 1.0))
                        : std::numeric_limits<double>::quiet_NaN();
        }
        table.c_grid.push_back(c);
        table.xs.push_back(std::move(row));
        table.thetas.push_back(std::move(th));
        table.cases.push_back(zc);
    }
    return table;
}

SuiteResult run_verify_suite(const SuiteOptions& opts) {
    if (opts.cases_per_kind < 1)
        throw OutOfRange("run_verify_suite: cases_per_kind must be positive");

    SuiteResult res;
    res.reports.push_back(identity_audit(kExactCoeffLimit));

    auto absorb = [&res](VerifyReport vr) {
        ++res.cases_run;
        if (vr.overall) ++res.cases_passed;
        for (const CheckResult& ck : vr.checks) {
            if (ck.name == "root_match")
                res.max_root_deviation = std::max(res.max_root_deviation, ck.measured);
            if (ck.name == "residual")
                res.max_residual = std::max(res.max_residual, ck.measured);
        }
        res.reports.push_back(std::move(vr));
    };

    const FamilySpec pinned[] = {
        {ChebKind::FirstKind, 2, 1.0, -0.5, Parity::Even},
        {ChebKind::FirstKind, 2, 1.0, -2.0, Parity::Even},
        {ChebKind::FirstKind, 2, 1.0, -1.0, Parity::Even},
        {ChebKind::SecondKind, 3, 2.0, 3.0, Parity::Even},
        {ChebKind::SecondKind, 2, 1.0, 1.0, Parity::Odd},
        {ChebKind::ThirdKind, 1, 1.0, 2.0, Parity::Odd},
        {ChebKind::FourthKind, 2, 3.0, 1.0, Parity::Even},
    };
    for (const FamilySpec& s : pinned) absorb(check_classification(s));

    std::mt19937_64 rng(opts.seed);
    for (ChebKind kind : kAllKinds) {
        for (int i = 0; i < opts.cases_per_kind; ++i) {
            const int n = 2 + static_cast<int>(rng() % 19);
            const Parity parity = i % 2 == 0 ? Parity::Even : Parity::Odd;
            auto [f_minus, f_plus] = thresholds(kind, n);
            const double off = std::pow(10.0, 4.0 * uniform(rng) - 3.0);
            double c = 0.0;
            switch (i % 5) {
                case 0: c = f_plus - off; break;
                case 1: c = f_minus + off; break;
                case 2: c = f_plus + off; break;
                case 3: c = f_minus - off; break;
                default: c = (i / 5) % 2 == 0 ? f_plus : f_minus; break;
            }
            if (std::abs(c) < 1e-3) c = c < 0.0 ? -1e-3 : 1e-3;
            double lead = std::pow(10.0, 2.0 * uniform(rng) - 1.0);
            if (rng() % 2 == 1) lead = -lead;

            FamilySpec spec = spec_from_c(kind, n, c, parity, lead);
            for (int attempt = 0; attempt < 4; ++attempt) {
                try {
                    validate(spec);
                    break;
                } catch (const Degenerate&) {
                    c *= 1.0 + 1e-9;
                    spec = spec_from_c(kind, n, c, parity, lead);
                }
            }
            absorb(check_classification(spec));
        }
    }

    res.pass = true;
    for (const VerifyReport& vr : res.reports) res.pass = res.pass && vr.overall;
    return res;
}

} // namespace srpoly
