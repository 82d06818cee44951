#include "srpoly/roots.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>

#include "srpoly/errors.hpp"

namespace srpoly {

namespace {

bool is_endpoint_angle(double theta) {
    return theta < 1e-12 || std::numbers::pi - theta < 1e-12;
}

template <typename F>
double bisect(const F& f, double a, double b, double fa) {
    for (int i = 0; i < 200; ++i) {
        double m = std::midpoint(a, b);
        if (m == a || m == b) break;
        double fm = f(m);
        if (fm == 0.0) return m;
        if ((fm > 0.0) == (fa > 0.0)) {
            a = m;
            fa = fm;
        } else {
            b = m;
        }
    }
    return std::midpoint(a, b);
}

bool less_by_parts(const std::complex<double>& a, const std::complex<double>& b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
}

} // namespace

int RootSet::total_count() const {
    int total = static_cast<int>(real_off.size());
    for (const CircleZero& cz : circle)
        total += is_endpoint_angle(cz.theta) ? cz.multiplicity : 2 * cz.multiplicity;
    return total;
}

std::vector<double> interior_roots(ChebKind kind, int n, double c) {
    if (n < 1) throw OutOfRange("interior_roots: n must be at least 1");
    if (c == 0.0) return cheb_zeros(kind, n);

    auto f = [&](double x) { return cheb_eval(kind, n, x) - c * cheb_eval(kind, n - 1, x); };

    // Break points: both zero grids interlace, so each subinterval of
    // [-1, 1] they cut out holds at most one zero of the combination.
    std::vector<double> pts;
    pts.reserve(2 * n + 1);
    pts.push_back(-1.0);
    std::vector<double> zn = cheb_zeros(kind, n);
    std::vector<double> zn1 = cheb_zeros(kind, n - 1);
    std::merge(zn.begin(), zn.end(), zn1.begin(), zn1.end(), std::back_inserter(pts));
    pts.push_back(1.0);

    std::vector<double> out;
    out.reserve(n);
    double prev = pts.front();
    double fprev = f(prev);
    if (fprev == 0.0) out.push_back(prev);
    for (std::size_t i = 1; i < pts.size(); ++i) {
        double x = pts[i];
        double fx = f(x);
        if (fx == 0.0)
            out.push_back(x);
        else if (fprev != 0.0 && (fx > 0.0) != (fprev > 0.0))
            out.push_back(bisect(f, prev, x, fprev));
        prev = x;
        fprev = fx;
    }
    return out;
}

std::optional<double> exterior_root(ChebKind kind, int n, double c, double boundary_tol) {
    auto [f_minus, f_plus] = thresholds(kind, n);
    ZeroCase zc = case_from_c(c, f_minus, f_plus, boundary_tol);
    if (zc != ZeroCase::TwoRealPositive && zc != ZeroCase::TwoRealNegative) return std::nullopt;

    auto f = [&](double x) { return cheb_eval(kind, n, x) - c * cheb_eval(kind, n - 1, x); };
    DensePolynomial combo = cheb_coeffs(kind, n) - c * cheb_coeffs(kind, n - 1);
    double bound = combo.cauchy_root_bound();
    double sgn = zc == ZeroCase::TwoRealPositive ? 1.0 : -1.0;

    double a = sgn;
    double fa = f(a);
    if (fa == 0.0) return a;
    double b = sgn * bound;
    double fb = f(b);
    for (int tries = 0; (fb > 0.0) == (fa > 0.0) && fb != 0.0; ++tries) {
        if (tries == 10) throw NoConvergence("exterior_root: no sign change out to the root bound");
        bound *= 2.0;
        b = sgn * bound;
        fb = f(b);
    }
    if (fb == 0.0) return b;
    return bisect(f, a, b, fa);
}

namespace {

// Running magnitude sum of the Horner evaluation; |p(w)| below a small
// multiple of eps times this is indistinguishable from zero.
double horner_noise_floor(const std::vector<double>& a, double mod) {
    double s = 0.0;
    double pw = 1.0;
    for (double coeff : a) {
        s += std::abs(coeff) * pw;
        pw *= mod;
    }
    return 2.0 * static_cast<double>(a.size()) * std::numeric_limits<double>::epsilon() * s;
}

double cluster_radius(double tol, const std::complex<double>& z) {
    return std::max(10.0 * tol, 1e-7 * (1.0 + std::abs(z)));
}

} // namespace

std::vector<std::complex<double>> all_roots_monomial(const DensePolynomial& p, double tol,
                                                     int max_iter) {
    if (p.is_zero()) throw ZeroInput("all_roots_monomial: zero polynomial");
    int d = p.degree();
    if (d == 0) return {};

    std::vector<double> a = p.coeffs();
    double lead = a.back();
    for (double& coeff : a) coeff /= lead;
    if (d == 1) return {std::complex<double>(-a[0], 0.0)};

    DensePolynomial monic(a);
    double bound = monic.cauchy_root_bound();

    std::vector<std::complex<double>> z(d);
    for (int k = 0; k < d; ++k)
        z[k] = std::polar(bound, 0.4 + 2.0 * std::numbers::pi * k / d);

    bool settled = false;
    for (int iter = 0; iter < max_iter && !settled; ++iter) {
        double max_step = 0.0;
        for (int k = 0; k < d; ++k) {
            std::complex<double> den = 1.0;
            for (int j = 0; j < d; ++j)
                if (j != k) den *= z[k] - z[j];
            if (den == 0.0) {
                z[k] += std::complex<double>(1e-8, 1e-8);
                max_step = std::max(max_step, 1e-8);
                continue;
            }
            std::complex<double> step = monic.eval(z[k]) / den;
            z[k] -= step;
            max_step = std::max(max_step, std::abs(step));
        }
        settled = max_step < tol * std::max(1.0, bound);
        if (!settled) {
            settled = true;
            for (int k = 0; k < d && settled; ++k)
                settled = std::abs(monic.eval(z[k])) <= 4.0 * horner_noise_floor(a, std::abs(z[k]));
        }
    }
    if (!settled) throw NoConvergence("all_roots_monomial: simultaneous iteration stalled");

    // A few Newton steps sharpen simple roots well past the cluster radius.
    DensePolynomial dp = monic.derivative();
    for (std::complex<double>& w : z) {
        for (int step = 0; step < 3; ++step) {
            std::complex<double> dv = dp.eval(w);
            if (dv == 0.0) break;
            std::complex<double> next = w - monic.eval(w) / dv;
            if (std::abs(monic.eval(next)) <= std::abs(monic.eval(w))) w = next;
        }
    }

    std::sort(z.begin(), z.end(), less_by_parts);

    // Collapse clusters to their mean and refine multiple roots on the
    // derivative of matching order, where they are simple again.
    std::vector<DensePolynomial> derivs = {monic};
    std::vector<std::complex<double>> out;
    out.reserve(d);
    std::size_t i = 0;
    while (i < z.size()) {
        std::size_t j = i + 1;
        std::complex<double> mean = z[i];
        while (j < z.size() && std::abs(z[j] - mean) <= cluster_radius(tol, mean)) {
            mean = (mean * static_cast<double>(j - i) + z[j]) / static_cast<double>(j - i + 1);
            ++j;
        }
        int mult = static_cast<int>(j - i);
        if (mult > 1) {
            while (static_cast<int>(derivs.size()) <= mult) derivs.push_back(derivs.back().derivative());
            const DensePolynomial& g = derivs[mult - 1];
            const DensePolynomial& dg = derivs[mult];
            std::complex<double> w = mean;
            for (int step = 0; step < 40; ++step) {
                std::complex<double> dv = dg.eval(w);
                if (dv == 0.0) break;
                std::complex<double> delta = g.eval(w) / dv;
                w -= delta;
                if (std::abs(delta) < 1e-16 * (1.0 + std::abs(w))) break;
            }
            if (std::abs(monic.eval(w)) <= std::abs(monic.eval(mean))) mean = w;
        }
        for (int k = 0; k < mult; ++k) out.push_back(mean);
        i = j;
    }
    std::sort(out.begin(), out.end(), less_by_parts);
    return out;
}

MultiplicityResult multiplicity_at(const DensePolynomial& p, double point, double accept_rel) {
    if (p.is_zero()) throw ZeroInput("multiplicity_at: zero polynomial");
    MultiplicityResult res;
    DensePolynomial cur = p;
    while (cur.degree() >= 1) {
        LinearDivision div = divide_by_linear(cur, point);
        double rel = std::abs(div.remainder) / cur.abs_coeff_sum();
        if (rel > accept_rel) {
            res.next_remainder_rel = rel;
            return res;
        }
        ++res.multiplicity;
        cur = div.quotient;
    }
    res.next_remainder_rel = std::numeric_limits<double>::infinity();
    return res;
}

namespace {

void append_residuals(const SelfReciprocalPoly& p, RootSet& rs) {
    rs.residuals.clear();
    rs.residuals.reserve(rs.circle.size() + rs.real_off.size());
    for (const CircleZero& cz : rs.circle)
        rs.residuals.push_back(std::abs(p.eval(std::polar(1.0, cz.theta))));
    for (double x : rs.real_off) rs.residuals.push_back(std::abs(p.eval(x)));
}

void sort_circle(std::vector<CircleZero>& circle) {
    std::sort(circle.begin(), circle.end(),
              [](const CircleZero& a, const CircleZero& b) { return a.theta < b.theta; });
}

RootSet rootset_from_spec(const SelfReciprocalPoly& p, const FamilySpec& spec) {
    validate(spec);
    Classification cls = classify(spec);
    std::vector<double> xs = interior_roots(spec.kind, spec.n, cls.c);

    RootSet rs;
    switch (cls.zero_case) {
    case ZeroCase::AllOnCircle:
        rs.circle = thetas_from_xs(xs);
        break;
    case ZeroCase::TwoRealPositive:
    case ZeroCase::TwoRealNegative: {
        rs.circle = thetas_from_xs(xs);
        std::optional<double> xe = exterior_root(spec.kind, spec.n, cls.c);
        if (!xe) throw NoConvergence("full_rootset: escaped zero not bracketed");
        auto [outer, inner] = z_pair_from_x(*xe);
        rs.real_off = {outer.real(), inner.real()};
        std::sort(rs.real_off.begin(), rs.real_off.end());
        break;
    }
    case ZeroCase::BoundaryPlusOne:
    case ZeroCase::BoundaryMinusOne: {
        double at = cls.zero_case == ZeroCase::BoundaryPlusOne ? 1.0 : -1.0;
        std::erase_if(xs, [&](double x) { return std::abs(x - at) < kOnCircleTol; });
        rs.circle = thetas_from_xs(xs);
        rs.circle.push_back({at > 0.0 ? 0.0 : std::numbers::pi, cls.boundary_multiplicity});
        break;
    }
    }
    if (spec.parity == Parity::Odd && cls.zero_case != ZeroCase::BoundaryMinusOne)
        rs.circle.push_back({std::numbers::pi, 1});
    sort_circle(rs.circle);
    append_residuals(p, rs);
    return rs;
}

RootSet rootset_from_oracle(const SelfReciprocalPoly& p, double on_circle_tol) {
    const DensePolynomial& poly = p.poly();
    std::vector<std::complex<double>> roots = all_roots_monomial(poly);

    RootSet rs;
    // Multiplicities at +-1 come from repeated synthetic division, which is
    // far more reliable there than the clustered iteration output.
    for (double at : {1.0, -1.0}) {
        int mult = multiplicity_at(poly, at).multiplicity;
        if (mult == 0) continue;
        std::sort(roots.begin(), roots.end(), [&](const auto& u, const auto& v) {
            return std::abs(u - at) < std::abs(v - at);
        });
        roots.erase(roots.begin(), roots.begin() + std::min<std::size_t>(mult, roots.size()));
        rs.circle.push_back({at > 0.0 ? 0.0 : std::numbers::pi, mult});
    }

    std::vector<double> thetas;
    for (const std::complex<double>& w : roots) {
        double mod = std::abs(w);
        if (std::abs(mod - 1.0) < on_circle_tol) {
            thetas.push_back(std::atan2(std::abs(w.imag()), w.real()));
        } else if (std::abs(w.imag()) <= 1e-9 * (1.0 + mod)) {
            rs.real_off.push_back(w.real());
        } else {
            throw Error("full_rootset: off-circle complex zero out of scope");
        }
    }

    // Each conjugate pair lands twice in thetas; group and halve.
    std::sort(thetas.begin(), thetas.end());
    std::size_t i = 0;
    while (i < thetas.size()) {
        std::size_t j = i + 1;
        double sum = thetas[i];
        while (j < thetas.size() && thetas[j] - thetas[i] < 1e-6) sum += thetas[j++];
        int count = static_cast<int>(j - i);
        rs.circle.push_back({sum / count, std::max(count / 2, 1)});
        i = j;
    }

    std::sort(rs.real_off.begin(), rs.real_off.end());
    sort_circle(rs.circle);
    append_residuals(p, rs);
    return rs;
}

} // namespace

RootSet full_rootset(const SelfReciprocalPoly& p, const std::optional<FamilySpec>& spec,
                     double on_circle_tol) {
    if (spec) return rootset_from_spec(p, *spec);
    return rootset_from_oracle(p, on_circle_tol);
}

} // namespace srpoly
