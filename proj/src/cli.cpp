#include "srpoly/cli.hpp"

#include <cmath>
#include <fstream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "srpoly/chebyshev.hpp"
#include "srpoly/errors.hpp"
#include "srpoly/families.hpp"
#include "srpoly/io.hpp"
#include "srpoly/roots.hpp"
#include "srpoly/transform.hpp"
#include "srpoly/verify.hpp"

namespace srpoly {
namespace {

using nlohmann::json;

// JSON has no encoding for non-finite doubles; fall back to a string.
json num(double v) {
    if (std::isfinite(v)) return v;
    if (std::isnan(v)) return "nan";
    return v > 0 ? "inf" : "-inf";
}

json report_to_json(const VerifyReport& r) {
    json checks = json::array();
    for (const CheckResult& c : r.checks) {
        json e;
        e["measured"] = num(c.measured);
        e["name"] = c.name;
        e["pass"] = c.pass;
        e["tolerance"] = num(c.tolerance);
        checks.push_back(std::move(e));
    }
    json j;
    j["checks"] = std::move(checks);
    j["overall"] = r.overall;
    j["subject"] = r.subject;
    return j;
}

json rootset_to_json(const RootSet& rs) {
    json circle = json::array();
    for (const CircleZero& cz : rs.circle) {
        json e;
        e["multiplicity"] = cz.multiplicity;
        e["theta"] = num(cz.theta);
        circle.push_back(std::move(e));
    }
    json j;
    j["circle"] = std::move(circle);
    j["real_off"] = json::array();
    for (double x : rs.real_off) j["real_off"].push_back(num(x));
    j["residuals"] = json::array();
    for (double r : rs.residuals) j["residuals"].push_back(num(r));
    j["total"] = rs.total_count();
    return j;
}

json spec_to_json(const FamilySpec& spec) {
    json j;
    j["kind"] = std::string(1, kind_letter(spec.kind));
    j["lead"] = num(spec.lead);
    j["n"] = spec.n;
    j["next"] = num(spec.next);
    j["parity"] = parity_name(spec.parity);
    return j;
}

json classification_to_json(const FamilySpec& spec, const Classification& cls) {
    json j = spec_to_json(spec);
    j["boundary_multiplicity"] = cls.boundary_multiplicity;
    j["c"] = num(cls.c);
    j["case"] = case_name(cls.zero_case);
    j["f_minus"] = num(cls.f_minus);
    j["f_plus"] = num(cls.f_plus);
    j["off_circle"] = cls.off_circle;
    j["on_circle"] = cls.on_circle;
    return j;
}

ChebKind parse_kind(const std::string& s) {
    return kind_from_letter(s);
}

struct Sources {
    bool flags = false;
    bool file = false;
};

void require_one_source(const Sources& src) {
    if (src.flags && src.file)
        throw Error("family flags and --coeffs are mutually exclusive");
    if (!src.flags && !src.file)
        throw Error("need an input source: family flags or --coeffs");
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Self-reciprocal polynomials built from quasi-orthogonal "
                 "Chebyshev combinations"};
    app.name("srpoly");
    app.require_subcommand(1);

    std::string kind_s = "T";
    int n = 2;
    double lead = 1.0;
    double next = 1.0;
    std::string parity_s = "even";
    std::string coeffs_path;
    std::string out_path;
    std::string method = "auto";
    double sr_tol = kDefaultPalindromeTol;
    double boundary_tol = kDefaultBoundaryTol;
    double circle_tol = kOnCircleTol;
    bool want_zeros = false;
    double c_min = -1.0;
    double c_max = 1.0;
    int steps = 100;
    int cases = 200;
    std::uint64_t seed = 12345;
    int n_max = kExactCoeffLimit;

    auto add_family = [&](CLI::App* sub) {
        sub->add_option("--kind", kind_s, "Chebyshev kind: T, U, V or W");
        sub->add_option("--n", n, "Half-degree parameter");
        sub->add_option("--lead", lead, "Leading coefficient");
        sub->add_option("--next", next, "Free subleading coefficient");
        sub->add_option("--parity", parity_s, "even or odd");
    };
    auto add_out = [&](CLI::App* sub) {
        sub->add_option("--out", out_path, "Write the result to a file instead of stdout");
    };

    CLI::App* gen = app.add_subcommand("gen", "Construct a family member");
    add_family(gen);
    add_out(gen);

    CLI::App* detect = app.add_subcommand("detect", "Recover the family of a coefficient file");
    detect->add_option("--coeffs", coeffs_path, "Coefficient file (ascending)")->required();
    detect->add_option("--sr-tol", sr_tol, "Palindrome tolerance");
    add_out(detect);

    CLI::App* classify_cmd = app.add_subcommand("classify", "Predict the zero structure");
    add_family(classify_cmd);
    classify_cmd->add_option("--coeffs", coeffs_path, "Coefficient file (ascending)");
    classify_cmd->add_option("--sr-tol", sr_tol, "Palindrome tolerance");
    classify_cmd->add_option("--boundary-tol", boundary_tol, "Threshold coincidence tolerance");
    add_out(classify_cmd);

    CLI::App* roots_cmd = app.add_subcommand("roots", "Compute the full root set");
    add_family(roots_cmd);
    roots_cmd->add_option("--coeffs", coeffs_path, "Coefficient file (ascending)");
    roots_cmd->add_option("--method", method, "bracket or oracle")
        ->check(CLI::IsMember({"auto", "bracket", "oracle"}));
    roots_cmd->add_option("--sr-tol", sr_tol, "Palindrome tolerance");
    roots_cmd->add_option("--circle-tol", circle_tol, "Circle membership cutoff (oracle)");
    add_out(roots_cmd);

    CLI::App* sweep_cmd = app.add_subcommand("sweep", "Trace root trajectories over c");
    sweep_cmd->add_option("--kind", kind_s, "Chebyshev kind: T, U, V or W")->required();
    sweep_cmd->add_option("--n", n, "Half-degree parameter")->required();
    sweep_cmd->add_option("--min", c_min, "Lower end of the c range")->required();
    sweep_cmd->add_option("--max", c_max, "Upper end of the c range")->required();
    sweep_cmd->add_option("--steps", steps, "Grid points");
    add_out(sweep_cmd);

    CLI::App* verify_cmd = app.add_subcommand("verify", "Run the randomized verification suite");
    verify_cmd->add_option("--cases", cases, "Randomized cases per kind");
    verify_cmd->add_option("--seed", seed, "Suite seed");
    add_out(verify_cmd);

    CLI::App* cheb = app.add_subcommand("cheb", "Chebyshev coefficients or zeros");
    cheb->add_option("--kind", kind_s, "Chebyshev kind: T, U, V or W")->required();
    cheb->add_option("--n", n, "Degree")->required();
    cheb->add_flag("--zeros", want_zeros, "Emit the zeros instead of the coefficients");
    add_out(cheb);

    CLI::App* identities = app.add_subcommand("identities", "Audit the exact identities");
    identities->add_option("--n-max", n_max, "Largest degree audited");
    add_out(identities);

    std::vector<std::string> tokens;
    tokens.reserve(args.size() + 1);
    tokens.emplace_back("srpoly");
    tokens.insert(tokens.end(), args.begin(), args.end());
    std::vector<char*> argv;
    argv.reserve(tokens.size());
    for (std::string& t : tokens) argv.push_back(t.data());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    auto emit = [&](const std::string& payload) {
        if (out_path.empty()) {
            out << payload;
            return;
        }
        std::ofstream f(out_path, std::ios::binary);
        if (!f) throw Error("cannot open output file '" + out_path + "'");
        f << payload;
    };

    auto family_sources = [&](CLI::App* sub) {
        Sources src;
        src.flags = sub->count("--kind") > 0 || sub->count("--n") > 0 ||
                    sub->count("--lead") > 0 || sub->count("--next") > 0 ||
                    sub->count("--parity") > 0;
        src.file = sub->count("--coeffs") > 0;
        return src;
    };
    auto spec_from_flags = [&]() {
        FamilySpec spec;
        spec.kind = parse_kind(kind_s);
        spec.n = n;
        spec.lead = lead;
        spec.next = next;
        spec.parity = parity_from_name(parity_s);
        return spec;
    };
    auto load_poly = [&]() {
        return make_self_reciprocal(load_coeff_file(coeffs_path), sr_tol);
    };

    try {
        if (gen->parsed()) {
            const SelfReciprocalPoly p = construct(spec_from_flags());
            emit(render_coeffs(p.poly().coeffs()) + "\n");
            return 0;
        }

        if (detect->parsed()) {
            const FamilySpec spec = detect_class(load_poly(), sr_tol);
            emit(spec_to_json(spec).dump(2) + "\n");
            return 0;
        }

        if (classify_cmd->parsed()) {
            const Sources src = family_sources(classify_cmd);
            require_one_source(src);
            const FamilySpec spec =
                src.file ? detect_class(load_poly(), sr_tol) : spec_from_flags();
            const Classification cls = classify(spec, boundary_tol);
            emit(classification_to_json(spec, cls).dump(2) + "\n");
            return 0;
        }

        if (roots_cmd->parsed()) {
            const Sources src = family_sources(roots_cmd);
            require_one_source(src);
            if (method == "auto") method = src.file ? "oracle" : "bracket";
            SelfReciprocalPoly p =
                src.file ? load_poly() : construct(spec_from_flags());
            RootSet rs;
            if (method == "bracket") {
                const FamilySpec spec =
                    src.file ? detect_class(p, sr_tol) : spec_from_flags();
                rs = full_rootset(p, spec);
            } else {
                rs = full_rootset(p, std::nullopt, circle_tol);
            }
            json j = rootset_to_json(rs);
            j["method"] = method;
            emit(j.dump(2) + "\n");
            return 0;
        }

        if (sweep_cmd->parsed()) {
            const SweepTable table = sweep(parse_kind(kind_s), n, c_min, c_max, steps);
            emit(table.to_csv());
            return 0;
        }

        if (verify_cmd->parsed()) {
            SuiteOptions opts;
            opts.cases_per_kind = cases;
            opts.seed = seed;
            const SuiteResult res = run_verify_suite(opts);
            json j;
            j["audit"] = report_to_json(res.reports.front());
            j["cases_passed"] = res.cases_passed;
            j["cases_per_kind"] = opts.cases_per_kind;
            j["cases_run"] = res.cases_run;
            json failures = json::array();
            for (const VerifyReport& vr : res.reports)
                if (!vr.overall) failures.push_back(report_to_json(vr));
            j["failures"] = std::move(failures);
            j["max_residual"] = num(res.max_residual);
            j["max_root_deviation"] = num(res.max_root_deviation);
            j["pass"] = res.pass;
            j["seed"] = opts.seed;
            emit(j.dump(2) + "\n");
            return res.pass ? 0 : 1;
        }

        if (cheb->parsed()) {
            const ChebKind kind = parse_kind(kind_s);
            const std::vector<double> values =
                want_zeros ? cheb_zeros(kind, n) : cheb_coeffs(kind, n).coeffs();
            emit(render_coeffs(values) + "\n");
            return 0;
        }

        if (identities->parsed()) {
            const VerifyReport vr = identity_audit(n_max);
            emit(report_to_json(vr).dump(2) + "\n");
            return vr.overall ? 0 : 1;
        }
    } catch (const NoConvergence& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    err << "error: no subcommand\n";
    return 2;
}

} // namespace srpoly
