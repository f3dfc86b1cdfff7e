#include "schur/cli.hpp"

#include <cstdlib>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "schur/domains.hpp"
#include "schur/geometry.hpp"
#include "schur/regions.hpp"
#include "schur/serialize.hpp"
#include "schur/svg_plot.hpp"
#include "schur/verify.hpp"

namespace schur::cli {

namespace {

struct Options {
    std::string input;
    std::string output;
    std::string z0 = "0.3";
    int j = 0;
    int samples = 512;
    int count = 1000;
    std::uint64_t seed = 42;
    std::string domain;
    std::string gamma;
    double cls_tol = ToleranceConfig{}.cls_tol;
    double quad_tol = ToleranceConfig{}.quad_tol;
    double geom_tol = ToleranceConfig{}.geom_tol;
    bool quad_tol_given = false;
};

ToleranceConfig tolerances(const Options& o) {
    ToleranceConfig tol{o.cls_tol, o.quad_tol, o.geom_tol};
    if (!o.quad_tol_given) {
        if (const char* env = std::getenv("SCHUR_QUAD_TOL")) {
            try {
                std::size_t used = 0;
                tol.quad_tol = std::stod(env, &used);
                if (used != std::string(env).size())
                    throw std::invalid_argument(env);
            } catch (const std::exception&) {
                throw io::InputError("SCHUR_QUAD_TOL is not a number: '" + std::string(env) + "'");
            }
        }
    }
    try {
        tol.validate();
    } catch (const ContractViolation& e) {
        throw io::InputError(e.what());
    }
    return tol;
}

void emit(const Options& o, std::ostream& out, const std::string& text) {
    if (o.output.empty())
        out << text;
    else
        io::write_file(o.output, text);
}

struct RegionJob {
    io::JobInput input;
    DomainMap domain;
    Complex z0;
    ToleranceConfig tol;
};

RegionJob load_region_job(const Options& o) {
    if (o.input.empty())
        throw io::InputError("--input is required");
    io::JobInput input = io::parse_job_input(io::read_file(o.input));
    const std::string label = o.domain.empty() ? input.domain : o.domain;
    DomainMap domain = [&] {
        try {
            return domain_from_label(label);
        } catch (const ContractViolation& e) {
            throw io::InputError(e.what());
        }
    }();
    const Complex z0 = io::parse_complex(o.z0);
    if (!(std::abs(z0) > 0.0 && std::abs(z0) < 1.0))
        throw io::InputError("--z0 must satisfy 0 < |z0| < 1");
    if (o.j < -1)
        throw io::InputError("--j must be >= -1");
    return {std::move(input), std::move(domain), z0, tolerances(o)};
}

// Interior Schur parameter of the job's data, or nullopt after reporting.
std::optional<std::vector<Complex>> interior_gamma(const RegionJob& job, std::ostream& err) {
    const SchurClassification cls = schur_parameters(job.input.data, job.tol);
    if (const auto* in = std::get_if<Interior>(&cls))
        return in->gamma;
    err << "error: data is " << io::classification_to_json(cls)["class"].get<std::string>()
        << ", not interior; run `classify` for details\n";
    return std::nullopt;
}

int cmd_classify(const Options& o, std::ostream& out) {
    if (o.input.empty())
        throw io::InputError("--input is required");
    const io::JobInput input = io::parse_job_input(io::read_file(o.input));
    const SchurClassification cls = schur_parameters(input.data, tolerances(o));
    emit(o, out, io::classification_to_json(cls).dump() + "\n");
    return kSuccess;
}

int cmd_boundary(const Options& o, std::ostream& out, std::ostream& err) {
    if (o.samples < 16)
        throw io::InputError("--samples must be >= 16");
    const RegionJob job = load_region_job(o);
    const auto gamma = interior_gamma(job, err);
    if (!gamma)
        return kClassificationMismatch;

    const SchurPolynomialSet set(*gamma);
    const JordanRegion region =
        boundary_curve(set, o.j, job.z0, job.domain, o.samples, job.tol.quad_tol);

    std::ostringstream csv;
    io::write_boundary_csv(csv, region);
    nlohmann::json sidecar;
    sidecar["interior_witness"] = io::to_json(region.interior_witness);
    sidecar["convexity_defect"] = convexity_defect(region.boundary);
    sidecar["j"] = o.j;
    sidecar["z0"] = io::to_json(job.z0);
    sidecar["domain"] = job.domain.label();
    sidecar["samples"] = o.samples;

    if (o.output.empty()) {
        out << csv.str() << '\n' << sidecar.dump() << '\n';
    } else {
        io::write_file(o.output, csv.str());
        io::write_file(o.output + ".json", sidecar.dump() + "\n");
    }
    return kSuccess;
}

int cmd_sample(const Options& o, std::ostream& out, std::ostream& err) {
    if (o.count < 0)
        throw io::InputError("--count must be non-negative");
    if (o.samples < 16)
        throw io::InputError("--samples must be >= 16");
    const RegionJob job = load_region_job(o);
    const auto gamma = interior_gamma(job, err);
    if (!gamma)
        return kClassificationMismatch;

    const SchurPolynomialSet set(*gamma);
    nlohmann::json report;
    report["count"] = o.count;
    if (o.count == 0) {
        report["inside"] = 0;
        report["max_signed_distance"] = nullptr;
        emit(o, out, report.dump() + "\n");
        return kSuccess;
    }
    const JordanRegion region =
        boundary_curve(set, o.j, job.z0, job.domain, o.samples, job.tol.quad_tol);
    const ConvexHull hull(region.boundary);
    int inside = 0;
    double worst = -std::numeric_limits<double>::infinity();
    for (int k = 0; k < o.count; ++k) {
        const OracleSample s = sample_member(set, job.domain, o.j, job.z0,
                                             o.seed + static_cast<std::uint64_t>(k),
                                             job.tol.quad_tol);
        const double outside = -hull.signed_distance(s.value);
        worst = std::max(worst, outside);
        if (outside <= job.tol.geom_tol)
            ++inside;
    }
    report["inside"] = inside;
    report["max_signed_distance"] = worst;
    emit(o, out, report.dump() + "\n");
    return inside == o.count ? kSuccess : kPropertyFailure;
}

int cmd_verify(const Options& o, std::ostream& out) {
    verify::VerifyOptions vo;
    vo.seed = o.seed;
    if (!o.gamma.empty())
        vo.gamma = io::parse_complex_list(o.gamma);
    const auto results = verify::run_property_suites(vo);
    emit(o, out, verify::format_table(results));
    for (const auto& r : results)
        if (!r.passed)
            return kPropertyFailure;
    return kSuccess;
}

int cmd_plot(const Options& o, std::ostream& out) {
    if (o.input.empty())
        throw io::InputError("--input is required");
    const io::BoundaryCsv csv = io::parse_boundary_csv(io::read_file(o.input));
    if (csv.points.size() < 3)
        throw io::InputError("CSV needs at least three boundary rows");
    std::optional<nlohmann::json> sidecar = csv.sidecar;
    if (!sidecar) {
        try {
            sidecar = nlohmann::json::parse(io::read_file(o.input + ".json"));
        } catch (const io::InputError&) {
        } catch (const nlohmann::json::exception&) {
            throw io::InputError("sidecar '" + o.input + ".json' is not valid JSON");
        }
    }
    std::optional<Complex> witness;
    if (sidecar && sidecar->contains("interior_witness"))
        witness = io::complex_from_json((*sidecar)["interior_witness"]);
    emit(o, out, plot::render_region_svg(csv.points, witness));
    return kSuccess;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Schur-algorithm variability regions"};
    app.require_subcommand(1, 1);
    Options o;

    auto* classify = app.add_subcommand("classify", "classify Caratheodory data");
    auto* boundary = app.add_subcommand("boundary", "emit the boundary curve as CSV");
    auto* sample = app.add_subcommand("sample", "check random members against the region");
    auto* verify_cmd = app.add_subcommand("verify", "run the Schur polynomial property suites");
    auto* plot_cmd = app.add_subcommand("plot", "render a boundary CSV as SVG");

    for (auto* sub : {classify, boundary, sample, plot_cmd})
        sub->add_option("--input", o.input, "input file")->required();
    for (auto* sub : {classify, boundary, sample, verify_cmd, plot_cmd})
        sub->add_option("--output", o.output, "output file (default: stdout)");
    for (auto* sub : {boundary, sample}) {
        sub->add_option("--z0", o.z0, "evaluation point, e.g. 0.3+0.2i");
        sub->add_option("--j", o.j, "power of zeta in the integrand (>= -1)");
        sub->add_option("--samples", o.samples, "boundary samples N");
        sub->add_option("--domain", o.domain, "half-plane | strip | disk:<re>,<im>,<r>");
        sub->add_option("--geom-tol", o.geom_tol, "hull containment slack");
    }
    for (auto* sub : {classify, boundary, sample})
        sub->add_option("--cls-tol", o.cls_tol, "band around |gamma| = 1");
    for (auto* sub : {boundary, sample})
        sub->add_option("--quad-tol", o.quad_tol, "quadrature tolerance")
            ->each([&o](const std::string&) { o.quad_tol_given = true; });
    sample->add_option("--count", o.count, "number of random members");
    sample->add_option("--seed", o.seed, "RNG seed");
    verify_cmd->add_option("--seed", o.seed, "RNG seed");
    verify_cmd->add_option("--gamma", o.gamma, "check one Schur parameter, e.g. 0.5,0.2+0.1i");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kSuccess;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kSuccess;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    }

    try {
        if (classify->parsed())
            return cmd_classify(o, out);
        if (boundary->parsed())
            return cmd_boundary(o, out, err);
        if (sample->parsed())
            return cmd_sample(o, out, err);
        if (verify_cmd->parsed())
            return cmd_verify(o, out);
        return cmd_plot(o, out);
    } catch (const io::InputError& e) {
        err << "input error: " << e.what() << "\n";
        return kInputError;
    } catch (const ContractViolation& e) {
        err << "input error: " << e.what() << "\n";
        return kInputError;
    } catch (const Error& e) {
        err << "numerical failure: " << e.what() << "\n";
        return kNumericalFailure;
    }
}

}  // namespace schur::cli
