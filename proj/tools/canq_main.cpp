#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "canq/report.hpp"

namespace {

using canq::CheckId;

struct CliOptions {
    std::string spec_path;
    std::string out_path;
    int truncation = 0;  // 0 = keep the spec file's value
    int winding = -1;    // -1 = keep the spec file's value
    std::string field;   // empty = keep the spec file's value
};

canq::Field parse_field_flag(const std::string& s) {
    if (s == "rational") return canq::Field::rationals();
    if (s.rfind("fp:", 0) == 0) {
        long long p = 0;
        try {
            p = std::stoll(s.substr(3));
        } catch (const std::exception&) {
            throw canq::SpecError("--field: expected rational or fp:<p>");
        }
        if (p < 2) throw canq::SpecError("--field: p must be a prime >= 2");
        try {
            return canq::Field::prime(static_cast<std::uint64_t>(p));
        } catch (const std::exception& e) {
            throw canq::SpecError(std::string("--field: ") + e.what());
        }
    }
    throw canq::SpecError("--field: expected rational or fp:<p>");
}

// Exit codes: 0 all requested checks pass, 1 unusable input, 2 a check failed
// or could not complete.
int run(const CliOptions& opt, const std::vector<CheckId>* fixed_checks) {
    std::ifstream in(opt.spec_path, std::ios::binary);
    if (!in) {
        std::cerr << "cannot open spec file: " << opt.spec_path << "\n";
        return 1;
    }
    std::stringstream buf;
    buf << in.rdbuf();

    canq::RunConfig cfg;
    try {
        cfg = canq::parse_run_config(buf.str());
        if (opt.truncation > 0) cfg.spec.poly_truncation = opt.truncation;
        if (opt.winding >= 0) cfg.spec.winding_bound = opt.winding;
        if (!opt.field.empty()) cfg.spec.field = parse_field_flag(opt.field);
        auto issues = canq::validate(cfg.spec);
        if (!issues.empty()) throw canq::SpecError(issues.front().message);
    } catch (const canq::SpecError& e) {
        std::cerr << e.what() << "\n";
        return 1;
    }
    if (fixed_checks) cfg = canq::config_for_checks(std::move(cfg.spec), *fixed_checks);

    auto start = std::chrono::steady_clock::now();
    nlohmann::ordered_json report;
    try {
        report = canq::run_report(cfg);
    } catch (const std::exception& e) {
        std::cerr << "check did not complete: " << e.what() << "\n";
        return 2;
    }
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - start)
                  .count();
    std::cerr << "ran " << cfg.checks.size() << " checks in " << ms << " ms\n";

    std::string text = canq::render_report(report);
    if (!opt.out_path.empty()) {
        std::ofstream out(opt.out_path, std::ios::binary | std::ios::trunc);
        if (!out) {
            std::cerr << "cannot write report file: " << opt.out_path << "\n";
            return 2;
        }
        out << text;
    } else {
        std::cout << text;
    }
    return canq::report_passed(report) ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact checker for the mirror correspondence of lens space plumbings"};
    app.require_subcommand(1);

    CliOptions opt;
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--spec", opt.spec_path, "input spec (JSON)")->required();
        sub->add_option("--out", opt.out_path, "write the report here instead of stdout");
        sub->add_option("--truncation", opt.truncation,
                        "override the coefficient total-degree bound");
        sub->add_option("--winding", opt.winding, "override the cycle winding bound");
        sub->add_option("--field", opt.field,
                        "override the coefficient field: rational or fp:<p>");
        return sub;
    };

    static const std::vector<CheckId> kGeometry = {};
    static const std::vector<CheckId> kContraction = {CheckId::contraction};
    static const std::vector<CheckId> kPsi = {CheckId::fukaya, CheckId::psi};
    static const std::vector<CheckId> kTorsion = {CheckId::torsion};
    static const std::vector<CheckId> kBraid = {CheckId::braid};

    std::vector<std::pair<CLI::App*, const std::vector<CheckId>*>> dispatch = {
        {add_common(app.add_subcommand(
             "analyze", "slope geometry: core types, curve types, assumptions")),
         &kGeometry},
        {add_common(app.add_subcommand(
             "contraction", "degree-zero homology dimensions of the graded presentation")),
         &kContraction},
        {add_common(app.add_subcommand(
             "verify-psi", "comparison map: endomorphism structure and block isomorphism")),
         &kPsi},
        {add_common(app.add_subcommand(
             "torsion", "unit torsion orders in the localized presentation")),
         &kTorsion},
        {add_common(app.add_subcommand(
             "braid-check", "annular braid relations and faithfulness sample")),
         &kBraid},
        {add_common(app.add_subcommand("report", "every check requested by the spec file")),
         nullptr},
    };

    CLI11_PARSE(app, argc, argv);

    for (auto& [sub, checks] : dispatch)
        if (sub->parsed()) return run(opt, checks);
    return 1;
}
