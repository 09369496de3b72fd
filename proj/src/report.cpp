#include "canq/report.hpp"

#include <cstdint>
#include <utility>

#include "canq/braid.hpp"
#include "canq/dg.hpp"
#include "canq/fukaya.hpp"
#include "canq/localization.hpp"

namespace canq {

namespace {

using nlohmann::ordered_json;

// Fixed sampling parameters for the braid check, recorded in the output so
// reports stay reproducible byte for byte.
constexpr int kBraidTrials = 200;
constexpr int kBraidMaxLength = 8;
constexpr std::uint64_t kBraidSeed = 424242;

const nlohmann::json& member(const nlohmann::json& obj, const char* key, const char* where) {
    auto it = obj.find(key);
    if (it == obj.end())
        throw SpecError(std::string(where) + ": missing field \"" + key + "\"");
    return *it;
}

long long int_member(const nlohmann::json& obj, const char* key, const char* where) {
    const auto& v = member(obj, key, where);
    if (!v.is_number_integer())
        throw SpecError(std::string(where) + ": field \"" + key + "\" must be an integer");
    return v.get<long long>();
}

SlopeDatum parse_slope(const nlohmann::json& entry, int index) {
    std::string where = "slope " + std::to_string(index);
    if (!entry.is_object()) throw SpecError(where + ": expected an object");
    SlopeDatum s;
    s.k = static_cast<int>(int_member(entry, "k", where.c_str()));
    s.l = static_cast<int>(int_member(entry, "l", where.c_str()));
    const auto& sg = member(entry, "sign", where.c_str());
    if (!sg.is_string() || (sg != "+" && sg != "-"))
        throw SpecError(where + ": field \"sign\" must be \"+\" or \"-\"");
    s.sign = sg == "+" ? Sign::plus : Sign::minus;
    return s;
}

Field parse_field(const nlohmann::json& f) {
    if (!f.is_object()) throw SpecError("field: expected an object");
    const auto& kind = member(f, "kind", "field");
    if (kind == "rational") return Field::rationals();
    if (kind == "prime") {
        long long p = int_member(f, "p", "field");
        if (p < 2) throw SpecError("field: p must be a prime >= 2");
        try {
            return Field::prime(static_cast<std::uint64_t>(p));
        } catch (const std::exception& e) {
            throw SpecError(std::string("field: ") + e.what());
        }
    }
    throw SpecError("field: kind must be \"rational\" or \"prime\"");
}

CheckId parse_check(const std::string& name) {
    for (CheckId c : all_checks())
        if (check_name(c) == name) return c;
    throw SpecError("checks: unknown check \"" + name + "\"");
}

ordered_json spec_echo(const PlumbingSpec& spec, const std::vector<CheckId>& checks) {
    ordered_json out;
    ordered_json slopes = ordered_json::array();
    for (const auto& s : spec.slopes)
        slopes.push_back(ordered_json{
            {"k", s.k}, {"l", s.l}, {"sign", std::string(1, sign_char(s.sign))}});
    out["slopes"] = std::move(slopes);
    if (spec.field.is_rational())
        out["field"] = ordered_json{{"kind", "rational"}};
    else
        out["field"] = ordered_json{{"kind", "prime"}, {"p", spec.field.characteristic()}};
    out["truncation"] = ordered_json{{"poly_degree", spec.poly_truncation},
                                     {"winding", spec.winding_bound}};
    ordered_json names = ordered_json::array();
    for (CheckId c : checks) names.push_back(check_name(c));
    out["checks"] = std::move(names);
    return out;
}

ordered_json geometry_check(const PlumbingSpec& spec) {
    ordered_json out;
    out["pass"] = true;
    ordered_json cores = ordered_json::array();
    for (const auto& t : core_types(spec)) cores.push_back(t.to_string());
    out["core_types"] = std::move(cores);
    ordered_json curves = ordered_json::array();
    for (CurveType t : exceptional_curve_types(spec)) curves.push_back(curve_type_string(t));
    out["exceptional_curves"] = std::move(curves);
    Assumptions a = assumptions(spec);
    out["assumptions"] = ordered_json{
        {"A", a.A}, {"B", a.B}, {"C", a.C}, {"B_literal_pairs", a.B_literal_pairs}};
    return out;
}

ordered_json fukaya_check(const PlumbingSpec& spec) {
    FukayaPresentation fp = build_fukaya(spec);
    bool pass = true;
    int products = 0;
    std::string detail;
    for (int v = 0; v <= spec.n(); ++v) {
        EndoCheck c = endomorphism_ring_check(fp, v, spec.winding_bound);
        products += c.products_checked;
        if (!c.pass && pass) {
            pass = false;
            detail = "vertex " + std::to_string(v) + ": " + c.detail;
        }
    }
    ordered_json out;
    out["pass"] = pass;
    out["vertices_checked"] = spec.n() + 1;
    out["products_checked"] = products;
    out["detail"] = detail;
    return out;
}

ordered_json psi_check(const PlumbingSpec& spec) {
    PsiReport r = verify_psi_iso(spec, spec.winding_bound, spec.poly_truncation);
    ordered_json out;
    out["pass"] = r.pass;
    out["rules_compatible"] = r.rules_compatible;
    out["products_preserved"] = r.products_preserved;
    out["blocks_match"] = r.blocks_match;
    out["blocks_checked"] = r.blocks_checked;
    out["block_dim"] = r.block_dim;
    out["detail"] = r.detail;
    return out;
}

ordered_json dim_json(const QuotientDim& d) {
    if (!d.finite) return ordered_json(nullptr);
    return ordered_json(d.dim);
}

ordered_json contraction_check(const PlumbingSpec& spec) {
    ContractionAlgebra c = h0(spec);
    ordered_json out;
    out["pass"] = true;
    out["finite"] = c.total.finite;
    out["total_dim"] = dim_json(c.total);
    ordered_json rows = ordered_json::array();
    for (const auto& row : c.component_dim) {
        ordered_json r = ordered_json::array();
        for (const auto& d : row) r.push_back(dim_json(d));
        rows.push_back(std::move(r));
    }
    out["component_dims"] = std::move(rows);
    out["closure_passes"] = c.closure_passes;
    return out;
}

std::string kind_string(TorsionReport::Kind k) {
    switch (k) {
        case TorsionReport::Kind::Finite: return "finite";
        case TorsionReport::Kind::Collapsed: return "collapsed";
        case TorsionReport::Kind::NonTorsion: return "non-torsion";
    }
    return "?";
}

ordered_json torsion_check(const PlumbingSpec& spec) {
    TorsionReport t = torsion_orders(spec);
    bool pass = t.kind == TorsionReport::Kind::Finite
                    ? (t.orders_certified && t.substitution_checked)
                    : true;
    ordered_json out;
    out["pass"] = pass;
    out["kind"] = kind_string(t.kind);
    out["all_units_torsion"] = t.all_units_torsion();
    out["z1_order"] = t.z1_order;
    out["z2_order"] = t.z2_order;
    out["group_order"] = t.group_order;
    out["root_modulus"] = t.root_modulus;
    out["z1_exponent"] = t.z1_exponent;
    out["z2_exponent"] = t.z2_exponent;
    out["orders_certified"] = t.orders_certified;
    out["substitution_checked"] = t.substitution_checked;
    return out;
}

ordered_json braid_check(const PlumbingSpec& spec) {
    ordered_json out;
    if (spec.n() < 2) {
        out["pass"] = true;
        out["skipped"] = true;
        out["reason"] = "needs at least three punctures around the core (n >= 2)";
        return out;
    }
    BraidModel m(spec.n());
    PresentationCheck pc = verify_presentation(m);
    bool boundary = true, product = true;
    for (int i = 0; i <= m.n(); ++i) {
        boundary = boundary && preserves_boundary_exactly(m, m.sigma(i)) &&
                   preserves_boundary_exactly(m, m.sigma_inv(i));
        product = product && preserves_product_up_to_conjugacy(m, m.sigma(i)) &&
                  preserves_product_up_to_conjugacy(m, m.sigma_inv(i));
    }
    boundary = boundary && preserves_boundary_exactly(m, m.rho()) &&
               preserves_boundary_exactly(m, m.rho_inv());
    product = product && preserves_product_up_to_conjugacy(m, m.rho()) &&
              preserves_product_up_to_conjugacy(m, m.rho_inv());
    NontrivialityReport s = nontriviality_sample(m, kBraidMaxLength, kBraidTrials, kBraidSeed);
    out["pass"] = pc.pass && boundary && product && s.all_nontrivial();
    out["skipped"] = false;
    out["generators"] = m.generator_count();
    out["relations_checked"] = pc.relations_checked;
    out["families"] = ordered_json{
        {"commutation", pc.commutation}, {"braid", pc.braid}, {"rotation", pc.rotation}};
    out["boundary_fixed"] = boundary;
    out["product_preserved"] = product;
    out["sample"] = ordered_json{{"trials", s.trials},
                                 {"nontrivial", s.nontrivial},
                                 {"max_length", s.max_length},
                                 {"seed", s.seed}};
    out["detail"] = pc.detail;
    return out;
}

ordered_json run_check(CheckId c, const PlumbingSpec& spec) {
    switch (c) {
        case CheckId::geometry: return geometry_check(spec);
        case CheckId::fukaya: return fukaya_check(spec);
        case CheckId::psi: return psi_check(spec);
        case CheckId::contraction: return contraction_check(spec);
        case CheckId::torsion: return torsion_check(spec);
        case CheckId::braid: return braid_check(spec);
    }
    throw std::logic_error("run_check: unhandled check id");
}

}  // namespace

std::string check_name(CheckId c) {
    switch (c) {
        case CheckId::geometry: return "geometry";
        case CheckId::fukaya: return "fukaya";
        case CheckId::psi: return "psi";
        case CheckId::contraction: return "contraction";
        case CheckId::torsion: return "torsion";
        case CheckId::braid: return "braid";
    }
    return "?";
}

const std::vector<CheckId>& all_checks() {
    static const std::vector<CheckId> all = {CheckId::geometry,    CheckId::fukaya,
                                             CheckId::psi,         CheckId::contraction,
                                             CheckId::torsion,     CheckId::braid};
    return all;
}

RunConfig config_for_checks(PlumbingSpec spec, std::vector<CheckId> checks) {
    RunConfig cfg;
    cfg.spec = std::move(spec);
    checks.push_back(CheckId::geometry);
    for (CheckId c : all_checks())
        for (CheckId requested : checks)
            if (requested == c) {
                cfg.checks.push_back(c);
                break;
            }
    return cfg;
}

RunConfig parse_run_config(const std::string& json_text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::parse_error& e) {
        throw SpecError(std::string("malformed JSON: ") + e.what());
    }
    if (!doc.is_object()) throw SpecError("top level: expected an object");

    PlumbingSpec spec;
    const auto& slopes = member(doc, "slopes", "top level");
    if (!slopes.is_array() || slopes.empty())
        throw SpecError("slopes: expected a non-empty array");
    for (std::size_t i = 0; i < slopes.size(); ++i)
        spec.slopes.push_back(parse_slope(slopes[i], static_cast<int>(i)));

    if (auto it = doc.find("field"); it != doc.end()) spec.field = parse_field(*it);

    if (auto it = doc.find("truncation"); it != doc.end()) {
        if (!it->is_object()) throw SpecError("truncation: expected an object");
        if (it->contains("poly_degree"))
            spec.poly_truncation = static_cast<int>(int_member(*it, "poly_degree", "truncation"));
        if (it->contains("winding"))
            spec.winding_bound = static_cast<int>(int_member(*it, "winding", "truncation"));
    }

    std::vector<CheckId> checks;
    if (auto it = doc.find("checks"); it != doc.end()) {
        if (!it->is_array()) throw SpecError("checks: expected an array of names");
        for (const auto& entry : *it) {
            if (!entry.is_string()) throw SpecError("checks: expected an array of names");
            checks.push_back(parse_check(entry.get<std::string>()));
        }
    } else {
        checks = all_checks();
    }

    auto issues = validate(spec);
    if (!issues.empty()) throw SpecError(issues.front().message);
    return config_for_checks(std::move(spec), std::move(checks));
}

nlohmann::ordered_json run_report(const RunConfig& config) {
    ordered_json report;
    report["schema"] = kReportSchema;
    report["spec"] = spec_echo(config.spec, config.checks);
    ordered_json checks = ordered_json::object();
    bool pass = true;
    for (CheckId c : config.checks) {
        ordered_json r = run_check(c, config.spec);
        pass = pass && r.at("pass").get<bool>();
        checks[check_name(c)] = std::move(r);
    }
    report["checks"] = std::move(checks);
    report["pass"] = pass;
    return report;
}

bool report_passed(const nlohmann::ordered_json& report) {
    return report.at("pass").get<bool>();
}

std::string render_report(const nlohmann::ordered_json& report) {
    return report.dump(2) + "\n";
}

}  // namespace canq
