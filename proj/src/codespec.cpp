// Copyright (c) 2026 The lrc-toolkit authors.
// SPDX-License-Identifier: Apache-2.0

#include "codespec.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>

#include "curve_cover.hpp"
#include "fiber_avail.hpp"
#include "lifted.hpp"
#include "tamo_barg.hpp"

namespace lrc::codespec {

const char* construction_name(Construction c) {
    switch (c) {
        case Construction::tamo_barg: return "tamo-barg";
        case Construction::hermitian: return "hermitian";
        case Construction::power_cover: return "power-cover";
        case Construction::gk: return "gk";
        case Construction::hermitian_lifted: return "hermitian-lifted";
        case Construction::nt_lifted: return "nt-lifted";
    }
    return "?";
}

Construction construction_from_name(const std::string& name) {
    for (Construction c : {Construction::tamo_barg, Construction::hermitian,
                           Construction::power_cover, Construction::gk,
                           Construction::hermitian_lifted, Construction::nt_lifted})
        if (name == construction_name(c)) return c;
    throw gf::field_error("unknown construction tag: " + name);
}

CodeSpec parse_spec(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("type"))
        throw gf::field_error("code spec must be an object with a \"type\" tag");
    CodeSpec spec;
    spec.construction = construction_from_name(j.at("type").get<std::string>());
    auto u32 = [&](const char* key) { return j.at(key).get<std::uint32_t>(); };
    switch (spec.construction) {
        case Construction::tamo_barg:
            spec.q = u32("q");
            spec.r = u32("r");
            spec.k = u32("k");
            if (j.contains("source")) spec.source = j.at("source").get<std::string>();
            if (spec.source != "multiplicative" && spec.source != "additive")
                throw gf::field_error("tamo-barg source must be multiplicative or additive");
            if (j.contains("generators"))
                spec.generators = j.at("generators").get<std::vector<std::uint32_t>>();
            if (spec.source == "additive" && spec.generators.empty())
                throw gf::field_error("additive tamo-barg spec needs generators");
            break;
        case Construction::hermitian:
            spec.q = u32("q");
            spec.l = u32("l");
            break;
        case Construction::power_cover:
            spec.q = u32("q");
            spec.s = u32("s");
            spec.y_cap = u32("y_cap");
            break;
        case Construction::gk:
            spec.q = u32("q");
            spec.N = u32("N");
            spec.l = u32("l");
            break;
        case Construction::hermitian_lifted:
            spec.q = u32("q");
            break;
        case Construction::nt_lifted:
            spec.r = u32("r");
            if (j.contains("delta_convention"))
                spec.delta_convention = j.at("delta_convention").get<std::string>();
            if (spec.delta_convention != "literal" &&
                spec.delta_convention != "interpolation-consistent")
                throw gf::field_error("unknown delta_convention");
            break;
    }
    return spec;
}

nlohmann::json emit_spec(const CodeSpec& spec) {
    nlohmann::json j;
    j["type"] = construction_name(spec.construction);
    switch (spec.construction) {
        case Construction::tamo_barg:
            j["q"] = spec.q;
            j["r"] = spec.r;
            j["k"] = spec.k;
            j["source"] = spec.source;
            if (!spec.generators.empty()) j["generators"] = spec.generators;
            break;
        case Construction::hermitian:
            j["q"] = spec.q;
            j["l"] = spec.l;
            break;
        case Construction::power_cover:
            j["q"] = spec.q;
            j["s"] = spec.s;
            j["y_cap"] = spec.y_cap;
            break;
        case Construction::gk:
            j["q"] = spec.q;
            j["N"] = spec.N;
            j["l"] = spec.l;
            break;
        case Construction::hermitian_lifted:
            j["q"] = spec.q;
            break;
        case Construction::nt_lifted:
            j["r"] = spec.r;
            j["delta_convention"] = spec.delta_convention;
            break;
    }
    return j;
}

namespace {

std::vector<std::size_t> distinct_localities(const recovery::RecoveryStructure& rs) {
    std::set<std::size_t> sizes;
    for (const auto& per_coord : rs.groups)
        for (const auto& g : per_coord) sizes.insert(g.support.size());
    return {sizes.begin(), sizes.end()};
}

}  // namespace

Built build(const CodeSpec& spec, bool full_verify) {
    Built built;
    built.spec = spec;
    switch (spec.construction) {
        case Construction::tamo_barg: {
            auto [p, e] = gf::factor_prime_power(spec.q);
            auto f = gf::Field::make(p, e);
            tamo_barg::GoodPolynomial good;
            if (spec.source == "multiplicative") {
                good = tamo_barg::good_from_multiplicative(f, spec.r);
            } else {
                std::vector<gf::elem> gens(spec.generators.begin(), spec.generators.end());
                good = tamo_barg::good_from_additive(f, gens);
                if (good.r != spec.r)
                    throw gf::field_error("generators span a subgroup of the wrong size");
            }
            auto tb = tamo_barg::build_tb(good, spec.k);
            built.code = std::move(tb.code);
            built.structure = std::move(tb.structure);
            break;
        }
        case Construction::hermitian: {
            auto bc = curve_cover::build_hermitian_lrc(spec.q, spec.l);
            built.code = std::move(bc.code);
            built.structure = std::move(bc.structure);
            break;
        }
        case Construction::power_cover: {
            auto bc = curve_cover::build_power_cover_lrc(spec.q, spec.s, spec.y_cap);
            built.code = std::move(bc.code);
            built.structure = std::move(bc.structure);
            break;
        }
        case Construction::gk: {
            auto gk = fiber_avail::build_gk_lrc(spec.q, spec.N, spec.l, full_verify);
            built.code = std::move(gk.code);
            built.structure = std::move(gk.structure);
            break;
        }
        case Construction::hermitian_lifted: {
            auto lc = lifted::build_hermitian_lifted(spec.q);
            built.code = std::move(lc.code);
            built.structure = std::move(lc.structure);
            break;
        }
        case Construction::nt_lifted: {
            auto conv = spec.delta_convention == "literal"
                            ? lifted::DeltaConvention::literal
                            : lifted::DeltaConvention::interpolation_consistent;
            auto lc = lifted::build_nt_lifted(spec.r, conv);
            built.code = std::move(lc.code);
            built.structure = std::move(lc.structure);
            break;
        }
    }
    built.localities = distinct_localities(built.structure);
    built.availability = built.structure.availability();
    return built;
}

std::string point_label(const evalcode::EvaluationCode& code, std::size_t index) {
    const auto& coords = code.points[index].coords;
    if (coords.size() == 1) return std::to_string(coords[0]);
    std::string s = "(";
    for (std::size_t i = 0; i < coords.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(coords[i]);
    }
    return s + ")";
}

nlohmann::json bound_report_json(const bounds::BoundReport& report) {
    nlohmann::json j;
    j["params"] = {{"n", report.params.n}, {"k", report.params.k}, {"d", report.params.d},
                   {"r", report.params.r}, {"t", report.params.t}, {"q", report.params.q}};
    j["entries"] = nlohmann::json::array();
    for (const auto& e : report.entries) {
        nlohmann::json je = {{"bound", e.bound},
                             {"max_d", e.max_d},
                             {"slack", e.slack},
                             {"verdict", bounds::verdict_name(e.verdict)}};
        if (!e.caveat.empty()) je["caveat"] = e.caveat;
        j["entries"].push_back(std::move(je));
    }
    j["overall"] = bounds::verdict_name(report.overall);
    return j;
}

nlohmann::json describe(const Built& built) {
    const auto& code = built.code;
    nlohmann::json j;
    j["spec"] = emit_spec(built.spec);
    j["field"] = code.field->describe();
    j["n"] = code.n();
    j["k"] = code.k;
    j["localities"] = built.localities;
    j["availability"] = built.availability;
    if (code.design_distance) {
        j["design_distance"] = *code.design_distance;
        j["distance_provenance"] = evalcode::provenance_name(code.distance_provenance);
        if (!built.localities.empty()) {
            bounds::ParamTuple params;
            params.n = static_cast<long long>(code.n());
            params.k = static_cast<long long>(code.k);
            params.d = *code.design_distance;
            params.r = static_cast<long long>(built.localities.back());
            params.t = static_cast<long long>(std::max<std::size_t>(built.availability, 1));
            params.q = code.field->q();
            j["bounds"] = bound_report_json(bounds::classify(params));
        }
    }
    return j;
}

nlohmann::json recovery_report_json(const recovery::RecoveryReport& report) {
    nlohmann::json j;
    j["repaired"] = nlohmann::json::array();
    for (const auto& r : report.repaired)
        j["repaired"].push_back(
            {{"coordinate", r.coordinate}, {"support", r.support_used}});
    j["bandwidth"] = report.bandwidth;
    j["residual"] = report.residual;
    return j;
}

nlohmann::json sim_report_json(const storesim::SimReport& report) {
    nlohmann::json j;
    j["trials"] = report.trials;
    j["failed_total"] = report.failed_total;
    j["repaired_total"] = report.repaired_total;
    j["locally_repaired_fraction"] = report.locally_repaired_fraction;
    j["mean_repair_bandwidth"] = report.mean_repair_bandwidth;
    j["max_repair_bandwidth"] = report.max_repair_bandwidth;
    j["residual_failure_rate"] = report.residual_failure_rate;
    nlohmann::json hist = nlohmann::json::object();
    for (const auto& [capacity, count] : report.parallel_capacity_histogram)
        hist[std::to_string(capacity)] = count;
    j["parallel_capacity_histogram"] = std::move(hist);
    return j;
}

evalcode::ReceivedWord read_word(std::istream& in) {
    evalcode::ReceivedWord word;
    std::string tok;
    while (in >> tok) {
        if (tok == "?") {
            word.symbols.push_back(evalcode::ReceivedWord::kErased);
            continue;
        }
        std::size_t pos = 0;
        long long v;
        try {
            v = std::stoll(tok, &pos);
        } catch (const std::exception&) {
            throw gf::field_error("bad codeword token: " + tok);
        }
        if (pos != tok.size() || v < 0)
            throw gf::field_error("bad codeword token: " + tok);
        word.symbols.push_back(v);
    }
    return word;
}

void write_word(std::ostream& out, const evalcode::ReceivedWord& word) {
    for (std::size_t i = 0; i < word.symbols.size(); ++i) {
        if (i) out << ' ';
        if (word.erased(i))
            out << '?';
        else
            out << word.symbols[i];
    }
    out << '\n';
}

void write_word(std::ostream& out, const std::vector<gf::elem>& word) {
    for (std::size_t i = 0; i < word.size(); ++i) {
        if (i) out << ' ';
        out << word[i];
    }
    out << '\n';
}

}  // namespace lrc::codespec
