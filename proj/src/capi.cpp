// Copyright (c) 2026 The lrc-toolkit authors.
// SPDX-License-Identifier: Apache-2.0

#include "lrc/lrc.h"

#include <cstring>
#include <string>

#include "codespec.hpp"
#include "lifted.hpp"
#include "recovery.hpp"

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out) std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

lrc_status fail(lrc_status st, const std::string& msg) {
    g_last_error = msg;
    return st;
}

template <typename Fn>
lrc_status guarded(Fn&& fn) {
    try {
        return fn();
    } catch (const lrc::gf::field_error& e) {
        return fail(LRC_ERR_DOMAIN, e.what());
    } catch (const std::invalid_argument& e) {
        return fail(LRC_ERR_INVALID_ARGUMENT, e.what());
    } catch (const std::exception& e) {
        return fail(LRC_ERR_INTERNAL, e.what());
    }
}

}  // namespace

struct lrc_code {
    lrc::codespec::Built built;
};

extern "C" {

const char* lrc_last_error(void) { return g_last_error.c_str(); }

void lrc_string_free(char* s) { std::free(s); }

lrc_status lrc_code_build(const char* spec_json, int full_verify, lrc_code** out) {
    if (!spec_json || !out) return fail(LRC_ERR_INVALID_ARGUMENT, "null argument");
    *out = nullptr;
    return guarded([&] {
        nlohmann::json j = nlohmann::json::parse(spec_json, nullptr, false);
        if (j.is_discarded()) return fail(LRC_ERR_INVALID_ARGUMENT, "malformed spec JSON");
        lrc::codespec::CodeSpec spec;
        try {
            spec = lrc::codespec::parse_spec(j);
        } catch (const nlohmann::json::exception& e) {
            return fail(LRC_ERR_INVALID_ARGUMENT, e.what());
        }
        *out = new lrc_code{lrc::codespec::build(spec, full_verify != 0)};
        return LRC_OK;
    });
}

void lrc_code_free(lrc_code* code) { delete code; }

size_t lrc_code_length(const lrc_code* code) { return code ? code->built.code.n() : 0; }

size_t lrc_code_dimension(const lrc_code* code) { return code ? code->built.code.k : 0; }

lrc_status lrc_code_describe(const lrc_code* code, char** out_json) {
    if (!code || !out_json) return fail(LRC_ERR_INVALID_ARGUMENT, "null argument");
    return guarded([&] {
        *out_json = dup_string(lrc::codespec::describe(code->built).dump());
        return LRC_OK;
    });
}

lrc_status lrc_encode(const lrc_code* code, const uint32_t* message, size_t message_len,
                      uint32_t* out_word) {
    if (!code || !message || !out_word)
        return fail(LRC_ERR_INVALID_ARGUMENT, "null argument");
    if (message_len != code->built.code.k)
        return fail(LRC_ERR_INVALID_ARGUMENT, "message length does not equal k");
    return guarded([&] {
        std::vector<lrc::gf::elem> msg(message, message + message_len);
        for (lrc::gf::elem m : msg)
            if (m >= code->built.code.field->q())
                return fail(LRC_ERR_INVALID_ARGUMENT, "message symbol out of field range");
        auto word = lrc::evalcode::encode(code->built.code, msg);
        std::memcpy(out_word, word.data(), word.size() * sizeof(uint32_t));
        return LRC_OK;
    });
}

lrc_status lrc_recover(const lrc_code* code, int64_t* word, size_t word_len, int cheapest_first,
                       char** out_report_json) {
    if (!code || !word) return fail(LRC_ERR_INVALID_ARGUMENT, "null argument");
    if (word_len != code->built.code.n())
        return fail(LRC_ERR_INVALID_ARGUMENT, "word length does not equal n");
    return guarded([&] {
        lrc::evalcode::ReceivedWord rw;
        rw.symbols.assign(word, word + word_len);
        for (std::int64_t s : rw.symbols)
            if (s != lrc::evalcode::ReceivedWord::kErased &&
                (s < 0 || s >= static_cast<std::int64_t>(code->built.code.field->q())))
                return fail(LRC_ERR_INVALID_ARGUMENT, "word symbol out of field range");
        auto order = cheapest_first ? lrc::recovery::GroupOrder::cheapest_first
                                    : lrc::recovery::GroupOrder::declared;
        auto [fixed, report] = lrc::recovery::recover(rw, code->built.structure, order);
        std::memcpy(word, fixed.symbols.data(), word_len * sizeof(int64_t));
        if (out_report_json)
            *out_report_json = dup_string(lrc::codespec::recovery_report_json(report).dump());
        return LRC_OK;
    });
}

lrc_status lrc_min_distance(const lrc_code* code, uint64_t work_budget, int32_t* out_d) {
    if (!code || !out_d) return fail(LRC_ERR_INVALID_ARGUMENT, "null argument");
    return guarded([&] {
        auto d = lrc::evalcode::min_distance_bruteforce(code->built.code, work_budget);
        if (!d) return fail(LRC_ERR_REFUSED, "scalar-class count exceeds the work budget");
        *out_d = *d;
        return LRC_OK;
    });
}

lrc_status lrc_certify(const lrc_code* code, char** out_json) {
    if (!code || !out_json) return fail(LRC_ERR_INVALID_ARGUMENT, "null argument");
    return guarded([&] {
        auto rep = lrc::recovery::certify(code->built.code, code->built.structure);
        nlohmann::json j = {{"ok", rep.ok},
                            {"locality", rep.locality},
                            {"availability", rep.availability},
                            {"groups_checked", rep.groups_checked}};
        if (!rep.ok) j["failure"] = rep.failure;
        *out_json = dup_string(j.dump());
        return LRC_OK;
    });
}

lrc_status lrc_simulate(const lrc_code* code, double p, const size_t* explicit_failures,
                        size_t failure_count, uint64_t seed, uint64_t trials, char** out_json) {
    if (!code || !out_json) return fail(LRC_ERR_INVALID_ARGUMENT, "null argument");
    return guarded([&] {
        lrc::storesim::ClusterModel model;
        if (explicit_failures)
            model.explicit_failures =
                std::vector<std::size_t>(explicit_failures, explicit_failures + failure_count);
        else
            model.iid_p = p;
        model.seed = seed;
        auto rep = lrc::storesim::simulate(code->built.code, code->built.structure, model, trials);
        *out_json = dup_string(lrc::codespec::sim_report_json(rep).dump());
        return LRC_OK;
    });
}

lrc_status lrc_bounds_classify(long long n, long long k, long long d, long long r, long long t,
                               long long q, int all_symbol_locality, char** out_json) {
    if (!out_json) return fail(LRC_ERR_INVALID_ARGUMENT, "null argument");
    return guarded([&] {
        lrc::bounds::ParamTuple params{n, k, d, r, t, q};
        auto report = lrc::bounds::classify(params, all_symbol_locality != 0);
        *out_json = dup_string(lrc::codespec::bound_report_json(report).dump());
        return LRC_OK;
    });
}

lrc_status lrc_good_monomials(const char* curve, uint32_t q_or_r, uint32_t delta,
                              char** out_csv) {
    if (!curve || !out_csv) return fail(LRC_ERR_INVALID_ARGUMENT, "null argument");
    return guarded([&] {
        lrc::lifted::LineFamily lines;
        uint32_t def_delta;
        if (std::strcmp(curve, "hermitian") == 0) {
            lines = lrc::lifted::hermitian_lines(q_or_r);
            def_delta = q_or_r - 1;
        } else if (std::strcmp(curve, "nt") == 0) {
            lines = lrc::lifted::norm_trace_lines(q_or_r);
            def_delta = (1u << (q_or_r - 1)) - 3;
        } else {
            return fail(LRC_ERR_INVALID_ARGUMENT, "curve must be hermitian or nt");
        }
        if (delta == UINT32_MAX) delta = def_delta;
        auto set = lrc::lifted::good_monomials(lines, delta);
        std::string csv = "a,b,class\n";
        for (const auto& m : set.monomials) {
            csv += std::to_string(m.a) + "," + std::to_string(m.b) + "," +
                   (m.sporadic ? "sporadic" : "baseline") + "\n";
        }
        *out_csv = dup_string(csv);
        return LRC_OK;
    });
}

}  // extern "C"
