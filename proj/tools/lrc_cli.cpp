// Copyright (c) 2026 The lrc-toolkit authors.
// SPDX-License-Identifier: Apache-2.0
//
// Command-line front end over the C API: construct, encode, erase, recover,
// bounds, monomials, mindist, simulate.  Reports are JSON on stdout;
// codeword files are plain text (element codes, "?" for erasure).

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "lrc/lrc.h"

namespace {

using nlohmann::json;

struct cli_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw cli_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// -1 encodes an erasure
std::vector<std::int64_t> read_word_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw cli_error("cannot open " + path);
    std::vector<std::int64_t> word;
    std::string tok;
    while (in >> tok) {
        if (tok == "?") {
            word.push_back(-1);
            continue;
        }
        try {
            std::size_t pos = 0;
            long long v = std::stoll(tok, &pos);
            if (pos != tok.size() || v < 0) throw std::invalid_argument(tok);
            word.push_back(v);
        } catch (const std::exception&) {
            throw cli_error("bad codeword token: " + tok);
        }
    }
    return word;
}

void write_word_file(const std::string& path, const std::vector<std::int64_t>& word) {
    std::ofstream out(path);
    if (!out) throw cli_error("cannot write " + path);
    for (std::size_t i = 0; i < word.size(); ++i) {
        if (i) out << ' ';
        if (word[i] < 0)
            out << '?';
        else
            out << word[i];
    }
    out << '\n';
}

struct CodeHandle {
    lrc_code* code = nullptr;
    ~CodeHandle() { lrc_code_free(code); }
};

struct ApiString {
    char* s = nullptr;
    ~ApiString() { lrc_string_free(s); }
};

void check(lrc_status st) {
    if (st != LRC_OK) throw cli_error(lrc_last_error());
}

CodeHandle build_from_spec_file(const std::string& path, bool full_verify) {
    CodeHandle h;
    check(lrc_code_build(read_file(path).c_str(), full_verify ? 1 : 0, &h.code));
    return h;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"locally-recoverable-code toolkit"};
    app.require_subcommand(1);

    // construct
    auto* construct = app.add_subcommand("construct", "build a code and print its report");
    std::string c_spec, c_verify = "full", c_out;
    construct->add_option("--spec", c_spec, "code spec JSON file")->required();
    construct->add_option("--verify", c_verify, "full|fast (fast skips rank elimination)")
        ->check(CLI::IsMember({"full", "fast"}));
    construct->add_option("--out", c_out, "write the canonical spec back to this file");

    // encode
    auto* encode = app.add_subcommand("encode", "encode a message file to a codeword file");
    std::string e_spec, e_message, e_out;
    encode->add_option("--spec", e_spec)->required();
    encode->add_option("--message", e_message, "file with k element codes")->required();
    encode->add_option("--out", e_out, "codeword output file")->required();

    // erase
    auto* erase = app.add_subcommand("erase", "inject erasures into a codeword file");
    std::string r_word, r_out;
    std::vector<std::size_t> r_indices;
    std::size_t r_count = 0;
    std::uint64_t r_seed = 0;
    erase->add_option("--word", r_word)->required();
    erase->add_option("--out", r_out)->required();
    erase->add_option("--indices", r_indices, "explicit coordinates to erase");
    erase->add_option("--count", r_count, "number of random erasures");
    erase->add_option("--seed", r_seed, "seed for random erasures");

    // recover
    auto* recover = app.add_subcommand("recover", "repair erasures in a codeword file");
    std::string v_spec, v_word, v_out, v_order = "cheapest";
    recover->add_option("--spec", v_spec)->required();
    recover->add_option("--word", v_word)->required();
    recover->add_option("--out", v_out, "repaired word output file");
    recover->add_option("--order", v_order, "group trial order")
        ->check(CLI::IsMember({"cheapest", "declared"}));

    // bounds
    auto* bounds = app.add_subcommand("bounds", "classify parameters against the bounds");
    long long b_n = 0, b_k = 0, b_d = 0, b_r = 0, b_t = 1, b_q = 0;
    std::string b_csv;
    bounds->add_option("--n", b_n);
    bounds->add_option("--k", b_k);
    bounds->add_option("--d", b_d);
    bounds->add_option("--r", b_r);
    bounds->add_option("--t", b_t);
    bounds->add_option("--q", b_q);
    bounds->add_option("--csv", b_csv, "batch mode: CSV rows q,n,k,d,r[,t]");

    // monomials
    auto* monomials = app.add_subcommand("monomials", "good-monomial scan as CSV");
    std::string m_curve, m_out;
    std::uint32_t m_param = 0, m_delta = UINT32_MAX;
    monomials->add_option("--curve", m_curve, "hermitian|nt")
        ->required()
        ->check(CLI::IsMember({"hermitian", "nt"}));
    monomials->add_option("--param", m_param, "q (hermitian) or r (nt)")->required();
    monomials->add_option("--delta", m_delta, "degree threshold (default per construction)");
    monomials->add_option("--out", m_out, "CSV output file (default stdout)");

    // mindist
    auto* mindist = app.add_subcommand("mindist", "brute-force exact minimum distance");
    std::string d_spec;
    std::uint64_t d_budget = 100000000ull;
    mindist->add_option("--spec", d_spec)->required();
    mindist->add_option("--budget", d_budget, "max scalar classes to enumerate");

    // simulate
    auto* simulate = app.add_subcommand("simulate", "storage failure simulation");
    std::string s_spec;
    double s_p = 0.0;
    std::uint64_t s_trials = 1000, s_seed = 0;
    std::vector<std::size_t> s_fail;
    simulate->add_option("--spec", s_spec)->required();
    simulate->add_option("--p", s_p, "iid failure probability per node per trial");
    simulate->add_option("--trials", s_trials);
    simulate->add_option("--seed", s_seed);
    simulate->add_option("--fail", s_fail, "explicit failure set (overrides --p)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*construct) {
            auto h = build_from_spec_file(c_spec, c_verify == "full");
            ApiString rep;
            check(lrc_code_describe(h.code, &rep.s));
            json j = json::parse(rep.s);
            if (!c_out.empty()) {
                std::ofstream out(c_out);
                if (!out) throw cli_error("cannot write " + c_out);
                out << j.at("spec").dump(2) << '\n';
            }
            std::cout << j.dump(2) << '\n';
        } else if (*encode) {
            auto h = build_from_spec_file(e_spec, true);
            auto msg64 = read_word_file(e_message);
            std::vector<std::uint32_t> msg;
            for (auto v : msg64) {
                if (v < 0) throw cli_error("message files cannot contain erasures");
                msg.push_back(static_cast<std::uint32_t>(v));
            }
            std::vector<std::uint32_t> word(lrc_code_length(h.code));
            check(lrc_encode(h.code, msg.data(), msg.size(), word.data()));
            write_word_file(e_out, {word.begin(), word.end()});
            std::cout << json{{"n", word.size()}, {"out", e_out}}.dump(2) << '\n';
        } else if (*erase) {
            auto word = read_word_file(r_word);
            for (std::size_t i : r_indices) {
                if (i >= word.size()) throw cli_error("erase index out of range");
                word[i] = -1;
            }
            if (r_count > 0) {
                std::mt19937_64 rng(r_seed);
                std::size_t done = 0;
                while (done < r_count && done < word.size()) {
                    std::size_t i = rng() % word.size();
                    if (word[i] < 0) continue;
                    word[i] = -1;
                    ++done;
                }
            }
            write_word_file(r_out, word);
            std::size_t erased = 0;
            for (auto v : word)
                if (v < 0) ++erased;
            std::cout << json{{"erased", erased}, {"out", r_out}}.dump(2) << '\n';
        } else if (*recover) {
            auto h = build_from_spec_file(v_spec, true);
            auto word = read_word_file(v_word);
            ApiString rep;
            check(lrc_recover(h.code, word.data(), word.size(), v_order == "cheapest" ? 1 : 0,
                              &rep.s));
            if (!v_out.empty()) write_word_file(v_out, word);
            std::cout << json::parse(rep.s).dump(2) << '\n';
        } else if (*bounds) {
            if (!b_csv.empty()) {
                std::ifstream in(b_csv);
                if (!in) throw cli_error("cannot open " + b_csv);
                json reports = json::array();
                std::string line;
                while (std::getline(in, line)) {
                    if (line.empty() || !isdigit(static_cast<unsigned char>(line[0]))) continue;
                    std::istringstream ss(line);
                    std::vector<long long> v;
                    std::string cell;
                    while (std::getline(ss, cell, ',')) v.push_back(std::stoll(cell));
                    if (v.size() < 5) throw cli_error("CSV rows need q,n,k,d,r[,t]");
                    long long t = v.size() > 5 ? v[5] : 1;
                    ApiString rep;
                    check(lrc_bounds_classify(v[1], v[2], v[3], v[4], t, v[0], 1, &rep.s));
                    reports.push_back(json::parse(rep.s));
                }
                std::cout << reports.dump(2) << '\n';
            } else {
                ApiString rep;
                check(lrc_bounds_classify(b_n, b_k, b_d, b_r, b_t, b_q, 1, &rep.s));
                std::cout << json::parse(rep.s).dump(2) << '\n';
            }
        } else if (*monomials) {
            ApiString csv;
            check(lrc_good_monomials(m_curve.c_str(), m_param, m_delta, &csv.s));
            if (m_out.empty()) {
                std::cout << csv.s;
            } else {
                std::ofstream out(m_out);
                if (!out) throw cli_error("cannot write " + m_out);
                out << csv.s;
            }
        } else if (*mindist) {
            auto h = build_from_spec_file(d_spec, true);
            std::int32_t d = 0;
            check(lrc_min_distance(h.code, d_budget, &d));
            std::cout << json{{"d", d}, {"provenance", "brute-force"}}.dump(2) << '\n';
        } else if (*simulate) {
            auto h = build_from_spec_file(s_spec, true);
            ApiString rep;
            check(lrc_simulate(h.code, s_p, s_fail.empty() ? nullptr : s_fail.data(),
                               s_fail.size(), s_seed, s_trials, &rep.s));
            std::cout << json::parse(rep.s).dump(2) << '\n';
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
