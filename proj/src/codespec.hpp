// Copyright (c) 2026 The lrc-toolkit authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef LRC_CODESPEC_HPP
#define LRC_CODESPEC_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "bounds.hpp"
#include "evalcode.hpp"
#include "recovery.hpp"
#include "storesim.hpp"

namespace lrc::codespec {

enum class Construction {
    tamo_barg,
    hermitian,
    power_cover,
    gk,
    hermitian_lifted,
    nt_lifted,
};

const char* construction_name(Construction c);
Construction construction_from_name(const std::string& name);

// Construction spec as carried by JSON files.  Fields are used per tag:
//   tamo-barg:        q, r, k, source ("multiplicative"|"additive"), generators
//   hermitian:        q, l
//   power-cover:      q, s, y_cap
//   gk:               q, N, l
//   hermitian-lifted: q
//   nt-lifted:        r, delta_convention ("literal"|"interpolation-consistent")
struct CodeSpec {
    Construction construction = Construction::tamo_barg;
    std::uint32_t q = 0;
    std::uint32_t r = 0;
    std::uint32_t k = 0;
    std::uint32_t l = 0;
    std::uint32_t s = 0;
    std::uint32_t N = 0;
    std::uint32_t y_cap = 0;
    std::string source = "multiplicative";
    std::vector<std::uint32_t> generators;
    std::string delta_convention = "interpolation-consistent";
};

CodeSpec parse_spec(const nlohmann::json& j);
nlohmann::json emit_spec(const CodeSpec& spec);  // canonical form; parse-emit round-trips

struct Built {
    CodeSpec spec;
    evalcode::EvaluationCode code;
    recovery::RecoveryStructure structure;
    std::vector<std::size_t> localities;  // distinct group support sizes, ascending
    std::size_t availability = 0;
};

// Dispatches to the construction modules.  With full_verify = false the
// expensive generator-rank elimination is skipped for the large GK codes
// (the structural dimension is reported instead).
Built build(const CodeSpec& spec, bool full_verify = true);

// Point label for user-facing reports: single field code or tuple "(x,y,z)".
std::string point_label(const evalcode::EvaluationCode& code, std::size_t index);

// Construction report: n, realized k, localities, availability, design
// distance with provenance, and a bound classification.
nlohmann::json describe(const Built& built);

nlohmann::json bound_report_json(const bounds::BoundReport& report);
nlohmann::json recovery_report_json(const recovery::RecoveryReport& report);
nlohmann::json sim_report_json(const storesim::SimReport& report);

// Codeword files: whitespace-separated element codes, "?" for erasure.
evalcode::ReceivedWord read_word(std::istream& in);
void write_word(std::ostream& out, const evalcode::ReceivedWord& word);
void write_word(std::ostream& out, const std::vector<gf::elem>& word);

}  // namespace lrc::codespec

#endif
