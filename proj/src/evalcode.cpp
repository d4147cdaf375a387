// Copyright (c) 2026 The lrc-toolkit authors.
// SPDX-License-Identifier: Apache-2.0

#include "evalcode.hpp"

#include <sstream>

namespace lrc::evalcode {

const char* provenance_name(DistanceProvenance p) {
    switch (p) {
        case DistanceProvenance::formula: return "formula";
        case DistanceProvenance::brute_force: return "brute-force";
        case DistanceProvenance::reported_unverified: return "reported, unverified";
        default: return "unknown";
    }
}

gf::elem BasisElem::eval(const gf::Field& F, const std::vector<gf::elem>& coords) const {
    gf::elem acc = 1;
    for (std::size_t i = 0; i < exps.size(); ++i)
        if (exps[i] != 0) acc = F.mul(acc, F.pow(coords[i], exps[i]));
    if (g && gpow != 0) acc = F.mul(acc, F.pow(g->eval(coords[0]), gpow));
    return acc;
}

std::string BasisElem::name(const std::vector<std::string>& vars) const {
    std::ostringstream os;
    bool any = false;
    for (std::size_t i = 0; i < exps.size(); ++i) {
        if (exps[i] == 0) continue;
        if (any) os << "*";
        os << (i < vars.size() ? vars[i] : "v" + std::to_string(i));
        if (exps[i] > 1) os << "^" << exps[i];
        any = true;
    }
    if (g && gpow != 0) {
        if (any) os << "*";
        os << "g^" << gpow;
        any = true;
    }
    if (!any) os << "1";
    return os.str();
}

EvaluationCode build_code(gf::FieldPtr field, std::vector<EvaluationPoint> points,
                          std::vector<BasisElem> basis, std::vector<std::string> var_names,
                          bool compute_rank) {
    if (points.empty()) throw gf::field_error("evaluation set is empty");
    EvaluationCode code;
    code.field = field;
    code.var_names = std::move(var_names);
    for (std::size_t i = 0; i < points.size(); ++i) points[i].index = i;
    code.points = std::move(points);
    code.basis = std::move(basis);
    const auto& F = *field;
    const std::size_t n = code.points.size();
    code.generator = matgf::Matrix(code.basis.size(), n);
    for (std::size_t r = 0; r < code.basis.size(); ++r)
        for (std::size_t j = 0; j < n; ++j)
            code.generator.at(r, j) = code.basis[r].eval(F, code.points[j].coords);
    if (compute_rank) {
        auto rr = matgf::rank_with_basis(F, code.generator);
        code.k = rr.rank;
        code.encoding_rows = std::move(rr.independent_rows);
    } else {
        code.k = code.basis.size();
        code.encoding_rows.resize(code.k);
        for (std::size_t r = 0; r < code.k; ++r) code.encoding_rows[r] = r;
    }
    return code;
}

std::vector<gf::elem> encode(const EvaluationCode& code, const std::vector<gf::elem>& message) {
    if (message.size() != code.k) throw gf::field_error("message length must equal k");
    const auto& F = *code.field;
    std::vector<gf::elem> word(code.n(), 0);
    for (std::size_t r = 0; r < code.k; ++r) {
        gf::elem c = message[r];
        if (c == 0) continue;
        const gf::elem* row = code.encoding_row(r);
        for (std::size_t j = 0; j < word.size(); ++j)
            word[j] = F.add(word[j], F.mul(c, row[j]));
    }
    return word;
}

std::optional<std::vector<gf::elem>> solve_message(const EvaluationCode& code,
                                                   const std::vector<gf::elem>& word) {
    const auto& F = *code.field;
    // columns of A are the encoding rows (transposed system)
    matgf::Matrix A(code.n(), code.k);
    for (std::size_t r = 0; r < code.k; ++r) {
        const gf::elem* row = code.encoding_row(r);
        for (std::size_t j = 0; j < code.n(); ++j) A.at(j, r) = row[j];
    }
    return matgf::solve(F, A, word);
}

std::optional<int> min_distance_bruteforce(const EvaluationCode& code, std::uint64_t work_budget) {
    if (code.k == 0) throw gf::field_error("minimum distance of the zero code");
    const auto& F = *code.field;
    const std::uint64_t q = F.q();
    // class count = (q^k - 1)/(q - 1), with overflow guard
    std::uint64_t classes = 0, power = 1;
    for (std::size_t i = 0; i < code.k; ++i) {
        classes += power;
        if (power > work_budget) return std::nullopt;
        power *= q;
    }
    if (classes > work_budget) return std::nullopt;

    const std::size_t n = code.n();
    std::vector<gf::elem> word(n), msg(code.k, 0);
    int best = static_cast<int>(n) + 1;
    // leading coordinate normalized to 1; trailing coordinates range freely
    for (std::size_t lead = 0; lead < code.k; ++lead) {
        std::fill(msg.begin(), msg.end(), 0);
        msg[lead] = 1;
        const std::size_t free_from = lead + 1;
        bool done = false;
        while (!done) {
            const gf::elem* lrow = code.encoding_row(lead);
            std::copy(lrow, lrow + n, word.begin());
            for (std::size_t r = free_from; r < code.k; ++r) {
                gf::elem c = msg[r];
                if (c == 0) continue;
                const gf::elem* row = code.encoding_row(r);
                for (std::size_t j = 0; j < n; ++j) word[j] = F.add(word[j], F.mul(c, row[j]));
            }
            int w = 0;
            for (std::size_t j = 0; j < n; ++j)
                if (word[j] != 0) ++w;
            if (w < best && w > 0) best = w;
            // odometer over msg[free_from..k)
            std::size_t pos = code.k;
            done = true;
            while (pos-- > free_from) {
                if (++msg[pos] < q) { done = false; break; }
                msg[pos] = 0;
            }
        }
    }
    return best;
}

std::size_t ReceivedWord::erasure_count() const {
    std::size_t c = 0;
    for (auto s : symbols)
        if (s == kErased) ++c;
    return c;
}

}  // namespace lrc::evalcode
