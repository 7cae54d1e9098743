// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "bim/classify.hpp"

#include <json.hpp>

namespace bim {

// Insertion-ordered JSON keeps documents stable and readable.
using Json = nlohmann::ordered_json;

inline constexpr const char* kReportSchema = "bim.report";
inline constexpr int kReportVersion = 1;

struct Result {
    Json doc;
    bool ok = true;
};

Json to_json(const Multiplicity& k);
Json thresholds_json(const Multiplicity& k);
Json to_json(const IrrepSpec& s);
Json to_json(const Matrix& m);
Json to_json(const ClassificationReport& r);
Json to_json(const ClassificationCertificate& c);

// One grid point each; doc carries "n" and "k" first.
Result report_dim(long n, const Multiplicity& k);
Result report_submodules(long n, const Multiplicity& k);
Result report_bi(long n, const Multiplicity& k);
Result report_rank_lemma(long n, const Multiplicity& k);
Result report_ladders(long n, const Multiplicity& k);
Result report_classify(long n, const Multiplicity& k, bool verify);

Result report_irrep(const IrrepSpec& s, bool with_matrices = true, std::size_t cap = 8);
Result report_ladder(const LadderSpec& spec, long n, const Multiplicity& k);

// Submodule spanned by a ladder family's columns: M_n for type I, the lead
// axis for type III, lead and tail for type IV.
NamedSubmodule ladder_span_target(const LadderSpec& spec);

// Versioned wrapper around a list of results.
Json envelope(const std::string& command, const Json& args, const std::vector<Result>& results);

}  // namespace bim
