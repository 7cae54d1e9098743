// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "bim/irreps.hpp"
#include "bim/ladders.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace bim {

// 0, M_n, or the intersection of M_n(x_a) over the listed axes.
struct NamedSubmodule {
    bool zero = false;
    std::vector<int> axes;  // sorted; empty means M_n

    static NamedSubmodule zero_module() { return {true, {}}; }
    static NamedSubmodule whole() { return {false, {}}; }
    static NamedSubmodule of(std::vector<int> axes);
    std::string str() const;
    friend bool operator==(const NamedSubmodule&, const NamedSubmodule&) = default;
};

std::string subquotient_name(const NamedSubmodule& top, const NamedSubmodule& bottom);

// Ladder elements with index in [from, to]; column c of each gives copy c.
struct FramePiece {
    LadderSpec ladder;
    long from = 0, to = -1;
};

struct PredictedFactor {
    NamedSubmodule top, bottom;
    int multiplicity = 2;
    IrrepSpec spec;      // twisted, as stated
    IrrepSpec isomorph;  // untwisted form claimed under the nonnegativity clause
    std::vector<FramePiece> frame;
    std::string name() const { return subquotient_name(top, bottom); }
};

// Subquotient stated to be the sum of two copies of each listed factor.
struct CompositeClaim {
    NamedSubmodule top, bottom;
    std::vector<std::size_t> parts;  // indices into factors
    std::vector<FramePiece> frame;
    std::string name() const { return subquotient_name(top, bottom); }
};

struct ClassificationReport {
    long n = 0;
    Multiplicity k;
    std::array<Threshold, 3> t;
    CaseInfo info;
    std::string subcase;     // empty when no theorem applies
    std::string hypothesis;  // inequality of the subcase
    std::string nonneg_clause;
    bool nonneg_holds = false;
    std::size_t dim_M = 0;
    bool dim_formula_applies = false;
    long dim_predicted = 0;
    std::map<std::string, std::size_t> submodule_dims;  // brute force
    std::vector<PredictedFactor> factors;
    std::vector<CompositeClaim> composites;
    std::vector<std::vector<NamedSubmodule>> filtrations;  // chains from 0 to M_n

    bool has_prediction() const { return !subcase.empty(); }
};

ClassificationReport classify(long n, const Multiplicity& k);

struct FactorCheck {
    std::string name;
    std::size_t expected_dim = 0, computed_dim = 0;
    bool dimension = false;
    bool frame_ok = false;  // both copies closed, independent and spanning with the bottom
    bool copies_identical = false;
    bool traces = false;
    bool central = false;
    bool word_traces = false;  // traces of all words of length <= 3
    // Nonnegativity clause; only meaningful when hypothesis is true.
    bool hypothesis = false;
    bool criterion = false;
    bool isomorph = false;
    std::optional<bool> burnside;     // unset when the copy exceeds the cap
    std::optional<bool> identify_ok;  // same
    // Cross-check with the opposite cycle convention.
    bool alternate_differs = false;
    bool alternate_matches = false;
    bool ambiguous() const { return alternate_differs && alternate_matches; }
    std::vector<std::string> failures;
    bool ok() const { return failures.empty(); }
};

struct CompositeCheck {
    std::string name;
    bool dimension = false, frame_ok = false, copies_identical = false, traces = false, central = false;
    std::vector<std::string> failures;
    bool ok() const { return failures.empty(); }
};

struct FiltrationCheck {
    std::string chain;
    long computed_sum = 0, predicted_sum = 0, dim_M = 0;
    bool ok() const { return computed_sum == dim_M && predicted_sum == dim_M; }
};

struct ClassificationCertificate {
    std::vector<FactorCheck> factors;
    std::vector<CompositeCheck> composites;
    std::vector<FiltrationCheck> filtrations;
    bool ok() const;
};

// Throws std::invalid_argument when the report carries no prediction.
ClassificationCertificate verify_classification(const ClassificationReport& r, std::size_t cap = 8);

// Traces of every word of length 1..max_len in X, Y, Z, in a fixed order.
std::vector<GaussRational> word_trace_signature(const ModuleMatrices& m, int max_len = 3);

}  // namespace bim
