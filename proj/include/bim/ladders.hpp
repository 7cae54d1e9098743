// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "bim/bi_action.hpp"

#include <functional>
#include <string>
#include <vector>

namespace bim {

// Thresholds read as integers; throws for an infinite one.
struct LadderContext {
    long n = 0;
    Multiplicity k;
    long t(int axis) const;
};

// One bracket factor [x_axis]^{upper}_{lower} of a ladder term.
struct BracketRole {
    int axis = 1;
    std::function<long(const LadderContext&, long i, long h, long j)> upper, lower;
};

// c_{h,i,j} = value when the parities of (h, i, j) match; -1 in a slot means any parity.
struct CoefficientRule {
    int h_odd, i_odd, j_odd;
    Mat2 fixed;
    int power_axis = 0;  // when nonzero the value is sigma_{power_axis}^j * fixed
};

// Data for one displayed ladder family; everything is stated for the unrotated axes.
struct LadderCase {
    std::string id;
    int parity = 1;  // n mod 2
    std::string hypothesis_text;
    std::function<bool(long n, const Multiplicity& k)> hypothesis;
    std::function<long(const LadderContext&)> top;  // last index i
    int h_sign = 1;                                 // (-1)^{h_sign * h / 2}
    int j_sign = 1;
    // binom(floor((U - i - j)/2) + floor((i - h)/2), floor((i - h)/2)) with U the lead bracket's upper index
    bool binomial = true;
    std::function<long(const LadderContext&)> j_lower;
    std::function<long(const LadderContext&, long h)> j_upper;
    std::array<BracketRole, 3> brackets;
    std::vector<CoefficientRule> table;
    int raise = 1, lower = 2;  // generator indices of the two recurrences
    std::function<Rational(const LadderContext&, long i)> theta, theta_star, phi;
};

const std::vector<LadderCase>& ladder_cases();
const LadderCase& ladder_case(const std::string& id);

// A displayed family optionally moved by the cyclic relabelling x1 -> x2 -> x3 -> x1.
struct LadderSpec {
    std::string case_id;
    int rotation = 0;  // 0, 1 or 2
    std::string str() const;
};

struct Ladder {
    LadderSpec spec;
    long n = 0;
    Multiplicity k;
    int raise = 1, lower = 2;  // after rotation
    std::vector<MatPoly> elements;
    std::vector<Rational> theta, theta_star, phi;  // phi[0] unused
};

struct LadderError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Multiplicity seen by the unrotated family: k'_a = k_{rho^r(a)}.
Multiplicity rotate_source(const Multiplicity& k, int rotation);
int rotate_axis(int axis, int rotation);
bool ladder_applies(const LadderSpec& spec, long n, const Multiplicity& k);
Ladder build_ladder(const LadderSpec& spec, long n, const Multiplicity& k);

// Exact matrix U with U sigma_a U^{-1} = sigma_{rho(a)}.
const Mat2& rotation_matrix();
Poly rotate_poly(const Poly& p, int rotation);

MatPoly apply_generator(int which, const MatPoly& p, const Multiplicity& k);

struct LadderCertificate {
    bool annihilated = true;
    bool raise_ok = true;
    bool lower_ok = true;
    bool independent = true;  // over Mat_2, as left combinations
    std::vector<std::string> failures;
    bool ok() const { return annihilated && raise_ok && lower_ok && independent; }
};

LadderCertificate verify_ladder(const Ladder& L);

// Column c of every element, for indices in [from, to].
std::vector<SpinorPoly> ladder_column(const Ladder& L, int column, long from, long to);
std::array<std::vector<SpinorPoly>, 2> column_split(const Ladder& L);

}  // namespace bim
