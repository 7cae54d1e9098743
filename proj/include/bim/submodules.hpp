// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "bim/monogenics.hpp"

#include <optional>
#include <vector>

namespace bim {

struct SubmoduleFilter {
    enum class Mode { High, Low };
    int axis = 1;
    Mode mode = Mode::High;
};

inline SubmoduleFilter high(int axis) { return {axis, SubmoduleFilter::Mode::High}; }
inline SubmoduleFilter low(int axis) { return {axis, SubmoduleFilter::Mode::Low}; }

// M_n intersected with the monomial-support conditions; one kernel computation.
MonogenicSpace compute_submodule(int n, const Multiplicity& k, const std::vector<SubmoduleFilter>& filters);

// Nullity of D(x_axis)^power on C^2 (x) R[complement of axis]_n.
long partial_power_nullity(int axis, int n, const Multiplicity& k, int power);

// Closed forms for the dimensions of the named submodules.
long predicted_dim_high(int n, const Multiplicity& k, const std::vector<int>& axes);
long predicted_dim_low(int n, const Multiplicity& k, int axis);

struct DecompositionCertificate {
    int axis = 0;
    long dim_M = 0;
    long dim_high = 0;
    long dim_low = 0;
    long dim_sum = 0;  // dimension of the span of both bases
    bool ok = false;
};

DecompositionCertificate verify_decomposition(int n, const Multiplicity& k, int axis);

// sum_{i=lower}^{upper} (-1)^{ceil(i/2)} sigma_axis^i (x) [x_axis]^{upper}_i (D(x_axis)^{i-lower} seed).
// Throws when D(x_axis)^{upper-lower+1} seed != 0 or the seed is not a slice element of degree n - lower.
SpinorPoly lift_from_slice(int axis, int n, const Multiplicity& k, const SpinorPoly& seed, int lower, int upper);

// Seeds and ranges realizing each named submodule through lift_from_slice.
struct LiftPlan {
    int axis = 1;
    int lower = 0;
    int upper = 0;
    std::vector<SpinorPoly> seeds;
};

// axes must be nonempty; the first axis carries the lift, the others become x^t prefactors.
std::optional<LiftPlan> lift_plan_high(int n, const Multiplicity& k, const std::vector<int>& axes);
LiftPlan lift_plan_low(int n, const Multiplicity& k, int axis);

}  // namespace bim
