// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "bim/dunkl.hpp"
#include "bim/linalg.hpp"

#include <functional>
#include <string>

namespace bim {

// Kernel of D on C^2 (x) R[x1,x2,x3]_n, or on a coordinate-restricted part of it.
struct MonogenicSpace {
    int n = 0;
    Multiplicity k;
    GradedBasis ambient{0, kAllVars};
    Subspace space;

    std::size_t dim() const { return space.dim(); }
    std::vector<SpinorPoly> elements() const;
};

MonogenicSpace compute_Mn(int n, const Multiplicity& k);

// Kernel of D restricted to ambient coordinates where allowed(element) holds.
MonogenicSpace compute_kernel_on_support(int n, const Multiplicity& k,
                                         const std::function<bool(const BasisElement&)>& allowed);

enum class CaseType { I, II, III, IV, Gap, Unlisted };
std::string to_string(CaseType t);

// Which case of the list after the dimension theorem holds.
// II: axis is the unique a with t_a <= n. III: axis is the unique c with n < t_c.
struct CaseInfo {
    CaseType type = CaseType::Gap;
    int axis = 0;
};

struct DimStatus {
    bool applies = false;
    long predicted = 0;
    CaseInfo info;
};

CaseInfo case_of(long n, const Multiplicity& k);
DimStatus dim_formula_status(long n, const Multiplicity& k);

}  // namespace bim
