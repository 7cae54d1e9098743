// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "bim/bi_action.hpp"

#include <optional>
#include <string>

namespace bim {

enum class Family { E, O };

// E needs odd d, O needs even d; dimension d + 1.
struct IrrepSpec {
    Family family = Family::O;
    long d = 0;
    Rational a, b, c;
    TwistElement twist;

    std::size_t dim() const { return static_cast<std::size_t>(d + 1); }
    std::string str() const;
    friend bool operator==(const IrrepSpec&, const IrrepSpec&) = default;
};

IrrepSpec make_spec(Family f, long d, Rational a, Rational b, Rational c, TwistElement g = {});

// Bidiagonal X and Y, Z = {X,Y} - kappa, then the twist.
ModuleMatrices build_irrep(const IrrepSpec& s);

// Central scalars of the untwisted module.
std::array<Rational, 3> irrep_central_scalars(const IrrepSpec& s);
// Traces and central scalars after the twist.
std::array<GaussRational, 3> spec_traces(const IrrepSpec& s);
std::array<GaussRational, 3> spec_central(const IrrepSpec& s);

bool is_irreducible_by_criterion(const IrrepSpec& s);

struct CapExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Dimension of the unital algebra generated by X, Y, Z.
std::size_t generated_algebra_dim(const ModuleMatrices& m, std::size_t cap = 8);
// Burnside: irreducible over C iff that algebra is all of Mat_dim.
bool is_irreducible_burnside(const ModuleMatrices& m, std::size_t cap = 8);

struct IdentifyFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Parameters of an irreducible module from traces and central scalars.
IrrepSpec identify(const ModuleMatrices& m, std::size_t cap = 8);

// Rational square root when one exists.
std::optional<Rational> rational_sqrt(const Rational& q);

}  // namespace bim
