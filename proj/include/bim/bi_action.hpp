// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "bim/monogenics.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace bim {

// Generators are indexed 1 = X, 2 = Y, 3 = Z.
SpinorPoly apply_XYZ(int which, const SpinorPoly& f, const Multiplicity& k);

struct ModuleMatrices {
    std::string provenance;
    std::array<Matrix, 3> g;  // X, Y, Z

    std::size_t dim() const { return g[0].rows(); }
    const Matrix& X() const { return g[0]; }
    const Matrix& Y() const { return g[1]; }
    const Matrix& Z() const { return g[2]; }
};

// Central elements: kappa = {X,Y} - Z, lambda = {Y,Z} - X, mu = {Z,X} - Y.
enum class Central { Kappa, Lambda, Mu };
Matrix central_element(const ModuleMatrices& m, Central c);

// Scalars of kappa, lambda, mu on M_n.
std::array<Rational, 3> predicted_central_scalars(long n, const Multiplicity& k);

// Thrown when a span fails to be invariant under X, Y, Z.
struct ClosureFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Least-squares-free exact solve: columns of W expressed in the independent columns of B.
std::optional<Matrix> solve_in_span(const Matrix& B, const Matrix& W);

// Induced X, Y, Z on span(frame) + bottom modulo bottom, in the frame basis.
// frame and bottom hold ambient coordinates of degree-n spinors.
ModuleMatrices induced_matrices(int n, const Multiplicity& k, const std::vector<Vec>& frame,
                                const std::vector<Vec>& bottom, std::string provenance = {});

// Echelon-complement frame of top modulo bottom (bottom must lie in top).
std::vector<Vec> complement_frame(const Subspace& top, const Subspace& bottom);

ModuleMatrices matrices_on(int n, const Multiplicity& k, const Subspace& top, const Subspace& bottom,
                           std::string provenance = {});

struct ScalarCheck {
    std::optional<GaussRational> computed;  // set when the element is scalar
    Rational predicted;
    bool matches = false;
};

struct RelationCertificate {
    bool commute_ok = false;  // all nine commutators vanish
    std::array<ScalarCheck, 3> scalars;
    bool ok() const { return commute_ok && scalars[0].matches && scalars[1].matches && scalars[2].matches; }
};

RelationCertificate verify_bi_relations(const ModuleMatrices& m, const std::array<Rational, 3>& predicted);

// Element of {+-1}^2 x| S3, acting on the algebra as eps o pi with
// pi(X_i) = X_{pi(i)} and eps the sign automorphism.
class TwistElement {
public:
    TwistElement() = default;
    TwistElement(std::array<int, 2> eps, std::array<int, 3> perm);

    static TwistElement identity() { return {}; }
    static TwistElement parse(const std::string& s);
    static std::vector<TwistElement> all();

    const std::array<int, 2>& eps() const { return eps_; }
    // perm()[i-1] = pi(i)
    const std::array<int, 3>& perm() const { return perm_; }
    // g(X_i) = sign(i) * X_{image(i)}
    int sign(int i) const;
    int image(int i) const { return perm_[i - 1]; }

    TwistElement inverse() const;
    // Same sign pair with the inverse permutation.
    TwistElement alternate_cycle_convention() const;
    std::string str() const;

    // Composition of automorphisms: (g * h)(u) = g(h(u)).
    friend TwistElement operator*(const TwistElement& g, const TwistElement& h);
    friend bool operator==(const TwistElement&, const TwistElement&) = default;

private:
    std::array<int, 2> eps_{1, 1};
    std::array<int, 3> perm_{1, 2, 3};
};

// Sign pattern of eps on (X, Y, Z).
std::array<int, 3> eps_signs(const std::array<int, 2>& eps);

// V^g: each generator acts through g.
ModuleMatrices twist(const ModuleMatrices& m, const TwistElement& g);

// Central scalars of V^g from those of V (order kappa, lambda, mu).
std::array<GaussRational, 3> twist_central(const std::array<GaussRational, 3>& c, const TwistElement& g);
// Traces of X, Y, Z on V^g from those on V.
std::array<GaussRational, 3> twist_traces(const std::array<GaussRational, 3>& tr, const TwistElement& g);

}  // namespace bim
