// Exact quantumness of pure spin-1 states.
//
// Any pure state is a pair of Majorana points on the sphere; rotating it
// to the canonical position (gamma,0),(pi-gamma,0) reduces the problem to
// the single parameter lambda = (sin^2 gamma - 1)/(sin^2 gamma + 1), the
// smallest eigenvalue of the Bloch matrix. The quantumness is then
//   f(lambda) = -sqrt(3/8)*lambda                 for lambda <= -1/2
//   f(lambda) = (1/2)*sqrt(lambda^2 + ell(lambda)) otherwise
// and the closest classical state is explicit in both branches.
#ifndef SPINQ_PURE_HPP
#define SPINQ_PURE_HPP

#include <optional>
#include <vector>

#include "spinq/states.hpp"

namespace spinq {

struct MajoranaPair {
    std::array<double, 3> p1{}, p2{};  // unit vectors
    bool degenerate = false;           // coincident points <=> coherent state
};

struct CanonicalForm {
    double gamma = 0;   // [0, pi/2]
    double lambda = 0;  // [-1, 0]
    // maps the original Majorana points to (gamma,0),(pi-gamma,0)
    Rotation3 rotation = Rotation3::identity();
};

struct EllEvaluation {
    double lambda = 0;
    double d_root = 0;  // real root of sqrt(1-l^2) + y(1+l) - 2y^3 in (sqrt(3)/2, 1]
    double ell = 0;
    double h_aux = 0;  // populated by the closed-form route only
};

// Weighted mixture of coherent-state projectors.
struct Decomposition {
    std::vector<double> weights;
    std::vector<CoherentAngles> atoms;
};

enum class CcsBranch { steep, shallow };  // lambda <= -1/2 vs lambda > -1/2

struct ClosestClassical {
    BlochMatrix W;
    Decomposition decomposition;
    CcsBranch branch;
};

MajoranaPair majorana_points(const PureSpin1& psi);
CanonicalForm canonicalize(const PureSpin1& psi);

// Cubic-root route (authoritative). Domain: lambda in (-1/2, 0].
EllEvaluation ell(double lambda);
// Explicit radical formula; cross-check only (cancellation-prone near 0).
double ell_closed_form(double lambda);

double f_quantumness(double lambda);  // domain [-1, 0]

// Closest classical state of the canonical pure state with parameter
// lambda < 0, in the canonical frame.
ClosestClassical ccs_canonical(double lambda);
// Closest classical state of an arbitrary pure state (rotated back to the
// original frame). For lambda >= 0 (coherent input) returns the state
// itself as a single-atom decomposition.
ClosestClassical ccs_of_pure(const PureSpin1& psi);

// Brute-force grid minimization of
//   F(u,v,g) = (1-u)^2 + (lambda+v)^2 + 2*(sqrt(1-lambda^2)-g)^2
// over u,v >= 0, u+v <= 1, -sqrt(u) <= g <= sqrt(u). Independent oracle
// for ell(); grid with local refinement.
double appendix_oracle_F_min(double lambda, int grid_n);

// Bloch matrix of a decomposition, sum_i w_i n_i n_i^T.
BlochMatrix mixture_bloch(const Decomposition& d);
DensityMatrix mixture_density(const Decomposition& d);

}  // namespace spinq

#endif
