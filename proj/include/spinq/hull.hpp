// Numerical quantumness of arbitrary spin-1 states: Hilbert-Schmidt
// distance to the convex hull of coherent-state projectors, via
// simplex-constrained quadratic programming over a sampled atom set.
//
// The QP is  min_w  w^T G w - 2 b^T w + tr(rho^2)  over the probability
// simplex, with G[i][j] = |<a_i|a_j>|^2 = ((1+n_i.n_j)/2)^2 and
// b_i = <a_i|rho|a_i>. The square root of the optimum is an upper
// estimate of the true quantumness (atoms missing from the sample can
// only push it up); refine() optimizes support atom positions on the
// sphere to close that gap.
#ifndef SPINQ_HULL_HPP
#define SPINQ_HULL_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "spinq/pure.hpp"

namespace spinq {

enum class AtomStrategy { uniform_random, fibonacci };

struct CoherentAtomSet {
    std::vector<CoherentAngles> atoms;
    std::vector<std::array<double, 3>> units;  // cached unit vectors
    std::uint64_t seed = 0;
    AtomStrategy strategy = AtomStrategy::fibonacci;
};

CoherentAtomSet sample_atoms(int n, std::uint64_t seed, AtomStrategy strategy);

// Full Gram matrix, row-major n x n.
std::vector<double> atom_gram(const CoherentAtomSet& atoms);

struct QPResult {
    double quantumness_estimate = 0;
    Decomposition decomposition;  // support-pruned
    int objective_history_len = 0;
    bool converged = false;
    double residual_gradient_norm = 0;
};

// Accelerated projected gradient (FISTA with restart) for support
// identification, followed by an exact active-set polish on the support
// with full-set KKT verification.
QPResult solve_simplex_qp(const DensityMatrix& rho, const CoherentAtomSet& atoms, double tol);

// Alternates derivative-free local optimization of each support atom's
// angles with re-solving the QP on the updated support plus fresh atoms
// near it. Estimate is non-increasing across rounds.
QPResult refine(const DensityMatrix& rho, const QPResult& result, int rounds);

enum class Method { analytic_pure, qp, classical_zero };

struct QuantumnessReport {
    double lambda_min = 0;
    double value = 0;
    Method method = Method::classical_zero;
    double lower_bound = 0;    // -lambda/sqrt(3), 0 for classical states
    double f_lambda_bound = 0; // f(lambda), 0 for classical states
    bool converged = true;
    std::optional<Decomposition> decomposition;
};

struct QuantumnessConfig {
    int atoms = 1024;
    std::uint64_t seed = 1;
    AtomStrategy strategy = AtomStrategy::fibonacci;
    int refine_rounds = 2;
    double tol = 1e-9;
    double purity_threshold = 1.0 - 1e-10;
};

class QpSolver;

// Dispatch: classical states short-circuit to zero, pure states take the
// analytic path, everything else runs the QP plus refinement. A shared
// QpSolver (same atom budget/seed/strategy) avoids rebuilding the Gram
// matrix per state in batch runs.
QuantumnessReport quantumness(const DensityMatrix& rho, const QuantumnessConfig& config = {},
                              const QpSolver* shared_solver = nullptr);

// Eq.-style lower bound -lambda/sqrt(3) on [-1, 0].
double lower_bound(double lambda);

// a |psi><psi| + (1-a) ccs(psi); its smallest Bloch eigenvalue is
// a * lambda_psi.
DensityMatrix interpolated_state(const PureSpin1& psi, double a);

// Euclidean projection onto {w >= 0, sum w = 1}, sort-and-threshold.
std::vector<double> simplex_project(const std::vector<double>& v);

// Precomputed solver context for running many states against one atom set
// (shares the Gram matrix and its Lipschitz estimate; read-only and safe
// to use from several threads at once).
class QpSolver {
  public:
    explicit QpSolver(CoherentAtomSet atoms);
    QPResult solve(const DensityMatrix& rho, double tol) const;
    const CoherentAtomSet& atoms() const { return atoms_; }

  private:
    CoherentAtomSet atoms_;
    std::vector<double> gram_;
    double lipschitz_ = 1.0;
    friend QPResult solve_simplex_qp(const DensityMatrix&, const CoherentAtomSet&, double);
};

}  // namespace spinq

#endif
