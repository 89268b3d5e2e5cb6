// Classicality via Bloch positivity, the PPT-Bloch correspondence, and
// entanglement measures of the symmetric two-qubit embedding.
#ifndef SPINQ_ENTANGLEMENT_HPP
#define SPINQ_ENTANGLEMENT_HPP

#include "spinq/states.hpp"

namespace spinq {

struct ClassicalityVerdict {
    double lambda_min = 0;
    bool classical = false;
    bool boundary = false;  // |lambda_min| <= kPsdTol
    std::array<double, 4> witness{};  // eigenvector of the smallest eigenvalue
};

double min_bloch_eig(const DensityMatrix& rho);
ClassicalityVerdict is_classical(const DensityMatrix& rho);

// rho^PT = (1/2) R X R^dagger with the fixed basis-change unitary R.
// Hermitian trace-1, not necessarily PSD. Basis order (uu, ud, du, dd).
HermMatrix ppt_from_bloch(const BlochMatrix& x);
// The fixed 4x4 basis-change unitary R, row-major. R R^dagger = 1.
const std::array<cplx, 16>& ppt_basis_matrix();

double negativity(const DensityMatrix& rho);

// Embed a spin-1 state into the symmetric subspace of two qubits via
// |1,m> = |D_{1-m}>. Result is a valid 4x4 density matrix.
HermMatrix dicke_embed(const DensityMatrix& rho);

// Wootters concurrence of a two-qubit state, computed through Hermitian
// square roots: tau_i are the eigenvalues of sqrt(sqrt(rho) rho~ sqrt(rho)).
double concurrence(const HermMatrix& rho_2q);

}  // namespace spinq

#endif
