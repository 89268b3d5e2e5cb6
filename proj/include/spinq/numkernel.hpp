// Small dense symmetric/Hermitian matrix kernels (dim <= 4).
//
// Everything downstream (Bloch matrices, density matrices, partial
// transposes) lives in dimension 2..4, so the eigensolvers here are
// cyclic Jacobi sweeps: unconditionally stable, dependency-free, and
// deterministic for identical input.
#ifndef SPINQ_NUMKERNEL_HPP
#define SPINQ_NUMKERNEL_HPP

#include <array>
#include <complex>
#include <stdexcept>
#include <vector>

namespace spinq {

using cplx = std::complex<double>;

// Shared absolute tolerance for PSD decisions: eigenvalues above -kPsdTol
// are clamped to zero, anything below is genuinely negative.
inline constexpr double kPsdTol = 1e-10;

struct invalid_input : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Dense real symmetric matrix, dim in {3,4}. set() writes both (i,j) and
// (j,i) so storage is symmetric by construction.
class RealSymMatrix {
  public:
    explicit RealSymMatrix(int dim);
    static RealSymMatrix diag(const std::vector<double>& d);

    int dim() const { return n_; }
    double operator()(int i, int j) const { return a_[idx(i, j)]; }
    void set(int i, int j, double v) {
        a_[idx(i, j)] = v;
        a_[idx(j, i)] = v;
    }
    double frobenius() const;

  private:
    int idx(int i, int j) const { return i * n_ + j; }
    int n_;
    std::array<double, 16> a_{};
};

// Dense complex Hermitian matrix, dim in {2,3,4}. set() writes the
// conjugate pair; diagonal entries keep only their real part.
class HermMatrix {
  public:
    explicit HermMatrix(int dim);
    static HermMatrix diag(const std::vector<double>& d);

    int dim() const { return n_; }
    cplx operator()(int i, int j) const { return a_[idx(i, j)]; }
    void set(int i, int j, cplx v) {
        if (i == j) v = cplx(v.real(), 0.0);
        a_[idx(i, j)] = v;
        a_[idx(j, i)] = std::conj(v);
    }
    double frobenius() const;
    double trace_real() const;

    // Validates entries against a raw (possibly non-Hermitian) source;
    // throws invalid_input if asymmetry exceeds tol.
    static HermMatrix from_raw(int dim, const std::vector<cplx>& rowmajor,
                               double tol = 1e-12);

  private:
    int idx(int i, int j) const { return i * n_ + j; }
    int n_;
    std::array<cplx, 16> a_{};
};

// Ascending eigenvalues with orthonormal eigenvector columns.
struct EigReal {
    int dim = 0;
    std::array<double, 4> values{};
    // vectors[k] is the eigenvector for values[k]
    std::array<std::array<double, 4>, 4> vectors{};
};

struct EigHerm {
    int dim = 0;
    std::array<double, 4> values{};
    std::array<std::array<cplx, 4>, 4> vectors{};
};

EigReal eigh_sym_real(const RealSymMatrix& m);
EigHerm eigh_hermitian(const HermMatrix& m);

// PSD square root via eigendecomposition. Eigenvalues in [-kPsdTol, 0)
// are clamped; below -kPsdTol throws invalid_input.
HermMatrix psd_sqrt(const HermMatrix& m);

double min_eigenvalue(const RealSymMatrix& m);

}  // namespace spinq

#endif
