#include "spinq/numkernel.hpp"

#include <algorithm>
#include <cmath>

namespace spinq {

namespace {

bool all_finite(const double* p, int n) {
    for (int i = 0; i < n; ++i)
        if (!std::isfinite(p[i])) return false;
    return true;
}

}  // namespace

RealSymMatrix::RealSymMatrix(int dim) : n_(dim) {
    if (dim != 3 && dim != 4) throw invalid_input("RealSymMatrix: dim must be 3 or 4");
}

RealSymMatrix RealSymMatrix::diag(const std::vector<double>& d) {
    RealSymMatrix m(static_cast<int>(d.size()));
    for (int i = 0; i < m.n_; ++i) m.set(i, i, d[i]);
    return m;
}

double RealSymMatrix::frobenius() const {
    double s = 0;
    for (int i = 0; i < n_ * n_; ++i) s += a_[i] * a_[i];
    return std::sqrt(s);
}

HermMatrix::HermMatrix(int dim) : n_(dim) {
    if (dim < 2 || dim > 4) throw invalid_input("HermMatrix: dim must be 2..4");
}

HermMatrix HermMatrix::diag(const std::vector<double>& d) {
    HermMatrix m(static_cast<int>(d.size()));
    for (int i = 0; i < m.n_; ++i) m.set(i, i, d[i]);
    return m;
}

double HermMatrix::frobenius() const {
    double s = 0;
    for (int i = 0; i < n_ * n_; ++i) s += std::norm(a_[i]);
    return std::sqrt(s);
}

double HermMatrix::trace_real() const {
    double s = 0;
    for (int i = 0; i < n_; ++i) s += a_[idx(i, i)].real();
    return s;
}

HermMatrix HermMatrix::from_raw(int dim, const std::vector<cplx>& rowmajor, double tol) {
    if (static_cast<int>(rowmajor.size()) != dim * dim)
        throw invalid_input("HermMatrix::from_raw: size mismatch");
    double scale = 0;
    for (const cplx& z : rowmajor) scale = std::max(scale, std::abs(z));
    HermMatrix m(dim);
    for (int i = 0; i < dim; ++i)
        for (int j = i; j < dim; ++j) {
            cplx upper = rowmajor[i * dim + j];
            cplx lower = rowmajor[j * dim + i];
            if (std::abs(upper - std::conj(lower)) > tol * (1.0 + scale))
                throw invalid_input("HermMatrix::from_raw: matrix is not Hermitian");
            m.set(i, j, 0.5 * (upper + std::conj(lower)));
        }
    return m;
}

namespace {

// Cyclic Jacobi on a complex Hermitian matrix held in a 4x4 scratch
// buffer. The real symmetric case reuses this with zero imaginary parts.
struct JacobiWork {
    int n;
    std::array<cplx, 16> a;  // matrix, overwritten
    std::array<cplx, 16> v;  // accumulated unitary, columns = eigenvectors

    cplx& A(int i, int j) { return a[i * n + j]; }
    cplx& V(int i, int j) { return v[i * n + j]; }

    double off_diag_mass() const {
        double s = 0;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (i != j) s += std::norm(a[i * n + j]);
        return std::sqrt(s);
    }

    double frob() const {
        double s = 0;
        for (int i = 0; i < n * n; ++i) s += std::norm(a[i]);
        return std::sqrt(s);
    }

    void rotate(int p, int q) {
        cplx apq = A(p, q);
        double t_abs = std::abs(apq);
        if (t_abs == 0.0) return;
        cplx phase = apq / t_abs;  // a_pq = |a_pq| * phase
        double app = A(p, p).real();
        double aqq = A(q, q).real();
        double tau = (aqq - app) / (2.0 * t_abs);
        double t = (tau >= 0 ? -1.0 : 1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        double c = 1.0 / std::sqrt(1.0 + t * t);
        double s = t * c;
        // Unitary acting on columns (p,q):
        //   col p <- c*col_p + s*conj(phase)*col_q
        //   col q <- -s*phase*col_p + c*col_q
        // chosen so that A'(p,q) = 0.
        cplx up = s * std::conj(phase);
        cplx uq = -s * phase;
        // A <- U^H A U ; update columns then rows.
        for (int k = 0; k < n; ++k) {
            cplx akp = A(k, p), akq = A(k, q);
            A(k, p) = c * akp + up * akq;
            A(k, q) = uq * akp + c * akq;
        }
        for (int k = 0; k < n; ++k) {
            cplx apk = A(p, k), aqk = A(q, k);
            A(p, k) = c * apk + std::conj(up) * aqk;
            A(q, k) = std::conj(uq) * apk + c * aqk;
        }
        A(p, q) = 0;
        A(q, p) = 0;
        A(p, p) = cplx(A(p, p).real(), 0.0);
        A(q, q) = cplx(A(q, q).real(), 0.0);
        for (int k = 0; k < n; ++k) {
            cplx vkp = V(k, p), vkq = V(k, q);
            V(k, p) = c * vkp + up * vkq;
            V(k, q) = uq * vkp + c * vkq;
        }
    }

    void run() {
        double target = 1e-14 * (1.0 + frob());
        for (int sweep = 0; sweep < 60; ++sweep) {
            if (off_diag_mass() < target) break;
            for (int p = 0; p < n - 1; ++p)
                for (int q = p + 1; q < n; ++q) rotate(p, q);
        }
    }
};

// Sort eigenpairs ascending and fix each eigenvector's global phase so the
// first component with magnitude > 1e-8 is real positive. Deterministic
// output even for degenerate spectra.
void sort_and_fix(JacobiWork& w, std::array<double, 4>& values,
                  std::array<std::array<cplx, 4>, 4>& vectors) {
    int n = w.n;
    std::array<int, 4> order{};
    for (int i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.begin() + n,
              [&](int i, int j) { return w.A(i, i).real() < w.A(j, j).real(); });
    for (int k = 0; k < n; ++k) {
        int c = order[k];
        values[k] = w.A(c, c).real();
        for (int i = 0; i < n; ++i) vectors[k][i] = w.V(i, c);
        for (int i = 0; i < n; ++i) {
            if (std::abs(vectors[k][i]) > 1e-8) {
                cplx ph = vectors[k][i] / std::abs(vectors[k][i]);
                for (int j = 0; j < n; ++j) vectors[k][j] /= ph;
                break;
            }
        }
    }
}

}  // namespace

EigReal eigh_sym_real(const RealSymMatrix& m) {
    int n = m.dim();
    {
        std::array<double, 16> chk{};
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) chk[i * n + j] = m(i, j);
        if (!all_finite(chk.data(), n * n))
            throw invalid_input("eigh_sym_real: non-finite entry");
    }
    JacobiWork w;
    w.n = n;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            w.A(i, j) = m(i, j);
            w.V(i, j) = (i == j) ? 1.0 : 0.0;
        }
    w.run();
    std::array<double, 4> values{};
    std::array<std::array<cplx, 4>, 4> vectors{};
    sort_and_fix(w, values, vectors);
    EigReal out;
    out.dim = n;
    out.values = values;
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i) out.vectors[k][i] = vectors[k][i].real();
    return out;
}

EigHerm eigh_hermitian(const HermMatrix& m) {
    int n = m.dim();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            cplx z = m(i, j);
            if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
                throw invalid_input("eigh_hermitian: non-finite entry");
        }
    JacobiWork w;
    w.n = n;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            w.A(i, j) = m(i, j);
            w.V(i, j) = (i == j) ? 1.0 : 0.0;
        }
    w.run();
    EigHerm out;
    out.dim = n;
    sort_and_fix(w, out.values, out.vectors);
    return out;
}

HermMatrix psd_sqrt(const HermMatrix& m) {
    EigHerm e = eigh_hermitian(m);
    int n = m.dim();
    for (int k = 0; k < n; ++k)
        if (e.values[k] < -kPsdTol) throw invalid_input("psd_sqrt: matrix is not PSD");
    // Eigenvalues indistinguishable from zero are set to zero: taking the
    // square root would otherwise turn O(eps) rounding noise into O(sqrt(eps)).
    const double floor = 1e-13 * (1.0 + std::abs(e.values[n - 1]));
    HermMatrix r(n);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            cplx s = 0;
            for (int k = 0; k < n; ++k) {
                double lam = (e.values[k] <= floor) ? 0.0 : e.values[k];
                s += std::sqrt(lam) * e.vectors[k][i] * std::conj(e.vectors[k][j]);
            }
            r.set(i, j, s);
        }
    return r;
}

double min_eigenvalue(const RealSymMatrix& m) { return eigh_sym_real(m).values[0]; }

}  // namespace spinq
