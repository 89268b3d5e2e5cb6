#include "spinq/entanglement.hpp"

#include <algorithm>
#include <cmath>

namespace spinq {

namespace {

// generic 4x4 complex product helper on raw row-major storage
using Raw4 = std::array<cplx, 16>;

Raw4 to_raw(const HermMatrix& m) {
    Raw4 r{};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) r[i * 4 + j] = m(i, j);
    return r;
}

Raw4 mul(const Raw4& a, const Raw4& b) {
    Raw4 c{};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            cplx s = 0;
            for (int k = 0; k < 4; ++k) s += a[i * 4 + k] * b[k * 4 + j];
            c[i * 4 + j] = s;
        }
    return c;
}

}  // namespace

double min_bloch_eig(const DensityMatrix& rho) {
    return min_eigenvalue(bloch_from_density(rho).matrix());
}

ClassicalityVerdict is_classical(const DensityMatrix& rho) {
    EigReal e = eigh_sym_real(bloch_from_density(rho).matrix());
    ClassicalityVerdict v;
    v.lambda_min = e.values[0];
    v.classical = e.values[0] >= -kPsdTol;
    v.boundary = std::abs(e.values[0]) <= kPsdTol;
    v.witness = e.vectors[0];
    return v;
}

namespace {

const Raw4& R_matrix() {
    static const Raw4 r = [] {
        const double q = 1.0 / std::sqrt(2.0);
        Raw4 m{};
        m[0 * 4 + 0] = q;
        m[0 * 4 + 3] = q;
        m[1 * 4 + 1] = q;
        m[1 * 4 + 2] = cplx(0, -q);
        m[2 * 4 + 1] = q;
        m[2 * 4 + 2] = cplx(0, q);
        m[3 * 4 + 0] = q;
        m[3 * 4 + 3] = -q;
        return m;
    }();
    return r;
}

}  // namespace

const std::array<cplx, 16>& ppt_basis_matrix() { return R_matrix(); }

HermMatrix ppt_from_bloch(const BlochMatrix& x) {
    const Raw4& r = R_matrix();
    Raw4 xr{};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) xr[i * 4 + j] = x(i, j);
    Raw4 rx = mul(r, xr);
    Raw4 rdag{};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) rdag[i * 4 + j] = std::conj(r[j * 4 + i]);
    Raw4 out = mul(rx, rdag);
    std::vector<cplx> raw(out.begin(), out.end());
    for (cplx& z : raw) z *= 0.5;
    return HermMatrix::from_raw(4, raw, 1e-10);
}

double negativity(const DensityMatrix& rho) {
    HermMatrix pt = ppt_from_bloch(bloch_from_density(rho));
    EigHerm e = eigh_hermitian(pt);
    double n = 0;
    for (int i = 0; i < 4; ++i) n += (std::abs(e.values[i]) - e.values[i]) / 2.0;
    return n;
}

HermMatrix dicke_embed(const DensityMatrix& rho) {
    // isometry T: |1,1> -> uu, |1,0> -> (ud+du)/sqrt(2), |1,-1> -> dd
    const double q = 1.0 / std::sqrt(2.0);
    double T[4][3] = {{1, 0, 0}, {0, q, 0}, {0, q, 0}, {0, 0, 1}};
    std::vector<cplx> raw(16, cplx(0, 0));
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            cplx s = 0;
            for (int a = 0; a < 3; ++a)
                for (int b = 0; b < 3; ++b) s += T[i][a] * rho(a, b) * T[j][b];
            raw[i * 4 + j] = s;
        }
    return HermMatrix::from_raw(4, raw, 1e-12);
}

double concurrence(const HermMatrix& rho_2q) {
    EigHerm check = eigh_hermitian(rho_2q);
    if (check.values[0] < -kPsdTol) throw invalid_input("concurrence: state is not PSD");

    // Pure states: C = |<psi| (sy x sy) |psi*>|, exact and well-conditioned,
    // whereas the square-root chain below loses half the digits on the
    // vanishing tau's.
    double purity = 0;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) purity += std::norm(rho_2q(i, j));
    if (purity > 1.0 - 1e-12) {
        const auto& psi = check.vectors[3];
        cplx s = -psi[0] * psi[3] + psi[1] * psi[2] + psi[2] * psi[1] - psi[3] * psi[0];
        return std::abs(s);
    }

    // rho~ = (sy x sy) rho* (sy x sy); (sy x sy) = antidiag(-1, 1, 1, -1)
    Raw4 rho = to_raw(rho_2q);
    Raw4 conj_rho{};
    for (int i = 0; i < 16; ++i) conj_rho[i] = std::conj(rho[i]);
    Raw4 yy{};
    yy[0 * 4 + 3] = -1;
    yy[1 * 4 + 2] = 1;
    yy[2 * 4 + 1] = 1;
    yy[3 * 4 + 0] = -1;
    Raw4 tilde = mul(mul(yy, conj_rho), yy);

    HermMatrix sr = psd_sqrt(rho_2q);
    Raw4 srr = to_raw(sr);
    Raw4 inner = mul(mul(srr, tilde), srr);
    std::vector<cplx> raw(inner.begin(), inner.end());
    HermMatrix m = HermMatrix::from_raw(4, raw, 1e-8);
    HermMatrix root = psd_sqrt(m);
    EigHerm e = eigh_hermitian(root);
    // values ascending; tau_1 is the largest
    double c = e.values[3] - e.values[2] - e.values[1] - e.values[0];
    return std::max(0.0, c);
}

}  // namespace spinq
