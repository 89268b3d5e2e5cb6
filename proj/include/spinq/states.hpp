// Spin-1 state representations and exact conversions between the
// density-matrix and Bloch-matrix pictures.
//
// Basis ordering is fixed to (|1,1>, |1,0>, |1,-1>) throughout, with the
// standard spin-1 angular momentum matrices and hbar = 1.
#ifndef SPINQ_STATES_HPP
#define SPINQ_STATES_HPP

#include <array>

#include "spinq/numkernel.hpp"

namespace spinq {

// Spherical direction; theta clamped to [0,pi], phi wrapped mod 2*pi
// on construction.
struct CoherentAngles {
    double theta = 0;
    double phi = 0;
    CoherentAngles() = default;
    CoherentAngles(double t, double p);
    std::array<double, 3> unit_vector() const;
    static CoherentAngles from_vector(const std::array<double, 3>& n);
};

// Normalized pure spin-1 state (d_plus, d_zero, d_minus) on
// (|1,1>, |1,0>, |1,-1>).
struct PureSpin1 {
    cplx d_plus, d_zero, d_minus;
    PureSpin1(cplx dp, cplx d0, cplx dm);
    double norm2() const;
};

// 3x3 Hermitian, trace 1, PSD within tolerance.
class DensityMatrix {
  public:
    explicit DensityMatrix(const HermMatrix& h);
    static DensityMatrix pure(const PureSpin1& psi);
    const HermMatrix& matrix() const { return h_; }
    cplx operator()(int i, int j) const { return h_(i, j); }
    double purity() const;

  private:
    HermMatrix h_;
};

// 4x4 real symmetric Bloch matrix; index 0 is the identity slot.
// X[0][0] = 1 and trace = 2 are checked at construction. Positivity is
// NOT part of the invariant: synthetic Bloch matrices outside the state
// space are legitimate intermediate objects.
class BlochMatrix {
  public:
    explicit BlochMatrix(const RealSymMatrix& x);
    const RealSymMatrix& matrix() const { return x_; }
    double operator()(int i, int j) const { return x_(i, j); }

  private:
    RealSymMatrix x_;
};

// Proper rotation: orthogonal, det +1 (checked at construction).
class Rotation3 {
  public:
    explicit Rotation3(const std::array<std::array<double, 3>, 3>& r);
    static Rotation3 identity();
    static Rotation3 from_rows(const std::array<double, 3>& x,
                               const std::array<double, 3>& y,
                               const std::array<double, 3>& z);
    static Rotation3 axis_angle(const std::array<double, 3>& axis, double angle);
    double operator()(int i, int j) const { return r_[i][j]; }
    Rotation3 transpose() const;
    std::array<double, 3> apply(const std::array<double, 3>& v) const;

  private:
    Rotation3() = default;
    std::array<std::array<double, 3>, 3> r_{};
};

// The nine S_{mu nu} operators of the tensor representation:
// S_00 = 1, S_a0 = S_0a = J_a, S_ab = J_a J_b + J_b J_a - delta_ab.
const HermMatrix& spin1_S(int mu, int nu);

PureSpin1 coherent_amplitudes(const CoherentAngles& angles);
BlochMatrix bloch_from_density(const DensityMatrix& rho);
// Inverse of bloch_from_density. The result is Hermitian trace-1 but not
// necessarily PSD; positivity checking is the caller's job.
HermMatrix density_herm_from_bloch(const BlochMatrix& x);
DensityMatrix density_from_bloch(const BlochMatrix& x);  // throws if not PSD
BlochMatrix rotate_bloch(const BlochMatrix& x, const Rotation3& r);
double hs_distance(const DensityMatrix& a, const DensityMatrix& b);
double hs_distance(const BlochMatrix& a, const BlochMatrix& b);  // (1/2)||Xa-Xb||_F

// Bloch matrix of the coherent state in direction n: X = n n^T with n0=1.
BlochMatrix coherent_bloch(const CoherentAngles& angles);

cplx overlap(const PureSpin1& a, const PureSpin1& b);

}  // namespace spinq

#endif
