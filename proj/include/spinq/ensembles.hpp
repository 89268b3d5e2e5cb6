// Seeded random generation of spin-1 state families.
//
// Streams are counter-derived from (master_seed, stream_index) so that
// state i of a batch is reproducible bit-for-bit regardless of worker
// count or scheduling order.
#ifndef SPINQ_ENSEMBLES_HPP
#define SPINQ_ENSEMBLES_HPP

#include <cstdint>

#include "spinq/states.hpp"

namespace spinq {

// splitmix64-based stream: the (seed, index) pair is mixed into an
// independent initial state, then the sequence is the splitmix64 orbit.
class RngStream {
  public:
    RngStream(std::uint64_t master_seed, std::uint64_t stream_index);

    std::uint64_t next_u64();
    double next_double();  // uniform [0, 1)
    double next_gaussian();  // standard normal, Marsaglia polar method

  private:
    std::uint64_t state_;
    bool has_spare_ = false;
    double spare_ = 0;
};

// Hilbert-Schmidt ensemble: rho = A A^dagger / tr(A A^dagger), A complex Gaussian.
DensityMatrix random_hs_density(RngStream& rng);
// Haar-uniform pure state (normalized complex Gaussian triple).
PureSpin1 random_pure(RngStream& rng);
// Direction uniform on the sphere.
CoherentAngles random_coherent(RngStream& rng);

}  // namespace spinq

#endif
