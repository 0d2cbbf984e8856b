#ifndef KINGAS_DSMC_HPP
#define KINGAS_DSMC_HPP

#include <array>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "kingas/diagnostics.hpp"
#include "kingas/freemol.hpp"
#include "kingas/gas.hpp"
#include "kingas/rng.hpp"

namespace kingas {

struct DsmcConfig {
  DiscontinuityIC ic;
  double half_length_lambda = 50.0;   // domain half-length in lambda1
  double cells_per_lambda = 3.0;      // collision cells per lambda1
  double particles_per_cell = 100.0;  // target, at the left-state density
  double dt_tau = 0.1;                // time step in tau1
  std::size_t replicas = 10;
  std::vector<double> sample_times_tau;
  std::uint64_t seed = 1;
  bool collisions = true;
  // Sampling grid resolution; 0 means reuse the collision grid.
  double sample_cells_per_lambda = 0.0;

  void validate() const;
};

/// One DSMC replica: particle arrays, collision grid, reservoir states,
/// and its private RNG stream.
struct ParticleEnsemble {
  std::vector<double> x, vx, vy, vz;
  double fnum = 1.0;  // real molecules per simulated particle
  double x_min = 0.0, x_max = 0.0;
  std::size_t n_cells = 0;
  GasState res_left{1, 0, 1}, res_right{1, 0, 1};
  std::vector<double> sigma_cr_max;     // per-cell running NTC maximum
  std::vector<double> coll_remainder;   // per-cell fractional pair carry
  Rng rng{0};
  double time = 0.0;

  double dx() const { return (x_max - x_min) / static_cast<double>(n_cells); }
  std::size_t size() const { return x.size(); }
};

/// Normalization scales of a DSMC setup (left/upstream reference state).
struct DsmcScales {
  double lambda1;
  double tau1;
};
DsmcScales dsmc_scales(const DsmcConfig& cfg, const GasModel& gm);

ParticleEnsemble init_ensemble(const DsmcConfig& cfg, const GasModel& gm,
                               std::size_t replica_index);

/// Free flight + reservoir boundaries + NTC/VHS collisions over one dt.
/// Returns the number of collisions performed.
std::size_t advance(ParticleEnsemble& ens, const GasModel& gm, double dt,
                    bool collisions = true);

/// Elastic isotropic VHS scattering of one pair; conserves momentum and
/// energy exactly.
void collide_pair(std::array<double, 3>& vi, std::array<double, 3>& vj,
                  Rng& rng);

/// VHS total cross section as a function of relative speed.
double vhs_sigma_cr(double cr, const GasModel& gm);

/// Equilibrium VHS collision frequency per particle at (n, T).
double vhs_collision_frequency(double n, double T, const GasModel& gm);

/// Ensemble-averaged fields on a uniform sampling grid of n_sample cells.
/// All replicas must be at the same physical time. Reduction runs in
/// replica order, so results are independent of any parallel schedule.
Profile sample_profile(std::span<const ParticleEnsemble> replicas,
                       std::size_t n_sample, const GasModel& gm,
                       const DsmcScales& scales);

/// Advances every replica to each requested sample time and samples.
/// parallel selects the OpenMP replica loop; per-replica streams make the
/// result identical to the serial reference.
std::vector<Profile> run_unsteady(const DsmcConfig& cfg, const GasModel& gm,
                                  bool parallel = true);

/// Bit-exact binary checkpoint of one replica.
void save_checkpoint(const ParticleEnsemble& ens, std::ostream& out);
ParticleEnsemble load_checkpoint(std::istream& in);

}  // namespace kingas

#endif
