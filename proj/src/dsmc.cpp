#include "kingas/dsmc.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <istream>
#include <limits>
#include <ostream>
#include <stdexcept>

namespace kingas {

namespace {
constexpr double kPi = 3.14159265358979323846;
constexpr double kTwoPi = 6.28318530717958647692;
}  // namespace

void DsmcConfig::validate() const {
  if (!(dt_tau > 0.0) || dt_tau > 0.2 + 1e-12)
    throw std::invalid_argument("dsmc: dt must satisfy dt <= tau1/5");
  if (!(cells_per_lambda >= 2.0))
    throw std::invalid_argument("dsmc: cell size must be <= lambda1/2");
  if (replicas < 1) throw std::invalid_argument("dsmc: need at least one replica");
  if (!(half_length_lambda > 0.0) || !(particles_per_cell > 0.0))
    throw std::invalid_argument("dsmc: invalid domain or particle count");
}

DsmcScales dsmc_scales(const DsmcConfig& cfg, const GasModel& gm) {
  DsmcScales s;
  s.lambda1 = mean_free_path(cfg.ic.left, gm);
  s.tau1 = mean_collision_time(cfg.ic.left, gm);
  return s;
}

double vhs_sigma_cr(double cr, const GasModel& gm) {
  // Bird's VHS: sigma_T = pi d_ref^2 (4 R T_ref / cr^2)^(omega-1/2) /
  // Gamma(5/2 - omega), reduced mass m/2 for like molecules.
  const double s2 = 4.0 * gm.R * gm.T_ref / (cr * cr);
  return kPi * gm.d_ref * gm.d_ref * std::pow(s2, gm.omega - 0.5) /
         std::tgamma(2.5 - gm.omega);
}

double vhs_collision_frequency(double n, double T, const GasModel& gm) {
  const double cbar = std::sqrt(8.0 * gm.R * T / kPi);
  return std::sqrt(2.0) * gm.vhs_sigma(T) * n * cbar;
}

namespace {

// Flux-weighted inflow speed (c > 0) from a Maxwellian drifting at u:
// samples c ~ c exp(-beta^2 (c-u)^2) on c > 0 by envelope rejection.
double sample_inflow_speed(double u, double beta, Rng& rng) {
  const double w = 1.0 / beta;
  const double lo = std::max(0.0, u - 6.0 * w);
  const double hi = std::max(lo + 1e-30, u + 6.0 * w);
  const double c_star =
      std::clamp(0.5 * (u + std::sqrt(u * u + 2.0 * w * w)), lo + 1e-300, hi);
  const double g_star =
      c_star * std::exp(-beta * beta * (c_star - u) * (c_star - u));
  for (;;) {
    const double c = lo + (hi - lo) * rng.u01();
    const double g = c * std::exp(-beta * beta * (c - u) * (c - u));
    if (rng.u01() * g_star <= g) return c;
  }
}

void inject_side(ParticleEnsemble& ens, const GasModel& gm, double dt,
                 bool left_side) {
  const GasState& res = left_side ? ens.res_left : ens.res_right;
  const Maxwellian mx = maxwellian_from_state(res, gm);
  // Inward number flux through a unit-area boundary face.
  const double flux = left_side ? half_moment(mx, Side::Right, 1)
                                : -half_moment(mx, Side::Left, 1);
  if (!(flux > 0.0)) return;
  const double mean = flux * dt / ens.fnum;
  const std::uint64_t count = ens.rng.poisson(mean);
  const double vth = std::sqrt(gm.R * res.T);
  const double drift = left_side ? res.u : -res.u;
  for (std::uint64_t k = 0; k < count; ++k) {
    const double c = sample_inflow_speed(drift, mx.beta, ens.rng);
    const double cx = left_side ? c : -c;
    const double frac = ens.rng.u01();
    ens.x.push_back((left_side ? ens.x_min : ens.x_max) + cx * frac * dt);
    ens.vx.push_back(cx);
    ens.vy.push_back(vth * ens.rng.normal());
    ens.vz.push_back(vth * ens.rng.normal());
  }
}

void remove_escaped(ParticleEnsemble& ens) {
  std::size_t i = 0;
  while (i < ens.size()) {
    if (ens.x[i] < ens.x_min || ens.x[i] >= ens.x_max) {
      const std::size_t last = ens.size() - 1;
      ens.x[i] = ens.x[last];
      ens.vx[i] = ens.vx[last];
      ens.vy[i] = ens.vy[last];
      ens.vz[i] = ens.vz[last];
      ens.x.pop_back();
      ens.vx.pop_back();
      ens.vy.pop_back();
      ens.vz.pop_back();
    } else {
      ++i;
    }
  }
}

// Counting sort of particle indices by collision cell.
void bin_particles(const ParticleEnsemble& ens, std::vector<std::uint32_t>& idx,
                   std::vector<std::uint32_t>& start) {
  const std::size_t nc = ens.n_cells;
  std::vector<std::uint32_t> count(nc, 0);
  std::vector<std::uint32_t> cell(ens.size());
  const double inv_dx = 1.0 / ens.dx();
  for (std::size_t i = 0; i < ens.size(); ++i) {
    auto c = static_cast<std::int64_t>((ens.x[i] - ens.x_min) * inv_dx);
    c = std::clamp<std::int64_t>(c, 0, static_cast<std::int64_t>(nc) - 1);
    cell[i] = static_cast<std::uint32_t>(c);
    ++count[cell[i]];
  }
  start.assign(nc + 1, 0);
  for (std::size_t c = 0; c < nc; ++c) start[c + 1] = start[c] + count[c];
  idx.resize(ens.size());
  std::vector<std::uint32_t> cursor(start.begin(), start.end() - 1);
  for (std::size_t i = 0; i < ens.size(); ++i)
    idx[cursor[cell[i]]++] = static_cast<std::uint32_t>(i);
}

}  // namespace

void collide_pair(std::array<double, 3>& vi, std::array<double, 3>& vj,
                  Rng& rng) {
  const double cmx = 0.5 * (vi[0] + vj[0]);
  const double cmy = 0.5 * (vi[1] + vj[1]);
  const double cmz = 0.5 * (vi[2] + vj[2]);
  const double rx = vi[0] - vj[0];
  const double ry = vi[1] - vj[1];
  const double rz = vi[2] - vj[2];
  const double cr = std::sqrt(rx * rx + ry * ry + rz * rz);
  // Isotropic post-collision relative velocity (VHS).
  const double ct = 2.0 * rng.u01() - 1.0;
  const double st = std::sqrt(std::max(0.0, 1.0 - ct * ct));
  const double phi = kTwoPi * rng.u01();
  const double nx = st * std::cos(phi);
  const double ny = st * std::sin(phi);
  const double nz = ct;
  vi = {cmx + 0.5 * cr * nx, cmy + 0.5 * cr * ny, cmz + 0.5 * cr * nz};
  vj = {cmx - 0.5 * cr * nx, cmy - 0.5 * cr * ny, cmz - 0.5 * cr * nz};
}

ParticleEnsemble init_ensemble(const DsmcConfig& cfg, const GasModel& gm,
                               std::size_t replica_index) {
  cfg.validate();
  const DsmcScales sc = dsmc_scales(cfg, gm);
  ParticleEnsemble ens;
  ens.x_min = -cfg.half_length_lambda * sc.lambda1;
  ens.x_max = cfg.half_length_lambda * sc.lambda1;
  ens.n_cells = static_cast<std::size_t>(std::ceil(
      2.0 * cfg.half_length_lambda * cfg.cells_per_lambda));
  ens.res_left = cfg.ic.left;
  ens.res_right = cfg.ic.right;
  ens.rng = Rng(Rng::stream_seed(cfg.seed, replica_index));

  const double n_ref = cfg.ic.left.rho / gm.m;
  ens.fnum = n_ref * ens.dx() / cfg.particles_per_cell;

  for (std::size_t c = 0; c < ens.n_cells; ++c) {
    const double xc = ens.x_min + (static_cast<double>(c) + 0.5) * ens.dx();
    const GasState& side = xc < 0.0 ? cfg.ic.left : cfg.ic.right;
    const double mean = (side.rho / gm.m) * ens.dx() / ens.fnum;
    const std::uint64_t count = ens.rng.poisson(mean);
    const double vth = std::sqrt(gm.R * side.T);
    for (std::uint64_t k = 0; k < count; ++k) {
      ens.x.push_back(ens.x_min + (static_cast<double>(c) + ens.rng.u01()) *
                                      ens.dx());
      ens.vx.push_back(side.u + vth * ens.rng.normal());
      ens.vy.push_back(vth * ens.rng.normal());
      ens.vz.push_back(vth * ens.rng.normal());
    }
  }

  // NTC starting guess; the running maximum adapts from here.
  const double T_hot = std::max(cfg.ic.left.T, cfg.ic.right.T);
  const double cr0 = 5.0 * std::sqrt(gm.R * T_hot);
  ens.sigma_cr_max.assign(ens.n_cells, vhs_sigma_cr(cr0, gm) * cr0);
  ens.coll_remainder.assign(ens.n_cells, 0.0);
  return ens;
}

std::size_t advance(ParticleEnsemble& ens, const GasModel& gm, double dt,
                    bool collisions) {
  if (!(dt > 0.0)) throw std::domain_error("dsmc advance: dt must be > 0");
  std::size_t n_collisions = 0;

  for (std::size_t i = 0; i < ens.size(); ++i) ens.x[i] += ens.vx[i] * dt;
  remove_escaped(ens);
  inject_side(ens, gm, dt, true);
  inject_side(ens, gm, dt, false);

  if (collisions) {
    std::vector<std::uint32_t> idx, start;
    bin_particles(ens, idx, start);
    const double vol = ens.dx();  // unit cross-section
    for (std::size_t c = 0; c < ens.n_cells; ++c) {
      const std::uint32_t n = start[c + 1] - start[c];
      if (n < 2) continue;
      const double pairs_f =
          0.5 * static_cast<double>(n) * static_cast<double>(n - 1) *
              ens.fnum * ens.sigma_cr_max[c] * dt / vol +
          ens.coll_remainder[c];
      const auto n_pairs = static_cast<std::uint64_t>(pairs_f);
      ens.coll_remainder[c] = pairs_f - static_cast<double>(n_pairs);
      for (std::uint64_t p = 0; p < n_pairs; ++p) {
        const std::uint32_t a =
            idx[start[c] + static_cast<std::uint32_t>(ens.rng.u01() * n)];
        std::uint32_t b = a;
        while (b == a)
          b = idx[start[c] + static_cast<std::uint32_t>(ens.rng.u01() * n)];
        const double rx = ens.vx[a] - ens.vx[b];
        const double ry = ens.vy[a] - ens.vy[b];
        const double rz = ens.vz[a] - ens.vz[b];
        const double cr = std::sqrt(rx * rx + ry * ry + rz * rz);
        if (!(cr > 0.0)) continue;
        const double scr = vhs_sigma_cr(cr, gm) * cr;
        bool accept;
        if (scr > ens.sigma_cr_max[c]) {
          ens.sigma_cr_max[c] = scr;
          accept = true;
        } else {
          accept = ens.rng.u01() * ens.sigma_cr_max[c] < scr;
        }
        if (!accept) continue;
        std::array<double, 3> va{ens.vx[a], ens.vy[a], ens.vz[a]};
        std::array<double, 3> vb{ens.vx[b], ens.vy[b], ens.vz[b]};
        collide_pair(va, vb, ens.rng);
        ens.vx[a] = va[0]; ens.vy[a] = va[1]; ens.vz[a] = va[2];
        ens.vx[b] = vb[0]; ens.vy[b] = vb[1]; ens.vz[b] = vb[2];
        ++n_collisions;
      }
    }
  }
  ens.time += dt;
  return n_collisions;
}

Profile sample_profile(std::span<const ParticleEnsemble> replicas,
                       std::size_t n_sample, const GasModel& gm,
                       const DsmcScales& scales) {
  if (replicas.empty())
    throw std::domain_error("sample_profile: no replicas");
  const ParticleEnsemble& first = replicas.front();
  for (const auto& r : replicas)
    if (std::abs(r.time - first.time) > 1e-12 * (first.time + 1e-300))
      throw std::domain_error("sample_profile: replicas at different times");

  const double dx = (first.x_max - first.x_min) / static_cast<double>(n_sample);
  std::vector<double> cnt(n_sample, 0.0), s1(n_sample, 0.0), s2(n_sample, 0.0),
      sy(n_sample, 0.0), sz(n_sample, 0.0), syy(n_sample, 0.0),
      szz(n_sample, 0.0);
  for (const auto& r : replicas) {
    for (std::size_t i = 0; i < r.size(); ++i) {
      auto c = static_cast<std::int64_t>((r.x[i] - r.x_min) / dx);
      c = std::clamp<std::int64_t>(c, 0, static_cast<std::int64_t>(n_sample) - 1);
      cnt[c] += 1.0;
      s1[c] += r.vx[i];
      s2[c] += r.vx[i] * r.vx[i];
      sy[c] += r.vy[i];
      sz[c] += r.vz[i];
      syy[c] += r.vy[i] * r.vy[i];
      szz[c] += r.vz[i] * r.vz[i];
    }
  }

  Profile p;
  p.t = first.time / scales.tau1;
  p.source = ProfileSource::Dsmc;
  p.x_unit = "lambda1";
  p.t_unit = "tau1";
  const double nan = std::numeric_limits<double>::quiet_NaN();
  p.x.resize(n_sample);
  p.rho.assign(n_sample, nan);
  p.U.assign(n_sample, nan);
  p.Tn.assign(n_sample, nan);
  p.Tx.assign(n_sample, nan);
  p.Ttot.assign(n_sample, nan);
  const double nrep = static_cast<double>(replicas.size());
  for (std::size_t c = 0; c < n_sample; ++c) {
    p.x[c] = (first.x_min + (static_cast<double>(c) + 0.5) * dx) /
             scales.lambda1;
    if (cnt[c] < 2.0) continue;  // missing, not zero
    const double N = cnt[c];
    p.rho[c] = gm.m * first.fnum * N / (dx * nrep);
    const double U = s1[c] / N;
    const double Uy = sy[c] / N;
    const double Uz = sz[c] / N;
    p.U[c] = U;
    p.Tx[c] = (s2[c] / N - U * U) / gm.R;
    const double Ty = (syy[c] / N - Uy * Uy) / gm.R;
    const double Tz = (szz[c] / N - Uz * Uz) / gm.R;
    p.Tn[c] = 0.5 * (Ty + Tz);
    p.Ttot[c] = (p.Tx[c] + 2.0 * p.Tn[c]) / 3.0;
  }
  return p;
}

std::vector<Profile> run_unsteady(const DsmcConfig& cfg, const GasModel& gm,
                                  bool parallel) {
  cfg.validate();
  const DsmcScales sc = dsmc_scales(cfg, gm);
  std::vector<double> times = cfg.sample_times_tau;
  std::sort(times.begin(), times.end());

  std::vector<ParticleEnsemble> reps;
  reps.reserve(cfg.replicas);
  for (std::size_t r = 0; r < cfg.replicas; ++r)
    reps.push_back(init_ensemble(cfg, gm, r));

  const double dt = cfg.dt_tau * sc.tau1;
  std::size_t n_sample = static_cast<std::size_t>(std::ceil(
      2.0 * cfg.half_length_lambda *
      (cfg.sample_cells_per_lambda > 0.0 ? cfg.sample_cells_per_lambda
                                         : cfg.cells_per_lambda)));

  std::vector<Profile> out;
  for (double ts : times) {
    const double target = ts * sc.tau1;
    auto advance_replica = [&](ParticleEnsemble& ens) {
      while (ens.time < target * (1.0 - 1e-13)) {
        advance(ens, gm, std::min(dt, target - ens.time), cfg.collisions);
      }
      ens.time = target;  // absorb roundoff so replicas agree exactly
    };
    if (parallel) {
#pragma omp parallel for schedule(dynamic)
      for (long long r = 0; r < static_cast<long long>(reps.size()); ++r)
        advance_replica(reps[static_cast<std::size_t>(r)]);
    } else {
      for (auto& ens : reps) advance_replica(ens);
    }
    out.push_back(sample_profile(std::span<const ParticleEnsemble>(reps),
                                 n_sample, gm, sc));
    out.back().t = ts;
  }
  return out;
}

namespace {

constexpr char kCheckpointMagic[8] = {'K', 'G', 'D', 'S', 'M', 'C', '0', '1'};

template <class T>
void put(std::ostream& out, const T& v) {
  out.write(reinterpret_cast<const char*>(&v), sizeof(T));
}
template <class T>
void get(std::istream& in, T& v) {
  in.read(reinterpret_cast<char*>(&v), sizeof(T));
}
void put_vec(std::ostream& out, const std::vector<double>& v) {
  put(out, static_cast<std::uint64_t>(v.size()));
  out.write(reinterpret_cast<const char*>(v.data()),
            static_cast<std::streamsize>(v.size() * sizeof(double)));
}
std::vector<double> get_vec(std::istream& in) {
  std::uint64_t n = 0;
  get(in, n);
  std::vector<double> v(n);
  in.read(reinterpret_cast<char*>(v.data()),
          static_cast<std::streamsize>(n * sizeof(double)));
  return v;
}

}  // namespace

void save_checkpoint(const ParticleEnsemble& ens, std::ostream& out) {
  out.write(kCheckpointMagic, sizeof(kCheckpointMagic));
  put(out, ens.fnum);
  put(out, ens.x_min);
  put(out, ens.x_max);
  put(out, static_cast<std::uint64_t>(ens.n_cells));
  put(out, ens.res_left);
  put(out, ens.res_right);
  put(out, ens.time);
  put(out, ens.rng.state());
  put_vec(out, ens.x);
  put_vec(out, ens.vx);
  put_vec(out, ens.vy);
  put_vec(out, ens.vz);
  put_vec(out, ens.sigma_cr_max);
  put_vec(out, ens.coll_remainder);
  if (!out) throw std::runtime_error("checkpoint write failed");
}

ParticleEnsemble load_checkpoint(std::istream& in) {
  char magic[8];
  in.read(magic, sizeof(magic));
  if (!in || std::memcmp(magic, kCheckpointMagic, sizeof(magic)) != 0)
    throw std::runtime_error("checkpoint: bad magic");
  ParticleEnsemble ens;
  std::uint64_t nc = 0;
  Rng::State rs{};
  get(in, ens.fnum);
  get(in, ens.x_min);
  get(in, ens.x_max);
  get(in, nc);
  get(in, ens.res_left);
  get(in, ens.res_right);
  get(in, ens.time);
  get(in, rs);
  ens.n_cells = nc;
  ens.rng.restore(rs);
  ens.x = get_vec(in);
  ens.vx = get_vec(in);
  ens.vy = get_vec(in);
  ens.vz = get_vec(in);
  ens.sigma_cr_max = get_vec(in);
  ens.coll_remainder = get_vec(in);
  if (!in) throw std::runtime_error("checkpoint read failed");
  return ens;
}

}  // namespace kingas
