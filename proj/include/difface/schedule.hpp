#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "difface/tensor.hpp"

namespace difface {

// Discrete-time diffusion schedule. betas[t-1] is the per-step noise variance
// beta_t for t=1..T; alphas_cum[t-1] is the running product of (1-beta_l) up
// to t. Everything is double precision so the cumulative products stay stable.
// Immutable after construction.
struct NoiseSchedule {
    std::vector<double> betas;
    std::vector<double> alphas_cum;

    int steps() const { return static_cast<int>(betas.size()); }

    double beta(int t) const;       // 1-based
    double alpha_cum(int t) const;  // 1-based; alpha_cum(0) == 1

    // Hex SHA-256 over the raw beta bytes. Checkpoints record this and refuse
    // to sample against a different schedule.
    std::string fingerprint() const;
};

// Linear beta ramp from beta_start to beta_end inclusive over T steps.
NoiseSchedule make_linear_schedule(int T, double beta_start, double beta_end);

// kappa_N = alpha_cum(N) / (1 - alpha_cum(N)), the KL weight of the
// LQ-to-x_N transition. Strictly decreasing in N.
double kappa(const NoiseSchedule& schedule, int N);

// Marginal forward diffusion: sqrt(alpha_N) * x0 + sqrt(1 - alpha_N) * noise.
Tensor diffuse(const Tensor& x0, int N, const NoiseSchedule& schedule,
               const Tensor& noise);

// One Markov diffusion step: sqrt(1-beta_t) * x_prev + sqrt(beta_t) * noise.
Tensor diffuse_step(const Tensor& x_prev, int t, const NoiseSchedule& schedule,
                    const Tensor& noise);

// Shorter chain over a subsequence of the base timesteps. The recomputed
// effective betas reproduce the base cumulative alphas at every kept step.
struct RespacedSchedule {
    NoiseSchedule base;
    std::vector<int> kept_timesteps;      // strictly increasing, subset of 1..T
    std::vector<double> effective_betas;  // one per kept step

    int steps() const { return static_cast<int>(kept_timesteps.size()); }

    // Number of respaced sampling steps for a run entering at base timestep N
    // (= count of kept timesteps <= N).
    int steps_for(int N) const;

    // Cumulative alpha of the respaced chain at respaced index j (1-based).
    double alpha_cum(int j) const;
};

// Uniform-stride respacing keeping the final step; ties break toward earlier
// timesteps. respace(s, s.steps()) is the identity respacing.
RespacedSchedule respace(const NoiseSchedule& schedule, int target_steps);

// One reverse-chain step: the base timestep fed to the denoiser plus the
// effective alpha/beta bookkeeping, valid for both base and respaced chains.
struct ChainStep {
    int t_model;             // base-schedule timestep for conditioning
    double alpha_cum;        // cumulative alpha at this step
    double alpha_cum_prev;   // cumulative alpha one chain step earlier (1 at the start)
    double beta_eff;         // 1 - alpha_cum/alpha_cum_prev
};

// Steps of the reverse chain from entry timestep N down to the first step,
// ordered from N downwards (index 0 is the step executed first).
std::vector<ChainStep> chain_steps(const NoiseSchedule& schedule, int N);
std::vector<ChainStep> chain_steps(const RespacedSchedule& schedule, int N);

// CSV with columns t,beta,alpha_cum,kappa for curve plotting.
void export_schedule_csv(const NoiseSchedule& schedule, std::ostream& out);

}  // namespace difface
