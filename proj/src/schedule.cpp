#include "difface/schedule.hpp"

#include <cmath>

#include "difface/hash.hpp"

namespace difface {

double NoiseSchedule::beta(int t) const {
    if (t < 1 || t > steps()) throw ParamError("timestep out of range");
    return betas[t - 1];
}

double NoiseSchedule::alpha_cum(int t) const {
    if (t == 0) return 1.0;
    if (t < 0 || t > steps()) throw ParamError("timestep out of range");
    return alphas_cum[t - 1];
}

std::string NoiseSchedule::fingerprint() const {
    return sha256_hex(betas.data(), betas.size() * sizeof(double));
}

NoiseSchedule make_linear_schedule(int T, double beta_start, double beta_end) {
    if (T < 1) throw ParamError("schedule length must be >= 1");
    if (!(beta_start > 0.0 && beta_start <= beta_end && beta_end < 1.0))
        throw ParamError("beta range must satisfy 0 < beta_start <= beta_end < 1");

    NoiseSchedule s;
    s.betas.resize(T);
    s.alphas_cum.resize(T);
    double prod = 1.0;
    for (int t = 1; t <= T; ++t) {
        double frac = T == 1 ? 0.0 : static_cast<double>(t - 1) / (T - 1);
        double beta = beta_start + (beta_end - beta_start) * frac;
        s.betas[t - 1] = beta;
        prod *= 1.0 - beta;
        s.alphas_cum[t - 1] = prod;
    }
    return s;
}

double kappa(const NoiseSchedule& schedule, int N) {
    if (N < 1 || N > schedule.steps()) throw ParamError("timestep out of range");
    double a = schedule.alpha_cum(N);
    if (a >= 1.0) throw ParamError("kappa undefined: alpha_cum(N) >= 1");
    return a / (1.0 - a);
}

Tensor diffuse(const Tensor& x0, int N, const NoiseSchedule& schedule,
               const Tensor& noise) {
    if (N < 1 || N > schedule.steps()) throw ParamError("timestep out of range");
    require_same_shape(x0, noise, "diffuse");
    double a = schedule.alpha_cum(N);
    double signal = std::sqrt(a);
    double spread = std::sqrt(1.0 - a);
    Tensor out = Tensor::zeros_like(x0);
    for (size_t i = 0; i < out.data.size(); ++i)
        out.data[i] = signal * x0.data[i] + spread * noise.data[i];
    return out;
}

Tensor diffuse_step(const Tensor& x_prev, int t, const NoiseSchedule& schedule,
                    const Tensor& noise) {
    if (t < 1 || t > schedule.steps()) throw ParamError("timestep out of range");
    require_same_shape(x_prev, noise, "diffuse_step");
    double beta = schedule.beta(t);
    double keep = std::sqrt(1.0 - beta);
    double add = std::sqrt(beta);
    Tensor out = Tensor::zeros_like(x_prev);
    for (size_t i = 0; i < out.data.size(); ++i)
        out.data[i] = keep * x_prev.data[i] + add * noise.data[i];
    return out;
}

int RespacedSchedule::steps_for(int N) const {
    if (N < 0 || N > base.steps()) throw ParamError("timestep out of range");
    int count = 0;
    for (int t : kept_timesteps) {
        if (t <= N)
            ++count;
        else
            break;
    }
    return count;
}

double RespacedSchedule::alpha_cum(int j) const {
    if (j == 0) return 1.0;
    if (j < 0 || j > steps()) throw ParamError("respaced index out of range");
    return base.alpha_cum(kept_timesteps[j - 1]);
}

RespacedSchedule respace(const NoiseSchedule& schedule, int target_steps) {
    int T = schedule.steps();
    if (target_steps < 1 || target_steps > T)
        throw ParamError("target_steps must lie in [1, T]");

    RespacedSchedule r;
    r.base = schedule;
    r.kept_timesteps.reserve(target_steps);
    // floor(i*T/target) for i=1..target: even stride, keeps the final step,
    // rounds toward earlier timesteps.
    int prev = 0;
    for (int i = 1; i <= target_steps; ++i) {
        int t = static_cast<int>((static_cast<int64_t>(i) * T) / target_steps);
        if (t <= prev) t = prev + 1;  // guard against duplicates for tiny T
        r.kept_timesteps.push_back(t);
        prev = t;
    }
    r.effective_betas.reserve(target_steps);
    double prev_alpha = 1.0;
    for (int t : r.kept_timesteps) {
        double a = schedule.alpha_cum(t);
        r.effective_betas.push_back(1.0 - a / prev_alpha);
        prev_alpha = a;
    }
    return r;
}

std::vector<ChainStep> chain_steps(const NoiseSchedule& schedule, int N) {
    if (N < 0 || N > schedule.steps()) throw ParamError("timestep out of range");
    std::vector<ChainStep> steps;
    steps.reserve(N);
    for (int t = N; t >= 1; --t) {
        ChainStep s;
        s.t_model = t;
        s.alpha_cum = schedule.alpha_cum(t);
        s.alpha_cum_prev = schedule.alpha_cum(t - 1);
        s.beta_eff = schedule.beta(t);
        steps.push_back(s);
    }
    return steps;
}

std::vector<ChainStep> chain_steps(const RespacedSchedule& schedule, int N) {
    int J = schedule.steps_for(N);
    std::vector<ChainStep> steps;
    steps.reserve(J);
    for (int j = J; j >= 1; --j) {
        ChainStep s;
        s.t_model = schedule.kept_timesteps[j - 1];
        s.alpha_cum = schedule.alpha_cum(j);
        s.alpha_cum_prev = schedule.alpha_cum(j - 1);
        s.beta_eff = schedule.effective_betas[j - 1];
        steps.push_back(s);
    }
    return steps;
}

void export_schedule_csv(const NoiseSchedule& schedule, std::ostream& out) {
    out << "t,beta,alpha_cum,kappa\n";
    out.precision(17);
    for (int t = 1; t <= schedule.steps(); ++t) {
        out << t << ',' << schedule.beta(t) << ',' << schedule.alpha_cum(t)
            << ',' << kappa(schedule, t) << '\n';
    }
}

}  // namespace difface
