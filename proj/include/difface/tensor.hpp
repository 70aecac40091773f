#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

#include "difface/errors.hpp"

namespace difface {

// Dense CHW tensor in double precision. Images use channels={1,3} with values
// in [0,1] at rest; diffusion-space tensors live in [-1,1]. Low-dimensional
// vectors (the analytic mixture world) use h=w=1 or small spatial grids.
struct Tensor {
    int channels = 0;
    int height = 0;
    int width = 0;
    std::vector<double> data;

    Tensor() = default;
    Tensor(int c, int h, int w, double fill = 0.0)
        : channels(c), height(h), width(w),
          data(static_cast<size_t>(c) * h * w, fill) {
        if (c <= 0 || h <= 0 || w <= 0)
            throw ShapeError("Tensor dimensions must be positive");
    }

    static Tensor zeros_like(const Tensor& other) {
        return Tensor(other.channels, other.height, other.width, 0.0);
    }

    int64_t size() const { return static_cast<int64_t>(data.size()); }

    double& at(int c, int y, int x) {
        return data[(static_cast<size_t>(c) * height + y) * width + x];
    }
    double at(int c, int y, int x) const {
        return data[(static_cast<size_t>(c) * height + y) * width + x];
    }

    bool same_shape(const Tensor& other) const {
        return channels == other.channels && height == other.height &&
               width == other.width;
    }
};

inline void require_same_shape(const Tensor& a, const Tensor& b,
                               const char* what) {
    if (!a.same_shape(b))
        throw ShapeError(std::string(what) + ": tensor shapes differ");
}

inline bool all_finite(const Tensor& t) {
    for (double v : t.data)
        if (!std::isfinite(v)) return false;
    return true;
}

inline Tensor clip(Tensor t, double lo, double hi) {
    for (double& v : t.data) v = v < lo ? lo : (v > hi ? hi : v);
    return t;
}

inline double mean_abs_diff(const Tensor& a, const Tensor& b) {
    require_same_shape(a, b, "mean_abs_diff");
    double s = 0.0;
    for (size_t i = 0; i < a.data.size(); ++i)
        s += std::abs(a.data[i] - b.data[i]);
    return s / static_cast<double>(a.data.size());
}

inline double rms_diff(const Tensor& a, const Tensor& b) {
    require_same_shape(a, b, "rms_diff");
    double s = 0.0;
    for (size_t i = 0; i < a.data.size(); ++i) {
        double d = a.data[i] - b.data[i];
        s += d * d;
    }
    return std::sqrt(s / static_cast<double>(a.data.size()));
}

// [0,1] at-rest range to the [-1,1] diffusion range and back.
inline Tensor to_diffusion_range(Tensor t) {
    for (double& v : t.data) v = 2.0 * v - 1.0;
    return t;
}

inline Tensor from_diffusion_range(Tensor t) {
    for (double& v : t.data) {
        v = 0.5 * (v + 1.0);
        v = v < 0.0 ? 0.0 : (v > 1.0 ? 1.0 : v);
    }
    return t;
}

}  // namespace difface
