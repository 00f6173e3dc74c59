#pragma once

#include <fftw3.h>

#include <mutex>
#include <vector>

#include "ewave/core.hpp"

namespace ewave {

namespace detail {
inline std::mutex& fftw_planner_mutex() {
    static std::mutex m;
    return m;
}
}  // namespace detail

/**
 * In-place 3D complex-to-complex transform of an n0 x n1 x n2 row-major array.
 * Plans with FFTW_ESTIMATE on the actual buffer, so the algorithm choice is a
 * pure function of the shape and results are run-to-run identical.
 * Unnormalized; inverse pass must be scaled by 1/N by the caller.
 */
inline void fft3_inplace(std::vector<cplx>& data, int n0, int n1, int n2, int sign) {
    require(data.size() == std::size_t(n0) * n1 * n2, "fft3_inplace: size mismatch");
    auto* p = reinterpret_cast<fftw_complex*>(data.data());
    fftw_plan plan;
    {
        std::lock_guard<std::mutex> lock(detail::fftw_planner_mutex());
        plan = fftw_plan_dft_3d(n0, n1, n2, p, p, sign, FFTW_ESTIMATE);
    }
    require(plan != nullptr, "fft3_inplace: planning failed");
    fftw_execute(plan);
    {
        std::lock_guard<std::mutex> lock(detail::fftw_planner_mutex());
        fftw_destroy_plan(plan);
    }
}

inline void fft3_forward(std::vector<cplx>& data, int n) { fft3_inplace(data, n, n, n, FFTW_FORWARD); }

inline void fft3_backward_scaled(std::vector<cplx>& data, int n) {
    fft3_inplace(data, n, n, n, FFTW_BACKWARD);
    const double s = 1.0 / (double(n) * n * n);
    for (auto& v : data) v *= s;
}

}  // namespace ewave
