// SPDX-License-Identifier: Apache-2.0
//
// Finite-difference probes used by the chain checks: plain central derivative
// and the d-dimensional radial Laplacian with one Richardson step.
#ifndef HK_FD_HPP
#define HK_FD_HPP

#include <functional>

namespace hk {

inline double central_derivative(const std::function<double(double)>& f, double x, double h) {
    return (f(x + h) - f(x - h)) / (2.0 * h);
}

namespace detail {

// 5-point, 4th-order first and second derivatives at step h
inline double d1_5pt(const std::function<double(double)>& f, double x, double h) {
    return (-f(x + 2 * h) + 8 * f(x + h) - 8 * f(x - h) + f(x - 2 * h)) / (12.0 * h);
}
inline double d2_5pt(const std::function<double(double)>& f, double x, double h) {
    return (-f(x + 2 * h) + 16 * f(x + h) - 30 * f(x) + 16 * f(x - h) - f(x - 2 * h)) /
           (12.0 * h * h);
}

} // namespace detail

// f''(r) + (d-1)/r f'(r) by 5-point stencils, Richardson-extrapolated once
inline double radial_laplacian(const std::function<double(double)>& f, double r, int d,
                               double h) {
    const auto lap = [&](double step) {
        return detail::d2_5pt(f, r, step) + (d - 1) / r * detail::d1_5pt(f, r, step);
    };
    const double coarse = lap(h), fine = lap(0.5 * h);
    return (16.0 * fine - coarse) / 15.0;
}

} // namespace hk

#endif
