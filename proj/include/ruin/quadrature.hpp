#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <queue>
#include <vector>

#include "ruin/errors.hpp"

namespace ruin {

struct QuadratureResult {
    std::complex<double> value{0.0, 0.0};
    double error_estimate = 0.0;
    std::size_t evaluations = 0;
};

namespace detail {

// Gauss-Kronrod 7-15 nodes and weights on [-1, 1] (positive half).
inline constexpr double kGk15Nodes[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};

inline constexpr double kGk15KronrodWeights[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};

inline constexpr double kGk15GaussWeights[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

struct Panel {
    double a;
    double b;
    std::complex<double> value;
    double error;
    bool operator<(const Panel& other) const { return error < other.error; }
};

template <class F>
Panel gk15_panel(F&& f, double a, double b) {
    const double center = 0.5 * (a + b);
    const double half = 0.5 * (b - a);

    std::complex<double> kronrod = kGk15KronrodWeights[7] * f(center);
    std::complex<double> gauss = kGk15GaussWeights[3] * f(center);
    for (int i = 0; i < 7; ++i) {
        const double dx = half * kGk15Nodes[i];
        const std::complex<double> pair = f(center - dx) + f(center + dx);
        kronrod += kGk15KronrodWeights[i] * pair;
        if (i % 2 == 1) gauss += kGk15GaussWeights[i / 2] * pair;
    }
    kronrod *= half;
    gauss *= half;
    return Panel{a, b, kronrod, std::abs(kronrod - gauss)};
}

}  // namespace detail

/// Adaptive Gauss-Kronrod integration over the union of the intervals given
/// by `breakpoints` (strictly increasing). Panels are bisected worst-first
/// until the summed error estimate drops below `abs_tol` or the refinement
/// budget runs out; the returned error_estimate reflects what was achieved.
template <class F>
QuadratureResult integrate_adaptive(F&& f, const std::vector<double>& breakpoints,
                                    double abs_tol, std::size_t max_refinements = 4000) {
    QuadratureResult result;
    if (breakpoints.size() < 2) return result;

    std::priority_queue<detail::Panel> panels;
    std::complex<double> total{0.0, 0.0};
    double total_error = 0.0;
    for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i) {
        detail::Panel p = detail::gk15_panel(f, breakpoints[i], breakpoints[i + 1]);
        result.evaluations += 15;
        total += p.value;
        total_error += p.error;
        panels.push(p);
    }

    std::size_t refinements = 0;
    while (total_error > abs_tol && refinements < max_refinements) {
        detail::Panel worst = panels.top();
        panels.pop();
        total -= worst.value;
        total_error -= worst.error;

        const double mid = 0.5 * (worst.a + worst.b);
        detail::Panel left = detail::gk15_panel(f, worst.a, mid);
        detail::Panel right = detail::gk15_panel(f, mid, worst.b);
        result.evaluations += 30;
        total += left.value + right.value;
        total_error += left.error + right.error;
        panels.push(left);
        panels.push(right);
        ++refinements;
    }

    result.value = total;
    result.error_estimate = total_error;
    return result;
}

/// Convenience overload for a single interval [a, b].
template <class F>
QuadratureResult integrate_adaptive(F&& f, double a, double b, double abs_tol,
                                    std::size_t max_refinements = 4000) {
    return integrate_adaptive(std::forward<F>(f), std::vector<double>{a, b}, abs_tol,
                              max_refinements);
}

/// Breakpoints for integrands that decay over many decades: geometric panels
/// [0, h], [h, 2h], ... up to `upper`, each further split so that no panel is
/// wider than `max_width` (pass +inf when the integrand does not oscillate).
std::vector<double> geometric_breakpoints(double upper, double first_width, double max_width);

}  // namespace ruin
