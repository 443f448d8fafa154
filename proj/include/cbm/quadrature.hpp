#pragma once

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace cbm {

struct QuadResult {
    double value = 0.0;
    double abs_error = 0.0;
    int evaluations = 0;
    bool converged = true;
};

namespace detail {

// 15-point Kronrod nodes (positive half) and weights; the 7-point Gauss
// rule is embedded at the odd indices.
inline constexpr double kKronrodNodes[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};

inline constexpr double kKronrodWeights[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};

inline constexpr double kGaussWeights[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

template <typename F>
void gauss_kronrod_15(F&& f, double a, double b, double& value, double& error) {
    const double center = 0.5 * (a + b);
    const double half = 0.5 * (b - a);

    const double f_center = f(center);
    double gauss = kGaussWeights[3] * f_center;
    double kronrod = kKronrodWeights[7] * f_center;

    for (int i = 0; i < 7; ++i) {
        const double dx = half * kKronrodNodes[i];
        const double fsum = f(center + dx) + f(center - dx);
        kronrod += kKronrodWeights[i] * fsum;
        if (i % 2 == 1) gauss += kGaussWeights[i / 2] * fsum;
    }

    value = kronrod * half;
    const double diff = std::fabs((kronrod - gauss) * half);
    // QUADPACK-style sharpened estimate, floored by the raw difference scale.
    error = diff;
    if (diff > 0.0) {
        const double sharpened = std::pow(200.0 * diff, 1.5);
        if (sharpened < diff) error = sharpened;
    }
}

}  // namespace detail

/// Adaptive bisection built on the 15-point Gauss-Kronrod pair. Stops once
/// the summed interval errors satisfy the tolerances or the interval budget
/// is exhausted (converged == false in that case).
template <typename F>
QuadResult integrate(F&& f, double a, double b, double rel_tol = 1e-9,
                     double abs_tol = 1e-14, int max_intervals = 4000) {
    QuadResult result;
    if (a == b) return result;

    struct Interval {
        double a, b, value, error;
    };

    double value, error;
    detail::gauss_kronrod_15(f, a, b, value, error);
    result.evaluations = 15;

    std::vector<Interval> active{{a, b, value, error}};
    std::vector<Interval> done;
    double total = value;
    double total_err = error;

    while (!active.empty()) {
        if (total_err <= abs_tol || total_err <= rel_tol * std::fabs(total)) break;
        if (static_cast<int>(active.size() + done.size()) >= max_intervals) {
            result.converged = false;
            break;
        }
        // Split the interval with the largest error estimate.
        std::size_t worst = 0;
        for (std::size_t i = 1; i < active.size(); ++i)
            if (active[i].error > active[worst].error) worst = i;
        const Interval iv = active[worst];
        active[worst] = active.back();
        active.pop_back();

        const double mid = 0.5 * (iv.a + iv.b);
        Interval left{iv.a, mid, 0, 0}, right{mid, iv.b, 0, 0};
        detail::gauss_kronrod_15(f, left.a, left.b, left.value, left.error);
        detail::gauss_kronrod_15(f, right.a, right.b, right.value, right.error);
        result.evaluations += 30;

        total += left.value + right.value - iv.value;
        total_err += left.error + right.error - iv.error;

        const double local_tol =
            std::max(abs_tol, rel_tol * std::fabs(total)) *
            (iv.b - iv.a) / (b - a);
        for (const Interval& half : {left, right}) {
            if (half.error <= local_tol)
                done.push_back(half);
            else
                active.push_back(half);
        }
    }

    result.value = total;
    result.abs_error = total_err;
    return result;
}

/// As integrate(), but non-convergence is a hard numerical error.
template <typename F>
double integrate_or_throw(F&& f, double a, double b, double rel_tol = 1e-9,
                          double abs_tol = 1e-14, int max_intervals = 4000,
                          const char* what = "integrand") {
    const QuadResult r = integrate(f, a, b, rel_tol, abs_tol, max_intervals);
    if (!r.converged) {
        throw std::runtime_error(
            std::string("adaptive quadrature failed to converge for ") + what +
            " on [" + std::to_string(a) + ", " + std::to_string(b) +
            "]: estimate " + std::to_string(r.value) + ", error bound " +
            std::to_string(r.abs_error) + " after " +
            std::to_string(r.evaluations) + " evaluations");
    }
    return r.value;
}

}  // namespace cbm
