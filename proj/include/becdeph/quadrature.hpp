// quadrature.hpp — adaptive Gauss-Kronrod 7-15 integration with phase-aware seeding.
#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <queue>
#include <vector>

namespace becdeph::num {

struct QuadratureSpec {
    double rel_tol{1e-9};
    double abs_tol{1e-14};
    int max_panels{4096};
    double oscillation_guard{std::numbers::pi};  // max phase advance per seed panel
};

struct QuadResult {
    double value{0.0};
    double error{0.0};   // estimated absolute error
    int panels{0};
    bool converged{false};
};

// k beyond which peak * exp(-k^2 sigma^2 / 2) drops below abs_tol, floored at
// 10/sigma. Used to truncate the semi-infinite k-integrals, whose integrands
// all carry this Gaussian envelope.
inline double gaussian_cutoff(double sigma, double peak, double abs_tol) {
    // log difference, not peak / abs_tol, which overflows for tiny abs_tol
    const double log_ratio = std::max(std::log(peak) - std::log(abs_tol), 0.0);
    const double k = std::sqrt(2.0 * log_ratio) / sigma;
    return std::max(k, 10.0 / sigma);
}

namespace detail {

// 15-point Kronrod nodes and weights with the embedded 7-point Gauss rule.
inline constexpr double gk_nodes[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
inline constexpr double gk_wk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
inline constexpr double gk_wg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
    double a, b, value, error;
    bool operator<(const Panel& o) const { return error < o.error; }
};

template <class F>
Panel gk15(F& f, double a, double b) {
    const double c = 0.5 * (a + b), h = 0.5 * (b - a);
    double fv[15];
    fv[7] = f(c);
    for (int j = 0; j < 7; ++j) {
        const double dx = h * gk_nodes[j];
        fv[j] = f(c - dx);
        fv[14 - j] = f(c + dx);
    }
    double resk = gk_wk[7] * fv[7], resg = gk_wg[3] * fv[7], resabs = gk_wk[7] * std::fabs(fv[7]);
    for (int j = 0; j < 7; ++j) {
        const double pair = fv[j] + fv[14 - j];
        resk += gk_wk[j] * pair;
        resabs += gk_wk[j] * (std::fabs(fv[j]) + std::fabs(fv[14 - j]));
        if (j % 2 == 1) resg += gk_wg[j / 2] * pair;
    }
    const double mean = resk * 0.5;
    double resasc = gk_wk[7] * std::fabs(fv[7] - mean);
    for (int j = 0; j < 7; ++j)
        resasc += gk_wk[j] * (std::fabs(fv[j] - mean) + std::fabs(fv[14 - j] - mean));
    resasc *= h;
    resabs *= h;

    double err = std::fabs(resk - resg) * h;
    if (resasc != 0.0 && err != 0.0)
        err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
    constexpr double eps = 2.220446049250313e-16;
    if (resabs > 1e-290) err = std::max(err, 50.0 * eps * resabs);
    return Panel{a, b, resk * h, err};
}

// Kahan-compensated running sum; refinement replaces parents by children many
// times, so plain accumulation would drift.
struct Accum {
    double sum{0.0}, comp{0.0};
    void add(double x) {
        const double y = x - comp;
        const double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
};

} // namespace detail

// Integrate f over [a, b]. phase_rate, when given, bounds |d(phase)/dx| of an
// oscillatory integrand; seed panels are sized so each spans at most
// spec.oscillation_guard radians. A geometric ladder of seeds near `a`
// resolves integrands whose structure sits orders of magnitude below b - a.
template <class F>
QuadResult integrate_interval(F&& f, double a, double b, const QuadratureSpec& spec,
                              const std::function<double(double)>& phase_rate = {}) {
    QuadResult out;
    if (!(b > a)) {
        out.converged = true;
        return out;
    }
    const double width = b - a;

    std::vector<double> edges;
    edges.push_back(a);
    edges.push_back(b);
    for (int j = 1; j <= 12; ++j) edges.push_back(a + width * std::ldexp(1.0, -j));
    if (phase_rate) {
        const double guard = spec.oscillation_guard;
        double e = a;
        int cap = std::max(spec.max_panels, 16);
        while (e < b && cap-- > 0) {
            const double r0 = phase_rate(e);
            double step = guard / std::max(r0, guard / (b - e));
            const double r1 = phase_rate(std::min(b, e + step));
            step = guard / std::max(std::max(r0, r1), guard / (b - e));
            e = std::min(b, e + step);
            edges.push_back(e);
        }
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end(),
                            [&](double u, double v) { return v - u < width * 1e-15; }),
                edges.end());
    if (edges.back() < b) edges.push_back(b);

    std::priority_queue<detail::Panel> heap;
    detail::Accum val, err;
    int panels = 0;
    for (size_t i = 0; i + 1 < edges.size(); ++i) {
        detail::Panel p = detail::gk15(f, edges[i], edges[i + 1]);
        val.add(p.value);
        err.add(p.error);
        heap.push(p);
        ++panels;
    }

    auto tolerance = [&] { return std::max(spec.abs_tol, spec.rel_tol * std::fabs(val.sum)); };
    while (err.sum > tolerance() && panels < spec.max_panels && !heap.empty()) {
        const detail::Panel worst = heap.top();
        heap.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        if (!(worst.a < mid && mid < worst.b)) {   // width at roundoff floor
            heap.push(detail::Panel{worst.a, worst.b, worst.value, 0.0});
            err.add(-worst.error);
            continue;
        }
        detail::Panel left = detail::gk15(f, worst.a, mid);
        detail::Panel right = detail::gk15(f, mid, worst.b);
        val.add(-worst.value);
        err.add(-worst.error);
        val.add(left.value);
        err.add(left.error);
        val.add(right.value);
        err.add(right.error);
        heap.push(left);
        heap.push(right);
        ++panels;
    }

    out.value = val.sum;
    out.error = std::max(err.sum, 0.0);
    out.panels = panels;
    out.converged = out.error <= tolerance() && std::isfinite(out.value);
    return out;
}

// Semi-infinite integral truncated at k_max; callers pick k_max via
// gaussian_cutoff() so the discarded tail is below abs_tol.
template <class F>
QuadResult integrate_semi_infinite(F&& f, double k_max, const QuadratureSpec& spec,
                                   const std::function<double(double)>& phase_rate = {}) {
    return integrate_interval(std::forward<F>(f), 0.0, k_max, spec, phase_rate);
}

} // namespace becdeph::num
