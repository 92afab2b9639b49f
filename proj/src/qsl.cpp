// qsl.cpp — quantum Fisher information, Bures angle, and the dephasing speed limit
#include "becdeph/qsl.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "becdeph/errors.hpp"
#include "becdeph/root_finding.hpp"

namespace becdeph {

double qfi(const QubitState& s, double gamma_value, double gamma_dot_value) {
    if (gamma_value < 0.0)
        throw std::invalid_argument("dephasing exponent must be non-negative");
    double coh2 = s.x * s.x + s.y * s.y;
    double one_m_z2 = (1.0 - s.z) * (1.0 + s.z);
    if (one_m_z2 < 0.0) {
        if (one_m_z2 < -1e-12) throw std::invalid_argument("Bloch z component exceeds 1");
        one_m_z2 = 0.0;
    }
    double gap = 1.0 - coh2 - s.z * s.z;  // 1 - |r|^2, zero for pure states
    double numer = one_m_z2 * coh2 * gamma_dot_value * gamma_dot_value *
                   std::exp(-2.0 * gamma_value);
    double denom = gap + coh2 * (-std::expm1(-2.0 * gamma_value));
    if (denom <= 0.0) {
        if (denom < -1e-12)
            throw NegativeDenominator("inconsistent state: QFI denominator = " +
                                      std::to_string(denom));
        if (numer <= 0.0) return 0.0;
        return std::numeric_limits<double>::infinity();  // pure state at zero exponent
    }
    return numer / denom;
}

Eigensystem eigensystem(const QubitState& s, double gamma_value) {
    validate_state(s);
    if (gamma_value < 0.0)
        throw std::invalid_argument("dephasing exponent must be non-negative");
    Eigensystem es;
    double decay = std::exp(-gamma_value);
    std::complex<double> b(s.x * decay, -s.y * decay);  // off-diagonal element times 2
    double b2 = std::norm(b);
    double a = std::sqrt(b2 + s.z * s.z);  // Bloch length after dephasing
    es.bloch_norm = a;
    es.p_plus = 0.5 * (1.0 - a);
    es.p_minus = 0.5 * (1.0 + a);
    if (a < 1e-15) {
        es.degenerate = true;
        es.psi_plus = {1.0, 0.0};
        es.psi_minus = {0.0, 1.0};
        return es;
    }
    if (b2 == 0.0) {
        // diagonal state: eigenvectors are the basis states
        if (s.z >= 0.0) {
            es.psi_minus = {1.0, 0.0};
            es.psi_plus = {0.0, 1.0};
        } else {
            es.psi_minus = {0.0, 1.0};
            es.psi_plus = {1.0, 0.0};
        }
        return es;
    }
    // evaluate a -/+ z through b2 to dodge the cancellation on the larger side
    double a_plus_z, a_minus_z;
    if (s.z >= 0.0) {
        a_plus_z = a + s.z;
        a_minus_z = b2 / a_plus_z;
    } else {
        a_minus_z = a - s.z;
        a_plus_z = b2 / a_minus_z;
    }
    double n_plus = 1.0 / std::sqrt(2.0 * a * a_plus_z);
    double n_minus = 1.0 / std::sqrt(2.0 * a * a_minus_z);
    es.psi_plus = {-b * n_plus, a_plus_z * n_plus};
    es.psi_minus = {b * n_minus, a_minus_z * n_minus};
    return es;
}

namespace {

double density_det(const DensityMatrix& m) {
    double d = m.p_e * m.p_g - std::norm(m.coh);
    if (d < 0.0) {
        if (d < -1e-9) throw std::invalid_argument("matrix is not a density matrix");
        d = 0.0;
    }
    return d;
}

void check_density(const DensityMatrix& m) {
    if (m.p_e < -1e-12 || m.p_g < -1e-12 || std::abs(m.p_e + m.p_g - 1.0) > 1e-9)
        throw std::invalid_argument("populations must be non-negative with unit trace");
}

}  // namespace

double bures_angle(const DensityMatrix& a, const DensityMatrix& b) {
    check_density(a);
    check_density(b);
    // In Bloch form 1 - fidelity = (|r_a - r_b|^2 + (sqrt(1-|r_a|^2) -
    // sqrt(1-|r_b|^2))^2) / 4, with 1 - |r|^2 = 4 det. Summing the two squares
    // avoids the cancellation of acos(sqrt(fidelity)) near fidelity = 1, where
    // the direct form loses half the significant digits of small angles.
    double dx = 2.0 * (std::real(a.coh) - std::real(b.coh));
    double dy = 2.0 * (std::imag(a.coh) - std::imag(b.coh));
    double dz = (a.p_e - b.p_e) - (a.p_g - b.p_g);
    double dr2 = dx * dx + dy * dy + dz * dz;
    double sd = 2.0 * (std::sqrt(density_det(a)) - std::sqrt(density_det(b)));
    double s2 = 0.25 * (dr2 + sd * sd);
    return std::asin(std::sqrt(std::min(1.0, s2)));
}

namespace {

// integrand of the distance bound: half the root of the QFI along the path
struct RateIntegrand {
    const ReservoirModel& r;
    const QubitState& s;
    const num::QuadratureSpec& inner;

    double operator()(double t) const {
        double g = gamma(r, t, inner).value;
        double gd = gamma_dot(r, t, inner).value;
        return 0.5 * std::sqrt(qfi(s, g, gd));
    }
};

num::QuadratureSpec outer_spec(const num::QuadratureSpec& inner) {
    num::QuadratureSpec outer;
    outer.rel_tol = std::max(1e-10, 10.0 * inner.rel_tol);
    outer.abs_tol = 1e-13;
    outer.max_panels = inner.max_panels;
    return outer;
}

}  // namespace

double distance_bound(const ReservoirModel& r, const QubitState& s, double tau,
                      const num::QuadratureSpec& spec) {
    validate_state(s);
    if (tau < 0.0) throw std::invalid_argument("time must be non-negative");
    if (tau == 0.0) return 0.0;
    RateIntegrand w{r, s, spec};
    num::QuadResult q = num::integrate_interval(w, 0.0, tau, outer_spec(spec));
    if (!q.converged)
        throw NonConvergence("distance bound integral did not converge at tau=" +
                             std::to_string(tau));
    return q.value;
}

QslResult solve_tau_qsl(const QslProblem& p, const num::QuadratureSpec& spec) {
    validate_state(p.state);
    if (p.distance < 0.0) throw std::invalid_argument("target distance must be non-negative");
    if (!(p.tolerance > 0.0)) throw std::invalid_argument("tolerance must be positive");
    const ReservoirModel& r = p.reservoir;
    double t_hi = p.t_max > 0.0 ? p.t_max : 1e4 * r.natural_time();

    QslResult res;
    res.t_max_used = t_hi;
    if (p.distance == 0.0) {
        res.reachable = true;
        res.tau = 0.0;
        res.speed = 0.0;
        return res;
    }

    RateIntegrand w{r, p.state, spec};
    num::QuadratureSpec wspec;  // per-window accuracy; errors accumulate over ~45 windows
    wspec.rel_tol = 1e-8;
    wspec.abs_tol = 2e-13;
    num::QuadratureSpec rspec;  // root refinement wants the partial integral tighter
    rspec.rel_tol = 1e-10;
    rspec.abs_tol = 1e-14;

    double cum = 0.0;
    double lo = 0.0;
    double hi = std::min(1e-6 * r.natural_time(), t_hi);
    long iters = 0;
    while (lo < t_hi) {
        num::QuadResult win = num::integrate_interval(w, lo, hi, wspec);
        ++iters;
        if (!win.converged)
            throw NonConvergence("speed limit window did not converge near t=" +
                                 std::to_string(hi));
        if (cum + win.value >= p.distance) {
            auto g = [&](double x) {
                if (x <= lo) return cum - p.distance;
                return cum + num::integrate_interval(w, lo, x, rspec).value - p.distance;
            };
            int root_iters = 0;
            try {
                double tau = num::find_root_monotone(g, lo, hi, p.tolerance, &root_iters);
                iters += root_iters;
                res.reachable = true;
                res.tau = tau;
                res.speed = p.distance / tau;
                res.achieved = cum + num::integrate_interval(w, lo, tau, rspec).value;
                res.sup_dub = res.achieved;
                res.iterations = iters;
                return res;
            } catch (const NoBracket&) {
                iters += root_iters;  // window total overshot by less than the refinement error
            }
        }
        cum += win.value;
        lo = hi;
        hi = std::min(hi * 2.0, t_hi);
    }
    res.reachable = false;
    res.sup_dub = cum;
    res.achieved = cum;
    res.iterations = iters;
    return res;
}

}  // namespace becdeph
