// output.cpp — deterministic CSV formatting for the command-line tools
#include "becdeph/output.hpp"

#include <cmath>
#include <cstdio>

namespace becdeph {

std::string fmt_g17(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void write_curve_csv(std::ostream& os, const std::vector<CurvePoint>& curve,
                     double time_unit_seconds) {
    os << "t_internal,t_si_seconds,gamma,gamma_dot,err_gamma,err_gamma_dot\n";
    for (const CurvePoint& p : curve) {
        os << fmt_g17(p.t) << ',' << fmt_g17(p.t * time_unit_seconds) << ','
           << fmt_g17(p.gamma) << ',' << fmt_g17(p.gamma_dot) << ','
           << fmt_g17(p.err_gamma) << ',' << fmt_g17(p.err_gamma_dot) << '\n';
    }
}

void write_spectrum_csv(std::ostream& os, const std::vector<SpectrumRow>& rows) {
    os << "omega_internal,j_exact,j_asymptotic,ratio\n";
    for (const SpectrumRow& r : rows) {
        os << fmt_g17(r.omega) << ',' << fmt_g17(r.j_exact) << ','
           << fmt_g17(r.j_asymptotic) << ',' << fmt_g17(r.ratio) << '\n';
    }
}

}  // namespace becdeph
