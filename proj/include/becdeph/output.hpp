// output.hpp — deterministic CSV formatting for the command-line tools
#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "becdeph/dephasing.hpp"

namespace becdeph {

// Shortest exact decimal form (17 significant digits); NaN and infinities
// are normalized to "nan", "inf", "-inf" so output does not depend on libc.
std::string fmt_g17(double v);

// Header: t_internal,t_si_seconds,gamma,gamma_dot,err_gamma,err_gamma_dot
// Failed points carry nan in every value column.
void write_curve_csv(std::ostream& os, const std::vector<CurvePoint>& curve,
                     double time_unit_seconds);

struct SpectrumRow {
    double omega = 0.0;  // internal units
    double j_exact = 0.0;
    double j_asymptotic = 0.0;
    double ratio = 0.0;
};

// Header: omega_internal,j_exact,j_asymptotic,ratio
void write_spectrum_csv(std::ostream& os, const std::vector<SpectrumRow>& rows);

}  // namespace becdeph
