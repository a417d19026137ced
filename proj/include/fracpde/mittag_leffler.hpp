#pragma once

#include "fracpde/types.hpp"

namespace fracpde {

/// E_{alpha,beta}(z) = sum_k z^k / Gamma(alpha k + beta), summed with
/// compensated summation until |term| < 1e-18 |partial sum|.
///
/// For alpha < 1 and moderately large |z| the series terms grow to
/// exp(O(|z|^(1/alpha))) before Gamma wins, and the alternating sum cancels
/// below double precision; in that regime the same series is summed in
/// MPFR big floats with enough bits to absorb the peak. Arguments outside
/// the |z| <= 50 oracle envelope are rejected.
Complex mittag_leffler(double alpha, double beta, Complex z);

}  // namespace fracpde
