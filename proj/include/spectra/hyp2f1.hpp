#pragma once

namespace spectra {

// Gauss hypergeometric 2F1(a, b; c; z) for real parameters and z < 1.
// Direct series near 0, Pfaff transform for moderately negative z, and the
// 1/z connection formula for large negative z (requires b - a away from an
// integer there; the callers in this library have b - a in {1/2, 3/2}).
double gauss_2f1(double a, double b, double c, double z);

} // namespace spectra
