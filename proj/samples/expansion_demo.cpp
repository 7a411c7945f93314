// Walks through the library on a small expansion chamber: per-segment
// matrices from the closed-form exponential, the chain product, and the
// unimodularity drift across a short frequency sweep.

#include <cstdio>
#include <numbers>
#include <vector>

#include <phimat/phimat.hpp>

int main() {
  using phimat::cplx;
  using phimat::Mat2c;

  const phimat::Medium air{343.0};
  const std::vector<phimat::DuctSegment> chamber{
      {0.01, 0.1},  // inlet pipe
      {0.05, 0.3},  // chamber
      {0.01, 0.1},  // outlet pipe
  };

  std::printf("segment alphas (S/c):");
  for (const auto& seg : chamber) std::printf(" %.6g", phimat::segment_alpha(seg, air));
  std::printf("\n\n");

  std::printf("%10s %14s %14s %12s\n", "freq_hz", "|p_out|", "Re(m11)", "det_dev");
  for (double f : {50.0, 125.0, 250.0, 500.0, 1000.0}) {
    const double omega = 2.0 * std::numbers::pi * f;
    const Mat2c m = phimat::cascade(chamber, air, omega);

    // drive with a unit pressure, unit velocity state; no physical scaling
    // is implied (the matrices carry no density factor)
    const phimat::AcousticState out = phimat::propagate({cplx{1.0}, cplx{1.0}}, m);
    std::printf("%10g %14.6g %14.6g %12.3g\n", f, std::abs(out.p), m.e11.real(),
                std::abs(det(m) - cplx{1.0}));
  }

  // the same closed form drives the pure matrix identities
  const Mat2c quarter = phimat::exp_phi(1.0, std::numbers::pi / 2.0);
  std::printf("\nexp at a quarter turn, alpha = 1 (the imaginary unit matrix):\n");
  std::printf("  (%.3g, %.3g) (%.3g, %.3g)\n", quarter.e11.real(), quarter.e11.imag(),
              quarter.e12.real(), quarter.e12.imag());
  std::printf("  (%.3g, %.3g) (%.3g, %.3g)\n", quarter.e21.real(), quarter.e21.imag(),
              quarter.e22.real(), quarter.e22.imag());
  return 0;
}
