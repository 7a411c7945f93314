// phimat: exponential identities for a I + b phi matrices, plus the duct
// cascade front end. Subcommands: exp, power, verify, cascade.
//
// Exit codes: 0 all checks passed, 1 a deviation exceeded its tolerance,
// 2 usage or input error.

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <numbers>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <phimat/phimat.hpp>

namespace {

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kUsage = 2;

// 17 significant digits round-trips every double.
std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string entry(phimat::cplx z) { return "(" + num(z.real()) + ", " + num(z.imag()) + ")"; }

void print_matrix(const phimat::Mat2c& m) {
  std::printf("  %s %s\n", entry(m.e11).c_str(), entry(m.e12).c_str());
  std::printf("  %s %s\n", entry(m.e21).c_str(), entry(m.e22).c_str());
}

int report(double dev, double tol) {
  std::printf("max entry deviation = %s (tolerance %g)\n", num(dev).c_str(), tol);
  std::printf("%s\n", dev <= tol ? "PASS" : "FAIL");
  return dev <= tol ? kOk : kCheckFailed;
}

int require_finite(std::initializer_list<double> values) {
  for (double v : values)
    if (!std::isfinite(v)) {
      std::fprintf(stderr, "error: numeric arguments must be finite\n");
      return kUsage;
    }
  return kOk;
}

int cmd_exp(double alpha, double angle, double tol) {
  if (int rc = require_finite({alpha, angle, tol})) return rc;
  const phimat::Mat2c series = phimat::exp_series(phimat::cplx{angle} * phimat::phi(alpha));
  const phimat::Mat2c closed = phimat::exp_phi(alpha, angle);
  std::printf("alpha = %s, phi = %s\n", num(alpha).c_str(), num(angle).c_str());
  std::printf("series exponential:\n");
  print_matrix(series);
  std::printf("closed form:\n");
  print_matrix(closed);
  return report(max_abs_diff(series, closed), tol);
}

int cmd_power(double alpha, std::uint64_t n) {
  if (int rc = require_finite({alpha})) return rc;
  const phimat::Mat2c fast = phimat::psi_pow(alpha, n);
  const phimat::Mat2c slow = phimat::psi_pow_naive(alpha, n);
  std::printf("alpha = %s, n = %llu\n", num(alpha).c_str(), static_cast<unsigned long long>(n));
  std::printf("parity rule:\n");
  print_matrix(fast);
  std::printf("repeated multiplication:\n");
  print_matrix(slow);
  const double tol = 1e-9 * std::max(1.0, std::pow(alpha, static_cast<double>(n)));
  return report(max_abs_diff(fast, slow), tol);
}

int cmd_verify(double alpha) {
  if (int rc = require_finite({alpha})) return rc;
  std::vector<double> angles;
  for (int i = -16; i <= 16; ++i) angles.push_back(i * std::numbers::pi / 8.0);
  const std::vector<std::int64_t> ms{-2, -1, 1, 2, 3};
  const std::vector<std::int64_t> ks{-1, 0, 1, 2};

  const phimat::IdentityReport rep = phimat::run_identity_suite(alpha, angles, ms, ks);
  const bool at_one = alpha == 1.0;

  // quarter-turn identities drift with the largest |1 + 4k| in the sample set
  double mmax = 1.0;
  for (std::int64_t k : ks) mmax = std::max(mmax, std::abs(1.0 + 4.0 * static_cast<double>(k)));

  std::printf("alpha = %s\n", num(alpha).c_str());
  bool all_pass = true;
  const auto line = [&](const char* name, double dev, double tol, bool evaluated) {
    if (!evaluated) {
      std::printf("%s: skipped (defined only at alpha = 1)\n", name);
      return;
    }
    const bool pass = dev <= tol;
    all_pass = all_pass && pass;
    std::printf("%s: deviation = %s (tolerance %g) %s\n", name, num(dev).c_str(), tol,
                pass ? "PASS" : "FAIL");
  };
  line("scalar Euler embedding", rep.note1_dev, 1e-14, true);
  line("unimodularity", rep.note2_dev, 1e-12, true);
  line("full turns", rep.note3_dev, 1e-12, at_one);
  line("quarter turns", rep.note4_dev, 1e-13 * mmax, at_one);
  line("Pauli sigma1", rep.pauli_dev, 1e-13 * mmax, at_one);
  std::printf("%s\n", all_pass ? "all identities hold" : "identity check failed");
  return all_pass ? kOk : kCheckFailed;
}

int cmd_cascade(const std::string& chain_path, double fmin, double fmax, std::int64_t points) {
  if (int rc = require_finite({fmin, fmax})) return rc;
  if (fmin > fmax || points < 1) {
    std::fprintf(stderr, "error: need fmin <= fmax and points >= 1\n");
    return kUsage;
  }
  const phimat::ChainFile chain = phimat::load_chain_file(chain_path);

  std::vector<double> freqs;
  freqs.reserve(static_cast<std::size_t>(points));
  for (std::int64_t i = 0; i < points; ++i)
    freqs.push_back(points == 1 ? fmin
                                : fmin + static_cast<double>(i) * (fmax - fmin) /
                                             static_cast<double>(points - 1));

  std::vector<double> omegas;
  omegas.reserve(freqs.size());
  for (double f : freqs) omegas.push_back(2.0 * std::numbers::pi * f);

  const auto rows = phimat::frequency_sweep(chain.segments, chain.medium, omegas);

  std::printf("freq_hz,m11_re,m11_im,m12_re,m12_im,m21_re,m21_im,m22_re,m22_im,det_dev\n");
  double worst = 0.0;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const phimat::Mat2c& m = rows[i].matrix;
    std::printf("%s,%s,%s,%s,%s,%s,%s,%s,%s,%s\n", num(freqs[i]).c_str(),
                num(m.e11.real()).c_str(), num(m.e11.imag()).c_str(), num(m.e12.real()).c_str(),
                num(m.e12.imag()).c_str(), num(m.e21.real()).c_str(), num(m.e21.imag()).c_str(),
                num(m.e22.real()).c_str(), num(m.e22.imag()).c_str(),
                num(rows[i].det_dev).c_str());
    worst = std::max(worst, rows[i].det_dev);
  }
  const double tol = 1e-9 * static_cast<double>(chain.segments.size());
  std::fprintf(stderr, "max det deviation = %s (tolerance %g) %s\n", num(worst).c_str(), tol,
               worst <= tol ? "PASS" : "FAIL");
  return worst <= tol ? kOk : kCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exponential identities for a I + b phi matrices and duct cascades"};
  app.require_subcommand(1);

  double alpha = 1.0, angle = 0.0, tol = 1e-10;
  std::uint64_t n = 0;
  double fmin = 20.0, fmax = 2000.0;
  std::int64_t points = 100;
  std::string chain_path;

  CLI::App* exp_cmd = app.add_subcommand("exp", "series vs closed-form exponential of phi * phi-matrix");
  exp_cmd->add_option("--alpha", alpha, "class parameter, nonzero")->required();
  exp_cmd->add_option("--phi", angle, "exponent angle")->required();
  exp_cmd->add_option("--tol", tol, "acceptance tolerance")->capture_default_str();

  CLI::App* power_cmd = app.add_subcommand("power", "psi power via the parity rule vs repeated multiplication");
  power_cmd->add_option("--alpha", alpha, "class parameter, nonzero")->required();
  power_cmd->add_option("--n", n, "exponent, nonnegative integer")->required();

  CLI::App* verify_cmd = app.add_subcommand("verify", "run the identity suite");
  verify_cmd->add_option("--alpha", alpha, "class parameter, nonzero")->capture_default_str();

  CLI::App* cascade_cmd = app.add_subcommand("cascade", "frequency sweep of a duct chain, CSV to stdout");
  cascade_cmd->add_option("--chain", chain_path, "chain file (JSON)")->required();
  cascade_cmd->add_option("--fmin", fmin, "sweep start, Hz")->capture_default_str();
  cascade_cmd->add_option("--fmax", fmax, "sweep end, Hz")->capture_default_str();
  cascade_cmd->add_option("--points", points, "number of frequencies")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (exp_cmd->parsed()) return cmd_exp(alpha, angle, tol);
    if (power_cmd->parsed()) return cmd_power(alpha, n);
    if (verify_cmd->parsed()) return cmd_verify(alpha);
    return cmd_cascade(chain_path, fmin, fmax, points);
  } catch (const phimat::error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kUsage;
  }
}
