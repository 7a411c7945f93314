#pragma once

#include <stdexcept>
#include <string>

namespace phimat {

/// Base class for every error this library throws.
class error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// The class parameter alpha must be nonzero.
class zero_alpha : public error {
public:
  zero_alpha() : error("alpha must be nonzero") {}
};

/// Structured products are defined only between matrices sharing the same alpha.
class alpha_mismatch : public error {
public:
  alpha_mismatch() : error("operands have different alpha") {}
};

/// Inversion of a structured matrix with a = b = 0.
class singular_matrix : public error {
public:
  singular_matrix() : error("matrix is singular (a and b both zero)") {}
};

/// A result entry would not be finite in double precision.
class overflow : public error {
public:
  explicit overflow(const std::string& what) : error(what) {}
};

/// The exponential series hit its term limit before the cutoff.
class no_convergence : public error {
public:
  explicit no_convergence(int max_terms)
      : error("series did not converge within " + std::to_string(max_terms) + " terms") {}
};

/// A cascade needs at least one segment.
class empty_chain : public error {
public:
  empty_chain() : error("segment chain is empty") {}
};

/// A sweep needs at least one frequency.
class empty_sweep : public error {
public:
  empty_sweep() : error("frequency list is empty") {}
};

/// Malformed or out-of-domain user input (chain files, physical parameters).
class bad_input : public error {
public:
  explicit bad_input(const std::string& what) : error(what) {}
};

}  // namespace phimat
