#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace qmckit {

using cx = std::complex<double>;

enum class Errc {
  ModulusOfQOutOfRange,
  TruncationFailure,
  DivergentSeries,
  PoleInDenominator,
  ZeroArgument,
  ZeroBase,
  OutOfConvergenceDomain,
  QuotientNotInvariant,
  EliminationSingular,
  UnknownFamily,
  ConfigError,
  ParseError,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

/// Stop rule for infinite sums/products: require `tail_window` consecutive
/// terms below `rel_tol` (relative to the running value) before accepting.
struct Truncation {
  double rel_tol = 1e-14;
  int max_terms = 5000;
  int tail_window = 5;

  void validate() const {
    if (!(rel_tol > 0) || max_terms < tail_window || tail_window < 1)
      throw Error(Errc::ConfigError, "invalid truncation policy");
  }
};

/// Bilateral sums expand the two tails independently.
struct BilateralTruncation {
  Truncation base{1e-12, 5000, 5};
  int max_neg = 400;
  int max_pos = 400;

  void validate() const {
    base.validate();
    if (max_neg < 1 || max_pos < 1)
      throw Error(Errc::ConfigError, "invalid bilateral truncation");
  }
};

}  // namespace qmckit
