#pragma once

#include <optional>
#include <span>
#include <vector>

#include "qmckit/types.hpp"

namespace qmckit {

/// Principal-branch power exp(e Log x). Throws ZeroBase for x = 0.
cx cpow(cx x, cx e);

/// (a;q)_n = prod_{j=0}^{n-1} (1 - q^j a); empty product for n = 0.
cx qpoch_finite(cx a, cx q, int n);

/// (a;q)_inf, truncated once |q^j a| stays below t.rel_tol for
/// t.tail_window consecutive factors.
cx qpoch_infinite(cx a, cx q, const Truncation& t);

cx qpoch_multi_finite(std::span<const cx> as, cx q, int n);
cx qpoch_multi_infinite(std::span<const cx> as, cx q, const Truncation& t);

/// theta_q(x) = (x, q/x, q; q)_inf.
cx theta_q(cx x, cx q, const Truncation& t);

/// If v = q^{-m} for some integer m >= 0 (within tol), returns m.
std::optional<int> lattice_power_index(cx v, cx q, double tol = 1e-12);

struct PhiSpec {
  std::vector<cx> upper;  // a_1..a_r
  std::vector<cx> lower;  // b_1..b_{r-1}
  cx q;
  cx z;
};

/// Basic hypergeometric series r_phi_{r-1}(upper; lower; q, z).
/// Terminating series (an upper parameter on the lattice q^{-n}) are summed
/// exactly to the terminating index; otherwise |z| < 1 is required.
cx rphi(const PhiSpec& spec, const Truncation& t);

/// q-Appell Phi^(1)(a; b, b'; c; q; y, z), summed along anti-diagonals
/// m + n = const with a per-diagonal tail test.
cx qappell_phi1(cx a, cx b, cx bp, cx c, cx q, cx y, cx z, const Truncation& t);

}  // namespace qmckit
