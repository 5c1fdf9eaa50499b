#pragma once

#include <optional>
#include <string>

#include "qmckit/jackson.hpp"

namespace qmckit {

/// The pseudo-constant coefficients of the linear relations: the J/K catalog,
/// the S/A coefficients of the f32..f37 correspondences, and K63. K_{m,n} is
/// J_{m,n} with beta1 and beta2 exchanged (evaluated structurally, never
/// retyped). S1Check is S1 at swapped betas.
enum class Coeff {
  J11, J12, J13, J21, J23, J31, J33, J41, J43, J51, J53, J61, J63,
  K11, K13, K31, K33, K51, K53,
  S1, S1Check, S2, S3, S4, S5,
  A11, A12, K63,
};

const char* coeff_name(Coeff c);
std::optional<Coeff> coeff_from_name(const std::string& name);

/// True for coefficients whose closed form has no x in it.
bool coeff_is_x_free(Coeff c);

cx eval_coeff(Coeff c, cx x, const QParams& p, const Truncation& t);

/// The correction terms C1(x), C2(x), C3(x) of the f34/f37/f36 relations
/// (each is prefactor * 3phi2, not a pseudo-constant).
cx eval_c1(cx x, const QParams& p, const Truncation& t);
cx eval_c2(cx x, const QParams& p, const Truncation& t);
cx eval_c3(cx x, const QParams& p, const Truncation& t);

}  // namespace qmckit
