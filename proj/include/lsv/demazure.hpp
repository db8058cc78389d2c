#pragma once

#include "lsv/charalg.hpp"
#include "lsv/weyl.hpp"

#include <span>

namespace lsv {

// Demazure operators on Z[X] and their bi-character (left slot) versions.
//
// The rank-one step D_i acts on e^lambda with n = <lambda, alpha_i^vee>:
//   n >= 0 :  e^lambda + e^{lambda - alpha_i} + ... + e^{lambda - n alpha_i}
//   n = -1 :  0
//   n <= -2:  -(e^{lambda + alpha_i} + ... + e^{lambda + (-n-1) alpha_i})

Character demazure_step(const RootSystem& rs, int i, const Character& f);
BiCharacter demazure_step_left(const RootSystem& rs, int i, const BiCharacter& f);

// Composition right-to-left along the given word (not required to be reduced;
// D is 0-Hecke, so any word folds to its Demazure product).
Character demazure_op_word(const RootSystem& rs, std::span<const int> word,
                           const Character& f);
// Composition along the canonical reduced word of w.
Character demazure_op(const WeylGroup& wg, int w, const Character& f);
BiCharacter demazure_op_left(const WeylGroup& wg, int w, const BiCharacter& f);

// chi(S(x), lambda) = D_x(e^lambda); equals ch H^0(S(x), lambda) for dominant
// lambda.
Character schubert_euler(const WeylGroup& wg, int x, const Vec& lambda);

// chi(S(x), I_{boundary} (x) L(lambda)), realized by Moebius inversion over
// the Bruhat interval below x:
//   qchi(x, lambda) = sum_{y <= x} (-1)^{l(x) - l(y)} D_y(e^lambda).
Character boundary_euler(const WeylGroup& wg, int x, const Vec& lambda);

// Characters of P(nu) = H^0(S(w_min), mu) and of the sections vanishing on the
// boundary, Q(nu), where nu = w_min . mu with mu dominant and w_min shortest.
Character ch_P(const WeylGroup& wg, const Vec& nu);
Character ch_Q(const WeylGroup& wg, const Vec& nu);

}  // namespace lsv
