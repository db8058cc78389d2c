#pragma once

#include "lsv/charalg.hpp"
#include "lsv/demazure.hpp"
#include "lsv/weyl.hpp"

#include <utility>
#include <vector>

namespace lsv {

// Components and cells of Z(w), the intersection of the large Schubert
// variety X(w) with the closed orbit G/B x G/B. Components are the pairs
// (wx, x w0) over x with l(wx) = l(w) + l(x); cells are their downward
// closure in the product Bruhat order.
struct ZComponents {
  int w = 0;
  std::vector<std::pair<int, int>> pairs;
  std::vector<std::pair<int, int>> cells;
};

ZComponents components_Z(const WeylGroup& wg, int w);

// chi(Z(w), lambda) by the cell sieve:
//   sum over cells (a, b) of qchi(a, lambda) (x) qchi(b, -w0 lambda).
// For dominant lambda this is ch H^0(Z(w), lambda).
BiCharacter z_euler(const WeylGroup& wg, int w, const Vec& lambda);

// c_lambda = sum_{x in W} D_x(e^lambda) (x) qchi(x w0, -w0 lambda); the second
// route to chi(Z, lambda), which must agree with z_euler(e, lambda).
BiCharacter c_char(const WeylGroup& wg, const Vec& lambda);

// ch M(mu) = sum_{nu in W mu} ch P(nu) (x) ch Q(-nu), mu dominant.
BiCharacter m_char(const WeylGroup& wg, const Vec& mu);

// Reciprocity: (1) c_{-w0 lambda} = c_lambda with slots swapped;
// (2) c_{-lambda} at inverted variables = (-1)^N e^{(rho,rho)} c_{lambda-rho}.
struct RecipResult {
  bool swap_ok = false;
  bool serre_ok = false;
  bool ok() const { return swap_ok && serre_ok; }
};
RecipResult verify_recip(const WeylGroup& wg, const Vec& lambda);

// Separation of variables:
// (1) D_{w0}(e^{lambda+mu}) = sum_x D_x(e^lambda) * qchi(x w0, -w0 mu) at
//     inverted variables;
// (2) for dominant lambda, c_lambda at (t, t^{-1}) = D_{w0}(e^{2 lambda});
// (3) for dominant lambda, dim M(lambda) = weyl_dim(2 lambda).
struct SepResult {
  bool convolution_ok = false;
  bool anti_diagonal_ok = false;
  bool dimension_ok = false;
  bool ok() const { return convolution_ok && anti_diagonal_ok && dimension_ok; }
};
SepResult verify_sep(const WeylGroup& wg, const Vec& lambda, const Vec& mu);

// Layers of the filtration of H^0(X(w), lambda) by order of vanishing along
// Z(w): all dominant mu <= lambda, each with its level n = sum n_i where
// lambda - mu = sum n_i alpha_i. Sorted by (n, mu lex).
std::vector<std::pair<int, Vec>> fil_layers(const WeylGroup& wg, int w, const Vec& lambda);

// Graded character sum_{mu <= lambda dominant} D_w^{left}(c_mu). The character
// of H^0(X(w), lambda) itself equals this, the filtration being finite and
// exhaustive.
BiCharacter xw_char(const WeylGroup& wg, int w, const Vec& lambda);

// Layers of k[B~]_gamma (gamma the coset of lambda mod the root lattice) by
// pole order n = 0..n_max along the boundary:
//   n = 0 : dominant mu = lambda - sum m_i alpha_i, m_i >= 0;
//   n >= 1: dominant mu = lambda + n beta - sum m_i alpha_i, m_i >= 0,
//           min_i m_i = 0   (beta = sum of simple roots).
// Every reachable dominant weight of the coset appears exactly once.
std::vector<std::pair<int, Vec>> vdk_layers(const RootSystem& rs, const Vec& lambda,
                                            int n_max);

}  // namespace lsv
