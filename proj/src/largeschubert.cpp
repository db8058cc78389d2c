#include "lsv/largeschubert.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace lsv {

ZComponents components_Z(const WeylGroup& wg, int w) {
  ZComponents z;
  z.w = w;
  for (int x = 0; x < wg.size(); ++x) {
    int wx = wg.multiply(w, x);
    if (wg.length(wx) != wg.length(w) + wg.length(x)) continue;
    z.pairs.emplace_back(wx, wg.multiply(x, wg.longest()));
  }
  for (int c = 0; c < wg.size(); ++c) {
    for (int d = 0; d < wg.size(); ++d) {
      bool in = false;
      for (const auto& [a, b] : z.pairs) {
        if (wg.bruhat_leq(c, a) && wg.bruhat_leq(d, b)) {
          in = true;
          break;
        }
      }
      if (in) z.cells.emplace_back(c, d);
    }
  }
  return z;
}

BiCharacter z_euler(const WeylGroup& wg, int w, const Vec& lambda) {
  const int r = wg.root_system().rank();
  const Vec minus_w0_lambda = -wg.act(wg.longest(), lambda);
  ZComponents z = components_Z(wg, w);
  std::map<int, Character> left, right;
  for (const auto& [a, b] : z.cells) {
    if (!left.count(a)) left.emplace(a, boundary_euler(wg, a, lambda));
    if (!right.count(b)) right.emplace(b, boundary_euler(wg, b, minus_w0_lambda));
  }
  BiCharacter out(2 * r);
  for (const auto& [a, b] : z.cells) out += external_product(left.at(a), right.at(b));
  return out;
}

BiCharacter c_char(const WeylGroup& wg, const Vec& lambda) {
  const int r = wg.root_system().rank();
  const Vec minus_w0_lambda = -wg.act(wg.longest(), lambda);
  BiCharacter out(2 * r);
  for (int x = 0; x < wg.size(); ++x) {
    int xw0 = wg.multiply(x, wg.longest());
    out += external_product(schubert_euler(wg, x, lambda),
                            boundary_euler(wg, xw0, minus_w0_lambda));
  }
  return out;
}

BiCharacter m_char(const WeylGroup& wg, const Vec& mu) {
  if (!is_dominant(mu)) throw std::invalid_argument("m_char: mu must be dominant");
  const int r = wg.root_system().rank();
  std::set<Vec, LexLess> orbit;
  for (int w = 0; w < wg.size(); ++w) orbit.insert(wg.act(w, mu));
  BiCharacter out(2 * r);
  for (const Vec& nu : orbit) out += external_product(ch_P(wg, nu), ch_Q(wg, -nu));
  return out;
}

RecipResult verify_recip(const WeylGroup& wg, const Vec& lambda) {
  const RootSystem& rs = wg.root_system();
  const int r = rs.rank();
  RecipResult res;
  const Vec minus_w0_lambda = -wg.act(wg.longest(), lambda);
  res.swap_ok = c_char(wg, minus_w0_lambda) == swap_slots(c_char(wg, lambda), r);

  BiCharacter lhs = invert_variables(c_char(wg, -lambda));
  BiCharacter rhs = BiCharacter::monomial(concat(rs.rho(), rs.rho()),
                                          rs.num_positive() % 2 == 0 ? 1 : -1) *
                    c_char(wg, lambda - rs.rho());
  res.serre_ok = lhs == rhs;
  return res;
}

SepResult verify_sep(const WeylGroup& wg, const Vec& lambda, const Vec& mu) {
  const RootSystem& rs = wg.root_system();
  SepResult res;

  const Vec minus_w0_mu = -wg.act(wg.longest(), mu);
  Character rhs(rs.rank());
  for (int x = 0; x < wg.size(); ++x) {
    int xw0 = wg.multiply(x, wg.longest());
    rhs += schubert_euler(wg, x, lambda) *
           invert_variables(boundary_euler(wg, xw0, minus_w0_mu));
  }
  res.convolution_ok = schubert_euler(wg, wg.longest(), lambda + mu) == rhs;

  if (is_dominant(lambda)) {
    BiCharacter c = c_char(wg, lambda);
    res.anti_diagonal_ok = specialize_anti_diagonal(c, rs.rank()) ==
                           schubert_euler(wg, wg.longest(), 2 * lambda);
    res.dimension_ok = evaluate_at_identity(c) == weyl_dim(rs, 2 * lambda);
  } else {
    res.anti_diagonal_ok = true;
    res.dimension_ok = true;
  }
  return res;
}

std::vector<std::pair<int, Vec>> fil_layers(const WeylGroup& wg, int /*w*/, const Vec& lambda) {
  // The layer list is independent of w; only the layer characters
  // (z_euler(w, mu) per layer) see it.
  const RootSystem& rs = wg.root_system();
  std::vector<std::pair<int, Vec>> layers;
  for (const Vec& mu : dominant_weights_below(rs, lambda)) {
    auto n = root_coordinates(rs, lambda - mu);
    layers.emplace_back(static_cast<int>(n->sum()), mu);
  }
  std::sort(layers.begin(), layers.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first < b.first;
    return lex_less(a.second, b.second);
  });
  return layers;
}

BiCharacter xw_char(const WeylGroup& wg, int w, const Vec& lambda) {
  const int r = wg.root_system().rank();
  BiCharacter out(2 * r);
  for (const Vec& mu : dominant_weights_below(wg.root_system(), lambda))
    out += demazure_op_left(wg, w, c_char(wg, mu));
  return out;
}

std::vector<std::pair<int, Vec>> vdk_layers(const RootSystem& rs, const Vec& lambda,
                                            int n_max) {
  if (n_max < 0) throw std::invalid_argument("vdk_layers: n_max must be >= 0");
  const Vec beta = rs.sum_of_simple_roots();
  std::vector<std::pair<int, Vec>> layers;
  for (int n = 0; n <= n_max; ++n) {
    Vec top = lambda + Coord(n) * beta;
    std::vector<Vec> level;
    for (const Vec& mu : dominant_weights_below(rs, top)) {
      if (n >= 1) {
        Vec m = *root_coordinates(rs, top - mu);
        if (m.minCoeff() != 0) continue;
      }
      level.push_back(mu);
    }
    for (const Vec& mu : level) layers.emplace_back(n, mu);
  }
  return layers;
}

}  // namespace lsv
