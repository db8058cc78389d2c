#include "lsv/demazure.hpp"

#include <stdexcept>

namespace lsv {

namespace {

// One Demazure step on exponent coordinate `coord`, shifting by `shift`
// (alpha_i, embedded in the exponent space of f).
Character step_impl(const Character& f, int coord, const Vec& shift) {
  Character out(f.dim());
  for (const auto& [e, c] : f.terms()) {
    const Coord n = e[coord];
    if (n >= 0) {
      Vec mu = e;
      for (Coord k = 0; k <= n; ++k) {
        out.add(mu, c);
        mu -= shift;
      }
    } else if (n <= -2) {
      Vec mu = e + shift;
      for (Coord k = 1; k <= -n - 1; ++k) {
        out.add(mu, -c);
        mu += shift;
      }
    }
  }
  return out;
}

void check_index(const RootSystem& rs, int i) {
  if (i < 0 || i >= rs.rank()) throw std::invalid_argument("generator index out of range");
}

}  // namespace

Character demazure_step(const RootSystem& rs, int i, const Character& f) {
  check_index(rs, i);
  if (f.dim() != rs.rank()) throw std::invalid_argument("demazure_step: dimension mismatch");
  return step_impl(f, i, rs.simple_root(i));
}

BiCharacter demazure_step_left(const RootSystem& rs, int i, const BiCharacter& f) {
  check_index(rs, i);
  if (f.dim() != 2 * rs.rank())
    throw std::invalid_argument("demazure_step_left: not a bi-character");
  return step_impl(f, i, concat(rs.simple_root(i), rs.zero_weight()));
}

Character demazure_op_word(const RootSystem& rs, std::span<const int> word,
                           const Character& f) {
  Character out = f;
  for (auto it = word.rbegin(); it != word.rend(); ++it)
    out = demazure_step(rs, *it, out);
  return out;
}

Character demazure_op(const WeylGroup& wg, int w, const Character& f) {
  return demazure_op_word(wg.root_system(), wg.word(w), f);
}

BiCharacter demazure_op_left(const WeylGroup& wg, int w, const BiCharacter& f) {
  BiCharacter out = f;
  const auto& word = wg.word(w);
  for (auto it = word.rbegin(); it != word.rend(); ++it)
    out = demazure_step_left(wg.root_system(), *it, out);
  return out;
}

Character schubert_euler(const WeylGroup& wg, int x, const Vec& lambda) {
  return demazure_op(wg, x, Character::monomial(lambda));
}

Character boundary_euler(const WeylGroup& wg, int x, const Vec& lambda) {
  Character out(wg.root_system().rank());
  for (int y = 0; y < wg.size(); ++y) {
    if (!wg.bruhat_leq(y, x)) continue;
    Character term = schubert_euler(wg, y, lambda);
    if ((wg.length(x) - wg.length(y)) % 2 != 0) term = -std::move(term);
    out += term;
  }
  return out;
}

Character ch_P(const WeylGroup& wg, const Vec& nu) {
  auto data = wg.minimal_coset_data(nu);
  return schubert_euler(wg, data.w_min, data.dominant_rep);
}

Character ch_Q(const WeylGroup& wg, const Vec& nu) {
  auto data = wg.minimal_coset_data(nu);
  return boundary_euler(wg, data.w_min, data.dominant_rep);
}

}  // namespace lsv
