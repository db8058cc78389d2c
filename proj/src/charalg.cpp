#include "lsv/charalg.hpp"

#include <stdexcept>

namespace lsv {

Character Character::monomial(const Vec& exponent, Coeff c) {
  Character out(static_cast<int>(exponent.size()));
  out.add(exponent, c);
  return out;
}

Coeff Character::coeff(const Vec& exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? Coeff(0) : it->second;
}

void Character::add(const Vec& exponent, const Coeff& c) {
  if (exponent.size() != dim_) throw std::invalid_argument("exponent dimension mismatch");
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(exponent, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void Character::check_same(const Character& o) const {
  if (dim_ != o.dim_) throw std::invalid_argument("mixed character algebras");
}

Character& Character::operator+=(const Character& o) {
  check_same(o);
  for (const auto& [e, c] : o.terms_) add(e, c);
  return *this;
}

Character& Character::operator-=(const Character& o) {
  check_same(o);
  for (const auto& [e, c] : o.terms_) add(e, -c);
  return *this;
}

Character& Character::operator*=(const Coeff& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

Character operator-(Character a) {
  for (auto& [e, v] : a.terms_) v = -v;
  return a;
}

Character operator*(const Character& a, const Character& b) {
  a.check_same(b);
  Character out(a.dim());
  for (const auto& [ea, ca] : a.terms())
    for (const auto& [eb, cb] : b.terms()) out.add(ea + eb, ca * cb);
  return out;
}

BiCharacter external_product(const Character& a, const Character& b) {
  Character out(a.dim() + b.dim());
  for (const auto& [ea, ca] : a.terms())
    for (const auto& [eb, cb] : b.terms()) out.add(concat(ea, eb), ca * cb);
  return out;
}

BiCharacter swap_slots(const BiCharacter& c, int rank) {
  if (c.dim() != 2 * rank) throw std::invalid_argument("swap_slots: not a bi-character");
  Character out(c.dim());
  for (const auto& [e, v] : c.terms()) out.add(concat(e.tail(rank), e.head(rank)), v);
  return out;
}

Character invert_variables(const Character& c) {
  Character out(c.dim());
  for (const auto& [e, v] : c.terms()) out.add(-e, v);
  return out;
}

Character w_act(const Mat& m, const Character& c) {
  if (m.cols() != c.dim()) throw std::invalid_argument("w_act: dimension mismatch");
  Character out(c.dim());
  for (const auto& [e, v] : c.terms()) out.add(m * e, v);
  return out;
}

BiCharacter w_act_slot(const Mat& m, const BiCharacter& c, int slot) {
  const int r = static_cast<int>(m.cols());
  if (c.dim() != 2 * r || (slot != 0 && slot != 1))
    throw std::invalid_argument("w_act_slot: bad arguments");
  Character out(c.dim());
  for (const auto& [e, v] : c.terms()) {
    Vec e2 = e;
    e2.segment(slot * r, r) = m * e.segment(slot * r, r);
    out.add(e2, v);
  }
  return out;
}

Character specialize_anti_diagonal(const BiCharacter& c, int rank) {
  if (c.dim() != 2 * rank)
    throw std::invalid_argument("specialize_anti_diagonal: not a bi-character");
  Character out(rank);
  for (const auto& [e, v] : c.terms()) out.add(e.head(rank) - e.tail(rank), v);
  return out;
}

Coeff evaluate_at_identity(const Character& c) {
  Coeff s = 0;
  for (const auto& [e, v] : c.terms()) s += v;
  return s;
}

Character shifted(const Character& c, const Vec& shift, const Coeff& scale) {
  Character out(c.dim());
  for (const auto& [e, v] : c.terms()) out.add(e + shift, v * scale);
  return out;
}

Character times_one_minus(const Character& c, const Vec& gamma) {
  Character out = c;
  out -= shifted(c, gamma);
  return out;
}

Character divide_by_one_minus(const Character& c, const Vec& delta) {
  if (delta.isZero()) throw std::invalid_argument("division by zero factor");
  // Normalize the factor so that gamma is lex-positive:
  // 1/(1 - e^{delta}) = -e^{-delta} / (1 - e^{-delta}) when delta < 0.
  Vec gamma = delta;
  Character rem = c;
  if (lex_less(delta, Vec::Zero(delta.size()))) {
    gamma = -delta;
    rem = shifted(rem, gamma, -1);
  }
  if (rem.is_zero()) return rem;

  // Peel off lexicographically minimal terms. In h (1 - e^gamma) = f the
  // minimal term of f is the minimal term of h, so each step is forced. Any
  // quotient term must sit at least <gamma, gamma> below the top of f in the
  // gamma-score, which bounds the loop and detects non-divisibility.
  const Coord step = gamma.dot(gamma);
  Coord top = 0;
  bool first = true;
  for (const auto& [e, v] : rem.terms()) {
    Coord s = gamma.dot(e);
    if (first || s > top) top = s;
    first = false;
  }
  Character quotient(c.dim());
  while (!rem.is_zero()) {
    const auto& [e, v] = *rem.terms().begin();
    if (gamma.dot(e) > top - step)
      throw std::runtime_error("non-clearing division in Z[X]");
    Vec mu = e;
    Coeff coeff = v;
    quotient.add(mu, coeff);
    rem.add(mu, -coeff);
    rem.add(mu + gamma, coeff);
  }
  return quotient;
}

Character weyl_alternant(const WeylGroup& wg, const Vec& nu) {
  Character out(wg.root_system().rank());
  for (int w = 0; w < wg.size(); ++w)
    out.add(wg.act(w, nu), (wg.length(w) % 2 == 0) ? 1 : -1);
  return out;
}

bool weyl_character_check(const WeylGroup& wg, const Vec& lambda, const Character& f) {
  const Vec& rho = wg.root_system().rho();
  return weyl_alternant(wg, rho) * f == weyl_alternant(wg, lambda + rho);
}

Coeff weyl_dim(const RootSystem& rs, const Vec& lambda) {
  Coeff num = 1, den = 1;
  for (const Root& alpha : rs.positive_roots()) {
    num *= Coeff(rs.pairing(lambda + rs.rho(), alpha));
    den *= Coeff(rs.pairing(rs.rho(), alpha));
  }
  if (num % den != 0) throw std::runtime_error("weyl_dim: non-exact division");
  return num / den;
}

}  // namespace lsv
