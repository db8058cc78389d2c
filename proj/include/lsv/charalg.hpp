#pragma once

#include "lsv/rootdata.hpp"
#include "lsv/types.hpp"
#include "lsv/weyl.hpp"

#include <map>

namespace lsv {

// An element of the group algebra Z[Z^d]: a finitely supported map from
// exponents to arbitrary-precision integers, kept canonical (no zero
// coefficients). Weights use fundamental coordinates; d is the rank for
// one-variable characters and twice the rank for bi-characters, whose
// exponents are the two weights stacked as (wt1 | wt2).
class Character {
 public:
  explicit Character(int dim) : dim_(dim) {}
  static Character monomial(const Vec& exponent, Coeff c = 1);

  int dim() const { return dim_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const std::map<Vec, Coeff, LexLess>& terms() const { return terms_; }
  Coeff coeff(const Vec& exponent) const;

  void add(const Vec& exponent, const Coeff& c);

  Character& operator+=(const Character& o);
  Character& operator-=(const Character& o);
  Character& operator*=(const Coeff& c);
  friend Character operator+(Character a, const Character& b) { return a += b; }
  friend Character operator-(Character a, const Character& b) { return a -= b; }
  friend Character operator-(Character a);
  friend Character operator*(const Coeff& c, Character a) { return a *= c; }
  // Convolution: e^a * e^b = e^{a+b}.
  friend Character operator*(const Character& a, const Character& b);
  bool operator==(const Character& o) const {
    return dim_ == o.dim_ && terms_ == o.terms_;
  }

 private:
  void check_same(const Character& o) const;

  int dim_;
  std::map<Vec, Coeff, LexLess> terms_;
};

using BiCharacter = Character;

// e^a (x) e^b = e^{(a|b)}.
BiCharacter external_product(const Character& a, const Character& b);
// (t, u) -> (u, t): swap the two exponent halves.
BiCharacter swap_slots(const BiCharacter& c, int rank);
// Evaluation at inverted torus elements: e^nu -> e^{-nu} (both slots).
Character invert_variables(const Character& c);
// Apply a Weyl matrix to every exponent.
Character w_act(const Mat& m, const Character& c);
// Apply a Weyl matrix to one slot of a bi-character (slot 0 or 1).
BiCharacter w_act_slot(const Mat& m, const BiCharacter& c, int slot);
// (t, t^{-1}) specialization: e^{(nu1|nu2)} -> e^{nu1 - nu2}.
Character specialize_anti_diagonal(const BiCharacter& c, int rank);
// Sum of coefficients; the dimension when c is a module character.
Coeff evaluate_at_identity(const Character& c);
// Multiply by the monomial scale * e^{shift}.
Character shifted(const Character& c, const Vec& shift, const Coeff& scale = 1);
// Multiply by (1 - e^{gamma}).
Character times_one_minus(const Character& c, const Vec& gamma);
// Exact division by (1 - e^{delta}), delta != 0; throws std::runtime_error if
// the division does not clear.
Character divide_by_one_minus(const Character& c, const Vec& delta);

// Weyl character oracle, multiplication-only form of the alternant identity:
//   (sum_w (-1)^{l(w)} e^{w rho}) * f == sum_w (-1)^{l(w)} e^{w(lambda+rho)}.
Character weyl_alternant(const WeylGroup& wg, const Vec& nu);
bool weyl_character_check(const WeylGroup& wg, const Vec& lambda, const Character& f);
// prod_{alpha > 0} <lambda + rho, alpha^vee> / <rho, alpha^vee>, exactly.
Coeff weyl_dim(const RootSystem& rs, const Vec& lambda);

}  // namespace lsv
