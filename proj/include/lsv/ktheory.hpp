#pragma once

#include "lsv/charalg.hpp"
#include "lsv/weyl.hpp"

#include <span>
#include <vector>

namespace lsv {

// A fraction numerator / prod (1 - e^{gamma_j}) in the fraction field of
// Z[X]. Denominator factors are kept as an unreduced multiset, normalized so
// every gamma is lexicographically positive (the unit -e^{-gamma} from
// flipping a factor is absorbed into the numerator). Equality is decided by
// exact cross-multiplication.
class Fraction {
 public:
  explicit Fraction(Character numerator) : num_(std::move(numerator)) {}

  const Character& numerator() const { return num_; }
  const std::vector<Vec>& denominator() const { return den_; }
  bool denominator_free() const { return den_.empty(); }
  bool is_zero() const { return num_.is_zero(); }
  int dim() const { return num_.dim(); }

  // Divides by (1 - e^{delta}), delta != 0 (formally; no cancellation).
  void push_denominator_factor(const Vec& delta);

  Fraction& operator*=(const Coeff& c);
  friend Fraction operator*(const Fraction& a, const Fraction& b);
  friend Fraction operator+(const Fraction& a, const Fraction& b);
  friend Fraction operator-(const Fraction& a, const Fraction& b);
  friend bool equal(const Fraction& a, const Fraction& b);

  // Clears the denominator by exact division; throws std::runtime_error if it
  // does not clear.
  Character cleared() const;

 private:
  Character num_;
  std::vector<Vec> den_;  // sorted, lex-positive factors
};

// A T-equivariant K-class of G/B by its restrictions to the W-indexed torus
// fixed points. Products are pointwise; the Euler characteristic is the
// weighted fixed-point sum with denominators prod_{alpha>0} (1 - e^{-v alpha}).
struct LocalizedClass {
  std::vector<Fraction> values;  // indexed by element id in canonical order
};

LocalizedClass line_class(const WeylGroup& wg, const Vec& lambda);
LocalizedClass point_class(const WeylGroup& wg, int v);

// Structure sheaf classes of Schubert varieties, built by the rank-one
// recursion from the point class:
//   (D~_i f)(v) = (f(v) - e^{-v alpha_i} f(v s_i)) / (1 - e^{-v alpha_i}),
// applied along a reduced word; restrictions stay denominator-free Laurent
// polynomials (exact division is asserted).
LocalizedClass schubert_class(const WeylGroup& wg, int w);
LocalizedClass schubert_class_along_word(const WeylGroup& wg, std::span<const int> word);
// S^-(x) = w0 S(w0 x): value at v is w0 . (schubert_class(w0 x) value at w0 v).
LocalizedClass opposite_schubert_class(const WeylGroup& wg, int x);
// [S^-(x)]^0 = sum_{z >= x} (-1)^{l(z) - l(x)} [S^-(z)].
LocalizedClass interior_opposite_class(const WeylGroup& wg, int x);

LocalizedClass product(const LocalizedClass& a, const LocalizedClass& b);
LocalizedClass add(const LocalizedClass& a, const LocalizedClass& b);
LocalizedClass negate(LocalizedClass a);
bool equal(const LocalizedClass& a, const LocalizedClass& b);

// chi(G/B, -): sum_v value(v) / prod_{alpha > 0} (1 - e^{-v alpha}), summed
// over a common denominator; the result must be denominator-free.
// Calibration: euler_char(line_class(lambda)) = D_{w0}(e^lambda) for all
// lambda, and euler_char(point_class(v)) = 1.
Character euler_char(const WeylGroup& wg, const LocalizedClass& c);

// Coefficients of the diagonal class of G/B x G/B on the basis
// [S(x)] x [S^-(y)]: (-1)^{l(y) - l(x)} on x <= y, else 0.
struct DiagonalClass {
  std::vector<std::vector<Coord>> coeffs;  // [x][y]
};
DiagonalClass diag_class(const WeylGroup& wg);

// Full pairing battery: euler_char([S(y)] . [S^-(x)]^0) = delta_{x,y} as an
// identity in Z[X].
bool verify_dual_basis(const WeylGroup& wg);

}  // namespace lsv
