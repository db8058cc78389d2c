#include "lsv/ktheory.hpp"

#include <algorithm>
#include <stdexcept>

namespace lsv {

namespace {

// Multiset helpers on sorted factor lists.
std::vector<Vec> multiset_max(const std::vector<Vec>& a, const std::vector<Vec>& b) {
  std::vector<Vec> out;
  size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (i == a.size()) {
      out.push_back(b[j++]);
    } else if (j == b.size()) {
      out.push_back(a[i++]);
    } else {
      int c = lex_compare(a[i], b[j]);
      if (c < 0) out.push_back(a[i++]);
      else if (c > 0) out.push_back(b[j++]);
      else { out.push_back(a[i]); ++i; ++j; }
    }
  }
  return out;
}

std::vector<Vec> multiset_difference(const std::vector<Vec>& a, const std::vector<Vec>& b) {
  std::vector<Vec> out;
  size_t i = 0, j = 0;
  while (i < a.size()) {
    if (j == b.size()) {
      out.push_back(a[i++]);
      continue;
    }
    int c = lex_compare(a[i], b[j]);
    if (c < 0) out.push_back(a[i++]);
    else if (c == 0) { ++i; ++j; }
    else ++j;
  }
  return out;
}

Character times_factors(Character f, const std::vector<Vec>& factors) {
  for (const Vec& g : factors) f = times_one_minus(f, g);
  return f;
}

}  // namespace

void Fraction::push_denominator_factor(const Vec& delta) {
  if (delta.isZero()) throw std::invalid_argument("zero denominator factor");
  Vec gamma = delta;
  if (lex_less(delta, Vec::Zero(delta.size()))) {
    // 1/(1 - e^{delta}) = -e^{-delta} / (1 - e^{-delta}).
    gamma = -delta;
    num_ = shifted(num_, gamma, -1);
  }
  den_.insert(std::upper_bound(den_.begin(), den_.end(), gamma, lex_less), gamma);
}

Fraction& Fraction::operator*=(const Coeff& c) {
  num_ *= c;
  return *this;
}

Fraction operator*(const Fraction& a, const Fraction& b) {
  Fraction out(a.num_ * b.num_);
  out.den_.reserve(a.den_.size() + b.den_.size());
  std::merge(a.den_.begin(), a.den_.end(), b.den_.begin(), b.den_.end(),
             std::back_inserter(out.den_), lex_less);
  return out;
}

Fraction operator+(const Fraction& a, const Fraction& b) {
  std::vector<Vec> common = multiset_max(a.den_, b.den_);
  Character num = times_factors(a.num_, multiset_difference(common, a.den_)) +
                  times_factors(b.num_, multiset_difference(common, b.den_));
  Fraction out(std::move(num));
  out.den_ = std::move(common);
  return out;
}

Fraction operator-(const Fraction& a, const Fraction& b) {
  Fraction nb = b;
  nb *= Coeff(-1);
  return a + nb;
}

bool equal(const Fraction& a, const Fraction& b) {
  return times_factors(a.num_, multiset_difference(b.den_, a.den_)) ==
         times_factors(b.num_, multiset_difference(a.den_, b.den_));
}

Character Fraction::cleared() const {
  Character out = num_;
  for (const Vec& g : den_) out = divide_by_one_minus(out, g);
  return out;
}

LocalizedClass line_class(const WeylGroup& wg, const Vec& lambda) {
  LocalizedClass c;
  for (int v = 0; v < wg.size(); ++v)
    c.values.emplace_back(Character::monomial(wg.act(v, lambda)));
  return c;
}

LocalizedClass point_class(const WeylGroup& wg, int v) {
  const RootSystem& rs = wg.root_system();
  LocalizedClass c;
  for (int u = 0; u < wg.size(); ++u) {
    if (u != v) {
      c.values.emplace_back(Character(rs.rank()));
      continue;
    }
    Character f = Character::monomial(rs.zero_weight());
    for (const Root& alpha : rs.positive_roots())
      f = times_one_minus(f, -wg.act(v, rs.weight_coords(alpha)));
    c.values.emplace_back(std::move(f));
  }
  return c;
}

namespace {

// One step of the structure-sheaf recursion; values must be denominator-free.
LocalizedClass demazure_tilde(const WeylGroup& wg, int i, const LocalizedClass& c) {
  const RootSystem& rs = wg.root_system();
  const Vec alpha = rs.simple_root(i);
  LocalizedClass out;
  for (int v = 0; v < wg.size(); ++v) {
    const Fraction& fv = c.values[v];
    const Fraction& fvs = c.values[wg.times_simple(v, i)];
    if (!fv.denominator_free() || !fvs.denominator_free())
      throw std::logic_error("demazure_tilde: expected denominator-free values");
    const Vec delta = -wg.act(v, alpha);
    Character num = fv.numerator() - shifted(fvs.numerator(), delta);
    out.values.emplace_back(divide_by_one_minus(num, delta));
  }
  return out;
}

}  // namespace

LocalizedClass schubert_class_along_word(const WeylGroup& wg, std::span<const int> word) {
  LocalizedClass c = point_class(wg, wg.identity());
  for (int i : word) c = demazure_tilde(wg, i, c);
  return c;
}

LocalizedClass schubert_class(const WeylGroup& wg, int w) {
  return schubert_class_along_word(wg, wg.word(w));
}

LocalizedClass opposite_schubert_class(const WeylGroup& wg, int x) {
  const Mat& w0 = wg.element(wg.longest()).matrix;
  LocalizedClass base = schubert_class(wg, wg.multiply(wg.longest(), x));
  LocalizedClass out;
  for (int v = 0; v < wg.size(); ++v) {
    const Fraction& f = base.values[wg.multiply(wg.longest(), v)];
    if (!f.denominator_free())
      throw std::logic_error("opposite_schubert_class: expected denominator-free values");
    out.values.emplace_back(w_act(w0, f.numerator()));
  }
  return out;
}

LocalizedClass interior_opposite_class(const WeylGroup& wg, int x) {
  LocalizedClass out;
  bool started = false;
  for (int z = 0; z < wg.size(); ++z) {
    if (!wg.bruhat_leq(x, z)) continue;
    LocalizedClass term = opposite_schubert_class(wg, z);
    if ((wg.length(z) - wg.length(x)) % 2 != 0) term = negate(std::move(term));
    out = started ? add(out, term) : std::move(term);
    started = true;
  }
  return out;
}

LocalizedClass product(const LocalizedClass& a, const LocalizedClass& b) {
  if (a.values.size() != b.values.size())
    throw std::invalid_argument("localized class size mismatch");
  LocalizedClass out;
  for (size_t v = 0; v < a.values.size(); ++v)
    out.values.push_back(a.values[v] * b.values[v]);
  return out;
}

LocalizedClass add(const LocalizedClass& a, const LocalizedClass& b) {
  if (a.values.size() != b.values.size())
    throw std::invalid_argument("localized class size mismatch");
  LocalizedClass out;
  for (size_t v = 0; v < a.values.size(); ++v)
    out.values.push_back(a.values[v] + b.values[v]);
  return out;
}

LocalizedClass negate(LocalizedClass a) {
  for (Fraction& f : a.values) f *= Coeff(-1);
  return a;
}

bool equal(const LocalizedClass& a, const LocalizedClass& b) {
  if (a.values.size() != b.values.size()) return false;
  for (size_t v = 0; v < a.values.size(); ++v)
    if (!equal(a.values[v], b.values[v])) return false;
  return true;
}

Character euler_char(const WeylGroup& wg, const LocalizedClass& c) {
  const RootSystem& rs = wg.root_system();
  if (static_cast<int>(c.values.size()) != wg.size())
    throw std::invalid_argument("localized class size mismatch");
  std::vector<Fraction> terms;
  terms.reserve(wg.size());
  for (int v = 0; v < wg.size(); ++v) {
    Fraction f = c.values[v];
    for (const Root& alpha : rs.positive_roots())
      f.push_denominator_factor(-wg.act(v, rs.weight_coords(alpha)));
    terms.push_back(std::move(f));
  }
  std::vector<Vec> common;
  for (const Fraction& f : terms) common = multiset_max(common, f.denominator());
  Character num(rs.rank());
  for (const Fraction& f : terms)
    num += times_factors(f.numerator(), multiset_difference(common, f.denominator()));
  for (const Vec& g : common) num = divide_by_one_minus(num, g);
  return num;
}

DiagonalClass diag_class(const WeylGroup& wg) {
  DiagonalClass d;
  d.coeffs.assign(wg.size(), std::vector<Coord>(wg.size(), 0));
  for (int x = 0; x < wg.size(); ++x)
    for (int y = 0; y < wg.size(); ++y)
      if (wg.bruhat_leq(x, y))
        d.coeffs[x][y] = ((wg.length(y) - wg.length(x)) % 2 == 0) ? 1 : -1;
  return d;
}

bool verify_dual_basis(const WeylGroup& wg) {
  const int r = wg.root_system().rank();
  std::vector<LocalizedClass> schubert, dual;
  for (int w = 0; w < wg.size(); ++w) {
    schubert.push_back(schubert_class(wg, w));
    dual.push_back(interior_opposite_class(wg, w));
  }
  const Character one = Character::monomial(Vec::Zero(r));
  const Character zero(r);
  for (int x = 0; x < wg.size(); ++x) {
    for (int y = 0; y < wg.size(); ++y) {
      Character pairing = euler_char(wg, product(schubert[y], dual[x]));
      if (pairing != (x == y ? one : zero)) return false;
    }
  }
  return true;
}

}  // namespace lsv
