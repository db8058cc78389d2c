#include "lsv/verify.hpp"

#include "lsv/demazure.hpp"
#include "lsv/ktheory.hpp"
#include "lsv/largeschubert.hpp"

#include <map>

namespace lsv {

std::vector<Vec> weight_box(int rank, Coord lo, Coord hi) {
  std::vector<Vec> out;
  Vec w = Vec::Constant(rank, lo);
  while (true) {
    out.push_back(w);
    int i = 0;
    while (i < rank && w[i] == hi) w[i++] = lo;
    if (i == rank) return out;
    ++w[i];
  }
}

namespace {

Json weight_entry(const char* name, const Vec& w) { return Json{{name, weight_to_json(w)}}; }

// c_char is the battery hot spot; memoize per run.
class CCharCache {
 public:
  explicit CCharCache(const WeylGroup& wg) : wg_(wg) {}
  const BiCharacter& get(const Vec& lambda) {
    auto it = cache_.find(lambda);
    if (it == cache_.end()) it = cache_.emplace(lambda, c_char(wg_, lambda)).first;
    return it->second;
  }

 private:
  const WeylGroup& wg_;
  std::map<Vec, BiCharacter, LexLess> cache_;
};

}  // namespace

BatteryResult battery_recip(const WeylGroup& wg, Coord box) {
  const RootSystem& rs = wg.root_system();
  const int r = rs.rank();
  CCharCache cc(wg);
  BatteryResult res;
  for (const Vec& lambda : weight_box(r, -box, box)) {
    const Vec minus_w0_lambda = -wg.act(wg.longest(), lambda);
    {
      BiCharacter lhs = cc.get(minus_w0_lambda);
      BiCharacter rhs = swap_slots(cc.get(lambda), r);
      Json detail = weight_entry("lambda", lambda);
      detail["identity"] = "swap";
      if (lhs != rhs) {
        detail["lhs"] = bicharacter_to_json(lhs, r);
        detail["rhs"] = bicharacter_to_json(rhs, r);
      }
      res.record(lhs == rhs, std::move(detail));
    }
    {
      BiCharacter lhs = invert_variables(cc.get(-lambda));
      BiCharacter rhs = BiCharacter::monomial(concat(rs.rho(), rs.rho()),
                                              rs.num_positive() % 2 == 0 ? 1 : -1) *
                        cc.get(lambda - rs.rho());
      Json detail = weight_entry("lambda", lambda);
      detail["identity"] = "serre";
      if (lhs != rhs) {
        detail["lhs"] = bicharacter_to_json(lhs, r);
        detail["rhs"] = bicharacter_to_json(rhs, r);
      }
      res.record(lhs == rhs, std::move(detail));
    }
  }
  return res;
}

BatteryResult battery_sep(const WeylGroup& wg, Coord box) {
  const int r = wg.root_system().rank();
  BatteryResult res;
  for (const Vec& lambda : weight_box(r, 0, box)) {
    for (const Vec& mu : weight_box(r, 0, box)) {
      SepResult s = verify_sep(wg, lambda, mu);
      Json detail = weight_entry("lambda", lambda);
      detail["mu"] = weight_to_json(mu);
      detail["convolution_ok"] = s.convolution_ok;
      detail["anti_diagonal_ok"] = s.anti_diagonal_ok;
      detail["dimension_ok"] = s.dimension_ok;
      res.record(s.ok(), std::move(detail));
    }
  }
  return res;
}

BatteryResult battery_vdk(const WeylGroup& wg, Coord box, int n_max) {
  const RootSystem& rs = wg.root_system();
  const Vec beta = rs.sum_of_simple_roots();
  BatteryResult res;
  for (const Vec& lambda : weight_box(rs.rank(), -box, box)) {
    auto layers = vdk_layers(rs, lambda, n_max);
    // Exactly-once coverage: the layer weights must enumerate, without
    // repetition, every dominant weight below lambda + n_max * beta in the
    // coset of lambda.
    std::map<Vec, int, LexLess> count;
    for (const auto& [n, mu] : layers) ++count[mu];
    std::map<Vec, int, LexLess> expected;
    for (const Vec& mu : dominant_weights_below(rs, lambda + Coord(n_max) * beta))
      expected[mu] = 1;
    bool pass = count == expected;
    Json detail = weight_entry("lambda", lambda);
    detail["n_max"] = n_max;
    if (!pass) detail["layers"] = layers_to_json(layers);
    res.record(pass, std::move(detail));
  }
  return res;
}

BatteryResult battery_cells(const WeylGroup& wg, Coord box) {
  const RootSystem& rs = wg.root_system();
  const int r = rs.rank();
  BatteryResult res;
  for (const Vec& lambda : weight_box(r, -box, box)) {
    BiCharacter c = c_char(wg, lambda);
    {
      BiCharacter z = z_euler(wg, wg.identity(), lambda);
      Json detail = weight_entry("lambda", lambda);
      detail["identity"] = "c_char=z_euler";
      if (c != z) {
        detail["lhs"] = bicharacter_to_json(c, r);
        detail["rhs"] = bicharacter_to_json(z, r);
      }
      res.record(c == z, std::move(detail));
    }
    if (!is_dominant(lambda)) continue;
    {
      BiCharacter m = m_char(wg, lambda);
      Json detail = weight_entry("mu", lambda);
      detail["identity"] = "m_char=c_char";
      if (m != c) {
        detail["lhs"] = bicharacter_to_json(m, r);
        detail["rhs"] = bicharacter_to_json(c, r);
      }
      res.record(m == c, std::move(detail));
    }
    for (int w = 0; w < wg.size(); ++w) {
      BiCharacter z = z_euler(wg, w, lambda);
      bool nonneg = true;
      for (const auto& [e, v] : z.terms())
        if (v < 0) nonneg = false;
      bool dom_ok = !z.is_zero() && nonneg;
      Json detail = weight_entry("mu", lambda);
      detail["identity"] = "dominant-sections-nonzero-nonnegative";
      detail["w"] = format_word(wg.word(w));
      res.record(dom_ok, std::move(detail));

      BiCharacter lhs = demazure_op_left(wg, w, c);
      Json detail2 = weight_entry("lambda", lambda);
      detail2["identity"] = "z_euler=demazure_left(c_char)";
      detail2["w"] = format_word(wg.word(w));
      if (lhs != z) {
        detail2["lhs"] = bicharacter_to_json(lhs, r);
        detail2["rhs"] = bicharacter_to_json(z, r);
      }
      res.record(lhs == z, std::move(detail2));
    }
    {
      // Restriction to Y: D_{w0} in the left slot factorizes.
      BiCharacter lhs = demazure_op_left(wg, wg.longest(), c);
      BiCharacter rhs = external_product(
          schubert_euler(wg, wg.longest(), lambda),
          schubert_euler(wg, wg.longest(), -wg.act(wg.longest(), lambda)));
      Json detail = weight_entry("mu", lambda);
      detail["identity"] = "full-flag-restriction";
      res.record(lhs == rhs, std::move(detail));
    }
  }
  return res;
}

BatteryResult battery_mobius(const WeylGroup& wg) {
  auto inv = mobius_by_zeta_inversion(wg);
  BatteryResult res;
  for (int y = 0; y < wg.size(); ++y) {
    for (int w = 0; w < wg.size(); ++w) {
      bool pass = inv[y][w] == wg.mobius(y, w);
      Json detail;
      if (!pass) {
        detail["y"] = format_word(wg.word(y));
        detail["w"] = format_word(wg.word(w));
        detail["closed_form"] = wg.mobius(y, w);
        detail["zeta_inversion"] = inv[y][w];
      }
      res.record(pass, std::move(detail));
    }
  }
  return res;
}

BatteryResult battery_braid(const WeylGroup& wg, Coord box) {
  const RootSystem& rs = wg.root_system();
  BatteryResult res;
  const auto lambdas = weight_box(rs.rank(), -box, box);
  for (int w = 0; w < wg.size(); ++w) {
    const auto words = wg.reduced_words(w);
    for (const Vec& lambda : lambdas) {
      const Character f = Character::monomial(lambda);
      const Character reference = demazure_op(wg, w, f);
      bool pass = true;
      for (const auto& word : words)
        if (demazure_op_word(rs, word, f) != reference) pass = false;
      Json detail = weight_entry("lambda", lambda);
      detail["identity"] = "word-independence";
      detail["w"] = format_word(wg.word(w));
      res.record(pass, std::move(detail));
    }
  }
  for (int i = 0; i < rs.rank(); ++i) {
    for (const Vec& lambda : lambdas) {
      Character once = demazure_step(rs, i, Character::monomial(lambda));
      bool pass = demazure_step(rs, i, once) == once;
      Json detail = weight_entry("lambda", lambda);
      detail["identity"] = "idempotence";
      detail["i"] = i + 1;
      res.record(pass, std::move(detail));
    }
  }
  return res;
}

BatteryResult battery_dual_basis(const WeylGroup& wg) {
  const int r = wg.root_system().rank();
  std::vector<LocalizedClass> schubert, dual;
  for (int w = 0; w < wg.size(); ++w) {
    schubert.push_back(schubert_class(wg, w));
    dual.push_back(interior_opposite_class(wg, w));
  }
  const Character one = Character::monomial(Vec::Zero(r));
  const Character zero(r);
  BatteryResult res;
  for (int x = 0; x < wg.size(); ++x) {
    for (int y = 0; y < wg.size(); ++y) {
      Character pairing = euler_char(wg, product(schubert[y], dual[x]));
      bool pass = pairing == (x == y ? one : zero);
      Json detail;
      detail["x"] = format_word(wg.word(x));
      detail["y"] = format_word(wg.word(y));
      if (!pass) detail["pairing"] = character_to_json(pairing);
      res.record(pass, std::move(detail));
    }
  }
  return res;
}

BatteryResult battery_diag_pairing(const WeylGroup& wg, Coord box) {
  const RootSystem& rs = wg.root_system();
  const int r = rs.rank();
  std::vector<LocalizedClass> schubert, opposite;
  for (int w = 0; w < wg.size(); ++w) {
    schubert.push_back(schubert_class(wg, w));
    opposite.push_back(opposite_schubert_class(wg, w));
  }
  BatteryResult res;
  const auto dominants = weight_box(r, 0, box);
  for (const Vec& lambda : dominants) {
    std::vector<Character> left;
    for (int x = 0; x < wg.size(); ++x)
      left.push_back(euler_char(wg, product(schubert[x], line_class(wg, lambda))));
    for (const Vec& mu : dominants) {
      std::vector<Character> right;
      for (int y = 0; y < wg.size(); ++y)
        right.push_back(euler_char(wg, product(opposite[y], line_class(wg, mu))));
      Character total(r);
      for (int x = 0; x < wg.size(); ++x) {
        for (int y = 0; y < wg.size(); ++y) {
          if (!wg.bruhat_leq(x, y)) continue;
          Character term = left[x] * right[y];
          if ((wg.length(y) - wg.length(x)) % 2 != 0) term = -std::move(term);
          total += term;
        }
      }
      Character expected = schubert_euler(wg, wg.longest(), lambda + mu);
      bool pass = total == expected;
      Json detail = weight_entry("lambda", lambda);
      detail["mu"] = weight_to_json(mu);
      if (!pass) {
        detail["lhs"] = character_to_json(total);
        detail["rhs"] = character_to_json(expected);
      }
      res.record(pass, std::move(detail));
    }
  }
  return res;
}

}  // namespace lsv
