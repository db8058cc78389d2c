#pragma once

#include "lsv/rootdata.hpp"
#include "lsv/types.hpp"

#include <span>
#include <vector>

namespace lsv {

// One Weyl group element: its action on fundamental-weight coordinates, its
// length, and one canonical reduced word (the lexicographically smallest one;
// generator indices are 0-based internally, 1-based at the serialization
// boundary).
struct WeylElement {
  Mat matrix;
  int length = 0;
  std::vector<int> word;
};

// The full group, generated once and immutable afterwards. Elements are
// indexed 0..|W|-1 in the canonical order (length, then word lexicographically);
// index 0 is the identity, the last index is the longest element.
class WeylGroup {
 public:
  explicit WeylGroup(RootSystem rs);
  // Reconstructs a group from cached element data (canonical order, 0-based
  // words) and a precomputed Bruhat matrix. Multiplication data is rebuilt.
  WeylGroup(RootSystem rs, std::vector<WeylElement> elements,
            std::vector<std::vector<bool>> bruhat);

  const RootSystem& root_system() const { return rs_; }
  int size() const { return static_cast<int>(elements_.size()); }
  int identity() const { return 0; }
  int longest() const { return size() - 1; }
  int simple_reflection(int i) const { return simple_ids_[i]; }

  const WeylElement& element(int w) const { return elements_[w]; }
  int length(int w) const { return elements_[w].length; }
  const std::vector<int>& word(int w) const { return elements_[w].word; }
  Vec act(int w, const Vec& lambda) const { return elements_[w].matrix * lambda; }

  int multiply(int a, int b) const { return mult_[a][b]; }
  int inverse(int w) const { return inverse_[w]; }
  int times_simple(int w, int i) const { return mult_[w][simple_ids_[i]]; }
  int simple_times(int i, int w) const { return mult_[simple_ids_[i]][w]; }
  // Plain group product along a word of 0-based generator indices.
  int element_from_word(std::span<const int> word) const;

  bool bruhat_leq(int y, int w) const { return bruhat_[y][w]; }
  const std::vector<std::vector<bool>>& bruhat_matrix() const { return bruhat_; }
  // Moebius function of the Bruhat order, closed form:
  // (-1)^{l(w)-l(y)} if y <= w, else 0.
  int mobius(int y, int w) const;

  // 0-Hecke product: fold the word of z into y by w -> w s_i when the length
  // goes up, w -> w otherwise. Independent of the word chosen for z.
  int demazure_product(int y, int z) const;

  // All reduced words of w (each starts with a left descent).
  std::vector<std::vector<int>> reduced_words(int w) const;

  // The unique dominant weight in the orbit W.nu and the unique shortest w
  // with nu = w . mu.
  struct CosetData {
    int w_min = 0;
    Vec dominant_rep;
  };
  CosetData minimal_coset_data(const Vec& nu) const;
  std::vector<int> stabilizer(const Vec& mu) const;
  bool is_min_in_coset(int x, const Vec& mu) const;
  bool is_max_in_coset(int x, const Vec& mu) const;

 private:
  void index_and_close();

  RootSystem rs_;
  std::vector<WeylElement> elements_;
  std::vector<int> simple_ids_;
  std::vector<std::vector<int>> mult_;
  std::vector<int> inverse_;
  std::vector<std::vector<bool>> bruhat_;
};

// Moebius values computed by inverting the zeta matrix of the Bruhat order
// over the integers (recursion mu(y,w) = -sum_{y<=z<w} mu(y,z)); the second
// route behind `verify mobius`.
std::vector<std::vector<Coord>> mobius_by_zeta_inversion(const WeylGroup& wg);

}  // namespace lsv
