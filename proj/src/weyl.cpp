#include "lsv/weyl.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace lsv {

namespace {

std::vector<Coord> matrix_key(const Mat& m) {
  return std::vector<Coord>(m.data(), m.data() + m.size());
}

}  // namespace

WeylGroup::WeylGroup(RootSystem rs) : rs_(std::move(rs)) {
  const int r = rs_.rank();
  std::vector<Mat> gens(r);
  for (int i = 0; i < r; ++i) gens[i] = rs_.simple_reflection_matrix(i);

  // Breadth-first closure. Within a level the frontier is already sorted by
  // canonical word, and extending by ascending generator index emits candidate
  // words in lexicographic order, so first discovery assigns each element its
  // lexicographically smallest reduced word and the discovery order is the
  // canonical (length, word) order.
  std::map<std::vector<Coord>, int> index;
  WeylElement id;
  id.matrix = Mat::Identity(r, r);
  elements_.push_back(id);
  index.emplace(matrix_key(id.matrix), 0);
  std::vector<int> frontier{0};
  while (!frontier.empty()) {
    std::vector<int> next;
    for (int w : frontier) {
      for (int i = 0; i < r; ++i) {
        Mat m = elements_[w].matrix * gens[i];
        auto key = matrix_key(m);
        if (index.count(key)) continue;
        WeylElement e;
        e.matrix = std::move(m);
        e.length = elements_[w].length + 1;
        e.word = elements_[w].word;
        e.word.push_back(i);
        index.emplace(std::move(key), static_cast<int>(elements_.size()));
        next.push_back(static_cast<int>(elements_.size()));
        elements_.push_back(std::move(e));
      }
    }
    frontier = std::move(next);
  }

  index_and_close();

  // Fill the Bruhat matrix by the lift/descent recursion.
  const int n = size();
  bruhat_.assign(n, std::vector<bool>(n, false));
  auto leq = [&](auto&& self, int y, int w) -> bool {
    if (length(w) == 0) return y == identity();
    int i = 0;
    while (length(simple_times(i, w)) >= length(w)) ++i;
    int sw = simple_times(i, w);
    int sy = simple_times(i, y);
    if (length(sy) < length(y)) return self(self, sy, sw);
    return self(self, y, sw);
  };
  for (int y = 0; y < n; ++y)
    for (int w = 0; w < n; ++w) bruhat_[y][w] = leq(leq, y, w);
}

WeylGroup::WeylGroup(RootSystem rs, std::vector<WeylElement> elements,
                     std::vector<std::vector<bool>> bruhat)
    : rs_(std::move(rs)), elements_(std::move(elements)), bruhat_(std::move(bruhat)) {
  if (elements_.empty() || bruhat_.size() != elements_.size()) {
    throw std::invalid_argument("weyl cache: inconsistent sizes");
  }
  index_and_close();
}

void WeylGroup::index_and_close() {
  const int n = size();
  const int r = rs_.rank();
  std::map<std::vector<Coord>, int> index;
  for (int w = 0; w < n; ++w) index.emplace(matrix_key(elements_[w].matrix), w);
  if (static_cast<int>(index.size()) != n) {
    throw std::invalid_argument("weyl cache: duplicate elements");
  }
  simple_ids_.assign(r, -1);
  for (int i = 0; i < r; ++i) {
    auto it = index.find(matrix_key(rs_.simple_reflection_matrix(i)));
    if (it == index.end()) throw std::invalid_argument("weyl cache: missing generator");
    simple_ids_[i] = it->second;
  }
  mult_.assign(n, std::vector<int>(n, 0));
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      auto it = index.find(matrix_key(elements_[a].matrix * elements_[b].matrix));
      if (it == index.end()) throw std::invalid_argument("weyl cache: not closed");
      mult_[a][b] = it->second;
    }
  }
  inverse_.assign(n, 0);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (mult_[a][b] == identity()) inverse_[a] = b;
}

int WeylGroup::element_from_word(std::span<const int> word) const {
  int w = identity();
  for (int i : word) w = times_simple(w, i);
  return w;
}

int WeylGroup::mobius(int y, int w) const {
  if (!bruhat_[y][w]) return 0;
  return ((length(w) - length(y)) % 2 == 0) ? 1 : -1;
}

int WeylGroup::demazure_product(int y, int z) const {
  int w = y;
  for (int i : word(z)) {
    int ws = times_simple(w, i);
    if (length(ws) > length(w)) w = ws;
  }
  return w;
}

std::vector<std::vector<int>> WeylGroup::reduced_words(int w) const {
  if (length(w) == 0) return {{}};
  std::vector<std::vector<int>> out;
  for (int i = 0; i < rs_.rank(); ++i) {
    int sw = simple_times(i, w);
    if (length(sw) >= length(w)) continue;
    for (auto& tail : reduced_words(sw)) {
      std::vector<int> word{i};
      word.insert(word.end(), tail.begin(), tail.end());
      out.push_back(std::move(word));
    }
  }
  return out;
}

WeylGroup::CosetData WeylGroup::minimal_coset_data(const Vec& nu) const {
  Vec mu = nu;
  // Reflect a negative coordinate until dominant; each step raises the
  // pairing with rho^vee, so this terminates at the dominant orbit element.
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i = 0; i < rs_.rank(); ++i) {
      if (mu[i] < 0) {
        mu -= mu[i] * rs_.simple_root(i);
        changed = true;
      }
    }
  }
  CosetData data;
  data.dominant_rep = mu;
  for (int w = 0; w < size(); ++w) {
    if (act(w, mu) == nu) {
      data.w_min = w;  // canonical order scans by length first
      return data;
    }
  }
  throw std::logic_error("orbit scan failed");
}

std::vector<int> WeylGroup::stabilizer(const Vec& mu) const {
  std::vector<int> stab;
  for (int w = 0; w < size(); ++w)
    if (act(w, mu) == mu) stab.push_back(w);
  return stab;
}

bool WeylGroup::is_min_in_coset(int x, const Vec& mu) const {
  for (int u : stabilizer(mu))
    if (length(multiply(x, u)) < length(x)) return false;
  return true;
}

bool WeylGroup::is_max_in_coset(int x, const Vec& mu) const {
  for (int u : stabilizer(mu))
    if (length(multiply(x, u)) > length(x)) return false;
  return true;
}

std::vector<std::vector<Coord>> mobius_by_zeta_inversion(const WeylGroup& wg) {
  const int n = wg.size();
  std::vector<std::vector<Coord>> mu(n, std::vector<Coord>(n, 0));
  for (int y = 0; y < n; ++y) {
    mu[y][y] = 1;
    // Canonical order refines length, hence the Bruhat order: iterate upward.
    for (int w = y + 1; w < n; ++w) {
      if (!wg.bruhat_leq(y, w)) continue;
      Coord s = 0;
      for (int z = y; z < w; ++z)
        if (wg.bruhat_leq(y, z) && wg.bruhat_leq(z, w)) s += mu[y][z];
      mu[y][w] = -s;
    }
  }
  return mu;
}

}  // namespace lsv
