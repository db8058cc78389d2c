#include "lsv/rootdata.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <stdexcept>

namespace lsv {

namespace {

Mat cartan_matrix(char series, int rank) {
  auto bad = [&] {
    throw std::invalid_argument("unsupported root system type " +
                                std::string(1, series) + std::to_string(rank));
  };
  Mat c;
  switch (series) {
    case 'A':
      if (rank < 1 || rank > 3) bad();
      c = Mat::Zero(rank, rank);
      for (int i = 0; i < rank; ++i) {
        c(i, i) = 2;
        if (i + 1 < rank) c(i, i + 1) = c(i + 1, i) = -1;
      }
      return c;
    case 'B':
      if (rank != 2 && rank != 3) bad();
      c = Mat::Zero(rank, rank);
      for (int i = 0; i < rank; ++i) {
        c(i, i) = 2;
        if (i + 1 < rank) c(i, i + 1) = c(i + 1, i) = -1;
      }
      // <alpha_{r-1}, alpha_r^vee> = -2: the last simple root is short.
      c(rank - 1, rank - 2) = -2;
      return c;
    case 'C':
      if (rank != 3) bad();
      c = Mat::Zero(rank, rank);
      for (int i = 0; i < rank; ++i) {
        c(i, i) = 2;
        if (i + 1 < rank) c(i, i + 1) = c(i + 1, i) = -1;
      }
      c(rank - 2, rank - 1) = -2;
      return c;
    case 'G':
      if (rank != 2) bad();
      c = Mat::Zero(2, 2);
      c << 2, -1, -3, 2;
      return c;
    default:
      bad();
  }
  return c;  // unreachable
}

// Height in the simple-root basis; positive roots are sorted by it.
Coord height(const Vec& root_coords) { return root_coords.sum(); }

}  // namespace

RootSystem RootSystem::build(std::string_view type_label) {
  if (type_label.size() < 2) {
    throw std::invalid_argument("bad root system token '" + std::string(type_label) + "'");
  }
  char series = type_label[0];
  int rank = 0;
  for (size_t i = 1; i < type_label.size(); ++i) {
    char ch = type_label[i];
    if (ch < '0' || ch > '9') {
      throw std::invalid_argument("bad root system token '" + std::string(type_label) + "'");
    }
    rank = rank * 10 + (ch - '0');
  }
  return build(series, rank);
}

RootSystem RootSystem::build(char series, int rank) {
  RootSystem rs;
  rs.series_ = series;
  rs.rank_ = rank;
  rs.label_ = std::string(1, series) + std::to_string(rank);
  rs.cartan_ = cartan_matrix(series, rank);
  rs.rho_ = Vec::Ones(rank);

  // Positive roots by closure: start from the simple roots and apply simple
  // reflections, keeping images with all-nonnegative simple-root coordinates.
  // Coroots are carried along: s_i acts on root coordinates m by
  // m -> m - (C m)_i e_i and on coroot coordinates n by n -> n - (C^T n)_i e_i.
  std::map<std::vector<Coord>, Vec> seen;  // root coords -> coroot coords
  std::deque<std::pair<Vec, Vec>> queue;
  for (int j = 0; j < rank; ++j) {
    Vec m = Vec::Zero(rank);
    m[j] = 1;
    Vec n = Vec::Zero(rank);
    n[j] = 1;
    seen.emplace(std::vector<Coord>(m.data(), m.data() + rank), n);
    queue.emplace_back(m, n);
  }
  while (!queue.empty()) {
    auto [m, n] = queue.front();
    queue.pop_front();
    for (int i = 0; i < rank; ++i) {
      Vec m2 = m;
      m2[i] -= rs.cartan_.row(i).dot(m);
      if ((m2.array() < 0).any()) continue;
      std::vector<Coord> key(m2.data(), m2.data() + rank);
      if (seen.count(key)) continue;
      Vec n2 = n;
      n2[i] -= rs.cartan_.col(i).dot(n);
      seen.emplace(std::move(key), n2);
      queue.emplace_back(m2, n2);
    }
  }
  for (const auto& [key, coroot] : seen) {
    Root r;
    r.root_coords = Eigen::Map<const Vec>(key.data(), rank);
    r.coroot_coords = coroot;
    r.is_positive = true;
    rs.positive_roots_.push_back(std::move(r));
  }
  std::sort(rs.positive_roots_.begin(), rs.positive_roots_.end(),
            [](const Root& a, const Root& b) {
              Coord ha = height(a.root_coords), hb = height(b.root_coords);
              if (ha != hb) return ha < hb;
              return lex_less(a.root_coords, b.root_coords);
            });
  return rs;
}

Mat RootSystem::simple_reflection_matrix(int i) const {
  // I - c_i e_i^T with c_i = cartan column i: lambda -> lambda - lambda[i] alpha_i.
  Mat m = Mat::Identity(rank_, rank_);
  m.col(i) -= cartan_.col(i);
  return m;
}

namespace {

Coord det_small(const Mat& m) {
  switch (m.rows()) {
    case 1:
      return m(0, 0);
    case 2:
      return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
    case 3:
      return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
             m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
             m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
    default:
      throw std::logic_error("determinant: rank > 3 not supported");
  }
}

}  // namespace

std::optional<Vec> root_coordinates(const RootSystem& rs, const Vec& delta) {
  // Cramer over the integers: n_i = det(C with column i -> delta) / det(C).
  const Mat& c = rs.cartan();
  Coord d = det_small(c);
  Vec n(rs.rank());
  for (int i = 0; i < rs.rank(); ++i) {
    Mat ci = c;
    ci.col(i) = delta;
    Coord di = det_small(ci);
    if (di % d != 0) return std::nullopt;
    n[i] = di / d;
  }
  return n;
}

bool dominance_leq(const RootSystem& rs, const Vec& lo, const Vec& hi) {
  auto n = root_coordinates(rs, hi - lo);
  return n.has_value() && (n->array() >= 0).all();
}

std::vector<Vec> dominant_weights_below(const RootSystem& rs, const Vec& lambda) {
  // Breadth-first subtraction of simple roots. The depth is bounded because
  // subtracting a simple root lowers the pairing with rho^vee by exactly 1,
  // and that pairing is nonnegative on dominant weights:
  //   2 * depth <= sum_{alpha > 0} <lambda, alpha^vee>.
  Coord bound = 0;
  for (const Root& r : rs.positive_roots()) bound += rs.pairing(lambda, r);

  std::vector<Vec> result;
  std::set<std::vector<Coord>> visited;
  std::deque<std::pair<Vec, Coord>> queue;
  auto key_of = [&](const Vec& v) {
    return std::vector<Coord>(v.data(), v.data() + rs.rank());
  };
  visited.insert(key_of(lambda));
  queue.emplace_back(lambda, 0);
  while (!queue.empty()) {
    auto [mu, depth] = queue.front();
    queue.pop_front();
    if (is_dominant(mu)) result.push_back(mu);
    if (2 * (depth + 1) > bound) continue;
    for (int i = 0; i < rs.rank(); ++i) {
      Vec nu = mu - rs.simple_root(i);
      auto key = key_of(nu);
      if (visited.insert(std::move(key)).second) queue.emplace_back(nu, depth + 1);
    }
  }
  std::sort(result.begin(), result.end(), lex_less);
  return result;
}

WeightPredicates weight_predicates(const RootSystem& rs, const Vec& lambda) {
  WeightPredicates p;
  p.is_dominant = is_dominant(lambda);
  p.is_regular_dominant = is_regular_dominant(lambda);
  p.is_effective = !dominant_weights_below(rs, lambda).empty();
  p.in_root_lattice = root_coordinates(rs, lambda).has_value();
  return p;
}

}  // namespace lsv
