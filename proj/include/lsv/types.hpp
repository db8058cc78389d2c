#pragma once

#include <Eigen/Core>
#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <initializer_list>

namespace lsv {

using Coord = std::int64_t;
using Coeff = boost::multiprecision::cpp_int;

// Lattice vectors and matrices. Weights are stored in fundamental-weight
// coordinates throughout, so <lambda, alpha_i^vee> is just lambda[i].
using Vec = Eigen::Matrix<Coord, Eigen::Dynamic, 1>;
using Mat = Eigen::Matrix<Coord, Eigen::Dynamic, Eigen::Dynamic>;

inline int lex_compare(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  for (Eigen::Index i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  return 0;
}

inline bool lex_less(const Vec& a, const Vec& b) { return lex_compare(a, b) < 0; }

struct LexLess {
  bool operator()(const Vec& a, const Vec& b) const { return lex_less(a, b); }
};

inline Vec vec_of(std::initializer_list<Coord> xs) {
  Vec v(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index i = 0;
  for (Coord x : xs) v[i++] = x;
  return v;
}

inline Vec concat(const Vec& a, const Vec& b) {
  Vec r(a.size() + b.size());
  r << a, b;
  return r;
}

}  // namespace lsv
