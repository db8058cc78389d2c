#pragma once

#include "lsv/types.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace lsv {

// A root in the simple-root basis together with its coroot in the
// simple-coroot basis. Since <omega_i, alpha_j^vee> = delta_ij, the pairing of
// a weight lambda (fundamental coordinates) with this coroot is
// sum_i lambda[i] * coroot_coords[i].
struct Root {
  Vec root_coords;
  Vec coroot_coords;
  bool is_positive = true;
};

// Cartan data for one of the supported finite types A1, A2, A3, B2, B3, C3,
// G2. Convention: cartan(i, j) = <alpha_j, alpha_i^vee>, so the simple root
// alpha_j in fundamental-weight coordinates is column j of the Cartan matrix.
class RootSystem {
 public:
  // Builds from a type token such as "A2" (letter + rank).
  static RootSystem build(std::string_view type_label);
  static RootSystem build(char series, int rank);

  const std::string& label() const { return label_; }
  char series() const { return series_; }
  int rank() const { return rank_; }
  const Mat& cartan() const { return cartan_; }
  const std::vector<Root>& positive_roots() const { return positive_roots_; }
  int num_positive() const { return static_cast<int>(positive_roots_.size()); }
  const Vec& rho() const { return rho_; }

  Vec zero_weight() const { return Vec::Zero(rank_); }
  // alpha_i in fundamental-weight coordinates (0-based i).
  Vec simple_root(int i) const { return cartan_.col(i); }
  // beta = alpha_1 + ... + alpha_r in fundamental-weight coordinates.
  Vec sum_of_simple_roots() const { return cartan_ * Vec::Ones(rank_); }
  // Weight coordinates of an arbitrary root.
  Vec weight_coords(const Root& root) const { return cartan_ * root.root_coords; }
  // <lambda, alpha^vee> for the given root.
  Coord pairing(const Vec& lambda, const Root& root) const {
    return lambda.dot(root.coroot_coords);
  }
  // Matrix of the simple reflection s_i on fundamental-weight coordinates:
  // lambda -> lambda - lambda[i] * alpha_i.
  Mat simple_reflection_matrix(int i) const;

 private:
  RootSystem() = default;

  std::string label_;
  char series_ = 0;
  int rank_ = 0;
  Mat cartan_;
  std::vector<Root> positive_roots_;
  Vec rho_;
};

inline bool is_dominant(const Vec& lambda) { return (lambda.array() >= 0).all(); }
inline bool is_regular_dominant(const Vec& lambda) { return (lambda.array() > 0).all(); }

// Exact solution n of cartan * n = delta over the integers, if one exists.
// delta is in fundamental-weight coordinates, n in simple-root coordinates.
std::optional<Vec> root_coordinates(const RootSystem& rs, const Vec& delta);

// Dominance order: lo <= hi iff hi - lo is a nonnegative integer combination
// of simple roots.
bool dominance_leq(const RootSystem& rs, const Vec& lo, const Vec& hi);

// The finite set { mu dominant : mu <= lambda }, sorted lexicographically.
std::vector<Vec> dominant_weights_below(const RootSystem& rs, const Vec& lambda);

struct WeightPredicates {
  bool is_dominant = false;
  bool is_regular_dominant = false;
  bool is_effective = false;
  bool in_root_lattice = false;
};

// is_effective: lambda lies in the monoid generated by the simple roots and
// the fundamental weights, i.e. lambda - sum m_i alpha_i is dominant for some
// integers m_i >= 0.
WeightPredicates weight_predicates(const RootSystem& rs, const Vec& lambda);

}  // namespace lsv
