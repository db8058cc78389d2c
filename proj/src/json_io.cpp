#include "lsv/json_io.hpp"

#include <charconv>
#include <stdexcept>

namespace lsv {

namespace {

std::vector<std::string_view> split_csv(std::string_view text) {
  std::vector<std::string_view> parts;
  if (text.empty()) return parts;
  size_t start = 0;
  while (true) {
    size_t pos = text.find(',', start);
    if (pos == std::string_view::npos) {
      parts.push_back(text.substr(start));
      return parts;
    }
    parts.push_back(text.substr(start, pos - start));
    start = pos + 1;
  }
}

Coord parse_int(std::string_view token) {
  Coord value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size())
    throw std::invalid_argument("bad integer token '" + std::string(token) + "'");
  return value;
}

}  // namespace

Vec parse_weight_csv(std::string_view text, int rank) {
  auto parts = split_csv(text);
  if (static_cast<int>(parts.size()) != rank)
    throw std::invalid_argument("weight needs exactly " + std::to_string(rank) +
                                " coordinates, got '" + std::string(text) + "'");
  Vec w(rank);
  for (int i = 0; i < rank; ++i) w[i] = parse_int(parts[i]);
  return w;
}

std::vector<int> parse_word_csv(std::string_view text, int rank) {
  std::vector<int> word;
  for (auto part : split_csv(text)) {
    Coord g = parse_int(part);
    if (g < 1 || g > rank)
      throw std::invalid_argument("generator index out of range: " + std::string(part));
    word.push_back(static_cast<int>(g) - 1);
  }
  return word;
}

std::string format_word(const std::vector<int>& word) {
  std::string out;
  for (size_t i = 0; i < word.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(word[i] + 1);
  }
  return out;
}

Json weight_to_json(const Vec& w) {
  Json j = Json::array();
  for (Eigen::Index i = 0; i < w.size(); ++i) j.push_back(w[i]);
  return j;
}

Vec weight_from_json(const Json& j) {
  Vec w(static_cast<Eigen::Index>(j.size()));
  Eigen::Index i = 0;
  for (const auto& x : j) w[i++] = x.get<Coord>();
  return w;
}

Json character_to_json(const Character& c) {
  Json j = Json::array();
  for (const auto& [e, v] : c.terms())
    j.push_back(Json{{"wt", weight_to_json(e)}, {"c", v.str()}});
  return j;
}

Character character_from_json(const Json& j, int dim) {
  if (!j.is_array()) throw std::invalid_argument("character JSON must be an array");
  if (j.empty() && dim < 0)
    throw std::invalid_argument("cannot infer dimension of empty character");
  if (dim < 0) dim = static_cast<int>(j.front().at("wt").size());
  Character c(dim);
  for (const auto& term : j)
    c.add(weight_from_json(term.at("wt")), Coeff(term.at("c").get<std::string>()));
  return c;
}

Json bicharacter_to_json(const BiCharacter& c, int rank) {
  if (c.dim() != 2 * rank)
    throw std::invalid_argument("bicharacter_to_json: dimension mismatch");
  Json j = Json::array();
  for (const auto& [e, v] : c.terms()) {
    j.push_back(Json{{"wt1", weight_to_json(e.head(rank))},
                     {"wt2", weight_to_json(e.tail(rank))},
                     {"c", v.str()}});
  }
  return j;
}

BiCharacter bicharacter_from_json(const Json& j, int rank) {
  if (!j.is_array()) throw std::invalid_argument("bicharacter JSON must be an array");
  if (j.empty() && rank < 0)
    throw std::invalid_argument("cannot infer dimension of empty bicharacter");
  if (rank < 0) rank = static_cast<int>(j.front().at("wt1").size());
  BiCharacter c(2 * rank);
  for (const auto& term : j) {
    Vec e = concat(weight_from_json(term.at("wt1")), weight_from_json(term.at("wt2")));
    c.add(e, Coeff(term.at("c").get<std::string>()));
  }
  return c;
}

Json root_system_to_json(const RootSystem& rs) {
  Json cartan = Json::array();
  for (int i = 0; i < rs.rank(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < rs.rank(); ++j) row.push_back(rs.cartan()(i, j));
    cartan.push_back(row);
  }
  Json roots = Json::array();
  for (const Root& r : rs.positive_roots()) {
    roots.push_back(Json{{"root", weight_to_json(r.root_coords)},
                         {"coroot", weight_to_json(r.coroot_coords)},
                         {"weight", weight_to_json(rs.weight_coords(r))}});
  }
  return Json{{"type", rs.label()},
              {"rank", rs.rank()},
              {"cartan", cartan},
              {"n_positive", rs.num_positive()},
              {"rho", weight_to_json(rs.rho())},
              {"positive_roots", roots}};
}

Json layers_to_json(const std::vector<std::pair<int, Vec>>& layers) {
  Json j = Json::array();
  for (const auto& [n, mu] : layers) j.push_back(Json{{"n", n}, {"mu", weight_to_json(mu)}});
  return j;
}

Json diag_class_to_json(const WeylGroup& wg, const DiagonalClass& d) {
  Json order = Json::array();
  for (int w = 0; w < wg.size(); ++w) order.push_back(format_word(wg.word(w)));
  Json entries = Json::array();
  for (const auto& row : d.coeffs) {
    Json r = Json::array();
    for (Coord x : row) r.push_back(x);
    entries.push_back(r);
  }
  return Json{{"type", wg.root_system().label()},
              {"rows", order},
              {"cols", order},
              {"entries", entries}};
}

Json weyl_group_to_json(const WeylGroup& wg) {
  Json elements = Json::array();
  for (int w = 0; w < wg.size(); ++w) {
    Json matrix = Json::array();
    const Mat& m = wg.element(w).matrix;
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      Json row = Json::array();
      for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
      matrix.push_back(row);
    }
    elements.push_back(Json{{"word", format_word(wg.word(w))},
                            {"length", wg.length(w)},
                            {"matrix", matrix}});
  }
  Json bruhat = Json::array();
  for (int y = 0; y < wg.size(); ++y) {
    std::string row(wg.size(), '0');
    for (int w = 0; w < wg.size(); ++w)
      if (wg.bruhat_leq(y, w)) row[w] = '1';
    bruhat.push_back(row);
  }
  return Json{{"type", wg.root_system().label()},
              {"order", wg.size()},
              {"elements", elements},
              {"bruhat", bruhat}};
}

WeylGroup weyl_group_from_json(const Json& j) {
  RootSystem rs = RootSystem::build(j.at("type").get<std::string>());
  const int rank = rs.rank();
  std::vector<WeylElement> elements;
  for (const auto& ej : j.at("elements")) {
    WeylElement e;
    e.length = ej.at("length").get<int>();
    e.word = parse_word_csv(ej.at("word").get<std::string>(), rank);
    const auto& mj = ej.at("matrix");
    e.matrix = Mat(rank, rank);
    for (int r = 0; r < rank; ++r)
      for (int c = 0; c < rank; ++c) e.matrix(r, c) = mj.at(r).at(c).get<Coord>();
    elements.push_back(std::move(e));
  }
  std::vector<std::vector<bool>> bruhat;
  for (const auto& rj : j.at("bruhat")) {
    const auto row = rj.get<std::string>();
    std::vector<bool> r(row.size());
    for (size_t i = 0; i < row.size(); ++i) r[i] = row[i] == '1';
    bruhat.push_back(std::move(r));
  }
  return WeylGroup(std::move(rs), std::move(elements), std::move(bruhat));
}

}  // namespace lsv
