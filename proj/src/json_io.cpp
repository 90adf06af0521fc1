#include "btlab/json_io.hpp"

#include <map>
#include <set>
#include <sstream>

#include "btlab/parse.hpp"

namespace btlab {

Json matrix_to_json(const Matrix2& m) {
  return Json::array(
      {Json::array({m.a.str(), m.b.str()}), Json::array({m.c.str(), m.d.str()})});
}

Matrix2 matrix_from_json(Field f, const Json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_array() || j[0].size() != 2 ||
      !j[1].is_array() || j[1].size() != 2)
    throw std::invalid_argument("matrix JSON must be a 2x2 array of strings");
  return Matrix2{parse_rational_function(f, j[0][0].get<std::string>()),
                 parse_rational_function(f, j[0][1].get<std::string>()),
                 parse_rational_function(f, j[1][0].get<std::string>()),
                 parse_rational_function(f, j[1][1].get<std::string>())};
}

Json vertex_to_json(const TreeVertex& v) {
  Json offset = Json::array();
  for (const auto& [exp, c] : v.offset.terms())
    offset.push_back(Json::array({exp, c.str()}));
  return Json{{"place", place_name(v.place)},
              {"level", v.level},
              {"offset", offset}};
}

TreeVertex vertex_from_json(Field f, const Json& j) {
  std::string place = j.at("place").get<std::string>();
  if (place != "zero" && place != "infinity")
    throw std::invalid_argument("vertex place must be zero or infinity");
  LaurentPolynomial off(f);
  for (const Json& term : j.at("offset"))
    off.add_term(term.at(0).get<int>(),
                 Scalar::parse(f, term.at(1).get<std::string>()));
  TreeVertex v{place == "zero" ? Place::Zero : Place::Infinity,
               j.at("level").get<int>(), off};
  if (!off.is_zero() && off.max_exp() >= v.level)
    throw std::invalid_argument(
        "vertex offset must be supported strictly below the level");
  return v;
}

namespace {

Json factor_to_json(const CellFactor& fac) {
  Json j{{"v1", vertex_to_json(fac.v)}};
  if (fac.is_edge()) j["v2"] = vertex_to_json(*fac.head);
  return j;
}

/// Returns the canonical factor and the orientation sign of the input.
std::pair<CellFactor, int> factor_from_json(Field f, Place at, const Json& j) {
  TreeVertex v1 = vertex_from_json(f, j.at("v1"));
  if (v1.place != at)
    throw std::invalid_argument("cell factor at the wrong place");
  if (!j.contains("v2")) return {CellFactor{v1, std::nullopt}, 1};
  TreeVertex v2 = vertex_from_json(f, j.at("v2"));
  if (v2.place != at)
    throw std::invalid_argument("cell factor at the wrong place");
  auto [edge, sign] = make_edge(v1, v2);
  return {CellFactor{edge.tail, edge.head}, sign};
}

}  // namespace

Json chain_to_json(const Chain& c) {
  Json out = Json::array();
  for (const auto& [cell, coeff] : c.terms()) {
    Json jc{{"eInf", factor_to_json(cell.fInf)},
            {"eZero", factor_to_json(cell.fZero)}};
    out.push_back(Json{{"cell", jc}, {"coeff", coeff.str()}});
  }
  return out;
}

Chain chain_from_json(Field f, const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("chain JSON must be a list");
  Chain c(f);
  for (const Json& term : j) {
    const Json& jc = term.at("cell");
    auto [fi, si] = factor_from_json(f, Place::Infinity, jc.at("eInf"));
    auto [fz, sz] = factor_from_json(f, Place::Zero, jc.at("eZero"));
    Scalar coeff = Scalar::parse(f, term.at("coeff").get<std::string>());
    c.add(Cell{fi, fz}, si * sz < 0 ? -coeff : coeff);
  }
  return c;
}

Json certificate_to_json(const Certificate& cert) {
  return Json{{"lemma", cert.lemma},
              {"params", cert.params},
              {"verdict", cert.pass ? "PASS" : "FAIL"},
              {"witnesses", cert.witnesses},
              {"labels", cert.labels},
              {"notes", cert.notes}};
}

Certificate certificate_from_json(const Json& j) {
  Certificate cert;
  cert.lemma = j.at("lemma").get<std::string>();
  cert.params = j.at("params").get<std::map<std::string, std::string>>();
  cert.pass = j.at("verdict").get<std::string>() == "PASS";
  cert.witnesses = j.at("witnesses").get<std::vector<std::string>>();
  cert.labels = j.at("labels").get<std::vector<std::string>>();
  if (j.contains("notes"))
    cert.notes = j.at("notes").get<std::vector<std::string>>();
  return cert;
}

Json pairing_to_json(const PairingReport& rep) {
  Json matrix = Json::array();
  for (const auto& row : rep.matrix) {
    Json jr = Json::array();
    for (const Scalar& s : row) jr.push_back(s.str());
    matrix.push_back(jr);
  }
  return Json{{"indices", rep.indices},
              {"matrix", matrix},
              {"triangular", rep.triangular},
              {"rank", rep.rank}};
}

namespace {

std::string vertex_label(const TreeVertex& v) {
  std::ostringstream os;
  os << place_name(v.place) << " m=" << v.level;
  if (!v.offset.is_zero())
    os << " c=" << v.offset.str(v.place == Place::Zero ? "t" : "s");
  return os.str();
}

struct VertexLess {
  bool operator()(const TreeVertex& a, const TreeVertex& b) const {
    return cmp(a, b) < 0;
  }
};

std::string render_dot(const std::map<TreeVertex, int, VertexLess>& ids,
                       const std::vector<std::pair<int, int>>& edges,
                       const char* name) {
  // Group nodes of equal Busemann value on one rank.
  std::map<int, std::vector<int>> ranks;
  std::ostringstream os;
  os << "graph " << name << " {\n";
  for (const auto& [v, id] : ids) {
    os << "  n" << id << " [label=\"" << vertex_label(v) << "\"];\n";
    ranks[busemann(v)].push_back(id);
  }
  for (const auto& [beta, nodes] : ranks) {
    os << "  { rank=same;";
    for (int id : nodes) os << " n" << id << ";";
    os << " }\n";
  }
  for (const auto& [a, b] : edges) os << "  n" << a << " -- n" << b << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace

std::string dot_ball(Field f, Place at, int radius) {
  if (!f.is_prime())
    throw std::domain_error("dot_ball: enumeration requires a finite field");
  std::map<TreeVertex, int, VertexLess> ids;
  std::vector<std::pair<int, int>> edges;
  std::vector<TreeVertex> frontier{base_vertex(f, at)};
  ids.emplace(frontier.front(), 0);
  for (int depth = 0; depth < radius; ++depth) {
    std::vector<TreeVertex> next;
    for (const TreeVertex& v : frontier) {
      int vid = ids.at(v);
      for (const TreeVertex& w : neighbors(v)) {
        auto [it, fresh] = ids.emplace(w, int(ids.size()));
        if (fresh) {
          next.push_back(w);
          edges.emplace_back(vid, it->second);
        }
      }
    }
    frontier = std::move(next);
  }
  return render_dot(ids, edges, "ball");
}

std::string dot_chain(const Chain& c, Place at) {
  std::map<TreeVertex, int, VertexLess> ids;
  std::vector<std::pair<int, int>> edges;
  std::set<std::pair<int, int>> seen;
  for (const auto& [cell, coeff] : c.terms()) {
    const CellFactor& fac = at == Place::Infinity ? cell.fInf : cell.fZero;
    int a = ids.emplace(fac.v, int(ids.size())).first->second;
    if (fac.is_edge()) {
      int b = ids.emplace(*fac.head, int(ids.size())).first->second;
      if (seen.emplace(std::min(a, b), std::max(a, b)).second)
        edges.emplace_back(a, b);
    }
  }
  return render_dot(ids, edges, "chain");
}

}  // namespace btlab
