#include "hypdom/io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace hypdom {

namespace {

using Json = nlohmann::ordered_json;

Json point_json(DiskPoint p) { return Json::array({p.re, p.im}); }

Json iso_json(const Isometry& g) {
  return Json::array(
      {g.a().real(), g.a().imag(), g.b().real(), g.b().imag()});
}

DiskPoint point_from(const Json& j) {
  if (!j.is_array() || j.size() != 2) {
    fail(ErrorKind::InvalidInput, "point must be [re, im]");
  }
  return DiskPoint(j[0].get<double>(), j[1].get<double>());
}

Isometry iso_from(const Json& j) {
  if (!j.is_array() || j.size() != 4) {
    fail(ErrorKind::InvalidInput, "matrix must be [a_re, a_im, b_re, b_im]");
  }
  return Isometry(Complex(j[0].get<double>(), j[1].get<double>()),
                  Complex(j[2].get<double>(), j[3].get<double>()));
}

PolygonInput from_polygon_schema(const Json& j) {
  PolygonInput in;
  for (const Json& v : j.at("vertices")) in.vertices.push_back(point_from(v));
  for (const Json& p : j.at("pairings")) {
    if (!p.is_array() || p.size() != 2) {
      fail(ErrorKind::InvalidInput, "pairing must be [i, j]");
    }
    in.pairings.push_back({p[0].get<int>(), p[1].get<int>()});
  }
  if (j.contains("generators")) {
    for (const Json& g : j.at("generators")) in.generators.push_back(iso_from(g));
  }
  return in;
}

PolygonInput from_dirichlet_schema(const Json& j) {
  PolygonInput in;
  for (const Json& v : j.at("vertices")) in.vertices.push_back(point_from(v));
  for (const Json& p : j.at("pairings")) {
    int side = p.at("side").get<int>();
    int partner = p.at("partner").get<int>();
    if (side < partner) {
      in.pairings.push_back({side, partner});
      in.generators.push_back(iso_from(p.at("matrix")));
    }
  }
  return in;
}

std::string word_list_entry(const Word& w) { return w.str(); }

Json words_json(const std::vector<Word>& ws) {
  Json a = Json::array();
  for (const Word& w : ws) a.push_back(word_list_entry(w));
  return a;
}

}  // namespace

PolygonInput parse_polygon(const std::string& json_text) {
  Json j;
  try {
    j = Json::parse(json_text);
  } catch (const std::exception& e) {
    fail(ErrorKind::InvalidInput, std::string("JSON parse error: ") + e.what());
  }
  try {
    bool dirichlet_schema = j.contains("pairings") && j["pairings"].is_array() &&
                            !j["pairings"].empty() &&
                            j["pairings"][0].is_object();
    return dirichlet_schema ? from_dirichlet_schema(j) : from_polygon_schema(j);
  } catch (const Error&) {
    throw;
  } catch (const std::exception& e) {
    fail(ErrorKind::InvalidInput, std::string("bad input: ") + e.what());
  }
}

PolygonInput read_polygon_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) fail(ErrorKind::InvalidInput, "cannot open " + path);
  std::ostringstream buf;
  buf << f.rdbuf();
  return parse_polygon(buf.str());
}

std::string to_json(const GeneratedPolygon& G) {
  Json j;
  Json verts = Json::array();
  for (const DiskPoint& v : G.vertices) verts.push_back(point_json(v));
  j["vertices"] = std::move(verts);
  Json pairs = Json::array();
  for (const auto& p : G.pairings) pairs.push_back(Json::array({p[0], p[1]}));
  j["pairings"] = std::move(pairs);
  Json gens = Json::array();
  for (const Isometry& g : G.generators) gens.push_back(iso_json(g));
  j["generators"] = std::move(gens);
  return j.dump(2) + "\n";
}

std::string to_json(const DirichletDomain& D) {
  Json j;
  j["genus"] = D.genus;
  j["center"] = point_json(D.center);
  Json verts = Json::array();
  for (const DiskPoint& v : D.vertices) verts.push_back(point_json(v));
  j["vertices"] = std::move(verts);
  Json pairs = Json::array();
  for (int k = 0; k < static_cast<int>(D.side_words.size()); ++k) {
    Json p;
    p["side"] = k;
    p["partner"] = D.partner[k];
    p["word"] = D.side_words[k].str();
    p["matrix"] = iso_json(D.side_words[k].iso());
    pairs.push_back(std::move(p));
  }
  j["pairings"] = std::move(pairs);
  j["area"] = D.area;
  j["perimeter"] = D.perimeter;
  return j.dump(2) + "\n";
}

std::string loops_json(const LoopSystem& L) {
  Json j;
  j["basepoint"] = point_json(L.basepoint);
  j["root_orbit"] = L.root_orbit;
  j["start_side"] = L.start_side;
  Json graph;
  graph["nodes"] = L.graph.num_nodes();
  Json edges = Json::array();
  for (int e = 0; e < L.graph.num_edges(); ++e) {
    Json ej;
    ej["from"] = L.graph.edge(e).from;
    ej["to"] = L.graph.edge(e).to;
    ej["weight"] = L.graph.edge(e).weight;
    ej["in_tree"] = L.graph.in_tree(e);
    edges.push_back(std::move(ej));
  }
  graph["edges"] = std::move(edges);
  graph["root"] = L.graph.root();
  j["graph"] = std::move(graph);
  Json table = Json::array();
  for (const Word& t : L.table) table.push_back(t.str());
  j["table"] = std::move(table);
  Json sides = Json::array();
  for (const LoopSide& s : L.sides) {
    Json sj;
    sj["polygon_side"] = s.polygon_side;
    Json chain = Json::array();
    for (const DiskPoint& p : s.chain) chain.push_back(point_json(p));
    sj["chain"] = std::move(chain);
    sj["chain_length"] = s.chain_length;
    sj["chord_length"] = s.chord_length;
    sides.push_back(std::move(sj));
  }
  j["sides"] = std::move(sides);
  Json pairs = Json::array();
  for (const auto& p : L.pairings) pairs.push_back(Json::array({p[0], p[1]}));
  j["pairings"] = std::move(pairs);
  j["pairing_words"] = words_json(L.pairing_words);
  j["side_words"] = words_json(L.side_words);
  j["access_count"] = L.access_count;
  return j.dump(2) + "\n";
}

std::string convex_json(const ConvexSystem& C) {
  Json j;
  j["center"] = point_json(C.center);
  Json verts = Json::array();
  for (const DiskPoint& v : C.polygon.vertices()) verts.push_back(point_json(v));
  j["vertices"] = std::move(verts);
  Json pairs = Json::array();
  for (const auto& p : C.pairings) pairs.push_back(Json::array({p[0], p[1]}));
  j["pairings"] = std::move(pairs);
  j["pairing_words"] = words_json(C.pairing_words);
  j["side_words"] = words_json(C.side_words);
  Json lens = Json::array(), angles = Json::array();
  for (int k = 0; k < C.polygon.size(); ++k) {
    lens.push_back(C.polygon.side_length(k));
    angles.push_back(C.polygon.interior_angle(k));
  }
  j["side_lengths"] = std::move(lens);
  j["angles"] = std::move(angles);
  j["angle_sum"] = C.polygon.angle_sum();
  j["area"] = C.polygon.area();
  j["relocation"] = C.relocation;
  j["max_chord"] = C.max_chord;
  j["relocation_ratio"] =
      C.max_chord > 0 ? C.relocation / (2.0 * C.max_chord) : 0.0;
  j["axis_pairings"] = Json::array({C.axis_pairing_a, C.axis_pairing_b});
  Json order = Json::array();
  for (int p : C.end_order) order.push_back(p);
  j["end_order"] = std::move(order);
  return j.dump(2) + "\n";
}

std::string delaunay_json(const SurfaceTriangulation& T,
                          const SurfaceTriangulation::FlipStats& stats) {
  Json j;
  j["genus"] = T.genus();
  j["num_triangles"] = T.num_triangles();
  Json tris = Json::array();
  for (int t = 0; t < T.num_triangles(); ++t) {
    Json tj = Json::array();
    for (int s = 0; s < 3; ++s) tj.push_back(point_json(T.corner(3 * t + s)));
    tris.push_back(std::move(tj));
  }
  j["triangles"] = std::move(tris);
  Json edges = Json::array();
  for (int h = 0; h < T.num_halfedges(); ++h) {
    if (h > T.twin(h)) continue;
    Json ej;
    ej["halfedge"] = h;
    ej["twin"] = T.twin(h);
    ej["holonomy"] = T.holonomy(h).str();
    edges.push_back(std::move(ej));
  }
  j["edges"] = std::move(edges);
  j["area"] = T.total_area();
  j["flips"] = stats.flips;
  j["tests"] = stats.tests;
  j["max_queue"] = stats.max_queue;
  return j.dump(2) + "\n";
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path);
  if (!f) fail(ErrorKind::InvalidInput, "cannot write " + path);
  f << text;
  if (!f) fail(ErrorKind::InvalidInput, "write failed for " + path);
}

}  // namespace hypdom
