#include "bendmin/plane_graph.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <sstream>
#include <unordered_map>

namespace bendmin {

namespace {

[[noreturn]] void invalid(const std::string& msg) { throw Error(ErrorKind::InvalidInput, msg); }

std::string id_string(const nlohmann::json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return std::to_string(j.get<long long>());
  invalid("identifier must be a string or an integer");
}

}  // namespace

int PlaneGraph::next_in_face(int dart) const {
  int h = head(dart);
  int e = edge_of(dart);
  int p = position(h, e);
  int next_edge = rotation[h][(p + 1) % rotation[h].size()];
  return dart_from(next_edge, h);
}

int PlaneGraph::find_vertex(const std::string& id) const {
  for (int v = 0; v < vertex_count(); ++v)
    if (vertex_ids[v] == id) return v;
  return -1;
}

int PlaneGraph::find_edge(const std::string& id) const {
  for (int e = 0; e < edge_count(); ++e)
    if (edges[e].id == id) return e;
  return -1;
}

void PlaneGraph::finalize() {
  const int n = vertex_count();
  const int m = edge_count();
  if (n == 0) invalid("graph has no vertices");
  if (static_cast<int>(rotation.size()) != n) invalid("rotation system does not cover every vertex");
  std::vector<int> deg(n, 0);
  for (int e = 0; e < m; ++e) {
    const Edge& ed = edges[e];
    if (ed.u < 0 || ed.u >= n || ed.v < 0 || ed.v >= n) invalid("edge " + ed.id + " has an unknown endpoint");
    if (ed.u == ed.v) invalid("edge " + ed.id + " is a self-loop");
    ++deg[ed.u];
    ++deg[ed.v];
  }
  end_pos_.assign(2 * m, -1);
  for (int v = 0; v < n; ++v) {
    if (deg[v] > 4) invalid("vertex " + vertex_ids[v] + " has degree " + std::to_string(deg[v]) + " (maximum is 4)");
    if (static_cast<int>(rotation[v].size()) != deg[v])
      invalid("rotation of vertex " + vertex_ids[v] + " does not list exactly its incident edges");
    for (int i = 0; i < deg[v]; ++i) {
      int e = rotation[v][i];
      if (e < 0 || e >= m) invalid("rotation of vertex " + vertex_ids[v] + " names an unknown edge");
      int slot;
      if (edges[e].u == v)
        slot = 2 * e;
      else if (edges[e].v == v)
        slot = 2 * e + 1;
      else
        invalid("rotation of vertex " + vertex_ids[v] + " lists non-incident edge " + edges[e].id);
      if (end_pos_[slot] != -1) invalid("rotation of vertex " + vertex_ids[v] + " repeats edge " + edges[e].id);
      end_pos_[slot] = i;
    }
  }
  if (n > 1) {
    std::vector<int> seen(n, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int e : rotation[v]) {
        int w = other_end(e, v);
        if (!seen[w]) {
          seen[w] = 1;
          ++count;
          stack.push_back(w);
        }
      }
    }
    if (count != n) invalid("graph is not connected");
  }
  faces.clear();
  dart_face.assign(2 * m, -1);
  for (int d = 0; d < 2 * m; ++d) {
    if (dart_face[d] != -1) continue;
    int f = static_cast<int>(faces.size());
    faces.emplace_back();
    int cur = d;
    do {
      dart_face[cur] = f;
      faces[f].push_back(cur);
      cur = next_in_face(cur);
    } while (cur != d);
  }
  if (m > 0 && n - m + static_cast<int>(faces.size()) != 2)
    invalid("rotation system is not planar (Euler characteristic fails)");
  if (m == 0) invalid("graph has no edges");
  if (external_dart < 0 || external_dart >= 2 * m) invalid("external face is not specified");
  external_face = dart_face[external_dart];
  if (reference_edge < 0 || reference_edge >= m) invalid("reference edge is not specified");
  if (dart_face[2 * reference_edge] != external_face && dart_face[2 * reference_edge + 1] != external_face)
    invalid("reference edge " + edges[reference_edge].id + " does not border the external face");
}

std::pair<int, int> PlaneGraph::reference_poles() const {
  const Edge& e = edges[reference_edge];
  // Right side of u->v is the left side of dart v->u.
  if (dart_face[2 * reference_edge + 1] == external_face) return {e.u, e.v};
  return {e.v, e.u};
}

PlaneGraph parse_plane_graph(const nlohmann::json& doc) {
  if (!doc.is_object()) invalid("graph document must be a JSON object");
  PlaneGraph g;
  std::unordered_map<std::string, int> vindex, eindex;
  if (!doc.contains("vertices") || !doc["vertices"].is_array()) invalid("missing \"vertices\" array");
  for (const auto& v : doc["vertices"]) {
    std::string id = id_string(v);
    if (!vindex.emplace(id, g.vertex_count()).second) invalid("duplicate vertex id " + id);
    g.vertex_ids.push_back(id);
  }
  if (!doc.contains("edges") || !doc["edges"].is_array()) invalid("missing \"edges\" array");
  for (const auto& e : doc["edges"]) {
    if (!e.is_object() || !e.contains("id") || !e.contains("u") || !e.contains("v"))
      invalid("each edge needs \"id\", \"u\" and \"v\"");
    Edge ed;
    ed.id = id_string(e["id"]);
    auto u = vindex.find(id_string(e["u"]));
    auto v = vindex.find(id_string(e["v"]));
    if (u == vindex.end() || v == vindex.end()) invalid("edge " + ed.id + " has an unknown endpoint");
    ed.u = u->second;
    ed.v = v->second;
    if (e.contains("dummy")) ed.dummy = e["dummy"].get<bool>();
    if (!eindex.emplace(ed.id, g.edge_count()).second) invalid("duplicate edge id " + ed.id);
    g.edges.push_back(ed);
  }
  g.rotation.assign(g.vertex_count(), {});
  if (!doc.contains("rotation") || !doc["rotation"].is_object()) invalid("missing \"rotation\" object");
  for (const auto& [key, list] : doc["rotation"].items()) {
    auto v = vindex.find(key);
    if (v == vindex.end()) invalid("rotation names unknown vertex " + key);
    if (!list.is_array()) invalid("rotation of vertex " + key + " must be an array");
    for (const auto& e : list) {
      auto it = eindex.find(id_string(e));
      if (it == eindex.end()) invalid("rotation of vertex " + key + " names unknown edge " + id_string(e));
      g.rotation[v->second].push_back(it->second);
    }
  }
  if (!doc.contains("external_face_edge") || !doc["external_face_edge"].is_object())
    invalid("missing \"external_face_edge\"");
  const auto& ext = doc["external_face_edge"];
  if (!ext.contains("edge")) invalid("\"external_face_edge\" needs an \"edge\"");
  auto ee = eindex.find(id_string(ext["edge"]));
  if (ee == eindex.end()) invalid("external face edge is unknown");
  std::string side = ext.value("side", "left");
  if (side != "left" && side != "right") invalid("external face side must be \"left\" or \"right\"");
  g.external_dart = PlaneGraph::dart_of(ee->second, side == "right");

  bool explicit_reference = doc.contains("reference_edge") && !doc["reference_edge"].is_null();
  if (explicit_reference) {
    auto re = eindex.find(id_string(doc["reference_edge"]));
    if (re == eindex.end()) invalid("reference edge is unknown");
    g.reference_edge = re->second;
  } else {
    g.reference_edge = ee->second;
  }
  g.finalize();
  if (!explicit_reference) {
    int best = -1;
    for (int d : g.faces[g.external_face]) {
      int e = PlaneGraph::edge_of(d);
      if (best == -1 || g.edges[e].id < g.edges[best].id) best = e;
    }
    g.reference_edge = best;
  }
  return g;
}

PlaneGraph parse_plane_graph_text(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& ex) {
    invalid(std::string("malformed JSON: ") + ex.what());
  }
  try {
    return parse_plane_graph(doc);
  } catch (const nlohmann::json::exception& ex) {
    invalid(std::string("malformed graph document: ") + ex.what());
  }
}

PlaneGraph load_plane_graph(const std::string& path) {
  std::string text;
  if (path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  } else {
    std::ifstream in(path);
    if (!in) invalid("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  return parse_plane_graph_text(text);
}

nlohmann::json to_json(const PlaneGraph& g) {
  nlohmann::json doc;
  doc["vertices"] = g.vertex_ids;
  nlohmann::json edges = nlohmann::json::array();
  for (const Edge& e : g.edges) {
    nlohmann::json je{{"id", e.id}, {"u", g.vertex_ids[e.u]}, {"v", g.vertex_ids[e.v]}};
    if (e.dummy) je["dummy"] = true;
    edges.push_back(je);
  }
  doc["edges"] = edges;
  nlohmann::json rot = nlohmann::json::object();
  for (int v = 0; v < g.vertex_count(); ++v) {
    nlohmann::json list = nlohmann::json::array();
    for (int e : g.rotation[v]) list.push_back(g.edges[e].id);
    rot[g.vertex_ids[v]] = list;
  }
  doc["rotation"] = rot;
  doc["external_face_edge"] = {{"edge", g.edges[PlaneGraph::edge_of(g.external_dart)].id},
                               {"side", (g.external_dart & 1) ? "right" : "left"}};
  if (g.reference_edge >= 0) doc["reference_edge"] = g.edges[g.reference_edge].id;
  return doc;
}

namespace {

struct BlockInfo {
  std::vector<std::vector<int>> block_vertices;
  std::vector<int> block_edge_count;
  std::vector<char> is_cut;
  std::vector<std::vector<int>> vertex_blocks;
};

// Iterative Hopcroft-Tarjan over edges, so parallel edges are handled.
BlockInfo compute_blocks(const PlaneGraph& g) {
  const int n = g.vertex_count();
  BlockInfo info;
  info.is_cut.assign(n, 0);
  info.vertex_blocks.assign(n, {});
  std::vector<int> disc(n, -1), low(n, 0);
  std::vector<int> edge_stack;
  struct Frame {
    int v, parent_edge, next;
  };
  std::vector<Frame> stack;
  int timer = 0;
  std::vector<int> mark(n, -1);
  auto pop_block = [&](int edge) {
    int b = static_cast<int>(info.block_vertices.size());
    info.block_vertices.emplace_back();
    info.block_edge_count.push_back(0);
    while (true) {
      int e = edge_stack.back();
      edge_stack.pop_back();
      ++info.block_edge_count[b];
      for (int x : {g.edges[e].u, g.edges[e].v}) {
        if (mark[x] != b) {
          mark[x] = b;
          info.block_vertices[b].push_back(x);
          info.vertex_blocks[x].push_back(b);
        }
      }
      if (e == edge) break;
    }
  };
  disc[0] = low[0] = timer++;
  stack.push_back({0, -1, 0});
  while (!stack.empty()) {
    Frame& fr = stack.back();
    int v = fr.v;
    if (fr.next < g.degree(v)) {
      int e = g.rotation[v][fr.next++];
      if (e == fr.parent_edge) continue;
      int w = g.other_end(e, v);
      if (disc[w] == -1) {
        edge_stack.push_back(e);
        disc[w] = low[w] = timer++;
        stack.push_back({w, e, 0});
      } else if (disc[w] < disc[v]) {
        edge_stack.push_back(e);
        low[v] = std::min(low[v], disc[w]);
      }
    } else {
      int pe = fr.parent_edge;
      stack.pop_back();
      if (stack.empty()) break;
      int p = stack.back().v;
      low[p] = std::min(low[p], low[v]);
      if (low[v] >= disc[p]) pop_block(pe);
    }
  }
  for (int v = 0; v < n; ++v)
    if (info.vertex_blocks[v].size() > 1) info.is_cut[v] = 1;
  return info;
}

}  // namespace

bool is_biconnected(const PlaneGraph& g) {
  // Same DFS as compute_blocks, stopping at the first separation.
  const int n = g.vertex_count();
  if (g.edge_count() < 2) return false;
  std::vector<int> disc(n, -1), low(n, 0), parent_edge(n, -1), next(n, 0);
  std::vector<int> stack{0};
  int timer = 0, root_children = 0;
  disc[0] = low[0] = timer++;
  while (!stack.empty()) {
    int v = stack.back();
    if (next[v] < g.degree(v)) {
      int e = g.rotation[v][next[v]++];
      if (e == parent_edge[v]) continue;
      int w = g.other_end(e, v);
      if (disc[w] == -1) {
        disc[w] = low[w] = timer++;
        parent_edge[w] = e;
        stack.push_back(w);
        if (v == 0) ++root_children;
      } else {
        low[v] = std::min(low[v], disc[w]);
      }
      continue;
    }
    stack.pop_back();
    if (stack.empty()) break;
    int p = stack.back();
    low[p] = std::min(low[p], low[v]);
    if (p != 0 && low[v] >= disc[p]) return false;
  }
  return timer == n && root_children == 1;
}

std::vector<std::pair<std::pair<int, int>, std::pair<int, int>>> augmentation_candidates(const PlaneGraph& g) {
  BlockInfo info = compute_blocks(g);
  const int blocks = static_cast<int>(info.block_vertices.size());
  std::vector<std::pair<std::pair<int, int>, std::pair<int, int>>> out;
  if (blocks == 1 && info.block_edge_count[0] >= 2) return out;
  std::vector<int> cut_count(blocks, 0);
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (!info.is_cut[v]) continue;
    if (info.vertex_blocks[v].size() != 2)
      invalid("graph is not two-terminal: cut vertex " + g.vertex_ids[v] + " lies in more than two blocks");
    for (int b : info.vertex_blocks[v]) ++cut_count[b];
  }
  std::vector<int> ends;
  for (int b = 0; b < blocks; ++b) {
    if (cut_count[b] > 2) invalid("graph is not two-terminal: blocks do not form a path");
    if (cut_count[b] <= 1) ends.push_back(b);
  }
  if (blocks == 1) ends.push_back(0);
  if (ends.size() != 2) invalid("graph is not two-terminal: blocks do not form a path");
  std::vector<int> block_of_vertex(g.vertex_count(), -1);
  for (int v = 0; v < g.vertex_count(); ++v)
    if (!info.is_cut[v]) block_of_vertex[v] = info.vertex_blocks[v][0];
  std::vector<std::pair<int, int>> first, second;
  std::vector<char> used_first(g.vertex_count(), 0), used_second(g.vertex_count(), 0);
  for (int d : g.faces[g.external_face]) {
    int v = g.head(d);
    int b = block_of_vertex[v];
    if (b < 0) continue;
    std::pair<int, int> corner{v, g.corner_slot(d)};
    if (b == ends[0] && !used_first[v]) {
      used_first[v] = 1;
      first.push_back(corner);
    }
    if (b == ends[1] && !used_second[v]) {
      used_second[v] = 1;
      second.push_back(corner);
    }
  }
  for (const auto& a : first)
    for (const auto& b : second)
      if (a.first != b.first && g.degree(a.first) < 4 && g.degree(b.first) < 4) out.push_back({a, b});
  if (out.empty()) invalid("graph cannot be made biconnected by one edge through the external face");
  return out;
}

PlaneGraph add_dummy_edge(const PlaneGraph& g, std::pair<int, int> first, std::pair<int, int> second) {
  PlaneGraph h;
  h.vertex_ids = g.vertex_ids;
  h.edges = g.edges;
  h.rotation = g.rotation;
  int x = h.edge_count();
  std::string id = "__dummy";
  while (g.find_edge(id) != -1) id += "_";
  h.edges.push_back({id, first.first, second.first, true});
  for (auto [v, slot] : {first, second}) {
    auto& rot = h.rotation[v];
    rot.insert(rot.begin() + slot + 1, x);
  }
  h.external_dart = PlaneGraph::dart_of(x, true);
  h.reference_edge = x;
  h.finalize();
  return h;
}

PlaneGraph biconnect_augment(const PlaneGraph& g) {
  auto cands = augmentation_candidates(g);
  if (cands.empty()) return g;
  return add_dummy_edge(g, cands[0].first, cands[0].second);
}

}  // namespace bendmin
