#include "plumbsw/graph.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <fstream>
#include <queue>
#include <set>
#include <sstream>

namespace plumbsw {

namespace {

std::vector<std::string> tokenize(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream is(line);
  std::string tok;
  while (is >> tok) out.push_back(tok);
  return out;
}

std::int64_t parse_euler(const std::string& tok, int lineno) {
  try {
    std::size_t pos = 0;
    long long v = std::stoll(tok, &pos);
    if (pos != tok.size()) throw std::invalid_argument(tok);
    return v;
  } catch (const std::exception&) {
    throw ParseError("line " + std::to_string(lineno) + ": bad Euler number '" + tok + "'");
  }
}

void add_edge_checked(PlumbingGraph& g, const std::string& a, const std::string& b,
                      const std::string& where) {
  if (a == b) throw ParseError(where + ": self-loop at '" + a + "'");
  auto ia = g.index_of(a);
  auto ib = g.index_of(b);
  if (!ia) throw ParseError(where + ": unknown id '" + a + "'");
  if (!ib) throw ParseError(where + ": unknown id '" + b + "'");
  int lo = std::min(*ia, *ib), hi = std::max(*ia, *ib);
  if (g.has_edge(lo, hi)) throw ParseError(where + ": duplicate edge " + a + " " + b);
  g.edges.emplace_back(lo, hi);
}

// Smallest unused id of the form "bu<k>"; keeps transforms reproducible.
std::string fresh_id(const PlumbingGraph& g) {
  for (int k = 1;; ++k) {
    std::string cand = "bu" + std::to_string(k);
    if (!g.index_of(cand)) return cand;
  }
}

PlumbingGraph copy_without_vertex(const PlumbingGraph& g, int drop) {
  PlumbingGraph out;
  std::vector<int> remap(g.size(), -1);
  for (int v = 0; v < g.size(); ++v) {
    if (v == drop) continue;
    remap[v] = out.size();
    out.ids.push_back(g.ids[v]);
    out.euler.push_back(g.euler[v]);
  }
  for (auto [a, b] : g.edges) {
    if (a == drop || b == drop) continue;
    out.edges.emplace_back(remap[a], remap[b]);
  }
  return out;
}

}  // namespace

std::optional<int> PlumbingGraph::index_of(const std::string& id) const {
  for (int v = 0; v < size(); ++v)
    if (ids[v] == id) return v;
  return std::nullopt;
}

std::vector<int> PlumbingGraph::valencies() const {
  std::vector<int> d(size(), 0);
  for (auto [a, b] : edges) {
    ++d[a];
    ++d[b];
  }
  return d;
}

std::vector<std::vector<int>> PlumbingGraph::adjacency() const {
  std::vector<std::vector<int>> adj(size());
  for (auto [a, b] : edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  return adj;
}

bool PlumbingGraph::has_edge(int v, int w) const {
  if (v > w) std::swap(v, w);
  return std::find(edges.begin(), edges.end(), std::make_pair(v, w)) != edges.end();
}

IMat PlumbingGraph::intersection_matrix() const {
  const int s = size();
  IMat m = IMat::Zero(s, s);
  for (int v = 0; v < s; ++v) m(v, v) = euler[v];
  for (auto [a, b] : edges) {
    m(a, b) = 1;
    m(b, a) = 1;
  }
  return m;
}

PlumbingGraph parse_graph(const std::string& text) {
  PlumbingGraph g;
  std::istringstream is(text);
  std::string line;
  int lineno = 0;
  struct PendingEdge {
    std::string a, b;
    int lineno;
  };
  std::vector<PendingEdge> pending;
  while (std::getline(is, line)) {
    ++lineno;
    if (auto pos = line.find('#'); pos != std::string::npos) line.erase(pos);
    auto toks = tokenize(line);
    if (toks.empty()) continue;
    const std::string where = "line " + std::to_string(lineno);
    if (toks[0] == "vertex") {
      if (toks.size() != 3) throw ParseError(where + ": expected 'vertex <id> <int>'");
      if (g.index_of(toks[1])) throw ParseError(where + ": duplicate vertex id '" + toks[1] + "'");
      g.ids.push_back(toks[1]);
      g.euler.push_back(parse_euler(toks[2], lineno));
    } else if (toks[0] == "edge") {
      if (toks.size() != 3) throw ParseError(where + ": expected 'edge <id> <id>'");
      pending.push_back({toks[1], toks[2], lineno});
    } else {
      throw ParseError(where + ": unknown directive '" + toks[0] + "'");
    }
  }
  for (const auto& e : pending)
    add_edge_checked(g, e.a, e.b, "line " + std::to_string(e.lineno));
  if (g.size() == 0) throw ParseError("empty graph: no vertex lines");
  return g;
}

PlumbingGraph parse_graph_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("json: ") + e.what());
  }
  PlumbingGraph g;
  if (!j.is_object() || !j.contains("vertices"))
    throw ParseError("json: expected object with 'vertices'");
  for (const auto& v : j["vertices"]) {
    if (!v.contains("id") || !v.contains("e"))
      throw ParseError("json: vertex needs 'id' and 'e'");
    std::string id = v["id"].get<std::string>();
    if (g.index_of(id)) throw ParseError("json: duplicate vertex id '" + id + "'");
    if (!v["e"].is_number_integer()) throw ParseError("json: 'e' must be an integer");
    g.ids.push_back(id);
    g.euler.push_back(v["e"].get<std::int64_t>());
  }
  if (j.contains("edges")) {
    for (const auto& e : j["edges"]) {
      if (!e.is_array() || e.size() != 2) throw ParseError("json: edge must be a pair");
      add_edge_checked(g, e[0].get<std::string>(), e[1].get<std::string>(), "json edge");
    }
  }
  if (g.size() == 0) throw ParseError("empty graph: no vertices");
  return g;
}

PlumbingGraph load_graph_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  bool json = path.size() >= 5 && path.substr(path.size() - 5) == ".json";
  return json ? parse_graph_json(buf.str()) : parse_graph(buf.str());
}

std::string graph_to_text(const PlumbingGraph& g) {
  std::ostringstream os;
  for (int v = 0; v < g.size(); ++v)
    os << "vertex " << g.ids[v] << " " << g.euler[v] << "\n";
  for (auto [a, b] : g.edges) os << "edge " << g.ids[a] << " " << g.ids[b] << "\n";
  return os.str();
}

ValidationReport validate(const PlumbingGraph& g) {
  ValidationReport rep;
  const int s = g.size();
  if (s == 0) {
    rep.pass = false;
    rep.reasons.push_back("graph is empty");
    return rep;
  }

  // Connected + acyclic == tree == connected with s-1 edges.
  auto adj = g.adjacency();
  std::vector<char> seen(s, 0);
  std::queue<int> q;
  q.push(0);
  seen[0] = 1;
  int reached = 1;
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int w : adj[v])
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        q.push(w);
      }
  }
  if (reached != s) {
    rep.pass = false;
    rep.reasons.push_back("not connected");
  }
  if (static_cast<int>(g.edges.size()) != s - 1) {
    rep.pass = false;
    rep.reasons.push_back("not acyclic (tree needs |V|-1 edges, got " +
                          std::to_string(g.edges.size()) + ")");
  }
  if (!rep.pass) return rep;

  // Sylvester: -I positive definite iff all leading principal minors > 0.
  // Fraction-free Bareiss elimination yields them as exact integers.
  IMat m = -g.intersection_matrix();
  Int prev = 1;
  for (int k = 0; k < s; ++k) {
    if (m(k, k) <= 0) {
      rep.pass = false;
      rep.reasons.push_back("not negative definite (leading principal minor " +
                            std::to_string(k + 1) + " of -I is " + m(k, k).get_str() + ")");
      return rep;
    }
    for (int i = k + 1; i < s; ++i)
      for (int j = k + 1; j < s; ++j)
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
    prev = m(k, k);
  }
  return rep;
}

PlumbingGraph blow_up_edge(const PlumbingGraph& g, const std::string& v,
                           const std::string& w) {
  auto iv = g.index_of(v), iw = g.index_of(w);
  if (!iv || !iw) throw PreconditionError("blow_up_edge: unknown vertex id");
  if (!g.has_edge(*iv, *iw)) throw PreconditionError("blow_up_edge: no edge " + v + "-" + w);
  PlumbingGraph out = g;
  out.edges.erase(std::remove(out.edges.begin(), out.edges.end(),
                              std::make_pair(std::min(*iv, *iw), std::max(*iv, *iw))),
                  out.edges.end());
  out.euler[*iv] -= 1;
  out.euler[*iw] -= 1;
  int u = out.size();
  out.ids.push_back(fresh_id(g));
  out.euler.push_back(-1);
  out.edges.emplace_back(std::min(*iv, u), std::max(*iv, u));
  out.edges.emplace_back(std::min(*iw, u), std::max(*iw, u));
  return out;
}

PlumbingGraph blow_up_vertex(const PlumbingGraph& g, const std::string& v) {
  auto iv = g.index_of(v);
  if (!iv) throw PreconditionError("blow_up_vertex: unknown vertex id '" + v + "'");
  PlumbingGraph out = g;
  out.euler[*iv] -= 1;
  int u = out.size();
  out.ids.push_back(fresh_id(g));
  out.euler.push_back(-1);
  out.edges.emplace_back(*iv, u);
  return out;
}

PlumbingGraph blow_down(const PlumbingGraph& g, const std::string& v) {
  auto iv = g.index_of(v);
  if (!iv) throw PreconditionError("blow_down: unknown vertex id '" + v + "'");
  if (g.euler[*iv] != -1)
    throw PreconditionError("blow_down: vertex '" + v + "' has e != -1");
  auto adj = g.adjacency();
  const auto& nb = adj[*iv];
  if (nb.size() > 2)
    throw PreconditionError("blow_down: vertex '" + v + "' has valency > 2");
  PlumbingGraph out = copy_without_vertex(g, *iv);
  for (int w : nb) {
    auto idx = out.index_of(g.ids[w]);
    out.euler[*idx] += 1;
  }
  if (nb.size() == 2) {
    auto a = out.index_of(g.ids[nb[0]]);
    auto b = out.index_of(g.ids[nb[1]]);
    if (out.has_edge(*a, *b))
      throw PreconditionError("blow_down: would create a double edge");
    out.edges.emplace_back(std::min(*a, *b), std::max(*a, *b));
  }
  return out;
}

PlumbingGraph delete_end_vertex(const PlumbingGraph& g, const std::string& u) {
  auto iu = g.index_of(u);
  if (!iu) throw PreconditionError("delete_end_vertex: unknown vertex id '" + u + "'");
  if (g.size() < 2) throw PreconditionError("delete_end_vertex: graph has one vertex");
  if (g.valencies()[*iu] != 1)
    throw PreconditionError("delete_end_vertex: '" + u + "' is not an end-vertex");
  return copy_without_vertex(g, *iu);
}

std::uint64_t graph_hash(const PlumbingGraph& g) {
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&h](std::uint64_t x) {
    h ^= x + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    h *= 1099511628211ull;
  };
  for (int v = 0; v < g.size(); ++v) {
    for (char c : g.ids[v]) mix(static_cast<unsigned char>(c));
    mix(static_cast<std::uint64_t>(g.euler[v]));
  }
  for (auto [a, b] : g.edges) {
    mix(a);
    mix(b);
  }
  return h;
}

}  // namespace plumbsw
