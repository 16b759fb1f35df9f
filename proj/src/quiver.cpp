#include <algorithm>
#include <functional>
#include <sstream>

#include <json.hpp>

#include "mckay/reps.hpp"

namespace mckay {

bool is_symmetric(const Quiver& q) {
  for (std::size_t i = 0; i < q.size(); ++i) {
    for (std::size_t j = 0; j < q.size(); ++j) {
      if (q.adjacency[i][j] != q.adjacency[j][i]) return false;
    }
  }
  return true;
}

bool null_vector_identity(const Quiver& q) {
  for (std::size_t i = 0; i < q.size(); ++i) {
    long s = 0;
    for (std::size_t j = 0; j < q.size(); ++j) s += q.adjacency[i][j] * q.dims[j];
    if (s != 2L * q.dims[i]) return false;
  }
  return true;
}

namespace {

using Graph = std::vector<std::vector<int>>;

void add_edge(Graph& g, int a, int b) {
  g[a].push_back(b);
  g[b].push_back(a);
}

// Star with arms of the given lengths around vertex 0.
Graph star(const std::vector<int>& arms) {
  int n = 1;
  for (int a : arms) n += a;
  Graph g(n);
  int next = 1;
  for (int a : arms) {
    int prev = 0;
    for (int i = 0; i < a; ++i) {
      add_edge(g, prev, next);
      prev = next++;
    }
  }
  return g;
}

std::string encode(const Graph& g, int v, int parent) {
  std::vector<std::string> kids;
  for (int w : g[v]) {
    if (w != parent) kids.push_back(encode(g, w, v));
  }
  std::sort(kids.begin(), kids.end());
  std::string s = "(";
  for (const auto& k : kids) s += k;
  return s + ")";
}

bool is_tree(const Graph& g) {
  std::size_t edges = 0;
  for (const auto& adj : g) edges += adj.size();
  if (edges / 2 + 1 != g.size()) return false;
  std::vector<bool> seen(g.size(), false);
  std::vector<int> stack{0};
  seen[0] = true;
  std::size_t count = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : g[v]) {
      if (!seen[w]) {
        seen[w] = true;
        ++count;
        stack.push_back(w);
      }
    }
  }
  return count == g.size();
}

std::string canonical_tree(const Graph& g) {
  std::vector<int> deg(g.size());
  std::vector<int> layer;
  for (std::size_t v = 0; v < g.size(); ++v) {
    deg[v] = static_cast<int>(g[v].size());
    if (deg[v] <= 1) layer.push_back(static_cast<int>(v));
  }
  std::size_t remaining = g.size();
  while (remaining > 2) {
    remaining -= layer.size();
    std::vector<int> next;
    for (int v : layer) {
      for (int w : g[v]) {
        if (--deg[w] == 1) next.push_back(w);
      }
    }
    layer = next;
  }
  std::string best;
  for (int c : layer) {
    std::string s = encode(g, c, -1);
    if (best.empty() || s < best) best = s;
  }
  return best;
}

}  // namespace

std::vector<std::vector<int>> affine_template(const std::string& type) {
  if (type == "E6") return star({2, 2, 2});
  if (type == "E7") return star({1, 3, 3});
  if (type == "E8") return star({1, 2, 5});
  const int n = std::stoi(type.substr(1));
  if (type[0] == 'A') {
    Graph g(n + 1);
    for (int i = 0; i <= n; ++i) add_edge(g, i, (i + 1) % (n + 1));
    return g;
  }
  if (type[0] == 'D') {
    // chain of n-3 vertices with two leaves at each end
    Graph g(n + 1);
    const int chain = n - 3;
    for (int i = 0; i + 1 < chain; ++i) add_edge(g, i, i + 1);
    add_edge(g, 0, chain);
    add_edge(g, 0, chain + 1);
    add_edge(g, chain - 1, chain + 2);
    add_edge(g, chain - 1, chain + 3);
    return g;
  }
  throw std::invalid_argument("unknown affine type " + type);
}

bool same_tree(const std::vector<std::vector<int>>& a, const std::vector<std::vector<int>>& b) {
  if (a.size() != b.size() || !is_tree(a) || !is_tree(b)) return false;
  return canonical_tree(a) == canonical_tree(b);
}

std::optional<std::string> affine_ade_type(const Quiver& q) {
  if (!is_symmetric(q) || q.size() < 3) return std::nullopt;
  Graph g(q.size());
  for (std::size_t i = 0; i < q.size(); ++i) {
    if (q.adjacency[i][i] != 0) return std::nullopt;
    for (std::size_t j = i + 1; j < q.size(); ++j) {
      if (q.adjacency[i][j] > 1) return std::nullopt;
      if (q.adjacency[i][j] == 1) add_edge(g, static_cast<int>(i), static_cast<int>(j));
    }
  }
  const int n = static_cast<int>(q.size()) - 1;
  if (std::all_of(g.begin(), g.end(), [](const auto& adj) { return adj.size() == 2; })) {
    std::vector<bool> seen(g.size(), false);
    int v = 0, prev = -1;
    std::size_t count = 0;
    while (!seen[v]) {
      seen[v] = true;
      ++count;
      int next = g[v][0] == prev ? g[v][1] : g[v][0];
      prev = v;
      v = next;
    }
    if (count == g.size()) return "A" + std::to_string(n);
    return std::nullopt;
  }
  std::vector<std::string> candidates;
  if (n >= 4) candidates.push_back("D" + std::to_string(n));
  if (n == 6) candidates.push_back("E6");
  if (n == 7) candidates.push_back("E7");
  if (n == 8) candidates.push_back("E8");
  for (const auto& c : candidates) {
    if (same_tree(g, affine_template(c))) return c;
  }
  return std::nullopt;
}

std::string quiver_dot(const Quiver& q, const std::string& title) {
  const bool sym = is_symmetric(q);
  std::ostringstream os;
  os << (sym ? "graph" : "digraph") << " \"" << title << "\" {\n";
  for (std::size_t i = 0; i < q.size(); ++i) {
    os << "  v" << i << " [label=\"" << q.names[i] << " (dim " << q.dims[i] << ")\"];\n";
  }
  const std::string undirected = sym ? " -- " : " -> ";
  const std::string undirected_attr = sym ? "" : " [dir=none]";
  for (std::size_t i = 0; i < q.size(); ++i) {
    for (std::size_t j = i; j < q.size(); ++j) {
      const long aij = q.adjacency[i][j], aji = q.adjacency[j][i];
      if (aij == aji) {
        for (long r = 0; r < aij; ++r) os << "  v" << i << undirected << "v" << j << undirected_attr << ";\n";
        continue;
      }
      for (long r = 0; r < aij; ++r) os << "  v" << i << " -> v" << j << ";\n";
      for (long r = 0; r < aji; ++r) os << "  v" << j << " -> v" << i << ";\n";
    }
  }
  os << "}\n";
  return os.str();
}

std::string quiver_json(const Quiver& q, const std::string& title) {
  nlohmann::ordered_json j;
  j["group"] = title;
  j["vertices"] = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < q.size(); ++i) j["vertices"].push_back({{"name", q.names[i]}, {"dim", q.dims[i]}});
  j["adjacency"] = q.adjacency;
  return j.dump(2) + "\n";
}

}  // namespace mckay
