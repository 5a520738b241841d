#include "coherence/coupling_graph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <queue>
#include <sstream>
#include <stdexcept>

#include "coherence/errors.hpp"

namespace coherence {

CouplingGraph::CouplingGraph(int num_physical, const std::vector<std::pair<int, int>>& edges)
    : num_physical_(num_physical) {
  if (num_physical < 1) throw std::invalid_argument("coupling graph needs at least one qubit");
  adjacency_.resize(static_cast<std::size_t>(num_physical));
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= num_physical || v >= num_physical) {
      throw std::invalid_argument("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                                  ") references a qubit outside 0.." +
                                  std::to_string(num_physical - 1));
    }
    if (u == v) throw std::invalid_argument("self-loop on qubit " + std::to_string(u));
    if (u > v) std::swap(u, v);
    if (edges_.insert({u, v}).second) {
      adjacency_[static_cast<std::size_t>(u)].push_back(v);
      adjacency_[static_cast<std::size_t>(v)].push_back(u);
    }
  }
  for (auto& adj : adjacency_) std::sort(adj.begin(), adj.end());

  dist_.assign(static_cast<std::size_t>(num_physical),
               std::vector<int>(static_cast<std::size_t>(num_physical), kUnreachable));
  for (int s = 0; s < num_physical; ++s) {
    auto& row = dist_[static_cast<std::size_t>(s)];
    std::queue<int> frontier;
    row[static_cast<std::size_t>(s)] = 0;
    frontier.push(s);
    while (!frontier.empty()) {
      const int u = frontier.front();
      frontier.pop();
      for (int v : adjacency_[static_cast<std::size_t>(u)]) {
        if (row[static_cast<std::size_t>(v)] == kUnreachable) {
          row[static_cast<std::size_t>(v)] = row[static_cast<std::size_t>(u)] + 1;
          frontier.push(v);
        }
      }
    }
  }
}

CouplingGraph CouplingGraph::linear(int size) {
  if (size < 2) throw std::invalid_argument("linear graph needs at least 2 qubits");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i + 1 < size; ++i) edges.emplace_back(i, i + 1);
  return CouplingGraph(size, edges);
}

CouplingGraph CouplingGraph::ring(int size) {
  if (size < 2) throw std::invalid_argument("ring graph needs at least 2 qubits");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < size; ++i) edges.emplace_back(i, (i + 1) % size);
  return CouplingGraph(size, edges);
}

bool CouplingGraph::adjacent(int u, int v) const {
  return edges_.contains({std::min(u, v), std::max(u, v)});
}

int CouplingGraph::max_degree() const {
  std::size_t d = 0;
  for (const auto& adj : adjacency_) d = std::max(d, adj.size());
  return static_cast<int>(d);
}

int CouplingGraph::distance(int u, int v) const {
  if (u < 0 || v < 0 || u >= num_physical_ || v >= num_physical_) {
    throw std::out_of_range("physical qubit outside coupling graph");
  }
  return dist_[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)];
}

bool CouplingGraph::is_connected(const std::vector<int>& subset) const {
  for (int v : subset) {
    if (distance(subset.front(), v) == kUnreachable) return false;
  }
  return true;
}

bool CouplingGraph::is_connected() const {
  std::vector<int> all(static_cast<std::size_t>(num_physical_));
  for (int i = 0; i < num_physical_; ++i) all[static_cast<std::size_t>(i)] = i;
  return is_connected(all);
}

CouplingGraph make_graph(GraphKind kind, int size, const std::filesystem::path& path) {
  switch (kind) {
    case GraphKind::linear: return CouplingGraph::linear(size);
    case GraphKind::ring: return CouplingGraph::ring(size);
    case GraphKind::from_file: return load_graph(path);
  }
  throw std::invalid_argument("unknown graph kind");
}

CouplingGraph parse_graph(std::istream& in, const std::string& source) {
  std::vector<std::pair<int, int>> edges;
  int max_index = -1;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    int u = 0;
    int v = 0;
    if (!(ls >> u)) {
      if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
      throw ParseError(source, line_no, "expected 'u v'");
    }
    std::string rest;
    if (!(ls >> v) || (ls >> rest)) throw ParseError(source, line_no, "expected exactly 'u v'");
    if (u < 0 || v < 0) throw ParseError(source, line_no, "negative qubit index");
    if (u == v) throw ParseError(source, line_no, "self-loop");
    edges.emplace_back(u, v);
    max_index = std::max({max_index, u, v});
  }
  if (edges.empty()) throw ParseError(source, 0, "no edges");
  return CouplingGraph(max_index + 1, edges);
}

CouplingGraph load_graph(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open graph file " + path.string());
  return parse_graph(in, path.string());
}

}  // namespace coherence
