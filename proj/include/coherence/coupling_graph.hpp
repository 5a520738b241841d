#pragma once

#include <filesystem>
#include <iosfwd>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace coherence {

/// Undirected hardware connectivity over physical qubits 0..num_physical-1.
class CouplingGraph {
 public:
  static constexpr int kUnreachable = -1;

  CouplingGraph(int num_physical, const std::vector<std::pair<int, int>>& edges);

  static CouplingGraph linear(int size);
  static CouplingGraph ring(int size);

  int num_physical() const { return num_physical_; }
  /// Edges as (u, v) with u < v.
  const std::set<std::pair<int, int>>& edges() const { return edges_; }
  const std::vector<int>& neighbors(int q) const { return adjacency_.at(static_cast<std::size_t>(q)); }
  bool adjacent(int u, int v) const;
  int max_degree() const;

  /// Hop distance, or kUnreachable.
  int distance(int u, int v) const;
  bool is_connected() const;
  bool is_connected(const std::vector<int>& subset) const;

 private:
  int num_physical_;
  std::set<std::pair<int, int>> edges_;
  std::vector<std::vector<int>> adjacency_;
  std::vector<std::vector<int>> dist_;
};

enum class GraphKind { linear, ring, from_file };

/// `size` is used for linear/ring; `path` for from_file.
CouplingGraph make_graph(GraphKind kind, int size, const std::filesystem::path& path = {});

/// Edge list text: one "u v" per line, '#' starts a comment.
CouplingGraph parse_graph(std::istream& in, const std::string& source_name);
CouplingGraph load_graph(const std::filesystem::path& path);

}  // namespace coherence
