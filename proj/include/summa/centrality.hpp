#pragma once

#include <optional>
#include <string>
#include <vector>

#include "summa/linalg.hpp"

namespace summa::centrality {

// Node-weighted graph as a dense adjacency. Lexical networks are symmetric
// with a zero diagonal; alpha centrality also accepts directed input.
struct Graph {
  int n = 0;
  linalg::Matrix adj;

  Graph() = default;
  explicit Graph(int nodes) : n(nodes), adj(static_cast<std::size_t>(nodes), static_cast<std::size_t>(nodes)) {}

  static Graph undirected(int nodes, const std::vector<std::tuple<int, int, double>>& edges);

  void add_edge(int u, int v, double w) {  // undirected
    adj(static_cast<std::size_t>(u), static_cast<std::size_t>(v)) += w;
    adj(static_cast<std::size_t>(v), static_cast<std::size_t>(u)) += w;
  }
  double weight(int u, int v) const {
    return adj(static_cast<std::size_t>(u), static_cast<std::size_t>(v));
  }
  bool has_edges() const;
  bool symmetric(double tol = 0.0) const;
};

struct Params {
  double alpha = 0.9;                // alpha centrality
  std::optional<double> beta;        // Bonacich; default 1/(2 lambda_max)
  double damping = 0.85;             // PageRank
  std::optional<std::vector<double>> exogenous;  // alpha centrality e; default ones
  double tol = 1e-10;
  int max_iter = 1000;
};

struct BetaOutOfRange : std::invalid_argument {
  explicit BetaOutOfRange(const std::string& what) : std::invalid_argument(what) {}
};

// Weighted degree; normalized divides by n-1.
std::vector<double> degree(const Graph& g, bool normalized = false);

// Dominant eigenvector by power iteration, L2-normalized, non-negative.
// Edgeless graphs get uniform scores.
std::vector<double> eigenvector(const Graph& g, const Params& p = {});

// 1 / sum of hop distances to reachable nodes (per component); isolated
// nodes score 0. inverse_weight_distance switches edge length to 1/w.
std::vector<double> closeness(const Graph& g, bool inverse_weight_distance = false);

// x = (I - alpha A^T)^-1 e; throws linalg::SingularSystem at resonance.
std::vector<double> alpha_centrality(const Graph& g, const Params& p = {});

// Brandes accumulation over hop-metric shortest paths; undirected pairs
// counted once.
std::vector<double> betweenness(const Graph& g, bool inverse_weight_distance = false);

// CBP = alpha (I - beta A)^-1 A 1, scaled so ||CBP|| = sqrt(n).
std::vector<double> bonpow(const Graph& g, const Params& p = {});

struct HitsScores {
  std::vector<double> hub;
  std::vector<double> authority;
  int iterations = 0;
};
HitsScores hits(const Graph& g, const Params& p = {});

// C_S(u) = sum_i V[u][i]^2 e^(lambda_i) over the full eigendecomposition.
std::vector<double> subgraph_centrality(const Graph& g);

// Teleport variant (1-d)/N; dangling mass spread uniformly; sums to 1.
std::vector<double> pagerank(const Graph& g, const Params& p = {});

double max_eigenvalue(const Graph& g);

enum class Measure {
  Degree, Eigenvector, Closeness, Alpha, Betweenness, Bonpow, Hits, Subgraph, PageRank
};

// hits contributes its authority vector.
std::vector<double> compute(Measure m, const Graph& g, const Params& p = {});

std::optional<Measure> measure_from_name(const std::string& name);
const char* measure_name(Measure m);

}  // namespace summa::centrality
