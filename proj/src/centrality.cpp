#include "summa/centrality.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <numeric>
#include <queue>
#include <stack>

namespace summa::centrality {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::vector<double> uniform_scores(int n) {
  return std::vector<double>(static_cast<std::size_t>(n),
                             n > 0 ? 1.0 / std::sqrt(static_cast<double>(n)) : 0.0);
}

// hop (or inverse-weight) shortest-path distances from source
std::vector<double> shortest_distances(const Graph& g, int source, bool inverse_weight) {
  const std::size_t n = static_cast<std::size_t>(g.n);
  std::vector<double> dist(n, kInf);
  dist[static_cast<std::size_t>(source)] = 0;
  if (!inverse_weight) {
    std::deque<int> queue{source};
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop_front();
      for (int v = 0; v < g.n; ++v) {
        if (g.weight(u, v) <= 0 || dist[static_cast<std::size_t>(v)] < kInf) continue;
        dist[static_cast<std::size_t>(v)] = dist[static_cast<std::size_t>(u)] + 1;
        queue.push_back(v);
      }
    }
  } else {
    using Item = std::pair<double, int>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
    pq.emplace(0.0, source);
    while (!pq.empty()) {
      const auto [d, u] = pq.top();
      pq.pop();
      if (d > dist[static_cast<std::size_t>(u)]) continue;
      for (int v = 0; v < g.n; ++v) {
        const double w = g.weight(u, v);
        if (w <= 0) continue;
        const double nd = d + 1.0 / w;
        if (nd < dist[static_cast<std::size_t>(v)]) {
          dist[static_cast<std::size_t>(v)] = nd;
          pq.emplace(nd, v);
        }
      }
    }
  }
  return dist;
}

}  // namespace

Graph Graph::undirected(int nodes, const std::vector<std::tuple<int, int, double>>& edges) {
  Graph g(nodes);
  for (const auto& [u, v, w] : edges) g.add_edge(u, v, w);
  return g;
}

bool Graph::has_edges() const {
  for (std::size_t i = 0; i < adj.rows(); ++i)
    for (std::size_t j = 0; j < adj.cols(); ++j)
      if (adj(i, j) != 0) return true;
  return false;
}

bool Graph::symmetric(double tol) const {
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (std::abs(weight(i, j) - weight(j, i)) > tol) return false;
  return true;
}

std::vector<double> degree(const Graph& g, bool normalized) {
  std::vector<double> out(static_cast<std::size_t>(g.n), 0.0);
  for (int i = 0; i < g.n; ++i) {
    double sum = 0;
    for (int j = 0; j < g.n; ++j) sum += g.weight(i, j);
    out[static_cast<std::size_t>(i)] = normalized && g.n > 1 ? sum / (g.n - 1) : sum;
  }
  return out;
}

std::vector<double> eigenvector(const Graph& g, const Params& p) {
  if (!g.has_edges()) return uniform_scores(g.n);
  const std::size_t n = static_cast<std::size_t>(g.n);
  // power iteration on A + shift*I: same eigenvectors, and the shift stops
  // the +/-lambda oscillation bipartite-like graphs produce
  double shift = 0;
  for (std::size_t i = 0; i < n; ++i) {
    double row = 0;
    for (std::size_t j = 0; j < n; ++j) row += std::abs(g.adj(i, j));
    shift = std::max(shift, row);
  }
  std::vector<double> x(n, 1.0 / std::sqrt(static_cast<double>(n)));
  for (int it = 0; it < p.max_iter; ++it) {
    std::vector<double> y(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) y[i] += g.adj(i, j) * x[j];
      y[i] += shift * x[i];
    }
    const double norm = linalg::norm2(y);
    if (norm == 0) return uniform_scores(g.n);
    for (double& v : y) v /= norm;
    double delta = 0;
    for (std::size_t i = 0; i < n; ++i) delta = std::max(delta, std::abs(y[i] - x[i]));
    x = std::move(y);
    if (delta < p.tol) {
      std::size_t arg = 0;
      double best = -1;
      for (std::size_t i = 0; i < n; ++i)
        if (std::abs(x[i]) > best) {
          best = std::abs(x[i]);
          arg = i;
        }
      if (x[arg] < 0)
        for (double& v : x) v = -v;
      return x;
    }
  }
  throw linalg::NoConvergence("eigenvector: power iteration did not converge");
}

std::vector<double> closeness(const Graph& g, bool inverse_weight_distance) {
  std::vector<double> out(static_cast<std::size_t>(g.n), 0.0);
  for (int i = 0; i < g.n; ++i) {
    const std::vector<double> dist = shortest_distances(g, i, inverse_weight_distance);
    double sum = 0;
    for (int v = 0; v < g.n; ++v) {
      if (v == i || dist[static_cast<std::size_t>(v)] == kInf) continue;
      sum += dist[static_cast<std::size_t>(v)];
    }
    out[static_cast<std::size_t>(i)] = sum > 0 ? 1.0 / sum : 0.0;
  }
  return out;
}

std::vector<double> alpha_centrality(const Graph& g, const Params& p) {
  const std::size_t n = static_cast<std::size_t>(g.n);
  std::vector<double> e =
      p.exogenous.value_or(std::vector<double>(n, 1.0));
  if (e.size() != n) throw std::invalid_argument("alpha_centrality: exogenous size mismatch");
  linalg::Matrix system(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      system(i, j) = (i == j ? 1.0 : 0.0) - p.alpha * g.adj(j, i);  // A^T
  return linalg::solve(std::move(system), std::move(e));
}

std::vector<double> betweenness(const Graph& g, bool inverse_weight_distance) {
  const std::size_t n = static_cast<std::size_t>(g.n);
  std::vector<double> cb(n, 0.0);
  for (int s = 0; s < g.n; ++s) {
    // single-source shortest paths with path counting
    std::vector<double> dist(n, kInf), sigma(n, 0.0), delta(n, 0.0);
    std::vector<std::vector<int>> preds(n);
    std::vector<int> finish_order;
    dist[static_cast<std::size_t>(s)] = 0;
    sigma[static_cast<std::size_t>(s)] = 1;

    if (!inverse_weight_distance) {
      std::deque<int> queue{s};
      while (!queue.empty()) {
        const int u = queue.front();
        queue.pop_front();
        finish_order.push_back(u);
        for (int v = 0; v < g.n; ++v) {
          if (g.weight(u, v) <= 0) continue;
          const double du = dist[static_cast<std::size_t>(u)];
          if (dist[static_cast<std::size_t>(v)] == kInf) {
            dist[static_cast<std::size_t>(v)] = du + 1;
            queue.push_back(v);
          }
          if (dist[static_cast<std::size_t>(v)] == du + 1) {
            sigma[static_cast<std::size_t>(v)] += sigma[static_cast<std::size_t>(u)];
            preds[static_cast<std::size_t>(v)].push_back(u);
          }
        }
      }
    } else {
      using Item = std::pair<double, int>;
      std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
      pq.emplace(0.0, s);
      std::vector<bool> done(n, false);
      while (!pq.empty()) {
        const auto [d, u] = pq.top();
        pq.pop();
        if (done[static_cast<std::size_t>(u)]) continue;
        done[static_cast<std::size_t>(u)] = true;
        finish_order.push_back(u);
        for (int v = 0; v < g.n; ++v) {
          const double w = g.weight(u, v);
          if (w <= 0) continue;
          const double nd = d + 1.0 / w;
          if (nd < dist[static_cast<std::size_t>(v)] - 1e-15) {
            dist[static_cast<std::size_t>(v)] = nd;
            sigma[static_cast<std::size_t>(v)] = sigma[static_cast<std::size_t>(u)];
            preds[static_cast<std::size_t>(v)] = {u};
            pq.emplace(nd, v);
          } else if (std::abs(nd - dist[static_cast<std::size_t>(v)]) <= 1e-15) {
            sigma[static_cast<std::size_t>(v)] += sigma[static_cast<std::size_t>(u)];
            preds[static_cast<std::size_t>(v)].push_back(u);
          }
        }
      }
    }

    for (auto it = finish_order.rbegin(); it != finish_order.rend(); ++it) {
      const int w = *it;
      for (int v : preds[static_cast<std::size_t>(w)]) {
        delta[static_cast<std::size_t>(v)] += sigma[static_cast<std::size_t>(v)] /
                                              sigma[static_cast<std::size_t>(w)] *
                                              (1.0 + delta[static_cast<std::size_t>(w)]);
      }
      if (w != s) cb[static_cast<std::size_t>(w)] += delta[static_cast<std::size_t>(w)];
    }
  }
  for (double& v : cb) v /= 2.0;  // undirected pairs counted once
  return cb;
}

double max_eigenvalue(const Graph& g) {
  if (!g.has_edges()) return 0.0;
  const linalg::EigResult eig = linalg::eigh_symmetric(g.adj);
  double mx = 0;
  for (double v : eig.values) mx = std::max(mx, std::abs(v));
  return mx;
}

std::vector<double> bonpow(const Graph& g, const Params& p) {
  const std::size_t n = static_cast<std::size_t>(g.n);
  const double lambda = max_eigenvalue(g);
  const double beta = p.beta.value_or(lambda > 0 ? 1.0 / (2.0 * lambda) : 0.0);
  if (lambda > 0 && std::abs(beta) >= 1.0 / lambda)
    throw BetaOutOfRange("bonpow: |beta| must stay below 1/lambda_max = " +
                         std::to_string(1.0 / lambda));
  // (I - beta A) x = A 1
  linalg::Matrix system(n, n);
  std::vector<double> rhs(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      system(i, j) = (i == j ? 1.0 : 0.0) - beta * g.adj(i, j);
      rhs[i] += g.adj(i, j);
    }
  }
  std::vector<double> x = linalg::solve(std::move(system), std::move(rhs));
  const double norm = linalg::norm2(x);
  if (norm > 0) {
    const double scale = std::sqrt(static_cast<double>(n)) / norm;
    for (double& v : x) v *= scale;
  }
  return x;
}

HitsScores hits(const Graph& g, const Params& p) {
  HitsScores out;
  if (!g.has_edges()) {
    out.hub = out.authority = uniform_scores(g.n);
    return out;
  }
  const std::size_t n = static_cast<std::size_t>(g.n);
  std::vector<double> x(n, 1.0 / std::sqrt(static_cast<double>(n)));  // authority
  std::vector<double> y = x;                                          // hub
  for (int it = 0; it < p.max_iter; ++it) {
    std::vector<double> nx(n, 0.0), ny(n, 0.0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) nx[i] += g.adj(j, i) * y[j];
    const double nxn = linalg::norm2(nx);
    for (double& v : nx) v /= nxn;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) ny[i] += g.adj(i, j) * nx[j];
    const double nyn = linalg::norm2(ny);
    for (double& v : ny) v /= nyn;
    double delta = 0;
    for (std::size_t i = 0; i < n; ++i)
      delta = std::max({delta, std::abs(nx[i] - x[i]), std::abs(ny[i] - y[i])});
    x = std::move(nx);
    y = std::move(ny);
    out.iterations = it + 1;
    if (delta < p.tol) {
      out.authority = std::move(x);
      out.hub = std::move(y);
      return out;
    }
  }
  throw linalg::NoConvergence("hits: iteration did not converge");
}

std::vector<double> subgraph_centrality(const Graph& g) {
  if (!g.symmetric(1e-12)) throw std::invalid_argument("subgraph_centrality: adjacency not symmetric");
  const linalg::EigResult eig = linalg::eigh_symmetric(g.adj, 1e-10);
  const std::size_t n = static_cast<std::size_t>(g.n);
  std::vector<double> out(n, 0.0);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t i = 0; i < n; ++i)
      out[u] += eig.vectors(u, i) * eig.vectors(u, i) * std::exp(eig.values[i]);
  return out;
}

std::vector<double> pagerank(const Graph& g, const Params& p) {
  if (p.damping <= 0 || p.damping >= 1)
    throw std::invalid_argument("pagerank: damping must lie in (0,1)");
  const std::size_t n = static_cast<std::size_t>(g.n);
  std::vector<double> out_weight(n, 0.0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out_weight[i] += g.adj(i, j);

  std::vector<double> pr(n, 1.0 / static_cast<double>(n));
  for (int it = 0; it < p.max_iter; ++it) {
    std::vector<double> next(n, (1.0 - p.damping) / static_cast<double>(n));
    double dangling = 0;
    for (std::size_t j = 0; j < n; ++j)
      if (out_weight[j] == 0) dangling += pr[j];
    for (std::size_t i = 0; i < n; ++i) {
      double in_sum = 0;
      for (std::size_t j = 0; j < n; ++j) {
        if (out_weight[j] == 0) continue;
        in_sum += pr[j] * g.adj(j, i) / out_weight[j];
      }
      next[i] += p.damping * (in_sum + dangling / static_cast<double>(n));
    }
    double delta = 0;
    for (std::size_t i = 0; i < n; ++i) delta += std::abs(next[i] - pr[i]);
    pr = std::move(next);
    if (delta < p.tol) {
      const double total = std::accumulate(pr.begin(), pr.end(), 0.0);
      for (double& v : pr) v /= total;
      return pr;
    }
  }
  throw linalg::NoConvergence("pagerank: power iteration did not converge");
}

std::vector<double> compute(Measure m, const Graph& g, const Params& p) {
  switch (m) {
    case Measure::Degree: return degree(g);
    case Measure::Eigenvector: return eigenvector(g, p);
    case Measure::Closeness: return closeness(g);
    case Measure::Alpha: return alpha_centrality(g, p);
    case Measure::Betweenness: return betweenness(g);
    case Measure::Bonpow: return bonpow(g, p);
    case Measure::Hits: return hits(g, p).authority;
    case Measure::Subgraph: return subgraph_centrality(g);
    case Measure::PageRank: return pagerank(g, p);
  }
  throw std::invalid_argument("compute: unknown measure");
}

std::optional<Measure> measure_from_name(const std::string& name) {
  if (name == "degree") return Measure::Degree;
  if (name == "eigen" || name == "eigenvector") return Measure::Eigenvector;
  if (name == "closeness") return Measure::Closeness;
  if (name == "alpha") return Measure::Alpha;
  if (name == "betweenness") return Measure::Betweenness;
  if (name == "bonpow") return Measure::Bonpow;
  if (name == "hits") return Measure::Hits;
  if (name == "subgraph") return Measure::Subgraph;
  if (name == "pagerank") return Measure::PageRank;
  return std::nullopt;
}

const char* measure_name(Measure m) {
  switch (m) {
    case Measure::Degree: return "degree";
    case Measure::Eigenvector: return "eigen";
    case Measure::Closeness: return "closeness";
    case Measure::Alpha: return "alpha";
    case Measure::Betweenness: return "betweenness";
    case Measure::Bonpow: return "bonpow";
    case Measure::Hits: return "hits";
    case Measure::Subgraph: return "subgraph";
    case Measure::PageRank: return "pagerank";
  }
  return "?";
}

}  // namespace summa::centrality
