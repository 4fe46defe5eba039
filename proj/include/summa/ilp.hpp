#pragma once

#include <string>
#include <vector>

#include "summa/linalg.hpp"

namespace summa::ilp {

// 0-1 coverage/redundancy instance:
//   max  sum_i rel_i X_i - sum_{i<j} red_ij X_i X_j   s.t.  sum l_i X_i <= budget
struct IlpInstance {
  int n = 0;
  std::vector<double> relevance;
  linalg::Matrix redundancy;  // symmetric, zero diagonal, non-negative
  std::vector<int> lengths;   // words, > 0
  int budget = 0;             // L_max words

  void validate() const;  // throws std::invalid_argument
};

struct IlpSolution {
  std::vector<int> selected;  // ascending indices
  double objective = 0;
  bool optimal = true;
  bool infeasible = false;  // no single sentence fits the budget
  long nodes_explored = 0;
};

struct SolverOptions {
  int max_n = 200;
  long node_limit = 50'000'000;
};

struct NodeLimitExceeded : std::runtime_error {
  explicit NodeLimitExceeded(const std::string& what) : std::runtime_error(what) {}
};

// Depth-first branch and bound on X_i in descending rel_i/l_i order; the
// bound is the fractional relevance knapsack over undecided items (valid
// because redundancy only subtracts). Exact and deterministic.
IlpSolution branch_and_bound(const IlpInstance& inst, const SolverOptions& opt = {});

// Both models share the mathematical form; these wrappers name the intent.
IlpSolution solve_mdr(const IlpInstance& inst, const SolverOptions& opt = {});
IlpSolution solve_lexnet_ilp(const IlpInstance& inst, const SolverOptions& opt = {});

double objective_of(const IlpInstance& inst, const std::vector<int>& selected);

// Min-max normalize each score vector to [0,1] (constant vectors become
// all-0.5), then sum.
std::vector<double> hybridize_relevance(const std::vector<std::vector<double>>& vectors);

std::string to_csv(const IlpInstance& inst);
IlpInstance from_csv(const std::string& csv);

}  // namespace summa::ilp
