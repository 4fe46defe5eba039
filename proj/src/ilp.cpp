#include "summa/ilp.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace summa::ilp {

void IlpInstance::validate() const {
  if (n < 0 || static_cast<std::size_t>(n) != relevance.size() ||
      static_cast<std::size_t>(n) != lengths.size() ||
      redundancy.rows() != static_cast<std::size_t>(n) ||
      redundancy.cols() != static_cast<std::size_t>(n))
    throw std::invalid_argument("IlpInstance: inconsistent sizes");
  for (double r : relevance)
    if (!std::isfinite(r)) throw std::invalid_argument("IlpInstance: non-finite relevance");
  for (int l : lengths)
    if (l <= 0) throw std::invalid_argument("IlpInstance: sentence length must be positive");
  for (int i = 0; i < n; ++i) {
    if (redundancy(static_cast<std::size_t>(i), static_cast<std::size_t>(i)) != 0)
      throw std::invalid_argument("IlpInstance: redundancy diagonal must be zero");
    for (int j = 0; j < n; ++j) {
      const double r = redundancy(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
      if (r < 0 || !std::isfinite(r))
        throw std::invalid_argument("IlpInstance: redundancy must be non-negative and finite");
      if (r != redundancy(static_cast<std::size_t>(j), static_cast<std::size_t>(i)))
        throw std::invalid_argument("IlpInstance: redundancy must be symmetric");
    }
  }
}

double objective_of(const IlpInstance& inst, const std::vector<int>& selected) {
  double obj = 0;
  for (int i : selected) obj += inst.relevance[static_cast<std::size_t>(i)];
  for (std::size_t a = 0; a < selected.size(); ++a)
    for (std::size_t b = a + 1; b < selected.size(); ++b)
      obj -= inst.redundancy(static_cast<std::size_t>(selected[a]),
                             static_cast<std::size_t>(selected[b]));
  return obj;
}

namespace {

struct SearchState {
  const IlpInstance* inst = nullptr;
  std::vector<int> order;    // items in descending rel/length
  std::vector<int> chosen;   // indices (original) currently in
  std::vector<int> best_set;
  double best_obj = 0;
  long nodes = 0;
  long node_limit = 0;
  bool hit_limit = false;
};

// fractional knapsack over the still-undecided tail, redundancy ignored
double upper_bound(const SearchState& st, std::size_t depth, double current_obj, int used_words) {
  double bound = current_obj;
  int room = st.inst->budget - used_words;
  for (std::size_t k = depth; k < st.order.size() && room > 0; ++k) {
    const int idx = st.order[k];
    const double rel = st.inst->relevance[static_cast<std::size_t>(idx)];
    if (rel <= 0) continue;
    const int len = st.inst->lengths[static_cast<std::size_t>(idx)];
    if (len <= room) {
      bound += rel;
      room -= len;
    } else {
      bound += rel * static_cast<double>(room) / len;
      room = 0;
    }
  }
  return bound;
}

void search(SearchState& st, std::size_t depth, double current_obj, int used_words) {
  ++st.nodes;
  if (st.node_limit > 0 && st.nodes > st.node_limit) {
    st.hit_limit = true;
    return;
  }
  if (current_obj > st.best_obj) {
    st.best_obj = current_obj;
    st.best_set = st.chosen;
  }
  if (depth == st.order.size()) return;
  if (upper_bound(st, depth, current_obj, used_words) <= st.best_obj) return;

  const int idx = st.order[depth];
  const int len = st.inst->lengths[static_cast<std::size_t>(idx)];
  if (used_words + len <= st.inst->budget) {
    double delta = st.inst->relevance[static_cast<std::size_t>(idx)];
    for (int j : st.chosen)
      delta -= st.inst->redundancy(static_cast<std::size_t>(idx), static_cast<std::size_t>(j));
    st.chosen.push_back(idx);
    search(st, depth + 1, current_obj + delta, used_words + len);
    st.chosen.pop_back();
    if (st.hit_limit) return;
  }
  search(st, depth + 1, current_obj, used_words);
}

}  // namespace

IlpSolution branch_and_bound(const IlpInstance& inst, const SolverOptions& opt) {
  inst.validate();
  if (inst.n > opt.max_n)
    throw std::invalid_argument("branch_and_bound: instance exceeds the configured size cap");

  SearchState st;
  st.inst = &inst;
  st.node_limit = opt.node_limit;
  st.order.resize(static_cast<std::size_t>(inst.n));
  std::iota(st.order.begin(), st.order.end(), 0);
  std::stable_sort(st.order.begin(), st.order.end(), [&](int a, int b) {
    return inst.relevance[static_cast<std::size_t>(a)] / inst.lengths[static_cast<std::size_t>(a)] >
           inst.relevance[static_cast<std::size_t>(b)] / inst.lengths[static_cast<std::size_t>(b)];
  });

  // empty selection (objective 0) is always feasible and is the incumbent
  search(st, 0, 0.0, 0);

  IlpSolution sol;
  sol.selected = st.best_set;
  std::sort(sol.selected.begin(), sol.selected.end());
  sol.objective = objective_of(inst, sol.selected);
  sol.nodes_explored = st.nodes;
  sol.optimal = !st.hit_limit;
  sol.infeasible =
      inst.n > 0 && *std::min_element(inst.lengths.begin(), inst.lengths.end()) > inst.budget;
  return sol;
}

IlpSolution solve_mdr(const IlpInstance& inst, const SolverOptions& opt) {
  return branch_and_bound(inst, opt);
}

IlpSolution solve_lexnet_ilp(const IlpInstance& inst, const SolverOptions& opt) {
  return branch_and_bound(inst, opt);
}

std::vector<double> hybridize_relevance(const std::vector<std::vector<double>>& vectors) {
  if (vectors.empty()) throw std::invalid_argument("hybridize_relevance: no vectors");
  const std::size_t n = vectors.front().size();
  std::vector<double> out(n, 0.0);
  for (const std::vector<double>& v : vectors) {
    if (v.size() != n) throw std::invalid_argument("hybridize_relevance: length mismatch");
    const auto [mn, mx] = std::minmax_element(v.begin(), v.end());
    for (std::size_t i = 0; i < n; ++i)
      out[i] += *mx > *mn ? (v[i] - *mn) / (*mx - *mn) : 0.5;
  }
  return out;
}

std::string to_csv(const IlpInstance& inst) {
  std::ostringstream out;
  out << "n," << inst.n << ",budget," << inst.budget << "\n";
  out << "index,relevance,length\n";
  for (int i = 0; i < inst.n; ++i)
    out << i << "," << inst.relevance[static_cast<std::size_t>(i)] << ","
        << inst.lengths[static_cast<std::size_t>(i)] << "\n";
  out << "redundancy\n";
  for (int i = 0; i < inst.n; ++i) {
    for (int j = 0; j < inst.n; ++j)
      out << (j ? "," : "") << inst.redundancy(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
    out << "\n";
  }
  return out.str();
}

IlpInstance from_csv(const std::string& csv) {
  std::istringstream in(csv);
  std::string line;
  auto next_line = [&]() {
    if (!std::getline(in, line)) throw std::invalid_argument("ilp csv: truncated");
    return line;
  };
  auto split = [](const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
      if (c == ',') {
        out.push_back(cur);
        cur.clear();
      } else {
        cur.push_back(c);
      }
    }
    out.push_back(cur);
    return out;
  };

  IlpInstance inst;
  auto head = split(next_line());
  if (head.size() != 4 || head[0] != "n" || head[2] != "budget")
    throw std::invalid_argument("ilp csv: bad header");
  inst.n = std::stoi(head[1]);
  inst.budget = std::stoi(head[3]);
  next_line();  // column header
  inst.relevance.resize(static_cast<std::size_t>(inst.n));
  inst.lengths.resize(static_cast<std::size_t>(inst.n));
  for (int i = 0; i < inst.n; ++i) {
    const auto cols = split(next_line());
    if (cols.size() != 3) throw std::invalid_argument("ilp csv: bad item row");
    inst.relevance[static_cast<std::size_t>(std::stoi(cols[0]))] = std::stod(cols[1]);
    inst.lengths[static_cast<std::size_t>(std::stoi(cols[0]))] = std::stoi(cols[2]);
  }
  if (next_line() != "redundancy") throw std::invalid_argument("ilp csv: missing redundancy block");
  inst.redundancy = linalg::Matrix(static_cast<std::size_t>(inst.n), static_cast<std::size_t>(inst.n));
  for (int i = 0; i < inst.n; ++i) {
    const auto cols = split(next_line());
    if (cols.size() != static_cast<std::size_t>(inst.n))
      throw std::invalid_argument("ilp csv: bad redundancy row");
    for (int j = 0; j < inst.n; ++j)
      inst.redundancy(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = std::stod(cols[static_cast<std::size_t>(j)]);
  }
  inst.validate();
  return inst;
}

}  // namespace summa::ilp
