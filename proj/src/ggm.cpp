#include "nsmax/ggm.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>

#include "nsmax/csv.hpp"
#include "nsmax/greedy.hpp"
#include "nsmax/seeding.hpp"
#include "nsmax/union_find.hpp"

namespace nsmax {
namespace ggm {

void TreeStructure::normalize() {
  for (auto& [a, b] : edges) {
    if (a > b) std::swap(a, b);
  }
  std::sort(edges.begin(), edges.end());
}

TreeStructure random_tree(int n, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("random_tree: n must be >= 1");
  std::mt19937_64 rng = make_rng(seed);
  std::vector<std::vector<int>> components(n);
  for (int v = 0; v < n; ++v) components[v] = {v};

  TreeStructure tree;
  tree.n_vertices = n;
  while (components.size() > 1) {
    std::uniform_int_distribution<std::size_t> pick_first(0, components.size() - 1);
    std::size_t a = pick_first(rng);
    std::uniform_int_distribution<std::size_t> pick_second(0, components.size() - 2);
    std::size_t b = pick_second(rng);
    if (b >= a) ++b;
    std::uniform_int_distribution<std::size_t> pick_ua(0, components[a].size() - 1);
    std::uniform_int_distribution<std::size_t> pick_ub(0, components[b].size() - 1);
    int u = components[a][pick_ua(rng)];
    int w = components[b][pick_ub(rng)];
    tree.edges.emplace_back(u, w);
    components[a].insert(components[a].end(), components[b].begin(), components[b].end());
    components.erase(components.begin() + b);
  }
  tree.normalize();
  return tree;
}

TreeModel make_tree_model(const TreeStructure& tree, std::uint64_t seed) {
  int n = tree.n_vertices;
  std::mt19937_64 rng = make_rng(seed);
  std::uniform_real_distribution<double> magnitude(0.2, 0.6);
  std::bernoulli_distribution negate(0.5);

  Eigen::MatrixXd precision = Eigen::MatrixXd::Zero(n, n);
  for (auto [a, b] : tree.edges) {
    double w = magnitude(rng) * (negate(rng) ? -1.0 : 1.0);
    precision(a, b) = w;
    precision(b, a) = w;
  }
  for (int i = 0; i < n; ++i) {
    precision(i, i) = 1.0 + precision.row(i).cwiseAbs().sum();
  }
  TreeModel model;
  model.precision = precision;
  model.covariance = precision.inverse();
  return model;
}

SampleSet::SampleSet(Eigen::MatrixXd samples, bool center) {
  if (samples.rows() < 1 || samples.cols() < 1) {
    throw std::invalid_argument("SampleSet: need at least one sample and one dimension");
  }
  if (center) samples.rowwise() -= samples.colwise().mean();
  n_samples_ = static_cast<int>(samples.rows());
  second_moment_ = samples.transpose() * samples / double(n_samples_);
  samples_ = std::move(samples);
  int n = static_cast<int>(second_moment_.rows());
  correlation_.resize(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      double d = std::sqrt(second_moment_(i, i) * second_moment_(j, j));
      correlation_(i, j) = d > 0.0 ? second_moment_(i, j) / d : (i == j ? 1.0 : 0.0);
    }
  }
}

SampleSet SampleSet::from_second_moment(const Eigen::MatrixXd& second_moment, int n_samples) {
  if (second_moment.rows() != second_moment.cols()) {
    throw std::invalid_argument("SampleSet: second moment must be square");
  }
  if (n_samples < 1) throw std::invalid_argument("SampleSet: n_samples must be >= 1");
  SampleSet out;
  out.n_samples_ = n_samples;
  out.second_moment_ = second_moment;
  int n = static_cast<int>(second_moment.rows());
  out.correlation_.resize(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      double d = std::sqrt(second_moment(i, i) * second_moment(j, j));
      out.correlation_(i, j) = d > 0.0 ? second_moment(i, j) / d : (i == j ? 1.0 : 0.0);
    }
  }
  return out;
}

SampleSet sample_gaussian(const Eigen::MatrixXd& covariance, int n_samples, std::uint64_t seed) {
  if (covariance.rows() != covariance.cols()) {
    throw std::invalid_argument("sample_gaussian: covariance must be square");
  }
  Eigen::LLT<Eigen::MatrixXd> llt(covariance);
  if (llt.info() != Eigen::Success) {
    throw std::invalid_argument("sample_gaussian: covariance is not positive definite");
  }
  int n = static_cast<int>(covariance.rows());
  std::mt19937_64 rng = make_rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  Eigen::MatrixXd z(n_samples, n);
  for (int r = 0; r < n_samples; ++r) {
    for (int c = 0; c < n; ++c) z(r, c) = normal(rng);
  }
  Eigen::MatrixXd x = z * llt.matrixL().transpose();
  return SampleSet(std::move(x));
}

namespace {

double edge_weight(const SampleSet& samples, int a, int b) {
  double rho = samples.correlation()(a, b);
  if (!(std::abs(rho) < 1.0)) {
    throw std::domain_error("forest_loglik: |rho| >= 1 on edge (" + std::to_string(a) + "," +
                            std::to_string(b) + "); samples are degenerate");
  }
  return -0.5 * samples.num_samples() * std::log1p(-rho * rho);
}

bool is_acyclic(int n_vertices, const std::vector<std::pair<int, int>>& edges) {
  UnionFind uf(n_vertices);
  for (auto [a, b] : edges) {
    if (!uf.unite(a, b)) return false;
  }
  return true;
}

}  // namespace

double forest_loglik(const std::vector<std::pair<int, int>>& forest, const SampleSet& samples) {
  int n = samples.dim();
  for (auto [a, b] : forest) {
    if (a < 0 || a >= n || b < 0 || b >= n || a == b) {
      throw std::invalid_argument("forest_loglik: bad edge");
    }
  }
  if (!is_acyclic(n, forest)) throw std::invalid_argument("forest_loglik: edge set has a cycle");
  double total = 0.0;
  for (auto [a, b] : forest) total += edge_weight(samples, a, b);
  return total;
}

std::vector<std::pair<int, int>> edge_ground_set(int n_vertices) {
  std::vector<std::pair<int, int>> edges;
  for (int a = 0; a < n_vertices; ++a) {
    for (int b = a + 1; b < n_vertices; ++b) edges.emplace_back(a, b);
  }
  return edges;
}

Matroid complete_graphic_matroid(int n_vertices) {
  return Matroid::graphic(n_vertices, edge_ground_set(n_vertices));
}

SetFunction forest_loglik_objective(const SampleSet& samples) {
  auto edges = edge_ground_set(samples.dim());
  std::vector<double> weights(edges.size());
  for (std::size_t e = 0; e < edges.size(); ++e) {
    weights[e] = edge_weight(samples, edges[e].first, edges[e].second);
  }
  return modular_function(std::move(weights));
}

TreeStructure greedy_tree_fit(const SampleSet& samples) {
  SetFunction objective = forest_loglik_objective(samples);
  Matroid constraint = complete_graphic_matroid(samples.dim());
  GreedyTrace trace = greedy_maximize(objective, constraint);

  auto edges = edge_ground_set(samples.dim());
  TreeStructure tree;
  tree.n_vertices = samples.dim();
  for (int e : trace.selected) tree.edges.push_back(edges[e]);
  tree.normalize();
  return tree;
}

TreeStructure mst_baseline(const SampleSet& samples) {
  auto edges = edge_ground_set(samples.dim());
  std::vector<double> weights(edges.size());
  for (std::size_t e = 0; e < edges.size(); ++e) {
    weights[e] = edge_weight(samples, edges[e].first, edges[e].second);
  }
  std::vector<int> order(edges.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&weights](int a, int b) {
    if (weights[a] != weights[b]) return weights[a] > weights[b];
    return a < b;
  });

  UnionFind uf(samples.dim());
  TreeStructure tree;
  tree.n_vertices = samples.dim();
  for (int e : order) {
    if (uf.unite(edges[e].first, edges[e].second)) tree.edges.push_back(edges[e]);
  }
  tree.normalize();
  return tree;
}

int edge_error(const TreeStructure& estimated, const TreeStructure& truth) {
  if (estimated.n_vertices != truth.n_vertices) {
    throw std::invalid_argument("edge_error: vertex counts differ");
  }
  auto normalized = [](const TreeStructure& t) {
    std::vector<std::pair<int, int>> e = t.edges;
    for (auto& [a, b] : e) {
      if (a > b) std::swap(a, b);
    }
    std::sort(e.begin(), e.end());
    return e;
  };
  auto est = normalized(estimated);
  auto tru = normalized(truth);
  int count = 0;
  for (const auto& e : est) {
    if (!std::binary_search(tru.begin(), tru.end(), e)) ++count;
  }
  return count;
}

double ggm_gamma_bound(double eigen_lower, double eigen_upper) {
  if (!(eigen_lower > 0.0) || !(eigen_upper >= eigen_lower)) {
    throw std::domain_error("ggm_gamma_bound: need 0 < L <= U");
  }
  double r = eigen_lower / eigen_upper;
  return r * r;
}

double gaussian_tree_nll(const TreeStructure& tree, const SampleSet& samples) {
  int n = samples.dim();
  double big_n = samples.num_samples();
  double log_det_terms = 0.0;
  for (int v = 0; v < n; ++v) {
    double var = samples.second_moment()(v, v);
    if (!(var > 0.0)) throw std::domain_error("gaussian_tree_nll: zero variance component");
    log_det_terms += std::log(var);
  }
  double pair_terms = 0.0;
  for (auto [a, b] : tree.edges) {
    double rho = samples.correlation()(a, b);
    pair_terms += std::log1p(-rho * rho);
  }
  return 0.5 * big_n *
         (n * std::log(2.0 * M_PI) + log_det_terms + pair_terms + n);
}

std::string samples_to_csv(const SampleSet& samples) {
  if (samples.samples().size() == 0) {
    throw std::invalid_argument("samples_to_csv: moment-only sample set");
  }
  std::vector<std::string> header;
  for (int c = 0; c < samples.dim(); ++c) header.push_back("x" + std::to_string(c));
  CsvWriter csv(std::move(header));
  for (int r = 0; r < samples.num_samples(); ++r) {
    std::vector<std::string> row;
    for (int c = 0; c < samples.dim(); ++c) row.push_back(fmt_double(samples.samples()(r, c)));
    csv.add_row(std::move(row));
  }
  return csv.str();
}

SampleSet samples_from_csv(const std::string& csv_text, bool center) {
  std::istringstream in(csv_text);
  std::string line;
  if (!std::getline(in, line)) throw std::invalid_argument("samples_from_csv: empty input");
  std::vector<std::vector<double>> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<double> row;
    std::istringstream cells(line);
    std::string cell;
    while (std::getline(cells, cell, ',')) row.push_back(std::stod(cell));
    if (!rows.empty() && rows.front().size() != row.size()) {
      throw std::invalid_argument("samples_from_csv: ragged rows");
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw std::invalid_argument("samples_from_csv: no data rows");
  Eigen::MatrixXd x(rows.size(), rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < rows[r].size(); ++c) x(r, c) = rows[r][c];
  }
  return SampleSet(std::move(x), center);
}

std::string tree_to_csv(const TreeStructure& tree) {
  CsvWriter csv({"a", "b"});
  for (auto [a, b] : tree.edges) {
    csv.add_row({std::to_string(a), std::to_string(b)});
  }
  return csv.str();
}

}  // namespace ggm
}  // namespace nsmax
