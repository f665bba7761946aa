#include "spectral_entropy/bounds.hpp"

#include <bit>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <utility>

#include "spectral_entropy/entropy.hpp"
#include "spectral_entropy/error.hpp"
#include "spectral_entropy/spectrum.hpp"

namespace spectral_entropy {

namespace {

constexpr double kHoldSlack = 1e-9;

void require_edges(const Graph& g) {
  if (g.edge_count() == 0) throw Error(ErrorCode::EmptyGraph, "bound needs at least one edge");
}

void require_parameters(double q, double r) {
  if (!(q > 0.0)) throw Error(ErrorCode::NonPositiveQ, "q must be positive");
  if (std::abs(q - 1.0) <= kDefaultLimitTolerance || std::abs(r - 1.0) <= kDefaultLimitTolerance) {
    throw Error(ErrorCode::ParameterAtLimit, "bounds need q != 1 and r != 1");
  }
}

double degree_sum(const Graph& g) { return 2.0 * static_cast<double>(g.edge_count()); }

// n * (radius / 2m)^q through the Sharma-Mittal transform.
double upper_from_radius(const Graph& g, double radius, double q, double r) {
  const double n = static_cast<double>(g.vertex_count());
  return sharma_mittal_from_moment(n * std::pow(radius / degree_sum(g), q), q, r);
}

double sum_of_squared_degrees(const Graph& g) {
  double sum = 0.0;
  for (auto d : g.degrees()) sum += static_cast<double>(d) * static_cast<double>(d);
  return sum;
}

class CliqueSearch {
 public:
  explicit CliqueSearch(const Graph& g) : neighbours_(g.vertex_count(), 0) {
    for (const auto& e : g.edges()) {
      neighbours_[e.u] |= std::uint64_t{1} << e.v;
      neighbours_[e.v] |= std::uint64_t{1} << e.u;
    }
  }

  std::size_t run() {
    const std::size_t n = neighbours_.size();
    const std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    expand(0, all);
    return best_;
  }

 private:
  void expand(std::size_t depth, std::uint64_t candidates) {
    std::vector<std::pair<std::size_t, std::size_t>> order;  // (vertex, colour)
    colour(candidates, order);
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      const auto [v, c] = *it;
      if (depth + c <= best_) return;
      const std::uint64_t next = candidates & neighbours_[v];
      if (next == 0) {
        best_ = std::max(best_, depth + 1);
      } else {
        expand(depth + 1, next);
      }
      candidates &= ~(std::uint64_t{1} << v);
    }
  }

  // Greedy sequential colouring; colour classes are independent sets, so a
  // vertex of colour c can extend the current clique by at most c.
  void colour(std::uint64_t uncoloured,
              std::vector<std::pair<std::size_t, std::size_t>>& order) const {
    std::size_t c = 0;
    while (uncoloured != 0) {
      ++c;
      std::uint64_t open = uncoloured;
      while (open != 0) {
        const auto v = static_cast<std::size_t>(std::countr_zero(open));
        const std::uint64_t bit = std::uint64_t{1} << v;
        order.emplace_back(v, c);
        uncoloured &= ~bit;
        open &= ~bit & ~neighbours_[v];
      }
    }
  }

  std::vector<std::uint64_t> neighbours_;
  std::size_t best_ = 0;
};

}  // namespace

bool bound_regime_verified(double q) { return q > 0.0 && q < 1.0; }

std::string_view to_string(BoundSide side) { return side == BoundSide::Upper ? "upper" : "lower"; }

double max_adjacent_degree_sum(const Graph& g) {
  require_edges(g);
  std::size_t best = 0;
  for (const auto& e : g.edges()) best = std::max(best, g.degree(e.u) + g.degree(e.v));
  return static_cast<double>(best);
}

double sm_upper_L(const Graph& g, double q, double r) {
  require_edges(g);
  require_parameters(q, r);
  return upper_from_radius(g, max_adjacent_degree_sum(g), q, r);
}

double sm_upper_regular(const Graph& g, double q, double r) {
  if (!regularity(g)) throw Error(ErrorCode::NotRegular, "graph is not regular");
  require_edges(g);
  require_parameters(q, r);
  const double n = static_cast<double>(g.vertex_count());
  return (std::pow(2.0, q * (1.0 - r) / (1.0 - q)) * std::pow(n, 1.0 - r) - 1.0) / (1.0 - r);
}

BigCount spanning_tree_count(const Graph& g) {
  const std::size_t n = g.vertex_count();
  if (n == 1) return 1;
  const std::size_t size = n - 1;
  // Reduced Laplacian: drop vertex 0.
  std::vector<std::vector<BigCount>> a(size, std::vector<BigCount>(size, 0));
  for (std::size_t i = 0; i < size; ++i) a[i][i] = static_cast<long long>(g.degree(i + 1));
  for (const auto& e : g.edges()) {
    if (e.u == 0 || e.v == 0) continue;
    a[e.u - 1][e.v - 1] = -1;
    a[e.v - 1][e.u - 1] = -1;
  }

  BigCount previous_pivot = 1;
  bool negate = false;
  for (std::size_t k = 0; k < size; ++k) {
    if (a[k][k] == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < size && a[swap_row][k] == 0) ++swap_row;
      if (swap_row == size) return 0;
      std::swap(a[k], a[swap_row]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < size; ++i) {
      for (std::size_t j = k + 1; j < size; ++j) {
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / previous_pivot;
      }
      a[i][k] = 0;
    }
    previous_pivot = a[k][k];
  }
  BigCount det = a[size - 1][size - 1];
  return negate ? BigCount(-det) : det;
}

double bipartite_moment_lower(const Graph& g, double q) {
  const std::size_t n = g.vertex_count();
  if (n < 3) throw Error(ErrorCode::TooSmall, "bipartite bound needs n >= 3");
  if (!is_bipartite(g)) throw Error(ErrorCode::NotBipartite, "graph has an odd cycle");
  if (!is_connected(g)) throw Error(ErrorCode::NotConnected, "graph is disconnected");
  if (!(q > 0.0)) throw Error(ErrorCode::NonPositiveQ, "q must be positive");

  const double m = static_cast<double>(g.edge_count());
  const double squares = sum_of_squared_degrees(g);
  const double trees = spanning_tree_count(g).convert_to<double>();
  const double rest = static_cast<double>(n - 2);
  return std::pow(squares / m, q) +
         rest * std::pow(trees * static_cast<double>(n) * m / squares, q / rest);
}

double bipartite_lower_L(const Graph& g, double q, double r) {
  require_parameters(q, r);
  const double moment = bipartite_moment_lower(g, q) / std::pow(degree_sum(g), q);
  return sharma_mittal_from_moment(moment, q, r);
}

double q_radius_edge_bound(const Graph& g) {
  const double n = static_cast<double>(g.vertex_count());
  const double m = static_cast<double>(g.edge_count());
  return std::sqrt(4.0 * m + 2.0 * (n - 1.0) * (n - 2.0));
}

double q_upper_edge_bound(const Graph& g, double q, double r) {
  require_edges(g);
  require_parameters(q, r);
  return upper_from_radius(g, q_radius_edge_bound(g), q, r);
}

std::size_t clique_number(const Graph& g) {
  if (g.vertex_count() > 64) {
    throw Error(ErrorCode::TooLarge, "exact clique search is limited to 64 vertices");
  }
  return CliqueSearch(g).run();
}

double q_radius_clique_bound(const Graph& g) {
  const double n = static_cast<double>(g.vertex_count());
  const double w = static_cast<double>(clique_number(g));
  return static_cast<double>(max_degree(g)) + n * (1.0 - 1.0 / w);
}

double q_upper_clique_bound(const Graph& g, double q, double r) {
  require_edges(g);
  require_parameters(q, r);
  return upper_from_radius(g, q_radius_clique_bound(g), q, r);
}

Mu1LowerBound spanning_subgraph_mu1_lower(const Graph& g) {
  require_edges(g);
  const std::size_t m = g.edge_count();
  if (m > 20) throw Error(ErrorCode::TooManyEdges, "spanning-subgraph enumeration needs m <= 20");

  // Components only change among edge endpoints; everything else stays a
  // singleton in every subgraph.
  std::vector<Vertex> touched;
  for (const auto& e : g.edges()) {
    touched.push_back(e.u);
    touched.push_back(e.v);
  }
  std::sort(touched.begin(), touched.end());
  touched.erase(std::unique(touched.begin(), touched.end()), touched.end());
  auto local = [&](Vertex v) {
    return static_cast<std::size_t>(std::lower_bound(touched.begin(), touched.end(), v) -
                                    touched.begin());
  };
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (const auto& e : g.edges()) edges.emplace_back(local(e.u), local(e.v));

  const std::size_t n = g.vertex_count();
  std::vector<std::uint64_t> histogram(n + 1, 0);  // by component count
  std::vector<std::size_t> parent(touched.size());
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::uint64_t subset = 0; subset < (std::uint64_t{1} << m); ++subset) {
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    std::size_t merges = 0;
    for (std::size_t k = 0; k < m; ++k) {
      if (!((subset >> k) & 1U)) continue;
      const auto a = find(edges[k].first);
      const auto b = find(edges[k].second);
      if (a != b) {
        parent[a] = b;
        ++merges;
      }
    }
    ++histogram[n - merges];
  }

  Mu1LowerBound out;
  long double sum = 0.0L;
  for (std::size_t c = 0; c <= n; ++c) {
    if (histogram[c] != 0) sum += static_cast<long double>(histogram[c]) * std::pow(4.0L, c);
  }
  out.subgraph_sum = static_cast<double>(sum);
  const double nn = static_cast<double>(n);
  out.value = std::pow((nn - 1.0) / degree_sum(g), nn - 1.0) * out.subgraph_sum;
  out.actual_mu1 = numeric_spectrum(g, MatrixKind::SignlessLaplacian).min();
  out.holds = out.value <= out.actual_mu1 + kHoldSlack;
  return out;
}

double q_lower_spanning_subgraph(const Graph& g, double q, double r) {
  require_parameters(q, r);
  const auto mu1 = spanning_subgraph_mu1_lower(g);
  return upper_from_radius(g, mu1.value, q, r);
}

BoundReport bound_report(const Graph& g, double q, double r, MatrixKind kind) {
  require_edges(g);
  BoundReport report;
  report.kind = kind;
  report.q = q;
  report.r = r;
  const auto ds = density_spectrum(numeric_spectrum(g, kind), g.edge_count());
  report.measured = entropy(ds, EntropyParams{EntropyFamily::SharmaMittal, q, r});

  const bool regime = bound_regime_verified(q);
  auto evaluate = [&](std::string name, BoundSide side, auto&& compute) {
    BoundEntry entry;
    entry.name = std::move(name);
    entry.side = side;
    entry.regime_verified = regime;
    try {
      entry.applicable = compute(entry);
    } catch (const Error& e) {
      entry.applicable = false;
      entry.reason = e.what();
    }
    if (entry.applicable && !regime && entry.reason.empty()) entry.reason = "q outside (0,1): direction not guaranteed";
    report.entries.push_back(std::move(entry));
  };

  if (kind == MatrixKind::Laplacian) {
    evaluate("max_degree_sum", BoundSide::Upper, [&](BoundEntry& e) {
      e.prerequisites["max_adjacent_degree_sum"] = max_adjacent_degree_sum(g);
      e.value = sm_upper_L(g, q, r);
      return true;
    });
    evaluate("regular", BoundSide::Upper, [&](BoundEntry& e) {
      if (auto k = regularity(g)) e.prerequisites["k"] = static_cast<double>(*k);
      e.value = sm_upper_regular(g, q, r);
      return true;
    });
    evaluate("bipartite_spanning_trees", BoundSide::Lower, [&](BoundEntry& e) {
      e.value = bipartite_lower_L(g, q, r);
      e.prerequisites["t"] = spanning_tree_count(g).convert_to<double>();
      e.prerequisites["sum_degree_squares"] = sum_of_squared_degrees(g);
      return true;
    });
  } else {
    evaluate("q_edge_count", BoundSide::Upper, [&](BoundEntry& e) {
      e.prerequisites["mu_max_bound"] = q_radius_edge_bound(g);
      e.value = q_upper_edge_bound(g, q, r);
      return true;
    });
    evaluate("q_clique_number", BoundSide::Upper, [&](BoundEntry& e) {
      e.prerequisites["delta"] = static_cast<double>(max_degree(g));
      e.prerequisites["w"] = static_cast<double>(clique_number(g));
      e.prerequisites["mu_max_bound"] = q_radius_clique_bound(g);
      e.value = q_upper_clique_bound(g, q, r);
      return true;
    });
    evaluate("q_spanning_subgraphs", BoundSide::Lower, [&](BoundEntry& e) {
      const auto mu1 = spanning_subgraph_mu1_lower(g);
      e.prerequisites["mu_min_bound"] = mu1.value;
      e.prerequisites["mu_min"] = mu1.actual_mu1;
      e.prerequisites["subgraph_sum"] = mu1.subgraph_sum;
      e.value = q_lower_spanning_subgraph(g, q, r);
      if (!mu1.holds) {
        e.reason = "violated: claimed mu_min bound exceeds the actual mu_min of Q(G)";
        return false;
      }
      return true;
    });
  }
  return report;
}

}  // namespace spectral_entropy
