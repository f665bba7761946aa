#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "spectral_entropy/graph.hpp"

namespace spectral_entropy {

using BigCount = boost::multiprecision::cpp_int;

// Entropy bounds derived from spectral bounds on the extreme eigenvalues of
// L(G) and Q(G). Every entropy-level bound pushes a bound on S_q through the
// Sharma-Mittal transform x -> (x^((1-r)/(1-q)) - 1) / (1 - r), which is
// increasing in x only for 0 < q < 1. Outside that range the values are still
// computed but the inequality direction is not guaranteed.

/// True when 0 < q < 1, the regime where entropy-level bounds are valid.
bool bound_regime_verified(double q);

/// max over edges (u, v) of d_u + d_v; an upper bound on lambda_max(L).
/// Throws EmptyGraph when m == 0.
double max_adjacent_degree_sum(const Graph& g);

/// Upper bound on the L-based H_{q,r} from n (max(d_u + d_v) / 2m)^q.
double sm_upper_L(const Graph& g, double q, double r);

/// Same bound specialised to k-regular graphs, where it no longer depends on k.
/// Throws NotRegular.
double sm_upper_regular(const Graph& g, double q, double r);

/// Number of spanning trees by the matrix-tree theorem: the determinant of
/// L(G) with row and column 0 removed, evaluated exactly with fraction-free
/// (Bareiss) elimination. Zero iff g is disconnected. n == 1 gives 1.
BigCount spanning_tree_count(const Graph& g);

/// Lower bound on S_{L,q} for bipartite graphs:
///   (sum d_i^2 / m)^q + (n - 2) (t n m / sum d_i^2)^(q / (n - 2)).
/// Throws NotBipartite, NotConnected, TooSmall (n < 3).
double bipartite_moment_lower(const Graph& g, double q);

/// Entropy lower bound obtained from bipartite_moment_lower divided by (2m)^q.
double bipartite_lower_L(const Graph& g, double q, double r);

/// sqrt(4m + 2(n-1)(n-2)); an upper bound on mu_max(Q).
double q_radius_edge_bound(const Graph& g);

double q_upper_edge_bound(const Graph& g, double q, double r);

/// Exact maximum clique size by branch and bound with greedy colouring
/// bounds over 64-bit vertex sets. Throws TooLarge for n > 64.
std::size_t clique_number(const Graph& g);

/// Delta + n (1 - 1/w) with Delta the maximum degree and w the clique
/// number; an upper bound on mu_max(Q).
double q_radius_clique_bound(const Graph& g);

double q_upper_clique_bound(const Graph& g, double q, double r);

/// ((n-1)/(2m))^(n-1) * sum over spanning subgraphs S of 4^nc(S), as a
/// claimed lower bound on mu_min(Q). The claim does not hold in general (K_2
/// is a counterexample), so the value is compared with the actual mu_min on
/// every call.
struct Mu1LowerBound {
  double value = 0.0;
  double subgraph_sum = 0.0;  // sum over S of 4^nc(S)
  double actual_mu1 = 0.0;    // smallest eigenvalue of Q(G)
  bool holds = false;         // value <= actual_mu1 (within 1e-9)
};

/// Enumerates all 2^m edge subsets; throws TooManyEdges for m > 20 and
/// EmptyGraph for m == 0.
Mu1LowerBound spanning_subgraph_mu1_lower(const Graph& g);

/// Entropy lower bound n (mu1_bound / 2m)^q pushed through the transform.
double q_lower_spanning_subgraph(const Graph& g, double q, double r);

enum class BoundSide { Upper, Lower };

std::string_view to_string(BoundSide side);

struct BoundEntry {
  std::string name;
  double value = 0.0;
  BoundSide side = BoundSide::Upper;
  bool applicable = false;       // preconditions met and value computed
  bool regime_verified = false;  // 0 < q < 1
  std::string reason;            // why not applicable, or notes
  std::map<std::string, double> prerequisites;  // t, w, delta, ...
};

struct BoundReport {
  MatrixKind kind = MatrixKind::Laplacian;
  double q = 0.0;
  double r = 0.0;
  double measured = 0.0;  // the Sharma-Mittal entropy of g for this kind
  std::vector<BoundEntry> entries;
};

/// Evaluates every bound for the chosen matrix kind. Failing preconditions
/// are reported as applicable == false with the error text as reason.
/// Throws EmptyGraph when m == 0 (there is no entropy to bracket).
BoundReport bound_report(const Graph& g, double q, double r, MatrixKind kind);

}  // namespace spectral_entropy
