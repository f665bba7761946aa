#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

#include "spectral_entropy/graph.hpp"

namespace spectral_entropy {

enum class FamilyKind { Cycle, Path, Complete, CompleteBipartite, ErdosRenyi };

/// Named graph family as written on the command line:
///
///   cycle:N  path:N  complete:N  bipartite:P,Q  er:N,PROB,SEED
struct FamilySpec {
  FamilyKind kind = FamilyKind::Complete;
  std::size_t n = 0;  // vertex count (cycle, path, complete, er)
  std::size_t p = 0;  // part sizes (bipartite)
  std::size_t q = 0;
  double probability = 0.0;  // er edge probability
  std::uint64_t seed = 0;

  static FamilySpec cycle(std::size_t n) { return {FamilyKind::Cycle, n}; }
  static FamilySpec path(std::size_t n) { return {FamilyKind::Path, n}; }
  static FamilySpec complete(std::size_t n) { return {FamilyKind::Complete, n}; }
  static FamilySpec bipartite(std::size_t p, std::size_t q) {
    return {FamilyKind::CompleteBipartite, p + q, p, q};
  }
  static FamilySpec erdos_renyi(std::size_t n, double prob, std::uint64_t seed) {
    return {FamilyKind::ErdosRenyi, n, 0, 0, prob, seed};
  }

  /// Throws ParseError on malformed text and InvalidParameter on values out
  /// of range (cycle:2, path:1, ...).
  static FamilySpec parse(std::string_view text);

  std::size_t vertex_count() const;
  std::string to_string() const;
};

/// Throws InvalidParameter if the spec's values are out of range.
void validate(const FamilySpec& spec);

/// Erdős–Rényi graphs draw one 64-bit word from std::mt19937_64(seed) per
/// vertex pair, visiting pairs (u, v), u < v, in lexicographic order. The top
/// 53 bits form a double u01 in [0, 1) and the edge is kept iff u01 < prob.
/// mt19937_64 is fully pinned by the C++ standard, so corpora reproduce
/// bit-for-bit on any conforming implementation.
Graph generate(const FamilySpec& spec);

inline Graph generate(std::string_view text) { return generate(FamilySpec::parse(text)); }

}  // namespace spectral_entropy
