#include "spectral_entropy/families.hpp"

#include <charconv>
#include <random>
#include <sstream>
#include <vector>

#include "spectral_entropy/error.hpp"

namespace spectral_entropy {

namespace {

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = text.find(sep, start);
    parts.push_back(text.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

template <typename T>
T parse_number(std::string_view text, std::string_view context) {
  T value{};
  const auto* first = text.data();
  const auto* last = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (text.empty() || ec != std::errc() || ptr != last) {
    throw Error(ErrorCode::ParseError,
                "bad number '" + std::string(text) + "' in '" + std::string(context) + "'");
  }
  return value;
}

void expect_arity(const std::vector<std::string_view>& args, std::size_t count,
                  std::string_view context) {
  if (args.size() != count) {
    throw Error(ErrorCode::ParseError, "wrong number of parameters in '" +
                                           std::string(context) + "'");
  }
}

}  // namespace

FamilySpec FamilySpec::parse(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) {
    throw Error(ErrorCode::ParseError, "family spec needs 'name:params', got '" +
                                           std::string(text) + "'");
  }
  const auto name = text.substr(0, colon);
  const auto args = split(text.substr(colon + 1), ',');

  FamilySpec spec;
  if (name == "cycle" || name == "path" || name == "complete") {
    expect_arity(args, 1, text);
    spec.kind = name == "cycle"  ? FamilyKind::Cycle
                : name == "path" ? FamilyKind::Path
                                 : FamilyKind::Complete;
    spec.n = parse_number<std::size_t>(args[0], text);
  } else if (name == "bipartite") {
    expect_arity(args, 2, text);
    spec = bipartite(parse_number<std::size_t>(args[0], text),
                     parse_number<std::size_t>(args[1], text));
  } else if (name == "er") {
    expect_arity(args, 3, text);
    spec = erdos_renyi(parse_number<std::size_t>(args[0], text),
                       parse_number<double>(args[1], text),
                       parse_number<std::uint64_t>(args[2], text));
  } else {
    throw Error(ErrorCode::ParseError, "unknown family '" + std::string(name) + "'");
  }
  validate(spec);
  return spec;
}

void validate(const FamilySpec& spec) {
  auto fail = [&](const std::string& why) {
    throw Error(ErrorCode::InvalidParameter, spec.to_string() + ": " + why);
  };
  switch (spec.kind) {
    case FamilyKind::Cycle:
      if (spec.n < 3) fail("cycle needs n >= 3");
      break;
    case FamilyKind::Path:
      if (spec.n < 2) fail("path needs n >= 2");
      break;
    case FamilyKind::Complete:
      // complete:1 is the single-vertex graph; it exists but has no edges.
      if (spec.n < 1) fail("complete needs n >= 1");
      break;
    case FamilyKind::CompleteBipartite:
      if (spec.p < 1 || spec.q < 1) fail("bipartite needs p, q >= 1");
      break;
    case FamilyKind::ErdosRenyi:
      if (spec.n < 1) fail("er needs n >= 1");
      if (!(spec.probability >= 0.0 && spec.probability <= 1.0)) fail("er needs 0 <= p <= 1");
      break;
  }
}

std::size_t FamilySpec::vertex_count() const {
  return kind == FamilyKind::CompleteBipartite ? p + q : n;
}

std::string FamilySpec::to_string() const {
  std::ostringstream out;
  switch (kind) {
    case FamilyKind::Cycle: out << "cycle:" << n; break;
    case FamilyKind::Path: out << "path:" << n; break;
    case FamilyKind::Complete: out << "complete:" << n; break;
    case FamilyKind::CompleteBipartite: out << "bipartite:" << p << ',' << q; break;
    case FamilyKind::ErdosRenyi: out << "er:" << n << ',' << probability << ',' << seed; break;
  }
  return out.str();
}

Graph generate(const FamilySpec& spec) {
  validate(spec);
  std::vector<Edge> edges;
  switch (spec.kind) {
    case FamilyKind::Cycle:
      for (Vertex v = 0; v < spec.n; ++v) edges.push_back({v, (v + 1) % spec.n});
      break;
    case FamilyKind::Path:
      for (Vertex v = 0; v + 1 < spec.n; ++v) edges.push_back({v, v + 1});
      break;
    case FamilyKind::Complete:
      for (Vertex u = 0; u < spec.n; ++u)
        for (Vertex v = u + 1; v < spec.n; ++v) edges.push_back({u, v});
      break;
    case FamilyKind::CompleteBipartite:
      // Part A is 0..p-1, part B is p..p+q-1.
      for (Vertex u = 0; u < spec.p; ++u)
        for (Vertex v = 0; v < spec.q; ++v) edges.push_back({u, spec.p + v});
      break;
    case FamilyKind::ErdosRenyi: {
      std::mt19937_64 engine(spec.seed);
      constexpr double kScale = 1.0 / 9007199254740992.0;  // 2^-53
      for (Vertex u = 0; u < spec.n; ++u) {
        for (Vertex v = u + 1; v < spec.n; ++v) {
          const double u01 = static_cast<double>(engine() >> 11) * kScale;
          if (u01 < spec.probability) edges.push_back({u, v});
        }
      }
      break;
    }
  }
  return Graph::build(spec.vertex_count(), edges);
}

}  // namespace spectral_entropy
