#pragma once

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "cubrecon/cubical_complex.hpp"
#include "cubrecon/embeddability.hpp"
#include "cubrecon/errors.hpp"

namespace cubrecon {

/// A named complex or graph family with its arguments.
///
/// Families: cube(n), boundary-cube(n), skeleton-of(X, k), even-cycle(2m),
/// product(X, Y, ...), disjoint-union(X, Y), cbs({..}, {..}, ...),
/// graph-c3, graph-k23.
struct GeneratorSpec {
  std::string family;
  std::vector<std::int64_t> params;
  std::vector<GeneratorSpec> operands;
  std::vector<std::vector<std::size_t>> simplices;  // facets, for cbs

  std::string str() const {
    std::vector<std::string> parts;
    for (const auto& op : operands) parts.push_back(op.str());
    for (auto p : params) parts.push_back(std::to_string(p));
    for (const auto& s : simplices) {
      std::string t = "{";
      for (std::size_t i = 0; i < s.size(); ++i) t += (i ? "," : "") + std::to_string(s[i]);
      parts.push_back(t + "}");
    }
    if (parts.empty()) return family;
    std::string out = family + "(";
    for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? "," : "") + parts[i];
    return out + ")";
  }
};

namespace detail {

class SpecParser {
 public:
  explicit SpecParser(std::string_view text) : text_(text) {}

  GeneratorSpec parse_all() {
    GeneratorSpec spec = parse_expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return spec;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw InputError("generator spec \"" + std::string(text_) + "\": " + what + " at offset " + std::to_string(pos_));
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_space();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  void expect(char c) {
    if (!peek(c)) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  std::int64_t parse_int() {
    skip_space();
    const std::size_t start = pos_;
    if (pos_ < text_.size() && text_[pos_] == '-') ++pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_ || (pos_ == start + 1 && text_[start] == '-')) fail("expected an integer");
    try {
      return std::stoll(std::string(text_.substr(start, pos_ - start)));
    } catch (const std::exception&) {
      fail("integer out of range");
    }
  }

  GeneratorSpec parse_expr() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '-' || text_[pos_] == '_')) {
      ++pos_;
    }
    if (start == pos_) fail("expected a family name");
    GeneratorSpec spec;
    spec.family = std::string(text_.substr(start, pos_ - start));
    if (!peek('(')) return spec;
    expect('(');
    if (peek(')')) {
      ++pos_;
      return spec;
    }
    while (true) {
      skip_space();
      if (peek('{')) {
        expect('{');
        std::vector<std::size_t> simplex;
        while (true) {
          const std::int64_t v = parse_int();
          if (v < 0) fail("simplex vertices must be non-negative");
          simplex.push_back(static_cast<std::size_t>(v));
          if (peek('}')) break;
          expect(',');
        }
        expect('}');
        spec.simplices.push_back(std::move(simplex));
      } else if (pos_ < text_.size() && (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '-')) {
        spec.params.push_back(parse_int());
      } else {
        spec.operands.push_back(parse_expr());
      }
      if (peek(')')) break;
      expect(',');
    }
    expect(')');
    return spec;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

inline void require_shape(const GeneratorSpec& s, std::size_t operands, std::size_t params) {
  if (s.operands.size() != operands || s.params.size() != params || !s.simplices.empty()) {
    throw ParameterError(s.family + " takes " + std::to_string(operands) + " complex argument(s) and " +
                         std::to_string(params) + " integer argument(s)");
  }
}

inline std::size_t require_range(const GeneratorSpec& s, std::int64_t value, std::int64_t lo, std::int64_t hi) {
  if (value < lo || value > hi) {
    throw ParameterError(s.family + " argument " + std::to_string(value) + " outside " + std::to_string(lo) + ".." +
                         std::to_string(hi));
  }
  return static_cast<std::size_t>(value);
}

}  // namespace detail

/// Parses e.g. "product(boundary-cube(2), boundary-cube(2))".
inline GeneratorSpec parse_generator_spec(std::string_view text) { return detail::SpecParser(text).parse_all(); }

inline CubicalComplex cube(std::size_t n) {
  return CubicalComplex::closure(n, {CubeWord::from_masks(n, n == 64 ? ~0ULL : (1ULL << n) - 1, 0)});
}

inline CubicalComplex boundary_cube(std::size_t n) {
  const CubicalComplex full = cube(n);
  std::vector<CubeWord> faces;
  for (const auto& f : full.faces()) {
    if (f.dim() != n) faces.push_back(f);
  }
  return CubicalComplex::from_closed_faces(n, std::move(faces));
}

/// Cubical barycentric subdivision of the simplicial complex generated by
/// the given facets. Vertex labels are mapped, in increasing order, onto
/// the coordinates of I^m (m = number of distinct labels); a simplex goes
/// to its characteristic vector and an interval [s, t] of the face poset to
/// the word with ONE on s, STAR on t \ s and ZERO elsewhere.
inline CubicalComplex cubical_barycentric_subdivision(const std::vector<std::vector<std::size_t>>& facets) {
  std::set<std::size_t> labels;
  for (const auto& f : facets) {
    if (f.empty()) throw ParameterError("cbs facets must be nonempty");
    labels.insert(f.begin(), f.end());
  }
  std::map<std::size_t, std::size_t> coord;
  for (auto l : labels) coord.emplace(l, coord.size());
  const std::size_t m = coord.size();
  if (m > CubeWord::kMaxAmbient) throw ParameterError("cbs input has more than 64 vertices");

  std::set<std::uint64_t> simplices;
  for (const auto& f : facets) {
    std::uint64_t mask = 0;
    for (auto v : f) mask |= std::uint64_t{1} << coord.at(v);
    for (std::uint64_t sub = mask; sub != 0; sub = (sub - 1) & mask) simplices.insert(sub);
  }
  std::vector<CubeWord> faces;
  for (auto tau : simplices) {
    for (std::uint64_t sigma = tau; sigma != 0; sigma = (sigma - 1) & tau) {
      faces.push_back(CubeWord::from_masks(m, tau & ~sigma, sigma));
    }
  }
  return CubicalComplex::from_closed_faces(m, std::move(faces));
}

/// Cycle with `length` vertices: the square boundary for 4, otherwise the
/// subdivided boundary of a (length/2)-gon.
inline CubicalComplex even_cycle(std::size_t length) {
  if (length < 4 || length % 2 != 0) {
    throw ParameterError("even-cycle length must be even and >= 4 (odd cycles do not embed in a cube)");
  }
  if (length == 4) return boundary_cube(2);
  const std::size_t m = length / 2;
  std::vector<std::vector<std::size_t>> facets;
  for (std::size_t i = 0; i < m; ++i) facets.push_back({i, (i + 1) % m});
  return cubical_barycentric_subdivision(facets);
}

/// A in the first coordinates, B in the next ones, and a final coordinate
/// fixed to 0 on A and 1 on B so the two never share a vertex.
inline CubicalComplex disjoint_union(const CubicalComplex& a, const CubicalComplex& b) {
  const CubeWord pad_a(b.ambient_dim());
  const CubeWord pad_b(a.ambient_dim());
  const CubeWord zero(1);
  const CubeWord one = CubeWord::vertex(1, 1);
  std::vector<CubeWord> faces;
  for (const auto& f : a.faces()) faces.push_back(f.concat(pad_a).concat(zero));
  for (const auto& f : b.faces()) faces.push_back(pad_b.concat(f).concat(one));
  return CubicalComplex::from_closed_faces(a.ambient_dim() + b.ambient_dim() + 1, std::move(faces));
}

inline SimpleGraph graph_c3() { return SimpleGraph(3, {{0, 1}, {1, 2}, {0, 2}}); }

/// K_{2,3}: vertices 0 and 1 on one side, 2, 3, 4 on the other.
inline SimpleGraph graph_k23() { return SimpleGraph(5, {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}}); }

using Generated = std::variant<CubicalComplex, SimpleGraph>;

inline CubicalComplex generate_complex(const GeneratorSpec& spec);

inline Generated generate(const GeneratorSpec& spec) {
  const std::string& f = spec.family;
  if (f == "cube") {
    detail::require_shape(spec, 0, 1);
    return cube(detail::require_range(spec, spec.params[0], 0, 64));
  }
  if (f == "boundary-cube") {
    detail::require_shape(spec, 0, 1);
    return boundary_cube(detail::require_range(spec, spec.params[0], 1, 64));
  }
  if (f == "skeleton-of") {
    detail::require_shape(spec, 1, 1);
    return skeleton(generate_complex(spec.operands[0]), detail::require_range(spec, spec.params[0], 0, 64));
  }
  if (f == "even-cycle") {
    detail::require_shape(spec, 0, 1);
    const std::int64_t len = spec.params[0];
    if (len < 4 || len % 2 != 0) {
      throw ParameterError("even-cycle length must be even and >= 4 (odd cycles do not embed in a cube)");
    }
    return even_cycle(detail::require_range(spec, len, 4, 128));
  }
  if (f == "product") {
    if (spec.operands.size() < 2 || !spec.params.empty() || !spec.simplices.empty()) {
      throw ParameterError("product takes two or more complex arguments");
    }
    CubicalComplex out = generate_complex(spec.operands[0]);
    for (std::size_t i = 1; i < spec.operands.size(); ++i) out = product(out, generate_complex(spec.operands[i]));
    return out;
  }
  if (f == "disjoint-union") {
    detail::require_shape(spec, 2, 0);
    return disjoint_union(generate_complex(spec.operands[0]), generate_complex(spec.operands[1]));
  }
  if (f == "cbs") {
    if (!spec.operands.empty() || !spec.params.empty() || spec.simplices.empty()) {
      throw ParameterError("cbs takes one or more simplices written as {v0,v1,...}");
    }
    return cubical_barycentric_subdivision(spec.simplices);
  }
  if (f == "graph-c3") {
    detail::require_shape(spec, 0, 0);
    return graph_c3();
  }
  if (f == "graph-k23") {
    detail::require_shape(spec, 0, 0);
    return graph_k23();
  }
  throw ParameterError("unknown generator family \"" + f + "\"");
}

inline CubicalComplex generate_complex(const GeneratorSpec& spec) {
  Generated g = generate(spec);
  if (auto* c = std::get_if<CubicalComplex>(&g)) return std::move(*c);
  throw ParameterError(spec.family + " produces a graph, not a complex");
}

inline CubicalComplex generate_complex(std::string_view text) { return generate_complex(parse_generator_spec(text)); }

}  // namespace cubrecon
