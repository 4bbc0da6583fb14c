#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <span>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "cubrecon/cube_word.hpp"
#include "cubrecon/errors.hpp"

namespace cubrecon {

/// A finite, downward-closed set of nonempty faces of a fixed ambient cube.
///
/// Faces are kept sorted in canonical (lexicographic, ZERO < ONE < STAR)
/// order. Values are immutable once built.
class CubicalComplex {
 public:
  CubicalComplex() = default;
  explicit CubicalComplex(std::size_t ambient) : ambient_(ambient) {
    if (ambient > CubeWord::kMaxAmbient) {
      throw StructuralError("ambient dimension exceeds 64");
    }
  }

  /// Smallest complex containing every generator.
  static CubicalComplex closure(std::size_t ambient, std::span<const CubeWord> generators) {
    CubicalComplex c(ambient);
    std::unordered_set<CubeWord> seen;
    for (const auto& g : generators) {
      if (g.ambient_dim() != ambient) {
        throw StructuralError("generator " + g.str() + " has length " +
                              std::to_string(g.ambient_dim()) + ", expected " +
                              std::to_string(ambient));
      }
      if (seen.contains(g)) continue;
      g.for_each_subface([&](const CubeWord& w) { seen.insert(w); });
    }
    c.faces_.assign(seen.begin(), seen.end());
    std::sort(c.faces_.begin(), c.faces_.end());
    return c;
  }

  static CubicalComplex closure(std::size_t ambient, std::initializer_list<CubeWord> generators) {
    return closure(ambient, std::span<const CubeWord>(generators.begin(), generators.size()));
  }

  /// Builds from faces that must already be downward closed.
  static CubicalComplex from_closed_faces(std::size_t ambient, std::vector<CubeWord> faces) {
    CubicalComplex c(ambient);
    std::sort(faces.begin(), faces.end());
    faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
    for (const auto& f : faces) {
      if (f.ambient_dim() != ambient) {
        throw StructuralError("face " + f.str() + " does not lie in I^" + std::to_string(ambient));
      }
    }
    c.faces_ = std::move(faces);
    for (const auto& f : c.faces_) {
      for (const auto& facet : f.facets()) {
        if (!c.contains(facet)) {
          throw StructuralError("face set is not downward closed: " + f.str() +
                                " lacks facet " + facet.str());
        }
      }
    }
    return c;
  }

  std::size_t ambient_dim() const { return ambient_; }
  const std::vector<CubeWord>& faces() const { return faces_; }
  std::size_t size() const { return faces_.size(); }
  bool empty() const { return faces_.empty(); }

  bool contains(const CubeWord& w) const {
    return std::binary_search(faces_.begin(), faces_.end(), w);
  }

  /// Largest face dimension, or -1 for the empty complex.
  int dimension() const {
    int d = -1;
    for (const auto& f : faces_) d = std::max(d, static_cast<int>(f.dim()));
    return d;
  }

  std::vector<CubeWord> faces_of_dim(std::size_t j) const {
    std::vector<CubeWord> out;
    for (const auto& f : faces_) {
      if (f.dim() == j) out.push_back(f);
    }
    return out;
  }

  std::vector<CubeWord> vertices() const { return faces_of_dim(0); }

  /// Number of faces per dimension, 0..dimension().
  std::vector<std::size_t> f_vector() const {
    std::vector<std::size_t> fv(static_cast<std::size_t>(dimension() + 1), 0);
    for (const auto& f : faces_) ++fv[f.dim()];
    return fv;
  }

  /// Faces not strictly below any other face, in canonical order.
  std::vector<CubeWord> maximal_faces() const {
    std::vector<CubeWord> out;
    for (const auto& f : faces_) {
      bool maximal = true;
      for (std::size_t i = 0; i < ambient_ && maximal; ++i) {
        if (f[i] != Letter::Star && contains(f.with(i, Letter::Star))) maximal = false;
      }
      if (maximal) out.push_back(f);
    }
    return out;
  }

  bool is_subcomplex_of(const CubicalComplex& other) const {
    if (ambient_ != other.ambient_) return false;
    return std::includes(other.faces_.begin(), other.faces_.end(), faces_.begin(), faces_.end());
  }

  friend bool operator==(const CubicalComplex&, const CubicalComplex&) = default;

 private:
  std::size_t ambient_ = 0;
  std::vector<CubeWord> faces_;
};

/// A face together with a complex that contains it.
class FacePair {
 public:
  FacePair(const CubicalComplex& complex, CubeWord face) : complex_(&complex), face_(face) {
    if (!complex.contains(face)) {
      throw StructuralError("face " + face.str() + " is not in the complex");
    }
  }

  const CubicalComplex& complex() const { return *complex_; }
  const CubeWord& face() const { return face_; }

  /// The subcomplex of all faces below the face (F-hat).
  CubicalComplex hat() const { return CubicalComplex::closure(face_.ambient_dim(), {face_}); }

 private:
  const CubicalComplex* complex_;
  CubeWord face_;
};

namespace detail {

inline void require_subcomplex(const CubicalComplex& c, const CubicalComplex& g) {
  if (!g.is_subcomplex_of(c)) {
    throw StructuralError("argument is not a subcomplex of the given complex");
  }
}

}  // namespace detail

inline CubicalComplex skeleton(const CubicalComplex& c, std::size_t k) {
  std::vector<CubeWord> kept;
  for (const auto& f : c.faces()) {
    if (f.dim() <= k) kept.push_back(f);
  }
  return CubicalComplex::from_closed_faces(c.ambient_dim(), std::move(kept));
}

/// Faces of c sharing no vertex with g.
inline CubicalComplex deletion(const CubicalComplex& c, const CubicalComplex& g) {
  detail::require_subcomplex(c, g);
  const auto verts = g.vertices();
  std::vector<CubeWord> kept;
  for (const auto& f : c.faces()) {
    const bool touches = std::any_of(verts.begin(), verts.end(),
                                     [&](const CubeWord& v) { return v.precedes(f); });
    if (!touches) kept.push_back(f);
  }
  return CubicalComplex::from_closed_faces(c.ambient_dim(), std::move(kept));
}

/// All proper nonempty subfaces of a single face.
inline CubicalComplex face_boundary(const CubeWord& face) {
  std::vector<CubeWord> out;
  face.for_each_subface([&](const CubeWord& w) {
    if (w != face) out.push_back(w);
  });
  return CubicalComplex::from_closed_faces(face.ambient_dim(), std::move(out));
}

inline CubicalComplex face_boundary(const FacePair& fp) { return face_boundary(fp.face()); }

/// For every face F of c, the vertices of g under F are either none or
/// exactly the vertex set of a face of g.
inline bool is_face_like(const CubicalComplex& c, const CubicalComplex& g) {
  detail::require_subcomplex(c, g);
  const auto verts = g.vertices();
  std::vector<CubeWord> under;
  for (const auto& f : c.faces()) {
    under.clear();
    for (const auto& v : verts) {
      if (v.precedes(f)) under.push_back(v);
    }
    if (under.empty()) continue;
    const CubeWord span = span_of_vertices(c.ambient_dim(), under);
    // `under` lies in V(span); equal sizes make it the whole vertex set.
    if (!g.contains(span) || under.size() != (std::size_t{1} << span.dim())) return false;
  }
  return true;
}

/// Product complex in I^(a.n + b.n): faces are concatenated words.
inline CubicalComplex product(const CubicalComplex& a, const CubicalComplex& b) {
  std::vector<CubeWord> out;
  out.reserve(a.size() * b.size());
  for (const auto& f : a.faces()) {
    for (const auto& g : b.faces()) out.push_back(f.concat(g));
  }
  return CubicalComplex::from_closed_faces(a.ambient_dim() + b.ambient_dim(), std::move(out));
}

/// Connected components of the vertex-edge graph, each with all faces whose
/// vertices lie in it. Ordered by their first face in canonical order.
inline std::vector<CubicalComplex> components(const CubicalComplex& c) {
  const auto verts = c.vertices();
  std::unordered_map<CubeWord, std::size_t> index;
  for (std::size_t i = 0; i < verts.size(); ++i) index.emplace(verts[i], i);

  std::vector<std::size_t> parent(verts.size());
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& f : c.faces()) {
    if (f.dim() != 1) continue;
    const auto ends = f.facets();
    const std::size_t a = find(index.at(ends[0]));
    const std::size_t b = find(index.at(ends[1]));
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }

  std::unordered_map<std::size_t, std::size_t> slot;
  std::vector<std::vector<CubeWord>> groups;
  for (const auto& f : c.faces()) {
    const CubeWord anchor = CubeWord::vertex(c.ambient_dim(), f.ones());
    const std::size_t root = find(index.at(anchor));
    auto [it, inserted] = slot.emplace(root, groups.size());
    if (inserted) groups.emplace_back();
    groups[it->second].push_back(f);
  }
  std::vector<CubicalComplex> out;
  out.reserve(groups.size());
  for (auto& g : groups) out.push_back(CubicalComplex::from_closed_faces(c.ambient_dim(), std::move(g)));
  return out;
}

}  // namespace cubrecon
