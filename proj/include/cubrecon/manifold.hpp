#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "cubrecon/cubical_complex.hpp"
#include "cubrecon/errors.hpp"
#include "cubrecon/homology.hpp"

namespace cubrecon {

struct ManifoldReport {
  bool is_manifold = false;
  std::optional<std::size_t> dimension;
  std::optional<bool> orientable;
  std::optional<CubeWord> failing_face;
  std::string reason;
  std::vector<ManifoldReport> per_component;
};

/// Faces of c that do not have f as a subface.
inline CubicalComplex not_star(const CubicalComplex& c, const CubeWord& f) {
  std::vector<CubeWord> kept;
  for (const auto& g : c.faces()) {
    if (!f.precedes(g)) kept.push_back(g);
  }
  return CubicalComplex::from_closed_faces(c.ambient_dim(), std::move(kept));
}

/// Local homology H_*(|c|, |c| - b) at the barycenter b of the face f.
inline HomologyProfile local_profile(const CubicalComplex& c, const CubeWord& f, Ring ring) {
  if (!c.contains(f)) throw StructuralError("face " + f.str() + " is not in the complex");
  // The open star of f is exactly the cell set of the pair (c, notstar(f)).
  std::vector<CubeWord> star;
  for (const auto& g : c.faces()) {
    if (f.precedes(g)) star.push_back(g);
  }
  return detail::homology_of(BoundaryMatrixSet(star, ring), ring);
}

namespace detail {

inline bool is_sphere_pattern(const HomologyProfile& p, std::size_t d) {
  for (std::size_t j = 0; j < std::max(p.degrees.size(), d + 1); ++j) {
    const DegreeGroup g = p.at(static_cast<int>(j));
    const DegreeGroup expected{j == d ? std::size_t{1} : std::size_t{0}, {}};
    if (!(g == expected)) return false;
  }
  return true;
}

// Integer H_d is Z^component_count with no torsion listed in degree d.
inline bool top_class_is_free(const CubicalComplex& c, std::size_t d, std::size_t component_count) {
  const DegreeGroup top = homology_integer(c).at(static_cast<int>(d));
  return top.betti == component_count && top.torsion.empty();
}

inline ManifoldReport check_single(const CubicalComplex& c) {
  ManifoldReport r;
  if (c.empty()) {
    r.reason = "empty complex";
    return r;
  }
  const auto d = static_cast<std::size_t>(c.dimension());
  for (const auto& f : c.maximal_faces()) {
    if (f.dim() != d) {
      r.failing_face = f;
      r.reason = "not pure: maximal face " + f.str() + " has dimension " + std::to_string(f.dim()) +
                 ", expected " + std::to_string(d);
      return r;
    }
  }
  for (const auto& f : c.faces()) {
    if (!is_sphere_pattern(local_profile(c, f, Ring::GF2), d)) {
      r.failing_face = f;
      r.reason = "local homology at " + f.str() + " is not that of a " + std::to_string(d) + "-sphere";
      return r;
    }
  }
  r.is_manifold = true;
  r.dimension = d;
  return r;
}

}  // namespace detail

/// Pure of some dimension d, with the GF(2) local homology of every face
/// equal to Z/2 in degree d and zero elsewhere. Orientability is filled in
/// per connected component when the check passes.
inline ManifoldReport is_homology_manifold(const CubicalComplex& c) {
  ManifoldReport r = detail::check_single(c);
  const auto parts = components(c);
  bool all_orientable = true;
  for (const auto& part : parts) {
    ManifoldReport sub = parts.size() == 1 ? r : detail::check_single(part);
    if (sub.is_manifold) {
      sub.orientable = detail::top_class_is_free(part, *sub.dimension, 1);
      all_orientable = all_orientable && *sub.orientable;
    }
    r.per_component.push_back(std::move(sub));
  }
  if (r.is_manifold) r.orientable = all_orientable;
  return r;
}

/// Every connected component has integer H_d free of rank 1 and no torsion
/// in degree d. Requires c to be a homology manifold.
inline bool is_orientable(const CubicalComplex& c) {
  const ManifoldReport r = detail::check_single(c);
  if (!r.is_manifold) {
    throw ContractError("is_orientable requires a homology manifold: " + r.reason);
  }
  for (const auto& part : components(c)) {
    if (!detail::top_class_is_free(part, *r.dimension, 1)) return false;
  }
  return true;
}

/// Checks that s, a copy of the boundary of a (k+1)-cube inside c, is
/// face-like exactly when it is not the boundary of a (k+1)-face of c, and
/// returns the face-like verdict. A disagreement throws ContradictionError.
inline bool facelike_characterization(const CubicalComplex& c, const CubicalComplex& s, std::size_t k) {
  if (k < 1) throw ContractError("facelike_characterization requires k >= 1");
  detail::require_subcomplex(c, s);
  const auto verts = s.vertices();
  if (verts.empty()) throw StructuralError("subcomplex is empty, not a cube boundary");
  // Inside I^n every copy of the (k+1)-cube boundary is the boundary of the
  // ambient face spanned by its vertices.
  const CubeWord span = span_of_vertices(c.ambient_dim(), verts);
  if (span.dim() != k + 1 || !(face_boundary(span) == s)) {
    throw StructuralError("subcomplex is not the boundary of a " + std::to_string(k + 1) + "-cube");
  }
  const bool face_like = is_face_like(c, s);
  bool bounds_face = false;
  for (const auto& f : c.faces()) {
    if (f.dim() == k + 1 && face_boundary(f) == s) {
      bounds_face = true;
      break;
    }
  }
  if (face_like == bounds_face) {
    throw ContradictionError("face-like test and boundary search disagree for the sphere spanned by " + span.str());
  }
  return face_like;
}

}  // namespace cubrecon
