#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "cubrecon/cubical_complex.hpp"
#include "cubrecon/errors.hpp"
#include "cubrecon/gf2_matrix.hpp"
#include "cubrecon/smith_normal_form.hpp"

namespace cubrecon {

enum class Ring { GF2, Integer };

inline const char* to_string(Ring ring) { return ring == Ring::GF2 ? "gf2" : "int"; }

/// One homology (or cohomology) group, up to isomorphism: Z^betti plus the
/// listed finite cyclic factors. Over GF(2) the torsion list is empty.
struct DegreeGroup {
  std::size_t betti = 0;
  std::vector<std::int64_t> torsion;

  bool is_zero() const { return betti == 0 && torsion.empty(); }
  friend bool operator==(const DegreeGroup&, const DegreeGroup&) = default;
};

/// Groups in degrees 0..top. Degrees outside the stored range, including
/// negative ones, are the zero group.
struct HomologyProfile {
  Ring ring = Ring::GF2;
  std::vector<DegreeGroup> degrees;

  DegreeGroup at(int j) const {
    if (j < 0 || static_cast<std::size_t>(j) >= degrees.size()) return {};
    return degrees[static_cast<std::size_t>(j)];
  }

  std::vector<std::size_t> betti() const {
    std::vector<std::size_t> out;
    for (const auto& g : degrees) out.push_back(g.betti);
    return out;
  }

  bool same_in_degree(const HomologyProfile& other, int j) const { return at(j) == other.at(j); }

  /// Equal in every degree, zero-padding the shorter profile.
  friend bool operator==(const HomologyProfile& a, const HomologyProfile& b) {
    const std::size_t top = std::max(a.degrees.size(), b.degrees.size());
    for (std::size_t j = 0; j < top; ++j) {
      if (!a.same_in_degree(b, static_cast<int>(j))) return false;
    }
    return true;
  }
};

/// Boundary matrices of the cellular chain complex spanned by a set of
/// cubes. For a pair (c, a) the cells are the faces of c not in a and
/// facets inside a are dropped, which yields the quotient complex.
///
/// Integer signs: the i-th STAR from the left (1-based) gives its ONE-facet
/// the sign (-1)^(i+1) and its ZERO-facet (-1)^i.
class BoundaryMatrixSet {
 public:
  struct Entry {
    std::size_t row;
    std::int64_t coefficient;
  };

  BoundaryMatrixSet(const std::vector<CubeWord>& cells, Ring ring) : ring_(ring) {
    for (const auto& f : cells) {
      if (cells_.size() <= f.dim()) cells_.resize(f.dim() + 1);
      cells_[f.dim()].push_back(f);
    }
    index_.resize(cells_.size());
    for (std::size_t j = 0; j < cells_.size(); ++j) {
      std::sort(cells_[j].begin(), cells_[j].end());
      for (std::size_t i = 0; i < cells_[j].size(); ++i) index_[j].emplace(cells_[j][i], i);
    }
    columns_.resize(cells_.size());
    for (std::size_t j = 1; j < cells_.size(); ++j) {
      columns_[j].reserve(cells_[j].size());
      for (const auto& f : cells_[j]) {
        std::vector<Entry> col;
        std::size_t star_index = 0;
        const auto facets = f.facets();
        for (std::size_t t = 0; t < facets.size(); t += 2) {
          ++star_index;
          const std::int64_t one_sign = (star_index % 2 == 1) ? 1 : -1;
          const auto zero = index_[j - 1].find(facets[t]);
          if (zero != index_[j - 1].end()) col.push_back({zero->second, -one_sign});
          const auto one = index_[j - 1].find(facets[t + 1]);
          if (one != index_[j - 1].end()) col.push_back({one->second, one_sign});
        }
        columns_[j].push_back(std::move(col));
      }
    }
  }

  Ring ring() const { return ring_; }

  /// Highest degree holding a cell, or -1 when there are none.
  int top_degree() const { return static_cast<int>(cells_.size()) - 1; }

  std::size_t cell_count(int j) const {
    if (j < 0 || j > top_degree()) return 0;
    return cells_[static_cast<std::size_t>(j)].size();
  }

  const std::vector<CubeWord>& cells(std::size_t j) const { return cells_.at(j); }

  /// Sparse columns of D_j (rows: (j-1)-cells, columns: j-cells).
  const std::vector<std::vector<Entry>>& columns(std::size_t j) const { return columns_.at(j); }

  BitMatrix gf2_matrix(int j) const {
    BitMatrix m(cell_count(j - 1), cell_count(j));
    if (j < 1 || j > top_degree()) return m;
    const auto& cols = columns_[static_cast<std::size_t>(j)];
    for (std::size_t c = 0; c < cols.size(); ++c) {
      for (const auto& e : cols[c]) m.flip(e.row, c);
    }
    return m;
  }

  IntMatrix int_matrix(int j) const {
    IntMatrix m(cell_count(j - 1), cell_count(j));
    if (j < 1 || j > top_degree()) return m;
    const auto& cols = columns_[static_cast<std::size_t>(j)];
    for (std::size_t c = 0; c < cols.size(); ++c) {
      for (const auto& e : cols[c]) m(e.row, c) += e.coefficient;
    }
    return m;
  }

 private:
  Ring ring_;
  std::vector<std::vector<CubeWord>> cells_;
  std::vector<std::unordered_map<CubeWord, std::size_t>> index_;
  std::vector<std::vector<std::vector<Entry>>> columns_;
};

inline BoundaryMatrixSet boundary_matrices(const CubicalComplex& c, Ring ring) {
  return BoundaryMatrixSet(c.faces(), ring);
}

inline BoundaryMatrixSet relative_boundary_matrices(const CubicalComplex& c, const CubicalComplex& a,
                                                    Ring ring) {
  detail::require_subcomplex(c, a);
  std::vector<CubeWord> cells;
  std::set_difference(c.faces().begin(), c.faces().end(), a.faces().begin(), a.faces().end(),
                      std::back_inserter(cells));
  return BoundaryMatrixSet(cells, ring);
}

namespace detail {

struct RankData {
  std::size_t rank = 0;
  std::vector<std::int64_t> torsion;
};

// Rank (and torsion factors when integral) of D_j, or of its transpose.
inline RankData reduce(const BoundaryMatrixSet& bm, Ring ring, int j, bool transpose) {
  RankData out;
  if (j < 1 || j > bm.top_degree()) return out;
  if (ring == Ring::GF2) {
    const BitMatrix m = bm.gf2_matrix(j);
    out.rank = transpose ? m.transposed().rank() : m.rank();
    return out;
  }
  const IntMatrix m = transpose ? bm.int_matrix(j).transposed() : bm.int_matrix(j);
  const auto factors = smith_normal_form(m);
  out.rank = factors.size();
  for (auto f : factors) {
    if (f > 1) out.torsion.push_back(f);
  }
  return out;
}

inline HomologyProfile homology_of(const BoundaryMatrixSet& bm, Ring ring) {
  HomologyProfile p{ring, {}};
  const int top = bm.top_degree();
  std::vector<RankData> ranks(static_cast<std::size_t>(top + 2));
  for (int j = 1; j <= top; ++j) ranks[static_cast<std::size_t>(j)] = reduce(bm, ring, j, false);
  for (int j = 0; j <= top; ++j) {
    DegreeGroup g;
    g.betti = bm.cell_count(j) - ranks[static_cast<std::size_t>(j)].rank -
              ranks[static_cast<std::size_t>(j + 1)].rank;
    g.torsion = ranks[static_cast<std::size_t>(j + 1)].torsion;
    p.degrees.push_back(std::move(g));
  }
  return p;
}

// Cochain complex with coboundary D_{j+1}^T in degree j; torsion in H^j
// comes from the image of D_j^T.
inline HomologyProfile cohomology_of(const BoundaryMatrixSet& bm, Ring ring) {
  HomologyProfile p{ring, {}};
  const int top = bm.top_degree();
  std::vector<RankData> ranks(static_cast<std::size_t>(top + 2));
  for (int j = 1; j <= top; ++j) ranks[static_cast<std::size_t>(j)] = reduce(bm, ring, j, true);
  for (int j = 0; j <= top; ++j) {
    DegreeGroup g;
    g.betti = bm.cell_count(j) - ranks[static_cast<std::size_t>(j)].rank -
              ranks[static_cast<std::size_t>(j + 1)].rank;
    g.torsion = ranks[static_cast<std::size_t>(j)].torsion;
    p.degrees.push_back(std::move(g));
  }
  return p;
}

}  // namespace detail

/// Non-reduced Betti numbers over GF(2).
inline HomologyProfile betti_gf2(const CubicalComplex& c) {
  return detail::homology_of(boundary_matrices(c, Ring::GF2), Ring::GF2);
}

/// Integer homology: free ranks and torsion via Smith normal form.
inline HomologyProfile homology_integer(const CubicalComplex& c) {
  return detail::homology_of(boundary_matrices(c, Ring::Integer), Ring::Integer);
}

inline HomologyProfile homology(const CubicalComplex& c, Ring ring) {
  return ring == Ring::GF2 ? betti_gf2(c) : homology_integer(c);
}

/// GF(2) cohomology ranks, computed from the transposed coboundary maps.
inline HomologyProfile cohomology_betti_gf2(const CubicalComplex& c) {
  return detail::cohomology_of(boundary_matrices(c, Ring::GF2), Ring::GF2);
}

inline HomologyProfile cohomology_integer(const CubicalComplex& c) {
  return detail::cohomology_of(boundary_matrices(c, Ring::Integer), Ring::Integer);
}

inline HomologyProfile cohomology(const CubicalComplex& c, Ring ring) {
  return ring == Ring::GF2 ? cohomology_betti_gf2(c) : cohomology_integer(c);
}

/// Homology of the pair (c, a), i.e. of the quotient chain complex on the
/// faces of c that are not in a.
inline HomologyProfile relative_profile(const CubicalComplex& c, const CubicalComplex& a, Ring ring) {
  return detail::homology_of(relative_boundary_matrices(c, a, ring), ring);
}

}  // namespace cubrecon
