#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <unordered_set>
#include <vector>

#include "cubrecon/cubical_complex.hpp"
#include "cubrecon/errors.hpp"
#include "cubrecon/homology.hpp"
#include "cubrecon/manifold.hpp"

namespace cubrecon {

enum class CriterionMode { Standard, TightGf2, TightInteger };

inline const char* to_string(CriterionMode mode) {
  switch (mode) {
    case CriterionMode::Standard:
      return "standard";
    case CriterionMode::TightGf2:
      return "tight-gf2";
    case CriterionMode::TightInteger:
      return "tight-int";
  }
  return "?";
}

struct ReconstructionConfig {
  std::size_t k = 2;
  std::optional<std::size_t> d;  // empty: search over dimensions up to d_max
  CriterionMode mode = CriterionMode::Standard;
  std::size_t d_max = 0;
  std::size_t jobs = 1;

  /// Throws ContractError naming the violated inequality.
  void validate() const {
    if (k < 2) throw ContractError("reconstruction requires k >= 2 (got k = " + std::to_string(k) + ")");
    if (!d) {
      if (mode != CriterionMode::Standard) {
        throw ContractError("tight modes need an explicit dimension d = 2k");
      }
      if (d_max < k) throw ContractError("automatic mode requires d_max >= k");
      return;
    }
    const std::size_t dim = *d;
    if (dim < k) throw ContractError("reconstruction requires d >= k");
    if (mode == CriterionMode::Standard) {
      if (k < dim / 2 + 1) {
        throw ContractError("standard criterion requires k >= floor(d/2) + 1 (k = " + std::to_string(k) +
                            ", d = " + std::to_string(dim) + ")");
      }
    } else {
      if (dim != 2 * k || dim < 4) {
        throw ContractError("tight criterion requires d = 2k >= 4 (k = " + std::to_string(k) +
                            ", d = " + std::to_string(dim) + ")");
      }
    }
  }
};

/// One homology degree compared by a criterion.
struct ComparedDegree {
  int degree = 0;
  DegreeGroup without_sphere;  // H_j(skel \ S)
  DegreeGroup full;            // H_j(skel)
};

struct CandidateVerdict {
  CubeWord face;
  bool boundary_present = false;
  bool accepted = false;
  CriterionMode criterion = CriterionMode::Standard;
  std::vector<ComparedDegree> profiles;
};

struct ReconstructionResult {
  CubicalComplex complex;
  std::vector<CandidateVerdict> verdicts;  // in step order, canonical within a step
};

struct AutoReconstruction {
  std::size_t d = 0;
  CubicalComplex complex;
  bool needs_tight_hypothesis = false;
};

namespace detail {

/// Runs fn(i) for i in [0, count) on up to `jobs` threads. The first
/// exception thrown by any call is rethrown.
template <typename Fn>
void parallel_for(std::size_t count, std::size_t jobs, Fn&& fn) {
  if (jobs <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  {
    std::vector<std::jthread> workers;
    for (std::size_t w = 0; w < std::min(jobs, count); ++w) {
      workers.emplace_back([&] {
        for (std::size_t i = next++; i < count; i = next++) {
          try {
            fn(i);
          } catch (...) {
            std::lock_guard lock(failure_mutex);
            if (!failure) failure = std::current_exception();
          }
        }
      });
    }
  }
  if (failure) std::rethrow_exception(failure);
}

inline bool boundary_present(const CubicalComplex& skel, const CubeWord& f) {
  const auto facets = f.facets();
  return std::all_of(facets.begin(), facets.end(), [&](const CubeWord& g) { return skel.contains(g); });
}

inline void require_dimension_at_most(const CubicalComplex& skel, std::size_t k) {
  if (skel.dimension() > static_cast<int>(k)) {
    throw ContractError("input must have dimension <= k = " + std::to_string(k) + " (has dimension " +
                        std::to_string(skel.dimension()) + ")");
  }
}

// Compares the given degrees of H(skel \ dF) and H(skel) over `ring`.
inline CandidateVerdict compare_degrees(const CubicalComplex& skel, const HomologyProfile& full,
                                        const CubeWord& f, std::size_t k, const std::vector<int>& degrees,
                                        Ring ring, CriterionMode criterion) {
  CandidateVerdict v;
  v.face = f;
  v.criterion = criterion;
  v.boundary_present = boundary_present(skel, f);
  if (!v.boundary_present) return v;
  for (int j : degrees) {
    // Deleting the sphere commutes with taking skeleta, so degrees up to
    // k - 1 of the k-skeleton agree with those of the whole manifold.
    if (j > static_cast<int>(k) - 1) {
      throw ContractError("compared degree " + std::to_string(j) + " exceeds k - 1 = " + std::to_string(k - 1));
    }
  }
  const HomologyProfile without = homology(deletion(skel, face_boundary(f)), ring);
  v.accepted = true;
  for (int j : degrees) {
    ComparedDegree cd{j, without.at(j), full.at(j)};
    if (!(cd.without_sphere == cd.full)) v.accepted = false;
    v.profiles.push_back(std::move(cd));
  }
  return v;
}

inline void require_candidate_shape(const CubicalComplex& skel, const CubeWord& f, std::size_t k) {
  if (f.ambient_dim() != skel.ambient_dim()) throw StructuralError("candidate " + f.str() + " has wrong length");
  if (f.dim() != k + 1) {
    throw ContractError("candidate " + f.str() + " must have dimension k + 1 = " + std::to_string(k + 1));
  }
}

inline CandidateVerdict standard_verdict(const CubicalComplex& skel, const HomologyProfile& full, const CubeWord& f,
                                         std::size_t k, std::size_t d) {
  const int j = static_cast<int>(d) - static_cast<int>(k);
  return compare_degrees(skel, full, f, k, {j, j - 1}, Ring::GF2, CriterionMode::Standard);
}

inline CandidateVerdict tight_verdict(const CubicalComplex& skel, const HomologyProfile& full, const CubeWord& f,
                                      std::size_t r, Ring ring) {
  return compare_degrees(skel, full, f, r, {static_cast<int>(r) - 1}, ring,
                         ring == Ring::GF2 ? CriterionMode::TightGf2 : CriterionMode::TightInteger);
}

inline void require_standard_indices(std::size_t k, std::size_t d) {
  if (k < 2) throw ContractError("face criterion requires k >= 2");
  if (d < k) throw ContractError("face criterion requires d >= k");
  if (d - k > k - 1) {
    throw ContractError("face criterion requires d - k <= k - 1 (k = " + std::to_string(k) +
                        ", d = " + std::to_string(d) + ")");
  }
}

}  // namespace detail

/// Every (k+1)-face of the ambient cube whose proper subfaces all lie in
/// skel, in canonical order.
inline std::vector<CubeWord> enumerate_candidates(const CubicalComplex& skel, std::size_t k) {
  detail::require_dimension_at_most(skel, k);
  std::unordered_set<CubeWord> seen;
  std::vector<CubeWord> out;
  for (const auto& g : skel.faces()) {
    if (g.dim() != k) continue;
    for (std::size_t i = 0; i < skel.ambient_dim(); ++i) {
      if (g[i] == Letter::Star) continue;
      const CubeWord f = g.with(i, Letter::Star);
      if (!seen.insert(f).second) continue;
      if (detail::boundary_present(skel, f)) out.push_back(f);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Accepts f iff deleting its boundary sphere leaves GF(2) homology of
/// skel unchanged in degrees d - k and d - k - 1.
inline CandidateVerdict face_criterion(const CubicalComplex& skel, const CubeWord& f, std::size_t k, std::size_t d) {
  detail::require_standard_indices(k, d);
  detail::require_dimension_at_most(skel, k);
  detail::require_candidate_shape(skel, f, k);
  return detail::standard_verdict(skel, betti_gf2(skel), f, k, d);
}

/// Middle-dimension criterion for d = 2r: compares degree r - 1 only. The
/// vanishing (GF2) or finiteness (INTEGER) of H_r is the caller's claim.
inline CandidateVerdict face_criterion_tight(const CubicalComplex& skel, const CubeWord& f, std::size_t r, Ring ring) {
  if (r < 2) throw ContractError("tight criterion requires r >= 2");
  detail::require_dimension_at_most(skel, r);
  detail::require_candidate_shape(skel, f, r);
  return detail::tight_verdict(skel, homology(skel, ring), f, r, ring);
}

/// Grows the k-skeleton one degree at a time up to degree d. All
/// candidates of a degree are judged against the same frozen complex and
/// accepted together.
inline ReconstructionResult reconstruct(const CubicalComplex& skel, const ReconstructionConfig& cfg) {
  cfg.validate();
  if (!cfg.d) throw ContractError("reconstruct needs a dimension; use reconstruct_auto");
  detail::require_dimension_at_most(skel, cfg.k);
  const std::size_t d = *cfg.d;

  ReconstructionResult result{skel, {}};
  for (std::size_t deg = cfg.k; deg < d; ++deg) {
    const CubicalComplex& current = result.complex;
    const auto candidates = enumerate_candidates(current, deg);
    const bool tight = cfg.mode != CriterionMode::Standard && deg == cfg.k;
    const Ring ring = (tight && cfg.mode == CriterionMode::TightInteger) ? Ring::Integer : Ring::GF2;
    if (!tight) detail::require_standard_indices(deg, d);

    const HomologyProfile full = homology(current, ring);
    std::vector<CandidateVerdict> verdicts(candidates.size());
    detail::parallel_for(candidates.size(), cfg.jobs, [&](std::size_t i) {
      verdicts[i] = tight ? detail::tight_verdict(current, full, candidates[i], deg, ring)
                          : detail::standard_verdict(current, full, candidates[i], deg, d);
    });

    std::vector<CubeWord> faces = current.faces();
    for (const auto& v : verdicts) {
      if (v.accepted) faces.push_back(v.face);
    }
    CubicalComplex next = CubicalComplex::from_closed_faces(current.ambient_dim(), std::move(faces));
    result.verdicts.insert(result.verdicts.end(), verdicts.begin(), verdicts.end());
    result.complex = std::move(next);
  }
  return result;
}

/// Tries every dimension d in k..d_max that the criteria cover and keeps
/// the reconstructions that are homology manifolds of dimension d. If skel
/// is itself a manifold it is reported too. The d = 2k branch runs the
/// tight GF(2) criterion and only when `allow_tight` is set.
inline std::vector<AutoReconstruction> reconstruct_auto(const CubicalComplex& skel, std::size_t k, std::size_t d_max,
                                                        bool allow_tight = false, std::size_t jobs = 1) {
  if (k < 2) throw ContractError("automatic reconstruction requires k >= 2");
  detail::require_dimension_at_most(skel, k);
  std::vector<AutoReconstruction> out;
  auto emit = [&](std::size_t d, const CubicalComplex& c, bool tight) {
    for (const auto& existing : out) {
      if (existing.d == d && existing.complex == c) return;
    }
    out.push_back({d, c, tight});
  };

  const ManifoldReport self = is_homology_manifold(skel);
  if (self.is_manifold) emit(*self.dimension, skel, false);

  for (std::size_t d = k; d <= d_max; ++d) {
    ReconstructionConfig cfg;
    cfg.k = k;
    cfg.d = d;
    cfg.jobs = jobs;
    bool tight = false;
    if (k >= d / 2 + 1) {
      cfg.mode = CriterionMode::Standard;
    } else if (d == 2 * k && d >= 4 && allow_tight) {
      cfg.mode = CriterionMode::TightGf2;
      tight = true;
    } else {
      continue;
    }
    const ReconstructionResult r = reconstruct(skel, cfg);
    const ManifoldReport report = is_homology_manifold(r.complex);
    if (report.is_manifold && *report.dimension == d) emit(d, r.complex, tight);
  }
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.d < b.d; });
  return out;
}

}  // namespace cubrecon
