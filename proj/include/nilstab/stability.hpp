#pragma once

// Degree-0 homological stability for Aut(N_r^c) with polynomial coefficients:
// coinvariants H_0(G; M) and the stabilization maps
//   H_0(G_r; M_r) -> H_0(G_r; M_{r+1}) -> H_0(G_{r+1}; M_{r+1}).

#include "nilstab/aut.hpp"
#include "nilstab/glmod.hpp"
#include "nilstab/snf.hpp"

#include <optional>
#include <vector>

namespace nilstab {

/// E_ij(1) for i != j, transpositions (i j) for i < j, diag(-1, 1, ..., 1).
std::vector<IntMatrix> gl_generators(unsigned r);

/// Lifts of gl_generators(r) to class c, plus sharp(beta) for beta running
/// over the unit HomMaps at every class step 2..c, lifted to class c.
std::vector<Endo> aut_generators(unsigned r, unsigned c);

/// Z^k / (relations + span{(g - I) v}).
FinAbPresentation coinvariants(const std::vector<IntMatrix> &gens, std::size_t k,
                               const IntMatrix &relations = IntMatrix());
/// Column matrix of the relation lattice used by coinvariants.
IntMatrix coinvariant_relations(const std::vector<IntMatrix> &gens, std::size_t k,
                                const IntMatrix &relations = IntMatrix());

/// Map coker(source_relations) -> coker(target_relations) induced by f.
struct InducedMapCheck {
  bool well_defined = false;
  bool injective = false;
  bool surjective = false;
  bool is_iso() const { return well_defined && injective && surjective; }
};

InducedMapCheck check_induced_map(const IntMatrix &f, const IntMatrix &source_relations,
                                  const IntMatrix &target_relations);

struct ScanEntry {
  unsigned r = 0;
  FinAbPresentation h0;
  /// Composite H_0(G_r; M_r) -> H_0(G_{r+1}; M_{r+1}); empty for the last r.
  std::optional<bool> map_to_next_is_iso;
  std::optional<bool> first_map_is_iso;
  std::optional<bool> second_map_is_iso;
};

struct ScanReport {
  std::string spec;
  unsigned class_bound = 0;
  std::vector<ScanEntry> entries;
  /// Least r such that every tested composite from r onward is an
  /// isomorphism; at least one pair must be tested.
  std::optional<unsigned> stabilized_from;
};

/// Throws std::invalid_argument for an empty or decreasing range.
ScanReport stability_scan(const ModuleSpec &spec, unsigned c, unsigned r_first, unsigned r_last);

/// Rank of Lambda^t Hom(Z^r, Lie^{c+1}) (x) M at rank r.
Integer kernel_homology_rank(unsigned c, unsigned t, const ModuleSpec &m, unsigned r);

} // namespace nilstab
