#include "nilstab/stability.hpp"

#include <set>
#include <sstream>
#include <stdexcept>

namespace nilstab {

std::vector<IntMatrix> gl_generators(unsigned r) {
  if (r == 0)
    throw std::invalid_argument("gl_generators: r must be positive");
  std::vector<IntMatrix> gens;
  for (unsigned i = 0; i < r; ++i)
    for (unsigned j = 0; j < r; ++j)
      if (i != j)
        gens.push_back(elementary(r, i, j));
  for (unsigned i = 0; i < r; ++i)
    for (unsigned j = i + 1; j < r; ++j)
      gens.push_back(transposition(r, i, j));
  gens.push_back(sign_flip(r));
  return gens;
}

std::vector<Endo> aut_generators(unsigned r, unsigned c) {
  if (r == 0 || c == 0)
    throw std::invalid_argument("aut_generators: r and c must be positive");
  auto lift_to = [c](Endo e) {
    while (e.class_bound() < c)
      e = lift(e);
    return e;
  };
  std::vector<Endo> gens;
  for (const auto &a : gl_generators(r))
    gens.push_back(lift_to(Endo::from_matrix(a, 1)));
  for (unsigned k = 2; k <= c; ++k) {
    const std::size_t rows = hom_map_rows(r, k);
    for (std::size_t row = 0; row < rows; ++row)
      for (unsigned col = 0; col < r; ++col)
        gens.push_back(lift_to(sharp(HomMap::unit(r, k, row, col))));
  }
  return gens;
}

IntMatrix coinvariant_relations(const std::vector<IntMatrix> &gens, std::size_t k,
                                const IntMatrix &relations) {
  std::set<std::vector<std::string>> seen;
  IntMatrix rel(k, 0);
  if (relations.cols() > 0) {
    if (relations.rows() != k)
      throw std::invalid_argument("coinvariants: relation matrix has wrong row count");
    rel = relations;
  }
  for (const auto &g : gens) {
    if (g.rows() != k || g.cols() != k)
      throw std::invalid_argument("coinvariants: generator is not k x k");
    if (g.is_identity())
      continue;
    // Skip repeated generators (kernel lifts often share an action).
    std::vector<std::string> key;
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j)
        key.push_back(g(i, j).get_str());
    if (!seen.insert(std::move(key)).second)
      continue;
    rel = hconcat(rel, g - IntMatrix::identity(k));
  }
  if (rel.cols() == 0)
    return IntMatrix(k, 0);
  return column_lattice_basis(rel);
}

FinAbPresentation coinvariants(const std::vector<IntMatrix> &gens, std::size_t k,
                               const IntMatrix &relations) {
  return cokernel(coinvariant_relations(gens, k, relations), k);
}

InducedMapCheck check_induced_map(const IntMatrix &f, const IntMatrix &source_relations,
                                  const IntMatrix &target_relations) {
  const std::size_t k_source = f.cols();
  const std::size_t k_target = f.rows();
  InducedMapCheck out;

  out.well_defined = true;
  for (std::size_t j = 0; j < source_relations.cols(); ++j)
    if (!lattice_contains(target_relations, f * source_relations.column(j))) {
      out.well_defined = false;
      break;
    }

  IntMatrix combined = hconcat(f, target_relations.cols() ? target_relations
                                                          : IntMatrix(k_target, 0));
  if (combined.cols() == 0)
    combined = IntMatrix(k_target, 0);
  out.surjective = cokernel(combined, k_target).is_trivial();

  // Kernel of the induced map: x with f x in the target lattice, modulo the
  // source lattice.
  out.injective = true;
  if (k_source > 0) {
    IntMatrix kernel = integer_kernel(combined);
    for (std::size_t j = 0; j < kernel.cols(); ++j) {
      std::vector<Integer> x = kernel.column(j);
      x.resize(k_source);
      if (!lattice_contains(source_relations, x)) {
        out.injective = false;
        break;
      }
    }
  }
  return out;
}

namespace {

struct RankData {
  BasedModule module;
  std::vector<Endo> gens;
  IntMatrix relations; // lattice defining H_0(G_r; M_r)
};

RankData compute_rank(const ModuleSpec &spec, unsigned c, unsigned r) {
  RankData d{eval_module(spec, r), aut_generators(r, c), IntMatrix()};
  std::vector<IntMatrix> actions;
  for (const auto &g : d.gens)
    actions.push_back(restrict_action(d.module, g));
  d.relations = coinvariant_relations(actions, d.module.dimension(), d.module.relations);
  return d;
}

} // namespace

ScanReport stability_scan(const ModuleSpec &spec, unsigned c, unsigned r_first, unsigned r_last) {
  if (r_first == 0 || r_last < r_first)
    throw std::invalid_argument("stability_scan: empty range");
  if (c == 0)
    throw std::invalid_argument("stability_scan: class must be positive");
  ScanReport report;
  report.spec = spec.to_string();
  report.class_bound = c;

  std::vector<RankData> data;
  for (unsigned r = r_first; r <= r_last; ++r)
    data.push_back(compute_rank(spec, c, r));

  for (std::size_t idx = 0; idx < data.size(); ++idx) {
    const RankData &here = data[idx];
    ScanEntry entry;
    entry.r = r_first + static_cast<unsigned>(idx);
    entry.h0 = cokernel(here.relations, here.module.dimension());
    if (idx + 1 < data.size()) {
      const RankData &next = data[idx + 1];
      // G_r acting on M_{r+1} through the stabilized automorphisms.
      std::vector<IntMatrix> mid_actions;
      for (const auto &g : here.gens)
        mid_actions.push_back(restrict_action(next.module, stabilize(g)));
      IntMatrix mid = coinvariant_relations(mid_actions, next.module.dimension(),
                                            next.module.relations);
      const IntMatrix &f = here.module.stab;
      auto first = check_induced_map(f, here.relations, mid);
      auto second = check_induced_map(IntMatrix::identity(next.module.dimension()), mid,
                                      next.relations);
      auto composite = check_induced_map(f, here.relations, next.relations);
      if (!first.well_defined || !second.well_defined || !composite.well_defined)
        throw std::logic_error("stability_scan: stabilization map is not equivariant");
      entry.first_map_is_iso = first.is_iso();
      entry.second_map_is_iso = second.is_iso();
      entry.map_to_next_is_iso = composite.is_iso();
    }
    report.entries.push_back(entry);
  }

  // Walk back from the last tested pair.
  std::optional<unsigned> from;
  for (std::size_t idx = report.entries.size(); idx-- > 0;) {
    const auto &iso = report.entries[idx].map_to_next_is_iso;
    if (!iso)
      continue;
    if (!*iso)
      break;
    from = report.entries[idx].r;
  }
  report.stabilized_from = from;
  return report;
}

Integer kernel_homology_rank(unsigned c, unsigned t, const ModuleSpec &m, unsigned r) {
  return Integer(static_cast<unsigned long>(
      eval_module(kernel_homology_module(c, t, m), r, false).dimension()));
}

} // namespace nilstab
