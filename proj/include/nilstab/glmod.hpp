#pragma once

// Polynomial GL_r(Z)-modules built from the standard module Z^r and its
// inverse transpose, evaluated at a rank as based free abelian groups (or,
// for constants with torsion, as presented ones).

#include "nilstab/aut.hpp"
#include "nilstab/matrix.hpp"
#include "nilstab/snf.hpp"

#include <functional>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace nilstab {

class ModuleSpec {
public:
  enum class Kind { Const, Std, DualStd, Tensor, Ext, Hom, Sum, LieLayer };

  static ModuleSpec constant(FinAbPresentation group = FinAbPresentation::free(1));
  static ModuleSpec standard();
  static ModuleSpec dual_standard();
  static ModuleSpec tensor(ModuleSpec a, ModuleSpec b);
  static ModuleSpec exterior(unsigned t, ModuleSpec a);
  static ModuleSpec hom(ModuleSpec source, ModuleSpec target);
  static ModuleSpec sum(ModuleSpec a, ModuleSpec b);
  /// Degree-n layer of the free Lie ring on the standard module; n >= 1.
  static ModuleSpec lie_layer(unsigned n);

  Kind kind() const;
  const ModuleSpec &left() const;
  const ModuleSpec &right() const;
  /// t for Ext, n for LieLayer.
  unsigned degree() const;
  const FinAbPresentation &constant_group() const;

  /// Canonical text in the spec grammar; parse_module_spec round-trips it.
  std::string to_string() const;

private:
  struct Node;
  explicit ModuleSpec(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

/// Grammar (whitespace-insensitive):
///   expr   := term ('+' term)*
///   term   := factor ('(x)' factor)*
///   factor := 'std' | 'dual' | 'const' ['(' group ')'] | 'lie(' n ')'
///           | 'ext(' t ',' expr ')' | 'hom(' expr ',' expr ')'
///           | 'tensor(' expr ',' expr ')' | 'sum(' expr ',' expr ')' | '(' expr ')'
///   group  := gpart ('+' gpart)*,  gpart := 'Z' | 'Z^' k | 'Z/' d
/// Throws std::invalid_argument with the offending position on errors.
ModuleSpec parse_module_spec(std::string_view text);

struct BasedModule {
  unsigned group_rank = 0;
  std::vector<std::string> basis;
  /// GL_r(Z) matrix -> action on the basis (columns are images).
  std::function<IntMatrix(const IntMatrix &)> action;
  /// M_r -> M_{r+1}, equivariant for A -> diag(A, 1).
  IntMatrix stab;
  /// M_{r+1} -> M_r, equivariant left inverse of stab.
  IntMatrix retraction;
  /// Relation columns; none for free modules.
  IntMatrix relations;

  std::size_t dimension() const { return basis.size(); }
  bool is_free() const { return relations.cols() == 0; }
};

/// Without stabilization, stab and retraction are left empty.
BasedModule eval_module(const ModuleSpec &spec, unsigned r, bool with_stabilization = true);

/// Number of basis elements at rank r, computed from dimension-count identities
/// alone (no evaluation).
Integer predicted_dimension(const ModuleSpec &spec, unsigned r);

/// Action of an automorphism of N_r^c through its abelianization.
/// Throws std::domain_error for non-automorphisms.
IntMatrix restrict_action(const BasedModule &module, const Endo &e);
IntMatrix restrict_action(const ModuleSpec &spec, const Endo &e);

/// Lambda^t Hom(Std, Lie^{c+1}) (x) M.
ModuleSpec kernel_homology_module(unsigned c, unsigned t, const ModuleSpec &m);

} // namespace nilstab
