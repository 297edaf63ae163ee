#include "nilstab/glmod.hpp"

#include <map>
#include <sstream>
#include <stdexcept>

namespace nilstab {

struct ModuleSpec::Node {
  Kind kind;
  unsigned degree = 0;
  FinAbPresentation group;
  std::vector<ModuleSpec> children;
};

ModuleSpec ModuleSpec::constant(FinAbPresentation group) {
  for (const auto &d : group.invariant_factors)
    if (d <= 1)
      throw std::invalid_argument("const: invariant factors must exceed 1");
  return ModuleSpec(std::make_shared<const Node>(Node{Kind::Const, 0, std::move(group), {}}));
}

ModuleSpec ModuleSpec::standard() {
  return ModuleSpec(std::make_shared<const Node>(Node{Kind::Std, 0, {}, {}}));
}

ModuleSpec ModuleSpec::dual_standard() {
  return ModuleSpec(std::make_shared<const Node>(Node{Kind::DualStd, 0, {}, {}}));
}

ModuleSpec ModuleSpec::tensor(ModuleSpec a, ModuleSpec b) {
  return ModuleSpec(std::make_shared<const Node>(
      Node{Kind::Tensor, 0, {}, {std::move(a), std::move(b)}}));
}

ModuleSpec ModuleSpec::exterior(unsigned t, ModuleSpec a) {
  return ModuleSpec(std::make_shared<const Node>(Node{Kind::Ext, t, {}, {std::move(a)}}));
}

ModuleSpec ModuleSpec::hom(ModuleSpec source, ModuleSpec target) {
  return ModuleSpec(std::make_shared<const Node>(
      Node{Kind::Hom, 0, {}, {std::move(source), std::move(target)}}));
}

ModuleSpec ModuleSpec::sum(ModuleSpec a, ModuleSpec b) {
  return ModuleSpec(
      std::make_shared<const Node>(Node{Kind::Sum, 0, {}, {std::move(a), std::move(b)}}));
}

ModuleSpec ModuleSpec::lie_layer(unsigned n) {
  if (n == 0)
    throw std::invalid_argument("lie: degree must be at least 1");
  return ModuleSpec(std::make_shared<const Node>(Node{Kind::LieLayer, n, {}, {}}));
}

ModuleSpec::Kind ModuleSpec::kind() const { return node_->kind; }
const ModuleSpec &ModuleSpec::left() const { return node_->children.at(0); }
const ModuleSpec &ModuleSpec::right() const { return node_->children.at(1); }
unsigned ModuleSpec::degree() const { return node_->degree; }
const FinAbPresentation &ModuleSpec::constant_group() const { return node_->group; }

std::string ModuleSpec::to_string() const {
  switch (kind()) {
  case Kind::Const: {
    const auto &g = constant_group();
    if (g == FinAbPresentation::free(1))
      return "const";
    std::ostringstream os;
    os << "const(";
    bool first = true;
    if (g.free_rank > 0) {
      os << "Z";
      if (g.free_rank > 1)
        os << '^' << g.free_rank;
      first = false;
    }
    for (const auto &d : g.invariant_factors) {
      os << (first ? "" : " + ") << "Z/" << d;
      first = false;
    }
    if (first)
      os << "0";
    os << ')';
    return os.str();
  }
  case Kind::Std:
    return "std";
  case Kind::DualStd:
    return "dual";
  case Kind::Tensor:
    return "(" + left().to_string() + " (x) " + right().to_string() + ")";
  case Kind::Ext:
    return "ext(" + std::to_string(degree()) + ", " + left().to_string() + ")";
  case Kind::Hom:
    return "hom(" + left().to_string() + ", " + right().to_string() + ")";
  case Kind::Sum:
    return "(" + left().to_string() + " + " + right().to_string() + ")";
  case Kind::LieLayer:
    return "lie(" + std::to_string(degree()) + ")";
  }
  return {};
}

namespace {

IntMatrix inclusion(std::size_t target_dim, const std::vector<std::size_t> &positions) {
  IntMatrix m(target_dim, positions.size());
  for (std::size_t j = 0; j < positions.size(); ++j)
    m(positions[j], j) = 1;
  return m;
}

IntMatrix std_inclusion(unsigned r) {
  std::vector<std::size_t> pos(r);
  for (unsigned i = 0; i < r; ++i)
    pos[i] = i;
  return inclusion(r + 1, pos);
}

BasedModule eval_const(const FinAbPresentation &g, unsigned r, bool with_stab) {
  BasedModule m;
  m.group_rank = r;
  for (std::size_t i = 0; i < g.free_rank; ++i)
    m.basis.push_back("z" + std::to_string(i + 1));
  for (std::size_t i = 0; i < g.invariant_factors.size(); ++i)
    m.basis.push_back("t" + std::to_string(i + 1));
  const std::size_t dim = m.basis.size();
  m.relations = IntMatrix(dim, g.invariant_factors.size());
  for (std::size_t i = 0; i < g.invariant_factors.size(); ++i)
    m.relations(g.free_rank + i, i) = g.invariant_factors[i];
  m.action = [dim](const IntMatrix &) { return IntMatrix::identity(dim); };
  if (with_stab) {
    m.stab = IntMatrix::identity(dim);
    m.retraction = IntMatrix::identity(dim);
  }
  return m;
}

BasedModule eval_std(unsigned r, bool dual, bool with_stab) {
  BasedModule m;
  m.group_rank = r;
  for (unsigned i = 0; i < r; ++i)
    m.basis.push_back("e" + std::to_string(i + 1) + (dual ? "*" : ""));
  m.relations = IntMatrix(r, 0);
  if (dual)
    m.action = [](const IntMatrix &a) { return inverse_unimodular(a).transpose(); };
  else
    m.action = [](const IntMatrix &a) { return a; };
  // Dual: functionals extend by zero on the new basis vector, and restrict back.
  if (with_stab) {
    m.stab = std_inclusion(r);
    m.retraction = m.stab.transpose();
  }
  return m;
}

BasedModule eval_lie(unsigned n, unsigned r, bool with_stab) {
  BasedModule m;
  m.group_rank = r;
  const auto &words = lyndon_words(r, n);
  for (const auto &w : words)
    m.basis.push_back(make_lyndon(w).bracketing());
  m.relations = IntMatrix(words.size(), 0);
  m.action = [n](const IntMatrix &a) { return lie_layer_matrix(a, n); };
  if (!with_stab)
    return m;
  const auto &bigger = lyndon_words(r + 1, n);
  std::map<Word, std::size_t> index;
  for (std::size_t i = 0; i < bigger.size(); ++i)
    index.emplace(bigger[i], i);
  std::vector<std::size_t> pos;
  for (const auto &w : words)
    pos.push_back(index.at(w));
  m.stab = inclusion(bigger.size(), pos);
  m.retraction = m.stab.transpose();
  return m;
}

void require_free(const BasedModule &m, const char *what) {
  if (!m.is_free())
    throw std::invalid_argument(std::string(what) + " of a module with torsion is not supported");
}

BasedModule eval_tensor(const BasedModule &a, const BasedModule &b, bool with_stab) {
  BasedModule m;
  m.group_rank = a.group_rank;
  for (const auto &x : a.basis)
    for (const auto &y : b.basis)
      m.basis.push_back(x + "(x)" + y);
  m.action = [fa = a.action, fb = b.action](const IntMatrix &g) {
    return kronecker(fa(g), fb(g));
  };
  if (with_stab) {
    m.stab = kronecker(a.stab, b.stab);
    m.retraction = kronecker(a.retraction, b.retraction);
  }
  IntMatrix rel = IntMatrix(m.basis.size(), 0);
  if (!a.is_free())
    rel = hconcat(rel, kronecker(a.relations, IntMatrix::identity(b.dimension())));
  if (!b.is_free())
    rel = hconcat(rel, kronecker(IntMatrix::identity(a.dimension()), b.relations));
  m.relations = rel;
  return m;
}

BasedModule eval_ext(unsigned t, const BasedModule &a, bool with_stab) {
  require_free(a, "ext");
  BasedModule m;
  m.group_rank = a.group_rank;
  for (const auto &tuple : increasing_tuples(a.dimension(), t)) {
    std::string label = tuple.empty() ? "1" : "";
    for (std::size_t k = 0; k < tuple.size(); ++k)
      label += (k ? "^" : "") + a.basis[tuple[k]];
    m.basis.push_back(label);
  }
  m.relations = IntMatrix(m.basis.size(), 0);
  m.action = [t, fa = a.action](const IntMatrix &g) { return compound(fa(g), t); };
  if (with_stab) {
    m.stab = compound(a.stab, t);
    m.retraction = compound(a.retraction, t);
  }
  return m;
}

BasedModule eval_hom(const BasedModule &source, const BasedModule &target, bool with_stab) {
  require_free(source, "hom");
  require_free(target, "hom");
  BasedModule m;
  m.group_rank = source.group_rank;
  // Basis E_{ij}: source basis j -> target basis i, ordered by (i, j).
  for (const auto &y : target.basis)
    for (const auto &x : source.basis)
      m.basis.push_back(x + "->" + y);
  m.relations = IntMatrix(m.basis.size(), 0);
  // phi -> rho_N(A) phi rho_M(A)^-1, row-major vectorization.
  m.action = [fs = source.action, ft = target.action](const IntMatrix &g) {
    return kronecker(ft(g), fs(inverse_unimodular(g)).transpose());
  };
  // phi -> stab_N phi ret_M, and back via ret_N phi stab_M.
  if (with_stab) {
    m.stab = kronecker(target.stab, source.retraction.transpose());
    m.retraction = kronecker(target.retraction, source.stab.transpose());
  }
  return m;
}

BasedModule eval_sum(const BasedModule &a, const BasedModule &b, bool with_stab) {
  BasedModule m;
  m.group_rank = a.group_rank;
  for (const auto &x : a.basis)
    m.basis.push_back("L:" + x);
  for (const auto &y : b.basis)
    m.basis.push_back("R:" + y);
  m.action = [fa = a.action, fb = b.action](const IntMatrix &g) {
    return block_diagonal(fa(g), fb(g));
  };
  if (with_stab) {
    m.stab = block_diagonal(a.stab, b.stab);
    m.retraction = block_diagonal(a.retraction, b.retraction);
  }
  m.relations = block_diagonal(a.relations, b.relations);
  return m;
}

} // namespace

BasedModule eval_module(const ModuleSpec &spec, unsigned r, bool with_stabilization) {
  const bool w = with_stabilization;
  if (r == 0)
    throw std::invalid_argument("eval_module: rank must be positive");
  switch (spec.kind()) {
  case ModuleSpec::Kind::Const:
    return eval_const(spec.constant_group(), r, w);
  case ModuleSpec::Kind::Std:
    return eval_std(r, false, w);
  case ModuleSpec::Kind::DualStd:
    return eval_std(r, true, w);
  case ModuleSpec::Kind::Tensor:
    return eval_tensor(eval_module(spec.left(), r, w), eval_module(spec.right(), r, w), w);
  case ModuleSpec::Kind::Ext:
    return eval_ext(spec.degree(), eval_module(spec.left(), r, w), w);
  case ModuleSpec::Kind::Hom:
    return eval_hom(eval_module(spec.left(), r, w), eval_module(spec.right(), r, w), w);
  case ModuleSpec::Kind::Sum:
    return eval_sum(eval_module(spec.left(), r, w), eval_module(spec.right(), r, w), w);
  case ModuleSpec::Kind::LieLayer:
    return eval_lie(spec.degree(), r, w);
  }
  throw std::logic_error("eval_module: unknown constructor");
}

Integer predicted_dimension(const ModuleSpec &spec, unsigned r) {
  switch (spec.kind()) {
  case ModuleSpec::Kind::Const:
    return Integer(static_cast<unsigned long>(spec.constant_group().free_rank +
                                              spec.constant_group().invariant_factors.size()));
  case ModuleSpec::Kind::Std:
  case ModuleSpec::Kind::DualStd:
    return Integer(r);
  case ModuleSpec::Kind::Tensor:
  case ModuleSpec::Kind::Hom:
    return predicted_dimension(spec.left(), r) * predicted_dimension(spec.right(), r);
  case ModuleSpec::Kind::Ext:
    return binomial(predicted_dimension(spec.left(), r), spec.degree());
  case ModuleSpec::Kind::Sum:
    return predicted_dimension(spec.left(), r) + predicted_dimension(spec.right(), r);
  case ModuleSpec::Kind::LieLayer:
    return witt_rank(r, spec.degree());
  }
  throw std::logic_error("predicted_dimension: unknown constructor");
}

IntMatrix restrict_action(const BasedModule &module, const Endo &e) {
  if (e.rank() != module.group_rank)
    throw std::invalid_argument("restrict_action: rank mismatch");
  if (!is_automorphism(e))
    throw std::domain_error("restrict_action: not an automorphism");
  return module.action(abelianization_matrix(e));
}

IntMatrix restrict_action(const ModuleSpec &spec, const Endo &e) {
  return restrict_action(eval_module(spec, e.rank()), e);
}

ModuleSpec kernel_homology_module(unsigned c, unsigned t, const ModuleSpec &m) {
  if (c == 0)
    throw std::invalid_argument("kernel_homology_module: c must be positive");
  return ModuleSpec::tensor(
      ModuleSpec::exterior(t, ModuleSpec::hom(ModuleSpec::standard(), ModuleSpec::lie_layer(c + 1))),
      m);
}

} // namespace nilstab
