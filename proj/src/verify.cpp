#include "nilstab/verify.hpp"

#include "nilstab/glmod.hpp"
#include "nilstab/stability.hpp"

#include <chrono>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace nilstab {

namespace {

// Runs body; a thrown exception or a returned message marks failure.
CheckResult run_check(const std::string &name, const std::function<std::string()> &body) {
  CheckResult res{name, false, {}, 0};
  auto start = std::chrono::steady_clock::now();
  try {
    res.detail = body();
    res.passed = res.detail.empty();
  } catch (const std::exception &ex) {
    res.detail = std::string("exception: ") + ex.what();
  }
  res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return res;
}

template <typename T> std::string show(const T &x) {
  std::ostringstream os;
  os << x;
  return os.str();
}

// Left-normed commutator [x_{i_1}, [x_{i_2}, ... [x_{i_{k-1}}, x_{i_k}]]].
GroupElement iterated_commutator(unsigned r, unsigned c, const std::vector<unsigned> &letters) {
  GroupElement g = GroupElement::generator(r, c, letters.back());
  for (std::size_t k = letters.size() - 1; k-- > 0;)
    g = comm(GroupElement::generator(r, c, letters[k]), g);
  return g;
}

} // namespace

std::vector<CheckResult> verify_lie(unsigned r, unsigned c, Rng &rng, const VerifyOptions &opts) {
  std::vector<CheckResult> out;

  out.push_back(run_check("lie.witt_equals_lyndon_count", [&]() -> std::string {
    for (unsigned n = 1; n <= c + 1; ++n) {
      auto basis = lyndon_basis(r, n);
      if (Integer(static_cast<unsigned long>(basis.size())) != witt_rank(r, n))
        return "n=" + std::to_string(n) + ": " + std::to_string(basis.size()) +
               " Lyndon words vs witt " + witt_rank(r, n).get_str();
      for (std::size_t i = 0; i < basis.size(); ++i) {
        if (!is_lyndon(basis[i].word) || basis[i].degree() != n)
          return "bad basis word " + basis[i].word;
        if (i > 0 && !(basis[i - 1].word < basis[i].word))
          return "basis not in lexicographic order at " + basis[i].word;
      }
    }
    return {};
  }));

  out.push_back(run_check("lie.antisymmetry", [&]() -> std::string {
    for (unsigned s = 0; s < opts.lie_samples; ++s) {
      LieElement x = random_lie_element(rng, r, c);
      LieElement y = random_lie_element(rng, r, c);
      if (!(lie_bracket(x, y) + lie_bracket(y, x)).is_zero())
        return "[x,y] + [y,x] != 0 for x=" + show(x) + ", y=" + show(y);
      if (!lie_bracket(x, x).is_zero())
        return "[x,x] != 0";
    }
    return {};
  }));

  out.push_back(run_check("lie.jacobi", [&]() -> std::string {
    for (unsigned s = 0; s < opts.lie_samples; ++s) {
      LieElement x = random_lie_element(rng, r, c, 2, 0.4);
      LieElement y = random_lie_element(rng, r, c, 2, 0.4);
      LieElement z = random_lie_element(rng, r, c, 2, 0.4);
      LieElement j = lie_bracket(x, lie_bracket(y, z)) + lie_bracket(y, lie_bracket(z, x)) +
                     lie_bracket(z, lie_bracket(x, y));
      if (!j.is_zero())
        return "Jacobi sum is " + show(j);
    }
    return {};
  }));

  out.push_back(run_check("lie.grading", [&]() -> std::string {
    for (unsigned m = 1; m <= c; ++m)
      for (unsigned n = 1; n <= c; ++n) {
        LieElement x = random_homogeneous_lie(rng, r, c, m);
        LieElement y = random_homogeneous_lie(rng, r, c, n);
        LieElement b = lie_bracket(x, y);
        if (b.is_zero())
          continue;
        if (m + n > c)
          return "bracket above the class bound survived";
        if (b.homogeneous_degree() != m + n)
          return "bracket of degrees " + std::to_string(m) + "," + std::to_string(n) +
                 " not homogeneous of degree m+n";
      }
    return {};
  }));

  out.push_back(run_check("lie.associative_envelope", [&]() -> std::string {
    // Distinct basis elements have distinct expansions (leading monomial w),
    // and the bracket matches the ring commutator.
    for (unsigned n = 1; n <= c; ++n)
      for (const auto &w : lyndon_words(r, n)) {
        const AssocPoly &p = lie_polynomial(w);
        if (p.begin()->first != w || p.begin()->second != 1)
          return "expansion of " + w + " does not lead with w";
      }
    for (unsigned s = 0; s < opts.lie_samples; ++s) {
      LieElement x = random_lie_element(rng, r, c);
      LieElement y = random_lie_element(rng, r, c);
      if (lie_bracket(x, y).to_assoc() != assoc_commutator(x.to_assoc(), y.to_assoc(), c))
        return "bracket does not intertwine with XY - YX";
    }
    return {};
  }));

  out.push_back(run_check("lie.gl_functoriality", [&]() -> std::string {
    for (unsigned s = 0; s < opts.lie_samples; ++s) {
      IntMatrix a = random_gl_matrix(rng, r, 4);
      IntMatrix b = random_gl_matrix(rng, r, 4);
      LieElement x = random_lie_element(rng, r, c);
      LieElement y = random_lie_element(rng, r, c);
      if (lie_apply_matrix(IntMatrix::identity(r), x) != x)
        return "identity matrix does not act trivially";
      if (lie_apply_matrix(a * b, x) != lie_apply_matrix(a, lie_apply_matrix(b, x)))
        return "action not multiplicative";
      if (lie_apply_matrix(a, x + y) != lie_apply_matrix(a, x) + lie_apply_matrix(a, y))
        return "action not additive";
      if (lie_apply_matrix(a, lie_bracket(x, y)) !=
          lie_bracket(lie_apply_matrix(a, x), lie_apply_matrix(a, y)))
        return "action does not preserve brackets";
    }
    return {};
  }));

  return out;
}

std::vector<CheckResult> verify_nilgroup(unsigned r, unsigned c, Rng &rng,
                                         const VerifyOptions &opts) {
  std::vector<CheckResult> out;
  const GroupElement one = GroupElement::identity(r, c);

  out.push_back(run_check("nilgroup.group_law_with_magnus_oracle", [&]() -> std::string {
    auto checked_mul = [&](const GroupElement &g, const GroupElement &h) {
      GroupElement gh = mul(g, h);
      if (magnus_embed(gh) != magnus_embed(g) * magnus_embed(h))
        throw std::runtime_error("collected product disagrees with the Magnus product");
      return gh;
    };
    for (unsigned s = 0; s < opts.triples; ++s) {
      GroupElement g = random_element(rng, r, c);
      GroupElement h = random_element(rng, r, c);
      GroupElement k = random_element(rng, r, c);
      if (checked_mul(checked_mul(g, h), k) != checked_mul(g, checked_mul(h, k)))
        return "associativity fails for " + show(g) + ", " + show(h) + ", " + show(k);
      if (checked_mul(g, one) != g || checked_mul(one, g) != g)
        return "identity law fails for " + show(g);
      GroupElement gi = inv(g);
      if (!checked_mul(g, gi).is_identity() || !checked_mul(gi, g).is_identity())
        return "inverse law fails for " + show(g);
    }
    return {};
  }));

  out.push_back(run_check("nilgroup.normal_form_roundtrip", [&]() -> std::string {
    for (unsigned s = 0; s < opts.triples; ++s) {
      GroupElement g = random_element(rng, r, c);
      TruncatedSeries sg = magnus_embed(g);
      if (!sg.is_unit())
        return "embedding has constant term != 1";
      if (magnus_peel(sg) != g)
        return "peel(embed(g)) != g for " + show(g);
    }
    return {};
  }));

  out.push_back(run_check("nilgroup.graded_pieces", [&]() -> std::string {
    for (unsigned n = 1; n <= c; ++n) {
      const auto &words = lyndon_words(r, n);
      if (Integer(static_cast<unsigned long>(words.size())) != witt_rank(r, n))
        return "gr^" + std::to_string(n) + " basis size differs from witt rank";
      for (const auto &w : words) {
        GroupElement b = GroupElement::basic(r, c, w);
        if (lcs_degree(b) != n)
          return "basic commutator " + w + " has wrong lcs degree";
        // Leading Magnus term is the Lie polynomial of w.
        TruncatedSeries lead = magnus_embed(b).homogeneous_part(n);
        if (lead.coefficients() != lie_polynomial(w))
          return "leading Magnus term of " + w + " is not its Lie polynomial";
      }
    }
    return {};
  }));

  out.push_back(run_check("nilgroup.central_extension", [&]() -> std::string {
    // Exhaustive on basis elements: kernel of truncation to c-1 = top degree
    // = center (the latter for r >= 2; N_1^c = Z is abelian).
    std::size_t kernel_count = 0;
    for (unsigned n = 1; n <= c; ++n)
      for (const auto &w : lyndon_words(r, n)) {
        GroupElement b = GroupElement::basic(r, c, w);
        bool in_kernel = c == 1 ? true : truncate(b, c - 1).is_identity();
        if (in_kernel != (n == c))
          return "truncation kernel membership wrong for " + w;
        kernel_count += in_kernel;
        bool central = center_test(b);
        bool expected_central = r == 1 || n == c;
        if (central != expected_central)
          return "center_test wrong for " + w;
      }
    if (Integer(static_cast<unsigned long>(kernel_count)) != witt_rank(r, c))
      return "kernel rank differs from witt_rank(r, c)";
    for (unsigned s = 0; s < opts.lie_samples; ++s) {
      GroupElement g = random_element(rng, r, c);
      bool top_only = g.is_identity() || lcs_degree(g) == c;
      if (c >= 2 && truncate(g, c - 1).is_identity() != top_only)
        return "truncation kernel wrong for random " + show(g);
      if (r >= 2 && center_test(g) != top_only)
        return "center_test wrong for random " + show(g);
      GroupElement h = random_element(rng, r, c);
      for (unsigned cp = 1; cp <= c; ++cp)
        if (truncate(mul(g, h), cp) != mul(truncate(g, cp), truncate(h, cp)))
          return "truncate is not a homomorphism";
    }
    return {};
  }));

  out.push_back(run_check("nilgroup.nilpotency_class_exact", [&]() -> std::string {
    if (r == 1)
      return {}; // N_1^c = Z has class 1 for every c
    std::vector<unsigned> top(c, 0);
    top.back() = 1;
    if (iterated_commutator(r, c, top).is_identity())
      return "weight-c commutator [a,...,[a,b]] is trivial";
    std::vector<unsigned> letters(c + 1, 0);
    std::size_t total = 1;
    for (unsigned k = 0; k <= c; ++k)
      total *= r;
    const std::size_t budget = 512;
    for (std::size_t s = 0; s < std::min(total, budget); ++s) {
      if (total <= budget) {
        std::size_t code = s;
        for (auto &x : letters) {
          x = static_cast<unsigned>(code % r);
          code /= r;
        }
      } else {
        for (auto &x : letters)
          x = static_cast<unsigned>(random_int(rng, 0, r - 1));
      }
      if (!iterated_commutator(r, c, letters).is_identity())
        return "a weight-(c+1) commutator is nontrivial";
    }
    return {};
  }));

  out.push_back(run_check("nilgroup.homology_ranks", [&]() -> std::string {
    if (h1_rank(r, c) != r)
      return "h1_rank != r";
    if (h2_rank(r, c) != witt_rank(r, c + 1) ||
        h2_rank(r, c) != Integer(static_cast<unsigned long>(lyndon_words(r, c + 1).size())))
      return "h2_rank != witt_rank(r, c+1)";
    // Abelianization N -> Z^r has kernel Gamma_2.
    for (unsigned s = 0; s < opts.lie_samples; ++s) {
      GroupElement g = random_element(rng, r, c);
      GroupElement h = random_element(rng, r, c);
      GroupElement ab = truncate(mul(g, h), 1);
      GroupElement expected = mul(truncate(g, 1), truncate(h, 1));
      if (ab != expected)
        return "abelianization is not a homomorphism";
      for (const auto &[w, e] : ab.exponents())
        if (e != g.exponent(w) + h.exponent(w))
          return "abelianization is not additive on exponents";
      GroupElement k = comm(g, h);
      if (!truncate(k, 1).is_identity())
        return "commutator survives abelianization";
      if (!k.is_identity() && *lcs_degree(k) < 2)
        return "commutator outside Gamma_2";
    }
    return {};
  }));

  return out;
}

std::vector<CheckResult> verify_aut(unsigned r, unsigned c, Rng &rng, const VerifyOptions &opts) {
  std::vector<CheckResult> out;
  const Endo id = Endo::identity(r, c);

  out.push_back(run_check("aut.apply_is_homomorphism", [&]() -> std::string {
    for (unsigned s = 0; s < opts.lie_samples; ++s) {
      std::vector<GroupElement> images;
      for (unsigned i = 0; i < r; ++i)
        images.push_back(random_element(rng, r, c, 2, 0.4));
      Endo e = Endo::from_images(images);
      GroupElement g = random_element(rng, r, c, 2, 0.4);
      GroupElement h = random_element(rng, r, c, 2, 0.4);
      if (apply(e, mul(g, h)) != mul(apply(e, g), apply(e, h)))
        return "apply(e, gh) != apply(e, g) apply(e, h)";
      if (apply(id, g) != g)
        return "identity endomorphism moves an element";
    }
    return {};
  }));

  out.push_back(run_check("aut.invert_two_sided", [&]() -> std::string {
    for (unsigned s = 0; s < opts.lift_samples; ++s) {
      Endo e = random_automorphism(rng, r, c, 3);
      if (!is_automorphism(e))
        return "random automorphism failed is_automorphism";
      Endo f = invert(e);
      if (compose(e, f) != id || compose(f, e) != id)
        return "invert is not a two-sided inverse";
      if (abelianization_matrix(compose(e, f)) !=
          abelianization_matrix(e) * abelianization_matrix(f))
        return "abelianization is not functorial";
    }
    // Endomorphisms with |det| != 1 are rejected.
    for (unsigned s = 0; s < opts.lie_samples; ++s) {
      IntMatrix a = random_int_matrix(rng, r, r, 2);
      Endo e = Endo::from_matrix(a, c);
      bool unimodular = abs(determinant(a)) == 1;
      if (is_automorphism(e) != unimodular)
        return "is_automorphism disagrees with the determinant";
      bool threw = false;
      try {
        (void)invert(e);
      } catch (const std::domain_error &) {
        threw = true;
      }
      if (threw == unimodular)
        return "invert accepted a non-automorphism or rejected an automorphism";
    }
    return {};
  }));

  out.push_back(run_check("aut.project_homomorphism", [&]() -> std::string {
    if (c < 2)
      return {};
    for (unsigned s = 0; s < opts.lift_samples; ++s) {
      Endo e1 = random_automorphism(rng, r, c, 3);
      Endo e2 = random_automorphism(rng, r, c, 3);
      if (project(compose(e1, e2)) != compose(project(e1), project(e2)))
        return "project is not compatible with composition";
      if (!is_automorphism(project(e1)))
        return "project does not preserve automorphisms";
    }
    if (project(id) != Endo::identity(r, c - 1))
      return "project(identity) != identity";
    return {};
  }));

  out.push_back(run_check("aut.lift_surjectivity", [&]() -> std::string {
    if (c < 2)
      return {};
    for (unsigned s = 0; s < opts.lift_samples; ++s) {
      Endo phi = random_automorphism(rng, r, c - 1, 5);
      Endo lifted = lift(phi);
      if (project(lifted) != phi)
        return "project(lift(phi)) != phi";
      if (!is_automorphism(lifted))
        return "lift is not an automorphism";
      if (determinant(abelianization_matrix(lifted)) != determinant(abelianization_matrix(phi)))
        return "lift changed the abelianization determinant";
    }
    return {};
  }));

  out.push_back(run_check("aut.kernel_flat_sharp", [&]() -> std::string {
    if (c < 2)
      return {};
    const std::size_t rows = hom_map_rows(r, c);
    if (Integer(static_cast<unsigned long>(rows * r)) != r * witt_rank(r, c))
      return "HomMap dimension differs from r * witt_rank(r, c)";
    // Unit HomMaps give independent kernel elements.
    for (std::size_t i = 0; i < rows; ++i)
      for (unsigned j = 0; j < r; ++j) {
        HomMap u = HomMap::unit(r, c, i, j);
        Endo e = sharp(u);
        if (!in_projection_kernel(e) || flat(e) != u)
          return "unit HomMap does not round-trip";
      }
    for (unsigned s = 0; s < opts.hom_samples; ++s) {
      HomMap beta = random_hom_map(rng, r, c);
      Endo b = sharp(beta);
      if (!is_automorphism(b) || !in_projection_kernel(b))
        return "sharp(beta) is not a kernel automorphism";
      if (flat(b) != beta)
        return "flat(sharp(beta)) != beta";
      HomMap gamma = random_hom_map(rng, r, c);
      if (sharp(beta + gamma) != compose(sharp(beta), sharp(gamma)))
        return "sharp is not a homomorphism";
    }
    // Kernel elements built independently of sharp: conjugates of kernel
    // elements by random automorphisms (the kernel is normal).
    for (unsigned s = 0; s < opts.kernel_samples; ++s) {
      Endo e = random_automorphism(rng, r, c, 2);
      Endo alpha = compose(invert(e), compose(sharp(random_hom_map(rng, r, c, 2)), e));
      if (!in_projection_kernel(alpha))
        return "conjugate of a kernel element left the kernel";
      if (sharp(flat(alpha)) != alpha)
        return "sharp(flat(alpha)) != alpha";
      Endo alpha2 = sharp(random_hom_map(rng, r, c, 2));
      if (flat(compose(alpha, alpha2)) != flat(alpha) + flat(alpha2))
        return "flat is not additive";
    }
    // Non-kernel elements are rejected by flat.
    if (r >= 2) {
      Endo swap = lift(Endo::from_matrix(transposition(r, 0, 1), c - 1));
      bool threw = false;
      try {
        (void)flat(swap);
      } catch (const std::domain_error &) {
        threw = true;
      }
      if (!threw)
        return "flat accepted an element outside the kernel";
    }
    return {};
  }));

  out.push_back(run_check("aut.conjugation_factors_through_gl", [&]() -> std::string {
    if (c < 2)
      return {};
    for (unsigned s = 0; s < opts.conjugation_samples; ++s) {
      Endo e = random_automorphism(rng, r, c, 3);
      HomMap beta = random_hom_map(rng, r, c, 2);
      Endo alpha = sharp(beta);
      HomMap conj = flat(compose(invert(e), compose(alpha, e)));
      IntMatrix a = abelianization_matrix(e);
      if (conj != hom_gl_action(inverse_unimodular(a), beta))
        return "conjugation is not the GL_r(Z)-action of the abelianization";
      // IA automorphisms (identity on abelianization) fix flat values.
      Endo ia = id;
      for (unsigned k = 2; k <= c; ++k) {
        Endo step = sharp(random_hom_map(rng, r, k, 1));
        while (step.class_bound() < c)
          step = lift(step);
        ia = compose(ia, step);
      }
      if (!abelianization_matrix(ia).is_identity())
        return "IA automorphism has nontrivial abelianization";
      if (flat(compose(invert(ia), compose(alpha, ia))) != beta)
        return "IA automorphism moved a flat value";
    }
    return {};
  }));

  out.push_back(run_check("aut.stabilize", [&]() -> std::string {
    if (r + 1 > kMaxRank)
      return {};
    if (stabilize(id) != Endo::identity(r + 1, c))
      return "stabilize(identity) != identity";
    for (unsigned s = 0; s < opts.lift_samples / 2 + 1; ++s) {
      Endo e1 = random_automorphism(rng, r, c, 3);
      Endo e2 = random_automorphism(rng, r, c, 3);
      Endo st = stabilize(e1);
      if (!is_automorphism(st))
        return "stabilize does not preserve automorphisms";
      if (stabilize(compose(e1, e2)) != compose(st, stabilize(e2)))
        return "stabilize is not compatible with composition";
      if (c >= 2 && project(st) != stabilize(project(e1)))
        return "stabilize does not commute with project";
    }
    return {};
  }));

  return out;
}

namespace {

// E_12(1), the cycle (1 2 ... r), the transposition (1 2) and diag(-1, 1, ...).
std::vector<IntMatrix> alternative_gl_generators(unsigned r) {
  std::vector<IntMatrix> out{sign_flip(r)};
  if (r < 2)
    return out;
  out.push_back(elementary(r, 0, 1));
  out.push_back(transposition(r, 0, 1));
  IntMatrix cycle(r, r);
  for (unsigned i = 0; i < r; ++i)
    cycle((i + 1) % r, i) = 1;
  out.push_back(cycle);
  return out;
}

} // namespace

std::vector<CheckResult> verify_modules(unsigned r, unsigned c, Rng &rng,
                                        const VerifyOptions &opts) {
  std::vector<CheckResult> out;
  const std::vector<std::string> specs = {"const",
                                          "std",
                                          "dual",
                                          "std (x) dual",
                                          "hom(std, ext(2, dual))",
                                          "ext(2, std) + const(Z/2)",
                                          "lie(2)",
                                          "hom(std, lie(2))"};
  std::vector<ModuleSpec> parsed;
  for (const auto &text : specs)
    parsed.push_back(parse_module_spec(text));

  out.push_back(run_check("glmod.spec_roundtrip", [&]() -> std::string {
    for (const auto &spec : parsed) {
      std::string text = spec.to_string();
      if (parse_module_spec(text).to_string() != text)
        return "spec text does not round-trip: " + text;
    }
    return {};
  }));

  out.push_back(run_check("glmod.dimension", [&]() -> std::string {
    for (const auto &spec : parsed) {
      BasedModule m = eval_module(spec, r);
      if (Integer(static_cast<unsigned long>(m.dimension())) != predicted_dimension(spec, r))
        return "dimension of " + spec.to_string() + " differs from the prediction";
    }
    return {};
  }));

  out.push_back(run_check("glmod.functoriality", [&]() -> std::string {
    for (const auto &spec : parsed) {
      BasedModule m = eval_module(spec, r);
      if (!m.action(IntMatrix::identity(r)).is_identity())
        return "identity acts nontrivially on " + spec.to_string();
      for (unsigned s = 0; s < opts.lie_samples / 4 + 1; ++s) {
        IntMatrix a = random_gl_matrix(rng, r, 4);
        IntMatrix b = random_gl_matrix(rng, r, 4);
        if (m.action(a * b) != m.action(a) * m.action(b))
          return "action on " + spec.to_string() + " is not multiplicative";
      }
    }
    return {};
  }));

  out.push_back(run_check("glmod.stab_equivariance", [&]() -> std::string {
    if (r + 1 > kMaxRank)
      return {};
    for (const auto &spec : parsed) {
      BasedModule m = eval_module(spec, r);
      BasedModule next = eval_module(spec, r + 1);
      if (m.retraction * m.stab != IntMatrix::identity(m.dimension()))
        return "retraction is not a left inverse of stab for " + spec.to_string();
      for (unsigned s = 0; s < opts.lie_samples / 4 + 1; ++s) {
        IntMatrix a = random_gl_matrix(rng, r, 4);
        IntMatrix big = next.action(stabilize_matrix(a));
        if (big * m.stab != m.stab * m.action(a))
          return "stab is not equivariant for " + spec.to_string();
        if (m.retraction * big != m.action(a) * m.retraction)
          return "retraction is not equivariant for " + spec.to_string();
      }
    }
    return {};
  }));

  out.push_back(run_check("snf.correctness", [&]() -> std::string {
    for (unsigned s = 0; s < opts.lie_samples + 4; ++s) {
      bool large = s >= opts.lie_samples;
      auto rows = static_cast<std::size_t>(large ? random_int(rng, 30, 40) : random_int(rng, 1, 5));
      auto cols = static_cast<std::size_t>(large ? random_int(rng, 30, 40) : random_int(rng, 1, 5));
      IntMatrix a = random_int_matrix(rng, rows, cols, large ? 4 : 6, large ? 0.08 : 0.7);
      SNFResult res = snf(a);
      if (res.U * a * res.V != res.D)
        return "U A V != D";
      if (abs(determinant(res.U)) != 1 || abs(determinant(res.V)) != 1)
        return "transforms are not unimodular";
      auto diag = res.diagonal();
      for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
          if (i != j && res.D(i, j) != 0)
            return "D is not diagonal";
      for (std::size_t i = 0; i + 1 < diag.size(); ++i) {
        if (sgn(diag[i]) < 0)
          return "negative invariant factor";
        if (diag[i] == 0 ? diag[i + 1] != 0 : !mpz_divisible_p(diag[i + 1].get_mpz_t(),
                                                                diag[i].get_mpz_t()))
          return "divisibility chain broken";
      }
      if (smith_diagonal(a) != diag)
        return "smith_diagonal disagrees with snf";
    }
    return {};
  }));

  out.push_back(run_check("stability.generating_set_independence", [&]() -> std::string {
    auto gens = aut_generators(r, c);
    std::vector<Endo> more = gens;
    for (unsigned s = 0; s < 3; ++s)
      more.push_back(random_automorphism(rng, r, c, 2));
    for (const auto &spec : parsed) {
      BasedModule m = eval_module(spec, r);
      std::vector<IntMatrix> via_aut, via_more;
      for (const auto &g : gens)
        via_aut.push_back(restrict_action(m, g));
      for (const auto &g : more)
        via_more.push_back(restrict_action(m, g));
      std::vector<IntMatrix> via_gl, via_alt;
      for (const auto &a : gl_generators(r))
        via_gl.push_back(m.action(a));
      for (const auto &a : alternative_gl_generators(r))
        via_alt.push_back(m.action(a));
      FinAbPresentation h = coinvariants(via_aut, m.dimension(), m.relations);
      if (coinvariants(via_more, m.dimension(), m.relations) != h ||
          coinvariants(via_gl, m.dimension(), m.relations) != h ||
          coinvariants(via_alt, m.dimension(), m.relations) != h)
        return "coinvariants of " + spec.to_string() + " depend on the generating set";
    }
    return {};
  }));

  out.push_back(run_check("stability.kernel_acts_trivially", [&]() -> std::string {
    if (c < 2)
      return {};
    for (const auto &spec : parsed) {
      BasedModule m = eval_module(spec, r);
      for (unsigned s = 0; s < 3; ++s) {
        Endo alpha = sharp(random_hom_map(rng, r, c, 2));
        if (!restrict_action(m, alpha).is_identity())
          return "kernel element acts nontrivially on " + spec.to_string();
      }
    }
    return {};
  }));

  return out;
}

std::vector<CheckResult> verify_all(unsigned r, unsigned c, std::uint64_t seed,
                                    const VerifyOptions &opts) {
  std::vector<CheckResult> out;
  Rng lie_rng(seed);
  Rng group_rng(seed + 1);
  Rng aut_rng(seed + 2);
  Rng module_rng(seed + 3);
  for (auto &res : verify_lie(r, c, lie_rng, opts))
    out.push_back(std::move(res));
  for (auto &res : verify_nilgroup(r, c, group_rng, opts))
    out.push_back(std::move(res));
  for (auto &res : verify_aut(r, c, aut_rng, opts))
    out.push_back(std::move(res));
  for (auto &res : verify_modules(r, c, module_rng, opts))
    out.push_back(std::move(res));
  return out;
}

} // namespace nilstab
