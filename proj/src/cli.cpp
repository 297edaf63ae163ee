#include "nilstab/cli.hpp"

#include "CLI11.hpp"
#include "json.hpp"
#include "nilstab/encoding.hpp"
#include "nilstab/stability.hpp"
#include "nilstab/verify.hpp"

#include <cstdlib>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace nilstab {

namespace {

constexpr unsigned kDefaultMaxRank = 6;
constexpr unsigned kDefaultMaxClass = 6;

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct Config {
  unsigned r = 0;
  unsigned c = 0;
  unsigned n = 0;
  std::string range;
  std::string r_text;
  std::string spec;
  std::string format = "text";
  std::uint64_t seed = 20240611;
  bool oracle = false;
  bool allow_unstable = false;
  bool unsafe_bounds = false;
  bool verbose = false;
  std::string hom;
  std::vector<std::string> args;
};

unsigned max_class(const Config &cfg) {
  if (cfg.unsafe_bounds)
    return 64;
  if (const char *env = std::getenv("NILSTAB_MAX_CLASS")) {
    try {
      unsigned long v = std::stoul(env);
      if (v >= 1)
        return static_cast<unsigned>(v);
    } catch (const std::exception &) {
    }
    throw UsageError(std::string("NILSTAB_MAX_CLASS must be a positive integer, got '") + env +
                     "'");
  }
  return kDefaultMaxClass;
}

unsigned max_rank(const Config &cfg) { return cfg.unsafe_bounds ? kMaxRank : kDefaultMaxRank; }

void check_rank(const Config &cfg, unsigned r) {
  if (r < 1)
    throw UsageError("rank r must be at least 1");
  if (r > max_rank(cfg))
    throw UsageError("rank r = " + std::to_string(r) + " exceeds the bound " +
                     std::to_string(max_rank(cfg)) +
                     (cfg.unsafe_bounds ? "" : " (use --unsafe-bounds)"));
}

void check_class(const Config &cfg, unsigned c) {
  if (c < 1)
    throw UsageError("class c must be at least 1");
  if (c > max_class(cfg))
    throw UsageError("class c = " + std::to_string(c) + " exceeds the bound " +
                     std::to_string(max_class(cfg)) + " (use --unsafe-bounds or NILSTAB_MAX_CLASS)");
}

std::pair<unsigned, unsigned> parse_range(const std::string &text) {
  auto to_unsigned = [&](const std::string &s) {
    if (s.empty() || s.find_first_not_of("0123456789 ") != std::string::npos)
      throw UsageError("bad range '" + text + "', expected A..B or A");
    return static_cast<unsigned>(std::stoul(s));
  };
  auto dots = text.find("..");
  if (dots == std::string::npos) {
    unsigned v = to_unsigned(text);
    return {v, v};
  }
  unsigned lo = to_unsigned(text.substr(0, dots));
  unsigned hi = to_unsigned(text.substr(dots + 2));
  if (lo > hi)
    throw UsageError("empty range '" + text + "'");
  return {lo, hi};
}

void require_format(const Config &cfg, std::initializer_list<const char *> allowed) {
  for (const char *f : allowed)
    if (cfg.format == f)
      return;
  throw UsageError("format '" + cfg.format + "' is not supported by this command");
}

std::string lie_column_text(const HomMap &beta, std::size_t col) {
  const auto &words = lyndon_words(beta.rank, beta.class_of_target);
  LieElement::Terms terms;
  for (std::size_t i = 0; i < words.size(); ++i)
    if (beta.matrix(i, col) != 0)
      terms.emplace(words[i], beta.matrix(i, col));
  std::ostringstream os;
  os << LieElement::from_terms(beta.rank, beta.class_of_target, terms);
  return os.str();
}

nlohmann::json hom_map_to_json(const HomMap &beta) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto &w : lyndon_words(beta.rank, beta.class_of_target))
    rows.push_back(w);
  return {{"rank", beta.rank},
          {"class", beta.class_of_target},
          {"rows", rows},
          {"matrix", matrix_to_json(beta.matrix)}};
}

// ---------------------------------------------------------------------------

int cmd_witt(const Config &cfg, std::ostream &out, std::ostream &err) {
  check_rank(cfg, cfg.r);
  if (cfg.n < 1)
    throw UsageError("degree bound n must be at least 1");
  require_format(cfg, {"text", "json", "csv"});
  bool mismatch = false;
  nlohmann::json rows = nlohmann::json::array();
  std::ostringstream text, csv;
  csv << "r,n,rank\n";
  for (unsigned r = 1; r <= cfg.r; ++r) {
    text << "r=" << r << ":";
    for (unsigned n = 1; n <= cfg.n; ++n) {
      Integer w = witt_rank(r, n);
      if (Integer(static_cast<unsigned long>(lyndon_words(r, n).size())) != w) {
        err << "witt: cross-check failed at r=" << r << ", n=" << n << '\n';
        mismatch = true;
      }
      text << ' ' << w;
      csv << r << ',' << n << ',' << w << '\n';
      rows.push_back({{"r", r}, {"n", n}, {"rank", integer_to_json(w)}});
    }
    text << '\n';
  }
  if (cfg.format == "json")
    out << rows.dump(2) << '\n';
  else if (cfg.format == "csv")
    out << csv.str();
  else
    out << text.str();
  return mismatch ? kExitFailure : kExitOk;
}

int cmd_lyndon(const Config &cfg, std::ostream &out, std::ostream &) {
  check_rank(cfg, cfg.r);
  if (cfg.n < 1)
    throw UsageError("degree n must be at least 1");
  require_format(cfg, {"text", "json", "csv"});
  auto basis = lyndon_basis(cfg.r, cfg.n);
  if (cfg.format == "json") {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto &b : basis)
      rows.push_back({{"word", b.word}, {"bracketing", b.bracketing()}});
    out << rows.dump(2) << '\n';
  } else if (cfg.format == "csv") {
    out << "word,bracketing\n";
    for (const auto &b : basis)
      out << b.word << ",\"" << b.bracketing() << "\"\n";
  } else {
    for (const auto &b : basis)
      out << b.word << "  " << b.bracketing() << '\n';
  }
  return kExitOk;
}

int cmd_group_op(const std::string &op, const Config &cfg, std::ostream &out, std::ostream &err) {
  check_rank(cfg, cfg.r);
  check_class(cfg, cfg.c);
  require_format(cfg, {"text", "json"});
  std::size_t arity = op == "inv" ? 1 : 2;
  if (cfg.args.size() != arity)
    throw UsageError(op + " expects " + std::to_string(arity) + " element argument(s)");
  std::vector<GroupElement> xs;
  for (const auto &a : cfg.args)
    xs.push_back(parse_element(a, cfg.r, cfg.c));

  GroupElement result = op == "mul"   ? mul(xs[0], xs[1])
                        : op == "inv" ? inv(xs[0])
                                      : comm(xs[0], xs[1]);
  if (cfg.oracle) {
    TruncatedSeries s = magnus_embed(xs[0]);
    if (op == "mul") {
      s = s * magnus_embed(xs[1]);
    } else if (op == "inv") {
      s = s.inverse();
    } else {
      TruncatedSeries t = magnus_embed(xs[1]);
      s = s.inverse() * t.inverse() * s * t;
    }
    if (magnus_peel(s) != result || magnus_embed(result) != s) {
      err << op << ": Magnus oracle disagrees with the collected result\n";
      return kExitFailure;
    }
  }
  if (cfg.format == "json")
    out << element_to_json(result).dump() << '\n';
  else
    out << format_element(result) << '\n';
  return kExitOk;
}

int cmd_verify(const Config &cfg, std::ostream &out, std::ostream &) {
  check_rank(cfg, cfg.r);
  check_class(cfg, cfg.c);
  require_format(cfg, {"text", "json"});
  auto results = verify_all(cfg.r, cfg.c, cfg.seed);
  bool all = true;
  nlohmann::json rows = nlohmann::json::array();
  for (const auto &res : results) {
    all = all && res.passed;
    rows.push_back({{"name", res.name}, {"passed", res.passed}, {"detail", res.detail}});
  }
  if (cfg.format == "json") {
    out << nlohmann::json{{"rank", cfg.r},
                          {"class", cfg.c},
                          {"seed", cfg.seed},
                          {"passed", all},
                          {"checks", rows}}
               .dump(2)
        << '\n';
  } else {
    for (const auto &res : results) {
      out << (res.passed ? "PASS " : "FAIL ") << res.name;
      if (!res.passed)
        out << ": " << res.detail;
      if (cfg.verbose)
        out << " (" << res.seconds << " s)";
      out << '\n';
    }
    out << (all ? "all checks passed" : "some checks failed") << " (r=" << cfg.r
        << ", c=" << cfg.c << ", seed=" << cfg.seed << ")\n";
  }
  return all ? kExitOk : kExitFailure;
}

Endo endo_from_args(const Config &cfg, unsigned c) {
  if (cfg.args.size() != cfg.r)
    throw UsageError("expected " + std::to_string(cfg.r) + " generator images, got " +
                     std::to_string(cfg.args.size()));
  std::vector<GroupElement> images;
  for (const auto &a : cfg.args)
    images.push_back(parse_element(a, cfg.r, c));
  return Endo::from_images(images);
}

void print_endo(const Config &cfg, const Endo &e, std::ostream &out) {
  if (cfg.format == "json") {
    out << endo_to_json(e).dump() << '\n';
    return;
  }
  for (unsigned i = 0; i < e.rank(); ++i)
    out << letter(i) << " -> " << format_element(e.image(i)) << '\n';
}

int cmd_aut_lift(const Config &cfg, std::ostream &out, std::ostream &err) {
  check_rank(cfg, cfg.r);
  check_class(cfg, cfg.c);
  check_class(cfg, cfg.c + 1);
  require_format(cfg, {"text", "json"});
  Endo phi = endo_from_args(cfg, cfg.c);
  if (!is_automorphism(phi)) {
    err << "aut-lift: not an automorphism (abelianization determinant "
        << determinant(abelianization_matrix(phi)) << ")\n";
    return kExitFailure;
  }
  Endo lifted = lift(phi);
  if (project(lifted) != phi) {
    err << "aut-lift: project(lift(phi)) != phi\n";
    return kExitFailure;
  }
  print_endo(cfg, lifted, out);
  return kExitOk;
}

int cmd_kernel_iso(const Config &cfg, std::ostream &out, std::ostream &err) {
  check_rank(cfg, cfg.r);
  check_class(cfg, cfg.c);
  require_format(cfg, {"text", "json"});
  if (cfg.c < 2)
    throw UsageError("kernel-iso needs class c >= 2");
  if (!cfg.hom.empty()) {
    if (!cfg.args.empty())
      throw UsageError("give either --hom or generator images, not both");
    HomMap beta = HomMap::from_matrix(cfg.r, cfg.c, matrix_from_json(nlohmann::json::parse(cfg.hom)));
    Endo e = sharp(beta);
    if (flat(e) != beta) {
      err << "kernel-iso: flat(sharp(beta)) != beta\n";
      return kExitFailure;
    }
    print_endo(cfg, e, out);
    return kExitOk;
  }
  Endo alpha = endo_from_args(cfg, cfg.c);
  if (!in_projection_kernel(alpha)) {
    err << "kernel-iso: automorphism does not project to the identity in class " << cfg.c - 1
        << '\n';
    return kExitFailure;
  }
  HomMap beta = flat(alpha);
  if (sharp(beta) != alpha) {
    err << "kernel-iso: sharp(flat(alpha)) != alpha\n";
    return kExitFailure;
  }
  if (cfg.format == "json") {
    out << hom_map_to_json(beta).dump() << '\n';
  } else {
    for (unsigned i = 0; i < cfg.r; ++i)
      out << letter(i) << " -> " << lie_column_text(beta, i) << '\n';
  }
  return kExitOk;
}

int cmd_scan(const Config &cfg, std::ostream &out, std::ostream &) {
  if (cfg.spec.empty())
    throw UsageError("scan needs --spec");
  std::string range_text = !cfg.range.empty() ? cfg.range : cfg.r_text;
  if (range_text.empty())
    throw UsageError("scan needs a rank range (-r A..B or --range A..B)");
  auto [lo, hi] = parse_range(range_text);
  check_rank(cfg, lo);
  check_rank(cfg, hi);
  check_class(cfg, cfg.c);
  require_format(cfg, {"text", "json", "csv"});
  ModuleSpec spec = parse_module_spec(cfg.spec);
  ScanReport report = stability_scan(spec, cfg.c, lo, hi);
  if (cfg.format == "json") {
    out << scan_report_to_json(report).dump(2) << '\n';
  } else if (cfg.format == "csv") {
    out << scan_report_to_csv(report);
  } else {
    out << "spec " << report.spec << ", class " << report.class_bound << '\n';
    for (const auto &e : report.entries) {
      out << "r=" << e.r << "  H_0 = " << e.h0;
      if (e.map_to_next_is_iso) {
        out << "  stabilization map " << (*e.map_to_next_is_iso ? "iso" : "not iso");
        if (cfg.verbose)
          out << " (first " << (*e.first_map_is_iso ? "iso" : "not iso") << ", second "
              << (*e.second_map_is_iso ? "iso" : "not iso") << ")";
      }
      out << '\n';
    }
    if (report.stabilized_from)
      out << "stabilized from r = " << *report.stabilized_from << '\n';
    else
      out << "not stabilized in range\n";
  }
  if (!report.stabilized_from && !cfg.allow_unstable)
    return kExitFailure;
  return kExitOk;
}

int cmd_snf(const Config &cfg, std::ostream &out, std::ostream &) {
  require_format(cfg, {"text", "json"});
  if (cfg.args.size() != 1)
    throw UsageError("snf expects one matrix argument, e.g. \"[[2,0],[0,3]]\"");
  nlohmann::json parsed;
  try {
    parsed = nlohmann::json::parse(cfg.args[0]);
  } catch (const nlohmann::json::exception &ex) {
    throw UsageError(std::string("matrix is not valid JSON: ") + ex.what());
  }
  IntMatrix a = matrix_from_json(parsed);
  SNFResult res = snf(a);
  FinAbPresentation coker = cokernel(a);
  if (cfg.format == "json") {
    nlohmann::json diag = nlohmann::json::array();
    for (const auto &d : res.diagonal())
      diag.push_back(integer_to_json(d));
    out << nlohmann::json{{"diagonal", diag},
                          {"rank", res.rank()},
                          {"cokernel", presentation_to_json(coker)},
                          {"U", matrix_to_json(res.U)},
                          {"D", matrix_to_json(res.D)},
                          {"V", matrix_to_json(res.V)}}
               .dump()
        << '\n';
  } else {
    out << "diagonal:";
    for (const auto &d : res.diagonal())
      out << ' ' << d;
    out << "\ncokernel: " << coker << '\n';
    if (cfg.verbose)
      out << "U = " << res.U << "\nD = " << res.D << "\nV = " << res.V << '\n';
  }
  return kExitOk;
}

} // namespace

int run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
  Config cfg;
  CLI::App app{"Exact computations in free nilpotent groups and their automorphisms"};
  app.require_subcommand(1);

  auto add_common = [&](CLI::App *sub) {
    sub->add_option("--format", cfg.format, "Output format")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    sub->add_flag("-v,--verbose", cfg.verbose, "More detail");
    sub->add_flag("--unsafe-bounds", cfg.unsafe_bounds, "Lift the default bounds on r and c");
  };
  auto add_rc = [&](CLI::App *sub) {
    sub->add_option("-r,--rank", cfg.r, "Rank r")->required();
    sub->add_option("-c,--class", cfg.c, "Nilpotency class c")->required();
    add_common(sub);
  };

  auto *witt = app.add_subcommand("witt", "Witt ranks for r' <= r, n' <= n");
  witt->add_option("-r,--rank", cfg.r, "Largest rank")->required();
  witt->add_option("-n,-c,--degree", cfg.n, "Largest degree")->required();
  add_common(witt);

  auto *lyn = app.add_subcommand("lyndon", "Lyndon words of length n with their bracketing");
  lyn->add_option("-r,--rank", cfg.r, "Rank")->required();
  lyn->add_option("-n,-c,--degree", cfg.n, "Degree")->required();
  add_common(lyn);

  std::vector<std::pair<std::string, CLI::App *>> group_ops;
  for (const char *op : {"mul", "inv", "comm"}) {
    const char *help = std::string(op) == "mul"   ? "Product g * h"
                       : std::string(op) == "inv" ? "Inverse g^-1"
                                                  : "Commutator [g, h] = g^-1 h^-1 g h";
    auto *sub = app.add_subcommand(op, help);
    add_rc(sub);
    sub->add_flag("--oracle", cfg.oracle, "Recompute through the Magnus series and compare");
    sub->add_option("elements", cfg.args, "Elements, e.g. \"a^2 * [ab]^-1\"")->required();
    group_ops.emplace_back(op, sub);
  }

  auto *ver = app.add_subcommand("verify", "Run the invariant suites at (r, c)");
  add_rc(ver);
  ver->add_option("--seed", cfg.seed, "Seed for the random samples");

  auto *alift = app.add_subcommand("aut-lift", "Lift an automorphism of N_r^c to N_r^{c+1}");
  add_rc(alift);
  alift->add_option("images", cfg.args, "Images of the generators")->required();

  auto *kiso = app.add_subcommand(
      "kernel-iso", "flat of a kernel automorphism of N_r^c, or sharp of --hom");
  add_rc(kiso);
  kiso->add_option("images", cfg.args, "Images of the generators");
  kiso->add_option("--hom", cfg.hom, "HomMap as a JSON matrix (rows: degree-c Lyndon words)");

  auto *scan = app.add_subcommand("scan", "Degree-0 stability scan over a rank range");
  scan->add_option("--spec", cfg.spec, "Coefficient module, e.g. \"hom(std, ext(2, dual))\"")
      ->required();
  scan->add_option("-c,--class", cfg.c, "Nilpotency class")->required();
  scan->add_option("-r", cfg.r_text, "Rank range A..B");
  scan->add_option("--range", cfg.range, "Rank range A..B");
  scan->add_flag("--allow-unstable", cfg.allow_unstable, "Exit 0 even if not stabilized");
  add_common(scan);

  auto *snf_cmd = app.add_subcommand("snf", "Smith normal form of an integer matrix");
  std::string matrix_text;
  snf_cmd->add_option("matrix", matrix_text, "JSON matrix, e.g. \"[[2,0],[0,3]]\"")
      ->required()
      ->allow_extra_args(false)
      ->each([&](const std::string &v) { cfg.args = {v}; });
  add_common(snf_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (witt->parsed())
      return cmd_witt(cfg, out, err);
    if (lyn->parsed())
      return cmd_lyndon(cfg, out, err);
    for (const auto &[name, sub] : group_ops)
      if (sub->parsed())
        return cmd_group_op(name, cfg, out, err);
    if (ver->parsed())
      return cmd_verify(cfg, out, err);
    if (alift->parsed())
      return cmd_aut_lift(cfg, out, err);
    if (kiso->parsed())
      return cmd_kernel_iso(cfg, out, err);
    if (scan->parsed())
      return cmd_scan(cfg, out, err);
    if (snf_cmd->parsed())
      return cmd_snf(cfg, out, err);
  } catch (const std::invalid_argument &ex) {
    err << "error: " << ex.what() << '\n';
    return kExitUsage;
  } catch (const nlohmann::json::exception &ex) {
    err << "error: " << ex.what() << '\n';
    return kExitUsage;
  } catch (const std::exception &ex) {
    err << "error: " << ex.what() << '\n';
    return kExitFailure;
  }
  return kExitUsage;
}

} // namespace nilstab
