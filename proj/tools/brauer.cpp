// brauer: command-line front end for the period-index library.

#include "CLI11.hpp"

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "brauer/cohomology/cochain.hpp"
#include "brauer/cohomology/cohomology_group.hpp"
#include "brauer/complexes/generators.hpp"
#include "brauer/complexes/space_spec.hpp"
#include "brauer/complexes/sset_io.hpp"
#include "brauer/errors.hpp"
#include "brauer/linalg/smith_cache.hpp"
#include "brauer/ops/operations.hpp"
#include "brauer/period_index/period_index.hpp"
#include "brauer/verify/suite.hpp"

namespace {

using brauer::ErrorCode;
using brauer::Integer;
using brauer::cohomology::Cochain;
using brauer::cohomology::CohomologyClass;
using brauer::linalg::IntVector;
using brauer::ops::OperationContext;

enum Exit : int {
  kOk = 0,
  kFailures = 1,
  kParse = 2,
  kBudget = 3,
  kNoLift = 4,
  kNotTorsion = 5,
  kDomain = 6,
  kInternal = 7,
  kCoset = 8,
};

int exit_code(ErrorCode code) {
  switch (code) {
    case ErrorCode::kParse: return kParse;
    case ErrorCode::kResourceLimit: return kBudget;
    case ErrorCode::kNoLift: return kNoLift;
    case ErrorCode::kNotTorsion: return kNotTorsion;
    case ErrorCode::kInternalConsistency: return kInternal;
    case ErrorCode::kCosetTooLarge: return kCoset;
    case ErrorCode::kNotACocycle:
    case ErrorCode::kModulusMismatch:
    case ErrorCode::kSpaceMismatch:
    case ErrorCode::kInvalidArgument: return kDomain;
  }
  return kInternal;
}

struct Common {
  std::string space;
  std::size_t budget = brauer::complexes::kDefaultSimplexBudget;
  bool no_cache = false;
  std::string out;
};

struct ClassSource {
  std::string coords;   // "gen", "gen:i", "0", or "1,0,2"
  std::string cochain;  // path to a cochain file
};

void add_common(CLI::App* app, Common& c) {
  app->add_option("--space", c.space,
                              "space expression (em2:N:D, wbar:N:D, moore:N, point, circle, "
                              "triangle, torus, susp(X), prod(X,Y[,D]), skel(X,D)) or sset file")
      ->required();
  app->add_option("--budget", c.budget, "maximum number of generated simplices");
  app->add_flag("--no-cache", c.no_cache, "disable the Smith decomposition cache");
  app->add_option("-o,--out", c.out, "write the result to this file instead of stdout");
}

void add_class_source(CLI::App* app, ClassSource& s, const std::string& flag) {
  auto* a = app->add_option(flag, s.coords,
                            "class in canonical coordinates: 'gen', 'gen:i', '0' or '1,0,...'");
  auto* b = app->add_option("--cochain", s.cochain, "cochain file holding a representative");
  a->excludes(b);
}

IntVector parse_coords(const std::string& text, const brauer::cohomology::GroupPtr& g) {
  const auto& pres = g->presentation();
  IntVector c(pres.generator_count());
  if (text == "0") return c;
  if (text.rfind("gen", 0) == 0) {
    std::size_t i = 0;
    if (text.size() > 3) {
      if (text[3] != ':') throw brauer::ParseError("bad class '" + text + "'");
      try {
        i = std::stoul(text.substr(4));
      } catch (const std::exception&) {
        throw brauer::ParseError("bad generator index in '" + text + "'");
      }
    }
    if (i >= c.size()) {
      throw brauer::InvalidArgumentError("group " + g->to_string() + " has no generator " +
                                         std::to_string(i));
    }
    c[i] = 1;
    return c;
  }
  std::vector<Integer> values;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      values.push_back(Integer::parse(item));
    } catch (const std::invalid_argument&) {
      throw brauer::ParseError("bad coordinate '" + item + "'");
    }
  }
  if (values.size() != c.size()) {
    throw brauer::InvalidArgumentError("group " + g->to_string() + " needs " +
                                       std::to_string(c.size()) + " coordinates, got " +
                                       std::to_string(values.size()));
  }
  return pres.reduce(std::move(values));
}

CohomologyClass load_class(const OperationContext& ctx, const ClassSource& s, std::size_t degree,
                           const Integer& modulus) {
  const auto g = ctx.group(degree, modulus);
  if (!s.cochain.empty()) {
    std::ifstream in(s.cochain);
    if (!in) throw brauer::ParseError("cannot open cochain file '" + s.cochain + "'");
    const Cochain z = brauer::cohomology::read_cochain(in, ctx.count(degree));
    if (z.degree != degree) {
      throw brauer::InvalidArgumentError("cochain has degree " + std::to_string(z.degree) +
                                         ", expected " + std::to_string(degree));
    }
    if (z.modulus != modulus) {
      throw brauer::ModulusMismatchError("cochain has modulus " + z.modulus.to_string() +
                                         ", expected " + modulus.to_string());
    }
    return CohomologyClass::of(g, z);
  }
  if (s.coords.empty()) throw brauer::ParseError("no class given");
  return {g, parse_coords(s.coords, g)};
}

class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw brauer::InvalidArgumentError("cannot write '" + path + "'");
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

void print_class(std::ostream& os, const CohomologyClass& c, bool with_cochain) {
  os << "group " << c.group->to_string() << '\n';
  os << "class " << c.to_string() << '\n';
  if (with_cochain) brauer::cohomology::write_cochain(os, c.representative());
}

Integer parse_integer(const std::string& text, const char* what) {
  try {
    return Integer::parse(text);
  } catch (const std::invalid_argument&) {
    throw brauer::ParseError(std::string("bad ") + what + " '" + text + "'");
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Period and index of topological Brauer classes on simplicial sets"};
  app.require_subcommand(1);

  Common common;
  ClassSource cls;
  std::string kind, modulus_text = "0", alpha_text = "gen";
  unsigned n_param = 2;
  std::size_t dmax = 4, degree = 0;
  bool show_generators = false, with_cochain = false, verify_lifts = false, table = false;
  std::string scope = "all";
  std::uint64_t seed = brauer::verify::kDefaultSeed;

  auto* gen = app.add_subcommand("generate", "write a generated space as an sset file");
  gen->add_option("kind", kind, "em2, wbar, moore, point, circle, triangle, torus or an expression")
      ->required();
  gen->add_option("--n", n_param, "coefficient group order");
  gen->add_option("--dmax", dmax, "top dimension for em2 and wbar");
  gen->add_option("--budget", common.budget, "maximum number of generated simplices");
  gen->add_option("-o,--out", common.out, "write the sset file here instead of stdout");

  auto* coh = app.add_subcommand("cohomology", "cohomology group H^k(X; Z/m)");
  add_common(coh, common);
  coh->add_option("--degree", degree, "degree k")->required();
  coh->add_option("--modulus", modulus_text, "coefficient modulus m, 0 for Z");
  coh->add_flag("--generators", show_generators, "also print generator cochains");

  auto* bock = app.add_subcommand("bockstein", "unreduced Bockstein H^i(X; Z/n) -> H^{i+1}(X; Z)");
  add_common(bock, common);
  bock->add_option("--degree", degree, "degree i of the input class")->required();
  bock->add_option("--modulus", modulus_text, "modulus n of the input class")->required();
  add_class_source(bock, cls, "--class");
  bock->add_flag("--cochain-out", with_cochain, "also print a representative cochain");

  auto* pont = app.add_subcommand("pontryagin", "Pontryagin square H^2(X; Z/2m) -> H^4(X; Z/4m)");
  add_common(pont, common);
  pont->add_option("--modulus", modulus_text, "even modulus 2m of the input class")->required();
  add_class_source(pont, cls, "--class");
  pont->add_flag("--cochain-out", with_cochain, "also print a representative cochain");

  auto* q = app.add_subcommand("q", "the class Q(xi) in H^5(X; Z) for xi in H^2(X; Z/n)");
  add_common(q, common);
  q->add_option("--modulus", modulus_text, "modulus n of xi")->required();
  add_class_source(q, cls, "--class");
  q->add_flag("--cochain-out", with_cochain, "also print a representative cochain");

  auto* pi = app.add_subcommand("period-index", "period, ord(Q~) and index of alpha in H^3(X; Z)");
  add_common(pi, common);
  pi->add_option("--alpha", alpha_text, "alpha: 'gen', 'gen:i', '0' or coordinates");
  pi->add_option("--cochain", cls.cochain, "cochain file holding a representative of alpha");
  pi->add_flag("--verify-lifts", verify_lifts, "check lift independence over the whole coset");
  pi->add_flag("--table", table, "print a human-readable table before the record");

  auto* ver = app.add_subcommand("verify", "run the property suites");
  ver->add_option("--scope", scope, "exact_linalg, complexes, cohomology, cochain_ops, "
                                    "period_index or all");
  ver->add_option("--seed", seed, "seed for randomized checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: code=ParseError message=" << e.what() << '\n';
    return kParse;
  }

  try {
    if (common.no_cache) brauer::linalg::SmithCache::global().set_enabled(false);
    Output out(common.out);
    std::ostream& os = out.stream();

    if (*gen) {
      std::string spec = kind;
      if (kind == "em2" || kind == "wbar") {
        spec = kind + ":" + std::to_string(n_param) + ":" + std::to_string(dmax);
      } else if (kind == "moore") {
        spec = "moore:" + std::to_string(n_param);
      }
      brauer::complexes::write_sset(os, *brauer::complexes::parse_space(spec, common.budget));
      return kOk;
    }

    if (*ver) {
      brauer::verify::SuiteOptions opt;
      opt.seed = seed;
      int failures = 0;
      for (const auto& r : brauer::verify::run_suite(scope, opt)) {
        os << brauer::verify::format(r) << std::endl;
        failures += r.passed ? 0 : 1;
      }
      os << (failures == 0 ? "all checks passed" : std::to_string(failures) + " checks failed")
         << '\n';
      return failures == 0 ? kOk : kFailures;
    }

    OperationContext ctx(brauer::complexes::parse_space(common.space, common.budget));
    const Integer modulus = parse_integer(modulus_text, "modulus");

    if (*coh) {
      const auto g = ctx.group(degree, modulus);
      os << g->to_string() << '\n';
      if (show_generators) {
        for (const auto& z : g->generators()) brauer::cohomology::write_cochain(os, z);
      }
      return kOk;
    }
    if (*bock) {
      print_class(os, brauer::ops::bockstein(ctx, load_class(ctx, cls, degree, modulus)),
                  with_cochain);
      return kOk;
    }
    if (*pont) {
      print_class(os, brauer::ops::pontryagin_square(ctx, load_class(ctx, cls, 2, modulus)),
                  with_cochain);
      return kOk;
    }
    if (*q) {
      print_class(os, brauer::ops::q_class(ctx, load_class(ctx, cls, 2, modulus)), with_cochain);
      return kOk;
    }
    if (*pi) {
      if (cls.cochain.empty()) cls.coords = alpha_text;
      const CohomologyClass alpha = load_class(ctx, cls, 3, 0);
      auto report = brauer::period_index::index_bound(ctx, alpha);
      if (verify_lifts && report.per > 1) {
        const auto li = brauer::period_index::verify_lift_independence(ctx, alpha, report.per);
        report.lift_independence = li.independent;
        if (li.witness) {
          std::cerr << "lift independence witness:\n";
          brauer::cohomology::write_cochain(std::cerr, li.witness->first);
          brauer::cohomology::write_cochain(std::cerr, li.witness->second);
        }
      } else if (verify_lifts) {
        report.lift_independence = true;
      }
      if (table) os << report.table();
      os << report.record() << '\n';
      return kOk;
    }
  } catch (const brauer::Error& e) {
    std::cerr << "error: code=" << brauer::error_code_name(e.code()) << " message=" << e.what()
              << '\n';
    return exit_code(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: code=Internal message=" << e.what() << '\n';
    return kInternal;
  }
  return kOk;
}
