#include "json_io.hpp"
#include "verify.hpp"

#include "picard/errors.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

using namespace picard;
using io::Json;

namespace {

constexpr std::size_t kMaxRepresentatives = 32;

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A path, or "-" for standard input.
Json load(const std::string& path) {
  std::stringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw IoError("cannot read " + path);
    buf << in.rdbuf();
  }
  return io::parse(buf.str());
}

std::vector<Integer> parse_class(const std::string& text) {
  std::vector<Integer> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      out.push_back(parse_integer(item));
    } catch (const std::exception&) {
      throw io::ParseError("not a decimal integer in --class: \"" + item + "\"");
    }
  }
  return out;
}

Json invariants_doc(const FgAbGroup& g) { return Json{{"invariants", io::to_json(g.invariants())}}; }

Json error_doc(const std::string& kind, const std::string& message) {
  return Json{{"error", kind}, {"message", message}};
}

struct Args {
  std::string a, b, c;
  int degree = 0;
  bool representatives = false;
  std::string cls;
  verify::Options vopts;
  std::string suite;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Two-term complexes of abelian groups, derived Hom and extensions"};
  app.require_subcommand(1);
  std::string format = "json";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json"}));
  Args args;
  Json out;
  std::function<Json()> action;

  auto* group = app.add_subcommand("group", "Finitely generated abelian groups")->require_subcommand(1);
  group->add_subcommand("invariants", "Invariant factors of a group")
      ->callback([&] { action = [&] { return invariants_doc(io::group_from_json(load(args.a))); }; })
      ->add_option("F", args.a)
      ->required();

  auto* hom = app.add_subcommand("hom", "Hom(A, B)");
  hom->add_option("A", args.a)->required();
  hom->add_option("B", args.b)->required();
  hom->callback([&] {
    action = [&] {
      HomGroup h = hom_group(io::group_from_json(load(args.a)), io::group_from_json(load(args.b)));
      Json gens = Json::array();
      for (std::size_t g = 0; g < h.group().ambient_rank(); ++g) {
        Vector e = zero_vector(h.group().ambient_rank());
        e[g] = 1;
        gens.push_back(io::to_json(h.lift(e)));
      }
      return Json{{"invariants", io::to_json(h.group().invariants())}, {"generators", std::move(gens)}};
    };
  });

  auto* ext1 = app.add_subcommand("ext1", "Ext^1(A, B)");
  ext1->add_option("A", args.a)->required();
  ext1->add_option("B", args.b)->required();
  ext1->callback([&] {
    action = [&] { return invariants_doc(ext1_group(io::group_from_json(load(args.a)), io::group_from_json(load(args.b)))); };
  });

  auto* complex = app.add_subcommand("complex", "Two-term complexes")->require_subcommand(1);
  complex->add_subcommand("cohomology", "H^-1 and H^0 of a complex")
      ->callback([&] {
        action = [&] {
          TwoTermComplex k = io::complex_from_json(load(args.a));
          return Json{{"h_minus1", io::to_json(pi1(k).group().invariants())},
                      {"h0", io::to_json(pi0(k).group().invariants())}};
        };
      })
      ->add_option("K", args.a)
      ->required();

  auto* dhom = app.add_subcommand("dhom", "Hom in the derived category, Hom(K, L[i])");
  dhom->add_option("K", args.a)->required();
  dhom->add_option("L", args.b)->required();
  dhom->add_option("--degree", args.degree, "Shift i")->required();
  dhom->callback([&] {
    action = [&] {
      return io::to_json(*derived_hom(io::complex_from_json(load(args.a)), io::complex_from_json(load(args.b)), args.degree));
    };
  });

  auto* ext = app.add_subcommand("ext", "Extensions of two-term complexes")->require_subcommand(1);

  auto* classify = ext->add_subcommand("classify", "Ext^1(M, K)");
  classify->add_option("M", args.a)->required();
  classify->add_option("K", args.b)->required();
  classify->add_flag("--representatives", args.representatives, "Also give an extension per generator");
  classify->callback([&] {
    action = [&] {
      auto amb = ext1_ambient(io::complex_from_json(load(args.a)), io::complex_from_json(load(args.b)));
      Json doc = io::to_json(ExtClass(amb, zero_vector(amb->group().ambient_rank())))["ambient"];
      if (args.representatives) {
        Json reps = Json::array();
        const std::size_t n = amb->group().ambient_rank();
        for (std::size_t g = 0; g < n && g < kMaxRepresentatives; ++g) {
          Vector e = zero_vector(n);
          e[g] = 1;
          reps.push_back(io::to_json(psi(ExtClass(amb, e))));
        }
        doc["representatives"] = std::move(reps);
        doc["truncated"] = n > kMaxRepresentatives;
      }
      return doc;
    };
  });

  auto* th = ext->add_subcommand("theta", "Class of an extension");
  th->add_option("E", args.a)->required();
  th->callback([&] { action = [&] { return io::to_json(theta(io::extension_from_json(load(args.a)))); }; });

  auto* ps = ext->add_subcommand("psi", "Extension with a given class in Ext^1(M, K)");
  ps->add_option("M", args.a)->required();
  ps->add_option("K", args.b)->required();
  ps->add_option("--class", args.cls, "Comma-separated coordinates")->required();
  ps->callback([&] {
    action = [&] {
      auto amb = ext1_ambient(io::complex_from_json(load(args.a)), io::complex_from_json(load(args.b)));
      return io::to_json(psi(ExtClass(amb, parse_class(args.cls))));
    };
  });

  auto* sum = ext->add_subcommand("sum", "Baer sum");
  sum->add_option("E1", args.a)->required();
  sum->add_option("E2", args.b)->required();
  sum->callback([&] {
    action = [&] { return io::to_json(baer_sum(io::extension_from_json(load(args.a)), io::extension_from_json(load(args.b)))); };
  });

  auto* split = ext->add_subcommand("split", "Whether an extension splits");
  split->add_option("E", args.a)->required();
  split->callback([&] {
    action = [&] {
      Extension e = io::extension_from_json(load(args.a));
      ExtClass x = theta(e);
      return Json{{"split", x.is_zero()}, {"class", io::to_json(x)}};
    };
  });

  auto* pull = ext->add_subcommand("pullback", "Pull an extension back along F: M' -> M");
  pull->add_option("E", args.a)->required();
  pull->add_option("F", args.b)->required();
  pull->callback([&] {
    action = [&] { return io::to_json(pullback_extension(io::extension_from_json(load(args.a)), io::chain_map_from_json(load(args.b)))); };
  });

  auto* push = ext->add_subcommand("pushdown", "Push an extension down along G: K -> K'");
  push->add_option("E", args.a)->required();
  push->add_option("G", args.b)->required();
  push->callback([&] {
    action = [&] { return io::to_json(pushdown_extension(io::extension_from_json(load(args.a)), io::chain_map_from_json(load(args.b)))); };
  });

  auto* ver = app.add_subcommand("verify", "Run the invariant suites");
  ver->add_option("--seed", args.vopts.seed, "Seed");
  ver->add_option("--iterations", args.vopts.iterations, "Random cases per suite")->check(CLI::Range(1, 100000));
  ver->add_flag("--exhaustive", args.vopts.exhaustive, "Full ranges for the enumerative suites");
  ver->add_option("--suite", args.suite, "Run a single suite")->check(CLI::IsMember(verify::suite_names()));
  bool verify_failed = false;
  ver->callback([&] {
    action = [&] {
      std::vector<verify::SuiteReport> reports;
      if (args.suite.empty()) {
        reports = verify::run_all(args.vopts);
      } else {
        reports.push_back(verify::run_suite(args.suite, args.vopts));
      }
      Json doc = verify::report_json(args.vopts, reports);
      verify_failed = !doc["passed"].get<bool>();
      return doc;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cout << error_doc("usage", e.what()).dump(2) << "\n";
    return 2;
  }

  int code = 0;
  try {
    out = action();
    if (verify_failed) code = 1;
  } catch (const io::ParseError& e) {
    out = error_doc("parse", e.what());
    code = 2;
  } catch (const IoError& e) {
    out = error_doc("io", e.what());
    code = 2;
  } catch (const NotAnExtension& e) {
    out = error_doc("not_an_extension", e.what());
    code = 1;
  } catch (const AmbientMismatch& e) {
    out = error_doc("ambient_mismatch", e.what());
    code = 1;
  } catch (const DomainError& e) {
    out = error_doc("domain", e.what());
    code = 1;
  } catch (const InputError& e) {
    out = error_doc("invalid_input", e.what());
    code = 1;
  } catch (const std::exception& e) {
    out = error_doc("internal", e.what());
    code = 1;
  }
  std::cout << out.dump(2) << "\n";
  return code;
}
