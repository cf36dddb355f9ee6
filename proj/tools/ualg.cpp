// ualg: command-line front end for the finite algebra workbench.
//
//   ualg classify <algebra> [--max-clone N] [--proto-n N] [--require-bijective] [--point v]
//   ualg decompose <A> <B> [--plus T --minus T] [--p T --q T] [--limit-homs N]
//   ualg translate <spec.json>
//   ualg verify-naturality <corpus-dir> [--limit-homs N] [--max-size N]
//   ualg builtin <family> <n>
//
// An algebra is a file path or builtin:<family>:<n>. Every command takes
// --format json|text. Exit status: 0 on success (negative answers included),
// 2 on malformed input, 1 on anything else.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "ualg/algebra.hpp"
#include "ualg/error.hpp"
#include "ualg/report.hpp"

namespace {

constexpr int kExitMalformed = 2;
constexpr int kExitInternal = 1;

void emit(const ualg::Json& report, const std::string& format) {
  if (format == "text") std::cout << ualg::to_text(report);
  else std::cout << report.dump(2) << '\n';
}

ualg::AlgebraPtr load(const std::string& source, std::optional<long> point) {
  auto a = ualg::resolve_algebra(source);
  if (!point) return a;
  if (*point < 0) throw ualg::Error(ualg::ErrorCode::out_of_range, "--point must be non-negative");
  return ualg::share(ualg::with_constant(*a, "zero", static_cast<ualg::Elem>(*point)));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite universal algebra workbench"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "json";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}))->capture_default_str();

  std::size_t max_clone = ualg::kDefaultCloneCap;
  std::size_t limit_homs = 1000;
  std::optional<long> point;

  auto* classify = app.add_subcommand("classify", "Search every witness class in the clone of an algebra");
  std::string algebra;
  ualg::ClassifyOptions copt;
  classify->add_option("algebra", algebra, "Algebra file or builtin:<family>:<n>")->required();
  classify->add_option("--max-clone", max_clone, "Cap on clone elements per arity")->capture_default_str();
  classify->add_option("--proto-n", copt.proto_n, "Protomodular type (1..3)")->capture_default_str();
  classify->add_flag("--require-bijective", copt.require_bijective, "Also require s_i(p(x,y),y)=x_i");
  classify->add_option("--point", point, "Add a designated constant 'zero' with this value");

  auto* decompose = app.add_subcommand("decompose", "Split epis A -> B with their decompositions and certificates");
  std::string a_src, b_src;
  ualg::DecomposeOptions dopt;
  decompose->add_option("A", a_src, "Domain algebra")->required();
  decompose->add_option("B", b_src, "Base algebra")->required();
  decompose->add_option("--plus", dopt.plus, "Binary term for the pointed decomposition");
  decompose->add_option("--minus", dopt.minus, "Binary term inverting --plus");
  decompose->add_option("--p", dopt.p, "Ternary term for the general decomposition");
  decompose->add_option("--q", dopt.q, "Ternary term inverting --p");
  decompose->add_option("--max-clone", max_clone, "Cap on clone elements per arity")->capture_default_str();
  decompose->add_option("--limit-homs", limit_homs, "Maximum number of split epis")->capture_default_str();
  decompose->add_option("--point", point, "Add a designated constant 'zero' with this value to both algebras");

  auto* translate = app.add_subcommand("translate", "Apply a term translation and verify it on an algebra");
  std::string spec_path;
  translate->add_option("spec", spec_path, "Translation spec (JSON)")->required()->check(CLI::ExistingFile);

  auto* naturality = app.add_subcommand("verify-naturality", "Check naturality over all corpus extension morphisms");
  std::string corpus_dir;
  ualg::NaturalityOptions nopt;
  naturality->add_option("corpus", corpus_dir, "Directory of algebra files")->required()->check(CLI::ExistingDirectory);
  naturality->add_option("--limit-homs", nopt.limit_homs, "Enumeration limit")->capture_default_str();
  naturality->add_option("--max-size", nopt.max_size, "Skip larger algebras")->capture_default_str();
  naturality->add_option("--max-clone", max_clone, "Cap on clone elements per arity")->capture_default_str();

  auto* builtin = app.add_subcommand("builtin", "Print a builtin algebra as JSON");
  std::string family;
  std::size_t size = 0;
  builtin->add_option("family", family, "cyclic, cyclic_plus_only, pointed_set, chain_semilattice, bool_subtraction")
      ->required();
  builtin->add_option("n", size, "Size parameter")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitMalformed;
  }

  try {
    if (*classify) {
      copt.max_clone = max_clone;
      emit(ualg::classify_report(load(algebra, point), copt), format);
    } else if (*decompose) {
      dopt.max_clone = max_clone;
      dopt.limit_homs = limit_homs;
      emit(ualg::decompose_report(load(a_src, point), load(b_src, point), dopt), format);
    } else if (*translate) {
      std::ifstream in(spec_path);
      ualg::Json spec;
      try {
        spec = ualg::Json::parse(in);
      } catch (const ualg::Json::exception& e) {
        throw ualg::Error(ualg::ErrorCode::malformed, std::string("invalid spec: ") + e.what());
      }
      emit(ualg::translate_report(spec, std::filesystem::path(spec_path).parent_path()), format);
    } else if (*naturality) {
      nopt.max_clone = max_clone;
      emit(ualg::naturality_report(ualg::load_corpus(corpus_dir), nopt), format);
    } else if (*builtin) {
      std::cout << ualg::algebra_to_json(ualg::builtin(family, size)) << '\n';
    }
  } catch (const ualg::Error& e) {
    std::cerr << "ualg: " << e.what() << '\n';
    return kExitMalformed;
  } catch (const ualg::Json::exception& e) {
    std::cerr << "ualg: malformed input: " << e.what() << '\n';
    return kExitMalformed;
  } catch (const std::exception& e) {
    std::cerr << "ualg: internal error: " << e.what() << '\n';
    return kExitInternal;
  }
  return 0;
}
