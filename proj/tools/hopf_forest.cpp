// hopf-forest: batch CLI over the tree/word Hopf algebras in libhopf.
// Exit codes: 0 success, 1 verification failure, 2 usage/resource error.
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "hopf/algebra.hpp"
#include "hopf/bijections.hpp"
#include "hopf/enumeration.hpp"
#include "hopf/isomorphisms.hpp"
#include "hopf/machinery.hpp"
#include "hopf/text_io.hpp"
#include "hopf/verify.hpp"

namespace {

using namespace hopf;

void write_output(const std::optional<std::string>& path, const std::string& text) {
  if (!path) {
    std::cout << text;
    if (text.empty() || text.back() != '\n') std::cout << "\n";
    return;
  }
  std::ofstream out(*path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot open output file: " + *path);
  out << text;
  if (text.empty() || text.back() != '\n') out << "\n";
}

/// TOML-like key=value lines; '#' starts a comment; blank lines ignored.
void apply_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open config file: " + path);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::size_t begin = line.find_first_not_of(" \t\r");
    if (begin == std::string::npos) continue;
    std::size_t end = line.find_last_not_of(" \t\r");
    std::string entry = line.substr(begin, end - begin + 1);
    std::size_t eq = entry.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("config line " + std::to_string(lineno) +
                                  " is not key=value: \"" + entry + "\"");
    auto trim = [](std::string s) {
      std::size_t b = s.find_first_not_of(" \t");
      if (b == std::string::npos) return std::string();
      std::size_t e = s.find_last_not_of(" \t");
      return s.substr(b, e - b + 1);
    };
    std::string key = trim(entry.substr(0, eq));
    std::string value = trim(entry.substr(eq + 1));
    int parsed = 0;
    try {
      std::size_t used = 0;
      parsed = std::stoi(value, &used);
      if (used != value.size()) throw std::invalid_argument(value);
    } catch (const std::exception&) {
      throw std::invalid_argument("config value for " + key +
                                  " is not an integer: \"" + value + "\"");
    }
    if (parsed < 0)
      throw std::invalid_argument("config value for " + key + " must be >= 0");
    if (key == "max_degree") {
      enumeration_caps().tree_degree = parsed;
      enumeration_caps().perm_degree = parsed;
    } else if (key == "tree_degree") {
      enumeration_caps().tree_degree = parsed;
    } else if (key == "perm_degree") {
      enumeration_caps().perm_degree = parsed;
    } else {
      throw std::invalid_argument("unknown config key: " + key);
    }
  }
}

void apply_env_override() {
  const char* raw = std::getenv("HOPF_FOREST_MAX_DEGREE");
  if (raw == nullptr) return;
  std::string value(raw);
  int parsed = 0;
  try {
    std::size_t used = 0;
    parsed = std::stoi(value, &used);
    if (used != value.size() || parsed < 0) throw std::invalid_argument(value);
  } catch (const std::exception&) {
    throw std::invalid_argument("HOPF_FOREST_MAX_DEGREE is not a nonnegative integer: \"" +
                                value + "\"");
  }
  enumeration_caps().tree_degree = parsed;
  enumeration_caps().perm_degree = parsed;
}

void check_verification_degree(const HopfAlgebra& alg, int max_degree) {
  const int cap = algebra_degree_cap(alg.id());
  if (max_degree > cap)
    throw ResourceError("max degree " + std::to_string(max_degree) +
                        " exceeds the configured cap " + std::to_string(cap) +
                        " for " + alg.name());
}

std::string json_array_of_strings(const std::vector<std::string>& items) {
  std::string out = "[";
  bool first = true;
  for (const auto& s : items) {
    if (!first) out += ",";
    first = false;
    out += "\"";
    for (char c : s) {
      if (c == '"' || c == '\\') out += '\\';
      out += c;
    }
    out += "\"";
  }
  out += "]";
  return out;
}

struct Options {
  std::string algebra;
  std::string which;
  std::string kind;
  int degree = 0;
  int max_degree = 4;
  bool inverse = false;
  bool count_only = false;
  std::vector<std::string> inputs;
  std::optional<std::string> out_path;
  std::optional<std::string> emit_path;
};

int run_enumerate(const Options& opt) {
  const EnumKind kind = parse_enum_kind(opt.kind);
  const std::vector<std::string> keys = enumerate_keys(kind, opt.degree);
  if (opt.count_only) {
    write_output(opt.out_path, std::to_string(keys.size()));
    return 0;
  }
  if (opt.out_path) {
    write_output(opt.out_path, json_array_of_strings(keys));
    return 0;
  }
  std::string text;
  for (const auto& k : keys) {
    text += k;
    text += "\n";
  }
  std::cout << text;
  return 0;
}

int run_product(const Options& opt) {
  const HopfAlgebra& alg = algebra(parse_algebra_id(opt.algebra));
  const Lin a = lincomb_parse_input(alg, opt.inputs.at(0));
  const Lin b = lincomb_parse_input(alg, opt.inputs.at(1));
  const Lin result = alg.product(a, b);
  if (opt.out_path)
    write_output(opt.out_path, lincomb_json(result));
  else
    write_output(std::nullopt, lincomb_text(result));
  return 0;
}

int run_coproduct(const Options& opt) {
  const HopfAlgebra& alg = algebra(parse_algebra_id(opt.algebra));
  const Pair2 result = alg.coproduct(lincomb_parse_input(alg, opt.inputs.at(0)));
  if (opt.out_path)
    write_output(opt.out_path, paircomb_json(result));
  else
    write_output(std::nullopt, paircomb_text(result));
  return 0;
}

int run_endomorphism(const Options& opt, Lin (*map)(const HopfAlgebra&, const Lin&)) {
  const HopfAlgebra& alg = algebra(parse_algebra_id(opt.algebra));
  const Lin result = map(alg, lincomb_parse_input(alg, opt.inputs.at(0)));
  if (opt.out_path)
    write_output(opt.out_path, lincomb_json(result));
  else
    write_output(std::nullopt, lincomb_text(result));
  return 0;
}

int run_coradical_level(const Options& opt) {
  const HopfAlgebra& alg = algebra(parse_algebra_id(opt.algebra));
  const int level = coradical_level(alg, lincomb_parse_input(alg, opt.inputs.at(0)));
  write_output(opt.out_path, std::to_string(level));
  return 0;
}

int run_is_primitive(const Options& opt) {
  const HopfAlgebra& alg = algebra(parse_algebra_id(opt.algebra));
  const bool primitive = is_primitive(alg, lincomb_parse_input(alg, opt.inputs.at(0)));
  write_output(opt.out_path, primitive ? "true" : "false");
  return 0;
}

int run_bij(const Options& opt) {
  const std::string& text = opt.inputs.at(0);
  std::string result;
  if (opt.which == "psi") {
    result = opt.inverse ? psi_inverse(OrderedTree::parse(text)).str()
                         : psi(PlanarBinaryTree::parse(text)).str();
  } else if (opt.which == "phi") {
    result = opt.inverse ? phi_inverse(HeapOrderedTree::parse(text)).str()
                         : phi(Permutation::parse(text)).str();
  } else {
    throw std::invalid_argument("unknown bijection: " + opt.which);
  }
  write_output(opt.out_path, result);
  return 0;
}

int run_verify_axioms(const Options& opt) {
  const HopfAlgebra& alg = algebra(parse_algebra_id(opt.algebra));
  check_verification_degree(alg, opt.max_degree);
  const AxiomReport report = verify_axioms(alg, opt.max_degree);
  for (const auto& check : report.checks) {
    std::cout << check.name << ": " << (check.pass ? "pass" : "fail")
              << " checked=" << check.checked << "\n";
    for (const auto& failure : check.failures)
      std::cout << "  counterexample: " << failure << "\n";
  }
  std::cout << "RESULT " << (report.pass ? "pass" : "fail")
            << " checked=" << report.checked << "\n";
  return report.pass ? 0 : 1;
}

int run_verify_iso(const Options& opt) {
  const IsoKind kind = parse_iso_kind(opt.which);
  check_verification_degree(iso_target(kind), opt.max_degree);
  check_verification_degree(iso_source(kind), opt.max_degree);

  bool pass = true;
  long long checked = 0;
  std::vector<DegreeCertificate> certificates;
  for (int d = 1; d <= opt.max_degree; ++d) {
    certificates.push_back(triangularity_certificate(kind, d));
    const DegreeCertificate& cert = certificates.back();
    std::cout << "degree " << d << ": dimension " << cert.source.size()
              << ", unitriangular " << (cert.unitriangular ? "yes" : "no") << "\n";
    for (const auto& failure : cert.failures)
      std::cout << "  " << failure << "\n";
    pass = pass && cert.pass;
    checked += static_cast<long long>(cert.source.size());
  }

  const MorphismReport morphism = verify_hopf_morphism(kind, opt.max_degree);
  std::cout << "hopf morphism: " << (morphism.pass ? "pass" : "fail")
            << " checked=" << morphism.checked << "\n";
  for (const auto& failure : morphism.failures)
    std::cout << "  " << failure << "\n";
  pass = pass && morphism.pass;
  checked += morphism.checked;

  if (opt.emit_path) {
    std::ofstream out(*opt.emit_path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot open output file: " + *opt.emit_path);
    out << certificates_json(certificates) << "\n";
  }

  std::cout << "RESULT " << (pass ? "pass" : "fail") << " checked=" << checked
            << "\n";
  return pass ? 0 : 1;
}

int run_export(const Options& opt) {
  const HopfAlgebra& alg = algebra(parse_algebra_id(opt.algebra));
  check_verification_degree(alg, opt.max_degree);
  std::ostringstream buffer;
  export_structure_constants(alg, opt.max_degree, buffer);
  if (opt.out_path) {
    std::ofstream out(*opt.out_path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot open output file: " + *opt.out_path);
    out << buffer.str();
  } else {
    std::cout << buffer.str();
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations in tree and word Hopf algebras"};
  app.require_subcommand(1);
  app.fallthrough(false);

  std::string config_path;
  app.add_option("--config", config_path, "key=value file; max_degree caps enumeration");

  Options opt;
  std::string algebras =
      "HO, HHO, GR_YSYM, GR_SSYM, GR_YSYM_DUAL, GR_SSYM_DUAL, QSYM, SH, TENSOR";

  CLI::App* enumerate = app.add_subcommand("enumerate", "List a basis family at one degree");
  enumerate->add_option("--kind", opt.kind,
                        "pbt, ordered, heap, perm, irreducible-pbt, planted, irreducible-perm")
      ->required();
  enumerate->add_option("--degree", opt.degree, "degree to enumerate")->required();
  enumerate->add_flag("--count-only", opt.count_only, "print only the count");
  enumerate->add_option("--out", opt.out_path, "write JSON array to this file");

  CLI::App* product = app.add_subcommand("product", "Multiply two elements");
  product->add_option("--algebra", opt.algebra, algebras)->required();
  product->add_option("inputs", opt.inputs, "two basis strings or JSON linear combinations")
      ->expected(2)->allow_extra_args(false);
  product->add_option("--out", opt.out_path, "write JSON to this file");

  CLI::App* coproduct = app.add_subcommand("coproduct", "Coproduct of an element");
  coproduct->add_option("--algebra", opt.algebra, algebras)->required();
  coproduct->add_option("input", opt.inputs, "basis string or JSON linear combination")
      ->expected(1)->allow_extra_args(false);
  coproduct->add_option("--out", opt.out_path, "write JSON to this file");

  CLI::App* antipode_cmd = app.add_subcommand("antipode", "Antipode of an element");
  antipode_cmd->add_option("--algebra", opt.algebra, algebras)->required();
  antipode_cmd->add_option("input", opt.inputs, "basis string or JSON linear combination")
      ->expected(1)->allow_extra_args(false);
  antipode_cmd->add_option("--out", opt.out_path, "write JSON to this file");

  CLI::App* eulerian_cmd =
      app.add_subcommand("eulerian", "First Eulerian idempotent applied to an element");
  eulerian_cmd->add_option("--algebra", opt.algebra, algebras)->required();
  eulerian_cmd->add_option("input", opt.inputs, "basis string or JSON linear combination")
      ->expected(1)->allow_extra_args(false);
  eulerian_cmd->add_option("--out", opt.out_path, "write JSON to this file");

  CLI::App* coradical =
      app.add_subcommand("coradical-level", "Coradical filtration level of an element");
  coradical->add_option("--algebra", opt.algebra, algebras)->required();
  coradical->add_option("input", opt.inputs, "basis string or JSON linear combination")
      ->expected(1)->allow_extra_args(false);
  coradical->add_option("--out", opt.out_path, "write the level to this file");

  CLI::App* primitive = app.add_subcommand("is-primitive", "Whether an element is primitive");
  primitive->add_option("--algebra", opt.algebra, algebras)->required();
  primitive->add_option("input", opt.inputs, "basis string or JSON linear combination")
      ->expected(1)->allow_extra_args(false);
  primitive->add_option("--out", opt.out_path, "write true/false to this file");

  CLI::App* bij = app.add_subcommand("bij", "Apply a tree bijection to one object");
  bij->add_option("--which", opt.which, "psi (binary trees) or phi (permutations)")->required();
  bij->add_flag("--inverse", opt.inverse, "apply the inverse direction");
  bij->add_option("input", opt.inputs, "object in the source grammar")->expected(1)->allow_extra_args(false);
  bij->add_option("--out", opt.out_path, "write the image to this file");

  CLI::App* verify_ax = app.add_subcommand("verify-axioms", "Exhaustive Hopf axiom suite");
  verify_ax->add_option("--algebra", opt.algebra, algebras)->required();
  verify_ax->add_option("--max-degree", opt.max_degree, "total degree bound (default 4)");

  CLI::App* verify_iso_cmd =
      app.add_subcommand("verify-iso", "Certify an isomorphism degree by degree");
  verify_iso_cmd->add_option("--which", opt.which, "psi or phi")->required();
  verify_iso_cmd->add_option("--max-degree", opt.max_degree, "top degree (default 4)");
  verify_iso_cmd->add_option("--emit", opt.emit_path, "write certificate JSON to this file");

  CLI::App* export_cmd =
      app.add_subcommand("export-structure-constants", "CSV of all products up to a degree");
  export_cmd->add_option("--algebra", opt.algebra, algebras)->required();
  export_cmd->add_option("--max-degree", opt.max_degree, "total degree bound (default 4)");
  export_cmd->add_option("--out", opt.out_path, "write CSV to this file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (!config_path.empty()) apply_config_file(config_path);
    apply_env_override();

    if (enumerate->parsed()) return run_enumerate(opt);
    if (product->parsed()) return run_product(opt);
    if (coproduct->parsed()) return run_coproduct(opt);
    if (antipode_cmd->parsed()) return run_endomorphism(opt, antipode);
    if (eulerian_cmd->parsed()) return run_endomorphism(opt, eulerian);
    if (coradical->parsed()) return run_coradical_level(opt);
    if (primitive->parsed()) return run_is_primitive(opt);
    if (bij->parsed()) return run_bij(opt);
    if (verify_ax->parsed()) return run_verify_axioms(opt);
    if (verify_iso_cmd->parsed()) return run_verify_iso(opt);
    if (export_cmd->parsed()) return run_export(opt);
    std::cerr << "error: no subcommand\n";
    return 2;
  } catch (const ResourceError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
