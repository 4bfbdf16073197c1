#include "cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "srreal/diagram.hpp"
#include "srreal/error.hpp"
#include "srreal/json_io.hpp"
#include "srreal/verifier.hpp"

namespace srreal::cli {

namespace {

struct Config {
  std::string input;   // empty or "-" reads stdin
  std::string output;  // empty writes stdout
  std::string format;
  int max_degree = 0;  // 0: derive from the input
  std::string diagram_path;
  std::uint64_t bound = 0;
  std::vector<std::uint64_t> extra_primes;
  int verbosity = 0;
};

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_all(std::istream& in) {
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

std::string read_file(const std::string& path) {
  std::ifstream file(path, std::ios::binary);
  if (!file) throw InputError("cannot open " + path);
  return read_all(file);
}

ComplexWithDegrees load_complex(const Config& config, std::istream& in) {
  const std::string text =
      config.input.empty() || config.input == "-" ? read_all(in) : read_file(config.input);
  ComplexWithDegrees complex = parse_complex(text);
  validate(complex);
  return complex;
}

void emit(const Config& config, std::ostream& out, const std::string& text) {
  if (config.output.empty()) {
    out << text;
    return;
  }
  std::ofstream file(config.output, std::ios::binary);
  if (!file) throw InputError("cannot write " + config.output);
  file << text;
}

std::string json_text(const nlohmann::json& j) { return j.dump(2) + "\n"; }

std::string partition_text(const Partition& p) {
  std::string s;
  for (std::size_t b = 0; b < p.blocks.size(); ++b) {
    if (b) s += " ";
    s += Simplex(p.blocks[b]).to_string();
  }
  return s.empty() ? "(no blocks)" : s;
}

std::string verdict_text(const Verdict& v) {
  std::ostringstream out;
  out << "verdict: " << verdict_kind(v) << "\n";
  std::visit(
      [&](const auto& x) {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Realizable>) {
          out << "partition: " << partition_text(x.partition) << "\n";
          for (const auto& sc : x.per_sigma) {
            out << "sigma " << sc.simplex.to_string() << ": " << multiset_of(sc.cls).to_string()
                << " " << describe(sc.cls) << "\n";
          }
        } else if constexpr (std::is_same_v<T, NotRealizable>) {
          out << "witness: " << x.witness.to_string() << "\n";
          out << "multiset: " << x.multiset.to_string() << "\n";
          out << "reason: " << describe(x.reason) << "\n";
        } else if constexpr (std::is_same_v<T, HypothesisViolated>) {
          out << "pair: " << x.x << " " << x.y << " share a face, both of degree " << x.degree()
              << "\n";
        } else if constexpr (std::is_same_v<T, SufficientOnly>) {
          out << "partition: " << partition_text(x.partition) << "\n";
        } else {
          out << "note: " << x.note << "\n";
        }
      },
      v);
  return out.str();
}

std::optional<Partition> constructible_partition(const Verdict& v) {
  if (const auto* r = std::get_if<Realizable>(&v)) return r->partition;
  if (const auto* s = std::get_if<SufficientOnly>(&v)) return s->partition;
  return std::nullopt;
}

int cmd_check(const Config& config, std::istream& in, std::ostream& out) {
  const Verdict verdict = full_report(load_complex(config, in));
  emit(config, out, config.format == "text" ? verdict_text(verdict) : json_text(to_json(verdict)));
  return exit_code(verdict);
}

int cmd_construct(const Config& config, std::istream& in, std::ostream& out, std::ostream& err) {
  const ComplexWithDegrees complex = load_complex(config, in);
  const Verdict verdict = full_report(complex);
  const auto partition = constructible_partition(verdict);
  if (!partition) {
    err << "no diagram: " << verdict_text(verdict);
    return exit_code(verdict);
  }
  const ColimitDiagram diagram = build_diagram(complex, *partition);
  emit(config, out, config.format == "dot" ? emit_dot(diagram) : emit_json(diagram));
  return 0;
}

int cmd_verify(const Config& config, std::istream& in, std::ostream& out, std::ostream& err) {
  const ComplexWithDegrees complex = load_complex(config, in);
  int D = config.max_degree;
  if (D == 0) D = std::max(2, 2 * complex.max_degree() * 3);
  ColimitDiagram diagram;
  if (!config.diagram_path.empty()) {
    diagram = parse_diagram_json(read_file(config.diagram_path));
  } else {
    const Verdict verdict = full_report(complex);
    const auto partition = constructible_partition(verdict);
    if (!partition) {
      err << "no diagram: " << verdict_text(verdict);
      return exit_code(verdict);
    }
    diagram = build_diagram(complex, *partition);
  }
  const VerificationReport report = verify_construction(complex, diagram, D);
  emit(config, out, config.format == "text" ? render_text(report) : json_text(to_json(report)));
  if (!report.passed) {
    err << "verification failed: " << report.first_discrepancy.value_or("") << "\n";
    return kExitVerifyFailed;
  }
  return 0;
}

int cmd_partition(const Config& config, std::istream& in, std::ostream& out) {
  const auto partition = find_partition(load_complex(config, in));
  if (config.format == "text") {
    emit(config, out, (partition ? partition_text(*partition) : std::string("none")) + "\n");
  } else {
    emit(config, out,
         json_text({{"partition", partition ? to_json(*partition) : nlohmann::json(nullptr)}}));
  }
  return partition ? 0 : 1;
}

int cmd_obstruct(const Config& config, std::istream& in, std::ostream& out) {
  const ComplexWithDegrees complex = load_complex(config, in);
  nlohmann::json sigmas = nlohmann::json::array();
  std::ostringstream text;
  bool all_admissible = true;
  const MaxIntersectionPoset poset = pmax(complex);
  for (const auto& sigma : poset.elements()) {
    const DegreeMultiset ms = degree_multiset(complex, sigma);
    const AdmissibleClass cls = classify(ms);
    all_admissible = all_admissible && is_steenrod_admissible(cls);
    sigmas.push_back({{"simplex", to_json(sigma)},
                      {"multiset", to_json(ms)},
                      {"class", to_json(cls)},
                      {"admissible", is_steenrod_admissible(cls)}});
    text << sigma.to_string() << " " << ms.to_string() << ": ";
    if (const auto* bad = std::get_if<Inadmissible>(&cls)) {
      text << describe(bad->reason) << "\n";
    } else {
      text << describe(cls) << "\n";
    }
  }
  const NecessaryOutcome necessary = necessary_condition(complex);
  nlohmann::json condition;
  if (std::holds_alternative<ConditionHolds>(necessary)) {
    condition = {{"status", "holds"}};
    text << "necessary condition: holds\n";
  } else if (const auto* f = std::get_if<ConditionFails>(&necessary)) {
    condition = {{"status", "fails"}, {"witness", to_json(f->witness)}};
    text << "necessary condition: fails at " << f->witness.to_string() << "\n";
  } else {
    const auto& h = std::get<HypothesisViolated>(necessary);
    condition = {{"status", "notApplicable"}, {"pair", {h.x, h.y}}};
    text << "necessary condition: not applicable, " << h.x << " and " << h.y
         << " are degree-4 generators on a common face\n";
  }
  if (all_admissible) text << "all admissible\n";
  const nlohmann::json conventions = {
      "SUType n counts generators: {4,6,...,2n+2} is carried by BSU(n+1)",
      "Exceptional n: {4,8,...,2^(n+1)-4} plus {2^n}, n >= 3",
      "ThomasRank reports check the rank inequality only"};
  if (config.format == "text") {
    emit(config, out, text.str());
  } else {
    emit(config, out,
         json_text({{"sigmas", sigmas},
                    {"necessaryCondition", condition},
                    {"allAdmissible", all_admissible},
                    {"conventions", conventions}}));
  }
  return 0;
}

int cmd_prime(const Config& config, std::ostream& out) {
  const std::uint64_t p = dirichlet_prime(config.extra_primes, config.bound);
  std::vector<std::uint64_t> moduli = {16, 3, 5, 7};
  moduli.insert(moduli.end(), config.extra_primes.begin(), config.extra_primes.end());
  nlohmann::json residues = nlohmann::json::object();
  std::ostringstream text;
  text << p << "\n";
  for (std::uint64_t m : moduli) {
    residues[std::to_string(m)] = p % m;
    text << p << " mod " << m << " = " << p % m << "\n";
  }
  if (config.format == "text") {
    emit(config, out, text.str());
  } else {
    emit(config, out, json_text({{"prime", p}, {"bound", config.bound}, {"residues", residues}}));
  }
  return 0;
}

}  // namespace

int exit_code(const Verdict& verdict) {
  return std::visit(
      [](const auto& v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Realizable>) return kExitRealizable;
        if constexpr (std::is_same_v<T, SufficientOnly>) return kExitSufficientOnly;
        if constexpr (std::is_same_v<T, NotRealizable>) return kExitNotRealizable;
        if constexpr (std::is_same_v<T, Unknown>) return kExitUnknown;
        if constexpr (std::is_same_v<T, HypothesisViolated>) return kExitHypothesisViolated;
      },
      verdict);
}

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  Config config;
  CLI::App app{"Realizability of graded Stanley-Reisner rings"};
  app.require_subcommand(1);
  app.add_flag("-v,--verbose", config.verbosity, "Print progress to stderr");

  auto add_io = [&](CLI::App* sub, std::vector<std::string> formats, const std::string& fallback) {
    sub->add_option("input", config.input, "Input complex (JSON); stdin when omitted or '-'");
    sub->add_option("-o,--output", config.output, "Write to this file instead of stdout");
    config.format = fallback;
    sub->add_option("--format", config.format, "Output format")
        ->check(CLI::IsMember(std::move(formats)));
  };

  auto* check = app.add_subcommand("check", "Decide realizability; exit code encodes the verdict");
  add_io(check, {"json", "text"}, "json");
  auto* construct = app.add_subcommand("construct", "Emit the homotopy colimit diagram");
  add_io(construct, {"json", "dot"}, "json");
  auto* verify = app.add_subcommand("verify", "Verify the diagram against SR(K) up to degree D");
  add_io(verify, {"json", "text"}, "json");
  verify->add_option("--max-degree", config.max_degree, "Truncation degree D (even, positive)")
      ->check([](const std::string& s) -> std::string {
        try {
          const int d = std::stoi(s);
          if (d > 0 && d % 2 == 0) return {};
        } catch (...) {
        }
        return "--max-degree must be an even positive integer";
      });
  verify->add_option("--diagram", config.diagram_path, "Diagram JSON to verify instead of building");
  auto* partition = app.add_subcommand("partition", "Search for an admissible vertex partition");
  add_io(partition, {"json", "text"}, "json");
  auto* obstruct = app.add_subcommand("obstruct", "Classify every element of P_max");
  add_io(obstruct, {"json", "text"}, "json");
  auto* prime = app.add_subcommand("prime", "Smallest prime in the auxiliary progression");
  prime->add_option("--gt", config.bound, "Lower bound N (exclusive)");
  prime->add_option("--extra", config.extra_primes, "Extra primes p > 7 (p = 2 mod each)");
  prime->add_option("-o,--output", config.output, "Write to this file instead of stdout");
  config.format = "json";
  prime->add_option("--format", config.format, "Output format")
      ->check(CLI::IsMember({"json", "text"}));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kExitInputError;
  }

  try {
    if (config.verbosity > 0) err << "srreal: " << app.get_subcommands().front()->get_name() << "\n";
    if (*check) return cmd_check(config, in, out);
    if (*construct) return cmd_construct(config, in, out, err);
    if (*verify) return cmd_verify(config, in, out, err);
    if (*partition) return cmd_partition(config, in, out);
    if (*obstruct) return cmd_obstruct(config, in, out);
    if (*prime) return cmd_prime(config, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}

}  // namespace srreal::cli
