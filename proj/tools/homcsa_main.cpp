// homcsa: check, derive and search hom-center-symmetric structures.
//
//   homcsa check <kind> <files...> [--json]
//   homcsa derive <kind> <in...> -o <out> [--json]
//   homcsa search --dim N --set a,b,c --mode exhaustive|random
//                 [--samples K --seed S] --target T [-o out.jsonl]
//
// Exit status: 0 all checks passed, 1 some axiom failed, 2 bad input.

#include <chrono>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "homcsa/bialg.hpp"
#include "homcsa/errors.hpp"
#include "homcsa/io.hpp"
#include "homcsa/search.hpp"

using namespace homcsa;
using io::json;

namespace {

struct Input {
  std::string path;
  std::string sha256;
  json doc;
};

struct Run {
  std::string command;
  std::vector<Input> inputs;
  std::vector<std::pair<std::size_t, AxiomReport>> reports;  // (input index, report)
  json details = json::object();
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

  bool verdict() const {
    for (const auto& r : reports)
      if (!r.second.passed()) return false;
    return true;
  }
};

Input load(const std::string& path) {
  std::string text = io::read_file(path);
  return {path, io::sha256_hex(text), io::parse_json(text, path)};
}

json vec_json(const Vector& v) {
  json a = json::array();
  for (const auto& s : v) a.push_back(s.to_string());
  return a;
}

std::string vec_text(const Vector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i].to_string();
  return s + ")";
}

// One entry per evaluated identity family.
json report_entries(const Run& run) {
  json out = json::array();
  for (const auto& [input, rep] : run.reports)
    for (const auto& fam : rep.evaluated) {
      json viol = json::array();
      for (const auto& v : rep.violations)
        if (v.axiom == fam)
          viol.push_back({{"indices", v.indices}, {"lhs", vec_json(v.lhs)}, {"rhs", vec_json(v.rhs)}});
      out.push_back({{"axiom", rep.axiom + "/" + fam},
                     {"input", input},
                     {"passed", viol.empty()},
                     {"violations", std::move(viol)}});
    }
  return out;
}

void emit(const Run& run, bool asJson) {
  auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - run.start).count();
  if (asJson) {
    json inputs = json::array();
    for (const auto& in : run.inputs) inputs.push_back({{"path", in.path}, {"sha256", in.sha256}});
    json doc = {{"command", run.command},
                {"inputs", inputs},
                {"reports", report_entries(run)},
                {"verdict", run.verdict() ? "pass" : "fail"},
                {"elapsed_ms", ms}};
    if (!run.details.empty()) doc["details"] = run.details;
    std::cout << doc.dump(2) << "\n";
    return;
  }
  constexpr std::size_t kShown = 5;
  for (const auto& [input, rep] : run.reports) {
    const std::string path = input < run.inputs.size() ? run.inputs[input].path
                                                        : run.details["output"]["path"].get<std::string>();
    for (const auto& fam : rep.evaluated) {
      std::size_t bad = rep.count(fam);
      std::cout << (bad ? "FAIL " : "ok   ") << rep.axiom << "/" << fam << "  [" << path << "]";
      if (bad) std::cout << "  " << bad << " violation" << (bad == 1 ? "" : "s");
      std::cout << "\n";
      std::size_t shown = 0;
      for (const auto& v : rep.violations) {
        if (v.axiom != fam || shown++ == kShown) continue;
        std::cout << "       at (";
        for (std::size_t i = 0; i < v.indices.size(); ++i) std::cout << (i ? "," : "") << v.indices[i];
        std::cout << "): lhs " << vec_text(v.lhs) << " rhs " << vec_text(v.rhs) << "\n";
      }
    }
  }
  if (run.details.contains("equivalence")) std::cout << run.details["equivalence"].dump(2) << "\n";
  std::cout << "verdict: " << (run.verdict() ? "pass" : "fail") << " (" << static_cast<long long>(ms) << " ms)\n";
}

json equivalence_details(const EquivalenceReport& e) {
  return {{"manin_triple", e.maninTriple},
          {"matched_pair_csa", e.matchedPairCsa},
          {"matched_pair_hom_lie", e.matchedPairHomLie},
          {"bialgebra", e.bialgebra},
          {"primal_hom_csa", e.primalCsa},
          {"dual_hom_csa", e.dualCsa},
          {"alpha_involutive", e.alphaInvolutive},
          {"agree", e.agree()}};
}

AxiomReport agreement_report(const EquivalenceReport& e) {
  AxiomReport rep("equivalence");
  auto bit = [](bool b) { return Scalar(b ? 1 : 0); };
  Vector got{bit(e.maninTriple), bit(e.matchedPairCsa), bit(e.matchedPairHomLie), bit(e.bialgebra)};
  Vector same(4, got[0]);
  rep.expect("four-way-agreement", {}, got, same);
  return rep;
}

void check_one(Run& run, const std::string& kind, std::size_t idx) {
  const json& doc = run.inputs[idx].doc;
  const std::string root = run.inputs[idx].path;
  auto add = [&](AxiomReport r) { run.reports.emplace_back(idx, std::move(r)); };
  if (kind == "algebra") {
    add(check_center_symmetric(io::algebra_from_json(doc, root)));
  } else if (kind == "hom-lie") {
    add(check_hom_jacobi(io::algebra_from_json(doc, root)));
  } else if (kind == "representation") {
    add(check_hom_lie_rep(io::representation_from_json(doc, root)));
  } else if (kind == "bimodule") {
    add(check_bimodule(io::bimodule_from_json(doc, root)));
  } else if (kind == "matched-pair") {
    add(check_matched_pair_csa(io::matched_pair_from_json(doc, root)));
  } else if (kind == "lie-matched-pair") {
    add(check_matched_pair_hom_lie(io::lie_pair_from_json(doc, root)));
  } else if (kind == "bialgebra") {
    add(check_bialgebra(io::bialgebra_from_json(doc, root)));
  } else if (kind == "manin") {
    PairedAlgebras P = io::bialgebra_from_json(doc, root);
    AxiomReport dbl = check_center_symmetric(standard_manin_algebra(P));
    dbl.axiom = "manin-double";
    add(std::move(dbl));
    add(check_manin_invariance(P));
  } else if (kind == "equivalence") {
    EquivalenceReport e = equivalence_report(io::bialgebra_from_json(doc, root));
    add(e.reports[0]);
    add(e.reports[1]);
    add(agreement_report(e));
    run.details["equivalence"][run.inputs[idx].path] = equivalence_details(e);
  } else {
    throw InputError("unknown check kind \"" + kind + "\"");
  }
}

int cmd_check(const std::string& kind, const std::vector<std::string>& files, bool asJson,
              const std::string& command) {
  Run run;
  run.command = command;
  for (const auto& f : files) run.inputs.push_back(load(f));
  for (std::size_t i = 0; i < run.inputs.size(); ++i) check_one(run, kind, i);
  emit(run, asJson);
  return run.verdict() ? 0 : 1;
}

int cmd_derive(const std::string& kind, const std::vector<std::string>& files, const std::string& out,
               bool asJson, const std::string& command) {
  Run run;
  run.command = command;
  for (const auto& f : files) run.inputs.push_back(load(f));
  auto need = [&](std::size_t count) {
    if (run.inputs.size() != count)
      throw InputError("derive " + kind + " takes " + std::to_string(count) + " input file(s)");
  };
  auto doc = [&](std::size_t i) -> const json& { return run.inputs[i].doc; };
  auto path = [&](std::size_t i) -> const std::string& { return run.inputs[i].path; };
  const std::size_t derived = run.inputs.size();  // report index for the output
  json result;
  auto post = [&](AxiomReport r) { run.reports.emplace_back(derived, std::move(r)); };

  if (kind == "commutator") {
    need(1);
    HomAlgebra L = commutator_algebra(io::algebra_from_json(doc(0), path(0)));
    post(check_hom_jacobi(L));
    result = io::to_json(L);
  } else if (kind == "regular-bimodule") {
    need(1);
    Bimodule B = regular_bimodule(io::algebra_from_json(doc(0), path(0)));
    post(check_bimodule(B));
    result = io::to_json(B);
  } else if (kind == "dual-bimodule") {
    need(1);
    Bimodule B = dual_bimodule(io::bimodule_from_json(doc(0), path(0)));
    post(check_bimodule(B));
    result = io::to_json(B);
  } else if (kind == "semidirect") {
    need(1);
    io::FileKind k = io::detect_kind(doc(0));
    if (k == io::FileKind::Bimodule) {
      HomAlgebra S = semidirect_hom_csa(io::bimodule_from_json(doc(0), path(0)));
      post(check_center_symmetric(S));
      result = io::to_json(S);
    } else if (k == io::FileKind::Representation) {
      HomAlgebra S = semidirect_hom_lie(io::representation_from_json(doc(0), path(0)));
      post(check_hom_jacobi(S));
      result = io::to_json(S);
    } else {
      throw InputError(path(0) + ": semidirect needs a bimodule or representation file");
    }
  } else if (kind == "bicross") {
    need(1);
    HomAlgebra S = bicross_product(io::matched_pair_from_json(doc(0), path(0)));
    post(check_center_symmetric(S));
    result = io::to_json(S);
  } else if (kind == "manin-double") {
    need(1);
    PairedAlgebras P = io::bialgebra_from_json(doc(0), path(0));
    HomAlgebra D = standard_manin_algebra(P);
    post(check_center_symmetric(D));
    post(check_manin_invariance(P));
    result = io::to_json(D);
  } else if (kind == "tensor-rep") {
    need(2);
    Representation R = tensor_product_rep(io::representation_from_json(doc(0), path(0)),
                                          io::representation_from_json(doc(1), path(1)));
    post(check_hom_lie_rep(R));
    result = io::to_json(R);
  } else if (kind == "induced-lie-pair") {
    need(1);
    MatchedPairHomLie M = induced_lie_matched_pair(io::matched_pair_from_json(doc(0), path(0)));
    post(check_matched_pair_hom_lie(M));
    result = io::to_json(M);
  } else {
    throw InputError("unknown derive kind \"" + kind + "\"");
  }
  io::write_file(out, io::to_text(result));
  run.details["output"] = {{"path", out}, {"sha256", io::sha256_hex(io::to_text(result))}};
  emit(run, asJson);
  return run.verdict() ? 0 : 1;
}

std::vector<Scalar> parse_set(const std::string& text) {
  std::vector<Scalar> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(Scalar::parse(item));
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Verification and construction workbench for hom-center-symmetric algebras"};
  app.require_subcommand(1);
  std::string command;
  for (int i = 1; i < argc; ++i) command += (i > 1 ? " " : "") + std::string(argv[i]);

  bool asJson = false;
  std::string kind, out;
  std::vector<std::string> files;

  auto* check = app.add_subcommand("check", "Verify a structure file against its axioms");
  check->add_option("kind", kind,
                    "algebra | hom-lie | representation | bimodule | matched-pair | "
                    "lie-matched-pair | bialgebra | manin | equivalence")
      ->required();
  check->add_option("files", files, "Input files")->required();
  check->add_flag("--json", asJson, "Machine-readable report");

  auto* derive = app.add_subcommand("derive", "Build a derived structure and check it");
  derive->add_option("kind", kind,
                     "commutator | regular-bimodule | dual-bimodule | semidirect | bicross | "
                     "manin-double | tensor-rep | induced-lie-pair")
      ->required();
  derive->add_option("inputs", files, "Input files")->required();
  derive->add_option("-o,--output", out, "Output file")->required();
  derive->add_flag("--json", asJson, "Machine-readable report");

  SearchConfig cfg;
  std::string setText = "-1,0,1", modeText = "exhaustive", targetText = "hom-csa";
  bool serial = false;
  auto* search = app.add_subcommand("search", "Enumerate or sample structure constants");
  search->add_option("--dim", cfg.dim, "Algebra dimension")->required();
  search->add_option("--set", setText, "Comma-separated coefficient set")->capture_default_str();
  search->add_option("--mode", modeText, "exhaustive | random")->capture_default_str();
  search->add_option("--samples", cfg.samples, "Random-mode sample count")->capture_default_str();
  search->add_option("--seed", cfg.seed, "Random-mode seed")->capture_default_str();
  search->add_option("--target", targetText, "hom-csa | hom-lie | bialgebra | paired")->capture_default_str();
  search->add_option("--budget", cfg.budget, "Largest exhaustive candidate count")->capture_default_str();
  search->add_flag("--serial", serial, "Use the single-threaded reference loop");
  search->add_option("-o,--output", out, "Write JSON lines here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (*check) return cmd_check(kind, files, asJson, command);
    if (*derive) return cmd_derive(kind, files, out, asJson, command);
    cfg.coefficients = parse_set(setText);
    if (modeText == "exhaustive")
      cfg.mode = SearchMode::Exhaustive;
    else if (modeText == "random")
      cfg.mode = SearchMode::Random;
    else
      throw InputError("unknown mode \"" + modeText + "\"");
    cfg.target = parse_target(targetText);
    auto hits = run_search(cfg, serial ? Execution::Serial : Execution::Parallel);
    std::string lines = hits_to_jsonl(hits, cfg.target);
    if (out.empty())
      std::cout << lines;
    else
      io::write_file(out, lines);
    std::cerr << hits.size() << " candidate(s) passed " << target_name(cfg.target) << "\n";
    return 0;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
