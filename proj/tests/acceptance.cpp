// Acceptance driver: one line per criterion, "criterion N PASS|FAIL: detail".
//
//   acceptance            run every criterion
//   acceptance 3 7        run the listed criteria
//
// Exit status is 0 when every selected criterion passes.

#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "homcsa/search.hpp"
#include "support.hpp"

using namespace homcsa;
using io::json;

namespace {

struct Outcome {
  bool passed;
  std::string detail;
};

const std::vector<Scalar> ternary{Scalar(-1), Scalar(0), Scalar(1)};

json golden() { return io::parse_json(io::read_file(support::corpus_path("golden.json")), "golden.json"); }

bool squares_to_identity(const LinearMap& m) { return mat_compose(m, m) == LinearMap::identity(m.rows()); }

std::string count_of(std::size_t k, const char* what) { return std::to_string(k) + " " + what; }

std::vector<HomAlgebra> corpus_hom_csas() { return support::corpus_algebras("hom_csa_dim2.jsonl"); }

Outcome lie_admissibility() {
  auto algs = corpus_hom_csas();
  const std::size_t expected = golden()["hom_csa_dim2"].get<std::size_t>();
  std::size_t bad = 0;
  for (const auto& A : algs) bad += !check_hom_jacobi(commutator_algebra(A)).passed();
  bool ok = algs.size() == expected && bad == 0;
  return {ok, count_of(algs.size(), "corpus hom-CSAs (golden ") + std::to_string(expected) + "), " +
                  count_of(bad, "commutators failing hom-Jacobi")};
}

Outcome regular_bimodule_sweep() {
  std::size_t total = 0, bad = 0;
  for (const char* file : {"hom_csa_dim2.jsonl", "involutive_dim2.jsonl"})
    for (const auto& A : support::corpus_algebras(file)) {
      ++total;
      bad += !check_bimodule(regular_bimodule(A)).passed();
    }
  return {bad == 0 && total > 0, count_of(total, "corpus hom-CSAs, ") + count_of(bad, "regular bimodules failing")};
}

Outcome bimodule_semidirect() {
  auto algs = corpus_hom_csas();
  support::Gen g(1001);
  std::size_t total = 0, disagree = 0, passing = 0;
  for (std::size_t m : {1, 2})
    for (int it = 0; it < 6000; ++it) {
      const HomAlgebra& A = algs[g.below(algs.size())];
      double sparsity = 0.5 + 0.1 * double(it % 5);
      Bimodule B(A, m, g.sparse_action(2, m, sparsity), g.sparse_action(2, m, sparsity), g.matrix(m, m));
      bool bim = check_bimodule(B).passed();
      disagree += bim != check_center_symmetric(semidirect_hom_csa(B)).passed();
      passing += bim;
      ++total;
    }
  return {total >= 10000 && disagree == 0,
          count_of(total, "pairs at module dims 1 and 2, ") + count_of(passing, "bimodules, ") +
              count_of(disagree, "disagreements")};
}

Outcome dual_witnesses() {
  auto load = [](const char* name) {
    return io::bimodule_from_json(io::parse_json(io::read_file(support::corpus_path(name)), name));
  };
  Bimodule a = load("dual_witness_pass.json"), b = load("dual_witness_fail.json");
  std::set<std::string> corpus;
  for (const auto& j : support::read_jsonl(support::corpus_path("hom_csa_dim2.jsonl"))) corpus.insert(j.dump());
  bool aOk = corpus.count(io::to_json(a.base).dump()) && squares_to_identity(a.base.twist()) &&
             squares_to_identity(a.phi) && check_bimodule(a).passed() && check_bimodule(dual_bimodule(a)).passed();
  bool bOk = corpus.count(io::to_json(b.base).dump()) && !squares_to_identity(b.base.twist()) &&
             check_bimodule(b).passed() && !check_bimodule(dual_bimodule(b)).passed();
  return {aOk && bOk, std::string("witness (a) α²=φ²=id with passing dual ") + (aOk ? "confirmed" : "missing") +
                          ", witness (b) α²≠id with failing dual " + (bOk ? "confirmed" : "missing")};
}

Outcome matched_bicross() {
  auto algs = corpus_hom_csas();
  support::Gen g(1005);
  std::size_t total = 0, disagree = 0, passing = 0;
  for (int it = 0; it < 2000; ++it) {
    const HomAlgebra& A = algs[g.below(algs.size())];
    const HomAlgebra& B = algs[g.below(algs.size())];
    double sparsity = 0.6 + 0.1 * double(it % 4);
    MatchedPairCSA M(A, B, g.sparse_action(2, 2, sparsity), g.sparse_action(2, 2, sparsity),
                     g.sparse_action(2, 2, sparsity), g.sparse_action(2, 2, sparsity));
    bool mp = check_matched_pair_csa(M).passed();
    disagree += mp != check_center_symmetric(bicross_product(M)).passed();
    passing += mp;
    ++total;
  }
  return {total >= 1000 && disagree == 0, count_of(total, "candidates at dims (2,2), ") +
                                              count_of(passing, "matched pairs, ") + count_of(disagree, "disagreements")};
}

Outcome cocycle_cross_validation() {
  support::Gen g(1006);
  auto bialgs = support::corpus_pairs("bialgebra_dim2.jsonl");
  std::size_t total = 0, disagree = 0, passing = 0;
  for (int it = 0; it < 12000; ++it) {
    PairedAlgebras P;
    if (it % 4 == 0) {
      P = bialgs[g.below(bialgs.size())];
    } else {
      BilinearTensor c = g.tensor(2), f = g.tensor(2);
      for (auto* t : {&c, &f})
        for (std::size_t i = 0; i < 2; ++i)
          for (std::size_t j = 0; j < 2; ++j)
            for (std::size_t k = 0; k < 2; ++k)
              if (g.coin(0.7)) t->at(i, j, k) = Scalar();
      P = PairedAlgebras(HomAlgebra(c, g.matrix(2, 2)), f);
    }
    for (CocycleSide side : {CocycleSide::Gamma, CocycleSide::Beta}) {
      bool a = check_cocycle(P, side).passed();
      disagree += a != check_cocycle_coordinates(P, side).passed();
      passing += a;
    }
    ++total;
  }
  return {total >= 10000 && disagree == 0,
          count_of(total, "instances at n=2 (both sides), ") + count_of(passing, "passing cocycles, ") +
              count_of(disagree, "disagreements")};
}

// Every search-found paired instance with both sides hom-CSA: the exhaustive
// n=1 list and the n=2 join over involutive twists.
std::vector<PairedAlgebras> paired_instances() {
  std::vector<PairedAlgebras> out = support::corpus_pairs("paired_dim1.jsonl");
  auto algs = corpus_hom_csas();
  std::map<std::string, std::vector<std::size_t>> byTwist;
  for (std::size_t k = 0; k < algs.size(); ++k) byTwist[io::to_json(algs[k].twist()).dump()].push_back(k);
  for (const auto& A : algs) {
    if (!squares_to_identity(A.twist())) continue;
    auto it = byTwist.find(io::to_json(dual_map(A.twist())).dump());
    if (it == byTwist.end()) continue;
    for (std::size_t k : it->second) out.emplace_back(A, algs[k].mul());
  }
  return out;
}

std::string describe(const PairedAlgebras& P, const EquivalenceReport& e) {
  std::ostringstream s;
  s << io::to_json(P).dump() << " gives (i)=" << e.maninTriple << " (ii)=" << e.matchedPairCsa
    << " (iii)=" << e.matchedPairHomLie << " (iv)=" << e.bialgebra;
  return s.str();
}

Outcome four_way() {
  std::size_t asserted = 0, disagree = 0, other = 0, otherDisagree = 0;
  std::map<std::string, std::size_t> patterns;
  std::string first;
  for (const auto& P : paired_instances()) {
    EquivalenceReport e = equivalence_report(P);
    if (!e.primalCsa || !e.dualCsa) continue;
    if (!e.alphaInvolutive) {
      ++other;
      otherDisagree += !e.agree();
      continue;
    }
    ++asserted;
    if (e.agree()) continue;
    ++disagree;
    std::string key = std::to_string(e.maninTriple) + std::to_string(e.matchedPairCsa) +
                      std::to_string(e.matchedPairHomLie) + std::to_string(e.bialgebra);
    ++patterns[key];
    if (first.empty()) first = describe(P, e);
  }
  std::string detail = count_of(asserted, "instances with α²=id, ") + count_of(disagree, "disagreements");
  for (const auto& [k, v] : patterns) detail += ", pattern " + k + " x" + std::to_string(v);
  if (!first.empty()) detail += "; first: " + first;
  detail += "; reported only: " + count_of(other, "with α²≠id, ") + count_of(otherDisagree, "of them disagreeing");
  return {asserted > 0 && disagree == 0, detail};
}

Outcome manin_pairing() {
  std::size_t total = 0, gramBad = 0, isoBad = 0, mismatch = 0;
  std::string first;
  for (const auto& P : paired_instances()) {
    EquivalenceReport e = equivalence_report(P);
    if (!e.primalCsa || !e.dualCsa || !e.alphaInvolutive) continue;
    ++total;
    const std::size_t n = P.dim(), N = 2 * n;
    bool gram = true;
    for (std::size_t s = 0; s < N; ++s)
      for (std::size_t t = 0; t < N; ++t) {
        Scalar want = (s + n == t || t + n == s) ? Scalar(1) : Scalar(0);
        gram = gram && standard_pairing(basis_vector(N, s), basis_vector(N, t)) == want;
      }
    gramBad += !gram;
    AxiomReport inv = check_manin_invariance(P);
    isoBad += inv.count("isotropic-primal") + inv.count("isotropic-dual") > 0;
    if (inv.passed() != e.maninTriple) {
      ++mismatch;
      if (first.empty())
        first = io::to_json(P).dump() + " invariance=" + std::to_string(inv.passed()) +
                " (i)=" + std::to_string(e.maninTriple);
    }
  }
  std::string detail = count_of(total, "instances, ") + count_of(gramBad, "bad Gram matrices, ") +
                       count_of(isoBad, "non-isotropic blocks, ") +
                       count_of(mismatch, "where invariance differs from (i)");
  if (!first.empty()) detail += "; first: " + first;
  return {total > 0 && gramBad == 0 && isoBad == 0 && mismatch == 0, detail};
}

Outcome tensor_reps() {
  auto lies = support::corpus_algebras("hom_lie_dim2.jsonl");
  support::Gen g(1009);
  auto candidate = [&](const HomAlgebra& L) {
    switch (g.below(4)) {
      case 0: return Representation(L, 2, left_rep(L), L.twist());
      case 1: {
        std::size_t m = 1 + g.below(2);
        return Representation(L, m, ActionTensor(2, m), g.matrix(m, m));
      }
      default: {
        std::size_t m = 1 + g.below(2);
        return Representation(L, m, g.sparse_action(2, m, 0.6), g.matrix(m, m));
      }
    }
  };
  std::size_t pairs = 0, bothPass = 0, bad = 0;
  while (bothPass < 1500 && pairs < 200000) {
    const HomAlgebra& L = lies[g.below(lies.size())];
    Representation U = candidate(L), V = candidate(L);
    ++pairs;
    if (!check_hom_lie_rep(U).passed() || !check_hom_lie_rep(V).passed()) continue;
    ++bothPass;
    bad += !check_hom_lie_rep(tensor_product_rep(U, V)).passed();
  }
  return {bothPass >= 1000 && bad == 0, count_of(pairs, "random pairs over corpus hom-Lie algebras, ") +
                                           count_of(bothPass, "with both inputs passing, ") +
                                           count_of(bad, "tensor products failing")};
}

int run_cli(const std::string& args, const std::string& out) {
  std::string cmd = std::string(HOMCSA_CLI) + " " + args + " > " + out + " 2>&1";
  int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

Outcome tooling() {
  std::vector<std::string> problems;
  std::size_t docs = 0;

  // Round trip over every committed document.
  for (const auto& entry : std::filesystem::directory_iterator(HOMCSA_CORPUS_DIR)) {
    const std::string path = entry.path().string(), name = entry.path().filename().string();
    if (name == "golden.json") continue;
    const std::string text = io::read_file(path);
    if (entry.path().extension() == ".jsonl") {
      std::istringstream lines(text);
      std::string line;
      while (std::getline(lines, line)) {
        json j = io::parse_json(line, name);
        std::string again = io::detect_kind(j) == io::FileKind::Algebra ? io::to_json(io::algebra_from_json(j)).dump()
                                                                        : io::to_json(io::bialgebra_from_json(j)).dump();
        if (again != line) problems.push_back(name + " line does not round-trip");
        ++docs;
      }
    } else {
      json j = io::parse_json(text, name);
      if (io::to_text(io::to_json(io::bimodule_from_json(j))) != text) problems.push_back(name + " does not round-trip");
      ++docs;
    }
  }

  // Search determinism: two fresh processes, and the committed exhaustive list.
  const auto tmp = std::filesystem::temp_directory_path() / ("homcsa_acceptance_" + std::to_string(::getpid()));
  std::filesystem::create_directories(tmp);
  auto file = [&](const std::string& n) { return (tmp / n).string(); };
  const std::string rnd = "search --dim 2 --set=-1,0,1 --mode random --samples 20000 --seed 17 --target hom-csa -o ";
  run_cli(rnd + file("r1.jsonl"), file("log1"));
  run_cli(rnd + file("r2.jsonl"), file("log2"));
  if (io::read_file(file("r1.jsonl")) != io::read_file(file("r2.jsonl")) || io::read_file(file("r1.jsonl")).empty())
    problems.push_back("random search output differs between runs");
  run_cli("search --dim 2 --set=-1,0,1 --target hom-csa -o " + file("ex.jsonl"), file("log3"));
  if (io::read_file(file("ex.jsonl")) != io::read_file(support::corpus_path("hom_csa_dim2.jsonl")))
    problems.push_back("exhaustive search does not reproduce the committed corpus");

  // Exit codes: pass, axiom failure, parse failure.
  std::string firstLine = io::read_file(support::corpus_path("involutive_dim2.jsonl"));
  firstLine = firstLine.substr(0, firstLine.find('\n'));
  io::write_file(file("good.json"), firstLine);
  json bad = io::parse_json(firstLine);
  bad["alpha"][0][0] = "7";
  io::write_file(file("bad.json"), bad.dump());
  io::write_file(file("broken.json"), "{\"dim\": 2, \"mul\": [");
  int good = run_cli("check algebra " + file("good.json"), file("o1"));
  int fail = run_cli("check algebra " + file("bad.json"), file("o2"));
  int broken = run_cli("check algebra " + file("broken.json"), file("o3"));
  if (good != 0 || fail != 1 || broken != 2)
    problems.push_back("exit codes " + std::to_string(good) + "/" + std::to_string(fail) + "/" +
                       std::to_string(broken) + " instead of 0/1/2");
  std::filesystem::remove_all(tmp);

  std::string detail = count_of(docs, "corpus documents round-tripped, search deterministic, exit codes ") +
                       std::to_string(good) + "/" + std::to_string(fail) + "/" + std::to_string(broken);
  for (const auto& p : problems) detail += "; " + p;
  return {problems.empty(), detail};
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::function<Outcome()>> criteria{
      lie_admissibility, regular_bimodule_sweep, bimodule_semidirect, dual_witnesses, matched_bicross,
      cocycle_cross_validation, four_way, manin_pairing, tensor_reps, tooling};
  std::vector<std::size_t> selected;
  for (int i = 1; i < argc; ++i) selected.push_back(std::stoul(argv[i]));
  if (selected.empty())
    for (std::size_t i = 1; i <= criteria.size(); ++i) selected.push_back(i);

  bool all = true;
  for (std::size_t k : selected) {
    if (k < 1 || k > criteria.size()) {
      std::cout << "criterion " << k << " FAIL: no such criterion\n";
      all = false;
      continue;
    }
    Outcome o;
    try {
      o = criteria[k - 1]();
    } catch (const std::exception& e) {
      o = {false, std::string("error: ") + e.what()};
    }
    std::cout << "criterion " << k << (o.passed ? " PASS: " : " FAIL: ") << o.detail << std::endl;
    all = all && o.passed;
  }
  return all ? 0 : 1;
}
