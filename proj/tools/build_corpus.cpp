// build_corpus: regenerate the golden corpus from the search engine.
//
//   build_corpus <dir>
//
// Every file written here is search output or a filter of search output;
// nothing is typed in by hand.

#include <iostream>
#include <map>
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

const std::vector<Scalar> ternary{Scalar(-1), Scalar(0), Scalar(1)};

SearchConfig exhaustive(std::size_t n, SearchTarget t) {
  SearchConfig cfg;
  cfg.dim = n;
  cfg.coefficients = ternary;
  cfg.target = t;
  return cfg;
}

bool involutive_non_identity(const HomAlgebra& A) {
  return is_involution(A.twist()) && !(A.twist() == LinearMap::identity(A.dim()));
}

// All one-dimensional bimodules over A with entries in {-1,0,1}, in
// lexicographic order of (l, r, φ).
std::vector<Bimodule> line_bimodules(const HomAlgebra& A) {
  const std::size_t n = A.dim(), len = 2 * n + 1;
  std::vector<std::uint8_t> d(len, 0);
  std::vector<Bimodule> out;
  while (true) {
    ActionTensor l(n, 1), r(n, 1);
    for (std::size_t i = 0; i < n; ++i) {
      l[i].at(0, 0) = ternary[d[i]];
      r[i].at(0, 0) = ternary[d[n + i]];
    }
    out.emplace_back(A, 1, l, r, LinearMap(1, 1, {ternary[d[2 * n]]}));
    std::size_t p = len;
    while (p > 0 && d[p - 1] == 2) d[--p] = 0;
    if (p == 0) break;
    ++d[p - 1];
  }
  return out;
}

bool nonzero_actions(const Bimodule& B) {
  for (const auto& m : B.l.mats())
    if (!m.is_zero()) return true;
  for (const auto& m : B.r.mats())
    if (!m.is_zero()) return true;
  return false;
}

// Stage-one hits whose twist is the transpose of A's, i.e. every dual product
// making (A, f) a paired instance.
std::vector<PairedAlgebras> involutive_pairs(const std::vector<SearchHit>& algs) {
  std::map<std::string, std::vector<const HomAlgebra*>> byTwist;
  for (const auto& h : algs) byTwist[io::to_json(h.algebra.twist()).dump()].push_back(&h.algebra);
  std::vector<PairedAlgebras> out;
  for (const auto& h : algs) {
    if (!is_involution(h.algebra.twist())) continue;
    auto it = byTwist.find(io::to_json(dual_map(h.algebra.twist())).dump());
    if (it == byTwist.end()) continue;
    for (const HomAlgebra* d : it->second) out.emplace_back(h.algebra, d->mul());
  }
  return out;
}

std::string jsonl(const std::vector<json>& docs) {
  std::string out;
  for (const auto& d : docs) out += d.dump() + "\n";
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Regenerate the golden corpus from the search engine"};
  std::string dir;
  app.add_option("dir", dir, "output directory")->required();
  CLI11_PARSE(app, argc, argv);

  try {
    auto put = [&](const std::string& name, const std::string& text) {
      io::write_file(dir + "/" + name, text);
      std::cout << "wrote " << name << "\n";
    };
    json golden = json::object();

    auto csa2 = run_search(exhaustive(2, SearchTarget::HomCsa));
    put("hom_csa_dim2.jsonl", hits_to_jsonl(csa2, SearchTarget::HomCsa));
    golden["hom_csa_dim2"] = csa2.size();

    auto lie2 = run_search(exhaustive(2, SearchTarget::HomLie));
    put("hom_lie_dim2.jsonl", hits_to_jsonl(lie2, SearchTarget::HomLie));
    golden["hom_lie_dim2"] = lie2.size();

    std::vector<SearchHit> involutive;
    for (const auto& h : csa2)
      if (involutive_non_identity(h.algebra)) involutive.push_back(h);
    put("involutive_dim2.jsonl", hits_to_jsonl(involutive, SearchTarget::HomCsa));
    golden["involutive_dim2"] = involutive.size();

    auto paired1 = run_search(exhaustive(1, SearchTarget::Paired));
    put("paired_dim1.jsonl", hits_to_jsonl(paired1, SearchTarget::Paired));
    golden["paired_dim1"] = paired1.size();

    auto bialg1 = run_search(exhaustive(1, SearchTarget::Bialgebra));
    put("bialgebra_dim1.jsonl", hits_to_jsonl(bialg1, SearchTarget::Bialgebra));
    golden["bialgebra_dim1"] = bialg1.size();

    // Dimension-two bialgebras with a non-identity involutive twist.
    auto pairs2 = involutive_pairs(csa2);
    golden["paired_involutive_dim2"] = pairs2.size();
    std::vector<json> bialg2;
    std::size_t bialgInvolutive = 0;
    for (const auto& P : pairs2) {
      if (!is_bialgebra(P)) continue;
      ++bialgInvolutive;
      if (involutive_non_identity(P.primal)) bialg2.push_back(io::to_json(P));
    }
    put("bialgebra_dim2.jsonl", jsonl(bialg2));
    golden["bialgebra_involutive_dim2"] = bialgInvolutive;
    golden["bialgebra_dim2_non_identity"] = bialg2.size();

    // Dual-bimodule witnesses: the first hit in corpus order of each kind, trying
    // the regular bimodule and then every line bimodule over each algebra.
    std::optional<Bimodule> passing, failing;
    for (const auto& h : csa2) {
      if (passing && failing) break;
      const bool inv = involutive_non_identity(h.algebra);
      const bool nonInv = !is_involution(h.algebra.twist());
      if (!(inv && !passing) && !(nonInv && !failing)) continue;
      std::vector<Bimodule> candidates{regular_bimodule(h.algebra)};
      for (auto& B : line_bimodules(h.algebra)) candidates.push_back(std::move(B));
      for (const auto& B : candidates) {
        if (!nonzero_actions(B) || !check_bimodule(B).passed()) continue;
        bool dualOk = check_bimodule(dual_bimodule(B)).passed();
        if (inv && !passing && is_involution(B.phi) && dualOk) passing = B;
        if (nonInv && !failing && !dualOk) failing = B;
      }
    }
    if (!passing) throw InputError("no passing dual-bimodule witness found");
    if (!failing) throw InputError("no failing dual-bimodule witness found");
    put("dual_witness_pass.json", io::to_text(io::to_json(*passing)));
    put("dual_witness_fail.json", io::to_text(io::to_json(*failing)));

    put("golden.json", io::to_text(golden));
    std::cout << golden.dump(2) << "\n";
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
