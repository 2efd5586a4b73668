#include "homcsa/search.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <random>
#include <set>

#include "homcsa/errors.hpp"
#include "homcsa/io.hpp"

namespace homcsa {

namespace {

using Pred = std::function<bool(std::uint64_t)>;

std::uint64_t ipow(std::uint64_t base, std::size_t exp) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < exp; ++i) r *= base;
  return r;
}

void decode(std::uint64_t idx, std::uint64_t base, std::size_t len, std::uint8_t* out) {
  for (std::size_t p = len; p-- > 0;) {
    out[p] = std::uint8_t(idx % base);
    idx /= base;
  }
}

// Indices in [0, total) accepted by pred, ascending.
std::vector<std::uint64_t> collect(std::uint64_t total, const Pred& pred, Execution exec) {
  std::vector<std::uint64_t> hits;
  if (exec == Execution::Serial) {
    for (std::uint64_t i = 0; i < total; ++i)
      if (pred(i)) hits.push_back(i);
    return hits;
  }
#pragma omp parallel
  {
    std::vector<std::uint64_t> local;
#pragma omp for schedule(dynamic, 4096) nowait
    for (std::int64_t i = 0; i < std::int64_t(total); ++i)
      if (pred(std::uint64_t(i))) local.push_back(std::uint64_t(i));
#pragma omp critical
    hits.insert(hits.end(), local.begin(), local.end());
  }
  std::sort(hits.begin(), hits.end());
  return hits;
}

bool paired_target(SearchTarget t) { return t == SearchTarget::Bialgebra || t == SearchTarget::Paired; }

bool accept_pair(SearchTarget t, const PairedAlgebras& P) {
  if (t == SearchTarget::Bialgebra) return is_bialgebra(P);
  return is_hom_csa(P.primal) && is_hom_csa(dual_algebra(P));
}

bool accept_algebra(SearchTarget t, const HomAlgebra& A) {
  return t == SearchTarget::HomLie ? is_hom_lie(A) : is_hom_csa(A);
}

std::vector<SearchHit> exhaustive(const SearchConfig& cfg, Execution exec) {
  const std::size_t n = cfg.dim, L = primal_length(n), T = n * n * n;
  const std::uint64_t s = cfg.coefficients.size();
  const auto& coeffs = cfg.coefficients;

  auto primal_at = [&](std::uint64_t idx) {
    std::vector<std::uint8_t> d(L);
    decode(idx, s, L, d.data());
    return algebra_from_digits(n, coeffs, d.data());
  };

  std::vector<SearchHit> out;
  if (!paired_target(cfg.target)) {
    auto idx = collect(ipow(s, L), [&](std::uint64_t i) { return accept_algebra(cfg.target, primal_at(i)); }, exec);
    for (auto i : idx) out.push_back({i, 0, primal_at(i), std::nullopt});
    return out;
  }

  // Two stages: hom-CSA primals first, then dual products over each. (f, αᵀ) must
  // itself be a stage-one hit, so each primal only visits the hits whose twist is
  // its transpose. A primal rank is (product rank) · s^(n²) + (twist rank).
  auto primals = collect(ipow(s, L), [&](std::uint64_t i) { return is_hom_csa(primal_at(i)); }, exec);
  const std::uint64_t twists = ipow(s, n * n);
  std::map<std::uint64_t, std::vector<std::uint64_t>> byTwist;
  for (auto i : primals) byTwist[i % twists].push_back(i / twists);

  auto transpose_rank = [&](std::uint64_t tr) {
    std::vector<std::uint8_t> d(n * n), t(n * n);
    decode(tr, s, n * n, d.data());
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) t[c * n + r] = d[r * n + c];
    std::uint64_t out = 0;
    for (auto x : t) out = out * s + x;
    return out;
  };
  static const std::vector<std::uint64_t> none;
  std::vector<HomAlgebra> algs;
  std::vector<const std::vector<std::uint64_t>*> duals;
  std::vector<std::uint64_t> offsets{0};
  for (auto i : primals) {
    algs.push_back(primal_at(i));
    auto it = byTwist.find(transpose_rank(i % twists));
    duals.push_back(it == byTwist.end() ? &none : &it->second);
    offsets.push_back(offsets.back() + duals.back()->size());
  }
  if (double(offsets.back()) > cfg.budget)
    throw InputError("dual stage has " + std::to_string(offsets.back()) + " candidate pairs, over the budget of " +
                     std::to_string(static_cast<long long>(cfg.budget)));

  auto dual_at = [&](std::uint64_t fi) {
    std::vector<std::uint8_t> d(T);
    decode(fi, s, T, d.data());
    return tensor_from_digits(n, coeffs, d.data());
  };
  auto locate = [&](std::uint64_t k) {
    std::size_t p = std::upper_bound(offsets.begin(), offsets.end(), k) - offsets.begin() - 1;
    return std::make_pair(p, (*duals[p])[k - offsets[p]]);
  };
  auto idx = collect(
      offsets.back(),
      [&](std::uint64_t k) {
        auto [p, f] = locate(k);
        return accept_pair(cfg.target, PairedAlgebras(algs[p], dual_at(f)));
      },
      exec);
  for (auto k : idx) {
    auto [p, f] = locate(k);
    out.push_back({primals[p], f, algs[p], dual_at(f)});
  }
  return out;
}

std::vector<SearchHit> random_search(const SearchConfig& cfg, Execution exec) {
  const std::size_t n = cfg.dim;
  const bool paired = paired_target(cfg.target);
  const std::size_t L = primal_length(n) + (paired ? n * n * n : 0);
  const std::uint64_t s = cfg.coefficients.size();

  // Draws happen serially so the stream depends only on the seed.
  std::mt19937_64 gen(cfg.seed);
  std::vector<std::uint8_t> digits(cfg.samples * L);
  for (auto& d : digits) d = std::uint8_t(gen() % s);

  auto build = [&](std::uint64_t k) {
    const std::uint8_t* d = digits.data() + k * L;
    SearchHit h{k, 0, algebra_from_digits(n, cfg.coefficients, d), std::nullopt};
    if (paired) h.dualMul = tensor_from_digits(n, cfg.coefficients, d + primal_length(n));
    return h;
  };
  auto idx = collect(
      cfg.samples,
      [&](std::uint64_t k) {
        SearchHit h = build(k);
        if (paired) return accept_pair(cfg.target, PairedAlgebras(h.algebra, *h.dualMul));
        return accept_algebra(cfg.target, h.algebra);
      },
      exec);
  std::vector<SearchHit> out;
  out.reserve(idx.size());
  for (auto k : idx) out.push_back(build(k));
  return out;
}

}  // namespace

SearchTarget parse_target(const std::string& s) {
  if (s == "hom-csa") return SearchTarget::HomCsa;
  if (s == "hom-lie") return SearchTarget::HomLie;
  if (s == "bialgebra") return SearchTarget::Bialgebra;
  if (s == "paired") return SearchTarget::Paired;
  throw InputError("unknown search target \"" + s + "\" (expected hom-csa, hom-lie, bialgebra or paired)");
}

const char* target_name(SearchTarget t) {
  switch (t) {
    case SearchTarget::HomCsa: return "hom-csa";
    case SearchTarget::HomLie: return "hom-lie";
    case SearchTarget::Bialgebra: return "bialgebra";
    case SearchTarget::Paired: return "paired";
  }
  return "?";
}

std::size_t primal_length(std::size_t n) { return n * n * n + n * n; }

BilinearTensor tensor_from_digits(std::size_t n, const std::vector<Scalar>& coefficients,
                                  const std::uint8_t* digits) {
  std::vector<Scalar> e(n * n * n);
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = coefficients[digits[i]];
  return BilinearTensor(n, n, n, std::move(e));
}

HomAlgebra algebra_from_digits(std::size_t n, const std::vector<Scalar>& coefficients,
                               const std::uint8_t* digits) {
  const std::size_t T = n * n * n;
  std::vector<Scalar> a(n * n);
  for (std::size_t i = 0; i < a.size(); ++i) a[i] = coefficients[digits[T + i]];
  return HomAlgebra(tensor_from_digits(n, coefficients, digits), LinearMap(n, n, std::move(a)));
}

void validate(const SearchConfig& cfg) {
  const std::size_t s = cfg.coefficients.size();
  if (s == 0) throw InputError("coefficient set is empty");
  if (s > 255) throw InputError("coefficient set has more than 255 values");
  std::set<std::string> seen;
  for (const auto& c : cfg.coefficients)
    if (!seen.insert(c.to_string()).second)
      throw InputError("coefficient set repeats " + c.to_string());
  if (cfg.dim > 4) throw InputError("search dimension above 4 is not supported");
  if (cfg.mode == SearchMode::Exhaustive) {
    double count = std::pow(double(s), double(primal_length(cfg.dim)));
    if (count > cfg.budget || count > 9.0e18)
      throw InputError("exhaustive search over " + std::to_string(s) + "^" +
                       std::to_string(primal_length(cfg.dim)) + " candidates exceeds the budget of " +
                       std::to_string(static_cast<long long>(cfg.budget)));
  }
}

std::vector<SearchHit> run_search(const SearchConfig& cfg, Execution exec) {
  validate(cfg);
  return cfg.mode == SearchMode::Exhaustive ? exhaustive(cfg, exec) : random_search(cfg, exec);
}

std::string hits_to_jsonl(const std::vector<SearchHit>& hits, SearchTarget target) {
  std::string out;
  for (const auto& h : hits) {
    io::json j = paired_target(target) ? io::to_json(PairedAlgebras(h.algebra, *h.dualMul))
                                       : io::to_json(h.algebra);
    out += j.dump();
    out += '\n';
  }
  return out;
}

}  // namespace homcsa
