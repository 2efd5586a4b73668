#pragma once

// Random instance generators and corpus access shared by the unit tests and
// the acceptance driver.

#include <random>
#include <string>
#include <vector>

#include "homcsa/bialg.hpp"
#include "homcsa/io.hpp"

namespace support {

using namespace homcsa;

struct Gen {
  std::mt19937_64 rng;
  std::vector<Scalar> pool;

  explicit Gen(std::uint64_t seed, std::vector<Scalar> values = {Scalar(-1), Scalar(0), Scalar(1)})
      : rng(seed), pool(std::move(values)) {}

  Scalar scalar() { return pool[rng() % pool.size()]; }
  bool coin(double p = 0.5) { return std::uniform_real_distribution<double>(0, 1)(rng) < p; }
  std::size_t below(std::size_t n) { return rng() % n; }

  LinearMap matrix(std::size_t r, std::size_t c) {
    LinearMap m(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) m.at(i, j) = scalar();
    return m;
  }
  Vector vector(std::size_t n) {
    Vector v(n);
    for (auto& x : v) x = scalar();
    return v;
  }
  BilinearTensor tensor(std::size_t n) {
    BilinearTensor t(n, n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) t.at(i, j, k) = scalar();
    return t;
  }
  ActionTensor action(std::size_t algDim, std::size_t modDim) {
    std::vector<LinearMap> mats;
    for (std::size_t i = 0; i < algDim; ++i) mats.push_back(matrix(modDim, modDim));
    return ActionTensor(modDim, std::move(mats));
  }
  HomAlgebra algebra(std::size_t n) { return HomAlgebra(tensor(n), matrix(n, n)); }
  /// A random action tensor where each entry is zero with probability `sparsity`.
  ActionTensor sparse_action(std::size_t algDim, std::size_t modDim, double sparsity) {
    ActionTensor a = action(algDim, modDim);
    for (std::size_t i = 0; i < algDim; ++i)
      for (std::size_t p = 0; p < modDim; ++p)
        for (std::size_t q = 0; q < modDim; ++q)
          if (coin(sparsity)) a[i].at(p, q) = 0;
    return a;
  }
};

inline std::string corpus_path(const std::string& name) { return std::string(HOMCSA_CORPUS_DIR) + "/" + name; }

inline std::vector<io::json> read_jsonl(const std::string& path) {
  std::vector<io::json> out;
  std::string text = io::read_file(path);
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string::npos) end = text.size();
    if (end > pos) out.push_back(io::parse_json(std::string_view(text).substr(pos, end - pos), path));
    pos = end + 1;
  }
  return out;
}

inline std::vector<HomAlgebra> corpus_algebras(const std::string& file) {
  std::vector<HomAlgebra> out;
  for (const auto& j : read_jsonl(corpus_path(file))) out.push_back(io::algebra_from_json(j));
  return out;
}

inline std::vector<PairedAlgebras> corpus_pairs(const std::string& file) {
  std::vector<PairedAlgebras> out;
  for (const auto& j : read_jsonl(corpus_path(file))) out.push_back(io::bialgebra_from_json(j));
  return out;
}

}  // namespace support
