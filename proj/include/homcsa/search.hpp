#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "homcsa/bialg.hpp"

namespace homcsa {

enum class SearchMode { Exhaustive, Random };

/// hom-csa / hom-lie: the algebra passes the target check.
/// bialgebra: (A, f) passes check_bialgebra.
/// paired: primal and dual algebra are both hom-CSAs (no cocycle condition).
enum class SearchTarget { HomCsa, HomLie, Bialgebra, Paired };

enum class Execution { Serial, Parallel };

struct SearchConfig {
  std::size_t dim = 1;
  std::vector<Scalar> coefficients{Scalar(-1), Scalar(0), Scalar(1)};
  SearchMode mode = SearchMode::Exhaustive;
  std::uint64_t samples = 1000;
  std::uint64_t seed = 0;
  SearchTarget target = SearchTarget::HomCsa;
  double budget = 1e8;
};

/// One passing candidate. `ordinal` orders hits: for exhaustive search it is
/// the lexicographic rank (primal rank, then dual-product rank); for random
/// search the sample number.
struct SearchHit {
  std::uint64_t ordinal = 0;
  std::uint64_t subOrdinal = 0;
  HomAlgebra algebra;
  std::optional<BilinearTensor> dualMul;

  friend bool operator==(const SearchHit&, const SearchHit&) = default;
};

SearchTarget parse_target(const std::string& s);
const char* target_name(SearchTarget t);

/// Number of free coefficients of a primal candidate (n³ + n²).
std::size_t primal_length(std::size_t n);

/// Candidate decoding: digit d selects coefficients[d]. Product entries come
/// first in [i][j][k] order, then the twist in [row][col] order.
HomAlgebra algebra_from_digits(std::size_t n, const std::vector<Scalar>& coefficients,
                               const std::uint8_t* digits);
BilinearTensor tensor_from_digits(std::size_t n, const std::vector<Scalar>& coefficients,
                                  const std::uint8_t* digits);

/// Throws InputError (before doing any work) when the configuration is invalid
/// or an exhaustive run would exceed the budget. Exhaustive paired and
/// bialgebra runs apply the budget a second time to the dual stage, after the
/// hom-CSA stage has fixed how many (primal, dual product) pairs remain.
void validate(const SearchConfig& cfg);

std::vector<SearchHit> run_search(const SearchConfig& cfg, Execution exec = Execution::Parallel);

/// One compact JSON document per line, in hit order.
std::string hits_to_jsonl(const std::vector<SearchHit>& hits, SearchTarget target);

}  // namespace homcsa
