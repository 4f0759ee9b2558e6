#pragma once
// Recovery-complete matrices built from weight-1 and weight-2 columns.
// A weight-2 column on support {i, j}, i < j, is e_i + beta^t e_j.
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "racov/codes.hpp"
#include "racov/gf.hpp"

namespace racov::construct {

struct ExponentSet {
  std::uint64_t modulus = 1;           // q - 1
  std::vector<std::uint64_t> elements;  // strictly increasing, each < modulus
  std::size_t strength = 0;             // k such that the mixed-sign condition holds for up to k elements
};

// Middle third {t : n/3 < t <= 2n/3} of Z_n, truncated to `size`.
// Throws std::invalid_argument for even n or size > (n - 1) / 3.
ExponentSet sum_free_set(std::uint64_t n, std::size_t size);

// No r + l = s (r, l, s in the set, r == l allowed), checked over all triples.
bool is_sum_free(const ExponentSet& set);

// Independent exhaustive check: for every 2 <= k' <= k distinct elements and
// every sign pattern with both signs present, the signed sum is nonzero mod modulus.
bool satisfies_mixed_sign_condition(const std::vector<std::uint64_t>& elements, std::uint64_t modulus,
                                    std::size_t k);

// Greedy scan of 0, 1, ..., q - 2 keeping the mixed-sign condition for up to
// k elements. Throws SearchError if the scan ends before `size` elements.
ExponentSet bk_set_search(std::size_t k, std::uint64_t q, std::size_t size);

// Smallest q = 2^m (2 <= q <= 2^24) on which bk_set_search(k, q, size)
// succeeds, returned with the set found. Throws SearchError if none does.
struct FieldChoice {
  gf::Field field;
  ExponentSet exponents;
};
FieldChoice find_field(std::size_t k, std::size_t size);

// One E_{i,j} block: 0-based i < j, one column per exponent.
struct EdgeBlock {
  std::size_t i = 0;
  std::size_t j = 0;
  std::vector<std::uint64_t> exponents;
};

// [I_k repeated y times | blocks in the given order]. Duplicate exponents in
// a block give a collinear pair (a column of multiplicity 2).
codes::GeneratorMatrix build_from_blocks(const gf::Field& field, std::size_t k, std::uint64_t y,
                                         const std::vector<EdgeBlock>& blocks);

// Blocks E_{1,2}, E_{1,3}, ..., E_{k-1,k} with x exponents each, taken from
// `exponents` in order.
std::vector<EdgeBlock> lexicographic_blocks(std::size_t k, std::uint64_t x, const std::vector<std::uint64_t>& exponents);

struct ConstructionParams {
  std::size_t k = 0;
  std::uint64_t x = 0;
  std::uint64_t y = 1;
  gf::Field field;
  ExponentSet exponents;
};

// Chooses the field and exponents with find_field(k, x C(k, 2)).
ConstructionParams default_params(std::size_t k, std::uint64_t x, std::uint64_t y);
// Same with a fixed field order q.
ConstructionParams params_for_field(std::size_t k, std::uint64_t x, std::uint64_t y, std::uint64_t q);

// [I_3 | E_{1,2} | E_{1,3} | E_{2,3}], n = 3y + 3x.
codes::GeneratorMatrix build_g3(std::uint64_t x, const gf::Field& field, const ExponentSet& exps, std::uint64_t y = 1);
// G_k(x, y), n = ky + C(k, 2) x.
codes::GeneratorMatrix build_gk(const ConstructionParams& params);

struct RecoveryCertificate {
  enum class Failure { none, edge_pair, cycle };
  bool complete = true;
  Failure failure = Failure::none;
  std::vector<std::size_t> columns;  // 0-based indices into G.expanded()
  std::vector<std::size_t> cycle;    // 0-based vertices for a cycle failure
};

inline constexpr std::size_t kMaxVerifyDim = 8;
inline constexpr std::uint64_t kMaxVerifyWork = 50'000'000;  // column choices over all cycles

// Checks both recovery-completeness conditions. Throws std::invalid_argument
// for a column of weight > 2 and GuardError for k > 8 or too many choices.
RecoveryCertificate verify_recovery_complete(const codes::GeneratorMatrix& g);

}  // namespace racov::construct
