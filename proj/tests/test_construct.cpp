#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <map>

#include "helpers.hpp"
#include "racov/construct.hpp"
#include "racov/errors.hpp"
#include "racov/exact.hpp"

using namespace racov;
using construct::RecoveryCertificate;

namespace {

// Mixed-sign condition by brute force over sign vectors in {-1, 0, +1}^n.
bool ternary_check(const std::vector<std::uint64_t>& e, std::uint64_t m, std::size_t k) {
  const std::size_t n = e.size();
  std::vector<int> sign(n, -1);
  while (true) {
    std::size_t used = 0;
    bool plus = false, minus = false;
    long long sum = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (sign[i]) ++used;
      plus = plus || sign[i] > 0;
      minus = minus || sign[i] < 0;
      sum += sign[i] * static_cast<long long>(e[i]);
    }
    const long long mm = static_cast<long long>(m);
    if (used >= 2 && used <= k && plus && minus && ((sum % mm) + mm) % mm == 0) return false;
    std::size_t i = 0;
    while (i < n && sign[i] == 1) sign[i++] = -1;
    if (i == n) return true;
    ++sign[i];
  }
}

}  // namespace

TEST_CASE("sum-free middle third") {
  auto s7 = construct::sum_free_set(7, 2);
  CHECK(s7.elements == std::vector<std::uint64_t>{3, 4});
  CHECK(construct::is_sum_free(s7));
  auto s15 = construct::sum_free_set(15, 4);
  CHECK(s15.elements == std::vector<std::uint64_t>{6, 7, 8, 9});
  CHECK(construct::is_sum_free(s15));
  CHECK(construct::sum_free_set(7, 0).elements.empty());
  for (std::uint64_t n = 3; n < 200; n += 2) {
    auto s = construct::sum_free_set(n, (n - 1) / 3);
    CHECK(construct::is_sum_free(s));
    CHECK(construct::satisfies_mixed_sign_condition(s.elements, n, 3));
  }
  CHECK_THROWS_AS(construct::sum_free_set(7, 3), std::invalid_argument);
  CHECK_THROWS_AS(construct::sum_free_set(8, 1), std::invalid_argument);
  CHECK_FALSE(construct::is_sum_free({7, {1, 2, 3}, 3}));
}

TEST_CASE("mixed-sign checker against ternary enumeration") {
  for (std::uint64_t m : {7u, 15u, 31u, 63u}) {
    for (std::size_t k = 2; k <= 5; ++k) {
      for (std::uint64_t base = 0; base < 6; ++base) {
        std::vector<std::uint64_t> e;
        for (std::uint64_t t = 0; t < 6; ++t) e.push_back((base + t * t * 3 + t) % m);
        std::sort(e.begin(), e.end());
        e.erase(std::unique(e.begin(), e.end()), e.end());
        CHECK(construct::satisfies_mixed_sign_condition(e, m, k) == ternary_check(e, m, k));
      }
    }
  }
  CHECK_FALSE(construct::satisfies_mixed_sign_condition({1, 2, 3}, 7, 3));
  CHECK(construct::satisfies_mixed_sign_condition({1, 2, 3}, 7, 2));
  CHECK_FALSE(construct::satisfies_mixed_sign_condition({1, 1}, 7, 2));
}

TEST_CASE("greedy B_h search") {
  auto one = construct::bk_set_search(4, 16, 1);
  CHECK(one.elements == std::vector<std::uint64_t>{0});
  auto k3 = construct::bk_set_search(3, 64, 8);
  CHECK(k3.elements.front() == 0);
  CHECK(construct::satisfies_mixed_sign_condition(k3.elements, 63, 3));
  auto k4 = construct::bk_set_search(4, 256, 6);
  CHECK(k4.elements.size() == 6);
  CHECK(construct::satisfies_mixed_sign_condition(k4.elements, 255, 4));
  CHECK(ternary_check(k4.elements, 255, 4));
  for (std::size_t k = 2; k <= 6; ++k)
    for (std::uint64_t q : {32u, 128u, 1024u}) {
      try {
        auto s = construct::bk_set_search(k, q, 7);
        CHECK(construct::satisfies_mixed_sign_condition(s.elements, q - 1, k));
        CHECK(std::is_sorted(s.elements.begin(), s.elements.end()));
      } catch (const SearchError&) {
        CHECK(q <= 128);
      }
    }
  CHECK_THROWS_AS(construct::bk_set_search(5, 8, 7), SearchError);
  CHECK_THROWS_AS(construct::bk_set_search(1, 8, 2), std::invalid_argument);
}

TEST_CASE("find_field picks the smallest working power of two") {
  auto c = construct::find_field(4, 6);
  CHECK(c.field.p() == 2);
  CHECK(c.exponents.elements.size() == 6);
  const auto q = c.field.q();
  CHECK_THROWS_AS(construct::bk_set_search(4, q / 2, 6), SearchError);
}

TEST_CASE("G_3 layout and verification") {
  auto f = gf::Field::build(2, 6);
  auto s = construct::sum_free_set(63, 6);
  auto id = construct::build_g3(0, f, s);
  CHECK(id.n() == 3);
  CHECK(exact::bruteforce_expectations(id) == std::vector<Rational>{3, 3, 3});
  auto g1 = construct::build_g3(1, f, s);
  CHECK(g1.n() == 6);
  CHECK(construct::verify_recovery_complete(g1).complete);
  auto g2 = construct::build_g3(2, f, s);
  CHECK(g2.n() == 9);
  CHECK(construct::verify_recovery_complete(g2).complete);
  const auto e = exact::bruteforce_expectations(g2);
  CHECK(*std::max_element(e.begin(), e.end()) < 3);
  // Column order: I_3, then E_{1,2}, E_{1,3}, E_{2,3}.
  const auto cols = g2.expanded();
  CHECK(cols[3] == linalg::Vector{1, f.beta_pow(static_cast<std::int64_t>(s.elements[0])), 0});
  CHECK(cols[5] == linalg::Vector{1, 0, f.beta_pow(static_cast<std::int64_t>(s.elements[2]))});
  CHECK(cols[8] == linalg::Vector{0, 1, f.beta_pow(static_cast<std::int64_t>(s.elements[5]))});
  CHECK_THROWS_AS(construct::build_g3(3, f, s), std::invalid_argument);
  auto f5 = gf::Field::build(5, 1);
  CHECK_THROWS_AS(construct::build_g3(1, f5, construct::ExponentSet{4, {0, 1, 2}, 3}), std::invalid_argument);
}

TEST_CASE("planted violations are caught with certificates") {
  auto f = gf::Field::build(2, 4);
  // Two identical columns in E_{1,2}.
  auto dup = construct::build_from_blocks(f, 3, 1, {{0, 1, {2, 2}}, {0, 2, {5}}, {1, 2, {7}}});
  auto c1 = construct::verify_recovery_complete(dup);
  CHECK_FALSE(c1.complete);
  CHECK(c1.failure == RecoveryCertificate::Failure::edge_pair);
  CHECK(c1.columns == std::vector<std::size_t>{3, 4});
  const auto cols = dup.expanded();
  CHECK(cols[3] == cols[4]);

  // Exponents {1, 2, 3} with 1 + 2 = 3 placed so the 3-cycle determinant
  // beta^{e13} + beta^{e12 + e23} vanishes.
  auto bad = construct::build_from_blocks(f, 3, 1, {{0, 1, {1}}, {0, 2, {3}}, {1, 2, {2}}});
  auto c2 = construct::verify_recovery_complete(bad);
  CHECK_FALSE(c2.complete);
  CHECK(c2.failure == RecoveryCertificate::Failure::cycle);
  CHECK(c2.cycle == std::vector<std::size_t>{0, 1, 2});
  auto witness = c2.columns;
  std::sort(witness.begin(), witness.end());
  CHECK(witness == std::vector<std::size_t>{3, 4, 5});
  std::vector<linalg::Vector> chosen;
  for (auto idx : c2.columns) chosen.push_back(bad.expanded()[idx]);
  CHECK(testing::naive_rank(f, chosen) < 3);
  // The same three exponents in sorted order happen to be independent.
  CHECK(construct::verify_recovery_complete(construct::build_g3(1, f, {15, {1, 2, 3}, 3})).complete);
}

TEST_CASE("verifier errors and guards") {
  auto f = gf::Field::build(2, 2);
  auto heavy = testing::from_rows(f, {{1, 0, 0, 1}, {0, 1, 0, 1}, {0, 0, 1, 1}});
  CHECK_THROWS_AS(construct::verify_recovery_complete(heavy), std::invalid_argument);
  auto id9 = testing::identity(f, 9);
  CHECK_THROWS_AS(construct::verify_recovery_complete(id9), GuardError);
}

TEST_CASE("cycle verifier agrees with direct rank checks") {
  // Random exponents in a small field, compared with an independent scan of
  // all triangles and 4-cycles of K_4.
  auto f = gf::Field::build(2, 4);
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    std::vector<std::uint64_t> e;
    for (int t = 0; t < 6; ++t) e.push_back((seed * 7 + static_cast<std::uint64_t>(t) * (seed % 5 + 3)) % 15);
    bool distinct = true;
    for (std::size_t a = 0; a < e.size(); ++a)
      for (std::size_t b = a + 1; b < e.size(); ++b) distinct = distinct && e[a] != e[b];
    auto g = construct::build_from_blocks(f, 4, 1, construct::lexicographic_blocks(4, 1, e));
    const auto cols = g.expanded();
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> edge;
    for (std::size_t idx = 4; idx < cols.size(); ++idx) {
      std::vector<std::size_t> sup;
      for (std::size_t c = 0; c < 4; ++c)
        if (cols[idx][c]) sup.push_back(c);
      edge[{sup[0], sup[1]}] = idx;
    }
    auto col = [&](std::size_t a, std::size_t b) { return cols[edge.at({std::min(a, b), std::max(a, b)})]; };
    bool ok = true;
    std::vector<std::vector<std::size_t>> cycles = {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3},
                                                    {0, 1, 2, 3}, {0, 1, 3, 2}, {0, 2, 1, 3}};
    for (const auto& cyc : cycles) {
      std::vector<linalg::Vector> chosen;
      for (std::size_t t = 0; t < cyc.size(); ++t) chosen.push_back(col(cyc[t], cyc[(t + 1) % cyc.size()]));
      ok = ok && testing::naive_rank(f, chosen) == cyc.size();
    }
    if (!distinct) continue;  // merged duplicates change the column list
    CHECK(construct::verify_recovery_complete(g).complete == ok);
  }
}

TEST_CASE("G_k(x, y) passes verification and has equal strands") {
  for (std::size_t k = 2; k <= 5; ++k)
    for (std::uint64_t x = 1; x <= 3; ++x) {
      auto params = construct::default_params(k, x, 1);
      CHECK(construct::satisfies_mixed_sign_condition(params.exponents.elements, params.exponents.modulus, k));
      for (std::uint64_t y = 1; y <= 3; ++y) {
        params.y = y;
        auto g = construct::build_gk(params);
        CAPTURE(k);
        CAPTURE(x);
        CAPTURE(y);
        CHECK(g.n() == k * y + k * (k - 1) / 2 * x);
        CHECK(construct::verify_recovery_complete(g).complete);
        if (g.n() <= 18) {
          const auto e = exact::bruteforce_expectations(g);
          for (const auto& v : e) CHECK(v == e.front());
        }
      }
    }
}

TEST_CASE("k = 2 construction is the balanced two-strand family") {
  auto params = construct::default_params(2, 3, 2);
  auto g = construct::build_gk(params);
  auto pr = codes::profile_k2(g);
  CHECK(pr.x1 == 2);
  CHECK(pr.x2 == 2);
  CHECK(pr.x == 7);
  CHECK(std::count(pr.a.begin(), pr.a.end(), 1u) == 3);
}

TEST_CASE("construction parameter checks") {
  auto params = construct::default_params(3, 2, 1);
  params.exponents.elements.pop_back();
  CHECK_THROWS_AS(construct::build_gk(params), std::invalid_argument);
  auto odd = construct::params_for_field(2, 1, 1, 5);
  CHECK(construct::build_gk(odd).n() == 3);
  CHECK_THROWS_AS(construct::params_for_field(3, 1, 1, 9), std::invalid_argument);
}
