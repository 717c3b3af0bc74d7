#include <doctest.h>

#include <random>

#include "cubeslice/constructions.hpp"
#include "cubeslice/pattern.hpp"
#include "oracles.hpp"

using namespace cubeslice;

namespace {

// Independent realizability re-check: recount the witness trace per point.
std::uint64_t trace_mask_naive(const RatMatrix& l) {
  std::vector<std::uint64_t> pts;
  oracles::naive_count(AffineMap::linear(l), &pts);
  std::uint64_t mask = 0;
  for (auto p : pts) mask |= std::uint64_t{1} << p;
  return mask;
}

}  // namespace

TEST_CASE("pattern basics") {
  Pattern p{3, 0x77};
  CHECK(p.size() == 6);
  CHECK(p.has_origin());
  CHECK(p.contains(0));
  CHECK(!p.contains(3));
  CHECK(Pattern::from_hex(3, p.to_hex()) == p);
  CHECK_THROWS_AS(Pattern::from_hex(2, "xyz"), ConstraintError);
  CHECK_THROWS_AS(Pattern::from_hex(2, "1f"), ConstraintError);  // bit past 2^k
  CHECK_THROWS_AS(Pattern::from_hex(7, "1"), CapacityError);
}

TEST_CASE("trace_pattern matches the naive trace") {
  std::mt19937_64 rng(401);
  for (int trial = 0; trial < 100; ++trial) {
    int k = 1 + static_cast<int>(rng() % 5);
    int m = 1 + static_cast<int>(rng() % 3);
    RatMatrix l = oracles::random_matrix(rng, m, k);
    Pattern t = trace_pattern(l);
    CHECK(t.k == k);
    CHECK(t.mask == trace_mask_naive(l));
    CHECK(t.has_origin());
  }
}

TEST_CASE("canonical_pattern fixed example") {
  // {0, e2} at k = 2 canonicalizes to {0, e1}
  Pattern p{2, 0b0101};
  CHECK(canonical_pattern(p).mask == 0b0011);
}

TEST_CASE("canonical_pattern is a permutation invariant and idempotent") {
  std::mt19937_64 rng(402);
  for (int trial = 0; trial < 200; ++trial) {
    int k = 1 + static_cast<int>(rng() % 4);
    std::uint64_t all = (std::uint64_t{1} << (std::uint64_t{1} << k)) - 1;
    Pattern p{k, (rng() & all) | 1};
    Pattern canon = canonical_pattern(p);
    CHECK(canon.mask <= p.mask);
    CHECK(canonical_pattern(canon) == canon);
    CHECK(canon.size() == p.size());
    for (const auto& perm : all_permutations(k)) {
      Pattern q{k, apply_permutation(p.mask, k, perm)};
      CHECK(canonical_pattern(q) == canon);
    }
  }
}

TEST_CASE("apply_permutation is a group action") {
  std::mt19937_64 rng(403);
  int k = 3;
  auto perms = all_permutations(k);
  REQUIRE(perms.size() == 6);
  for (int trial = 0; trial < 50; ++trial) {
    std::uint64_t mask = rng() & 0xFF;
    const auto& id = perms[0];
    CHECK(apply_permutation(mask, k, id) == mask);
    const auto& a = perms[rng() % 6];
    std::uint64_t once = apply_permutation(mask, k, a);
    CHECK(__builtin_popcountll(once) == __builtin_popcountll(mask));
  }
}

TEST_CASE("realizable: full cube minus two adjacent points at k = 3") {
  // H^3 without (1,1,0) and (1,1,1): |T| = 6, realizable
  Pattern p{3, 0xFFu & ~(1u << 3) & ~(1u << 7)};
  REQUIRE(p.size() == 6);
  auto res = realizable(p);
  REQUIRE(res.status == RealizabilityResult::Status::Realizable);
  REQUIRE(res.witness.has_value());
  CHECK(trace_mask_naive(*res.witness) == p.mask);
}

TEST_CASE("no 7-point pattern is realizable at k = 3") {
  for (int missing = 1; missing < 8; ++missing) {
    Pattern p{3, 0xFFu & ~(std::uint64_t{1} << missing)};
    auto res = realizable(p);
    CAPTURE(missing);
    CHECK(res.status == RealizabilityResult::Status::NotRealizable);
    REQUIRE(res.certificate.has_value());
    CHECK(!p.contains(res.certificate->forced_point));
    CHECK(res.certificate->basis_rank <= 3);
    CHECK(res.certificate->basis_rank >= 1);
  }
}

TEST_CASE("realizable witnesses re-verify on random patterns") {
  std::mt19937_64 rng(404);
  int realized = 0, excluded = 0;
  for (int trial = 0; trial < 300; ++trial) {
    int k = 1 + static_cast<int>(rng() % 4);
    std::uint64_t all = (std::uint64_t{1} << (std::uint64_t{1} << k)) - 1;
    Pattern p{k, (rng() & all) | 1};
    auto res = realizable(p);
    if (res.status == RealizabilityResult::Status::Realizable) {
      REQUIRE(res.witness.has_value());
      CHECK(trace_mask_naive(*res.witness) == p.mask);
      ++realized;
    } else {
      REQUIRE(res.status == RealizabilityResult::Status::NotRealizable);
      REQUIRE(res.certificate.has_value());
      CHECK(!p.contains(res.certificate->forced_point));
      ++excluded;
    }
  }
  CHECK(realized > 20);
  CHECK(excluded > 20);
}

TEST_CASE("realizability is permutation invariant") {
  std::mt19937_64 rng(405);
  for (int trial = 0; trial < 60; ++trial) {
    int k = 2 + static_cast<int>(rng() % 2);
    std::uint64_t all = (std::uint64_t{1} << (std::uint64_t{1} << k)) - 1;
    Pattern p{k, (rng() & all) | 1};
    auto base = realizable(p).status;
    for (const auto& perm : all_permutations(k)) {
      Pattern q{k, apply_permutation(p.mask, k, perm)};
      CHECK(realizable(q).status == base);
    }
  }
}

TEST_CASE("traces of actual maps are always realizable") {
  std::mt19937_64 rng(406);
  for (int trial = 0; trial < 80; ++trial) {
    int k = 1 + static_cast<int>(rng() % 4);
    int m = 1 + static_cast<int>(rng() % 3);
    Pattern t = trace_pattern(oracles::random_matrix(rng, m, k));
    auto res = realizable(t);
    CHECK(res.status == RealizabilityResult::Status::Realizable);
  }
}

TEST_CASE("origin and capacity requirements") {
  CHECK_THROWS_AS(realizable(Pattern{2, 0b0110}), ConstraintError);
  CHECK_THROWS_AS(realizable(Pattern{7, 1}), CapacityError);
  CHECK_THROWS_AS(trace_pattern(RatMatrix(1, 7)), CapacityError);
}
