#include <doctest.h>

#include <random>

#include "oracles.hpp"

using namespace steinberg;

TEST_CASE("linked: examples and brute-force orbit oracle") {
  const Group a1(Series::A, 1);
  CHECK(linked(a1, Weight{3}, Weight{3}, 3));
  CHECK(linked(a1, Weight{0}, Weight{4}, 3));
  CHECK_FALSE(linked(a1, Weight{0}, Weight{1}, 3));

  const auto orbit = oracle::affine_orbit_in_box(a1, Weight{0}, 3, 30);
  CHECK(orbit.contains(Weight{4}));
  CHECK_FALSE(orbit.contains(Weight{1}));
  for (std::int64_t m = -20; m <= 20; ++m) CHECK(linked(a1, Weight{0}, Weight{m}, 3) == orbit.contains(Weight{m}));

  const Group a2(Series::A, 2);
  for (std::int64_t p : {2, 3}) {
    const auto orb = oracle::affine_orbit_in_box(a2, Weight{0, 0}, p, 14);
    for (std::int64_t a = -6; a <= 6; ++a)
      for (std::int64_t b = -6; b <= 6; ++b)
        CHECK(linked(a2, Weight{0, 0}, Weight{a, b}, p) == orb.contains(Weight{a, b}));
  }

  const Group a1_adj(Series::A, 1, LatticeMode::adjoint);
  CHECK_THROWS_AS((void)linked(a1_adj, Weight{1}, Weight{2}, 3), DomainError);
}

TEST_CASE("property: linkage is an equivalence relation") {
  const Group b2(Series::B, 2);
  std::mt19937_64 rng(41);
  std::vector<Weight> sample;
  for (int i = 0; i < 25; ++i) sample.push_back(oracle::random_weight(rng, 2, -6, 6));
  for (const Weight& x : sample) {
    CHECK(linked(b2, x, x, 3));
    for (const Weight& y : sample) {
      CHECK(linked(b2, x, y, 3) == linked(b2, y, x, 3));
      if (!linked(b2, x, y, 3)) continue;
      for (const Weight& z : sample)
        if (linked(b2, y, z, 3)) CHECK(linked(b2, x, z, 3));
    }
  }
}

TEST_CASE("fundamental_alcove_rep") {
  const Group a1(Series::A, 1);
  CHECK(fundamental_alcove_rep(a1, Weight{4}, 3) == Weight{0});
  CHECK(fundamental_alcove_rep(a1, Weight{2}, 3) == Weight{2});
  CHECK(fundamental_alcove_rep(a1, Weight{-1}, 3) == Weight{-1});

  for (const auto& [s, n] : std::vector<std::pair<Series, int>>{{Series::A, 2}, {Series::B, 2}, {Series::G, 2}}) {
    const Group g(s, n);
    for (std::int64_t p : {2, 3, 5}) {
      std::set<Weight> reps;
      for (std::int64_t a = -10; a <= 10; ++a) {
        for (std::int64_t b = -10; b <= 10; ++b) {
          const Weight lambda{a, b};
          const Weight rep = fundamental_alcove_rep(g, lambda, p);
          CHECK(alcove_position(g, rep, p).status != AlcoveStatus::outside);
          CHECK(fundamental_alcove_rep(g, rep, p) == rep);
          CHECK(linked(g, lambda, rep, p));
          reps.insert(rep);
        }
      }
      // Distinct closure points are never linked.
      std::vector<Weight> v(reps.begin(), reps.end());
      for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = i + 1; j < v.size(); ++j) CHECK_FALSE(linked(g, v[i], v[j], p));
    }
  }
}

TEST_CASE("alcove_position") {
  const Group a2(Series::A, 2);
  CHECK(alcove_position(a2, Weight{0, 0}, 5).status == AlcoveStatus::interior);
  CHECK(alcove_position(a2, Weight{3, 0}, 5).status == AlcoveStatus::wall);  // <lambda+rho, theta^vee> = 5
  CHECK(alcove_position(a2, Weight{-1, 0}, 5).status == AlcoveStatus::wall);
  CHECK(alcove_position(a2, Weight{4, 0}, 5).status == AlcoveStatus::outside);
  CHECK(alcove_position(a2, Weight{1, 1}, 5).wall_pairings == std::vector<std::int64_t>{2, 2, 4});
}

TEST_CASE("is_special_point") {
  const Group a1(Series::A, 1);
  CHECK(is_special_point(a1, Weight{2}, 3));
  CHECK(is_special_point(a1, Weight{5}, 3));
  CHECK_FALSE(is_special_point(a1, Weight{0}, 3));

  // p . lambda is special for every lambda: its shifted pairings are p times integers.
  const Group b2(Series::B, 2, LatticeMode::adjoint);
  std::mt19937_64 rng(43);
  for (int t = 0; t < 100; ++t) {
    const Weight lambda = oracle::random_weight(rng, 2, -8, 8);
    if (!b2.in_lattice(lambda)) continue;
    CHECK(is_special_point(b2, dot_multiply(3, lambda), 3));
  }
}

TEST_CASE("property: special point orbits are counted by the fundamental group modulo p") {
  for (std::int64_t p : {3, 5}) {
    const Group a2_adj(Series::A, 2, LatticeMode::adjoint);
    const Group a2(Series::A, 2);
    std::set<Weight> adj_reps, sc_reps;
    for (std::int64_t a = -12; a <= 12; ++a) {
      for (std::int64_t b = -12; b <= 12; ++b) {
        const Weight lambda{a, b};
        if (!is_special_point(a2, lambda, p)) continue;
        sc_reps.insert(fundamental_alcove_rep(a2, lambda, p));
        if (a2_adj.in_lattice(lambda)) adj_reps.insert(fundamental_alcove_rep(a2_adj, lambda, p));
      }
    }
    // (p-1)rho itself is not in the closed alcove; its representative is -rho.
    CHECK(fundamental_alcove_rep(a2_adj, (p - 1) * a2.roots().rho(), p) == -a2.roots().rho());
    CHECK(adj_reps.count(-a2.roots().rho()) == 1);
    // Adjoint: one orbit unless p divides the index of ZR in the weight lattice.
    CHECK(adj_reps.size() == (p == 3 ? 3u : 1u));
    // One orbit per element of the fundamental group Z/3.
    CHECK(sc_reps.size() == 3);
  }
}

TEST_CASE("st_level") {
  const Group a1(Series::A, 1);
  CHECK(st_level(a1, Weight{2}, 3) == 1);
  CHECK(st_level(a1, Weight{8}, 3) == 2);
  CHECK(st_level(a1, Weight{1}, 3) == 0);
  CHECK(st_level(a1, Weight{26}, 3) == 3);
  CHECK_THROWS_AS((void)st_level(a1, Weight{-2}, 3), DomainError);
  const Group a2(Series::A, 2);
  CHECK(st_level(a2, dot_multiply(5, dot_multiply(5, Weight{1, 0})), 5) == 2);
}

TEST_CASE("block_decompose") {
  const Group a1_adj(Series::A, 1, LatticeMode::adjoint);
  const auto blocks = block_decompose(a1_adj, KElement{{Weight{8}, 1}, {Weight{4}, 1}, {Weight{0}, 2}}, 3);
  REQUIRE(blocks.size() == 2);
  CHECK(blocks[0].representative == Weight{0});
  CHECK(blocks[0].component == KElement{{Weight{4}, 1}, {Weight{0}, 2}});
  CHECK(blocks[1].representative == Weight{2});
  CHECK(blocks[1].component == KElement{{Weight{8}, 1}});

  CHECK(block_decompose(a1_adj, KElement{{Weight{6}, -1}}, 3).size() == 1);
  CHECK(block_decompose(a1_adj, KElement{}, 3).empty());
}
