#include <doctest.h>

#include <random>
#include <set>

#include "oracles.hpp"

using namespace steinberg;

TEST_CASE("generate: orders and longest element") {
  CHECK(WeylGroup::generate(build_root_system(Series::A, 1)).order() == 2);
  CHECK(WeylGroup::generate(build_root_system(Series::A, 2)).order() == 6);
  const RootSystem g2 = build_root_system(Series::G, 2);
  const WeylGroup w = WeylGroup::generate(g2);
  CHECK(w.order() == 12);
  CHECK(w.longest().length == 6);
  CHECK(w.longest().length == g2.num_positive_roots());
}

TEST_CASE("generate: order matches the classification for every type") {
  const std::vector<std::pair<Series, int>> types = {{Series::A, 1}, {Series::A, 4}, {Series::A, 6},
                                                     {Series::B, 3}, {Series::C, 4}, {Series::D, 4},
                                                     {Series::D, 5}, {Series::F, 4}, {Series::G, 2},
                                                     {Series::E, 6}};
  for (const auto& [s, n] : types) {
    CAPTURE(series_letter(s));
    CAPTURE(n);
    const RootSystem rs = build_root_system(s, n);
    const WeylGroup w = WeylGroup::generate(rs);
    CHECK(w.order() == oracle::weyl_order(s, n));
    std::size_t top = 0;
    for (const auto& e : w.elements()) top += e.length == rs.num_positive_roots() ? 1 : 0;
    CHECK(top == 1);
    CHECK(w.longest().length == rs.num_positive_roots());
    // w0 = -1 on the weight lattice exactly for types other than A_n (n>1), D_odd, E6.
    bool minus_one = true;
    for (std::size_t i = 0; i < rs.rank(); ++i) {
      Weight omega(rs.rank());
      omega[i] = 1;
      minus_one = minus_one && w.longest().act(omega) == -omega;
    }
    const bool expected = !((s == Series::A && n > 1) || (s == Series::D && n % 2 == 1) || s == Series::E);
    CHECK(minus_one == expected);
  }
}

TEST_CASE("elements: matrices, words and inversion counts agree") {
  for (const auto& [s, n] : std::vector<std::pair<Series, int>>{{Series::A, 3}, {Series::B, 2}, {Series::C, 3}, {Series::G, 2}}) {
    const Group g(s, n);
    const RootSystem& rs = g.roots();
    for (const WeylElement& w : g.weyl().elements()) {
      IntMatrix m = IntMatrix::identity(rs.rank());
      for (std::uint8_t i : w.word) m = m * rs.reflection_matrix(i);
      CHECK(m == w.matrix);
      CHECK(w.word.size() == w.length);
      std::size_t inversions = 0;
      for (const Weight& alpha : rs.positive_roots_fund()) {
        const auto c = oracle::root_coords(rs, w.act(alpha));
        REQUIRE(c.has_value());
        if (std::any_of(c->coords().begin(), c->coords().end(), [](auto x) { return x < 0; }))
          ++inversions;
      }
      CHECK(inversions == w.length);
    }
  }
}

TEST_CASE("act and dot_act in A1") {
  const Group g(Series::A, 1);
  const WeylElement& s = g.weyl().longest();
  for (std::int64_t m = -4; m <= 4; ++m) CHECK(act(s, Weight{m}) == Weight{-m});
  CHECK(dot_act(s, Weight{-1}) == Weight{-1});
  CHECK(dot_act(s, Weight{-2}) == Weight{0});
  CHECK(dot_act(g.weyl().identity(), Weight{7}) == Weight{7});
}

TEST_CASE("dominant_representative") {
  const Group a1(Series::A, 1);
  auto rep = a1.weyl().dominant_representative(Weight{-3});
  CHECK(rep.weight == Weight{3});
  CHECK(a1.weyl()[rep.element].word == std::vector<std::uint8_t>{0});

  const Group a2(Series::A, 2);
  rep = a2.weyl().dominant_representative(Weight{2, 5});
  CHECK(rep.element == 0);
  CHECK(rep.weight == Weight{2, 5});

  rep = a2.weyl().dominant_representative(Weight{-1, 2});
  CHECK(rep.weight == oracle::dominant_by_scan(a2, Weight{-1, 2}));
  CHECK(a2.weyl()[rep.element].act(Weight{-1, 2}) == rep.weight);

  std::mt19937_64 rng(5);
  const Group g2(Series::G, 2);
  for (int t = 0; t < 200; ++t) {
    const Weight lambda = oracle::random_weight(rng, 2, -9, 9);
    const auto r = g2.weyl().dominant_representative(lambda);
    CHECK(r.weight == oracle::dominant_by_scan(g2, lambda));
    CHECK(g2.weyl()[r.element].act(lambda) == r.weight);
    CHECK(reduce_to_dominant(g2.roots(), lambda).dominant == r.weight);
    CHECK(reduce_to_dominant(g2.roots(), lambda).sign == g2.weyl()[r.element].sign());
  }
}

TEST_CASE("property: sign is multiplicative") {
  const Group g(Series::B, 3);
  const auto& el = g.weyl().elements();
  std::mt19937_64 rng(3);
  for (int t = 0; t < 500; ++t) {
    const auto& u = el[rng() % el.size()];
    const auto& v = el[rng() % el.size()];
    const auto& uv = el[g.weyl().find(u.matrix * v.matrix)];
    CHECK(uv.sign() == u.sign() * v.sign());
  }
}

TEST_CASE("property: dot multiplication commutes with the dot action") {
  std::mt19937_64 rng(7);
  for (const auto& [s, n] : std::vector<std::pair<Series, int>>{{Series::A, 2}, {Series::B, 2}, {Series::G, 2}}) {
    const Group g(s, n);
    for (int t = 0; t < 50; ++t) {
      const Weight lambda = oracle::random_weight(rng, g.rank(), -6, 6);
      const std::int64_t k = 1 + static_cast<std::int64_t>(rng() % 5);
      for (const auto& w : g.weyl().elements())
        CHECK(dot_act(w, dot_multiply(k, lambda)) == dot_multiply(k, dot_act(w, lambda)));
    }
  }
}

TEST_CASE("property: dot orbits are regular exactly off the walls") {
  const Group g(Series::A, 2);
  for (std::int64_t a = -4; a <= 4; ++a) {
    for (std::int64_t b = -4; b <= 4; ++b) {
      const Weight lambda{a, b};
      std::set<Weight> orbit;
      for (const auto& w : g.weyl().elements()) orbit.insert(dot_act(w, lambda));
      bool singular = false;
      for (std::size_t k = 0; k < g.roots().num_positive_roots(); ++k)
        singular = singular || g.roots().pairing_root(lambda + g.roots().rho(), k) == 0;
      CHECK(singular == is_dot_singular(g.roots(), lambda));
      CHECK((orbit.size() == g.weyl().order()) == !singular);
    }
  }
}
