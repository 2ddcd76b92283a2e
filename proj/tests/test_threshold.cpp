#include <doctest.h>

#include <wpg/generators.hpp>
#include <wpg/threshold.hpp>
#include <wpg/verify.hpp>
#include <wpg/weights.hpp>

#include <cmath>
#include <random>

using namespace wpg;

namespace
{
  arena two(color_t c0, color_t c1, weight_t w)
  {
    arena::builder b;
    b.add_vertex(player::zero, c0);
    b.add_vertex(player::zero, c1);
    b.add_edge(0, 1, w);
    b.add_edge(1, 0, 0);
    return std::move(b).build();
  }

  region_t only(std::size_t n, vertex_t v)
  {
    region_t r(n, false);
    r[v] = true;
    return r;
  }

  std::size_t memory_bound(weight_t b, std::size_t d)
  {
    return static_cast<std::size_t>(
      std::pow(static_cast<double>(2 * b * b + 3 * b + 2), static_cast<double>(d)));
  }
}

TEST_CASE("initial states")
{
  const arena a = gen_memory_family(2, 2).arena;
  const auto even = init_state(a, 4);
  CHECK(even.overflow == 0);
  CHECK(even.r.size() == 2);
  CHECK_FALSE(even.r[0]);
  CHECK_FALSE(even.r[1]);
  const auto req = init_state(a, 0);
  CHECK_FALSE(req.r[0]);
  CHECK(req.r[1] == interval{0, 0});
  CHECK(init_state(a, 0) == req);
}

TEST_CASE("update examples")
{
  SUBCASE("nothing open, even target")
  {
    const arena a = two(1, 0, 5);
    threshold_state m{3, {std::nullopt}};
    CHECK(update_state(a, m, 0, 1, 2) == m);
  }
  SUBCASE("overflow resets and counts")
  {
    const arena a = two(1, 0, 3);
    threshold_state m{0, {interval{0, 0}}};
    const auto next = update_state(a, m, 0, 1, 2);
    CHECK(next.overflow == 1);
    CHECK_FALSE(next.r[0]);
  }
  SUBCASE("shift then merge a fresh request")
  {
    const arena a = two(3, 3, -1);
    threshold_state m{0, {interval{-2, 1}}};
    const auto next = update_state(a, m, 0, 1, 5);
    CHECK(next.overflow == 0);
    CHECK(next.r[0] == interval{-3, 0});
  }
  SUBCASE("the counter saturates at n")
  {
    const arena a = two(1, 1, 3);
    threshold_state m{2, {interval{0, 0}}};
    CHECK(update_state(a, m, 0, 1, 1).overflow == 2);
  }
}

TEST_CASE("intervals stay well formed")
{
  std::mt19937_64 rng(3);
  for (std::uint64_t seed = 0; seed < 100; ++seed)
    {
      const arena a = gen_random(seed, 5, 5, 3, 0.4).arena;
      const weight_t b = seed % 5;
      vertex_t v = 0;
      auto m = init_state(a, v);
      for (int step = 0; step < 60; ++step)
        {
          auto succ = a.successors(v);
          const vertex_t to = succ[rng() % succ.size()].to;
          const auto next = update_state(a, m, v, to, b);
          CHECK(next.overflow >= m.overflow);
          CHECK(next.overflow <= a.size());
          for (auto& iv : next.r)
            if (iv)
              {
                CHECK(-b <= iv->l);
                CHECK(iv->l <= iv->h);
                CHECK(iv->h <= b);
              }
          m = next;
          v = to;
        }
    }
}

TEST_CASE("threshold products")
{
  SUBCASE("single even vertex")
  {
    arena::builder b;
    b.add_vertex(player::zero, 0);
    b.add_edge(0, 0, 0);
    const arena a = std::move(b).build();
    threshold_game g(a, 0, region_t(1, true));
    CHECK(g.product().size() == 1);
    CHECK(g.sink() == no_vertex);
    CHECK(optimal_cost(a, 0) == 0);
  }
  SUBCASE("cost family at 6 and 5")
  {
    const arena a = gen_cost_family(4, 2).arena;
    threshold_game win(a, 6, only(4, 0));
    CHECK(win.wins0(win.initial(0)));
    CHECK(win.sink() == no_vertex);
    threshold_game lose(a, 5, only(4, 0));
    CHECK_FALSE(lose.wins0(lose.initial(0)));
    REQUIRE(lose.sink() != no_vertex);
    CHECK(lose.product().color(lose.sink()) == 1);
    CHECK(lose.overflow_of(lose.sink()) == 4);
  }
  SUBCASE("overflow counters never decrease along edges")
  {
    for (std::uint64_t seed = 0; seed < 60; ++seed)
      {
        const arena a = gen_random(seed, 1 + seed % 5, 4, 2, 0.35).arena;
        threshold_game g(a, seed % 4, region_t(a.size(), true));
        const arena& p = g.product();
        for (vertex_t s = 0; s < p.size(); ++s)
          {
            if (s == g.sink())
              {
                CHECK(p.successors(s).size() == 1);
                CHECK(p.has_edge(s, s));
                continue;
              }
            const auto m = *g.state_of(s);
            CHECK(g.find(g.vertex_of(s), m) == s);
            for (auto& e : p.successors(s))
              CHECK(g.overflow_of(e.to) >= g.overflow_of(s));
          }
      }
  }
  SUBCASE("budget")
  {
    const arena a = gen_cost_family(4, 2).arena;
    CHECK_THROWS_AS(threshold_game(a, 5, only(4, 0), 3), capacity_error);
  }
}

TEST_CASE("decisions and optimal costs")
{
  const arena left = figure("fig2-left").arena;
  CHECK(threshold_decide(left, 0, 1));
  CHECK_FALSE(threshold_decide(left, 0, 0));
  CHECK(optimal_cost(left, 0) == 1);

  const arena right = figure("fig2-right").arena;
  CHECK(optimal_cost(right, 0) == infinite_cost);
  for (weight_t b : {0, 3, 10})
    CHECK_FALSE(threshold_decide(right, 0, b));

  const arena cost = gen_cost_family(4, 2).arena;
  CHECK(threshold_decide(cost, 0, 6));
  CHECK_FALSE(threshold_decide(cost, 0, 5));
  CHECK(optimal_cost(cost, 0) == 6);
}

TEST_CASE("losing vertices of the weight parity game never pass a bound")
{
  for (std::uint64_t seed = 0; seed < 80; ++seed)
    {
      const arena a = gen_random(seed, 1 + seed % 5, 4, 2, 0.3).arena;
      const auto wp = solve_weight_parity(a).win0;
      for (weight_t b : {0, 2, 7})
        {
          const auto r = threshold_region(a, b);
          for (vertex_t v = 0; v < a.size(); ++v)
            CHECK((wp[v] || !r[v]));
        }
    }
}

TEST_CASE("binary search matches the linear scan")
{
  int compared = 0;
  for (std::uint64_t seed = 0; seed < 200 && compared < 60; ++seed)
    {
      const arena a = gen_random(seed, 1 + seed % 4, 3, 1, 0.35).arena;
      if (saturation_bound(a) > 200)
        continue;
      for (vertex_t v = 0; v < a.size(); ++v, ++compared)
        CHECK(optimal_cost(a, v) == optimal_cost_linear(a, v));
    }
  CHECK(compared > 0);
}

TEST_CASE("player-0 extraction")
{
  SUBCASE("cost family")
  {
    const arena a = gen_cost_family(4, 2).arena;
    threshold_game g(a, 6, only(4, 0));
    const auto s = extract_player0_strategy(g, 0);
    CHECK(s.size() <= g.product().size());
    CHECK(verify_cost_bound(a, s, 0, 6).ok);
  }
  SUBCASE("memory family needs nW + 1 states")
  {
    const arena a = gen_memory_family(2, 2).arena;
    threshold_game g(a, 4, only(a.size(), 0));
    const auto s = extract_player0_strategy(g, 0);
    CHECK(s.size() >= 5);
    CHECK(s.size() <= memory_bound(4, a.odd_color_count()));
    CHECK(verify_cost_bound(a, s, 0, 4).ok);
  }
  SUBCASE("losing vertices throw")
  {
    const arena a = gen_cost_family(4, 2).arena;
    threshold_game g(a, 5, only(4, 0));
    CHECK_THROWS_AS(extract_player0_strategy(g, 0), not_winning_error);
  }
  SUBCASE("random instances")
  {
    for (std::uint64_t seed = 0; seed < 80; ++seed)
      {
        const arena a = gen_random(seed, 1 + seed % 5, 4, 2, 0.3).arena;
        const weight_t b = seed % 4;
        for (vertex_t v = 0; v < a.size(); ++v)
          {
            threshold_game g(a, b, only(a.size(), v));
            if (!g.wins0(g.initial(v)))
              continue;
            const auto s = extract_player0_strategy(g, v);
            CHECK(s.size() <= memory_bound(b, a.odd_color_count()));
            CHECK(verify_cost_bound(a, s, v, b).ok);
            // certified bounds stay certified above
            CHECK(verify_cost_bound(a, s, v, b + 3).ok);
          }
      }
  }
}

TEST_CASE("player-1 extraction")
{
  SUBCASE("fig2-right pumps past every bound")
  {
    const arena a = figure("fig2-right").arena;
    for (weight_t b : {0, 2, 5})
      {
        threshold_game g(a, b, only(3, 0));
        const auto s = extract_player1_strategy(g, 0);
        CHECK(s.size() <= a.size() * memory_bound(b, a.odd_color_count()));
        const auto sim = simulate_play(a, nullptr, &s, 0, 1000);
        REQUIRE(sim.play);
        CHECK(limsup_cost(a, *sim.play) > static_cast<std::uint64_t>(b));
      }
  }
  SUBCASE("random instances")
  {
    for (std::uint64_t seed = 0; seed < 80; ++seed)
      {
        const arena a = gen_random(seed, 1 + seed % 5, 4, 2, 0.3).arena;
        const weight_t b = seed % 4;
        for (vertex_t v = 0; v < a.size(); ++v)
          {
            threshold_game g(a, b, only(a.size(), v));
            if (g.wins0(g.initial(v)))
              continue;
            const auto s1 = extract_player1_strategy(g, v);
            CHECK(s1.size() <= a.size() * memory_bound(b, a.odd_color_count()));
            // against every positional player-0 strategy the cost exceeds b
            std::vector<vertex_t> choice(a.size(), no_vertex);
            for (vertex_t u = 0; u < a.size(); ++u)
              if (a.owner(u) == player::zero)
                choice[u] = a.successors(u)[0].to;
            const auto s0 =
              finite_state_strategy::positional(a, player::zero, choice);
            const auto sim = simulate_play(a, &s0, &s1, v, 10000);
            REQUIRE(sim.play);
            CHECK((!satisfies_parity(a, *sim.play)
                   || limsup_cost(a, *sim.play) > static_cast<std::uint64_t>(b)));
          }
      }
  }
}
