#include <doctest.h>

#include <wpg/arena.hpp>
#include <wpg/generators.hpp>

#include <random>

using namespace wpg;

namespace
{
  region_t random_region(std::mt19937_64& rng, std::size_t n)
  {
    std::bernoulli_distribution coin(0.4);
    region_t r(n);
    for (std::size_t i = 0; i < n; ++i)
      r[i] = coin(rng);
    return r;
  }

  bool subset(const region_t& x, const region_t& y)
  {
    for (std::size_t i = 0; i < x.size(); ++i)
      if (x[i] && !y[i])
        return false;
    return true;
  }

  region_t complement(const region_t& r)
  {
    region_t out(r.size());
    for (std::size_t i = 0; i < r.size(); ++i)
      out[i] = !r[i];
    return out;
  }

  region_t of(std::size_t n, std::initializer_list<vertex_t> vs)
  {
    return make_region(n, std::vector<vertex_t>(vs));
  }
}

TEST_CASE("builder rejects dead ends and parallel edges")
{
  {
    arena::builder b;
    b.add_vertex(player::zero, 0);
    b.add_vertex(player::one, 1);
    b.add_edge(0, 1);
    CHECK_THROWS_AS(std::move(b).build(), validation_error);
  }
  {
    arena::builder b;
    b.add_vertex(player::zero, 0);
    b.add_edge(0, 0, 1);
    b.add_edge(0, 0, 2);
    CHECK_THROWS_AS(std::move(b).build(), validation_error);
  }
}

TEST_CASE("ampl")
{
  arena::builder b;
  for (int i = 0; i < 3; ++i)
    b.add_vertex(player::zero, 0);
  b.add_edge(0, 1, 3);
  b.add_edge(1, 2, -5);
  b.add_edge(2, 2, 0);
  const arena a = std::move(b).build();
  const std::vector<vertex_t> one{0};
  const std::vector<vertex_t> path{0, 1, 2};
  CHECK(ampl(a, one) == 0);
  CHECK(ampl(a, path) == 3);
  const std::vector<vertex_t> broken{0, 2};
  CHECK_THROWS_AS(ampl(a, broken), validation_error);

  const arena cycle = gen_cost_family(4, 2).arena;
  const std::vector<vertex_t> round{0, 1, 2, 3};
  CHECK(ampl(cycle, round) == 6);
}

TEST_CASE("cost of response")
{
  const arena cycle = gen_cost_family(4, 2).arena;
  const lasso play{{}, {0, 1, 2, 3}};
  CHECK(cost_of_response(cycle, play, 0) == 6);
  CHECK(cost_of_response(cycle, play, 3) == 0);
  CHECK(limsup_cost(cycle, play) == 6);

  const arena fig4 = figure("fig4").arena;
  const lasso stuck{{0}, {1}};
  CHECK(cost_of_response(fig4, stuck, 0) == infinite_cost);
  CHECK(cost_of_response(fig4, stuck, 1) == 0);
}

TEST_CASE("cost of response at even colors and under positive weights")
{
  for (std::uint64_t seed = 0; seed < 50; ++seed)
    {
      const arena a = gen_random(seed, 5, 4, 2, 0.4).arena;
      // a lasso following first successors
      lasso play;
      std::vector<std::size_t> pos(a.size(), SIZE_MAX);
      vertex_t v = 0;
      std::vector<vertex_t> walk;
      while (pos[v] == SIZE_MAX)
        {
          pos[v] = walk.size();
          walk.push_back(v);
          v = a.successors(v)[0].to;
        }
      play.stem.assign(walk.begin(), walk.begin() + pos[v]);
      play.cycle.assign(walk.begin() + pos[v], walk.end());
      // odd requests can be answered over zero-weight edges at cost 0,
      // so the converse only holds when every weight is positive
      const arena pos1 =
        with_weights(a, std::vector<weight_t>(a.edge_count(), 1));
      for (std::size_t j = 0; j < play.length(); ++j)
        {
          if (a.color(play.at(j)) % 2 == 0)
            CHECK(cost_of_response(a, play, j) == 0);
          else
            CHECK(cost_of_response(pos1, play, j) > 0);
        }
      // with zero weights only 0 and infinity remain
      const arena z = with_weights(a, std::vector<weight_t>(a.edge_count(), 0));
      for (std::size_t j = 0; j < play.length(); ++j)
        {
          const auto c = cost_of_response(z, play, j);
          CHECK((c == 0 || c == infinite_cost));
        }
    }
}

TEST_CASE("ampl grows with the prefix")
{
  std::mt19937_64 rng(7);
  for (std::uint64_t seed = 0; seed < 50; ++seed)
    {
      const arena a = gen_random(seed, 6, 3, 3, 0.3).arena;
      std::vector<vertex_t> prefix{0};
      std::uint64_t last = 0;
      for (int step = 0; step < 20; ++step)
        {
          auto succ = a.successors(prefix.back());
          prefix.push_back(succ[rng() % succ.size()].to);
          const auto now = ampl(a, prefix);
          CHECK(now >= last);
          last = now;
        }
    }
}

TEST_CASE("attractor examples")
{
  const arena fig6 = gen_memory_family(2, 2).arena;
  const auto attr = attractor(fig6, player::one, of(6, {5}));
  CHECK(attr.region == of(6, {4, 5}));
  CHECK(attr.strategy[4] == 5);

  const region_t all(fig6.size(), true);
  CHECK(attractor(fig6, player::zero, all).region == all);

  const arena fig4 = figure("fig4").arena;
  CHECK(is_trap(fig4, player::zero, of(4, {1})));
  CHECK(is_trap(fig4, player::one, region_t(4, true)));
}

TEST_CASE("attractor and trap properties")
{
  std::mt19937_64 rng(11);
  for (std::uint64_t seed = 0; seed < 200; ++seed)
    {
      const arena a = gen_random(seed, 1 + seed % 8, 4, 1, 0.3).arena;
      const region_t x = random_region(rng, a.size());
      region_t y = x;
      for (auto&& m : y)
        m = m || rng() % 3 == 0;
      for (player p : {player::zero, player::one})
        {
          const auto ax = attractor(a, p, x);
          CHECK(subset(x, ax.region));
          CHECK(subset(ax.region, attractor(a, p, y).region));
          CHECK(is_trap(a, p, complement(ax.region)));
          if (is_trap(a, p, x))
            CHECK(is_trap(a, p, attractor(a, opponent(p), x).region));
        }
    }
}

TEST_CASE("restrict")
{
  const arena fig4 = figure("fig4").arena;
  CHECK(restrict(fig4, region_t(4, true)).arena == fig4);
  const auto one = restrict(fig4, of(4, {1}));
  CHECK(one.arena.size() == 1);
  CHECK(one.arena.has_edge(0, 0));
  CHECK(one.to_parent[0] == 1);
  CHECK_THROWS_AS(restrict(fig4, of(4, {0})), dead_end_error);
}

TEST_CASE("normalize colors")
{
  const arena cycle = gen_cost_family(4, 1).arena;
  const auto n = normalize_colors(cycle);
  CHECK(n.shift == 2);
  CHECK(n.arena.color(0) == 3);
  CHECK(n.arena.color(1) == 2);
  CHECK(n.arena.color(3) == 4);
  const arena fig4 = figure("fig4").arena;
  CHECK(normalize_colors(fig4).shift == 0);
  CHECK(normalize_colors(fig4).arena == fig4);
}

TEST_CASE("checked arithmetic")
{
  const weight_t big = std::numeric_limits<weight_t>::max();
  CHECK_THROWS_AS(checked_add(big, 1), overflow_error);
  CHECK_THROWS_AS(checked_mul(big, 2), overflow_error);
  CHECK(checked_mul(-3, 4) == -12);
}
