#include <doctest.h>

#include <wpg/energy.hpp>
#include <wpg/generators.hpp>
#include <wpg/threshold.hpp>
#include <wpg/verify.hpp>
#include <wpg/weights.hpp>

using namespace wpg;

namespace
{
  bool all(const region_t& r)
  {
    return count(r) == r.size();
  }

  bool none(const region_t& r)
  {
    return count(r) == 0;
  }
}

TEST_CASE("fig4: player 1 wins the bounded game from v0")
{
  const arena a = figure("fig4").arena;
  CHECK(solve_bounded_weight_parity(a).win1[0]);
  const auto pg = polarize(a, 0);
  CHECK_FALSE(solve_energy_parity(pg.product).win0[pg.copy(0, false)]);
}

TEST_CASE("fig4: pumping k times in round k also wins the unbounded game")
{
  const arena a = figure("fig4").arena;
  const auto s = solve_weight_parity(a);
  CHECK(s.win1[0]);
  CHECK(none(s.win0));
}

TEST_CASE("fig4 extended: the polarized game is not complete for player 1")
{
  const arena a = figure("fig4-extended").arena;
  const vertex_t pivot = 4;
  const auto pg = polarize(a, pivot);
  CHECK(solve_energy_parity(pg.product).win0[pg.copy(pivot, false)]);
  CHECK(solve_bounded_weight_parity(a).win1[pivot]);
}

TEST_CASE("fig2 left: weights help player 0, energy does not")
{
  const arena a = figure("fig2-left").arena;
  CHECK(all(solve_weight_parity(a).win0));
  CHECK(none(solve_energy_parity(a).win0));
}

TEST_CASE("fig2 right: energy helps player 0, weights do not")
{
  const arena a = figure("fig2-right").arena;
  CHECK(none(solve_weight_parity(a).win0));
  CHECK(all(solve_energy_parity(a).win0));
}

TEST_CASE("cost family: optimal cost is (n-1)W")
{
  for (auto [n, w] : {std::pair{2u, 1}, {4u, 2}, {5u, 3}, {2u, 0}, {3u, 1}})
    {
      CAPTURE(n);
      CAPTURE(w);
      const arena a = gen_cost_family(n, w).arena;
      CHECK(all(solve_weight_parity(a).win0));
      CHECK(optimal_cost(a, 0) == static_cast<std::uint64_t>((n - 1) * w));
    }
}

TEST_CASE("cost family: threshold decisions around the optimum")
{
  const arena a = gen_cost_family(4, 2).arena;
  CHECK(threshold_decide(a, 0, 6));
  CHECK_FALSE(threshold_decide(a, 0, 5));
}

TEST_CASE("memory family: player 0 wins everywhere with cost at most nW")
{
  const arena a = gen_memory_family(2, 2).arena;
  CHECK(a.size() == 6);
  CHECK(all(solve_weight_parity(a).win0));
  CHECK(optimal_cost(a, 0) <= 4);
}
