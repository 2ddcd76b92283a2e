#include <wpg/threshold.hpp>
#include <wpg/verify.hpp>

#include <algorithm>
#include <deque>

namespace wpg
{
  verification verify_cost_bound(const arena& a,
                                 const finite_state_strategy& strategy,
                                 vertex_t start, weight_t b,
                                 std::size_t budget)
  {
    if (strategy.owner() != player::zero)
      throw validation_error("cost bounds are verified for player 0");
    if (start >= a.size())
      throw validation_error("start vertex out of range");
    region_t from(a.size(), false);
    from[start] = true;
    auto prod = compose_product(a, strategy, from, budget);
    const vertex_t p0 = prod.initial[start];
    region_t init(prod.product.size(), false);
    init[p0] = true;
    threshold_game g(prod.product, b, init, budget);
    if (g.wins0(g.initial(p0)))
      return {};

    // Player 1 is the only player with choices: follow the winning
    // strategy until a state repeats or the sink is entered.
    const arena& t = g.product();
    std::vector<std::size_t> pos(t.size(), SIZE_MAX);
    std::vector<vertex_t> path;
    vertex_t s = g.initial(p0);
    while (s != g.sink() && pos[s] == SIZE_MAX)
      {
        pos[s] = path.size();
        path.push_back(s);
        s = t.owner(s) == player::one ? g.result().strategy[s]
                                      : t.successors(s)[0].to;
      }
    // x-sequence in the strategy product along the path
    std::vector<vertex_t> xs;
    std::vector<std::size_t> resets{0};
    for (std::size_t i = 0; i < path.size(); ++i)
      {
        xs.push_back(g.vertex_of(path[i]));
        if (i > 0 && g.overflow_of(path[i]) > g.overflow_of(path[i - 1]))
          resets.push_back(i);
      }
    lasso l;
    if (s != g.sink())
      {
        // a cycle of the threshold game with odd maximal color
        for (std::size_t i = 0; i < pos[s]; ++i)
          l.stem.push_back(prod.states[xs[i]].first);
        for (std::size_t i = pos[s]; i < xs.size(); ++i)
          l.cycle.push_back(prod.states[xs[i]].first);
      }
    else
      {
        // the last move overflowed into the sink; recover its target
        const vertex_t last = path.back();
        const auto m = *g.state_of(last);
        const arena& pa = prod.product;
        for (auto& e : pa.successors(xs.back()))
          if (update_state(pa, m, xs.back(), e.to, b).overflow > m.overflow)
            {
              xs.push_back(e.to);
              resets.push_back(xs.size() - 1);
              break;
            }
        // at a reset the request memory is determined by the state, so
        // two resets at the same state bound a cycle that overflows on
        // every repetition
        for (std::size_t j = 1; j < resets.size() && l.cycle.empty(); ++j)
          for (std::size_t i = 0; i < j; ++i)
            if (xs[resets[i]] == xs[resets[j]])
              {
                for (std::size_t k = 0; k < resets[i]; ++k)
                  l.stem.push_back(prod.states[xs[k]].first);
                for (std::size_t k = resets[i]; k < resets[j]; ++k)
                  l.cycle.push_back(prod.states[xs[k]].first);
                break;
              }
      }
    verification r;
    r.ok = false;
    if (!l.cycle.empty())
      r.witness = std::move(l);
    return r;
  }
}
