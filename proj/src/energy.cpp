#include <wpg/energy.hpp>
#include <wpg/verify.hpp>

#include <algorithm>
#include <deque>
#include <limits>

namespace wpg
{
  credit_game::credit_game(const arena& base, weight_t cap,
                           std::size_t budget, bool escape)
    : cap_(cap), base_size_(base.size()), escape_(escape)
  {
    if (cap < 0)
      throw validation_error("energy cap must be nonnegative");
    const std::size_t levels = static_cast<std::size_t>(cap) + 1 + (escape ? 1 : 0);
    if (levels > budget || base.size() > (budget - 1) / levels)
      throw capacity_error("credit game with " + std::to_string(base.size())
                           + " vertices and cap " + std::to_string(cap)
                           + " exceeds the state budget of "
                           + std::to_string(budget));
    const std::size_t total = base.size() * levels + 1;
    arena::builder b(total);
    for (vertex_t v = 0; v < base.size(); ++v)
      for (weight_t e = 0; e <= cap; ++e)
        b.add_vertex(base.owner(v), base.color(v));
    if (escape)
      for (vertex_t v = 0; v < base.size(); ++v)
        b.add_vertex(base.owner(v), base.color(v));
    const vertex_t sink = b.add_vertex(player::one, 1);
    for (vertex_t v = 0; v < base.size(); ++v)
      for (weight_t e = 0; e <= cap; ++e)
        {
          const vertex_t from = state(v, e);
          bool to_sink = false;
          for (auto& edge : base.successors(v))
            {
              const weight_t next = checked_add(e, edge.weight);
              if (next < 0)
                to_sink = true;
              else if (next > cap && escape)
                b.add_edge(from, escaped(edge.to));
              else
                b.add_edge(from, state(edge.to, std::min(next, cap)));
            }
          if (to_sink)
            b.add_edge(from, sink);
        }
    if (escape)
      for (vertex_t v = 0; v < base.size(); ++v)
        for (auto& edge : base.successors(v))
          b.add_edge(escaped(v), escaped(edge.to));
    b.add_edge(sink, sink);
    product_ = std::move(b).build();
  }

  weight_t sufficient_credit(const arena& a)
  {
    return checked_mul(static_cast<weight_t>(a.size()) - 1,
                       a.max_abs_weight());
  }

  weight_t energy_cap(const arena& a)
  {
    const weight_t n = static_cast<weight_t>(a.size());
    const weight_t d = static_cast<weight_t>(a.distinct_color_count());
    const weight_t w = a.max_abs_weight();
    const weight_t s = checked_mul(checked_mul(n, d), w);
    const weight_t cap = checked_add(checked_mul(checked_mul(n, s) - 1, w), 1);
    return std::max(sufficient_credit(a), cap);
  }

  credit_solution solve_credit_game(const arena& a, weight_t cap,
                                    std::size_t budget, bool escape)
  {
    credit_game g(a, cap, budget, escape);
    auto r = zielonka(g.product());
    return {std::move(g), std::move(r)};
  }

  namespace
  {
    // Player-0 strategy whose memory is the capped energy level, defined
    // on the states reachable from (v, c0) for won vertices v.
    finite_state_strategy credit_strategy(const arena& a,
                                          const credit_solution& cs,
                                          weight_t c0)
    {
      const auto& g = cs.game;
      finite_state_strategy s(player::zero,
                              static_cast<std::size_t>(g.cap()) + 1,
                              a.size());
      std::vector<bool> seen(g.product().size(), false);
      std::deque<vertex_t> queue;
      for (vertex_t v = 0; v < a.size(); ++v)
        {
          s.set_init(v, static_cast<memory_t>(c0));
          const vertex_t st = g.state(v, c0);
          if (cs.result.win0[st] && !seen[st])
            {
              seen[st] = true;
              queue.push_back(st);
            }
        }
      while (!queue.empty())
        {
          const vertex_t st = queue.front();
          queue.pop_front();
          const vertex_t v = g.vertex_of(st);
          const weight_t e = g.energy_of(st);
          auto visit = [&](vertex_t succ_state) {
            if (!seen[succ_state])
              {
                seen[succ_state] = true;
                queue.push_back(succ_state);
              }
          };
          for (std::size_t idx = a.first_edge(v); idx < a.first_edge(v + 1);
               ++idx)
            {
              const auto& edge = a.edge(idx);
              const weight_t next = std::min(e + edge.weight, g.cap());
              s.set_update(static_cast<memory_t>(e), idx,
                           static_cast<memory_t>(std::max<weight_t>(next, 0)));
            }
          if (a.owner(v) == player::zero)
            {
              const vertex_t succ_state = cs.result.strategy[st];
              const vertex_t succ = g.vertex_of(succ_state);
              s.set_move(v, static_cast<memory_t>(e), succ);
              visit(succ_state);
            }
          else
            for (auto& edge : g.product().successors(st))
              visit(edge.to);
        }
      return s;
    }
  }

  region_t energy_parity_win0_against(const arena& a,
                                      std::span<const vertex_t> choice1)
  {
    const std::size_t n = a.size();
    auto allowed = [&](vertex_t u, vertex_t to) {
      return a.owner(u) == player::zero || choice1[u] == no_vertex
             || choice1[u] == to;
    };
    // reach[i] = vertices reachable from i inside colors <= c
    auto reach = [&](vertex_t x, color_t c, bool backward) {
      region_t r(n, false);
      std::vector<vertex_t> stack{x};
      r[x] = true;
      while (!stack.empty())
        {
          const vertex_t u = stack.back();
          stack.pop_back();
          auto step = [&](vertex_t from, vertex_t to) {
            const vertex_t next = backward ? from : to;
            if (!r[next] && a.color(next) <= c && allowed(from, to))
              {
                r[next] = true;
                stack.push_back(next);
              }
          };
          if (backward)
            for (vertex_t p : a.predecessors(u))
              step(p, u);
          else
            for (auto& e : a.successors(u))
              step(u, e.to);
        }
      return r;
    };

    // x lies on a cycle of weight >= 0 whose largest color is color(x)
    region_t good(n, false);
    for (vertex_t x = 0; x < n; ++x)
      {
        const color_t c = a.color(x);
        if (c % 2 != 0)
          continue;
        const auto fwd = reach(x, c, false);
        const auto bwd = reach(x, c, true);
        region_t scc(n);
        std::size_t size = 0;
        for (vertex_t u = 0; u < n; ++u)
          size += scc[u] = fwd[u] && bwd[u];
        // longest walks from x inside its component
        constexpr weight_t unset = std::numeric_limits<weight_t>::min();
        std::vector<weight_t> dist(n, unset);
        dist[x] = 0;
        bool positive_cycle = false;
        for (std::size_t round = 0; round <= size; ++round)
          {
            bool changed = false;
            for (vertex_t u = 0; u < n; ++u)
              if (scc[u] && dist[u] != unset)
                for (auto& e : a.successors(u))
                  if (scc[e.to] && e.to != x && allowed(u, e.to)
                      && dist[u] + e.weight > dist[e.to])
                    {
                      dist[e.to] = dist[u] + e.weight;
                      changed = true;
                    }
            if (!changed)
              break;
            positive_cycle = round == size;
          }
        bool ok = positive_cycle;
        for (vertex_t u = 0; u < n && !ok; ++u)
          if (scc[u] && dist[u] != unset)
            if (auto w = a.weight(u, x); w && allowed(u, x))
              ok = dist[u] + *w >= 0;
        good[x] = ok;
      }

    // player 0 wins exactly where a good cycle is reachable
    region_t win(n, false);
    std::vector<vertex_t> stack;
    for (vertex_t x = 0; x < n; ++x)
      if (good[x])
        {
          win[x] = true;
          stack.push_back(x);
        }
    while (!stack.empty())
      {
        const vertex_t u = stack.back();
        stack.pop_back();
        for (vertex_t p : a.predecessors(u))
          if (!win[p] && allowed(p, u))
            {
              win[p] = true;
              stack.push_back(p);
            }
      }
    return win;
  }

  namespace
  {
    // Positional player-1 choice read off a saturating game: at each
    // vertex, the move from the highest energy level player 1 still wins.
    std::vector<vertex_t> player1_candidate(const arena& a,
                                            const credit_solution& cs)
    {
      const auto& g = cs.game;
      std::vector<vertex_t> choice(a.size(), no_vertex);
      for (vertex_t u = 0; u < a.size(); ++u)
        {
          if (a.owner(u) != player::one)
            continue;
          choice[u] = a.successors(u)[0].to;
          for (weight_t e = g.cap(); e >= 0; --e)
            {
              const vertex_t st = g.state(u, e);
              if (cs.result.win0[st])
                continue;
              const vertex_t to = cs.result.strategy[st];
              if (g.is_sink(to))
                {
                  // the steepest edge that runs out of energy
                  weight_t least = 0;
                  for (auto& edge : a.successors(u))
                    if (edge.weight < least)
                      {
                        least = edge.weight;
                        choice[u] = edge.to;
                      }
                }
              else
                choice[u] = g.vertex_of(to);
              break;
            }
        }
      return choice;
    }
  }

  solution solve_energy_parity_capped(const arena& a, weight_t cap,
                                      std::size_t budget)
  {
    const weight_t c0 = sufficient_credit(a);
    cap = std::max(cap, c0);
    auto cs = solve_credit_game(a, cap, budget);
    region_t win0(a.size(), false);
    for (vertex_t v = 0; v < a.size(); ++v)
      win0[v] = cs.wins0(v, c0);
    solution sol = solution_from_win0(std::move(win0));
    sol.strategy0 = credit_strategy(a, cs, c0);
    return sol;
  }

  credit_table solve_credits(const arena& a, const region_t& query,
                             bool all_credits, std::size_t budget)
  {
    credit_table t;
    t.c0 = sufficient_credit(a);
    const weight_t full = energy_cap(a);
    const std::size_t width = static_cast<std::size_t>(t.c0) + 1;
    t.wins.assign(a.size() * width, false);
    auto fill = [&](const credit_solution& cs) {
      for (vertex_t v = 0; v < a.size(); ++v)
        for (weight_t e = 0; e <= t.c0; ++e)
          t.wins[v * width + static_cast<std::size_t>(e)] = cs.wins0(v, e);
    };
    weight_t cap = std::min(full, checked_add(t.c0, a.max_abs_weight()) + 1);
    while (cap < full)
      {
        auto lower = solve_credit_game(a, cap, budget);
        if (!all_credits)
          {
            // a positional player-1 strategy confirming every queried
            // loss makes the saturating game exact at c0
            const auto lost =
              energy_parity_win0_against(a, player1_candidate(a, lower));
            bool confirmed = true;
            for (vertex_t v = 0; v < a.size() && confirmed; ++v)
              if (query[v] && !lower.wins0(v, t.c0))
                confirmed = !lost[v];
            if (confirmed)
              {
                fill(lower);
                t.lower = std::move(lower);
                return t;
              }
          }
        auto upper = solve_credit_game(a, cap, budget, true);
        bool agree = true;
        for (vertex_t v = 0; v < a.size() && agree; ++v)
          if (query[v])
            for (weight_t e = all_credits ? 0 : t.c0; e <= t.c0; ++e)
              if (lower.wins0(v, e) != upper.wins0(v, e))
                {
                  agree = false;
                  break;
                }
        if (agree)
          {
            fill(lower);
            t.lower = std::move(lower);
            return t;
          }
        cap = cap > full / 4 ? full : cap * 4;
      }
    auto exact = solve_credit_game(a, full, budget);
    fill(exact);
    t.lower = std::move(exact);
    return t;
  }

  solution solve_energy_parity(const arena& a, std::size_t budget)
  {
    auto t = solve_credits(a, region_t(a.size(), true), false, budget);
    region_t win0(a.size(), false);
    for (vertex_t v = 0; v < a.size(); ++v)
      win0[v] = t.wins0(v, t.c0);
    solution sol = solution_from_win0(std::move(win0));
    sol.strategy0 = credit_strategy(a, *t.lower, t.c0);
    return sol;
  }

  bool energy_parity_wins0(const arena& a, vertex_t v, std::size_t budget)
  {
    region_t reach(a.size(), false);
    std::vector<vertex_t> stack{v};
    reach[v] = true;
    while (!stack.empty())
      {
        vertex_t u = stack.back();
        stack.pop_back();
        for (auto& e : a.successors(u))
          if (!reach[e.to])
            {
              reach[e.to] = true;
              stack.push_back(e.to);
            }
      }
    auto sub = restrict(a, reach);
    const vertex_t sv = sub.from_parent[v];
    auto t = solve_credits(sub.arena, make_region(sub.arena.size(), {&sv, 1}),
                           false, budget);
    return t.wins0(sv, t.c0);
  }

  std::optional<weight_t> minimal_initial_credit(const arena& a, vertex_t v,
                                                 std::size_t budget)
  {
    auto t = solve_credits(a, make_region(a.size(), {&v, 1}), true, budget);
    if (!t.wins0(v, t.c0))
      return std::nullopt;
    // winning credits are upward closed
    weight_t lo = 0;
    weight_t hi = t.c0;
    while (lo < hi)
      {
        const weight_t mid = lo + (hi - lo) / 2;
        if (t.wins0(v, mid))
          hi = mid;
        else
          lo = mid + 1;
      }
    return lo;
  }

  infix_drop_report check_infix_drop_bound(const finite_state_strategy& strategy,
                                           const arena& a,
                                           const region_t& start)
  {
    infix_drop_report rep;
    const weight_t n = static_cast<weight_t>(a.size());
    const weight_t s = static_cast<weight_t>(strategy.size());
    const weight_t w = a.max_abs_weight();
    rep.bound = -checked_add(checked_mul(checked_mul(n, s) - 1, w), 1);

    auto prod = compose_product(a, strategy, start);
    const auto& g = prod.product;
    const std::size_t m = g.size();
    // dist[x] = least weight of a path ending in x (paths may start
    // anywhere in the reachable product)
    std::vector<weight_t> dist(m, 0);
    std::vector<vertex_t> pred(m, no_vertex);
    vertex_t relaxed = no_vertex;
    for (std::size_t round = 0; round <= m; ++round)
      {
        relaxed = no_vertex;
        for (vertex_t x = 0; x < m; ++x)
          for (auto& e : g.successors(x))
            if (dist[x] + e.weight < dist[e.to])
              {
                dist[e.to] = dist[x] + e.weight;
                pred[e.to] = x;
                relaxed = e.to;
              }
        if (relaxed == no_vertex)
          break;
      }
    auto project = [&](const std::vector<vertex_t>& path) {
      std::vector<vertex_t> out;
      for (vertex_t x : path)
        out.push_back(prod.states[x].first);
      return out;
    };
    if (relaxed != no_vertex)
      {
        // negative cycle: walk back m steps to land on it
        vertex_t x = relaxed;
        for (std::size_t i = 0; i < m; ++i)
          x = pred[x];
        std::vector<vertex_t> cyc{x};
        for (vertex_t y = pred[x]; y != x; y = pred[y])
          cyc.push_back(y);
        cyc.push_back(x);
        std::reverse(cyc.begin(), cyc.end());
        rep.ok = false;
        rep.witness = project(cyc);
        return rep;
      }
    vertex_t worst = 0;
    for (vertex_t x = 0; x < m; ++x)
      if (dist[x] < dist[worst])
        worst = x;
    if (m > 0 && dist[worst] <= rep.bound)
      {
        std::vector<vertex_t> path{worst};
        for (vertex_t y = pred[worst]; y != no_vertex; y = pred[y])
          path.push_back(y);
        std::reverse(path.begin(), path.end());
        rep.ok = false;
        rep.witness = project(path);
      }
    return rep;
  }
}
