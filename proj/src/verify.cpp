#include <wpg/verify.hpp>

#include <algorithm>
#include <deque>
#include <map>
#include <unordered_map>

namespace wpg
{
  strategy_product compose_product(const arena& a,
                                   const finite_state_strategy& strategy,
                                   const region_t& start, std::size_t budget)
  {
    if (strategy.vertex_count() != a.size())
      throw validation_error("strategy was built for a different arena");
    strategy_product out;
    std::unordered_map<std::uint64_t, vertex_t> ids;
    auto key = [](vertex_t v, memory_t m) {
      return static_cast<std::uint64_t>(m) << 32 | v;
    };
    auto intern = [&](vertex_t v, memory_t m) {
      auto [it, fresh] = ids.try_emplace(key(v, m),
                                         static_cast<vertex_t>(out.states.size()));
      if (fresh)
        {
          if (out.states.size() >= budget)
            throw capacity_error("strategy product exceeds the state budget");
          out.states.emplace_back(v, m);
        }
      return it->second;
    };
    out.initial.assign(a.size(), no_vertex);
    for (vertex_t v = 0; v < a.size(); ++v)
      if (start[v])
        {
          const memory_t m = strategy.init(v);
          if (m == no_memory || m >= strategy.size())
            throw validation_error("strategy has no initial memory for vertex "
                                   + std::to_string(v));
          out.initial[v] = intern(v, m);
        }
    std::vector<std::pair<vertex_t, vertex_t>> edges;
    for (std::size_t head = 0; head < out.states.size(); ++head)
      {
        const auto [v, m] = out.states[head];
        const auto x = static_cast<vertex_t>(head);
        auto follow = [&](std::size_t idx) {
          const memory_t next = strategy.update(m, idx);
          if (next == no_memory || next >= strategy.size())
            throw validation_error("strategy update undefined at vertex "
                                   + std::to_string(v) + ", memory "
                                   + std::to_string(m));
          edges.emplace_back(x, intern(a.edge(idx).to, next));
        };
        if (a.owner(v) == strategy.owner())
          {
            const vertex_t succ = strategy.move(v, m);
            const auto idx = succ == no_vertex ? std::nullopt
                                               : a.edge_index(v, succ);
            if (!idx)
              throw validation_error("strategy has no legal move at vertex "
                                     + std::to_string(v) + ", memory "
                                     + std::to_string(m));
            follow(*idx);
          }
        else
          for (std::size_t idx = a.first_edge(v); idx < a.first_edge(v + 1);
               ++idx)
            follow(idx);
      }
    arena::builder b(out.states.size());
    for (auto [v, m] : out.states)
      b.add_vertex(a.owner(v), a.color(v));
    for (auto [x, y] : edges)
      b.add_edge(x, y, *a.weight(out.states[x].first, out.states[y].first));
    out.product = std::move(b).build();
    return out;
  }

  namespace
  {
    // BFS path from any vertex in \a from to \a goal using only vertices
    // allowed by \a ok; the result starts in \a from and ends in goal.
    template <class Ok>
    std::vector<vertex_t> bfs_path(const arena& g,
                                   const std::vector<vertex_t>& from,
                                   vertex_t goal, Ok ok, bool strict)
    {
      std::vector<vertex_t> parent(g.size(), no_vertex);
      std::vector<bool> seen(g.size(), false);
      std::deque<vertex_t> queue;
      for (vertex_t s : from)
        if (s != no_vertex && !seen[s] && ok(s))
          {
            seen[s] = true;
            queue.push_back(s);
          }
      // strict: goal must be reached by at least one edge
      while (!queue.empty())
        {
          vertex_t x = queue.front();
          queue.pop_front();
          if (!strict && x == goal)
            break;
          for (auto& e : g.successors(x))
            {
              if (!ok(e.to))
                continue;
              if (strict && e.to == goal)
                {
                  std::vector<vertex_t> path{goal};
                  for (vertex_t y = x; y != no_vertex; y = parent[y])
                    path.push_back(y);
                  std::reverse(path.begin(), path.end());
                  return path;
                }
              if (!seen[e.to])
                {
                  seen[e.to] = true;
                  parent[e.to] = x;
                  queue.push_back(e.to);
                }
            }
        }
      if (strict || !seen[goal])
        return {};
      std::vector<vertex_t> path;
      for (vertex_t y = goal; y != no_vertex; y = parent[y])
        path.push_back(y);
      std::reverse(path.begin(), path.end());
      return path;
    }
  }

  verification verify_parity_strategy(const arena& a,
                                      const finite_state_strategy& strategy,
                                      const region_t& start)
  {
    auto prod = compose_product(a, strategy, start);
    const arena& g = prod.product;
    const player q = opponent(strategy.owner());
    auto all = [](vertex_t) { return true; };
    // a losing play exists iff some reachable cycle has its maximal color
    // of q's parity; search by that color, lowest vertex first
    std::map<color_t, std::vector<vertex_t>> by_color;
    for (vertex_t x = 0; x < g.size(); ++x)
      if (parity_winner(g.color(x)) == q)
        by_color[g.color(x)].push_back(x);
    for (auto& [c, xs] : by_color)
      for (vertex_t x : xs)
        {
          const color_t top = c;
          auto below = [&](vertex_t y) { return g.color(y) <= top; };
          auto cyc = bfs_path(g, {x}, x, below, true);
          if (cyc.empty())
            continue;
          auto stem = bfs_path(g, prod.initial, x, all, false);
          verification r;
          r.ok = false;
          lasso l;
          for (std::size_t i = 0; i + 1 < stem.size(); ++i)
            l.stem.push_back(prod.states[stem[i]].first);
          for (std::size_t i = 0; i + 1 < cyc.size(); ++i)
            l.cycle.push_back(prod.states[cyc[i]].first);
          r.witness = std::move(l);
          return r;
        }
    return {};
  }

  simulation simulate_play(const arena& a,
                           const finite_state_strategy* strategy0,
                           const finite_state_strategy* strategy1,
                           vertex_t start, std::size_t steps,
                           const choice_policy& policy)
  {
    if (start >= a.size())
      throw validation_error("start vertex out of range");
    const finite_state_strategy* strat[2] = {strategy0, strategy1};
    for (int i = 0; i < 2; ++i)
      if (strat[i] && strat[i]->owner() != (i == 0 ? player::zero : player::one))
        throw validation_error("strategy passed for the wrong player");
    std::vector<std::size_t> robin(a.size(), 0);
    memory_t mem[2] = {0, 0};
    for (int i = 0; i < 2; ++i)
      if (strat[i])
        mem[i] = strat[i]->init(start);

    // configuration = vertex, both memories and the round-robin counters;
    // only tracked when no external policy can break determinism
    using config = std::vector<std::uint64_t>;
    std::map<config, std::size_t> seen;
    auto snapshot = [&](vertex_t v) {
      config c{v, mem[0], mem[1]};
      c.insert(c.end(), robin.begin(), robin.end());
      return c;
    };

    simulation out;
    vertex_t v = start;
    for (std::size_t t = 0; t <= steps; ++t)
      {
        if (!policy)
          {
            auto [it, fresh] = seen.try_emplace(snapshot(v), out.prefix.size());
            if (!fresh)
              {
                lasso l;
                l.stem.assign(out.prefix.begin(), out.prefix.begin() + it->second);
                l.cycle.assign(out.prefix.begin() + it->second, out.prefix.end());
                for (std::size_t j = 0; j < l.length(); ++j)
                  out.costs.push_back(cost_of_response(a, l, j));
                out.play = std::move(l);
                return out;
              }
          }
        out.prefix.push_back(v);
        if (t == steps)
          break;
        const int who = static_cast<int>(index(a.owner(v)));
        vertex_t next = no_vertex;
        if (strat[who])
          next = strat[who]->move(v, mem[who]);
        if (next == no_vertex)
          {
            if (policy)
              next = policy(v, t);
            else
              {
                auto succ = a.successors(v);
                next = succ[robin[v] % succ.size()].to;
                robin[v] = (robin[v] + 1) % succ.size();
              }
          }
        if (!a.has_edge(v, next))
          throw validation_error("simulated move is not an edge");
        for (int i = 0; i < 2; ++i)
          if (strat[i])
            {
              mem[i] = strat[i]->step(a, mem[i], v, next);
              if (mem[i] == no_memory)
                throw validation_error("strategy update undefined in play");
            }
        v = next;
      }
    return out;
  }
}
