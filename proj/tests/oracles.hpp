#pragma once

// Exhaustive reference solvers for small arenas.

#include <wpg/arena.hpp>

#include <algorithm>
#include <functional>
#include <vector>

namespace oracle
{
  using namespace wpg;

  using choice_t = std::vector<vertex_t>;

  // Calls f with every positional choice of player p (no_vertex elsewhere).
  inline void for_each_positional(const arena& a, player p,
                                  const std::function<void(const choice_t&)>& f)
  {
    std::vector<vertex_t> owned;
    for (vertex_t v = 0; v < a.size(); ++v)
      if (a.owner(v) == p)
        owned.push_back(v);
    std::vector<std::size_t> pick(owned.size(), 0);
    choice_t choice(a.size(), no_vertex);
    for (;;)
      {
        for (std::size_t i = 0; i < owned.size(); ++i)
          choice[owned[i]] = a.successors(owned[i])[pick[i]].to;
        f(choice);
        std::size_t i = 0;
        while (i < owned.size() && ++pick[i] == a.successors(owned[i]).size())
          pick[i++] = 0;
        if (i == owned.size())
          return;
      }
  }

  inline bool allowed(const choice_t& choice, vertex_t u, vertex_t to)
  {
    return choice[u] == no_vertex || choice[u] == to;
  }

  struct cycle
  {
    std::vector<vertex_t> vertices;
    weight_t weight;
    color_t top;
  };

  // Every simple cycle under the choice, each reported once (from its
  // least vertex).
  inline std::vector<cycle> simple_cycles(const arena& a, const choice_t& choice)
  {
    std::vector<cycle> out;
    std::vector<bool> on(a.size(), false);
    std::vector<vertex_t> path;
    std::function<void(vertex_t, vertex_t, weight_t)> dfs =
      [&](vertex_t start, vertex_t u, weight_t w) {
        for (auto& e : a.successors(u))
          {
            if (!allowed(choice, u, e.to))
              continue;
            if (e.to == start)
              {
                color_t top = 0;
                for (vertex_t x : path)
                  top = std::max(top, a.color(x));
                out.push_back({path, w + e.weight, top});
              }
            else if (e.to > start && !on[e.to])
              {
                on[e.to] = true;
                path.push_back(e.to);
                dfs(start, e.to, w + e.weight);
                path.pop_back();
                on[e.to] = false;
              }
          }
      };
    for (vertex_t s = 0; s < a.size(); ++s)
      {
        on[s] = true;
        path = {s};
        dfs(s, s, 0);
        on[s] = false;
      }
    return out;
  }

  inline region_t reachable(const arena& a, const choice_t& choice, vertex_t v)
  {
    region_t r(a.size(), false);
    std::vector<vertex_t> stack{v};
    r[v] = true;
    while (!stack.empty())
      {
        const vertex_t u = stack.back();
        stack.pop_back();
        for (auto& e : a.successors(u))
          if (allowed(choice, u, e.to) && !r[e.to])
            {
              r[e.to] = true;
              stack.push_back(e.to);
            }
      }
    return r;
  }

  // Player 0 wins iff some positional strategy leaves no reachable cycle
  // with odd maximal color.
  inline region_t parity(const arena& a)
  {
    region_t win0(a.size(), false);
    for_each_positional(a, player::zero, [&](const choice_t& s) {
      const auto cycles = simple_cycles(a, s);
      for (vertex_t v = 0; v < a.size(); ++v)
        {
          if (win0[v])
            continue;
          const auto r = reachable(a, s, v);
          bool bad = false;
          for (auto& c : cycles)
            bad = bad || (r[c.vertices[0]] && c.top % 2 == 1);
          win0[v] = !bad;
        }
    });
    return win0;
  }

  // Player 1 has positional winning strategies, and against a fixed one
  // player 0 wins iff a closed walk with even maximal color and weight
  // >= 0 is reachable.  Such a walk with top color c exists iff a simple
  // cycle with top c and weight >= 0 exists, or a positive simple cycle
  // below c connects to a top-c cycle within colors <= c.
  inline region_t energy_parity(const arena& a)
  {
    region_t win0(a.size(), true);
    for_each_positional(a, player::one, [&](const choice_t& s) {
      const auto cycles = simple_cycles(a, s);
      region_t good(a.size(), false);
      for (auto& c : cycles)
        {
          if (c.top % 2 != 0)
            continue;
          bool ok = c.weight >= 0;
          // positive cycles in the same component below c.top
          auto inside = [&](vertex_t from, vertex_t to) -> bool {
            region_t r(a.size(), false);
            std::vector<vertex_t> st{from};
            r[from] = true;
            while (!st.empty())
              {
                vertex_t u = st.back();
                st.pop_back();
                for (auto& e : a.successors(u))
                  if (allowed(s, u, e.to) && a.color(e.to) <= c.top && !r[e.to])
                    {
                      r[e.to] = true;
                      st.push_back(e.to);
                    }
              }
            return r[to];
          };
          for (auto& d : cycles)
            if (!ok && d.weight > 0 && d.top <= c.top)
              ok = inside(c.vertices[0], d.vertices[0])
                   && inside(d.vertices[0], c.vertices[0]);
          if (ok)
            for (vertex_t x : c.vertices)
              good[x] = true;
        }
      for (vertex_t v = 0; v < a.size(); ++v)
        if (win0[v])
          {
            const auto r = reachable(a, s, v);
            bool any = false;
            for (vertex_t x = 0; x < a.size(); ++x)
              any = any || (r[x] && good[x]);
            win0[v] = any;
          }
    });
    return win0;
  }
}
