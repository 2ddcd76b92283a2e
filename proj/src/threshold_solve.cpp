#include <wpg/threshold.hpp>
#include <wpg/weights.hpp>

#include <deque>
#include <map>

namespace wpg
{
  weight_t saturation_bound(const arena& a)
  {
    const auto n = static_cast<weight_t>(a.size());
    const auto d = static_cast<weight_t>(a.odd_color_count());
    const weight_t w = a.max_abs_weight();
    weight_t s = checked_mul(n, d);
    s = checked_mul(s, checked_mul(6, n));
    s = checked_mul(s, d + 2);
    s = checked_mul(s, checked_add(w, 1));
    return checked_mul(s, w);
  }

  bool threshold_decide(const arena& a, vertex_t v, weight_t b,
                        const threshold_options& opt)
  {
    if (v >= a.size())
      throw validation_error("vertex out of range");
    if (b < 0)
      throw validation_error("bound must be nonnegative");
    if (b >= saturation_bound(a) && !opt.force_explicit)
      return solve_weight_parity(a, opt.budget).win0[v];
    region_t start(a.size(), false);
    start[v] = true;
    threshold_game g(a, b, start, opt.budget);
    return g.wins0(g.initial(v));
  }

  region_t threshold_region(const arena& a, weight_t b, std::size_t budget)
  {
    threshold_game g(a, b, region_t(a.size(), true), budget);
    region_t out(a.size());
    for (vertex_t v = 0; v < a.size(); ++v)
      out[v] = g.wins0(g.initial(v));
    return out;
  }

  std::uint64_t optimal_cost(const arena& a, vertex_t v, std::size_t budget)
  {
    if (v >= a.size())
      throw validation_error("vertex out of range");
    if (!solve_weight_parity(a, budget).win0[v])
      return infinite_cost;
    const weight_t sat = saturation_bound(a);
    threshold_options opt;
    opt.budget = budget;
    // invariant: decide(lo) false (or lo = -1), decide(hi) true
    weight_t lo = -1;
    weight_t hi = 0;
    while (hi < sat && !threshold_decide(a, v, hi, opt))
      {
        lo = hi;
        hi = hi == 0 ? 1 : std::min(sat, checked_mul(hi, 2));
      }
    hi = std::min(hi, sat);
    while (hi - lo > 1)
      {
        const weight_t mid = lo + (hi - lo) / 2;
        if (threshold_decide(a, v, mid, opt))
          hi = mid;
        else
          lo = mid;
      }
    return static_cast<std::uint64_t>(hi);
  }

  std::uint64_t optimal_cost_linear(const arena& a, vertex_t v,
                                    std::size_t budget)
  {
    const weight_t sat = saturation_bound(a);
    threshold_options opt;
    opt.budget = budget;
    for (weight_t b = 0; b <= sat; ++b)
      if (threshold_decide(a, v, b, opt))
        return static_cast<std::uint64_t>(b);
    return infinite_cost;
  }

  namespace
  {
    // Product states reachable from s0 when the owner of each state in
    // \a fixed follows the solved strategy.
    std::vector<vertex_t> reach_under(const threshold_game& g, vertex_t s0,
                                      player fixed)
    {
      const arena& p = g.product();
      std::vector<bool> seen(p.size(), false);
      std::vector<vertex_t> order{s0};
      seen[s0] = true;
      for (std::size_t i = 0; i < order.size(); ++i)
        {
          const vertex_t s = order[i];
          auto visit = [&](vertex_t t) {
            if (!seen[t])
              {
                seen[t] = true;
                order.push_back(t);
              }
          };
          if (p.owner(s) == fixed)
            visit(g.result().strategy[s]);
          else
            for (auto& e : p.successors(s))
              visit(e.to);
        }
      return order;
    }

    using rkey = std::vector<std::int64_t>;

    rkey key_of(const threshold_state& m, bool with_overflow)
    {
      rkey k;
      if (with_overflow)
        k.push_back(m.overflow);
      for (auto& iv : m.r)
        {
          k.push_back(iv ? 1 : 0);
          k.push_back(iv ? iv->l : 0);
          k.push_back(iv ? iv->h : 0);
        }
      return k;
    }
  }

  finite_state_strategy extract_player0_strategy(const threshold_game& g,
                                                 vertex_t v)
  {
    const arena& a = g.base();
    const vertex_t s0 = g.initial(v);
    if (s0 == no_vertex || !g.wins0(s0))
      throw not_winning_error("player 0 does not win the threshold game from "
                              + std::to_string(v));
    const auto reach = reach_under(g, s0, player::zero);

    // o_{u,r}: largest overflow counter seen with vertex u and memory r
    std::map<std::pair<vertex_t, rkey>, std::uint32_t> top;
    std::map<rkey, memory_t> ids;
    std::vector<threshold_state> states;
    auto id_of = [&](const threshold_state& m) {
      threshold_state bare{0, m.r};
      auto [it, fresh] = ids.try_emplace(key_of(bare, false),
                                         static_cast<memory_t>(states.size()));
      if (fresh)
        states.push_back(bare);
      return it->second;
    };
    id_of(init_state(a, v));
    for (vertex_t s : reach)
      {
        auto m = g.state_of(s);
        if (!m)
          throw error("internal: winning play reaches the overflow sink");
        id_of(*m);
        auto& o = top[{g.vertex_of(s), key_of({0, m->r}, false)}];
        o = std::max(o, m->overflow);
      }

    struct entry
    {
      vertex_t u;
      memory_t m;
      memory_t next;
      std::size_t edge;
    };
    std::vector<entry> updates;
    std::vector<std::pair<std::pair<vertex_t, memory_t>, vertex_t>> moves;
    for (auto& [key, o] : top)
      {
        const vertex_t u = key.first;
        const memory_t m = ids.at(key.second);
        threshold_state full = states[m];
        full.overflow = o;
        const auto s = g.find(u, full);
        if (!s)
          throw error("internal: maximal overflow state missing");
        vertex_t chosen = no_vertex;
        if (a.owner(u) == player::zero)
          {
            chosen = g.vertex_of(g.result().strategy[*s]);
            moves.push_back({{u, m}, chosen});
          }
        for (std::size_t idx = a.first_edge(u); idx < a.first_edge(u + 1); ++idx)
          {
            const vertex_t to = a.edge(idx).to;
            if (chosen != no_vertex && to != chosen)
              continue;
            const auto next = update_state(a, full, u, to, g.bound());
            updates.push_back({u, m, id_of(next), idx});
          }
      }

    finite_state_strategy out(player::zero, states.size(), a.size());
    for (vertex_t u = 0; u < a.size(); ++u)
      {
        auto it = ids.find(key_of(init_state(a, u), false));
        out.set_init(u, it == ids.end() ? 0 : it->second);
      }
    for (auto& e : updates)
      out.set_update(e.m, e.edge, e.next);
    for (auto& [um, to] : moves)
      out.set_move(um.first, um.second, to);
    return out;
  }

  finite_state_strategy extract_player1_strategy(const threshold_game& g,
                                                 vertex_t v)
  {
    const arena& a = g.base();
    const auto n = static_cast<std::uint32_t>(a.size());
    const vertex_t s0 = g.initial(v);
    if (s0 == no_vertex || g.wins0(s0))
      throw not_winning_error("player 1 does not win the threshold game from "
                              + std::to_string(v));
    const auto reach = reach_under(g, s0, player::one);

    // o_u: least counter with which (u, o, r_u) is reachable
    std::vector<std::uint32_t> reset(a.size(), n);
    std::vector<rkey> fresh(a.size());
    for (vertex_t u = 0; u < a.size(); ++u)
      fresh[u] = key_of({0, init_state(a, u).r}, false);
    for (vertex_t s : reach)
      {
        auto m = g.state_of(s);
        if (!m)
          continue;
        const vertex_t u = g.vertex_of(s);
        if (key_of({0, m->r}, false) == fresh[u])
          reset[u] = std::min(reset[u], m->overflow);
      }

    std::map<rkey, memory_t> ids;
    std::vector<threshold_state> states;
    auto id_of = [&](const threshold_state& m) {
      auto [it, is_new] = ids.try_emplace(key_of(m, true),
                                          static_cast<memory_t>(states.size()));
      if (is_new)
        states.push_back(m);
      return it->second;
    };

    struct entry
    {
      memory_t m;
      std::size_t edge;
      memory_t next;
    };
    std::vector<entry> updates;
    std::vector<std::pair<std::pair<vertex_t, memory_t>, vertex_t>> moves;
    // explore (vertex, memory) pairs under the re-seeded update
    std::map<std::pair<vertex_t, memory_t>, bool> seen;
    std::deque<std::pair<vertex_t, memory_t>> queue;
    const memory_t m0 = id_of(init_state(a, v));
    queue.emplace_back(v, m0);
    seen[{v, m0}] = true;
    while (!queue.empty())
      {
        auto [u, m] = queue.front();
        queue.pop_front();
        const threshold_state cur = states[m];
        const auto s = g.find(u, cur);
        if (!s)
          throw error("internal: player-1 memory state left the product");
        vertex_t chosen = no_vertex;
        if (a.owner(u) == player::one)
          {
            chosen = g.vertex_of(g.result().strategy[*s]);
            moves.push_back({{u, m}, chosen});
          }
        for (std::size_t idx = a.first_edge(u); idx < a.first_edge(u + 1); ++idx)
          {
            const vertex_t to = a.edge(idx).to;
            if (chosen != no_vertex && to != chosen)
              continue;
            auto next = update_state(a, cur, u, to, g.bound());
            if (next.overflow > cur.overflow)
              {
                next.overflow = reset[to];
                if (next.overflow >= n)
                  throw error("internal: re-seeded overflow counter saturated");
              }
            const memory_t nm = id_of(next);
            updates.push_back({m, idx, nm});
            if (!seen[{to, nm}])
              {
                seen[{to, nm}] = true;
                queue.emplace_back(to, nm);
              }
          }
      }

    finite_state_strategy out(player::one, states.size(), a.size());
    out.set_init(v, m0);
    for (auto& e : updates)
      out.set_update(e.m, e.edge, e.next);
    for (auto& [um, to] : moves)
      out.set_move(um.first, um.second, to);
    return out;
  }
}
