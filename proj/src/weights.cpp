#include <wpg/weights.hpp>

#include <wpg/energy.hpp>

namespace wpg
{
  const char* to_string(condition_kind k) noexcept
  {
    switch (k)
      {
      case condition_kind::parity:
        return "parity";
      case condition_kind::finitary_parity:
        return "finitary-parity";
      case condition_kind::parity_with_costs:
        return "parity-with-costs";
      case condition_kind::general:
        break;
      }
    return "general";
  }

  condition_kind classify_condition(const arena& a)
  {
    bool all_zero = true;
    bool all_positive = true;
    bool all_nonneg = true;
    for (std::size_t i = 0; i < a.edge_count(); ++i)
      {
        const weight_t w = a.edge(i).weight;
        all_zero = all_zero && w == 0;
        all_positive = all_positive && w > 0;
        all_nonneg = all_nonneg && w >= 0;
      }
    if (all_zero)
      return condition_kind::parity;
    if (all_positive)
      return condition_kind::finitary_parity;
    if (all_nonneg)
      return condition_kind::parity_with_costs;
    return condition_kind::general;
  }

  polarized_game polarize(const arena& a, vertex_t pivot)
  {
    if (pivot >= a.size())
      throw validation_error("pivot out of range");
    for (vertex_t v = 0; v < a.size(); ++v)
      if (a.color(v) < 2)
        throw validation_error("polarize needs colors >= 2");
    const color_t request = a.color(pivot);
    const std::size_t n = a.size();

    // gadget ids, created on first incoming edge
    std::vector<vertex_t> gadget(4 * n, no_vertex);
    auto slot = [](vertex_t v, bool minus, int bit) {
      return 4 * static_cast<std::size_t>(v) + (minus ? 2 : 0)
             + static_cast<std::size_t>(bit);
    };
    polarized_game g;
    g.pivot = pivot;
    for (vertex_t v = 0; v < n; ++v)
      for (bool minus : {false, true})
        g.origins.push_back({v, minus, -1});
    auto gadget_of = [&](vertex_t v, bool minus, int bit) {
      vertex_t& id = gadget[slot(v, minus, bit)];
      if (id == no_vertex)
        {
          id = static_cast<vertex_t>(g.origins.size());
          g.origins.push_back({v, minus, bit});
        }
      return id;
    };
    struct raw
    {
      vertex_t from, to;
      weight_t w;
    };
    std::vector<raw> edges;
    for (vertex_t v = 0; v < n; ++v)
      for (bool minus : {false, true})
        {
          const vertex_t x = g.copy(v, minus);
          if (answers(request, a.color(v)))
            {
              edges.push_back({x, x, 0});
              continue;
            }
          for (auto& e : a.successors(v))
            {
              const vertex_t keep = gadget_of(e.to, minus, 1);
              edges.push_back({x, keep, minus ? e.weight : -e.weight});
            }
        }
    // gadget edges; the list grows while bit-1 gadgets create bit-0 ones
    for (std::size_t id = 2 * n; id < g.origins.size(); ++id)
      {
        const auto o = g.origins[id];
        const auto x = static_cast<vertex_t>(id);
        if (o.bit == 1)
          {
            edges.push_back({x, g.copy(o.vertex, o.minus), 0});
            edges.push_back({x, gadget_of(o.vertex, o.minus, 0), 0});
          }
        else
          {
            edges.push_back({x, x, 1});
            edges.push_back({x, g.copy(o.vertex, !o.minus), 0});
          }
      }

    arena::builder b(g.origins.size());
    for (auto& o : g.origins)
      {
        if (o.bit < 0)
          {
            const color_t c = a.color(o.vertex);
            b.add_vertex(a.owner(o.vertex), answers(request, c) ? 0 : c);
          }
        else
          b.add_vertex(o.bit == 0 ? player::zero : player::one, 1);
      }
    for (auto& e : edges)
      b.add_edge(e.from, e.to, e.w);
    g.product = std::move(b).build();
    return g;
  }

  namespace
  {
    // Removes \a gone from the current arena, keeping the id map to the
    // input arena.
    void shrink(subarena& cur, const region_t& gone)
    {
      region_t keep(cur.arena.size());
      for (vertex_t v = 0; v < cur.arena.size(); ++v)
        keep[v] = !gone[v];
      auto next = restrict(cur.arena, keep);
      for (auto& p : next.to_parent)
        p = cur.to_parent[p];
      cur.arena = std::move(next.arena);
      cur.to_parent = std::move(next.to_parent);
    }

    region_t complement(const region_t& r)
    {
      region_t out(r.size());
      for (std::size_t i = 0; i < r.size(); ++i)
        out[i] = !r[i];
      return out;
    }

    subarena whole(const arena& a)
    {
      subarena s{a, {}, {}};
      s.to_parent.resize(a.size());
      for (vertex_t v = 0; v < a.size(); ++v)
        s.to_parent[v] = v;
      return s;
    }
  }

  solution solve_bounded_weight_parity(const arena& a, std::size_t budget)
  {
    subarena cur = whole(normalize_colors(a).arena);
    region_t win1(a.size(), false);
    while (cur.arena.size() > 0)
      {
        const arena& g = cur.arena;
        region_t x(g.size(), false);
        bool any = false;
        for (vertex_t v = 0; v < g.size(); ++v)
          {
            // an even pivot answers itself
            if (g.color(v) % 2 == 0)
              continue;
            auto pg = polarize(g, v);
            if (!energy_parity_wins0(pg.product, pg.copy(v, false), budget))
              x[v] = any = true;
          }
        if (!any)
          break;
        auto attr = attractor(g, player::one, x);
        if (!is_trap(g, player::one, complement(attr.region)))
          throw error("internal: rest of the arena is not a player-1 trap");
        for (vertex_t v = 0; v < g.size(); ++v)
          if (attr.region[v])
            win1[cur.to_parent[v]] = true;
        shrink(cur, attr.region);
      }
    region_t win0(a.size());
    for (vertex_t v = 0; v < a.size(); ++v)
      win0[v] = !win1[v];
    return solution_from_win0(std::move(win0));
  }

  solution solve_weight_parity(const arena& a, std::size_t budget)
  {
    subarena cur = whole(a);
    region_t win0(a.size(), false);
    while (cur.arena.size() > 0)
      {
        const arena& g = cur.arena;
        auto bounded = solve_bounded_weight_parity(g, budget);
        if (count(bounded.win0) == 0)
          break;
        auto attr = attractor(g, player::zero, bounded.win0);
        if (!is_trap(g, player::zero, complement(attr.region)))
          throw error("internal: rest of the arena is not a player-0 trap");
        for (vertex_t v = 0; v < g.size(); ++v)
          if (attr.region[v])
            win0[cur.to_parent[v]] = true;
        shrink(cur, attr.region);
      }
    return solution_from_win0(std::move(win0));
  }
}
