#include <wpg/reductions.hpp>

#include <set>

namespace wpg
{
  arena energy_to_corridor(const arena& a)
  {
    for (vertex_t v = 0; v < a.size(); ++v)
      if (a.color(v) <= 1)
        throw validation_error("corridor construction needs colors > 1");
    const auto n = static_cast<vertex_t>(a.size());
    arena::builder b(a.size() + a.edge_count());
    for (vertex_t v = 0; v < n; ++v)
      b.add_vertex(a.owner(v), a.color(v), a.has_names() ? a.name(v) : "");
    for (std::size_t i = 0; i < a.edge_count(); ++i)
      b.add_vertex(player::zero, 1);
    for (vertex_t v = 0; v < n; ++v)
      for (std::size_t i = a.first_edge(v); i < a.first_edge(v + 1); ++i)
        {
          const auto e = static_cast<vertex_t>(n + i);
          b.add_edge(v, e, a.edge(i).weight);
          b.add_edge(e, e, -1);
          b.add_edge(e, a.edge(i).to, 0);
        }
    return std::move(b).build();
  }

  entry_arena corridor_to_bounded(const arena& a)
  {
    const auto n = static_cast<vertex_t>(a.size());
    const color_t entry_color = 2 * a.max_color() + 1;
    arena::builder b(2 * a.size());
    for (vertex_t v = 0; v < n; ++v)
      b.add_vertex(a.owner(v), a.color(v), a.has_names() ? a.name(v) : "");
    entry_arena out;
    for (vertex_t v = 0; v < n; ++v)
      out.entry.push_back(b.add_vertex(player::zero, entry_color));
    for (vertex_t v = 0; v < n; ++v)
      {
        for (auto& e : a.successors(v))
          b.add_edge(v, e.to, e.weight);
        b.add_edge(out.entry[v], v, 0);
      }
    out.arena = std::move(b).build();
    return out;
  }

  reset_arena bounded_to_weight(const arena& a, vertex_t pivot)
  {
    if (pivot >= a.size())
      throw validation_error("pivot out of range");
    const auto n = static_cast<vertex_t>(a.size());
    arena::builder b(a.size() + a.edge_count() + 1);
    for (vertex_t v = 0; v < n; ++v)
      b.add_vertex(a.owner(v), a.color(v), a.has_names() ? a.name(v) : "");
    for (std::size_t i = 0; i < a.edge_count(); ++i)
      b.add_vertex(player::one, 0);
    reset_arena out;
    out.top = b.add_vertex(player::one, 2 * a.max_color(), "top");
    for (vertex_t v = 0; v < n; ++v)
      for (std::size_t i = a.first_edge(v); i < a.first_edge(v + 1); ++i)
        {
          const auto e = static_cast<vertex_t>(n + i);
          b.add_edge(v, e, a.edge(i).weight);
          b.add_edge(e, out.top, 0);
          b.add_edge(e, a.edge(i).to, 0);
        }
    b.add_edge(out.top, pivot, 0);
    out.arena = std::move(b).build();
    return out;
  }

  arena mean_payoff_to_energy(const arena& a)
  {
    const auto scale = static_cast<weight_t>(a.size()) + 1;
    std::vector<weight_t> w(a.edge_count());
    for (std::size_t i = 0; i < a.edge_count(); ++i)
      w[i] = checked_add(checked_mul(scale, a.edge(i).weight), 1);
    return with_weights(a, w);
  }

  void validate_countdown(const countdown_game& g)
  {
    const arena& a = g.arena;
    auto fail = [](const std::string& what) {
      throw invalid_countdown_error("countdown game: " + what);
    };
    if (g.credit < 0)
      fail("credit must be nonnegative");
    if (g.sink >= a.size())
      fail("sink out of range");
    if (a.owner(g.sink) != player::one)
      fail("sink must belong to player 1");
    if (!a.has_edge(g.sink, g.sink))
      fail("sink needs a self-loop");
    for (vertex_t v = 0; v < a.size(); ++v)
      {
        const player p = a.owner(v);
        if (p == player::zero && !a.has_edge(v, g.sink))
          fail("player-0 vertex " + std::to_string(v) + " lacks an edge to the sink");
        std::set<weight_t> seen;
        for (auto& e : a.successors(v))
          {
            if (v == g.sink)
              {
                if (e.to != g.sink)
                  fail("sink may only loop");
                if (e.weight != 0)
                  fail("edges of player 1 must weigh 0");
                continue;
              }
            if (a.owner(e.to) == p)
              fail("edge " + std::to_string(v) + " -> " + std::to_string(e.to)
                   + " is not bipartite");
            if (p == player::one)
              {
                if (e.weight != 0)
                  fail("edges of player 1 must weigh 0");
                continue;
              }
            if (e.to == g.sink ? e.weight != 0 : e.weight >= 0)
              fail("player-0 edges weigh 0 into the sink and < 0 elsewhere");
            if (!seen.insert(e.weight).second)
              fail("player-0 vertex " + std::to_string(v)
                   + " has two edges of equal weight");
          }
      }
  }

  countdown_game countdown_of(const game_instance& g)
  {
    countdown_game cd;
    cd.arena = g.arena;
    cd.credit = g.credit.value_or(0);
    if (auto s = g.get("sink"))
      {
        try
          {
            cd.sink = static_cast<vertex_t>(std::stoul(*s));
          }
        catch (const std::exception&)
          {
            throw invalid_countdown_error("countdown game: bad sink '" + *s + "'");
          }
      }
    else
      {
        std::size_t found = 0;
        for (vertex_t v = 0; v < g.arena.size(); ++v)
          if (g.arena.owner(v) == player::one && g.arena.has_edge(v, v))
            {
              cd.sink = v;
              ++found;
            }
        if (found != 1)
          throw invalid_countdown_error(
            "countdown game: cannot identify a unique sink");
      }
    validate_countdown(cd);
    return cd;
  }

  bool solve_countdown(const countdown_game& g, vertex_t v,
                       std::size_t budget)
  {
    validate_countdown(g);
    const arena& a = g.arena;
    if (v >= a.size())
      throw validation_error("start vertex out of range");
    const std::size_t width = static_cast<std::size_t>(g.credit) + 1;
    if (width > budget / std::max<std::size_t>(a.size(), 1))
      throw capacity_error("countdown table exceeds the state budget");
    // win[c * n + u]: player 0 wins from u with remaining credit c
    std::vector<bool> win(width * a.size(), false);
    auto at = [&](weight_t c, vertex_t u) {
      return win[static_cast<std::size_t>(c) * a.size() + u];
    };
    for (weight_t c = 0; c <= g.credit; ++c)
      {
        const std::size_t row = static_cast<std::size_t>(c) * a.size();
        // player-0 vertices only look at strictly smaller credits
        for (vertex_t u = 0; u < a.size(); ++u)
          {
            if (u == g.sink)
              win[row + u] = c == 0;
            else if (a.owner(u) == player::zero)
              {
                bool w = c == 0;
                for (auto& e : a.successors(u))
                  if (e.to != g.sink && c + e.weight >= 0
                      && at(c + e.weight, e.to))
                    w = true;
                win[row + u] = w;
              }
          }
        for (vertex_t u = 0; u < a.size(); ++u)
          if (u != g.sink && a.owner(u) == player::one)
            {
              bool w = true;
              for (auto& e : a.successors(u))
                w = w && win[row + e.to];
              win[row + u] = w;
            }
      }
    return at(g.credit, v);
  }

  threshold_instance countdown_to_threshold(const countdown_game& g,
                                            vertex_t start)
  {
    validate_countdown(g);
    const arena& a = g.arena;
    if (start >= a.size())
      throw validation_error("start vertex out of range");
    const auto n = static_cast<vertex_t>(a.size());
    arena::builder b(a.size() + 1);
    for (vertex_t v = 0; v < n; ++v)
      b.add_vertex(a.owner(v), v == g.sink ? 2 : 0,
                   a.has_names() ? a.name(v) : "");
    threshold_instance out;
    out.top = b.add_vertex(player::zero, 1, "top");
    out.bound = g.credit;
    const weight_t tally = checked_mul(2, g.credit);
    for (vertex_t v = 0; v < n; ++v)
      {
        if (v == g.sink)
          continue;
        for (auto& e : a.successors(v))
          {
            if (e.to == g.sink)
              b.add_edge(v, e.to, a.owner(v) == player::zero ? tally : 0);
            else
              b.add_edge(v, e.to, e.weight);
          }
        // player 1 may tally at any time
        if (a.owner(v) == player::one)
          b.add_edge(v, g.sink, 0);
      }
    b.add_edge(g.sink, out.top, 0);
    b.add_edge(out.top, start, 0);
    out.arena = std::move(b).build();
    return out;
  }
}
