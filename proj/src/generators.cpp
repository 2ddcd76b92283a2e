#include <wpg/generators.hpp>

#include <algorithm>
#include <numeric>
#include <random>

namespace wpg
{
  game_instance gen_memory_family(std::uint32_t n, weight_t w)
  {
    if (n < 1 || w < 1)
      throw validation_error("memory family needs n >= 1 and W >= 1");
    arena::builder b(n + 4);
    const vertex_t req = b.add_vertex(player::one, 3, "v_req");
    for (std::uint32_t i = 1; i <= n; ++i)
      b.add_vertex(player::one, 1, "v'_req," + std::to_string(i));
    const vertex_t del = b.add_vertex(player::zero, 1, "v_del");
    const vertex_t inner = b.add_vertex(player::one, 2, "v'_ans");
    const vertex_t outer = b.add_vertex(player::one, 4, "v_ans");
    b.add_edge(req, 1, 0);
    for (vertex_t i = 1; i < n; ++i)
      b.add_edge(i, i + 1, w);
    b.add_edge(n, del, w);
    b.add_edge(del, del, -1);
    b.add_edge(del, inner, 0);
    b.add_edge(inner, 1, 0);
    b.add_edge(inner, outer, 0);
    b.add_edge(outer, req, 0);
    game_instance g{game_kind::weight_parity, std::move(b).build(), {}, {}};
    g.set("family", "memory");
    g.set("n", std::to_string(n));
    g.set("W", std::to_string(w));
    return g;
  }

  game_instance gen_cost_family(std::uint32_t n, weight_t w)
  {
    if (n < 2 || w < 0)
      throw validation_error("cost family needs n >= 2 and W >= 0");
    arena::builder b(n);
    for (std::uint32_t i = 1; i <= n; ++i)
      {
        const color_t c = i == 1 ? 1 : i == n ? 2 : 0;
        b.add_vertex(player::one, c, "v" + std::to_string(i));
      }
    for (vertex_t i = 0; i < n; ++i)
      b.add_edge(i, (i + 1) % n, w);
    game_instance g{game_kind::weight_parity, std::move(b).build(), {}, {}};
    g.set("family", "cost");
    g.set("n", std::to_string(n));
    g.set("W", std::to_string(w));
    return g;
  }

  namespace
  {
    arena fig4_arena(bool extended)
    {
      arena::builder b;
      b.add_vertex(player::zero, 5, "v0");
      b.add_vertex(player::one, 4, "v1");
      b.add_vertex(player::one, 4, "v2");
      b.add_vertex(player::one, 6, "v3");
      b.add_edge(0, 1, 0);
      b.add_edge(0, 2, 0);
      b.add_edge(1, 1, 1);
      b.add_edge(1, 3, 0);
      b.add_edge(2, 2, -1);
      b.add_edge(2, 3, 0);
      b.add_edge(3, 0, 0);
      if (extended)
        {
          b.add_vertex(player::zero, 3, "v-1");
          b.add_edge(4, 0, 0);
        }
      return std::move(b).build();
    }

    game_instance fig2(bool right)
    {
      arena::builder b;
      if (!right)
        {
          b.add_vertex(player::zero, 1, "v0");
          b.add_vertex(player::zero, 2, "v1");
          b.add_edge(0, 1, -1);
          b.add_edge(1, 0, -1);
        }
      else
        {
          b.add_vertex(player::zero, 1, "v0");
          b.add_vertex(player::one, 0, "v1");
          b.add_vertex(player::zero, 2, "v2");
          b.add_edge(0, 1, 0);
          b.add_edge(1, 1, 1);
          b.add_edge(1, 2, 0);
          b.add_edge(2, 0, 0);
        }
      game_instance g{game_kind::weight_parity, std::move(b).build(), {}, {}};
      g.set("figure", right ? "fig2-right" : "fig2-left");
      g.set("reconstructed", "true");
      return g;
    }
  }

  std::vector<named_instance> gen_figure_examples()
  {
    std::vector<named_instance> out;
    for (bool ext : {false, true})
      {
        game_instance g{game_kind::bounded_weight_parity, fig4_arena(ext), {},
                        {}};
        const char* name = ext ? "fig4-extended" : "fig4";
        g.set("figure", name);
        if (ext)
          g.set("reconstructed", "true");
        out.push_back({name, std::move(g)});
      }
    out.push_back({"fig2-left", fig2(false)});
    out.push_back({"fig2-right", fig2(true)});
    return out;
  }

  game_instance figure(const std::string& name)
  {
    for (auto& f : gen_figure_examples())
      if (f.name == name)
        return f.game;
    throw validation_error("unknown figure '" + name + "'");
  }

  game_instance gen_random(std::uint64_t seed, std::uint32_t n,
                           color_t max_color, weight_t max_w, double density,
                           game_kind kind)
  {
    if (n < 1 || max_w < 0 || density < 0 || density > 1)
      throw validation_error("bad random generator parameters");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> coin(0, 1);
    std::uniform_int_distribution<color_t> color(0, max_color);
    std::uniform_int_distribution<weight_t> weight(-max_w, max_w);
    std::uniform_int_distribution<vertex_t> target(0, n - 1);
    std::bernoulli_distribution edge(density);
    arena::builder b(n);
    for (vertex_t v = 0; v < n; ++v)
      {
        const player p = coin(rng) ? player::one : player::zero;
        b.add_vertex(p, color(rng));
      }
    for (vertex_t v = 0; v < n; ++v)
      {
        bool any = false;
        for (vertex_t u = 0; u < n; ++u)
          if (edge(rng))
            {
              b.add_edge(v, u, weight(rng));
              any = true;
            }
        if (!any)
          b.add_edge(v, target(rng), weight(rng));
      }
    game_instance g{kind, std::move(b).build(), {}, {}};
    g.set("seed", std::to_string(seed));
    return g;
  }

  game_instance gen_random_countdown(std::uint64_t seed, std::uint32_t n,
                                     weight_t max_decrement, weight_t credit)
  {
    if (n < 2 || max_decrement < 1 || credit < 0)
      throw validation_error("bad countdown generator parameters");
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution coin(0.5);
    std::vector<player> owner(n, player::one);
    // vertex 0 is the sink, vertex 1 always belongs to player 0
    for (vertex_t v = 2; v < n; ++v)
      owner[v] = coin(rng) ? player::one : player::zero;
    owner[1] = player::zero;
    std::vector<vertex_t> v0, v1;
    for (vertex_t v = 1; v < n; ++v)
      (owner[v] == player::zero ? v0 : v1).push_back(v);

    arena::builder b(n);
    b.add_vertex(player::one, 0, "bot");
    for (vertex_t v = 1; v < n; ++v)
      b.add_vertex(owner[v], 0);
    b.add_edge(0, 0, 0);
    std::vector<weight_t> pool(static_cast<std::size_t>(max_decrement));
    std::iota(pool.begin(), pool.end(), 1);
    for (vertex_t v : v0)
      {
        b.add_edge(v, 0, 0);
        std::shuffle(pool.begin(), pool.end(), rng);
        std::size_t next = 0;
        for (vertex_t u : v1)
          if (next < pool.size() && coin(rng))
            b.add_edge(v, u, -pool[next++]);
      }
    std::uniform_int_distribution<std::size_t> pick(0, v0.size() - 1);
    for (vertex_t u : v1)
      {
        bool any = false;
        for (vertex_t v : v0)
          if (coin(rng))
            {
              b.add_edge(u, v, 0);
              any = true;
            }
        if (!any)
          b.add_edge(u, v0[pick(rng)], 0);
      }
    game_instance g{game_kind::countdown, std::move(b).build(), credit, {}};
    g.set("sink", "0");
    g.set("seed", std::to_string(seed));
    return g;
  }
}
