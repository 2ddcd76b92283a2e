// Acceptance suite: one PASS/FAIL line per criterion.

#include <wpg/energy.hpp>
#include <wpg/generators.hpp>
#include <wpg/io.hpp>
#include <wpg/parity.hpp>
#include <wpg/reductions.hpp>
#include <wpg/threshold.hpp>
#include <wpg/verify.hpp>
#include <wpg/weights.hpp>

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>

using namespace wpg;

namespace
{
  struct outcome
  {
    bool pass = true;
    std::ostringstream detail;

    void require(bool ok, const std::string& what)
    {
      if (!ok && pass)
        detail << "first failure: " << what << "; ";
      pass = pass && ok;
    }
  };

  bool all_of(const region_t& r)
  {
    return count(r) == r.size();
  }

  bool none_of(const region_t& r)
  {
    return count(r) == 0;
  }

  std::string seed_tag(std::uint64_t seed)
  {
    return "seed " + std::to_string(seed);
  }

  region_t single(std::size_t n, vertex_t v)
  {
    region_t r(n, false);
    r[v] = true;
    return r;
  }

  // 1 -------------------------------------------------------------------

  void figures(outcome& out)
  {
    const arena fig4 = figure("fig4").arena;
    out.require(solve_bounded_weight_parity(fig4).win1[0],
                "fig4 v0 not won by player 1 in the bounded game");
    const auto pg = polarize(fig4, 0);
    out.require(!solve_energy_parity(pg.product).win0[pg.copy(0, false)],
                "fig4 (v0,+) not won by player 1 in the energy game");

    const arena ext = figure("fig4-extended").arena;
    const auto pe = polarize(ext, 4);
    out.require(solve_energy_parity(pe.product).win0[pe.copy(4, false)],
                "extended (v-1,+) not won by player 0 in the energy game");
    out.require(solve_bounded_weight_parity(ext).win1[4],
                "extended v-1 not won by player 1 in the bounded game");

    const arena left = figure("fig2-left").arena;
    const arena right = figure("fig2-right").arena;
    out.require(all_of(solve_weight_parity(left).win0),
                "fig2-left weight parity");
    out.require(none_of(solve_energy_parity(left).win0),
                "fig2-left energy parity");
    out.require(none_of(solve_weight_parity(right).win0),
                "fig2-right weight parity");
    out.require(all_of(solve_energy_parity(right).win0),
                "fig2-right energy parity");
    out.detail << "fig4, fig4-extended, fig2-left, fig2-right";
  }

  // 2 -------------------------------------------------------------------

  finite_state_strategy at_del(const arena& a, vertex_t del, vertex_t succ)
  {
    std::vector<vertex_t> choice(a.size(), no_vertex);
    choice[del] = succ;
    return finite_state_strategy::positional(a, player::zero, choice);
  }

  finite_state_strategy counting(const arena& a, vertex_t del,
                                 vertex_t inner, memory_t loops)
  {
    finite_state_strategy s(player::zero, loops + 1, a.size());
    for (std::size_t i = 0; i < a.edge_count(); ++i)
      for (memory_t m = 0; m <= loops; ++m)
        s.set_update(m, i, m);
    const auto self = *a.edge_index(del, del);
    const auto leave = *a.edge_index(del, inner);
    for (memory_t m = 0; m <= loops; ++m)
      {
        s.set_update(m, self, std::min(m + 1, loops));
        s.set_update(m, leave, 0);
        s.set_move(del, m, m < loops ? del : inner);
      }
    return s;
  }

  void families(outcome& out)
  {
    for (auto [n, w] : {std::pair{2u, 1}, {4u, 2}, {5u, 3}})
      {
        const arena a = gen_cost_family(n, w).arena;
        const auto c = optimal_cost(a, 0);
        out.require(c == static_cast<std::uint64_t>((n - 1) * w),
                    "cost family n=" + std::to_string(n) + " gave "
                      + std::to_string(c));
        out.detail << "cost(" << n << "," << w << ")=" << c << " ";
      }

    const std::uint32_t n = 2;
    const weight_t w = 2;
    const arena a = gen_memory_family(n, w).arena;
    const vertex_t del = n + 1;
    const vertex_t inner = n + 2;
    out.require(all_of(solve_weight_parity(a).win0),
                "memory family not won everywhere by player 0");
    const auto all = region_t(a.size(), true);
    out.require(!verify_parity_strategy(a, at_del(a, del, del), all).ok,
                "always-loop passes parity");
    bool never_fails = true;
    for (weight_t b : {0, 1, 2, 4, 8, 16, 64})
      never_fails = never_fails
                    && !verify_cost_bound(a, at_del(a, del, inner), 0, b).ok;
    out.require(never_fails, "never-loop passes a cost bound");
    const auto s = counting(a, del, inner, n * w);
    out.require(s.size() == 5, "counting strategy size");
    out.require(verify_cost_bound(a, s, 0, n * w).ok,
                "counting strategy fails b = nW");
    out.detail << "memory(2,2): positional strategies rejected, 5-state "
                  "strategy certified at b=4";
  }

  // 3 -------------------------------------------------------------------

  void differential(outcome& out)
  {
    constexpr int instances = 500;
    constexpr std::size_t probe_budget = 1'000'000;
    int exact = 0;
    weight_t least_probe = -1;
    std::size_t vertices = 0;
    for (int i = 0; i < instances; ++i)
      {
        const std::uint64_t seed = 1000 + i;
        const double density = 0.2 + 0.1 * (i % 4);
        const arena a = gen_random(seed, 1 + i % 6, 4, 2, density).arena;
        vertices += a.size();
        const region_t wp = solve_weight_parity(a).win0;
        const weight_t sat = saturation_bound(a);
        // largest explicit bound within budget, doubling up to sat
        region_t region;
        weight_t probe = -1;
        for (weight_t b = std::min<weight_t>(2, sat);;
             b = std::min(sat, 2 * b))
          {
            try
              {
                region = threshold_region(a, b, probe_budget);
                probe = b;
              }
            catch (const capacity_error&)
              {
                break;
              }
            if (b == sat)
              break;
          }
        out.require(probe >= 0, seed_tag(seed) + ": no explicit bound fits");
        if (probe < 0)
          continue;
        if (probe == sat)
          ++exact;
        else if (least_probe < 0 || probe < least_probe)
          least_probe = probe;
        out.require(region == wp, seed_tag(seed) + ": regions differ at b="
                                    + std::to_string(probe));
      }
    out.detail << instances << " instances, " << vertices << " vertices; "
               << exact << " compared at the saturation bound, the rest at "
                  "b >= "
               << least_probe << " (player-0 side exact by monotonicity)";
  }

  // 4 -------------------------------------------------------------------

  void reductions(outcome& out)
  {
    constexpr int instances = 200;
    for (int i = 0; i < instances; ++i)
      {
        const std::uint64_t seed = 5000 + i;
        const arena base =
          gen_random(seed, 1 + i % 4, 4, 2, 0.25 + 0.1 * (i % 3)).arena;
        const arena a = normalize_colors(base).arena;
        const auto energy = solve_energy_parity(a).win0;
        const auto chain = corridor_to_bounded(energy_to_corridor(a));
        const auto bounded = solve_bounded_weight_parity(chain.arena).win0;
        for (vertex_t v = 0; v < a.size(); ++v)
          out.require(energy[v] == bounded[chain.entry[v]],
                      seed_tag(seed) + ": energy vs corridor at "
                        + std::to_string(v));
      }
    for (int i = 0; i < instances; ++i)
      {
        const std::uint64_t seed = 7000 + i;
        const arena a =
          gen_random(seed, 1 + i % 4, 4, 2, 0.25 + 0.1 * (i % 3)).arena;
        const auto bounded = solve_bounded_weight_parity(a).win0;
        for (vertex_t v = 0; v < a.size(); ++v)
          {
            const auto r = bounded_to_weight(a, v);
            out.require(bounded[v] == solve_weight_parity(r.arena).win0[v],
                        seed_tag(seed) + ": bounded vs reset game at "
                          + std::to_string(v));
          }
      }
    out.detail << instances << " instances per chain";
  }

  // 5 -------------------------------------------------------------------

  void countdown(outcome& out)
  {
    constexpr int instances = 200;
    int won = 0;
    for (int i = 0; i < instances; ++i)
      {
        const std::uint64_t seed = 9000 + i;
        const auto n = static_cast<std::uint32_t>(3 + i % 6);
        const weight_t credit = 1 + i % 12;
        const auto inst = gen_random_countdown(seed, n, 4, credit);
        const auto g = countdown_of(inst);
        const vertex_t start = 1;
        const bool direct = solve_countdown(g, start);
        const auto t = countdown_to_threshold(g, start);
        const bool via = threshold_decide(t.arena, t.top, t.bound);
        won += direct;
        out.require(direct == via, seed_tag(seed) + ": countdown "
                                     + std::to_string(direct) + " vs "
                                     + std::to_string(via));
      }
    out.detail << instances << " games, player 0 wins " << won;
  }

  // 6 -------------------------------------------------------------------

  void collapse(outcome& out)
  {
    constexpr int instances = 200;
    for (int i = 0; i < instances; ++i)
      {
        const std::uint64_t seed = 11000 + i;
        const arena a =
          gen_random(seed, 1 + i % 6, 5, 0, 0.2 + 0.1 * (i % 4)).arena;
        const auto p = solve_parity(a).win0;
        out.require(solve_weight_parity(a).win0 == p,
                    seed_tag(seed) + ": weight parity");
        out.require(solve_bounded_weight_parity(a).win0 == p,
                    seed_tag(seed) + ": bounded");
        out.require(solve_energy_parity(a).win0 == p,
                    seed_tag(seed) + ": energy parity");
      }
    out.detail << instances << " zero-weight instances";
  }

  // 7 -------------------------------------------------------------------

  void threshold_properties(outcome& out)
  {
    constexpr int instances = 100;
    int compared = 0;
    int extracted = 0;
    for (int i = 0; i < instances; ++i)
      {
        const std::uint64_t seed = 13000 + i;
        const arena a =
          gen_random(seed, 1 + i % 5, 3, 1 + i % 2, 0.25 + 0.1 * (i % 3))
            .arena;
        // monotonicity in b
        region_t prev(a.size(), false);
        for (weight_t b : {0, 1, 2, 4, 8})
          {
            const auto r = threshold_region(a, b);
            for (vertex_t v = 0; v < a.size(); ++v)
              out.require(!prev[v] || r[v], seed_tag(seed) + ": not monotone");
            prev = r;
          }
        const weight_t sat = saturation_bound(a);
        for (vertex_t v = 0; v < a.size(); ++v)
          {
            const auto c = optimal_cost(a, v);
            if (sat <= 200)
              {
                ++compared;
                out.require(c == optimal_cost_linear(a, v),
                            seed_tag(seed) + ": binary vs linear cost");
              }
            if (c == infinite_cost)
              continue;
            const auto b = static_cast<weight_t>(c);
            threshold_game g(a, b, single(a.size(), v));
            const auto s = extract_player0_strategy(g, v);
            ++extracted;
            out.require(verify_cost_bound(a, s, v, b).ok,
                        seed_tag(seed) + ": extracted strategy rejected");
          }
      }
    out.detail << instances << " instances; " << compared
               << " linear comparisons; " << extracted
               << " extracted strategies verified";
  }

  // 8 -------------------------------------------------------------------

  void structural(outcome& out)
  {
    constexpr int instances = 150;
    for (int i = 0; i < instances; ++i)
      {
        const std::uint64_t seed = 17000 + i;
        const auto inst =
          gen_random(seed, 1 + i % 4, 4, 2, 0.25 + 0.1 * (i % 3));
        const arena& a = inst.arena;
        const std::string tag = seed_tag(seed);

        for (const auto& s :
             {solve_parity(a), solve_weight_parity(a),
              solve_bounded_weight_parity(a), solve_energy_parity(a)})
          out.require(s.is_partition(), tag + ": not determined");

        // attractors: target inside, complement a trap, strategy descends
        for (player p : {player::zero, player::one})
          {
            region_t target(a.size(), false);
            for (vertex_t v = 0; v < a.size(); v += 2)
              target[v] = true;
            const auto at = attractor(a, p, target);
            region_t rest(a.size());
            for (vertex_t v = 0; v < a.size(); ++v)
              {
                rest[v] = !at.region[v];
                out.require(!target[v] || at.region[v],
                            tag + ": attractor misses target");
                if (at.region[v] && !target[v] && a.owner(v) == p)
                  out.require(at.strategy[v] != no_vertex
                                && at.region[at.strategy[v]],
                              tag + ": attractor strategy leaves");
              }
            out.require(is_trap(a, p, rest), tag + ": complement not a trap");
          }

        // credit games: monotone in the credit, robust under a larger cap
        const weight_t cap = energy_cap(a);
        const auto lo = solve_credit_game(a, cap);
        for (vertex_t v = 0; v < a.size(); ++v)
          for (weight_t e = 0; e < cap; ++e)
            out.require(!lo.wins0(v, e) || lo.wins0(v, e + 1),
                        tag + ": credit not monotone");
        out.require(solve_energy_parity_capped(a, cap).win0
                      == solve_energy_parity_capped(a, 2 * cap).win0,
                    tag + ": doubling the cap changes the energy winner");

        // threshold products never decrease the overflow counter
        const threshold_game g(a, 2, region_t(a.size(), true));
        const arena& t = g.product();
        for (vertex_t s = 0; s < t.size(); ++s)
          for (auto& e : t.successors(s))
            out.require(g.overflow_of(e.to) >= g.overflow_of(s),
                        tag + ": overflow counter decreased");

        out.require(parse_instance(serialize(inst)) == inst,
                    tag + ": round trip");
      }
    out.detail << instances << " instances";
  }

  struct criterion
  {
    const char* name;
    std::function<void(outcome&)> run;
  };
}

int main()
{
  const criterion criteria[] = {
    {"figure instances", figures},
    {"lower-bound families", families},
    {"weight parity vs threshold differential", differential},
    {"reduction chains", reductions},
    {"countdown oracle", countdown},
    {"zero-weight collapse", collapse},
    {"threshold properties", threshold_properties},
    {"structural invariants", structural},
  };
  int failed = 0;
  int id = 0;
  for (const auto& c : criteria)
    {
      ++id;
      outcome out;
      const auto t0 = std::chrono::steady_clock::now();
      try
        {
          c.run(out);
        }
      catch (const std::exception& e)
        {
          out.pass = false;
          out.detail << "exception: " << e.what();
        }
      const double secs = std::chrono::duration<double>(
                            std::chrono::steady_clock::now() - t0)
                            .count();
      std::printf("%s criterion %d (%s) %.2fs: %s\n",
                  out.pass ? "PASS" : "FAIL", id, c.name, secs,
                  out.detail.str().c_str());
      std::fflush(stdout);
      failed += !out.pass;
    }
  return failed == 0 ? 0 : 1;
}
