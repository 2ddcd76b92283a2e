#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <wpg/instance.hpp>

namespace wpg
{
  /// Request, a chain of n weight-W steps, a player-0 vertex that may loop
  /// with weight -1, and two nested answers.  Player 0 wins everywhere but
  /// needs nW + 1 memory states.  Vertex ids: 0 = req, 1..n = chain,
  /// n+1 = del, n+2 = inner answer, n+3 = outer answer.
  game_instance gen_memory_family(std::uint32_t n, weight_t w);

  /// Player-1 cycle v_1 .. v_n of weight-W edges; v_1 requests color 1,
  /// v_n answers with 2.  The optimal cost from v_1 is (n-1)W.
  game_instance gen_cost_family(std::uint32_t n, weight_t w);

  struct named_instance
  {
    std::string name;
    game_instance game;
  };

  /// "fig4", "fig4-extended", "fig2-left", "fig2-right".
  std::vector<named_instance> gen_figure_examples();
  game_instance figure(const std::string& name);

  /// Uniform owners, colors in 0..max_color, weights in [-max_w, max_w];
  /// each ordered pair (including self-loops) is an edge with probability
  /// \a density, and vertices left without a successor get one at random.
  game_instance gen_random(std::uint64_t seed, std::uint32_t n,
                           color_t max_color, weight_t max_w, double density,
                           game_kind kind = game_kind::weight_parity);

  /// Random countdown game on n vertices (vertex 0 is the sink) with
  /// decrements in 1..max_decrement and the given credit.
  game_instance gen_random_countdown(std::uint64_t seed, std::uint32_t n,
                                     weight_t max_decrement, weight_t credit);
}
