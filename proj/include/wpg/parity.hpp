#pragma once

#include <vector>

#include <wpg/arena.hpp>
#include <wpg/strategy.hpp>

namespace wpg
{
  /// Winning regions of a max-parity game and one positional winning
  /// move per vertex for the player who wins it.
  struct parity_result
  {
    region_t win0;
    // successor chosen by owner(v) when owner(v) wins v, else no_vertex
    std::vector<vertex_t> strategy;

    player winner(vertex_t v) const
    {
      return win0[v] ? player::zero : player::one;
    }
  };

  /// Zielonka's recursive algorithm, run on an explicit frame stack.
  parity_result zielonka(const arena& a);

  /// Max-parity solution with positional strategies for both players.
  solution solve_parity(const arena& a);

  /// Positional strategy of \a p restricted to the region p wins.
  std::vector<vertex_t> positional_choice(const arena& a,
                                          const parity_result& r, player p);
}
