#pragma once

#include <vector>

#include <wpg/arena.hpp>
#include <wpg/instance.hpp>

namespace wpg
{
  /// Subdivides every edge e = (v,v') by a player-0 vertex of color 1 with
  /// a -1 self-loop; (v,e) carries w(e) and (e,v') weighs 0.  Original
  /// vertices keep their ids, the vertex for edge index i is n + i.
  /// Requires all colors > 1.
  arena energy_to_corridor(const arena& a);

  struct entry_arena
  {
    wpg::arena arena;
    // v -> its entry vertex
    std::vector<vertex_t> entry;
  };

  /// Adds for every v an entry vertex of color 2*max+1 with a single
  /// 0-weight edge to v.  Entry of v is n + v.
  entry_arena corridor_to_bounded(const arena& a);

  struct reset_arena
  {
    wpg::arena arena;
    vertex_t top = no_vertex;
  };

  /// Every edge passes a player-1 vertex of color 0 that may divert to a
  /// player-1 vertex top of color 2*max, which returns to the pivot.  The
  /// original weight sits on (v, e); edge index i becomes vertex n + i and
  /// top is n + |E|.
  reset_arena bounded_to_weight(const arena& a, vertex_t pivot);

  /// Weights (n+1)w + 1, an integer form of w + 1/(n+1).
  arena mean_payoff_to_energy(const arena& a);

  /// \brief Countdown game: arena, credit and sink.
  struct countdown_game
  {
    wpg::arena arena;
    weight_t credit = 0;
    vertex_t sink = 0;
  };

  /// Throws invalid_countdown_error naming the violated condition.
  void validate_countdown(const countdown_game& g);

  /// Extracts the countdown game of an instance (sink from metadata
  /// "sink", else the unique player-1 vertex with a self-loop).
  countdown_game countdown_of(const game_instance& g);

  /// Backward induction over (vertex, remaining credit).
  bool solve_countdown(const countdown_game& g, vertex_t v,
                       std::size_t budget = state_budget());

  struct threshold_instance
  {
    wpg::arena arena;
    vertex_t top = no_vertex;
    weight_t bound = 0;
  };

  /// Weight parity arena whose threshold problem at (top, credit) is
  /// equivalent to the countdown game from \a start.
  threshold_instance countdown_to_threshold(const countdown_game& g,
                                            vertex_t start);
}
