#pragma once

#include <vector>

#include <wpg/arena.hpp>
#include <wpg/strategy.hpp>

namespace wpg
{
  enum class condition_kind
  {
    parity,
    finitary_parity,
    parity_with_costs,
    general
  };

  const char* to_string(condition_kind k) noexcept;

  /// Special case implied by the weights alone: all zero, all positive,
  /// all nonnegative, or none of these.
  condition_kind classify_condition(const arena& a);

  /// Does color \a answer answer a request for \a request.
  inline bool is_answer(color_t request, color_t answer) noexcept
  {
    return answers(request, answer);
  }

  /// \brief Energy parity game simulating the bounded game around a pivot.
  ///
  /// Two copies (v,+) and (v,-) of the arena; every move into v' passes a
  /// player-1 gadget (v',p,1) that either continues in polarity p or goes
  /// to the player-0 gadget (v',p,0), which may pump +1 before switching
  /// to the other polarity.  Weights are negated in the + copy.  Vertices
  /// whose color answers the pivot become color-0 sinks.  Gadgets are keyed
  /// by their target vertex and only created when reachable by an edge.
  struct polarized_game
  {
    struct origin
    {
      vertex_t vertex;
      bool minus;
      // -1 for (v,p), otherwise the gadget bit
      int bit;
    };

    wpg::arena product;
    vertex_t pivot = no_vertex;
    std::vector<origin> origins;

    vertex_t copy(vertex_t v, bool minus) const noexcept
    {
      return 2 * v + (minus ? 1 : 0);
    }
  };

  /// Requires all colors >= 2 (see normalize_colors).
  polarized_game polarize(const arena& a, vertex_t pivot);

  /// Bounded parity game with weights: the pivot fixed point over
  /// polarized energy parity games.
  solution solve_bounded_weight_parity(const arena& a,
                                       std::size_t budget = state_budget());

  /// Parity game with weights: the dual fixed point removing player-0
  /// attractors of bounded wins.
  solution solve_weight_parity(const arena& a,
                               std::size_t budget = state_budget());
}
