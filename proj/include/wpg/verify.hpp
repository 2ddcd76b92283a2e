#pragma once

#include <functional>
#include <optional>
#include <vector>

#include <wpg/arena.hpp>
#include <wpg/strategy.hpp>

namespace wpg
{
  /// Reachable part of arena x memory under a fixed strategy.  Vertices of
  /// the strategy owner keep exactly the prescribed edge; opponent vertices
  /// keep all edges.  Colors, owners and weights are inherited.
  struct strategy_product
  {
    wpg::arena product;
    // product id -> (vertex, memory)
    std::vector<std::pair<vertex_t, memory_t>> states;
    // product ids of (v, init(v)) for v in the start set, no_vertex else
    std::vector<vertex_t> initial;
  };

  /// Throws validation_error if a reachable owned vertex has no move or a
  /// reachable update is undefined.
  strategy_product compose_product(const arena& a,
                                   const finite_state_strategy& strategy,
                                   const region_t& start,
                                   std::size_t budget = state_budget());

  struct verification
  {
    bool ok = true;
    // counterexample when !ok
    std::optional<lasso> witness;
  };

  /// Every play from \a start consistent with \a strategy satisfies the
  /// parity objective of the strategy owner.
  verification verify_parity_strategy(const arena& a,
                                      const finite_state_strategy& strategy,
                                      const region_t& start);

  /// Does a player-0 strategy keep the limsup cost-of-response from
  /// \a start at most \a b?  The strategy product is a one-player arena;
  /// its b-threshold game is built and searched for a reachable cycle of
  /// odd maximal color.
  verification verify_cost_bound(const arena& a,
                                 const finite_state_strategy& strategy,
                                 vertex_t start, weight_t b,
                                 std::size_t budget = state_budget());

  /// Choice for vertices not covered by a strategy: (vertex, step) ->
  /// successor.
  using choice_policy = std::function<vertex_t(vertex_t, std::size_t)>;

  struct simulation
  {
    std::vector<vertex_t> prefix;
    // set when a configuration repeated
    std::optional<lasso> play;
    // cost-of-response per position of the lasso (stem then cycle)
    std::vector<std::uint64_t> costs;
  };

  /// Deterministic play from \a start for at most \a steps moves.
  /// Vertices without a strategy move round-robin over their successors
  /// unless \a policy is given; the configuration includes round-robin
  /// counters, so a repetition yields an exact lasso.
  simulation simulate_play(const arena& a,
                           const finite_state_strategy* strategy0,
                           const finite_state_strategy* strategy1,
                           vertex_t start, std::size_t steps,
                           const choice_policy& policy = {});
}
