#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <wpg/arena.hpp>
#include <wpg/parity.hpp>
#include <wpg/strategy.hpp>

namespace wpg
{
  /// Accumulated weights [l, h] of the open requests of one color.
  struct interval
  {
    weight_t l = 0;
    weight_t h = 0;
    bool operator==(const interval&) const = default;
  };

  /// \brief Memory element (o, r) of the b-threshold game.
  ///
  /// \a r holds one entry per odd color of the arena, in ascending color
  /// order; nullopt means no request of that color is open.
  struct threshold_state
  {
    std::uint32_t overflow = 0;
    std::vector<std::optional<interval>> r;
    bool operator==(const threshold_state&) const = default;
  };

  /// (0, r_v): a fresh (0,0) request for an odd color of v, nothing else.
  threshold_state init_state(const arena& a, vertex_t v);

  /// Weight, overflow and request steps for traversing (from, to).
  threshold_state update_state(const arena& a, const threshold_state& m,
                               vertex_t from, vertex_t to, weight_t b);

  /// \brief Reachable part of the b-threshold parity game.
  ///
  /// Built from (v, init(v)) for every v in the start set.  All states
  /// with a saturated overflow counter are merged into one absorbing
  /// color-1 sink, which player 0 loses from.
  class threshold_game
  {
  public:
    threshold_game(const arena& a, weight_t b, const region_t& start,
                   std::size_t budget = state_budget());

    const wpg::arena& product() const noexcept { return product_; }
    const wpg::arena& base() const noexcept { return base_; }
    weight_t bound() const noexcept { return b_; }
    vertex_t sink() const noexcept { return sink_; }
    /// Product id of (v, init(v)), or no_vertex if v was not a start.
    vertex_t initial(vertex_t v) const { return initial_[v]; }
    vertex_t vertex_of(vertex_t s) const;
    /// nullopt for the sink.
    std::optional<threshold_state> state_of(vertex_t s) const;
    /// Product id of (v, m) if it was reached.
    std::optional<vertex_t> find(vertex_t v, const threshold_state& m) const;
    /// Overflow counter of a product state (n for the sink).
    std::uint32_t overflow_of(vertex_t s) const;

    /// Solution of the product parity game.
    const parity_result& result() const noexcept { return result_; }
    bool wins0(vertex_t s) const { return result_.win0[s]; }

    std::size_t odd_color_count() const noexcept { return stride_ - 2; }

  private:
    using code_t = std::uint64_t;
    void encode(vertex_t v, const threshold_state& m, code_t* out) const;
    threshold_state decode(const code_t* key) const;
    std::size_t hash(const code_t* key) const noexcept;
    // slot of key in table_, holding no_vertex if absent
    std::size_t probe(const code_t* key) const noexcept;
    vertex_t intern(const code_t* key, std::size_t budget);

    wpg::arena base_;
    weight_t b_;
    std::size_t stride_;
    std::vector<color_t> odd_;
    std::vector<code_t> keys_;
    std::vector<vertex_t> table_;
    std::vector<vertex_t> initial_;
    vertex_t sink_ = no_vertex;
    wpg::arena product_;
    parity_result result_;
  };

  /// n * d * 6n * (d + 2) * (W + 1) * W with d the number of odd colors.
  /// From this bound on, the threshold problem coincides with winning the
  /// parity game with weights.
  weight_t saturation_bound(const arena& a);

  struct threshold_options
  {
    // build the threshold game even when b >= saturation_bound
    bool force_explicit = false;
    std::size_t budget = state_budget();
  };

  /// Can player 0 keep the limsup cost-of-response from v at most b?
  bool threshold_decide(const arena& a, vertex_t v, weight_t b,
                        const threshold_options& opt = {});

  /// Explicit decision for every start vertex at once.
  region_t threshold_region(const arena& a, weight_t b,
                            std::size_t budget = state_budget());

  /// Least b with threshold_decide true, infinite_cost if none.  Probes
  /// 0, 1, 2, 4, ... and then bisects, so only bounds up to about twice
  /// the answer are ever built explicitly.
  std::uint64_t optimal_cost(const arena& a, vertex_t v,
                             std::size_t budget = state_budget());

  /// Reference: tries b = 0, 1, ..., saturation_bound in order.
  std::uint64_t optimal_cost_linear(const arena& a, vertex_t v,
                                    std::size_t budget = state_budget());

  /// Player-0 strategy keeping the cost from v at most the game's bound.
  /// Memory states are request functions.  Throws not_winning_error.
  finite_state_strategy extract_player0_strategy(const threshold_game& g,
                                                 vertex_t v);

  /// Player-1 strategy pushing the cost from v above the game's bound.
  /// Memory states are (o, r) pairs with o < n; overflows re-seed the
  /// counter instead of incrementing it.  Throws not_winning_error.
  finite_state_strategy extract_player1_strategy(const threshold_game& g,
                                                 vertex_t v);
}
