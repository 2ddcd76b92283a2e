#pragma once

#include <optional>
#include <vector>

#include <wpg/arena.hpp>
#include <wpg/parity.hpp>
#include <wpg/strategy.hpp>

namespace wpg
{
  /// \brief Parity game over (vertex, energy) pairs with saturating energy.
  ///
  /// Moving along (v,v') from (v,e) leads to (v', min(e + w, cap)) when
  /// e + w >= 0 and to an odd-colored sink otherwise.
  ///
  /// With \a escape set, exceeding the cap instead leads to a copy of the
  /// base arena without energy, which over-approximates player 0.
  class credit_game
  {
  public:
    credit_game(const arena& base, weight_t cap,
                std::size_t budget = state_budget(), bool escape = false);

    weight_t cap() const noexcept { return cap_; }
    const wpg::arena& product() const noexcept { return product_; }
    std::size_t base_size() const noexcept { return base_size_; }

    vertex_t state(vertex_t v, weight_t energy) const
    {
      return static_cast<vertex_t>(v * static_cast<std::size_t>(cap_ + 1)
                                   + static_cast<std::size_t>(energy));
    }
    vertex_t sink() const noexcept
    {
      return static_cast<vertex_t>(product_.size() - 1);
    }
    bool is_sink(vertex_t s) const noexcept { return s == sink(); }
    bool escapes() const noexcept { return escape_; }
    /// Energy-free copy of \a v (escape mode only).
    vertex_t escaped(vertex_t v) const
    {
      return static_cast<vertex_t>(base_size_ * static_cast<std::size_t>(cap_ + 1) + v);
    }
    vertex_t vertex_of(vertex_t s) const
    {
      return static_cast<vertex_t>(s / static_cast<std::size_t>(cap_ + 1));
    }
    weight_t energy_of(vertex_t s) const
    {
      return static_cast<weight_t>(s % static_cast<std::size_t>(cap_ + 1));
    }

  private:
    weight_t cap_;
    std::size_t base_size_;
    bool escape_;
    wpg::arena product_;
  };

  /// Initial credit (n-1)W under which every winnable vertex is won.
  weight_t sufficient_credit(const arena& a);

  /// Energy cap max((n-1)W, (n*s-1)W + 1) with s = n*d*W, d the number of
  /// distinct colors.  Any finite-state winning strategy of size s keeps
  /// every infix above -(n*s-1)W - 1, so saturating there loses nothing.
  weight_t energy_cap(const arena& a);

  struct credit_solution
  {
    credit_game game;
    parity_result result;

    bool wins0(vertex_t v, weight_t energy) const
    {
      return result.win0[game.state(v, energy)];
    }
  };

  credit_solution solve_credit_game(const arena& a, weight_t cap,
                                    std::size_t budget = state_budget(),
                                    bool escape = false);

  /// Winners of (v, e) for all v and 0 <= e <= c0 = (n-1)W, each computed
  /// exactly.  Saturating games (sound for player 0) are solved at growing
  /// caps.  Their player-1 answers are confirmed either by a positional
  /// player-1 strategy read off the game (credit c0 only) or by an escape
  /// game (sound for player 1); at energy_cap(a) the saturating game is
  /// exact.  Only vertices flagged in \a query need confirming.
  struct credit_table
  {
    weight_t c0 = 0;
    // wins[v * (c0 + 1) + e]
    std::vector<bool> wins;
    // saturating solution at the cap where agreement was reached
    std::optional<credit_solution> lower;

    bool wins0(vertex_t v, weight_t e) const
    {
      return wins[static_cast<std::size_t>(v) * static_cast<std::size_t>(c0 + 1)
                  + static_cast<std::size_t>(e)];
    }
  };

  credit_table solve_credits(const arena& a, const region_t& query,
                             bool all_credits,
                             std::size_t budget = state_budget());

  /// Player-0 winning region of the energy parity game once player 1 is
  /// fixed to the positional \a choice1 (no_vertex keeps all edges):
  /// the vertices that can reach a cycle of nonnegative weight whose
  /// largest color is even.
  region_t energy_parity_win0_against(const arena& a,
                                      std::span<const vertex_t> choice1);

  /// Existential-credit energy parity game.  strategy0 uses credit values
  /// 0..cap as memory states.
  solution solve_energy_parity(const arena& a,
                               std::size_t budget = state_budget());

  /// Same, with an explicit cap instead of energy_cap(a).
  solution solve_energy_parity_capped(const arena& a, weight_t cap,
                                      std::size_t budget = state_budget());

  /// Whether player 0 wins the energy parity game from \a v.  Only the
  /// part of the arena reachable from \a v is unfolded.
  bool energy_parity_wins0(const arena& a, vertex_t v,
                           std::size_t budget = state_budget());

  /// Least credit c <= (n-1)W winning from \a v, or nullopt if player 1
  /// wins \a v.
  std::optional<weight_t> minimal_initial_credit(
    const arena& a, vertex_t v, std::size_t budget = state_budget());

  struct infix_drop_report
  {
    bool ok = true;
    // infix reaching the bound, or a negative cycle repeated once
    std::vector<vertex_t> witness;
    weight_t bound = 0;
  };

  /// Checks that every infix of every play from \a start consistent with
  /// \a strategy weighs more than -(n*s-1)W-1, s the strategy size.
  infix_drop_report check_infix_drop_bound(const finite_state_strategy& strategy,
                                           const arena& a,
                                           const region_t& start);
}
