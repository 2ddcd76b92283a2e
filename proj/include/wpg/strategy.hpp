#pragma once

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include <wpg/arena.hpp>

namespace wpg
{
  using memory_t = std::uint32_t;
  inline constexpr memory_t no_memory = std::numeric_limits<memory_t>::max();

  /// \brief Strategy implemented by a memory structure and a next-move
  /// function.
  ///
  /// Memory states are 0..size()-1.  The update function is indexed by the
  /// global edge index of the arena the strategy was built for; entries
  /// that are never reached may stay undefined.  Positional strategies are
  /// the one-state case.
  class finite_state_strategy
  {
  public:
    finite_state_strategy(player owner, std::size_t states,
                          std::size_t vertices);

    /// One-state strategy from a successor table (no_vertex for vertices
    /// without a prescribed move).
    static finite_state_strategy positional(const arena& a, player owner,
                                            std::span<const vertex_t> choice);

    player owner() const noexcept { return owner_; }
    std::size_t size() const noexcept { return states_; }
    std::size_t vertex_count() const noexcept { return init_.size(); }

    void set_init(vertex_t v, memory_t m);
    memory_t init(vertex_t v) const { return init_[v]; }

    void set_update(memory_t m, std::size_t edge, memory_t next);
    /// no_memory if undefined
    memory_t update(memory_t m, std::size_t edge) const;

    void set_move(vertex_t v, memory_t m, vertex_t succ);
    /// no_vertex if undefined
    vertex_t move(vertex_t v, memory_t m) const;

    /// Update by the edge (from,to) of \a a.
    memory_t step(const arena& a, memory_t m, vertex_t from,
                  vertex_t to) const;

    /// Structural check: moves follow edges and the owner owns the vertex.
    void validate(const arena& a) const;

    const std::unordered_map<std::uint64_t, memory_t>& update_table() const
    {
      return update_;
    }
    const std::unordered_map<std::uint64_t, vertex_t>& move_table() const
    {
      return move_;
    }

  private:
    player owner_;
    std::size_t states_;
    std::vector<memory_t> init_;
    // key = m << 32 | edge
    std::unordered_map<std::uint64_t, memory_t> update_;
    // key = m << 32 | vertex
    std::unordered_map<std::uint64_t, vertex_t> move_;
  };

  /// Winning regions plus optional strategies.
  struct solution
  {
    region_t win0;
    region_t win1;
    std::optional<finite_state_strategy> strategy0;
    std::optional<finite_state_strategy> strategy1;

    const region_t& winning(player p) const
    {
      return p == player::zero ? win0 : win1;
    }

    /// win0 and win1 partition the vertices.
    bool is_partition() const;
  };

  solution solution_from_win0(region_t win0);
}
