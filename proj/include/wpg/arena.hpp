#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <wpg/errors.hpp>

namespace wpg
{
  using vertex_t = std::uint32_t;
  using color_t = std::uint32_t;
  using weight_t = std::int64_t;

  inline constexpr vertex_t no_vertex = std::numeric_limits<vertex_t>::max();

  enum class player : std::uint8_t
  {
    zero = 0,
    one = 1,
  };

  constexpr player opponent(player p) noexcept
  {
    return p == player::zero ? player::one : player::zero;
  }

  constexpr int index(player p) noexcept
  {
    return static_cast<int>(p);
  }

  /// Player favoured by a color under the max-parity convention.
  constexpr player parity_winner(color_t c) noexcept
  {
    return c % 2 == 0 ? player::zero : player::one;
  }

  /// True if \a answer is even and at least \a request.
  constexpr bool answers(color_t request, color_t answer) noexcept
  {
    return answer % 2 == 0 && answer >= request;
  }

  // vertex -> membership
  using region_t = std::vector<bool>;

  struct edge_t
  {
    vertex_t to;
    weight_t weight;
  };

  /// \brief Immutable game graph with ownership, coloring and edge weights.
  ///
  /// Successor lists are stored in one contiguous array sorted by target
  /// id, so every edge has a stable global index usable by memory
  /// structures.  Every vertex has at least one successor and there is
  /// at most one edge per ordered pair of vertices.
  class arena
  {
  public:
    class builder
    {
    public:
      builder() = default;
      explicit builder(std::size_t reserve_vertices);

      vertex_t add_vertex(player owner, color_t color, std::string name = {});
      void add_edge(vertex_t from, vertex_t to, weight_t weight = 0);

      std::size_t size() const noexcept { return owner_.size(); }

      /// Throws validation_error on dead ends, parallel edges or dangling
      /// targets.
      arena build() &&;

    private:
      std::vector<player> owner_;
      std::vector<color_t> color_;
      std::vector<std::string> name_;
      struct raw_edge
      {
        vertex_t from;
        vertex_t to;
        weight_t weight;
      };
      std::vector<raw_edge> edges_;
    };

    arena() = default;

    std::size_t size() const noexcept { return owner_.size(); }
    std::size_t edge_count() const noexcept { return edges_.size(); }

    player owner(vertex_t v) const { return owner_[v]; }
    color_t color(vertex_t v) const { return color_[v]; }
    const std::string& name(vertex_t v) const { return name_[v]; }
    bool has_names() const noexcept { return has_names_; }

    std::span<const edge_t> successors(vertex_t v) const
    {
      return {edges_.data() + offset_[v], edges_.data() + offset_[v + 1]};
    }

    std::span<const vertex_t> predecessors(vertex_t v) const
    {
      return {pred_.data() + pred_offset_[v],
              pred_.data() + pred_offset_[v + 1]};
    }

    /// Global index of the first edge leaving \a v.
    std::size_t first_edge(vertex_t v) const { return offset_[v]; }
    const edge_t& edge(std::size_t idx) const { return edges_[idx]; }

    /// Global index of edge (from,to), if present.
    std::optional<std::size_t> edge_index(vertex_t from, vertex_t to) const;
    std::optional<weight_t> weight(vertex_t from, vertex_t to) const;
    bool has_edge(vertex_t from, vertex_t to) const
    {
      return edge_index(from, to).has_value();
    }

    /// Largest absolute edge weight W.
    weight_t max_abs_weight() const noexcept { return max_abs_weight_; }
    color_t max_color() const noexcept { return max_color_; }
    /// Number d of distinct odd colors.
    std::size_t odd_color_count() const noexcept { return odd_colors_.size(); }
    /// Distinct odd colors, ascending.
    const std::vector<color_t>& odd_colors() const noexcept
    {
      return odd_colors_;
    }
    std::size_t distinct_color_count() const noexcept
    {
      return distinct_colors_;
    }

    bool operator==(const arena& other) const;

  private:
    std::vector<player> owner_;
    std::vector<color_t> color_;
    std::vector<std::string> name_;
    bool has_names_ = false;
    std::vector<std::size_t> offset_{0};
    std::vector<edge_t> edges_;
    std::vector<std::size_t> pred_offset_{0};
    std::vector<vertex_t> pred_;
    weight_t max_abs_weight_ = 0;
    color_t max_color_ = 0;
    std::vector<color_t> odd_colors_;
    std::size_t distinct_colors_ = 0;
  };

  region_t make_region(std::size_t n, std::span<const vertex_t> members);
  std::vector<vertex_t> members(const region_t& r);
  std::size_t count(const region_t& r);

  /// Attractor and the positional attractor strategy of its owner.
  struct attractor_result
  {
    region_t region;
    // successor for owned vertices in region \ target, no_vertex elsewhere
    std::vector<vertex_t> strategy;
  };

  /// Least fixed point of Attr_p(target).  The strategy picks, for each
  /// owned vertex, the lowest-numbered successor of strictly smaller
  /// attractor rank.
  attractor_result attractor(const arena& a, player p, const region_t& target);

  /// True iff \a region is a trap for player \a p.
  bool is_trap(const arena& a, player p, const region_t& region);

  /// Induced subarena plus the id map back to the parent.
  struct subarena
  {
    wpg::arena arena;
    std::vector<vertex_t> to_parent;
    // parent id -> sub id or no_vertex
    std::vector<vertex_t> from_parent;
  };

  /// Induced subarena on \a keep.  Throws dead_end_error if a kept vertex
  /// has no kept successor.
  subarena restrict(const arena& a, const region_t& keep);

  /// Shifts every color by 2 if some color is below 2.
  struct normalized_arena
  {
    wpg::arena arena;
    // shift applied (0 or 2); original color = new color - shift
    color_t shift = 0;
  };
  normalized_arena normalize_colors(const arena& a);

  /// Copy of \a a with colors and/or weights replaced.
  arena with_colors(const arena& a, std::span<const color_t> colors);
  arena with_weights(const arena& a, std::span<const weight_t> edge_weights);

  weight_t checked_add(weight_t x, weight_t y);
  weight_t checked_mul(weight_t x, weight_t y);

  /// Product-state budget, overridable through WPG_STATE_BUDGET.
  std::size_t state_budget();
  inline constexpr std::size_t default_state_budget = 10'000'000;

  inline constexpr std::uint64_t infinite_cost =
    std::numeric_limits<std::uint64_t>::max();

  /// Amplitude of a finite play prefix: the largest absolute
  /// accumulated weight of its prefixes.  Throws validation_error if the
  /// prefix does not follow edges.
  std::uint64_t ampl(const arena& a, std::span<const vertex_t> prefix);

  /// \brief Ultimately periodic play stem . cycle^omega.
  ///
  /// The cycle is nonempty and the last vertex of the cycle has an edge to
  /// its first vertex.
  struct lasso
  {
    std::vector<vertex_t> stem;
    std::vector<vertex_t> cycle;

    std::size_t length() const noexcept { return stem.size() + cycle.size(); }
    vertex_t at(std::size_t j) const;
  };

  void validate_lasso(const arena& a, const lasso& play);

  /// Cost-of-response at position \a j; infinite_cost if unanswered.
  std::uint64_t cost_of_response(const arena& a, const lasso& play,
                                 std::size_t j);

  /// Max color on the cycle is even.
  bool satisfies_parity(const arena& a, const lasso& play);
  /// limsup of the cost-of-response is finite.
  bool satisfies_weight_parity(const arena& a, const lasso& play);
  /// Weight parity and no request unanswered with infinite cost.
  bool satisfies_bounded_weight_parity(const arena& a, const lasso& play);
  /// limsup of the cost-of-response over the cycle positions.
  std::uint64_t limsup_cost(const arena& a, const lasso& play);
  weight_t cycle_weight(const arena& a, const lasso& play);
}
