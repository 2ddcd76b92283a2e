#include <wpg/strategy.hpp>

#include <string>

namespace wpg
{
  namespace
  {
    std::uint64_t key(std::uint64_t hi, std::uint64_t lo)
    {
      return hi << 32 | lo;
    }
  }

  finite_state_strategy::finite_state_strategy(player owner,
                                               std::size_t states,
                                               std::size_t vertices)
    : owner_(owner), states_(states), init_(vertices, 0)
  {
    if (states == 0)
      throw validation_error("a memory structure needs at least one state");
  }

  finite_state_strategy
  finite_state_strategy::positional(const arena& a, player owner,
                                    std::span<const vertex_t> choice)
  {
    finite_state_strategy s(owner, 1, a.size());
    for (vertex_t v = 0; v < a.size(); ++v)
      if (a.owner(v) == owner && choice[v] != no_vertex)
        s.set_move(v, 0, choice[v]);
    for (std::size_t e = 0; e < a.edge_count(); ++e)
      s.set_update(0, e, 0);
    return s;
  }

  void finite_state_strategy::set_init(vertex_t v, memory_t m)
  {
    if (m >= states_)
      throw validation_error("memory state out of range");
    init_.at(v) = m;
  }

  void finite_state_strategy::set_update(memory_t m, std::size_t edge,
                                         memory_t next)
  {
    if (m >= states_ || next >= states_)
      throw validation_error("memory state out of range");
    update_[key(m, edge)] = next;
  }

  memory_t finite_state_strategy::update(memory_t m, std::size_t edge) const
  {
    if (states_ == 1)
      return 0;
    auto it = update_.find(key(m, edge));
    return it == update_.end() ? no_memory : it->second;
  }

  void finite_state_strategy::set_move(vertex_t v, memory_t m, vertex_t succ)
  {
    if (m >= states_)
      throw validation_error("memory state out of range");
    move_[key(m, v)] = succ;
  }

  vertex_t finite_state_strategy::move(vertex_t v, memory_t m) const
  {
    auto it = move_.find(key(m, v));
    return it == move_.end() ? no_vertex : it->second;
  }

  memory_t finite_state_strategy::step(const arena& a, memory_t m,
                                       vertex_t from, vertex_t to) const
  {
    auto idx = a.edge_index(from, to);
    if (!idx)
      throw validation_error("no edge " + std::to_string(from) + " -> "
                             + std::to_string(to));
    return update(m, *idx);
  }

  void finite_state_strategy::validate(const arena& a) const
  {
    if (init_.size() != a.size())
      throw validation_error("strategy and arena disagree on vertex count");
    for (auto& [k, succ] : move_)
      {
        vertex_t v = static_cast<vertex_t>(k & 0xffffffffu);
        if (v >= a.size() || a.owner(v) != owner_)
          throw validation_error("next-move defined at vertex "
                                 + std::to_string(v)
                                 + " not owned by the strategy owner");
        if (!a.has_edge(v, succ))
          throw validation_error("next-move " + std::to_string(v) + " -> "
                                 + std::to_string(succ)
                                 + " does not follow an edge");
      }
    for (auto& [k, next] : update_)
      if ((k & 0xffffffffu) >= a.edge_count())
        throw validation_error("update references an unknown edge");
  }

  bool solution::is_partition() const
  {
    if (win0.size() != win1.size())
      return false;
    for (std::size_t v = 0; v < win0.size(); ++v)
      if (win0[v] == win1[v])
        return false;
    return true;
  }

  solution solution_from_win0(region_t win0)
  {
    solution s;
    s.win1.resize(win0.size());
    for (std::size_t v = 0; v < win0.size(); ++v)
      s.win1[v] = !win0[v];
    s.win0 = std::move(win0);
    return s;
  }
}
