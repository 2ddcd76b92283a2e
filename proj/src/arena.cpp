#include <wpg/arena.hpp>

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <set>
#include <string>

namespace wpg
{
  arena::builder::builder(std::size_t reserve_vertices)
  {
    owner_.reserve(reserve_vertices);
    color_.reserve(reserve_vertices);
    name_.reserve(reserve_vertices);
  }

  vertex_t arena::builder::add_vertex(player owner, color_t color,
                                      std::string name)
  {
    owner_.push_back(owner);
    color_.push_back(color);
    name_.push_back(std::move(name));
    return static_cast<vertex_t>(owner_.size() - 1);
  }

  void arena::builder::add_edge(vertex_t from, vertex_t to, weight_t weight)
  {
    edges_.push_back({from, to, weight});
  }

  arena arena::builder::build() &&
  {
    const std::size_t n = owner_.size();
    arena a;
    for (auto& e : edges_)
      if (e.from >= n || e.to >= n)
        throw validation_error("edge " + std::to_string(e.from) + " -> "
                               + std::to_string(e.to)
                               + " references an undeclared vertex");
    std::sort(edges_.begin(), edges_.end(),
              [](const raw_edge& x, const raw_edge& y) {
                return x.from != y.from ? x.from < y.from : x.to < y.to;
              });
    a.offset_.assign(n + 1, 0);
    a.edges_.reserve(edges_.size());
    std::vector<std::size_t> indeg(n, 0);
    for (std::size_t i = 0; i < edges_.size(); ++i)
      {
        auto& e = edges_[i];
        if (i > 0 && edges_[i - 1].from == e.from && edges_[i - 1].to == e.to)
          throw validation_error("parallel edge " + std::to_string(e.from)
                                 + " -> " + std::to_string(e.to));
        ++a.offset_[e.from + 1];
        ++indeg[e.to];
        a.edges_.push_back({e.to, e.weight});
        weight_t abs = e.weight < 0 ? -e.weight : e.weight;
        if (e.weight == std::numeric_limits<weight_t>::min())
          throw overflow_error("edge weight magnitude does not fit 64 bits");
        a.max_abs_weight_ = std::max(a.max_abs_weight_, abs);
      }
    for (std::size_t v = 0; v < n; ++v)
      {
        if (a.offset_[v + 1] == 0)
          throw validation_error("vertex " + std::to_string(v)
                                 + " is not nonterminal");
        a.offset_[v + 1] += a.offset_[v];
      }
    a.pred_offset_.assign(n + 1, 0);
    for (std::size_t v = 0; v < n; ++v)
      a.pred_offset_[v + 1] = a.pred_offset_[v] + indeg[v];
    a.pred_.resize(edges_.size());
    std::vector<std::size_t> fill(a.pred_offset_.begin(),
                                  a.pred_offset_.end() - 1);
    for (auto& e : edges_)
      a.pred_[fill[e.to]++] = e.from;

    a.owner_ = std::move(owner_);
    a.color_ = std::move(color_);
    a.name_ = std::move(name_);
    a.has_names_ = std::any_of(a.name_.begin(), a.name_.end(),
                               [](const std::string& s) { return !s.empty(); });
    std::set<color_t> colors(a.color_.begin(), a.color_.end());
    a.distinct_colors_ = colors.size();
    for (color_t c : colors)
      if (c % 2 == 1)
        a.odd_colors_.push_back(c);
    a.max_color_ = colors.empty() ? 0 : *colors.rbegin();
    edges_.clear();
    return a;
  }

  std::optional<std::size_t> arena::edge_index(vertex_t from, vertex_t to) const
  {
    auto succ = successors(from);
    auto it = std::lower_bound(succ.begin(), succ.end(), to,
                               [](const edge_t& e, vertex_t t) {
                                 return e.to < t;
                               });
    if (it == succ.end() || it->to != to)
      return std::nullopt;
    return offset_[from] + static_cast<std::size_t>(it - succ.begin());
  }

  std::optional<weight_t> arena::weight(vertex_t from, vertex_t to) const
  {
    if (auto idx = edge_index(from, to))
      return edges_[*idx].weight;
    return std::nullopt;
  }

  bool arena::operator==(const arena& other) const
  {
    if (owner_ != other.owner_ || color_ != other.color_
        || offset_ != other.offset_ || edges_.size() != other.edges_.size())
      return false;
    for (std::size_t i = 0; i < edges_.size(); ++i)
      if (edges_[i].to != other.edges_[i].to
          || edges_[i].weight != other.edges_[i].weight)
        return false;
    return name_ == other.name_;
  }

  region_t make_region(std::size_t n, std::span<const vertex_t> members)
  {
    region_t r(n, false);
    for (vertex_t v : members)
      r.at(v) = true;
    return r;
  }

  std::vector<vertex_t> members(const region_t& r)
  {
    std::vector<vertex_t> out;
    for (std::size_t v = 0; v < r.size(); ++v)
      if (r[v])
        out.push_back(static_cast<vertex_t>(v));
    return out;
  }

  std::size_t count(const region_t& r)
  {
    return static_cast<std::size_t>(std::count(r.begin(), r.end(), true));
  }

  attractor_result attractor(const arena& a, player p, const region_t& target)
  {
    const std::size_t n = a.size();
    attractor_result res{target, std::vector<vertex_t>(n, no_vertex)};
    res.region.resize(n, false);
    std::vector<std::size_t> rank(n, 0);
    std::vector<std::size_t> missing(n, 0);
    std::deque<vertex_t> queue;
    for (std::size_t v = 0; v < n; ++v)
      {
        missing[v] = a.successors(static_cast<vertex_t>(v)).size();
        if (res.region[v])
          queue.push_back(static_cast<vertex_t>(v));
      }
    while (!queue.empty())
      {
        vertex_t u = queue.front();
        queue.pop_front();
        for (vertex_t v : a.predecessors(u))
          {
            if (res.region[v])
              continue;
            if (a.owner(v) == p || --missing[v] == 0)
              {
                res.region[v] = true;
                rank[v] = rank[u] + 1;
                queue.push_back(v);
              }
          }
      }
    for (std::size_t v = 0; v < n; ++v)
      if (res.region[v] && !target[v] && a.owner(v) == p)
        for (auto& e : a.successors(static_cast<vertex_t>(v)))
          if (res.region[e.to] && rank[e.to] < rank[v])
            {
              res.strategy[v] = e.to;
              break;
            }
    return res;
  }

  bool is_trap(const arena& a, player p, const region_t& region)
  {
    for (std::size_t v = 0; v < a.size(); ++v)
      {
        if (!region[v])
          continue;
        auto succ = a.successors(static_cast<vertex_t>(v));
        if (a.owner(static_cast<vertex_t>(v)) == p)
          {
            for (auto& e : succ)
              if (!region[e.to])
                return false;
          }
        else if (std::none_of(succ.begin(), succ.end(),
                              [&](const edge_t& e) { return region[e.to]; }))
          return false;
      }
    return true;
  }

  subarena restrict(const arena& a, const region_t& keep)
  {
    subarena s;
    s.from_parent.assign(a.size(), no_vertex);
    for (std::size_t v = 0; v < a.size(); ++v)
      if (keep[v])
        {
          s.from_parent[v] = static_cast<vertex_t>(s.to_parent.size());
          s.to_parent.push_back(static_cast<vertex_t>(v));
        }
    arena::builder b(s.to_parent.size());
    for (vertex_t v : s.to_parent)
      b.add_vertex(a.owner(v), a.color(v), a.name(v));
    for (vertex_t v : s.to_parent)
      {
        bool any = false;
        for (auto& e : a.successors(v))
          if (keep[e.to])
            {
              b.add_edge(s.from_parent[v], s.from_parent[e.to], e.weight);
              any = true;
            }
        if (!any)
          throw dead_end_error("vertex " + std::to_string(v)
                               + " loses all successors in the restriction");
      }
    s.arena = std::move(b).build();
    return s;
  }

  arena with_colors(const arena& a, std::span<const color_t> colors)
  {
    arena::builder b(a.size());
    for (vertex_t v = 0; v < a.size(); ++v)
      b.add_vertex(a.owner(v), colors[v], a.name(v));
    for (vertex_t v = 0; v < a.size(); ++v)
      for (auto& e : a.successors(v))
        b.add_edge(v, e.to, e.weight);
    return std::move(b).build();
  }

  arena with_weights(const arena& a, std::span<const weight_t> edge_weights)
  {
    arena::builder b(a.size());
    for (vertex_t v = 0; v < a.size(); ++v)
      b.add_vertex(a.owner(v), a.color(v), a.name(v));
    for (vertex_t v = 0; v < a.size(); ++v)
      for (std::size_t i = a.first_edge(v); i < a.first_edge(v + 1); ++i)
        b.add_edge(v, a.edge(i).to, edge_weights[i]);
    return std::move(b).build();
  }

  normalized_arena normalize_colors(const arena& a)
  {
    bool low = false;
    for (vertex_t v = 0; v < a.size(); ++v)
      low = low || a.color(v) < 2;
    if (!low)
      return {a, 0};
    std::vector<color_t> colors(a.size());
    for (vertex_t v = 0; v < a.size(); ++v)
      colors[v] = a.color(v) + 2;
    return {with_colors(a, colors), 2};
  }

  weight_t checked_add(weight_t x, weight_t y)
  {
    weight_t r;
    if (__builtin_add_overflow(x, y, &r))
      throw overflow_error("weight accumulation overflows 64 bits");
    return r;
  }

  weight_t checked_mul(weight_t x, weight_t y)
  {
    weight_t r;
    if (__builtin_mul_overflow(x, y, &r))
      throw overflow_error("weight scaling overflows 64 bits");
    return r;
  }

  std::size_t state_budget()
  {
    if (const char* env = std::getenv("WPG_STATE_BUDGET"))
      {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end != env && *end == '\0' && v > 0)
          return static_cast<std::size_t>(v);
      }
    return default_state_budget;
  }

  namespace
  {
    std::uint64_t magnitude(weight_t w)
    {
      return w < 0 ? static_cast<std::uint64_t>(-(w + 1)) + 1
                   : static_cast<std::uint64_t>(w);
    }

    weight_t step_weight(const arena& a, vertex_t from, vertex_t to)
    {
      auto w = a.weight(from, to);
      if (!w)
        throw validation_error("no edge " + std::to_string(from) + " -> "
                               + std::to_string(to));
      return *w;
    }
  }

  std::uint64_t ampl(const arena& a, std::span<const vertex_t> prefix)
  {
    std::uint64_t best = 0;
    weight_t sum = 0;
    for (std::size_t i = 1; i < prefix.size(); ++i)
      {
        sum = checked_add(sum, step_weight(a, prefix[i - 1], prefix[i]));
        best = std::max(best, magnitude(sum));
      }
    return best;
  }

  vertex_t lasso::at(std::size_t j) const
  {
    if (j < stem.size())
      return stem[j];
    return cycle[(j - stem.size()) % cycle.size()];
  }

  void validate_lasso(const arena& a, const lasso& play)
  {
    if (play.cycle.empty())
      throw validation_error("lasso has an empty cycle");
    for (std::size_t j = 0; j < play.length(); ++j)
      {
        if (play.at(j) >= a.size())
          throw validation_error("lasso vertex out of range");
        step_weight(a, play.at(j), play.at(j + 1));
      }
  }

  std::uint64_t cost_of_response(const arena& a, const lasso& play,
                                 std::size_t j)
  {
    const color_t req = a.color(play.at(j));
    if (req % 2 == 0)
      return 0;
    // any answer after j occurs within one full cycle once j is on it
    const std::size_t horizon = std::max(j, play.stem.size())
                                + play.cycle.size();
    std::uint64_t amp = 0;
    weight_t sum = 0;
    for (std::size_t k = j + 1; k <= horizon; ++k)
      {
        sum = checked_add(sum, step_weight(a, play.at(k - 1), play.at(k)));
        amp = std::max(amp, magnitude(sum));
        if (answers(req, a.color(play.at(k))))
          return amp;
      }
    return infinite_cost;
  }

  bool satisfies_parity(const arena& a, const lasso& play)
  {
    color_t top = 0;
    for (vertex_t v : play.cycle)
      top = std::max(top, a.color(v));
    return top % 2 == 0;
  }

  weight_t cycle_weight(const arena& a, const lasso& play)
  {
    weight_t sum = 0;
    for (std::size_t i = 0; i < play.cycle.size(); ++i)
      sum = checked_add(sum,
                        step_weight(a, play.cycle[i],
                                    play.cycle[(i + 1) % play.cycle.size()]));
    return sum;
  }

  std::uint64_t limsup_cost(const arena& a, const lasso& play)
  {
    std::uint64_t worst = 0;
    for (std::size_t i = 0; i < play.cycle.size(); ++i)
      worst = std::max(worst,
                       cost_of_response(a, play, play.stem.size() + i));
    return worst;
  }

  bool satisfies_weight_parity(const arena& a, const lasso& play)
  {
    // on a lasso every cycle request is answered iff the cycle max is even
    return satisfies_parity(a, play);
  }

  bool satisfies_bounded_weight_parity(const arena& a, const lasso& play)
  {
    if (!satisfies_parity(a, play))
      return false;
    if (cycle_weight(a, play) == 0)
      return true;
    for (std::size_t j = 0; j < play.stem.size(); ++j)
      if (cost_of_response(a, play, j) == infinite_cost)
        return false;
    return true;
  }
}
