#include <wpg/threshold.hpp>
#include <wpg/weights.hpp>

#include <algorithm>
#include <map>

namespace wpg
{
  namespace
  {
    // odd color -> slot in a request function, or -1
    std::vector<int> odd_slots(const arena& a)
    {
      std::vector<int> slot(a.max_color() + 1, -1);
      const auto& odd = a.odd_colors();
      for (std::size_t i = 0; i < odd.size(); ++i)
        slot[odd[i]] = static_cast<int>(i);
      return slot;
    }
  }

  threshold_state init_state(const arena& a, vertex_t v)
  {
    threshold_state m;
    m.r.assign(a.odd_color_count(), std::nullopt);
    const color_t c = a.color(v);
    if (c % 2 == 1)
      m.r[odd_slots(a)[c]] = interval{0, 0};
    return m;
  }

  threshold_state update_state(const arena& a, const threshold_state& m,
                               vertex_t from, vertex_t to, weight_t b)
  {
    const auto w = a.weight(from, to);
    if (!w)
      throw validation_error("no edge " + std::to_string(from) + " -> "
                             + std::to_string(to));
    const auto n = static_cast<std::uint32_t>(a.size());
    threshold_state next = m;
    // weight
    bool overflow = false;
    for (auto& iv : next.r)
      if (iv)
        {
          iv->l += *w;
          iv->h += *w;
          overflow = overflow || iv->l < -b || iv->h > b;
        }
    // overflow
    if (overflow)
      {
        for (auto& iv : next.r)
          iv.reset();
        next.overflow = std::min(m.overflow + 1, n);
      }
    // request
    const auto& odd = a.odd_colors();
    const color_t c = a.color(to);
    for (std::size_t i = 0; i < odd.size(); ++i)
      {
        if (c % 2 == 0 && odd[i] <= c)
          next.r[i].reset();
        else if (odd[i] == c)
          {
            const interval old = next.r[i].value_or(interval{0, 0});
            next.r[i] = interval{std::min<weight_t>(old.l, 0),
                                 std::max<weight_t>(old.h, 0)};
          }
      }
    return next;
  }

  // Key layout: [vertex, overflow, code per odd color].  Code 0 is "no
  // request", otherwise 1 + (l + b) * (2b + 1) + (h + b).

  void threshold_game::encode(vertex_t v, const threshold_state& m,
                              code_t* out) const
  {
    const auto span = static_cast<code_t>(2 * b_ + 1);
    out[0] = v;
    out[1] = m.overflow;
    for (std::size_t i = 0; i + 2 < stride_; ++i)
      {
        const auto& iv = m.r[i];
        out[i + 2] = iv ? 1 + static_cast<code_t>(iv->l + b_) * span
                              + static_cast<code_t>(iv->h + b_)
                        : 0;
      }
  }

  threshold_state threshold_game::decode(const code_t* key) const
  {
    const auto span = static_cast<code_t>(2 * b_ + 1);
    threshold_state m;
    m.overflow = static_cast<std::uint32_t>(key[1]);
    for (std::size_t i = 0; i + 2 < stride_; ++i)
      {
        if (key[i + 2] == 0)
          {
            m.r.emplace_back();
            continue;
          }
        const code_t x = key[i + 2] - 1;
        m.r.push_back(interval{static_cast<weight_t>(x / span) - b_,
                               static_cast<weight_t>(x % span) - b_});
      }
    return m;
  }

  std::size_t threshold_game::hash(const code_t* key) const noexcept
  {
    std::uint64_t h = 0x9e3779b97f4a7c15ull;
    for (std::size_t i = 0; i < stride_; ++i)
      {
        h ^= key[i] + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        h *= 0xff51afd7ed558ccdull;
      }
    return static_cast<std::size_t>(h ^ (h >> 33));
  }

  std::size_t threshold_game::probe(const code_t* key) const noexcept
  {
    const std::size_t mask = table_.size() - 1;
    std::size_t i = hash(key) & mask;
    for (;;)
      {
        const vertex_t id = table_[i];
        if (id == no_vertex
            || std::equal(key, key + stride_, keys_.data() + id * stride_))
          return i;
        i = (i + 1) & mask;
      }
  }

  vertex_t threshold_game::intern(const code_t* key, std::size_t budget)
  {
    std::size_t slot = probe(key);
    if (table_[slot] != no_vertex)
      return table_[slot];
    const std::size_t id = keys_.size() / stride_;
    if (id + 1 >= budget)
      throw capacity_error("threshold game at bound " + std::to_string(b_)
                           + " exceeds the state budget of "
                           + std::to_string(budget) + " states");
    keys_.insert(keys_.end(), key, key + stride_);
    table_[slot] = static_cast<vertex_t>(id);
    if (2 * (id + 1) > table_.size())
      {
        std::vector<vertex_t> old(table_.size() * 2, no_vertex);
        old.swap(table_);
        for (vertex_t x : old)
          if (x != no_vertex)
            table_[probe(keys_.data() + x * stride_)] = x;
      }
    return static_cast<vertex_t>(id);
  }

  threshold_game::threshold_game(const arena& a, weight_t b,
                                 const region_t& start, std::size_t budget)
    : base_(a), b_(b), stride_(2 + a.odd_color_count()),
      odd_(a.odd_colors()), table_(64, no_vertex),
      initial_(a.size(), no_vertex)
  {
    if (b < 0)
      throw validation_error("bound must be nonnegative");
    // codes must fit: (2b+1)^2 < 2^63
    if (b > 1'000'000'000)
      throw capacity_error("bound too large for an explicit threshold game");
    const auto n = static_cast<code_t>(a.size());
    const auto span = static_cast<weight_t>(2 * b + 1);
    const auto slots = odd_slots(a);
    const std::size_t d = stride_ - 2;

    std::vector<code_t> key(stride_);
    for (vertex_t v = 0; v < a.size(); ++v)
      if (start[v])
        {
          encode(v, init_state(a, v), key.data());
          initial_[v] = intern(key.data(), budget);
        }

    constexpr vertex_t to_sink = no_vertex - 1;
    std::vector<std::pair<vertex_t, vertex_t>> edges;
    std::vector<code_t> cur(stride_);
    std::vector<weight_t> lo(d), hi(d);
    std::vector<bool> open(d);
    bool sink_used = false;
    for (std::size_t x = 0; x * stride_ < keys_.size(); ++x)
      {
        std::copy_n(keys_.data() + x * stride_, stride_, cur.data());
        const auto v = static_cast<vertex_t>(cur[0]);
        const code_t o = cur[1];
        bool sink_edge = false;
        for (auto& e : a.successors(v))
          {
            bool overflow = false;
            for (std::size_t i = 0; i < d; ++i)
              {
                open[i] = cur[i + 2] != 0;
                if (!open[i])
                  continue;
                const auto c = static_cast<weight_t>(cur[i + 2] - 1);
                lo[i] = c / span - b + e.weight;
                hi[i] = c % span - b + e.weight;
                overflow = overflow || lo[i] < -b || hi[i] > b;
              }
            code_t o2 = o;
            if (overflow)
              {
                std::fill(open.begin(), open.end(), false);
                o2 = std::min(o + 1, n);
              }
            if (o2 == n)
              {
                if (!sink_edge)
                  edges.emplace_back(static_cast<vertex_t>(x), to_sink);
                sink_edge = sink_used = true;
                continue;
              }
            const color_t c = a.color(e.to);
            if (c % 2 == 0)
              {
                for (std::size_t i = 0; i < d && odd_[i] <= c; ++i)
                  open[i] = false;
              }
            else
              {
                const auto i = static_cast<std::size_t>(slots[c]);
                if (!open[i])
                  lo[i] = hi[i] = 0;
                lo[i] = std::min<weight_t>(lo[i], 0);
                hi[i] = std::max<weight_t>(hi[i], 0);
                open[i] = true;
              }
            key[0] = e.to;
            key[1] = o2;
            for (std::size_t i = 0; i < d; ++i)
              key[i + 2] = open[i] ? 1 + static_cast<code_t>((lo[i] + b) * span
                                                             + (hi[i] + b))
                                   : 0;
            edges.emplace_back(static_cast<vertex_t>(x),
                               intern(key.data(), budget));
          }
      }

    const std::size_t states = keys_.size() / stride_;
    arena::builder pb(states + (sink_used ? 1 : 0));
    for (std::size_t x = 0; x < states; ++x)
      {
        const auto v = static_cast<vertex_t>(keys_[x * stride_]);
        pb.add_vertex(a.owner(v), a.color(v));
      }
    if (sink_used)
      {
        sink_ = pb.add_vertex(player::one, 1);
        pb.add_edge(sink_, sink_);
      }
    for (auto [from, to] : edges)
      pb.add_edge(from, to == to_sink ? sink_ : to);
    product_ = std::move(pb).build();
    result_ = zielonka(product_);
  }

  vertex_t threshold_game::vertex_of(vertex_t s) const
  {
    if (s == sink_)
      return no_vertex;
    return static_cast<vertex_t>(keys_[s * stride_]);
  }

  std::optional<threshold_state> threshold_game::state_of(vertex_t s) const
  {
    if (s == sink_)
      return std::nullopt;
    return decode(keys_.data() + s * stride_);
  }

  std::uint32_t threshold_game::overflow_of(vertex_t s) const
  {
    if (s == sink_)
      return static_cast<std::uint32_t>(base_.size());
    return static_cast<std::uint32_t>(keys_[s * stride_ + 1]);
  }

  std::optional<vertex_t> threshold_game::find(vertex_t v,
                                               const threshold_state& m) const
  {
    if (m.r.size() != stride_ - 2)
      return std::nullopt;
    for (auto& iv : m.r)
      if (iv && (iv->l < -b_ || iv->h > b_ || iv->l > iv->h))
        return std::nullopt;
    std::vector<code_t> key(stride_);
    encode(v, m, key.data());
    const vertex_t id = table_[probe(key.data())];
    if (id == no_vertex)
      return std::nullopt;
    return id;
  }
}
