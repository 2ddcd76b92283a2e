#include <wpg/parity.hpp>

#include <algorithm>

namespace wpg
{
  namespace
  {
    class zielonka_solver
    {
    public:
      explicit zielonka_solver(const arena& a)
        : a_(a), n_(a.size()), sub_(n_, 0), attr_(n_, 0), cnt_stamp_(n_, 0),
          cnt_(n_, 0), rank_(n_, 0), winner_(n_, 0), strat_(n_, no_vertex)
      {
      }

      parity_result run()
      {
        struct frame
        {
          std::vector<vertex_t> verts;
          int phase = 0;
          color_t top = 0;
          player p = player::zero;
          std::vector<vertex_t> first_attr;
        };
        std::vector<frame> stack;
        {
          frame root;
          root.verts.resize(n_);
          for (std::size_t v = 0; v < n_; ++v)
            root.verts[v] = static_cast<vertex_t>(v);
          stack.push_back(std::move(root));
        }
        while (!stack.empty())
          {
            frame& f = stack.back();
            if (f.verts.empty())
              {
                stack.pop_back();
                continue;
              }
            if (f.phase == 0)
              {
                mark(f.verts);
                color_t top = 0;
                for (vertex_t v : f.verts)
                  top = std::max(top, a_.color(v));
                f.top = top;
                f.p = parity_winner(top);
                std::vector<vertex_t> target;
                for (vertex_t v : f.verts)
                  if (a_.color(v) == top)
                    target.push_back(v);
                f.first_attr = attract(f.p, target);
                auto rest = complement(f.verts);
                f.phase = 1;
                frame child;
                child.verts = std::move(rest);
                stack.push_back(std::move(child));
                continue;
              }
            if (f.phase == 1)
              {
                const player p = f.p;
                const player q = opponent(p);
                mark(f.verts);
                std::vector<vertex_t> lost;
                // vertices outside the first attractor won by q
                std::uint32_t a_stamp = ++attr_gen_;
                for (vertex_t v : f.first_attr)
                  attr_[v] = a_stamp;
                for (vertex_t v : f.verts)
                  if (attr_[v] != a_stamp && winner_[v] == index(q))
                    lost.push_back(v);
                if (lost.empty())
                  {
                    for (vertex_t v : f.first_attr)
                      {
                        winner_[v] = static_cast<std::uint8_t>(index(p));
                        if (a_.color(v) == f.top && a_.owner(v) == p)
                          strat_[v] = lowest_inside(v);
                      }
                    stack.pop_back();
                    continue;
                  }
                auto b = attract(q, lost);
                for (vertex_t v : b)
                  winner_[v] = static_cast<std::uint8_t>(index(q));
                auto rest = complement(f.verts);
                f.phase = 2;
                f.first_attr.clear();
                f.first_attr.shrink_to_fit();
                frame child;
                child.verts = std::move(rest);
                stack.push_back(std::move(child));
                continue;
              }
            stack.pop_back();
          }
        parity_result r;
        r.win0.assign(n_, false);
        r.strategy.assign(n_, no_vertex);
        for (std::size_t v = 0; v < n_; ++v)
          {
            r.win0[v] = winner_[v] == 0;
            if (index(a_.owner(static_cast<vertex_t>(v))) == winner_[v])
              r.strategy[v] = strat_[v];
          }
        return r;
      }

    private:
      void mark(const std::vector<vertex_t>& verts)
      {
        ++sub_gen_;
        for (vertex_t v : verts)
          sub_[v] = sub_gen_;
      }

      bool inside(vertex_t v) const { return sub_[v] == sub_gen_; }

      vertex_t lowest_inside(vertex_t v) const
      {
        for (auto& e : a_.successors(v))
          if (inside(e.to))
            return e.to;
        return no_vertex;
      }

      // Attractor of p to target within the marked subgame.  Writes the
      // attractor strategy of p and leaves attr_ stamped with the result.
      std::vector<vertex_t> attract(player p, const std::vector<vertex_t>& target)
      {
        const std::uint32_t stamp = ++attr_gen_;
        std::vector<vertex_t> out;
        out.reserve(target.size());
        for (vertex_t v : target)
          {
            attr_[v] = stamp;
            rank_[v] = 0;
            out.push_back(v);
          }
        for (std::size_t head = 0; head < out.size(); ++head)
          {
            vertex_t u = out[head];
            for (vertex_t v : a_.predecessors(u))
              {
                if (!inside(v) || attr_[v] == stamp)
                  continue;
                bool take = a_.owner(v) == p;
                if (!take)
                  {
                    if (cnt_stamp_[v] != stamp)
                      {
                        cnt_stamp_[v] = stamp;
                        std::uint32_t c = 0;
                        for (auto& e : a_.successors(v))
                          if (inside(e.to))
                            ++c;
                        cnt_[v] = c;
                      }
                    take = --cnt_[v] == 0;
                  }
                if (take)
                  {
                    attr_[v] = stamp;
                    rank_[v] = rank_[u] + 1;
                    out.push_back(v);
                  }
              }
          }
        for (std::size_t k = target.size(); k < out.size(); ++k)
          {
            vertex_t v = out[k];
            if (a_.owner(v) != p)
              continue;
            for (auto& e : a_.successors(v))
              if (inside(e.to) && attr_[e.to] == stamp
                  && rank_[e.to] < rank_[v])
                {
                  strat_[v] = e.to;
                  break;
                }
          }
        return out;
      }

      // marked vertices not in the last attractor
      std::vector<vertex_t> complement(const std::vector<vertex_t>& verts) const
      {
        std::vector<vertex_t> rest;
        for (vertex_t v : verts)
          if (attr_[v] != attr_gen_)
            rest.push_back(v);
        return rest;
      }

      const arena& a_;
      std::size_t n_;
      std::vector<std::uint32_t> sub_;
      std::uint32_t sub_gen_ = 0;
      std::vector<std::uint32_t> attr_;
      std::uint32_t attr_gen_ = 0;
      std::vector<std::uint32_t> cnt_stamp_;
      std::vector<std::uint32_t> cnt_;
      std::vector<std::uint32_t> rank_;
      std::vector<std::uint8_t> winner_;
      std::vector<vertex_t> strat_;
    };
  }

  parity_result zielonka(const arena& a)
  {
    return zielonka_solver(a).run();
  }

  std::vector<vertex_t> positional_choice(const arena& a,
                                          const parity_result& r, player p)
  {
    std::vector<vertex_t> choice(a.size(), no_vertex);
    for (vertex_t v = 0; v < a.size(); ++v)
      if (a.owner(v) == p && r.winner(v) == p)
        choice[v] = r.strategy[v];
    return choice;
  }

  solution solve_parity(const arena& a)
  {
    auto r = zielonka(a);
    solution s = solution_from_win0(r.win0);
    s.strategy0 = finite_state_strategy::positional(
      a, player::zero, positional_choice(a, r, player::zero));
    s.strategy1 = finite_state_strategy::positional(
      a, player::one, positional_choice(a, r, player::one));
    return s;
  }
}
