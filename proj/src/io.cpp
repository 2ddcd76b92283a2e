#include <wpg/io.hpp>
#include <wpg/reductions.hpp>

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <sstream>

namespace wpg
{
  namespace
  {
    // Character cursor with line/column tracking.  Comment lines start
    // with '#'; "# key=value" comments are collected as metadata.
    class cursor
    {
    public:
      explicit cursor(std::string_view text) : text_(text) {}

      [[noreturn]] void fail(const std::string& what) const
      {
        throw parse_error(line_, col_, what);
      }

      // for errors about the token just read
      [[noreturn]] void fail_token(const std::string& what) const
      {
        throw parse_error(tok_line_, tok_col_, what);
      }

      void skip_space(std::vector<std::pair<std::string, std::string>>* meta)
      {
        while (pos_ < text_.size())
          {
            const char c = text_[pos_];
            if (c == '#')
              {
                std::size_t end = text_.find('\n', pos_);
                if (end == std::string_view::npos)
                  end = text_.size();
                auto body = text_.substr(pos_ + 1, end - pos_ - 1);
                if (meta)
                  collect(body, *meta);
                while (pos_ < end)
                  advance();
              }
            else if (c == ' ' || c == '\t' || c == '\r' || c == '\n')
              advance();
            else
              break;
          }
      }

      bool done() const { return pos_ >= text_.size(); }
      char peek() const { return done() ? '\0' : text_[pos_]; }
      std::size_t line() const { return line_; }
      std::size_t column() const { return col_; }

      void expect(char c)
      {
        skip_space(nullptr);
        if (peek() != c)
          fail(std::string("expected '") + c + "'");
        advance();
      }

      bool accept(char c)
      {
        skip_space(nullptr);
        if (peek() != c)
          return false;
        advance();
        return true;
      }

      std::string word()
      {
        skip_space(nullptr);
        mark();
        std::string out;
        while (!done() && (std::isalnum(static_cast<unsigned char>(peek()))
                           || peek() == '_' || peek() == '-' || peek() == '='))
          {
            out.push_back(peek());
            advance();
          }
        if (out.empty())
          fail("expected a word");
        return out;
      }

      template <class Int>
      Int integer(const char* what)
      {
        skip_space(nullptr);
        mark();
        const std::size_t start = pos_;
        if (peek() == '-' || peek() == '+')
          advance();
        while (!done() && std::isdigit(static_cast<unsigned char>(peek())))
          advance();
        Int value{};
        auto s = text_.substr(start, pos_ - start);
        auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
        if (s.empty() || ec != std::errc() || p != s.data() + s.size())
          fail(std::string("expected ") + what);
        return value;
      }

      std::string quoted()
      {
        expect('"');
        std::string out;
        while (!done() && peek() != '"')
          {
            if (peek() == '\n')
              fail("unterminated name");
            if (peek() == '\\')
              {
                advance();
                if (done())
                  fail("unterminated name");
              }
            out.push_back(peek());
            advance();
          }
        if (done())
          fail("unterminated name");
        advance();
        return out;
      }

    private:
      void mark()
      {
        tok_line_ = line_;
        tok_col_ = col_;
      }

      void advance()
      {
        if (text_[pos_] == '\n')
          {
            ++line_;
            col_ = 1;
          }
        else
          ++col_;
        ++pos_;
      }

      static void collect(std::string_view body,
                          std::vector<std::pair<std::string, std::string>>& meta)
      {
        auto trim = [](std::string_view s) {
          while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
            s.remove_prefix(1);
          while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
            s.remove_suffix(1);
          return s;
        };
        body = trim(body);
        const auto eq = body.find('=');
        if (eq == std::string_view::npos || eq == 0
            || body.find(' ') < eq)
          return;
        meta.emplace_back(std::string(trim(body.substr(0, eq))),
                          std::string(trim(body.substr(eq + 1))));
      }

      std::string_view text_;
      std::size_t pos_ = 0;
      std::size_t line_ = 1;
      std::size_t col_ = 1;
      std::size_t tok_line_ = 1;
      std::size_t tok_col_ = 1;
    };

    struct record
    {
      long long id;
      color_t color;
      int owner;
      std::vector<std::pair<long long, weight_t>> succ;
      std::string name;
      bool named = false;
      std::size_t line;
    };
  }

  game_instance parse_instance(std::string_view text)
  {
    cursor cur(text);
    game_instance g;
    cur.skip_space(&g.meta);
    if (cur.done())
      cur.fail("empty input");
    const std::string kw = cur.word();
    auto kind = kind_from_keyword(kw);
    if (!kind)
      cur.fail_token("unknown game kind '" + kw + "'");
    g.kind = *kind;
    const auto max_id = cur.integer<long long>("the largest vertex id");
    if (max_id < -1)
      cur.fail_token("largest id must be >= -1");
    cur.skip_space(nullptr);
    if (cur.peek() != ';')
      {
        const std::string opt = cur.word();
        if (opt.rfind("credit=", 0) != 0)
          cur.fail_token("unknown header option '" + opt + "'");
        std::string digits = opt.substr(7);
        if (digits.empty())
          digits = std::to_string(cur.integer<weight_t>("a credit"));
        weight_t c{};
        auto [p, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), c);
        if (ec != std::errc() || p != digits.data() + digits.size() || c < 0)
          cur.fail_token("credit must be a nonnegative integer");
        g.credit = c;
      }
    cur.expect(';');

    std::vector<record> records;
    for (;;)
      {
        cur.skip_space(&g.meta);
        if (cur.done())
          break;
        record r;
        r.line = cur.line();
        r.id = cur.integer<long long>("a vertex id");
        if (r.id < 0 || r.id > max_id)
          cur.fail_token("vertex id " + std::to_string(r.id) + " exceeds the header");
        r.color = cur.integer<color_t>("a color");
        r.owner = cur.integer<int>("an owner");
        if (r.owner != 0 && r.owner != 1)
          cur.fail_token("owner must be 0 or 1");
        cur.skip_space(nullptr);
        if (cur.peek() != ';' && cur.peek() != '"')
          do
            {
              const auto to = cur.integer<long long>("a successor id");
              weight_t w = 0;
              if (cur.accept(':'))
                w = cur.integer<weight_t>("a weight");
              else if (g.kind != game_kind::parity)
                cur.fail("missing weight for successor "
                         + std::to_string(to));
              r.succ.emplace_back(to, w);
            }
          while (cur.accept(','));
        cur.skip_space(nullptr);
        if (cur.peek() == '"')
          {
            r.name = cur.quoted();
            r.named = true;
          }
        cur.expect(';');
        records.push_back(std::move(r));
      }

    std::sort(records.begin(), records.end(),
              [](const record& x, const record& y) { return x.id < y.id; });
    std::map<long long, vertex_t> dense;
    for (auto& r : records)
      {
        if (!dense.emplace(r.id, static_cast<vertex_t>(dense.size())).second)
          throw validation_error("line " + std::to_string(r.line)
                                 + ": duplicate vertex id "
                                 + std::to_string(r.id));
      }
    arena::builder b(records.size());
    for (auto& r : records)
      b.add_vertex(r.owner == 0 ? player::zero : player::one, r.color, r.name);
    for (auto& r : records)
      {
        if (r.succ.empty())
          throw validation_error("line " + std::to_string(r.line) + ": vertex "
                                 + std::to_string(r.id)
                                 + " is terminal (every vertex must be nonterminal)");
        for (auto [to, w] : r.succ)
          {
            auto it = dense.find(to);
            if (it == dense.end())
              throw validation_error("line " + std::to_string(r.line)
                                     + ": successor " + std::to_string(to)
                                     + " is not declared");
            b.add_edge(dense[r.id], it->second, w);
          }
      }
    g.arena = std::move(b).build();
    if (g.kind == game_kind::countdown)
      {
        if (!g.credit)
          throw invalid_countdown_error("countdown game needs credit=<c>");
        countdown_of(g);
      }
    return g;
  }

  std::string serialize(const game_instance& g)
  {
    std::ostringstream out;
    for (auto& [k, v] : g.meta)
      out << "# " << k << '=' << v << '\n';
    const arena& a = g.arena;
    out << keyword(g.kind) << ' ' << static_cast<long long>(a.size()) - 1;
    if (g.credit)
      out << " credit=" << *g.credit;
    out << ";\n";
    for (vertex_t v = 0; v < a.size(); ++v)
      {
        out << v << ' ' << a.color(v) << ' ' << index(a.owner(v)) << ' ';
        bool first = true;
        for (auto& e : a.successors(v))
          {
            if (!first)
              out << ',';
            first = false;
            out << e.to << ':' << e.weight;
          }
        if (a.has_names() && !a.name(v).empty())
          {
            out << " \"";
            for (char c : a.name(v))
              {
                if (c == '"' || c == '\\')
                  out << '\\';
                out << c;
              }
            out << '"';
          }
        out << ";\n";
      }
    return out.str();
  }

  game_instance read_instance_file(const std::string& path)
  {
    std::ifstream in(path, std::ios::binary);
    if (!in)
      throw validation_error("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_instance(buf.str());
  }

  void write_file(const std::string& path, const std::string& text)
  {
    std::ofstream out(path, std::ios::binary);
    if (!out)
      throw validation_error("cannot write '" + path + "'");
    out << text;
  }

  finite_state_strategy parse_strategy(std::string_view text, const arena& a)
  {
    cursor cur(text);
    cur.skip_space(nullptr);
    if (cur.word() != "strategy")
      cur.fail("expected 'strategy'");
    const int owner = cur.integer<int>("an owner");
    if (owner != 0 && owner != 1)
      cur.fail_token("owner must be 0 or 1");
    const auto states = cur.integer<std::size_t>("a state count");
    if (states == 0 || states >= no_memory)
      cur.fail_token("state count must be positive");
    cur.expect(';');
    finite_state_strategy s(owner == 0 ? player::zero : player::one, states,
                            a.size());
    auto vertex = [&]() {
      const auto v = cur.integer<vertex_t>("a vertex");
      if (v >= a.size())
        cur.fail_token("vertex " + std::to_string(v) + " out of range");
      return v;
    };
    auto memory = [&]() {
      const auto m = cur.integer<memory_t>("a memory state");
      if (m >= states)
        cur.fail_token("memory state " + std::to_string(m) + " out of range");
      return m;
    };
    for (;;)
      {
        cur.skip_space(nullptr);
        if (cur.done())
          break;
        const std::string kw = cur.word();
        if (kw == "init")
          {
            const vertex_t v = vertex();
            s.set_init(v, memory());
          }
        else if (kw == "upd")
          {
            const memory_t m = memory();
            const vertex_t from = vertex();
            const vertex_t to = vertex();
            auto idx = a.edge_index(from, to);
            if (!idx)
              cur.fail("no edge " + std::to_string(from) + " -> "
                       + std::to_string(to));
            s.set_update(m, *idx, memory());
          }
        else if (kw == "move")
          {
            const vertex_t v = vertex();
            const memory_t m = memory();
            const vertex_t to = vertex();
            if (!a.has_edge(v, to))
              cur.fail("no edge " + std::to_string(v) + " -> "
                       + std::to_string(to));
            s.set_move(v, m, to);
          }
        else
          cur.fail_token("unknown strategy entry '" + kw + "'");
        cur.expect(';');
      }
    s.validate(a);
    return s;
  }

  std::string serialize(const finite_state_strategy& s, const arena& a)
  {
    std::ostringstream out;
    out << "strategy " << index(s.owner()) << ' ' << s.size() << ";\n";
    for (vertex_t v = 0; v < a.size(); ++v)
      if (s.init(v) != no_memory)
        out << "init " << v << ' ' << s.init(v) << ";\n";
    std::vector<std::uint64_t> keys;
    for (auto& [k, _] : s.update_table())
      keys.push_back(k);
    std::sort(keys.begin(), keys.end());
    for (auto k : keys)
      {
        const auto m = static_cast<memory_t>(k >> 32);
        const auto& e = a.edge(k & 0xffffffffu);
        // source = last vertex whose edge block starts at or before k
        vertex_t lo = 0, hi = static_cast<vertex_t>(a.size());
        while (hi - lo > 1)
          {
            const vertex_t mid = lo + (hi - lo) / 2;
            if (a.first_edge(mid) <= (k & 0xffffffffu))
              lo = mid;
            else
              hi = mid;
          }
        const vertex_t from = lo;
        out << "upd " << m << ' ' << from << ' ' << e.to << ' '
            << s.update_table().at(k) << ";\n";
      }
    keys.clear();
    for (auto& [k, _] : s.move_table())
      keys.push_back(k);
    std::sort(keys.begin(), keys.end(),
              [](std::uint64_t x, std::uint64_t y) {
                return std::pair(x & 0xffffffffu, x >> 32)
                       < std::pair(y & 0xffffffffu, y >> 32);
              });
    for (auto k : keys)
      out << "move " << (k & 0xffffffffu) << ' ' << (k >> 32) << ' '
          << s.move_table().at(k) << ";\n";
    return out.str();
  }
}
