// Command line front end: one query per invocation.
//
// Exit codes: 0 answered (player 0 / true, or a file was produced),
// 1 player 1 / false, 2 bad input, 3 state budget or arithmetic limits.

#include <wpg/energy.hpp>
#include <wpg/generators.hpp>
#include <wpg/io.hpp>
#include <wpg/parity.hpp>
#include <wpg/reductions.hpp>
#include <wpg/threshold.hpp>
#include <wpg/verify.hpp>
#include <wpg/weights.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <fstream>
#include <iostream>
#include <mutex>
#include <thread>

using namespace wpg;
using json = nlohmann::json;

namespace
{
  constexpr int exit_yes = 0;
  constexpr int exit_no = 1;
  constexpr int exit_input = 2;
  constexpr int exit_capacity = 3;

  struct options
  {
    bool json = false;
    std::string file;
    std::string out;
    std::optional<vertex_t> from;
    weight_t bound = 0;
    std::string to;
    vertex_t pivot = 0;
    std::string strategy;
    std::uint64_t seed = 1;
    std::uint32_t n = 4;
    weight_t w = 1;
    color_t colors = 4;
    double density = 0.3;
    weight_t credit = 0;
    std::string name = "fig4";
    std::size_t count = 200;
    unsigned threads = 0;
  };

  std::vector<vertex_t> members(const region_t& r)
  {
    std::vector<vertex_t> out;
    for (vertex_t v = 0; v < r.size(); ++v)
      if (r[v])
        out.push_back(v);
    return out;
  }

  std::string list(const std::vector<vertex_t>& vs)
  {
    std::string s;
    for (auto v : vs)
      s += (s.empty() ? "" : " ") + std::to_string(v);
    return s.empty() ? "-" : s;
  }

  json lasso_json(const lasso& l)
  {
    return {{"stem", l.stem}, {"cycle", l.cycle}};
  }

  std::string lasso_text(const lasso& l)
  {
    return list(l.stem) + " (" + list(l.cycle) + ")^w";
  }

  void check_vertex(const arena& a, vertex_t v)
  {
    if (v >= a.size())
      throw validation_error("vertex " + std::to_string(v) + " out of range");
  }

  void emit(const options& o, const std::string& text)
  {
    if (o.out.empty())
      std::cout << text;
    else
      write_file(o.out, text);
  }

  region_t solve_kind(const game_instance& g)
  {
    switch (g.kind)
      {
      case game_kind::parity:
        return solve_parity(g.arena).win0;
      case game_kind::weight_parity:
        return solve_weight_parity(g.arena).win0;
      case game_kind::bounded_weight_parity:
        return solve_bounded_weight_parity(g.arena).win0;
      case game_kind::energy_parity:
        return solve_energy_parity(g.arena).win0;
      case game_kind::mean_payoff_parity:
        return solve_energy_parity(mean_payoff_to_energy(g.arena)).win0;
      case game_kind::countdown:
        {
          const auto c = countdown_of(g);
          region_t win0(g.arena.size(), false);
          for (vertex_t v = 0; v < g.arena.size(); ++v)
            win0[v] = solve_countdown(c, v);
          return win0;
        }
      }
    return {};
  }

  int cmd_solve(const options& o)
  {
    const auto g = read_instance_file(o.file);
    if (o.from)
      check_vertex(g.arena, *o.from);
    const region_t win0 = solve_kind(g);
    region_t win1(win0.size());
    for (std::size_t i = 0; i < win0.size(); ++i)
      win1[i] = !win0[i];
    if (o.json)
      {
        json j = {{"kind", keyword(g.kind)},
                  {"win0", members(win0)},
                  {"win1", members(win1)}};
        if (o.from)
          j["from"] = *o.from, j["winner"] = win0[*o.from] ? 0 : 1;
        std::cout << j.dump() << '\n';
      }
    else
      {
        std::cout << "win0: " << list(members(win0)) << '\n'
                  << "win1: " << list(members(win1)) << '\n';
        if (o.from)
          std::cout << "player " << (win0[*o.from] ? 0 : 1) << " wins from "
                    << *o.from << '\n';
      }
    return !o.from || win0[*o.from] ? exit_yes : exit_no;
  }

  int cmd_threshold(const options& o)
  {
    const auto g = read_instance_file(o.file);
    const vertex_t v = o.from.value_or(0);
    check_vertex(g.arena, v);
    if (o.bound < 0)
      throw validation_error("bound must be nonnegative");
    const bool yes = threshold_decide(g.arena, v, o.bound);
    if (o.json)
      std::cout << json{{"from", v}, {"bound", o.bound}, {"result", yes}}.dump()
                << '\n';
    else
      std::cout << (yes ? "true" : "false") << '\n';
    return yes ? exit_yes : exit_no;
  }

  int cmd_optimal(const options& o)
  {
    const auto g = read_instance_file(o.file);
    const vertex_t v = o.from.value_or(0);
    check_vertex(g.arena, v);
    const auto c = optimal_cost(g.arena, v);
    const bool finite = c != infinite_cost;
    if (o.json)
      std::cout << json{{"from", v},
                        {"cost", finite ? json(c) : json("infinity")}}
                     .dump()
                << '\n';
    else
      std::cout << (finite ? std::to_string(c) : "infinity") << '\n';
    return finite ? exit_yes : exit_no;
  }

  int cmd_convert(const options& o)
  {
    auto g = read_instance_file(o.file);
    game_instance r;
    r.meta = {{"converted-from", keyword(g.kind)}, {"via", o.to}};
    if (o.to == "corridor" || o.to == "bounded")
      {
        const arena c = energy_to_corridor(normalize_colors(g.arena).arena);
        if (o.to == "corridor")
          r = {game_kind::energy_parity, c, std::nullopt, r.meta};
        else
          r = {game_kind::bounded_weight_parity, corridor_to_bounded(c).arena,
               std::nullopt, r.meta};
      }
    else if (o.to == "weightparity")
      {
        check_vertex(g.arena, o.pivot);
        auto t = bounded_to_weight(g.arena, o.pivot);
        r = {game_kind::weight_parity, std::move(t.arena), std::nullopt, r.meta};
        r.set("pivot", std::to_string(o.pivot));
        r.set("top", std::to_string(t.top));
      }
    else if (o.to == "energy")
      r = {game_kind::energy_parity, mean_payoff_to_energy(g.arena),
           std::nullopt, r.meta};
    else if (o.to == "threshold-instance")
      {
        const auto c = countdown_of(g);
        const vertex_t v = o.from.value_or(c.sink == 0 ? 1 : 0);
        check_vertex(g.arena, v);
        auto t = countdown_to_threshold(c, v);
        r = {game_kind::weight_parity, std::move(t.arena), std::nullopt, r.meta};
        r.set("top", std::to_string(t.top));
        r.set("bound", std::to_string(t.bound));
      }
    else
      throw validation_error("unknown conversion '" + o.to + "'");
    emit(o, serialize(r));
    return exit_yes;
  }

  int cmd_verify(const options& o)
  {
    const auto g = read_instance_file(o.file);
    std::ifstream in(o.strategy);
    if (!in)
      throw validation_error("cannot open '" + o.strategy + "'");
    const std::string text{std::istreambuf_iterator<char>(in), {}};
    const auto s = parse_strategy(text, g.arena);
    verification r;
    std::string what;
    if (o.bound >= 0)
      {
        const vertex_t v = o.from.value_or(0);
        check_vertex(g.arena, v);
        r = verify_cost_bound(g.arena, s, v, o.bound);
        what = "cost";
      }
    else
      {
        region_t start(g.arena.size(), !o.from);
        if (o.from)
          {
            check_vertex(g.arena, *o.from);
            start[*o.from] = true;
          }
        r = verify_parity_strategy(g.arena, s, start);
        what = "parity";
      }
    if (o.json)
      {
        json j = {{"check", what}, {"ok", r.ok}};
        if (r.witness)
          j["witness"] = lasso_json(*r.witness);
        std::cout << j.dump() << '\n';
      }
    else
      {
        std::cout << (r.ok ? "ok" : "violated") << '\n';
        if (r.witness)
          std::cout << "witness: " << lasso_text(*r.witness) << '\n';
      }
    return r.ok ? exit_yes : exit_no;
  }

  int cmd_gen(const options& o, const std::string& family)
  {
    game_instance g;
    if (family == "memory-family")
      g = gen_memory_family(o.n, o.w);
    else if (family == "cost-family")
      g = gen_cost_family(o.n, o.w);
    else if (family == "figures")
      g = figure(o.name);
    else if (family == "random")
      g = gen_random(o.seed, o.n, o.colors, o.w, o.density);
    else
      g = gen_random_countdown(o.seed, o.n, o.w, o.credit);
    emit(o, serialize(g));
    return exit_yes;
  }

  // Cross-checks the independent pipelines on one random instance;
  // returns a description of the first disagreement.
  std::optional<std::string> fuzz_one(std::uint64_t seed)
  {
    const std::uint32_t n = 1 + seed % 5;
    const arena a = gen_random(seed, n, 4, 2, 0.25 + 0.05 * (seed % 4)).arena;

    const auto energy = solve_energy_parity(normalize_colors(a).arena).win0;
    const auto chain =
      corridor_to_bounded(energy_to_corridor(normalize_colors(a).arena));
    const auto bounded_chain = solve_bounded_weight_parity(chain.arena).win0;
    for (vertex_t v = 0; v < n; ++v)
      if (energy[v] != bounded_chain[chain.entry[v]])
        return "energy vs corridor chain at " + std::to_string(v);

    const auto bounded = solve_bounded_weight_parity(a).win0;
    for (vertex_t v = 0; v < n; ++v)
      if (bounded[v]
          != solve_weight_parity(bounded_to_weight(a, v).arena).win0[v])
        return "bounded vs reset game at " + std::to_string(v);

    const auto weights = solve_weight_parity(a).win0;
    for (vertex_t v = 0; v < n; ++v)
      if (bounded[v] && !weights[v])
        return "bounded win outside the weight-parity region at "
               + std::to_string(v);
    const auto sat = saturation_bound(a);
    if (sat <= 64)
      {
        const auto explicit0 = threshold_region(a, sat);
        if (explicit0 != weights)
          return "threshold game at saturation disagrees";
      }

    const arena z = with_weights(a, std::vector<weight_t>(a.edge_count(), 0));
    if (solve_weight_parity(z).win0 != solve_parity(z).win0)
      return "zero weights vs parity";
    return std::nullopt;
  }

  int cmd_fuzz(const options& o)
  {
    const unsigned workers =
      o.threads ? o.threads : std::max(1u, std::thread::hardware_concurrency());
    std::atomic<std::size_t> next{0};
    std::mutex lock;
    std::vector<std::pair<std::uint64_t, std::string>> failures;
    std::size_t skipped = 0;
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < workers; ++t)
      pool.emplace_back([&] {
        for (std::size_t i; (i = next++) < o.count;)
          {
            const std::uint64_t seed = o.seed + i;
            try
              {
                if (auto bad = fuzz_one(seed))
                  {
                    std::lock_guard g(lock);
                    failures.emplace_back(seed, *bad);
                  }
              }
            catch (const capacity_error&)
              {
                std::lock_guard g(lock);
                ++skipped;
              }
          }
      });
    for (auto& t : pool)
      t.join();
    std::sort(failures.begin(), failures.end());
    if (o.json)
      {
        json f = json::array();
        for (auto& [s, why] : failures)
          f.push_back({{"seed", s}, {"mismatch", why}});
        std::cout << json{{"instances", o.count},
                          {"skipped", skipped},
                          {"failures", f}}
                       .dump()
                  << '\n';
      }
    else
      {
        for (auto& [s, why] : failures)
          std::cout << "seed " << s << ": " << why << '\n';
        std::cout << o.count << " instances, " << failures.size()
                  << " mismatches, " << skipped << " over budget\n";
      }
    return failures.empty() ? exit_yes : exit_no;
  }
}

int main(int argc, char** argv)
{
  CLI::App app{"Solver for parity games with weights and related games"};
  app.require_subcommand(1);
  options o;
  app.add_flag("--json", o.json, "Machine-readable output");

  auto input = [&](CLI::App* c) {
    c->add_option("file", o.file, "Instance file")->required();
  };
  auto from = [&](CLI::App* c) {
    c->add_option("--from", o.from, "Start vertex");
  };

  auto* solve = app.add_subcommand("solve", "Winning regions for the instance's condition");
  input(solve);
  from(solve);

  auto* thr = app.add_subcommand("threshold", "Can player 0 keep the cost at most --bound?");
  input(thr);
  from(thr);
  thr->add_option("--bound", o.bound, "Cost bound")->required();

  auto* opt = app.add_subcommand("optimal-cost", "Least achievable cost bound");
  input(opt);
  from(opt);

  auto* conv = app.add_subcommand("convert", "Apply a reduction");
  input(conv);
  from(conv);
  conv->add_option("--to", o.to, "Target construction")
    ->required()
    ->check(CLI::IsMember({"corridor", "bounded", "weightparity", "energy",
                           "threshold-instance"}));
  conv->add_option("--pivot", o.pivot, "Pivot vertex for --to weightparity");
  conv->add_option("-o,--output", o.out, "Output file");

  auto* ver = app.add_subcommand("verify", "Check a strategy file");
  input(ver);
  from(ver);
  ver->add_option("--strategy", o.strategy, "Strategy file")->required();
  o.bound = -1;
  ver->add_option("--bound", o.bound, "Cost bound (parity check if omitted)");

  auto* gen = app.add_subcommand("gen", "Generate an instance");
  std::string family;
  gen->add_option("family", family, "Family")
    ->required()
    ->check(CLI::IsMember({"memory-family", "cost-family", "figures", "random",
                           "countdown"}));
  gen->add_option("--seed", o.seed, "Random seed");
  gen->add_option("-n", o.n, "Size parameter");
  gen->add_option("-w,--weight", o.w, "Weight (maximal decrement for countdown)");
  gen->add_option("--colors", o.colors, "Largest color");
  gen->add_option("--density", o.density, "Edge probability");
  gen->add_option("--credit", o.credit, "Countdown credit");
  gen->add_option("--name", o.name, "Figure name");
  gen->add_option("-o,--output", o.out, "Output file");

  auto* fuzz = app.add_subcommand("fuzz", "Cross-check the solving pipelines on random instances");
  fuzz->add_option("--seed", o.seed, "First seed");
  fuzz->add_option("--count", o.count, "Number of instances");
  fuzz->add_option("--threads", o.threads, "Worker threads (0 = all cores)");

  try
    {
      app.parse(argc, argv);
    }
  catch (const CLI::ParseError& e)
    {
      const int code = app.exit(e);
      return code == 0 ? 0 : exit_input;
    }

  try
    {
      if (*solve)
        return cmd_solve(o);
      if (*thr)
        return cmd_threshold(o);
      if (*opt)
        return cmd_optimal(o);
      if (*conv)
        return cmd_convert(o);
      if (*ver)
        return cmd_verify(o);
      if (*gen)
        return cmd_gen(o, family);
      return cmd_fuzz(o);
    }
  catch (const capacity_error& e)
    {
      std::cerr << "wpg: " << e.what() << '\n';
      return exit_capacity;
    }
  catch (const overflow_error& e)
    {
      std::cerr << "wpg: " << e.what() << '\n';
      return exit_capacity;
    }
  catch (const error& e)
    {
      std::cerr << "wpg: " << e.what() << '\n';
      return exit_input;
    }
}
