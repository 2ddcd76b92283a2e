#include <wpg/instance.hpp>

namespace wpg
{
  namespace
  {
    struct kind_name
    {
      game_kind kind;
      const char* word;
    };
    constexpr kind_name kind_names[] = {
      {game_kind::parity, "parity"},
      {game_kind::weight_parity, "weightparity"},
      {game_kind::bounded_weight_parity, "bndweightparity"},
      {game_kind::energy_parity, "energyparity"},
      {game_kind::mean_payoff_parity, "meanpayoffparity"},
      {game_kind::countdown, "countdown"},
    };
  }

  const char* keyword(game_kind k) noexcept
  {
    for (auto& kn : kind_names)
      if (kn.kind == k)
        return kn.word;
    return "weightparity";
  }

  std::optional<game_kind> kind_from_keyword(const std::string& s)
  {
    for (auto& kn : kind_names)
      if (s == kn.word)
        return kn.kind;
    return std::nullopt;
  }

  std::optional<std::string> game_instance::get(const std::string& key) const
  {
    for (auto& [k, v] : meta)
      if (k == key)
        return v;
    return std::nullopt;
  }

  void game_instance::set(const std::string& key, std::string value)
  {
    for (auto& [k, v] : meta)
      if (k == key)
        {
          v = std::move(value);
          return;
        }
    meta.emplace_back(key, std::move(value));
  }
}
