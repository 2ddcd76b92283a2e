#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <wpg/arena.hpp>

namespace wpg
{
  enum class game_kind
  {
    parity,
    weight_parity,
    bounded_weight_parity,
    energy_parity,
    mean_payoff_parity,
    countdown
  };

  /// Keyword used in instance files ("weightparity", ...).
  const char* keyword(game_kind k) noexcept;
  std::optional<game_kind> kind_from_keyword(const std::string& s);

  /// An arena together with the winning condition it is meant to be read
  /// with.  Countdown games carry their credit and sink.
  struct game_instance
  {
    game_kind kind = game_kind::weight_parity;
    wpg::arena arena;
    std::optional<weight_t> credit;
    // free-form key=value pairs, kept in insertion order
    std::vector<std::pair<std::string, std::string>> meta;

    std::optional<std::string> get(const std::string& key) const;
    void set(const std::string& key, std::string value);

    bool operator==(const game_instance&) const = default;
  };
}
