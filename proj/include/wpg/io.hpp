#pragma once

#include <string>
#include <string_view>

#include <wpg/instance.hpp>
#include <wpg/strategy.hpp>

namespace wpg
{
  /// \brief Reads an instance in the extended PGSolver text format.
  ///
  ///     # key=value            (optional metadata lines)
  ///     weightparity 3;
  ///     0 5 0 1:0,2:0 "v0";
  ///
  /// The header names the condition and the largest id, optionally with
  /// credit=<c>.  Each record lists id, color, owner and successors with
  /// weights; weights may be omitted for parity games.  Sparse ids are
  /// renumbered in ascending order.  Throws parse_error or
  /// validation_error.
  game_instance parse_instance(std::string_view text);

  /// Canonical text; parse_instance(serialize(g)) == g.
  std::string serialize(const game_instance& g);

  game_instance read_instance_file(const std::string& path);
  void write_file(const std::string& path, const std::string& text);

  /// Strategy files: "strategy <owner> <states>;" followed by
  /// "init v m;", "upd m v v' m';" and "move v m v';" lines.
  finite_state_strategy parse_strategy(std::string_view text, const arena& a);
  std::string serialize(const finite_state_strategy& s, const arena& a);
}
