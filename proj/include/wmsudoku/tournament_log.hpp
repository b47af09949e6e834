#pragma once

#include <iosfwd>
#include <map>
#include <string>

#include "wmsudoku/tournament.hpp"

namespace wmsudoku {

inline constexpr const char* kLogFormat = "wmsudoku-log/1";

/// JSON Lines: a header, then per round a "round" record, one "game" record
/// per agent per replay, a "replay" record closing each replay and a
/// "round_end" record. Field reference in FORMATS.md.
void write_log(std::ostream& out, const TournamentLog& log);
std::string serialize_log(const TournamentLog& log);

/// Throws ParseError on malformed input.
TournamentLog read_log(std::istream& in);
TournamentLog load_log(const std::string& path);

/// Header settings of a log, as written (tournament keys only).
std::map<std::string, std::string> log_settings(const TournamentLog& log);

}  // namespace wmsudoku
