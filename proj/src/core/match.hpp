#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "core/duplicator.hpp"
#include "core/game.hpp"
#include "core/spoiler.hpp"

namespace ugfpc {

enum class MatchOutcome { SpoilerWin, DuplicatorSurvived, SpoilerForfeit, DuplicatorForfeit };

const char* to_string(MatchOutcome outcome);

struct MatchResult {
  MatchOutcome outcome = MatchOutcome::DuplicatorSurvived;
  int rounds = 0;
  std::optional<std::string> reason;
  nlohmann::ordered_json transcript = nlohmann::ordered_json::array();
};

/// Plays up to max_rounds rounds. A protocol violation by either agent ends
/// the match as that agent's forfeit.
MatchResult run_match(const StructurePtr& a, const StructurePtr& b, int k, Spoiler& spoiler,
                      Duplicator& duplicator, int max_rounds);

nlohmann::ordered_json match_to_json(const MatchResult& result);

}  // namespace ugfpc
