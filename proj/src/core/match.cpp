#include "core/match.hpp"

#include "core/error.hpp"

namespace ugfpc {

const char* to_string(MatchOutcome outcome) {
  switch (outcome) {
    case MatchOutcome::SpoilerWin: return "spoiler_win";
    case MatchOutcome::DuplicatorSurvived: return "duplicator_survived";
    case MatchOutcome::SpoilerForfeit: return "spoiler_forfeit";
    case MatchOutcome::DuplicatorForfeit: return "duplicator_forfeit";
  }
  return "unknown";
}

MatchResult run_match(const StructurePtr& a, const StructurePtr& b, int k, Spoiler& spoiler,
                      Duplicator& duplicator, int max_rounds) {
  Game game(a, b, k);
  MatchResult out;
  for (int round = 1; round <= max_rounds; ++round) {
    nlohmann::ordered_json record;
    record["round"] = round;
    try {
      spoiler.observe_duplicator(duplicator);
      int pair = spoiler.choose_pickup(game);
      game.pickup(pair);
      record["pickup"] = pair;
    } catch (const Error& e) {
      out.outcome = MatchOutcome::SpoilerForfeit;
      out.reason = e.what();
      break;
    }
    try {
      auto f = duplicator.propose(game);
      if (const auto* g = std::get_if<GStar>(&f)) record["gstar"] = gstar_to_json(*g, game.a());
      else record["table_digest"] = table_digest(std::get<ExplicitTable>(f).image);
      game.propose(std::move(f));
    } catch (const Error& e) {
      out.outcome = MatchOutcome::DuplicatorForfeit;
      out.reason = e.what();
      break;
    }
    VertexId placed = 0;
    try {
      placed = spoiler.choose_placement(game);
      game.place(placed);
      record["place"] = game.a().name(placed);
    } catch (const Error& e) {
      out.outcome = MatchOutcome::SpoilerForfeit;
      out.reason = e.what();
      break;
    }
    out.rounds = round;
    record["winner"] = game.winner() ? nlohmann::ordered_json(*game.winner()) : nlohmann::ordered_json(nullptr);
    out.transcript.push_back(record);
    if (game.finished()) {
      out.outcome = MatchOutcome::SpoilerWin;
      out.reason = game.win_reason();
      return out;
    }
    try {
      duplicator.on_placement(game, placed);
    } catch (const Error& e) {
      out.outcome = MatchOutcome::DuplicatorForfeit;
      out.reason = e.what();
      break;
    }
  }
  return out;
}

nlohmann::ordered_json match_to_json(const MatchResult& result) {
  nlohmann::ordered_json j;
  j["outcome"] = to_string(result.outcome);
  j["rounds"] = result.rounds;
  j["reason"] = result.reason ? nlohmann::ordered_json(*result.reason) : nlohmann::ordered_json(nullptr);
  j["transcript"] = result.transcript;
  return j;
}

}  // namespace ugfpc
