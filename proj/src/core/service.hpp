#pragma once

#include <chrono>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <string>

#include <json.hpp>

#include "core/duplicator.hpp"
#include "core/game.hpp"
#include "core/presets.hpp"
#include "core/rng.hpp"

namespace ugfpc {

struct HttpReply {
  int status = 200;
  nlohmann::ordered_json body;  // null for 204
};

using DuplicatorFactory = std::function<std::unique_ptr<Duplicator>(const PresetPair&)>;

/// Interactive games where the client plays Spoiler against the automated
/// Duplicator. Transport-independent: handle() maps a request to a reply.
///
///   POST   /api/sessions               {"preset", "k"}  -> 201
///   GET    /api/sessions/{id}                           -> 200
///   POST   /api/sessions/{id}/pickup   {"pair"}         -> 200 with bijection
///   POST   /api/sessions/{id}/place    {"a": "v#g"}     -> 200
///   DELETE /api/sessions/{id}                           -> 204
///   GET    /api/presets                                 -> 200
class SessionService {
 public:
  /// The default factory builds the tree strategy for the preset pair.
  explicit SessionService(DuplicatorFactory factory = {},
                          std::chrono::seconds idle_timeout = std::chrono::hours(1));

  HttpReply handle(const std::string& method, const std::string& path, const std::string& body);

  std::size_t session_count();

 private:
  struct Session {
    std::mutex mutex;
    std::string id;
    std::string preset;
    PresetPair pair;
    Game game;
    std::unique_ptr<Duplicator> duplicator;
    std::chrono::steady_clock::time_point touched;
    Session(std::string id_, std::string preset_, PresetPair pair_, Game game_, std::unique_ptr<Duplicator> d)
        : id(std::move(id_)), preset(std::move(preset_)), pair(std::move(pair_)), game(std::move(game_)),
          duplicator(std::move(d)), touched(std::chrono::steady_clock::now()) {}
  };

  HttpReply create(const nlohmann::json& body);
  HttpReply act(Session& s, const std::string& action, const nlohmann::json& body);
  nlohmann::ordered_json session_json(const Session& s, bool with_structures) const;
  nlohmann::ordered_json bijection_json(const Session& s) const;
  std::shared_ptr<Session> find(const std::string& id);
  void expire();

  DuplicatorFactory factory_;
  std::chrono::seconds idle_timeout_;
  std::mutex mutex_;
  std::map<std::string, std::shared_ptr<Session>> sessions_;
  std::map<std::string, std::pair<StructurePtr, StructurePtr>> structures_;
  Rng ids_;
};

/// Blocking HTTP/1.1 front end for a SessionService with permissive CORS.
class HttpServer {
 public:
  explicit HttpServer(SessionService& service);
  ~HttpServer();
  /// Returns false when binding fails; otherwise blocks until stop().
  bool listen(const std::string& host, int port);
  void stop();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace ugfpc
