#include "core/service.hpp"

#include <cstdio>
#include <random>

#include <httplib.h>

#include "core/error.hpp"
#include "core/lifting.hpp"

namespace ugfpc {

namespace {

constexpr int kTableLimit = 64;

HttpReply error_reply(int status, const std::string& message) {
  nlohmann::ordered_json j;
  j["error"] = message;
  return {status, j};
}

int status_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::WrongPhase: return 409;
    case ErrorKind::IllegalMove: return 422;
    case ErrorKind::NotFound: return 404;
    default: return 400;
  }
}

std::vector<std::string> split_path(const std::string& path) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : path.substr(0, path.find('?'))) {
    if (c == '/') {
      if (!cur.empty()) parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) parts.push_back(cur);
  return parts;
}

std::string preset_pair_for(const std::string& preset) {
  if (preset == "fig2-lifted") return "fig2";
  if (preset == "fig3-lifted") return "fig3";
  return {};
}

}  // namespace

SessionService::SessionService(DuplicatorFactory factory, std::chrono::seconds idle_timeout)
    : factory_(std::move(factory)), idle_timeout_(idle_timeout), ids_(std::random_device{}()) {
  if (!factory_)
    factory_ = [](const PresetPair& p) -> std::unique_ptr<Duplicator> {
      return std::make_unique<TreeDuplicator>(TreeDuplicator::for_pair(p.u1, p.u2, p.r));
    };
}

std::size_t SessionService::session_count() {
  std::lock_guard lock(mutex_);
  return sessions_.size();
}

void SessionService::expire() {
  auto now = std::chrono::steady_clock::now();
  for (auto it = sessions_.begin(); it != sessions_.end();) {
    std::unique_lock session_lock(it->second->mutex, std::try_to_lock);
    if (session_lock.owns_lock() && now - it->second->touched > idle_timeout_) {
      session_lock.unlock();
      it = sessions_.erase(it);
    } else {
      ++it;
    }
  }
}

std::shared_ptr<SessionService::Session> SessionService::find(const std::string& id) {
  std::lock_guard lock(mutex_);
  expire();
  auto it = sessions_.find(id);
  return it == sessions_.end() ? nullptr : it->second;
}

HttpReply SessionService::handle(const std::string& method, const std::string& path, const std::string& body) {
  auto parts = split_path(path);
  if (parts.size() < 2 || parts[0] != "api") return error_reply(404, "no such route");
  nlohmann::json request = nlohmann::json::object();
  if (method == "POST") {
    try {
      request = body.empty() ? nlohmann::json::object() : nlohmann::json::parse(body);
    } catch (const nlohmann::json::exception& e) {
      return error_reply(400, std::string("malformed JSON: ") + e.what());
    }
    if (!request.is_object()) return error_reply(400, "request body must be a JSON object");
  }
  try {
    if (parts.size() == 2 && parts[1] == "presets" && method == "GET") {
      nlohmann::ordered_json j;
      j["presets"] = {"fig2-lifted", "fig3-lifted"};
      return {200, j};
    }
    if (parts[1] != "sessions") return error_reply(404, "no such route");
    if (parts.size() == 2) {
      if (method == "POST") return create(request);
      return error_reply(405, "method not allowed");
    }
    auto session = find(parts[2]);
    if (!session) return error_reply(404, "unknown session '" + parts[2] + "'");
    if (parts.size() == 3 && method == "DELETE") {
      std::lock_guard lock(mutex_);
      sessions_.erase(parts[2]);
      return {204, nullptr};
    }
    std::lock_guard session_lock(session->mutex);
    session->touched = std::chrono::steady_clock::now();
    if (parts.size() == 3 && method == "GET") return {200, session_json(*session, true)};
    if (parts.size() == 4 && method == "POST") return act(*session, parts[3], request);
    return error_reply(404, "no such route");
  } catch (const Error& e) {
    return error_reply(status_for(e.kind()), e.what());
  } catch (const nlohmann::json::exception& e) {
    return error_reply(400, std::string("malformed request: ") + e.what());
  }
}

HttpReply SessionService::create(const nlohmann::json& body) {
  if (!body.contains("preset") || !body["preset"].is_string()) return error_reply(400, "missing string field 'preset'");
  if (!body.contains("k") || !body["k"].is_number_integer()) return error_reply(400, "missing integer field 'k'");
  std::string preset = body["preset"].get<std::string>();
  int k = body["k"].get<int>();
  auto pair_name = preset_pair_for(preset);
  if (pair_name.empty()) return error_reply(422, "unknown preset '" + preset + "'");
  if (k < 1 || k > 8) return error_reply(422, "k must lie in [1, 8]");
  auto pair = preset_pair(pair_name);
  std::lock_guard lock(mutex_);
  expire();
  auto& cached = structures_[preset];
  if (!cached.first) {
    cached.first = std::make_shared<const Structure>(lift(pair.u1));
    cached.second = std::make_shared<const Structure>(lift(pair.u2));
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(ids_.next()));
  auto session = std::make_shared<Session>(buf, preset, pair, Game(cached.first, cached.second, k), factory_(pair));
  sessions_[session->id] = session;
  return {201, session_json(*session, true)};
}

HttpReply SessionService::act(Session& s, const std::string& action, const nlohmann::json& body) {
  if (action == "pickup") {
    if (!body.contains("pair") || !body["pair"].is_number_integer())
      return error_reply(400, "missing integer field 'pair'");
    s.game.pickup(body["pair"].get<int>());
    s.game.propose(s.duplicator->propose(s.game));
    nlohmann::ordered_json j;
    j["session_id"] = s.id;
    j["bijection"] = bijection_json(s);
    j["state"] = s.game.state_json();
    return {200, j};
  }
  if (action == "place") {
    if (!body.contains("a") || !body["a"].is_string()) return error_reply(400, "missing string field 'a'");
    if (s.game.phase() != Phase::AwaitPlacement) throw Error(ErrorKind::WrongPhase, "placement needs a pickup first");
    auto element = s.game.a().instance.graph.find(body["a"].get<std::string>());
    if (!element) throw Error(ErrorKind::IllegalMove, "no element '" + body["a"].get<std::string>() + "' in A");
    s.game.place(*element);
    if (!s.game.finished()) s.duplicator->on_placement(s.game, *element);
    nlohmann::ordered_json j;
    j["session_id"] = s.id;
    j["state"] = s.game.state_json();
    return {200, j};
  }
  return error_reply(404, "no such action '" + action + "'");
}

nlohmann::ordered_json SessionService::bijection_json(const Session& s) const {
  nlohmann::ordered_json j;
  const auto& f = *s.game.pending();
  if (const auto* g = std::get_if<GStar>(&f)) j["gstar"] = gstar_to_json(*g, s.game.a());
  if (s.game.a().size() <= kTableLimit) {
    nlohmann::ordered_json table = nlohmann::ordered_json::object();
    auto image = materialize(f, s.game.a(), s.game.b());
    for (VertexId a = 0; a < s.game.a().size(); ++a) table[s.game.a().name(a)] = s.game.b().name(image[a]);
    j["table"] = table;
  }
  return j;
}

nlohmann::ordered_json SessionService::session_json(const Session& s, bool with_structures) const {
  nlohmann::ordered_json j;
  j["session_id"] = s.id;
  j["preset"] = s.preset;
  j["duplicator"] = s.duplicator->name();
  j["state"] = s.game.state_json();
  if (s.game.pending()) j["bijection"] = bijection_json(s);
  if (with_structures) {
    j["structures"]["a"] = instance_to_json(s.game.a().instance);
    j["structures"]["b"] = instance_to_json(s.game.b().instance);
  }
  return j;
}

struct HttpServer::Impl {
  SessionService& service;
  httplib::Server server;
  explicit Impl(SessionService& s) : service(s) {}
};

HttpServer::HttpServer(SessionService& service) : impl_(std::make_unique<Impl>(service)) {
  auto& srv = impl_->server;
  srv.set_default_headers({{"Access-Control-Allow-Origin", "*"},
                           {"Access-Control-Allow-Methods", "GET, POST, DELETE, OPTIONS"},
                           {"Access-Control-Allow-Headers", "Content-Type"}});
  auto route = [this](const httplib::Request& req, httplib::Response& res) {
    auto reply = impl_->service.handle(req.method, req.path, req.body);
    res.status = reply.status;
    if (reply.status != 204) res.set_content(reply.body.dump() + "\n", "application/json");
  };
  srv.Get(".*", route);
  srv.Post(".*", route);
  srv.Delete(".*", route);
  srv.Options(".*", [](const httplib::Request&, httplib::Response& res) { res.status = 204; });
}

HttpServer::~HttpServer() = default;

bool HttpServer::listen(const std::string& host, int port) { return impl_->server.listen(host, port); }

void HttpServer::stop() { impl_->server.stop(); }

}  // namespace ugfpc
