#include "ugfpc/ugfpc.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <fstream>
#include <memory>
#include <new>
#include <sstream>
#include <string>

#include <json.hpp>

#include "core/construction.hpp"
#include "core/decay.hpp"
#include "core/duplicator.hpp"
#include "core/error.hpp"
#include "core/graph.hpp"
#include "core/instance.hpp"
#include "core/lifting.hpp"
#include "core/match.hpp"
#include "core/params.hpp"
#include "core/presets.hpp"
#include "core/service.hpp"
#include "core/solver.hpp"
#include "core/spoiler.hpp"

struct ugfpc_instance {
  ugfpc::GroupUgInstance value;
};

struct ugfpc_graph {
  ugfpc::MultiGraph value;
};

struct ugfpc_construction {
  ugfpc::ConstructionOutput output;
  nlohmann::ordered_json report;
};

struct ugfpc_service {
  ugfpc::SessionService service;
  ugfpc::HttpServer server{service};
};

namespace {

using ugfpc::Error;
using ugfpc::ErrorKind;
using ojson = nlohmann::ordered_json;

thread_local std::string last_error;

ugfpc_status status_of(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidArgument:
    case ErrorKind::DimensionMismatch:
    case ErrorKind::DependentBasis:
      return UGFPC_ERR_INVALID_ARGUMENT;
    case ErrorKind::Parse:
      return UGFPC_ERR_PARSE;
    case ErrorKind::Io:
      return UGFPC_ERR_IO;
    case ErrorKind::Domain:
      return UGFPC_ERR_DOMAIN;
    case ErrorKind::Budget:
      return UGFPC_ERR_BUDGET;
    case ErrorKind::WrongPhase:
      return UGFPC_ERR_STATE;
    case ErrorKind::IllegalMove:
      return UGFPC_ERR_ILLEGAL_MOVE;
    case ErrorKind::NotFound:
      return UGFPC_ERR_NOT_FOUND;
  }
  return UGFPC_ERR_INTERNAL;
}

ugfpc_status fail(ugfpc_status status, std::string message) {
  last_error = std::move(message);
  return status;
}

template <class F>
ugfpc_status guarded(F&& body) {
  try {
    last_error.clear();
    body();
    return UGFPC_OK;
  } catch (const Error& e) {
    return fail(status_of(e.kind()), e.what());
  } catch (const nlohmann::json::exception& e) {
    return fail(UGFPC_ERR_PARSE, e.what());
  } catch (const std::bad_alloc&) {
    return fail(UGFPC_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(UGFPC_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(UGFPC_ERR_INTERNAL, "unknown failure");
  }
}

void require(bool condition, const char* message) {
  if (!condition) throw Error(ErrorKind::InvalidArgument, message);
}

char* dup_string(const std::string& s) {
  auto* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void emit(const ojson& j, char** out) { *out = dup_string(j.dump()); }

std::string read_file(const char* path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw Error(ErrorKind::Io, std::string("cannot read ") + path);
  std::ostringstream ss;
  ss << is.rdbuf();
  return ss.str();
}

nlohmann::json parse_json(const std::string& text) {
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorKind::Parse, std::string("malformed JSON: ") + e.what());
  }
}

ojson steps_json(const ugfpc::GroupUgInstance& u, const std::vector<ugfpc::DerivationStep>& steps) {
  ojson arr = ojson::array();
  for (const auto& s : steps) {
    const auto& e = u.graph.edge(s.edge);
    arr.push_back(ojson{{"vertex", u.graph.name(s.vertex)},
                        {"edge", ojson::array({u.graph.name(e.u), u.graph.name(e.v)})},
                        {"shift", s.shift.str()}});
  }
  return arr;
}

ugfpc::TreeStrategyOptions tree_options(const ugfpc_play_options& o) {
  ugfpc::TreeStrategyOptions t;
  t.lazy = o.lazy != 0;
  t.repair = o.repair != 0;
  return t;
}

struct Players {
  ugfpc::StructurePtr a, b;
  std::unique_ptr<ugfpc::Duplicator> duplicator;
};

Players make_players(const ugfpc::GroupUgInstance& a, const ugfpc::GroupUgInstance& b, const ugfpc_play_options& o) {
  require(o.k >= 1, "k must be at least 1");
  std::string dup = o.duplicator ? o.duplicator : "tree";
  Players p;
  if (o.lift) {
    p.a = std::make_shared<const ugfpc::Structure>(ugfpc::lift(a));
    p.b = std::make_shared<const ugfpc::Structure>(ugfpc::lift(b));
  } else {
    p.a = std::make_shared<const ugfpc::Structure>(a);
    p.b = std::make_shared<const ugfpc::Structure>(b);
  }
  if (dup == "identity") {
    p.duplicator = std::make_unique<ugfpc::IdentityDuplicator>();
  } else if (dup == "tree") {
    if (!o.lift)
      throw Error(ErrorKind::Domain, "the tree strategy reads H, Z and b from a base pair; enable lifting");
    require(o.r >= 1, "r must be at least 1");
    p.duplicator = std::make_unique<ugfpc::TreeDuplicator>(ugfpc::TreeDuplicator::for_pair(a, b, o.r, tree_options(o)));
  } else {
    throw Error(ErrorKind::InvalidArgument, "unknown duplicator '" + dup + "' (tree, identity)");
  }
  return p;
}

std::unique_ptr<ugfpc::Spoiler> make_spoiler(const Players& p, const ugfpc_play_options& o, std::uint64_t seed) {
  std::string kind = o.spoiler ? o.spoiler : "random";
  if (kind == "random") return std::make_unique<ugfpc::RandomSpoiler>(seed);
  if (kind == "cycle") return std::make_unique<ugfpc::CycleGreedySpoiler>(*p.a, *p.b, seed);
  if (kind == "exhaustive") {
    require(o.depth >= 1, "depth must be at least 1");
    return std::make_unique<ugfpc::ExhaustiveSpoiler>(o.depth);
  }
  throw Error(ErrorKind::InvalidArgument, "unknown spoiler '" + kind + "' (random, cycle, exhaustive)");
}

}  // namespace

extern "C" {

const char* ugfpc_version(void) { return "0.1.0"; }

const char* ugfpc_status_name(ugfpc_status status) {
  switch (status) {
    case UGFPC_OK:
      return "ok";
    case UGFPC_ERR_INVALID_ARGUMENT:
      return "invalid_argument";
    case UGFPC_ERR_PARSE:
      return "parse";
    case UGFPC_ERR_IO:
      return "io";
    case UGFPC_ERR_DOMAIN:
      return "domain";
    case UGFPC_ERR_BUDGET:
      return "budget";
    case UGFPC_ERR_STATE:
      return "state";
    case UGFPC_ERR_ILLEGAL_MOVE:
      return "illegal_move";
    case UGFPC_ERR_NOT_FOUND:
      return "not_found";
    case UGFPC_ERR_INTERNAL:
      return "internal";
  }
  return "unknown";
}

const char* ugfpc_last_error(void) { return last_error.c_str(); }

void ugfpc_free_string(char* s) { std::free(s); }

ugfpc_status ugfpc_instance_parse(const char* json, ugfpc_instance** out) {
  return guarded([&] {
    require(json && out, "null argument");
    *out = new ugfpc_instance{ugfpc::instance_from_json(parse_json(json))};
  });
}

ugfpc_status ugfpc_instance_load(const char* path, ugfpc_instance** out) {
  return guarded([&] {
    require(path && out, "null argument");
    *out = new ugfpc_instance{ugfpc::instance_from_json(parse_json(read_file(path)))};
  });
}

ugfpc_status ugfpc_instance_preset(const char* name, ugfpc_instance** out) {
  return guarded([&] {
    require(name && out, "null argument");
    *out = new ugfpc_instance{ugfpc::preset_instance(name)};
  });
}

ugfpc_status ugfpc_instance_to_json(const ugfpc_instance* u, char** out_json) {
  return guarded([&] {
    require(u && out_json, "null argument");
    *out_json = dup_string(ugfpc::instance_to_json(u->value).dump(2) + "\n");
  });
}

ugfpc_status ugfpc_instance_save(const ugfpc_instance* u, const char* path) {
  return guarded([&] {
    require(u && path, "null argument");
    std::ofstream os(path);
    if (!os) throw Error(ErrorKind::Io, std::string("cannot write ") + path);
    os << ugfpc::instance_to_json(u->value).dump(2) << '\n';
    if (!os) throw Error(ErrorKind::Io, std::string("failed writing ") + path);
  });
}

ugfpc_status ugfpc_instance_validate(const ugfpc_instance* u, char** out_json) {
  return guarded([&] {
    require(u && out_json, "null argument");
    emit(ojson(ugfpc::validate(u->value)), out_json);
  });
}

ugfpc_status ugfpc_instance_info(const ugfpc_instance* u, int* m, size_t* vertices, size_t* edges,
                                 size_t* constraints) {
  return guarded([&] {
    require(u != nullptr, "null argument");
    if (m) *m = u->value.m;
    if (vertices) *vertices = static_cast<size_t>(u->value.graph.vertex_count());
    if (edges) *edges = static_cast<size_t>(u->value.graph.edge_count());
    if (constraints) *constraints = u->value.constraint_count();
  });
}

ugfpc_status ugfpc_instance_lift(const ugfpc_instance* u, ugfpc_instance** out) {
  return guarded([&] {
    require(u && out, "null argument");
    *out = new ugfpc_instance{ugfpc::lift(u->value)};
  });
}

void ugfpc_instance_free(ugfpc_instance* u) { delete u; }

ugfpc_status ugfpc_exact_opt(const ugfpc_instance* u, uint64_t budget, char** out_json) {
  return guarded([&] {
    require(u && out_json, "null argument");
    auto r = ugfpc::exact_opt(u->value, budget ? budget : ugfpc::kDefaultSolverBudget);
    ojson j;
    j["opt"] = ugfpc::to_string(r.optimum);
    j["witness"] = ugfpc::assignment_to_json(u->value, r.witness);
    j["satisfied"] = ugfpc::satisfied_count(u->value, r.witness);
    j["constraints"] = u->value.constraint_count();
    emit(j, out_json);
  });
}

ugfpc_status ugfpc_satcheck(const ugfpc_instance* u, char** out_json) {
  return guarded([&] {
    require(u && out_json, "null argument");
    ugfpc::require_valid(u->value);
    auto r = ugfpc::is_completely_satisfiable(u->value);
    ojson j;
    j["satisfiable"] = r.satisfiable;
    if (r.satisfiable) {
      j["assignment"] = ugfpc::assignment_to_json(u->value, r.assignment);
    } else if (r.conflict) {
      const auto& c = *r.conflict;
      ojson cj;
      cj["anchor"] = u->value.graph.name(c.anchor);
      cj["vertex"] = u->value.graph.name(c.vertex);
      cj["label_a"] = c.label_a.str();
      cj["label_b"] = c.label_b.str();
      cj["path_a"] = steps_json(u->value, c.path_a);
      cj["path_b"] = steps_json(u->value, c.path_b);
      cj["cycle_length"] = c.cycle_length;
      j["conflict"] = cj;
    }
    emit(j, out_json);
  });
}

ugfpc_status ugfpc_value(const ugfpc_instance* u, const char* assignment_json, char** out_rational) {
  return guarded([&] {
    require(u && assignment_json && out_rational, "null argument");
    ugfpc::require_valid(u->value);
    auto a = ugfpc::assignment_from_json(u->value, parse_json(assignment_json));
    *out_rational = dup_string(ugfpc::to_string(ugfpc::value(u->value, a)));
  });
}

ugfpc_status ugfpc_derive_params(const char* epsilon, const char* delta, int ell, char** out_json) {
  return guarded([&] {
    require(epsilon && delta && out_json, "null argument");
    auto p = ugfpc::derive_params(ugfpc::parse_rational(epsilon), ugfpc::parse_rational(delta), ell);
    ojson j;
    j["epsilon"] = ugfpc::to_string(p.epsilon);
    j["delta"] = ugfpc::to_string(p.delta);
    j["ell"] = p.ell;
    j["d"] = p.d;
    j["gamma"] = ugfpc::to_string(p.gamma);
    j["m"] = p.m;
    j["q"] = p.q.str();
    j["r"] = p.r.str();
    j["completeness"] = ugfpc::to_string(ugfpc::Rational(1) / ugfpc::pow_int(2, static_cast<unsigned>(p.ell)));
    j["soundness"] = ugfpc::to_string(ugfpc::soundness_base(p.ell) + p.delta);
    j["desk_feasible"] = p.r <= 64;
    emit(j, out_json);
  });
}

ugfpc_status ugfpc_gapcheck(const char* alpha, char** out_json) {
  return guarded([&] {
    require(alpha && out_json, "null argument");
    auto g = ugfpc::approx_gap_params(ugfpc::parse_rational(alpha));
    ojson j;
    j["alpha"] = ugfpc::to_string(g.alpha);
    j["ell"] = g.ell;
    j["delta"] = ugfpc::to_string(g.delta);
    j["c"] = ugfpc::to_string(g.c);
    j["s"] = ugfpc::to_string(g.s);
    j["ratio"] = ugfpc::to_string(g.ratio);
    j["s_le_alpha_c"] = g.s <= g.alpha * g.c;
    ojson f;
    f["ell"] = g.ell_formula;
    f["ratio"] = ugfpc::to_string(g.ratio_formula);
    f["sufficient"] = g.formula_sufficient;
    j["closed_form"] = f;
    if (g.formula_sufficient) {
      j["discrepancy"] = nullptr;
    } else {
      j["discrepancy"] = "closed-form l = " + std::to_string(g.ell_formula) + " gives s/c = " +
                         ugfpc::to_string(g.ratio_formula) + " > alpha; least sufficient l is " +
                         std::to_string(g.ell);
    }
    emit(j, out_json);
  });
}

ugfpc_status ugfpc_lemma53_gap(int d, int n, char** out_rational) {
  return guarded([&] {
    require(out_rational != nullptr, "null argument");
    *out_rational = dup_string(ugfpc::to_string(ugfpc::lemma53_gap(d, n)));
  });
}

ugfpc_status ugfpc_decay(int m, int ell, int d, int r, uint64_t trials, uint64_t seed, char** out_json) {
  return guarded([&] {
    require(out_json != nullptr, "null argument");
    auto t = ugfpc::decay_simulation(m, ell, d, r, trials, seed);
    ojson j;
    j["m"] = t.m;
    j["ell"] = t.ell;
    j["d"] = t.d;
    j["r"] = t.r;
    j["trials"] = t.trials;
    j["seed"] = t.seed;
    j["x1_expected"] = ugfpc::to_string(
        ugfpc::Rational((t.d - 1) * (ugfpc::pow_int(t.d, static_cast<unsigned>(t.m - t.ell)) - 1)));
    ojson steps = ojson::array();
    for (const auto& s : t.steps) {
      ojson sj;
      sj["i"] = s.step;
      sj["mean"] = ugfpc::to_string(s.mean);
      sj["mean_value"] = s.mean_value;
      sj["standard_error"] = s.standard_error;
      sj["min"] = s.min;
      sj["max"] = s.max;
      sj["zero_trials"] = s.zero_trials;
      steps.push_back(sj);
    }
    j["steps"] = steps;
    emit(j, out_json);
  });
}

ugfpc_status ugfpc_graph_preset(const char* name, ugfpc_graph** out) {
  return guarded([&] {
    require(name && out, "null argument");
    *out = new ugfpc_graph{ugfpc::preset_graph(name)};
  });
}

ugfpc_status ugfpc_graph_parse(const char* json, ugfpc_graph** out) {
  return guarded([&] {
    require(json && out, "null argument");
    *out = new ugfpc_graph{ugfpc::graph_from_json(parse_json(json))};
  });
}

ugfpc_status ugfpc_graph_load(const char* path, ugfpc_graph** out) {
  return guarded([&] {
    require(path && out, "null argument");
    *out = new ugfpc_graph{ugfpc::graph_from_json(parse_json(read_file(path)))};
  });
}

ugfpc_status ugfpc_graph_random_regular(int n, int d, int min_girth, uint64_t seed, uint64_t max_tries,
                                        ugfpc_graph** out) {
  return guarded([&] {
    require(out != nullptr, "null argument");
    auto g = ugfpc::random_regular(n, d, min_girth, seed, max_tries);
    if (!g)
      throw Error(ErrorKind::NotFound, "no " + std::to_string(d) + "-regular graph on " + std::to_string(n) +
                                           " vertices with girth >= " + std::to_string(min_girth) + " after " +
                                           std::to_string(max_tries) + " tries");
    *out = new ugfpc_graph{std::move(*g)};
  });
}

ugfpc_status ugfpc_graph_to_json(const ugfpc_graph* g, char** out_json) {
  return guarded([&] {
    require(g && out_json, "null argument");
    *out_json = dup_string(ugfpc::graph_to_json(g->value).dump(2) + "\n");
  });
}

ugfpc_status ugfpc_graph_girth(const ugfpc_graph* g, int* out) {
  return guarded([&] {
    require(g && out, "null argument");
    *out = ugfpc::girth(g->value);
  });
}

void ugfpc_graph_free(ugfpc_graph* g) { delete g; }

ugfpc_status ugfpc_construct(const ugfpc_graph* g, const ugfpc_construct_options* options,
                             ugfpc_construction** out) {
  return guarded([&] {
    require(g && options && out, "null argument");
    ugfpc::ConstructOptions o;
    o.m = options->m;
    o.ell = options->ell;
    o.r = options->r;
    o.seed = options->seed;
    require(o.ell >= 1 && o.ell <= o.m, "construct requires 1 <= ell <= m");
    require(o.r >= 1, "construct requires r >= 1");
    if (options->epsilon) o.epsilon = ugfpc::parse_rational(options->epsilon);
    if (options->delta) o.delta = ugfpc::parse_rational(options->delta);
    if (options->k > 0) o.k = options->k;
    auto ed = ugfpc::sample_edge_data(g->value, o.m, o.ell, o.seed);
    auto c = std::make_unique<ugfpc_construction>();
    c->output = ugfpc::build_gap_pair(g->value, ed, o.r);
    c->report = ugfpc::construction_report(c->output, o, o.seed);
    *out = c.release();
  });
}

ugfpc_status ugfpc_construction_report(const ugfpc_construction* c, char** out_json) {
  return guarded([&] {
    require(c && out_json, "null argument");
    emit(c->report, out_json);
  });
}

ugfpc_status ugfpc_construction_write(const ugfpc_construction* c, const char* dir) {
  return guarded([&] {
    require(c && dir, "null argument");
    ugfpc::write_construction(dir, c->output, c->report);
  });
}

ugfpc_status ugfpc_construction_instance(const ugfpc_construction* c, const char* which, ugfpc_instance** out) {
  return guarded([&] {
    require(c && which && out, "null argument");
    std::string w = which;
    const ugfpc::GroupUgInstance* u = nullptr;
    if (w == "u1") u = &c->output.u1;
    if (w == "u2") u = &c->output.u2;
    if (w == "u1tilde") u = &c->output.u1_tilde;
    if (w == "u2tilde") u = &c->output.u2_tilde;
    if (!u) throw Error(ErrorKind::InvalidArgument, "unknown instance '" + w + "' (u1, u2, u1tilde, u2tilde)");
    *out = new ugfpc_instance{*u};
  });
}

void ugfpc_construction_free(ugfpc_construction* c) { delete c; }

void ugfpc_play_options_init(ugfpc_play_options* o) {
  if (!o) return;
  o->k = 2;
  o->spoiler = "random";
  o->duplicator = "tree";
  o->rounds = 20;
  o->seed = 0;
  o->depth = 4;
  o->r = 2;
  o->lift = 1;
  o->lazy = 0;
  o->repair = 1;
  o->matches = 1;
}

ugfpc_status ugfpc_play(const ugfpc_instance* a, const ugfpc_instance* b, const ugfpc_play_options* options,
                        char** out_json) {
  return guarded([&] {
    require(a && b && options && out_json, "null argument");
    require(options->rounds >= 1, "rounds must be at least 1");
    const int matches = options->matches < 1 ? 1 : options->matches;
    Players base = make_players(a->value, b->value, *options);
    if (matches == 1) {
      auto spoiler = make_spoiler(base, *options, options->seed);
      auto result = ugfpc::run_match(base.a, base.b, options->k, *spoiler, *base.duplicator, options->rounds);
      ojson j = ugfpc::match_to_json(result);
      emit(j, out_json);
      return;
    }
    ojson counts = {{"spoiler_win", 0}, {"duplicator_survived", 0}, {"spoiler_forfeit", 0},
                    {"duplicator_forfeit", 0}};
    ojson first_loss = nullptr;
    for (int i = 0; i < matches; ++i) {
      const auto seed = options->seed + static_cast<uint64_t>(i);
      auto dup = base.duplicator->clone();
      auto spoiler = make_spoiler(base, *options, seed);
      auto result = ugfpc::run_match(base.a, base.b, options->k, *spoiler, *dup, options->rounds);
      auto key = ugfpc::to_string(result.outcome);
      counts[key] = counts[key].get<int>() + 1;
      if (result.outcome != ugfpc::MatchOutcome::DuplicatorSurvived && first_loss.is_null()) {
        first_loss = ugfpc::match_to_json(result);
        first_loss["seed"] = seed;
      }
    }
    ojson j;
    j["matches"] = matches;
    j["seed"] = options->seed;
    j["outcomes"] = counts;
    j["first_non_survival"] = first_loss;
    emit(j, out_json);
  });
}

ugfpc_status ugfpc_search(const ugfpc_instance* a, const ugfpc_instance* b, const ugfpc_play_options* options,
                          char** out_json) {
  return guarded([&] {
    require(a && b && options && out_json, "null argument");
    require(options->depth >= 1, "depth must be at least 1");
    Players p = make_players(a->value, b->value, *options);
    ugfpc::Game game(p.a, p.b, options->k);
    auto r = ugfpc::search_spoiler_win(game, *p.duplicator, options->depth);
    ojson j;
    j["k"] = options->k;
    j["depth"] = options->depth;
    j["duplicator"] = p.duplicator->name();
    j["spoiler_wins"] = r.spoiler_wins;
    ojson line = ojson::array();
    for (const auto& mv : r.line) line.push_back(ojson{{"pickup", mv.pickup}, {"place", p.a->name(mv.place)}});
    j["line"] = line;
    j["nodes"] = r.nodes;
    emit(j, out_json);
  });
}

ugfpc_status ugfpc_service_create(ugfpc_service** out) {
  return guarded([&] {
    require(out != nullptr, "null argument");
    *out = new ugfpc_service();
  });
}

ugfpc_status ugfpc_service_handle(ugfpc_service* s, const char* method, const char* path, const char* body,
                                  int* http_status, char** out_json) {
  return guarded([&] {
    require(s && method && path && http_status && out_json, "null argument");
    auto reply = s->service.handle(method, path, body ? body : "");
    *http_status = reply.status;
    *out_json = dup_string(reply.body.is_null() ? std::string() : reply.body.dump());
  });
}

ugfpc_status ugfpc_service_listen(ugfpc_service* s, const char* host, int port) {
  return guarded([&] {
    require(s && host, "null argument");
    require(port >= 0 && port <= 65535, "port out of range");
    if (!s->server.listen(host, port))
      throw Error(ErrorKind::Io, std::string("cannot listen on ") + host + ":" + std::to_string(port));
  });
}

void ugfpc_service_stop(ugfpc_service* s) {
  if (s) s->server.stop();
}

void ugfpc_service_free(ugfpc_service* s) { delete s; }

}  // extern "C"
