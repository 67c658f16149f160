#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "ugfpc/ugfpc.h"

namespace {

using ojson = nlohmann::ordered_json;

enum Exit { kOk = 0, kDomain = 1, kUsage = 2 };

bool human = false;

/// Raised when a C call fails; carries its status and message to main.
struct Failure {
  ugfpc_status status;
  std::string message;
};

void check(ugfpc_status s) {
  if (s != UGFPC_OK) throw Failure{s, ugfpc_last_error()};
}

std::string take(char* s) {
  std::string out = s ? s : "";
  ugfpc_free_string(s);
  return out;
}

void print_human(const ojson& j, const std::string& indent) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    const auto& v = it.value();
    if (v.is_object()) {
      std::cout << indent << it.key() << ":\n";
      print_human(v, indent + "  ");
    } else if (v.is_string()) {
      std::cout << indent << it.key() << ": " << v.get<std::string>() << '\n';
    } else {
      std::cout << indent << it.key() << ": " << v.dump() << '\n';
    }
  }
}

void print(const ojson& j) {
  if (human && j.is_object()) {
    print_human(j, "");
  } else {
    std::cout << j.dump(2) << '\n';
  }
}

void print_raw(const std::string& json) { print(ojson::parse(json)); }

template <class T, void (*Free)(T*)>
struct Handle {
  T* p = nullptr;
  Handle() = default;
  Handle(const Handle&) = delete;
  Handle& operator=(const Handle&) = delete;
  ~Handle() { Free(p); }
};

using Instance = Handle<ugfpc_instance, ugfpc_instance_free>;
using Graph = Handle<ugfpc_graph, ugfpc_graph_free>;
using Construction = Handle<ugfpc_construction, ugfpc_construction_free>;

void load_instance(const std::string& path, Instance& out) { check(ugfpc_instance_load(path.c_str(), &out.p)); }

struct PlayArgs {
  std::string a, b, preset;
  int k = 2;
  std::string spoiler = "random";
  std::string duplicator = "tree";
  int rounds = 20;
  std::uint64_t seed = 0;
  int depth = 4;
  int r = 2;
  bool no_lift = false;
  bool lazy = false;
  bool no_repair = false;
  int matches = 1;
};

void load_pair(const PlayArgs& p, Instance& a, Instance& b) {
  if (!p.preset.empty()) {
    check(ugfpc_instance_preset((p.preset + "-u1").c_str(), &a.p));
    check(ugfpc_instance_preset((p.preset + "-u2").c_str(), &b.p));
    return;
  }
  if (p.a.empty() || p.b.empty()) throw CLI::RequiredError("--preset or both --a and --b");
  load_instance(p.a, a);
  load_instance(p.b, b);
}

ugfpc_play_options play_options(const PlayArgs& p) {
  ugfpc_play_options o;
  ugfpc_play_options_init(&o);
  o.k = p.k;
  o.spoiler = p.spoiler.c_str();
  o.duplicator = p.duplicator.c_str();
  o.rounds = p.rounds;
  o.seed = p.seed;
  o.depth = p.depth;
  o.r = p.r;
  o.lift = p.no_lift ? 0 : 1;
  o.lazy = p.lazy ? 1 : 0;
  o.repair = p.no_repair ? 0 : 1;
  o.matches = p.matches;
  return o;
}

void add_play_flags(CLI::App* cmd, PlayArgs& p) {
  cmd->add_option("--a", p.a, "Instance file for structure A (base instance unless --no-lift)");
  cmd->add_option("--b", p.b, "Instance file for structure B");
  cmd->add_option("--preset", p.preset, "Bundled pair instead of --a/--b")->check(CLI::IsMember({"fig2", "fig3"}));
  cmd->add_option("--k", p.k, "Pebble pairs")->check(CLI::PositiveNumber);
  cmd->add_option("--duplicator", p.duplicator, "tree or identity")->check(CLI::IsMember({"tree", "identity"}));
  cmd->add_option("--r", p.r, "Tree strategy segment threshold")->check(CLI::PositiveNumber);
  cmd->add_option("--depth", p.depth, "Exhaustive search depth")->check(CLI::PositiveNumber);
  cmd->add_flag("--no-lift", p.no_lift, "Play on the given instances as they are");
  cmd->add_flag("--lazy", p.lazy, "Tree strategy: compute g* only for the placed vertex");
  cmd->add_flag("--no-repair", p.no_repair, "Tree strategy: disable the pebbled-neighbor repair");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Unique-games gap construction, exact solver and pebble-game harness", "ugfpc"};
  app.require_subcommand(1);
  app.add_flag("--human", human, "Readable text instead of JSON");
  app.set_version_flag("--version", std::string(ugfpc_version()));

  std::string epsilon, delta, alpha;
  int ell = 1;
  auto* params = app.add_subcommand("params", "Derive d, gamma, m, r from epsilon, delta, ell");
  params->add_option("--epsilon", epsilon, "Rational in (0, 1/2)")->required();
  params->add_option("--delta", delta, "Positive rational")->required();
  params->add_option("--ell", ell, "Bundle dimension l >= 1")->required();

  std::string graph_file, graph_preset, out_dir;
  int m = 2, r = 2, k = 0;
  int rr_n = 0, rr_d = 3, rr_girth = 3;
  std::uint64_t seed = 0, max_tries = 1000;
  std::string c_epsilon, c_delta;
  auto* construct = app.add_subcommand("construct", "Sample Z, b on a base graph and build U1, U2");
  auto* g_file = construct->add_option("--graph", graph_file, "graph-v1 JSON file");
  auto* g_preset = construct->add_option("--preset", graph_preset, "K3, K4, Petersen, Heawood, McGee, TutteCoxeter");
  auto* g_random = construct->add_option("--random-regular", rr_n, "Random regular graph on N vertices");
  g_file->excludes(g_preset)->excludes(g_random);
  g_preset->excludes(g_random);
  construct->add_option("--degree", rr_d, "Degree for --random-regular");
  construct->add_option("--min-girth", rr_girth, "Girth bound for --random-regular");
  construct->add_option("--max-tries", max_tries, "Attempts for --random-regular");
  construct->add_option("--m", m, "Group dimension");
  construct->add_option("--ell", ell, "Subspace dimension");
  construct->add_option("--r", r, "Path length for good edges");
  construct->add_option("--seed", seed, "Seed");
  construct->add_option("--epsilon", c_epsilon, "With --delta and --k: compare against derived parameters");
  construct->add_option("--delta", c_delta, "See --epsilon");
  construct->add_option("--k", k, "See --epsilon");
  construct->add_option("--out", out_dir, "Directory for graph, edge data, instances and report");

  std::string in_file, out_file;
  std::uint64_t budget = 0;
  auto* opt = app.add_subcommand("opt", "Exact optimum with a witness");
  opt->add_option("--in", in_file, "Instance file")->required();
  opt->add_option("--budget", budget, "Assignment budget (default 2^30)");

  auto* satcheck = app.add_subcommand("satcheck", "Complete satisfiability with a conflict certificate");
  satcheck->add_option("--in", in_file, "Instance file")->required();

  auto* lift = app.add_subcommand("lift", "Label-lifted instance");
  lift->add_option("--in", in_file, "Instance file")->required();
  lift->add_option("--out", out_file, "Output file (stdout when absent)");

  PlayArgs pa;
  auto* play = app.add_subcommand("play", "Run a pebble-game match");
  add_play_flags(play, pa);
  play->add_option("--spoiler", pa.spoiler, "random, cycle or exhaustive")
      ->check(CLI::IsMember({"random", "cycle", "exhaustive"}));
  play->add_option("--rounds", pa.rounds, "Maximum rounds")->check(CLI::PositiveNumber);
  play->add_option("--seed", pa.seed, "Seed");
  play->add_option("--matches", pa.matches, "Play seeds seed..seed+N-1 and summarize")->check(CLI::PositiveNumber);

  PlayArgs sa;
  auto* search = app.add_subcommand("search", "Exhaustive search for a forced Spoiler win");
  add_play_flags(search, sa);

  int d = 3;
  std::uint64_t trials = 10000;
  auto* decay = app.add_subcommand("decay", "Monte Carlo of the non-spanning path statistic X_i");
  decay->add_option("--m", m, "Group dimension")->required();
  decay->add_option("--ell", ell, "Subspace dimension")->required();
  decay->add_option("--d", d, "Branching degree")->required();
  decay->add_option("--r", r, "Longest path length")->required();
  decay->add_option("--trials", trials, "Trials");
  decay->add_option("--seed", seed, "Seed");

  auto* gapcheck = app.add_subcommand("gapcheck", "Choose l for an alpha-approximation gap");
  gapcheck->add_option("--alpha", alpha, "Rational in (0, 1]")->required();

  int n = 1;
  auto* inequality = app.add_subcommand("inequality", "Exact slack of the counting inequality at (d, n)");
  inequality->add_option("--d", d, "d >= 3")->required();
  inequality->add_option("--n", n, "n >= 1")->required();

  std::string preset_name;
  auto* preset = app.add_subcommand("preset", "Write a bundled instance");
  preset->add_option("name", preset_name, "fig2-u1, fig2-u2, fig3-u1, fig3-u2 (optionally -lifted)")->required();
  preset->add_option("--out", out_file, "Output file (stdout when absent)");

  std::string host = "127.0.0.1";
  int port = 8080;
  auto* serve = app.add_subcommand("serve", "HTTP session service");
  serve->add_option("--host", host, "Bind address");
  serve->add_option("--port", port, "Port")->check(CLI::Range(0, 65535));

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    char* out = nullptr;
    if (params->parsed()) {
      check(ugfpc_derive_params(epsilon.c_str(), delta.c_str(), ell, &out));
      print_raw(take(out));
    } else if (construct->parsed()) {
      Graph g;
      if (!graph_file.empty()) {
        check(ugfpc_graph_load(graph_file.c_str(), &g.p));
      } else if (!graph_preset.empty()) {
        check(ugfpc_graph_preset(graph_preset.c_str(), &g.p));
      } else if (rr_n > 0) {
        check(ugfpc_graph_random_regular(rr_n, rr_d, rr_girth, seed, max_tries, &g.p));
      } else {
        std::cerr << "construct: one of --graph, --preset, --random-regular is required\n"
                  << construct->help();
        return kUsage;
      }
      ugfpc_construct_options o{m, ell, r, seed, c_epsilon.empty() ? nullptr : c_epsilon.c_str(),
                                c_delta.empty() ? nullptr : c_delta.c_str(), k};
      Construction c;
      check(ugfpc_construct(g.p, &o, &c.p));
      if (!out_dir.empty()) check(ugfpc_construction_write(c.p, out_dir.c_str()));
      check(ugfpc_construction_report(c.p, &out));
      print_raw(take(out));
    } else if (opt->parsed()) {
      Instance u;
      load_instance(in_file, u);
      check(ugfpc_exact_opt(u.p, budget, &out));
      print_raw(take(out));
    } else if (satcheck->parsed()) {
      Instance u;
      load_instance(in_file, u);
      check(ugfpc_satcheck(u.p, &out));
      print_raw(take(out));
    } else if (lift->parsed()) {
      Instance u, lifted;
      load_instance(in_file, u);
      check(ugfpc_instance_lift(u.p, &lifted.p));
      if (out_file.empty()) {
        check(ugfpc_instance_to_json(lifted.p, &out));
        std::cout << take(out);
      } else {
        check(ugfpc_instance_save(lifted.p, out_file.c_str()));
      }
    } else if (play->parsed()) {
      Instance a, b;
      load_pair(pa, a, b);
      auto o = play_options(pa);
      check(ugfpc_play(a.p, b.p, &o, &out));
      print_raw(take(out));
    } else if (search->parsed()) {
      Instance a, b;
      load_pair(sa, a, b);
      auto o = play_options(sa);
      check(ugfpc_search(a.p, b.p, &o, &out));
      print_raw(take(out));
    } else if (decay->parsed()) {
      check(ugfpc_decay(m, ell, d, r, trials, seed, &out));
      print_raw(take(out));
    } else if (gapcheck->parsed()) {
      check(ugfpc_gapcheck(alpha.c_str(), &out));
      print_raw(take(out));
    } else if (inequality->parsed()) {
      check(ugfpc_lemma53_gap(d, n, &out));
      std::string gap = take(out);
      print(ojson{{"d", d}, {"n", n}, {"gap", gap}, {"nonnegative", gap.front() != '-'}});
    } else if (preset->parsed()) {
      Instance u;
      check(ugfpc_instance_preset(preset_name.c_str(), &u.p));
      if (out_file.empty()) {
        check(ugfpc_instance_to_json(u.p, &out));
        std::cout << take(out);
      } else {
        check(ugfpc_instance_save(u.p, out_file.c_str()));
      }
    } else if (serve->parsed()) {
      ugfpc_service* s = nullptr;
      check(ugfpc_service_create(&s));
      std::cerr << "serving on http://" << host << ":" << port << "\n";
      auto status = ugfpc_service_listen(s, host.c_str(), port);
      std::string message = ugfpc_last_error();
      ugfpc_service_free(s);
      if (status != UGFPC_OK) throw Failure{status, message};
    }
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  } catch (const Failure& f) {
    ojson err;
    err["error"] = {{"status", ugfpc_status_name(f.status)}, {"message", f.message}};
    std::cout << err.dump(2) << '\n';
    return kDomain;
  }
  return kOk;
}
