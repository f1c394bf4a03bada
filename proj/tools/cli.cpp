#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <random>

#include "vact/activities.hpp"
#include "vact/complete_sets.hpp"
#include "vact/edge_list.hpp"
#include "vact/error.hpp"
#include "vact/families.hpp"
#include "vact/labelling_search.hpp"
#include "vact/pruned.hpp"
#include "vact/report.hpp"
#include "vact/verify.hpp"

namespace vact::cli {

namespace {

constexpr std::uint64_t kDefaultSeed = 42;

struct FamilyArgs {
  std::string name;
  int n = 0;
  int m = 0;
  std::vector<int> sizes;

  FamilySpec spec() const {
    const auto family = parse_family(name);
    if (!family) throw InvalidInput("unknown family \"" + name + "\"");
    return {*family, n, m, sizes};
  }
};

void add_family_options(CLI::App *cmd, FamilyArgs &args, bool positional) {
  if (positional) {
    cmd->add_option("family", args.name, "kn, join, pendant, lex or colex")->required();
  } else {
    cmd->add_option("--family", args.name, "kn, join, pendant, lex or colex");
  }
  cmd->add_option("--n", args.n, "clique size or vertex count");
  cmd->add_option("--m", args.m, "second size or edge count");
  cmd->add_option("--sizes", args.sizes, "pendant block sizes, comma separated")->delimiter(',');
}

// Writes to --out when given, else to the command's output stream.
void emit(std::ostream &out, const std::string &path, const std::string &text) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path);
  if (!file) throw InvalidInput("cannot write " + path);
  file << text;
}

std::string dump(const Json &j) { return j.dump(2) + "\n"; }

Graph random_graph(int n, double p, std::uint64_t seed) {
  if (p < 0.0 || p > 1.0) throw InvalidInput("edge probability must lie in [0, 1]");
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (Vertex u = 1; u <= n; ++u) {
    for (Vertex v = u + 1; v <= n; ++v) {
      if (coin(rng)) edges.push_back({u, v});
    }
  }
  return new_graph(n, edges);
}

SearchMode parse_search_mode(const std::string &s) {
  if (s == "exhaustive") return SearchMode::exhaustive;
  if (s == "random") return SearchMode::random;
  throw InvalidInput("unknown search mode \"" + s + "\"");
}

LeafMode parse_leaf_mode(const std::string &s) {
  if (s == "tree") return LeafMode::tree_leaves;
  if (s == "host") return LeafMode::host_leaves;
  throw InvalidInput("unknown leaf mode \"" + s + "\"");
}

ChildMode parse_child_mode(const std::string &s) {
  if (s == "host") return ChildMode::host_higher_level;
  if (s == "tree") return ChildMode::tree_children;
  throw InvalidInput("unknown child mode \"" + s + "\"");
}

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
  CLI::App app{"Vertex activities and interval partitions of maximal independent sets", "vact"};
  app.require_subcommand(1);

  std::string file;
  std::string out_path;
  int bound = kDefaultExhaustiveBound;
  std::function<int()> action;

  auto add_io = [&](CLI::App *cmd, bool needs_file) {
    if (needs_file) cmd->add_option("file", file, "edge-list file, - for stdin")->required();
    cmd->add_option("--out", out_path, "write the report here instead of stdout");
  };

  // cover
  bool reversed = false;
  bool augment = false;
  auto *cover_cmd = app.add_subcommand("cover", "activities and interval of every MIS");
  add_io(cover_cmd, true);
  cover_cmd->add_flag("--reversed", reversed, "count neighbours of larger members as active");
  cover_cmd->add_flag("--augment", augment,
                      "report a larger independent set inside S ∪ Ext(S) when one exists");
  cover_cmd->add_option("--bound", bound, "largest n for the exhaustive scan");
  cover_cmd->callback([&] {
    action = [&] {
      const Graph g = read_edge_list_file(file);
      const Cover c = cover(g, reversed ? ActivityMode::reversed : ActivityMode::standard);
      Json j = cover_report(c, partition_verdict(c, bound));
      if (reversed) j["mode"] = "reversed";
      if (augment) {
        for (std::size_t i = 0; i < c.entries.size(); ++i) {
          const auto bigger = larger_independent_in_upper(g, c.entries[i].generator);
          j["entries"][i]["larger_independent"] = bigger ? to_json(*bigger) : Json(nullptr);
        }
      }
      emit(out, out_path, dump(j));
      return kExitOk;
    };
  });

  // partition-check
  auto *check_cmd = app.add_subcommand("partition-check", "is the cover a partition of 2^V");
  add_io(check_cmd, true);
  check_cmd->add_option("--bound", bound, "largest n for the exhaustive scan");
  check_cmd->callback([&] {
    action = [&] {
      const Cover c = cover(read_edge_list_file(file));
      emit(out, out_path, dump(partition_report(c, partition_verdict(c, bound), bound)));
      return kExitOk;
    };
  });

  // complete-sets
  auto *complete_cmd = app.add_subcommand("complete-sets", "externally/internally complete sets");
  add_io(complete_cmd, true);
  complete_cmd->callback([&] {
    action = [&] {
      emit(out, out_path, dump(complete_sets_report(read_edge_list_file(file))));
      return kExitOk;
    };
  });

  // generate / predict
  FamilyArgs family;
  auto *generate_cmd = app.add_subcommand("generate", "emit a family graph as an edge list");
  add_family_options(generate_cmd, family, true);
  add_io(generate_cmd, false);
  generate_cmd->callback([&] {
    action = [&] {
      emit(out, out_path, emit_edge_list(build_family(family.spec())));
      return kExitOk;
    };
  });

  auto *predict_cmd = app.add_subcommand("predict", "closed-form cover of a family graph");
  add_family_options(predict_cmd, family, true);
  add_io(predict_cmd, false);
  predict_cmd->callback([&] {
    action = [&] {
      const FamilySpec spec = family.spec();
      const Cover predicted = predicted_cover(spec);
      const bool verified = predicted == cover(build_family(spec));
      Json j = cover_report(predicted, partition_verdict(predicted));
      j["family"] = to_string(spec.family);
      j["verified"] = verified;
      emit(out, out_path, dump(j));
      return verified ? kExitOk : kExitVerificationFailed;
    };
  });

  // pruned
  std::string tree_file;
  std::string host_file;
  int root = 0;
  std::string leaf_mode_name = "tree";
  std::string child_mode_name = "host";
  auto *pruned_cmd = app.add_subcommand("pruned", "interval partition of a pruned graph");
  pruned_cmd->add_option("--tree", tree_file, "spanning pruned tree")->required();
  pruned_cmd->add_option("--host", host_file, "host graph")->required();
  pruned_cmd->add_option("--root", root, "root vertex (default: tree centre)");
  pruned_cmd->add_option("--leaf-mode", leaf_mode_name, "tree or host");
  pruned_cmd->add_option("--child-mode", child_mode_name, "host or tree");
  add_io(pruned_cmd, false);
  pruned_cmd->callback([&] {
    action = [&] {
      const LeafMode leaf_mode = parse_leaf_mode(leaf_mode_name);
      const ChildMode child_mode = parse_child_mode(child_mode_name);
      const Graph tree = read_edge_list_file(tree_file);
      const Graph host = read_edge_list_file(host_file);
      PrunedInstance inst = make_pruned_instance(tree, host, root ? root : tree_center(tree));

      Json relabelling = nullptr;
      if (level_labelling_violation(inst.levels)) {
        const Permutation perm = level_labelling(inst.tree, inst.levels.root);
        inst = relabel(inst, perm);
        relabelling = perm.images();
      }
      const PrunedPartition p = pruned_partition(inst, leaf_mode);
      const PartitionVerdict v = partition_verdict(p.cover);
      const BijectionReport b = check_bijection(inst, leaf_mode, child_mode);
      const LeafActivityReport leaf = check_leaf_activity(inst);

      Json j = cover_report(p.cover, v);
      for (std::size_t i = 0; i < p.preimages.size(); ++i) {
        j["entries"][i]["preimage"] = to_json(p.preimages[i]);
        j["entries"][i]["lower_is_preimage"] = static_cast<bool>(p.lower_matches[i]);
      }
      j["root"] = inst.levels.root;
      j["relabelling"] = relabelling;
      j["leaf_mode"] = to_string(leaf_mode);
      j["child_mode"] = to_string(child_mode);
      j["leaf_sets"] = {{"tree", to_json(inst.leaf_set_t)},
                        {"host", to_json(inst.leaf_set_h)},
                        {"differ", p.leaf_modes_differ}};
      j["methods"] = {{"pairwise_disjoint", v.pairwise_disjoint},
                      {"size_identity", v.size_identity},
                      {"exhaustive", v.exhaustive_partition ? Json(*v.exhaustive_partition)
                                                            : Json(nullptr)}};
      j["bijection"] = bijection_json(b);
      j["leaf_activity"] = {{"holds", leaf.holds},
                            {"first_failure",
                             leaf.first_failure ? to_json(*leaf.first_failure) : Json(nullptr)},
                            {"leaves_look_down", leaf.leaves_look_down}};
      emit(out, out_path, dump(j));
      const bool ok = v.is_partition && v.methods_agree() && b.is_bijection() && leaf.holds;
      return ok ? kExitOk : kExitVerificationFailed;
    };
  });

  // search-labelling
  std::string search_mode = "exhaustive";
  SearchOptions search;
  search.seed = kDefaultSeed;
  auto *search_cmd = app.add_subcommand("search-labelling", "labelling with fewest overlaps");
  add_io(search_cmd, true);
  search_cmd->add_option("--mode", search_mode, "exhaustive or random");
  search_cmd->add_option("--budget", search.budget, "number of labellings to try");
  search_cmd->add_option("--seed", search.seed, "random mode seed");
  search_cmd->callback([&] {
    action = [&] {
      search.mode = parse_search_mode(search_mode);
      emit(out, out_path, dump(search_report(search_labelling(read_edge_list_file(file), search))));
      return kExitOk;
    };
  });

  // verify
  int random_n = 0;
  double random_p = 0.3;
  std::uint64_t seed = kDefaultSeed;
  int oracle_bound = kDefaultOracleBound;
  auto *verify_cmd = app.add_subcommand("verify", "run the brute-force invariant suite");
  verify_cmd->add_option("file", file, "edge-list file");
  add_family_options(verify_cmd, family, false);
  verify_cmd->add_option("--random-n", random_n, "check G(n, p) instead of a file");
  verify_cmd->add_option("--p", random_p, "edge probability for --random-n");
  verify_cmd->add_option("--seed", seed, "seed for --random-n");
  verify_cmd->add_option("--bound", oracle_bound, "largest n for exhaustive checks");
  verify_cmd->add_option("--out", out_path, "write the report here instead of stdout");
  verify_cmd->callback([&] {
    const int sources = !file.empty() + !family.name.empty() + (random_n > 0);
    if (sources != 1) {
      throw CLI::ValidationError("verify", "give exactly one of a file, --family or --random-n");
    }
    action = [&] {
      Json extra = Json::object();
      std::optional<FamilySpec> spec;
      Graph g;
      if (!family.name.empty()) {
        spec = family.spec();
        g = build_family(*spec);
        extra["family"] = to_string(spec->family);
      } else if (random_n > 0) {
        g = random_graph(random_n, random_p, seed);
        extra["random"] = {{"n", random_n}, {"p", random_p}, {"seed", seed}};
      } else {
        g = read_edge_list_file(file);
      }
      const VerifyReport r = verify_all(g, oracle_bound, spec);
      Json j = to_json(r);
      j.update(extra);
      emit(out, out_path, dump(j));
      return r.passed() ? kExitOk : kExitVerificationFailed;
    };
  });

  // polynomial
  auto *poly_cmd = app.add_subcommand("polynomial", "activity polynomial f(G; x, y, z)");
  add_io(poly_cmd, true);
  poly_cmd->callback([&] {
    action = [&] {
      const Graph g = read_edge_list_file(file);
      emit(out, out_path,
           dump(polynomial_report(activity_polynomial(g),
                                  enumerate_maximal_independent_sets(g).size())));
      return kExitOk;
    };
  });

  try {
    app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
  } catch (const CLI::CallForHelp &) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp &) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError &e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  try {
    return action();
  } catch (const InvalidInput &e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalidInput;
  }
}

} // namespace vact::cli
