#include "morsecert/cli.hpp"

#include <algorithm>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "morsecert/cfs.hpp"
#include "morsecert/class_c.hpp"
#include "morsecert/classifier.hpp"
#include "morsecert/corpus.hpp"
#include "morsecert/cutset.hpp"
#include "morsecert/errors.hpp"
#include "morsecert/graph_io.hpp"
#include "morsecert/itinerary.hpp"
#include "morsecert/obstruction.hpp"
#include "morsecert/words.hpp"

namespace morsecert {

namespace {

struct Options {
  std::string graph_file;
  std::string format = "json";
  std::string group = "racg";
  std::string cls = "C";
  std::uint64_t budget = kDefaultSplitBudget;
  std::string split;
  std::string word;
  std::string w1;
  std::string w2;
  int radius = -1;
  std::string graph_dir;
  bool serial = false;
};

SimplicialGraph load(Options const& o, std::ostream& err) {
  std::vector<std::string> warnings;
  SimplicialGraph g;
  if (o.graph_file == "-") {
    std::string text(std::istreambuf_iterator<char>(std::cin), {});
    auto parsed = parse_graph_with_warnings(text);
    g = std::move(parsed.graph);
    warnings = std::move(parsed.warnings);
  } else {
    g = read_graph_file(o.graph_file, &warnings);
  }
  for (auto const& w : warnings) err << "warning: " << w << "\n";
  return g;
}

void emit(std::ostream& out, nlohmann::json const& j) { out << j.dump(2) << "\n"; }

void require_format(Options const& o, std::initializer_list<char const*> allowed) {
  for (auto const* f : allowed) {
    if (o.format == f) return;
  }
  throw InvalidArgument("format '" + o.format + "' not supported by this subcommand");
}

DecideOptions decide_options(Options const& o) {
  DecideOptions d;
  d.split_budget = o.budget;
  return d;
}

int cmd_classify(Options const& o, std::ostream& out, std::ostream& err) {
  require_format(o, {"json", "text", "dot"});
  auto g = load(o, err);
  auto v = classify(g, group_kind_from_string(o.group), decide_options(o));
  if (o.format == "json") {
    emit(out, verdict_to_json(g, v));
  } else if (o.format == "dot") {
    out << (v.certificate ? certificate_to_dot(g, *v.certificate) : graph_to_dot(g));
  } else {
    out << "group: " << to_string(v.group) << "\nverdict: " << to_string(v.verdict)
        << "\nrule: " << to_string(v.justification) << "\nreason: " << v.reason << "\n";
  }
  return v.justification == Justification::BudgetExceeded ? exit_code::kBudgetExceeded
                                                           : exit_code::kOk;
}

int cmd_decompose(Options const& o, std::ostream& out, std::ostream& err) {
  require_format(o, {"json", "text", "dot"});
  auto g = load(o, err);
  auto cert = decide(g, graph_class_from_string(o.cls), decide_options(o));
  if (o.format == "json") {
    emit(out, certificate_to_json(g, cert));
  } else if (o.format == "dot") {
    out << certificate_to_dot(g, cert);
  } else {
    out << "class: " << to_string(cert.graph_class) << "\nkind: " << to_string(cert.kind)
        << "\nnodes: " << cert.node_count() << "\n";
  }
  return cert.member() ? exit_code::kOk : exit_code::kNegative;
}

int cmd_cfs(Options const& o, std::ostream& out, std::ostream& err) {
  require_format(o, {"json", "text", "dot"});
  auto g = load(o, err);
  auto q = four_cycle_graph(g);
  auto c0 = is_cfs0(g);
  bool cfs = is_cfs(g);
  if (o.format == "dot") {
    out << four_cycle_graph_to_dot(g, q);
  } else if (o.format == "json") {
    emit(out, {{"cfs", cfs},
               {"cfs0", c0.member},
               {"reason", c0.member ? nlohmann::json(nullptr) : nlohmann::json(c0.reason)},
               {"four_cycle_graph", four_cycle_graph_to_json(g, q)}});
  } else {
    out << "cfs: " << (cfs ? "true" : "false") << "\ncfs0: " << (c0.member ? "true" : "false")
        << (c0.member ? "" : " (" + c0.reason + ")") << "\nfour-cycles: " << q.nodes.size()
        << "\n";
  }
  return exit_code::kOk;
}

int cmd_obstruction(Options const& o, std::ostream& out, std::ostream& err) {
  require_format(o, {"json", "text"});
  auto g = load(o, err);
  auto c = find_circle_obstruction(g);
  if (o.format == "json") {
    emit(out, {{"obstruction", c.has_value()},
               {"cycle", c ? cycle_to_json(g, *c) : nlohmann::json(nullptr)}});
  } else {
    out << "obstruction: ";
    if (c) {
      for (Vertex v : c->vertices) out << g.label(v) << " ";
      out << "\n";
    } else {
      out << "none\n";
    }
  }
  return c ? exit_code::kOk : exit_code::kNegative;
}

int cmd_itinerary(Options const& o, std::ostream& out, std::ostream& err) {
  require_format(o, {"json", "text"});
  auto g = load(o, err);
  auto split = parse_split(g, o.split);
  auto w = parse_word(g, o.word);
  auto syl = syllable_decomposition(g, w, split);
  auto it = itinerary_from_syllables(g, syl, split);
  if (o.format == "json") {
    emit(out, {{"split", split_to_json(g, split)},
               {"word", word_to_json(g, w)},
               {"normal_form", word_to_json(g, normal_form(g, w))},
               {"syllables", syllables_to_json(g, syl)},
               {"itinerary", itinerary_to_json(g, it)},
               {"start_block", {{"side", "1"}, {"rep", nlohmann::json::array()}}}});
  } else {
    for (std::size_t i = 0; i < it.blocks.size(); ++i) {
      if (i > 0) {
        auto rep = word_to_string(g, it.walls[i - 1].rep);
        out << " | " << (rep.empty() ? "e" : rep) << "·WL | ";
      }
      auto rep = word_to_string(g, it.blocks[i].rep);
      out << (rep.empty() ? "e" : rep) << "·W" << to_string(it.blocks[i].side);
    }
    out << "\n";
  }
  return exit_code::kOk;
}

int cmd_cutset(Options const& o, std::ostream& out, std::ostream& err) {
  require_format(o, {"json", "text"});
  auto g = load(o, err);
  auto split = parse_split(g, o.split);
  auto w1 = parse_word(g, o.w1);
  auto w2 = parse_word(g, o.w2);
  int radius = o.radius;
  if (radius < 0) {
    radius = static_cast<int>(
                 std::max(normal_form(g, w1).length(), normal_form(g, w2).length())) + 2;
  }
  auto r = cutset_check(g, w1, w2, split, radius);
  if (o.format == "json") {
    emit(out, cutset_to_json(g, r));
  } else {
    auto rep = word_to_string(g, r.wall.rep);
    out << "wall: " << (rep.empty() ? "e" : rep) << "·WL\nseparated: "
        << (r.separated ? "true" : "false") << "\n";
  }
  return r.separated ? exit_code::kOk : exit_code::kNegative;
}

int cmd_corpus(std::string const& action, Options const& o, std::ostream& out) {
  require_format(o, {"json", "text"});
  auto entries = corpus_entries();
  if (action == "list") {
    if (o.format == "json") {
      nlohmann::json rows = nlohmann::json::array();
      for (auto const& e : entries) {
        rows.push_back({{"name", e.name},
                        {"source", e.source},
                        {"transcription_pending", e.awaiting_transcription()},
                        {"graph", e.graph ? graph_to_json(*e.graph) : nlohmann::json(nullptr)}});
      }
      emit(out, rows);
    } else {
      for (auto const& e : entries) {
        out << e.name << (e.awaiting_transcription() ? " (awaiting transcription)" : "") << "\n";
      }
    }
    return exit_code::kOk;
  }
  std::optional<std::string> dir;
  if (!o.graph_dir.empty()) dir = o.graph_dir;
  auto results = run_corpus(entries, decide_options(o), dir, !o.serial);
  bool failed = std::any_of(results.begin(), results.end(),
                            [](auto const& r) { return r.status == EntryStatus::Fail; });
  if (o.format == "json") {
    emit(out, corpus_results_to_json(entries, results));
  } else {
    for (auto const& r : results) {
      out << r.name << ": " << to_string(r.status) << "\n";
      for (auto const& c : r.claims) {
        out << "  " << c.claim.property << " = " << c.claim.expected;
        if (r.status != EntryStatus::Skipped) {
          out << " (got " << c.actual << (c.pass ? ", ok)" : ", MISMATCH)");
        }
        out << "  [" << c.claim.backing << "]\n";
      }
      if (!r.error.empty()) out << "  error: " << r.error << "\n";
    }
  }
  return failed ? exit_code::kNegative : exit_code::kOk;
}

}  // namespace

int run_command(std::vector<std::string> const& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Morse boundary certificates for right-angled Coxeter and Artin groups",
               "morsecert"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* sub, bool needs_graph) {
    sub->add_option("--format", o.format, "Output format")
        ->check(CLI::IsMember({"json", "dot", "text"}));
    sub->add_option("--budget", o.budget, "Split-search budget");
    if (needs_graph) sub->add_option("graph", o.graph_file, "Graph file, or - for stdin")->required();
  };

  auto* classify_cmd = app.add_subcommand("classify", "Classify the Morse boundary");
  add_common(classify_cmd, true);
  classify_cmd->add_option("--group", o.group, "racg or raag")
      ->check(CLI::IsMember({"racg", "raag"}));

  auto* decompose_cmd = app.add_subcommand("decompose", "Certificate for class C or C'");
  add_common(decompose_cmd, true);
  decompose_cmd->add_option("--class", o.cls, "C or C'")->check(CLI::IsMember({"C", "C'"}));

  auto* cfs_cmd = app.add_subcommand("cfs", "Four-cycle graph and CFS / CFS0 tests");
  add_common(cfs_cmd, true);

  auto* obstruction_cmd = app.add_subcommand("obstruction", "Circle obstruction search");
  add_common(obstruction_cmd, true);

  auto* itinerary_cmd = app.add_subcommand("itinerary", "Itinerary of a word for a split");
  add_common(itinerary_cmd, true);
  itinerary_cmd->add_option("--split", o.split, "d1=<labels>,d2=<labels>")->required();
  itinerary_cmd->add_option("--word", o.word, "Word (labels separated by spaces)")->required();

  auto* cutset_cmd = app.add_subcommand("cutset", "Wall separation check in a Cayley ball");
  add_common(cutset_cmd, true);
  cutset_cmd->add_option("--split", o.split, "d1=<labels>,d2=<labels>")->required();
  cutset_cmd->add_option("--w1", o.w1, "First word")->required();
  cutset_cmd->add_option("--w2", o.w2, "Second word")->required();
  cutset_cmd->add_option("--radius", o.radius, "Ball radius (default: max length + 2)");

  auto* corpus_cmd = app.add_subcommand("corpus", "Built-in example graphs");
  std::string corpus_action;
  corpus_cmd->add_option("action", corpus_action, "run or list")
      ->required()
      ->check(CLI::IsMember({"run", "list"}));
  add_common(corpus_cmd, false);
  corpus_cmd->add_option("--graphs", o.graph_dir,
                         "Directory with <entry>.graph files for pending entries");
  corpus_cmd->add_flag("--serial", o.serial, "Evaluate entries on one thread");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (CLI::CallForHelp const&) {
    out << app.help();
    return exit_code::kOk;
  } catch (CLI::ParseError const& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return exit_code::kInputError;
  }

  try {
    if (*classify_cmd) return cmd_classify(o, out, err);
    if (*decompose_cmd) return cmd_decompose(o, out, err);
    if (*cfs_cmd) return cmd_cfs(o, out, err);
    if (*obstruction_cmd) return cmd_obstruction(o, out, err);
    if (*itinerary_cmd) return cmd_itinerary(o, out, err);
    if (*cutset_cmd) return cmd_cutset(o, out, err);
    if (*corpus_cmd) return cmd_corpus(corpus_action, o, out);
  } catch (BudgetExceeded const& e) {
    err << "budget exceeded: " << e.what() << "\n";
    return exit_code::kBudgetExceeded;
  } catch (Error const& e) {
    err << "error: " << e.what() << "\n";
    return exit_code::kInputError;
  } catch (nlohmann::json::exception const& e) {
    err << "error: " << e.what() << "\n";
    return exit_code::kInputError;
  }
  err << app.help();
  return exit_code::kInputError;
}

}  // namespace morsecert
