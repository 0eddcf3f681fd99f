#include "sggi/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "sggi/constructions.hpp"
#include "sggi/errors.hpp"
#include "sggi/fracture.hpp"
#include "sggi/properties.hpp"
#include "sggi/repgraph.hpp"
#include "sggi/search.hpp"
#include "sggi/text.hpp"

namespace sggi {
namespace {

// Raised for bad flag values or unreadable files.
struct UsageError : Error {
  using Error::Error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// An SGGI block ("n r" plus r cycle lines), a graph block ("graph n r" plus
// edge lines), or an SGGI block followed by a graph block. Lines starting
// with '#' are ignored.
struct Input {
  std::optional<Sggi> sggi;
  std::optional<RepGraph> graph;
};

Input parse_input(const std::string& text) {
  std::vector<std::string> lines;
  for (const auto& line : text::split_lines(text)) {
    auto words = text::split_words(line);
    if (words.empty() || words[0][0] == '#') continue;
    lines.push_back(line);
  }
  if (lines.empty()) throw ParseError("empty input");
  auto join = [&](std::size_t from, std::size_t to) {
    std::string out;
    for (std::size_t k = from; k < to; ++k) out += lines[k] + "\n";
    return out;
  };
  Input in;
  std::size_t graph_start = lines.size();
  for (std::size_t k = 0; k < lines.size(); ++k) {
    if (text::split_words(lines[k])[0] == "graph") {
      graph_start = k;
      break;
    }
  }
  if (graph_start > 0) in.sggi = parse_sggi(join(0, graph_start));
  if (graph_start < lines.size()) in.graph = parse_graph(join(graph_start, lines.size()));
  return in;
}

Sggi input_sggi(const Input& in) { return in.sggi ? *in.sggi : from_graph(*in.graph); }

std::string big(const BigInt& x) { return x.str(); }

std::string join_labels(const std::vector<std::size_t>& v) {
  std::string out;
  for (std::size_t k = 0; k < v.size(); ++k) out += (k ? "," : "") + std::to_string(v[k]);
  return out.empty() ? "-" : out;
}

std::string join_points(const std::vector<Point>& v) {
  std::string out;
  for (std::size_t k = 0; k < v.size(); ++k) out += (k ? "," : "") + std::to_string(v[k] + 1);
  return out.empty() ? "-" : out;
}

void print_string(std::ostream& out, const Sggi& s) {
  out << format_sggi(s) << format_graph(to_graph(s));
}

int cmd_verify(const std::string& path, bool porcelain, std::ostream& out) {
  Input in = parse_input(read_file(path));
  Sggi s = input_sggi(in);
  ValidationReport report = validate(s);
  bool graph_matches = !(in.sggi && in.graph) || to_graph(s) == *in.graph;
  IndependenceResult ind;
  if (report.ok) ind = is_independent(s);
  BigInt order = s.group().order();
  bool pass = report.ok && ind.independent && graph_matches;
  if (porcelain) {
    out << "valid=" << (report.ok ? 1 : 0) << "\n";
    for (const auto& v : report.violations) out << "violation=" << describe(v) << "\n";
    if (report.ok) {
      out << "independent=" << (ind.independent ? 1 : 0) << "\n";
      if (ind.redundant_index) out << "redundant=" << *ind.redundant_index << "\n";
    }
    if (in.sggi && in.graph) out << "graph_matches=" << (graph_matches ? 1 : 0) << "\n";
    out << "degree=" << s.degree() << "\nrank=" << s.length() << "\norder=" << big(order) << "\n";
  } else if (!report.ok) {
    out << "invalid\n";
    for (const auto& v : report.violations) out << "  " << describe(v) << "\n";
  } else if (!ind.independent) {
    out << "valid, dependent: generator " << *ind.redundant_index
        << " lies in the group of the others, |G| = " << big(order) << "\n";
  } else {
    out << "valid, independent, |G| = " << big(order) << "\n";
  }
  if (!porcelain && !graph_matches) out << "graph block does not match the generators\n";
  return pass ? exit_ok : exit_invalid;
}

int cmd_analyze(const std::string& path, bool porcelain, std::ostream& out) {
  Sggi s = input_sggi(parse_input(read_file(path)));
  if (!validate(s).ok) {
    out << "invalid\n";
    for (const auto& v : validate(s).violations) out << "  " << describe(v) << "\n";
    return exit_invalid;
  }
  HypothesisProfile profile = hypothesis_profile(s);
  bool independent = is_independent(s).independent;
  std::vector<PropertyCheck> checks = check_properties(s);
  bool all_hold = true;
  for (const auto& c : checks) all_hold = all_hold && c.holds;

  std::optional<SplitAnalysis> splits;
  try {
    splits = find_splits(s);
  } catch (const NoFractureGraph&) {
  }

  if (porcelain) {
    out << "classification=" << to_string(profile.tag) << "\n";
    out << "transitive=" << profile.transitive << "\neven=" << profile.even
        << "\nindependent=" << independent << "\n";
    if (profile.no_fracture_label) out << "no_fracture_label=" << *profile.no_fracture_label << "\n";
    if (splits) {
      for (const auto& sp : splits->splits) {
        out << "split=" << sp.label << " edge=" << sp.a + 1 << "-" << sp.b + 1
            << " side_a=" << join_points(sp.side_a) << " side_b=" << join_points(sp.side_b)
            << " perfect=" << (sp.perfect_forward ? "forward" : sp.perfect_reverse ? "reverse" : "no")
            << " j_a=" << join_labels(sp.j_a) << " j_b=" << join_labels(sp.j_b) << "\n";
      }
    }
    for (const auto& c : checks) {
      out << "check=" << c.name << " applicable=" << c.applicable << " holds=" << c.holds << "\n";
    }
    return all_hold ? exit_ok : exit_invalid;
  }

  out << "classification: " << to_string(profile.tag) << "\n";
  out << "transitive: " << (profile.transitive ? "yes" : "no")
      << ", even: " << (profile.even ? "yes" : "no")
      << ", independent: " << (independent ? "yes" : "no") << "\n";
  if (profile.no_fracture_label) {
    out << "label " << *profile.no_fracture_label << " splits no orbit\n";
  }
  if (splits) {
    out << "splits: " << splits->split_count << " (" << splits->perfect_count << " perfect)\n";
    for (const auto& sp : splits->splits) {
      out << "  label " << sp.label << "  edge " << sp.a + 1 << "-" << sp.b + 1 << "  sides {"
          << join_points(sp.side_a) << "} {" << join_points(sp.side_b) << "}  "
          << (sp.perfect_forward ? "perfect (forward)"
              : sp.perfect_reverse ? "perfect (reverse)"
                                   : "not perfect")
          << "  J_A {" << join_labels(sp.j_a) << "} J_B {" << join_labels(sp.j_b) << "}\n";
    }
    out << "fix profile:\n";
    for (std::size_t l = 0; l < splits->x_sets.size(); ++l) {
      out << "  label " << l << "  moved above {" << join_points(splits->x_sets[l])
          << "}  moved below {" << join_points(splits->y_sets[l]) << "}\n";
    }
  }
  for (const auto& info : profile.informational) {
    out << "informational: non-perfect split " << info.label;
    if (info.h) out << " h=" << *info.h;
    if (info.g) out << " g=" << *info.g;
    out << "\n";
  }
  out << "checks:\n";
  for (const auto& c : checks) {
    out << "  " << c.name << ": " << (!c.applicable ? "n/a" : c.holds ? "pass" : "FAIL");
    if (!c.detail.empty()) out << " (" << c.detail << ")";
    out << "\n";
  }
  return all_hold ? exit_ok : exit_invalid;
}

int cmd_bounds(std::size_t n, bool porcelain, std::ostream& out) {
  BoundReport b = bounds(n);
  if (porcelain) {
    out << "n=" << n << "\nbound=" << theorem_bound_text(b) << "\n";
    if (b.construction_rank) {
      out << "construction_rank=" << *b.construction_rank
          << "\nconstruction_source=" << b.construction_source << "\n";
    }
    out << "maroti=" << big(b.maroti) << "\nlog2_bound=" << b.log2_bound << "\n";
    return exit_ok;
  }
  out << theorem_bound_text(b) << "\n";
  if (b.construction_rank) {
    out << "construction: rank " << *b.construction_rank << " ("
        << (b.construction_source == "family" ? "family" : "search-found witness") << ")\n";
  }
  out << "maroti order bound: " << big(b.maroti) << "\n";
  out << "floor(log2 |Alt(" << n << ")|): " << b.log2_bound << "\n";
  return exit_ok;
}

struct SearchArgs {
  std::string group_file;
  std::size_t alt = 0, sym = 0;
  std::string mode = "exhaustive";
  std::size_t max_length = 0;
  bool no_conjugacy = false;
  std::uint64_t seed = 1;
  double time_budget = 0;
  std::size_t threads = 1;
  std::size_t target_rank = 0;
  std::size_t show = 1;
  bool exists = false;
};

int cmd_search(const SearchArgs& a, bool porcelain, std::ostream& out, std::ostream& err) {
  int sources = !a.group_file.empty() + (a.alt > 0) + (a.sym > 0);
  if (sources != 1) throw UsageError("give exactly one of --group, --alt, --sym");
  PermGroup g = !a.group_file.empty() ? parse_group(read_file(a.group_file))
                : a.alt > 0           ? PermGroup::alternating(a.alt)
                                      : PermGroup::symmetric(a.sym);
  SearchOptions opts;
  opts.mode = a.mode == "randomized" ? SearchMode::randomized : SearchMode::exhaustive;
  if (a.max_length) opts.max_length = a.max_length;
  opts.prune_conjugacy = !a.no_conjugacy;
  opts.seed = a.seed;
  if (a.time_budget > 0) opts.time_budget = a.time_budget;
  opts.threads = a.threads;
  if (a.target_rank) opts.target_rank = a.target_rank;
  opts.stop_at_first = a.exists;
  SearchResult r = max_rank_search(g, opts);

  err << "nodes " << r.stats.nodes << ", " << r.stats.seconds << " s";
  for (const auto& [reason, count] : r.stats.prunes) err << ", " << reason << " " << count;
  err << "\n";

  if (porcelain) {
    out << "order=" << big(g.order()) << "\noutcome=" << to_string(r.outcome) << "\nrank=" << r.rank
        << "\nlength_cap=" << r.length_cap << "\nwitnesses=" << r.witnesses.size() << "\n";
    for (const auto& [rank, count] : r.rank_histogram) out << "histogram=" << rank << ":" << count << "\n";
  } else {
    out << "|G| = " << big(g.order()) << "\n";
    out << "outcome: " << to_string(r.outcome);
    if (r.rank > 0) out << ", rank " << r.rank;
    out << " (length cap " << r.length_cap << ")\n";
    out << "ranks found:";
    for (const auto& [rank, count] : r.rank_histogram) out << " " << rank << "x" << count;
    out << "\n";
  }
  for (std::size_t k = 0; k < r.witnesses.size() && k < a.show; ++k) {
    if (!porcelain) out << "witness " << k + 1 << ":\n";
    out << format_sggi(r.witnesses[k]);
  }
  return r.outcome == SearchOutcome::inconclusive ? exit_inconclusive : exit_ok;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Strings of involutions generating permutation groups", "sggi"};
  app.require_subcommand(1);
  app.fallthrough();
  bool porcelain = false;
  app.add_flag("--porcelain", porcelain, "Emit key=value lines");

  std::string path;
  auto* verify = app.add_subcommand("verify", "Check an SGGI or graph file");
  verify->add_option("file", path, "Input file")->required();
  auto* analyze = app.add_subcommand("analyze", "Fracture, split and property report");
  analyze->add_option("file", path, "Input file")->required();
  auto* dot = app.add_subcommand("export-dot", "Print the representation graph in DOT");
  dot->add_option("file", path, "Input file")->required();

  std::size_t n = 0;
  auto* family = app.add_subcommand("family", "Print the rank-extremal string for Alt(n)");
  family->add_option("--n", n, "Degree")->required();
  auto* bound = app.add_subcommand("bounds", "Rank bounds for Alt(n)");
  bound->add_option("--n", n, "Degree")->required()->check(CLI::Range(3, 100000));

  WitnessSpec spec;
  auto* witness = app.add_subcommand("witness", "Print a tabulated witness graph and string");
  witness->add_option("--table", spec.table, "Table number (2, 3 or 4)")->required();
  witness->add_option("--row", spec.row, "Row name")->required();
  witness->add_option("--rank", spec.rank, "Rank r");
  witness->add_option("--param", spec.param, "Auxiliary label of the row");
  witness->add_option("--k", spec.k, "Extra rung label");

  SearchArgs sa;
  auto* search = app.add_subcommand("search", "Search strings generating a group");
  search->add_option("--group", sa.group_file, "Group file");
  search->add_option("--alt", sa.alt, "Search Alt(n)")->check(CLI::Range(2, 1000));
  search->add_option("--sym", sa.sym, "Search Sym(n)")->check(CLI::Range(2, 1000));
  search->add_option("--mode", sa.mode, "exhaustive or randomized")
      ->check(CLI::IsMember({"exhaustive", "randomized"}));
  search->add_option("--max-length", sa.max_length, "Longest string tried")->check(CLI::PositiveNumber);
  search->add_flag("--no-conjugacy-pruning", sa.no_conjugacy, "Disable conjugacy pruning");
  search->add_option("--seed", sa.seed, "Random seed");
  search->add_option("--time-budget", sa.time_budget, "Seconds")->check(CLI::PositiveNumber);
  search->add_option("--threads", sa.threads, "Worker threads")->check(CLI::Range(1, 256));
  search->add_option("--target-rank", sa.target_rank, "Randomized: stop at this rank");
  search->add_option("--witnesses", sa.show, "Number of witnesses printed");
  search->add_flag("--exists", sa.exists, "Stop at the first generating string");

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return exit_ok;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n" << app.help();
    return exit_usage;
  }

  try {
    if (*verify) return cmd_verify(path, porcelain, out);
    if (*analyze) return cmd_analyze(path, porcelain, out);
    if (*dot) {
      Input in = parse_input(read_file(path));
      out << export_dot(in.graph ? *in.graph : to_graph(*in.sggi));
      return exit_ok;
    }
    if (*family) {
      print_string(out, alt_family(n));
      return exit_ok;
    }
    if (*bound) return cmd_bounds(n, porcelain, out);
    if (*witness) {
      RepGraph g = witness_graph(spec);
      RepGraph compact = compact_labels(g);
      if (compact.r() != g.r()) err << "labels without edges renumbered from 0\n";
      print_string(out, from_graph(compact));
      return exit_ok;
    }
    if (*search) return cmd_search(sa, porcelain, out, err);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return exit_invalid;
  } catch (const DegreeMismatch& e) {
    err << e.what() << "\n";
    return exit_invalid;
  } catch (const Error& e) {
    err << e.what() << "\n";
    return exit_usage;
  }
  return exit_usage;
}

}  // namespace sggi
