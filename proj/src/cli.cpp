#include "pointlike/cli.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "pointlike/errors.hpp"
#include "pointlike/flow.hpp"
#include "pointlike/green.hpp"
#include "pointlike/group.hpp"
#include "pointlike/kernels.hpp"
#include "pointlike/regex.hpp"
#include "pointlike/saturation.hpp"
#include "pointlike/schutz.hpp"
#include "pointlike/semigroup.hpp"
#include "pointlike/separation.hpp"
#include "pointlike/variety.hpp"

namespace pointlike {

namespace {

using nlohmann::json;

std::string set_str(const std::vector<element>& elts) {
  std::ostringstream out;
  out << '{';
  for (std::size_t i = 0; i < elts.size(); ++i) {
    if (i > 0) {
      out << ',';
    }
    out << elts[i];
  }
  out << '}';
  return out.str();
}

std::vector<element> mask_elements(std::uint64_t mask, std::uint32_t n) {
  return SubsetElt{mask, n}.elements();
}

void emit(std::ostream& out, const json& j, bool as_json,
          const std::string& text) {
  if (as_json) {
    out << j.dump(2) << '\n';
  } else {
    out << text;
  }
}

Strategy parse_strategy(const std::string& s) {
  if (s == "kernel") {
    return Strategy::kernel_rule;
  }
  if (s == "pseudo") {
    return Strategy::pseudoidentity;
  }
  if (s == "both") {
    return Strategy::both;
  }
  throw InputError("unknown strategy \"" + s + "\"");
}

int cmd_green(const std::string& file, bool as_json, std::ostream& out) {
  const FiniteSemigroup s = load_semigroup_file(file);
  const GreenData g = green(s);

  json j{{"command", "green"}, {"size", s.size()}};
  std::ostringstream text;
  text << "semigroup of size " << s.size() << "\n";
  struct Row {
    const char* name;
    const std::vector<std::vector<element>>* classes;
  };
  for (const Row& row : {Row{"R", &g.r_classes}, Row{"L", &g.l_classes},
                         Row{"J", &g.j_classes}, Row{"H", &g.h_classes}}) {
    text << row.name << "-classes (" << row.classes->size() << "):";
    json arr = json::array();
    for (const auto& cls : *row.classes) {
      text << ' ' << set_str(cls);
      arr.push_back(cls);
    }
    text << '\n';
    j[std::string(1, row.name[0]) + "_classes"] = arr;
  }
  text << "idempotents: " << set_str(g.idempotents) << '\n';
  j["idempotents"] = g.idempotents;
  std::vector<element> group_idems;
  for (element e : g.idempotents) {
    if (g.h_classes[g.h_class[e]].size() > 1) {
      group_idems.push_back(e);
    }
  }
  text << "nontrivial maximal subgroups at: " << set_str(group_idems) << '\n';
  j["nontrivial_group_idempotents"] = group_idems;

  // Egg-box diagrams, J-classes top to bottom: one row per R-class, one
  // column per L-class, '*' marking the idempotents.
  std::vector<class_id> j_ids(g.j_classes.size());
  for (class_id c = 0; c < j_ids.size(); ++c) {
    j_ids[c] = c;
  }
  std::sort(j_ids.begin(), j_ids.end(), [&g](class_id a, class_id b) {
    std::size_t below_a = 0, below_b = 0;
    for (class_id c = 0; c < g.j_classes.size(); ++c) {
      below_a += g.j_order[a][c];
      below_b += g.j_order[b][c];
    }
    return below_a != below_b ? below_a < below_b : a < b;
  });
  text << "egg-box (top to bottom):\n";
  for (class_id jc : j_ids) {
    std::vector<class_id> r_ids, l_ids;
    for (element x : g.j_classes[jc]) {
      if (std::find(r_ids.begin(), r_ids.end(), g.r_class[x]) == r_ids.end()) {
        r_ids.push_back(g.r_class[x]);
      }
      if (std::find(l_ids.begin(), l_ids.end(), g.l_class[x]) == l_ids.end()) {
        l_ids.push_back(g.l_class[x]);
      }
    }
    std::vector<std::vector<std::string>> cells(
        r_ids.size(), std::vector<std::string>(l_ids.size()));
    std::vector<std::size_t> widths(l_ids.size(), 0);
    for (std::size_t r = 0; r < r_ids.size(); ++r) {
      for (std::size_t l = 0; l < l_ids.size(); ++l) {
        std::string cell;
        for (element x : g.j_classes[jc]) {
          if (g.r_class[x] == r_ids[r] && g.l_class[x] == l_ids[l]) {
            if (!cell.empty()) {
              cell += ' ';
            }
            cell += std::to_string(x);
            if (s.is_idempotent(x)) {
              cell += '*';
            }
          }
        }
        widths[l] = std::max(widths[l], cell.size());
        cells[r][l] = std::move(cell);
      }
    }
    for (std::size_t r = 0; r < r_ids.size(); ++r) {
      text << "  |";
      for (std::size_t l = 0; l < l_ids.size(); ++l) {
        text << ' ' << cells[r][l]
             << std::string(widths[l] - cells[r][l].size() + 1, ' ') << '|';
      }
      text << '\n';
    }
    if (jc != j_ids.back()) {
      text << "  -\n";
    }
  }
  emit(out, j, as_json, text.str());
  return 0;
}

int cmd_member(const std::string& file, const std::string& variety,
               bool as_json, std::ostream& out) {
  const FiniteSemigroup s = load_semigroup_file(file);
  const KernelFunctor k = parse_variety(variety);
  const GreenData g = green(s);
  bool member = true;
  element witness = 0;
  std::size_t witness_order = 0;
  for (element e : g.idempotents) {
    const FiniteGroup grp = maximal_subgroup(s, g, e);
    if (!is_in_variety(grp, k)) {
      member = false;
      witness = e;
      witness_order = grp.size();
      break;
    }
  }
  json j{{"command", "member"},
         {"variety", k.name()},
         {"member", member}};
  std::ostringstream text;
  if (member) {
    text << "MEMBER\n";
  } else {
    j["witness_idempotent"] = witness;
    j["witness_order"] = witness_order;
    text << "NOT_MEMBER (maximal subgroup of order " << witness_order
         << " at idempotent " << witness << " falls outside H)\n";
  }
  emit(out, j, as_json, text.str());
  return 0;
}

int cmd_kernel(const std::string& file, element idempotent,
               const std::string& variety, bool as_json, std::ostream& out) {
  const FiniteSemigroup s = load_semigroup_file(file);
  const KernelFunctor k = parse_variety(variety);
  const GreenData g = green(s);
  const FiniteGroup grp = maximal_subgroup(s, g, idempotent);
  std::vector<element> members;
  for (group_index m : kernel_members(grp, k)) {
    members.push_back(grp.elements[m]);
  }
  std::sort(members.begin(), members.end());
  json j{{"command", "kernel"},
         {"variety", k.name()},
         {"idempotent", idempotent},
         {"subgroup_order", grp.size()},
         {"kernel", members}};
  std::ostringstream text;
  text << "maximal subgroup at " << idempotent << " has order " << grp.size()
       << "\nkernel (order " << members.size() << "): " << set_str(members)
       << '\n';
  emit(out, j, as_json, text.str());
  return 0;
}

int cmd_pointlikes(const std::string& file, const std::string& variety,
                   const std::string& strategy, bool pairs, bool trace,
                   std::size_t max_size, bool as_json, std::ostream& out) {
  const FiniteSemigroup s = load_semigroup_file(file);
  const KernelFunctor k = parse_variety(variety);
  const Strategy strat = parse_strategy(strategy);
  SaturationOptions opts;
  opts.max_universe = max_size;
  opts.record_trace = trace;
  if (strat != Strategy::kernel_rule) {
    auto words = default_pseudoidentity_words(k);
    if (!words) {
      throw InputError("variety \"" + k.name()
                       + "\" has no finite pseudoidentity basis; "
                         "use --strategy kernel");
    }
    opts.words = *words;
  }
  const SaturationFamily fam = saturate(s, k, strat, opts);

  json j{{"command", "pointlikes"},
         {"universe", fam.universe},
         {"variety", k.name()},
         {"strategy", strategy_name(strat)},
         {"member_count", fam.masks.size()}};
  std::ostringstream text;
  text << "universe: " << fam.universe << "\nvariety: " << k.name()
       << "\nstrategy: " << strategy_name(strat)
       << "\nmembers: " << fam.masks.size() << "\nmaximal pointlikes:";
  json maximal = json::array();
  for (std::uint64_t m : fam.maximal) {
    const auto elts = mask_elements(m, fam.universe);
    maximal.push_back(elts);
    text << ' ' << set_str(elts);
  }
  text << '\n';
  j["maximal"] = maximal;
  if (pairs) {
    json parr = json::array();
    text << "pointlike pairs:";
    for (const auto& [a, b] : fam.pointlike_pairs()) {
      parr.push_back({a, b});
      text << " {" << a << ',' << b << '}';
    }
    text << '\n';
    j["pairs"] = parr;
  }
  if (trace) {
    json tarr = json::array();
    text << "trace:\n";
    for (const TraceEntry& entry : fam.trace) {
      const auto elts = mask_elements(entry.produced, fam.universe);
      tarr.push_back({{"rule", entry.rule}, {"produced", elts}});
      text << "  " << entry.rule << " -> " << set_str(elts) << '\n';
    }
    j["trace"] = tarr;
  }
  emit(out, j, as_json, text.str());
  return 0;
}

int cmd_separate(const std::vector<std::string>& files,
                 const std::vector<std::string>& regexes,
                 const std::string& alphabet, const std::string& variety,
                 std::size_t max_size, bool as_json, std::ostream& out) {
  std::vector<Dfa> langs;
  for (const std::string& f : files) {
    langs.push_back(minimize(load_dfa_file(f)));
  }
  for (const std::string& r : regexes) {
    if (alphabet.empty()) {
      throw InputError("--alphabet is required with --regex");
    }
    langs.push_back(regex_to_dfa(r, alphabet));
  }
  if (langs.size() != 2) {
    throw InputError("separate needs exactly two languages (files or "
                     "--regex), got "
                     + std::to_string(langs.size()));
  }
  const KernelFunctor k = parse_variety(variety);
  SaturationOptions opts;
  opts.max_universe = max_size;
  const SeparationVerdict verdict =
      decide_separation(langs[0], langs[1], k, opts);

  json j{{"command", "separate"},
         {"variety", k.name()},
         {"separable", verdict.separable},
         {"semigroup_size", verdict.semigroup_size}};
  std::ostringstream text;
  if (verdict.separable) {
    text << "SEPARABLE\n";
  } else {
    j["witness"] = {{"x", verdict.witness_x},
                    {"y", verdict.witness_y},
                    {"word_x", verdict.witness_word_x},
                    {"word_y", verdict.witness_word_y}};
    text << "NOT_SEPARABLE witness pair {" << verdict.witness_x << ","
         << verdict.witness_y << "} realized by \"" << verdict.witness_word_x
         << "\" in L1 and \"" << verdict.witness_word_y << "\" in L2\n";
  }
  emit(out, j, as_json, text.str());
  return 0;
}

int cmd_verify(const std::string& file, const std::string& variety,
               std::size_t max_size, bool as_json, std::ostream& out) {
  const FiniteSemigroup s = load_semigroup_file(file);
  const KernelFunctor k = parse_variety(variety);
  SaturationOptions sopts;
  sopts.max_universe = max_size;
  const SaturationFamily fam =
      saturate(s, k, Strategy::kernel_rule, sopts);
  VerifyOptions vopts;
  vopts.max_universe = max_size;
  const VerifyReport report = verify_all(k, fam, vopts);

  json j{{"command", "verify"},
         {"variety", k.name()},
         {"sat_members", report.sat_members},
         {"automaton_states", report.automaton_states},
         {"transition_semigroup", report.transition_semigroup_size},
         {"wall_seconds", report.wall_seconds},
         {"all_passed", report.all_passed()}};
  json checks = json::array();
  std::ostringstream text;
  for (const CheckResult& c : report.checks) {
    checks.push_back({{"name", c.name},
                      {"passed", c.passed},
                      {"cases", c.cases},
                      {"detail", c.detail}});
    text << c.name << ": " << (c.passed ? "pass" : "FAIL") << " ("
         << c.cases << " cases)";
    if (!c.detail.empty()) {
      text << ' ' << c.detail;
    }
    text << '\n';
  }
  j["checks"] = checks;
  text << "saturation members: " << report.sat_members
       << ", automaton states: " << report.automaton_states
       << ", transition semigroup: " << report.transition_semigroup_size
       << '\n';
  text.precision(3);
  text << "time: " << std::fixed << report.wall_seconds << "s\n";
  emit(out, j, as_json, text.str());
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"decision procedures for pointlike sets of finite semigroups"};
  app.require_subcommand(1);

  std::string file, variety = "trivial", strategy = "kernel";
  std::string alphabet, format = "text";
  std::vector<std::string> dfa_files, regexes;
  element idempotent = 0;
  bool pairs = false, trace = false;
  std::size_t max_size_sat = 8, max_size_verify = 6;

  auto add_format = [&format](CLI::App* cmd) {
    cmd->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json"}));
  };

  CLI::App* green_cmd = app.add_subcommand("green", "Green's relations");
  green_cmd->add_option("file", file, "semigroup file")->required();
  add_format(green_cmd);

  CLI::App* member_cmd =
      app.add_subcommand("member", "membership of the semigroup in H-bar");
  member_cmd->add_option("file", file)->required();
  member_cmd->add_option("--variety", variety)->required();
  add_format(member_cmd);

  CLI::App* kernel_cmd =
      app.add_subcommand("kernel", "H-kernel of a maximal subgroup");
  kernel_cmd->add_option("file", file)->required();
  kernel_cmd->add_option("--idempotent", idempotent)->required();
  kernel_cmd->add_option("--variety", variety)->required();
  add_format(kernel_cmd);

  CLI::App* pl_cmd =
      app.add_subcommand("pointlikes", "maximal pointlike subsets");
  pl_cmd->add_option("file", file)->required();
  pl_cmd->add_option("--variety", variety)->required();
  pl_cmd->add_option("--strategy", strategy)
      ->check(CLI::IsMember({"kernel", "pseudo", "both"}));
  pl_cmd->add_flag("--pairs", pairs, "also list pointlike pairs");
  pl_cmd->add_flag("--trace", trace, "log rule applications");
  pl_cmd->add_option("--max-size", max_size_sat, "universe cap");
  add_format(pl_cmd);

  CLI::App* sep_cmd =
      app.add_subcommand("separate", "separation of two regular languages");
  sep_cmd->add_option("dfas", dfa_files, "DFA files")->expected(0, 2);
  sep_cmd->add_option("--regex", regexes, "inline regular expression")
      ->expected(0, 2);
  sep_cmd->add_option("--alphabet", alphabet, "letters, e.g. \"ab\"");
  sep_cmd->add_option("--variety", variety)->required();
  sep_cmd->add_option("--max-size", max_size_sat,
                      "recognizing semigroup cap");
  add_format(sep_cmd);

  CLI::App* verify_cmd = app.add_subcommand(
      "verify", "machine-check the flow construction on an instance");
  verify_cmd->add_option("file", file)->required();
  verify_cmd->add_option("--variety", variety)->required();
  verify_cmd->add_option("--max-size", max_size_verify, "universe cap");
  add_format(verify_cmd);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return 2;
  }

  const bool as_json = format == "json";
  try {
    if (green_cmd->parsed()) {
      return cmd_green(file, as_json, out);
    }
    if (member_cmd->parsed()) {
      return cmd_member(file, variety, as_json, out);
    }
    if (kernel_cmd->parsed()) {
      return cmd_kernel(file, idempotent, variety, as_json, out);
    }
    if (pl_cmd->parsed()) {
      return cmd_pointlikes(file, variety, strategy, pairs, trace,
                            max_size_sat, as_json, out);
    }
    if (sep_cmd->parsed()) {
      return cmd_separate(dfa_files, regexes, alphabet, variety,
                          max_size_sat, as_json, out);
    }
    if (verify_cmd->parsed()) {
      return cmd_verify(file, variety, max_size_verify, as_json, out);
    }
    err << "no subcommand\n";
    return 2;
  } catch (const CapExceededError& e) {
    err << "cap exceeded: " << e.what() << '\n';
    return 3;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const VerificationError& e) {
    err << "internal verification failure: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace pointlike
