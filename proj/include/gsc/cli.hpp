#ifndef GSC_CLI_HPP
#define GSC_CLI_HPP

#include <algorithm>
#include <cstddef>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gsc/cartan.hpp"
#include "gsc/census.hpp"
#include "gsc/characters.hpp"
#include "gsc/coxeter_group.hpp"
#include "gsc/error.hpp"
#include "gsc/euler.hpp"
#include "gsc/springer_block.hpp"

#ifndef GSC_PRESET_DIR
#define GSC_PRESET_DIR "presets"
#endif

namespace gsc::cli {

/// Pads the tab-separated runs of a report into aligned columns. Comment
/// lines and section headers break a run and are copied verbatim.
inline std::string align_columns(const std::string& text) {
  std::istringstream in(text);
  std::vector<std::string> lines;
  for (std::string l; std::getline(in, l);) lines.push_back(l);

  std::ostringstream out;
  std::size_t i = 0;
  auto tabular = [&](const std::string& l) {
    return l.find('\t') != std::string::npos && !l.starts_with('#');
  };
  while (i < lines.size()) {
    if (!tabular(lines[i])) {
      out << lines[i++] << '\n';
      continue;
    }
    std::size_t end = i;
    std::vector<std::vector<std::string>> rows;
    std::vector<std::size_t> width;
    for (; end < lines.size() && tabular(lines[end]); ++end) {
      rows.push_back(gsc::detail::split_tabs(lines[end]));
      width.resize(std::max(width.size(), rows.back().size()), 0);
      for (std::size_t c = 0; c < rows.back().size(); ++c)
        width[c] = std::max(width[c], rows.back()[c].size());
    }
    for (const auto& r : rows) {
      std::string line;
      for (std::size_t c = 0; c < r.size(); ++c) {
        line += r[c];
        if (c + 1 < r.size()) line += std::string(width[c] - r[c].size() + 2, ' ');
      }
      out << line << '\n';
    }
    i = end;
  }
  return out.str();
}

inline int exit_code(ErrorKind k) {
  return k == ErrorKind::usage || k == ErrorKind::not_found ? 2 : 1;
}

namespace detail {

inline void cmd_table(std::ostream& os, const std::filesystem::path& presets, const std::string& group) {
  const auto spec = load_cartan_preset(presets / "cartan", group);
  write_character_table_tsv(os, character_table(build_group(spec)));
}

/// One line per irreducible. For G2 the block names 1, eps, ... are added,
/// with the first node in the sigma_0 role.
inline void cmd_gamma(std::ostream& os, const std::filesystem::path& presets, const std::string& group) {
  const auto spec = load_cartan_preset(presets / "cartan", group);
  const auto table = character_table(build_group(spec));
  std::vector<std::string> names(table.size());
  const bool g2 = spec.label == "G2";
  if (g2) {
    const RelativeWeylGroup w(block_root("E6"));
    for (auto e : kG2Irreps) {
      const auto& chi = w.character(e);
      for (std::size_t i = 0; i < table.size(); ++i)
        if (table[i].character.values() == chi.values()) names[i] = irrep_name(e);
    }
  }
  os << "# group\t" << spec.label << '\n';
  os << (g2 ? "irrep\tname\tdim\tb\tGamma\n" : "irrep\tdim\tb\tGamma\n");
  for (std::size_t i = 0; i < table.size(); ++i) {
    const auto& irr = table[i];
    os << irr.label << '\t';
    if (g2) os << names[i] << '\t';
    os << irr.dimension << '\t' << irr.b << '\t' << irr.gamma.to_string() << '\n';
  }
}

inline void cmd_block(std::ostream& os, const std::string& root_name, const std::string& which) {
  const auto root = block_root(root_name);
  std::vector<char> variants;
  if (which == "a" || which == "both") variants.push_back('a');
  if (which == "b" || which == "both") variants.push_back('b');
  const RelativeWeylGroup w(root);
  std::vector<ScenarioResult> results;
  for (char v : variants) results.push_back(evaluate_scenario(w, root, v));
  std::optional<Verdict> verdict;
  if (results.size() == 2) verdict = decide_scenario(results, root);
  write_block_report(os, root, w, results, verdict);
}

inline void cmd_decide(std::ostream& os, const std::string& root_name) {
  os << decide_scenario(block_root(root_name)).line() << '\n';
}

/// Returns false when the census disagrees with the preset.
inline bool cmd_census(std::ostream& os, std::ostream& err, const std::filesystem::path& presets,
                       const std::string& name) {
  const auto preset = load_census_preset(presets / "census", name);
  const auto spec = load_cartan_preset(presets / "cartan", preset.group);
  const auto expected = expected_counts(preset, spec);
  const auto g = build_group(spec);
  const auto table = character_table(g);
  const auto rho = resolve_springer_rep(table, preset.constituents);
  const auto result = census(g, rho.resolved);
  write_census_tsv(os, spec, rho, result);

  bool ok = true;
  for (const auto& d : census_check(result, expected, preset.complete)) {
    err << "census mismatch at " << spec.format_nodes(d.nodes) << ": expected " << d.expected
        << ", got " << d.actual << '\n';
    ok = false;
  }
  const Integer dim = numerator(rho.resolved.at_identity());
  if (result.total() != dim) {
    err << "total " << result.total() << " differs from dim rho " << dim << '\n';
    ok = false;
  }
  return ok;
}

inline bool cmd_euler(std::ostream& os, std::ostream& err, const std::string& file) {
  const auto report = run_script(parse_script(read_text_file(file)));
  write_report_tsv(os, report);
  for (const auto& f : report.failures) err << f << '\n';
  return report.ok();
}

}  // namespace detail

/// Runs one command. `args` excludes the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Weyl-group, block and Euler-characteristic computations", "gsc"};
  app.require_subcommand(1);

  std::string out_path;
  std::string format = "tsv";
  std::string preset_dir = GSC_PRESET_DIR;
  app.add_option("--out", out_path, "Write the report to this file");
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"tsv", "pretty"}));
  app.add_option("--preset-dir", preset_dir, "Directory holding cartan/ and census/ presets");

  std::string group, root, scenario = "both", preset, script;
  auto* table = app.add_subcommand("table", "Character table of a Weyl group");
  table->add_option("group", group, "Cartan preset label")->required();
  auto* gamma = app.add_subcommand("gamma", "Gamma polynomial of every irreducible");
  gamma->add_option("group", group, "Cartan preset label")->required();
  auto* block = app.add_subcommand("block", "Block matrices, factorization and traces");
  block->add_option("--root", root, "E6 or E8")->required();
  block->add_option("--scenario", scenario, "a, b or both")->check(CLI::IsMember({"a", "b", "both"}));
  auto* decide = app.add_subcommand("decide", "Pick the scenario allowed by the trace constraint");
  decide->add_option("--root", root, "E6 or E8")->required();
  auto* cen = app.add_subcommand("census", "Component census of a Springer fibre");
  cen->add_option("--preset", preset, "Census preset name")->required();
  auto* eul = app.add_subcommand("euler", "Evaluate an Euler-characteristic script");
  eul->add_option("script", script, "Path to a .eul file")->required();

  for (auto* sub : {table, gamma, block, decide, cen, eul}) sub->fallthrough();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  }

  std::ostringstream buf;
  bool ok = true;
  try {
    if (*table) {
      detail::cmd_table(buf, preset_dir, group);
    } else if (*gamma) {
      detail::cmd_gamma(buf, preset_dir, group);
    } else if (*block) {
      detail::cmd_block(buf, root, scenario);
    } else if (*decide) {
      detail::cmd_decide(buf, root);
    } else if (*cen) {
      ok = detail::cmd_census(buf, err, preset_dir, preset);
    } else if (*eul) {
      if (!std::filesystem::exists(script))
        throw Error(ErrorKind::not_found, "file not found: " + script);
      ok = detail::cmd_euler(buf, err, script);
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }

  const std::string text = format == "pretty" ? align_columns(buf.str()) : buf.str();
  if (out_path.empty()) {
    out << text;
  } else {
    std::ofstream f(out_path, std::ios::binary);
    if (!f) {
      err << "error: cannot write " << out_path << '\n';
      return 2;
    }
    f << text;
  }
  return ok ? 0 : 1;
}

}  // namespace gsc::cli

#endif  // GSC_CLI_HPP
