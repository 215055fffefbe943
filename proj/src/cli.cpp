#include "lpviz/cli.hpp"

#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include <CLI11.hpp>

#include "lpviz/bnb.hpp"
#include "lpviz/errors.hpp"
#include "lpviz/examples.hpp"
#include "lpviz/html.hpp"
#include "lpviz/scene.hpp"
#include "lpviz/simplex.hpp"

namespace lpviz {

namespace {

struct InputArgs {
  std::string file;
  std::string example_name;
  std::string inline_lp;
};

struct DisplayArgs {
  std::string rule = "dantzig";
  std::string form = "dictionary";
  bool basic_sol = true;
  bool show_basis = true;
  int ticks = 10;
  std::string clip;
  std::string bundle;
};

void add_input(CLI::App& cmd, InputArgs& in) {
  cmd.add_option("file", in.file, "LP file (JSON with A, b, c)");
  cmd.add_option("--example,-e", in.example_name, "Catalog example name");
  cmd.add_option("--lp", in.inline_lp, "Inline LP, e.g. \"A=[[2,2],[2,1]];b=[8,6];c=[16,10]\"");
}

void add_display(CLI::App& cmd, DisplayArgs& d, bool scene_flags) {
  cmd.add_option("--rule,-r", d.rule, "Pivot rule: dantzig, bland or greatest_increase");
  cmd.add_option("--form", d.form, "dictionary or tableau");
  if (!scene_flags) return;
  cmd.add_flag("--basic-sol,!--no-basic-sol", d.basic_sol, "Hover shows slack values too (default on)");
  cmd.add_flag("--show-basis,!--no-show-basis", d.show_basis, "Hover shows the basis (default on)");
  cmd.add_option("--ticks", d.ticks, "Number of objective level sets");
  cmd.add_option("--clip", d.clip, "Comma-separated upper bounds closing an unbounded region");
  cmd.add_option("--bundle", d.bundle, "UI bundle to inline instead of the built-in viewer");
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read " + path);
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
  if (!out) throw Error("cannot write " + path);
}

LinearProgram load_lp(const InputArgs& in) {
  int sources = !in.file.empty() + !in.example_name.empty() + !in.inline_lp.empty();
  if (sources != 1) throw Error("give exactly one of an LP file, --example or --lp");
  if (!in.example_name.empty()) return example(in.example_name).lp;
  if (!in.inline_lp.empty()) return parse_lp_inline(in.inline_lp);
  return parse_lp_json(read_file(in.file));
}

SceneOptions scene_options(const DisplayArgs& d) {
  SceneOptions o;
  o.form = parse_display_form(d.form);
  o.basic_sol = d.basic_sol;
  o.show_basis = d.show_basis;
  if (d.ticks < 2) throw Error("--ticks must be at least 2");
  o.objective_ticks = d.ticks;
  if (!d.clip.empty()) {
    Vector box;
    std::stringstream parts(d.clip);
    std::string part;
    while (std::getline(parts, part, ',')) box.push_back(Rational::parse(part));
    o.clip_box = std::move(box);
  }
  return o;
}

std::string bundle_for(const DisplayArgs& d) {
  if (d.bundle.empty()) return default_ui_bundle();
  std::string text = read_file(d.bundle);
  if (text.empty()) throw BundleMissing();
  return text;
}

void print_lp(const LinearProgram& lp, std::ostream& out) {
  out << "maximize " << format_linear(lp, lp.c()) << "\nsubject to\n";
  for (int i = 0; i < lp.m(); ++i) out << "  " << format_constraint(lp, i) << "\n";
  out << "  ";
  for (int j = 0; j < lp.n(); ++j) out << (j ? ", " : "") << lp.name(j);
  out << " >= 0\n";
}

void print_iterations(const std::vector<Iteration>& its, const char* heading, const LinearProgram& lp,
                      DisplayForm form, std::ostream& out) {
  for (std::size_t k = 0; k < its.size(); ++k) {
    const Iteration& it = its[k];
    out << "\n" << heading << k << "\n";
    out << (form == DisplayForm::dictionary ? format_dictionary(it.dictionary, lp)
                                            : format_tableau(it.tableau, lp));
    if (it.entering && it.leaving) {
      out << "entering " << lp.name(*it.entering) << ", leaving " << lp.name(*it.leaving);
      if (it.degenerate_step) out << " (degenerate)";
      out << "\n";
    } else if (it.entering) {
      out << "entering " << lp.name(*it.entering) << " can increase without bound\n";
    }
  }
}

std::size_t corner_points_visited(const SimplexTrace& trace) {
  std::set<Vector> points;
  const auto n = static_cast<std::size_t>(trace.lp.n());
  for (const auto& it : trace.phase2) {
    points.emplace(it.basic_solution.begin(), it.basic_solution.begin() + static_cast<long>(n));
  }
  return points.size();
}

void cmd_solve(const InputArgs& in, const DisplayArgs& d, const std::string& json_path, std::ostream& out) {
  LinearProgram lp = load_lp(in);
  PivotRule rule = parse_pivot_rule(d.rule);
  DisplayForm form = parse_display_form(d.form);
  SimplexTrace trace = simplex_solve(lp, rule);

  print_lp(lp, out);
  out << "rule: " << to_string(rule) << "\n";
  if (trace.phase1) print_iterations(*trace.phase1, "Phase I, iteration ", lp, form, out);
  print_iterations(trace.phase2, "Iteration ", lp, form, out);

  out << "\nstatus: " << to_string(trace.status) << "\n";
  if (auto point = trace.optimal_point()) {
    out << "optimal value: " << trace.optimal_value->to_string() << "\noptimal point: ";
    for (int j = 0; j < lp.n(); ++j) out << (j ? ", " : "") << lp.name(j) << " = " << (*point)[j];
    out << "\n";
  }
  out << "corner points visited: " << corner_points_visited(trace) << "\n";

  if (!json_path.empty()) {
    SceneOptions options = scene_options(d);
    write_text(json_path, serialize_scene(build_scene(lp, trace, options)));
    out << "scene written to " << json_path << "\n";
  }
}

void cmd_render(const InputArgs& in, const DisplayArgs& d, const std::string& output, std::ostream& out) {
  LinearProgram lp = load_lp(in);
  SceneOptions options = scene_options(d);
  std::string bundle = bundle_for(d);
  SimplexTrace trace = simplex_solve(lp, parse_pivot_rule(d.rule));
  SceneDocument doc = build_scene(lp, trace, options);
  write_text(output, write_html(doc, bundle));
  out << "wrote " << output << " (" << doc.polytope.vertices.size() << " corner points, "
      << doc.iterations.size() << " iterations, status " << to_string(trace.status) << ")\n";
}

void cmd_bnb(const InputArgs& in, const DisplayArgs& d, const std::string& branch_rule, std::size_t node_limit,
             const std::string& output, std::ostream& out) {
  LinearProgram lp = load_lp(in);
  BnbOptions options;
  options.pivot_rule = parse_pivot_rule(d.rule);
  options.node_limit = node_limit;
  if (branch_rule == "most_fractional") {
    options.branch_rule = BranchRule::most_fractional;
  } else if (branch_rule == "lowest_index") {
    options.branch_rule = BranchRule::lowest_index;
  } else {
    throw Error("unknown branching rule \"" + branch_rule + "\" (expected most_fractional or lowest_index)");
  }
  std::string bundle;
  if (!output.empty()) bundle = bundle_for(d);

  BnbTrace trace = branch_and_bound(lp, options);
  for (const auto& node : trace.nodes) {
    out << "node " << node.id;
    if (node.parent) out << " (parent " << *node.parent << ")";
    for (const auto& bound : node.added_bounds) out << " [" << format_bound(bound, lp) << "]";
    out << ": " << to_string(node.status);
    if (node.trace.optimal_value) out << ", relaxation " << *node.trace.optimal_value;
    out << "\n";
  }
  if (trace.optimal) {
    out << "integer optimum " << trace.optimal->value << " at ";
    for (int j = 0; j < lp.n(); ++j) out << (j ? ", " : "") << lp.name(j) << " = " << trace.optimal->solution[j];
    out << " (node " << trace.optimal->node << ")\n";
  } else {
    out << "no integer solution\n";
  }
  if (!output.empty()) {
    auto files = export_bnb_html(trace, scene_options(d), output, bundle);
    out << "wrote " << files.size() << " files to " << output << "\n";
  }
}

void cmd_examples(std::ostream& out) {
  for (const auto& entry : example_catalog()) {
    out << entry.name << " (n=" << entry.lp.n() << ", m=" << entry.lp.m() << "): " << entry.notes << "\n";
  }
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact simplex traces and interactive LP geometry", "lpviz"};
  app.require_subcommand(1);

  InputArgs in;
  DisplayArgs display;
  std::string json_path;
  std::string output;
  std::string branch_rule = "most_fractional";
  std::size_t node_limit = 1000;

  auto* solve = app.add_subcommand("solve", "Print the simplex trace");
  add_input(*solve, in);
  add_display(*solve, display, true);
  solve->add_option("--json", json_path, "Also write the scene JSON here");

  auto* render = app.add_subcommand("render", "Write an interactive HTML page");
  add_input(*render, in);
  add_display(*render, display, true);
  render->add_option("--output,-o", output, "HTML file")->required();

  auto* bnb = app.add_subcommand("bnb", "Branch and bound; optionally one HTML page per node");
  add_input(*bnb, in);
  add_display(*bnb, display, true);
  bnb->add_option("--output,-o", output, "Directory for node pages and index.html");
  bnb->add_option("--branch", branch_rule, "most_fractional or lowest_index");
  bnb->add_option("--node-limit", node_limit, "Maximum number of nodes");

  auto* examples = app.add_subcommand("examples", "List the built-in examples");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 1;
  }

  try {
    if (*solve) cmd_solve(in, display, json_path, out);
    if (*render) cmd_render(in, display, output, out);
    if (*bnb) cmd_bnb(in, display, branch_rule, node_limit, output, out);
    if (*examples) cmd_examples(out);
  } catch (const InvariantViolation& e) {
    err << "internal error: " << e.what() << "\n";
    return 2;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::logic_error& e) {
    if (dynamic_cast<const std::invalid_argument*>(&e) || dynamic_cast<const std::domain_error*>(&e)) {
      err << "error: " << e.what() << "\n";
      return 1;
    }
    err << "internal error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace lpviz
