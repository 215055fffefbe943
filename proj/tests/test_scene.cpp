#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>

#include <json.hpp>

#include "lpviz/errors.hpp"
#include "lpviz/examples.hpp"
#include "lpviz/html.hpp"
#include "lpviz/scene.hpp"

using namespace lpviz;

namespace {

LinearProgram lego() { return lp_new({{2, 2}, {2, 1}}, {8, 6}, {16, 10}); }

SceneDocument lego_scene(const SceneOptions& options = {}) {
  return build_scene(lego(), simplex_solve(lego()), options);
}

std::vector<SceneDocument> catalog_scenes() {
  std::vector<SceneDocument> out;
  for (const auto& entry : example_catalog()) {
    if (entry.lp.n() < 2 || entry.lp.n() > 3) continue;
    for (PivotRule rule : {PivotRule::dantzig, PivotRule::bland}) {
      out.push_back(build_scene(entry.lp, simplex_solve(entry.lp, rule)));
    }
  }
  SceneOptions tableau;
  tableau.form = DisplayForm::tableau;
  tableau.basic_sol = false;
  tableau.show_basis = false;
  tableau.objective_ticks = 3;
  out.push_back(lego_scene(tableau));
  SceneOptions clipped;
  clipped.clip_box = Vector{10, 10};
  const LinearProgram& open = example("unbounded_2d").lp;
  out.push_back(build_scene(open, simplex_solve(open), clipped));
  for (auto& doc : build_bnb_scenes(branch_and_bound(lp_new({{6, 4}, {1, 2}}, {24, 6}, {5, 4})))) {
    out.push_back(std::move(doc));
  }
  for (auto& doc : build_bnb_scenes(branch_and_bound(lp_new({{1, 1}}, {-1}, {1, 1})))) out.push_back(doc);
  return out;
}

/// Re-parse the canonical text, mutate it, and serialize it back.
std::string mutate(const SceneDocument& doc, const std::function<void(nlohmann::ordered_json&)>& edit) {
  auto j = nlohmann::ordered_json::parse(serialize_scene(doc));
  edit(j);
  return j.dump();
}

}  // namespace

TEST_CASE("Lego scene") {
  SceneDocument doc = lego_scene();
  CHECK(doc.kind == SceneKind::simplex);
  CHECK(doc.iterations.size() == 3);
  CHECK(doc.path.size() == 3);
  CHECK(doc.polytope.vertices.size() == 4);
  CHECK(doc.polytope.edges.size() == 4);
  CHECK(doc.constraints.size() == 4);
  CHECK(doc.constraints[0].label == "2x1 + 2x2 <= 8");
  CHECK(doc.constraints[0].id == 2);
  CHECK(doc.constraints[2].kind == ConstraintKind::nonnegativity);
  CHECK(doc.constraints[2].id == 0);
  CHECK_FALSE(doc.bnb.has_value());
  CHECK(doc.levels.size() == 10);
  CHECK(doc.levels.back().value.exact == 52);
  CHECK(doc.lp.optimal_value->exact == 52);
  CHECK(doc.lp.optimal_point == Vector{2, 2});
  CHECK(doc.iterations[0].label == "Iteration 0");
  CHECK(doc.iterations[0].vertex == doc.path[0]);
  const SceneVertex& top = doc.polytope.vertices[doc.path.back()];
  CHECK(top.exact == Vector{2, 2});
  CHECK(top.hover.labels == std::vector<std::string>{"x1", "x2", "x3", "x4"});
  CHECK(top.hover.values == Vector{2, 2, 0, 0});
  CHECK(top.hover.objective == 52);
  REQUIRE(top.hover.bases.has_value());
  CHECK(*top.hover.bases == std::vector<std::vector<std::string>>{{"x1", "x2"}});

  SceneOptions narrow;
  narrow.basic_sol = false;
  narrow.show_basis = false;
  narrow.form = DisplayForm::tableau;
  SceneDocument small = lego_scene(narrow);
  CHECK(small.polytope.vertices[0].hover.values.size() == 2);
  CHECK_FALSE(small.polytope.vertices[0].hover.bases.has_value());
  CHECK(small.iterations[0].tableau.objective_row == Vector{-16, -10, 0, 0, 0});
  CHECK(small.iterations[0].dictionary.objective_coeffs == Vector{16, 10});
}

TEST_CASE("scenes with phase one, unbounded regions and bad input") {
  const LinearProgram& p1 = example("phase1_needed_2d").lp;
  SceneDocument doc = build_scene(p1, simplex_solve(p1));
  REQUIRE(doc.iterations.front().phase == Phase::phase1);
  CHECK(doc.iterations.front().label == "Phase I, iteration 0");
  CHECK_FALSE(doc.iterations.front().vertex.has_value());
  CHECK(doc.iterations.back().vertex.has_value());

  const LinearProgram& open = example("unbounded_2d").lp;
  SceneDocument unbounded = build_scene(open, simplex_solve(open));
  CHECK_FALSE(unbounded.polytope.bounded);
  CHECK(unbounded.polytope.facets.empty());
  CHECK(unbounded.levels.empty());
  CHECK(unbounded.lp.status == SolveStatus::unbounded);

  CHECK_THROWS_AS(build_scene(example("cycling_beale").lp, simplex_solve(example("cycling_beale").lp)),
                  DimensionUnsupported);
  LinearProgram empty = lp_new({{1, 1}}, {-1}, {1, 1});
  CHECK_THROWS_AS(build_scene(empty, simplex_solve(empty)), EmptyRegion);
  CHECK_THROWS_AS(build_scene(lego(), simplex_solve(klee_minty(2))), std::invalid_argument);
}

TEST_CASE("branch and bound scenes") {
  BnbTrace trace = branch_and_bound(lp_new({{6, 4}, {1, 2}}, {24, 6}, {5, 4}));
  auto docs = build_bnb_scenes(trace);
  REQUIRE(docs.size() == trace.nodes.size());
  CHECK(docs[0].kind == SceneKind::bnb_node);
  CHECK(docs[0].polytope.vertices.size() == 4);
  CHECK(docs[0].lp.m == 2);
  for (std::size_t k = 0; k < docs.size(); ++k) {
    REQUIRE(docs[k].bnb.has_value());
    const SceneBnb& meta = *docs[k].bnb;
    CHECK(meta.node == static_cast<int>(k));
    CHECK(meta.tree.size() == trace.nodes.size());
    CHECK(meta.added_bounds == trace.nodes[k].added_bounds);
    if (k == 0) {
      CHECK_FALSE(meta.parent_branch.has_value());
      continue;
    }
    REQUIRE(meta.parent_branch.has_value());
    CHECK(meta.parent_branch == trace.nodes[*meta.parent].branch_pair);
    int extra = 0;
    for (const auto& c : docs[k].constraints) extra += c.kind == ConstraintKind::branch_bound;
    CHECK(extra == static_cast<int>(meta.added_bounds.size()));
  }

  auto lego_docs = build_bnb_scenes(branch_and_bound(lego()));
  CHECK(lego_docs.size() == 1);
  auto empty_docs = build_bnb_scenes(branch_and_bound(lp_new({{1, 1}}, {-1}, {1, 1})));
  REQUIRE(empty_docs.size() == 1);
  CHECK(empty_docs[0].bnb->status == NodeStatus::infeasible);
  CHECK(empty_docs[0].polytope.vertices.empty());
}

TEST_CASE("serialize and parse are inverse and canonical") {
  for (const auto& doc : catalog_scenes()) {
    std::string text = serialize_scene(doc);
    SceneDocument back = parse_scene(text);
    CHECK(back == doc);
    CHECK(serialize_scene(back) == text);
  }
}

TEST_CASE("canonical text layout") {
  std::string text = serialize_scene(lego_scene());
  auto j = nlohmann::ordered_json::parse(text);
  std::vector<std::string> keys;
  for (const auto& [k, _] : j.items()) keys.push_back(k);
  CHECK(keys == std::vector<std::string>{"version", "kind", "lp", "polytope", "constraints", "iterations", "path",
                                         "levels", "bnb", "options"});
  CHECK(j["bnb"].is_null());
  CHECK(j["version"] == "1");
  CHECK(j["lp"]["A"][0][0]["exact"] == "2");
  CHECK(j["lp"]["A"][0][0]["approx"] == 2.0);
  CHECK(j["polytope"]["vertices"][0]["id"].is_number_integer());
  CHECK(text.find('\n') == std::string::npos);
  CHECK(text.rfind(R"({"version":"1","kind":"simplex","lp":{"n":2,"m":2,"A":[[{"exact":"2","approx":2.0},)", 0) == 0);

  SceneDocument named = lego_scene();
  named.lp.variable_names[0] = "</script><b>&";
  std::string escaped = serialize_scene(named);
  CHECK(escaped.find('<') == std::string::npos);
  CHECK(escaped.find('>') == std::string::npos);
  CHECK(escaped.find('&') == std::string::npos);
  CHECK(parse_scene(escaped).lp.variable_names[0] == "</script><b>&");
}

TEST_CASE("parse rejects malformed documents with a JSON path") {
  SceneDocument doc = lego_scene();
  auto path_of = [](const std::string& text) -> std::string {
    try {
      parse_scene(text);
    } catch (const SchemaError& e) {
      return e.path();
    }
    return "<accepted>";
  };
  using J = nlohmann::ordered_json;
  CHECK(path_of(mutate(doc, [](J& j) { j.erase("version"); })) == "$.version");
  CHECK(path_of(mutate(doc, [](J& j) { j["version"] = "2"; })) == "$.version");
  CHECK(path_of(mutate(doc, [](J& j) { j["version"] = "1.3"; })) == "<accepted>");
  CHECK(path_of(mutate(doc, [](J& j) { j["version"] = 1; })) == "$.version");
  CHECK(path_of(mutate(doc, [](J& j) { j["lp"]["optimal_point"][0] = "4/6"; })) == "$.lp.optimal_point[0]");
  CHECK(path_of(mutate(doc, [](J& j) { j["lp"]["A"][1][0]["exact"] = "2.0"; })) == "$.lp.A[1][0].exact");
  CHECK(path_of(mutate(doc, [](J& j) { j["extra"] = 0; })) == "$.extra");
  CHECK(path_of(mutate(doc, [](J& j) { j["polytope"].erase("edges"); })) == "$.polytope.edges");
  CHECK(path_of(mutate(doc, [](J& j) { j["polytope"]["vertices"][3]["id"] = 1.5; })) ==
        "$.polytope.vertices[3].id");
  CHECK(path_of(mutate(doc, [](J& j) { j["polytope"]["edges"][0][1] = 99; })) == "$.polytope.edges[0][1]");
  CHECK(path_of(mutate(doc, [](J& j) { j["path"][1] = 99; })) == "$.path[1]");
  CHECK(path_of(mutate(doc, [](J& j) { j["iterations"] = J::array(); })) == "$.iterations");
  CHECK(path_of(mutate(doc, [](J& j) { j["kind"] = "bnb_node"; })) == "$.bnb");
  CHECK(path_of(mutate(doc, [](J& j) { j["options"]["form"] = "table"; })) == "$.options.form");
  CHECK(path_of(mutate(doc, [](J& j) { j["options"]["basic_sol"] = false; })) ==
        "$.polytope.vertices[0].hover");
  CHECK(path_of("{not json") == "$");
  CHECK(path_of("[]") == "$");
}

TEST_CASE("HTML export") {
  SceneDocument doc = lego_scene();
  std::string bundle = default_ui_bundle();
  std::string html = write_html(doc, bundle);
  std::string json = serialize_scene(doc);
  CHECK(html.find("<script type=\"application/json\" id=\"scene-data\">" + json + "</script>") !=
        std::string::npos);
  CHECK(html.find(bundle) != std::string::npos);
  CHECK(html.find("http://") == std::string::npos);
  CHECK(html.find("https://") == std::string::npos);
  CHECK(html.find(" src=") == std::string::npos);
  CHECK_THROWS_AS(write_html(doc, ""), BundleMissing);
  CHECK_THROWS_AS(write_html(doc, "x = '</script>'"), std::invalid_argument);

  auto dir = std::filesystem::temp_directory_path() / "lpviz_scene_test";
  std::filesystem::remove_all(dir);
  BnbTrace trace = branch_and_bound(lp_new({{6, 4}, {1, 2}}, {24, 6}, {5, 4}));
  auto files = export_bnb_html(trace, {}, dir, bundle);
  CHECK(files.size() == trace.nodes.size() + 1);
  CHECK(files.back().filename() == "index.html");
  std::ifstream index(dir / "index.html");
  std::string text((std::istreambuf_iterator<char>(index)), std::istreambuf_iterator<char>());
  for (std::size_t k = 0; k < trace.nodes.size(); ++k) {
    CHECK(std::filesystem::exists(dir / ("node_" + std::to_string(k) + ".html")));
    CHECK(text.find("href=\"node_" + std::to_string(k) + ".html\"") != std::string::npos);
  }
  CHECK(text.find("http") == std::string::npos);
  std::filesystem::remove_all(dir);
}

TEST_CASE("bundle override from the environment") {
  auto file = std::filesystem::temp_directory_path() / "lpviz_bundle_test.js";
  {
    std::ofstream out(file);
    out << "console.log('custom');";
  }
  setenv("LPVIZ_UI_BUNDLE", file.c_str(), 1);
  CHECK(default_ui_bundle() == "console.log('custom');");
  setenv("LPVIZ_UI_BUNDLE", "/nonexistent/bundle.js", 1);
  CHECK_THROWS_AS(default_ui_bundle(), BundleMissing);
  unsetenv("LPVIZ_UI_BUNDLE");
  CHECK(default_ui_bundle().find("scene-data") != std::string::npos);
  std::filesystem::remove(file);
}
