// Canonical JSON encoding of SceneDocument and its strict parser.

#include <initializer_list>
#include <string>

#include <json.hpp>

#include "lpviz/errors.hpp"
#include "lpviz/scene.hpp"

namespace lpviz {

namespace {

using ojson = nlohmann::ordered_json;
using json = nlohmann::json;

// ---------------------------------------------------------------------------
// Writing

ojson rational_json(const Rational& r) { return r.to_string(); }

ojson rationals_json(const Vector& v) {
  ojson out = ojson::array();
  for (const auto& r : v) out.push_back(r.to_string());
  return out;
}

ojson matrix_json(const Matrix& m) {
  ojson out = ojson::array();
  for (const auto& row : m) out.push_back(rationals_json(row));
  return out;
}

ojson number_json(const ExactNumber& x) {
  ojson out = ojson::object();
  out["exact"] = x.exact.to_string();
  out["approx"] = x.approx;
  return out;
}

ojson numbers_json(const std::vector<ExactNumber>& v) {
  ojson out = ojson::array();
  for (const auto& x : v) out.push_back(number_json(x));
  return out;
}

template <class T>
ojson optional_json(const std::optional<T>& v, auto&& encode) {
  return v ? ojson(encode(*v)) : ojson(nullptr);
}

ojson ints_json(const std::vector<int>& v) {
  ojson out = ojson::array();
  for (int x : v) out.push_back(x);
  return out;
}

ojson dictionary_json(const Dictionary& d) {
  ojson out = ojson::object();
  out["basic"] = ints_json(d.basic);
  out["nonbasic"] = ints_json(d.nonbasic);
  out["constants"] = rationals_json(d.constants);
  out["coeffs"] = matrix_json(d.coeffs);
  out["objective_constant"] = rational_json(d.objective_constant);
  out["objective_coeffs"] = rationals_json(d.objective_coeffs);
  return out;
}

ojson tableau_json(const Tableau& t) {
  ojson out = ojson::object();
  out["columns"] = ints_json(t.columns);
  out["basic"] = ints_json(t.basic);
  out["objective_row"] = rationals_json(t.objective_row);
  out["rows"] = matrix_json(t.rows);
  return out;
}

ojson bound_json(const VariableBound& b) {
  ojson out = ojson::object();
  out["var"] = b.var;
  out["sense"] = b.sense == BoundSense::at_most ? "<=" : ">=";
  out["value"] = b.value.str();
  return out;
}

ojson bound_pair_json(const std::pair<VariableBound, VariableBound>& p) {
  return ojson::array({bound_json(p.first), bound_json(p.second)});
}

std::string_view kind_name(SceneKind k) { return k == SceneKind::simplex ? "simplex" : "bnb_node"; }

std::string_view constraint_kind_name(ConstraintKind k) {
  switch (k) {
    case ConstraintKind::row: return "row";
    case ConstraintKind::nonnegativity: return "nonnegativity";
    case ConstraintKind::branch_bound: return "branch_bound";
  }
  return "row";
}

std::string_view phase_name(Phase p) { return p == Phase::phase1 ? "phase1" : "phase2"; }

ojson lp_json(const SceneLp& lp) {
  ojson out = ojson::object();
  out["n"] = lp.n;
  out["m"] = lp.m;
  ojson a = ojson::array();
  for (const auto& row : lp.A) a.push_back(numbers_json(row));
  out["A"] = std::move(a);
  out["b"] = numbers_json(lp.b);
  out["c"] = numbers_json(lp.c);
  out["variable_names"] = lp.variable_names;
  out["status"] = to_string(lp.status);
  out["optimal_value"] = optional_json(lp.optimal_value, number_json);
  out["optimal_point"] = optional_json(lp.optimal_point, rationals_json);
  return out;
}

ojson hover_json(const HoverPayload& h) {
  ojson out = ojson::object();
  out["labels"] = h.labels;
  out["values"] = rationals_json(h.values);
  out["objective"] = rational_json(h.objective);
  out["bases"] = h.bases ? ojson(*h.bases) : ojson(nullptr);
  return out;
}

ojson polytope_json(const ScenePolytope& p) {
  ojson out = ojson::object();
  out["dimension"] = p.dimension;
  out["bounded"] = p.bounded;
  ojson vertices = ojson::array();
  for (const auto& v : p.vertices) {
    ojson jv = ojson::object();
    jv["id"] = v.id;
    jv["coords"] = v.coords;
    jv["exact"] = rationals_json(v.exact);
    jv["solution"] = rationals_json(v.solution);
    jv["objective"] = rational_json(v.objective);
    jv["tight"] = ints_json(v.tight);
    ojson bases = ojson::array();
    for (const auto& b : v.bases) bases.push_back(ints_json(b));
    jv["bases"] = std::move(bases);
    jv["synthetic"] = v.synthetic;
    jv["hover"] = hover_json(v.hover);
    vertices.push_back(std::move(jv));
  }
  out["vertices"] = std::move(vertices);
  ojson edges = ojson::array();
  for (const auto& [a, b] : p.edges) edges.push_back(ojson::array({a, b}));
  out["edges"] = std::move(edges);
  ojson facets = ojson::array();
  for (const auto& f : p.facets) {
    ojson jf = ojson::object();
    jf["constraint"] = f.constraint ? ojson(*f.constraint) : ojson(nullptr);
    jf["vertices"] = ints_json(f.vertices);
    jf["synthetic"] = f.synthetic;
    facets.push_back(std::move(jf));
  }
  out["facets"] = std::move(facets);
  return out;
}

ojson constraint_json(const SceneConstraint& c) {
  ojson out = ojson::object();
  out["id"] = c.id;
  out["kind"] = constraint_kind_name(c.kind);
  out["label"] = c.label;
  out["coefficients"] = numbers_json(c.coefficients);
  out["rhs"] = number_json(c.rhs);
  return out;
}

ojson iteration_json(const SceneIteration& it) {
  auto id_or_null = [](const std::optional<VarId>& v) { return v ? ojson(*v) : ojson(nullptr); };
  ojson out = ojson::object();
  out["index"] = it.index;
  out["phase"] = phase_name(it.phase);
  out["label"] = it.label;
  out["dictionary"] = dictionary_json(it.dictionary);
  out["tableau"] = tableau_json(it.tableau);
  out["basic_solution"] = rationals_json(it.basic_solution);
  out["artificial_value"] = optional_json(it.artificial_value, rational_json);
  out["objective_value"] = rational_json(it.objective_value);
  out["entering"] = id_or_null(it.entering);
  out["leaving"] = id_or_null(it.leaving);
  out["degenerate"] = it.degenerate;
  out["vertex"] = it.vertex ? ojson(*it.vertex) : ojson(nullptr);
  return out;
}

ojson level_json(const SceneLevel& l) {
  ojson out = ojson::object();
  out["value"] = number_json(l.value);
  out["exact_points"] = matrix_json(l.exact_points);
  out["points"] = l.points;
  return out;
}

ojson bnb_json(const SceneBnb& b) {
  auto rational_or_null = [](const std::optional<Rational>& r) {
    return r ? ojson(r->to_string()) : ojson(nullptr);
  };
  ojson out = ojson::object();
  out["node"] = b.node;
  out["parent"] = b.parent ? ojson(*b.parent) : ojson(nullptr);
  out["status"] = to_string(b.status);
  ojson bounds = ojson::array();
  for (const auto& bound : b.added_bounds) bounds.push_back(bound_json(bound));
  out["added_bounds"] = std::move(bounds);
  out["parent_branch"] = optional_json(b.parent_branch, bound_pair_json);
  out["branch_pair"] = optional_json(b.branch_pair, bound_pair_json);
  out["relaxation_value"] = rational_or_null(b.relaxation_value);
  if (b.incumbent) {
    ojson inc = ojson::object();
    inc["value"] = rational_json(b.incumbent->value);
    inc["solution"] = rationals_json(b.incumbent->solution);
    out["incumbent"] = std::move(inc);
  } else {
    out["incumbent"] = nullptr;
  }
  ojson tree = ojson::array();
  for (const auto& node : b.tree) {
    ojson jn = ojson::object();
    jn["id"] = node.id;
    jn["parent"] = node.parent ? ojson(*node.parent) : ojson(nullptr);
    jn["status"] = to_string(node.status);
    jn["relaxation_value"] = rational_or_null(node.relaxation_value);
    tree.push_back(std::move(jn));
  }
  out["tree"] = std::move(tree);
  return out;
}

ojson options_json(const SceneOptions& o) {
  ojson out = ojson::object();
  out["form"] = to_string(o.form);
  out["basic_sol"] = o.basic_sol;
  out["show_basis"] = o.show_basis;
  out["objective_ticks"] = o.objective_ticks;
  out["clip_box"] = optional_json(o.clip_box, rationals_json);
  return out;
}

// ---------------------------------------------------------------------------
// Reading

class Cursor {
 public:
  Cursor(const json& value, std::string path) : value_(&value), path_(std::move(path)) {}

  const std::string& path() const { return path_; }
  bool is_null() const { return value_->is_null(); }

  [[noreturn]] void fail(const std::string& message) const { throw SchemaError(path_, message); }

  /// Object with exactly these keys.
  const Cursor& object(std::initializer_list<const char*> keys) const {
    if (!value_->is_object()) fail("expected an object");
    for (const char* key : keys) {
      if (!value_->contains(key)) Cursor(*value_, path_ + "." + key).fail("missing required key");
    }
    for (const auto& [key, _] : value_->items()) {
      bool known = false;
      for (const char* k : keys) known = known || key == k;
      if (!known) Cursor(*value_, path_ + "." + key).fail("unexpected key");
    }
    return *this;
  }

  Cursor operator[](const char* key) const { return {value_->at(key), path_ + "." + key}; }

  std::vector<Cursor> array() const {
    if (!value_->is_array()) fail("expected an array");
    std::vector<Cursor> out;
    for (std::size_t i = 0; i < value_->size(); ++i) {
      out.emplace_back((*value_)[i], path_ + "[" + std::to_string(i) + "]");
    }
    return out;
  }

  int integer() const {
    if (!value_->is_number_integer()) fail("expected an integer");
    auto v = value_->get<long long>();
    if (v < -(1LL << 31) || v >= (1LL << 31)) fail("integer out of range");
    return static_cast<int>(v);
  }

  bool boolean() const {
    if (!value_->is_boolean()) fail("expected a boolean");
    return value_->get<bool>();
  }

  double real() const {
    if (!value_->is_number()) fail("expected a number");
    return value_->get<double>();
  }

  std::string string() const {
    if (!value_->is_string()) fail("expected a string");
    return value_->get<std::string>();
  }

  Rational rational() const {
    auto r = Rational::parse_canonical(string());
    if (!r) fail("expected a reduced rational \"p/q\"");
    return *r;
  }

  Integer integer_string() const {
    Rational r = rational();
    if (!r.is_integer()) fail("expected an integer string");
    return r.numerator();
  }

 private:
  const json* value_;
  std::string path_;
};

template <class F>
auto read_array(const Cursor& c, F&& read) {
  std::vector<decltype(read(c))> out;
  for (const auto& item : c.array()) out.push_back(read(item));
  return out;
}

template <class F>
auto read_optional(const Cursor& c, F&& read) -> std::optional<decltype(read(c))> {
  if (c.is_null()) return std::nullopt;
  return read(c);
}

Vector read_rationals(const Cursor& c) {
  return read_array(c, [](const Cursor& x) { return x.rational(); });
}

Matrix read_matrix(const Cursor& c) { return read_array(c, read_rationals); }

std::vector<int> read_ints(const Cursor& c) {
  return read_array(c, [](const Cursor& x) { return x.integer(); });
}

std::vector<double> read_reals(const Cursor& c) {
  return read_array(c, [](const Cursor& x) { return x.real(); });
}

std::vector<std::string> read_strings(const Cursor& c) {
  return read_array(c, [](const Cursor& x) { return x.string(); });
}

ExactNumber read_number(const Cursor& c) {
  c.object({"exact", "approx"});
  return {c["exact"].rational(), c["approx"].real()};
}

std::vector<ExactNumber> read_numbers(const Cursor& c) { return read_array(c, read_number); }

Dictionary read_dictionary(const Cursor& c) {
  c.object({"basic", "nonbasic", "constants", "coeffs", "objective_constant", "objective_coeffs"});
  Dictionary d;
  d.basic = read_ints(c["basic"]);
  d.nonbasic = read_ints(c["nonbasic"]);
  d.constants = read_rationals(c["constants"]);
  d.coeffs = read_matrix(c["coeffs"]);
  d.objective_constant = c["objective_constant"].rational();
  d.objective_coeffs = read_rationals(c["objective_coeffs"]);
  if (d.constants.size() != d.basic.size() || d.coeffs.size() != d.basic.size()) {
    c.fail("row count does not match basic variables");
  }
  for (const auto& row : d.coeffs) {
    if (row.size() != d.nonbasic.size()) c["coeffs"].fail("row width does not match nonbasic variables");
  }
  if (d.objective_coeffs.size() != d.nonbasic.size()) {
    c["objective_coeffs"].fail("width does not match nonbasic variables");
  }
  return d;
}

Tableau read_tableau(const Cursor& c) {
  c.object({"columns", "basic", "objective_row", "rows"});
  return {read_ints(c["columns"]), read_ints(c["basic"]), read_rationals(c["objective_row"]),
          read_matrix(c["rows"])};
}

VariableBound read_bound(const Cursor& c) {
  c.object({"var", "sense", "value"});
  VariableBound b;
  b.var = c["var"].integer();
  std::string sense = c["sense"].string();
  if (sense == "<=") {
    b.sense = BoundSense::at_most;
  } else if (sense == ">=") {
    b.sense = BoundSense::at_least;
  } else {
    c["sense"].fail("expected \"<=\" or \">=\"");
  }
  b.value = c["value"].integer_string();
  return b;
}

std::pair<VariableBound, VariableBound> read_bound_pair(const Cursor& c) {
  auto items = c.array();
  if (items.size() != 2) c.fail("expected exactly two bounds");
  return {read_bound(items[0]), read_bound(items[1])};
}

NodeStatus read_node_status(const Cursor& c) {
  auto s = parse_node_status(c.string());
  if (!s) c.fail("unknown node status");
  return *s;
}

SceneLp read_lp(const Cursor& c) {
  c.object({"n", "m", "A", "b", "c", "variable_names", "status", "optimal_value", "optimal_point"});
  SceneLp lp;
  lp.n = c["n"].integer();
  lp.m = c["m"].integer();
  lp.A = read_array(c["A"], read_numbers);
  lp.b = read_numbers(c["b"]);
  lp.c = read_numbers(c["c"]);
  lp.variable_names = read_strings(c["variable_names"]);
  auto status = parse_solve_status(c["status"].string());
  if (!status) c["status"].fail("unknown solve status");
  lp.status = *status;
  lp.optimal_value = read_optional(c["optimal_value"], read_number);
  lp.optimal_point = read_optional(c["optimal_point"], read_rationals);
  return lp;
}

HoverPayload read_hover(const Cursor& c) {
  c.object({"labels", "values", "objective", "bases"});
  HoverPayload h;
  h.labels = read_strings(c["labels"]);
  h.values = read_rationals(c["values"]);
  h.objective = c["objective"].rational();
  h.bases = read_optional(c["bases"], [](const Cursor& x) { return read_array(x, read_strings); });
  return h;
}

ScenePolytope read_polytope(const Cursor& c) {
  c.object({"dimension", "bounded", "vertices", "edges", "facets"});
  ScenePolytope p;
  p.dimension = c["dimension"].integer();
  p.bounded = c["bounded"].boolean();
  p.vertices = read_array(c["vertices"], [](const Cursor& v) {
    v.object({"id", "coords", "exact", "solution", "objective", "tight", "bases", "synthetic", "hover"});
    SceneVertex sv;
    sv.id = v["id"].integer();
    sv.coords = read_reals(v["coords"]);
    sv.exact = read_rationals(v["exact"]);
    sv.solution = read_rationals(v["solution"]);
    sv.objective = v["objective"].rational();
    sv.tight = read_ints(v["tight"]);
    sv.bases = read_array(v["bases"], read_ints);
    sv.synthetic = v["synthetic"].boolean();
    sv.hover = read_hover(v["hover"]);
    return sv;
  });
  p.edges = read_array(c["edges"], [](const Cursor& e) {
    auto ids = e.array();
    if (ids.size() != 2) e.fail("expected a pair of vertex ids");
    return std::make_pair(ids[0].integer(), ids[1].integer());
  });
  p.facets = read_array(c["facets"], [](const Cursor& f) {
    f.object({"constraint", "vertices", "synthetic"});
    Facet facet;
    facet.constraint = read_optional(f["constraint"], [](const Cursor& x) { return x.integer(); });
    facet.vertices = read_ints(f["vertices"]);
    facet.synthetic = f["synthetic"].boolean();
    return facet;
  });
  return p;
}

SceneConstraint read_constraint(const Cursor& c) {
  c.object({"id", "kind", "label", "coefficients", "rhs"});
  SceneConstraint out;
  out.id = c["id"].integer();
  std::string kind = c["kind"].string();
  if (kind == "row") {
    out.kind = ConstraintKind::row;
  } else if (kind == "nonnegativity") {
    out.kind = ConstraintKind::nonnegativity;
  } else if (kind == "branch_bound") {
    out.kind = ConstraintKind::branch_bound;
  } else {
    c["kind"].fail("unknown constraint kind");
  }
  out.label = c["label"].string();
  out.coefficients = read_numbers(c["coefficients"]);
  out.rhs = read_number(c["rhs"]);
  return out;
}

SceneIteration read_iteration(const Cursor& c) {
  c.object({"index", "phase", "label", "dictionary", "tableau", "basic_solution", "artificial_value",
            "objective_value", "entering", "leaving", "degenerate", "vertex"});
  auto read_id = [](const Cursor& x) { return x.integer(); };
  SceneIteration it;
  it.index = c["index"].integer();
  std::string phase = c["phase"].string();
  if (phase == "phase1") {
    it.phase = Phase::phase1;
  } else if (phase == "phase2") {
    it.phase = Phase::phase2;
  } else {
    c["phase"].fail("expected \"phase1\" or \"phase2\"");
  }
  it.label = c["label"].string();
  it.dictionary = read_dictionary(c["dictionary"]);
  it.tableau = read_tableau(c["tableau"]);
  it.basic_solution = read_rationals(c["basic_solution"]);
  it.artificial_value = read_optional(c["artificial_value"], [](const Cursor& x) { return x.rational(); });
  it.objective_value = c["objective_value"].rational();
  it.entering = read_optional(c["entering"], read_id);
  it.leaving = read_optional(c["leaving"], read_id);
  it.degenerate = c["degenerate"].boolean();
  it.vertex = read_optional(c["vertex"], read_id);
  return it;
}

SceneLevel read_level(const Cursor& c) {
  c.object({"value", "exact_points", "points"});
  return {read_number(c["value"]), read_matrix(c["exact_points"]), read_array(c["points"], read_reals)};
}

SceneBnb read_bnb(const Cursor& c) {
  c.object({"node", "parent", "status", "added_bounds", "parent_branch", "branch_pair",
            "relaxation_value", "incumbent", "tree"});
  auto read_id = [](const Cursor& x) { return x.integer(); };
  auto read_rat = [](const Cursor& x) { return x.rational(); };
  SceneBnb b;
  b.node = c["node"].integer();
  b.parent = read_optional(c["parent"], read_id);
  b.status = read_node_status(c["status"]);
  b.added_bounds = read_array(c["added_bounds"], read_bound);
  b.parent_branch = read_optional(c["parent_branch"], read_bound_pair);
  b.branch_pair = read_optional(c["branch_pair"], read_bound_pair);
  b.relaxation_value = read_optional(c["relaxation_value"], read_rat);
  b.incumbent = read_optional(c["incumbent"], [](const Cursor& x) {
    x.object({"value", "solution"});
    return SceneIncumbent{x["value"].rational(), read_rationals(x["solution"])};
  });
  b.tree = read_array(c["tree"], [&](const Cursor& x) {
    x.object({"id", "parent", "status", "relaxation_value"});
    return SceneTreeNode{x["id"].integer(), read_optional(x["parent"], read_id),
                         read_node_status(x["status"]), read_optional(x["relaxation_value"], read_rat)};
  });
  return b;
}

SceneOptions read_options(const Cursor& c) {
  c.object({"form", "basic_sol", "show_basis", "objective_ticks", "clip_box"});
  SceneOptions o;
  std::string form = c["form"].string();
  if (form == "dictionary") {
    o.form = DisplayForm::dictionary;
  } else if (form == "tableau") {
    o.form = DisplayForm::tableau;
  } else {
    c["form"].fail("expected \"dictionary\" or \"tableau\"");
  }
  o.basic_sol = c["basic_sol"].boolean();
  o.show_basis = c["show_basis"].boolean();
  o.objective_ticks = c["objective_ticks"].integer();
  o.clip_box = read_optional(c["clip_box"], read_rationals);
  return o;
}

void check_version(const Cursor& c) {
  std::string version = c.string();
  std::string major = version.substr(0, version.find('.'));
  if (major.empty() || major.find_first_not_of("0123456789") != std::string::npos) {
    c.fail("malformed version \"" + version + "\"");
  }
  if (major.size() > 1 || major != kSceneVersion) {
    c.fail("unsupported scene format version \"" + version + "\" (this build reads version " +
           std::string(kSceneVersion) + ")");
  }
}

}  // namespace

std::string serialize_scene(const SceneDocument& doc) {
  ojson out = ojson::object();
  out["version"] = doc.version;
  out["kind"] = kind_name(doc.kind);
  out["lp"] = lp_json(doc.lp);
  out["polytope"] = polytope_json(doc.polytope);
  ojson constraints = ojson::array();
  for (const auto& c : doc.constraints) constraints.push_back(constraint_json(c));
  out["constraints"] = std::move(constraints);
  ojson iterations = ojson::array();
  for (const auto& it : doc.iterations) iterations.push_back(iteration_json(it));
  out["iterations"] = std::move(iterations);
  out["path"] = ints_json(doc.path);
  ojson levels = ojson::array();
  for (const auto& l : doc.levels) levels.push_back(level_json(l));
  out["levels"] = std::move(levels);
  out["bnb"] = optional_json(doc.bnb, bnb_json);
  out["options"] = options_json(doc.options);

  const std::string raw = out.dump(-1, ' ', false, ojson::error_handler_t::strict);
  // Safe to inline in a <script> block.
  std::string text;
  text.reserve(raw.size());
  for (char ch : raw) {
    switch (ch) {
      case '<': text += "\\u003c"; break;
      case '>': text += "\\u003e"; break;
      case '&': text += "\\u0026"; break;
      default: text += ch;
    }
  }
  return text;
}

SceneDocument parse_scene(std::string_view bytes) {
  json root;
  try {
    root = json::parse(bytes.begin(), bytes.end());
  } catch (const json::parse_error& e) {
    throw SchemaError("$", std::string("malformed JSON: ") + e.what());
  }
  Cursor c(root, "$");
  if (!root.is_object()) c.fail("expected an object");
  if (!root.contains("version")) Cursor(root, "$.version").fail("missing required key");
  check_version(c["version"]);
  c.object({"version", "kind", "lp", "polytope", "constraints", "iterations", "path", "levels", "bnb",
            "options"});

  SceneDocument doc;
  doc.version = c["version"].string();
  std::string kind = c["kind"].string();
  if (kind == "simplex") {
    doc.kind = SceneKind::simplex;
  } else if (kind == "bnb_node") {
    doc.kind = SceneKind::bnb_node;
  } else {
    c["kind"].fail("expected \"simplex\" or \"bnb_node\"");
  }
  doc.lp = read_lp(c["lp"]);
  doc.polytope = read_polytope(c["polytope"]);
  doc.constraints = read_array(c["constraints"], read_constraint);
  doc.iterations = read_array(c["iterations"], read_iteration);
  doc.path = read_ints(c["path"]);
  doc.levels = read_array(c["levels"], read_level);
  doc.bnb = read_optional(c["bnb"], read_bnb);
  doc.options = read_options(c["options"]);
  validate_scene(doc);
  return doc;
}

}  // namespace lpviz
