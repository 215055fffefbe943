// Minimal scene viewer: reads the JSON in #scene-data and draws it on a canvas.
(function () {
  "use strict";

  var scene = JSON.parse(document.getElementById("scene-data").textContent);
  var lp = scene.lp;
  var poly = scene.polytope;
  var phase2 = scene.iterations.filter(function (it) { return it.phase === "phase2"; });

  var state = {
    iteration: scene.iterations.length - 1,
    level: Math.floor(scene.levels.length / 2),
    showLevel: scene.levels.length > 0,
    hover: null,
    yaw: 0.7,
    pitch: 0.45,
    form: scene.options.form
  };

  // ---- Formatting -------------------------------------------------------

  function varName(id) { return id < 0 ? "x0" : lp.variable_names[id]; }

  function term(coeff, name, first) {
    var neg = coeff.charAt(0) === "-";
    var mag = neg ? coeff.slice(1) : coeff;
    var body = mag === "1" ? name : (mag.indexOf("/") >= 0 ? "(" + mag + ")" : mag) + name;
    if (first) return (neg ? "-" : "") + body;
    return (neg ? " - " : " + ") + body;
  }

  function expression(constant, coeffs, vars) {
    var out = constant;
    for (var j = 0; j < vars.length; j++) {
      if (coeffs[j] !== "0") out += term(coeffs[j], varName(vars[j]), false);
    }
    return out;
  }

  function formatDictionary(d) {
    var width = 2;
    d.basic.forEach(function (b) { width = Math.max(width, varName(b).length); });
    var pad = function (s) { while (s.length < width) s += " "; return s; };
    var lines = [pad("z") + " = " + expression(d.objective_constant, d.objective_coeffs, d.nonbasic)];
    for (var i = 0; i < d.basic.length; i++) {
      lines.push(pad(varName(d.basic[i])) + " = " + expression(d.constants[i], d.coeffs[i], d.nonbasic));
    }
    return lines.join("\n");
  }

  function formatTableau(t) {
    var header = ["basis"].concat(t.columns.map(varName)).concat(["z", "rhs"]);
    var rows = [header];
    var obj = ["z"].concat(t.objective_row.slice(0, -1)).concat(["1", t.objective_row[t.objective_row.length - 1]]);
    rows.push(obj);
    for (var i = 0; i < t.rows.length; i++) {
      var r = t.rows[i];
      rows.push([varName(t.basic[i])].concat(r.slice(0, -1)).concat(["0", r[r.length - 1]]));
    }
    var widths = header.map(function (_, c) {
      return Math.max.apply(null, rows.map(function (row) { return row[c].length; }));
    });
    return rows.map(function (row) {
      return row.map(function (cell, c) {
        while (cell.length < widths[c]) cell = " " + cell;
        return cell;
      }).join("  ");
    }).join("\n");
  }

  // ---- Layout -----------------------------------------------------------

  var root = document.getElementById("lpviz") || document.body;
  root.style.fontFamily = "sans-serif";
  root.innerHTML = "";

  var wrap = document.createElement("div");
  wrap.style.display = "flex";
  wrap.style.gap = "16px";
  root.appendChild(wrap);

  var canvas = document.createElement("canvas");
  canvas.width = 560;
  canvas.height = 560;
  canvas.style.border = "1px solid #ccc";
  wrap.appendChild(canvas);
  var ctx = canvas.getContext("2d");

  var side = document.createElement("div");
  side.style.minWidth = "320px";
  wrap.appendChild(side);

  function control(labelText, input) {
    var label = document.createElement("label");
    label.style.display = "block";
    label.style.margin = "6px 0";
    label.textContent = labelText + " ";
    label.appendChild(input);
    side.appendChild(label);
    return label;
  }

  var status = document.createElement("div");
  side.appendChild(status);

  var iterSlider = document.createElement("input");
  iterSlider.type = "range";
  iterSlider.min = 0;
  iterSlider.max = scene.iterations.length - 1;
  iterSlider.value = state.iteration;
  control("Iteration", iterSlider);

  var levelSlider = document.createElement("input");
  levelSlider.type = "range";
  levelSlider.min = 0;
  levelSlider.max = Math.max(0, scene.levels.length - 1);
  levelSlider.value = state.level;
  levelSlider.disabled = scene.levels.length === 0;
  control("Objective level", levelSlider);

  var formSelect = document.createElement("select");
  ["dictionary", "tableau"].forEach(function (f) {
    var opt = document.createElement("option");
    opt.value = f;
    opt.textContent = f;
    if (f === state.form) opt.selected = true;
    formSelect.appendChild(opt);
  });
  control("Show as", formSelect);

  var heading = document.createElement("h3");
  side.appendChild(heading);
  var pane = document.createElement("pre");
  pane.style.background = "#f6f6f6";
  pane.style.padding = "8px";
  side.appendChild(pane);
  var hoverBox = document.createElement("pre");
  side.appendChild(hoverBox);
  var bnbBox = document.createElement("pre");
  side.appendChild(bnbBox);

  // ---- Projection -------------------------------------------------------

  var bounds = (function () {
    var lo = [], hi = [];
    for (var k = 0; k < poly.dimension; k++) { lo.push(Infinity); hi.push(-Infinity); }
    poly.vertices.forEach(function (v) {
      v.coords.forEach(function (x, k) { lo[k] = Math.min(lo[k], x); hi[k] = Math.max(hi[k], x); });
    });
    if (poly.vertices.length === 0) { lo = lo.map(function () { return 0; }); hi = hi.map(function () { return 1; }); }
    return { lo: lo, hi: hi };
  })();

  function project(p) {
    var n = poly.dimension;
    var center = bounds.lo.map(function (l, k) { return (l + bounds.hi[k]) / 2; });
    var span = Math.max.apply(null, bounds.hi.map(function (h, k) { return h - bounds.lo[k]; })) || 1;
    var scale = (canvas.width * 0.8) / span;
    if (n === 2) {
      return [canvas.width / 2 + (p[0] - center[0]) * scale, canvas.height / 2 - (p[1] - center[1]) * scale, 0];
    }
    var x = p[0] - center[0], y = p[1] - center[1], z = p[2] - center[2];
    var cy = Math.cos(state.yaw), sy = Math.sin(state.yaw);
    var cp = Math.cos(state.pitch), sp = Math.sin(state.pitch);
    var x1 = cy * x - sy * y, y1 = sy * x + cy * y;
    var y2 = cp * z - sp * y1, depth = sp * z + cp * y1;
    scale *= 0.8;
    return [canvas.width / 2 + x1 * scale, canvas.height / 2 - y2 * scale, depth];
  }

  // ---- Drawing ----------------------------------------------------------

  function currentVertex() {
    var it = scene.iterations[state.iteration];
    return it.vertex === null ? null : it.vertex;
  }

  function pathUpTo() {
    var it = scene.iterations[state.iteration];
    if (it.phase === "phase1") return [];
    return scene.path.slice(0, phase2.indexOf(it) + 1);
  }

  function polygonOrder() {
    if (poly.vertices.length < 3) return poly.vertices.map(function (v) { return v.id; });
    var adj = {};
    poly.edges.forEach(function (e) {
      (adj[e[0]] = adj[e[0]] || []).push(e[1]);
      (adj[e[1]] = adj[e[1]] || []).push(e[0]);
    });
    var order = [poly.vertices[0].id], prev = -1;
    while (order.length < poly.vertices.length) {
      var cur = order[order.length - 1];
      var next = (adj[cur] || []).filter(function (w) { return w !== prev && order.indexOf(w) < 0; })[0];
      if (next === undefined) break;
      prev = cur;
      order.push(next);
    }
    return order;
  }

  function draw() {
    ctx.clearRect(0, 0, canvas.width, canvas.height);
    var screen = poly.vertices.map(function (v) { return project(v.coords); });

    if (poly.dimension === 2 && (poly.bounded || poly.vertices.some(function (v) { return v.synthetic; }))) {
      var order = polygonOrder();
      ctx.beginPath();
      order.forEach(function (id, k) { (k ? ctx.lineTo : ctx.moveTo).call(ctx, screen[id][0], screen[id][1]); });
      ctx.closePath();
      ctx.fillStyle = "rgba(70, 130, 180, 0.18)";
      ctx.fill();
    }

    if (poly.dimension === 3) {
      var faces = poly.facets.map(function (f) {
        var depth = 0;
        f.vertices.forEach(function (id) { depth += screen[id][2]; });
        return { facet: f, depth: depth / f.vertices.length };
      }).sort(function (a, b) { return b.depth - a.depth; });
      faces.forEach(function (entry) {
        ctx.beginPath();
        entry.facet.vertices.forEach(function (id, k) {
          (k ? ctx.lineTo : ctx.moveTo).call(ctx, screen[id][0], screen[id][1]);
        });
        ctx.closePath();
        ctx.fillStyle = entry.facet.synthetic ? "rgba(200, 200, 200, 0.15)" : "rgba(70, 130, 180, 0.22)";
        ctx.fill();
      });
    }

    ctx.strokeStyle = "#4682b4";
    ctx.lineWidth = 1;
    poly.edges.forEach(function (e) {
      ctx.beginPath();
      ctx.moveTo(screen[e[0]][0], screen[e[0]][1]);
      ctx.lineTo(screen[e[1]][0], screen[e[1]][1]);
      ctx.stroke();
    });

    if (state.showLevel && scene.levels.length > 0) {
      var level = scene.levels[state.level];
      var pts = level.points.map(project);
      ctx.strokeStyle = "#d2691e";
      ctx.lineWidth = 2;
      ctx.beginPath();
      pts.forEach(function (p, k) { (k ? ctx.lineTo : ctx.moveTo).call(ctx, p[0], p[1]); });
      if (poly.dimension === 3 && pts.length > 2) ctx.closePath();
      ctx.stroke();
    }

    var path = pathUpTo();
    ctx.strokeStyle = "#c0392b";
    ctx.lineWidth = 3;
    ctx.beginPath();
    path.forEach(function (id, k) { (k ? ctx.lineTo : ctx.moveTo).call(ctx, screen[id][0], screen[id][1]); });
    ctx.stroke();

    var current = currentVertex();
    poly.vertices.forEach(function (v) {
      var p = screen[v.id];
      ctx.beginPath();
      ctx.arc(p[0], p[1], v.id === current ? 7 : 4, 0, 2 * Math.PI);
      ctx.fillStyle = v.id === current ? "#c0392b" : (v.synthetic ? "#999" : "#1f3b57");
      ctx.fill();
    });
  }

  function updatePanels() {
    var it = scene.iterations[state.iteration];
    heading.textContent = it.label;
    var text = state.form === "tableau" ? formatTableau(it.tableau) : formatDictionary(it.dictionary);
    if (it.entering !== null && it.leaving !== null) {
      text += "\n\nentering " + varName(it.entering) + ", leaving " + varName(it.leaving);
      if (it.degenerate) text += " (degenerate)";
    } else if (it.entering !== null) {
      text += "\n\n" + varName(it.entering) + " can increase without bound";
    }
    pane.textContent = text;

    var line = "Status: " + lp.status;
    if (lp.optimal_value) line += ", optimum " + lp.optimal_value.exact;
    if (scene.levels.length > 0) line += " | level z = " + scene.levels[state.level].value.exact;
    status.textContent = line;

    if (state.hover === null) {
      hoverBox.textContent = "";
    } else {
      var h = poly.vertices[state.hover].hover;
      var rows = h.labels.map(function (l, k) { return l + " = " + h.values[k]; });
      rows.push("z = " + h.objective);
      if (h.bases) {
        rows.push("basis: " + h.bases.map(function (b) { return "{" + b.join(", ") + "}"; }).join(" or "));
      }
      hoverBox.textContent = rows.join("\n");
    }

    if (scene.bnb) {
      var b = scene.bnb;
      var info = ["Node " + b.node + ": " + b.status.replace(/_/g, " ")];
      b.added_bounds.forEach(function (bd) {
        info.push("  " + lp.variable_names[bd.var] + " " + bd.sense + " " + bd.value);
      });
      if (b.relaxation_value !== null) info.push("relaxation " + b.relaxation_value);
      if (b.incumbent) info.push("incumbent " + b.incumbent.value);
      info.push("");
      b.tree.forEach(function (t) {
        info.push((t.id === b.node ? "> " : "  ") + "node " + t.id +
          (t.parent === null ? "" : " <- " + t.parent) + "  " + t.status);
      });
      bnbBox.textContent = info.join("\n");
    }
  }

  function render() { draw(); updatePanels(); }

  // ---- Interaction ------------------------------------------------------

  iterSlider.addEventListener("input", function () { state.iteration = +iterSlider.value; render(); });
  levelSlider.addEventListener("input", function () { state.level = +levelSlider.value; render(); });
  formSelect.addEventListener("change", function () { state.form = formSelect.value; render(); });

  var drag = null;
  canvas.addEventListener("mousedown", function (e) { drag = [e.offsetX, e.offsetY]; });
  window.addEventListener("mouseup", function () { drag = null; });
  canvas.addEventListener("mousemove", function (e) {
    if (drag && poly.dimension === 3) {
      state.yaw += (e.offsetX - drag[0]) * 0.01;
      state.pitch += (e.offsetY - drag[1]) * 0.01;
      drag = [e.offsetX, e.offsetY];
    }
    var best = null, bestDist = 100;
    poly.vertices.forEach(function (v) {
      var p = project(v.coords);
      var d = (p[0] - e.offsetX) * (p[0] - e.offsetX) + (p[1] - e.offsetY) * (p[1] - e.offsetY);
      if (d < bestDist) { best = v.id; bestDist = d; }
    });
    state.hover = best;
    render();
  });

  render();
})();
