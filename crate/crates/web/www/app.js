import init, { polytope, tensor, diagram } from "./pkg/rho_tensor_web.js";

const $ = (id) => document.getElementById(id);
const canvas = $("plot");
const ctx = canvas.getContext("2d");

const fmt = (w) => `(${w.join(",")})`;
const num = (id) => Math.max(0, parseInt($(id).value, 10) || 0);

// Planar position of a weight given in fundamental coordinates.
const place = (basis, w) => [
  w[0] * basis.omega1[0] + w[1] * basis.omega2[0],
  w[0] * basis.omega1[1] + w[1] * basis.omega2[1],
];

function frame(basis, weights) {
  const pts = weights.map((w) => place(basis, w));
  pts.push([0, 0]);
  const xs = pts.map((p) => p[0]);
  const ys = pts.map((p) => p[1]);
  const [x0, x1, y0, y1] = [Math.min(...xs), Math.max(...xs), Math.min(...ys), Math.max(...ys)];
  const scale = (canvas.width - 80) / Math.max(x1 - x0, y1 - y0, 1e-9);
  const cx = (x0 + x1) / 2;
  const cy = (y0 + y1) / 2;
  return (w) => {
    const [x, y] = place(basis, w);
    return [canvas.width / 2 + (x - cx) * scale, canvas.height / 2 - (y - cy) * scale];
  };
}

function clear() {
  ctx.clearRect(0, 0, canvas.width, canvas.height);
}

function dot(p, r, fill, label) {
  ctx.beginPath();
  ctx.arc(p[0], p[1], r, 0, 2 * Math.PI);
  ctx.fillStyle = fill;
  ctx.fill();
  if (label !== undefined) {
    ctx.fillStyle = "#000";
    ctx.font = "12px system-ui";
    ctx.fillText(label, p[0] + r + 2, p[1] - r - 2);
  }
}

function chamber(to) {
  // Walls of the dominant chamber, along ω1 and ω2.
  ctx.strokeStyle = "#ddd";
  ctx.beginPath();
  const o = to([0, 0]);
  for (const w of [[40, 0], [0, 40]]) {
    ctx.moveTo(o[0], o[1]);
    const p = to(w);
    ctx.lineTo(p[0], p[1]);
  }
  ctx.stroke();
}

function showPolytope() {
  const v = polytope($("type").value);
  const to = frame(v.basis, v.points.map((p) => p.weight));
  clear();
  chamber(to);
  ctx.beginPath();
  v.vertices.forEach((w, i) => {
    const p = to(w);
    i === 0 ? ctx.moveTo(p[0], p[1]) : ctx.lineTo(p[0], p[1]);
  });
  ctx.closePath();
  ctx.fillStyle = "rgba(60, 120, 200, 0.12)";
  ctx.fill();
  ctx.strokeStyle = "#3c78c8";
  ctx.stroke();
  for (const p of v.points) {
    const fill = p.multiplicity === 0 ? "#c00" : p.is_vertex ? "#3c78c8" : "#444";
    dot(to(p.weight), 4 + 2 * Math.min(p.multiplicity, 6), fill, String(p.multiplicity));
  }
  const rows = v.points
    .map((p) => `<tr><td>${fmt(p.weight)}</td><td>${p.multiplicity}</td><td>${p.is_vertex ? "vertex" : ""}</td></tr>`)
    .join("");
  $("info").innerHTML =
    `<p>${v.lie_type}: ${v.points.length} lattice points in P(2ρ); ` +
    `every one occurs in V(ρ)⊗V(ρ): <b>${v.all_positive}</b>.</p>` +
    `<table><tr><th>λ</th><th>c</th><th></th></tr>${rows}</table>`;
}

function showTensor() {
  const v = tensor($("type").value, new Int32Array([num("l1"), num("l2")]), new Int32Array([num("m1"), num("m2")]));
  const to = frame(v.basis, v.components.map((c) => c.weight));
  clear();
  chamber(to);
  for (const c of v.components) dot(to(c.weight), 4 + 2 * Math.min(c.multiplicity, 6), "#2a8a4a", String(c.multiplicity));
  const rows = v.components
    .map((c) => `<tr><td>${fmt(c.weight)}</td><td>${c.multiplicity}</td><td>${c.dim}</td></tr>`)
    .join("");
  $("info").innerHTML =
    `<p>V${fmt(v.lambda)}⊗V${fmt(v.mu)} in ${v.lie_type}, dimension ${v.dim_product}.</p>` +
    `<table><tr><th>ν</th><th>c</th><th>dim V(ν)</th></tr>${rows}</table>`;
}

function showDiagram() {
  const v = diagram($("type").value, new Int32Array([num("d1"), num("d2")]));
  const to = frame(v.basis, v.weights.map((w) => w[0]));
  clear();
  chamber(to);
  for (const [w, m] of v.weights) dot(to(w), 3 + 1.5 * Math.min(m, 8), "#7a3cc8", m > 1 ? String(m) : undefined);
  $("info").innerHTML =
    `<p>V${fmt(v.highest_weight)} in ${v.lie_type}: dimension ${v.dim}, ` +
    `${v.weights.length} distinct weights (labels give multiplicities above 1).</p>`;
}

function guarded(f) {
  return () => {
    try {
      f();
    } catch (e) {
      $("info").innerHTML = `<p class="err">${e.message ?? e}</p>`;
    }
  };
}

await init();
$("show-polytope").onclick = guarded(showPolytope);
$("show-tensor").onclick = guarded(showTensor);
$("show-diagram").onclick = guarded(showDiagram);
$("type").onchange = guarded(showPolytope);
guarded(showPolytope)();
