// Built with: wasm-pack build crates/wasm --target web --out-dir www/pkg
import init, { solveEdgeList, compareFamily, realizeGadget } from "./pkg/pidom_wasm.js";

const $ = (id) => document.getElementById(id);
const FILL = ["#ffffff", "#9ecae1", "#08519c"];
const NS = "http://www.w3.org/2000/svg";

// Circular layout; good enough for the small graphs the solver accepts.
function draw(svg, graph, labels) {
  svg.replaceChildren();
  const w = +svg.getAttribute("width"), h = +svg.getAttribute("height");
  const r = Math.min(w, h) / 2 - 24;
  const pos = [...Array(graph.n).keys()].map((i) => {
    const t = (2 * Math.PI * i) / graph.n - Math.PI / 2;
    return [w / 2 + r * Math.cos(t), h / 2 + r * Math.sin(t)];
  });
  for (const [u, v] of graph.edges) {
    const line = document.createElementNS(NS, "line");
    line.setAttribute("x1", pos[u][0]); line.setAttribute("y1", pos[u][1]);
    line.setAttribute("x2", pos[v][0]); line.setAttribute("y2", pos[v][1]);
    line.setAttribute("stroke", "#888");
    svg.appendChild(line);
  }
  pos.forEach(([x, y], i) => {
    const c = document.createElementNS(NS, "circle");
    c.setAttribute("cx", x); c.setAttribute("cy", y); c.setAttribute("r", 11);
    c.setAttribute("fill", FILL[labels[i]]); c.setAttribute("stroke", "#333");
    const title = document.createElementNS(NS, "title");
    title.textContent = `${graph.names[i]}: ${labels[i]}`;
    c.appendChild(title);
    svg.appendChild(c);
    const t = document.createElementNS(NS, "text");
    t.setAttribute("x", x + 13); t.setAttribute("y", y - 9);
    t.textContent = graph.names[i];
    svg.appendChild(t);
  });
}

function guarded(out, f) {
  try {
    out.classList.remove("err");
    f();
  } catch (e) {
    out.classList.add("err");
    out.textContent = String(e);
  }
}

function onSolve() {
  guarded($("solve-out"), () => {
    const rep = JSON.parse(solveEdgeList($("edges").value, $("variant").value));
    draw($("solve-svg"), rep.graph, rep.result.witness);
    const { variant, optimum, witness, nodes_explored } = rep.result;
    $("solve-out").textContent =
      `${variant} number: ${optimum}\nwitness: ${witness.join(",")}\nsearch nodes: ${nodes_explored}`;
  });
}

function onCompare() {
  guarded($("family-out"), () => {
    const rep = JSON.parse(compareFamily($("family").value, +$("fam-n").value, +$("fam-m").value));
    draw($("family-svg"), rep.graph, rep.formula_witness);
    $("family-out").textContent =
      `${rep.family}\nformula: ${rep.formula} (${rep.source})\nsolver:  ${rep.solver.optimum}\n` +
      `agree:   ${rep.agrees}\nformula witness: ${rep.formula_witness.join(",")}\n` +
      `solver witness:  ${rep.solver.witness.join(",")}`;
  });
}

let lastGadget = null;
function showGadget() {
  if (!lastGadget) return;
  const which = document.querySelector("input[name=show]:checked").value;
  draw($("gadget-svg"), lastGadget.graph, lastGadget[which].witness);
}

function onGadget() {
  guarded($("gadget-out"), () => {
    const rep = JSON.parse(realizeGadget(+$("ga").value, +$("gb").value, +$("gp").value));
    lastGadget = rep;
    showGadget();
    $("gadget-out").textContent =
      `${rep.graph.n} vertices, ${rep.graph.edges.length} edges\n` +
      `claimed (Roman, PID): (${rep.claimed.join(", ")})\n` +
      `measured:             (${rep.roman.optimum}, ${rep.pid.optimum})`;
  });
}

await init();
$("solve").onclick = onSolve;
$("compare").onclick = onCompare;
$("gadget").onclick = onGadget;
document.querySelectorAll("input[name=show]").forEach((r) => (r.onchange = showGadget));
onSolve();
onCompare();
onGadget();
