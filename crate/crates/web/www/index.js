import init, { staircase, fibers, toric } from "./pkg/agraded_web.js";

const $ = (id) => document.getElementById(id);

function guarded(out, f) {
  return () => {
    out.classList.remove("error");
    try {
      f();
    } catch (e) {
      out.classList.add("error");
      out.textContent = String(e);
    }
  };
}

function clear(canvas) {
  const g = canvas.getContext("2d");
  g.clearRect(0, 0, canvas.width, canvas.height);
  return g;
}

function drawStaircase(r) {
  const canvas = $("st-canvas");
  const g = clear(canvas);
  if (r.names.length !== 2) {
    g.fillText("drawn for two variables only", 10, 20);
    return;
  }
  const [bx, by] = r.bound;
  const cell = Math.min((canvas.width - 30) / (bx + 1), (canvas.height - 30) / (by + 1));
  const px = (i) => 20 + i * cell + cell / 2;
  const py = (j) => canvas.height - 20 - j * cell - cell / 2;
  g.strokeStyle = "#ddd";
  for (let i = 0; i <= bx; i++) for (let j = 0; j <= by; j++) g.strokeRect(px(i) - cell / 2, py(j) - cell / 2, cell, cell);
  g.fillStyle = "#cde";
  for (const [i, j] of r.standard) g.fillRect(px(i) - cell / 2 + 1, py(j) - cell / 2 + 1, cell - 2, cell - 2);
  g.fillStyle = "#c33";
  for (const [i, j] of r.generators) {
    g.beginPath();
    g.arc(px(i), py(j), cell / 5, 0, 2 * Math.PI);
    g.fill();
  }
  // each pair is a root plus the directions of its face
  g.strokeStyle = "#236";
  g.lineWidth = 2;
  for (const p of r.pairs) {
    const [i, j] = p.root;
    g.beginPath();
    g.arc(px(i), py(j), cell / 6, 0, 2 * Math.PI);
    g.stroke();
    for (const k of p.face) {
      g.beginPath();
      g.moveTo(px(i), py(j));
      g.lineTo(k === 0 ? px(bx) + cell / 2 : px(i), k === 0 ? py(j) : py(by) - cell / 2);
      g.stroke();
    }
  }
  g.lineWidth = 1;
  g.fillStyle = "#222";
  g.fillText(r.names[0], canvas.width - 15, canvas.height - 5);
  g.fillText(r.names[1], 5, 12);
}

function runStaircase() {
  const r = JSON.parse(staircase($("st-ideal").value, Number($("st-margin").value)));
  drawStaircase(r);
  $("st-out").textContent = [
    "standard pairs:",
    ...r.pairs.map((p) => "  " + p.text),
    "associated primes (faces): " + r.primes.join(" "),
    "chain property: " + (r.chain_holds ? "holds" : "fails"),
  ].join("\n");
}

function runFibers() {
  const r = JSON.parse(fibers($("fb-ideal").value, $("fb-matrix").value, $("fb-box").value));
  const canvas = $("fb-canvas");
  const g = clear(canvas);
  const dims = r.cells[0].degree.length;
  const xs = r.cells.map((c) => c.degree[0]);
  const ys = r.cells.map((c) => (dims > 1 ? c.degree[1] : 0));
  const w = Math.max(...xs) + 1;
  const h = Math.max(...ys) + 1;
  const cell = Math.min((canvas.width - 20) / w, (canvas.height - 20) / h);
  const big = Math.max(1, ...r.cells.map((c) => c.size));
  g.font = `${Math.max(8, Math.floor(cell / 3))}px monospace`;
  for (const c of r.cells) {
    const x = 10 + c.degree[0] * cell;
    const y = canvas.height - 10 - ((dims > 1 ? c.degree[1] : 0) + 1) * cell;
    const bad = (c.size > 0) !== (c.standard.length > 0) || c.standard.length > 1;
    g.fillStyle = c.size === 0 ? "#fff" : `hsl(210, 60%, ${90 - (50 * c.size) / big}%)`;
    g.fillRect(x, y, cell - 1, cell - 1);
    if (bad) {
      g.strokeStyle = "#c00";
      g.lineWidth = 2;
      g.strokeRect(x + 1, y + 1, cell - 3, cell - 3);
      g.lineWidth = 1;
    }
    if (c.size > 0) {
      g.fillStyle = "#000";
      g.fillText(String(c.size), x + 3, y + cell / 2);
    }
  }
  const lines = r.cells
    .filter((c) => c.size > 0)
    .map((c) => `(${c.degree.join(",")})  fiber ${c.size}  standard ${c.standard.join(", ") || "-"}`);
  $("fb-out").textContent = `defects: ${r.defects}\n` + lines.join("\n");
}

function runToric() {
  const r = JSON.parse(toric($("tr-matrix").value, $("tr-weights").value));
  const canvas = $("tr-canvas");
  const g = clear(canvas);
  // project through the first row, which is positive for homogeneous matrices
  const ratio = (v) => (v.length > 1 && v[0] > 0 ? v[1] / v[0] : v[0]);
  const pts = r.columns.map(ratio);
  const lo = Math.min(...pts);
  const hi = Math.max(...pts);
  const sx = (t) => 20 + ((t - lo) / (hi - lo || 1)) * (canvas.width - 40);
  const mid = canvas.height / 2;
  r.cells.forEach((c, k) => {
    const ts = c.rays.map(ratio);
    g.strokeStyle = `hsl(${(k * 67) % 360}, 60%, 45%)`;
    g.lineWidth = 6;
    g.beginPath();
    g.moveTo(sx(Math.min(...ts)), mid - 12 + (k % 2) * 24);
    g.lineTo(sx(Math.max(...ts)), mid - 12 + (k % 2) * 24);
    g.stroke();
  });
  g.lineWidth = 1;
  g.fillStyle = "#222";
  pts.forEach((t, j) => {
    g.beginPath();
    g.arc(sx(t), mid, 4, 0, 2 * Math.PI);
    g.fill();
    g.fillText(`x${j + 1}`, sx(t) - 6, mid + 36);
  });
  $("tr-out").textContent = [
    "Groebner basis:",
    ...r.basis.map((b) => "  " + b),
    "initial ideal: (" + r.initial.join(", ") + ")",
    "cells: " + r.cells.map((c) => c.face).join(" "),
    "triangulation: " + (r.valid ? "valid" : "invalid: " + r.violations.join("; ")),
  ].join("\n");
}

await init();
$("st-run").onclick = guarded($("st-out"), runStaircase);
$("fb-run").onclick = guarded($("fb-out"), runFibers);
$("tr-run").onclick = guarded($("tr-out"), runToric);
$("st-run").onclick();
$("fb-run").onclick();
$("tr-run").onclick();
