import init, { spectrum, power, landscape } from "./pkg/penta_wasm.js";

const form = document.getElementById("controls");
const status = document.getElementById("status");
const GRID = 120;

// Sampling window for the landscape; null means fit to the spectrum.
let view = null;
let lastKey = "";

const STOPS = [
  [68, 1, 84], [59, 82, 139], [33, 145, 140], [94, 201, 98], [253, 231, 37],
];

function colour(t) {
  t = Math.min(1, Math.max(0, t)) * (STOPS.length - 1);
  const k = Math.min(STOPS.length - 2, Math.floor(t));
  const f = t - k;
  return STOPS[k].map((c, i) => Math.round(c + f * (STOPS[k + 1][i] - c)));
}

function readInputs() {
  const v = (name) => Number(form.elements[name].value);
  const params = new Float64Array(
    ["a1", "a2", "b1", "b2", "c1", "c2"].flatMap((p) => [v(p + "re"), v(p + "im")]),
  );
  return { params, n: v("n"), s: v("s") };
}

function bounds(points) {
  let [x0, x1, y0, y1] = [Infinity, -Infinity, Infinity, -Infinity];
  for (const [x, y] of points) {
    x0 = Math.min(x0, x); x1 = Math.max(x1, x);
    y0 = Math.min(y0, y); y1 = Math.max(y1, y);
  }
  const half = Math.max(x1 - x0, y1 - y0, 1) * 0.6;
  const cx = (x0 + x1) / 2, cy = (y0 + y1) / 2;
  return [cx - half, cx + half, cy - half, cy + half];
}

function toPixel(win, canvas, [x, y]) {
  const [r0, r1, i0, i1] = win;
  return [
    ((x - r0) / (r1 - r0)) * canvas.width,
    ((i1 - y) / (i1 - i0)) * canvas.height,
  ];
}

function marker(ctx, px, py, odd) {
  ctx.beginPath();
  if (odd) {
    ctx.arc(px, py, 4, 0, 2 * Math.PI);
  } else {
    ctx.moveTo(px, py - 5); ctx.lineTo(px + 4.5, py + 3.5); ctx.lineTo(px - 4.5, py + 3.5);
    ctx.closePath();
  }
  ctx.fill();
  ctx.stroke();
}

function drawAxes(ctx, win, canvas) {
  ctx.strokeStyle = "#ccc";
  ctx.beginPath();
  const [ox, oy] = toPixel(win, canvas, [0, 0]);
  ctx.moveTo(0, oy); ctx.lineTo(canvas.width, oy);
  ctx.moveTo(ox, 0); ctx.lineTo(ox, canvas.height);
  ctx.stroke();
}

function drawSpectrum(spec) {
  const canvas = document.getElementById("spectrum");
  const ctx = canvas.getContext("2d");
  ctx.clearRect(0, 0, canvas.width, canvas.height);
  const win = bounds(spec.eigenvalues);
  drawAxes(ctx, win, canvas);
  spec.eigenvalues.forEach((z, k) => {
    const odd = k % 2 === 0; // index k is alpha_{k+1}
    ctx.fillStyle = odd ? "#c0392b" : "#2c6fbb";
    ctx.strokeStyle = "#fff";
    const [px, py] = toPixel(win, canvas, z);
    marker(ctx, px, py, odd);
  });
  ctx.fillStyle = "#333";
  ctx.fillText(`Re [${win[0].toFixed(2)}, ${win[1].toFixed(2)}]`, 6, canvas.height - 6);
}

function drawHeatmap(res) {
  const canvas = document.getElementById("heatmap");
  const ctx = canvas.getContext("2d");
  const n = res.n;
  const logs = res.entries.map(([re, im]) => {
    const m = Math.hypot(re, im);
    return m > 0 ? Math.log10(m) : null;
  });
  const finite = logs.filter((v) => v !== null);
  const hi = Math.max(...finite);
  const lo = Math.max(Math.min(...finite), hi - 12);
  const cell = canvas.width / n;
  ctx.clearRect(0, 0, canvas.width, canvas.height);
  for (let i = 0; i < n; i++) {
    for (let j = 0; j < n; j++) {
      const v = logs[i * n + j];
      if (v === null) {
        ctx.fillStyle = "#f4f4f4";
      } else {
        const [r, g, b] = colour(hi > lo ? (v - lo) / (hi - lo) : 1);
        ctx.fillStyle = `rgb(${r},${g},${b})`;
      }
      ctx.fillRect(j * cell, i * cell, Math.ceil(cell), Math.ceil(cell));
    }
  }
  document.getElementById("power-info").textContent =
    `max |w| = ${res.max_abs.toExponential(3)}, range ${lo.toFixed(1)}..${hi.toFixed(1)}; ` +
    `deviation from dense product ${res.oracle_deviation.toExponential(2)}`;
}

function drawLandscape(params, n, spec) {
  const canvas = document.getElementById("landscape");
  const ctx = canvas.getContext("2d");
  const win = view ?? bounds(spec.eigenvalues);
  const grid = JSON.parse(landscape(params, n, win[0], win[1], win[2], win[3], GRID, GRID));
  const vals = grid.log_modulus;
  const finite = vals.filter((v) => v !== null);
  const lo = Math.min(...finite), hi = Math.max(...finite);
  const image = new ImageData(GRID, GRID);
  vals.forEach((v, k) => {
    const [r, g, b] = v === null ? [0, 0, 0] : colour(hi > lo ? (v - lo) / (hi - lo) : 0);
    image.data.set([r, g, b, 255], 4 * k);
  });
  const off = new OffscreenCanvas(GRID, GRID);
  off.getContext("2d").putImageData(image, 0, 0);
  ctx.imageSmoothingEnabled = true;
  ctx.drawImage(off, 0, 0, canvas.width, canvas.height);
  ctx.strokeStyle = "#000";
  spec.eigenvalues.forEach((z, k) => {
    ctx.fillStyle = "rgba(255,255,255,0.85)";
    const [px, py] = toPixel(win, canvas, z);
    marker(ctx, px, py, k % 2 === 0);
  });
  canvas.dataset.window = JSON.stringify(win);
}

function render() {
  const { params, n, s } = readInputs();
  const key = Array.from(params).join(",") + ":" + n;
  if (key !== lastKey) view = null;
  lastKey = key;
  try {
    const spec = JSON.parse(spectrum(params, n));
    drawSpectrum(spec);
    drawHeatmap(JSON.parse(power(params, n, s)));
    drawLandscape(params, n, spec);
    status.textContent = "";
  } catch (e) {
    status.textContent = String(e);
  }
}

function landscapeEvents() {
  const canvas = document.getElementById("landscape");
  const current = () => JSON.parse(canvas.dataset.window);
  const point = (ev) => {
    const [r0, r1, i0, i1] = current();
    const rect = canvas.getBoundingClientRect();
    return [
      r0 + ((ev.clientX - rect.left) / rect.width) * (r1 - r0),
      i1 - ((ev.clientY - rect.top) / rect.height) * (i1 - i0),
    ];
  };
  const rescale = ([cx, cy], factor) => {
    const [r0, r1, i0, i1] = current();
    const hw = ((r1 - r0) / 2) * factor, hh = ((i1 - i0) / 2) * factor;
    view = [cx - hw, cx + hw, cy - hh, cy + hh];
    render();
  };
  canvas.addEventListener("click", (ev) => rescale(point(ev), 1));
  canvas.addEventListener("wheel", (ev) => {
    ev.preventDefault();
    rescale(point(ev), ev.deltaY > 0 ? 1.25 : 0.8);
  }, { passive: false });
}

await init();
form.addEventListener("input", render);
landscapeEvents();
render();
