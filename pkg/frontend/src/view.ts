// Interactive mutation explorer: clickable vertices on a fixed circular
// layout, green/red coloring mirrored from the service, a variable panel, a
// history strip, and the MGS banner.  Vertices never move between mutations;
// only arrows and colors change.

import {
  ApiError,
  ConnectionLost,
  ExplorerClient,
  SessionState,
} from "./api.js";

const SIZE = 420;
const RADIUS = 150;
const VERTEX_R = 22;

interface HistoryStep {
  vertex: number;
  green: boolean;
}

export class ExplorerView {
  state: SessionState;
  private steps: HistoryStep[] = [];
  private pending: Promise<void> = Promise.resolve();
  private busy = false;
  private hintOn = false;
  private connectionLost = false;
  private readonly positions: Map<number, { x: number; y: number }>;

  constructor(
    private readonly root: HTMLElement,
    private readonly client: ExplorerClient,
    initial: SessionState,
  ) {
    this.state = initial;
    this.positions = new Map();
    for (let v = 1; v <= initial.n; v++) {
      const angle = (2 * Math.PI * (v - 1)) / initial.n - Math.PI / 2;
      this.positions.set(v, {
        x: SIZE / 2 + RADIUS * Math.cos(angle),
        y: SIZE / 2 + RADIUS * Math.sin(angle),
      });
    }
    this.render();
  }

  /** Resolves once any in-flight request has settled (used by tests). */
  idle(): Promise<void> {
    return this.pending;
  }

  clickVertex(vertex: number): Promise<void> {
    if (this.busy) return this.pending;
    const wasGreen = this.state.green.includes(vertex);
    this.pending = this.run(async () => {
      const next = await this.client.mutate(this.state.id, vertex);
      this.steps.push({ vertex, green: next.green_move ?? wasGreen });
      this.state = next;
    });
    return this.pending;
  }

  clickUndo(): Promise<void> {
    if (this.busy) return this.pending;
    this.pending = this.run(async () => {
      const next = await this.client.undo(this.state.id);
      this.steps.pop();
      this.state = next;
    });
    return this.pending;
  }

  toggleHint(): void {
    this.hintOn = !this.hintOn;
    this.render();
  }

  private async run(action: () => Promise<void>): Promise<void> {
    this.busy = true;
    this.render();
    try {
      await action();
      this.connectionLost = false;
    } catch (err) {
      if (err instanceof ConnectionLost) {
        this.connectionLost = true;
      } else if (err instanceof ApiError) {
        this.showToast(`${err.status}: ${err.message}`);
      } else {
        this.showToast(String(err));
      }
    } finally {
      this.busy = false;
      this.render();
    }
  }

  private showToast(message: string): void {
    const toast = document.createElement("div");
    toast.className = "toast";
    toast.textContent = message;
    this.root.appendChild(toast);
  }

  render(): void {
    const toasts = Array.from(this.root.querySelectorAll(".toast"));
    this.root.innerHTML = "";

    if (this.connectionLost) {
      const banner = document.createElement("div");
      banner.className = "banner banner-error";
      banner.textContent = "connection lost";
      this.root.appendChild(banner);
    }

    if (this.state.mgs_done && this.steps.every((s) => s.green)) {
      const banner = document.createElement("div");
      banner.className = "banner mgs-banner";
      banner.textContent = `maximal green sequence complete: ${this.state.history.join(" ")}`;
      this.root.appendChild(banner);
    } else if (this.state.mgs_done) {
      const banner = document.createElement("div");
      banner.className = "banner all-red-banner";
      banner.textContent = "all vertices red";
      this.root.appendChild(banner);
    }

    this.root.appendChild(this.renderQuiver());
    this.root.appendChild(this.renderControls());
    this.root.appendChild(this.renderVariables());
    this.root.appendChild(this.renderHistory());
    for (const toast of toasts.slice(-3)) {
      this.root.appendChild(toast);
    }
  }

  private renderQuiver(): SVGSVGElement {
    const svgNS = "http://www.w3.org/2000/svg";
    const svg = document.createElementNS(svgNS, "svg");
    svg.setAttribute("viewBox", `0 0 ${SIZE} ${SIZE}`);
    svg.setAttribute("class", "quiver-canvas");

    // Arrow multiplicities, drawn doubled/tripled with small offsets.
    const byPair = new Map<string, { s: number; t: number; count: number }>();
    for (const [s, t] of this.state.arrows) {
      const key = `${s}>${t}`;
      const entry = byPair.get(key) ?? { s, t, count: 0 };
      entry.count += 1;
      byPair.set(key, entry);
    }
    for (const { s, t, count } of byPair.values()) {
      const from = this.positions.get(s)!;
      const to = this.positions.get(t)!;
      const dx = to.x - from.x;
      const dy = to.y - from.y;
      const len = Math.hypot(dx, dy);
      const ux = dx / len;
      const uy = dy / len;
      const nx = -uy;
      const ny = ux;
      for (let i = 0; i < count; i++) {
        const offset = (i - (count - 1) / 2) * 8;
        const x1 = from.x + ux * VERTEX_R + nx * offset;
        const y1 = from.y + uy * VERTEX_R + ny * offset;
        const x2 = to.x - ux * (VERTEX_R + 8) + nx * offset;
        const y2 = to.y - uy * (VERTEX_R + 8) + ny * offset;
        const line = document.createElementNS(svgNS, "line");
        line.setAttribute("x1", x1.toFixed(1));
        line.setAttribute("y1", y1.toFixed(1));
        line.setAttribute("x2", x2.toFixed(1));
        line.setAttribute("y2", y2.toFixed(1));
        line.setAttribute("class", "arrow");
        line.setAttribute("marker-end", "url(#arrowhead)");
        svg.appendChild(line);
      }
      if (count > 1) {
        const badge = document.createElementNS(svgNS, "text");
        badge.setAttribute("x", ((from.x + to.x) / 2 + nx * 16).toFixed(1));
        badge.setAttribute("y", ((from.y + to.y) / 2 + ny * 16).toFixed(1));
        badge.setAttribute("class", "multiplicity-badge");
        badge.textContent = `x${count}`;
        svg.appendChild(badge);
      }
    }

    const defs = document.createElementNS(svgNS, "defs");
    defs.innerHTML =
      '<marker id="arrowhead" markerWidth="8" markerHeight="8" refX="6" ' +
      'refY="3" orient="auto"><path d="M0,0 L6,3 L0,6 z"/></marker>';
    svg.appendChild(defs);

    for (let v = 1; v <= this.state.n; v++) {
      const pos = this.positions.get(v)!;
      const group = document.createElementNS(svgNS, "g");
      const circle = document.createElementNS(svgNS, "circle");
      circle.setAttribute("cx", pos.x.toFixed(1));
      circle.setAttribute("cy", pos.y.toFixed(1));
      circle.setAttribute("r", String(VERTEX_R));
      const color = this.state.green.includes(v) ? "green" : "red";
      const hint =
        this.hintOn && this.state.green.includes(v) ? " hinted" : "";
      circle.setAttribute(
        "class",
        `vertex vertex-${color}${hint}${this.busy ? " disabled" : ""}`,
      );
      circle.setAttribute("data-vertex", String(v));
      circle.addEventListener("click", () => {
        void this.clickVertex(v);
      });
      group.appendChild(circle);
      const label = document.createElementNS(svgNS, "text");
      label.setAttribute("x", pos.x.toFixed(1));
      label.setAttribute("y", (pos.y + 5).toFixed(1));
      label.setAttribute("class", "vertex-label");
      label.textContent = String(v);
      group.appendChild(label);
      svg.appendChild(group);
    }
    return svg;
  }

  private renderControls(): HTMLElement {
    const bar = document.createElement("div");
    bar.className = "controls";
    const undo = document.createElement("button");
    undo.textContent = "undo";
    undo.className = "undo-button";
    undo.disabled = this.busy || this.state.history.length === 0;
    undo.addEventListener("click", () => {
      void this.clickUndo();
    });
    bar.appendChild(undo);
    const hint = document.createElement("button");
    hint.textContent = this.hintOn ? "hint: on" : "hint: off";
    hint.className = "hint-button";
    hint.addEventListener("click", () => this.toggleHint());
    bar.appendChild(hint);
    return bar;
  }

  private renderVariables(): HTMLElement {
    const panel = document.createElement("div");
    panel.className = "variable-panel";
    this.state.cluster.forEach((entry, index) => {
      const row = document.createElement("div");
      row.className = "variable-row";
      const name = document.createElement("span");
      name.className = "variable-name";
      name.textContent = `x${index + 1}' = `;
      const value = document.createElement("span");
      value.className = "variable-value";
      value.textContent = entry.truncated ? `${entry.text}…` : entry.text;
      row.appendChild(name);
      row.appendChild(value);
      if (entry.truncated) {
        const expand = document.createElement("button");
        expand.textContent = "full";
        expand.className = "expand-button";
        expand.addEventListener("click", () => {
          void this.client
            .variable(this.state.id, index + 1)
            .then((text) => {
              value.textContent = text;
            });
        });
        row.appendChild(expand);
      }
      panel.appendChild(row);
    });
    return panel;
  }

  private renderHistory(): HTMLElement {
    const strip = document.createElement("div");
    strip.className = "history-strip";
    for (const step of this.steps) {
      const chip = document.createElement("span");
      chip.className = `history-step ${step.green ? "step-green" : "step-red"}`;
      chip.textContent = String(step.vertex);
      strip.appendChild(chip);
    }
    return strip;
  }
}

export async function mountExplorer(
  root: HTMLElement,
  client: ExplorerClient,
  quiver: { n: number; arrows: [number, number][] },
): Promise<ExplorerView> {
  const state = await client.createSession(quiver);
  return new ExplorerView(root, client, state);
}
