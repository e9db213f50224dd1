// Editor wiring: one EditorApp owns the state, talks to the API, and
// re-renders the dynamic regions after every transition. The screen
// mirrors the server: panel tiles are exactly the last query response,
// the footer numeral is exactly the last hints count, and a saved record
// is exactly the canvas content.

import { ApiClient, GlyphCache, Sequencer } from "./api.js";
import { attachHoverClip } from "./animations.js";
import { mirrorCode, rotateCode } from "./codes.js";
import { buildPuppet, markSelectedArea, AREA_GLYPHS, BUTTON_AREAS } from "./puppet.js";
import * as state from "./state.js";
import type { UiState } from "./state.js";
import type { AreaInfo, AreasBody, FamilyInfo } from "./types.js";

const CANVAS_W = 500;
const CANVAS_H = 500;
const CLICK_SLOP = 4; // px of travel before a press becomes a drag
const FALLBACK_TILE = 24;

export interface AppOptions {
  hintLimit?: number;
}

interface DragGhost {
  code: string;
  element: HTMLElement;
}

interface PlacementDrag {
  id: number;
  startX: number;
  startY: number;
  moved: boolean;
  additive: boolean;
}

interface BandDrag {
  startX: number;
  startY: number;
  active: boolean;
}

export class EditorApp {
  state: UiState = state.initialState();
  readonly cache: GlyphCache;

  private areasBody: AreasBody = { areas: [] };
  private readonly panelSeq = new Sequencer();
  private readonly hintSeq = new Sequencer();
  private readonly hintLimit: number;
  private puppetSvg!: SVGSVGElement;
  private ghost: DragGhost | null = null;
  private placementDrag: PlacementDrag | null = null;
  private band: BandDrag | null = null;
  private clearArmed = false;
  private clearTimer: ReturnType<typeof setTimeout> | null = null;

  constructor(
    private readonly root: HTMLElement,
    private readonly api: ApiClient,
    options: AppOptions = {},
  ) {
    this.cache = new GlyphCache(api);
    this.hintLimit = options.hintLimit ?? 24;
  }

  async init(): Promise<void> {
    this.root.innerHTML = `
      <aside id="nav">
        <button id="home-btn" class="icon-btn" aria-label="home">⌂</button>
        <div id="puppet-slot"></div>
        <div id="area-buttons"></div>
      </aside>
      <main id="menu">
        <div id="families"></div>
        <div id="choose-boxes"></div>
        <div id="glyph-panel"></div>
      </main>
      <section id="workspace">
        <div id="display-side">
          <button id="save-btn" class="icon-btn" aria-label="save">⬓</button>
          <button id="clear-btn" class="icon-btn" aria-label="clear">▦</button>
        </div>
        <div id="display"><div id="rubber-band" hidden></div></div>
        <div id="toolbox">
          <button class="tool icon-btn" data-tool="rotate-cw" aria-label="rotate">↻</button>
          <button class="tool icon-btn" data-tool="rotate-ccw" aria-label="rotate back">↺</button>
          <button class="tool icon-btn" data-tool="mirror" aria-label="mirror">⇋</button>
          <button class="tool icon-btn" data-tool="duplicate" aria-label="duplicate">⧉</button>
          <button class="tool icon-btn" data-tool="erase" aria-label="erase">⌫</button>
        </div>
      </section>
      <footer id="hint-footer" class="minimized">
        <button id="hint-toggle" class="icon-btn" aria-label="hints">
          ☰ <span id="hint-count">0</span>
        </button>
        <div id="hint-entries" hidden></div>
      </footer>
      <div id="status-icon"></div>
    `;
    this.puppetSvg = buildPuppet((area) => void this.selectArea(area));
    this.byId("puppet-slot").appendChild(this.puppetSvg);
    const buttons = this.byId("area-buttons");
    try {
      this.areasBody = await this.api.areas();
    } catch {
      this.flash("error");
    }
    const known = new Set(this.areasBody.areas.map((a) => a.area));
    for (const area of BUTTON_AREAS) {
      if (!known.has(area)) {
        continue;
      }
      const button = document.createElement("button");
      button.className = "icon-btn area-btn";
      button.dataset.area = area;
      button.textContent = AREA_GLYPHS[area] ?? "◌";
      button.addEventListener("click", () => void this.selectArea(area));
      buttons.appendChild(button);
    }
    this.wireChrome();
    this.render();
  }

  // -- lookups ---------------------------------------------------------------

  private byId(id: string): HTMLElement {
    return this.root.querySelector(`#${id}`) as HTMLElement;
  }

  private areaInfo(area: string): AreaInfo | undefined {
    return this.areasBody.areas.find((a) => a.area === area);
  }

  private currentFamilies(): FamilyInfo[] {
    if (this.state.nav.kind !== "area") {
      return [];
    }
    const info = this.areaInfo(this.state.nav.area);
    return info ? info.categories.flatMap((c) => c.families) : [];
  }

  private currentFamily(): FamilyInfo | null {
    if (this.state.nav.kind !== "area" || this.state.nav.family === null) {
      return null;
    }
    const family = this.state.nav.family;
    return this.currentFamilies().find((f) => f.id === family) ?? null;
  }

  // -- actions ------------------------------------------------------------------

  async selectArea(area: string): Promise<void> {
    this.state = state.selectArea(this.state, area);
    this.render();
    await Promise.all([this.refreshPanel(), this.refreshHints()]);
  }

  goHome(): void {
    this.state = state.goHome(this.state);
    this.render();
  }

  async selectFamily(family: string | null): Promise<void> {
    this.state = state.selectFamily(this.state, family);
    this.render();
    await this.refreshPanel();
  }

  async toggleFacet(facet: string, value: string): Promise<void> {
    this.state = state.toggleFacetValue(this.state, facet, value);
    this.render();
    await this.refreshPanel();
  }

  async refreshPanel(): Promise<void> {
    if (this.state.nav.kind !== "area") {
      return;
    }
    const { area, family, assignment } = this.state.nav;
    const ticket = this.panelSeq.next();
    try {
      const body = await this.api.glyphs(area, family, assignment);
      if (!this.panelSeq.isCurrent(ticket)) {
        return; // a newer request owns the panel now
      }
      await this.cache.ensureAll(body.codes);
      if (!this.panelSeq.isCurrent(ticket)) {
        return;
      }
      this.state = state.applyPanel(this.state, body);
      this.render();
    } catch {
      if (this.panelSeq.isCurrent(ticket)) {
        this.flash("error");
      }
    }
  }

  async refreshHints(): Promise<void> {
    if (this.state.nav.kind !== "area") {
      return;
    }
    const area = this.state.nav.area;
    const ticket = this.hintSeq.next();
    try {
      const body = await this.api.hints(state.displayCodes(this.state), area, this.hintLimit);
      if (!this.hintSeq.isCurrent(ticket)) {
        return;
      }
      await this.cache.ensureAll(body.entries.map(([code]) => code));
      if (!this.hintSeq.isCurrent(ticket)) {
        return;
      }
      this.state = state.applyHints(this.state, body);
      this.render();
    } catch {
      if (this.hintSeq.isCurrent(ticket)) {
        this.flash("error");
      }
    }
  }

  async dropGlyph(code: string, x: number, y: number): Promise<void> {
    await this.cache.ensure(code);
    this.state = state.addPlacement(
      this.state,
      code,
      Math.max(0, Math.min(Math.round(x), CANVAS_W - 1)),
      Math.max(0, Math.min(Math.round(y), CANVAS_H - 1)),
    );
    this.render();
    await this.refreshHints();
  }

  /** Toolbox dispatch; transforms are atomic across the selection. */
  async applyTool(tool: string): Promise<void> {
    const selected = state.selectedPlacements(this.state);
    if (selected.length === 0) {
      return;
    }
    if (tool === "rotate-cw" || tool === "rotate-ccw" || tool === "mirror") {
      const recode = new Map<number, string>();
      for (const p of selected) {
        recode.set(
          p.id,
          tool === "mirror" ? mirrorCode(p.code) : rotateCode(p.code, tool === "rotate-cw" ? 1 : -1),
        );
      }
      const targets = [...new Set(recode.values())];
      const records = await Promise.all(targets.map((code) => this.cache.ensure(code)));
      if (records.some((r) => r === null)) {
        this.flash("warn"); // variant hole in the catalog: nothing changes
        return;
      }
      this.state = state.recodeSelection(this.state, recode);
    } else if (tool === "duplicate") {
      this.state = state.duplicateSelection(this.state);
    } else if (tool === "erase") {
      this.state = state.eraseSelection(this.state);
    } else {
      return;
    }
    this.render();
    await this.refreshHints();
  }

  async saveSign(): Promise<void> {
    const glyphs = this.state.display.placements.map(
      (p) => [p.code, p.x, p.y] as [string, number, number],
    );
    this.state = { ...this.state, pendingSaves: this.state.pendingSaves + 1 };
    this.render();
    try {
      await this.api.saveSign({ canvas: [CANVAS_W, CANVAS_H], glyphs });
      this.flash("saved");
      await this.refreshHints(); // statistics changed server-side
    } catch {
      this.flash("error"); // document stays intact; the button is the retry
    } finally {
      this.state = { ...this.state, pendingSaves: this.state.pendingSaves - 1 };
      this.render();
    }
  }

  /** First press arms, second press within the window clears. */
  requestClear(): void {
    if (!this.clearArmed) {
      this.clearArmed = true;
      this.byId("clear-btn").classList.add("armed");
      this.clearTimer = setTimeout(() => this.disarmClear(), 2500);
      return;
    }
    this.disarmClear();
    this.state = state.clearDisplay(this.state);
    this.render();
    void this.refreshHints();
  }

  private disarmClear(): void {
    this.clearArmed = false;
    this.byId("clear-btn").classList.remove("armed");
    if (this.clearTimer !== null) {
      clearTimeout(this.clearTimer);
      this.clearTimer = null;
    }
  }

  toggleHints(): void {
    this.state = state.toggleHintFooter(this.state);
    this.render();
  }

  private flash(kind: "saved" | "error" | "warn"): void {
    const icon = this.byId("status-icon");
    icon.textContent = { saved: "✓", error: "⚠", warn: "⦸" }[kind];
    icon.className = `show ${kind}`;
    setTimeout(() => {
      icon.className = "";
      icon.textContent = "";
    }, 1200);
  }

  // -- event wiring -------------------------------------------------------------

  private wireChrome(): void {
    this.byId("home-btn").addEventListener("click", () => this.goHome());
    attachHoverClip(this.byId("home-btn"), "home");
    this.byId("save-btn").addEventListener("click", () => void this.saveSign());
    attachHoverClip(this.byId("save-btn"), "save");
    this.byId("clear-btn").addEventListener("click", () => this.requestClear());
    attachHoverClip(this.byId("clear-btn"), "clear");
    this.byId("hint-toggle").addEventListener("click", () => this.toggleHints());
    for (const button of this.root.querySelectorAll<HTMLElement>(".tool")) {
      const tool = button.dataset.tool!;
      button.addEventListener("click", () => void this.applyTool(tool));
      attachHoverClip(button, tool);
    }
    this.byId("families").addEventListener("click", (event) => {
      const button = (event.target as HTMLElement).closest<HTMLElement>(".family-btn");
      if (button) {
        const active = this.state.nav.kind === "area" && this.state.nav.family === button.dataset.family;
        void this.selectFamily(active ? null : button.dataset.family!);
      }
    });
    this.byId("choose-boxes").addEventListener("click", (event) => {
      const button = (event.target as HTMLElement).closest<HTMLButtonElement>(".facet-value");
      if (button && !button.disabled) {
        void this.toggleFacet(button.dataset.facet!, button.dataset.value!);
      }
    });
    this.byId("glyph-panel").addEventListener("mousedown", (event) => this.beginTileDrag(event));
    this.byId("hint-entries").addEventListener("mousedown", (event) => this.beginTileDrag(event));
    this.byId("display").addEventListener("mousedown", (event) => this.beginDisplayPress(event));
    document.addEventListener("mousemove", (event) => this.onMouseMove(event));
    document.addEventListener("mouseup", (event) => this.onMouseUp(event));
  }

  private beginTileDrag(event: MouseEvent): void {
    const tile = (event.target as HTMLElement).closest<HTMLElement>(".tile");
    if (!tile || !tile.dataset.code) {
      return;
    }
    event.preventDefault();
    const element = document.createElement("div");
    element.className = "drag-ghost";
    element.textContent = "▣";
    document.body.appendChild(element);
    this.ghost = { code: tile.dataset.code, element };
    this.moveGhost(event);
  }

  private moveGhost(event: MouseEvent): void {
    if (this.ghost) {
      this.ghost.element.style.left = `${event.clientX + 4}px`;
      this.ghost.element.style.top = `${event.clientY + 4}px`;
    }
  }

  private beginDisplayPress(event: MouseEvent): void {
    const placement = (event.target as HTMLElement).closest<HTMLElement>(".placement");
    if (placement) {
      event.preventDefault();
      this.placementDrag = {
        id: Number(placement.dataset.id),
        startX: event.clientX,
        startY: event.clientY,
        moved: false,
        additive: event.ctrlKey || event.metaKey,
      };
      return;
    }
    if ((event.target as HTMLElement).closest("#display")) {
      this.band = { startX: event.clientX, startY: event.clientY, active: false };
    }
  }

  private onMouseMove(event: MouseEvent): void {
    this.moveGhost(event);
    if (this.placementDrag) {
      const drag = this.placementDrag;
      if (
        !drag.moved &&
        (Math.abs(event.clientX - drag.startX) > CLICK_SLOP ||
          Math.abs(event.clientY - drag.startY) > CLICK_SLOP)
      ) {
        drag.moved = true;
        if (!this.state.display.selection.includes(drag.id)) {
          this.state = state.setSelection(this.state, [drag.id]);
          this.render();
        }
      }
      return;
    }
    if (this.band) {
      const band = this.band;
      if (
        !band.active &&
        (Math.abs(event.clientX - band.startX) > CLICK_SLOP ||
          Math.abs(event.clientY - band.startY) > CLICK_SLOP)
      ) {
        band.active = true;
      }
      if (band.active) {
        this.drawBand(band, event);
      }
    }
  }

  private onMouseUp(event: MouseEvent): void {
    if (this.ghost) {
      const ghost = this.ghost;
      this.ghost = null;
      ghost.element.remove();
      const display = this.byId("display");
      const over = (event.target as HTMLElement | null)?.closest?.("#display");
      if (over) {
        const rect = display.getBoundingClientRect();
        void this.dropGlyph(ghost.code, event.clientX - rect.left, event.clientY - rect.top);
      }
      return;
    }
    if (this.placementDrag) {
      const drag = this.placementDrag;
      this.placementDrag = null;
      if (drag.moved) {
        this.state = state.moveSelection(
          this.state,
          event.clientX - drag.startX,
          event.clientY - drag.startY,
        );
        this.render();
        return;
      }
      this.state = drag.additive
        ? state.toggleSelected(this.state, drag.id)
        : state.setSelection(this.state, [drag.id]);
      this.render();
      return;
    }
    if (this.band) {
      const band = this.band;
      this.band = null;
      this.byId("rubber-band").hidden = true;
      if (!band.active) {
        this.state = state.setSelection(this.state, []);
        this.render();
        return;
      }
      const rect = this.byId("display").getBoundingClientRect();
      const x0 = Math.min(band.startX, event.clientX) - rect.left;
      const y0 = Math.min(band.startY, event.clientY) - rect.top;
      const x1 = Math.max(band.startX, event.clientX) - rect.left;
      const y1 = Math.max(band.startY, event.clientY) - rect.top;
      const hit = this.state.display.placements.filter((p) => {
        const record = this.cache.peek(p.code);
        const w = record?.w ?? FALLBACK_TILE;
        const h = record?.h ?? FALLBACK_TILE;
        return p.x < x1 && p.x + w > x0 && p.y < y1 && p.y + h > y0;
      });
      this.state = state.setSelection(this.state, hit.map((p) => p.id));
      this.render();
    }
  }

  private drawBand(band: BandDrag, event: MouseEvent): void {
    const rect = this.byId("display").getBoundingClientRect();
    const el = this.byId("rubber-band");
    el.hidden = false;
    el.style.left = `${Math.min(band.startX, event.clientX) - rect.left}px`;
    el.style.top = `${Math.min(band.startY, event.clientY) - rect.top}px`;
    el.style.width = `${Math.abs(event.clientX - band.startX)}px`;
    el.style.height = `${Math.abs(event.clientY - band.startY)}px`;
  }

  // -- rendering -------------------------------------------------------------------

  render(): void {
    const nav = this.state.nav;
    this.root.classList.toggle("home-mode", nav.kind === "home");
    this.root.classList.toggle("area-mode", nav.kind === "area");
    markSelectedArea(this.puppetSvg, nav.kind === "area" ? nav.area : null);
    for (const button of this.root.querySelectorAll<HTMLElement>(".area-btn")) {
      button.classList.toggle("selected", nav.kind === "area" && button.dataset.area === nav.area);
    }
    this.renderFamilies();
    this.renderChooseBoxes();
    this.renderPanel();
    this.renderDisplay();
    this.renderFooter();
    (this.byId("save-btn") as HTMLButtonElement).disabled = this.state.pendingSaves > 0;
  }

  private renderFamilies(): void {
    const host = this.byId("families");
    host.innerHTML = "";
    if (this.state.nav.kind !== "area") {
      return;
    }
    for (const family of this.currentFamilies()) {
      const button = document.createElement("button");
      button.className = "family-btn";
      button.dataset.family = family.id;
      button.textContent = family.name;
      button.classList.toggle("active", this.state.nav.family === family.id);
      host.appendChild(button);
    }
  }

  private renderChooseBoxes(): void {
    const host = this.byId("choose-boxes");
    host.innerHTML = "";
    const family = this.currentFamily();
    if (this.state.nav.kind !== "area" || family === null) {
      return;
    }
    const assignment = this.state.nav.assignment;
    const available = this.state.panel?.available ?? null;
    for (const facet of family.facets) {
      const box = document.createElement("div");
      box.className = "choose-box";
      box.dataset.facet = facet.name;
      const head = document.createElement("div");
      head.className = "box-head";
      head.dataset.icon = facet.icon;
      head.textContent = facet.name;
      box.appendChild(head);
      for (const value of facet.values) {
        const button = document.createElement("button");
        button.className = "facet-value";
        button.dataset.facet = facet.name;
        button.dataset.value = value;
        button.textContent = value;
        const active = assignment[facet.name] === value;
        button.classList.toggle("active", active);
        // grey out values that would empty the result; the active value
        // stays clickable so the choice can always be undone
        if (!active && available !== null && available[facet.name] !== undefined) {
          button.disabled = !available[facet.name].includes(value);
        }
        box.appendChild(button);
      }
      host.appendChild(box);
    }
  }

  private tile(code: string, extraClass = ""): HTMLElement {
    const record = this.cache.peek(code);
    const img = document.createElement("img");
    img.className = `tile ${extraClass}`.trim();
    img.dataset.code = code;
    img.alt = "";
    img.draggable = false;
    if (record) {
      img.src = `/assets/${record.asset}`;
      img.width = record.w;
      img.height = record.h;
    } else {
      img.width = FALLBACK_TILE;
      img.height = FALLBACK_TILE;
      img.classList.add("missing");
    }
    return img;
  }

  private renderPanel(): void {
    const host = this.byId("glyph-panel");
    host.innerHTML = "";
    if (this.state.nav.kind !== "area" || this.state.panel === null) {
      return;
    }
    for (const code of this.state.panel.codes) {
      host.appendChild(this.tile(code));
    }
  }

  private renderDisplay(): void {
    const display = this.byId("display");
    for (const el of display.querySelectorAll(".placement")) {
      el.remove();
    }
    const selected = new Set(this.state.display.selection);
    for (const p of this.state.display.placements) {
      const el = this.tile(p.code, "placement");
      el.classList.remove("tile");
      el.dataset.id = String(p.id);
      el.style.left = `${p.x}px`;
      el.style.top = `${p.y}px`;
      el.classList.toggle("selected", selected.has(p.id));
      display.appendChild(el);
    }
  }

  private renderFooter(): void {
    const footer = this.byId("hint-footer");
    const entries = this.byId("hint-entries");
    this.byId("hint-count").textContent = String(this.state.hints.count);
    footer.classList.toggle("minimized", !this.state.hints.expanded);
    footer.classList.toggle("expanded", this.state.hints.expanded);
    entries.hidden = !this.state.hints.expanded;
    entries.innerHTML = "";
    if (this.state.hints.expanded) {
      for (const [code] of this.state.hints.entries) {
        entries.appendChild(this.tile(code, "hint-tile"));
      }
    }
  }
}

export function bootstrap(): void {
  const root = document.getElementById("app");
  if (root) {
    void new EditorApp(root, new ApiClient()).init();
  }
}

if (typeof document !== "undefined" && document.getElementById("app")) {
  bootstrap();
}
