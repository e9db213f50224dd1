// Pure editor state and its transitions. Everything here is plain data
// in, plain data out, so the logic tests run without a DOM.
//
// Invariants kept by construction: the navigation assignment always
// mirrors the last panel request; hint entries only ever come from the
// currently navigated area; placement ids are unique and the array order
// is the z-order (later = on top).

import type { HintsBody, QueryBody } from "./types.js";

export interface NavHome {
  kind: "home";
}

export interface NavArea {
  kind: "area";
  area: string;
  family: string | null;
  assignment: Record<string, string>;
}

export type Nav = NavHome | NavArea;

export interface Placement {
  id: number;
  code: string;
  x: number;
  y: number;
}

export interface DisplayState {
  placements: Placement[];
  nextId: number;
  selection: number[];
}

export interface HintState {
  expanded: boolean;
  count: number;
  entries: [string, number][];
}

export interface UiState {
  nav: Nav;
  panel: QueryBody | null;
  display: DisplayState;
  hints: HintState;
  pendingSaves: number;
}

export function initialState(): UiState {
  return {
    nav: { kind: "home" },
    panel: null,
    display: { placements: [], nextId: 1, selection: [] },
    hints: { expanded: false, count: 0, entries: [] },
    pendingSaves: 0,
  };
}

// -- navigation ------------------------------------------------------------

export function selectArea(state: UiState, area: string): UiState {
  if (state.nav.kind === "area" && state.nav.area === area) {
    return state;
  }
  return {
    ...state,
    nav: { kind: "area", area, family: null, assignment: {} },
    panel: null,
    hints: { ...state.hints, count: 0, entries: [] },
  };
}

export function goHome(state: UiState): UiState {
  return {
    ...state,
    nav: { kind: "home" },
    panel: null,
    hints: { ...state.hints, expanded: false, count: 0, entries: [] },
  };
}

export function selectFamily(state: UiState, family: string | null): UiState {
  if (state.nav.kind !== "area") {
    return state;
  }
  return { ...state, nav: { ...state.nav, family, assignment: {} }, panel: null };
}

/** One value per Choose Box; re-clicking the active value deselects it. */
export function toggleFacetValue(state: UiState, facet: string, value: string): UiState {
  if (state.nav.kind !== "area" || state.nav.family === null) {
    return state;
  }
  const assignment = { ...state.nav.assignment };
  if (assignment[facet] === value) {
    delete assignment[facet];
  } else {
    assignment[facet] = value;
  }
  return { ...state, nav: { ...state.nav, assignment } };
}

export function applyPanel(state: UiState, body: QueryBody): UiState {
  return { ...state, panel: body };
}

export function applyHints(state: UiState, body: HintsBody): UiState {
  return { ...state, hints: { ...state.hints, count: body.count, entries: body.entries } };
}

export function toggleHintFooter(state: UiState): UiState {
  return { ...state, hints: { ...state.hints, expanded: !state.hints.expanded } };
}

// -- display ---------------------------------------------------------------

export function addPlacement(state: UiState, code: string, x: number, y: number): UiState {
  const id = state.display.nextId;
  const placement: Placement = { id, code, x, y };
  return {
    ...state,
    display: {
      placements: [...state.display.placements, placement],
      nextId: id + 1,
      selection: [id], // a fresh drop becomes the selection
    },
  };
}

export function setSelection(state: UiState, ids: number[]): UiState {
  const existing = new Set(state.display.placements.map((p) => p.id));
  return {
    ...state,
    display: { ...state.display, selection: ids.filter((id) => existing.has(id)) },
  };
}

export function toggleSelected(state: UiState, id: number): UiState {
  const selection = state.display.selection.includes(id)
    ? state.display.selection.filter((s) => s !== id)
    : [...state.display.selection, id];
  return setSelection(state, selection);
}

/** Replace codes of selected placements; position, id and z-order stay. */
export function recodeSelection(state: UiState, codes: Map<number, string>): UiState {
  return {
    ...state,
    display: {
      ...state.display,
      placements: state.display.placements.map((p) =>
        codes.has(p.id) ? { ...p, code: codes.get(p.id)! } : p,
      ),
    },
  };
}

export function moveSelection(state: UiState, dx: number, dy: number): UiState {
  const selected = new Set(state.display.selection);
  const moved = state.display.placements.map((p) =>
    selected.has(p.id) ? { ...p, x: Math.max(0, p.x + dx), y: Math.max(0, p.y + dy) } : p,
  );
  return { ...state, display: { ...state.display, placements: moved } };
}

/** Copies land at (+10, +10), appended on top in the originals' z-order. */
export function duplicateSelection(state: UiState): UiState {
  const selected = new Set(state.display.selection);
  const originals = state.display.placements.filter((p) => selected.has(p.id));
  let nextId = state.display.nextId;
  const copies: Placement[] = [];
  for (const p of originals) {
    copies.push({ id: nextId, code: p.code, x: p.x + 10, y: p.y + 10 });
    nextId += 1;
  }
  return {
    ...state,
    display: {
      placements: [...state.display.placements, ...copies],
      nextId,
      selection: copies.map((p) => p.id),
    },
  };
}

export function eraseSelection(state: UiState): UiState {
  const selected = new Set(state.display.selection);
  return {
    ...state,
    display: {
      ...state.display,
      placements: state.display.placements.filter((p) => !selected.has(p.id)),
      selection: [],
    },
  };
}

export function clearDisplay(state: UiState): UiState {
  return { ...state, display: { ...state.display, placements: [], selection: [] } };
}

export function selectedPlacements(state: UiState): Placement[] {
  const selected = new Set(state.display.selection);
  return state.display.placements.filter((p) => selected.has(p.id));
}

export function displayCodes(state: UiState): string[] {
  return state.display.placements.map((p) => p.code);
}
