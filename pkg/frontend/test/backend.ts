// In-memory stand-in for the editor service, faithful to the wire
// contract: order-free faceted queries with available-value sets,
// base-symbol co-occurrence hints, sign saving. Contract tests assert
// that the UI mirrors whatever this backend answers.

import type {
  AreasBody,
  GlyphBody,
  HintsBody,
  QueryBody,
  RecordBody,
} from "../src/types.js";

export interface FixtureGlyph {
  code: string;
  area: string;
  category: string;
  family: string;
  facets: Record<string, string>;
  w?: number;
  h?: number;
}

export interface FixtureFacet {
  name: string;
  values: string[];
}

export interface FixtureFamily {
  area: string;
  category: string;
  id: string;
  facets: FixtureFacet[];
}

function baseOf(code: string): number {
  return parseInt(code.slice(1, 4), 16);
}

export class FakeBackend {
  readonly savedBodies: unknown[] = [];
  readonly requests: string[] = [];
  private signs: string[][] = [];
  private nextId = 1;
  private gates = new Map<(url: string) => boolean, Promise<void>>();

  constructor(
    private readonly areas: string[],
    private readonly families: FixtureFamily[],
    private readonly glyphs: FixtureGlyph[],
  ) {}

  /** Delay every response whose URL satisfies `match` until released. */
  gate(match: string | ((url: string) => boolean)): () => void {
    const predicate = typeof match === "string" ? (url: string) => url.includes(match) : match;
    let release!: () => void;
    this.gates.set(predicate, new Promise((resolve) => (release = resolve)));
    return () => {
      this.gates.delete(predicate);
      release();
    };
  }

  seedSign(codes: string[]): void {
    this.signs.push(codes);
  }

  fetch = async (input: string, init?: RequestInit): Promise<Response> => {
    this.requests.push(input);
    for (const [predicate, gate] of this.gates) {
      if (predicate(input)) {
        await gate;
      }
    }
    const url = new URL(input, "http://test");
    const path = url.pathname;
    if (path === "/api/areas") {
      return json(this.areasBody());
    }
    if (path === "/api/glyphs") {
      return this.queryResponse(url);
    }
    if (path.startsWith("/api/glyphs/")) {
      const record = this.glyphRecord(path.slice("/api/glyphs/".length));
      return record
        ? json(record)
        : json({ error: "VariantUnavailable", message: "absent" }, 404);
    }
    if (path === "/api/hints") {
      return json(this.hintsBody(url));
    }
    if (path === "/api/signs" && init?.method === "POST") {
      return this.saveResponse(init);
    }
    return json({ error: "NotFound", message: path }, 404);
  };

  areasBody(): AreasBody {
    return {
      areas: this.areas.map((area) => ({
        area,
        categories: [...new Set(
          this.families.filter((f) => f.area === area).map((f) => f.category),
        )].map((category) => ({
          id: category,
          name: category,
          families: this.families
            .filter((f) => f.area === area && f.category === category)
            .map((f) => ({
              id: f.id,
              name: f.id,
              facets: f.facets.map((facet) => ({
                name: facet.name,
                icon: facet.name,
                values: [...facet.values],
              })),
              subfamilies: [],
            })),
        })),
      })),
    };
  }

  queryBody(area: string, family: string | null, assignment: Record<string, string>): QueryBody {
    const matches = (g: FixtureGlyph, extra: Record<string, string>) =>
      g.area === area &&
      (family === null || g.family === family) &&
      Object.entries(extra).every(([name, value]) => g.facets[name] === value);
    const codes = this.glyphs.filter((g) => matches(g, assignment)).map((g) => g.code).sort();
    const available: Record<string, string[]> = {};
    if (family !== null) {
      const schema = this.families.find((f) => f.area === area && f.id === family);
      for (const facet of schema?.facets ?? []) {
        const rest = Object.fromEntries(
          Object.entries(assignment).filter(([name]) => name !== facet.name),
        );
        available[facet.name] = facet.values.filter((value) =>
          this.glyphs.some((g) => matches(g, { ...rest, [facet.name]: value })),
        );
      }
    }
    return { codes, count: codes.length, available };
  }

  private queryResponse(url: URL): Response {
    const area = url.searchParams.get("area")!;
    const family = url.searchParams.get("family");
    const assignment: Record<string, string> = {};
    for (const [key, value] of url.searchParams) {
      if (key.startsWith("f.")) {
        assignment[key.slice(2)] = value;
      }
    }
    return json(this.queryBody(area, family, assignment));
  }

  glyphRecord(code: string): GlyphBody | null {
    const glyph = this.glyphs.find((g) => g.code === code);
    if (!glyph) {
      return null;
    }
    return {
      code: glyph.code,
      category: glyph.category,
      family: glyph.family,
      subfamily: "any",
      area: glyph.area,
      facets: { ...glyph.facets },
      asset: `${glyph.code}.png`,
      w: glyph.w ?? 24,
      h: glyph.h ?? 24,
    };
  }

  pairCount(a: number, b: number): number {
    if (a === b) {
      return 0;
    }
    return this.signs.filter((sign) => {
      const bases = new Set(sign.map(baseOf));
      return bases.has(a) && bases.has(b);
    }).length;
  }

  hintsBody(url: URL): HintsBody {
    const area = url.searchParams.get("area")!;
    const limit = Number(url.searchParams.get("limit") ?? "24");
    const display = (url.searchParams.get("display") ?? "").split(",").filter(Boolean);
    const displayBases = new Set(display.map(baseOf));
    const entries: [string, number][] = [];
    for (const glyph of this.glyphs) {
      if (glyph.area !== area || displayBases.has(baseOf(glyph.code))) {
        continue;
      }
      let score = 0;
      for (const base of displayBases) {
        score += this.pairCount(baseOf(glyph.code), base);
      }
      if (score > 0) {
        entries.push([glyph.code, score]);
      }
    }
    entries.sort((p, q) => (q[1] - p[1]) || (p[0] < q[0] ? -1 : 1));
    return { entries: entries.slice(0, limit), count: entries.length };
  }

  private saveResponse(init: RequestInit): Response {
    const body = JSON.parse(String(init.body));
    this.savedBodies.push(body);
    const glyphs = body.glyphs as [string, number, number][];
    this.signs.push(glyphs.map(([code]) => code));
    const record: RecordBody = {
      id: this.nextId++,
      created_at: 1_700_000_000,
      gloss: body.gloss ?? null,
      canvas: body.canvas ?? [500, 500],
      glyphs,
    };
    return json(record);
  }
}

function json(body: unknown, status = 200): Response {
  return new Response(JSON.stringify(body), {
    status,
    headers: { "content-type": "application/json" },
  });
}

/** Two areas; hands family "index" has full rotations for bases 0x100 and
 * 0x101 at fill 0, a lone variant at base 0x102 (rotations break there),
 * and no view=back for fingers=2 (so that value must grey out). */
export function fixtureBackend(): FakeBackend {
  const glyphs: FixtureGlyph[] = [];
  const views = ["palm", "side", "back"];
  for (const [baseIndex, fingers] of [["100", "1"], ["101", "2"]] as const) {
    for (let rotation = 0; rotation < 16; rotation++) {
      const view = views[rotation % 3];
      if (fingers === "2" && view === "back") {
        continue;
      }
      glyphs.push({
        code: `S${baseIndex}0${rotation.toString(16)}`,
        area: "hands",
        category: "hand_config",
        family: "index",
        facets: { fingers, view },
      });
    }
  }
  glyphs.push({
    code: "S10200",
    area: "hands",
    category: "hand_config",
    family: "index",
    facets: { fingers: "2", view: "palm" },
  });
  for (const code of ["S20000", "S20010", "S20100"]) {
    glyphs.push({
      code,
      area: "head",
      category: "head_face",
      family: "brow",
      facets: { arch: code === "S20100" ? "furrowed" : "raised" },
    });
  }
  return new FakeBackend(
    ["head", "hands"],
    [
      {
        area: "hands", category: "hand_config", id: "index",
        facets: [
          { name: "fingers", values: ["1", "2"] },
          { name: "view", values: ["palm", "side", "back"] },
        ],
      },
      {
        area: "head", category: "head_face", id: "brow",
        facets: [{ name: "arch", values: ["raised", "furrowed"] }],
      },
    ],
    glyphs,
  );
}
