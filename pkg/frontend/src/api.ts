// Typed fetch wrapper plus the request sequencing that keeps stale
// responses from overwriting newer state: every widget draws a ticket
// before it awaits, and drops the response if a newer ticket exists.

import type {
  AreasBody,
  GlyphBody,
  HintsBody,
  QueryBody,
  RecordBody,
  SaveBody,
} from "./types.js";

export class ApiFailure extends Error {
  constructor(readonly token: string, message: string) {
    super(message);
  }
}

type FetchLike = (input: string, init?: RequestInit) => Promise<Response>;

export class ApiClient {
  constructor(
    private readonly fetchImpl: FetchLike = (input, init) => fetch(input, init),
    private readonly base: string = "",
  ) {}

  private async getJson<T>(path: string): Promise<T> {
    const response = await this.fetchImpl(this.base + path);
    const body = await response.json();
    if (!response.ok) {
      throw new ApiFailure(body.error ?? "HttpError", body.message ?? `GET ${path} failed`);
    }
    return body as T;
  }

  areas(): Promise<AreasBody> {
    return this.getJson("/api/areas");
  }

  glyphs(area: string, family: string | null, assignment: Record<string, string>): Promise<QueryBody> {
    const params = new URLSearchParams({ area });
    if (family !== null) {
      params.set("family", family);
    }
    for (const [facet, value] of Object.entries(assignment)) {
      params.set(`f.${facet}`, value);
    }
    return this.getJson(`/api/glyphs?${params}`);
  }

  /** One glyph record, or null when the variant does not exist. */
  async glyph(code: string): Promise<GlyphBody | null> {
    const response = await this.fetchImpl(`${this.base}/api/glyphs/${code}`);
    const body = await response.json();
    if (response.status === 404) {
      return null;
    }
    if (!response.ok) {
      throw new ApiFailure(body.error ?? "HttpError", body.message ?? "glyph lookup failed");
    }
    return body as GlyphBody;
  }

  hints(display: string[], area: string, limit: number): Promise<HintsBody> {
    const params = new URLSearchParams({ area, limit: String(limit) });
    if (display.length > 0) {
      params.set("display", display.join(","));
    }
    return this.getJson(`/api/hints?${params}`);
  }

  async saveSign(body: SaveBody): Promise<RecordBody> {
    const response = await this.fetchImpl(`${this.base}/api/signs`, {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify(body),
    });
    const parsed = await response.json();
    if (!response.ok) {
      throw new ApiFailure(parsed.error ?? "HttpError", parsed.message ?? "save failed");
    }
    return parsed as RecordBody;
  }
}

/** Monotonic ticket dispenser; one per independently-updating widget. */
export class Sequencer {
  private seq = 0;

  next(): number {
    return ++this.seq;
  }

  isCurrent(ticket: number): boolean {
    return ticket === this.seq;
  }
}

/** Cache of glyph records (asset paths, sizes, variant existence). */
export class GlyphCache {
  private records = new Map<string, GlyphBody | null>();

  constructor(private readonly api: ApiClient) {}

  peek(code: string): GlyphBody | null | undefined {
    return this.records.get(code);
  }

  async ensure(code: string): Promise<GlyphBody | null> {
    const hit = this.records.get(code);
    if (hit !== undefined) {
      return hit;
    }
    const record = await this.api.glyph(code);
    this.records.set(code, record);
    return record;
  }

  async ensureAll(codes: string[]): Promise<void> {
    await Promise.all(codes.map((code) => this.ensure(code)));
  }
}
