// Wire types for the editor API. Shapes match the service responses
// exactly; the UI never filters or re-ranks what the server sends.

export interface FacetInfo {
  name: string;
  icon: string;
  values: string[];
}

export interface FamilyInfo {
  id: string;
  name: string;
  facets: FacetInfo[];
  subfamilies: { id: string; name: string }[];
}

export interface CategoryInfo {
  id: string;
  name: string;
  families: FamilyInfo[];
}

export interface AreaInfo {
  area: string;
  categories: CategoryInfo[];
}

export interface AreasBody {
  areas: AreaInfo[];
}

export interface QueryBody {
  codes: string[];
  count: number;
  available: Record<string, string[]>;
}

export interface GlyphBody {
  code: string;
  category: string;
  family: string;
  subfamily: string;
  area: string;
  facets: Record<string, string>;
  asset: string;
  w: number;
  h: number;
}

export interface HintsBody {
  entries: [string, number][];
  count: number;
}

export interface RecordBody {
  id: number;
  created_at: number;
  gloss: string | null;
  canvas: [number, number];
  glyphs: [string, number, number][];
}

export interface SaveBody {
  gloss?: string;
  canvas?: [number, number];
  glyphs: [string, number, number][];
}

export interface ApiError {
  error: string;
  message: string;
}
