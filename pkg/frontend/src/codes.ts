// Client-side glyph code arithmetic. A code is six lowercase characters:
// "S" + base (3 hex digits) + fill (one digit) + rotation (one hex digit).
// Rotations 0-7 are plain 45-degree orientations, 8-15 the mirrored ones;
// rotating stays inside the current mirror half.

const CODE_RE = /^s[0-9a-f]{3}[0-5][0-9a-f]$/;

export function isCode(text: string): boolean {
  return CODE_RE.test(text.toLowerCase());
}

export function parts(code: string): { base: number; fill: number; rotation: number } {
  const lower = code.toLowerCase();
  if (!CODE_RE.test(lower)) {
    throw new Error(`not a glyph code: ${code}`);
  }
  return {
    base: parseInt(lower.slice(1, 4), 16),
    fill: parseInt(lower[4], 10),
    rotation: parseInt(lower[5], 16),
  };
}

export function build(base: number, fill: number, rotation: number): string {
  return `S${base.toString(16).padStart(3, "0")}${fill}${rotation.toString(16)}`;
}

export function rotateCode(code: string, steps: number): string {
  const { base, fill, rotation } = parts(code);
  const next =
    rotation < 8
      ? (((rotation + steps) % 8) + 8) % 8
      : 8 + ((((rotation - 8 + steps) % 8) + 8) % 8);
  return build(base, fill, next);
}

export function mirrorCode(code: string): string {
  const { base, fill, rotation } = parts(code);
  return build(base, fill, rotation ^ 8);
}

export function baseOf(code: string): number {
  return parts(code).base;
}
