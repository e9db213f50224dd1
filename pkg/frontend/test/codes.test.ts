import { describe, expect, it } from "vitest";

import { baseOf, isCode, mirrorCode, parts, rotateCode } from "../src/codes.js";

describe("glyph code arithmetic", () => {
  it("parses parts", () => {
    expect(parts("S14c20")).toEqual({ base: 0x14c, fill: 2, rotation: 0 });
    expect(baseOf("S38b5f")).toBe(0x38b);
  });

  it("accepts either case, rejects junk", () => {
    expect(isCode("S14C20")).toBe(true);
    expect(isCode("T14c20")).toBe(false);
    expect(isCode("S14c2")).toBe(false);
    expect(isCode("S14c90")).toBe(false);
    expect(() => parts("nope")).toThrow();
  });

  it("rotates within the plain half", () => {
    expect(rotateCode("S10000", 1)).toBe("S10001");
    expect(rotateCode("S10007", 1)).toBe("S10000");
    expect(rotateCode("S10000", -1)).toBe("S10007");
  });

  it("rotates within the mirrored half", () => {
    expect(rotateCode("S10008", 1)).toBe("S10009");
    expect(rotateCode("S1000f", 1)).toBe("S10008");
    expect(rotateCode("S10008", -1)).toBe("S1000f");
  });

  it("eight steps is the identity", () => {
    for (const code of ["S10000", "S10035", "S1000c"]) {
      expect(rotateCode(code, 8)).toBe(code);
    }
  });

  it("mirror toggles the halves and is an involution", () => {
    expect(mirrorCode("S10000")).toBe("S10008");
    expect(mirrorCode("S10008")).toBe("S10000");
    expect(mirrorCode("S14c2d")).toBe("S14c25");
    expect(mirrorCode(mirrorCode("S14c23"))).toBe("S14c23");
  });
});
