// The navigation Puppet: a stylized figure whose body regions are the
// top-level search entry points, plus buttons for the notation areas that
// have no anatomy (contacts, punctuation, movement). Region geometry is
// UI data; the red selection square is drawn from these boxes.

export interface PuppetRegion {
  area: string;
  // hit box inside the 100x140 puppet viewBox
  x: number;
  y: number;
  w: number;
  h: number;
  shape: "circle" | "rect";
}

export const PUPPET_REGIONS: PuppetRegion[] = [
  { area: "head", x: 35, y: 2, w: 30, h: 30, shape: "circle" },
  { area: "shoulders", x: 20, y: 36, w: 60, h: 18, shape: "rect" },
  { area: "arms", x: 4, y: 56, w: 92, h: 26, shape: "rect" },
  { area: "hands", x: 10, y: 86, w: 80, h: 30, shape: "rect" },
];

export const BUTTON_AREAS = ["contacts", "punctuation", "movement"];

export const AREA_GLYPHS: Record<string, string> = {
  contacts: "✳",
  punctuation: "⁋",
  movement: "➶",
};

const SVG_NS = "http://www.w3.org/2000/svg";

export function buildPuppet(onSelect: (area: string) => void): SVGSVGElement {
  const svg = document.createElementNS(SVG_NS, "svg");
  svg.setAttribute("viewBox", "0 0 100 140");
  svg.setAttribute("id", "puppet");
  svg.setAttribute("role", "navigation");
  const body = document.createElementNS(SVG_NS, "path");
  body.setAttribute(
    "d",
    "M50 4 a14 14 0 1 0 0.1 0 Z M30 38 h40 l6 16 -10 28 h-10 l4 -24 h-20 l4 24 h-10 l-10 -28 Z " +
      "M16 88 h20 v24 h-20 Z M64 88 h20 v24 h-20 Z",
  );
  body.setAttribute("class", "puppet-body");
  svg.appendChild(body);
  for (const region of PUPPET_REGIONS) {
    const hit =
      region.shape === "circle"
        ? document.createElementNS(SVG_NS, "ellipse")
        : document.createElementNS(SVG_NS, "rect");
    if (region.shape === "circle") {
      hit.setAttribute("cx", String(region.x + region.w / 2));
      hit.setAttribute("cy", String(region.y + region.h / 2));
      hit.setAttribute("rx", String(region.w / 2));
      hit.setAttribute("ry", String(region.h / 2));
    } else {
      hit.setAttribute("x", String(region.x));
      hit.setAttribute("y", String(region.y));
      hit.setAttribute("width", String(region.w));
      hit.setAttribute("height", String(region.h));
    }
    hit.setAttribute("class", "puppet-region");
    hit.dataset.area = region.area;
    hit.addEventListener("click", () => onSelect(region.area));
    svg.appendChild(hit);
  }
  return svg;
}

/** Draw (or move) the red square around the selected region. */
export function markSelectedArea(svg: SVGSVGElement, area: string | null): void {
  svg.querySelector(".red-square")?.remove();
  for (const hit of svg.querySelectorAll(".puppet-region")) {
    hit.classList.toggle("selected", (hit as SVGElement).dataset.area === area);
  }
  if (area === null) {
    return;
  }
  const region = PUPPET_REGIONS.find((r) => r.area === area);
  if (!region) {
    return;
  }
  const square = document.createElementNS(SVG_NS, "rect");
  square.setAttribute("class", "red-square");
  square.setAttribute("x", String(region.x - 3));
  square.setAttribute("y", String(region.y - 3));
  square.setAttribute("width", String(region.w + 6));
  square.setAttribute("height", String(region.h + 6));
  svg.appendChild(square);
}
