// Hover-animation manifest: each icon explains itself with a short
// looping clip on pointer hover, so no tool needs a text label. The
// frames live in data so they can be swapped for video clips later
// without touching the widgets.

export interface HoverClip {
  frames: string[];
  intervalMs: number;
}

export const HOVER_CLIPS: Record<string, HoverClip> = {
  "rotate-cw": { frames: ["◴", "◷", "◶", "◵"], intervalMs: 180 },
  "rotate-ccw": { frames: ["◴", "◵", "◶", "◷"], intervalMs: 180 },
  mirror: { frames: ["◑", "◐"], intervalMs: 260 },
  duplicate: { frames: ["▢", "▢▢"], intervalMs: 300 },
  erase: { frames: ["▢▢", "▢", ""], intervalMs: 280 },
  save: { frames: ["⬓", "⬒", "✓"], intervalMs: 260 },
  clear: { frames: ["▦", "▨", "▱"], intervalMs: 260 },
  home: { frames: ["⌂", "⌂"], intervalMs: 400 },
};

/** Attach the looping preview to a button for the given clip id. */
export function attachHoverClip(button: HTMLElement, clipId: string): void {
  const clip = HOVER_CLIPS[clipId];
  if (!clip) {
    return;
  }
  let timer: ReturnType<typeof setInterval> | null = null;
  let frame = 0;
  button.addEventListener("mouseenter", () => {
    const preview = document.createElement("span");
    preview.className = "hover-clip";
    preview.textContent = clip.frames[0];
    button.appendChild(preview);
    frame = 0;
    timer = setInterval(() => {
      frame = (frame + 1) % clip.frames.length;
      preview.textContent = clip.frames[frame];
    }, clip.intervalMs);
  });
  button.addEventListener("mouseleave", () => {
    if (timer !== null) {
      clearInterval(timer);
      timer = null;
    }
    button.querySelector(".hover-clip")?.remove();
  });
}
