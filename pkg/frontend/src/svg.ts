/** Tiny SVG string builders; figures are static vector files. */

export function esc(s: string): string {
  return s
    .replace(/&/g, "&amp;")
    .replace(/</g, "&lt;")
    .replace(/>/g, "&gt;")
    .replace(/"/g, "&quot;");
}

export function attrs(a: Record<string, string | number>): string {
  return Object.entries(a)
    .map(([k, v]) => ` ${k}="${esc(String(v))}"`)
    .join("");
}

export function tag(name: string, a: Record<string, string | number>, body = ""): string {
  return body ? `<${name}${attrs(a)}>${body}</${name}>` : `<${name}${attrs(a)}/>`;
}

export function text(x: number, y: number, s: string, extra: Record<string, string | number> = {}): string {
  return tag("text", { x: round2(x), y: round2(y), "font-size": 11, "font-family": "sans-serif", ...extra }, esc(s));
}

export function line(x1: number, y1: number, x2: number, y2: number, extra: Record<string, string | number> = {}): string {
  return tag("line", { x1: round2(x1), y1: round2(y1), x2: round2(x2), y2: round2(y2), stroke: "#444", ...extra });
}

export function round2(v: number): number {
  return Math.round(v * 100) / 100;
}

export function svgDocument(width: number, height: number, body: string): string {
  return (
    `<svg xmlns="http://www.w3.org/2000/svg" width="${width}" height="${height}" ` +
    `viewBox="0 0 ${width} ${height}">\n<rect width="${width}" height="${height}" fill="white"/>\n` +
    body +
    "\n</svg>\n"
  );
}
