import fs from "node:fs";
import path from "node:path";
import process from "node:process";

export function readJsonl(file: string): Array<{ lineno: number; row: unknown }> {
  const out: Array<{ lineno: number; row: unknown }> = [];
  const lines = fs.readFileSync(file, "utf-8").split("\n");
  lines.forEach((line, index) => {
    if (!line.trim()) return;
    let row: unknown;
    try {
      row = JSON.parse(line);
    } catch (err) {
      throw new Error(`${file}:${index + 1}: invalid JSON`);
    }
    if (typeof row !== "object" || row === null || Array.isArray(row)) {
      throw new Error(`${file}:${index + 1}: expected a JSON object`);
    }
    out.push({ lineno: index + 1, row });
  });
  return out;
}

function sortedStringify(row: Record<string, unknown>): string {
  const ordered: Record<string, unknown> = {};
  for (const key of Object.keys(row).sort()) ordered[key] = row[key];
  return JSON.stringify(ordered);
}

/** Write a full file atomically: temp file in the same directory, then rename. */
export function atomicWrite(file: string, content: string): void {
  const tmp = path.join(
    path.dirname(path.resolve(file)),
    `.tmp-${process.pid}-${path.basename(file)}`
  );
  try {
    fs.writeFileSync(tmp, content, "utf-8");
    fs.renameSync(tmp, file);
  } catch (err) {
    if (fs.existsSync(tmp)) fs.unlinkSync(tmp);
    throw err;
  }
}

export function writeJsonl(file: string, rows: Array<Record<string, unknown>>): void {
  atomicWrite(file, rows.map((row) => sortedStringify(row) + "\n").join(""));
}

export interface TsvRow {
  lineno: number;
  left: string;
  right: string;
}

export function readTsv(file: string): TsvRow[] {
  const rows: TsvRow[] = [];
  const lines = fs.readFileSync(file, "utf-8").split("\n");
  lines.forEach((line, index) => {
    if (!line) return;
    const cut = line.indexOf("\t");
    if (cut < 0) {
      throw new Error(`${file}:${index + 1}: expected two tab-separated columns`);
    }
    rows.push({ lineno: index + 1, left: line.slice(0, cut), right: line.slice(cut + 1) });
  });
  return rows;
}
