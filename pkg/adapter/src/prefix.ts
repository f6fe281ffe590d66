import { EMOTIONS } from "./types.js";

const RANGE_TOKENS = ["high_neg", "low_neg", "neutral", "low_pos", "high_pos"];

export interface ParsedPrefix {
  from: string;
  to: string;
  remainder: string;
}

/**
 * Split a prefixed model input ("<from> to <to>: <text>") into its parts.
 * Returns null for rows that do not carry a well-formed head; callers skip
 * those rows rather than aborting a batch.
 */
export function parsePrefixedInput(text: string): ParsedPrefix | null {
  const cut = text.indexOf(": ");
  if (cut < 0) return null;
  const head = text.slice(0, cut);
  const remainder = text.slice(cut + 2);
  const parts = head.split(" to ");
  if (parts.length !== 2) return null;
  const [from, to] = parts;
  const emotions = new Set<string>(EMOTIONS);
  const ranges = new Set(RANGE_TOKENS);
  const bothEmotions = emotions.has(from) && emotions.has(to);
  const bothRanges = ranges.has(from) && ranges.has(to);
  if (!bothEmotions && !bothRanges) return null;
  return { from, to, remainder };
}
