import { makeClassifier } from "./backends.js";
import { readJsonl, writeJsonl } from "./jsonl.js";
import { assertScoresRecord, ScoresRecord, TextRecord } from "./types.js";

export interface ClassifyOptions {
  input: string;
  output: string;
  model: string;
  batchSize: number;
}

function asTextRecord(file: string, lineno: number, row: unknown): TextRecord {
  const record = row as Record<string, unknown>;
  if (typeof record.id !== "string" || !record.id) {
    throw new Error(`${file}:${lineno}: missing string field 'id'`);
  }
  if (typeof record.text !== "string") {
    throw new Error(`${file}:${lineno}: missing string field 'text'`);
  }
  return { id: record.id, text: record.text };
}

/** Score every input text with all 28 emotion confidences. */
export async function classifyCommand(options: ClassifyOptions): Promise<number> {
  const rows = readJsonl(options.input).map(({ lineno, row }) =>
    asTextRecord(options.input, lineno, row)
  );
  const backend = await makeClassifier(options.model, options.batchSize);
  const scores = await backend.scoreBatch(rows.map((r) => r.text));
  const records: ScoresRecord[] = rows.map((row, i) => ({
    id: row.id,
    text: row.text,
    scores: scores[i],
  }));
  records.forEach(assertScoresRecord); // validate before any output exists
  writeJsonl(
    options.output,
    records.map((r) => ({ id: r.id, text: r.text, scores: r.scores }))
  );
  return 0;
}
