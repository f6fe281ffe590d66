import { makeGenerator } from "./backends.js";
import { readTsv, writeJsonl } from "./jsonl.js";
import { parsePrefixedInput } from "./prefix.js";

export interface GenerateOptions {
  input: string;
  output: string;
  model: string;
  batchSize: number;
  log?: (message: string) => void;
}

/**
 * Run a paraphraser over a prefixed two-column TSV and emit predictions
 * JSONL ({id, prediction}), one per kept row, ids being 1-based row numbers.
 * Rows without a well-formed transition head are skipped and logged.
 */
export async function generateCommand(options: GenerateOptions): Promise<number> {
  const log = options.log ?? ((message: string) => console.error(message));
  const kept: Array<{ id: string; full: string; stripped: string }> = [];
  for (const row of readTsv(options.input)) {
    const parsed = parsePrefixedInput(row.left);
    if (parsed === null) {
      log(`skipping row ${row.lineno}: malformed transition prefix`);
      continue;
    }
    kept.push({ id: String(row.lineno), full: row.left, stripped: parsed.remainder });
  }
  const backend = await makeGenerator(options.model, options.batchSize);
  const predictions = await backend.generateBatch(
    kept.map((r) => r.full),
    kept.map((r) => r.stripped)
  );
  if (predictions.length !== kept.length) {
    throw new Error(
      `backend returned ${predictions.length} predictions for ${kept.length} rows`
    );
  }
  writeJsonl(
    options.output,
    kept.map((row, i) => ({ id: row.id, prediction: predictions[i] }))
  );
  return 0;
}
