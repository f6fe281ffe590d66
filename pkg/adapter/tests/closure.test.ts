// End-to-end closure against the Python toolkit: identity-stub generation
// must evaluate to perfect paraphrase scores, and stub classifier output
// must pass the toolkit's own schema validator.
import { spawnSync } from "node:child_process";
import fs from "node:fs";
import os from "node:os";
import path from "node:path";
import { fileURLToPath } from "node:url";
import { afterEach, beforeEach, describe, expect, it } from "vitest";

import { classifyCommand } from "../src/classify.js";
import { generateCommand } from "../src/generate.js";
import { readJsonl, writeJsonl } from "../src/jsonl.js";

const HERE = path.dirname(fileURLToPath(import.meta.url));
const PYTHON_SRC = path.resolve(HERE, "..", "..", "src");

function runToolkit(args: string[]) {
  return spawnSync("python3", ["-m", "emograd.cli", ...args], {
    encoding: "utf-8",
    env: { ...process.env, PYTHONPATH: PYTHON_SRC },
  });
}

let dir: string;

beforeEach(() => {
  dir = fs.mkdtempSync(path.join(os.tmpdir(), "adapter-closure-"));
});

afterEach(() => {
  fs.rmSync(dir, { recursive: true, force: true });
});

describe("adapter loop closure", () => {
  it("identity generation scores BLEU = ROUGE-L = 1.0 in the toolkit evaluator", async () => {
    const sentences = [
      "the meeting ran long and nobody minded much",
      "she walked home slowly under the warm evening sky",
      "the report was finished well before the deadline arrived",
      "he asked a careful question about the new plan",
    ];
    const tsv = path.join(dir, "prefixed.tsv");
    fs.writeFileSync(
      tsv,
      sentences
        .map((s, i) => `anger to annoyance: ${s}\ttarget text ${i}`)
        .join("\n") + "\n"
    );

    const predictions = path.join(dir, "predictions.jsonl");
    await generateCommand({
      input: tsv,
      output: predictions,
      model: "identity",
      batchSize: 8,
    });

    const predRows = readJsonl(predictions).map((r) => r.row) as Array<{
      id: string;
      prediction: string;
    }>;
    expect(predRows.map((r) => r.prediction)).toEqual(sentences);

    // references = the stripped inputs, so the echoed prediction is exact
    const evalFile = path.join(dir, "eval.jsonl");
    writeJsonl(
      evalFile,
      predRows.map((row, i) => ({
        id: row.id,
        prediction: row.prediction,
        reference: sentences[i],
        target_emotion: "annoyance",
      }))
    );

    const report = path.join(dir, "report.json");
    const result = runToolkit(["evaluate", "--pred", evalFile, "--out", report]);
    expect(result.status, result.stderr).toBe(0);
    const parsed = JSON.parse(fs.readFileSync(report, "utf-8"));
    expect(parsed.report.bleu).toBe(1.0);
    expect(parsed.report.rouge_l).toBe(1.0);
    expect(parsed.report.meteor).toBeGreaterThan(0.99);
  });

  it("stub classifier output passes the toolkit schema validator", async () => {
    const texts = path.join(dir, "texts.jsonl");
    writeJsonl(texts, [
      { id: "t1", text: "a first sentence to score" },
      { id: "t2", text: "a second one" },
    ]);
    const scores = path.join(dir, "scores.jsonl");
    await classifyCommand({ input: texts, output: scores, model: "stub", batchSize: 8 });

    const result = runToolkit(["validate", "--schema", "scores", "--in", scores]);
    expect(result.status, result.stderr).toBe(0);
  });

  it("prefix TSVs produced by the toolkit round-trip through generate", async () => {
    // build a labeled file, prefix it with the toolkit, then run generate
    const labeled = path.join(dir, "labeled.jsonl");
    writeJsonl(labeled, [
      {
        id: "1",
        input_text: "the loud argument spilled into the hallway",
        target_text: "the argument got a little loud",
        input_emotion: "anger",
        target_emotion: "annoyance",
      },
    ]);
    const tsv = path.join(dir, "train.tsv");
    const prefixResult = runToolkit(["prefix", "--in", labeled, "--style", "fine", "--out", tsv]);
    expect(prefixResult.status, prefixResult.stderr).toBe(0);

    const predictions = path.join(dir, "predictions.jsonl");
    await generateCommand({
      input: tsv,
      output: predictions,
      model: "identity",
      batchSize: 8,
    });
    const rows = readJsonl(predictions).map((r) => r.row) as any[];
    expect(rows).toEqual([
      { id: "1", prediction: "the loud argument spilled into the hallway" },
    ]);
  });
});
