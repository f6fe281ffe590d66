#!/usr/bin/env node
import process from "node:process";
import yargs from "yargs";
import { hideBin } from "yargs/helpers";

import { classifyCommand } from "./classify.js";
import { generateCommand } from "./generate.js";

async function run(): Promise<number> {
  const argv = await yargs(hideBin(process.argv))
    .scriptName("emograd-adapter")
    .command(
      "classify",
      "score texts with a GoEmotions-style classifier into scores JSONL",
      (y) =>
        y
          .option("in", { type: "string", demandOption: true, describe: "texts JSONL {id, text}" })
          .option("out", { type: "string", demandOption: true })
          .option("model", { type: "string", default: "stub", describe: "'stub' or an HF model id" })
          .option("batch-size", { type: "number", default: 8 })
    )
    .command(
      "generate",
      "run a seq2seq paraphraser over a prefixed TSV into predictions JSONL",
      (y) =>
        y
          .option("in", { type: "string", demandOption: true, describe: "two-column prefixed TSV" })
          .option("out", { type: "string", demandOption: true })
          .option("model", { type: "string", default: "identity", describe: "'identity' or an HF model id" })
          .option("batch-size", { type: "number", default: 8 })
    )
    .demandCommand(1)
    .strict()
    .help()
    .parse();

  const command = argv._[0];
  const options = {
    input: argv.in as string,
    output: argv.out as string,
    model: argv.model as string,
    batchSize: argv["batch-size"] as number,
  };
  if (command === "classify") return classifyCommand(options);
  if (command === "generate") return generateCommand(options);
  throw new Error(`unknown command: ${command}`);
}

run()
  .then((code) => process.exit(code))
  .catch((err) => {
    console.error(`error: ${err.message}`);
    process.exit(1);
  });
