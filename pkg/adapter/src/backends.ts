import { EMOTIONS } from "./types.js";

export interface ClassifierBackend {
  scoreBatch(texts: string[]): Promise<Array<Record<string, number>>>;
}

export interface GeneratorBackend {
  generateBatch(inputs: string[], strippedInputs: string[]): Promise<string[]>;
}

/** FNV-1a over a string, as a fraction of 2^32; platform independent. */
export function hashFraction(value: string): number {
  let hash = 0x811c9dc5;
  for (let i = 0; i < value.length; i++) {
    hash ^= value.charCodeAt(i);
    hash = Math.imul(hash, 0x01000193) >>> 0;
  }
  return hash / 0x100000000;
}

/** Deterministic offline scorer: every emotion present, confidences in [0, 1]. */
export class StubClassifier implements ClassifierBackend {
  async scoreBatch(texts: string[]): Promise<Array<Record<string, number>>> {
    return texts.map((text) => {
      const scores: Record<string, number> = {};
      for (const emotion of EMOTIONS) {
        scores[emotion] = Number(hashFraction(`${text}::${emotion}`).toFixed(6));
      }
      return scores;
    });
  }
}

/** Echoes the input text with its transition prefix stripped. */
export class IdentityGenerator implements GeneratorBackend {
  async generateBatch(_inputs: string[], strippedInputs: string[]): Promise<string[]> {
    return strippedInputs;
  }
}

async function loadTransformers(): Promise<any> {
  try {
    return await import("@huggingface/transformers" as string);
  } catch (err) {
    throw new Error(
      "model backends need the optional '@huggingface/transformers' package; " +
        "install it or use the 'stub'/'identity' backends"
    );
  }
}

/** Text-classification model emitting per-label scores for all 28 emotions. */
export class HfClassifier implements ClassifierBackend {
  private pipe: any;

  constructor(private model: string, private batchSize: number) {}

  async init(): Promise<void> {
    const { pipeline } = await loadTransformers();
    this.pipe = await pipeline("text-classification", this.model, { top_k: null });
  }

  async scoreBatch(texts: string[]): Promise<Array<Record<string, number>>> {
    if (!this.pipe) await this.init();
    const out: Array<Record<string, number>> = [];
    for (let i = 0; i < texts.length; i += this.batchSize) {
      const batch = texts.slice(i, i + this.batchSize);
      const results = await this.pipe(batch);
      for (const labels of results) {
        const scores: Record<string, number> = {};
        for (const entry of labels) {
          scores[entry.label] = Math.min(1, Math.max(0, entry.score));
        }
        for (const emotion of EMOTIONS) {
          if (!(emotion in scores)) scores[emotion] = 0;
        }
        out.push(scores);
      }
    }
    return out;
  }
}

/** Seq2seq paraphraser driven by the full prefixed input. */
export class HfGenerator implements GeneratorBackend {
  private pipe: any;

  constructor(private model: string, private batchSize: number) {}

  async init(): Promise<void> {
    const { pipeline } = await loadTransformers();
    this.pipe = await pipeline("text2text-generation", this.model);
  }

  async generateBatch(inputs: string[], _strippedInputs: string[]): Promise<string[]> {
    if (!this.pipe) await this.init();
    const out: string[] = [];
    for (let i = 0; i < inputs.length; i += this.batchSize) {
      const batch = inputs.slice(i, i + this.batchSize);
      const results = await this.pipe(batch);
      for (const result of results) {
        out.push(Array.isArray(result) ? result[0].generated_text : result.generated_text);
      }
    }
    return out;
  }
}

export async function makeClassifier(model: string, batchSize: number): Promise<ClassifierBackend> {
  if (model === "stub") return new StubClassifier();
  const backend = new HfClassifier(model, batchSize);
  await backend.init(); // fail before any output is written
  return backend;
}

export async function makeGenerator(model: string, batchSize: number): Promise<GeneratorBackend> {
  if (model === "identity") return new IdentityGenerator();
  const backend = new HfGenerator(model, batchSize);
  await backend.init();
  return backend;
}
