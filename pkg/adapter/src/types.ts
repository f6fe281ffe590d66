/** Wire types shared with the emograd toolkit's JSONL/TSV contracts. */

export const EMOTIONS = [
  "admiration", "amusement", "anger", "annoyance", "approval", "caring",
  "confusion", "curiosity", "desire", "disappointment", "disapproval",
  "disgust", "embarrassment", "excitement", "fear", "gratitude", "grief",
  "joy", "love", "nervousness", "optimism", "pride", "realization",
  "relief", "remorse", "sadness", "surprise", "neutral",
] as const;

export type Emotion = (typeof EMOTIONS)[number];

export interface TextRecord {
  id: string;
  text: string;
}

export interface ScoresRecord {
  id: string;
  text: string;
  scores: Record<string, number>;
}

export interface PredictionRecord {
  id: string;
  prediction: string;
}

/** Throws if a scores record violates the toolkit's scores schema. */
export function assertScoresRecord(record: ScoresRecord): void {
  if (!record.id) throw new Error("scores record missing id");
  if (typeof record.text !== "string") throw new Error(`${record.id}: missing text`);
  const emotions = new Set<string>(EMOTIONS);
  for (const [emotion, confidence] of Object.entries(record.scores)) {
    if (!emotions.has(emotion)) {
      throw new Error(`${record.id}: unknown emotion ${emotion}`);
    }
    if (!(confidence >= 0 && confidence <= 1)) {
      throw new Error(`${record.id}: confidence for ${emotion} out of [0, 1]`);
    }
  }
  for (const emotion of EMOTIONS) {
    if (!(emotion in record.scores)) {
      throw new Error(`${record.id}: emotion ${emotion} missing from scores`);
    }
  }
}
