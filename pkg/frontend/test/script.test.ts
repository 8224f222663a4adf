import { readFileSync } from 'node:fs';
import { fileURLToPath } from 'node:url';
import { describe, expect, it } from 'vitest';
import { locusQuery } from '../src/locusClient';
import {
  applyResponse,
  highlights,
  initialState,
  issueQuery,
  placeStone,
  removeStone,
  setK,
} from '../src/state';
import type { BoardViewState, Cell, RegionDocument } from '../src/types';

interface ManifestStep {
  label: string;
  query: string;
  file: string;
}

interface Manifest {
  script: ManifestStep[];
  monotone: ManifestStep[];
}

function fixtureBytes(name: string): string {
  const url = new URL(`./fixtures/${name}`, import.meta.url);
  return readFileSync(fileURLToPath(url), 'utf8');
}

const manifest = JSON.parse(fixtureBytes('manifest.json')) as Manifest;

type Action =
  | { kind: 'place'; cell: Cell }
  | { kind: 'remove'; cell: Cell }
  | { kind: 'setK'; k: number };

/* One reducer action per manifest step, in the same order. */
const scriptActions: Action[] = [
  { kind: 'place', cell: [9, 9] },
  { kind: 'setK', k: 2 },
  { kind: 'place', cell: [11, 9] },
  { kind: 'setK', k: 0 },
  { kind: 'place', cell: [10, 11] },
  { kind: 'setK', k: 3 },
  { kind: 'remove', cell: [11, 9] },
  { kind: 'remove', cell: [10, 11] },
  { kind: 'remove', cell: [9, 9] },
  { kind: 'setK', k: 5 },
];

const scriptSizes = [5, 13, 23, 3, 0, 29, 30, 18, 12, 21];
const monotoneSizes = [3, 11, 23, 39, 59, 83];

function act(state: BoardViewState, action: Action): BoardViewState {
  switch (action.kind) {
    case 'place':
      return placeStone(state, action.cell);
    case 'remove':
      return removeStone(state, action.cell);
    case 'setK':
      return setK(state, action.k);
  }
}

describe('scripted session against recorded service responses', () => {
  it('replays every interaction and shades exactly the served points', () => {
    expect(manifest.script).toHaveLength(scriptActions.length);
    let state = initialState();

    manifest.script.forEach((step, i) => {
      state = act(state, scriptActions[i]);
      expect(state.notice, step.label).toBeNull();

      const query = locusQuery(state.stones, state.k, state.boardSize);
      expect(query, step.label).toBe(step.query);

      const bytes = fixtureBytes(step.file);
      const doc = JSON.parse(bytes) as RegionDocument;
      const issued = issueQuery(state);
      state = applyResponse(issued.state, issued.token, doc);

      const shaded = highlights(state);
      expect(shaded, step.label).toBe(doc.points);
      expect(JSON.stringify(shaded), step.label)
        .toBe(JSON.stringify((JSON.parse(bytes) as RegionDocument).points));
      expect(shaded, step.label).toHaveLength(scriptSizes[i]);
      for (const [x, y] of shaded) {
        expect(x).toBeGreaterThanOrEqual(0);
        expect(x).toBeLessThan(state.boardSize);
        expect(y).toBeGreaterThanOrEqual(0);
        expect(y).toBeLessThan(state.boardSize);
      }
    });
  });

  it('switches between tristance and quadristance documents as stones change', () => {
    const kinds = manifest.script.map((step) => {
      const doc = JSON.parse(fixtureBytes(step.file)) as RegionDocument;
      return doc.kind;
    });
    expect(kinds).toEqual([
      'tristance', 'tristance', 'tristance', 'tristance',
      'quadristance', 'quadristance',
      'tristance', 'tristance', 'tristance', 'tristance',
    ]);
  });
});

describe('liberty allowance growth', () => {
  it('never sheds a reachable cell as k increases', () => {
    const series = manifest.monotone.map((step) => {
      const doc = JSON.parse(fixtureBytes(step.file)) as RegionDocument;
      return {
        label: step.label,
        size: doc.size,
        keys: new Set(doc.points.map(([x, y]) => `${x},${y}`)),
      };
    });

    expect(series.map((s) => s.size)).toEqual(monotoneSizes);
    for (let i = 1; i < series.length; i++) {
      expect(series[i].size).toBeGreaterThan(series[i - 1].size);
      for (const key of series[i - 1].keys) {
        expect(series[i].keys.has(key), `${series[i].label} keeps ${key}`)
          .toBe(true);
      }
    }
  });

  it('keeps the stones inside every locus', () => {
    for (const step of manifest.monotone) {
      const doc = JSON.parse(fixtureBytes(step.file)) as RegionDocument;
      const keys = new Set(doc.points.map(([x, y]) => `${x},${y}`));
      expect(keys.has('9,9'), step.label).toBe(true);
      expect(keys.has('11,9'), step.label).toBe(true);
    }
  });
});
