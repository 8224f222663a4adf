import type { Cell, RegionDocument } from './types';

export function locusQuery(stones: readonly Cell[], k: number, board: number): string {
  const stoneList = stones.map(([x, y]) => `${x},${y}`).join(';');
  return `stones=${stoneList}&k=${k}&board=${board}`;
}

export function locusUrl(
  base: string,
  stones: readonly Cell[],
  k: number,
  board: number,
): string {
  return `${base}/api/locus?${locusQuery(stones, k, board)}`;
}

export async function fetchLocus(
  base: string,
  stones: readonly Cell[],
  k: number,
  board: number,
): Promise<RegionDocument> {
  const response = await fetch(locusUrl(base, stones, k, board));
  if (!response.ok) {
    let detail = response.statusText;
    try {
      const body = await response.json();
      if (body && typeof body.detail === 'string') {
        detail = body.detail;
      }
    } catch {
      // keep the status text when the error body is not JSON
    }
    throw new Error(`locus request failed (${response.status}): ${detail}`);
  }
  return response.json() as Promise<RegionDocument>;
}
