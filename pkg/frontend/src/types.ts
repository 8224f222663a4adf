export interface RegionDocument {
  model: string;
  kind: string;
  diameter: number;
  size: number;
  exactness: string;
  shape?: Record<string, number | string>;
  points: number[][];
}

export type Cell = readonly [number, number];

export interface BoardViewState {
  boardSize: number;
  stones: Cell[];
  k: number;
  doc: RegionDocument | null;
  queryToken: number;
  notice: string | null;
  hover: Cell | null;
}
