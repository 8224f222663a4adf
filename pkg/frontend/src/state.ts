import type { BoardViewState, Cell, RegionDocument } from './types';

export const STONE_LIMIT = 3;

export function initialState(boardSize = 19): BoardViewState {
  return {
    boardSize,
    stones: [],
    k: 0,
    doc: null,
    queryToken: 0,
    notice: null,
    hover: null,
  };
}

function onBoard(state: BoardViewState, cell: Cell): boolean {
  return (
    cell[0] >= 0 && cell[0] < state.boardSize &&
    cell[1] >= 0 && cell[1] < state.boardSize
  );
}

export function hasStone(state: BoardViewState, cell: Cell): boolean {
  return state.stones.some((s) => s[0] === cell[0] && s[1] === cell[1]);
}

export function placeStone(state: BoardViewState, cell: Cell): BoardViewState {
  if (!onBoard(state, cell)) {
    return { ...state, notice: 'that point is off the board' };
  }
  if (hasStone(state, cell)) {
    return { ...state, notice: 'a stone already sits there' };
  }
  if (state.stones.length >= STONE_LIMIT) {
    return {
      ...state,
      notice: `at most ${STONE_LIMIT} stones: the occupied-board question is open`,
    };
  }
  return { ...state, stones: [...state.stones, cell], notice: null };
}

export function removeStone(state: BoardViewState, cell: Cell): BoardViewState {
  if (!hasStone(state, cell)) {
    return state;
  }
  const stones = state.stones.filter(
    (s) => s[0] !== cell[0] || s[1] !== cell[1],
  );
  return { ...state, stones, notice: null };
}

export function setK(state: BoardViewState, k: number): BoardViewState {
  return { ...state, k: Math.max(0, Math.floor(k)), notice: null };
}

export function setHover(state: BoardViewState, cell: Cell | null): BoardViewState {
  return { ...state, hover: cell };
}

/** Stamp a new query; responses for older tokens are stale. */
export function issueQuery(state: BoardViewState): {
  state: BoardViewState;
  token: number;
} {
  const token = state.queryToken + 1;
  return { state: { ...state, queryToken: token }, token };
}

/** Install a fetched document unless a newer query superseded it. */
export function applyResponse(
  state: BoardViewState,
  token: number,
  doc: RegionDocument,
): BoardViewState {
  if (token !== state.queryToken) {
    return state;
  }
  return { ...state, doc };
}

/** The highlighted cells: exactly the endpoint's points, never recomputed. */
export function highlights(state: BoardViewState): number[][] {
  return state.doc ? state.doc.points : [];
}

export function highlightKeys(state: BoardViewState): Set<string> {
  return new Set(highlights(state).map(([x, y]) => `${x},${y}`));
}
