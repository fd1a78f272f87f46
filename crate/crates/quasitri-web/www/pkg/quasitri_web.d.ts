/* tslint:disable */
/* eslint-disable */

/**
 * Solutions for `polygon` with `k` and `l` in `lo..=hi`, each with its
 * vectors and the lens parameters of every non-adjacent sector.
 */
export function characteristic_pairs(polygon: string, lo: number, hi: number, complete_only: boolean): string;

/**
 * Glues two catalog tori, e.g. `"T4,0"` and `"T9,0"`.
 */
export function glue(a: string, b: string): string;

/**
 * Census keys in table order.
 */
export function keys(): string;

/**
 * Builds one census entry and checks it: vertex count, homology, links
 * and sector lens spaces.
 */
export function verify_census(key: string, seed: number): string;

export type InitInput = RequestInfo | URL | Response | BufferSource | WebAssembly.Module;

export interface InitOutput {
    readonly memory: WebAssembly.Memory;
    readonly characteristic_pairs: (a: number, b: number, c: number, d: number, e: number) => [number, number];
    readonly glue: (a: number, b: number, c: number, d: number) => [number, number];
    readonly keys: () => [number, number];
    readonly verify_census: (a: number, b: number, c: number) => [number, number];
    readonly __wbindgen_externrefs: WebAssembly.Table;
    readonly __wbindgen_malloc: (a: number, b: number) => number;
    readonly __wbindgen_realloc: (a: number, b: number, c: number, d: number) => number;
    readonly __wbindgen_free: (a: number, b: number, c: number) => void;
    readonly __wbindgen_start: () => void;
}

export type SyncInitInput = BufferSource | WebAssembly.Module;

/**
 * Instantiates the given `module`, which can either be bytes or
 * a precompiled `WebAssembly.Module`.
 *
 * @param {{ module: SyncInitInput }} module - Passing `SyncInitInput` directly is deprecated.
 *
 * @returns {InitOutput}
 */
export function initSync(module: { module: SyncInitInput } | SyncInitInput): InitOutput;

/**
 * If `module_or_path` is {RequestInfo} or {URL}, makes a request and
 * for everything else, calls `WebAssembly.instantiate` directly.
 *
 * @param {{ module_or_path: InitInput | Promise<InitInput> }} module_or_path - Passing `InitInput` directly is deprecated.
 *
 * @returns {Promise<InitOutput>}
 */
export default function __wbg_init (module_or_path?: { module_or_path: InitInput | Promise<InitInput> } | InitInput | Promise<InitInput>): Promise<InitOutput>;
