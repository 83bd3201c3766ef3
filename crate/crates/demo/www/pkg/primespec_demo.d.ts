/* tslint:disable */
/* eslint-disable */

/**
 * Closure of `set` in `topology` (`zariski`, `flat` or `patch`), with a
 * readable rendering alongside the JSON form.
 */
export function closure(ring: string, set: string, topology: string): string;

/**
 * Image of the spectrum of the product of quotients (`quotient`) or
 * localizations (`local`) at the points of `set`, with its closure.
 */
export function image(ring: string, set: string, kind: string): string;

/**
 * Structure report for `K[x_1..x_n]/(x_i x_k)` localized at the variables.
 */
export function supplement(n: number, field: string): string;

export type InitInput = RequestInfo | URL | Response | BufferSource | WebAssembly.Module;

export interface InitOutput {
    readonly memory: WebAssembly.Memory;
    readonly closure: (a: number, b: number, c: number, d: number, e: number, f: number) => [number, number];
    readonly image: (a: number, b: number, c: number, d: number, e: number, f: number) => [number, number];
    readonly supplement: (a: number, b: number, c: number) => [number, number];
    readonly __wbindgen_exn_store: (a: number) => void;
    readonly __externref_table_alloc: () => number;
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
