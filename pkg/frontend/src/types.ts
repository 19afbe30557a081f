// Wire types of the clusterkit session service. All vertex ids are 1-based.

export interface SeedJson {
  n: number;
  frozen: number[];
  arrows: [number, number, number][]; // [src, dst, multiplicity]
  labels: string[];
  vars: string[];                     // polynomial texts, one per vertex
  layout?: [number, number][];        // optional builder coordinates
}

export interface FamilySpec {
  name: "rank2" | "unitriangular" | "gamma" | "dynkin";
  a?: number;
  n?: number;
  type?: string;
  ell?: number;
  i0?: number[];
  orientation?: string | [number, number][];
}

export interface SessionState {
  id: string;
  seed: SeedJson;
  history: number;
}

export interface MutateResponse extends SessionState {
  k: number;
  new_var: string;
}
