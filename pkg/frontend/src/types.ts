/** Response schema of the calculator service (additive-only within v1). */

export interface ApiInterval {
  lower: number;
  upper: number;
  level: number;
  sidedness: "two_sided" | "upper_only" | "lower_only";
}

export interface ApiResponse {
  api_version: string;
  kind: "sample_size" | "precision" | "interval";
  estimand: string;
  method: string;
  params: Record<string, unknown>;
  sample_size: number | null;
  events: number | null;
  precision: number | null;
  interval: ApiInterval | null;
  hazard_interval: ApiInterval | null;
  valid: boolean;
  warnings: string[];
}

export interface ApiErrorBody {
  errors: { field: string; code: string; message: string }[];
}
