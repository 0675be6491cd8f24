//! Criterion benchmarks for the reduction pipeline; see `benches/`.
