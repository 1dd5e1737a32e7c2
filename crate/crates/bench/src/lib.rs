//! Criterion benchmarks for gridforge live under `benches/`.
