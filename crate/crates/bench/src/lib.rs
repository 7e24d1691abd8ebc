//! Criterion benchmarks for `cm2-core`; see `benches/`.
