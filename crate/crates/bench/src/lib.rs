//! Criterion benchmarks for the `evenfarey` crate live in `benches/`.
