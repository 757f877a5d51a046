//! Benchmarks for the codegree and sweep computations; see `benches/`.
