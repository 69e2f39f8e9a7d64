//! Benchmarks for the curve-counting library; see `benches/`.
