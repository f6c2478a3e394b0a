//! Criterion benchmarks for the solvers and the Tihany search; see `benches/`.
