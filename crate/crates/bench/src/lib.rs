//! Benchmark-only crate; the benchmarks live in `benches/analysis.rs`.
