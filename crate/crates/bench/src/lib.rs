//! Benchmark-only crate; see `benches/lrm.rs`.
