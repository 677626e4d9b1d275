//! Benchmarks for `zknot-core`; see `benches/`.
