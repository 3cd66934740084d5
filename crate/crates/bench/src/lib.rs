//! Benchmarks for the exact kernels; see `benches/`.
