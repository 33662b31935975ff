//! Criterion benchmarks for `z2steenrod`; see `benches/algebra.rs`.
