//! Benchmark inputs shared by the criterion targets.
