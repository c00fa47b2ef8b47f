//! Core library for the `.serva` toolchain.
//!
//! The pipeline is built from five pieces:
//!
//! - [`hdc`] — binary hypervector algebra (seeded generation, XOR binding,
//!   rotation, majority bundling, Hamming distance),
//! - [`encoder`] — image/byte-stream encoders over that algebra and the
//!   `.serva` container format,
//! - [`codec`] — a lossless block compressor (BWT → MTF → RLE0 → adaptive
//!   range coding) for container payloads and corpus benchmarks,
//! - [`learner`] — k-NN classification computed directly on encoded data,
//!   variant ensembles and compute-payload accounting,
//! - [`baselines`] — reference neural networks (MLPs, CNN, RNN) trained with
//!   plain SGD at f64 for the comparison benchmarks,
//! - [`harness`] — dataset/corpus ingestion, energy measurement, benchmark
//!   orchestration and report emission.

pub mod baselines;
pub mod codec;
pub mod encoder;
pub mod harness;
pub mod hdc;
pub mod learner;
