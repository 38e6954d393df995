//! Sierpiński graphs `S_p^n`, their regularizations `⁺S_p^n` and `⁺⁺S_p^n`,
//! and Sierpiński triangle graphs `Ŝ_p^n`: generators, explicit induced
//! forests (equivalently feedback vertex sets), an exact feedback vertex set
//! solver, and verification suites tying the three together.

pub mod addressing;
pub mod error;
pub mod exact_fvs;
pub mod generators;
pub mod graph;
pub mod pairable;
pub mod triangle_forest;
pub mod verify;

pub use addressing::{Family, FamilyVertex, Pair, PlusPlusVertex, PlusVertex, Symbol, TriangleVertex, Word};
pub use error::{Error, Result};
pub use exact_fvs::{tau_bnb, tau_bruteforce, verify_certificate, BnbOptions, FvsCertificate};
pub use graph::LabeledGraph;
pub use verify::{report_render, verify, VerificationReport};
