//! A miniature digital-archive domain implemented over three architectures —
//! monolith, modular monolith and microservices — with instrumented module
//! boundaries, an event broker, a benchmark engine and a refactoring-effort
//! analyzer for domain-model DSLs.
//!
//! The same five back-end modules (Text, User, Virtual, Recommendation, Game)
//! are assembled under three interchangeable wirings that differ only in the
//! boundary mechanism: direct calls, in-process interface calls with DTO
//! copies, or HTTP/JSON over loopback plus a TCP message broker. Every
//! boundary crossing is measured.

pub mod archkit;
pub mod bench;
pub mod clock;
pub mod consistency;
pub mod domain;
pub mod effort;
pub mod error;
pub mod recommend;
pub mod services;
pub mod transport;

pub use error::ArchError;
