//! Stable Hom dimensions and simple-minded systems over
//! representation-finite self-injective algebras.

pub mod catalog;
pub mod dynkin;
pub mod engine;
pub mod error;
pub mod export;
pub mod mesh;
pub mod nakayama;
pub mod parse;
pub mod stable;

pub use dynkin::{tau, validate_type, DynkinDiagram, Family, RfsType, Vertex};
pub use error::{Error, Result};
pub use stable::{CheckReport, ObjectSet, StableCategory, Witness};
pub use nakayama::{NakayamaAlgebra, NakayamaModule};
pub use engine::{enumerate_sms, extend_to_sms, verify_characterization, SearchConfig, Strategy};
