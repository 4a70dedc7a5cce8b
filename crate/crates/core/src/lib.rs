//! Modular products of graphs: closed-form distances, strong resolving
//! graphs and exact strong metric dimension.
//!
//! Vertices are `usize` indices; product vertex `(g, h)` of any product is
//! `g * n(H) + h` (see [`products::PairCode`]).

pub mod audit;
pub mod corpus;
pub mod dims;
pub mod error;
pub mod families;
pub mod graph;
pub mod metric;
pub mod products;
pub mod srg;
pub mod structure;
pub mod vc;
pub mod verify;

pub use error::{Error, Result};
pub use graph::{Dist, DistMatrix, Graph, Vertex};
pub use products::{build_product, PairCode, ProductKind};
