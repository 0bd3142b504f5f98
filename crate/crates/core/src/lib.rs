//! Multigraded Betti numbers of edge ideals of vertex-weighted oriented graphs.
//!
//! The pipeline is:
//!
//! 1. [`graph`]: a [`WeightedOrientedGraph`] with structural predicates, graph
//!    families, induced subgraphs and weight reduction.
//! 2. [`ideal`]: its edge ideal, generated by `x_i * x_j^{w_j}` for every edge
//!    `i -> j`, plus colon ideals and the lcm lattice.
//! 3. [`homology`]: reduced homology of simplicial complexes over `GF(p)`.
//! 4. [`betti`]: the multigraded Betti table, read off the reduced homology of
//!    upper-Koszul complexes at every lcm-lattice multidegree.
//! 5. [`verify`]: an independent Taylor-complex oracle and numerical checks of
//!    the known recursions and closed formulas for these ideals.
//! 6. [`cli`] and [`explore`]: the graph file format, record output and
//!    exhaustive small-graph experiments used by the `wobetti` binary.
//!
//! ```
//! use wobetti::{betti, graph::WeightedOrientedGraph, homology::FieldSpec, ideal};
//!
//! let d = WeightedOrientedGraph::new(2, &[(1, 2)], &[(2, 3)]).unwrap();
//! let table = betti::multigraded_betti(&ideal::edge_ideal(&d), FieldSpec::default())
//!     .unwrap()
//!     .to_quotient();
//! let inv = table.invariants();
//! assert_eq!((inv.pdim, inv.reg), (1, 3));
//! ```

pub mod betti;
pub mod cli;
mod error;
pub mod explore;
pub mod graph;
pub mod homology;
pub mod ideal;
pub mod random;
pub mod verify;

pub use betti::{BettiTable, Ideal, Quotient};
pub use error::{Error, Result};
pub use graph::WeightedOrientedGraph;
pub use homology::FieldSpec;
pub use ideal::{Monomial, MonomialIdeal};
