//! Spectral bounds for connected regular graphs with bounded second
//! adjacency eigenvalue.
//!
//! The toolkit covers:
//!
//! - the orthogonal polynomial families `F_i` / `G_j` with exact rational
//!   arithmetic and Sturm-sequence root isolation ([`poly`]);
//! - eigenvalues of the small tridiagonal and quotient matrices behind the
//!   linear-programming bound, plus a Jacobi eigensolver for graph adjacency
//!   matrices ([`spectra`]);
//! - the Moore bound, the LP bound `M(k,θ)` and its inverse, cage-based
//!   algebraic-connectivity refinements, and related closed-form bounds
//!   ([`bounds`]);
//! - feasibility of Moore-polygon intersection arrays
//!   `{k,k-1,…,k-1; 1,…,1,c}` via exact integer eigenvalue tests
//!   ([`feasibility`]);
//! - concrete graphs: graph6 parsing/writing, named constructions,
//!   invariants, canonical labeling, and exhaustive small regular-graph
//!   enumeration ([`graphs`]);
//! - quotient-matrix eigenvalue interlacing certificates ([`interlace`]).

pub mod bounds;
pub mod feasibility;
pub mod graphs;
pub mod interlace;
pub mod poly;
pub mod spectra;

pub use bounds::{BoundReport, CageRecord};
pub use feasibility::{FeasibilityVerdict, IntersectionArray};
pub use graphs::{Graph, GraphCatalogEntry};
pub use interlace::Partition;
pub use poly::{ExactPolynomial, FBasisExpansion};
pub use spectra::{DenseMatrix, Spectrum};
