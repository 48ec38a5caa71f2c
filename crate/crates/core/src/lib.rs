//! Maximum-weight 2-edge-connected subgraph toolkit.
//!
//! The crate has two halves that check each other. The solver half is a
//! branch-and-cut engine over an LP relaxation whose rows (asymmetric cut,
//! connectivity cut, coparallel class and odd star inequalities) describe
//! exactly the incidence vectors of 2-edge-connected subgraphs. The oracle
//! half enumerates those incidence vectors directly on small graphs with
//! exact arithmetic and verifies the dimension formula, the lattice-point
//! description and every facet characterization the rows are based on.
//!
//! Modules:
//! - [`graph`]: simple graphs, bridges, cuts, exact min s-t cut;
//! - [`copar`]: coparallel classes and the polytope dimension;
//! - [`ineq`]: the inequality families and their separation routines;
//! - [`oracle`]: brute-force enumeration and theorem checking;
//! - [`simplex`]: a bounded-variable primal simplex;
//! - [`solver`]: the branch-and-cut search;
//! - [`instance`]: instance generators and the on-disk format;
//! - [`corpus`]: named graphs for the verification suites.

pub mod copar;
pub mod corpus;
pub mod graph;
pub mod ineq;
pub mod instance;
pub mod oracle;
pub mod rng;
pub mod simplex;
pub mod solver;
