//! Finite rings, their directed zero-divisor graphs, and exhaustive
//! verification of structural claims about sinks, sources, connectivity and
//! distances over every ring of small order.

pub mod builders;
pub mod enumerate;
pub mod graph;
pub mod group;
pub mod iso;
pub mod ring;
pub mod verify;

pub use builders::{
    cyclic_ring, decompose, direct_product, first_row_ring, full_matrix_ring, induced_subring,
    null_ring, quotient_ring, BuildError, Builder, LeftIdentityDecomposition,
};
pub use enumerate::{enumerate_rings, EnumError, EnumerationTask};
pub use graph::{build_graph, ZdGraph};
pub use group::{abelian_group_shapes, AdditiveGroupShape};
pub use iso::{find_isomorphism, is_isomorphic};
pub use ring::{validate_ring, ElementSet, ElementSets, FiniteRing, RingError, Side};
