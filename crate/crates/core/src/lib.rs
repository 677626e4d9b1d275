//! Zigzags, z-monodromies and connected-sum surgery on closed 2-dimensional
//! surface complexes.

mod complex;
mod error;
pub mod gadgets;
pub mod io;
pub mod knot;
pub mod monodromy;
pub mod perm;
pub mod surgery;
pub mod zigzag;

pub use complex::{DirectedEdge, EdgeId, FaceId, Rotation, SurfaceComplex, VertexId};
pub use error::{Error, Result, ValidationError};
pub use gadgets::{
    bipyramid, gadget_catalog, gamma, oriented_bipyramid, triangulate_eulerian, Gadget, GadgetSide,
    GadgetTau,
};
pub use io::{parse_complex, serialize_complex, to_dot};
pub use knot::{knot, select_gadget, select_pair, GadgetChoice, KnotStep, KnottingTrace, Summary};
pub use monodromy::{
    analyze_pair, find_special_pairs, is_essential, special_pair, special_pair_by_names,
    z_monodromy, zigzags_through_pair, PairAnalysis, Side, SpecialPair,
};
pub use perm::{check_class_table, classify, s4_table, ClassId, Perm4, S4Row, S4_TABLE_HEADER};
pub use surgery::{
    check_star, connected_sum, open_pair, opened_monodromy, predicted_merge_count, OpenedComplex,
    SpecialHomeomorphism, SumResult,
};
pub use zigzag::{
    edge_types, enumerate_zigzags, face_types, find_homogeneous_orientations, is_z_homogeneous,
    type_two_subgraph, zigzag_step, EdgeKind, EdgeTyping, FaceType, TypeTwoGraph, ZOrientation,
    ZOriented, Zigzag, ZigzagPair, ZigzagSet, ZigzagState, DEFAULT_ORIENTATION_LIMIT,
};
