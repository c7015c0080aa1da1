//! Zig-zag strands of a dimer model.
//!
//! The strands of the Postnikov diagram dual to a dimer model are recovered
//! as zig-zag paths: a strand crossing arrow `a` into face `f` next crosses
//! the arrow following `a` in `f`, and then passes into the other face of that
//! arrow. This crate extracts the strands, checks the global crossing axioms,
//! and computes source and target labels of tiles by cutting the disc along
//! strands.

pub mod consistency;
pub mod labels;
pub mod regions;
pub mod strand;

pub use consistency::{check_postnikov, ConsistencyReport, ParallelWitness};
pub use labels::{label_table, necklace_tile, necklaces, source_labels, target_labels, LabelTable};
pub use regions::{left_tiles, sides_of_passage, Region, RegionGraph};
pub use strand::{
    strand_from, strand_permutation, strands, strands_by_end, Crossing, Strand, StrandError,
};
