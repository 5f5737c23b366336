//! Partitions, majorization, realizability of degree sequences, the graphical
//! case, and counting distinct degree sequences.

pub mod counting;
pub mod merris_roby;
pub mod partition;
pub mod realizable;
pub mod reconstruct;

pub use counting::{count_degree_sequences, sorted_degree_sequences};
pub use merris_roby::{alpha_beta, merris_roby, ruch_gutman_graphical, GraphClass};
pub use partition::{
    complement_in_rectangle, conjugate, majorizes, partitions, partitions_bounded, strictly_majorizes, trace,
    weakly_majorizes, Partition,
};
pub use realizable::{count_realizations, find_realizations, is_degree_sequence, is_uniquely_realizable, shifted_majorant};
pub use reconstruct::reconstruct_shifted_from_subfacet_degrees;
