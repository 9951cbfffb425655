//! Semiring-polymorphic recurrences.
//!
//! Every function takes a semiring and a weight closure over edge labels.
//! Public indices are 1-based; tables are stored 0-based internally, with
//! row 0 holding the base case. Constrained variants run the lifted
//! recurrence with the appropriate simplified edge product and project with
//! an [`Acceptance`](crate::lifting::Acceptance) predicate.

mod alignment;
mod dag;
mod segmentation;
mod sequences;

pub use alignment::{
    delannoy, nw_align, nw_align_max_constrained, nw_align_sum_constrained, AlignStep,
};
pub use dag::{dag_bellman, Dag, Edge};
pub use segmentation::{segment_fixed_count, segment_min_length, segment_opt, Segment};
pub use sequences::{
    combinations, event_sequences, events_m_of_n, lifted_subsequences, lis, nonempty_subsequences,
    ordered_subsequences, subsequences, EventOutcome,
};
