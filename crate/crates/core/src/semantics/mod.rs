//! Finite event model of verb meanings and the derivation of pluractional
//! meanings from it.

pub mod domain;
pub mod meaning;

pub use domain::{AtomId, Event, EventDomain, IndividualDomain, Model, VerbMeaning};
pub use meaning::{
    atomic, check_powerset_bound, derive_ep, derive_ip, sps, verb_relation, ArgumentTuple,
    PowersetBoundCheck, PowersetBoundOutcome, MAX_EP_ATOMS, REPETITION_THRESHOLD,
};
