//! Cocycle deformations of bosonizations B(M)#k^{D_m} and the presented
//! algebras they are compared against.

mod cocycle;
mod compare;
mod deformed;
mod lifting;
mod presented;

use thiserror::Error;

use crate::hopf::HopfError;
use crate::nichols::NicholsError;
use crate::yd::YdError;

pub use cocycle::{
    check_cocycle_identity, connecting_map, convolution_exp, extend_to_a, hochschild_cocycle_basis, infinitesimal_part, is_epsilon_cocycle,
    is_h_invariant, symmetric_form, ConnectingMap, InvarianceWitness,
};
pub use compare::{classify_menu, compare_on_generators, compare_presentation_vs_deformation, coradical_check, MenuEntry};
pub use deformed::{deform, twist, DeformedAlgebra};
pub use lifting::{Family, LiftingData};
pub use presented::{build_presented, Presentation, PresentedAlgebra};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DeformError {
    #[error("invalid lifting data: {0}")]
    InvalidLiftingData(String),
    #[error("not a cocycle: {0}")]
    NotACocycle(String),
    #[error("rewriting system is not confluent: {0}")]
    ConfluenceFailure(String),
    #[error("relations do not generate a Hopf ideal: {0}")]
    NotHopfIdeal(String),
    #[error("dimension {got}, expected {expected}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("relation violated: {0}")]
    MismatchWitness(String),
    #[error(transparent)]
    Yd(#[from] YdError),
    #[error(transparent)]
    Nichols(#[from] NicholsError),
    #[error(transparent)]
    Hopf(#[from] HopfError),
}
