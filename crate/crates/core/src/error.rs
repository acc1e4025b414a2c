use thiserror::Error;

use crate::dsl::ParseError;
use crate::groups::GroupError;
use crate::kdef::KdefError;
use crate::monoid::MonoidError;
use crate::rep_monoid::RepMonoidError;
use crate::variety::VarietyError;

/// Any error raised by the library.
#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Monoid(#[from] MonoidError),
    #[error(transparent)]
    RepMonoid(#[from] RepMonoidError),
    #[error(transparent)]
    Kdef(#[from] KdefError),
    #[error(transparent)]
    Variety(#[from] VarietyError),
}
