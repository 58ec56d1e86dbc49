use thiserror::Error;

use crate::weights::TorusCharacter;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("weight {0} is not dominant (need x >= y >= z)")]
    NotDominant(TorusCharacter),

    #[error("not a character: {0}")]
    NotACharacter(String),

    #[error("degree p = {p} is outside [0, {max}] for r = {r}", max = 6 * u64::from(*r))]
    DegreeOutOfRange { r: u32, p: u32 },

    #[error("self-check failed: {0}")]
    SelfCheck(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
