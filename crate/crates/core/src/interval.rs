//! Membership intervals attached to vertices and edges.

use std::fmt;
use std::str::FromStr;

use crate::scalar::{ParseScalarError, Scalar};

/// The pair `[mu, nu]` carried by a vertex or an edge. `mu` is the lower
/// membership bound and `nu` the upper; a well-formed interval satisfies
/// `0 <= mu <= nu <= 1`.
///
/// The struct itself does not enforce well-formedness so that candidate
/// graphs (including deliberately broken ones) can be represented and then
/// checked by [`IvfGraph::validate`](crate::IvfGraph::validate).
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct MembershipInterval {
    pub mu: Scalar,
    pub nu: Scalar,
}

impl MembershipInterval {
    pub const ZERO: MembershipInterval = MembershipInterval {
        mu: Scalar::ZERO,
        nu: Scalar::ZERO,
    };

    pub const fn new(mu: Scalar, nu: Scalar) -> MembershipInterval {
        MembershipInterval { mu, nu }
    }

    /// `0 <= mu <= nu <= 1`.
    pub fn is_well_formed(&self) -> bool {
        self.mu <= self.nu && self.nu <= Scalar::ONE
    }

    /// Componentwise minimum; the bound an edge between two vertices with
    /// these intervals must stay under.
    pub fn componentwise_min(&self, other: &MembershipInterval) -> MembershipInterval {
        MembershipInterval {
            mu: self.mu.min(other.mu),
            nu: self.nu.min(other.nu),
        }
    }

    pub const fn is_zero(&self) -> bool {
        self.mu.is_zero() && self.nu.is_zero()
    }
}

impl fmt::Display for MembershipInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.mu, self.nu)
    }
}

impl fmt::Debug for MembershipInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MembershipInterval{self}")
    }
}

impl FromStr for MembershipInterval {
    type Err = ParseScalarError;

    /// Reads the `MU,NU` form used on command lines, e.g. `0.3,0.6`.
    fn from_str(s: &str) -> Result<MembershipInterval, ParseScalarError> {
        let (mu, nu) = s
            .split_once(',')
            .ok_or_else(|| ParseScalarError::InvalidLiteral(s.to_owned()))?;
        Ok(MembershipInterval {
            mu: mu.trim().parse()?,
            nu: nu.trim().parse()?,
        })
    }
}
