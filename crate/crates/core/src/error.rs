use thiserror::Error;

/// Error type shared by all modules of the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("matrix generator is not invertible over the integers")]
    NonInvertibleGenerator,

    #[error("group closure exceeded the size ceiling of {0} elements")]
    ClosureLimit(usize),

    #[error("invalid permutation generator: {0}")]
    BadPermutation(String),

    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("the matrices do not define a group action: {0}")]
    NotAnAction(String),

    #[error("subgroup element set is not closed under multiplication")]
    SubgroupNotClosed,

    #[error("cocycle violation: element {element} reached with inconsistent translations")]
    CocycleViolation { element: usize },

    #[error("lattice is not the maximal abelian subgroup: element with identity holonomy has fractional translation")]
    NotMaximalAbelian,

    #[error("sublattice is not pure (quotient has torsion)")]
    NotPure,

    #[error("sublattice is not invariant under the group action")]
    NotInvariant,

    #[error("datum is not special: restriction to a prime-order subgroup vanishes")]
    NotSpecial,

    #[error("lattice is not essentially complex")]
    NotEssentiallyComplex,

    #[error("Schur index could not be certified for orbit {orbit} (spinning budget exhausted)")]
    SchurUnknown { orbit: usize },

    #[error("extension required: {0}")]
    ExtensionRequired(String),

    #[error("not a complex structure: {0}")]
    NotAComplexStructure(String),

    #[error("kernel of the quotient map is not invariant under the complex structure")]
    KernelNotInvariant,

    #[error("internal inconsistency: {0}")]
    Inconsistency(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("{0} requires {1}")]
    Unsupported(&'static str, String),
}
