//! Exact monomial ideal algebra and the `Ind_t(P_n)` path family.
//!
//! The arithmetic layer ([`monomial`], [`ideal`], [`decomposition`]) is
//! generic over the unsigned exponent type. The aliases below fix it to `u32`,
//! which is what the path family and its closed forms produce.

pub mod closed_form;
pub mod decomposition;
pub mod error;
pub mod ideal;
pub mod monomial;
pub mod path;

pub use closed_form::{
    enumerate_parity_primes, predicted_ass, predicted_astab, predicted_decomposition_2t,
    predicted_ntf, predicted_stable_set, witness_monomial, ParityPrime, PredictedDecomposition,
};
pub use decomposition::{
    associated_primes, intersect_components, irreducible_decomposition, irredundant_filter,
    minimal_primes_squarefree, primes_of, verify_witness, verify_witness_in_power,
    DecomposeOptions, Decomposer, IrreducibleComponentOf, VarPrime, WitnessVerdict,
};
pub use error::{AlgebraError, FamilyError};
pub use ideal::{Colon, MonomialIdealOf};
pub use monomial::{Exponent, MonomialOf};
pub use path::{
    check_parity_prime, complement_components, g_generator, ind_ideal, independent_sets, ParityPrimeCheck,
    PathCase, PathFamilyParams, MAX_PATH_VERTICES,
};

/// Default exponent type; its cap is `u32::MAX`.
pub type Exp = u32;
pub type Monomial = MonomialOf<Exp>;
pub type MonomialIdeal = MonomialIdealOf<Exp>;
pub type IrreducibleComponent = IrreducibleComponentOf<Exp>;

/// Compact variants with `u16` exponents (cap 65535).
pub type Monomial16 = MonomialOf<u16>;
pub type MonomialIdeal16 = MonomialIdealOf<u16>;
pub type IrreducibleComponent16 = IrreducibleComponentOf<u16>;
