//! Classes in the subring of the Grothendieck ring of varieties generated by
//! the Lefschetz class `L = [A^1]` and declared symbolic generators, with
//! symmetric powers via the Kapranov zeta function and the blowup / Hilbert
//! square identities.

mod class;
mod special;
mod table;
mod zeta;

pub use class::{GeneratorPowers, MotivicClass};
pub use special::{
    hilb2, hilb2_from_sym2, odp_cubic_threefold_class, projective_space_class, quadric_class,
};
pub use table::{GeneratorEntry, GeneratorTable};
pub use zeta::symmetric_powers;
