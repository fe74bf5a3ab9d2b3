//! Code families built from points, multipliers and (skew) polynomials.

mod classical;
mod multivariate;
mod skew;

pub use classical::{
    acar, goppa_classical, goppa_grs_generator, goppa_membership_oracle, grs, grs_dual_multipliers, grs_via_goppa,
    multivariate_goppa, tensor_t,
};
pub use multivariate::{gsmg, GoppaInstance, Gsmg};
pub use skew::{
    gse, gsg, gsg_gsrs_witness, gsrs, gsrs_weights, hprime_by_division, hprime_closed_form, inverse_hypothesis,
    twist_entrywise, Gsg, GsrsWitness, ParityFactors, ReducedForm,
};
