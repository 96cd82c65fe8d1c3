//! Members of the class: concrete analytic functions, grid membership
//! certificates, the structural builder, and the `z + czⁿ` criteria.

pub mod convexity;
pub mod function;
pub mod gn;
pub mod grid;
pub mod membership;
pub mod schwarz;

pub use convexity::{convexity_check_p, k_alpha, ConvexityReport};
pub use function::{big_f, evaluate_tilde_f, AnalyticFunction, Holomorphic, LogDerivative, OverZ};
pub use gn::{
    conditions_met, disc_endpoints, gn_nonmembership, sample_parameters, DiscEndpoints, GnCondition, GnOutcome, GnParameters,
};
pub use grid::{GridSpec, Stats, Status, Verdict, Witness};
pub use membership::{build_member, membership_test, starlike_strip_check, MemberSource};
pub use schwarz::SchwarzGenerator;
