//! Exact-arithmetic workbench for loop calculus on the Hawaiian Earring.
//!
//! The crate machine-checks a family of constructions from low-dimensional
//! metric topology, everything in exact rational arithmetic:
//!
//! * [`seqorder`] — the ordered set `B` of bounded integer sequences, the
//!   weights `λ(n) = 1/(2^n n!)` and the order embedding `τ : B → [0,1]`;
//! * [`earring`] — the Hawaiian Earring `ℍ`, its standard loops, commutator
//!   loops `c_k` and the divisible loop family `σ_n`;
//! * [`freegroup`] — reduced words, commutator powers, abelianization and a
//!   single-commutator decomposition search;
//! * [`chains`] — integer singular chains on affine simplices: boundary,
//!   barycentric subdivision, the subdivision homotopy, the prism operator,
//!   cone fillings and Smith-normal-form homology;
//! * [`currents`] — integer-rectifiable 0/1-currents on metric graphs:
//!   boundary, mass, restriction, push-forward, slicing, and a
//!   chain-representation algorithm with per-step certificates.
//!
//! Floating point appears nowhere in the checked statements; π enters only
//! through certified rational enclosures ([`certified`]).

pub mod certified;
pub mod chains;
pub mod config;
pub mod currents;
pub mod earring;
pub mod freegroup;
pub mod rational;
pub mod seqorder;
pub mod suites;

pub use certified::CertifiedReal;
pub use rational::Rational;

#[cfg(test)]
mod concurrency {
    // all values are immutable after construction and shareable across
    // threads; keep that a compile-time fact
    fn assert_send_sync<T: Send + Sync>() {}

    #[test]
    fn values_are_send_and_sync() {
        assert_send_sync::<crate::seqorder::Seq>();
        assert_send_sync::<crate::seqorder::LocateResult>();
        assert_send_sync::<crate::earring::EarringPoint>();
        assert_send_sync::<crate::earring::PiecewisePath>();
        assert_send_sync::<crate::freegroup::Word>();
        assert_send_sync::<crate::chains::Chain>();
        assert_send_sync::<crate::currents::MetricGraph>();
        assert_send_sync::<crate::currents::GraphCurrent1>();
        assert_send_sync::<crate::currents::GraphChain1>();
        assert_send_sync::<crate::CertifiedReal>();
    }
}
