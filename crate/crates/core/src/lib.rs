//! Buckling and initial post-buckling of thin circular rings under external
//! pressure.

#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod analytic;
pub mod energy;
pub mod error;
pub mod galerkin;
pub mod inextensible;
pub mod kinematics;
pub mod postbuckling;
pub mod quadrature;
pub mod report;
pub mod rigid;
pub mod ring;
pub mod verify;

pub use error::{Error, Result};
pub use kinematics::{HarmonicField, RitzMode};
pub use quadrature::QuadratureRule;
pub use ring::{LoadCase, LoadState, Ring};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../README.md")]
    pub struct Readme;
    #[doc = include_str!("../../../book/src/introduction.md")]
    pub struct Introduction;
    #[doc = include_str!("../../../book/src/ring-model.md")]
    pub struct RingModel;
    #[doc = include_str!("../../../book/src/kinematics.md")]
    pub struct Kinematics;
    #[doc = include_str!("../../../book/src/energy.md")]
    pub struct Energy;
    #[doc = include_str!("../../../book/src/critical-loads.md")]
    pub struct CriticalLoads;
    #[doc = include_str!("../../../book/src/postbuckling.md")]
    pub struct Postbuckling;
    #[doc = include_str!("../../../book/src/rigid-motion.md")]
    pub struct RigidMotion;
    #[doc = include_str!("../../../book/src/inextensible.md")]
    pub struct Inextensible;
}
