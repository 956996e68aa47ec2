//! The catalog: deformed enveloping algebras and function algebras of the
//! (1+1) Poincaré family, their doubling and graded contraction, and the
//! classical Lie-algebra layer.

mod contraction;
mod funalg;
mod lie;
mod relabel;
mod uzalg;
mod weyl;

pub use contraction::{
    build_doubled, build_doubled_qgroup, build_qgroup_gmu_reconstructed, compare_presentations,
    contract_algebra, contracted_gmu, remap_named, Contraction,
};
pub use funalg::{build_poincare_qgroup, build_qgroup_gmu};
pub use lie::{gmu_table, iso11_table, schouten_check, weyl_table, Bivector, LieTable};
pub use relabel::{kinematical_relabel, NamedVector, newton_hooke_coordinates, newton_hooke_generators, Relabel};
pub use uzalg::build_poincare_qalgebra;
pub use weyl::build_weyl;

use alloc::string::String;

use crate::coeffring::{CoeffError, MuMode, MuPoly, Rational, SPoly};
use crate::hopf::HopfPresentation;
use crate::ncalg::{outer, AlgebraElement, NcError, Tensor2, Truncation};
use crate::report::CheckReport;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ModelError {
    #[error(transparent)]
    Nc(#[from] NcError),
    #[error(transparent)]
    Coeff(#[from] CoeffError),
    #[error("{item}: odd or negative power s^{s_power} at order {order} after contraction")]
    OddSPowerResidue {
        item: String,
        order: u32,
        s_power: i32,
    },
    #[error("reconstructed and printed presentations differ")]
    PresentationMismatch(CheckReport),
    #[error("unknown model id {0:?}")]
    UnknownModel(String),
    #[error("relabelling needs the μ = -1 model, got μ = {0}")]
    WrongMuMode(&'static str),
}

/// Generator names used throughout the catalog.
pub mod names {
    pub const UZ: [&str; 3] = ["K", "P+", "P-"];
    pub const FUNZ: [&str; 3] = ["chi", "a+", "a-"];
    pub const DOUBLED: [&str; 6] = ["K1", "K2", "P1+", "P2+", "P1-", "P2-"];
    pub const DOUBLED_FUN: [&str; 6] = ["chi1", "chi2", "a1+", "a2+", "a1-", "a2-"];
    pub const GMU: [&str; 6] = ["J", "D", "P1", "P2", "C1", "C2"];
    pub const WEYL: [&str; 4] = ["J", "D", "P1", "P2"];
    pub const FUNW: [&str; 6] = ["d", "th", "p1", "p2", "c1", "c2"];
}

/// The value of μ as a coefficient: a rational number, or `s²`.
pub fn mu_coeff(mode: MuMode) -> SPoly {
    SPoly::from(&MuPoly::for_mode(mode))
}

pub(crate) fn q(n: i64, d: i64) -> Rational {
    Rational::new(n, d)
}

pub fn t2(a: &AlgebraElement, b: &AlgebraElement) -> Tensor2 {
    outer::<1, 1, 2>(a, b)
}

/// `a ∧ b = a⊗b − b⊗a`
pub fn wedge(a: &AlgebraElement, b: &AlgebraElement) -> Tensor2 {
    &t2(a, b) - &t2(b, a)
}

/// `Δx = x⊗1 + 1⊗x` for a rank-1 element.
pub fn primitive(x: &AlgebraElement) -> Tensor2 {
    let one = AlgebraElement::one();
    &t2(x, &one) + &t2(&one, x)
}

/// Model ids of the catalog, parsed.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ModelId {
    UzIso11,
    FunzIso11,
    Doubled,
    UwG(MuMode),
    UwS(MuMode),
    FunwG(MuMode),
}

impl ModelId {
    pub fn parse(id: &str) -> Result<Self, ModelError> {
        let with_mu = |rest: &str| MuMode::parse(rest).ok_or_else(|| ModelError::UnknownModel(id.into()));
        match id {
            "uz-iso11" => Ok(ModelId::UzIso11),
            "funz-iso11" => Ok(ModelId::FunzIso11),
            "doubled" => Ok(ModelId::Doubled),
            _ => {
                if let Some(rest) = id.strip_prefix("uw-g") {
                    Ok(ModelId::UwG(with_mu(rest)?))
                } else if let Some(rest) = id.strip_prefix("uw-s") {
                    Ok(ModelId::UwS(with_mu(rest)?))
                } else if let Some(rest) = id.strip_prefix("funw-g") {
                    Ok(ModelId::FunwG(with_mu(rest)?))
                } else {
                    Err(ModelError::UnknownModel(id.into()))
                }
            }
        }
    }

    pub fn label(&self) -> String {
        use alloc::format;
        match self {
            ModelId::UzIso11 => "uz-iso11".into(),
            ModelId::FunzIso11 => "funz-iso11".into(),
            ModelId::Doubled => "doubled".into(),
            ModelId::UwG(m) => format!("uw-g{}", m.label()),
            ModelId::UwS(m) => format!("uw-s{}", m.label()),
            ModelId::FunwG(m) => format!("funw-g{}", m.label()),
        }
    }

    /// Whether the model is a function algebra (and so needs a degree cap).
    pub fn is_coordinate_algebra(&self) -> bool {
        matches!(self, ModelId::FunzIso11 | ModelId::FunwG(_))
    }
}

/// Build a catalog model. `degree` is used by coordinate algebras only.
pub fn build(id: ModelId, order: u32, degree: u32) -> Result<HopfPresentation, ModelError> {
    match id {
        ModelId::UzIso11 => Ok(build_poincare_qalgebra(order)),
        ModelId::FunzIso11 => Ok(build_poincare_qgroup(Truncation::capped(order, degree))),
        ModelId::Doubled => Ok(build_doubled(order)),
        ModelId::UwG(mode) => contracted_gmu(mode, order),
        ModelId::UwS(mode) => Ok(build_weyl(mode, order)),
        ModelId::FunwG(mode) => Ok(build_qgroup_gmu(mode, Truncation::capped(order, degree))),
    }
}
