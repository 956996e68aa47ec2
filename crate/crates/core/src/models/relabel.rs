use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;

use super::{q, ModelError};
use crate::coeffring::{MuMode, Rational};

/// An invertible linear change of basis between two named bases.
/// `new_in_old[i]` writes the i-th new basis vector in the old basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relabel {
    pub old: Vec<String>,
    pub new: Vec<String>,
    new_in_old: Vec<BTreeMap<usize, Rational>>,
    old_in_new: Vec<BTreeMap<usize, Rational>>,
}

/// A vector as `name → coefficient`.
pub type NamedVector = BTreeMap<String, Rational>;

impl Relabel {
    fn new(
        old: &[&str],
        new: &[&str],
        new_in_old: &[&[(&str, Rational)]],
        old_in_new: &[&[(&str, Rational)]],
    ) -> Self {
        let idx = |names: &[&str], n: &str| names.iter().position(|x| *x == n).expect("basis name");
        let conv = |rows: &[&[(&str, Rational)]], basis: &[&str]| {
            rows.iter()
                .map(|r| r.iter().map(|(n, c)| (idx(basis, n), c.clone())).collect())
                .collect()
        };
        Relabel {
            old: old.iter().map(|s| String::from(*s)).collect(),
            new: new.iter().map(|s| String::from(*s)).collect(),
            new_in_old: conv(new_in_old, old),
            old_in_new: conv(old_in_new, new),
        }
    }

    fn apply(
        rows: &[BTreeMap<usize, Rational>],
        from: &[String],
        to: &[String],
        x: &NamedVector,
    ) -> NamedVector {
        let mut out = NamedVector::new();
        for (name, c) in x {
            let i = from.iter().position(|n| n == name).expect("basis name");
            for (j, r) in &rows[i] {
                let slot = out.entry(to[*j].clone()).or_insert_with(Rational::zero);
                *slot += &(c * r);
            }
        }
        out.retain(|_, c| !c.is_zero());
        out
    }

    /// Rewrite a vector given in the old basis in the new one.
    pub fn to_new(&self, x: &NamedVector) -> NamedVector {
        Relabel::apply(&self.old_in_new, &self.old, &self.new, x)
    }

    /// Rewrite a vector given in the new basis in the old one.
    pub fn to_old(&self, x: &NamedVector) -> NamedVector {
        Relabel::apply(&self.new_in_old, &self.new, &self.old, x)
    }
}

/// Newton–Hooke generators: `J̃ = J`, `P̃ᵢ = (Pᵢ+Cᵢ)/2`, `K̃ᵢ = (Pᵢ−Cᵢ)/2`,
/// `H̃ = −D`.
pub fn newton_hooke_generators() -> Relabel {
    let h = q(1, 2);
    let one = q(1, 1);
    let m = q(-1, 1);
    Relabel::new(
        &["J", "D", "P1", "P2", "C1", "C2"],
        &["Jt", "Ht", "Pt1", "Pt2", "Kt1", "Kt2"],
        &[
            &[("J", one.clone())],
            &[("D", m.clone())],
            &[("P1", h.clone()), ("C1", h.clone())],
            &[("P2", h.clone()), ("C2", h.clone())],
            &[("P1", h.clone()), ("C1", -&h)],
            &[("P2", h.clone()), ("C2", -&h)],
        ],
        &[
            &[("Jt", one.clone())],
            &[("Ht", m.clone())],
            &[("Pt1", one.clone()), ("Kt1", one.clone())],
            &[("Pt2", one.clone()), ("Kt2", one.clone())],
            &[("Pt1", one.clone()), ("Kt1", m.clone())],
            &[("Pt2", one.clone()), ("Kt2", m)],
        ],
    )
}

/// Newton–Hooke coordinates: `ψ = θ`, `xᵢ = 2(pᵢ+cᵢ)`, `vᵢ = 2(pᵢ−cᵢ)`,
/// `t = −d`. Rows give each new coordinate in the old ones.
pub fn newton_hooke_coordinates() -> Relabel {
    let two = q(2, 1);
    let one = q(1, 1);
    let m = q(-1, 1);
    let f = q(1, 4);
    Relabel::new(
        &["d", "th", "p1", "p2", "c1", "c2"],
        &["t", "psi", "x1", "x2", "v1", "v2"],
        &[
            &[("d", m.clone())],
            &[("th", one.clone())],
            &[("p1", two.clone()), ("c1", two.clone())],
            &[("p2", two.clone()), ("c2", two.clone())],
            &[("p1", two.clone()), ("c1", -&two)],
            &[("p2", two.clone()), ("c2", -&two)],
        ],
        &[
            &[("t", m)],
            &[("psi", one)],
            &[("x1", f.clone()), ("v1", f.clone())],
            &[("x2", f.clone()), ("v2", f.clone())],
            &[("x1", f.clone()), ("v1", -&f)],
            &[("x2", f.clone()), ("v2", -&f)],
        ],
    )
}

/// The Newton–Hooke relabelling, available for the `μ = −1` member only.
pub fn kinematical_relabel(mode: MuMode) -> Result<(Relabel, Relabel), ModelError> {
    if mode != MuMode::Minus {
        return Err(ModelError::WrongMuMode(mode.label()));
    }
    Ok((newton_hooke_generators(), newton_hooke_coordinates()))
}
