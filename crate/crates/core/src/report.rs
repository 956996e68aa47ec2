//! Residual reports: the exact nonzero coefficients left over when an
//! identity is checked, grouped per checked item.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::coeffring::Rational;
use crate::ncalg::{Algebra, Element};

/// One nonzero coefficient of a residual.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResidualTerm {
    /// Rendered basis element, including parameter and `s` powers.
    pub basis: String,
    /// Power of the deformation parameter (0 for exact layers).
    pub order: u32,
    pub coeff: Rational,
}

/// Residual of one identity (one generator, one relation, one entry…).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Residual {
    pub item: String,
    pub terms: Vec<ResidualTerm>,
}

impl Residual {
    pub fn empty(item: impl Into<String>) -> Self {
        Residual {
            item: item.into(),
            terms: Vec::new(),
        }
    }

    /// Residual of an element of `alg^{⊗R}`, restricted to the window in
    /// which the truncation makes coefficients exact.
    pub fn of<const R: usize>(item: impl Into<String>, alg: &Algebra, x: &Element<R>) -> Self {
        let trunc = alg.truncation();
        let terms = x
            .terms()
            .filter(|(k, _)| trunc.reported(k.order as u32, k.degree()))
            .map(|(k, c)| ResidualTerm {
                basis: render_key(alg, k),
                order: k.order as u32,
                coeff: c.clone(),
            })
            .collect();
        Residual {
            item: item.into(),
            terms,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn first_order(&self) -> Option<u32> {
        self.terms.iter().map(|t| t.order).min()
    }
}

fn render_key<const R: usize>(alg: &Algebra, k: &crate::ncalg::TermKey<R>) -> String {
    let mut s = String::new();
    if k.order > 0 {
        s.push_str(&format!("{}^{} ", alg.param().symbol(), k.order));
    }
    if k.spow != 0 {
        s.push_str(&format!("s^{} ", k.spow));
    }
    s.push_str(&alg.render_slots(&k.slots));
    s
}

/// A named check and its residuals; passes iff every residual is empty.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckReport {
    pub name: String,
    pub anchor: String,
    pub residuals: Vec<Residual>,
    /// Free-form finding attached to the check (e.g. a sign verdict).
    pub note: Option<String>,
}

impl CheckReport {
    pub fn new(name: impl Into<String>, anchor: impl Into<String>) -> Self {
        CheckReport {
            name: name.into(),
            anchor: anchor.into(),
            residuals: Vec::new(),
            note: None,
        }
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }

    pub fn push(&mut self, r: Residual) {
        self.residuals.push(r);
    }

    /// Record a failure that is not a coefficient residual.
    pub fn fail(&mut self, item: impl Into<String>, message: impl Into<String>) {
        self.residuals.push(Residual {
            item: item.into(),
            terms: alloc::vec![ResidualTerm {
                basis: message.into(),
                order: 0,
                coeff: Rational::one(),
            }],
        });
    }

    pub fn passed(&self) -> bool {
        self.residuals.iter().all(Residual::is_zero)
    }

    /// Lowest parameter order carrying a nonzero residual.
    pub fn first_failing_order(&self) -> Option<u32> {
        self.residuals.iter().filter_map(Residual::first_order).min()
    }

    /// All nonzero terms, tagged by item.
    pub fn failing_terms(&self) -> impl Iterator<Item = (&str, &ResidualTerm)> {
        self.residuals
            .iter()
            .flat_map(|r| r.terms.iter().map(move |t| (r.item.as_str(), t)))
    }
}
