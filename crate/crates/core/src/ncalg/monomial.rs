use core::fmt;

/// Upper bound on the number of generators of any algebra in the catalog.
pub const MAX_GENS: usize = 8;

/// Index of a generator in the fixed PBW order of its algebra.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GeneratorId(pub u8);

impl GeneratorId {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

/// PBW monomial stored as an exponent vector: `g₀^e₀ g₁^e₁ …` with the
/// generators in increasing order. Normal-ordered by construction; the zero
/// vector is the unit.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Monomial([u8; MAX_GENS]);

impl Monomial {
    pub const UNIT: Monomial = Monomial([0; MAX_GENS]);

    pub fn gen(g: GeneratorId) -> Self {
        Monomial::UNIT.with(g, 1)
    }

    pub fn from_exponents(exps: &[u8]) -> Self {
        assert!(exps.len() <= MAX_GENS);
        let mut m = [0u8; MAX_GENS];
        m[..exps.len()].copy_from_slice(exps);
        Monomial(m)
    }

    pub fn exponents(&self) -> &[u8; MAX_GENS] {
        &self.0
    }

    pub fn exponent(&self, g: GeneratorId) -> u8 {
        self.0[g.index()]
    }

    pub fn is_unit(&self) -> bool {
        self.0.iter().all(|e| *e == 0)
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|e| *e as u32).sum()
    }

    /// Smallest generator present.
    pub fn first(&self) -> Option<GeneratorId> {
        self.0.iter().position(|e| *e > 0).map(|i| GeneratorId(i as u8))
    }

    /// Largest generator present.
    pub fn last(&self) -> Option<GeneratorId> {
        self.0.iter().rposition(|e| *e > 0).map(|i| GeneratorId(i as u8))
    }

    pub fn with(mut self, g: GeneratorId, e: u8) -> Self {
        self.0[g.index()] = e;
        self
    }

    /// Remove one factor of `g`.
    pub fn lower(mut self, g: GeneratorId) -> Self {
        debug_assert!(self.0[g.index()] > 0);
        self.0[g.index()] -= 1;
        self
    }

    /// Product with no reordering; valid when every generator of `self` is
    /// `<=` every generator of `other`.
    pub fn concat(&self, other: &Monomial) -> Monomial {
        let mut out = self.0;
        for (o, e) in out.iter_mut().zip(other.0.iter()) {
            *o = o.checked_add(*e).expect("exponent overflow");
        }
        Monomial(out)
    }

    /// Whether `self · other` is already in normal order.
    pub fn ordered_before(&self, other: &Monomial) -> bool {
        match (self.last(), other.first()) {
            (Some(a), Some(b)) => a <= b,
            _ => true,
        }
    }

    /// Expand to the generator word `g₀…g₀ g₁…`.
    pub fn word(&self) -> impl Iterator<Item = GeneratorId> + '_ {
        self.0
            .iter()
            .enumerate()
            .flat_map(|(i, e)| core::iter::repeat_n(GeneratorId(i as u8), *e as usize))
    }

    /// Whether only generators from `allowed` occur.
    pub fn supported_in(&self, allowed: &[GeneratorId]) -> bool {
        self.0
            .iter()
            .enumerate()
            .all(|(i, e)| *e == 0 || allowed.iter().any(|g| g.index() == i))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "m{:?}", self.0)
    }
}
