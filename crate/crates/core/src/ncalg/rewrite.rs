use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use super::{AlgebraElement, GeneratorId, Monomial, NcError, MAX_GENS};

/// Truncation caps: the order `N` in the deformation parameter and, for
/// coordinate algebras, the total coordinate degree cap `D`.
///
/// With a degree cap the engine works modulo the ideal spanned by terms with
/// `order > N` or `order + degree > N + D`. Reordering can lower the degree
/// of a term only by raising its order, so this ideal is stable under the
/// rewrite rules; coefficients with `order <= N` and `degree <= D` are then
/// exact.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Truncation {
    pub order: u32,
    pub degree: Option<u32>,
}

impl Truncation {
    pub fn order(order: u32) -> Self {
        Truncation {
            order,
            degree: None,
        }
    }

    pub fn capped(order: u32, degree: u32) -> Self {
        Truncation {
            order,
            degree: Some(degree),
        }
    }

    /// Whether a term of the given order and total degree survives.
    pub fn keeps(&self, order: u32, degree: u32) -> bool {
        order <= self.order
            && match self.degree {
                Some(d) => order + degree <= self.order + d,
                None => true,
            }
    }

    /// Whether a term lies in the window where coefficients are asserted.
    pub fn reported(&self, order: u32, degree: u32) -> bool {
        order <= self.order && self.degree.is_none_or(|d| degree <= d)
    }

    /// Filtration weight of a term; powers of an element of weight ≥ 1
    /// vanish beyond [`Truncation::max_weight`].
    pub fn weight(&self, order: u32, degree: u32) -> u32 {
        match self.degree {
            Some(_) => order + degree,
            None => order,
        }
    }

    pub fn max_weight(&self) -> u32 {
        self.order + self.degree.unwrap_or(0)
    }

    pub fn with_order(&self, order: u32) -> Self {
        Truncation { order, ..*self }
    }
}

/// Generators in a fixed PBW order together with the commutators of
/// out-of-order pairs. Pairs without an entry commute.
#[derive(Clone, Debug)]
pub struct RewriteSystem {
    names: Vec<String>,
    rules: BTreeMap<(GeneratorId, GeneratorId), AlgebraElement>,
}

impl RewriteSystem {
    pub fn new(names: &[&str]) -> Self {
        assert!(names.len() <= MAX_GENS, "too many generators");
        RewriteSystem {
            names: names.iter().map(|n| n.to_string()).collect(),
            rules: BTreeMap::new(),
        }
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn generators(&self) -> impl Iterator<Item = GeneratorId> {
        (0..self.names.len() as u8).map(GeneratorId)
    }

    pub fn name(&self, g: GeneratorId) -> &str {
        &self.names[g.index()]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn id(&self, name: &str) -> Result<GeneratorId, NcError> {
        self.names
            .iter()
            .position(|n| n == name)
            .map(|i| GeneratorId(i as u8))
            .ok_or_else(|| NcError::UnknownGenerator(name.to_string()))
    }

    /// Record `[a, b] = value` (normal-ordered). Either argument order is
    /// accepted; the rule is stored for the out-of-order pair.
    pub fn set_commutator(&mut self, a: GeneratorId, b: GeneratorId, value: AlgebraElement) {
        assert_ne!(a, b, "a generator commutes with itself");
        let (key, value) = if a > b {
            ((a, b), value)
        } else {
            ((b, a), -&value)
        };
        if value.is_zero() {
            self.rules.remove(&key);
        } else {
            self.rules.insert(key, value);
        }
    }

    /// `[g, h]` for `g > h`.
    pub fn rule(&self, g: GeneratorId, h: GeneratorId) -> Option<&AlgebraElement> {
        self.rules.get(&(g, h))
    }

    /// `[a, b]` from the table, for any pair.
    pub fn bracket(&self, a: GeneratorId, b: GeneratorId) -> AlgebraElement {
        if a == b {
            AlgebraElement::zero()
        } else if a > b {
            self.rules.get(&(a, b)).cloned().unwrap_or_default()
        } else {
            self.rules.get(&(b, a)).map(|v| -v).unwrap_or_default()
        }
    }

    pub fn rules(&self) -> impl Iterator<Item = (&(GeneratorId, GeneratorId), &AlgebraElement)> {
        self.rules.iter()
    }

    pub fn monomial(&self, g: GeneratorId) -> Monomial {
        Monomial::gen(g)
    }
}
