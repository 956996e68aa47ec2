use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use super::names;
use crate::coeffring::{MuMode, MuPoly};
use crate::ncalg::{Algebra, GeneratorId};
use crate::report::{CheckReport, Residual, ResidualTerm};

/// A vector in a Lie algebra: basis index → coefficient.
pub type LieVector = BTreeMap<usize, MuPoly>;

/// A finite-dimensional Lie algebra by structure constants over `Q[μ]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieTable {
    names: Vec<String>,
    /// `[e_i, e_j]` for `i < j`; absent pairs commute.
    brackets: BTreeMap<(usize, usize), LieVector>,
}

/// Tensor `Σ r^{ij} e_i⊗e_j`.
pub type Bivector = BTreeMap<(usize, usize), MuPoly>;

fn add_into<K: Ord + Clone>(map: &mut BTreeMap<K, MuPoly>, k: K, c: &MuPoly) {
    if c.is_zero() {
        return;
    }
    let slot = map.entry(k.clone()).or_default();
    *slot = &*slot + c;
    if slot.is_zero() {
        map.remove(&k);
    }
}

impl LieTable {
    pub fn new(names: &[&str]) -> Self {
        LieTable {
            names: names.iter().map(|s| String::from(*s)).collect(),
            brackets: BTreeMap::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index(&self, name: &str) -> usize {
        self.names
            .iter()
            .position(|n| n == name)
            .expect("basis name")
    }

    /// Set `[a, b] = Σ c·e`.
    pub fn set(&mut self, a: &str, b: &str, value: &[(&str, MuPoly)]) {
        let (i, j) = (self.index(a), self.index(b));
        assert_ne!(i, j);
        let sign = if i < j { MuPoly::from_int(1) } else { MuPoly::from_int(-1) };
        let mut v = LieVector::new();
        for (n, c) in value {
            add_into(&mut v, self.index(n), &(c * &sign));
        }
        if v.is_empty() {
            self.brackets.remove(&(i.min(j), i.max(j)));
        } else {
            self.brackets.insert((i.min(j), i.max(j)), v);
        }
    }

    pub fn bracket(&self, i: usize, j: usize) -> LieVector {
        if i == j {
            return LieVector::new();
        }
        let v = self.brackets.get(&(i.min(j), i.max(j))).cloned().unwrap_or_default();
        if i < j {
            v
        } else {
            v.into_iter().map(|(k, c)| (k, -&c)).collect()
        }
    }

    pub fn bracket_vec(&self, x: &LieVector, y: &LieVector) -> LieVector {
        let mut out = LieVector::new();
        for (i, a) in x {
            for (j, b) in y {
                let ab = a * b;
                for (k, c) in self.bracket(*i, *j) {
                    add_into(&mut out, k, &(&ab * &c));
                }
            }
        }
        out
    }

    pub fn basis(&self, i: usize) -> LieVector {
        LieVector::from([(i, MuPoly::from_int(1))])
    }

    /// The parameter-zero part of an algebra's commutation rules, read as a
    /// Lie table (`s²` read as μ). `None` if a rule is nonlinear at order 0
    /// or carries an odd power of `s`.
    pub fn from_algebra(alg: &Algebra) -> Option<LieTable> {
        let names: Vec<&str> = alg.system().names().iter().map(|s| s.as_str()).collect();
        let mut t = LieTable::new(&names);
        for ((g, h), rhs) in alg.system().rules() {
            let mut v = LieVector::new();
            for (k, c) in rhs.order_part(0).terms() {
                let m = k.slots[0];
                let gen = m.first()?;
                if m.degree() != 1 || k.spow < 0 || k.spow % 2 != 0 {
                    return None;
                }
                let p = MuPoly::from_terms([((k.spow / 2) as u32, c.clone())]);
                add_into(&mut v, gen.index(), &p);
            }
            if !v.is_empty() {
                // stored as [g, h] with g > h
                let neg: LieVector = v.into_iter().map(|(k, c)| (k, -&c)).collect();
                t.brackets.insert((h.index(), g.index()), neg);
            }
        }
        Some(t)
    }

    /// Specialize μ to a number.
    pub fn specialize(&self, mode: MuMode) -> LieTable {
        let Some(v) = mode.value() else {
            return self.clone();
        };
        let mut out = LieTable {
            names: self.names.clone(),
            brackets: BTreeMap::new(),
        };
        for (k, vec) in &self.brackets {
            let mut w = LieVector::new();
            for (i, c) in vec {
                add_into(&mut w, *i, &MuPoly::constant(c.eval(&v)));
            }
            if !w.is_empty() {
                out.brackets.insert(*k, w);
            }
        }
        out
    }

    /// `[e_i,[e_j,e_k]] + cyclic` for every triple.
    pub fn jacobi(&self) -> CheckReport {
        let mut report = CheckReport::new("jacobi", "Jacobi identity");
        let n = self.dim();
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    let (a, b, c) = (self.basis(i), self.basis(j), self.basis(k));
                    let mut sum = self.bracket_vec(&a, &self.bracket_vec(&b, &c));
                    for (key, v) in self.bracket_vec(&b, &self.bracket_vec(&c, &a)) {
                        add_into(&mut sum, key, &v);
                    }
                    for (key, v) in self.bracket_vec(&c, &self.bracket_vec(&a, &b)) {
                        add_into(&mut sum, key, &v);
                    }
                    let item = format!("({}, {}, {})", self.names[i], self.names[j], self.names[k]);
                    report.push(self.residual(item, sum.iter().map(|(k, c)| (alloc::vec![*k], c))));
                }
            }
        }
        report
    }

    fn residual<'a>(
        &self,
        item: String,
        terms: impl Iterator<Item = (Vec<usize>, &'a MuPoly)>,
    ) -> Residual {
        let mut out = Residual::empty(item);
        for (idx, c) in terms {
            let basis: Vec<&str> = idx.iter().map(|i| self.names[*i].as_str()).collect();
            for (p, r) in c.terms() {
                let mu = if p == 0 { String::new() } else { format!("μ^{p} ") };
                out.terms.push(ResidualTerm {
                    basis: format!("{mu}{}", basis.join(" ⊗ ")),
                    order: 0,
                    coeff: r.clone(),
                });
            }
        }
        out
    }

    /// `Σ c (a∧b)` as a bivector.
    pub fn wedge_sum(&self, terms: &[(&str, &str, MuPoly)]) -> Bivector {
        let mut r = Bivector::new();
        for (a, b, c) in terms {
            let (i, j) = (self.index(a), self.index(b));
            add_into(&mut r, (i, j), c);
            add_into(&mut r, (j, i), &-c);
        }
        r
    }

    /// Generator id of a basis element in an algebra with the same names.
    pub fn id_in(&self, alg: &Algebra, i: usize) -> GeneratorId {
        alg.id(&self.names[i]).expect("shared basis")
    }
}

/// `[r₁₂,r₁₃] + [r₁₂,r₂₃] + [r₁₃,r₂₃]` from the structure constants; an
/// empty residual means `r` solves the classical Yang–Baxter equation.
pub fn schouten_check(table: &LieTable, r: &Bivector) -> CheckReport {
    let mut out: BTreeMap<(usize, usize, usize), MuPoly> = BTreeMap::new();
    for ((i, j), a) in r {
        for ((k, l), b) in r {
            let ab = a * b;
            for (m, c) in table.bracket(*i, *k) {
                add_into(&mut out, (m, *j, *l), &(&ab * &c));
            }
            for (m, c) in table.bracket(*j, *k) {
                add_into(&mut out, (*i, m, *l), &(&ab * &c));
            }
            for (m, c) in table.bracket(*j, *l) {
                add_into(&mut out, (*i, *k, m), &(&ab * &c));
            }
        }
    }
    let mut report = CheckReport::new("schouten", "classical Yang–Baxter equation");
    report.push(table.residual(
        "[[r, r]]".into(),
        out.iter().map(|((a, b, c), v)| (alloc::vec![*a, *b, *c], v)),
    ));
    report
}

/// `[K,P±] = ±2P±`, `[P₊,P₋] = 0`.
pub fn iso11_table() -> LieTable {
    let mut t = LieTable::new(&names::UZ);
    t.set("K", "P+", &[("P+", MuPoly::from_int(2))]);
    t.set("K", "P-", &[("P-", MuPoly::from_int(-2))]);
    t
}

/// The six-dimensional family `g_μ`.
pub fn gmu_table(mode: MuMode) -> LieTable {
    let mu = MuPoly::for_mode(mode);
    let one = MuPoly::from_int(1);
    let mut t = LieTable::new(&names::GMU);
    t.set("J", "P1", &[("P2", one.clone())]);
    t.set("J", "P2", &[("P1", mu.clone())]);
    t.set("D", "P1", &[("P1", one.clone())]);
    t.set("D", "P2", &[("P2", one.clone())]);
    t.set("J", "C1", &[("C2", one.clone())]);
    t.set("J", "C2", &[("C1", mu)]);
    t.set("D", "C1", &[("C1", -&one)]);
    t.set("D", "C2", &[("C2", -&one)]);
    t
}

/// The similarity algebra `s_μ`.
pub fn weyl_table(mode: MuMode) -> LieTable {
    let mu = MuPoly::for_mode(mode);
    let one = MuPoly::from_int(1);
    let mut t = LieTable::new(&names::WEYL);
    t.set("J", "P1", &[("P2", one.clone())]);
    t.set("J", "P2", &[("P1", mu)]);
    t.set("D", "P1", &[("P1", one.clone())]);
    t.set("D", "P2", &[("P2", one)]);
    t
}
