//! Monomial ideals held as canonical minimal generating sets.
//!
//! Every constructor minimizes (no generator divides another) and sorts the
//! generators by degree, then by canonical text. Because the minimal
//! generating set of a monomial ideal is unique, two ideals are equal exactly
//! when their stored generator lists are equal.
//!
//! The zero ideal is the empty generator list. The unit ideal cannot be
//! stored; colon operations that would produce it return [`Colon::Unit`].

use std::fmt;

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::{AlgebraError, Result};
use crate::monomial::{Exponent, MonomialOf};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MonomialIdealOf<E> {
    nvars: usize,
    gens: Vec<MonomialOf<E>>,
}

/// Outcome of a colon operation.
#[derive(Clone, PartialEq, Eq)]
pub enum Colon<E> {
    Proper(MonomialIdealOf<E>),
    /// The colon contains `1`.
    Unit,
}

impl<E: Exponent> Colon<E> {
    pub fn proper(&self) -> Option<&MonomialIdealOf<E>> {
        match self {
            Colon::Proper(ideal) => Some(ideal),
            Colon::Unit => None,
        }
    }

    pub fn is_unit(&self) -> bool {
        matches!(self, Colon::Unit)
    }
}

fn check_dims(left: usize, right: usize) -> Result<()> {
    if left == right {
        Ok(())
    } else {
        Err(AlgebraError::DimensionMismatch { left, right })
    }
}

/// Keeps the monomials not divisible by a different element, deduplicated,
/// in canonical order.
fn minimize_raw<E: Exponent>(mut gens: Vec<MonomialOf<E>>) -> Vec<MonomialOf<E>> {
    // A proper divisor has strictly smaller degree, so a degree sweep only
    // needs to look back at what it has already kept.
    gens.sort_unstable_by(|a, b| {
        a.degree()
            .cmp(&b.degree())
            .then_with(|| a.exponents().cmp(b.exponents()))
    });
    gens.dedup();
    let mut kept: Vec<MonomialOf<E>> = Vec::with_capacity(gens.len());
    // `kept[..lower]` holds the survivors of strictly smaller degree.
    let mut lower = 0;
    let mut current = None;
    for g in gens {
        let d = g.degree();
        if current != Some(d) {
            current = Some(d);
            lower = kept.len();
        }
        if !kept[..lower].iter().any(|k| k.divides_unchecked(&g)) {
            kept.push(g);
        }
    }
    canonical_sort(&mut kept);
    kept
}

pub(crate) fn canonical_sort<E: Exponent>(gens: &mut [MonomialOf<E>]) {
    gens.sort_by_cached_key(|g| (g.degree(), g.to_string()));
}

impl<E: Exponent> MonomialIdealOf<E> {
    pub fn zero(nvars: usize) -> Result<Self> {
        if nvars == 0 {
            return Err(AlgebraError::NoVariables);
        }
        Ok(Self {
            nvars,
            gens: Vec::new(),
        })
    }

    /// Minimizes an arbitrary generating set.
    pub fn minimize(nvars: usize, gens: Vec<MonomialOf<E>>) -> Result<Self> {
        if nvars == 0 {
            return Err(AlgebraError::NoVariables);
        }
        for g in &gens {
            check_dims(nvars, g.nvars())?;
            if g.is_one() {
                return Err(AlgebraError::UnitIdeal);
            }
        }
        Ok(Self {
            nvars,
            gens: minimize_raw(gens),
        })
    }

    pub fn principal(m: MonomialOf<E>) -> Result<Self> {
        Self::minimize(m.nvars(), vec![m])
    }

    /// Parses generators written in canonical monomial text.
    pub fn parse<S: AsRef<str>>(nvars: usize, gens: &[S]) -> Result<Self> {
        let gens = gens
            .iter()
            .map(|g| MonomialOf::parse(g.as_ref(), nvars))
            .collect::<Result<Vec<_>>>()?;
        Self::minimize(nvars, gens)
    }

    pub(crate) fn from_minimal_unchecked(nvars: usize, gens: Vec<MonomialOf<E>>) -> Self {
        Self { nvars, gens }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    /// The minimal generators in canonical order.
    pub fn gens(&self) -> &[MonomialOf<E>] {
        &self.gens
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.is_zero()
    }

    pub fn is_squarefree(&self) -> bool {
        self.gens.iter().all(|g| g.is_squarefree())
    }

    pub fn contains(&self, m: &MonomialOf<E>) -> Result<bool> {
        check_dims(self.nvars, m.nvars())?;
        Ok(self.contains_unchecked(m))
    }

    pub(crate) fn contains_unchecked(&self, m: &MonomialOf<E>) -> bool {
        self.gens.iter().any(|g| g.divides_unchecked(m))
    }

    pub fn sum(&self, other: &Self) -> Result<Self> {
        check_dims(self.nvars, other.nvars)?;
        let gens = self.gens.iter().chain(&other.gens).cloned().collect();
        Ok(Self::from_minimal_unchecked(self.nvars, minimize_raw(gens)))
    }

    /// `self + <m>`.
    pub fn add_generator(&self, m: &MonomialOf<E>) -> Result<Self> {
        check_dims(self.nvars, m.nvars())?;
        if m.is_one() {
            return Err(AlgebraError::UnitIdeal);
        }
        if self.contains_unchecked(m) {
            return Ok(self.clone());
        }
        let mut gens: Vec<_> = self
            .gens
            .iter()
            .filter(|g| !m.divides_unchecked(g))
            .cloned()
            .collect();
        gens.push(m.clone());
        canonical_sort(&mut gens);
        Ok(Self::from_minimal_unchecked(self.nvars, gens))
    }

    pub fn product(&self, other: &Self) -> Result<Self> {
        check_dims(self.nvars, other.nvars)?;
        let mut gens = Vec::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            for b in &other.gens {
                gens.push(a.mul(b)?);
            }
        }
        Ok(Self::from_minimal_unchecked(self.nvars, minimize_raw(gens)))
    }

    /// `self^k`, minimizing after every multiplication.
    pub fn power(&self, k: u32) -> Result<Self> {
        if k == 0 {
            return Err(AlgebraError::ZeroPower);
        }
        let mut acc = self.clone();
        for _ in 1..k {
            acc = acc.product(self)?;
        }
        Ok(acc)
    }

    pub fn intersect(&self, other: &Self) -> Result<Self> {
        check_dims(self.nvars, other.nvars)?;
        let mut gens = Vec::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            for b in &other.gens {
                gens.push(a.lcm_unchecked(b));
            }
        }
        Ok(Self::from_minimal_unchecked(self.nvars, minimize_raw(gens)))
    }

    /// `I : u`, generated by `g / gcd(g, u)` over the generators `g`.
    pub fn colon_monomial(&self, u: &MonomialOf<E>) -> Result<Colon<E>> {
        check_dims(self.nvars, u.nvars())?;
        let gens: Vec<_> = self.gens.iter().map(|g| g.quotient_unchecked(u)).collect();
        if gens.iter().any(|g| g.is_one()) {
            return Ok(Colon::Unit);
        }
        Ok(Colon::Proper(Self::from_minimal_unchecked(
            self.nvars,
            minimize_raw(gens),
        )))
    }

    /// `I : J`, the intersection of `I : v` over the generators `v` of `J`.
    pub fn colon_ideal(&self, other: &Self) -> Result<Colon<E>> {
        check_dims(self.nvars, other.nvars)?;
        if other.is_zero() {
            return Err(AlgebraError::ZeroDivisorIdeal);
        }
        let mut acc: Option<Self> = None;
        for v in &other.gens {
            if let Colon::Proper(part) = self.colon_monomial(v)? {
                acc = Some(match acc {
                    None => part,
                    Some(prev) => prev.intersect(&part)?,
                });
            }
        }
        Ok(match acc {
            Some(ideal) => Colon::Proper(ideal),
            None => Colon::Unit,
        })
    }

    pub fn radical(&self) -> Self {
        let gens = self.gens.iter().map(|g| g.squarefree_part()).collect();
        Self::from_minimal_unchecked(self.nvars, minimize_raw(gens))
    }

    pub fn equals(&self, other: &Self) -> Result<bool> {
        check_dims(self.nvars, other.nvars)?;
        Ok(self.gens == other.gens)
    }

    /// True iff `self ⊆ other`.
    pub fn is_subset(&self, other: &Self) -> Result<bool> {
        check_dims(self.nvars, other.nvars)?;
        Ok(self.gens.iter().all(|g| other.contains_unchecked(g)))
    }

    /// Generators as canonical strings.
    pub fn gen_strings(&self) -> Vec<String> {
        self.gens.iter().map(|g| g.to_string()).collect()
    }
}

impl<E: Exponent> fmt::Debug for Colon<E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Colon::Proper(ideal) => write!(f, "Proper({ideal:?})"),
            Colon::Unit => f.write_str("Unit"),
        }
    }
}

impl<E: Exponent> fmt::Display for MonomialIdealOf<E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("<")?;
        for (i, g) in self.gens.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{g}")?;
        }
        f.write_str(">")
    }
}

impl<E: Exponent> fmt::Debug for MonomialIdealOf<E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MonomialIdeal[{}]{self}", self.nvars)
    }
}

impl<E: Exponent> Serialize for MonomialIdealOf<E> {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("MonomialIdeal", 2)?;
        s.serialize_field("nvars", &self.nvars)?;
        s.serialize_field("gens", &self.gen_strings())?;
        s.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    type I = MonomialIdealOf<u32>;
    type M = MonomialOf<u32>;

    fn ideal(nvars: usize, gens: &[&str]) -> I {
        I::parse(nvars, gens).unwrap()
    }

    fn m(nvars: usize, text: &str) -> M {
        M::parse(text, nvars).unwrap()
    }

    // Ind_2(P_4) and Ind_2(P_5), written out from their independent 2-sets.
    fn ind_2_4() -> I {
        ideal(4, &["x1*x3", "x1*x4", "x2*x4"])
    }

    fn ind_2_5() -> I {
        ideal(5, &["x1*x3", "x1*x4", "x1*x5", "x2*x4", "x2*x5", "x3*x5"])
    }

    #[test]
    fn minimize_examples() {
        let i = ideal(4, &["x1", "x1*x3", "x2*x4"]);
        assert_eq!(i.gen_strings(), ["x1", "x2*x4"]);
        assert!(I::minimize(4, vec![]).unwrap().is_zero());
        assert_eq!(ideal(4, &["x1*x3", "x1*x3"]).gen_strings(), ["x1*x3"]);
        assert_eq!(I::minimize(3, vec![M::one(3).unwrap()]), Err(AlgebraError::UnitIdeal));
    }

    #[test]
    fn contains_examples() {
        assert!(ind_2_4().contains(&m(4, "x1*x3*x4")).unwrap());
        assert!(!ind_2_4().contains(&m(4, "x2*x3")).unwrap());
        let zero = I::zero(4).unwrap();
        assert!(!zero.contains(&m(4, "x1^4*x2*x3")).unwrap());
    }

    #[test]
    fn sum_product_power_examples() {
        assert_eq!(ideal(3, &["x1*x3"]).power(2).unwrap(), ideal(3, &["x1^2*x3^2"]));
        assert_eq!(
            ideal(2, &["x1"]).product(&ideal(2, &["x2"])).unwrap(),
            ideal(2, &["x1*x2"])
        );
        assert_eq!(
            ideal(3, &["x1"]).sum(&ideal(3, &["x1*x2", "x3"])).unwrap(),
            ideal(3, &["x1", "x3"])
        );
        assert_eq!(ind_2_4().power(1).unwrap(), ind_2_4());
        assert_eq!(ind_2_4().power(0), Err(AlgebraError::ZeroPower));
    }

    #[test]
    fn square_of_ind_2_4() {
        // All six pairwise products of {x1x3, x1x4, x2x4}; none divides another
        // since they are distinct and of equal degree.
        let expected = ideal(
            4,
            &[
                "x1^2*x3^2",
                "x1^2*x3*x4",
                "x1*x2*x3*x4",
                "x1^2*x4^2",
                "x1*x2*x4^2",
                "x2^2*x4^2",
            ],
        );
        let sq = ind_2_4().power(2).unwrap();
        assert_eq!(sq, expected);
        assert!(sq.gens().iter().all(|g| g.degree() == 4));
    }

    #[test]
    fn intersect_examples() {
        assert_eq!(
            ideal(2, &["x1"]).intersect(&ideal(2, &["x2"])).unwrap(),
            ideal(2, &["x1*x2"])
        );
        let three = ideal(4, &["x1", "x2"])
            .intersect(&ideal(4, &["x1", "x4"]))
            .unwrap();
        assert_eq!(three, ideal(4, &["x1", "x2*x4"]));
        let three = three.intersect(&ideal(4, &["x3", "x4"])).unwrap();
        assert_eq!(three, ind_2_4());
        assert_eq!(ind_2_5().intersect(&ind_2_5()).unwrap(), ind_2_5());
    }

    #[test]
    fn colon_monomial_examples() {
        let colon = ind_2_5().colon_monomial(&m(5, "x4*x5")).unwrap();
        assert_eq!(colon, Colon::Proper(ideal(5, &["x1", "x2", "x3"])));
        let one = M::one(5).unwrap();
        assert_eq!(ind_2_5().colon_monomial(&one).unwrap(), Colon::Proper(ind_2_5()));
        assert_eq!(
            ideal(3, &["x1*x3"]).colon_monomial(&m(3, "x3")).unwrap(),
            Colon::Proper(ideal(3, &["x1"]))
        );
        assert!(ind_2_5().colon_monomial(&m(5, "x1*x3")).unwrap().is_unit());
    }

    #[test]
    fn colon_ideal_examples() {
        let i = ind_2_4();
        let u = m(4, "x2");
        assert_eq!(
            i.colon_ideal(&I::principal(u.clone()).unwrap()).unwrap(),
            i.colon_monomial(&u).unwrap()
        );
        // Every generator lies in I, so I : I is the unit ideal.
        assert!(i.colon_ideal(&i).unwrap().is_unit());
        let j = ideal(4, &["x1*x3", "x4"]);
        let c = i.colon_ideal(&j).unwrap();
        assert!(i.is_subset(c.proper().unwrap()).unwrap());

        let lhs = ideal(2, &["x1*x2"]).colon_ideal(&ideal(2, &["x1", "x2"])).unwrap();
        assert_eq!(lhs, Colon::Proper(ideal(2, &["x1*x2"])));
        assert_eq!(
            i.colon_ideal(&I::zero(4).unwrap()),
            Err(AlgebraError::ZeroDivisorIdeal)
        );
    }

    #[test]
    fn radical_examples() {
        assert_eq!(ideal(3, &["x1^2*x3^2"]).radical(), ideal(3, &["x1*x3"]));
        assert_eq!(ind_2_5().power(3).unwrap().radical(), ind_2_5());
        assert!(I::zero(3).unwrap().radical().is_zero());
    }

    #[test]
    fn equality_and_subsets() {
        let a = ideal(4, &["x2*x4", "x1*x4", "x1*x3"]);
        assert!(a.equals(&ind_2_4()).unwrap());
        assert!(ind_2_4().power(2).unwrap().is_subset(&ind_2_4()).unwrap());
        assert!(!ind_2_4().is_subset(&ind_2_4().power(2).unwrap()).unwrap());
        assert!(a.equals(&ind_2_5()).is_err());
    }
}
