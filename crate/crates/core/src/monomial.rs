//! Monomials as exponent vectors.
//!
//! A monomial over `nvars` variables is stored densely: entry `i - 1` holds
//! the exponent of `x_i`. All arithmetic is checked against the exponent
//! type's maximum, so overflow surfaces as an error instead of wrapping.
//!
//! The canonical text form lists variables in increasing index order,
//! separated by `*`, with a caret only for exponents above one
//! (`x1*x3^2`). The unit monomial prints as `1`.

use std::cmp::Ordering;
use std::fmt;
use std::hash::Hash;
use std::str::FromStr;

use num_traits::{PrimInt, Unsigned};

use crate::error::{AlgebraError, Result};

/// Unsigned machine integers usable as exponents.
pub trait Exponent:
    PrimInt + Unsigned + Hash + fmt::Debug + fmt::Display + FromStr + Send + Sync + 'static
{
    /// Largest representable exponent, as `u64`.
    fn cap() -> u64 {
        Self::max_value().to_u64().unwrap_or(u64::MAX)
    }

    fn from_u64_checked(value: u64) -> Result<Self> {
        Self::from(value).ok_or(AlgebraError::ExponentOverflow { cap: Self::cap() })
    }
}

impl<E> Exponent for E where
    E: PrimInt + Unsigned + Hash + fmt::Debug + fmt::Display + FromStr + Send + Sync + 'static
{
}

/// A monomial `x_1^{a_1} ... x_n^{a_n}`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MonomialOf<E> {
    exps: Vec<E>,
}

fn check_dims(left: usize, right: usize) -> Result<()> {
    if left == right {
        Ok(())
    } else {
        Err(AlgebraError::DimensionMismatch { left, right })
    }
}

impl<E: Exponent> MonomialOf<E> {
    /// Builds a monomial from its exponent vector (entry `i - 1` is the
    /// exponent of `x_i`).
    pub fn new(exps: Vec<E>) -> Result<Self> {
        if exps.is_empty() {
            return Err(AlgebraError::NoVariables);
        }
        Ok(Self { exps })
    }

    /// Builds a monomial from `u64` exponents, checking the exponent cap.
    pub fn from_exponents(exps: &[u64]) -> Result<Self> {
        let exps = exps
            .iter()
            .map(|&e| E::from_u64_checked(e))
            .collect::<Result<Vec<_>>>()?;
        Self::new(exps)
    }

    /// The unit monomial `1`.
    pub fn one(nvars: usize) -> Result<Self> {
        Self::new(vec![E::zero(); nvars])
    }

    /// `x_index^exp` with a 1-based index.
    pub fn var_power(index: usize, exp: E, nvars: usize) -> Result<Self> {
        let mut m = Self::one(nvars)?;
        if index == 0 || index > nvars {
            return Err(AlgebraError::VariableOutOfRange { index, nvars });
        }
        m.exps[index - 1] = exp;
        Ok(m)
    }

    /// `x_index` with a 1-based index.
    pub fn var(index: usize, nvars: usize) -> Result<Self> {
        Self::var_power(index, E::one(), nvars)
    }

    /// The squarefree monomial `x^F` for a set of 1-based indices.
    pub fn from_support(indices: &[usize], nvars: usize) -> Result<Self> {
        let mut m = Self::one(nvars)?;
        for &index in indices {
            if index == 0 || index > nvars {
                return Err(AlgebraError::VariableOutOfRange { index, nvars });
            }
            m.exps[index - 1] = E::one();
        }
        Ok(m)
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn exponents(&self) -> &[E] {
        &self.exps
    }

    /// Exponent of `x_index` (1-based).
    pub fn exponent(&self, index: usize) -> E {
        self.exps[index - 1]
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|e| e.is_zero())
    }

    pub fn degree(&self) -> u64 {
        self.exps.iter().map(|e| e.to_u64().unwrap_or(u64::MAX)).sum()
    }

    /// 1-based indices of the variables dividing this monomial.
    pub fn support(&self) -> Vec<usize> {
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, e)| !e.is_zero())
            .map(|(i, _)| i + 1)
            .collect()
    }

    pub fn support_size(&self) -> usize {
        self.exps.iter().filter(|e| !e.is_zero()).count()
    }

    pub fn is_squarefree(&self) -> bool {
        self.exps.iter().all(|&e| e <= E::one())
    }

    pub fn squarefree_part(&self) -> Self {
        Self {
            exps: self.exps.iter().map(|&e| e.min(E::one())).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        check_dims(self.nvars(), other.nvars())?;
        let exps = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(&a, &b)| {
                a.checked_add(&b)
                    .ok_or(AlgebraError::ExponentOverflow { cap: E::cap() })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self { exps })
    }

    /// `self^k`, checked.
    pub fn pow(&self, k: u64) -> Result<Self> {
        let factor = E::from_u64_checked(k)?;
        let exps = self
            .exps
            .iter()
            .map(|&a| {
                a.checked_mul(&factor)
                    .ok_or(AlgebraError::ExponentOverflow { cap: E::cap() })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self { exps })
    }

    /// True iff `self` divides `other`.
    pub fn divides(&self, other: &Self) -> Result<bool> {
        check_dims(self.nvars(), other.nvars())?;
        Ok(self.divides_unchecked(other))
    }

    pub(crate) fn divides_unchecked(&self, other: &Self) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    pub fn gcd(&self, other: &Self) -> Result<Self> {
        check_dims(self.nvars(), other.nvars())?;
        Ok(self.zip_with(other, |a, b| a.min(b)))
    }

    pub fn lcm(&self, other: &Self) -> Result<Self> {
        check_dims(self.nvars(), other.nvars())?;
        Ok(self.lcm_unchecked(other))
    }

    pub(crate) fn lcm_unchecked(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a.max(b))
    }

    /// `self / gcd(self, other)`: exponent `i` becomes `max(a_i - b_i, 0)`.
    pub fn quotient(&self, other: &Self) -> Result<Self> {
        check_dims(self.nvars(), other.nvars())?;
        Ok(self.quotient_unchecked(other))
    }

    pub(crate) fn quotient_unchecked(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a.saturating_sub(b))
    }

    fn zip_with(&self, other: &Self, f: impl Fn(E, E) -> E) -> Self {
        Self {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(&a, &b)| f(a, b))
                .collect(),
        }
    }

    /// Parses the canonical text form over `nvars` variables.
    pub fn parse(text: &str, nvars: usize) -> Result<Self> {
        let fail = |reason: &str| AlgebraError::Parse {
            input: text.to_string(),
            reason: reason.to_string(),
        };
        let mut m = Self::one(nvars)?;
        if text == "1" {
            return Ok(m);
        }
        let mut last = 0usize;
        for factor in text.split('*') {
            let body = factor
                .strip_prefix('x')
                .ok_or_else(|| fail("factor must start with 'x'"))?;
            let (index_text, exp_text) = match body.split_once('^') {
                Some((i, e)) => (i, Some(e)),
                None => (body, None),
            };
            let index = parse_decimal(index_text).ok_or_else(|| fail("bad variable index"))?;
            if index == 0 || index > nvars as u64 {
                return Err(AlgebraError::VariableOutOfRange {
                    index: index as usize,
                    nvars,
                });
            }
            let index = index as usize;
            if index <= last {
                return Err(fail("indices must be strictly increasing"));
            }
            last = index;
            let exp = match exp_text {
                None => E::one(),
                Some(e) => {
                    let value = parse_decimal(e).ok_or_else(|| fail("bad exponent"))?;
                    if value < 2 {
                        return Err(fail("explicit exponents must be at least 2"));
                    }
                    E::from_u64_checked(value)?
                }
            };
            m.exps[index - 1] = exp;
        }
        Ok(m)
    }

    /// Order used for generator lists: degree first, then canonical text.
    pub fn canonical_cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.to_string().cmp(&other.to_string()))
    }
}

/// Digits only, no sign, no leading zeros.
fn parse_decimal(text: &str) -> Option<u64> {
    if text.is_empty() || !text.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    if text.len() > 1 && text.starts_with('0') {
        return None;
    }
    text.parse().ok()
}

impl<E: Exponent> fmt::Display for MonomialOf<E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        let mut first = true;
        for (i, e) in self.exps.iter().enumerate() {
            if e.is_zero() {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            write!(f, "x{}", i + 1)?;
            if *e > E::one() {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

impl<E: Exponent> fmt::Debug for MonomialOf<E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Monomial({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    type M = MonomialOf<u32>;

    fn m(text: &str) -> M {
        M::parse(text, 5).unwrap()
    }

    #[test]
    fn mul_examples() {
        assert_eq!(m("x1*x3").mul(&m("x2")).unwrap(), m("x1*x2*x3"));
        let u = m("x1^2*x4");
        assert_eq!(u.mul(&M::one(5).unwrap()).unwrap(), u);
        assert_eq!(m("x1").mul(&m("x1")).unwrap(), m("x1^2"));
    }

    #[test]
    fn divides_examples() {
        assert!(m("x1*x3").divides(&m("x1^2*x3*x5")).unwrap());
        assert!(!m("x2").divides(&m("x1*x3")).unwrap());
        assert!(M::one(5).unwrap().divides(&m("x2^3")).unwrap());
    }

    #[test]
    fn gcd_lcm_quotient_examples() {
        assert_eq!(m("x1*x3").gcd(&m("x1*x4")).unwrap(), m("x1"));
        assert_eq!(m("x1*x3").lcm(&m("x1*x4")).unwrap(), m("x1*x3*x4"));
        assert_eq!(m("x2*x5").gcd(&m("1")).unwrap(), m("1"));
        assert_eq!(m("x1*x4").quotient(&m("x4*x5")).unwrap(), m("x1"));
        assert_eq!(m("x2*x3").quotient(&m("x2*x3")).unwrap(), m("1"));
        assert_eq!(m("x1^2*x3").quotient(&m("x1")).unwrap(), m("x1*x3"));
    }

    #[test]
    fn support_degree_squarefree() {
        assert_eq!(m("x1^2*x3").support(), vec![1, 3]);
        assert_eq!(m("x1*x3*x5").degree(), 3);
        assert_eq!(m("x1^3*x2^2").squarefree_part(), m("x1*x2"));
    }

    #[test]
    fn dimension_mismatch_is_an_error() {
        let a = M::one(3).unwrap();
        let b = M::one(4).unwrap();
        assert_eq!(
            a.mul(&b),
            Err(AlgebraError::DimensionMismatch { left: 3, right: 4 })
        );
        assert!(a.divides(&b).is_err());
        assert!(a.gcd(&b).is_err());
        assert!(a.quotient(&b).is_err());
    }

    #[test]
    fn overflow_fails_loudly() {
        let big = MonomialOf::<u16>::from_exponents(&[u16::MAX as u64, 0]).unwrap();
        let x1 = MonomialOf::<u16>::var(1, 2).unwrap();
        assert!(matches!(
            big.mul(&x1),
            Err(AlgebraError::ExponentOverflow { cap: 65535 })
        ));
        assert!(MonomialOf::<u16>::from_exponents(&[70_000]).is_err());
        assert!(M::from_exponents(&[1 << 16]).is_ok());
    }

    #[test]
    fn text_form() {
        assert_eq!(m("x1*x3^2").to_string(), "x1*x3^2");
        assert_eq!(M::one(3).unwrap().to_string(), "1");
        for bad in ["", "x0", "x3*x1", "x1*x1", "x1^1", "x1^0", "y1", "x01", "x1^", "x6", "x1**x2"] {
            assert!(M::parse(bad, 5).is_err(), "{bad:?} should not parse");
        }
    }

    #[test]
    fn canonical_order_is_degree_then_text() {
        let mut v = [m("x2*x4"), m("x1^2"), m("x5"), m("x1*x3")];
        v.sort_by(|a, b| a.canonical_cmp(b));
        let text: Vec<String> = v.iter().map(|x| x.to_string()).collect();
        assert_eq!(text, ["x5", "x1*x3", "x1^2", "x2*x4"]);
    }
}
