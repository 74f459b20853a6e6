//! The path family `Ind_t(P_n)`: ideals generated by `x^S` over the
//! independent `t`-subsets `S` of the path `1 - 2 - ... - n`.

use std::fmt;

use serde::Serialize;

use crate::error::{AlgebraError, FamilyError};
use crate::{Monomial, MonomialIdeal, VarPrime};

/// Largest path length accepted by the enumerators.
pub const MAX_PATH_VERTICES: usize = 24;

/// Which regime `(n, t)` falls in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum PathCase {
    /// `t = 1`: the maximal ideal.
    DegenerateT1,
    /// `n < 2t - 1`: no independent `t`-set exists.
    Zero,
    /// `n = 2t - 1`: a single generator `x1 x3 ... x_{2t-1}`.
    #[serde(rename = "CASE_2T_MINUS_1")]
    Case2tMinus1,
    /// `n = 2t`.
    #[serde(rename = "CASE_2T")]
    Case2t,
    /// `n > 2t`.
    #[serde(rename = "CASE_GT_2T")]
    CaseGt2t,
}

impl PathCase {
    pub fn classify(n: usize, t: usize) -> Self {
        if t == 1 {
            PathCase::DegenerateT1
        } else if n + 1 < 2 * t {
            PathCase::Zero
        } else if n + 1 == 2 * t {
            PathCase::Case2tMinus1
        } else if n == 2 * t {
            PathCase::Case2t
        } else {
            PathCase::CaseGt2t
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            PathCase::DegenerateT1 => "DEGENERATE_T1",
            PathCase::Zero => "ZERO",
            PathCase::Case2tMinus1 => "CASE_2T_MINUS_1",
            PathCase::Case2t => "CASE_2T",
            PathCase::CaseGt2t => "CASE_GT_2T",
        }
    }
}

impl fmt::Display for PathCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// Parameters `(n, t)` and optionally the power `k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct PathFamilyParams {
    pub n: usize,
    pub t: usize,
    pub k: Option<usize>,
}

impl PathFamilyParams {
    pub fn new(n: usize, t: usize, k: Option<usize>) -> Result<Self, FamilyError> {
        if n == 0 || t == 0 || k == Some(0) {
            return Err(FamilyError::InvalidParams(format!(
                "n, t, k must be positive (n={n}, t={t}, k={k:?})"
            )));
        }
        Ok(Self { n, t, k })
    }

    pub fn case(&self) -> PathCase {
        PathCase::classify(self.n, self.t)
    }

    pub fn is_zero(&self) -> bool {
        self.case() == PathCase::Zero
    }
}

fn check_cap(n: usize) -> Result<(), FamilyError> {
    if n > MAX_PATH_VERTICES {
        return Err(AlgebraError::EnumerationCap {
            nvars: n,
            cap: MAX_PATH_VERTICES,
        }
        .into());
    }
    Ok(())
}

/// All independent `t`-subsets of the path on `n` vertices, lexicographic.
pub fn independent_sets(n: usize, t: usize) -> Result<Vec<Vec<usize>>, FamilyError> {
    check_cap(n)?;
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(t);
    extend_independent(1, n, t, &mut current, &mut out);
    Ok(out)
}

fn extend_independent(
    start: usize,
    n: usize,
    t: usize,
    current: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    if current.len() == t {
        out.push(current.clone());
        return;
    }
    let remaining = t - current.len();
    // The smallest admissible tail from `v` ends at v + 2(remaining - 1).
    let mut v = start;
    while v + 2 * (remaining - 1) <= n {
        current.push(v);
        extend_independent(v + 2, n, t, current, out);
        current.pop();
        v += 1;
    }
}

/// `Ind_t(P_n)`; the zero ideal when `n < 2t - 1`.
pub fn ind_ideal(n: usize, t: usize) -> Result<MonomialIdeal, FamilyError> {
    PathFamilyParams::new(n, t, None)?;
    let gens = independent_sets(n, t)?
        .iter()
        .map(|s| Monomial::from_support(s, n))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(MonomialIdeal::minimize(n, gens)?)
}

/// `g_i = x1 x3 ... x_{2i-1} * x_{2i+2} x_{2i+4} ... x_{2t}` in `2t` variables.
pub fn g_generator(t: usize, i: usize) -> Result<Monomial, FamilyError> {
    if t == 0 || i > t {
        return Err(FamilyError::InvalidParams(format!(
            "g_i needs 0 <= i <= t (t={t}, i={i})"
        )));
    }
    let odd = (1..=i).map(|j| 2 * j - 1);
    let even = (i + 1..=t).map(|j| 2 * j);
    let support: Vec<usize> = odd.chain(even).collect();
    Ok(Monomial::from_support(&support, 2 * t)?)
}

/// Sizes of the maximal runs of consecutive indices in `[n] \ P`, left to
/// right.
pub fn complement_components(n: usize, prime: &VarPrime) -> Vec<usize> {
    let mut runs = Vec::new();
    let mut current = 0;
    for i in 1..=n {
        if prime.contains_var(i) {
            if current > 0 {
                runs.push(current);
            }
            current = 0;
        } else {
            current += 1;
        }
    }
    if current > 0 {
        runs.push(current);
    }
    runs
}

/// The three checks on a candidate prime `B` with parameter `ℓ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ParityPrimeCheck {
    /// `|[n] \ B| == 2t - 2ℓ`.
    pub complement_size: bool,
    /// Every independent `t`-set meets `B` in at least `ℓ` elements.
    pub min_intersection: bool,
    /// `x^H x^A ∈ Ind_t(P_n)` for every `ℓ`-subset `H` of `B` with no two
    /// elements adjacent in the listing of `B`.
    pub cover_membership: bool,
}

impl ParityPrimeCheck {
    pub fn all(&self) -> bool {
        self.complement_size && self.min_intersection && self.cover_membership
    }
}

pub fn check_parity_prime(
    n: usize,
    t: usize,
    b: &VarPrime,
    ell: usize,
) -> Result<ParityPrimeCheck, FamilyError> {
    if b.nvars() != n {
        return Err(FamilyError::InvalidParams(format!(
            "prime lives in {} variables, expected {n}",
            b.nvars()
        )));
    }
    if t == 0 || ell == 0 || ell > t {
        return Err(FamilyError::InvalidParams(format!(
            "need 1 <= ell <= t (t={t}, ell={ell})"
        )));
    }
    let a = b.complement();
    let complement_size = a.len() + 2 * ell == 2 * t;

    let sets = independent_sets(n, t)?;
    let min_intersection = sets
        .iter()
        .all(|s| s.iter().filter(|&&v| b.contains_var(v)).count() >= ell);

    let ideal = ind_ideal(n, t)?;
    let mut cover_membership = true;
    for positions in spread_subsets(b.len(), ell) {
        let mut support: Vec<usize> = positions.iter().map(|&p| b.vars()[p]).collect();
        support.extend_from_slice(&a);
        let m = Monomial::from_support(&support, n)?;
        if !ideal.contains(&m)? {
            cover_membership = false;
            break;
        }
    }
    Ok(ParityPrimeCheck {
        complement_size,
        min_intersection,
        cover_membership,
    })
}

/// `size`-subsets of `0..len` with no two consecutive positions.
fn spread_subsets(len: usize, size: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, len: usize, size: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == size {
            out.push(cur.clone());
            return;
        }
        for p in start..len {
            cur.push(p);
            go(p + 2, len, size, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, len, size, &mut Vec::new(), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn prime(n: usize, vars: &[usize]) -> VarPrime {
        VarPrime::new(n, vars.to_vec()).unwrap()
    }

    #[test]
    fn independent_set_examples() {
        assert_eq!(
            independent_sets(4, 2).unwrap(),
            vec![vec![1, 3], vec![1, 4], vec![2, 4]]
        );
        assert_eq!(independent_sets(7, 4).unwrap(), vec![vec![1, 3, 5, 7]]);
        assert_eq!(independent_sets(5, 2).unwrap().len(), 6);
        assert!(independent_sets(3, 3).unwrap().is_empty());
        assert!(independent_sets(25, 2).is_err());
    }

    #[test]
    fn ind_ideal_examples() {
        assert_eq!(ind_ideal(3, 2).unwrap().gen_strings(), ["x1*x3"]);
        assert_eq!(
            ind_ideal(4, 2).unwrap().gen_strings(),
            ["x1*x3", "x1*x4", "x2*x4"]
        );
        assert_eq!(
            ind_ideal(4, 1).unwrap().gen_strings(),
            ["x1", "x2", "x3", "x4"]
        );
        assert!(ind_ideal(4, 3).unwrap().is_zero());
    }

    #[test]
    fn g_generator_examples() {
        assert_eq!(g_generator(2, 0).unwrap().to_string(), "x2*x4");
        assert_eq!(g_generator(2, 2).unwrap().to_string(), "x1*x3");
        assert_eq!(g_generator(3, 1).unwrap().to_string(), "x1*x4*x6");
        assert!(g_generator(2, 3).is_err());
        let gs: Vec<_> = (0..=3).map(|i| g_generator(3, i).unwrap()).collect();
        let ideal = MonomialIdeal::minimize(6, gs).unwrap();
        assert_eq!(ideal, ind_ideal(6, 3).unwrap());
    }

    #[test]
    fn complement_component_examples() {
        assert_eq!(complement_components(5, &prime(5, &[1, 2, 3])), vec![2]);
        assert_eq!(complement_components(5, &prime(5, &[1, 2, 4])), vec![1, 1]);
        assert!(complement_components(4, &prime(4, &[1, 2, 3, 4])).is_empty());
        assert_eq!(complement_components(7, &prime(7, &[3, 6])), vec![2, 2, 1]);
    }

    #[test]
    fn parity_prime_check_examples() {
        let all = ParityPrimeCheck {
            complement_size: true,
            min_intersection: true,
            cover_membership: true,
        };
        assert_eq!(check_parity_prime(5, 2, &prime(5, &[1, 2, 3]), 1).unwrap(), all);
        assert_eq!(check_parity_prime(6, 2, &VarPrime::maximal(6).unwrap(), 2).unwrap(), all);
        let wrong = check_parity_prime(5, 2, &prime(5, &[1, 2]), 1).unwrap();
        assert!(!wrong.complement_size);
        assert!(check_parity_prime(5, 2, &prime(4, &[1, 2]), 1).is_err());
        assert!(check_parity_prime(5, 2, &prime(5, &[1, 2, 3]), 3).is_err());
    }

    #[test]
    fn case_tags() {
        assert_eq!(PathCase::classify(5, 1), PathCase::DegenerateT1);
        assert_eq!(PathCase::classify(4, 3), PathCase::Zero);
        assert_eq!(PathCase::classify(5, 3), PathCase::Case2tMinus1);
        assert_eq!(PathCase::classify(6, 3), PathCase::Case2t);
        assert_eq!(PathCase::classify(7, 3), PathCase::CaseGt2t);
        assert!(PathFamilyParams::new(4, 2, Some(0)).is_err());
    }

    #[test]
    fn spread_subsets_skip_neighbours() {
        assert_eq!(spread_subsets(4, 2), vec![vec![0, 2], vec![0, 3], vec![1, 3]]);
        assert_eq!(spread_subsets(3, 1).len(), 3);
    }
}
