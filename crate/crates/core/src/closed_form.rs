//! Closed-form predictions for the powers of `I = Ind_t(P_n)`: the associated
//! primes of `I^k`, the index of stability, the explicit decomposition of
//! `I^k` when `n = 2t`, and colon witnesses `u` with `I^k : u = P`.

use serde::Serialize;

use crate::error::FamilyError;
use crate::path::{PathCase, PathFamilyParams};
use crate::{IrreducibleComponent, Monomial, VarPrime};

/// A prime `<x_{i_1}, ..., x_{i_m}>` with `m = n - 2t + 2ℓ` and each `i_j`
/// of the same parity as `j`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct ParityPrime {
    pub n: usize,
    pub t: usize,
    pub ell: usize,
    pub indices: Vec<usize>,
}

impl ParityPrime {
    pub fn prime(&self) -> VarPrime {
        VarPrime::new(self.n, self.indices.clone()).expect("parity indices lie in [1, n]")
    }

    /// The complement `A = [n] \ B`.
    pub fn complement(&self) -> Vec<usize> {
        (1..=self.n)
            .filter(|i| self.indices.binary_search(i).is_err())
            .collect()
    }
}

fn invalid(msg: String) -> FamilyError {
    FamilyError::InvalidParams(msg)
}

/// All parity primes for `(n, t, ℓ)` in lexicographic order.
///
/// Defined for `n >= 2t` and `1 <= ℓ <= t`.
pub fn enumerate_parity_primes(n: usize, t: usize, ell: usize) -> Result<Vec<ParityPrime>, FamilyError> {
    if t == 0 || n < 2 * t || ell == 0 || ell > t {
        return Err(invalid(format!(
            "parity primes need n >= 2t and 1 <= ell <= t (n={n}, t={t}, ell={ell})"
        )));
    }
    let m = n - 2 * t + 2 * ell;
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(m);
    extend_parity(1, n, m, &mut current, &mut |indices| {
        out.push(ParityPrime {
            n,
            t,
            ell,
            indices: indices.to_vec(),
        })
    });
    Ok(out)
}

fn extend_parity(start: usize, n: usize, m: usize, current: &mut Vec<usize>, emit: &mut impl FnMut(&[usize])) {
    if current.len() == m {
        emit(current);
        return;
    }
    let j = current.len() + 1;
    let remaining = m - current.len();
    // Later entries need at least one slot each.
    for v in start..=n + 1 - remaining {
        if v % 2 == j % 2 {
            current.push(v);
            extend_parity(v + 1, n, m, current, emit);
            current.pop();
        }
    }
}

fn nonzero_params(n: usize, t: usize, k: Option<usize>) -> Result<PathFamilyParams, FamilyError> {
    let params = PathFamilyParams::new(n, t, k)?;
    if params.is_zero() {
        return Err(FamilyError::ZeroIdeal { n, t });
    }
    Ok(params)
}

/// Predicted `Ass(I^k)`, ordered by size then lexicographically.
pub fn predicted_ass(n: usize, t: usize, k: usize) -> Result<Vec<VarPrime>, FamilyError> {
    let params = nonzero_params(n, t, Some(k))?;
    let mut primes = match params.case() {
        PathCase::Zero => unreachable!("rejected above"),
        PathCase::DegenerateT1 => vec![VarPrime::maximal(n)?],
        PathCase::Case2tMinus1 => (1..=n)
            .step_by(2)
            .map(|i| VarPrime::new(n, vec![i]))
            .collect::<Result<_, _>>()?,
        PathCase::Case2t => {
            let mut v = Vec::new();
            for i in (1..=n).step_by(2) {
                for j in (i + 1..=n).step_by(2) {
                    v.push(VarPrime::new(n, vec![i, j])?);
                }
            }
            v
        }
        PathCase::CaseGt2t => {
            let mut v = Vec::new();
            for ell in 1..=t.min(k) {
                v.extend(enumerate_parity_primes(n, t, ell)?.iter().map(|p| p.prime()));
            }
            v
        }
    };
    primes.sort();
    Ok(primes)
}

/// Predicted index of stability.
pub fn predicted_astab(n: usize, t: usize) -> Result<usize, FamilyError> {
    let params = nonzero_params(n, t, None)?;
    Ok(match params.case() {
        PathCase::CaseGt2t => t,
        _ => 1,
    })
}

/// Predicted stable set `Ass(I^t)`.
pub fn predicted_stable_set(n: usize, t: usize) -> Result<Vec<VarPrime>, FamilyError> {
    nonzero_params(n, t, None)?;
    predicted_ass(n, t, t)
}

/// Predicted normal torsion-freeness.
pub fn predicted_ntf(n: usize, t: usize) -> Result<bool, FamilyError> {
    Ok(predicted_astab(n, t)? == 1)
}

/// The components `<x_i^r, x_j^{k+1-r}>` (odd `i` < even `j` in `[2t]`,
/// `1 <= r <= k`) whose intersection is `Ind_t(P_{2t})^k`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PredictedDecomposition {
    pub t: usize,
    pub k: usize,
    pub components: Vec<IrreducibleComponent>,
}

pub fn predicted_decomposition_2t(t: usize, k: usize) -> Result<PredictedDecomposition, FamilyError> {
    if t < 2 || k == 0 {
        return Err(invalid(format!("need t >= 2 and k >= 1 (t={t}, k={k})")));
    }
    let n = 2 * t;
    let top = u32::try_from(k + 1).map_err(|_| invalid(format!("k={k} too large")))?;
    let mut components = Vec::with_capacity(k * t * (t + 1) / 2);
    for i in (1..=n).step_by(2) {
        for j in (i + 1..=n).step_by(2) {
            for r in 1..top {
                components.push(IrreducibleComponent::new(n, &[(i, r), (j, top - r)])?);
            }
        }
    }
    Ok(PredictedDecomposition { t, k, components })
}

fn support_monomial(indices: &[usize], n: usize) -> Result<Monomial, FamilyError> {
    Ok(Monomial::from_support(indices, n)?)
}

/// A monomial `u` with `u ∉ I^k` and `I^k : u = P`, for `P` in
/// [`predicted_ass`].
///
/// For `n = 2t` this is `(x_{i_1} x^A)^{k-1} x^A`, independent of `i_2`. For
/// `n > 2t` and `ℓ >= 2` it is
/// `(x^A u_1)^{k-ℓ+1} (x^A u_3) ... (x^A u_{2ℓ-3}) (x^A w)` where
/// `u_{2j-1} = x_{i_1} x_{i_3} ... x_{i_{2ℓ+1}} / x_{i_{2j-1}}` and
/// `w = x_{i_1} x_{i_3} ... x_{i_{2ℓ-3}}`. For `ℓ = 1` the `n = 2t` shape is
/// reused. When `n = 2t - 1` and `P = <x_i>`, `u = g^{k-1} (g / x_i)` with
/// `g` the single generator; when `t = 1`, `u = x_1^{k-1}`.
pub fn witness_monomial(n: usize, t: usize, k: usize, prime: &VarPrime) -> Result<Monomial, FamilyError> {
    let params = nonzero_params(n, t, Some(k))?;
    let predicted = predicted_ass(n, t, k)?;
    if prime.nvars() != n || !predicted.contains(prime) {
        return Err(FamilyError::NotPredicted {
            prime: prime.to_string(),
            n,
            t,
            k,
        });
    }
    let k64 = k as u64;
    let a = support_monomial(&prime.complement(), n)?;
    let vars = prime.vars();
    let u = match params.case() {
        PathCase::Zero => unreachable!("rejected above"),
        PathCase::DegenerateT1 => Monomial::var(1, n)?.pow(k64 - 1)?,
        PathCase::Case2tMinus1 => {
            let odd: Vec<usize> = (1..=n).step_by(2).collect();
            let g = support_monomial(&odd, n)?;
            let rest = g.quotient(&Monomial::var(vars[0], n)?)?;
            g.pow(k64 - 1)?.mul(&rest)?
        }
        PathCase::Case2t => {
            let base = a.mul(&Monomial::var(vars[0], n)?)?;
            base.pow(k64 - 1)?.mul(&a)?
        }
        PathCase::CaseGt2t => {
            let ell = (prime.len() + 2 * t - n) / 2;
            if ell > k {
                return Err(invalid(format!("ell={ell} exceeds k={k}")));
            }
            if ell == 1 {
                let base = a.mul(&Monomial::var(vars[0], n)?)?;
                base.pow(k64 - 1)?.mul(&a)?
            } else {
                // Position p (1-based) of the prime's listing is vars[p - 1].
                let odd_upto = |last: usize| -> Vec<usize> { (1..=last).step_by(2).map(|p| vars[p - 1]).collect() };
                let top = support_monomial(&odd_upto(2 * ell + 1), n)?;
                let u_odd = |j: usize| -> Result<Monomial, FamilyError> {
                    Ok(top.quotient(&Monomial::var(vars[2 * j - 2], n)?)?)
                };
                let w = support_monomial(&odd_upto(2 * ell - 3), n)?;
                let mut u = a.mul(&u_odd(1)?)?.pow((k - ell + 1) as u64)?;
                for j in 2..ell {
                    u = u.mul(&a.mul(&u_odd(j)?)?)?;
                }
                u.mul(&a.mul(&w)?)?
            }
        }
    };
    Ok(u)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn prime(n: usize, vars: &[usize]) -> VarPrime {
        VarPrime::new(n, vars.to_vec()).unwrap()
    }

    fn indices(ps: &[ParityPrime]) -> Vec<Vec<usize>> {
        ps.iter().map(|p| p.indices.clone()).collect()
    }

    #[test]
    fn parity_prime_examples() {
        assert_eq!(
            indices(&enumerate_parity_primes(5, 2, 1).unwrap()),
            vec![vec![1, 2, 3], vec![1, 2, 5], vec![1, 4, 5], vec![3, 4, 5]]
        );
        assert_eq!(
            indices(&enumerate_parity_primes(5, 2, 2).unwrap()),
            vec![vec![1, 2, 3, 4, 5]]
        );
        assert_eq!(
            indices(&enumerate_parity_primes(6, 2, 1).unwrap()),
            vec![
                vec![1, 2, 3, 4],
                vec![1, 2, 3, 6],
                vec![1, 2, 5, 6],
                vec![1, 4, 5, 6],
                vec![3, 4, 5, 6]
            ]
        );
        assert!(enumerate_parity_primes(3, 2, 1).is_err());
        assert!(enumerate_parity_primes(6, 2, 3).is_err());
    }

    #[test]
    fn predicted_ass_examples() {
        for k in 1..=4 {
            assert_eq!(predicted_ass(3, 2, k).unwrap(), vec![prime(3, &[1]), prime(3, &[3])]);
            assert_eq!(
                predicted_ass(4, 2, k).unwrap(),
                vec![prime(4, &[1, 2]), prime(4, &[1, 4]), prime(4, &[3, 4])]
            );
        }
        assert_eq!(predicted_ass(5, 2, 1).unwrap().len(), 4);
        let two = predicted_ass(5, 2, 2).unwrap();
        assert_eq!(two.len(), 5);
        assert_eq!(two[4], VarPrime::maximal(5).unwrap());
        assert_eq!(predicted_ass(6, 1, 3).unwrap(), vec![VarPrime::maximal(6).unwrap()]);
        assert_eq!(predicted_ass(4, 3, 1), Err(FamilyError::ZeroIdeal { n: 4, t: 3 }));
        assert!(predicted_ass(4, 2, 0).is_err());
    }

    #[test]
    fn stability_predictions() {
        assert_eq!(predicted_astab(4, 2).unwrap(), 1);
        assert!(predicted_ntf(4, 2).unwrap());
        assert_eq!(predicted_astab(5, 2).unwrap(), 2);
        assert!(!predicted_ntf(5, 2).unwrap());
        assert_eq!(predicted_astab(9, 3).unwrap(), 3);
        assert_eq!(predicted_stable_set(9, 3).unwrap(), predicted_ass(9, 3, 3).unwrap());
        assert!(predicted_astab(2, 2).is_err());
    }

    #[test]
    fn decomposition_2t_examples() {
        let d = predicted_decomposition_2t(2, 1).unwrap();
        let text: Vec<String> = d.components.iter().map(|c| c.to_string()).collect();
        assert_eq!(text, ["<x1, x2>", "<x1, x4>", "<x3, x4>"]);
        assert_eq!(predicted_decomposition_2t(2, 2).unwrap().components.len(), 6);
        assert_eq!(predicted_decomposition_2t(3, 2).unwrap().components.len(), 12);
        assert!(predicted_decomposition_2t(1, 2).is_err());
        assert!(predicted_decomposition_2t(2, 0).is_err());
    }

    #[test]
    fn witness_examples() {
        let u = witness_monomial(5, 2, 1, &prime(5, &[1, 2, 3])).unwrap();
        assert_eq!(u.to_string(), "x4*x5");
        let u = witness_monomial(5, 2, 2, &VarPrime::maximal(5).unwrap()).unwrap();
        assert_eq!(u.to_string(), "x1*x3*x5");
        let u = witness_monomial(4, 2, 2, &prime(4, &[1, 4])).unwrap();
        assert_eq!(u.to_string(), "x1*x2^2*x3^2");
    }

    #[test]
    fn witness_rejects_unpredicted_primes() {
        let err = witness_monomial(5, 2, 1, &VarPrime::maximal(5).unwrap());
        assert!(matches!(err, Err(FamilyError::NotPredicted { .. })));
        let err = witness_monomial(5, 2, 1, &prime(5, &[1, 2, 4]));
        assert!(matches!(err, Err(FamilyError::NotPredicted { .. })));
    }

    #[test]
    fn boundary_witnesses() {
        let u = witness_monomial(5, 3, 3, &prime(5, &[3])).unwrap();
        assert_eq!(u.to_string(), "x1^3*x3^2*x5^3");
        let u = witness_monomial(4, 1, 3, &VarPrime::maximal(4).unwrap()).unwrap();
        assert_eq!(u.to_string(), "x1^2");
    }
}
