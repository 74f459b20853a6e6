//! Irreducible decomposition of monomial ideals and the associated primes
//! derived from it.
//!
//! The decomposition splits on a mixed-support generator
//! `g = x_i^a * h`: `I = (I + <x_i^a>) ∩ (I + <h>)`. Recursion stops once every
//! generator is a pure power, at which point the ideal is irreducible.
//! Results are memoized on the canonical ideal in a bounded LRU cache that is
//! shared between threads.

use std::cmp::Ordering;
use std::fmt;
use std::num::NonZeroUsize;
use std::sync::{Arc, Mutex};
use std::time::Instant;

use lru::LruCache;
use serde::{Serialize, Serializer};

use crate::error::{AlgebraError, Result};
use crate::ideal::{Colon, MonomialIdealOf};
use crate::monomial::{Exponent, MonomialOf};

/// A prime generated by a non-empty set of variables.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VarPrime {
    nvars: usize,
    vars: Vec<usize>,
}

impl VarPrime {
    /// `vars` are 1-based indices; they are sorted and deduplicated here.
    pub fn new(nvars: usize, mut vars: Vec<usize>) -> Result<Self> {
        vars.sort_unstable();
        vars.dedup();
        if vars.is_empty() {
            return Err(AlgebraError::InvalidPrime("no variables".into()));
        }
        if let Some(&bad) = vars.iter().find(|&&v| v == 0 || v > nvars) {
            return Err(AlgebraError::VariableOutOfRange { index: bad, nvars });
        }
        Ok(Self { nvars, vars })
    }

    /// `<x_1, ..., x_n>`.
    pub fn maximal(nvars: usize) -> Result<Self> {
        Self::new(nvars, (1..=nvars).collect())
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn vars(&self) -> &[usize] {
        &self.vars
    }

    pub fn len(&self) -> usize {
        self.vars.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vars.is_empty()
    }

    pub fn contains_var(&self, index: usize) -> bool {
        self.vars.binary_search(&index).is_ok()
    }

    /// Indices in `[1, nvars]` not in the prime.
    pub fn complement(&self) -> Vec<usize> {
        (1..=self.nvars).filter(|i| !self.contains_var(*i)).collect()
    }

    pub fn to_ideal<E: Exponent>(&self) -> Result<MonomialIdealOf<E>> {
        let gens = self
            .vars
            .iter()
            .map(|&i| MonomialOf::var(i, self.nvars))
            .collect::<Result<Vec<_>>>()?;
        MonomialIdealOf::minimize(self.nvars, gens)
    }
}

impl Ord for VarPrime {
    /// Smaller primes first, then lexicographic on indices.
    fn cmp(&self, other: &Self) -> Ordering {
        self.vars
            .len()
            .cmp(&other.vars.len())
            .then_with(|| self.vars.cmp(&other.vars))
            .then_with(|| self.nvars.cmp(&other.nvars))
    }
}

impl PartialOrd for VarPrime {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for VarPrime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("<")?;
        for (pos, i) in self.vars.iter().enumerate() {
            if pos > 0 {
                f.write_str(",")?;
            }
            write!(f, "x{i}")?;
        }
        f.write_str(">")
    }
}

impl fmt::Debug for VarPrime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "VarPrime{self}")
    }
}

/// Serialized as the sorted index array.
impl Serialize for VarPrime {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.vars.serialize(serializer)
    }
}

/// An irreducible monomial ideal `<x_i^{a_i} : i in S>`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IrreducibleComponentOf<E> {
    // Dense; zero marks an absent variable.
    exps: Vec<E>,
}

impl<E: Exponent> IrreducibleComponentOf<E> {
    /// Builds `<x_i^{a_i}>` from `(index, exponent)` pairs with 1-based indices.
    pub fn new(nvars: usize, powers: &[(usize, E)]) -> Result<Self> {
        if nvars == 0 {
            return Err(AlgebraError::NoVariables);
        }
        if powers.is_empty() {
            return Err(AlgebraError::InvalidComponent("no generators".into()));
        }
        let mut exps = vec![E::zero(); nvars];
        for &(index, exp) in powers {
            if index == 0 || index > nvars {
                return Err(AlgebraError::VariableOutOfRange { index, nvars });
            }
            if exp.is_zero() {
                return Err(AlgebraError::InvalidComponent(format!(
                    "x{index} has exponent 0"
                )));
            }
            if !exps[index - 1].is_zero() {
                return Err(AlgebraError::InvalidComponent(format!(
                    "x{index} listed twice"
                )));
            }
            exps[index - 1] = exp;
        }
        Ok(Self { exps })
    }

    /// Reads a component off an ideal whose generators are all pure powers.
    fn from_pure_powers(ideal: &MonomialIdealOf<E>) -> Self {
        let mut exps = vec![E::zero(); ideal.nvars()];
        for g in ideal.gens() {
            for (i, &e) in g.exponents().iter().enumerate() {
                if !e.is_zero() {
                    exps[i] = e;
                }
            }
        }
        Self { exps }
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    /// `(index, exponent)` pairs in increasing index order.
    pub fn powers(&self) -> Vec<(usize, E)> {
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, e)| !e.is_zero())
            .map(|(i, &e)| (i + 1, e))
            .collect()
    }

    pub fn exponent(&self, index: usize) -> Option<E> {
        let e = self.exps[index - 1];
        (!e.is_zero()).then_some(e)
    }

    /// The radical, a variable prime.
    pub fn radical(&self) -> VarPrime {
        VarPrime {
            nvars: self.exps.len(),
            vars: self.powers().into_iter().map(|(i, _)| i).collect(),
        }
    }

    pub fn contains(&self, m: &MonomialOf<E>) -> bool {
        self.exps
            .iter()
            .zip(m.exponents())
            .any(|(&a, &b)| !a.is_zero() && b >= a)
    }

    /// True iff `other ⊆ self`: every generator `x_i^b` of `other` is
    /// divisible by a generator `x_i^a` of `self`, i.e. `a <= b`.
    pub fn contains_component(&self, other: &Self) -> bool {
        self.exps
            .iter()
            .zip(&other.exps)
            .all(|(&a, &b)| b.is_zero() || (!a.is_zero() && a <= b))
    }

    pub fn to_ideal(&self) -> Result<MonomialIdealOf<E>> {
        let gens = self
            .powers()
            .into_iter()
            .map(|(i, e)| MonomialOf::var_power(i, e, self.exps.len()))
            .collect::<Result<Vec<_>>>()?;
        MonomialIdealOf::minimize(self.exps.len(), gens)
    }

    /// Generators as canonical monomial strings, increasing index.
    pub fn gen_strings(&self) -> Vec<String> {
        self.powers()
            .into_iter()
            .map(|(i, e)| {
                if e > E::one() {
                    format!("x{i}^{e}")
                } else {
                    format!("x{i}")
                }
            })
            .collect()
    }

    fn sort_key(&self) -> (Vec<usize>, Vec<u64>) {
        let powers = self.powers();
        (
            powers.iter().map(|(i, _)| *i).collect(),
            powers
                .iter()
                .map(|(_, e)| e.to_u64().unwrap_or(u64::MAX))
                .collect(),
        )
    }
}

impl<E: Exponent> fmt::Display for IrreducibleComponentOf<E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<{}>", self.gen_strings().join(", "))
    }
}

impl<E: Exponent> fmt::Debug for IrreducibleComponentOf<E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Component{self}")
    }
}

impl<E: Exponent> Serialize for IrreducibleComponentOf<E> {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.gen_strings().serialize(serializer)
    }
}

fn canonical_components<E: Exponent>(components: &mut Vec<IrreducibleComponentOf<E>>) {
    components.sort_by_cached_key(|c| c.sort_key());
    components.dedup();
}

/// Drops every component that contains a different one. Input must be
/// canonical (sorted and deduplicated).
fn prune_containing<E: Exponent>(
    components: Vec<IrreducibleComponentOf<E>>,
) -> Vec<IrreducibleComponentOf<E>> {
    let keep: Vec<bool> = components
        .iter()
        .enumerate()
        .map(|(i, q)| {
            !components
                .iter()
                .enumerate()
                .any(|(j, other)| i != j && q.contains_component(other))
        })
        .collect();
    components
        .into_iter()
        .zip(keep)
        .filter_map(|(c, k)| k.then_some(c))
        .collect()
}

/// True iff the intersection of `others` lies inside `q`.
///
/// The monomials outside `q` have exponent below `a_i` on each generator
/// variable of `q`; the largest of them (exponent `a_i - 1` there, unbounded
/// elsewhere) is in every ideal of `others` exactly when some monomial outside
/// `q` is in their intersection.
fn intersection_inside<E: Exponent>(
    q: &IrreducibleComponentOf<E>,
    others: impl Iterator<Item = impl std::ops::Deref<Target = IrreducibleComponentOf<E>>>,
) -> bool {
    let mut saw_any = false;
    for other in others {
        saw_any = true;
        let corner_in_other = other.exps.iter().zip(&q.exps).any(|(&b, &a)| {
            !b.is_zero() && (a.is_zero() || b < a)
        });
        if !corner_in_other {
            return true;
        }
    }
    // An empty intersection is the unit ideal.
    !saw_any
}

/// Reduces a decomposition of `ideal` to an irredundant one.
///
/// Components containing another component are dropped first; then any
/// component whose removal leaves the intersection unchanged is removed, one
/// at a time. The result is in canonical order.
pub fn irredundant_filter<E: Exponent>(
    components: Vec<IrreducibleComponentOf<E>>,
    ideal: &MonomialIdealOf<E>,
) -> Result<Vec<IrreducibleComponentOf<E>>> {
    for c in &components {
        if c.nvars() != ideal.nvars() {
            return Err(AlgebraError::DimensionMismatch {
                left: ideal.nvars(),
                right: c.nvars(),
            });
        }
    }
    let mut components = components;
    canonical_components(&mut components);
    let mut components = prune_containing(components);
    let mut i = 0;
    while i < components.len() {
        let redundant = components.len() > 1
            && intersection_inside(
                &components[i],
                components
                    .iter()
                    .enumerate()
                    .filter(|(j, _)| *j != i)
                    .map(|(_, c)| c),
            );
        if redundant {
            components.remove(i);
            i = 0;
        } else {
            i += 1;
        }
    }
    Ok(components)
}

/// Intersection of a list of components.
pub fn intersect_components<E: Exponent>(
    components: &[IrreducibleComponentOf<E>],
) -> Result<Option<MonomialIdealOf<E>>> {
    let mut acc: Option<MonomialIdealOf<E>> = None;
    for c in components {
        let ideal = c.to_ideal()?;
        acc = Some(match acc {
            None => ideal,
            Some(prev) => prev.intersect(&ideal)?,
        });
    }
    Ok(acc)
}

/// Tuning for [`Decomposer`].
#[derive(Clone, Debug)]
pub struct DecomposeOptions {
    /// Maximum number of memoized subideals; least recently used entries are
    /// evicted first.
    pub cache_capacity: usize,
    /// Recursion levels that fan out onto the rayon pool. Zero is serial.
    pub parallel_depth: usize,
}

impl Default for DecomposeOptions {
    fn default() -> Self {
        Self {
            cache_capacity: 200_000,
            parallel_depth: 0,
        }
    }
}

type Components<E> = Arc<Vec<IrreducibleComponentOf<E>>>;

/// Memoizing irreducible decomposition engine.
///
/// One instance may be shared across threads; the cache is behind a mutex and
/// insertion keeps whichever result landed first, which is identical anyway
/// because irredundant irreducible decompositions are unique.
pub struct Decomposer<E: Exponent> {
    cache: Mutex<LruCache<MonomialIdealOf<E>, Components<E>>>,
    options: DecomposeOptions,
}

impl<E: Exponent> Default for Decomposer<E> {
    fn default() -> Self {
        Self::new(DecomposeOptions::default())
    }
}

impl<E: Exponent> Decomposer<E> {
    pub fn new(options: DecomposeOptions) -> Self {
        let cap = NonZeroUsize::new(options.cache_capacity.max(1)).expect("nonzero");
        Self {
            cache: Mutex::new(LruCache::new(cap)),
            options,
        }
    }

    pub fn options(&self) -> &DecomposeOptions {
        &self.options
    }

    pub fn cached_entries(&self) -> usize {
        self.cache.lock().expect("cache poisoned").len()
    }

    /// Irredundant irreducible decomposition, canonical order.
    pub fn decompose(&self, ideal: &MonomialIdealOf<E>) -> Result<Vec<IrreducibleComponentOf<E>>> {
        self.decompose_until(ideal, None)
    }

    /// As [`Decomposer::decompose`], giving up with
    /// [`AlgebraError::BudgetExhausted`] once `deadline` passes.
    pub fn decompose_until(
        &self,
        ideal: &MonomialIdealOf<E>,
        deadline: Option<Instant>,
    ) -> Result<Vec<IrreducibleComponentOf<E>>> {
        if ideal.is_zero() {
            return Err(AlgebraError::ZeroIdeal);
        }
        let split = self.split(ideal, deadline, 0)?;
        irredundant_filter(split.as_ref().clone(), ideal)
    }

    /// Associated primes: radicals of the irredundant components.
    pub fn associated_primes(&self, ideal: &MonomialIdealOf<E>) -> Result<Vec<VarPrime>> {
        self.associated_primes_until(ideal, None)
    }

    pub fn associated_primes_until(
        &self,
        ideal: &MonomialIdealOf<E>,
        deadline: Option<Instant>,
    ) -> Result<Vec<VarPrime>> {
        let components = self.decompose_until(ideal, deadline)?;
        Ok(primes_of(&components))
    }

    fn split(
        &self,
        ideal: &MonomialIdealOf<E>,
        deadline: Option<Instant>,
        depth: usize,
    ) -> Result<Components<E>> {
        if deadline.is_some_and(|d| Instant::now() >= d) {
            return Err(AlgebraError::BudgetExhausted);
        }
        if let Some(hit) = self.cache.lock().expect("cache poisoned").get(ideal) {
            return Ok(Arc::clone(hit));
        }

        let pivot = ideal.gens().iter().find(|g| g.support_size() >= 2);
        let components = match pivot {
            None => vec![IrreducibleComponentOf::from_pure_powers(ideal)],
            Some(g) => {
                let index = g.support()[0];
                let power = MonomialOf::var_power(index, g.exponent(index), ideal.nvars())?;
                let rest = g.quotient_unchecked(&power);
                let left = ideal.add_generator(&power)?;
                let right = ideal.add_generator(&rest)?;
                let (l, r) = if depth < self.options.parallel_depth {
                    rayon::join(
                        || self.split(&left, deadline, depth + 1),
                        || self.split(&right, deadline, depth + 1),
                    )
                } else {
                    (
                        self.split(&left, deadline, depth + 1),
                        self.split(&right, deadline, depth + 1),
                    )
                };
                let mut union: Vec<_> = l?.iter().chain(r?.iter()).cloned().collect();
                canonical_components(&mut union);
                prune_containing(union)
            }
        };

        let components = Arc::new(components);
        let mut cache = self.cache.lock().expect("cache poisoned");
        Ok(Arc::clone(
            cache.get_or_insert(ideal.clone(), || Arc::clone(&components)),
        ))
    }
}

/// Deduplicated radicals of a list of components, canonical order.
pub fn primes_of<E: Exponent>(components: &[IrreducibleComponentOf<E>]) -> Vec<VarPrime> {
    let mut primes: Vec<VarPrime> = components.iter().map(|c| c.radical()).collect();
    primes.sort();
    primes.dedup();
    primes
}

/// One-shot decomposition with default options.
pub fn irreducible_decomposition<E: Exponent>(
    ideal: &MonomialIdealOf<E>,
) -> Result<Vec<IrreducibleComponentOf<E>>> {
    Decomposer::default().decompose(ideal)
}

/// One-shot associated primes with default options.
pub fn associated_primes<E: Exponent>(ideal: &MonomialIdealOf<E>) -> Result<Vec<VarPrime>> {
    Decomposer::default().associated_primes(ideal)
}

/// Why a candidate witness failed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum WitnessVerdict {
    Verified,
    /// `u` already lies in `I^k`, so the colon is the unit ideal.
    InPower,
    /// The colon contains a monomial outside the prime.
    ColonTooBig,
    /// The colon is strictly inside the prime.
    ColonTooSmall,
}

impl WitnessVerdict {
    pub fn is_verified(self) -> bool {
        self == WitnessVerdict::Verified
    }

    pub fn reason(self) -> &'static str {
        match self {
            WitnessVerdict::Verified => "verified",
            WitnessVerdict::InPower => "u in I^k",
            WitnessVerdict::ColonTooBig => "colon too big",
            WitnessVerdict::ColonTooSmall => "colon too small",
        }
    }
}

/// Checks `u ∉ I^k` and `I^k : u == P`.
pub fn verify_witness<E: Exponent>(
    ideal: &MonomialIdealOf<E>,
    k: u32,
    u: &MonomialOf<E>,
    prime: &VarPrime,
) -> Result<WitnessVerdict> {
    let power = ideal.power(k)?;
    verify_witness_in_power(&power, u, prime)
}

/// As [`verify_witness`] with the power already computed.
pub fn verify_witness_in_power<E: Exponent>(
    power: &MonomialIdealOf<E>,
    u: &MonomialOf<E>,
    prime: &VarPrime,
) -> Result<WitnessVerdict> {
    if prime.nvars() != power.nvars() {
        return Err(AlgebraError::DimensionMismatch {
            left: power.nvars(),
            right: prime.nvars(),
        });
    }
    let colon = match power.colon_monomial(u)? {
        Colon::Unit => return Ok(WitnessVerdict::InPower),
        Colon::Proper(c) => c,
    };
    let target = prime.to_ideal::<E>()?;
    if colon == target {
        Ok(WitnessVerdict::Verified)
    } else if !colon.is_subset(&target)? {
        Ok(WitnessVerdict::ColonTooBig)
    } else {
        Ok(WitnessVerdict::ColonTooSmall)
    }
}

/// Largest variable count accepted by [`minimal_primes_squarefree`].
pub const MAX_TRANSVERSAL_VARS: usize = 24;

/// Minimal primes of a squarefree ideal as the minimal vertex covers of its
/// support hypergraph, by exhaustive subset search.
pub fn minimal_primes_squarefree<E: Exponent>(ideal: &MonomialIdealOf<E>) -> Result<Vec<VarPrime>> {
    if ideal.is_zero() {
        return Err(AlgebraError::ZeroIdeal);
    }
    if !ideal.is_squarefree() {
        return Err(AlgebraError::NotSquarefree);
    }
    let n = ideal.nvars();
    if n > MAX_TRANSVERSAL_VARS {
        return Err(AlgebraError::EnumerationCap {
            nvars: n,
            cap: MAX_TRANSVERSAL_VARS,
        });
    }
    let edges: Vec<u32> = ideal
        .gens()
        .iter()
        .map(|g| g.support().iter().fold(0u32, |acc, &i| acc | 1 << (i - 1)))
        .collect();
    let hits = |mask: u32| edges.iter().all(|&e| e & mask != 0);
    let mut primes = Vec::new();
    for mask in 1u32..(1u32 << n) {
        if !hits(mask) {
            continue;
        }
        let minimal = (0..n)
            .filter(|b| mask & (1 << b) != 0)
            .all(|b| !hits(mask & !(1 << b)));
        if minimal {
            let vars = (0..n).filter(|b| mask & (1 << b) != 0).map(|b| b + 1).collect();
            primes.push(VarPrime::new(n, vars)?);
        }
    }
    primes.sort();
    Ok(primes)
}

#[cfg(test)]
mod tests {
    use super::*;

    type I = MonomialIdealOf<u32>;
    type M = MonomialOf<u32>;
    type C = IrreducibleComponentOf<u32>;

    fn ideal(nvars: usize, gens: &[&str]) -> I {
        I::parse(nvars, gens).unwrap()
    }

    fn comp(nvars: usize, powers: &[(usize, u32)]) -> C {
        C::new(nvars, powers).unwrap()
    }

    fn prime(nvars: usize, vars: &[usize]) -> VarPrime {
        VarPrime::new(nvars, vars.to_vec()).unwrap()
    }

    fn ind_2_4() -> I {
        ideal(4, &["x1*x3", "x1*x4", "x2*x4"])
    }

    fn ind_2_5() -> I {
        ideal(5, &["x1*x3", "x1*x4", "x1*x5", "x2*x4", "x2*x5", "x3*x5"])
    }

    #[test]
    fn decomposes_ind_2_4_into_vertex_covers() {
        let comps = irreducible_decomposition(&ind_2_4()).unwrap();
        let expected = vec![
            comp(4, &[(1, 1), (2, 1)]),
            comp(4, &[(1, 1), (4, 1)]),
            comp(4, &[(3, 1), (4, 1)]),
        ];
        assert_eq!(comps, expected);
    }

    #[test]
    fn principal_split() {
        let comps = irreducible_decomposition(&ideal(3, &["x1^2*x3^2"])).unwrap();
        assert_eq!(comps, vec![comp(3, &[(1, 2)]), comp(3, &[(3, 2)])]);
    }

    #[test]
    fn square_of_ind_2_4_has_six_components() {
        let sq = ind_2_4().power(2).unwrap();
        let comps = irreducible_decomposition(&sq).unwrap();
        let mut expected = Vec::new();
        for (i, j) in [(1, 2), (1, 4), (3, 4)] {
            for r in 1..=2u32 {
                expected.push(comp(4, &[(i, r), (j, 3 - r)]));
            }
        }
        let mut got = comps.clone();
        got.sort_by_key(|c| c.to_string());
        expected.sort_by_key(|c| c.to_string());
        assert_eq!(got, expected);
        assert_eq!(intersect_components(&comps).unwrap().unwrap(), sq);
    }

    #[test]
    fn filter_prunes_containing_components() {
        let i = ideal(2, &["x1"]);
        let out = irredundant_filter(vec![comp(2, &[(1, 1)]), comp(2, &[(1, 1), (2, 1)])], &i);
        assert_eq!(out.unwrap(), vec![comp(2, &[(1, 1)])]);
    }

    #[test]
    fn filter_keeps_irredundant_sets() {
        let comps = irreducible_decomposition(&ind_2_4()).unwrap();
        assert_eq!(irredundant_filter(comps.clone(), &ind_2_4()).unwrap(), comps);
    }

    #[test]
    fn filter_on_redundant_split_of_ind_2_5() {
        // A deliberately redundant decomposition: the four minimal covers plus
        // larger covers and a non-reduced power.
        let mut comps: Vec<C> = [[1, 2, 3], [1, 2, 5], [1, 4, 5], [3, 4, 5]]
            .iter()
            .map(|vs| comp(5, &vs.map(|v| (v, 1))))
            .collect();
        comps.push(comp(5, &[(1, 1), (2, 1), (3, 1), (4, 1)]));
        comps.push(comp(5, &[(1, 2), (2, 1), (3, 1), (4, 1), (5, 1)]));
        comps.push(comp(5, &[(2, 1), (3, 1), (4, 1), (5, 1)]));
        let out = irredundant_filter(comps, &ind_2_5()).unwrap();
        let primes: Vec<_> = out.iter().map(|c| c.radical()).collect();
        assert_eq!(
            primes,
            vec![
                prime(5, &[1, 2, 3]),
                prime(5, &[1, 2, 5]),
                prime(5, &[1, 4, 5]),
                prime(5, &[3, 4, 5])
            ]
        );
        assert_eq!(intersect_components(&out).unwrap().unwrap(), ind_2_5());
    }

    #[test]
    fn corner_test_matches_exact_intersection() {
        // Q = <x1^2, x2> and others whose intersection is or is not inside Q.
        let q = comp(3, &[(1, 2), (2, 1)]);
        let inside = [comp(3, &[(1, 1)]), comp(3, &[(2, 1), (3, 1)])];
        let outside = [comp(3, &[(1, 2), (3, 1)]), comp(3, &[(2, 2)])];
        for others in [&inside[..], &outside[..]] {
            let meet = intersect_components(others).unwrap().unwrap();
            let exact = meet.is_subset(&q.to_ideal().unwrap()).unwrap();
            assert_eq!(intersection_inside(&q, others.iter()), exact);
        }
    }

    #[test]
    fn associated_primes_examples() {
        let principal = ideal(5, &["x1*x3*x5"]);
        assert_eq!(
            associated_primes(&principal).unwrap(),
            vec![prime(5, &[1]), prime(5, &[3]), prime(5, &[5])]
        );
        assert_eq!(
            associated_primes(&ind_2_4()).unwrap(),
            vec![prime(4, &[1, 2]), prime(4, &[1, 4]), prime(4, &[3, 4])]
        );
        let sq = ind_2_5().power(2).unwrap();
        assert_eq!(
            associated_primes(&sq).unwrap(),
            vec![
                prime(5, &[1, 2, 3]),
                prime(5, &[1, 2, 5]),
                prime(5, &[1, 4, 5]),
                prime(5, &[3, 4, 5]),
                prime(5, &[1, 2, 3, 4, 5]),
            ]
        );
    }

    #[test]
    fn zero_ideal_is_rejected() {
        let zero = I::zero(3).unwrap();
        assert_eq!(irreducible_decomposition(&zero), Err(AlgebraError::ZeroIdeal));
        assert_eq!(associated_primes(&zero), Err(AlgebraError::ZeroIdeal));
        assert_eq!(minimal_primes_squarefree(&zero), Err(AlgebraError::ZeroIdeal));
    }

    #[test]
    fn witness_examples() {
        let u = M::parse("x4*x5", 5).unwrap();
        let v = verify_witness(&ind_2_5(), 1, &u, &prime(5, &[1, 2, 3])).unwrap();
        assert_eq!(v, WitnessVerdict::Verified);

        let u = M::parse("x1*x3*x5", 5).unwrap();
        let v = verify_witness(&ind_2_5(), 2, &u, &VarPrime::maximal(5).unwrap()).unwrap();
        assert_eq!(v, WitnessVerdict::Verified);

        let u = M::parse("x1^2*x3^2", 5).unwrap();
        let v = verify_witness(&ind_2_5(), 2, &u, &prime(5, &[1])).unwrap();
        assert_eq!(v, WitnessVerdict::InPower);
        assert_eq!(v.reason(), "u in I^k");
    }

    #[test]
    fn witness_reason_codes() {
        // I : x4x5 = <x1, x2, x3>.
        let u = M::parse("x4*x5", 5).unwrap();
        let too_big = verify_witness(&ind_2_5(), 1, &u, &prime(5, &[1, 2])).unwrap();
        assert_eq!(too_big, WitnessVerdict::ColonTooBig);
        let too_small = verify_witness(&ind_2_5(), 1, &u, &prime(5, &[1, 2, 3, 4])).unwrap();
        assert_eq!(too_small, WitnessVerdict::ColonTooSmall);
    }

    #[test]
    fn minimal_primes_examples() {
        assert_eq!(
            minimal_primes_squarefree(&ind_2_4()).unwrap(),
            vec![prime(4, &[1, 2]), prime(4, &[1, 4]), prime(4, &[3, 4])]
        );
        assert_eq!(
            minimal_primes_squarefree(&ideal(5, &["x1*x3*x5"])).unwrap(),
            vec![prime(5, &[1]), prime(5, &[3]), prime(5, &[5])]
        );
        assert_eq!(
            minimal_primes_squarefree(&ind_2_5()).unwrap(),
            vec![
                prime(5, &[1, 2, 3]),
                prime(5, &[1, 2, 5]),
                prime(5, &[1, 4, 5]),
                prime(5, &[3, 4, 5])
            ]
        );
        assert_eq!(
            minimal_primes_squarefree(&ideal(2, &["x1^2"])),
            Err(AlgebraError::NotSquarefree)
        );
    }

    #[test]
    fn component_validation() {
        assert!(C::new(3, &[]).is_err());
        assert!(C::new(3, &[(4, 1)]).is_err());
        assert!(C::new(3, &[(1, 0)]).is_err());
        assert!(C::new(3, &[(1, 1), (1, 2)]).is_err());
        assert_eq!(comp(3, &[(3, 2), (1, 1)]).gen_strings(), ["x1", "x3^2"]);
    }

    #[test]
    fn component_containment_direction() {
        let small = comp(2, &[(1, 2)]);
        let big = comp(2, &[(1, 1), (2, 1)]);
        assert!(big.contains_component(&small));
        assert!(!small.contains_component(&big));
    }

    #[test]
    fn parallel_and_cached_runs_agree() {
        let sq = ind_2_5().power(3).unwrap();
        let serial = Decomposer::<u32>::new(DecomposeOptions {
            cache_capacity: 4,
            parallel_depth: 0,
        })
        .decompose(&sq)
        .unwrap();
        let parallel = Decomposer::<u32>::new(DecomposeOptions {
            cache_capacity: 100_000,
            parallel_depth: 6,
        })
        .decompose(&sq)
        .unwrap();
        assert_eq!(serial, parallel);
    }

    #[test]
    fn expired_deadline_gives_up() {
        let d = Decomposer::<u32>::default();
        let past = Instant::now();
        assert_eq!(
            d.decompose_until(&ind_2_5(), Some(past)),
            Err(AlgebraError::BudgetExhausted)
        );
    }
}
