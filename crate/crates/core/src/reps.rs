//! Weight systems, multiplicities and tensor product decompositions.
//!
//! Multiplicities come from Freudenthal's recursion evaluated on dominant
//! weights only, top-down in the dominance order. Tensor products use the
//! signed dominant-shift formula: every weight `β` of the smaller factor is
//! added to `μ + ρ`, the sum is moved into the dominant chamber, singular
//! results are dropped and regular ones contribute `±m(β)` to the component
//! with highest weight `representative - ρ`.
//!
//! Two oracles live alongside: a subset-sum count for `m_ρ` and a
//! character-product peeling decomposition.

use std::collections::{BTreeMap, HashMap, HashSet, VecDeque};

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::ToPrimitive;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::rootsys::RootSystem;
use crate::weight::Weight;
use crate::weyl::{dominant_with_parity, orbit_size_estimate};

/// A finite multiset of weights: `ν ↦ m(ν)`.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct WeightMultiset {
    pub entries: BTreeMap<Weight, u64>,
}

impl WeightMultiset {
    pub fn get(&self, w: &Weight) -> u64 {
        self.entries.get(w).copied().unwrap_or(0)
    }

    /// Total multiplicity, i.e. the dimension for a full weight system.
    pub fn mass(&self) -> u64 {
        self.entries.values().sum()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Weight, &u64)> {
        self.entries.iter()
    }
}

/// Irreducible components with multiplicities: `ν ↦ c_{λμ}^ν`.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Decomposition {
    pub entries: BTreeMap<Weight, u64>,
}

impl Decomposition {
    pub fn get(&self, w: &Weight) -> u64 {
        self.entries.get(w).copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Weight, &u64)> {
        self.entries.iter()
    }

    /// `Σ c_ν · dim V(ν)`
    pub fn total_dimension(&self, sys: &RootSystem) -> BigUint {
        self.entries
            .iter()
            .map(|(nu, &c)| dim(sys, nu) * BigUint::from(c))
            .sum()
    }
}

/// A dominant weight below `λ` together with its root gap `λ - μ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DominantBelow {
    pub weight: Weight,
    /// Simple-root coordinates of `λ - weight`; nonnegative integers.
    pub gap: Vec<i64>,
}

impl DominantBelow {
    pub fn level(&self) -> i64 {
        self.gap.iter().sum()
    }
}

fn require_dominant(sys: &RootSystem, w: &Weight, what: &str) -> Result<()> {
    sys.check_rank(w)?;
    if !w.is_dominant() {
        return Err(Error::Domain(format!("{what} {w} is not dominant")));
    }
    Ok(())
}

/// All dominant `μ` with `λ - μ` a nonnegative integer combination of simple
/// roots, ordered by level (height of the gap) and then decreasing
/// lexicographically.
///
/// Walks down from `λ` by subtracting positive roots and keeping dominant
/// results; every dominant weight below `λ` is reachable this way because
/// covering relations among dominant weights are differences of positive
/// roots.
pub fn dominant_weights_below_with_gaps(
    sys: &RootSystem,
    lambda: &Weight,
    limits: &Limits,
) -> Result<Vec<DominantBelow>> {
    require_dominant(sys, lambda, "highest weight")?;
    let roots = sys.positive_roots();
    let roots_w = sys.positive_roots_weight();
    let mut seen: HashSet<Weight> = HashSet::new();
    let mut queue = VecDeque::new();
    let mut out = Vec::new();
    seen.insert(lambda.clone());
    queue.push_back(DominantBelow {
        weight: lambda.clone(),
        gap: vec![0; sys.rank()],
    });
    while let Some(node) = queue.pop_front() {
        for (c, a) in roots.iter().zip(roots_w) {
            let next = &node.weight - a;
            if next.is_dominant() && !seen.contains(&next) {
                if seen.len() as u64 >= limits.max_dim {
                    return Err(Error::guard(
                        "dominant weights below λ",
                        format!("> {}", limits.max_dim),
                        limits.max_dim,
                    ));
                }
                seen.insert(next.clone());
                let gap = node.gap.iter().zip(c).map(|(g, x)| g + x).collect();
                queue.push_back(DominantBelow { weight: next, gap });
            }
        }
        out.push(node);
    }
    out.sort_by(|a, b| {
        a.level()
            .cmp(&b.level())
            .then_with(|| b.weight.cmp(&a.weight))
    });
    Ok(out)
}

pub fn dominant_weights_below(
    sys: &RootSystem,
    lambda: &Weight,
    limits: &Limits,
) -> Result<Vec<Weight>> {
    Ok(dominant_weights_below_with_gaps(sys, lambda, limits)?
        .into_iter()
        .map(|d| d.weight)
        .collect())
}

/// Dominant part of the character of `V(λ)`, with multiplicities from
/// Freudenthal's formula.
#[derive(Debug, Clone)]
pub struct DominantCharacter {
    highest: Weight,
    /// Every dominant weight of `V(λ)` with its multiplicity, in
    /// dominance-compatible order (top first).
    weights: Vec<(Weight, u64)>,
    lookup: HashMap<Weight, u64>,
}

impl DominantCharacter {
    pub fn new(sys: &RootSystem, lambda: &Weight, limits: &Limits) -> Result<Self> {
        let below = dominant_weights_below_with_gaps(sys, lambda, limits)?;
        let rho = sys.rho();
        let shifted_top = lambda + &rho;
        let top_norm = sys.scaled_form(&shifted_top, &shifted_top) as i128;
        let roots = sys.positive_roots_weight();

        let mut lookup: HashMap<Weight, u64> = HashMap::with_capacity(below.len());
        let mut weights = Vec::with_capacity(below.len());
        for node in below {
            let mu = node.weight;
            let m = if mu == *lambda {
                1
            } else {
                let shifted = &mu + &rho;
                let denom = top_norm - sys.scaled_form(&shifted, &shifted) as i128;
                if denom <= 0 {
                    return Err(Error::Internal(format!(
                        "Freudenthal denominator {denom} at {mu} below {lambda}"
                    )));
                }
                let mut num: i128 = 0;
                for alpha in roots {
                    let mut x = &mu + alpha;
                    loop {
                        let (rep, _) = dominant_with_parity(sys, &x);
                        let mx = lookup.get(&rep).copied().unwrap_or(0);
                        if mx == 0 {
                            break;
                        }
                        num += mx as i128 * sys.scaled_form(&x, alpha) as i128;
                        x.add_scaled(1, alpha);
                    }
                }
                num *= 2;
                if num % denom != 0 {
                    return Err(Error::Internal(format!(
                        "Freudenthal quotient {num}/{denom} at {mu} is not an integer"
                    )));
                }
                u64::try_from(num / denom).map_err(|_| {
                    Error::Internal(format!("negative Freudenthal multiplicity at {mu}"))
                })?
            };
            lookup.insert(mu.clone(), m);
            weights.push((mu, m));
        }
        Ok(DominantCharacter {
            highest: lambda.clone(),
            weights,
            lookup,
        })
    }

    pub fn highest_weight(&self) -> &Weight {
        &self.highest
    }

    /// Multiplicity of an arbitrary integral weight.
    pub fn multiplicity(&self, sys: &RootSystem, mu: &Weight) -> u64 {
        let (rep, _) = dominant_with_parity(sys, mu);
        self.lookup.get(&rep).copied().unwrap_or(0)
    }

    /// Dominant weights with their multiplicities, top first.
    pub fn dominant_weights(&self) -> &[(Weight, u64)] {
        &self.weights
    }
}

/// `m_λ(μ) = dim V(λ)_μ`.
pub fn freudenthal_multiplicity(
    sys: &RootSystem,
    lambda: &Weight,
    mu: &Weight,
    limits: &Limits,
) -> Result<u64> {
    sys.check_rank(mu)?;
    let ch = DominantCharacter::new(sys, lambda, limits)?;
    Ok(ch.multiplicity(sys, mu))
}

/// Weyl dimension formula `Π_{α>0} (λ+ρ, α) / (ρ, α)`.
pub fn dim(sys: &RootSystem, lambda: &Weight) -> BigUint {
    let rho = sys.rho();
    let shifted = lambda + &rho;
    let mut num = BigInt::from(1);
    let mut den = BigInt::from(1);
    for alpha in sys.positive_roots_weight() {
        num *= sys.scaled_form(&shifted, alpha);
        den *= sys.scaled_form(&rho, alpha);
    }
    let q = BigRational::new(num, den);
    assert!(q.is_integer(), "Weyl dimension formula gave {q}");
    q.to_integer()
        .to_biguint()
        .expect("dimension of a dominant weight is positive")
}

fn dim_checked(sys: &RootSystem, lambda: &Weight, limits: &Limits) -> Result<u64> {
    let d = dim(sys, lambda);
    match d.to_u64() {
        Some(d) if d <= limits.max_dim => Ok(d),
        _ => Err(Error::guard("representation dimension", d, limits.max_dim)),
    }
}

/// Breadth-first orbit without sorting or guard; callers bound the size.
fn orbit_of(sys: &RootSystem, w: &Weight) -> Vec<Weight> {
    let mut seen: HashSet<Weight> = HashSet::new();
    let mut queue = VecDeque::new();
    seen.insert(w.clone());
    queue.push_back(w.clone());
    let mut out = Vec::new();
    while let Some(x) = queue.pop_front() {
        for i in 0..sys.rank() {
            if x[i] != 0 {
                let y = crate::weyl::reflect(sys, &x, i).expect("index in range");
                if seen.insert(y.clone()) {
                    queue.push_back(y);
                }
            }
        }
        out.push(x);
    }
    out
}

/// The full weight system `Π(λ)` with multiplicities.
pub fn weight_system(sys: &RootSystem, lambda: &Weight, limits: &Limits) -> Result<WeightMultiset> {
    require_dominant(sys, lambda, "highest weight")?;
    dim_checked(sys, lambda, limits)?;
    let ch = DominantCharacter::new(sys, lambda, limits)?;
    let mut entries = BTreeMap::new();
    for (mu, m) in ch.dominant_weights() {
        for x in orbit_of(sys, mu) {
            entries.insert(x, *m);
        }
    }
    Ok(WeightMultiset { entries })
}

/// Picks the factor whose weight system gets expanded.
fn order_factors<'a>(
    sys: &RootSystem,
    lambda: &'a Weight,
    mu: &'a Weight,
) -> (&'a Weight, &'a Weight) {
    if dim(sys, lambda) <= dim(sys, mu) {
        (lambda, mu)
    } else {
        (mu, lambda)
    }
}

fn signed_shift_buckets(
    sys: &RootSystem,
    small: &Weight,
    big: &Weight,
    target: Option<&Weight>,
    limits: &Limits,
) -> Result<HashMap<Weight, i64>> {
    dim_checked(sys, small, limits)?;
    let ch = DominantCharacter::new(sys, small, limits)?;
    let rho = sys.rho();
    let shift = big + &rho;
    let target = target.map(|t| t + &rho);

    ch.dominant_weights()
        .par_iter()
        .map(|(beta, m)| -> Result<HashMap<Weight, i64>> {
            if orbit_size_estimate(sys, beta) > limits.max_orbit as u128 {
                return Err(Error::guard(
                    "Weyl orbit",
                    orbit_size_estimate(sys, beta),
                    limits.max_orbit,
                ));
            }
            let m = i64::try_from(*m)
                .map_err(|_| Error::Internal(format!("multiplicity of {beta} overflows")))?;
            let mut local: HashMap<Weight, i64> = HashMap::new();
            for gamma in orbit_of(sys, beta) {
                let (rep, parity) = dominant_with_parity(sys, &(&gamma + &shift));
                if !rep.is_regular_dominant() {
                    continue;
                }
                if let Some(t) = &target {
                    if &rep != t {
                        continue;
                    }
                }
                let slot = local.entry(&rep - &rho).or_insert(0);
                *slot = slot
                    .checked_add(parity * m)
                    .ok_or_else(|| Error::Internal("signed bucket overflow".into()))?;
            }
            Ok(local)
        })
        .try_reduce(HashMap::new, |mut a, b| {
            for (k, v) in b {
                let slot = a.entry(k).or_insert(0);
                *slot = slot
                    .checked_add(v)
                    .ok_or_else(|| Error::Internal("signed bucket overflow".into()))?;
            }
            Ok(a)
        })
}

fn finalize(buckets: HashMap<Weight, i64>, lambda: &Weight, mu: &Weight) -> Result<Decomposition> {
    let mut entries = BTreeMap::new();
    for (nu, c) in buckets {
        if c < 0 {
            return Err(Error::Internal(format!(
                "negative multiplicity {c} for V{nu} in V{lambda} ⊗ V{mu}"
            )));
        }
        if c > 0 {
            entries.insert(nu, c as u64);
        }
    }
    Ok(Decomposition { entries })
}

/// Decomposes `V(λ) ⊗ V(μ)` into irreducibles.
pub fn tensor_decompose(
    sys: &RootSystem,
    lambda: &Weight,
    mu: &Weight,
    limits: &Limits,
) -> Result<Decomposition> {
    require_dominant(sys, lambda, "tensor factor")?;
    require_dominant(sys, mu, "tensor factor")?;
    let (small, big) = order_factors(sys, lambda, mu);
    let buckets = signed_shift_buckets(sys, small, big, None, limits)?;
    finalize(buckets, lambda, mu)
}

/// `c_{λμ}^ν`, accumulating only the contributions that land on `ν`.
pub fn tensor_multiplicity(
    sys: &RootSystem,
    lambda: &Weight,
    mu: &Weight,
    nu: &Weight,
    limits: &Limits,
) -> Result<u64> {
    require_dominant(sys, lambda, "tensor factor")?;
    require_dominant(sys, mu, "tensor factor")?;
    sys.check_rank(nu)?;
    if !nu.is_dominant() {
        return Ok(0);
    }
    let (small, big) = order_factors(sys, lambda, mu);
    let buckets = signed_shift_buckets(sys, small, big, Some(nu), limits)?;
    Ok(finalize(buckets, lambda, mu)?.get(nu))
}

/// Independent decomposition: multiply the two formal characters and peel
/// off irreducible characters from the top.
pub fn character_product_oracle(
    sys: &RootSystem,
    lambda: &Weight,
    mu: &Weight,
    limits: &Limits,
) -> Result<Decomposition> {
    require_dominant(sys, lambda, "tensor factor")?;
    require_dominant(sys, mu, "tensor factor")?;
    let product_dim = dim(sys, lambda) * dim(sys, mu);
    if product_dim > BigUint::from(limits.max_oracle_product) {
        return Err(Error::guard(
            "character product",
            product_dim,
            limits.max_oracle_product,
        ));
    }
    let a = weight_system(sys, lambda, limits)?;
    let b = weight_system(sys, mu, limits)?;

    // Only the dominant part of a W-invariant character is needed.
    let mut remaining: HashMap<Weight, i64> = HashMap::new();
    for (x, mx) in a.iter() {
        for (y, my) in b.iter() {
            let z = x + y;
            if z.is_dominant() {
                *remaining.entry(z).or_insert(0) += (mx * my) as i64;
            }
        }
    }

    let height = |w: &Weight| sys.weight_to_root_coords(w).height();
    let mut out = BTreeMap::new();
    loop {
        remaining.retain(|_, c| *c != 0);
        if let Some((w, c)) = remaining.iter().find(|(_, c)| **c < 0) {
            return Err(Error::Internal(format!(
                "character peeling went negative at {w} ({c})"
            )));
        }
        let Some(top) = remaining
            .keys()
            .max_by(|x, y| height(x).cmp(&height(y)).then_with(|| x.cmp(y)))
            .cloned()
        else {
            break;
        };
        let c = remaining[&top];
        let ch = DominantCharacter::new(sys, &top, limits)?;
        for (w, m) in ch.dominant_weights() {
            *remaining.entry(w.clone()).or_insert(0) -= c * *m as i64;
        }
        out.insert(top, c as u64);
    }
    Ok(Decomposition { entries: out })
}

/// Counts subsets of `Φ⁺` by their sum; `m_ρ(β)` is the number of subsets
/// summing to `ρ - β`, from `χ_ρ = e^ρ Π_{α>0}(1 + e^{-α})`.
pub struct SubsetSumOracle {
    rho: Weight,
    counts: HashMap<Weight, u64>,
}

impl SubsetSumOracle {
    pub fn new(sys: &RootSystem, limits: &Limits) -> Result<Self> {
        let roots = sys.positive_roots_weight();
        let n = roots.len();
        if n > limits.max_subset_roots {
            return Err(Error::guard(
                "subset-sum oracle (positive roots)",
                n,
                limits.max_subset_roots as u64,
            ));
        }
        let mut counts: HashMap<Weight, u64> = HashMap::new();
        let mut sum = Weight::zero(sys.rank());
        let mut mask: u64 = 0;
        counts.insert(sum.clone(), 1);
        // Gray-code walk: one root toggled per step.
        for k in 1u64..(1u64 << n) {
            let bit = k.trailing_zeros() as usize;
            mask ^= 1 << bit;
            let sign = if mask >> bit & 1 == 1 { 1 } else { -1 };
            sum.add_scaled(sign, &roots[bit]);
            match counts.get_mut(&sum) {
                Some(c) => *c += 1,
                None => {
                    counts.insert(sum.clone(), 1);
                }
            }
        }
        Ok(SubsetSumOracle {
            rho: sys.rho(),
            counts,
        })
    }

    pub fn multiplicity(&self, beta: &Weight) -> u64 {
        self.counts.get(&(&self.rho - beta)).copied().unwrap_or(0)
    }

    /// Number of distinct subset sums, i.e. `|Π(ρ)|`.
    pub fn num_weights(&self) -> usize {
        self.counts.len()
    }
}

/// `m_ρ(β)` by subset counting.
pub fn rho_multiplicity_oracle(sys: &RootSystem, beta: &Weight, limits: &Limits) -> Result<u64> {
    sys.check_rank(beta)?;
    Ok(SubsetSumOracle::new(sys, limits)?.multiplicity(beta))
}

/// `dim V(λ)` as `u64`, or `None` when it does not fit.
pub fn dim_u64(sys: &RootSystem, lambda: &Weight) -> Option<u64> {
    dim(sys, lambda).to_u64()
}
