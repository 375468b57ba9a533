//! Weyl group actions on weights.

use std::collections::{HashSet, VecDeque};

use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::rootsys::{weyl_order_from_roots, RootSystem};
use crate::weight::{QWeight, Weight};

/// A word in the simple reflections (0-based indices).
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct WeylWord(pub Vec<usize>);

impl WeylWord {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `(-1)^length`
    pub fn parity(&self) -> i64 {
        if self.0.len().is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    /// Applies the letters left to right, i.e. `s_{last} ⋯ s_{first} w`.
    pub fn apply(&self, sys: &RootSystem, w: &Weight) -> Weight {
        let mut out = w.clone();
        for &i in &self.0 {
            reflect_in_place(sys, &mut out, i);
        }
        out
    }

    pub fn apply_q(&self, sys: &RootSystem, w: &QWeight) -> QWeight {
        let mut out = w.clone();
        for &i in &self.0 {
            out = reflect_q(sys, &out, i);
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DominantResult {
    pub representative: Weight,
    pub parity: i64,
    pub regular: bool,
    /// Applying these letters in order to `representative` recovers the input.
    pub word: WeylWord,
}

/// A parabolic subgroup `W_J` together with its longest element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Parabolic {
    pub subset: Subset,
    pub order: u64,
    pub longest_word: WeylWord,
}

/// A subset `J ⊆ {1..r}` stored as a bitmask; bit `i` is index `i + 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Subset(pub u32);

impl Subset {
    pub fn empty() -> Self {
        Subset(0)
    }

    pub fn full(rank: usize) -> Self {
        Subset(((1u64 << rank) - 1) as u32)
    }

    pub fn from_indices(indices: &[usize]) -> Self {
        Subset(indices.iter().fold(0, |acc, &i| acc | (1 << i)))
    }

    pub fn contains(self, i: usize) -> bool {
        self.0 >> i & 1 == 1
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    /// 0-based indices in increasing order.
    pub fn indices(self) -> Vec<usize> {
        (0..32).filter(|&i| self.contains(i)).collect()
    }

    /// 1-based labels, as printed in reports.
    pub fn labels(self) -> Vec<usize> {
        self.indices().into_iter().map(|i| i + 1).collect()
    }

    /// All `2^rank` subsets in binary-counter order.
    pub fn all(rank: usize) -> impl Iterator<Item = Subset> {
        (0..1u64 << rank).map(|m| Subset(m as u32))
    }

    /// Report ordering: by size, then lexicographically on labels.
    pub fn report_key(self) -> (usize, Vec<usize>) {
        (self.len(), self.labels())
    }
}

fn reflect_in_place(sys: &RootSystem, w: &mut Weight, i: usize) {
    let c = w[i];
    if c != 0 {
        let cartan = sys.cartan();
        for (j, x) in w.coords_mut().iter_mut().enumerate() {
            *x -= c * cartan[j][i];
        }
    }
}

fn reflect_q(sys: &RootSystem, w: &QWeight, i: usize) -> QWeight {
    let c = w[i].clone();
    let cartan = sys.cartan();
    QWeight::new(
        w.coords()
            .iter()
            .enumerate()
            .map(|(j, x)| x - &c * crate::weight::rat(cartan[j][i]))
            .collect(),
    )
}

/// `s_i(w) = w - w_i α_i`.
pub fn reflect(sys: &RootSystem, w: &Weight, i: usize) -> Result<Weight> {
    sys.check_rank(w)?;
    if i >= sys.rank() {
        return Err(Error::IndexOutOfRange {
            index: i,
            rank: sys.rank(),
        });
    }
    let mut out = w.clone();
    reflect_in_place(sys, &mut out, i);
    Ok(out)
}

/// Brings `w` into the dominant chamber by reflecting at the smallest-index
/// negative coordinate until none is left.
pub fn to_dominant(sys: &RootSystem, w: &Weight) -> DominantResult {
    let mut rep = w.clone();
    let mut letters = Vec::new();
    while let Some(i) = rep.coords().iter().position(|&c| c < 0) {
        reflect_in_place(sys, &mut rep, i);
        letters.push(i);
    }
    letters.reverse();
    let word = WeylWord(letters);
    DominantResult {
        regular: rep.is_regular_dominant(),
        parity: word.parity(),
        representative: rep,
        word,
    }
}

/// Dominant representative and parity only; avoids recording the word.
pub fn dominant_with_parity(sys: &RootSystem, w: &Weight) -> (Weight, i64) {
    let mut rep = w.clone();
    let mut parity = 1;
    while let Some(i) = rep.coords().iter().position(|&c| c < 0) {
        reflect_in_place(sys, &mut rep, i);
        parity = -parity;
    }
    (rep, parity)
}

/// `λ* = -w_0 λ`, the highest weight of the dual of `V(λ)`.
pub fn dual(sys: &RootSystem, w: &Weight) -> Weight {
    to_dominant(sys, &-w).representative
}

/// Orbit of `w` under the subgroup generated by the reflections in `gens`,
/// in breadth-first order.
fn orbit_under(sys: &RootSystem, w: &Weight, gens: &[usize], limit: u64) -> Option<Vec<Weight>> {
    let mut seen: HashSet<Weight> = HashSet::new();
    let mut queue = VecDeque::new();
    let mut out = Vec::new();
    seen.insert(w.clone());
    queue.push_back(w.clone());
    while let Some(x) = queue.pop_front() {
        for &i in gens {
            if x[i] == 0 {
                continue;
            }
            let mut y = x.clone();
            reflect_in_place(sys, &mut y, i);
            if !seen.contains(&y) {
                if seen.len() as u64 >= limit {
                    return None;
                }
                seen.insert(y.clone());
                queue.push_back(y);
            }
        }
        out.push(x);
    }
    Some(out)
}

/// `|W_J|` from the degrees of the sub-root-system `Φ_J`.
pub fn parabolic_order_by_degrees(sys: &RootSystem, subset: Subset) -> u128 {
    let roots = positive_roots_in(sys, subset);
    weyl_order_from_roots(roots.iter().map(|c| c.as_slice()))
}

/// Estimated `|W·w|` as `|W| / |Stab(w)|` with the stabilizer of the
/// dominant representative being the parabolic on its zero coordinates.
pub fn orbit_size_estimate(sys: &RootSystem, w: &Weight) -> u128 {
    let rep = to_dominant(sys, w).representative;
    let zeros = Subset::from_indices(&(0..sys.rank()).filter(|&i| rep[i] == 0).collect::<Vec<_>>());
    sys.weyl_group_order() / parabolic_order_by_degrees(sys, zeros)
}

/// The full orbit `W·w`, sorted.
pub fn orbit(sys: &RootSystem, w: &Weight, limits: &Limits) -> Result<Vec<Weight>> {
    sys.check_rank(w)?;
    let estimate = orbit_size_estimate(sys, w);
    if estimate > limits.max_orbit as u128 {
        return Err(Error::guard("Weyl orbit", estimate, limits.max_orbit));
    }
    let gens: Vec<usize> = (0..sys.rank()).collect();
    let rep = to_dominant(sys, w).representative;
    let mut out = orbit_under(sys, &rep, &gens, limits.max_orbit)
        .ok_or_else(|| Error::guard("Weyl orbit", estimate, limits.max_orbit))?;
    out.sort();
    Ok(out)
}

/// Orbit of `w` under `W_J`, unsorted (breadth-first from `w`).
pub fn parabolic_orbit(
    sys: &RootSystem,
    w: &Weight,
    subset: Subset,
    limits: &Limits,
) -> Result<Vec<Weight>> {
    let gens = subset.indices();
    orbit_under(sys, w, &gens, limits.max_orbit).ok_or_else(|| {
        Error::guard(
            "parabolic orbit",
            parabolic_order_by_degrees(sys, subset),
            limits.max_orbit,
        )
    })
}

/// Positive roots supported on `J`, in simple-root coordinates.
pub fn positive_roots_in(sys: &RootSystem, subset: Subset) -> Vec<Vec<i64>> {
    sys.positive_roots()
        .iter()
        .filter(|c| {
            c.iter()
                .enumerate()
                .all(|(i, &x)| x == 0 || subset.contains(i))
        })
        .cloned()
        .collect()
}

/// `W_J` with its order (by enumerating the free orbit of ρ) and a reduced
/// word for its longest element.
pub fn parabolic(sys: &RootSystem, subset: Subset, limits: &Limits) -> Result<Parabolic> {
    if subset.indices().iter().any(|&i| i >= sys.rank()) {
        return Err(Error::IndexOutOfRange {
            index: *subset.indices().last().unwrap(),
            rank: sys.rank(),
        });
    }
    let order = parabolic_orbit(sys, &sys.rho(), subset, limits)?.len() as u64;

    // Descend from ρ until every J-coordinate is negative.
    let mut x = sys.rho();
    let mut letters = Vec::new();
    while let Some(i) = subset.indices().into_iter().find(|&i| x[i] > 0) {
        reflect_in_place(sys, &mut x, i);
        letters.push(i);
    }
    Ok(Parabolic {
        subset,
        order,
        longest_word: WeylWord(letters),
    })
}

/// `w_J ρ = ρ - Σ_{α ∈ Φ_J⁺} α`.
pub fn wj_rho(sys: &RootSystem, subset: Subset) -> Weight {
    let mut out = sys.rho();
    for root in positive_roots_in(sys, subset) {
        out.add_scaled(-1, &sys.root_coords_to_weight(&root));
    }
    out
}

/// Number of positive roots sent to negative roots by the element that maps
/// `ρ` to `image_of_rho`; equals the length of that element.
pub fn inversion_count(sys: &RootSystem, image_of_rho: &Weight) -> usize {
    // w⁻¹α < 0 ⇔ (wρ, α) < 0
    sys.positive_roots_weight()
        .iter()
        .filter(|alpha| sys.scaled_form(image_of_rho, alpha) < 0)
        .count()
}
