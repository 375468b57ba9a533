//! The dominant weight polytope `P(μ) = conv(W·μ) ∩ C⁺` of a regular
//! dominant weight.
//!
//! Its vertices are indexed by subsets `J ⊆ {1..r}`: `v_J` is the average of
//! the `W_J`-orbit of `μ`, and for `μ = 2ρ` it reduces to
//! `ρ + w_J ρ = 2ρ - Σ_{α ∈ Φ_J⁺} α`. Both routes are computed
//! independently so they can be compared.

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::reps::{dominant_weights_below_with_gaps, DominantCharacter};
use crate::rootsys::RootSystem;
use crate::weight::{QWeight, Weight};
use crate::weyl::{parabolic_orbit, wj_rho, Subset};

/// Vertices `v_J` of `P(μ)`, one per subset, in binary-counter order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexSet {
    pub entries: Vec<(Subset, QWeight)>,
}

impl VertexSet {
    pub fn get(&self, j: Subset) -> Option<&QWeight> {
        self.entries.iter().find(|(s, _)| *s == j).map(|(_, v)| v)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &(Subset, QWeight)> {
        self.entries.iter()
    }

    /// Entries sorted by `|J|`, then lexicographically.
    pub fn report_order(&self) -> Vec<(Subset, QWeight)> {
        let mut out = self.entries.clone();
        out.sort_by_key(|(s, _)| s.report_key());
        out
    }

    pub fn weights(&self) -> Vec<QWeight> {
        self.entries.iter().map(|(_, v)| v.clone()).collect()
    }
}

/// A dominant integral `λ` with `2ρ - λ = Σ a_i α_i`, `a_i ∈ ℤ≥0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatticePoint2Rho {
    pub weight: Weight,
    pub root_gap: Vec<i64>,
    pub is_vertex: bool,
}

fn require_regular(sys: &RootSystem, mu: &Weight) -> Result<()> {
    sys.check_rank(mu)?;
    if !mu.is_regular_dominant() {
        return Err(Error::Domain(format!(
            "{mu} is not a regular dominant weight"
        )));
    }
    Ok(())
}

fn require_subset_rank(sys: &RootSystem, limits: &Limits) -> Result<()> {
    if sys.rank() > limits.max_subset_rank {
        return Err(Error::guard(
            "subsets J of the simple roots",
            format!("2^{}", sys.rank()),
            limits.max_subset_rank as u64,
        ));
    }
    Ok(())
}

/// `v_J = (1/|W_J|) Σ_{w ∈ W_J} w(μ)` for every `J`.
pub fn vertices(sys: &RootSystem, mu: &Weight, limits: &Limits) -> Result<VertexSet> {
    require_regular(sys, mu)?;
    require_subset_rank(sys, limits)?;
    let mut entries = Vec::with_capacity(1 << sys.rank());
    for j in Subset::all(sys.rank()) {
        let orbit = parabolic_orbit(sys, mu, j, limits)?;
        let mut sum = Weight::zero(sys.rank());
        for x in &orbit {
            sum.add_scaled(1, x);
        }
        let inv = BigRational::new(1.into(), (orbit.len() as i64).into());
        entries.push((j, sum.to_rational().scale(&inv)));
    }
    Ok(VertexSet { entries })
}

/// `v_J = ρ + w_J ρ` as integral weights, binary-counter order.
pub fn vertices_2rho_integral(sys: &RootSystem, limits: &Limits) -> Result<Vec<(Subset, Weight)>> {
    require_subset_rank(sys, limits)?;
    let rho = sys.rho();
    Ok(Subset::all(sys.rank())
        .map(|j| (j, &rho + &wj_rho(sys, j)))
        .collect())
}

pub fn vertices_2rho(sys: &RootSystem, limits: &Limits) -> Result<VertexSet> {
    Ok(VertexSet {
        entries: vertices_2rho_integral(sys, limits)?
            .into_iter()
            .map(|(j, v)| (j, v.to_rational()))
            .collect(),
    })
}

/// Writing `λ = Σ m_i ω_i` and `μ - λ = Σ a_i α_i`, `λ` is a vertex of
/// `P(μ)` iff `min(m_i, a_i) = 0` for every `i` and no index has
/// `m_i = a_i = 0`.
pub fn vertex_criterion(sys: &RootSystem, mu: &Weight, lambda: &QWeight) -> Result<bool> {
    require_regular(sys, mu)?;
    if lambda.rank() != sys.rank() {
        return Err(Error::RankMismatch {
            got: lambda.rank(),
            rank: sys.rank(),
        });
    }
    if !lambda.is_dominant() {
        return Err(Error::Domain(format!("{lambda} is not dominant")));
    }
    let gap = sys.qweight_to_root_coords(&(&mu.to_rational() - lambda));
    if !gap.is_nonnegative() {
        return Err(Error::Domain(format!(
            "{mu} - {lambda} = {gap:?} is not in the nonnegative root cone"
        )));
    }
    Ok(lambda.coords().iter().zip(gap.coords()).all(|(m, a)| {
        let m_zero = m.is_zero();
        let a_zero = a.is_zero();
        m_zero != a_zero
    }))
}

/// `λ ∈ P(μ)` via the cone conditions: `λ` dominant and `μ - λ` a
/// nonnegative rational combination of simple roots.
///
/// The additional requirement that `Nλ` be a weight of `V(Nμ)` for some `N`
/// is not imposed; it coincides with the cone conditions for integral `λ` in
/// the root-lattice coset of `μ`.
pub fn membership(sys: &RootSystem, mu: &Weight, lambda: &QWeight) -> Result<bool> {
    require_regular(sys, mu)?;
    if lambda.rank() != sys.rank() {
        return Err(Error::RankMismatch {
            got: lambda.rank(),
            rank: sys.rank(),
        });
    }
    if !lambda.is_dominant() {
        return Ok(false);
    }
    Ok(sys
        .qweight_to_root_coords(&(&mu.to_rational() - lambda))
        .is_nonnegative())
}

/// Every dominant integral weight `λ` with `2ρ - λ` in the nonnegative
/// integer root cone, ordered by gap height and then decreasing
/// lexicographically. Fails with an internal error if some `λ - ρ` is not
/// a weight of `V(ρ)`.
pub fn lattice_points_2rho(sys: &RootSystem, limits: &Limits) -> Result<Vec<LatticePoint2Rho>> {
    let two_rho = sys.rho().scale(2);
    let below = dominant_weights_below_with_gaps(sys, &two_rho, limits)?;
    let rho = sys.rho();
    let rho_char = DominantCharacter::new(sys, &rho, limits)?;
    below
        .into_iter()
        .map(|d| {
            if rho_char.multiplicity(sys, &(&d.weight - &rho)) == 0 {
                return Err(Error::Internal(format!(
                    "{} - ρ is not a weight of V(ρ)",
                    d.weight
                )));
            }
            let is_vertex = d
                .weight
                .coords()
                .iter()
                .zip(&d.gap)
                .all(|(&m, &a)| (m == 0) != (a == 0));
            Ok(LatticePoint2Rho {
                weight: d.weight,
                root_gap: d.gap,
                is_vertex,
            })
        })
        .collect()
}

/// Nonnegative weights `t` with `Σ t = 1` and `Σ t_k · points[k] = target`,
/// found by a phase-one simplex over exact rationals (Bland's rule), or
/// `None` if `target` is outside the convex hull.
pub fn convex_combination(points: &[QWeight], target: &QWeight) -> Option<Vec<BigRational>> {
    let n = points.len();
    let r = target.rank();
    let m = r + 1;
    let width = n + m + 1;

    // rows: coordinates, then the affine row Σ t = 1
    let mut tab: Vec<Vec<BigRational>> = Vec::with_capacity(m + 1);
    for i in 0..m {
        let mut row = vec![BigRational::zero(); width];
        for (k, p) in points.iter().enumerate() {
            row[k] = if i < r {
                p[i].clone()
            } else {
                BigRational::one()
            };
        }
        row[n + i] = BigRational::one();
        row[width - 1] = if i < r {
            target[i].clone()
        } else {
            BigRational::one()
        };
        if row[width - 1].is_negative() {
            for x in row.iter_mut().take(n) {
                *x = -&*x;
            }
            row[width - 1] = -&row[width - 1];
        }
        tab.push(row);
    }
    let mut basis: Vec<usize> = (n..n + m).collect();

    // cost row of "minimize Σ artificials", expressed in non-basic columns
    let mut cost = vec![BigRational::zero(); width];
    for row in &tab {
        for c in 0..n {
            cost[c] -= &row[c];
        }
        cost[width - 1] -= &row[width - 1];
    }

    loop {
        let Some(enter) = (0..n + m).find(|&c| cost[c].is_negative()) else {
            break;
        };
        let mut leave: Option<(usize, BigRational)> = None;
        for (i, row) in tab.iter().enumerate() {
            if row[enter].is_positive() {
                let ratio = &row[width - 1] / &row[enter];
                let better = match &leave {
                    None => true,
                    Some((li, lr)) => ratio < *lr || (ratio == *lr && basis[i] < basis[*li]),
                };
                if better {
                    leave = Some((i, ratio));
                }
            }
        }
        // The phase-one objective is bounded below by 0.
        let (pivot_row, _) = leave?;
        let pivot = tab[pivot_row][enter].clone();
        for x in tab[pivot_row].iter_mut() {
            *x = &*x / &pivot;
        }
        let prow = tab[pivot_row].clone();
        for (i, row) in tab.iter_mut().enumerate() {
            if i != pivot_row && !row[enter].is_zero() {
                let f = row[enter].clone();
                for (x, p) in row.iter_mut().zip(&prow) {
                    *x -= &f * p;
                }
            }
        }
        let f = cost[enter].clone();
        for (x, p) in cost.iter_mut().zip(&prow) {
            *x -= &f * p;
        }
        basis[pivot_row] = enter;
    }

    if !cost[width - 1].is_zero() {
        return None;
    }
    let mut t = vec![BigRational::zero(); n];
    for (i, &b) in basis.iter().enumerate() {
        if b < n {
            t[b] = tab[i][width - 1].clone();
        }
    }
    Some(t)
}

/// Checks that `weights` really is a convex combination reproducing `target`.
pub fn is_convex_combination(
    points: &[QWeight],
    target: &QWeight,
    weights: &[BigRational],
) -> bool {
    if weights.len() != points.len() || weights.iter().any(|t| t.is_negative()) {
        return false;
    }
    let total = weights.iter().fold(BigRational::zero(), |a, t| a + t);
    if !total.is_one() {
        return false;
    }
    let mut acc = QWeight::zero(target.rank());
    for (p, t) in points.iter().zip(weights) {
        acc = &acc + &p.scale(t);
    }
    acc == *target
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::LieType;
    use std::collections::HashSet;

    fn sys(s: &str) -> RootSystem {
        RootSystem::build(s.parse().unwrap()).unwrap()
    }

    fn w<const N: usize>(c: [i64; N]) -> Weight {
        Weight::from(c)
    }

    fn integral(vs: &VertexSet) -> Vec<(Vec<usize>, Weight)> {
        vs.iter()
            .map(|(j, v)| (j.labels(), v.to_integral().unwrap()))
            .collect()
    }

    #[test]
    fn vertex_examples() {
        let l = Limits::default();
        assert_eq!(
            integral(&vertices(&sys("A1"), &w([2]), &l).unwrap()),
            vec![(vec![], w([2])), (vec![1], w([0]))]
        );
        let a2 = vertices(&sys("A2"), &w([2, 2]), &l).unwrap();
        assert_eq!(
            integral(&a2),
            vec![
                (vec![], w([2, 2])),
                (vec![1], w([0, 3])),
                (vec![2], w([3, 0])),
                (vec![1, 2], w([0, 0]))
            ]
        );
        let b2 = vertices(&sys("B2"), &w([2, 2]), &l).unwrap();
        assert_eq!(
            integral(&b2),
            vec![
                (vec![], w([2, 2])),
                (vec![1], w([0, 4])),
                (vec![2], w([3, 0])),
                (vec![1, 2], w([0, 0]))
            ]
        );
    }

    #[test]
    fn rational_vertices_for_general_mu() {
        // A2, μ = (1,2), J = {1}: (μ + s1 μ)/2 = ((1,2) + (-1,3))/2 = (0, 5/2)
        let vs = vertices(&sys("A2"), &w([1, 2]), &Limits::default()).unwrap();
        assert_eq!(
            vs.get(Subset::from_indices(&[0])).unwrap(),
            &QWeight::from_ratios(&[(0, 1), (5, 2)])
        );
        assert!(!vs.get(Subset::from_indices(&[0])).unwrap().is_integral());
    }

    #[test]
    fn vertices_reject_singular_mu() {
        let l = Limits::default();
        assert!(matches!(
            vertices(&sys("A2"), &w([1, 0]), &l),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn closed_form_examples() {
        let l = Limits::default();
        let a2 = vertices_2rho_integral(&sys("A2"), &l).unwrap();
        assert_eq!(a2[0], (Subset::empty(), w([2, 2])));
        assert_eq!(a2[3], (Subset::full(2), w([0, 0])));
    }

    #[test]
    fn orbit_average_equals_closed_form() {
        let l = Limits::default();
        for t in LieType::all_up_to_rank(4) {
            let s = RootSystem::build(t).unwrap();
            let avg = vertices(&s, &s.rho().scale(2), &l).unwrap();
            let closed = vertices_2rho(&s, &l).unwrap();
            assert_eq!(avg, closed, "{t}");
            let distinct: HashSet<_> = closed.weights().into_iter().collect();
            assert_eq!(distinct.len(), 1 << s.rank());
            for (j, v) in closed.iter() {
                assert!(v.is_integral());
                for i in 0..s.rank() {
                    assert_eq!(v[i].is_zero(), j.contains(i), "{t} {j:?} {v}");
                }
                assert!(vertex_criterion(&s, &s.rho().scale(2), v).unwrap());
            }
        }
    }

    #[test]
    fn general_mu_vertices_pass_criterion() {
        let l = Limits::default();
        for t in ["A3", "B3", "C3", "G2"] {
            let s = sys(t);
            let mu = Weight::new((1..=s.rank() as i64).collect());
            let vs = vertices(&s, &mu, &l).unwrap();
            assert_eq!(vs.get(Subset::empty()).unwrap(), &mu.to_rational());
            for (j, v) in vs.iter() {
                assert!(vertex_criterion(&s, &mu, v).unwrap(), "{t} {j:?}");
                assert!(membership(&s, &mu, v).unwrap());
            }
        }
    }

    #[test]
    fn criterion_examples() {
        let b2 = sys("B2");
        let two_rho = w([2, 2]);
        assert!(vertex_criterion(&b2, &two_rho, &two_rho.to_rational()).unwrap());
        assert!(!vertex_criterion(&b2, &two_rho, &w([0, 2]).to_rational()).unwrap());
        assert!(!vertex_criterion(&b2, &two_rho, &w([2, 0]).to_rational()).unwrap());
        let a2 = sys("A2");
        assert!(!vertex_criterion(&a2, &w([2, 2]), &w([1, 1]).to_rational()).unwrap());
        assert!(matches!(
            vertex_criterion(&a2, &w([2, 2]), &w([3, 3]).to_rational()),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            vertex_criterion(&a2, &w([2, 2]), &w([-1, 3]).to_rational()),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn membership_examples() {
        let a2 = sys("A2");
        assert!(membership(&a2, &w([2, 2]), &w([2, 2]).to_rational()).unwrap());
        assert!(membership(&a2, &w([2, 2]), &w([1, 1]).to_rational()).unwrap());
        assert!(!membership(&a2, &w([2, 2]), &w([-1, 3]).to_rational()).unwrap());
        let a1 = sys("A1");
        assert!(!membership(&a1, &w([2]), &w([3]).to_rational()).unwrap());
        assert!(membership(&a1, &w([2]), &QWeight::from_ratios(&[(1, 3)])).unwrap());
    }

    #[test]
    fn lattice_point_examples() {
        let l = Limits::default();
        let pts = |t: &str| -> Vec<Weight> {
            lattice_points_2rho(&sys(t), &l)
                .unwrap()
                .into_iter()
                .map(|p| p.weight)
                .collect()
        };
        assert_eq!(pts("A1"), vec![w([2]), w([0])]);
        assert_eq!(
            pts("A2"),
            vec![w([2, 2]), w([3, 0]), w([0, 3]), w([1, 1]), w([0, 0])]
        );
        let b2 = lattice_points_2rho(&sys("B2"), &l).unwrap();
        let p = b2.iter().find(|p| p.weight == w([0, 2])).unwrap();
        assert_eq!(p.root_gap, vec![2, 2]);
        assert!(!p.is_vertex);
    }

    #[test]
    fn lattice_points_reconstruct_two_rho_and_classify_vertices() {
        let l = Limits::default();
        for t in LieType::all_up_to_rank(4) {
            let s = RootSystem::build(t).unwrap();
            let two_rho = s.rho().scale(2);
            let verts: HashSet<Weight> = vertices_2rho_integral(&s, &l)
                .unwrap()
                .into_iter()
                .map(|(_, v)| v)
                .collect();
            let pts = lattice_points_2rho(&s, &l).unwrap();
            for p in &pts {
                let back = &p.weight + &s.root_coords_to_weight(&p.root_gap);
                assert_eq!(back, two_rho);
                assert_eq!(p.is_vertex, verts.contains(&p.weight), "{t} {}", p.weight);
                assert_eq!(
                    p.is_vertex,
                    vertex_criterion(&s, &two_rho, &p.weight.to_rational()).unwrap()
                );
            }
            assert_eq!(pts.iter().filter(|p| p.is_vertex).count(), 1 << s.rank());
        }
    }

    #[test]
    fn lattice_points_are_convex_combinations_of_vertices() {
        let l = Limits::default();
        for t in LieType::all_up_to_rank(3) {
            let s = RootSystem::build(t).unwrap();
            let verts = vertices_2rho(&s, &l).unwrap().weights();
            for p in lattice_points_2rho(&s, &l).unwrap() {
                let target = p.weight.to_rational();
                let t_ = convex_combination(&verts, &target).expect("inside the hull");
                assert!(is_convex_combination(&verts, &target, &t_));
            }
        }
    }

    #[test]
    fn points_outside_hull_are_rejected() {
        let l = Limits::default();
        let s = sys("A2");
        let verts = vertices_2rho(&s, &l).unwrap().weights();
        assert!(convex_combination(&verts, &w([3, 3]).to_rational()).is_none());
        assert!(convex_combination(&verts, &w([-1, 0]).to_rational()).is_none());
        assert!(convex_combination(&verts, &QWeight::from_ratios(&[(3, 2), (3, 2)])).is_some());
    }
}
