//! Cartan data for the simple Lie algebras.
//!
//! Conventions (Bourbaki numbering, indices 0-based in code):
//!
//! * `cartan[i][j] = α_j(H_{α_i})`, so the weight coordinates of `α_j` are
//!   column `j` of the Cartan matrix;
//! * `B_r`: `α_r` is the short root; `C_r`: `α_r` is the long root;
//! * `G_2`: `α_1` short, `α_2` long; `F_4`: `α_1, α_2` long;
//! * `D_r`: `α_{r-2}` is the branch node; `E_r`: `α_2` hangs off `α_4`.
//!
//! The invariant form is normalized so that long roots have squared length 2.

use std::collections::{HashMap, HashSet};
use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::linalg::{self, QMatrix};
use crate::weight::{rat, QWeight, RootCoords, Weight};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Series {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Series {
    pub fn letter(self) -> char {
        match self {
            Series::A => 'A',
            Series::B => 'B',
            Series::C => 'C',
            Series::D => 'D',
            Series::E => 'E',
            Series::F => 'F',
            Series::G => 'G',
        }
    }

    fn from_letter(c: char) -> Option<Series> {
        Some(match c {
            'A' => Series::A,
            'B' => Series::B,
            'C' => Series::C,
            'D' => Series::D,
            'E' => Series::E,
            'F' => Series::F,
            'G' => Series::G,
            _ => return None,
        })
    }
}

/// A simple type such as `B2` or `E6`. Only admissible combinations can be
/// constructed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LieType {
    series: Series,
    rank: usize,
}

impl LieType {
    pub fn new(series: Series, rank: usize) -> Result<Self> {
        let reason = match series {
            Series::A if rank < 1 => Some("A_r needs r >= 1"),
            Series::B if rank < 2 => Some("B_r needs r >= 2"),
            Series::C if rank < 2 => Some("C_r needs r >= 2"),
            Series::D if rank < 4 => Some("D_r needs r >= 4"),
            Series::E if !(6..=8).contains(&rank) => Some("E_r needs r in {6,7,8}"),
            Series::F if rank != 4 => Some("F_r exists only for r = 4"),
            Series::G if rank != 2 => Some("G_r exists only for r = 2"),
            _ => None,
        };
        match reason {
            Some(reason) => Err(Error::InadmissibleType {
                series: series.letter(),
                rank,
                reason,
            }),
            None => Ok(LieType { series, rank }),
        }
    }

    pub fn series(&self) -> Series {
        self.series
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Every admissible type of rank at most `max_rank`, in a fixed order.
    pub fn all_up_to_rank(max_rank: usize) -> Vec<LieType> {
        let mut out = Vec::new();
        for series in [
            Series::A,
            Series::B,
            Series::C,
            Series::D,
            Series::E,
            Series::F,
            Series::G,
        ] {
            for rank in 1..=max_rank {
                if let Ok(t) = LieType::new(series, rank) {
                    out.push(t);
                }
            }
        }
        out
    }
}

impl FromStr for LieType {
    type Err = Error;

    /// Accepts strings matching `^[A-G][1-9][0-9]*$`.
    fn from_str(s: &str) -> Result<Self> {
        let err = || Error::ParseType(s.to_string());
        let mut chars = s.chars();
        let series = chars.next().and_then(Series::from_letter).ok_or_else(err)?;
        let digits = chars.as_str();
        if digits.is_empty()
            || !digits.bytes().all(|b| b.is_ascii_digit())
            || digits.starts_with('0')
        {
            return Err(err());
        }
        let rank: usize = digits.parse().map_err(|_| err())?;
        LieType::new(series, rank)
    }
}

impl fmt::Display for LieType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.series.letter(), self.rank)
    }
}

fn cartan_matrix(t: LieType) -> Vec<Vec<i64>> {
    let r = t.rank;
    let mut a = vec![vec![0i64; r]; r];
    for (i, row) in a.iter_mut().enumerate() {
        row[i] = 2;
    }
    let mut link = |i: usize, j: usize| {
        a[i][j] = -1;
        a[j][i] = -1;
    };
    match t.series {
        Series::A | Series::B | Series::C => {
            for i in 0..r - 1 {
                link(i, i + 1);
            }
        }
        Series::D => {
            for i in 0..r - 2 {
                link(i, i + 1);
            }
            link(r - 3, r - 1);
        }
        Series::E => {
            // 1-3-4-5-6-7-8 with 2 attached to 4
            link(0, 2);
            link(1, 3);
            for i in 2..r - 1 {
                link(i, i + 1);
            }
        }
        Series::F => {
            link(0, 1);
            link(1, 2);
            link(2, 3);
        }
        Series::G => link(0, 1),
    }
    match t.series {
        // α_{r-1} long, α_r short
        Series::B => a[r - 1][r - 2] = -2,
        // α_{r-1} short, α_r long
        Series::C => a[r - 2][r - 1] = -2,
        // α_2 long, α_3 short
        Series::F => a[2][1] = -2,
        // α_1 short, α_2 long
        Series::G => a[0][1] = -3,
        _ => {}
    }
    a
}

/// Immutable root-system data for one simple type.
#[derive(Debug, Clone)]
pub struct RootSystem {
    lie_type: LieType,
    cartan: Vec<Vec<i64>>,
    cartan_inverse: QMatrix,
    symmetrizer: Vec<BigRational>,
    /// Positive roots in simple-root coordinates, ordered by height.
    positive_roots: Vec<Vec<i64>>,
    /// The same roots in fundamental-weight coordinates.
    positive_roots_weight: Vec<Weight>,
    /// `(ω_i, ω_j)` scaled by `form_scale` to integers.
    gram_scaled: Vec<Vec<i64>>,
    form_scale: i64,
}

impl RootSystem {
    pub fn build(lie_type: LieType) -> Result<Self> {
        let cartan = cartan_matrix(lie_type);
        let r = lie_type.rank;
        let cartan_inverse = linalg::inverse(&linalg::from_integers(&cartan))
            .ok_or_else(|| Error::Internal(format!("Cartan matrix of {lie_type} is singular")))?;
        let symmetrizer = symmetrizer(&cartan)?;
        let positive_roots = generate_positive_roots(&cartan);

        let positive_roots_weight = positive_roots
            .iter()
            .map(|c| {
                Weight::new(
                    (0..r)
                        .map(|i| (0..r).map(|j| cartan[i][j] * c[j]).sum())
                        .collect(),
                )
            })
            .collect();

        // (ω_i, ω_j) = (A^{-1})[j][i] · d_j
        let gram: QMatrix = (0..r)
            .map(|i| {
                (0..r)
                    .map(|j| &cartan_inverse[j][i] * &symmetrizer[j])
                    .collect()
            })
            .collect();
        let form_scale = gram
            .iter()
            .flatten()
            .fold(num_bigint::BigInt::one(), |acc, q| acc.lcm(q.denom()));
        let form_scale_q = BigRational::from_integer(form_scale.clone());
        let gram_scaled = gram
            .iter()
            .map(|row| {
                row.iter()
                    .map(|q| {
                        (q * &form_scale_q)
                            .to_integer()
                            .to_i64()
                            .expect("scaled Gram entry fits in i64")
                    })
                    .collect()
            })
            .collect();

        Ok(RootSystem {
            lie_type,
            cartan,
            cartan_inverse,
            symmetrizer,
            positive_roots,
            positive_roots_weight,
            gram_scaled,
            form_scale: form_scale.to_i64().expect("form scale fits in i64"),
        })
    }

    pub fn lie_type(&self) -> LieType {
        self.lie_type
    }

    pub fn rank(&self) -> usize {
        self.lie_type.rank
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn cartan_inverse(&self) -> &QMatrix {
        &self.cartan_inverse
    }

    /// `d_i = (α_i, α_i) / 2`; `d_i · cartan[i][j]` is symmetric.
    pub fn symmetrizer(&self) -> &[BigRational] {
        &self.symmetrizer
    }

    /// Positive roots in simple-root coordinates, sorted by height.
    pub fn positive_roots(&self) -> &[Vec<i64>] {
        &self.positive_roots
    }

    /// Positive roots in fundamental-weight coordinates, same order.
    pub fn positive_roots_weight(&self) -> &[Weight] {
        &self.positive_roots_weight
    }

    pub fn num_positive_roots(&self) -> usize {
        self.positive_roots.len()
    }

    /// `dim 𝔤 = r + 2|Φ⁺|`
    pub fn dim_algebra(&self) -> usize {
        self.rank() + 2 * self.num_positive_roots()
    }

    /// Simple root `α_i` in weight coordinates (column `i` of the Cartan matrix).
    pub fn simple_root(&self, i: usize) -> Weight {
        Weight::new(self.cartan.iter().map(|row| row[i]).collect())
    }

    pub fn rho(&self) -> Weight {
        Weight::ones(self.rank())
    }

    pub fn check_rank(&self, w: &Weight) -> Result<()> {
        if w.rank() != self.rank() {
            return Err(Error::RankMismatch {
                got: w.rank(),
                rank: self.rank(),
            });
        }
        Ok(())
    }

    pub fn weight_to_root_coords(&self, w: &Weight) -> RootCoords {
        self.qweight_to_root_coords(&w.to_rational())
    }

    /// Solves `cartan · c = w` exactly.
    pub fn qweight_to_root_coords(&self, w: &QWeight) -> RootCoords {
        RootCoords::new(linalg::mul_vec(&self.cartan_inverse, w.coords()))
    }

    pub fn root_coords_to_qweight(&self, c: &RootCoords) -> QWeight {
        QWeight::new(
            self.cartan
                .iter()
                .map(|row| {
                    row.iter()
                        .zip(c.coords())
                        .fold(BigRational::zero(), |acc, (&a, x)| acc + rat(a) * x)
                })
                .collect(),
        )
    }

    /// Converts integer simple-root coordinates to a weight.
    pub fn root_coords_to_weight(&self, c: &[i64]) -> Weight {
        Weight::new(
            self.cartan
                .iter()
                .map(|row| row.iter().zip(c).map(|(a, x)| a * x).sum())
                .collect(),
        )
    }

    pub fn in_root_lattice(&self, w: &Weight) -> bool {
        self.weight_to_root_coords(w).is_integral()
    }

    /// The invariant form, `(α, α) = 2` on long roots.
    pub fn bilinear(&self, x: &QWeight, y: &QWeight) -> BigRational {
        let r = self.rank();
        let mut acc = BigRational::zero();
        for i in 0..r {
            for j in 0..r {
                if self.gram_scaled[i][j] != 0 {
                    acc += &x[i] * &y[j] * rat(self.gram_scaled[i][j]);
                }
            }
        }
        acc / rat(self.form_scale)
    }

    /// `form_scale() · (x, y)` for integral weights, as an integer.
    pub fn scaled_form(&self, x: &Weight, y: &Weight) -> i64 {
        let r = self.rank();
        let mut acc = 0i64;
        for i in 0..r {
            let xi = x[i];
            if xi == 0 {
                continue;
            }
            let row = &self.gram_scaled[i];
            let mut s = 0i64;
            for j in 0..r {
                s += row[j] * y[j];
            }
            acc += xi * s;
        }
        acc
    }

    pub fn form_scale(&self) -> i64 {
        self.form_scale
    }

    /// Gram matrix `(ω_i, ω_j)` of the invariant form on fundamental weights.
    pub fn gram_matrix(&self) -> QMatrix {
        let scale = rat(self.form_scale);
        self.gram_scaled
            .iter()
            .map(|row| row.iter().map(|&g| rat(g) / &scale).collect())
            .collect()
    }

    /// Classical number of positive roots for this type.
    pub fn expected_num_positive_roots(&self) -> usize {
        let r = self.rank();
        match self.lie_type.series {
            Series::A => r * (r + 1) / 2,
            Series::B | Series::C => r * r,
            Series::D => r * (r - 1),
            Series::E => match r {
                6 => 36,
                7 => 63,
                _ => 120,
            },
            Series::F => 24,
            Series::G => 6,
        }
    }

    /// Order of the Weyl group, from the degrees read off the height
    /// distribution of the positive roots.
    pub fn weyl_group_order(&self) -> u128 {
        weyl_order_from_roots(self.positive_roots.iter().map(|c| c.as_slice()))
    }
}

/// `|W|` of the reflection group generated by a set of positive roots.
///
/// If `n_k` roots have height `k`, then exponent `k` occurs `n_k - n_{k+1}`
/// times and `|W|` is the product of `exponent + 1` over all exponents.
pub(crate) fn weyl_order_from_roots<'a>(roots: impl Iterator<Item = &'a [i64]>) -> u128 {
    let mut by_height: HashMap<i64, u128> = HashMap::new();
    for c in roots {
        *by_height.entry(c.iter().sum()).or_default() += 1;
    }
    let max_height = by_height.keys().copied().max().unwrap_or(0);
    let mut order: u128 = 1;
    for k in 1..=max_height {
        let here = by_height.get(&k).copied().unwrap_or(0);
        let next = by_height.get(&(k + 1)).copied().unwrap_or(0);
        for _ in 0..here.saturating_sub(next) {
            order *= (k + 1) as u128;
        }
    }
    order
}

fn symmetrizer(cartan: &[Vec<i64>]) -> Result<Vec<BigRational>> {
    let r = cartan.len();
    let mut d: Vec<Option<BigRational>> = vec![None; r];
    d[0] = Some(BigRational::one());
    let mut stack = vec![0];
    while let Some(i) = stack.pop() {
        for j in 0..r {
            if i != j && cartan[i][j] != 0 && d[j].is_none() {
                // d_i a_ij = d_j a_ji
                let dj = d[i].as_ref().unwrap() * rat(cartan[i][j]) / rat(cartan[j][i]);
                d[j] = Some(dj);
                stack.push(j);
            }
        }
    }
    let d: Vec<BigRational> = d
        .into_iter()
        .collect::<Option<_>>()
        .ok_or_else(|| Error::Internal("Dynkin diagram is disconnected".into()))?;
    let max = d.iter().max().cloned().unwrap();
    let d: Vec<BigRational> = d.iter().map(|x| x / &max).collect();
    for i in 0..r {
        for j in 0..r {
            if &d[i] * rat(cartan[i][j]) != &d[j] * rat(cartan[j][i]) {
                return Err(Error::Internal("Cartan matrix is not symmetrizable".into()));
            }
        }
    }
    Ok(d)
}

/// Positive roots by root-string closure from the simple roots.
///
/// For a positive root `β` and simple root `α_i`, the `α_i`-string through
/// `β` is `β - pα_i, …, β + qα_i` with `p - q = ⟨β, α_i^∨⟩`; `β + α_i` is a
/// root iff `q > 0`. Roots are processed height by height so `p` is known.
fn generate_positive_roots(cartan: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let r = cartan.len();
    let mut all: Vec<Vec<i64>> = Vec::new();
    let mut seen: HashSet<Vec<i64>> = HashSet::new();
    let mut layer: Vec<Vec<i64>> = (0..r)
        .map(|i| {
            let mut e = vec![0; r];
            e[i] = 1;
            e
        })
        .collect();
    for root in &layer {
        seen.insert(root.clone());
    }
    while !layer.is_empty() {
        let mut next = Vec::new();
        for beta in &layer {
            for i in 0..r {
                let mut p = 0;
                let mut probe = beta.clone();
                loop {
                    probe[i] -= 1;
                    if probe[i] < 0 || !seen.contains(&probe) {
                        break;
                    }
                    p += 1;
                }
                let pairing: i64 = (0..r).map(|j| cartan[i][j] * beta[j]).sum();
                let q = p - pairing;
                if q > 0 {
                    let mut up = beta.clone();
                    up[i] += 1;
                    if seen.insert(up.clone()) {
                        next.push(up);
                    }
                }
            }
        }
        all.append(&mut layer);
        next.sort();
        layer = next;
    }
    all.sort_by(|a, b| {
        let ha: i64 = a.iter().sum();
        let hb: i64 = b.iter().sum();
        ha.cmp(&hb).then_with(|| b.cmp(a))
    });
    all
}

/// Every leading principal minor of `m`, in order.
pub fn leading_minors(m: &QMatrix) -> Vec<BigRational> {
    (1..=m.len())
        .map(|k| {
            let sub: QMatrix = m[..k].iter().map(|row| row[..k].to_vec()).collect();
            linalg::determinant(&sub)
        })
        .collect()
}

/// Checks the structural invariants of a built root system, returning a list
/// of human-readable failures (empty when everything holds).
pub fn self_check(sys: &RootSystem) -> Vec<String> {
    let mut failures = Vec::new();
    let r = sys.rank();
    let t = sys.lie_type();

    if sys.num_positive_roots() != sys.expected_num_positive_roots() {
        failures.push(format!(
            "{t}: {} positive roots, expected {}",
            sys.num_positive_roots(),
            sys.expected_num_positive_roots()
        ));
    }
    if sys
        .cartan_inverse
        .iter()
        .flatten()
        .any(|q| !q.is_positive())
    {
        failures.push(format!(
            "{t}: inverse Cartan matrix has a non-positive entry"
        ));
    }
    if linalg::mul(&linalg::from_integers(&sys.cartan), &sys.cartan_inverse) != linalg::identity(r)
    {
        failures.push(format!("{t}: cartan · cartan_inverse != identity"));
    }

    let mut half_sum = vec![BigRational::zero(); r];
    for root in &sys.positive_roots {
        for (acc, &c) in half_sum.iter_mut().zip(root) {
            *acc += rat(c);
        }
    }
    let half = BigRational::new(1.into(), 2.into());
    let half_sum = RootCoords::new(half_sum.into_iter().map(|x| x * &half).collect());
    if sys.root_coords_to_qweight(&half_sum) != sys.rho().to_rational() {
        failures.push(format!("{t}: half the positive-root sum is not (1,…,1)"));
    }

    let two = rat(2);
    for root in &sys.positive_roots_weight {
        let q = root.to_rational();
        if sys.bilinear(&q, &q) > two {
            failures.push(format!("{t}: root {root} longer than sqrt 2"));
        }
    }
    if !sys.symmetrizer.iter().any(|d| d.is_one()) {
        failures.push(format!("{t}: no long simple root of squared length 2"));
    }
    if leading_minors(&sys.gram_matrix())
        .iter()
        .any(|m| !m.is_positive())
    {
        failures.push(format!("{t}: invariant form is not positive definite"));
    }
    failures
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sys(s: &str) -> RootSystem {
        RootSystem::build(s.parse().unwrap()).unwrap()
    }

    fn q(p: i64, d: i64) -> BigRational {
        BigRational::new(p.into(), d.into())
    }

    #[test]
    fn parse_types() {
        assert_eq!("B2".parse::<LieType>().unwrap().rank(), 2);
        assert_eq!("E6".parse::<LieType>().unwrap().series(), Series::E);
        assert_eq!("A12".parse::<LieType>().unwrap().rank(), 12);
        for bad in ["", "B", "b2", "H3", "A0", "A01", "B2x", " A1", "A-1"] {
            assert!(
                matches!(bad.parse::<LieType>(), Err(Error::ParseType(_))),
                "{bad:?}"
            );
        }
        for inadmissible in ["B1", "C1", "D3", "E5", "E9", "F3", "G3"] {
            assert!(matches!(
                inadmissible.parse::<LieType>(),
                Err(Error::InadmissibleType { .. })
            ));
        }
    }

    #[test]
    fn a1_data() {
        let s = sys("A1");
        assert_eq!(s.cartan(), &[vec![2]]);
        assert_eq!(s.positive_roots(), &[vec![1]]);
        assert_eq!(s.rho(), Weight::from([1]));
    }

    #[test]
    fn b2_convention() {
        let s = sys("B2");
        assert_eq!(s.cartan(), &[vec![2, -1], vec![-2, 2]]);
        assert_eq!(s.num_positive_roots(), 4);
        // α1 long, α2 short
        assert_eq!(s.symmetrizer(), &[q(1, 1), q(1, 2)]);
    }

    #[test]
    fn g2_has_six_positive_roots() {
        let s = sys("G2");
        assert_eq!(s.num_positive_roots(), 6);
        let highest = s.positive_roots().last().unwrap();
        assert_eq!(highest, &vec![3, 2]);
    }

    #[test]
    fn rho_in_root_coords() {
        let s = sys("B2");
        let c = s.weight_to_root_coords(&s.rho());
        assert_eq!(c.coords(), &[q(3, 2), q(2, 1)]);
    }

    #[test]
    fn two_rho_in_root_coords() {
        assert_eq!(
            sys("A2").weight_to_root_coords(&Weight::from([2, 2])),
            RootCoords::from_integers(&[2, 2])
        );
        assert_eq!(
            sys("B2").weight_to_root_coords(&Weight::from([2, 2])),
            RootCoords::from_integers(&[3, 4])
        );
    }

    #[test]
    fn simple_roots_map_to_unit_vectors() {
        for t in ["A3", "B3", "C3", "D4", "G2", "F4"] {
            let s = sys(t);
            for i in 0..s.rank() {
                let mut e = vec![0; s.rank()];
                e[i] = 1;
                assert_eq!(
                    s.weight_to_root_coords(&s.simple_root(i)),
                    RootCoords::from_integers(&e)
                );
            }
        }
    }

    #[test]
    fn bilinear_values() {
        let s = sys("A1");
        let rho = s.rho().to_rational();
        assert_eq!(s.bilinear(&rho, &rho), q(1, 2));
        let a2 = sys("A2");
        let rho = a2.rho().to_rational();
        assert_eq!(a2.bilinear(&rho, &rho), q(2, 1));
        assert_eq!(a2.bilinear(&rho, &QWeight::zero(2)), q(0, 1));
    }

    #[test]
    fn root_lattice_membership() {
        let a1 = sys("A1");
        assert!(!a1.in_root_lattice(&Weight::from([1])));
        assert!(a1.in_root_lattice(&Weight::from([2])));
        let a2 = sys("A2");
        assert!(!a2.in_root_lattice(&Weight::from([1, 0])));
        assert_eq!(
            a2.weight_to_root_coords(&Weight::from([1, 0])).coords(),
            &[q(2, 3), q(1, 3)]
        );
        for t in ["B3", "C3", "D4", "G2", "F4", "E6"] {
            let s = sys(t);
            assert!(s.in_root_lattice(&s.rho().scale(2)));
        }
    }

    #[test]
    fn weyl_orders() {
        let cases = [
            ("A1", 2),
            ("A3", 24),
            ("B3", 48),
            ("C4", 384),
            ("D4", 192),
            ("G2", 12),
            ("F4", 1152),
            ("E6", 51840),
            ("E7", 2903040),
            ("E8", 696729600),
        ];
        for (t, n) in cases {
            assert_eq!(sys(t).weyl_group_order(), n, "{t}");
        }
    }

    #[test]
    fn every_admissible_type_passes_self_check() {
        for t in LieType::all_up_to_rank(8) {
            let s = RootSystem::build(t).unwrap();
            assert!(self_check(&s).is_empty(), "{:?}", self_check(&s));
        }
    }
}
