//! Verification of the statements about the components of `V(ρ) ⊗ V(ρ)`:
//!
//! * every lattice point `λ` of `P(2ρ)` (dominant, `2ρ - λ` in the
//!   nonnegative integer root cone) occurs with `c_{ρρ}^λ ≥ 1`, and nothing
//!   else occurs;
//! * the vertices `v_J = ρ + w_J ρ` occur exactly once;
//! * `Σ c_{ρρ}^λ dim V(λ) = 2^{2|Φ⁺|}`, matching `dim Λ*𝔤 = 2^r (dim V(ρ))²`;
//! * weights of `V(ρ)` satisfy `(μ, μ) ≤ (ρ, ρ)` with equality on `W·ρ`;
//! * `w_J ρ + 2ρ - w(2ρ)` is never a weight of `V(ρ)` for `w ≠ 1`;
//! * `V(dλ) ⊂ V(dρ) ⊗ V(dρ)` for a saturation factor `d`.
//!
//! Failed checks are reported, never raised as errors: hunting for
//! counterexamples is part of the job.

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::polytope::{lattice_points_2rho, vertices_2rho_integral};
use crate::reps::{dim, tensor_decompose, weight_system, Decomposition, DominantCharacter};
use crate::rootsys::{LieType, RootSystem, Series};
use crate::weight::Weight;
use crate::weyl::{orbit, to_dominant, wj_rho, Subset};

/// Hard ceiling on `|Φ⁺|` even with `allow_large` (F4 has 24).
pub const MAX_LARGE_POSITIVE_ROOTS: usize = 24;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConjecturePoint {
    pub weight: Weight,
    pub root_gap: Vec<i64>,
    pub multiplicity: u64,
    pub is_vertex: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConjectureReport {
    pub lie_type: LieType,
    pub points: Vec<ConjecturePoint>,
    pub all_positive: bool,
    pub vertex_mults_all_one: bool,
    pub dim_identity_holds: bool,
    /// Every component of `ρ ⊗ ρ` is a lattice point of `P(2ρ)`.
    pub necessity_holds: bool,
    /// Components of `ρ ⊗ ρ` that are not lattice points (expected empty).
    pub stray_components: Vec<(Weight, u64)>,
    pub runtime_ms: u128,
}

impl ConjectureReport {
    pub fn counterexamples(&self) -> impl Iterator<Item = &ConjecturePoint> {
        self.points.iter().filter(|p| p.multiplicity == 0)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SaturationPoint {
    pub weight: Weight,
    pub multiplicity: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SaturationReport {
    pub lie_type: LieType,
    pub d: u64,
    pub points: Vec<SaturationPoint>,
    pub all_positive: bool,
    pub runtime_ms: u128,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DimensionIdentity {
    /// `Σ c_{ρρ}^λ dim V(λ)`
    pub sum: BigUint,
    /// `2^{2|Φ⁺|}`
    pub expected: BigUint,
    pub dim_rho: BigUint,
    /// `2^{dim 𝔤} = 2^r · 2^{2|Φ⁺|}`
    pub exterior_algebra_holds: bool,
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NormReport {
    pub weights_checked: usize,
    pub equality_cases: usize,
    pub violations: Vec<Weight>,
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EmptinessReport {
    pub subset: Subset,
    /// Number of nontrivial `w ∈ W` examined.
    pub checked: usize,
    /// Candidates `w_J ρ + 2ρ - w(2ρ)` that turned out to be weights of `V(ρ)`.
    pub violations: Vec<Weight>,
    /// Every candidate is strictly longer than `ρ`.
    pub norm_exceeds_rho: bool,
    pub holds: bool,
}

/// Wall-clock timer; reads 0 on wasm32, which has no clock in `std`.
struct Stopwatch {
    #[cfg(not(target_arch = "wasm32"))]
    start: std::time::Instant,
}

impl Stopwatch {
    fn start() -> Self {
        Stopwatch {
            #[cfg(not(target_arch = "wasm32"))]
            start: std::time::Instant::now(),
        }
    }

    fn elapsed_ms(&self) -> u128 {
        #[cfg(not(target_arch = "wasm32"))]
        return self.start.elapsed().as_millis();
        #[cfg(target_arch = "wasm32")]
        return 0;
    }
}

/// The saturation factors quoted for the classical series.
pub fn default_saturation_factor(series: Series) -> Option<u64> {
    match series {
        Series::A => Some(1),
        Series::B | Series::C => Some(2),
        Series::D => Some(4),
        _ => None,
    }
}

/// Limits for a full `ρ ⊗ ρ` computation, or a guard error for types beyond
/// the default ceiling.
pub fn rho_square_limits(sys: &RootSystem, limits: &Limits) -> Result<Limits> {
    let n = sys.num_positive_roots();
    let ceiling = if limits.allow_large {
        MAX_LARGE_POSITIVE_ROOTS
    } else {
        limits.max_verify_roots
    };
    if n > ceiling {
        return Err(Error::guard(
            if limits.allow_large {
                "ρ ⊗ ρ verification (positive roots)"
            } else {
                "ρ ⊗ ρ verification (positive roots; pass allow_large to lift)"
            },
            n,
            ceiling as u64,
        ));
    }
    let mut out = *limits;
    if limits.allow_large {
        out.max_dim = out.max_dim.max(1 << n);
    }
    Ok(out)
}

/// `V(ρ) ⊗ V(ρ)`, under the verification guards.
pub fn rho_square(sys: &RootSystem, limits: &Limits) -> Result<Decomposition> {
    let limits = rho_square_limits(sys, limits)?;
    tensor_decompose(sys, &sys.rho(), &sys.rho(), &limits)
}

/// `c_{ρρ}^{v_J}` for every `J`, binary-counter order.
pub fn verify_vertices(sys: &RootSystem, limits: &Limits) -> Result<Vec<(Subset, Weight, u64)>> {
    let decomposition = rho_square(sys, limits)?;
    vertex_multiplicities(sys, &decomposition, limits)
}

fn vertex_multiplicities(
    sys: &RootSystem,
    decomposition: &Decomposition,
    limits: &Limits,
) -> Result<Vec<(Subset, Weight, u64)>> {
    Ok(vertices_2rho_integral(sys, limits)?
        .into_iter()
        .map(|(j, v)| {
            let c = decomposition.get(&v);
            (j, v, c)
        })
        .collect())
}

/// Joins `ρ ⊗ ρ` against the lattice points of `P(2ρ)`.
pub fn verify_conjecture(sys: &RootSystem, limits: &Limits) -> Result<ConjectureReport> {
    let start = Stopwatch::start();
    let big = rho_square_limits(sys, limits)?;
    let decomposition = tensor_decompose(sys, &sys.rho(), &sys.rho(), &big)?;
    let lattice = lattice_points_2rho(sys, &big)?;

    let points: Vec<ConjecturePoint> = lattice
        .into_iter()
        .map(|p| ConjecturePoint {
            multiplicity: decomposition.get(&p.weight),
            weight: p.weight,
            root_gap: p.root_gap,
            is_vertex: p.is_vertex,
        })
        .collect();

    let on_lattice: std::collections::HashSet<&Weight> = points.iter().map(|p| &p.weight).collect();
    let stray_components: Vec<(Weight, u64)> = decomposition
        .iter()
        .filter(|(w, _)| !on_lattice.contains(w))
        .map(|(w, c)| (w.clone(), *c))
        .collect();

    let identity = dimension_identity(sys, &decomposition);
    Ok(ConjectureReport {
        lie_type: sys.lie_type(),
        all_positive: points.iter().all(|p| p.multiplicity >= 1),
        vertex_mults_all_one: points
            .iter()
            .filter(|p| p.is_vertex)
            .all(|p| p.multiplicity == 1),
        dim_identity_holds: identity.holds && identity.exterior_algebra_holds,
        necessity_holds: stray_components.is_empty(),
        stray_components,
        points,
        runtime_ms: start.elapsed_ms(),
    })
}

fn dimension_identity(sys: &RootSystem, decomposition: &Decomposition) -> DimensionIdentity {
    let n = sys.num_positive_roots();
    let sum = decomposition.total_dimension(sys);
    let expected = BigUint::from(1u8) << (2 * n);
    let dim_rho = dim(sys, &sys.rho());
    let exterior = BigUint::from(1u8) << sys.dim_algebra();
    let exterior_algebra_holds =
        exterior == (BigUint::from(1u8) << sys.rank()) * &dim_rho * &dim_rho;
    DimensionIdentity {
        holds: sum == expected && dim_rho.clone() * &dim_rho == expected,
        sum,
        expected,
        dim_rho,
        exterior_algebra_holds,
    }
}

/// `Σ c_{ρρ}^λ dim V(λ) = (dim V(ρ))² = 2^{2|Φ⁺|}` and
/// `2^{dim 𝔤} = 2^r · 2^{2|Φ⁺|}`.
pub fn verify_dimension_identity(sys: &RootSystem, limits: &Limits) -> Result<DimensionIdentity> {
    Ok(dimension_identity(sys, &rho_square(sys, limits)?))
}

/// `(μ, μ) ≤ (ρ, ρ)` on `Π(ρ)`, with equality exactly on `W·ρ`.
pub fn verify_norm_inequality(sys: &RootSystem, limits: &Limits) -> Result<NormReport> {
    let limits = rho_square_limits(sys, limits)?;
    let rho = sys.rho();
    let rho_norm = sys.scaled_form(&rho, &rho);
    let ws = weight_system(sys, &rho, &limits)?;
    let mut violations = Vec::new();
    let mut equality_cases = 0;
    for (mu, _) in ws.iter() {
        let norm = sys.scaled_form(mu, mu);
        let in_orbit = to_dominant(sys, mu).representative == rho;
        if norm == rho_norm {
            equality_cases += 1;
        }
        if norm > rho_norm || (norm == rho_norm) != in_orbit {
            violations.push(mu.clone());
        }
    }
    Ok(NormReport {
        weights_checked: ws.len(),
        equality_cases,
        holds: violations.is_empty(),
        violations,
    })
}

/// For every `w ≠ 1`, checks that `w_J ρ + 2ρ - w(2ρ) ∉ Π(ρ)`. Group
/// elements are enumerated through the free orbit `W·2ρ`.
pub fn verify_emptiness(
    sys: &RootSystem,
    subset: Subset,
    limits: &Limits,
) -> Result<EmptinessReport> {
    let order = sys.weyl_group_order();
    if order > limits.max_weyl_order as u128 {
        return Err(Error::guard("Weyl group", order, limits.max_weyl_order));
    }
    if subset.indices().iter().any(|&i| i >= sys.rank()) {
        return Err(Error::IndexOutOfRange {
            index: *subset.indices().last().unwrap(),
            rank: sys.rank(),
        });
    }
    let rho = sys.rho();
    let two_rho = rho.scale(2);
    let rho_char = DominantCharacter::new(sys, &rho, limits)?;
    let rho_norm = sys.scaled_form(&rho, &rho);
    let base = &wj_rho(sys, subset) + &two_rho;

    let mut checked = 0;
    let mut violations = Vec::new();
    let mut norm_exceeds_rho = true;
    for image in orbit(sys, &two_rho, limits)? {
        if image == two_rho {
            continue;
        }
        checked += 1;
        let candidate = &base - &image;
        if sys.scaled_form(&candidate, &candidate) <= rho_norm {
            norm_exceeds_rho = false;
        }
        if rho_char.multiplicity(sys, &candidate) != 0 {
            violations.push(candidate);
        }
    }
    Ok(EmptinessReport {
        subset,
        checked,
        holds: violations.is_empty(),
        violations,
        norm_exceeds_rho,
    })
}

/// `c_{dρ,dρ}^{dλ}` for every lattice point `λ` of `P(2ρ)`.
pub fn verify_saturation(
    sys: &RootSystem,
    d: Option<u64>,
    limits: &Limits,
) -> Result<SaturationReport> {
    let start = Stopwatch::start();
    let d = match d {
        Some(d) => d,
        None => default_saturation_factor(sys.lie_type().series()).ok_or_else(|| {
            Error::Domain(format!(
                "no default saturation factor for {}; pass d explicitly",
                sys.lie_type()
            ))
        })?,
    };
    if d < 1 {
        return Err(Error::Domain(
            "saturation factor must be a positive integer".into(),
        ));
    }
    let d_i64 =
        i64::try_from(d).map_err(|_| Error::Domain(format!("saturation factor {d} too large")))?;
    let lattice = lattice_points_2rho(sys, limits)?;
    let d_rho = sys.rho().scale(d_i64);
    let decomposition = tensor_decompose(sys, &d_rho, &d_rho, limits)?;
    let points: Vec<SaturationPoint> = lattice
        .into_iter()
        .map(|p| SaturationPoint {
            multiplicity: decomposition.get(&p.weight.scale(d_i64)),
            weight: p.weight,
        })
        .collect();
    Ok(SaturationReport {
        lie_type: sys.lie_type(),
        d,
        all_positive: points.iter().all(|p| p.multiplicity >= 1),
        points,
        runtime_ms: start.elapsed_ms(),
    })
}
