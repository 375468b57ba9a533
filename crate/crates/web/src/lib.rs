//! Browser bindings for the rank-2 demo page.
//!
//! Each exported function has a plain Rust counterpart returning a
//! serializable view, which is what the native tests exercise.

use num_traits::ToPrimitive;
use serde::Serialize;
use wasm_bindgen::prelude::*;

use rho_tensor::{kostant, polytope, reps, Error, LieType, Limits, QWeight, RootSystem, Weight};

/// Planar positions of the two fundamental weights, so that the page can
/// draw weights with the true invariant-form geometry.
#[derive(Debug, Clone, Serialize, PartialEq)]
pub struct Basis {
    pub omega1: [f64; 2],
    pub omega2: [f64; 2],
}

#[derive(Debug, Clone, Serialize)]
pub struct PolytopePoint {
    pub weight: Vec<i64>,
    pub multiplicity: u64,
    pub is_vertex: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct PolytopeView {
    pub lie_type: String,
    pub basis: Basis,
    /// Vertices of P(2ρ) in cyclic order around the polygon.
    pub vertices: Vec<Vec<i64>>,
    pub points: Vec<PolytopePoint>,
    pub all_positive: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct Component {
    pub weight: Vec<i64>,
    pub multiplicity: u64,
    pub dim: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct TensorView {
    pub lie_type: String,
    pub basis: Basis,
    pub lambda: Vec<i64>,
    pub mu: Vec<i64>,
    pub components: Vec<Component>,
    pub dim_product: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct DiagramView {
    pub lie_type: String,
    pub basis: Basis,
    pub highest_weight: Vec<i64>,
    pub dim: String,
    /// `(weight, multiplicity)` for every weight of the module.
    pub weights: Vec<(Vec<i64>, u64)>,
}

/// Keeps the page responsive: nothing larger than this is expanded.
const DEMO_MAX_DIM: u64 = 200_000;

fn demo_limits() -> Limits {
    Limits {
        max_dim: DEMO_MAX_DIM,
        ..Limits::default()
    }
}

fn rank_two(name: &str) -> Result<RootSystem, Error> {
    let t: LieType = name.trim().parse()?;
    if t.rank() != 2 {
        return Err(Error::Domain(format!(
            "the demo draws rank-2 types only, got {t}"
        )));
    }
    RootSystem::build(t)
}

fn weight(sys: &RootSystem, coords: &[i64], what: &str) -> Result<Weight, Error> {
    let w = Weight::new(coords.to_vec());
    sys.check_rank(&w)?;
    if !w.is_dominant() {
        return Err(Error::Domain(format!("{what} must be dominant, got {w}")));
    }
    Ok(w)
}

pub fn basis(sys: &RootSystem) -> Basis {
    let e = |i: usize| {
        let mut c = vec![0; sys.rank()];
        c[i] = 1;
        Weight::new(c).to_rational()
    };
    let g = |a: &QWeight, b: &QWeight| sys.bilinear(a, b).to_f64().unwrap_or(f64::NAN);
    let (w1, w2) = (e(0), e(1));
    let (g11, g12, g22) = (g(&w1, &w1), g(&w1, &w2), g(&w2, &w2));
    let x = g11.sqrt();
    Basis {
        omega1: [x, 0.0],
        omega2: [g12 / x, (g22 - g12 * g12 / x / x).sqrt()],
    }
}

pub fn polytope_view(name: &str) -> Result<PolytopeView, Error> {
    let sys = rank_two(name)?;
    let limits = demo_limits();
    let report = kostant::verify_conjecture(&sys, &limits)?;
    let vertices = polytope::vertices_2rho_integral(&sys, &limits)?;
    // For rank 2 the four vertices go around as ∅, {1}, {1,2}, {2}.
    let order = [0b00u32, 0b01, 0b11, 0b10];
    let cyclic = order
        .iter()
        .filter_map(|m| vertices.iter().find(|(j, _)| j.0 == *m))
        .map(|(_, v)| v.coords().to_vec())
        .collect();
    Ok(PolytopeView {
        lie_type: sys.lie_type().to_string(),
        basis: basis(&sys),
        vertices: cyclic,
        points: report
            .points
            .iter()
            .map(|p| PolytopePoint {
                weight: p.weight.coords().to_vec(),
                multiplicity: p.multiplicity,
                is_vertex: p.is_vertex,
            })
            .collect(),
        all_positive: report.all_positive,
    })
}

pub fn tensor_view(name: &str, lambda: &[i64], mu: &[i64]) -> Result<TensorView, Error> {
    let sys = rank_two(name)?;
    let lambda = weight(&sys, lambda, "λ")?;
    let mu = weight(&sys, mu, "μ")?;
    let d = reps::tensor_decompose(&sys, &lambda, &mu, &demo_limits())?;
    Ok(TensorView {
        lie_type: sys.lie_type().to_string(),
        basis: basis(&sys),
        components: d
            .iter()
            .map(|(nu, c)| Component {
                weight: nu.coords().to_vec(),
                multiplicity: *c,
                dim: reps::dim(&sys, nu).to_string(),
            })
            .collect(),
        dim_product: (reps::dim(&sys, &lambda) * reps::dim(&sys, &mu)).to_string(),
        lambda: lambda.into_coords(),
        mu: mu.into_coords(),
    })
}

pub fn diagram_view(name: &str, lambda: &[i64]) -> Result<DiagramView, Error> {
    let sys = rank_two(name)?;
    let lambda = weight(&sys, lambda, "λ")?;
    let ws = reps::weight_system(&sys, &lambda, &demo_limits())?;
    Ok(DiagramView {
        lie_type: sys.lie_type().to_string(),
        basis: basis(&sys),
        dim: reps::dim(&sys, &lambda).to_string(),
        weights: ws.iter().map(|(w, m)| (w.coords().to_vec(), *m)).collect(),
        highest_weight: lambda.into_coords(),
    })
}

fn to_js<T: Serialize>(r: Result<T, Error>) -> Result<JsValue, JsError> {
    let v = r.map_err(|e| JsError::new(&e.to_string()))?;
    serde_wasm_bindgen::to_value(&v).map_err(|e| JsError::new(&e.to_string()))
}

/// Lattice points of P(2ρ) with their multiplicities in V(ρ)⊗V(ρ).
#[wasm_bindgen]
pub fn polytope(lie_type: &str) -> Result<JsValue, JsError> {
    to_js(polytope_view(lie_type))
}

/// Decomposition of V(λ)⊗V(μ).
#[wasm_bindgen]
pub fn tensor(lie_type: &str, lambda: &[i32], mu: &[i32]) -> Result<JsValue, JsError> {
    let widen = |v: &[i32]| v.iter().map(|&x| x as i64).collect::<Vec<_>>();
    to_js(tensor_view(lie_type, &widen(lambda), &widen(mu)))
}

/// All weights of V(λ) with multiplicities.
#[wasm_bindgen]
pub fn diagram(lie_type: &str, lambda: &[i32]) -> Result<JsValue, JsError> {
    let lambda: Vec<i64> = lambda.iter().map(|&x| x as i64).collect();
    to_js(diagram_view(lie_type, &lambda))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: f64, b: f64) -> bool {
        (a - b).abs() < 1e-12
    }

    #[test]
    fn basis_angles() {
        // ω1, ω2 meet at 60° in A2, 45° in B2 and C2, 30° in G2.
        for (name, deg) in [("A2", 60.0f64), ("B2", 45.0), ("C2", 45.0), ("G2", 30.0)] {
            let b = basis(&rank_two(name).unwrap());
            let dot = b.omega1[0] * b.omega2[0] + b.omega1[1] * b.omega2[1];
            let n1 = b.omega1[0].hypot(b.omega1[1]);
            let n2 = b.omega2[0].hypot(b.omega2[1]);
            assert!(close((dot / n1 / n2).acos().to_degrees(), deg), "{name}");
        }
    }

    #[test]
    fn polytope_b2() {
        let v = polytope_view("B2").unwrap();
        assert_eq!(
            v.vertices,
            vec![vec![2, 2], vec![0, 4], vec![0, 0], vec![3, 0]]
        );
        assert_eq!(v.points.len(), 8);
        assert!(v.all_positive);
        let p = v.points.iter().find(|p| p.weight == [0, 2]).unwrap();
        assert_eq!((p.multiplicity, p.is_vertex), (2, false));
    }

    #[test]
    fn tensor_a2_rho_squared() {
        let v = tensor_view("A2", &[1, 1], &[1, 1]).unwrap();
        let total: usize = v.components.iter().map(|c| c.multiplicity as usize).sum();
        assert_eq!(total, 6);
        assert_eq!(v.dim_product, "64");
    }

    #[test]
    fn diagram_g2_short_fundamental() {
        let v = diagram_view("G2", &[1, 0]).unwrap();
        assert_eq!(v.dim, "7");
        assert_eq!(v.weights.len(), 7);
        assert!(v.weights.iter().all(|(_, m)| *m == 1));
    }

    #[test]
    fn rejects_other_ranks_and_bad_weights() {
        assert!(polytope_view("A3").is_err());
        assert!(tensor_view("A2", &[1, -1], &[0, 0]).is_err());
        assert!(diagram_view("A2", &[1]).is_err());
        assert!(diagram_view("A2", &[300, 300]).is_err());
    }
}
