//! The `rho-tensor` command line: argument model, dispatch, and report
//! rendering in text or JSON.
//!
//! Exit codes: 0 when every requested check passes, 1 when a mathematical
//! check fails (the report names it), 2 on usage or guard errors.

use std::collections::HashSet;
use std::fmt::Write as _;

use clap::{Args, Parser, Subcommand};
use num_traits::Zero;
use serde_json::{json, Value};

use rho_tensor::kostant::{self, ConjectureReport};
use rho_tensor::polytope::{self, VertexSet};
use rho_tensor::reps;
use rho_tensor::rootsys::{self, RootSystem};
use rho_tensor::{Error, LieType, Limits, QWeight, Subset, Weight};

pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Exact computations around the components of V(ρ)⊗V(ρ).
///
/// Lie types are written like B2 or E6. Cartan conventions follow Bourbaki:
/// cartan[i][j] = α_j(H_{α_i}); in B_r the last simple root α_r is short,
/// in C_r it is long; in G2 α1 is short. Weights are integer tuples in the
/// fundamental-weight basis.
#[derive(Debug, Parser)]
#[command(name = "rho-tensor", version)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    #[command(flatten)]
    pub global: GlobalOpts,
}

#[derive(Debug, Clone, Args)]
pub struct GlobalOpts {
    /// Emit a machine-readable JSON report instead of text.
    #[arg(long, global = true)]
    pub json: bool,

    /// Largest Weyl orbit that may be enumerated.
    #[arg(long, global = true, default_value_t = Limits::default().max_orbit)]
    pub max_orbit: u64,

    /// Largest representation dimension whose weight system may be expanded.
    #[arg(long, global = true, env = "RHO_TENSOR_MAX_DIM", default_value_t = Limits::default().max_dim)]
    pub max_dim: u64,

    /// Allow full ρ⊗ρ verification beyond 16 positive roots (F4).
    #[arg(long, global = true)]
    pub allow_large: bool,
}

impl GlobalOpts {
    pub fn limits(&self) -> Limits {
        Limits {
            max_orbit: self.max_orbit,
            max_dim: self.max_dim,
            allow_large: self.allow_large,
            ..Limits::default()
        }
    }
}

#[derive(Debug, Clone, Subcommand)]
pub enum Command {
    /// Cartan data, positive roots and root-system self-checks.
    Roots { lie_type: String },
    /// Vertices of P(μ) (default μ = 2ρ) by both formulas.
    Vertices {
        lie_type: String,
        /// Regular dominant μ, one integer per simple root.
        #[arg(long, num_args = 1.., allow_negative_numbers = true)]
        weights: Option<Vec<String>>,
    },
    /// Decompose V(λ)⊗V(μ); pass λ then μ, r integers each.
    Tensor {
        lie_type: String,
        #[arg(long, num_args = 1.., required = true, allow_negative_numbers = true)]
        weights: Vec<String>,
    },
    /// Check every lattice point of P(2ρ) against V(ρ)⊗V(ρ).
    VerifyKostant { lie_type: String },
    /// Check V(dλ) ⊂ V(dρ)⊗V(dρ) for every lattice point λ of P(2ρ).
    VerifySaturation {
        lie_type: String,
        /// Saturation factor; defaults to 1 (A), 2 (B, C), 4 (D).
        #[arg(long)]
        d: Option<u64>,
    },
    /// Root-system invariants, vertex cross-checks, norm inequality,
    /// emptiness, conjecture and dimension identity, in that order.
    VerifyAll { lie_type: String },
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Roots { .. } => "roots",
            Command::Vertices { .. } => "vertices",
            Command::Tensor { .. } => "tensor",
            Command::VerifyKostant { .. } => "verify-kostant",
            Command::VerifySaturation { .. } => "verify-saturation",
            Command::VerifyAll { .. } => "verify-all",
        }
    }

    pub fn lie_type(&self) -> &str {
        match self {
            Command::Roots { lie_type }
            | Command::Vertices { lie_type, .. }
            | Command::Tensor { lie_type, .. }
            | Command::VerifyKostant { lie_type }
            | Command::VerifySaturation { lie_type, .. }
            | Command::VerifyAll { lie_type } => lie_type,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

impl Check {
    fn new(name: &str, pass: bool, detail: impl Into<String>) -> Self {
        Check {
            name: name.to_string(),
            pass,
            detail: detail.into(),
        }
    }
}

/// Everything a command produces, before rendering.
#[derive(Debug, Clone)]
pub struct Report {
    pub lie_type: String,
    pub command: String,
    pub results: Value,
    pub checks: Vec<Check>,
    pub text: String,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn exit_code(&self) -> i32 {
        if self.passed() {
            EXIT_OK
        } else {
            EXIT_CHECK_FAILED
        }
    }

    pub fn to_json_value(&self) -> Value {
        json!({
            "tool_version": TOOL_VERSION,
            "lie_type": self.lie_type,
            "command": self.command,
            "results": self.results,
            "checks": self.checks.iter().map(|c| json!({
                "name": c.name,
                "pass": c.pass,
                "detail": c.detail,
            })).collect::<Vec<_>>(),
        })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_json_value()).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut out = self.text.clone();
        if !self.checks.is_empty() {
            let _ = writeln!(out, "checks:");
            for c in &self.checks {
                let _ = writeln!(
                    out,
                    "  [{}] {}: {}",
                    if c.pass { "PASS" } else { "FAIL" },
                    c.name,
                    c.detail
                );
            }
        }
        out
    }
}

fn usage(msg: impl Into<String>) -> Error {
    Error::Domain(msg.into())
}

pub fn parse_type(s: &str) -> Result<RootSystem, Error> {
    let t: LieType = s.parse()?;
    RootSystem::build(t)
}

/// Integers from tokens such as `1 2`, `1,2` or `(1,2)`.
pub fn parse_integers(tokens: &[String]) -> Result<Vec<i64>, Error> {
    tokens
        .iter()
        .flat_map(|t| t.split(|c: char| c == ',' || c.is_whitespace()))
        .map(|t| t.trim_matches(|c| c == '(' || c == ')'))
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.parse::<i64>()
                .map_err(|_| usage(format!("cannot parse weight coordinate {t:?}")))
        })
        .collect()
}

fn weight_json(w: &Weight) -> Value {
    json!(w.coords())
}

fn qweight_json(w: &QWeight) -> Value {
    json!(w.to_strings())
}

fn subset_json(j: Subset) -> Value {
    json!(j.labels())
}

fn subset_text(j: Subset) -> String {
    let labels: Vec<String> = j.labels().iter().map(|l| l.to_string()).collect();
    format!("{{{}}}", labels.join(","))
}

/// Runs a parsed command line and returns the report, or an error that maps
/// to exit code 2.
pub fn execute(cli: &Cli) -> Result<Report, Error> {
    let limits = cli.global.limits();
    let sys = parse_type(cli.command.lie_type())?;
    let (results, checks, text) = match &cli.command {
        Command::Roots { .. } => roots(&sys),
        Command::Vertices { weights, .. } => vertices(&sys, weights.as_deref(), &limits)?,
        Command::Tensor { weights, .. } => tensor(&sys, weights, &limits)?,
        Command::VerifyKostant { .. } => verify_kostant(&sys, &limits)?,
        Command::VerifySaturation { d, .. } => verify_saturation(&sys, *d, &limits)?,
        Command::VerifyAll { .. } => verify_all(&sys, &limits)?,
    };
    Ok(Report {
        lie_type: sys.lie_type().to_string(),
        command: cli.command.name().to_string(),
        results,
        checks,
        text,
    })
}

/// Parses `args` (including the program name), runs, and returns the exit
/// code together with what goes to standard output and standard error.
pub fn run<I, T>(args: I) -> (i32, String, String)
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            return if code == EXIT_OK {
                (code, rendered, String::new())
            } else {
                (code, String::new(), rendered)
            };
        }
    };
    match execute(&cli) {
        Ok(report) => {
            let out = if cli.global.json {
                report.to_json() + "\n"
            } else {
                report.to_text()
            };
            (report.exit_code(), out, String::new())
        }
        Err(e) => (EXIT_USAGE, String::new(), format!("error: {e}\n")),
    }
}

type Output = (Value, Vec<Check>, String);

fn roots_check(sys: &RootSystem) -> Check {
    let failures = rootsys::self_check(sys);
    Check::new(
        "root_system_invariants",
        failures.is_empty(),
        if failures.is_empty() {
            format!(
                "{} positive roots; inverse Cartan matrix positive; form positive definite",
                sys.num_positive_roots()
            )
        } else {
            failures.join("; ")
        },
    )
}

fn roots(sys: &RootSystem) -> Output {
    let roots: Vec<Value> = sys
        .positive_roots()
        .iter()
        .zip(sys.positive_roots_weight())
        .map(|(c, w)| json!({"root_coords": c, "weight": weight_json(w)}))
        .collect();
    let inverse: Vec<Vec<String>> = sys
        .cartan_inverse()
        .iter()
        .map(|row| row.iter().map(|q| q.to_string()).collect())
        .collect();
    let results = json!({
        "rank": sys.rank(),
        "cartan": sys.cartan(),
        "cartan_inverse": inverse,
        "symmetrizer": sys.symmetrizer().iter().map(|q| q.to_string()).collect::<Vec<_>>(),
        "positive_roots": roots,
        "num_positive_roots": sys.num_positive_roots(),
        "rho": weight_json(&sys.rho()),
        "weyl_group_order": sys.weyl_group_order().to_string(),
        "dim_algebra": sys.dim_algebra(),
    });

    let mut text = String::new();
    let _ = writeln!(text, "{} (rank {})", sys.lie_type(), sys.rank());
    let _ = writeln!(text, "cartan matrix:");
    for row in sys.cartan() {
        let _ = writeln!(text, "  {row:?}");
    }
    let _ = writeln!(text, "inverse cartan matrix:");
    for row in &inverse {
        let _ = writeln!(text, "  [{}]", row.join(", "));
    }
    let _ = writeln!(text, "positive roots ({}):", sys.num_positive_roots());
    for (c, w) in sys.positive_roots().iter().zip(sys.positive_roots_weight()) {
        let _ = writeln!(text, "  {c:?}  weight {w}");
    }
    let _ = writeln!(text, "|W| = {}", sys.weyl_group_order());
    (results, vec![roots_check(sys)], text)
}

fn vertex_rows(vs: &VertexSet) -> Vec<Value> {
    vs.report_order()
        .iter()
        .map(|(j, v)| json!({"J": subset_json(*j), "vertex": qweight_json(v)}))
        .collect()
}

/// Orbit average against closed form, distinctness, coordinate support and
/// the vertex criterion on every lattice point.
fn vertex_cross_checks(
    sys: &RootSystem,
    limits: &Limits,
) -> Result<(VertexSet, Vec<Check>), Error> {
    let two_rho = sys.rho().scale(2);
    let avg = polytope::vertices(sys, &two_rho, limits)?;
    let closed = polytope::vertices_2rho(sys, limits)?;
    let mut checks = Vec::new();

    let mismatches: Vec<String> = avg
        .iter()
        .zip(closed.iter())
        .filter(|(a, b)| a.1 != b.1)
        .map(|(a, _)| subset_text(a.0))
        .collect();
    checks.push(Check::new(
        "vertices_orbit_average_matches_closed_form",
        mismatches.is_empty(),
        if mismatches.is_empty() {
            format!("{} subsets agree", avg.len())
        } else {
            format!("disagree at {}", mismatches.join(" "))
        },
    ));

    let distinct: HashSet<&QWeight> = closed.iter().map(|(_, v)| v).collect();
    let support_ok = closed
        .iter()
        .all(|(j, v)| (0..sys.rank()).all(|i| v[i].is_zero() == j.contains(i)));
    checks.push(Check::new(
        "vertices_distinct_with_expected_support",
        distinct.len() == 1 << sys.rank() && support_ok,
        format!(
            "{} distinct of {}; zero coordinates exactly on J: {}",
            distinct.len(),
            1u64 << sys.rank(),
            support_ok
        ),
    ));

    let lattice = polytope::lattice_points_2rho(sys, limits)?;
    let vertex_set: HashSet<Weight> = closed.iter().filter_map(|(_, v)| v.to_integral()).collect();
    let mut bad = Vec::new();
    for p in &lattice {
        let criterion = polytope::vertex_criterion(sys, &two_rho, &p.weight.to_rational())?;
        if criterion != vertex_set.contains(&p.weight) {
            bad.push(p.weight.to_string());
        }
    }
    checks.push(Check::new(
        "vertex_criterion_classifies_lattice_points",
        bad.is_empty(),
        if bad.is_empty() {
            format!("{} lattice points classified", lattice.len())
        } else {
            format!("misclassified: {}", bad.join(" "))
        },
    ));
    Ok((closed, checks))
}

fn vertices(
    sys: &RootSystem,
    weights: Option<&[String]>,
    limits: &Limits,
) -> Result<Output, Error> {
    let mu = match weights {
        Some(tokens) => {
            let coords = parse_integers(tokens)?;
            if coords.len() != sys.rank() {
                return Err(usage(format!(
                    "expected {} coordinates for μ, got {}",
                    sys.rank(),
                    coords.len()
                )));
            }
            Weight::new(coords)
        }
        None => sys.rho().scale(2),
    };
    let is_two_rho = mu == sys.rho().scale(2);
    let vs = polytope::vertices(sys, &mu, limits)?;

    let mut checks = Vec::new();
    let mut failing = Vec::new();
    for (j, v) in vs.iter() {
        if !polytope::vertex_criterion(sys, &mu, v)? {
            failing.push(subset_text(*j));
        }
    }
    checks.push(Check::new(
        "vertex_criterion_holds",
        failing.is_empty(),
        if failing.is_empty() {
            format!("all {} vertices satisfy min(m_i, a_i) = 0", vs.len())
        } else {
            format!("fails for {}", failing.join(" "))
        },
    ));
    let distinct: HashSet<&QWeight> = vs.iter().map(|(_, v)| v).collect();
    checks.push(Check::new(
        "vertices_distinct",
        distinct.len() == vs.len(),
        format!("{} distinct of {}", distinct.len(), vs.len()),
    ));
    if is_two_rho {
        let (_, cross) = vertex_cross_checks(sys, limits)?;
        checks.extend(cross);
    }

    let mut text = String::new();
    let _ = writeln!(text, "vertices of P({mu}) in {}:", sys.lie_type());
    for (j, v) in vs.report_order() {
        let _ = writeln!(text, "  J = {:<10} v_J = {v}", subset_text(j));
    }
    let results = json!({
        "mu": weight_json(&mu),
        "vertices": vertex_rows(&vs),
    });
    Ok((results, checks, text))
}

fn tensor(sys: &RootSystem, weights: &[String], limits: &Limits) -> Result<Output, Error> {
    let coords = parse_integers(weights)?;
    let r = sys.rank();
    if coords.len() != 2 * r {
        return Err(usage(format!(
            "expected {} integers (λ then μ), got {}",
            2 * r,
            coords.len()
        )));
    }
    let lambda = Weight::new(coords[..r].to_vec());
    let mu = Weight::new(coords[r..].to_vec());
    let d = reps::tensor_decompose(sys, &lambda, &mu, limits)?;

    let mut components: Vec<(&Weight, &u64)> = d.iter().collect();
    components.sort_by(|a, b| {
        let ha = sys.weight_to_root_coords(a.0).height();
        let hb = sys.weight_to_root_coords(b.0).height();
        hb.cmp(&ha).then_with(|| b.0.cmp(a.0))
    });
    let total = d.total_dimension(sys);
    let expected = reps::dim(sys, &lambda) * reps::dim(sys, &mu);

    let mut text = String::new();
    let _ = writeln!(text, "V{lambda} ⊗ V{mu} in {}:", sys.lie_type());
    for (nu, c) in &components {
        let _ = writeln!(text, "  {nu}: {c}   (dim {})", reps::dim(sys, nu));
    }
    let results = json!({
        "lambda": weight_json(&lambda),
        "mu": weight_json(&mu),
        "components": components.iter().map(|(nu, c)| json!({
            "weight": weight_json(nu),
            "multiplicity": c,
            "dim": reps::dim(sys, nu).to_string(),
        })).collect::<Vec<_>>(),
    });
    let checks = vec![Check::new(
        "dimension_count",
        total == expected,
        format!("Σ c·dim = {total}, dim λ · dim μ = {expected}"),
    )];
    Ok((results, checks, text))
}

fn conjecture_json(r: &ConjectureReport) -> Value {
    json!({
        "points": r.points.iter().map(|p| json!({
            "weight": weight_json(&p.weight),
            "root_gap": p.root_gap,
            "multiplicity": p.multiplicity,
            "is_vertex": p.is_vertex,
        })).collect::<Vec<_>>(),
        "all_positive": r.all_positive,
        "vertex_mults_all_one": r.vertex_mults_all_one,
        "dim_identity_holds": r.dim_identity_holds,
        "necessity_holds": r.necessity_holds,
        "stray_components": r.stray_components.iter().map(|(w, c)| json!({
            "weight": weight_json(w),
            "multiplicity": c,
        })).collect::<Vec<_>>(),
    })
}

fn conjecture_checks(
    sys: &RootSystem,
    r: &ConjectureReport,
    limits: &Limits,
) -> Result<Vec<Check>, Error> {
    let counterexamples: Vec<String> = r.counterexamples().map(|p| p.weight.to_string()).collect();
    let mut checks = vec![Check::new(
        "conjecture_all_positive",
        r.all_positive,
        if r.all_positive {
            format!(
                "all {} lattice points of P(2ρ) occur in ρ⊗ρ",
                r.points.len()
            )
        } else {
            format!(
                "counterexamples (multiplicity 0): {}",
                counterexamples.join(" ")
            )
        },
    )];
    checks.push(Check::new(
        "necessity",
        r.necessity_holds,
        if r.necessity_holds {
            "every component of ρ⊗ρ is a lattice point of P(2ρ)".to_string()
        } else {
            format!(
                "{} components outside the lattice points",
                r.stray_components.len()
            )
        },
    ));
    let vertex_mults = kostant::verify_vertices(sys, limits)?;
    let not_one: Vec<String> = vertex_mults
        .iter()
        .filter(|(_, _, c)| *c != 1)
        .map(|(j, v, c)| format!("J={} v={v} c={c}", subset_text(*j)))
        .collect();
    let pass =
        r.vertex_mults_all_one && not_one.is_empty() && vertex_mults.len() == 1 << sys.rank();
    checks.push(Check::new(
        "vertex_mults_all_one",
        pass,
        if pass {
            format!("c_ρρ^(v_J) = 1 for all {} subsets J", vertex_mults.len())
        } else {
            not_one.join("; ")
        },
    ));
    Ok(checks)
}

fn verify_kostant(sys: &RootSystem, limits: &Limits) -> Result<Output, Error> {
    let report = kostant::verify_conjecture(sys, limits)?;
    let identity = kostant::verify_dimension_identity(sys, limits)?;
    let mut checks = conjecture_checks(sys, &report, limits)?;
    checks.push(dimension_check(&identity));

    let mut results = conjecture_json(&report);
    results["runtime_ms"] = json!(report.runtime_ms as u64);
    results["dimension_identity"] = dimension_json(&identity);
    Ok((results, checks, conjecture_text(&report)))
}

fn conjecture_text(r: &ConjectureReport) -> String {
    let mut text = String::new();
    let _ = writeln!(
        text,
        "lattice points of P(2ρ) in {} ({}):",
        r.lie_type,
        r.points.len()
    );
    let _ = writeln!(
        text,
        "  {:<20} {:<20} {:>6}  vertex",
        "λ", "2ρ-λ (root coords)", "c"
    );
    for p in &r.points {
        let _ = writeln!(
            text,
            "  {:<20} {:<20} {:>6}  {}",
            p.weight.to_string(),
            format!("{:?}", p.root_gap),
            p.multiplicity,
            if p.is_vertex { "yes" } else { "" }
        );
    }
    let _ = writeln!(text, "runtime: {} ms", r.runtime_ms);
    text
}

fn dimension_json(d: &kostant::DimensionIdentity) -> Value {
    json!({
        "sum": d.sum.to_string(),
        "expected": d.expected.to_string(),
        "dim_rho": d.dim_rho.to_string(),
        "exterior_algebra_holds": d.exterior_algebra_holds,
    })
}

fn dimension_check(d: &kostant::DimensionIdentity) -> Check {
    Check::new(
        "dim_identity",
        d.holds && d.exterior_algebra_holds,
        format!(
            "Σ c·dim V(λ) = {}, (dim V(ρ))² = {}; 2^dim 𝔤 = 2^r·(dim V(ρ))²: {}",
            d.sum, d.expected, d.exterior_algebra_holds
        ),
    )
}

fn verify_saturation(sys: &RootSystem, d: Option<u64>, limits: &Limits) -> Result<Output, Error> {
    let r = kostant::verify_saturation(sys, d, limits)?;
    let zero: Vec<String> = r
        .points
        .iter()
        .filter(|p| p.multiplicity == 0)
        .map(|p| p.weight.to_string())
        .collect();
    let checks = vec![Check::new(
        "saturation_all_positive",
        r.all_positive,
        if r.all_positive {
            format!(
                "c_(dρ,dρ)^(dλ) ≥ 1 for all {} lattice points, d = {}",
                r.points.len(),
                r.d
            )
        } else {
            format!("d = {}: multiplicity 0 at {}", r.d, zero.join(" "))
        },
    )];
    let mut text = String::new();
    let _ = writeln!(text, "saturation in {} with d = {}:", r.lie_type, r.d);
    for p in &r.points {
        let _ = writeln!(
            text,
            "  λ = {:<20} c = {}",
            p.weight.to_string(),
            p.multiplicity
        );
    }
    let _ = writeln!(text, "runtime: {} ms", r.runtime_ms);
    let results = json!({
        "d": r.d,
        "points": r.points.iter().map(|p| json!({
            "weight": weight_json(&p.weight),
            "multiplicity": p.multiplicity,
        })).collect::<Vec<_>>(),
        "all_positive": r.all_positive,
        "runtime_ms": r.runtime_ms as u64,
    });
    Ok((results, checks, text))
}

fn verify_all(sys: &RootSystem, limits: &Limits) -> Result<Output, Error> {
    let mut checks = vec![roots_check(sys)];
    let mut text = String::new();
    let _ = writeln!(text, "verify-all {}", sys.lie_type());

    let (closed, cross) = vertex_cross_checks(sys, limits)?;
    checks.extend(cross);

    let norm = kostant::verify_norm_inequality(sys, limits)?;
    checks.push(Check::new(
        "norm_inequality",
        norm.holds,
        format!(
            "{} weights of V(ρ), {} on the orbit of ρ, {} violations",
            norm.weights_checked,
            norm.equality_cases,
            norm.violations.len()
        ),
    ));

    let mut emptiness = Vec::new();
    for j in Subset::all(sys.rank()) {
        emptiness.push(kostant::verify_emptiness(sys, j, limits)?);
    }
    let bad: Vec<String> = emptiness
        .iter()
        .filter(|e| !e.holds || !e.norm_exceeds_rho)
        .map(|e| subset_text(e.subset))
        .collect();
    checks.push(Check::new(
        "emptiness",
        bad.is_empty(),
        if bad.is_empty() {
            format!(
                "w_Jρ + 2ρ - w(2ρ) ∉ Π(ρ) for all {} subsets J and all {} elements w ≠ 1",
                emptiness.len(),
                emptiness.first().map_or(0, |e| e.checked)
            )
        } else {
            format!("fails for J = {}", bad.join(" "))
        },
    ));

    let report = kostant::verify_conjecture(sys, limits)?;
    checks.extend(conjecture_checks(sys, &report, limits)?);
    let identity = kostant::verify_dimension_identity(sys, limits)?;
    checks.push(dimension_check(&identity));

    text.push_str(&conjecture_text(&report));
    let mut conjecture = conjecture_json(&report);
    conjecture["runtime_ms"] = json!(report.runtime_ms as u64);
    let results = json!({
        "vertices": vertex_rows(&closed),
        "norm_inequality": {
            "weights_checked": norm.weights_checked,
            "equality_cases": norm.equality_cases,
        },
        "emptiness": emptiness.iter().map(|e| json!({
            "J": subset_json(e.subset),
            "checked": e.checked,
            "holds": e.holds,
        })).collect::<Vec<_>>(),
        "conjecture": conjecture,
        "dimension_identity": dimension_json(&identity),
    });
    Ok((results, checks, text))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn integer_tokens() {
        let toks = |v: &[&str]| v.iter().map(|s| s.to_string()).collect::<Vec<_>>();
        assert_eq!(parse_integers(&toks(&["1", "2"])).unwrap(), vec![1, 2]);
        assert_eq!(
            parse_integers(&toks(&["(1,-2)", "3"])).unwrap(),
            vec![1, -2, 3]
        );
        assert!(parse_integers(&toks(&["x"])).is_err());
    }

    #[test]
    fn clap_definition_is_consistent() {
        use clap::CommandFactory;
        Cli::command().debug_assert();
    }
}
