//! Command-line front end for the `casimir-sc` binary.

use std::f64::consts::PI;
use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::cylinder::{self, AlphaIntegralVariant};
use crate::orbits::{orbit_table, BoundaryCondition};
use crate::series::{partial_sums, richardson_limit, SeriesTailPlan};
use crate::sphere;
use crate::specfun::zeta;
use crate::verify;
use crate::wkb::spectrum_report;
use crate::{Error, Result, CYLINDER_FIELD_THEORY_REFERENCE, SPHERE_FIELD_THEORY_REFERENCE};

pub const EXIT_OK: i32 = 0;
pub const EXIT_COMPUTATION: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

const UNITS: &str = "hbar*c/R";
const CYLINDER_UNITS: &str = "hbar*c*L/R^2";

#[derive(Debug, Parser)]
#[command(name = "casimir-sc", version, about = "Semiclassical Casimir self-energies of perfectly conducting spheres and cylinders")]
pub struct Cli {
    /// Write the output to this file instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,

    /// Output format. Energies default to json, tables to csv.
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Debug, Args, Clone)]
pub struct PlanArgs {
    /// Number of explicit terms before the tail is extrapolated.
    #[arg(long, default_value_t = 50)]
    pub terms: usize,
    /// Order of the Richardson extrapolation in 1/N.
    #[arg(long = "richardson-order", default_value_t = 4)]
    pub richardson_order: usize,
    /// Target accuracy of the tail estimate.
    #[arg(long, default_value_t = 1e-5)]
    pub tolerance: f64,
}

impl PlanArgs {
    fn plan(&self) -> Result<SeriesTailPlan> {
        SeriesTailPlan::new(self.terms, self.richardson_order, self.tolerance)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum VariantArg {
    Quadratic,
    Expfit,
    Unbounded,
}

impl From<VariantArg> for AlphaIntegralVariant {
    fn from(v: VariantArg) -> Self {
        match v {
            VariantArg::Quadratic => AlphaIntegralVariant::SemiclassicalQuadratic,
            VariantArg::Expfit => AlphaIntegralVariant::ExponentialFit,
            VariantArg::Unbounded => AlphaIntegralVariant::Unbounded,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum BcArg {
    Dirichlet,
    Neumann,
    Both,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SeriesArg {
    Sphere,
    Cylinder,
    Zeta2,
    Zeta4,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Sphere coefficient: sum over n of 1/(16 pi n^4) (diameters) plus
    /// 15 sqrt(2)/(256 n^4) sum_w cos(w pi/2n)/sin^2(w pi/2n), tail by Richardson.
    SphereEnergy {
        #[command(flatten)]
        plan: PlanArgs,
        /// Emit the per-sector contributions as CSV instead of the totals.
        #[arg(long)]
        breakdown: bool,
    },
    /// Cylinder coefficient per unit length: 15 sqrt(2)/(512 pi) times
    /// sum_n (-1)^n csc^2 sums / n^4 times the longitudinal alpha factor.
    CylinderEnergy {
        #[command(flatten)]
        plan: PlanArgs,
        /// Treatment of the longitudinal-momentum integral.
        #[arg(long, value_enum, default_value_t = VariantArg::Quadratic)]
        variant: VariantArg,
        /// Emit the per-n contributions as CSV instead of the totals.
        #[arg(long)]
        breakdown: bool,
    },
    /// WKB zeros from x f_l(x) - (l + 1/2) arccos((l + 1/2)/x) = pi(n + 3/4)
    /// (Dirichlet) or pi(n + 1/4) (Neumann), against exact Bessel zeros.
    WkbZeros {
        #[arg(long = "ell-max", default_value_t = 10)]
        ell_max: u32,
        #[arg(long = "n-max", default_value_t = 10)]
        n_max: u32,
        #[arg(long, value_enum, default_value_t = BcArg::Both)]
        bc: BcArg,
    },
    /// Periodic-orbit geometry of sector (n, w): stationary angle w pi/n,
    /// length 2n sin(w pi/n), Maslov indices and the EM parity filter.
    OrbitTable {
        #[arg(long = "n-max", default_value_t = 12)]
        n_max: u32,
    },
    /// The integral int_0^1 exp(-x sqrt(1 - a^2)) da exactly, in the
    /// quadratic semiclassical form and with the exponential fit.
    AlphaIntegral {
        /// Evaluate at these points instead of the default 0..30 grid.
        #[arg(long, value_delimiter = ',')]
        x: Vec<f64>,
    },
    /// Partial sums of a series with the Richardson extrapolation table.
    Convergence {
        #[arg(long, value_enum, default_value_t = SeriesArg::Sphere)]
        series: SeriesArg,
        #[command(flatten)]
        plan: PlanArgs,
    },
    /// Run every reproduction check and report pass/fail per criterion.
    Verify,
}

/// Parse `args` (including the program name) and run. Returns the exit code
/// and the text destined for stdout or `--out`; usage errors come back with
/// code 2 and clap's message.
pub fn run_args<I, T>(args: I) -> (i32, String)
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(&cli),
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            (code, e.render().to_string())
        }
    }
}

/// Execute a parsed command line.
pub fn run(cli: &Cli) -> (i32, String) {
    match execute(cli) {
        Ok((ok, text)) => (if ok { EXIT_OK } else { EXIT_COMPUTATION }, text),
        Err(e) => (EXIT_COMPUTATION, format!("error: {e}\n")),
    }
}

fn execute(cli: &Cli) -> Result<(bool, String)> {
    let fmt = cli.format;
    match &cli.command {
        Command::SphereEnergy { plan, breakdown } => {
            let plan = plan.plan()?;
            if *breakdown {
                Ok((true, sphere_sectors_csv(plan.explicit_terms as u32)))
            } else {
                sphere_energy(&plan, fmt.unwrap_or(Format::Json)).map(|s| (true, s))
            }
        }
        Command::CylinderEnergy { plan, variant, breakdown } => {
            let plan = plan.plan()?;
            let r = cylinder::cylinder_sce((*variant).into(), &plan)?;
            if *breakdown {
                Ok((true, cylinder_breakdown_csv(&r)))
            } else {
                Ok((true, cylinder_energy(&r, fmt.unwrap_or(Format::Json))))
            }
        }
        Command::WkbZeros { ell_max, n_max, bc } => {
            let bcs: &[BoundaryCondition] = match bc {
                BcArg::Dirichlet => &[BoundaryCondition::Dirichlet],
                BcArg::Neumann => &[BoundaryCondition::Neumann],
                BcArg::Both => &BoundaryCondition::ALL,
            };
            let mut rows = Vec::new();
            for &b in bcs {
                rows.extend(spectrum_report(*ell_max, *n_max, b)?);
            }
            let header = ["ell", "n", "bc", "x_wkb", "x_exact", "rel_error", "flag"];
            let body = rows.iter().map(|r| {
                vec![
                    r.ell.to_string(),
                    r.n.to_string(),
                    r.bc.label().to_string(),
                    num(r.x_wkb),
                    num(r.x_exact),
                    r.rel_error.map_or(String::new(), num),
                    if r.anomaly { "exact_zero_at_origin".into() } else { String::new() },
                ]
            });
            Ok((true, table(&header, body.collect(), fmt.unwrap_or(Format::Csv))))
        }
        Command::OrbitTable { n_max } => {
            let rows = orbit_table(*n_max)?;
            let header = ["n", "w", "z_bar", "length_over_R", "maslov_D", "maslov_N", "em_contributes"];
            let body = rows.iter().map(|g| {
                vec![
                    g.sector.n.to_string(),
                    g.sector.w.to_string(),
                    num(g.stationary_z),
                    num(g.length_over_r),
                    g.maslov_dirichlet.to_string(),
                    g.maslov_neumann.to_string(),
                    g.em_contributes.to_string(),
                ]
            });
            Ok((true, table(&header, body.collect(), fmt.unwrap_or(Format::Csv))))
        }
        Command::AlphaIntegral { x } => {
            let grid = if x.is_empty() { cylinder::default_alpha_grid() } else { x.clone() };
            let rows = cylinder::alpha_table(&grid)?;
            let header = ["x", "exact", "semiclassical", "exp_fit"];
            let body = rows.iter().map(|r| vec![num(r.x), num(r.exact), num(r.semiclassical), num(r.exp_fit)]);
            Ok((true, table(&header, body.collect(), fmt.unwrap_or(Format::Csv))))
        }
        Command::Convergence { series, plan } => {
            let plan = plan.plan()?;
            convergence(*series, &plan, fmt.unwrap_or(Format::Csv)).map(|s| (true, s))
        }
        Command::Verify => {
            let results = verify::run_all();
            let ok = results.iter().all(|r| r.passed);
            let text = match fmt.unwrap_or(Format::Text) {
                Format::Json => pretty(&serde_json::to_value(&results).map_err(|e| Error::Domain(e.to_string()))?),
                _ => {
                    let mut s = String::new();
                    for r in &results {
                        let _ = writeln!(s, "{r}");
                    }
                    let passed = results.iter().filter(|r| r.passed).count();
                    let _ = writeln!(s, "{passed}/{} criteria passed", results.len());
                    s
                }
            };
            Ok((ok, text))
        }
    }
}

/// Round to nine significant digits.
pub fn sig9(x: f64) -> f64 {
    if !x.is_finite() || x == 0.0 {
        return x;
    }
    format!("{x:.8e}").parse().unwrap_or(x)
}

/// Nine significant digits, plain notation where it stays short.
pub fn num(x: f64) -> String {
    let r = sig9(x);
    if r == 0.0 {
        "0".into()
    } else if (1e-4..1e9).contains(&r.abs()) {
        format!("{r}")
    } else {
        format!("{r:e}")
    }
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).unwrap_or_default();
    s.push('\n');
    s
}

fn table(header: &[&str], rows: Vec<Vec<String>>, fmt: Format) -> String {
    match fmt {
        Format::Json => {
            let arr: Vec<Value> = rows
                .iter()
                .map(|r| {
                    let obj = header
                        .iter()
                        .zip(r)
                        .map(|(h, c)| {
                            let v = match c.parse::<f64>() {
                                Ok(x) => json!(x),
                                Err(_) if c == "true" || c == "false" => json!(c == "true"),
                                Err(_) if c.is_empty() => Value::Null,
                                Err(_) => json!(c),
                            };
                            (h.to_string(), v)
                        })
                        .collect::<serde_json::Map<_, _>>();
                    Value::Object(obj)
                })
                .collect();
            pretty(&Value::Array(arr))
        }
        Format::Csv => {
            let mut s = header.join(",");
            s.push('\n');
            for r in rows {
                s.push_str(&r.join(","));
                s.push('\n');
            }
            s
        }
        Format::Text => {
            let widths: Vec<usize> = (0..header.len())
                .map(|i| rows.iter().map(|r| r[i].len()).chain([header[i].len()]).max().unwrap_or(0))
                .collect();
            let line = |cells: Vec<&str>| {
                let mut l = cells.iter().zip(&widths).map(|(c, w)| format!("{c:>w$}")).collect::<Vec<_>>().join("  ");
                l.push('\n');
                l
            };
            let mut s = line(header.to_vec());
            for r in &rows {
                s.push_str(&line(r.iter().map(String::as_str).collect()));
            }
            s
        }
    }
}

fn sphere_energy(plan: &SeriesTailPlan, fmt: Format) -> Result<String> {
    let r = sphere::sphere_sce(plan)?;
    let ratio = r.total / SPHERE_FIELD_THEORY_REFERENCE;
    Ok(match fmt {
        Format::Json => pretty(&json!({
            "diameter_sum": sig9(r.diameter_sum),
            "generic_sum": sig9(r.generic_sum),
            "total": sig9(r.total),
            "tail_error": sig9(r.tail_error),
            "explicit_terms": r.explicit_terms_used,
            "richardson_order": plan.richardson_order,
            "field_theory_reference": SPHERE_FIELD_THEORY_REFERENCE,
            "ratio_to_reference": sig9(ratio),
            "units": UNITS,
        })),
        Format::Csv => format!(
            "diameter_sum,generic_sum,total,tail_error,ratio_to_reference\n{},{},{},{},{}\n",
            num(r.diameter_sum),
            num(r.generic_sum),
            num(r.total),
            num(r.tail_error),
            num(ratio)
        ),
        Format::Text => format!(
            "diameter sum   {}\ngeneric sum    {}\ntotal          {} {UNITS}\ntail error     {}\nratio to {SPHERE_FIELD_THEORY_REFERENCE}  {}\n",
            num(r.diameter_sum),
            num(r.generic_sum),
            num(r.total),
            num(r.tail_error),
            num(ratio)
        ),
    })
}

fn sphere_sectors_csv(n_max: u32) -> String {
    let mut s = String::from("n,w,kind,contribution\n");
    for n in 1..=n_max {
        let _ = writeln!(s, "{n},,diameter,{}", num(sphere::sphere_diameter_term(n)));
        let pre = 15.0 * std::f64::consts::SQRT_2 / (256.0 * (n as f64).powi(4));
        for w in 1..n {
            let (sn, cs) = (w as f64 * PI / (2.0 * n as f64)).sin_cos();
            let _ = writeln!(s, "{n},{w},generic,{}", num(pre * cs / (sn * sn)));
        }
    }
    s
}

fn cylinder_energy(r: &cylinder::CylinderEnergyBreakdown, fmt: Format) -> String {
    let ratio = r.total / CYLINDER_FIELD_THEORY_REFERENCE;
    match fmt {
        Format::Json => pretty(&json!({
            "variant": r.variant.name(),
            "prefactor": sig9(r.prefactor),
            "series_value": sig9(r.series_value),
            "series_error": sig9(r.series_error),
            "alpha_factor": sig9(r.alpha_factor),
            "total": sig9(r.total),
            "per_n_terms": r.per_n_terms.iter().map(|&t| sig9(t)).collect::<Vec<_>>(),
            "field_theory_reference": CYLINDER_FIELD_THEORY_REFERENCE,
            "ratio_to_reference": sig9(ratio),
            "units": CYLINDER_UNITS,
        })),
        Format::Csv => format!(
            "variant,prefactor,series_value,alpha_factor,total\n{},{},{},{},{}\n",
            r.variant.name(),
            num(r.prefactor),
            num(r.series_value),
            num(r.alpha_factor),
            num(r.total)
        ),
        Format::Text => format!(
            "variant        {}\nseries         {}\nalpha factor   {}\ntotal          {} {CYLINDER_UNITS}\n",
            r.variant.name(),
            num(r.series_value),
            num(r.alpha_factor),
            num(r.total)
        ),
    }
}

fn cylinder_breakdown_csv(r: &cylinder::CylinderEnergyBreakdown) -> String {
    let mut s = String::from("n,csc2_sum,series_term,energy_contribution\n");
    let factor = if r.variant == AlphaIntegralVariant::Unbounded { 0.0 } else { r.prefactor * r.alpha_factor };
    for (i, t) in r.per_n_terms.iter().enumerate() {
        let n = i as u32 + 1;
        let _ = writeln!(s, "{n},{},{},{}", num(cylinder::csc2_sum(n)), num(*t), num(factor * t + 0.0));
    }
    s
}

fn convergence(series: SeriesArg, plan: &SeriesTailPlan, fmt: Format) -> Result<String> {
    let last = plan.explicit_terms;
    let (sums, exact) = match series {
        SeriesArg::Sphere => (partial_sums(2, last, |n| sphere::sphere_generic_term(n as u32))?, None),
        SeriesArg::Cylinder => {
            let all = partial_sums(1, last, |n| cylinder::cylinder_n_term(n as u32))?;
            (all.into_iter().filter(|(n, _)| n % 2 == 0).collect(), Some(cylinder::series_closed_form()))
        }
        SeriesArg::Zeta2 => (partial_sums(1, last, |n| 1.0 / (n as f64).powi(2))?, Some(zeta(2)?)),
        SeriesArg::Zeta4 => (partial_sums(1, last, |n| 1.0 / (n as f64).powi(4))?, Some(zeta(4)?)),
    };
    let ex = richardson_limit(&sums, plan)?;
    if fmt == Format::Json {
        return Ok(pretty(&json!({
            "partial_sums": sums.iter().map(|&(n, s)| json!({"n": n, "sum": sig9(s)})).collect::<Vec<_>>(),
            "stages": ex.stages.iter().map(|&v| sig9(v)).collect::<Vec<_>>(),
            "limit": sig9(ex.limit),
            "error_estimate": sig9(ex.error_estimate),
            "exact": exact.map(sig9),
        })));
    }
    let mut s = String::from("kind,index,value\n");
    for (n, v) in &sums {
        let _ = writeln!(s, "partial_sum,{n},{}", num(*v));
    }
    for (k, v) in ex.stages.iter().enumerate() {
        let _ = writeln!(s, "richardson_stage,{k},{}", num(*v));
    }
    let _ = writeln!(s, "limit,,{}", num(ex.limit));
    let _ = writeln!(s, "error_estimate,,{}", num(ex.error_estimate));
    if let Some(e) = exact {
        let _ = writeln!(s, "exact,,{}", num(e));
    }
    Ok(s)
}
