//! The `bc` command line: argument parsing, run configuration and report
//! emission. Exit status is 0 iff every check in the invocation passes.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::br1::{
    br1_dimension, cfw_relation_check, verify_associativity_with, vogel_identity_check, Br1Algebra, Br1Params,
    CfwMap, EXHAUSTIVE_TRIPLE_LIMIT, SAMPLED_TRIPLES,
};
use crate::flatness::{kohno_check_br1, kohno_check_lattice_brauer, kohno_check_lattice_group, FlatnessReport, LambdaReading};
use crate::gb::{
    build_presentation, dimension_from_gb, parse_presentation, Dimension, GbOptions, GroebnerBasis, Presentation, Specialization,
    Variant, DEFAULT_DEGREE_CAP,
};
use crate::group::{parse_group_file, Elem, GroupSpec, ReflectionGroup, DEFAULT_GROUP_CAP};
use crate::lattice::{Lattice, LatticeDump, DEFAULT_LATTICE_CAP};
use crate::linalg::Matrix;
use crate::reproduce::{reproduce, ReproduceOptions};
use crate::reps::{classify_level1, induce, quotient_characters, InducedModule, Theta};
use crate::scalars::{parse_scalar, CycNumber, ParamScalar, Rational};

pub const SCHEMA: u32 = 1;

#[derive(Parser, Debug)]
#[command(name = "bc", version, about = "Brauer-Chen algebras of complex reflection groups")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Args, Debug, Clone)]
pub struct Common {
    /// Group as G:m,p,n (the monomial group G(m,p,n)).
    #[arg(long, global = true)]
    pub group: Option<String>,
    /// Group description file with explicit generator matrices.
    #[arg(long, global = true, conflicts_with = "group")]
    pub group_file: Option<PathBuf>,
    #[arg(long, global = true)]
    pub variant: Option<String>,
    #[arg(long, global = true)]
    pub delta: Option<Rational>,
    /// One value, or one per reflection class separated by commas.
    #[arg(long, global = true)]
    pub mu: Option<String>,
    /// One value, or one per hyperplane orbit separated by commas.
    #[arg(long, global = true)]
    pub lambda: Option<String>,
    #[arg(long, global = true, default_value_t = 1)]
    pub seed: u64,
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Maximal group order.
    #[arg(long, global = true, default_value_t = DEFAULT_GROUP_CAP)]
    pub group_cap: usize,
    /// Gröbner degree cap.
    #[arg(long, global = true, default_value_t = DEFAULT_DEGREE_CAP)]
    pub cap: usize,
    #[arg(long, global = true, default_value_t = DEFAULT_LATTICE_CAP)]
    pub lattice_cap: usize,
    /// Associativity checks are exhaustive up to this many triples.
    #[arg(long, global = true, default_value_t = EXHAUSTIVE_TRIPLE_LIMIT)]
    pub triple_budget: usize,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum FlavorArg {
    Chen,
    LatticeGroup,
    LatticeBrauer,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum ReadingArg {
    Power,
    PerReflection,
    Both,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Artifact {
    Presentation,
    Matrices,
    Lattice,
    Gb,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Order, reflections, hyperplane orbits, transversality, N0/W0.
    GroupInfo,
    /// The Br_1 dimension formula, term by term.
    Dim,
    /// Associativity of the Br_1 structure constants.
    AssocCheck,
    /// The quadratic relation for 2-reflection groups.
    VogelCheck,
    /// The simply-laced Brauer relations inside Br_1.
    CfwCheck {
        #[arg(long, value_enum, default_value_t = CfwMapArg::Scaled)]
        map: CfwMapArg,
    },
    /// Gröbner basis and dimension of a presentation.
    Gb {
        /// Read the presentation from a file instead of building it.
        #[arg(long)]
        presentation: Option<PathBuf>,
    },
    /// Level-one representations.
    Reps {
        /// Restrict to the character with this label.
        #[arg(long)]
        theta: Option<usize>,
        /// Restrict to one hyperplane orbit.
        #[arg(long)]
        orbit: Option<usize>,
        /// JSON file with a representation of N0 trivial on W0.
        #[arg(long)]
        theta_file: Option<PathBuf>,
    },
    /// The lattice of full reflection subgroups.
    Lattice,
    /// Kohno relations of one connection.
    Flat {
        #[arg(long, value_enum, default_value_t = FlavorArg::Chen)]
        flavor: FlavorArg,
        #[arg(long, value_enum, default_value_t = ReadingArg::Both)]
        reading: ReadingArg,
    },
    /// Writes an artifact in its textual format and checks it re-imports.
    Export {
        #[arg(value_enum)]
        artifact: Artifact,
        #[arg(long, default_value_t = 0)]
        orbit: usize,
        #[arg(long, default_value_t = 0)]
        theta: usize,
    },
    /// Runs every reproducible claim and prints a pass/fail matrix.
    ReproducePaper,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum CfwMapArg {
    Scaled,
    Literal,
}

/// One subcommand's outcome.
pub struct Report {
    pub passed: bool,
    pub json: Value,
    pub text: String,
    pub csv: Option<String>,
}

impl Report {
    fn new(passed: bool, mut json: Value, text: String) -> Self {
        if let Value::Object(m) = &mut json {
            m.insert("schema".into(), json!(SCHEMA));
            m.insert("status".into(), json!(if passed { "pass" } else { "fail" }));
        }
        Report { passed, json, text, csv: None }
    }

    pub fn render(&self, format: Format) -> Result<String, String> {
        match format {
            Format::Json => Ok(serde_json::to_string_pretty(&self.json).expect("serializable") + "\n"),
            Format::Text => Ok(self.text.clone()),
            Format::Csv => self.csv.clone().ok_or_else(|| "csv output is only available for `reps`".into()),
        }
    }
}

/// Resolved configuration shared by all subcommands.
#[derive(Clone, Debug)]
pub struct RunConfig {
    pub group: GroupSpec,
    pub variant: Variant,
    pub delta: Option<Rational>,
    pub mu: Option<Vec<Rational>>,
    pub lambda: Option<Vec<Rational>>,
    pub group_cap: usize,
    pub gb: GbOptions,
    pub lattice_cap: usize,
    pub triple_budget: usize,
    pub seed: u64,
    pub out: Option<PathBuf>,
    pub format: Format,
    group_given: bool,
    variant_given: bool,
}

fn parse_list(s: &str) -> Result<Vec<Rational>, String> {
    s.split(',').map(|x| x.trim().parse::<Rational>()).collect()
}

impl RunConfig {
    pub fn from_common(c: &Common) -> Result<Self, String> {
        let (group, group_given) = match (&c.group, &c.group_file) {
            (_, Some(p)) => {
                let text = fs::read_to_string(p).map_err(|e| format!("{}: {e}", p.display()))?;
                (parse_group_file(&text).map_err(|e| e.to_string())?, true)
            }
            (Some(g), None) => (GroupSpec::parse(g).map_err(|e| e.to_string())?, true),
            (None, None) => (GroupSpec::g(4, 2, 2), false),
        };
        let variant = match &c.variant {
            Some(v) => v.parse::<Variant>().map_err(|e| e.to_string())?,
            None => Variant::Chen,
        };
        if c.group_cap == 0 || c.cap == 0 || c.lattice_cap == 0 || c.triple_budget == 0 {
            return Err("caps must be positive".into());
        }
        Ok(RunConfig {
            group,
            variant,
            delta: c.delta.clone(),
            mu: c.mu.as_deref().map(parse_list).transpose()?,
            lambda: c.lambda.as_deref().map(parse_list).transpose()?,
            group_cap: c.group_cap,
            gb: GbOptions { degree_cap: c.cap, ..GbOptions::default() },
            lattice_cap: c.lattice_cap,
            triple_budget: c.triple_budget,
            seed: c.seed,
            out: c.out.clone(),
            format: c.format,
            group_given,
            variant_given: c.variant.is_some(),
        })
    }

    pub fn build_group(&self) -> Result<ReflectionGroup, String> {
        ReflectionGroup::build_with_cap(&self.group, self.group_cap).map_err(|e| e.to_string())
    }

    /// Rational specialization, defaulting to `δ = 2`, `μ = λ = 1`.
    pub fn specialization(&self) -> Specialization {
        let mu = self.mu.clone().unwrap_or_else(|| vec![Rational::one()]);
        Specialization {
            delta: self.delta.clone().unwrap_or_else(|| Rational::from_integer(2)),
            lambda: self.lambda.clone().unwrap_or_else(|| mu.clone()),
            mu,
        }
    }

    /// Formal parameters, with `δ` and `μ` replaced by given values.
    pub fn br1_params(&self, w: &ReflectionGroup) -> Br1Params {
        let mut p = Br1Params::formal(w);
        if let Some(d) = &self.delta {
            p.delta = ParamScalar::from_cyc(CycNumber::from_rational(d.clone()));
        }
        if let Some(mu) = &self.mu {
            for (c, m) in p.mu.iter_mut().enumerate() {
                let v = if mu.len() == 1 { &mu[0] } else { &mu[c.min(mu.len() - 1)] };
                *m = ParamScalar::from_cyc(CycNumber::from_rational(v.clone()));
            }
        }
        p
    }
}

fn pass(b: bool) -> &'static str {
    if b {
        "PASS"
    } else {
        "FAIL"
    }
}

/// N0/W0 for the orbit representative: order, and whether it is abelian
/// and cyclic.
fn quotient_structure(w: &ReflectionGroup, h0: usize) -> (usize, bool, bool) {
    let (w0, n0) = w.stabilizer_and_normalizer(h0).expect("valid hyperplane");
    let order = n0.len() / w0.len();
    let abelian = quotient_characters(w, h0).is_ok();
    let cyclic = n0.iter().any(|&x| {
        let (mut y, mut k) = (x, 1);
        while !w0.contains(&y) {
            y = w.mul(y, x);
            k += 1;
        }
        k == order
    });
    (order, abelian, cyclic)
}

pub fn cmd_group_info(cfg: &RunConfig) -> Result<Report, String> {
    let w = cfg.build_group()?;
    let mut text = format!("group {}\norder {}\nconductor {}\nrank {}\n", w.label(), w.order(), w.conductor(), w.rank());
    let classes = w.class_count();
    writeln!(text, "reflections {} in {} classes", w.reflections().len(), classes).unwrap();
    let transverse = w.transverse_pairs();
    let mut orbits = Vec::new();
    for o in 0..w.orbit_count() {
        let h0 = w.orbit_representative(o);
        let (q, abelian, cyclic) = quotient_structure(&w, h0);
        let m = w.pointwise_stabilizer(h0).len();
        writeln!(
            text,
            "orbit {o}: {} hyperplanes, |W_H| = {m}, N0/W0 of order {q}{}",
            w.orbit(o).len(),
            if cyclic { ", cyclic" } else if abelian { ", abelian" } else { ", nonabelian" }
        )
        .unwrap();
        orbits.push(json!({
            "orbit": o, "hyperplanes": w.orbit(o), "pointwise_stabilizer_order": m,
            "quotient_order": q, "quotient_abelian": abelian, "quotient_cyclic": cyclic,
        }));
    }
    if transverse.is_empty() {
        text.push_str("no transverse pairs\n");
    } else {
        writeln!(text, "{} transverse pairs", transverse.len()).unwrap();
    }
    let json = json!({
        "group": w.label(), "order": w.order(), "conductor": w.conductor(), "rank": w.rank(),
        "reflections": w.reflections().len(), "classes": classes, "hyperplanes": w.hyperplane_count(),
        "orbits": orbits, "transverse_pairs": transverse, "flats": w.flats().len(),
    });
    Ok(Report::new(true, json, text))
}

pub fn cmd_dim(cfg: &RunConfig) -> Result<Report, String> {
    let w = cfg.build_group()?;
    let mut text = format!("{}: |W| = {}\n", w.label(), w.order());
    let mut orbits = Vec::new();
    for o in 0..w.orbit_count() {
        let h0 = w.orbit_representative(o);
        let (a, m) = (w.orbit(o).len(), w.pointwise_stabilizer(h0).len());
        let term = a * w.order() / m;
        writeln!(text, "orbit {o}: |A0| = {a}, |W|/|W_H0| = {} -> {term}", w.order() / m).unwrap();
        orbits.push(json!({"orbit": o, "size": a, "pointwise_stabilizer_order": m, "term": term}));
    }
    let dim = br1_dimension(&w);
    writeln!(text, "dim Br_1 = {dim}").unwrap();
    Ok(Report::new(true, json!({"group": w.label(), "order": w.order(), "orbits": orbits, "dim": dim}), text))
}

pub fn cmd_assoc(cfg: &RunConfig) -> Result<Report, String> {
    let w = cfg.build_group()?;
    let alg = Br1Algebra::with_params(&w, cfg.br1_params(&w));
    let r = verify_associativity_with(&alg, cfg.seed, cfg.triple_budget, SAMPLED_TRIPLES);
    let text = format!(
        "{}: dim {}, {} triples ({}), {}\n",
        w.label(),
        r.dim,
        r.triples_checked,
        if r.exhaustive { "exhaustive" } else { "sampled" },
        pass(r.passed())
    );
    let mut json = serde_json::to_value(&r).expect("serializable");
    json["group"] = json!(w.label());
    Ok(Report::new(r.passed(), json, text))
}

pub fn cmd_vogel(cfg: &RunConfig) -> Result<Report, String> {
    let w = cfg.build_group()?;
    let r = vogel_identity_check(&w, None).map_err(|e| e.to_string())?;
    let mut text = format!("{}: {} hyperplanes, {}\n", w.label(), r.hyperplanes_checked, pass(r.passed()));
    for f in &r.failures {
        writeln!(text, "  {f}").unwrap();
    }
    let mut json = serde_json::to_value(&r).expect("serializable");
    json["group"] = json!(w.label());
    if let Some(f) = r.failures.first() {
        json["counterexample"] = json!(f);
    }
    Ok(Report::new(r.passed(), json, text))
}

pub fn cmd_cfw(cfg: &RunConfig, map: CfwMapArg) -> Result<Report, String> {
    let w = cfg.build_group()?;
    let map = match map {
        CfwMapArg::Scaled => CfwMap::Scaled,
        CfwMapArg::Literal => CfwMap::Literal,
    };
    let r = cfw_relation_check(&w, &cfg.br1_params(&w), map).map_err(|e| e.to_string())?;
    let mut text = format!("{} ({map:?} map): {}\n", w.label(), pass(r.passed()));
    for (name, ok) in &r.relations {
        writeln!(text, "  {name}: {}", pass(*ok)).unwrap();
    }
    let mut json = serde_json::to_value(&r).expect("serializable");
    json["group"] = json!(w.label());
    if let Some((name, _)) = r.relations.iter().find(|(_, ok)| !ok) {
        json["counterexample"] = json!(name);
    }
    Ok(Report::new(r.passed(), json, text))
}

fn presentation_for(cfg: &RunConfig, w: &ReflectionGroup) -> Result<Presentation<ParamScalar>, String> {
    let lat = match cfg.variant {
        Variant::Lattice => Some(Lattice::build_with_cap(w, cfg.lattice_cap).map_err(|e| e.to_string())?),
        _ => None,
    };
    build_presentation(w, &cfg.variant, lat.as_ref()).map_err(|e| e.to_string())
}

fn gb_json<F>(variant: &str, spec: &Specialization, gb: &GroebnerBasis<F>, dim: &Dimension) -> Value
where
    F: crate::scalars::Field,
{
    json!({
        "variant": variant,
        "specialization": {"delta": spec.delta.to_string(),
            "mu": spec.mu.iter().map(|x| x.to_string()).collect::<Vec<_>>(),
            "lambda": spec.lambda.iter().map(|x| x.to_string()).collect::<Vec<_>>()},
        "complete": gb.complete,
        "capped": gb.capped,
        "gb_size": gb.len(),
        "dimension": dim.value().map_or_else(|| json!(dim.to_string()), |d| json!(d)),
        "obstructions": gb.stats.obstructions,
    })
}

pub fn cmd_gb(cfg: &RunConfig, presentation: Option<&Path>) -> Result<Report, String> {
    let spec = cfg.specialization();
    let (p, name) = match presentation {
        Some(path) => {
            let text = fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
            let conductor = if cfg.group_given { cfg.build_group()?.conductor() } else { 1 };
            (parse_presentation(&text, conductor).map_err(|e| e.to_string())?, path.display().to_string())
        }
        None => {
            let w = cfg.build_group()?;
            (presentation_for(cfg, &w)?, cfg.variant.name().to_string())
        }
    };
    let p = p.specialize(&spec).map_err(|e| e.to_string())?;
    let gb = p.groebner(&cfg.gb);
    let dim = dimension_from_gb(&gb);
    let text = format!(
        "{name} at {}: {} relations, GB of size {} ({}), dimension {dim}\n",
        spec.describe(),
        p.relation_count(),
        gb.len(),
        if gb.complete { "complete" } else { "incomplete" }
    );
    let mut json = gb_json(&name, &spec, &gb, &dim);
    if presentation.is_none() {
        json["group"] = json!(cfg.build_group()?.label());
    }
    Ok(Report::new(gb.complete && dim.value().is_some(), json, text))
}

/// Representation of `N₀` read from JSON: generator matrices (as grids of
/// scalar renderings) with their images.
#[derive(Serialize, Deserialize, Debug)]
pub struct ThetaFile {
    pub hyperplane: usize,
    pub label: String,
    pub generators: Vec<ThetaGenerator>,
}

#[derive(Serialize, Deserialize, Debug)]
pub struct ThetaGenerator {
    pub element: Vec<Vec<String>>,
    pub image: Vec<Vec<String>>,
}

fn parse_cyc_grid(grid: &[Vec<String>], conductor: u32) -> Result<Matrix<CycNumber>, String> {
    let rows = grid
        .iter()
        .map(|r| {
            r.iter()
                .map(|x| {
                    parse_scalar(x, conductor)
                        .map_err(|e| e.to_string())?
                        .as_constant()
                        .ok_or_else(|| format!("`{x}` is not a constant"))
                })
                .collect::<Result<Vec<_>, _>>()
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Matrix::from_rows(rows))
}

fn parse_param_grid(grid: &[Vec<String>], conductor: u32) -> Result<Matrix<ParamScalar>, String> {
    let rows = grid
        .iter()
        .map(|r| r.iter().map(|x| parse_scalar(x, conductor).map_err(|e| e.to_string())).collect::<Result<Vec<_>, _>>())
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Matrix::from_rows(rows))
}

fn cyc_grid(m: &Matrix<CycNumber>, conductor: u32) -> Vec<Vec<String>> {
    m.to_rows().iter().map(|r| r.iter().map(|x| x.render_at(conductor).expect("conductor")).collect()).collect()
}

fn param_grid(m: &Matrix<ParamScalar>, conductor: u32) -> Vec<Vec<String>> {
    m.to_rows().iter().map(|r| r.iter().map(|x| x.render(conductor)).collect()).collect()
}

pub fn load_theta(w: &ReflectionGroup, text: &str) -> Result<Theta, String> {
    let f: ThetaFile = serde_json::from_str(text).map_err(|e| e.to_string())?;
    let n = w.conductor();
    let gens = f
        .generators
        .iter()
        .map(|g| {
            let x = parse_cyc_grid(&g.element, n)?;
            let e = w.find(&x).ok_or("generator is not a group element")?;
            Ok((e, parse_cyc_grid(&g.image, n)?))
        })
        .collect::<Result<Vec<(Elem, Matrix<CycNumber>)>, String>>()?;
    Theta::from_generator_images(w, f.hyperplane, &f.label, &gens).map_err(|e| e.to_string())
}

/// Matrix dump of a module: group generators and every `p_H`.
#[derive(Serialize, Deserialize, Debug, PartialEq)]
pub struct ModuleDump {
    pub group: String,
    pub conductor: u32,
    pub orbit: usize,
    pub theta: String,
    pub dim: usize,
    pub generators: Vec<(Elem, Vec<Vec<String>>)>,
    pub idempotents: Vec<(usize, Vec<Vec<String>>)>,
}

impl ModuleDump {
    pub fn new(w: &ReflectionGroup, m: &InducedModule) -> Self {
        let n = w.conductor();
        ModuleDump {
            group: w.label(),
            conductor: n,
            orbit: m.orbit_id,
            theta: m.theta.label.clone(),
            dim: m.dim(),
            generators: w.generators().iter().map(|&g| (g, cyc_grid(m.group_matrix(g), n))).collect(),
            idempotents: (0..w.hyperplane_count()).map(|h| (h, param_grid(m.p(h), n))).collect(),
        }
    }

    /// Parses every entry back and compares with the module.
    pub fn matches(&self, m: &InducedModule) -> Result<bool, String> {
        for (g, grid) in &self.generators {
            if parse_cyc_grid(grid, self.conductor)? != *m.group_matrix(*g) {
                return Ok(false);
            }
        }
        for (h, grid) in &self.idempotents {
            if parse_param_grid(grid, self.conductor)? != *m.p(*h) {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

pub fn cmd_reps(cfg: &RunConfig, theta: Option<usize>, orbit: Option<usize>, theta_file: Option<&Path>) -> Result<Report, String> {
    let w = cfg.build_group()?;
    let params = cfg.br1_params(&w);
    if let Some(path) = theta_file {
        let text = fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
        let th = load_theta(&w, &text)?;
        let m = induce(&w, &th, &params, None).map_err(|e| e.to_string())?;
        let rel = crate::reps::verify_module_relations(&w, &m);
        let comm = crate::reps::commutant_dimension(&w, &m);
        let cond = crate::reps::chen_conditions_on_module(&w, &m);
        let dump = ModuleDump::new(&w, &m);
        let text = format!(
            "{} theta {}: dim {}, relations {}, commutant {comm}, (1)' {}, (1)'' {}\n",
            w.label(),
            th.label,
            m.dim(),
            pass(rel.passed),
            cond.holds_1prime,
            cond.holds_1doubleprime
        );
        let json = json!({"group": w.label(), "module": dump, "relations": rel.families, "commutant_dim": comm,
            "holds_1prime": cond.holds_1prime, "holds_1doubleprime": cond.holds_1doubleprime});
        let mut r = Report::new(rel.passed && comm == 1, json, text);
        r.csv = Some(format!(
            "orbit_id,theta_label,dim,holds_1prime,holds_1doubleprime,commutant_dim\n{},{},{},{},{},{comm}\n",
            m.orbit_id,
            th.label,
            m.dim(),
            cond.holds_1prime,
            cond.holds_1doubleprime
        ));
        return Ok(r);
    }
    let mut c = classify_level1(&w, &params);
    let full = theta.is_none() && orbit.is_none();
    c.rows.retain(|r| orbit.is_none_or(|o| r.orbit_id == o) && theta.is_none_or(|t| r.theta_label == t.to_string()));
    let rows_ok = c.rows.iter().all(|r| r.relations_ok && r.commutant_dim == 1);
    let passed = rows_ok && c.traces_distinct && (!full || c.sum_matches());
    let mut text = c.to_csv();
    if full {
        writeln!(text, "# sum of squares {} (br1 - |W| = {}), traces distinct {}", c.sum_of_squares, c.expected, c.traces_distinct)
            .unwrap();
    }
    let csv = c.to_csv();
    let mut r = Report::new(passed, serde_json::to_value(&c).expect("serializable"), text);
    r.csv = Some(csv);
    Ok(r)
}

pub fn cmd_lattice(cfg: &RunConfig) -> Result<Report, String> {
    let w = cfg.build_group()?;
    let lat = Lattice::build_with_cap(&w, cfg.lattice_cap).map_err(|e| e.to_string())?;
    let dump = lat.dump(&w.label());
    let mut text = format!("{}: {} full reflection subgroups, {} orbits\n", w.label(), lat.len(), dump.orbits.len());
    for (i, n) in lat.nodes().iter().enumerate() {
        writeln!(text, "  {i}: hyperplanes {:?}, order {}", n.hyperplanes, n.elements.len()).unwrap();
    }
    Ok(Report::new(true, serde_json::to_value(&dump).expect("serializable"), text))
}

fn flat_text(r: &FlatnessReport) -> String {
    let mut text = format!("{} ({}): {}\n", r.group, r.flavor.name(), if r.inconclusive { "INCONCLUSIVE" } else { pass(r.passed) });
    for f in &r.flats {
        let ok = f.commutators.iter().all(|(_, b)| *b);
        writeln!(text, "  flat {:?}{}: {}", f.hyperplanes, if f.crossing_edge { " (crossing)" } else { "" }, pass(ok)).unwrap();
    }
    writeln!(text, "  equivariance: {}", pass(r.equivariant)).unwrap();
    for (name, ok) in &r.identities {
        writeln!(text, "  identity {name}: {ok}").unwrap();
    }
    if let Some(n) = &r.note {
        writeln!(text, "  {n}").unwrap();
    }
    text
}

pub fn cmd_flat(cfg: &RunConfig, flavor: FlavorArg, reading: ReadingArg) -> Result<Report, String> {
    let w = cfg.build_group()?;
    let reports: Vec<FlatnessReport> = match flavor {
        FlavorArg::Chen => vec![kohno_check_br1(&w, &cfg.br1_params(&w))],
        FlavorArg::LatticeGroup => {
            let lat = Lattice::build_with_cap(&w, cfg.lattice_cap).map_err(|e| e.to_string())?;
            let readings = match reading {
                ReadingArg::Power => vec![LambdaReading::PowerOfMu],
                ReadingArg::PerReflection => vec![LambdaReading::PerReflection],
                ReadingArg::Both => vec![LambdaReading::PowerOfMu, LambdaReading::PerReflection],
            };
            readings.into_iter().map(|r| kohno_check_lattice_group(&w, &lat, r)).collect()
        }
        FlavorArg::LatticeBrauer => {
            let lat = Lattice::build_with_cap(&w, cfg.lattice_cap).map_err(|e| e.to_string())?;
            vec![kohno_check_lattice_brauer(&w, &lat, &cfg.specialization(), &cfg.gb).map_err(|e| e.to_string())?]
        }
    };
    let passed = reports.iter().all(|r| r.passed);
    let text = reports.iter().map(flat_text).collect::<String>();
    let json = json!({"group": w.label(), "reports": reports, "aggregate": passed});
    Ok(Report::new(passed, json, text))
}

/// Writes the artifact to `out` (or returns it as the report text) and
/// checks that it parses back to the same object.
pub fn cmd_export(cfg: &RunConfig, artifact: Artifact, orbit: usize, theta: usize) -> Result<Report, String> {
    let w = cfg.build_group()?;
    let n = w.conductor();
    let (body, round_trip, kind) = match artifact {
        Artifact::Presentation => {
            let p = presentation_for(cfg, &w)?;
            let body = p.to_text(&|c| c.render(n));
            let back = parse_presentation(&body, n).map_err(|e| e.to_string())?;
            let ok = back.names == p.names && back.relations == p.relations && back.table == p.table;
            (body, ok, "presentation")
        }
        Artifact::Gb => {
            let spec = cfg.specialization();
            let p = presentation_for(cfg, &w)?.specialize(&spec).map_err(|e| e.to_string())?;
            let gb = p.groebner(&cfg.gb);
            let basis = Presentation {
                names: p.names.clone(),
                relations: gb.polynomials().into_iter().cloned().collect(),
                table: vec![false; gb.len()],
                group_letters: p.group_letters,
                lattice_letters: p.lattice_letters,
            };
            let body = basis.to_text(&|c: &Rational| format!("{c}"));
            let back = parse_presentation(&body, n)
                .map_err(|e| e.to_string())?
                .specialize(&spec)
                .map_err(|e| e.to_string())?;
            (body, back.relations == basis.relations, "gb")
        }
        Artifact::Lattice => {
            let lat = Lattice::build_with_cap(&w, cfg.lattice_cap).map_err(|e| e.to_string())?;
            let dump = lat.dump(&w.label());
            let body = serde_json::to_string_pretty(&dump).expect("serializable") + "\n";
            let back: LatticeDump = serde_json::from_str(&body).map_err(|e| e.to_string())?;
            (body, back == dump, "lattice")
        }
        Artifact::Matrices => {
            let h0 = w.orbit_representative(orbit.min(w.orbit_count().saturating_sub(1)));
            let ch = quotient_characters(&w, h0).map_err(|e| e.to_string())?;
            let ch = ch.get(theta).ok_or_else(|| format!("no character with label {theta}"))?;
            let m = induce(&w, &Theta::from_character(ch), &cfg.br1_params(&w), None).map_err(|e| e.to_string())?;
            let dump = ModuleDump::new(&w, &m);
            let body = serde_json::to_string_pretty(&dump).expect("serializable") + "\n";
            let back: ModuleDump = serde_json::from_str(&body).map_err(|e| e.to_string())?;
            (body, back == dump && back.matches(&m)?, "matrices")
        }
    };
    let json = json!({"group": w.label(), "artifact": kind, "round_trip": round_trip, "bytes": body.len(),
        "path": cfg.out.as_ref().map(|p| p.display().to_string())});
    let mut r = Report::new(round_trip, json, body);
    // with --out the artifact itself is written; the report goes to stdout
    if cfg.out.is_some() {
        r.csv = None;
    }
    Ok(r)
}

pub fn cmd_reproduce(cfg: &RunConfig) -> Result<Report, String> {
    let opts = ReproduceOptions {
        group: cfg.group_given.then(|| cfg.group.clone()),
        variant: cfg.variant_given.then(|| cfg.variant.clone()),
        seed: cfg.seed,
        gb: cfg.gb.clone(),
    };
    let claims = reproduce(&opts);
    let passed = claims.iter().all(|c| c.passed);
    let mut text = String::new();
    for c in &claims {
        writeln!(text, "{} {:<40} {}", pass(c.passed), c.key, c.detail).unwrap();
    }
    writeln!(text, "{} of {} claims pass", claims.iter().filter(|c| c.passed).count(), claims.len()).unwrap();
    Ok(Report::new(passed, json!({"claims": claims}), text))
}

/// Runs a parsed command line; returns the process exit code.
pub fn run(cli: Cli) -> i32 {
    let cfg = match RunConfig::from_common(&cli.common) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("error: {e}");
            return 2;
        }
    };
    let export = matches!(cli.command, Command::Export { .. });
    let result = match &cli.command {
        Command::GroupInfo => cmd_group_info(&cfg),
        Command::Dim => cmd_dim(&cfg),
        Command::AssocCheck => cmd_assoc(&cfg),
        Command::VogelCheck => cmd_vogel(&cfg),
        Command::CfwCheck { map } => cmd_cfw(&cfg, *map),
        Command::Gb { presentation } => cmd_gb(&cfg, presentation.as_deref()),
        Command::Reps { theta, orbit, theta_file } => cmd_reps(&cfg, *theta, *orbit, theta_file.as_deref()),
        Command::Lattice => cmd_lattice(&cfg),
        Command::Flat { flavor, reading } => cmd_flat(&cfg, *flavor, *reading),
        Command::Export { artifact, orbit, theta } => cmd_export(&cfg, *artifact, *orbit, *theta),
        Command::ReproducePaper => cmd_reproduce(&cfg),
    };
    let report = match result {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return 2;
        }
    };
    let emitted = if export && cfg.out.is_some() {
        // the artifact goes to the file, the round-trip report to stdout
        let path = cfg.out.as_ref().unwrap();
        if let Err(e) = fs::write(path, &report.text) {
            eprintln!("error: {}: {e}", path.display());
            return 2;
        }
        let fmt = if cfg.format == Format::Text { Format::Json } else { cfg.format };
        report.render(fmt).map(|s| {
            print!("{s}");
        })
    } else {
        report.render(cfg.format).and_then(|s| match &cfg.out {
            Some(p) => fs::write(p, s).map_err(|e| format!("{}: {e}", p.display())),
            None => {
                print!("{s}");
                Ok(())
            }
        })
    };
    if let Err(e) = emitted {
        eprintln!("error: {e}");
        return 2;
    }
    if report.passed {
        0
    } else {
        1
    }
}
