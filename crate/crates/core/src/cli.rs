//! Configuration loading and command dispatch behind the `preproj` binary.

use std::fmt::Write as _;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::cartan::{CartanData, CartanMatrix, SymmetrizerRequest};
use crate::coxeter::{
    coxeter_order, format_word, simple_reflection_matrix, CoxeterOrder, EnumerationLimits, IntMatrix, WeylGroup,
    DEFAULT_WEYL_CAP,
};
use crate::error::{Error, Result};
use crate::field::{Field, FieldSpec, PrimeField, Rational};
use crate::pathalg::{FiniteDimAlgebra, GroebnerCaps};
use crate::tautilt::{IdealSemigroup, ReportOptions};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum OutputFormat {
    #[default]
    Text,
    Json,
    Dot,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Command {
    Check,
    Algebra,
    Weyl,
    Stt,
    MutationGraph,
    Verify,
}

impl std::str::FromStr for Command {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "check" => Command::Check,
            "algebra" => Command::Algebra,
            "weyl" => Command::Weyl,
            "stt" => Command::Stt,
            "mutation-graph" => Command::MutationGraph,
            "verify" => Command::Verify,
            _ => return Err(Error::Validation(format!("unknown command {s:?}"))),
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
enum SymmetrizerSpec {
    Keyword(String),
    Given(Vec<i64>),
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawConfig {
    cartan: Vec<Vec<i64>>,
    #[serde(default)]
    symmetrizer: Option<SymmetrizerSpec>,
    /// 1-based pairs.
    #[serde(default)]
    orientation: Option<Vec<(usize, usize)>>,
    #[serde(default)]
    field: FieldSpec,
    #[serde(default)]
    weyl_cap: Option<usize>,
    #[serde(default)]
    groebner_max_degree: Option<usize>,
    #[serde(default)]
    groebner_max_basis: Option<usize>,
    #[serde(default)]
    seed: u64,
}

/// A validated run configuration.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunConfig {
    pub data: CartanData,
    pub field: FieldSpec,
    pub weyl_cap: usize,
    pub groebner: GroebnerCaps,
    pub seed: u64,
    pub format: OutputFormat,
    pub show_basis: bool,
}

fn invalid(path: &str, e: impl std::fmt::Display) -> Error {
    Error::Validation(format!("{path}: {e}"))
}

fn positive(path: &str, v: Option<usize>, default: usize) -> Result<usize> {
    match v {
        Some(0) => Err(invalid(path, "must be positive")),
        Some(v) => Ok(v),
        None => Ok(default),
    }
}

/// Parses a JSON configuration and fills in defaults.
pub fn parse_config(json: &str) -> Result<RunConfig> {
    let raw: RawConfig = serde_json::from_str(json).map_err(|e| Error::Parse(e.to_string()))?;
    let cartan = CartanMatrix::new(raw.cartan).map_err(|e| invalid("cartan", e))?;
    let request = match raw.symmetrizer {
        None => SymmetrizerRequest::Minimal,
        Some(SymmetrizerSpec::Keyword(k)) if k == "minimal" => SymmetrizerRequest::Minimal,
        Some(SymmetrizerSpec::Keyword(k)) => return Err(invalid("symmetrizer", format!("unknown keyword {k:?}"))),
        Some(SymmetrizerSpec::Given(d)) => SymmetrizerRequest::Given(d),
    };
    let symmetrizer = cartan.symmetrizer(request).map_err(|e| invalid("symmetrizer", e))?;
    let orientation = match raw.orientation {
        None => cartan.default_orientation(),
        Some(pairs) => {
            let zero_based = pairs
                .iter()
                .map(|&(i, j)| match (i.checked_sub(1), j.checked_sub(1)) {
                    (Some(i), Some(j)) => Ok((i, j)),
                    _ => Err(invalid("orientation", "vertices are numbered from 1")),
                })
                .collect::<Result<Vec<_>>>()?;
            cartan.orientation(zero_based).map_err(|e| invalid("orientation", e))?
        }
    };
    if let FieldSpec::Prime { p } = raw.field {
        PrimeField::new(p).map_err(|e| invalid("field.p", e))?;
    }
    let defaults = GroebnerCaps::default();
    Ok(RunConfig {
        data: CartanData::new(cartan, symmetrizer, orientation)?,
        field: raw.field,
        weyl_cap: positive("weyl_cap", raw.weyl_cap, DEFAULT_WEYL_CAP)?,
        groebner: GroebnerCaps {
            max_degree: positive("groebner_max_degree", raw.groebner_max_degree, defaults.max_degree)?,
            max_basis: positive("groebner_max_basis", raw.groebner_max_basis, defaults.max_basis)?,
        },
        seed: raw.seed,
        format: OutputFormat::Text,
        show_basis: false,
    })
}

/// Reads a configuration from a file, or parses the argument itself when it
/// looks like inline JSON.
pub fn load_config(source: &str) -> Result<RunConfig> {
    if source.trim_start().starts_with('{') {
        return parse_config(source);
    }
    let text = std::fs::read_to_string(Path::new(source)).map_err(|e| Error::Io(format!("{source}: {e}")))?;
    parse_config(&text)
}

/// Output of a command and the process exit status it implies.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// 0 success, 1 verification failure, 2 input error.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::VerificationFailed(_)
        | Error::ReportFailure(_)
        | Error::DecompositionFailed
        | Error::NotMutable(_)
        | Error::NotAModule(_)
        | Error::FieldDegenerate { .. }
        | Error::SocleNotSimple { .. } => 1,
        _ => 2,
    }
}

pub fn run_command(cfg: &RunConfig, cmd: Command) -> Outcome {
    let result = match cfg.field {
        FieldSpec::Rational => dispatch(&Rational, cfg, cmd),
        FieldSpec::Prime { p } => PrimeField::new(p).and_then(|f| dispatch(&f, cfg, cmd)),
    };
    match result {
        Ok((code, stdout)) => Outcome {
            code,
            stdout,
            stderr: String::new(),
        },
        Err(e) => Outcome {
            code: exit_code(&e),
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        },
    }
}

fn dispatch<F: Field>(f: &F, cfg: &RunConfig, cmd: Command) -> Result<(i32, String)> {
    match cmd {
        Command::Check => Ok((0, check(cfg))),
        Command::Weyl => Ok((0, weyl(cfg))),
        Command::Algebra => algebra(f, cfg).map(|s| (0, s)),
        Command::Stt => stt(f, cfg).map(|s| (0, s)),
        Command::MutationGraph => mutation_graph(f, cfg).map(|s| (0, s)),
        Command::Verify => verify(f, cfg),
    }
}

fn to_json<T: Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("serializable") + "\n"
}

#[derive(Serialize)]
struct CheckReport {
    rank: usize,
    cartan: Vec<Vec<i64>>,
    symmetrizer: Vec<i64>,
    minimal_symmetrizer: bool,
    orientation: Vec<(usize, usize)>,
    components: Vec<Vec<usize>>,
    gram: Vec<Vec<i64>>,
    dynkin: bool,
    no_dynkin_component: bool,
}

fn check(cfg: &RunConfig) -> String {
    let d = &cfg.data;
    let report = CheckReport {
        rank: d.rank(),
        cartan: d.cartan.entries().to_vec(),
        symmetrizer: d.symmetrizer.entries().to_vec(),
        minimal_symmetrizer: d.symmetrizer.is_minimal(),
        orientation: d.orientation.pairs().iter().map(|&(i, j)| (i + 1, j + 1)).collect(),
        components: d
            .cartan
            .components()
            .into_iter()
            .map(|c| c.into_iter().map(|v| v + 1).collect())
            .collect(),
        gram: d.gram().to_vec(),
        dynkin: d.is_dynkin(),
        no_dynkin_component: d.has_no_dynkin_component(),
    };
    if cfg.format == OutputFormat::Json {
        return to_json(&report);
    }
    let mut s = String::new();
    writeln!(s, "Cartan matrix {}", d.cartan).unwrap();
    writeln!(s, "rank {}", report.rank).unwrap();
    writeln!(
        s,
        "symmetrizer {:?}{}",
        report.symmetrizer,
        if report.minimal_symmetrizer { " (minimal)" } else { "" }
    )
    .unwrap();
    writeln!(s, "orientation {:?}", report.orientation).unwrap();
    for i in 0..d.rank() {
        for j in d.cartan.neighbors(i).filter(|&j| j > i) {
            writeln!(
                s,
                "edge {}-{}: g = {}, f_{}{} = {}, f_{}{} = {}",
                i + 1,
                j + 1,
                d.cartan.g(i, j),
                i + 1,
                j + 1,
                d.cartan.f(i, j),
                j + 1,
                i + 1,
                d.cartan.f(j, i)
            )
            .unwrap();
        }
    }
    writeln!(s, "components {:?}", report.components).unwrap();
    writeln!(s, "Dynkin type: {}", if report.dynkin { "yes" } else { "no" }).unwrap();
    writeln!(
        s,
        "no Dynkin component: {}",
        if report.no_dynkin_component { "yes" } else { "no" }
    )
    .unwrap();
    s
}

#[derive(Serialize)]
struct WeylReport {
    rank: usize,
    order: usize,
    truncated: bool,
    elements_per_length: Vec<usize>,
    coxeter_orders: Vec<Vec<Option<u32>>>,
    longest_word: Option<String>,
}

fn weyl(cfg: &RunConfig) -> String {
    let c = &cfg.data.cartan;
    let w = WeylGroup::enumerate(c, EnumerationLimits::cap(cfg.weyl_cap));
    let mut per_length = Vec::new();
    for e in w.elements() {
        if per_length.len() <= e.length {
            per_length.resize(e.length + 1, 0);
        }
        per_length[e.length] += 1;
    }
    let report = WeylReport {
        rank: w.rank(),
        order: w.order(),
        truncated: w.is_truncated(),
        elements_per_length: per_length,
        coxeter_orders: (0..c.rank())
            .map(|i| {
                (0..c.rank())
                    .map(|j| {
                        if i == j {
                            return Some(1);
                        }
                        match coxeter_order(c, i, j) {
                            CoxeterOrder::Finite(m) => Some(m),
                            CoxeterOrder::Infinite => None,
                        }
                    })
                    .collect()
            })
            .collect(),
        longest_word: (!w.is_truncated()).then(|| format_word(&w.element(w.longest_element()).canonical_word)),
    };
    if cfg.format == OutputFormat::Json {
        return to_json(&report);
    }
    let mut s = String::new();
    if report.truncated {
        writeln!(
            s,
            "enumeration stopped at the cap: ball of {} elements (group may be infinite)",
            report.order
        )
        .unwrap();
    } else {
        writeln!(s, "|W| = {}", report.order).unwrap();
    }
    writeln!(s, "elements per length {:?}", report.elements_per_length).unwrap();
    for (i, row) in report.coxeter_orders.iter().enumerate() {
        let cells: Vec<String> = row
            .iter()
            .map(|m| m.map_or("∞".to_string(), |m| m.to_string()))
            .collect();
        writeln!(s, "m_{}j = [{}]", i + 1, cells.join(", ")).unwrap();
    }
    if let Some(word) = &report.longest_word {
        writeln!(s, "longest element {word}").unwrap();
    }
    s
}

fn build<F: Field>(f: &F, cfg: &RunConfig) -> Result<FiniteDimAlgebra<F>> {
    FiniteDimAlgebra::new(f, &cfg.data, cfg.groebner)
}

fn build_dynkin<F: Field>(f: &F, cfg: &RunConfig) -> Result<FiniteDimAlgebra<F>> {
    if !cfg.data.is_dynkin() {
        return Err(Error::NotDynkin(
            "support τ-tilting theory here needs Π finite-dimensional, which holds exactly when q_C is positive definite"
                .into(),
        ));
    }
    build(f, cfg)
}

fn algebra<F: Field>(f: &F, cfg: &RunConfig) -> Result<String> {
    let alg = build(f, cfg)?;
    let report = alg.verify(cfg.seed)?;
    if cfg.format == OutputFormat::Json {
        return Ok(to_json(&report));
    }
    let mut s = String::new();
    writeln!(s, "dim Π = {}", report.dim).unwrap();
    writeln!(s, "Gröbner basis: {} elements", report.groebner_size).unwrap();
    for i in 0..alg.rank() {
        writeln!(
            s,
            "e{}Π: dim {}, blocks {:?}, radical layers {:?}",
            i + 1,
            report.vertex_dims[i],
            report.block_dims[i],
            report.radical_layers[i]
        )
        .unwrap();
        if cfg.show_basis {
            let q = alg.quiver();
            let paths: Vec<String> = (0..alg.rank())
                .flat_map(|j| alg.block(i, j).iter().map(|&p| alg.basis()[p].display(q)))
                .collect();
            writeln!(s, "  basis {}", paths.join(", ")).unwrap();
        }
    }
    writeln!(s, "associativity checks: {}", report.associativity_checks).unwrap();
    Ok(s)
}

#[derive(Serialize)]
struct PairLine {
    word: String,
    summands: Vec<String>,
    dims: Vec<Vec<usize>>,
    projective: Vec<String>,
}

fn stt<F: Field>(f: &F, cfg: &RunConfig) -> Result<String> {
    let alg = build_dynkin(f, cfg)?;
    let semigroup = IdealSemigroup::new(&alg, cfg.weyl_cap, cfg.seed)?;
    let catalogue = semigroup.catalogue();
    let mut lines = Vec::new();
    for w in semigroup.ordered_elements() {
        let pair = semigroup.checked_stt_pair(w)?;
        lines.push(PairLine {
            word: semigroup.word_label(w),
            summands: catalogue.blocks[w]
                .iter()
                .map(|&(_, c)| catalogue.name(c).to_string())
                .collect(),
            dims: pair.summands.iter().map(|m| m.dims().to_vec()).collect(),
            projective: pair.projective.iter().map(|k| format!("e{}P", k + 1)).collect(),
        });
    }
    if cfg.format == OutputFormat::Json {
        return Ok(to_json(&lines));
    }
    let mut s = String::new();
    for l in &lines {
        let m = if l.summands.is_empty() {
            "0".into()
        } else {
            l.summands.join("+")
        };
        let p = if l.projective.is_empty() {
            "0".into()
        } else {
            l.projective.join("+")
        };
        writeln!(s, "{:>8}  ({m}, {p})", l.word).unwrap();
    }
    writeln!(s, "{} support τ-tilting pairs", lines.len()).unwrap();
    Ok(s)
}

fn mutation_graph<F: Field>(f: &F, cfg: &RunConfig) -> Result<String> {
    let alg = build_dynkin(f, cfg)?;
    let semigroup = IdealSemigroup::new(&alg, cfg.weyl_cap, cfg.seed)?;
    let graph = semigroup.mutation_graph(&semigroup.catalogue());
    Ok(match cfg.format {
        OutputFormat::Dot => graph.to_dot(),
        OutputFormat::Json => graph.to_json() + "\n",
        OutputFormat::Text => {
            let mut s = String::new();
            for n in &graph.nodes {
                writeln!(s, "{:>8}  {}", n.word, n.label()).unwrap();
            }
            for (from, i, to) in graph.labelled_edges() {
                writeln!(s, "{from} --{i}--> {to}").unwrap();
            }
            s
        }
    })
}

#[derive(Serialize)]
struct VerifyLine {
    check: String,
    passed: bool,
    detail: String,
}

fn verify<F: Field>(f: &F, cfg: &RunConfig) -> Result<(i32, String)> {
    let alg = build_dynkin(f, cfg)?;
    let mut lines = Vec::new();
    let mut push = |check: &str, passed: bool, detail: String| {
        lines.push(VerifyLine {
            check: check.into(),
            passed,
            detail,
        })
    };

    match alg.verify(cfg.seed) {
        Ok(r) => push(
            "algebra",
            true,
            format!("dim Π = {}, e_iΠ dims {:?}", r.dim, r.vertex_dims),
        ),
        Err(e) => push("algebra", false, e.to_string()),
    }

    let c = &cfg.data.cartan;
    let identity = IntMatrix::identity(c.rank());
    let mut coxeter_ok = true;
    for i in 0..c.rank() {
        for j in (0..c.rank()).filter(|&j| j != i) {
            if let CoxeterOrder::Finite(m) = coxeter_order(c, i, j) {
                let st = simple_reflection_matrix(c, i).mul(&simple_reflection_matrix(c, j));
                let mut p = identity.clone();
                for k in 1..=m {
                    p = p.mul(&st);
                    coxeter_ok &= (p == identity) == (k == m);
                }
            }
        }
    }
    push("Coxeter relations", coxeter_ok, String::new());

    for ch in alg.homological_identities(cfg.seed)? {
        push(&ch.name, ch.passed, ch.detail);
    }

    let semigroup = IdealSemigroup::new(&alg, cfg.weyl_cap, cfg.seed)?;
    let report = semigroup.classification_report(ReportOptions::default())?;
    let order = report.weyl_order;
    push("ψ well-defined", report.well_defined, String::new());
    push("ψ injective", report.injective, String::new());
    push(
        "support τ-tilting pairs",
        report.valid_pairs == order && report.stt_count == order,
        if report.stt_count == order {
            format!("{} support τ-tilting modules = |W|", report.stt_count)
        } else {
            format!("{} support τ-tilting modules, |W| = {order}", report.stt_count)
        },
    );
    push(
        "τ-rigid indecomposables",
        true,
        report.tau_rigid_indecomposables.join(", "),
    );
    push(
        "Demazure consistency",
        report.demazure_consistent,
        format!("{} pairs", report.demazure_pairs),
    );
    push(
        "mutation edges",
        report.mutation_consistent,
        format!("{} edges reproduced by left mutation", report.mutation_edges),
    );
    push(
        "locally free I_w (observed)",
        true,
        format!("{} of {order}", report.locally_free_elements),
    );
    for failure in &report.failures {
        push("report", false, failure.clone());
    }

    let code = if lines.iter().all(|l| l.passed) { 0 } else { 1 };
    if cfg.format == OutputFormat::Json {
        return Ok((code, to_json(&lines)));
    }
    let mut s = String::new();
    for l in &lines {
        let mark = if l.passed { "ok  " } else { "FAIL" };
        if l.detail.is_empty() {
            writeln!(s, "{mark} {}", l.check).unwrap();
        } else {
            writeln!(s, "{mark} {}: {}", l.check, l.detail).unwrap();
        }
    }
    Ok((code, s))
}
