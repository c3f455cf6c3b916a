//! The `gsp4` command line: one verb per operation, JSON in and out.
//!
//! Exit codes: 0 success, 1 domain error, 2 malformed input. Errors are written to standard
//! error as `{"error": kind, "message": text}`.

use crate::conductors::{self, RamificationFiltration};
use crate::exact::{parse_rational, parse_scalar, Matrix, Scalar};
use crate::groups::{element_ref, GroupJson, GroupRep, RepJson};
use crate::gsp4_tables::{self, IwahoriLabel};
use crate::hodge_tate::{self, WeightData};
use crate::patching::{self, FamilyJson, PatchError};
use crate::symplectic;
use crate::weil_deligne::{self, QuadraticExtension, SL2Parameter, SteinbergKind, WDPair, WdPairJson};
use clap::{Args, Parser, Subcommand};
use num_rational::BigRational;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};
use std::path::PathBuf;
use std::sync::Arc;

#[derive(Parser, Debug)]
#[command(name = "gsp4", version, about = "Exact Weil-Deligne, GSp(4) and patching computations", allow_negative_numbers = true)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Default)]
struct Input {
    /// JSON input file, `-` for standard input.
    #[arg(long, value_name = "FILE")]
    input: Option<PathBuf>,
    /// Inline JSON input.
    #[arg(long, value_name = "JSON", conflicts_with = "input")]
    json: Option<String>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Classify a nilpotent element of gsp4 (JSON 4x4 matrix), or test a partition.
    #[command(allow_negative_numbers = true)]
    ClassifyNilpotent {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_delimiter = ',', conflicts_with_all = ["input", "json"])]
        partition: Option<Vec<usize>>,
        #[arg(long)]
        schema: bool,
    },
    /// Build or analyse a Weil-Deligne pair.
    #[command(allow_negative_numbers = true)]
    Wd {
        #[command(flatten)]
        input: Input,
        /// Build ⊕ 1 ⊠ S_d over the trivial Weil part for this partition.
        #[arg(long, value_delimiter = ',')]
        partition: Option<Vec<usize>>,
        /// Build a Steinberg parameter: gsp4_steinberg or klingen_st.
        #[arg(long)]
        steinberg: Option<String>,
        #[arg(long)]
        q: Option<String>,
        /// Unramified twist for --steinberg.
        #[arg(long)]
        twist: Option<String>,
        #[arg(long)]
        semisimplify: bool,
        #[arg(long)]
        schema: bool,
    },
    /// Purity of a Weil-Deligne pair at a weight.
    #[command(allow_negative_numbers = true)]
    Purity {
        #[command(flatten)]
        input: Input,
        #[arg(long, required_unless_present = "schema")]
        weight: Option<i64>,
        #[arg(long)]
        schema: bool,
    },
    /// Restriction to a quadratic extension (unramified unless --ramified lists the inertia subgroup).
    #[command(allow_negative_numbers = true)]
    BaseChange {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_delimiter = ',')]
        ramified: Option<Vec<String>>,
        #[arg(long)]
        schema: bool,
    },
    /// Rows of the Iwahori-spherical table.
    #[command(allow_negative_numbers = true)]
    Table {
        #[arg(long = "type")]
        label: Option<String>,
        /// Plain-text table instead of JSON.
        #[arg(long)]
        text: bool,
        /// Include the monodromy-rank report.
        #[arg(long)]
        ranks: bool,
        #[arg(long)]
        schema: bool,
    },
    /// Type with the given parahoric fixed-space dimensions (K, K~, J_P, J_Q, I).
    #[command(allow_negative_numbers = true)]
    ClassifyDims {
        #[arg(long, value_delimiter = ',', required_unless_present = "schema")]
        dims: Option<Vec<u32>>,
        #[arg(long)]
        schema: bool,
    },
    /// Artin and Swan conductors of a representation with a ramification filtration.
    #[command(allow_negative_numbers = true)]
    Conductor {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        schema: bool,
    },
    /// Depth (f - n)/n from a conductor exponent.
    #[command(allow_negative_numbers = true)]
    Depth {
        #[arg(long, required_unless_present = "schema")]
        f: Option<i64>,
        #[arg(long, required_unless_present = "schema")]
        n: Option<i64>,
        #[arg(long)]
        schema: bool,
    },
    /// Hodge-Tate weights, Blattner parameter and Clozel quadruple.
    #[command(allow_negative_numbers = true)]
    Weights {
        #[arg(long, required_unless_present = "schema")]
        mu1: Option<i64>,
        #[arg(long, required_unless_present = "schema")]
        mu2: Option<i64>,
        #[arg(long, required_unless_present = "schema")]
        w: Option<i64>,
        #[arg(long, default_value_t = 0)]
        b: i64,
        /// Central weight of the archimedean parameter; defaults to w.
        #[arg(long)]
        mu0: Option<i64>,
        #[arg(long)]
        schema: bool,
    },
    /// Archimedean parameter (--mu0 --nu1 --nu2) or GL(2) parameter (--n --lambda).
    #[command(allow_negative_numbers = true)]
    Parameter {
        #[arg(long)]
        mu0: Option<i64>,
        #[arg(long)]
        nu1: Option<i64>,
        #[arg(long)]
        nu2: Option<i64>,
        #[arg(long)]
        n: Option<i64>,
        #[arg(long)]
        lambda: Option<String>,
        #[arg(long)]
        schema: bool,
    },
    /// Descent condition for φ_n(λ) ⊕ φ_n'(λ').
    #[command(allow_negative_numbers = true)]
    Descend {
        #[arg(long, required_unless_present = "schema")]
        n: Option<i64>,
        #[arg(long, required_unless_present = "schema")]
        lambda: Option<String>,
        #[arg(long = "n-prime", required_unless_present = "schema")]
        n_prime: Option<i64>,
        #[arg(long = "lambda-prime", required_unless_present = "schema")]
        lambda_prime: Option<String>,
        #[arg(long)]
        schema: bool,
    },
    /// Patch a family of representations of prime-index subgroups.
    #[command(allow_negative_numbers = true)]
    Patch {
        #[arg(long, value_name = "FILE", required_unless_present = "schema")]
        family: Option<PathBuf>,
        #[arg(long)]
        solvable: bool,
        #[arg(long = "max-height")]
        max_height: Option<usize>,
        /// Cross-check against brute-force enumeration.
        #[arg(long)]
        oracle: bool,
        #[arg(long)]
        schema: bool,
    },
    /// Splitting of p in Q(sqrt d).
    #[command(allow_negative_numbers = true)]
    Split {
        #[arg(long, required_unless_present = "schema")]
        d: Option<i64>,
        #[arg(long, required_unless_present = "schema")]
        p: Option<i64>,
        #[arg(long)]
        schema: bool,
    },
    /// Imaginary quadratic fields in which every listed prime splits.
    #[command(allow_negative_numbers = true)]
    CmFamily {
        #[arg(long, value_delimiter = ',')]
        primes: Vec<i64>,
        #[arg(long, required_unless_present = "schema")]
        bound: Option<i64>,
        #[arg(long)]
        schema: bool,
    },
    /// Check a family, and optionally a representation of G against it.
    #[command(allow_negative_numbers = true)]
    Verify {
        #[arg(long, value_name = "FILE", required_unless_present = "schema")]
        family: Option<PathBuf>,
        #[arg(long, value_name = "FILE")]
        rep: Option<PathBuf>,
        #[arg(long)]
        schema: bool,
    },
}

#[derive(Debug)]
enum CliError {
    Malformed(String),
    Domain { kind: &'static str, message: String, detail: Option<Value> },
}

fn domain<E: std::fmt::Display>(kind: &'static str) -> impl Fn(E) -> CliError {
    move |e| CliError::Domain { kind, message: e.to_string(), detail: None }
}

fn malformed<E: std::fmt::Display>(e: E) -> CliError {
    CliError::Malformed(e.to_string())
}

/// Result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Runs one command line (including the program name) without touching the process streams.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion | ErrorKind::DisplayHelpOnMissingArgumentOrSubcommand => {
                    Outcome { code: 0, stdout: e.to_string(), stderr: String::new() }
                }
                _ => error_outcome(CliError::Malformed(e.to_string().trim().to_string())),
            };
        }
    };
    match dispatch(cli.command) {
        Ok(v) => Outcome { code: 0, stdout: render(&v), stderr: String::new() },
        Err(e) => error_outcome(e),
    }
}

fn render(v: &Value) -> String {
    match v {
        Value::String(s) => format!("{}\n", s),
        _ => format!("{}\n", serde_json::to_string_pretty(v).expect("serializable")),
    }
}

fn error_outcome(e: CliError) -> Outcome {
    let (code, body) = match e {
        CliError::Malformed(m) => (2, json!({"error": "malformed_input", "message": m})),
        CliError::Domain { kind, message, detail } => {
            let mut b = json!({"error": kind, "message": message});
            if let Some(d) = detail {
                b["detail"] = d;
            }
            (1, b)
        }
    };
    Outcome { code, stdout: String::new(), stderr: format!("{}\n", serde_json::to_string(&body).unwrap()) }
}

fn to_value<T: Serialize>(t: &T) -> Value {
    serde_json::to_value(t).expect("serializable")
}

fn read_path(p: &PathBuf) -> Result<String, CliError> {
    if p.as_os_str() == "-" {
        let mut s = String::new();
        std::io::Read::read_to_string(&mut std::io::stdin(), &mut s).map_err(malformed)?;
        Ok(s)
    } else {
        std::fs::read_to_string(p).map_err(|e| CliError::Malformed(format!("{}: {}", p.display(), e)))
    }
}

fn read_input(i: &Input) -> Result<Value, CliError> {
    let text = match (&i.input, &i.json) {
        (_, Some(j)) => j.clone(),
        (Some(p), None) => read_path(p)?,
        (None, None) => return Err(CliError::Malformed("expected --input FILE or --json TEXT".into())),
    };
    serde_json::from_str(&text).map_err(malformed)
}

fn parse_doc<T: for<'de> Deserialize<'de>>(v: Value) -> Result<T, CliError> {
    serde_json::from_value(v).map_err(malformed)
}

/// A bare pair document, or any verb output carrying one under "pair".
fn read_pair(i: &Input) -> Result<WDPair, CliError> {
    let v = read_input(i)?;
    let v = match v.get("pair") {
        Some(p) => p.clone(),
        None => v,
    };
    parse_doc::<WdPairJson>(v)?.build().map_err(domain("weil_deligne"))
}

fn rational(s: &str) -> Result<BigRational, CliError> {
    parse_rational(s).map_err(malformed)
}

fn schema(verb: &str) -> Value {
    let text = match verb {
        "classify-nilpotent" => include_str!("../schemas/classify-nilpotent.json"),
        "wd" => include_str!("../schemas/wd.json"),
        "purity" => include_str!("../schemas/purity.json"),
        "base-change" => include_str!("../schemas/base-change.json"),
        "table" => include_str!("../schemas/table.json"),
        "classify-dims" => include_str!("../schemas/classify-dims.json"),
        "conductor" => include_str!("../schemas/conductor.json"),
        "depth" => include_str!("../schemas/depth.json"),
        "weights" => include_str!("../schemas/weights.json"),
        "parameter" => include_str!("../schemas/parameter.json"),
        "descend" => include_str!("../schemas/descend.json"),
        "patch" => include_str!("../schemas/patch.json"),
        "split" => include_str!("../schemas/split.json"),
        "cm-family" => include_str!("../schemas/cm-family.json"),
        "verify" => include_str!("../schemas/verify.json"),
        _ => unreachable!("every verb ships a schema"),
    };
    serde_json::from_str(text).expect("shipped schemas are valid JSON")
}

pub const VERBS: [&str; 15] = [
    "classify-nilpotent",
    "wd",
    "purity",
    "base-change",
    "table",
    "classify-dims",
    "conductor",
    "depth",
    "weights",
    "parameter",
    "descend",
    "patch",
    "split",
    "cm-family",
    "verify",
];

/// The shipped JSON schema of a verb.
pub fn verb_schema(verb: &str) -> Option<Value> {
    VERBS.contains(&verb).then(|| schema(verb))
}

fn pair_analysis(w: &WDPair) -> Value {
    let filt = weil_deligne::monodromy_filtration(w.monodromy()).ok();
    json!({
        "dim": w.dim(),
        "monodromy_rank": w.monodromy_rank(),
        "indecomposable": weil_deligne::is_indecomposable(w),
        "graded_dims": filt.map(|f| to_value(&f.graded_dims())),
        "graded_weights": weil_deligne::graded_weights(w).ok().map(|g| to_value(&g)),
        "orbit": symplectic::classify_nilpotent(w.monodromy()).ok().map(|c| to_value(&c.orbit)),
    })
}

#[derive(Deserialize)]
struct ConductorDoc {
    group: GroupJson,
    rep: RepJson,
    filtration: Vec<Vec<String>>,
    #[serde(default)]
    genuine: bool,
}

fn dispatch(cmd: Command) -> Result<Value, CliError> {
    match cmd {
        Command::ClassifyNilpotent { schema: true, .. } => Ok(schema("classify-nilpotent")),
        Command::ClassifyNilpotent { partition: Some(p), .. } => {
            let v = symplectic::symplectic_partition_test(&p).map_err(domain("symplectic"))?;
            Ok(to_value(&v))
        }
        Command::ClassifyNilpotent { input, .. } => {
            let m: Matrix = parse_doc(read_input(&input)?)?;
            let c = symplectic::classify_nilpotent(&m).map_err(domain("symplectic"))?;
            Ok(json!({
                "orbit": c.orbit,
                "partition": c.orbit.partition(),
                "rank": c.orbit.rank(),
                "conjugator": c.conjugator,
                "similitude": c.similitude,
            }))
        }
        Command::Wd { schema: true, .. } => Ok(schema("wd")),
        Command::Wd { input, partition, steinberg, q, twist, semisimplify, .. } => {
            let mut w = match (partition, steinberg) {
                (Some(_), Some(_)) => return Err(CliError::Malformed("--partition and --steinberg are exclusive".into())),
                (Some(p), None) => {
                    let q = rational(q.as_deref().ok_or_else(|| CliError::Malformed("--partition needs --q".into()))?)?;
                    let triv = WDPair::unramified_character(q, Scalar::one()).map_err(domain("weil_deligne"))?;
                    let phi = SL2Parameter::uniform(triv, &p).map_err(domain("weil_deligne"))?;
                    weil_deligne::wd_from_parameter(&phi).map_err(domain("weil_deligne"))?
                }
                (None, Some(kind)) => {
                    let kind: SteinbergKind = kind.parse().map_err(malformed)?;
                    let q = rational(q.as_deref().ok_or_else(|| CliError::Malformed("--steinberg needs --q".into()))?)?;
                    let t = match twist {
                        Some(t) => parse_scalar(&t, Some(&q)).map_err(malformed)?,
                        None => Scalar::one(),
                    };
                    weil_deligne::steinberg_parameter(kind, &q, &t).map_err(domain("weil_deligne"))?
                }
                (None, None) => read_pair(&input)?,
            };
            if semisimplify {
                w = weil_deligne::frobenius_semisimplify(&w).map_err(domain("weil_deligne"))?;
            }
            Ok(json!({"pair": WdPairJson::from_pair(&w), "analysis": pair_analysis(&w)}))
        }
        Command::Purity { schema: true, .. } => Ok(schema("purity")),
        Command::Purity { input, weight, .. } => {
            let w = read_pair(&input)?;
            let weight = weight.expect("required");
            let pure = weil_deligne::purity_check(&w, weight).map_err(domain("weil_deligne"))?;
            let graded = weil_deligne::graded_weights(&w).map_err(domain("weil_deligne"))?;
            Ok(json!({"weight": weight, "pure": pure, "graded_weights": graded}))
        }
        Command::BaseChange { schema: true, .. } => Ok(schema("base-change")),
        Command::BaseChange { input, ramified, .. } => {
            let w = read_pair(&input)?;
            let ext = match ramified {
                None => QuadraticExtension::Unramified,
                Some(keys) => QuadraticExtension::Ramified(
                    keys.iter()
                        .map(|k| element_ref(w.model().inertia(), k))
                        .collect::<Result<Vec<_>, _>>()
                        .map_err(malformed)?,
                ),
            };
            let b = weil_deligne::local_base_change(&w, &ext).map_err(domain("weil_deligne"))?;
            Ok(json!({"pair": WdPairJson::from_pair(&b), "analysis": pair_analysis(&b)}))
        }
        Command::Table { schema: true, .. } => Ok(schema("table")),
        Command::Table { label, text, ranks, .. } => {
            if text {
                return Ok(Value::String(gsp4_tables::render_table_text().trim_end().to_string()));
            }
            let rows = match label {
                Some(l) => vec![gsp4_tables::table_row_by_name(&l).map_err(domain("table"))?],
                None => gsp4_tables::table(),
            };
            let out: Vec<Value> = rows
                .iter()
                .map(|r| {
                    let mut v = to_value(r);
                    if ranks {
                        v["rank_report"] = to_value(&gsp4_tables::monodromy_rank_equivalences(r));
                    }
                    v
                })
                .collect();
            Ok(if out.len() == 1 { out.into_iter().next().unwrap() } else { Value::Array(out) })
        }
        Command::ClassifyDims { schema: true, .. } => Ok(schema("classify-dims")),
        Command::ClassifyDims { dims, .. } => {
            let d = dims.expect("required");
            let arr: gsp4_tables::Dims = d
                .as_slice()
                .try_into()
                .map_err(|_| CliError::Malformed(format!("expected 5 dimensions, got {}", d.len())))?;
            let label: Option<IwahoriLabel> = gsp4_tables::classify_from_dims(&arr);
            Ok(json!({"dims": arr, "type": label}))
        }
        Command::Conductor { schema: true, .. } => Ok(schema("conductor")),
        Command::Conductor { input, .. } => {
            let doc: ConductorDoc = parse_doc(read_input(&input)?)?;
            let g = Arc::new(doc.group.build().map_err(malformed)?);
            let r = doc.rep.build(g.clone()).map_err(domain("groups"))?;
            let chain = doc
                .filtration
                .iter()
                .map(|s| s.iter().map(|k| element_ref(&g, k)).collect::<Result<Vec<_>, _>>())
                .collect::<Result<Vec<_>, _>>()
                .map_err(malformed)?;
            let f = RamificationFiltration::new(g, &chain, doc.genuine).map_err(domain("conductors"))?;
            let artin = conductors::artin_conductor(&r, &f).map_err(domain("conductors"))?;
            let swan = conductors::swan_conductor(&r, &f).map_err(domain("conductors"))?;
            let codims: Vec<usize> = f.chain().iter().map(|h| conductors::invariant_codim(&r, h)).collect();
            let report = conductors::swan_depth_identity(&r, &f).ok();
            Ok(json!({
                "artin": artin.to_string(),
                "swan": swan.to_string(),
                "codims": codims,
                "indices": f.indices(),
                "report": report,
            }))
        }
        Command::Depth { schema: true, .. } => Ok(schema("depth")),
        Command::Depth { f, n, .. } => {
            let (f, n) = (f.expect("required"), n.expect("required"));
            let d = conductors::depth_from_conductor(f, n).map_err(domain("conductors"))?;
            Ok(json!({"f": f, "n": n, "depth": d.to_string()}))
        }
        Command::Weights { schema: true, .. } => Ok(schema("weights")),
        Command::Weights { mu1, mu2, w, b, mu0, .. } => {
            let wd = WeightData::new(mu1.expect("required"), mu2.expect("required"), w.expect("required")).map_err(domain("weights"))?;
            let bl = hodge_tate::blattner(wd.nu1, wd.nu2).map_err(domain("weights"))?;
            let arch = hodge_tate::archimedean_parameter(mu0.unwrap_or(wd.w), wd.nu1, wd.nu2).map_err(domain("weights"))?;
            let quad = hodge_tate::clozel_quadruple(b, wd.bold_w, wd.n, wd.n_prime).map_err(domain("weights"))?;
            Ok(json!({
                "weight_data": wd,
                "ht_weights": hodge_tate::ht_weights(&wd),
                "blattner": [bl.k1, bl.k2],
                "motivic_weight": bl.motivic_weight,
                "archimedean_exponents": arch.exponents.iter().map(|e| e.to_string()).collect::<Vec<_>>(),
                "clozel": {"b": b, "quadruple": quad, "weights_from_quadruple": hodge_tate::ht_from_quadruple(&quad)},
            }))
        }
        Command::Parameter { schema: true, .. } => Ok(schema("parameter")),
        Command::Parameter { mu0, nu1, nu2, n, lambda, .. } => match (mu0, nu1, nu2, n, lambda) {
            (Some(m), Some(a), Some(b), None, None) => {
                Ok(to_value(&hodge_tate::archimedean_parameter(m, a, b).map_err(domain("weights"))?))
            }
            (None, None, None, Some(n), Some(l)) => Ok(to_value(&hodge_tate::gl2_parameter(n, &rational(&l)?).map_err(domain("weights"))?)),
            _ => Err(CliError::Malformed("give either --mu0 --nu1 --nu2 or --n --lambda".into())),
        },
        Command::Descend { schema: true, .. } => Ok(schema("descend")),
        Command::Descend { n, lambda, n_prime, lambda_prime, .. } => {
            let (n, np) = (n.expect("required"), n_prime.expect("required"));
            let (l, lp) = (rational(&lambda.expect("required"))?, rational(&lambda_prime.expect("required"))?);
            if n < 1 || np < 1 {
                return Err(CliError::Malformed("n and n' must be positive".into()));
            }
            let d = hodge_tate::descent_condition(n, &l, np, &lp);
            let mut v = to_value(&d);
            if let Some((m, a, b)) = d.packet {
                let arch = hodge_tate::archimedean_parameter(m, a, b).map_err(domain("weights"))?;
                v["archimedean_exponents"] = to_value(&arch.exponents.iter().map(|e| e.to_string()).collect::<Vec<_>>());
                if let Some((np, e)) = hodge_tate::isobaric_exponents(n, &l, np, &lp) {
                    v["isobaric"] = json!({"norm_power": np.to_string(), "exponents": e.iter().map(|x| x.to_string()).collect::<Vec<_>>()});
                }
            }
            Ok(v)
        }
        Command::Patch { schema: true, .. } => Ok(schema("patch")),
        Command::Patch { family, solvable, max_height, oracle, .. } => {
            let doc: FamilyJson = serde_json::from_str(&read_path(&family.expect("required"))?).map_err(malformed)?;
            let fam = doc.build().map_err(domain("patching"))?;
            let res = if solvable {
                patching::patch_solvable(&fam, max_height)
            } else if fam.has_prime_layers() {
                patching::patch(&fam)
            } else {
                return Err(CliError::Domain {
                    kind: "patching",
                    message: "members of composite index need --solvable".into(),
                    detail: None,
                });
            };
            let oracle_value = if oracle {
                let irreps = crate::groups::monomial_irreps(fam.group()).map_err(domain("groups"))?;
                let expect = patching::oracle_characters(&fam, &irreps);
                let got = patching::outcome_characters(&res);
                Some(json!({"characters": expect, "agrees": expect == got}))
            } else {
                None
            };
            match res {
                Ok(cert) => {
                    let mut v = to_value(&cert);
                    if let Some(o) = oracle_value {
                        v["oracle"] = o;
                    }
                    Ok(v)
                }
                Err(e) => {
                    let mut detail = json!({});
                    if let PatchError::Ambiguous { candidates, demand } = &e {
                        detail["candidates"] = to_value(&candidates.iter().map(|r| r.character().to_vec()).collect::<Vec<_>>());
                        detail["demand"] = to_value(demand);
                    }
                    if let PatchError::NotGeneralEnough(d) = &e {
                        detail["demand"] = to_value(d);
                    }
                    if let Some(o) = oracle_value {
                        detail["oracle"] = o;
                    }
                    Err(CliError::Domain { kind: "patching", message: e.to_string(), detail: Some(detail) })
                }
            }
        }
        Command::Split { schema: true, .. } => Ok(schema("split")),
        Command::Split { d, p, .. } => {
            let (d, p) = (d.expect("required"), p.expect("required"));
            let s = patching::quadratic_splitting(d, p).map_err(domain("splitting"))?;
            Ok(json!({"d": d, "p": p, "splitting": s}))
        }
        Command::CmFamily { schema: true, .. } => Ok(schema("cm-family")),
        Command::CmFamily { primes, bound, .. } => {
            let r = patching::cm_family_search(&primes, bound.expect("required")).map_err(domain("splitting"))?;
            Ok(to_value(&r))
        }
        Command::Verify { schema: true, .. } => Ok(schema("verify")),
        Command::Verify { family, rep, .. } => {
            let doc: FamilyJson = serde_json::from_str(&read_path(&family.expect("required"))?).map_err(malformed)?;
            let fam = doc.build().map_err(domain("patching"))?;
            let mut v = json!({"family": patching::check_family(&fam)});
            if let Some(path) = rep {
                let rv: Value = serde_json::from_str(&read_path(&path)?).map_err(malformed)?;
                let rv = rv.get("rho").cloned().unwrap_or(rv);
                let rj: RepJson = parse_doc(rv)?;
                let r: GroupRep = rj.build(fam.group().clone()).map_err(domain("groups"))?;
                v["verified"] = json!(patching::verify_patch(&r, &fam));
            }
            Ok(v)
        }
    }
}

/// Entry point for the binary.
pub fn main_with_args() -> i32 {
    let out = run(std::env::args_os());
    print!("{}", out.stdout);
    eprint!("{}", out.stderr);
    out.code
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> Outcome {
        run(std::iter::once("gsp4").chain(args.iter().copied()))
    }

    #[test]
    fn examples() {
        let o = call(&["table", "--type", "IVa"]);
        assert_eq!(o.code, 0);
        let v: Value = serde_json::from_str(&o.stdout).unwrap();
        assert_eq!(v["N"], "N3");
        assert_eq!(v["dims"], json!([0, 0, 0, 0, 1]));
        let v: Value = serde_json::from_str(&call(&["weights", "--mu1", "0", "--mu2", "0", "--w", "0"]).stdout).unwrap();
        assert_eq!(v["ht_weights"], json!([0, 1, 2, 3]));
        let v: Value = serde_json::from_str(&call(&["split", "--d", "-1", "--p", "5"]).stdout).unwrap();
        assert_eq!(v["splitting"], "split");
    }

    #[test]
    fn exit_codes() {
        assert_eq!(call(&["frobnicate"]).code, 2);
        assert_eq!(call(&["split", "--d", "4", "--p", "5"]).code, 1);
        assert_eq!(call(&["classify-nilpotent", "--json", "[[1"]).code, 2);
        let o = call(&["weights", "--mu1", "0", "--mu2", "1", "--w", "1"]);
        assert_eq!(o.code, 1);
        let e: Value = serde_json::from_str(&o.stderr).unwrap();
        assert_eq!(e["error"], "weights");
    }

    #[test]
    fn every_verb_has_schema() {
        for v in VERBS {
            let o = call(&[v, "--schema"]);
            assert_eq!(o.code, 0, "{}: {}", v, o.stderr);
            assert!(serde_json::from_str::<Value>(&o.stdout).is_ok());
        }
    }
}
