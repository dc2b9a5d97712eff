//! The `freeabel` command: argument parsing, dispatch and reports.
//!
//! Every command produces a [`Report`]; `--json` prints it as one JSON
//! object with sorted keys, otherwise as indented text. Exit status is 0
//! for a positive verdict, 1 for a negative one and 2 for usage, parse and
//! domain errors.

use std::collections::BTreeMap;
use std::time::Instant;

use clap::{Parser, Subcommand};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use freeabel::adelman::AdelMorphism;
use freeabel::evalfunctor::{eval_morphism, eval_object, oracle_compare, random_representation, Representation};
use freeabel::homgroups::hom_group;
use freeabel::provers::{self, Certificate, CertificateSummary, ProofReport};
use freeabel::{catalog, Error};

use crate::error::{CliError, CliResult};
use crate::parser::parse_file;
use crate::printer::{print_category, print_file};
use crate::repfile::{parse_representation, print_representation};
use crate::session::{spec_of, Session};

#[derive(Debug, Parser)]
#[command(name = "freeabel", version, about = "Exact computations in free abelian categories of quivers with relations")]
pub struct Cli {
    /// Category file, or `builtin:NAME` with NAME one of snake, five, five3, z2, d4.
    #[arg(long, global = true, default_value = "builtin:snake")]
    pub category: String,
    /// Print the report as JSON.
    #[arg(long, global = true)]
    pub json: bool,
    /// Seed for commands that draw random representations.
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    /// Include wall-clock timings (makes output nondeterministic).
    #[arg(long, global = true)]
    pub timings: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Decide whether two parallel morphisms are equal.
    CheckEqual { f: String, g: String },
    /// Kernel object and embedding of a morphism.
    Kernel { f: String },
    /// Cokernel object and projection of a morphism.
    Cokernel { f: String },
    /// Homology at the middle of two composable morphisms.
    Homology { f: String, g: String },
    /// Decide exactness at the middle of two composable morphisms.
    IsExact { f: String, g: String },
    IsMono { f: String },
    IsEpi { f: String },
    IsIso { f: String },
    /// Presentation of the group of morphisms between two objects.
    HomGroup { x: String, y: String },
    /// The connecting morphism `[beta]` built from `alpha, beta, gamma`.
    Connecting {
        #[arg(default_value = "alpha")]
        alpha: String,
        #[arg(default_value = "beta")]
        beta: String,
        #[arg(default_value = "gamma")]
        gamma: String,
    },
    /// Run a built-in proof.
    Prove {
        #[arg(value_parser = ["snake", "five", "uniqueness"])]
        lemma: String,
    },
    /// Exactness of the snake sequence with the connecting arrow scaled by s.
    Sweep {
        /// Inclusive range `a..b`.
        #[arg(long, allow_hyphen_values = true, default_value = "-3..3")]
        range: String,
    },
    /// Evaluate objects and morphisms at a representation.
    Eval {
        /// Representation file; without it a random one is drawn (needs --seed).
        #[arg(long)]
        rep: Option<String>,
        /// Morphisms to evaluate; defaults to the declared ones, or the arrows.
        morphisms: Vec<String>,
    },
    /// Print the category file in normal form.
    Print,
}

/// The outcome of one command.
#[derive(Clone, Debug)]
pub struct Report {
    pub command: String,
    pub inputs: BTreeMap<String, String>,
    pub verdict: bool,
    pub certificates: Vec<CertificateSummary>,
    pub invariant_factors: Option<Value>,
    pub results: Value,
    /// Human-readable lines.
    pub text: Vec<String>,
    /// Print `text` alone, without the verdict line.
    pub bare: bool,
}

impl Report {
    fn new(command: &str, inputs: &[(&str, &str)]) -> Self {
        Self {
            command: command.into(),
            inputs: inputs.iter().map(|(k, v)| (k.to_string(), v.to_string())).collect(),
            verdict: true,
            certificates: Vec::new(),
            invariant_factors: None,
            results: json!({}),
            text: Vec::new(),
            bare: false,
        }
    }

    fn result(&mut self, key: &str, v: impl Into<Value>) {
        self.results[key] = v.into();
    }

    fn line(&mut self, s: impl Into<String>) {
        self.text.push(s.into());
    }

    pub fn to_json(&self, timings: Option<f64>) -> Value {
        let mut v = json!({
            "command": self.command,
            "inputs": self.inputs,
            "verdict": if self.verdict { "pass" } else { "fail" },
            "certificates": self.certificates,
            "results": self.results,
            "timings": timings.map(|ms| json!({ "total_ms": ms })),
        });
        if let Some(inv) = &self.invariant_factors {
            v["invariant_factors"] = inv.clone();
        }
        v
    }
}

fn load(spec: &str) -> CliResult<(Session, Option<String>)> {
    if let Some(name) = spec.strip_prefix("builtin:") {
        let cat = match name {
            "snake" => catalog::snake(),
            "five" => catalog::five_lemma(),
            "five3" => catalog::five_lemma_three_relations(),
            "z2" => catalog::two_torsion_arrow(),
            "d4" => provers::d4(),
            other => return Err(CliError::Usage(format!("unknown builtin category `{other}`"))),
        };
        return Ok((Session::from_category(cat), None));
    }
    let text = std::fs::read_to_string(spec).map_err(|source| CliError::Io {
        path: spec.to_string(),
        source,
    })?;
    Ok((Session::parse(&text)?, Some(text)))
}

fn certify(report: &mut Report, s: &Session, certs: &[Certificate]) -> CliResult<()> {
    for c in certs {
        if !c.verify(&s.adel)? {
            report.verdict = false;
            report.line(format!("certificate failed to re-verify: {}", c.summary(&s.adel).kind));
        }
        report.certificates.push(c.summary(&s.adel));
    }
    Ok(())
}

fn parse_range(text: &str) -> CliResult<Vec<i64>> {
    let bad = || CliError::Usage(format!("bad range `{text}`; expected a..b"));
    let (a, b) = text.split_once("..").ok_or_else(bad)?;
    let (a, b): (i64, i64) = (a.trim().parse().map_err(|_| bad())?, b.trim().parse().map_err(|_| bad())?);
    if a > b {
        return Err(bad());
    }
    Ok((a..=b).collect())
}

fn proof(report: &mut Report, p: &ProofReport) -> CliResult<()> {
    let replayed = p.replay()?;
    report.verdict = p.verdict() && replayed;
    let checks: Vec<Value> = p
        .checks
        .iter()
        .map(|c| json!({ "description": c.description, "verdict": c.verdict }))
        .collect();
    report.result("lemma", p.lemma.clone());
    report.result("checks", checks);
    report.result("replayed", replayed);
    report.line(format!("{}: {} checks", p.lemma, p.checks.len()));
    for c in &p.checks {
        report.line(format!("  [{}] {}", if c.verdict { "ok" } else { "FAIL" }, c.description));
        report.certificates.extend(c.certificates.iter().map(|x| x.summary(&p.adel)));
    }
    report.line(format!("certificates replayed: {replayed}"));
    Ok(())
}

fn eval_report(report: &mut Report, s: &Session, rep: &Representation, fs: &[(String, AdelMorphism)]) -> CliResult<()> {
    let cat = s.cat();
    let mut objects = serde_json::Map::new();
    for (name, x) in &s.objects {
        let g = eval_object(rep, cat, x)?.group.invariants();
        report.line(format!("F({name}) = {}", g.describe()));
        objects.insert(name.clone(), json!(g.describe()));
    }
    let mut maps = serde_json::Map::new();
    for (name, f) in fs {
        let h = eval_morphism(rep, cat, f)?;
        let checks = oracle_compare(rep, &s.adel, f)?;
        let ok = checks.iter().all(|c| c.ok);
        report.verdict &= ok;
        report.line(format!(
            "F({name}): {} -> {}, kernel {}, cokernel {}, image {}, oracle {}",
            h.source.invariants().describe(),
            h.target.invariants().describe(),
            h.kernel().invariants().describe(),
            h.cokernel().invariants().describe(),
            h.image().invariants().describe(),
            if ok { "agrees" } else { "DISAGREES" }
        ));
        maps.insert(
            name.clone(),
            json!({
                "source": h.source.invariants().describe(),
                "target": h.target.invariants().describe(),
                "kernel": h.kernel().invariants().describe(),
                "cokernel": h.cokernel().invariants().describe(),
                "image": h.image().invariants().describe(),
                "oracle": checks.iter().map(|c| (c.name.clone(), c.ok)).collect::<BTreeMap<_, _>>(),
            }),
        );
    }
    report.result("objects", objects);
    report.result("morphisms", maps);
    report.result("representation", print_representation(cat, rep));
    Ok(())
}

fn execute(cli: &Cli) -> CliResult<Report> {
    let (s, source) = load(&cli.category)?;
    let adel = &s.adel;
    let cat = s.cat();
    let category = cli.category.as_str();
    let report = match &cli.command {
        Command::CheckEqual { f, g } => {
            let mut r = Report::new("check-equal", &[("category", category), ("f", f), ("g", g)]);
            let (x, y) = (s.morphism(f)?, s.morphism(g)?);
            let diff = adel.sub(&x, &y)?;
            match adel.is_zero_morphism(&diff)? {
                Some(witness) => {
                    r.line("equal");
                    certify(&mut r, &s, &[Certificate::Zero { morphism: diff, witness }])?;
                }
                None => {
                    r.verdict = false;
                    r.line("not equal");
                }
            }
            r.result("equal", r.verdict);
            r
        }
        Command::Kernel { f } | Command::Cokernel { f } => {
            let kernel = matches!(cli.command, Command::Kernel { .. });
            let name = if kernel { "kernel" } else { "cokernel" };
            let mut r = Report::new(name, &[("category", category), ("f", f)]);
            let phi = s.morphism(f)?;
            let (object, map, composite, witness) = if kernel {
                let k = adel.kernel(&phi)?;
                let c = adel.compose(&k.embedding, &phi)?;
                (k.object, k.embedding, c, k.zero_witness)
            } else {
                let k = adel.cokernel(&phi)?;
                let c = adel.compose(&phi, &k.proj)?;
                (k.object, k.proj, c, k.zero_witness)
            };
            let is_zero = adel.is_zero_object(&object)?;
            r.line(format!("object: {}", object.format(cat)));
            r.line(format!("map: {}", adel.format_morphism(&map)));
            r.line(format!("zero object: {is_zero}"));
            r.result("object", object.format(cat));
            r.result("map", adel.format_morphism(&map));
            r.result("zero_object", is_zero);
            certify(
                &mut r,
                &s,
                &[
                    Certificate::WellDefined { morphism: map },
                    Certificate::Zero {
                        morphism: composite,
                        witness,
                    },
                ],
            )?;
            r
        }
        Command::Homology { f, g } => {
            let mut r = Report::new("homology", &[("category", category), ("f", f), ("g", g)]);
            let h = adel.homology(&s.morphism(f)?, &s.morphism(g)?)?;
            let is_zero = adel.is_zero_object(&h.object)?;
            r.line(format!("object: {}", h.object.format(cat)));
            r.line(format!("zero object: {is_zero}"));
            r.result("object", h.object.format(cat));
            r.result("embedding", adel.format_morphism(&h.embedding));
            r.result("zero_object", is_zero);
            certify(&mut r, &s, &[Certificate::WellDefined { morphism: h.embedding }])?;
            r
        }
        Command::IsExact { f, g } => {
            let mut r = Report::new("is-exact", &[("category", category), ("f", f), ("g", g)]);
            let (phi, psi) = (s.morphism(f)?, s.morphism(g)?);
            match adel.exactness(&phi, &psi) {
                Err(Error::NonZeroComposite(msg)) => {
                    r.verdict = false;
                    r.line(format!("not a complex: {msg}"));
                    r.result("complex", false);
                }
                Err(e) => return Err(e.into()),
                Ok(ex) => {
                    r.verdict = ex.is_exact();
                    r.result("complex", true);
                    r.line(if r.verdict { "exact" } else { "not exact" });
                    let mut certs = vec![Certificate::Zero {
                        morphism: adel.compose(&phi, &psi)?,
                        witness: ex.composite_witness,
                    }];
                    if let Some(witness) = ex.homology_witness {
                        let emb = adel.kernel(&psi)?.embedding;
                        let proj = adel.cokernel(&phi)?.proj;
                        certs.push(Certificate::Zero {
                            morphism: adel.compose(&emb, &proj)?,
                            witness,
                        });
                    }
                    certify(&mut r, &s, &certs)?;
                }
            }
            r.result("exact", r.verdict);
            r
        }
        Command::IsMono { f } | Command::IsEpi { f } | Command::IsIso { f } => {
            let (name, mono, epi) = match cli.command {
                Command::IsMono { .. } => ("is-mono", true, false),
                Command::IsEpi { .. } => ("is-epi", false, true),
                _ => ("is-iso", true, true),
            };
            let mut r = Report::new(name, &[("category", category), ("f", f)]);
            let phi = s.morphism(f)?;
            let k = adel.kernel(&phi)?.object;
            let c = adel.cokernel(&phi)?.object;
            let kw = if mono { adel.is_zero_morphism(&adel.identity(&k))? } else { None };
            let cw = if epi { adel.is_zero_morphism(&adel.identity(&c))? } else { None };
            r.verdict = (!mono || kw.is_some()) && (!epi || cw.is_some());
            let certs: Vec<Certificate> = match (kw, cw) {
                (Some(kernel_witness), Some(cokernel_witness)) => vec![Certificate::Iso {
                    morphism: phi,
                    kernel_witness,
                    cokernel_witness,
                }],
                (Some(witness), None) if r.verdict => vec![Certificate::Zero {
                    morphism: adel.identity(&k),
                    witness,
                }],
                (None, Some(witness)) if r.verdict => vec![Certificate::Zero {
                    morphism: adel.identity(&c),
                    witness,
                }],
                _ => Vec::new(),
            };
            certify(&mut r, &s, &certs)?;
            r.line(format!("{name}: {}", r.verdict));
            r.result(&name[3..], r.verdict);
            r
        }
        Command::HomGroup { x, y } => {
            let mut r = Report::new("hom-group", &[("category", category), ("x", x), ("y", y)]);
            let (a, b) = (s.object(x)?, s.object(y)?);
            let h = hom_group(adel, &a, &b)?;
            let inv = h.invariants();
            r.line(format!("Hom = {}", inv.describe()));
            let gens: Vec<String> = h.generators.iter().map(|g| g.datum().format(cat)).collect();
            for g in &gens {
                r.line(format!("  generator {g}"));
            }
            r.invariant_factors = Some(serde_json::to_value(&inv).expect("invariants serialize"));
            r.result("group", inv.describe());
            r.result("generators", gens);
            certify(
                &mut r,
                &s,
                &[Certificate::HomGroup {
                    source: a,
                    target: b,
                    invariants: inv,
                }],
            )?;
            r
        }
        Command::Connecting { alpha, beta, gamma } => {
            let mut r = Report::new(
                "connecting",
                &[("category", category), ("alpha", alpha), ("beta", beta), ("gamma", gamma)],
            );
            let f = adel.connecting_homomorphism(&s.matrix(alpha)?, &s.matrix(beta)?, &s.matrix(gamma)?)?;
            r.line(adel.format_morphism(&f));
            r.result("morphism", adel.format_morphism(&f));
            certify(&mut r, &s, &[Certificate::WellDefined { morphism: f }])?;
            r
        }
        Command::Prove { lemma } => {
            let mut r = Report::new("prove", &[("lemma", lemma)]);
            let p = match lemma.as_str() {
                "snake" => provers::prove_snake()?,
                "five" => provers::prove_refined_five()?,
                _ => provers::prove_connecting_uniqueness()?,
            };
            proof(&mut r, &p)?;
            r
        }
        Command::Sweep { range } => {
            let mut r = Report::new("sweep", &[("range", range)]);
            let values = parse_range(range)?;
            let points = provers::exactness_sweep(values.iter().copied())?;
            let p = provers::prove_sweep(values)?;
            r.verdict = p.verdict() && p.replay()?;
            let exact: BTreeMap<String, bool> = points.iter().map(|p| (p.s.to_string(), p.exact())).collect();
            for pt in &points {
                r.line(format!(
                    "s = {:>3}: exact {} (at K {}, at C {}), displayed witness {}",
                    pt.s,
                    pt.exact(),
                    pt.exact_at_k,
                    pt.exact_at_c,
                    pt.displayed_witness_valid
                ));
            }
            r.result("exact", serde_json::to_value(exact).expect("map serializes"));
            r.result("points", serde_json::to_value(&points).expect("points serialize"));
            r.certificates
                .extend(p.checks.iter().flat_map(|c| c.certificates.iter().map(|x| x.summary(&p.adel))));
            r
        }
        Command::Eval { rep, morphisms } => {
            let seed = cli.seed.map(|n| n.to_string());
            let mut inputs = vec![("category", category)];
            if let Some(path) = rep {
                inputs.push(("rep", path.as_str()));
            }
            if let Some(seed) = &seed {
                inputs.push(("seed", seed.as_str()));
            }
            let joined = morphisms.join(" ; ");
            inputs.push(("morphisms", &joined));
            let mut r = Report::new("eval", &inputs);
            let representation = match (rep, cli.seed) {
                (Some(path), _) => {
                    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
                        path: path.clone(),
                        source,
                    })?;
                    parse_representation(cat, &text)?
                }
                (None, Some(seed)) => random_representation(cat, &mut ChaCha8Rng::seed_from_u64(seed), 3),
                (None, None) => {
                    return Err(CliError::Usage("eval needs --rep FILE or --seed N".into()));
                }
            };
            let fs: Vec<(String, AdelMorphism)> = if !morphisms.is_empty() {
                morphisms
                    .iter()
                    .map(|m| Ok((m.clone(), s.morphism(m)?)))
                    .collect::<CliResult<_>>()?
            } else if !s.morphisms.is_empty() {
                s.morphisms.iter().map(|(k, v)| (k.clone(), v.clone())).collect()
            } else {
                cat.quiver()
                    .arrows()
                    .iter()
                    .map(|a| Ok((a.label.clone(), s.morphism(&a.label)?)))
                    .collect::<CliResult<_>>()?
            };
            eval_report(&mut r, &s, &representation, &fs)?;
            r
        }
        Command::Print => {
            let mut r = Report::new("print", &[("category", category)]);
            let text = match &source {
                Some(t) => print_file(&parse_file(t)?),
                None => print_category(&spec_of(cat)),
            };
            r.text.extend(text.lines().map(str::to_string));
            r.bare = true;
            r.result("text", text);
            r
        }
    };
    Ok(report)
}

/// Runs the command line `args` (including the program name) and returns
/// the exit code with the text for stdout and stderr.
pub fn run<I, T>(args: I) -> (i32, String, String)
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 { (0, text, String::new()) } else { (2, String::new(), text) };
        }
    };
    let start = Instant::now();
    let outcome = execute(&cli);
    let timings = cli.timings.then(|| start.elapsed().as_secs_f64() * 1e3);
    match outcome {
        Ok(report) => {
            let code = if report.verdict { 0 } else { 1 };
            let out = if cli.json {
                format!("{}\n", report.to_json(timings))
            } else {
                let mut out = report.text.join("\n");
                out.push('\n');
                if report.bare {
                    return (code, out, String::new());
                }
                out.push_str(if report.verdict { "verdict: pass\n" } else { "verdict: fail\n" });
                if let Some(ms) = timings {
                    out.push_str(&format!("time: {ms:.1} ms\n"));
                }
                out
            };
            (code, out, String::new())
        }
        Err(e) => {
            let out = if cli.json {
                format!("{}\n", json!({ "error": e.to_string(), "verdict": "error" }))
            } else {
                String::new()
            };
            (2, out, format!("error: {e}\n"))
        }
    }
}
