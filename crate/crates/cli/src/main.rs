//! `nilcoh`: command-line front end to the nilcoh-core library.
//!
//! Payload goes to stdout, diagnostics to stderr. Exit status is 0 on
//! success, 2 when an input precondition or admissibility gate fails, and 1
//! on internal errors.

use std::io::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use nilcoh_core::alcove::{
    admissibility, closed_alcove_weights, in_alcove, is_j_dominant, j_restricted, open_alcove_weights, weak_linkage,
    weak_linkage_quantum, Context, Mode,
};
use nilcoh_core::character::GradedCharacter;
use nilcoh_core::koszul::GradedComplex;
use nilcoh_core::kostant::{frobenius_kernel_character, kostant_decomposition, parabolic_character, t1_invariants};
use nilcoh_core::linalg::{Field, Fp, Rationals};
use nilcoh_core::restricted::{ext_certificate, square_of_weight_class, Resolution, RestrictedAlgebra};
use nilcoh_core::ring::{ring_table, RingTable};
use nilcoh_core::verify::{
    consistency_suite, search_dot_collisions, search_dot_collisions_quantum, search_levi_weights, search_sum_dot,
    sharpness_row, Certificate, SigmaDomain,
};
use nilcoh_core::weyl::{format_polynomial, DEFAULT_ORDER_BOUND};
use nilcoh_core::{Error, Result, RootSystem, SimpleSet, Weight, WeylGroup};

#[derive(Parser, Debug)]
#[command(name = "nilcoh", version, about = "Cohomology of Frobenius kernels of unipotent and parabolic groups")]
struct Cli {
    #[command(flatten)]
    config: RunConfig,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone, serde::Serialize)]
struct RunConfig {
    /// Cartan type with rank, e.g. A2, B3, G2.
    #[arg(long = "type", global = true)]
    cartan_type: Option<String>,
    /// Prime characteristic.
    #[arg(long, global = true)]
    p: Option<i64>,
    /// Order of the root of unity.
    #[arg(long, global = true)]
    l: Option<i64>,
    /// Defaults to quantum when --l is given, modular when --p is given.
    #[arg(long, global = true, value_enum)]
    mode: Option<ModeArg>,
    /// Simple roots of the Levi factor, 1-based and comma separated; "" is empty.
    #[arg(long = "J", global = true)]
    j: Option<String>,
    /// Weight in fundamental-weight coordinates, comma separated.
    #[arg(long, global = true)]
    lambda: Option<String>,
    #[arg(long, global = true)]
    max_degree: Option<usize>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Worker threads; defaults to the number of cores.
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Weyl group cache directory; overrides NILCOH_CACHE.
    #[arg(long, global = true)]
    cache_dir: Option<PathBuf>,
    #[arg(long, global = true)]
    weyl_bound: Option<u128>,
    /// Largest dim u_J for the Koszul oracle.
    #[arg(long, global = true)]
    max_generators: Option<usize>,
    /// Largest dim u(u_J) for the restricted resolution.
    #[arg(long, global = true)]
    algebra_budget: Option<usize>,
    /// Largest number of witness tuples for a search.
    #[arg(long, global = true)]
    search_budget: Option<u128>,
    /// Compute below the proven bounds; results are labelled formal.
    #[arg(long, global = true)]
    unsafe_below_bound: bool,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "lowercase")]
enum ModeArg {
    Modular,
    Quantum,
    Classical,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "lowercase")]
enum Format {
    Json,
    Csv,
    Tex,
    Text,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum CharacterKind {
    Bigraded,
    Parabolic,
    T1,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Cartan data, positive roots in canonical order, derived constants.
    Rootsys,
    /// Weyl group elements, or minimal coset representatives with --J.
    Weyl,
    /// Alcove weights, membership of --lambda, admissibility profile.
    Alcove,
    /// Weak linkage of --lambda to zero.
    Linkage,
    /// Kostant decomposition of H^*(u_J, L(lambda)).
    Kostant,
    /// Characters of Frobenius-kernel cohomology.
    Character {
        #[arg(long, value_enum, default_value_t = CharacterKind::Bigraded)]
        kind: CharacterKind,
    },
    /// Multiplication table of the nil classes.
    RingTable,
    /// Admissibility report and quantum product table at --l.
    Quantum,
    /// Brute-force Chevalley-Eilenberg cohomology of u_J.
    OracleKoszul {
        /// Include the sparse differential of every nonzero block.
        #[arg(long)]
        dump: bool,
    },
    /// Ext over the restricted enveloping algebra by a minimal resolution.
    Ext {
        /// Square the degree-2 class of weight s2 s1 . 0 (or --square-weight).
        #[arg(long)]
        check_square: bool,
        #[arg(long)]
        square_weight: Option<String>,
    },
    /// Exhaustive lemma searches and consistency checks.
    Verify {
        #[command(subcommand)]
        which: VerifyCommand,
    },
}

#[derive(Subcommand, Debug)]
enum VerifyCommand {
    /// w1.0 + w2.0 = w3.0 + p sigma.
    SumDot,
    /// mu1 + mu2 = mu3 + p sigma over Levi characters.
    Levi,
    /// w1.lambda = w2.lambda + m sigma.
    Collisions {
        #[arg(long, default_value = "ZPhi")]
        domain: String,
    },
    /// Cross-module consistency suite.
    Suite,
    /// Sum-dot sharpness row for the type.
    Sharpness,
}

/// Everything a command produces; the renderer picks the part the format needs.
struct Output {
    json: Value,
    table: Option<(Vec<String>, Vec<Vec<String>>)>,
    text: Option<String>,
}

impl Output {
    fn new(json: Value) -> Self {
        Output {
            json,
            table: None,
            text: None,
        }
    }

    fn table(mut self, header: &[&str], rows: Vec<Vec<String>>) -> Self {
        self.table = Some((header.iter().map(|s| s.to_string()).collect(), rows));
        self
    }

    fn text(mut self, t: String) -> Self {
        self.text = Some(t);
        self
    }
}

struct Ctx {
    cfg: RunConfig,
    rs: Option<RootSystem>,
}

impl Ctx {
    fn rs(&self) -> Result<&RootSystem> {
        self.rs
            .as_ref()
            .ok_or_else(|| Error::Precondition("--type is required".into()))
    }

    fn group(&self) -> Result<WeylGroup> {
        let dir = self.cfg.cache_dir.clone().unwrap_or_else(WeylGroup::cache_dir);
        WeylGroup::cached(self.rs()?, &dir, self.cfg.weyl_bound.unwrap_or(DEFAULT_ORDER_BOUND))
    }

    fn mode(&self) -> Result<Mode> {
        let c = &self.cfg;
        let mode = c.mode.unwrap_or(if c.l.is_some() {
            ModeArg::Quantum
        } else if c.p.is_some() {
            ModeArg::Modular
        } else {
            ModeArg::Classical
        });
        Ok(match mode {
            ModeArg::Modular => Mode::Modular(c.p.ok_or_else(|| Error::Precondition("modular mode needs --p".into()))?),
            ModeArg::Quantum => Mode::Quantum(
                c.l.or(c.p)
                    .ok_or_else(|| Error::Precondition("quantum mode needs --l".into()))?,
            ),
            ModeArg::Classical => Mode::Classical,
        })
    }

    fn modulus(&self) -> Result<i64> {
        self.mode()?
            .modulus()
            .ok_or_else(|| Error::Precondition("this command needs --p or --l".into()))
    }

    fn prime(&self) -> Result<i64> {
        self.cfg
            .p
            .ok_or_else(|| Error::Precondition("this command needs --p".into()))
    }

    fn j(&self) -> Result<SimpleSet> {
        SimpleSet::parse(self.cfg.j.as_deref().unwrap_or(""), self.rs()?.rank())
    }

    fn lambda(&self) -> Result<Weight> {
        let rank = self.rs()?.rank();
        match &self.cfg.lambda {
            Some(s) => Weight::parse(s, rank),
            None => Ok(Weight::zero(rank)),
        }
    }

    fn lambda_given(&self) -> Result<Option<Weight>> {
        self.cfg.lambda.as_ref().map(|s| Weight::parse(s, self.rs()?.rank())).transpose()
    }
}

fn graded_json(c: &GradedCharacter) -> Value {
    json!({
        "dims": c.poincare(),
        "poincare": c.poincare_string(),
        "degrees": c.degrees.iter().enumerate().map(|(n, ch)| json!({
            "degree": n,
            "dim": ch.dim(),
            "character": ch,
        })).collect::<Vec<_>>(),
    })
}

fn graded_rows(c: &GradedCharacter) -> Vec<Vec<String>> {
    let mut rows = Vec::new();
    for (n, ch) in c.degrees.iter().enumerate() {
        for (mu, m) in ch.iter() {
            rows.push(vec![n.to_string(), mu.to_string(), m.to_string()]);
        }
    }
    rows
}

fn cmd_rootsys(ctx: &Ctx) -> Result<Output> {
    let rs = ctx.rs()?;
    let doc = rs.to_document();
    let rows = rs
        .positive_roots()
        .iter()
        .enumerate()
        .map(|(k, r)| {
            vec![
                (k + 1).to_string(),
                format!("{:?}", r.coords),
                r.weight.to_string(),
                r.norm.to_string(),
                r.height.to_string(),
            ]
        })
        .collect();
    let text = format!(
        "type {}\nrank {}\n|Phi+| {}\ncoxeter number {}\nrho {}\ncartan hash {}\n",
        rs.cartan_type(),
        rs.rank(),
        rs.num_positive(),
        rs.coxeter_number(),
        rs.rho(),
        rs.data_hash()
    );
    Ok(Output::new(serde_json::to_value(doc)?)
        .table(&["index", "root", "weight", "norm", "height"], rows)
        .text(text))
}

fn cmd_weyl(ctx: &Ctx) -> Result<Output> {
    let rs = ctx.rs()?;
    let g = ctx.group()?;
    let j = ctx.j()?;
    let reps = g.min_coset_reps(j).reps;
    let zero = Weight::zero(rs.rank());
    let mut rows = Vec::new();
    let mut elems = Vec::new();
    for &k in &reps {
        let e = g.element(k);
        let inv: Vec<Vec<i64>> = e.inversion_indices().iter().map(|&i| rs.root(i).coords.clone()).collect();
        let dot = g.dot(k, &zero);
        rows.push(vec![e.label(), e.length().to_string(), format!("{inv:?}"), dot.to_string()]);
        elems.push(json!({
            "label": e.label(),
            "word": e.word.iter().map(|i| i + 1).collect::<Vec<_>>(),
            "length": e.length(),
            "inversion_set": inv,
            "dot_zero": dot,
        }));
    }
    let poly = g.length_polynomial();
    let text = format!(
        "|W| = {}, length polynomial {}\n|^J W| = {} for J = {j}\n",
        g.order(),
        format_polynomial(&poly),
        reps.len()
    );
    Ok(Output::new(json!({
        "order": g.order(),
        "length_polynomial": poly,
        "J": j,
        "elements": elems,
    }))
    .table(&["w", "length", "inversion_set", "dot_zero"], rows)
    .text(text))
}

fn cmd_alcove(ctx: &Ctx) -> Result<Output> {
    let rs = ctx.rs()?;
    let m = ctx.modulus()?;
    let j = ctx.j()?;
    let closed = closed_alcove_weights(rs, m);
    let open = open_alcove_weights(rs, m);
    let mut out = json!({
        "modulus": m,
        "closed_alcove": closed,
        "open_alcove": open,
    });
    if let Some(lam) = ctx.lambda_given()? {
        out["lambda"] = json!({
            "weight": lam,
            "dominant": lam.is_dominant(),
            "in_open_alcove": in_alcove(rs, &lam, m, false),
            "in_closed_alcove": in_alcove(rs, &lam, m, true),
            "j_dominant": is_j_dominant(&lam, j),
            "j_restricted": j_restricted(&lam, j, m),
        });
    }
    if let Mode::Quantum(l) = ctx.mode()? {
        let gates: Vec<Value> = Context::ALL
            .iter()
            .map(|&c| admissibility(rs, l, c).map(|a| serde_json::to_value(a).expect("serialisable")))
            .collect::<Result<_>>()?;
        out["admissibility"] = Value::Array(gates);
    }
    let rows = closed
        .iter()
        .map(|w| vec![w.to_string(), open.contains(w).to_string()])
        .collect();
    Ok(Output::new(out).table(&["weight", "open"], rows))
}

fn cmd_linkage(ctx: &Ctx) -> Result<Output> {
    let g = ctx.group()?;
    let lam = ctx.lambda()?;
    let datum = match ctx.mode()? {
        Mode::Modular(p) => weak_linkage(&g, &lam, p)?,
        Mode::Quantum(l) => weak_linkage_quantum(&g, &lam, l)?,
        Mode::Classical => return Err(Error::Precondition("linkage needs --p or --l".into())),
    };
    let rows = datum
        .iter()
        .map(|d| vec![d.w.label(), d.w.length().to_string(), d.sigma.to_string()])
        .collect();
    let text = match &datum {
        Some(d) => format!("{lam} = {} . 0 + {} * {}\n", d.w.label(), d.modulus, d.sigma),
        None => format!("{lam} is not weakly linked to 0\n"),
    };
    Ok(Output::new(json!({ "lambda": lam, "linked": datum.is_some(), "datum": datum }))
        .table(&["w", "length", "sigma"], rows)
        .text(text))
}

fn cmd_kostant(ctx: &Ctx) -> Result<Output> {
    let g = ctx.group()?;
    let rs = g.root_system();
    let kd = kostant_decomposition(&g, &ctx.lambda()?, ctx.j()?, ctx.mode()?)?;
    let ch = kd.character(rs)?;
    let rows = kd
        .entries
        .iter()
        .map(|e| vec![e.w.label(), e.degree.to_string(), e.highest_weight.to_string()])
        .collect();
    let entries: Vec<Value> = kd
        .entries
        .iter()
        .map(|e| json!({"w": e.w.label(), "degree": e.degree, "highest_weight": e.highest_weight}))
        .collect();
    let mut out = graded_json(&ch);
    out["entries"] = Value::Array(entries);
    out["lambda"] = json!(kd.lambda);
    out["J"] = json!(kd.j);
    out["mode"] = json!(kd.mode);
    Ok(Output::new(out)
        .table(&["w", "degree", "highest_weight"], rows)
        .text(format!("Poincare polynomial {}\n", ch.poincare_string())))
}

fn cmd_character(ctx: &Ctx, kind: CharacterKind) -> Result<Output> {
    let g = ctx.group()?;
    let lam = ctx.lambda()?;
    let j = ctx.j()?;
    let max_degree = ctx.cfg.max_degree.unwrap_or(4);
    match kind {
        CharacterKind::Bigraded => {
            let bc = frobenius_kernel_character(&g, &lam, j, ctx.mode()?, max_degree)?;
            let total = bc.total();
            let mut rows = Vec::new();
            for (n, slabs) in bc.degrees.iter().enumerate() {
                for s in slabs {
                    for (mu, m) in s.character.iter() {
                        rows.push(vec![n.to_string(), s.i.to_string(), s.j.to_string(), mu.to_string(), m.to_string()]);
                    }
                }
            }
            let mut out = graded_json(&total);
            out["bigraded"] = serde_json::to_value(&bc)?;
            Ok(Output::new(out)
                .table(&["degree", "i", "j", "weight", "multiplicity"], rows)
                .text(format!("Poincare polynomial {}\n", total.poincare_string())))
        }
        CharacterKind::Parabolic => {
            let c = parabolic_character(&g, &lam, j, ctx.mode()?, max_degree)?;
            Ok(Output::new(graded_json(&c))
                .table(&["degree", "weight", "multiplicity"], graded_rows(&c))
                .text(format!("Poincare polynomial {}\n", c.poincare_string())))
        }
        CharacterKind::T1 => {
            let c = t1_invariants(&g, &lam, ctx.prime()?)?;
            Ok(Output::new(graded_json(&c)).table(&["degree", "weight", "multiplicity"], graded_rows(&c)))
        }
    }
}

fn ring_output(t: RingTable, label: Option<&str>) -> Result<Output> {
    let rows = t
        .rows
        .iter()
        .map(|r| {
            vec![
                r.w.clone(),
                r.w_prime.clone(),
                r.result.clone(),
                r.sign.to_string(),
                r.zeta_exponent.to_string(),
            ]
        })
        .collect();
    let csv = t.to_csv();
    let mut out = serde_json::to_value(&t)?;
    if let Some(l) = label {
        out["label"] = json!(l);
    }
    Ok(Output::new(out)
        .table(&["w", "w_prime", "result", "sign", "zeta_exponent"], rows)
        .text(csv))
}

fn cmd_ring_table(ctx: &Ctx) -> Result<Output> {
    let g = ctx.group()?;
    let t = ring_table(&g, ctx.j()?, ctx.mode()?, ctx.cfg.unsafe_below_bound)?;
    ring_output(t, None)
}

fn cmd_quantum(ctx: &Ctx) -> Result<Output> {
    let g = ctx.group()?;
    let rs = g.root_system();
    let l = ctx.cfg.l.ok_or_else(|| Error::Precondition("quantum needs --l".into()))?;
    let gates: Vec<_> = Context::ALL
        .iter()
        .map(|&c| admissibility(rs, l, c))
        .collect::<Result<_>>()?;
    let ring_pass = gates.iter().any(|a| a.context == Context::Ring && a.pass);
    let rows = gates
        .iter()
        .map(|a| vec![a.context.name().to_string(), a.pass.to_string(), a.failed.join(" ")])
        .collect();
    let mut out = json!({ "l": l, "admissibility": gates });
    if ring_pass || ctx.cfg.unsafe_below_bound {
        let t = ring_table(&g, SimpleSet::EMPTY, Mode::Quantum(l), ctx.cfg.unsafe_below_bound)?;
        out["ring_table"] = serde_json::to_value(&t)?;
        if !ring_pass {
            out["label"] = json!("formal model, ring gate failed");
        }
    }
    Ok(Output::new(out).table(&["context", "pass", "failed"], rows))
}

fn koszul_output<F: Field>(ctx: &Ctx, field: F, dump: bool) -> Result<Output> {
    let rs = ctx.rs()?;
    let j = ctx.j()?;
    let budget = ctx.cfg.max_generators.unwrap_or(nilcoh_core::koszul::DEFAULT_MAX_GENERATORS);
    let cx = GradedComplex::new(rs, j, field.clone(), budget)?;
    let h = cx.cohomology(rs);
    let mut out = graded_json(&h);
    out["field"] = json!(field.name());
    out["J"] = json!(j);
    if dump {
        let blocks: Vec<Value> = cx
            .block_keys()
            .filter(|(n, w)| !cx.block(n + 1, w).is_empty())
            .map(|(n, w)| {
                json!({
                    "degree": n,
                    "weight_root_coords": w,
                    "rows": cx.block(n + 1, w).len(),
                    "cols": cx.block(*n, w).len(),
                    "triples": cx.dump_triples(*n, w),
                })
            })
            .collect();
        out["blocks"] = Value::Array(blocks);
    }
    Ok(Output::new(out)
        .table(&["degree", "weight", "dim"], graded_rows(&h))
        .text(format!("H^*(u_J) over {}: {}\n", field.name(), h.poincare_string())))
}

fn cmd_oracle(ctx: &Ctx, dump: bool) -> Result<Output> {
    match ctx.cfg.p {
        Some(p) => koszul_output(ctx, Fp::new(p)?, dump),
        None => koszul_output(ctx, Rationals, dump),
    }
}

fn cmd_ext(ctx: &Ctx, check_square: bool, square_weight: Option<&str>) -> Result<Output> {
    let g = ctx.group()?;
    let rs = g.root_system();
    let p = ctx.prime()?;
    let budget = ctx
        .cfg
        .algebra_budget
        .unwrap_or(nilcoh_core::restricted::DEFAULT_ALGEBRA_BUDGET);
    let alg = RestrictedAlgebra::new(rs, ctx.j()?, p, budget)?;
    let max_degree = ctx.cfg.max_degree.unwrap_or(4);
    let res = Resolution::new(&alg, max_degree)?;
    let example = if check_square || square_weight.is_some() {
        let mu = match square_weight {
            Some(s) => Weight::parse(s, rs.rank())?,
            None if rs.rank() >= 2 => g.dot(g.from_word(&[1, 0]), &Weight::zero(rs.rank())),
            None => return Err(Error::Precondition("--check-square needs rank >= 2 or --square-weight".into())),
        };
        Some(square_of_weight_class(&res, rs, 2, &mu)?)
    } else {
        None
    };
    let cert = ext_certificate(&res, rs, p, example);
    let ch = res.character(rs);
    let mut text = format!("dim u(u_J) = {}\nExt dims {:?}\n", alg.dim(), cert.dims);
    if let Some(e) = &cert.example_product {
        text.push_str(&format!("square of the H^{} class of weight {}: {}\n", e.degree, e.weight, if e.nonzero { "nonzero" } else { "zero" }));
    }
    Ok(Output::new(serde_json::to_value(&cert)?)
        .table(&["degree", "weight", "dim"], graded_rows(&ch))
        .text(text))
}

fn certificate_output(c: Certificate) -> Result<Output> {
    let rows = c
        .violations
        .iter()
        .map(|v| {
            let ws: Vec<String> = v
                .witnesses
                .iter()
                .map(|w| match &w.w {
                    Some(l) => format!("{l}:{}", w.weight),
                    None => w.weight.to_string(),
                })
                .collect();
            vec![ws.join(" "), v.sigma.to_string(), format!("{:?}", v.sigma_root)]
        })
        .collect();
    let text = format!(
        "{} on {} modulo {} ({}): {} violations, exhaustive, {} ms\n",
        c.lemma,
        c.cartan_type,
        c.modulus,
        c.domain,
        c.violations.len(),
        c.elapsed_ms
    );
    Ok(Output::new(serde_json::to_value(&c)?)
        .table(&["witnesses", "sigma", "sigma_root"], rows)
        .text(text))
}

fn cmd_verify(ctx: &Ctx, which: &VerifyCommand) -> Result<Output> {
    let g = ctx.group()?;
    let rs = g.root_system();
    let budget = ctx.cfg.search_budget.unwrap_or(nilcoh_core::verify::DEFAULT_SEARCH_BUDGET);
    let start = Instant::now();
    match which {
        VerifyCommand::SumDot => {
            let p = ctx.prime()?;
            let v = search_sum_dot(&g, p, budget)?;
            certificate_output(Certificate::new(rs, "sum-dot", p, "ZPhi", v, start))
        }
        VerifyCommand::Levi => {
            let p = ctx.prime()?;
            let v = search_levi_weights(&g, ctx.j()?, p, budget)?;
            certificate_output(Certificate::new(rs, "levi-weights", p, "ZPhi", v, start))
        }
        VerifyCommand::Collisions { domain } => {
            let domain = SigmaDomain::from_str(domain)?;
            let lam = ctx.lambda()?;
            let (m, v, lemma) = match ctx.mode()? {
                Mode::Modular(p) => (p, search_dot_collisions(&g, &lam, p, domain)?, "dot-collisions"),
                Mode::Quantum(l) => (l, search_dot_collisions_quantum(&g, &lam, l, domain)?, "dot-collisions-quantum"),
                Mode::Classical => return Err(Error::Precondition("collisions need --p or --l".into())),
            };
            certificate_output(Certificate::new(rs, lemma, m, &domain.to_string(), v, start))
        }
        VerifyCommand::Suite => {
            let r = consistency_suite(&g, ctx.prime()?)?;
            let rows = r
                .checks
                .iter()
                .map(|c| vec![c.name.clone(), format!("{:?}", c.status).to_lowercase(), c.detail.clone()])
                .collect();
            let mut text = String::new();
            for c in &r.checks {
                text.push_str(&format!("{:<28} {:<8} {}\n", c.name, format!("{:?}", c.status).to_lowercase(), c.detail));
            }
            if let Some(e) = &r.example_product {
                text.push_str(&format!(
                    "square of the H^{} class of weight {}: {}\n",
                    e.degree,
                    e.weight,
                    if e.nonzero { "nonzero" } else { "zero" }
                ));
            }
            text.push_str(&format!("overall: {}\n", if r.pass { "pass" } else { "fail" }));
            let pass = r.pass;
            let out = Output::new(serde_json::to_value(&r)?)
                .table(&["check", "status", "detail"], rows)
                .text(text);
            if pass {
                Ok(out)
            } else {
                emit(ctx, &out)?;
                Err(Error::Internal("consistency suite failed".into()))
            }
        }
        VerifyCommand::Sharpness => {
            let row = sharpness_row(&g, budget)?;
            let rows = row
                .counts
                .iter()
                .map(|(p, c)| vec![p.to_string(), c.to_string()])
                .collect();
            Ok(Output::new(serde_json::to_value(&row)?).table(&["p", "violations"], rows))
        }
    }
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn tex_field(s: &str) -> String {
    let mut out = String::new();
    for c in s.chars() {
        match c {
            '_' | '&' | '%' | '#' | '$' | '{' | '}' => {
                out.push('\\');
                out.push(c);
            }
            _ => out.push(c),
        }
    }
    out
}

fn emit(ctx: &Ctx, out: &Output) -> Result<()> {
    let config = serde_json::to_value(&ctx.cfg)?;
    let rendered = match ctx.cfg.format {
        Format::Json => serde_json::to_string_pretty(&json!({ "config": config, "result": out.json }))?,
        Format::Csv | Format::Tex => {
            let (header, rows) = out.table.as_ref().ok_or_else(|| {
                Error::Precondition("this command has no tabular output; use json or text".into())
            })?;
            let mut s = String::new();
            if ctx.cfg.format == Format::Csv {
                s.push_str(&format!("# config: {config}\n"));
                s.push_str(&header.iter().map(|h| csv_field(h)).collect::<Vec<_>>().join(","));
                s.push('\n');
                for r in rows {
                    s.push_str(&r.iter().map(|x| csv_field(x)).collect::<Vec<_>>().join(","));
                    s.push('\n');
                }
            } else {
                s.push_str(&format!("% config: {config}\n"));
                s.push_str(&header.iter().map(|h| tex_field(h)).collect::<Vec<_>>().join(" & "));
                s.push_str(" \\\\\n\\hline\n");
                for r in rows {
                    s.push_str(&r.iter().map(|x| tex_field(x)).collect::<Vec<_>>().join(" & "));
                    s.push_str(" \\\\\n");
                }
            }
            s
        }
        Format::Text => {
            let mut s = format!("# config: {config}\n");
            match (&out.text, &out.table) {
                (Some(t), _) => s.push_str(t),
                (None, Some((header, rows))) => {
                    s.push_str(&header.join("\t"));
                    s.push('\n');
                    for r in rows {
                        s.push_str(&r.join("\t"));
                        s.push('\n');
                    }
                }
                (None, None) => s.push_str(&serde_json::to_string_pretty(&out.json)?),
            }
            s
        }
    };
    let mut stdout = std::io::stdout().lock();
    match writeln!(stdout, "{}", rendered.trim_end()) {
        Err(e) if e.kind() == std::io::ErrorKind::BrokenPipe => Ok(()),
        other => Ok(other?),
    }
}

fn run(cli: Cli) -> Result<()> {
    if let Some(n) = cli.config.threads {
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .map_err(|e| Error::Internal(e.to_string()))?;
    }
    let rs = cli.config.cartan_type.as_deref().map(RootSystem::parse).transpose()?;
    let ctx = Ctx { cfg: cli.config, rs };
    let out = match &cli.command {
        Command::Rootsys => cmd_rootsys(&ctx)?,
        Command::Weyl => cmd_weyl(&ctx)?,
        Command::Alcove => cmd_alcove(&ctx)?,
        Command::Linkage => cmd_linkage(&ctx)?,
        Command::Kostant => cmd_kostant(&ctx)?,
        Command::Character { kind } => cmd_character(&ctx, *kind)?,
        Command::RingTable => cmd_ring_table(&ctx)?,
        Command::Quantum => cmd_quantum(&ctx)?,
        Command::OracleKoszul { dump } => cmd_oracle(&ctx, *dump)?,
        Command::Ext {
            check_square,
            square_weight,
        } => cmd_ext(&ctx, *check_square, square_weight.as_deref())?,
        Command::Verify { which } => cmd_verify(&ctx, which)?,
    };
    emit(&ctx, &out)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("nilcoh: {e}");
            ExitCode::from(if e.is_precondition() { 2 } else { 1 })
        }
    }
}
