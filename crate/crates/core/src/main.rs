use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use smfkit::chars::{branch_gl_to_o, branch_gl_to_sp, exterior_power, plethysm_with, symmetric_power, BranchResult};
use smfkit::clifford::{clifford_check, saturated_torus};
use smfkit::dualpairs::{o_so_duality, skew_duality_glgl, so4_layers};
use smfkit::partitions::{modify_o, modify_sp};
use smfkit::smf::{
    smf_check_saturated_with, smf_check_torus_with, verify_catalog, Caps, GroupSpec, RepSpec, SMFReport, Status, TorusEmbedding, Verdict,
};
use smfkit::{Error, Exec, Partition, VirtualCharacter};

#[derive(Parser)]
#[command(name = "smfkit", version, about = "Exact exterior-algebra decompositions and skew multiplicity-free checks")]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Disable data parallelism.
    #[arg(long, global = true)]
    sequential: bool,
    #[command(subcommand)]
    verb: Verb,
}

#[derive(Subcommand)]
enum Verb {
    /// Decompose V, Λ^k V, S^k V or V ⊗ W into irreducibles.
    Decompose {
        #[arg(long)]
        group: String,
        #[arg(long)]
        rep: String,
        /// Exterior power degree.
        #[arg(long, conflicts_with_all = ["sym", "tensor"])]
        ext: Option<usize>,
        /// Symmetric power degree.
        #[arg(long, conflicts_with = "tensor")]
        sym: Option<usize>,
        /// Second factor of a tensor product.
        #[arg(long)]
        tensor: Option<String>,
    },
    /// Plethysm S_λ(V).
    Plethysm {
        #[arg(long)]
        group: String,
        #[arg(long)]
        rep: String,
        #[arg(long)]
        lambda: String,
    },
    /// Restriction of the GL_n module S_λ to O_n or Sp_n.
    Branch {
        #[arg(long, value_enum)]
        to: BranchTarget,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        lambda: String,
    },
    /// Modification rule for an over-long label.
    Modify {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        lambda: String,
        /// Use the symplectic rule instead of the orthogonal one.
        #[arg(long)]
        sp: bool,
    },
    /// Skew dualities on Λ(C^n ⊗ C^m).
    Duality {
        #[arg(long, value_enum)]
        pair: Pair,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 2)]
        m: usize,
        #[arg(long)]
        k: Option<u32>,
    },
    /// Skew multiplicity-free check.
    SmfCheck {
        #[arg(long)]
        group: String,
        #[arg(long)]
        rep: String,
        /// Torus embedding: exponents per summand, rows separated by `;`.
        #[arg(long)]
        torus: Option<String>,
    },
    /// Invariant subalgebra of Cl(V ⊕ V*) and its commutativity.
    CliffordCheck {
        #[arg(long)]
        group: String,
        #[arg(long)]
        rep: String,
        #[arg(long)]
        torus: Option<String>,
    },
    /// Verify the catalog of classification results.
    VerifyPaper {
        #[arg(long, default_value = "all")]
        filter: String,
        #[arg(long)]
        include_long: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum BranchTarget {
    O,
    Sp,
}

#[derive(Clone, Copy, ValueEnum)]
enum Pair {
    Glgl,
    Oso,
    So4,
}

enum Failure {
    Usage(Error),
    Mismatch(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Indeterminate { .. } => Failure::Mismatch(e.to_string()),
            e => Failure::Usage(e),
        }
    }
}

struct Output {
    text: String,
    json: Value,
    ok: bool,
}

fn character_output(chi: &VirtualCharacter) -> Output {
    Output { text: chi.render(), json: serde_json::to_value(chi).expect("character JSON"), ok: true }
}

fn branch_output(b: &BranchResult) -> Output {
    let group = match b.group {
        smfkit::chars::BranchGroup::O(n) => format!("O{n}"),
        smfkit::chars::BranchGroup::Sp(n) => format!("Sp{n}"),
    };
    let terms: Vec<Value> =
        b.terms.iter().rev().map(|(l, m)| json!({"lambda": l.lambda, "sharp": l.sharp, "m": m})).collect();
    Output { text: b.render(), json: json!({"group": group, "terms": terms}), ok: true }
}

fn group_and_rep(group: &str, rep: &str) -> Result<(GroupSpec, RepSpec), Error> {
    let g = GroupSpec::parse(group)?;
    let v = RepSpec::parse(&g.semisimple, rep)?;
    Ok((g, v))
}

fn single_summand(g: &GroupSpec, v: &RepSpec) -> Result<VirtualCharacter, Error> {
    let mut chi = VirtualCharacter::zero(&g.semisimple);
    for w in &v.summands {
        chi = &chi + &VirtualCharacter::irreducible(&g.semisimple, w)?;
    }
    Ok(chi)
}

fn fmt_tuple<T: ToString>(xs: &[T]) -> String {
    let parts: Vec<String> = xs.iter().map(|x| x.to_string()).collect();
    format!("({})", parts.join(","))
}

fn smf_output(g: &GroupSpec, v: &RepSpec, r: &SMFReport) -> Output {
    let system = &g.semisimple;
    let text = match &r.witness {
        None => "SMF".to_string(),
        Some(w) => {
            let mut t = format!("NOT SMF at {}: {}{}", fmt_tuple(&w.multidegree), w.mult, system.format_weight(&w.weight));
            if let Some(chi) = &w.torus {
                t.push_str(&format!(" (torus character {})", fmt_tuple(chi)));
            }
            t
        }
    };
    let witness = r.witness.as_ref().map(|w| {
        let mut o = json!({"multidegree": w.multidegree, "weight": w.weight, "mult": w.mult});
        if let Some(chi) = &w.torus {
            o["torus"] = json!(chi);
        }
        o
    });
    let verdict = match r.verdict {
        Verdict::Smf => "SMF",
        Verdict::NotSmf => "NotSMF",
    };
    Output {
        text,
        json: json!({"entry": format!("{g} on {}", v.render(system)), "verdict": verdict, "witness": witness}),
        ok: true,
    }
}

fn run(cli: &Cli) -> Result<Output, Failure> {
    let exec = if cli.sequential { Exec::Sequential } else { Exec::Parallel };
    let caps = Caps::from_env()?;
    Ok(match &cli.verb {
        Verb::Decompose { group, rep, ext, sym, tensor } => {
            let (g, v) = group_and_rep(group, rep)?;
            let chi = single_summand(&g, &v)?;
            let out = match (ext, sym, tensor) {
                (Some(k), _, _) => exterior_power(*k, &chi),
                (_, Some(k), _) => symmetric_power(*k, &chi),
                (_, _, Some(w)) => {
                    let other = single_summand(&g, &RepSpec::parse(&g.semisimple, w)?)?;
                    chi.tensor_with(&other, exec)?
                }
                _ => chi,
            };
            character_output(&out)
        }
        Verb::Plethysm { group, rep, lambda } => {
            let (g, v) = group_and_rep(group, rep)?;
            let chi = single_summand(&g, &v)?;
            character_output(&plethysm_with(&Partition::parse(lambda)?, &chi, exec))
        }
        Verb::Branch { to, n, lambda } => {
            let lambda = Partition::parse(lambda)?;
            branch_output(&match to {
                BranchTarget::O => branch_gl_to_o(&lambda, *n)?,
                BranchTarget::Sp => branch_gl_to_sp(&lambda, *n)?,
            })
        }
        Verb::Modify { n, lambda, sp } => {
            let lambda = Partition::parse(lambda)?;
            let r = if *sp { modify_sp(&lambda, *n) } else { modify_o(&lambda, *n) };
            Output { text: r.to_string(), json: serde_json::to_value(&r).expect("label JSON"), ok: true }
        }
        Verb::Duality { pair, n, m, k } => match pair {
            Pair::Glgl => {
                let ks: Vec<u32> = match k {
                    Some(k) => vec![*k],
                    None => (0..=(*n * *m) as u32).collect(),
                };
                let mut lines = Vec::new();
                let mut rows = Vec::new();
                for k in ks {
                    for (l, lt) in skew_duality_glgl(*n, *m, k) {
                        lines.push(format!("k={k}: S_{l}(C^{n}) ⊗ S_{lt}(C^{m})"));
                        rows.push(json!({"k": k, "lambda": l, "conjugate": lt}));
                    }
                }
                Output { text: lines.join("\n"), json: Value::Array(rows), ok: true }
            }
            Pair::Oso => {
                let terms = o_so_duality(*n, *m)?;
                let so = smfkit::dualpairs::so2m_system(*m)?;
                let lines: Vec<String> = terms
                    .iter()
                    .map(|t| {
                        let eps: Vec<String> =
                            t.eps2.iter().map(|&e| if e % 2 == 0 { (e / 2).to_string() } else { format!("{e}/2") }).collect();
                        format!("{}: O{n} {} ⊗ so{} {} (ε: {})", t.lambda, t.o_label, 2 * m, so.format_weight(&t.so_weight), eps.join(","))
                    })
                    .collect();
                Output { text: lines.join("\n"), json: serde_json::to_value(&terms).expect("duality JSON"), ok: true }
            }
            Pair::So4 => {
                let k = k.ok_or_else(|| Failure::Usage(Error::Precondition("--pair so4 needs --k".into())))?;
                let layers = so4_layers(*n, k)?;
                let lines: Vec<String> = layers
                    .iter()
                    .map(|l| format!("{}: O{n} {} ⊗ sl2 [{}] ⊗ S^{}", l.lambda, l.o_label, l.sl2_label, l.nu))
                    .collect();
                Output { text: lines.join("\n"), json: serde_json::to_value(&layers).expect("duality JSON"), ok: true }
            }
        },
        Verb::SmfCheck { group, rep, torus } => {
            let (g, v) = group_and_rep(group, rep)?;
            let r = match torus {
                Some(t) => smf_check_torus_with(&g, &v, &TorusEmbedding::parse(t)?, caps, exec)?,
                None => smf_check_saturated_with(&g, &v, caps, exec)?,
            };
            smf_output(&g, &v, &r)
        }
        Verb::CliffordCheck { group, rep, torus } => {
            let (g, v) = group_and_rep(group, rep)?;
            let t = match (torus, g.torus_count) {
                (Some(t), _) => Some(TorusEmbedding::parse(t)?),
                (None, 0) => None,
                (None, c) if c == v.len() => Some(saturated_torus(c)),
                (None, c) => {
                    return Err(Failure::Usage(Error::Precondition(format!(
                        "{c} torus factors for {} summands; pass --torus",
                        v.len()
                    ))))
                }
            };
            let r = clifford_check(&g.semisimple, &v, t.as_ref())?;
            let mut text = format!(
                "dim V = {}; invariant algebra dimension {}; {}",
                r.dim,
                r.invariant_dim,
                if r.commutative { "commutative (SMF)" } else { "not commutative (NOT SMF)" }
            );
            if let Some((a, b)) = &r.witness {
                text.push_str(&format!("\nwitness pair:\n  {a}\n  {b}"));
            }
            Output { text, json: serde_json::to_value(&r).expect("report JSON"), ok: true }
        }
        Verb::VerifyPaper { filter, include_long } => {
            let report = verify_catalog(filter, *include_long, caps, exec)?;
            let mut lines: Vec<String> = report
                .results
                .iter()
                .map(|r| format!("{:<8} {:<24} {:<28} {}", r.status.to_string(), r.section.name(), r.label, r.computed))
                .collect();
            lines.push(format!(
                "{} entries: {} passed, {} failed, {} skipped",
                report.results.len(),
                report.passed,
                report.failed,
                report.skipped
            ));
            let entries: Vec<Value> = report
                .results
                .iter()
                .map(|r| {
                    json!({
                        "entry": r.label,
                        "section": r.section.name(),
                        "status": r.status,
                        "verdict": r.verdict,
                        "computed": r.computed,
                    })
                })
                .collect();
            let json = json!({
                "entries": entries,
                "passed": report.passed,
                "failed": report.failed,
                "skipped": report.skipped,
            });
            let ok = report.succeeded() && report.results.iter().all(|r| r.status != Status::Fail);
            Output { text: lines.join("\n"), json, ok }
        }
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            let body = if cli.json { serde_json::to_string_pretty(&out.json).expect("JSON rendering") } else { out.text };
            let _ = writeln!(std::io::stdout(), "{body}");
            if out.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(Failure::Mismatch(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
