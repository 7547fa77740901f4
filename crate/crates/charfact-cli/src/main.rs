//! Command-line front end: partition invariants, character evaluation at
//! tuple-spec specializations, and identity verification sweeps with JSON
//! reports. Exit codes: 0 success, 1 verification failure, 2 usage error.

use charfact::characters::{compute_character, CHARACTER_KINDS};
use charfact::factorizations::{
    summarize, sweep, verify, Family, Params, SweepBounds, TheoremId, VerificationReport,
};
use charfact::partition::Partition;
use clap::{Args, Parser, Subcommand};
use std::fs;
use std::process::ExitCode;
use std::str::FromStr;

#[derive(Parser)]
#[command(
    name = "charfact",
    about = "Exact classical-group characters, partition combinatorics, and identity verification",
    version
)]
struct Cli {
    /// Emit machine-readable JSON instead of tables.
    #[arg(long, global = true)]
    json: bool,

    /// Write output to a file instead of stdout.
    #[arg(long, global = true, value_name = "PATH")]
    out: Option<String>,

    /// Worker threads for sweeps (falls back to CHARFACT_THREADS).
    #[arg(long, global = true, value_name = "K")]
    threads: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Partition invariants: conjugate, Frobenius coordinates, beta-set,
    /// residue counts, sorting sign, t-core and t-quotient.
    Partition {
        /// Comma-separated parts, e.g. "5,2,2,1,1"; empty for the empty
        /// partition.
        lambda: String,
        /// Modulus for cores, quotients, and residue counts.
        #[arg(long, default_value_t = 2)]
        t: u32,
        /// Beta-set padding; defaults to the smallest multiple of t that
        /// fits the partition.
        #[arg(long)]
        m: Option<usize>,
    },
    /// Evaluate a character at a specialization described by the tuple
    /// spec DSL: "X(n)" then "bar", "twist(t)", "xomega(t)", "pow(k)",
    /// "+1", "+(-1)" composed left-to-right ("X(n) Y(m)" for hook).
    Char {
        /// One of: schur, skew, sp, so-odd, o-even, univ-o, univ-sp,
        /// univ-so, univ-so-minus, rs, hook.
        kind: String,
        /// Partition, or "lambda/mu" for the two-partition kinds.
        lambda: String,
        /// Tuple spec, e.g. "X(2) twist(3)" or "X(1) bar +1".
        spec: String,
    },
    /// Verify one identity instance or sweep a bounded family of them.
    Verify(VerifyArgs),
}

#[derive(Args)]
struct VerifyArgs {
    /// Identity name, e.g. SCHUR_FAC or UNIV_ROOTS_SP.
    theorem: String,
    #[arg(long)]
    lambda: Option<String>,
    #[arg(long)]
    mu: Option<String>,
    #[arg(long)]
    t: Option<u32>,
    #[arg(long)]
    n: Option<usize>,
    /// Extra-variable count, where the identity takes one.
    #[arg(long)]
    m: Option<usize>,
    #[arg(long)]
    p: Option<u32>,
    #[arg(long)]
    q: Option<u32>,
    #[arg(long)]
    r: Option<i64>,
    #[arg(long)]
    arity: Option<usize>,
    #[arg(long)]
    arity2: Option<usize>,
    /// Family for the independence identity: schur, univ-sp, univ-o, sp,
    /// so-odd, o-even, or h.
    #[arg(long)]
    family: Option<String>,
    /// Sweep bounds, e.g. "size<=8;t=2,3,4;n=1;arity=2".
    #[arg(long)]
    sweep: Option<String>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let threads = cli.threads.or_else(|| {
        std::env::var("CHARFACT_THREADS")
            .ok()
            .and_then(|v| v.parse().ok())
    });
    if let Some(k) = threads {
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(k)
            .build_global();
    }
    match run(&cli) {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: &Cli) -> Result<ExitCode, String> {
    let (text, code) = match &cli.command {
        Command::Partition { lambda, t, m } => {
            (cmd_partition(lambda, *t, *m, cli.json)?, ExitCode::SUCCESS)
        }
        Command::Char { kind, lambda, spec } => {
            (cmd_char(kind, lambda, spec, cli.json)?, ExitCode::SUCCESS)
        }
        Command::Verify(args) => cmd_verify(args, cli.json)?,
    };
    match &cli.out {
        Some(path) => fs::write(path, text + "\n").map_err(|e| e.to_string())?,
        None => println!("{text}"),
    }
    Ok(code)
}

fn cmd_partition(lambda: &str, t: u32, m: Option<usize>, json: bool) -> Result<String, String> {
    if t < 2 {
        return Err("t must be at least 2".into());
    }
    let lam: Partition = lambda.parse().map_err(|e| format!("{e}"))?;
    let m = m.unwrap_or_else(|| lam.default_beta_len(t).max(t as usize));
    let beta = lam.beta_set(m).map_err(|e| format!("{e}"))?;
    let counts = beta.residue_counts(t);
    let sigma = lam.sigma(m, t, None).map_err(|e| format!("{e}"))?;
    let cq = lam.core_quotient(t, m).map_err(|e| format!("{e}"))?;
    let frob = lam.frobenius();
    let value = serde_json::json!({
        "partition": lam.to_string(),
        "size": lam.size(),
        "length": lam.len(),
        "conjugate": lam.conjugate().to_string(),
        "frobenius": { "alpha": frob.alpha, "beta": frob.beta },
        "t": t,
        "m": m,
        "beta_set": beta.entries,
        "residue_counts": counts,
        "sigma_one_line": sigma.one_line,
        "sigma_sign": sigma.sign(),
        "core": cq.core.to_string(),
        "quotient": cq.quotient.iter().map(|q| q.to_string()).collect::<Vec<_>>(),
        "self_conjugate_core": cq.core.is_self_conjugate(),
        "symplectic_core": cq.core.is_symplectic_shape(),
        "orthogonal_core": cq.core.is_orthogonal_shape(),
    });
    if json {
        Ok(value.to_string())
    } else {
        let mut out = String::new();
        out.push_str(&format!("partition      ({})\n", lam));
        out.push_str(&format!("conjugate      ({})\n", lam.conjugate()));
        out.push_str(&format!(
            "frobenius      ({:?} | {:?})\n",
            frob.alpha, frob.beta
        ));
        out.push_str(&format!("beta set (m={m}) {:?}\n", beta.entries));
        out.push_str(&format!("counts mod {t}   {:?}\n", counts));
        out.push_str(&format!(
            "sigma          {:?}, sign {}\n",
            sigma.one_line,
            sigma.sign()
        ));
        out.push_str(&format!("{t}-core         ({})\n", cq.core));
        out.push_str(&format!(
            "{t}-quotient     [{}]",
            cq.quotient
                .iter()
                .map(|q| format!("({q})"))
                .collect::<Vec<_>>()
                .join(", ")
        ));
        Ok(out)
    }
}

fn cmd_char(kind: &str, lambda: &str, spec: &str, json: bool) -> Result<String, String> {
    if !CHARACTER_KINDS.contains(&kind) {
        return Err(format!(
            "unknown kind {kind:?}; expected one of {CHARACTER_KINDS:?}"
        ));
    }
    let poly = compute_character(kind, lambda, spec).map_err(|e| format!("{e}"))?;
    if json {
        Ok(serde_json::json!({
            "kind": kind,
            "lambda": lambda,
            "tuple": spec,
            "value": poly.to_string(),
            "is_zero": poly.is_zero(),
        })
        .to_string())
    } else {
        Ok(poly.to_string())
    }
}

fn build_params(args: &VerifyArgs) -> Result<Params, String> {
    let parse_partition = |s: &Option<String>| -> Result<Option<Partition>, String> {
        s.as_ref()
            .map(|v| v.parse().map_err(|e| format!("{e}")))
            .transpose()
    };
    Ok(Params {
        lambda: parse_partition(&args.lambda)?,
        mu: parse_partition(&args.mu)?,
        t: args.t,
        n: args.n,
        m: args.m,
        p: args.p,
        q: args.q,
        r: args.r,
        arity: args.arity,
        arity2: args.arity2,
        family: args
            .family
            .as_ref()
            .map(|f| Family::from_str(f).map_err(|e| format!("{e}")))
            .transpose()?,
    })
}

fn cmd_verify(args: &VerifyArgs, json: bool) -> Result<(String, ExitCode), String> {
    let id: TheoremId = args.theorem.parse().map_err(|e| format!("{e}"))?;
    let reports: Vec<VerificationReport> = match &args.sweep {
        Some(spec) => {
            let bounds: SweepBounds = spec.parse().map_err(|e| format!("{e}"))?;
            sweep(id, &bounds).map_err(|e| format!("{e}"))?
        }
        None => {
            let params = build_params(args)?;
            vec![verify(id, &params).map_err(|e| format!("{e}"))?]
        }
    };
    let summary = summarize(&reports);
    let failed = summary.mismatches > 0;
    let text = if json {
        serde_json::json!({
            "theorem": id.name(),
            "summary": summary,
            "reports": reports.iter().map(|r| r.to_json()).collect::<Vec<_>>(),
        })
        .to_string()
    } else {
        let mut out = String::new();
        for r in &reports {
            out.push_str(&format!(
                "{} {:?} applicable={} lhs={} rhs={}\n",
                r.theorem, r.verdict, r.applicable, r.lhs, r.rhs
            ));
        }
        out.push_str(&format!(
            "{}: {} instances, {} match, {} both-zero, {} vanish off-condition, {} mismatch",
            id,
            summary.total,
            summary.matches,
            summary.both_zero,
            summary.not_applicable,
            summary.mismatches
        ));
        out
    };
    Ok((
        text,
        if failed {
            ExitCode::from(1)
        } else {
            ExitCode::SUCCESS
        },
    ))
}
