//! `floer`: command-line front end to the link catalog.

use std::collections::BTreeMap;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use floer_core::detect::{detect_all, summarize, Hypothesis};
use floer_core::invariants::{
    a2, casson_surgery, d_large_surgery_knot, d_lens, d_one_surgery_bound, format_rational,
    hf_inf_rank_zero_surgery, mu123_squared, sato_levine, sublink_a2, triple_linking_d_verdict,
    InvariantResult, TripleLinkingVerdict,
};
use floer_core::lattice::box_points;
use floer_core::render::{render_function, LatticeFunction};
use floer_core::verify::verify_catalog;
use floer_core::{Catalog, LinkRecord, SublinkId};

const BUNDLED: &str = include_str!("../../../data/catalog.json");

#[derive(Parser)]
#[command(name = "floer", version, about = "H-functions and surgery invariants of algebraically split links")]
struct Cli {
    /// Catalog file; defaults to the bundled catalog.
    #[arg(long, global = true, env = "FLOER_CATALOG")]
    catalog: Option<PathBuf>,
    /// Machine-readable output.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Catalog maintenance.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
    /// Print a lattice function or polynomial of a link.
    Compute {
        #[arg(long)]
        link: String,
        what: What,
        /// Half-width of the printed box; defaults to support radius + 2.
        #[arg(long = "box")]
        radius: Option<i64>,
    },
    /// Compute a numerical invariant.
    Invariant {
        #[arg(long)]
        link: Option<String>,
        which: Which,
        /// Surgery coefficients 1/q_i, comma separated.
        #[arg(long, value_delimiter = ',', allow_negative_numbers = true)]
        q: Option<Vec<i64>>,
        #[arg(long, allow_negative_numbers = true)]
        m: Option<i64>,
        #[arg(long, allow_negative_numbers = true)]
        i: Option<i64>,
        /// Triple linking number, for rank-zero-surgery without a link.
        #[arg(long, allow_negative_numbers = true)]
        mu: Option<i64>,
    },
    /// Run the detection criteria on a link.
    Detect {
        #[arg(long)]
        link: String,
    },
    /// Check every record of the catalog.
    Verify,
}

#[derive(Subcommand)]
enum CatalogAction {
    /// Load a catalog strictly, building and validating every model.
    Validate { path: PathBuf },
    /// List record names.
    List,
}

#[derive(Clone, Copy, ValueEnum)]
enum What {
    #[value(name = "H")]
    BigH,
    #[value(name = "h")]
    SmallH,
    #[value(name = "hprime")]
    HPrime,
    #[value(name = "alexander")]
    Alexander,
    #[value(name = "delta_prime")]
    DeltaPrime,
}

#[derive(Clone, Copy, ValueEnum)]
enum Which {
    A2,
    Beta,
    Mu123,
    Casson,
    DLens,
    DLarge,
    DOneBound,
    RankZeroSurgery,
    DTriple,
}

fn catalog_text(path: &Option<PathBuf>) -> Result<String> {
    match path {
        Some(p) => std::fs::read_to_string(p).with_context(|| format!("cannot read {}", p.display())),
        None => Ok(BUNDLED.to_string()),
    }
}

fn load(path: &Option<PathBuf>) -> Result<Catalog> {
    Ok(Catalog::load_str(&catalog_text(path)?)?)
}

fn lookup<'a>(catalog: &'a Catalog, name: &str) -> Result<&'a LinkRecord> {
    catalog.record(name).ok_or_else(|| {
        let known: Vec<&str> = catalog.names().collect();
        anyhow!("unknown link {name:?} (known: {})", known.join(", "))
    })
}

fn emit(json_out: bool, text: String, value: Value) {
    if json_out {
        println!("{}", serde_json::to_string_pretty(&value).expect("json"));
    } else {
        print!("{text}");
        if !text.ends_with('\n') {
            println!();
        }
    }
}

fn compute(cli: &Cli, link: &str, what: What, radius: Option<i64>) -> Result<()> {
    let catalog = load(&cli.catalog)?;
    let r = lookup(&catalog, link)?;
    let model = catalog.model(r)?;
    let radius = radius.unwrap_or_else(|| model.default_box_radius());
    if radius < 0 {
        bail!("--box must be nonnegative");
    }
    let function = match what {
        What::BigH => LatticeFunction::BigH,
        What::SmallH => LatticeFunction::SmallH,
        What::HPrime => LatticeFunction::HPrime,
        What::Alexander => {
            let p = &r.alexander;
            emit(cli.json, p.to_string(), json!({ "link": link, "alexander": p.to_json() }));
            return Ok(());
        }
        What::DeltaPrime => {
            let q = r.normalized_alexander()?.delta_prime()?;
            emit(cli.json, q.to_string(), json!({ "link": link, "delta_prime": q.to_json() }));
            return Ok(());
        }
    };
    let text = render_function(&model, function, radius)?;
    let mut values = Vec::new();
    for s in box_points(model.components(), radius) {
        let v = function.eval(&model, &s)?;
        values.push(json!([s, v]));
    }
    emit(
        cli.json,
        text,
        json!({ "link": link, "function": function.symbol(), "radius": radius, "values": values }),
    );
    Ok(())
}

fn result(invariant: &str, value: String, hypotheses: Vec<String>, anchor: &str) -> InvariantResult {
    InvariantResult {
        invariant: invariant.into(),
        value,
        kind: None,
        hypotheses,
        anchor: anchor.into(),
    }
}

fn pair_sublinks_lspace(catalog: &Catalog, r: &LinkRecord) -> bool {
    SublinkId::full(r.n)
        .nonempty_subsets()
        .filter(|id| id.len() == 2)
        .all(|id| match r.sublinks.get(&id) {
            Some(name) => catalog.record(name).is_some_and(|s| s.flags.lspace),
            None => r.flags.brunnian,
        })
}

fn invariant(
    cli: &Cli,
    link: Option<&str>,
    which: Which,
    q: Option<&[i64]>,
    m: Option<i64>,
    i: Option<i64>,
    mu: Option<i64>,
) -> Result<()> {
    if let Which::DLens = which {
        let (m, i) = (m.context("d-lens needs --m")?, i.context("d-lens needs --i")?);
        let d = d_lens(m, i)?;
        let res = result(&format!("d(L({m},1), {i})"), format_rational(&d), vec![], "lens space closed form");
        emit(cli.json, res.to_string(), serde_json::to_value(&res)?);
        return Ok(());
    }
    if let (Which::RankZeroSurgery, None, Some(mu)) = (which, link, mu) {
        let res = result(
            "rank HF^infinity(S^3_{0,0,0})",
            hf_inf_rank_zero_surgery(mu).to_string(),
            vec![format!("mu123 = {mu}")],
            "rank 6 for odd mu123, 8 for even",
        );
        emit(cli.json, res.to_string(), serde_json::to_value(&res)?);
        return Ok(());
    }
    let link = link.context("this invariant needs --link")?;
    let catalog = load(&cli.catalog)?;
    let r = lookup(&catalog, link)?;
    let model = catalog.model(r)?;
    let chi = r.chi_prime.as_ref();
    let lspace_hyp = || if r.flags.lspace { vec!["L-space link".to_string()] } else { vec![] };
    let res = match which {
        Which::A2 => result("a2", a2(&model, chi).to_string(), vec![], "a2 = sum (h' - chi')"),
        Which::Beta => result(
            "beta",
            sato_levine(&model, chi)?.to_string(),
            vec!["2 components".into()],
            "Sato-Levine invariant equals a2",
        ),
        Which::Mu123 => {
            let mu = mu123_squared(&model, chi, r.flags.brunnian && r.flags.lspace)?;
            let value = match mu.abs {
                Some(a) => format!("{} (|mu123| = {a})", mu.squared),
                None => mu.squared.to_string(),
            };
            result("mu123^2", value, vec!["3 components".into()], "mu123^2 = |sum (chi' - h')|")
        }
        Which::Casson => {
            let q = q.map(<[i64]>::to_vec).unwrap_or_else(|| vec![1; r.n]);
            if q.len() != r.n {
                bail!("--q needs {} entries", r.n);
            }
            let a2s = sublink_a2(&model, &catalog.sublink_chi(r))?;
            let qs: Vec<String> = q.iter().map(i64::to_string).collect();
            result(
                &format!("lambda(1/q surgery on {link}), q = ({})", qs.join(",")),
                casson_surgery(&a2s, &q)?.to_string(),
                vec![],
                "Casson surgery state sum over sublinks",
            )
        }
        Which::DLarge => {
            if r.n != 1 {
                bail!("d-large needs a knot, {link} has {} components", r.n);
            }
            if !r.flags.lspace {
                bail!("hypothesis not certified: {}", Hypothesis::LSpace);
            }
            let (m, i) = (m.context("d-large needs --m")?, i.context("d-large needs --i")?);
            let d = d_large_surgery_knot(model.full_table(), m, i)?;
            InvariantResult {
                kind: Some(d.kind),
                ..result(
                    &format!("d(S^3_{m}({link}), {i})"),
                    format_rational(&d.value),
                    vec!["L-space knot".into(), format!("m = {m} >= 2g - 1")],
                    "d(L(m,1), i) - 2 H(i)",
                )
            }
        }
        Which::DOneBound => {
            let d = d_one_surgery_bound(&model, r.flags.lspace);
            InvariantResult {
                kind: Some(d.kind),
                ..result(
                    &format!("d(S^3_(1,..,1)({link}))"),
                    format_rational(&d.value),
                    lspace_hyp(),
                    "d <= -2 h(0), equality when h is supported at the origin",
                )
            }
        }
        Which::RankZeroSurgery => {
            let mu = mu123_squared(&model, chi, r.flags.brunnian && r.flags.lspace)?;
            let abs = mu.abs.ok_or_else(|| anyhow!("mu123^2 = {} is not a square", mu.squared))?;
            result(
                "rank HF^infinity(S^3_{0,0,0})",
                hf_inf_rank_zero_surgery(abs).to_string(),
                vec![format!("|mu123| = {abs}")],
                "rank 6 for odd mu123, 8 for even",
            )
        }
        Which::DTriple => {
            let mu = if r.n == 3 {
                mu123_squared(&model, chi, false)?.abs
            } else {
                None
            };
            match triple_linking_d_verdict(r.n, mu, pair_sublinks_lspace(&catalog, r)) {
                TripleLinkingVerdict::Bound {
                    bound,
                    coefficients,
                    mut hypotheses,
                } => {
                    let fields: Vec<String> = coefficients.iter().map(|c| c.to_string()).collect();
                    hypotheses.push(format!("coefficients: {}", fields.join(", ")));
                    InvariantResult {
                        kind: Some(bound.kind),
                        ..result(
                            &format!("d(S^3_(1,1,1)({link}))"),
                            format_rational(&bound.value),
                            hypotheses,
                            "nonzero triple linking bounds d of (1,1,1) surgery",
                        )
                    }
                }
                TripleLinkingVerdict::NotApplicable(reason) => {
                    emit(
                        cli.json,
                        format!("not applicable: {reason}"),
                        json!({ "invariant": "d_triple", "applicable": false, "reason": reason }),
                    );
                    return Ok(());
                }
            }
        }
        Which::DLens => unreachable!(),
    };
    emit(cli.json, res.to_string(), serde_json::to_value(&res)?);
    Ok(())
}

fn detect(cli: &Cli, link: &str) -> Result<()> {
    let catalog = load(&cli.catalog)?;
    let r = lookup(&catalog, link)?;
    let model = catalog.model(r)?;
    let verdicts = detect_all(&model, &r.flags);
    let summary = summarize(&verdicts);
    let mut text = format!("{link}: {summary}\n");
    if verdicts.is_empty() {
        text.push_str("  no criterion applies (L-space flag not set)\n");
    }
    for v in &verdicts {
        text.push_str(&format!("- {v}\n"));
    }
    emit(
        cli.json,
        text,
        json!({ "link": link, "conclusion": summary, "verdicts": verdicts }),
    );
    Ok(())
}

fn run(cli: &Cli) -> Result<ExitCode> {
    match &cli.command {
        Command::Catalog { action } => match action {
            CatalogAction::Validate { path } => {
                let text = std::fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))?;
                let catalog = Catalog::load_str(&text)?;
                let names: Vec<&str> = catalog.names().collect();
                emit(
                    cli.json,
                    format!("ok: {} records", names.len()),
                    json!({ "ok": true, "records": names }),
                );
            }
            CatalogAction::List => {
                let catalog = load(&cli.catalog)?;
                let rows: BTreeMap<&str, usize> = catalog.records().map(|r| (r.name.as_str(), r.n)).collect();
                let text: String = rows.iter().map(|(name, n)| format!("{name} ({n})\n")).collect();
                emit(cli.json, text, json!(rows));
            }
        },
        Command::Compute { link, what, radius } => compute(cli, link, *what, *radius)?,
        Command::Invariant {
            link,
            which,
            q,
            m,
            i,
            mu,
        } => invariant(cli, link.as_deref(), *which, q.as_deref(), *m, *i, *mu)?,
        Command::Detect { link } => detect(cli, link)?,
        Command::Verify => {
            let catalog = Catalog::parse(&catalog_text(&cli.catalog)?)?;
            let report = verify_catalog(&catalog);
            emit(cli.json, report.to_string(), serde_json::to_value(&report)?);
            if !report.all_passed() {
                return Ok(ExitCode::FAILURE);
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
