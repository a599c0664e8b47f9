//! `ptwreath`: consistency checks and small computations for the monoid of
//! partition-preserving partial transformations and its wreath cover.
//!
//! Every subcommand other than `eval` emits a report of named checks; the
//! process exits 0 when nothing failed (skipped checks are fine), 1 when a
//! check failed, and 2 on usage or domain errors.

mod report;

use std::fs;
use std::io::{BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use ptwreath::{
    build_named_generators, build_r1, build_r2, build_r3, bundled_rp, bundled_rt, check_relations,
    closure_with_limit, congruence_from_pairs, congruences_equal, extra_relation,
    free_quotient_size, kernel_congruence, kernel_generating_pair, order_formula,
    parse_relation_file, phi, substitute, wreath_presentation, xi_words, Alphabet, BigCount,
    BlockMap, Error, Presentation, Relation, RelationLabel, Word, WreathElement, DEFAULT_LIMIT,
};
use report::{Report, Status};

#[derive(Parser)]
#[command(name = "ptwreath", version, about, max_term_width = 100)]
struct Cli {
    /// Element and coset budget for enumerations.
    #[arg(long, global = true, default_value_t = DEFAULT_LIMIT)]
    limit: usize,

    /// Emit the report as JSON instead of text.
    #[arg(long, global = true)]
    json: bool,

    /// Omit timing, making output byte-for-byte reproducible.
    #[arg(long, global = true)]
    no_timing: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the order of the block monoid from the closed formula.
    Order {
        n: usize,
        m: usize,
        /// Cross-check the formula against a brute-force enumeration.
        #[arg(long)]
        enumerate: bool,
    },
    /// Check that the rank-5 set generates and that no proper subset does.
    VerifyGenerators { n: usize, m: usize },
    /// Check that one pair generates the kernel of the block projection.
    VerifyCongruence { n: usize, m: usize },
    /// Evaluate the relation families and, optionally, enumerate cosets.
    VerifyPresentation {
        n: usize,
        m: usize,
        /// Relation file for the inner part (defaults to a bundled set).
        #[arg(long, value_name = "FILE")]
        rp: Option<PathBuf>,
        /// Relation file for the outer part (defaults to a bundled set).
        #[arg(long, value_name = "FILE")]
        rt: Option<PathBuf>,
        /// Also enumerate the presented monoids and compare their orders.
        #[arg(long)]
        define: bool,
    },
    /// Evaluate a word in the named generators and print the element.
    Eval {
        word: String,
        n: usize,
        m: usize,
        /// Evaluate in the block monoid rather than the wreath product.
        #[arg(long)]
        block: bool,
    },
    /// Enumerate a closure; optionally export its right Cayley edges.
    Enumerate {
        n: usize,
        m: usize,
        /// Enumerate images in the block monoid instead.
        #[arg(long)]
        block: bool,
        /// Comma-separated generator names (default: x1,x2,tau,tauB,sigma).
        #[arg(long, value_name = "NAMES")]
        gens: Option<String>,
        /// Write edges as `<element> <generator> <element>` lines.
        #[arg(long, value_name = "FILE")]
        export: Option<PathBuf>,
    },
}

const FIVE_SET: [&str; 5] = ["x1", "x2", "tau", "tauB", "sigma"];

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(&cli) {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

/// `Err` is reserved for usage and domain problems (exit 2); check failures
/// come back as `Ok(1)`.
fn dispatch(cli: &Cli) -> Result<ExitCode, String> {
    let timing = !cli.no_timing;
    let report = match &cli.command {
        Command::Order { n, m, enumerate } => cmd_order(*n, *m, *enumerate, cli.limit, timing)?,
        Command::VerifyGenerators { n, m } => cmd_verify_generators(*n, *m, cli.limit, timing)?,
        Command::VerifyCongruence { n, m } => cmd_verify_congruence(*n, *m, cli.limit, timing)?,
        Command::VerifyPresentation { n, m, rp, rt, define } => {
            cmd_verify_presentation(*n, *m, rp.as_deref(), rt.as_deref(), *define, cli.limit, timing)?
        }
        Command::Eval { word, n, m, block } => {
            return cmd_eval(word, *n, *m, *block, cli.json, timing);
        }
        Command::Enumerate { n, m, block, gens, export } => cmd_enumerate(
            *n,
            *m,
            *block,
            gens.as_deref(),
            export.as_deref(),
            cli.limit,
            timing,
        )?,
    };
    print!("{}", if cli.json { report.render_json() } else { report.render_text() });
    Ok(if report.failed() { ExitCode::from(1) } else { ExitCode::SUCCESS })
}

fn named(n: usize, m: usize) -> Result<Alphabet<WreathElement>, String> {
    if n < 2 || m < 2 {
        return Err(format!("generators need n >= 2 and m >= 2, got n={n} m={m}"));
    }
    build_named_generators(n, m).map_err(|e| e.to_string())
}

fn five_set(alpha: &Alphabet<WreathElement>) -> Vec<WreathElement> {
    FIVE_SET.iter().map(|s| alpha.get(s).expect("bound").clone()).collect()
}

fn wreath_order(n: usize, m: usize) -> BigCount {
    BigCount::from(n as u64 + 1).pow(n as u32).pow(m as u32)
        * BigCount::from(m as u64).pow(m as u32)
}

fn cmd_order(n: usize, m: usize, enumerate: bool, limit: usize, timing: bool) -> Result<Report, String> {
    if n < 1 || m < 1 {
        return Err(format!("order needs n >= 1 and m >= 1, got n={n} m={m}"));
    }
    let mut report = Report::new("order", n, m, timing);
    let expected = order_formula(n, m);
    report.run("formula", |v| {
        v.insert("order".into(), expected.to_string());
        Ok(true)
    });
    if enumerate {
        let alpha = named(n, m)?;
        let blocks: Vec<BlockMap> = five_set(&alpha).iter().map(phi).collect();
        report.run("enumeration-agrees", |v| {
            let em = closure_with_limit(&blocks, limit)?;
            v.insert("enumerated".into(), em.size().to_string());
            Ok(BigCount::from(em.size()) == expected)
        });
    }
    Ok(report)
}

fn cmd_verify_generators(n: usize, m: usize, limit: usize, timing: bool) -> Result<Report, String> {
    let alpha = named(n, m)?;
    let five = five_set(&alpha);
    let wreath_expected = wreath_order(n, m);
    let block_expected = order_formula(n, m);
    let mut report = Report::new("verify-generators", n, m, timing);
    report.run("wreath-closure", |v| {
        let em = closure_with_limit(&five, limit)?;
        v.insert("size".into(), em.size().to_string());
        v.insert("expected".into(), wreath_expected.to_string());
        Ok(BigCount::from(em.size()) == wreath_expected)
    });
    let blocks: Vec<BlockMap> = five.iter().map(phi).collect();
    report.run("block-closure", |v| {
        let em = closure_with_limit(&blocks, limit)?;
        v.insert("size".into(), em.size().to_string());
        v.insert("expected".into(), block_expected.to_string());
        Ok(BigCount::from(em.size()) == block_expected)
    });
    // rank 5 is witnessed by every 4-element subset falling short
    for (drop, dropped) in FIVE_SET.iter().enumerate() {
        let sub: Vec<WreathElement> =
            five.iter().enumerate().filter(|&(i, _)| i != drop).map(|(_, x)| x.clone()).collect();
        let bsub: Vec<BlockMap> = sub.iter().map(phi).collect();
        report.run(&format!("without-{dropped}"), |v| {
            let wsize = closure_with_limit(&sub, limit)?.size();
            let bsize = closure_with_limit(&bsub, limit)?.size();
            v.insert("wreath".into(), wsize.to_string());
            v.insert("block".into(), bsize.to_string());
            Ok(BigCount::from(wsize) < wreath_expected && BigCount::from(bsize) < block_expected)
        });
    }
    Ok(report)
}

fn cmd_verify_congruence(n: usize, m: usize, limit: usize, timing: bool) -> Result<Report, String> {
    let alpha = named(n, m)?;
    let expected = order_formula(n, m);
    let mut report = Report::new("verify-congruence", n, m, timing);
    let em = match closure_with_limit(&five_set(&alpha), limit) {
        Ok(em) => em,
        Err(Error::LimitExceeded { limit }) => {
            let reason = format!("limit of {limit} exceeded");
            for name in ["kernel-class-count", "single-pair-generates", "canonical-transversal"] {
                report.skip(name, &reason);
            }
            return Ok(report);
        }
        Err(e) => return Err(e.to_string()),
    };
    let kernel = kernel_congruence(&em);
    report.run("kernel-class-count", |v| {
        v.insert("classes".into(), kernel.class_count().to_string());
        v.insert("expected".into(), expected.to_string());
        Ok(BigCount::from(kernel.class_count()) == expected)
    });
    report.run("single-pair-generates", |v| {
        let (a, b) = kernel_generating_pair(n, m)?;
        v.insert("pair".into(), format!("{a} ~ {b}"));
        let pair = (
            em.index_of(&a).expect("pair lies in the closure"),
            em.index_of(&b).expect("pair lies in the closure"),
        );
        let generated = congruence_from_pairs(&em, &[pair])?;
        congruences_equal(&kernel, &generated)
    });
    report.run("canonical-transversal", |v| {
        let mut per_class = vec![0usize; kernel.class_count()];
        for (i, x) in em.elements().iter().enumerate() {
            if x.is_canonical() {
                per_class[kernel.class_of(i)] += 1;
            }
        }
        v.insert("classes".into(), per_class.len().to_string());
        Ok(per_class.iter().all(|&k| k == 1))
    });
    Ok(report)
}

fn load_relations(
    n_or_m: usize,
    path: Option<&std::path::Path>,
    bundled: fn(usize) -> Option<&'static str>,
    label: RelationLabel,
    flag: &str,
) -> Result<Vec<Relation>, String> {
    let text = match path {
        Some(p) => fs::read_to_string(p).map_err(|e| format!("{}: {e}", p.display()))?,
        None => bundled(n_or_m)
            .ok_or(format!("no bundled relation set for {n_or_m}; pass --{flag} <FILE>"))?
            .to_string(),
    };
    parse_relation_file(&text, label).map_err(|e| e.to_string())
}

fn relation_check(
    report: &mut Report,
    name: &str,
    wreath: &Alphabet<WreathElement>,
    blocks: &Alphabet<BlockMap>,
    relations: &[Relation],
) {
    report.run(name, |v| {
        v.insert("relations".into(), relations.len().to_string());
        let in_wreath = check_relations(wreath, relations)?;
        let in_blocks = check_relations(blocks, relations)?;
        if let Some(first) = in_wreath.failures().next() {
            v.insert("first-failure".into(), format!("{} in wreath product", first.label));
        } else if let Some(first) = in_blocks.failures().next() {
            v.insert("first-failure".into(), format!("{} in block monoid", first.label));
        }
        Ok(in_wreath.all_hold() && in_blocks.all_hold())
    });
}

/// The extra relation collapses the kernel: it must fail in the cover and
/// hold in the quotient.
fn separation_check(
    report: &mut Report,
    name: &str,
    wreath: &Alphabet<WreathElement>,
    blocks: &Alphabet<BlockMap>,
    relation: &Relation,
) {
    report.run(name, |v| {
        let rel = std::slice::from_ref(relation);
        let in_wreath = check_relations(wreath, rel)?.all_hold();
        let in_blocks = check_relations(blocks, rel)?.all_hold();
        v.insert("wreath".into(), if in_wreath { "holds" } else { "fails" }.into());
        v.insert("block".into(), if in_blocks { "holds" } else { "fails" }.into());
        Ok(!in_wreath && in_blocks)
    });
}

fn cmd_verify_presentation(
    n: usize,
    m: usize,
    rp_path: Option<&std::path::Path>,
    rt_path: Option<&std::path::Path>,
    define: bool,
    limit: usize,
    timing: bool,
) -> Result<Report, String> {
    let alpha = named(n, m)?;
    let blocks = alpha.map(phi).map_err(|e| e.to_string())?;
    let rp = load_relations(n, rp_path, bundled_rp, RelationLabel::RP, "rp")?;
    let rt = load_relations(m, rt_path, bundled_rt, RelationLabel::RT, "rt")?;
    let rp_only = Presentation::new(
        ["pi", "rho", "tau", "sigma"].map(String::from).to_vec(),
        rp.clone(),
    )
    .map_err(|e| e.to_string())?;
    let rt_only = Presentation::new(["piB", "rhoB", "tauB"].map(String::from).to_vec(), rt.clone())
        .map_err(|e| e.to_string())?;

    let mut report = Report::new("verify-presentation", n, m, timing);
    let rp_status = report.run("rp-self-check", |v| {
        let want = order_formula(n, 1);
        let got = free_quotient_size(&rp_only, limit)?;
        v.insert("size".into(), got.to_string());
        v.insert("expected".into(), want.to_string());
        Ok(got == want)
    });
    let rt_status = report.run("rt-self-check", |v| {
        let want = BigCount::from(m as u64).pow(m as u32);
        let got = free_quotient_size(&rt_only, limit)?;
        v.insert("size".into(), got.to_string());
        v.insert("expected".into(), want.to_string());
        Ok(got == want)
    });

    let mut families = build_r1(m).map_err(|e| e.to_string())?;
    families.extend(build_r2(m).map_err(|e| e.to_string())?);
    families.extend(build_r3(m).map_err(|e| e.to_string())?);
    relation_check(&mut report, "mixed-relations", &alpha, &blocks, &families);
    relation_check(&mut report, "inner-outer-relations", &alpha, &blocks, &[rp.clone(), rt.clone()].concat());

    let table = xi_words(n, m).substitution();
    relation_check(&mut report, "substituted-relations", &alpha, &blocks, &substitute(&families, &table));

    let extra = extra_relation(n);
    separation_check(&mut report, "extra-separates", &alpha, &blocks, &extra);
    let extra_bar = substitute(std::slice::from_ref(&extra), &table);
    separation_check(&mut report, "substituted-extra-separates", &alpha, &blocks, &extra_bar[0]);

    if define {
        if rp_status != Status::Pass || rt_status != Status::Pass {
            // without validated parts an agreeing size proves nothing
            report.skip("defines-wreath-product", "self-checks did not pass");
            report.skip("defines-block-monoid", "self-checks did not pass");
        } else {
            let p = wreath_presentation(&rp, &rt, m).map_err(|e| e.to_string())?;
            let with_extra = p.clone().with(extra).map_err(|e| e.to_string())?;
            report.run("defines-wreath-product", |v| {
                let want = wreath_order(n, m);
                let got = free_quotient_size(&p, limit)?;
                v.insert("size".into(), got.to_string());
                v.insert("expected".into(), want.to_string());
                Ok(got == want)
            });
            report.run("defines-block-monoid", |v| {
                let want = order_formula(n, m);
                let got = free_quotient_size(&with_extra, limit)?;
                v.insert("size".into(), got.to_string());
                v.insert("expected".into(), want.to_string());
                Ok(got == want)
            });
        }
    }
    Ok(report)
}

fn cmd_eval(
    word: &str,
    n: usize,
    m: usize,
    block: bool,
    json: bool,
    timing: bool,
) -> Result<ExitCode, String> {
    let parsed: Word = word.parse().map_err(|e: Error| e.to_string())?;
    let alpha = named(n, m)?;
    let rendered = if block {
        let blocks = alpha.map(phi).map_err(|e| e.to_string())?;
        blocks.eval(&parsed).map_err(|e| e.to_string())?.to_string()
    } else {
        alpha.eval(&parsed).map_err(|e| e.to_string())?.to_string()
    };
    if json {
        let mut report = Report::new("eval", n, m, timing);
        report.run("eval", |v| {
            v.insert("word".into(), parsed.to_string());
            v.insert("result".into(), rendered.clone());
            Ok(true)
        });
        print!("{}", report.render_json());
    } else {
        println!("{rendered}");
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_enumerate(
    n: usize,
    m: usize,
    block: bool,
    gens: Option<&str>,
    export: Option<&std::path::Path>,
    limit: usize,
    timing: bool,
) -> Result<Report, String> {
    let alpha = named(n, m)?;
    let names: Vec<String> = match gens {
        Some(list) => list.split(',').map(|s| s.trim().to_string()).collect(),
        None => FIVE_SET.iter().map(|s| s.to_string()).collect(),
    };
    let mut chosen = Vec::with_capacity(names.len());
    for name in &names {
        chosen.push(
            alpha
                .get(name)
                .ok_or_else(|| {
                    format!("unknown generator `{name}`; available: {}", alpha.names().join(", "))
                })?
                .clone(),
        );
    }
    let mut report = Report::new("enumerate", n, m, timing);
    if block {
        let seeds: Vec<BlockMap> = chosen.iter().map(phi).collect();
        enumerate_into(&mut report, &seeds, &names, export, limit)?;
    } else {
        enumerate_into(&mut report, &chosen, &names, export, limit)?;
    }
    Ok(report)
}

fn enumerate_into<E: ptwreath::MonoidElement>(
    report: &mut Report,
    seeds: &[E],
    names: &[String],
    export: Option<&std::path::Path>,
    limit: usize,
) -> Result<(), String> {
    let em = match closure_with_limit(seeds, limit) {
        Ok(em) => em,
        Err(Error::LimitExceeded { limit }) => {
            report.skip("closure", &format!("limit of {limit} exceeded"));
            return Ok(());
        }
        Err(e) => return Err(e.to_string()),
    };
    let mut edge_count = None;
    if let Some(path) = export {
        let mut out = BufWriter::new(
            fs::File::create(path).map_err(|e| format!("{}: {e}", path.display()))?,
        );
        let mut count = 0usize;
        for (i, g, j) in em.edges() {
            writeln!(out, "{i} {} {j}", names[g]).map_err(|e| e.to_string())?;
            count += 1;
        }
        out.flush().map_err(|e| e.to_string())?;
        edge_count = Some(count);
    }
    report.run("closure", |v| {
        v.insert("size".into(), em.size().to_string());
        v.insert("generators".into(), names.join(","));
        if let Some(count) = edge_count {
            v.insert("edges".into(), count.to_string());
        }
        Ok(true)
    });
    Ok(())
}
