//! Regenerates the bundled R_P / R_T relation files under `data/`.
//!
//! Each file is read off the right Cayley graph of the monoid it presents,
//! greedily pruned, self-checked by coset enumeration and written with a
//! header recording how it was made. Run with `--release`; the pruning
//! step re-runs the coset enumeration once per candidate relation.

use std::fmt::Write as _;
use std::fs;
use std::path::PathBuf;

use num_bigint::BigUint;
use ptwreath::{
    closure, derive_presentation, free_quotient_size, prune_presentation,
    standard_generators_ptn, PartialMap, Presentation,
};

const PRUNE_LIMIT: usize = 20_000;

fn render(kind: &str, degree: usize, target: &BigUint, p: &Presentation) -> String {
    let mut out = String::new();
    let (monoid, syms) = match kind {
        "rp" => (format!("PT_{degree}"), "pi, rho, tau, sigma"),
        _ => (format!("T_{degree}"), "piB, rhoB, tauB"),
    };
    writeln!(out, "# Defining relations for {monoid} on {syms}.").unwrap();
    writeln!(
        out,
        "# Machine-derived from the right Cayley graph and greedily pruned; validity"
    )
    .unwrap();
    writeln!(
        out,
        "# is re-checked by coset enumeration (quotient size {target}) in the test suite."
    )
    .unwrap();
    writeln!(out, "# Regenerate with: cargo run --example regen_presentations").unwrap();
    for rel in p.relations() {
        writeln!(out, "{rel}").unwrap();
    }
    out
}

fn generate(
    kind: &str,
    degree: usize,
    names: &[&str],
    gens: Vec<PartialMap>,
    target: BigUint,
) -> (PathBuf, String) {
    let em = closure(&gens).expect("small closure");
    assert_eq!(BigUint::from(em.size()), target, "{kind} {degree}");
    let names: Vec<String> = names.iter().map(|s| s.to_string()).collect();
    let raw = derive_presentation(&em, &names).expect("valid names");
    let pruned = prune_presentation(&raw, &target, PRUNE_LIMIT).expect("prune");
    let check = free_quotient_size(&pruned, PRUNE_LIMIT).expect("finite");
    assert_eq!(check, target, "{kind} {degree} self-check");
    println!(
        "{kind} degree {degree}: {} -> {} relations, quotient {target}",
        raw.relations().len(),
        pruned.relations().len()
    );
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("data")
        .join(format!("{kind}_{}{degree}.rel", if kind == "rp" { "n" } else { "m" }));
    (path, render(kind, degree, &target, &pruned))
}

fn main() {
    let mut outputs = Vec::new();
    for n in [2usize, 3] {
        let g = standard_generators_ptn(n).expect("n >= 2");
        outputs.push(generate(
            "rp",
            n,
            &["pi", "rho", "tau", "sigma"],
            vec![g.pi, g.rho, g.tau, g.sigma],
            BigUint::from(n as u64 + 1).pow(n as u32),
        ));
    }
    for m in [2usize, 3] {
        let g = standard_generators_ptn(m).expect("m >= 2");
        outputs.push(generate(
            "rt",
            m,
            &["piB", "rhoB", "tauB"],
            vec![g.pi, g.rho, g.tau],
            BigUint::from(m as u64).pow(m as u32),
        ));
    }
    for (path, text) in outputs {
        fs::write(&path, text).expect("write relation file");
        println!("wrote {}", path.display());
    }
}
