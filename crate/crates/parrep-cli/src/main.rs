//! `parrep` — construct, decompose, and verify partial representations of
//! finite groups that restrict to ordinary representations on a chosen
//! subgroup.
//!
//! Exit codes: 0 on success, 1 when a verification fails (witnesses go to
//! standard output), 2 on usage errors (bad specs, exceeded caps).

use std::fmt::Write as _;
use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Parser, Subcommand};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use parrep::group::{
    parse_group_spec, parse_subgroup_spec, CosetSpace, FiniteGroup,
};
use parrep::groupoid::{decomposition_report, order_formula, Groupoid};
use parrep::induction::{
    all_irreducibles, globalization_of_ind, partial_induce, standard_supplier,
};
use parrep::partial::{globalize, PartialRep};
use parrep::semigroup::{all_elements, s_inverse, s_mul};
use parrep::suites::{run_all, run_suite, CaseOutcome};
use parrep::symmetric::{
    binomial, factorial, labels_of, partitions_of, BiPartitionLabel, Partition, SnContext,
};

#[derive(Parser)]
#[command(
    name = "parrep",
    version,
    about = "Partial representations of finite groups, global on a subgroup",
    after_help = "Group specs: S<n>, C<n>, D<n>, or `gens: (1 2)(3 4), (1 3)` \
                  (1-based points). Subgroup specs use the same grammar and are \
                  checked for containment."
)]
struct Cli {
    /// Emit machine-readable JSON instead of text.
    #[arg(long, global = true)]
    json: bool,

    /// Seed for sampled checks. Checks small enough to run exhaustively
    /// ignore it.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decompose the groupoid algebra of a pair into matrix blocks over
    /// isotropy groups.
    Decompose {
        #[arg(long)]
        group: String,
        #[arg(long)]
        subgroup: String,
        /// Raise or lower the cap on the subgroup index (the groupoid has
        /// 2^(index-1) objects).
        #[arg(long)]
        cap_index: Option<usize>,
    },
    /// Count the arrows of the pair's groupoid and compare with the
    /// closed formula.
    Groupoid {
        #[arg(long)]
        group: String,
        #[arg(long)]
        subgroup: String,
        #[arg(long)]
        cap_index: Option<usize>,
    },
    /// Enumerate the pair's inverse semigroup and verify its axioms.
    Semigroup {
        #[arg(long)]
        group: String,
        #[arg(long)]
        subgroup: String,
        #[arg(long)]
        cap_index: Option<usize>,
    },
    /// Build all irreducible subgroup-global partial representations of
    /// the pair and check completeness.
    Irreducibles {
        #[arg(long)]
        group: String,
        #[arg(long)]
        subgroup: String,
        /// JSON representation files supplying irreducibles for isotropy
        /// groups the built-in constructions do not cover (repeatable).
        #[arg(long = "rep-file")]
        rep_files: Vec<PathBuf>,
    },
    /// Restrict a labeled symmetric-group module to the point stabilizer
    /// and verify the multiset against characters.
    Restrict {
        /// Label such as "([2],[2])@n=4".
        #[arg(long)]
        label: String,
    },
    /// Globalize a labeled induced module, or a representation from a
    /// file, and report the dimensions.
    Globalize {
        /// Label such as "([2],[2])@n=4" for the symmetric-group family.
        #[arg(long)]
        label: Option<String>,
        /// A JSON representation file to globalize directly.
        #[arg(long = "rep-file")]
        rep_file: Option<PathBuf>,
    },
    /// Partially induce a stabilizer module up to the full group.
    Pind {
        /// Number of points for the symmetric-group route.
        #[arg(long)]
        n: Option<usize>,
        /// Stabilizer shape such as "[2,1]" (size n-1).
        #[arg(long)]
        nu: Option<String>,
        /// Generic route: the inducing representation as a JSON file…
        #[arg(long = "rep-file")]
        rep_file: Option<PathBuf>,
        /// …together with the pair it lives on.
        #[arg(long)]
        group: Option<String>,
        #[arg(long)]
        subgroup: Option<String>,
    },
    /// Verify the induction adjunction: both homomorphism counts equal
    /// the combinatorial multiplicity.
    Frobenius {
        /// Number of points.
        #[arg(long)]
        n: usize,
        /// Restrict to one stabilizer shape (default: all of size n-1).
        #[arg(long)]
        nu: Option<String>,
        /// Restrict to one label (default: all labels at n).
        #[arg(long)]
        label: Option<String>,
    },
    /// Branch a labeled module down one point and certify the answer with
    /// explicit matrices.
    Branch {
        #[arg(long)]
        label: String,
    },
    /// Closed-form component table of the symmetric-group chain with the
    /// arrow-count identity.
    SnReport {
        #[arg(long)]
        n: usize,
    },
    /// Run named verification suites.
    Verify {
        /// "all", or one of: groupoid-cardinality, base-decomposition,
        /// dimension-identity, irreducible-completeness,
        /// projector-calculus, globalization, mackey-restriction,
        /// frobenius-reciprocity, restriction-formula, branching-rule,
        /// semigroup, algebra-relations.
        #[arg(long, default_value = "all")]
        suite: String,
        /// Upper bound on the number of points in the sweeps (suites
        /// never exceed their own built-in caps).
        #[arg(long, default_value_t = 5)]
        max_n: usize,
    },
}

/// A failed run: exit code plus the message for standard error.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Failure {
        Failure {
            code: 2,
            message: message.into(),
        }
    }

    fn verification(message: impl Into<String>) -> Failure {
        Failure {
            code: 1,
            message: message.into(),
        }
    }
}

impl From<parrep::Error> for Failure {
    fn from(e: parrep::Error) -> Failure {
        use parrep::Error::*;
        let code = match &e {
            InvalidInput(_) | NotASubgroup(_) | TooLarge(_) => 2,
            _ => 1,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Failure {
        Failure::usage(format!("i/o error: {e}"))
    }
}

fn main() -> ExitCode {
    // Die quietly when stdout's reader goes away (e.g. `parrep ... | head`)
    // instead of panicking on the broken pipe.
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn build_cosets(group: &str, subgroup: &str) -> Result<Arc<CosetSpace>, Failure> {
    let g = parse_group_spec(group, 0)?;
    let h = parse_subgroup_spec(subgroup, &g)?;
    Ok(CosetSpace::left_cosets(&g, &h)?)
}

fn parse_label(s: &str) -> Result<BiPartitionLabel, Failure> {
    BiPartitionLabel::parse(s).map_err(|e| Failure::usage(e.to_string()))
}

fn parse_shape(s: &str) -> Result<Partition, Failure> {
    Partition::parse(s).map_err(|e| Failure::usage(e.to_string()))
}

fn run(cli: &Cli) -> Result<(), Failure> {
    match &cli.command {
        Command::Decompose {
            group,
            subgroup,
            cap_index,
        } => cmd_decompose(cli, group, subgroup, *cap_index),
        Command::Groupoid {
            group,
            subgroup,
            cap_index,
        } => cmd_groupoid(cli, group, subgroup, *cap_index),
        Command::Semigroup {
            group,
            subgroup,
            cap_index,
        } => cmd_semigroup(cli, group, subgroup, *cap_index),
        Command::Irreducibles {
            group,
            subgroup,
            rep_files,
        } => cmd_irreducibles(cli, group, subgroup, rep_files),
        Command::Restrict { label } => cmd_restrict(cli, label),
        Command::Globalize { label, rep_file } => cmd_globalize(cli, label.as_deref(), rep_file),
        Command::Pind {
            n,
            nu,
            rep_file,
            group,
            subgroup,
        } => cmd_pind(cli, *n, nu.as_deref(), rep_file, group.as_deref(), subgroup.as_deref()),
        Command::Frobenius { n, nu, label } => {
            cmd_frobenius(cli, *n, nu.as_deref(), label.as_deref())
        }
        Command::Branch { label } => cmd_branch(cli, label),
        Command::SnReport { n } => cmd_sn_report(cli, *n),
        Command::Verify { suite, max_n } => cmd_verify(cli, suite, *max_n),
    }
}

fn cmd_decompose(
    cli: &Cli,
    group: &str,
    subgroup: &str,
    cap_index: Option<usize>,
) -> Result<(), Failure> {
    let cosets = build_cosets(group, subgroup)?;
    let groupoid = Groupoid::build(&cosets, cap_index)?;
    let report = decomposition_report(&groupoid)?;
    if cli.json {
        let value = serde_json::to_value(&report).expect("serializable report");
        println!(
            "{}",
            serde_json::to_string_pretty(&json!({
                "group": group,
                "subgroup": subgroup,
                "index": cosets.index(),
                "arrows": groupoid.elements().len(),
                "report": value,
            }))
            .expect("serializable value")
        );
    } else {
        println!(
            "{group} over {subgroup}: index {}, {} arrows",
            cosets.index(),
            groupoid.elements().len()
        );
        for c in &report.components {
            println!(
                "  |A| = {}: {}x{} block over an isotropy group of order {} <{}>",
                c.k,
                c.m,
                c.m,
                c.isotropy_order,
                c.isotropy_generators.join(", ")
            );
        }
        println!("  total block dimension {}", report.total_dim);
    }
    Ok(())
}

fn cmd_groupoid(
    cli: &Cli,
    group: &str,
    subgroup: &str,
    cap_index: Option<usize>,
) -> Result<(), Failure> {
    let cosets = build_cosets(group, subgroup)?;
    let groupoid = Groupoid::build(&cosets, cap_index)?;
    let counted = groupoid.elements().len() as u128;
    let formula = order_formula(&cosets);
    if cli.json {
        println!(
            "{}",
            serde_json::to_string_pretty(&json!({
                "group": group,
                "subgroup": subgroup,
                "index": cosets.index(),
                "arrows": counted,
                "formula": formula,
                "matches": counted == formula,
            }))
            .expect("serializable value")
        );
    } else {
        println!(
            "{group} over {subgroup}: {} objects, {counted} arrows; formula gives {formula}",
            1u128 << (cosets.index() - 1),
        );
    }
    if counted != formula {
        return Err(Failure::verification(format!(
            "enumerated {counted} arrows but the formula gives {formula}"
        )));
    }
    Ok(())
}

fn cmd_semigroup(
    cli: &Cli,
    group: &str,
    subgroup: &str,
    cap_index: Option<usize>,
) -> Result<(), Failure> {
    let cosets = build_cosets(group, subgroup)?;
    let elements = all_elements(&cosets, cap_index)?;
    let order = elements.len();
    let idempotents = elements
        .iter()
        .filter(|x| s_mul(x, x).map(|xx| xx == **x).unwrap_or(false))
        .count();
    // Inverse laws are cheap enough to check on every element; the
    // associativity sweep is exhaustive up to a million triples and
    // seed-sampled beyond that.
    for x in &elements {
        let xi = s_inverse(x);
        let back = s_mul(&s_mul(x, &xi)?, x)?;
        if back != *x {
            return Err(Failure::verification(format!(
                "inverse law fails at ({}, {})",
                x.subset(),
                x.element()
            )));
        }
    }
    let exhaustive = order.pow(3) <= 1_000_000;
    let triples: Vec<(usize, usize, usize)> = if exhaustive {
        (0..order)
            .flat_map(|i| (0..order).flat_map(move |j| (0..order).map(move |k| (i, j, k))))
            .collect()
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(cli.seed);
        (0..20_000)
            .map(|_| {
                (
                    rng.gen_range(0..order),
                    rng.gen_range(0..order),
                    rng.gen_range(0..order),
                )
            })
            .collect()
    };
    for (i, j, k) in &triples {
        let left = s_mul(&s_mul(&elements[*i], &elements[*j])?, &elements[*k])?;
        let right = s_mul(&elements[*i], &s_mul(&elements[*j], &elements[*k])?)?;
        if left != right {
            return Err(Failure::verification(format!(
                "associativity fails at indices ({i}, {j}, {k})"
            )));
        }
    }
    if cli.json {
        println!(
            "{}",
            serde_json::to_string_pretty(&json!({
                "group": group,
                "subgroup": subgroup,
                "order": order,
                "idempotents": idempotents,
                "associativity": if exhaustive { "exhaustive" } else { "sampled" },
                "triples_checked": triples.len(),
            }))
            .expect("serializable value")
        );
    } else {
        println!(
            "inverse semigroup of {group} over {subgroup}: {order} elements, {idempotents} idempotents"
        );
        println!(
            "  inverse laws on all elements; associativity on {} {} triples",
            triples.len(),
            if exhaustive { "(all)" } else { "sampled" }
        );
    }
    Ok(())
}

fn cmd_irreducibles(
    cli: &Cli,
    group: &str,
    subgroup: &str,
    rep_files: &[PathBuf],
) -> Result<(), Failure> {
    let cosets = build_cosets(group, subgroup)?;
    let mut supplied: Vec<PartialRep> = Vec::new();
    for path in rep_files {
        let text = fs::read_to_string(path)?;
        supplied.push(PartialRep::from_json_str(&text)?);
    }
    let supplier = move |k: &Arc<FiniteGroup>| -> parrep::Result<Option<Vec<PartialRep>>> {
        let matching: Vec<PartialRep> = supplied
            .iter()
            .filter(|r| r.group().same_element_set(k))
            .cloned()
            .collect();
        if !matching.is_empty() {
            return Ok(Some(matching));
        }
        standard_supplier(k)
    };
    let reps = all_irreducibles(&cosets, &supplier)?;
    let total: u128 = reps.iter().map(|r| (r.dim() * r.dim()) as u128).sum();
    let arrows = order_formula(&cosets);
    if cli.json {
        let rows: Vec<_> = reps
            .iter()
            .map(|r| {
                json!({
                    "dim": r.dim(),
                    "blocks": r.block_count(),
                    "isotropy_order": r.k_group().order(),
                })
            })
            .collect();
        println!(
            "{}",
            serde_json::to_string_pretty(&json!({
                "group": group,
                "subgroup": subgroup,
                "count": reps.len(),
                "rows": rows,
                "sum_of_squares": total,
                "arrows": arrows,
                "complete": total == arrows,
            }))
            .expect("serializable value")
        );
    } else {
        println!(
            "{} irreducible subgroup-global partial representations of {group} over {subgroup}:",
            reps.len()
        );
        for r in &reps {
            println!(
                "  dim {:>3} = {} block(s) x dim {} over an isotropy group of order {}",
                r.dim(),
                r.block_count(),
                r.inducing().dim(),
                r.k_group().order()
            );
        }
        println!("  sum of squared dimensions {total}; groupoid arrows {arrows}");
    }
    if total != arrows {
        return Err(Failure::verification(format!(
            "squared dimensions sum to {total}, expected {arrows}"
        )));
    }
    Ok(())
}

fn cmd_restrict(cli: &Cli, label: &str) -> Result<(), Failure> {
    let label = parse_label(label)?;
    let ctx = SnContext::new(label.n())?;
    let by_rule = ctx.sn_restriction_decomp(&label)?;
    let by_characters = ctx.restriction_character_decomp(&label)?;
    let verified = by_rule == by_characters;
    if cli.json {
        let summands: Vec<_> = by_rule
            .iter()
            .map(|(nu, d)| json!({"target": nu.to_string(), "multiplicity": d}))
            .collect();
        println!(
            "{}",
            serde_json::to_string_pretty(&json!({
                "label": label.to_string(),
                "dim": label.dim(),
                "summands": summands,
                "verified": verified,
            }))
            .expect("serializable value")
        );
    } else {
        println!(
            "restriction of {label} (dim {}) to the stabilizer of the base point:",
            label.dim()
        );
        for (nu, d) in &by_rule {
            println!("  {d} x module of shape {nu} (dim {})", nu.syt_count());
        }
        println!(
            "  character oracle: {}",
            if verified { "agrees" } else { "DISAGREES" }
        );
    }
    if !verified {
        return Err(Failure::verification(format!(
            "combinatorial rule {by_rule:?} differs from the character decomposition {by_characters:?}"
        )));
    }
    Ok(())
}

fn cmd_globalize(cli: &Cli, label: Option<&str>, rep_file: &Option<PathBuf>) -> Result<(), Failure> {
    match (label, rep_file) {
        (Some(label), None) => {
            let label = parse_label(label)?;
            let ctx = SnContext::new(label.n())?;
            let a = ctx.a_k(label.k())?;
            let w = ctx.tensor_module(&label)?;
            let glob = globalization_of_ind(&a, &w)?;
            if cli.json {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&json!({
                        "label": label.to_string(),
                        "partial_dim": label.dim(),
                        "global_dim": glob.dim(),
                        "verified": true,
                    }))
                    .expect("serializable value")
                );
            } else {
                println!(
                    "globalization of {label}: partial dim {} -> global dim {}",
                    label.dim(),
                    glob.dim()
                );
                println!("  dimension and character match the full induced module");
            }
            Ok(())
        }
        (None, Some(path)) => {
            let rep = PartialRep::from_json_str(&fs::read_to_string(path)?)?;
            let glob = globalize(&rep)?;
            if cli.json {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&json!({
                        "file": path.display().to_string(),
                        "partial_dim": rep.dim(),
                        "global_dim": glob.rep.dim(),
                        "verified": true,
                    }))
                    .expect("serializable value")
                );
            } else {
                println!(
                    "globalization of {}: partial dim {} -> global dim {}",
                    path.display(),
                    rep.dim(),
                    glob.rep.dim()
                );
                println!("  compression through the inclusion recovers the input");
            }
            Ok(())
        }
        _ => Err(Failure::usage(
            "pass exactly one of --label or --rep-file",
        )),
    }
}

fn cmd_pind(
    cli: &Cli,
    n: Option<usize>,
    nu: Option<&str>,
    rep_file: &Option<PathBuf>,
    group: Option<&str>,
    subgroup: Option<&str>,
) -> Result<(), Failure> {
    match (n, nu, rep_file) {
        (Some(n), Some(nu), None) => {
            let nu = parse_shape(nu)?;
            let ctx = SnContext::new(n)?;
            let table = ctx.sn_pind_decomp(&nu)?;
            let total: u128 = table.iter().map(|(l, d)| *d as u128 * l.dim()).sum();
            let expected: u128 = nu.syt_count()
                * (1..=n as u128).map(|k| binomial(n as u128 - 1, k - 1) * k).sum::<u128>();
            if cli.json {
                let rows: Vec<_> = table
                    .iter()
                    .map(|(l, d)| json!({"label": l.to_string(), "multiplicity": d}))
                    .collect();
                println!(
                    "{}",
                    serde_json::to_string_pretty(&json!({
                        "nu": nu.to_string(),
                        "n": n,
                        "rows": rows,
                        "total_dim": total,
                        "expected_dim": expected,
                        "verified": total == expected,
                    }))
                    .expect("serializable value")
                );
            } else {
                println!("partial induction of the stabilizer module {nu} up to {n} points:");
                for (l, d) in &table {
                    println!("  {d} x {l} (dim {})", l.dim());
                }
                println!("  total dimension {total}, closed form {expected}");
            }
            if total != expected {
                return Err(Failure::verification(format!(
                    "total dimension {total} differs from the closed form {expected}"
                )));
            }
            Ok(())
        }
        (None, None, Some(path)) => {
            let (Some(group), Some(subgroup)) = (group, subgroup) else {
                return Err(Failure::usage(
                    "--rep-file needs --group and --subgroup",
                ));
            };
            let cosets = build_cosets(group, subgroup)?;
            let w = PartialRep::from_json_str(&fs::read_to_string(path)?)?;
            let pind = partial_induce(&w, &cosets)?;
            if cli.json {
                let blocks: Vec<_> = pind
                    .blocks()
                    .iter()
                    .map(|(mask, c)| json!({"subset_mask": mask, "coset": c}))
                    .collect();
                println!(
                    "{}",
                    serde_json::to_string_pretty(&json!({
                        "file": path.display().to_string(),
                        "inducing_dim": pind.inducing_dim(),
                        "dim": pind.rep().dim(),
                        "blocks": blocks,
                    }))
                    .expect("serializable value")
                );
            } else {
                println!(
                    "partial induction of {} (dim {}) along {group} over {subgroup}: dim {}",
                    path.display(),
                    pind.inducing_dim(),
                    pind.rep().dim()
                );
                println!("  {} graded blocks", pind.blocks().len());
            }
            Ok(())
        }
        _ => Err(Failure::usage(
            "pass either --n with --nu, or --rep-file with --group/--subgroup",
        )),
    }
}

fn cmd_frobenius(
    cli: &Cli,
    n: usize,
    nu: Option<&str>,
    label: Option<&str>,
) -> Result<(), Failure> {
    let ctx = SnContext::new(n)?;
    let shapes: Vec<Partition> = match nu {
        Some(s) => vec![parse_shape(s)?],
        None => partitions_of(n - 1),
    };
    let labels: Vec<BiPartitionLabel> = match label {
        Some(s) => vec![parse_label(s)?],
        None => labels_of(n),
    };
    let mut rows = Vec::new();
    let mut mismatches = Vec::new();
    for nu in &shapes {
        let w = ctx.h_irreducible(nu)?;
        let table: std::collections::BTreeMap<BiPartitionLabel, u64> =
            ctx.sn_pind_decomp(nu)?.into_iter().collect();
        for l in &labels {
            let u = ctx.sn_irreducible(l)?;
            let (left, right) = parrep::induction::frobenius_check(&w, u.rep(), ctx.cosets())?;
            let expected = table.get(l).copied().unwrap_or(0) as usize;
            let ok = left == expected && right == expected;
            if !ok {
                mismatches.push(format!(
                    "({nu}, {l}): counts ({left}, {right}), rule gives {expected}"
                ));
            }
            rows.push((nu.clone(), l.clone(), left, right, expected, ok));
        }
    }
    if cli.json {
        let entries: Vec<_> = rows
            .iter()
            .map(|(nu, l, left, right, expected, ok)| {
                json!({
                    "nu": nu.to_string(),
                    "label": l.to_string(),
                    "hom_from_induction": left,
                    "hom_into_restriction": right,
                    "rule": expected,
                    "ok": ok,
                })
            })
            .collect();
        println!(
            "{}",
            serde_json::to_string_pretty(&json!({
                "n": n,
                "pairs": entries,
                "verified": mismatches.is_empty(),
            }))
            .expect("serializable value")
        );
    } else {
        println!("induction adjunction on {n} points ({} pairs):", rows.len());
        for (nu, l, left, right, expected, ok) in &rows {
            println!(
                "  {nu} vs {l}: {left} = {right} = {expected}{}",
                if *ok { "" } else { "  MISMATCH" }
            );
        }
    }
    if let Some(first) = mismatches.first() {
        return Err(Failure::verification(format!(
            "{} adjunction mismatches, first: {first}",
            mismatches.len()
        )));
    }
    Ok(())
}

fn cmd_branch(cli: &Cli, label: &str) -> Result<(), Failure> {
    let label = parse_label(label)?;
    let ctx = SnContext::new(label.n())?;
    let branches = ctx.verify_branching(&label)?;
    if cli.json {
        let rows: Vec<_> = branches
            .iter()
            .map(|b| json!({"label": b.to_string(), "dim": b.dim()}))
            .collect();
        println!(
            "{}",
            serde_json::to_string_pretty(&json!({
                "label": label.to_string(),
                "dim": label.dim(),
                "branches": rows,
                "verified": true,
            }))
            .expect("serializable value")
        );
    } else {
        println!(
            "branching {label} (dim {}) down to {} points:",
            label.dim(),
            label.n() - 1
        );
        for b in &branches {
            println!("  {b} (dim {})", b.dim());
        }
        println!("  certified against explicit matrices on the point stabilizer");
    }
    Ok(())
}

fn cmd_sn_report(cli: &Cli, n: usize) -> Result<(), Failure> {
    let ctx = SnContext::new(n)?;
    let report = ctx.algebra_report()?;
    let closed = if n >= 2 {
        (1u128 << (n - 2)) * (factorial(n as u128) + factorial(n as u128 - 1))
    } else {
        0
    };
    if cli.json {
        let value = serde_json::to_value(&report).expect("serializable report");
        println!(
            "{}",
            serde_json::to_string_pretty(&json!({
                "n": n,
                "report": value,
                "closed_form": closed,
                "verified": report.total_dim == closed,
            }))
            .expect("serializable value")
        );
    } else {
        println!("groupoid algebra of S{n} over the stabilizer of a point:");
        for c in &report.components {
            println!(
                "  k = {}: C({},{})-sized block ({}x{}) over a group of order {}",
                c.k,
                n - 1,
                c.k - 1,
                c.m,
                c.m,
                c.isotropy_order
            );
        }
        println!(
            "  total block dimension {} = 2^{}*({}! + {}!) = {closed}",
            report.total_dim,
            n.max(2) - 2,
            n,
            n - 1
        );
    }
    if report.total_dim != closed {
        return Err(Failure::verification(format!(
            "component total {} differs from the closed form {closed}",
            report.total_dim
        )));
    }
    Ok(())
}

fn cmd_verify(cli: &Cli, suite: &str, max_n: usize) -> Result<(), Failure> {
    let mut cases: Vec<CaseOutcome> = if suite == "all" {
        run_all(max_n)?
    } else {
        run_suite(suite, max_n).map_err(|e| match e {
            parrep::Error::InvalidInput(m) => Failure::usage(m),
            other => other.into(),
        })?
    };
    cases.sort_by(|a, b| a.name.cmp(&b.name));
    let failed: Vec<&CaseOutcome> = cases.iter().filter(|c| !c.ok).collect();
    if cli.json {
        let entries: Vec<_> = cases
            .iter()
            .map(|c| json!({"name": c.name, "ok": c.ok, "detail": c.detail}))
            .collect();
        println!(
            "{}",
            serde_json::to_string_pretty(&json!({
                "suite": suite,
                "max_n": max_n,
                "cases": entries,
                "passed": failed.is_empty(),
            }))
            .expect("serializable value")
        );
    } else {
        let mut text = String::new();
        for c in &cases {
            let _ = writeln!(
                text,
                "  [{}] {}: {}",
                if c.ok { "ok" } else { "FAIL" },
                c.name,
                c.detail
            );
        }
        print!(
            "suite {suite} (max n = {max_n}): {} of {} cases passed\n{text}",
            cases.len() - failed.len(),
            cases.len()
        );
    }
    if !failed.is_empty() {
        return Err(Failure::verification(format!(
            "{} of {} cases failed; first: {} ({})",
            failed.len(),
            cases.len(),
            failed[0].name,
            failed[0].detail
        )));
    }
    Ok(())
}
