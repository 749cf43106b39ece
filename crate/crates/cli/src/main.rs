use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use twin_core::free_aut::{
    align_to_basis, apply_aut, faithfulness_search, match_basis, matches_cover_basis, matrix_group_order, phi4,
    phi4_generator, quotient_action, BasisMatch,
};
use twin_core::pure_twin::{all_pure_generators, betti_binomial, betti_closed_form, pure_generators, rank_bound};
use twin_core::schreier::subgroup_presentation;
use twin_core::suites::{run_suite, SuiteOptions, SUITES};
use twin_core::surface::{build_complex, compare_printed, invalid_boundary_labels, surface_invariants, GluingStatus};
use twin_core::tietze::tietze_simplify;
use twin_core::twin::{is_pure, perm_image};
use twin_core::virtual_twin::{
    bounded_equal, replay, retraction_defects, vt_perm_image, vt_presentation, wt_presentation, BoundedEquality,
};
use twin_core::word::{equal, normal_form, reduce};
use twin_core::{parse_free_word, parse_word, CoxWord, GroupSpec, TwinError};

const TRUE: u8 = 0;
const FALSE: u8 = 1;
const USAGE: u8 = 2;
const UNKNOWN: u8 = 3;

#[derive(Parser)]
#[command(name = "twin", version, about = "Twin groups, pure twin groups and their relatives")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct WordArg {
    /// Word such as "(s1 s2)^3 s3"; "1" or "" is the identity
    word: String,
    /// Number of strands; defaults to one more than the largest index
    #[arg(long)]
    n: Option<usize>,
}

#[derive(Subcommand)]
enum Command {
    /// Freely reduce using s_i^2 = 1 and far commutation
    Reduce(WordArg),
    /// Lexicographically least reduced word
    Nf(WordArg),
    /// Exit 0 if the two words are equal in T_n, 1 otherwise
    Eq {
        u: String,
        v: String,
        #[arg(long)]
        n: Option<usize>,
    },
    /// Image in the symmetric group, in one-line notation
    Perm(WordArg),
    /// Exit 0 if the word lies in PT_n
    IsPure(WordArg),
    /// Reidemeister-Schreier presentation of PT_n after Tietze simplification
    SchreierPt {
        n: usize,
        #[arg(long)]
        json: bool,
        /// Skip simplification
        #[arg(long)]
        raw: bool,
    },
    /// Generators of PT_n that are new relative to PT_{n-1}
    GensPt {
        n: usize,
        #[arg(long)]
        json: bool,
        /// Include the generators of PT_3, ..., PT_{n-1}
        #[arg(long)]
        all: bool,
    },
    /// Upper bound r_n on the rank of PT_n
    RankBound { n: usize },
    /// First Betti number of PT_n
    Betti { n: usize },
    /// The action of T_4 on F_7 = PT_4
    Phi4 {
        #[command(subcommand)]
        command: Phi4Command,
    },
    /// The 24-triangle surface for PT_4
    Surface {
        #[command(subcommand)]
        command: SurfaceCommand,
    },
    /// Virtual and welded twin groups
    Vt {
        #[command(subcommand)]
        command: VtCommand,
    },
    /// Run a verification suite
    Verify {
        /// One of lemma41, eq31, lemma45, d4, center, lcs-t3, betti-agree, phi4-equivariance, all
        suite: String,
        #[arg(long, default_value_t = 7)]
        max_n: usize,
        /// Length bound for the center search
        #[arg(long, default_value_t = 6)]
        depth: usize,
        #[arg(long)]
        jobs: Option<usize>,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Subcommand)]
enum Phi4Command {
    /// Apply phi_4(w) to a word in b1..b7
    Apply { word: String, free_word: String },
    /// Check involutions, commutation, the quotient action and the table entries
    Check,
    /// Search T_4 for a nontrivial element acting trivially
    Faithful {
        #[arg(long, default_value_t = 6)]
        depth: usize,
    },
}

#[derive(Subcommand)]
enum SurfaceCommand {
    /// Derive the gluing and report the topology of the result
    Check {
        #[arg(long)]
        json: bool,
    },
}

#[derive(Subcommand)]
enum VtCommand {
    /// Bounded search for a rewriting from u to v
    Eq {
        u: String,
        v: String,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, default_value_t = 4)]
        depth: usize,
        /// Use WT_n instead of VT_n
        #[arg(long)]
        welded: bool,
    },
    /// Check that all relators of VT_n and WT_n are trivial in S_n
    Check {
        #[arg(long, default_value_t = 6)]
        max_n: usize,
    },
}

fn rank_for(words: &[&CoxWord], n: Option<usize>) -> twin_core::Result<usize> {
    let needed = words.iter().map(|w| w.max_index() + 1).max().unwrap_or(2).max(2);
    match n {
        Some(n) if n < needed => Err(TwinError::IndexOutOfRange { index: needed - 1, rank: n }),
        Some(n) => Ok(n),
        None => Ok(needed),
    }
}

fn verdict(b: bool) -> u8 {
    println!("{b}");
    if b {
        TRUE
    } else {
        FALSE
    }
}

fn run(cli: Cli) -> twin_core::Result<u8> {
    match cli.command {
        Command::Reduce(a) => {
            let w = parse_word(&a.word)?;
            let spec = GroupSpec::new(rank_for(&[&w], a.n)?)?;
            println!("{}", reduce(&w, &spec)?);
            Ok(TRUE)
        }
        Command::Nf(a) => {
            let w = parse_word(&a.word)?;
            let spec = GroupSpec::new(rank_for(&[&w], a.n)?)?;
            println!("{}", normal_form(&w, &spec)?);
            Ok(TRUE)
        }
        Command::Eq { u, v, n } => {
            let (u, v) = (parse_word(&u)?, parse_word(&v)?);
            let spec = GroupSpec::new(rank_for(&[&u, &v], n)?)?;
            Ok(verdict(equal(&u, &v, &spec)?))
        }
        Command::Perm(a) => {
            let w = parse_word(&a.word)?;
            println!("{}", perm_image(&w, rank_for(&[&w], a.n)?)?);
            Ok(TRUE)
        }
        Command::IsPure(a) => {
            let w = parse_word(&a.word)?;
            Ok(verdict(is_pure(&w, rank_for(&[&w], a.n)?)?))
        }
        Command::SchreierPt { n, json, raw } => schreier_pt(n, json, raw),
        Command::GensPt { n, json, all } => {
            let gens = if all { all_pure_generators(n)? } else { pure_generators(n)? };
            if json {
                let items: Vec<_> = gens
                    .iter()
                    .map(|g| json!({"l": g.l, "conjugator": g.conjugator.to_string(), "word": g.word.to_string()}))
                    .collect();
                println!("{}", serde_json::Value::Array(items));
            } else {
                for g in gens {
                    println!("{}", g.word);
                }
            }
            Ok(TRUE)
        }
        Command::RankBound { n } => {
            println!("{}", rank_bound(n)?);
            Ok(TRUE)
        }
        Command::Betti { n } => {
            let (a, b) = (betti_binomial(n)?, betti_closed_form(n)?);
            println!("{a}");
            if a != b {
                eprintln!("closed form gives {b}");
                return Ok(FALSE);
            }
            Ok(TRUE)
        }
        Command::Phi4 { command } => phi4_command(command),
        Command::Surface { command: SurfaceCommand::Check { json } } => surface_check(json),
        Command::Vt { command } => vt_command(command),
        Command::Verify { suite, max_n, depth, jobs, json } => {
            if !SUITES.contains(&suite.as_str()) {
                eprintln!("unknown suite {suite:?}; expected one of {}", SUITES.join(", "));
                return Ok(USAGE);
            }
            let reports = run_suite(&suite, &SuiteOptions { max_n, depth, jobs })?;
            if json {
                println!("{}", serde_json::to_string_pretty(&reports).expect("reports serialize"));
            } else {
                for r in &reports {
                    println!("{r}");
                }
            }
            Ok(if reports.iter().all(|r| r.passed()) { TRUE } else { FALSE })
        }
    }
}

fn schreier_pt(n: usize, json: bool, raw: bool) -> twin_core::Result<u8> {
    let full = subgroup_presentation(n)?;
    let p = match (raw, n) {
        (true, _) => full,
        (false, 4) => align_to_basis(&tietze_simplify(&full))?,
        (false, _) => tietze_simplify(&full),
    };
    let matches = if n == 4 && !raw {
        let found: Vec<Option<BasisMatch>> = p
            .generators
            .iter()
            .map(|g| match_basis(p.meaning(g).expect("meanings are kept")))
            .collect::<twin_core::Result<_>>()?;
        Some(found)
    } else {
        None
    };
    if json {
        println!("{}", p.to_json());
        return Ok(TRUE);
    }
    println!("generators: {}", p.generators.len());
    for g in &p.generators {
        let meaning = p.meaning(g).map(|m| m.to_string()).unwrap_or_default();
        println!("  {g} = {meaning}");
    }
    println!("relators: {}", p.relators.len());
    for r in &p.relators {
        let text: Vec<String> = r.iter().map(|(s, e)| if *e == 1 { s.clone() } else { format!("{s}^{e}") }).collect();
        println!("  {}", text.join(" "));
    }
    if let Some(matches) = matches {
        println!("basis:");
        for (g, m) in p.generators.iter().zip(&matches) {
            let text = match m {
                Some(BasisMatch::Basis { index, inverse: false }) => format!("b{index}"),
                Some(BasisMatch::Basis { index, inverse: true }) => format!("b{index}^-1"),
                Some(BasisMatch::CubeRelation { inverse: false }) => "b7^-1 b1^-1 (cube relation)".into(),
                Some(BasisMatch::CubeRelation { inverse: true }) => "b1 b7 (cube relation)".into(),
                None => "unmatched".into(),
            };
            println!("  {g} -> {text}");
        }
        if !matches_cover_basis(&matches) {
            return Ok(FALSE);
        }
    }
    Ok(TRUE)
}

fn phi4_command(command: Phi4Command) -> twin_core::Result<u8> {
    match command {
        Phi4Command::Apply { word, free_word } => {
            let f = phi4(&parse_word(&word)?)?;
            let x = parse_free_word(&free_word)?;
            if x.max_index() > 7 {
                return Err(TwinError::Invalid(format!("{x} is not a word in b1..b7")));
            }
            println!("{}", apply_aut(&f, &x));
            Ok(TRUE)
        }
        Phi4Command::Check => {
            let reports = run_suite("phi4-equivariance", &SuiteOptions::default())?;
            let mut ok = reports.iter().all(|r| r.passed());
            for r in &reports {
                println!("{r}");
            }
            let gens: Vec<_> =
                (1..=3).map(|i| phi4_generator(i).map(|g| quotient_action(&g))).collect::<twin_core::Result<_>>()?;
            let restricted: Option<Vec<_>> = gens.iter().map(|m| m.restrict(4)).collect();
            match restricted {
                Some(r) if r.iter().all(|m| m.as_permutation().is_some()) => {
                    let order = matrix_group_order(&r);
                    println!("quotient action on <beta1..beta4>: permutation group of order {order}");
                    ok &= order == 24;
                }
                _ => {
                    println!("quotient action does not restrict to permutations of <beta1..beta4>");
                    ok = false;
                }
            }
            Ok(if ok { TRUE } else { FALSE })
        }
        Phi4Command::Faithful { depth } => match faithfulness_search(depth)? {
            None => {
                println!("none");
                Ok(TRUE)
            }
            Some(w) => {
                println!("{w}");
                Ok(FALSE)
            }
        },
    }
}

fn surface_check(json: bool) -> twin_core::Result<u8> {
    let complex = build_complex();
    let report = surface_invariants(&complex.triangles, &complex.pairing)?;
    let checks = compare_printed(&complex);
    let discrepancies: Vec<_> = checks.iter().filter(|c| c.status != GluingStatus::Agrees).collect();
    let bad_boundary = invalid_boundary_labels(&complex);
    if json {
        let value = json!({
            "report": report,
            "printedGluings": checks.len(),
            "discrepancies": discrepancies,
            "invalidBoundaryLabels": bad_boundary,
        });
        println!("{}", serde_json::to_string_pretty(&value).expect("report serializes"));
    } else {
        println!("{report}");
        println!(
            "printed gluings: {} of {} agree with the derived pairing",
            checks.len() - discrepancies.len(),
            checks.len()
        );
        for d in &discrepancies {
            match &d.status {
                GluingStatus::InvalidLabel { label, derived_partner_of_other } => println!(
                    "  ({}) {}: no triangle {label}; derived partner is D_{}",
                    d.list,
                    d.printed,
                    derived_partner_of_other.as_deref().unwrap_or("?")
                ),
                GluingStatus::Disagrees { derived_partner } => {
                    println!("  ({}) {}: derived partner is D_{derived_partner}", d.list, d.printed)
                }
                GluingStatus::Agrees => {}
            }
        }
        for l in &bad_boundary {
            println!("  boundary side D_{l}^2 names no triangle");
        }
    }
    Ok(if report.is_eight_punctured_sphere() { TRUE } else { FALSE })
}

fn vt_command(command: VtCommand) -> twin_core::Result<u8> {
    match command {
        VtCommand::Eq { u, v, n, depth, welded } => {
            let (u, v) = (parse_word(&u)?, parse_word(&v)?);
            let n = rank_for(&[&u, &v], n)?;
            let p = if welded { wt_presentation(n)? } else { vt_presentation(n)? };
            match bounded_equal(&u, &v, &p, depth)? {
                BoundedEquality::Equal(cert) => {
                    if !replay(&u, &v, &p, &cert) {
                        return Err(TwinError::Invalid("certificate failed to replay".into()));
                    }
                    println!("EQUAL");
                    println!("  {u}");
                    for (_, w) in &cert.steps {
                        println!("  {w}");
                    }
                    Ok(TRUE)
                }
                BoundedEquality::Unknown => {
                    println!("UNKNOWN");
                    Ok(UNKNOWN)
                }
            }
        }
        VtCommand::Check { max_n } => {
            let mut ok = true;
            for n in 3..=max_n {
                for p in [vt_presentation(n)?, wt_presentation(n)?] {
                    let name = if p.welded { "WT" } else { "VT" };
                    let bad: Vec<_> = p
                        .relators()
                        .into_iter()
                        .filter(|r| !vt_perm_image(r, n).map(|q| q.is_identity()).unwrap_or(false))
                        .collect();
                    println!("{name}_{n}: {} relators, {} not trivial in S_{n}", p.relations.len(), bad.len());
                    ok &= bad.is_empty();
                    if !p.welded {
                        for rel in retraction_defects(&p)? {
                            println!("  deleting r-letters does not respect {rel}");
                        }
                    }
                }
            }
            Ok(if ok { TRUE } else { FALSE })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(USAGE)
        }
    }
}
