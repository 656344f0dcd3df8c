//! Command-line front end: every pipeline as a reproducible recipe.
//!
//! Exit codes: 0 on success, 1 when an `--expect` assertion fails on a
//! mathematical verdict, 2 on errors.

use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};

use crate::autsearch::{self, SearchOptions};
use crate::designs;
use crate::enumerate::{self, EnumerationBudget};
use crate::error::{Error, Result};
use crate::groups::{self, FiniteGroup};
use crate::io::{self, Table, TableFormat};
use crate::perm::PermGroup;
use crate::scheme::{self, AssociationScheme, ColorPartition};
use crate::sring;
use crate::witness;

#[derive(Parser)]
#[command(name = "schur", version, about = "Permutation groups, association schemes, and S-rings at desk scale")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Worker threads for enumeration root-splitting.
    #[arg(long, global = true, default_value_t = 1)]
    jobs: usize,
}

#[derive(Subcommand)]
enum Command {
    /// Build a group from a constructor spec and print its profile.
    Group {
        #[command(subcommand)]
        sub: GroupCmd,
    },
    /// Association-scheme pipelines.
    Scheme {
        #[command(subcommand)]
        sub: SchemeCmd,
    },
    /// Automorphism group and schurity of a scheme file.
    Aut(AutArgs),
    /// S-ring pipelines.
    Sring {
        #[command(subcommand)]
        sub: SringCmd,
    },
    /// Difference-set designs.
    Design {
        #[command(subcommand)]
        sub: DesignCmd,
    },
    /// Exhaustive S-ring enumeration over a small group.
    Enumerate(EnumerateArgs),
    /// One-shot table reproductions.
    Repro {
        #[command(subcommand)]
        sub: ReproCmd,
    },
}

#[derive(Subcommand)]
enum GroupCmd {
    /// e.g. `group build cyclic:12`, `dihedral:38`, `gdihedral:e9`,
    /// `frobenius:2,3,7`, `psl2:7`, `g16`, `m:3,4`, `sd:16`, `q:16`,
    /// `sg:16,3`, `prodfile:<path>`, `sdfile:<path>`.
    Build { spec: String },
}

#[derive(Subcommand)]
enum SchemeCmd {
    /// Orbital scheme of a group action; prints rank and valencies.
    Inv(SchemeInvArgs),
    /// Fuse colors of a scheme file along a partition.
    Fuse(SchemeFuseArgs),
    /// Wreath product of two scheme files.
    Wreath(SchemeWreathArgs),
}

#[derive(Args)]
struct SchemeInvArgs {
    /// Group constructor spec (regular action unless --action is given).
    #[arg(long, conflicts_with = "group_file")]
    group: Option<String>,
    /// Permutation-group generator file to use directly.
    #[arg(long)]
    group_file: Option<PathBuf>,
    /// `coset:<g1,g2,...>`: act on the cosets of the subgroup generated by
    /// the listed elements (0-based indices into the group's ordering).
    #[arg(long)]
    action: Option<String>,
    /// Write the scheme matrix to this file.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct SchemeFuseArgs {
    #[arg(long)]
    scheme: PathBuf,
    /// Partition of the nonreflexive colors, e.g. `1,3|2|4,5|6,7`.
    #[arg(long)]
    pi: String,
    /// Relabel colors by a valency pattern before applying the partition.
    #[arg(long)]
    by_valency: Option<String>,
    /// With --by-valency: the color at this pattern position must be a
    /// disjoint union of complete graphs.
    #[arg(long)]
    clique: Vec<usize>,
    /// Negation of --clique for a pattern position.
    #[arg(long)]
    not_clique: Vec<usize>,
    /// The color at this position must be symmetric and connected.
    #[arg(long)]
    connected: Vec<usize>,
    /// Negation of --connected for a pattern position.
    #[arg(long)]
    not_connected: Vec<usize>,
    /// The two positions must be each other's transposes, e.g. `--pair 4,5`.
    #[arg(long)]
    pair: Vec<String>,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct SchemeWreathArgs {
    #[arg(long)]
    bottom: PathBuf,
    #[arg(long)]
    top: PathBuf,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct AutArgs {
    #[arg(long)]
    scheme: PathBuf,
    /// Assert the verdict: `schurian` or `non-schurian`.
    #[arg(long)]
    expect: Option<String>,
}

#[derive(Subcommand)]
enum SringCmd {
    /// Validate a partition file as an S-ring over a group and decide schurity.
    Schurian(SringSchurianArgs),
    /// The rank-4 difference-set S-ring over a generalized dihedral group.
    Diffset(SringDiffsetArgs),
}

#[derive(Args)]
struct SringSchurianArgs {
    #[arg(long)]
    group: String,
    /// Partition file: one class per line, 0-based element indices.
    #[arg(long)]
    partition: PathBuf,
    #[arg(long)]
    expect: Option<String>,
}

#[derive(Args)]
struct SringDiffsetArgs {
    /// Paley parameter: prime power q ≡ 3 (mod 4).
    #[arg(long, conflicts_with = "singer")]
    q: Option<usize>,
    /// Singer parameters `q,d`.
    #[arg(long)]
    singer: Option<String>,
    #[arg(long)]
    expect: Option<String>,
}

#[derive(Subcommand)]
enum DesignCmd {
    /// Difference-set parameters and the transitivity profile of the design.
    Check(DesignCheckArgs),
}

#[derive(Args)]
struct DesignCheckArgs {
    #[arg(long, conflicts_with = "singer")]
    q: Option<usize>,
    #[arg(long)]
    singer: Option<String>,
}

#[derive(Args)]
struct EnumerateArgs {
    #[arg(long)]
    group: String,
    /// Also decide schurity of every S-ring.
    #[arg(long)]
    census: bool,
    /// Node budget for the search.
    #[arg(long, default_value_t = 50_000_000)]
    budget: u64,
    #[arg(long, value_parser = parse_format, default_value = "tsv")]
    format: TableFormat,
}

#[derive(Subcommand)]
enum ReproCmd {
    /// Non-schurian schemes for small groups, from bundled fixture files.
    Table1(Table1Args),
    /// Frobenius-action rows: fixed-point counts and subgroup embeddings.
    Table2(Table2Args),
    /// Schurity of the Paley difference-set S-rings for p = 7, 11, 19, 23.
    Cor54(Cor54Args),
}

#[derive(Args)]
struct Table1Args {
    /// Fixture directory (defaults to $SCHUR_FIXTURES, then ./fixtures).
    #[arg(long)]
    fixtures: Option<PathBuf>,
    #[arg(long, value_parser = parse_format, default_value = "tsv")]
    format: TableFormat,
}

#[derive(Args)]
struct Table2Args {
    #[arg(long, value_parser = parse_format, default_value = "tsv")]
    format: TableFormat,
}

#[derive(Args)]
struct Cor54Args {
    /// Assert the expected verdict pattern (schurian for 7 and 11 only).
    #[arg(long)]
    expect: bool,
    #[arg(long, value_parser = parse_format, default_value = "tsv")]
    format: TableFormat,
}

fn parse_format(s: &str) -> std::result::Result<TableFormat, String> {
    match s {
        "tsv" => Ok(TableFormat::Tsv),
        "json" => Ok(TableFormat::Json),
        _ => Err(format!("unknown format {s:?}")),
    }
}

/// Entry point used by the binary; returns the process exit code.
pub fn run() -> i32 {
    let cli = Cli::parse();
    match dispatch(cli) {
        Ok(true) => 0,
        Ok(false) => 1,
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}

fn dispatch(cli: Cli) -> Result<bool> {
    let opts = SearchOptions::default();
    match cli.command {
        Command::Group { sub: GroupCmd::Build { spec } } => {
            let g = parse_group_spec(&spec)?;
            print_group_profile(&g);
            Ok(true)
        }
        Command::Scheme { sub } => match sub {
            SchemeCmd::Inv(args) => scheme_inv(args),
            SchemeCmd::Fuse(args) => scheme_fuse(args),
            SchemeCmd::Wreath(args) => scheme_wreath(args),
        },
        Command::Aut(args) => aut_cmd(args, &opts),
        Command::Sring { sub } => match sub {
            SringCmd::Schurian(args) => sring_schurian(args, &opts),
            SringCmd::Diffset(args) => sring_diffset(args, &opts),
        },
        Command::Design { sub: DesignCmd::Check(args) } => design_check(args, &opts),
        Command::Enumerate(args) => enumerate_cmd(args, cli.jobs, &opts),
        Command::Repro { sub } => match sub {
            ReproCmd::Table1(args) => repro_table1(args, &opts),
            ReproCmd::Table2(args) => repro_table2(args),
            ReproCmd::Cor54(args) => repro_cor54(args, &opts),
        },
    }
}

// ---------------------------------------------------------------------------
// Group specs
// ---------------------------------------------------------------------------

/// Parses constructor specs like `cyclic:12`, `c12`, `e9`, `dihedral:38`,
/// `gdihedral:e9`, `frobenius:2,3,7`, `psl2:7`, `g16`, `m:3,4`, `sd:16`,
/// `q:16`, `s4`, `a5`, `sg:16,3`, `prodfile:<path>`, `sdfile:<path>`.
pub fn parse_group_spec(spec: &str) -> Result<FiniteGroup> {
    let lower = spec.trim().to_lowercase();
    let (head, tail) = match lower.split_once(':') {
        Some((h, t)) => (h, t),
        None => (lower.as_str(), ""),
    };
    let nums = |s: &str| -> Result<Vec<usize>> {
        s.split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Parameter(format!("bad number {t:?} in spec {spec:?}")))
            })
            .collect()
    };
    match head {
        "cyclic" => Ok(groups::cyclic(nums(tail)?[0])),
        "elementary" => {
            let v = nums(tail)?;
            Ok(groups::elementary_abelian(v[0], v[1] as u32))
        }
        "dihedral" => groups::dihedral(nums(tail)?[0]),
        "gdihedral" => {
            let inner = parse_group_spec(tail)?;
            groups::generalized_dihedral(&inner)
        }
        "frobenius" => {
            let v = nums(tail)?;
            groups::frobenius_field(v[0], v[1] as u32, v[2])
        }
        "psl2" => groups::psl2(nums(tail)?[0]),
        "g16" => Ok(groups::g16()),
        "m" => {
            let v = nums(tail)?;
            groups::modular_m(v[0], v[1] as u32)
        }
        "sd" => groups::semidihedral(nums(tail)?[0]),
        "q" => groups::quaternion_generalized(nums(tail)?[0]),
        "sg" => {
            let v = nums(tail)?;
            witness::catalogue_group(v[0], v[1])
        }
        "prodfile" => {
            let text = std::fs::read_to_string(tail)?;
            let specs: Vec<&str> = text
                .lines()
                .map(str::trim)
                .filter(|l| !l.is_empty() && !l.starts_with('#'))
                .collect();
            if specs.len() != 2 {
                return Err(Error::Parameter("product file needs two group specs".into()));
            }
            Ok(groups::direct_product(
                &parse_group_spec(specs[0])?,
                &parse_group_spec(specs[1])?,
            ))
        }
        "sdfile" => parse_semidirect_file(tail),
        _ => parse_short_name(&lower, spec),
    }
}

/// Short names: `c12`, `e9`, `d16`, `q16`, `sd16`, `m16`, `s4`, `a5`.
fn parse_short_name(lower: &str, orig: &str) -> Result<FiniteGroup> {
    let split = |prefix: &str| -> Option<usize> {
        lower
            .strip_prefix(prefix)
            .and_then(|rest| rest.parse::<usize>().ok())
    };
    if lower == "g16" {
        return Ok(groups::g16());
    }
    if let Some(n) = split("sd") {
        return groups::semidihedral(n);
    }
    if let Some(n) = split("c") {
        return Ok(groups::cyclic(n));
    }
    if let Some(n) = split("e") {
        let (p, k) = crate::ff::prime_power(n as u64)
            .ok_or_else(|| Error::Parameter(format!("E{n} needs a prime power order")))?;
        return Ok(groups::elementary_abelian(p as usize, k));
    }
    if let Some(n) = split("d") {
        return groups::dihedral(n);
    }
    if let Some(n) = split("q") {
        return groups::quaternion_generalized(n);
    }
    if let Some(n) = split("m") {
        let (p, k) = crate::ff::prime_power(n as u64)
            .ok_or_else(|| Error::Parameter(format!("M{n} needs a prime power order")))?;
        return groups::modular_m(p as usize, k);
    }
    if let Some(n) = split("s") {
        return groups::symmetric(n);
    }
    if let Some(n) = split("a") {
        return groups::alternating(n);
    }
    Err(Error::Parameter(format!("unknown group spec {orig:?}")))
}

/// Semidirect product from a file: first line the normal subgroup spec,
/// second the acting group spec, then one automorphism of N per H element as
/// a 1-based image list.
fn parse_semidirect_file(path: &str) -> Result<FiniteGroup> {
    let text = std::fs::read_to_string(path)?;
    let lines: Vec<&str> = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .collect();
    if lines.len() < 2 {
        return Err(Error::Parameter("semidirect file too short".into()));
    }
    let n_grp = parse_group_spec(lines[0])?;
    let h_grp = parse_group_spec(lines[1])?;
    if lines.len() != 2 + h_grp.order() {
        return Err(Error::Parameter(format!(
            "need {} automorphism lines, found {}",
            h_grp.order(),
            lines.len() - 2
        )));
    }
    let mut action = Vec::new();
    for line in &lines[2..] {
        let images: Vec<usize> = line
            .split_whitespace()
            .map(|t| {
                t.parse::<usize>()
                    .ok()
                    .and_then(|v| v.checked_sub(1))
                    .ok_or_else(|| Error::Parameter(format!("bad image {t:?}")))
            })
            .collect::<Result<_>>()?;
        action.push(images);
    }
    groups::semidirect(&n_grp, &h_grp, &action)
}

fn print_group_profile(g: &FiniteGroup) {
    println!("label:    {}", g.label().unwrap_or("(unnamed)"));
    println!("order:    {}", g.order());
    println!("abelian:  {}", g.is_abelian());
    println!("exponent: {}", g.exponent());
    println!("center:   {}", g.center().len());
    let mut sizes: Vec<usize> = g.conjugacy_classes().iter().map(|c| c.len()).collect();
    sizes.sort_unstable();
    println!("classes:  {sizes:?}");
}

// ---------------------------------------------------------------------------
// Scheme commands
// ---------------------------------------------------------------------------

fn load_scheme(path: &Path) -> Result<AssociationScheme> {
    let text = std::fs::read_to_string(path)?;
    io::parse_scheme_file(&text)
}

fn write_or_print_scheme(scheme: &AssociationScheme, out: Option<&Path>) -> Result<()> {
    if let Some(path) = out {
        std::fs::write(path, io::emit_scheme(scheme))?;
    }
    Ok(())
}

fn print_scheme_summary(scheme: &AssociationScheme) {
    println!("points:    {}", scheme.size());
    println!("rank:      {}", scheme.rank());
    println!("valencies: {:?}", scheme.valencies());
}

fn scheme_inv(args: SchemeInvArgs) -> Result<bool> {
    let gamma: PermGroup = if let Some(path) = &args.group_file {
        let text = std::fs::read_to_string(path)?;
        let group = io::parse_permgroup_file(&text)?;
        println!("group order: {}", group.order());
        group
    } else {
        let spec = args
            .group
            .as_deref()
            .ok_or_else(|| Error::Parameter("need --group or --group-file".into()))?;
        let g = parse_group_spec(spec)?;
        match &args.action {
            None => g.regular_representation(groups::Side::Right),
            Some(action) => {
                let rest = action
                    .strip_prefix("coset:")
                    .ok_or_else(|| Error::Parameter(format!("unknown action {action:?}")))?;
                let seeds: Vec<usize> = rest
                    .split(',')
                    .map(|t| {
                        t.trim()
                            .parse::<usize>()
                            .map_err(|_| Error::Parameter(format!("bad element {t:?}")))
                    })
                    .collect::<Result<_>>()?;
                let sub = g.subgroup_generated(&seeds);
                g.coset_action(&sub)?.group
            }
        }
    };
    let scheme = scheme::orbital_scheme(&gamma)?;
    print_scheme_summary(&scheme);
    write_or_print_scheme(&scheme, args.out.as_deref())?;
    Ok(true)
}

fn parse_color_partition(pi: &str) -> Result<ColorPartition> {
    let classes: Vec<Vec<u32>> = pi
        .split('|')
        .map(|class| {
            class
                .split(',')
                .map(|t| {
                    t.trim()
                        .parse::<u32>()
                        .map_err(|_| Error::Parameter(format!("bad color {t:?}")))
                })
                .collect::<Result<Vec<u32>>>()
        })
        .collect::<Result<_>>()?;
    Ok(ColorPartition::new(classes))
}

fn scheme_fuse(args: SchemeFuseArgs) -> Result<bool> {
    let scheme = load_scheme(&args.scheme)?;
    // With --by-valency, the partition indices refer to pattern positions.
    let partition = if let Some(pattern_text) = &args.by_valency {
        let pattern: Vec<u32> = pattern_text
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<u32>()
                    .map_err(|_| Error::Parameter(format!("bad valency {t:?}")))
            })
            .collect::<Result<_>>()?;
        let mut discriminators = Vec::new();
        for &p in &args.clique {
            discriminators.push(scheme::Discriminator::CliqueUnion(p));
        }
        for &p in &args.not_clique {
            discriminators.push(scheme::Discriminator::NotCliqueUnion(p));
        }
        for &p in &args.connected {
            discriminators.push(scheme::Discriminator::ConnectedSymmetric(p));
        }
        for &p in &args.not_connected {
            discriminators.push(scheme::Discriminator::NotConnectedSymmetric(p));
        }
        for pair in &args.pair {
            let (a, b) = pair
                .split_once(',')
                .ok_or_else(|| Error::Parameter(format!("bad pair {pair:?}")))?;
            let a = a.trim().parse::<usize>().map_err(|_| {
                Error::Parameter(format!("bad pair position {a:?}"))
            })?;
            let b = b.trim().parse::<usize>().map_err(|_| {
                Error::Parameter(format!("bad pair position {b:?}"))
            })?;
            discriminators.push(scheme::Discriminator::TransposePair(a, b));
        }
        let labels = scheme::label_colors_by_valency(&scheme, &pattern, &discriminators)?;
        let positions = parse_color_partition(&args.pi)?;
        ColorPartition::new(
            positions
                .classes
                .iter()
                .map(|class| class.iter().map(|&p| labels[(p - 1) as usize]).collect())
                .collect(),
        )
    } else {
        parse_color_partition(&args.pi)?
    };
    match scheme.fusion(&partition)? {
        scheme::FusionOutcome::Scheme(fused) => {
            println!("fusion is a scheme");
            print_scheme_summary(&fused);
            write_or_print_scheme(&fused, args.out.as_deref())?;
            Ok(true)
        }
        scheme::FusionOutcome::NotAScheme(v) => {
            println!("fusion is not a scheme: {v}");
            Ok(true)
        }
    }
}

fn scheme_wreath(args: SchemeWreathArgs) -> Result<bool> {
    let bottom = load_scheme(&args.bottom)?;
    let top = load_scheme(&args.top)?;
    let w = scheme::wreath(&bottom, &top);
    print_scheme_summary(&w);
    write_or_print_scheme(&w, args.out.as_deref())?;
    Ok(true)
}

fn aut_cmd(args: AutArgs, opts: &SearchOptions) -> Result<bool> {
    let scheme = load_scheme(&args.scheme)?;
    let (aut, stats) = autsearch::aut_scheme_with(&scheme, opts)?;
    let closed_rank = aut.rank_on_pairs();
    let schurian = closed_rank == scheme.rank();
    println!("rank:            {}", scheme.rank());
    println!("|aut|:           {}", aut.order());
    println!("rank(inv(aut)):  {closed_rank}");
    println!("search nodes:    {}", stats.nodes);
    println!(
        "verdict:         {}",
        if schurian { "schurian" } else { "non-schurian" }
    );
    check_expectation(args.expect.as_deref(), schurian)
}

fn check_expectation(expect: Option<&str>, schurian: bool) -> Result<bool> {
    match expect {
        None => Ok(true),
        Some("schurian") => Ok(schurian),
        Some("non-schurian") => Ok(!schurian),
        Some(other) => Err(Error::Parameter(format!(
            "unknown expectation {other:?}; use schurian or non-schurian"
        ))),
    }
}

// ---------------------------------------------------------------------------
// S-ring commands
// ---------------------------------------------------------------------------

fn sring_schurian(args: SringSchurianArgs, opts: &SearchOptions) -> Result<bool> {
    let g = parse_group_spec(&args.group)?;
    let text = std::fs::read_to_string(&args.partition)?;
    let classes: Vec<Vec<usize>> = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(|line| {
            line.split_whitespace()
                .map(|t| {
                    t.parse::<usize>()
                        .map_err(|_| Error::Parameter(format!("bad element {t:?}")))
                })
                .collect::<Result<Vec<usize>>>()
        })
        .collect::<Result<_>>()?;
    let sring = sring::SRing::from_partition(&g, &classes)?;
    let verdict = sring::is_schurian(&sring, opts)?;
    println!("rank:    {}", sring.rank());
    println!("|aut|:   {}", verdict.aut().order());
    println!(
        "verdict: {}",
        if verdict.is_schurian() { "schurian" } else { "non-schurian" }
    );
    check_expectation(args.expect.as_deref(), verdict.is_schurian())
}

fn build_diffset(q: Option<usize>, singer: Option<&str>) -> Result<designs::DifferenceSet> {
    match (q, singer) {
        (Some(q), None) => designs::paley_difference_set(q),
        (None, Some(text)) => {
            let parts: Vec<usize> = text
                .split(',')
                .map(|t| {
                    t.trim()
                        .parse::<usize>()
                        .map_err(|_| Error::Parameter(format!("bad singer parameter {t:?}")))
                })
                .collect::<Result<_>>()?;
            if parts.len() != 2 {
                return Err(Error::Parameter("singer needs q,d".into()));
            }
            designs::singer_difference_set(parts[0], parts[1] as u32)
        }
        _ => Err(Error::Parameter("need exactly one of --q or --singer".into())),
    }
}

fn sring_diffset(args: SringDiffsetArgs, opts: &SearchOptions) -> Result<bool> {
    let ds = build_diffset(args.q, args.singer.as_deref())?;
    println!("difference set: (n,k,λ) = ({}, {}, {})", ds.n, ds.k, ds.lambda);
    println!("set: {:?}", ds.set);
    let gdih = groups::generalized_dihedral(&ds.group)?;
    let sring = sring::difference_set_sring(&gdih, ds.n, &ds.set)?;
    let ok = check_diffset_identities(&sring, ds.n as u64, ds.k as u64, ds.lambda as u64);
    println!("structure-constant identities: {}", if ok { "match" } else { "MISMATCH" });
    let verdict = sring::is_schurian(&sring, opts)?;
    println!("|aut|:   {}", verdict.aut().order());
    println!(
        "verdict: {}",
        if verdict.is_schurian() { "schurian" } else { "non-schurian" }
    );
    Ok(check_expectation(args.expect.as_deref(), verdict.is_schurian())? && ok)
}

/// The four products of the rank-4 difference-set S-ring, as exact integer
/// identities on the structure constants:
///
/// ```text
/// A·A = (n-1)e + (n-2)A
/// A·X = (k-1)X + kY
/// A·Y = (n-k)X + (n-k-1)Y
/// X·Y = (k-λ)A
/// ```
///
/// The last follows from X·Y = D·H − D·D^{-1} = k(e+A) − (ke + λA); the sum
/// rule Σ_Z c^Z_{XY}|Z| = |X||Y| pins it: (k-λ)(n-1) = k(n-k).
pub fn check_diffset_identities(s: &sring::SRing, n: u64, k: u64, lambda: u64) -> bool {
    // Identify classes by size rather than position: class 1 is A (size
    // n-1); of the remaining two, X has size k. Ties cannot happen since
    // k(k-1) = λ(n-1) forces k < n-k for a nontrivial difference set with
    // λ < k.
    if s.rank() != 4 {
        return false;
    }
    let sizes: Vec<u64> = s.classes().iter().map(|c| c.len() as u64).collect();
    let a = 1usize;
    if sizes[a] != n - 1 {
        return false;
    }
    let (x, y) = if sizes[2] == k { (2, 3) } else { (3, 2) };
    if sizes[x] != k || sizes[y] != n - k {
        return false;
    }
    // A·A = (n-1)e + (n-2)A
    s.constant(a, a, 0) == n - 1
        && s.constant(a, a, a) == n - 2
        && s.constant(a, a, x) == 0
        && s.constant(a, a, y) == 0
        // A·X = (k-1)X + kY
        && s.constant(a, x, 0) == 0
        && s.constant(a, x, a) == 0
        && s.constant(a, x, x) == k - 1
        && s.constant(a, x, y) == k
        // A·Y = (n-k)X + (n-k-1)Y
        && s.constant(a, y, 0) == 0
        && s.constant(a, y, a) == 0
        && s.constant(a, y, x) == n - k
        && s.constant(a, y, y) == n - k - 1
        // X·Y = (k-λ)A
        && s.constant(x, y, 0) == 0
        && s.constant(x, y, a) == k - lambda
        && s.constant(x, y, x) == 0
        && s.constant(x, y, y) == 0
}

// ---------------------------------------------------------------------------
// Designs, enumeration
// ---------------------------------------------------------------------------

fn design_check(args: DesignCheckArgs, opts: &SearchOptions) -> Result<bool> {
    let ds = build_diffset(args.q, args.singer.as_deref())?;
    println!("parameters: (n,k,λ) = ({}, {}, {})", ds.n, ds.k, ds.lambda);
    let design = designs::dev(&ds);
    design.validate()?;
    let profile = designs::transitivity_profile(&design, opts)?;
    println!("2-transitive:        {}", profile.two_transitive);
    println!("flag-transitive:     {}", profile.flag_transitive);
    println!("antiflag-transitive: {}", profile.antiflag_transitive);
    Ok(true)
}

fn enumerate_cmd(args: EnumerateArgs, jobs: usize, opts: &SearchOptions) -> Result<bool> {
    let g = parse_group_spec(&args.group)?;
    let budget = EnumerationBudget {
        node_cap: args.budget,
        jobs,
        ..EnumerationBudget::default()
    };
    if args.census {
        let rows = enumerate::schurity_census(&g, &budget, opts)?;
        let mut table = Table::new(&["rank", "classes", "verdict", "aut_order"]);
        let mut all_schurian = true;
        for row in &rows {
            all_schurian &= row.schurian;
            table.push_row(vec![
                row.rank.to_string(),
                format_classes(&row.classes),
                if row.schurian { "schurian".into() } else { "non-schurian".into() },
                row.aut_order.to_string(),
            ]);
        }
        print!("{}", table.emit(args.format));
        println!(
            "# {} S-rings; group is {}Schur",
            rows.len(),
            if all_schurian { "" } else { "NOT " }
        );
    } else {
        let srings = enumerate::enumerate_srings(&g, &budget)?;
        let mut table = Table::new(&["rank", "classes"]);
        for s in &srings {
            table.push_row(vec![s.rank().to_string(), format_classes(s.classes())]);
        }
        print!("{}", table.emit(args.format));
        println!("# {} S-rings", srings.len());
    }
    Ok(true)
}

fn format_classes(classes: &[Vec<usize>]) -> String {
    classes
        .iter()
        .map(|c| {
            c.iter()
                .map(|x| x.to_string())
                .collect::<Vec<_>>()
                .join(",")
        })
        .collect::<Vec<_>>()
        .join("|")
}

// ---------------------------------------------------------------------------
// Reproductions
// ---------------------------------------------------------------------------

/// The small-group rows: (group order, group index, scheme order, scheme
/// index, rank of the scheme, rank of the orbital scheme of its
/// automorphism group).
pub const TABLE1_ROWS: &[(usize, usize, usize, usize, usize, usize)] = &[
    (16, 3, 16, 59, 6, 7),
    (16, 4, 16, 94, 7, 10),
    (16, 6, 16, 6, 3, 4),
    (16, 8, 16, 6, 3, 4),
    (16, 9, 16, 59, 6, 7),
    (16, 11, 16, 6, 3, 4),
    (16, 12, 16, 59, 6, 7),
    (18, 3, 18, 41, 6, 8),
    (18, 4, 18, 41, 6, 8),
    (24, 1, 24, 191, 7, 24),
    (24, 3, 24, 308, 8, 9),
    (24, 4, 24, 304, 8, 14),
    (24, 5, 24, 299, 8, 14),
    (24, 7, 24, 304, 8, 14),
    (24, 8, 24, 299, 8, 14),
    (24, 10, 24, 304, 8, 14),
    (24, 11, 24, 308, 8, 9),
    (24, 12, 24, 17, 4, 6),
    (24, 13, 24, 106, 6, 12),
    (24, 14, 24, 299, 8, 14),
    (27, 3, 27, 382, 4, 6),
    (27, 4, 27, 382, 4, 6),
];

pub fn fixtures_dir(explicit: Option<&Path>) -> PathBuf {
    if let Some(p) = explicit {
        return p.to_path_buf();
    }
    if let Ok(env) = std::env::var("SCHUR_FIXTURES") {
        return PathBuf::from(env);
    }
    PathBuf::from("fixtures")
}

/// One evaluated table-1 row.
pub struct Table1Outcome {
    pub group_id: (usize, usize),
    pub scheme_id: (usize, usize),
    pub status: Table1Status,
}

#[derive(PartialEq, Eq, Debug)]
pub enum Table1Status {
    /// Ranks and the regular subgroup all match.
    Pass,
    /// Fixture file missing; reported, never silently passed.
    SkippedMissingFixture,
    Fail(String),
}

/// Evaluates every table row against the fixture directory.
pub fn run_table1(dir: &Path, opts: &SearchOptions) -> Result<Vec<Table1Outcome>> {
    let mut out = Vec::new();
    let mut cache: std::collections::HashMap<(usize, usize), (AssociationScheme, PermGroup, usize)> =
        std::collections::HashMap::new();
    for &(go, gi, so, si, rk_x, rk_gamma) in TABLE1_ROWS {
        let path = dir.join(format!("as{so}_no{si}.txt"));
        if !path.exists() {
            out.push(Table1Outcome {
                group_id: (go, gi),
                scheme_id: (so, si),
                status: Table1Status::SkippedMissingFixture,
            });
            continue;
        }
        let status = (|| -> Result<Table1Status> {
            let (scheme, aut, closed_rank) = match cache.get(&(so, si)) {
                Some(hit) => hit.clone(),
                None => {
                    let scheme = load_scheme(&path)?;
                    let aut = autsearch::aut_scheme_with(&scheme, opts)?.0;
                    let closed_rank = aut.rank_on_pairs();
                    cache.insert((so, si), (scheme.clone(), aut.clone(), closed_rank));
                    cache[&(so, si)].clone()
                }
            };
            if scheme.rank() != rk_x {
                return Ok(Table1Status::Fail(format!(
                    "scheme rank {} != expected {rk_x}",
                    scheme.rank()
                )));
            }
            if closed_rank != rk_gamma {
                return Ok(Table1Status::Fail(format!(
                    "rank(inv(aut)) {} != expected {rk_gamma}",
                    closed_rank
                )));
            }
            let g = witness::catalogue_group(go, gi)?;
            let found = autsearch::find_regular_subgroup(&aut, &g, opts)?;
            if found.is_none() {
                return Ok(Table1Status::Fail("no regular subgroup of the row's type".into()));
            }
            Ok(Table1Status::Pass)
        })()?;
        out.push(Table1Outcome {
            group_id: (go, gi),
            scheme_id: (so, si),
            status,
        });
    }
    Ok(out)
}

fn repro_table1(args: Table1Args, opts: &SearchOptions) -> Result<bool> {
    let dir = fixtures_dir(args.fixtures.as_deref());
    let outcomes = run_table1(&dir, opts)?;
    let mut table = Table::new(&["G", "X", "rk(X)", "rk(Γ)", "status"]);
    let mut ok = true;
    for (outcome, row) in outcomes.iter().zip(TABLE1_ROWS) {
        let status = match &outcome.status {
            Table1Status::Pass => "pass".to_string(),
            Table1Status::SkippedMissingFixture => "skipped (fixture absent)".to_string(),
            Table1Status::Fail(msg) => {
                ok = false;
                format!("FAIL: {msg}")
            }
        };
        table.push_row(vec![
            format!("[{},{}]", outcome.group_id.0, outcome.group_id.1),
            format!("[{},{}]", outcome.scheme_id.0, outcome.scheme_id.1),
            row.4.to_string(),
            row.5.to_string(),
            status,
        ]);
    }
    print!("{}", table.emit(args.format));
    Ok(ok)
}

/// The Frobenius-action rows: (k, p, |fixed points|, contained group).
pub const TABLE2_ROWS: &[(u32, usize, usize, &str)] = &[
    (3, 3, 2, "A4xC2"),
    (3, 7, 1, "E8:C7"),
    (4, 3, 1, "E16:C3"),
    (4, 3, 4, "A4xC2"),
    (4, 5, 1, "E16:C5"),
    (4, 7, 2, "E8:C7"),
    (5, 3, 8, "A4xC2"),
    (5, 3, 2, "E16:C3"),
    (5, 5, 2, "E16:C5"),
    (5, 7, 4, "E8:C7"),
    (5, 31, 1, "E32:C31"),
];

fn table2_reference_group(label: &str) -> Result<FiniteGroup> {
    match label {
        "A4xC2" => Ok(groups::direct_product(
            &groups::alternating(4)?,
            &groups::cyclic(2),
        )),
        "E8:C7" => groups::frobenius_field(2, 3, 7),
        "E16:C3" => groups::frobenius_field(2, 4, 3),
        "E16:C5" => groups::frobenius_field(2, 4, 5),
        "E32:C31" => groups::frobenius_field(2, 5, 31),
        _ => Err(Error::Parameter(format!("unknown reference group {label}"))),
    }
}

/// Builds `E_{2^k} : C_p` with the generator acting as multiplication by an
/// order-`p` field element on a subfield part `E_{2^j}` and trivially on the
/// rest, where `j` is chosen so the fixed subgroup has the requested size.
pub fn table2_ambient(k: u32, p: usize, fixed: usize) -> Result<(FiniteGroup, usize)> {
    let j = k - fixed.trailing_zeros();
    let field = crate::ff::Field::new(1u64 << j)?;
    let zeta = field.element_of_order(p as u64)?;
    let e = groups::elementary_abelian(2, k);
    let c = groups::cyclic(p);
    let low_mask = (1usize << j) - 1;
    let mut action = Vec::with_capacity(p);
    let mut map: Vec<usize> = (0..(1usize << k)).collect();
    for _ in 0..p {
        action.push(map.clone());
        map = map
            .iter()
            .map(|&v| {
                let low = v & low_mask;
                let high = v & !low_mask;
                field.mul(low as u64, zeta) as usize | high
            })
            .collect();
    }
    let ambient = groups::semidirect(&e, &c, &action)?;
    // Fixed points of the generator inside the field part.
    let fixed_count = (0..(1usize << k))
        .filter(|&v| action[1][v] == v)
        .count();
    Ok((ambient, fixed_count))
}

pub struct Table2Outcome {
    pub k: u32,
    pub p: usize,
    pub c: usize,
    pub reference: &'static str,
    pub fixed_matches: bool,
    pub embedded: bool,
}

pub fn run_table2() -> Result<Vec<Table2Outcome>> {
    let mut out = Vec::new();
    for &(k, p, c, label) in TABLE2_ROWS {
        let (ambient, fixed_count) = table2_ambient(k, p, c)?;
        let reference = table2_reference_group(label)?;
        let embedded = groups::embeds_into(&reference, &ambient).is_some();
        out.push(Table2Outcome {
            k,
            p,
            c,
            reference: label,
            fixed_matches: fixed_count == c,
            embedded,
        });
    }
    Ok(out)
}

fn repro_table2(args: Table2Args) -> Result<bool> {
    let outcomes = run_table2()?;
    let mut table = Table::new(&["k", "p", "c", "K", "fixed", "embeds"]);
    let mut ok = true;
    for o in &outcomes {
        ok &= o.fixed_matches && o.embedded;
        table.push_row(vec![
            o.k.to_string(),
            o.p.to_string(),
            o.c.to_string(),
            o.reference.to_string(),
            o.fixed_matches.to_string(),
            o.embedded.to_string(),
        ]);
    }
    print!("{}", table.emit(args.format));
    Ok(ok)
}

/// Schurity of the Paley difference-set S-ring over the dihedral group of
/// order 2p, for one prime.
pub struct Cor54Row {
    pub p: usize,
    pub identities_ok: bool,
    pub schurian: bool,
    pub aut_order: num_bigint::BigUint,
}

pub fn run_cor54(ps: &[usize], opts: &SearchOptions) -> Result<Vec<Cor54Row>> {
    let mut out = Vec::new();
    for &p in ps {
        let ds = designs::paley_difference_set(p)?;
        let gdih = groups::generalized_dihedral(&ds.group)?;
        let s = sring::difference_set_sring(&gdih, ds.n, &ds.set)?;
        let identities_ok =
            check_diffset_identities(&s, ds.n as u64, ds.k as u64, ds.lambda as u64);
        let verdict = sring::is_schurian(&s, opts)?;
        out.push(Cor54Row {
            p,
            identities_ok,
            schurian: verdict.is_schurian(),
            aut_order: verdict.aut().order(),
        });
    }
    Ok(out)
}

fn repro_cor54(args: Cor54Args, opts: &SearchOptions) -> Result<bool> {
    let ps = [7usize, 11, 19, 23];
    let rows = run_cor54(&ps, opts)?;
    let mut table = Table::new(&["p", "identities", "verdict", "aut_order"]);
    for row in &rows {
        table.push_row(vec![
            row.p.to_string(),
            if row.identities_ok { "match".into() } else { "MISMATCH".into() },
            if row.schurian { "schurian".into() } else { "non-schurian".into() },
            row.aut_order.to_string(),
        ]);
    }
    print!("{}", table.emit(args.format));
    if args.expect {
        let ok = rows
            .iter()
            .all(|r| r.identities_ok && (r.schurian == (r.p <= 11)));
        Ok(ok)
    } else {
        Ok(true)
    }
}
