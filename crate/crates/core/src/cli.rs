//! The `obstruct` command line: argument parsing, command implementations
//! and the self-test suites. The binary only forwards `std::env::args`.

use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::arith::{is_prime, kronecker, primes_up_to};
use crate::cohomology::{cohomology_basis, is_coboundary, pullback, SmallGroup};
use crate::cup_obstruct::{
    cohomology_summary, search_family_a, search_family_b, triple_cup, triple_cup_complement,
    verdict, FamilyHit, GroupFamily, CUP_SQUARE_NOTE,
};
use crate::error::{Error, Result};
use crate::matrix_groups::{
    aut_group_cocycle, m_group_cocycle, perfectness_check, psl_order, ObstructionCocycle,
    DEFAULT_GROUP_CAP,
};
use crate::quad_field::{
    class_group_with, fundamental_discriminants, reduced_forms, ImagQuadField, QuadForm,
};
use crate::report::{
    class_group_cached, class_group_json, cohomology_json, cup_json, field_json, h1_json,
    obstruction_json, prime_discriminants_json, standard_field_notes, CacheStatus, ClassGroupCache,
    ReportEnvelope,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "obstruct",
    version,
    about = "Cup-product obstructions to unramified M(q^2) and Aut(PSL(2,q^2)) extensions of imaginary quadratic fields"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum GroupArg {
    M,
    Aut,
}

impl GroupArg {
    fn family(self) -> GroupFamily {
        match self {
            GroupArg::M => GroupFamily::M,
            GroupArg::Aut => GroupFamily::AutPSL,
        }
    }

    fn name(self) -> &'static str {
        match self {
            GroupArg::M => "m",
            GroupArg::Aut => "aut",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FamilyArg {
    A,
    B,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FaultArg {
    /// Replace the class-group composition law with a broken one.
    CorruptComposition,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Discriminant, class group and cohomology dimensions of Q(sqrt(m)).
    FieldInfo {
        #[arg(long, allow_negative_numbers = true)]
        m: i64,
    },
    /// Parity of x ∪ x ∪ y with its per-prime evidence.
    Cup {
        #[arg(long, allow_negative_numbers = true)]
        m: i64,
        #[arg(long, allow_hyphen_values = true)]
        x: String,
        #[arg(long, allow_hyphen_values = true)]
        y: String,
    },
    /// Realizability verdict; exit 0 obstructed, 3 inconclusive, 4 trivially blocked.
    Obstruct {
        #[arg(long, allow_negative_numbers = true)]
        m: i64,
        #[arg(long, value_enum)]
        group: GroupArg,
        #[arg(long)]
        q: u64,
    },
    /// Members of a prime family, one JSON line each, then a summary line.
    Search {
        #[arg(long, value_enum)]
        family: FamilyArg,
        #[arg(long = "max-prime")]
        max_prime: u64,
        #[arg(long)]
        jobs: Option<usize>,
    },
    /// The obstruction 3-cocycle of the group's crossed module.
    Cocycle {
        #[arg(long)]
        q: u64,
        #[arg(long, value_enum)]
        group: GroupArg,
    },
    /// Runs the oracle suites.
    Selftest {
        #[arg(long = "inject-fault", value_enum, hide = true)]
        inject_fault: Option<FaultArg>,
    },
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut impl Write, err: &mut impl Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            if e.use_stderr() {
                let _ = write!(err, "{text}");
            } else {
                let _ = write!(out, "{text}");
            }
            return code;
        }
    };
    let result = match cli.command {
        Command::FieldInfo { m } => cmd_field_info(m).map(print_one(out)),
        Command::Cup { m, x, y } => cmd_cup(m, &x, &y).map(print_one(out)),
        Command::Obstruct { m, group, q } => cmd_obstruct(m, group, q).map(print_one(out)),
        Command::Cocycle { q, group } => cmd_cocycle(q, group).map(print_one(out)),
        Command::Search {
            family,
            max_prime,
            jobs,
        } => cmd_search(family, max_prime, jobs).map(|lines| {
            for l in lines {
                let _ = writeln!(out, "{}", l.to_line());
            }
            EXIT_OK
        }),
        Command::Selftest { inject_fault } => {
            let faults = Faults {
                corrupt_composition: inject_fault == Some(FaultArg::CorruptComposition),
            };
            let results = selftest(faults);
            for r in &results {
                let _ = writeln!(
                    out,
                    "{} {}{}",
                    if r.passed { "PASS" } else { "FAIL" },
                    r.name,
                    if r.detail.is_empty() {
                        String::new()
                    } else {
                        format!(" ({})", r.detail)
                    }
                );
            }
            Ok(if results.iter().all(|r| r.passed) {
                EXIT_OK
            } else {
                EXIT_FAILURE
            })
        }
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            error_exit_code(&e)
        }
    }
}

fn print_one(out: &mut impl Write) -> impl FnMut((ReportEnvelope, i32)) -> i32 + '_ {
    move |(env, code)| {
        let _ = writeln!(out, "{}", env.to_pretty());
        code
    }
}

/// Input errors map to 2; internal inconsistencies and I/O to 1.
pub fn error_exit_code(e: &Error) -> i32 {
    match e {
        Error::Inconsistent(_) | Error::Io(_) | Error::Json(_) => EXIT_FAILURE,
        _ => EXIT_USAGE,
    }
}

pub fn cmd_field_info(m: i64) -> Result<(ReportEnvelope, i32)> {
    cmd_field_info_with_cache(m, ClassGroupCache::from_env().as_ref())
}

pub fn cmd_field_info_with_cache(
    m: i64,
    cache: Option<&ClassGroupCache>,
) -> Result<(ReportEnvelope, i32)> {
    let k = ImagQuadField::new(m)?;
    let (cg, status) = class_group_cached(&k, cache)?;
    let mut notes = standard_field_notes();
    if status == CacheStatus::Repaired {
        notes.push("cached class group failed validation and was recomputed".into());
    }
    let result = json!({
        "field": field_json(&k),
        "class_group": class_group_json(&cg),
        "t": k.num_prime_discriminants(),
        "prime_discriminants": prime_discriminants_json(&k),
        "cohomology": cohomology_json(&k),
        "h1": h1_json(&k),
        "genus_consistent": cg.two_rank() == k.genus_two_rank(),
    });
    Ok((
        ReportEnvelope::new("field-info", json!({ "m": m }), result, notes),
        EXIT_OK,
    ))
}

pub fn cmd_cup(m: i64, x: &str, y: &str) -> Result<(ReportEnvelope, i32)> {
    let k = ImagQuadField::new(m)?;
    let xc = k.parse_class(x)?;
    let yc = k.parse_class(y)?;
    let ev = triple_cup(&k, &xc, &yc)?;
    let result = json!({
        "field": field_json(&k),
        "h1": h1_json(&k),
        "cup": cup_json(&k, &ev),
    });
    let inputs = json!({ "m": m, "x": x, "y": y });
    Ok((
        ReportEnvelope::new("cup", inputs, result, vec![CUP_SQUARE_NOTE.into()]),
        EXIT_OK,
    ))
}

pub fn cmd_obstruct(m: i64, group: GroupArg, q: u64) -> Result<(ReportEnvelope, i32)> {
    let k = ImagQuadField::new(m)?;
    let r = verdict(&k, group.family(), q)?;
    let code = r.outcome.exit_code();
    let inputs = json!({ "m": m, "group": group.name(), "q": q });
    Ok((
        ReportEnvelope::new(
            "obstruct",
            inputs,
            obstruction_json(&r),
            standard_field_notes(),
        ),
        code,
    ))
}

fn cocycle_json(c: &ObstructionCocycle) -> Result<Value> {
    let group = c.table.group.group();
    let n = group.order();
    let mut table = Vec::with_capacity(n * n * n);
    for g in 0..n {
        for h in 0..n {
            for k in 0..n {
                table.push(json!([g, h, k, c.table.get(g, h, k) as u8]));
            }
        }
    }
    let support: Vec<Vec<usize>> = c.table.values.support();
    let class = c.table.classify()?;
    let m_table = m_group_cocycle(c.q)?;
    let mut pullbacks = serde_json::Map::new();
    for (name, map) in c.table.group.inclusions() {
        let pulled = pullback(&SmallGroup::cyclic(2), &group, &map, &c.table.values)?;
        let trivial = is_coboundary(&SmallGroup::cyclic(2), &pulled)?;
        let diff = pulled.add(&m_table.table.values);
        let matches_m = is_coboundary(&SmallGroup::cyclic(2), &diff)?;
        pullbacks.insert(
            name.replace(' ', "_"),
            json!({ "coboundary": trivial, "cohomologous_to_m_table": matches_m }),
        );
    }
    Ok(json!({
        "quotient": c.table.group,
        "element_encoding": "Z/2: 0,1; Z/2 x Z/2: (e,f) at index e + 2f",
        "table": table,
        "support": support,
        "is_cocycle": c.table.is_cocycle(),
        "class": class.to_string(),
        "pullbacks": Value::Object(pullbacks),
    }))
}

pub fn cmd_cocycle(q: u64, group: GroupArg) -> Result<(ReportEnvelope, i32)> {
    crate::arith::odd_prime_power(q)?;
    let order = q.checked_pow(6).map(|_| psl_order(q)).unwrap_or(u64::MAX);
    if order > DEFAULT_GROUP_CAP {
        return Err(Error::GroupTooLarge {
            order,
            cap: DEFAULT_GROUP_CAP,
        });
    }
    let family = group.family();
    let c = match family {
        GroupFamily::M => m_group_cocycle(q)?,
        GroupFamily::AutPSL => aut_group_cocycle(q)?,
    };
    let class = c.table.classify()?;
    let perf = perfectness_check(q, DEFAULT_GROUP_CAP)?;
    let result = json!({
        "q": q,
        "group": group.name(),
        "psl_order": order,
        "perfectness": perf,
        "cocycle": cocycle_json(&c)?,
        "required_shape": family.required_shape(),
        "shape_ok": family.shape_ok(&class),
    });
    let inputs = json!({ "q": q, "group": group.name() });
    Ok((
        ReportEnvelope::new("cocycle", inputs, result, vec![]),
        EXIT_OK,
    ))
}

pub fn cmd_search(
    family: FamilyArg,
    max_prime: u64,
    jobs: Option<usize>,
) -> Result<Vec<ReportEnvelope>> {
    if max_prime < 3 {
        return Err(Error::NotPrime(max_prime));
    }
    let run = || match family {
        FamilyArg::A => search_family_a(max_prime),
        FamilyArg::B => search_family_b(max_prime),
    };
    let hits: Vec<FamilyHit> = match jobs {
        Some(j) => rayon::ThreadPoolBuilder::new()
            .num_threads(j.max(1))
            .build()
            .map_err(|e| Error::Inconsistent(e.to_string()))?
            .install(run)?,
        None => run()?,
    };
    let (name, condition) = match family {
        FamilyArg::A => ("a", "property_ssa"),
        FamilyArg::B => ("b", "property_ssb"),
    };
    let inputs = json!({ "family": name, "max_prime": max_prime });
    let mut lines: Vec<ReportEnvelope> = hits
        .iter()
        .map(|h| {
            let result = json!({
                "hit": { "primes": h.primes, "m": h.m, "D": ImagQuadField::new(h.m).map(|k| k.discriminant()).unwrap_or(0) },
                "reverified": condition,
            });
            ReportEnvelope::new("search", inputs.clone(), result, vec![])
        })
        .collect();
    lines.push(ReportEnvelope::new(
        "search",
        inputs,
        json!({ "summary": { "hits": hits.len(), "family": name, "max_prime": max_prime } }),
        vec![],
    ));
    Ok(lines)
}

#[derive(Clone, Copy, Debug, Default)]
pub struct Faults {
    pub corrupt_composition: bool,
}

#[derive(Clone, Debug)]
pub struct SuiteResult {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

fn suite(name: &'static str, f: impl FnOnce() -> std::result::Result<(), String>) -> SuiteResult {
    match f() {
        Ok(()) => SuiteResult {
            name,
            passed: true,
            detail: String::new(),
        },
        Err(detail) => SuiteResult {
            name,
            passed: false,
            detail,
        },
    }
}

fn check(cond: bool, msg: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

pub fn selftest(faults: Faults) -> Vec<SuiteResult> {
    vec![
        suite("h3-dim-klein-four = 4", || {
            let b = cohomology_basis(&SmallGroup::klein_four(), 3).map_err(|e| e.to_string())?;
            check(b.dimension == 4, || format!("got {}", b.dimension))
        }),
        suite("bar-resolution-dims", || {
            for n in 0..=4 {
                let z2 = cohomology_basis(&SmallGroup::cyclic(2), n).map_err(|e| e.to_string())?;
                check(z2.dimension == 1, || {
                    format!("H^{n}(Z/2) = {}", z2.dimension)
                })?;
                let v4 =
                    cohomology_basis(&SmallGroup::klein_four(), n).map_err(|e| e.to_string())?;
                check(v4.dimension == n + 1, || {
                    format!("H^{n}(V4) = {}", v4.dimension)
                })?;
            }
            Ok(())
        }),
        suite("form-enumeration-vs-structure", || {
            for d in fundamental_discriminants(1000) {
                let forms = reduced_forms(d).map_err(|e| e.to_string())?;
                let id = QuadForm::identity(d);
                let cg = if faults.corrupt_composition {
                    class_group_with(&forms, id, |x, y| if x == y { id } else { x.compose(y) })
                } else {
                    class_group_with(&forms, id, |x, y| x.compose(y))
                }
                .map_err(|e| format!("D = {d}: {e}"))?;
                let k = ImagQuadField::from_discriminant(d).map_err(|e| e.to_string())?;
                check(cg.order as usize == forms.len(), || {
                    format!("D = {d}: order")
                })?;
                check(cg.two_rank() == k.genus_two_rank(), || {
                    format!("D = {d}: 2-rank")
                })?;
            }
            Ok(())
        }),
        suite("kronecker-brute-force", || {
            for p in primes_up_to(300).into_iter().filter(|&p| p > 2) {
                let squares: std::collections::HashSet<i64> =
                    (1..p as i64).map(|x| x * x % p as i64).collect();
                for a in -400i64..400 {
                    let r = a.rem_euclid(p as i64);
                    let expected = if r == 0 {
                        0
                    } else if squares.contains(&r) {
                        1
                    } else {
                        -1
                    };
                    let got = kronecker(a, p as i64).map_err(|e| e.to_string())?;
                    check(got == expected, || format!("({a}/{p})"))?;
                }
            }
            check(
                is_prime(1_000_000_007) && !is_prime(1_000_000_007 * 3),
                || "primality".into(),
            )
        }),
        suite("representative-invariance", || {
            for d in fundamental_discriminants(1500) {
                let k = ImagQuadField::from_discriminant(d).map_err(|e| e.to_string())?;
                for x in k.h1_classes() {
                    for y in k.h1_classes() {
                        let a = triple_cup(&k, &x, &y).map_err(|e| e.to_string())?.parity;
                        let b = triple_cup_complement(&k, &x, &y)
                            .map_err(|e| e.to_string())?
                            .parity;
                        check(a == b, || {
                            format!("D = {d}, x = {}, y = {}", k.label(&x), k.label(&y))
                        })?;
                    }
                }
                let s = cohomology_summary(&k);
                check((1usize << s.dims[1]) - 1 == k.h1_classes().len(), || {
                    format!("D = {d}: dims")
                })?;
            }
            Ok(())
        }),
        suite("m-cocycle-q3", || {
            let c = m_group_cocycle(3).map_err(|e| e.to_string())?;
            let class = c.table.classify().map_err(|e| e.to_string())?;
            check(c.table.values.support() == vec![vec![1, 1, 1]], || {
                "support".into()
            })?;
            check(GroupFamily::M.shape_ok(&class), || format!("class {class}"))
        }),
        suite("aut-cocycle-q3", || {
            let c = aut_group_cocycle(3).map_err(|e| e.to_string())?;
            let class = c.table.classify().map_err(|e| e.to_string())?;
            check(GroupFamily::AutPSL.shape_ok(&class), || {
                format!("class {class}")
            })
        }),
    ]
}
