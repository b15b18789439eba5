use std::fmt::Write as _;

use kmchar_core::characters::{
    affine_isotropy, check_hypotheses, kac_kazhdan_search, Characters, Hypotheses,
};
use kmchar_core::hecke::{KlTable, ResidueClass};
use kmchar_core::integral::IntegralSystem;
use kmchar_core::laurent::LaurentPoly;
use kmchar_core::roots::{RootClass, RootTable};
use kmchar_core::weyl::{format_word, parse_word, WeylElement};
use kmchar_core::{Error, RootLatticeVector};

use crate::cache::{self, Cache, PolyKind};
use crate::problem::{load_problem, Problem};
use crate::{CharKind, Cli, CliError, Command};

type Out = Result<String, CliError>;

const MAX_WIDENINGS: usize = 6;

/// Runs one command; cache warnings are appended to `warnings`.
pub fn execute(cli: &Cli, warnings: &mut Vec<String>) -> Out {
    match &cli.command {
        Command::Roots(p) => roots(&load_problem(&p.problem)?),
        Command::Integral(p) => integral(&load_problem(&p.problem)?),
        Command::Weyl { problem, word } => weyl(&load_problem(&problem.problem)?, word),
        Command::Kl { problem, x, y } | Command::InverseKl { problem, x, y } => {
            let prob = load_problem(&problem.problem)?;
            let mut cache = if cli.no_cache {
                Cache::disabled()
            } else {
                Cache::new(prob.cache_dir.clone())
            };
            let kind = if matches!(cli.command, Command::Kl { .. }) {
                PolyKind::P
            } else {
                PolyKind::Q
            };
            let result = kl(&prob, &mut cache, kind, x, y);
            warnings.extend(cache.take_warnings());
            result
        }
        Command::Char {
            problem,
            kind,
            w,
            override_hypotheses,
        } => {
            let policy = if *override_hypotheses {
                Hypotheses::Override
            } else {
                Hypotheses::Verify
            };
            character(&load_problem(&problem.problem)?, *kind, w, policy)
        }
        Command::Check(p) => check(&load_problem(&p.problem)?),
        Command::Embed { problem, mu } => embed(&load_problem(&problem.problem)?, mu),
        Command::Isotropy(p) => isotropy(&load_problem(&p.problem)?),
    }
}

fn word_arg(name: &str, text: &str) -> Result<Vec<usize>, CliError> {
    parse_word(text).ok_or_else(|| {
        CliError::Usage(format!(
            "--{name} expects space-separated generator indices, got {text:?}"
        ))
    })
}

fn sorted(mut roots: Vec<RootLatticeVector>) -> Vec<RootLatticeVector> {
    roots.sort_by(|a, b| a.sort_key().cmp(&b.sort_key()));
    roots
}

fn roots(p: &Problem) -> Out {
    let table = RootTable::new(&p.datum, p.height_bound)?;
    let mut out = String::from("root\theight\tclass\tmultiplicity\n");
    for (r, m) in table.positive_roots() {
        let class = match table.classify(r)? {
            RootClass::Real => "real",
            _ => "imaginary",
        };
        writeln!(out, "{r}\t{}\t{class}\t{m}", r.height()).unwrap();
    }
    Ok(out)
}

fn integral(p: &Problem) -> Out {
    let sys = IntegralSystem::new(&p.datum, p.lambda.clone(), p.height_bound)?;
    let shifted = p.lambda.plus_rho();
    let mut out = String::from("integral_root\theight\tpairing\n");
    for r in sorted(sys.integral_roots().to_vec()) {
        let k = p.datum.coroot_pair(&shifted, &r)?;
        writeln!(out, "{r}\t{}\t{k}", r.height()).unwrap();
    }
    out.push_str("\nsimple_root\theight\n");
    for r in sorted(sys.simple_roots().to_vec()) {
        writeln!(out, "{r}\t{}", r.height()).unwrap();
    }
    Ok(out)
}

fn weyl(p: &Problem, word: &str) -> Out {
    let word = word_arg("word", word)?;
    let sys = IntegralSystem::new(&p.datum, p.lambda.clone(), p.height_bound)?;
    let w = sys.weyl().from_word(&word)?;
    let mut out = String::from("field\tvalue\n");
    writeln!(out, "reduced_word\t{}", w.word_string()).unwrap();
    writeln!(out, "canon\t{}", w.canon()).unwrap();
    writeln!(out, "length\t{}", w.length()).unwrap();
    writeln!(out, "lambda_length\t{}", sys.lambda_length(&w)).unwrap();
    match sys.lambda_reduced_roots(&w) {
        Ok(roots) => {
            let lw = sys.lambda_reduced_word(&w)?;
            writeln!(out, "in_integral_group\tyes").unwrap();
            writeln!(out, "lambda_word\t{}", format_word(&lw)).unwrap();
            let roots: Vec<String> = roots.iter().map(|r| r.to_string()).collect();
            writeln!(out, "lambda_word_roots\t{}", roots.join(", ")).unwrap();
        }
        Err(Error::NotInIntegralWeylGroup { .. }) => {
            writeln!(out, "in_integral_group\tno").unwrap();
        }
        Err(e) => return Err(e.into()),
    }
    Ok(out)
}

fn member(sys: &IntegralSystem<'_>, word: &[usize]) -> Result<WeylElement, CliError> {
    let w = sys.weyl().from_word(word)?;
    if !sys.contains(&w)? {
        return Err(Error::NotInIntegralWeylGroup {
            residue: word.to_vec(),
        }
        .into());
    }
    Ok(w)
}

fn kl(p: &Problem, cache: &mut Cache, kind: PolyKind, x: &str, y: &str) -> Out {
    let (xw, yw) = (word_arg("x", x)?, word_arg("y", y)?);
    let sys = IntegralSystem::new(&p.datum, p.lambda.clone(), p.height_bound)?;
    let (x, y) = (member(&sys, &xw)?, member(&sys, &yw)?);
    let key = cache::key(&p.datum, &ResidueClass::of(&p.lambda), &x, &y, kind);
    let poly = match cache.get(&key) {
        Some(poly) => poly,
        None => {
            let table = KlTable::new(&sys);
            let poly: LaurentPoly = match kind {
                PolyKind::P => table.p(&x, &y)?,
                PolyKind::Q => table.q(&x, &y)?,
            };
            cache.put(&key, &poly);
            poly
        }
    };
    Ok(format!("{poly}\n"))
}

fn character(p: &Problem, kind: CharKind, w: &str, policy: Hypotheses) -> Out {
    let word = word_arg("w", w)?;
    let h = p.height_bound;
    let table = RootTable::new(&p.datum, h)?;
    let offset = p.datum.shifted_action(&word, &p.lambda)?.offset;
    // The window of integral roots is internal; widen it until the computation fits.
    let mut window = h + u32::try_from(offset.height()).unwrap_or(0);
    for _ in 0..MAX_WIDENINGS {
        let sys = IntegralSystem::new(&p.datum, p.lambda.clone(), window)?;
        let chars = Characters::new(&sys, &table)?;
        let w = sys.weyl().from_word(&word)?;
        let series = match kind {
            CharKind::Verma => chars.verma(&w, h),
            CharKind::Irr => chars.irreducible(&w, h, policy),
            CharKind::IrrNonregular => chars.nonregular_irreducible(&w, h, policy),
        };
        match series {
            Ok(series) => return Ok(series.to_tsv()),
            Err(Error::HeightBoundExceeded { needed, .. }) => {
                window = window
                    .saturating_mul(2)
                    .max(u32::try_from(needed).unwrap_or(u32::MAX));
            }
            Err(e) => return Err(e.into()),
        }
    }
    Err(Error::HeightBoundExceeded {
        needed: window as i64,
        bound: window,
    }
    .into())
}

fn check(p: &Problem) -> Out {
    let table = RootTable::new(&p.datum, p.height_bound)?;
    let report = check_hypotheses(&p.datum, &table, &p.lambda, p.height_bound)?;
    let mut out = String::from("condition\tverdict\n");
    for (name, verdict) in report.rows() {
        writeln!(out, "{name}\t{verdict}").unwrap();
    }
    Ok(out)
}

fn embed(p: &Problem, mu: &str) -> Out {
    let mu = RootLatticeVector::parse(mu).ok_or_else(|| {
        CliError::Usage(format!("--mu expects space-separated integers, got {mu:?}"))
    })?;
    if mu.rank() != p.datum.rank() {
        return Err(Error::DimensionMismatch {
            expected: p.datum.rank(),
            got: mu.rank(),
        }
        .into());
    }
    let table = RootTable::new(&p.datum, p.height_bound)?;
    match kac_kazhdan_search(&p.datum, &table, &p.lambda, &mu, p.height_bound)? {
        None => Ok("none\n".into()),
        Some(chain) => {
            let mut out = String::from("step\troot\tn\n");
            for (k, step) in chain.iter().enumerate() {
                writeln!(out, "{}\t{}\t{}", k + 1, step.root, step.n).unwrap();
            }
            Ok(out)
        }
    }
}

fn isotropy(p: &Problem) -> Out {
    let group = affine_isotropy(&p.datum, &p.lambda)?;
    let mut out = String::from("generator\n");
    for g in &group.generators {
        writeln!(out, "{g}").unwrap();
    }
    out.push_str("\nelement\tlength\tcanon\n");
    for e in &group.elements {
        writeln!(out, "{}\t{}\t{}", e.word_string(), e.length(), e.canon()).unwrap();
    }
    Ok(out)
}
