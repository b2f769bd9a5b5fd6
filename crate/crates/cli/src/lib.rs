//! Command-line front end: every subcommand prints one JSON document with
//! sorted keys on stdout.
//!
//! Exit codes: 0 success, 1 a negative mathematical verdict, 2 invalid
//! input, 3 an exhausted search.

mod json;

use std::collections::BTreeSet;
use std::io::Write;

use clap::{Parser, Subcommand};
use salem_core::brauer::BrauerClass;
use salem_core::exact::{parse_rat, Int, Rat, RatMatrix, UniPoly};
use salem_core::exhibitor::{exhibit, exhibit_on_form, integralize};
use salem_core::places::{
    candidate_primes_after, hilbert_symbol, relevant_places, search_ceiling, sigma_ns_density,
    splitting_profile, Constraint, Place,
};
use salem_core::polyalg::{classify_salem, salem_context, SalemVerdict};
use salem_core::quadform::{
    forms_equivalent, is_admissible, local_witt_index, maclachlan_commensurable, QuadForm,
};
use salem_core::realizer::{certify, enumerate_a_sets, incommensurable_family};
use salem_core::Error;
use serde_json::{json, Value};

const POLY_HELP: &str = "comma-separated coefficients, constant term first (\"1,-3,1\" is x^2-3x+1)";
const FORM_HELP: &str = "diagonal entries d1,...,dr; rationals as p/q";

#[derive(Parser, Debug)]
#[command(name = "salem", version, about = "Salem numbers, quadratic forms and arithmetic hyperbolic lattices")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Decide whether a polynomial is a Salem polynomial.
    SalemVerify {
        #[arg(long, allow_hyphen_values = true, help = POLY_HELP)]
        poly: String,
    },
    /// Invariants of a rational quadratic form.
    Invariants {
        #[arg(long, allow_hyphen_values = true, help = FORM_HELP, conflicts_with = "gram")]
        form: Option<String>,
        /// Gram matrix as JSON nested arrays of "p/q" strings.
        #[arg(long)]
        gram: Option<String>,
    },
    /// Splitting of primes in the fields attached to a Salem polynomial.
    Splitting {
        #[arg(long, allow_hyphen_values = true, help = POLY_HELP)]
        poly: String,
        #[arg(long)]
        n: usize,
        /// Primes to profile, comma-separated.
        #[arg(long, value_delimiter = ',')]
        primes: Vec<u64>,
        /// Also list this many candidate primes for A-sets.
        #[arg(long)]
        candidates: Option<usize>,
        /// Also report the density of Σⁿˢ among primes below this bound.
        #[arg(long)]
        density: Option<u64>,
    },
    /// Hilbert symbols and the ramification set of (a, b).
    Hilbert {
        #[arg(long, allow_hyphen_values = true)]
        a: String,
        #[arg(long, allow_hyphen_values = true)]
        b: String,
        /// A single place ("inf" or a prime).
        #[arg(long)]
        place: Option<String>,
    },
    /// Certify the form attached to one A-set.
    Realize {
        #[arg(long, allow_hyphen_values = true, help = POLY_HELP)]
        poly: String,
        #[arg(long)]
        n: usize,
        /// Comma-separated primes; defaults to the first enumerated A-set.
        #[arg(long = "a-set", value_delimiter = ',', num_args = 0..)]
        a_set: Option<Vec<u64>>,
    },
    /// Certified forms in pairwise distinct commensurability classes.
    Family {
        #[arg(long, allow_hyphen_values = true, help = POLY_HELP)]
        poly: String,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 3)]
        count: usize,
    },
    /// Explicit integral isometries realizing the Salem number.
    Exhibit {
        #[arg(long, allow_hyphen_values = true, help = POLY_HELP)]
        poly: String,
        #[arg(long)]
        n: usize,
        /// Trace-field elements as polynomials in y = x + 1/x (repeatable).
        #[arg(long = "b", allow_hyphen_values = true)]
        bs: Vec<String>,
        /// Use the binary rotation on this diagonal form instead (quadratic
        /// Salem polynomials only).
        #[arg(long, allow_hyphen_values = true, conflicts_with = "bs")]
        form: Option<String>,
    },
    /// Commensurability of the lattices of two admissible forms.
    Commensurable {
        #[arg(long)]
        n: usize,
        #[arg(long, allow_hyphen_values = true, help = FORM_HELP)]
        form: String,
        #[arg(long, allow_hyphen_values = true, help = FORM_HELP)]
        form2: String,
    },
    /// Conjugate an isometry into an integral one on an equivalent form.
    Integralize {
        /// Isometry as JSON nested arrays.
        #[arg(long)]
        matrix: String,
        /// Gram matrix as JSON nested arrays.
        #[arg(long, conflicts_with = "form")]
        gram: Option<String>,
        #[arg(long, allow_hyphen_values = true, help = FORM_HELP)]
        form: Option<String>,
    },
}

/// A JSON document and whether the mathematical verdict is positive.
struct Outcome {
    value: Value,
    verdict: bool,
}

impl Outcome {
    fn ok(value: Value) -> Self {
        Self { value, verdict: true }
    }
}

pub fn exit_code(err: &Error) -> i32 {
    match err {
        Error::SearchExhausted { .. } => 3,
        Error::CheckFailed(_) => 1,
        _ => 2,
    }
}

/// Parses `args` (including the program name), runs the command and returns
/// the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            if e.use_stderr() {
                let _ = write!(err, "{e}");
                return 2;
            }
            let _ = write!(out, "{e}");
            return 0;
        }
    };
    match dispatch(cli.command) {
        Ok(o) => {
            let text = serde_json::to_string_pretty(&o.value).expect("serializable");
            let _ = writeln!(out, "{text}");
            if o.verdict {
                0
            } else {
                1
            }
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

fn parse_place(s: &str) -> Result<Place, Error> {
    s.parse()
}

fn parse_form(s: &str) -> Result<QuadForm, Error> {
    QuadForm::parse_diagonal(s)
}

fn parse_matrix(s: &str) -> Result<RatMatrix, Error> {
    let v: Value = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
    let rows = v
        .as_array()
        .ok_or_else(|| Error::Parse("matrix must be an array of rows".into()))?;
    let mut out = Vec::with_capacity(rows.len());
    for row in rows {
        let row = row
            .as_array()
            .ok_or_else(|| Error::Parse("matrix rows must be arrays".into()))?;
        let mut r = Vec::with_capacity(row.len());
        for x in row {
            r.push(match x {
                Value::String(s) => parse_rat(s)?,
                Value::Number(n) if n.is_i64() => Rat::from_integer(Int::from(n.as_i64().unwrap())),
                other => return Err(Error::Parse(format!("bad matrix entry {other}"))),
            });
        }
        out.push(r);
    }
    RatMatrix::from_rows(out)
}

fn dispatch(cmd: Command) -> Result<Outcome, Error> {
    match cmd {
        Command::SalemVerify { poly } => salem_verify(&poly),
        Command::Invariants { form, gram } => {
            let q = match (form, gram) {
                (Some(f), _) => parse_form(&f)?,
                (None, Some(g)) => QuadForm::new(parse_matrix(&g)?)?,
                (None, None) => return Err(Error::Parse("one of --form or --gram is required".into())),
            };
            let mut v = json::invariants(&q)?;
            let mut local = serde_json::Map::new();
            for place in q.relevant_places()? {
                local.insert(
                    place.to_string(),
                    json!({ "hasse": q.hasse_at(place), "witt_index": local_witt_index(&q, place)? }),
                );
            }
            v["local"] = Value::Object(local);
            Ok(Outcome::ok(v))
        }
        Command::Splitting { poly, n, primes, candidates, density } => {
            let ctx = salem_context(&UniPoly::parse(&poly)?, n)?;
            let profiles = primes
                .iter()
                .map(|&p| splitting_profile(&ctx, p).map(|s| json::profile(&s)))
                .collect::<Result<Vec<_>, _>>()?;
            let mut v = json!({
                "poly": json::poly(&ctx.f),
                "n": n,
                "trace_poly": json::poly(&ctx.g),
                "D": json::int(&ctx.d),
                "delta": json::int(&ctx.delta),
                "profiles": profiles,
            });
            if let Some(k) = candidates {
                let constraint = if n % 2 == 1 { Constraint::SigmaNsAndSplH } else { Constraint::SigmaNs };
                v["candidates"] = json!(candidate_primes_after(&ctx, constraint, 1, k, search_ceiling())?);
            }
            if let Some(bound) = density {
                v["sigma_ns_density"] = json!(format!("{:.6}", sigma_ns_density(&ctx, bound)?));
            }
            Ok(Outcome::ok(v))
        }
        Command::Hilbert { a, b, place } => {
            let (a, b) = (parse_rat(&a)?, parse_rat(&b)?);
            let places: BTreeSet<Place> = match place {
                Some(p) => BTreeSet::from([parse_place(&p)?]),
                None => relevant_places(&a, &b)?,
            };
            let mut symbols = serde_json::Map::new();
            for v in places {
                symbols.insert(v.to_string(), json!(hilbert_symbol(&a, &b, v)?));
            }
            Ok(Outcome::ok(json!({
                "a": salem_core::exact::fmt_rat(&a),
                "b": salem_core::exact::fmt_rat(&b),
                "symbols": symbols,
                "ram": json::class(&BrauerClass::of_pair(&a, &b)?),
            })))
        }
        Command::Realize { poly, n, a_set } => {
            let ctx = salem_context(&UniPoly::parse(&poly)?, n)?;
            let a: BTreeSet<u64> = match a_set {
                Some(v) => v.into_iter().collect(),
                None => enumerate_a_sets(&ctx, 1)?.remove(0),
            };
            match certify(&ctx, &a) {
                Ok(c) => Ok(Outcome::ok(json::certificate(&c)?)),
                Err(Error::CheckFailed(name)) => Ok(Outcome {
                    value: json!({ "certified": false, "failed_check": name, "A": a }),
                    verdict: false,
                }),
                Err(e) => Err(e),
            }
        }
        Command::Family { poly, n, count } => {
            let ctx = salem_context(&UniPoly::parse(&poly)?, n)?;
            let fam = incommensurable_family(&ctx, count)?;
            let mut pairwise = true;
            for (i, a) in fam.iter().enumerate() {
                for b in &fam[i + 1..] {
                    pairwise &= !maclachlan_commensurable(&a.q, &b.q, n)?;
                }
            }
            let certs = fam.iter().map(json::certificate).collect::<Result<Vec<_>, _>>()?;
            Ok(Outcome {
                value: json!({
                    "poly": json::poly(&ctx.f),
                    "n": n,
                    "count": fam.len(),
                    "certificates": certs,
                    "pairwise_incommensurable": pairwise,
                }),
                verdict: pairwise,
            })
        }
        Command::Exhibit { poly, n, bs, form } => {
            let ctx = salem_context(&UniPoly::parse(&poly)?, n)?;
            let mut witnesses = Vec::new();
            let mut errors = Vec::new();
            if let Some(f) = form {
                witnesses.push(json::witness(&exhibit_on_form(&ctx, &parse_form(&f)?)?));
            } else {
                let bs = if bs.is_empty() { vec!["1".to_string()] } else { bs };
                let parsed = bs.iter().map(|b| UniPoly::parse(b)).collect::<Result<Vec<_>, _>>()?;
                for (b, res) in exhibit(&ctx, &parsed) {
                    match res {
                        Ok(w) => witnesses.push(json::witness(&w)),
                        Err(e) => errors.push(json!({ "b": json::poly(&b), "error": e.to_string() })),
                    }
                }
            }
            let mut classes: Vec<Value> = witnesses.iter().map(|w| w["class_key"].clone()).collect();
            classes.sort_by_key(|v| v.to_string());
            classes.dedup();
            Ok(Outcome::ok(json!({
                "poly": json::poly(&ctx.f),
                "n": n,
                "witnesses": witnesses,
                "failures": errors,
                "classes": classes,
            })))
        }
        Command::Commensurable { n, form, form2 } => {
            let (q, r) = (parse_form(&form)?, parse_form(&form2)?);
            let c = maclachlan_commensurable(&q, &r, n)?;
            Ok(Outcome {
                value: json!({
                    "n": n,
                    "commensurable": c,
                    "invariants": [json::invariants(&q)?, json::invariants(&r)?],
                }),
                verdict: c,
            })
        }
        Command::Integralize { matrix, gram, form } => {
            let t = parse_matrix(&matrix)?;
            let q = match (form, gram) {
                (Some(f), _) => parse_form(&f)?,
                (None, Some(g)) => QuadForm::new(parse_matrix(&g)?)?,
                (None, None) => return Err(Error::Parse("one of --form or --gram is required".into())),
            };
            let out = integralize(&t, &q)?;
            let equivalent = forms_equivalent(&q, &out.q)?;
            let admissible = is_admissible(&out.q, out.q.rank() - 1)?;
            Ok(Outcome::ok(json!({
                "g": json::matrix(&out.g),
                "gram": json::matrix(out.q.gram()),
                "gamma": json::matrix(&out.t),
                "equivalent": equivalent,
                "hyperbolic_signature": admissible,
            })))
        }
    }
}

fn salem_verify(poly: &str) -> Result<Outcome, Error> {
    let f = UniPoly::parse(poly)?;
    Ok(match classify_salem(&f)? {
        SalemVerdict::Salem(c) => Outcome::ok(json!({
            "salem": true,
            "poly": json::poly(&f),
            "trace_poly": json::poly(&c.g),
            "lambda": format!("{:.12}", c.lambda()),
            "lambda_bracket": [salem_core::exact::fmt_rat(&c.lambda_lo), salem_core::exact::fmt_rat(&c.lambda_hi)],
        })),
        SalemVerdict::NotSalem(r) => Outcome {
            value: json!({
                "salem": false,
                "poly": json::poly(&f),
                "reason": r.code(),
                "detail": r.to_string(),
            }),
            verdict: false,
        },
    })
}
