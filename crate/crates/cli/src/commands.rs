//! Verbs, flags and dispatch.

use std::collections::BTreeMap;

use clap::{Args, Parser, Subcommand, ValueEnum};
use hopfcalc_core::bases::{
    diag_canonical, diagram_from_partitions, ldiag_restrict, spot_types, subword,
    trace_normal_form, Alphabet, LabelledDiagram, Word,
};
use hopfcalc_core::bellcalc::{
    bell, bell_polynomial, diagram_census_bounded, egf_exp, egf_log, egf_mul, hadamard,
    hadamard_via_coefficients, hadamard_via_diagrams, hadamard_via_partitions, mult_of_diagram,
    set_partitions, stirling2, stirling2_row, total_multiplicity, EgfSeries, Poly,
    SetPartition, DEFAULT_HADAMARD_BOUND,
};
use hopfcalc_core::hopf::{
    duality_sides, infiltration, rep_apply, rep_tensor, AntipodeCache, Bialgebra, GroupAlgebra,
    GroupRep, Matrix,
};
use hopfcalc_core::linalg::{convolve, lc_pair, lc_tensor, LinMap, Tensor};
use hopfcalc_core::scalar::{format_rational, CycOmega, Rational};
use hopfcalc_core::Error;
use serde_json::json;

use crate::checks::{all_pass, render_checks, run_checks, DEFAULT_MAX_DEGREE};
use crate::expr::{parse_expr, parse_rational, parse_value, ExprError, Value};
use crate::output::{
    lc_json, render_lc, render_list, render_rational, render_value, Format, Rendered,
};
use crate::surface::{parse_theta, Algebra, AlgebraParams, Surface, ALGEBRA_NAMES};
use crate::with_algebra;

/// Environment variable overriding the corpus degree of `check`.
pub const MAX_DEGREE_ENV: &str = "HOPFCALC_MAX_DEGREE";

/// Kernel operations reachable from each verb. Every operation is listed
/// under exactly one verb.
pub const VERB_TABLE: &[(&str, &[&str])] = &[
    ("coprod", &["coproduct"]),
    ("prod", &["product", "ldiag_concat"]),
    ("antipode", &["antipode"]),
    ("counit", &["counit"]),
    ("pair", &["lc_pair"]),
    ("eval", &["lc_combine", "parse_expr", "format_lc"]),
    ("tensor", &["lc_tensor"]),
    ("convolve", &["convolve"]),
    ("infiltrate", &["infiltration"]),
    ("duality", &["duality_check"]),
    ("subword", &["subword"]),
    ("trace-nf", &["trace_normal_form"]),
    ("bell", &["bell"]),
    ("stirling", &["stirling2"]),
    ("bellpoly", &["bell_polynomial"]),
    ("partitions", &["set_partitions"]),
    ("egf", &["egf_mul", "egf_exp", "egf_log"]),
    (
        "hadamard",
        &["hadamard", "hadamard_via_coefficients", "hadamard_via_partitions", "hadamard_via_diagrams"],
    ),
    ("diag-canon", &["diag_canonical"]),
    ("diag-restrict", &["ldiag_restrict"]),
    ("diag-from-partitions", &["diagram_from_partitions"]),
    ("spot-types", &["spot_types"]),
    ("mult", &["mult_of_diagram"]),
    ("rep", &["rep_apply", "rep_tensor"]),
    ("check", &["check_bialgebra"]),
    ("table", &["stirling2_row", "diagram_census"]),
];

#[derive(Parser, Debug)]
#[command(name = "hopfcalc", version, about = "Exact computations in combinatorial Hopf algebras")]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

fn rational_arg(s: &str) -> Result<Rational, String> {
    let (neg, body) = match s.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, s),
    };
    let r = parse_rational(body).ok_or_else(|| format!("'{s}' is not a rational p/q"))?;
    Ok(if neg { -r } else { r })
}

#[derive(Args, Debug, Clone)]
pub struct AlgArgs {
    /// Algebra.
    #[arg(long = "alg", default_value = "free-q",
          value_parser = clap::builder::PossibleValuesParser::new(ALGEBRA_NAMES))]
    pub alg: String,
    /// Deformation parameter, as p/q.
    #[arg(long, default_value = "0", allow_hyphen_values = true, value_parser = rational_arg)]
    pub q: Rational,
    /// Letters of the alphabet.
    #[arg(long, default_value = "ab")]
    pub alphabet: String,
    /// Commuting letter pairs for `trace`, e.g. "ac,bd".
    #[arg(long, default_value = "")]
    pub theta: String,
    /// Group for `group`: C3 or S3 (or Cn, Sn).
    #[arg(long, default_value = "C3")]
    pub group: String,
}

impl AlgArgs {
    fn build(&self) -> Result<Algebra, CliError> {
        let params = AlgebraParams {
            alphabet: self.alphabet.clone(),
            q: self.q.clone(),
            theta: self.theta.clone(),
            group: self.group.clone(),
        };
        Algebra::build(&self.alg, &params).map_err(CliError::Usage)
    }
}

#[derive(Args, Debug, Clone)]
pub struct WordArgs {
    #[arg(long, default_value = "0", allow_hyphen_values = true, value_parser = rational_arg)]
    pub q: Rational,
    #[arg(long, default_value = "ab")]
    pub alphabet: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum MapName {
    /// The identity.
    Id,
    /// The antipode.
    Antipode,
    /// `unit ∘ counit`.
    UnitCounit,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum EgfOp {
    Exp,
    Log,
    Mul,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Route {
    Coefficients,
    Partitions,
    Diagrams,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Model {
    /// `C3 → diag(ω^k, ω^2k)` over ℚ(ω).
    Omega,
    /// The left regular representation.
    Regular,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Coproduct of an element.
    Coprod {
        #[command(flatten)]
        alg: AlgArgs,
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Product of two or more elements, left to right.
    Prod {
        #[command(flatten)]
        alg: AlgArgs,
        #[arg(required = true, num_args = 2.., allow_hyphen_values = true)]
        exprs: Vec<String>,
    },
    /// Antipode of an element.
    Antipode {
        #[command(flatten)]
        alg: AlgArgs,
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Counit of an element.
    Counit {
        #[command(flatten)]
        alg: AlgArgs,
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Kronecker pairing of two elements (or two tensors).
    Pair {
        #[command(flatten)]
        alg: AlgArgs,
        #[arg(allow_hyphen_values = true)]
        x: String,
        #[arg(allow_hyphen_values = true)]
        y: String,
    },
    /// Normal form of an expression.
    Eval {
        #[command(flatten)]
        alg: AlgArgs,
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Tensor product of two elements.
    Tensor {
        #[command(flatten)]
        alg: AlgArgs,
        #[arg(allow_hyphen_values = true)]
        x: String,
        #[arg(allow_hyphen_values = true)]
        y: String,
    },
    /// Applies the convolution f ∗ g = μ ∘ (f ⊗ g) ∘ Δ.
    Convolve {
        #[command(flatten)]
        alg: AlgArgs,
        #[arg(long, value_enum)]
        f: MapName,
        #[arg(long, value_enum)]
        g: MapName,
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// q-infiltration of two words.
    Infiltrate {
        #[command(flatten)]
        words: WordArgs,
        u: String,
        v: String,
    },
    /// Checks ⟨Δ_q(w), u ⊗ v⟩ = ⟨w, u ↑_q v⟩.
    Duality {
        #[command(flatten)]
        words: WordArgs,
        u: String,
        v: String,
        w: String,
    },
    /// Letters of a word at 1-based positions, e.g. "1,3".
    Subword { word: String, indices: String },
    /// Lexicographic normal form in the partially commutative monoid.
    TraceNf {
        #[arg(long, default_value = "")]
        theta: String,
        word: String,
    },
    /// Bell number B(n).
    Bell { n: usize },
    /// Stirling numbers of the second kind: S(n, k), or the row S(n, ·).
    Stirling { n: usize, k: Option<usize> },
    /// Bell polynomial B_n(y).
    Bellpoly { n: usize },
    /// All set partitions of [1..n].
    Partitions { n: usize },
    /// Exponential generating function arithmetic on coefficient lists
    /// "c0,c1,...,cN".
    Egf {
        #[arg(value_enum)]
        op: EgfOp,
        #[arg(required = true, num_args = 1..=2, allow_hyphen_values = true)]
        series: Vec<String>,
    },
    /// Hadamard product: of two coefficient lists, or symbolically in the
    /// L and V variables.
    Hadamard {
        #[arg(long, default_value_t = 5)]
        order: usize,
        #[arg(long, value_enum, default_value_t = Route::Diagrams)]
        route: Route,
        #[arg(num_args = 0..=2, allow_hyphen_values = true)]
        series: Vec<String>,
    },
    /// Canonical form of a diagram under row and column permutations.
    DiagCanon { diagram: String },
    /// Restriction of a labelled diagram to black spots, e.g. "1,3".
    DiagRestrict { diagram: String, indices: String },
    /// Incidence diagram of two set partitions, e.g. "{1,2},{3}".
    DiagFromPartitions { p1: String, p2: String },
    /// White (column) and black (row) spot types.
    SpotTypes { diagram: String },
    /// Number of pairs of partitions with the given diagram.
    Mult { diagram: String, n: Option<usize> },
    /// Matrix of an element of a group algebra under a representation.
    Rep {
        #[arg(long, default_value = "C3")]
        group: String,
        #[arg(long, value_enum, default_value_t = Model::Omega)]
        model: Model,
        /// Second factor: evaluate in model ⊠ tensor.
        #[arg(long, value_enum)]
        tensor: Option<Model>,
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Runs the property suites and prints a pass/fail table.
    Check {
        #[arg(long = "alg", value_parser = clap::builder::PossibleValuesParser::new(ALGEBRA_NAMES))]
        alg: Option<String>,
    },
    /// n, B(n), Stirling row, diagram count and Σ mult for n = 0..=max, as CSV.
    Table {
        #[arg(long, default_value_t = 5)]
        max: usize,
    },
}

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Math(Error),
}

impl From<ExprError> for CliError {
    fn from(e: ExprError) -> Self {
        match e {
            ExprError::Parse(p) => CliError::Usage(p.to_string()),
            ExprError::Kernel(k) => k.into(),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        if e.is_mathematical() {
            CliError::Math(e)
        } else {
            CliError::Usage(e.to_string())
        }
    }
}

type Outcome = Result<(Rendered, bool), CliError>;

fn done(r: Rendered) -> Outcome {
    Ok((r, true))
}

fn parse_indices(text: &str) -> Result<Vec<usize>, CliError> {
    text.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| {
            s.parse()
                .map_err(|_| CliError::Usage(format!("'{s}' is not a positive index")))
        })
        .collect()
}

fn parse_word(text: &str) -> Result<Word, CliError> {
    if text == "1" || text.is_empty() {
        return Ok(Word::empty());
    }
    if !text.chars().all(char::is_alphabetic) {
        return Err(CliError::Usage(format!("'{text}' is not a word")));
    }
    Ok(Word::new(text.chars().collect()))
}

fn parse_alphabet_word(alphabet: &Alphabet, text: &str) -> Result<Word, CliError> {
    let w = parse_word(text)?;
    alphabet.check(&w)?;
    Ok(w)
}

fn parse_diagram(text: &str) -> Result<LabelledDiagram, CliError> {
    Ok(text.parse::<LabelledDiagram>()?)
}

/// `"{1,2},{3}"` or `"12|3"`-free brace syntax.
fn parse_partition(text: &str) -> Result<SetPartition, CliError> {
    let bad = || CliError::Usage(format!("'{text}' is not a set partition like {{1,2}},{{3}}"));
    let t = text.trim();
    let t = t
        .strip_prefix("{{")
        .and_then(|s| s.strip_suffix("}}"))
        .map(|s| format!("{{{s}}}"))
        .unwrap_or_else(|| t.to_string());
    let mut blocks = Vec::new();
    let mut rest = t.as_str();
    while !rest.trim().is_empty() {
        let r = rest.trim_start().trim_start_matches(',').trim_start();
        let r = r.strip_prefix('{').ok_or_else(bad)?;
        let end = r.find('}').ok_or_else(bad)?;
        let block = parse_indices(&r[..end]).map_err(|_| bad())?;
        blocks.push(block);
        rest = &r[end + 1..];
    }
    Ok(SetPartition::from_blocks(blocks)?)
}

fn parse_series(text: &str) -> Result<EgfSeries<Rational>, CliError> {
    let coeffs = text
        .split(',')
        .map(|s| rational_arg(s.trim()).map_err(CliError::Usage))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(EgfSeries::new(coeffs))
}

fn render_series(s: &EgfSeries<Rational>) -> Rendered {
    let items: Vec<String> = s.coeffs().iter().map(format_rational).collect();
    Rendered::new(items.join(","), json!(items))
}

fn render_poly_series(s: &EgfSeries<Poly<hopfcalc_core::bases::SeriesVar>>) -> Rendered {
    let text = s.to_string();
    let json = s
        .coeffs()
        .iter()
        .enumerate()
        .map(|(n, c)| json!({ "n": n, "coefficient": lc_json(c) }))
        .collect();
    Rendered::new(text, serde_json::Value::Array(json))
}

fn render_multi_index(m: &BTreeMap<usize, usize>) -> String {
    let parts: Vec<String> = m.iter().map(|(k, v)| format!("{k}:{v}")).collect();
    format!("{{{}}}", parts.join(","))
}

fn render_matrix(m: &Matrix<CycOmega>) -> Rendered {
    let rows: Vec<Vec<String>> = (0..m.dim())
        .map(|i| (0..m.dim()).map(|j| m.get(i, j).to_string()).collect())
        .collect();
    Rendered::new(m.to_string(), json!(rows))
}

fn render_any<A: Surface>(v: &Value<A::Basis>) -> Rendered {
    match v {
        Value::Element(x) => render_lc(x),
        Value::Tensor(x) => render_lc(x),
    }
}

fn map_for<A: Surface>(
    alg: &A,
    name: MapName,
    needed: &[A::Basis],
) -> Result<LinMap<A::Basis, A::Basis>, CliError> {
    Ok(match name {
        MapName::Id => LinMap::identity(),
        MapName::UnitCounit => {
            let a = alg.clone();
            LinMap::new(move |b: &A::Basis| a.one().scale(&a.counit_basis(b)))
        }
        MapName::Antipode => {
            let mut cache = AntipodeCache::new(alg);
            let mut table = BTreeMap::new();
            for b in needed {
                table.insert(b.clone(), cache.basis(b)?);
            }
            LinMap::new(move |b: &A::Basis| table.get(b).cloned().unwrap_or_default())
        }
    })
}

fn algebra_verb<A: Surface>(alg: &A, cmd: &Command) -> Outcome {
    match cmd {
        Command::Coprod { expr, .. } => done(render_lc(&alg.coproduct(&parse_expr(alg, expr)?))),
        Command::Prod { exprs, .. } => {
            let mut acc = parse_expr(alg, &exprs[0])?;
            for e in &exprs[1..] {
                acc = alg.product(&acc, &parse_expr(alg, e)?);
            }
            done(render_lc(&acc))
        }
        Command::Antipode { expr, .. } => {
            let x = parse_expr(alg, expr)?;
            done(render_lc(&AntipodeCache::new(alg).apply(&x)?))
        }
        Command::Counit { expr, .. } => done(render_rational(&alg.counit(&parse_expr(alg, expr)?))),
        Command::Pair { x, y, .. } => {
            let r = match (parse_value(alg, x)?, parse_value(alg, y)?) {
                (Value::Element(a), Value::Element(b)) => lc_pair(&a, &b),
                (Value::Tensor(a), Value::Tensor(b)) => lc_pair(&a, &b),
                _ => return Err(CliError::Usage("cannot pair an element with a tensor".into())),
            };
            done(render_rational(&r))
        }
        Command::Eval { expr, .. } => done(render_any::<A>(&parse_value(alg, expr)?)),
        Command::Tensor { x, y, .. } => {
            done(render_lc(&lc_tensor(&parse_expr(alg, x)?, &parse_expr(alg, y)?)))
        }
        Command::Convolve { f, g, expr, .. } => {
            let x = parse_expr(alg, expr)?;
            let mut needed: Vec<A::Basis> = Vec::new();
            for b in x.support() {
                for (Tensor(l, r), _) in &alg.coproduct_basis(b) {
                    needed.push(l.clone());
                    needed.push(r.clone());
                }
            }
            let fm = map_for(alg, *f, &needed)?;
            let gm = map_for(alg, *g, &needed)?;
            done(render_lc(&convolve(&fm, &gm, alg).apply(&x)))
        }
        _ => unreachable!("not an algebra verb"),
    }
}

fn rep_model(group: &GroupAlgebra, model: Model) -> Result<GroupRep<CycOmega>, CliError> {
    match model {
        Model::Omega => {
            let rho = GroupRep::c3_omega();
            if rho.group().name() != group.group.name() {
                return Err(CliError::Usage("the omega model is a representation of C3".into()));
            }
            Ok(rho)
        }
        Model::Regular => Ok(GroupRep::regular(group.group.clone()).lift()),
    }
}

fn max_degree_from_env() -> Result<usize, CliError> {
    match std::env::var(MAX_DEGREE_ENV) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| CliError::Usage(format!("{MAX_DEGREE_ENV}='{v}' is not a degree"))),
        Err(_) => Ok(DEFAULT_MAX_DEGREE),
    }
}

fn execute(cmd: &Command) -> Outcome {
    match cmd {
        Command::Coprod { alg, .. }
        | Command::Prod { alg, .. }
        | Command::Antipode { alg, .. }
        | Command::Counit { alg, .. }
        | Command::Pair { alg, .. }
        | Command::Eval { alg, .. }
        | Command::Tensor { alg, .. }
        | Command::Convolve { alg, .. } => {
            let a = alg.build()?;
            with_algebra!(&a, x => algebra_verb(x, cmd))
        }
        Command::Infiltrate { words, u, v } => {
            let alphabet = Alphabet::new(words.alphabet.chars());
            let (u, v) = (parse_alphabet_word(&alphabet, u)?, parse_alphabet_word(&alphabet, v)?);
            done(render_lc(&infiltration(&u, &v, &words.q)))
        }
        Command::Duality { words, u, v, w } => {
            let alphabet = Alphabet::new(words.alphabet.chars());
            let u = parse_alphabet_word(&alphabet, u)?;
            let v = parse_alphabet_word(&alphabet, v)?;
            let w = parse_alphabet_word(&alphabet, w)?;
            let (l, r) = duality_sides(&u, &v, &w, &words.q);
            let holds = l == r;
            let text = format!("{holds} ({} = {})", format_rational(&l), format_rational(&r));
            done(Rendered::new(
                text,
                json!({ "holds": holds, "coproduct_side": format_rational(&l), "product_side": format_rational(&r) }),
            ))
        }
        Command::Subword { word, indices } => {
            let w = parse_word(word)?;
            done(render_value(subword(&w, &parse_indices(indices)?)?))
        }
        Command::TraceNf { theta, word } => {
            let graph = parse_theta(theta).map_err(CliError::Usage)?;
            done(render_value(trace_normal_form(&parse_word(word)?, &graph)))
        }
        Command::Bell { n } => done(render_value(bell(*n))),
        Command::Stirling { n, k } => match k {
            Some(k) => done(render_value(stirling2(*n, *k))),
            None => {
                let row: Vec<String> = stirling2_row(*n).iter().map(|x| x.to_string()).collect();
                done(Rendered::new(row.join(" "), json!(row)))
            }
        },
        Command::Bellpoly { n } => done(render_lc(&bell_polynomial(*n))),
        Command::Partitions { n } => {
            let ps = set_partitions(*n)?;
            done(render_list(ps.iter().map(|p| p.to_string()).collect()))
        }
        Command::Egf { op, series } => {
            let f = parse_series(&series[0])?;
            let out = match (op, series.len()) {
                (EgfOp::Exp, 1) => egf_exp(&f)?,
                (EgfOp::Log, 1) => egf_log(&f)?,
                (EgfOp::Mul, 2) => egf_mul(&f, &parse_series(&series[1])?)?,
                (EgfOp::Mul, _) => return Err(CliError::Usage("mul takes two series".into())),
                _ => return Err(CliError::Usage("exp and log take one series".into())),
            };
            done(render_series(&out))
        }
        Command::Hadamard { order, route, series } => match series.len() {
            2 => {
                let f = parse_series(&series[0])?;
                let g = parse_series(&series[1])?;
                done(render_series(&hadamard(&f, &g)?))
            }
            0 => {
                let s = match route {
                    Route::Coefficients => hadamard_via_coefficients(*order),
                    Route::Partitions => hadamard_via_partitions(*order)?,
                    Route::Diagrams => hadamard_via_diagrams(*order)?,
                };
                done(render_poly_series(&s))
            }
            _ => Err(CliError::Usage("hadamard takes zero or two series".into())),
        },
        Command::DiagCanon { diagram } => {
            done(render_value(diag_canonical(&parse_diagram(diagram)?)?))
        }
        Command::DiagRestrict { diagram, indices } => {
            let d = parse_diagram(diagram)?;
            done(render_value(ldiag_restrict(&d, &parse_indices(indices)?)?))
        }
        Command::DiagFromPartitions { p1, p2 } => {
            let d = diagram_from_partitions(&parse_partition(p1)?, &parse_partition(p2)?)?;
            done(render_value(d))
        }
        Command::SpotTypes { diagram } => {
            let (alpha, beta) = spot_types(&parse_diagram(diagram)?);
            let (a, b) = (render_multi_index(&alpha), render_multi_index(&beta));
            done(Rendered::new(
                format!("alpha = {a}\nbeta = {b}"),
                json!({ "alpha": a, "beta": b }),
            ))
        }
        Command::Mult { diagram, n } => {
            let d = diag_canonical(&parse_diagram(diagram)?)?;
            let n = n.unwrap_or(d.degree());
            done(render_value(mult_of_diagram(&d, n)?))
        }
        Command::Rep {
            group,
            model,
            tensor,
            expr,
        } => {
            let alg = GroupAlgebra::new(
                hopfcalc_core::bases::FiniteGroup::by_name(group).map_err(|e| CliError::Usage(e.to_string()))?,
            );
            let x = parse_expr(&alg, expr)?;
            let left = rep_model(&alg, *model)?;
            let m = match tensor {
                None => rep_apply(&left, &x)?,
                Some(t) => {
                    let right = rep_model(&alg, *t)?;
                    let prod = rep_tensor(left, right, &alg, &alg.corpus(0))?;
                    rep_apply(&prod, &x)?
                }
            };
            done(render_matrix(&m))
        }
        Command::Check { alg } => {
            let lines = run_checks(alg.as_deref(), max_degree_from_env()?);
            Ok((render_checks(&lines), all_pass(&lines)))
        }
        Command::Table { max } => {
            if *max > DEFAULT_HADAMARD_BOUND {
                return Err(Error::SizeLimit {
                    what: format!("table up to n = {max}"),
                    bound: DEFAULT_HADAMARD_BOUND,
                }
                .into());
            }
            let mut lines = vec!["n,bell,stirling,diagrams,mult_sum".to_string()];
            let mut rows = Vec::new();
            for n in 0..=*max {
                let census = diagram_census_bounded(n, DEFAULT_HADAMARD_BOUND)?;
                let row: Vec<String> = stirling2_row(n).iter().map(|x| x.to_string()).collect();
                let (b, count, total) = (bell(n), census.len(), total_multiplicity(&census));
                lines.push(format!("{n},{b},{},{count},{total}", row.join(" ")));
                rows.push(json!({
                    "n": n, "bell": b.to_string(), "stirling": row,
                    "diagrams": count, "mult_sum": total,
                }));
            }
            done(Rendered::new(lines.join("\n"), serde_json::Value::Array(rows)))
        }
    }
}

/// Runs one invocation; `argv` excludes the program name. Returns the exit
/// code, standard output and standard error.
///
/// Exit codes: 0 on success, 1 when `check` finds a failing suite, 2 on a
/// usage or input error, 3 on a mathematical error (whose name alone is
/// written to standard error).
pub fn run_command<S: AsRef<str>>(argv: &[S]) -> (i32, String, String) {
    let args = std::iter::once("hopfcalc").chain(argv.iter().map(AsRef::as_ref));
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => (0, e.to_string(), String::new()),
                _ => (2, String::new(), e.to_string()),
            };
        }
    };
    match execute(&cli.command) {
        Ok((r, true)) => (0, r.emit(cli.format), String::new()),
        Ok((r, false)) => (1, r.emit(cli.format), String::new()),
        Err(CliError::Usage(msg)) => (2, String::new(), format!("error: {msg}\n")),
        Err(CliError::Math(e)) => (3, String::new(), format!("{}\n", e.name())),
    }
}
