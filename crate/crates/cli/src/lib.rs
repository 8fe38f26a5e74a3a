//! `sdalg` command dispatch. [`run_command`] returns the report and the
//! output format; `main` only prints and exits.

use std::path::PathBuf;
use std::time::Duration;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use sdalg::automata::{self, build_automaton, build_s_near_automaton, format_trace, parse_word, OutputRule, TransitionRule};
use sdalg::constructors::{build_poly_quotient, format_poly, is_irreducible, TruncPolyAlgebra};
use sdalg::descriptor::parse_descriptor;
use sdalg::detect::{
    sweep_with, verify_certificate, Certificate, Conjecture, Detection, Detector, Family, Mode, Property, Structure,
    SweepOptions,
};
use sdalg::finite::{AxiomReport, Checker, StructureClass, DEFAULT_CAP};
use sdalg::ideals::{classify_ideal, enumerate_ideals, find_s_ideal};
use sdalg::linear::{self, AuditConfig, SemiVecDescriptor, Semifield, VecQ};
use sdalg::rational::{format_rat, parse_rat};
use sdalg::report::{notes, Format, Report, EXIT_ERROR, EXIT_NOT_FOUND, EXIT_OK};
use sdalg::symbolic::SymbolicAmbient;
use sdalg::{Error, LatticeSet, Rat, Result};

#[derive(Debug, Parser)]
#[command(name = "sdalg", version, about = "Weak and strong substructures of finite and symbolic algebras")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, default_value = "text")]
    format: Format,
    /// Seed for randomized audits.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check a structure against a class, or re-verify a certificate.
    Verify(VerifyArgs),
    /// Search for a substructure property.
    Detect(DetectArgs),
    /// Enumerate and classify the ideals of a finite ring.
    Ideals(InFile),
    /// Left coset aH of a lattice set.
    Coset(CosetArgs),
    /// Double coset HxK.
    Dcoset(DcosetArgs),
    /// Set product HK, or a product in a truncated polynomial algebra.
    Product(ProductArgs),
    /// Z_p[x]/(f): size, irreducibility, field check, inverses.
    Quotient(QuotientArgs),
    /// S-definite basis check.
    Basis(BasisArgs),
    /// Inner product on a semivector lattice, with audits.
    Innerprod(InnerArgs),
    /// Build and run an automaton.
    Automaton(AutomatonArgs),
    /// Exhaustive sweep of a structure family.
    Sweep(SweepArgs),
}

#[derive(Debug, Args)]
struct InFile {
    /// Structure descriptor (JSON).
    #[arg(long = "in")]
    input: PathBuf,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    #[arg(long = "in", conflicts_with = "certificate", required_unless_present = "certificate")]
    input: Option<PathBuf>,
    /// semigroup, monoid, group, abelian-group, ring, commutative-ring,
    /// division-ring, field, semiring, semifield, near-ring, seminear-ring,
    /// distributive-lattice
    #[arg(long, requires = "input")]
    class: Option<String>,
    /// Certificate JSON as printed by `detect --format json`.
    #[arg(long)]
    certificate: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct DetectArgs {
    #[arg(long)]
    property: Property,
    #[arg(long = "in")]
    input: PathBuf,
    /// exhaustive or catalog; defaults by structure.
    #[arg(long)]
    mode: Option<Mode>,
    #[arg(long)]
    allow_trivial: bool,
}

#[derive(Debug, Args)]
struct CosetArgs {
    #[arg(long = "H")]
    h: LatticeSet,
    #[arg(long, allow_hyphen_values = true)]
    a: String,
    /// q-mul or q-add.
    #[arg(long, default_value = "q-mul")]
    ambient: String,
}

#[derive(Debug, Args)]
struct DcosetArgs {
    #[arg(long = "H")]
    h: LatticeSet,
    #[arg(long, allow_hyphen_values = true)]
    x: String,
    #[arg(long = "K")]
    k: LatticeSet,
}

#[derive(Debug, Args)]
struct ProductArgs {
    #[arg(long = "H", requires = "k", required_unless_present = "trunc")]
    h: Option<LatticeSet>,
    #[arg(long = "K")]
    k: Option<LatticeSet>,
    /// Degree bound d of the algebra with x^(d+1) = 1.
    #[arg(long, conflicts_with = "h", requires_all = ["left", "right"])]
    trunc: Option<usize>,
    /// Coefficients, constant term first.
    #[arg(long, allow_hyphen_values = true)]
    left: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    right: Option<String>,
}

#[derive(Debug, Args)]
struct QuotientArgs {
    #[arg(long)]
    p: u64,
    /// Coefficients of f, constant term first.
    #[arg(long, allow_hyphen_values = true)]
    modulus: String,
    /// Element to invert, constant term first.
    #[arg(long, allow_hyphen_values = true)]
    inverse: Option<String>,
}

#[derive(Debug, Args)]
struct BasisArgs {
    /// Rows separated by `;`, entries by `,`.
    #[arg(long, allow_hyphen_values = true)]
    vectors: String,
    /// Z0 or Q0.
    #[arg(long, default_value = "Z0")]
    semifield: String,
}

#[derive(Debug, Args)]
struct InnerArgs {
    #[arg(long, allow_hyphen_values = true)]
    x: String,
    #[arg(long, allow_hyphen_values = true)]
    y: String,
    #[arg(long, default_value = "Z0")]
    semifield: String,
    /// Coordinate bound for the exhaustive orthogonality scan.
    #[arg(long, default_value_t = 2)]
    bound: i64,
}

#[derive(Debug, Args)]
struct AutomatonArgs {
    #[arg(long)]
    states: usize,
    /// Letters separated by `;`, tuple entries by `,`.
    #[arg(long, allow_hyphen_values = true)]
    alphabet: String,
    /// Whitespace-separated letter indices.
    #[arg(long, default_value = "")]
    word: String,
    #[arg(long, default_value_t = 0)]
    start: usize,
    /// Near-ring descriptor; the automaton is only built if it is S-definite special.
    #[arg(long)]
    near: Option<PathBuf>,
    #[arg(long, default_value_t = automata::DEFAULT_FREENESS_BOUND)]
    bound: usize,
}

#[derive(Debug, Args)]
struct SweepArgs {
    #[arg(long)]
    conjecture: Conjecture,
    #[arg(long)]
    family: Family,
    #[arg(long)]
    max: usize,
    /// Seconds.
    #[arg(long, default_value_t = 600)]
    time_limit: u64,
}

fn read(path: &PathBuf) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Malformed(format!("{}: {e}", path.display())))
}

fn load(path: &PathBuf) -> Result<Structure> {
    parse_descriptor(&read(path)?)?.build()
}

fn ints(text: &str) -> Result<Vec<i64>> {
    text.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| t.parse::<i64>().map_err(|_| Error::Malformed(format!("`{t}` is not an integer"))))
        .collect()
}

fn rats(text: &str) -> Result<Vec<Rat>> {
    text.split(',').map(str::trim).filter(|t| !t.is_empty()).map(parse_rat).collect()
}

fn rows<T>(text: &str, f: impl Fn(&str) -> Result<T>) -> Result<Vec<T>> {
    text.split(';').map(str::trim).filter(|t| !t.is_empty()).map(f).collect()
}

fn semifield(text: &str) -> Result<Semifield> {
    match text {
        "Z0" => Ok(Semifield::ZNonNeg),
        "Q0" => Ok(Semifield::QNonNeg),
        _ => Err(Error::UnknownKind(format!("semifield `{text}` (Z0 or Q0)"))),
    }
}

fn class_named(name: &str) -> Result<StructureClass> {
    use StructureClass as K;
    Ok(match name {
        "semigroup" => K::Semigroup,
        "monoid" => K::Monoid,
        "group" => K::Group,
        "abelian-group" => K::AbelianGroup,
        "commutative-semigroup" => K::CommutativeSemigroup,
        "ring" => K::Ring,
        "commutative-ring" => K::CommutativeRing,
        "division-ring" => K::DivisionRing,
        "field" => K::Field,
        "semiring" => K::Semiring,
        "semifield" => K::Semifield,
        "near-ring" => K::NearRing,
        "seminear-ring" => K::SeminearRing,
        "distributive-lattice" => K::DistributiveLattice,
        _ => return Err(Error::UnknownKind(format!("class `{name}`"))),
    })
}

fn check_class(s: &Structure, class: StructureClass) -> Result<AxiomReport> {
    use StructureClass as K;
    let ck = Checker::new(DEFAULT_CAP);
    match s {
        Structure::Magma { table, .. } => {
            let all = table.elements();
            Ok(match class {
                K::Semigroup => ck.semigroup_on(table, &all),
                K::Monoid => ck.monoid_on(table, &all),
                K::Group => ck.group_on(table, &all),
                K::AbelianGroup => ck.abelian_group_on(table, &all),
                K::CommutativeSemigroup => ck.commutative_semigroup_on(table, &all),
                _ => return Err(Error::ClassMismatch(format!("{class:?} needs two operations"))),
            })
        }
        Structure::Ring { table, .. } => {
            let all = table.elements();
            Ok(match class {
                K::Ring => ck.ring_on(table, &all),
                K::CommutativeRing => ck.commutative_ring_on(table, &all),
                K::DivisionRing => ck.division_ring_on(table, &all),
                K::Field => ck.field_on(table, &all),
                K::Semiring => ck.semiring_on(table, &all),
                K::Semifield => ck.semifield_on(table, &all),
                K::NearRing => ck.near_ring_on(table, &all),
                K::SeminearRing => ck.seminear_ring_on(table, &all),
                K::DistributiveLattice => ck.distributive_lattice_on(table, &all),
                _ => return Err(Error::ClassMismatch(format!("{class:?} is a one-operation class"))),
            })
        }
        Structure::Symbolic { .. } => Err(Error::Unsupported("only finite structures are checked against classes".into())),
    }
}

fn report_text(r: &AxiomReport, label: impl Fn(usize) -> String) -> String {
    if r.passed() {
        return format!("{:?}: all axioms hold", r.class);
    }
    let mut s = format!("{:?}: {} violation(s){}", r.class, r.violations.len(), if r.truncated { " (truncated)" } else { "" });
    for v in &r.violations {
        let w: Vec<String> = v.witness.iter().map(|&a| label(a)).collect();
        s.push_str(&format!("\n  {:?} at ({})", v.axiom, w.join(", ")));
    }
    s
}

fn labeller(s: &Structure) -> impl Fn(usize) -> String + '_ {
    move |a| match s {
        Structure::Magma { table, .. } => table.label(a).to_string(),
        Structure::Ring { table, .. } => table.label(a).to_string(),
        Structure::Symbolic { .. } => a.to_string(),
    }
}

fn sub_table(s: &Structure, els: &[usize]) -> Option<String> {
    let Structure::Magma { table, .. } = s else { return None };
    let l: Vec<&str> = els.iter().map(|&a| table.label(a)).collect();
    let w = l.iter().map(|x| x.len()).max().unwrap_or(1);
    let mut out = format!("{:>w$} |", "*");
    for x in &l {
        out.push_str(&format!(" {x:>w$}"));
    }
    out.push('\n');
    for &a in els {
        out.push_str(&format!("{:>w$} |", table.label(a)));
        for &b in els {
            out.push_str(&format!(" {:>w$}", table.label(table.op(a, b))));
        }
        out.push('\n');
    }
    Some(out)
}

fn certificate_text(c: &Certificate) -> String {
    let mut s = format!("{} in {}: {}", c.property, c.structure.name(), c.witness_text());
    if let Some(els) = c.finite_witness() {
        if let Some(t) = sub_table(&c.structure, els) {
            s.push('\n');
            s.push_str(&t);
        }
    }
    for r in &c.rules {
        s.push_str(&format!("\n  rule {}: expected {}, observed {}", r.rule, r.expected, r.observed));
    }
    s
}

fn value<T: serde::Serialize>(t: &T) -> Value {
    serde_json::to_value(t).expect("serializable")
}

fn verify(a: &VerifyArgs, argv: Vec<String>) -> Result<Report> {
    if let Some(path) = &a.certificate {
        let bad = |e: serde_json::Error| Error::Malformed(format!("certificate: {e}"));
        let mut v: Value = serde_json::from_str(&read(path)?).map_err(bad)?;
        // A saved `detect --format json` report carries the certificate under `result`.
        if let Some(inner) = v.pointer_mut("/result/certificate") {
            v = inner.take();
        }
        let cert: Certificate = serde_json::from_value(v).map_err(bad)?;
        let ok = verify_certificate(&cert);
        let summary = format!("certificate for {} in {} {}", cert.property, cert.structure.name(), if ok { "verifies" } else { "does not verify" });
        return Ok(Report::new(argv, json!({ "verified": ok }), summary, if ok { EXIT_OK } else { EXIT_NOT_FOUND }));
    }
    let s = load(a.input.as_ref().expect("clap requires --in"))?;
    let class = class_named(a.class.as_deref().ok_or_else(|| Error::Malformed("--class is required with --in".into()))?)?;
    let r = check_class(&s, class)?;
    let summary = format!("{}\n{}", s.name(), report_text(&r, labeller(&s)));
    let code = if r.passed() { EXIT_OK } else { EXIT_NOT_FOUND };
    Ok(Report::new(argv, json!({ "structure": s.name(), "report": value(&r) }), summary, code))
}

fn detect_cmd(a: &DetectArgs, argv: Vec<String>) -> Result<Report> {
    let s = load(&a.input)?;
    let mode = a.mode.unwrap_or(if s.is_finite() { Mode::Exhaustive } else { Mode::Catalog });
    let d = Detector { allow_trivial: a.allow_trivial, ..Detector::default() };
    let det = d.detect(&s, a.property, mode)?;
    Ok(match &det {
        Detection::Found { certificate } => Report::new(argv, value(&det), certificate_text(certificate), EXIT_OK),
        Detection::NotFound { exhaustive, refutation } => {
            let mut summary = format!(
                "{} in {}: not found ({})",
                a.property,
                s.name(),
                if *exhaustive { "exhaustive" } else { "not exhaustive" }
            );
            if let Some(r) = refutation {
                summary.push_str(&format!("\n  {r}"));
            }
            Report::new(argv, value(&det), summary, EXIT_NOT_FOUND)
        }
    })
}

fn ideals_cmd(a: &InFile, argv: Vec<String>) -> Result<Report> {
    let s = load(&a.input)?;
    let Structure::Ring { table, name } = &s else {
        return Err(Error::ClassMismatch("ideals need a finite ring".into()));
    };
    let all = enumerate_ideals(table)?;
    let classes = all.iter().map(|i| classify_ideal(table, i)).collect::<Result<Vec<_>>>()?;
    let sideal = find_s_ideal(table)?;
    let mut summary = format!("{name}: {} ideals", all.len());
    for c in &classes {
        let flags: Vec<&str> = [
            (c.trivial, "trivial"),
            (c.prime, "prime"),
            (c.maximal, "maximal"),
            (c.minimal, "minimal"),
            (c.principal, "principal"),
        ]
        .iter()
        .filter(|(b, _)| *b)
        .map(|(_, n)| *n)
        .collect();
        summary.push_str(&format!("\n  {}: {}", c.ideal, flags.join(" ")));
    }
    if let Some((i, f)) = sideal.witness() {
        summary.push_str(&format!("\nS-ideal {} containing field {}", s.format_subset(i), s.format_subset(f)));
    }
    Ok(Report::new(argv, json!({ "ideals": value(&classes), "s_ideals": value(&sideal) }), summary, EXIT_OK))
}

fn set_report(argv: Vec<String>, set: &LatticeSet, what: String, extra: Value) -> Report {
    let mut result = json!({ "set": set.to_string(), "closed_mul": set.is_closed_mul(), "closed_add": set.is_closed_add() });
    if let (Value::Object(m), Value::Object(e)) = (&mut result, extra) {
        m.extend(e);
    }
    Report::new(argv, result, format!("{what} = {set}"), EXIT_OK)
}

fn coset(a: &CosetArgs, argv: Vec<String>) -> Result<Report> {
    let x = parse_rat(&a.a)?;
    let amb = match a.ambient.as_str() {
        "q-mul" => SymbolicAmbient::QNonZeroMul,
        "q-add" => SymbolicAmbient::QAdd,
        o => return Err(Error::UnknownKind(format!("ambient `{o}` (q-mul or q-add)"))),
    };
    let c = a.h.left_coset(&x, amb)?;
    let extra = json!({ "contains_H": a.h.subset_of(&c), "inside_H": c.subset_of(&a.h) });
    Ok(set_report(argv, &c, format!("{}·({})", format_rat(&x), a.h), extra))
}

fn dcoset(a: &DcosetArgs, argv: Vec<String>) -> Result<Report> {
    let x = parse_rat(&a.x)?;
    let d = LatticeSet::double_coset(&a.h, &x, &a.k)?;
    let meets_h = !d.intersect(&a.h).is_empty();
    let extra = json!({ "meets_H": meets_h, "H_cap_K": a.h.intersect(&a.k).to_string() });
    let mut r = set_report(argv, &d, format!("({})·{}·({})", a.h, format_rat(&x), a.k), extra);
    if let Some(n) = notes::for_double_coset(&a.h, &x, &a.k) {
        r = r.annotate(n);
    }
    Ok(r)
}

fn product(a: &ProductArgs, argv: Vec<String>) -> Result<Report> {
    if let Some(bound) = a.trunc {
        let alg = TruncPolyAlgebra::new(bound);
        let (l, r) = (rats(a.left.as_deref().unwrap_or(""))?, rats(a.right.as_deref().unwrap_or(""))?);
        let p = alg.mul(&l, &r);
        let coeffs: Vec<String> = p.iter().map(format_rat).collect();
        let summary = format!("({})({}) = {}", alg.format(&l), alg.format(&r), alg.format(&p));
        return Ok(Report::new(argv, json!({ "product": coeffs, "text": alg.format(&p) }), summary, EXIT_OK));
    }
    let (h, k) = (a.h.as_ref().expect("clap"), a.k.as_ref().expect("clap"));
    let p = h.set_product(k)?;
    Ok(set_report(argv, &p, format!("({h})·({k})"), json!({})))
}

fn quotient(a: &QuotientArgs, argv: Vec<String>) -> Result<Report> {
    let f = ints(&a.modulus)?;
    let q = build_poly_quotient(a.p, &f)?;
    let irr = is_irreducible(a.p, &f)?;
    let field = q.quotient_is_field();
    let mut summary = format!("Z_{}[x]/({}): {} elements", a.p, format_poly(&q.modulus), q.order());
    match &irr.factors {
        Some((g, h)) => summary.push_str(&format!("\nreducible: ({})({})", format_poly(g), format_poly(h))),
        None => summary.push_str("\nirreducible"),
    }
    match &field.zero_divisor {
        Some((x, y)) => summary.push_str(&format!("\nnot a field: ({})({}) = 0", q.label(x), q.label(y))),
        None => summary.push_str("\nfield"),
    }
    let mut result = json!({
        "order": q.order(),
        "modulus": format_poly(&q.modulus),
        "irreducibility": value(&irr),
        "field": value(&field),
    });
    if let Some(text) = &a.inverse {
        let e = q.element(&ints(text)?);
        let inv = q.inverse(&e);
        summary.push_str(&format!(
            "\ninverse of {}: {}",
            q.label(&e),
            inv.as_ref().map_or("none".to_string(), |i| q.label(i))
        ));
        result["inverse"] = json!(inv.as_ref().map(|i| q.label(i)));
    }
    let mut r = Report::new(argv, result, summary, EXIT_OK);
    if let Some(n) = notes::for_quotient(&q, &irr) {
        r = r.annotate(n);
    }
    Ok(r)
}

fn basis(a: &BasisArgs, argv: Vec<String>) -> Result<Report> {
    let vs: Vec<VecQ> = rows(&a.vectors, |t| rats(t).map(VecQ))?;
    let n = vs.first().map_or(0, VecQ::dim);
    let k = semifield(&a.semifield)?;
    let w = SemiVecDescriptor::uniform(k.as_comp(), n, k);
    let ok = linear::is_s_definite_basis(&vs, n, &w)?;
    let dim = linear::s_definite_dimension(n, std::slice::from_ref(&w));
    let summary = format!(
        "S-definite basis of Q^{n} and {}: {}\nS-definite dimension: {}",
        w.describe(),
        ok,
        dim.map_or("none".into(), |d| d.to_string())
    );
    Ok(Report::new(argv, json!({ "s_definite_basis": ok, "dimension": dim, "rank": linear::rank(&vs) }), summary, if ok { EXIT_OK } else { EXIT_NOT_FOUND }))
}

fn innerprod(a: &InnerArgs, seed: u64, argv: Vec<String>) -> Result<Report> {
    let (x, y) = (VecQ(rats(&a.x)?), VecQ(rats(&a.y)?));
    if x.dim() != y.dim() {
        return Err(Error::DimensionMismatch(format!("{} vs {}", x.dim(), y.dim())));
    }
    let k = semifield(&a.semifield)?;
    let w = SemiVecDescriptor::uniform(k.as_comp(), x.dim(), k);
    let v = linear::inner_product(&x, &y, &w, None)?;
    let cfg = AuditConfig { seed, ..AuditConfig::default() };
    let audit = linear::audit_inner_product(&w, None, &cfg);
    let orth = linear::orthogonality_report(x.dim(), a.bound);
    let summary = format!(
        "({x}|{y}) = {}\naudit: {}\northogonal iff disjoint support: {}\nonly zero is self-orthogonal: {}\nonly zero is orthogonal to all: {}",
        format_rat(&v),
        if audit.passed() { "passes" } else { "fails" },
        orth.disjoint_support_iff_orthogonal,
        orth.self_orthogonal_only_zero,
        orth.orthogonal_to_all_only_zero
    );
    let result = json!({ "value": format_rat(&v), "audit": value(&audit), "orthogonality": value(&orth) });
    Ok(Report::new(argv, result, summary, EXIT_OK).annotate(notes::orthogonality()))
}

fn automaton(a: &AutomatonArgs, argv: Vec<String>) -> Result<Report> {
    let alphabet = rows(&a.alphabet, ints)?;
    let word = parse_word(&a.word)?;
    let (auto, extra) = match &a.near {
        Some(path) => {
            let near = load(path)?;
            let built = build_s_near_automaton(&near, a.states, alphabet.clone(), a.bound)?;
            let extra = json!({ "near_ring": value(&built.near_ring), "freeness": value(&built.freeness) });
            (built.automaton, extra)
        }
        None => {
            let au = build_automaton(a.states, alphabet.clone(), a.states, &TransitionRule::AddMod, &OutputRule::SumMod)?;
            (au, json!({ "freeness": value(&automata::freeness_check(&alphabet, a.bound)) }))
        }
    };
    let (trace, out) = auto.run_io(a.start, &word)?;
    let mut result = json!({ "trace": trace, "outputs": out });
    if let (Value::Object(m), Value::Object(e)) = (&mut result, extra) {
        m.extend(e);
    }
    Ok(Report::new(argv, result, format_trace(&trace), EXIT_OK)
        .annotate(notes::transition_signature())
        .annotate(notes::bounded_freeness(a.bound)))
}

fn sweep_cmd(a: &SweepArgs, argv: Vec<String>) -> Result<Report> {
    let r = sweep_with(a.conjecture, a.family, a.max, SweepOptions { time_limit: Duration::from_secs(a.time_limit) })?;
    let summary = format!(
        "{:?} ({}) over {} members of {:?} up to {}: {} witnesses, {} subsets examined",
        r.conjecture,
        r.statement,
        r.members.len(),
        r.family,
        r.max_size,
        r.witness_count,
        r.subsets_examined
    );
    let code = if r.holds() { EXIT_OK } else { EXIT_NOT_FOUND };
    Ok(Report::new(argv, value(&r), summary, code))
}

/// Parses `argv` (program name first) and runs the command. Usage errors
/// and failures come back as reports with exit status 2.
pub fn run_command<I, T>(argv: I) -> (Report, Format)
where
    I: IntoIterator<Item = T>,
    T: Into<String>,
{
    let argv: Vec<String> = argv.into_iter().map(Into::into).collect();
    let echo: Vec<String> = argv.iter().skip(1).cloned().collect();
    let cli = match Cli::try_parse_from(&argv) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => EXIT_OK,
                _ => EXIT_ERROR,
            };
            let text = e.render().to_string();
            let r = Report::new(echo, json!({ "usage": text }), text, code);
            return (r, Format::Text);
        }
    };
    let a = echo.clone();
    let out = match &cli.command {
        Command::Verify(x) => verify(x, a),
        Command::Detect(x) => detect_cmd(x, a),
        Command::Ideals(x) => ideals_cmd(x, a),
        Command::Coset(x) => coset(x, a),
        Command::Dcoset(x) => dcoset(x, a),
        Command::Product(x) => product(x, a),
        Command::Quotient(x) => quotient(x, a),
        Command::Basis(x) => basis(x, a),
        Command::Innerprod(x) => innerprod(x, cli.seed, a),
        Command::Automaton(x) => automaton(x, a),
        Command::Sweep(x) => sweep_cmd(x, a),
    };
    let report = out.unwrap_or_else(|e| Report::error(echo, &e.to_string()));
    (report, cli.format)
}
