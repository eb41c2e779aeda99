use std::fmt;

use crate::cli::eval::{eval, EvalOptions};
use crate::cli::parse::parse;
use crate::dualflag::{wedge_tagged, DualityConfig, TaggedMultivector};
use crate::duality::{hodge, left_complement, poincare, polarity, raise};
use crate::error::Error;
use crate::multivector::Multivector;
use crate::regressive::{proportionality, vee, vee_metric, Backend};
use crate::signature::{BasisBlade, Signature};

/// Right complements of the sixteen blades of (3,0,1), in the customary
/// non-canonical blade names. Each pair is `(blade, H(blade))`.
pub const TABLE_H: [(&str, &str); 16] = [
    ("1", "e0123"),
    ("e0", "e123"),
    ("e1", "e032"),
    ("e2", "e013"),
    ("e3", "e021"),
    ("e01", "e23"),
    ("e02", "e31"),
    ("e03", "e12"),
    ("e12", "e03"),
    ("e31", "e02"),
    ("e23", "e01"),
    ("e123", "-e0"),
    ("e032", "-e1"),
    ("e013", "-e2"),
    ("e021", "-e3"),
    ("e0123", "1"),
];

/// Dual coordinates `J(blade)` of the same sixteen blades, as elements of
/// the dual algebra.
pub const TABLE_J: [(&str, &str); 16] = [
    ("1", "e^0123"),
    ("e0", "e^123"),
    ("e1", "e^032"),
    ("e2", "e^013"),
    ("e3", "e^021"),
    ("e01", "e^23"),
    ("e02", "e^31"),
    ("e03", "e^12"),
    ("e12", "e^03"),
    ("e31", "e^02"),
    ("e23", "e^01"),
    ("e123", "-e^0"),
    ("e032", "-e^1"),
    ("e013", "-e^2"),
    ("e021", "-e^3"),
    ("e0123", "e^"),
];

/// Per-blade signs `s_I` with `P(e_I) = s_I H(e_I)` in (4,0,0), indexed by
/// blade mask. Frozen as a regression fixture.
pub const POLARITY_SIGNS_400: [i8; 16] = [1, 1, 1, -1, 1, -1, -1, -1, 1, -1, -1, -1, -1, -1, -1, 1];

/// Golden rows for the `H` and `J` table checks.
#[derive(Clone, Debug, PartialEq)]
pub struct CheckOptions {
    pub golden_h: Vec<(String, String)>,
    pub golden_j: Vec<(String, String)>,
}

impl Default for CheckOptions {
    fn default() -> Self {
        let own = |t: &[(&str, &str)]| {
            t.iter()
                .map(|(a, b)| (a.to_string(), b.to_string()))
                .collect()
        };
        CheckOptions {
            golden_h: own(&TABLE_H),
            golden_j: own(&TABLE_J),
        }
    }
}

/// Outcome of one named check with the entries that failed.
#[derive(Clone, Debug, PartialEq)]
pub struct CheckLine {
    pub name: String,
    pub cases: usize,
    pub failures: Vec<String>,
}

impl CheckLine {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct CheckReport {
    pub lines: Vec<CheckLine>,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.lines.iter().all(CheckLine::passed)
    }

    pub fn line(&self, name: &str) -> Option<&CheckLine> {
        self.lines.iter().find(|l| l.name == name)
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for line in &self.lines {
            let status = if line.passed() { "PASS" } else { "FAIL" };
            writeln!(f, "{status}  {} ({} cases)", line.name, line.cases)?;
            for failure in &line.failures {
                writeln!(f, "      {failure}")?;
            }
        }
        let failed = self.lines.iter().filter(|l| !l.passed()).count();
        write!(f, "{} checks, {failed} failed", self.lines.len())
    }
}

struct Collector {
    name: &'static str,
    cases: usize,
    failures: Vec<String>,
}

impl Collector {
    fn new(name: &'static str) -> Self {
        Collector {
            name,
            cases: 0,
            failures: Vec::new(),
        }
    }

    fn case(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.failures.push(describe());
        }
    }

    fn finish(self) -> CheckLine {
        CheckLine {
            name: self.name.to_string(),
            cases: self.cases,
            failures: self.failures,
        }
    }
}

fn read(src: &str, sig: Signature) -> Result<TaggedMultivector, String> {
    let opts = EvalOptions {
        sig,
        ..EvalOptions::default()
    };
    let expr = parse(src, sig.dim()).map_err(|e| format!("`{src}`: {e}"))?;
    eval(&expr, &opts).map_err(|e| format!("`{src}`: {e}"))
}

fn golden(
    name: &'static str,
    rows: &[(String, String)],
    map: impl Fn(&Multivector) -> TaggedMultivector,
) -> CheckLine {
    let sig = Signature::pga3();
    let mut c = Collector::new(name);
    let mut seen = vec![false; sig.blade_count()];
    for (src, image) in rows {
        let (x, want) = match (read(src, sig), read(image, sig)) {
            (Ok(x), Ok(want)) => (x, want),
            (Err(e), _) | (_, Err(e)) => {
                c.case(false, || e);
                continue;
            }
        };
        if let Some(b) = x.payload().terms().next().map(|t| t.0) {
            seen[b.index()] = true;
        }
        let got = map(x.payload());
        c.case(got == want, || format!("{src}: expected {want}, got {got}"));
    }
    for b in sig.blades().filter(|b| !seen[b.index()]) {
        c.case(false, || format!("{b}: no golden row"));
    }
    c.finish()
}

fn blades(sig: Signature) -> impl Iterator<Item = (BasisBlade, Multivector)> {
    sig.blades()
        .map(move |b| (b, Multivector::blade(sig, b, 1.0)))
}

fn sig400() -> Signature {
    Signature::euclidean(4).expect("valid signature")
}

fn polarity_signs() -> CheckLine {
    let sig = sig400();
    let mut c = Collector::new("P = s*H in (4,0,0) with frozen signs");
    for (b, x) in blades(sig) {
        let want = hodge(&x).scale(POLARITY_SIGNS_400[b.index()] as f64);
        let got = polarity(&x);
        c.case(got == want, || format!("{b}: expected {want}, got {got}"));
    }
    c.finish()
}

fn polarity_degenerate() -> CheckLine {
    let sig = Signature::pga3();
    let e0 = BasisBlade::generator(0);
    let mut c = Collector::new("P degenerate in (3,0,1)");
    for (b, x) in blades(sig) {
        let p = polarity(&x);
        if b.has_generator(0) {
            c.case(p.is_zero(), || format!("{b}: expected 0, got {p}"));
        } else {
            let ideal = !p.is_zero() && p.terms().all(|(t, _)| t.mask() & e0.mask() != 0);
            c.case(ideal, || format!("{b}: image {p} is not ideal"));
        }
    }
    c.finish()
}

fn exercises() -> CheckLine {
    let mut c = Collector::new("regressive exercises");
    let cases = [("e123", "e032", "e23"), ("e0", "e123", "1")];
    for sig in [Signature::pga3(), sig400()] {
        let p = |s: &str| Multivector::parse_blade(sig, s).expect("valid blade");
        for (a, b, want) in cases {
            let (x, y, want) = (p(a), p(b), p(want));
            for backend in Backend::ALL {
                if backend == Backend::Metric && sig.is_degenerate() {
                    continue;
                }
                let got = vee(&x, &y, backend);
                let ok = match (&got, backend) {
                    (Ok(v), Backend::Metric) => proportionality(v, &want, 1e-12).is_some(),
                    (Ok(v), _) => *v == want,
                    (Err(_), _) => false,
                };
                c.case(ok, || format!("{sig} {backend}: {a} & {b} = {got:?}"));
            }
        }
    }
    c.finish()
}

fn backend_equivalence() -> CheckLine {
    let sig = Signature::pga3();
    let mut c = Collector::new("vee backends agree on (3,0,1)");
    for (a, x) in blades(sig) {
        for (b, y) in blades(sig) {
            let j = vee(&x, &y, Backend::Poincare);
            for backend in [Backend::Hodge, Backend::Shuffle] {
                let other = vee(&x, &y, backend);
                c.case(other == j, || {
                    format!("{a} & {b}: j gives {j:?}, {backend} gives {other:?}")
                });
            }
        }
    }
    c.finish()
}

fn metric_proportional() -> CheckLine {
    let sig = sig400();
    let mut c = Collector::new("metric vee proportional to j on (4,0,0)");
    for (a, x) in blades(sig) {
        for (b, y) in blades(sig) {
            let (m, j) = (vee(&x, &y, Backend::Metric), vee(&x, &y, Backend::Poincare));
            let ok = match (&m, &j) {
                (Ok(m), Ok(j)) => proportionality(m, j, 1e-12).is_some(),
                _ => false,
            };
            c.case(ok, || format!("{a} & {b}: metric {m:?}, j {j:?}"));
        }
    }
    c.finish()
}

fn metric_degenerate() -> CheckLine {
    let sig = Signature::pga3();
    let mut c = Collector::new("metric vee rejects (3,0,1)");
    let (x, y) = (
        Multivector::basis_vector(sig, 1),
        Multivector::basis_vector(sig, 2),
    );
    let got = vee_metric(&x, &y);
    c.case(got == Err(Error::DegenerateMetric), || {
        format!("got {got:?}")
    });
    c.finish()
}

fn complement_identities() -> CheckLine {
    let sig = Signature::pga3();
    let top = Multivector::pseudoscalar(sig);
    let dual_top = TaggedMultivector::dual(top.clone());
    let mut c = Collector::new("R(X) ^ J(X) = I* and J^-1(R(X)) ^ X = I");
    for (b, x) in blades(sig) {
        let lhs = wedge_tagged(&raise(&x), &poincare(&x), &DualityConfig::strict());
        c.case(lhs.as_ref() == Ok(&dual_top), || {
            format!("{b}: R ^ J = {lhs:?}")
        });
        let cor = left_complement(&x).op(&x);
        c.case(cor.as_ref() == Ok(&top), || {
            format!("{b}: left complement gives {cor:?}")
        });
    }
    c.finish()
}

fn hodge_wedge() -> CheckLine {
    let sig = Signature::pga3();
    let top = Multivector::pseudoscalar(sig);
    let mut c = Collector::new("X ^ H(X) = I");
    for (b, x) in blades(sig) {
        let got = x.op(&hodge(&x));
        c.case(got.as_ref() == Ok(&top), || format!("{b}: got {got:?}"));
    }
    c.finish()
}

/// Runs the golden table comparisons and the exhaustive backend and
/// duality cross-checks.
pub fn run_check(opts: &CheckOptions) -> CheckReport {
    CheckReport {
        lines: vec![
            golden("table H on (3,0,1)", &opts.golden_h, |x| {
                TaggedMultivector::primal(hodge(x))
            }),
            golden("table J on (3,0,1)", &opts.golden_j, poincare),
            polarity_signs(),
            polarity_degenerate(),
            exercises(),
            backend_equivalence(),
            metric_proportional(),
            metric_degenerate(),
            complement_identities(),
            hodge_wedge(),
        ],
    }
}
