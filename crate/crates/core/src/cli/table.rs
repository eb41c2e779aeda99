use std::fmt::Write;
use std::str::FromStr;

use crate::duality::{hodge, poincare, polarity};
use crate::multivector::Multivector;
use crate::signature::Signature;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TableKind {
    Polarity,
    Poincare,
    Hodge,
    Gp,
    Wedge,
}

impl FromStr for TableKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "P" | "p" => Ok(TableKind::Polarity),
            "J" | "j" => Ok(TableKind::Poincare),
            "H" | "h" => Ok(TableKind::Hodge),
            "gp" => Ok(TableKind::Gp),
            "wedge" => Ok(TableKind::Wedge),
            other => Err(format!("unknown table `{other}` (expected P|J|H|gp|wedge)")),
        }
    }
}

/// Emits a table as TSV with LF line endings, rows in ascending blade mask
/// order.
///
/// Maps produce a `blade<TAB>image` header and one row per basis blade.
/// Products produce the full Cayley table: the header row is `blade`
/// followed by the column blades, and each row starts with its left factor.
pub fn cmd_table(kind: TableKind, sig: Signature) -> String {
    let mut out = String::new();
    let map: fn(&Multivector) -> String = match kind {
        TableKind::Polarity => |x| polarity(x).to_string(),
        TableKind::Hodge => |x| hodge(x).to_string(),
        TableKind::Poincare => |x| poincare(x).to_string(),
        TableKind::Gp | TableKind::Wedge => {
            out.push_str("blade");
            for b in sig.blades() {
                write!(out, "\t{b}").unwrap();
            }
            out.push('\n');
            for a in sig.blades() {
                out.push_str(&a.name());
                let x = Multivector::blade(sig, a, 1.0);
                for b in sig.blades() {
                    let y = Multivector::blade(sig, b, 1.0);
                    let p = if kind == TableKind::Gp {
                        x.gp(&y)
                    } else {
                        x.op(&y)
                    }
                    .expect("same signature");
                    write!(out, "\t{p}").unwrap();
                }
                out.push('\n');
            }
            return out;
        }
    };
    out.push_str("blade\timage\n");
    for b in sig.blades() {
        writeln!(out, "{b}\t{}", map(&Multivector::blade(sig, b, 1.0))).unwrap();
    }
    out
}

/// Parses `blade<TAB>image` rows, skipping the header and blank lines.
pub fn parse_tsv(text: &str) -> Vec<(String, String)> {
    text.lines()
        .filter(|l| !l.trim().is_empty())
        .filter_map(|l| {
            let (a, b) = l.split_once('\t')?;
            Some((a.trim().to_string(), b.trim().to_string()))
        })
        .filter(|(a, b)| !(a == "blade" && b == "image"))
        .collect()
}
