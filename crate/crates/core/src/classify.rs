//! Avoidability classes of patterns with at most two variables.
//!
//! The verdicts live in `data/classification.toml`, embedded at build time.
//! Classical patterns (no variable occurring both plainly and reversed) are
//! settled by the classical binary-pattern classification; everything else
//! is looked up by canonical form, then by classical family, then inherited
//! from an indexed pattern that divides it.

use std::collections::HashMap;
use std::fmt;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matcher::divides;
use crate::pattern::{PatLetter, Pattern};

const TABLE: &str = include_str!("../data/classification.toml");

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase", tag = "kind", content = "k")]
pub enum AvoidabilityKind {
    Unavoidable,
    Index(u8),
    Unknown,
}

/// What is known about infinite *aperiodic* avoiding words.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum AperiodicNote {
    /// Some aperiodic binary word avoids the pattern.
    Binary,
    /// Aperiodic ternary avoiders exist; no aperiodic binary word avoids it.
    Ternary,
    /// Unsettled whether an aperiodic binary avoider exists.
    Open,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct AvoidabilityClass {
    pub kind: AvoidabilityKind,
    pub aperiodic: Option<AperiodicNote>,
}

impl AvoidabilityClass {
    fn new(kind: AvoidabilityKind, aperiodic: Option<AperiodicNote>) -> Self {
        AvoidabilityClass { kind, aperiodic }
    }
}

impl fmt::Display for AvoidabilityKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AvoidabilityKind::Unavoidable => f.write_str("unavoidable"),
            AvoidabilityKind::Index(k) => write!(f, "index({k})"),
            AvoidabilityKind::Unknown => f.write_str("unknown"),
        }
    }
}

impl fmt::Display for AperiodicNote {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            AperiodicNote::Binary => "binary",
            AperiodicNote::Ternary => "ternary",
            AperiodicNote::Open => "open",
        })
    }
}

impl fmt::Display for AvoidabilityClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.kind)?;
        if let Some(note) = self.aperiodic {
            write!(f, " aperiodic={note}")?;
        }
        Ok(())
    }
}

#[derive(Deserialize)]
struct RawTable {
    version: u32,
    classical: RawClassical,
    #[serde(default)]
    pattern: Vec<RawEntry>,
    #[serde(default)]
    family: Vec<RawFamily>,
}

#[derive(Deserialize)]
struct RawClassical {
    unavoidable: Vec<String>,
    index3: Vec<String>,
}

#[derive(Deserialize)]
struct RawEntry {
    pattern: String,
    index: u8,
    aperiodic: Option<AperiodicNote>,
}

#[derive(Deserialize)]
struct RawFamily {
    base: String,
    index: u8,
    aperiodic: Option<AperiodicNote>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct Verdict {
    index: u8,
    aperiodic: Option<AperiodicNote>,
}

pub struct ClassificationTable {
    version: u32,
    unavoidable: Vec<Pattern>,
    index3: Vec<Pattern>,
    entries: HashMap<Pattern, Verdict>,
    families: HashMap<Pattern, Verdict>,
    // patterns known to be 2-avoidable, used for inheritance through divisibility
    divisors: Vec<(Pattern, Verdict)>,
}

impl ClassificationTable {
    pub fn from_toml(text: &str) -> Result<Self> {
        let raw: RawTable =
            toml::from_str(text).map_err(|e| Error::Domain(format!("classification table: {e}")))?;
        let parse_all = |v: &[String]| -> Result<Vec<Pattern>> {
            v.iter().map(|s| Pattern::parse(s).map(|p| p.canonical())).collect()
        };
        let mut entries = HashMap::new();
        for e in &raw.pattern {
            let key = Pattern::parse(&e.pattern)?.canonical();
            let v = Verdict {
                index: e.index,
                aperiodic: e.aperiodic,
            };
            if let Some(old) = entries.insert(key.clone(), v) {
                if old != v {
                    return Err(Error::Domain(format!(
                        "classification table: conflicting entries for class of {}",
                        e.pattern
                    )));
                }
            }
        }
        let mut families = HashMap::new();
        for f in &raw.family {
            let base = Pattern::parse(&f.base)?;
            families.insert(
                shadow(&base).canonical(),
                Verdict {
                    index: f.index,
                    aperiodic: f.aperiodic,
                },
            );
        }
        // unary patterns of length three: 2-avoidable by aperiodic binary words
        let mut divisors: Vec<(Pattern, Verdict)> = Vec::new();
        let binary = Verdict {
            index: 2,
            aperiodic: Some(AperiodicNote::Binary),
        };
        for mask in 0..8u8 {
            let positions = (0..3).map(|i| PatLetter::new(0, mask & (1 << i) != 0)).collect();
            divisors.push((Pattern::from_positions(positions)?, binary));
        }
        divisors.push((
            Pattern::parse("aA")?,
            Verdict {
                index: 2,
                aperiodic: None,
            },
        ));
        for (p, v) in &entries {
            if v.index == 2 {
                divisors.push((p.clone(), *v));
            }
        }
        divisors.sort_by(|a, b| (a.0.len(), &a.0).cmp(&(b.0.len(), &b.0)));
        Ok(ClassificationTable {
            version: raw.version,
            unavoidable: parse_all(&raw.classical.unavoidable)?,
            index3: parse_all(&raw.classical.index3)?,
            entries,
            families,
            divisors,
        })
    }

    pub fn embedded() -> &'static ClassificationTable {
        static CELL: OnceLock<ClassificationTable> = OnceLock::new();
        CELL.get_or_init(|| ClassificationTable::from_toml(TABLE).expect("embedded table is valid"))
    }

    pub fn version(&self) -> u32 {
        self.version
    }

    pub fn classify(&self, p: &Pattern) -> Result<AvoidabilityClass> {
        use AvoidabilityKind::*;
        if p.variable_count() > 2 {
            return Err(Error::Unsupported(format!(
                "classification covers at most two variables, {p} has {}",
                p.variable_count()
            )));
        }
        let plain = shadow(p).canonical();
        if self.unavoidable.contains(&plain) {
            return Ok(AvoidabilityClass::new(Unavoidable, None));
        }
        if p.variable_count() == 1 {
            return Ok(classify_unary(p));
        }
        if !p.has_mixed_flags() {
            return Ok(if self.index3.contains(&plain) {
                AvoidabilityClass::new(Index(3), Some(AperiodicNote::Ternary))
            } else {
                AvoidabilityClass::new(Index(2), None)
            });
        }
        let key = p.canonical();
        if let Some(v) = self.entries.get(&key).or_else(|| self.families.get(&plain)) {
            return Ok(AvoidabilityClass::new(Index(v.index), v.aperiodic));
        }
        let mut found: Option<AvoidabilityClass> = None;
        for (d, v) in &self.divisors {
            if d.len() <= p.len() && divides(d, p) {
                let note = v.aperiodic.filter(|n| *n == AperiodicNote::Binary);
                match &mut found {
                    None => found = Some(AvoidabilityClass::new(Index(2), note)),
                    Some(c) if c.aperiodic.is_none() => c.aperiodic = note,
                    Some(_) => {}
                }
                if note.is_some() {
                    break;
                }
            }
        }
        Ok(found.unwrap_or(AvoidabilityClass::new(Unknown, None)))
    }
}

fn classify_unary(p: &Pattern) -> AvoidabilityClass {
    use AvoidabilityKind::*;
    match (p.len(), p.has_mixed_flags()) {
        (1, _) => AvoidabilityClass::new(Unavoidable, None),
        (2, false) => AvoidabilityClass::new(Index(3), Some(AperiodicNote::Ternary)),
        // every aperiodic binary word has 00 or 11
        (2, true) => AvoidabilityClass::new(Index(2), Some(AperiodicNote::Ternary)),
        _ => AvoidabilityClass::new(Index(2), Some(AperiodicNote::Binary)),
    }
}

/// The pattern with all flags cleared.
fn shadow(p: &Pattern) -> Pattern {
    let positions = p
        .positions()
        .iter()
        .map(|l| PatLetter::new(l.var, false))
        .collect();
    Pattern::from_positions(positions).expect("non-empty")
}

pub fn classify(p: &Pattern) -> Result<AvoidabilityClass> {
    ClassificationTable::embedded().classify(p)
}
