//! Surface descriptions from a TOML file or from command-line flags.
//!
//! ```toml
//! kind = "ruled"          # k3 | abelian | plane | rational | ruled | other
//! genus = 3
//! e = 5
//! bundle = "decomposable" # or "indecomposable"
//!
//! [lambda2]
//! tag = "unspecified"     # trivial | canonical(k) | torsion(m) | point(n)
//! effective = true        # is -K_C - det V effective?
//!
//! [[blowups]]
//! base_point = "unknown"  # yes | no | unknown
//! ```

use std::fmt;
use std::ops::Range;

use poisson_core::{BundleKind, BundleSpec, ClassTag, CurveClass, SurfaceSpec, TriState};
use serde::Deserialize;
use thiserror::Error;
use toml::Spanned;

/// Where in the input a problem was found.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Location {
    Text { line: usize, column: usize },
    Flag(&'static str),
    Unknown,
}

impl fmt::Display for Location {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Location::Text { line, column } => write!(f, "line {line}, column {column}"),
            Location::Flag(name) => write!(f, "flag --{name}"),
            Location::Unknown => f.write_str("input"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("parse error at {location}: {message}")]
pub struct ParseError {
    pub location: Location,
    pub message: String,
}

/// Converts a byte offset into a 1-based line and column.
pub fn line_column(source: &str, offset: usize) -> (usize, usize) {
    let offset = offset.min(source.len());
    let before = &source[..offset];
    let line = before.matches('\n').count() + 1;
    let column = before.rsplit('\n').next().map_or(0, |l| l.chars().count()) + 1;
    (line, column)
}

/// A value with the place it came from.
#[derive(Debug, Clone)]
struct Located<T> {
    value: T,
    at: Origin,
}

#[derive(Debug, Clone)]
enum Origin {
    Span(Range<usize>),
    Flag(&'static str),
}

impl<T> Located<T> {
    fn from_spanned(s: Spanned<T>) -> Self {
        let span = s.span();
        Located {
            value: s.into_inner(),
            at: Origin::Span(span),
        }
    }

    fn flag(value: T, name: &'static str) -> Self {
        Located {
            value,
            at: Origin::Flag(name),
        }
    }
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawSpec {
    kind: Spanned<String>,
    genus: Option<Spanned<u32>>,
    e: Option<Spanned<i64>>,
    bundle: Option<Spanned<String>>,
    kodaira: Option<Spanned<u8>>,
    lambda2: Option<Spanned<RawLambda2>>,
    #[serde(default)]
    blowups: Vec<RawBlowUp>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawLambda2 {
    tag: Option<Spanned<String>>,
    effective: Option<bool>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawBlowUp {
    base_point: Spanned<String>,
}

/// Field values gathered from either input route.
#[derive(Debug, Default)]
pub struct SpecFields {
    kind: Option<Located<String>>,
    genus: Option<Located<u32>>,
    e: Option<Located<i64>>,
    bundle: Option<Located<String>>,
    kodaira: Option<Located<u8>>,
    tag: Option<Located<String>>,
    effective: Option<Located<bool>>,
    blowups: Vec<Located<String>>,
}

/// Command-line equivalents of the file fields.
#[derive(Debug, Default, Clone)]
pub struct FlagValues {
    pub kind: Option<String>,
    pub genus: Option<u32>,
    pub e: Option<i64>,
    pub bundle: Option<String>,
    pub kodaira: Option<u8>,
    pub lambda2_tag: Option<String>,
    pub effective: Option<bool>,
    pub blowups: Vec<String>,
}

impl FlagValues {
    pub fn is_empty(&self) -> bool {
        self.kind.is_none()
            && self.genus.is_none()
            && self.e.is_none()
            && self.bundle.is_none()
            && self.kodaira.is_none()
            && self.lambda2_tag.is_none()
            && self.effective.is_none()
            && self.blowups.is_empty()
    }
}

/// Parses a spec file.
pub fn parse_spec_text(source: &str) -> Result<SurfaceSpec, ParseError> {
    let raw: RawSpec = toml::from_str(source).map_err(|err| ParseError {
        location: err
            .span()
            .map(|s| {
                let (line, column) = line_column(source, s.start);
                Location::Text { line, column }
            })
            .unwrap_or(Location::Unknown),
        message: err.message().trim().to_string(),
    })?;
    let (tag, effective) = match raw.lambda2 {
        Some(l) => {
            let span = l.span();
            let inner = l.into_inner();
            (
                inner.tag.map(Located::from_spanned),
                inner.effective.map(|v| Located {
                    value: v,
                    at: Origin::Span(span),
                }),
            )
        }
        None => (None, None),
    };
    let fields = SpecFields {
        kind: Some(Located::from_spanned(raw.kind)),
        genus: raw.genus.map(Located::from_spanned),
        e: raw.e.map(Located::from_spanned),
        bundle: raw.bundle.map(Located::from_spanned),
        kodaira: raw.kodaira.map(Located::from_spanned),
        tag,
        effective,
        blowups: raw
            .blowups
            .into_iter()
            .map(|b| Located::from_spanned(b.base_point))
            .collect(),
    };
    build(fields).map_err(|(origin, message)| ParseError {
        location: locate(source, origin),
        message,
    })
}

/// Builds a spec from command-line flags.
pub fn parse_spec_flags(flags: &FlagValues) -> Result<SurfaceSpec, ParseError> {
    let f = flags.clone();
    let fields = SpecFields {
        kind: f.kind.map(|v| Located::flag(v, "kind")),
        genus: f.genus.map(|v| Located::flag(v, "genus")),
        e: f.e.map(|v| Located::flag(v, "e")),
        bundle: f.bundle.map(|v| Located::flag(v, "bundle")),
        kodaira: f.kodaira.map(|v| Located::flag(v, "kodaira")),
        tag: f.lambda2_tag.map(|v| Located::flag(v, "lambda2-tag")),
        effective: f.effective.map(|v| Located::flag(v, "effective")),
        blowups: f.blowups.into_iter().map(|v| Located::flag(v, "blowup")).collect(),
    };
    build(fields).map_err(|(origin, message)| ParseError {
        location: locate("", origin),
        message,
    })
}

fn locate(source: &str, origin: Option<Origin>) -> Location {
    match origin {
        Some(Origin::Span(span)) => {
            let (line, column) = line_column(source, span.start);
            Location::Text { line, column }
        }
        Some(Origin::Flag(name)) => Location::Flag(name),
        None => Location::Unknown,
    }
}

type BuildError = (Option<Origin>, String);

fn err_at<T>(at: &Located<T>, message: impl Into<String>) -> BuildError {
    (Some(at.at.clone()), message.into())
}

fn build(fields: SpecFields) -> Result<SurfaceSpec, BuildError> {
    let kind = fields
        .kind
        .as_ref()
        .ok_or((None, "missing field `kind`".to_string()))?;

    let used: &[&str] = match kind.value.as_str() {
        "k3" | "abelian" | "plane" => &[],
        "rational" => &["e"],
        "ruled" => &["genus", "e", "bundle", "lambda2"],
        "other" => &["kodaira"],
        other => {
            return Err(err_at(
                kind,
                format!(
                    "unknown kind `{other}` (expected k3, abelian, plane, rational, ruled or other)"
                ),
            ))
        }
    };
    reject_unused(&fields, &kind.value, used)?;

    let require = |name: &str, present: bool| -> Result<(), BuildError> {
        if present {
            Ok(())
        } else {
            Err(err_at(kind, format!("kind `{}` requires field `{name}`", kind.value)))
        }
    };

    let base = match kind.value.as_str() {
        "k3" => SurfaceSpec::K3,
        "abelian" => SurfaceSpec::Abelian,
        "plane" => SurfaceSpec::ProjectivePlane,
        "rational" => {
            require("e", fields.e.is_some())?;
            SurfaceSpec::MinimalRuledRational {
                e: fields.e.as_ref().unwrap().value,
            }
        }
        "other" => {
            require("kodaira", fields.kodaira.is_some())?;
            SurfaceSpec::OtherKodaira {
                kodaira: fields.kodaira.as_ref().unwrap().value,
            }
        }
        _ => {
            require("genus", fields.genus.is_some())?;
            require("e", fields.e.is_some())?;
            require("bundle", fields.bundle.is_some())?;
            let genus = fields.genus.as_ref().unwrap().value;
            let e = fields.e.as_ref().unwrap().value;
            let tag = match &fields.tag {
                Some(t) => parse_tag(&t.value).map_err(|m| err_at(t, m))?,
                None => ClassTag::Unspecified,
            };
            // det V has degree -e.
            let l = CurveClass {
                degree: -e,
                tag,
                user_effective: None,
            };
            let bundle = fields.bundle.as_ref().unwrap();
            let kind = match bundle.value.as_str() {
                "decomposable" => BundleKind::Decomposable { l },
                "indecomposable" => BundleKind::IndecomposableGeneral { l },
                other => {
                    return Err(err_at(
                        bundle,
                        format!("unknown bundle `{other}` (expected decomposable or indecomposable)"),
                    ))
                }
            };
            SurfaceSpec::MinimalRuledOverCurve {
                genus,
                bundle: BundleSpec {
                    kind,
                    e,
                    residual_effective: fields.effective.as_ref().map(|f| f.value),
                },
            }
        }
    };

    if fields.blowups.is_empty() {
        return Ok(base);
    }
    let flags = fields
        .blowups
        .iter()
        .map(|b| parse_tristate(&b.value).map_err(|m| err_at(b, m)))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(SurfaceSpec::blow_up(base, &flags))
}

fn reject_unused(fields: &SpecFields, kind: &str, used: &[&str]) -> Result<(), BuildError> {
    let present: [(&str, Option<Origin>); 6] = [
        ("genus", fields.genus.as_ref().map(|f| f.at.clone())),
        ("e", fields.e.as_ref().map(|f| f.at.clone())),
        ("bundle", fields.bundle.as_ref().map(|f| f.at.clone())),
        ("kodaira", fields.kodaira.as_ref().map(|f| f.at.clone())),
        ("lambda2", fields.tag.as_ref().map(|f| f.at.clone())),
        ("lambda2", fields.effective.as_ref().map(|f| f.at.clone())),
    ];
    for (name, origin) in present {
        if let Some(origin) = origin {
            if !used.contains(&name) {
                return Err((
                    Some(origin),
                    format!("field `{name}` does not apply to kind `{kind}`"),
                ));
            }
        }
    }
    Ok(())
}

/// `unspecified`, `trivial`, `canonical(k)`, `torsion(m)` or `point(n)`.
pub fn parse_tag(text: &str) -> Result<ClassTag, String> {
    let text = text.trim();
    match text {
        "unspecified" => return Ok(ClassTag::Unspecified),
        "trivial" => return Ok(ClassTag::Trivial),
        _ => {}
    }
    let bad = || {
        format!(
            "invalid class tag `{text}` (expected unspecified, trivial, canonical(k), torsion(m) or point(n))"
        )
    };
    let (name, rest) = text.split_once('(').ok_or_else(bad)?;
    let arg = rest.strip_suffix(')').ok_or_else(bad)?.trim();
    match name.trim() {
        "canonical" => Ok(ClassTag::Canonical {
            multiple: arg.parse().map_err(|_| bad())?,
        }),
        "torsion" => {
            let order: u32 = arg.parse().map_err(|_| bad())?;
            if order == 0 {
                return Err("torsion order must be at least 1".into());
            }
            Ok(ClassTag::Torsion { order })
        }
        "point" => Ok(ClassTag::PointSum {
            multiplicity: arg.parse().map_err(|_| bad())?,
        }),
        _ => Err(bad()),
    }
}

pub fn parse_tristate(text: &str) -> Result<TriState, String> {
    match text.trim() {
        "yes" => Ok(TriState::Yes),
        "no" => Ok(TriState::No),
        "unknown" => Ok(TriState::Unknown),
        other => Err(format!("invalid base-point flag `{other}` (expected yes, no or unknown)")),
    }
}
