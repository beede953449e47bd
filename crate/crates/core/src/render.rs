//! Text rendering of Young diagrams (English convention: row 1 on top).

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::hooks::{hook_profile, HookClass};
use crate::mullineux::e_rim;
use crate::partition::{Node, Partition};
use crate::regularisation::ladder_index;

pub const PLAIN_CELL: &str = "□";
pub const UNMARKED_CELL: &str = "·";
pub const RIM_MARK: &str = "×";
pub const SHALLOW_MARK: &str = "→";
pub const STEEP_MARK: &str = "↓";
pub const NEITHER_MARK: &str = "×";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Annotation {
    #[default]
    None,
    Ladders,
    ERim,
    TruncatedRim,
    HookClasses,
}

impl FromStr for Annotation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.replace('_', "-").as_str() {
            "none" => Ok(Annotation::None),
            "ladders" => Ok(Annotation::Ladders),
            "e-rim" => Ok(Annotation::ERim),
            "truncated-rim" => Ok(Annotation::TruncatedRim),
            "hook-classes" => Ok(Annotation::HookClasses),
            _ => Err(Error::Parse {
                text: s.to_string(),
                reason: "unknown annotation; expected none, ladders, e-rim, truncated-rim or hook-classes"
                    .to_string(),
            }),
        }
    }
}

impl fmt::Display for Annotation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Annotation::None => "none",
            Annotation::Ladders => "ladders",
            Annotation::ERim => "e-rim",
            Annotation::TruncatedRim => "truncated-rim",
            Annotation::HookClasses => "hook-classes",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub struct RenderOptions {
    pub annotation: Annotation,
    /// Required for every annotation except `None`.
    pub e: Option<usize>,
}

/// Renders one line of cells per row. Cells are padded to a common width
/// and separated by a space only when some label is wider than one char.
pub fn render(p: &Partition, opts: RenderOptions) -> Result<String> {
    if p.is_empty() {
        return Ok("∅".to_string());
    }
    let e = match (opts.annotation, opts.e) {
        (Annotation::None, _) => 0,
        (_, Some(e)) if e >= 2 => e,
        (_, Some(e)) => return Err(Error::InvalidE(e)),
        (_, None) => return Err(Error::InvalidE(0)),
    };

    let label: Box<dyn Fn(Node) -> String> = match opts.annotation {
        Annotation::None => Box::new(|_| PLAIN_CELL.to_string()),
        Annotation::Ladders => Box::new(move |n| ladder_index(n, e).to_string()),
        Annotation::ERim | Annotation::TruncatedRim => {
            let rim = e_rim(p, e)?;
            let marked = if opts.annotation == Annotation::ERim {
                rim.rim_nodes
            } else {
                rim.truncated_rim
            };
            Box::new(move |n| {
                if marked.contains(&n) {
                    RIM_MARK
                } else {
                    UNMARKED_CELL
                }
                .to_string()
            })
        }
        Annotation::HookClasses => {
            let profile = hook_profile(p, e);
            Box::new(move |n| {
                let rec = profile.record(n).expect("profile covers every node");
                if !rec.divisible {
                    return UNMARKED_CELL.to_string();
                }
                match rec.class {
                    HookClass::Shallow => SHALLOW_MARK,
                    HookClass::Steep => STEEP_MARK,
                    _ => NEITHER_MARK,
                }
                .to_string()
            })
        }
    };

    let rows: Vec<Vec<String>> = p
        .parts()
        .iter()
        .enumerate()
        .map(|(i, &len)| (1..=len).map(|j| label(Node::new(i + 1, j))).collect())
        .collect();
    let width = rows
        .iter()
        .flatten()
        .map(|c| c.chars().count())
        .max()
        .unwrap_or(1);
    let sep = if width > 1 { " " } else { "" };
    let lines: Vec<String> = rows
        .iter()
        .map(|row| {
            row.iter()
                .map(|c| format!("{c:>width$}"))
                .collect::<Vec<_>>()
                .join(sep)
        })
        .collect();
    Ok(lines.join("\n"))
}
