//! Resolving command-line input into long-knot diagrams.

use std::fs;
use std::io::Read;
use std::path::{Path, PathBuf};

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, ValueEnum};
use longknot::diagram::{from_braid, parse_braid, parse_pd_document};
use longknot::fixtures::{example, NAMES};
use longknot::LongKnotDiagram;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    Pd,
    Braid,
}

/// One diagram source. Exactly one of these may be given.
#[derive(Debug, Clone, Args)]
pub struct Source {
    /// Input file (`.pd` or `.braid`), or `-` for stdin.
    pub input: Option<PathBuf>,
    /// Built-in example by name.
    #[arg(long, conflicts_with_all = ["input", "braid", "pd"])]
    pub example: Option<String>,
    /// Inline braid word, e.g. "strands 2; s1 s1 s1".
    #[arg(long, conflicts_with_all = ["input", "pd"])]
    pub braid: Option<String>,
    /// Inline PD text.
    #[arg(long, conflicts_with = "input")]
    pub pd: Option<String>,
    /// Input kind for files without a recognised extension and for stdin.
    #[arg(long, value_enum)]
    pub kind: Option<Kind>,
}

/// A loaded diagram and the name it is reported under.
pub struct Loaded {
    pub id: String,
    pub knot: LongKnotDiagram,
}

pub fn parse_text(text: &str, kind: Kind) -> Result<LongKnotDiagram> {
    match kind {
        Kind::Pd => Ok(parse_pd_document(text)?.into_long_knot()?),
        Kind::Braid => Ok(LongKnotDiagram::new(from_braid(&parse_braid(text)?)?, 0)?),
    }
}

fn kind_of(path: &Path, explicit: Option<Kind>) -> Result<Kind> {
    if let Some(k) = explicit {
        return Ok(k);
    }
    match path.extension().and_then(|e| e.to_str()) {
        Some("pd") => Ok(Kind::Pd),
        Some("braid") => Ok(Kind::Braid),
        _ => bail!("cannot tell the kind of {}; use --kind pd|braid", path.display()),
    }
}

pub fn load_file(path: &Path, kind: Option<Kind>) -> Result<Loaded> {
    if path == Path::new("-") {
        let mut text = String::new();
        std::io::stdin().read_to_string(&mut text).context("reading stdin")?;
        let knot = parse_text(&text, kind.unwrap_or(Kind::Pd)).context("stdin")?;
        return Ok(Loaded { id: "stdin".into(), knot });
    }
    let kind = kind_of(path, kind)?;
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let knot = parse_text(&text, kind).with_context(|| path.display().to_string())?;
    let id = path.file_stem().map_or_else(|| path.display().to_string(), |s| s.to_string_lossy().into_owned());
    Ok(Loaded { id, knot })
}

impl Source {
    pub fn load(&self) -> Result<Loaded> {
        if let Some(name) = &self.example {
            let knot = example(name).ok_or_else(|| anyhow!("unknown example {name:?}; known: {}", NAMES.join(", ")))?;
            return Ok(Loaded { id: name.clone(), knot });
        }
        if let Some(text) = &self.braid {
            return Ok(Loaded { id: "braid".into(), knot: parse_text(text, Kind::Braid)? });
        }
        if let Some(text) = &self.pd {
            return Ok(Loaded { id: "pd".into(), knot: parse_text(text, Kind::Pd)? });
        }
        match &self.input {
            Some(path) => load_file(path, self.kind),
            None => bail!("no input: give a file, --example, --braid or --pd"),
        }
    }
}

/// Expands directories into their `.pd` and `.braid` files, sorted by name.
pub fn expand_paths(paths: &[PathBuf]) -> Result<Vec<PathBuf>> {
    let mut out = Vec::new();
    for p in paths {
        if p.is_dir() {
            let mut found: Vec<PathBuf> = fs::read_dir(p)
                .with_context(|| format!("listing {}", p.display()))?
                .filter_map(|e| e.ok().map(|e| e.path()))
                .filter(|f| matches!(f.extension().and_then(|e| e.to_str()), Some("pd" | "braid")))
                .collect();
            found.sort();
            out.extend(found);
        } else {
            out.push(p.clone());
        }
    }
    Ok(out)
}
