//! PD text format.
//!
//! ```text
//! # comment
//! X(1,7,2,6) X(7,3,8,2)
//! basepoint 0
//! crossing_order 1 2        # optional: number of each X term, in file order
//! region 1 1 0              # optional: region 1 contains corner 0 of term 1
//! ```
//!
//! Edge labels are arbitrary nonnegative integers and are renumbered along
//! the orientation on load; `basepoint` uses the labels as written.

use super::{ClosedDiagram, Corner, DiagramError, LongKnotDiagram};

/// `region <number> <term> <quadrant>`: bounded region `number` is the face
/// containing corner `quadrant` of the `term`-th X term (both 1-based except
/// the quadrant, which is 0..=3).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RegionDirective {
    pub region: usize,
    pub term: usize,
    pub quadrant: usize,
}

/// Everything a PD file can say about a long knot.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PdDocument {
    pub crossings: Vec<[u64; 4]>,
    pub basepoint: Option<u64>,
    pub crossing_order: Option<Vec<usize>>,
    pub regions: Vec<RegionDirective>,
}

impl PdDocument {
    /// Validates the diagram and applies the basepoint (raw label, default the
    /// smallest label) and any numbering directives.
    pub fn into_long_knot(self) -> Result<LongKnotDiagram, DiagramError> {
        let (diagram, relabel) = ClosedDiagram::from_raw(&self.crossings)?;
        let basepoint = match self.basepoint {
            None => 0,
            Some(raw) if diagram.edge_count() == 0 => {
                let _ = raw;
                0
            }
            Some(raw) => *relabel.get(&raw).ok_or(DiagramError::InvalidEdge { edge: raw })?,
        };
        let mut lk = LongKnotDiagram::new(diagram, basepoint)?;
        if let Some(order) = self.crossing_order {
            lk = lk.with_crossing_order(order)?;
        }
        if !self.regions.is_empty() {
            let n = lk.crossing_count();
            let mut corners = vec![None; n];
            for r in &self.regions {
                if r.region == 0 || r.region > n || r.term == 0 || r.term > n {
                    return Err(DiagramError::RegionOrder(format!("directive {r:?} is out of range")));
                }
                let corner = Corner { crossing: lk.number_of(r.term - 1), quadrant: r.quadrant };
                if corners[r.region - 1].replace(corner).is_some() {
                    return Err(DiagramError::RegionOrder(format!("region {} given twice", r.region)));
                }
            }
            let corners = corners
                .into_iter()
                .enumerate()
                .map(|(k, c)| c.ok_or_else(|| DiagramError::RegionOrder(format!("region {} missing", k + 1))))
                .collect::<Result<Vec<_>, _>>()?;
            lk = lk.with_region_corners(corners)?;
        }
        Ok(lk)
    }
}

/// Parses and validates PD text into a closed diagram. Directives are
/// checked for syntax but otherwise ignored.
pub fn parse_pd(text: &str) -> Result<ClosedDiagram, DiagramError> {
    let doc = parse_pd_document(text)?;
    ClosedDiagram::from_raw(&doc.crossings).map(|(d, _)| d)
}

struct Cursor<'a> {
    line: usize,
    text: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn err(&self, message: impl Into<String>) -> DiagramError {
        DiagramError::Syntax { line: self.line, column: self.pos + 1, message: message.into() }
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(|c| c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<char> {
        self.text[self.pos..].chars().next()
    }

    fn expect(&mut self, c: char) -> Result<(), DiagramError> {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            Ok(())
        } else {
            Err(self.err(format!("expected '{c}'")))
        }
    }

    fn number(&mut self) -> Result<u64, DiagramError> {
        self.skip_ws();
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected a nonnegative integer"));
        }
        self.text[start..self.pos].parse().map_err(|_| DiagramError::Syntax {
            line: self.line,
            column: start + 1,
            message: "integer too large".into(),
        })
    }

    fn word(&mut self) -> &'a str {
        self.skip_ws();
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_alphanumeric() || c == '_') {
            self.pos += 1;
        }
        &self.text[start..self.pos]
    }

    fn at_end(&mut self) -> bool {
        self.skip_ws();
        self.pos >= self.text.len()
    }
}

/// Parses PD text without validating the diagram.
pub fn parse_pd_document(text: &str) -> Result<PdDocument, DiagramError> {
    let mut doc = PdDocument { crossings: Vec::new(), basepoint: None, crossing_order: None, regions: Vec::new() };
    for (k, full) in text.lines().enumerate() {
        let content = full.split('#').next().unwrap_or("");
        let mut cur = Cursor { line: k + 1, text: content, pos: 0 };
        if cur.at_end() {
            continue;
        }
        let save = cur.pos;
        match cur.word() {
            "basepoint" => {
                if doc.basepoint.is_some() {
                    return Err(cur.err("basepoint given twice"));
                }
                doc.basepoint = Some(cur.number()?);
            }
            "crossing_order" => {
                let mut order = Vec::new();
                while !cur.at_end() {
                    order.push(cur.number()? as usize);
                }
                doc.crossing_order = Some(order);
            }
            "region" => {
                let region = cur.number()? as usize;
                let term = cur.number()? as usize;
                let quadrant = cur.number()? as usize;
                if quadrant > 3 {
                    return Err(cur.err("quadrant must be 0..=3"));
                }
                doc.regions.push(RegionDirective { region, term, quadrant });
            }
            _ => {
                cur.pos = save;
                while !cur.at_end() {
                    if !matches!(cur.peek(), Some('X') | Some('x')) {
                        return Err(cur.err("expected X(a,b,c,d)"));
                    }
                    cur.pos += 1;
                    cur.expect('(')?;
                    let mut quad = [0u64; 4];
                    for (i, slot) in quad.iter_mut().enumerate() {
                        if i > 0 {
                            cur.expect(',')?;
                        }
                        *slot = cur.number()?;
                    }
                    cur.expect(')')?;
                    doc.crossings.push(quad);
                }
                continue;
            }
        }
        if !cur.at_end() {
            return Err(cur.err("unexpected trailing input"));
        }
    }
    Ok(doc)
}
