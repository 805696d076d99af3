//! Oriented knot diagrams as planar-diagram (PD) combinatorial maps.
//!
//! A crossing is a quadruple of edge ids listed counterclockwise starting at
//! the incoming under-strand. Slot 0 is the incoming under-edge and slot 2
//! the outgoing one; slots 1 and 3 carry the over-strand in whichever
//! direction the orientation dictates. Corner (quadrant) `q` of a crossing
//! is the sector between slots `q` and `q + 1`.

mod braid;
mod pd;

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use serde::Serialize;
use thiserror::Error;

pub use braid::{from_braid, parse_braid, BraidWord};
pub use pd::{parse_pd, parse_pd_document, PdDocument, RegionDirective};

pub type EdgeId = usize;

/// A slot of a crossing quadruple.
pub type Slot = usize;

pub const UNDER_IN: Slot = 0;
pub const UNDER_OUT: Slot = 2;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DiagramError {
    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax { line: usize, column: usize, message: String },
    #[error("invalid diagram: {}", join_diagnostics(.0))]
    Invalid(Vec<Diagnostic>),
    #[error("edge {edge} is not an edge of the diagram")]
    InvalidEdge { edge: u64 },
    #[error("invalid crossing order: {0}")]
    CrossingOrder(String),
    #[error("invalid region order: {0}")]
    RegionOrder(String),
    #[error("braid generator {generator} out of range for {strands} strands")]
    GeneratorOutOfRange { generator: i64, strands: usize },
    #[error("braid closure has {components} components; a knot needs exactly one")]
    MultiComponent { components: usize },
}

fn join_diagnostics(d: &[Diagnostic]) -> String {
    d.iter().map(ToString::to_string).collect::<Vec<_>>().join("; ")
}

/// One violated diagram invariant.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Diagnostic {
    EdgeMultiplicity { edge: u64, count: usize },
    Components { count: usize },
    Orientation { crossing: usize, edge: u64 },
    NonPlanar { faces: usize, expected: usize },
}

impl fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Diagnostic::EdgeMultiplicity { edge, count } => write!(f, "edge {edge} multiplicity {count}"),
            Diagnostic::Components { count } => write!(f, "{count} components"),
            Diagnostic::Orientation { crossing, edge } => {
                write!(f, "orientation inconsistency at crossing {crossing} (edge {edge})")
            }
            Diagnostic::NonPlanar { faces, expected } => {
                write!(f, "not planar: {faces} faces where {expected} are required")
            }
        }
    }
}

/// Face cycles of a 4-valent map. `partner(c, s)` is the slot at the other
/// end of the edge leaving crossing `c` through slot `s`. Each face is the
/// list of corners `(crossing, quadrant)` met going around it.
pub(crate) fn face_cycles(n: usize, partner: impl Fn(usize, Slot) -> (usize, Slot)) -> Vec<Vec<(usize, usize)>> {
    let mut seen = vec![[false; 4]; n];
    let mut faces = Vec::new();
    for c in 0..n {
        for q in 0..4 {
            if seen[c][q] {
                continue;
            }
            let mut face = Vec::new();
            let (mut x, mut quad) = (c, q);
            while !seen[x][quad] {
                seen[x][quad] = true;
                face.push((x, quad));
                // leave through the slot bounding this corner counterclockwise;
                // the face continues in the corner just counterclockwise of the
                // arrival slot
                let (y, arrival) = partner(x, (quad + 1) % 4);
                x = y;
                quad = arrival;
            }
            faces.push(face);
        }
    }
    faces
}

struct Occurrences {
    slots: HashMap<u64, Vec<(usize, Slot)>>,
}

impl Occurrences {
    fn new(raw: &[[u64; 4]]) -> Self {
        let mut slots: HashMap<u64, Vec<(usize, Slot)>> = HashMap::new();
        for (c, quad) in raw.iter().enumerate() {
            for (s, &e) in quad.iter().enumerate() {
                slots.entry(e).or_default().push((c, s));
            }
        }
        Self { slots }
    }

    fn partner(&self, raw: &[[u64; 4]], c: usize, s: Slot) -> (usize, Slot) {
        let occ = &self.slots[&raw[c][s]];
        if occ[0] == (c, s) {
            occ[1]
        } else {
            occ[0]
        }
    }
}

/// Result of following the strands of a raw quadruple list.
struct StrandTrace {
    components: usize,
    /// For each crossing, the over slot the strand enters through.
    over_in: Vec<Option<Slot>>,
    violations: Vec<Diagnostic>,
}

fn trace_strands(raw: &[[u64; 4]], occ: &Occurrences) -> StrandTrace {
    let n = raw.len();
    let mut over_in: Vec<Option<Slot>> = vec![None; n];
    let mut used = vec![[false; 4]; n];
    let mut violations = Vec::new();
    let mut components = 0;

    // Follow a strand leaving (c, s) until it returns to a used slot.
    let mut walk = |start: (usize, Slot), over_in: &mut Vec<Option<Slot>>, used: &mut Vec<[bool; 4]>| {
        let (mut c, mut s) = start;
        loop {
            if used[c][s] {
                break;
            }
            used[c][s] = true;
            let (y, arrive) = occ.partner(raw, c, s);
            if used[y][arrive] {
                violations.push(Diagnostic::Orientation { crossing: y, edge: raw[y][arrive] });
                break;
            }
            used[y][arrive] = true;
            let next = match arrive {
                UNDER_IN => UNDER_OUT,
                UNDER_OUT => {
                    violations.push(Diagnostic::Orientation { crossing: y, edge: raw[y][arrive] });
                    break;
                }
                over => {
                    match over_in[y] {
                        Some(prev) if prev != over => {
                            violations.push(Diagnostic::Orientation { crossing: y, edge: raw[y][arrive] });
                            break;
                        }
                        _ => over_in[y] = Some(over),
                    }
                    4 - over
                }
            };
            c = y;
            s = next;
        }
    };

    for c in 0..n {
        if !used[c][UNDER_OUT] {
            components += 1;
            walk((c, UNDER_OUT), &mut over_in, &mut used);
        }
    }
    // components that never pass under anything
    for c in 0..n {
        for s in [1, 3] {
            if !used[c][s] {
                components += 1;
                let start = occ.partner(raw, c, s);
                walk(start, &mut over_in, &mut used);
                used[c][s] = true;
            }
        }
    }
    violations.dedup();
    StrandTrace { components, over_in, violations }
}

/// Checks every closed-diagram invariant on raw PD quadruples and reports
/// each violation. An empty result means the quadruples describe a planar
/// single-component oriented diagram.
pub fn validate(raw: &[[u64; 4]]) -> Vec<Diagnostic> {
    let occ = Occurrences::new(raw);
    let mut out: Vec<Diagnostic> = occ
        .slots
        .iter()
        .filter(|(_, v)| v.len() != 2)
        .map(|(&edge, v)| Diagnostic::EdgeMultiplicity { edge, count: v.len() })
        .collect();
    out.sort_by_key(|d| match d {
        Diagnostic::EdgeMultiplicity { edge, .. } => *edge,
        _ => 0,
    });
    if !out.is_empty() {
        return out;
    }
    let trace = trace_strands(raw, &occ);
    out.extend(trace.violations);
    if trace.components != 1 && !raw.is_empty() {
        out.push(Diagnostic::Components { count: trace.components });
    }
    // the Euler count only applies to a connected map
    let faces = face_cycles(raw.len(), |c, s| occ.partner(raw, c, s)).len();
    let expected = raw.len() + 2;
    if trace.components == 1 && !raw.is_empty() && faces != expected {
        out.push(Diagnostic::NonPlanar { faces, expected });
    }
    out
}

/// A validated, oriented, single-component planar knot diagram.
///
/// Edge ids are canonical: `0..2n` in orientation order, so edge `e + 1`
/// leaves the crossing edge `e` enters.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct ClosedDiagram {
    crossings: Vec<[EdgeId; 4]>,
    /// Over strand enters through slot 3 and leaves through slot 1.
    positive: Vec<bool>,
}

impl ClosedDiagram {
    /// The 0-crossing unknot.
    pub fn unknot() -> Self {
        Self { crossings: Vec::new(), positive: Vec::new() }
    }

    /// Validates raw quadruples and renumbers edges along the orientation,
    /// starting from the smallest raw label. Returns the diagram and the map
    /// from raw labels to canonical ids.
    pub fn from_raw(raw: &[[u64; 4]]) -> Result<(Self, BTreeMap<u64, EdgeId>), DiagramError> {
        let problems = validate(raw);
        if !problems.is_empty() {
            return Err(DiagramError::Invalid(problems));
        }
        if raw.is_empty() {
            return Ok((Self::unknot(), BTreeMap::new()));
        }
        let occ = Occurrences::new(raw);
        let trace = trace_strands(raw, &occ);
        let over_in: Vec<Slot> =
            trace.over_in.into_iter().map(|s| s.expect("single component visits every crossing")).collect();
        let outgoing = |c: usize, s: Slot| s == UNDER_OUT || (s != UNDER_IN && s != over_in[c]);

        let first = *occ.slots.keys().min().expect("nonempty diagram");
        let (mut c, mut s) =
            occ.slots[&first].iter().copied().find(|&(c, s)| outgoing(c, s)).expect("every edge has an outgoing end");
        let mut relabel = BTreeMap::new();
        let edge_count = 2 * raw.len();
        for id in 0..edge_count {
            relabel.insert(raw[c][s], id);
            let (y, arrive) = occ.partner(raw, c, s);
            c = y;
            s = match arrive {
                UNDER_IN => UNDER_OUT,
                over => 4 - over,
            };
        }
        debug_assert_eq!(relabel.len(), edge_count);
        let crossings = raw.iter().map(|q| q.map(|e| relabel[&e])).collect();
        let positive = over_in.iter().map(|&s| s == 3).collect();
        Ok((Self { crossings, positive }, relabel))
    }

    /// Validates already-canonical quadruples (labels `0..2n`).
    pub fn from_quadruples(quads: &[[EdgeId; 4]]) -> Result<Self, DiagramError> {
        let raw: Vec<[u64; 4]> = quads.iter().map(|q| q.map(|e| e as u64)).collect();
        Self::from_raw(&raw).map(|(d, _)| d)
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    pub fn edge_count(&self) -> usize {
        2 * self.crossings.len()
    }

    pub fn crossings(&self) -> &[[EdgeId; 4]] {
        &self.crossings
    }

    /// Crossing sign `±1` by the right-hand rule.
    pub fn sign(&self, crossing: usize) -> i8 {
        if self.positive[crossing] {
            1
        } else {
            -1
        }
    }

    /// Slot through which the over-strand enters `crossing`.
    pub fn over_in_slot(&self, crossing: usize) -> Slot {
        if self.positive[crossing] {
            3
        } else {
            1
        }
    }

    /// True if the strand leaves `crossing` through `slot`.
    pub fn is_outgoing(&self, crossing: usize, slot: Slot) -> bool {
        slot == UNDER_OUT || (slot != UNDER_IN && slot != self.over_in_slot(crossing))
    }

    /// `(crossing, slot)` where edge `e` enters.
    pub fn edge_head(&self, e: EdgeId) -> (usize, Slot) {
        self.find_end(e, false)
    }

    /// `(crossing, slot)` where edge `e` leaves.
    pub fn edge_tail(&self, e: EdgeId) -> (usize, Slot) {
        self.find_end(e, true)
    }

    fn find_end(&self, e: EdgeId, outgoing: bool) -> (usize, Slot) {
        for (c, quad) in self.crossings.iter().enumerate() {
            for (s, &label) in quad.iter().enumerate() {
                if label == e && self.is_outgoing(c, s) == outgoing {
                    return (c, s);
                }
            }
        }
        panic!("edge {e} is not in the diagram")
    }

    /// The other end of the edge at `(crossing, slot)`.
    pub fn partner(&self, crossing: usize, slot: Slot) -> (usize, Slot) {
        let e = self.crossings[crossing][slot];
        if self.is_outgoing(crossing, slot) {
            self.edge_head(e)
        } else {
            self.edge_tail(e)
        }
    }

    /// Reflection of the diagram in a line of the plane: every crossing
    /// changes sign, the over/under pattern along the knot is unchanged.
    pub fn mirror(&self) -> Self {
        let crossings = self.crossings.iter().map(|&[a, b, c, d]| [a, d, c, b]).collect();
        let positive = self.positive.iter().map(|p| !p).collect();
        Self { crossings, positive }
    }

    /// PD text, one `X(a,b,c,d)` term per line.
    pub fn render(&self) -> String {
        self.crossings.iter().map(|[a, b, c, d]| format!("X({a},{b},{c},{d})\n")).collect()
    }
}

/// Names a corner of a crossing: the sector between slots `quadrant` and
/// `quadrant + 1` of the crossing numbered `crossing` (1-based).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Corner {
    pub crossing: usize,
    pub quadrant: usize,
}

/// A closed diagram cut open at a basepoint edge, with crossing and
/// bounded-region numberings.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LongKnotDiagram {
    diagram: ClosedDiagram,
    basepoint: EdgeId,
    /// `number[c]` is the 1-based number of crossing index `c`.
    number: Vec<usize>,
    /// `index[k - 1]` is the crossing index numbered `k`.
    index: Vec<usize>,
    /// Region `k` is the face containing `region_corners[k - 1]`.
    region_corners: Option<Vec<Corner>>,
}

impl LongKnotDiagram {
    /// Cuts `diagram` open at `basepoint`. Crossings are numbered in order of
    /// first visit walking from the basepoint. A 0-crossing diagram accepts
    /// any basepoint.
    pub fn new(diagram: ClosedDiagram, basepoint: EdgeId) -> Result<Self, DiagramError> {
        let edges = diagram.edge_count();
        if edges == 0 {
            return Ok(Self { diagram, basepoint: 0, number: Vec::new(), index: Vec::new(), region_corners: None });
        }
        if basepoint >= edges {
            return Err(DiagramError::InvalidEdge { edge: basepoint as u64 });
        }
        let n = diagram.crossing_count();
        let mut number = vec![0; n];
        let mut next = 1;
        for k in 0..edges {
            let (c, _) = diagram.edge_head((basepoint + k) % edges);
            if number[c] == 0 {
                number[c] = next;
                next += 1;
            }
        }
        let mut lk = Self { diagram, basepoint, number: Vec::new(), index: Vec::new(), region_corners: None };
        lk.set_numbering(number);
        Ok(lk)
    }

    fn set_numbering(&mut self, number: Vec<usize>) {
        let mut index = vec![0; number.len()];
        for (c, &k) in number.iter().enumerate() {
            index[k - 1] = c;
        }
        self.number = number;
        self.index = index;
    }

    /// Overrides the crossing numbering: `numbers[c]` is the number (1..=n)
    /// given to the crossing at position `c` of the diagram's quadruple list.
    pub fn with_crossing_order(mut self, numbers: Vec<usize>) -> Result<Self, DiagramError> {
        let n = self.crossing_count();
        if numbers.len() != n {
            return Err(DiagramError::CrossingOrder(format!("expected {n} numbers, got {}", numbers.len())));
        }
        let mut seen = vec![false; n];
        for &k in &numbers {
            if k == 0 || k > n || std::mem::replace(&mut seen[k - 1], true) {
                return Err(DiagramError::CrossingOrder(format!("{numbers:?} is not a permutation of 1..={n}")));
            }
        }
        // region corners are stored by crossing number, so re-express them
        let corners = self.region_corners.take().map(|cs| {
            cs.into_iter()
                .map(|c| Corner { crossing: numbers[self.index[c.crossing - 1]], quadrant: c.quadrant })
                .collect::<Vec<_>>()
        });
        self.set_numbering(numbers);
        if let Some(corners) = corners {
            return self.with_region_corners(corners);
        }
        Ok(self)
    }

    /// Overrides the bounded-region numbering: region `k` is the face that
    /// contains `corners[k - 1]`. The corners must pick out each bounded
    /// face exactly once.
    pub fn with_region_corners(mut self, corners: Vec<Corner>) -> Result<Self, DiagramError> {
        let n = self.crossing_count();
        if corners.len() != n {
            return Err(DiagramError::RegionOrder(format!("expected {n} corners, got {}", corners.len())));
        }
        if let Some(bad) = corners.iter().find(|c| c.crossing == 0 || c.crossing > n || c.quadrant > 3) {
            return Err(DiagramError::RegionOrder(format!("corner {bad:?} does not exist")));
        }
        self.region_corners = Some(corners);
        crate::planar::faces(&self).map_err(|e| DiagramError::RegionOrder(e.to_string()))?;
        Ok(self)
    }

    pub fn diagram(&self) -> &ClosedDiagram {
        &self.diagram
    }

    pub fn basepoint(&self) -> EdgeId {
        self.basepoint
    }

    pub fn crossing_count(&self) -> usize {
        self.diagram.crossing_count()
    }

    /// 1-based number of the crossing at quadruple position `c`.
    pub fn number_of(&self, c: usize) -> usize {
        self.number[c]
    }

    /// Quadruple position of the crossing numbered `k` (1-based).
    pub fn index_of(&self, k: usize) -> usize {
        self.index[k - 1]
    }

    /// `crossing_order()[c]` is the number of the crossing at position `c`.
    pub fn crossing_order(&self) -> &[usize] {
        &self.number
    }

    pub fn region_corners(&self) -> Option<&[Corner]> {
        self.region_corners.as_deref()
    }

    /// Edges in walking order from the basepoint; the basepoint comes first.
    pub fn walk(&self) -> impl Iterator<Item = EdgeId> + '_ {
        let m = self.diagram.edge_count();
        (0..m).map(move |k| (self.basepoint + k) % m)
    }

    /// Same knot seen in a mirror; numberings are kept.
    pub fn mirror(&self) -> Self {
        Self { diagram: self.diagram.mirror(), ..self.clone() }
    }
}
