use std::fmt;

use super::{ClosedDiagram, DiagramError};

/// A braid word: `letters[k] = ±i` is the generator crossing strands `i` and
/// `i + 1`, positive letters giving positive crossings.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<i32>,
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<i32>) -> Result<Self, DiagramError> {
        if strands == 0 {
            return Err(DiagramError::GeneratorOutOfRange { generator: 0, strands });
        }
        if let Some(&bad) = letters.iter().find(|&&g| g == 0 || g.unsigned_abs() as usize >= strands) {
            return Err(DiagramError::GeneratorOutOfRange { generator: bad as i64, strands });
        }
        Ok(Self { strands, letters })
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    /// Number of cycles of the underlying permutation, i.e. the number of
    /// components of the closure.
    pub fn closure_components(&self) -> usize {
        let mut perm: Vec<usize> = (0..self.strands).collect();
        for &g in &self.letters {
            let i = g.unsigned_abs() as usize - 1;
            perm.swap(i, i + 1);
        }
        let mut seen = vec![false; self.strands];
        let mut cycles = 0;
        for start in 0..self.strands {
            if seen[start] {
                continue;
            }
            cycles += 1;
            let mut p = start;
            while !seen[p] {
                seen[p] = true;
                p = perm[p];
            }
        }
        cycles
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "strands {};", self.strands)?;
        for &g in &self.letters {
            if g > 0 {
                write!(f, " s{g}")?;
            } else {
                write!(f, " s{}^-1", -g)?;
            }
        }
        Ok(())
    }
}

/// Parses `strands N` followed by letters `sK`, `sK^-1`, `-K` or `K`,
/// separated by whitespace, `,` or `;`. `#` starts a comment.
pub fn parse_braid(text: &str) -> Result<BraidWord, DiagramError> {
    let mut strands = None;
    let mut letters = Vec::new();
    for (k, full) in text.lines().enumerate() {
        let content = full.split('#').next().unwrap_or("");
        let mut column = 0;
        let mut tokens = content
            .split(|c: char| c.is_whitespace() || c == ',' || c == ';')
            .filter_map(|t| {
                let here = content[column..].find(t).map(|p| p + column).unwrap_or(column);
                column = here + t.len();
                (!t.is_empty()).then_some((here + 1, t))
            })
            .peekable();
        while let Some((col, tok)) = tokens.next() {
            let err = |message: &str| DiagramError::Syntax { line: k + 1, column: col, message: message.into() };
            if tok == "strands" {
                let (_, value) = tokens.next().ok_or_else(|| err("strands needs a count"))?;
                strands = Some(value.parse::<usize>().map_err(|_| err("bad strand count"))?);
                continue;
            }
            let (negative, body) = if let Some(rest) = tok.strip_prefix('s').or_else(|| tok.strip_prefix('S')) {
                match rest.strip_suffix("^-1") {
                    Some(g) => (true, g),
                    None => (false, rest),
                }
            } else if let Some(rest) = tok.strip_prefix('-') {
                (true, rest)
            } else {
                (false, tok)
            };
            let g: i32 = body.parse().map_err(|_| err("expected a braid letter"))?;
            if g <= 0 {
                return Err(err("generator indices start at 1"));
            }
            letters.push(if negative { -g } else { g });
        }
    }
    let strands = strands.ok_or(DiagramError::Syntax { line: 1, column: 1, message: "missing `strands N`".into() })?;
    BraidWord::new(strands, letters)
}

/// PD diagram of the closure of `word`, strands oriented upward.
///
/// A positive letter `s_i` sends the strand at position `i` over to `i + 1`
/// and the strand at `i + 1` under to `i`, so counterclockwise from the
/// incoming under-edge the ports read: under in (lower right), over out
/// (upper right), under out (upper left), over in (lower left). Negative
/// letters swap the roles of the two strands.
pub fn from_braid(word: &BraidWord) -> Result<ClosedDiagram, DiagramError> {
    let components = word.closure_components();
    if components != 1 {
        return Err(DiagramError::MultiComponent { components });
    }
    if word.letters.is_empty() {
        return Ok(ClosedDiagram::unknot());
    }
    let mut next = word.strands as u64;
    let mut current: Vec<u64> = (0..word.strands as u64).collect();
    let mut quads = Vec::with_capacity(word.letters.len());
    for &g in &word.letters {
        let i = g.unsigned_abs() as usize - 1;
        let (left, right) = (current[i], current[i + 1]);
        let (new_left, new_right) = (next, next + 1);
        next += 2;
        if g > 0 {
            quads.push([right, new_right, new_left, left]);
        } else {
            quads.push([left, right, new_right, new_left]);
        }
        current[i] = new_left;
        current[i + 1] = new_right;
    }
    // close up: the top of each position feeds back into its bottom
    let close = |label: u64| match current.iter().position(|&c| c == label) {
        Some(p) => p as u64,
        None => label,
    };
    let quads: Vec<[u64; 4]> = quads.into_iter().map(|q| q.map(close)).collect();
    ClosedDiagram::from_raw(&quads).map(|(d, _)| d)
}

#[cfg(test)]
mod tests {
    use super::super::validate;
    use super::*;

    #[test]
    fn empty_word_on_one_strand_is_unknot() {
        let d = from_braid(&BraidWord::new(1, vec![]).unwrap()).unwrap();
        assert_eq!(d.crossing_count(), 0);
    }

    #[test]
    fn trefoil_closure() {
        let d = from_braid(&BraidWord::new(2, vec![1, 1, 1]).unwrap()).unwrap();
        assert_eq!(d.crossing_count(), 3);
        assert!((0..3).all(|c| d.sign(c) == 1));
        let raw: Vec<[u64; 4]> = d.crossings().iter().map(|q| q.map(|e| e as u64)).collect();
        assert!(validate(&raw).is_empty());
    }

    #[test]
    fn negative_letters_give_negative_crossings() {
        let d = from_braid(&BraidWord::new(2, vec![-1, -1, -1]).unwrap()).unwrap();
        assert!((0..3).all(|c| d.sign(c) == -1));
    }

    #[test]
    fn hopf_link_rejected() {
        let word = BraidWord::new(2, vec![1, 1]).unwrap();
        assert_eq!(from_braid(&word), Err(DiagramError::MultiComponent { components: 2 }));
        let unlink = BraidWord::new(3, vec![1]).unwrap();
        assert_eq!(from_braid(&unlink), Err(DiagramError::MultiComponent { components: 2 }));
    }

    #[test]
    fn generator_range_checked() {
        assert!(matches!(BraidWord::new(2, vec![2]), Err(DiagramError::GeneratorOutOfRange { generator: 2, .. })));
        assert!(BraidWord::new(3, vec![2, -1]).is_ok());
    }

    #[test]
    fn parse_formats() {
        let w = parse_braid("strands 2; s1 s1 s1").unwrap();
        assert_eq!(w, BraidWord::new(2, vec![1, 1, 1]).unwrap());
        let w = parse_braid("# figure eight\nstrands 3\ns1 s2^-1 1 -2").unwrap();
        assert_eq!(w.letters(), &[1, -2, 1, -2]);
        assert_eq!(parse_braid(&w.to_string()).unwrap(), w);
        assert!(matches!(parse_braid("s1 s1"), Err(DiagramError::Syntax { .. })));
        assert!(matches!(parse_braid("strands 2\ns1 t2"), Err(DiagramError::Syntax { line: 2, column: 4, .. })));
        assert!(matches!(parse_braid("strands 2\ns3"), Err(DiagramError::GeneratorOutOfRange { .. })));
    }
}
