//! Named built-in diagrams.

use crate::diagram::{from_braid, parse_pd_document, BraidWord, ClosedDiagram, DiagramError, LongKnotDiagram};

/// PD source of the six-crossing reference diagram, with its crossing and
/// region numbering.
pub const SIX_CROSSING_PD: &str = include_str!("../fixtures/six_crossing.pd");

/// Names accepted by [`example`].
pub const NAMES: [&str; 5] = ["paper", "trefoil", "figure8", "kink", "unknot"];

/// Builds a named example. `paper` is the six-crossing reference diagram;
/// the knots come from braid closures cut at edge 0.
pub fn example(name: &str) -> Option<LongKnotDiagram> {
    let built = match name {
        "paper" => six_crossing(),
        "trefoil" => braid_closure(2, &[1, 1, 1]),
        "figure8" => braid_closure(3, &[1, -2, 1, -2]),
        "kink" => braid_closure(2, &[1]),
        "unknot" => LongKnotDiagram::new(ClosedDiagram::unknot(), 0),
        _ => return None,
    };
    Some(built.expect("built-in examples are valid"))
}

pub fn six_crossing() -> Result<LongKnotDiagram, DiagramError> {
    parse_pd_document(SIX_CROSSING_PD)?.into_long_knot()
}

fn braid_closure(strands: usize, letters: &[i32]) -> Result<LongKnotDiagram, DiagramError> {
    let d = from_braid(&BraidWord::new(strands, letters.to_vec())?)?;
    LongKnotDiagram::new(d, 0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_names_build() {
        for name in NAMES {
            assert!(example(name).is_some(), "{name}");
        }
        assert!(example("nope").is_none());
    }

    #[test]
    fn six_crossing_numbering_is_explicit() {
        let lk = six_crossing().unwrap();
        assert_eq!(lk.crossing_count(), 6);
        assert_eq!(lk.crossing_order(), &[1, 2, 3, 4, 5, 6]);
        assert_eq!(lk.region_corners().map(<[_]>::len), Some(6));
    }
}
