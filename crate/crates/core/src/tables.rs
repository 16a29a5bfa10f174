//! Transcribed decompositions of `Omega^p` for the Cayley plane and the
//! Freudenthal variety, with their `l(p)` column. Kept verbatim, typos
//! included; [`crate::twists::table_audit`] compares them with the engine.

use serde::Serialize;

use crate::catalog::SpaceFamily;
use crate::error::{Error, Result};
use crate::rootsys::Weight;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TableRow {
    pub p: usize,
    pub summands: Vec<Weight>,
    pub l: i64,
}

const CAYLEY: &[(usize, &[&str], i64)] = &[
    (1, &["-2λ1+λ3"], 2),
    (2, &["-3λ1+λ4"], 3),
    (3, &["-4λ1+λ2+λ5"], 4),
    (4, &["-5λ1+2λ2+λ6", "-5λ1+2λ5"], 5),
    (5, &["-6λ1+3λ2", "-6λ1+λ2+λ5+λ6"], 6),
    (6, &["-7λ1+2λ2+λ5", "-7λ1+λ4+2λ6"], 7),
    (7, &["-8λ1+λ2+λ4+λ6", "-8λ1+λ3+3λ6"], 8),
    (8, &["-9λ1+2λ4", "-9λ1+λ2+λ3+6λ6", "-8λ1+4λ6"], 8),
    (9, &["-10λ1+λ3+λ4+λ6", "-9λ1+λ2+3λ6"], 9),
    (10, &["-10λ1+λ4+2λ6", "-11λ1+2λ3+λ5"], 10),
    (11, &["-12λ1+3λ3", "-11λ1+λ3+λ5+λ6"], 11),
    (12, &["-12λ1+2λ3+λ6", "-11λ1+2λ5"], 11),
    (13, &["-12λ1+λ3+λ5"], 12),
    (14, &["-12λ1+λ4"], 12),
    (15, &["-12λ1+λ2"], 12),
];

const FREUDENTHAL: &[(usize, &[&str], i64)] = &[
    (1, &["-2λ7+λ6"], 2),
    (2, &["-3λ7+λ5"], 3),
    (3, &["-4λ7+λ4"], 4),
    (4, &["-5λ7+λ2+λ3"], 5),
    (5, &["-6λ7+2λ3", "-6λ7+λ1+2λ2"], 6),
    (6, &["-7λ7+3λ2", "-7λ7+λ1+λ2+λ3"], 7),
    (7, &["-8λ7+2λ2+λ3", "-8λ7+2λ1+λ4"], 8),
    (8, &["-9λ7+λ1+λ2+λ4", "-9λ7+3λ1+λ5"], 9),
    (9, &["-10λ7+2λ4", "-10λ7+2λ1+λ2+λ5", "-10λ7+4λ1+λ6"], 10),
    (10, &["-11λ7+λ1+λ4+λ5", "-11λ7+3λ1+λ2+λ6", "-10λ7+5λ1"], 10),
    (11, &["-12λ7+λ3+2λ5", "-12λ7+2λ1+λ4+λ6", "-11λ7+4λ1+λ2"], 11),
    (12, &["-13λ7+3λ5", "-13λ7+λ1+λ3+λ5+λ6", "-12λ7+3λ1+λ4"], 12),
    (13, &["-14λ7+2λ3+2λ6", "-14λ7+λ1+2λ5+λ6", "-13λ7+2λ1+λ3+λ5"], 13),
    (14, &["-15λ7+λ3+λ5+2λ6", "-14λ7+λ1+2λ3+λ6", "-14λ7+2λ1+2λ5"], 14),
    (15, &["-16λ7+λ4+3λ6", "-14λ7+3λ3", "-15λ7+λ1+λ3+λ5+λ6"], 14),
    (16, &["-15λ7+2λ3+λ5", "-17λ7+λ2+4λ6", "-16λ7+λ1+λ4+2λ6"], 15),
    (17, &["-18λ7+5λ6", "-16λ7+λ3+λ4+λ6", "-17λ7+λ1+λ2+3λ6"], 16),
    (18, &["-16λ7+2λ4", "-17λ7+λ2+λ3+2λ6", "-18λ7+λ1+4λ6"], 16),
    (19, &["-18λ7+λ3+3λ6", "-17λ7+λ2+λ4+λ6"], 17),
    (20, &["-18λ7+λ4+2λ6", "-17λ7+2λ2+λ5"], 17),
    (21, &["-18λ7+λ2+λ5+λ6", "-17λ7+3λ2"], 17),
    (22, &["-18λ7+2λ5", "-18λ7+2λ2+λ6"], 18),
    (23, &["-18λ7+λ2+λ5"], 18),
    (24, &["-18λ7+λ4"], 18),
    (25, &["-18λ7+λ3"], 18),
    (26, &["-18λ7+λ1"], 18),
];

/// Transcribed rows for `E6` or `E7`, in order of `p`.
pub fn transcribed(space: SpaceFamily) -> Result<Vec<TableRow>> {
    let (rows, rank) = match space {
        SpaceFamily::Cayley => (CAYLEY, 6),
        SpaceFamily::Freudenthal => (FREUDENTHAL, 7),
        other => return Err(Error::WrongFamily("tabulated decomposition", other.name())),
    };
    rows.iter()
        .map(|&(p, cells, l)| {
            let summands = cells.iter().map(|c| Weight::parse_lambda(c, rank)).collect::<Result<_>>()?;
            Ok(TableRow { p, summands, l })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::wt;

    #[test]
    fn shapes() {
        let e6 = transcribed(SpaceFamily::Cayley).unwrap();
        assert_eq!(e6.len(), 15);
        assert_eq!(e6[7].summands.len(), 3);
        assert_eq!(e6[7].summands[2], wt![-8, 0, 0, 0, 0, 4]);
        let e7 = transcribed(SpaceFamily::Freudenthal).unwrap();
        assert_eq!(e7.len(), 26);
        assert_eq!(e7[14].summands[1], wt![0, 0, 3, 0, 0, 0, -14]);
        assert!(e7.iter().enumerate().all(|(i, r)| r.p == i + 1));
        assert!(transcribed(SpaceFamily::Lagrangian { n: 3 }).is_err());
    }
}
