//! Combinatorial area in units of pi/2.

use super::NormalCurveWord;
use crate::{Error, Result};
use serde::Serialize;

/// `#S + #B + 2 #P - 4 chi`, the area of a piece in units of pi/2.
pub fn area(word: &NormalCurveWord, chi_piece: i64) -> i64 {
    (word.s + word.b + 2 * word.p) as i64 - 4 * chi_piece
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum AreaCategory {
    /// chi < 0 and area at least 2 pi.
    NegativeEuler,
    /// chi >= 0 and area at least pi/2.
    PositiveArea,
    /// chi = 0, area 0: a torus or Klein bottle, or an annulus or Moebius band
    /// whose boundary meets no edges.
    ZeroAreaEulerZero,
    /// chi = 1, area 0: a disk meeting exactly four edges.
    ZeroAreaDisk,
}

/// Checks `(chi, a)` against the area trichotomy for pieces of a normal
/// surface; anything outside it indicates an upstream bug.
pub fn classify_area(chi_piece: i64, a: i64) -> Result<AreaCategory> {
    let violation = || {
        Err(Error::InvariantViolation(format!(
            "piece with chi {chi_piece} has area {a} (pi/2 units)"
        )))
    };
    if chi_piece < 0 {
        return if a >= 4 {
            Ok(AreaCategory::NegativeEuler)
        } else {
            violation()
        };
    }
    match (chi_piece, a) {
        (_, a) if a > 0 => Ok(AreaCategory::PositiveArea),
        (0, 0) => Ok(AreaCategory::ZeroAreaEulerZero),
        (1, 0) => Ok(AreaCategory::ZeroAreaDisk),
        _ => violation(),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum ZeroAreaClass {
    PP,
    PSS,
    SSSS,
    BBBB,
    BBSS,
}

impl ZeroAreaClass {
    pub const ALL: [ZeroAreaClass; 5] = [
        ZeroAreaClass::PP,
        ZeroAreaClass::PSS,
        ZeroAreaClass::SSSS,
        ZeroAreaClass::BBBB,
        ZeroAreaClass::BBSS,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ZeroAreaClass::PP => "PP",
            ZeroAreaClass::PSS => "PSS",
            ZeroAreaClass::SSSS => "SSSS",
            ZeroAreaClass::BBBB => "BBBB",
            ZeroAreaClass::BBSS => "BBSS",
        }
    }

    /// PP and PSS disks cannot occur under the standing hypotheses, and SSSS
    /// disks are ruled out once representativity exceeds 4. BBBB and BBSS
    /// disks remain.
    pub fn excluded(self) -> bool {
        !matches!(self, ZeroAreaClass::BBBB | ZeroAreaClass::BBSS)
    }
}

/// Matches the boundary word of a zero-area disk against the five possible
/// classes. A P alongside B's is read as BB first.
pub fn zero_area_disk_taxonomy(word: &NormalCurveWord) -> Result<Option<ZeroAreaClass>> {
    let a = area(word, 1);
    if a != 0 {
        return Err(Error::PreconditionFailed(format!(
            "word {word} bounds a disk of area {a} (pi/2 units), not 0"
        )));
    }
    let relabeled;
    let word = if word.p > 0 && word.b > 0 {
        let letters: Vec<char> = word
            .word
            .chars()
            .flat_map(|c| if c == 'P' { vec!['B', 'B'] } else { vec![c] })
            .collect();
        relabeled = NormalCurveWord::from_letters(&letters)?;
        &relabeled
    } else {
        word
    };
    Ok(ZeroAreaClass::ALL
        .into_iter()
        .find(|c| c.name() == word.word))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Budgets {
    pub max_subsurfaces: i64,
    pub max_boundaries_per_piece: i64,
    pub max_letters: i64,
}

pub fn budgets(chi: i64) -> Result<Budgets> {
    if chi >= 0 {
        return Err(Error::OutOfDomain(format!(
            "budgets need chi < 0, got {chi}"
        )));
    }
    Ok(Budgets {
        max_subsurfaces: -4 * chi,
        max_boundaries_per_piece: -10 * chi,
        max_letters: -20 * chi,
    })
}

/// A piece of a surface: its boundary words and Euler characteristic.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Piece {
    pub words: Vec<NormalCurveWord>,
    pub chi: i64,
}

impl Piece {
    pub fn area(&self) -> i64 {
        let letters: i64 = self.words.iter().map(|w| area(w, 0)).sum();
        letters - 4 * self.chi
    }
}

/// Sums piece areas and compares with `-2 pi chi(Z)`, i.e. `-4 chi(Z)` in
/// pi/2 units. Returns the total on success.
pub fn gauss_bonnet_check(pieces: &[Piece], chi_total: i64) -> Result<i64> {
    let total: i64 = pieces.iter().map(Piece::area).sum();
    let expected = -4 * chi_total;
    if total == expected {
        Ok(total)
    } else {
        Err(Error::GaussBonnetViolation { total, expected })
    }
}
