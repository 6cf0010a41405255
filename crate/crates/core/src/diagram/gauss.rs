use super::{Crossing, Diagram, DiagramError};
use std::collections::BTreeMap;

/// Parses a signed Gauss code and converts it to PD form.
///
/// Each non-empty line other than the signs line is one link component: a
/// sequence of crossing numbers met in order, positive when passing over and
/// negative when passing under. The line `signs: ...` lists one `+` or `-`
/// per crossing in ascending crossing-number order. A positive crossing has
/// the overstrand running from slot 3 to slot 1 in the resulting PD entry.
///
/// ```text
/// -1 3 -2 1 -3 2
/// signs: + + +
/// ```
pub fn parse_gauss(text: &str) -> Result<Diagram, DiagramError> {
    let mut strands: Vec<Vec<i64>> = Vec::new();
    let mut signs: Option<Vec<bool>> = None;
    for line in text.lines() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        if let Some(rest) = line.strip_prefix("signs:") {
            let mut parsed = Vec::new();
            for ch in rest.chars().filter(|c| !c.is_whitespace() && *c != ',') {
                match ch {
                    '+' => parsed.push(true),
                    '-' => parsed.push(false),
                    _ => return Err(DiagramError::MalformedToken(ch.to_string())),
                }
            }
            signs = Some(parsed);
            continue;
        }
        let mut strand = Vec::new();
        for tok in line
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|s| !s.is_empty())
        {
            let v: i64 = tok
                .parse()
                .map_err(|_| DiagramError::MalformedToken(tok.to_string()))?;
            if v == 0 {
                return Err(DiagramError::MalformedToken(tok.to_string()));
            }
            strand.push(v);
        }
        strands.push(strand);
    }
    let signs =
        signs.ok_or_else(|| DiagramError::MalformedToken("missing `signs:` line".into()))?;
    if strands.is_empty() {
        return Err(DiagramError::Empty);
    }

    // (under_in, under_out, over_in, over_out) per crossing number.
    let mut ends: BTreeMap<u64, [Option<(u64, u64)>; 2]> = BTreeMap::new();
    let mut next_label = 1u64;
    for strand in &strands {
        let m = strand.len() as u64;
        let base = next_label;
        next_label += m;
        for (j, &v) in strand.iter().enumerate() {
            let j = j as u64;
            let incoming = base + (j + m - 1) % m;
            let outgoing = base + j;
            let entry = ends.entry(v.unsigned_abs()).or_insert([None, None]);
            let idx = usize::from(v > 0);
            if entry[idx].is_some() {
                return Err(DiagramError::MalformedToken(format!(
                    "crossing {} passed {} twice",
                    v.unsigned_abs(),
                    if v > 0 { "over" } else { "under" }
                )));
            }
            entry[idx] = Some((incoming, outgoing));
        }
    }
    if signs.len() != ends.len() {
        return Err(DiagramError::MalformedToken(format!(
            "{} signs for {} crossings",
            signs.len(),
            ends.len()
        )));
    }

    let mut crossings = Vec::with_capacity(ends.len());
    for ((&number, pair), &positive) in ends.iter().zip(&signs) {
        let (Some((a, c)), Some((o_in, o_out))) = (pair[0], pair[1]) else {
            return Err(DiagramError::OpenStrand(format!(
                "crossing {number} is not met once over and once under"
            )));
        };
        let slots = if positive {
            [a, o_out, c, o_in]
        } else {
            [a, o_in, c, o_out]
        };
        crossings.push(Crossing::from_pd(crossings.len(), slots));
    }
    Diagram::from_crossings(crossings)
}
