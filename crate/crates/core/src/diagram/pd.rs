use super::{Crossing, Diagram, DiagramError};

/// Parses a whitespace-separated list of `X(a,b,c,d)` terms.
///
/// Commas and whitespace inside the parentheses are both accepted, and a
/// surrounding `[...]` or `PD[...]` wrapper is ignored.
pub fn parse_pd(text: &str) -> Result<Diagram, DiagramError> {
    let mut body = text.trim();
    if let Some(rest) = body.strip_prefix("PD") {
        body = rest.trim_start();
    }
    if body.starts_with('[') && body.ends_with(']') {
        body = &body[1..body.len() - 1];
    }

    let mut crossings = Vec::new();
    let mut rest = body;
    loop {
        rest = rest.trim_start_matches(|c: char| c.is_whitespace() || c == ',');
        if rest.is_empty() {
            break;
        }
        let open = rest
            .find('(')
            .ok_or_else(|| DiagramError::MalformedToken(first_word(rest).to_string()))?;
        let head = rest[..open].trim();
        if head != "X" {
            return Err(DiagramError::MalformedToken(first_word(rest).to_string()));
        }
        let close = rest
            .find(')')
            .ok_or_else(|| DiagramError::MalformedToken(first_word(rest).to_string()))?;
        if close < open {
            return Err(DiagramError::MalformedToken(first_word(rest).to_string()));
        }
        let term = &rest[..=close];
        let labels: Vec<&str> = rest[open + 1..close]
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|s| !s.is_empty())
            .collect();
        if labels.len() != 4 {
            return Err(DiagramError::MalformedToken(term.to_string()));
        }
        let mut slots = [0u64; 4];
        for (slot, label) in slots.iter_mut().zip(&labels) {
            *slot = label
                .parse()
                .map_err(|_| DiagramError::MalformedToken(term.to_string()))?;
        }
        crossings.push(Crossing::from_pd(crossings.len(), slots));
        rest = &rest[close + 1..];
    }
    Diagram::from_crossings(crossings)
}

fn first_word(s: &str) -> &str {
    s.split_whitespace().next().unwrap_or(s)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn accepts_wrappers_and_spacing() {
        let a = parse_pd("X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)").unwrap();
        let b = parse_pd("PD[X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)]").unwrap();
        assert_eq!(a, b);
        let c = parse_pd("[X(1, 4, 2, 5), X(3, 6, 4, 1), X(5, 2, 6, 3)]").unwrap();
        assert_eq!(a, c);
    }

    #[test]
    fn unpaired_labels_rejected() {
        let err = parse_pd("X(1,4,2,5) X(3,6,4,1)").unwrap_err();
        assert!(matches!(err, DiagramError::LabelCount { count: 1, .. }));
    }

    #[test]
    fn malformed_tokens_rejected() {
        for bad in [
            "Y(1,1,2,2)",
            "X(1,1,2)",
            "X(1,1,2,2",
            "X(a,1,2,2)",
            "X(1,1,2,2,3)",
        ] {
            assert!(
                matches!(parse_pd(bad), Err(DiagramError::MalformedToken(_))),
                "{bad}"
            );
        }
        assert_eq!(parse_pd("   "), Err(DiagramError::Empty));
    }

    #[test]
    fn triple_label_rejected() {
        let err = parse_pd("X(1,1,1,2)").unwrap_err();
        assert_eq!(err, DiagramError::LabelCount { label: 1, count: 3 });
    }
}
