//! Inputs shared by the benchmarks.

use surfcount_core::{parse_pd, Diagram};

pub const TREFOIL: &str = "X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)";
pub const FIGURE_EIGHT: &str = "X(4,2,5,1) X(8,6,1,5) X(6,3,7,4) X(2,7,3,8)";

/// Alternating (2, n) torus link; `n = 3` gives `TREFOIL`.
pub fn torus_link(n: usize) -> String {
    let mut out = String::new();
    for i in 0..n {
        let a = 2 * i + 1;
        let next = |k: usize| (k - 1) % (2 * n) + 1;
        out += &format!(
            "X({},{},{},{}) ",
            a,
            next(a + n),
            next(a + 1),
            next(a + n + 1)
        );
    }
    out
}

pub fn diagram(pd: &str) -> Diagram {
    parse_pd(pd).expect("benchmark diagram parses")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn torus_links_are_alternating() {
        assert_eq!(torus_link(3).trim(), TREFOIL);
        for n in [3, 5, 7, 9, 11] {
            let r = diagram(&torus_link(n)).validate(true, None);
            assert!(r.admits_chunks(), "n={n}: {r:?}");
        }
    }
}
