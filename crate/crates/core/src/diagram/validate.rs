use super::Diagram;
use serde::Serialize;
use std::collections::BTreeMap;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Yes,
    No,
    Unchecked,
}

impl From<bool> for Verdict {
    fn from(b: bool) -> Verdict {
        if b {
            Verdict::Yes
        } else {
            Verdict::No
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub alternating: Verdict,
    pub cellular: Verdict,
    pub checkerboard_colorable: Verdict,
    pub weakly_prime: Verdict,
    pub each_component_crossed: Verdict,
    pub genus: usize,
    pub surface_components: usize,
    pub link_components: usize,
    pub notes: Vec<String>,
}

impl ValidationReport {
    /// The conditions the chunk construction relies on.
    pub fn admits_chunks(&self) -> bool {
        self.alternating == Verdict::Yes
            && self.cellular == Verdict::Yes
            && self.checkerboard_colorable == Verdict::Yes
    }
}

impl Diagram {
    /// Checks the diagram-level alternating conditions.
    ///
    /// `ambient_genus` is the genus of the surface the user claims the diagram
    /// lives on; faces are disks on the derived surface, so the diagram is
    /// reported non-cellular only when the claim disagrees with it. Weak
    /// primality is decided on spheres only and reported `unchecked` on
    /// higher-genus components or when `check_weakly_prime` is off.
    pub fn validate(
        &self,
        check_weakly_prime: bool,
        ambient_genus: Option<usize>,
    ) -> ValidationReport {
        let mut notes = Vec::new();

        let cellular = match ambient_genus {
            Some(g) if g > self.genus => {
                notes.push(format!(
                    "ambient genus {g} exceeds the genus {} filled by the diagram, so some region is not a disk",
                    self.genus
                ));
                false
            }
            Some(g) if g < self.genus => {
                notes.push(format!(
                    "diagram needs genus {} but the ambient surface has genus {g}",
                    self.genus
                ));
                false
            }
            _ => true,
        };

        let colorable = self.checkerboard_coloring().is_ok();

        let weakly_prime = if !check_weakly_prime || self.genus > 0 {
            Verdict::Unchecked
        } else if let Some((e, f)) = sphere_two_edge_cut(self) {
            notes.push(format!(
                "edges {} and {} bound the same two regions",
                self.edges[e].label, self.edges[f].label
            ));
            Verdict::No
        } else {
            Verdict::Yes
        };

        if self.surface_components.len() > 1 {
            notes.push(format!(
                "diagram is split into {} pieces, each filling its own surface component",
                self.surface_components.len()
            ));
        }

        ValidationReport {
            alternating: is_alternating(self).into(),
            cellular: cellular.into(),
            checkerboard_colorable: colorable.into(),
            weakly_prime,
            each_component_crossed: self
                .link_components
                .iter()
                .all(|c| !c.passages.is_empty())
                .into(),
            genus: self.genus,
            surface_components: self.surface_components.len(),
            link_components: self.link_components.len(),
            notes,
        }
    }
}

pub(crate) fn is_alternating(d: &Diagram) -> bool {
    d.link_components.iter().all(|comp| {
        let marks: Vec<bool> = comp.passages.iter().map(|&h| d.is_over(h)).collect();
        (0..marks.len()).all(|i| marks[i] != marks[(i + 1) % marks.len()])
    })
}

/// On a sphere, a curve meeting the diagram in two points with crossings on
/// both sides exists exactly when two distinct edges border the same pair of
/// distinct regions.
fn sphere_two_edge_cut(d: &Diagram) -> Option<(usize, usize)> {
    let mut seen: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    for k in 0..d.edges.len() {
        let [a, b] = d.edge_faces(k);
        if a == b {
            continue;
        }
        if let Some(&j) = seen.get(&(a.min(b), a.max(b))) {
            return Some((j, k));
        }
        seen.insert((a.min(b), a.max(b)), k);
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::fixtures::*;
    use crate::diagram::{parse_pd, Crossing};
    use proptest::prelude::*;

    /// Brute force: remove every pair of edges and look for a new component.
    fn brute_force_weakly_prime(d: &Diagram) -> bool {
        let n = d.crossing_count();
        let pieces = |skip: [usize; 2]| {
            let mut parent: Vec<usize> = (0..n).collect();
            fn find(p: &mut [usize], mut x: usize) -> usize {
                while p[x] != x {
                    x = p[x];
                }
                x
            }
            for (k, e) in d.edges.iter().enumerate() {
                if skip.contains(&k) {
                    continue;
                }
                let (a, b) = (
                    find(&mut parent, e.ends[0] / 4),
                    find(&mut parent, e.ends[1] / 4),
                );
                parent[a] = b;
            }
            (0..n).filter(|&x| find(&mut parent, x) == x).count()
        };
        let base = pieces([usize::MAX; 2]);
        for i in 0..d.edges.len() {
            for j in i + 1..d.edges.len() {
                if pieces([i, j]) > base {
                    return false;
                }
            }
        }
        true
    }

    #[test]
    fn trefoil_report() {
        let r = parse_pd(TREFOIL).unwrap().validate(true, None);
        assert_eq!(r.alternating, Verdict::Yes);
        assert_eq!(r.cellular, Verdict::Yes);
        assert_eq!(r.checkerboard_colorable, Verdict::Yes);
        assert_eq!(r.weakly_prime, Verdict::Yes);
        assert_eq!(r.each_component_crossed, Verdict::Yes);
    }

    #[test]
    fn granny_is_not_weakly_prime() {
        let d = parse_pd(GRANNY).unwrap();
        assert_eq!(d.genus, 0);
        let r = d.validate(true, None);
        assert_eq!(r.alternating, Verdict::Yes);
        assert_eq!(r.weakly_prime, Verdict::No);
        assert!(!brute_force_weakly_prime(&d));
    }

    #[test]
    fn nonalternating_detected() {
        let d = parse_pd("X(1,4,2,5) X(3,6,4,1) X(2,6,3,5)").unwrap();
        assert_eq!(d.validate(false, None).alternating, Verdict::No);
    }

    #[test]
    fn higher_genus_leaves_primality_unchecked() {
        let d = parse_pd("X(1,2,1,2)").unwrap();
        let r = d.validate(true, None);
        assert_eq!(r.weakly_prime, Verdict::Unchecked);
        assert_eq!(r.checkerboard_colorable, Verdict::No);
    }

    #[test]
    fn ambient_genus_mismatch_flags_cellularity() {
        let d = parse_pd(TREFOIL).unwrap();
        assert_eq!(d.validate(false, Some(1)).cellular, Verdict::No);
        assert_eq!(d.validate(false, Some(0)).cellular, Verdict::Yes);
    }

    #[test]
    fn fixtures_agree_with_brute_force() {
        for pd in [TREFOIL, FIGURE_EIGHT, CURL, GRANNY] {
            let d = parse_pd(pd).unwrap();
            let expected = brute_force_weakly_prime(&d);
            assert_eq!(
                d.validate(true, None).weakly_prime,
                Verdict::from(expected),
                "{pd}"
            );
        }
    }

    /// Random planar diagrams: a prime base with curls and trefoil summands
    /// spliced into its edges.
    fn grow(base: u8, seed: &[(u8, u8)]) -> Diagram {
        let mut crossings: Vec<[u64; 4]> = match base % 3 {
            0 => vec![[1, 1, 2, 2]],
            1 => vec![[1, 4, 2, 5], [3, 6, 4, 1], [5, 2, 6, 3]],
            _ => vec![[4, 2, 5, 1], [8, 6, 1, 5], [6, 3, 7, 4], [2, 7, 3, 8]],
        };
        let mut next = crossings.iter().flatten().max().unwrap() + 1;
        for &(kind, pick) in seed {
            let labels: Vec<u64> = {
                let mut l: Vec<u64> = crossings.iter().flatten().copied().collect();
                l.sort();
                l.dedup();
                l
            };
            let target = labels[pick as usize % labels.len()];
            // Reroute the second occurrence of `target` through new crossings.
            let mut slot = None;
            for (i, c) in crossings.iter().enumerate() {
                for (s, &label) in c.iter().enumerate() {
                    if label == target {
                        slot = Some((i, s));
                    }
                }
            }
            let (ci, cs) = slot.unwrap();
            if kind % 2 == 0 {
                // Curl: target -> X(target, x, x, y) -> y.
                let (x, y) = (next, next + 1);
                next += 2;
                crossings[ci][cs] = y;
                crossings.push([target, x, x, y]);
            } else {
                // Connected sum with a trefoil cut open along its edge 1.
                let o = next - 1;
                next += 6;
                crossings[ci][cs] = o + 1;
                let t = [
                    [target, o + 4, o + 2, o + 5],
                    [o + 3, o + 6, o + 4, o + 1],
                    [o + 5, o + 2, o + 6, o + 3],
                ];
                crossings.extend(t);
            }
        }
        let cs = crossings
            .into_iter()
            .enumerate()
            .map(|(i, s)| Crossing::from_pd(i, s))
            .collect();
        Diagram::from_crossings(cs).unwrap()
    }

    proptest! {
        #[test]
        fn euler_identity_and_primality_oracle(base in 0u8..3, seed in proptest::collection::vec((0u8..4, 0u8..255), 0..3)) {
            let d = grow(base, &seed);
            let v = d.crossing_count() as i64;
            prop_assert_eq!(d.edges.len() as i64, 2 * v);
            let f = d.faces.len() as i64;
            let comps = d.surface_components.len() as i64;
            prop_assert_eq!(v - 2 * v + f, 2 * comps - 2 * d.genus as i64);
            if d.genus == 0 && d.crossing_count() <= 8 {
                let expected = brute_force_weakly_prime(&d);
                prop_assert_eq!(d.validate(true, None).weakly_prime, Verdict::from(expected));
            }
        }

        #[test]
        fn coloring_separates_every_edge(base in 0u8..3, seed in proptest::collection::vec((0u8..4, 0u8..255), 0..3)) {
            let d = grow(base, &seed);
            if let Ok(c) = d.checkerboard_color() {
                let colors = c.coloring.unwrap();
                for k in 0..d.edges.len() {
                    let [a, b] = d.edge_faces(k);
                    prop_assert_ne!(colors[a], colors[b]);
                }
            }
        }

        #[test]
        fn parsing_is_deterministic(base in 0u8..3, seed in proptest::collection::vec((0u8..4, 0u8..255), 0..6)) {
            let d = grow(base, &seed);
            let text: String = d.crossings.iter()
                .map(|c| format!("X({},{},{},{}) ", c.slots[0], c.slots[1], c.slots[2], c.slots[3]))
                .collect();
            let a = parse_pd(&text).unwrap();
            let b = parse_pd(&text).unwrap();
            prop_assert_eq!(a.to_json(), b.to_json());
        }
    }
}
