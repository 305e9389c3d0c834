use std::collections::BTreeMap;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::pd::PdCode;

/// A position on a crossing: `(crossing index, slot 0..4)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Dart {
    pub crossing: usize,
    pub slot: usize,
}

impl Dart {
    pub fn new(crossing: usize, slot: usize) -> Self {
        Dart {
            crossing,
            slot: slot % 4,
        }
    }

    /// Slot across the crossing along the same strand.
    pub fn through(self) -> Dart {
        Dart::new(self.crossing, self.slot + 2)
    }

    pub fn is_over(self) -> bool {
        self.slot % 2 == 1
    }
}

/// The coloring equation at one crossing: `under[0] + under[1] - 2 over = 0`,
/// in terms of arc indices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CrossingRelation {
    pub under: [usize; 2],
    pub over: usize,
}

/// A PD code together with its arcs and per-crossing relations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlanarDiagram {
    pd: PdCode,
    /// `arc_of_edge[label - 1]`
    arc_of_edge: Vec<usize>,
    /// Edge labels of each arc, ascending; arcs ordered by their least label.
    arcs: Vec<Vec<u32>>,
    relations: Vec<CrossingRelation>,
    /// `darts[label - 1]`: the two slots holding the label, in slot order.
    darts: Vec<[Dart; 2]>,
}

pub fn build_diagram(pd: PdCode) -> PlanarDiagram {
    PlanarDiagram::new(pd)
}

impl PlanarDiagram {
    pub fn new(pd: PdCode) -> Self {
        let e = pd.edge_count();
        let mut parent: Vec<usize> = (0..e).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for q in pd.crossings() {
            let (a, b) = (
                find(&mut parent, q[1] as usize - 1),
                find(&mut parent, q[3] as usize - 1),
            );
            // keep the smaller label as root so arcs sort by least label
            let (lo, hi) = (a.min(b), a.max(b));
            parent[hi] = lo;
        }
        let roots: Vec<usize> = (0..e).map(|i| find(&mut parent, i)).collect();
        let mut index_of_root = BTreeMap::new();
        for &r in &roots {
            let next = index_of_root.len();
            index_of_root.entry(r).or_insert(next);
        }
        let arc_of_edge: Vec<usize> = roots.iter().map(|r| index_of_root[r]).collect();
        let mut arcs = vec![Vec::new(); index_of_root.len()];
        for (i, &a) in arc_of_edge.iter().enumerate() {
            arcs[a].push(i as u32 + 1);
        }
        let arc = |l: u32| arc_of_edge[l as usize - 1];
        let relations = pd
            .crossings()
            .iter()
            .map(|q| CrossingRelation {
                under: [arc(q[0]), arc(q[2])],
                over: arc(q[1]),
            })
            .collect();

        let mut slots: Vec<Vec<Dart>> = vec![Vec::new(); e];
        for (k, q) in pd.crossings().iter().enumerate() {
            for (s, &l) in q.iter().enumerate() {
                slots[l as usize - 1].push(Dart::new(k, s));
            }
        }
        let darts = if pd.is_unknot() {
            Vec::new()
        } else {
            slots.into_iter().map(|v| [v[0], v[1]]).collect()
        };

        PlanarDiagram {
            pd,
            arc_of_edge,
            arcs,
            relations,
            darts,
        }
    }

    pub fn pd(&self) -> &PdCode {
        &self.pd
    }

    pub fn crossing_count(&self) -> usize {
        self.pd.crossing_count()
    }

    pub fn edge_count(&self) -> usize {
        self.pd.edge_count()
    }

    pub fn is_unknot(&self) -> bool {
        self.pd.is_unknot()
    }

    pub fn arc_count(&self) -> usize {
        self.arcs.len()
    }

    pub fn arcs(&self) -> &[Vec<u32>] {
        &self.arcs
    }

    /// Arc identifier used in reports: the least edge label on the arc.
    pub fn arc_id(&self, arc: usize) -> u32 {
        self.arcs[arc][0]
    }

    pub fn arc_of_edge(&self, label: u32) -> Option<usize> {
        self.arc_of_edge
            .get((label as usize).checked_sub(1)?)
            .copied()
    }

    pub fn relations(&self) -> &[CrossingRelation] {
        &self.relations
    }

    pub fn has_edge(&self, label: u32) -> bool {
        label >= 1 && (label as usize) <= self.edge_count()
    }

    pub fn label_at(&self, d: Dart) -> u32 {
        self.pd.crossings()[d.crossing][d.slot]
    }

    /// Both slots holding `label`. Not defined for the crossing-free unknot.
    pub fn darts_of(&self, label: u32) -> [Dart; 2] {
        self.darts[label as usize - 1]
    }

    /// The other end of the edge leaving `d`.
    pub fn opposite(&self, d: Dart) -> Dart {
        let [x, y] = self.darts_of(self.label_at(d));
        if x == d {
            y
        } else {
            x
        }
    }

    /// Faces as cyclic lists of departure slots. Each boundary is walked with
    /// the face on the right: arrive at a slot, leave by the next slot
    /// counterclockwise. Every edge appears once in each of its two faces.
    pub fn faces(&self) -> Vec<Vec<Dart>> {
        let n = self.crossing_count();
        let mut seen = vec![[false; 4]; n];
        let mut faces = Vec::new();
        for k in 0..n {
            for s in 0..4 {
                if seen[k][s] {
                    continue;
                }
                let mut face = Vec::new();
                let mut d = Dart::new(k, s);
                while !seen[d.crossing][d.slot] {
                    seen[d.crossing][d.slot] = true;
                    face.push(d);
                    let arrive = self.opposite(d);
                    d = Dart::new(arrive.crossing, arrive.slot + 1);
                }
                faces.push(face);
            }
        }
        faces
    }

    /// Number of link components.
    pub fn component_count(&self) -> usize {
        if self.is_unknot() {
            return 1;
        }
        let mut seen = vec![false; self.edge_count()];
        let mut count = 0;
        for start in 1..=self.edge_count() as u32 {
            if seen[start as usize - 1] {
                continue;
            }
            count += 1;
            let mut d = self.darts_of(start)[0];
            loop {
                let l = self.label_at(d);
                if seen[l as usize - 1] {
                    break;
                }
                seen[l as usize - 1] = true;
                d = self.opposite(d).through();
            }
        }
        count
    }

    /// Connected pieces of the underlying 4-valent graph.
    pub fn graph_pieces(&self) -> usize {
        let n = self.crossing_count();
        if n == 0 {
            return 1;
        }
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                x = p[x];
            }
            x
        }
        for [a, b] in &self.darts {
            let (x, y) = (find(&mut parent, a.crossing), find(&mut parent, b.crossing));
            parent[x] = y;
        }
        (0..n).filter(|&i| find(&mut parent, i) == i).count()
    }

    /// Euler-characteristic sanity check of the counterclockwise slot order:
    /// a diagram on the sphere has `V - E + F = 1 + pieces`.
    pub fn is_planar(&self) -> bool {
        let n = self.crossing_count();
        if n == 0 {
            return true;
        }
        self.faces().len() + n == 2 * n + 1 + self.graph_pieces()
    }
}

impl Serialize for PlanarDiagram {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.pd.serialize(s)
    }
}

impl<'de> Deserialize<'de> for PlanarDiagram {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        PdCode::deserialize(d).map(PlanarDiagram::new)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::parse_pd;

    fn diagram(s: &str) -> PlanarDiagram {
        build_diagram(parse_pd(s).unwrap())
    }

    #[test]
    fn trefoil_arcs() {
        let d = diagram("[[1,4,2,5],[3,6,4,1],[5,2,6,3]]");
        assert_eq!(d.arc_count(), 3);
        assert_eq!(d.relations().len(), 3);
        assert_eq!(d.arcs(), &[vec![1, 6], vec![2, 3], vec![4, 5]]);
        assert_eq!(d.component_count(), 1);
        assert_eq!(d.faces().len(), 5);
        assert!(d.is_planar());
    }

    #[test]
    fn figure_eight_arcs() {
        let d = diagram("[[4,2,5,1],[8,6,1,5],[6,3,7,4],[2,7,3,8]]");
        assert_eq!(d.arc_count(), 4);
        assert_eq!(d.relations().len(), 4);
        assert!(d.is_planar());
    }

    #[test]
    fn unknot_has_one_arc() {
        let d = diagram("unknot");
        assert_eq!(d.arc_count(), 1);
        assert!(d.relations().is_empty());
        assert_eq!(d.arc_id(0), 1);
        assert!(d.faces().is_empty());
    }

    #[test]
    fn relations_reference_existing_arcs() {
        let d = diagram("[[1,4,2,5],[3,6,4,1],[5,2,6,3]]");
        for r in d.relations() {
            assert!(r.under.iter().chain([&r.over]).all(|&a| a < d.arc_count()));
        }
    }

    #[test]
    fn kinked_unknot() {
        let d = diagram("[[1,2,2,1]]");
        assert_eq!(d.arc_count(), 1);
        assert_eq!(d.faces().len(), 3);
        assert!(d.is_planar());
    }

    #[test]
    fn hopf_link_components() {
        let d = diagram("[[1,3,2,4],[3,1,4,2]]");
        assert_eq!(d.component_count(), 2);
        assert!(d.is_planar());
    }
}
