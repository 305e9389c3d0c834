//! Reidemeister moves on PD codes.
//!
//! Edge orientation for a move is taken from the label's first slot (lowest
//! crossing, then lowest slot) to its second. Sides are relative to that
//! direction. After every move the labels are renumbered by walking strands,
//! starting each component from its least surviving label, so results are
//! deterministic.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rand::Rng;

use super::pd::{Crossing, PdCode};
use super::planar::{Dart, PlanarDiagram};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    Left,
    Right,
}

/// Whether a kink's first pass goes under or over.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Layer {
    Under,
    Over,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MoveKind {
    R1Insert,
    R1Delete,
    R2Insert,
    R2Delete,
    R3,
}

/// Where and how to apply a Reidemeister move.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MoveSite {
    /// Add a kink on `edge`, looping to `side`.
    R1Insert { edge: u32, side: Side, layer: Layer },
    /// Remove the kink whose loop is `edge`.
    R1Delete { edge: u32 },
    /// Push a finger of `over` across `under` through the face on `side` of
    /// `over`. `over == under` pushes an edge across itself.
    R2Insert { over: u32, under: u32, side: Side },
    /// Remove the bigon with `edge` on its boundary.
    R2Delete { edge: u32 },
    /// Slide a strand across the triangular face bounded by `edges`.
    R3 { edges: [u32; 3] },
}

impl MoveSite {
    pub fn kind(&self) -> MoveKind {
        match self {
            MoveSite::R1Insert { .. } => MoveKind::R1Insert,
            MoveSite::R1Delete { .. } => MoveKind::R1Delete,
            MoveSite::R2Insert { .. } => MoveKind::R2Insert,
            MoveSite::R2Delete { .. } => MoveKind::R2Delete,
            MoveSite::R3 { .. } => MoveKind::R3,
        }
    }

    fn edges(&self) -> Vec<u32> {
        match *self {
            MoveSite::R1Insert { edge, .. }
            | MoveSite::R1Delete { edge }
            | MoveSite::R2Delete { edge } => vec![edge],
            MoveSite::R2Insert { over, under, .. } => vec![over, under],
            MoveSite::R3 { edges } => edges.to_vec(),
        }
    }
}

pub fn apply_move(d: &PlanarDiagram, site: MoveSite) -> Result<PlanarDiagram> {
    for e in site.edges() {
        if !d.has_edge(e) {
            return Err(Error::NoSuchEdge(e));
        }
    }
    let crossings = match site {
        MoveSite::R1Insert { edge, side, layer } => r1_insert(d, edge, side, layer),
        MoveSite::R1Delete { edge } => r1_delete(d, edge)?,
        MoveSite::R2Insert { over, under, side } => r2_insert(d, over, under, side)?,
        MoveSite::R2Delete { edge } => r2_delete(d, edge)?,
        MoveSite::R3 { edges } => r3(d, edges)?,
    };
    finish(crossings)
}

fn finish(crossings: Vec<Crossing>) -> Result<PlanarDiagram> {
    if crossings.is_empty() {
        return Ok(PlanarDiagram::new(PdCode::unknot()));
    }
    let pd = PdCode::from_labels(canonical_labels(&crossings))?;
    Ok(PlanarDiagram::new(pd))
}

/// Relabels edges `1..=E` by walking each component from its least label.
pub fn canonical_labels(crossings: &[Crossing]) -> Vec<Crossing> {
    let mut slots: BTreeMap<u32, Vec<Dart>> = BTreeMap::new();
    for (k, q) in crossings.iter().enumerate() {
        for (s, &l) in q.iter().enumerate() {
            slots.entry(l).or_default().push(Dart::new(k, s));
        }
    }
    let label_at = |d: Dart| crossings[d.crossing][d.slot];
    // labels of one component in walking order, and whether the walk ran
    // against the under-strand orientation
    let walk = |from: Dart| {
        let mut seen = Vec::new();
        let mut backwards = false;
        let mut d = from;
        loop {
            let l = label_at(d);
            if seen.contains(&l) {
                break;
            }
            seen.push(l);
            let ends = &slots[&l];
            let arrive = if ends[0] == d { ends[1] } else { ends[0] };
            backwards |= arrive.slot == 2;
            d = arrive.through();
        }
        (seen, backwards)
    };
    let mut renamed: BTreeMap<u32, u32> = BTreeMap::new();
    let mut next = 1;
    let labels: Vec<u32> = slots.keys().copied().collect();
    for start in labels {
        if renamed.contains_key(&start) {
            continue;
        }
        let ends = &slots[&start];
        let (mut seen, backwards) = walk(ends[0]);
        if backwards {
            seen = walk(ends[1]).0;
        }
        for l in seen {
            renamed.insert(l, next);
            next += 1;
        }
    }
    crossings.iter().map(|q| q.map(|l| renamed[&l])).collect()
}

struct Labels(u32);

impl Labels {
    fn fresh(&mut self) -> u32 {
        self.0 += 1;
        self.0
    }
}

fn kink(e1: u32, loop_edge: u32, e2: u32, side: Side, layer: Layer) -> Crossing {
    let l = loop_edge;
    match (layer, side) {
        (Layer::Under, Side::Right) => [e1, l, l, e2],
        (Layer::Under, Side::Left) => [e1, e2, l, l],
        (Layer::Over, Side::Right) => [l, l, e2, e1],
        (Layer::Over, Side::Left) => [l, e1, e2, l],
    }
}

fn r1_insert(d: &PlanarDiagram, edge: u32, side: Side, layer: Layer) -> Vec<Crossing> {
    let mut labels = Labels(d.edge_count() as u32);
    if d.is_unknot() {
        let l = labels.fresh();
        return vec![kink(edge, l, edge, side, layer)];
    }
    let mut xs = d.pd().crossings().to_vec();
    let [_, q] = d.darts_of(edge);
    let (l, e2) = (labels.fresh(), labels.fresh());
    xs[q.crossing][q.slot] = e2;
    xs.push(kink(edge, l, e2, side, layer));
    xs
}

fn r1_delete(d: &PlanarDiagram, edge: u32) -> Result<Vec<Crossing>> {
    if d.is_unknot() {
        return Err(Error::MoveNotApplicable(
            "the crossing-free unknot has no kink".into(),
        ));
    }
    let [p, q] = d.darts_of(edge);
    let adjacent = (p.slot + 1) % 4 == q.slot || (q.slot + 1) % 4 == p.slot;
    if p.crossing != q.crossing || !adjacent {
        return Err(Error::MoveNotApplicable(format!(
            "edge {edge} is not a kink loop"
        )));
    }
    let k = p.crossing;
    let rest: Vec<u32> = (0..4)
        .filter(|&s| s != p.slot && s != q.slot)
        .map(|s| d.label_at(Dart::new(k, s)))
        .collect();
    let (keep, drop) = (rest[0], rest[1]);
    let xs: Vec<Crossing> = d
        .pd()
        .crossings()
        .iter()
        .enumerate()
        .filter(|&(i, _)| i != k)
        .map(|(_, c)| c.map(|l| if l == drop { keep } else { l }))
        .collect();
    if keep == drop && !xs.is_empty() {
        return Err(Error::Unsupported(
            "move would leave a crossing-free component".into(),
        ));
    }
    Ok(xs)
}

fn r2_insert(d: &PlanarDiagram, over: u32, under: u32, side: Side) -> Result<Vec<Crossing>> {
    let mut labels = Labels(d.edge_count() as u32);
    let o1 = labels.fresh();
    let o_mid = labels.fresh();
    let u_mid = labels.fresh();
    let u2 = labels.fresh();
    let u1 = labels.fresh();
    // pushing an edge across itself: the stretch between finger and crossed
    // part is a single edge
    let o2 = if over == under { u1 } else { labels.fresh() };

    if d.is_unknot() {
        if over != under {
            return Err(Error::NoSuchEdge(over.max(under)));
        }
        // the circle also closes up o1 with u2
        return Ok(vec![[u_mid, o1, o1, o_mid], [u1, u1, u_mid, o_mid]]);
    }

    let [p, q] = d.darts_of(over);
    let start = match side {
        Side::Right => p,
        Side::Left => q,
    };
    let faces = d.faces();
    let face = faces
        .iter()
        .find(|f| f.contains(&start))
        .expect("every slot lies on a face");
    let at = face.iter().position(|&x| x == start).unwrap();
    let under_dep = (0..face.len())
        .map(|i| face[(at + i) % face.len()])
        .find(|&x| d.label_at(x) == under)
        .ok_or_else(|| {
            Error::MoveNotApplicable(format!("edges {over} and {under} do not share that face"))
        })?;
    let over_arr = d.opposite(start);
    let under_arr = d.opposite(under_dep);

    let mut xs = d.pd().crossings().to_vec();
    let mut put = |dart: Dart, l: u32| xs[dart.crossing][dart.slot] = l;
    put(start, o1);
    if over == under {
        put(under_arr, u2);
    } else {
        put(over_arr, o2);
        put(under_dep, u1);
        put(under_arr, u2);
    }
    xs.push([u_mid, o1, u2, o_mid]);
    xs.push([u1, o2, u_mid, o_mid]);
    Ok(xs)
}

fn removable_bigon(d: &PlanarDiagram, f: &[Dart]) -> bool {
    if f.len() != 2 || f[0].crossing == f[1].crossing {
        return false;
    }
    let (x, y) = (f[0], f[1]);
    let (ex, ey) = (d.opposite(x), d.opposite(y));
    // one boundary edge over at both ends, the other under at both ends
    x.is_over() == ex.is_over() && y.is_over() == ey.is_over() && x.is_over() != y.is_over()
}

fn r2_delete(d: &PlanarDiagram, edge: u32) -> Result<Vec<Crossing>> {
    let no = || Error::MoveNotApplicable(format!("edge {edge} does not bound a removable bigon"));
    if d.is_unknot() {
        return Err(no());
    }
    let [p, q] = d.darts_of(edge);
    let faces = d.faces();
    let bigon = faces
        .iter()
        .filter(|f| f.contains(&p) || f.contains(&q))
        .find(|f| removable_bigon(d, f))
        .ok_or_else(no)?;

    let (x, y) = (bigon[0], bigon[1]);
    let (k1, k2) = (x.crossing, y.crossing);
    let (ex, ey) = (d.opposite(x), d.opposite(y));
    // strand continuations beyond the two crossings
    let pairs = [
        (d.label_at(x.through()), d.label_at(ex.through())),
        (d.label_at(y.through()), d.label_at(ey.through())),
    ];

    let mut parent: BTreeMap<u32, u32> = BTreeMap::new();
    fn find(p: &mut BTreeMap<u32, u32>, x: u32) -> u32 {
        let mut r = x;
        while let Some(&n) = p.get(&r) {
            if n == r {
                break;
            }
            r = n;
        }
        r
    }
    for (a, b) in pairs {
        let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
        if ra != rb {
            parent.insert(ra.max(rb), ra.min(rb));
        }
    }
    let xs: Vec<Crossing> = d
        .pd()
        .crossings()
        .iter()
        .enumerate()
        .filter(|&(i, _)| i != k1 && i != k2)
        .map(|(_, c)| c.map(|l| find(&mut parent, l)))
        .collect();

    let mut counts: BTreeMap<u32, usize> = BTreeMap::new();
    for l in xs.iter().flatten() {
        *counts.entry(*l).or_default() += 1;
    }
    let outer = pairs
        .iter()
        .flat_map(|&(a, b)| [a, b])
        .map(|l| find(&mut parent, l));
    let closed = outer
        .filter(|r| !counts.contains_key(r))
        .collect::<std::collections::BTreeSet<_>>();
    if !closed.is_empty() && (!xs.is_empty() || closed.len() > 1) {
        return Err(Error::Unsupported(
            "move would leave a crossing-free component".into(),
        ));
    }
    Ok(xs)
}

fn r3(d: &PlanarDiagram, edges: [u32; 3]) -> Result<Vec<Crossing>> {
    let no = || Error::MoveNotApplicable(format!("edges {edges:?} do not bound an R3 triangle"));
    if d.is_unknot() {
        return Err(no());
    }
    let mut want = edges;
    want.sort_unstable();
    let faces = d.faces();
    let tri = faces
        .iter()
        .filter(|f| f.len() == 3)
        .find(|f| {
            let mut got = [d.label_at(f[0]), d.label_at(f[1]), d.label_at(f[2])];
            got.sort_unstable();
            got == want && r3_pattern(d, f)
        })
        .ok_or_else(no)?;

    let old = d.pd().crossings();
    let mut xs = old.to_vec();
    for &dep in tri.iter() {
        let arr = d.opposite(dep);
        let seg = d.label_at(dep);
        // the segment trades places with the strand's outer edges
        xs[dep.crossing][dep.slot] = d.label_at(arr.through());
        xs[dep.crossing][dep.through().slot] = seg;
        xs[arr.crossing][arr.slot] = d.label_at(dep.through());
        xs[arr.crossing][arr.through().slot] = seg;
    }
    Ok(xs)
}

fn r3_pattern(d: &PlanarDiagram, tri: &[Dart]) -> bool {
    let distinct = tri[0].crossing != tri[1].crossing
        && tri[1].crossing != tri[2].crossing
        && tri[0].crossing != tri[2].crossing;
    distinct
        && tri
            .iter()
            .any(|&dep| dep.is_over() && d.opposite(dep).is_over())
}

/// Every deletion and R3 site present in `d`.
pub fn detect_sites(d: &PlanarDiagram) -> Vec<MoveSite> {
    if d.is_unknot() {
        return Vec::new();
    }
    let mut sites = Vec::new();
    for e in 1..=d.edge_count() as u32 {
        if r1_delete(d, e).is_ok() {
            sites.push(MoveSite::R1Delete { edge: e });
        }
    }
    for f in d.faces() {
        if removable_bigon(d, &f) && r2_delete(d, d.label_at(f[0])).is_ok() {
            let edge = d.label_at(f[0]).min(d.label_at(f[1]));
            sites.push(MoveSite::R2Delete { edge });
        }
    }
    for f in d.faces() {
        if f.len() == 3 && r3_pattern(d, &f) {
            let mut edges = [d.label_at(f[0]), d.label_at(f[1]), d.label_at(f[2])];
            edges.sort_unstable();
            sites.push(MoveSite::R3 { edges });
        }
    }
    sites
}

/// A uniformly chosen R1 or R2 insertion; always applicable.
pub fn random_insertion<R: Rng + ?Sized>(d: &PlanarDiagram, rng: &mut R) -> MoveSite {
    let side = if rng.gen_bool(0.5) {
        Side::Left
    } else {
        Side::Right
    };
    let e = rng.gen_range(1..=d.edge_count() as u32);
    if rng.gen_bool(0.5) {
        let layer = if rng.gen_bool(0.5) {
            Layer::Under
        } else {
            Layer::Over
        };
        return MoveSite::R1Insert {
            edge: e,
            side,
            layer,
        };
    }
    if d.is_unknot() {
        return MoveSite::R2Insert {
            over: e,
            under: e,
            side,
        };
    }
    let [p, q] = d.darts_of(e);
    let start = if side == Side::Right { p } else { q };
    let face = d.faces().into_iter().find(|f| f.contains(&start)).unwrap();
    let under = d.label_at(face[rng.gen_range(0..face.len())]);
    let (over, under) = if rng.gen_bool(0.5) {
        (e, under)
    } else {
        (under, e)
    };
    if over == e {
        MoveSite::R2Insert { over, under, side }
    } else {
        // re-express the face as a side of the new over edge
        let [p2, _] = d.darts_of(over);
        let side = if face.contains(&p2) {
            Side::Right
        } else {
            Side::Left
        };
        MoveSite::R2Insert { over, under, side }
    }
}

/// `count` diagrams, each one random R1/R2 insertion away from the previous,
/// starting from `d`.
pub fn reidemeister_variants(d: &PlanarDiagram, count: usize, seed: u64) -> Vec<PlanarDiagram> {
    use rand::SeedableRng;
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    let mut cur = d.clone();
    for _ in 0..count {
        let site = random_insertion(&cur, &mut rng);
        cur = apply_move(&cur, site).expect("insertions always apply");
        out.push(cur.clone());
    }
    out
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::Left => "L",
            Side::Right => "R",
        })
    }
}

impl fmt::Display for Layer {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Layer::Under => "U",
            Layer::Over => "O",
        })
    }
}

/// Text form: `r1+:EDGE:L|R:U|O`, `r1-:EDGE`, `r2+:OVER:UNDER:L|R`, `r2-:EDGE`,
/// `r3:A,B,C`.
impl fmt::Display for MoveSite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MoveSite::R1Insert { edge, side, layer } => write!(f, "r1+:{edge}:{side}:{layer}"),
            MoveSite::R1Delete { edge } => write!(f, "r1-:{edge}"),
            MoveSite::R2Insert { over, under, side } => write!(f, "r2+:{over}:{under}:{side}"),
            MoveSite::R2Delete { edge } => write!(f, "r2-:{edge}"),
            MoveSite::R3 { edges: [a, b, c] } => write!(f, "r3:{a},{b},{c}"),
        }
    }
}

impl FromStr for MoveSite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Syntax(format!("bad move site `{s}`"));
        let parts: Vec<&str> = s.trim().split(':').collect();
        let num = |t: &str| t.trim().parse::<u32>().map_err(|_| bad());
        let side = |t: &str| match t {
            "L" | "l" => Ok(Side::Left),
            "R" | "r" => Ok(Side::Right),
            _ => Err(bad()),
        };
        let layer = |t: &str| match t {
            "U" | "u" => Ok(Layer::Under),
            "O" | "o" => Ok(Layer::Over),
            _ => Err(bad()),
        };
        match parts.as_slice() {
            ["r1+", e, s, l] => Ok(MoveSite::R1Insert {
                edge: num(e)?,
                side: side(s)?,
                layer: layer(l)?,
            }),
            ["r1-", e] => Ok(MoveSite::R1Delete { edge: num(e)? }),
            ["r2+", o, u, s] => Ok(MoveSite::R2Insert {
                over: num(o)?,
                under: num(u)?,
                side: side(s)?,
            }),
            ["r2-", e] => Ok(MoveSite::R2Delete { edge: num(e)? }),
            ["r3", es] => {
                let v = es.split(',').map(num).collect::<Result<Vec<_>>>()?;
                let edges = <[u32; 3]>::try_from(v.as_slice()).map_err(|_| bad())?;
                Ok(MoveSite::R3 { edges })
            }
            _ => Err(bad()),
        }
    }
}
