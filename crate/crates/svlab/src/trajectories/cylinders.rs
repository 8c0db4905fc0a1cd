//! Cylinders in a fixed direction.
//!
//! Construction, valid whether or not the direction is completely periodic:
//!   1. trace every outgoing separatrix of the direction up to the waist
//!     bound; separatrices that close are the parallel saddle connections
//!     (every boundary edge of an in-range cylinder is among them);
//!   2. link arrivals to departures by rotating exactly π across the
//!     would-be cylinder side, giving the candidate boundary chains;
//!   3. from an interior point above each chain, certify an actual cylinder
//!     by closing a leaf of the straight-line flow, and measure the true
//!     heights by perpendicular probes against the traced segments.
//! A probe that wanders into some other cylinder still certifies a correct
//! cylinder; duplicates are collapsed by their bottom chain.

use super::enumerate::{enumerate_holonomies, rotate_to_germ};
use super::trace::{
    step, trace_to_vertex, transfer, BudgetCounter, Step, Terminal, TraceBudget,
};
use super::TrajectoryError;
use crate::scalar::{Scalar, Vec2};
use crate::surface::{Corner, TranslationSurface};
use std::collections::BTreeMap;

/// A saddle connection parallel to the query direction, with its traced
/// segments (one per triangle crossed).
#[derive(Clone, Debug)]
pub struct ParallelSc<S> {
    pub holonomy: Vec2<S>,
    pub start: usize,
    pub end: usize,
    /// Ray parameter: holonomy = s_len * direction.
    s_len: S,
    germ: Corner,
    arrival: Corner,
    segments: Vec<(usize, Vec2<S>, S, Vec2<S>)>,
}

/// A maximal flat annulus in the query direction.
#[derive(Clone, Debug)]
pub struct Cylinder<S> {
    /// Waist vector: total displacement along the bottom boundary.
    pub core: Vec2<S>,
    pub waist_sq: S,
    pub height_sq: S,
    /// Flat area, exact: waist * height.
    pub area: S,
    /// Indices into the decomposition's `parallel` list:
    /// boundary[0] is the side the probe certificate started from.
    pub boundary: [Vec<usize>; 2],
}

impl<S: Scalar> Cylinder<S> {
    pub fn waist(&self) -> f64 {
        self.waist_sq.to_f64().sqrt()
    }

    pub fn height(&self) -> f64 {
        self.height_sq.to_f64().sqrt()
    }

    pub fn direction(&self) -> Vec2<f64> {
        let v = self.core.to_f64();
        let n = v.norm();
        Vec2::new(v.x / n, v.y / n)
    }
}

#[derive(Clone, Debug)]
pub struct DirectionDecomposition<S> {
    pub direction: Vec2<S>,
    pub parallel: Vec<ParallelSc<S>>,
    pub cylinders: Vec<Cylinder<S>>,
    /// Some separatrix exceeded the length budget, so completeness of the
    /// direction's full decomposition is not certified; the cylinders found
    /// (all of waist <= the bound) are still valid.
    pub incomplete: bool,
}

/// Per-triangle obstacle index: segments of the parallel saddle connections.
struct Obstacles<S> {
    by_tri: Vec<Vec<(usize, Vec2<S>, Vec2<S>)>>, // (sc index, a, b)
}

impl<S: Scalar> Obstacles<S> {
    fn build(surf: &TranslationSurface<S>, scs: &[ParallelSc<S>]) -> Self {
        let mut by_tri = vec![Vec::new(); surf.num_triangles()];
        for (i, sc) in scs.iter().enumerate() {
            for (tri, a, _, b) in &sc.segments {
                by_tri[*tri].push((i, a.clone(), b.clone()));
                // A segment running along a triangulation edge is visible
                // from both sides; register the mirror copy.
                if let Some((t2, a2, b2)) = mirror_if_on_edge(surf, *tri, a, b) {
                    by_tri[t2].push((i, a2, b2));
                }
            }
        }
        Obstacles { by_tri }
    }
}

/// If [a, b] lies along edge `e` of triangle `tri`, return its coordinates
/// in the glued neighbor.
fn mirror_if_on_edge<S: Scalar>(
    surf: &TranslationSurface<S>,
    tri: usize,
    a: &Vec2<S>,
    b: &Vec2<S>,
) -> Option<(usize, Vec2<S>, Vec2<S>)> {
    let t = surf.triangle(tri);
    for e in 0..3 {
        let base = t.corner(e);
        let ev = t.edges[e].clone();
        let ra = a.sub_ref(&base);
        let rb = b.sub_ref(&base);
        if ev.cross_sign(&ra) == 0 && ev.cross_sign(&rb) == 0 {
            let nsq = ev.norm_sq();
            let ua = ra.dot(&ev) / nsq.clone();
            let ub = rb.dot(&ev) / nsq;
            let (t2, e2) = surf.opposite((tri, e));
            let tt = surf.triangle(t2);
            let base2 = tt.corner(e2);
            let one = S::one();
            let map = |u: S| base2.add_ref(&tt.edges[e2].scale(&(one.clone() - u)));
            return Some((t2, map(ua), map(ub)));
        }
    }
    None
}

enum ProbeHit<S> {
    Sc { index: usize, s: S },
    Vertex { corner: Corner, s: S },
    RanOut,
}

/// Trace from (tri, pos) along `dir` until hitting a vertex or crossing a
/// registered obstacle segment; `len_sq_cap` bounds the flow length.
fn probe<S: Scalar>(
    surf: &TranslationSurface<S>,
    obstacles: &Obstacles<S>,
    start_tri: usize,
    start_pos: Vec2<S>,
    dir: &Vec2<S>,
    len_sq_cap: &S,
    budget: &mut BudgetCounter,
) -> Result<ProbeHit<S>, TrajectoryError> {
    let Some((mut tri, mut pos)) = side_of_point(surf, start_tri, &start_pos, dir) else {
        return Ok(ProbeHit::RanOut);
    };
    let mut s_acc = S::zero();
    let dn = dir.norm_sq();
    let too_long = |s: &S| s.clone() * s.clone() * dn.clone() > *len_sq_cap;
    loop {
        budget.tick()?;
        let advanced = step(surf, tri, &pos, dir)?;
        let s_step = match &advanced {
            Step::Vertex { s, .. } => s.clone(),
            Step::Edge { s, .. } => s.clone(),
        };
        // Earliest obstacle intersection within this triangle.
        let mut best: Option<(usize, S)> = None;
        for (idx, a, b) in &obstacles.by_tri[tri] {
            let e = b.sub_ref(a);
            let denom = dir.cross(&e);
            if denom.is_zero() {
                continue; // parallel to the probe; overlap means grazing
            }
            let rel = a.sub_ref(&pos);
            let s = rel.cross(&e) / denom.clone();
            let u = rel.cross(dir) / denom.clone();
            let one = S::one();
            let s_pos = s.sign_scaled(&(s_step.clone() + one.clone())) > 0;
            let in_seg = u.sign_scaled(&one) >= 0 && (one - u.clone()).sign_scaled(&S::one()) >= 0;
            let before_exit = s <= s_step;
            if s_pos && in_seg && before_exit {
                if best.as_ref().is_none_or(|(_, s0)| s < *s0) {
                    best = Some((*idx, s));
                }
            }
        }
        if let Some((idx, s)) = best {
            let s_total = s_acc + s;
            if too_long(&s_total) {
                return Ok(ProbeHit::RanOut);
            }
            return Ok(ProbeHit::Sc { index: idx, s: s_total });
        }
        match advanced {
            Step::Vertex { corner, s } => {
                let s_total = s_acc + s;
                if too_long(&s_total) {
                    return Ok(ProbeHit::RanOut);
                }
                return Ok(ProbeHit::Vertex { corner: (tri, corner), s: s_total });
            }
            Step::Edge { slot, s, u } => {
                let s_total = s_acc.clone() + s;
                if too_long(&s_total) {
                    return Ok(ProbeHit::RanOut);
                }
                let (t2, p2) = transfer(surf, tri, slot, &u);
                tri = t2;
                pos = p2;
                s_acc = s_total;
            }
        }
    }
}

/// Advance (tri, pos) along dir by exactly ray parameter `s_target`,
/// failing on a vertex hit strictly before the target.
fn walk_to_param<S: Scalar>(
    surf: &TranslationSurface<S>,
    start_tri: usize,
    start_pos: Vec2<S>,
    dir: &Vec2<S>,
    s_target: &S,
    budget: &mut BudgetCounter,
) -> Result<Option<(usize, Vec2<S>)>, TrajectoryError> {
    let Some((mut tri, mut pos)) = side_of_point(surf, start_tri, &start_pos, dir) else {
        return Ok(None);
    };
    let mut s_acc = S::zero();
    loop {
        budget.tick()?;
        match step(surf, tri, &pos, dir)? {
            Step::Vertex { s, .. } => {
                let reached = s_acc.clone() + s;
                if reached < *s_target {
                    return Ok(None); // hit a cone point en route
                }
                let rest = s_target.clone() - s_acc;
                return Ok(Some((tri, pos.add_ref(&dir.scale(&rest)))));
            }
            Step::Edge { slot, s, u } => {
                let reached = s_acc.clone() + s.clone();
                if reached >= *s_target {
                    let rest = s_target.clone() - s_acc;
                    return Ok(Some((tri, pos.add_ref(&dir.scale(&rest)))));
                }
                let (t2, p2) = transfer(surf, tri, slot, &u);
                tri = t2;
                pos = p2;
                s_acc = reached;
            }
        }
    }
}

/// Are (t1, p1) and (t2, p2) the same point of the surface? Points on a
/// glued edge are compared across the gluing.
fn same_surface_point<S: Scalar>(
    surf: &TranslationSurface<S>,
    t1: usize,
    p1: &Vec2<S>,
    t2: usize,
    p2: &Vec2<S>,
) -> bool {
    let close = |a: &Vec2<S>, b: &Vec2<S>| {
        let d = a.sub_ref(b);
        if S::EXACT {
            d.is_zero()
        } else {
            d.norm() <= crate::scalar::FLOAT_REL_TOL * (1.0 + a.norm())
        }
    };
    if t1 == t2 && close(p1, p2) {
        return true;
    }
    let t = surf.triangle(t1);
    for e in 0..3 {
        let base = t.corner(e);
        let ev = t.edges[e].clone();
        let rel = p1.sub_ref(&base);
        if ev.cross_sign(&rel) != 0 {
            continue;
        }
        let u = rel.dot(&ev) / ev.norm_sq();
        let (tn, en) = surf.opposite((t1, e));
        if tn != t2 {
            continue;
        }
        let tt = surf.triangle(tn);
        let one = S::one();
        let mapped = tt.corner(en).add_ref(&tt.edges[en].scale(&(one - u)));
        if close(&mapped, p2) {
            return true;
        }
    }
    false
}

/// All cylinders in direction `dir` with waist <= sqrt(waist_sq_max).
pub fn decompose_direction<S: Scalar>(
    surf: &TranslationSurface<S>,
    dir: &Vec2<S>,
    waist_sq_max: &S,
    budget: &TraceBudget,
) -> Result<DirectionDecomposition<S>, TrajectoryError> {
    if dir.is_zero() {
        return Err(TrajectoryError::ZeroDirection);
    }
    let mut counter = BudgetCounter::new(budget);
    let mut incomplete = false;

    // 1. Trace every outgoing separatrix of direction `dir`.
    let mut parallel: Vec<ParallelSc<S>> = Vec::new();
    let mut germ_to_sc: BTreeMap<Corner, usize> = BTreeMap::new();
    for v in 0..surf.num_vertices() {
        for &(t, k) in surf.corners_of_vertex(v) {
            let out = surf.triangle(t).edges[k].clone();
            let inn = -surf.triangle(t).edges[(k + 2) % 3].clone();
            if !crate::surface::sector_contains_incl_excl(&out, &inn, dir) {
                continue;
            }
            let start_pos = surf.triangle(t).corner(k);
            let mut segments = Vec::new();
            match trace_to_vertex(
                surf,
                t,
                start_pos,
                dir,
                waist_sq_max,
                &mut counter,
                Some(&mut segments),
            )? {
                Terminal::RanOut => incomplete = true,
                Terminal::Vertex { corner, s_total } => {
                    let idx = parallel.len();
                    germ_to_sc.insert((t, k), idx);
                    parallel.push(ParallelSc {
                        holonomy: dir.scale(&s_total),
                        start: v,
                        end: surf.vertex_of_corner(corner),
                        s_len: s_total,
                        germ: (t, k),
                        arrival: corner,
                        segments,
                    });
                }
            }
        }
    }

    // 2. Boundary chains. Traversing a bottom boundary (cylinder on the
    // left), the continuation at each vertex is the first germ of `dir`
    // reached clockwise from the reversed arrival ray; for top boundaries
    // (cylinder on the right) it is the counterclockwise one.
    let back = -dir.clone();
    let successor = |sc: &ParallelSc<S>, ccw: bool| -> Option<usize> {
        let v = sc.end;
        let germ = rotate_to_germ(surf, v, sc.arrival, &back, dir, ccw);
        germ_to_sc.get(&germ).copied()
    };
    let left_next: Vec<Option<usize>> =
        parallel.iter().map(|sc| successor(sc, false)).collect();
    let right_next: Vec<Option<usize>> =
        parallel.iter().map(|sc| successor(sc, true)).collect();

    let chains_of = |next: &[Option<usize>]| -> (Vec<Vec<usize>>, Vec<Option<usize>>) {
        let n = next.len();
        let mut chain_id = vec![None; n];
        let mut chains = Vec::new();
        for s0 in 0..n {
            if chain_id[s0].is_some() {
                continue;
            }
            // Walk forward; collect the cycle if it returns to s0.
            let mut seen = vec![s0];
            let mut cur = s0;
            let cycle = loop {
                match next[cur] {
                    None => break None,
                    Some(nx) => {
                        if nx == s0 {
                            break Some(seen.clone());
                        }
                        if chain_id[nx].is_some() || seen.contains(&nx) {
                            break None;
                        }
                        seen.push(nx);
                        cur = nx;
                    }
                }
            };
            if let Some(cycle) = cycle {
                let id = chains.len();
                for &s in &cycle {
                    chain_id[s] = Some(id);
                }
                chains.push(cycle);
            }
        }
        (chains, chain_id)
    };
    let (left_chains, left_chain_of) = chains_of(&left_next);
    let (right_chains, right_chain_of) = chains_of(&right_next);

    // 3. Certify cylinders. The perpendicular to `dir` on the cylinder side
    // of a bottom chain is the left normal.
    let normal = Vec2::new(-dir.y.clone(), dir.x.clone());
    let obstacles = Obstacles::build(surf, &parallel);
    let area_total = surf.area();
    let mut cylinders: Vec<Cylinder<S>> = Vec::new();
    let mut seen_bottom: BTreeMap<usize, usize> = BTreeMap::new(); // left chain -> cylinder idx

    for chain in &left_chains {
        let total_s = chain
            .iter()
            .fold(S::zero(), |acc, &i| acc + parallel[i].s_len.clone());
        let waist_sq = total_s.clone() * total_s.clone() * dir.norm_sq();
        if waist_sq > *waist_sq_max {
            continue;
        }
        // Probe start: midpoint of the first traced segment of the first SC.
        let sc0 = &parallel[chain[0]];
        let Some((seg_tri, seg_a, _, seg_b)) = sc0.segments.first().cloned() else {
            continue;
        };
        let half = S::one() / S::from_i64(2);
        let mid = seg_a.add_ref(&seg_b.sub_ref(&seg_a).scale(&half));
        let Some((ptri, ppos)) = side_of_point(surf, seg_tri, &mid, &normal) else {
            continue;
        };
        // Height cap: h <= area / waist, i.e. h^2 <= area^2 / waist^2.
        let cap = area_total.clone() * area_total.clone() / waist_sq.clone();
        let hit = probe(surf, &obstacles, ptri, ppos.clone(), &normal, &cap, &mut counter)?;
        let s_h = match hit {
            ProbeHit::Sc { s, .. } | ProbeHit::Vertex { s, .. } => s,
            ProbeHit::RanOut => continue,
        };
        // Interior point halfway up, then the leaf-closure certificate.
        let s_mid = s_h.clone() * half.clone();
        let Some((ltri, lpos)) =
            walk_to_param(surf, ptri, ppos.clone(), &normal, &s_mid, &mut counter)?
        else {
            continue;
        };
        let Some((etri, epos)) =
            walk_to_param(surf, ltri, lpos.clone(), dir, &total_s, &mut counter)?
        else {
            continue;
        };
        if !same_surface_point(surf, etri, &epos, ltri, &lpos) {
            continue;
        }
        // True heights and boundaries from the certified interior point.
        let down = -normal.clone();
        let cap_h = cap.clone();
        let d_hit = probe(surf, &obstacles, ltri, lpos.clone(), &down, &cap_h, &mut counter)?;
        let u_hit = probe(surf, &obstacles, ltri, lpos.clone(), &normal, &cap_h, &mut counter)?;
        let (bottom_chain, s_down) = match d_hit {
            ProbeHit::Sc { index, s } => match left_chain_of[index] {
                Some(c) => (c, s),
                None => continue,
            },
            ProbeHit::Vertex { corner, s } => {
                // Bottom boundary germ: first `dir` germ clockwise from the
                // reversed probe ray (+normal).
                let v = surf.vertex_of_corner(corner);
                let germ = rotate_to_germ(surf, v, corner, &normal, dir, false);
                match germ_to_sc.get(&germ).and_then(|&i| left_chain_of[i]) {
                    Some(c) => (c, s),
                    None => continue,
                }
            }
            ProbeHit::RanOut => continue,
        };
        let (top_chain, s_up) = match u_hit {
            ProbeHit::Sc { index, s } => match right_chain_of[index] {
                Some(c) => (c, s),
                None => continue,
            },
            ProbeHit::Vertex { corner, s } => {
                let v = surf.vertex_of_corner(corner);
                let germ = rotate_to_germ(surf, v, corner, &down, dir, true);
                match germ_to_sc.get(&germ).and_then(|&i| right_chain_of[i]) {
                    Some(c) => (c, s),
                    None => continue,
                }
            }
            ProbeHit::RanOut => continue,
        };
        // Waist of the certified cylinder comes from its own bottom chain.
        let bottom_s: S = left_chains[bottom_chain]
            .iter()
            .fold(S::zero(), |acc, &i| acc + parallel[i].s_len.clone());
        let w_sq = bottom_s.clone() * bottom_s.clone() * dir.norm_sq();
        if w_sq > *waist_sq_max {
            continue;
        }
        let s_height = s_down + s_up;
        let height_sq = s_height.clone() * s_height.clone() * dir.norm_sq();
        let area = bottom_s.clone() * s_height * dir.norm_sq();
        if area > area_total {
            continue;
        }
        let core = dir.scale(&bottom_s);
        let cyl = Cylinder {
            core,
            waist_sq: w_sq,
            height_sq,
            area,
            boundary: [
                left_chains[bottom_chain].clone(),
                right_chains[top_chain].clone(),
            ],
        };
        match seen_bottom.get(&bottom_chain) {
            Some(&at) => {
                if cyl.waist_sq < cylinders[at].waist_sq {
                    cylinders[at] = cyl;
                }
            }
            None => {
                seen_bottom.insert(bottom_chain, cylinders.len());
                cylinders.push(cyl);
            }
        }
    }

    cylinders.sort_by(|a, b| {
        a.waist_sq
            .partial_cmp(&b.waist_sq)
            .unwrap_or(std::cmp::Ordering::Equal)
            .then_with(|| a.boundary[0].cmp(&b.boundary[0]))
    });
    Ok(DirectionDecomposition {
        direction: dir.clone(),
        parallel,
        cylinders,
        incomplete,
    })
}

/// If `pos` lies on an edge of `tri` and `dir` points out of `tri`, move the
/// point into the glued neighbor; otherwise keep it. Returns None when the
/// point sits on a vertex.
fn side_of_point<S: Scalar>(
    surf: &TranslationSurface<S>,
    tri: usize,
    pos: &Vec2<S>,
    dir: &Vec2<S>,
) -> Option<(usize, Vec2<S>)> {
    let t = surf.triangle(tri);
    for e in 0..3 {
        let base = t.corner(e);
        let ev = t.edges[e].clone();
        let rel = pos.sub_ref(&base);
        if ev.cross_sign(&rel) != 0 {
            continue;
        }
        let u = rel.dot(&ev) / ev.norm_sq();
        let one = S::one();
        if u.sign_scaled(&one) <= 0 || (one.clone() - u.clone()).sign_scaled(&one) <= 0 {
            return None; // at a vertex
        }
        if ev.cross_sign(dir) >= 0 {
            // Interior of `tri` is on the left of the edge; dir points in.
            return Some((tri, pos.clone()));
        }
        let (t2, e2) = surf.opposite((tri, e));
        let tt = surf.triangle(t2);
        let mapped = tt.corner(e2).add_ref(&tt.edges[e2].scale(&(one - u)));
        return Some((t2, mapped));
    }
    Some((tri, pos.clone()))
}

/// Union over all saddle-connection directions of length <= L of the
/// direction's cylinders of waist <= L. Directions are unoriented.
pub fn cylinders_up_to<S: Scalar>(
    surf: &TranslationSurface<S>,
    len_sq_max: &S,
    budget: &TraceBudget,
) -> Result<Vec<Cylinder<S>>, TrajectoryError> {
    let scs = enumerate_holonomies(surf, len_sq_max, budget)?;
    let dirs = unoriented_directions(&scs.iter().map(|s| s.holonomy.clone()).collect::<Vec<_>>());
    let mut out = Vec::new();
    for d in dirs {
        let dec = decompose_direction(surf, &d, len_sq_max, budget)?;
        out.extend(dec.cylinders);
    }
    out.sort_by(|a, b| {
        a.waist_sq
            .partial_cmp(&b.waist_sq)
            .unwrap_or(std::cmp::Ordering::Equal)
            .then_with(|| {
                a.core
                    .x
                    .partial_cmp(&b.core.x)
                    .unwrap_or(std::cmp::Ordering::Equal)
            })
            .then_with(|| {
                a.core
                    .y
                    .partial_cmp(&b.core.y)
                    .unwrap_or(std::cmp::Ordering::Equal)
            })
    });
    Ok(out)
}

/// Canonical unoriented direction representatives, parallel ones merged.
pub(crate) fn unoriented_directions<S: Scalar>(holonomies: &[Vec2<S>]) -> Vec<Vec2<S>> {
    let mut canon: Vec<Vec2<S>> = Vec::new();
    for h in holonomies {
        let mut v = h.clone();
        // Flip to y > 0, or y == 0 and x > 0.
        let ys = v.y.sign();
        if ys < 0 || (ys == 0 && v.x.sign() < 0) {
            v = -v;
        }
        canon.push(v);
    }
    canon.sort_by(|a, b| {
        let aa = a.to_f64();
        let bb = b.to_f64();
        aa.y.atan2(aa.x)
            .partial_cmp(&bb.y.atan2(bb.x))
            .unwrap_or(std::cmp::Ordering::Equal)
    });
    let mut out: Vec<Vec2<S>> = Vec::new();
    for v in canon {
        if out.last().map(|w| w.parallel(&v)).unwrap_or(false) {
            continue;
        }
        out.push(v);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::loci;
    use crate::scalar::Rat;

    fn rat(n: i64) -> Rat {
        Scalar::from_i64(n)
    }

    fn rv(x: i64, y: i64) -> Vec2<Rat> {
        Vec2::new(rat(x), rat(y))
    }

    #[test]
    fn torus_horizontal_cylinder() {
        let s = loci::builtin("torus").unwrap();
        let dec = decompose_direction(&s, &rv(1, 0), &rat(4), &TraceBudget::default()).unwrap();
        assert!(!dec.incomplete);
        assert_eq!(dec.cylinders.len(), 1);
        let c = &dec.cylinders[0];
        assert_eq!(c.waist_sq, rat(1));
        assert_eq!(c.height_sq, rat(1));
        assert_eq!(c.area, rat(1));
    }

    #[test]
    fn torus_diagonal_cylinder() {
        let s = loci::builtin("torus").unwrap();
        let dec = decompose_direction(&s, &rv(1, 1), &rat(4), &TraceBudget::default()).unwrap();
        assert_eq!(dec.cylinders.len(), 1);
        let c = &dec.cylinders[0];
        // w = sqrt(2), h = 1/sqrt(2), area 1.
        assert_eq!(c.waist_sq, rat(2));
        assert_eq!(c.height_sq, Rat::new(1.into(), 2.into()));
        assert_eq!(c.area, rat(1));
    }

    #[test]
    fn l3_horizontal_two_cylinders() {
        let s = loci::builtin("L3").unwrap();
        let dec = decompose_direction(&s, &rv(1, 0), &rat(100), &TraceBudget::default()).unwrap();
        assert!(!dec.incomplete);
        let mut dims: Vec<(i64, i64)> = dec
            .cylinders
            .iter()
            .map(|c| {
                (
                    c.waist_sq.to_f64().round() as i64,
                    c.height_sq.to_f64().round() as i64,
                )
            })
            .collect();
        dims.sort();
        // {w=1,h=1} and {w=2,h=1}: squared (1,1) and (4,1).
        assert_eq!(dims, vec![(1, 1), (4, 1)]);
        let total_area: Rat = dec
            .cylinders
            .iter()
            .fold(<Rat as Scalar>::zero(), |a, c| a + c.area.clone());
        assert_eq!(total_area, rat(3), "complete periodic direction fills the surface");
    }

    #[test]
    fn torus_cylinders_up_to_are_primitive_directions() {
        let s = loci::builtin("torus").unwrap();
        let cyls = cylinders_up_to(&s, &Rat::new(25.into(), 4.into()), &TraceBudget::default())
            .unwrap();
        // Unoriented primitive directions of norm <= 2.5:
        // (1,0),(0,1),(1,1),(1,-1),(2,1),(1,2),(-2,1),(-1,2) -> 8 cylinders.
        assert_eq!(cyls.len(), 8);
        for c in &cyls {
            assert_eq!(c.area, rat(1), "every torus cylinder fills the torus");
        }
        let mut waists: Vec<i64> = cyls.iter().map(|c| c.waist_sq.to_f64() as i64).collect();
        waists.sort();
        assert_eq!(waists, vec![1, 1, 2, 2, 5, 5, 5, 5]);
    }

    #[test]
    fn below_systole_no_cylinders() {
        let s = loci::builtin("L3").unwrap();
        let cyls =
            cylinders_up_to(&s, &Rat::new(1.into(), 2.into()), &TraceBudget::default()).unwrap();
        assert!(cyls.is_empty());
    }

    #[test]
    fn boundary_lengths_equal_waist() {
        let s = loci::builtin("L3").unwrap();
        for d in [rv(1, 0), rv(0, 1), rv(1, 1), rv(2, 1)] {
            let dec = decompose_direction(&s, &d, &rat(400), &TraceBudget::default()).unwrap();
            for c in &dec.cylinders {
                for side in &c.boundary {
                    let len: Rat = side
                        .iter()
                        .fold(<Rat as Scalar>::zero(), |a, &i| {
                            a + dec.parallel[i].s_len.clone()
                        });
                    let len_sq = len.clone() * len * d.norm_sq();
                    assert_eq!(len_sq, c.waist_sq, "boundary side length equals waist");
                }
            }
        }
    }
}

#[cfg(test)]
mod debug_scratch {
    use super::*;
    use crate::loci;
    use crate::scalar::Rat;

    #[test]
    fn debug_torus_horizontal() {
        let s = loci::builtin("torus").unwrap();
        let d: Vec2<Rat> = Vec2::new(Scalar::from_i64(1), Scalar::from_i64(0));
        let wmax: Rat = Scalar::from_i64(4);
        let mut counter = BudgetCounter::new(&TraceBudget::default());
        let mut parallel: Vec<(Corner, Corner, Rat)> = Vec::new();
        for v in 0..s.num_vertices() {
            for &(t, k) in s.corners_of_vertex(v) {
                let out = s.triangle(t).edges[k].clone();
                let inn = -s.triangle(t).edges[(k + 2) % 3].clone();
                if !crate::surface::sector_contains_incl_excl(&out, &inn, &d) {
                    continue;
                }
                let start_pos = s.triangle(t).corner(k);
                let mut segs = Vec::new();
                match trace_to_vertex(&s, t, start_pos, &d, &wmax, &mut counter, Some(&mut segs)) {
                    Ok(Terminal::Vertex { corner, s_total }) => {
                        eprintln!("germ ({t},{k}) closes at {corner:?} s={s_total:?} segs={}", segs.len());
                        parallel.push(((t, k), corner, s_total));
                    }
                    Ok(Terminal::RanOut) => eprintln!("germ ({t},{k}) ran out"),
                    Err(e) => eprintln!("germ ({t},{k}) error {e:?}"),
                }
            }
        }
        let back = -d.clone();
        for (germ, arrival, _) in &parallel {
            let v = s.vertex_of_corner(*arrival);
            let left = rotate_to_germ(&s, v, *arrival, &back, &d, false);
            let right = rotate_to_germ(&s, v, *arrival, &back, &d, true);
            eprintln!("sc germ {germ:?} arrival {arrival:?} left_next_germ {left:?} right_next_germ {right:?}");
        }
        let dec = decompose_direction(&s, &d, &wmax, &TraceBudget::default());
        eprintln!("decompose result: {:?}", dec.map(|d| d.cylinders.len()));
    }
}
