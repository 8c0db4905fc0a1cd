//! Immutable triangulated translation surfaces.
//!
//! A surface is a list of positively oriented triangles, each given by its
//! three edge vectors (summing to zero), together with a fixed-point-free
//! involution pairing edge slots. Paired edges carry opposite vectors, so
//! all gluings are translations. Surfaces are immutable after construction
//! and every operation here is pure.

use crate::scalar::{Rat, Scalar, Vec2, FLOAT_REL_TOL};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use thiserror::Error;

/// Identifies one edge slot: (triangle index, edge index 0..3).
/// Edge `e` of triangle `t` runs from local corner `e` to corner `(e+1)%3`.
pub type Slot = (usize, usize);

#[derive(Debug, Error, PartialEq)]
pub enum SurfaceError {
    #[error("triangle {0}: edge vectors do not sum to zero")]
    NonClosedTriangle(usize),
    #[error("gluing is not a fixed-point-free involution on valid slots: {0}")]
    GluingNotInvolution(String),
    #[error("glued slots ({0},{1}) <-> ({2},{3}) do not carry opposite edge vectors")]
    MismatchedEdgeVectors(usize, usize, usize, usize),
    #[error("triangle {0} is degenerate (non-positive area)")]
    DegenerateTriangle(usize),
    #[error("cone angle at a vertex is not a multiple of 2π (relative error {0:.3e})")]
    AngleNotMultipleOf2Pi(f64),
    #[error("matrix is singular")]
    SingularMatrix,
}

/// A triangle stored as three edge vectors e0, e1, e2 with e0+e1+e2 = 0.
/// Local corner positions are V0 = 0, V1 = e0, V2 = e0+e1.
#[derive(Clone, Debug)]
pub struct Triangle<S> {
    pub edges: [Vec2<S>; 3],
}

impl<S: Scalar> Triangle<S> {
    /// Local position of corner `k` (k = 0,1,2).
    pub fn corner(&self, k: usize) -> Vec2<S> {
        match k {
            0 => Vec2::zero(),
            1 => self.edges[0].clone(),
            2 => self.edges[0].add_ref(&self.edges[1]),
            _ => panic!("corner index out of range"),
        }
    }

    /// Twice the signed area.
    pub fn double_area(&self) -> S {
        self.edges[0].cross(&self.edges[1])
    }
}

/// One corner of one triangle, identified by (triangle, corner index).
pub type Corner = (usize, usize);

/// A triangulated translation surface.
///
/// `vertex_class[t][k]` gives the identified vertex of corner `k` of
/// triangle `t`; `cone_turns[v]` is the cone angle at vertex `v` in units
/// of 2π (so a regular marked point has `cone_turns = 1`).
#[derive(Clone, Debug)]
pub struct TranslationSurface<S> {
    triangles: Vec<Triangle<S>>,
    gluing: BTreeMap<Slot, Slot>,
    vertex_class: Vec<[usize; 3]>,
    cone_turns: Vec<usize>,
    /// Corners around each vertex in counterclockwise order.
    vertex_corners: Vec<Vec<Corner>>,
    labels: Vec<Option<String>>,
}

/// Stratum signature: zero orders and the derived genus.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StratumSignature {
    /// Orders m_i >= 0, sorted descending.
    pub orders: Vec<usize>,
    pub genus: usize,
}

impl StratumSignature {
    /// kappa_mu = sum m_i (m_i + 2) / (m_i + 1), as an exact rational.
    pub fn kappa_mu(&self) -> Rat {
        let mut k = <Rat as Scalar>::zero();
        for &m in &self.orders {
            let m = m as i64;
            k = k + Rat::new((m * (m + 2)).into(), (m + 1).into());
        }
        k
    }
}

impl<S: Scalar> TranslationSurface<S> {
    /// Build and validate a surface from edge-vector triangles and a slot
    /// pairing. The pairing is given as a list of slot pairs covering every
    /// slot exactly once. Uses the default cone-angle tolerance.
    pub fn build(
        triangles: Vec<[Vec2<S>; 3]>,
        pairs: &[(Slot, Slot)],
    ) -> Result<Self, SurfaceError> {
        Self::build_with_tolerance(triangles, pairs, FLOAT_REL_TOL)
    }

    /// As [`build`](Self::build) with an explicit relative tolerance for the
    /// float-only cone-angle consistency check. Gluing combinatorics, not
    /// float sums, determine the cone points; the tolerance only guards
    /// against corrupt input.
    pub fn build_with_tolerance(
        triangles: Vec<[Vec2<S>; 3]>,
        pairs: &[(Slot, Slot)],
        angle_tol: f64,
    ) -> Result<Self, SurfaceError> {
        let triangles: Vec<Triangle<S>> = triangles
            .into_iter()
            .map(|edges| Triangle { edges })
            .collect();

        for (t, tri) in triangles.iter().enumerate() {
            let sum = tri.edges[0].add_ref(&tri.edges[1]).add_ref(&tri.edges[2]);
            let scale = tri.edges[0].norm_sq().to_f64().sqrt()
                + tri.edges[1].norm_sq().to_f64().sqrt();
            let closed = if S::EXACT {
                sum.is_zero()
            } else {
                sum.norm() <= FLOAT_REL_TOL * scale.max(f64::MIN_POSITIVE)
            };
            if !closed {
                return Err(SurfaceError::NonClosedTriangle(t));
            }
            if tri.double_area().sign() <= 0 {
                return Err(SurfaceError::DegenerateTriangle(t));
            }
        }

        let n = triangles.len();
        let valid = |s: Slot| s.0 < n && s.1 < 3;
        let mut gluing: BTreeMap<Slot, Slot> = BTreeMap::new();
        for &(a, b) in pairs {
            if !valid(a) || !valid(b) {
                return Err(SurfaceError::GluingNotInvolution(format!(
                    "slot out of range in pair {a:?} <-> {b:?}"
                )));
            }
            if a == b {
                return Err(SurfaceError::GluingNotInvolution(format!(
                    "slot {a:?} glued to itself"
                )));
            }
            if gluing.insert(a, b).is_some() || gluing.insert(b, a).is_some() {
                return Err(SurfaceError::GluingNotInvolution(format!(
                    "slot in pair {a:?} <-> {b:?} appears twice"
                )));
            }
        }
        if gluing.len() != 3 * n {
            return Err(SurfaceError::GluingNotInvolution(format!(
                "pairing covers {} of {} slots",
                gluing.len(),
                3 * n
            )));
        }

        for (&(t, e), &(t2, e2)) in &gluing {
            let v = &triangles[t].edges[e];
            let w = &triangles[t2].edges[e2];
            let sum = v.add_ref(w);
            let ok = if S::EXACT {
                sum.is_zero()
            } else {
                sum.norm() <= FLOAT_REL_TOL * v.norm().max(f64::MIN_POSITIVE)
            };
            if !ok {
                return Err(SurfaceError::MismatchedEdgeVectors(t, e, t2, e2));
            }
        }

        let mut surface = TranslationSurface {
            labels: vec![],
            vertex_class: vec![[usize::MAX; 3]; n],
            cone_turns: vec![],
            vertex_corners: vec![],
            triangles,
            gluing,
        };
        surface.classify_vertices(angle_tol)?;
        surface.labels = vec![None; surface.cone_turns.len()];
        Ok(surface)
    }

    /// Walk corners counterclockwise around each identified vertex, counting
    /// full turns exactly via sign predicates.
    fn classify_vertices(&mut self, angle_tol: f64) -> Result<(), SurfaceError> {
        let n = self.triangles.len();
        let mut seen = vec![[false; 3]; n];
        for t in 0..n {
            for k in 0..3 {
                if seen[t][k] {
                    continue;
                }
                let class = self.cone_turns.len();
                let mut corners = Vec::new();
                // Counterclockwise walk: from corner (t,k), the next corner
                // around the vertex is reached through the edge leaving the
                // corner, i.e. edge k of triangle t.
                let (mut ct, mut ck) = (t, k);
                // Rays bounding each corner: out-edge ray r = edges[ck],
                // in-edge ray r' = -edges[(ck+2)%3]; rotating the out-ray of
                // one corner lands on the out-ray of the next corner.
                let start_ray = self.triangles[t].edges[k].clone();
                let mut turns = 0usize;
                let mut angle_sum = 0.0f64;
                loop {
                    seen[ct][ck] = true;
                    corners.push((ct, ck));
                    let out_ray = self.triangles[ct].edges[ck].clone();
                    let in_ray = -self.triangles[ct].edges[(ck + 2) % 3].clone();
                    angle_sum += corner_angle(&out_ray, &in_ray);
                    // The corner sweeps CCW from out_ray to in_ray (both
                    // rays out of the vertex); count passages of start_ray
                    // through the half-open sector (out_ray, in_ray].
                    if sector_contains_half_open(&out_ray, &in_ray, &start_ray) {
                        turns += 1;
                    }
                    // Cross the in-edge to the neighboring corner.
                    let in_slot = (ct, (ck + 2) % 3);
                    let &(nt, ne) = self.gluing.get(&in_slot).expect("total pairing");
                    ct = nt;
                    ck = ne; // paired edge starts at the same vertex
                    if (ct, ck) == (t, k) {
                        break;
                    }
                }
                if !S::EXACT {
                    let expected = turns as f64 * std::f64::consts::TAU;
                    let rel = (angle_sum - expected).abs() / expected.max(f64::MIN_POSITIVE);
                    if rel > angle_tol {
                        return Err(SurfaceError::AngleNotMultipleOf2Pi(rel));
                    }
                }
                debug_assert!(turns >= 1);
                for &(a, b) in &corners {
                    self.vertex_class[a][b] = class;
                }
                self.cone_turns.push(turns);
                self.vertex_corners.push(corners);
            }
        }
        Ok(())
    }

    pub fn num_triangles(&self) -> usize {
        self.triangles.len()
    }

    pub fn triangle(&self, t: usize) -> &Triangle<S> {
        &self.triangles[t]
    }

    pub fn triangles(&self) -> &[Triangle<S>] {
        &self.triangles
    }

    /// The slot glued to `s`.
    pub fn opposite(&self, s: Slot) -> Slot {
        self.gluing[&s]
    }

    pub fn gluing_pairs(&self) -> Vec<(Slot, Slot)> {
        self.gluing
            .iter()
            .filter(|(a, b)| a < b)
            .map(|(&a, &b)| (a, b))
            .collect()
    }

    pub fn num_vertices(&self) -> usize {
        self.cone_turns.len()
    }

    pub fn vertex_of_corner(&self, c: Corner) -> usize {
        self.vertex_class[c.0][c.1]
    }

    /// Cone angle at vertex `v` in units of 2π.
    pub fn cone_turns(&self, v: usize) -> usize {
        self.cone_turns[v]
    }

    /// Corners around vertex `v` in counterclockwise order.
    pub fn corners_of_vertex(&self, v: usize) -> &[Corner] {
        &self.vertex_corners[v]
    }

    pub fn labels(&self) -> &[Option<String>] {
        &self.labels
    }

    pub fn set_label(&mut self, v: usize, label: impl Into<String>) {
        self.labels[v] = Some(label.into());
    }

    /// Total flat area; exact when coordinates are exact.
    pub fn area(&self) -> S {
        let two = S::from_i64(2);
        let mut a = S::zero();
        for tri in &self.triangles {
            a = a + tri.double_area() / two.clone();
        }
        a
    }

    /// Zero orders from cone angles plus genus from the Euler formula.
    pub fn stratum_signature(&self) -> StratumSignature {
        let f = self.triangles.len();
        let e = 3 * f / 2;
        let v = self.num_vertices();
        let chi = v as i64 - e as i64 + f as i64;
        let genus = ((2 - chi) / 2) as usize;
        let mut orders: Vec<usize> = self.cone_turns.iter().map(|&k| k - 1).collect();
        orders.sort_unstable_by(|a, b| b.cmp(a));
        debug_assert_eq!(orders.iter().sum::<usize>() + 2, 2 * genus);
        StratumSignature { orders, genus }
    }

    /// Apply a nonsingular 2x2 matrix [[a,b],[c,d]] to every edge vector.
    /// Orientation-reversing matrices re-orient each triangle (slot k of the
    /// image corresponds to slot 2-k of the source).
    pub fn apply_gl2(&self, m: [[S; 2]; 2]) -> Result<Self, SurfaceError> {
        let det = m[0][0].clone() * m[1][1].clone() - m[0][1].clone() * m[1][0].clone();
        if det.is_zero() {
            return Err(SurfaceError::SingularMatrix);
        }
        let map = |v: &Vec2<S>| {
            Vec2::new(
                m[0][0].clone() * v.x.clone() + m[0][1].clone() * v.y.clone(),
                m[1][0].clone() * v.x.clone() + m[1][1].clone() * v.y.clone(),
            )
        };
        let flip = det.sign() < 0;
        let tris: Vec<[Vec2<S>; 3]> = self
            .triangles
            .iter()
            .map(|tri| {
                if flip {
                    // Reverse the boundary: (e0,e1,e2) -> (-e2,-e1,-e0).
                    [
                        -map(&tri.edges[2]),
                        -map(&tri.edges[1]),
                        -map(&tri.edges[0]),
                    ]
                } else {
                    [map(&tri.edges[0]), map(&tri.edges[1]), map(&tri.edges[2])]
                }
            })
            .collect();
        let remap = |s: Slot| if flip { (s.0, 2 - s.1) } else { s };
        let pairs: Vec<(Slot, Slot)> = self
            .gluing_pairs()
            .into_iter()
            .map(|(a, b)| (remap(a), remap(b)))
            .collect();
        Self::build(tris, &pairs)
    }
}

/// Angle of the corner spanned counterclockwise from ray `a` to ray `b`,
/// as a float in (0, π). Triangle corners are always in this range.
fn corner_angle<S: Scalar>(a: &Vec2<S>, b: &Vec2<S>) -> f64 {
    let a = a.to_f64();
    let b = b.to_f64();
    let ang = (a.cross(&b)).atan2(a.dot(&b));
    if ang <= 0.0 {
        ang + std::f64::consts::TAU
    } else {
        ang
    }
}

/// Does the counterclockwise sector swept from `a` (exclusive) to `b`
/// (inclusive), of total angle < π, contain direction `d`?
fn sector_contains_half_open<S: Scalar>(a: &Vec2<S>, b: &Vec2<S>, d: &Vec2<S>) -> bool {
    // b is reached from a by a CCW rotation of angle in (0, π):
    // d in (a, b] iff cross(a,d) > 0 and cross(d,b) >= 0 ... with the
    // convention that "d parallel to b" counts and "d parallel to a" does not.
    let ad = a.cross_sign(d);
    let db = d.cross_sign(b);
    let d_on_b = db == 0 && d.dot(b).sign() > 0;
    let d_on_a = ad == 0 && d.dot(a).sign() > 0;
    if d_on_b {
        return true;
    }
    if d_on_a {
        return false;
    }
    ad > 0 && db > 0
}

/// Half-open sector membership for general use by the trajectory tracer:
/// direction `d` lies in the CCW sector from `a` (inclusive) to `b`
/// (exclusive), sector angle in (0, π].
pub(crate) fn sector_contains_incl_excl<S: Scalar>(a: &Vec2<S>, b: &Vec2<S>, d: &Vec2<S>) -> bool {
    let ad = a.cross_sign(d);
    let db = d.cross_sign(b);
    let d_on_a = ad == 0 && d.dot(a).sign() > 0;
    let d_on_b = db == 0 && d.dot(b).sign() > 0;
    if d_on_a {
        return true;
    }
    if d_on_b {
        return false;
    }
    ad > 0 && db > 0
}

/// Ear-clip a simple polygon (given by edge vectors summing to zero, positive
/// orientation) into triangles. Returns the triangles as local edge-vector
/// triples plus, for each input polygon edge index, the slot it became, and
/// the internal diagonal pairs.
///
/// Collinear (straight-angle) vertices are kept as triangulation vertices but
/// never clipped as degenerate ears.
pub fn ear_clip<S: Scalar>(
    edges: &[Vec2<S>],
) -> Option<(Vec<[Vec2<S>; 3]>, Vec<Slot>, Vec<(Slot, Slot)>)> {
    let n = edges.len();
    if n < 3 {
        return None;
    }
    // Vertex positions.
    let mut pos: Vec<Vec2<S>> = Vec::with_capacity(n);
    let mut p = Vec2::zero();
    for e in edges {
        pos.push(p.clone());
        p = p.add_ref(e);
    }
    if S::EXACT {
        if !p.is_zero() {
            return None;
        }
    } else if p.norm() > FLOAT_REL_TOL {
        return None;
    }

    // Indices into `pos` of the remaining polygon, plus which original edge
    // follows each remaining vertex is implicit: boundary side from remaining
    // vertex i to the next remaining vertex is an original edge only while
    // both are original neighbors; we track boundary sides explicitly.
    #[derive(Clone)]
    enum Side {
        Orig(usize),
        Diag(usize, usize), // (triangle, edge) slot of the twin already emitted
    }
    let mut ring: Vec<usize> = (0..n).collect();
    let mut sides: Vec<Side> = (0..n).map(Side::Orig).collect(); // side after ring[i]
    let mut tris: Vec<[Vec2<S>; 3]> = Vec::new();
    let mut orig_slots: Vec<Option<Slot>> = vec![None; n];
    let mut diag_pairs: Vec<(Slot, Slot)> = Vec::new();

    let mut guard = 0usize;
    while ring.len() > 3 {
        guard += 1;
        if guard > n * n + 10 {
            return None; // not a simple polygon
        }
        let m = ring.len();
        let mut clipped = false;
        for i in 0..m {
            let ia = ring[(i + m - 1) % m];
            let ib = ring[i];
            let ic = ring[(i + 1) % m];
            let ab = pos[ib].sub_ref(&pos[ia]);
            let bc = pos[ic].sub_ref(&pos[ib]);
            if ab.cross_sign(&bc) <= 0 {
                continue; // reflex or straight vertex, not an ear
            }
            // No other remaining vertex may lie inside triangle (a,b,c).
            let ca = pos[ia].sub_ref(&pos[ic]);
            let mut blocked = false;
            for &j in &ring {
                if j == ia || j == ib || j == ic {
                    continue;
                }
                let q = &pos[j];
                let s1 = ab.cross_sign(&q.sub_ref(&pos[ia]));
                let s2 = bc.cross_sign(&q.sub_ref(&pos[ib]));
                let s3 = ca.cross_sign(&q.sub_ref(&pos[ic]));
                if s1 >= 0 && s2 >= 0 && s3 >= 0 {
                    blocked = true;
                    break;
                }
            }
            if blocked {
                continue;
            }
            // Clip ear (ia, ib, ic): triangle edges ab, bc, ca.
            let t = tris.len();
            tris.push([ab.clone(), bc.clone(), ca.clone()]);
            let prev_side = sides[(i + m - 1) % m].clone();
            let this_side = sides[i].clone();
            match prev_side {
                Side::Orig(e) => orig_slots[e] = Some((t, 0)),
                Side::Diag(tt, ee) => diag_pairs.push(((tt, ee), (t, 0))),
            }
            match this_side {
                Side::Orig(e) => orig_slots[e] = Some((t, 1)),
                Side::Diag(tt, ee) => diag_pairs.push(((tt, ee), (t, 1))),
            }
            // Replace sides (a->b, b->c) with the diagonal a->c, twin (t,2).
            sides[(i + m - 1) % m] = Side::Diag(t, 2);
            ring.remove(i);
            sides.remove(i);
            clipped = true;
            break;
        }
        if !clipped {
            return None;
        }
    }
    // Final triangle.
    let (ia, ib, ic) = (ring[0], ring[1], ring[2]);
    let ab = pos[ib].sub_ref(&pos[ia]);
    let bc = pos[ic].sub_ref(&pos[ib]);
    let ca = pos[ia].sub_ref(&pos[ic]);
    if ab.cross_sign(&bc) <= 0 {
        return None;
    }
    let t = tris.len();
    tris.push([ab, bc, ca]);
    for (k, side) in sides.iter().enumerate() {
        match side.clone() {
            Side::Orig(e) => orig_slots[e] = Some((t, k)),
            Side::Diag(tt, ee) => diag_pairs.push(((tt, ee), (t, k))),
        }
    }
    let orig: Option<Vec<Slot>> = orig_slots.into_iter().collect();
    Some((tris, orig?, diag_pairs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::parse_rat;

    fn rv(x: i64, y: i64) -> Vec2<Rat> {
        Vec2::new(Scalar::from_i64(x), Scalar::from_i64(y))
    }

    /// Unit square torus from two triangles.
    pub(crate) fn torus_rat() -> TranslationSurface<Rat> {
        let t0 = [rv(1, 0), rv(0, 1), rv(-1, -1)];
        let t1 = [rv(-1, 0), rv(0, -1), rv(1, 1)];
        TranslationSurface::build(
            vec![t0, t1],
            &[(((0, 0)), ((1, 0))), (((0, 1)), ((1, 1))), (((0, 2)), ((1, 2)))],
        )
        .unwrap()
    }

    #[test]
    fn torus_is_genus_one_with_one_marked_point() {
        let s = torus_rat();
        assert_eq!(s.num_vertices(), 1);
        assert_eq!(s.cone_turns(0), 1);
        let sig = s.stratum_signature();
        assert_eq!(sig, StratumSignature { orders: vec![0], genus: 1 });
        assert_eq!(s.area(), Scalar::from_i64(1));
        assert_eq!(sig.kappa_mu(), <Rat as Scalar>::zero());
    }

    #[test]
    fn non_closed_triangle_is_rejected() {
        let t0 = [rv(1, 0), rv(0, 1), rv(-1, 0)];
        let r = TranslationSurface::build(vec![t0], &[]);
        assert_eq!(r.unwrap_err(), SurfaceError::NonClosedTriangle(0));
    }

    #[test]
    fn degenerate_triangle_is_rejected() {
        let t0 = [rv(1, 0), rv(1, 0), rv(-2, 0)];
        let r = TranslationSurface::build(vec![t0], &[]);
        assert_eq!(r.unwrap_err(), SurfaceError::DegenerateTriangle(0));
    }

    #[test]
    fn bad_gluings_are_rejected() {
        let t0 = [rv(1, 0), rv(0, 1), rv(-1, -1)];
        let t1 = [rv(-1, 0), rv(0, -1), rv(1, 1)];
        // Pairing not total.
        let r = TranslationSurface::build(vec![t0.clone(), t1.clone()], &[((0, 0), (1, 0))]);
        assert!(matches!(r.unwrap_err(), SurfaceError::GluingNotInvolution(_)));
        // Mismatched vectors.
        let r = TranslationSurface::build(
            vec![t0, t1],
            &[((0, 0), (1, 1)), ((0, 1), (1, 0)), ((0, 2), (1, 2))],
        );
        assert!(matches!(r.unwrap_err(), SurfaceError::MismatchedEdgeVectors(..)));
    }

    #[test]
    fn gl2_scales_area_by_determinant() {
        let s = torus_rat();
        let two: Rat = Scalar::from_i64(2);
        let one: Rat = Scalar::from_i64(1);
        let zero: Rat = Scalar::from_i64(0);
        let m = [[two.clone(), zero.clone()], [zero.clone(), one.clone()]];
        let s2 = s.apply_gl2(m).unwrap();
        assert_eq!(s2.area(), two);
        assert_eq!(s2.stratum_signature(), s.stratum_signature());
        let sing = s.apply_gl2([[one.clone(), one.clone()], [one.clone(), one]]);
        assert_eq!(sing.unwrap_err(), SurfaceError::SingularMatrix);
    }

    #[test]
    fn orientation_reversing_matrix_reorients() {
        let s = torus_rat();
        let one: Rat = Scalar::from_i64(1);
        let zero: Rat = Scalar::from_i64(0);
        // Reflection across the x-axis.
        let m = [[one.clone(), zero.clone()], [zero, -one]];
        let s2 = s.apply_gl2(m).unwrap();
        assert_eq!(s2.area(), Scalar::from_i64(1));
        assert_eq!(s2.stratum_signature(), s.stratum_signature());
    }

    #[test]
    fn ear_clip_l_shape() {
        // L-shaped hexagon: 2x1 row with a 1x1 block on top-left.
        let edges: Vec<Vec2<Rat>> = vec![
            rv(2, 0),
            rv(0, 1),
            rv(-1, 0),
            rv(0, 1),
            rv(-1, 0),
            rv(0, -2),
        ];
        let (tris, orig, diags) = ear_clip(&edges).unwrap();
        assert_eq!(tris.len(), 4);
        assert_eq!(orig.len(), 6);
        assert_eq!(diags.len(), 3);
        let total: Rat = tris
            .iter()
            .map(|t| Triangle { edges: t.clone() }.double_area())
            .fold(<Rat as Scalar>::zero(), |a, b| a + b);
        assert_eq!(total, Scalar::from_i64(6)); // 2*area = 6
    }

    #[test]
    fn ear_clip_rejects_negative_orientation() {
        let edges: Vec<Vec2<Rat>> = vec![rv(0, 1), rv(1, 0), rv(-1, -1)];
        assert!(ear_clip(&edges).is_none());
    }

    #[test]
    fn kappa_mu_single_zero() {
        for g in 2..8usize {
            let sig = StratumSignature { orders: vec![2 * g - 2], genus: g };
            let m = (2 * g - 2) as i64;
            assert_eq!(sig.kappa_mu(), Rat::new((m * (m + 2)).into(), (m + 1).into()));
        }
    }

    #[test]
    fn rational_area_is_exact() {
        let s = torus_rat();
        let m = [
            [parse_rat("1/3").unwrap(), parse_rat("0").unwrap()],
            [parse_rat("0").unwrap(), parse_rat("1/7").unwrap()],
        ];
        let s2 = s.apply_gl2(m).unwrap();
        assert_eq!(s2.area(), parse_rat("1/21").unwrap());
    }
}
