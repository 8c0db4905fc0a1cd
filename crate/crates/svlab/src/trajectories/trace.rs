//! Straight-line tracing through a triangulated translation surface.

use super::TrajectoryError;
use crate::scalar::{Scalar, Vec2};
use crate::surface::{Corner, TranslationSurface};

/// Budget on triangle crossings shared across a whole query.
#[derive(Clone, Copy, Debug)]
pub struct TraceBudget {
    pub max_crossings: u64,
}

impl Default for TraceBudget {
    fn default() -> Self {
        TraceBudget { max_crossings: 10_000_000 }
    }
}

pub(crate) struct BudgetCounter {
    pub used: u64,
    pub max: u64,
}

impl BudgetCounter {
    pub fn new(budget: &TraceBudget) -> Self {
        BudgetCounter { used: 0, max: budget.max_crossings }
    }

    pub fn tick(&mut self) -> Result<(), TrajectoryError> {
        self.used += 1;
        if self.used > self.max {
            Err(TrajectoryError::BudgetExceeded(self.used))
        } else {
            Ok(())
        }
    }
}

/// Outcome of advancing the ray to the boundary of the current triangle.
pub(crate) enum Step<S> {
    /// Ray reaches corner `k` of the current triangle after parameter `s`.
    Vertex { corner: usize, s: S },
    /// Ray crosses edge slot `j` at parameter `s`, at fraction `u` along
    /// the edge (from corner j toward corner j+1).
    Edge { slot: usize, s: S, u: S },
}

/// Advance a ray `pos + s*dir` (s > 0) to the boundary of triangle `tri`.
/// `pos` must lie in the closed triangle with the forward ray entering it.
pub(crate) fn step<S: Scalar>(
    surf: &TranslationSurface<S>,
    tri: usize,
    pos: &Vec2<S>,
    dir: &Vec2<S>,
) -> Result<Step<S>, TrajectoryError> {
    let t = surf.triangle(tri);
    let corners = [t.corner(0), t.corner(1), t.corner(2)];
    let rel: Vec<Vec2<S>> = corners.iter().map(|c| c.sub_ref(pos)).collect();
    // Forward collinear corner => vertex hit; convexity makes the nearest
    // such corner the exit point.
    let mut vertex_hit: Option<(usize, S)> = None;
    for k in 0..3 {
        if rel[k].is_zero() {
            continue;
        }
        if dir.cross_sign(&rel[k]) == 0 && dir.dot(&rel[k]).sign() > 0 {
            let s = dir.dot(&rel[k]) / dir.norm_sq();
            if vertex_hit.as_ref().is_none_or(|(_, s0)| s < *s0) {
                vertex_hit = Some((k, s));
            }
        }
    }
    if let Some((k, s)) = vertex_hit {
        return Ok(Step::Vertex { corner: k, s });
    }
    // Exit edge j: corner j strictly right of the ray, corner j+1 strictly
    // left.
    let sides: Vec<i8> = rel.iter().map(|r| dir.cross_sign(r)).collect();
    for j in 0..3 {
        let (a, b) = (sides[j], sides[(j + 1) % 3]);
        if a < 0 && b > 0 {
            let e = t.edges[j].clone();
            let denom = dir.cross(&e);
            if denom.is_zero() {
                return Err(TrajectoryError::Numerical);
            }
            let s = rel[j].cross(&e) / denom.clone();
            let u = -(dir.cross(&rel[j])) / denom;
            if s.sign() <= 0 {
                return Err(TrajectoryError::Numerical);
            }
            return Ok(Step::Edge { slot: j, s, u });
        }
    }
    // Lenient second pass for float grazing: allow zero signs.
    if !S::EXACT {
        for j in 0..3 {
            let (a, b) = (sides[j], sides[(j + 1) % 3]);
            if a <= 0 && b >= 0 && !(a == 0 && b == 0) {
                let e = t.edges[j].clone();
                let denom = dir.cross(&e);
                if denom.is_zero() {
                    continue;
                }
                let s = rel[j].cross(&e) / denom.clone();
                let u = -(dir.cross(&rel[j])) / denom;
                if s.sign() > 0 {
                    return Ok(Step::Edge { slot: j, s, u });
                }
            }
        }
    }
    Err(TrajectoryError::Numerical)
}

/// Transfer a boundary point at fraction `u` along edge `slot` of `tri`
/// into the glued neighbor's coordinates. Returns (triangle, position).
pub(crate) fn transfer<S: Scalar>(
    surf: &TranslationSurface<S>,
    tri: usize,
    slot: usize,
    u: &S,
) -> (usize, Vec2<S>) {
    let (t2, e2) = surf.opposite((tri, slot));
    let tt = surf.triangle(t2);
    let base = tt.corner(e2);
    let one = S::one();
    let pos = base.add_ref(&tt.edges[e2].scale(&(one - u.clone())));
    (t2, pos)
}

/// Where a trace terminated.
pub(crate) enum Terminal<S> {
    /// Hit vertex with this accumulated ray parameter and arrival corner.
    Vertex { corner: Corner, s_total: S },
    /// Flow length exceeded the bound without hitting a vertex.
    RanOut,
}

/// Follow the ray from a point (or vertex germ) until it hits a vertex or
/// the flow length exceeds `sqrt(len_sq_max)` (compared via squares, so the
/// test is exact on exact coordinates). Optionally records per-triangle
/// segments as (triangle, entry point, ray parameter at entry, exit point).
pub(crate) fn trace_to_vertex<S: Scalar>(
    surf: &TranslationSurface<S>,
    start_tri: usize,
    start_pos: Vec2<S>,
    dir: &Vec2<S>,
    len_sq_max: &S,
    budget: &mut BudgetCounter,
    mut segments: Option<&mut Vec<(usize, Vec2<S>, S, Vec2<S>)>>,
) -> Result<Terminal<S>, TrajectoryError> {
    let mut tri = start_tri;
    let mut pos = start_pos;
    let mut s_acc = S::zero();
    let dir_norm_sq = dir.norm_sq();
    let too_long =
        |s: &S| s.clone() * s.clone() * dir_norm_sq.clone() > *len_sq_max;
    loop {
        budget.tick()?;
        match step(surf, tri, &pos, dir)? {
            Step::Vertex { corner, s } => {
                let s_total = s_acc.clone() + s.clone();
                if too_long(&s_total) {
                    return Ok(Terminal::RanOut);
                }
                if let Some(segs) = segments.as_mut() {
                    let exit = pos.add_ref(&dir.scale(&s));
                    segs.push((tri, pos.clone(), s_acc.clone(), exit));
                }
                return Ok(Terminal::Vertex { corner: (tri, corner), s_total });
            }
            Step::Edge { slot, s, u } => {
                let s_total = s_acc.clone() + s.clone();
                if too_long(&s_total) {
                    return Ok(Terminal::RanOut);
                }
                if let Some(segs) = segments.as_mut() {
                    let exit = pos.add_ref(&dir.scale(&s));
                    segs.push((tri, pos.clone(), s_acc.clone(), exit));
                }
                let (t2, p2) = transfer(surf, tri, slot, &u);
                tri = t2;
                pos = p2;
                s_acc = s_total;
            }
        }
    }
}

/// Find the corner of `vertex` whose half-open angular sector
/// [out_ray, in_ray) contains direction `d`. Every direction around the
/// vertex belongs to exactly one corner.
pub(crate) fn germ_corner<S: Scalar>(
    surf: &TranslationSurface<S>,
    vertex: usize,
    d: &Vec2<S>,
) -> Corner {
    for &(t, k) in surf.corners_of_vertex(vertex) {
        let out = surf.triangle(t).edges[k].clone();
        let inn = -surf.triangle(t).edges[(k + 2) % 3].clone();
        if crate::surface::sector_contains_incl_excl(&out, &inn, d) {
            return (t, k);
        }
    }
    unreachable!("sectors around a vertex partition all directions");
}

/// Starting from the ray `start_ray` inside the sector of `start_corner`
/// (a corner of `vertex`), rotate counterclockwise (or clockwise) and return
/// the germ corner of the first occurrence of direction `target` strictly
/// after the start ray.
pub(crate) fn first_germ_after<S: Scalar>(
    surf: &TranslationSurface<S>,
    vertex: usize,
    start_corner: Corner,
    start_ray: &Vec2<S>,
    target: &Vec2<S>,
    ccw: bool,
) -> Corner {
    let corners = surf.corners_of_vertex(vertex);
    let n = corners.len();
    let idx0 = corners
        .iter()
        .position(|&c| c == start_corner)
        .expect("corner belongs to vertex");
    let out = |c: Corner| surf.triangle(c.0).edges[c.1].clone();
    let inn = |c: Corner| -surf.triangle(c.0).edges[(c.1 + 2) % 3].clone();
    let same_dir = |a: &Vec2<S>, b: &Vec2<S>| a.cross_sign(b) == 0 && a.dot(b).sign() > 0;

    if ccw {
        // First corner: sweep from start_ray to in_ray(c0).
        let c0 = corners[idx0];
        let lo = start_ray.clone();
        let hi = inn(c0);
        if !same_dir(&lo, target)
            && crate::surface::sector_contains_incl_excl(&lo, &hi, target)
            && !same_dir(&hi, target)
        {
            return c0;
        }
        for i in 1..=n {
            let c = corners[(idx0 + i) % n];
            let lo = out(c);
            let hi = inn(c);
            if same_dir(&lo, target) {
                return c;
            }
            if crate::surface::sector_contains_incl_excl(&lo, &hi, target) && !same_dir(&hi, target)
            {
                return c;
            }
        }
    } else {
        // Clockwise: sweep from start_ray down to out_ray(c0), then through
        // the corners in reverse order. A direction exactly on an out_ray
        // belongs to that corner (consistent with the half-open convention).
        let c0 = corners[idx0];
        let lo = out(c0);
        let hi = start_ray.clone();
        if same_dir(&lo, target) {
            return c0;
        }
        if !same_dir(&hi, target) && crate::surface::sector_contains_incl_excl(&lo, &hi, target) {
            return c0;
        }
        for i in 1..=n {
            let c = corners[(idx0 + n * 2 - i) % n];
            let lo = out(c);
            let hi = inn(c);
            if same_dir(&lo, target) {
                return c;
            }
            if crate::surface::sector_contains_incl_excl(&lo, &hi, target) && !same_dir(&hi, target)
            {
                return c;
            }
        }
    }
    unreachable!("direction occurs around every vertex");
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::loci;
    use crate::scalar::Rat;

    #[test]
    fn trace_across_torus() {
        let s = loci::builtin("torus").unwrap();
        let d: Vec2<Rat> = Vec2::new(Scalar::from_i64(1), Scalar::from_i64(0));
        // Germ of direction (1,0) at the single vertex.
        let (t, k) = germ_corner(&s, 0, &d);
        let mut budget = BudgetCounter::new(&TraceBudget::default());
        let start = s.triangle(t).corner(k);
        let limit: Rat = Scalar::from_i64(100);
        match trace_to_vertex(&s, t, start, &d, &limit, &mut budget, None).unwrap() {
            Terminal::Vertex { s_total, .. } => {
                assert_eq!(s_total, Scalar::from_i64(1), "unit edge closes after length 1");
            }
            Terminal::RanOut => panic!("should close"),
        }
    }

    #[test]
    fn trace_diagonal_torus() {
        let s = loci::builtin("torus").unwrap();
        let d: Vec2<Rat> = Vec2::new(Scalar::from_i64(1), Scalar::from_i64(2));
        let (t, k) = germ_corner(&s, 0, &d);
        let mut budget = BudgetCounter::new(&TraceBudget::default());
        let start = s.triangle(t).corner(k);
        let limit: Rat = Scalar::from_i64(100);
        match trace_to_vertex(&s, t, start, &d, &limit, &mut budget, None).unwrap() {
            Terminal::Vertex { s_total, .. } => {
                // Closes at displacement (1,2): ray parameter 1.
                assert_eq!(s_total, Scalar::from_i64(1));
            }
            Terminal::RanOut => panic!("should close"),
        }
    }

    #[test]
    fn budget_exceeded_reports_error() {
        let s = loci::builtin("torus").unwrap();
        // Irrational-ish rational slope that takes many crossings.
        let d: Vec2<Rat> = Vec2::new(Scalar::from_i64(10_001), Scalar::from_i64(10_000));
        let (t, k) = germ_corner(&s, 0, &d);
        let mut budget = BudgetCounter::new(&TraceBudget { max_crossings: 50 });
        let start = s.triangle(t).corner(k);
        let limit: Rat = Scalar::from_i64(1_000_000_000_000i64);
        let r = trace_to_vertex(&s, t, start, &d, &limit, &mut budget, None);
        assert!(matches!(r, Err(TrajectoryError::BudgetExceeded(_))));
    }
}
