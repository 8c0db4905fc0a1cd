//! Complete saddle-connection enumeration up to a length bound.
//!
//! From every corner of every singular point we run two searches:
//!   * a ray trace exactly along the corner's outgoing triangulation edge,
//!   * a depth-first search over the open angular sector of the corner,
//!     developing triangles into the plane and narrowing the sector across
//!     each crossed edge; a branch dies when the clipped entry edge moves
//!     beyond the length bound.
//! Vertices found strictly inside a sector terminate their exact ray; when
//! the vertex is a regular marked point (cone angle 2π) the straight
//! continuation is unique and the ray is continued explicitly, so segments
//! through marked points are enumerated as well. This matches the
//! lattice-count convention on the torus, where the multiples of a primitive
//! vector are all counted.

use super::trace::{
    first_germ_after, germ_corner, trace_to_vertex, transfer, BudgetCounter, Step, Terminal,
    TraceBudget,
};
use super::TrajectoryError;
use crate::scalar::{Scalar, Vec2};
use crate::surface::{Corner, TranslationSurface};

/// One step of a saddle connection's path across the triangulation.
/// `crossed_edge` is the edge slot the segment left the triangle through;
/// it is `None` when the step ends at a vertex of the triangle (the terminal
/// step, or a pass through a marked point). Displacements sum to the
/// holonomy.
#[derive(Clone, Debug)]
pub struct PathStep<S> {
    pub triangle: usize,
    pub crossed_edge: Option<usize>,
    pub displacement: Vec2<S>,
}

#[derive(Clone, Debug)]
pub struct SaddleConnection<S> {
    pub holonomy: Vec2<S>,
    /// Vertex ids of the singular endpoints.
    pub start: usize,
    pub end: usize,
    pub path: Vec<PathStep<S>>,
}

/// Lightweight record used by the counting pipeline.
#[derive(Clone, Debug)]
pub struct ScLight<S> {
    pub holonomy: Vec2<S>,
    pub start: usize,
    pub end: usize,
}

/// An open angular sector (lo, hi), counterclockwise, of angle < π.
#[derive(Clone)]
struct Sector<S> {
    lo: Vec2<S>,
    hi: Vec2<S>,
}

impl<S: Scalar> Sector<S> {
    fn contains_strict(&self, d: &Vec2<S>) -> bool {
        self.lo.cross_sign(d) > 0 && d.cross_sign(&self.hi) > 0
    }

    /// Intersect with the open arc (lo2, hi2); all four rays pairwise within
    /// an angle < π of one another.
    fn clip(&self, lo2: &Vec2<S>, hi2: &Vec2<S>) -> Option<Sector<S>> {
        let lo = if lo2.cross_sign(&self.lo) > 0 { self.lo.clone() } else { lo2.clone() };
        let hi = if self.hi.cross_sign(hi2) > 0 { self.hi.clone() } else { hi2.clone() };
        if lo.cross_sign(&hi) > 0 {
            Some(Sector { lo, hi })
        } else {
            None
        }
    }
}

struct Job<S> {
    tri: usize,
    entry_slot: usize,
    /// Developed position of the triangle's corner 0 (source at origin).
    tau: Vec2<S>,
    sector: Sector<S>,
}

struct Search<'a, S: Scalar> {
    surf: &'a TranslationSurface<S>,
    len_sq_max: S,
    budget: BudgetCounter,
    found: Vec<ScLight<S>>,
}

impl<'a, S: Scalar> Search<'a, S> {
    /// Squared distance from the origin to the segment [a, b] exceeds the
    /// length bound: nothing beyond this edge can be in range.
    fn segment_out_of_reach(&self, a: &Vec2<S>, b: &Vec2<S>) -> bool {
        let e = b.sub_ref(a);
        let e_nsq = e.norm_sq();
        if e_nsq.is_zero() {
            return a.norm_sq() > self.len_sq_max;
        }
        let minus_dot = -(a.dot(&e));
        let dist_sq = if minus_dot.sign() <= 0 {
            a.norm_sq()
        } else if minus_dot > e_nsq {
            b.norm_sq()
        } else {
            let c = a.cross(&e);
            c.clone() * c / e_nsq
        };
        dist_sq > self.len_sq_max
    }

    fn record(&mut self, start: usize, end_corner: Corner, holonomy: Vec2<S>) {
        let end = self.surf.vertex_of_corner(end_corner);
        self.found.push(ScLight { holonomy, start, end });
    }

    /// Continue a ray straight through marked points, recording each vertex
    /// hit within range. `base` is the displacement from the source to the
    /// current vertex, `dir` the ray direction.
    fn ray_continuation(
        &mut self,
        source_vertex: usize,
        mut at_vertex: usize,
        mut base: Vec2<S>,
        dir: &Vec2<S>,
    ) -> Result<(), TrajectoryError> {
        let surf = self.surf;
        let len_cap = self.len_sq_max.clone();
        loop {
            if surf.cone_turns(at_vertex) != 1 {
                return Ok(()); // genuine cone point blocks the ray
            }
            let (t, k) = germ_corner(surf, at_vertex, dir);
            let start_pos = surf.triangle(t).corner(k);
            match trace_to_vertex(surf, t, start_pos, dir, &len_cap, &mut self.budget, None)? {
                Terminal::RanOut => return Ok(()),
                Terminal::Vertex { corner, s_total } => {
                    base = base.add_ref(&dir.scale(&s_total));
                    if base.norm_sq() > self.len_sq_max {
                        return Ok(());
                    }
                    self.record(source_vertex, corner, base.clone());
                    at_vertex = surf.vertex_of_corner(corner);
                }
            }
        }
    }

    fn run_from_corner(&mut self, source_vertex: usize, corner: Corner) -> Result<(), TrajectoryError> {
        let surf = self.surf;
        let (t, k) = corner;
        let (origin_at, p1_local, p2_local, out_dir) = {
            let tri = surf.triangle(t);
            (
                tri.corner(k),
                tri.corner((k + 1) % 3),
                tri.corner((k + 2) % 3),
                tri.edges[k].clone(),
            )
        };
        let tau = -origin_at;
        let p1 = tau.add_ref(&p1_local);
        let p2 = tau.add_ref(&p2_local);

        // Exact ray along the outgoing edge.
        if p1.norm_sq() <= self.len_sq_max {
            let end_corner = (t, (k + 1) % 3);
            self.record(source_vertex, end_corner, p1.clone());
            let v = surf.vertex_of_corner(end_corner);
            self.ray_continuation(source_vertex, v, p1.clone(), &out_dir)?;
        }

        // Open-sector DFS across the far edge.
        let mut stack: Vec<Job<S>> = Vec::new();
        if p1.cross_sign(&p2) > 0 {
            let (t2, slot2, tau2) = entry(surf, t, (k + 1) % 3, &tau);
            stack.push(Job {
                tri: t2,
                entry_slot: slot2,
                tau: tau2,
                sector: Sector { lo: p1.clone(), hi: p2.clone() },
            });
        }

        while let Some(job) = stack.pop() {
            self.budget.tick()?;
            let j = job.entry_slot;
            let (a, b, c) = {
                let tri = surf.triangle(job.tri);
                (
                    job.tau.add_ref(&tri.corner(j)),
                    job.tau.add_ref(&tri.corner((j + 1) % 3)),
                    job.tau.add_ref(&tri.corner((j + 2) % 3)),
                )
            };
            if self.segment_out_of_reach(&a, &b) {
                continue;
            }
            // Far corner.
            if c.norm_sq() <= self.len_sq_max && job.sector.contains_strict(&c) {
                let end_corner = (job.tri, (j + 2) % 3);
                self.record(source_vertex, end_corner, c.clone());
                let v = surf.vertex_of_corner(end_corner);
                if surf.cone_turns(v) == 1 {
                    self.ray_continuation(source_vertex, v, c.clone(), &c)?;
                }
            }
            // Children: far edge B->C sees the arc (dir_B, dir_C); far edge
            // C->A sees (dir_C, dir_A).
            if let Some(sub) = job.sector.clip(&b, &c) {
                let (t2, slot2, tau2) = entry(surf, job.tri, (j + 1) % 3, &job.tau);
                stack.push(Job { tri: t2, entry_slot: slot2, tau: tau2, sector: sub });
            }
            if let Some(sub) = job.sector.clip(&c, &a) {
                let (t2, slot2, tau2) = entry(surf, job.tri, (j + 2) % 3, &job.tau);
                stack.push(Job { tri: t2, entry_slot: slot2, tau: tau2, sector: sub });
            }
        }
        Ok(())
    }
}

/// Develop across edge `slot` of triangle `t` placed at translation `tau`:
/// the neighbor, its entry slot, and its translation.
fn entry<S: Scalar>(
    surf: &TranslationSurface<S>,
    t: usize,
    slot: usize,
    tau: &Vec2<S>,
) -> (usize, usize, Vec2<S>) {
    let (t2, e2) = surf.opposite((t, slot));
    // Corner `slot+1` of t coincides with corner `e2` of t2.
    let shared = tau.add_ref(&surf.triangle(t).corner((slot + 1) % 3));
    let tau2 = shared.sub_ref(&surf.triangle(t2).corner(e2));
    (t2, e2, tau2)
}

/// All saddle connections of length <= sqrt(len_sq_max), as light records.
/// Complete and duplicate-free; sorted by (length, holonomy, endpoints).
pub fn enumerate_holonomies<S: Scalar>(
    surf: &TranslationSurface<S>,
    len_sq_max: &S,
    budget: &TraceBudget,
) -> Result<Vec<ScLight<S>>, TrajectoryError> {
    let mut search = Search {
        surf,
        len_sq_max: len_sq_max.clone(),
        budget: BudgetCounter::new(budget),
        found: Vec::new(),
    };
    for v in 0..surf.num_vertices() {
        for &corner in surf.corners_of_vertex(v).to_vec().iter() {
            search.run_from_corner(v, corner)?;
        }
    }
    let mut out = search.found;
    sort_and_dedupe(&mut out);
    Ok(out)
}

fn sort_and_dedupe<S: Scalar>(scs: &mut Vec<ScLight<S>>) {
    scs.sort_by(|a, b| {
        let la = a.holonomy.norm_sq();
        let lb = b.holonomy.norm_sq();
        la.partial_cmp(&lb)
            .unwrap_or(std::cmp::Ordering::Equal)
            .then_with(|| {
                a.holonomy
                    .x
                    .partial_cmp(&b.holonomy.x)
                    .unwrap_or(std::cmp::Ordering::Equal)
            })
            .then_with(|| {
                a.holonomy
                    .y
                    .partial_cmp(&b.holonomy.y)
                    .unwrap_or(std::cmp::Ordering::Equal)
            })
            .then_with(|| (a.start, a.end).cmp(&(b.start, b.end)))
    });
    scs.dedup_by(|a, b| {
        a.start == b.start && a.end == b.end && {
            let diff = a.holonomy.sub_ref(&b.holonomy);
            if S::EXACT {
                diff.is_zero()
            } else {
                diff.norm() <= crate::scalar::FLOAT_REL_TOL * (1.0 + b.holonomy.norm())
            }
        }
    });
}

/// All saddle connections of length <= sqrt(len_sq_max), with full paths.
/// The path of each connection is reconstructed by retracing its exact ray,
/// which also revalidates the record against the surface.
pub fn enumerate_saddle_connections<S: Scalar>(
    surf: &TranslationSurface<S>,
    len_sq_max: &S,
    budget: &TraceBudget,
) -> Result<Vec<SaddleConnection<S>>, TrajectoryError> {
    let light = enumerate_holonomies(surf, len_sq_max, budget)?;
    let mut counter = BudgetCounter::new(budget);
    let mut out = Vec::with_capacity(light.len());
    for sc in light {
        let path = retrace_path(surf, sc.start, &sc.holonomy, &mut counter)?;
        out.push(SaddleConnection { holonomy: sc.holonomy, start: sc.start, end: sc.end, path });
    }
    Ok(out)
}

/// Walk the segment from `start` with displacement `holonomy`, emitting the
/// crossing records.
fn retrace_path<S: Scalar>(
    surf: &TranslationSurface<S>,
    start: usize,
    holonomy: &Vec2<S>,
    budget: &mut BudgetCounter,
) -> Result<Vec<PathStep<S>>, TrajectoryError> {
    let mut steps = Vec::new();
    let dir = holonomy.clone();
    let mut covered = S::zero(); // ray parameter; the target is 1
    let one = S::one();
    let mut vertex = start;
    'outer: loop {
        let (t, k) = germ_corner(surf, vertex, &dir);
        let mut tri = t;
        let mut pos = surf.triangle(t).corner(k);
        loop {
            budget.tick()?;
            match step(surf, tri, &pos, &dir)? {
                Step::Vertex { corner, s } => {
                    covered = covered + s.clone();
                    steps.push(PathStep {
                        triangle: tri,
                        crossed_edge: None,
                        displacement: dir.scale(&s),
                    });
                    let reached = covered.clone() - one.clone();
                    if reached.sign_scaled(&one) >= 0 {
                        break 'outer;
                    }
                    vertex = surf.vertex_of_corner((tri, corner));
                    continue 'outer; // pass through a marked point
                }
                Step::Edge { slot, s, u } => {
                    covered = covered + s.clone();
                    steps.push(PathStep {
                        triangle: tri,
                        crossed_edge: Some(slot),
                        displacement: dir.scale(&s),
                    });
                    let (t2, p2) = transfer(surf, tri, slot, &u);
                    tri = t2;
                    pos = p2;
                }
            }
        }
    }
    Ok(steps)
}

use super::trace::step;

/// Find the unique germ of `dir` at `vertex` reached by rotating the ray
/// `from_ray` counterclockwise (ccw = true) or clockwise to the first
/// occurrence; used by the cylinder chain builder.
pub(crate) fn rotate_to_germ<S: Scalar>(
    surf: &TranslationSurface<S>,
    vertex: usize,
    at_corner: Corner,
    from_ray: &Vec2<S>,
    dir: &Vec2<S>,
    ccw: bool,
) -> Corner {
    first_germ_after(surf, vertex, at_corner, from_ray, dir, ccw)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::loci;
    use crate::scalar::Rat;

    fn rat(n: i64) -> Rat {
        Scalar::from_i64(n)
    }

    /// Brute-force lattice oracle: all nonzero integer vectors with
    /// norm^2 <= l_sq.
    fn lattice_oracle(l_sq: i64) -> Vec<(i64, i64)> {
        let r = (l_sq as f64).sqrt() as i64 + 1;
        let mut v = Vec::new();
        for x in -r..=r {
            for y in -r..=r {
                if (x, y) != (0, 0) && x * x + y * y <= l_sq {
                    v.push((x, y));
                }
            }
        }
        v.sort();
        v
    }

    fn torus_holonomies(l_sq: i64) -> Vec<(i64, i64)> {
        let s = loci::builtin("torus").unwrap();
        let scs = enumerate_holonomies(&s, &rat(l_sq), &TraceBudget::default()).unwrap();
        let mut got: Vec<(i64, i64)> = scs
            .iter()
            .map(|sc| {
                (
                    sc.holonomy.x.to_f64().round() as i64,
                    sc.holonomy.y.to_f64().round() as i64,
                )
            })
            .collect();
        got.sort();
        got
    }

    #[test]
    fn torus_matches_lattice_oracle_small() {
        // L = 2.5: L^2 = 6.25, integer vectors up to norm^2 = 6.
        assert_eq!(torus_holonomies(6), lattice_oracle(6));
        assert_eq!(torus_holonomies(6).len(), 20);
    }

    #[test]
    fn torus_matches_lattice_oracle_l10() {
        assert_eq!(torus_holonomies(100), lattice_oracle(100));
    }

    #[test]
    fn below_systole_is_empty() {
        let s = loci::builtin("torus").unwrap();
        let l_sq = Rat::new(1.into(), 2.into());
        let scs = enumerate_holonomies(&s, &l_sq, &TraceBudget::default()).unwrap();
        assert!(scs.is_empty());
    }

    #[test]
    fn l3_unit_saddle_connections() {
        let s = loci::builtin("L3").unwrap();
        let scs = enumerate_holonomies(&s, &rat(1), &TraceBudget::default()).unwrap();
        // Three horizontal and three vertical unit edges, each in two
        // orientations.
        assert_eq!(scs.len(), 12);
        for sc in &scs {
            assert_eq!(sc.holonomy.norm_sq(), rat(1));
            assert_eq!((sc.start, sc.end), (0, 0));
        }
        let horiz = scs.iter().filter(|sc| sc.holonomy.y.is_zero()).count();
        assert_eq!(horiz, 6);
    }

    #[test]
    fn paths_sum_to_holonomy() {
        let s = loci::builtin("L3").unwrap();
        let scs = enumerate_saddle_connections(&s, &rat(8), &TraceBudget::default()).unwrap();
        assert!(!scs.is_empty());
        for sc in &scs {
            let mut sum: Vec2<Rat> = Vec2::zero();
            for step in &sc.path {
                sum = sum.add_ref(&step.displacement);
            }
            assert_eq!(sum, sc.holonomy, "path displacements sum to holonomy");
            assert!(sc.holonomy.norm_sq() <= rat(8));
        }
    }
}
