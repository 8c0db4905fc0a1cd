//! Constructors and samplers for the measured families under study:
//! the square torus, arbitrary origamis, and the gothic flat model.
//!
//! The gothic model is three centrally symmetric polygons (two hexagons and
//! a 12-gon) glued along matching period labels. Eight real period
//! coordinates (v1, v2, w2, w3) determine everything through the relations
//! v_{i+3} = -v_i, w_{i+3} = -w_i, v1+v3+v5 = 0, w1+w3+w5 = 0. Each polygon
//! is fan-triangulated from its center of symmetry, which makes the three
//! centers regular marked points of the resulting genus-4 surface; the
//! realizability chart is the set of period values for which all three
//! polygons are star-shaped about their centers. This polygonization is one
//! valid choice, not canonical.

use crate::origami::{Origami, OrigamiError};
use crate::scalar::{Rat, Vec2};
use crate::surface::{Slot, SurfaceError, TranslationSurface};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum LociError {
    #[error("unknown builtin surface {0:?}")]
    UnknownBuiltin(String),
    #[error("origami: {0}")]
    Origami(#[from] OrigamiError),
    #[error("degenerate gothic periods")]
    DegeneratePeriods,
    #[error("gothic polygons are not embeddable at these periods")]
    NotEmbeddable,
    #[error("surface: {0}")]
    Surface(#[from] SurfaceError),
    #[error("rejection sampler starved (acceptance below 1e-6)")]
    RejectionStarvation,
}

/// Built-in exact surfaces: "torus", "L3", or an origami in cycle notation
/// such as "h=(1)(2 3); v=(1 2)(3)".
pub fn builtin(name: &str) -> Result<TranslationSurface<Rat>, LociError> {
    match name {
        "torus" => Ok(Origami::new(
            crate::origami::Perm::identity(1),
            crate::origami::Perm::identity(1),
        )
        .expect("one square is connected")
        .realize()),
        "L3" => Ok(Origami::parse("h=(1)(2 3); v=(1 2)(3)")
            .expect("fixed spec")
            .realize()),
        other => {
            if other.contains('=') {
                Ok(Origami::parse(other)?.realize())
            } else {
                Err(LociError::UnknownBuiltin(other.to_string()))
            }
        }
    }
}

/// Independent period coordinates of the gothic flat model.
#[derive(Clone, Debug, PartialEq)]
pub struct GothicPeriods {
    pub v1: Vec2<f64>,
    pub v2: Vec2<f64>,
    pub w2: Vec2<f64>,
    pub w3: Vec2<f64>,
}

impl GothicPeriods {
    /// The symmetric configuration: unit-side regular hexagons with the
    /// 12-gon degenerating to a doubled hexagon.
    pub fn regular() -> Self {
        let h = 3f64.sqrt() / 2.0;
        GothicPeriods {
            v1: Vec2::new(-1.0, 0.0),
            v2: Vec2::new(-0.5, -h),
            w2: Vec2::new(-0.5, -h),
            w3: Vec2::new(0.5, -h),
        }
    }

    pub fn scaled(&self, lambda: f64) -> Self {
        let s = |v: &Vec2<f64>| Vec2::new(v.x * lambda, v.y * lambda);
        GothicPeriods { v1: s(&self.v1), v2: s(&self.v2), w2: s(&self.w2), w3: s(&self.w3) }
    }

    pub fn v3(&self) -> Vec2<f64> {
        self.v2.sub_ref(&self.v1)
    }

    pub fn w1(&self) -> Vec2<f64> {
        self.w2.sub_ref(&self.w3)
    }

    /// Flat area of the glued surface as a bilinear form in the periods.
    pub fn area_form(&self) -> f64 {
        let v1 = &self.v1;
        let v2 = &self.v2;
        let w2 = &self.w2;
        let w3 = &self.w3;
        6.0 * v1.cross(v2) + 6.0 * w2.cross(w3) + 4.0 * v1.cross(w2) - 2.0 * v1.cross(w3)
            - 2.0 * v2.cross(w2)
            + 4.0 * v2.cross(w3)
    }

    /// Boundary edge vectors of the three polygons in counterclockwise
    /// order, with gluing labels 0..=5 for v1..v6 and 6..=11 for w1..w6.
    pub fn polygons(&self) -> [Vec<(usize, Vec2<f64>)>; 3] {
        let [a, b, c] = self.polygons_clockwise();
        [reverse_polygon(a), reverse_polygon(b), reverse_polygon(c)]
    }

    /// The traversal order of the source figure (clockwise).
    fn polygons_clockwise(&self) -> [Vec<(usize, Vec2<f64>)>; 3] {
        let v1 = self.v1.clone();
        let v2 = self.v2.clone();
        let v3 = self.v3();
        let w2 = self.w2.clone();
        let w3 = self.w3.clone();
        let w1 = self.w1();
        let (lv1, lv2, lv3, lv4, lv5, lv6) = (0, 1, 2, 3, 4, 5);
        let (lw1, lw2, lw3, lw4, lw5, lw6) = (6, 7, 8, 9, 10, 11);
        let hex_a = vec![
            (lv4, -v1.clone()),
            (lv3, v3.clone()),
            (lv2, v2.clone()),
            (lv1, v1.clone()),
            (lv6, -v3.clone()),
            (lv5, -v2.clone()),
        ];
        let twelve = vec![
            (lw1, -w1.clone()),
            (lv1, -v1.clone()),
            (lw6, w3.clone()),
            (lv6, v3.clone()),
            (lw5, w2.clone()),
            (lv5, v2.clone()),
            (lw4, w1.clone()),
            (lv4, v1),
            (lw3, -w3.clone()),
            (lv3, -v3),
            (lw2, -w2.clone()),
            (lv2, -v2),
        ];
        let hex_c = vec![
            (lw4, -w1.clone()),
            (lw3, w3),
            (lw2, w2),
            (lw1, w1),
            (lw6, -self.w3.clone()),
            (lw5, -self.w2.clone()),
        ];
        [hex_a, twelve, hex_c]
    }
}

/// Reverse a polygon traversal: opposite order, negated edge vectors.
fn reverse_polygon(poly: Vec<(usize, Vec2<f64>)>) -> Vec<(usize, Vec2<f64>)> {
    poly.into_iter().rev().map(|(l, e)| (l, -e)).collect()
}

/// Fan-triangulate a centrally symmetric polygon about its symmetry center.
/// Returns the triangles, the boundary slot for each polygon edge, and the
/// internal spoke gluings, or None when the polygon is not star-shaped
/// about the center.
fn fan_triangulate(
    edges: &[Vec2<f64>],
    tri_offset: usize,
) -> Option<(Vec<[Vec2<f64>; 3]>, Vec<Slot>, Vec<(Slot, Slot)>)> {
    let n = edges.len();
    let mut pos: Vec<Vec2<f64>> = Vec::with_capacity(n);
    let mut p = Vec2::zero();
    for e in edges {
        pos.push(p.clone());
        p = p.add_ref(e);
    }
    let scale: f64 = edges.iter().map(|e| e.norm()).sum();
    if p.norm() > 1e-9 * scale {
        return None; // edges do not close up
    }
    let half = 0.5;
    let center = pos[0].add_ref(&pos[n / 2]).scale(&half);
    let mut tris = Vec::with_capacity(n);
    let mut boundary = Vec::with_capacity(n);
    let mut spokes = Vec::with_capacity(n);
    for k in 0..n {
        let a = pos[k].sub_ref(&center);
        let b = pos[(k + 1) % n].sub_ref(&center);
        if a.cross(&b) <= 1e-12 * scale * scale {
            return None; // not star-shaped about the center
        }
        // Triangle (center, P_k, P_{k+1}) with edges in positive order.
        tris.push([a.clone(), edges[k].clone(), -b.clone()]);
        boundary.push((tri_offset + k, 1));
        spokes.push(((tri_offset + k, 2), (tri_offset + (k + 1) % n, 0)));
    }
    Some((tris, boundary, spokes))
}

/// Build the gothic surface at the given periods. The result is a genus-4
/// float surface of signature (2,2,2,0,0,0) whose area equals
/// [`GothicPeriods::area_form`].
pub fn gothic_surface(p: &GothicPeriods) -> Result<TranslationSurface<f64>, LociError> {
    let polys = p.polygons();
    for poly in &polys {
        for (_, e) in poly {
            if e.norm() < 1e-12 {
                return Err(LociError::DegeneratePeriods);
            }
        }
    }
    let mut tris: Vec<[Vec2<f64>; 3]> = Vec::with_capacity(24);
    let mut pairs: Vec<(Slot, Slot)> = Vec::new();
    // label -> the one or two boundary slots carrying it
    let mut label_slots: Vec<Vec<Slot>> = vec![Vec::new(); 12];
    for poly in &polys {
        let edges: Vec<Vec2<f64>> = poly.iter().map(|(_, e)| e.clone()).collect();
        let (t, boundary, spokes) =
            fan_triangulate(&edges, tris.len()).ok_or(LociError::NotEmbeddable)?;
        for (k, (label, _)) in poly.iter().enumerate() {
            label_slots[*label].push(boundary[k]);
        }
        tris.extend(t);
        pairs.extend(spokes);
    }
    for slots in &label_slots {
        debug_assert_eq!(slots.len(), 2, "every period label appears on two polygons");
        pairs.push((slots[0], slots[1]));
    }
    Ok(TranslationSurface::build(tris, &pairs)?)
}

/// How samples are scaled after acceptance.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Normalization {
    /// Rescale to flat area exactly 1.
    AreaOne,
    /// Uniform on the cone of area <= 1: rescale to area 1, then by
    /// U^(1/8) (the cone has real dimension 2m+2 = 8).
    ConeLeqOne,
}

#[derive(Clone, Debug)]
pub struct SampleSpec {
    pub seed: u64,
    pub count: usize,
    pub normalization: Normalization,
    pub box_radius: f64,
}

impl SampleSpec {
    pub fn new(seed: u64, count: usize) -> Self {
        SampleSpec {
            seed,
            count,
            normalization: Normalization::AreaOne,
            // Twice the period norms of the regular configuration.
            box_radius: 2.0,
        }
    }
}

/// A drawn gothic sample: the accepted periods and the built surface.
#[derive(Clone, Debug)]
pub struct GothicSample {
    pub index: usize,
    pub periods: GothicPeriods,
    pub surface: TranslationSurface<f64>,
}

/// Draw one sample on its own RNG stream; deterministic in (seed, index)
/// regardless of how samples are distributed over threads.
pub fn sample_gothic_one(spec: &SampleSpec, index: usize) -> Result<GothicSample, LociError> {
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    rng.set_stream(index as u64 + 1);
    let r = spec.box_radius;
    let mut rejections: u64 = 0;
    loop {
        let mut draw = || Vec2::new(rng.gen_range(-r..r), rng.gen_range(-r..r));
        let periods = GothicPeriods { v1: draw(), v2: draw(), w2: draw(), w3: draw() };
        let area = periods.area_form();
        if area <= 1e-9 {
            rejections += 1;
        } else {
            match gothic_surface(&periods) {
                Ok(_) => {
                    let mut scale = 1.0 / area.sqrt();
                    if spec.normalization == Normalization::ConeLeqOne {
                        let u: f64 = rng.gen_range(0.0..1.0);
                        scale *= u.powf(1.0 / 8.0);
                    }
                    let periods = periods.scaled(scale);
                    let surface = gothic_surface(&periods)?;
                    return Ok(GothicSample { index, periods, surface });
                }
                Err(_) => rejections += 1,
            }
        }
        if rejections >= 1_000_000 {
            return Err(LociError::RejectionStarvation);
        }
    }
}

/// Draw `spec.count` samples in index order.
pub fn sample_gothic(spec: &SampleSpec) -> Result<Vec<GothicSample>, LociError> {
    (0..spec.count).map(|i| sample_gothic_one(spec, i)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Scalar;

    /// Independent area oracle: shoelace sum over the three polygon
    /// boundaries, no triangulation involved.
    fn shoelace_area(p: &GothicPeriods) -> f64 {
        let mut total = 0.0;
        for poly in &p.polygons() {
            let mut pos = Vec2::new(0.0, 0.0);
            let mut acc = 0.0;
            for (_, e) in poly {
                let next = pos.add_ref(e);
                acc += pos.cross(&next);
                pos = next;
            }
            total += acc / 2.0;
        }
        total
    }

    #[test]
    fn builtins() {
        let t = builtin("torus").unwrap();
        assert_eq!(t.area(), Scalar::from_i64(1));
        assert_eq!(t.stratum_signature().orders, vec![0]);
        let l3 = builtin("L3").unwrap();
        assert_eq!(l3.area(), Scalar::from_i64(3));
        assert_eq!(l3.stratum_signature().orders, vec![2]);
        let same = builtin("h=(1)(2 3); v=(1 2)(3)").unwrap();
        assert_eq!(same.stratum_signature(), l3.stratum_signature());
        assert!(matches!(builtin("nope"), Err(LociError::UnknownBuiltin(_))));
    }

    #[test]
    fn regular_gothic_surface() {
        let p = GothicPeriods::regular();
        let s = gothic_surface(&p).unwrap();
        let sig = s.stratum_signature();
        assert_eq!(sig.genus, 4);
        assert_eq!(sig.orders, vec![2, 2, 2, 0, 0, 0]);
        let expect = 9.0 * 3f64.sqrt();
        assert!((p.area_form() - expect).abs() < 1e-12);
        assert!((s.area() - p.area_form()).abs() < 1e-9 * expect);
        assert!((shoelace_area(&p) - p.area_form()).abs() < 1e-9 * expect);
    }

    #[test]
    fn area_form_scales_quadratically() {
        let p = GothicPeriods::regular();
        let a = p.area_form();
        for lambda in [0.5, 2.0, 3.7] {
            let scaled = p.scaled(lambda).area_form();
            assert!((scaled - lambda * lambda * a).abs() < 1e-9 * scaled.abs());
        }
    }

    #[test]
    fn sampler_is_seed_deterministic() {
        let spec = SampleSpec::new(42, 3);
        let a = sample_gothic(&spec).unwrap();
        let b = sample_gothic(&spec).unwrap();
        for (x, y) in a.iter().zip(&b) {
            assert_eq!(x.periods, y.periods);
        }
        // Different seed gives different draws.
        let c = sample_gothic(&SampleSpec::new(43, 3)).unwrap();
        assert_ne!(a[0].periods, c[0].periods);
    }

    #[test]
    fn samples_build_and_match_area_form() {
        let spec = SampleSpec::new(7, 20);
        for s in sample_gothic(&spec).unwrap() {
            let sig = s.surface.stratum_signature();
            assert_eq!(sig.orders, vec![2, 2, 2, 0, 0, 0]);
            assert!((s.surface.area() - 1.0).abs() < 1e-9, "area-one normalization");
            let oracle = shoelace_area(&s.periods);
            assert!((oracle - s.periods.area_form()).abs() < 1e-9 * oracle.max(1.0));
        }
    }

    #[test]
    fn cone_normalization_bounds_area() {
        let mut spec = SampleSpec::new(11, 16);
        spec.normalization = Normalization::ConeLeqOne;
        for s in sample_gothic(&spec).unwrap() {
            let a = s.surface.area();
            assert!(a > 0.0 && a <= 1.0 + 1e-9);
        }
    }
}
