//! Square-tiled surfaces as permutation pairs.
//!
//! An origami on n unit squares is a pair of permutations (h, v): h(i) is
//! the square to the right of square i, v(i) the square above it. This
//! module is the exact counting engine used to cross-check the generic
//! trajectory code: horizontal cylinder decomposition is pure permutation
//! arithmetic, and cylinders in an arbitrary rational direction come from
//! acting by an integer matrix taking that direction to (1,0).
//!
//! Generator conventions (pinned here, asserted geometrically in tests
//! against the flat realization):
//!   T = [[1,1],[0,1]]  acts by (h, v) -> (h, v∘h⁻¹)
//!   S = [[0,-1],[1,0]] acts by (h, v) -> (v⁻¹, h)

use crate::scalar::{Rat, Scalar, Vec2};
use crate::surface::{Slot, TranslationSurface};
use num_integer::Integer;
use std::collections::{BTreeSet, VecDeque};
use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum OrigamiError {
    #[error("the group generated by h and v does not act transitively on squares")]
    NotConnected,
    #[error("cannot parse origami spec: {0}")]
    Parse(String),
}

/// Permutation of {0..n-1} stored as images.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Perm(pub Vec<usize>);

impl Perm {
    pub fn identity(n: usize) -> Self {
        Perm((0..n).collect())
    }

    pub fn apply(&self, i: usize) -> usize {
        self.0[i]
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.0.len()];
        for (i, &j) in self.0.iter().enumerate() {
            inv[j] = i;
        }
        Perm(inv)
    }

    /// Composition acting left-to-right on points: (a.then(b))(i) = b(a(i)).
    pub fn then(&self, other: &Perm) -> Self {
        Perm(self.0.iter().map(|&i| other.0[i]).collect())
    }

    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.0.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            let mut c = vec![];
            let mut i = s;
            while !seen[i] {
                seen[i] = true;
                c.push(i);
                i = self.0[i];
            }
            out.push(c);
        }
        out
    }

    /// Cycle notation with 1-based symbols, fixed points included.
    pub fn to_cycle_string(&self) -> String {
        let mut s = String::new();
        for c in self.cycles() {
            s.push('(');
            s.push_str(
                &c.iter()
                    .map(|i| (i + 1).to_string())
                    .collect::<Vec<_>>()
                    .join(" "),
            );
            s.push(')');
        }
        s
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Origami {
    pub h: Perm,
    pub v: Perm,
}

/// A horizontal cylinder: `width * height == squares.len()` and the square
/// sets of all cylinders partition {0..n-1}.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HCylinder {
    pub width: usize,
    pub height: usize,
    pub squares: BTreeSet<usize>,
}

/// A cylinder in a primitive rational direction (p, q): the waist is
/// `width * sqrt(p^2+q^2)` and the flat height is `height / sqrt(p^2+q^2)`,
/// so `area == width * height` unit squares, exactly.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactCylinder {
    pub p: i64,
    pub q: i64,
    pub width: usize,
    pub height: usize,
}

impl ExactCylinder {
    pub fn waist_sq(&self) -> i64 {
        (self.width as i64) * (self.width as i64) * (self.p * self.p + self.q * self.q)
    }

    pub fn area(&self) -> usize {
        self.width * self.height
    }

    /// Area fraction of the whole surface (n squares).
    pub fn area_fraction(&self, n: usize) -> Rat {
        Rat::new((self.area() as i64).into(), (n as i64).into())
    }
}

impl Origami {
    pub fn new(h: Perm, v: Perm) -> Result<Self, OrigamiError> {
        assert_eq!(h.0.len(), v.0.len());
        let o = Origami { h, v };
        if !o.is_connected() {
            return Err(OrigamiError::NotConnected);
        }
        Ok(o)
    }

    pub fn num_squares(&self) -> usize {
        self.h.0.len()
    }

    fn is_connected(&self) -> bool {
        let n = self.num_squares();
        if n == 0 {
            return false;
        }
        let hi = self.h.inverse();
        let vi = self.v.inverse();
        let mut seen = vec![false; n];
        let mut queue = VecDeque::from([0usize]);
        seen[0] = true;
        let mut count = 1;
        while let Some(i) = queue.pop_front() {
            for j in [self.h.apply(i), self.v.apply(i), hi.apply(i), vi.apply(i)] {
                if !seen[j] {
                    seen[j] = true;
                    count += 1;
                    queue.push_back(j);
                }
            }
        }
        count == n
    }

    /// Parse "h=(1)(2 3); v=(1 2)(3)" cycle notation. Symbols are 1-based;
    /// n is the largest symbol mentioned; omitted symbols are fixed points.
    pub fn parse(spec: &str) -> Result<Self, OrigamiError> {
        let mut h: Option<Vec<Vec<usize>>> = None;
        let mut v: Option<Vec<Vec<usize>>> = None;
        for part in spec.split(';') {
            let part = part.trim();
            if part.is_empty() {
                continue;
            }
            let (name, cyc) = part
                .split_once('=')
                .ok_or_else(|| OrigamiError::Parse(format!("missing '=' in {part:?}")))?;
            let cycles = parse_cycles(cyc.trim())?;
            match name.trim() {
                "h" => h = Some(cycles),
                "v" => v = Some(cycles),
                other => return Err(OrigamiError::Parse(format!("unknown name {other:?}"))),
            }
        }
        let h = h.ok_or_else(|| OrigamiError::Parse("missing h".into()))?;
        let v = v.ok_or_else(|| OrigamiError::Parse("missing v".into()))?;
        let n = h
            .iter()
            .chain(v.iter())
            .flatten()
            .max()
            .map(|&m| m + 1)
            .unwrap_or(1);
        Origami::new(perm_from_cycles(&h, n)?, perm_from_cycles(&v, n)?)
    }

    pub fn to_spec_string(&self) -> String {
        format!(
            "h={}; v={}",
            self.h.to_cycle_string(),
            self.v.to_cycle_string()
        )
    }

    /// Horizontal cylinders: cycles of h merged vertically across
    /// singularity-free gluing lines. The line above the row of square x is
    /// free of cone points iff v(h(y)) == h(v(y)) for all y in the row.
    pub fn horizontal_cylinders(&self) -> Vec<HCylinder> {
        let n = self.num_squares();
        let cycles = self.h.cycles();
        let mut cycle_of = vec![0usize; n];
        for (c, cyc) in cycles.iter().enumerate() {
            for &x in cyc {
                cycle_of[x] = c;
            }
        }
        // Union-find over h-cycles.
        let mut parent: Vec<usize> = (0..cycles.len()).collect();
        fn find(parent: &mut Vec<usize>, mut i: usize) -> usize {
            while parent[i] != i {
                parent[i] = parent[parent[i]];
                i = parent[i];
            }
            i
        }
        for (c, cyc) in cycles.iter().enumerate() {
            let smooth = cyc
                .iter()
                .all(|&x| self.v.apply(self.h.apply(x)) == self.h.apply(self.v.apply(x)));
            if smooth {
                let above = cycle_of[self.v.apply(cyc[0])];
                let (a, b) = (find(&mut parent, c), find(&mut parent, above));
                if a != b {
                    parent[a] = b;
                }
            }
        }
        let mut groups: Vec<Vec<usize>> = vec![Vec::new(); cycles.len()];
        for c in 0..cycles.len() {
            let root = find(&mut parent, c);
            groups[root].push(c);
        }
        let mut out = Vec::new();
        for g in groups {
            if g.is_empty() {
                continue;
            }
            let width = cycles[g[0]].len();
            let height = g.len();
            let squares: BTreeSet<usize> =
                g.iter().flat_map(|&c| cycles[c].iter().copied()).collect();
            debug_assert_eq!(width * height, squares.len());
            out.push(HCylinder { width, height, squares });
        }
        out.sort_by_key(|c| (c.width, c.height, c.squares.iter().next().copied()));
        out
    }

    /// Unit shear T = [[1,1],[0,1]].
    pub fn act_t(&self) -> Origami {
        self.act_t_pow(1)
    }

    /// T^k: (h, v∘h^{-k}).
    pub fn act_t_pow(&self, k: i64) -> Origami {
        let n = self.num_squares();
        let hk = perm_power(&self.h, -k, n);
        Origami { h: self.h.clone(), v: hk.then(&self.v) }
    }

    /// Quarter rotation S = [[0,-1],[1,0]]: (h, v) -> (v⁻¹, h).
    pub fn act_s(&self) -> Origami {
        Origami { h: self.v.inverse(), v: self.h.clone() }
    }

    /// Action of an arbitrary matrix in SL(2, Z) via the S, T generators.
    pub fn act_matrix(&self, m: [[i64; 2]; 2]) -> Origami {
        assert_eq!(m[0][0] * m[1][1] - m[0][1] * m[1][0], 1, "det must be 1");
        // Peel generators off the left of m until the identity remains:
        // m = g1 g2 ... gk, then m·O = g1·(g2·(...(gk·O))).
        #[derive(Clone, Copy)]
        enum Gen {
            S,
            Tpow(i64),
        }
        let mut word: Vec<Gen> = Vec::new();
        let (mut a, mut b, mut c, mut d) = (m[0][0], m[0][1], m[1][0], m[1][1]);
        loop {
            if c == 0 {
                // a = d = ±1 since det = 1.
                if a == 1 {
                    if b != 0 {
                        word.push(Gen::Tpow(b));
                    }
                } else {
                    // [[-1,b],[0,-1]] = S·S·[[1,-b],[0,1]]
                    word.push(Gen::S);
                    word.push(Gen::S);
                    if b != 0 {
                        word.push(Gen::Tpow(-b));
                    }
                }
                break;
            }
            if a != 0 && a.abs() >= c.abs() {
                // m = T^q · (T^{-q} m) with remainder |a - qc| < |c|.
                let q = a.div_euclid(c);
                word.push(Gen::Tpow(q));
                a -= q * c;
                b -= q * d;
            } else {
                // m = S · (S^{-1} m), S^{-1} = [[0,1],[-1,0]].
                word.push(Gen::S);
                let (na, nb) = (c, d);
                let (nc, nd) = (-a, -b);
                a = na;
                b = nb;
                c = nc;
                d = nd;
            }
        }
        let mut o = self.clone();
        for g in word.into_iter().rev() {
            o = match g {
                Gen::S => o.act_s(),
                Gen::Tpow(k) => o.act_t_pow(k),
            };
        }
        o
    }

    /// Exact cylinders in every unoriented primitive direction (p,q) with
    /// p^2 + q^2 <= l_max^2. Cylinders in direction (p,q) are the horizontal
    /// cylinders of A·O for any A in SL(2,Z) with A(p,q) = (1,0).
    pub fn exact_cylinder_count(&self, l_max: f64) -> Vec<ExactCylinder> {
        let mut out = Vec::new();
        for (p, q) in primitive_directions(l_max) {
            let a = direction_to_horizontal(p, q);
            let moved = self.act_matrix(a);
            for c in moved.horizontal_cylinders() {
                out.push(ExactCylinder { p, q, width: c.width, height: c.height });
            }
        }
        out.sort_by_key(|c| (c.waist_sq(), c.p, c.q, c.width, c.height));
        out
    }

    /// Flat realization: two triangles per unit square, exact coordinates.
    pub fn realize<S: Scalar>(&self) -> TranslationSurface<S> {
        let one = S::one();
        let zero = S::zero();
        let lower = [
            Vec2::new(one.clone(), zero.clone()),
            Vec2::new(zero.clone(), one.clone()),
            Vec2::new(-one.clone(), -one.clone()),
        ];
        let upper = [
            Vec2::new(-one.clone(), zero.clone()),
            Vec2::new(zero.clone(), -one.clone()),
            Vec2::new(one.clone(), one.clone()),
        ];
        let n = self.num_squares();
        let mut tris = Vec::with_capacity(2 * n);
        for _ in 0..n {
            tris.push(lower.clone());
            tris.push(upper.clone());
        }
        let mut pairs: Vec<(Slot, Slot)> = Vec::with_capacity(3 * n);
        let vi = self.v.inverse();
        for k in 0..n {
            pairs.push(((2 * k, 2), (2 * k + 1, 2))); // diagonal
            pairs.push(((2 * k, 0), (2 * vi.apply(k) + 1, 0))); // bottom <-> top below
            pairs.push(((2 * k, 1), (2 * self.h.apply(k) + 1, 1))); // right <-> left of h(k)
        }
        TranslationSurface::build(tris, &pairs).expect("origami realization is always valid")
    }

    /// Canonical relabeling: lexicographically smallest (h, v) image table
    /// over breadth-first relabelings from every start square. Two origamis
    /// are isomorphic iff their canonical forms are equal.
    pub fn canonical(&self) -> Origami {
        let n = self.num_squares();
        let mut best: Option<(Vec<usize>, Vec<usize>)> = None;
        for start in 0..n {
            // Discover squares deterministically: h first, then v.
            let mut label = vec![usize::MAX; n];
            let mut order = Vec::with_capacity(n);
            label[start] = 0;
            order.push(start);
            let mut head = 0;
            while head < order.len() {
                let x = order[head];
                head += 1;
                for y in [self.h.apply(x), self.v.apply(x)] {
                    if label[y] == usize::MAX {
                        label[y] = order.len();
                        order.push(y);
                    }
                }
            }
            if order.len() < n {
                // Not reachable with h, v alone; fall back to inverses too.
                for x in 0..n {
                    if label[x] == usize::MAX {
                        label[x] = order.len();
                        order.push(x);
                    }
                }
            }
            let mut hh = vec![0; n];
            let mut vv = vec![0; n];
            for x in 0..n {
                hh[label[x]] = label[self.h.apply(x)];
                vv[label[x]] = label[self.v.apply(x)];
            }
            let cand = (hh, vv);
            if best.as_ref().is_none_or(|b| cand < *b) {
                best = Some(cand);
            }
        }
        let (hh, vv) = best.unwrap();
        Origami { h: Perm(hh), v: Perm(vv) }
    }

    /// Orbit under the SL(2,Z) generators S and T, up to isomorphism.
    pub fn sl2z_orbit(&self) -> Vec<Origami> {
        let mut seen = BTreeSet::new();
        let start = self.canonical();
        let mut queue = VecDeque::from([start.clone()]);
        seen.insert(start);
        while let Some(o) = queue.pop_front() {
            for next in [o.act_s(), o.act_t(), o.act_t_pow(-1)] {
                let c = next.canonical();
                if seen.insert(c.clone()) {
                    queue.push_back(c);
                }
            }
        }
        seen.into_iter().collect()
    }
}

fn parse_cycles(text: &str) -> Result<Vec<Vec<usize>>, OrigamiError> {
    let mut cycles = Vec::new();
    let mut rest = text.trim();
    if rest.is_empty() {
        return Ok(cycles);
    }
    while !rest.is_empty() {
        if !rest.starts_with('(') {
            return Err(OrigamiError::Parse(format!("expected '(' at {rest:?}")));
        }
        let close = rest
            .find(')')
            .ok_or_else(|| OrigamiError::Parse(format!("unclosed cycle in {text:?}")))?;
        let inner = &rest[1..close];
        let mut cyc = Vec::new();
        for tok in inner.split([' ', ',']) {
            let tok = tok.trim();
            if tok.is_empty() {
                continue;
            }
            let sym: usize = tok
                .parse()
                .map_err(|_| OrigamiError::Parse(format!("bad symbol {tok:?}")))?;
            if sym == 0 {
                return Err(OrigamiError::Parse("symbols are 1-based".into()));
            }
            cyc.push(sym - 1);
        }
        if !cyc.is_empty() {
            cycles.push(cyc);
        }
        rest = rest[close + 1..].trim_start();
    }
    Ok(cycles)
}

fn perm_from_cycles(cycles: &[Vec<usize>], n: usize) -> Result<Perm, OrigamiError> {
    let mut images: Vec<usize> = (0..n).collect();
    let mut touched = vec![false; n];
    for cyc in cycles {
        for (i, &x) in cyc.iter().enumerate() {
            if x >= n || touched[x] {
                return Err(OrigamiError::Parse(format!(
                    "symbol {} repeated or out of range",
                    x + 1
                )));
            }
            touched[x] = true;
            images[x] = cyc[(i + 1) % cyc.len()];
        }
    }
    Ok(Perm(images))
}

fn perm_power(p: &Perm, k: i64, n: usize) -> Perm {
    let base = if k >= 0 { p.clone() } else { p.inverse() };
    let mut out = Perm::identity(n);
    for _ in 0..k.unsigned_abs() {
        out = out.then(&base);
    }
    out
}

/// Unoriented primitive integer directions of norm <= l_max, canonical
/// representatives with q > 0, or q == 0 and p > 0.
pub fn primitive_directions(l_max: f64) -> Vec<(i64, i64)> {
    let r = l_max.floor() as i64;
    let l2 = (l_max * l_max).floor() as i64;
    let mut out = Vec::new();
    for p in -r..=r {
        for q in 0..=r {
            if q == 0 && p <= 0 {
                continue;
            }
            if p * p + q * q > l2 {
                continue;
            }
            if p.unsigned_abs().gcd(&q.unsigned_abs()) == 1 {
                out.push((p, q));
            }
        }
    }
    out.sort_by_key(|&(p, q)| (p * p + q * q, p, q));
    out
}

/// A matrix in SL(2,Z) taking the primitive vector (p,q) to (1,0).
pub fn direction_to_horizontal(p: i64, q: i64) -> [[i64; 2]; 2] {
    let e = i64::extended_gcd(&p, &q);
    debug_assert_eq!(e.gcd, 1, "direction must be primitive");
    // a p + b q = 1, bottom row (-q, p): det = a p + b q = 1.
    [[e.x, e.y], [-q, p]]
}

#[cfg(test)]
mod tests {
    use super::*;

    fn l3() -> Origami {
        Origami::parse("h=(1)(2 3); v=(1 2)(3)").unwrap()
    }

    fn one_square() -> Origami {
        Origami::new(Perm::identity(1), Perm::identity(1)).unwrap()
    }

    #[test]
    fn parse_and_format_round_trip() {
        let o = l3();
        assert_eq!(o.num_squares(), 3);
        let o2 = Origami::parse(&o.to_spec_string()).unwrap();
        assert_eq!(o, o2);
        assert!(Origami::parse("h=(1 2); q=(1)").is_err());
        assert!(Origami::parse("h=(1 2").is_err());
        assert!(Origami::parse("h=(0 1); v=(1)").is_err());
        // Disconnected: two squares, no interaction.
        assert_eq!(
            Origami::parse("h=(1)(2); v=(1)(2)").unwrap_err(),
            OrigamiError::NotConnected
        );
    }

    #[test]
    fn torus_single_cylinder() {
        let o = one_square();
        let cyls = o.horizontal_cylinders();
        assert_eq!(cyls.len(), 1);
        assert_eq!((cyls[0].width, cyls[0].height), (1, 1));
    }

    #[test]
    fn l3_horizontal_cylinders() {
        let cyls = l3().horizontal_cylinders();
        let dims: Vec<(usize, usize)> = cyls.iter().map(|c| (c.width, c.height)).collect();
        assert_eq!(dims, vec![(1, 1), (2, 1)]);
        let all: BTreeSet<usize> = cyls.iter().flat_map(|c| c.squares.clone()).collect();
        assert_eq!(all.len(), 3);
    }

    #[test]
    fn stacked_torus_merges_rows() {
        let o = Origami::parse("h=(1)(2); v=(1 2)").unwrap();
        let cyls = o.horizontal_cylinders();
        assert_eq!(cyls.len(), 1);
        assert_eq!((cyls[0].width, cyls[0].height), (1, 2));
    }

    #[test]
    fn area_partition_over_random_origamis() {
        // All (h, v) pairs on 4 squares that are connected: widths*heights
        // partition the squares in every direction up to norm 3.
        let perms = all_perms(4);
        let mut tested = 0;
        for h in &perms {
            for v in &perms {
                let Ok(o) = Origami::new(h.clone(), v.clone()) else {
                    continue;
                };
                tested += 1;
                if tested % 17 != 0 {
                    continue; // thin out; full product is covered in acceptance
                }
                for c in o.exact_cylinder_count(3.0) {
                    assert!(c.area() <= 4);
                }
                for (p, q) in primitive_directions(3.0) {
                    let total: usize = o
                        .exact_cylinder_count(3.0)
                        .iter()
                        .filter(|c| (c.p, c.q) == (p, q))
                        .map(|c| c.area())
                        .sum();
                    assert_eq!(total, 4, "areas partition in direction ({p},{q})");
                }
            }
        }
        assert!(tested > 300);
    }

    pub(crate) fn all_perms(n: usize) -> Vec<Perm> {
        let mut out = Vec::new();
        let mut items: Vec<usize> = (0..n).collect();
        permute(&mut items, 0, &mut out);
        out
    }

    fn permute(items: &mut Vec<usize>, k: usize, out: &mut Vec<Perm>) {
        if k == items.len() {
            out.push(Perm(items.clone()));
            return;
        }
        for i in k..items.len() {
            items.swap(k, i);
            permute(items, k + 1, out);
            items.swap(k, i);
        }
    }

    #[test]
    fn t_fixes_one_square_torus() {
        let o = one_square();
        assert_eq!(o.act_t(), o);
    }

    #[test]
    fn s_has_order_four_up_to_isomorphism() {
        for spec in ["h=(1)(2 3); v=(1 2)(3)", "h=(1 2 3 4); v=(1 3)(2 4)"] {
            let o = Origami::parse(spec).unwrap();
            let s4 = o.act_s().act_s().act_s().act_s();
            assert_eq!(s4.canonical(), o.canonical());
        }
    }

    #[test]
    fn matrix_action_matches_generator_composition() {
        let o = l3();
        // T·S as a matrix = [[1,1],[0,1]]·[[0,-1],[1,0]] = [[1,-1],[1,0]].
        let via_matrix = o.act_matrix([[1, -1], [1, 0]]);
        let via_gens = o.act_s().act_t();
        assert_eq!(via_matrix.canonical(), via_gens.canonical());
        // Identity.
        assert_eq!(o.act_matrix([[1, 0], [0, 1]]), o);
        // -I acts as S².
        assert_eq!(
            o.act_matrix([[-1, 0], [0, -1]]).canonical(),
            o.act_s().act_s().canonical()
        );
    }

    #[test]
    fn torus_exact_cylinders_at_l2() {
        let o = one_square();
        let cyls = o.exact_cylinder_count(2.0);
        let dirs: Vec<(i64, i64)> = cyls.iter().map(|c| (c.p, c.q)).collect();
        assert_eq!(dirs, vec![(0, 1), (1, 0), (-1, 1), (1, 1)]);
        for c in &cyls {
            assert_eq!((c.width, c.height), (1, 1));
        }
    }

    #[test]
    fn l3_orbit_is_finite_and_preserves_squares() {
        let orbit = l3().sl2z_orbit();
        // Exhaustive search value, frozen: the three-square surfaces with a
        // single cone point form one orbit with this many isomorphism classes.
        assert_eq!(orbit.len(), 3);
        for o in &orbit {
            assert_eq!(o.num_squares(), 3);
            assert_eq!(
                o.realize::<Rat>().stratum_signature().orders,
                vec![2],
                "stratum preserved along the orbit"
            );
        }
        // T keeps L3 inside its own orbit.
        let t = l3().act_t().canonical();
        assert!(orbit.contains(&t));
    }

    #[test]
    fn l3_realization_matches_hand_count() {
        let s = l3().realize::<Rat>();
        let sig = s.stratum_signature();
        assert_eq!(sig.orders, vec![2]);
        assert_eq!(sig.genus, 2);
        assert_eq!(s.area(), Scalar::from_i64(3));
        assert_eq!(s.num_vertices(), 1);
        assert_eq!(s.cone_turns(0), 3); // cone angle 6π
    }

    #[test]
    fn primitive_direction_enumeration() {
        let dirs = primitive_directions(2.0);
        assert_eq!(dirs.len(), 4);
        for (p, q) in primitive_directions(50.0) {
            assert_eq!(p.unsigned_abs().gcd(&q.unsigned_abs()), 1);
            assert!(p * p + q * q <= 2500);
            assert!(q > 0 || (q == 0 && p > 0));
        }
        let m = direction_to_horizontal(3, -5);
        assert_eq!(m[0][0] * 3 + m[0][1] * -5, 1);
        assert_eq!(m[1][0] * 3 + m[1][1] * -5, 0);
        assert_eq!(m[0][0] * m[1][1] - m[0][1] * m[1][0], 1);
    }
}
