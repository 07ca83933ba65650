//! Geometric object model: plates, arcs, planes, and their exact
//! intersection primitives, plus the generic coordinate frame.
//!
//! Every arc carries a rational parameterization `s -> P(s)/w(s)` with a
//! positive denominator on its interval, so that each predicate against a
//! plane or a plate boundary becomes the sign of a univariate polynomial
//! at a rational or algebraic parameter value.

use crate::algebra::{
    isolate_ipoly_roots, rat, ratio, sign_of, IPoly, Rational, Scalar, Sign,
};
use alloc::vec;
use alloc::vec::Vec;
use num_traits::{Signed, Zero};

#[derive(Clone, Debug, PartialEq)]
pub struct Point3 {
    pub x: Rational,
    pub y: Rational,
    pub z: Rational,
}

impl Point3 {
    pub fn new(x: Rational, y: Rational, z: Rational) -> Self {
        Point3 { x, y, z }
    }

    pub fn from_i64(x: i64, y: i64, z: i64) -> Self {
        Point3::new(rat(x), rat(y), rat(z))
    }

    pub fn sub(&self, o: &Point3) -> Point3 {
        Point3::new(&self.x - &o.x, &self.y - &o.y, &self.z - &o.z)
    }

    pub fn add(&self, o: &Point3) -> Point3 {
        Point3::new(&self.x + &o.x, &self.y + &o.y, &self.z + &o.z)
    }

    pub fn scale(&self, c: &Rational) -> Point3 {
        Point3::new(&self.x * c, &self.y * c, &self.z * c)
    }

    pub fn dot(&self, o: &Point3) -> Rational {
        &self.x * &o.x + &self.y * &o.y + &self.z * &o.z
    }

    pub fn cross(&self, o: &Point3) -> Point3 {
        Point3::new(
            &self.y * &o.z - &self.z * &o.y,
            &self.z * &o.x - &self.x * &o.z,
            &self.x * &o.y - &self.y * &o.x,
        )
    }

    pub fn norm2(&self) -> Rational {
        self.dot(self)
    }

    pub fn coords(&self) -> [Rational; 3] {
        [self.x.clone(), self.y.clone(), self.z.clone()]
    }
}

/// A non-vertical plane `z = a x + b y + c`; `(a, b, c)` is its dual point.
#[derive(Clone, Debug, PartialEq)]
pub struct Plane {
    pub a: Rational,
    pub b: Rational,
    pub c: Rational,
}

impl Plane {
    pub fn new(a: Rational, b: Rational, c: Rational) -> Self {
        Plane { a, b, c }
    }

    /// Plane through three points; `None` when they are collinear or the
    /// plane is vertical.
    pub fn through(p1: &Point3, p2: &Point3, p3: &Point3) -> Option<Plane> {
        let u = p2.sub(p1);
        let v = p3.sub(p1);
        let n = u.cross(&v);
        if n.norm2().is_zero() {
            return None;
        }
        if n.z.is_zero() {
            return None; // vertical
        }
        // n . (X - p1) = 0  =>  z = a x + b y + c
        let a = -&n.x / &n.z;
        let b = -&n.y / &n.z;
        let c = &p1.z - &a * &p1.x - &b * &p1.y;
        Some(Plane::new(a, b, c))
    }

    pub fn height_at(&self, x: &Rational, y: &Rational) -> Rational {
        &self.a * x + &self.b * y + &self.c
    }

    pub fn contains(&self, p: &Point3) -> bool {
        self.height_at(&p.x, &p.y) == p.z
    }

    /// Signed side of the plane: sign of `z - a x - b y - c`.
    pub fn side(&self, p: &Point3) -> Sign {
        sign_of(&(&p.z - &self.height_at(&p.x, &p.y)))
    }

    pub fn dual(&self) -> [Rational; 3] {
        [self.a.clone(), self.b.clone(), self.c.clone()]
    }
}

/// Plate boundary: a triangle or a circular disk.
#[derive(Clone, Debug)]
pub enum Boundary {
    Triangle([Point3; 3]),
    Disk {
        center: Point3,
        radius: Rational,
        /// In-plane orthogonal spanning vectors of the boundary circle
        /// with `|u|^2 = |v|^2 = radius^2`, `u . v = 0`.
        u: Point3,
        v: Point3,
    },
}

/// A planar region of constant complexity in three-space.
#[derive(Clone, Debug)]
pub struct Plate {
    pub plane: Plane,
    pub boundary: Boundary,
}

#[derive(Clone, Debug, PartialEq)]
pub enum GeometryError {
    DegeneratePlate,
    VerticalPlane,
    OffPlane,
    NotPlanar,
    UnsupportedKind,
}

impl Plate {
    pub fn triangle(p1: Point3, p2: Point3, p3: Point3) -> Result<Plate, GeometryError> {
        let u = p2.sub(&p1);
        let v = p3.sub(&p1);
        let n = u.cross(&v);
        if n.norm2().is_zero() {
            return Err(GeometryError::DegeneratePlate);
        }
        if n.z.is_zero() {
            return Err(GeometryError::VerticalPlane);
        }
        let plane = Plane::through(&p1, &p2, &p3).ok_or(GeometryError::DegeneratePlate)?;
        Ok(Plate { plane, boundary: Boundary::Triangle([p1, p2, p3]) })
    }

    /// Disk from a plane, the `(x, y)` coordinates of its center (lifted
    /// onto the plane) and a radius. The boundary circle's spanning
    /// vectors are built from rational in-plane directions scaled so that
    /// `|u|^2 = |v|^2 = r^2` exactly; this requires the plane's normal to
    /// admit a rational orthogonal pair, which holds for planes produced
    /// by the scene generator and for axis-aligned planes. For a general
    /// plane the disk is still exact for membership tests; only the
    /// boundary-circle parameterization needs `u`, `v`.
    pub fn disk(plane: Plane, cx: Rational, cy: Rational, radius: Rational) -> Result<Plate, GeometryError> {
        if !radius.is_positive() {
            return Err(GeometryError::DegeneratePlate);
        }
        let cz = plane.height_at(&cx, &cy);
        let center = Point3::new(cx, cy, cz);
        let (u, v) = disk_axes(&plane, &radius).ok_or(GeometryError::DegeneratePlate)?;
        Ok(Plate { plane, boundary: Boundary::Disk { center, radius, u, v } })
    }

    /// Exact membership of a rational point lying on the plate's plane
    /// (closed region).
    pub fn contains_coplanar(&self, p: &Point3) -> Result<bool, GeometryError> {
        if !self.plane.contains(p) {
            return Err(GeometryError::OffPlane);
        }
        Ok(match &self.boundary {
            Boundary::Triangle(vs) => {
                // 2D tests in the (x, y) projection (plane is a z-graph)
                let sign_edge = |a: &Point3, b: &Point3, q: &Point3| -> Sign {
                    sign_of(&(
                        (&b.x - &a.x) * (&q.y - &a.y) - (&b.y - &a.y) * (&q.x - &a.x)
                    ))
                };
                let mut ok = true;
                for i in 0..3 {
                    let a = &vs[i];
                    let b = &vs[(i + 1) % 3];
                    let c = &vs[(i + 2) % 3];
                    let sc = sign_edge(a, b, c);
                    let sp = sign_edge(a, b, p);
                    if sp != 0 && sp != sc {
                        ok = false;
                        break;
                    }
                }
                ok
            }
            Boundary::Disk { center, radius, .. } => {
                let d2 = p.sub(center).norm2();
                d2 <= radius * radius
            }
        })
    }

    /// The plate's boundary as directed arcs (triangle edges or the two
    /// halves of the boundary circle).
    pub fn boundary_arcs(&self) -> Vec<Arc> {
        match &self.boundary {
            Boundary::Triangle(vs) => (0..3)
                .map(|i| Arc::segment(vs[i].clone(), vs[(i + 1) % 3].clone()))
                .collect(),
            Boundary::Disk { center, radius, u, v } => {
                let circle = Circle3 {
                    center: center.clone(),
                    u: u.clone(),
                    v: v.clone(),
                    r2: radius * radius,
                };
                vec![Arc::full_circle(circle)]
            }
        }
    }
}

/// Orthogonal in-plane axes for a disk of radius `r` on `plane`, with
/// exact squared norm `r^2`. Uses the rational direction pair
/// `(1, 0, a)`, `n x (1,0,a)` scaled by rational factors; exact scaling
/// needs the direction norms to be rational squares, which holds for the
/// generated scenes (see the scene generator); otherwise `None`.
fn disk_axes(plane: &Plane, r: &Rational) -> Option<(Point3, Point3)> {
    let a = &plane.a;
    let b = &plane.b;
    // d1 = (1, 0, a) lies in the plane; d2 = n x d1 with n = (-a, -b, 1)
    let d1 = Point3::new(rat(1), rat(0), a.clone());
    let n = Point3::new(-a.clone(), -b.clone(), rat(1));
    let d2 = n.cross(&d1);
    let n1 = d1.norm2();
    let n2 = d2.norm2();
    // u = d1 * (r / sqrt(n1)) needs sqrt(n1) rational
    let s1 = rational_sqrt(&n1)?;
    let s2 = rational_sqrt(&n2)?;
    let u = d1.scale(&(r / &s1));
    let v = d2.scale(&(r / &s2));
    debug_assert_eq!(u.norm2(), r * r);
    debug_assert_eq!(v.norm2(), r * r);
    debug_assert!(u.dot(&v).is_zero());
    Some((u, v))
}

/// Exact rational square root, when it exists.
pub fn rational_sqrt(r: &Rational) -> Option<Rational> {
    if r.is_negative() {
        return None;
    }
    let n = r.numer().sqrt();
    let d = r.denom().sqrt();
    if &(&n * &n) == r.numer() && &(&d * &d) == r.denom() {
        Some(Rational::new(n, d))
    } else {
        None
    }
}

/// A circle in three-space with exact rational data.
#[derive(Clone, Debug)]
pub struct Circle3 {
    pub center: Point3,
    /// `|u|^2 = |v|^2 = r2`, `u . v = 0`.
    pub u: Point3,
    pub v: Point3,
    pub r2: Rational,
}

impl Circle3 {
    /// Point at angle `theta` with `xi = tan(theta/2)` on the primary
    /// half, or the antipodal half when `flip` is set.
    pub fn point_at(&self, xi: &Rational, flip: bool) -> Point3 {
        let xi2 = xi * xi;
        let den = &xi2 + rat(1);
        let cos = (rat(1) - &xi2) / &den;
        let sin = (rat(2) * xi) / &den;
        let (cos, sin) = if flip { (-cos, -sin) } else { (cos, sin) };
        self.center
            .add(&self.u.scale(&cos))
            .add(&self.v.scale(&sin))
    }
}

/// Arc kinds, with their parametric dimension bookkeeping.
#[derive(Clone, Debug, PartialEq)]
pub enum ArcKind {
    Segment,
    CircularArc,
    FullCircle,
    ConicArc,
    ParametricAlgebraic,
}

impl ArcKind {
    /// Degrees of freedom of the family (the paper's `t`).
    pub fn dof(&self) -> u32 {
        match self {
            ArcKind::Segment => 6,
            ArcKind::CircularArc => 8,
            ArcKind::FullCircle => 6,
            ArcKind::ConicArc => 8,
            ArcKind::ParametricAlgebraic => 8,
        }
    }
}

/// One rationally parameterized piece: `P(s) = (px(s), py(s), pz(s)) / w(s)`
/// for `s` in `[lo, hi]`, with `w > 0` on the closed interval.
#[derive(Clone, Debug)]
pub struct ArcPiece {
    pub px: Vec<Rational>,
    pub py: Vec<Rational>,
    pub pz: Vec<Rational>,
    pub w: Vec<Rational>,
    pub lo: Rational,
    pub hi: Rational,
}

impl ArcPiece {
    pub fn eval(&self, s: &Rational) -> Point3 {
        let w = eval_dense(&self.w, s);
        debug_assert!(w.is_positive());
        Point3::new(
            eval_dense(&self.px, s) / &w,
            eval_dense(&self.py, s) / &w,
            eval_dense(&self.pz, s) / &w,
        )
    }

    /// Numerator of `z(s) - a x(s) - b y(s) - c` (denominator `w > 0`).
    pub fn plane_numerator(&self, plane: &Plane) -> Vec<Rational> {
        let mut out = self.pz.clone();
        out = dsub(&out, &dscale(&self.px, &plane.a));
        out = dsub(&out, &dscale(&self.py, &plane.b));
        out = dsub(&out, &dscale(&self.w, &plane.c));
        out
    }

    /// Numerator polynomials of the homogeneous coordinates
    /// `(px, py, pz, w)`.
    pub fn coords(&self) -> [&[Rational]; 4] {
        [&self.px, &self.py, &self.pz, &self.w]
    }

    /// Derivative direction numerator: `(P/w)' * w^2 = P' w - P w'`.
    pub fn tangent_numerator(&self) -> [Vec<Rational>; 3] {
        let dw = ddiff(&self.w);
        [
            dsub(&dmul(&ddiff(&self.px), &self.w), &dmul(&self.px, &dw)),
            dsub(&dmul(&ddiff(&self.py), &self.w), &dmul(&self.py, &dw)),
            dsub(&dmul(&ddiff(&self.pz), &self.w), &dmul(&self.pz, &dw)),
        ]
    }
}

/// A connected piece of a constant-degree algebraic curve, directed along
/// increasing `(piece, s)`.
#[derive(Clone, Debug)]
pub struct Arc {
    pub kind: ArcKind,
    pub pieces: Vec<ArcPiece>,
    /// Supporting circle for circular kinds.
    pub circle: Option<Circle3>,
}

impl Arc {
    pub fn segment(p: Point3, q: Point3) -> Arc {
        let piece = ArcPiece {
            px: vec![p.x.clone(), &q.x - &p.x],
            py: vec![p.y.clone(), &q.y - &p.y],
            pz: vec![p.z.clone(), &q.z - &p.z],
            w: vec![rat(1)],
            lo: rat(0),
            hi: rat(1),
        };
        Arc { kind: ArcKind::Segment, pieces: vec![piece], circle: None }
    }

    pub fn endpoints(&self) -> (Point3, Point3) {
        let first = self.pieces.first().expect("arc has pieces");
        let last = self.pieces.last().unwrap();
        (first.eval(&first.lo), last.eval(&last.hi))
    }

    /// Circular arc on `circle`, on one half (`flip = false` covers
    /// angles in `(-pi, pi)` as `xi = tan(theta/2)`; `flip = true` covers
    /// the antipodal half), for `xi` in `[lo, hi]`.
    pub fn circular(circle: Circle3, flip: bool, lo: Rational, hi: Rational) -> Arc {
        let piece = circle_piece(&circle, flip, lo, hi);
        Arc { kind: ArcKind::CircularArc, pieces: vec![piece], circle: Some(circle) }
    }

    /// Full circle: two antipodal halves, `xi` in `[-1, 1]` each.
    pub fn full_circle(circle: Circle3) -> Arc {
        let p1 = circle_piece(&circle, false, rat(-1), rat(1));
        let p2 = circle_piece(&circle, true, rat(-1), rat(1));
        Arc { kind: ArcKind::FullCircle, pieces: vec![p1, p2], circle: Some(circle) }
    }

    /// A planar conic arc given by its plane frame and an in-plane
    /// rational parameterization `(x(s), y(s)) / w(s)`.
    pub fn conic(
        origin: Point3,
        e1: Point3,
        e2: Point3,
        x: Vec<Rational>,
        y: Vec<Rational>,
        w: Vec<Rational>,
        lo: Rational,
        hi: Rational,
    ) -> Arc {
        let piece = planar_piece(&origin, &e1, &e2, &x, &y, &w, lo, hi);
        Arc { kind: ArcKind::ConicArc, pieces: vec![piece], circle: None }
    }

    /// User-supplied rational space parameterization.
    pub fn parametric(
        px: Vec<Rational>,
        py: Vec<Rational>,
        pz: Vec<Rational>,
        w: Vec<Rational>,
        lo: Rational,
        hi: Rational,
    ) -> Arc {
        let piece = ArcPiece { px, py, pz, w, lo, hi };
        Arc { kind: ArcKind::ParametricAlgebraic, pieces: vec![piece], circle: None }
    }

    pub fn dof(&self) -> u32 {
        self.kind.dof()
    }

    /// Reverse orientation.
    pub fn reversed(&self) -> Arc {
        let pieces = self
            .pieces
            .iter()
            .rev()
            .map(|p| {
                // s -> lo + hi - s keeps the interval, flips direction
                let sum = &p.lo + &p.hi;
                ArcPiece {
                    px: reflect_dense(&p.px, &sum),
                    py: reflect_dense(&p.py, &sum),
                    pz: reflect_dense(&p.pz, &sum),
                    w: reflect_dense(&p.w, &sum),
                    lo: p.lo.clone(),
                    hi: p.hi.clone(),
                }
            })
            .collect();
        Arc { kind: self.kind.clone(), pieces, circle: self.circle.clone() }
    }

    /// The sub-arc of one piece restricted to `[lo, hi]` (rational cuts).
    pub fn piece_subarc(&self, piece: usize, lo: Rational, hi: Rational) -> Arc {
        let p = &self.pieces[piece];
        debug_assert!(lo >= p.lo && hi <= p.hi && lo <= hi);
        let mut np = p.clone();
        np.lo = lo;
        np.hi = hi;
        Arc { kind: self.kind.clone(), pieces: vec![np], circle: self.circle.clone() }
    }
}

fn circle_piece(circle: &Circle3, flip: bool, lo: Rational, hi: Rational) -> ArcPiece {
    // cos = (1 - s^2)/(1 + s^2), sin = 2 s / (1 + s^2)
    let sgn = if flip { rat(-1) } else { rat(1) };
    let cosn = dscale(&vec![rat(1), rat(0), rat(-1)], &sgn);
    let sinn = dscale(&vec![rat(0), rat(2)], &sgn);
    let w = vec![rat(1), rat(0), rat(1)];
    let c = &circle.center;
    let u = &circle.u;
    let v = &circle.v;
    let comp = |cc: &Rational, uc: &Rational, vc: &Rational| -> Vec<Rational> {
        dadd(
            &dscale(&w, cc),
            &dadd(&dscale(&cosn, uc), &dscale(&sinn, vc)),
        )
    };
    ArcPiece {
        px: comp(&c.x, &u.x, &v.x),
        py: comp(&c.y, &u.y, &v.y),
        pz: comp(&c.z, &u.z, &v.z),
        w,
        lo,
        hi,
    }
}

fn planar_piece(
    origin: &Point3,
    e1: &Point3,
    e2: &Point3,
    x: &[Rational],
    y: &[Rational],
    w: &[Rational],
    lo: Rational,
    hi: Rational,
) -> ArcPiece {
    let comp = |oc: &Rational, e1c: &Rational, e2c: &Rational| -> Vec<Rational> {
        dadd(
            &dscale(w, oc),
            &dadd(&dscale(x, e1c), &dscale(y, e2c)),
        )
    };
    ArcPiece {
        px: comp(&origin.x, &e1.x, &e2.x),
        py: comp(&origin.y, &e1.y, &e2.y),
        pz: comp(&origin.z, &e1.z, &e2.z),
        w: w.to_vec(),
        lo,
        hi,
    }
}

// --- dense univariate helpers ---------------------------------------------

pub fn eval_dense(p: &[Rational], s: &Rational) -> Rational {
    let mut acc = rat(0);
    for c in p.iter().rev() {
        acc = acc * s + c;
    }
    acc
}

pub fn dadd(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let n = a.len().max(b.len());
    (0..n)
        .map(|i| {
            let x = a.get(i).cloned().unwrap_or_else(|| rat(0));
            let y = b.get(i).cloned().unwrap_or_else(|| rat(0));
            x + y
        })
        .collect()
}

pub fn dsub(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let n = a.len().max(b.len());
    (0..n)
        .map(|i| {
            let x = a.get(i).cloned().unwrap_or_else(|| rat(0));
            let y = b.get(i).cloned().unwrap_or_else(|| rat(0));
            x - y
        })
        .collect()
}

pub fn dscale(a: &[Rational], c: &Rational) -> Vec<Rational> {
    a.iter().map(|x| x * c).collect()
}

pub fn dmul(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![rat(0); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] = &out[i + j] + x * y;
        }
    }
    out
}

pub fn ddiff(a: &[Rational]) -> Vec<Rational> {
    if a.len() <= 1 {
        return Vec::new();
    }
    a.iter()
        .enumerate()
        .skip(1)
        .map(|(i, c)| c * rat(i as i64))
        .collect()
}

pub fn is_dense_zero(a: &[Rational]) -> bool {
    a.iter().all(|c| c.is_zero())
}

/// p(lo + hi - s): reflection that reverses direction over `[lo, hi]`.
fn reflect_dense(p: &[Rational], sum: &Rational) -> Vec<Rational> {
    // substitute s -> sum - s via Horner
    let mut acc: Vec<Rational> = Vec::new();
    for c in p.iter().rev() {
        // acc = acc * (sum - s) + c
        let mut next = vec![rat(0); acc.len() + 1];
        for (i, a) in acc.iter().enumerate() {
            next[i] = &next[i] + a * sum;
            next[i + 1] = &next[i + 1] - a;
        }
        if next.is_empty() {
            next.push(rat(0));
        }
        next[0] = &next[0] + c;
        acc = next;
    }
    if acc.is_empty() {
        acc.push(rat(0));
    }
    acc
}

// --- frames ----------------------------------------------------------------

/// Exact rational rotation (from an integer quaternion), applied
/// identically to inputs and queries.
#[derive(Clone, Debug)]
pub struct Frame {
    /// Row-major rotation matrix; exactly orthonormal with determinant 1.
    pub r: [[Rational; 3]; 3],
}

impl Frame {
    pub fn identity() -> Frame {
        let mut r = core::array::from_fn(|_| core::array::from_fn(|_| rat(0)));
        for (i, row) in r.iter_mut().enumerate() {
            row[i] = rat(1);
        }
        Frame { r }
    }

    /// Rotation from an integer quaternion `(w, x, y, z)`.
    pub fn from_quaternion(w: i64, x: i64, y: i64, z: i64) -> Frame {
        let n = w * w + x * x + y * y + z * z;
        assert!(n > 0);
        let n = rat(n);
        let f = |v: i64| rat(v);
        let (qw, qx, qy, qz) = (f(w), f(x), f(y), f(z));
        let two = rat(2);
        let r = [
            [
                (&qw * &qw + &qx * &qx - &qy * &qy - &qz * &qz) / &n,
                (&two * (&qx * &qy - &qw * &qz)) / &n,
                (&two * (&qx * &qz + &qw * &qy)) / &n,
            ],
            [
                (&two * (&qx * &qy + &qw * &qz)) / &n,
                (&qw * &qw - &qx * &qx + &qy * &qy - &qz * &qz) / &n,
                (&two * (&qy * &qz - &qw * &qx)) / &n,
            ],
            [
                (&two * (&qx * &qz - &qw * &qy)) / &n,
                (&two * (&qy * &qz + &qw * &qx)) / &n,
                (&qw * &qw - &qx * &qx - &qy * &qy + &qz * &qz) / &n,
            ],
        ];
        Frame { r }
    }

    /// A pseudorandom rational rotation drawn from the seed and attempt
    /// counter; used to reach generic position.
    pub fn sample(seed: u64, attempt: u32) -> Frame {
        // splitmix-style mixing, small quaternion entries
        let mut s = seed ^ (0x9e37_79b9_7f4a_7c15u64.wrapping_mul(u64::from(attempt) + 1));
        let mut next = || {
            s = s.wrapping_add(0x9e37_79b9_7f4a_7c15);
            let mut z = s;
            z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
            z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
            z ^ (z >> 31)
        };
        loop {
            let w = (next() % 17) as i64 + 3;
            let x = (next() % 15) as i64 - 7;
            let y = (next() % 15) as i64 - 7;
            let z = (next() % 15) as i64 - 7;
            if w * w + x * x + y * y + z * z > 0 && (x != 0 || y != 0 || z != 0) {
                return Frame::from_quaternion(w, x, y, z);
            }
        }
    }

    pub fn inverse(&self) -> Frame {
        // transpose of an orthonormal matrix
        let mut r = core::array::from_fn(|_| core::array::from_fn(|_| rat(0)));
        for (i, row) in self.r.iter().enumerate() {
            for (j, val) in row.iter().enumerate() {
                r[j][i] = val.clone();
            }
        }
        Frame { r }
    }

    pub fn apply_point(&self, p: &Point3) -> Point3 {
        let m = &self.r;
        Point3::new(
            &m[0][0] * &p.x + &m[0][1] * &p.y + &m[0][2] * &p.z,
            &m[1][0] * &p.x + &m[1][1] * &p.y + &m[1][2] * &p.z,
            &m[2][0] * &p.x + &m[2][1] * &p.y + &m[2][2] * &p.z,
        )
    }

    /// Transform a plane; `None` when the image is vertical.
    pub fn apply_plane(&self, plane: &Plane) -> Option<Plane> {
        // normal (a, b, -1), point (0, 0, c)
        let n = Point3::new(plane.a.clone(), plane.b.clone(), rat(-1));
        let n2 = self.apply_point(&n);
        if n2.z.is_zero() {
            return None;
        }
        let p0 = self.apply_point(&Point3::new(rat(0), rat(0), plane.c.clone()));
        let a = -&n2.x / &n2.z;
        let b = -&n2.y / &n2.z;
        let c = &p0.z - &a * &p0.x - &b * &p0.y;
        Some(Plane::new(a, b, c))
    }

    pub fn apply_plate(&self, plate: &Plate) -> Option<Plate> {
        let plane = self.apply_plane(&plate.plane)?;
        let boundary = match &plate.boundary {
            Boundary::Triangle(vs) => Boundary::Triangle([
                self.apply_point(&vs[0]),
                self.apply_point(&vs[1]),
                self.apply_point(&vs[2]),
            ]),
            Boundary::Disk { center, radius, u, v } => Boundary::Disk {
                center: self.apply_point(center),
                radius: radius.clone(),
                u: self.apply_point(u),
                v: self.apply_point(v),
            },
        };
        Some(Plate { plane, boundary })
    }

    pub fn apply_arc(&self, arc: &Arc) -> Arc {
        let pieces = arc
            .pieces
            .iter()
            .map(|p| {
                let tx = |row: usize| -> Vec<Rational> {
                    let m = &self.r;
                    dadd(
                        &dadd(&dscale(&p.px, &m[row][0]), &dscale(&p.py, &m[row][1])),
                        &dscale(&p.pz, &m[row][2]),
                    )
                };
                ArcPiece {
                    px: tx(0),
                    py: tx(1),
                    pz: tx(2),
                    w: p.w.clone(),
                    lo: p.lo.clone(),
                    hi: p.hi.clone(),
                }
            })
            .collect();
        let circle = arc.circle.as_ref().map(|c| Circle3 {
            center: self.apply_point(&c.center),
            u: self.apply_point(&c.u),
            v: self.apply_point(&c.v),
            r2: c.r2.clone(),
        });
        Arc { kind: arc.kind.clone(), pieces, circle }
    }
}

// --- intersection primitives -----------------------------------------------

/// One crossing of an arc with a plane.
#[derive(Clone, Debug)]
pub struct PlaneCrossing {
    pub piece: usize,
    pub s: Scalar,
    pub multiplicity: u32,
    /// Even local multiplicity: the arc touches without crossing.
    pub tangential: bool,
}

/// Result of intersecting an arc with a plane.
#[derive(Clone, Debug)]
pub enum ArcPlaneResult {
    Crossings(Vec<PlaneCrossing>),
    /// The arc lies inside the plane (routed to zero-set handling).
    Contained,
}

/// All parameters where the arc meets the plane, sorted along the arc,
/// with exact crossing/tangency classification. Endpoint touches count
/// (closed intervals). Pieces lying inside the plane yield `Contained`.
pub fn arc_plane_intersections(arc: &Arc, plane: &Plane) -> ArcPlaneResult {
    let mut out = Vec::new();
    for (pi, piece) in arc.pieces.iter().enumerate() {
        let num = piece.plane_numerator(plane);
        if is_dense_zero(&num) {
            return ArcPlaneResult::Contained;
        }
        let ip = IPoly::from_rational_coeffs(&num);
        if ip.is_zero() {
            return ArcPlaneResult::Contained;
        }
        for (root, mult) in isolate_ipoly_roots(&ip) {
            // keep roots within [lo, hi]
            let ge_lo = root.cmp_exact(&Scalar::Rat(piece.lo.clone())) != core::cmp::Ordering::Less;
            let le_hi = root.cmp_exact(&Scalar::Rat(piece.hi.clone())) != core::cmp::Ordering::Greater;
            if ge_lo && le_hi {
                // skip a crossing exactly at a piece seam other than the
                // very first start (the previous piece already reported it)
                if pi > 0 && root.eq_exact(&Scalar::Rat(piece.lo.clone())) {
                    continue;
                }
                out.push(PlaneCrossing {
                    piece: pi,
                    s: root,
                    multiplicity: mult,
                    tangential: mult % 2 == 0,
                });
            }
        }
    }
    ArcPlaneResult::Crossings(out)
}

/// Exact membership of the arc point at `(piece, s)` in the plate,
/// assuming the point lies on the plate's plane (the caller got `s` from
/// `arc_plane_intersections` with that plane). Closed-region semantics.
pub fn point_on_plate_at(arc: &Arc, piece: usize, s: &Scalar, plate: &Plate) -> bool {
    let p = &arc.pieces[piece];
    match &plate.boundary {
        Boundary::Triangle(vs) => {
            for i in 0..3 {
                let a = &vs[i];
                let b = &vs[(i + 1) % 3];
                let c = &vs[(i + 2) % 3];
                // side of the 2D projected edge, as a polynomial in s
                let ex = &b.x - &a.x;
                let ey = &b.y - &a.y;
                // cross worth: ex*(y - ay) - ey*(x - ax), numerator over w
                let term = dsub(
                    &dscale(&dsub(&p.py, &dscale(&p.w, &a.y)), &ex),
                    &dscale(&dsub(&p.px, &dscale(&p.w, &a.x)), &ey),
                );
                let sc = sign_of(&(&ex * (&c.y - &a.y) - &ey * (&c.x - &a.x)));
                debug_assert!(sc != 0);
                let sp = sign_dense_at(&term, s);
                if sp != 0 && sp != sc {
                    return false;
                }
            }
            true
        }
        Boundary::Disk { center, radius, .. } => {
            // |P - c|^2 <= r^2  <=>  sum (p_i - c_i w)^2 - r^2 w^2 <= 0
            let dx = dsub(&p.px, &dscale(&p.w, &center.x));
            let dy = dsub(&p.py, &dscale(&p.w, &center.y));
            let dz = dsub(&p.pz, &dscale(&p.w, &center.z));
            let mut q = dadd(&dmul(&dx, &dx), &dadd(&dmul(&dy, &dy), &dmul(&dz, &dz)));
            let r2 = radius * radius;
            q = dsub(&q, &dscale(&dmul(&p.w, &p.w), &r2));
            sign_dense_at(&q, s) <= 0
        }
    }
}

/// Sign of a dense rational polynomial at an exact parameter value.
pub fn sign_dense_at(coeffs: &[Rational], s: &Scalar) -> Sign {
    match s {
        Scalar::Rat(r) => sign_of(&eval_dense(coeffs, r)),
        Scalar::Alg(a) => crate::algebra::sign_univariate_at(coeffs, a),
    }
}

// --- convex splitting --------------------------------------------------------

/// Exact rational threshold below `tan(max_turn/2)`; pieces whose
/// parameter span passes the test have turning angle strictly below the
/// configured maximum. For the default 10 degrees: `tan(5) ~ 0.08748866`,
/// threshold 437/5000 = 0.0874.
pub fn tan_half_threshold(max_turn_degrees: u32) -> Rational {
    match max_turn_degrees {
        10 => ratio(437, 5000),
        5 => ratio(436, 10000),   // tan(2.5) ~ 0.043661
        15 => ratio(1316, 10000), // tan(7.5) ~ 0.131652
        20 => ratio(1763, 10000), // tan(10) ~ 0.176327
        d => {
            // conservative fallback: linear under-approximation of tan
            // (radians/1.2) keeps the bound safe for small angles
            ratio(i64::from(d) * 1000, 2 * 68755)
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum SplitError {
    NotPlanar,
}

/// Split a planar arc into convex pieces whose turning angle is at most
/// the configured bound (default 10 degrees), concatenating to the
/// original. Segments pass through unchanged.
pub fn split_convex_small_turning(arc: &Arc, max_turn_degrees: u32) -> Result<Vec<Arc>, SplitError> {
    match arc.kind {
        ArcKind::Segment => return Ok(vec![arc.clone()]),
        ArcKind::CircularArc | ArcKind::FullCircle => {}
        ArcKind::ConicArc => {}
        ArcKind::ParametricAlgebraic => {
            if !arc_is_planar(arc) {
                return Err(SplitError::NotPlanar);
            }
        }
    }
    let threshold = tan_half_threshold(max_turn_degrees);
    let mut out = Vec::new();
    for (pi, piece) in arc.pieces.iter().enumerate() {
        if arc.circle.is_some() {
            // circular: the turning of [s0, s1] is 2(atan s1 - atan s0);
            // tan of half the turning is (s1-s0)/(1+s0 s1), exact
            split_circular_piece(arc, pi, piece, &threshold, &mut out);
        } else {
            split_planar_piece(arc, pi, piece, &threshold, &mut out);
        }
    }
    Ok(out)
}

fn split_circular_piece(
    arc: &Arc,
    pi: usize,
    piece: &ArcPiece,
    threshold: &Rational,
    out: &mut Vec<Arc>,
) {
    // within one half, s in [-1, 1]: 1 + s0*s1 > 0 always
    let mut stack = vec![(piece.lo.clone(), piece.hi.clone())];
    let mut pending: Vec<(Rational, Rational)> = Vec::new();
    while let Some((lo, hi)) = stack.pop() {
        let num = &hi - &lo;
        let den = rat(1) + &lo * &hi;
        // den <= 0 only for spans of at least pi (e.g. the seam piece
        // [-1, 1]); those always get bisected
        if den.is_positive() && &num / &den <= *threshold {
            pending.push((lo, hi));
        } else {
            let mid = crate::algebra::midpoint(&lo, &hi);
            stack.push((mid.clone(), hi));
            stack.push((lo, mid));
        }
    }
    pending.sort_by(|a, b| a.0.cmp(&b.0));
    for (lo, hi) in pending {
        out.push(arc.piece_subarc(pi, lo, hi));
    }
}

fn split_planar_piece(
    arc: &Arc,
    pi: usize,
    piece: &ArcPiece,
    threshold: &Rational,
    out: &mut Vec<Arc>,
) {
    // break at inflection parameters (tangent-turn sign changes), then
    // bisect until the endpoint-tangent angle test passes
    let tn = piece.tangent_numerator();
    // in-plane turning: use the derivative of the tangent direction; the
    // cross product T x T' is normal to the plane, its magnitude sign
    // changes at inflections. Project on the plane normal by taking each
    // component; inflection roots are common roots of all three.
    let ddx = ddiff(&tn[0]);
    let ddy = ddiff(&tn[1]);
    let ddz = ddiff(&tn[2]);
    let cx = dsub(&dmul(&tn[1], &ddz), &dmul(&tn[2], &ddy));
    let cy = dsub(&dmul(&tn[2], &ddx), &dmul(&tn[0], &ddz));
    let cz = dsub(&dmul(&tn[0], &ddy), &dmul(&tn[1], &ddx));
    // cut points: roots of the squared magnitude (conservative superset)
    let mag = dadd(&dmul(&cx, &cx), &dadd(&dmul(&cy, &cy), &dmul(&cz, &cz)));
    let mut cuts: Vec<Rational> = vec![piece.lo.clone()];
    if !is_dense_zero(&mag) {
        let ip = IPoly::from_rational_coeffs(&mag);
        if !ip.is_zero() && ip.degree() > 0 {
            for (root, _) in isolate_ipoly_roots(&ip) {
                let inside = root.cmp_exact(&Scalar::Rat(piece.lo.clone())) == core::cmp::Ordering::Greater
                    && root.cmp_exact(&Scalar::Rat(piece.hi.clone())) == core::cmp::Ordering::Less;
                if inside {
                    // a rational point strictly right of the root
                    let cut = root.rational_between(&Scalar::Rat(piece.hi.clone()));
                    cuts.push(cut);
                }
            }
        }
    }
    cuts.push(piece.hi.clone());
    cuts.sort();
    cuts.dedup();
    for w in cuts.windows(2) {
        split_convex_by_angle(arc, pi, piece, &w[0], &w[1], threshold, out);
    }
}

/// Bisect a convex piece until the tangents at the endpoints differ by at
/// most the angle bound: with unit-free vectors `d0`, `d1`, require
/// `d0 . d1 > 0` and `(d0 x d1)^2 <= threshold^2/(1+threshold^2) * ...`;
/// we use the exact test `|d0 x d1|^2 * (1) <= tan(max)^2 * (d0 . d1)^2`
/// with `tan(max) = 2 th / (1 - th^2)` built rationally from the
/// half-angle threshold.
fn split_convex_by_angle(
    arc: &Arc,
    pi: usize,
    piece: &ArcPiece,
    lo: &Rational,
    hi: &Rational,
    half_tan: &Rational,
    out: &mut Vec<Arc>,
) {
    let tan_full = rat(2) * half_tan / (rat(1) - half_tan * half_tan);
    let tan2 = &tan_full * &tan_full;
    let tn = piece.tangent_numerator();
    let dir_at = |s: &Rational| -> Point3 {
        Point3::new(
            eval_dense(&tn[0], s),
            eval_dense(&tn[1], s),
            eval_dense(&tn[2], s),
        )
    };
    let mut stack = vec![(lo.clone(), hi.clone())];
    let mut pending = Vec::new();
    while let Some((a, b)) = stack.pop() {
        let d0 = dir_at(&a);
        let d1 = dir_at(&b);
        let dot = d0.dot(&d1);
        let cross = d0.cross(&d1).norm2();
        let ok = dot.is_positive() && cross <= &tan2 * &dot * &dot;
        if ok {
            pending.push((a, b));
        } else {
            let m = crate::algebra::midpoint(&a, &b);
            stack.push((m.clone(), b));
            stack.push((a, m));
        }
    }
    pending.sort_by(|x, y| x.0.cmp(&y.0));
    for (a, b) in pending {
        out.push(arc.piece_subarc(pi, a, b));
    }
}

/// Planarity test: all points satisfy one linear relation. Checks the
/// rank of the coordinate curve against a plane through three samples.
pub fn arc_is_planar(arc: &Arc) -> bool {
    // collect the coefficient vectors of (px, py, pz, w); the arc is
    // planar iff some (a,b,c,d) has a px + b py + c pz + d w = 0
    let mut rows: Vec<[Rational; 4]> = Vec::new();
    for piece in &arc.pieces {
        let n = piece
            .px
            .len()
            .max(piece.py.len())
            .max(piece.pz.len())
            .max(piece.w.len());
        for i in 0..n {
            let g = |v: &[Rational]| v.get(i).cloned().unwrap_or_else(|| rat(0));
            rows.push([g(&piece.px), g(&piece.py), g(&piece.pz), g(&piece.w)]);
        }
    }
    // rank of the matrix must be <= 3
    rank4(&rows) <= 3
}

fn rank4(rows: &[[Rational; 4]]) -> usize {
    let mut m: Vec<[Rational; 4]> = rows.to_vec();
    let mut rank = 0;
    for col in 0..4 {
        let pivot = (rank..m.len()).find(|&r| !m[r][col].is_zero());
        let Some(p) = pivot else { continue };
        m.swap(rank, p);
        let pv = m[rank][col].clone();
        for r in 0..m.len() {
            if r != rank && !m[r][col].is_zero() {
                let f = &m[r][col] / &pv;
                for c in 0..4 {
                    m[r][c] = &m[r][c] - &f * &m[rank][c];
                }
            }
        }
        rank += 1;
        if rank == m.len() {
            break;
        }
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::midpoint;

    fn unit_triangle() -> Plate {
        Plate::triangle(
            Point3::from_i64(0, 0, 0),
            Point3::from_i64(1, 0, 0),
            Point3::from_i64(0, 1, 0),
        )
        .unwrap()
    }

    #[test]
    fn segment_plane_midpoint() {
        let arc = Arc::segment(Point3::from_i64(0, 0, -1), Point3::from_i64(0, 0, 1));
        let plane = Plane::new(rat(0), rat(0), rat(0));
        let ArcPlaneResult::Crossings(cs) = arc_plane_intersections(&arc, &plane) else {
            panic!("not contained");
        };
        assert_eq!(cs.len(), 1);
        assert!(cs[0].s.eq_exact(&Scalar::Rat(ratio(1, 2))));
        let p = arc.pieces[0].eval(&ratio(1, 2));
        assert_eq!(p, Point3::from_i64(0, 0, 0));
    }

    #[test]
    fn circular_arc_crosses_plane_twice() {
        // circle (cos t, 0, sin t), upper half t in [0, pi], plane z = 1/2
        let circle = Circle3 {
            center: Point3::from_i64(0, 0, 0),
            u: Point3::from_i64(1, 0, 0),
            v: Point3::from_i64(0, 0, 1),
            r2: rat(1),
        };
        // t in [0, pi]: xi in [0, 1] on primary half + xi in [-1, 0] flipped
        let a1 = Arc::circular(circle.clone(), false, rat(0), rat(1));
        let a2 = Arc::circular(circle.clone(), true, rat(-1), rat(0));
        let plane = Plane::new(rat(0), rat(0), ratio(1, 2));
        let mut count = 0;
        for arc in [&a1, &a2] {
            if let ArcPlaneResult::Crossings(cs) = arc_plane_intersections(arc, &plane) {
                for c in &cs {
                    // crossing point has z = 1/2: check x^2 + z^2 = 1 and z sign
                    let piece = &arc.pieces[c.piece];
                    let num = piece.plane_numerator(&plane);
                    assert_eq!(sign_dense_at(&num, &c.s), 0);
                    count += 1;
                }
            } else {
                panic!("not contained");
            }
        }
        assert_eq!(count, 2);
    }

    #[test]
    fn full_circle_in_plane_contained() {
        let circle = Circle3 {
            center: Point3::from_i64(0, 0, 0),
            u: Point3::from_i64(1, 0, 0),
            v: Point3::from_i64(0, 1, 0),
            r2: rat(1),
        };
        let arc = Arc::full_circle(circle);
        let plane = Plane::new(rat(0), rat(0), rat(0));
        assert!(matches!(arc_plane_intersections(&arc, &plane), ArcPlaneResult::Contained));
    }

    #[test]
    fn point_in_plate_examples() {
        let t = unit_triangle();
        let bary = Point3::new(ratio(1, 3), ratio(1, 3), rat(0));
        assert!(t.contains_coplanar(&bary).unwrap());
        // boundary convention: edge point counts
        let edge = Point3::new(ratio(1, 2), rat(0), rat(0));
        assert!(t.contains_coplanar(&edge).unwrap());
        let outside = Point3::new(rat(2), rat(2), rat(0));
        assert!(!t.contains_coplanar(&outside).unwrap());
        // off-plane rejected
        assert!(t.contains_coplanar(&Point3::from_i64(0, 0, 1)).is_err());
        // disk membership
        let d = Plate::disk(Plane::new(rat(0), rat(0), rat(0)), rat(0), rat(0), rat(2)).unwrap();
        assert!(d.contains_coplanar(&Point3::from_i64(1, 1, 0)).unwrap());
        assert!(!d.contains_coplanar(&Point3::from_i64(2, 2, 0)).unwrap());
    }

    #[test]
    fn frame_roundtrip_and_generic() {
        let f = Frame::sample(7, 0);
        let inv = f.inverse();
        let p = Point3::new(ratio(3, 7), rat(-2), ratio(5, 3));
        let q = inv.apply_point(&f.apply_point(&p));
        assert_eq!(p, q);
        // vertical triangle becomes non-vertical under a sampled rotation
        let vertical = [
            Point3::from_i64(0, 0, 0),
            Point3::from_i64(1, 0, 0),
            Point3::from_i64(0, 0, 1),
        ];
        let mut solved = false;
        for attempt in 0..8 {
            let f = Frame::sample(99, attempt);
            let imgs: Vec<Point3> = vertical.iter().map(|p| f.apply_point(p)).collect();
            if Plane::through(&imgs[0], &imgs[1], &imgs[2]).is_some() {
                solved = true;
                break;
            }
        }
        assert!(solved);
    }

    #[test]
    fn frame_preserves_incidences() {
        let f = Frame::sample(13, 1);
        let t = unit_triangle();
        let arc = Arc::segment(
            Point3::new(ratio(1, 4), ratio(1, 4), rat(-1)),
            Point3::new(ratio(1, 4), ratio(1, 4), rat(2)),
        );
        let ft = f.apply_plate(&t).unwrap();
        let fa = f.apply_arc(&arc);
        // crossing count is preserved
        let c0 = match arc_plane_intersections(&arc, &t.plane) {
            ArcPlaneResult::Crossings(cs) => cs
                .into_iter()
                .filter(|c| point_on_plate_at(&arc, c.piece, &c.s, &t))
                .count(),
            _ => usize::MAX,
        };
        let c1 = match arc_plane_intersections(&fa, &ft.plane) {
            ArcPlaneResult::Crossings(cs) => cs
                .into_iter()
                .filter(|c| point_on_plate_at(&fa, c.piece, &c.s, &ft))
                .count(),
            _ => usize::MAX,
        };
        assert_eq!(c0, 1);
        assert_eq!(c1, 1);
    }

    #[test]
    fn splitting_circular_arcs() {
        let circle = Circle3 {
            center: Point3::from_i64(0, 0, 0),
            u: Point3::from_i64(1, 0, 0),
            v: Point3::from_i64(0, 0, 1),
            r2: rat(1),
        };
        // full circle splits into pieces of <= 10 degrees: at least 36
        let full = Arc::full_circle(circle.clone());
        let parts = split_convex_small_turning(&full, 10).unwrap();
        assert!(parts.len() >= 36, "got {}", parts.len());
        // each part satisfies the exact tangent threshold
        let th = tan_half_threshold(10);
        for part in &parts {
            let p = &part.pieces[0];
            let num = &p.hi - &p.lo;
            let den = rat(1) + &p.lo * &p.hi;
            assert!(&num / &den <= th);
        }
        // segment returns itself
        let seg = Arc::segment(Point3::from_i64(0, 0, 0), Point3::from_i64(1, 1, 1));
        assert_eq!(split_convex_small_turning(&seg, 10).unwrap().len(), 1);
        // concatenation covers the original interval
        let a25 = Arc::circular(circle, false, rat(0), ratio(22, 100));
        let parts = split_convex_small_turning(&a25, 10).unwrap();
        assert!(parts.len() >= 3);
        assert_eq!(parts.first().unwrap().pieces[0].lo, rat(0));
        assert_eq!(parts.last().unwrap().pieces[0].hi, ratio(22, 100));
        for w in parts.windows(2) {
            assert_eq!(w[0].pieces[0].hi, w[1].pieces[0].lo);
        }
    }

    #[test]
    fn reversed_arc_swaps_endpoints() {
        let arc = Arc::segment(Point3::from_i64(0, 0, 0), Point3::from_i64(2, 4, 6));
        let rev = arc.reversed();
        let (s0, e0) = arc.endpoints();
        let (s1, e1) = rev.endpoints();
        assert_eq!(s0, e1);
        assert_eq!(e0, s1);
        // interior points reflect
        let p = arc.pieces[0].eval(&ratio(1, 4));
        let q = rev.pieces[0].eval(&ratio(3, 4));
        assert_eq!(p, q);
    }

    #[test]
    fn planarity_detection() {
        let circle = Circle3 {
            center: Point3::from_i64(0, 0, 1),
            u: Point3::from_i64(2, 0, 0),
            v: Point3::from_i64(0, 2, 0),
            r2: rat(4),
        };
        assert!(arc_is_planar(&Arc::full_circle(circle)));
        // a twisted cubic is not planar
        let tw = Arc::parametric(
            vec![rat(0), rat(1)],
            vec![rat(0), rat(0), rat(1)],
            vec![rat(0), rat(0), rat(0), rat(1)],
            vec![rat(1)],
            rat(0),
            rat(1),
        );
        assert!(!arc_is_planar(&tw));
    }

    #[test]
    fn tangency_flagged_with_even_multiplicity() {
        // parabola z = (s)^2 touching plane z=0 at s=0
        let arc = Arc::parametric(
            vec![rat(0), rat(1)],
            vec![rat(0)],
            vec![rat(0), rat(0), rat(1)],
            vec![rat(1)],
            rat(-1),
            rat(1),
        );
        let plane = Plane::new(rat(0), rat(0), rat(0));
        let ArcPlaneResult::Crossings(cs) = arc_plane_intersections(&arc, &plane) else {
            panic!()
        };
        assert_eq!(cs.len(), 1);
        assert!(cs[0].tangential);
        assert_eq!(cs[0].multiplicity, 2);
        let _ = midpoint(&rat(0), &rat(1));
    }
}
