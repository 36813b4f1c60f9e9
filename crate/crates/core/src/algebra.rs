//! Quaternion and octonion arithmetic.
//!
//! Quaternions are the scalar ring of every vector space in this crate
//! (complex numbers are the quaternions with vanishing `j` and `k` parts).
//! Octonions are built as Cayley–Dickson pairs of quaternions with the
//! product
//!
//! ```text
//! (q1, q2)(p1, p2) = (q1 p1 - conj(p2) q2,  p2 q1 + q2 conj(p1))
//! ```

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use crate::error::GeomError;

/// A real quaternion `w + x i + y j + z k`.
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct Quaternion {
    pub w: f64,
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl Quaternion {
    pub const ZERO: Quaternion = Quaternion::new(0.0, 0.0, 0.0, 0.0);
    pub const ONE: Quaternion = Quaternion::new(1.0, 0.0, 0.0, 0.0);
    pub const I: Quaternion = Quaternion::new(0.0, 1.0, 0.0, 0.0);
    pub const J: Quaternion = Quaternion::new(0.0, 0.0, 1.0, 0.0);
    pub const K: Quaternion = Quaternion::new(0.0, 0.0, 0.0, 1.0);

    pub const fn new(w: f64, x: f64, y: f64, z: f64) -> Self {
        Self { w, x, y, z }
    }

    pub const fn real(w: f64) -> Self {
        Self::new(w, 0.0, 0.0, 0.0)
    }

    /// `re + im i`, the embedding of the complex numbers.
    pub const fn complex(re: f64, im: f64) -> Self {
        Self::new(re, im, 0.0, 0.0)
    }

    pub fn re(self) -> f64 {
        self.w
    }

    pub fn im(self) -> Quaternion {
        Self::new(0.0, self.x, self.y, self.z)
    }

    pub fn conj(self) -> Self {
        Self::new(self.w, -self.x, -self.y, -self.z)
    }

    pub fn norm_sqr(self) -> f64 {
        self.w * self.w + self.x * self.x + self.y * self.y + self.z * self.z
    }

    pub fn norm(self) -> f64 {
        // hypot-style scaling keeps tiny and huge entries finite
        let m = self.w.abs().max(self.x.abs()).max(self.y.abs()).max(self.z.abs());
        if m == 0.0 || !m.is_finite() {
            return m;
        }
        let s = self.scale(1.0 / m);
        m * s.norm_sqr().sqrt()
    }

    /// Norm of the imaginary part.
    pub fn im_norm(self) -> f64 {
        self.im().norm()
    }

    pub fn scale(self, s: f64) -> Self {
        Self::new(self.w * s, self.x * s, self.y * s, self.z * s)
    }

    /// Multiplicative inverse `conj(q) / |q|^2`.
    pub fn inv(self) -> Self {
        self.conj().scale(1.0 / self.norm_sqr())
    }

    /// Unit quaternion in the direction of `self`.
    pub fn normalize(self) -> Self {
        self.scale(1.0 / self.norm())
    }

    pub fn is_zero(self) -> bool {
        self.w == 0.0 && self.x == 0.0 && self.y == 0.0 && self.z == 0.0
    }

    /// Coefficients as an `R^4` vector `[w, x, y, z]`.
    pub fn to_array(self) -> [f64; 4] {
        [self.w, self.x, self.y, self.z]
    }

    pub fn from_array(a: [f64; 4]) -> Self {
        Self::new(a[0], a[1], a[2], a[3])
    }

    /// Euclidean inner product of the coefficient vectors, `Re(self * conj(other))`.
    pub fn dot(self, other: Self) -> f64 {
        self.w * other.w + self.x * other.x + self.y * other.y + self.z * other.z
    }

    /// Largest absolute coefficient difference.
    pub fn max_abs_diff(self, other: Self) -> f64 {
        let d = self - other;
        d.w.abs().max(d.x.abs()).max(d.y.abs()).max(d.z.abs())
    }
}

/// Hamilton product.
pub fn q_mul(a: Quaternion, b: Quaternion) -> Quaternion {
    Quaternion::new(
        a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
        a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
        a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
        a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w,
    )
}

impl Add for Quaternion {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self::new(self.w + rhs.w, self.x + rhs.x, self.y + rhs.y, self.z + rhs.z)
    }
}

impl AddAssign for Quaternion {
    fn add_assign(&mut self, rhs: Self) {
        *self = *self + rhs;
    }
}

impl Sub for Quaternion {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Self::new(self.w - rhs.w, self.x - rhs.x, self.y - rhs.y, self.z - rhs.z)
    }
}

impl SubAssign for Quaternion {
    fn sub_assign(&mut self, rhs: Self) {
        *self = *self - rhs;
    }
}

impl Neg for Quaternion {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(-self.w, -self.x, -self.y, -self.z)
    }
}

impl Mul for Quaternion {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        q_mul(self, rhs)
    }
}

impl Mul<f64> for Quaternion {
    type Output = Self;
    fn mul(self, rhs: f64) -> Self {
        self.scale(rhs)
    }
}

impl Mul<Quaternion> for f64 {
    type Output = Quaternion;
    fn mul(self, rhs: Quaternion) -> Quaternion {
        rhs.scale(self)
    }
}

impl Div<f64> for Quaternion {
    type Output = Self;
    fn div(self, rhs: f64) -> Self {
        self.scale(1.0 / rhs)
    }
}

impl From<f64> for Quaternion {
    fn from(w: f64) -> Self {
        Self::real(w)
    }
}

impl fmt::Display for Quaternion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.w)?;
        for (c, unit) in [(self.x, "i"), (self.y, "j"), (self.z, "k")] {
            if c != 0.0 {
                if c < 0.0 {
                    write!(f, "-{}{}", -c, unit)?;
                } else {
                    write!(f, "+{}{}", c, unit)?;
                }
            }
        }
        Ok(())
    }
}

/// Parses literals such as `-2+2i`, `0.3+0.1j-0.2k`, `k`, `1e-3-i`.
impl FromStr for Quaternion {
    type Err = GeomError;

    fn from_str(s: &str) -> Result<Self, GeomError> {
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if s.is_empty() {
            return Err(GeomError::Parse("empty quaternion literal".into()));
        }
        let bad = || GeomError::Parse(format!("malformed quaternion literal '{s}'"));
        // split into signed terms, keeping exponent signs attached
        let bytes = s.as_bytes();
        let mut terms = Vec::new();
        let mut start = 0;
        for i in 1..bytes.len() {
            let c = bytes[i];
            if (c == b'+' || c == b'-') && !matches!(bytes[i - 1], b'e' | b'E') {
                terms.push(&s[start..i]);
                start = i;
            }
        }
        terms.push(&s[start..]);
        let mut q = Quaternion::ZERO;
        let mut seen = [false; 4];
        for t in terms {
            let (body, slot) = match t.chars().last() {
                Some('i') => (&t[..t.len() - 1], 1),
                Some('j') => (&t[..t.len() - 1], 2),
                Some('k') => (&t[..t.len() - 1], 3),
                _ => (t, 0),
            };
            let v = match body {
                "" | "+" if slot > 0 => 1.0,
                "-" if slot > 0 => -1.0,
                _ => body.parse::<f64>().map_err(|_| bad())?,
            };
            if seen[slot] || !v.is_finite() {
                return Err(bad());
            }
            seen[slot] = true;
            match slot {
                0 => q.w = v,
                1 => q.x = v,
                2 => q.y = v,
                _ => q.z = v,
            }
        }
        Ok(q)
    }
}

/// A unit, purely imaginary quaternion used as a rotation axis.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ImaginaryDirection(Quaternion);

impl ImaginaryDirection {
    pub const I: ImaginaryDirection = ImaginaryDirection(Quaternion::I);
    pub const J: ImaginaryDirection = ImaginaryDirection(Quaternion::J);
    pub const K: ImaginaryDirection = ImaginaryDirection(Quaternion::K);

    /// Normalizes the imaginary part of `q`. Fails if `q` has (numerically)
    /// no imaginary part.
    pub fn new(q: Quaternion) -> Result<Self, GeomError> {
        let im = q.im();
        let n = im.norm();
        if n < 1e-14 {
            return Err(GeomError::Domain("rotation axis must have a nonzero imaginary part"));
        }
        Ok(Self(im.scale(1.0 / n)))
    }

    pub fn quaternion(self) -> Quaternion {
        self.0
    }
}

/// Unit quaternion `cos(eta) + sin(eta) axis`.
///
/// Left multiplication by this element turns the real line of `H` by the
/// angle `eta`; conjugation `v -> conj(nu) v nu` turns the plane orthogonal to
/// `axis` inside `Im H` by `2 eta`.
pub fn unit_rotation(axis: ImaginaryDirection, eta: f64) -> Quaternion {
    Quaternion::real(eta.cos()) + axis.0.scale(eta.sin())
}

/// Angle in `[0, pi/2]` between `q` (as a vector of `R^4`) and the real line.
///
/// Equals `arccos(|Re q| / |q|)`; computed through `atan2` so that angles
/// close to `0` and `pi/2` keep full precision.
pub fn line_angle(q: Quaternion) -> Result<f64, GeomError> {
    if q.norm() == 0.0 {
        return Err(GeomError::Domain("angle to the real line of a zero quaternion"));
    }
    Ok(q.im_norm().atan2(q.re().abs()))
}

/// A Cayley–Dickson pair `(a, b)` of quaternions.
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct Octonion {
    pub a: Quaternion,
    pub b: Quaternion,
}

impl Octonion {
    pub const ZERO: Octonion = Octonion::new(Quaternion::ZERO, Quaternion::ZERO);
    pub const ONE: Octonion = Octonion::new(Quaternion::ONE, Quaternion::ZERO);

    pub const fn new(a: Quaternion, b: Quaternion) -> Self {
        Self { a, b }
    }

    pub fn real(r: f64) -> Self {
        Self::new(Quaternion::real(r), Quaternion::ZERO)
    }

    /// Basis element `e_k`, `k` in `0..8`: `e_0 .. e_3` are `1, i, j, k` in
    /// the first slot and `e_4 .. e_7` the same in the second.
    pub fn basis(k: usize) -> Self {
        let mut c = [0.0; 8];
        c[k] = 1.0;
        Self::from_array(c)
    }

    pub fn from_array(c: [f64; 8]) -> Self {
        Self::new(
            Quaternion::new(c[0], c[1], c[2], c[3]),
            Quaternion::new(c[4], c[5], c[6], c[7]),
        )
    }

    pub fn to_array(self) -> [f64; 8] {
        let a = self.a.to_array();
        let b = self.b.to_array();
        [a[0], a[1], a[2], a[3], b[0], b[1], b[2], b[3]]
    }

    pub fn re(self) -> f64 {
        self.a.w
    }

    pub fn im(self) -> Octonion {
        Self::new(self.a.im(), self.b)
    }

    pub fn norm_sqr(self) -> f64 {
        self.a.norm_sqr() + self.b.norm_sqr()
    }

    pub fn norm(self) -> f64 {
        self.norm_sqr().sqrt()
    }

    pub fn im_norm(self) -> f64 {
        self.im().norm()
    }

    pub fn scale(self, s: f64) -> Self {
        Self::new(self.a.scale(s), self.b.scale(s))
    }

    pub fn inv(self) -> Self {
        o_conj(self).scale(1.0 / self.norm_sqr())
    }
}

/// Octonion product of Cayley–Dickson pairs.
pub fn o_mul(x: Octonion, y: Octonion) -> Octonion {
    let (q1, q2) = (x.a, x.b);
    let (p1, p2) = (y.a, y.b);
    Octonion::new(q1 * p1 - p2.conj() * q2, p2 * q1 + q2 * p1.conj())
}

/// Octonion conjugation `(q1, q2) -> (conj(q1), -q2)`.
pub fn o_conj(x: Octonion) -> Octonion {
    Octonion::new(x.a.conj(), -x.b)
}

/// Associator `(xy)z - x(yz)`.
pub fn associator(x: Octonion, y: Octonion, z: Octonion) -> Octonion {
    o_mul(o_mul(x, y), z) - o_mul(x, o_mul(y, z))
}

impl Add for Octonion {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self::new(self.a + rhs.a, self.b + rhs.b)
    }
}

impl Sub for Octonion {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Self::new(self.a - rhs.a, self.b - rhs.b)
    }
}

impl Neg for Octonion {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(-self.a, -self.b)
    }
}

impl Mul for Octonion {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        o_mul(self, rhs)
    }
}
