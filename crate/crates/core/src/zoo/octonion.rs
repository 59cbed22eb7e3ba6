//! Split octonions and the 27-dimensional exceptional Jordan algebra.
//!
//! Octonions are built by Cayley-Dickson doubling of the Hamilton
//! quaternions over `Q`, `(a, b)(c, d) = (ac + conj(d) b, da + b conj(c))`,
//! with norm `n(a, b) = n(a) - n(b)`. The sign makes the algebra split, so
//! null elements are plentiful and rational.

use num_traits::Zero;

use crate::linalg::Scalar;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quaternion(pub [Scalar; 4]);

impl Quaternion {
    pub fn zero() -> Self {
        Quaternion(std::array::from_fn(|_| Scalar::zero()))
    }

    pub fn mul(&self, o: &Quaternion) -> Quaternion {
        let [a1, b1, c1, d1] = &self.0;
        let [a2, b2, c2, d2] = &o.0;
        Quaternion([
            a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
            a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
            a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
            a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
        ])
    }

    pub fn conj(&self) -> Quaternion {
        let [a, b, c, d] = &self.0;
        Quaternion([a.clone(), -b, -c, -d])
    }

    pub fn norm(&self) -> Scalar {
        self.0.iter().map(|x| x * x).sum()
    }

    pub fn add(&self, o: &Quaternion) -> Quaternion {
        Quaternion(std::array::from_fn(|i| &self.0[i] + &o.0[i]))
    }

    pub fn scale(&self, c: &Scalar) -> Quaternion {
        Quaternion(std::array::from_fn(|i| &self.0[i] * c))
    }
}

/// A split octonion stored as 8 rational coordinates `(a, b)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Octonion(pub Quaternion, pub Quaternion);

impl Octonion {
    pub fn zero() -> Self {
        Octonion(Quaternion::zero(), Quaternion::zero())
    }

    pub fn from_slice(x: &[Scalar]) -> Self {
        assert_eq!(x.len(), 8);
        Octonion(
            Quaternion(std::array::from_fn(|i| x[i].clone())),
            Quaternion(std::array::from_fn(|i| x[4 + i].clone())),
        )
    }

    pub fn coords(&self) -> Vec<Scalar> {
        self.0 .0.iter().chain(self.1 .0.iter()).cloned().collect()
    }

    pub fn mul(&self, o: &Octonion) -> Octonion {
        let (a, b) = (&self.0, &self.1);
        let (c, d) = (&o.0, &o.1);
        Octonion(a.mul(c).add(&d.conj().mul(b)), d.mul(a).add(&b.mul(&c.conj())))
    }

    pub fn conj(&self) -> Octonion {
        Octonion(self.0.conj(), self.1.scale(&-Scalar::from_integer(1.into())))
    }

    pub fn norm(&self) -> Scalar {
        self.0.norm() - self.1.norm()
    }

    pub fn add(&self, o: &Octonion) -> Octonion {
        Octonion(self.0.add(&o.0), self.1.add(&o.1))
    }

    pub fn sub(&self, o: &Octonion) -> Octonion {
        self.add(&o.scale(&-Scalar::from_integer(1.into())))
    }

    pub fn scale(&self, c: &Scalar) -> Octonion {
        Octonion(self.0.scale(c), self.1.scale(c))
    }
}

/// A Hermitian 3x3 octonionic matrix
/// `[[a1, c3, conj(c2)], [conj(c3), a2, c1], [c2, conj(c1), a3]]`,
/// flattened as `(a1, a2, a3, c1, c2, c3)` into 27 coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Hermitian {
    pub a: [Scalar; 3],
    pub c: [Octonion; 3],
}

impl Hermitian {
    pub fn from_coords(x: &[Scalar]) -> Self {
        assert_eq!(x.len(), 27);
        Hermitian {
            a: std::array::from_fn(|i| x[i].clone()),
            c: std::array::from_fn(|i| Octonion::from_slice(&x[3 + 8 * i..11 + 8 * i])),
        }
    }

    pub fn coords(&self) -> Vec<Scalar> {
        let mut v: Vec<Scalar> = self.a.to_vec();
        for c in &self.c {
            v.extend(c.coords());
        }
        v
    }

    /// The quadratic adjoint `X^#`; rank-one elements are exactly `X^# = 0`.
    pub fn sharp(&self) -> Hermitian {
        let [a1, a2, a3] = &self.a;
        let [c1, c2, c3] = &self.c;
        Hermitian {
            a: [a2 * a3 - c1.norm(), a3 * a1 - c2.norm(), a1 * a2 - c3.norm()],
            c: [
                c2.mul(c3).conj().sub(&c1.scale(a1)),
                c3.mul(c1).conj().sub(&c2.scale(a2)),
                c1.mul(c2).conj().sub(&c3.scale(a3)),
            ],
        }
    }
}
